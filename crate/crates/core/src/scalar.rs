//! Exact field elements: arbitrary-precision rationals or residues mod a
//! prime p ≥ 5.
//!
//! Characteristic 2 is excluded by the Jordan axioms; characteristic 3 is
//! excluded because the Jordan identity is verified through its full
//! linearization, which is only equivalent to the identity when 3! is
//! invertible.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Field descriptor attached to every container of scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl FieldKind {
    /// Parse "rational" or "prime:p".
    pub fn parse(s: &str) -> Result<FieldKind> {
        if s == "rational" {
            return Ok(FieldKind::Rational);
        }
        if let Some(p) = s.strip_prefix("prime:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad prime modulus {p:?}")))?;
            let kind = FieldKind::Prime(p);
            kind.validate()?;
            return Ok(kind);
        }
        Err(Error::InvalidField(format!(
            "expected \"rational\" or \"prime:p\", got {s:?}"
        )))
    }

    /// Characteristic 0 or a prime p ≥ 5.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldKind::Rational => Ok(()),
            FieldKind::Prime(p) => {
                if p < 5 {
                    return Err(Error::InvalidField(format!(
                        "modulus {p} too small: characteristic must be 0 or at least 5"
                    )));
                }
                if !is_prime(p) {
                    return Err(Error::InvalidField(format!("modulus {p} is not prime")));
                }
                Ok(())
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            FieldKind::Rational => Scalar::Q(BigRational::zero()),
            FieldKind::Prime(p) => Scalar::Fp { v: 0, p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldKind::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldKind::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { v: r, p }
            }
        }
    }

    /// n/d as a field element; d must be invertible.
    pub fn fraction(&self, n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        let num = self.from_i64(n);
        let den = self.from_i64(d);
        num.mul(&den.inv().expect("denominator not invertible in this field"))
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (invariant of `BigRational`); prime-field values as canonical
/// residues 0 ≤ v < p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Q(_) => FieldKind::Rational,
            Scalar::Fp { p, .. } => FieldKind::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { v: (a + b) % p, p: *p }
            }
            _ => panic!("mixed scalar fields"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p: *p },
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp {
                    v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("mixed scalar fields"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(a.recip()))
                }
            }
            Scalar::Fp { v, p } => {
                if *v == 0 {
                    None
                } else {
                    Some(Scalar::Fp { v: mod_inv(*v, *p), p: *p })
                }
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv().expect("division by zero"))
    }

    /// Parse "a", "a/b" (lowest terms enforced on output, any input accepted)
    /// or a canonical residue "r".
    pub fn parse(s: &str, kind: FieldKind) -> Result<Scalar> {
        let s = s.trim();
        match kind {
            FieldKind::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Q(BigRational::new(num, den)))
            }
            FieldKind::Prime(p) => {
                let v: u64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad residue {s:?}")))?;
                if v >= p {
                    return Err(Error::Parse(format!(
                        "residue {v} out of range for modulus {p}"
                    )));
                }
                Ok(Scalar::Fp { v, p })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normal_form() {
        let a = Scalar::parse("2/4", FieldKind::Rational).unwrap();
        assert_eq!(a.to_string(), "1/2");
        let b = Scalar::parse("-3/-6", FieldKind::Rational).unwrap();
        assert_eq!(b.to_string(), "1/2");
        let c = Scalar::parse("3/-6", FieldKind::Rational).unwrap();
        assert_eq!(c.to_string(), "-1/2");
        assert_eq!(a, b);
    }

    #[test]
    fn prime_field_arithmetic() {
        let k = FieldKind::Prime(5);
        let two = k.from_i64(2);
        let three = k.from_i64(3);
        assert!(two.add(&three).is_zero());
        assert_eq!(two.mul(&three), k.from_i64(1));
        assert_eq!(three.inv().unwrap(), two); // 3*2 = 6 = 1 mod 5
        assert_eq!(k.from_i64(-1), k.from_i64(4));
    }

    #[test]
    fn field_validation() {
        assert!(FieldKind::Prime(5).validate().is_ok());
        assert!(FieldKind::Prime(2).validate().is_err());
        assert!(FieldKind::Prime(3).validate().is_err());
        assert!(FieldKind::Prime(9).validate().is_err());
        assert!(FieldKind::parse("prime:7").is_ok());
        assert!(FieldKind::parse("prime:4").is_err());
        assert!(FieldKind::parse("real").is_err());
    }

    #[test]
    fn residue_parse_bounds() {
        assert!(Scalar::parse("4", FieldKind::Prime(5)).is_ok());
        assert!(Scalar::parse("5", FieldKind::Prime(5)).is_err());
    }
}
