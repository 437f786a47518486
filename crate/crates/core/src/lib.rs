//! Exact-arithmetic engine for finite-dimensional Jordan algebras and
//! Jordan coalgebras.
//!
//! Everything is driven by structure constants over an exact field (the
//! rationals or a prime field 𝔽_p, p ≥ 5). The main pipeline:
//!
//! * [`algebra`] — algebras as order-3 structure-constant tensors, identity
//!   checking, derivations and inner derivations;
//! * [`coalgebra`] — coalgebras, dualization in both directions, bimodule
//!   actions, subcoalgebras and coideals;
//! * [`kkt`] — the Kantor-Koecher-Tits Lie algebra `L(J) = J ⊕ R(J) ⊕ J̄`
//!   of a unital Jordan algebra;
//! * [`liecoalg`] — the dual-side space `L(A) = A ⊕ A′ ⊕ [A*,A] ⊕ Ā`, its
//!   pairing with `L(A*)`, and the Lie comultiplication obtained by
//!   transposing the bracket (globally and locally on subcoalgebras);
//! * [`correspondence`] — the lattice maps between subalgebras/ideals of
//!   `L(A*)` and coideals/subcoalgebras of `⟨L(A), Δ_L⟩`;
//! * [`zoo`] — deterministic generators for the test algebras;
//! * [`cli`] — the `kkt` command-line front end.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here can be used from multiple threads.

pub mod algebra;
pub mod cli;
pub mod coalgebra;
pub mod correspondence;
pub mod error;
pub mod io;
pub mod kkt;
pub mod liecoalg;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod subspace;
pub mod zoo;

pub use algebra::{FiniteAlgebra, OperatorSpace};
pub use coalgebra::FiniteCoalgebra;
pub use correspondence::LatticeContext;
pub use error::{Error, Result};
pub use kkt::KktAlgebra;
pub use liecoalg::LSpace;
pub use matrix::{Matrix, Tensor3};
pub use report::{Clause, Report};
pub use scalar::{FieldKind, Scalar};
pub use subspace::Subspace;
