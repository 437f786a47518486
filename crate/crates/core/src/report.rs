//! Line-oriented verification reports.
//!
//! Every verification suite emits one line per asserted clause in the form
//! `CLAUSE <name> PASS|FAIL [witness]`, which keeps reports diffable and
//! suitable for golden-file testing.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.clauses.push(Clause {
            name: name.into(),
            pass: true,
            witness: None,
        });
    }

    pub fn pass_with(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.clauses.push(Clause {
            name: name.into(),
            pass: true,
            witness: Some(witness.into()),
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.clauses.push(Clause {
            name: name.into(),
            pass: false,
            witness: Some(witness.into()),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness_on_fail: impl Into<String>) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness_on_fail);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Clause> {
        self.clauses.iter().filter(|c| !c.pass).collect()
    }

    pub fn merge(&mut self, other: Report) {
        self.clauses.extend(other.clauses);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            let status = if c.pass { "PASS" } else { "FAIL" };
            match &c.witness {
                Some(w) => writeln!(f, "CLAUSE {} {} {}", c.name, status, w)?,
                None => writeln!(f, "CLAUSE {} {}", c.name, status)?,
            }
        }
        Ok(())
    }
}
