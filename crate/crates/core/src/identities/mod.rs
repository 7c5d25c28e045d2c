//! Verifiers for the Schur function and determinant identities, each
//! comparing two independently computed polynomials exactly.

mod audit;
mod ciucu;
mod dodgson;
mod general;
mod kleber;
mod orbit;
mod pluecker;

pub use audit::{bijection_audit, classify_object, AuditClass, AuditReport};
pub use ciucu::verify_ciucu;
pub use dodgson::{dodgson_specialisation, verify_dodgson};
pub use general::{verify_general, verify_kirillov};
pub use kleber::{kleber_terms, verify_kleber, KleberTerm};
pub use orbit::{explore_orbit, OrbitResult, Quadruple};
pub use pluecker::{verify_pluecker, PlueckerMode};

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::polyring::{Monomial, Polynomial};

/// The first monomial, in descending term order, where two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Value,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub equal: bool,
    pub witness: Option<Witness>,
    pub elapsed_ms: u128,
    /// Identity-specific extras, such as the surviving summands.
    pub details: Option<Value>,
}

impl IdentityReport {
    pub(crate) fn compare(identity: &str, params: Value, lhs: Polynomial, rhs: Polynomial, started: Instant) -> Self {
        let witness = lhs.first_difference(&rhs).map(|m: Monomial| Witness {
            monomial: lhs.render_monomial(&m),
            lhs: lhs.coefficient(&m).to_string(),
            rhs: rhs.coefficient(&m).to_string(),
        });
        IdentityReport {
            identity: identity.to_string(),
            params,
            equal: witness.is_none() && lhs == rhs,
            lhs,
            rhs,
            witness,
            elapsed_ms: started.elapsed().as_millis(),
            details: None,
        }
    }

    pub(crate) fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn lhs_terms(&self) -> usize {
        self.lhs.term_count()
    }

    pub fn rhs_terms(&self) -> usize {
        self.rhs.term_count()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "identity": self.identity,
            "params": self.params,
            "equal": self.equal,
            "lhs_terms": self.lhs_terms(),
            "rhs_terms": self.rhs_terms(),
            "elapsed_ms": self.elapsed_ms,
        });
        if let Some(w) = &self.witness {
            v["witness"] = json!(w);
        }
        if let Some(d) = &self.details {
            v["details"] = d.clone();
        }
        v
    }
}

/// Sum of polynomials over one alphabet.
pub(crate) fn sum(alphabet: crate::polyring::Alphabet, it: impl IntoIterator<Item = Polynomial>) -> Polynomial {
    it.into_iter().fold(Polynomial::zero(alphabet), |acc, p| &acc + &p)
}
