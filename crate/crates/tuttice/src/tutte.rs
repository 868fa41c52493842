//! Interchangeable strategies for computing the Tutte polynomial of a
//! matroid, registered by name and selectable at runtime. All strategies
//! agree on every matroid; that agreement is itself one of the verified
//! identities.

use crate::activity::tutte_from_activities;
use crate::core::Polymatroid;
use crate::error::Result;
use crate::poly::{qprime, tutte_corank_nullity, tutte_from_qprime, BivarPoly};

/// One way of computing the Tutte polynomial.
pub trait TutteStrategy {
    /// Registry key, also the CLI `--method` value.
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn compute(&self, m: &Polymatroid) -> Result<BivarPoly>;
}

/// Corank-nullity sum over all subsets.
struct CorankNullity;

impl TutteStrategy for CorankNullity {
    fn name(&self) -> &'static str {
        "corank-nullity"
    }

    fn description(&self) -> &'static str {
        "sum of (x-1)^corank (y-1)^nullity over all subsets"
    }

    fn compute(&self, m: &Polymatroid) -> Result<BivarPoly> {
        tutte_corank_nullity(m)
    }
}

/// Lattice-point route: count the Minkowski sums, interpolate, convert.
struct LatticePoints;

impl TutteStrategy for LatticePoints {
    fn name(&self) -> &'static str {
        "lattice"
    }

    fn description(&self) -> &'static str {
        "lattice-point counts of the simplex Minkowski sums, interpolated and converted"
    }

    fn compute(&self, m: &Polymatroid) -> Result<BivarPoly> {
        if !m.is_matroid() {
            return Err(crate::error::Error::NotAMatroid);
        }
        let q = qprime(m)?;
        tutte_from_qprime(m.n(), m.full_rank(), &q)
    }
}

/// Basis-activity generating function.
struct Activities;

impl TutteStrategy for Activities {
    fn name(&self) -> &'static str {
        "activity"
    }

    fn description(&self) -> &'static str {
        "sum of x^(internal activity) y^(external activity) over bases"
    }

    fn compute(&self, m: &Polymatroid) -> Result<BivarPoly> {
        tutte_from_activities(m)
    }
}

/// The default strategy used when none is requested.
pub const DEFAULT_STRATEGY: &str = "lattice";

/// Every registered strategy.
pub fn strategies() -> Vec<Box<dyn TutteStrategy>> {
    vec![Box::new(LatticePoints), Box::new(CorankNullity), Box::new(Activities)]
}

/// Look a strategy up by its registry name.
pub fn strategy(name: &str) -> Option<Box<dyn TutteStrategy>> {
    strategies().into_iter().find(|s| s.name() == name)
}
