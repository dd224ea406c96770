use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{Flat, IntersectionLattice};
use crate::linalg::Subspace;

/// A flat Y with X + Y ∉ L(A), together with that sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub other: Flat,
    pub sum: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularityVerdict {
    pub flat: Flat,
    pub modular: bool,
    pub witness: Option<Witness>,
}

impl ModularityVerdict {
    /// Re-checks the witness from scratch with `subspace_sum` and `closure`.
    pub fn witness_holds(&self, lattice: &IntersectionLattice) -> bool {
        match &self.witness {
            None => self.modular,
            Some(w) => {
                let sum = self.flat.subspace().sum(w.other.subspace());
                matches!(sum, Ok(s) if s == w.sum && !lattice.contains_subspace(&s))
            }
        }
    }
}

/// Whether X + Y is again a flat.
///
/// A hyperplane contains X + Y iff it contains both X and Y, so the closure
/// of the sum has support A_X ∩ A_Y; the sum is a flat iff it has the same
/// codimension as that closure.
pub fn sum_is_flat(lattice: &IntersectionLattice, x: &Flat, y: &Flat) -> Result<bool> {
    if x.le(y) || y.le(x) {
        return Ok(true);
    }
    let meet = x.support().intersection(y.support());
    let Some(id) = lattice.id_of_support(&meet) else {
        return Err(Error::Inconsistent("intersection of supports is not a flat".into()));
    };
    Ok(x.subspace().sum_codim(y.subspace()) == lattice.flat(id).rank())
}

/// Scans every Y ∈ L(A) in lattice order and stops at the first Y with
/// X + Y ∉ L(A).
pub fn is_modular(lattice: &IntersectionLattice, x: &Flat) -> Result<ModularityVerdict> {
    lattice.locate(x)?;
    for y in lattice.flats() {
        if !sum_is_flat(lattice, x, y)? {
            let sum = x.subspace().sum(y.subspace())?;
            if lattice.contains_subspace(&sum) {
                return Err(Error::Inconsistent("rank test and closure disagree on X + Y".into()));
            }
            return Ok(ModularityVerdict {
                flat: x.clone(),
                modular: false,
                witness: Some(Witness { other: y.clone(), sum }),
            });
        }
    }
    Ok(ModularityVerdict { flat: x.clone(), modular: true, witness: None })
}

/// Verdicts for every flat of rank `rank`, in lattice order.
pub fn modular_flats_of_rank(lattice: &IntersectionLattice, rank: usize) -> Result<Vec<ModularityVerdict>> {
    if rank > lattice.rank() {
        return Err(Error::RankOutOfRange { rank, max: lattice.rank() });
    }
    lattice.level(rank).par_iter().map(|x| is_modular(lattice, x)).collect()
}
