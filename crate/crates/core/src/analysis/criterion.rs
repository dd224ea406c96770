use crate::analysis::modular::{modular_flats_of_rank, ModularityVerdict};
use crate::analysis::supersolvable::{supersolvable_in, SupersolvabilityCertificate};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::lattice::{build_lattice_limited, IntersectionLattice};

/// Both sides of "supersolvable ⇔ some rank-2 flat is modular" for an
/// irreducible arrangement, with the evidence for each.
#[derive(Clone, Debug)]
pub struct Rank2Report {
    pub supersolvable: bool,
    pub has_modular_rank2: bool,
    pub certificate: SupersolvabilityCertificate,
    pub rank2: Vec<ModularityVerdict>,
}

impl Rank2Report {
    pub fn agrees(&self) -> bool {
        self.supersolvable == self.has_modular_rank2
    }
}

pub fn check_rank2_criterion(arr: &Arrangement) -> Result<Rank2Report> {
    check_rank2_criterion_limited(arr, usize::MAX)
}

pub fn check_rank2_criterion_limited(arr: &Arrangement, max_flats: usize) -> Result<Rank2Report> {
    let factors = arr.irreducible_decomposition();
    if factors.len() != 1 {
        return Err(Error::Refused(format!(
            "arrangement is reducible ({} factors); a product of a supersolvable and a \
             non-supersolvable arrangement has modular elements of every rank",
            factors.len()
        )));
    }
    let essential = factors.into_iter().next().unwrap();
    let lattice = build_lattice_limited(&essential, max_flats)?;
    check_rank2_criterion_in(&lattice)
}

/// The criterion on a prebuilt lattice of an irreducible arrangement.
pub fn check_rank2_criterion_in(lattice: &IntersectionLattice) -> Result<Rank2Report> {
    if lattice.rank() < 2 {
        return Err(Error::Refused(format!("rank {} < 2", lattice.rank())));
    }
    let rank2 = modular_flats_of_rank(lattice, 2)?;
    let has_modular_rank2 = rank2.iter().any(|v| v.modular);
    let certificate = supersolvable_in(lattice)?;
    Ok(Rank2Report { supersolvable: certificate.supersolvable, has_modular_rank2, certificate, rank2 })
}
