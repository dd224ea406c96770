use crate::analysis::modular::{is_modular, modular_flats_of_rank, ModularityVerdict};
use crate::arrangement::Arrangement;
use crate::error::Result;
use crate::lattice::{build_lattice_limited, Flat, IntersectionLattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// No flat of this rank is modular; one failing verdict per flat.
    NoModularFlat { rank: usize, verdicts: Vec<ModularityVerdict> },
    /// Every rank has modular flats but no saturated chain of them exists.
    NoChain { modular: Vec<Vec<Flat>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersolvabilityCertificate {
    pub supersolvable: bool,
    /// The input was not essential and was replaced by its essentialization;
    /// all flats below refer to `arrangement`.
    pub essentialized: bool,
    pub arrangement: Arrangement,
    /// V = X_0 < X_1 < … < X_r = T(A), each modular.
    pub chain: Option<Vec<Flat>>,
    pub refutation: Option<Refutation>,
}

impl SupersolvabilityCertificate {
    /// Re-validates every claim independently of how it was found.
    pub fn recheck(&self, lattice: &IntersectionLattice) -> Result<bool> {
        if let Some(chain) = &self.chain {
            let r = lattice.rank();
            if chain.len() != r + 1 {
                return Ok(false);
            }
            for (k, x) in chain.iter().enumerate() {
                if x.rank() != k || (k > 0 && !chain[k - 1].le(x)) {
                    return Ok(false);
                }
                if !is_modular(lattice, x)?.modular {
                    return Ok(false);
                }
            }
        }
        match &self.refutation {
            Some(Refutation::NoModularFlat { rank, verdicts }) => {
                if verdicts.len() != lattice.level(*rank).len() {
                    return Ok(false);
                }
                for v in verdicts {
                    if v.modular || v.flat.rank() != *rank || !v.witness_holds(lattice) {
                        return Ok(false);
                    }
                }
            }
            Some(Refutation::NoChain { modular }) if find_chain(modular).is_some() => return Ok(false),
            Some(Refutation::NoChain { .. }) | None => {}
        }
        Ok(self.supersolvable == self.chain.is_some() && self.supersolvable != self.refutation.is_some())
    }
}

pub fn is_supersolvable(arr: &Arrangement) -> Result<SupersolvabilityCertificate> {
    is_supersolvable_limited(arr, usize::MAX)
}

/// Essentializes non-essential input, builds the lattice (bounded by
/// `max_flats`) and searches for a modular maximal chain.
pub fn is_supersolvable_limited(arr: &Arrangement, max_flats: usize) -> Result<SupersolvabilityCertificate> {
    let essentialized = !arr.is_essential();
    let arr = if essentialized { arr.essentialize() } else { arr.clone() };
    let lattice = build_lattice_limited(&arr, max_flats)?;
    let mut cert = supersolvable_in(&lattice)?;
    cert.essentialized = essentialized;
    Ok(cert)
}

/// Certificate for the lattice as given. Rank ≤ 2 lattices get the chain
/// V < H < T(A) without a scan.
pub fn supersolvable_in(lattice: &IntersectionLattice) -> Result<SupersolvabilityCertificate> {
    let arrangement = lattice.arrangement().clone();
    let r = lattice.rank();
    if r <= 2 {
        let mut chain = vec![lattice.bottom().clone()];
        if r >= 1 {
            let first = lattice.level(1).iter().find(|h| h.le(lattice.top())).unwrap();
            chain.push(first.clone());
        }
        if r == 2 {
            chain.push(lattice.top().clone());
        }
        return Ok(SupersolvabilityCertificate {
            supersolvable: true,
            essentialized: false,
            arrangement,
            chain: Some(chain),
            refutation: None,
        });
    }

    let mut modular: Vec<Vec<Flat>> = Vec::with_capacity(r + 1);
    for rank in 0..=r {
        let verdicts = modular_flats_of_rank(lattice, rank)?;
        if verdicts.iter().all(|v| !v.modular) {
            return Ok(SupersolvabilityCertificate {
                supersolvable: false,
                essentialized: false,
                arrangement,
                chain: None,
                refutation: Some(Refutation::NoModularFlat { rank, verdicts }),
            });
        }
        modular.push(verdicts.into_iter().filter(|v| v.modular).map(|v| v.flat).collect());
    }

    Ok(match find_chain(&modular) {
        Some(chain) => SupersolvabilityCertificate {
            supersolvable: true,
            essentialized: false,
            arrangement,
            chain: Some(chain),
            refutation: None,
        },
        None => SupersolvabilityCertificate {
            supersolvable: false,
            essentialized: false,
            arrangement,
            chain: None,
            refutation: Some(Refutation::NoChain { modular }),
        },
    })
}

/// Depth-first search for X_0 < X_1 < … through the per-rank lists, taking
/// candidates in list order.
fn find_chain(modular: &[Vec<Flat>]) -> Option<Vec<Flat>> {
    fn dfs(modular: &[Vec<Flat>], rank: usize, path: &mut Vec<usize>, dead: &mut [Vec<bool>]) -> bool {
        if rank == modular.len() {
            return true;
        }
        for (i, x) in modular[rank].iter().enumerate() {
            if dead[rank][i] {
                continue;
            }
            if rank > 0 && !modular[rank - 1][path[rank - 1]].le(x) {
                continue;
            }
            path.push(i);
            if dfs(modular, rank + 1, path, dead) {
                return true;
            }
            path.pop();
            dead[rank][i] = true;
        }
        false
    }
    if modular.is_empty() {
        return None;
    }
    let mut dead: Vec<Vec<bool>> = modular.iter().map(|l| vec![false; l.len()]).collect();
    let mut path = Vec::new();
    dfs(modular, 0, &mut path, &mut dead)
        .then(|| path.iter().enumerate().map(|(k, &i)| modular[k][i].clone()).collect())
}
