//! The intersection lattice L(A), built level by level.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::support::Support;

/// A lattice element: a subspace together with the set A_X of hyperplanes
/// containing it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flat {
    subspace: Subspace,
    support: Support,
}

impl Flat {
    pub fn new(subspace: Subspace, support: Support) -> Self {
        Flat { subspace, support }
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn rank(&self) -> usize {
        self.subspace.codim()
    }

    /// `self ≤ other` in L(A), i.e. `other ⊆ self` as subspaces.
    pub fn le(&self, other: &Flat) -> bool {
        self.support.is_subset(&other.support)
    }
}

/// The smallest lattice element containing `x`: the intersection of all
/// hyperplanes that contain `x` (V when there are none).
pub fn closure(arr: &Arrangement, x: &Subspace) -> Flat {
    let support = Support::from_indices(
        arr.len(),
        arr.hyperplanes().iter().enumerate().filter(|(_, h)| x.lies_in(h)).map(|(i, _)| i),
    );
    let rows = support.iter().map(|i| arr.hyperplanes()[i].coeffs().to_vec()).collect();
    Flat { subspace: Subspace::from_rows(arr.ambient(), arr.order(), rows), support }
}

/// True iff `x` is an element of L(A).
pub fn is_member(arr: &Arrangement, x: &Subspace) -> bool {
    closure(arr, x).subspace == *x
}

#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    arrangement: Arrangement,
    flats: Vec<Flat>,
    /// `offsets[k]..offsets[k + 1]` are the flats of rank k.
    offsets: Vec<usize>,
    index: HashMap<Support, usize>,
}

pub fn build_lattice(arr: &Arrangement) -> IntersectionLattice {
    build_lattice_limited(arr, usize::MAX).expect("no limit")
}

/// Breadth-first closure by rank; level k+1 consists of the flats X ∩ H for
/// X of rank k and H ∉ A_X, deduplicated by support and sorted.
pub fn build_lattice_limited(arr: &Arrangement, max_flats: usize) -> Result<IntersectionLattice> {
    let n = arr.len();
    let bottom = Flat { subspace: Subspace::whole(arr.ambient(), arr.order()), support: Support::empty(n) };
    let mut levels: Vec<Vec<Flat>> = vec![vec![bottom]];
    let mut total = 1;
    if total > max_flats {
        return Err(Error::TooManyFlats { limit: max_flats });
    }
    loop {
        let current = levels.last().unwrap();
        let found: Vec<Vec<Flat>> = current.par_iter().map(|x| covers(arr, x)).collect();
        let mut next: HashMap<Support, Flat> = HashMap::new();
        for flat in found.into_iter().flatten() {
            next.entry(flat.support.clone()).or_insert(flat);
        }
        if next.is_empty() {
            break;
        }
        total += next.len();
        if total > max_flats {
            return Err(Error::TooManyFlats { limit: max_flats });
        }
        let mut level: Vec<Flat> = next.into_values().collect();
        level.sort_by(|a, b| a.support.cmp(&b.support));
        levels.push(level);
    }
    Ok(IntersectionLattice::from_levels(arr.clone(), levels))
}

/// All flats covering `x`. Each new flat marks its whole support as handled,
/// so every cover is computed once.
fn covers(arr: &Arrangement, x: &Flat) -> Vec<Flat> {
    let hs = arr.hyperplanes();
    let mut handled = x.support.clone();
    let mut out = Vec::new();
    for (i, h) in hs.iter().enumerate() {
        if handled.contains(i) {
            continue;
        }
        let sub = x.subspace.intersect_form(h);
        let mut support = x.support.clone();
        support.insert(i);
        for (j, g) in hs.iter().enumerate().skip(i + 1) {
            if !support.contains(j) && sub.lies_in(g) {
                support.insert(j);
            }
        }
        handled.union_with(&support);
        out.push(Flat { subspace: sub, support });
    }
    out
}

impl IntersectionLattice {
    /// Assembles a lattice from per-rank flat lists that are already sorted.
    pub(crate) fn from_levels(arrangement: Arrangement, levels: Vec<Vec<Flat>>) -> Self {
        let mut offsets = vec![0];
        let mut flats = Vec::new();
        for level in levels {
            flats.extend(level);
            offsets.push(flats.len());
        }
        let index = flats.iter().enumerate().map(|(i, f)| (f.support.clone(), i)).collect();
        IntersectionLattice { arrangement, flats, offsets, index }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    /// r(A), the rank of the top element T(A).
    pub fn rank(&self) -> usize {
        self.offsets.len() - 2
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, id: usize) -> &Flat {
        &self.flats[id]
    }

    pub fn level(&self, rank: usize) -> &[Flat] {
        &self.flats[self.level_range(rank)]
    }

    pub fn level_range(&self, rank: usize) -> std::ops::Range<usize> {
        self.offsets[rank]..self.offsets[rank + 1]
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn bottom(&self) -> &Flat {
        &self.flats[0]
    }

    pub fn top(&self) -> &Flat {
        self.flats.last().unwrap()
    }

    pub fn id_of_support(&self, support: &Support) -> Option<usize> {
        self.index.get(support).copied()
    }

    /// Id of a flat of this lattice, checking both support and subspace.
    pub fn locate(&self, flat: &Flat) -> Result<usize> {
        match self.index.get(&flat.support) {
            Some(&id) if self.flats[id].subspace == flat.subspace => Ok(id),
            _ => Err(Error::NotAFlat),
        }
    }

    /// The flat with support A_X for the closure of `x`.
    pub fn closure(&self, x: &Subspace) -> Flat {
        closure(&self.arrangement, x)
    }

    pub fn contains_subspace(&self, x: &Subspace) -> bool {
        is_member(&self.arrangement, x)
    }
}
