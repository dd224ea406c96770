use crate::arrangement::Arrangement;
use crate::error::Result;
use crate::lattice::closure;
use crate::linalg::{LinearForm, Subspace};

/// Outcome of recomputing one explicit non-modularity equation X + Y = H.
#[derive(Clone, Debug)]
pub struct ReplayOutcome {
    pub x: Subspace,
    pub y: Subspace,
    pub sum: Subspace,
    /// X and Y are themselves lattice elements.
    pub x_is_flat: bool,
    pub y_is_flat: bool,
    /// The closure of X + Y is strictly smaller, so X + Y ∉ L(A).
    pub sum_not_in_lattice: bool,
    /// The sum equals the stated hyperplane, when one is given.
    pub matches_expected: Option<bool>,
    /// The stated hyperplane is not a member of A.
    pub expected_not_in_arrangement: Option<bool>,
}

impl ReplayOutcome {
    pub fn passed(&self) -> bool {
        self.x_is_flat
            && self.y_is_flat
            && self.sum_not_in_lattice
            && self.matches_expected.unwrap_or(true)
            && self.expected_not_in_arrangement.unwrap_or(true)
    }
}

pub fn replay_witness(
    arr: &Arrangement,
    x_forms: &[LinearForm],
    y_forms: &[LinearForm],
    expected: Option<&LinearForm>,
) -> Result<ReplayOutcome> {
    let (l, n) = (arr.ambient(), arr.order());
    let x = Subspace::from_forms(l, n, x_forms)?;
    let y = Subspace::from_forms(l, n, y_forms)?;
    let sum = x.sum(&y)?;
    let x_is_flat = closure(arr, &x).subspace() == &x;
    let y_is_flat = closure(arr, &y).subspace() == &y;
    let sum_not_in_lattice = closure(arr, &sum).subspace() != &sum;
    let matches_expected = match expected {
        Some(e) => Some(sum == Subspace::from_forms(l, n, std::slice::from_ref(e))?),
        None => None,
    };
    let expected_not_in_arrangement = expected.map(|e| arr.index_of(e).is_none());
    Ok(ReplayOutcome {
        x,
        y,
        sum,
        x_is_flat,
        y_is_flat,
        sum_not_in_lattice,
        matches_expected,
        expected_not_in_arrangement,
    })
}
