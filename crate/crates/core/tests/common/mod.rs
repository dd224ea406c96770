//! Test-side oracles that share no lattice code with the library: all-subsets
//! enumeration with a separate Gaussian elimination, and Whitney's formula
//! for the Poincaré polynomial.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hyperlat::{Arrangement, Cyclo};
use rand::rngs::StdRng;
use rand::Rng;

/// Reduced row echelon form with unit pivots; zero rows dropped.
pub fn echelon(mut rows: Vec<Vec<Cyclo>>, ncols: usize) -> Vec<Vec<Cyclo>> {
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().unwrap();
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                rows[i] = rows[i].iter().zip(&pivot).map(|(a, b)| a - &(&f * b)).collect();
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

pub struct OracleFlat {
    pub rank: usize,
    pub forms: Vec<Vec<Cyclo>>,
}

/// Every intersection of a subset of hyperplanes, keyed by the set of all
/// hyperplanes containing it.
pub fn brute_force_flats(arr: &Arrangement) -> BTreeMap<Vec<usize>, OracleFlat> {
    let n = arr.len();
    assert!(n <= 16, "oracle is exponential");
    let hs: Vec<Vec<Cyclo>> = arr.hyperplanes().iter().map(|h| h.coeffs().to_vec()).collect();
    let l = arr.ambient();
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let chosen: Vec<Vec<Cyclo>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| hs[i].clone()).collect();
        let forms = echelon(chosen, l);
        let rank = forms.len();
        let support: Vec<usize> = (0..n)
            .filter(|&i| {
                let mut with = forms.clone();
                with.push(hs[i].clone());
                echelon(with, l).len() == rank
            })
            .collect();
        out.entry(support).or_insert(OracleFlat { rank, forms });
    }
    out
}

pub fn brute_force_level_sizes(arr: &Arrangement) -> Vec<usize> {
    let flats = brute_force_flats(arr);
    let top = flats.values().map(|f| f.rank).max().unwrap_or(0);
    (0..=top).map(|k| flats.values().filter(|f| f.rank == k).count()).collect()
}

/// π(t) = Σ_{S ⊆ A} (−1)^{|S|} (−t)^{rank S}.
pub fn whitney_poincare(arr: &Arrangement) -> Vec<i64> {
    let n = arr.len();
    assert!(n <= 20, "oracle is exponential");
    let hs: Vec<Vec<Cyclo>> = arr.hyperplanes().iter().map(|h| h.coeffs().to_vec()).collect();
    let mut coeffs = vec![0i64; arr.ambient() + 1];
    for mask in 0u32..(1 << n) {
        let chosen: Vec<Vec<Cyclo>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| hs[i].clone()).collect();
        let r = echelon(chosen, arr.ambient()).len();
        let sign = if (mask.count_ones() as usize + r).is_multiple_of(2) { 1 } else { -1 };
        coeffs[r] += sign;
    }
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    coeffs
}

/// A small element of Q(ζ_n): integer coefficients in [-2, 2] on 1 and ζ_n.
pub fn small_scalar(rng: &mut StdRng, order: u32) -> Cyclo {
    let a = Cyclo::from_int(order, rng.gen_range(-2..=2));
    if order <= 2 {
        return a;
    }
    let z = Cyclo::root_of_unity(order, 1).unwrap();
    &a + &(&z * &Cyclo::from_int(order, rng.gen_range(-1..=1)))
}

/// Random forms, biased towards zeros so that dependencies occur.
pub fn random_arrangement(rng: &mut StdRng, order: u32, ambient: usize, count: usize) -> Arrangement {
    let mut rows = Vec::new();
    while rows.len() < count {
        let row: Vec<Cyclo> = (0..ambient)
            .map(|_| if rng.gen_bool(0.35) { Cyclo::zero(order) } else { small_scalar(rng, order) })
            .collect();
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
        }
    }
    Arrangement::new(ambient, order, rows).unwrap()
}
pub mod suites;
