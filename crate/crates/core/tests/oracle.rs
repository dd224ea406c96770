mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use hyperlat::analysis::{mobius, poincare};
use hyperlat::lattice::build_lattice;
use hyperlat::reflection::{arrangement_by_name, boolean_arrangement};

use common::{brute_force_flats, whitney_poincare};

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn lattice_equals_all_subsets(order in prop::sample::select(vec![1u32, 3, 4]), l in 1usize..=4, n in 1usize..=8, seed: u64) {
        let arr = common::random_arrangement(&mut StdRng::seed_from_u64(seed), order, l, n);
        let lattice = build_lattice(&arr);
        let oracle = brute_force_flats(&arr);
        prop_assert_eq!(lattice.len(), oracle.len());
        for f in lattice.flats() {
            let o = &oracle[&f.support().to_vec()];
            prop_assert_eq!(o.rank, f.rank());
            prop_assert_eq!(o.forms.as_slice(), f.subspace().forms());
        }
    }

    #[test]
    fn mobius_matches_whitney(order in prop::sample::select(vec![1u32, 3]), l in 1usize..=4, n in 1usize..=8, seed: u64) {
        let arr = common::random_arrangement(&mut StdRng::seed_from_u64(seed), order, l, n);
        let pi = poincare(&build_lattice(&arr));
        prop_assert_eq!(pi.coefficients, whitney_poincare(&arr));
    }
}

#[test]
fn boolean_lattice_is_the_subset_lattice() {
    for n in 0..=6 {
        let lattice = build_lattice(&boolean_arrangement(n));
        let binom: Vec<usize> = (0..=n).map(|k| (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))).collect();
        assert_eq!(lattice.level_sizes(), binom);
        assert!(mobius(&lattice)
            .iter()
            .zip(lattice.flats())
            .all(|(m, f)| *m == if f.rank() % 2 == 0 { 1 } else { -1 }));
    }
}

#[test]
fn braid_lattice_is_the_partition_lattice() {
    // Flats of the braid arrangement on m points are set partitions, counted
    // by Stirling numbers of the second kind.
    let cases = [(3, vec![1, 3, 1]), (4, vec![1, 6, 7, 1]), (5, vec![1, 10, 25, 15, 1])];
    for (m, sizes) in cases {
        let arr = arrangement_by_name(&format!("G(1,1,{m})")).unwrap();
        assert_eq!(build_lattice(&arr).level_sizes(), sizes);
    }
}
