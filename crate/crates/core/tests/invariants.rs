mod common;

use hyperlat::analysis::{check_rank2_criterion, is_modular, is_supersolvable, modular_flats_of_rank};
use hyperlat::lattice::build_lattice;
use hyperlat::reflection::{catalog, monomial_arrangement};
use hyperlat::{Arrangement, Flat};

fn as_form_set(arr: &Arrangement) -> Vec<String> {
    let mut v: Vec<String> = arr.hyperplanes().iter().map(|h| format!("{:?}", h.coeffs())).collect();
    v.sort();
    v
}

#[test]
fn catalog_counts_and_irreducibility() {
    for entry in catalog() {
        let arr = entry.build().unwrap();
        assert_eq!(arr.len(), entry.expected_count, "{}", entry.name);
        assert_eq!((arr.ambient(), arr.order()), (entry.ambient, entry.field_order), "{}", entry.name);
        let factors = arr.irreducible_decomposition();
        assert_eq!(factors.len(), 1, "{} is reducible", entry.name);
        assert!(factors[0].is_essential());
        // Only the braid arrangements have a nontrivial center.
        assert_eq!(arr.is_essential(), !entry.name.starts_with("G(1,1,"), "{}", entry.name);
    }
}

#[test]
fn proper_divisors_give_the_same_arrangement() {
    for (r, ell) in [(4, 3), (6, 3), (4, 4)] {
        let base = as_form_set(&monomial_arrangement(r, 1, ell).unwrap());
        for p in (2..r).filter(|p| r % p == 0) {
            assert_eq!(as_form_set(&monomial_arrangement(r, p, ell).unwrap()), base, "G({r},{p},{ell})");
        }
    }
}

#[test]
fn bottom_top_and_hyperplanes_are_modular() {
    for entry in catalog() {
        let arr = entry.build().unwrap();
        let lattice = build_lattice(&arr);
        let constant: Vec<&Flat> =
            std::iter::once(lattice.bottom()).chain([lattice.top()]).chain(lattice.level(1)).collect();
        for x in constant {
            assert!(is_modular(&lattice, x).unwrap().modular, "{}: {:?}", entry.name, x.support());
        }
    }
}

#[test]
fn rank_three_equivalence() {
    for entry in catalog() {
        let arr = entry.build().unwrap();
        if !arr.is_essential() || arr.rank() != 3 {
            continue;
        }
        let lattice = build_lattice(&arr);
        let has_rank2 = modular_flats_of_rank(&lattice, 2).unwrap().iter().any(|v| v.modular);
        assert_eq!(is_supersolvable(&arr).unwrap().supersolvable, has_rank2, "{}", entry.name);
    }
}

#[test]
fn lattice_sizes_under_essentialization_and_products() {
    let small = ["G(2,1,2)", "G(1,1,4)", "G(3,3,3)", "H3", "Boolean(2)"];
    for a in small {
        let x = hyperlat::reflection::arrangement_by_name(a).unwrap();
        let lx = build_lattice(&x);
        assert_eq!(build_lattice(&x.essentialize()).len(), lx.len(), "{a}");
        for b in small {
            let y = hyperlat::reflection::arrangement_by_name(b).unwrap();
            let ly = build_lattice(&y);
            let p = build_lattice(&x.product(&y).unwrap());
            assert_eq!(p.len(), lx.len() * ly.len(), "{a} x {b}");
            assert_eq!(p.rank(), lx.rank() + ly.rank());
        }
    }
}

#[test]
fn criterion_refuses_reducible_input() {
    let a = monomial_arrangement(2, 1, 2).unwrap().product(&monomial_arrangement(3, 3, 3).unwrap()).unwrap();
    assert!(matches!(check_rank2_criterion(&a), Err(hyperlat::Error::Refused(_))));
}

#[test]
fn g31_poincare_splits_with_known_exponents() {
    // Orlik–Solomon: the Poincaré polynomial of a reflection arrangement
    // factors with the coexponents, here 1, 13, 17, 29.
    let arr = hyperlat::reflection::exceptional_arrangement("G31").unwrap();
    let pi = hyperlat::analysis::poincare(&build_lattice(&arr));
    assert_eq!(pi.integer_factorization(), Some(vec![1, 13, 17, 29]));
}
