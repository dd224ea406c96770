//! Property suites over random inputs. Each runs a fixed number of cases
//! from a deterministic seed and returns the first minimized failure.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};
use rand::rngs::StdRng;
use rand::SeedableRng;

use hyperlat::analysis::{is_modular, is_supersolvable};
use hyperlat::cache::{decode, encode, LatticeCache};
use hyperlat::cyclo::{cyclotomic_polynomial, field};
use hyperlat::lattice::{build_lattice, closure};
use hyperlat::{Arrangement, Cyclo, Rational, Subspace};

use super::random_arrangement;

pub const CASES: u32 = 1000;

pub type SuiteResult = Result<(), String>;

fn runner() -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn report<T: std::fmt::Debug>(result: Result<(), TestError<T>>) -> SuiteResult {
    result.map_err(|e| e.to_string())
}

const ORDERS: [u32; 6] = [1, 2, 3, 4, 5, 12];

fn cyclo_in(order: u32) -> impl Strategy<Value = Cyclo> {
    let degree = field(order).unwrap().degree();
    prop::collection::vec((-4i64..=4, 1i64..=3), degree).prop_map(move |parts| {
        let coeffs = parts.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect();
        Cyclo::from_coeffs(order, coeffs).unwrap()
    })
}

fn cyclo_triple() -> impl Strategy<Value = (Cyclo, Cyclo, Cyclo)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(|n| (cyclo_in(n), cyclo_in(n), cyclo_in(n)))
}

pub fn field_axioms() -> SuiteResult {
    report(runner().run(&cyclo_triple(), |(a, b, c)| {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
            prop_assert_eq!(&b.try_div(&a).unwrap() * &a, b.clone());
        }
        Ok(())
    }))
}

pub fn embedding_homomorphism() -> SuiteResult {
    let strategy = prop::sample::select(vec![(1u32, 4u32), (2, 4), (3, 12), (4, 12), (5, 10), (3, 6)])
        .prop_flat_map(|(n, m)| (cyclo_in(n), cyclo_in(n), Just(m)));
    report(runner().run(&strategy, |(a, b, m)| {
        let (ea, eb) = (a.embed(m).unwrap(), b.embed(m).unwrap());
        prop_assert_eq!((&a * &b).embed(m).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).embed(m).unwrap(), &ea + &eb);
        prop_assert_eq!(a == b, ea.coeffs() == eb.coeffs());
        prop_assert_eq!(&ea, &a);
        Ok(())
    }))
}

/// Evaluates the power-basis coefficients at e^{2πi/n} in floating point.
fn to_complex(x: &Cyclo) -> (f64, f64) {
    use num_traits::ToPrimitive;
    let theta = std::f64::consts::TAU / x.order() as f64;
    x.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
        let c = c.to_f64().unwrap();
        (re + c * (theta * k as f64).cos(), im + c * (theta * k as f64).sin())
    })
}

pub const ROOT_TOLERANCE: f64 = 1e-9;

pub fn roots_of_unity() -> SuiteResult {
    let strategy = (prop::sample::select(ORDERS.to_vec()), -30i64..30);
    report(runner().run(&strategy, |(n, m)| {
        let z = Cyclo::root_of_unity(n, m).unwrap();
        prop_assert!(z.pow(n as i64).unwrap().is_one());
        let zeta = Cyclo::root_of_unity(n, 1).unwrap();
        let phi = cyclotomic_polynomial(n).unwrap();
        let value = phi.iter().rev().fold(Cyclo::zero(n), |acc, c| {
            &(&acc * &zeta) + &Cyclo::from_rational(n, Rational::from_integer(c.clone()))
        });
        prop_assert!(value.is_zero());
        let (re, im) = to_complex(&z);
        let angle = std::f64::consts::TAU * m as f64 / n as f64;
        prop_assert!((re - angle.cos()).abs() < ROOT_TOLERANCE && (im - angle.sin()).abs() < ROOT_TOLERANCE);
        Ok(())
    }))
}

fn rows_in(order: u32, ambient: usize, max_rows: usize) -> impl Strategy<Value = Vec<Vec<Cyclo>>> {
    let entry = prop_oneof![2 => Just(Cyclo::zero(order)), 3 => cyclo_in(order)];
    prop::collection::vec(prop::collection::vec(entry, ambient), 0..=max_rows)
}

fn subspace_pair() -> impl Strategy<Value = (Subspace, Subspace, Vec<Vec<Cyclo>>)> {
    (prop::sample::select(vec![1u32, 3, 4]), 1usize..=4).prop_flat_map(|(n, l)| {
        (rows_in(n, l, 4), rows_in(n, l, 4), rows_in(n, l, 4))
            .prop_map(move |(x, y, mix)| (Subspace::from_rows(l, n, x), Subspace::from_rows(l, n, y), mix))
    })
}

pub fn canonical_subspaces() -> SuiteResult {
    report(runner().run(&subspace_pair(), |(x, _, mix)| {
        let (l, n) = (x.ambient(), x.order());
        // Generators: the forms scaled by nonzero factors, in reverse order,
        // plus combinations of them.
        let forms = x.forms();
        let mut gens: Vec<Vec<Cyclo>> = Vec::new();
        for (k, f) in forms.iter().enumerate().rev() {
            let s = Cyclo::from_int(n, k as i64 + 2);
            gens.push(f.iter().map(|c| c * &s).collect());
        }
        for m in &mix {
            let mut row = vec![Cyclo::zero(n); l];
            for (c, f) in m.iter().zip(forms) {
                for (r, v) in row.iter_mut().zip(f) {
                    *r = &*r + &(c * v);
                }
            }
            gens.push(row);
        }
        prop_assert_eq!(Subspace::from_rows(l, n, gens), x.clone());
        prop_assert_eq!(Subspace::from_spanning(l, n, x.basis()), x.clone());
        prop_assert_eq!(x.codim() + x.dim(), l);
        Ok(())
    }))
}

pub fn dimension_formula() -> SuiteResult {
    report(runner().run(&subspace_pair(), |(x, y, _)| {
        let sum = x.sum(&y).unwrap();
        let meet = x.intersect(&y).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), x.dim() + y.dim());
        prop_assert!(x.contains(&meet) && y.contains(&meet));
        prop_assert!(sum.contains(&x) && sum.contains(&y));
        prop_assert_eq!(x.sum_codim(&y), sum.codim());
        Ok(())
    }))
}

fn small_arrangement(max_hyperplanes: usize) -> impl Strategy<Value = Arrangement> {
    (prop::sample::select(vec![1u32, 3]), 2usize..=4, 1..=max_hyperplanes, any::<u64>())
        .prop_map(|(n, l, count, seed)| random_arrangement(&mut StdRng::seed_from_u64(seed), n, l, count))
}

pub fn lattice_structure() -> SuiteResult {
    let strategy = small_arrangement(7).prop_flat_map(|a| {
        let size = build_lattice(&a).len();
        (Just(a), 0..size, 0..size)
    });
    report(runner().run(&strategy, |(arr, i, j)| {
        let lattice = build_lattice(&arr);
        let (x, y) = (lattice.flat(i), lattice.flat(j));
        let meet_sub = x.subspace().intersect(y.subspace()).unwrap();
        let join = closure(&arr, &meet_sub);
        prop_assert_eq!(join.subspace(), &meet_sub);
        let lower = lattice.id_of_support(&x.support().intersection(y.support()));
        prop_assert!(lower.is_some());
        let lower = lattice.flat(lower.unwrap());
        prop_assert!(join.rank() + lower.rank() <= x.rank() + y.rank());
        prop_assert_eq!(i == j, x.support() == y.support());
        prop_assert_eq!(x.subspace().contains(y.subspace()), x.support().is_subset(y.support()));
        let sum = x.subspace().sum(y.subspace()).unwrap();
        let cs = closure(&arr, &sum);
        for f in lattice.flats() {
            if f.subspace().contains(&sum) {
                prop_assert!(f.support().is_subset(cs.support()));
            }
        }
        prop_assert_eq!(build_lattice(&arr.essentialize()).len(), lattice.len());
        Ok(())
    }))
}

pub fn certificate_soundness() -> SuiteResult {
    report(runner().run(&small_arrangement(7), |arr| {
        let cert = is_supersolvable(&arr).unwrap();
        let lattice = build_lattice(&cert.arrangement);
        prop_assert!(cert.recheck(&lattice).unwrap());
        if let Some(chain) = &cert.chain {
            for x in chain {
                prop_assert!(is_modular(&lattice, x).unwrap().modular);
            }
        }
        if let Some(hyperlat::analysis::Refutation::NoModularFlat { verdicts, .. }) = &cert.refutation {
            for v in verdicts {
                let w = v.witness.as_ref().unwrap();
                let sum = v.flat.subspace().sum(w.other.subspace()).unwrap();
                let closed = closure(&cert.arrangement, &sum);
                prop_assert_ne!(closed.subspace(), &sum);
            }
        }
        Ok(())
    }))
}

pub fn cache_identity() -> SuiteResult {
    let dir = tempfile::tempdir().unwrap();
    let cache = LatticeCache::new(dir.path());
    report(runner().run(&small_arrangement(8), |arr| {
        let cold = encode(&build_lattice(&arr));
        prop_assert_eq!(&encode(&build_lattice(&arr)), &cold);
        prop_assert_eq!(&encode(&decode(&arr, &cold).unwrap()), &cold);
        let (first, _) = cache.get_or_build(&arr, usize::MAX).unwrap();
        let (warm, status) = cache.get_or_build(&arr, usize::MAX).unwrap();
        prop_assert_eq!(status, hyperlat::cache::CacheStatus::Hit);
        prop_assert_eq!(&encode(&first), &cold);
        prop_assert_eq!(&encode(&warm), &cold);
        Ok(())
    }))
}

pub type Suite = (&'static str, fn() -> SuiteResult);

pub const SUITES: &[Suite] = &[
    ("field axioms", field_axioms),
    ("embedding homomorphism", embedding_homomorphism),
    ("roots of unity", roots_of_unity),
    ("canonical subspaces", canonical_subspaces),
    ("dimension formula", dimension_formula),
    ("lattice structure and semimodularity", lattice_structure),
    ("certificate soundness", certificate_soundness),
    ("determinism and cache identity", cache_identity),
];
