use std::fmt;

use crate::analysis::supersolvable::is_supersolvable;
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::lattice::{build_lattice, IntersectionLattice};

/// Möbius values μ(V, X), indexed like `lattice.flats()`.
pub fn mobius(lattice: &IntersectionLattice) -> Vec<i64> {
    let flats = lattice.flats();
    let mut mu = vec![0i64; flats.len()];
    mu[0] = 1;
    for rank in 1..=lattice.rank() {
        for id in lattice.level_range(rank) {
            let x = &flats[id];
            let below: i64 = (0..lattice.level_range(rank).start).filter(|&j| flats[j].le(x)).map(|j| mu[j]).sum();
            mu[id] = -below;
        }
    }
    mu
}

/// π(A, t) = Σ_X μ(X) (−t)^{r(X)}, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincarePolynomial {
    pub coefficients: Vec<i64>,
}

pub fn poincare(lattice: &IntersectionLattice) -> PoincarePolynomial {
    let mu = mobius(lattice);
    let mut coefficients = vec![0i64; lattice.rank() + 1];
    for (id, flat) in lattice.flats().iter().enumerate() {
        let r = flat.rank();
        coefficients[r] += if r % 2 == 0 { mu[id] } else { -mu[id] };
    }
    PoincarePolynomial { coefficients }
}

impl PoincarePolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// The b_i with π(t) = ∏(1 + b_i t), ascending, if π splits over ℤ.
    ///
    /// Works on the reversed polynomial ∏(t + b_i), peeling integer roots −b
    /// in increasing b. Its coefficients from the leading term down are
    /// exactly those of π from the constant term up.
    pub fn integer_factorization(&self) -> Option<Vec<i64>> {
        let mut rev: Vec<i64> = self.coefficients.clone();
        let mut roots = Vec::new();
        let mut b = 0i64;
        while rev.len() > 1 {
            let constant = *rev.last().unwrap();
            if b > 0 && b > constant.abs() {
                return None;
            }
            // divide by (t + b): synthetic division at t = −b
            let mut quot = Vec::with_capacity(rev.len() - 1);
            let mut acc = 0i64;
            for &c in &rev {
                acc = acc.checked_mul(-b)?.checked_add(c)?;
                quot.push(acc);
            }
            if acc == 0 {
                quot.pop();
                rev = quot;
                roots.push(b);
            } else {
                b += 1;
            }
        }
        Some(roots)
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            let m = c.abs();
            match k {
                0 => write!(f, "{m}")?,
                _ => {
                    if m != 1 {
                        write!(f, "{m}")?;
                    }
                    f.write_str("t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Exponents of a supersolvable arrangement from the factorization of π.
pub fn exponents_if_supersolvable(arr: &Arrangement) -> Result<Vec<i64>> {
    let cert = is_supersolvable(arr)?;
    if !cert.supersolvable {
        return Err(Error::Refused("arrangement is not supersolvable; exponents are not read off π".into()));
    }
    let pi = poincare(&build_lattice(&cert.arrangement));
    pi.integer_factorization()
        .ok_or_else(|| Error::Inconsistent(format!("π = {pi} of a supersolvable arrangement does not split over ℤ")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reflection::monomial_arrangement;

    #[test]
    fn braid_poincare() {
        let lat = build_lattice(&monomial_arrangement(1, 1, 4).unwrap());
        let pi = poincare(&lat);
        assert_eq!(pi.coefficients, vec![1, 6, 11, 6]);
        assert_eq!(pi.to_string(), "1 + 6t + 11t^2 + 6t^3");
        assert_eq!(pi.integer_factorization(), Some(vec![1, 2, 3]));
        let total: i64 = mobius(&lat).iter().map(|m| m.abs()).sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn small_cases() {
        let empty = build_lattice(&Arrangement::empty(2, 1));
        assert_eq!(poincare(&empty).coefficients, vec![1]);
        assert_eq!(poincare(&empty).integer_factorization(), Some(vec![]));
        let one = build_lattice(&monomial_arrangement(1, 1, 2).unwrap());
        assert_eq!(poincare(&one).coefficients, vec![1, 1]);
    }

    #[test]
    fn non_splitting() {
        let p = PoincarePolynomial { coefficients: vec![1, 3, 3] };
        assert_eq!(p.integer_factorization(), None);
        let p = PoincarePolynomial { coefficients: vec![1, 4, 4] };
        assert_eq!(p.integer_factorization(), Some(vec![2, 2]));
    }

    #[test]
    fn exponents_b3() {
        assert_eq!(exponents_if_supersolvable(&monomial_arrangement(2, 1, 3).unwrap()).unwrap(), vec![1, 3, 5]);
        let d4 = crate::reflection::monomial_arrangement(2, 2, 4).unwrap();
        assert!(matches!(exponents_if_supersolvable(&d4), Err(Error::Refused(_))));
    }
}
