//! Central hyperplane arrangements and the standard constructions on them.

use sha2::{Digest, Sha256};

use crate::cyclo::{lcm, Cyclo};
use crate::error::{Error, Result};
use crate::lattice::Flat;
use crate::linalg::{LinearForm, Row, Subspace};

/// A central arrangement: distinct normalized hyperplanes in C^ℓ with
/// coefficients in Q(ζ_n). Hyperplane order fixes the bitset layout of
/// the intersection lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrangement {
    ambient: usize,
    order: u32,
    hyperplanes: Vec<LinearForm>,
    duplicates_removed: usize,
}

impl Arrangement {
    /// The empty arrangement Φ_ℓ.
    pub fn empty(ambient: usize, order: u32) -> Self {
        Arrangement { ambient, order, hyperplanes: Vec::new(), duplicates_removed: 0 }
    }

    /// Normalizes every form and drops scalar duplicates, keeping the first
    /// occurrence. Zero forms are rejected.
    pub fn new(ambient: usize, order: u32, forms: Vec<Row>) -> Result<Self> {
        let mut out = Self::empty(ambient, order);
        for coeffs in forms {
            if coeffs.len() != ambient {
                return Err(Error::AmbientMismatch { left: ambient, right: coeffs.len() });
            }
            out.push(LinearForm::new(coeffs)?)?;
        }
        Ok(out)
    }

    pub fn from_forms(ambient: usize, order: u32, forms: Vec<LinearForm>) -> Result<Self> {
        let mut out = Self::empty(ambient, order);
        for f in forms {
            out.push(f)?;
        }
        Ok(out)
    }

    fn push(&mut self, form: LinearForm) -> Result<()> {
        if form.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: form.ambient() });
        }
        if form.order() != self.order {
            return Err(Error::OrderMismatch { left: self.order, right: form.order() });
        }
        if self.hyperplanes.contains(&form) {
            self.duplicates_removed += 1;
        } else {
            self.hyperplanes.push(form);
        }
        Ok(())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[LinearForm] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, index: usize) -> Result<&LinearForm> {
        self.hyperplanes.get(index).ok_or(Error::IndexOutOfRange { index, len: self.len() })
    }

    /// Number of scalar-duplicate input forms dropped during construction.
    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }

    pub fn index_of(&self, form: &LinearForm) -> Option<usize> {
        self.hyperplanes.iter().position(|h| h == form)
    }

    /// The center T(A), the intersection of all hyperplanes.
    pub fn center(&self) -> Subspace {
        Subspace::from_rows(self.ambient, self.order, self.hyperplanes.iter().map(|h| h.coeffs().to_vec()).collect())
    }

    /// r(A) = codim T(A).
    pub fn rank(&self) -> usize {
        self.center().codim()
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.ambient
    }

    /// The subarrangement A_X of hyperplanes containing the flat X.
    pub fn localization(&self, flat: &Flat) -> Result<Arrangement> {
        let x = flat.subspace();
        if x.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: x.ambient() });
        }
        let closure = crate::lattice::closure(self, x);
        if closure.subspace() != x || closure.support() != flat.support() {
            return Err(Error::NotAFlat);
        }
        let forms = flat.support().iter().map(|i| self.hyperplanes[i].clone()).collect();
        Arrangement::from_forms(self.ambient, self.order, forms)
    }

    /// A ∖ {H}.
    pub fn deletion(&self, index: usize) -> Result<Arrangement> {
        self.hyperplane(index)?;
        let mut out = self.clone();
        out.hyperplanes.remove(index);
        out.duplicates_removed = 0;
        Ok(out)
    }

    /// A^H in coordinates given by the standard solution basis of H.
    pub fn restriction(&self, index: usize) -> Result<Arrangement> {
        let h = self.hyperplane(index)?;
        let basis = Subspace::from_forms(self.ambient, self.order, std::slice::from_ref(h))?.basis();
        let mut out = Arrangement::empty(self.ambient - 1, self.order);
        for (j, other) in self.hyperplanes.iter().enumerate() {
            if j == index {
                continue;
            }
            let restricted: Row = basis.iter().map(|v| other.eval(v)).collect();
            out.push(LinearForm::new(restricted)?)?;
        }
        out.duplicates_removed = 0;
        Ok(out)
    }

    /// Coefficients lifted into Q(ζ_N) for a multiple N of the field order.
    pub fn embed(&self, order: u32) -> Result<Arrangement> {
        let forms = self.hyperplanes.iter().map(|h| h.embed(order)).collect::<Result<_>>()?;
        Arrangement::from_forms(self.ambient, order, forms)
    }

    /// A1 × A2 in V1 ⊕ V2, over the compositum Q(ζ_lcm).
    pub fn product(&self, other: &Arrangement) -> Result<Arrangement> {
        let order = lcm(self.order, other.order);
        let ambient = self.ambient + other.ambient;
        let zeros = |k: usize| vec![Cyclo::zero(order); k];
        let mut forms = Vec::with_capacity(self.len() + other.len());
        for h in &self.hyperplanes {
            let mut row = h.embed(order)?.into_coeffs();
            row.extend(zeros(other.ambient));
            forms.push(row);
        }
        for h in &other.hyperplanes {
            let mut row = zeros(self.ambient);
            row.extend(h.embed(order)?.into_coeffs());
            forms.push(row);
        }
        Arrangement::new(ambient, order, forms)
    }

    /// An essential arrangement on V / T(A), in the coordinates given by
    /// the canonical defining forms of T(A).
    pub fn essentialize(&self) -> Arrangement {
        let center = self.center();
        let forms = self
            .hyperplanes
            .iter()
            .map(|h| center.row_coordinates(h.coeffs()).expect("normal lies in the span of all normals"))
            .collect();
        Arrangement::new(center.codim(), self.order, forms).expect("coordinate change keeps forms distinct")
    }

    /// The finest factorization into irreducible essential arrangements,
    /// ordered by the smallest hyperplane index of each factor. The empty
    /// arrangement has no factors.
    ///
    /// Components are the connected components of the matroid of normals,
    /// read off from fundamental circuits with respect to a greedy basis.
    pub fn irreducible_decomposition(&self) -> Vec<Arrangement> {
        let n = self.len();
        let mut basis: Vec<usize> = Vec::new();
        let mut span = Subspace::whole(self.ambient, self.order);
        let mut dependent = Vec::new();
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if span.lies_in(h) {
                dependent.push(i);
            } else {
                span = span.intersect_form(h);
                basis.push(i);
            }
        }

        let mut uf = UnionFind::new(n);
        let rows = |skip: usize| -> Subspace {
            let rows = basis.iter().filter(|&&b| b != skip).map(|&b| self.hyperplanes[b].coeffs().to_vec()).collect();
            Subspace::from_rows(self.ambient, self.order, rows)
        };
        for &b in &basis {
            let without = rows(b);
            for &d in &dependent {
                // b occurs in the fundamental circuit of d iff d needs b.
                if !without.lies_in(&self.hyperplanes[d]) {
                    uf.union(b, d);
                }
            }
        }

        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of_root = std::collections::HashMap::new();
        for i in 0..n {
            let root = uf.find(i);
            let k = *block_of_root.entry(root).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[k].push(i);
        }

        blocks
            .into_iter()
            .map(|block| {
                let forms: Vec<LinearForm> = block.iter().map(|&i| self.hyperplanes[i].clone()).collect();
                let sub =
                    Arrangement::from_forms(self.ambient, self.order, forms).expect("subset of a valid arrangement");
                sub.essentialize()
            })
            .collect()
    }

    /// Stable textual form in the arrangement file syntax.
    pub fn to_text(&self) -> String {
        let mut s = format!("ambient {} field {}\n", self.ambient, self.order);
        for h in &self.hyperplanes {
            s.push_str(&h.display());
            s.push('\n');
        }
        s
    }

    /// Hex SHA-256 of the canonical coefficient data.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("ambient {} field {}\n", self.ambient, self.order));
        for h in &self.hyperplanes {
            for c in h.coeffs() {
                hasher.update(c.to_strings().join(","));
                hasher.update(";");
            }
            hasher.update("\n");
        }
        hex::encode(hasher.finalize())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as root so blocks are ordered by first member.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_lattice, closure};

    fn rows(order: u32, v: &[&[i64]]) -> Vec<Row> {
        v.iter().map(|r| r.iter().map(|&x| Cyclo::from_int(order, x)).collect()).collect()
    }

    fn boolean(l: usize) -> Arrangement {
        let forms = (0..l).map(|i| (0..l).map(|j| Cyclo::from_int(1, (i == j) as i64)).collect()).collect();
        Arrangement::new(l, 1, forms).unwrap()
    }

    fn braid(l: usize) -> Arrangement {
        let mut forms = Vec::new();
        for i in 0..l {
            for j in i + 1..l {
                let mut r = vec![Cyclo::zero(1); l];
                r[i] = Cyclo::one(1);
                r[j] = Cyclo::from_int(1, -1);
                forms.push(r);
            }
        }
        Arrangement::new(l, 1, forms).unwrap()
    }

    #[test]
    fn construction_dedups() {
        assert!(Arrangement::new(3, 1, vec![]).unwrap().is_empty());
        let i = Cyclo::root_of_unity(4, 1).unwrap();
        let a = vec![Cyclo::one(4), Cyclo::zero(4), Cyclo::zero(4)];
        let two_a: Row = a.iter().map(|c| c * &Cyclo::from_int(4, 2)).collect();
        let i_a: Row = a.iter().map(|c| c * &i).collect();
        let arr = Arrangement::new(3, 4, vec![a, two_a, i_a]).unwrap();
        assert_eq!(arr.len(), 1);
        assert_eq!(arr.duplicates_removed(), 2);
        assert!(matches!(Arrangement::new(2, 1, rows(1, &[&[0, 0]])), Err(Error::InvalidHyperplane(_))));
    }

    #[test]
    fn restriction_of_boolean_and_braid() {
        let r = boolean(3).restriction(0).unwrap();
        assert_eq!((r.ambient(), r.len()), (2, 2));
        let b3 = braid(3);
        for k in 0..3 {
            assert_eq!(b3.restriction(k).unwrap().len(), 1);
        }
        assert!(matches!(b3.restriction(3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn deletion_counts() {
        let one = boolean(1);
        assert!(one.deletion(0).unwrap().is_empty());
        let b = braid(4);
        assert_eq!(b.deletion(2).unwrap().len(), b.len() - 1);
    }

    #[test]
    fn product_with_empty() {
        let b = braid(3);
        let phi0 = Arrangement::empty(0, 1);
        assert_eq!(b.product(&phi0).unwrap(), b);
        let p = b.product(&boolean(2)).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.ambient(), 5);
    }

    #[test]
    fn essentialize_braid() {
        let b = braid(4);
        assert_eq!(b.rank(), 3);
        let e = b.essentialize();
        assert_eq!(e.ambient(), 3);
        assert!(e.is_essential());
        assert_eq!(build_lattice(&b).level_sizes(), build_lattice(&e).level_sizes());
        let bool3 = boolean(3);
        assert_eq!(bool3.essentialize(), bool3);
        let phi = Arrangement::empty(3, 1);
        assert_eq!(phi.essentialize().ambient(), 0);
    }

    #[test]
    fn decomposition() {
        let parts = boolean(3).irreducible_decomposition();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.ambient() == 1 && p.len() == 1));
        assert_eq!(braid(4).essentialize().irreducible_decomposition().len(), 1);
        let prod = braid(3).product(&braid(4)).unwrap();
        assert_eq!(prod.irreducible_decomposition().len(), 2);
    }

    #[test]
    fn localization_rejects_non_flats() {
        let b = braid(3);
        let lat = build_lattice(&b);
        let h = &lat.level(1)[0];
        assert_eq!(b.localization(h).unwrap().len(), 1);
        assert!(b.localization(&lat.level(0)[0]).unwrap().is_empty());
        let bogus = Flat::new(closure(&b, h.subspace()).subspace().clone(), lat.level(2)[0].support().clone());
        assert_eq!(b.localization(&bogus), Err(Error::NotAFlat));
    }
}
