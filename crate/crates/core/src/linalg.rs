//! Canonical exact linear algebra over Q(ζ_n).
//!
//! A [`Subspace`] is stored by its defining linear forms in reduced row
//! echelon form; equal subspaces have identical matrices.

use std::fmt;

use num_traits::{One, Signed};

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};

pub type Row = Vec<Cyclo>;

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rows: Vec<Row>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Gauss–Jordan elimination, pivoting on the first nonzero entry of each
/// column in row order. Zero rows are dropped.
pub fn rref(mut rows: Vec<Row>, ncols: usize) -> Rref {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[rank].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            axpy(row, &f, &pivot_row);
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Rref { rows, pivots }
}

/// `row -= f * other`, skipping zero entries of `other`.
fn axpy(row: &mut [Cyclo], f: &Cyclo, other: &[Cyclo]) {
    for (x, y) in row.iter_mut().zip(other) {
        if !y.is_zero() {
            *x = &*x - &(f * y);
        }
    }
}

/// Reduce `v` against rows of an RREF matrix; the result vanishes on every
/// pivot column and is zero exactly when `v` lies in the row space.
fn reduce(rows: &[Row], pivots: &[usize], mut v: Row) -> Row {
    for (row, &p) in rows.iter().zip(pivots) {
        if !v[p].is_zero() {
            let f = v[p].clone();
            axpy(&mut v, &f, row);
        }
    }
    v
}

fn is_zero_row(v: &[Cyclo]) -> bool {
    v.iter().all(Cyclo::is_zero)
}

/// A nonzero linear form, scaled so its first nonzero coefficient is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Row,
}

impl LinearForm {
    pub fn new(coeffs: Row) -> Result<Self> {
        let Some(order) = coeffs.first().map(Cyclo::order) else {
            return Err(Error::InvalidHyperplane("form in ambient dimension 0".into()));
        };
        if let Some(bad) = coeffs.iter().find(|c| c.order() != order) {
            return Err(Error::OrderMismatch { left: order, right: bad.order() });
        }
        let Some(lead) = coeffs.iter().find(|c| !c.is_zero()) else {
            return Err(Error::InvalidHyperplane("zero form".into()));
        };
        let inv = lead.inverse()?;
        let coeffs = if inv.is_one() { coeffs } else { coeffs.iter().map(|c| c * &inv).collect() };
        Ok(LinearForm { coeffs })
    }

    pub fn ambient(&self) -> usize {
        self.coeffs.len()
    }

    pub fn order(&self) -> u32 {
        self.coeffs[0].order()
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Row {
        self.coeffs
    }

    pub fn eval(&self, v: &[Cyclo]) -> Cyclo {
        dot(&self.coeffs, v)
    }

    pub fn embed(&self, order: u32) -> Result<LinearForm> {
        let coeffs = self.coeffs.iter().map(|c| c.embed(order)).collect::<Result<_>>()?;
        Ok(LinearForm { coeffs })
    }

    /// Renders with variable names `a, b, c, d` for ambient ≤ 4, else `x1..xℓ`.
    pub fn display(&self) -> String {
        format_form(&self.coeffs)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearForm({})", self.display())
    }
}

pub fn variable_name(i: usize, ambient: usize) -> String {
    if ambient <= 4 {
        ["a", "b", "c", "d"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

pub(crate) fn format_form(coeffs: &[Cyclo]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let var = variable_name(i, coeffs.len());
        let (negative, body) = match c.as_rational() {
            Some(q) if q.is_one() => (false, var),
            Some(q) if (-q).is_one() => (true, var),
            Some(q) if q.is_integer() => (q.is_negative(), format!("{}*{var}", q.abs())),
            Some(q) => (q.is_negative(), format!("({})*{var}", q.abs())),
            None => (false, format!("({c})*{var}")),
        };
        match (out.is_empty(), negative) {
            (true, false) => out = body,
            (true, true) => out = format!("-{body}"),
            (false, false) => out = format!("{out} + {body}"),
            (false, true) => out = format!("{out} - {body}"),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn dot(a: &[Cyclo], b: &[Cyclo]) -> Cyclo {
    let mut acc = Cyclo::zero(a[0].order());
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

/// A linear subspace of C^ℓ, the common kernel of its canonical forms.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    order: u32,
    forms: Vec<Row>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The whole space V.
    pub fn whole(ambient: usize, order: u32) -> Self {
        Subspace { ambient, order, forms: Vec::new(), pivots: Vec::new() }
    }

    /// The origin {0}.
    pub fn origin(ambient: usize, order: u32) -> Self {
        let forms = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { Cyclo::one(order) } else { Cyclo::zero(order) }).collect())
            .collect();
        Subspace { ambient, order, forms, pivots: (0..ambient).collect() }
    }

    pub fn from_forms(ambient: usize, order: u32, forms: &[LinearForm]) -> Result<Self> {
        for f in forms {
            if f.ambient() != ambient {
                return Err(Error::AmbientMismatch { left: ambient, right: f.ambient() });
            }
            if f.order() != order {
                return Err(Error::OrderMismatch { left: order, right: f.order() });
            }
        }
        Ok(Self::from_rows(ambient, order, forms.iter().map(|f| f.coeffs.clone()).collect()))
    }

    /// Common kernel of arbitrary (possibly zero or dependent) rows.
    pub fn from_rows(ambient: usize, order: u32, rows: Vec<Row>) -> Self {
        let Rref { rows, pivots } = rref(rows, ambient);
        Subspace { ambient, order, forms: rows, pivots }
    }

    /// The span of `vectors`.
    pub fn from_spanning(ambient: usize, order: u32, vectors: Vec<Row>) -> Self {
        let r = rref(vectors, ambient);
        let annihilator = kernel_basis(&r, ambient, order);
        Self::from_rows(ambient, order, annihilator)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn codim(&self) -> usize {
        self.forms.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.forms.len()
    }

    pub fn forms(&self) -> &[Row] {
        &self.forms
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn linear_forms(&self) -> Vec<LinearForm> {
        self.forms.iter().map(|r| LinearForm { coeffs: r.clone() }).collect()
    }

    /// Basis of the solution space, one vector per free column.
    pub fn basis(&self) -> Vec<Row> {
        kernel_basis(&Rref { rows: self.forms.clone(), pivots: self.pivots.clone() }, self.ambient, self.order)
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut out = self.clone();
        for row in &other.forms {
            out.add_row(row.clone());
        }
        Ok(out)
    }

    /// Intersection with the hyperplane `ker form`.
    pub fn intersect_form(&self, form: &LinearForm) -> Subspace {
        let mut out = self.clone();
        out.add_row(form.coeffs.clone());
        out
    }

    /// Insert one more defining row, keeping the matrix canonical.
    fn add_row(&mut self, row: Row) {
        let mut v = reduce(&self.forms, &self.pivots, row);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return;
        };
        let inv = v[p].inverse().expect("nonzero");
        if !inv.is_one() {
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
        }
        for r in self.forms.iter_mut() {
            if !r[p].is_zero() {
                let f = r[p].clone();
                axpy(r, &f, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.forms.insert(at, v);
        self.pivots.insert(at, p);
    }

    /// The subspace X + Y, via solution bases of both summands.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut vectors = self.basis();
        vectors.extend(other.basis());
        Ok(Subspace::from_spanning(self.ambient, self.order, vectors))
    }

    /// Codimension of X + Y from the rank of the stacked defining forms,
    /// `codim(X+Y) = codim X + codim Y − codim(X ∩ Y)`.
    pub fn sum_codim(&self, other: &Subspace) -> usize {
        let rest: Vec<Row> = other
            .forms
            .iter()
            .map(|r| reduce(&self.forms, &self.pivots, r.clone()))
            .filter(|r| !is_zero_row(r))
            .collect();
        let extra = if rest.is_empty() { 0 } else { rref(rest, self.ambient).rank() };
        other.codim() - extra
    }

    /// True iff `ker form` contains this subspace.
    pub fn lies_in(&self, form: &LinearForm) -> bool {
        is_zero_row(&reduce(&self.forms, &self.pivots, form.coeffs.clone()))
    }

    /// True iff `other ⊆ self` as point sets.
    pub fn contains(&self, other: &Subspace) -> bool {
        debug_assert_eq!(self.ambient, other.ambient);
        self.forms.iter().all(|r| is_zero_row(&reduce(&other.forms, &other.pivots, r.clone())))
    }

    /// If this subspace is a hyperplane, its normalized defining form.
    pub fn as_hyperplane(&self) -> Option<LinearForm> {
        (self.codim() == 1).then(|| LinearForm { coeffs: self.forms[0].clone() })
    }

    /// Coefficients `c` with `v = Σ c_i forms[i]`, when `v` lies in the row space.
    pub fn row_coordinates(&self, v: &[Cyclo]) -> Option<Row> {
        if !is_zero_row(&reduce(&self.forms, &self.pivots, v.to_vec())) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

fn kernel_basis(r: &Rref, ncols: usize, order: u32) -> Vec<Row> {
    let mut out = Vec::new();
    let mut pivot_iter = r.pivots.iter().peekable();
    for free in 0..ncols {
        if pivot_iter.peek() == Some(&&free) {
            pivot_iter.next();
            continue;
        }
        let mut v = vec![Cyclo::zero(order); ncols];
        v[free] = Cyclo::one(order);
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            if !row[free].is_zero() {
                v[p] = -&row[free];
            }
        }
        out.push(v);
    }
    out
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace[{}; codim {}]{{", self.ambient, self.codim())?;
        for (i, r) in self.forms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_form(r))?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.forms.is_empty() {
            return f.write_str("V");
        }
        let parts: Vec<String> = self.forms.iter().map(|r| format!("H[{}]", format_form(r))).collect();
        f.write_str(&parts.join(" ∩ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(order: u32, v: &[i64]) -> Row {
        v.iter().map(|&x| Cyclo::from_int(order, x)).collect()
    }

    fn form(v: &[i64]) -> LinearForm {
        LinearForm::new(row(1, v)).unwrap()
    }

    #[test]
    fn rref_identity_and_multiples() {
        let id = vec![row(1, &[1, 0, 0]), row(1, &[0, 1, 0]), row(1, &[0, 0, 1])];
        let r = rref(id.clone(), 3);
        assert_eq!(r.rows, id);
        assert_eq!(r.rank(), 3);

        let r = rref(vec![row(1, &[2, 4, 6]), row(1, &[1, 2, 3])], 3);
        assert_eq!(r.rows, vec![row(1, &[1, 2, 3])]);
    }

    #[test]
    fn rref_hand_elimination() {
        let r = rref(vec![row(1, &[1, 1, 0]), row(1, &[0, 1, 1]), row(1, &[1, 0, -1])], 3);
        assert_eq!(r.rank(), 2);
        assert_eq!(r.rows, vec![row(1, &[1, 0, -1]), row(1, &[0, 1, 1])]);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn forms_normalize() {
        let f = form(&[0, -2, 4]);
        assert_eq!(f.coeffs(), row(1, &[0, 1, -2]).as_slice());
        assert!(LinearForm::new(row(1, &[0, 0])).is_err());
        assert_eq!(f.display(), "b - 2*c");
    }

    #[test]
    fn subspaces_from_forms() {
        let v = Subspace::from_forms(4, 1, &[]).unwrap();
        assert_eq!(v.codim(), 0);
        let x1 = Subspace::from_forms(4, 1, &[form(&[1, 0, 0, 0]), form(&[0, 1, 0, 0])]).unwrap();
        assert_eq!(x1.codim(), 2);
        let dep = Subspace::from_forms(3, 1, &[form(&[1, -1, 0]), form(&[0, 1, -1]), form(&[1, 0, -1])]).unwrap();
        assert_eq!(dep.codim(), 2);
    }

    #[test]
    fn intersections_and_sums() {
        let v = Subspace::whole(4, 1);
        let o = Subspace::origin(4, 1);
        let x = Subspace::from_forms(4, 1, &[form(&[1, -1, 0, 0]), form(&[0, 1, -1, 0])]).unwrap();
        assert_eq!(x.intersect(&v).unwrap(), x);
        assert_eq!(x.intersect(&x).unwrap(), x);
        assert_eq!(x.codim(), 2);
        assert_eq!(x.sum(&v).unwrap(), v);
        assert_eq!(x.sum(&o).unwrap(), x);
        assert_eq!(x.sum_codim(&o), 2);
        assert_eq!(x.sum_codim(&v), 0);
    }

    #[test]
    fn containment() {
        let h = Subspace::from_forms(3, 1, &[form(&[1, 0, 0])]).unwrap();
        let hh = Subspace::from_forms(3, 1, &[form(&[1, 0, 0]), form(&[0, 1, 1])]).unwrap();
        assert!(h.contains(&hh));
        assert!(!hh.contains(&h));
        assert!(Subspace::whole(3, 1).contains(&h));
        let ha = Subspace::from_forms(2, 1, &[form(&[1, 0])]).unwrap();
        let hb = Subspace::from_forms(2, 1, &[form(&[0, 1])]).unwrap();
        assert!(!ha.contains(&hb));
    }

    #[test]
    fn ambient_mismatch() {
        let a = Subspace::whole(2, 1);
        let b = Subspace::whole(3, 1);
        assert!(matches!(a.intersect(&b), Err(Error::AmbientMismatch { .. })));
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch { .. })));
    }
}
