//! Reflection arrangements: the monomial families G(r,p,ℓ) and explicit
//! hyperplane lists for D4, F4, H3, G25, G26, G29 and G31.

use crate::arrangement::Arrangement;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::parse::{parse_row, parse_scalar, Constants};

/// Hyperplanes `x_i = 0` (only when p ≠ r and r ≥ 2), then
/// `x_i − ζ_r^m x_j` ordered by (i, j, m), over Q(ζ_r).
pub fn monomial_arrangement(r: u32, p: u32, ell: usize) -> Result<Arrangement> {
    if r == 0 || p == 0 || !r.is_multiple_of(p) {
        return Err(Error::InvalidHyperplane(format!("G({r},{p},{ell}) needs p dividing r")));
    }
    let zero = || vec![Cyclo::zero(r); ell];
    let mut forms = Vec::new();
    if p != r && r >= 2 {
        for i in 0..ell {
            let mut row = zero();
            row[i] = Cyclo::one(r);
            forms.push(row);
        }
    }
    for i in 0..ell {
        for j in i + 1..ell {
            for m in 0..r {
                let mut row = zero();
                row[i] = Cyclo::one(r);
                row[j] = -Cyclo::root_of_unity(r, m as i64)?;
                forms.push(row);
            }
        }
    }
    Arrangement::new(ell, r, forms)
}

/// The coordinate hyperplanes of C^ℓ.
pub fn boolean_arrangement(ell: usize) -> Arrangement {
    let forms = (0..ell).map(|i| (0..ell).map(|j| Cyclo::from_int(1, (i == j) as i64)).collect()).collect();
    Arrangement::new(ell, 1, forms).expect("coordinate forms are valid")
}

struct Exceptional {
    name: &'static str,
    order: u32,
    constants: &'static [(&'static str, &'static str)],
    forms: &'static [&'static str],
}

const D4: &[&str] =
    &["a - b", "a + b", "a - c", "a + c", "a - d", "a + d", "b - c", "b + c", "b - d", "b + d", "c - d", "c + d"];

const F4: &[&str] = &[
    "a",
    "b",
    "c",
    "d",
    "a + b",
    "b + c",
    "c + d",
    "b + 2c",
    "a + b + c",
    "b + c + d",
    "a + b + 2c",
    "a + b + c + d",
    "b + 2c + d",
    "a + 2b + 2c",
    "a + b + 2c + d",
    "b + 2c + 2d",
    "a + 2b + 2c + d",
    "a + b + 2c + 2d",
    "a + 2b + 3c + d",
    "a + 2b + 2c + 2d",
    "a + 2b + 3c + 2d",
    "a + 2b + 4c + 2d",
    "a + 3b + 4c + 2d",
    "2a + 3b + 4c + 2d",
];

const H3: &[&str] = &[
    "a",
    "b",
    "c",
    "a - w*b",
    "a - (w + 1)*b",
    "b + c",
    "a + b",
    "a - w*b - w*c",
    "a - (w + 1)*b - (w + 1)*c",
    "a + b + c",
    "a - w*b - (w + 1)*c",
    "a - w*b + c",
    "a + b + (w + 2)*c",
    "a + b - (w + 1)*c",
    "a - 2*(w + 1)*b - (w + 1)*c",
];

const G25: &[&str] = &[
    "a",
    "b",
    "c",
    "a + b + c",
    "a + b + z*c",
    "a + b + z^2*c",
    "a + z*b + c",
    "a + z*b + z*c",
    "a + z*b + z^2*c",
    "a + z^2*b + c",
    "a + z^2*b + z*c",
    "a + z^2*b + z^2*c",
];

const G26: &[&str] = &[
    "a",
    "b",
    "c",
    "a - b",
    "a - c",
    "b - c",
    "a - z*b",
    "a - z^2*b",
    "a - z*c",
    "a - z^2*c",
    "b - z*c",
    "b - z^2*c",
    "a + b + c",
    "a + b + z*c",
    "a + b + z^2*c",
    "a + z*b + c",
    "a + z*b + z*c",
    "a + z*b + z^2*c",
    "a + z^2*b + c",
    "a + z^2*b + z*c",
    "a + z^2*b + z^2*c",
];

const G29: &[&str] = &[
    "a",
    "b",
    "c",
    "d",
    "a - b",
    "a - c",
    "a - d",
    "b - c",
    "b - d",
    "c - d",
    "a + c",
    "a + b",
    "a + d",
    "b + c",
    "b + d",
    "c + d",
    "a - b + i*c + i*d",
    "a - b + i*c - i*d",
    "a - b - i*c - i*d",
    "a - b - i*c + i*d",
    "a + b + i*c + i*d",
    "a + b - i*c - i*d",
    "a + b - i*c + i*d",
    "a + b + i*c - i*d",
    "a - i*b + i*c + d",
    "a - i*b - c - i*d",
    "a - i*b - c + i*d",
    "a - i*b + i*c - d",
    "a - i*b - i*c + d",
    "a - i*b + c - i*d",
    "a - i*b - i*c - d",
    "a + i*b - c + i*d",
    "a + i*b - c - i*d",
    "a + i*b - i*c + d",
    "a + i*b - i*c - d",
    "a + i*b + c + i*d",
    "a + i*b + i*c + d",
    "a + i*b + i*c - d",
    "a - i*b + c + i*d",
    "a + i*b + c - i*d",
];

const G31: &[&str] = &[
    "a",
    "b",
    "c",
    "d",
    "a - b",
    "a - c",
    "a - d",
    "b - c",
    "b - d",
    "c - d",
    "a + b",
    "a + c",
    "a + d",
    "b + c",
    "b + d",
    "c + d",
    "a - i*b",
    "a - i*c",
    "a - i*d",
    "b - i*c",
    "b - i*d",
    "c - i*d",
    "a + i*b",
    "a + i*c",
    "a + i*d",
    "b + i*c",
    "b + i*d",
    "c + i*d",
    "a - b - c - d",
    "a - b + c + d",
    "a - b + c - d",
    "a - b - c + d",
    "a + b + c + d",
    "a + b - c + d",
    "a + b - c - d",
    "a + b + c - d",
    "a - b - i*c - i*d",
    "a - b + i*c + i*d",
    "a - b - i*c + i*d",
    "a - b + i*c - i*d",
    "a + b - i*c - i*d",
    "a + b + i*c + i*d",
    "a + b + i*c - i*d",
    "a + b - i*c + i*d",
    "a - i*b - c - i*d",
    "a - i*b + c - i*d",
    "a - i*b - c + i*d",
    "a - i*b + c + i*d",
    "a - i*b + i*c + d",
    "a - i*b + i*c - d",
    "a - i*b - i*c + d",
    "a - i*b - i*c - d",
    "a + i*b + c - i*d",
    "a + i*b - c - i*d",
    "a + i*b - c + i*d",
    "a + i*b + c + i*d",
    "a + i*b - i*c + d",
    "a + i*b - i*c - d",
    "a + i*b + i*c - d",
    "a + i*b + i*c + d",
];

const GOLDEN: &[(&str, &str)] = &[("w", "z^2 + z^3")];

const EXCEPTIONAL: &[Exceptional] = &[
    Exceptional { name: "D4", order: 1, constants: &[], forms: D4 },
    Exceptional { name: "F4", order: 1, constants: &[], forms: F4 },
    Exceptional { name: "H3", order: 5, constants: GOLDEN, forms: H3 },
    Exceptional { name: "G25", order: 3, constants: &[], forms: G25 },
    Exceptional { name: "G26", order: 3, constants: &[], forms: G26 },
    Exceptional { name: "G29", order: 4, constants: &[], forms: G29 },
    Exceptional { name: "G31", order: 4, constants: &[], forms: G31 },
];

pub const EXCEPTIONAL_NAMES: &[&str] = &["D4", "F4", "H3", "G25", "G26", "G29", "G31"];

fn exceptional_data(name: &str) -> Result<&'static Exceptional> {
    EXCEPTIONAL.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownArrangement(name.to_string()))
}

/// Named constants used when writing forms over the given exceptional
/// arrangement's field (`w` = ζ5² + ζ5³ for H3).
pub fn constants_for(name: &str) -> Result<Constants> {
    let data = exceptional_data(name)?;
    let mut consts = Constants::new();
    for (k, v) in data.constants {
        let value = parse_scalar(v, data.order, &consts)?;
        consts.insert(k.to_string(), value);
    }
    Ok(consts)
}

pub fn exceptional_arrangement(name: &str) -> Result<Arrangement> {
    let data = exceptional_data(name)?;
    let consts = constants_for(name)?;
    let rows = data
        .forms
        .iter()
        .map(|f| parse_row(f, data.forms_ambient(), data.order, &consts))
        .collect::<Result<Vec<_>>>()?;
    Arrangement::new(data.forms_ambient(), data.order, rows)
}

impl Exceptional {
    fn forms_ambient(&self) -> usize {
        match self.name {
            "H3" | "G25" | "G26" => 3,
            _ => 4,
        }
    }
}

/// A resolved arrangement name, validated without building anything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Named {
    Monomial { r: u32, p: u32, ell: usize },
    Exceptional(&'static str),
    Boolean(usize),
    Empty(usize),
}

impl Named {
    pub fn build(&self) -> Result<Arrangement> {
        match *self {
            Named::Monomial { r, p, ell } => monomial_arrangement(r, p, ell),
            Named::Exceptional(name) => exceptional_arrangement(name),
            Named::Boolean(ell) => Ok(boolean_arrangement(ell)),
            Named::Empty(ell) => Ok(Arrangement::empty(ell, 1)),
        }
    }
}

/// Accepts `G(r,p,l)`, `A(n)`/`An` (braid, G(1,1,n+1)), `B(n)`/`Bn`,
/// `D(n)`/`Dn`, `I2(m)`, `Boolean(n)`, `Empty(n)` and the exceptional names.
pub fn lookup(name: &str) -> Result<Named> {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let unknown = || Error::UnknownArrangement(name.to_string());
    if let Some(&e) = EXCEPTIONAL_NAMES.iter().find(|e| e.eq_ignore_ascii_case(&compact)) {
        return Ok(Named::Exceptional(e));
    }
    let (head, args) = match compact.find('(') {
        Some(k) if compact.ends_with(')') => {
            let args: Vec<u64> = compact[k + 1..compact.len() - 1]
                .split(',')
                .map(|s| s.parse::<u64>().map_err(|_| unknown()))
                .collect::<Result<_>>()?;
            (compact[..k].to_string(), args)
        }
        Some(_) => return Err(unknown()),
        None => {
            let split = compact.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
            let n = compact[split..].parse::<u64>().map_err(|_| unknown())?;
            (compact[..split].to_string(), vec![n])
        }
    };
    let small = |v: u64| u32::try_from(v).map_err(|_| unknown());
    let named = match (head.to_ascii_uppercase().as_str(), args.as_slice()) {
        ("G", &[r, p, l]) => Named::Monomial { r: small(r)?, p: small(p)?, ell: l as usize },
        ("A", &[n]) => Named::Monomial { r: 1, p: 1, ell: n as usize + 1 },
        ("B", &[n]) => Named::Monomial { r: 2, p: 1, ell: n as usize },
        ("D", &[n]) => Named::Monomial { r: 2, p: 2, ell: n as usize },
        ("I", &[2, m]) => Named::Monomial { r: small(m)?, p: small(m)?, ell: 2 },
        ("I2", &[m]) => Named::Monomial { r: small(m)?, p: small(m)?, ell: 2 },
        ("BOOLEAN", &[n]) => Named::Boolean(n as usize),
        ("EMPTY", &[n]) => Named::Empty(n as usize),
        _ => return Err(unknown()),
    };
    if let Named::Monomial { r, p, ell } = named {
        if r == 0 || p == 0 || r % p != 0 || ell == 0 {
            return Err(unknown());
        }
    }
    Ok(named)
}

pub fn arrangement_by_name(name: &str) -> Result<Arrangement> {
    lookup(name)?.build()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub ambient: usize,
    pub field_order: u32,
    pub expected_count: usize,
    /// Known classification of the reflection arrangement.
    pub supersolvable: bool,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<Arrangement> {
        arrangement_by_name(&self.name)
    }
}

fn monomial_entry(r: u32, p: u32, ell: usize) -> CatalogEntry {
    let pairs = ell * (ell - 1) / 2;
    let coords = if p != r && r >= 2 { ell } else { 0 };
    CatalogEntry {
        name: format!("G({r},{p},{ell})"),
        ambient: ell,
        field_order: r,
        expected_count: r as usize * pairs + coords,
        // G(r,r,ℓ) for r, ℓ ≥ 3 and D_ℓ for ℓ ≥ 4 are not supersolvable;
        // rank ≤ 2 always is.
        supersolvable: p != r || r == 1 || ell <= 2 || (r == 2 && ell <= 3),
    }
}

/// All named arrangements used by the verification suite.
pub fn catalog() -> Vec<CatalogEntry> {
    let exceptional = [
        ("D4", 4, 1, 12),
        ("F4", 4, 1, 24),
        ("H3", 3, 5, 15),
        ("G25", 3, 3, 12),
        ("G26", 3, 3, 21),
        ("G29", 4, 4, 40),
        ("G31", 4, 4, 60),
    ];
    let mut out: Vec<CatalogEntry> = exceptional
        .iter()
        .map(|&(name, ambient, field_order, expected_count)| CatalogEntry {
            name: name.to_string(),
            ambient,
            field_order,
            expected_count,
            supersolvable: false,
        })
        .collect();
    for r in 1..=4 {
        for ell in 3..=5 {
            out.push(monomial_entry(r, 1, ell));
        }
    }
    for (r, ell) in [(3, 3), (4, 3), (5, 3), (3, 4), (4, 4), (3, 5), (2, 5), (2, 6)] {
        out.push(monomial_entry(r, r, ell));
    }
    for (r, p) in [(2, 1), (3, 1), (4, 4), (5, 5)] {
        out.push(monomial_entry(r, p, 2));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_arrangement(1, 1, 3).unwrap().len(), 3);
        assert_eq!(monomial_arrangement(2, 1, 3).unwrap().len(), 9);
        assert_eq!(monomial_arrangement(2, 2, 4).unwrap().len(), 12);
        assert_eq!(monomial_arrangement(4, 2, 3).unwrap().len(), 15);
        assert!(monomial_arrangement(4, 3, 3).is_err());
    }

    #[test]
    fn d4_matches_monomial() {
        let a = exceptional_arrangement("D4").unwrap();
        let b = monomial_arrangement(2, 2, 4).unwrap().embed(2).unwrap();
        let a = a.embed(2).unwrap();
        assert_eq!(a.len(), b.len());
        assert!(a.hyperplanes().iter().all(|h| b.index_of(h).is_some()));
    }

    #[test]
    fn exceptional_counts() {
        for (name, n) in [("D4", 12), ("F4", 24), ("H3", 15), ("G25", 12), ("G26", 21), ("G29", 40), ("G31", 60)] {
            let a = exceptional_arrangement(name).unwrap();
            assert_eq!(a.len(), n, "{name}");
            assert_eq!(a.duplicates_removed(), 0, "{name}");
        }
        assert!(exceptional_arrangement("E8").is_err());
    }

    #[test]
    fn names() {
        assert_eq!(lookup("G(3,1,3)").unwrap(), Named::Monomial { r: 3, p: 1, ell: 3 });
        assert_eq!(lookup("A(3)").unwrap(), Named::Monomial { r: 1, p: 1, ell: 4 });
        assert_eq!(lookup("B3").unwrap(), Named::Monomial { r: 2, p: 1, ell: 3 });
        assert_eq!(lookup("d5").unwrap(), Named::Monomial { r: 2, p: 2, ell: 5 });
        assert_eq!(lookup("g31").unwrap(), Named::Exceptional("G31"));
        assert_eq!(lookup("I2(5)").unwrap(), Named::Monomial { r: 5, p: 5, ell: 2 });
        assert!(lookup("G(4,3,3)").is_err());
        assert!(lookup("E8").is_err());
        assert!(lookup("G(3,1").is_err());
    }

    #[test]
    fn catalog_contents() {
        let cat = catalog();
        let get = |n: &str| cat.iter().find(|e| e.name == n).unwrap().clone();
        assert_eq!(get("G25").expected_count, 12);
        assert_eq!(get("G26").expected_count, 21);
        assert_eq!(get("G29").expected_count, 40);
        assert!(get("G(3,1,4)").supersolvable);
        assert!(!get("G(3,3,4)").supersolvable);
        assert!(get("G(4,4,2)").supersolvable);
    }
}
