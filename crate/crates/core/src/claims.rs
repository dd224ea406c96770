//! Table of explicit non-modularity equations X + Y = H ∉ A for the
//! exceptional and G(r,r,4) arrangements, and a runner that re-derives each
//! one alongside the exhaustive rank-2 checks and the rank-2 criterion.

use crate::analysis::{check_rank2_criterion_limited, modular_flats_of_rank, replay_witness, ReplayOutcome};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::lattice::build_lattice_limited;
use crate::parse::{parse_form, Constants};
use crate::reflection::{catalog, constants_for, lookup, Named};

/// One equation X + Y = H: X and Y are given by defining forms, H by its form.
#[derive(Clone, Copy, Debug)]
pub struct WitnessClaim {
    pub id: &'static str,
    pub arrangement: &'static str,
    pub x: &'static [&'static str],
    pub y: &'static [&'static str],
    pub sum: &'static str,
}

macro_rules! claim {
    ($id:literal, $arr:literal, [$($x:literal),*], [$($y:literal),*], $sum:literal) => {
        WitnessClaim { id: $id, arrangement: $arr, x: &[$($x),*], y: &[$($y),*], sum: $sum }
    };
}

pub const WITNESS_CLAIMS: &[WitnessClaim] = &[
    claim!("D4-1", "D4", ["a + b", "a - b"], ["b + d", "b - d"], "b"),
    claim!("D4-2", "D4", ["a - b", "b - c"], ["a + b", "c - d", "c + d"], "a + b - 2c"),
    claim!("F4-1", "F4", ["a", "b"], ["c + d", "a + 2b + 2c + 2d"], "a + 2b"),
    claim!("F4-2", "F4", ["c", "d"], ["a + 2b + 3c + d", "a + 2b + 2c + 2d"], "c - d"),
    claim!("F4-3", "F4", ["a", "b + c"], ["b", "a + b + c + d", "a + 2b + 4c + 2d"], "a - 2b - 2c"),
    claim!("H3-1", "H3", ["a", "b"], ["c", "a - 2*(w + 1)*b - (w + 1)*c"], "a - 2*(w + 1)*b"),
    claim!("H3-2", "H3", ["a", "a - w*b - (w + 1)*c"], ["a + b", "a - w*b + c"], "2a - (w - 1)*b + c"),
    claim!("G25-1", "G25", ["a", "b"], ["c", "a + b + c"], "a + b"),
    claim!("G26-1", "G26", ["c", "a + z*b + c"], ["a", "b"], "a + z*b"),
    claim!("G26-2", "G26", ["b", "a - z*c"], ["a - b", "b - z^2*c"], "a - (z + 2)*b - z*c"),
    claim!("G(3,3,4)-1", "G(3,3,4)", ["a - b", "c - d"], ["b - c", "a - d"], "a - b + c - d"),
    claim!("G(4,4,4)-1", "G(4,4,4)", ["a - b", "c - d"], ["b - c", "a - d"], "a - b + c - d"),
    claim!(
        "G29-1",
        "G29",
        ["a - b + i*c + i*d", "a + i*b - c - i*d"],
        ["a + i*b - i*c + d", "b - d"],
        "a + (2i - 1)*b - i*c - (i - 2)*d"
    ),
    claim!("G31-1", "G31", ["a", "b - c"], ["a + i*d", "a + b - c - d"], "2a + (1 + i)*b - (1 + i)*c"),
    claim!("G31-2", "G31", ["a", "a + i*b"], ["a - b - c - d", "a - i*c", "a - b - c + d"], "2a + (i - 1)*b"),
];

/// Arrangements with no modular flat of rank 2.
pub const NO_MODULAR_RANK2: &[&str] = &[
    "D4", "F4", "H3", "G25", "G26", "G29", "G31", "G(3,3,3)", "G(4,4,3)", "G(5,5,3)", "G(3,3,4)", "G(4,4,4)",
    "G(3,3,5)", "G(2,2,5)", "G(2,2,6)",
];

fn constants_of(named: &Named) -> Result<Constants> {
    match named {
        Named::Exceptional(name) => constants_for(name),
        _ => Ok(Constants::new()),
    }
}

/// Builds the claim's arrangement and recomputes X + Y.
pub fn replay_claim(claim: &WitnessClaim) -> Result<(Arrangement, ReplayOutcome)> {
    let named = lookup(claim.arrangement)?;
    let arr = named.build()?;
    let consts = constants_of(&named)?;
    let (l, n) = (arr.ambient(), arr.order());
    let forms = |list: &[&str]| list.iter().map(|f| parse_form(f, l, n, &consts)).collect::<Result<Vec<_>>>();
    let x = forms(claim.x)?;
    let y = forms(claim.y)?;
    let sum = parse_form(claim.sum, l, n, &consts)?;
    let outcome = replay_witness(&arr, &x, &y, Some(&sum))?;
    Ok((arr, outcome))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClaimKind {
    Witness,
    NoModularRank2,
    Rank2Criterion,
}

impl ClaimKind {
    pub fn label(self) -> &'static str {
        match self {
            ClaimKind::Witness => "witness",
            ClaimKind::NoModularRank2 => "no-modular-rank-2",
            ClaimKind::Rank2Criterion => "rank-2-criterion",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: String,
    pub kind: ClaimKind,
    pub arrangement: String,
    pub passed: bool,
    pub detail: String,
}

/// Which claims to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Kind(ClaimKind),
    Arrangement(Named),
}

impl Scope {
    /// `all`, `witnesses`, `rank2`, `criterion`, or an arrangement name.
    pub fn parse(text: &str) -> Result<Scope> {
        match text.trim().to_ascii_lowercase().as_str() {
            "all" => Ok(Scope::All),
            "witness" | "witnesses" => Ok(Scope::Kind(ClaimKind::Witness)),
            "rank2" | "emptiness" => Ok(Scope::Kind(ClaimKind::NoModularRank2)),
            "criterion" => Ok(Scope::Kind(ClaimKind::Rank2Criterion)),
            _ => Ok(Scope::Arrangement(lookup(text)?)),
        }
    }

    fn admits(&self, kind: ClaimKind, arrangement: &str) -> bool {
        match self {
            Scope::All => true,
            Scope::Kind(k) => *k == kind,
            Scope::Arrangement(named) => lookup(arrangement).map(|n| &n == named).unwrap_or(false),
        }
    }
}

fn witness_result(claim: &WitnessClaim) -> ClaimResult {
    let (passed, detail) = match replay_claim(claim) {
        Ok((_, o)) => {
            let detail = format!(
                "({}) + ({}) = {}; X flat {}, Y flat {}, sum = H {}, H ∉ A {}, X+Y ∉ L {}",
                o.x,
                o.y,
                o.sum,
                o.x_is_flat,
                o.y_is_flat,
                o.matches_expected.unwrap_or(false),
                o.expected_not_in_arrangement.unwrap_or(false),
                o.sum_not_in_lattice,
            );
            (o.passed(), detail)
        }
        Err(e) => (false, format!("error: {e}")),
    };
    ClaimResult {
        id: claim.id.to_string(),
        kind: ClaimKind::Witness,
        arrangement: claim.arrangement.to_string(),
        passed,
        detail,
    }
}

fn emptiness_result(name: &str, max_flats: usize) -> ClaimResult {
    let run = || -> Result<(bool, String)> {
        let arr = lookup(name)?.build()?;
        let lattice = build_lattice_limited(&arr, max_flats)?;
        let verdicts = modular_flats_of_rank(&lattice, 2)?;
        let modular: Vec<String> =
            verdicts.iter().filter(|v| v.modular).map(|v| v.flat.subspace().to_string()).collect();
        let detail = if modular.is_empty() {
            format!("0 of {} rank-2 flats modular", verdicts.len())
        } else {
            format!("modular rank-2 flats: {}", modular.join("; "))
        };
        Ok((modular.is_empty(), detail))
    };
    let (passed, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
    ClaimResult {
        id: format!("{name}-rank2"),
        kind: ClaimKind::NoModularRank2,
        arrangement: name.to_string(),
        passed,
        detail,
    }
}

fn criterion_result(name: &str, expected: bool, max_flats: usize) -> ClaimResult {
    let run = || -> Result<(bool, String)> {
        let arr = lookup(name)?.build()?;
        let report = check_rank2_criterion_limited(&arr, max_flats)?;
        let detail = format!(
            "supersolvable {}, modular rank-2 flat {}, expected {}",
            report.supersolvable, report.has_modular_rank2, expected
        );
        Ok((report.agrees() && report.supersolvable == expected, detail))
    };
    let (passed, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
    ClaimResult {
        id: format!("{name}-criterion"),
        kind: ClaimKind::Rank2Criterion,
        arrangement: name.to_string(),
        passed,
        detail,
    }
}

/// Runs every claim admitted by `scope`, in table order.
pub fn verify(scope: &Scope, max_flats: usize) -> Result<Vec<ClaimResult>> {
    let mut out = Vec::new();
    for claim in WITNESS_CLAIMS.iter().filter(|c| scope.admits(ClaimKind::Witness, c.arrangement)) {
        out.push(witness_result(claim));
    }
    for name in NO_MODULAR_RANK2.iter().filter(|n| scope.admits(ClaimKind::NoModularRank2, n)) {
        out.push(emptiness_result(name, max_flats));
    }
    for entry in catalog().iter().filter(|e| scope.admits(ClaimKind::Rank2Criterion, &e.name)) {
        out.push(criterion_result(&entry.name, entry.supersolvable, max_flats));
    }
    if out.is_empty() {
        return Err(Error::UnknownArrangement(format!("no claims in scope {scope:?}")));
    }
    Ok(out)
}
