//! Serializable reports. Field elements are arrays of rational strings in
//! the power basis of Q(ζ_n); every flat carries its defining forms so a
//! reader can re-check each claim with subspace sums and closures alone.

use std::fmt::Write as _;

use serde::Serialize;

use hyperlat::analysis::{ModularityVerdict, Rank2Report, Refutation, SupersolvabilityCertificate};
use hyperlat::claims::ClaimResult;
use hyperlat::{Arrangement, Cyclo, Flat, LinearForm, Subspace};

#[derive(Serialize)]
pub struct FormDto {
    pub text: String,
    pub coefficients: Vec<Vec<String>>,
}

impl FormDto {
    fn from_coeffs(coeffs: &[Cyclo]) -> Self {
        let form = LinearForm::new(coeffs.to_vec()).expect("stored forms are nonzero");
        FormDto { text: form.display(), coefficients: coeffs.iter().map(Cyclo::to_strings).collect() }
    }
}

#[derive(Serialize)]
pub struct SubspaceDto {
    pub codim: usize,
    pub equations: Vec<FormDto>,
}

impl SubspaceDto {
    pub fn new(x: &Subspace) -> Self {
        SubspaceDto { codim: x.codim(), equations: x.forms().iter().map(|r| FormDto::from_coeffs(r)).collect() }
    }

    fn text(&self) -> String {
        if self.equations.is_empty() {
            return "V".into();
        }
        let eqs: Vec<String> = self.equations.iter().map(|e| format!("{} = 0", e.text)).collect();
        format!("{{{}}}", eqs.join(", "))
    }
}

#[derive(Serialize)]
pub struct FlatDto {
    pub rank: usize,
    pub support: Vec<usize>,
    pub equations: Vec<FormDto>,
}

impl FlatDto {
    pub fn new(flat: &Flat) -> Self {
        FlatDto {
            rank: flat.rank(),
            support: flat.support().to_vec(),
            equations: flat.subspace().forms().iter().map(|r| FormDto::from_coeffs(r)).collect(),
        }
    }

    fn text(&self) -> String {
        if self.equations.is_empty() {
            return "V".into();
        }
        let eqs: Vec<String> = self.equations.iter().map(|e| format!("{} = 0", e.text)).collect();
        format!("{{{}}} support {:?}", eqs.join(", "), self.support)
    }
}

#[derive(Serialize)]
pub struct ArrangementDto {
    pub source: String,
    pub ambient: usize,
    pub field_order: u32,
    pub hyperplanes: usize,
    pub duplicates_removed: usize,
    pub rank: usize,
    pub essential: bool,
    pub content_hash: String,
    pub forms: Vec<FormDto>,
}

impl ArrangementDto {
    pub fn new(source: &str, arr: &Arrangement) -> Self {
        ArrangementDto {
            source: source.to_string(),
            ambient: arr.ambient(),
            field_order: arr.order(),
            hyperplanes: arr.len(),
            duplicates_removed: arr.duplicates_removed(),
            rank: arr.rank(),
            essential: arr.is_essential(),
            content_hash: arr.content_hash(),
            forms: arr.hyperplanes().iter().map(|h| FormDto::from_coeffs(h.coeffs())).collect(),
        }
    }

    fn render(&self, out: &mut String, with_forms: bool) {
        let _ = writeln!(out, "arrangement: {}", self.source);
        let field = match self.field_order {
            1 | 2 => "Q".to_string(),
            n => format!("Q(zeta_{n})"),
        };
        let _ = writeln!(
            out,
            "  ambient {}, field {field}, {} hyperplanes, rank {}, essential {}",
            self.ambient, self.hyperplanes, self.rank, self.essential
        );
        if self.duplicates_removed > 0 {
            let _ = writeln!(out, "  duplicates removed: {}", self.duplicates_removed);
        }
        let _ = writeln!(out, "  content hash: {}", self.content_hash);
        if with_forms {
            for (i, f) in self.forms.iter().enumerate() {
                let _ = writeln!(out, "  H{i}: {}", f.text);
            }
        }
    }
}

#[derive(Serialize)]
pub struct WitnessDto {
    pub other: FlatDto,
    pub sum: SubspaceDto,
}

#[derive(Serialize)]
pub struct VerdictDto {
    pub flat: FlatDto,
    pub modular: bool,
    pub witness: Option<WitnessDto>,
}

impl VerdictDto {
    pub fn new(v: &ModularityVerdict) -> Self {
        VerdictDto {
            flat: FlatDto::new(&v.flat),
            modular: v.modular,
            witness: v
                .witness
                .as_ref()
                .map(|w| WitnessDto { other: FlatDto::new(&w.other), sum: SubspaceDto::new(&w.sum) }),
        }
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "  {} {}", if self.modular { "modular    " } else { "not modular" }, self.flat.text());
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "      Y = {}", w.other.text());
            let _ = writeln!(out, "      X + Y = {} (codim {}) is not a flat", w.sum.text(), w.sum.codim);
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RefutationDto {
    NoModularFlat { rank: usize, verdicts: Vec<VerdictDto> },
    NoChain { modular_by_rank: Vec<Vec<FlatDto>> },
}

#[derive(Serialize)]
pub struct CertificateDto {
    pub supersolvable: bool,
    pub essentialized: bool,
    pub certified_arrangement: Option<ArrangementDto>,
    pub chain: Option<Vec<FlatDto>>,
    pub refutation: Option<RefutationDto>,
}

impl CertificateDto {
    pub fn new(source: &str, cert: &SupersolvabilityCertificate) -> Self {
        CertificateDto {
            supersolvable: cert.supersolvable,
            essentialized: cert.essentialized,
            certified_arrangement: cert
                .essentialized
                .then(|| ArrangementDto::new(&format!("essentialization of {source}"), &cert.arrangement)),
            chain: cert.chain.as_ref().map(|c| c.iter().map(FlatDto::new).collect()),
            refutation: cert.refutation.as_ref().map(|r| match r {
                Refutation::NoModularFlat { rank, verdicts } => RefutationDto::NoModularFlat {
                    rank: *rank,
                    verdicts: verdicts.iter().map(VerdictDto::new).collect(),
                },
                Refutation::NoChain { modular } => RefutationDto::NoChain {
                    modular_by_rank: modular.iter().map(|l| l.iter().map(FlatDto::new).collect()).collect(),
                },
            }),
        }
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "supersolvable: {}", self.supersolvable);
        if let Some(a) = &self.certified_arrangement {
            let _ = writeln!(out, "input is not essential; certificate refers to its essentialization:");
            a.render(out, true);
        }
        if let Some(chain) = &self.chain {
            let _ = writeln!(out, "modular chain ({} flats):", chain.len());
            for x in chain {
                let _ = writeln!(out, "  rank {}: {}", x.rank, x.text());
            }
        }
        match &self.refutation {
            Some(RefutationDto::NoModularFlat { rank, verdicts }) => {
                let _ = writeln!(out, "no modular flat of rank {rank} ({} flats checked):", verdicts.len());
                for v in verdicts {
                    v.render(out);
                }
            }
            Some(RefutationDto::NoChain { modular_by_rank }) => {
                let sizes: Vec<usize> = modular_by_rank.iter().map(Vec::len).collect();
                let _ = writeln!(out, "modular flats exist at every rank (counts {sizes:?}) but no chain links them");
            }
            None => {}
        }
    }
}

#[derive(Serialize)]
pub struct CriterionDto {
    pub supersolvable: bool,
    pub has_modular_rank2: bool,
    pub agrees: bool,
    pub modular_rank2: Vec<FlatDto>,
}

impl CriterionDto {
    pub fn new(r: &Rank2Report) -> Self {
        CriterionDto {
            supersolvable: r.supersolvable,
            has_modular_rank2: r.has_modular_rank2,
            agrees: r.agrees(),
            modular_rank2: r.rank2.iter().filter(|v| v.modular).map(|v| FlatDto::new(&v.flat)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ClaimDto {
    pub id: String,
    pub kind: &'static str,
    pub arrangement: String,
    pub passed: bool,
    pub detail: String,
}

impl ClaimDto {
    pub fn new(c: &ClaimResult) -> Self {
        ClaimDto {
            id: c.id.clone(),
            kind: c.kind.label(),
            arrangement: c.arrangement.clone(),
            passed: c.passed,
            detail: c.detail.clone(),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Build {
        arrangement: ArrangementDto,
    },
    Lattice {
        arrangement: ArrangementDto,
        level_sizes: Vec<usize>,
        total_flats: usize,
    },
    Modular {
        arrangement: ArrangementDto,
        rank: usize,
        flats: usize,
        modular: usize,
        verdicts: Vec<VerdictDto>,
    },
    Supersolvable {
        arrangement: ArrangementDto,
        certificate: CertificateDto,
        #[serde(skip_serializing_if = "Option::is_none")]
        rank2_criterion: Option<CriterionDto>,
    },
    Poincare {
        arrangement: ArrangementDto,
        coefficients: Vec<i64>,
        polynomial: String,
        supersolvable: bool,
        exponents: Option<Vec<i64>>,
    },
    Decompose {
        arrangement: ArrangementDto,
        factors: Vec<ArrangementDto>,
    },
    VerifyPaper {
        scope: String,
        passed: usize,
        failed: usize,
        claims: Vec<ClaimDto>,
    },
}

impl Report {
    pub fn human(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Build { arrangement } => arrangement.render(&mut out, true),
            Report::Lattice { arrangement, level_sizes, total_flats } => {
                arrangement.render(&mut out, false);
                let _ = writeln!(out, "flats by rank: {level_sizes:?}");
                let _ = writeln!(out, "total flats: {total_flats}");
            }
            Report::Modular { arrangement, rank, flats, modular, verdicts } => {
                arrangement.render(&mut out, false);
                let _ = writeln!(out, "rank {rank}: {modular} of {flats} flats modular");
                for v in verdicts {
                    v.render(&mut out);
                }
            }
            Report::Supersolvable { arrangement, certificate, rank2_criterion } => {
                arrangement.render(&mut out, false);
                certificate.render(&mut out);
                if let Some(c) = rank2_criterion {
                    let _ = writeln!(
                        out,
                        "rank-2 criterion: modular rank-2 flat {}, supersolvable {}, agrees {}",
                        c.has_modular_rank2, c.supersolvable, c.agrees
                    );
                    for x in &c.modular_rank2 {
                        let _ = writeln!(out, "  modular rank 2: {}", x.text());
                    }
                }
            }
            Report::Poincare { arrangement, coefficients, polynomial, supersolvable, exponents } => {
                arrangement.render(&mut out, false);
                let _ = writeln!(out, "poincare: {polynomial}");
                let _ = writeln!(out, "coefficients: {coefficients:?}");
                let _ = writeln!(out, "supersolvable: {supersolvable}");
                match exponents {
                    Some(e) => {
                        let _ = writeln!(out, "exponents: {e:?}");
                    }
                    None => {
                        let _ = writeln!(out, "exponents: not defined (not supersolvable)");
                    }
                }
            }
            Report::Decompose { arrangement, factors } => {
                arrangement.render(&mut out, false);
                let _ = writeln!(out, "irreducible factors: {}", factors.len());
                for f in factors {
                    f.render(&mut out, true);
                }
            }
            Report::VerifyPaper { scope, passed, failed, claims } => {
                let _ = writeln!(out, "scope: {scope}");
                let width = claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
                for c in claims {
                    let _ = writeln!(
                        out,
                        "{} {:<17} {:<width$}  {}",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.kind,
                        c.id,
                        c.detail
                    );
                }
                let _ = writeln!(out, "passed: {passed}, failed: {failed}");
            }
        }
        out
    }
}
