//! Report documents. Every number is an exact rational string so JSON output
//! never carries floats.

use std::fmt::Write as _;

use nilsol_core::claims::{Claim, ClaimStatus};
use nilsol_core::exactla::{format_rational, zero, PositivityStatus};
use nilsol_core::{
    derivation_algebra, pre_einstein_in_torus, DerivationBasis, DiagonalMetric, Error,
    ExtendedFamily, LieAlgebra, RatMatrix, Rational, SolitonVerdict,
};
use serde::Serialize;

fn r(x: &Rational) -> String {
    format_rational(x)
}

fn vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(r).collect()
}

fn rows(m: &RatMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|row| vector(row)).collect()
}

fn show_vector(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

fn show_rows(out: &mut String, indent: &str, m: &[Vec<String>]) {
    let width = m.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in m {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "{indent}[{}]", cells.join(" ")).unwrap();
    }
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub dim: usize,
    /// `None` when the algebra is not nilpotent.
    #[serde(rename = "type")]
    pub kind: Option<Vec<usize>>,
    pub step: Option<usize>,
    pub brackets: usize,
}

impl Summary {
    pub fn new(g: &LieAlgebra) -> Self {
        let kind = g.nilpotency_type().ok();
        Summary {
            dim: g.dim(),
            step: kind.as_ref().map(Vec::len),
            kind,
            brackets: g.constants().count(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GramReport {
    /// Index set in order, 1-based.
    pub triples: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub nice: bool,
}

impl GramReport {
    pub fn new(g: &LieAlgebra) -> Result<Self, Error> {
        let gram = nilsol_core::gram_matrix(g)?;
        Ok(GramReport {
            triples: gram
                .index_set
                .triples()
                .iter()
                .map(ToString::to_string)
                .collect(),
            matrix: rows(&gram.u),
            nice: gram.is_nice(),
        })
    }

    pub fn render(&self, out: &mut String) {
        writeln!(out, "index set: {}", self.triples.join(" ")).unwrap();
        writeln!(out, "no entry equal to 2: {}", self.nice).unwrap();
        writeln!(out, "Gram matrix:").unwrap();
        show_rows(out, "  ", &self.matrix);
    }
}

#[derive(Debug, Serialize)]
pub struct Solutions {
    pub particular: Option<Vec<String>>,
    pub nullspace: Vec<Vec<String>>,
    /// 1-based positions in the index set where every solution vanishes.
    pub forced_zero: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct VerdictReport {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Solutions>,
    /// Optimum of `max t` with `v >= t`, when the LP is feasible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lp_optimum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lp_status: Option<&'static str>,
}

impl VerdictReport {
    pub fn new(verdict: &SolitonVerdict) -> Self {
        let mut out = VerdictReport {
            verdict: verdict.label(),
            reason: None,
            witness: None,
            solutions: None,
            lp_optimum: None,
            lp_status: None,
        };
        match verdict {
            SolitonVerdict::Soliton { witness, .. } => out.witness = Some(vector(witness)),
            SolitonVerdict::Inapplicable(reason) => out.reason = Some(reason.to_string()),
            SolitonVerdict::Nonsoliton { solutions, lp, .. } => {
                let forced_zero = match &solutions.particular {
                    Some(p) => (0..p.len())
                        .filter(|&a| {
                            p[a] == zero()
                                && solutions.nullspace_basis.iter().all(|w| w[a] == zero())
                        })
                        .map(|a| a + 1)
                        .collect(),
                    None => Vec::new(),
                };
                out.solutions = Some(Solutions {
                    particular: solutions.particular.as_deref().map(vector),
                    nullspace: solutions
                        .nullspace_basis
                        .iter()
                        .map(|w| vector(w))
                        .collect(),
                    forced_zero,
                });
                let (status, optimum) = match &lp.status {
                    PositivityStatus::Inconsistent => ("inconsistent", None),
                    PositivityStatus::NoNonnegativeSolution => ("no nonnegative solution", None),
                    PositivityStatus::Optimal { t_star, .. } => ("optimal", Some(r(t_star))),
                };
                out.lp_status = Some(status);
                out.lp_optimum = optimum;
            }
        }
        out
    }

    pub fn render(&self, out: &mut String) {
        writeln!(out, "verdict: {}", self.verdict).unwrap();
        if let Some(reason) = &self.reason {
            writeln!(out, "  reason: {reason}").unwrap();
        }
        if let Some(w) = &self.witness {
            writeln!(out, "  positive solution of Uv = [1]: {}", show_vector(w)).unwrap();
        }
        if let Some(s) = &self.solutions {
            match &s.particular {
                None => writeln!(out, "  Uv = [1] has no solution").unwrap(),
                Some(p) => {
                    writeln!(
                        out,
                        "  solutions of Uv = [1]: v0 + span of {} vector(s)",
                        s.nullspace.len()
                    )
                    .unwrap();
                    writeln!(out, "    v0 = {}", show_vector(p)).unwrap();
                    for (n, w) in s.nullspace.iter().enumerate() {
                        writeln!(out, "    w{} = {}", n + 1, show_vector(w)).unwrap();
                    }
                }
            }
            if !s.forced_zero.is_empty() {
                let pos: Vec<String> = s.forced_zero.iter().map(|a| format!("v{a}")).collect();
                writeln!(
                    out,
                    "  identically zero on the solution set: {}",
                    pos.join(", ")
                )
                .unwrap();
            }
        }
        if let Some(status) = self.lp_status {
            match &self.lp_optimum {
                Some(t) => writeln!(out, "  positivity LP: {status}, t* = {t}").unwrap(),
                None => writeln!(out, "  positivity LP: {status}").unwrap(),
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct NikolayevskyReport {
    /// Diagonal of the pre-Einstein candidate from the diagonal torus.
    pub diagonal: Option<Vec<String>>,
    /// Whether the candidate passes `tr(D F) = tr F` on all of Der(g).
    pub verified: bool,
}

impl NikolayevskyReport {
    fn new(g: &LieAlgebra, der: &DerivationBasis) -> Result<Self, Error> {
        let Some(w) = pre_einstein_in_torus(g) else {
            return Ok(NikolayevskyReport {
                diagonal: None,
                verified: false,
            });
        };
        let verified =
            nilsol_core::derivations::verify_pre_einstein_with(der, &RatMatrix::diagonal(&w))?;
        Ok(NikolayevskyReport {
            diagonal: Some(vector(&w)),
            verified,
        })
    }
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub algebra: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gram: Option<GramReport>,
    pub soliton: VerdictReport,
    pub derivation_dim: usize,
    pub nikolayevsky: NikolayevskyReport,
}

impl AnalysisReport {
    pub fn new(g: &LieAlgebra) -> Result<(Self, SolitonVerdict), Error> {
        let verdict = nilsol_core::soliton_test(g);
        let der = derivation_algebra(g);
        let report = AnalysisReport {
            algebra: Summary::new(g),
            gram: if g.is_abelian() {
                None
            } else {
                Some(GramReport::new(g)?)
            },
            soliton: VerdictReport::new(&verdict),
            derivation_dim: der.dim(),
            nikolayevsky: NikolayevskyReport::new(g, &der)?,
        };
        Ok((report, verdict))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let a = &self.algebra;
        writeln!(out, "dimension: {}", a.dim).unwrap();
        match &a.kind {
            Some(t) => writeln!(out, "type: {t:?} (step {})", t.len()).unwrap(),
            None => writeln!(out, "type: not nilpotent").unwrap(),
        }
        if let Some(g) = &self.gram {
            g.render(&mut out);
        }
        self.soliton.render(&mut out);
        writeln!(out, "dim Der: {}", self.derivation_dim).unwrap();
        match &self.nikolayevsky.diagonal {
            Some(d) => writeln!(
                out,
                "pre-Einstein candidate: diag{} ({})",
                show_vector(d),
                if self.nikolayevsky.verified {
                    "verified"
                } else {
                    "not verified"
                }
            )
            .unwrap(),
            None => writeln!(
                out,
                "pre-Einstein candidate: none (no diagonal derivations)"
            )
            .unwrap(),
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct FamilyReport {
    pub m: usize,
    pub k: usize,
    pub q: String,
    pub grading: Vec<u32>,
    pub lambda: String,
    /// `lambda D` passes the pre-Einstein trace condition.
    pub lambda_d_pre_einstein: bool,
    pub analysis: AnalysisReport,
}

impl FamilyReport {
    pub fn new(f: &ExtendedFamily) -> Result<Self, Error> {
        let (analysis, _) = AnalysisReport::new(&f.algebra)?;
        Ok(FamilyReport {
            m: f.spec.m(),
            k: f.spec.k,
            q: r(&f.spec.q),
            grading: f.grading.weights().to_vec(),
            lambda: r(&f.lambda),
            lambda_d_pre_einstein: nilsol_core::verify_pre_einstein(&f.algebra, &f.nikolayevsky())?,
            analysis,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "family m={} k={} q={}", self.m, self.k, self.q).unwrap();
        writeln!(out, "grading weights: {:?}", self.grading).unwrap();
        writeln!(out, "lambda: {}", self.lambda).unwrap();
        writeln!(
            out,
            "lambda D is pre-Einstein: {}",
            self.lambda_d_pre_einstein
        )
        .unwrap();
        out.push_str(&self.analysis.render());
        out
    }
}

#[derive(Debug, Serialize)]
pub struct DerReport {
    pub dim: usize,
    /// Basis of Der(g), each a list of rows.
    pub basis: Vec<Vec<Vec<String>>>,
}

impl DerReport {
    pub fn new(g: &LieAlgebra) -> Self {
        let der = derivation_algebra(g);
        DerReport {
            dim: der.dim(),
            basis: der.basis().iter().map(rows).collect(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "dim Der: {}", self.dim).unwrap();
        for (n, d) in self.basis.iter().enumerate() {
            writeln!(out, "D{}:", n + 1).unwrap();
            show_rows(&mut out, "  ", d);
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct SolitonMetricReport {
    pub beta: String,
    pub derivation: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct RicciReport {
    pub metric: Vec<String>,
    pub form: Vec<Vec<String>>,
    pub endomorphism: Vec<Vec<String>>,
    /// `Ric = beta Id + D` with `D` a derivation, if possible.
    pub soliton: Option<SolitonMetricReport>,
}

impl RicciReport {
    pub fn new(g: &LieAlgebra, metric: &DiagonalMetric) -> Result<Self, Error> {
        let soliton = nilsol_core::soliton_metric_check(g, metric)?.map(|s| SolitonMetricReport {
            beta: r(&s.beta),
            derivation: rows(&s.derivation),
        });
        Ok(RicciReport {
            metric: vector(metric.entries()),
            form: rows(&nilsol_core::ricci_form(g, metric)?),
            endomorphism: rows(&nilsol_core::ricci_endomorphism(g, metric)?),
            soliton,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "metric: diag{}", show_vector(&self.metric)).unwrap();
        writeln!(out, "Ricci form:").unwrap();
        show_rows(&mut out, "  ", &self.form);
        writeln!(out, "Ricci endomorphism:").unwrap();
        show_rows(&mut out, "  ", &self.endomorphism);
        match &self.soliton {
            Some(s) => {
                writeln!(out, "soliton metric: Ric = {} Id + D", s.beta).unwrap();
                show_rows(&mut out, "  ", &s.derivation);
            }
            None => writeln!(out, "soliton metric: no (Ric is not in R Id + Der)").unwrap(),
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ClaimReport {
    pub id: &'static str,
    pub title: &'static str,
    pub status: String,
    pub details: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ReproduceReport {
    pub q: String,
    pub max_k: usize,
    pub claims: Vec<ClaimReport>,
}

impl ReproduceReport {
    pub fn new(q: &Rational, max_k: usize, claims: &[Claim]) -> Self {
        ReproduceReport {
            q: r(q),
            max_k,
            claims: claims
                .iter()
                .map(|c| ClaimReport {
                    id: c.id,
                    title: c.title,
                    status: c.status.to_string(),
                    details: c.details.clone(),
                })
                .collect(),
        }
    }

    pub fn failed(claims: &[Claim]) -> bool {
        claims.iter().any(|c| c.status == ClaimStatus::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let width = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.claims {
            writeln!(out, "{:<11} {:<width$}  {}", c.status, c.id, c.title).unwrap();
            for d in &c.details {
                writeln!(out, "            {d}").unwrap();
            }
        }
        out
    }
}
