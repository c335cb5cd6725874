//! JSON documents. Every document carries `"schema": "tropigraph/1"`;
//! rationals are strings `p/q`, infinities `inf` and `-inf`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use tropigraph_core::cover::{CoverMode, CoverSolution};
use tropigraph_core::tropical::{format_rational, parse_rational};
use tropigraph_core::verifier::{ConjectureReport, Relation, Violation};
use tropigraph_core::{
    Algebra, DimensionMethod, DimensionResult, Representation, TropicalValue, TropicalVector,
    VerificationReport,
};

use crate::formats::to_graph6;

pub const SCHEMA: &str = "tropigraph/1";

fn schema() -> String {
    SCHEMA.to_string()
}

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error(transparent)]
    Syntax(#[from] serde_json::Error),
    #[error("unsupported schema {0:?}, expected {SCHEMA:?}")]
    Schema(String),
    #[error("{0}")]
    Content(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDoc {
    pub schema: String,
    pub algebra: String,
    pub threshold: String,
    pub dim: usize,
    /// Vertex index to entries; serialized with keys "0", "1", ... in order.
    pub vectors: BTreeMap<usize, Vec<String>>,
}

impl From<&Representation> for RepresentationDoc {
    fn from(rep: &Representation) -> Self {
        RepresentationDoc {
            schema: schema(),
            algebra: rep.algebra().name().to_string(),
            threshold: format_rational(rep.threshold()),
            dim: rep.dim(),
            vectors: rep
                .vectors()
                .iter()
                .enumerate()
                .map(|(v, x)| (v, x.entries().iter().map(ToString::to_string).collect()))
                .collect(),
        }
    }
}

impl RepresentationDoc {
    pub fn to_representation(&self) -> Result<Representation, JsonError> {
        if self.schema != SCHEMA {
            return Err(JsonError::Schema(self.schema.clone()));
        }
        let content = |e: tropigraph_core::Error| JsonError::Content(e.to_string());
        let algebra: Algebra = self.algebra.parse().map_err(content)?;
        let threshold = parse_rational(&self.threshold).map_err(content)?;
        let mut vectors = Vec::with_capacity(self.vectors.len());
        for (expected, (&v, entries)) in self.vectors.iter().enumerate() {
            if v != expected {
                return Err(JsonError::Content(format!("missing vector for vertex {expected}")));
            }
            let values = entries
                .iter()
                .map(|s| s.parse::<TropicalValue>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(content)?;
            vectors.push(TropicalVector::new(values).map_err(content)?);
        }
        Representation::new(algebra, threshold, self.dim, vectors).map_err(content)
    }
}

pub fn representation_to_json(rep: &Representation) -> String {
    serde_json::to_string_pretty(&RepresentationDoc::from(rep)).expect("serializable")
}

pub fn representation_from_json(text: &str) -> Result<Representation, JsonError> {
    serde_json::from_str::<RepresentationDoc>(text)?.to_representation()
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationDoc {
    pub u: usize,
    pub v: usize,
    pub dot: String,
    pub expected: &'static str,
}

impl From<&Violation> for ViolationDoc {
    fn from(x: &Violation) -> Self {
        ViolationDoc {
            u: x.u,
            v: x.v,
            dot: x.dot.to_string(),
            expected: match x.expected {
                Relation::Edge => "edge",
                Relation::NonEdge => "non-edge",
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationDoc {
    pub schema: String,
    pub valid: bool,
    pub violations: Vec<ViolationDoc>,
}

impl From<&VerificationReport> for VerificationDoc {
    fn from(r: &VerificationReport) -> Self {
        VerificationDoc {
            schema: schema(),
            valid: r.valid,
            violations: r.violations.iter().map(ViolationDoc::from).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MethodDoc {
    Exact,
    BoundsOnly {
        min_plus: (usize, usize),
        max_plus: (usize, usize),
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverDoc {
    pub mode: &'static str,
    pub parts: Vec<Vec<(usize, usize)>>,
}

impl From<&CoverSolution> for CoverDoc {
    fn from(c: &CoverSolution) -> Self {
        CoverDoc {
            mode: match c.mode {
                CoverMode::Union => "union",
                CoverMode::Intersection => "intersection",
            },
            parts: c.parts.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionDoc {
    pub rho_min_plus: usize,
    pub rho_max_plus: usize,
    pub method: MethodDoc,
    pub min_plus_witness: RepresentationDoc,
    pub max_plus_witness: RepresentationDoc,
    pub schema: String,
}

impl From<&DimensionResult> for DimensionDoc {
    fn from(r: &DimensionResult) -> Self {
        DimensionDoc {
            rho_min_plus: r.rho_min_plus,
            rho_max_plus: r.rho_max_plus,
            method: match r.method {
                DimensionMethod::Exact => MethodDoc::Exact,
                DimensionMethod::BoundsOnly { min_plus, max_plus } => {
                    MethodDoc::BoundsOnly { min_plus, max_plus }
                }
            },
            min_plus_witness: (&r.min_plus_witness).into(),
            max_plus_witness: (&r.max_plus_witness).into(),
            schema: schema(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureEntryDoc {
    pub n: usize,
    pub graph6: String,
    pub rho_min_plus: usize,
    pub rho_max_plus: usize,
    pub status: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureDoc {
    pub schema: String,
    pub n_max: usize,
    pub classes: usize,
    pub equal: usize,
    pub strict: Vec<String>,
    pub counterexamples: Vec<String>,
    pub summary: String,
    pub entries: Vec<ConjectureEntryDoc>,
}

impl From<&ConjectureReport> for ConjectureDoc {
    fn from(r: &ConjectureReport) -> Self {
        let counterexamples: Vec<String> = r.counterexamples().map(|e| to_graph6(&e.graph)).collect();
        ConjectureDoc {
            schema: schema(),
            n_max: r.n_max,
            classes: r.entries.len(),
            equal: r.equal_count(),
            strict: r.strict().map(|e| to_graph6(&e.graph)).collect(),
            summary: if counterexamples.is_empty() {
                "no counterexample found".into()
            } else {
                format!("{} counterexamples found", counterexamples.len())
            },
            counterexamples,
            entries: r
                .entries
                .iter()
                .map(|e| ConjectureEntryDoc {
                    n: e.graph.n(),
                    graph6: to_graph6(&e.graph),
                    rho_min_plus: e.rho_min_plus,
                    rho_max_plus: e.rho_max_plus,
                    status: match e.rho_min_plus.cmp(&e.rho_max_plus) {
                        std::cmp::Ordering::Less => "less",
                        std::cmp::Ordering::Equal => "equal",
                        std::cmp::Ordering::Greater => "greater",
                    },
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SlicesDoc {
    pub schema: String,
    pub algebra: String,
    pub combine: &'static str,
    pub slices: Vec<String>,
    pub realized: String,
    pub combined_matches: bool,
}
