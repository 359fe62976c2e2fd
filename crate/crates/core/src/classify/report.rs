//! Structured analysis report: one JSON-serializable record collecting the
//! verdicts of every classifier, with stable field names and ordering
//! (schema version 1).

use serde::Serialize;

use crate::graphic::{injectivity_status, InjectivityCertificate};
use crate::graphs::{maximal_cliques, Graph, GraphError, DEFAULT_AUT_BOUND};

use super::bgamma::{bgamma_report, BgammaReport};
use super::finiteness::{finiteness_type, kpi1_verdict, FinitenessVerdict, KPi1Verdict};
use super::flags::{property_flags, PropertyFlags};
use super::split::{semidirect_split, SemidirectSplit};
use super::ClassifyError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edge_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectivityJson {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    pub note: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<InjectivityJson>,
}

impl InjectivityJson {
    fn from_certificate(cert: &InjectivityCertificate) -> InjectivityJson {
        match cert {
            InjectivityCertificate::Proven { rule, note, children } => InjectivityJson {
                status: "proven".to_string(),
                rule: Some(rule.name().to_string()),
                note: note.clone(),
                children: children.iter().map(Self::from_certificate).collect(),
            },
            InjectivityCertificate::Unknown { note } => InjectivityJson {
                status: "unknown".to_string(),
                rule: None,
                note: note.clone(),
                children: Vec::new(),
            },
        }
    }
}

/// The full report for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub graph: GraphSummary,
    pub maximal_cliques: Vec<Vec<usize>>,
    pub injectivity: InjectivityJson,
    pub properties: PropertyFlags,
    pub finiteness_pure: FinitenessVerdict,
    pub kpi1: KPi1Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bgamma: Option<BgammaReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bgamma_note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semidirect: Option<SemidirectSplit>,
}

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    /// Bound on the exhaustive automorphism search.
    pub aut_bound: usize,
    /// Include splitting data over this clique.
    pub clique: Option<Vec<usize>>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            aut_bound: DEFAULT_AUT_BOUND,
            clique: None,
        }
    }
}

/// Runs every classifier on `g` and assembles the report.
///
/// An automorphism search over the bound does not fail the whole report;
/// the extension section is omitted with a note instead. A bad `clique`
/// option is a hard error.
pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<AnalysisReport, ClassifyError> {
    let (bgamma, bgamma_note) = match bgamma_report(g, opts.aut_bound) {
        Ok(r) => (Some(r), None),
        Err(e @ GraphError::AutBoundExceeded { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(ClassifyError::Graph(e)),
    };
    let semidirect = match &opts.clique {
        None => None,
        Some(clique) => Some(semidirect_split(g, clique)?),
    };
    Ok(AnalysisReport {
        schema_version: 1,
        graph: GraphSummary {
            n: g.n(),
            edge_count: g.edge_count(),
            edges: g.edges(),
            connected: g.is_connected(),
        },
        maximal_cliques: maximal_cliques(g).members().to_vec(),
        injectivity: InjectivityJson::from_certificate(&injectivity_status(g)),
        properties: property_flags(g),
        finiteness_pure: finiteness_type(g),
        kpi1: kpi1_verdict(g),
        bgamma,
        bgamma_note,
        semidirect,
    })
}
