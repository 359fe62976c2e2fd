//! Theorem-driven classification: arrangements, semidirect splittings,
//! homological finiteness type, asphericity obstruction, residual and
//! torsion property flags, and the extension by the graph automorphism
//! group. Every Yes/No verdict carries the statement it rests on; every
//! Unknown carries the hypothesis that failed.

mod arrangement;
mod bgamma;
mod finiteness;
mod flags;
mod report;
mod split;

pub use arrangement::{graphic_arrangement, graphic_discriminantal, Arrangement, Hyperplane};
pub use bgamma::{bgamma_report, BgammaReport, TorsionWitness};
pub use finiteness::{finiteness_type, kpi1_verdict, FinitenessClass, FinitenessVerdict, KPi1Verdict};
pub use flags::{flags_coherent, property_flags, Flag, PropertyFlags, Status};
pub use flags::{
    CIT_ALMOST_DISJOINT_EMBED, CIT_ATMENABLE_CAT0, CIT_ATMENABLE_OPEN_P4, CIT_CAT0_RAAG,
    CIT_CAT0_SMALL_BRAID, CIT_K4FREE_EMBED, CIT_P4_NOT_RES_FREE,
};
pub use report::{analyze, AnalysisReport, AnalyzeOptions};
pub use split::{semidirect_split, SemidirectSplit};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("subset {0:?} is not a clique of the graph")]
    NotAClique(Vec<usize>),
    #[error(transparent)]
    Graph(#[from] crate::graphs::GraphError),
}
