//! Residual, torsion, linearity, and geometric-action flags, each verdict
//! carrying the statement it rests on.

use serde::Serialize;

use crate::graphs::{four_cliques_almost_disjoint, is_k4_free, Graph};

pub const CIT_K4FREE_EMBED: &str =
    "K4-free: the group embeds in a product of P_2 and P_3 factors, which are products of free groups";
pub const CIT_ALMOST_DISJOINT_EMBED: &str =
    "almost-disjoint 4-cliques: the group embeds in a product of P_2, P_3, and P_4 factors";
pub const CIT_P4_NOT_RES_FREE: &str =
    "a 4-clique makes P_4 a retract of the group, and P_4 is not residually free";
pub const CIT_CAT0_RAAG: &str =
    "the target product of free groups is a right-angled Artin group acting freely on a CAT(0) cube complex";
pub const CIT_CAT0_SMALL_BRAID: &str =
    "braid groups on at most 4 strands act freely and properly on CAT(0) complexes";
pub const CIT_ATMENABLE_CAT0: &str =
    "a proper action on a CAT(0) cube complex implies a-T-menability";
pub const CIT_ATMENABLE_OPEN_P4: &str = "it is not known whether P_4 is a-T-menable";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Yes,
    No,
    Unknown,
}

/// One verdict with its supporting statement (or, for `Unknown`, the
/// hypothesis that failed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub status: Status,
    pub citation: String,
}

impl Flag {
    fn yes(citation: &str) -> Flag {
        Flag {
            status: Status::Yes,
            citation: citation.to_string(),
        }
    }

    fn no(citation: &str) -> Flag {
        Flag {
            status: Status::No,
            citation: citation.to_string(),
        }
    }

    fn unknown(citation: &str) -> Flag {
        Flag {
            status: Status::Unknown,
            citation: citation.to_string(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.status == Status::Yes
    }

    pub fn is_no(&self) -> bool {
        self.status == Status::No
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyFlags {
    pub residually_free: Flag,
    pub torsion_free: Flag,
    pub residually_torsion_free_nilpotent: Flag,
    pub residually_finite: Flag,
    pub linear: Flag,
    pub cat0_cube_action: Flag,
    pub a_t_menable: Flag,
}

/// Classifies the quotient group of `g` by the embedding theorems.
///
/// Flags never contradict: residual freeness forces torsion-freeness and
/// residual finiteness, and residual freeness fails whenever a 4-clique
/// exists.
pub fn property_flags(g: &Graph) -> PropertyFlags {
    if is_k4_free(g) {
        return PropertyFlags {
            residually_free: Flag::yes(CIT_K4FREE_EMBED),
            torsion_free: Flag::yes(CIT_K4FREE_EMBED),
            residually_torsion_free_nilpotent: Flag::yes(CIT_K4FREE_EMBED),
            residually_finite: Flag::yes(CIT_K4FREE_EMBED),
            linear: Flag::yes(CIT_K4FREE_EMBED),
            cat0_cube_action: Flag::yes(CIT_CAT0_RAAG),
            a_t_menable: Flag::yes(CIT_ATMENABLE_CAT0),
        };
    }
    if four_cliques_almost_disjoint(g) {
        return PropertyFlags {
            residually_free: Flag::no(CIT_P4_NOT_RES_FREE),
            torsion_free: Flag::yes(CIT_ALMOST_DISJOINT_EMBED),
            residually_torsion_free_nilpotent: Flag::yes(CIT_ALMOST_DISJOINT_EMBED),
            residually_finite: Flag::yes(CIT_ALMOST_DISJOINT_EMBED),
            linear: Flag::yes(CIT_ALMOST_DISJOINT_EMBED),
            cat0_cube_action: Flag::yes(CIT_CAT0_SMALL_BRAID),
            a_t_menable: Flag::unknown(CIT_ATMENABLE_OPEN_P4),
        };
    }
    let outside = "the graph is outside the proven embedding hypotheses";
    PropertyFlags {
        residually_free: Flag::no(CIT_P4_NOT_RES_FREE),
        torsion_free: Flag::unknown(outside),
        residually_torsion_free_nilpotent: Flag::unknown(outside),
        residually_finite: Flag::unknown(outside),
        linear: Flag::unknown(outside),
        cat0_cube_action: Flag::unknown(outside),
        a_t_menable: Flag::unknown(outside),
    }
}

/// The coherence conditions every flag set must satisfy: residual
/// freeness forces torsion-freeness and residual finiteness.
pub fn flags_coherent(f: &PropertyFlags) -> bool {
    let res_free_implies = !f.residually_free.is_yes()
        || (f.torsion_free.is_yes() && f.residually_finite.is_yes());
    res_free_implies && !(f.residually_free.is_yes() && f.residually_free.is_no())
}
