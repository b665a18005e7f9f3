//! Closed-form values, witness constructions, bounds and relational claims
//! about paired disjunctive domination, each checked against the exact solver.

mod formulas;
mod report;
pub mod sampling;
mod trees;
mod verify;
mod witnesses;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

pub use formulas::{formula_value, FormulaValue};
pub use report::{reports_to_csv, reports_to_json, TheoremReport, Verdict, CSV_HEADER};
pub use trees::{leg_spider, strong_spider, tree_profile, TreeProfile};
pub use verify::{
    check_inequalities, evaluate, instances, two_subdivision_certificate, verify_theorem, Instance,
    RangeSpec,
};
pub use witnesses::{witness_double_star, witness_middle_cycle, witness_middle_path};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T34Cycle,
    T34Path,
    T34Complete,
    T34Bipartite,
    T35Bounds,
    O31Chain,
    O32Total,
    T41Certificate,
    P42MaxDeg,
    P43Bipartite,
    T44MidCycle,
    T45MidPath,
    P46Friendship,
    T47DoubleStar,
    L51SdRestriction,
    L52Deletion,
    T53PathBound,
    T54TreeBound,
    C55StrongSupport,
    C56NoStrongSupport,
    P57Join,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::T34Cycle,
        TheoremId::T34Path,
        TheoremId::T34Complete,
        TheoremId::T34Bipartite,
        TheoremId::T35Bounds,
        TheoremId::O31Chain,
        TheoremId::O32Total,
        TheoremId::T41Certificate,
        TheoremId::P42MaxDeg,
        TheoremId::P43Bipartite,
        TheoremId::T44MidCycle,
        TheoremId::T45MidPath,
        TheoremId::P46Friendship,
        TheoremId::T47DoubleStar,
        TheoremId::L51SdRestriction,
        TheoremId::L52Deletion,
        TheoremId::T53PathBound,
        TheoremId::T54TreeBound,
        TheoremId::C55StrongSupport,
        TheoremId::C56NoStrongSupport,
        TheoremId::P57Join,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T34Cycle => "T34_cycle",
            TheoremId::T34Path => "T34_path",
            TheoremId::T34Complete => "T34_complete",
            TheoremId::T34Bipartite => "T34_bipartite",
            TheoremId::T35Bounds => "T35_bounds",
            TheoremId::O31Chain => "O31_chain",
            TheoremId::O32Total => "O32_total",
            TheoremId::T41Certificate => "T41_certificate",
            TheoremId::P42MaxDeg => "P42_maxdeg",
            TheoremId::P43Bipartite => "P43_bipartite",
            TheoremId::T44MidCycle => "T44_mid_cycle",
            TheoremId::T45MidPath => "T45_mid_path",
            TheoremId::P46Friendship => "P46_friendship",
            TheoremId::T47DoubleStar => "T47_double_star",
            TheoremId::L51SdRestriction => "L51_sd_restriction",
            TheoremId::L52Deletion => "L52_deletion",
            TheoremId::T53PathBound => "T53_path_bound",
            TheoremId::T54TreeBound => "T54_tree_bound",
            TheoremId::C55StrongSupport => "C55_strong_support",
            TheoremId::C56NoStrongSupport => "C56_no_strong_support",
            TheoremId::P57Join => "P57_join",
        }
    }

    /// Resolves a suite name: `all`, a full id, or an id prefix such as `T45`
    /// or `T34` (which may select several ids).
    pub fn parse_suite(s: &str) -> Result<Vec<TheoremId>, Error> {
        let key = s.trim().to_ascii_lowercase();
        if key == "all" {
            return Ok(TheoremId::ALL.to_vec());
        }
        let ids: Vec<TheoremId> = TheoremId::ALL
            .into_iter()
            .filter(|id| {
                let name = id.name().to_ascii_lowercase();
                name == key || name.split('_').next() == Some(key.as_str())
            })
            .collect();
        if ids.is_empty() {
            Err(Error::InvalidArgument(format!(
                "unknown theorem suite {s:?}"
            )))
        } else {
            Ok(ids)
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem id {s:?}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
