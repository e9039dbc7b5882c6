//! Exhaustive enumeration of the cubic one-cut families: simple base
//! graphs by degree sequence, double-edge lifts, the bridgeless building
//! blocks B_j, their joins into the order-n families A_n, and the
//! eigenvalue verification of every assembled member.

mod classify;
mod families;
mod gen;
mod manifest;

pub use classify::{
    classify_f, degree2_subgraph, lift_to_m, max_matchings_of_f, ComponentKind, DegreeTwoProfile,
    RejectReason, Verdict,
};
pub use families::{
    build_a, build_b, build_m, join, verify_family, Bridge, FamilyId, FamilyReport,
};
pub use gen::{gen_simple_graphs, is_graphical};
pub use manifest::{manifest_rows, write_family, ManifestRow, MANIFEST_HEADER};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("degree sequence {0} is not graphical")]
    NonGraphical(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
    #[error("join operand has {found} degree-2 vertices, expected exactly one")]
    JoinOperand { found: usize },
    #[error(
        "family {family}: member {key} has lambda2 = {lambda2} below the \
         claimed floor {floor}"
    )]
    ClaimViolated {
        family: String,
        key: String,
        lambda2: f64,
        floor: f64,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
