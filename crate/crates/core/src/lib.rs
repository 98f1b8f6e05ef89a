//! Information dissemination on signed graphs.
//!
//! A discrete-time process places information `A` (or, in the relaxed
//! variant, `A` or `-A`) on one uninformed vertex per step; one synchronous
//! round of propagation follows, with negative edges flipping the message.
//! Vertices that hear both `A` and `-A` become confused. The crate computes
//! the minimum number of confused vertices exactly, builds the constructive
//! placement policies with their guarantees, generates the graph families
//! the bounds are about, and checks every quantitative claim on them.

pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod solver;
pub mod strategies;
pub mod verify;

pub use engine::{levels, mirror_trace, run, step, Info, Label, LabelState, LevelMap, Mode, Placement, Strategy, Trace};
pub use error::{Error, Result};
pub use graph::{equivalent, BalancePartition, CycleSet, Edge, EdgeKey, Frustration, Sign, SignedGraph, SwitchSet, Vertex};
pub use solver::{
    brute_oracle, exact_confusion, exact_relaxed_confusion, min_steps, relaxed_via_class, Budget, SolveReport,
    StepsReport,
};
pub use strategies::{Guarantee, PolicyKind};
