//! Reconstruction of binary matrices from their row and column sums under
//! additional block, window and pattern constraints.
//!
//! The crate provides:
//!
//! * the grid geometry (corner points, blocks, windows, strips, patterns) in [`grid`],
//! * an exhaustive constraint checker in [`verify`],
//! * an integral max-flow feasibility engine in [`flow`],
//! * the one-per-block placement subproblem in [`dr1`],
//! * the polynomial-time solvers and an auto-dispatching front end in [`solvers`],
//! * an exact backtracking solver for the hard variants in [`oracle`],
//! * instance transformations and reductions in [`reductions`],
//! * text formats, a planted-instance generator and rendering in [`io`].
//!
//! Coordinates are Cartesian and 1-based throughout: a cell `(p, q)` is
//! column `p` (x-coordinate) and row `q` (y-coordinate), with row 1 at the
//! bottom of the picture.

pub mod dr1;
pub mod error;
pub mod flow;
pub mod grid;
pub mod io;
pub mod oracle;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{
    corner_points, pattern_enumerate, pattern_member, pattern_of, region_and_projections,
    strip_rank, window_cells, Axis, BinaryImage, Cell, Pattern, PatternClass, RecInstance,
    Relation, WRecInstance, WindowConstraint,
};
pub use oracle::{oracle_enumerate, oracle_solve, OracleLimits, OracleOutcome};
pub use solvers::{classify, solve, Method, SolveResult, SolveStatus};
pub use verify::{verify_rec, verify_wrec, Violation, ViolationReport};
