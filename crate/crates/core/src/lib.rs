//! Classicalisation of Swiss cheeses.
//!
//! A Swiss cheese is a closed disc with a finite family of open discs removed.
//! It is classical when the closures of the removed discs are pairwise
//! disjoint and stay inside the interior of the outer disc. Starting from any
//! cheese whose removed radii sum to less than the outer radius, [`classicalise`]
//! repeatedly takes the least pair of colliding discs and either merges the two
//! open discs into their smallest enclosing disc or shrinks the outer disc
//! away from the offending one. The result is classical, its set is contained
//! in the original one, and the slack `δ = r(outer) − Σ r(disc)` never drops.
//!
//! The [`oracle`] module re-checks all of this independently from a recorded
//! trace, and [`allocation`] reconstructs the allocation maps induced by each
//! step.
//!
//! ```
//! use swiss_cheese::{classicalise, ClosedDisc, DiscAssignment, OpenDisc};
//!
//! let cheese = DiscAssignment::new(
//!     ClosedDisc::at(0.0, 0.0, 3.0)?,
//!     [(1, OpenDisc::at(0.0, 0.0, 1.0)?), (2, OpenDisc::at(1.5, 0.0, 1.0)?)],
//! )?;
//! let run = classicalise(&cheese, None)?;
//! assert!(run.stabilised && run.final_assignment.is_classical());
//! assert_eq!(run.final_assignment.discs()[&1], OpenDisc::at(0.75, 0.0, 1.75)?);
//! # Ok::<(), swiss_cheese::Error>(())
//! ```

pub mod allocation;
pub mod cheese;
pub mod cli;
pub mod engine;
mod error;
pub mod geometry;
pub mod oracle;

pub use allocation::{
    compose_allocations, step_allocation, trace_allocation, verify_allocation, AllocationMap,
    AxiomReport,
};
pub use cheese::{DeltaReport, DiscAssignment, SwissCheese};
pub use engine::{
    classicalise, min_collision, stabilised_iff_classical, step_f, CaseTag, ClassicalisationResult,
    CollisionPair, StepRecord,
};
pub use error::{Error, Result};
pub use geometry::{
    avoid_disc, closures_intersect, disc_contains, merge_open_discs, point_in, ClosedDisc,
    GeneralizedDisc, OpenDisc, Point,
};
pub use oracle::{sample_containment, verify_run, verify_step, VerificationReport};
