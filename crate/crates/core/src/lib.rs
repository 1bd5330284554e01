//! Exact combinatorial machinery for dual complexes of simple normal crossing
//! configurations: finite simplicial and Δ-complexes with their surgeries,
//! Smith-normal-form homology, rational hyperplane arrangements, the iterated
//! blow-up that realizes a prescribed dual complex, symbolic local chart
//! models, double-cover surgery, and presentation complexes of finitely
//! presented groups.
//!
//! Everything is exact: integer matrices use arbitrary precision, arrangement
//! geometry uses rational arithmetic, and all operations are pure functions
//! over immutable values with deterministic (lexicographic) orderings.

pub mod arrangement;
pub mod blowup;
pub mod complex;
pub mod delta;
pub mod group;
pub mod homology;
pub mod io;
pub mod local_model;
pub mod rational;
pub mod surgery;

pub use arrangement::{Arrangement, CertificationConfig, GeneralPositionReport, StratumDim};
pub use blowup::{run_construction, run_construction_with, BlowupStep, BlowupTrace, SncModel};
pub use complex::{FVector, IsoMode, SimplicialComplex};
pub use delta::{barycentric_subdivision, DeltaComplex};
pub use group::{cone_off, presentation_complex, Presentation, TwoCycle};
pub use homology::{homology, is_connected, is_q_acyclic, HomologyProfile, IntegerMatrix};
pub use local_model::{
    component_blowup, small_resolution_trace, strata_blowup_chart, z_blowup_model, LocalModel,
};
pub use rational::{Rational, RationalMatrix};
pub use surgery::{double_cover_complex, select_preimages, verify_roundtrip, DoubledComplex};
