//! Exact graph cluster fitness measures (conductance, local and relative density,
//! single-cluster editing), brute-force solvers for their decision problems, and
//! the reductions from cubic max-cut and min-bisection, together with a harness
//! that checks those reductions on every small cubic graph.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod harness;
pub mod measures;
pub mod rational;
pub mod reductions;
pub mod solvers;

pub use enumerate::{enumerate_cubic, enumerate_subsets, generate_random_cubic};
pub use error::{Error, Result};
pub use graph::{parse_graph, write_graph, Graph, VertexSubset, MASK_LIMIT};
pub use measures::{
    conductance, local_density, relative_density, single_cluster_editing, MeasureKind, MeasureValue,
};
pub use rational::Rational;
pub use reductions::{
    build_conductance_instance, build_density_instance, build_editing_instance, lift_cut,
    project_cut, ConductanceReduction, DensityReduction, EditingReduction, ReductionKind,
    ReductionMetadata,
};
pub use solvers::{
    best_density, decide, max_cut, min_bisection, min_conductance, min_editing, DecisionInstance,
    Decision, DensityKind, Optimum, Problem, SolveConfig,
};
