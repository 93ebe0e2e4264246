//! Checks that run on concrete coloring instances.

mod clique;
mod probability;
mod rainbow;
mod red;
mod report;

pub use clique::{greedy_blue_clique, max_blue_clique_exact, CliqueOptions, CliqueResult};
pub use probability::{
    expected_mono_triangles, mono_triangle_probability, poisson_interval,
    simulate_mono_probability, two_component_red_probability,
};
pub use rainbow::{
    check_biclique_structure, count_rainbow_triangles, edge_disjoint_rainbow_packing,
    sample_subset, BicliqueReport, BicliqueViolation,
};
pub use red::{
    check_pairwise_unions_iterated, check_phi_constancy, check_red_components_tripartite,
    ComponentReport, PairwiseOptions, PairwiseReport, PhiConstancyReport, PhiViolation,
    RedStructureReport, UnionFailure,
};
pub use report::{Report, ReportFormat};
