//! Partitions of graphs that exclude star forests, their complements and
//! the bipartite star classes.

pub mod cover;
pub mod partition;
pub mod template;

pub use cover::{
    high_degree_vertices, lambda_cover_set, partition_marked, r_cover_structure, CoverStructure, Trace,
};
pub use template::{
    check_join_conditions, check_procedure_conditions, check_refined_conditions, collapse_d_template,
    d_template_procedure, refine_consecutive, CollapseTag, DTemplate, StarParams,
};
pub use partition::{
    bipartite_star_partition, cochromatic_star, main_partition, orand_refine, partition_either, star_induction_step,
    EXACT_COCHROMATIC_LIMIT,
};
