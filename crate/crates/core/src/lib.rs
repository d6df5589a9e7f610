//! Automorphism groups of nonseparable graphs from edge-cut spectra,
//! isometric cycles and dihedral maps on generating cycles, with a
//! brute-force oracle to check the answers against.
//!
//! Vertices and edges are 1-based throughout. Edge `e` is the `e`-th pair
//! of the graph's edge list.

pub mod catalog;
pub mod cut_spectrum;
pub mod cycle_space;
pub mod edgeset;
pub mod error;
pub mod generating;
pub mod graph;
pub mod oracle;
pub mod orbit_partition;
pub mod perm;

pub use catalog::{catalog, catalog_names};
pub use cut_spectrum::{base_cut, edge_weight_triples, edge_weights, fingerprint_equal, second_level, second_level_by_parity, WeightTable};
pub use cycle_space::{
    as_cycle, cycle_incidence_weights, enumerate_isometric_cycles, enumerate_isometric_cycles_with, is_isometric, ring_sum,
    ring_sum_all, Cycle, CycleRule, EnumOptions, Gf2Basis, IsometricCycleSet, NotACycle,
};
pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use generating::{
    automorphisms_from_generating_cycles, candidate_generating_cycles, dihedral_index_maps, dihedral_partial_maps,
    enumerate_cycle_covers, extend_partial_map, CoverConfiguration, CoverResult, Extender, GeneratingCycle, SpectralOptions,
    SpectralResult,
};
pub use graph::{parse_any, parse_dot, parse_graph, parse_json, Format, Graph, SrgParams};
pub use oracle::{
    all_bijections_automorphisms, count_spanning_cycles, enumerate_automorphisms, enumerate_automorphisms_with, spanning_cycles,
    true_orbits, OracleOptions, OracleResult,
};
pub use orbit_partition::{
    orbit_subset_count, pairwise_transposition_automorphisms, preserves_edge_set, verify_permutation, weight_classes, VertexClass,
    VertexPartition,
};
pub use perm::{
    cayley_table, cayley_table_ordered, coset_order, find_klein_four, group_closure, group_closure_capped, group_orbits,
    parse_permutation, CayleyTable, Parity, Permutation, PermutationGroup,
};
