//! Integer polymatroids on small ground sets.
//!
//! Rank tables with axiom checks and minors, Boolean polymatroids given by
//! support families, recognition of lattice path polymatroids with
//! certificates and diagrams, the excluded-minor types for lattice path
//! polymatroids and an exhaustive check of that characterization on small
//! families.

mod bits;
pub mod boolean;
pub mod diagram;
pub mod enumerate;
mod error;
pub mod excluded;
mod exec;
pub mod format;
pub mod latticepath;
pub mod polymatroid;

#[cfg(test)]
mod fixtures;

/// Largest ground set.
pub const MAX_GROUND: usize = 16;
/// Largest support universe.
pub const MAX_UNIVERSE: usize = 32;
/// Largest ground set for [`RankTable::canonical_key`].
pub const MAX_CANONICAL: usize = 8;
/// Largest family for [`excluded::find_excluded_minor`].
pub const MAX_SEARCH: usize = 10;

pub use bits::{IndexSet, Subset};
pub use boolean::{
    from_matus_form, is_boolean, rank_from_supports, recover_supports, support_contract, support_delete,
    support_graph, Deficit, MatusCoefficients, SupportFamily, SupportGraph, SupportMultiset,
};
pub use diagram::{render_diagram, Diagram, Row};
pub use enumerate::{
    enumerate_families, enumerate_families_with, family_canonical_key, verify_theorem, verify_theorem_with,
    FamilyCanonicalKey, Mismatch, VerificationReport,
};
pub use error::{Error, Result};
pub use excluded::{
    classify, classify_quad, classify_triple, find_excluded_minor, find_excluded_minor_with,
    generate_type_instance, is_boolean_cycle, region_names, venn3, verify_excluded_minor, Classification,
    CycleDecomposition, ExcludedMinorWitness, TypeTag, Venn3Regions,
};
pub use exec::Execution;
pub use format::{parse_document, parse_rank_table, parse_support_family, write_rank_table, write_support_family, Document};
pub use latticepath::{
    brute_force_lp, check_s3, recognize_lattice_path, validate_certificate, Interval, LatticePathCertificate,
};
pub use polymatroid::{make_rank_table, AxiomReport, CanonicalKey, GroundSet, RankTable, Violation};
