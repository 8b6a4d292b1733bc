//! Matricubes: integer rank functions on hypercuboids `[0,r_1]×…×[0,r_d]`
//! satisfying normalisation with unit axis steps, monotonicity and
//! submodularity. They generalise matroids (the case `r_i = 1`).
//!
//! The crate covers the rank-function axioms and their diamond shortcut,
//! the flats / circuits / independents presentations with their axiom
//! systems and reconstructions, duality, minors, direct sums and the Tutte
//! polynomial, representable matricubes built from flags over exact fields,
//! local matroids and coherent complexes, natural polymatroids and
//! matroids, flag-matroid unions, permutation arrays, and an exhaustive
//! enumerator used as a correctness oracle.
//!
//! Directions are 0-indexed throughout. Rank tables use the canonical flat
//! layout of [`lattice::Hypercuboid`].

pub mod cryptomorph;
pub mod enumerate;
pub mod error;
pub mod grid;
pub mod lattice;
pub mod matricube;
pub mod matroid;
pub mod par;
pub mod permarray;
pub mod report;
pub mod represent;
pub mod submodular;
pub mod transforms;

pub use cryptomorph::{
    ccir_of, circuits_of, flats_of, independents_of, matricube_from_circuits, matricube_from_flats,
    matricube_from_independents, validate_circuit_axioms, validate_flat_axioms,
    validate_independent_axioms, PointSet,
};
pub use enumerate::{bruteforce_matricubes, enumerate_matricubes, EnumOptions};
pub use error::{Error, Result};
pub use lattice::{make_hypercuboid, Hypercuboid, Point, Width};
pub use matricube::{
    check_dominated_by_uniform, is_simple, rank, rank_of, uniform, validate_rank_axioms, Limits,
    Matricube, RankTable,
};
pub use matroid::{
    coherent_complex_of, local_matroid, matricube_from_coherent, matricube_from_flag_matroids,
    matroid_union_rank, natural_matroid, natural_polymatroid, validate_coherent,
    validate_flag_matroid, validate_matroid, CoherentComplex, FlagMatroid, Matroid, Polymatroid,
};
pub use par::Exec;
pub use permarray::{
    is_permutation_array, matricube_from_permarray, permarray_from_matricube, rank_along, DotArray,
};
pub use report::{Axiom, Report, Scan, Violation, Witness};
pub use represent::{general_position_flags, matricube_from_flags, CubicalMatrix, FieldSpec};
pub use submodular::{check_diamond, check_multidirectional, check_submodular_bruteforce};
pub use transforms::{
    basis_candidates, contract, delete, direct_sum, dual, is_coloop, is_loop, minor, tutte,
    BasisCandidateKind, TwoVarPolynomial,
};
