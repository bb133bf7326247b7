//! Group matrices `M_f = (f(g h⁻¹))` of class functions and Cayley graphs,
//! and their spectra by dense diagonalization or through the class algebra.

mod checks;
mod class_algebra;
mod class_function;
pub mod jacobi;
mod matrix;
mod spectrum;

pub use checks::{bipartite_check, spectral_radius_check, two_colorable, RadiusReport};
pub use class_algebra::{
    spectrum_class_algebra, CentralCharacter, ClassAlgebraData, ClassAlgebraOptions, MAX_CLASSES,
};
pub use class_function::ClassFunction;
pub use matrix::{
    adjacency_matrix, build_matrix, distance_matrix_bfs, spectrum_numeric, ConnectionSet,
    GroupMatrix, MatrixKind, DEFAULT_MAX_MATRIX,
};
pub use spectrum::{Eigenpair, Method, RawCluster, Spectrum, CLUSTER_TOLERANCE, DEFAULT_TOLERANCE};
