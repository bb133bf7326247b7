//! Monomial complex reflection groups `G(r,p,n)`, the Cayley graphs on their
//! reflections, and the integral spectra of adjacency, distance and
//! codimension matrices.
//!
//! Spectra are available by three independent routes: dense numeric
//! diagonalization ([`spectra::spectrum_numeric`]), the class algebra
//! ([`spectra::ClassAlgebraData`]), and, for the codimension spectrum of
//! `G(r,1,n)`, Young-diagram contents ([`partition::codim_spectrum_combinatorial`]).

pub mod arith;
pub mod catalog;
pub mod cli;
pub mod context;
pub mod error;
pub mod export;
pub mod group;
pub mod partition;
pub mod reflection;
pub mod spectra;
pub mod verify;

pub use context::{compute_spectrum, Caps, Connection, ReflectionGroup, SpectrumRequest};
pub use error::{Error, Result};
pub use group::{Group, GroupElement, GroupParams};
pub use spectra::{MatrixKind, Method, Spectrum};
