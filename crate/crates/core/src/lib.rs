//! Congruence invariants of ordered point triples in quaternionic projective
//! and hyperbolic space.
//!
//! The crate implements, over the quaternions:
//!
//! - the signature-(n,1) Hermitian form, point classification, and the
//!   hyperbolic metric ([`hermspace`]);
//! - Gram matrices of point tuples, their equivalence under diagonal
//!   rescaling, and every normal form used to decide congruence, including
//!   the reduction of any triple to a complex 2-dimensional slice ([`gram`]);
//! - the numerical invariants of pairs and triples: Cartan's angular
//!   invariant, the shape invariants σ* and τ*, the distance-angular
//!   d-invariant, the angular invariant of hyperplane triples, the Goldman
//!   η-invariant for mixed configurations, and the mixed distance
//!   ([`invariants`]);
//! - classification of triples into configuration classes and the full
//!   congruence decision with explicit isometry witnesses ([`congruence`]);
//! - the moduli space of regular generic hyperplane triples ([`moduli`]);
//! - parametric families demonstrating that line-distance and Cartan data do
//!   not determine mixed triples up to isometry ([`counterexamples`]).

pub mod congruence;
pub mod counterexamples;
pub mod error;
pub mod gram;
pub mod hermspace;
pub mod invariants;
pub mod linalg;
pub mod moduli;
pub mod quaternion;
pub mod sampling;
pub mod selftest;
pub mod tol;

pub use error::{Error, Result};
pub use hermspace::{HVector, HermitianSpace, ProjectivePoint, Sign};
pub use quaternion::{ComplexRep, Quaternion};
pub use tol::Tolerances;
