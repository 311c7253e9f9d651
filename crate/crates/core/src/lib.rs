//! Tangent cones, multiplicities and topological bounds for germs of real
//! algebraic sets at the origin.
//!
//! The pipeline reads an ideal, computes the ideal of initial forms with a
//! standard basis, reads dimension and multiplicity off its Hilbert series,
//! finds the dimension of the singular locus of the cone, and evaluates the
//! bounds on sums of Betti numbers, polar invariants and local
//! Lipschitz-Killing invariants that follow from them.

pub mod bounds;
pub mod cli;
pub mod crofton;
pub mod families;
pub mod groebner;
pub mod hilbert;
pub mod localforms;
pub mod numtopo;
pub mod parser;
pub mod polyring;
pub mod singular;

pub use bounds::GermReport;
pub use groebner::{tangent_cone, Budget, TangentConeIdeal};
pub use hilbert::{germ_multiplicity, hilbert_series, HilbertData};
pub use parser::{parse_ideal, IdealFile};
pub use polyring::{Monomial, MonomialOrder, Polynomial};
