//! Exact computations with Schubert polynomials: divided differences,
//! universal Schubert polynomials in Chern-class variables, Stanley
//! symmetric functions, and quiver coefficients counted by tableaux.

pub mod error;
pub mod permutation;
pub mod poly;
pub mod quiver;
pub mod schubert;
pub mod shapes;
pub mod verify;

pub use error::{Error, Result};
pub use permutation::{Permutation, ReducedWord};
pub use poly::{Alphabet, Family, Monomial, Polynomial, Var};
pub use quiver::{GiambelliExpression, SchurSeqExpansion, SplitResult};
pub use schubert::{EExpansion, SchurExpansion};
pub use shapes::{Partition, SkewShape, SkewTableau, Tableau};
