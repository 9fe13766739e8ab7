//! Essential monomial bases of irreducible modules of simple complex Lie algebras.
//!
//! Given a sequence of positive roots `S = (beta_1, ..., beta_M)`, a monomial order on
//! exponent vectors and a dominant integral weight `lambda`, the essential exponents
//! `es(S, >, lambda)` are the exponents `m` for which `f^m v_lambda` is not in the span
//! of the smaller monomials applied to the highest weight vector. Their monomials form
//! a basis of `V(lambda)`. The crate computes these sets exactly, both directly and via
//! Minkowski sums of the sets of smaller weights, and the generators of the graded
//! monoid they form for a fixed Kodaira embedding.

pub mod chevalley;
pub mod error;
pub mod essential;
pub mod irrep;
pub mod linalg;
pub mod monoid;
pub mod orders;
pub mod rootdata;
pub mod sequences;
pub mod verma;

pub use chevalley::{BasisElement, ChevalleyBasis, LieElement, SignConvention, SignedRoot};
pub use error::{Error, Result};
pub use essential::{
    compute_basis, essential_direct, Backend, Engine, EngineOptions, EssentialReport, EssentialSet,
    Exponent, Generator,
};
pub use irrep::{HighestWeightModule, MonomialEvaluator, WeightVector};
pub use monoid::{
    generator_census, kodaira, reduced_words_w0, CensusOptions, CensusResult, KodairaResult,
};
pub use orders::MonomialOrder;
pub use rootdata::{dominant_decompositions, Family, RootSystem, Weight, WeightSystem, WeylWord};
pub use sequences::{BirationalSequence, Origin, Preset};
pub use verma::{VermaModule, VermaVector, WeightSpaceContext};
