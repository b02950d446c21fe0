//! Exact-arithmetic analysis of linear codes over finite fields.
//!
//! The crate provides finite-field and dense matrix arithmetic, linear
//! codes with hull and LCD analysis, weight and Tutte enumeration with
//! their polynomial identities, and constructive monomial transforms
//! that turn a code into an equivalent LCD code.

pub mod code;
pub mod eisenstein;
pub mod enumerate;
pub mod gf;
pub mod lcdize;
pub mod matfq;
pub mod poly;
pub mod sample;

pub use code::{CodeError, HullFlavor, HullReport, LinearCode, MonomialTransform};
pub use eisenstein::EisensteinInt;
pub use enumerate::{
    BinaryInvariant, EnumError, TernaryInvariant, WeightSpectrum, DEFAULT_CODEWORD_BUDGET,
    DEFAULT_SUBSET_BUDGET,
};
pub use gf::{FieldElement, FieldError, FieldSpec, SubfieldEmbedding};
pub use lcdize::{LcdizeError, LcdizeResult, Strategy};
pub use matfq::{MatError, MatrixFq, RrefResult};
pub use poly::{Exp, MultiPoly, Var};
