//! Exact computations in free involutive Hom-associative algebras and in the universal
//! enveloping algebras of involutive Hom-Lie algebras, with PBW normal forms and a
//! brute-force linear-algebra oracle.

pub mod adapt;
pub mod algebra_file;
pub mod cli;
pub mod error;
pub mod expr;
pub mod fixtures;
pub mod free_assoc;
pub mod hom_lie;
pub mod linalg;
pub mod oracle;
pub mod pbw;
pub mod random;
pub mod scalar;
pub mod session;
pub mod tensor;

pub use adapt::{adapt_basis, adapt_involution, rebase, AdaptedBasis};
pub use algebra_file::AlgebraFile;
pub use error::{Error, Result};
pub use free_assoc::{extend_morphism, hom_product_explicit, hom_product_rec, HomAssocAlgebra, MorphismExtension};
pub use hom_lie::{check_axioms, commutator_homlie, yau_twist, Axiom, AxiomReport, HomLieAlgebra};
pub use linalg::{RatMatrix, StructureConstants};
pub use oracle::OracleReport;
pub use pbw::{index_of, is_pbw_word, PbwContext, Strategy};
pub use scalar::{Scalar, Sign};
pub use session::Session;
pub use tensor::{InvolutiveHomModule, TensorElement, Word};
