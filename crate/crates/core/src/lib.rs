//! Exact verification engine for generalized k-contact structures on
//! homogeneous spaces of semisimple Lie groups.
//!
//! The crate builds matrix Lie algebras (`so(k, k+n)`, `sl(n)`, or any table
//! that passes the Lie axioms), computes their restricted root decompositions
//! with exact rational arithmetic, and certifies the contact, Reeb and Anosov
//! data carried by left-invariant forms extended from a Cartan subspace.
//!
//! Dense kernels are generic over [`Scalar`]; the certification layers work
//! over the [`Rational`] alias.

pub mod algebra;
pub mod anosov;
pub mod contact;
mod error;
pub mod expm;
pub mod extension;
pub mod exterior;
pub mod io;
pub mod kammeyer;
pub mod matrix;
pub mod pfaffian;
pub mod roots;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rational, the scalar of every certificate.
pub type Rational = num_rational::BigRational;
/// Exact square or rectangular matrix.
pub type QMatrix = matrix::Matrix<Rational>;
/// Double-precision matrix used by the growth spot-check.
pub type FMatrix = matrix::Matrix<f64>;
/// Exact Lie algebra.
pub type QAlgebra = algebra::LieAlgebra<Rational>;
/// Coordinates in an algebra basis.
pub type QVector = Vec<Rational>;

pub use algebra::{build_sl_n, build_so_kkn, Subspace};
pub use pfaffian::pfaffian;
pub use roots::{centralizer, check_condition_a, restricted_roots, CartanSubspace, RootDatum, RootDecomposition};
pub use exterior::{dform_gram, extend_form, wedge_eval_oracle, OneForm, TwoFormGram};
pub use contact::{
    complete_precontact, find_form_basis, reeb_frame, reparameterize, sokkn_admissible, verify_contact,
    ContactCertificate, ContactStructure, ReebFrame,
};
pub use anosov::{adapt_parameterization, growth_spotcheck, is_anosov, AnosovOutcome};
pub use kammeyer::{sl_table, verify_kammeyer_relations, KammeyerReport, KammeyerTable};
pub use extension::{apply_extension, central_extension, modified_weyl, ExtensionKind, ExtensionResult, ExtensionSpec};
