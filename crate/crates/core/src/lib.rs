//! Exact analysis of real bihomogeneous polynomials on `C^n x C^n`.
//!
//! A real polynomial `r(z, conj z)` of bidegree `(m, m)` is stored as the
//! Hermitian coefficient matrix indexed by lex-ordered degree-`m` monomials.
//! From that matrix the crate computes signature pairs and ranks, decides
//! when `r * |z|^(2d)` is a squared norm, builds the graded components of
//! the homogeneous ideals spanned by a holomorphic decomposition, and checks
//! the Hilbert-function inequalities that relate these quantities.
//!
//! All arithmetic is exact (arbitrary precision rationals and Gaussian
//! rationals). No floating point value enters any verdict.

pub mod bounds;
pub mod error;
pub mod hermitian;
pub mod macaulay;
pub mod numeric;
pub mod polyring;
pub mod random;

pub use bounds::{
    admissible_ranks, audit, corollary1_holds, corollary2_bound, prop42_holds, theorem_lower_bound,
    AuditReport, RankAdmissibility, RankWitness,
};
pub use error::{Error, Result};
pub use hermitian::{BihomForm, GeneratorSpans, HermitianMatrix, SignatureReport, WeightedForm};
pub use macaulay::{iterated_shift, macaulay_rep, macaulay_shift, MacaulayRep, MacaulayTerm};
pub use numeric::{binomial, dim_forms, multinomial, GaussianRational, Rational};
pub use polyring::{
    component_basis, hilbert_ideal, hilbert_quotient, initial_component, is_lex_segment,
    monomials_of_degree, spans_contain, verify_gotzmann, verify_macaulay_growth, Echelon,
    GotzmannCheck, GradedIdeal, GrowthCheck, HomogPoly, MultiIndex,
};
