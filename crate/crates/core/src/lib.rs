//! Exact arithmetic in skew polynomial rings `B[X; rho, D]` over finite
//! rings, and deciders for separability and Hirata separability of the
//! quotient `B[X; rho, D] / f B[X; rho, D]` by an invariant monic `f`.
//!
//! Base rings are free `Z/c`-modules given by structure constants
//! ([`ring`], [`constructors`]). [`skew`] holds polynomials and the
//! invariance tests, [`quotient`] the quotient ring and its twisted
//! centralizers, and [`tensor`] the tensor square used by the definitional
//! checks. [`separability`] decides both properties and returns witnesses
//! that can be re-verified. [`catalog`] and [`cli`] drive batch runs.
//!
//! ```
//! use skewsep::{corpus, separability::decide, skew::SkewPolynomial};
//!
//! let ctx = corpus::dual_numbers_ddt();
//! let zero = ctx.ring().zero();
//! let f = SkewPolynomial::monic(&ctx, vec![zero.clone(), zero]).unwrap();
//! let report = decide(&f).unwrap();
//! assert!(report.separable.is_yes() && report.hirata.is_yes());
//! ```

pub mod catalog;
pub mod cli;
pub mod config;
pub mod constructors;
pub mod corpus;
pub mod error;
pub mod linalg;
pub mod quotient;
pub mod ring;
pub mod separability;
pub mod skew;
pub mod tensor;
