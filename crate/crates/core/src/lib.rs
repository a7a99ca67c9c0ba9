//! Exact arithmetic for third-order Jacobsthal sequences and their
//! 3-parameter generalized quaternions.
//!
//! - [`scalars`]: exact rationals and polynomials in `λ1, λ2, λ3`, behind one
//!   [`Ring`](scalars::Ring) trait.
//! - [`sequences`]: `X_n`, `J_n`, `K_n` at every integer index, with
//!   recurrence, Binet and companion-matrix engines.
//! - [`quaternions`]: the algebra `e1² = -λ1λ2`, `e2² = -λ1λ3`,
//!   `e3² = -λ2λ3`, over symbolic λ or a rational point.
//! - [`tjq`]: `JG_n`, `KG_n`, their closed forms and an identity checker that
//!   evaluates both sides along independent paths.
//! - [`cli`]: the `tjq` command line.
//!
//! Each capability has a runnable example under `examples/`: `sequences`,
//! `fast_engine`, `quaternion_algebra`, `table_signatures`,
//! `quaternion_sequences`, `generating_functions`, `identity_catalog`,
//! `k0_witness`, `verification_suite` and `cli_embedding`.
//!
//! ```
//! use jacobsthal_quat::quaternions::LambdaSig;
//! use jacobsthal_quat::scalars::Poly3;
//! use jacobsthal_quat::tjq::{check_identity, jg, IdentityId, Params};
//! use jacobsthal_quat::sequences::Family;
//!
//! let sig = LambdaSig::<Poly3>::symbolic();
//! assert_eq!(jg(2, &sig).to_string(), "(1) + (2)e1 + (5)e2 + (9)e3");
//!
//! let r = check_identity(IdentityId::CassiniJ, &Params::n(1), None, &Family::k3()).unwrap();
//! assert!(r.pass);
//! ```

pub mod cli;
pub mod error;
pub mod quaternions;
pub mod scalars;
pub mod sequences;
pub mod tjq;
