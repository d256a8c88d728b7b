//! Exact computation of normalized characters of symmetric groups on Young
//! diagrams, and of the polynomials expressing them in terms of shape data.
//!
//! The crate works in exact rational arithmetic throughout. Its main outputs
//! are the character polynomials `J_k` (in the fundamental functionals
//! `S_2, S_3, ...`) and the Kerov polynomials `K_k` (in the free cumulants
//! `R_2, R_3, ...`), both generated by enumerating factorizations
//! `σ1 ∘ σ2 = (1, 2, ..., k)` of the long cycle.
//!
//! Every quantity has at least two independent routes:
//!
//! * characters: Murnaghan–Nakayama ([`charoracle`]) and the Stanley–Féray
//!   sum over factorizations ([`stanley`]);
//! * `S_k`: box integrals and Frobenius-coordinate integrals;
//! * `R_k`: the explicit formula in `S`, polynomial interpolation in the
//!   dilation parameter, and the minimal-factorization sum;
//! * `K_k`: triple counting with the marriage condition, and substitution
//!   of `S(R)` into `J_k`.
//!
//! Enumeration over the symmetric group is the hot loop. With the default
//! `parallel` feature it is split across rayon workers by one-line prefix;
//! without it, a sequential sweep is used. Results are identical either way.

pub mod charoracle;
pub mod diagrams;
pub mod error;
pub mod functionals;
pub mod kerov;
pub mod permutations;
pub mod rational;
pub mod ratpoly;
pub mod stanley;
pub mod sweep;
pub mod transport;
pub mod verify;

pub use charoracle::{dimension, mn_character, normalized_character, normalized_character_general};
pub use diagrams::{FrobeniusCoords, MultiRect, Partition};
pub use error::{Error, Result};
pub use kerov::{kerov_polynomial_by_conversion, kerov_polynomial_by_counting};
pub use permutations::{CycleSet, Permutation};
pub use rational::Rational;
pub use ratpoly::{Family, Monomial, RatPoly, Variable};
pub use stanley::{j_polynomial_by_counting, StanleyPolynomial};
pub use sweep::Execution;
