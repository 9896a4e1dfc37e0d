//! Exact arithmetic for parsimonious games.
//!
//! A parsimonious game is a constant-sum homogeneous weighted majority game
//! with exactly `n` minimal winning coalitions. Such a game is fully described
//! by its free type representation `(x_1, ..., x_{h-1})`, the number of
//! players of each non-top type. This crate computes, from that vector:
//!
//! * the type weights and the top weight ([`game::type_weights`]),
//! * the minimal winning quota, by its second order recurrence
//!   ([`game::quota_recursive`]) and by its generalized k-Fibonacci
//!   polynomial expansion ([`expansion::quota_polynomial`]),
//! * the full minimal homogeneous representation ([`game::expand_game`]),
//!
//! together with k-Fibonacci numbers by four independent routes
//! ([`fibonacci`]) and an exhaustive coalition-enumeration verifier
//! ([`oracle`]).
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use parsimonious_core::{expand_game, quota_polynomial, FreeTypeRepr};
//!
//! let fx = FreeTypeRepr::new(&[3, 1, 2, 2]).unwrap();
//! let game = expand_game(&fx);
//! assert_eq!(game.to_string(), "(26;1,1,1,3,4,4,11,11,15)");
//! assert_eq!(quota_polynomial(&fx).total, game.quota);
//! ```
#![no_std]

extern crate alloc;

pub mod expansion;
pub mod fibonacci;
pub mod game;
pub mod oracle;

mod dd;

pub use expansion::{
    addend_value, enumerate_addends, is_self_symmetric, is_uniform, mirror_addend,
    quota_polynomial, twin, Addend, ExpansionError, QuotaBreakdown, Twin,
};
pub use fibonacci::{
    binomial, fibonacci, k_fibonacci, k_fibonacci_binet, k_fibonacci_binomial, k_fibonacci_mpt,
    mpt_triangle, BinetApprox, FibonacciPolynomial, MptTriangle,
};
pub use game::{
    expand_game, quota_recursive, type_weights, FreeTypeRepr, GameRepresentation, ReprError,
    WeightProfile,
};
pub use oracle::{
    enumerate_minimal_winning, verify_parsimonious, Coalition, Oracle, OracleError, PreparedGame,
    ScanState, VerificationReport, DEFAULT_EXHAUSTIVE_BOUND, MAX_EXHAUSTIVE_BOUND,
};

pub use num_bigint::BigUint;
