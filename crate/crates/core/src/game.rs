//! Free type representations, type weights and the minimal homogeneous
//! representation of a parsimonious game.
//!
//! Types are numbered `1..=h` by increasing weight. Type `h` holds the single
//! top player, so a game is determined by the counts `x_1, ..., x_{h-1}` of
//! the remaining types. Weights follow
//!
//! ```text
//! w_0 = 0, w_1 = 1, w_t = x_{t-1} * w_{t-1} + w_{t-2}     (2 <= t <= h-1)
//! top = (x_{h-1} - 1) * w_{h-1} + w_{h-2}
//! ```
//!
//! and the minimal winning quota is `q = top + w_{h-1} = (1 + w(N)) / 2`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

/// Reasons a raw integer vector is not a free type representation.
///
/// Positions are 1-based, matching the component names `x_1, x_2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error("free type representation is empty")]
    EmptyVector,
    #[error("component x_{position} = {value} is not positive")]
    NonPositiveComponent { position: usize, value: i64 },
    #[error("component x_{position} = {value} is below its lower bound {min}")]
    BoundViolation {
        position: usize,
        value: i64,
        min: u64,
    },
    #[error("game has {n} players, at least 4 are required")]
    TooFewPlayers { n: u128 },
}

/// Validated free type representation `(x_1, ..., x_{h-1})`.
///
/// The only way to obtain one is [`FreeTypeRepr::new`], so every value in
/// circulation satisfies the boundary bounds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeTypeRepr {
    counts: Vec<u64>,
    n: u128,
}

impl FreeTypeRepr {
    /// Validates `raw` as a free type representation.
    ///
    /// Every component must be positive; when there are at least three types
    /// the first and last components must be at least 2, and the two-type game
    /// needs at least 3 players of type 1. Interior components equal to 1 are
    /// legal.
    pub fn new(raw: &[i64]) -> Result<Self, ReprError> {
        if raw.is_empty() {
            return Err(ReprError::EmptyVector);
        }
        if let Some((i, &value)) = raw.iter().enumerate().find(|&(_, &v)| v < 1) {
            return Err(ReprError::NonPositiveComponent {
                position: i + 1,
                value,
            });
        }

        let last = raw.len();
        if last == 1 {
            if raw[0] < 3 {
                return Err(ReprError::BoundViolation {
                    position: 1,
                    value: raw[0],
                    min: 3,
                });
            }
        } else {
            for position in [1, last] {
                let value = raw[position - 1];
                if value < 2 {
                    return Err(ReprError::BoundViolation {
                        position,
                        value,
                        min: 2,
                    });
                }
            }
        }

        let counts: Vec<u64> = raw.iter().map(|&v| v as u64).collect();
        let n = 1 + counts.iter().map(|&c| u128::from(c)).sum::<u128>();
        if n < 4 {
            return Err(ReprError::TooFewPlayers { n });
        }
        Ok(Self { counts, n })
    }

    /// The components `x_1, ..., x_{h-1}`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Component `x_t`, 1-based. Panics when `t` is outside `1..h`.
    pub fn x(&self, t: usize) -> u64 {
        self.counts[t - 1]
    }

    /// Number of types, including the top type.
    pub fn h(&self) -> usize {
        self.counts.len() + 1
    }

    /// Number of players.
    pub fn n(&self) -> u128 {
        self.n
    }

    /// The reversed vector. Reversal swaps `x_1` and `x_{h-1}`, so the result
    /// is valid whenever `self` is.
    pub fn reversed(&self) -> Self {
        let mut counts = self.counts.clone();
        counts.reverse();
        Self { counts, n: self.n }
    }

    pub fn is_palindrome(&self) -> bool {
        self.counts.iter().eq(self.counts.iter().rev())
    }
}

impl fmt::Display for FreeTypeRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Type weights `w_0, ..., w_{h-1}` plus the weight of the top player.
///
/// `w_0 = 0` is a seed of the recurrence and belongs to no player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    pub weights: Vec<BigUint>,
    pub top_weight: BigUint,
}

impl WeightProfile {
    /// Weight of type `t` for `t < h`.
    pub fn weight(&self, t: usize) -> &BigUint {
        &self.weights[t]
    }

    /// Number of types `h`.
    pub fn h(&self) -> usize {
        self.weights.len()
    }
}

/// Minimal homogeneous representation `(q; w_1, ..., w_n)`.
///
/// Games built by [`expand_game`] satisfy `2q = 1 + w(N)`. Arbitrary
/// games (for instance tampered ones handed to the oracle) can be built with
/// [`GameRepresentation::from_weights`], which only sorts the weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameRepresentation {
    pub quota: BigUint,
    pub player_weights: Vec<BigUint>,
    pub total_weight: BigUint,
}

impl GameRepresentation {
    pub fn from_weights(quota: BigUint, mut player_weights: Vec<BigUint>) -> Self {
        player_weights.sort();
        let total_weight = player_weights.iter().sum();
        Self {
            quota,
            player_weights,
            total_weight,
        }
    }

    /// Number of players.
    pub fn n(&self) -> usize {
        self.player_weights.len()
    }
}

impl fmt::Display for GameRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.quota)?;
        for (i, w) in self.player_weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

/// Iterates `u_t = x_{t-1} * u_{t-1} + u_{t-2}` from `u_0 = 0, u_1 = 1`,
/// returning `u_0..=u_last`.
fn weight_recurrence(fx: &FreeTypeRepr, last: usize) -> Vec<BigUint> {
    let mut seq = Vec::with_capacity(last + 1);
    seq.push(BigUint::zero());
    seq.push(BigUint::one());
    for t in 2..=last {
        let next = &seq[t - 1] * fx.x(t - 1) + &seq[t - 2];
        seq.push(next);
    }
    seq
}

pub fn type_weights(fx: &FreeTypeRepr) -> WeightProfile {
    let h = fx.h();
    let weights = weight_recurrence(fx, h - 1);
    let top_weight = &weights[h - 1] * (fx.x(h - 1) - 1) + &weights[h - 2];
    WeightProfile {
        weights,
        top_weight,
    }
}

/// Minimal winning quota from `q_0 = 0, q_1 = 1, q_t = x_{t-1} q_{t-1} + q_{t-2}`
/// evaluated at `t = h`.
pub fn quota_recursive(fx: &FreeTypeRepr) -> BigUint {
    let h = fx.h();
    let (mut prev, mut cur) = (BigUint::zero(), BigUint::one());
    for t in 2..=h {
        let next = &cur * fx.x(t - 1) + &prev;
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// Builds the full minimal homogeneous representation: `x_t` players of
/// weight `w_t` for each `t < h`, one top player, and the recursive quota.
pub fn expand_game(fx: &FreeTypeRepr) -> GameRepresentation {
    let profile = type_weights(fx);
    let mut player_weights = Vec::new();
    for t in 1..fx.h() {
        for _ in 0..fx.x(t) {
            player_weights.push(profile.weights[t].clone());
        }
    }
    player_weights.push(profile.top_weight);
    let total_weight = player_weights.iter().sum();
    GameRepresentation {
        quota: quota_recursive(fx),
        player_weights,
        total_weight,
    }
}
