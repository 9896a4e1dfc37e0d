//! Exhaustive verification of weighted majority games by coalition
//! enumeration.
//!
//! Every one of the `2^n` coalitions is visited. A coalition `S` wins when
//! `w(S) >= q` and is minimal winning when removing any single member makes it
//! lose; with players sorted by weight it suffices to drop the lightest one.
//!
//! Players are the positions `0..n` of the sorted weight vector and coalitions
//! are bitmasks over those positions. The subset space can be split into
//! ranges, scanned independently with [`PreparedGame::scan`] and combined with
//! [`ScanState::merge`]; merging in ascending range order gives the same report
//! as a single sequential scan.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use num_bigint::BigUint;
use thiserror::Error;

use crate::game::GameRepresentation;

/// Largest `n` verified unless a caller raises the bound.
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 24;

/// Hard ceiling on the bound: coalitions are `u64` masks.
pub const MAX_EXHAUSTIVE_BOUND: usize = 63;

const DEFAULT_MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("game has {n} players, exhaustive bound is {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("total weight does not fit the native enumeration width")]
    WeightOverflow,
}

/// A set of players, as a bitmask over sorted player positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(pub u64);

impl Coalition {
    /// Member positions in increasing order.
    pub fn members(self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }

    pub fn contains(self, player: usize) -> bool {
        player < 64 && self.0 >> player & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self, n: usize) -> Coalition {
        Coalition(!self.0 & full_mask(n))
    }

    /// Exact weight of the coalition in `game`.
    pub fn weight(self, game: &GameRepresentation) -> BigUint {
        self.members()
            .into_iter()
            .filter_map(|i| game.player_weights.get(i))
            .sum()
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (j, i) in self.members().into_iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Outcome of [`Oracle::verify`]. Every flag is derived from the enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub mwc_count: u64,
    /// For every coalition exactly one of it and its complement wins.
    pub constant_sum_ok: bool,
    /// Every minimal winning coalition weighs exactly `q`.
    pub homogeneous_ok: bool,
    /// `2q = 1 + w(N)`.
    pub quota_identity_ok: bool,
    /// Exactly `n` minimal winning coalitions.
    pub parsimonious_ok: bool,
    /// Coalitions `S` (containing the top player) where `S` and its
    /// complement both win or both lose.
    pub constant_sum_witnesses: Vec<Coalition>,
    /// Minimal winning coalitions whose weight differs from `q`.
    pub homogeneous_witnesses: Vec<Coalition>,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.constant_sum_ok
            && self.homogeneous_ok
            && self.quota_identity_ok
            && self.parsimonious_ok
    }
}

/// Configuration of the exhaustive verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub bound: usize,
    pub max_witnesses: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            bound: DEFAULT_EXHAUSTIVE_BOUND,
            max_witnesses: DEFAULT_MAX_WITNESSES,
        }
    }
}

impl Oracle {
    pub fn with_bound(bound: usize) -> Self {
        Self {
            bound,
            ..Self::default()
        }
    }

    pub fn prepare(&self, game: &GameRepresentation) -> Result<PreparedGame, OracleError> {
        let n = game.n();
        let bound = self.bound.min(MAX_EXHAUSTIVE_BOUND);
        if n > bound {
            return Err(OracleError::TooLarge {
                n,
                bound: self.bound,
            });
        }
        PreparedGame::new(game)
    }

    /// All minimal winning coalitions, in increasing mask order.
    pub fn enumerate_minimal_winning(
        &self,
        game: &GameRepresentation,
    ) -> Result<Vec<Coalition>, OracleError> {
        let prepared = self.prepare(game)?;
        Ok(prepared.minimal_winning(0..prepared.subset_count()))
    }

    pub fn verify(&self, game: &GameRepresentation) -> Result<VerificationReport, OracleError> {
        let prepared = self.prepare(game)?;
        let state = prepared.scan(0..prepared.subset_count(), self.max_witnesses);
        Ok(self.report(game, state))
    }

    /// Turns the merged scan of the full subset space into a report.
    pub fn report(&self, game: &GameRepresentation, state: ScanState) -> VerificationReport {
        let n = game.n();
        let quota_identity_ok = &game.quota * 2u32 == &game.total_weight + 1u32;
        VerificationReport {
            n,
            mwc_count: state.mwc_count,
            constant_sum_ok: state.constant_sum_violations == 0,
            homogeneous_ok: state.homogeneous_violations == 0,
            quota_identity_ok,
            parsimonious_ok: state.mwc_count == n as u64,
            constant_sum_witnesses: state.constant_sum_witnesses,
            homogeneous_witnesses: state.homogeneous_witnesses,
        }
    }
}

/// [`Oracle::enumerate_minimal_winning`] with the default bound.
pub fn enumerate_minimal_winning(game: &GameRepresentation) -> Result<Vec<Coalition>, OracleError> {
    Oracle::default().enumerate_minimal_winning(game)
}

/// [`Oracle::verify`] with the default bound.
pub fn verify_parsimonious(game: &GameRepresentation) -> Result<VerificationReport, OracleError> {
    Oracle::default().verify(game)
}

/// Partial result of scanning a range of coalitions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScanState {
    pub mwc_count: u64,
    pub constant_sum_violations: u64,
    pub homogeneous_violations: u64,
    pub constant_sum_witnesses: Vec<Coalition>,
    pub homogeneous_witnesses: Vec<Coalition>,
    max_witnesses: usize,
}

impl ScanState {
    fn new(max_witnesses: usize) -> Self {
        Self {
            max_witnesses,
            ..Self::default()
        }
    }

    /// Combines with the state of the range that directly follows this one.
    pub fn merge(mut self, later: ScanState) -> ScanState {
        self.mwc_count += later.mwc_count;
        self.constant_sum_violations += later.constant_sum_violations;
        self.homogeneous_violations += later.homogeneous_violations;
        let cap = self.max_witnesses.max(later.max_witnesses);
        self.max_witnesses = cap;
        for (mine, theirs) in [
            (
                &mut self.constant_sum_witnesses,
                later.constant_sum_witnesses,
            ),
            (&mut self.homogeneous_witnesses, later.homogeneous_witnesses),
        ] {
            let room = cap.saturating_sub(mine.len());
            mine.extend(theirs.into_iter().take(room));
        }
        self
    }
}

/// A game converted to native integers, with half-table subset sums so each
/// coalition weight costs two lookups.
#[derive(Debug, Clone)]
pub struct PreparedGame {
    n: usize,
    weights: Vec<u128>,
    quota: u128,
    total: u128,
    split: usize,
    low_sums: Vec<u128>,
    high_sums: Vec<u128>,
}

impl PreparedGame {
    fn new(game: &GameRepresentation) -> Result<Self, OracleError> {
        let mut sorted = game.player_weights.clone();
        sorted.sort();
        let weights = sorted
            .iter()
            .map(|w| u128::try_from(w).map_err(|_| OracleError::WeightOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        let total = weights
            .iter()
            .try_fold(0u128, |acc, &w| acc.checked_add(w))
            .filter(|&t| t < u128::MAX)
            .ok_or(OracleError::WeightOverflow)?;
        // A quota above w(N) makes every coalition lose, as does total + 1.
        let quota = u128::try_from(&game.quota)
            .unwrap_or(u128::MAX)
            .min(total + 1);

        let n = weights.len();
        let split = n / 2;
        let low_sums = subset_sums(&weights[..split]);
        let high_sums = subset_sums(&weights[split..]);
        Ok(Self {
            n,
            weights,
            quota,
            total,
            split,
            low_sums,
            high_sums,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `2^n`.
    pub fn subset_count(&self) -> u64 {
        1u64 << self.n
    }

    #[inline]
    fn weight(&self, mask: u64) -> u128 {
        let low = mask & ((1u64 << self.split) - 1);
        self.low_sums[low as usize] + self.high_sums[(mask >> self.split) as usize]
    }

    #[inline]
    fn is_minimal_winning(&self, mask: u64, weight: u128) -> bool {
        if weight < self.quota {
            return false;
        }
        if mask == 0 {
            return true;
        }
        let lightest = self.weights[mask.trailing_zeros() as usize];
        weight - lightest < self.quota
    }

    /// Scans the coalitions whose masks lie in `masks`.
    pub fn scan(&self, masks: Range<u64>, max_witnesses: usize) -> ScanState {
        let mut state = ScanState::new(max_witnesses);
        let top = 1u64 << (self.n.max(1) - 1);
        for mask in masks {
            let weight = self.weight(mask);
            let wins = weight >= self.quota;
            // Each complementary pair is checked once, from the side holding
            // the top player.
            if mask & top != 0 && wins == (self.total - weight >= self.quota) {
                state.constant_sum_violations += 1;
                if state.constant_sum_witnesses.len() < max_witnesses {
                    state.constant_sum_witnesses.push(Coalition(mask));
                }
            }
            if self.is_minimal_winning(mask, weight) {
                state.mwc_count += 1;
                if weight != self.quota {
                    state.homogeneous_violations += 1;
                    if state.homogeneous_witnesses.len() < max_witnesses {
                        state.homogeneous_witnesses.push(Coalition(mask));
                    }
                }
            }
        }
        state
    }

    /// Minimal winning coalitions with masks in `masks`.
    pub fn minimal_winning(&self, masks: Range<u64>) -> Vec<Coalition> {
        masks
            .filter(|&mask| self.is_minimal_winning(mask, self.weight(mask)))
            .map(Coalition)
            .collect()
    }
}

fn subset_sums(weights: &[u128]) -> Vec<u128> {
    let mut sums = Vec::with_capacity(1 << weights.len());
    sums.push(0);
    for &w in weights {
        let len = sums.len();
        for i in 0..len {
            let s = sums[i] + w;
            sums.push(s);
        }
    }
    sums
}
