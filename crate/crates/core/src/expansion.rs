//! Polynomial expansion of the minimal winning quota and its mirror symmetry.
//!
//! The quota of a game with `h` types is a sum of `F_h` monomials
//! `x_{i_1} x_{i_2} ... x_{i_s}`, one per feasible index sequence:
//!
//! * `i_1` is odd and the indices strictly increase,
//! * consecutive indices have opposite parity,
//! * `i_s < h`,
//! * `s` is odd when `h` is even and even when `h` is odd (the empty
//!   sequence is the constant 1).
//!
//! Mapping each index `i` to `h - i` permutes the feasible sequences, which is
//! why a game and its reversed twin share the same quota.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::game::FreeTypeRepr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("an expansion needs at least 2 types, got h = {h}")]
    DomainError { h: usize },
    #[error("addend built for h = {addend} applied to a representation with h = {repr}")]
    MismatchedH { addend: usize, repr: usize },
    #[error("index sequence is not feasible for h = {h}")]
    InfeasibleAddend { h: usize },
}

/// A feasible index sequence `(i_1, ..., i_s)` for `h` types, naming one
/// monomial of the quota expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Addend {
    h: usize,
    indices: Vec<usize>,
}

fn is_feasible(h: usize, indices: &[usize]) -> bool {
    if h < 2 {
        return false;
    }
    let parity_of_len = usize::from(h.is_multiple_of(2));
    if indices.len() % 2 != parity_of_len {
        return false;
    }
    match (indices.first(), indices.last()) {
        (Some(&first), Some(&last)) if first % 2 == 0 || last >= h => return false,
        _ => {}
    }
    indices
        .windows(2)
        .all(|pair| pair[0] < pair[1] && (pair[0] + pair[1]) % 2 == 1)
}

impl Addend {
    pub fn new(h: usize, indices: Vec<usize>) -> Result<Self, ExpansionError> {
        if h < 2 {
            return Err(ExpansionError::DomainError { h });
        }
        if !is_feasible(h, &indices) {
            return Err(ExpansionError::InfeasibleAddend { h });
        }
        Ok(Self { h, indices })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Number of factors `s`.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    /// True for the constant addend `1`.
    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for Addend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, i) in self.indices.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str(")")
    }
}

/// All feasible index sequences for `h` types, ordered by number of factors
/// and then lexicographically (the constant addend first when `h` is odd).
///
/// There are exactly `F_h` of them.
pub fn enumerate_addends(h: usize) -> Result<Vec<Addend>, ExpansionError> {
    if h < 2 {
        return Err(ExpansionError::DomainError { h });
    }
    let wanted_parity = usize::from(h.is_multiple_of(2));
    let mut found = Vec::new();
    let mut prefix = Vec::new();
    // Depth-first with ascending children visits sequences in lexicographic
    // order; the stable sort below then groups them by length.
    extend(h, wanted_parity, 1, &mut prefix, &mut found);
    found.sort_by_key(Vec::len);
    Ok(found
        .into_iter()
        .map(|indices| Addend { h, indices })
        .collect())
}

fn extend(
    h: usize,
    parity: usize,
    next: usize,
    prefix: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if prefix.len() % 2 == parity {
        found.push(prefix.clone());
    }
    for i in (next..h).step_by(2) {
        prefix.push(i);
        extend(h, parity, i + 1, prefix, found);
        prefix.pop();
    }
}

/// `x_{i_1} * ... * x_{i_s}`; the empty product is 1.
pub fn addend_value(fx: &FreeTypeRepr, addend: &Addend) -> Result<BigUint, ExpansionError> {
    if addend.h != fx.h() {
        return Err(ExpansionError::MismatchedH {
            addend: addend.h,
            repr: fx.h(),
        });
    }
    Ok(addend
        .indices
        .iter()
        .fold(BigUint::one(), |acc, &i| acc * fx.x(i)))
}

/// Every addend of the expansion with its value, and their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotaBreakdown {
    pub addends: Vec<(Addend, BigUint)>,
    pub total: BigUint,
}

impl QuotaBreakdown {
    pub fn values(&self) -> impl Iterator<Item = &BigUint> {
        self.addends.iter().map(|(_, v)| v)
    }
}

/// Minimal winning quota as the sum of all feasible monomials.
pub fn quota_polynomial(fx: &FreeTypeRepr) -> QuotaBreakdown {
    let addends: Vec<(Addend, BigUint)> = enumerate_addends(fx.h())
        .expect("a valid representation has h >= 2")
        .into_iter()
        .map(|a| {
            let value = addend_value(fx, &a).expect("addend built for fx.h()");
            (a, value)
        })
        .collect();
    let total = addends.iter().map(|(_, v)| v).sum();
    QuotaBreakdown { addends, total }
}

/// Maps every index `i` to `h - i`. The image of a feasible sequence is
/// feasible and applying the map twice gives back the input.
pub fn mirror_addend(addend: &Addend) -> Addend {
    let h = addend.h;
    let indices = addend.indices.iter().rev().map(|&i| h - i).collect();
    Addend { h, indices }
}

/// True when `x_t` is a factor exactly when `x_{h-t}` is.
pub fn is_self_symmetric(addend: &Addend) -> bool {
    let h = addend.h;
    addend
        .indices
        .iter()
        .zip(addend.indices.iter().rev())
        .all(|(&lo, &hi)| lo + hi == h)
}

/// The twin of a representation: the same vector read backwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twin {
    pub repr: FreeTypeRepr,
    /// The input is a palindrome, so it is its own twin. Twins are usually
    /// required to differ; this is a notice, not an error.
    pub self_twin: bool,
}

pub fn twin(fx: &FreeTypeRepr) -> Twin {
    Twin {
        repr: fx.reversed(),
        self_twin: fx.is_palindrome(),
    }
}

/// `Some(k)` when every component equals `k`.
pub fn is_uniform(fx: &FreeTypeRepr) -> Option<u64> {
    let (&first, rest) = fx.counts().split_first()?;
    rest.iter().all(|&c| c == first).then_some(first)
}
