//! k-Fibonacci numbers `F_n(k)`, defined by `F_0 = 0, F_1 = 1,
//! F_n = k F_{n-1} + F_{n-2}`, computed four ways:
//!
//! * [`k_fibonacci`]: the recurrence, the authoritative exact path;
//! * [`k_fibonacci_binomial`]: `sum_j C(n-1-j, j) k^(n-1-2j)`;
//! * [`k_fibonacci_mpt`]: `sum_s C'(n, s) k^s` with the coefficients of the
//!   modified Pascal triangle ([`mpt_triangle`]);
//! * [`k_fibonacci_binet`]: the closed form with the roots of `x^2 - kx - 1`,
//!   a floating point cross-check only.
//!
//! `k = 1` gives the classic Fibonacci numbers and `k = 2` the Pell numbers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::dd::Dd;

/// Classic Fibonacci number `F_n`.
pub fn fibonacci(n: u32) -> BigUint {
    k_fibonacci(1, n)
}

/// `F_n(k)` by the recurrence.
pub fn k_fibonacci(k: u64, n: u32) -> BigUint {
    let (mut prev, mut cur) = (BigUint::zero(), BigUint::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur * k + &prev;
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// Binomial coefficient `C(n, r)` by the multiplicative formula. Each partial
/// product `C(n, i)` is an integer, so the running division is exact.
pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `F_n(k) = sum_{j=0}^{floor((n-1)/2)} C(n-1-j, j) k^(n-1-2j)`; `F_0` is 0.
pub fn k_fibonacci_binomial(k: u64, n: u32) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let top = u64::from(n) - 1;
    (0..=top / 2)
        .map(|j| binomial(top - j, j) * BigUint::from(k).pow((top - 2 * j) as u32))
        .sum()
}

/// Result of the Binet evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinetApprox {
    pub value: f64,
    /// Upper estimate of `|value - F_n(k)| / F_n(k)`.
    pub relative_error: f64,
    /// Set when `F_n(k)` exceeds `2^53`, so `value` cannot hold it exactly.
    /// This is informational, not a failure.
    pub precision_loss: bool,
}

const EXACT_INTEGER_LIMIT: f64 = 9_007_199_254_740_992.0; // 2^53

/// `F_n(k) = (alpha^n - beta^n) / (alpha - beta)` where `alpha, beta` are the
/// roots of `x^2 - kx - 1 = 0`.
///
/// Intermediates are carried in double-double precision, so whenever
/// `F_n(k) <= 2^53` the returned `value` is exactly `F_n(k)`.
pub fn k_fibonacci_binet(k: u64, n: u32) -> BinetApprox {
    let kd = Dd::from_f64(k as f64);
    let disc = (kd * kd + Dd::from_f64(4.0)).sqrt();
    let half = Dd::from_f64(0.5);
    let alpha = (kd + disc) * half;
    // alpha * beta = -1; avoids the cancellation in (k - disc) / 2.
    let beta = -(Dd::ONE / alpha);
    let value = ((alpha.powi(n) - beta.powi(n)) / disc).to_f64();

    // NaN and infinity count as lost precision.
    let precision_loss = value.is_nan() || value.abs() > EXACT_INTEGER_LIMIT;
    let dd_error = (f64::from(n) + 64.0) * libm::ldexp(1.0, -104);
    let relative_error = if precision_loss {
        f64::EPSILON / 2.0 + dd_error
    } else {
        dd_error
    };
    BinetApprox {
        value,
        relative_error,
        precision_loss,
    }
}

/// Modified Pascal triangle: row `n` (1-based) holds `C'(n, 0..n)`, the
/// coefficients of `F_n(k) = sum_s C'(n, s) k^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MptTriangle {
    rows: Vec<Vec<BigUint>>,
}

impl MptTriangle {
    /// Row `n`, for `1 <= n <= self.len()`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n - 1]
    }

    /// `C'(n, s)`; zero outside the triangle.
    pub fn get(&self, n: usize, s: usize) -> BigUint {
        self.rows
            .get(n.wrapping_sub(1))
            .and_then(|row| row.get(s))
            .cloned()
            .unwrap_or_default()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.rows.iter().map(Vec::as_slice)
    }
}

/// Streams the rows of the modified Pascal triangle, keeping only the two
/// previous rows.
#[derive(Debug, Clone, Default)]
pub struct MptRows {
    n: usize,
    before_last: Vec<BigUint>,
    last: Vec<BigUint>,
}

impl MptRows {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for MptRows {
    type Item = Vec<BigUint>;

    fn next(&mut self) -> Option<Vec<BigUint>> {
        self.n += 1;
        let n = self.n;
        let mut row = vec![BigUint::zero(); n];
        // 0 < s < n-2: C'(n, s) = C'(n-2, s) + C'(n-1, s-1)
        for (s, slot) in row.iter_mut().enumerate().take(n.saturating_sub(2)).skip(1) {
            *slot = &self.before_last[s] + &self.last[s - 1];
        }
        // first column alternates 1, 0; main diagonal is 1; C'(n, n-2) = 0
        if n % 2 == 1 {
            row[0] = BigUint::one();
        }
        row[n - 1] = BigUint::one();

        self.before_last = core::mem::replace(&mut self.last, row.clone());
        Some(row)
    }
}

/// The first `n_max` rows of the modified Pascal triangle.
pub fn mpt_triangle(n_max: usize) -> MptTriangle {
    MptTriangle {
        rows: MptRows::new().take(n_max).collect(),
    }
}

/// `F_n(k) = sum_s C'(n, s) k^s`; `F_0` is 0.
pub fn k_fibonacci_mpt(k: u64, n: u32) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let row = MptRows::new()
        .nth(n as usize - 1)
        .expect("row iterator is infinite");
    FibonacciPolynomial { coefficients: row }.eval(k)
}

/// Fibonacci polynomial `F_n(x)`; `coefficients[s]` multiplies `x^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibonacciPolynomial {
    pub coefficients: Vec<BigUint>,
}

impl FibonacciPolynomial {
    /// `F_n(x)` for `n >= 1`, read from the modified Pascal triangle.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Fibonacci polynomials are indexed from 1");
        let coefficients = MptRows::new().nth(n - 1).expect("row iterator is infinite");
        Self { coefficients }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation at `k`.
    pub fn eval(&self, k: u64) -> BigUint {
        self.coefficients
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * k + c)
    }
}
