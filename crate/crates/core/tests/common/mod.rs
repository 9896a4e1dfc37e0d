//! Test-only oracles shared by the integration suites. Nothing here calls
//! into the enumeration or expansion code it is used to check.

#![allow(dead_code)]

use parsimonious_core::FreeTypeRepr;

/// Brute force: every subset of `{1, ..., h-1}` that satisfies the
/// feasibility constraints, ordered by size and then lexicographically.
pub fn powerset_addends(h: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << (h - 1) {
        let seq: Vec<usize> = (1..h).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let first_odd = seq.first().is_none_or(|&i| i % 2 == 1);
        let alternating = seq.windows(2).all(|p| (p[0] + p[1]) % 2 == 1);
        let below_h = seq.last().is_none_or(|&i| i < h);
        let size_parity = (seq.len() % 2 == 1) == h.is_multiple_of(2);
        if first_odd && alternating && below_h && size_parity {
            out.push(seq);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn admissible(raw: &[i64]) -> bool {
    match raw {
        [] => false,
        [x] => *x >= 3,
        [first, .., last] => *first >= 2 && *last >= 2 && raw.iter().all(|&x| x >= 1),
    }
}

/// Every valid representation with exactly `n` players: the compositions of
/// `n - 1` that respect the boundary bounds.
pub fn representations_with_players(n: i64) -> Vec<FreeTypeRepr> {
    fn compositions(rest: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=rest {
            prefix.push(part);
            compositions(rest - part, prefix, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    compositions(n - 1, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|raw| admissible(raw))
        .map(|raw| FreeTypeRepr::new(&raw).expect("admissible"))
        .collect()
}

/// Every valid representation with `h` types and components in `1..=max`.
pub fn representations_with_types(h: usize, max: i64) -> Vec<FreeTypeRepr> {
    let len = h - 1;
    let mut raw = vec![1i64; len];
    let mut out = Vec::new();
    loop {
        if admissible(&raw) {
            out.push(FreeTypeRepr::new(&raw).expect("admissible"));
        }
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            if raw[i] < max {
                raw[i] += 1;
                break;
            }
            raw[i] = 1;
            i += 1;
        }
    }
}
