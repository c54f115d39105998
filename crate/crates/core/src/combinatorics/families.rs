//! The explicit extremal families and their counting formulas.

use super::family::Family;
use super::kset::KSet;
use crate::error::{Error, Result};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `{ab : 1 ≤ a < b ≤ n, a + b ≤ n}`.
pub fn b_family(n: u32) -> Result<Family> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("B(n) needs n >= 2, got {n}")));
    }
    let mut f = Family::empty(n, 2)?;
    for a in 1..=n {
        for b in a + 1..=n - a {
            f.insert_unchecked(KSet::pair(a, b)?);
        }
    }
    Ok(f)
}

/// `{abc : a + c ≤ n, 2a + b ≤ n, 1 ≤ a < b < c ≤ n}`.
pub fn c_family(n: u32) -> Result<Family> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("C(n) needs n >= 3, got {n}")));
    }
    let mut f = Family::empty(n, 3)?;
    for a in 1..=n {
        for b in a + 1..=n {
            if 2 * a + b > n {
                break;
            }
            for c in b + 1..=n {
                if a + c > n {
                    break;
                }
                f.insert_unchecked(KSet::triple(a, b, c)?);
            }
        }
    }
    Ok(f)
}

/// The k-star on `[n]` with the given apex: every k-set containing it.
pub fn star(n: u32, k: usize, apex: u32) -> Result<Family> {
    let all = Family::complete(n, k)?;
    Family::from_sets(n, k, all.iter().filter(|s| s.contains(apex)))
}

/// The graph `T(n)`: cliques on `{1..⌊n/2⌋}` and `{⌊n/2⌋+1..n}`.
pub fn turan_graph(n: u32) -> Result<Family> {
    let half = n / 2;
    let mut f = Family::empty(n, 2)?;
    for a in 1..=n {
        for b in a + 1..=n {
            if (a <= half) == (b <= half) {
                f.insert_unchecked(KSet::pair(a, b)?);
            }
        }
    }
    Ok(f)
}

/// Edge count of two disjoint cliques on `⌊n/2⌋` and `⌈n/2⌉` vertices.
pub fn turan_edge_count(n: u32) -> u64 {
    let n = n as u64;
    binomial(n / 2, 2) + binomial(n - n / 2, 2)
}

/// Balanced three-part sizes, larger parts first.
pub fn balanced_parts(n: u32) -> (u32, u32, u32) {
    let q = n / 3;
    match n % 3 {
        0 => (q, q, q),
        1 => (q + 1, q, q),
        _ => (q + 1, q + 1, q),
    }
}

/// Turán's conjectured (3,4) minimum.
///
/// Evaluated three ways (the partition formula on balanced parts, the
/// maximum of `s·C(n−s−1, 2)`, and `⌊n/3⌋·C(n−⌊n/3⌋−1, 2)`); they must agree.
pub fn h_value(n: u32) -> u64 {
    let closed = h_closed_form(n);
    let partition = h_partition_form(n);
    let maxed = h_max_form(n);
    assert_eq!(closed, partition, "h({n}): closed form vs partition form");
    assert_eq!(closed, maxed, "h({n}): closed form vs max form");
    closed
}

pub(crate) fn h_closed_form(n: u32) -> u64 {
    let n = n as u64;
    let t = n / 3;
    t * binomial((n - t).saturating_sub(1), 2)
}

pub(crate) fn h_partition_form(n: u32) -> u64 {
    let (a, b, c) = balanced_parts(n);
    let (a, b, c) = (a as u64, b as u64, c as u64);
    binomial(a, 3)
        + binomial(b, 3)
        + binomial(c, 3)
        + a * binomial(b, 2)
        + b * binomial(c, 2)
        + c * binomial(a, 2)
}

pub(crate) fn h_max_form(n: u32) -> u64 {
    let n = n as u64;
    (0..=n)
        .map(|s| s * binomial((n - s).saturating_sub(1), 2))
        .max()
        .unwrap_or(0)
}
