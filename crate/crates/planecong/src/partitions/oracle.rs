//! Brute-force enumeration oracles.
//!
//! Everything here counts by explicit construction: chains of nested
//! partitions for the plane case, multiplicity recursion over colored parts
//! for the restricted case, and component-by-component combination of
//! enumerated partition counts for tuples. No generating-function machinery
//! is shared with the series builders, so agreement between the two paths is
//! meaningful evidence.

use super::ColoredPartMultiset;
use crate::error::{Error, Result};

/// Caps on oracle arguments. Enumeration cost explodes past small weights,
/// so exceeding a cap is an explicit error, never silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimit {
    /// Largest weight `n` the oracles will enumerate.
    pub max_n: u64,
    /// Largest component count `k` for the plane and tuple oracles.
    pub max_k: u64,
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit {
            max_n: 25,
            max_k: 8,
        }
    }
}

impl OracleLimit {
    fn check_n(&self, n: u64) -> Result<()> {
        if n > self.max_n {
            return Err(Error::OracleLimitExceeded {
                what: "n",
                value: n,
                cap: self.max_n,
            });
        }
        Ok(())
    }

    fn check_k(&self, k: u64) -> Result<()> {
        if k > self.max_k {
            return Err(Error::OracleLimitExceeded {
                what: "k",
                value: k,
                cap: self.max_k,
            });
        }
        Ok(())
    }
}

fn add(a: u64, b: u64) -> u64 {
    a.checked_add(b).expect("oracle count exceeds u64")
}

fn mul(a: u64, b: u64) -> u64 {
    a.checked_mul(b).expect("oracle count exceeds u64")
}

/// Counts `k`-component plane partitions of `n` under the default
/// [`OracleLimit`]: chains of `k` partitions, each containing the next by
/// diagram inclusion, with weights summing to `n`.
///
/// # Errors
///
/// Rejects `k = 0` and arguments beyond the cap.
pub fn enum_plane(n: u64, k: u64) -> Result<u64> {
    enum_plane_limited(n, k, &OracleLimit::default())
}

/// [`enum_plane`] with an explicit cap.
pub fn enum_plane_limited(n: u64, k: u64, limit: &OracleLimit) -> Result<u64> {
    if k == 0 {
        return Err(Error::ZeroComponents);
    }
    limit.check_n(n)?;
    limit.check_k(k)?;
    Ok(count_chains(None, n, k))
}

/// Chains of `layers` partitions nested under `bound` (`None` = unbounded)
/// with total weight `remaining`. Every chain is visited exactly once.
fn count_chains(bound: Option<&[u64]>, remaining: u64, layers: u64) -> u64 {
    if remaining == 0 {
        // all remaining layers are empty
        return 1;
    }
    if layers == 0 {
        return 0;
    }
    // Later layers fit inside this one, so each weighs at most `w`; the top
    // layer must carry at least ceil(remaining / layers).
    let min_w = remaining.div_ceil(layers);
    let mut total = 0u64;
    for w in min_w..=remaining {
        let mut rows = Vec::new();
        total = add(
            total,
            sum_over_nested(bound, 0, u64::MAX, w, &mut rows, &mut |shape| {
                count_chains(Some(shape), remaining - w, layers - 1)
            }),
        );
    }
    total
}

/// Enumerates partitions of `remaining` that fit under `bound` row by row
/// (row lengths weakly decreasing, row `i` at most `bound[i]`), applying `f`
/// to each complete shape and summing the results.
fn sum_over_nested(
    bound: Option<&[u64]>,
    row: usize,
    prev_row: u64,
    remaining: u64,
    rows: &mut Vec<u64>,
    f: &mut dyn FnMut(&[u64]) -> u64,
) -> u64 {
    if remaining == 0 {
        return f(rows);
    }
    let row_cap = match bound {
        Some(b) => match b.get(row) {
            Some(&cap) => cap,
            None => return 0, // ran out of rows to nest under
        },
        None => u64::MAX,
    };
    let cap = prev_row.min(row_cap).min(remaining);
    let mut total = 0u64;
    for len in 1..=cap {
        rows.push(len);
        total = add(
            total,
            sum_over_nested(bound, row + 1, len, remaining - len, rows, f),
        );
        rows.pop();
    }
    total
}

/// Counts partitions of `n` into parts drawn from the colored multiset `s`
/// under the default [`OracleLimit`], by recursing over each colored copy's
/// multiplicity.
///
/// # Errors
///
/// Rejects `n` beyond the cap.
pub fn enum_restricted(n: u64, s: &ColoredPartMultiset) -> Result<u64> {
    enum_restricted_limited(n, s, &OracleLimit::default())
}

/// [`enum_restricted`] with an explicit cap.
pub fn enum_restricted_limited(
    n: u64,
    s: &ColoredPartMultiset,
    limit: &OracleLimit,
) -> Result<u64> {
    limit.check_n(n)?;
    let mut copies = Vec::new();
    for &(part, colors) in s.entries() {
        for _ in 0..colors {
            copies.push(part);
        }
    }
    Ok(count_restricted(&copies, n))
}

fn count_restricted(copies: &[u64], remaining: u64) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let Some((&part, rest)) = copies.split_first() else {
        return 0;
    };
    let mut total = 0u64;
    let mut used = 0u64;
    while used <= remaining {
        total = add(total, count_restricted(rest, remaining - used));
        used += part;
    }
    total
}

/// Counts ordered `k`-tuples of partitions with weights summing to `n`
/// under the default [`OracleLimit`]. Single-partition counts come from
/// explicit enumeration; tuples combine them along the defining split
/// (first component, rest of the tuple).
///
/// # Errors
///
/// Rejects `k = 0` and arguments beyond the cap.
pub fn enum_multi(n: u64, k: u64) -> Result<u64> {
    enum_multi_limited(n, k, &OracleLimit::default())
}

/// [`enum_multi`] with an explicit cap.
pub fn enum_multi_limited(n: u64, k: u64, limit: &OracleLimit) -> Result<u64> {
    if k == 0 {
        return Err(Error::ZeroComponents);
    }
    limit.check_n(n)?;
    limit.check_k(k)?;
    let singles: Vec<u64> = (0..=n).map(count_partitions_by_enumeration).collect();
    let mut row = vec![0u64; n as usize + 1];
    row[0] = 1;
    for _ in 0..k {
        let mut next = vec![0u64; n as usize + 1];
        for (total, slot) in next.iter_mut().enumerate() {
            for w in 0..=total {
                *slot = add(*slot, mul(singles[w], row[total - w]));
            }
        }
        row = next;
    }
    Ok(row[n as usize])
}

/// Counts partitions of `n` by walking every one of them (first part
/// descending, remainder recursively), so each partition costs one visit.
fn count_partitions_by_enumeration(n: u64) -> u64 {
    fn rec(remaining: u64, max_part: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0u64;
        for first in 1..=max_part.min(remaining) {
            total = add(total, rec(remaining - first, first));
        }
        total
    }
    rec(n, n.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_chains_small_values() {
        // weight 2, two layers: ((2)), ((1,1)), ((1),(1))
        assert_eq!(enum_plane(2, 2), Ok(3));
        assert_eq!(enum_plane(0, 5), Ok(1));
        assert_eq!(enum_plane(1, 4), Ok(1));
        assert_eq!(enum_plane(5, 3), Ok(21));
        assert_eq!(enum_plane(3, 2), Ok(5));
    }

    #[test]
    fn one_component_plane_partitions_are_partitions() {
        let partition_numbers = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &p) in partition_numbers.iter().enumerate() {
            assert_eq!(enum_plane(n as u64, 1), Ok(p));
        }
    }

    #[test]
    fn plane_counts_stabilize_once_k_reaches_n() {
        for n in 0..=8u64 {
            let stable = enum_plane(n, n.max(1)).unwrap();
            for k in n.max(1)..=8 {
                assert_eq!(enum_plane(n, k), Ok(stable), "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn restricted_enumeration_hand_counts() {
        let odd = ColoredPartMultiset::from_parts(&[1, 3, 5]).unwrap();
        assert_eq!(enum_restricted(5, &odd), Ok(3));
        let colored = ColoredPartMultiset::from_parts(&[1, 2, 2, 5]).unwrap();
        assert_eq!(enum_restricted(5, &colored), Ok(7));
        let empty = ColoredPartMultiset::new([]).unwrap();
        assert_eq!(enum_restricted(0, &empty), Ok(1));
        assert_eq!(enum_restricted(3, &empty), Ok(0));
    }

    #[test]
    fn tuple_enumeration_small_values() {
        assert_eq!(enum_multi(2, 2), Ok(5));
        assert_eq!(enum_multi(5, 1), Ok(7));
        assert_eq!(enum_multi(0, 8), Ok(1));
        // 3-tuples of total weight 2: 3 with a (2), 3 with a (1,1),
        // 3 ways to place two (1)s
        assert_eq!(enum_multi(2, 3), Ok(9));
    }

    #[test]
    fn caps_are_enforced() {
        assert_eq!(
            enum_plane(26, 2),
            Err(Error::OracleLimitExceeded {
                what: "n",
                value: 26,
                cap: 25
            })
        );
        assert_eq!(
            enum_plane(5, 9),
            Err(Error::OracleLimitExceeded {
                what: "k",
                value: 9,
                cap: 8
            })
        );
        let relaxed = OracleLimit {
            max_n: 30,
            max_k: 10,
        };
        assert!(enum_plane_limited(26, 9, &relaxed).is_ok());
        assert_eq!(enum_plane(5, 0), Err(Error::ZeroComponents));
        let s = ColoredPartMultiset::from_parts(&[1]).unwrap();
        assert!(enum_restricted(26, &s).is_err());
        assert!(enum_multi(26, 2).is_err());
    }
}
