//! Partition-family generating series and the colored part multisets that
//! define them.
//!
//! Series built here, all as [`ResidueSeries`] truncations:
//!
//! * [`restricted_series`]: partitions into parts from a colored multiset,
//!   `prod 1/(1-q^p)^c`.
//! * [`f_series`]: the head factor `F_k`, parts `i` with `i` colors for
//!   `i < k`.
//! * [`pl_series`]: `k`-component plane partitions,
//!   `prod_n 1/(1-q^n)^min(k,n) = F_k * prod_{n>=k} 1/(1-q^n)^k`.
//! * [`multipartition_series`]: `k`-tuples of ordinary partitions,
//!   `prod_n 1/(1-q^n)^k`.
//! * [`beta_series`]: the tail product `prod_{j>=l} 1/(1-q^(j*l))`
//!   re-indexed by multiples of `l`.
//!
//! The brute-force counterparts in [`oracle`] recount the same coefficients
//! by explicit enumeration and exist to validate every builder above.

mod oracle;

pub use oracle::{
    enum_multi, enum_multi_limited, enum_plane, enum_plane_limited, enum_restricted,
    enum_restricted_limited, OracleLimit,
};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::modseries::ResidueSeries;
use serde::{Deserialize, Serialize};

/// A finite multiset of colored parts: each entry `(part, colors)` makes
/// `colors` interchangeable-weight, distinguishable copies of `part`
/// available. Parts are kept sorted and strictly increasing; parts and color
/// counts are positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u64, u64)>", into = "Vec<(u64, u64)>")]
pub struct ColoredPartMultiset {
    entries: Vec<(u64, u64)>,
}

impl ColoredPartMultiset {
    /// Builds a multiset from `(part, colors)` pairs, merging repeated parts
    /// by summing their colors. The empty multiset is allowed and generates
    /// the constant series 1.
    ///
    /// # Errors
    ///
    /// Rejects any entry with a zero part or zero colors.
    pub fn new(entries: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut merged: Vec<(u64, u64)> = Vec::new();
        for (part, colors) in entries {
            if part == 0 {
                return Err(Error::ZeroEntry("part"));
            }
            if colors == 0 {
                return Err(Error::ZeroEntry("color count"));
            }
            match merged.iter_mut().find(|(p, _)| *p == part) {
                Some((_, c)) => {
                    *c = c
                        .checked_add(colors)
                        .ok_or(Error::Overflow("color count"))?
                }
                None => merged.push((part, colors)),
            }
        }
        merged.sort_unstable();
        Ok(ColoredPartMultiset { entries: merged })
    }

    /// Builds a multiset from a flat part list where repetition encodes
    /// colors: `[1, 2, 2, 5]` becomes `{(1,1), (2,2), (5,1)}`.
    pub fn from_parts(parts: &[u64]) -> Result<Self> {
        Self::new(parts.iter().map(|&p| (p, 1)))
    }

    /// `(part, colors)` pairs, sorted by part.
    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct part values.
    pub fn distinct_parts(&self) -> usize {
        self.entries.len()
    }

    /// Total number of colored copies, counting multiplicity.
    pub fn total_copies(&self) -> u64 {
        self.entries.iter().map(|&(_, c)| c).sum()
    }
}

impl TryFrom<Vec<(u64, u64)>> for ColoredPartMultiset {
    type Error = Error;

    fn try_from(entries: Vec<(u64, u64)>) -> Result<Self> {
        ColoredPartMultiset::new(entries)
    }
}

impl From<ColoredPartMultiset> for Vec<(u64, u64)> {
    fn from(s: ColoredPartMultiset) -> Self {
        s.entries
    }
}

/// The defining multiset of the head factor `F_k`: part `i` in `i` colors
/// for `1 <= i < k`. Empty for `k = 1`.
pub fn s_k_multiset(k: u64) -> ColoredPartMultiset {
    debug_assert!(k >= 1, "component count must be positive");
    ColoredPartMultiset {
        entries: (1..k).map(|i| (i, i)).collect(),
    }
}

/// Counting series for partitions into parts drawn from `s`, one inverse
/// factor `1/(1-q^part)^colors` per entry.
///
/// # Errors
///
/// Propagates the modulus and order validation of [`ResidueSeries::one`].
pub fn restricted_series(
    s: &ColoredPartMultiset,
    modulus: u64,
    order: usize,
) -> Result<ResidueSeries> {
    let mut series = ResidueSeries::one(modulus, order)?;
    for &(part, colors) in &s.entries {
        let colors = u32::try_from(colors).map_err(|_| Error::Overflow("color count"))?;
        series = series.apply_inverse_factor(stride_of(part), colors);
    }
    Ok(series)
}

/// The head factor `F_k = prod_{i<k} 1/(1-q^i)^i`; constant 1 when `k = 1`.
///
/// # Errors
///
/// Rejects `k = 0`, plus the usual modulus and order validation.
pub fn f_series(k: u64, modulus: u64, order: usize) -> Result<ResidueSeries> {
    if k == 0 {
        return Err(Error::ZeroComponents);
    }
    restricted_series(&s_k_multiset(k), modulus, order)
}

/// Counting series for `k`-component plane partitions:
/// `F_k` times `1/(1-q^n)^k` for every `n >= k` below the truncation order.
///
/// Cost grows quadratically in `order` (each of the `order - k` tail factors
/// is `k` passes of at most `order` additions), which is comfortable for the
/// horizons this crate targets.
///
/// # Errors
///
/// Rejects `k = 0`, plus the usual modulus and order validation.
pub fn pl_series(k: u64, modulus: u64, order: usize) -> Result<ResidueSeries> {
    let mut series = f_series(k, modulus, order)?;
    let exponent = u32::try_from(k).map_err(|_| Error::Overflow("component count"))?;
    let start = usize::try_from(k).unwrap_or(usize::MAX);
    for n in start..order {
        series = series.apply_inverse_factor(n, exponent);
    }
    Ok(series)
}

/// Counting series for ordered `k`-tuples of partitions with a common total:
/// `prod_{n>=1} 1/(1-q^n)^k`.
///
/// # Errors
///
/// Rejects `k = 0`, plus the usual modulus and order validation.
pub fn multipartition_series(k: u64, modulus: u64, order: usize) -> Result<ResidueSeries> {
    if k == 0 {
        return Err(Error::ZeroComponents);
    }
    let exponent = u32::try_from(k).map_err(|_| Error::Overflow("component count"))?;
    let mut series = ResidueSeries::one(modulus, order)?;
    for n in 1..order {
        series = series.apply_inverse_factor(n, exponent);
    }
    Ok(series)
}

/// Coefficients `beta_m` of `prod_{j>=l} 1/(1-q^(j*l))` re-indexed by
/// multiples of `l` and reduced mod `l`: entry `m` counts partitions of `m`
/// into parts `>= l`, mod `l`. `beta_0 = 1`.
///
/// # Errors
///
/// Rejects a non-prime `l`, plus the usual order validation.
pub fn beta_series(ell: u64, order_in_multiples: usize) -> Result<ResidueSeries> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let mut series = ResidueSeries::one(ell, order_in_multiples)?;
    for j in stride_of(ell)..order_in_multiples {
        series = series.apply_inverse_factor(j, 1);
    }
    Ok(series)
}

/// Clamps a part to a usable stride; anything at or beyond the truncation
/// order acts as the identity inside `apply_inverse_factor` anyway.
fn stride_of(part: u64) -> usize {
    usize::try_from(part).unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Modulus large enough that small coefficients come out exact.
    const EXACT: u64 = 1_000_003;

    #[test]
    fn multiset_merges_sorts_and_validates() {
        let s = ColoredPartMultiset::new([(2, 1), (1, 1), (2, 1)]).unwrap();
        assert_eq!(s.entries(), [(1, 1), (2, 2)]);
        assert_eq!(s.distinct_parts(), 2);
        assert_eq!(s.total_copies(), 3);
        assert!(ColoredPartMultiset::new([(0, 1)]).is_err());
        assert!(ColoredPartMultiset::new([(3, 0)]).is_err());
        assert!(ColoredPartMultiset::new([]).unwrap().is_empty());
    }

    #[test]
    fn from_parts_encodes_repetition_as_colors() {
        let s = ColoredPartMultiset::from_parts(&[1, 2, 2, 5]).unwrap();
        assert_eq!(s.entries(), [(1, 1), (2, 2), (5, 1)]);
    }

    #[test]
    fn s_k_has_triangular_size() {
        assert!(s_k_multiset(1).is_empty());
        assert_eq!(s_k_multiset(3).entries(), [(1, 1), (2, 2)]);
        assert_eq!(s_k_multiset(5).total_copies(), 10);
        assert_eq!(s_k_multiset(8).total_copies(), 28);
    }

    #[test]
    fn restricted_series_counts_odd_part_partitions() {
        // partitions of 5 into odd parts up to 5: (5), (3,1,1), (1^5)
        let s = ColoredPartMultiset::from_parts(&[1, 3, 5]).unwrap();
        let series = restricted_series(&s, EXACT, 6).unwrap();
        assert_eq!(series.coeff_at(5), Ok(3));
    }

    #[test]
    fn restricted_series_counts_colored_copies_separately() {
        // parts {1, 2, 2', 5}: seven partitions of 5
        let s = ColoredPartMultiset::from_parts(&[1, 2, 2, 5]).unwrap();
        let series = restricted_series(&s, EXACT, 6).unwrap();
        assert_eq!(series.coeff_at(5), Ok(7));
    }

    #[test]
    fn empty_multiset_generates_the_constant_one() {
        let s = ColoredPartMultiset::new([]).unwrap();
        let series = restricted_series(&s, 7, 4).unwrap();
        assert_eq!(series.coeffs(), [1, 0, 0, 0]);
    }

    #[test]
    fn f_series_head_coefficients() {
        let f3 = f_series(3, EXACT, 7).unwrap();
        assert_eq!(f3.coeffs(), [1, 1, 3, 3, 6, 6, 10]);
        let f1 = f_series(1, EXACT, 4).unwrap();
        assert_eq!(f1.coeffs(), [1, 0, 0, 0]);
        assert_eq!(f_series(0, EXACT, 4), Err(Error::ZeroComponents));
    }

    #[test]
    fn pl_series_matches_known_counts() {
        let pl3 = pl_series(3, EXACT, 6).unwrap();
        assert_eq!(pl3.coeff_at(2), Ok(3));
        assert_eq!(pl3.coeff_at(5), Ok(21));
        let pl2 = pl_series(2, EXACT, 10).unwrap();
        assert_eq!(pl2.coeffs(), [1, 1, 3, 5, 10, 16, 29, 45, 75, 115]);
        // With k at least n, every plane partition of n fits: pl(0..7).
        let pl = pl_series(20, EXACT, 8).unwrap();
        assert_eq!(pl.coeffs(), [1, 1, 3, 6, 13, 24, 48, 86]);
    }

    #[test]
    fn pl_series_is_f_series_times_the_tail() {
        for (k, m, order) in [(2u64, 4u64, 40usize), (3, 9, 30), (5, 5, 25)] {
            let mut built = f_series(k, m, order).unwrap();
            for n in k as usize..order {
                built = built.apply_inverse_factor(n, k as u32);
            }
            assert_eq!(built, pl_series(k, m, order).unwrap());
        }
    }

    #[test]
    fn multipartition_series_counts_tuples() {
        let p2 = multipartition_series(2, EXACT, 3).unwrap();
        assert_eq!(p2.coeffs(), [1, 2, 5]);
        let p1 = multipartition_series(1, EXACT, 8).unwrap();
        assert_eq!(p1.coeffs(), [1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn pl2_equals_first_difference_of_two_tuples() {
        for m in [2u64, 3, 4, 5, 7, 8] {
            let order = 120;
            let pl2 = pl_series(2, m, order).unwrap();
            let p2 = multipartition_series(2, m, order).unwrap();
            assert_eq!(pl2.coeff_at(0), p2.coeff_at(0));
            for n in 1..order {
                let diff = (p2.coeffs()[n] + m - p2.coeffs()[n - 1]) % m;
                assert_eq!(
                    pl2.coeffs()[n],
                    diff,
                    "difference relation fails at n={n} mod {m}"
                );
            }
        }
    }

    #[test]
    fn beta_series_counts_large_part_partitions() {
        // l = 3: partitions into parts >= 3
        let b3 = beta_series(3, 7).unwrap();
        assert_eq!(b3.coeffs(), [1, 0, 0, 1, 1, 1, 2]);
        // l = 2: partitions into parts >= 2; beta_4 = |{4, 2+2}| = 2 = 0 mod 2
        let b2 = beta_series(2, 5).unwrap();
        assert_eq!(b2.coeffs(), [1, 0, 1, 1, 0]);
        assert_eq!(beta_series(6, 5), Err(Error::NotPrime(6)));
    }

    #[test]
    fn series_coefficients_match_enumeration_oracles() {
        for k in 1..=4u64 {
            let series = pl_series(k, EXACT, 13).unwrap();
            let tuples = multipartition_series(k, EXACT, 13).unwrap();
            for n in 0..13u64 {
                assert_eq!(
                    series.coeff_at(n as usize),
                    enum_plane(n, k),
                    "plane count mismatch at n={n}, k={k}"
                );
                assert_eq!(
                    tuples.coeff_at(n as usize),
                    enum_multi(n, k),
                    "tuple count mismatch at n={n}, k={k}"
                );
            }
        }
        let s = ColoredPartMultiset::from_parts(&[1, 2, 2, 3]).unwrap();
        let series = restricted_series(&s, EXACT, 13).unwrap();
        for n in 0..13u64 {
            assert_eq!(series.coeff_at(n as usize), enum_restricted(n, &s));
        }
    }
}
