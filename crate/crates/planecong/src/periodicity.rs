//! Minimal-period certificates for restricted partition counting sequences
//! modulo prime powers, plus an empirical period detector.
//!
//! The certificate arithmetic is closed-form: from a colored part multiset
//! it derives the prime-free part of the part lcm ([`m_of_set`]), a carry
//! bound ([`b_of_set`]), and combines them into the period
//! `l^(N + b - 1) * m(S)` ([`kwong_period`]). [`f_ell_period`] specializes
//! that to the head-factor multisets used by the congruence verifier.
//! [`detect_min_period`] independently measures a series' period over its
//! retained window, so certificates can be checked against observed data.

use crate::arith::{divisors, is_prime};
use crate::error::{Error, Result};
use crate::modseries::ResidueSeries;
use crate::partitions::ColoredPartMultiset;
use num_integer::gcd;
use serde::{Deserialize, Serialize};

/// A closed-form period certificate for the counting sequence of partitions
/// into parts from `multiset`, taken modulo `prime^exponent`.
///
/// `period` is always a true period of that sequence. It is the minimal one
/// except in one degenerate family: a multiset holding a single copy of a
/// single part has a 0/1 indicator sequence whose period never grows with
/// `exponent`, while the closed form scales it by `prime^(exponent-1)`.
/// [`detect_min_period`] reports the observed minimum in all cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodCertificate {
    pub prime: u64,
    pub exponent: u32,
    pub multiset: ColoredPartMultiset,
    /// Prime-free part of the lcm of the distinct parts.
    pub m_of_s: u64,
    /// Least `b` with `prime^b >= sum of prime^ord_prime(part)` over all
    /// colored copies.
    pub b_of_s: u32,
    /// `prime^(exponent + b_of_s - 1) * m_of_s`.
    pub period: u64,
}

/// Splits `n` as `ell^e * f` with `ell` not dividing `f`; returns `(e, f)`.
///
/// # Errors
///
/// Rejects `n = 0` and a non-prime `ell`.
pub fn ell_valuation(ell: u64, n: u64) -> Result<(u32, u64)> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if n == 0 {
        return Err(Error::NotPositive);
    }
    let mut e = 0u32;
    let mut f = n;
    while f.is_multiple_of(ell) {
        f /= ell;
        e += 1;
    }
    Ok((e, f))
}

/// The `ell`-free part of the lcm of the distinct parts of `s`.
///
/// # Errors
///
/// Rejects an empty multiset, a non-prime `ell`, and lcm overflow.
pub fn m_of_set(ell: u64, s: &ColoredPartMultiset) -> Result<u64> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if s.is_empty() {
        return Err(Error::EmptyMultiset);
    }
    let mut l = 1u64;
    for &(part, _) in s.entries() {
        l = (l / gcd(l, part))
            .checked_mul(part)
            .ok_or(Error::Overflow("part lcm"))?;
    }
    Ok(ell_valuation(ell, l)?.1)
}

/// The least `b` with `ell^b >= sum`, where `sum` adds
/// `ell^ord_ell(part)` once per colored copy of each part.
///
/// # Errors
///
/// Rejects an empty multiset, a non-prime `ell`, and overflow.
pub fn b_of_set(ell: u64, s: &ColoredPartMultiset) -> Result<u32> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if s.is_empty() {
        return Err(Error::EmptyMultiset);
    }
    let mut sum = 0u64;
    for &(part, colors) in s.entries() {
        let (e, _) = ell_valuation(ell, part)?;
        let weight = ell
            .checked_pow(e)
            .and_then(|w| w.checked_mul(colors))
            .ok_or(Error::Overflow("copy weight sum"))?;
        sum = sum
            .checked_add(weight)
            .ok_or(Error::Overflow("copy weight sum"))?;
    }
    let mut b = 0u32;
    let mut power = 1u64;
    while power < sum {
        power = power
            .checked_mul(ell)
            .ok_or(Error::Overflow("carry bound"))?;
        b += 1;
    }
    Ok(b)
}

/// Builds the closed-form period certificate for partitions into parts from
/// `s`, modulo `ell^exponent`.
///
/// # Errors
///
/// Rejects a non-prime `ell`, `exponent = 0`, an empty multiset, and
/// overflow of the period value.
pub fn kwong_period(ell: u64, exponent: u32, s: &ColoredPartMultiset) -> Result<PeriodCertificate> {
    if exponent == 0 {
        return Err(Error::NotPositive);
    }
    let m_of_s = m_of_set(ell, s)?;
    let b_of_s = b_of_set(ell, s)?;
    let period = ell
        .checked_pow(exponent + b_of_s - 1)
        .and_then(|p| p.checked_mul(m_of_s))
        .ok_or(Error::Overflow("period"))?;
    Ok(PeriodCertificate {
        prime: ell,
        exponent,
        multiset: s.clone(),
        m_of_s,
        b_of_s,
        period,
    })
}

/// Period of the head factor `F_ell` modulo `ell^exponent`, in closed form:
/// `2^(exponent-1)` for `ell = 2`, `2 * 3^exponent` for `ell = 3`, and
/// `ell^(exponent+1) * lcm(1..ell-1)` for `ell >= 5`. Always agrees with
/// `kwong_period(ell, exponent, s_k_multiset(ell))`.
///
/// # Errors
///
/// Rejects a non-prime `ell`, `exponent = 0`, and overflow.
pub fn f_ell_period(ell: u64, exponent: u32) -> Result<u64> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if exponent == 0 {
        return Err(Error::NotPositive);
    }
    match ell {
        2 => 2u64
            .checked_pow(exponent - 1)
            .ok_or(Error::Overflow("period")),
        3 => 3u64
            .checked_pow(exponent)
            .and_then(|p| p.checked_mul(2))
            .ok_or(Error::Overflow("period")),
        _ => {
            let mut l = 1u64;
            for part in 1..ell {
                l = (l / gcd(l, part))
                    .checked_mul(part)
                    .ok_or(Error::Overflow("period"))?;
            }
            ell.checked_pow(exponent + 1)
                .and_then(|p| p.checked_mul(l))
                .ok_or(Error::Overflow("period"))
        }
    }
}

/// Finds the least divisor of `claimed` that is a period of `s` over its
/// retained window, after verifying that `claimed` itself is one.
///
/// The counting sequences this crate works with are purely periodic, and the
/// minimal period of a purely periodic sequence divides every period, so
/// scanning the divisors of one verified period is exhaustive.
///
/// # Errors
///
/// Rejects `claimed = 0`, a window shorter than two repetitions of
/// `claimed`, and a `claimed` that fails the window check.
pub fn detect_min_period(s: &ResidueSeries, claimed: u64) -> Result<u64> {
    if claimed == 0 {
        return Err(Error::NotPositive);
    }
    let order = s.order();
    let needed = claimed.checked_mul(2).ok_or(Error::Overflow("window"))?;
    if (order as u64) < needed {
        return Err(Error::WindowTooShort {
            order,
            claimed,
            needed,
        });
    }
    if !is_window_period(s, claimed as usize) {
        return Err(Error::NotAPeriod { claimed });
    }
    for d in divisors(claimed) {
        if is_window_period(s, d as usize) {
            return Ok(d);
        }
    }
    unreachable!("claimed itself passed the window check");
}

fn is_window_period(s: &ResidueSeries, d: usize) -> bool {
    let c = s.coeffs();
    (0..c.len() - d).all(|n| c[n + d] == c[n])
}
