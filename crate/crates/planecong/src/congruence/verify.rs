//! The three ways to check a congruence statement: two bounded proof paths
//! that promote finitely many checks to all `n`, and a horizon check for
//! statements outside their scope.
//!
//! Both proof paths require `components = modulus = step = ell` with `ell`
//! prime. The plane-partition series is then periodic mod `ell` on each
//! residue class with period dividing `pi = ell^b(S_ell) * m(S_ell)`, the
//! certified period of the head factor, so checking the first
//! `B = max(1, ceil(pi / ell))` progression indices covers a full period
//! and decides the statement for every `n`. [`verify_bounded`] checks the
//! plane-partition counts themselves; [`alpha_check`] checks the head
//! factor's coefficients, which bound the counts through the tail
//! decomposition and must reach the same verdict.

use super::{
    CongruenceStatement, Counterexample, Method, SeriesCache, Verdict, VerificationReport,
};
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::modseries::ResidueSeries;
use crate::partitions::s_k_multiset;
use crate::periodicity::{f_ell_period, kwong_period};

/// Decides `st` for every `n` by checking one full period block of
/// plane-partition counts.
///
/// On success the report carries verdict `proved-for-all-n`, `bound` and
/// `checks` equal to the block count, and the period certificate that
/// justifies stopping there. A failing index yields `refuted` with the
/// counterexample.
///
/// # Errors
///
/// Rejects statements without `components = modulus = step = ell` prime;
/// those need [`empirical_check`].
pub fn verify_bounded(st: &CongruenceStatement) -> Result<VerificationReport> {
    verify_bounded_with(st, &SeriesCache::new())
}

/// [`verify_bounded`] reading its series through `cache`.
pub fn verify_bounded_with(
    st: &CongruenceStatement,
    cache: &SeriesCache,
) -> Result<VerificationReport> {
    let ell = theorem_prime(st)?;
    let block_count = proof_block_count(ell)?;
    let order = series_order(ell, block_count)?;
    let series = cache.plane(ell, ell, order)?;
    finish_proof_path(st, &series, block_count, Method::TheoremBound, ell)
}

/// Decides `st` for every `n` by checking one full period block of the
/// head factor's coefficients instead of the plane-partition counts.
///
/// Reaches the same verdict as [`verify_bounded`] on every statement in
/// scope; counterexample values are head coefficients, not counts.
///
/// # Errors
///
/// As [`verify_bounded`].
pub fn alpha_check(st: &CongruenceStatement) -> Result<VerificationReport> {
    alpha_check_with(st, &SeriesCache::new())
}

/// [`alpha_check`] reading its series through `cache`.
pub fn alpha_check_with(
    st: &CongruenceStatement,
    cache: &SeriesCache,
) -> Result<VerificationReport> {
    let ell = theorem_prime(st)?;
    let block_count = proof_block_count(ell)?;
    let order = series_order(ell, block_count)?;
    let series = cache.head(ell, ell, order)?;
    finish_proof_path(st, &series, block_count, Method::AlphaBeta, ell)
}

/// Checks `st` for `0 <= n < horizon` against the plane-partition series.
///
/// Works for any components, modulus, and step, but never proves: the
/// verdict is `holds-to-horizon` or `refuted`.
///
/// # Errors
///
/// Rejects `horizon = 0`.
pub fn empirical_check(st: &CongruenceStatement, horizon: u64) -> Result<VerificationReport> {
    empirical_check_with(st, horizon, &SeriesCache::new())
}

/// [`empirical_check`] reading its series through `cache`.
pub fn empirical_check_with(
    st: &CongruenceStatement,
    horizon: u64,
    cache: &SeriesCache,
) -> Result<VerificationReport> {
    if horizon == 0 {
        return Err(Error::ZeroHorizon);
    }
    let order = series_order(st.step(), horizon)?;
    let series = cache.plane(st.components(), st.modulus(), order)?;
    let report = match scan_window(&series, st, horizon)? {
        Some(cx) => VerificationReport {
            statement: st.clone(),
            method: Method::Empirical,
            bound: horizon,
            checks: cx.n + 1,
            verdict: Verdict::Refuted,
            counterexample: Some(cx),
            certificate: None,
        },
        None => VerificationReport {
            statement: st.clone(),
            method: Method::Empirical,
            bound: horizon,
            checks: horizon,
            verdict: Verdict::HoldsToHorizon,
            counterexample: None,
            certificate: None,
        },
    };
    Ok(report)
}

/// Extracts the single prime of a statement in bounded-verifier scope.
fn theorem_prime(st: &CongruenceStatement) -> Result<u64> {
    let ell = st.modulus();
    if st.components() != ell || st.step() != ell || !is_prime(ell) {
        return Err(Error::OutsideTheoremScope {
            components: st.components(),
            modulus: st.modulus(),
            step: st.step(),
        });
    }
    Ok(ell)
}

/// Progression indices one proof pass must check: the head factor's
/// period split into blocks of `ell`, rounded up, at least 1.
fn proof_block_count(ell: u64) -> Result<u64> {
    let period = f_ell_period(ell, 1)?;
    Ok(period.div_ceil(ell).max(1))
}

/// Series order covering residues `0..step` at progression indices
/// `0..count`: exactly `step * count` coefficients, no slack.
fn series_order(step: u64, count: u64) -> Result<usize> {
    let order = step
        .checked_mul(count)
        .ok_or(Error::Overflow("series order"))?;
    usize::try_from(order).map_err(|_| Error::Overflow("series order"))
}

fn finish_proof_path(
    st: &CongruenceStatement,
    series: &ResidueSeries,
    block_count: u64,
    method: Method,
    ell: u64,
) -> Result<VerificationReport> {
    let report = match scan_window(series, st, block_count)? {
        Some(cx) => VerificationReport {
            statement: st.clone(),
            method,
            bound: block_count,
            checks: cx.n + 1,
            verdict: Verdict::Refuted,
            counterexample: Some(cx),
            certificate: None,
        },
        None => VerificationReport {
            statement: st.clone(),
            method,
            bound: block_count,
            checks: block_count,
            verdict: Verdict::ProvedForAllN,
            counterexample: None,
            certificate: Some(kwong_period(ell, 1, &s_k_multiset(ell))?),
        },
    };
    Ok(report)
}

/// Returns the first progression index below `count` where the side sums
/// differ mod the statement's modulus, if any.
fn scan_window(
    series: &ResidueSeries,
    st: &CongruenceStatement,
    count: u64,
) -> Result<Option<Counterexample>> {
    for n in 0..count {
        let lhs_value = side_sum(series, st, n, st.lhs())?;
        let rhs_value = side_sum(series, st, n, st.rhs())?;
        if lhs_value != rhs_value {
            return Ok(Some(Counterexample {
                n,
                lhs_value,
                rhs_value,
            }));
        }
    }
    Ok(None)
}

/// Sum of the series coefficients at `step*n + r` over one side's
/// residues, reduced mod the statement's modulus.
fn side_sum(series: &ResidueSeries, st: &CongruenceStatement, n: u64, side: &[u64]) -> Result<u64> {
    let mut sum = 0u64;
    for r in side {
        let index = usize::try_from(st.step() * n + r).map_err(|_| Error::Overflow("side sum"))?;
        // Coefficients are below 2^32 and sides are short; no overflow.
        sum += series.coeff_at(index)?;
    }
    Ok(sum % st.modulus())
}
