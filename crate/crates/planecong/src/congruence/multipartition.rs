//! The multipartition route to the two-layer congruences modulo 5.
//!
//! Two-component multipartition counts vanish mod 5 on the residue
//! classes 2, 3, 4 (the quadratic-residue criterion [`kiming_olsson_holds`]
//! picks these out), and the two-layer plane-partition count is the first
//! difference of the two-component count. Together these force
//! `pl_2(5n+3)` and `pl_2(5n+4)` to vanish mod 5.

use super::{CongruenceStatement, Counterexample, Method, Verdict, VerificationReport};
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::partitions::{multipartition_series, pl_series};

/// Legendre symbol `(a | ell)` for an odd prime `ell`, via Euler's
/// criterion `a^((ell-1)/2)`.
///
/// # Errors
///
/// Rejects `ell` even or composite.
pub fn legendre(a: u64, ell: u64) -> Result<i32> {
    if ell == 2 || !is_prime(ell) {
        return Err(Error::NotOddPrime(ell));
    }
    let value = pow_mod(a % ell, (ell - 1) / 2, ell);
    Ok(match value {
        0 => 0,
        1 => 1,
        _ => -1,
    })
}

/// True when the `(ell - 3)`-component multipartition counts vanish mod
/// `ell` on the residue class `a`, by the quadratic-residue criterion:
/// `8a + 1` is not a nonzero square mod `ell`.
///
/// # Errors
///
/// Rejects composite `ell`, `ell < 5`, and `a >= ell`.
pub fn kiming_olsson_holds(ell: u64, a: u64) -> Result<bool> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if ell < 5 {
        return Err(Error::PrimeTooSmall(ell));
    }
    if a >= ell {
        return Err(Error::ResidueOutOfRange {
            residue: a,
            prime: ell,
        });
    }
    Ok(legendre((8 * a + 1) % ell, ell)? != 1)
}

/// Checks `pl_2(5n+3) == 0` and `pl_2(5n+4) == 0 (mod 5)` for
/// `0 <= n < horizon` by the multipartition route: each value is computed
/// as the first difference of two-component multipartition counts, whose
/// residue classes 2, 3, 4 vanish mod 5, and cross-checked against the
/// plane-partition series.
///
/// Returns one report per congruence, in residue order.
///
/// # Errors
///
/// Rejects `horizon = 0`.
pub fn pl2_mod5_via_multipartition(horizon: u64) -> Result<Vec<VerificationReport>> {
    if horizon == 0 {
        return Err(Error::ZeroHorizon);
    }
    let order = usize::try_from(5 * horizon).map_err(|_| Error::Overflow("series order"))?;
    let multi = multipartition_series(2, 5, order)?;
    let plane = pl_series(2, 5, order)?;
    let mut reports = Vec::with_capacity(2);
    for residue in [3u64, 4] {
        let statement = CongruenceStatement::new(2, 5, 5, [residue], [])?;
        let mut counterexample = None;
        for n in 0..horizon {
            let index = usize::try_from(5 * n + residue).expect("order fits usize");
            // First difference of the multipartition counts; both terms
            // vanish individually, so the route value is 0 mod 5.
            let route_value = (5 + multi.coeff_at(index)? - multi.coeff_at(index - 1)?) % 5;
            let plane_value = plane.coeff_at(index)?;
            if route_value != 0 || plane_value != 0 {
                counterexample = Some(Counterexample {
                    n,
                    lhs_value: plane_value,
                    rhs_value: 0,
                });
                break;
            }
        }
        reports.push(match counterexample {
            Some(cx) => VerificationReport {
                statement,
                method: Method::Multipartition,
                bound: horizon,
                checks: cx.n + 1,
                verdict: Verdict::Refuted,
                counterexample: Some(cx),
                certificate: None,
            },
            None => VerificationReport {
                statement,
                method: Method::Multipartition,
                bound: horizon,
                checks: horizon,
                verdict: Verdict::HoldsToHorizon,
                counterexample: None,
                certificate: None,
            },
        });
    }
    Ok(reports)
}

/// `base^exp mod m` by square and multiply; `m` fits in 32 bits, so the
/// intermediate products fit in a u64.
fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enum_multi;

    #[test]
    fn legendre_separates_squares_from_nonsquares() {
        assert_eq!(legendre(25, 5).unwrap(), 0);
        assert_eq!(legendre(4, 5).unwrap(), 1);
        assert_eq!(legendre(17, 5).unwrap(), -1);
        // Squares mod 7 are {1, 2, 4}.
        for a in [1, 2, 4] {
            assert_eq!(legendre(a, 7).unwrap(), 1, "a={a}");
        }
        for a in [3, 5, 6] {
            assert_eq!(legendre(a, 7).unwrap(), -1, "a={a}");
        }
        assert_eq!(legendre(0, 7).unwrap(), 0);
    }

    #[test]
    fn legendre_requires_an_odd_prime() {
        assert_eq!(legendre(3, 2).unwrap_err(), Error::NotOddPrime(2));
        assert_eq!(legendre(3, 9).unwrap_err(), Error::NotOddPrime(9));
    }

    #[test]
    fn vanishing_criterion_picks_residues_2_3_4_at_5() {
        let holds: Vec<u64> = (0..5)
            .filter(|&a| kiming_olsson_holds(5, a).unwrap())
            .collect();
        assert_eq!(holds, [2, 3, 4]);
    }

    #[test]
    fn vanishing_criterion_picks_residues_2_4_5_6_at_7() {
        let holds: Vec<u64> = (0..7)
            .filter(|&a| kiming_olsson_holds(7, a).unwrap())
            .collect();
        assert_eq!(holds, [2, 4, 5, 6]);
    }

    #[test]
    fn vanishing_criterion_rejects_bad_arguments() {
        assert_eq!(
            kiming_olsson_holds(3, 0).unwrap_err(),
            Error::PrimeTooSmall(3)
        );
        assert_eq!(kiming_olsson_holds(9, 2).unwrap_err(), Error::NotPrime(9));
        assert_eq!(
            kiming_olsson_holds(5, 7).unwrap_err(),
            Error::ResidueOutOfRange {
                residue: 7,
                prime: 5
            }
        );
    }

    #[test]
    fn criterion_matches_observed_multipartition_vanishing() {
        // Residue class a vanishes mod 5 over the window exactly when the
        // criterion says it does.
        let multi = multipartition_series(2, 5, 1000).unwrap();
        for a in 0..5u64 {
            let observed =
                (0..200).all(|n| multi.coeff_at(usize::try_from(5 * n + a).unwrap()).unwrap() == 0);
            assert_eq!(observed, kiming_olsson_holds(5, a).unwrap(), "a={a}");
        }
    }

    #[test]
    fn route_reports_hold_to_horizon() {
        let reports = pl2_mod5_via_multipartition(40).unwrap();
        assert_eq!(reports.len(), 2);
        for (report, residue) in reports.iter().zip([3u64, 4]) {
            assert_eq!(report.verdict, Verdict::HoldsToHorizon);
            assert_eq!(report.method, Method::Multipartition);
            assert_eq!((report.bound, report.checks), (40, 40));
            assert_eq!(report.statement.lhs(), &[residue]);
            assert!(report.statement.is_zero_form());
            assert_eq!(report.statement.components(), 2);
            assert_eq!(report.statement.modulus(), 5);
        }
        assert_eq!(
            pl2_mod5_via_multipartition(0).unwrap_err(),
            Error::ZeroHorizon
        );
    }

    #[test]
    fn first_difference_identity_holds_at_small_indices() {
        // pl_2(2) = p_2(2) - p_2(1), checked against the oracles.
        assert_eq!(enum_multi(2, 2).unwrap() - enum_multi(1, 2).unwrap(), 3);
        let plane = pl_series(2, 5, 10).unwrap();
        assert_eq!(plane.coeff_at(2).unwrap(), 3);
        // pl_2(3) = 5 and pl_2(4) = 10, the n = 0 cases of the two
        // congruences.
        assert_eq!(plane.coeff_at(3).unwrap(), 0);
        assert_eq!(plane.coeff_at(4).unwrap(), 0);
        assert_eq!(enum_multi(3, 2).unwrap() - enum_multi(2, 2).unwrap(), 5);
        assert_eq!(enum_multi(4, 2).unwrap() - enum_multi(3, 2).unwrap(), 10);
    }
}
