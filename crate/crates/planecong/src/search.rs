//! Congruence discovery: enumerate the candidate statements for one prime
//! and keep those the bounded verifier proves, and scan residue classes
//! across many primes for progressions on which the counts vanish.
//!
//! Work is sharded across a bounded worker pool by statement (enumeration)
//! or by prime (scan); results merge through a final sort, so output is
//! identical for every worker count.

use crate::arith::{is_prime, primes_up_to};
use crate::congruence::{
    verify_bounded_with, CongruenceStatement, SeriesCache, Verdict, VerificationReport,
};
use crate::error::{Error, Result};
use crate::partitions::pl_series;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

/// Knobs for [`enumerate_and_verify`] and [`zero_scan`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Prime whose statement family the enumeration examines.
    pub prime: u64,
    /// Largest residue multiset size per statement side.
    pub max_terms_per_side: usize,
    /// The scan examines primes up to this limit, inclusive.
    pub scan_prime_limit: u64,
    /// Progression indices the scan examines per residue class; `None`
    /// examines `10 * prime` indices for each prime.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub scan_horizon: Option<u64>,
    /// Worker threads; 0 lets the pool pick.
    pub worker_count: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            prime: 2,
            max_terms_per_side: 2,
            scan_prime_limit: 31,
            scan_horizon: None,
            worker_count: 0,
        }
    }
}

impl SearchConfig {
    /// Enumeration defaults for one prime: sides of at most two residues.
    pub fn for_prime(prime: u64) -> Self {
        SearchConfig {
            prime,
            ..Self::default()
        }
    }
}

/// One scanned residue class: the least progression index with a
/// nonvanishing count, or none when every examined count vanished (a
/// surviving candidate congruence).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroScanRow {
    pub prime: u64,
    pub residue: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_n: Option<u64>,
    /// Count mod prime at the witness index; nonzero by construction.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<u64>,
}

/// An enumeration run with its timing, for machine-readable output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRun {
    pub config: SearchConfig,
    pub results: Vec<VerificationReport>,
    pub elapsed_ms: u64,
}

/// A scan run with its timing, for machine-readable output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRun {
    pub config: SearchConfig,
    pub results: Vec<ZeroScanRow>,
    pub elapsed_ms: u64,
}

/// Builds every canonical nontrivial statement for `cfg.prime` with side
/// sizes up to `cfg.max_terms_per_side` (empty right-hand sides included),
/// verifies each, and returns the proved ones sorted by statement.
///
/// # Errors
///
/// Rejects a composite `cfg.prime` and `max_terms_per_side = 0`.
pub fn enumerate_and_verify(cfg: &SearchConfig) -> Result<Vec<VerificationReport>> {
    if !is_prime(cfg.prime) {
        return Err(Error::NotPrime(cfg.prime));
    }
    if cfg.max_terms_per_side == 0 {
        return Err(Error::ZeroTerms);
    }
    let candidates = candidate_statements(cfg.prime, cfg.max_terms_per_side)?;
    let cache = SeriesCache::new();
    let reports = run_pool(cfg.worker_count, || {
        candidates
            .par_iter()
            .map(|st| verify_bounded_with(st, &cache))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut proved: Vec<VerificationReport> = reports
        .into_iter()
        .filter(|r| r.verdict == Verdict::ProvedForAllN)
        .collect();
    proved.sort_by(|a, b| a.statement.cmp(&b.statement));
    Ok(proved)
}

/// For each prime up to `cfg.scan_prime_limit` and each residue class,
/// reports the least progression index whose count does not vanish, or a
/// witness-free row for classes that vanished over the whole window.
/// Rows are sorted by prime, then residue.
///
/// # Errors
///
/// Rejects `scan_prime_limit < 2` and an explicit zero horizon.
pub fn zero_scan(cfg: &SearchConfig) -> Result<Vec<ZeroScanRow>> {
    if cfg.scan_prime_limit < 2 {
        return Err(Error::ScanLimitTooSmall(cfg.scan_prime_limit));
    }
    if cfg.scan_horizon == Some(0) {
        return Err(Error::ZeroHorizon);
    }
    let primes = primes_up_to(cfg.scan_prime_limit);
    let per_prime = run_pool(cfg.worker_count, || {
        primes
            .par_iter()
            .map(|&ell| scan_prime(ell, cfg.scan_horizon))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut rows: Vec<ZeroScanRow> = per_prime.into_iter().flatten().collect();
    rows.sort_by_key(|row| (row.prime, row.residue));
    Ok(rows)
}

/// [`enumerate_and_verify`] wrapped with its configuration and timing.
pub fn run_enumeration(cfg: &SearchConfig) -> Result<SearchRun> {
    let started = Instant::now();
    let results = enumerate_and_verify(cfg)?;
    Ok(SearchRun {
        config: cfg.clone(),
        results,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// [`zero_scan`] wrapped with its configuration and timing.
pub fn run_zero_scan(cfg: &SearchConfig) -> Result<ScanRun> {
    let started = Instant::now();
    let results = zero_scan(cfg)?;
    Ok(ScanRun {
        config: cfg.clone(),
        results,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Fixed-width text table for scan rows; witness-free classes are marked,
/// and a trailing note explains why one is expected: an identically
/// vanishing progression (such as the proved `pl_3(3n+2)`) never produces
/// a witness, whatever the horizon.
pub fn render_scan_table(rows: &[ZeroScanRow]) -> String {
    let mut out = String::from("prime  residue  witness_n  value\n");
    let mut witness_free = 0usize;
    for row in rows {
        match (row.witness_n, row.value) {
            (Some(n), Some(v)) => {
                writeln!(
                    out,
                    "{:>5}  {:>7}  {:>9}  {:>5}",
                    row.prime, row.residue, n, v
                )
            }
            _ => {
                witness_free += 1;
                writeln!(
                    out,
                    "{:>5}  {:>7}  {:>9}  {:>5}  (no witness up to horizon)",
                    row.prime, row.residue, "-", "-"
                )
            }
        }
        .expect("string write cannot fail");
    }
    if witness_free > 0 {
        writeln!(
            out,
            "note: {witness_free} class(es) produced no witness; a proved zero progression \
             such as pl_3(3n+2) stays witness-free at every horizon"
        )
        .expect("string write cannot fail");
    }
    out
}

/// Runs `job` on a dedicated pool of `workers` threads, or inline on the
/// shared pool when `workers` is 0.
fn run_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return job();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("failed to build worker pool");
    pool.install(job)
}

/// All canonical nontrivial statements with `components = modulus = step
/// = ell`, left side sizes `1..=max_terms`, right side sizes
/// `0..=max_terms`, deduplicated.
fn candidate_statements(ell: u64, max_terms: usize) -> Result<Vec<CongruenceStatement>> {
    let mut lhs_sides = Vec::new();
    for size in 1..=max_terms {
        lhs_sides.extend(residue_multisets(ell, size));
    }
    let mut rhs_sides = vec![Vec::new()];
    for size in 1..=max_terms {
        rhs_sides.extend(residue_multisets(ell, size));
    }
    let mut seen = BTreeSet::new();
    for lhs in &lhs_sides {
        for rhs in &rhs_sides {
            let st = CongruenceStatement::prime(ell, lhs.iter().copied(), rhs.iter().copied())?;
            if st.is_trivial() {
                continue;
            }
            seen.insert(st);
        }
    }
    Ok(seen.into_iter().collect())
}

/// Nondecreasing tuples of `size` residues below `ell`.
fn residue_multisets(ell: u64, size: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fill_multisets(ell, size, 0, &mut current, &mut out);
    out
}

fn fill_multisets(
    ell: u64,
    size: usize,
    start: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for r in start..ell {
        current.push(r);
        fill_multisets(ell, size, r, current, out);
        current.pop();
    }
}

/// Scans every residue class of one prime over a shared series.
fn scan_prime(ell: u64, horizon: Option<u64>) -> Result<Vec<ZeroScanRow>> {
    let horizon = horizon.unwrap_or(10 * ell);
    let order = ell
        .checked_mul(horizon)
        .and_then(|o| usize::try_from(o).ok())
        .ok_or(Error::Overflow("scan series order"))?;
    let series = pl_series(ell, ell, order)?;
    (0..ell)
        .map(|residue| {
            let mut witness = None;
            for n in 0..horizon {
                let value = series.coeff_at(usize::try_from(ell * n + residue).unwrap())?;
                if value != 0 {
                    witness = Some((n, value));
                    break;
                }
            }
            Ok(ZeroScanRow {
                prime: ell,
                residue,
                witness_n: witness.map(|(n, _)| n),
                value: witness.map(|(_, v)| v),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::alpha_check;

    fn st(ell: u64, lhs: &[u64], rhs: &[u64]) -> CongruenceStatement {
        CongruenceStatement::prime(ell, lhs.to_vec(), rhs.to_vec()).unwrap()
    }

    fn statements(reports: &[VerificationReport]) -> Vec<CongruenceStatement> {
        reports.iter().map(|r| r.statement.clone()).collect()
    }

    #[test]
    fn mod_3_singleton_search_finds_exactly_the_two_congruences() {
        let cfg = SearchConfig {
            max_terms_per_side: 1,
            ..SearchConfig::for_prime(3)
        };
        let results = enumerate_and_verify(&cfg).unwrap();
        assert_eq!(
            statements(&results),
            vec![st(3, &[0], &[1]), st(3, &[2], &[])]
        );
    }

    #[test]
    fn mod_5_singleton_search_finds_the_two_pairs_and_no_zero_forms() {
        let cfg = SearchConfig {
            max_terms_per_side: 1,
            ..SearchConfig::for_prime(5)
        };
        let results = enumerate_and_verify(&cfg).unwrap();
        assert_eq!(
            statements(&results),
            vec![st(5, &[1], &[3]), st(5, &[2], &[4])]
        );
    }

    #[test]
    fn mod_3_pair_search_finds_the_six_consequences() {
        let results = enumerate_and_verify(&SearchConfig::for_prime(3)).unwrap();
        assert_eq!(
            statements(&results),
            vec![
                st(3, &[0], &[1]),
                st(3, &[0], &[1, 2]),
                st(3, &[0, 0], &[1, 1]),
                st(3, &[0, 2], &[1]),
                st(3, &[2], &[]),
                st(3, &[2, 2], &[]),
            ]
        );
    }

    #[test]
    fn mod_5_pair_search_finds_the_six_consequences() {
        let results = enumerate_and_verify(&SearchConfig::for_prime(5)).unwrap();
        assert_eq!(
            statements(&results),
            vec![
                st(5, &[1], &[3]),
                st(5, &[1, 1], &[3, 3]),
                st(5, &[1, 2], &[3, 4]),
                st(5, &[1, 4], &[2, 3]),
                st(5, &[2], &[4]),
                st(5, &[2, 2], &[4, 4]),
            ]
        );
    }

    #[test]
    fn mod_7_pair_search_finds_only_the_four_term_congruence() {
        let results = enumerate_and_verify(&SearchConfig::for_prime(7)).unwrap();
        assert_eq!(statements(&results), vec![st(7, &[2, 3], &[4, 5])]);
    }

    #[test]
    fn mod_2_pair_search_matches_the_parity_structure() {
        let results = enumerate_and_verify(&SearchConfig::for_prime(2)).unwrap();
        assert_eq!(
            statements(&results),
            vec![
                st(2, &[0], &[1]),
                st(2, &[0, 0], &[]),
                st(2, &[0, 0], &[1, 1]),
                st(2, &[0, 1], &[]),
                st(2, &[1, 1], &[]),
            ]
        );
    }

    #[test]
    fn search_results_reverify_under_the_alpha_path() {
        let results = enumerate_and_verify(&SearchConfig::for_prime(3)).unwrap();
        for report in &results {
            let again = alpha_check(&report.statement).unwrap();
            assert_eq!(again.verdict, report.verdict, "{}", report.statement);
        }
    }

    #[test]
    fn search_output_is_identical_across_worker_counts() {
        let single = enumerate_and_verify(&SearchConfig {
            worker_count: 1,
            ..SearchConfig::for_prime(5)
        })
        .unwrap();
        let several = enumerate_and_verify(&SearchConfig {
            worker_count: 4,
            ..SearchConfig::for_prime(5)
        })
        .unwrap();
        assert_eq!(single, several);
    }

    #[test]
    fn scan_finds_witnesses_everywhere_except_the_proved_class() {
        let cfg = SearchConfig {
            scan_prime_limit: 7,
            ..SearchConfig::default()
        };
        let rows = zero_scan(&cfg).unwrap();
        assert_eq!(rows.len(), 2 + 3 + 5 + 7);
        let survivors: Vec<(u64, u64)> = rows
            .iter()
            .filter(|r| r.witness_n.is_none())
            .map(|r| (r.prime, r.residue))
            .collect();
        assert_eq!(survivors, vec![(3, 2)]);
        // Three plane partitions of 2 regardless of the layer bound.
        let row = rows
            .iter()
            .find(|r| (r.prime, r.residue) == (7, 2))
            .unwrap();
        assert_eq!((row.witness_n, row.value), (Some(0), Some(3)));
        // The empty plane partition witnesses every residue-0 class.
        for row in rows.iter().filter(|r| r.residue == 0) {
            assert_eq!((row.witness_n, row.value), (Some(0), Some(1)));
        }
    }

    #[test]
    fn scan_output_is_identical_across_worker_counts() {
        let base = SearchConfig {
            scan_prime_limit: 13,
            ..SearchConfig::default()
        };
        let single = zero_scan(&SearchConfig {
            worker_count: 1,
            ..base.clone()
        })
        .unwrap();
        let several = zero_scan(&SearchConfig {
            worker_count: 3,
            ..base
        })
        .unwrap();
        assert_eq!(single, several);
    }

    #[test]
    fn scan_respects_an_explicit_horizon() {
        // Horizon 1 examines only n = 0, so classes whose first value
        // vanishes survive.
        let cfg = SearchConfig {
            scan_prime_limit: 3,
            scan_horizon: Some(1),
            ..SearchConfig::default()
        };
        let rows = zero_scan(&cfg).unwrap();
        let survivors: Vec<(u64, u64)> = rows
            .iter()
            .filter(|r| r.witness_n.is_none())
            .map(|r| (r.prime, r.residue))
            .collect();
        // At n = 0 only pl_3(2) = 3 vanishes mod its prime; pl_2(1) = 1
        // and pl_3(1) = 1 do not.
        assert_eq!(survivors, vec![(3, 2)]);
    }

    #[test]
    fn config_validation_rejects_degenerate_runs() {
        let bad_prime = SearchConfig::for_prime(6);
        assert_eq!(
            enumerate_and_verify(&bad_prime).unwrap_err(),
            Error::NotPrime(6)
        );
        let no_terms = SearchConfig {
            max_terms_per_side: 0,
            ..SearchConfig::for_prime(3)
        };
        assert_eq!(
            enumerate_and_verify(&no_terms).unwrap_err(),
            Error::ZeroTerms
        );
        let tiny_limit = SearchConfig {
            scan_prime_limit: 1,
            ..SearchConfig::default()
        };
        assert_eq!(
            zero_scan(&tiny_limit).unwrap_err(),
            Error::ScanLimitTooSmall(1)
        );
        let zero_horizon = SearchConfig {
            scan_horizon: Some(0),
            ..SearchConfig::default()
        };
        assert_eq!(zero_scan(&zero_horizon).unwrap_err(), Error::ZeroHorizon);
    }

    #[test]
    fn run_wrappers_carry_config_and_results() {
        let cfg = SearchConfig {
            max_terms_per_side: 1,
            ..SearchConfig::for_prime(3)
        };
        let run = run_enumeration(&cfg).unwrap();
        assert_eq!(run.config, cfg);
        assert_eq!(run.results, enumerate_and_verify(&cfg).unwrap());

        let scan_cfg = SearchConfig {
            scan_prime_limit: 5,
            ..SearchConfig::default()
        };
        let run = run_zero_scan(&scan_cfg).unwrap();
        assert_eq!(run.results, zero_scan(&scan_cfg).unwrap());
        let json = serde_json::to_string(&run).unwrap();
        let back: ScanRun = serde_json::from_str(&json).unwrap();
        assert_eq!(back, run);
    }

    #[test]
    fn scan_table_marks_witness_free_classes() {
        let rows = vec![
            ZeroScanRow {
                prime: 2,
                residue: 0,
                witness_n: Some(0),
                value: Some(1),
            },
            ZeroScanRow {
                prime: 3,
                residue: 2,
                witness_n: None,
                value: None,
            },
        ];
        let table = render_scan_table(&rows);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("prime"));
        assert!(lines[1].contains("    2        0          0      1"));
        assert!(lines[2].contains("(no witness up to horizon)"));
        assert!(lines[3].starts_with("note: 1 class(es) produced no witness"));
    }

    #[test]
    fn scan_table_omits_the_note_when_every_class_has_a_witness() {
        let rows = vec![ZeroScanRow {
            prime: 2,
            residue: 1,
            witness_n: Some(0),
            value: Some(1),
        }];
        let table = render_scan_table(&rows);
        assert_eq!(table.lines().count(), 2);
        assert!(!table.contains("note:"));
    }
}
