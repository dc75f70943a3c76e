//! Step-count comparison of the local algorithm against the rectification
//! oracle on the staircase family. The abstract counters are the quantity
//! of interest: the local move count is bounded by the number of strip rows
//! plus strip columns, while the oracle's slide work grows with the inner
//! shape as well. Wall-clock times are reported alongside as color.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_box_first, staircase_family};
use crate::error::{Error, Result};
use crate::local::local_esh;
use crate::oracle::esh_oracle_steps;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchRow {
    pub t: usize,
    pub lr_count: usize,
    pub alpha_size: usize,
    /// The bound on local moves: strip rows plus strip columns.
    pub b: usize,
    pub local_moves_median: usize,
    pub local_moves_max: usize,
    pub oracle_steps_median: usize,
    /// oracle median over local median (local medians of 0 count as 1).
    pub ratio: f64,
    pub local_ns_median: u128,
    pub oracle_ns_median: u128,
}

fn median(mut v: Vec<usize>) -> usize {
    v.sort_unstable();
    if v.is_empty() {
        0
    } else {
        v[v.len() / 2]
    }
}

fn median_u128(mut v: Vec<u128>) -> u128 {
    v.sort_unstable();
    if v.is_empty() {
        0
    } else {
        v[v.len() / 2]
    }
}

/// Bench the staircase family for `t` in the inclusive range.
pub fn staircase_bench(t_min: usize, t_max: usize) -> Result<Vec<BenchRow>> {
    if t_min < 3 || t_max < t_min {
        return Err(Error::InvalidArgument(format!(
            "need 3 <= t_min <= t_max, got {t_min}..={t_max}"
        )));
    }
    let mut rows = Vec::new();
    for t in t_min..=t_max {
        let problem = staircase_family(t)?;
        let tableaux = enumerate_box_first(&problem)?;
        let b = problem.beta.len() + problem.beta.part(1);
        let mut local_moves = Vec::with_capacity(tableaux.len());
        let mut local_ns = Vec::with_capacity(tableaux.len());
        let mut oracle_steps = Vec::with_capacity(tableaux.len());
        let mut oracle_ns = Vec::with_capacity(tableaux.len());
        for pt in &tableaux {
            let clock = Instant::now();
            let (_, path) = local_esh(pt)?;
            local_ns.push(clock.elapsed().as_nanos());
            if path.move_count() > b {
                return Err(Error::Internal(format!(
                    "{} local moves exceeds the bound {b} at t = {t}",
                    path.move_count()
                )));
            }
            local_moves.push(path.move_count());

            let clock = Instant::now();
            let (_, steps) = esh_oracle_steps(pt)?;
            oracle_ns.push(clock.elapsed().as_nanos());
            oracle_steps.push(steps);
        }
        let local_med = median(local_moves.clone());
        let oracle_med = median(oracle_steps);
        rows.push(BenchRow {
            t,
            lr_count: tableaux.len(),
            alpha_size: problem.alpha.size(),
            b,
            local_moves_median: local_med,
            local_moves_max: local_moves.into_iter().max().unwrap_or(0),
            oracle_steps_median: oracle_med,
            ratio: oracle_med as f64 / local_med.max(1) as f64,
            local_ns_median: median_u128(local_ns),
            oracle_ns_median: median_u128(oracle_ns),
        });
    }
    Ok(rows)
}

/// ASCII table of the bench rows.
pub fn bench_table(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    out.push_str("  t |   LR | |alpha| |  b | local med/max | oracle med |  ratio\n");
    out.push_str("----+------+---------+----+---------------+------------+-------\n");
    for r in rows {
        out.push_str(&format!(
            "{:>3} | {:>4} | {:>7} | {:>2} | {:>6}/{:<6} | {:>10} | {:>6.2}\n",
            r.t,
            r.lr_count,
            r.alpha_size,
            r.b,
            r.local_moves_median,
            r.local_moves_max,
            r.oracle_steps_median,
            r.ratio,
        ));
    }
    out
}
