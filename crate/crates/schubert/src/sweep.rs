//! Exhaustive verification sweeps: enumerate every triple of partitions in
//! every rectangle up to a size bound and check the algorithmic theorems on
//! each. Problems shard across a thread pool; results merge in a stable
//! order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumerate::{
    enumerate_box_first, enumerate_box_last, enumerate_genomic, partitions_by_size, SchubertProblem,
};
use crate::error::{Error, Result};
use crate::local::{local_esh_default, local_esh_reverse, local_esh_with};
use crate::monodromy::{cycle_sizes, esh_run, is_fixed_point, omega_i, orbit_decomposition};
use crate::oracle::{esh_oracle, esh_oracle_chain, esh_oracle_with_rectifier};
use crate::partition::{Partition, Rectangle};
use crate::punctured::PuncturedTableau;
use crate::skew::SkewTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// The local algorithm equals both rectification-based formulations.
    OracleEquivalence,
    /// Forward then reverse is the identity, and conversely.
    ReverseRoundtrip,
    /// Every intermediate filling stays ballot and semistandard; path
    /// shapes and lengths are as promised.
    Ballotness,
    /// Phase 1 and Phase 2 gaps each generate every genomic tableau exactly
    /// once.
    PhiBijections,
    /// The factorization of the monodromy and the per-family orbit counts.
    OmegaI,
    /// The orbit-by-orbit genomic bounds.
    Conjecture,
    /// Reflected inputs give reflected paths; the three fixed-point
    /// conditions agree; transposing swaps the transition data.
    Antidiagonal,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::OracleEquivalence,
        Check::ReverseRoundtrip,
        Check::Ballotness,
        Check::PhiBijections,
        Check::OmegaI,
        Check::Conjecture,
        Check::Antidiagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::OracleEquivalence => "oracle-equivalence",
            Check::ReverseRoundtrip => "reverse-roundtrip",
            Check::Ballotness => "ballotness",
            Check::PhiBijections => "phi-bijections",
            Check::OmegaI => "omega-i",
            Check::Conjecture => "conjecture",
            Check::Antidiagonal => "antidiagonal",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown check {s:?}; known: {}",
                    Check::ALL.map(|c| c.name()).join(", ")
                ))
            })
    }
}

/// What to sweep and how hard.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    /// Bound on rows + cols of the rectangles swept.
    pub max_n: usize,
    /// Restrict to one rectangle instead of all with `rows+cols <= max_n`.
    pub rect: Option<Rectangle>,
    /// Restrict to one triple of partitions.
    pub triple: Option<(Partition, Partition, Partition)>,
    pub checks: Vec<Check>,
    pub jobs: usize,
}

impl SweepSpec {
    pub fn new(max_n: usize, checks: Vec<Check>) -> Result<Self> {
        if max_n < 2 {
            return Err(Error::InvalidArgument("max_n must be at least 2".into()));
        }
        if checks.is_empty() {
            return Err(Error::InvalidArgument("select at least one check".into()));
        }
        Ok(SweepSpec {
            max_n,
            rect: None,
            triple: None,
            checks,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        })
    }

    pub fn with_rect(mut self, rect: Option<Rectangle>) -> Self {
        self.rect = rect;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn with_triple(mut self, triple: Option<(Partition, Partition, Partition)>) -> Self {
        self.triple = triple;
        self
    }
}

/// A failed check with the offending filling spelled out.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckFailure {
    pub check: Check,
    pub problem: String,
    pub detail: String,
    pub tableau_rows: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub rectangles: usize,
    pub problems: usize,
    pub tableaux: usize,
    pub failures: Vec<CheckFailure>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn failure(
    check: Check,
    problem: &SchubertProblem,
    detail: String,
    pt: Option<&PuncturedTableau>,
) -> CheckFailure {
    CheckFailure {
        check,
        problem: problem.to_string(),
        detail,
        tableau_rows: pt
            .map(|p| p.tableau().to_text().lines().map(String::from).collect())
            .unwrap_or_default(),
    }
}

/// All rectangles swept for a bound on rows + cols.
pub fn rectangles_up_to(max_n: usize) -> Vec<Rectangle> {
    let mut out = Vec::new();
    for rows in 1..max_n {
        for cols in 1..=max_n.saturating_sub(rows) {
            out.push(Rectangle::new(rows, cols).expect("positive sides"));
        }
    }
    out
}

/// All problems in one rectangle.
pub fn problems_in(rect: Rectangle) -> Vec<SchubertProblem> {
    let by_size = partitions_by_size(rect);
    let target = rect.size() - 1;
    let mut out = Vec::new();
    for (a_size, alphas) in by_size.iter().enumerate() {
        if a_size > target {
            break;
        }
        for alpha in alphas {
            for (b_size, betas) in by_size.iter().enumerate() {
                if a_size + b_size > target {
                    break;
                }
                for beta in betas {
                    for gamma in &by_size[target - a_size - b_size] {
                        out.push(
                            SchubertProblem::new(alpha.clone(), beta.clone(), gamma.clone(), rect)
                                .expect("sizes chosen to match"),
                        );
                    }
                }
            }
        }
    }
    out
}

/// Run the sweep. Deterministic: failures are reported in problem order
/// regardless of the number of worker threads.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepOutcome> {
    let rects = match spec.rect {
        Some(r) => vec![r],
        None => rectangles_up_to(spec.max_n),
    };
    let mut problems = Vec::new();
    for &rect in &rects {
        problems.extend(problems_in(rect));
    }
    if let Some((a, b, g)) = &spec.triple {
        problems.retain(|p| &p.alpha == a && &p.beta == b && &p.gamma == g);
    }
    let n_problems = problems.len();
    let jobs = spec.jobs.min(n_problems.max(1));
    let chunk = n_problems.div_ceil(jobs);
    let chunks: Vec<&[SchubertProblem]> = problems.chunks(chunk.max(1)).collect();

    let results: Vec<Result<(usize, Vec<CheckFailure>)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                let checks = spec.checks.clone();
                scope.spawn(move || {
                    let mut tableaux = 0;
                    let mut failures = Vec::new();
                    for problem in *chunk {
                        let stats = check_problem(problem, &checks)?;
                        tableaux += stats.0;
                        failures.extend(stats.1);
                    }
                    Ok((tableaux, failures))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });

    let mut outcome = SweepOutcome {
        rectangles: rects.len(),
        problems: n_problems,
        ..Default::default()
    };
    for r in results {
        let (tableaux, failures) = r?;
        outcome.tableaux += tableaux;
        outcome.failures.extend(failures);
    }
    Ok(outcome)
}

/// Run every selected check on one problem. Returns the number of tableaux
/// visited and any failures.
pub fn check_problem(
    problem: &SchubertProblem,
    checks: &[Check],
) -> Result<(usize, Vec<CheckFailure>)> {
    let firsts = enumerate_box_first(problem)?;
    let mut failures = Vec::new();
    let want = |c: Check| checks.contains(&c);

    if want(Check::ReverseRoundtrip) {
        let lasts = enumerate_box_last(problem)?;
        if lasts.len() != firsts.len() {
            failures.push(failure(
                Check::ReverseRoundtrip,
                problem,
                format!(
                    "first/last counts differ: {} vs {}",
                    firsts.len(),
                    lasts.len()
                ),
                None,
            ));
        }
        for pt in &firsts {
            let (out, _) = crate::local::local_esh(pt)?;
            let (back, _) = local_esh_reverse(&out)?;
            if &back != pt {
                failures.push(failure(
                    Check::ReverseRoundtrip,
                    problem,
                    "reverse of forward is not the identity".into(),
                    Some(pt),
                ));
            }
        }
        for pt in &lasts {
            let (back, _) = local_esh_reverse(pt)?;
            let (again, _) = crate::local::local_esh(&back)?;
            if &again != pt {
                failures.push(failure(
                    Check::ReverseRoundtrip,
                    problem,
                    "forward of reverse is not the identity".into(),
                    Some(pt),
                ));
            }
        }
    }

    if want(Check::OracleEquivalence) {
        for pt in &firsts {
            let (local_out, _) = crate::local::local_esh(pt)?;
            let (default_out, _, _) = local_esh_default(pt)?;
            if default_out != local_out {
                failures.push(failure(
                    Check::OracleEquivalence,
                    problem,
                    "step-by-step and default modes disagree".into(),
                    Some(pt),
                ));
            }
            let oracle_out = esh_oracle(pt)?;
            if oracle_out != local_out {
                failures.push(failure(
                    Check::OracleEquivalence,
                    problem,
                    "local algorithm disagrees with the rectification oracle".into(),
                    Some(pt),
                ));
            }
            let chain_out = esh_oracle_chain(pt)?;
            if chain_out != local_out {
                failures.push(failure(
                    Check::OracleEquivalence,
                    problem,
                    "five-shuffle chain oracle disagrees".into(),
                    Some(pt),
                ));
            }
            let std_rectifier = SkewTableau::highest_weight(pt.shape().inner()).standardize()?;
            let (alt, _) = esh_oracle_with_rectifier(pt, &std_rectifier)?;
            if alt != local_out {
                failures.push(failure(
                    Check::OracleEquivalence,
                    problem,
                    "oracle depends on the rectification order".into(),
                    Some(pt),
                ));
            }
        }
    }

    if want(Check::Ballotness) {
        for pt in &firsts {
            let mut bad: Option<String> = None;
            let (_, path) = local_esh_with(pt, &mut |mv, after, _| {
                if bad.is_some() {
                    return;
                }
                if !after.is_semistandard() {
                    bad = Some(format!("not semistandard after {mv}"));
                } else if !after.is_ballot() {
                    bad = Some(format!("not ballot after {mv}"));
                }
            })?;
            if let Some(detail) = bad {
                failures.push(failure(Check::Ballotness, problem, detail, Some(pt)));
                continue;
            }
            let beta = pt.content();
            let s = path.transition_step;
            let b = beta.len() + beta.part(1);
            if path.move_count() > b {
                failures.push(failure(
                    Check::Ballotness,
                    problem,
                    format!("{} moves exceeds the bound {b}", path.move_count()),
                    Some(pt),
                ));
            }
            if s <= beta.len() {
                if path.cells.len() != s + beta.part(s) {
                    failures.push(failure(
                        Check::Ballotness,
                        problem,
                        format!(
                            "path visits {} squares, expected {}",
                            path.cells.len(),
                            s + beta.part(s)
                        ),
                        Some(pt),
                    ));
                }
                let cocorner = crate::partition::Cell::new(s, beta.part(s) + 1);
                if !beta.cocorners().contains(&cocorner) {
                    failures.push(failure(
                        Check::Ballotness,
                        problem,
                        format!("content has no co-corner in row {s}"),
                        Some(pt),
                    ));
                }
            }
            let phase1 = path.phase1_cells();
            if phase1.windows(2).any(|w| w[1].row <= w[0].row) {
                failures.push(failure(
                    Check::Ballotness,
                    problem,
                    "Phase 1 path does not descend".into(),
                    Some(pt),
                ));
            }
            let phase2 = &path.cells[phase1.len() - 1..];
            if phase2.windows(2).any(|w| w[1].col <= w[0].col) {
                failures.push(failure(
                    Check::Ballotness,
                    problem,
                    "Phase 2 path does not move right".into(),
                    Some(pt),
                ));
            }
        }
    }

    if want(Check::PhiBijections) {
        let expected = enumerate_genomic(problem)?;
        let mut got1 = Vec::new();
        let mut got2 = Vec::new();
        for pt in &firsts {
            let run = esh_run(pt)?;
            got1.extend(run.phase1);
            got2.extend(run.phase2);
        }
        got1.sort();
        got2.sort();
        for (phase, got) in [(1, &got1), (2, &got2)] {
            if got.windows(2).any(|w| w[0] == w[1]) {
                failures.push(failure(
                    Check::PhiBijections,
                    problem,
                    format!("phase {phase} generates a genomic tableau twice"),
                    None,
                ));
            } else if got != &expected {
                failures.push(failure(
                    Check::PhiBijections,
                    problem,
                    format!(
                        "phase {phase} generates {} genomic tableaux, enumeration finds {}",
                        got.len(),
                        expected.len()
                    ),
                    None,
                ));
            }
        }
    }

    if want(Check::OmegaI) {
        let t = problem.beta.len();
        let report = orbit_decomposition(problem)?;
        for (idx, pt) in firsts.iter().enumerate() {
            let mut x = pt.clone();
            for i in 1..=t {
                x = omega_i(i, &x)?;
            }
            if firsts[report.permutation[idx]] != x {
                failures.push(failure(
                    Check::OmegaI,
                    problem,
                    "the factors do not compose to the monodromy".into(),
                    Some(pt),
                ));
                break;
            }
        }
        // A single step followed by its strip slide fixes the filling
        // exactly when the step was vertical or stayed in its row, the two
        // cases that are plain jeu de taquin.
        for pt in &firsts {
            let mut x = pt.clone();
            for i in 1..=t {
                let (y, mv) = crate::local::step_ell(i, &x)?;
                let back = crate::local::step_sh(i, &y)?;
                let fixed = back == x;
                let expect = match mv.kind {
                    crate::local::MoveKind::Vert => true,
                    crate::local::MoveKind::Jump => mv.from.row == mv.to.row,
                    _ => false,
                };
                if fixed != expect {
                    failures.push(failure(
                        Check::OmegaI,
                        problem,
                        format!("step {i} ({mv}) fixedness was {fixed}, expected {expect}"),
                        Some(pt),
                    ));
                }
                x = y;
            }
        }
        let family_counts = crate::enumerate::genomic_family_counts(problem)?;
        for i in 1..=t {
            let perm = crate::monodromy::omega_i_permutation(problem, i)?;
            let transpositions: usize = cycle_sizes(&perm).iter().map(|s| s - 1).sum();
            if transpositions != family_counts[i - 1] {
                failures.push(failure(
                    Check::OmegaI,
                    problem,
                    format!(
                        "factor {i} needs {transpositions} transpositions but family {i} has {} genomic tableaux",
                        family_counts[i - 1]
                    ),
                    None,
                ));
            }
        }
        let k_total: usize = family_counts.iter().sum();
        let rlength = report.reflection_length();
        if k_total < rlength || k_total % 2 != report.sign() {
            failures.push(failure(
                Check::OmegaI,
                problem,
                format!(
                    "genomic count {k_total} violates the reflection-length bound {rlength} or its parity"
                ),
                None,
            ));
        }
        if report.orbits.len() == report.tableaux.len() && k_total != 0 {
            failures.push(failure(
                Check::OmegaI,
                problem,
                "identity monodromy must have no genomic tableaux".into(),
                None,
            ));
        }
    }

    if want(Check::Conjecture) {
        let report = crate::monodromy::check_conjecture(problem)?;
        for v in report.counterexamples() {
            failures.push(failure(
                Check::Conjecture,
                problem,
                format!(
                    "orbit of size {} generates only {} and {} genomic tableaux",
                    v.size, v.k1, v.k2
                ),
                None,
            ));
        }
    }

    if want(Check::Antidiagonal) {
        for pt in &firsts {
            let (out, path) = crate::local::local_esh(pt)?;
            let reflected_in = out.rotate_transpose(problem.rect)?;
            let (reflected_out, reflected_path) = crate::local::local_esh(&reflected_in)?;
            if reflected_out != pt.rotate_transpose(problem.rect)? {
                failures.push(failure(
                    Check::Antidiagonal,
                    problem,
                    "reflecting the output does not invert the algorithm".into(),
                    Some(pt),
                ));
            }
            let mut mirrored: Vec<_> = path
                .cells
                .iter()
                .map(|&c| problem.rect.antidiagonal(c))
                .collect();
            mirrored.reverse();
            if mirrored != reflected_path.cells {
                failures.push(failure(
                    Check::Antidiagonal,
                    problem,
                    "the reflected path is not the mirror of the original".into(),
                    Some(pt),
                ));
            }
            let s = path.transition_step;
            let transposed = pt.transpose_class()?;
            let s_t = crate::local::transition_step(&transposed)?;
            if s_t != pt.content().part(s) + 1 {
                failures.push(failure(
                    Check::Antidiagonal,
                    problem,
                    format!("transposing sent transition {s} to {s_t}"),
                    Some(pt),
                ));
            }
            let flags = is_fixed_point(pt)?;
            if !flags.agree() {
                failures.push(failure(
                    Check::Antidiagonal,
                    problem,
                    format!("fixed-point conditions disagree: {flags:?}"),
                    Some(pt),
                ));
            }
        }
    }

    Ok((firsts.len(), failures))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangle_list_is_bounded() {
        let rects = rectangles_up_to(4);
        assert!(rects.contains(&Rectangle::new(2, 2).unwrap()));
        assert!(rects.contains(&Rectangle::new(1, 3).unwrap()));
        assert!(rects.contains(&Rectangle::new(3, 1).unwrap()));
        assert!(!rects.contains(&Rectangle::new(2, 3).unwrap()));
    }

    #[test]
    fn tiny_sweep_passes() {
        let spec = SweepSpec::new(4, Check::ALL.to_vec()).unwrap().with_jobs(2);
        let outcome = run_sweep(&spec).unwrap();
        assert!(outcome.passed(), "{:?}", outcome.failures);
        assert!(outcome.problems > 0);
        assert!(outcome.tableaux > 0);
    }

    #[test]
    fn outcome_is_independent_of_thread_count() {
        let one = run_sweep(&SweepSpec::new(5, Check::ALL.to_vec()).unwrap().with_jobs(1)).unwrap();
        let many =
            run_sweep(&SweepSpec::new(5, Check::ALL.to_vec()).unwrap().with_jobs(4)).unwrap();
        assert_eq!(one.problems, many.problems);
        assert_eq!(one.tableaux, many.tableaux);
        assert_eq!(one.failures.len(), many.failures.len());
    }

    #[test]
    fn triple_filter_narrows_the_sweep() {
        let triple = (
            Partition::new(vec![2, 2, 1]).unwrap(),
            Partition::new(vec![3, 1, 1]).unwrap(),
            Partition::new(vec![3, 2]).unwrap(),
        );
        let spec = SweepSpec::new(8, vec![Check::OracleEquivalence])
            .unwrap()
            .with_rect(Some(Rectangle::new(4, 4).unwrap()))
            .with_triple(Some(triple));
        let outcome = run_sweep(&spec).unwrap();
        assert_eq!(outcome.problems, 1);
        assert_eq!(outcome.tableaux, 2);
        assert!(outcome.passed());
    }

    #[test]
    fn check_names_roundtrip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(SweepSpec::new(1, Check::ALL.to_vec()).is_err());
        assert!(SweepSpec::new(4, vec![]).is_err());
    }
}
