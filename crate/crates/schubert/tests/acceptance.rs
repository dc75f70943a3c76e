//! The acceptance gate: every numbered criterion below runs at its stated
//! tolerance (all exact) and prints one pass line. The exhaustive criteria
//! share a single sweep of every rectangle with rows + cols <= 8, run once
//! and reused across tests.

use std::sync::OnceLock;

use schubert_curves::bench::staircase_bench;
use schubert_curves::enumerate::{
    enumerate_box_first, enumerate_genomic, many_components_family, staircase_family,
    SchubertProblem,
};
use schubert_curves::local::{local_esh, MoveKind};
use schubert_curves::monodromy::{
    check_conjecture, curve_invariants, orbit_decomposition, ConjectureReport, OrbitVerdict,
};
use schubert_curves::punctured::PuncturedTableau;
use schubert_curves::report;
use schubert_curves::sweep::{run_sweep, Check, SweepOutcome, SweepSpec};
use schubert_curves::{Partition, Rectangle};

const SWEEP_BOUND: usize = 8;

fn shared_sweep() -> &'static SweepOutcome {
    static SWEEP: OnceLock<SweepOutcome> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let spec = SweepSpec::new(SWEEP_BOUND, Check::ALL.to_vec()).expect("valid spec");
        run_sweep(&spec).expect("sweep runs")
    })
}

fn assert_check_clean(criterion: &str, check: Check) {
    let outcome = shared_sweep();
    let failures: Vec<_> = outcome
        .failures
        .iter()
        .filter(|f| f.check == check)
        .collect();
    assert!(
        failures.is_empty(),
        "criterion {criterion}: {} counterexamples, first: {} on {}\n{}",
        failures.len(),
        failures[0].detail,
        failures[0].problem,
        failures[0].tableau_rows.join("\n"),
    );
    println!(
        "criterion {criterion}: PASS ({} problems, {} tableaux, rows+cols <= {SWEEP_BOUND})",
        outcome.problems, outcome.tableaux
    );
}

fn problem(a: &[usize], b: &[usize], g: &[usize], rows: usize, cols: usize) -> SchubertProblem {
    SchubertProblem::new(
        Partition::new(a.to_vec()).unwrap(),
        Partition::new(b.to_vec()).unwrap(),
        Partition::new(g.to_vec()).unwrap(),
        Rectangle::new(rows, cols).unwrap(),
    )
    .unwrap()
}

#[test]
fn criterion_01_oracle_equivalence() {
    assert_check_clean("1 (local = oracle, exact)", Check::OracleEquivalence);
}

#[test]
fn criterion_02_worked_example() {
    let pt = PuncturedTableau::parse_text("......111\n...X1122\n...1223\n...334\n..44\n235", false)
        .unwrap();
    let (out, path) = local_esh(&pt).unwrap();
    assert_eq!(
        out.tableau().to_text(),
        "......111\n...11122\n...2223\n...33X\n..44\n345"
    );
    assert_eq!(path.transition_step, 3);
    let beta = pt.content();
    assert_eq!(beta, Partition::new(vec![6, 5, 4, 3, 1]).unwrap());
    // s + beta_s = 7 squares, both endpoints included.
    assert_eq!(path.cells.len(), 3 + beta.part(3));
    assert_eq!(path.cells.len(), 7);
    let default: Vec<(MoveKind, usize, bool)> = path
        .default_moves()
        .iter()
        .map(|m| (m.kind, m.index, m.is_movement()))
        .collect();
    assert_eq!(
        default,
        vec![
            (MoveKind::Vert, 1, true),
            (MoveKind::Pieri, 2, true),
            (MoveKind::Jump, 3, true),
            (MoveKind::Jump, 4, true),
            (MoveKind::Jump, 5, false),
        ]
    );
    let steps: Vec<(MoveKind, usize)> = path
        .moves
        .iter()
        .filter(|m| m.is_movement())
        .map(|m| (m.kind, m.index))
        .collect();
    assert_eq!(
        steps,
        vec![
            (MoveKind::Vert, 1),
            (MoveKind::Pieri, 2),
            (MoveKind::Horiz, 3),
            (MoveKind::CPieri, 4),
            (MoveKind::Horiz, 5),
            (MoveKind::CPieri, 6),
        ]
    );
    println!("criterion 2: PASS (worked example reproduced exactly)");
}

#[test]
fn criterion_03_golden_orbit_tables() {
    let big = problem(&[6, 5, 3, 1], &[7, 4, 3, 2], &[5, 5, 4, 2], 6, 8);
    let report = orbit_decomposition(&big).unwrap();
    assert_eq!(
        report.summary(),
        vec![(38, 52, 51), (23, 31, 28), (10, 9, 13)],
        "orbit sizes with phase-1/phase-2 genomic counts"
    );
    assert_eq!(report.tableaux.len(), 71);
    assert_eq!(enumerate_genomic(&big).unwrap().len(), 92);

    let small = problem(&[2, 2, 1], &[3, 1, 1], &[3, 2], 4, 4);
    let report = orbit_decomposition(&small).unwrap();
    assert_eq!(report.summary(), vec![(1, 0, 0), (1, 0, 0)]);
    assert_eq!(enumerate_genomic(&small).unwrap().len(), 0);
    println!("criterion 3: PASS (golden orbit tables, exact)");
}

#[test]
fn criterion_04_staircase_family() {
    for t in 3..=5 {
        let pr = staircase_family(t).unwrap();
        let inv = curve_invariants(&pr).unwrap();
        assert_eq!(inv.lr_count, 2 * t * (t - 1), "t = {t}");
        assert_eq!(inv.k_count, 3 * t * t - 5 * t + 1, "t = {t}");
        assert_eq!(inv.k_by_family[0], t * (t - 1), "t = {t}, family 1");
        assert_eq!(inv.k_by_family[1], (t - 1) * (t - 1), "t = {t}, family 2");
        let tail: usize = inv.k_by_family[2..].iter().sum();
        assert_eq!(tail, t * (t - 2), "t = {t}, families >= 3");
        assert_eq!(inv.eta, 1, "t = {t}: single orbit");
        assert_eq!(inv.genus, Some((t - 1) * (t - 2)), "t = {t}");
    }
    println!("criterion 4: PASS (staircase family t = 3, 4, 5, exact)");
}

#[test]
fn criterion_05_many_components_family() {
    for m in 2..=5 {
        let pr = many_components_family(m).unwrap();
        let report = orbit_decomposition(&pr).unwrap();
        assert_eq!(report.tableaux.len(), m - 1, "m = {m}");
        let identity: Vec<usize> = (0..report.tableaux.len()).collect();
        assert_eq!(report.permutation, identity, "m = {m}: identity monodromy");
        assert_eq!(enumerate_genomic(&pr).unwrap().len(), 0, "m = {m}");
    }
    println!("criterion 5: PASS (many-components family m = 2..5, exact)");
}

#[test]
fn criterion_06_reverse_roundtrip() {
    assert_check_clean("6 (reverse roundtrip)", Check::ReverseRoundtrip);
}

#[test]
fn criterion_07_intermediate_ballotness() {
    assert_check_clean("7 (intermediate ballotness)", Check::Ballotness);
}

#[test]
fn criterion_08_phi_bijections() {
    assert_check_clean(
        "8 (phase bijections onto genomic tableaux)",
        Check::PhiBijections,
    );
}

#[test]
fn criterion_09_omega_factorization() {
    assert_check_clean(
        "9 (factorization and per-family orbit counts)",
        Check::OmegaI,
    );
}

#[test]
fn criterion_10_fixed_points_and_antidiagonal() {
    assert_check_clean(
        "10 (fixed-point trichotomy, antidiagonal symmetry)",
        Check::Antidiagonal,
    );
}

#[test]
fn criterion_11_orbit_bound_checker() {
    assert_check_clean(
        "11 (orbit-by-orbit bound, no counterexample)",
        Check::Conjecture,
    );
    // The checker must be able to spell out a counterexample if one ever
    // appeared: a hand-built failing verdict serializes visibly.
    let fake = ConjectureReport {
        problem: staircase_family(3).unwrap(),
        verdicts: vec![OrbitVerdict {
            size: 4,
            k1: 1,
            k2: 5,
        }],
    };
    assert!(!fake.all_pass());
    let doc = report::conjecture(&fake);
    let json = serde_json::to_string(&doc).unwrap();
    assert!(json.contains("counterexamples"));
    assert_eq!(doc.counterexamples.len(), 1);
    assert_eq!(doc.counterexamples[0].size, 4);
}

#[test]
fn criterion_12_complexity_counters() {
    // The move bound on every input is enforced inside the shared sweep
    // (Ballotness); the benchmark shows the oracle's slide work growing
    // past the local move count as the inner shape grows.
    assert_check_clean(
        "12a (move count bounded by b on every input)",
        Check::Ballotness,
    );
    let rows = staircase_bench(3, 7).unwrap();
    for r in &rows {
        assert!(
            r.local_moves_max <= r.b,
            "t = {}: {} moves > bound {}",
            r.t,
            r.local_moves_max,
            r.b
        );
    }
    for w in rows.windows(2) {
        assert!(
            w[1].ratio > w[0].ratio,
            "oracle/local ratio must grow with t: {} then {}",
            w[0].ratio,
            w[1].ratio
        );
        assert!(
            w[1].alpha_size > w[0].alpha_size,
            "the inner shape grows along the family"
        );
    }
    println!(
        "criterion 12: PASS (ratios {:?} increase over t = 3..7)",
        rows.iter().map(|r| (r.t, r.ratio)).collect::<Vec<_>>()
    );

    // Verification that the full sweep saw the expected scale.
    let outcome = shared_sweep();
    assert!(outcome.problems > 20_000);
    assert!(outcome.tableaux > 19_000);
}

#[test]
fn criterion_counts_overview() {
    // One line summarizing the gate for humans scanning test output.
    let pr = enumerate_box_first(&staircase_family(3).unwrap()).unwrap();
    assert_eq!(pr.len(), 12);
    let conj = check_conjecture(&staircase_family(3).unwrap()).unwrap();
    assert!(conj.all_pass());
    println!(
        "acceptance: sweep bound rows+cols <= {SWEEP_BOUND}; all criteria exact, no tolerances"
    );
}
