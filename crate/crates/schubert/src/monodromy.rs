//! The monodromy operator on the canonical punctured tableau set: composing
//! the local algorithm with the jeu de taquin slide back, decomposing the
//! resulting permutation into orbits, and attaching to every non-adjacent
//! move of the marked square the genomic tableau it generates.

use std::collections::HashMap;

use crate::enumerate::{
    enumerate_box_first, enumerate_genomic, genomic_family_counts, GenomicTableau, SchubertProblem,
};
use crate::error::{Error, Result};
use crate::local::{
    local_esh, local_esh_with, step_ell, step_sh, step_sh_inverse, EvacuShufflePath, Move, MoveKind,
};
use crate::punctured::PuncturedTableau;
use crate::skew::SkewTableau;

/// One full turn of the monodromy: the local algorithm forward, then the
/// jeu de taquin slide back to first position.
pub fn omega(pt: &PuncturedTableau) -> Result<PuncturedTableau> {
    let (out, _) = local_esh(pt)?;
    Ok(out.sh()?.0)
}

/// The genomic tableau generated by a regular Phase 1 jump: the filling
/// after the move with the marked square replaced by the strip entry, the
/// move's endpoints marked.
pub fn phi1(mv: &Move, after: &SkewTableau) -> Result<GenomicTableau> {
    if mv.kind != MoveKind::Pieri {
        return Err(Error::InvalidArgument(format!(
            "phi1 applies to regular Phase 1 jumps, got {:?}",
            mv.kind
        )));
    }
    genomic_from_move(mv, after)
}

/// The genomic tableau generated by a conjugate jump inside Phase 2.
pub fn phi2(mv: &Move, after: &SkewTableau) -> Result<GenomicTableau> {
    if mv.kind != MoveKind::CPieri {
        return Err(Error::InvalidArgument(format!(
            "phi2 applies to conjugate Phase 2 jumps, got {:?}",
            mv.kind
        )));
    }
    genomic_from_move(mv, after)
}

fn genomic_from_move(mv: &Move, after: &SkewTableau) -> Result<GenomicTableau> {
    if mv.from.is_adjacent(mv.to) {
        return Err(Error::InvalidArgument(format!(
            "adjacent move {} -> {} generates no genomic tableau",
            mv.from, mv.to
        )));
    }
    let mut base = after.clone();
    base.set(mv.to, mv.strip);
    GenomicTableau::new(base, (mv.from, mv.to), mv.strip)
}

/// A full forward run with the genomic tableaux its gaps generate.
#[derive(Clone, Debug)]
pub struct EshRun {
    pub out: PuncturedTableau,
    pub path: EvacuShufflePath,
    pub phase1: Vec<GenomicTableau>,
    pub phase2: Vec<GenomicTableau>,
}

/// Run the local algorithm, collecting the genomic tableau of every
/// non-adjacent move.
pub fn esh_run(pt: &PuncturedTableau) -> Result<EshRun> {
    let mut phase1 = Vec::new();
    let mut phase2 = Vec::new();
    let mut failure: Option<Error> = None;
    let (out, path) = local_esh_with(pt, &mut |mv, after, _| {
        if failure.is_some() {
            return;
        }
        let res = match mv.kind {
            MoveKind::Pieri => phi1(mv, after).map(|g| phase1.push(g)),
            MoveKind::CPieri => phi2(mv, after).map(|g| phase2.push(g)),
            _ => Ok(()),
        };
        if let Err(e) = res {
            failure = Some(e);
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(EshRun {
        out,
        path,
        phase1,
        phase2,
    })
}

/// One orbit of the monodromy with the genomic tableaux generated along it.
#[derive(Clone, Debug)]
pub struct OrbitData {
    pub indices: Vec<usize>,
    pub k1: Vec<GenomicTableau>,
    pub k2: Vec<GenomicTableau>,
}

impl OrbitData {
    pub fn size(&self) -> usize {
        self.indices.len()
    }
}

/// The canonical tableau list with the permutation the monodromy induces on
/// it and its cycle structure.
#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub problem: SchubertProblem,
    pub tableaux: Vec<PuncturedTableau>,
    pub permutation: Vec<usize>,
    pub orbits: Vec<OrbitData>,
    pub fixed_points: Vec<usize>,
}

impl OrbitReport {
    /// `(orbit size, phase-1 genomic count, phase-2 genomic count)` rows,
    /// largest orbits first.
    pub fn summary(&self) -> Vec<(usize, usize, usize)> {
        let mut rows: Vec<(usize, usize, usize)> = self
            .orbits
            .iter()
            .map(|o| (o.size(), o.k1.len(), o.k2.len()))
            .collect();
        rows.sort_by(|a, b| b.cmp(a));
        rows
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.orbits.iter().map(|o| o.indices.clone()).collect()
    }

    /// `N - #orbits`: the least number of transpositions multiplying to the
    /// permutation.
    pub fn reflection_length(&self) -> usize {
        self.tableaux.len() - self.orbits.len()
    }

    /// Parity of the permutation, 0 or 1.
    pub fn sign(&self) -> usize {
        self.reflection_length() % 2
    }
}

/// Decompose the monodromy on the canonical set, attaching the genomic
/// tableaux generated in each phase along every orbit.
pub fn orbit_decomposition(problem: &SchubertProblem) -> Result<OrbitReport> {
    let tableaux = enumerate_box_first(problem)?;
    let index: HashMap<Vec<usize>, usize> = tableaux
        .iter()
        .enumerate()
        .map(|(i, t)| (t.key(), i))
        .collect();
    let mut permutation = Vec::with_capacity(tableaux.len());
    let mut runs = Vec::with_capacity(tableaux.len());
    for pt in &tableaux {
        let run = esh_run(pt)?;
        let image = run.out.sh()?.0;
        let target = *index
            .get(&image.key())
            .ok_or_else(|| Error::Internal("monodromy left the canonical tableau set".into()))?;
        permutation.push(target);
        runs.push(run);
    }
    let mut hit = vec![false; permutation.len()];
    for &j in &permutation {
        if hit[j] {
            return Err(Error::Internal(
                "the monodromy map is not a bijection".into(),
            ));
        }
        hit[j] = true;
    }
    let mut seen = vec![false; tableaux.len()];
    let mut orbits = Vec::new();
    for start in 0..tableaux.len() {
        if seen[start] {
            continue;
        }
        let mut indices = Vec::new();
        let mut k1 = Vec::new();
        let mut k2 = Vec::new();
        let mut cur = start;
        loop {
            seen[cur] = true;
            indices.push(cur);
            k1.extend(runs[cur].phase1.iter().cloned());
            k2.extend(runs[cur].phase2.iter().cloned());
            cur = permutation[cur];
            if cur == start {
                break;
            }
        }
        k1.sort();
        k2.sort();
        orbits.push(OrbitData { indices, k1, k2 });
    }
    let fixed_points = orbits
        .iter()
        .filter(|o| o.size() == 1)
        .map(|o| o.indices[0])
        .collect();
    Ok(OrbitReport {
        problem: problem.clone(),
        tableaux,
        permutation,
        orbits,
        fixed_points,
    })
}

/// The conjugated single-step operator: undo the strip slides below `i`,
/// apply the `i`-th local step followed by its strip slide, and redo the
/// slides.
pub fn omega_i(i: usize, pt: &PuncturedTableau) -> Result<PuncturedTableau> {
    let t = pt.strips();
    if i < 1 || i > t {
        return Err(Error::InvalidArgument(format!(
            "factor index {i} out of 1..={t}"
        )));
    }
    let mut x = pt.clone();
    for j in 1..i {
        x = step_sh_inverse(j, &x)?;
    }
    let (x, _) = step_ell(i, &x)?;
    let mut x = step_sh(i, &x)?;
    for j in (1..i).rev() {
        x = step_sh(j, &x)?;
    }
    Ok(x)
}

/// Orbit sizes of a permutation given as an index map.
pub fn cycle_sizes(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut sizes = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut size = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            size += 1;
            cur = perm[cur];
        }
        sizes.push(size);
    }
    sizes
}

/// The permutation induced by one factor on the canonical set.
pub fn omega_i_permutation(problem: &SchubertProblem, i: usize) -> Result<Vec<usize>> {
    let tableaux = enumerate_box_first(problem)?;
    let index: HashMap<Vec<usize>, usize> = tableaux
        .iter()
        .enumerate()
        .map(|(k, t)| (t.key(), k))
        .collect();
    tableaux
        .iter()
        .map(|pt| {
            let image = omega_i(i, pt)?;
            index
                .get(&image.key())
                .copied()
                .ok_or_else(|| Error::Internal("factor left the canonical set".into()))
        })
        .collect()
}

/// The three equivalent fixed-point conditions, computed separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedPointFlags {
    pub fixed: bool,
    pub path_connected: bool,
    pub no_genomic: bool,
}

impl FixedPointFlags {
    pub fn agree(&self) -> bool {
        self.fixed == self.path_connected && self.fixed == self.no_genomic
    }
}

pub fn is_fixed_point(pt: &PuncturedTableau) -> Result<FixedPointFlags> {
    let run = esh_run(pt)?;
    let fixed = omega(pt)? == *pt;
    Ok(FixedPointFlags {
        fixed,
        path_connected: run.path.is_connected(),
        no_genomic: run.phase1.is_empty() && run.phase2.is_empty(),
    })
}

/// Verdict for one orbit of the orbit-by-orbit bound.
#[derive(Clone, Debug)]
pub struct OrbitVerdict {
    pub size: usize,
    pub k1: usize,
    pub k2: usize,
}

impl OrbitVerdict {
    /// `|K_1| >= |orbit| - 1`.
    pub fn phase1_ok(&self) -> bool {
        self.k1 + 1 >= self.size
    }

    /// `|K_2| >= |orbit| - 1`.
    pub fn phase2_ok(&self) -> bool {
        self.k2 + 1 >= self.size
    }

    /// The weaker combined bound, strict away from fixed points.
    pub fn weak_ok(&self) -> bool {
        if self.size == 1 {
            self.k1 + self.k2 + 1 >= self.size
        } else {
            self.k1 + self.k2 + 1 > self.size
        }
    }

    pub fn pass(&self) -> bool {
        self.phase1_ok() && self.phase2_ok() && self.weak_ok()
    }
}

/// Per-orbit verdicts of the orbit-by-orbit bound for a whole problem.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub problem: SchubertProblem,
    pub verdicts: Vec<OrbitVerdict>,
}

impl ConjectureReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(OrbitVerdict::pass)
    }

    pub fn counterexamples(&self) -> Vec<&OrbitVerdict> {
        self.verdicts.iter().filter(|v| !v.pass()).collect()
    }
}

pub fn check_conjecture(problem: &SchubertProblem) -> Result<ConjectureReport> {
    let report = orbit_decomposition(problem)?;
    let verdicts = report
        .orbits
        .iter()
        .map(|o| OrbitVerdict {
            size: o.size(),
            k1: o.k1.len(),
            k2: o.k2.len(),
        })
        .collect();
    Ok(ConjectureReport {
        problem: problem.clone(),
        verdicts,
    })
}

/// Numerical invariants of the curve attached to the problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInvariants {
    /// Size of the canonical tableau set (the degree of the covering).
    pub lr_count: usize,
    /// Total number of genomic tableaux.
    pub k_count: usize,
    /// Genomic counts per repeated family.
    pub k_by_family: Vec<usize>,
    /// `lr_count - k_count`, the holomorphic Euler characteristic.
    pub chi: i64,
    /// Number of monodromy orbits (real connected components).
    pub eta: usize,
    /// `lr_count - eta`.
    pub rlength: usize,
    /// Parity of the monodromy permutation, 0 or 1.
    pub sign: usize,
    /// Arithmetic genus, only when the curve is connected (`eta == 1`).
    pub genus: Option<usize>,
    /// Half the ramification count of the covering, conditional on
    /// smoothness; numerically equal to `k_count`.
    pub half_ramification: usize,
}

pub fn curve_invariants(problem: &SchubertProblem) -> Result<CurveInvariants> {
    let report = orbit_decomposition(problem)?;
    let k_by_family = genomic_family_counts(problem)?;
    let k_count: usize = k_by_family.iter().sum();
    let lr_count = report.tableaux.len();
    let eta = report.orbits.len();
    let rlength = report.reflection_length();
    let sign = report.sign();
    if k_count < rlength || k_count % 2 != sign {
        return Err(Error::Internal(format!(
            "genomic count {k_count} breaks the reflection-length bounds for {problem}"
        )));
    }
    if problem.beta.len() == 2 {
        for o in &report.orbits {
            if o.k1.len() + 1 < o.size() {
                return Err(Error::Internal(format!(
                    "two-row orbit bound failed on an orbit of size {} for {problem}",
                    o.size()
                )));
            }
        }
    }
    let genus = (eta == 1).then(|| k_count + 1 - lr_count);
    Ok(CurveInvariants {
        lr_count,
        k_count,
        k_by_family,
        chi: lr_count as i64 - k_count as i64,
        eta,
        rlength,
        sign,
        genus,
        half_ramification: k_count,
    })
}

/// Sanity check used by sweeps: the genomic tableaux double as the total
/// count from either phase.
pub fn total_genomic(problem: &SchubertProblem) -> Result<usize> {
    Ok(enumerate_genomic(problem)?.len())
}
