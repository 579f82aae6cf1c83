//! Folding maps on `W / W_I` and (strong) percolating sequences.
//!
//! For a reflection `t` the cosets split into `L` (`t` lengthens the
//! minimal representative), `R` (shortens) and `F` (fixed). The left fold
//! `t⁺` sends `R` to `L` through `t` and fixes the rest; the right fold
//! `t⁻` sends `L` to `R`. A fold step replaces `J` by the preimage
//! `J^±(t) = {c : t^±(c) ∈ J}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cosets::CosetTable;
use crate::error::{Error, Result};
use crate::graph::Side;
use crate::group::{CoxeterGroup, Reflection};
use crate::incidence::classify_table;
use crate::system::GenSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// `t⁺`: collapse `R` onto `L`.
    #[serde(rename = "+")]
    Left,
    /// `t⁻`: collapse `L` onto `R`.
    #[serde(rename = "-")]
    Right,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Direction::Left => "+",
            Direction::Right => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoldStep {
    pub reflection: Reflection,
    pub direction: Direction,
}

/// A subset of the cosets of one table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetSet(Vec<bool>);

impl CosetSet {
    pub fn empty(n: usize) -> Self {
        CosetSet(vec![false; n])
    }

    pub fn full(n: usize) -> Self {
        CosetSet(vec![true; n])
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut s = CosetSet::empty(n);
        for &i in indices {
            s.0[i] = true;
        }
        s
    }

    /// `U_L`: cosets whose minimal representative has length at most `level`.
    pub fn up_to_depth(table: &CosetTable, level: usize) -> Self {
        CosetSet((0..table.len()).map(|c| table.depth(c) <= level).collect())
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, c: usize) -> bool {
        self.0[c]
    }

    pub fn insert(&mut self, c: usize) {
        self.0[c] = true;
    }

    pub fn count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_full(&self) -> bool {
        self.0.iter().all(|&b| b)
    }

    pub fn is_subset(&self, other: &CosetSet) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&c| self.0[c]).collect()
    }

    pub fn map(&self, perm: &[usize]) -> CosetSet {
        let mut out = CosetSet::empty(self.0.len());
        for c in self.indices() {
            out.0[perm[c]] = true;
        }
        out
    }

    /// Meets both `L ∪ F` and `R ∪ F`.
    pub fn straddles(&self, sides: &[Side]) -> bool {
        let mut left = false;
        let mut right = false;
        for c in self.indices() {
            match sides[c] {
                Side::F => return true,
                Side::L => left = true,
                Side::R => right = true,
            }
        }
        left && right
    }
}

/// The permutation and side labels of a reflection on one table.
#[derive(Debug, Clone)]
pub struct FoldAction {
    pub perm: Vec<usize>,
    pub sides: Vec<Side>,
}

impl FoldAction {
    pub fn new(table: &CosetTable, word: &[usize]) -> Self {
        FoldAction {
            perm: table.permutation(word),
            sides: classify_table(table, word),
        }
    }

    /// `t^±(c)`.
    pub fn image(&self, c: usize, dir: Direction) -> usize {
        let moved = match dir {
            Direction::Left => Side::R,
            Direction::Right => Side::L,
        };
        if self.sides[c] == moved {
            self.perm[c]
        } else {
            c
        }
    }

    /// `J^±(t)`.
    pub fn fold(&self, set: &CosetSet, dir: Direction) -> CosetSet {
        CosetSet(
            (0..set.universe())
                .map(|c| set.contains(self.image(c, dir)))
                .collect(),
        )
    }
}

pub fn fold(table: &CosetTable, set: &CosetSet, step: &FoldStep) -> CosetSet {
    FoldAction::new(table, step.reflection.word()).fold(set, step.direction)
}

/// Whether `set` is downward closed in Bruhat order on minimal coset
/// representatives. Refuses with `GUARD` when `|W^I|^2 > budget`.
pub fn is_stack(
    group: &CoxeterGroup,
    table: &CosetTable,
    set: &CosetSet,
    budget: u128,
) -> Result<bool> {
    let n = table.len();
    if (n as u128) * (n as u128) > budget {
        return Err(Error::Guard(format!(
            "{n}^2 Bruhat comparisons exceed budget {budget}"
        )));
    }
    let reps: Vec<usize> = (0..n)
        .map(|c| group.min_rep(table, c))
        .collect::<Result<_>>()?;
    for c in set.indices() {
        for d in 0..n {
            if !set.contains(d) && group.bruhat_leq(reps[d], reps[c]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum CertificateKind {
    Percolating,
    Strong,
    VertexPercolating,
    EdgePercolating,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertificateKind::Percolating => "percolating",
            CertificateKind::Strong => "strong",
            CertificateKind::VertexPercolating => "vertexPercolating",
            CertificateKind::EdgePercolating => "edgePercolating",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Failure {
    BadStart,
    StepMismatch,
    StrongnessViolation,
    EndNotFull,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Failure::BadStart => "BAD_START",
            Failure::StepMismatch => "STEP_MISMATCH",
            Failure::StrongnessViolation => "STRONGNESS_VIOLATION",
            Failure::EndNotFull => "END_NOT_FULL",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub failure: Option<Failure>,
    /// Index of the offending step, when the failure is tied to one.
    pub step: Option<usize>,
}

impl Verdict {
    pub const PASS: Verdict = Verdict {
        failure: None,
        step: None,
    };

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn fail(failure: Failure, step: Option<usize>) -> Verdict {
        Verdict {
            failure: Some(failure),
            step,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PercolationCertificate {
    pub system: String,
    pub subset: GenSet,
    pub kind: CertificateKind,
    pub start: Vec<usize>,
    pub steps: Vec<FoldStep>,
    /// `J_0, …, J_N` when recorded.
    pub trace: Option<Vec<Vec<usize>>>,
    /// Word `ψ` the certificate was translated by; a strong certificate's
    /// start pair must contain `ψ W_I`.
    pub translation: Vec<usize>,
    pub verdict: Verdict,
}

impl PercolationCertificate {
    fn replay(table: &CosetTable, start: &CosetSet, steps: &[FoldStep]) -> Vec<CosetSet> {
        let mut sets = vec![start.clone()];
        for step in steps {
            let next = fold(table, sets.last().expect("nonempty"), step);
            sets.push(next);
        }
        sets
    }

    /// Replays the steps and checks, in order: start shape, step validity
    /// (reflections, recorded trace), strongness, and the end set.
    pub fn verify(&self, group: &CoxeterGroup, table: &CosetTable) -> Verdict {
        let n = table.len();
        if table.subgroup() != self.subset || self.start.iter().any(|&c| c >= n) {
            return Verdict::fail(Failure::BadStart, None);
        }
        let mut start_sorted = self.start.clone();
        start_sorted.sort_unstable();
        start_sorted.dedup();
        let anchor = table.act_word(0, &self.translation);
        let start_ok = match self.kind {
            CertificateKind::Strong => start_sorted.len() == 2 && start_sorted.contains(&anchor),
            _ => start_sorted.len() == 1,
        };
        if !start_ok {
            return Verdict::fail(Failure::BadStart, None);
        }
        let mut current = CosetSet::from_indices(n, &start_sorted);
        if let Some(trace) = &self.trace {
            if trace.len() != self.steps.len() + 1 || trace[0] != start_sorted {
                return Verdict::fail(Failure::StepMismatch, Some(0));
            }
        }
        for (i, step) in self.steps.iter().enumerate() {
            if group
                .reflection_from_word(step.reflection.word())
                .map(|t| t.index())
                != Ok(step.reflection.index())
            {
                return Verdict::fail(Failure::StepMismatch, Some(i));
            }
            let action = FoldAction::new(table, step.reflection.word());
            if self.kind == CertificateKind::Strong && !current.straddles(&action.sides) {
                return Verdict::fail(Failure::StrongnessViolation, Some(i));
            }
            current = action.fold(&current, step.direction);
            if let Some(trace) = &self.trace {
                if trace[i + 1] != current.indices() {
                    return Verdict::fail(Failure::StepMismatch, Some(i));
                }
            }
        }
        if !current.is_full() {
            return Verdict::fail(Failure::EndNotFull, None);
        }
        Verdict::PASS
    }

    /// Recomputes and stores the verdict.
    pub fn reverify(&mut self, group: &CoxeterGroup, table: &CosetTable) -> Verdict {
        self.verdict = self.verify(group, table);
        self.verdict
    }

    pub fn end_set(&self, table: &CosetTable) -> CosetSet {
        let start = CosetSet::from_indices(table.len(), &self.start);
        PercolationCertificate::replay(table, &start, &self.steps)
            .pop()
            .expect("nonempty")
    }

    pub fn to_json(&self, group: &CoxeterGroup) -> serde_json::Value {
        let system = group.system();
        let steps: Vec<_> = self
            .steps
            .iter()
            .map(|s| {
                serde_json::json!({
                    "t": system.word_labels(s.reflection.word()),
                    "dir": s.direction.symbol(),
                })
            })
            .collect();
        let mut v = serde_json::json!({
            "system": self.system,
            "I": system.subset_labels(self.subset),
            "kind": self.kind.to_string(),
            "start": self.start,
            "steps": steps,
            "verified": self.verdict.passed(),
            "failure": self.verdict.failure.map(|f| f.to_string()),
        });
        if !self.translation.is_empty() {
            v["translation"] = serde_json::json!(system.word_labels(&self.translation));
        }
        v
    }

    /// Parses the JSON form against an enumerated group. The stored
    /// verdict is recomputed, not trusted.
    pub fn from_json(group: &CoxeterGroup, value: &serde_json::Value) -> Result<Self> {
        let system = group.system();
        let parse_err = |m: &str| Error::Parse(m.to_string());
        let labels = |v: &serde_json::Value| -> Result<Vec<usize>> {
            v.as_array()
                .ok_or_else(|| parse_err("expected label array"))?
                .iter()
                .map(|x| {
                    system.index_of(
                        x.as_str()
                            .ok_or_else(|| parse_err("label must be a string"))?,
                    )
                })
                .collect()
        };
        let subset = GenSet::from_indices(labels(&value["I"])?);
        let kind: CertificateKind = serde_json::from_value(value["kind"].clone())
            .map_err(|e| Error::Parse(e.to_string()))?;
        let start: Vec<usize> = serde_json::from_value(value["start"].clone())
            .map_err(|e| Error::Parse(e.to_string()))?;
        let mut steps = Vec::new();
        for s in value["steps"]
            .as_array()
            .ok_or_else(|| parse_err("steps must be an array"))?
        {
            let word = labels(&s["t"])?;
            let direction: Direction = serde_json::from_value(s["dir"].clone())
                .map_err(|e| Error::Parse(e.to_string()))?;
            steps.push(FoldStep {
                reflection: group.reflection_from_word(&word)?,
                direction,
            });
        }
        let translation = match value.get("translation") {
            Some(v) if !v.is_null() => labels(v)?,
            _ => vec![],
        };
        let table = group.quotient(subset)?;
        let mut cert = PercolationCertificate {
            system: value["system"]
                .as_str()
                .unwrap_or(system.name())
                .to_string(),
            subset,
            kind,
            start,
            steps,
            trace: None,
            translation,
            verdict: Verdict::PASS,
        };
        cert.reverify(group, &table);
        Ok(cert)
    }
}

fn simple_step(group: &CoxeterGroup, gen: usize, direction: Direction) -> FoldStep {
    FoldStep {
        reflection: group
            .reflection_from_word(&[gen])
            .expect("generators are reflections"),
        direction,
    }
}

/// Generators `s_i` for the level-`level` induction step: one per coset of
/// depth `level + 1`, in index order, each the first letter of that
/// coset's canonical word.
pub fn induction_generators(table: &CosetTable, level: usize) -> Vec<usize> {
    (0..table.len())
        .filter(|&c| table.depth(c) == level + 1)
        .map(|c| table.parent_generator(c).expect("nonzero depth"))
        .collect()
}

fn finish(
    group: &CoxeterGroup,
    table: &CosetTable,
    kind: CertificateKind,
    start: Vec<usize>,
    steps: Vec<FoldStep>,
) -> PercolationCertificate {
    let start_set = CosetSet::from_indices(table.len(), &start);
    let trace = PercolationCertificate::replay(table, &start_set, &steps)
        .iter()
        .map(CosetSet::indices)
        .collect();
    let mut cert = PercolationCertificate {
        system: group.system().name().to_string(),
        subset: table.subgroup(),
        kind,
        start,
        steps,
        trace: Some(trace),
        translation: vec![],
        verdict: Verdict::PASS,
    };
    cert.reverify(group, table);
    cert
}

/// Percolating sequence from `{W_I}` by left folds along simple
/// reflections, level by level.
pub fn build_percolating_sequence(
    group: &CoxeterGroup,
    table: &CosetTable,
) -> PercolationCertificate {
    build_percolating_kind(group, table, CertificateKind::Percolating)
}

pub fn build_percolating_kind(
    group: &CoxeterGroup,
    table: &CosetTable,
    kind: CertificateKind,
) -> PercolationCertificate {
    let steps = (0..table.max_depth())
        .flat_map(|level| induction_generators(table, level))
        .map(|g| simple_step(group, g, Direction::Left))
        .collect();
    finish(group, table, kind, vec![0], steps)
}

/// Strong percolating sequence from `{W_I, w W_I}` for `I = S ∖ {s}`.
///
/// With `w = s_1 … s_ℓ` the canonical word and `k` the first position of
/// `s`, the sequence right-folds along `s_1 … s_{k-1}`, left-folds along
/// `s_k = s`, and then runs the level induction from `L = 1`.
pub fn build_strong_percolating_sequence(
    group: &CoxeterGroup,
    table: &CosetTable,
    start: usize,
) -> Result<PercolationCertificate> {
    let rank = group.rank();
    let subset = table.subgroup();
    if subset.len() + 1 != rank {
        return Err(Error::BadSubset(format!(
            "need |I| = |S| - 1, got |I| = {} with |S| = {rank}",
            subset.len()
        )));
    }
    if start == 0 || start >= table.len() {
        return Err(Error::BadStart(format!(
            "coset {start} is not a nonidentity coset"
        )));
    }
    let s = group
        .system()
        .all()
        .difference(subset)
        .iter()
        .next()
        .expect("one generator");
    let word = table.min_rep_word(start)?;
    let k = word
        .iter()
        .position(|&g| g == s)
        .expect("minimal representative ends in s");
    let mut steps: Vec<FoldStep> = word[..k]
        .iter()
        .map(|&g| simple_step(group, g, Direction::Right))
        .collect();
    steps.push(simple_step(group, s, Direction::Left));
    steps.extend(
        (1..table.max_depth())
            .flat_map(|level| induction_generators(table, level))
            .map(|g| simple_step(group, g, Direction::Left)),
    );
    Ok(finish(
        group,
        table,
        CertificateKind::Strong,
        vec![0, start],
        steps,
    ))
}

/// Translates a certificate by the element spelled by `psi`: the start
/// set moves to `ψ J_0`, and each reflection `t` becomes `ψ t ψ⁻¹`, with
/// the fold direction chosen so that the transported sides `ψ L_t`,
/// `ψ R_t` are used.
pub fn translate_certificate(
    group: &CoxeterGroup,
    table: &CosetTable,
    cert: &PercolationCertificate,
    psi: &[usize],
) -> Result<PercolationCertificate> {
    let psi_idx = group.from_word(psi).index;
    let psi_perm = table.permutation(psi);
    let mut steps = Vec::with_capacity(cert.steps.len());
    for step in &cert.steps {
        let conj = group.conjugate(psi_idx, step.reflection.index());
        let reflection = group.reflection(conj).ok_or_else(|| {
            Error::BadInput("conjugate of a reflection is not a reflection".into())
        })?;
        let old = classify_table(table, step.reflection.word());
        let new = classify_table(table, reflection.word());
        let mut same = true;
        let mut flipped = true;
        for c in 0..table.len() {
            let moved = new[psi_perm[c]];
            same &= moved == old[c];
            flipped &= moved == old[c].flipped();
        }
        let direction = if same {
            step.direction
        } else if flipped {
            step.direction.flipped()
        } else {
            return Err(Error::BadInput(
                "sides do not transport under translation".into(),
            ));
        };
        steps.push(FoldStep {
            reflection,
            direction,
        });
    }
    let mut start: Vec<usize> = cert.start.iter().map(|&c| psi_perm[c]).collect();
    start.sort_unstable();
    let mut translation = psi.to_vec();
    translation.extend_from_slice(&cert.translation);
    let translation = group.from_word(&translation).word;
    let trace = cert.trace.as_ref().map(|tr| {
        tr.iter()
            .map(|set| {
                let mut v: Vec<usize> = set.iter().map(|&c| psi_perm[c]).collect();
                v.sort_unstable();
                v
            })
            .collect()
    });
    let mut out = PercolationCertificate {
        system: cert.system.clone(),
        subset: cert.subset,
        kind: cert.kind,
        start,
        steps,
        trace,
        translation,
        verdict: Verdict::PASS,
    };
    out.reverify(group, table);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionVerdict {
    pub checked: usize,
    /// `(w, t)` element indices violating `ℓ((tw)^I) > ℓ(w^I)`.
    pub counterexample: Option<(usize, usize)>,
}

impl ObstructionVerdict {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `ℓ((tw)^I) > ℓ(w^I)` for every `w ∈ W_{I ∪ {s}}` and every
/// reflection `t` whose support contains `s'`: every set reachable from
/// `{W_I, s W_I}` before `s'` is used lies in `L_t`, so no strong step
/// along `t` is possible.
pub fn obstruction_check(
    group: &CoxeterGroup,
    table: &CosetTable,
    s: usize,
    s_prime: usize,
) -> Result<ObstructionVerdict> {
    let subset = table.subgroup();
    if subset.contains(s) || subset.contains(s_prime) || s == s_prime {
        return Err(Error::BadSubset(
            "s and s' must be distinct and outside I".into(),
        ));
    }
    if s.max(s_prime) >= group.rank() {
        return Err(Error::BadIndex(s.max(s_prime)));
    }
    let elems = group.parabolic_elements(subset.union(GenSet::single(s)));
    let reflections: Vec<Reflection> = group
        .reflections()
        .into_iter()
        .filter(|t| t.support.contains(s_prime))
        .collect();
    let mut checked = 0;
    for &w in &elems {
        let cw = group.project(table, w);
        for t in &reflections {
            checked += 1;
            let tw = table.act_word(cw, t.word());
            if table.depth(tw) <= table.depth(cw) {
                return Ok(ObstructionVerdict {
                    checked,
                    counterexample: Some((w, t.index())),
                });
            }
        }
    }
    Ok(ObstructionVerdict {
        checked,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(name: &str, sub: &[usize]) -> (CoxeterGroup, CosetTable) {
        let g = CoxeterGroup::builtin(name).unwrap();
        let t = g
            .quotient(GenSet::from_indices(sub.iter().copied()))
            .unwrap();
        (g, t)
    }

    fn step(g: &CoxeterGroup, word: &[usize], direction: Direction) -> FoldStep {
        FoldStep {
            reflection: g.reflection_from_word(word).unwrap(),
            direction,
        }
    }

    #[test]
    fn fold_examples() {
        let (g, t) = setup("A2", &[0]);
        let j = CosetSet::from_indices(3, &[0]);
        let j1 = fold(&t, &j, &step(&g, &[1], Direction::Left));
        assert_eq!(j1.indices(), vec![0, 1]);
        let j2 = fold(&t, &j1, &step(&g, &[0], Direction::Left));
        assert!(j2.is_full());
        let full = CosetSet::full(3);
        for r in g.reflections() {
            for d in [Direction::Left, Direction::Right] {
                let st = FoldStep {
                    reflection: r.clone(),
                    direction: d,
                };
                assert!(fold(&t, &full, &st).is_full());
            }
        }
    }

    #[test]
    fn stack_examples() {
        let (g, t) = setup("A2", &[0]);
        for level in 0..=2 {
            assert!(is_stack(&g, &t, &CosetSet::up_to_depth(&t, level), 1000).unwrap());
        }
        assert!(!is_stack(&g, &t, &CosetSet::from_indices(3, &[1]), 1000).unwrap());
        assert!(is_stack(&g, &t, &CosetSet::empty(3), 1000).unwrap());
        assert_eq!(
            is_stack(&g, &t, &CosetSet::empty(3), 4).unwrap_err().code(),
            "GUARD"
        );
    }

    #[test]
    fn percolating_a2() {
        let (g, t) = setup("A2", &[0]);
        let cert = build_percolating_sequence(&g, &t);
        let words: Vec<_> = cert
            .steps
            .iter()
            .map(|s| (s.reflection.word().to_vec(), s.direction))
            .collect();
        assert_eq!(
            words,
            vec![(vec![1], Direction::Left), (vec![0], Direction::Left)]
        );
        assert!(cert.verdict.passed());
        let (g, t) = setup("A2", &[0, 1]);
        let cert = build_percolating_sequence(&g, &t);
        assert!(cert.steps.is_empty() && cert.verdict.passed());
        let (g, t) = setup("A2", &[]);
        assert!(build_percolating_sequence(&g, &t).verdict.passed());
    }

    #[test]
    fn strong_a2() {
        let (g, t) = setup("A2", &[0]);
        let cert = build_strong_percolating_sequence(&g, &t, 1).unwrap();
        let words: Vec<_> = cert
            .steps
            .iter()
            .map(|s| (s.reflection.word().to_vec(), s.direction))
            .collect();
        assert_eq!(
            words,
            vec![(vec![1], Direction::Left), (vec![0], Direction::Left)]
        );
        assert!(cert.verdict.passed());
        assert_eq!(
            build_strong_percolating_sequence(&g, &t, 0)
                .unwrap_err()
                .code(),
            "BAD_START"
        );
        let (g2, t2) = setup("A3", &[0]);
        assert_eq!(
            build_strong_percolating_sequence(&g2, &t2, 1)
                .unwrap_err()
                .code(),
            "BAD_SUBSET"
        );
    }

    #[test]
    fn truncated_strong_fails_at_end() {
        let (g, t) = setup("B3", &[0, 1]);
        let mut cert = build_strong_percolating_sequence(&g, &t, t.len() - 1).unwrap();
        assert!(cert.verdict.passed());
        cert.steps.pop();
        cert.trace = None;
        assert_eq!(cert.reverify(&g, &t).failure, Some(Failure::EndNotFull));
    }

    #[test]
    fn strongness_violation_detected() {
        // I = {s1} in A3 leaves s2, s3 outside; s3 keeps {W_I, s2 W_I} in L
        let (g, t) = setup("A3", &[0]);
        let s2 = t.act(0, 1);
        let cert = PercolationCertificate {
            system: "A3".into(),
            subset: t.subgroup(),
            kind: CertificateKind::Strong,
            start: vec![0, s2],
            steps: vec![step(&g, &[2], Direction::Left)],
            trace: None,
            translation: vec![],
            verdict: Verdict::PASS,
        };
        assert_eq!(
            cert.verify(&g, &t).failure,
            Some(Failure::StrongnessViolation)
        );
    }

    #[test]
    fn translation_example() {
        let (g, t) = setup("A2", &[0]);
        let cert = build_strong_percolating_sequence(&g, &t, 1).unwrap();
        let same = translate_certificate(&g, &t, &cert, &[]).unwrap();
        assert_eq!(same, cert);
        let moved = translate_certificate(&g, &t, &cert, &[0, 1]).unwrap();
        assert!(moved.verdict.passed());
        // s1 s2 · {W_I, s2 W_I} = {s1 s2 W_I, W_I}
        assert_eq!(moved.start, vec![0, 2]);
    }

    #[test]
    fn obstruction_small() {
        let (g, t) = setup("A3", &[0]);
        assert!(obstruction_check(&g, &t, 1, 2).unwrap().passed());
        assert!(obstruction_check(&g, &t, 2, 1).unwrap().passed());
        assert!(obstruction_check(&g, &t, 0, 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let (g, t) = setup("F4", &[1, 2, 3]);
        let cert = build_strong_percolating_sequence(&g, &t, 5).unwrap();
        let json = cert.to_json(&g);
        assert_eq!(json["kind"], "strong");
        let back = PercolationCertificate::from_json(&g, &json).unwrap();
        assert_eq!(back.steps, cert.steps);
        assert!(back.verdict.passed());
    }
}
