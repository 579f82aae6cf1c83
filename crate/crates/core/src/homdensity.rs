//! Exact homomorphism densities on small hosts, and the two Cauchy–Schwarz
//! inequalities behind folding: the cut-involution inequality
//! `t(H) t(H[F]) >= t(H[L ∪ F])^2` and the squared fold inequality
//! `t(J)^2 <= t(J+) t(J-)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::Exact;
use crate::graph::Side;
use crate::group::{CoxeterGroup, Reflection};
use crate::incidence::IncidenceGraph;
use crate::percolation::{CosetSet, Direction, FoldAction, FoldStep};

/// Default limit on `|V(G)|^{|V(pattern)|}`.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// A pattern graph on `0..vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Pattern {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        assert!(edges.iter().all(|&(a, b)| a < vertices && b < vertices));
        Pattern { vertices, edges }
    }

    pub fn cycle(n: usize) -> Self {
        Pattern::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    /// Disjoint union, with `other` shifted after `self`.
    pub fn disjoint_union(&self, other: &Pattern) -> Pattern {
        let k = self.vertices;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + k, b + k)));
        Pattern::new(k + other.vertices, edges)
    }
}

/// A host graph with nonnegative rational edge weights; `0` means no edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Host {
    n: usize,
    weights: Vec<BigRational>,
}

impl Host {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut weights = vec![BigRational::zero(); n * n];
        for &(a, b) in edges {
            weights[a * n + b] = BigRational::one();
            weights[b * n + a] = BigRational::one();
        }
        Host { n, weights }
    }

    pub fn weighted(n: usize, edges: &[(usize, usize, BigRational)]) -> Result<Self> {
        let mut weights = vec![BigRational::zero(); n * n];
        for (a, b, w) in edges {
            if *a >= n || *b >= n || *w < BigRational::zero() {
                return Err(Error::BadInput(format!("edge ({a}, {b}) with weight {w}")));
            }
            weights[a * n + b] = w.clone();
            weights[b * n + a] = w.clone();
        }
        Ok(Host { n, weights })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Host::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Host::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn weight(&self, a: usize, b: usize) -> &BigRational {
        &self.weights[a * self.n + b]
    }
}

/// `t(K, G)`: the weighted count of maps `V(K) -> V(G)` divided by
/// `|V(G)|^{|V(K)|}`.
pub fn hom_density(pattern: &Pattern, host: &Host, budget: u128) -> Result<BigRational> {
    let total = (host.n as u128)
        .checked_pow(pattern.vertices as u32)
        .unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::BudgetExceeded(total, budget));
    }
    if pattern.vertices == 0 {
        return Ok(BigRational::one());
    }
    if host.n == 0 {
        return Ok(BigRational::zero());
    }
    // each edge is checked once both endpoints are placed
    let mut back: Vec<Vec<usize>> = vec![Vec::new(); pattern.vertices];
    for &(a, b) in &pattern.edges {
        back[a.max(b)].push(a.min(b));
    }
    let mut map = vec![0usize; pattern.vertices];
    let count = extend(pattern, host, &back, &mut map, 0);
    Ok(count / BigRational::from_integer(BigInt::from(host.n).pow(pattern.vertices as u32)))
}

fn extend(
    pattern: &Pattern,
    host: &Host,
    back: &[Vec<usize>],
    map: &mut Vec<usize>,
    v: usize,
) -> BigRational {
    if v == pattern.vertices {
        return BigRational::one();
    }
    let mut sum = BigRational::zero();
    for x in 0..host.n {
        let mut w = BigRational::one();
        for &u in &back[v] {
            let e = host.weight(map[u], x);
            if e.is_zero() {
                w = BigRational::zero();
                break;
            }
            w *= e;
        }
        if w.is_zero() {
            continue;
        }
        map[v] = x;
        sum += w * extend(pattern, host, back, map, v + 1);
    }
    sum
}

/// Induced subgraph of a pattern on `keep`.
pub fn induced(pattern: &Pattern, keep: &[bool]) -> Pattern {
    let mut index = vec![usize::MAX; pattern.vertices];
    let mut k = 0;
    for v in 0..pattern.vertices {
        if keep[v] {
            index[v] = k;
            k += 1;
        }
    }
    let edges = pattern
        .edges
        .iter()
        .filter(|&&(a, b)| keep[a] && keep[b])
        .map(|&(a, b)| (index[a], index[b]))
        .collect();
    Pattern::new(k, edges)
}

/// The whole two-part incidence graph as a pattern over global ids.
pub fn incidence_pattern(graph: &IncidenceGraph) -> Result<Pattern> {
    edge_subset_pattern(graph, &CosetSet::full(graph.edge_count()))
}

/// The spanning subgraph of a two-part incidence graph with edge set `j`.
pub fn edge_subset_pattern(graph: &IncidenceGraph, j: &CosetSet) -> Result<Pattern> {
    if graph.arity() != 2 {
        return Err(Error::BadShape(format!(
            "{} parts, patterns need 2",
            graph.arity()
        )));
    }
    let edges = j
        .indices()
        .into_iter()
        .map(|e| {
            let v = graph.edge_vertices(e);
            (v[0], v[1])
        })
        .collect();
    Ok(Pattern::new(graph.vertex_count(), edges))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityVerdict {
    /// Left-hand side, the product that should dominate.
    pub larger: Exact,
    /// Right-hand side.
    pub smaller: Exact,
    pub holds: bool,
}

fn verdict(larger: BigRational, smaller: BigRational) -> InequalityVerdict {
    InequalityVerdict {
        holds: larger >= smaller,
        larger: Exact(larger),
        smaller: Exact(smaller),
    }
}

/// `t(H, G) · t(H[F], G) >= t(H[L ∪ F], G)^2` for a side labelling of the
/// pattern's vertices.
pub fn cut_involution_inequality(
    pattern: &Pattern,
    sides: &[Side],
    host: &Host,
    budget: u128,
) -> Result<InequalityVerdict> {
    let f: Vec<bool> = sides.iter().map(|&s| s == Side::F).collect();
    let lf: Vec<bool> = sides.iter().map(|&s| s != Side::R).collect();
    let th = hom_density(pattern, host, budget)?;
    let tf = hom_density(&induced(pattern, &f), host, budget)?;
    let tlf = hom_density(&induced(pattern, &lf), host, budget)?;
    Ok(verdict(th * tf, &tlf * &tlf))
}

/// The cut-involution inequality for the involution a reflection induces
/// on a two-part incidence graph.
pub fn check_cut_involution_inequality(
    graph: &IncidenceGraph,
    t: &Reflection,
    host: &Host,
    budget: u128,
) -> Result<InequalityVerdict> {
    let pattern = incidence_pattern(graph)?;
    cut_involution_inequality(&pattern, &graph.classify(t).vertex_sides(), host, budget)
}

/// `t(J+) · t(J-) >= t(J)^2`, with `J±` folded on the edge table.
pub fn check_fold_inequality(
    graph: &IncidenceGraph,
    j: &CosetSet,
    t: &Reflection,
    host: &Host,
    budget: u128,
) -> Result<InequalityVerdict> {
    let action = FoldAction::new(graph.edge_table(), t.word());
    let plus = action.fold(j, Direction::Left);
    let minus = action.fold(j, Direction::Right);
    let tj = hom_density(&edge_subset_pattern(graph, j)?, host, budget)?;
    let tp = hom_density(&edge_subset_pattern(graph, &plus)?, host, budget)?;
    let tm = hom_density(&edge_subset_pattern(graph, &minus)?, host, budget)?;
    Ok(verdict(tp * tm, &tj * &tj))
}

/// Folds an edge set through the vertex maps instead of the edge table:
/// an edge is kept when its image under the vertex folding map is in `j`.
pub fn edge_fold_via_vertices(graph: &IncidenceGraph, j: &CosetSet, step: &FoldStep) -> CosetSet {
    let actions: Vec<FoldAction> = graph
        .parts()
        .iter()
        .map(|p| FoldAction::new(p, step.reflection.word()))
        .collect();
    let by_vertices: std::collections::HashMap<Vec<usize>, usize> = (0..graph.edge_count())
        .map(|e| (endpoints(graph, e), e))
        .collect();
    let mut out = CosetSet::empty(graph.edge_count());
    for e in 0..graph.edge_count() {
        let image: Vec<usize> = (0..graph.arity())
            .map(|i| actions[i].image(graph.projection(i, e), step.direction))
            .collect();
        if let Some(&f) = by_vertices.get(&image) {
            if j.contains(f) {
                out.insert(e);
            }
        }
    }
    out
}

fn endpoints(graph: &IncidenceGraph, e: usize) -> Vec<usize> {
    (0..graph.arity()).map(|i| graph.projection(i, e)).collect()
}

/// Every simple graph on `1..=max` labelled vertices.
pub fn all_hosts(max: usize) -> Vec<Host> {
    let mut out = Vec::new();
    for n in 1..=max {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            out.push(Host::from_edges(n, &edges));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialSummary {
    pub trials: usize,
    pub violations: usize,
}

/// Seeded random trials of the squared fold inequality: a random edge
/// subset, a random reflection and a random host on at most `max_host`
/// vertices per trial.
pub fn random_fold_trials(
    group: &CoxeterGroup,
    graph: &IncidenceGraph,
    trials: usize,
    max_host: usize,
    seed: u64,
    budget: u128,
) -> Result<TrialSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reflections = group.reflections();
    let mut violations = 0;
    for _ in 0..trials {
        let mut j = CosetSet::empty(graph.edge_count());
        for e in 0..graph.edge_count() {
            if rng.gen_bool(0.5) {
                j.insert(e);
            }
        }
        let t = &reflections[rng.gen_range(0..reflections.len())];
        let n = rng.gen_range(1..=max_host);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let host = Host::from_edges(n, &edges);
        if !check_fold_inequality(graph, &j, t, &host, budget)?.holds {
            violations += 1;
        }
    }
    Ok(TrialSummary { trials, violations })
}
