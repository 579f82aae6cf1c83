//! Exhaustive breadth-first search for strong percolating sequences on
//! small parts, either through reflections only or through every cut
//! involution of a bipartite graph.
//!
//! States are subsets of the part, stored as `u64` bitmasks. A move is a
//! (permutation, sides) pair applied in either direction, and it is
//! allowed from `J` only when `J` meets both `L ∪ F` and `R ∪ F`.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::cosets::CosetTable;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};
use crate::group::{CoxeterGroup, Reflection};
use crate::percolation::{
    CertificateKind, CosetSet, Direction, FoldAction, FoldStep, PercolationCertificate, Verdict,
};

/// Default state cap: parts of up to 20 elements.
pub const DEFAULT_STATE_CAP: u64 = 1 << 20;
/// Largest graph accepted in cut-involution mode.
pub const MAX_GRAPH_VERTICES: usize = 16;
/// Default backtracking budget for automorphism enumeration.
pub const DEFAULT_AUTOMORPHISM_BUDGET: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchMode {
    ReflectionsOnly,
    AllCutInvolutions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Move {
    pub perm: Vec<usize>,
    pub sides: Vec<Side>,
}

impl Move {
    fn image(&self, c: usize, dir: Direction) -> usize {
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

    fn fold(&self, set: u64, dir: Direction) -> u64 {
        (0..self.perm.len())
            .filter(|&c| set & (1 << self.image(c, dir)) != 0)
            .fold(0, |acc, c| acc | (1 << c))
    }

    fn allows(&self, set: u64) -> bool {
        let mut left = false;
        let mut right = false;
        for c in 0..self.perm.len() {
            if set & (1 << c) == 0 {
                continue;
            }
            match self.sides[c] {
                Side::F => return true,
                Side::L => left = true,
                Side::R => right = true,
            }
        }
        left && right
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Witness as `(move index, direction)` steps.
    Found(Vec<(usize, Direction)>),
    NotFound {
        explored: usize,
    },
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

/// BFS over subsets reachable from `start` by allowed folds.
pub fn search(n: usize, moves: &[Move], start: &[usize], state_cap: u64) -> Result<SearchOutcome> {
    if n > 63 || (1u64 << n) > state_cap {
        return Err(Error::Guard(format!(
            "2^{n} states exceed the state cap {state_cap}"
        )));
    }
    let full = (1u64 << n) - 1;
    let start_mask = start.iter().fold(0u64, |acc, &c| acc | (1 << c));
    let mut parent: HashMap<u64, Option<(u64, usize, Direction)>> = HashMap::new();
    parent.insert(start_mask, None);
    let mut queue = VecDeque::from([start_mask]);
    while let Some(state) = queue.pop_front() {
        if state == full {
            let mut path = Vec::new();
            let mut cur = state;
            while let Some(Some((prev, m, d))) = parent.get(&cur) {
                path.push((*m, *d));
                cur = *prev;
            }
            path.reverse();
            return Ok(SearchOutcome::Found(path));
        }
        for (i, mv) in moves.iter().enumerate() {
            if !mv.allows(state) {
                continue;
            }
            for dir in [Direction::Left, Direction::Right] {
                let next = mv.fold(state, dir);
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                    e.insert(Some((state, i, dir)));
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(SearchOutcome::NotFound {
        explored: parent.len(),
    })
}

/// Distinct reflection actions on a quotient, each with the first
/// reflection (in sorted order) realizing it.
pub fn reflection_moves(group: &CoxeterGroup, table: &CosetTable) -> (Vec<Move>, Vec<Reflection>) {
    let mut moves: Vec<Move> = Vec::new();
    let mut reps = Vec::new();
    for t in group.reflections() {
        let a = FoldAction::new(table, t.word());
        let mv = Move {
            perm: a.perm,
            sides: a.sides,
        };
        if !moves.contains(&mv) {
            moves.push(mv);
            reps.push(t);
        }
    }
    (moves, reps)
}

/// Reflection-only search on `W / W_I` from a start pair. A found
/// witness is returned as a verified strong certificate anchored at the
/// smaller start coset.
pub fn strong_search_reflections(
    group: &CoxeterGroup,
    table: &CosetTable,
    pair: (usize, usize),
    state_cap: u64,
) -> Result<StrongSearchResult> {
    let n = table.len();
    if pair.0 == pair.1 || pair.0.max(pair.1) >= n {
        return Err(Error::BadStart(format!(
            "{pair:?} is not a pair of distinct cosets"
        )));
    }
    let (moves, reps) = reflection_moves(group, table);
    match search(n, &moves, &[pair.0, pair.1], state_cap)? {
        SearchOutcome::NotFound { explored } => Ok(StrongSearchResult::NotFound { explored }),
        SearchOutcome::Found(path) => {
            let anchor = pair.0.min(pair.1);
            let steps: Vec<FoldStep> = path
                .into_iter()
                .map(|(m, direction)| FoldStep {
                    reflection: reps[m].clone(),
                    direction,
                })
                .collect();
            let mut start = vec![pair.0, pair.1];
            start.sort_unstable();
            let mut cert = PercolationCertificate {
                system: group.system().name().to_string(),
                subset: table.subgroup(),
                kind: CertificateKind::Strong,
                start,
                steps,
                trace: None,
                translation: table.min_rep_word(anchor)?,
                verdict: Verdict::PASS,
            };
            cert.reverify(group, table);
            Ok(StrongSearchResult::Found(Box::new(cert)))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongSearchResult {
    Found(Box<PercolationCertificate>),
    NotFound { explored: usize },
}

impl StrongSearchResult {
    pub fn is_found(&self) -> bool {
        matches!(self, StrongSearchResult::Found(_))
    }
}

/// Which side of a bipartite graph a search runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Part {
    Left,
    Right,
}

/// All part-preserving involutory automorphisms other than the identity,
/// as global vertex permutations, in lexicographic order.
pub fn involutory_automorphisms(graph: &BipartiteGraph, budget: usize) -> Result<Vec<Vec<usize>>> {
    let n = graph.vertex_count();
    if n > MAX_GRAPH_VERTICES {
        return Err(Error::Guard(format!(
            "{n} vertices exceed {MAX_GRAPH_VERTICES}"
        )));
    }
    let adj = graph.adjacency();
    let mut adjm = vec![vec![false; n]; n];
    for (v, ns) in adj.iter().enumerate() {
        for &u in ns {
            adjm[v][u] = true;
        }
    }
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut state = AutSearch {
        n,
        left: graph.left(),
        adj: adjm,
        deg,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        nodes: 0,
        budget,
        out: Vec::new(),
    };
    state.extend(0)?;
    state
        .out
        .retain(|p| p.iter().enumerate().any(|(v, &u)| u != v));
    Ok(state.out)
}

struct AutSearch {
    n: usize,
    left: usize,
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    nodes: usize,
    budget: usize,
    out: Vec<Vec<usize>>,
}

impl AutSearch {
    fn consistent(&self, v: usize, u: usize) -> bool {
        (0..self.n).all(|x| {
            let y = self.image[x];
            y == usize::MAX || self.adj[v][x] == self.adj[u][y]
        })
    }

    fn extend(&mut self, v: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::AutomorphismCap(self.budget));
        }
        if v == self.n {
            self.out.push(self.image.clone());
            return Ok(());
        }
        if self.image[v] != usize::MAX {
            return self.extend(v + 1);
        }
        let side = v < self.left;
        for u in 0..self.n {
            if self.used[u] || (u < self.left) != side || self.deg[u] != self.deg[v] {
                continue;
            }
            // u's image is forced to v; u has no image yet since u ≥ v or u unused
            if u != v && self.image[u] != usize::MAX {
                continue;
            }
            if !self.consistent(v, u) {
                continue;
            }
            self.image[v] = u;
            self.used[u] = true;
            let paired = u != v;
            if paired {
                if self.used[v] || !self.consistent(u, v) || self.adj[v][u] != self.adj[u][v] {
                    self.image[v] = usize::MAX;
                    self.used[u] = false;
                    continue;
                }
                self.image[u] = v;
                self.used[v] = true;
            }
            let r = self.extend(v + 1);
            if paired {
                self.image[u] = usize::MAX;
                self.used[v] = false;
            }
            self.image[v] = usize::MAX;
            self.used[u] = false;
            r?;
        }
        Ok(())
    }
}

/// Every valid `L/R/F` orientation of an involution, or none when some
/// non-fixed component is mapped to itself. Orientations come in mirror
/// pairs; only one of each pair is returned since folds run both ways.
pub fn cut_orientations(
    graph: &BipartiteGraph,
    perm: &[usize],
    max_orientations: usize,
) -> Result<Vec<Vec<Side>>> {
    let n = graph.vertex_count();
    let moved: Vec<bool> = (0..n).map(|v| perm[v] != v).collect();
    // components of the subgraph induced on moved vertices
    let adj = graph.adjacency();
    let mut comp = vec![usize::MAX; n];
    let mut k = 0;
    for s in 0..n {
        if !moved[s] || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = k;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if moved[u] && comp[u] == usize::MAX {
                    comp[u] = k;
                    stack.push(u);
                }
            }
        }
        k += 1;
    }
    let mut partner = vec![usize::MAX; k];
    for v in 0..n {
        if moved[v] {
            let (a, b) = (comp[v], comp[perm[v]]);
            if a == b {
                return Ok(vec![]);
            }
            partner[a] = b;
        }
    }
    let pairs: Vec<(usize, usize)> = (0..k)
        .filter(|&c| c < partner[c])
        .map(|c| (c, partner[c]))
        .collect();
    if pairs.is_empty() {
        return Ok(vec![]);
    }
    let count = 1usize
        .checked_shl(pairs.len() as u32 - 1)
        .filter(|&c| c <= max_orientations)
        .ok_or_else(|| Error::Guard(format!("2^{} orientations", pairs.len() - 1)))?;
    let mut out = Vec::with_capacity(count);
    for mask in 0..count {
        // first pair fixed as (L, R) to skip mirror images
        let mut comp_side = vec![Side::F; k];
        for (j, &(a, b)) in pairs.iter().enumerate() {
            let flip = j > 0 && mask & (1 << (j - 1)) != 0;
            let (sa, sb) = if flip {
                (Side::R, Side::L)
            } else {
                (Side::L, Side::R)
            };
            comp_side[a] = sa;
            comp_side[b] = sb;
        }
        let sides: Vec<Side> = (0..n)
            .map(|v| {
                if moved[v] {
                    comp_side[comp[v]]
                } else {
                    Side::F
                }
            })
            .collect();
        if graph.cut_involution_violations(perm, &sides).is_empty() {
            out.push(sides);
        }
    }
    Ok(out)
}

/// Cut-involution moves restricted to one part, deduplicated.
pub fn cut_involution_moves(
    graph: &BipartiteGraph,
    part: Part,
    budget: usize,
) -> Result<Vec<Move>> {
    let (lo, hi) = match part {
        Part::Left => (0, graph.left()),
        Part::Right => (graph.left(), graph.vertex_count()),
    };
    let mut moves: Vec<Move> = Vec::new();
    for perm in involutory_automorphisms(graph, budget)? {
        for sides in cut_orientations(graph, &perm, 1 << 16)? {
            let mv = Move {
                perm: perm[lo..hi].iter().map(|&u| u - lo).collect(),
                sides: sides[lo..hi].to_vec(),
            };
            if !moves.contains(&mv) {
                moves.push(mv);
            }
        }
    }
    Ok(moves)
}

/// Per-start-pair outcome of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub part: Part,
    pub pair: (usize, usize),
    pub found: bool,
}

/// Runs the search from every pair in one part of a bipartite graph,
/// with moves supplied by the caller.
pub fn sweep_pairs(
    n: usize,
    moves: &[Move],
    part: Part,
    state_cap: u64,
) -> Result<Vec<PairOutcome>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let found = search(n, moves, &[a, b], state_cap)?.is_found();
            out.push(PairOutcome {
                part,
                pair: (a, b),
                found,
            });
        }
    }
    Ok(out)
}

/// Replays a graph-mode witness and checks that it is a strong
/// percolating sequence.
pub fn verify_witness(
    n: usize,
    moves: &[Move],
    start: &[usize],
    path: &[(usize, Direction)],
) -> bool {
    let mut set = CosetSet::from_indices(n, start);
    for &(m, d) in path {
        let mv = &moves[m];
        if !set.straddles(&mv.sides) {
            return false;
        }
        let a = FoldAction {
            perm: mv.perm.clone(),
            sides: mv.sides.clone(),
        };
        set = a.fold(&set, d);
    }
    set.is_full()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::GenSet;

    #[test]
    fn finds_a2_witness() {
        let g = CoxeterGroup::builtin("A2").unwrap();
        let t = g.quotient(GenSet::single(0)).unwrap();
        let r = strong_search_reflections(&g, &t, (0, 1), DEFAULT_STATE_CAP).unwrap();
        match r {
            StrongSearchResult::Found(cert) => assert!(cert.verdict.passed()),
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn guard_on_large_parts() {
        let moves = vec![];
        assert_eq!(
            search(25, &moves, &[0, 1], DEFAULT_STATE_CAP)
                .unwrap_err()
                .code(),
            "GUARD"
        );
    }

    #[test]
    fn c6_involutions() {
        // automorphisms of C6 preserving parts: 3 reflections of the hexagon
        // that fix a vertex on each side, plus the one rotation by 3 is not
        // part preserving; the dihedral group has 6 part-preserving maps
        let c6 = BipartiteGraph::cycle(3);
        let invs = involutory_automorphisms(&c6, 10_000).unwrap();
        assert_eq!(invs.len(), 3);
        for p in &invs {
            assert_eq!(cut_orientations(&c6, p, 16).unwrap().len(), 1);
        }
    }

    #[test]
    fn k22_involutions() {
        let k = BipartiteGraph::complete(2, 2);
        let invs = involutory_automorphisms(&k, 10_000).unwrap();
        // swap left, swap right, swap both
        assert_eq!(invs.len(), 3);
        let oriented: usize = invs
            .iter()
            .map(|p| cut_orientations(&k, p, 16).unwrap().len())
            .sum();
        // swapping both sides makes a single moved component
        assert_eq!(oriented, 2);
    }

    #[test]
    fn automorphism_budget() {
        let k = BipartiteGraph::complete(4, 4);
        assert_eq!(
            involutory_automorphisms(&k, 10).unwrap_err().code(),
            "AUTOMORPHISM_CAP"
        );
    }
}
