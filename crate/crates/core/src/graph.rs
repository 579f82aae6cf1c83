//! Plain simple bipartite graphs with a fixed left/right split.
//!
//! Vertex ids are global: `0 .. left` is the left side, `left ..
//! left + right` the right side.

use std::collections::BTreeSet;

use serde::Serialize;

/// Three-way split of a vertex (or edge) set under a cut involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    L,
    R,
    F,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
            Side::F => Side::F,
        }
    }
}

/// The clauses of the cut-involution definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CutClause {
    /// The map permutes each part and sends edges to edges.
    Automorphism,
    /// The map squares to the identity.
    Involution,
    /// `F` is exactly the fixed-point set.
    FixedSet,
    /// `L` is mapped onto `R`.
    SidesSwapped,
    /// No edge meets both `L` and `R`.
    NoCrossingEdge,
}

pub const ALL_CLAUSES: [CutClause; 5] = [
    CutClause::Automorphism,
    CutClause::Involution,
    CutClause::FixedSet,
    CutClause::SidesSwapped,
    CutClause::NoCrossingEdge,
];

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    /// Builds a graph from `(left, right)` index pairs, where right
    /// indices are local to the right side. Duplicate pairs are merged.
    pub fn new(left: usize, right: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        assert!(
            set.iter().all(|&(a, b)| a < left && b < right),
            "edge endpoint out of range"
        );
        BipartiteGraph {
            left,
            right,
            edges: set.into_iter().collect(),
        }
    }

    pub fn complete(left: usize, right: usize) -> Self {
        BipartiteGraph::new(
            left,
            right,
            (0..left).flat_map(|a| (0..right).map(move |b| (a, b))),
        )
    }

    /// Even cycle of length `2k`: left `i` adjacent to right `i` and `i+1`.
    pub fn cycle(k: usize) -> Self {
        BipartiteGraph::new(k, k, (0..k).flat_map(|i| [(i, i), (i, (i + 1) % k)]))
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn vertex_count(&self) -> usize {
        self.left + self.right
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(left, right)` with local right indices, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges with global vertex ids.
    pub fn global_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(move |&(a, b)| (a, self.left + b))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a, b)).is_ok()
    }

    pub fn is_left(&self, v: usize) -> bool {
        v < self.left
    }

    /// Degree of every vertex, by global id.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for (a, b) in self.global_edges() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// `(min, max)` degree on the left and on the right side.
    pub fn degree_ranges(&self) -> ((usize, usize), (usize, usize)) {
        let deg = self.degrees();
        let range = |s: &[usize]| {
            (
                s.iter().copied().min().unwrap_or(0),
                s.iter().copied().max().unwrap_or(0),
            )
        };
        (range(&deg[..self.left]), range(&deg[self.left..]))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (a, b) in self.global_edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn is_complete_bipartite(&self) -> bool {
        self.edges.len() == self.left * self.right
    }

    /// Component label per vertex.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for s in 0..self.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = next;
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// A component with at least as many edges as vertices has a cycle.
    pub fn has_cycle(&self) -> bool {
        let comp = self.components();
        let k = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut verts = vec![0usize; k];
        let mut edges = vec![0usize; k];
        for &c in &comp {
            verts[c] += 1;
        }
        for (a, _) in self.global_edges() {
            edges[comp[a]] += 1;
        }
        (0..k).any(|c| edges[c] >= verts[c])
    }

    /// Bipartite tensor product: `(a1, a2) ~ (b1, b2)` iff both factor
    /// pairs are edges. Vertex `(x, y)` gets index `x * |side of other| + y`.
    pub fn tensor(&self, other: &BipartiteGraph) -> BipartiteGraph {
        let pairs = self.edges.iter().flat_map(|&(a1, b1)| {
            other
                .edges
                .iter()
                .map(move |&(a2, b2)| (a1 * other.left + a2, b1 * other.right + b2))
        });
        BipartiteGraph::new(self.left * other.left, self.right * other.right, pairs)
    }

    /// Induced subgraph on a global vertex set, as a pattern: returns the
    /// vertex count and edge list over re-indexed vertices.
    pub fn induced(&self, vertices: &[usize]) -> (usize, Vec<(usize, usize)>) {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .global_edges()
            .filter(|&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|(a, b)| (index[a], index[b]))
            .collect();
        (vertices.len(), edges)
    }

    /// Checks the cut-involution clauses for a vertex permutation and a
    /// side labelling (both over global ids). Returns the violated clauses.
    pub fn cut_involution_violations(&self, perm: &[usize], sides: &[Side]) -> Vec<CutClause> {
        let n = self.vertex_count();
        let mut bad = BTreeSet::new();
        let mut hit = vec![false; n];
        for v in 0..n {
            let p = perm[v];
            if p >= n || hit[p] || self.is_left(v) != self.is_left(p) {
                bad.insert(CutClause::Automorphism);
                continue;
            }
            hit[p] = true;
        }
        if !bad.contains(&CutClause::Automorphism) {
            for (a, b) in self.global_edges() {
                if !self.has_edge(perm[a], perm[b] - self.left) {
                    bad.insert(CutClause::Automorphism);
                    break;
                }
            }
        }
        for v in 0..n {
            let p = perm[v].min(n - 1);
            if perm[p] != v {
                bad.insert(CutClause::Involution);
            }
            if (sides[v] == Side::F) != (perm[v] == v) {
                bad.insert(CutClause::FixedSet);
            }
            if sides[v] != Side::F && sides[p] != sides[v].flipped() {
                bad.insert(CutClause::SidesSwapped);
            }
        }
        for (a, b) in self.global_edges() {
            let pair = (sides[a], sides[b]);
            if pair == (Side::L, Side::R) || pair == (Side::R, Side::L) {
                bad.insert(CutClause::NoCrossingEdge);
                break;
            }
        }
        bad.into_iter().collect()
    }

    /// DOT rendering: left side in one colour and rank, right in another.
    pub fn to_dot(&self, name: &str, labels: Option<&[String]>) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph \"{}\" {{\n", name.replace('"', "'")));
        out.push_str("  rankdir=LR;\n  node [shape=circle, style=filled];\n");
        for (side, range, colour) in [
            ("A", 0..self.left, "lightblue"),
            ("B", self.left..self.vertex_count(), "salmon"),
        ] {
            out.push_str(&format!(
                "  subgraph cluster_{side} {{\n    rank=same; color=white;\n"
            ));
            for v in range {
                let label = labels.map_or_else(|| v.to_string(), |l| l[v].clone());
                out.push_str(&format!(
                    "    v{v} [label=\"{}\", fillcolor={colour}];\n",
                    label.replace('"', "'")
                ));
            }
            out.push_str("  }\n");
        }
        for (a, b) in self.global_edges() {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}
