//! `(I_1, …, I_r; W, S)`-graphs, bigraphs, and the cut involutions that
//! reflections induce on them.
//!
//! Parts are the coset tables of `W / W_{I_i}`; edges are the cosets of
//! `W_{I_∩}` with `I_∩ = I_1 ∩ … ∩ I_r`, and each edge projects to its
//! image coset in every part. Vertices are numbered part-major, edges by
//! edge-table coset index.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cosets::CosetTable;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
pub use crate::graph::{CutClause, Side};
use crate::group::{CoxeterGroup, Reflection};
use crate::system::{CoxeterSystem, GenSet};

#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    subsets: Vec<GenSet>,
    parts: Vec<CosetTable>,
    edge_subset: GenSet,
    edge_table: CosetTable,
    /// `projections[i][e]` is the part-`i` coset of edge `e`.
    projections: Vec<Vec<u32>>,
}

impl IncidenceGraph {
    pub fn build(group: &CoxeterGroup, subsets: &[GenSet]) -> Result<Self> {
        if subsets.is_empty() {
            return Err(Error::BadSubset("at least one part is required".into()));
        }
        let all = group.system().all();
        if let Some(bad) = subsets.iter().find(|s| !s.is_subset(all)) {
            return Err(Error::BadSubset(format!("{bad:?}")));
        }
        let edge_subset = subsets.iter().fold(all, |acc, &s| acc.intersection(s));
        let parts = subsets
            .iter()
            .map(|&s| group.quotient(s))
            .collect::<Result<Vec<_>>>()?;
        let edge_table = group.quotient(edge_subset)?;
        let projections = parts
            .iter()
            .map(|part| {
                (0..edge_table.len())
                    .map(|e| {
                        let word = edge_table.min_rep_word(e).expect("edge in range");
                        part.act_word(0, &word) as u32
                    })
                    .collect()
            })
            .collect();
        Ok(IncidenceGraph {
            subsets: subsets.to_vec(),
            parts,
            edge_subset,
            edge_table,
            projections,
        })
    }

    pub fn arity(&self) -> usize {
        self.parts.len()
    }

    pub fn subsets(&self) -> &[GenSet] {
        &self.subsets
    }

    pub fn parts(&self) -> &[CosetTable] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &CosetTable {
        &self.parts[i]
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(CosetTable::len).collect()
    }

    pub fn edge_subset(&self) -> GenSet {
        self.edge_subset
    }

    pub fn edge_table(&self) -> &CosetTable {
        &self.edge_table
    }

    pub fn edge_count(&self) -> usize {
        self.edge_table.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(CosetTable::len).sum()
    }

    pub fn projection(&self, part: usize, edge: usize) -> usize {
        self.projections[part][edge] as usize
    }

    /// Global id of a part coset.
    pub fn vertex_id(&self, part: usize, coset: usize) -> usize {
        self.parts[..part]
            .iter()
            .map(CosetTable::len)
            .sum::<usize>()
            + coset
    }

    /// The edge `e` as global vertex ids, one per part.
    pub fn edge_vertices(&self, e: usize) -> Vec<usize> {
        (0..self.arity())
            .map(|i| self.vertex_id(i, self.projection(i, e)))
            .collect()
    }

    /// The bipartite graph for `r = 2`, edge `k` of the result being
    /// edge-table coset `edge_order()[k]`.
    pub fn to_bipartite(&self) -> Result<BipartiteGraph> {
        if self.arity() != 2 {
            return Err(Error::BadShape(format!(
                "{} parts, bipartite view needs 2",
                self.arity()
            )));
        }
        Ok(BipartiteGraph::new(
            self.parts[0].len(),
            self.parts[1].len(),
            (0..self.edge_count()).map(|e| (self.projection(0, e), self.projection(1, e))),
        ))
    }

    /// Fibre sizes of each projection (all equal when the structure is a
    /// genuine coset incidence).
    pub fn fibre_sizes(&self, part: usize) -> Vec<usize> {
        let mut counts = vec![0; self.parts[part].len()];
        for e in 0..self.edge_count() {
            counts[self.projection(part, e)] += 1;
        }
        counts
    }

    /// Left/right/fixed classification of every vertex and edge under `t`.
    pub fn classify(&self, t: &Reflection) -> ReflectionSides {
        let parts = self
            .parts
            .iter()
            .map(|table| classify_table(table, t.word()))
            .collect();
        let edges = classify_table(&self.edge_table, t.word());
        ReflectionSides {
            reflection: t.clone(),
            parts,
            edges,
        }
    }

    /// Checks that `c ↦ t c` is a cut involution oriented by `classify`.
    pub fn verify_cut_involution(&self, t: &Reflection) -> CutVerdict {
        let sides = self.classify(t);
        let mut bad = BTreeSet::new();
        let edge_perm = self.edge_table.permutation(t.word());
        let part_perms: Vec<Vec<usize>> =
            self.parts.iter().map(|p| p.permutation(t.word())).collect();
        for perm in part_perms.iter().chain(std::iter::once(&edge_perm)) {
            if !is_permutation(perm) {
                bad.insert(CutClause::Automorphism);
            }
            if (0..perm.len()).any(|c| perm[perm[c]] != c) {
                bad.insert(CutClause::Involution);
            }
        }
        for e in 0..self.edge_count() {
            for (i, perm) in part_perms.iter().enumerate() {
                if self.projection(i, edge_perm[e]) != perm[self.projection(i, e)] {
                    bad.insert(CutClause::Automorphism);
                }
            }
        }
        for (perm, part_sides) in part_perms.iter().zip(&sides.parts) {
            for c in 0..perm.len() {
                if (part_sides[c] == Side::F) != (perm[c] == c) {
                    bad.insert(CutClause::FixedSet);
                }
                if part_sides[c] != Side::F && part_sides[perm[c]] != part_sides[c].flipped() {
                    bad.insert(CutClause::SidesSwapped);
                }
            }
        }
        for e in 0..self.edge_count() {
            let mut has_l = false;
            let mut has_r = false;
            for (i, part_sides) in sides.parts.iter().enumerate() {
                match part_sides[self.projection(i, e)] {
                    Side::L => has_l = true,
                    Side::R => has_r = true,
                    Side::F => {}
                }
            }
            if has_l && has_r {
                bad.insert(CutClause::NoCrossingEdge);
            }
        }
        CutVerdict {
            violations: bad.into_iter().collect(),
        }
    }

    /// Connectivity and cycle statistics, plus the predictions for `r = 2`:
    /// a cycle unless one subset contains the other, and connectivity when
    /// the two subsets cover `S`.
    pub fn shape(&self, system: &CoxeterSystem) -> GraphShape {
        let n = self.vertex_count();
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while uf[r] != r {
                r = uf[r];
            }
            let mut y = x;
            while uf[y] != r {
                let next = uf[y];
                uf[y] = r;
                y = next;
            }
            r
        }
        for e in 0..self.edge_count() {
            let vs = self.edge_vertices(e);
            for w in vs.windows(2) {
                let a = find(&mut uf, w[0]);
                let b = find(&mut uf, w[1]);
                if a != b {
                    uf[a.max(b)] = a.min(b);
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|v| find(&mut uf, v)).collect();
        let connected = roots.iter().all(|&r| r == roots[0]);
        let mut verts = vec![0usize; n];
        let mut edges = vec![0usize; n];
        for &r in &roots {
            verts[r] += 1;
        }
        for e in 0..self.edge_count() {
            edges[roots[self.vertex_id(0, self.projection(0, e))]] += 1;
        }
        // Berge cycle in the vertex/edge incidence structure; for r = 2
        // this is `edges >= vertices` in some component
        let r = self.arity();
        let has_cycle = (0..n).any(|c| verts[c] > 0 && (r - 1) * edges[c] >= verts[c]);
        let degrees = (0..r)
            .map(|i| {
                let f = self.fibre_sizes(i);
                (
                    f.iter().copied().min().unwrap_or(0),
                    f.iter().copied().max().unwrap_or(0),
                )
            })
            .collect();
        let (predicted_cycle, predicted_connected) = if r == 2 {
            let (a, b) = (self.subsets[0], self.subsets[1]);
            (
                Some(!(a.is_subset(b) || b.is_subset(a))),
                Some(a.union(b) == system.all()),
            )
        } else {
            (None, None)
        };
        GraphShape {
            part_sizes: self.part_sizes(),
            edge_count: self.edge_count(),
            degrees,
            connected,
            has_cycle,
            predicted_cycle,
            predicted_connected,
        }
    }

    /// JSON export: parts with subsets and sizes, edges as vertex-id lists,
    /// projections per part.
    pub fn to_json(&self, system: &CoxeterSystem) -> serde_json::Value {
        let parts: Vec<_> = self
            .subsets
            .iter()
            .zip(&self.parts)
            .map(|(&s, t)| serde_json::json!({"subset": system.subset_labels(s), "size": t.len()}))
            .collect();
        let edges: Vec<_> = (0..self.edge_count())
            .map(|e| self.edge_vertices(e))
            .collect();
        serde_json::json!({
            "system": system.name(),
            "parts": parts,
            "edge_subset": system.subset_labels(self.edge_subset),
            "edges": edges,
            "projections": self.projections,
        })
    }

    /// Human-readable labels (minimal representative words) per vertex.
    pub fn vertex_labels(&self, system: &CoxeterSystem) -> Vec<String> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, t)| {
                (0..t.len()).map(move |c| {
                    format!(
                        "{}:{}",
                        i,
                        system.format_word(&t.min_rep_word(c).expect("coset"))
                    )
                })
            })
            .collect()
    }

    pub fn to_dot(&self, system: &CoxeterSystem) -> Result<String> {
        let labels = self.vertex_labels(system);
        Ok(self.to_bipartite()?.to_dot(system.name(), Some(&labels)))
    }
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut hit = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || hit[p] {
            return false;
        }
        hit[p] = true;
    }
    true
}

/// Sides of every coset of `table` for the element spelled by `word`.
pub fn classify_table(table: &CosetTable, word: &[usize]) -> Vec<Side> {
    (0..table.len())
        .map(|c| {
            let tc = table.act_word(c, word);
            match table.depth(tc).cmp(&table.depth(c)) {
                std::cmp::Ordering::Greater => Side::L,
                std::cmp::Ordering::Less => Side::R,
                std::cmp::Ordering::Equal => Side::F,
            }
        })
        .collect()
}

/// The `L_i / R_i / F_i` split of every part and of the edge set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionSides {
    pub reflection: Reflection,
    pub parts: Vec<Vec<Side>>,
    pub edges: Vec<Side>,
}

impl ReflectionSides {
    pub fn cosets(&self, part: usize, side: Side) -> Vec<usize> {
        self.parts[part]
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == side)
            .map(|(c, _)| c)
            .collect()
    }

    /// Sides over global vertex ids (part-major).
    pub fn vertex_sides(&self) -> Vec<Side> {
        self.parts.iter().flatten().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutVerdict {
    pub violations: Vec<CutClause>,
}

impl CutVerdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphShape {
    pub part_sizes: Vec<usize>,
    pub edge_count: usize,
    /// `(min, max)` degree per part.
    pub degrees: Vec<(usize, usize)>,
    pub connected: bool,
    pub has_cycle: bool,
    pub predicted_cycle: Option<bool>,
    pub predicted_connected: Option<bool>,
}

/// The `(I_1, I_2 ∪ … ∪ I_r)`-bigraph: `W / W_{I_1}` on the left, the
/// disjoint union of the other quotients on the right, one star per
/// `r`-edge with repeated edges merged.
#[derive(Debug, Clone)]
pub struct Bigraph {
    pub left: CosetTable,
    pub right: Vec<CosetTable>,
    pub graph: BipartiteGraph,
}

impl Bigraph {
    pub fn build(group: &CoxeterGroup, first: GenSet, rest: &[GenSet]) -> Result<Self> {
        let mut subsets = vec![first];
        subsets.extend_from_slice(rest);
        let inc = IncidenceGraph::build(group, &subsets)?;
        let mut offsets = Vec::with_capacity(rest.len());
        let mut total = 0;
        for p in &inc.parts[1..] {
            offsets.push(total);
            total += p.len();
        }
        let pairs = (0..inc.edge_count()).flat_map(|e| {
            let a = inc.projection(0, e);
            let inc = &inc;
            offsets
                .iter()
                .enumerate()
                .map(move |(j, &off)| (a, off + inc.projection(j + 1, e)))
        });
        let graph = BipartiteGraph::new(inc.parts[0].len(), total, pairs);
        let mut parts = inc.parts;
        let right = parts.split_off(1);
        Ok(Bigraph {
            left: parts.pop().expect("first part"),
            right,
            graph,
        })
    }

    /// Vertex permutation and algebraic sides of `t` over global ids.
    pub fn reflection_action(&self, t: &Reflection) -> (Vec<usize>, Vec<Side>) {
        let mut perm = self.left.permutation(t.word());
        let mut sides = classify_table(&self.left, t.word());
        let mut off = self.left.len();
        for table in &self.right {
            perm.extend(table.permutation(t.word()).into_iter().map(|c| c + off));
            sides.extend(classify_table(table, t.word()));
            off += table.len();
        }
        (perm, sides)
    }

    pub fn verify_cut_involution(&self, t: &Reflection) -> CutVerdict {
        let (perm, sides) = self.reflection_action(t);
        CutVerdict {
            violations: self.graph.cut_involution_violations(&perm, &sides),
        }
    }
}

/// Direct product of two systems with their subset pairs carried along,
/// the second system's generators shifted past the first's.
#[derive(Debug, Clone)]
pub struct TensorSystem {
    pub system: CoxeterSystem,
    pub first: GenSet,
    pub second: GenSet,
    /// Rank of the left factor.
    pub split: usize,
}

pub fn tensor_system(
    a: &CoxeterSystem,
    (i1, j1): (GenSet, GenSet),
    b: &CoxeterSystem,
    (i2, j2): (GenSet, GenSet),
) -> TensorSystem {
    let n = a.rank();
    let shift = |s: GenSet| GenSet(s.0 << n);
    TensorSystem {
        system: a.direct_product(b),
        first: i1.union(shift(i2)),
        second: j1.union(shift(j2)),
        split: n,
    }
}

/// Checks that the `(I, J)`-graph of a product system coincides with the
/// bipartite tensor product of the factor graphs, using the explicit map
/// that splits a minimal representative word by factor.
pub fn tensor_matches(
    product: &IncidenceGraph,
    split: usize,
    left: &IncidenceGraph,
    right: &IncidenceGraph,
) -> Result<bool> {
    let map_part = |part: usize| -> Result<Vec<usize>> {
        let table = product.part(part);
        let (t1, t2) = (left.part(part), right.part(part));
        (0..table.len())
            .map(|c| {
                let word = table.min_rep_word(c)?;
                let w1: Vec<usize> = word.iter().copied().filter(|&g| g < split).collect();
                let w2: Vec<usize> = word
                    .iter()
                    .filter(|&&g| g >= split)
                    .map(|&g| g - split)
                    .collect();
                Ok(t1.act_word(0, &w1) * t2.len() + t2.act_word(0, &w2))
            })
            .collect()
    };
    let ma = map_part(0)?;
    let mb = map_part(1)?;
    if !is_permutation(&ma) || !is_permutation(&mb) {
        return Ok(false);
    }
    let g = product.to_bipartite()?;
    let expected = left.to_bipartite()?.tensor(&right.to_bipartite()?);
    let mapped = BipartiteGraph::new(
        g.left(),
        g.right(),
        g.edges().iter().map(|&(a, b)| (ma[a], mb[b])),
    );
    Ok(mapped == expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(name: &str, subsets: &[&[usize]]) -> (CoxeterGroup, IncidenceGraph) {
        let g = CoxeterGroup::builtin(name).unwrap();
        let subsets: Vec<GenSet> = subsets
            .iter()
            .map(|s| GenSet::from_indices(s.iter().copied()))
            .collect();
        let h = IncidenceGraph::build(&g, &subsets).unwrap();
        (g, h)
    }

    #[test]
    fn c6_from_a2() {
        let (g, h) = graph("A2", &[&[0], &[1]]);
        let b = h.to_bipartite().unwrap();
        assert_eq!((b.left(), b.right(), b.edge_count()), (3, 3, 6));
        assert_eq!(b.degree_ranges(), ((2, 2), (2, 2)));
        assert!(b.is_connected() && b.has_cycle());
        let shape = h.shape(g.system());
        assert_eq!(shape.predicted_cycle, Some(true));
        assert_eq!(shape.predicted_connected, Some(true));
    }

    #[test]
    fn k22_from_i22() {
        let (_, h) = graph("I2(2)", &[&[0], &[1]]);
        assert!(h.to_bipartite().unwrap().is_complete_bipartite());
        assert_eq!(h.edge_count(), 4);
    }

    #[test]
    fn twenty_four_cell() {
        let (g, h) = graph("F4", &[&[1, 2, 3], &[0, 1, 2]]);
        let b = h.to_bipartite().unwrap();
        assert_eq!((b.left(), b.right(), b.edge_count()), (24, 24, 144));
        assert_eq!(b.degree_ranges(), ((6, 6), (6, 6)));
        for t in g.reflections() {
            assert!(h.verify_cut_involution(&t).passed());
        }
    }

    #[test]
    fn c6_classification_for_s1() {
        let (g, h) = graph("A2", &[&[0], &[1]]);
        let sides = h.classify(&g.reflection_from_word(&[0]).unwrap());
        // part 0 is W/W_{s1}: cosets e, s2, s1s2
        assert_eq!(sides.cosets(0, Side::F), vec![0]);
        assert_eq!(sides.cosets(0, Side::L), vec![1]);
        assert_eq!(sides.cosets(0, Side::R), vec![2]);
    }

    #[test]
    fn full_subset_part_is_fixed() {
        let (g, h) = graph("B3", &[&[0, 1, 2], &[1]]);
        for t in g.reflections() {
            assert_eq!(h.classify(&t).parts[0], vec![Side::F]);
        }
    }

    #[test]
    fn forest_case() {
        let (g, h) = graph("A2", &[&[], &[1]]);
        let s = h.shape(g.system());
        assert_eq!(s.part_sizes, vec![6, 3]);
        assert_eq!(s.edge_count, 6);
        assert!(!s.has_cycle);
        assert_eq!(s.predicted_cycle, Some(false));
    }

    #[test]
    fn bigraph_example() {
        let g = CoxeterGroup::builtin("A2").unwrap();
        let big =
            Bigraph::build(&g, GenSet::single(0), &[GenSet::single(1), GenSet::EMPTY]).unwrap();
        assert_eq!(
            (big.graph.left(), big.graph.right(), big.graph.edge_count()),
            (3, 9, 12)
        );
        for t in g.reflections() {
            assert!(big.verify_cut_involution(&t).passed());
        }
        // r = 2 bigraph is the incidence graph itself
        let two = Bigraph::build(&g, GenSet::single(0), &[GenSet::single(1)]).unwrap();
        let (_, h) = graph("A2", &[&[0], &[1]]);
        assert_eq!(two.graph, h.to_bipartite().unwrap());
    }

    #[test]
    fn blow_up_is_tensor_product() {
        let a2 = CoxeterSystem::builtin("A2").unwrap();
        let k = CoxeterSystem::builtin("I2(2)").unwrap();
        let ts = tensor_system(
            &a2,
            (GenSet::single(0), GenSet::single(1)),
            &k,
            (GenSet::single(0), GenSet::single(1)),
        );
        let g = CoxeterGroup::new(ts.system.clone()).unwrap();
        let h = IncidenceGraph::build(&g, &[ts.first, ts.second]).unwrap();
        assert_eq!(h.part_sizes(), vec![6, 6]);
        assert_eq!(h.edge_count(), 24);
        let (_, c6) = graph("A2", &[&[0], &[1]]);
        let (_, k22) = graph("I2(2)", &[&[0], &[1]]);
        assert!(tensor_matches(&h, ts.split, &c6, &k22).unwrap());
    }

    #[test]
    fn ternary_graph() {
        let (g, h) = graph("A3", &[&[1, 2], &[0, 2], &[0, 1]]);
        assert_eq!(h.part_sizes(), vec![4, 6, 4]);
        assert_eq!(h.edge_count(), 24);
        for t in g.reflections() {
            assert!(h.verify_cut_involution(&t).passed());
        }
    }
}
