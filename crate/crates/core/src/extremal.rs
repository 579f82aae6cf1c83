//! Exact extremal-exponent reports for bipartite incidence graphs.
//!
//! For a bipartite `H` with `v` vertices, `e` edges and larger part of
//! size `t`, the exponent bound is `2 - c` with `c = (v - t - 1)/(e - t)`.
//! It is compared against the bound `2 - 1/r` that holds when one side
//! has maximum degree `r`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::group::CoxeterGroup;
use crate::incidence::IncidenceGraph;
use crate::system::GenSet;

/// An exact rational that serializes as `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Exact(pub BigRational);

impl Exact {
    pub fn new(num: i64, den: i64) -> Self {
        Exact(BigRational::new(num.into(), den.into()))
    }
}

impl std::fmt::Display for Exact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ConjectureVerdict {
    /// `H` is itself complete bipartite, so no improvement is expected.
    EqualsKrr,
    /// The bound beats `2 - 1/r`.
    ConfirmsInstance,
    NoImprovement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtremalReport {
    pub v: usize,
    pub e: usize,
    pub t_max: usize,
    pub part_sizes: (usize, usize),
    /// Maximum degree on each side.
    pub degrees: (usize, usize),
    pub biregular: bool,
    pub c: Exact,
    pub exponent: Exact,
    pub furedi_r: usize,
    pub furedi_exponent: Exact,
    pub beats_furedi: bool,
    pub is_complete_bipartite: bool,
    /// Whether `H` avoids `K_{r,r}`; `None` when the check is over budget.
    pub krr_free: Option<bool>,
    pub conjecture_verdict: ConjectureVerdict,
}

/// Subset budget for the `K_{r,r}` check.
pub const KRR_BUDGET: u128 = 1_000_000;

pub fn extremal_report(graph: &BipartiteGraph) -> Result<ExtremalReport> {
    let (a, b) = (graph.left(), graph.right());
    let v = a + b;
    let e = graph.edge_count();
    let t = a.max(b);
    if e == t {
        return Err(Error::Degenerate(t));
    }
    let c = ratio(v as i64 - t as i64 - 1, e as i64 - t as i64);
    let two = ratio(2, 1);
    let ((min_a, max_a), (min_b, max_b)) = graph.degree_ranges();
    let r = max_a.min(max_b).max(1);
    let inv_r = ratio(1, r as i64);
    let beats = c > inv_r;
    let complete = graph.is_complete_bipartite();
    let verdict = if complete {
        ConjectureVerdict::EqualsKrr
    } else if beats {
        ConjectureVerdict::ConfirmsInstance
    } else {
        ConjectureVerdict::NoImprovement
    };
    Ok(ExtremalReport {
        v,
        e,
        t_max: t,
        part_sizes: (a, b),
        degrees: (max_a, max_b),
        biregular: min_a == max_a && min_b == max_b,
        exponent: Exact(&two - &c),
        c: Exact(c),
        furedi_r: r,
        furedi_exponent: Exact(&two - &inv_r),
        beats_furedi: beats,
        is_complete_bipartite: complete,
        krr_free: krr_free(graph, r, KRR_BUDGET),
        conjecture_verdict: verdict,
    })
}

/// Report for a two-part incidence graph.
pub fn extremal_exponent(graph: &IncidenceGraph) -> Result<ExtremalReport> {
    extremal_report(&graph.to_bipartite()?)
}

/// Brute force over `r`-subsets of the smaller side: `H` contains
/// `K_{r,r}` iff some such subset has at least `r` common neighbours.
pub fn krr_free(graph: &BipartiteGraph, r: usize, budget: u128) -> Option<bool> {
    let adj = graph.adjacency();
    let (side, n): (Vec<usize>, usize) = if graph.left() <= graph.right() {
        ((0..graph.left()).collect(), graph.left())
    } else {
        (
            (graph.left()..graph.vertex_count()).collect(),
            graph.right(),
        )
    };
    if binomial(n as u64, r as u64) > BigUint::from(budget) {
        return None;
    }
    let sets: Vec<BTreeSet<usize>> = side
        .iter()
        .map(|&v| adj[v].iter().copied().collect())
        .collect();
    let mut idx: Vec<usize> = (0..r).collect();
    if r > n {
        return Some(true);
    }
    loop {
        let mut common = sets[idx[0]].clone();
        for &i in &idx[1..] {
            common = common.intersection(&sets[i]).copied().collect();
        }
        if common.len() >= r {
            return Some(false);
        }
        // next combination
        let mut k = r;
        while k > 0 && idx[k - 1] == n - r + k - 1 {
            k -= 1;
        }
        if k == 0 {
            return Some(true);
        }
        idx[k - 1] += 1;
        for j in k..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Balanced {
    pub c: Exact,
    pub gap: Exact,
}

/// `c = (v - 2)/(v (r - 1))` for balanced `r`-regular graphs, with the gap
/// `c - 1/r` computed both directly and by `(v - 2r)/(v (r - 1) r)`.
pub fn balanced_exponent(v: u64, r: u64) -> Result<Balanced> {
    if r < 2 || v % 2 == 1 || v < 2 * r {
        return Err(Error::BadInput(format!(
            "need even v >= 2r and r >= 2, got v={v}, r={r}"
        )));
    }
    let (vi, ri) = (BigInt::from(v), BigInt::from(r));
    let c = BigRational::new(&vi - 2, &vi * (&ri - 1));
    let direct = &c - BigRational::new(BigInt::one(), ri.clone());
    let gap = BigRational::new(&vi - 2 * &ri, &vi * (&ri - 1) * &ri);
    assert_eq!(direct, gap, "gap identity");
    Ok(Balanced {
        c: Exact(c),
        gap: Exact(gap),
    })
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum InclusionCase {
    /// `a < b <= m/2`.
    Small,
    /// `a <= m/2 < b`.
    Straddling,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InclusionStats {
    pub m: u64,
    pub a: u64,
    pub b: u64,
    #[serde(serialize_with = "as_string")]
    pub part_a: BigUint,
    #[serde(serialize_with = "as_string")]
    pub part_b: BigUint,
    #[serde(serialize_with = "as_string")]
    pub edges: BigUint,
    pub c: Exact,
    pub case: InclusionCase,
    /// Whether `(a, b)` was replaced by `(m - b, m - a)`.
    pub complemented: bool,
    pub lhs: Exact,
    pub rhs: Exact,
    pub improves: bool,
}

fn as_string<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Sizes, edge count and improvement criterion for the bipartite graph
/// of `a`-subsets versus `b`-subsets of `[m]` under inclusion.
pub fn inclusion_graph_stats(m: u64, a: u64, b: u64) -> Result<InclusionStats> {
    if !(1 <= a && a < b && b < m) {
        return Err(Error::BadRange(format!(
            "need 1 <= a < b < m, got m={m}, a={a}, b={b}"
        )));
    }
    let part_a = binomial(m, a);
    let part_b = binomial(m, b);
    let edges = &part_a * binomial(m - a, b - a);
    let other = &part_b * binomial(b, a);
    assert_eq!(edges, other, "edge count identities disagree");
    let t = part_a.clone().max(part_b.clone());
    let v = &part_a + &part_b;
    let big = |x: &BigUint| BigInt::from(x.clone());
    let c = BigRational::new(big(&v) - big(&t) - 1, big(&edges) - big(&t));

    // 2a vs m and 2b vs m avoid halves
    let (case, complemented, a2, b2) = if 2 * b <= m {
        (InclusionCase::Small, false, a, b)
    } else if 2 * a > m {
        (InclusionCase::Small, true, m - b, m - a)
    } else if (m as i64 - 2 * a as i64).abs() <= (2 * b as i64 - m as i64).abs() {
        (InclusionCase::Straddling, false, a, b)
    } else {
        (InclusionCase::Straddling, true, m - b, m - a)
    };
    let one = BigRational::one();
    let (lhs, rhs) = match case {
        InclusionCase::Small => (
            &one - BigRational::new(BigInt::one(), big(&binomial(b2, a2))),
            BigRational::new(big(&binomial(m, a2)) - 1, big(&binomial(m, b2))),
        ),
        InclusionCase::Straddling => (
            &one - BigRational::new(BigInt::one(), big(&binomial(m - a2, b2 - a2))),
            BigRational::new(big(&binomial(m, b2)) - 1, big(&binomial(m, a2))),
        ),
    };
    Ok(InclusionStats {
        m,
        a,
        b,
        part_a,
        part_b,
        edges,
        c: Exact(c),
        case,
        complemented,
        improves: lhs < rhs,
        lhs: Exact(lhs),
        rhs: Exact(rhs),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InclusionCheck {
    pub part_sizes: (usize, usize),
    pub edges: usize,
    pub isomorphic: bool,
}

/// The permutation of `[m]` (0-based) given by a word in the generators of
/// `A_{m-1}`, where generator `i` swaps `i` and `i + 1`.
pub fn one_line(m: usize, word: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..m).collect();
    // w(x) = s_{w1}(s_{w2}(...(x))): apply letters right to left
    for &i in word.iter().rev() {
        for x in p.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }
    p
}

/// Builds the incidence graph of `A_{m-1}` for `I = S \ {s_a}`,
/// `J = S \ {s_b}` and checks, through one-line notation of coset
/// representatives, that it is the `a`-versus-`b` subset inclusion graph.
pub fn cross_validate_inclusion(m: usize, a: usize, b: usize) -> Result<InclusionCheck> {
    if !(1 <= a && a < b && b < m) || m > 6 {
        return Err(Error::BadRange(format!(
            "need 1 <= a < b < m <= 6, got m={m}, a={a}, b={b}"
        )));
    }
    let group = CoxeterGroup::builtin(&format!("A{}", m - 1))?;
    let full = GenSet::full(m - 1);
    let subsets = [
        full.difference(GenSet::single(a - 1)),
        full.difference(GenSet::single(b - 1)),
    ];
    let graph = IncidenceGraph::build(&group, &subsets)?;
    let label = |part: usize, k: usize| -> Result<Vec<Vec<usize>>> {
        let table = graph.part(part);
        (0..table.len())
            .map(|c| {
                let p = one_line(m, &table.min_rep_word(c)?);
                let mut set: Vec<usize> = p[..k].to_vec();
                set.sort_unstable();
                Ok(set)
            })
            .collect()
    };
    let la = label(0, a)?;
    let lb = label(1, b)?;
    let distinct = |l: &[Vec<usize>], k: usize| {
        l.iter().collect::<BTreeSet<_>>().len() == l.len()
            && BigUint::from(l.len()) == binomial(m as u64, k as u64)
    };
    let found: BTreeSet<(Vec<usize>, Vec<usize>)> = (0..graph.edge_count())
        .map(|e| {
            (
                la[graph.projection(0, e)].clone(),
                lb[graph.projection(1, e)].clone(),
            )
        })
        .collect();
    let expected: BTreeSet<(Vec<usize>, Vec<usize>)> = la
        .iter()
        .flat_map(|u| {
            lb.iter()
                .filter(|v| u.iter().all(|x| v.contains(x)))
                .map(move |v| (u.clone(), v.clone()))
        })
        .collect();
    Ok(InclusionCheck {
        part_sizes: (la.len(), lb.len()),
        edges: graph.edge_count(),
        isomorphic: distinct(&la, a)
            && distinct(&lb, b)
            && found == expected
            && found.len() == graph.edge_count(),
    })
}
