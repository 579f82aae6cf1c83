//! Oracles that do not share code with the coset engine.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

/// Order of the group generated by permutations, by BFS closure.
pub fn permutation_group_order(gens: &[Vec<usize>]) -> usize {
    let n = gens[0].len();
    let id: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q: Vec<usize> = p.iter().map(|&x| g[x]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

/// Adjacent transpositions of `0..n`.
pub fn symmetric_generators(n: usize) -> Vec<Vec<usize>> {
    (0..n - 1)
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(i, i + 1);
            p
        })
        .collect()
}

/// Two reflections of the dihedral group acting on `Z_m x {+,-}`, point
/// `2i + e`: `(i, e) -> (-i, -e)` and `(i, e) -> (1 - i, -e)`. The action
/// is regular, so it stays faithful for `m = 2`.
pub fn dihedral_generators(m: usize) -> Vec<Vec<usize>> {
    let act = |shift: usize| -> Vec<usize> {
        (0..2 * m)
            .map(|p| {
                let (i, e) = (p / 2, p % 2);
                2 * ((shift + m - i) % m) + (1 - e)
            })
            .collect()
    };
    vec![act(0), act(1)]
}

/// Signed permutations of `1..=n` as permutations of `2n` points.
pub fn hyperoctahedral_generators(n: usize) -> Vec<Vec<usize>> {
    // point 2k is +k, 2k+1 is -k
    let mut gens = Vec::new();
    for i in 0..n - 1 {
        let mut p: Vec<usize> = (0..2 * n).collect();
        p.swap(2 * i, 2 * i + 2);
        p.swap(2 * i + 1, 2 * i + 3);
        gens.push(p);
    }
    let mut flip: Vec<usize> = (0..2 * n).collect();
    flip.swap(2 * n - 2, 2 * n - 1);
    gens.push(flip);
    gens
}

/// Order of a Coxeter group from its matrix through the geometric
/// representation `s_i(a_j) = a_j - 2 B_ij a_i` with
/// `B_ij = -cos(pi / m_ij)`, closing under products of floating matrices.
pub fn geometric_order(m: &[Vec<u32>]) -> usize {
    let n = m.len();
    let b = |i: usize, j: usize| -(std::f64::consts::PI / m[i][j] as f64).cos();
    let gens: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            // column j is the image of a_j
            let mut mat = vec![0.0; n * n];
            for j in 0..n {
                mat[j * n + j] = 1.0;
                mat[i * n + j] -= 2.0 * b(i, j);
            }
            mat
        })
        .collect();
    let key = |mat: &[f64]| -> Vec<i64> { mat.iter().map(|x| (x * 1e6).round() as i64).collect() };
    let mut id = vec![0.0; n * n];
    for i in 0..n {
        id[i * n + i] = 1.0;
    }
    let mut seen = HashSet::from([key(&id)]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in &gens {
            let mut q = vec![0.0; n * n];
            for r in 0..n {
                for c in 0..n {
                    q[r * n + c] = (0..n).map(|k| g[r * n + k] * p[k * n + c]).sum();
                }
            }
            if seen.insert(key(&q)) {
                queue.push_back(q);
            }
        }
        assert!(seen.len() <= 100_000, "oracle runaway");
    }
    seen.len()
}

/// All products of subwords of `word`, evaluated by `eval`.
pub fn subword_products(word: &[usize], eval: impl Fn(&[usize]) -> usize) -> HashSet<usize> {
    let k = word.len();
    (0u32..1 << k)
        .map(|mask| {
            let sub: Vec<usize> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| word[i])
                .collect();
            eval(&sub)
        })
        .collect()
}
