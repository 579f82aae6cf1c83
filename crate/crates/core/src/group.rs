//! The enumerated group `W`: elements, products, lengths, reflections,
//! descent sets, parabolic factorization and Bruhat comparison.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cosets::{CosetTable, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, GenSet};

/// An element of `W`, identified by its index in the regular table, with
/// its canonical (lexicographically smallest) reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElement {
    pub index: usize,
    pub word: Vec<usize>,
}

impl GroupElement {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Generators occurring in the reduced word. The set does not depend
    /// on which reduced word is used.
    pub fn support(&self) -> GenSet {
        GenSet::from_indices(self.word.iter().copied())
    }
}

/// A reflection `w s w^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Reflection {
    pub element: GroupElement,
    pub support: GenSet,
}

impl Reflection {
    pub fn word(&self) -> &[usize] {
        &self.element.word
    }

    pub fn index(&self) -> usize {
        self.element.index
    }
}

/// A finite Coxeter group with its regular table (`I = ∅`) frozen.
#[derive(Debug, Clone)]
pub struct CoxeterGroup {
    system: CoxeterSystem,
    regular: CosetTable,
    /// `right[w * rank + i]` is the index of `w s_i`.
    right: Vec<u32>,
    cap: usize,
}

impl CoxeterGroup {
    pub fn new(system: CoxeterSystem) -> Result<Self> {
        CoxeterGroup::with_cap(system, DEFAULT_CAP)
    }

    pub fn with_cap(system: CoxeterSystem, cap: usize) -> Result<Self> {
        let regular = CosetTable::enumerate(&system, GenSet::EMPTY, cap)?;
        let rank = system.rank();
        let n = regular.len();
        // w s_i = w (s_i · e): replay w's word on the coset of s_i
        let mut right = vec![0u32; n * rank];
        for w in 0..n {
            let word = regular.min_rep_word(w)?;
            for i in 0..rank {
                right[w * rank + i] = regular.act_word(regular.act(0, i), &word) as u32;
            }
        }
        Ok(CoxeterGroup {
            system,
            regular,
            right,
            cap,
        })
    }

    pub fn builtin(name: &str) -> Result<Self> {
        CoxeterGroup::new(CoxeterSystem::builtin(name)?)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn order(&self) -> usize {
        self.regular.len()
    }

    pub fn regular(&self) -> &CosetTable {
        &self.regular
    }

    /// Enumerates `W / W_I` under the same cap as the group.
    pub fn quotient(&self, subset: GenSet) -> Result<CosetTable> {
        CosetTable::enumerate(&self.system, subset, self.cap)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            index: 0,
            word: vec![],
        }
    }

    pub fn element(&self, index: usize) -> Result<GroupElement> {
        Ok(GroupElement {
            index,
            word: self.regular.min_rep_word(index)?,
        })
    }

    /// The element spelled by an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> GroupElement {
        self.element(self.regular.act_word(0, word))
            .expect("index in range")
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        self.from_word(&[i])
    }

    #[inline]
    pub fn length(&self, index: usize) -> usize {
        self.regular.depth(index)
    }

    #[inline]
    pub fn left_mul(&self, gen: usize, w: usize) -> usize {
        self.regular.act(w, gen)
    }

    #[inline]
    pub fn right_mul(&self, w: usize, gen: usize) -> usize {
        self.right[w * self.rank() + gen] as usize
    }

    /// Index of `u v`.
    pub fn multiply(&self, u: usize, v: usize) -> usize {
        let word = self.regular.min_rep_word(u).expect("index in range");
        self.regular.act_word(v, &word)
    }

    pub fn inverse(&self, w: usize) -> usize {
        let mut word = self.regular.min_rep_word(w).expect("index in range");
        word.reverse();
        self.regular.act_word(0, &word)
    }

    /// `u v u^{-1}`.
    pub fn conjugate(&self, u: usize, v: usize) -> usize {
        self.multiply(self.multiply(u, v), self.inverse(u))
    }

    /// Left and right descent sets.
    pub fn descent_sets(&self, w: usize) -> (GenSet, GenSet) {
        let l = self.length(w);
        let mut left = GenSet::EMPTY;
        let mut right = GenSet::EMPTY;
        for i in 0..self.rank() {
            if self.length(self.left_mul(i, w)) < l {
                left.insert(i);
            }
            if self.length(self.right_mul(w, i)) < l {
                right.insert(i);
            }
        }
        (left, right)
    }

    /// Bruhat comparison by the lifting recursion: for `s` in `D_L(w)`,
    /// `u ≤ w` iff `su ≤ sw` (when `s` is in `D_L(u)`) or `u ≤ sw`.
    pub fn bruhat_leq(&self, u: usize, w: usize) -> bool {
        let (mut u, mut w) = (u, w);
        loop {
            if u == 0 {
                return true;
            }
            let lu = self.length(u);
            let lw = self.length(w);
            if lu > lw || (lu == lw && u != w) {
                return false;
            }
            if u == w {
                return true;
            }
            // w is not the identity here since ℓ(w) > ℓ(u) > 0
            let s = self.regular.parent_generator(w).expect("nonidentity");
            let sw = self.left_mul(s, w);
            let su = self.left_mul(s, u);
            if self.length(su) < lu {
                u = su;
            }
            w = sw;
        }
    }

    /// All reflections, sorted by (length, canonical word).
    pub fn reflections(&self) -> Vec<Reflection> {
        let mut seen = BTreeSet::new();
        for w in 0..self.order() {
            let winv = self.inverse(w);
            for i in 0..self.rank() {
                let ws = self.right_mul(w, i);
                seen.insert(self.multiply(ws, winv));
            }
        }
        let mut out: Vec<Reflection> = seen
            .into_iter()
            .map(|t| {
                let element = self.element(t).expect("index in range");
                Reflection {
                    support: element.support(),
                    element,
                }
            })
            .collect();
        out.sort_by(|a, b| {
            (a.element.len(), &a.element.word).cmp(&(b.element.len(), &b.element.word))
        });
        out
    }

    /// The reflection with the given element index, if it is one.
    pub fn reflection(&self, index: usize) -> Option<Reflection> {
        let len = self.length(index);
        if len % 2 == 0 || self.multiply(index, index) != 0 {
            return None;
        }
        let element = self.element(index).ok()?;
        Some(Reflection {
            support: element.support(),
            element,
        })
    }

    pub fn reflection_from_word(&self, word: &[usize]) -> Result<Reflection> {
        let idx = self.regular.act_word(0, word);
        self.reflection(idx).ok_or_else(|| {
            Error::BadInput(format!(
                "{} is not a reflection",
                self.system.format_word(word)
            ))
        })
    }

    /// Coset `w W_I` of the element `w` in `table`.
    pub fn project(&self, table: &CosetTable, w: usize) -> usize {
        let word = self.regular.min_rep_word(w).expect("index in range");
        table.act_word(0, &word)
    }

    /// Regular-table index of the minimal representative of `coset`.
    pub fn min_rep(&self, table: &CosetTable, coset: usize) -> Result<usize> {
        Ok(self.regular.act_word(0, &table.min_rep_word(coset)?))
    }

    /// `w = w^I · w_I` with `w^I` minimal in its coset and `w_I ∈ W_I`.
    pub fn factorize(&self, table: &CosetTable, w: usize) -> (GroupElement, GroupElement) {
        let coset = self.project(table, w);
        let quotient = self.min_rep(table, coset).expect("coset in range");
        let parabolic = self.multiply(self.inverse(quotient), w);
        (
            self.element(quotient).expect("index"),
            self.element(parabolic).expect("index"),
        )
    }

    /// Elements whose support lies in `subset`, i.e. the parabolic
    /// subgroup `W_I`.
    pub fn parabolic_elements(&self, subset: GenSet) -> Vec<usize> {
        // W_I is the connected component of e under s ∈ I
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut out = Vec::new();
        while let Some(w) = stack.pop() {
            out.push(w);
            for i in subset.iter() {
                let v = self.left_mul(i, w);
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CoxeterGroup {
        CoxeterGroup::builtin("A2").unwrap()
    }

    fn idx(g: &CoxeterGroup, word: &[usize]) -> usize {
        g.from_word(word).index
    }

    #[test]
    fn a2_reflections() {
        let g = a2();
        let t = g.reflections();
        let words: Vec<_> = t.iter().map(|r| r.word().to_vec()).collect();
        assert_eq!(words, vec![vec![0], vec![1], vec![0, 1, 0]]);
        let i22 = CoxeterGroup::builtin("I2(2)").unwrap();
        assert_eq!(i22.reflections().len(), 2);
        assert_eq!(CoxeterGroup::builtin("F4").unwrap().reflections().len(), 24);
    }

    #[test]
    fn support_and_descents() {
        let g = a2();
        assert_eq!(g.identity().support(), GenSet::EMPTY);
        assert_eq!(g.generator(0).support(), GenSet::single(0));
        assert_eq!(g.from_word(&[1, 0, 1]).support(), GenSet::full(2));
        assert_eq!(g.descent_sets(0), (GenSet::EMPTY, GenSet::EMPTY));
        let s1 = idx(&g, &[0]);
        assert_eq!(g.descent_sets(s1), (GenSet::single(0), GenSet::single(0)));
        let s1s2 = idx(&g, &[0, 1]);
        assert_eq!(g.descent_sets(s1s2), (GenSet::single(0), GenSet::single(1)));
    }

    #[test]
    fn bruhat_examples() {
        let g = a2();
        for w in 0..6 {
            assert!(g.bruhat_leq(0, w));
        }
        assert!(g.bruhat_leq(idx(&g, &[0]), idx(&g, &[0, 1])));
        assert!(!g.bruhat_leq(idx(&g, &[0, 1]), idx(&g, &[1, 0])));
        assert!(!g.bruhat_leq(idx(&g, &[0, 1]), idx(&g, &[0])));
    }

    #[test]
    fn factorize_examples() {
        let g = a2();
        let q = g.quotient(GenSet::single(0)).unwrap();
        let (wq, wp) = g.factorize(&q, 0);
        assert!(wq.is_identity() && wp.is_identity());
        let (wq, wp) = g.factorize(&q, idx(&g, &[1, 0]));
        assert_eq!((wq.word, wp.word), (vec![1], vec![0]));
        let (wq, wp) = g.factorize(&q, idx(&g, &[0, 1, 0]));
        assert_eq!((wq.word, wp.word), (vec![0, 1], vec![0]));
    }

    #[test]
    fn multiplication_is_consistent() {
        let g = CoxeterGroup::builtin("B3").unwrap();
        for u in 0..g.order() {
            assert_eq!(g.multiply(u, g.inverse(u)), 0);
            for i in 0..g.rank() {
                assert_eq!(g.right_mul(u, i), g.multiply(u, g.generator(i).index));
                assert_eq!(g.left_mul(i, u), g.multiply(g.generator(i).index, u));
            }
        }
    }

    #[test]
    fn parabolic_subgroup_orders() {
        let g = CoxeterGroup::builtin("F4").unwrap();
        assert_eq!(
            g.parabolic_elements(GenSet::from_indices([1, 2, 3])).len(),
            48
        );
        assert_eq!(g.parabolic_elements(GenSet::from_indices([1, 2])).len(), 8);
        assert_eq!(g.parabolic_elements(GenSet::EMPTY), vec![0]);
    }
}
