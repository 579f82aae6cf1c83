//! Coset enumeration for `W / W_I` over the Coxeter presentation.
//!
//! The enumerator is an HLT-style scan-and-fill with coincidence
//! processing. Generators are involutions, so every table column is its
//! own inverse and `s_i^2 = 1` never needs scanning. Once complete, the
//! live cosets are renumbered by breadth-first search from the subgroup
//! coset, visiting generators in index order.
//!
//! Words are lists of generator indices. A word `[a, b, c]` denotes the
//! element `s_a s_b s_c`; it acts on a coset by left multiplication, so
//! `c` is applied first. Right cosets `W_I x` are what the scan works
//! with, but since `W_I x s = (s x^{-1} W_I)^{-1}` the same table read as
//! a left action describes `W / W_I`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, GenSet};

/// Default working-coset cap, overridable per call.
pub const DEFAULT_CAP: usize = 1_000_000;

const NONE: u32 = u32::MAX;

/// A complete, canonically numbered coset table of `W / W_I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    rank: usize,
    subgroup: GenSet,
    /// `action[c * rank + i]` is the coset `s_i · c`.
    action: Vec<u32>,
    depth: Vec<u32>,
    /// Smallest generator that shortens the coset; `u32::MAX` for coset 0.
    parent: Vec<u32>,
}

impl CosetTable {
    /// Enumerates `W / W_I`. Fails with `CAP_EXCEEDED` when more than `cap`
    /// live cosets are needed at any point.
    pub fn enumerate(system: &CoxeterSystem, subgroup: GenSet, cap: usize) -> Result<Self> {
        if !subgroup.is_subset(system.all()) {
            return Err(Error::BadSubset(format!(
                "{subgroup:?} is not a subset of the generators of {}",
                system.name()
            )));
        }
        let rank = system.rank();
        let mut e = Enumerator::new(rank, cap.max(1));
        for i in subgroup.iter() {
            e.scan_and_fill(0, &[i])?;
        }
        let relators = system.relators();
        let mut c = 0usize;
        while c < e.live.len() {
            if e.is_live(c) {
                for rel in &relators {
                    e.scan_and_fill(c, rel)?;
                    if !e.is_live(c) {
                        break;
                    }
                }
                if e.is_live(c) {
                    for g in 0..rank {
                        if e.get(c, g) == NONE {
                            e.define(c, g)?;
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(e.compact(subgroup))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn subgroup(&self) -> GenSet {
        self.subgroup
    }

    pub fn len(&self) -> usize {
        self.depth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.depth.is_empty()
    }

    /// Always true: incomplete tables are never returned.
    pub fn is_complete(&self) -> bool {
        true
    }

    /// The coset `s_gen · coset`.
    #[inline]
    pub fn act(&self, coset: usize, gen: usize) -> usize {
        self.action[coset * self.rank + gen] as usize
    }

    /// Applies the element spelled by `word` to `coset` (last letter first).
    pub fn act_word(&self, coset: usize, word: &[usize]) -> usize {
        word.iter().rev().fold(coset, |c, &g| self.act(c, g))
    }

    /// Length of the minimal representative of `coset`.
    #[inline]
    pub fn depth(&self, coset: usize) -> usize {
        self.depth[coset] as usize
    }

    pub fn depths(&self) -> &[u32] {
        &self.depth
    }

    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn parent_generator(&self, coset: usize) -> Option<usize> {
        match self.parent[coset] {
            NONE => None,
            g => Some(g as usize),
        }
    }

    /// Lexicographically smallest reduced word of the minimal coset
    /// representative. Its first letter is the parent generator.
    pub fn min_rep_word(&self, coset: usize) -> Result<Vec<usize>> {
        if coset >= self.len() {
            return Err(Error::BadIndex(coset));
        }
        let mut word = Vec::with_capacity(self.depth(coset));
        let mut c = coset;
        while let Some(g) = self.parent_generator(c) {
            word.push(g);
            c = self.act(c, g);
        }
        Ok(word)
    }

    /// Permutation of the cosets induced by the element spelled by `word`.
    pub fn permutation(&self, word: &[usize]) -> Vec<usize> {
        (0..self.len()).map(|c| self.act_word(c, word)).collect()
    }

    /// Cosets grouped by depth, each level in ascending index order.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![Vec::new(); self.max_depth() + 1];
        for c in 0..self.len() {
            levels[self.depth(c)].push(c);
        }
        levels
    }
}

struct Enumerator {
    rank: usize,
    cap: usize,
    table: Vec<u32>,
    /// Union-find parent; `live[c] == c` for live cosets.
    live: Vec<u32>,
    live_count: usize,
    queue: Vec<usize>,
}

impl Enumerator {
    fn new(rank: usize, cap: usize) -> Self {
        Enumerator {
            rank,
            cap,
            table: vec![NONE; rank],
            live: vec![0],
            live_count: 1,
            queue: Vec::new(),
        }
    }

    fn is_live(&self, c: usize) -> bool {
        self.live[c] as usize == c
    }

    #[inline]
    fn get(&self, c: usize, g: usize) -> u32 {
        self.table[c * self.rank + g]
    }

    #[inline]
    fn set(&mut self, c: usize, g: usize, d: u32) {
        self.table[c * self.rank + g] = d;
    }

    fn define(&mut self, c: usize, g: usize) -> Result<()> {
        if self.live_count >= self.cap {
            return Err(Error::CapExceeded(self.cap));
        }
        let d = self.live.len();
        if d >= NONE as usize {
            return Err(Error::CapExceeded(self.cap));
        }
        self.live.push(d as u32);
        self.table.extend(std::iter::repeat_n(NONE, self.rank));
        self.live_count += 1;
        self.set(c, g, d as u32);
        self.set(d, g, c as u32);
        Ok(())
    }

    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<()> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0isize;
        let mut j = word.len() as isize - 1;
        loop {
            while i <= j && self.get(f, word[i as usize]) != NONE {
                f = self.get(f, word[i as usize]) as usize;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, word[j as usize]) != NONE {
                b = self.get(b, word[j as usize]) as usize;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                // deduction closes the scan
                let g = word[i as usize];
                self.set(f, g, b as u32);
                self.set(b, g, f as u32);
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.live[r] as usize != r {
            r = self.live[r] as usize;
        }
        let mut x = c;
        while self.live[x] as usize != r {
            let next = self.live[x] as usize;
            self.live[x] = r as u32;
            x = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.live[hi] = lo as u32;
        self.live_count -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut k = 0;
        while k < self.queue.len() {
            let e = self.queue[k];
            k += 1;
            for g in 0..self.rank {
                let f = self.get(e, g);
                if f == NONE {
                    continue;
                }
                let f = f as usize;
                // drop the back edge; s_g is its own inverse
                if self.get(f, g) as usize == e {
                    self.set(f, g, NONE);
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let x = self.get(e1, g);
                let y = self.get(f1, g);
                if x != NONE {
                    self.merge(f1, x as usize);
                } else if y != NONE {
                    self.merge(e1, y as usize);
                } else {
                    self.set(e1, g, f1 as u32);
                    self.set(f1, g, e1 as u32);
                }
            }
        }
    }

    fn compact(mut self, subgroup: GenSet) -> CosetTable {
        let rank = self.rank;
        // every live entry may still point at a dead coset
        let n_raw = self.live.len();
        let mut canon = vec![NONE; n_raw];
        let mut order = Vec::with_capacity(self.live_count);
        let mut queue = VecDeque::new();
        let root = self.rep(0);
        canon[root] = 0;
        order.push(root);
        queue.push_back(root);
        while let Some(c) = queue.pop_front() {
            for g in 0..rank {
                let d = self.get(c, g);
                debug_assert_ne!(d, NONE, "incomplete table after enumeration");
                let d = self.rep(d as usize);
                if canon[d] == NONE {
                    canon[d] = order.len() as u32;
                    order.push(d);
                    queue.push_back(d);
                }
            }
        }
        let n = order.len();
        let mut action = vec![0u32; n * rank];
        for (new, &old) in order.iter().enumerate() {
            for g in 0..rank {
                let d = self.get(old, g) as usize;
                let d = self.rep(d);
                action[new * rank + g] = canon[d];
            }
        }
        // BFS numbering already gives nondecreasing depth along `order`
        let mut depth = vec![NONE; n];
        depth[0] = 0;
        for c in 0..n {
            for g in 0..rank {
                let d = action[c * rank + g] as usize;
                if depth[d] == NONE {
                    depth[d] = depth[c] + 1;
                }
            }
        }
        let parent = (0..n)
            .map(|c| {
                (0..rank)
                    .find(|&g| depth[action[c * rank + g] as usize] < depth[c])
                    .map_or(NONE, |g| g as u32)
            })
            .collect();
        CosetTable {
            rank,
            subgroup,
            action,
            depth,
            parent,
        }
    }
}
