//! Consistency audit of an enumerated group against standard Coxeter
//! group laws. A failure here means an engine bug, not a user error.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cosets::CosetTable;
use crate::error::Result;
use crate::group::CoxeterGroup;
use crate::system::GenSet;

/// Trials per law in sampled mode.
pub const SAMPLED_TRIALS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: &'static str,
    pub checked: usize,
    pub failures: usize,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub system: String,
    pub exhaustive: bool,
    pub seed: u64,
    pub laws: Vec<LawResult>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawResult::passed)
    }
}

/// Elements below `w` in Bruhat order, computed as products of subwords
/// of one reduced word of `w`.
pub fn subword_below(group: &CoxeterGroup, w: usize) -> Vec<bool> {
    let word = group.regular().min_rep_word(w).expect("index in range");
    let mut below = vec![false; group.order()];
    below[0] = true;
    let mut reached = vec![0usize];
    for &a in &word {
        let grown: Vec<usize> = reached.iter().map(|&x| group.right_mul(x, a)).collect();
        for y in grown {
            if !below[y] {
                below[y] = true;
                reached.push(y);
            }
        }
    }
    below
}

/// Minimal-representative projection `w ↦ w^I` over the whole group.
fn projection(group: &CoxeterGroup, table: &CosetTable) -> Vec<usize> {
    let reps: Vec<usize> = (0..table.len())
        .map(|c| group.min_rep(table, c).expect("coset"))
        .collect();
    (0..group.order())
        .map(|w| reps[group.project(table, w)])
        .collect()
}

struct Ctx<'a> {
    group: &'a CoxeterGroup,
    words: Vec<Vec<usize>>,
    refl: Vec<usize>,
    inverse: Vec<usize>,
}

impl Ctx<'_> {
    fn len(&self, w: usize) -> usize {
        self.group.length(w)
    }

    fn mul(&self, u: usize, v: usize) -> usize {
        self.group.regular().act_word(v, &self.words[u])
    }

    fn eval(&self, word: &[usize]) -> usize {
        self.group.regular().act_word(0, word)
    }

    fn parity(&self, t: usize, w: usize) -> bool {
        (self.len(self.mul(t, w)) + self.len(w)) % 2 == 1
    }

    fn strong_exchange(&self, t: usize, w: usize) -> Option<bool> {
        let tw = self.mul(t, w);
        if self.len(tw) >= self.len(w) {
            return None;
        }
        let word = &self.words[w];
        Some((0..word.len()).any(|i| {
            let mut d = word.clone();
            d.remove(i);
            self.eval(&d) == tw
        }))
    }

    fn deletion(&self, word: &[usize]) -> Option<bool> {
        let w = self.eval(word);
        if self.len(w) == word.len() {
            return None;
        }
        let k = word.len();
        Some((0..k).any(|i| {
            (i + 1..k).any(|j| {
                let d: Vec<usize> = word
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != i && p != j)
                    .map(|(_, &a)| a)
                    .collect();
                self.eval(&d) == w
            })
        }))
    }

    /// For `u < w` and `s ∈ D_L(w) \ D_L(u)`: `u ≤ sw` and `su ≤ w`.
    fn lifting(&self, u: usize, w: usize, below_w: &[bool]) -> Option<bool> {
        if u == w || !below_w[u] {
            return None;
        }
        let g = self.group;
        let mut checked = None;
        for s in 0..g.rank() {
            let sw = g.left_mul(s, w);
            let su = g.left_mul(s, u);
            if self.len(sw) < self.len(w) && self.len(su) > self.len(u) {
                let ok = g.bruhat_leq(u, sw) && g.bruhat_leq(su, w);
                checked = Some(checked.unwrap_or(true) && ok);
            }
        }
        checked
    }

    /// For `u < w`, some reflection `t` has `ℓ(tu) = ℓ(u) + 1` and `tu ≤ w`.
    fn chain(&self, u: usize, w: usize, below_w: &[bool]) -> Option<bool> {
        if u == w || !below_w[u] {
            return None;
        }
        let lu = self.len(u);
        Some(self.refl.iter().any(|&t| {
            let tu = self.mul(t, u);
            self.len(tu) == lu + 1 && below_w[tu]
        }))
    }
}

/// Runs every law. The audit is exhaustive when `|W|^2 * rank` fits in
/// `budget`, otherwise each law is sampled with a ChaCha RNG seeded by
/// `seed`.
pub fn axiom_audit(group: &CoxeterGroup, budget: u64, seed: u64) -> Result<AuditReport> {
    let n = group.order();
    let words: Vec<Vec<usize>> = (0..n)
        .map(|w| group.regular().min_rep_word(w))
        .collect::<Result<_>>()?;
    let refl: Vec<usize> = group.reflections().iter().map(|t| t.index()).collect();
    let mut ctx = Ctx {
        group,
        words,
        refl,
        inverse: Vec::new(),
    };
    ctx.inverse = (0..n).map(|w| group.inverse(w)).collect();
    let rank = group.rank();
    let exhaustive = (n as u64)
        .saturating_mul(n as u64)
        .saturating_mul(rank.max(1) as u64)
        <= budget;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut laws = Vec::new();
    let mut tally = |law: &'static str, results: &mut dyn Iterator<Item = bool>| {
        let mut checked = 0;
        let mut failures = 0;
        for ok in results {
            checked += 1;
            failures += usize::from(!ok);
        }
        laws.push(LawResult {
            law,
            checked,
            failures,
        });
    };

    // pairs (t, w) and (u, w)
    let tw_pairs: Vec<(usize, usize)> = if exhaustive {
        ctx.refl
            .iter()
            .flat_map(|&t| (0..n).map(move |w| (t, w)))
            .collect()
    } else {
        (0..SAMPLED_TRIALS)
            .map(|_| {
                (
                    ctx.refl[rng.gen_range(0..ctx.refl.len())],
                    rng.gen_range(0..n),
                )
            })
            .collect()
    };
    let mut below_cache: Vec<Option<Vec<bool>>> = vec![None; n];
    let uw_pairs: Vec<(usize, usize)> = if exhaustive {
        (0..n).flat_map(|w| (0..n).map(move |u| (u, w))).collect()
    } else {
        // draw u as a random subword of w half the time, and keep drawing
        // until the conditional laws each have SAMPLED_TRIALS instances
        let mut pairs = Vec::new();
        let (mut lifting, mut chain) = (0, 0);
        let mut i = 0usize;
        while (pairs.len() < SAMPLED_TRIALS || lifting < SAMPLED_TRIALS || chain < SAMPLED_TRIALS)
            && i < 50 * SAMPLED_TRIALS
        {
            let w = rng.gen_range(0..n);
            let u = if i % 2 == 0 {
                let sub: Vec<usize> = ctx.words[w]
                    .iter()
                    .copied()
                    .filter(|_| rng.gen_bool(0.5))
                    .collect();
                ctx.eval(&sub)
            } else {
                rng.gen_range(0..n)
            };
            i += 1;
            let below = below_cache[w].get_or_insert_with(|| subword_below(group, w));
            lifting += usize::from(ctx.lifting(u, w, below).is_some());
            chain += usize::from(ctx.chain(u, w, below).is_some());
            pairs.push((u, w));
        }
        pairs
    };
    for &(_, w) in &uw_pairs {
        if below_cache[w].is_none() {
            below_cache[w] = Some(subword_below(group, w));
        }
    }
    let below = |w: usize| below_cache[w].as_deref().expect("cached");

    tally(
        "parity",
        &mut tw_pairs.iter().map(|&(t, w)| ctx.parity(t, w)),
    );
    tally(
        "inverse",
        &mut (0..n)
            .map(|w| ctx.mul(w, ctx.inverse[w]) == 0 && ctx.len(ctx.inverse[w]) == ctx.len(w)),
    );
    // a pair with ℓ(tw) > ℓ(w) is replaced by (t, tw), which descends
    let descending: Vec<(usize, usize)> = tw_pairs
        .iter()
        .map(|&(t, w)| {
            let tw = ctx.mul(t, w);
            if exhaustive || ctx.len(tw) < ctx.len(w) {
                (t, w)
            } else {
                (t, tw)
            }
        })
        .collect();
    tally(
        "strong_exchange",
        &mut descending
            .iter()
            .filter_map(|&(t, w)| ctx.strong_exchange(t, w)),
    );

    let deletion_words: Vec<Vec<usize>> = if exhaustive {
        (0..n)
            .flat_map(|w| {
                let ctx = &ctx;
                (0..rank)
                    .filter(move |&s| ctx.len(group.left_mul(s, w)) < ctx.len(w))
                    .map(move |s| {
                        let mut word = vec![s];
                        word.extend_from_slice(&ctx.words[w]);
                        word
                    })
            })
            .collect()
    } else {
        // random words, plus s · (reduced word of w) with s a left descent
        let max = ctx.words.iter().map(Vec::len).max().unwrap_or(0) + 2;
        (0..SAMPLED_TRIALS)
            .map(|i| {
                let w = rng.gen_range(1..n.max(2)).min(n - 1);
                let descents: Vec<usize> = (0..rank)
                    .filter(|&s| ctx.len(group.left_mul(s, w)) < ctx.len(w))
                    .collect();
                let k = rng.gen_range(2..=max.max(2));
                let random: Vec<usize> = (0..k).map(|_| rng.gen_range(0..rank)).collect();
                let reduced = ctx.len(ctx.eval(&random)) == random.len();
                if (i % 2 == 0 || reduced) && !descents.is_empty() {
                    let mut word = vec![descents[rng.gen_range(0..descents.len())]];
                    word.extend_from_slice(&ctx.words[w]);
                    word
                } else {
                    random
                }
            })
            .collect()
    };
    tally(
        "deletion",
        &mut deletion_words.iter().filter_map(|word| ctx.deletion(word)),
    );

    tally(
        "subword_bruhat",
        &mut uw_pairs
            .iter()
            .map(|&(u, w)| group.bruhat_leq(u, w) == below(w)[u]),
    );
    tally(
        "lifting",
        &mut uw_pairs
            .iter()
            .filter_map(|&(u, w)| ctx.lifting(u, w, below(w))),
    );
    tally(
        "chain",
        &mut uw_pairs
            .iter()
            .filter_map(|&(u, w)| ctx.chain(u, w, below(w))),
    );

    // laws involving a parabolic subgroup, one maximal and one smaller I
    let mut subsets: Vec<GenSet> = Vec::new();
    for i in 0..rank {
        subsets.push(GenSet::full(rank).difference(GenSet::single(i)));
    }
    if rank >= 2 {
        subsets.push(GenSet::single(0));
    }
    let mut additivity = Vec::new();
    let mut projection_ok = Vec::new();
    let mut quotient_chain = Vec::new();
    for &subset in &subsets {
        let table = group.quotient(subset)?;
        let proj = projection(group, &table);
        for w in 0..n {
            let wi = proj[w];
            let wp = ctx.mul(ctx.inverse[wi], w);
            let support_ok = ctx.words[wp].iter().all(|&a| subset.contains(a));
            additivity.push(
                support_ok && ctx.len(w) == ctx.len(wi) + ctx.len(wp) && ctx.mul(wi, wp) == w,
            );
        }
        for &(u, w) in &uw_pairs {
            if below(w)[u] {
                projection_ok.push(group.bruhat_leq(proj[u], proj[w]));
            }
            // chain inside W^I between minimal representatives
            if proj[u] == u && proj[w] == w && u != w && below(w)[u] {
                let lu = ctx.len(u);
                quotient_chain.push(ctx.refl.iter().any(|&t| {
                    let tu = ctx.mul(t, u);
                    ctx.len(tu) == lu + 1 && proj[tu] == tu && below(w)[tu]
                }));
            }
        }
    }
    tally("factorization_additivity", &mut additivity.into_iter());
    tally("projection_order", &mut projection_ok.into_iter());
    tally("quotient_chain", &mut quotient_chain.into_iter());

    Ok(AuditReport {
        system: group.system().name().to_string(),
        exhaustive,
        seed,
        laws,
    })
}
