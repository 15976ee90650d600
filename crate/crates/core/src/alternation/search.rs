use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{AltMode, Bijection, Sign, SignVector, SignedPair, SignedProperty};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

/// `alt(P,σ)`. `value` is `None` when every sign vector lands in `P`
/// (including the zero vector); reports render that as `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltOutcome {
    pub value: Option<usize>,
    /// A maximizing sign vector, when one exists.
    pub witness: Option<SignVector>,
}

impl AltOutcome {
    /// Integer-typed value with `-1` standing for "all vectors in P".
    pub fn reported(&self) -> i64 {
        self.value.map_or(-1, |v| v as i64)
    }

    pub fn all_in_property(&self) -> bool {
        self.value.is_none()
    }
}

/// `alt(P,σ) = max{ alt(X) : X_σ ∉ P }` by depth-first enumeration of
/// `{+,−,0}^n`, cutting any prefix whose alternation plus remaining length
/// cannot beat the best value found.
pub fn alt_property(p: &dyn SignedProperty, sigma: &Bijection) -> Result<AltOutcome> {
    let n = p.ground_size();
    if sigma.len() != n {
        return Err(Error::domain(format!(
            "bijection has length {}, property is over {n} vertices",
            sigma.len()
        )));
    }
    let mut st = PropertyDfs {
        p,
        sigma,
        best: None,
        best_x: None,
        current: vec![Sign::Zero; n],
    };
    st.run(0, SignedPair::default(), 0, Sign::Zero);
    Ok(AltOutcome {
        value: st.best,
        witness: st.best_x.map(SignVector::new),
    })
}

struct PropertyDfs<'a> {
    p: &'a dyn SignedProperty,
    sigma: &'a Bijection,
    best: Option<usize>,
    best_x: Option<Vec<Sign>>,
    current: Vec<Sign>,
}

impl PropertyDfs<'_> {
    fn beats(&self, bound: usize) -> bool {
        self.best.is_none_or(|b| bound > b)
    }

    fn run(&mut self, pos: usize, pair: SignedPair, alt: usize, last: Sign) {
        let n = self.current.len();
        if !self.beats(alt + (n - pos)) || self.best == Some(n) {
            return;
        }
        if pos == n {
            if !self.p.contains(pair) {
                self.best = Some(alt);
                self.best_x = Some(self.current.clone());
            }
            return;
        }
        let v = self.sigma.image(pos);
        // the sign that extends the alternation goes first
        let first = if last == Sign::Plus { Sign::Minus } else { Sign::Plus };
        for s in [first, first.negate(), Sign::Zero] {
            self.current[pos] = s;
            let (next_pair, next_alt, next_last) = match s {
                Sign::Zero => (pair, alt, last),
                Sign::Plus => {
                    let mut q = pair;
                    q.plus.insert(v);
                    (q, alt + usize::from(last != Sign::Plus), Sign::Plus)
                }
                Sign::Minus => {
                    let mut q = pair;
                    q.minus.insert(v);
                    (q, alt + usize::from(last != Sign::Minus), Sign::Minus)
                }
            };
            self.run(pos + 1, next_pair, next_alt, next_last);
        }
        self.current[pos] = Sign::Zero;
    }
}

/// `alt(H,σ)` or `salt(H,σ)` together with a maximizing sign vector.
///
/// This is the direct route: a side is abandoned the moment it swallows an
/// edge (mode alt) or both sides have (mode salt), since sides only grow along
/// a branch.
pub fn hypergraph_alternation(h: &Hypergraph, sigma: &Bijection, mode: AltMode) -> Result<(usize, SignVector)> {
    if sigma.len() != h.vertex_count() {
        return Err(Error::domain(format!(
            "bijection has length {}, hypergraph has {} vertices",
            sigma.len(),
            h.vertex_count()
        )));
    }
    let ctx = EdgeIndex::new(h);
    let (value, x) = ctx.max_alternation(sigma.images(), mode, None);
    Ok((value, x.expect("zero vector always qualifies")))
}

pub fn alt_hypergraph(h: &Hypergraph, sigma: &Bijection) -> Result<usize> {
    hypergraph_alternation(h, sigma, AltMode::Alt).map(|(v, _)| v)
}

pub fn salt_hypergraph(h: &Hypergraph, sigma: &Bijection) -> Result<usize> {
    hypergraph_alternation(h, sigma, AltMode::Salt).map(|(v, _)| v)
}

/// Edges grouped by vertex, so adding a vertex to a side only rechecks the
/// edges through it.
struct EdgeIndex {
    incident: Vec<Vec<VertexSet>>,
}

impl EdgeIndex {
    fn new(h: &Hypergraph) -> Self {
        let mut incident = vec![Vec::new(); h.vertex_count()];
        for &e in h.edges() {
            for v in e.iter() {
                incident[v].push(e);
            }
        }
        EdgeIndex { incident }
    }

    #[inline]
    fn closes_edge(&self, side: VertexSet, v: usize) -> bool {
        let grown = side.union(VertexSet::singleton(v));
        self.incident[v].iter().any(|e| e.is_subset(grown))
    }

    /// Maximum alternation over sign vectors supported on the positions of
    /// `order` (a prefix of a bijection is allowed). With `stop_at`, returns
    /// as soon as a value `≥ stop_at` is seen.
    fn max_alternation(&self, order: &[usize], mode: AltMode, stop_at: Option<usize>) -> (usize, Option<SignVector>) {
        let mut st = EdgeDfs {
            idx: self,
            order,
            mode,
            stop_at: stop_at.unwrap_or(usize::MAX),
            best: 0,
            best_x: None,
            current: vec![Sign::Zero; order.len()],
        };
        st.run(0, VertexSet::EMPTY, VertexSet::EMPTY, false, false, 0, Sign::Zero);
        (st.best, st.best_x.map(SignVector::new))
    }
}

struct EdgeDfs<'a> {
    idx: &'a EdgeIndex,
    order: &'a [usize],
    mode: AltMode,
    stop_at: usize,
    best: usize,
    best_x: Option<Vec<Sign>>,
    current: Vec<Sign>,
}

impl EdgeDfs<'_> {
    fn done(&self) -> bool {
        self.best >= self.stop_at || self.best == self.order.len()
    }

    #[allow(clippy::too_many_arguments)]
    fn run(
        &mut self,
        pos: usize,
        plus: VertexSet,
        minus: VertexSet,
        plus_hit: bool,
        minus_hit: bool,
        alt: usize,
        last: Sign,
    ) {
        let remaining = self.order.len() - pos;
        if self.best_x.is_some() && alt + remaining <= self.best {
            return;
        }
        if pos == self.order.len() {
            if self.best_x.is_none() || alt > self.best {
                self.best = alt;
                self.best_x = Some(self.current.clone());
            }
            return;
        }
        let v = self.order[pos];
        let first = if last == Sign::Plus { Sign::Minus } else { Sign::Plus };
        for s in [first, first.negate(), Sign::Zero] {
            if self.done() {
                break;
            }
            self.current[pos] = s;
            match s {
                Sign::Zero => self.run(pos + 1, plus, minus, plus_hit, minus_hit, alt, last),
                Sign::Plus => {
                    let hit = plus_hit || self.idx.closes_edge(plus, v);
                    if self.allowed(hit, minus_hit) {
                        let step = usize::from(last != Sign::Plus);
                        self.run(pos + 1, plus.union(VertexSet::singleton(v)), minus, hit, minus_hit, alt + step, Sign::Plus);
                    }
                }
                Sign::Minus => {
                    let hit = minus_hit || self.idx.closes_edge(minus, v);
                    if self.allowed(plus_hit, hit) {
                        let step = usize::from(last != Sign::Minus);
                        self.run(pos + 1, plus, minus.union(VertexSet::singleton(v)), plus_hit, hit, alt + step, Sign::Minus);
                    }
                }
            }
        }
        self.current[pos] = Sign::Zero;
    }

    #[inline]
    fn allowed(&self, plus_hit: bool, minus_hit: bool) -> bool {
        match self.mode {
            AltMode::Alt => !plus_hit && !minus_hit,
            AltMode::Salt => !(plus_hit && minus_hit),
        }
    }
}

/// Search configuration for [`alt_min`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Minimize over all `n!` bijections when `n` is at most this.
    pub exhaustive_threshold: usize,
    /// Annealing steps used above the threshold.
    pub anneal_steps: usize,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            exhaustive_threshold: 8,
            anneal_steps: 2000,
            seed: 0x5eed,
        }
    }
}

/// `min_σ alt(H,σ)` (or `salt`). When `exact` is false the value comes from
/// local search and is only an upper bound on the true minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltMin {
    pub value: usize,
    pub sigma: Bijection,
    pub exact: bool,
}

/// Minimize the alternation number over bijections.
///
/// Exhaustive mode is a branch and bound over position prefixes: fixing the
/// first `j` positions already forces `alt(H,σ)` to be at least the best
/// alternation supported on them, so such prefixes are dropped once that
/// reaches the incumbent. Reversing `σ` preserves the value, so only orders
/// with `σ(0) < σ(n−1)` are completed. The first position is split across
/// threads; ties are broken towards the lexicographically smallest `σ`, so the
/// result does not depend on the thread count.
pub fn alt_min(h: &Hypergraph, mode: AltMode, budget: &SearchBudget) -> AltMin {
    let n = h.vertex_count();
    let identity = Bijection::identity(n);
    if h.edge_count() == 0 || n <= 1 {
        let value = if h.edge_count() == 0 {
            n
        } else {
            EdgeIndex::new(h).max_alternation(identity.images(), mode, None).0
        };
        return AltMin { value, sigma: identity, exact: true };
    }
    let idx = EdgeIndex::new(h);
    let base = idx.max_alternation(identity.images(), mode, None).0;
    if n <= budget.exhaustive_threshold {
        let best = (0..n)
            .into_par_iter()
            .filter_map(|first| {
                let mut bb = PermutationSearch {
                    idx: &idx,
                    mode,
                    n,
                    best: base,
                    best_order: None,
                    order: vec![first],
                    used: VertexSet::singleton(first),
                };
                bb.descend();
                bb.best_order.map(|o| (bb.best, o))
            })
            .min();
        return match best {
            Some((value, order)) if value < base => AltMin {
                value,
                sigma: Bijection::new(order).expect("search builds permutations"),
                exact: true,
            },
            _ => AltMin { value: base, sigma: identity, exact: true },
        };
    }
    anneal(&idx, n, mode, base, budget)
}

struct PermutationSearch<'a> {
    idx: &'a EdgeIndex,
    mode: AltMode,
    n: usize,
    best: usize,
    best_order: Option<Vec<usize>>,
    order: Vec<usize>,
    used: VertexSet,
}

impl PermutationSearch<'_> {
    fn descend(&mut self) {
        if self.best == 0 {
            return;
        }
        // prefix lower bound: stop as soon as it reaches the incumbent
        let (lb, _) = self.idx.max_alternation(&self.order, self.mode, Some(self.best));
        if lb >= self.best {
            return;
        }
        if self.order.len() == self.n {
            self.best = lb;
            self.best_order = Some(self.order.clone());
            return;
        }
        let last_slot = self.order.len() + 1 == self.n;
        for v in 0..self.n {
            if self.used.contains(v) || (last_slot && v < self.order[0]) {
                continue;
            }
            self.order.push(v);
            self.used.insert(v);
            self.descend();
            self.order.pop();
            self.used = self.used.difference(VertexSet::singleton(v));
        }
    }
}

/// Simulated annealing over adjacent transpositions, deterministic for a seed.
fn anneal(idx: &EdgeIndex, n: usize, mode: AltMode, base: usize, budget: &SearchBudget) -> AltMin {
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut value = base;
    let mut best = (base, order.clone());
    let steps = budget.anneal_steps.max(1);
    let t0 = 1.0f64;
    let t1 = 0.02f64;
    for step in 0..steps {
        if best.0 == 0 {
            break;
        }
        let temp = t0 * (t1 / t0).powf(step as f64 / steps as f64);
        let i = rng.gen_range(0..n - 1);
        order.swap(i, i + 1);
        let candidate = idx.max_alternation(&order, mode, None).0;
        let delta = candidate as f64 - value as f64;
        if delta <= 0.0 || rng.gen::<f64>() < (-delta / temp).exp() {
            value = candidate;
            if (value, &order) < (best.0, &best.1) {
                best = (value, order.clone());
            }
        } else {
            order.swap(i, i + 1);
        }
    }
    AltMin {
        value: best.0,
        sigma: Bijection::new(best.1).expect("swaps keep a permutation"),
        exact: false,
    }
}
