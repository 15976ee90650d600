use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SignedPair;
use crate::error::{Error, Result};
use crate::hypergraph::{stable_subsets, Hypergraph, VertexSet, MAX_VERTICES};

/// A family of signed pairs over a fixed vertex set `0..n`, given by its
/// membership predicate. The alternation machinery assumes the family is
/// superset-closed; [`check_superset_closed`] spot-checks that.
pub trait SignedProperty: Send + Sync {
    /// Size of the vertex set the pairs live on.
    fn ground_size(&self) -> usize;

    fn contains(&self, pair: SignedPair) -> bool;

    fn name(&self) -> String;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeCondition {
    /// At least one side contains an edge (`P₁`).
    SomeSide,
    /// Both sides contain an edge (`P₂`).
    BothSides,
}

/// The two properties a hypergraph induces: `P₁` (some side contains an
/// edge) realizes `alt(H,σ)`, `P₂` (both sides do) realizes `salt(H,σ)`.
#[derive(Clone, Debug)]
pub struct EdgeProperty {
    n: usize,
    edges: Vec<VertexSet>,
    condition: EdgeCondition,
}

impl EdgeProperty {
    pub fn new(h: &Hypergraph, condition: EdgeCondition) -> Self {
        EdgeProperty {
            n: h.vertex_count(),
            edges: h.edges().to_vec(),
            condition,
        }
    }

    pub fn p1(h: &Hypergraph) -> Self {
        Self::new(h, EdgeCondition::SomeSide)
    }

    pub fn p2(h: &Hypergraph) -> Self {
        Self::new(h, EdgeCondition::BothSides)
    }

    fn has_edge(&self, side: VertexSet) -> bool {
        self.edges.iter().any(|e| e.is_subset(side))
    }
}

impl SignedProperty for EdgeProperty {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn contains(&self, pair: SignedPair) -> bool {
        match self.condition {
            EdgeCondition::SomeSide => self.has_edge(pair.plus) || self.has_edge(pair.minus),
            EdgeCondition::BothSides => self.has_edge(pair.plus) && self.has_edge(pair.minus),
        }
    }

    fn name(&self) -> String {
        match self.condition {
            EdgeCondition::SomeSide => "p1".into(),
            EdgeCondition::BothSides => "p2".into(),
        }
    }
}

/// `P(n,k,s)`: each side contains `s/2` pairwise disjoint `s`-stable
/// `k`-subsets of `[n]`.
#[derive(Clone, Debug)]
pub struct StableMatchingProperty {
    n: usize,
    k: usize,
    s: usize,
    stable: Vec<VertexSet>,
}

/// Build `P(n,k,s)`. Only even `s` is meaningful.
pub fn property_pnks(n: usize, k: usize, s: usize) -> Result<StableMatchingProperty> {
    if s == 0 || !s.is_multiple_of(2) {
        return Err(Error::domain(format!("s must be a positive even integer, got {s}")));
    }
    if n == 0 || k == 0 {
        return Err(Error::domain("n and k must be at least 1"));
    }
    if n > MAX_VERTICES {
        return Err(Error::capacity(format!("n={n} exceeds the {MAX_VERTICES}-vertex limit")));
    }
    let mut stable = Vec::new();
    stable_subsets(n, k, s, &mut stable)?;
    Ok(StableMatchingProperty { n, k, s, stable })
}

impl StableMatchingProperty {
    pub fn params(&self) -> (usize, usize, usize) {
        (self.n, self.k, self.s)
    }

    /// Number of pairwise disjoint stable sets required on each side.
    pub fn required(&self) -> usize {
        self.s / 2
    }

    /// Whether `side` holds `required()` pairwise disjoint stable sets.
    pub fn side_qualifies(&self, side: VertexSet) -> bool {
        if side.len() < self.k * self.required() {
            return false;
        }
        let inside: Vec<VertexSet> = self.stable.iter().copied().filter(|e| e.is_subset(side)).collect();
        disjoint_pick(&inside, 0, VertexSet::EMPTY, self.required())
    }
}

fn disjoint_pick(sets: &[VertexSet], start: usize, used: VertexSet, left: usize) -> bool {
    if left == 0 {
        return true;
    }
    if sets.len() - start < left {
        return false;
    }
    (start..sets.len()).any(|i| {
        sets[i].is_disjoint(used) && disjoint_pick(sets, i + 1, used.union(sets[i]), left - 1)
    })
}

impl SignedProperty for StableMatchingProperty {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn contains(&self, pair: SignedPair) -> bool {
        self.side_qualifies(pair.plus) && self.side_qualifies(pair.minus)
    }

    fn name(&self) -> String {
        format!("pnks:{},{},{}", self.n, self.k, self.s)
    }
}

/// Property backed by an arbitrary predicate. Superset-closure is the
/// caller's responsibility.
pub struct FnProperty<F> {
    n: usize,
    name: String,
    predicate: F,
}

impl<F> FnProperty<F>
where
    F: Fn(SignedPair) -> bool + Send + Sync,
{
    pub fn new(n: usize, name: impl Into<String>, predicate: F) -> Self {
        FnProperty { n, name: name.into(), predicate }
    }
}

impl<F> SignedProperty for FnProperty<F>
where
    F: Fn(SignedPair) -> bool + Send + Sync,
{
    fn ground_size(&self) -> usize {
        self.n
    }

    fn contains(&self, pair: SignedPair) -> bool {
        (self.predicate)(pair)
    }

    fn name(&self) -> String {
        self.name.clone()
    }
}

/// Outcome of [`check_superset_closed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersetCheck {
    pub closed: bool,
    pub samples: usize,
    /// `(smaller, larger)` with `smaller ∈ P`, `smaller ⊆ larger`, `larger ∉ P`.
    pub counterexample: Option<(SignedPair, SignedPair)>,
}

/// Randomized monotonicity check. Each sample draws a uniform signed pair;
/// when it lies in `P`, every one-step extension and one random superset are
/// tested as well.
pub fn check_superset_closed(p: &dyn SignedProperty, samples: usize, seed: u64) -> SupersetCheck {
    let n = p.ground_size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let base = random_pair(n, VertexSet::EMPTY, VertexSet::EMPTY, &mut rng);
        if !p.contains(base) {
            continue;
        }
        let free = VertexSet::full(n).difference(base.support());
        for v in free.iter() {
            let one = VertexSet::singleton(v);
            for bigger in [
                SignedPair { plus: base.plus.union(one), minus: base.minus },
                SignedPair { plus: base.plus, minus: base.minus.union(one) },
            ] {
                if !p.contains(bigger) {
                    return SupersetCheck { closed: false, samples, counterexample: Some((base, bigger)) };
                }
            }
        }
        let bigger = random_pair(n, base.plus, base.minus, &mut rng);
        if !p.contains(bigger) {
            return SupersetCheck { closed: false, samples, counterexample: Some((base, bigger)) };
        }
    }
    SupersetCheck { closed: true, samples, counterexample: None }
}

/// Uniformly extend `(plus, minus)` by sending each free vertex to `+`, `−`
/// or `0`.
fn random_pair(n: usize, mut plus: VertexSet, mut minus: VertexSet, rng: &mut ChaCha8Rng) -> SignedPair {
    for v in 0..n {
        if plus.contains(v) || minus.contains(v) {
            continue;
        }
        match rng.gen_range(0..3u8) {
            0 => plus.insert(v),
            1 => minus.insert(v),
            _ => {}
        }
    }
    SignedPair { plus, minus }
}
