//! Hypergraphs over at most 64 vertices, the Kneser-representation families
//! `K_n^k` and the `s`-stable families, 2-colorability and colorability defect.
//!
//! Vertices are stored by dense index `0..n`; the caller-facing names live in
//! a parallel list whose order is significant (it fixes the identity
//! bijection used by the alternation module).

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a [`Hypergraph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Upper limit on generated edge families, to keep accidental huge
/// parameters from exhausting memory.
pub const MAX_GENERATED_EDGES: usize = 1 << 20;

/// A set of vertex indices in `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite hypergraph: an ordered list of named vertices and a family of
/// distinct nonempty edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    names: Vec<String>,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Validating constructor.
    pub fn new(names: Vec<String>, edges: Vec<VertexSet>) -> Result<Self> {
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(Error::capacity(format!(
                "hypergraph has {n} vertices, at most {MAX_VERTICES} are supported"
            )));
        }
        let mut seen = HashSet::with_capacity(n);
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::domain(format!("duplicate vertex identifier {name:?}")));
            }
        }
        let universe = VertexSet::full(n);
        let mut distinct = HashSet::with_capacity(edges.len());
        for e in &edges {
            if e.is_empty() {
                return Err(Error::domain("edges must be nonempty"));
            }
            if !e.is_subset(universe) {
                return Err(Error::domain(format!("edge {e:?} is not a subset of the vertex set")));
            }
            if !distinct.insert(*e) {
                return Err(Error::domain(format!("edge {e:?} appears twice")));
            }
        }
        Ok(Hypergraph { names, edges })
    }

    /// Hypergraph on vertices named `"1"..="n"`.
    pub fn on_range(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        Self::new(range_names(n), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn universe(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// True if some edge lies inside `side`.
    #[inline]
    pub fn has_edge_within(&self, side: VertexSet) -> bool {
        self.edges.iter().any(|e| e.is_subset(side))
    }

    /// Number of edges lying inside `side`.
    pub fn edges_within(&self, side: VertexSet) -> usize {
        self.edges.iter().filter(|e| e.is_subset(side)).count()
    }

    /// Render a vertex set with the external names, e.g. `{1,3}`.
    pub fn format_set(&self, set: VertexSet) -> String {
        let parts: Vec<&str> = set.iter().map(|v| self.names[v].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// `H[U]`: vertex set `U` (in the original order), edges of `H` inside `U`.
    pub fn induced(&self, subset: VertexSet) -> Result<Hypergraph> {
        if !subset.is_subset(self.universe()) {
            return Err(Error::domain(format!(
                "subset {subset:?} is not contained in the vertex set"
            )));
        }
        let kept: Vec<usize> = subset.iter().collect();
        let mut remap = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let names = kept.iter().map(|&v| self.names[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.is_subset(subset))
            .map(|e| VertexSet::from_indices(e.iter().map(|v| remap[v])))
            .collect();
        Ok(Hypergraph { names, edges })
    }

    /// `H[U]` with `U` given by vertex identifiers.
    pub fn induced_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Hypergraph> {
        let mut subset = VertexSet::EMPTY;
        for name in names {
            let name = name.as_ref();
            let v = self
                .index_of(name)
                .ok_or_else(|| Error::domain(format!("unknown vertex {name:?}")))?;
            subset.insert(v);
        }
        self.induced(subset)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: HypergraphJson =
            serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        raw.into_hypergraph()
    }

    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson {
            vertices: self.names.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| e.iter().map(|v| self.names[v].clone()).collect())
                .collect(),
        }
    }
}

/// On-disk hypergraph format. The order of `vertices` is significant.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HypergraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

impl HypergraphJson {
    pub fn into_hypergraph(self) -> Result<Hypergraph> {
        let index: HashMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        if self.vertices.len() > MAX_VERTICES {
            return Err(Error::capacity(format!(
                "hypergraph has {} vertices, at most {MAX_VERTICES} are supported",
                self.vertices.len()
            )));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for raw in &self.edges {
            let mut e = VertexSet::EMPTY;
            for name in raw {
                let v = index
                    .get(name.as_str())
                    .ok_or_else(|| Error::domain(format!("edge mentions unknown vertex {name:?}")))?;
                e.insert(*v);
            }
            edges.push(e);
        }
        Hypergraph::new(self.vertices, edges)
    }
}

pub(crate) fn range_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// `s ≤ |i−j| ≤ n−s` for every pair of distinct members (1-based positions on
/// a cycle of length `n`).
pub fn is_s_stable(set: VertexSet, n: usize, s: usize) -> bool {
    let members: Vec<usize> = set.iter().collect();
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a + 1..] {
            let gap = j - i;
            if gap < s || gap + s > n {
                return false;
            }
        }
    }
    true
}

/// `K_n^k`: vertex set `[n]`, every `k`-subset an edge.
pub fn complete_k_uniform(n: usize, k: usize) -> Result<Hypergraph> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    if n < k {
        return Err(Error::domain(format!("need n ≥ k, got n={n}, k={k}")));
    }
    check_capacity(n)?;
    let mut edges = Vec::new();
    stable_subsets(n, k, 1, &mut edges)?;
    Hypergraph::on_range(n, edges)
}

/// Vertex set `[n]`, edges the `s`-stable `k`-subsets. The family is empty
/// when `n < sk`.
pub fn s_stable_k_uniform(n: usize, k: usize, s: usize) -> Result<Hypergraph> {
    if n == 0 || k == 0 || s == 0 {
        return Err(Error::domain("n, k and s must all be at least 1"));
    }
    check_capacity(n)?;
    let mut edges = Vec::new();
    stable_subsets(n, k, s, &mut edges)?;
    Hypergraph::on_range(n, edges)
}

/// The 2-stable family `K̃_n^k` whose Kneser graph is the Schrijver graph.
pub fn schrijver_k_uniform(n: usize, k: usize) -> Result<Hypergraph> {
    s_stable_k_uniform(n, k, 2)
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::capacity(format!(
            "n={n} exceeds the {MAX_VERTICES}-vertex limit"
        )))
    } else {
        Ok(())
    }
}

/// All `s`-stable `k`-subsets of `[n]` in lexicographic order, as 0-based sets.
pub(crate) fn stable_subsets(n: usize, k: usize, s: usize, out: &mut Vec<VertexSet>) -> Result<()> {
    fn rec(
        n: usize,
        k: usize,
        s: usize,
        start: usize,
        first: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) -> Result<()> {
        if cur.len() == k {
            if out.len() >= MAX_GENERATED_EDGES {
                return Err(Error::capacity("generated family is too large"));
            }
            out.push(VertexSet::from_indices(cur.iter().copied()));
            return Ok(());
        }
        let need = k - cur.len() - 1;
        let mut v = start;
        while v + need * s < n {
            // wrap-around gap from the last element back to the first
            if !cur.is_empty() && v - first + s > n {
                break;
            }
            cur.push(v);
            let f = if cur.len() == 1 { v } else { first };
            rec(n, k, s, v + s, f, cur, out)?;
            cur.pop();
            v += 1;
        }
        Ok(())
    }
    if k > n {
        return Ok(());
    }
    let mut cur = Vec::with_capacity(k);
    rec(n, k, s, 0, 0, &mut cur, out)
}

/// A proper 2-coloring: `red` and its complement within the vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoColoring {
    pub red: VertexSet,
    pub blue: VertexSet,
}

/// Decide 2-colorability (no monochromatic edge). Returns a witness when one
/// exists. A hypergraph without edges is 2-colorable.
pub fn two_coloring(h: &Hypergraph) -> Option<TwoColoring> {
    two_color_within(h.edges(), h.universe())
}

pub fn is_two_colorable(h: &Hypergraph) -> bool {
    two_coloring(h).is_some()
}

/// 2-color the sub-hypergraph on `universe` whose edges are those of `edges`
/// contained in it.
pub(crate) fn two_color_within(edges: &[VertexSet], universe: VertexSet) -> Option<TwoColoring> {
    let live: Vec<VertexSet> = edges.iter().copied().filter(|e| e.is_subset(universe)).collect();
    if live.iter().any(|e| e.len() == 1) {
        return None;
    }
    let (red, blue) = color_rec(&live, universe, VertexSet::EMPTY, VertexSet::EMPTY, true)?;
    // Vertices untouched by the search go to red.
    let red = red.union(universe.difference(red.union(blue)));
    Some(TwoColoring { red, blue })
}

fn color_rec(
    edges: &[VertexSet],
    universe: VertexSet,
    mut red: VertexSet,
    mut blue: VertexSet,
    root: bool,
) -> Option<(VertexSet, VertexSet)> {
    // unit propagation
    loop {
        let mut changed = false;
        for &e in edges {
            if e.is_subset(red) || e.is_subset(blue) {
                return None;
            }
            let open = e.difference(red.union(blue));
            if open.len() == 1 {
                if e.intersection(blue).is_empty() {
                    blue = blue.union(open);
                    changed = true;
                } else if e.intersection(red).is_empty() {
                    red = red.union(open);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    // branch on a vertex of some edge that is not yet bichromatic
    let pending = edges.iter().find(|e| e.is_disjoint(red) || e.is_disjoint(blue));
    let Some(&edge) = pending else {
        return Some((red, blue));
    };
    let v = edge.difference(red.union(blue)).iter().next()?;
    debug_assert!(universe.contains(v));
    if let Some(found) = color_rec(edges, universe, red.union(VertexSet::singleton(v)), blue, false) {
        return Some(found);
    }
    if root && red.is_empty() && blue.is_empty() {
        // swapping the two colors of any coloring is a coloring
        return None;
    }
    color_rec(edges, universe, red, blue.union(VertexSet::singleton(v)), false)
}

/// Result of [`colorability_defect`]: the minimum size and one optimal
/// deletion set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Defect {
    pub value: usize,
    pub deleted: VertexSet,
}

/// `cd(H)`: the fewest vertices whose removal leaves a 2-colorable induced
/// subhypergraph.
///
/// Tries deletion sets of size 0, 1, 2, … and stops at the first size that
/// works, so the cost is `Σ_{t ≤ cd} C(n, t)` 2-colorability tests. Meant for
/// `n` up to about 20.
pub fn colorability_defect(h: &Hypergraph) -> Defect {
    let n = h.vertex_count();
    let universe = h.universe();
    for size in 0..=n {
        let mut found = None;
        for_each_combination(n, size, &mut |deleted| {
            if two_color_within(h.edges(), universe.difference(deleted)).is_some() {
                found = Some(deleted);
                false
            } else {
                true
            }
        });
        if let Some(deleted) = found {
            return Defect { value: size, deleted };
        }
    }
    unreachable!("deleting every vertex leaves an edgeless hypergraph")
}

/// Visit every `size`-subset of `0..n` in lexicographic order until the
/// callback returns `false`.
pub(crate) fn for_each_combination(n: usize, size: usize, f: &mut dyn FnMut(VertexSet) -> bool) {
    fn rec(n: usize, left: usize, start: usize, acc: VertexSet, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if left == 0 {
            return f(acc);
        }
        for v in start..=(n - left) {
            let mut next = acc;
            next.insert(v);
            if !rec(n, left - 1, v + 1, next, f) {
                return false;
            }
        }
        true
    }
    if size <= n {
        rec(n, size, 0, VertexSet::EMPTY, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[usize]) -> VertexSet {
        // 1-based in tests, matching the external names of on_range
        VertexSet::from_indices(items.iter().map(|i| i - 1))
    }

    fn brute_two_colorable(h: &Hypergraph, universe: VertexSet) -> bool {
        let verts: Vec<usize> = universe.iter().collect();
        let live: Vec<VertexSet> = h.edges().iter().copied().filter(|e| e.is_subset(universe)).collect();
        (0u64..1 << verts.len()).any(|mask| {
            let red = VertexSet::from_indices(
                verts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v),
            );
            let blue = universe.difference(red);
            live.iter().all(|e| !e.is_subset(red) && !e.is_subset(blue))
        })
    }

    fn brute_defect(h: &Hypergraph) -> usize {
        let n = h.vertex_count();
        (0u64..1 << n)
            .filter(|&d| brute_two_colorable(h, h.universe().difference(VertexSet(d))))
            .map(|d| d.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn complete_uniform_edge_counts() {
        assert_eq!(complete_k_uniform(5, 2).unwrap().edge_count(), 10);
        assert_eq!(complete_k_uniform(4, 4).unwrap().edge_count(), 1);
        assert_eq!(complete_k_uniform(6, 3).unwrap().edge_count(), 20);
        assert!(matches!(complete_k_uniform(2, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn stable_families() {
        let h = s_stable_k_uniform(6, 2, 2).unwrap();
        assert_eq!(h.edge_count(), 9);
        let h = s_stable_k_uniform(4, 2, 2).unwrap();
        assert_eq!(h.edges(), &[set(&[1, 3]), set(&[2, 4])]);
        let h = s_stable_k_uniform(7, 1, 3).unwrap();
        assert_eq!(h.edge_count(), 7);
        assert!(h.edges().iter().all(|e| e.len() == 1));
        // n < sk leaves nothing
        assert_eq!(s_stable_k_uniform(5, 3, 2).unwrap().edge_count(), 0);
    }

    #[test]
    fn stable_filter_matches_circular_gaps() {
        // independent oracle: sorted members, every cyclic gap at least s
        fn circular_ok(e: VertexSet, n: usize, s: usize) -> bool {
            let m: Vec<usize> = e.iter().collect();
            if m.len() < 2 {
                return true;
            }
            let wrap = n - m[m.len() - 1] + m[0];
            m.windows(2).all(|w| w[1] - w[0] >= s) && wrap >= s
        }
        for n in 1..=10 {
            for k in 1..=4.min(n) {
                for s in 1..=3 {
                    let all = complete_k_uniform(n, k).unwrap();
                    let expected: Vec<VertexSet> =
                        all.edges().iter().copied().filter(|&e| circular_ok(e, n, s)).collect();
                    let got = s_stable_k_uniform(n, k, s).unwrap();
                    assert_eq!(got.edges(), expected.as_slice(), "n={n} k={k} s={s}");
                    assert!(got.edges().iter().all(|&e| is_s_stable(e, n, s)));
                }
                assert_eq!(
                    s_stable_k_uniform(n, k, 1).unwrap().edges(),
                    complete_k_uniform(n, k).unwrap().edges()
                );
            }
        }
    }

    #[test]
    fn induced_subhypergraphs() {
        let h = complete_k_uniform(5, 2).unwrap();
        let sub = h.induced_by_names(&["1", "2", "3"]).unwrap();
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.edge_count(), 3);

        let empty = h.induced(VertexSet::EMPTY).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.edge_count(), 0);

        let sg = schrijver_k_uniform(6, 2).unwrap();
        let sub = sg.induced_by_names(&["1", "3", "5"]).unwrap();
        let shown: Vec<String> = sub.edges().iter().map(|&e| sub.format_set(e)).collect();
        assert_eq!(shown, vec!["{1,3}", "{1,5}", "{3,5}"]);

        assert!(matches!(h.induced_by_names(&["1", "9"]), Err(Error::Domain(_))));
        assert!(matches!(h.induced(VertexSet::singleton(7)), Err(Error::Domain(_))));
    }

    #[test]
    fn two_colorability_examples() {
        let singleton = Hypergraph::on_range(3, vec![set(&[2])]).unwrap();
        assert!(!is_two_colorable(&singleton));
        let edgeless = Hypergraph::on_range(4, vec![]).unwrap();
        assert!(is_two_colorable(&edgeless));
        let k52 = complete_k_uniform(5, 2).unwrap();
        assert!(!is_two_colorable(&k52));
        assert!(is_two_colorable(&k52.induced(set(&[1, 4])).unwrap()));
        assert!(!is_two_colorable(&k52.induced(set(&[1, 2, 4])).unwrap()));

        let fano_like = complete_k_uniform(5, 4).unwrap();
        let w = two_coloring(&fano_like).unwrap();
        for e in fano_like.edges() {
            assert!(!e.is_subset(w.red) && !e.is_subset(w.blue));
        }
        assert_eq!(w.red.union(w.blue), fano_like.universe());
    }

    #[test]
    fn defect_examples() {
        assert_eq!(colorability_defect(&Hypergraph::on_range(3, vec![]).unwrap()).value, 0);
        assert_eq!(colorability_defect(&complete_k_uniform(5, 2).unwrap()).value, 3);
        assert_eq!(colorability_defect(&complete_k_uniform(6, 2).unwrap()).value, 4);
    }

    #[test]
    fn defect_matches_brute_force_on_families() {
        for n in 2..=7 {
            for k in 1..=3.min(n) {
                for h in [complete_k_uniform(n, k).unwrap(), schrijver_k_uniform(n, k).unwrap()] {
                    let d = colorability_defect(&h);
                    assert_eq!(d.value, brute_defect(&h), "n={n} k={k}");
                    assert_eq!(d.deleted.len(), d.value);
                    assert!(brute_two_colorable(&h, h.universe().difference(d.deleted)));
                }
            }
        }
    }

    #[test]
    fn json_round_trip_keeps_order() {
        let text = r#"{"vertices": ["b", "a", "c"], "edges": [["a", "c"], ["b"]]}"#;
        let h = Hypergraph::from_json_str(text).unwrap();
        assert_eq!(h.names(), &["b", "a", "c"]);
        assert_eq!(h.edges(), &[VertexSet::from_indices([1, 2]), VertexSet::singleton(0)]);
        let back = Hypergraph::from_json_str(&serde_json::to_string(&h.to_json()).unwrap()).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(matches!(
            Hypergraph::from_json_str(r#"{"vertices": ["1"], "edges": [["2"]]}"#),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            Hypergraph::from_json_str(r#"{"vertices": ["1", "1"], "edges": []}"#),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            Hypergraph::from_json_str(r#"{"vertices": ["1"], "edges": [[]]}"#),
            Err(Error::Domain(_))
        ));
        let err = Hypergraph::from_json_str("{\"vertices\": [\n  1]}").unwrap_err();
        match err {
            Error::Parse(msg) => assert!(msg.contains("line 2"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        let names: Vec<String> = (0..65).map(|i| i.to_string()).collect();
        assert!(matches!(Hypergraph::new(names, vec![]), Err(Error::Capacity(_))));
    }
}
