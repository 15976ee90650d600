//! Exact chromatic numbers, graph homomorphisms and multichromatic numbers.
//!
//! All three searches are backtracking with forward checking and a
//! smallest-domain-first vertex order. The two coloring searches only let a
//! vertex open the next unused color (or, for multicolorings, the next unused
//! colors in order); since domain sizes do not depend on color names, the
//! vertex order is the same for every relabelling of a solution, so this
//! loses nothing.

use crate::error::{Error, Result};
use crate::graph::{bits, full_row, kneser, Graph};

/// Size limits for the exact solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverCaps {
    pub max_vertices: usize,
}

impl Default for SolverCaps {
    fn default() -> Self {
        SolverCaps { max_vertices: 120 }
    }
}

impl SolverCaps {
    fn check(&self, g: &Graph, what: &str) -> Result<()> {
        if g.vertex_count() > self.max_vertices {
            return Err(Error::capacity(format!(
                "exact {what} refused: {} vertices exceeds the cap of {}",
                g.vertex_count(),
                self.max_vertices
            )));
        }
        Ok(())
    }
}

/// An optimal proper coloring; `colors[v] < count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub count: usize,
    pub colors: Vec<usize>,
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.vertex_count() && g.edges().iter().all(|&(a, b)| colors[a] != colors[b])
}

/// Greedy maximal cliques grown from every start vertex; returns the largest.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut best: Vec<usize> = Vec::new();
    for start in 0..n {
        let mut clique = vec![start];
        let mut cand = g.neighbors(start);
        while cand != 0 {
            let pick = bits(cand)
                .max_by_key(|&v| ((g.neighbors(v) & cand).count_ones(), std::cmp::Reverse(v)))
                .expect("nonempty");
            clique.push(pick);
            cand &= g.neighbors(pick);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// DSATUR greedy coloring.
pub fn dsatur(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<u128> = vec![0; n];
    let mut count = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (seen[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex left");
        let c = (!seen[v]).trailing_zeros() as usize;
        colors[v] = c;
        count = count.max(c + 1);
        for u in bits(g.neighbors(v)) {
            seen[u] |= 1u128 << c;
        }
    }
    Coloring { count, colors }
}

/// `χ(G)` with an optimal coloring. The empty graph has `χ = 0`.
///
/// Bounds come from a greedy clique and DSATUR; the gap is closed by deciding
/// `k`-colorability for `k` from the clique size upward, with the clique
/// precolored.
pub fn chromatic_number(g: &Graph, caps: &SolverCaps) -> Result<Coloring> {
    caps.check(g, "chromatic number")?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Coloring { count: 0, colors: Vec::new() });
    }
    let clique = greedy_clique(g);
    let upper = dsatur(g);
    for k in clique.len()..upper.count {
        if let Some(colors) = k_coloring(g, k, &clique) {
            return Ok(Coloring { count: k, colors });
        }
    }
    Ok(upper)
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_coloring(g: &Graph, k: usize, clique: &[usize]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if k < clique.len() || (n > 0 && k == 0) {
        return None;
    }
    if k >= 128 {
        return dsatur(g).count.le(&k).then(|| dsatur(g).colors);
    }
    let mut st = KColor {
        g,
        colors: vec![usize::MAX; n],
        domains: vec![full_row(k); n],
        used: 0,
    };
    for (c, &v) in clique.iter().enumerate() {
        if st.domains[v] >> c & 1 == 0 {
            return None;
        }
        st.assign(v, c)?;
        st.used = st.used.max(c + 1);
    }
    st.solve(n - clique.len()).then_some(st.colors)
}

struct KColor<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    domains: Vec<u128>,
    used: usize,
}

impl KColor<'_> {
    /// Color `v` with `c` and strip `c` from uncolored neighbors. Returns the
    /// touched neighbors for undo, or `None` on a wipe-out (already undone).
    fn assign(&mut self, v: usize, c: usize) -> Option<Vec<usize>> {
        self.colors[v] = c;
        let mut touched = Vec::new();
        let bit = 1u128 << c;
        for u in bits(self.g.neighbors(v)) {
            if self.colors[u] == usize::MAX && self.domains[u] & bit != 0 {
                self.domains[u] &= !bit;
                touched.push(u);
                if self.domains[u] == 0 {
                    self.undo(v, c, &touched);
                    return None;
                }
            }
        }
        Some(touched)
    }

    fn undo(&mut self, v: usize, c: usize, touched: &[usize]) {
        self.colors[v] = usize::MAX;
        for &u in touched {
            self.domains[u] |= 1u128 << c;
        }
    }

    fn solve(&mut self, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let n = self.g.vertex_count();
        let v = (0..n)
            .filter(|&v| self.colors[v] == usize::MAX)
            .min_by_key(|&v| {
                let live = self.g.neighbors(v) & !self.colored_mask();
                (self.domains[v].count_ones(), std::cmp::Reverse(live.count_ones()), v)
            })
            .expect("uncolored vertex left");
        // at most one fresh color: the lowest unused one
        let allowed = self.domains[v] & full_row((self.used + 1).min(128));
        let before = self.used;
        for c in bits(allowed) {
            if let Some(touched) = self.assign(v, c) {
                self.used = before.max(c + 1);
                if self.solve(left - 1) {
                    return true;
                }
                self.used = before;
                self.undo(v, c, &touched);
            }
        }
        false
    }

    fn colored_mask(&self) -> u128 {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != usize::MAX)
            .fold(0u128, |m, (v, _)| m | 1u128 << v)
    }
}

pub fn is_homomorphism(g: &Graph, t: &Graph, map: &[usize]) -> bool {
    map.len() == g.vertex_count()
        && map.iter().all(|&x| x < t.vertex_count())
        && g.edges().iter().all(|&(a, b)| t.has_edge(map[a], map[b]))
}

/// A homomorphism `G → T` (adjacency-preserving vertex map), if one exists.
///
/// Components of `G` are solved separately. Vertices are picked by smallest
/// remaining candidate set, ties going to the vertex deepest in the
/// degeneracy order; assigning `v ↦ t` intersects each unassigned
/// neighbor's candidates with `N_T(t)`.
pub fn homomorphism(g: &Graph, t: &Graph, caps: &SolverCaps) -> Result<Option<Vec<usize>>> {
    caps.check(g, "homomorphism search (source)")?;
    caps.check(t, "homomorphism search (target)")?;
    let n = g.vertex_count();
    let mut map = vec![usize::MAX; n];
    if n == 0 {
        return Ok(Some(map));
    }
    if t.vertex_count() == 0 {
        return Ok(None);
    }
    let rank = degeneracy_rank(g);
    let tn = t.vertex_count();
    let active_targets = (0..tn).filter(|&x| t.degree(x) > 0).fold(0u128, |m, x| m | 1u128 << x);
    for comp in g.components() {
        let mut domains = vec![0u128; n];
        for &v in &comp {
            domains[v] = if g.degree(v) > 0 { active_targets } else { full_row(tn) };
        }
        let mut st = HomSearch { g, t, rank: &rank, map: &mut map, domains };
        if !st.solve(&comp, comp.len()) {
            return Ok(None);
        }
    }
    debug_assert!(is_homomorphism(g, t, &map));
    Ok(Some(map))
}

pub fn homomorphism_exists(g: &Graph, t: &Graph, caps: &SolverCaps) -> Result<bool> {
    homomorphism(g, t, caps).map(|m| m.is_some())
}

/// Position of each vertex in reverse min-degree elimination order (the
/// densest core comes first).
fn degeneracy_rank(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = full_row(n);
    let mut order = Vec::with_capacity(n);
    while alive != 0 {
        let v = bits(alive)
            .min_by_key(|&v| ((g.neighbors(v) & alive).count_ones(), v))
            .expect("alive vertex");
        order.push(v);
        alive &= !(1u128 << v);
    }
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().rev().enumerate() {
        rank[v] = i;
    }
    rank
}

struct HomSearch<'a> {
    g: &'a Graph,
    t: &'a Graph,
    rank: &'a [usize],
    map: &'a mut Vec<usize>,
    domains: Vec<u128>,
}

impl HomSearch<'_> {
    fn solve(&mut self, comp: &[usize], left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let v = *comp
            .iter()
            .filter(|&&v| self.map[v] == usize::MAX)
            .min_by_key(|&&v| (self.domains[v].count_ones(), self.rank[v]))
            .expect("unassigned vertex left");
        for x in bits(self.domains[v]) {
            self.map[v] = x;
            let mut saved = Vec::new();
            let mut wiped = false;
            for u in bits(self.g.neighbors(v)) {
                if self.map[u] != usize::MAX {
                    continue;
                }
                let narrowed = self.domains[u] & self.t.neighbors(x);
                if narrowed != self.domains[u] {
                    saved.push((u, self.domains[u]));
                    self.domains[u] = narrowed;
                }
                if narrowed == 0 {
                    wiped = true;
                    break;
                }
            }
            if !wiped && self.solve(comp, left - 1) {
                return true;
            }
            for (u, d) in saved {
                self.domains[u] = d;
            }
            self.map[v] = usize::MAX;
        }
        false
    }
}

/// An `m`-fold coloring: `sets[v]` is an `m`-subset of `0..n` (bitmask),
/// disjoint from the sets of all neighbors.
pub fn is_multicoloring(g: &Graph, m: usize, n: usize, sets: &[u64]) -> bool {
    let palette = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    sets.len() == g.vertex_count()
        && sets.iter().all(|s| s.count_ones() as usize == m && s & !palette == 0)
        && g.edges().iter().all(|&(a, b)| sets[a] & sets[b] == 0)
}

/// An `m`-fold `n`-coloring of `G`, i.e. a homomorphism into `KG(n,m)`
/// written as color sets.
pub fn multicoloring(g: &Graph, m: usize, n: usize) -> Result<Option<Vec<u64>>> {
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    if n > 64 {
        return Err(Error::capacity("multicoloring supports at most 64 colors"));
    }
    let size = g.vertex_count();
    if size == 0 {
        return Ok(Some(Vec::new()));
    }
    if n < m {
        return Ok(None);
    }
    let mut sets = vec![0u64; size];
    for comp in g.components() {
        let mut st = MultiSearch {
            g,
            m,
            n,
            sets: &mut sets,
            forbidden: vec![0u64; size],
            used: 0,
        };
        if !st.solve(&comp, comp.len()) {
            return Ok(None);
        }
    }
    debug_assert!(is_multicoloring(g, m, n, &sets));
    Ok(Some(sets))
}

struct MultiSearch<'a> {
    g: &'a Graph,
    m: usize,
    n: usize,
    sets: &'a mut Vec<u64>,
    forbidden: Vec<u64>,
    used: usize,
}

impl MultiSearch<'_> {
    fn available(&self, v: usize) -> u64 {
        !self.forbidden[v] & low_bits(self.n)
    }

    fn solve(&mut self, comp: &[usize], left: usize) -> bool {
        if left == 0 {
            return true;
        }
        let v = *comp
            .iter()
            .filter(|&&v| self.sets[v] == 0)
            .min_by_key(|&&v| {
                let open = bits(self.g.neighbors(v)).filter(|&u| self.sets[u] == 0).count();
                (self.available(v).count_ones(), std::cmp::Reverse(open), v)
            })
            .expect("uncolored vertex left");
        let avail_old = self.available(v) & low_bits(self.used);
        let before = self.used;
        for fresh in 0..=self.m {
            if before + fresh > self.n {
                break;
            }
            let reuse = self.m - fresh;
            let new_block = low_bits(before + fresh) & !low_bits(before);
            let mut found = false;
            for_each_subset_of(avail_old, reuse, &mut |old| {
                let set = old | new_block;
                if self.try_assign(v, set, before + fresh, comp, left) {
                    found = true;
                    return false;
                }
                true
            });
            if found {
                return true;
            }
        }
        false
    }

    fn try_assign(&mut self, v: usize, set: u64, used: usize, comp: &[usize], left: usize) -> bool {
        self.sets[v] = set;
        let mut touched = Vec::new();
        let mut ok = true;
        for u in bits(self.g.neighbors(v)) {
            if self.sets[u] != 0 {
                continue;
            }
            touched.push((u, self.forbidden[u]));
            self.forbidden[u] |= set;
            if (self.available(u).count_ones() as usize) < self.m {
                ok = false;
                break;
            }
        }
        let prev_used = self.used;
        if ok {
            self.used = used;
            if self.solve(comp, left - 1) {
                return true;
            }
        }
        self.used = prev_used;
        for (u, f) in touched {
            self.forbidden[u] = f;
        }
        self.sets[v] = 0;
        false
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Visit every `size`-subset of the bits of `pool` until `f` returns false.
fn for_each_subset_of(pool: u64, size: usize, f: &mut dyn FnMut(u64) -> bool) -> bool {
    fn rec(pool: u64, size: usize, acc: u64, f: &mut dyn FnMut(u64) -> bool) -> bool {
        if size == 0 {
            return f(acc);
        }
        if (pool.count_ones() as usize) < size {
            return true;
        }
        let low = pool & pool.wrapping_neg();
        // take the lowest bit, or skip it
        rec(pool & !low, size - 1, acc | low, f) && rec(pool & !low, size, acc, f)
    }
    rec(pool, size, 0, f)
}

/// `χ_m(G)` with an optimal `m`-fold coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multicoloring {
    pub colors: usize,
    pub sets: Vec<u64>,
}

/// `χ_m(G) = min{ n : G → KG(n,m) }`, searched for `n ≤ n_max`.
pub fn multichromatic_number(g: &Graph, m: usize, n_max: usize, caps: &SolverCaps) -> Result<Multicoloring> {
    caps.check(g, "multichromatic number")?;
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    if n_max < m {
        return Err(Error::domain(format!("n_max = {n_max} is below m = {m}")));
    }
    // a clique needs pairwise disjoint color sets
    let start = (m * greedy_clique(g).len()).max(m);
    for n in start..=n_max {
        if let Some(sets) = multicoloring(g, m, n)? {
            return Ok(Multicoloring { colors: n, sets });
        }
    }
    Err(Error::NotFound(format!("no {m}-fold coloring with at most {n_max} colors")))
}

/// Stahl's formula `⌈m/k⌉(n−2k)+2m` for `χ_m(KG(n,k))`, proved for `k ≤ 3`.
pub fn stahl_value(n: usize, k: usize, m: usize) -> usize {
    m.div_ceil(k) * (n - 2 * k) + 2 * m
}

/// Route `χ_m` through [`homomorphism`] into explicit `KG(n,m)` targets.
/// Only practical while `C(n,m) ≤ 128`.
pub fn multichromatic_via_targets(g: &Graph, m: usize, n_max: usize, caps: &SolverCaps) -> Result<usize> {
    for n in m.max(1)..=n_max {
        let target = if n < 2 * m {
            // KG(n,m) with n < 2m has no edges
            Graph::with_order(binom(n, m))?
        } else {
            kneser(n, m)?
        };
        if homomorphism_exists(g, &target, caps)? {
            return Ok(n);
        }
    }
    Err(Error::NotFound(format!("no homomorphism into KG(n,{m}) with n ≤ {n_max}")))
}

fn binom(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{kneser, stable_kneser};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: try every assignment with k colors.
    fn brute_chi(g: &Graph) -> usize {
        let n = g.vertex_count();
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            let total = k.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let colors: Vec<usize> = (0..n)
                    .map(|_| {
                        let x = c % k;
                        c /= k;
                        x
                    })
                    .collect();
                if is_proper_coloring(g, &colors) {
                    return k;
                }
            }
        }
        n
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::with_order(n).unwrap();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn chromatic_examples() {
        let caps = SolverCaps::default();
        assert_eq!(chromatic_number(&kneser(5, 2).unwrap(), &caps).unwrap().count, 3);
        assert_eq!(chromatic_number(&Graph::complete(4).unwrap(), &caps).unwrap().count, 4);
        assert_eq!(chromatic_number(&stable_kneser(6, 2, 2).unwrap(), &caps).unwrap().count, 4);
        assert_eq!(chromatic_number(&Graph::with_order(0).unwrap(), &caps).unwrap().count, 0);
        assert_eq!(chromatic_number(&Graph::with_order(1).unwrap(), &caps).unwrap().count, 1);
        assert_eq!(chromatic_number(&Graph::cycle(7).unwrap(), &caps).unwrap().count, 3);
        let small = SolverCaps { max_vertices: 5 };
        assert!(matches!(chromatic_number(&kneser(5, 2).unwrap(), &small), Err(Error::Capacity(_))));
    }

    #[test]
    fn chromatic_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..60 {
            let n = rng.gen_range(1..=7);
            let p = rng.gen_range(0.2..0.9);
            let g = random_graph(&mut rng, n, p);
            let c = chromatic_number(&g, &SolverCaps::default()).unwrap();
            assert!(is_proper_coloring(&g, &c.colors));
            assert!(c.colors.iter().all(|&x| x < c.count));
            assert_eq!(c.count, brute_chi(&g));
        }
    }

    #[test]
    fn homomorphism_examples() {
        let caps = SolverCaps::default();
        let petersen = kneser(5, 2).unwrap();
        let map = homomorphism(&petersen, &petersen, &caps).unwrap().unwrap();
        assert!(is_homomorphism(&petersen, &petersen, &map));
        assert!(!homomorphism_exists(&petersen, &kneser(4, 2).unwrap(), &caps).unwrap());
        let k1 = Graph::with_order(1).unwrap();
        assert!(!homomorphism_exists(&Graph::complete(2).unwrap(), &k1, &caps).unwrap());
        assert!(homomorphism_exists(&Graph::with_order(3).unwrap(), &k1, &caps).unwrap());
        assert!(homomorphism_exists(&Graph::cycle(6).unwrap(), &Graph::complete(2).unwrap(), &caps).unwrap());
        assert!(!homomorphism_exists(&Graph::cycle(5).unwrap(), &Graph::complete(2).unwrap(), &caps).unwrap());
    }

    #[test]
    fn homomorphism_into_complete_graph_is_coloring() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let caps = SolverCaps::default();
        for _ in 0..40 {
            let n = rng.gen_range(1..=9);
            let g = random_graph(&mut rng, n, 0.5);
            let chi = chromatic_number(&g, &caps).unwrap().count;
            assert!(homomorphism_exists(&g, &Graph::complete(chi).unwrap(), &caps).unwrap());
            if chi > 1 {
                assert!(!homomorphism_exists(&g, &Graph::complete(chi - 1).unwrap(), &caps).unwrap());
            }
        }
    }

    #[test]
    fn multichromatic_examples() {
        let caps = SolverCaps::default();
        let petersen = kneser(5, 2).unwrap();
        let mc = multichromatic_number(&petersen, 2, 8, &caps).unwrap();
        assert_eq!(mc.colors, 5);
        assert!(is_multicoloring(&petersen, 2, 5, &mc.sets));
        assert_eq!(stahl_value(5, 2, 2), 5);
        assert_eq!(multichromatic_number(&stable_kneser(6, 2, 2).unwrap(), 1, 8, &caps).unwrap().colors, 4);
        assert_eq!(multichromatic_number(&kneser(4, 2).unwrap(), 1, 8, &caps).unwrap().colors, 2);
        assert!(matches!(multichromatic_number(&petersen, 2, 4, &caps), Err(Error::NotFound(_))));
        assert!(multichromatic_number(&petersen, 3, 2, &caps).is_err());
    }

    #[test]
    fn multichromatic_routes_agree() {
        let caps = SolverCaps::default();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut graphs = vec![kneser(5, 2).unwrap(), stable_kneser(6, 2, 2).unwrap(), Graph::cycle(5).unwrap(), Graph::cycle(7).unwrap()];
        for _ in 0..12 {
            let n = rng.gen_range(2..=8);
            graphs.push(random_graph(&mut rng, n, 0.45));
        }
        for g in &graphs {
            for m in 1..=2 {
                let a = multichromatic_number(g, m, 9, &caps).unwrap().colors;
                let b = multichromatic_via_targets(g, m, 9, &caps).unwrap();
                assert_eq!(a, b, "{g:?} m={m}");
            }
            assert_eq!(
                multichromatic_number(g, 1, 9, &caps).unwrap().colors,
                chromatic_number(g, &caps).unwrap().count
            );
        }
        // odd cycles: χ_2(C_{2r+1}) = 5 for r = 2, and C_7 needs 5 as well (⌈2·7/3⌉)
        assert_eq!(multichromatic_number(&Graph::cycle(5).unwrap(), 2, 9, &caps).unwrap().colors, 5);
        assert_eq!(multichromatic_number(&Graph::cycle(7).unwrap(), 2, 9, &caps).unwrap().colors, 5);
    }

    #[test]
    fn stahl_small_instances() {
        let caps = SolverCaps::default();
        for (n, k, m) in [(5, 2, 1), (5, 2, 2), (6, 2, 2), (5, 2, 3), (6, 2, 3)] {
            let g = kneser(n, k).unwrap();
            let got = multichromatic_number(&g, m, 16, &caps).unwrap().colors;
            assert_eq!(got, stahl_value(n, k, m), "n={n} k={k} m={m}");
        }
    }

    #[test]
    fn adding_edges_never_lowers_chi() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let caps = SolverCaps::default();
        for _ in 0..30 {
            let n = rng.gen_range(2..=10);
            let mut g = random_graph(&mut rng, n, 0.3);
            let before = chromatic_number(&g, &caps).unwrap().count;
            let a = rng.gen_range(0..n);
            let b = (a + rng.gen_range(1..n)) % n;
            g.add_edge(a, b).unwrap();
            assert!(chromatic_number(&g, &caps).unwrap().count >= before);
        }
    }
}
