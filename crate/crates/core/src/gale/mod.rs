//! Moment-curve point configurations on `S^d` and verification that every
//! open hemisphere trace lies in a signed-increasing property.
//!
//! Point `i` (1-based) is `z_i = (−1)^i w_i / ‖w_i‖` with
//! `w_i = (1, i, i², …, i^d)`. Configurations keep the integer vectors
//! `(−1)^i w_i`; normalizing never changes the sign of `⟨x, z_i⟩`, so the
//! exact verifier decides every sign in integer arithmetic.

pub mod arrangement;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alternation::{
    alt_property, hypergraph_alternation, AltMode, Bijection, EdgeProperty, SignedPair, SignedProperty,
};
use crate::error::{Error, Result};
use crate::hypergraph::{range_names, Hypergraph, VertexSet};

/// Inner products with `|⟨x, z⟩| ≤ ZERO_BAND` count as zero in floating mode.
pub const ZERO_BAND: f64 = 1e-9;
/// Tolerance on `‖x‖ = 1` for query directions.
pub const UNIT_TOLERANCE: f64 = 1e-9;
/// Largest `d` handled by [`verify_exact`].
pub const EXACT_MAX_DIM: usize = 3;

/// `n` labelled points on `S^d`, kept as integer direction vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleConfiguration {
    dim: usize,
    generators: Vec<Vec<i64>>,
    /// `identification[i]` is the vertex index of point `i`.
    identification: Vec<usize>,
    /// Vertex names by vertex index.
    labels: Vec<String>,
}

impl GaleConfiguration {
    /// The moment-curve configuration for `n` vertices on `S^d`, with point
    /// `i` identified with vertex `σ(i)`.
    pub fn moment_curve(n: usize, d: i64, sigma: &Bijection) -> Result<Self> {
        if d < 0 {
            return Err(Error::domain(format!(
                "d = {d}: the sphere S^d needs d ≥ 0 (d = −1 has no configuration)"
            )));
        }
        let d = d as usize;
        if n == 0 || d + 1 > n {
            return Err(Error::domain(format!("need 0 ≤ d ≤ n−1, got n={n}, d={d}")));
        }
        if sigma.len() != n {
            return Err(Error::domain(format!("bijection has length {}, expected {n}", sigma.len())));
        }
        let mut generators = Vec::with_capacity(n);
        for i in 1..=n as i64 {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let mut w = Vec::with_capacity(d + 1);
            let mut power: i64 = 1;
            for p in 0..=d {
                if p > 0 {
                    power = power
                        .checked_mul(i)
                        .ok_or_else(|| Error::capacity(format!("moment curve coordinate {i}^{p} overflows")))?;
                }
                w.push(sign * power);
            }
            generators.push(w);
        }
        Ok(GaleConfiguration {
            dim: d,
            generators,
            identification: sigma.images().to_vec(),
            labels: range_names(n),
        })
    }

    /// Arbitrary configuration from integer direction vectors. Repeated
    /// points are allowed.
    pub fn from_generators(dim: usize, generators: Vec<Vec<i64>>, sigma: &Bijection, labels: Vec<String>) -> Result<Self> {
        let n = generators.len();
        if sigma.len() != n || labels.len() != n {
            return Err(Error::domain("generators, bijection and labels must have the same length"));
        }
        for g in &generators {
            if g.len() != dim + 1 {
                return Err(Error::domain(format!("points on S^{dim} need {} coordinates", dim + 1)));
            }
            if g.iter().all(|&c| c == 0) {
                return Err(Error::domain("zero vector cannot be normalized onto the sphere"));
            }
        }
        Ok(GaleConfiguration { dim, generators, identification: sigma.images().to_vec(), labels })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::domain("label count does not match the configuration"));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn identification(&self) -> &[usize] {
        &self.identification
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Unit vectors `z_i`.
    pub fn points(&self) -> Vec<Vec<f64>> {
        self.generators
            .iter()
            .map(|g| {
                let norm = g.iter().map(|&c| (c as f64) * (c as f64)).sum::<f64>().sqrt();
                g.iter().map(|&c| c as f64 / norm).collect()
            })
            .collect()
    }

    /// True when no two points coincide on the sphere.
    pub fn is_set(&self) -> bool {
        let pts = self.points();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let dist: f64 = pts[i].iter().zip(&pts[j]).map(|(a, b)| (a - b).abs()).sum();
                if dist < 1e-12 {
                    return false;
                }
            }
        }
        true
    }

    /// Signed pair of vertices read off a per-point sign pattern.
    fn pair_from_signs(&self, signs: &[i8]) -> SignedPair {
        let mut pair = SignedPair::default();
        for (i, &s) in signs.iter().enumerate() {
            match s {
                1 => pair.plus.insert(self.identification[i]),
                -1 => pair.minus.insert(self.identification[i]),
                _ => {}
            }
        }
        pair
    }

    fn names_of(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn to_json(&self) -> GaleConfigJson {
        // points are listed in configuration order, identification[i] names point i
        GaleConfigJson {
            d: self.dim,
            points: self.points(),
            identification: self.identification.iter().map(|&v| self.labels[v].clone()).collect(),
        }
    }
}

/// Export format for a configuration.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GaleConfigJson {
    pub d: usize,
    pub points: Vec<Vec<f64>>,
    pub identification: Vec<String>,
}

/// How the open hemisphere `H(x)` and its antipode split the vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HemisphereTrace {
    pub plus: VertexSet,
    pub minus: VertexSet,
    pub zero: VertexSet,
}

impl HemisphereTrace {
    pub fn pair(&self) -> SignedPair {
        SignedPair { plus: self.plus, minus: self.minus }
    }
}

/// Classify every point by the sign of `⟨x, z_i⟩` (zero band [`ZERO_BAND`]).
pub fn hemisphere_trace(z: &GaleConfiguration, x: &[f64]) -> Result<HemisphereTrace> {
    if x.len() != z.dim + 1 {
        return Err(Error::domain(format!("direction must have {} coordinates", z.dim + 1)));
    }
    let norm = x.iter().map(|c| c * c).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > UNIT_TOLERANCE {
        return Err(Error::domain(format!("direction has norm {norm}, expected a unit vector")));
    }
    let mut trace = HemisphereTrace { plus: VertexSet::EMPTY, minus: VertexSet::EMPTY, zero: VertexSet::EMPTY };
    for (i, p) in z.points().iter().enumerate() {
        let v = z.identification[i];
        let ip: f64 = p.iter().zip(x).map(|(a, b)| a * b).sum();
        if ip.abs() <= ZERO_BAND {
            trace.zero.insert(v);
        } else if ip > 0.0 {
            trace.plus.insert(v);
        } else {
            trace.minus.insert(v);
        }
    }
    Ok(trace)
}

/// A direction whose trace falls outside the property.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub direction: Vec<f64>,
    /// Sign of `⟨x, z_i⟩` for each point, in configuration order.
    pub signs: String,
    pub plus: Vec<String>,
    pub minus: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    Exact,
    Sampled,
}

/// Verification report. `cells_checked` is set in exact mode, `trials` in
/// sampled mode.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaleVerdict {
    pub ok: bool,
    pub mode: VerifyMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cells_checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    pub counterexample: Option<Counterexample>,
}

fn check_ground(z: &GaleConfiguration, p: &dyn SignedProperty) -> Result<()> {
    if p.ground_size() != z.len() {
        return Err(Error::domain(format!(
            "property is over {} vertices, configuration has {} points",
            p.ground_size(),
            z.len()
        )));
    }
    Ok(())
}

fn sign_string(signs: &[i8]) -> String {
    signs
        .iter()
        .map(|s| match s {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

/// Check `Z_x ∈ P` for every direction `x ∈ S^d`, exactly.
///
/// Every face of the arrangement `{z_i^⊥}` (open cells and all boundary
/// strata) is visited once; see [`arrangement`]. Faces are scanned in
/// lexicographic order of their sign vectors (`−` < `0` < `+`), so the
/// reported counterexample is the smallest failing one.
pub fn verify_exact(z: &GaleConfiguration, p: &dyn SignedProperty) -> Result<GaleVerdict> {
    check_ground(z, p)?;
    if z.dim > EXACT_MAX_DIM {
        return Err(Error::capacity(format!(
            "exact verification handles d ≤ {EXACT_MAX_DIM}, got d = {}; use sampled verification",
            z.dim
        )));
    }
    let vectors: Vec<Vec<i128>> = z
        .generators
        .iter()
        .map(|g| g.iter().map(|&c| c as i128).collect())
        .collect();
    let arr = arrangement::enumerate_faces(&vectors, z.dim + 1)?;
    let failing = arr.faces.iter().find(|f| !p.contains(z.pair_from_signs(&f.signs)));
    let counterexample = failing.map(|f| {
        let pair = z.pair_from_signs(&f.signs);
        Counterexample {
            direction: arr.representative(f, &vectors),
            signs: sign_string(&f.signs),
            plus: z.names_of(pair.plus),
            minus: z.names_of(pair.minus),
        }
    });
    Ok(GaleVerdict {
        ok: counterexample.is_none(),
        mode: VerifyMode::Exact,
        cells_checked: Some(arr.faces.len()),
        trials: None,
        counterexample,
    })
}

const SAMPLE_CHUNK: usize = 1024;

/// Monte-Carlo check over `trials` uniform directions (normalized Gaussians,
/// redrawn when some point falls in the zero band). One-sided: a failure is a
/// genuine counterexample, success is evidence only. Deterministic for a
/// given seed regardless of thread count; the earliest failing trial wins.
pub fn verify_sampled(z: &GaleConfiguration, p: &dyn SignedProperty, trials: usize, seed: u64) -> Result<GaleVerdict> {
    check_ground(z, p)?;
    if trials == 0 {
        return Err(Error::domain("trials must be at least 1"));
    }
    let points = z.points();
    let dim = z.dim + 1;
    let chunks = trials.div_ceil(SAMPLE_CHUNK);
    let failure = (0..chunks).into_par_iter().find_map_first(|chunk| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(chunk as u64);
        let count = SAMPLE_CHUNK.min(trials - chunk * SAMPLE_CHUNK);
        for _ in 0..count {
            let (x, signs) = draw_direction(&points, dim, &mut rng);
            let pair = z.pair_from_signs(&signs);
            if !p.contains(pair) {
                return Some(Counterexample {
                    direction: x,
                    signs: sign_string(&signs),
                    plus: z.names_of(pair.plus),
                    minus: z.names_of(pair.minus),
                });
            }
        }
        None
    });
    Ok(GaleVerdict {
        ok: failure.is_none(),
        mode: VerifyMode::Sampled,
        cells_checked: None,
        trials: Some(trials),
        counterexample: failure,
    })
}

fn draw_direction(points: &[Vec<f64>], dim: usize, rng: &mut ChaCha8Rng) -> (Vec<f64>, Vec<i8>) {
    const MAX_REDRAWS: usize = 64;
    let mut attempt = 0;
    loop {
        let mut x: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
        let norm = x.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        x.iter_mut().for_each(|c| *c /= norm);
        let dots: Vec<f64> = points.iter().map(|p| p.iter().zip(&x).map(|(a, b)| a * b).sum()).collect();
        attempt += 1;
        // degenerate inputs can keep points in the band; accept eventually
        if dots.iter().all(|d| d.abs() > ZERO_BAND) || attempt >= MAX_REDRAWS {
            let signs = dots
                .iter()
                .map(|&d| if d.abs() <= ZERO_BAND { 0 } else if d > 0.0 { 1 } else { -1 })
                .collect();
            return (x, signs);
        }
    }
}

/// Run [`verify_exact`] when `d` allows it, [`verify_sampled`] otherwise.
pub fn verify_auto(z: &GaleConfiguration, p: &dyn SignedProperty, trials: usize, seed: u64) -> Result<GaleVerdict> {
    if z.dim <= EXACT_MAX_DIM {
        verify_exact(z, p)
    } else {
        verify_sampled(z, p, trials, seed)
    }
}

/// Moment-curve configuration for a property: `d = n − alt(P,σ) − 1`.
#[derive(Clone, Debug)]
pub struct LemmaConfiguration {
    pub config: GaleConfiguration,
    pub d: usize,
    pub alternation: usize,
}

pub fn lemma_configuration(p: &dyn SignedProperty, sigma: &Bijection) -> Result<LemmaConfiguration> {
    let n = p.ground_size();
    let alt = alt_property(p, sigma)?;
    let Some(value) = alt.value else {
        return Err(Error::domain(
            "every sign vector lies in the property, so no finite dimension is determined",
        ));
    };
    if value == n {
        return Err(Error::domain(format!("alt(P,σ) = n = {n} gives d = −1; no configuration exists")));
    }
    let d = n - value - 1;
    let config = GaleConfiguration::moment_curve(n, d as i64, sigma)?;
    Ok(LemmaConfiguration { config, d, alternation: value })
}

/// Configuration for a hypergraph with `d = |V| − alt(H,σ) − 1` (mode alt,
/// checked against `P₁`) or `d = |V| − salt(H,σ) − 1` (mode salt, `P₂`).
#[derive(Clone, Debug)]
pub struct CorollaryConfiguration {
    pub config: GaleConfiguration,
    pub d: usize,
    pub alternation: usize,
    pub property: EdgeProperty,
}

pub fn corollary_configuration(h: &Hypergraph, sigma: &Bijection, mode: AltMode) -> Result<CorollaryConfiguration> {
    let n = h.vertex_count();
    let (value, _) = hypergraph_alternation(h, sigma, mode)?;
    if value == n {
        return Err(Error::domain(format!(
            "{mode}(H,σ) = |V| = {n} gives d = −1; no configuration exists"
        )));
    }
    let d = n - value - 1;
    let config = GaleConfiguration::moment_curve(n, d as i64, sigma)?.with_labels(h.names().to_vec())?;
    let property = match mode {
        AltMode::Alt => EdgeProperty::p1(h),
        AltMode::Salt => EdgeProperty::p2(h),
    };
    Ok(CorollaryConfiguration { config, d, alternation: value, property })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternation::{property_pnks, FnProperty};
    use crate::hypergraph::{complete_k_uniform, schrijver_k_uniform};
    use rand::Rng;

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn moment_curve_points() {
        let z = GaleConfiguration::moment_curve(5, 1, &Bijection::identity(5)).unwrap();
        let pts = z.points();
        let expect = |s: f64, t: f64| {
            let norm = (1.0 + t * t).sqrt();
            vec![s / norm, s * t / norm]
        };
        assert!(close(&pts[0], &expect(-1.0, 1.0)));
        assert!(close(&pts[1], &expect(1.0, 2.0)));
        assert!(close(&pts[2], &expect(-1.0, 3.0)));
        assert!(close(&pts[3], &expect(1.0, 4.0)));
        assert!(close(&pts[4], &expect(-1.0, 5.0)));
        for p in &pts {
            assert!((p.iter().map(|c| c * c).sum::<f64>() - 1.0).abs() < 1e-12);
        }
        assert!(z.is_set());

        let z = GaleConfiguration::moment_curve(2, 0, &Bijection::identity(2)).unwrap();
        assert_eq!(z.points(), vec![vec![-1.0], vec![1.0]]);
        let z = GaleConfiguration::moment_curve(3, 0, &Bijection::identity(3)).unwrap();
        assert_eq!(z.points(), vec![vec![-1.0], vec![1.0], vec![-1.0]]);
        assert!(!z.is_set());

        assert!(matches!(GaleConfiguration::moment_curve(5, -1, &Bijection::identity(5)), Err(Error::Domain(_))));
        assert!(matches!(GaleConfiguration::moment_curve(5, 5, &Bijection::identity(5)), Err(Error::Domain(_))));
    }

    #[test]
    fn traces() {
        let z = GaleConfiguration::moment_curve(5, 1, &Bijection::identity(5)).unwrap();
        let evens = VertexSet::from_indices([1, 3]);
        let odds = VertexSet::from_indices([0, 2, 4]);
        let t = hemisphere_trace(&z, &[0.0, 1.0]).unwrap();
        assert_eq!((t.plus, t.minus, t.zero), (evens, odds, VertexSet::EMPTY));
        let t = hemisphere_trace(&z, &[1.0, 0.0]).unwrap();
        assert_eq!((t.plus, t.minus), (evens, odds));
        let back = hemisphere_trace(&z, &[-1.0, 0.0]).unwrap();
        assert_eq!((back.plus, back.minus), (odds, evens));
        assert!(hemisphere_trace(&z, &[1.0, 1.0]).is_err());
        assert!(hemisphere_trace(&z, &[1.0]).is_err());
    }

    #[test]
    fn antipodal_traces_swap() {
        let z = GaleConfiguration::moment_curve(7, 3, &Bijection::new(vec![3, 1, 4, 0, 6, 5, 2]).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let mut x: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let norm = x.iter().map(|c| c * c).sum::<f64>().sqrt();
            x.iter_mut().for_each(|c| *c /= norm);
            let neg: Vec<f64> = x.iter().map(|c| -c).collect();
            let a = hemisphere_trace(&z, &x).unwrap();
            let b = hemisphere_trace(&z, &neg).unwrap();
            assert_eq!((a.plus, a.minus, a.zero), (b.minus, b.plus, b.zero));
        }
    }

    #[test]
    fn moment_vectors_are_in_general_position() {
        use arrangement::determinant;
        for n in 2..=9usize {
            for d in 0..n.min(5) {
                let z = GaleConfiguration::moment_curve(n, d as i64, &Bijection::identity(n)).unwrap();
                let g: Vec<Vec<i128>> = z.generators().iter().map(|r| r.iter().map(|&c| c as i128).collect()).collect();
                let mut subsets = Vec::new();
                crate::hypergraph::for_each_combination(n, d + 1, &mut |s| {
                    subsets.push(s);
                    true
                });
                for s in subsets {
                    let m: Vec<Vec<i128>> = s.iter().map(|i| g[i].clone()).collect();
                    assert_ne!(determinant(m).unwrap(), 0, "n={n} d={d} {s:?}");
                }
            }
        }
    }

    #[test]
    fn exact_schrijver_configurations() {
        for (n, k) in [(6, 2), (5, 2), (7, 2), (4, 2), (7, 3)] {
            let h = schrijver_k_uniform(n, k).unwrap();
            let c = corollary_configuration(&h, &Bijection::identity(n), AltMode::Salt).unwrap();
            assert_eq!(c.d, n - 2 * k);
            let verdict = verify_exact(&c.config, &c.property).unwrap();
            assert!(verdict.ok, "n={n} k={k}: {verdict:?}");
            assert!(verdict.cells_checked.unwrap() >= 2);
        }
    }

    #[test]
    fn exact_counts_and_d0() {
        // d = 1 with 5 distinct lines through the origin: 10 rays and 10 arcs
        let h = schrijver_k_uniform(5, 2).unwrap();
        let c = corollary_configuration(&h, &Bijection::identity(5), AltMode::Salt).unwrap();
        assert_eq!(c.d, 1);
        let v = verify_exact(&c.config, &c.property).unwrap();
        assert_eq!(v.cells_checked, Some(20));
        // d = 0: only the two directions ±1
        let h = schrijver_k_uniform(4, 2).unwrap();
        let c = corollary_configuration(&h, &Bijection::identity(4), AltMode::Salt).unwrap();
        assert_eq!(c.d, 0);
        let v = verify_exact(&c.config, &c.property).unwrap();
        assert_eq!(v.cells_checked, Some(2));
        assert!(v.ok);
    }

    #[test]
    fn impossible_property_fails_immediately() {
        let z = GaleConfiguration::moment_curve(5, 2, &Bijection::identity(5)).unwrap();
        let nothing = FnProperty::new(5, "empty", |_| false);
        let v = verify_exact(&z, &nothing).unwrap();
        assert!(!v.ok);
        let ce = v.counterexample.unwrap();
        assert_eq!(ce.direction.len(), 3);
        // the reported direction realizes the reported pattern
        let t = hemisphere_trace(&z, &ce.direction).unwrap();
        let plus: Vec<String> = t.plus.iter().map(|v| (v + 1).to_string()).collect();
        assert_eq!(plus, ce.plus);
        let s = verify_sampled(&z, &nothing, 10, 1).unwrap();
        assert!(!s.ok);
    }

    #[test]
    fn exact_refuses_high_dimension() {
        let z = GaleConfiguration::moment_curve(8, 4, &Bijection::identity(8)).unwrap();
        let p = property_pnks(8, 2, 2).unwrap();
        assert!(matches!(verify_exact(&z, &p), Err(Error::Capacity(_))));
        assert!(matches!(verify_sampled(&z, &p, 0, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn sampled_pnks_configuration() {
        let p = property_pnks(8, 2, 2).unwrap();
        let lc = lemma_configuration(&p, &Bijection::identity(8)).unwrap();
        assert_eq!((lc.alternation, lc.d), (3, 4));
        let v = verify_sampled(&lc.config, &p, 20_000, 7).unwrap();
        assert!(v.ok, "{v:?}");
        assert_eq!(v.trials, Some(20_000));
        assert_eq!(verify_sampled(&lc.config, &p, 20_000, 7).unwrap(), v);
    }

    #[test]
    fn adversarial_configuration_is_caught() {
        let h = complete_k_uniform(5, 2).unwrap();
        let z = GaleConfiguration::from_generators(2, vec![vec![1, 2, 3]; 5], &Bijection::identity(5), range_names(5)).unwrap();
        assert!(!z.is_set());
        let p2 = EdgeProperty::p2(&h);
        let s = verify_sampled(&z, &p2, 100, 1).unwrap();
        assert!(!s.ok);
        let e = verify_exact(&z, &p2).unwrap();
        assert!(!e.ok);
        // rank one in ℝ³: all-plus, all-minus and the orthogonal plane
        assert_eq!(e.cells_checked, Some(3));
    }

    #[test]
    fn corollary_dimensions() {
        let k52 = complete_k_uniform(5, 2).unwrap();
        let c = corollary_configuration(&k52, &Bijection::identity(5), AltMode::Alt).unwrap();
        assert_eq!(c.d, 2);
        assert!(verify_exact(&c.config, &c.property).unwrap().ok);
        let edgeless = Hypergraph::on_range(4, vec![]).unwrap();
        assert!(matches!(
            corollary_configuration(&edgeless, &Bijection::identity(4), AltMode::Alt),
            Err(Error::Domain(_))
        ));
        let json = c.config.to_json();
        assert_eq!(json.d, 2);
        assert_eq!(json.identification, vec!["1", "2", "3", "4", "5"]);
    }
}
