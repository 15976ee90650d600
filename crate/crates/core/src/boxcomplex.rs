//! The box complexes `B(G)` and `B₀(G)`.
//!
//! A simplex `A ⊎ B` is stored as a pair of vertex bitmasks. Both complexes
//! live on two copies of `V(G)`; the `Z₂` action swaps the copies.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const MAX_BOX_VERTICES: usize = 16;
/// Refuse to materialize more simplices than this.
pub const MAX_SIMPLICES: usize = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Requires `CN(A) ≠ ∅ ≠ CN(B)`.
    B,
    B0,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "b" => Ok(Variant::B),
            "b0" => Ok(Variant::B0),
            other => Err(Error::parse(format!("variant must be `b` or `b0`, got {other:?}"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::B => "b",
            Variant::B0 => "b0",
        })
    }
}

/// `A ⊎ B` with `A` on the first copy and `B` on the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub a: u32,
    pub b: u32,
}

impl Simplex {
    pub fn new(a: u32, b: u32) -> Self {
        Simplex { a, b }
    }

    pub fn swap(self) -> Simplex {
        Simplex { a: self.b, b: self.a }
    }

    pub fn size(self) -> usize {
        (self.a.count_ones() + self.b.count_ones()) as usize
    }

    pub fn is_empty(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Faces obtained by dropping one vertex.
    pub fn facets(self) -> impl Iterator<Item = Simplex> {
        let a = bits(self.a as u128).map(move |v| Simplex::new(self.a & !(1 << v), self.b));
        let b = bits(self.b as u128).map(move |v| Simplex::new(self.a, self.b & !(1 << v)));
        a.chain(b)
    }
}

/// Common neighborhood; `CN(∅) = V`.
pub fn common_neighbors(g: &Graph, set: u32) -> u32 {
    let all = low_mask(g.vertex_count());
    bits(set as u128).fold(all, |acc, v| acc & g.neighbors(v) as u32)
}

fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A complex given by its nonempty simplices, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxComplex {
    variant: Variant,
    labels: Vec<String>,
    simplices: Vec<Simplex>,
}

impl BoxComplex {
    pub fn build(g: &Graph, variant: Variant) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_BOX_VERTICES {
            return Err(Error::capacity(format!(
                "box complex refused: {n} vertices exceeds {MAX_BOX_VERTICES}"
            )));
        }
        let all = low_mask(n);
        // each A contributes 2^|CN(A)| choices of B; check the total first
        let total: u64 = (0..=all).map(|a| 1u64 << common_neighbors(g, a).count_ones()).sum();
        if total > MAX_SIMPLICES as u64 {
            return Err(Error::capacity(format!(
                "box complex refused: up to {total} simplices exceeds {MAX_SIMPLICES}"
            )));
        }
        let simplices: Vec<Simplex> = (0..=all)
            .into_par_iter()
            .flat_map_iter(|a| {
                let cn_a = common_neighbors(g, a);
                // no loops, so B ⊆ CN(A) is already disjoint from A when A ≠ ∅
                let pool = cn_a & !a;
                let keep_a = variant == Variant::B0 || cn_a != 0;
                submasks(pool)
                    .filter(move |&b| keep_a && (a | b) != 0)
                    .filter(move |&b| variant == Variant::B0 || common_neighbors(g, b) != 0)
                    .map(move |b| Simplex::new(a, b))
            })
            .collect();
        Ok(Self::from_sorted(variant, g.labels().to_vec(), simplices))
    }

    /// A complex from an explicit simplex list, without any checks. Used to
    /// exercise [`check_z2_structure`] on arbitrary input.
    pub fn from_simplices(variant: Variant, labels: Vec<String>, simplices: Vec<Simplex>) -> Self {
        Self::from_sorted(variant, labels, simplices)
    }

    fn from_sorted(variant: Variant, labels: Vec<String>, mut simplices: Vec<Simplex>) -> Self {
        simplices.sort_unstable();
        simplices.dedup();
        simplices.retain(|s| !s.is_empty());
        BoxComplex { variant, labels, simplices }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn contains(&self, s: Simplex) -> bool {
        s.is_empty() || self.simplices.binary_search(&s).is_ok()
    }

    /// Number of simplices in each dimension `0, 1, …`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for s in &self.simplices {
            let d = s.size() - 1;
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        f
    }

    /// `-1` for the empty complex.
    pub fn dimension(&self) -> i64 {
        self.f_vector().len() as i64 - 1
    }

    pub fn is_subcomplex_of(&self, other: &BoxComplex) -> bool {
        self.simplices.iter().all(|&s| other.contains(s))
    }

    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let n = self.labels.len();
        self.simplices
            .iter()
            .copied()
            .filter(|&s| {
                (0..n).filter(|&v| (s.a | s.b) >> v & 1 == 0).all(|v| {
                    !self.contains(Simplex::new(s.a | 1 << v, s.b))
                        && !self.contains(Simplex::new(s.a, s.b | 1 << v))
                })
            })
            .collect()
    }

    pub fn to_json(&self) -> BoxComplexJson {
        let names = |m: u32| bits(m as u128).map(|v| self.labels[v].clone()).collect();
        BoxComplexJson {
            schema: 1,
            variant: self.variant,
            vertices: self.labels.clone(),
            f_vector: self.f_vector(),
            dimension: self.dimension(),
            maximal_simplices: self
                .maximal_simplices()
                .into_iter()
                .map(|s| SimplexJson { a: names(s.a), b: names(s.b) })
                .collect(),
        }
    }
}

/// All submasks of `pool`, including `0`.
fn submasks(pool: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(pool);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & pool) };
        Some(cur)
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplexJson {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoxComplexJson {
    pub schema: u32,
    pub variant: Variant,
    pub vertices: Vec<String>,
    pub f_vector: Vec<usize>,
    pub dimension: i64,
    pub maximal_simplices: Vec<SimplexJson>,
}

/// Outcome of [`check_z2_structure`], with the first failing simplex for
/// each property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Check {
    pub hereditary: bool,
    pub involution_closed: bool,
    pub free: bool,
    /// A simplex with a missing facet, and that facet.
    pub hereditary_witness: Option<(Simplex, Simplex)>,
    pub involution_witness: Option<Simplex>,
    pub free_witness: Option<Simplex>,
}

impl Z2Check {
    pub fn all_ok(&self) -> bool {
        self.hereditary && self.involution_closed && self.free
    }
}

pub fn check_z2_structure(c: &BoxComplex) -> Z2Check {
    let hereditary_witness = c
        .simplices
        .iter()
        .find_map(|&s| s.facets().find(|&f| !c.contains(f)).map(|f| (s, f)));
    let involution_witness = c.simplices.iter().copied().find(|&s| !c.contains(s.swap()));
    let free_witness = c.simplices.iter().copied().find(|&s| s.swap() == s);
    Z2Check {
        hereditary: hereditary_witness.is_none(),
        involution_closed: involution_witness.is_none(),
        free: free_witness.is_none(),
        hereditary_witness,
        involution_witness,
        free_witness,
    }
}

/// Outcome of [`hom_induced_map`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCheck {
    pub ok: bool,
    /// A simplex of the source whose image is missing, or whose image does
    /// not commute with the swap.
    pub violation: Option<Simplex>,
}

fn image(map: &[usize], set: u32) -> u32 {
    bits(set as u128).fold(0, |acc, v| acc | 1 << map[v])
}

/// Check that `(v,i) ↦ (f(v),i)` maps `variant(G)` simplicially and
/// equivariantly into `variant(H)`. `f` must be a homomorphism.
pub fn hom_induced_map(g: &Graph, h: &Graph, f: &[usize], variant: Variant) -> Result<MapCheck> {
    if !crate::coloring::is_homomorphism(g, h, f) {
        return Err(Error::domain("map is not a graph homomorphism"));
    }
    let source = BoxComplex::build(g, variant)?;
    let target = BoxComplex::build(h, variant)?;
    let send = |s: Simplex| Simplex::new(image(f, s.a), image(f, s.b));
    let violation = source
        .simplices()
        .iter()
        .copied()
        .find(|&s| !target.contains(send(s)) || send(s.swap()) != send(s).swap());
    Ok(MapCheck { ok: violation.is_none(), violation })
}
