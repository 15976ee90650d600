//! Sign vectors, signed pairs and the alternation numbers `alt` / `salt`.
//!
//! A sign vector `X ∈ {+,−,0}^n` is read through a bijection `σ` from
//! positions to vertices as the signed pair `(σ(X⁺), σ(X⁻))`. The alternation
//! number of a signed-increasing property is the largest `alt(X)` whose pair
//! falls outside the property.

mod property;
mod search;

pub use property::{
    check_superset_closed, property_pnks, EdgeCondition, EdgeProperty, FnProperty, SignedProperty,
    StableMatchingProperty, SupersetCheck,
};
pub use search::{
    alt_hypergraph, alt_min, alt_property, hypergraph_alternation, salt_hypergraph, AltMin,
    AltOutcome, SearchBudget,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }
}

/// An element of `{+,−,0}^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(entries: Vec<Sign>) -> Self {
        SignVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        SignVector(vec![Sign::Zero; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Sign] {
        &self.0
    }

    /// Length of the longest alternating subsequence of nonzero entries.
    pub fn alt(&self) -> usize {
        alt_of(self)
    }

    pub fn negate(&self) -> SignVector {
        SignVector(self.0.iter().map(|s| s.negate()).collect())
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|&&s| s != Sign::Zero).count()
    }

    /// Positions holding `+` and `−` (0-based).
    pub fn split(&self) -> (VertexSet, VertexSet) {
        let mut plus = VertexSet::EMPTY;
        let mut minus = VertexSet::EMPTY;
        for (i, s) in self.0.iter().enumerate() {
            match s {
                Sign::Plus => plus.insert(i),
                Sign::Minus => minus.insert(i),
                Sign::Zero => {}
            }
        }
        (plus, minus)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

impl FromStr for SignVector {
    type Err = Error;

    /// Parses strings such as `"+-0+-"`; `−` is accepted as a minus.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                '0' => Ok(Sign::Zero),
                other => Err(Error::parse(format!("invalid sign symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

/// Longest alternating subsequence among the nonzero entries. Taking one
/// entry from every maximal run of equal signs is optimal, so this is the
/// number of runs.
pub fn alt_of(x: &SignVector) -> usize {
    let mut count = 0;
    let mut last = Sign::Zero;
    for &s in &x.0 {
        if s != Sign::Zero && s != last {
            count += 1;
            last = s;
        }
    }
    count
}

/// An element `(A, B)` of the signed power set: two disjoint vertex sets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPair {
    pub plus: VertexSet,
    pub minus: VertexSet,
}

impl SignedPair {
    pub fn new(plus: VertexSet, minus: VertexSet) -> Result<Self> {
        if !plus.is_disjoint(minus) {
            return Err(Error::domain("the two sides of a signed pair must be disjoint"));
        }
        Ok(SignedPair { plus, minus })
    }

    /// `(A,B) ⊆ (C,D)` iff `A ⊆ C` and `B ⊆ D`.
    pub fn is_contained_in(self, other: SignedPair) -> bool {
        self.plus.is_subset(other.plus) && self.minus.is_subset(other.minus)
    }

    pub fn swap(self) -> SignedPair {
        SignedPair { plus: self.minus, minus: self.plus }
    }

    pub fn support(self) -> VertexSet {
        self.plus.union(self.minus)
    }
}

/// A bijection `σ` from positions `0..n` onto vertex indices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bijection(Vec<usize>);

impl Bijection {
    pub fn identity(n: usize) -> Self {
        Bijection((0..n).collect())
    }

    /// `images[i]` is the vertex at position `i`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::domain(format!("{images:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(Bijection(images))
    }

    /// Bijection given as the sequence of vertex names, position by position.
    pub fn from_names<S: AsRef<str>>(h: &Hypergraph, names: &[S]) -> Result<Self> {
        if names.len() != h.vertex_count() {
            return Err(Error::domain(format!(
                "ordering lists {} vertices, the hypergraph has {}",
                names.len(),
                h.vertex_count()
            )));
        }
        let images = names
            .iter()
            .map(|n| {
                h.index_of(n.as_ref())
                    .ok_or_else(|| Error::domain(format!("unknown vertex {:?}", n.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Bijection::new(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn image(&self, position: usize) -> usize {
        self.0[position]
    }

    /// `X ↦ X_σ = (σ(X⁺), σ(X⁻))`.
    pub fn apply(&self, x: &SignVector) -> SignedPair {
        debug_assert_eq!(x.len(), self.len());
        let mut pair = SignedPair::default();
        for (pos, s) in x.entries().iter().enumerate() {
            match s {
                Sign::Plus => pair.plus.insert(self.0[pos]),
                Sign::Minus => pair.minus.insert(self.0[pos]),
                Sign::Zero => {}
            }
        }
        pair
    }

    /// Reversed order, `i ↦ σ(n−1−i)`.
    pub fn reversed(&self) -> Bijection {
        Bijection(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Debug for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bijection({:?})", self.0)
    }
}

/// Which of the two alternation numbers to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AltMode {
    /// Neither side may contain an edge.
    Alt,
    /// At least one side must be edge-free.
    Salt,
}

impl FromStr for AltMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alt" => Ok(AltMode::Alt),
            "salt" => Ok(AltMode::Salt),
            other => Err(Error::parse(format!("mode must be `alt` or `salt`, got {other:?}"))),
        }
    }
}

impl fmt::Display for AltMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AltMode::Alt => "alt",
            AltMode::Salt => "salt",
        })
    }
}
