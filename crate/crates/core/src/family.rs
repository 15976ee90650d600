//! Named parameter families: `kneser:n,k`, `schrijver:n,k`, `sstable:n,k,s`
//! and `pnks:n,k,s`.

use std::fmt;
use std::str::FromStr;

use crate::alternation::{property_pnks, StableMatchingProperty};
use crate::error::{Error, Result};
use crate::hypergraph::{complete_k_uniform, s_stable_k_uniform, schrijver_k_uniform, Hypergraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `K_n^k`
    Kneser { n: usize, k: usize },
    /// `K̃_n^k`, the 2-stable `k`-subsets.
    Schrijver { n: usize, k: usize },
    /// `s`-stable `k`-subsets of `[n]`.
    Stable { n: usize, k: usize, s: usize },
    /// The signed property `P(n,k,s)`; not a hypergraph.
    Pnks { n: usize, k: usize, s: usize },
}

/// What a family spec produces.
pub enum Family {
    Hypergraph(Hypergraph),
    Property(StableMatchingProperty),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Family> {
        Ok(match *self {
            FamilySpec::Kneser { n, k } => Family::Hypergraph(complete_k_uniform(n, k)?),
            FamilySpec::Schrijver { n, k } => Family::Hypergraph(schrijver_k_uniform(n, k)?),
            FamilySpec::Stable { n, k, s } => Family::Hypergraph(s_stable_k_uniform(n, k, s)?),
            FamilySpec::Pnks { n, k, s } => Family::Property(property_pnks(n, k, s)?),
        })
    }

    pub fn hypergraph(&self) -> Result<Hypergraph> {
        match self.build()? {
            Family::Hypergraph(h) => Ok(h),
            Family::Property(_) => Err(Error::domain(format!("`{self}` is a signed property, not a hypergraph"))),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (name, args) = text
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("family spec {text:?} must look like name:n,k[,s]")))?;
        let nums = args
            .split(',')
            .map(|a| {
                a.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(format!("family spec {text:?}: {a:?} is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |want: usize| -> Result<()> {
            if nums.len() == want {
                Ok(())
            } else {
                Err(Error::parse(format!("family `{name}` takes {want} parameters, got {}", nums.len())))
            }
        };
        match name.trim().to_ascii_lowercase().as_str() {
            "kneser" => arity(2).map(|_| FamilySpec::Kneser { n: nums[0], k: nums[1] }),
            "schrijver" => arity(2).map(|_| FamilySpec::Schrijver { n: nums[0], k: nums[1] }),
            "sstable" => arity(3).map(|_| FamilySpec::Stable { n: nums[0], k: nums[1], s: nums[2] }),
            "pnks" => arity(3).map(|_| FamilySpec::Pnks { n: nums[0], k: nums[1], s: nums[2] }),
            other => Err(Error::parse(format!(
                "unknown family `{other}` (expected kneser, schrijver, sstable or pnks)"
            ))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Kneser { n, k } => write!(f, "kneser:{n},{k}"),
            FamilySpec::Schrijver { n, k } => write!(f, "schrijver:{n},{k}"),
            FamilySpec::Stable { n, k, s } => write!(f, "sstable:{n},{k},{s}"),
            FamilySpec::Pnks { n, k, s } => write!(f, "pnks:{n},{k},{s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for text in ["kneser:5,2", "schrijver:6,2", "sstable:8,2,2", "pnks:8,2,2"] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("Kneser: 5, 2".parse::<FamilySpec>().unwrap(), FamilySpec::Kneser { n: 5, k: 2 });
        for bad in ["kneser", "kneser:5", "kneser:5,x", "petersen:5,2", "sstable:8,2"] {
            assert!(matches!(bad.parse::<FamilySpec>(), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn builds() {
        let h = "kneser:5,2".parse::<FamilySpec>().unwrap().hypergraph().unwrap();
        assert_eq!(h.edge_count(), 10);
        let h = "schrijver:6,2".parse::<FamilySpec>().unwrap().hypergraph().unwrap();
        assert_eq!(h.edge_count(), 9);
        assert!("pnks:8,2,2".parse::<FamilySpec>().unwrap().hypergraph().is_err());
        assert!(matches!(
            "pnks:8,2,2".parse::<FamilySpec>().unwrap().build().unwrap(),
            Family::Property(_)
        ));
    }
}
