//! Simple undirected graphs on at most 128 vertices, stored as bit rows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{complete_k_uniform, s_stable_k_uniform, Hypergraph};

pub const MAX_GRAPH_VERTICES: usize = 128;

/// Iterate the set bits of a row.
pub(crate) fn bits(mut row: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if row == 0 {
            None
        } else {
            let v = row.trailing_zeros() as usize;
            row &= row - 1;
            Some(v)
        }
    })
}

pub(crate) fn full_row(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    rows: Vec<u128>,
}

impl Graph {
    /// Edgeless graph with the given vertex labels.
    pub fn empty(labels: Vec<String>) -> Result<Self> {
        if labels.len() > MAX_GRAPH_VERTICES {
            return Err(Error::capacity(format!(
                "graph has {} vertices, at most {MAX_GRAPH_VERTICES} are supported",
                labels.len()
            )));
        }
        let rows = vec![0; labels.len()];
        Ok(Graph { labels, rows })
    }

    pub fn with_order(n: usize) -> Result<Self> {
        Self::empty((1..=n).map(|i| i.to_string()).collect())
    }

    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(labels)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::with_order(n)?;
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b)?;
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain("a cycle needs at least 3 vertices"));
        }
        let mut g = Self::with_order(n)?;
        for a in 0..n {
            g.add_edge(a, (a + 1) % n)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.vertex_count();
        if a >= n || b >= n {
            return Err(Error::domain(format!("edge ({a},{b}) leaves the vertex range 0..{n}")));
        }
        if a == b {
            return Err(Error::domain(format!("loop at vertex {a}")));
        }
        self.rows[a] |= 1u128 << b;
        self.rows[b] |= 1u128 << a;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u128 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.vertex_count() {
            for b in bits(self.rows[a]) {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = 0u128;
        let mut out = Vec::new();
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u128 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u128;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            schema: 1,
            vertices: self.labels.clone(),
            adjacency: self.rows.iter().map(|&r| bits(r).collect()).collect(),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        raw.into_graph()
    }
}

/// Adjacency-list exchange format. Lists hold vertex indices.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    #[serde(default = "schema_one")]
    pub schema: u32,
    pub vertices: Vec<String>,
    pub adjacency: Vec<Vec<usize>>,
}

fn schema_one() -> u32 {
    1
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Graph> {
        if self.adjacency.len() != self.vertices.len() {
            return Err(Error::domain("adjacency must list one row per vertex"));
        }
        let mut g = Graph::empty(self.vertices)?;
        for (a, row) in self.adjacency.iter().enumerate() {
            for &b in row {
                g.add_edge(a, b)?;
            }
        }
        for (a, row) in self.adjacency.iter().enumerate() {
            for &b in row {
                if !self.adjacency[b].contains(&a) {
                    return Err(Error::domain(format!("adjacency is not symmetric at ({a},{b})")));
                }
            }
        }
        Ok(g)
    }
}

/// `KG(H)`: one vertex per edge of `H`, adjacent when the edges are disjoint.
pub fn kneser_graph(h: &Hypergraph) -> Result<Graph> {
    let edges = h.edges();
    let labels = edges.iter().map(|&e| h.format_set(e)).collect();
    let mut g = Graph::empty(labels)?;
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            if edges[a].is_disjoint(edges[b]) {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// `KG(n,k)`.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    kneser_graph(&complete_k_uniform(n, k)?)
}

/// `KG(n,k)_s`, the `s`-stable Kneser graph (`s = 2` is the Schrijver graph).
pub fn stable_kneser(n: usize, k: usize, s: usize) -> Result<Graph> {
    kneser_graph(&s_stable_k_uniform(n, k, s)?)
}
