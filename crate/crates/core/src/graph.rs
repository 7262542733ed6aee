//! Undirected multigraphs with positive integer edge multiplicities.
//!
//! Vertices are numbered `1..=vertex_count` in every public interface.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::FromPrimitive;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::IntegerScalar;

/// A 1-based vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId(index)
    }
}

/// Undirected multigraph without self-loops.
///
/// Stored pairs are normalized as `(u, v)` with `u < v`; an absent pair has
/// multiplicity zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    multiplicities: BTreeMap<(usize, usize), u64>,
}

impl Multigraph {
    /// Edgeless graph on `vertex_count >= 1` vertices.
    pub fn new(vertex_count: usize) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Multigraph {
            vertex_count,
            multiplicities: BTreeMap::new(),
        })
    }

    /// Cycle on `n` vertices in label order. `n = 2` gives a double edge and
    /// `n = 1` a single vertex.
    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Multigraph::new(n)?;
        if n >= 2 {
            for v in 1..n {
                g.insert_edges(v, v + 1, 1)?;
            }
            g.insert_edges(n, 1, 1)?;
        }
        Ok(g)
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        let mut g = Multigraph::new(n)?;
        for v in 1..n {
            g.insert_edges(v, v + 1, 1)?;
        }
        Ok(g)
    }

    /// Complete simple graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Multigraph::new(n)?;
        for u in 1..=n {
            for v in u + 1..=n {
                g.insert_edges(u, v, 1)?;
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Returns a copy with `m` more parallel edges between `u` and `v`.
    pub fn add_edges(&self, u: impl Into<VertexId>, v: impl Into<VertexId>, m: u64) -> Result<Self> {
        let mut g = self.clone();
        g.insert_edges(u, v, m)?;
        Ok(g)
    }

    pub(crate) fn insert_edges(&mut self, u: impl Into<VertexId>, v: impl Into<VertexId>, m: u64) -> Result<()> {
        let (u, v) = (self.check(u)?, self.check(v)?);
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if m > 0 {
            *self.multiplicities.entry(ordered(u, v)).or_insert(0) += m;
        }
        Ok(())
    }

    fn check(&self, v: impl Into<VertexId>) -> Result<usize> {
        let v = v.into().index();
        if v == 0 || v > self.vertex_count {
            return Err(Error::OutOfRange {
                vertex: v,
                count: self.vertex_count,
            });
        }
        Ok(v)
    }

    pub fn multiplicity(&self, u: impl Into<VertexId>, v: impl Into<VertexId>) -> Result<u64> {
        let (u, v) = (self.check(u)?, self.check(v)?);
        Ok(self.multiplicities.get(&ordered(u, v)).copied().unwrap_or(0))
    }

    /// Sum of multiplicities of all edges incident to `v`.
    pub fn degree(&self, v: impl Into<VertexId>) -> Result<u64> {
        let v = self.check(v)?;
        Ok(self
            .multiplicities
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, m)| *m)
            .sum())
    }

    /// Distinct adjacent pairs `(u, v, multiplicity)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.multiplicities.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// Number of edges counting parallel edges separately.
    pub fn total_multiplicity(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for &(u, v) in self.multiplicities.keys() {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Whether every vertex is reachable from vertex 1.
    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.vertex_count + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Laplacian `D - A`: degrees on the diagonal, minus multiplicities off it.
    pub fn laplacian<T: IntegerScalar + FromPrimitive>(&self) -> Matrix<T> {
        let n = self.vertex_count;
        let mut lap = Matrix::<T>::zeros(n, n);
        for (&(u, v), &m) in &self.multiplicities {
            let m = T::from_u64(m).expect("multiplicity fits the scalar type");
            let (u, v) = (u - 1, v - 1);
            lap[(u, v)] = lap[(u, v)].clone() - m.clone();
            lap[(v, u)] = lap[(v, u)].clone() - m.clone();
            lap[(u, u)] = lap[(u, u)].clone() + m.clone();
            lap[(v, v)] = lap[(v, v)].clone() + m;
        }
        lap
    }

    /// Laplacian with the row and column of `drop` removed.
    pub fn reduced_laplacian<T: IntegerScalar + FromPrimitive>(&self, drop: impl Into<VertexId>) -> Result<Matrix<T>> {
        let drop = self.check(drop)?;
        if self.vertex_count < 2 {
            return Err(Error::TooSmall);
        }
        Ok(self.laplacian::<T>().without_row_col(drop - 1, drop - 1))
    }

    /// Serializes to the line-oriented text format read by [`Multigraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices {}\n", self.vertex_count);
        for (u, v, m) in self.edges() {
            let _ = writeln!(out, "edge {u} {v} {m}");
        }
        out
    }

    /// Graphviz rendering, parallel edges drawn individually.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 1..=self.vertex_count {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v, m) in self.edges() {
            for _ in 0..m {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
        out.push_str("}\n");
        out
    }

    /// Parses the text format:
    ///
    /// ```text
    /// # comment
    /// vertices 3
    /// edge 1 2 1
    /// edge 2 3 2
    /// ```
    ///
    /// Repeated `edge` lines for one pair accumulate.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph: Option<Multigraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse { line: line_no, message };
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap_or_default();
            let numbers = words
                .map(|w| {
                    w.parse::<u64>()
                        .map_err(|_| err(format!("expected a nonnegative integer, found `{w}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            match (keyword, graph.as_mut()) {
                ("vertices", None) => {
                    let [n] = numbers[..] else {
                        return Err(err("usage: vertices N".into()));
                    };
                    graph = Some(Multigraph::new(n as usize).map_err(|e| err(e.to_string()))?);
                }
                ("vertices", Some(_)) => return Err(err("duplicate `vertices` line".into())),
                ("edge", Some(g)) => {
                    let [u, v, m] = numbers[..] else {
                        return Err(err("usage: edge U V M".into()));
                    };
                    if m == 0 {
                        return Err(err("edge multiplicity must be at least 1".into()));
                    }
                    g.insert_edges(u as usize, v as usize, m)
                        .map_err(|e| err(e.to_string()))?;
                }
                ("edge", None) => return Err(err("`edge` before `vertices`".into())),
                (other, _) => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        graph.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `vertices` line".into(),
        })
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}
