//! Finite simple undirected graphs on the dense vertex set `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex. Most of the exact
//! solvers only accept `n <= 64` and work on the single-word rows returned by
//! [`Graph::row_mask`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Graph {
            n,
            words,
            rows: vec![0; words * n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from single-word adjacency rows (`n <= 64`).
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        assert!(n <= WORD);
        let mut g = Graph::empty(n);
        for (u, &mask) in masks.iter().enumerate() {
            for v in (u + 1)..n {
                if mask >> v & 1 == 1 {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (v / WORD, v % WORD);
        let (wv, bv) = (u / WORD, u % WORD);
        if on {
            self.rows[u * self.words + wu] |= 1 << bu;
            self.rows[v * self.words + wv] |= 1 << bv;
        } else {
            self.rows[u * self.words + wu] &= !(1 << bu);
            self.rows[v * self.words + wv] &= !(1 << bv);
        }
    }

    /// Adds the edge `uv`. Loops are rejected; repeated edges are no-ops.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::BadParameter(alloc::format!("loop at vertex {u}")));
        }
        self.set(u, v, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u != v {
            self.set(u, v, false);
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbourhood of `v` as a single word. Only valid for `n <= 64`.
    pub fn row_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= WORD);
        self.rows[v * self.words]
    }

    /// All adjacency rows as single words. Only valid for `n <= 64`.
    pub fn masks(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.row_mask(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        (0..self.n).filter(move |&u| row[u / WORD] >> (u % WORD) & 1 == 1)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        g
    }

    fn same_order(&self, other: &Graph) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VertexCountMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Edge-set union of two graphs on the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        self.same_order(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a | b).collect();
        Ok(Graph { rows, ..self.clone() })
    }

    /// Edge-set intersection of two graphs on the same vertex set.
    pub fn intersection(&self, other: &Graph) -> Result<Graph> {
        self.same_order(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a & b).collect();
        Ok(Graph { rows, ..self.clone() })
    }

    /// `self ∨ other`: the disjoint union plus every edge between the two
    /// sides. `other`'s vertices are renumbered to `n1..n1+n2`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set(u, self.n + v, true);
            }
        }
        g
    }

    /// Places `other` after `self`, renumbering its vertices to `n1..n1+n2`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set(self.n + u, self.n + v, true);
        }
        g
    }

    /// The subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            self.check(v)?;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if u == v {
                    return Err(Error::BadParameter(alloc::format!("vertex {u} repeated")));
                }
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// The graph with `v` deleted; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::BadParameter("permutation length differs from n".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || core::mem::replace(&mut seen[p], true) {
                return Err(Error::BadParameter("not a permutation".into()));
            }
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        Ok(g)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            self.row(u)
                .iter()
                .zip(self.row(v))
                .all(|(a, b)| a & b == 0)
        })
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Adjacency-pattern check for four vertices: `ab`, `cd` edges and
    /// `ac`, `bd` non-edges.
    pub fn is_alternating_c4(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        distinct
            && self.has_edge(a, b)
            && self.has_edge(c, d)
            && !self.has_edge(a, c)
            && !self.has_edge(b, d)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}
