//! Generators for the graph families used throughout the crate.
//!
//! Vertex numbering:
//! - paths and cycles are numbered along the walk;
//! - complete multipartite graphs are numbered part by part;
//! - caterpillars put the spine `p_1..p_m` first (vertices `0..m`), then the
//!   leaves, grouped by the `(spine index, count)` entries in spec order;
//! - `matching(k)` pairs `2i` with `2i + 1`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::BadParameter(alloc::format!("{name} must be positive")));
    }
    Ok(())
}

pub fn path(n: usize) -> Result<Graph> {
    positive("path length", n)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter("a cycle needs at least 3 vertices".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    positive("clique size", n)?;
    Ok(Graph::empty(n).complement())
}

/// `K_{n_1, ..., n_k}`.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() {
        return Err(Error::BadParameter("need at least one part".into()));
    }
    for &s in sizes {
        positive("part size", s)?;
    }
    let part_of: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(p, &s)| core::iter::repeat_n(p, s))
        .collect();
    let n = part_of.len();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// `K_{1,m}` with the centre at vertex 0.
pub fn star(m: usize) -> Result<Graph> {
    positive("number of leaves", m)?;
    Graph::from_edges(m + 1, (1..=m).map(|i| (0, i)))
}

/// `kK_2`.
pub fn matching(k: usize) -> Result<Graph> {
    positive("matching size", k)?;
    Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1)))
}

/// A caterpillar: a spine path `p_1..p_m` plus pendant leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaterpillarSpec {
    spine_length: usize,
    leaves: Vec<(usize, usize)>,
}

impl CaterpillarSpec {
    /// `leaves` holds `(spine index, leaf count)` pairs with 1-based spine
    /// indices. An index may appear more than once.
    pub fn new(spine_length: usize, leaves: Vec<(usize, usize)>) -> Result<Self> {
        if spine_length == 0 {
            return Err(Error::BadSpec("spine length must be at least 1".into()));
        }
        for &(i, _) in &leaves {
            if i == 0 || i > spine_length {
                return Err(Error::BadSpec(alloc::format!(
                    "spine index {i} outside 1..={spine_length}"
                )));
            }
        }
        Ok(CaterpillarSpec {
            spine_length,
            leaves,
        })
    }

    pub fn path(m: usize) -> Result<Self> {
        Self::new(m, Vec::new())
    }

    pub fn spine_length(&self) -> usize {
        self.spine_length
    }

    pub fn leaves(&self) -> &[(usize, usize)] {
        &self.leaves
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.iter().map(|&(_, c)| c).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.spine_length + self.leaf_count()
    }

    /// 1-based spine index of every leaf, in vertex order.
    pub fn leaf_parents(&self) -> impl Iterator<Item = usize> + '_ {
        self.leaves
            .iter()
            .flat_map(|&(i, c)| core::iter::repeat_n(i, c))
    }
}

pub fn caterpillar(spec: &CaterpillarSpec) -> Result<Graph> {
    let m = spec.spine_length();
    let mut g = Graph::empty(spec.vertex_count());
    for i in 1..m {
        g.add_edge(i - 1, i)?;
    }
    for (offset, parent) in spec.leaf_parents().enumerate() {
        g.add_edge(parent - 1, m + offset)?;
    }
    Ok(g)
}

/// Disjoint union of caterpillars, numbered component by component.
pub fn caterpillar_forest(specs: &[CaterpillarSpec]) -> Result<Graph> {
    if specs.is_empty() {
        return Err(Error::BadSpec("need at least one caterpillar".into()));
    }
    let mut g = Graph::empty(0);
    for spec in specs {
        g = g.disjoint_union(&caterpillar(spec)?);
    }
    Ok(g)
}

/// A named family with its parameters, as accepted by [`generate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteMultipartite(Vec<usize>),
    Star(usize),
    Caterpillar(CaterpillarSpec),
    Matching(usize),
}

pub fn generate(family: &Family) -> Result<Graph> {
    match family {
        Family::Path(n) => path(*n),
        Family::Cycle(n) => cycle(*n),
        Family::Complete(n) => complete(*n),
        Family::Empty(n) => Ok(Graph::empty(*n)),
        Family::CompleteMultipartite(sizes) => complete_multipartite(sizes),
        Family::Star(m) => star(*m),
        Family::Caterpillar(spec) => caterpillar(spec),
        Family::Matching(k) => matching(*k),
    }
}

impl Family {
    pub fn name(&self) -> String {
        let s = match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Empty(_) => "empty",
            Family::CompleteMultipartite(_) => "multipartite",
            Family::Star(_) => "star",
            Family::Caterpillar(_) => "caterpillar",
            Family::Matching(_) => "matching",
        };
        s.into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle_edges() {
        let p4 = path(4).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), [(0, 1), (1, 2), (2, 3)]);
        for n in 1..12 {
            assert_eq!(path(n).unwrap().edge_count(), n - 1);
        }
        for n in 3..12 {
            let c = cycle(n).unwrap();
            assert_eq!(c.edge_count(), n);
            assert!((0..n).all(|v| c.degree(v) == 2));
        }
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn k22_is_c4_relabelled() {
        let k22 = complete_multipartite(&[2, 2]).unwrap();
        // parts {0,1} and {2,3}; walk 0-2-1-3-0
        let c4 = cycle(4).unwrap().relabel(&[0, 2, 1, 3]).unwrap();
        assert_eq!(k22, c4);
    }

    #[test]
    fn multipartite_edge_count() {
        for sizes in [vec![1, 2, 3], vec![2, 2, 2], vec![4], vec![3, 1, 1, 5]] {
            let g = complete_multipartite(&sizes).unwrap();
            let expected: usize = (0..sizes.len())
                .flat_map(|i| ((i + 1)..sizes.len()).map(move |j| (i, j)))
                .map(|(i, j)| sizes[i] * sizes[j])
                .sum();
            assert_eq!(g.edge_count(), expected);
        }
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn caterpillar_examples() {
        let p3 = caterpillar(&CaterpillarSpec::path(3).unwrap()).unwrap();
        assert_eq!(p3, path(3).unwrap());

        // spine p1 p2, one leaf each: vertices 0,1 spine, 2 on p1, 3 on p2
        let spec = CaterpillarSpec::new(2, vec![(1, 1), (2, 1)]).unwrap();
        let g = caterpillar(&spec).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 1), (0, 2), (1, 3)]);
        assert_eq!(g, path(4).unwrap().relabel(&[2, 0, 1, 3]).unwrap());

        let s = caterpillar(&CaterpillarSpec::new(1, vec![(1, 3)]).unwrap()).unwrap();
        assert_eq!(s, star(3).unwrap());

        assert!(CaterpillarSpec::new(0, vec![]).is_err());
        assert!(CaterpillarSpec::new(3, vec![(4, 1)]).is_err());
        assert!(CaterpillarSpec::new(3, vec![(0, 1)]).is_err());
    }

    #[test]
    fn forest_is_disjoint_union() {
        let specs = [CaterpillarSpec::path(2).unwrap(), CaterpillarSpec::path(2).unwrap()];
        assert_eq!(caterpillar_forest(&specs).unwrap(), matching(2).unwrap());
    }

    #[test]
    fn generator_outputs_are_simple() {
        let families = [
            Family::Path(7),
            Family::Cycle(7),
            Family::Complete(6),
            Family::Empty(3),
            Family::CompleteMultipartite(vec![2, 3, 1]),
            Family::Star(5),
            Family::Caterpillar(CaterpillarSpec::new(4, vec![(2, 2), (4, 1)]).unwrap()),
            Family::Matching(3),
        ];
        for f in &families {
            let g = generate(f).unwrap();
            for u in 0..g.n() {
                assert!(!g.has_edge(u, u));
                for v in 0..g.n() {
                    assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                }
            }
        }
    }
}
