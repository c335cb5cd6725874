//! Recognizes graphs that one of the structured constructions applies to,
//! up to relabeling, and runs the construction in `g`'s own labels.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::generators::CaterpillarSpec;
use crate::graph::Graph;

use super::{cycle_3dim, forest_of_caterpillars, multipartite_kdim, Representation};

/// Spine of one tree component in walk order, or `None` if the component
/// is not a caterpillar.
fn component_spine(g: &Graph, comp: &[usize]) -> Option<Vec<usize>> {
    if comp.len() <= 2 {
        return Some(comp.to_vec());
    }
    let inner: Vec<usize> = comp.iter().copied().filter(|&v| g.degree(v) > 1).collect();
    let inner_degree = |v: usize| g.neighbors(v).filter(|u| inner.contains(u)).count();
    if inner.iter().any(|&v| inner_degree(v) > 2) {
        return None;
    }
    // `inner` induces a subtree, so with degrees at most 2 it is a path.
    let start = inner.iter().copied().find(|&v| inner_degree(v) <= 1)?;
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = g.neighbors(cur).find(|&u| u != prev && inner.contains(&u)) {
        spine.push(next);
        prev = cur;
        cur = next;
    }
    Some(spine)
}

/// If `g` is a forest of caterpillars, returns one spec per component and
/// the labeling `order`, where vertex `i` of the generated forest is vertex
/// `order[i]` of `g`.
pub fn caterpillar_layout(g: &Graph) -> Option<(Vec<CaterpillarSpec>, Vec<usize>)> {
    if g.n() == 0 || g.edge_count() + g.components().len() != g.n() {
        return None;
    }
    let mut specs = Vec::new();
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let spine = component_spine(g, &comp)?;
        let mut leaves = Vec::new();
        let mut leaf_vertices = Vec::new();
        for (i, &p) in spine.iter().enumerate() {
            let hanging: Vec<usize> = g.neighbors(p).filter(|u| !spine.contains(u)).collect();
            if !hanging.is_empty() {
                leaves.push((i + 1, hanging.len()));
                leaf_vertices.extend(hanging);
            }
        }
        specs.push(CaterpillarSpec::new(spine.len(), leaves).ok()?);
        order.extend(spine);
        order.extend(leaf_vertices);
    }
    Some((specs, order))
}

/// Two-dimensional min-plus representation of a forest of caterpillars.
pub fn caterpillar_rep_for(g: &Graph, k: usize) -> Result<Representation> {
    let (specs, order) = caterpillar_layout(g)
        .ok_or_else(|| Error::BadSpec("graph is not a forest of caterpillars".into()))?;
    forest_of_caterpillars(&specs, k)?.permuted(&order)
}

/// The parts of `g` if it is complete multipartite with at least two parts.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let comp = g.complement();
    let parts = comp.components();
    if parts.len() < 2 || parts.iter().any(|p| !comp.is_clique(p)) {
        return None;
    }
    Some(parts)
}

/// Min-plus representation of a complete multipartite graph of dimension
/// `max(k − m, 1)`, `m` being the number of singleton parts.
pub fn multipartite_rep_for(g: &Graph) -> Result<Representation> {
    let parts = multipartite_parts(g)
        .ok_or_else(|| Error::BadSpec("graph is not complete multipartite".into()))?;
    let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
    let order: Vec<usize> = parts.into_iter().flatten().collect();
    multipartite_kdim(&sizes)?.permuted(&order)
}

/// Vertices of `g` in walk order if `g` is a single cycle.
pub fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0).next()?;
    while cur != 0 {
        order.push(cur);
        let next = g.neighbors(cur).find(|&u| u != prev)?;
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// Three-dimensional min-plus representation of a cycle on at least 5
/// vertices.
pub fn cycle_rep_for(g: &Graph) -> Result<Representation> {
    let order = cycle_order(g).ok_or_else(|| Error::BadSpec("graph is not a cycle".into()))?;
    cycle_3dim(g.n())?.permuted(&order)
}
