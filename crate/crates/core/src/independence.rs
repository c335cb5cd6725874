//! Exact maximum clique / maximum independent set by branch and bound with
//! greedy-colouring upper bounds, on single-word adjacency masks.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Greedy colouring of `candidates`; returns vertices sorted by colour and
/// the colour (1-based) of each.
fn colour_sort(adj: &[u64], candidates: u64) -> (Vec<usize>, Vec<u32>) {
    let mut order = Vec::with_capacity(candidates.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = candidates;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !adj[v] & !(1 << v);
            uncoloured &= !(1 << v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

fn expand(adj: &[u64], clique: u64, mut candidates: u64, best: &mut u64) {
    let (order, colours) = colour_sort(adj, candidates);
    for idx in (0..order.len()).rev() {
        if clique.count_ones() + colours[idx] <= best.count_ones() {
            return;
        }
        let v = order[idx];
        let next = clique | 1 << v;
        let rest = candidates & adj[v];
        if rest == 0 {
            if next.count_ones() > best.count_ones() {
                *best = next;
            }
        } else {
            expand(adj, next, rest, best);
        }
        candidates &= !(1 << v);
    }
}

/// Maximum clique of the graph given by single-word adjacency rows.
pub fn max_clique_mask(adj: &[u64]) -> u64 {
    assert!(adj.len() <= 64);
    let all = if adj.len() == 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    let mut best = 0;
    if all != 0 {
        expand(adj, 0, all, &mut best);
    }
    best
}

fn guard(g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(64);
    if g.n() > limit {
        return Err(Error::TooLarge {
            what: "vertices",
            actual: g.n(),
            limit,
        });
    }
    Ok(())
}

/// A maximum independent set, sorted ascending.
pub fn max_independent_set(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    guard(g, limit)?;
    let comp = g.complement().masks();
    Ok(bits(max_clique_mask(&comp)).collect())
}

/// A maximum clique, sorted ascending.
pub fn max_clique(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    guard(g, limit)?;
    Ok(bits(max_clique_mask(&g.masks())).collect())
}

/// The independence number `α(g)`.
pub fn alpha(g: &Graph, limit: usize) -> Result<usize> {
    max_independent_set(g, limit).map(|s| s.len())
}

pub(crate) fn mask_bits(mask: u64) -> impl Iterator<Item = usize> {
    bits(mask)
}
