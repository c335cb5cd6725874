//! Small-graph isomorphism by brute force over vertex permutations.
//!
//! A graph on `n` vertices is coded as a `u64` whose bit `j(j−1)/2 + i` is
//! set when `ij` (`i < j`) is an edge, the same pair order graph6 uses. The
//! canonical code is the smallest code over all relabelings.

use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` for which canonical forms are computed.
pub const ISO_MAX_N: usize = 8;
/// Largest `n` whose code fits in a `u64`.
pub const CODE_MAX_N: usize = 11;

fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooLarge {
            what: "vertices",
            actual: n,
            limit,
        });
    }
    Ok(())
}

pub fn code_of(g: &Graph) -> Result<u64> {
    check(g.n(), CODE_MAX_N)?;
    Ok(g.edges().fold(0, |code, (u, v)| code | 1 << pair_index(u, v)))
}

pub fn graph_from_code(n: usize, code: u64) -> Result<Graph> {
    check(n, CODE_MAX_N)?;
    if pair_count(n) < 64 && code >> pair_count(n) != 0 {
        return Err(Error::BadParameter("code has bits beyond the vertex pairs".into()));
    }
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// For each permutation, where each pair index goes.
fn pair_maps(n: usize) -> Vec<Vec<u8>> {
    (0..n)
        .permutations(n)
        .map(|perm| {
            (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .map(|(i, j)| pair_index(perm[i], perm[j]) as u8)
                .collect()
        })
        .collect()
}

fn apply(map: &[u8], code: u64) -> u64 {
    let mut out = 0;
    let mut rest = code;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << map[k];
    }
    out
}

pub fn canonical_code(g: &Graph) -> Result<u64> {
    check(g.n(), ISO_MAX_N)?;
    let code = code_of(g)?;
    Ok(pair_maps(g.n()).iter().map(|m| apply(m, code)).min().unwrap_or(code))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_code(a)? == canonical_code(b)?)
}

pub fn is_self_complementary(g: &Graph) -> Result<bool> {
    are_isomorphic(g, &g.complement())
}

/// Largest `n` for [`isomorphism_classes`].
pub const CLASSES_MAX_N: usize = 7;

/// One representative per isomorphism class on `n` vertices, each in
/// canonical form, in increasing code order.
pub fn isomorphism_classes(n: usize) -> Result<Vec<Graph>> {
    check(n, CLASSES_MAX_N)?;
    let pairs = pair_count(n);
    let maps = pair_maps(n);
    let mut seen = vec![false; 1 << pairs];
    let mut classes = Vec::new();
    for code in 0..(1u64 << pairs) {
        if seen[code as usize] {
            continue;
        }
        for m in &maps {
            seen[apply(m, code) as usize] = true;
        }
        classes.push(graph_from_code(n, code)?);
    }
    Ok(classes)
}
