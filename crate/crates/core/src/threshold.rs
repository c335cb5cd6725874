//! Threshold graphs: recognition with certificates, exact weight
//! realizations, the threshold sandwich test used by the cover solver, and
//! the largest induced threshold subgraph.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::mask_bits;
use crate::tropical::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    Isolated,
    Dominating,
}

/// One vertex of a creation sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CreationStep {
    pub vertex: usize,
    pub kind: StepKind,
}

/// Four vertices with `ab`, `cd` edges and `ac`, `bd` non-edges. Every
/// induced `C4`, `P4` or `2K2` contains one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlternatingC4 {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl AlternatingC4 {
    pub fn holds_in(&self, g: &Graph) -> bool {
        g.is_alternating_c4(self.a, self.b, self.c, self.d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ThresholdCertificate {
    /// Creation order: each vertex is isolated from, or dominates, all
    /// earlier ones.
    Yes(Vec<CreationStep>),
    No(AlternatingC4),
}

impl ThresholdCertificate {
    pub fn is_threshold(&self) -> bool {
        matches!(self, ThresholdCertificate::Yes(_))
    }

    /// Checks the certificate against `g`: a creation sequence must rebuild
    /// `g` exactly, a witness must match its adjacency.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            ThresholdCertificate::Yes(seq) => replay(g.n(), seq).is_ok_and(|h| &h == g),
            ThresholdCertificate::No(w) => w.holds_in(g),
        }
    }
}

/// Rebuilds the graph described by a creation sequence.
pub fn replay(n: usize, sequence: &[CreationStep]) -> Result<Graph> {
    if sequence.len() != n {
        return Err(Error::BadParameter("creation sequence must list every vertex once".into()));
    }
    let mut g = Graph::empty(n);
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for step in sequence {
        if step.vertex >= n || core::mem::replace(&mut seen[step.vertex], true) {
            return Err(Error::BadParameter("creation sequence must list every vertex once".into()));
        }
        if step.kind == StepKind::Dominating {
            for &u in &placed {
                g.add_edge(u, step.vertex)?;
            }
        }
        placed.push(step.vertex);
    }
    Ok(g)
}

/// Recognises threshold graphs by repeatedly peeling off an isolated or
/// dominating vertex (lowest index first).
pub fn is_threshold(g: &Graph) -> ThresholdCertificate {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut peeled = Vec::with_capacity(n);
    while remaining > 0 {
        let pick = (0..n).filter(|&v| alive[v]).find_map(|v| {
            if degree[v] == 0 {
                Some((v, StepKind::Isolated))
            } else if degree[v] == remaining - 1 {
                Some((v, StepKind::Dominating))
            } else {
                None
            }
        });
        let Some((v, kind)) = pick else {
            let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
            let witness = find_alternating_c4(g, &rest)
                .expect("a graph without isolated or dominating vertices has an alternating C4");
            return ThresholdCertificate::No(witness);
        };
        alive[v] = false;
        remaining -= 1;
        for u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
            }
        }
        peeled.push(CreationStep { vertex: v, kind });
    }
    peeled.reverse();
    if let Some(first) = peeled.first_mut() {
        first.kind = StepKind::Isolated;
    }
    ThresholdCertificate::Yes(peeled)
}

/// Searches `vertices` for an alternating C4 of `g`.
pub fn find_alternating_c4(g: &Graph, vertices: &[usize]) -> Option<AlternatingC4> {
    let edges: Vec<(usize, usize)> = vertices
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| vertices[i + 1..].iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| g.has_edge(u, v))
        .collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            for (c, d) in [(c, d), (d, c)] {
                if g.is_alternating_c4(a, b, c, d) {
                    return Some(AlternatingC4 { a, b, c, d });
                }
            }
        }
    }
    None
}

/// Weights `w` and threshold `t` with `w(u) + w(v) >= t` exactly on edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThresholdRealization {
    pub weights: Vec<Rational>,
    pub threshold: Rational,
}

impl ThresholdRealization {
    /// Exhaustive check of the edge biconditional over all pairs.
    pub fn realizes(&self, g: &Graph) -> bool {
        let n = g.n();
        self.weights.len() == n
            && (0..n).all(|u| {
                ((u + 1)..n).all(|v| {
                    (&self.weights[u] + &self.weights[v] >= self.threshold) == g.has_edge(u, v)
                })
            })
    }
}

/// Exact weights for a threshold graph. The vertex at creation position
/// `j` (1-based) gets `t/(j+2)` if isolated and `t - t/(j+2)` if dominating,
/// so every weight lies strictly inside `(0, t)`.
pub fn threshold_weights(g: &Graph, t: &Rational) -> Result<ThresholdRealization> {
    if !t.is_positive() {
        return Err(Error::BadParameter("threshold must be positive".into()));
    }
    let ThresholdCertificate::Yes(sequence) = is_threshold(g) else {
        return Err(Error::NotThreshold);
    };
    Ok(weights_from_sequence(g.n(), &sequence, t))
}

pub fn weights_from_sequence(n: usize, sequence: &[CreationStep], t: &Rational) -> ThresholdRealization {
    let mut weights = vec![Rational::default(); n];
    for (j, step) in sequence.iter().enumerate() {
        let small = t / int(j as i64 + 3);
        weights[step.vertex] = match step.kind {
            StepKind::Isolated => small,
            StepKind::Dominating => t - small,
        };
    }
    ThresholdRealization {
        weights,
        threshold: t.clone(),
    }
}

/// Threshold sandwich on single-word masks: finds a threshold graph `H`
/// with `lower ⊆ H ⊆ upper` on the vertex set `alive`, or `None`.
///
/// Greedy peeling is exact here: if a sandwich exists, every vertex that is
/// isolatable (no forced edge) or dominatable (all edges allowed) can be
/// removed without losing one.
pub(crate) fn sandwich_masks(lower: &[u64], upper: &[u64], alive: u64) -> Option<Vec<u64>> {
    let mut out = vec![0u64; lower.len()];
    let mut rem = alive;
    while rem != 0 {
        let mut pick = None;
        for v in mask_bits(rem) {
            let others = rem & !(1 << v);
            if upper[v] & others == others {
                pick = Some((v, true));
                break;
            }
            if pick.is_none() && lower[v] & others == 0 {
                pick = Some((v, false));
            }
        }
        let (v, dominating) = pick?;
        rem &= !(1 << v);
        if dominating {
            out[v] |= rem;
            for u in mask_bits(rem) {
                out[u] |= 1 << v;
            }
        }
    }
    Some(out)
}

/// `true` when `lower ⊆ H ⊆ upper` for some threshold `H` on `alive`.
pub(crate) fn sandwich_feasible(lower: &[u64], upper: &[u64], alive: u64) -> bool {
    let mut rem = alive;
    'outer: while rem != 0 {
        for v in mask_bits(rem) {
            let others = rem & !(1 << v);
            if upper[v] & others == others || lower[v] & others == 0 {
                rem &= !(1 << v);
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// A threshold graph `H` with `lower ⊆ H ⊆ upper`, if one exists.
pub fn threshold_sandwich(lower: &Graph, upper: &Graph) -> Result<Option<Graph>> {
    if lower.n() != upper.n() {
        return Err(Error::VertexCountMismatch {
            left: lower.n(),
            right: upper.n(),
        });
    }
    if lower.n() > 64 {
        return Err(Error::TooLarge {
            what: "vertices",
            actual: lower.n(),
            limit: 64,
        });
    }
    if lower.edges().any(|(u, v)| !upper.has_edge(u, v)) {
        return Ok(None);
    }
    let alive = full_mask(lower.n());
    Ok(sandwich_masks(&lower.masks(), &upper.masks(), alive).map(|m| Graph::from_masks(&m)))
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Largest vertex set inducing a threshold graph (exact branch and bound;
/// induced thresholdness is hereditary, so infeasible prefixes are cut).
pub fn max_induced_threshold(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    let limit = limit.min(64);
    if g.n() > limit {
        return Err(Error::TooLarge {
            what: "vertices",
            actual: g.n(),
            limit,
        });
    }
    let adj = g.masks();
    let mut best = 0u64;
    induced_search(&adj, 0, 0, &mut best);
    Ok(mask_bits(best).collect())
}

fn induced_search(adj: &[u64], next: usize, chosen: u64, best: &mut u64) {
    let n = adj.len();
    if chosen.count_ones() as usize + (n - next) <= best.count_ones() as usize {
        return;
    }
    if next == n {
        *best = chosen;
        return;
    }
    let with = chosen | 1 << next;
    if sandwich_feasible(adj, adj, with) {
        induced_search(adj, next + 1, with, best);
    }
    induced_search(adj, next + 1, chosen, best);
}
