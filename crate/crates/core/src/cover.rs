//! Threshold covers: the threshold dimension `Θ(G)` (fewest threshold
//! spanning subgraphs whose union is `G`) and the threshold intersection
//! number `Θ̂(G)` (fewest threshold graphs on `V` whose intersection is `G`).
//!
//! `Θ` is solved exactly by iterative deepening over the number of classes.
//! Each edge is assigned to a class; a partial class is kept only while some
//! threshold graph `H` with `class ⊆ H ⊆ G` exists (the sandwich test in
//! [`crate::threshold`]). Edges are picked DSATUR-style: fewest feasible
//! classes first. `Θ̂(G)` is `Θ` of the complement, complemented back.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{max_clique_mask, max_independent_set};
use crate::limits::ExactLimits;
use crate::threshold::{full_mask, is_threshold, sandwich_feasible, sandwich_masks};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverMode {
    /// Parts are threshold subgraphs of `G` with union `E(G)`.
    Union,
    /// Parts are threshold supergraphs of `G` with intersection `E(G)`.
    Intersection,
}

impl CoverMode {
    pub fn name(self) -> &'static str {
        match self {
            CoverMode::Union => "union",
            CoverMode::Intersection => "intersection",
        }
    }
}

/// A family of spanning threshold graphs, stored as sorted edge lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverSolution {
    pub mode: CoverMode,
    pub parts: Vec<Vec<(usize, usize)>>,
}

impl CoverSolution {
    pub fn new(mode: CoverMode, parts: Vec<Vec<(usize, usize)>>) -> Self {
        let parts = parts
            .into_iter()
            .map(|mut p| {
                for e in p.iter_mut() {
                    if e.0 > e.1 {
                        *e = (e.1, e.0);
                    }
                }
                p.sort_unstable();
                p.dedup();
                p
            })
            .collect();
        CoverSolution { mode, parts }
    }

    pub fn size(&self) -> usize {
        self.parts.len()
    }

    /// The parts as graphs on `n` vertices.
    pub fn part_graphs(&self, n: usize) -> Result<Vec<Graph>> {
        self.parts
            .iter()
            .map(|p| Graph::from_edges(n, p.iter().copied()))
            .collect()
    }

    /// Checks every invariant of the cover against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let parts = self
            .part_graphs(g.n())
            .map_err(|e| Error::InvalidCover(e.to_string()))?;
        for (i, p) in parts.iter().enumerate() {
            if !is_threshold(p).is_threshold() {
                return Err(Error::InvalidCover(alloc::format!("part {i} is not threshold")));
            }
            let nested = match self.mode {
                CoverMode::Union => p.edges().all(|(u, v)| g.has_edge(u, v)),
                CoverMode::Intersection => g.edges().all(|(u, v)| p.has_edge(u, v)),
            };
            if !nested {
                return Err(Error::InvalidCover(alloc::format!(
                    "part {i} is not a {} of the graph",
                    match self.mode {
                        CoverMode::Union => "subgraph",
                        CoverMode::Intersection => "supergraph",
                    }
                )));
            }
        }
        let combined = match self.mode {
            CoverMode::Union => parts
                .iter()
                .try_fold(Graph::empty(g.n()), |acc, p| acc.union(p))?,
            CoverMode::Intersection => parts
                .iter()
                .try_fold(Graph::empty(g.n()).complement(), |acc, p| acc.intersection(p))?,
        };
        if &combined != g {
            return Err(Error::InvalidCover(alloc::format!(
                "{} of the parts differs from the graph",
                self.mode.name()
            )));
        }
        Ok(())
    }

    /// Complements every part, turning a union cover of `Ḡ` into an
    /// intersection cover of `G` and back.
    pub fn complemented(&self, n: usize) -> Result<CoverSolution> {
        let mode = match self.mode {
            CoverMode::Union => CoverMode::Intersection,
            CoverMode::Intersection => CoverMode::Union,
        };
        let parts = self
            .part_graphs(n)?
            .iter()
            .map(|p| p.complement().edges().collect())
            .collect();
        Ok(CoverSolution::new(mode, parts))
    }
}

fn check_limits(g: &Graph, limits: &ExactLimits) -> Result<()> {
    let vmax = limits.cover_vertices.min(64);
    if g.n() > vmax {
        return Err(Error::TooLarge {
            what: "vertices",
            actual: g.n(),
            limit: vmax,
        });
    }
    if g.edge_count() > limits.cover_edges {
        return Err(Error::TooLarge {
            what: "edges",
            actual: g.edge_count(),
            limit: limits.cover_edges,
        });
    }
    Ok(())
}

/// Edges `ab`, `cd` that can never share a threshold subgraph of `G`:
/// four distinct vertices and `ac, bd ∉ E` or `ad, bc ∉ E`.
pub fn edges_conflict(g: &Graph, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let distinct = a != c && a != d && b != c && b != d;
    distinct
        && ((!g.has_edge(a, c) && !g.has_edge(b, d)) || (!g.has_edge(a, d) && !g.has_edge(b, c)))
}

/// The conflict graph on the edges of `g` (vertex `i` = `i`-th edge).
pub fn conflict_graph(g: &Graph) -> (Vec<(usize, usize)>, Graph) {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut h = Graph::empty(edges.len());
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            if edges_conflict(g, edges[i], edges[j]) {
                h.add_edge(i, j).expect("indices in range");
            }
        }
    }
    (edges, h)
}

/// Lower bound for `Θ`: a clique of pairwise conflicting edges, exact when
/// the graph has at most 64 edges, greedy otherwise.
fn conflict_lower_bound(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    let (_, h) = conflict_graph(g);
    if h.n() <= 64 {
        return (max_clique_mask(&h.masks()).count_ones() as usize).max(1);
    }
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(h.degree(v)));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| h.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.len().max(1)
}

/// Covers `g` with stars centred on the complement of `independent`
/// (a vertex cover), giving `Θ ≤ n − |independent|`.
pub fn star_cover(g: &Graph, independent: &[usize]) -> CoverSolution {
    let mut covered = Graph::empty(g.n());
    let mut parts = Vec::new();
    for c in (0..g.n()).filter(|v| !independent.contains(v)) {
        let star: Vec<(usize, usize)> = g
            .neighbors(c)
            .filter(|&u| !covered.has_edge(c, u))
            .map(|u| (c.min(u), c.max(u)))
            .collect();
        if star.is_empty() {
            continue;
        }
        for &(u, v) in &star {
            covered.add_edge(u, v).expect("in range");
        }
        parts.push(star);
    }
    CoverSolution::new(CoverMode::Union, parts)
}

/// Bounds on `Θ(g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaBounds {
    pub lower: usize,
    pub upper: usize,
}

/// Chvátal's `Θ(G) ≤ n − α(G)`, tight on triangle-free graphs; the lower
/// bound is the largest set of pairwise conflicting edges.
pub fn theta_bounds(g: &Graph, limits: &ExactLimits) -> Result<ThetaBounds> {
    if g.edge_count() == 0 {
        return Ok(ThetaBounds { lower: 0, upper: 0 });
    }
    if is_threshold(g).is_threshold() {
        return Ok(ThetaBounds { lower: 1, upper: 1 });
    }
    let upper = g.n() - max_independent_set(g, limits.alpha_vertices)?.len();
    if g.is_triangle_free() {
        return Ok(ThetaBounds { lower: upper, upper });
    }
    let lower = conflict_lower_bound(g).max(2);
    Ok(ThetaBounds {
        lower: lower.min(upper),
        upper,
    })
}

struct CoverSearch<'a> {
    upper: &'a [u64],
    edges: &'a [(usize, usize)],
    alive: u64,
    classes: Vec<Vec<u64>>,
    assignment: Vec<Option<usize>>,
}

impl CoverSearch<'_> {
    fn fits(&mut self, class: usize, (u, v): (usize, usize)) -> bool {
        let rows = &mut self.classes[class];
        if rows[u] >> v & 1 == 1 {
            return true;
        }
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        let ok = sandwich_feasible(rows, self.upper, self.alive);
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
        ok
    }

    fn place(&mut self, class: usize, e: usize, on: bool) {
        let (u, v) = self.edges[e];
        let rows = &mut self.classes[class];
        if on {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
            self.assignment[e] = Some(class);
        } else {
            rows[u] &= !(1 << v);
            rows[v] &= !(1 << u);
            self.assignment[e] = None;
        }
    }

    fn solve(&mut self, used: usize, k: usize) -> bool {
        // Most constrained unassigned edge.
        let mut chosen: Option<(usize, Vec<usize>)> = None;
        for e in 0..self.edges.len() {
            if self.assignment[e].is_some() {
                continue;
            }
            let edge = self.edges[e];
            let options: Vec<usize> = (0..used).filter(|&c| self.fits(c, edge)).collect();
            let count = options.len() + usize::from(used < k);
            if count == 0 {
                return false;
            }
            if chosen
                .as_ref()
                .is_none_or(|(_, best)| count < best.len() + usize::from(used < k))
            {
                chosen = Some((e, options));
            }
        }
        let Some((e, options)) = chosen else {
            return true;
        };
        for c in options {
            self.place(c, e, true);
            if self.solve(used, k) {
                return true;
            }
            self.place(c, e, false);
        }
        if used < k {
            self.place(used, e, true);
            if self.solve(used + 1, k) {
                return true;
            }
            self.place(used, e, false);
        }
        false
    }
}

/// Exact `Θ(g)` with a union-mode witness. Edgeless graphs give the empty
/// cover (`Θ = 0`).
pub fn theta(g: &Graph, limits: &ExactLimits) -> Result<CoverSolution> {
    check_limits(g, limits)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return Ok(CoverSolution::new(CoverMode::Union, Vec::new()));
    }
    let bounds = theta_bounds(g, limits)?;
    let upper = g.masks();
    let alive = full_mask(g.n());
    for k in bounds.lower.max(1)..=bounds.upper {
        let mut search = CoverSearch {
            upper: &upper,
            edges: &edges,
            alive,
            classes: vec![vec![0u64; g.n()]; k],
            assignment: vec![None; edges.len()],
        };
        if search.solve(0, k) {
            let parts = search
                .classes
                .iter()
                .filter(|rows| rows.iter().any(|&r| r != 0))
                .map(|rows| {
                    let full = sandwich_masks(rows, &upper, alive).expect("feasible class");
                    Graph::from_masks(&full).edges().collect()
                })
                .collect();
            return Ok(CoverSolution::new(CoverMode::Union, parts));
        }
    }
    unreachable!("the star cover realises the upper bound")
}

/// Exact `Θ̂(g) = Θ(ḡ)` with an intersection-mode witness.
pub fn theta_hat(g: &Graph, limits: &ExactLimits) -> Result<CoverSolution> {
    theta(&g.complement(), limits)?.complemented(g.n())
}

/// Any valid union cover within the size limits of `alpha`, used when the
/// exact search is out of reach.
pub fn fallback_cover(g: &Graph, limits: &ExactLimits) -> CoverSolution {
    let independent = match max_independent_set(g, limits.alpha_vertices) {
        Ok(set) => set,
        Err(_) => greedy_independent_set(g),
    };
    star_cover(g, &independent)
}

fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| g.degree(v));
    let mut set: Vec<usize> = Vec::new();
    for v in order {
        if set.iter().all(|&u| !g.has_edge(u, v)) {
            set.push(v);
        }
    }
    set.sort_unstable();
    set
}
