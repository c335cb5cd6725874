/// Size limits for the exponential exact searches.
///
/// The default cover limit admits every graph on 12 vertices; random graphs
/// at that size solve in milliseconds, while some on 14 take minutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactLimits {
    /// Max vertices for the exact threshold cover search.
    pub cover_vertices: usize,
    /// Max edges for the exact threshold cover search.
    pub cover_edges: usize,
    /// Max vertices for the independence number (hard cap 64).
    pub alpha_vertices: usize,
    /// Max vertices for the largest induced threshold subgraph (hard cap 64).
    pub induced_vertices: usize,
}

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits {
            cover_vertices: 12,
            cover_edges: 66,
            alpha_vertices: 32,
            induced_vertices: 20,
        }
    }
}

impl ExactLimits {
    pub fn with_cover_vertices(mut self, n: usize) -> Self {
        self.cover_vertices = n.min(64);
        self
    }

    pub fn with_cover_edges(mut self, m: usize) -> Self {
        self.cover_edges = m;
        self
    }
}
