//! Simple directed graphs on 1-based vertex labels, degree accounting,
//! the canonical path/cycle/wheel/bipartite orientations, and the
//! directed join.

use thiserror::Error;

/// 1-based vertex label.
pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count must be at least {min}, got {got}")]
    TooFewVertices { min: u32, got: u32 },
    #[error("arc ({tail}, {head}) uses a label outside 1..={n}")]
    LabelOutOfRange { tail: Vertex, head: Vertex, n: u32 },
    #[error("arc ({vertex}, {vertex}) is a self-loop")]
    SelfLoop { vertex: Vertex },
    #[error("arc ({tail}, {head}) appears more than once")]
    DuplicateArc { tail: Vertex, head: Vertex },
    #[error("side counts must both be positive, got ({left}, {right})")]
    EmptySide { left: u32, right: u32 },
}

/// In-, out- and total degree of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DegreeTriple {
    pub in_deg: u32,
    pub out_deg: u32,
}

impl DegreeTriple {
    pub fn total(&self) -> u32 {
        self.in_deg + self.out_deg
    }
}

/// Degree triples for every vertex plus the maximum total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    triples: Vec<DegreeTriple>,
    max_total: u32,
}

impl DegreeProfile {
    /// Triple of vertex `v`; panics if `v` is not a label of the graph.
    pub fn triple(&self, v: Vertex) -> DegreeTriple {
        self.triples[(v - 1) as usize]
    }

    /// Triples in vertex order, `triples()[i]` belonging to vertex `i + 1`.
    pub fn triples(&self) -> &[DegreeTriple] {
        &self.triples
    }

    /// Maximum total degree over all vertices.
    pub fn max_total(&self) -> u32 {
        self.max_total
    }
}

/// Immutable simple digraph: no self-loops, no parallel arcs, labels in
/// `1..=n`. Opposite arcs `(u, v)` and `(v, u)` may coexist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: u32,
    /// Sorted lexicographically, duplicate-free.
    arcs: Vec<(Vertex, Vertex)>,
}

impl Digraph {
    pub fn new(
        n: u32,
        arcs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::TooFewVertices { min: 1, got: n });
        }
        let mut list: Vec<(Vertex, Vertex)> = Vec::new();
        for (tail, head) in arcs {
            if tail == head {
                return Err(GraphError::SelfLoop { vertex: tail });
            }
            if tail < 1 || tail > n || head < 1 || head > n {
                return Err(GraphError::LabelOutOfRange { tail, head, n });
            }
            list.push((tail, head));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateArc {
                    tail: w[0].0,
                    head: w[0].1,
                });
            }
        }
        Ok(Self { n, arcs: list })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn contains_arc(&self, tail: Vertex, head: Vertex) -> bool {
        self.arcs.binary_search(&(tail, head)).is_ok()
    }

    /// Heads of the arcs leaving `v`, ascending.
    pub fn out_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let start = self.arcs.partition_point(|&(t, _)| t < v);
        self.arcs[start..]
            .iter()
            .take_while(move |&&(t, _)| t == v)
            .map(|&(_, h)| h)
    }

    /// In-, out- and total degrees of every vertex plus the maximum total.
    pub fn degree_profile(&self) -> DegreeProfile {
        let mut triples = vec![DegreeTriple::default(); self.n as usize];
        for &(tail, head) in &self.arcs {
            triples[(tail - 1) as usize].out_deg += 1;
            triples[(head - 1) as usize].in_deg += 1;
        }
        let max_total = triples.iter().map(DegreeTriple::total).max().unwrap_or(0);
        DegreeProfile { triples, max_total }
    }

    /// Forgets arc directions; opposite arcs merge into one edge.
    pub fn underlying_simple_graph(&self) -> UndirectedView {
        let mut edges: Vec<(Vertex, Vertex)> = self
            .arcs
            .iter()
            .map(|&(t, h)| if t < h { (t, h) } else { (h, t) })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        UndirectedView { n: self.n, edges }
    }
}

/// Undirected view of a digraph: simple graph on the same labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedView {
    n: u32,
    /// Each edge stored as `(u, v)` with `u < v`, sorted.
    edges: Vec<(Vertex, Vertex)>,
}

impl UndirectedView {
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Undirected degree of every vertex, indexed by `label - 1`.
    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n as usize];
        for &(u, v) in &self.edges {
            deg[(u - 1) as usize] += 1;
            deg[(v - 1) as usize] += 1;
        }
        deg
    }
}

/// Path `1 -> 2 -> ... -> n`.
pub fn build_path(n: u32) -> Result<Digraph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices { min: 2, got: n });
    }
    Digraph::new(n, (1..n).map(|i| (i, i + 1)))
}

/// Cycle `1 -> 2 -> ... -> n -> 1`.
pub fn build_cycle(n: u32) -> Result<Digraph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooFewVertices { min: 3, got: n });
    }
    Digraph::new(n, (1..n).map(|i| (i, i + 1)).chain([(n, 1)]))
}

/// Wheel with `n` rim vertices: vertex 1 is the axle with an arc to every
/// rim vertex `2..=n+1`, and the rim is a directed cycle.
pub fn build_wheel(n: u32) -> Result<Digraph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooFewVertices { min: 3, got: n });
    }
    let spokes = (2..=n + 1).map(|v| (1, v));
    let rim = (2..=n).map(|v| (v, v + 1)).chain([(n + 1, 2)]);
    Digraph::new(n + 1, spokes.chain(rim))
}

/// Complete bipartite graph oriented strictly left-to-right: left labels
/// `1..=p`, right labels `p+1..=p+q`, arcs from every left to every right.
pub fn build_bipartite_lr(p: u32, q: u32) -> Result<Digraph, GraphError> {
    if p < 1 || q < 1 {
        return Err(GraphError::EmptySide { left: p, right: q });
    }
    let arcs = (1..=p).flat_map(|i| (p + 1..=p + q).map(move |j| (i, j)));
    Digraph::new(p + q, arcs)
}

/// Directed join: `g` keeps its labels, `h`'s labels shift by `n`, and
/// every `g`-vertex gains an arc to every `h`-vertex.
pub fn directed_join(g: &Digraph, h: &Digraph) -> Digraph {
    let n = g.vertex_count();
    let m = h.vertex_count();
    let total = n.checked_add(m).expect("vertex count overflow");
    let arcs = g
        .arcs()
        .iter()
        .copied()
        .chain(h.arcs().iter().map(|&(t, hd)| (t + n, hd + n)))
        .chain(g.vertices().flat_map(|v| (n + 1..=total).map(move |u| (v, u))))
        .collect::<Vec<_>>();
    Digraph::new(total, arcs).expect("join of valid digraphs is valid")
}
