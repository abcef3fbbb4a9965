//! Simple undirected graphs, caterpillars and the Randić matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::math;
use crate::matrix::SymmetricMatrix;

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { adjacency: vec![Vec::new(); n], edges: Vec::new() }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds edge `uv`, rejecting loops, repeats and out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge { u, v });
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfDomain { what: "cycle order", value: n as i64, min: 3, max: i64::MAX });
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// Star `K_{1,leaves}` with center `0`.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
    }

    /// `k` disjoint copies of `K₂`.
    pub fn matching(k: usize) -> Self {
        Self::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1))).expect("matching edges are valid")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        // scan the shorter list
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.adjacency[a].contains(&b)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.add_edge(index[u], index[v]).expect("induced edges are simple");
            }
        }
        g
    }

    /// Vertices of degree other than one, in increasing order.
    pub fn non_pendant_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) != 1).collect()
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> SymmetricMatrix {
        let mut m = SymmetricMatrix::zeros(self.order());
        for &(u, v) in &self.edges {
            m.set(u, v, 1.0);
        }
        m
    }
}

/// Degree of every vertex.
pub fn degrees(g: &Graph) -> Vec<usize> {
    (0..g.order()).map(|v| g.degree(v)).collect()
}

/// Randić matrix: `1/√(d_u d_v)` on edges and zero elsewhere.
pub fn randic_matrix(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.order());
    for &(u, v) in g.edges() {
        let w = 1.0 / math::sqrt((g.degree(u) * g.degree(v)) as f64);
        m.set(u, v, w);
    }
    m
}

/// The H-join `H[G_1, …, G_k]`: vertex `j` of `host` is replaced by `parts[j]`
/// and every vertex of `G_i` is joined to every vertex of `G_j` whenever `ij`
/// is an edge of the host. Vertices of `parts[j]` are numbered consecutively
/// after those of `parts[0..j]`.
pub fn h_join(host: &Graph, parts: &[Graph]) -> Result<Graph> {
    if parts.len() != host.order() {
        return Err(Error::DimensionMismatch { expected: host.order(), found: parts.len() });
    }
    let mut offsets = Vec::with_capacity(parts.len() + 1);
    offsets.push(0);
    for p in parts {
        offsets.push(offsets.last().copied().unwrap_or(0) + p.order());
    }
    let mut g = Graph::empty(offsets[parts.len()]);
    for (j, p) in parts.iter().enumerate() {
        for &(u, v) in p.edges() {
            g.add_edge(offsets[j] + u, offsets[j] + v)?;
        }
    }
    for &(i, j) in host.edges() {
        for u in offsets[i]..offsets[i + 1] {
            for v in offsets[j]..offsets[j + 1] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Leaf counts `(p_1, …, p_r)` of the caterpillar `T(p_1, …, p_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaterpillarSpec {
    leaves: Vec<usize>,
}

impl CaterpillarSpec {
    pub fn new(leaves: Vec<usize>) -> Result<Self> {
        if leaves.len() < 2 {
            return Err(Error::SpineTooShort { r: leaves.len() });
        }
        if let Some(index) = leaves.iter().position(|&p| p == 0) {
            return Err(Error::EmptyStar { index });
        }
        Ok(Self { leaves })
    }

    /// Spine length `r`.
    #[inline]
    pub fn spine_len(&self) -> usize {
        self.leaves.len()
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    /// `n = r + Σ p_i`.
    pub fn order(&self) -> usize {
        self.leaves.len() + self.leaves.iter().sum::<usize>()
    }

    /// Degree of spine vertex `i` in the caterpillar.
    pub fn spine_degree(&self, i: usize) -> usize {
        let r = self.spine_len();
        let path_degree = usize::from(i > 0) + usize::from(i + 1 < r);
        path_degree + self.leaves[i]
    }

    /// Same caterpillar read from the other end of the spine.
    pub fn reversed(&self) -> Self {
        let mut leaves = self.leaves.clone();
        leaves.reverse();
        Self { leaves }
    }

    /// Number of zero eigenvalues contributed outside `Γ_2r`, `Σ (p_i − 1)`.
    pub fn extra_zero_multiplicity(&self) -> usize {
        self.leaves.iter().map(|p| p - 1).sum()
    }
}

impl fmt::Display for CaterpillarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("T(")?;
        for (i, p) in self.leaves.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Builds `T(p_1, …, p_r)`. Spine vertices are `0..r` in path order; the
/// leaves of spine vertex `i` follow, grouped by `i`.
pub fn build_caterpillar(spec: &CaterpillarSpec) -> Graph {
    let r = spec.spine_len();
    let mut g = Graph::empty(spec.order());
    for i in 1..r {
        g.add_edge(i - 1, i).expect("spine edge");
    }
    let mut next = r;
    for (i, &p) in spec.leaves().iter().enumerate() {
        for _ in 0..p {
            g.add_edge(i, next).expect("leaf edge");
            next += 1;
        }
    }
    g
}
