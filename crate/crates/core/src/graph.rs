//! Simple undirected graphs, the named families and graph surgery.
//!
//! Vertices are `0..n`. Every generator uses a fixed labelling so that
//! downstream characteristic polynomials are reproducible:
//!
//! | family               | labelling                                                    |
//! |----------------------|--------------------------------------------------------------|
//! | path, cycle          | `0..n` in order                                              |
//! | star                 | centre `0`, leaves `1..n`                                    |
//! | complete bipartite   | parts `0..m` and `m..m+n`                                    |
//! | friendship `F_n`     | centre `0`, blade `i` on `{2i-1, 2i}`                        |
//! | Dutch windmill       | centre `0`, blade `i` is the 4-cycle `0, 3i-2, 3i-1, 3i`     |

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A simple finite graph: no loops, no multi-edges, no weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            degrees: vec![0; n],
        }
    }

    /// Builds a graph from an edge list. Endpoints may be given in either
    /// order; loops, duplicates and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if !self.edges.insert(ordered(u, v)) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
        }
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&ordered(u, v))
    }

    pub fn isolated_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 0).count()
    }

    /// Number of connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.n;
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                components -= 1;
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Two-colourability check by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency_lists();
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &v in &adj[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidGraph("not a permutation".into()));
            }
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Removes the edge `{u, v}`. Degrees of `u` and `v` drop by one.
pub fn delete_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let key = ordered(u, v);
    if !g.edges.contains(&key) {
        return Err(Error::EdgeNotFound(u, v));
    }
    let mut out = g.clone();
    out.edges.remove(&key);
    out.degrees[u] -= 1;
    out.degrees[v] -= 1;
    Ok(out)
}

/// Disjoint union; the vertices of `g2` are shifted by `g1.vertex_count()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let offset = g1.n;
    let mut edges = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
    let mut degrees = g1.degrees.clone();
    degrees.extend_from_slice(&g2.degrees);
    Graph {
        n: g1.n + g2.n,
        edges,
        degrees,
    }
}

/// The named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    Friendship,
    Dutch4,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Friendship,
        Family::Dutch4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Friendship => "friendship",
            Family::Dutch4 => "dutch4",
        }
    }

    fn min_n(self) -> usize {
        match self {
            Family::Cycle => 3,
            Family::Star => 2,
            _ => 1,
        }
    }

    pub fn supports_minus_edge(self) -> bool {
        !matches!(self, Family::Friendship | Family::Dutch4)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "star" => Family::Star,
            "complete" => Family::Complete,
            "complete_bipartite" | "complete-bipartite" => Family::CompleteBipartite,
            "friendship" => Family::Friendship,
            "dutch4" => Family::Dutch4,
            other => return Err(Error::Domain(format!("unknown family {other:?}"))),
        })
    }
}

/// A member of a named family, optionally with its canonical edge deleted.
///
/// `n` is the primary parameter (vertex count for path/cycle/star/complete,
/// blade count for friendship/dutch4, second part size for complete
/// bipartite). `m` is the first part size and is only used by
/// [`Family::CompleteBipartite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub m: Option<usize>,
    pub minus_edge: bool,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            m: None,
            minus_edge: false,
        }
    }

    pub fn path(n: usize) -> Self {
        Self::new(Family::Path, n)
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(Family::Cycle, n)
    }

    pub fn star(n: usize) -> Self {
        Self::new(Family::Star, n)
    }

    pub fn complete(n: usize) -> Self {
        Self::new(Family::Complete, n)
    }

    /// `K_{m,n}`: parts of size `m` and `n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        FamilySpec {
            family: Family::CompleteBipartite,
            n,
            m: Some(m),
            minus_edge: false,
        }
    }

    pub fn friendship(n: usize) -> Self {
        Self::new(Family::Friendship, n)
    }

    pub fn dutch4(n: usize) -> Self {
        Self::new(Family::Dutch4, n)
    }

    /// The same family member with its canonical edge removed.
    pub fn minus_edge(mut self) -> Self {
        self.minus_edge = true;
        self
    }

    /// First part size of a complete bipartite spec, 0 otherwise.
    pub fn m_or_zero(&self) -> usize {
        self.m.unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        match self.family {
            Family::Path | Family::Cycle | Family::Star | Family::Complete => self.n,
            Family::CompleteBipartite => self.m_or_zero() + self.n,
            Family::Friendship => 2 * self.n + 1,
            Family::Dutch4 => 3 * self.n + 1,
        }
    }

    pub fn edge_count(&self) -> usize {
        let n = self.n;
        let full = match self.family {
            Family::Path => n.saturating_sub(1),
            Family::Cycle => n,
            Family::Star => n.saturating_sub(1),
            Family::Complete => n * n.saturating_sub(1) / 2,
            Family::CompleteBipartite => self.m_or_zero() * n,
            Family::Friendship => 3 * n,
            Family::Dutch4 => 4 * n,
        };
        full - usize::from(self.minus_edge)
    }

    /// Checks the parameter domain of the family generator.
    pub fn validate(&self) -> Result<()> {
        let min = self.family.min_n();
        if self.n < min {
            return Err(Error::Domain(format!(
                "{} requires n >= {min}, got n = {}",
                self.family, self.n
            )));
        }
        match (self.family, self.m) {
            (Family::CompleteBipartite, None) => {
                return Err(Error::Domain("complete_bipartite requires m".into()))
            }
            (Family::CompleteBipartite, Some(0)) => {
                return Err(Error::Domain(
                    "complete_bipartite requires m >= 1, got m = 0".into(),
                ))
            }
            (Family::CompleteBipartite, Some(_)) => {}
            (f, Some(_)) => {
                return Err(Error::Domain(format!("{f} takes no m parameter")));
            }
            (_, None) => {}
        }
        if self.minus_edge {
            if !self.family.supports_minus_edge() {
                return Err(Error::Unsupported(format!(
                    "edge-deleted variant of {}",
                    self.family
                )));
            }
            let unmodified = FamilySpec {
                minus_edge: false,
                ..*self
            };
            if unmodified.edge_count() == 0 {
                return Err(Error::Domain(format!(
                    "{} has no edge to delete",
                    unmodified.label()
                )));
            }
        }
        Ok(())
    }

    /// The deleted edge of the `minus_edge` variant.
    pub fn canonical_deleted_edge(&self) -> Option<(usize, usize)> {
        match self.family {
            Family::Path | Family::Cycle | Family::Star | Family::Complete => Some((0, 1)),
            Family::CompleteBipartite => Some((0, self.m_or_zero())),
            Family::Friendship | Family::Dutch4 => None,
        }
    }

    /// Short human-readable name such as `K_{2,3}-e` or `F_4`.
    pub fn label(&self) -> String {
        let base = match self.family {
            Family::Path => format!("P_{}", self.n),
            Family::Cycle => format!("C_{}", self.n),
            Family::Star => format!("S_{}", self.n),
            Family::Complete => format!("K_{}", self.n),
            Family::CompleteBipartite => format!("K_{{{},{}}}", self.m_or_zero(), self.n),
            Family::Friendship => format!("F_{}", self.n),
            Family::Dutch4 => format!("D_4^{}", self.n),
        };
        if self.minus_edge {
            base + "-e"
        } else {
            base
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Builds the canonically labelled member of a family.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(spec.edge_count() + 1);
    match spec.family {
        Family::Path => edges.extend((1..n).map(|i| (i - 1, i))),
        Family::Cycle => {
            edges.extend((1..n).map(|i| (i - 1, i)));
            edges.push((n - 1, 0));
        }
        Family::Star => edges.extend((1..n).map(|i| (0, i))),
        Family::Complete => {
            for i in 0..n {
                edges.extend((i + 1..n).map(|j| (i, j)));
            }
        }
        Family::CompleteBipartite => {
            let m = spec.m_or_zero();
            for i in 0..m {
                edges.extend((m..m + n).map(|j| (i, j)));
            }
        }
        Family::Friendship => {
            for i in 1..=n {
                let (a, b) = (2 * i - 1, 2 * i);
                edges.extend([(0, a), (0, b), (a, b)]);
            }
        }
        Family::Dutch4 => {
            for i in 1..=n {
                let (a, b, c) = (3 * i - 2, 3 * i - 1, 3 * i);
                edges.extend([(0, a), (a, b), (b, c), (c, 0)]);
            }
        }
    }
    let g = Graph::from_edges(spec.vertex_count(), edges)?;
    match (spec.minus_edge, spec.canonical_deleted_edge()) {
        (true, Some((u, v))) => delete_edge(&g, u, v),
        _ => Ok(g),
    }
}
