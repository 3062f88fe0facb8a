//! Simple graphs, multigraphs and the structural operations the colorers rely on.
//!
//! Vertices are dense `0..n` indices and edges are identified by their
//! insertion position. Every set-valued operation iterates in ascending index
//! order, so outputs are reproducible for a fixed input.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// A finite undirected graph without loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    pairs: HashSet<(VertexId, VertexId)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            edges: Vec::new(),
            adj: vec![Vec::new(); vertex_count],
            pairs: HashSet::new(),
            labels: None,
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv` and returns its identity.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, vertex_count: n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if !self.pairs.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u, v));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        Ok(id)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        if let Some(labels) = self.labels.as_mut() {
            labels.push(String::new());
        }
        self.adj.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbor, edge)` pairs at `v`, in ascending edge order.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.pairs.contains(&(u.min(v), u.max(v)))
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.vertex_count() {
            return None;
        }
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `V_k`: the vertices of degree exactly `k`.
    pub fn degree_class(&self, k: usize) -> Vec<VertexId> {
        (0..self.vertex_count()).filter(|&v| self.degree(v) == k).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        self.set_labels(labels)?;
        Ok(self)
    }

    /// Component index of every vertex; components are numbered by their
    /// lowest vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.components().iter().all(|&c| c == 0)
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1 && self.edge_count() + 1 == self.vertex_count() && self.is_connected()
    }

    /// Breadth-first distances from `s`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, s: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &(y, _) in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// The spanning subgraph on the edges accepted by `keep`. The second
    /// component maps each new edge identity back to its identity in `self`.
    pub fn spanning_subgraph(&self, keep: impl Fn(EdgeId) -> bool) -> (Graph, Vec<EdgeId>) {
        let mut sub = Graph::new(self.vertex_count());
        sub.labels = self.labels.clone();
        let mut back = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if keep(e) {
                sub.add_edge(u, v).expect("subgraph of a simple graph is simple");
                back.push(e);
            }
        }
        (sub, back)
    }

    /// Deletes vertex `x`; later vertices shift down by one.
    pub fn without_vertex(&self, x: VertexId) -> Result<Graph> {
        if x >= self.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: x, vertex_count: self.vertex_count() });
        }
        let shift = |v: VertexId| if v > x { v - 1 } else { v };
        let mut g = Graph::new(self.vertex_count() - 1);
        for &(u, v) in &self.edges {
            if u != x && v != x {
                g.add_edge(shift(u), shift(v))?;
            }
        }
        if let Some(labels) = &self.labels {
            let mut l = labels.clone();
            l.remove(x);
            g.labels = Some(l);
        }
        Ok(g)
    }
}

/// A multigraph where loops and parallel edges are permitted. A loop at `v`
/// contributes 2 to the degree of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph { edges: Vec::new(), adj: vec![Vec::new(); vertex_count] }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut mg = Multigraph::new(vertex_count);
        for &(u, v) in edges {
            mg.add_edge(u, v)?;
        }
        Ok(mg)
    }

    pub fn from_graph(g: &Graph) -> Self {
        Multigraph::from_edges(g.vertex_count(), g.edges()).expect("graph edges are in range")
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let n = self.vertex_count();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, vertex_count: n });
            }
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push(id);
        if u != v {
            self.adj[v].push(id);
        }
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// Edges at `v` in ascending identity order; a loop is listed once.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].iter().map(|&e| if self.is_loop(e) { 2 } else { 1 }).sum()
    }

    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }
}

/// A set of pairwise non-adjacent, loop-free edges of a host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    edges: BTreeSet<EdgeId>,
}

impl Matching {
    /// Builds a matching, rejecting edge sets that share an endpoint.
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut covered = vec![false; g.vertex_count()];
        let mut set = BTreeSet::new();
        for e in edges {
            if e >= g.edge_count() {
                return Err(Error::InvalidParameter(format!("edge {e} not in graph")));
            }
            let (u, v) = g.endpoints(e);
            if covered[u] || covered[v] {
                return Err(Error::InvalidParameter(format!("edge {e} shares an endpoint")));
            }
            covered[u] = true;
            covered[v] = true;
            set.insert(e);
        }
        Ok(Matching { edges: set })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().copied()
    }

    /// Vertices covered by the matching, as a membership vector.
    pub fn covered(&self, g: &Graph) -> Vec<bool> {
        let mut covered = vec![false; g.vertex_count()];
        for &e in &self.edges {
            let (u, v) = g.endpoints(e);
            covered[u] = true;
            covered[v] = true;
        }
        covered
    }
}

/// Largest shortest-path distance over all vertex pairs.
pub fn diameter(g: &Graph) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph has no diameter".into()));
    }
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in g.bfs_distances(s) {
            best = best.max(d.ok_or(Error::Disconnected)?);
        }
    }
    Ok(best)
}

/// A 2-coloring with all edges crossing, or `None` if an odd cycle exists.
/// The lowest vertex of every component is placed in the first part.
pub fn bipartition(g: &Graph) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let sx = side[x].unwrap_or(false);
            for &(y, _) in g.incident(x) {
                match side[y] {
                    None => {
                        side[y] = Some(!sx);
                        queue.push_back(y);
                    }
                    Some(sy) if sy == sx => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for (v, s) in side.into_iter().enumerate() {
        if s == Some(true) {
            ys.push(v);
        } else {
            xs.push(v);
        }
    }
    Some((xs, ys))
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Greedy inclusion-maximal matching of the subgraph induced by
/// `restrict_to`, scanning edges in ascending identity order.
pub fn maximal_matching(g: &Graph, restrict_to: &[VertexId]) -> Matching {
    let mut inside = vec![false; g.vertex_count()];
    for &v in restrict_to {
        inside[v] = true;
    }
    let mut covered = vec![false; g.vertex_count()];
    let mut edges = BTreeSet::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if inside[u] && inside[v] && !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            edges.insert(e);
        }
    }
    Matching { edges }
}

/// One closed walk per component: its start vertex and the edges in
/// traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub start: VertexId,
    pub edges: Vec<EdgeId>,
}

impl Circuit {
    /// The vertex sequence of the walk, starting and ending at `start`.
    pub fn vertices(&self, mg: &Multigraph) -> Vec<VertexId> {
        let mut walk = vec![self.start];
        let mut at = self.start;
        for &e in &self.edges {
            at = mg.opposite(e, at);
            walk.push(at);
        }
        walk
    }
}

/// Hierholzer's construction, one circuit per component that has edges.
pub fn euler_circuits(mg: &Multigraph) -> Result<Vec<Circuit>> {
    let n = mg.vertex_count();
    if let Some(v) = (0..n).find(|&v| mg.degree(v) % 2 == 1) {
        return Err(Error::NonEulerian(v));
    }
    let mut used = vec![false; mg.edge_count()];
    let mut next = vec![0usize; n];
    let mut circuits = Vec::new();
    for start in 0..n {
        if mg.incident(start).iter().all(|&e| used[e]) {
            continue;
        }
        // stack of (vertex, edge used to arrive)
        let mut stack: Vec<(VertexId, Option<EdgeId>)> = vec![(start, None)];
        let mut tour = Vec::new();
        while let Some(&(v, via)) = stack.last() {
            let inc = mg.incident(v);
            while next[v] < inc.len() && used[inc[next[v]]] {
                next[v] += 1;
            }
            if next[v] < inc.len() {
                let e = inc[next[v]];
                used[e] = true;
                stack.push((mg.opposite(e, v), Some(e)));
            } else {
                stack.pop();
                if let Some(e) = via {
                    tour.push(e);
                }
            }
        }
        tour.reverse();
        circuits.push(Circuit { start, edges: tour });
    }
    Ok(circuits)
}

/// Edge identities of an Euler circuit of every component with edges.
pub fn euler_circuit(mg: &Multigraph) -> Result<Vec<Vec<EdgeId>>> {
    Ok(euler_circuits(mg)?.into_iter().map(|c| c.edges).collect())
}

/// Disjoint union of two copies of `g` plus an edge between the two copies
/// of every vertex satisfying `join`. Copy 1 keeps the identities of `g`
/// (vertices and edges); vertex `i` of copy 2 is `i + n`, its edges follow,
/// and the joining edges come last in ascending vertex order.
pub fn two_copy_join(g: &Graph, join: impl Fn(&Graph, VertexId) -> bool) -> Graph {
    let n = g.vertex_count();
    let mut out = Graph::new(2 * n);
    for copy in 0..2 {
        for &(u, v) in g.edges() {
            out.add_edge(u + copy * n, v + copy * n).expect("copies are simple");
        }
    }
    for v in 0..n {
        if join(g, v) {
            out.add_edge(v, v + n).expect("join edges are new");
        }
    }
    out
}
