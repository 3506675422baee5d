//! Simple undirected connected graphs over dense 0-based vertex ids,
//! named families, coalescence, and metric invariants.

use crate::error::{Error, Result};

/// Largest supported vertex count. Matches the single-size-byte graph6
/// form and keeps neighbor sets in one `u64` word.
pub const MAX_VERTICES: usize = 62;

/// Default size budget for exact clique enumeration.
pub const CLIQUE_BUDGET: usize = 20;

/// A finite, undirected, connected, simple graph.
///
/// Connectivity is an invariant of construction: every operation on a
/// `Graph` may assume a single component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list; rejects loops, out-of-range
    /// endpoints, and disconnected results.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "order {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Graph::from_adj(adj)
    }

    /// Builds a graph from per-vertex neighbor bitsets.
    pub fn from_adj(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "order {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} has neighbors outside 0..{n}"
                )));
            }
            if row >> v & 1 != 0 {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {v}")));
            }
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if (adj[u] >> v & 1) != (adj[v] >> u & 1) {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric at ({u},{v})"
                    )));
                }
            }
        }
        let g = Graph { n, adj, label: None };
        let components = g.component_count();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    /// Display name: the family tag when present, else `G<n>`.
    pub fn name(&self) -> String {
        self.label.clone().unwrap_or_else(|| format!("G{}", self.n))
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                out.push((u, v));
                rest &= rest - 1;
            }
        }
        out
    }

    fn component_count(&self) -> usize {
        let mut seen = 0u64;
        let mut components = 0;
        for start in 0..self.n {
            if seen >> start & 1 != 0 {
                continue;
            }
            components += 1;
            let mut frontier = 1u64 << start;
            while frontier != 0 {
                seen |= frontier;
                let mut next = 0u64;
                let mut rest = frontier;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    next |= self.adj[v];
                    rest &= rest - 1;
                }
                frontier = next & !seen;
            }
        }
        components
    }

    /// BFS distances from `src` to every vertex, in edge hops.
    pub fn bfs_distances(&self, src: usize) -> Vec<i64> {
        let mut dist = vec![-1i64; self.n];
        dist[src] = 0;
        let mut frontier = 1u64 << src;
        let mut seen = frontier;
        let mut layer = 0i64;
        while frontier != 0 {
            layer += 1;
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                next |= self.adj[v];
                rest &= rest - 1;
            }
            next &= !seen;
            seen |= next;
            let mut rest = next;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                dist[v] = layer;
                rest &= rest - 1;
            }
            frontier = next;
        }
        dist
    }

    /// Sum of distances from `v` to all other vertices.
    pub fn transmission(&self, v: usize) -> i64 {
        self.bfs_distances(v).iter().sum()
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> i64 {
        (0..self.n)
            .map(|v| self.bfs_distances(v).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_adj(adj)
    }

    /// The graph with vertex `v` removed, if the remainder is connected.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if self.n == 1 {
            return Err(Error::InvalidParameter("cannot delete the only vertex".into()));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let mut adj = vec![0u64; keep.len()];
        for (a, &u) in keep.iter().enumerate() {
            for (b, &w) in keep.iter().enumerate() {
                if self.has_edge(u, w) {
                    adj[a] |= 1 << b;
                }
            }
        }
        Graph::from_adj(adj)
    }
}

/// Symmetric matrix of pairwise shortest-path distances of a connected
/// graph, in edge hops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<i64>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.d[i * self.n + j]
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.d[i * self.n..(i + 1) * self.n].iter().sum()
    }

    pub fn max_entry(&self) -> i64 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.d
    }
}

/// All-pairs BFS distances.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![0i64; n * n];
    for v in 0..n {
        let row = g.bfs_distances(v);
        d[v * n..(v + 1) * n].copy_from_slice(&row);
    }
    DistanceMatrix { n, d }
}

/// Identifies vertex `u` of `g` with vertex `v` of `h`.
///
/// The merged vertex keeps id `u`; the remaining vertices of `h` are
/// appended after the vertices of `g` in order.
pub fn coalesce(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Graph> {
    if u >= g.n() {
        return Err(Error::InvalidParameter(format!("vertex {u} out of range")));
    }
    if v >= h.n() {
        return Err(Error::InvalidParameter(format!("vertex {v} out of range")));
    }
    let n = g.n() + h.n() - 1;
    let mut map = Vec::with_capacity(h.n());
    let mut next = g.n();
    for w in 0..h.n() {
        if w == v {
            map.push(u);
        } else {
            map.push(next);
            next += 1;
        }
    }
    let mut edges = g.edges();
    for (a, b) in h.edges() {
        edges.push((map[a], map[b]));
    }
    let out = Graph::from_edges(n, &edges)?;
    Ok(match (g.label(), h.label()) {
        (Some(a), Some(b)) => out.with_label(format!("{a}*{b}")),
        _ => out,
    })
}

/// Exact clique number by branch and bound, with the default budget.
pub fn clique_number(g: &Graph) -> Result<usize> {
    clique_number_with_budget(g, CLIQUE_BUDGET)
}

/// Exact clique number; errors when the order exceeds `budget`.
pub fn clique_number_with_budget(g: &Graph, budget: usize) -> Result<usize> {
    if g.n() > budget {
        return Err(Error::BudgetExceeded {
            required: g.n(),
            budget,
        });
    }
    fn extend(g: &Graph, size: usize, candidates: u64, best: &mut usize) {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut rest = candidates;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            extend(g, size + 1, rest & g.neighbors(v), best);
        }
    }
    let mut best = 1;
    let full = if g.n() == 64 { !0u64 } else { (1u64 << g.n()) - 1 };
    extend(g, 0, full, &mut best);
    Ok(best)
}

/// Vertices `v` of full degree whose deletion leaves a connected regular
/// graph. Returns the (possibly empty) list of such vertices.
pub fn pyramidal_vertices(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut out = Vec::new();
    for v in 0..n {
        if g.degree(v) != n - 1 {
            continue;
        }
        if n == 1 {
            continue;
        }
        match g.delete_vertex(v) {
            Ok(rest) => {
                let deg0 = rest.degree(0);
                if (0..rest.n()).all(|w| rest.degree(w) == deg0) {
                    out.push(v);
                }
            }
            Err(_) => {}
        }
    }
    out
}

/// True when the graph has at least one pyramidal vertex.
pub fn is_pyramidal(g: &Graph) -> bool {
    !pyramidal_vertices(g).is_empty()
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges)?.with_label(format!("K{n}")))
}

fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Ok(Graph::from_edges(n, &edges)?.with_label(format!("P{n}")))
}

fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Ok(Graph::from_edges(n, &edges)?.with_label(format!("C{n}")))
}

fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "star needs at least 2 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(Graph::from_edges(n, &edges)?.with_label(format!("S{n}")))
}

fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "wheel needs at least 4 vertices, got {n}"
        )));
    }
    // Hub is vertex 0; the rim is a cycle on 1..n-1.
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    for v in 2..n {
        edges.push((v - 1, v));
    }
    edges.push((n - 1, 1));
    Ok(Graph::from_edges(n, &edges)?.with_label(format!("W{n}")))
}

fn star_plus(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "star-plus-edge needs at least 3 vertices, got {n}"
        )));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    edges.push((1, 2));
    Ok(Graph::from_edges(n, &edges)?.with_label(format!("S{n}+")))
}

fn complete_minus_edge(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "complete-minus-edge needs at least 3 vertices, got {n}"
        )));
    }
    // The nonadjacent pair is {0, 1}.
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if (u, v) != (0, 1) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?.with_label(format!("K{n}-e")))
}

fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(
            "complete bipartite parts must be nonempty".into(),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..m {
        for v in 0..n {
            edges.push((u, m + v));
        }
    }
    Ok(Graph::from_edges(m + n, &edges)?.with_label(format!("K{m},{n}")))
}

fn coalesced_cycles(a: usize, b: usize) -> Result<Graph> {
    let g = cycle(a)?;
    let h = cycle(b)?;
    Ok(coalesce(&g, 0, &h, 0)?.with_label(format!("C{a}*C{b}")))
}

/// Builds a named family graph with canonical vertex numbering
/// (star center and wheel hub are vertex 0).
///
/// Family ids: `K`, `P`, `C`, `S`, `W`, `S+`, `K-e`, `KB` (complete
/// bipartite, needs `m`), and `coalesce` (two cycles glued at a vertex,
/// needs `m`; `coalesce 3 3` is the bowtie).
pub fn make_family(name: &str, n: usize, m: Option<usize>) -> Result<Graph> {
    let two = |what: &str| -> Result<usize> {
        m.ok_or_else(|| Error::InvalidParameter(format!("family {what} needs two sizes")))
    };
    match name {
        "K" => complete(n),
        "P" => path(n),
        "C" => cycle(n),
        "S" => star(n),
        "W" => wheel(n),
        "S+" => star_plus(n),
        "K-e" => complete_minus_edge(n),
        "KB" => complete_bipartite(n, two("KB")?),
        "coalesce" => coalesced_cycles(n, two("coalesce")?),
        other => Err(Error::InvalidParameter(format!("unknown family \"{other}\""))),
    }
}

// ---------------------------------------------------------------------------
// Structure recognizers
// ---------------------------------------------------------------------------

pub fn is_complete(g: &Graph) -> bool {
    g.edge_count() == g.n() * (g.n() - 1) / 2
}

pub fn is_tree(g: &Graph) -> bool {
    g.edge_count() == g.n() - 1
}

/// Connected with exactly one cycle: |E| = |V|.
pub fn is_unicyclic(g: &Graph) -> bool {
    g.edge_count() == g.n()
}

pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && (0..g.n()).all(|v| g.degree(v) == 2)
}

pub fn is_path(g: &Graph) -> bool {
    is_tree(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

pub fn is_star(g: &Graph) -> bool {
    g.n() >= 2 && is_tree(g) && (0..g.n()).any(|v| g.degree(v) == g.n() - 1)
}

/// A star plus one edge between two leaves.
pub fn is_star_plus(g: &Graph) -> bool {
    g.n() >= 3
        && g.edge_count() == g.n()
        && (0..g.n()).any(|v| g.degree(v) == g.n() - 1)
}

/// Bipartition by BFS 2-coloring, if one exists.
pub fn bipartition(g: &Graph) -> Option<(u64, u64)> {
    let mut color = vec![-1i8; g.n()];
    color[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let mut rest = g.neighbors(u);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if color[v] == -1 {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if color[v] == color[u] {
                return None;
            }
        }
    }
    let mut a = 0u64;
    let mut b = 0u64;
    for (v, &c) in color.iter().enumerate() {
        if c == 0 {
            a |= 1 << v;
        } else {
            b |= 1 << v;
        }
    }
    Some((a, b))
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Part sizes (smaller first) when the graph is a complete bipartite graph.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    let (a, b) = bipartition(g)?;
    let (m, n) = (a.count_ones() as usize, b.count_ones() as usize);
    if g.edge_count() == m * n {
        Some((m.min(n), m.max(n)))
    } else {
        None
    }
}

pub fn is_balanced_complete_bipartite(g: &Graph) -> bool {
    matches!(complete_bipartite_parts(g), Some((m, n)) if n - m <= 1)
}
