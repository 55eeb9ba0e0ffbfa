//! Undirected simple graphs on dense `0..n` vertex indices, hop distances,
//! and the plain-text edge-list format.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected simple graph. Edges are stored once as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EdgeListObject", into = "EdgeListObject")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// JSON form of a graph: `{"n": 4, "edges": [[0, 1], [1, 2]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeListObject {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<EdgeListObject> for Graph {
    type Error = Error;

    fn try_from(obj: EdgeListObject) -> Result<Self> {
        Graph::new(obj.n, obj.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for EdgeListObject {
    fn from(g: Graph) -> Self {
        EdgeListObject { n: g.n, edges: g.edges.iter().map(|&(u, v)| [u, v]).collect() }
    }
}

impl Graph {
    /// Builds a graph, rejecting loops and out-of-range endpoints. Repeated
    /// pairs (in either orientation) collapse to a single edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge { u, v, n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: set, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is valid")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is valid")
    }

    /// The cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is valid")
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        Graph::new(k + 1, (1..=k).map(|v| (0, v))).expect("star is valid")
    }

    pub fn complement(&self) -> Self {
        let edges =
            (0..self.n).flat_map(|u| (u + 1..self.n).map(move |v| (u, v))).filter(|&(u, v)| !self.has_edge(u, v));
        Graph::new(self.n, edges).expect("complement is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// `Some(r)` when every vertex has degree `r`. The null graph counts as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == r).then_some(r)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        bfs_from(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        assert_eq!(perm.len(), self.n, "permutation length must match order");
        Graph::new(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let off = self.n;
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::new(self.n + other.n, edges).expect("disjoint union is valid")
    }

    /// Renders the edge-list text format read by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Parses the edge-list text format: first non-comment line is the vertex
/// count, then one whitespace-separated `u v` pair per line. `#` starts a
/// comment anywhere on a line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse =
            |s: &str| s.parse::<usize>().map_err(|e| Error::Parse { line: line_no, msg: format!("`{s}`: {e}") });
        match (n, fields.as_slice()) {
            (None, [count]) => n = Some(parse(count)?),
            (None, _) => {
                return Err(Error::Parse { line: line_no, msg: "expected the vertex count on its own line".into() })
            }
            (Some(order), [u, v]) => {
                let (u, v) = (parse(u)?, parse(v)?);
                if u >= order || v >= order || u == v {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("edge ({u}, {v}) invalid for {order} vertices"),
                    });
                }
                edges.push((u, v));
            }
            (Some(_), _) => return Err(Error::Parse { line: line_no, msg: format!("expected `u v`, found `{line}`") }),
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing vertex count".into() })?;
    Graph::new(n, edges)
}

/// Marker for unreachable pairs in a [`DistanceMatrix`].
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `None` when `j` is unreachable from `i`.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        let d = self.d[i * self.n + j];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn raw(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    /// First unreachable pair in row-major order, if any.
    pub fn first_unreachable(&self) -> Option<(usize, usize)> {
        self.d.iter().position(|&d| d == UNREACHABLE).map(|k| (k / self.n, k % self.n))
    }

    pub fn diameter(&self) -> Option<u32> {
        if self.first_unreachable().is_some() {
            return None;
        }
        self.d.iter().copied().max().or(Some(0))
    }
}

fn bfs_from(g: &Graph, s: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for &w in &g.adj[u] {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n;
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(bfs_from(g, s));
    }
    DistanceMatrix { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let d = all_pairs_distances(&Graph::path(3));
        assert_eq!(d.get(0, 2), Some(2));
        assert_eq!(d.get(2, 0), Some(2));
        assert_eq!(d.get(1, 1), Some(0));
    }

    #[test]
    fn complete_graph_distances_are_one() {
        let d = all_pairs_distances(&Graph::complete(4));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d.get(i, j), Some(u32::from(i != j)));
            }
        }
    }

    #[test]
    fn star_leaves_are_two_apart() {
        let d = all_pairs_distances(&Graph::star(3));
        for u in 1..=3 {
            for v in 1..=3 {
                if u != v {
                    assert_eq!(d.get(u, v), Some(2));
                }
            }
        }
    }

    #[test]
    fn unreachable_is_marked() {
        let d = all_pairs_distances(&Graph::empty(2));
        assert_eq!(d.get(0, 1), None);
        assert_eq!(d.first_unreachable(), Some((0, 1)));
        assert_eq!(d.diameter(), None);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::InvalidEdge { .. })));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::InvalidEdge { .. })));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(0), 1);
    }

    #[test]
    fn regularity() {
        assert_eq!(Graph::cycle(5).regular_degree(), Some(2));
        assert_eq!(Graph::complete(4).regular_degree(), Some(3));
        assert_eq!(Graph::empty(3).regular_degree(), Some(0));
        assert_eq!(Graph::path(3).regular_degree(), None);
        assert_eq!(Graph::cycle(6).complement().regular_degree(), Some(3));
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("# a path\n3\n0 1  # first\n\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert!(matches!(parse_edge_list("3\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("2\n0 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("# nothing\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(4);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
