//! Finite simple undirected graphs.
//!
//! Vertices are `0..n`. The adjacency structure is stored in compressed
//! sparse row form with sorted neighbor slices, and is immutable once built.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                let v = list.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                return Err(Error::InvalidEdge(u, v as usize));
            }
        }
        Ok(Graph::from_sorted_adjacency(adj))
    }

    /// `adj` must be symmetric, loop-free, with sorted duplicate-free lists.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<u32>>) -> Graph {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        let mut targets = Vec::with_capacity(adj.iter().map(Vec::len).sum());
        offsets.push(0);
        for list in adj {
            targets.extend_from_slice(&list);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    /// Builds from per-vertex neighbor bitmasks (order at most 64).
    pub fn from_bitmasks(masks: &[u64]) -> Graph {
        let n = masks.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(masks.iter().map(|m| m.count_ones() as usize).sum());
        offsets.push(0);
        for &mask in masks {
            let mut m = mask;
            while m != 0 {
                targets.push(m.trailing_zeros());
                m &= m - 1;
            }
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn size(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, x: usize) -> usize {
        self.offsets[x + 1] - self.offsets[x]
    }

    pub fn neighbors(&self, x: usize) -> &[u32] {
        &self.targets[self.offsets[x]..self.offsets[x + 1]]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&(b as u32)).is_ok()
    }

    pub fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: x,
                order: self.order(),
            })
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `Some(r)` if every vertex has degree `r`. The empty graph counts as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = if self.order() == 0 { 0 } else { self.degree(0) };
        (0..self.order()).all(|x| self.degree(x) == first).then_some(first)
    }

    pub fn require_regular(&self) -> Result<usize> {
        self.regular_degree().ok_or_else(|| {
            let degrees = (0..self.order()).map(|x| self.degree(x));
            Error::NotRegular {
                min: degrees.clone().min().unwrap_or(0),
                max: degrees.max().unwrap_or(0),
            }
        })
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    let v = v as usize;
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = std::collections::HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            index.insert(v, i as u32);
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<u32> = self
                    .neighbors(v)
                    .iter()
                    .filter_map(|w| index.get(&(*w as usize)).copied())
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|u| {
                let nb = self.neighbors(u);
                (0..n as u32)
                    .filter(|&v| v as usize != u && nb.binary_search(&v).is_err())
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Disjoint union of `copies` copies of each listed graph, in order.
    pub fn disjoint_union<'a, I>(parts: I) -> Graph
    where
        I: IntoIterator<Item = (&'a Graph, usize)>,
    {
        let mut offsets = vec![0usize];
        let mut targets = Vec::new();
        let mut base = 0u32;
        for (g, copies) in parts {
            for _ in 0..copies {
                for x in 0..g.order() {
                    targets.extend(g.neighbors(x).iter().map(|&v| v + base));
                    offsets.push(targets.len());
                }
                base += g.order() as u32;
            }
        }
        Graph { offsets, targets }
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        comp.push(v as usize);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.order(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Text edge list, one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses either the JSON format or a whitespace edge list (`#` starts a comment).
    /// For edge lists the order is one more than the largest vertex mentioned.
    pub fn parse(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            let json: GraphJson = serde_json::from_str(text)?;
            return Graph::try_from(json);
        }
        let mut edges = Vec::new();
        let mut n = 0;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) => {
                    n = n.max(u + 1).max(v + 1);
                    edges.push((u, v));
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected `u v`, got {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        Graph::from_edges(n, edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Wire form: `{"n": <int>, "edges": [[u, v], ...]}` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Graph> {
        Graph::from_edges(json.n, json.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = GraphJson::deserialize(deserializer)?;
        Graph::try_from(json).map_err(serde::de::Error::custom)
    }
}

/// Named graphs used throughout the crate and its tests.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n as u32)
            .map(|u| (0..n as u32).filter(|&v| v != u).collect())
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("valid edges")
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(p));
        }
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v])
            .collect();
        Graph::from_edges(n, edges).expect("valid edges")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid edges")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid edges")
    }

    pub fn petersen() -> Graph {
        let edges = [
            (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4),
            (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
        ];
        Graph::from_edges(10, edges).expect("valid edges")
    }

    /// The Robertson graph: the 4-regular graph of girth 5 on 19 vertices.
    pub fn robertson() -> Graph {
        const JUMPS: [usize; 19] = [8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4];
        let edges = (0..19)
            .map(|i| (i, (i + 1) % 19))
            .chain(JUMPS.iter().enumerate().map(|(i, j)| (i, (i + j) % 19)));
        Graph::from_edges(19, edges).expect("valid edges")
    }

    /// Triangular prism `C_3 x K_2`.
    pub fn prism() -> Graph {
        let edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
        Graph::from_edges(6, edges).expect("valid edges")
    }
}
