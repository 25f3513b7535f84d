//! Hypergraphs, Berge girth and clique expansion.
//!
//! A Berge cycle of length `k >= 2` is a cyclic sequence of `k` distinct
//! vertices and `k` distinct hyperedges in which consecutive vertices share
//! the hyperedge between them. Two hyperedges meeting in two or more vertices
//! therefore form a cycle of length 2, so girth at least 3 means the
//! hypergraph is linear.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson")]
pub struct Hypergraph {
    pub n: usize,
    pub hyperedges: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct HypergraphJson {
    n: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = Error;
    fn try_from(json: HypergraphJson) -> Result<Self> {
        Hypergraph::new(json.n, json.hyperedges)
    }
}

impl Hypergraph {
    /// Hyperedges are sorted internally; each must have at least two distinct valid vertices.
    pub fn new(n: usize, hyperedges: Vec<Vec<usize>>) -> Result<Hypergraph> {
        let mut out = Vec::with_capacity(hyperedges.len());
        for mut e in hyperedges {
            e.sort_unstable();
            let dup = e.windows(2).any(|w| w[0] == w[1]);
            if e.len() < 2 || dup || e.iter().any(|&v| v >= n) {
                return Err(Error::InvalidParameters(format!("invalid hyperedge {e:?}")));
            }
            out.push(e);
        }
        Ok(Hypergraph { n, hyperedges: out })
    }

    /// Views a graph as a 2-uniform hypergraph.
    pub fn from_graph(g: &Graph) -> Hypergraph {
        Hypergraph {
            n: g.order(),
            hyperedges: g.edges().map(|(u, v)| vec![u, v]).collect(),
        }
    }

    /// For every vertex, the indices of hyperedges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.hyperedges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Whether every vertex lies in hyperedges whose size multiset is exactly `profile.sizes`.
    pub fn matches_profile(&self, profile: &DegreeProfile) -> bool {
        let mut want = profile.sizes.clone();
        want.sort_unstable();
        self.incidence().iter().all(|edges| {
            let mut sizes: Vec<usize> = edges.iter().map(|&i| self.hyperedges[i].len()).collect();
            sizes.sort_unstable();
            sizes == want
        })
    }

    /// Whether any two hyperedges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        let inc = self.incidence();
        let mut seen = vec![usize::MAX; self.hyperedges.len()];
        for (i, e) in self.hyperedges.iter().enumerate() {
            for &v in e {
                for &j in &inc[v] {
                    if j == i {
                        continue;
                    }
                    if seen[j] == i {
                        return false;
                    }
                    seen[j] = i;
                }
            }
        }
        true
    }
}

/// Incidence (Levi) graph: vertices `0..n` then one node per hyperedge.
fn incidence_adjacency(h: &Hypergraph) -> Vec<Vec<u32>> {
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); h.n + h.hyperedges.len()];
    for (i, e) in h.hyperedges.iter().enumerate() {
        let node = (h.n + i) as u32;
        for &v in e {
            adj[v].push(node);
            adj[node as usize].push(v as u32);
        }
    }
    adj
}

/// Shortest Berge cycle length, `None` if there is none.
pub fn berge_girth(h: &Hypergraph) -> Option<usize> {
    berge_girth_below(h, usize::MAX)
}

/// Shortest Berge cycle length if it is below `limit`, otherwise `None`.
///
/// Computed as half the girth of the incidence graph, using breadth-first
/// search from every node truncated at depth `limit`.
pub fn berge_girth_below(h: &Hypergraph, limit: usize) -> Option<usize> {
    let adj = incidence_adjacency(h);
    let total = adj.len();
    // Incidence cycles have length 2k; we look for 2k < 2 * limit.
    let mut best = limit.saturating_mul(2);
    let mut dist = vec![u32::MAX; total];
    let mut parent = vec![u32::MAX; total];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..total {
        if adj[root].is_empty() {
            continue;
        }
        for &t in &touched {
            dist[t] = u32::MAX;
            parent[t] = u32::MAX;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u] as usize;
            if 2 * du + 1 >= best {
                break;
            }
            for &w in &adj[u] {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = du as u32 + 1;
                    parent[w] = u as u32;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] as usize != w {
                    best = best.min(du + dist[w] as usize + 1);
                }
            }
        }
    }
    (best < limit.saturating_mul(2)).then_some(best / 2)
}

/// Graph on the same vertices joining two vertices iff some hyperedge contains both.
pub fn clique_expansion(h: &Hypergraph) -> Graph {
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); h.n];
    for e in &h.hyperedges {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                adj[u].push(v as u32);
                adj[v].push(u as u32);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    Graph::from_sorted_adjacency(adj)
}

/// Required hyperedge sizes around every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub sizes: Vec<usize>,
}

impl DegreeProfile {
    pub fn new(sizes: Vec<usize>) -> Result<DegreeProfile> {
        if sizes.is_empty() || sizes.iter().any(|&s| s < 2) {
            return Err(Error::InvalidParameters(format!(
                "degree profile needs at least one size and every size >= 2, got {sizes:?}"
            )));
        }
        Ok(DegreeProfile { sizes })
    }

    /// Number of hyperedges through each vertex.
    pub fn r(&self) -> usize {
        self.sizes.len()
    }
}

/// A partition of `r` into positive parts, stored non-decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidParameters(format!("invalid partition {parts:?}")));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    /// The partition of `r` into `l` parts that are as equal as possible:
    /// part `i` (1-based) is `floor((r + i - 1) / l)`.
    pub fn balanced(r: usize, l: usize) -> Result<Partition> {
        if l == 0 || l > r {
            return Err(Error::InvalidParameters(format!("need 1 <= l <= r, got r={r}, l={l}")));
        }
        Ok(Partition {
            parts: (1..=l).map(|i| (r + i - 1) / l).collect(),
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Hyperedge sizes `r_i + 1` whose clique expansion realizes this neighborhood shape.
    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile {
            sizes: self.parts.iter().map(|p| p + 1).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    /// Direct search for Berge cycles: extend paths of distinct vertices and
    /// distinct hyperedges and close them back to the start.
    fn brute_girth(h: &Hypergraph) -> Option<usize> {
        fn dfs(
            h: &Hypergraph,
            start: usize,
            cur: usize,
            vs: &mut Vec<usize>,
            es: &mut Vec<usize>,
            best: &mut Option<usize>,
        ) {
            for (i, e) in h.hyperedges.iter().enumerate() {
                if es.contains(&i) || !e.contains(&cur) {
                    continue;
                }
                if vs.len() >= 2 && e.contains(&start) {
                    let k = vs.len();
                    *best = Some(best.map_or(k, |b| b.min(k)));
                }
                if best.is_some_and(|b| vs.len() + 1 >= b) {
                    continue;
                }
                for &w in e {
                    if vs.contains(&w) || w < start {
                        continue;
                    }
                    vs.push(w);
                    es.push(i);
                    dfs(h, start, w, vs, es, best);
                    es.pop();
                    vs.pop();
                }
            }
        }
        let mut best = None;
        for s in 0..h.n {
            dfs(h, s, s, &mut vec![s], &mut Vec::new(), &mut best);
        }
        best
    }

    fn fano() -> Hypergraph {
        let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        Hypergraph::new(7, lines.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn girth_examples() {
        let single = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(berge_girth(&single), None);
        let pair = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(berge_girth(&pair), Some(2));
        assert_eq!(berge_girth(&Hypergraph::from_graph(&named::complete(3))), Some(3));
        assert_eq!(brute_girth(&fano()), Some(3));
        assert_eq!(berge_girth(&fano()), Some(3));
        assert_eq!(berge_girth(&Hypergraph::from_graph(&named::petersen())), Some(5));
        assert_eq!(berge_girth_below(&Hypergraph::from_graph(&named::petersen()), 5), None);
        assert_eq!(berge_girth_below(&Hypergraph::from_graph(&named::petersen()), 6), Some(5));
    }

    #[test]
    fn girth_five_implies_linear() {
        let h = Hypergraph::from_graph(&named::robertson());
        assert_eq!(berge_girth(&h), Some(5));
        assert!(h.is_linear());
        assert!(!Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap().is_linear());
    }

    #[test]
    fn expansions() {
        let g = named::petersen();
        assert_eq!(clique_expansion(&Hypergraph::from_graph(&g)), g);
        let k = Hypergraph::new(5, vec![vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(clique_expansion(&k), named::complete(5));
        let two = Hypergraph::new(5, vec![vec![0, 1], vec![2, 3, 4]]).unwrap();
        let expected = Graph::disjoint_union([(&named::complete(2), 1), (&named::complete(3), 1)]);
        assert_eq!(clique_expansion(&two), expected);
    }

    #[test]
    fn balanced_partitions() {
        assert_eq!(Partition::balanced(7, 3).unwrap().parts(), &[2, 2, 3]);
        assert_eq!(Partition::balanced(3, 3).unwrap().parts(), &[1, 1, 1]);
        assert_eq!(Partition::balanced(12, 5).unwrap().total(), 12);
        assert!(Partition::balanced(3, 4).is_err());
        assert!(Partition::balanced(3, 0).is_err());
        assert!(DegreeProfile::new(vec![1, 2]).is_err());
    }

    #[test]
    fn rejects_bad_hyperedges() {
        assert!(Hypergraph::new(3, vec![vec![0]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 0]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 3]]).is_err());
        let err = serde_json::from_str::<Hypergraph>(r#"{"n":2,"hyperedges":[[0,5]]}"#);
        assert!(err.is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_hypergraph() -> impl Strategy<Value = Hypergraph> {
            (3usize..=9).prop_flat_map(|n| {
                proptest::collection::vec(proptest::collection::btree_set(0..n, 2..=3), 1..=6)
                    .prop_map(move |edges| {
                        Hypergraph::new(n, edges.into_iter().map(|e| e.into_iter().collect()).collect())
                            .unwrap()
                    })
            })
        }

        proptest! {
            #[test]
            fn incidence_girth_matches_direct_search(h in small_hypergraph()) {
                prop_assert_eq!(berge_girth(&h), brute_girth(&h));
            }

            #[test]
            fn girth_at_least_three_iff_linear(h in small_hypergraph()) {
                let linear = berge_girth(&h).map_or(true, |g| g >= 3);
                prop_assert_eq!(linear, h.is_linear());
            }
        }
    }
}
