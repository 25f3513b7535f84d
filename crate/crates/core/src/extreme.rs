//! The extreme graphs `C^r_l`.
//!
//! `C^r_l` is the clique expansion of a girth-5 hypergraph in which every
//! vertex lies in hyperedges of sizes `r_1 + 1, ..., r_l + 1` for the balanced
//! partition `r = r_1 + ... + r_l`. Every neighborhood is then a disjoint union
//! of cliques `K_{r_1}, ..., K_{r_l}` and no vertex has a cherry whose node is
//! outside its closed neighborhood. `C^r_0` denotes `K_{r,r}`.

use serde::{Deserialize, Serialize};

use crate::construct::construct_girth5_hypergraph;
use crate::graph::{named, Graph};
use crate::hypergraph::{berge_girth_below, clique_expansion, Hypergraph, Partition};
use crate::profile::local_profile_unchecked;
use crate::rational::choose2;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct ExtremeGraph {
    pub r: usize,
    /// `None` for `K_{r,r}`.
    pub partition: Option<Partition>,
    /// Hypergraph whose clique expansion is `graph` (`None` for `K_{r,r}`).
    pub hypergraph: Option<Hypergraph>,
    pub graph: Graph,
}

/// Per-vertex triangle and four-cycle counts of an extreme graph:
/// `c3 = sum C(r_i, 2)` and `c4 = sum r_i C(r_i - 1, 2)`.
pub fn closed_form_counts(partition: &Partition) -> (u64, u64) {
    let c3 = partition.parts().iter().map(|&p| choose2(p as u64)).sum();
    let c4 = partition
        .parts()
        .iter()
        .map(|&p| p as u64 * choose2(p as u64 - 1))
        .sum();
    (c3, c4)
}

/// Builds `C^r_l` for the given partition of `r`.
///
/// Known small graphs are used where they exist (a single clique, the
/// Petersen graph for `r = 3` and the Robertson graph for `r = 4` when every
/// part is 1, a 5-cycle for `r = 2`); otherwise the randomized hypergraph
/// backend is used.
pub fn extreme_graph(partition: &Partition, seed: u64) -> Result<ExtremeGraph> {
    let r = partition.total();
    let profile = partition.degree_profile();
    let hypergraph = if partition.len() == 1 {
        Hypergraph::new(r + 1, vec![(0..=r).collect()])?
    } else if partition.parts().iter().all(|&p| p == 1) && (2..=4).contains(&r) {
        let g = match r {
            2 => named::cycle(5),
            3 => named::petersen(),
            _ => named::robertson(),
        };
        Hypergraph::from_graph(&g)
    } else {
        let hint = profile.sizes.iter().max().unwrap() + 1;
        construct_girth5_hypergraph(&profile, seed, hint)?
    };
    let graph = clique_expansion(&hypergraph);
    Ok(ExtremeGraph {
        r,
        partition: Some(partition.clone()),
        hypergraph: Some(hypergraph),
        graph,
    })
}

/// `C^r_l` with the balanced partition; `l = 0` gives `K_{r,r}`.
pub fn extreme_graph_balanced(r: usize, l: usize, seed: u64) -> Result<ExtremeGraph> {
    if r < 1 || l > r {
        return Err(Error::InvalidParameters(format!("need 0 <= l <= r, got r={r}, l={l}")));
    }
    if l == 0 {
        return Ok(ExtremeGraph {
            r,
            partition: None,
            hypergraph: None,
            graph: named::complete_bipartite(r, r),
        });
    }
    extreme_graph(&Partition::balanced(r, l)?, seed)
}

impl ExtremeGraph {
    /// Structural report including the hypergraph girth check.
    pub fn verify(&self) -> ExtremeReport {
        let Some(partition) = &self.partition else {
            let ok = self.graph == named::complete_bipartite(self.r, self.r);
            return ExtremeReport {
                regular: ok,
                neighborhood_cliques: ok,
                no_type2_cherries: ok,
                closed_form_counts: ok,
                hypergraph_girth_ok: None,
            };
        };
        let mut report = verify_extreme(&self.graph, self.r, partition);
        report.hypergraph_girth_ok = self.hypergraph.as_ref().map(|h| {
            berge_girth_below(h, 5).is_none()
                && h.matches_profile(&partition.degree_profile())
                && clique_expansion(h) == self.graph
        });
        report
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremeReport {
    pub regular: bool,
    pub neighborhood_cliques: bool,
    pub no_type2_cherries: bool,
    pub closed_form_counts: bool,
    /// Set only when a hypergraph was available to check.
    pub hypergraph_girth_ok: Option<bool>,
}

impl ExtremeReport {
    pub fn passed(&self) -> bool {
        self.regular
            && self.neighborhood_cliques
            && self.no_type2_cherries
            && self.closed_form_counts
            && self.hypergraph_girth_ok.unwrap_or(true)
    }
}

/// Checks the extreme-graph properties of `g` directly, without reference to
/// how it was built.
pub fn verify_extreme(g: &Graph, r: usize, partition: &Partition) -> ExtremeReport {
    let mut report = ExtremeReport {
        regular: g.regular_degree() == Some(r) && partition.total() == r,
        neighborhood_cliques: true,
        no_type2_cherries: true,
        closed_form_counts: true,
        hypergraph_girth_ok: None,
    };
    if !report.regular {
        report.neighborhood_cliques = false;
        report.no_type2_cherries = false;
        report.closed_form_counts = false;
        return report;
    }
    let expected = closed_form_counts(partition);
    let mut hits = vec![0u32; g.order()];
    for x in 0..g.order() {
        let nx: Vec<usize> = g.neighbors(x).iter().map(|&v| v as usize).collect();
        let local = g.induced(&nx);
        let comps = local.components();
        let cliques = comps.iter().all(|c| {
            let k = c.len();
            c.iter().all(|&v| local.degree(v) == k - 1)
        });
        let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        if !cliques || sizes != partition.parts() {
            report.neighborhood_cliques = false;
        }

        // A type-2 cherry has its node outside {x} ∪ N(x) and two leaves in N(x).
        for &a in &nx {
            for &w in g.neighbors(a) {
                let w = w as usize;
                if w != x && nx.binary_search(&w).is_err() {
                    hits[w] += 1;
                    if hits[w] > 1 {
                        report.no_type2_cherries = false;
                    }
                }
            }
        }
        for &a in &nx {
            for &w in g.neighbors(a) {
                hits[w as usize] = 0;
            }
        }

        let p = local_profile_unchecked(g, x);
        if (p.c3, p.c4) != expected {
            report.closed_form_counts = false;
        }
    }
    report
}
