//! Exhaustive generation of regular graphs on labeled vertices.
//!
//! Graphs are produced as per-vertex neighbor bitmasks (order at most 64).
//! The search fills vertices in increasing order: the first vertex that is
//! still short of degree `r` picks its remaining neighbors among the later
//! vertices that still have spare degree. Every labeled `r`-regular graph is
//! produced exactly once.
//!
//! The search tree splits by the neighborhood chosen for vertex 0, so the
//! subtrees returned by [`first_choices`] can be walked independently.

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumMode {
    Labeled,
    /// One representative per isomorphism class (order at most 16).
    Canonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub r: usize,
    pub n: usize,
    pub mode: EnumMode,
}

impl EnumSpec {
    pub fn labeled(r: usize, n: usize) -> Self {
        EnumSpec {
            r,
            n,
            mode: EnumMode::Labeled,
        }
    }

    pub fn canonical(r: usize, n: usize) -> Self {
        EnumSpec {
            r,
            n,
            mode: EnumMode::Canonical,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.r < 1 {
            return Err(Error::InvalidParameters("enumeration needs r >= 1".into()));
        }
        if self.n > 64 || (self.mode == EnumMode::Canonical && self.n > 16) {
            return Err(Error::InvalidParameters(format!("order {} too large for enumeration", self.n)));
        }
        Ok(())
    }

    /// False when no `r`-regular graph on `n` vertices exists.
    pub fn feasible(&self) -> bool {
        self.n > self.r && (self.n * self.r) % 2 == 0
    }
}

struct Search<'a, F> {
    r: u32,
    n: usize,
    masks: Vec<u64>,
    visit: &'a mut F,
}

impl<F: FnMut(&[u64]) -> ControlFlow<()>> Search<'_, F> {
    fn deficiency(&self, v: usize) -> u32 {
        self.r - self.masks[v].count_ones()
    }

    fn run(&mut self, from: usize) -> ControlFlow<()> {
        let Some(v) = (from..self.n).find(|&v| self.deficiency(v) > 0) else {
            return (self.visit)(&self.masks);
        };
        let need = self.deficiency(v) as usize;
        let candidates: Vec<usize> = (v + 1..self.n).filter(|&w| self.deficiency(w) > 0).collect();
        if candidates.len() < need {
            return ControlFlow::Continue(());
        }
        self.choose(v, &candidates, 0, need)
    }

    fn choose(&mut self, v: usize, candidates: &[usize], start: usize, left: usize) -> ControlFlow<()> {
        if left == 0 {
            return self.run(v + 1);
        }
        for i in start..=candidates.len() - left {
            let w = candidates[i];
            self.masks[v] |= 1 << w;
            self.masks[w] |= 1 << v;
            let flow = self.choose(v, candidates, i + 1, left - 1);
            self.masks[v] &= !(1 << w);
            self.masks[w] &= !(1 << v);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Neighbor masks of vertex 0, one per search subtree.
pub fn first_choices(spec: &EnumSpec) -> Result<Vec<u64>> {
    spec.validate()?;
    if !spec.feasible() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pick = |mask: u64| out.push(mask);
    fn combos(start: usize, n: usize, left: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if left == 0 {
            f(acc);
            return;
        }
        for w in start..=n - left {
            combos(w + 1, n, left - 1, acc | 1 << w, f);
        }
    }
    combos(1, spec.n, spec.r, 0, &mut pick);
    Ok(out)
}

/// Walks the labeled subtree in which vertex 0 has neighbor mask `root`.
pub fn for_each_in_subtree<F>(spec: &EnumSpec, root: u64, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    spec.validate()?;
    let mut masks = vec![0u64; spec.n];
    masks[0] = root;
    for w in 1..spec.n {
        if root >> w & 1 == 1 {
            masks[w] |= 1;
        }
    }
    let mut search = Search {
        r: spec.r as u32,
        n: spec.n,
        masks,
        visit: &mut visit,
    };
    Ok(search.run(1))
}

/// Visits every `r`-regular graph on `n` labeled vertices (or one per
/// isomorphism class in canonical mode) until `visit` breaks.
pub fn for_each_regular<F>(spec: &EnumSpec, mut visit: F) -> Result<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    let mut seen = HashSet::new();
    for root in first_choices(spec)? {
        let flow = for_each_in_subtree(spec, root, |masks| match spec.mode {
            EnumMode::Labeled => visit(masks),
            EnumMode::Canonical => {
                if seen.insert(canonical_code(masks)) {
                    visit(masks)
                } else {
                    ControlFlow::Continue(())
                }
            }
        })?;
        if flow.is_break() {
            break;
        }
    }
    Ok(())
}

/// Collects the enumeration as graphs.
pub fn enumerate_regular(spec: &EnumSpec) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_regular(spec, |m| {
        out.push(Graph::from_bitmasks(m));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn count_regular(spec: &EnumSpec) -> Result<u64> {
    let mut count = 0;
    for_each_regular(spec, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// Canonical code of a graph on at most 16 vertices: the lexicographically
/// smallest upper-triangle adjacency string over all labelings reachable by
/// colour refinement and individualization. Isomorphic graphs get equal codes.
pub fn canonical_code(masks: &[u64]) -> u128 {
    let n = masks.len();
    assert!(n <= 16, "canonical form supports at most 16 vertices");
    let cells = refine(masks, vec![(0..n).collect()]);
    let mut best = None;
    search_canonical(masks, cells, &mut best);
    best.unwrap_or(0)
}

fn refine(masks: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let cell_masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            let mut keyed: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| {
                    let sig = cell_masks.iter().map(|cm| (masks[v] & cm).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search_canonical(masks: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_for(masks, &order);
        if best.map_or(true, |b| code < b) {
            *best = Some(code);
        }
        return;
    };
    for &v in &cells[target] {
        let mut split = cells[..target].to_vec();
        split.push(vec![v]);
        split.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        split.extend(cells[target + 1..].iter().cloned());
        search_canonical(masks, refine(masks, split), best);
    }
}

fn code_for(masks: &[u64], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | (masks[order[i]] >> order[j] & 1) as u128;
        }
    }
    code
}
