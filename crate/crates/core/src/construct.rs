//! Regular hypergraphs of Berge girth at least 5.
//!
//! Two backends:
//!
//! - [`construct_girth5_hypergraph`]: randomized greedy. For each required
//!   size class the vertex set is partitioned into parts, each part grown one
//!   vertex at a time from vertices at distance at least 4 (in the clique
//!   expansion of the hyperedges already placed) from every current member.
//!   Failed classes are retried; after repeated failures the vertex count is
//!   doubled. The result is checked before it is returned.
//! - [`reference_construction`]: the double induction on girth and degree,
//!   gluing copies of a smaller hypergraph along a hypergraph of smaller
//!   girth. Its size explodes, so it is guarded by a vertex budget and is only
//!   usable for tiny parameters.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::{berge_girth_below, DegreeProfile, Hypergraph};
use crate::{Error, Result};

const ATTEMPTS_PER_SIZE: u64 = 8;
const CLASS_RETRIES: usize = 6;
pub const MAX_VERTICES: usize = 100_000;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm_all(xs: &[usize]) -> usize {
    xs.iter().fold(1, |acc, &x| acc / gcd(acc, x) * x)
}

fn round_up(n: usize, m: usize) -> usize {
    n.div_ceil(m) * m
}

/// Randomized construction of a hypergraph in which every vertex lies in
/// hyperedges of sizes exactly `profile.sizes` and every Berge cycle has
/// length at least 5. Deterministic in `seed`.
pub fn construct_girth5_hypergraph(profile: &DegreeProfile, seed: u64, size_hint: usize) -> Result<Hypergraph> {
    DegreeProfile::new(profile.sizes.clone())?;
    let max = *profile.sizes.iter().max().unwrap();
    if size_hint < max + 1 {
        return Err(Error::InvalidParameters(format!(
            "size hint {size_hint} below max hyperedge size + 1 = {}",
            max + 1
        )));
    }
    let mut sizes = profile.sizes.clone();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let step = lcm_all(&sizes);
    let mut n = round_up(size_hint, step);
    let mut stream = 0u64;
    while n <= MAX_VERTICES {
        for _ in 0..ATTEMPTS_PER_SIZE {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            stream += 1;
            if let Some(h) = greedy_attempt(n, &sizes, &mut rng) {
                if h.matches_profile(profile) && berge_girth_below(&h, 5).is_none() {
                    return Ok(h);
                }
            }
        }
        n = round_up(n * 2, step);
    }
    Err(Error::ConstructionFailed(format!(
        "no girth-5 hypergraph with sizes {:?} found below {MAX_VERTICES} vertices",
        profile.sizes
    )))
}

/// Clique expansion kept as adjacency lists while hyperedges are added.
struct Growing {
    adj: Vec<Vec<u32>>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl Growing {
    fn new(n: usize) -> Self {
        Growing {
            adj: vec![Vec::new(); n],
            stamp: vec![0; n],
            epoch: 0,
        }
    }

    fn fresh_epoch(&mut self) {
        self.epoch += 1;
        if self.epoch == u32::MAX {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    /// Marks every vertex within distance 3 of `v` with the current epoch.
    fn mark_ball(&mut self, v: usize) {
        let epoch = self.epoch;
        let mut frontier = vec![v];
        self.stamp[v] = epoch;
        for _ in 0..3 {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    let w = w as usize;
                    if self.stamp[w] != epoch {
                        self.stamp[w] = epoch;
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
    }

    fn add_clique(&mut self, part: &[usize]) {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                self.adj[u].push(v as u32);
                self.adj[v].push(u as u32);
            }
        }
    }
}

fn greedy_attempt(n: usize, sizes: &[usize], rng: &mut ChaCha8Rng) -> Option<Hypergraph> {
    let mut g = Growing::new(n);
    let mut hyperedges = Vec::with_capacity(n * sizes.len());
    for &s in sizes {
        let mut placed = None;
        for _ in 0..CLASS_RETRIES {
            if let Some(parts) = partition_class(&mut g, n, s, rng) {
                placed = Some(parts);
                break;
            }
        }
        hyperedges.extend(placed?);
    }
    Hypergraph::new(n, hyperedges).ok()
}

/// Splits `0..n` into parts of size `s`, members pairwise at distance >= 4 in the
/// current expansion (including parts placed earlier in this class). Parts are
/// added to the expansion as they are built; on failure they are rolled back.
fn partition_class(g: &mut Growing, n: usize, s: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<usize>>> {
    let saved: Vec<usize> = g.adj.iter().map(Vec::len).collect();
    let mut pool: Vec<usize> = (0..n).collect();
    pool.shuffle(rng);
    let mut parts = Vec::with_capacity(n / s);
    while let Some(first) = pool.pop() {
        g.fresh_epoch();
        g.mark_ball(first);
        let mut part = vec![first];
        while part.len() < s {
            let epoch = g.epoch;
            let Some(pos) = pool.iter().rposition(|&v| g.stamp[v] != epoch) else {
                for (list, len) in g.adj.iter_mut().zip(&saved) {
                    list.truncate(*len);
                }
                return None;
            };
            let v = pool.swap_remove(pos);
            g.mark_ball(v);
            part.push(v);
        }
        g.add_clique(&part);
        parts.push(part);
    }
    Some(parts)
}

/// Exact vertex count of [`reference_construction`] for `(girth, sizes)`, or
/// `None` once it exceeds `budget`.
pub fn reference_size(girth: usize, sizes: &[usize], budget: usize) -> Option<usize> {
    match sizes {
        [] => None,
        [s] => Some(*s),
        _ if girth <= 2 => Some(lcm_all(sizes)),
        _ => {
            let (last, rest) = sizes.split_last().unwrap();
            let inner = reference_size(girth, rest, budget)?;
            let outer = reference_size(girth - 1, &vec![*last; inner], budget)?;
            let total = inner.checked_mul(outer)?;
            (total <= budget).then_some(total)
        }
    }
}

/// Literal double-induction construction of a hypergraph with every vertex in
/// hyperedges of sizes `sizes` and Berge girth at least `girth`.
///
/// Base cases: a single size is one partition into blocks; `girth <= 2`
/// takes the same partition once per size class of the common refinement
/// (parallel hyperedges are allowed, the girth bound being vacuous).
pub fn reference_construction(girth: usize, sizes: &[usize], budget: usize) -> Result<Hypergraph> {
    DegreeProfile::new(sizes.to_vec())?;
    if reference_size(girth, sizes, budget).is_none() {
        return Err(Error::ConstructionFailed(format!(
            "reference construction for girth {girth}, sizes {sizes:?} exceeds {budget} vertices"
        )));
    }
    Ok(reference_unchecked(girth, sizes))
}

fn blocks(n: usize, s: usize) -> Vec<Vec<usize>> {
    (0..n / s).map(|b| (b * s..(b + 1) * s).collect()).collect()
}

fn reference_unchecked(girth: usize, sizes: &[usize]) -> Hypergraph {
    if let [s] = sizes {
        return Hypergraph {
            n: *s,
            hyperedges: blocks(*s, *s),
        };
    }
    if girth <= 2 {
        let n = lcm_all(sizes);
        let hyperedges = sizes.iter().flat_map(|&s| blocks(n, s)).collect();
        return Hypergraph { n, hyperedges };
    }
    let (&last, rest) = sizes.split_last().unwrap();
    let base = reference_unchecked(girth, rest);
    let m = base.n;
    let frame = reference_unchecked(girth - 1, &vec![last; m]);
    // Copy i of `base` occupies vertices i*m .. (i+1)*m.
    let mut hyperedges = Vec::with_capacity(frame.n * base.hyperedges.len() + frame.hyperedges.len());
    for i in 0..frame.n {
        for e in &base.hyperedges {
            hyperedges.push(e.iter().map(|v| i * m + v).collect());
        }
    }
    // Each frame vertex has exactly m incident frame hyperedges; give each a distinct vertex of its copy.
    let mut next_slot = vec![0usize; frame.n];
    for e in &frame.hyperedges {
        let glued = e
            .iter()
            .map(|&i| {
                let slot = next_slot[i];
                next_slot[i] += 1;
                i * m + slot
            })
            .collect();
        hyperedges.push(glued);
    }
    Hypergraph {
        n: frame.n * m,
        hyperedges,
    }
}
