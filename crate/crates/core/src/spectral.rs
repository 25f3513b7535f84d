//! Moments of the eigenvalue distribution of the random-walk transition
//! matrix, computed exactly from closed-walk counts.
//!
//! For an `r`-regular graph the `k`-th moment is the average over vertices of
//! the `k`-step return probability, i.e. `trace(A^k) / (n r^k)`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::polytope::moment_map;
use crate::rational::Rat;
use crate::{Error, Result};

/// Number of closed walks of every length `0..=k` starting at `x`.
fn closed_walk_counts(g: &Graph, x: usize, k: usize) -> Vec<BigUint> {
    let n = g.order();
    let mut cur = vec![BigUint::zero(); n];
    cur[x] = BigUint::one();
    let mut out = vec![BigUint::one()];
    for _ in 0..k {
        let mut next = vec![BigUint::zero(); n];
        for (u, count) in cur.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for &v in g.neighbors(u) {
                next[v as usize] += count;
            }
        }
        out.push(next[x].clone());
        cur = next;
    }
    out
}

pub fn closed_walks(g: &Graph, x: usize, k: usize) -> Result<BigUint> {
    g.check_vertex(x)?;
    Ok(closed_walk_counts(g, x, k).pop().unwrap())
}

/// Probability that the simple random walk from `x` is back at `x` after `k` steps.
pub fn return_probability(g: &Graph, x: usize, k: usize) -> Result<Rat> {
    g.check_vertex(x)?;
    let r = g.require_regular()?;
    if r == 0 {
        return Err(Error::InvalidParameters("random walk on isolated vertices".into()));
    }
    let walks = closed_walks(g, x, k)?;
    let denom = num_traits::pow(BigUint::from(r), k);
    Ok(Rat::new(walks, denom))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentVector {
    pub r: usize,
    /// `moments[k]` is the `k`-th moment, for `k = 0..=K`.
    pub moments: Vec<Rat>,
}

impl MomentVector {
    pub fn get(&self, k: usize) -> Option<&Rat> {
        self.moments.get(k)
    }
}

/// Moments `0..=max_k` of the eigenvalue distribution of a regular graph.
pub fn spectral_moments(g: &Graph, max_k: usize) -> Result<MomentVector> {
    let r = g.require_regular()?;
    if r == 0 || g.order() == 0 {
        return Err(Error::InvalidParameters("moments need a graph of positive degree".into()));
    }
    let mut traces = vec![BigUint::zero(); max_k + 1];
    for x in 0..g.order() {
        for (t, w) in traces.iter_mut().zip(closed_walk_counts(g, x, max_k)) {
            *t += w;
        }
    }
    let n = BigUint::from(g.order());
    let moments = traces
        .into_iter()
        .enumerate()
        .map(|(k, t)| Rat::new(t, &n * num_traits::pow(BigUint::from(r), k)))
        .collect();
    Ok(MomentVector { r, moments })
}

/// `(d3, d4) -> (6 d3 / r^3, 8 d4 / r^4 + (2r - 1) / r^3)`.
pub fn densities_to_moments(r: usize, d3: &Rat, d4: &Rat) -> (Rat, Rat) {
    let (sx, sy, ty) = moment_map(r);
    (d3 * &sx, d4 * &sy + &ty)
}

/// Inverse of [`densities_to_moments`].
pub fn moments_to_densities(r: usize, m3: &Rat, m4: &Rat) -> (Rat, Rat) {
    let (sx, sy, ty) = moment_map(r);
    (m3 / &sx, (m4 - &ty) / &sy)
}
