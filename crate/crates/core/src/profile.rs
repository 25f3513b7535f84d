//! Per-vertex and global cycle statistics.
//!
//! Four-cycles through a vertex `x` are counted through cherries: every
//! four-cycle `x a b c` corresponds to exactly one unordered neighbor pair
//! `{a, c}` of `x` together with a common neighbor `b != x` of `a` and `c`.
//! The cycle is classified by its two diagonals `xb` and `ac`:
//!
//! | type | `xb` | `ac` |
//! |------|------|------|
//! | 1    | yes  | yes  |
//! | 2    | yes  | no   |
//! | 3    | no   | yes  |
//! | 4    | no   | no   |

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::rational::{choose2, choose3, QPoint, Rat};
use crate::{Error, Result};

/// Counts of four-cycles through a vertex, split by diagonal type.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourCycleTypes {
    pub both: u64,
    pub root_diagonal: u64,
    pub opposite_diagonal: u64,
    pub none: u64,
}

impl FourCycleTypes {
    pub fn total(&self) -> u64 {
        self.both + self.root_diagonal + self.opposite_diagonal + self.none
    }

    /// The weighted count `c41 + 2 c42`.
    pub fn weighted(&self) -> u64 {
        self.both + 2 * self.root_diagonal
    }

    pub fn as_tuple(&self) -> (u64, u64, u64, u64) {
        (self.both, self.root_diagonal, self.opposite_diagonal, self.none)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalProfile {
    /// Triangles through the vertex.
    pub c3: u64,
    /// Four-cycles through the vertex.
    pub c4: u64,
    /// Weighted square count, computed from the neighborhood graph alone.
    pub ct: u64,
    pub types: FourCycleTypes,
    /// Degrees inside the neighborhood graph, non-increasing.
    pub nbhd_degrees: Vec<usize>,
}

impl LocalProfile {
    /// `(c3/3, c4/4)`.
    pub fn point(&self) -> QPoint {
        QPoint::new(Rat::new(self.c3, 3u64), Rat::new(self.c4, 4u64))
    }

    /// `(c3/3, ct/4)`.
    pub fn weighted_point(&self) -> QPoint {
        QPoint::new(Rat::new(self.c3, 3u64), Rat::new(self.ct, 4u64))
    }
}

fn contains(sorted: &[u32], v: u32) -> bool {
    sorted.binary_search(&v).is_ok()
}

/// Per-vertex cycle statistics of `x`.
pub fn local_profile(g: &Graph, x: usize, require_regular: bool) -> Result<LocalProfile> {
    g.check_vertex(x)?;
    if require_regular {
        g.require_regular()?;
    }
    Ok(local_profile_unchecked(g, x))
}

pub(crate) fn local_profile_unchecked(g: &Graph, x: usize) -> LocalProfile {
    let nx = g.neighbors(x);
    let xr = x as u32;

    // Degrees inside G^x.
    let mut degrees: Vec<usize> = nx
        .iter()
        .map(|&a| g.neighbors(a as usize).iter().filter(|&&w| contains(nx, w)).count())
        .collect();
    let c3 = degrees.iter().sum::<usize>() as u64 / 2;

    let mut types = FourCycleTypes::default();
    for (i, &a) in nx.iter().enumerate() {
        let na = g.neighbors(a as usize);
        for &c in &nx[i + 1..] {
            let nc = g.neighbors(c as usize);
            let ac = contains(na, c);
            // Sorted merge for common neighbors of a and c.
            let (mut p, mut q) = (0, 0);
            while p < na.len() && q < nc.len() {
                match na[p].cmp(&nc[q]) {
                    std::cmp::Ordering::Less => p += 1,
                    std::cmp::Ordering::Greater => q += 1,
                    std::cmp::Ordering::Equal => {
                        let b = na[p];
                        if b != xr {
                            match (contains(nx, b), ac) {
                                (true, true) => types.both += 1,
                                (true, false) => types.root_diagonal += 1,
                                (false, true) => types.opposite_diagonal += 1,
                                (false, false) => types.none += 1,
                            }
                        }
                        p += 1;
                        q += 1;
                    }
                }
            }
        }
    }

    // Weighted count from G^x: 3 n3 + 2 n2, where the cherries of G^x number 3 n3 + n2.
    let mut n3 = 0u64;
    for (i, &a) in nx.iter().enumerate() {
        let na = g.neighbors(a as usize);
        for (j, &b) in nx.iter().enumerate().skip(i + 1) {
            if !contains(na, b) {
                continue;
            }
            let nb = g.neighbors(b as usize);
            n3 += nx[j + 1..]
                .iter()
                .filter(|&&c| contains(na, c) && contains(nb, c))
                .count() as u64;
        }
    }
    let cherries: u64 = degrees.iter().map(|&d| choose2(d as u64)).sum();
    let n2 = cherries - 3 * n3;
    let ct = 3 * n3 + 2 * n2;

    degrees.sort_unstable_by(|a, b| b.cmp(a));
    LocalProfile {
        c3,
        c4: types.total(),
        ct,
        types,
        nbhd_degrees: degrees,
    }
}

/// Sums of the per-vertex statistics over all vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileSums {
    pub c3: u64,
    pub c4: u64,
    pub ct: u64,
    pub types: FourCycleTypes,
}

pub fn profile_sums(g: &Graph) -> ProfileSums {
    let mut s = ProfileSums::default();
    for x in 0..g.order() {
        let p = local_profile_unchecked(g, x);
        s.c3 += p.c3;
        s.c4 += p.c4;
        s.ct += p.ct;
        s.types = s.types + p.types;
    }
    s
}

/// Global triangle and four-cycle counts.
pub fn cycle_totals(g: &Graph) -> (u64, u64) {
    let sums = profile_sums(g);
    assert_eq!(sums.c3 % 3, 0, "per-vertex triangle counts must sum to a multiple of 3");
    assert_eq!(sums.c4 % 4, 0, "per-vertex square counts must sum to a multiple of 4");
    let c3 = sums.c3 / 3;
    debug_assert_eq!(c3, triangles_by_edges(g));
    (c3, sums.c4 / 4)
}

fn triangles_by_edges(g: &Graph) -> u64 {
    let mut t = 0;
    for (u, v) in g.edges() {
        let nu = g.neighbors(u);
        t += g
            .neighbors(v)
            .iter()
            .filter(|&&w| w as usize > v && contains(nu, w))
            .count() as u64;
    }
    t
}

/// `(d3, d4)` of a regular graph.
pub fn cycle_point(g: &Graph) -> Result<QPoint> {
    g.require_regular()?;
    if g.order() == 0 {
        return Err(Error::InvalidParameters("cycle point of the empty graph".into()));
    }
    let sums = profile_sums(g);
    Ok(point_from_sums(&sums, g.order()))
}

pub(crate) fn point_from_sums(sums: &ProfileSums, n: usize) -> QPoint {
    let n = n as u64;
    QPoint::new(Rat::new(sums.c3, 3 * n), Rat::new(sums.c4, 4 * n))
}

/// Subgraph induced on `N(x)`, with neighbors relabelled in increasing order.
pub fn neighborhood_graph(g: &Graph, x: usize) -> Result<Graph> {
    g.check_vertex(x)?;
    let nx: Vec<usize> = g.neighbors(x).iter().map(|&v| v as usize).collect();
    Ok(g.induced(&nx))
}

/// Edge count and the number of vertex triples spanning 0, 1, 2 and 3 edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleProfile {
    pub e: u64,
    pub n0: u64,
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
}

impl TripleProfile {
    pub fn total(&self) -> u64 {
        self.n0 + self.n1 + self.n2 + self.n3
    }

    pub fn weighted(&self) -> u64 {
        self.n1 + 2 * self.n2 + 3 * self.n3
    }

    /// Both counting identities for a graph of order `v`.
    pub fn identities_hold(&self, v: u64) -> bool {
        self.total() == choose3(v) && self.weighted() == v.saturating_sub(2) * self.e
    }
}

pub fn triple_profile(h: &Graph) -> TripleProfile {
    let v = h.order();
    let mut tp = TripleProfile {
        e: h.size() as u64,
        ..Default::default()
    };
    for a in 0..v {
        for b in a + 1..v {
            let ab = h.has_edge(a, b) as u8;
            for c in b + 1..v {
                match ab + h.has_edge(a, c) as u8 + h.has_edge(b, c) as u8 {
                    0 => tp.n0 += 1,
                    1 => tp.n1 += 1,
                    2 => tp.n2 += 1,
                    _ => tp.n3 += 1,
                }
            }
        }
    }
    tp
}

/// Largest number of four-cycles through a vertex of an `r`-regular graph
/// whose neighborhood graph has degree sequence `degrees`.
///
/// Outside vertices are added greedily, the `j`-th one joined to every
/// neighbor whose neighborhood degree is below `r - j`, which gives
/// `e_j = |{i : d_i < r - j}|` and the bound `sum C(d_i, 2) + sum C(e_j, 2)`.
pub fn max_c4_given_degrees(r: usize, degrees: &[usize]) -> Result<u64> {
    if degrees.len() != r {
        return Err(Error::MalformedDegrees(format!(
            "expected {r} degrees, got {}",
            degrees.len()
        )));
    }
    if let Some(&d) = degrees.iter().find(|&&d| d + 1 > r) {
        return Err(Error::MalformedDegrees(format!("degree {d} exceeds r - 1 = {}", r - 1)));
    }
    if degrees.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::MalformedDegrees("sequence is not non-increasing".into()));
    }
    let inner: u64 = degrees.iter().map(|&d| choose2(d as u64)).sum();
    let outer: u64 = (1..r)
        .map(|j| degrees.iter().filter(|&&d| d < r - j).count() as u64)
        .map(choose2)
        .sum();
    Ok(inner + outer)
}

/// Exact sum of the per-vertex points `(c3/3, c4/4)` divided by `n`, computed as rationals.
pub fn mean_local_point(g: &Graph) -> QPoint {
    let n = g.order();
    if n == 0 {
        return QPoint::origin();
    }
    let mut sx = Rat::zero();
    let mut sy = Rat::zero();
    for x in 0..n {
        let p = local_profile_unchecked(g, x).point();
        sx = sx + p.x;
        sy = sy + p.y;
    }
    let n = Rat::int(n as u64);
    QPoint::new(sx / &n, sy / &n)
}

impl std::ops::Add for FourCycleTypes {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        FourCycleTypes {
            both: self.both + o.both,
            root_diagonal: self.root_diagonal + o.root_diagonal,
            opposite_diagonal: self.opposite_diagonal + o.opposite_diagonal,
            none: self.none + o.none,
        }
    }
}
