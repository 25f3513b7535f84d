//! Random regular graphs from the configuration (pairing) model.
//!
//! Sample `i` of a batch draws from its own ChaCha stream (`seed`, stream
//! `i`), so batches are reproducible and independent of the thread count.

use std::io::Write;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::polytope::{polygon_qr, Location};
use crate::profile::cycle_point;
use crate::rational::{QPoint, Rat};
use crate::{Error, Result};

/// Pairings tried before giving up on a simple graph.
pub const MAX_ATTEMPTS: usize = 100_000;

fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// One uniform simple `r`-regular graph on `n` vertices: random pairings of
/// the `n r` half-edges are drawn until one has no loop or repeated edge.
pub fn sample_regular(r: usize, n: usize, seed: u64, index: u64) -> Result<Graph> {
    if r == 0 || n <= r {
        return Err(Error::InvalidParameters(format!("need 1 <= r < n, got r={r}, n={n}")));
    }
    if (n * r) % 2 == 1 {
        return Err(Error::Parity { n, r });
    }
    let mut rng = stream_rng(seed, index);
    let mut points: Vec<u32> = (0..n as u32).flat_map(|v| std::iter::repeat(v).take(r)).collect();
    let mut adj: Vec<Vec<u32>> = vec![Vec::with_capacity(r); n];
    'attempt: for _ in 0..MAX_ATTEMPTS {
        points.shuffle(&mut rng);
        adj.iter_mut().for_each(Vec::clear);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u as usize].contains(&v) {
                continue 'attempt;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        return Ok(Graph::from_sorted_adjacency(adj));
    }
    Err(Error::RejectionBudgetExhausted(MAX_ATTEMPTS))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub index: u64,
    pub point: QPoint,
    pub location: Location,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub r: usize,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    /// Worker threads; 1 runs on the calling thread, 0 uses every core.
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleBatch {
    pub r: usize,
    pub n: usize,
    pub seed: u64,
    pub records: Vec<SampleRecord>,
    /// Exact componentwise mean of the density points.
    pub mean: QPoint,
    pub min: QPoint,
    pub max: QPoint,
}

impl SampleBatch {
    pub fn all_inside(&self) -> bool {
        self.records.iter().all(|s| s.location.is_inside())
    }
}

pub fn sample_batch(config: &SampleConfig) -> Result<SampleBatch> {
    if config.count == 0 {
        return Err(Error::InvalidParameters("count must be positive".into()));
    }
    let polygon = polygon_qr(config.r)?;
    let one = |i: usize| -> Result<SampleRecord> {
        let g = sample_regular(config.r, config.n, config.seed, i as u64)?;
        let point = cycle_point(&g)?;
        let location = polygon.contains(&point);
        Ok(SampleRecord {
            index: i as u64,
            point,
            location,
        })
    };
    let records: Vec<SampleRecord> = if config.jobs == 1 {
        (0..config.count).map(one).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::InvalidParameters(e.to_string()))?;
        pool.install(|| (0..config.count).into_par_iter().map(one).collect::<Result<_>>())?
    };

    let count = Rat::int(config.count as i64);
    let sx: Rat = records.iter().map(|s| s.point.x.clone()).sum();
    let sy: Rat = records.iter().map(|s| s.point.y.clone()).sum();
    let pick = |f: fn(Rat, Rat) -> Rat| {
        let first = &records[0].point;
        records.iter().skip(1).fold(first.clone(), |acc, s| {
            QPoint::new(f(acc.x, s.point.x.clone()), f(acc.y, s.point.y.clone()))
        })
    };
    Ok(SampleBatch {
        r: config.r,
        n: config.n,
        seed: config.seed,
        mean: QPoint::new(sx / &count, sy / &count),
        min: pick(std::cmp::min),
        max: pick(std::cmp::max),
        records,
    })
}

pub const CSV_HEADER: &str = "index,d3_num,d3_den,d4_num,d4_den,classification";

pub fn write_csv<W: Write>(records: &[SampleRecord], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for s in records {
        let class = match s.location {
            Location::Interior => "interior",
            Location::Boundary => "boundary",
            Location::Outside => "outside",
        };
        writeln!(
            out,
            "{},{},{},{},{},{class}",
            s.index,
            s.point.x.numer(),
            s.point.x.denom(),
            s.point.y.numer(),
            s.point.y.denom()
        )?;
    }
    Ok(())
}
