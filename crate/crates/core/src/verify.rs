//! Property suites over exhaustively enumerated graphs.
//!
//! The region suite walks every labeled `r`-regular graph up to a given order
//! and checks the density inequalities per graph; the Bollobás suite walks
//! every graph on at most `v` vertices and checks the triple identities and
//! the Turán lower bound on triangles. Reports are deterministic apart from
//! the recorded wall time.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{first_choices, for_each_in_subtree, EnumSpec};
use crate::extreme::extreme_graph_balanced;
use crate::graph::{named, Graph, GraphJson};
use crate::hypergraph::Partition;
use crate::polytope::{above_broken_line, broken_line, extreme_point, polygon_qr, Location};
use crate::profile::{local_profile_unchecked, max_c4_given_degrees, profile_sums, triple_profile};
use crate::rational::{choose2, choose3, QPoint, Rat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyTally {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    /// Non-gating properties are reported but never fail the suite.
    pub gating: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub property: String,
    pub graph: GraphJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub graphs_tested: u64,
    pub properties: Vec<PropertyTally>,
    /// First failing graph in enumeration order.
    pub counterexample: Option<Counterexample>,
    /// False when the time limit stopped the walk early.
    pub complete: bool,
    pub wall_time_ms: u64,
}

impl SuiteReport {
    fn new(suite: String, names: &[(&str, bool)]) -> Self {
        SuiteReport {
            suite,
            graphs_tested: 0,
            properties: names
                .iter()
                .map(|&(name, gating)| PropertyTally {
                    name: name.to_string(),
                    passed: 0,
                    failed: 0,
                    gating,
                })
                .collect(),
            counterexample: None,
            complete: true,
            wall_time_ms: 0,
        }
    }

    /// Records the outcome of one graph; `failures` has bit `i` set when property `i` failed.
    fn record(&mut self, g: &Graph, failures: u32) {
        self.graphs_tested += 1;
        for (i, p) in self.properties.iter_mut().enumerate() {
            if failures >> i & 1 == 1 {
                p.failed += 1;
                if p.gating && self.counterexample.is_none() {
                    self.counterexample = Some(Counterexample {
                        property: p.name.clone(),
                        graph: g.to_json(),
                    });
                }
            } else {
                p.passed += 1;
            }
        }
    }

    /// Appends a later part of the same walk.
    fn merge(&mut self, other: SuiteReport) {
        self.graphs_tested += other.graphs_tested;
        for (p, q) in self.properties.iter_mut().zip(other.properties) {
            p.passed += q.passed;
            p.failed += q.failed;
        }
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self.complete &= other.complete;
    }

    pub fn passed(&self) -> bool {
        self.complete && self.counterexample.is_none() && self.properties.iter().all(|p| !p.gating || p.failed == 0)
    }

    /// Copy with the wall time cleared, for comparing runs.
    pub fn without_timing(&self) -> SuiteReport {
        SuiteReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite: {}\ngraphs tested: {}\n", self.suite, self.graphs_tested);
        for p in &self.properties {
            let tag = if p.gating { "" } else { " (informational)" };
            out.push_str(&format!("  {}{tag}: {} passed, {} failed\n", p.name, p.passed, p.failed));
        }
        if let Some(c) = &self.counterexample {
            out.push_str(&format!(
                "counterexample ({}): {}\n",
                c.property,
                serde_json::to_string(&c.graph).unwrap_or_default()
            ));
        }
        if !self.complete {
            out.push_str("stopped early: time limit reached\n");
        }
        out.push_str(&format!(
            "wall time: {} ms\nresult: {}\n",
            self.wall_time_ms,
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

const REGION_PROPERTIES: [(&str, bool); 8] = [
    ("density-point-in-region", true),
    ("vertex-points-under-top-segment", true),
    ("weighted-count-at-most-four-cycles", true),
    ("type-2-type-3-balance", true),
    ("weighted-points-above-broken-line", true),
    ("four-cycles-within-degree-bound", true),
    ("weighted-count-routes-agree", true),
    ("averaged-points-above-broken-line", false),
];

/// Integer form of the per-graph checks for a fixed degree `r`.
#[derive(Clone, Debug)]
pub struct RegionChecker {
    r: usize,
    /// Vertices of `Q^r` scaled by 24, which clears every denominator.
    hull24: Vec<(i128, i128)>,
    /// `c3 + c4` bound at a single vertex.
    top_bound: u64,
    /// Smallest weighted count allowed at a vertex with `c3` triangles, indexed by `c3`.
    min_ct: Vec<u64>,
    experimental: bool,
}

impl RegionChecker {
    pub fn new(r: usize) -> Result<Self> {
        let hull24 = polygon_qr(r)?
            .vertices
            .iter()
            .map(|v| {
                let x = &v.x * &Rat::int(24);
                let y = &v.y * &Rat::int(24);
                assert!(x.is_integer() && y.is_integer());
                (to_i128(&x), to_i128(&y))
            })
            .collect();
        let line = broken_line(r)?;
        let min_ct = (0..=choose2(r as u64))
            .map(|c3| {
                let x = Rat::new(c3, 3u64);
                let lower = interpolate(&line, &x) * Rat::int(4);
                let floor = lower.numer() / lower.denom();
                let mut v = Rat::from(floor.clone());
                if v < lower {
                    v = v + Rat::one();
                }
                to_i128(&v).max(0) as u64
            })
            .collect();
        Ok(RegionChecker {
            r,
            hull24,
            top_bound: (r as u64 - 1) * choose2(r as u64),
            min_ct,
            experimental: false,
        })
    }

    /// Also evaluate the averaged-point property (informational only).
    pub fn with_experimental(mut self, on: bool) -> Self {
        self.experimental = on;
        self
    }

    /// Locates `(s3 / 3n, s4 / 4n)` in `Q^r`.
    pub fn locate(&self, s3: u64, s4: u64, n: usize) -> Location {
        let p = (8 * s3 as i128, 6 * s4 as i128);
        let n = n as i128;
        let k = self.hull24.len();
        let (mut pos, mut neg, mut zero) = (false, false, false);
        for i in 0..k {
            let a = (self.hull24[i].0 * n, self.hull24[i].1 * n);
            let b = (self.hull24[(i + 1) % k].0 * n, self.hull24[(i + 1) % k].1 * n);
            let c = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            match c.signum() {
                1 => pos = true,
                -1 => neg = true,
                _ => zero = true,
            }
        }
        match (pos && neg, zero) {
            (true, _) => Location::Outside,
            (false, true) => Location::Boundary,
            (false, false) => Location::Interior,
        }
    }

    /// Bitmask of failed properties (indexed as in the report) for one graph.
    pub fn check(&self, g: &Graph) -> u32 {
        if g.regular_degree() != Some(self.r) || g.order() == 0 {
            return 1;
        }
        let mut fail = 0u32;
        let (mut s3, mut s4, mut sct, mut s42, mut s43) = (0, 0, 0, 0, 0);
        let mut locals = Vec::with_capacity(if self.experimental { g.order() } else { 0 });
        for x in 0..g.order() {
            let p = local_profile_unchecked(g, x);
            s3 += p.c3;
            s4 += p.c4;
            sct += p.ct;
            s42 += p.types.root_diagonal;
            s43 += p.types.opposite_diagonal;
            if p.c3 + p.c4 > self.top_bound {
                fail |= 1 << 1;
            }
            if p.ct < self.min_ct[p.c3 as usize] {
                fail |= 1 << 4;
            }
            match max_c4_given_degrees(self.r, &p.nbhd_degrees) {
                Ok(m) if p.c4 <= m => {}
                _ => fail |= 1 << 5,
            }
            if p.ct != p.types.both + 2 * p.types.root_diagonal {
                fail |= 1 << 6;
            }
            if self.experimental {
                locals.push((p.c3, p.c4));
            }
        }
        if !self.locate(s3, s4, g.order()).is_inside() {
            fail |= 1;
        }
        if sct > s4 {
            fail |= 1 << 2;
        }
        if s42 != s43 {
            fail |= 1 << 3;
        }
        if self.experimental && !averaged_points_ok(g, self.r, &locals) {
            fail |= 1 << 7;
        }
        fail
    }
}

fn to_i128(v: &Rat) -> i128 {
    i128::try_from(v.numer() / v.denom()).expect("value fits in i128")
}

fn interpolate(line: &[QPoint], x: &Rat) -> Rat {
    for w in line.windows(2) {
        if x >= &w[0].x && x <= &w[1].x {
            let t = (x - &w[0].x) / (&w[1].x - &w[0].x);
            return &w[0].y + &(t * (&w[1].y - &w[0].y));
        }
    }
    line.last().map(|p| p.y.clone()).unwrap_or_else(Rat::zero)
}

/// `P(G, x) / 2 + (1 / 2r) sum_{y ~ x} P(G, y)` lies on or above the broken line for every `x`.
fn averaged_points_ok(g: &Graph, r: usize, locals: &[(u64, u64)]) -> bool {
    (0..g.order()).all(|x| {
        let (mut a3, mut a4) = (r as u64 * locals[x].0, r as u64 * locals[x].1);
        for &y in g.neighbors(x) {
            a3 += locals[y as usize].0;
            a4 += locals[y as usize].1;
        }
        let scale = 2 * r as u64;
        let p = QPoint::new(Rat::new(a3, 3 * scale), Rat::new(a4, 4 * scale));
        above_broken_line(r, &p).unwrap_or(false)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionSuiteConfig {
    pub r: usize,
    pub n_max: usize,
    /// Worker threads; 1 runs on the calling thread, 0 uses every core.
    pub jobs: usize,
    pub time_limit: Option<Duration>,
    /// Evaluate the informational averaged-point property.
    pub experimental: bool,
}

impl RegionSuiteConfig {
    pub fn new(r: usize, n_max: usize) -> Self {
        RegionSuiteConfig {
            r,
            n_max,
            jobs: 1,
            time_limit: None,
            experimental: false,
        }
    }
}

fn region_report(label: String, experimental: bool) -> SuiteReport {
    let mut report = SuiteReport::new(label, &REGION_PROPERTIES);
    if !experimental {
        report.properties.pop();
    }
    report
}

/// Runs the per-graph checks on every labeled `r`-regular graph with
/// `r < n <= n_max`, then on the extreme graphs `C^r_1, ..., C^r_r`.
pub fn run_region_suite(config: &RegionSuiteConfig) -> Result<SuiteReport> {
    let r = config.r;
    if config.n_max > 64 {
        return Err(Error::InvalidParameters("exhaustive enumeration is limited to 64 vertices".into()));
    }
    let checker = RegionChecker::new(r)?.with_experimental(config.experimental);
    let label = format!("region r={r} n<={}", config.n_max);
    let start = Instant::now();
    let deadline = config.time_limit.map(|t| start + t);

    let mut tasks = Vec::new();
    for n in r + 1..=config.n_max {
        let spec = EnumSpec::labeled(r, n);
        for root in first_choices(&spec)? {
            tasks.push((spec, root));
        }
    }
    let run_task = |&(spec, root): &(EnumSpec, u64)| -> SuiteReport {
        let mut report = region_report(String::new(), config.experimental);
        if deadline.is_some_and(|d| Instant::now() > d) {
            report.complete = false;
            return report;
        }
        let mut seen = 0u64;
        let flow = for_each_in_subtree(&spec, root, |masks| {
            let g = Graph::from_bitmasks(masks);
            report.record(&g, checker.check(&g));
            seen += 1;
            if seen % 4096 == 0 && deadline.is_some_and(|d| Instant::now() > d) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .expect("validated spec");
        if flow.is_break() {
            report.complete = false;
        }
        report
    };

    let parts: Vec<SuiteReport> = if config.jobs == 1 {
        tasks.iter().map(run_task).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::InvalidParameters(e.to_string()))?;
        pool.install(|| tasks.par_iter().map(run_task).collect())
    };
    let mut report = region_report(label, config.experimental);
    for p in parts {
        report.merge(p);
    }

    let extreme = check_extreme_points(r)?;
    report.properties.push(extreme.clone());
    if extreme.failed > 0 && report.counterexample.is_none() {
        report.counterexample = Some(Counterexample {
            property: extreme.name,
            graph: GraphJson { n: 0, edges: Vec::new() },
        });
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// The weighted point equals the density point on `C^r_l` for `1 <= l <= r`.
fn check_extreme_points(r: usize) -> Result<PropertyTally> {
    let mut tally = PropertyTally {
        name: "extreme-weighted-equals-density".into(),
        passed: 0,
        failed: 0,
        gating: true,
    };
    for l in 1..=r {
        let e = extreme_graph_balanced(r, l, 0)?;
        let s = profile_sums(&e.graph);
        if s.ct == s.c4 && extreme_point(r, l)? == crate::profile::cycle_point(&e.graph)? {
            tally.passed += 1;
        } else {
            tally.failed += 1;
        }
    }
    Ok(tally)
}

/// Runs the per-graph checks on a given collection of `r`-regular graphs.
pub fn check_graphs<'a, I>(r: usize, label: &str, graphs: I) -> Result<SuiteReport>
where
    I: IntoIterator<Item = &'a Graph>,
{
    let checker = RegionChecker::new(r)?;
    let start = Instant::now();
    let mut report = region_report(label.to_string(), false);
    for g in graphs {
        report.record(g, checker.check(g) & 0x7f);
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

const BOLLOBAS_PROPERTIES: [(&str, bool); 5] = [
    ("triple-count-identity", true),
    ("weighted-triple-identity", true),
    ("reduction-identity", true),
    ("above-turan-line", true),
    ("complement-duality", true),
];

/// Complete `l`-partite graph on `v` vertices with balanced parts.
pub fn turan_graph(v: usize, l: usize) -> Result<Graph> {
    Ok(named::complete_multipartite(Partition::balanced(v, l)?.parts()))
}

/// `(e, n3)` of the Turán graph from the part sizes alone.
fn turan_point(v: usize, l: usize) -> (i64, i64) {
    let parts: Vec<i64> = (1..=l).map(|i| ((v + i - 1) / l) as i64).collect();
    let v = v as i64;
    let e = v * (v - 1) / 2 - parts.iter().map(|&p| p * (p - 1) / 2).sum::<i64>();
    let mut n3 = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for k in j + 1..parts.len() {
                n3 += parts[i] * parts[j] * parts[k];
            }
        }
    }
    (e, n3)
}

/// The broken line through the Turán points, for `v >= 1`.
pub fn turan_line(v: usize) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = (1..=v).map(|l| turan_point(v, l)).collect();
    pts.dedup();
    pts
}

/// Whether `(e, n3)` lies on or above the broken line.
fn above_line(line: &[(i64, i64)], e: i64, n3: i64) -> bool {
    if line.len() == 1 {
        return e == line[0].0 && n3 >= line[0].1;
    }
    line.windows(2).any(|w| {
        let ((ea, ta), (eb, tb)) = (w[0], w[1]);
        ea <= e && e <= eb && (n3 - ta) * (eb - ea) >= (tb - ta) * (e - ea)
    })
}

fn on_line(line: &[(i64, i64)], e: i64, n3: i64) -> bool {
    line.windows(2).any(|w| {
        let ((ea, ta), (eb, tb)) = (w[0], w[1]);
        ea <= e && e <= eb && (n3 - ta) * (eb - ea) == (tb - ta) * (e - ea)
    }) || line.contains(&(e, n3))
}

/// Exhaustive check over every graph on `1..=v_max` vertices.
pub fn run_bollobas_suite(v_max: usize, time_limit: Option<Duration>) -> Result<SuiteReport> {
    if !(1..=8).contains(&v_max) {
        return Err(Error::InvalidParameters(format!("v_max must be in 1..=8, got {v_max}")));
    }
    let start = Instant::now();
    let mut report = SuiteReport::new(format!("bollobas v<={v_max}"), &BOLLOBAS_PROPERTIES);
    let mut turan = PropertyTally {
        name: "turan-points-on-line".into(),
        passed: 0,
        failed: 0,
        gating: true,
    };
    'outer: for v in 1..=v_max {
        let line = turan_line(v);
        for l in 1..=v {
            let tp = triple_profile(&turan_graph(v, l)?);
            if on_line(&line, tp.e as i64, tp.n3 as i64) && (tp.e as i64, tp.n3 as i64) == turan_point(v, l) {
                turan.passed += 1;
            } else {
                turan.failed += 1;
            }
        }
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        let vv = v as u64;
        for bits in 0u64..1 << pairs.len() {
            if bits % 4096 == 0 && time_limit.is_some_and(|t| start.elapsed() > t) {
                report.complete = false;
                break 'outer;
            }
            let mut masks = vec![0u64; v];
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    masks[a] |= 1 << b;
                    masks[b] |= 1 << a;
                }
            }
            let g = Graph::from_bitmasks(&masks);
            let tp = triple_profile(&g);
            let mut fail = 0u32;
            if tp.total() != choose3(vv) {
                fail |= 1;
            }
            if tp.weighted() != vv.saturating_sub(2) * tp.e {
                fail |= 1 << 1;
            }
            let lhs = 2 * tp.n3 as i64 + tp.n2 as i64;
            let rhs = tp.n0 as i64 + (v as i64 - 2) * tp.e as i64 - choose3(vv) as i64;
            if lhs != rhs {
                fail |= 1 << 2;
            }
            if !above_line(&line, tp.e as i64, tp.n3 as i64) {
                fail |= 1 << 3;
            }
            let tc = triple_profile(&g.complement());
            if (tc.n0, tc.n1, tc.n2, tc.n3) != (tp.n3, tp.n2, tp.n1, tp.n0) {
                fail |= 1 << 4;
            }
            report.record(&g, fail);
        }
    }
    if turan.failed > 0 && report.counterexample.is_none() {
        report.counterexample = Some(Counterexample {
            property: turan.name.clone(),
            graph: GraphJson { n: 0, edges: Vec::new() },
        });
    }
    report.properties.push(turan);
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
