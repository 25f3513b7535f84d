//! Explicit `r`-regular graphs with a prescribed rational density point.
//!
//! A rational target inside `Q^r` is written as a convex combination of at
//! most three polygon vertices (fan triangulation from the origin vertex,
//! first containing triangle wins). Each vertex is the density point of an
//! extreme graph, and a disjoint union with suitable copy counts has the
//! weighted average of their points as its own density point.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::extreme::extreme_graph_balanced;
use crate::graph::Graph;
use crate::polytope::{extreme_points, polygon_qr, Location};
use crate::profile::cycle_point;
use crate::rational::{QPoint, Rat};
use crate::{Error, Result};

/// Largest realized graph [`Blueprint::assemble`] will build.
pub const MAX_ASSEMBLED_ORDER: u64 = 50_000_000;

/// Disjoint union of copies of `g1` and `g2` whose density point is
/// `q P(g1) + (1 - q) P(g2)`, for rational `0 < q < 1`.
pub fn combine_pair(q: &Rat, g1: &Graph, g2: &Graph) -> Result<Graph> {
    if !q.is_positive() || q >= &Rat::one() {
        return Err(Error::InvalidParameters(format!("q = {q} must lie strictly between 0 and 1")));
    }
    let r1 = g1.require_regular()?;
    let r2 = g2.require_regular()?;
    if r1 != r2 {
        return Err(Error::DegreeMismatch(r1, r2));
    }
    let a = q.numer().to_usize().expect("small numerator");
    let b = q.denom().to_usize().expect("small denominator");
    Ok(Graph::disjoint_union([(g1, a * g2.order()), (g2, (b - a) * g1.order())]))
}

/// Generator graphs keyed by `(r, l, seed)`.
#[derive(Default)]
pub struct ComponentCache {
    graphs: RwLock<HashMap<(usize, usize, u64), Arc<Graph>>>,
}

impl ComponentCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, r: usize, l: usize, seed: u64) -> Result<Arc<Graph>> {
        if let Some(g) = self.graphs.read().unwrap().get(&(r, l, seed)) {
            return Ok(Arc::clone(g));
        }
        let built = Arc::new(extreme_graph_balanced(r, l, seed)?.graph);
        let mut map = self.graphs.write().unwrap();
        Ok(Arc::clone(map.entry((r, l, seed)).or_insert(built)))
    }
}

pub fn component_label(r: usize, l: usize) -> String {
    match l {
        0 => format!("K_{{{r},{r}}}"),
        1 => format!("K_{{{}}}", r + 1),
        _ => format!("C^{r}_{l}"),
    }
}

#[derive(Clone, Debug)]
pub struct Component {
    pub l: usize,
    pub label: String,
    pub graph: Arc<Graph>,
    pub point: QPoint,
    pub weight: Rat,
    pub copies: BigUint,
}

#[derive(Clone, Debug)]
pub struct Blueprint {
    pub r: usize,
    pub target: QPoint,
    pub components: Vec<Component>,
    pub total_order: BigUint,
}

/// Serialized form of a [`Blueprint`] (component graphs are described, not embedded).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlueprintJson {
    pub r: usize,
    pub target: QPoint,
    pub total_order: String,
    pub components: Vec<ComponentJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub l: usize,
    pub label: String,
    pub order: usize,
    pub copies: String,
    pub weight: Rat,
    pub point: QPoint,
}

impl Blueprint {
    pub fn to_json(&self) -> BlueprintJson {
        BlueprintJson {
            r: self.r,
            target: self.target.clone(),
            total_order: self.total_order.to_string(),
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    l: c.l,
                    label: c.label.clone(),
                    order: c.graph.order(),
                    copies: c.copies.to_string(),
                    weight: c.weight.clone(),
                    point: c.point.clone(),
                })
                .collect(),
        }
    }

    /// Weighted average of the component points; equals the target by construction.
    pub fn combined_point(&self) -> QPoint {
        let mut x = Rat::zero();
        let mut y = Rat::zero();
        for c in &self.components {
            x = x + &c.weight * &c.point.x;
            y = y + &c.weight * &c.point.y;
        }
        QPoint::new(x, y)
    }

    /// The realized graph: all copies of all components, in component order.
    pub fn assemble(&self) -> Result<Graph> {
        match self.total_order.to_u64() {
            Some(n) if n <= MAX_ASSEMBLED_ORDER => {}
            _ => {
                return Err(Error::InvalidParameters(format!(
                    "realized graph would have {} vertices (limit {MAX_ASSEMBLED_ORDER})",
                    self.total_order
                )))
            }
        }
        let parts: Vec<(&Graph, usize)> = self
            .components
            .iter()
            .map(|c| (c.graph.as_ref(), c.copies.to_usize().expect("bounded by total order")))
            .collect();
        Ok(Graph::disjoint_union(parts))
    }
}

/// Barycentric coordinates of `p` in triangle `abc` (non-degenerate).
fn barycentric(a: &QPoint, b: &QPoint, c: &QPoint, p: &QPoint) -> [Rat; 3] {
    let ab = b - a;
    let ac = c - a;
    let ap = p - a;
    let det = &ab.x * &ac.y - &ab.y * &ac.x;
    let s = (&ap.x * &ac.y - &ap.y * &ac.x) / &det;
    let t = (&ab.x * &ap.y - &ab.y * &ap.x) / &det;
    let u = Rat::one() - &s - &t;
    [u, s, t]
}

/// Decomposes `target` into extreme-graph components with exact weights and copy counts.
pub fn realize(r: usize, target: &QPoint, seed: u64, cache: &ComponentCache) -> Result<Blueprint> {
    let q = polygon_qr(r)?;
    if q.contains(target) == Location::Outside {
        return Err(Error::PointOutsideRegion(target.to_string()));
    }
    let points = extreme_points(r)?;
    let label_of = |v: &QPoint| points.iter().position(|p| p == v).expect("hull vertex is an extreme point");

    let vs = &q.vertices;
    let mut picked: Option<Vec<(usize, Rat)>> = None;
    for i in 1..vs.len() - 1 {
        let w = barycentric(&vs[0], &vs[i], &vs[i + 1], target);
        if w.iter().all(|x| !x.is_negative()) {
            picked = Some(vec![
                (label_of(&vs[0]), w[0].clone()),
                (label_of(&vs[i]), w[1].clone()),
                (label_of(&vs[i + 1]), w[2].clone()),
            ]);
            break;
        }
    }
    let weights = picked.expect("a point of a convex polygon lies in some fan triangle");

    let mut components = Vec::new();
    let mut total = BigInt::one();
    let mut denominators = BigInt::one();
    let mut orders = BigInt::one();
    for (l, w) in weights.into_iter().filter(|(_, w)| !w.is_zero()) {
        let graph = cache.get(r, l, seed)?;
        let n_i = BigInt::from(graph.order());
        // N * p / (q * n) must be an integer.
        let need = w.denom() * &n_i / w.numer().gcd(&n_i);
        total = total.lcm(&need);
        denominators = denominators.lcm(w.denom());
        orders = orders.lcm(&n_i);
        components.push(Component {
            l,
            label: component_label(r, l),
            point: points[l].clone(),
            graph,
            weight: w,
            copies: BigUint::zero(),
        });
    }
    assert!(total <= &denominators * &orders, "total order exceeds documented bound");
    for c in &mut components {
        let copies = &total * c.weight.numer() / (c.weight.denom() * BigInt::from(c.graph.order()));
        c.copies = copies.to_biguint().expect("non-negative copy count");
    }
    let blueprint = Blueprint {
        r,
        target: target.clone(),
        components,
        total_order: total.to_biguint().expect("positive order"),
    };
    debug_assert_eq!(&blueprint.combined_point(), target);
    Ok(blueprint)
}

/// Realizes `target`, builds the graph, and confirms its density point by recounting.
pub fn realize_graph(r: usize, target: &QPoint, seed: u64, cache: &ComponentCache) -> Result<(Blueprint, Graph)> {
    let blueprint = realize(r, target, seed, cache)?;
    let graph = blueprint.assemble()?;
    let recount = cycle_point(&graph)?;
    if &recount != target {
        return Err(Error::ConstructionFailed(format!(
            "realized graph has density point {recount}, expected {target}"
        )));
    }
    Ok((blueprint, graph))
}
