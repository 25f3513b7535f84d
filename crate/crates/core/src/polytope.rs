//! Exact planar geometry of the density region.
//!
//! `P^r_l` is the density point of the extreme graph `C^r_l` (with `C^r_0 =
//! K_{r,r}`), and `Q^r` is the convex hull of `P^r_0, ..., P^r_r`. Its upper
//! boundary is the segment `P^r_0 P^r_1`; its lower boundary is the broken
//! line `P^r_1 P^r_2 ... P^r_r`, which is flat (`y = 0`) from `P^r_{ceil(r/2)}`
//! to `P^r_r = (0, 0)`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::extreme::closed_form_counts;
use crate::hypergraph::Partition;
use crate::rational::{choose2, QPoint, Rat};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

impl Location {
    pub fn is_inside(self) -> bool {
        self != Location::Outside
    }
}

fn require_r(r: usize) -> Result<()> {
    if r < 3 {
        return Err(Error::InvalidParameters(format!("region needs r >= 3, got {r}")));
    }
    Ok(())
}

/// `P^r_l`: the density point of `C^r_l`; `l = 0` is `K_{r,r}`.
pub fn extreme_point(r: usize, l: usize) -> Result<QPoint> {
    require_r(r)?;
    if l > r {
        return Err(Error::InvalidParameters(format!("need 0 <= l <= r, got r={r}, l={l}")));
    }
    let (c3, c4) = if l == 0 {
        // Each vertex of K_{r,r}: C(r,2) neighbor pairs, each with r - 1 further common neighbors.
        (0, (r as u64 - 1) * choose2(r as u64))
    } else {
        closed_form_counts(&Partition::balanced(r, l)?)
    };
    Ok(QPoint::new(Rat::new(c3, 3u64), Rat::new(c4, 4u64)))
}

/// `(b - a) x (c - a)`.
fn cross(a: &QPoint, b: &QPoint, c: &QPoint) -> Rat {
    let ab = b - a;
    let ac = c - a;
    &ab.x * &ac.y - &ab.y * &ac.x
}

/// A convex polygon with vertices in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polygon {
    pub vertices: Vec<QPoint>,
}

impl Polygon {
    /// Convex hull by monotone chain; collinear and repeated points are dropped.
    /// The first vertex is the lowest of the leftmost points.
    pub fn convex_hull(points: &[QPoint]) -> Polygon {
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.x.cmp(&b.x).then_with(|| a.y.cmp(&b.y)));
        pts.dedup();
        if pts.len() <= 2 {
            return Polygon { vertices: pts };
        }
        let mut lower: Vec<QPoint> = Vec::new();
        for p in &pts {
            while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<QPoint> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Polygon { vertices: lower }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive vertex pairs, closing back to the first.
    pub fn edges(&self) -> impl Iterator<Item = (&QPoint, &QPoint)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Exact point location by edge cross products.
    pub fn contains(&self, p: &QPoint) -> Location {
        match self.vertices.len() {
            0 => return Location::Outside,
            1 => {
                return if &self.vertices[0] == p {
                    Location::Boundary
                } else {
                    Location::Outside
                }
            }
            _ => {}
        }
        let mut on_edge = false;
        for (a, b) in self.edges() {
            match cross(a, b, p).signum() {
                Ordering::Less => return Location::Outside,
                Ordering::Equal => on_edge = true,
                Ordering::Greater => {}
            }
        }
        if self.vertices.len() == 2 {
            // Degenerate segment: on the line, check the span.
            let (a, b) = (&self.vertices[0], &self.vertices[1]);
            let within = |t: &Rat, u: &Rat, v: &Rat| (t >= u.min(v)) && (t <= u.max(v));
            return if within(&p.x, &a.x, &b.x) && within(&p.y, &a.y, &b.y) {
                Location::Boundary
            } else {
                Location::Outside
            };
        }
        if on_edge {
            Location::Boundary
        } else {
            Location::Interior
        }
    }

    /// Image under `(x, y) -> (sx * x, sy * y + ty)` with `sx, sy > 0`.
    pub fn map_affine(&self, sx: &Rat, sy: &Rat, ty: &Rat) -> Polygon {
        Polygon {
            vertices: self
                .vertices
                .iter()
                .map(|v| QPoint::new(&v.x * sx, &v.y * sy + ty))
                .collect(),
        }
    }

    /// True when no three consecutive vertices are collinear and all turns are left.
    pub fn is_strictly_convex(&self) -> bool {
        let n = self.vertices.len();
        n >= 3
            && (0..n).all(|i| {
                cross(&self.vertices[i], &self.vertices[(i + 1) % n], &self.vertices[(i + 2) % n]).is_positive()
            })
    }
}

/// All points `P^r_0, ..., P^r_r`.
pub fn extreme_points(r: usize) -> Result<Vec<QPoint>> {
    (0..=r).map(|l| extreme_point(r, l)).collect()
}

/// `Q^r = conv{P^r_0, ..., P^r_r}`. Its corners are among `P^r_0, ..., P^r_{ceil(r/2)}, P^r_r`;
/// for `r >= 12` some of these are collinear with their neighbors and are dropped.
pub fn polygon_qr(r: usize) -> Result<Polygon> {
    Ok(Polygon::convex_hull(&extreme_points(r)?))
}

/// Largest triangle density of an `r`-regular graph, `r(r-1)/6`.
pub fn max_triangle_density(r: usize) -> Rat {
    Rat::new((r * (r - 1)) as u64, 6u64)
}

/// Linear interpolation of the polyline `pts` (sorted by `x`) at `x`.
fn interpolate(pts: &[QPoint], x: &Rat) -> Option<Rat> {
    for w in pts.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if x >= &a.x && x <= &b.x {
            if a.x == b.x {
                return Some(a.y.clone().min(b.y.clone()));
            }
            let t = (x - &a.x) / (&b.x - &a.x);
            return Some(&a.y + &(t * (&b.y - &a.y)));
        }
    }
    (pts.len() == 1 && &pts[0].x == x).then(|| pts[0].y.clone())
}

/// The lower broken line `P^r_r, ..., P^r_1`, ordered by increasing `x`.
pub fn broken_line(r: usize) -> Result<Vec<QPoint>> {
    let mut pts: Vec<QPoint> = (1..=r).rev().map(|l| extreme_point(r, l)).collect::<Result<_>>()?;
    pts.dedup();
    Ok(pts)
}

/// Lower and upper boundary of `Q^r` above the abscissa `x`.
pub fn boundary_bounds(r: usize, x: &Rat) -> Result<(Rat, Rat)> {
    require_r(r)?;
    if x.is_negative() || x > &max_triangle_density(r) {
        return Err(Error::InvalidParameters(format!(
            "x = {x} outside [0, {}]",
            max_triangle_density(r)
        )));
    }
    let lower = interpolate(&broken_line(r)?, x).expect("x within the broken line span");
    let top = [extreme_point(r, 0)?, extreme_point(r, 1)?];
    let upper = interpolate(&top, x).expect("x within the top segment span");
    Ok((lower, upper))
}

/// Whether `p` lies on or under the line through `P^r_0` and `P^r_1`.
pub fn under_top_segment(r: usize, p: &QPoint) -> Result<bool> {
    let a = extreme_point(r, 0)?;
    let b = extreme_point(r, 1)?;
    Ok(!cross(&a, &b, p).is_positive())
}

/// Whether `p` lies on or above the broken line (for `0 <= p.x <= r(r-1)/6`).
pub fn above_broken_line(r: usize, p: &QPoint) -> Result<bool> {
    let lower = interpolate(&broken_line(r)?, &p.x)
        .ok_or_else(|| Error::InvalidParameters(format!("x = {} outside the broken line", p.x)))?;
    Ok(p.y >= lower)
}

/// Scaling `(x, y) -> (6x / r^2, 8y / r^3)` applied to `Q^r`.
pub fn scaled_polygon(r: usize) -> Result<Polygon> {
    let q = polygon_qr(r)?;
    let r = r as u64;
    Ok(q.map_affine(&Rat::new(6u64, r * r), &Rat::new(8u64, r * r * r), &Rat::zero()))
}

/// `Q^r` mapped to (third moment, fourth moment) of the eigenvalue distribution.
pub fn moment_region(r: usize) -> Result<Polygon> {
    let q = polygon_qr(r)?;
    let (sx, sy, ty) = moment_map(r);
    Ok(q.map_affine(&sx, &sy, &ty))
}

/// Coefficients `(6/r^3, 8/r^4, (2r-1)/r^3)` of the density-to-moment map.
pub(crate) fn moment_map(r: usize) -> (Rat, Rat, Rat) {
    let r = r as u64;
    let r3 = r * r * r;
    (Rat::new(6u64, r3), Rat::new(8u64, r3 * r), Rat::new(2 * r - 1, r3))
}

/// The limit of the scaled polygons: the convex hull of `(0,0)`, `(0,1)` and
/// the points `(1/k, 1/k^2)` for every positive integer `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LimitRegion {
    /// Number of curve points used when the region is drawn as a polygon.
    pub cutoff: u64,
}

impl Default for LimitRegion {
    fn default() -> Self {
        LimitRegion { cutoff: 64 }
    }
}

impl LimitRegion {
    /// Polygon through the first `cutoff` curve points.
    pub fn polygon(&self) -> Polygon {
        let mut pts = vec![QPoint::origin(), QPoint::frac(0, 1, 1, 1)];
        for k in 1..=self.cutoff.max(1) as i64 {
            pts.push(QPoint::frac(1, k, 1, k * k));
        }
        Polygon::convex_hull(&pts)
    }

    /// Lower boundary at `x` in `(0, 1]`: the chord between the curve points
    /// `1/(k+1)` and `1/k` with `k = floor(1/x)`.
    pub fn lower(x: &Rat) -> Rat {
        let inv = x.recip();
        let k = inv.numer() / inv.denom();
        let a = Rat::new(1, k.clone());
        let b = Rat::new(1, k + 1);
        (&a + &b) * x - &a * &b
    }

    /// Exact membership in the full (infinite-vertex) region.
    pub fn contains(&self, p: &QPoint) -> Location {
        let one = Rat::one();
        if p.x.is_negative() || p.x > one || p.y.is_negative() || p.y > one {
            return Location::Outside;
        }
        if p.x.is_zero() {
            return Location::Boundary;
        }
        let lower = Self::lower(&p.x);
        match p.y.cmp(&lower) {
            Ordering::Less => Location::Outside,
            Ordering::Equal => Location::Boundary,
            Ordering::Greater if p.y == one || p.x == one => Location::Boundary,
            Ordering::Greater => Location::Interior,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64, i64, i64)]) -> Vec<QPoint> {
        v.iter().map(|&(a, b, c, d)| QPoint::frac(a, b, c, d)).collect()
    }

    #[test]
    fn extreme_point_examples() {
        assert_eq!(extreme_point(3, 1).unwrap(), QPoint::frac(1, 1, 3, 4));
        assert_eq!(extreme_point(3, 2).unwrap(), QPoint::frac(1, 3, 0, 1));
        assert_eq!(extreme_point(3, 0).unwrap(), QPoint::frac(0, 1, 3, 2));
        for r in 3..10 {
            assert_eq!(extreme_point(r, r).unwrap(), QPoint::origin());
            let r64 = r as i64;
            assert_eq!(extreme_point(r, 0).unwrap(), QPoint::frac(0, 1, r64 * (r64 - 1) * (r64 - 1), 8));
        }
        assert!(extreme_point(2, 1).is_err());
        assert!(extreme_point(3, 4).is_err());
    }

    #[test]
    fn small_polygons() {
        assert_eq!(polygon_qr(3).unwrap().vertices, pts(&[(0, 1, 0, 1), (1, 3, 0, 1), (1, 1, 3, 4), (0, 1, 3, 2)]));
        assert_eq!(polygon_qr(4).unwrap().vertices, pts(&[(0, 1, 0, 1), (2, 3, 0, 1), (2, 1, 3, 1), (0, 1, 9, 2)]));
        // P^12_4, P^12_5, P^12_6 are collinear (slope 3/2), so P^12_5 is not a corner.
        let q12 = polygon_qr(12).unwrap();
        assert_eq!(q12.len(), 7);
        assert!(!q12.vertices.contains(&extreme_point(12, 5).unwrap()));
        assert_eq!(q12.contains(&extreme_point(12, 5).unwrap()), Location::Boundary);
    }

    #[test]
    fn containment_examples() {
        let q = polygon_qr(3).unwrap();
        assert_eq!(q.contains(&QPoint::frac(1, 2, 3, 4)), Location::Interior);
        assert_eq!(q.contains(&QPoint::frac(1, 1, 3, 4)), Location::Boundary);
        assert_eq!(q.contains(&QPoint::frac(2, 1, 0, 1)), Location::Outside);
        assert_eq!(q.contains(&QPoint::frac(1, 6, 0, 1)), Location::Boundary);
        assert_eq!(q.contains(&QPoint::frac(1, 6, -1, 100)), Location::Outside);
    }

    #[test]
    fn bounds_examples() {
        let b = |n, d| boundary_bounds(3, &Rat::new(n, d)).unwrap();
        assert_eq!(b(0, 1), (Rat::zero(), Rat::new(3, 2)));
        assert_eq!(b(1, 3), (Rat::zero(), Rat::new(5, 4)));
        assert_eq!(b(1, 1), (Rat::new(3, 4), Rat::new(3, 4)));
        assert!(boundary_bounds(3, &Rat::new(11, 10)).is_err());
        assert!(boundary_bounds(3, &Rat::new(-1, 10)).is_err());
    }

    #[test]
    fn scaled_and_limit() {
        let s = scaled_polygon(3).unwrap();
        assert!(s.vertices.contains(&QPoint::frac(2, 3, 2, 9)));
        let lim = LimitRegion::default();
        assert_eq!(lim.contains(&QPoint::frac(1, 2, 1, 4)), Location::Boundary);
        assert_eq!(lim.contains(&QPoint::frac(0, 1, 1, 1)), Location::Boundary);
        assert_eq!(lim.contains(&QPoint::frac(1, 1, 1, 1)), Location::Boundary);
        assert_eq!(lim.contains(&QPoint::frac(1, 2, 1, 2)), Location::Interior);
        // Below the chord between 1/3 and 1/2: at x = 2/5 the chord gives 5/6*2/5 - 1/6 = 1/6.
        assert_eq!(lim.contains(&QPoint::frac(2, 5, 1, 6)), Location::Boundary);
        assert_eq!(lim.contains(&QPoint::frac(2, 5, 1, 7)), Location::Outside);
        // Deep below the drawing cutoff, still exact.
        assert_eq!(lim.contains(&QPoint::frac(1, 1000, 1, 1_000_000)), Location::Boundary);
        assert_eq!(lim.contains(&QPoint::frac(1, 1000, 1, 2_000_000)), Location::Outside);
        assert!(lim.polygon().is_strictly_convex());
        assert_eq!(lim.polygon().len(), 66);
    }

    #[test]
    fn moment_region_vertices() {
        let m = moment_region(3).unwrap();
        assert_eq!(m.vertices[0], QPoint::frac(0, 1, 5, 27));
        assert!(m.vertices.contains(&QPoint::frac(2, 9, 7, 27)));
        assert!(m.vertices.contains(&QPoint::frac(0, 1, 1, 3)));
    }

    #[test]
    fn hull_drops_collinear() {
        let h = Polygon::convex_hull(&pts(&[(0, 1, 0, 1), (1, 1, 0, 1), (2, 1, 0, 1), (0, 1, 2, 1), (1, 1, 1, 1)]));
        assert_eq!(h.vertices, pts(&[(0, 1, 0, 1), (2, 1, 0, 1), (0, 1, 2, 1)]));
        assert!(h.is_strictly_convex());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn contains_agrees_with_bounds(r in 3usize..9, xn in 0i64..200, yn in -10i64..400, d in 1i64..40) {
                let q = polygon_qr(r).unwrap();
                let p = QPoint::new(Rat::new(xn, d), Rat::new(yn, d));
                let in_strip = !p.x.is_negative() && p.x <= max_triangle_density(r);
                let by_bounds = in_strip && {
                    let (lo, hi) = boundary_bounds(r, &p.x).unwrap();
                    lo <= p.y && p.y <= hi
                };
                prop_assert_eq!(q.contains(&p).is_inside(), by_bounds);
            }

            #[test]
            fn affine_maps_preserve_location(r in 3usize..9, xn in -5i64..200, yn in -10i64..400, d in 1i64..40) {
                let q = polygon_qr(r).unwrap();
                let m = moment_region(r).unwrap();
                let p = QPoint::new(Rat::new(xn, d), Rat::new(yn, d));
                let (sx, sy, ty) = moment_map(r);
                let image = QPoint::new(&p.x * &sx, &p.y * &sy + &ty);
                prop_assert_eq!(q.contains(&p), m.contains(&image));
            }

            #[test]
            fn scaled_points_converge(l in 1usize..6, r in 12usize..400) {
                prop_assume!(r >= 2 * l);
                let p = extreme_point(r, l).unwrap();
                let r64 = r as u64;
                let sx = &p.x * &Rat::new(6u64, r64 * r64);
                let sy = &p.y * &Rat::new(8u64, r64 * r64 * r64);
                let l64 = l as u64;
                prop_assert!((&sx - &Rat::new(1u64, l64)).abs() <= Rat::new(2 * l64, r64));
                prop_assert!((&sy - &Rat::new(1u64, l64 * l64)).abs() <= Rat::new(4 * l64, r64));
            }
        }
    }

    #[test]
    fn vertex_counts_and_membership() {
        // Corner counts of the strict hull, computed independently with Python fractions.
        let corners = [4, 4, 5, 5, 6, 6, 7, 7, 8, 7, 9, 8, 9, 9, 10, 9, 11, 10];
        for r in 3..=20usize {
            let q = polygon_qr(r).unwrap();
            assert_eq!(q.len(), corners[r - 3], "r = {r}");
            if r <= 11 {
                assert_eq!(q.len(), r.div_ceil(2) + 2, "r = {r}");
            }
            assert!(q.is_strictly_convex());
            let candidates: Vec<QPoint> = (0..=r.div_ceil(2))
                .chain([r])
                .map(|l| extreme_point(r, l).unwrap())
                .collect();
            for v in &q.vertices {
                assert!(candidates.contains(v));
            }
            // Candidates that are not corners sit exactly on the boundary.
            for c in &candidates {
                assert!(q.vertices.contains(c) || q.contains(c) == Location::Boundary);
            }
            for l in 0..=r {
                let p = extreme_point(r, l).unwrap();
                assert!(q.contains(&p).is_inside());
                if l >= r.div_ceil(2) {
                    assert!(p.y.is_zero());
                }
            }
        }
    }
}
