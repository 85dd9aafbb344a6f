//! A balanced `k`-colored set with no empty rainbow quadrilateral.
//!
//! Colors `1..k` sit in tight clusters at the vertices of a convex
//! `(k-1)`-gon `P`. A copy `P'` rotated by half a step interleaves with it.
//! The chord of `P'` cutting off vertex `p_i` carries color-`k` guards: for
//! every pair of angularly consecutive other vertices `q1, q2`, two guards lie
//! inside triangle `p_i q1 q2`, well away from its sides through `p_i`. Every
//! triangle on three clusters then contains guards near each of its corners,
//! so no rainbow quadrilateral can be empty.
//!
//! The regular polygon is replaced by integer points on a circle of radius
//! `2^20` (or larger); convexity and interleaving are checked exactly.

use std::collections::HashSet;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::enumeration::{empty_quadrilaterals, Budget, ColorFilter};
use crate::error::Error;
use crate::geom::{orient, point_in_triangle_strict, Orientation, Point};
use crate::point_set::{Color, ColoredPointSet, PolygonWitness};
use crate::scalar::Scalar;

/// A color-`k` point and the corner triangle it is placed in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guard {
    /// Index into the point set.
    pub point: usize,
    /// Polygon vertex `i` whose chord carries the guard.
    pub vertex: usize,
    /// Consecutive vertices `q1, q2` around `p_i`.
    pub between: [usize; 2],
}

#[derive(Clone, Debug)]
pub struct NoQuadConstruction {
    pub set: ColoredPointSet,
    pub k: usize,
    pub m: usize,
    /// Clusters lie within `epsilon / 2` (max-norm) of their polygon vertex;
    /// guards keep Euclidean distance at least `epsilon` from the lines they
    /// must stay clear of.
    pub epsilon: Scalar,
    pub polygon: Vec<Point>,
    pub rotated: Vec<Point>,
    pub guards: Vec<Guard>,
    /// `clusters[i]` lists the indices of color `i + 1`.
    pub clusters: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoQuadReport {
    pub n: usize,
    pub convex: usize,
    pub nonconvex: usize,
    pub pass: bool,
    pub counterexample: Option<PolygonWitness>,
}

pub fn class_size(k: usize) -> usize {
    2 * k * k - 8 * k + 6
}

type P2 = (i64, i64);

fn cross(o: P2, a: P2, b: P2) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Points placed so far; new points are shifted until their x is fresh and
/// they are collinear with no placed pair.
#[derive(Default)]
struct Placer {
    pts: Vec<P2>,
    xs: HashSet<i64>,
}

impl Placer {
    fn fits(&self, c: P2) -> bool {
        if self.xs.contains(&c.0) {
            return false;
        }
        let n = self.pts.len();
        (0..n).all(|a| (a + 1..n).all(|b| cross(self.pts[a], self.pts[b], c) != 0))
    }

    fn place(&mut self, c: P2) -> usize {
        let mut t = 0i64;
        let mut cand = c;
        while !self.fits(cand) {
            t += 1;
            cand = (c.0 + t, c.1 + (t * t) % 3);
        }
        self.xs.insert(cand.0);
        self.pts.push(cand);
        self.pts.len() - 1
    }
}

fn round_pt(x: f64, y: f64) -> P2 {
    (x.round() as i64, y.round() as i64)
}

fn to_point(p: P2) -> Point {
    Point::from_ints(p.0, p.1)
}

/// Builds the set for `k >= 4`, with exactly `2k^2 - 8k + 6` points per color.
pub fn build_no_rainbow_quad_set(k: usize) -> Result<NoQuadConstruction, Error> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("k = {k}, need k >= 4")));
    }
    let mut last = None;
    for exp in 20..40 {
        match build_at_radius(k, 1i64 << exp) {
            Ok(c) => return Ok(c),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap())
}

fn build_at_radius(k: usize, radius: i64) -> Result<NoQuadConstruction, Error> {
    let n = k - 1;
    let m = class_size(k);
    let r = radius as f64;
    // A small phase keeps vertices off symmetric positions.
    let phase = 0.1;
    let vertex = |i: usize, half: f64| {
        let a = phase + 2.0 * PI * (i as f64 + half) / n as f64;
        round_pt(r * a.cos(), r * a.sin())
    };
    let mut placer = Placer::default();
    let centers: Vec<usize> = (0..n).map(|i| placer.place(vertex(i, 0.0))).collect();
    let poly: Vec<P2> = centers.iter().map(|&c| placer.pts[c]).collect();
    let rot: Vec<P2> = (0..n).map(|i| vertex(i, 0.5)).collect();

    let mut ring = Vec::with_capacity(2 * n);
    for i in 0..n {
        ring.push(poly[i]);
        ring.push(rot[i]);
    }
    for i in 0..ring.len() {
        let (a, b, c) = (ring[i], ring[(i + 1) % ring.len()], ring[(i + 2) % ring.len()]);
        if cross(a, b, c) <= 0 {
            return Err(Error::Construction("polygons are not convex and interleaved".into()));
        }
    }

    // Guards on the chord p'_{i-1} p'_i.
    let mut guards: Vec<(P2, usize, [usize; 2])> = Vec::new();
    for i in 0..n {
        let c0 = rot[(i + n - 1) % n];
        let c1 = rot[i];
        let p = poly[i];
        let (ex, ey) = ((c1.0 - c0.0) as f64, (c1.1 - c0.1) as f64);
        let hit = |q: P2| {
            let (dx, dy) = ((q.0 - p.0) as f64, (q.1 - p.1) as f64);
            let (wx, wy) = ((p.0 - c0.0) as f64, (p.1 - c0.1) as f64);
            (wx * dy - wy * dx) / (ex * dy - ey * dx)
        };
        let others: Vec<usize> = (1..n).map(|d| (i + d) % n).collect();
        for w in others.windows(2) {
            let (s1, s2) = (hit(poly[w[0]]), hit(poly[w[1]]));
            for frac in [1.0 / 3.0, 2.0 / 3.0] {
                let s = s1 + (s2 - s1) * frac;
                guards.push((round_pt(c0.0 as f64 + s * ex, c0.1 as f64 + s * ey), i, [w[0], w[1]]));
            }
        }
    }

    // epsilon: a power of two below every guard's distance to its two lines.
    let mut min_d = f64::INFINITY;
    for &(g, i, pair) in &guards {
        for q in pair {
            let (a, b) = (poly[i], poly[q]);
            let len = (((b.0 - a.0) as f64).powi(2) + ((b.1 - a.1) as f64).powi(2)).sqrt();
            min_d = min_d.min(cross(a, b, g).abs() as f64 / len);
        }
    }
    let mut eps_exp = min_d.log2().floor() as i32;
    while eps_exp > 0 && !guards_clear(&poly, &guards, 1i64 << eps_exp) {
        eps_exp -= 1;
    }
    let eps = 1i64 << eps_exp.max(0);
    let half = eps / 2;
    let spread = (m as i64 - 1) * (m as i64 - 1);
    if spread + 16 > half {
        return Err(Error::Construction(format!("epsilon {eps} too small for {m} points per cluster")));
    }

    let mut guard_list = Vec::new();
    for &(g, i, pair) in &guards {
        let idx = placer.place(g);
        guard_list.push(Guard { point: idx, vertex: i, between: pair });
    }
    let mut clusters: Vec<Vec<usize>> = centers.iter().map(|&c| vec![c]).collect();
    for (i, cl) in clusters.iter_mut().enumerate() {
        let p = poly[i];
        for j in 1..m as i64 {
            let idx = placer.place((p.0 + j, p.1 + j * j));
            let q = placer.pts[idx];
            if (q.0 - p.0).abs() > half || (q.1 - p.1).abs() > half {
                return Err(Error::Construction("cluster point left its square".into()));
            }
            cl.push(idx);
        }
    }

    let total = placer.pts.len();
    let mut colors = vec![Color(k as u32); total];
    for (i, cl) in clusters.iter().enumerate() {
        for &p in cl {
            colors[p] = Color(i as u32 + 1);
        }
    }
    let points: Vec<Point> = placer.pts.iter().map(|&p| to_point(p)).collect();
    let set = ColoredPointSet::new_balanced(points, colors, k, m)?;
    set.require_general_position()?;
    let construction = NoQuadConstruction {
        set,
        k,
        m,
        epsilon: Scalar::from(eps),
        polygon: poly.iter().map(|&p| to_point(p)).collect(),
        rotated: rot.iter().map(|&p| to_point(p)).collect(),
        guards: guard_list,
        clusters,
    };
    construction.check_guards()?;
    Ok(construction)
}

fn guards_clear(poly: &[P2], guards: &[(P2, usize, [usize; 2])], eps: i64) -> bool {
    guards.iter().all(|&(g, i, pair)| {
        pair.iter().all(|&q| {
            let (a, b) = (poly[i], poly[q]);
            let det = cross(a, b, g);
            let len2 = (b.0 - a.0) as i128 * (b.0 - a.0) as i128 + (b.1 - a.1) as i128 * (b.1 - a.1) as i128;
            let e = eps as i128;
            // det^2 >= eps^2 |ab|^2, in checked arithmetic.
            match (det.checked_mul(det), len2.checked_mul(e * e)) {
                (Some(l), Some(r)) => l >= r,
                _ => false,
            }
        })
    })
}

fn square_corners(p: &Point, half: &Scalar) -> Vec<Point> {
    let mut out = Vec::with_capacity(4);
    for sx in [-1i64, 1] {
        for sy in [-1i64, 1] {
            out.push(p.offset(&(half * &Scalar::from(sx)), &(half * &Scalar::from(sy))));
        }
    }
    out
}

impl NoQuadConstruction {
    /// Exact certificate for the guard placement.
    ///
    /// 1. For each vertex `p_i` and consecutive `q1, q2`, at least two guards
    ///    lie strictly inside `p_i q1 q2`, each at distance `>= epsilon` from
    ///    lines `p_i q1` and `p_i q2`.
    /// 2. For each vertex and each pair `{j, l}` of other vertices, at least
    ///    two guards of that vertex lie strictly inside every triangle whose
    ///    corners range over the clusters' bounding squares. Strict
    ///    containment is an orientation condition that is affine in each
    ///    corner separately, so checking square corners is enough.
    pub fn check_guards(&self) -> Result<(), Error> {
        let n = self.k - 1;
        let pts = self.set.points();
        let eps2 = &self.epsilon * &self.epsilon;
        for i in 0..n {
            for w in 0..n.saturating_sub(2) {
                let q1 = (i + 1 + w) % n;
                let q2 = (i + 2 + w) % n;
                let (p, a, b) = (&self.polygon[i], &self.polygon[q1], &self.polygon[q2]);
                let mut good = 0;
                for g in self.guards.iter().filter(|g| g.vertex == i) {
                    let x = &pts[g.point];
                    if !point_in_triangle_strict(x, p, a, b)? {
                        continue;
                    }
                    let far = [a, b].iter().all(|q| {
                        let (dx, dy) = q.sub(p);
                        let (ux, uy) = x.sub(p);
                        let det = &dx * &uy - &dy * &ux;
                        &det * &det >= &eps2 * &(&dx * &dx + &dy * &dy)
                    });
                    if far {
                        good += 1;
                    }
                }
                if good < 2 {
                    return Err(Error::Construction(format!(
                        "vertex {i} between {q1} and {q2} has {good} clear guards"
                    )));
                }
            }
        }
        let half = &self.epsilon / &Scalar::from(2i64);
        let squares: Vec<Vec<Point>> = self.polygon.iter().map(|p| square_corners(p, &half)).collect();
        for i in 0..n {
            for j in 0..n {
                for l in j + 1..n {
                    if j == i || l == i {
                        continue;
                    }
                    let mut robust = 0;
                    for g in self.guards.iter().filter(|g| g.vertex == i) {
                        let x = &pts[g.point];
                        let mut inside = true;
                        'corners: for a in &squares[i] {
                            for b in &squares[j] {
                                for c in &squares[l] {
                                    if orient(a, b, c) == Orientation::Collinear
                                        || !point_in_triangle_strict(x, a, b, c)?
                                    {
                                        inside = false;
                                        break 'corners;
                                    }
                                }
                            }
                        }
                        if inside {
                            robust += 1;
                        }
                    }
                    if robust < 2 {
                        return Err(Error::Construction(format!(
                            "triangle on clusters {i}, {j}, {l} has {robust} robust guards at {i}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Enumerates empty rainbow quadrilaterals. Passes iff no convex one exists;
/// simple non-convex ones are counted alongside.
pub fn verify_no_empty_rainbow_quad(set: &ColoredPointSet, budget: &Budget) -> Result<NoQuadReport, Error> {
    let q = empty_quadrilaterals(set, ColorFilter::Rainbow, budget)?;
    Ok(NoQuadReport {
        n: set.len(),
        convex: q.convex.len(),
        nonconvex: q.nonconvex.len(),
        pass: q.convex.is_empty(),
        counterexample: q.convex.first().cloned(),
    })
}
