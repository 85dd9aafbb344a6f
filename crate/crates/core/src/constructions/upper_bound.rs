//! Horton clusters with blockers: a balanced colored set with few empty
//! rainbow triangles.
//!
//! Every point `p_i` of a `k`-point Horton set becomes a cluster of `m`
//! points of color `i + 1` inside the max-norm square of radius `eps_1`
//! around `p_i`. Some cluster points are blockers: a blocker `q` of cluster
//! `i` at layer `t` lies strictly inside every triangle `p_i' p_j' p_l'` with
//! `p_i'` within `eps_{t+1}` of `p_i` and `p_j'`, `p_l'` within `eps_1` of
//! their centers, for each pair `(j, l)` whose center triangle contains `q`.
//!
//! Radii are powers of two and directions are integer vectors scaled by
//! powers of two, so all coordinates are dyadic. Distances use the max-norm
//! (squares instead of disks) to keep every certificate rational.

use std::cmp::Ordering;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::ceil_log2;
use super::lower_bound::lower_bound_formula;
use crate::enumeration::{empty_rainbow_triangles, Budget};
use crate::error::Error;
use crate::geom::{self, orient, point_in_triangle_strict, Orientation, Point};
use crate::horton::{address_indices, address_of, empty_triangle_triples, generate_horton, triangle_layer, BinaryAddress};
use crate::point_set::{Color, ColoredPointSet};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockerKind {
    /// Placed in pairs, one layer per address step.
    Paired,
    /// Between consecutive points of a sibling subset, at layer `r`.
    Gap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Blocker {
    /// Index into the point set.
    pub point: usize,
    pub layer: usize,
    pub kind: BlockerKind,
    /// Center pairs `(j, l)` whose triangle with `p_i` this blocker must stay
    /// inside of.
    pub obligations: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterRoster {
    pub blockers: Vec<Blocker>,
    pub fillers: Vec<usize>,
}

impl ClusterRoster {
    pub fn paired(&self) -> impl Iterator<Item = &Blocker> {
        self.blockers.iter().filter(|b| b.kind == BlockerKind::Paired)
    }

    pub fn gap(&self) -> impl Iterator<Item = &Blocker> {
        self.blockers.iter().filter(|b| b.kind == BlockerKind::Gap)
    }

    pub fn len(&self) -> usize {
        self.blockers.len() + self.fillers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockerSchedule {
    /// `eps_1 > eps_2 > ... > eps_{r+1}`, stored from `eps_1`.
    pub epsilons: Vec<Scalar>,
    pub r: usize,
    pub centers: Vec<Point>,
    pub clusters: Vec<ClusterRoster>,
}

impl BlockerSchedule {
    pub fn epsilon(&self, t: usize) -> &Scalar {
        &self.epsilons[t - 1]
    }

    /// Checks every blocking obligation with exact corner tests; returns the
    /// number of (blocker, pair) obligations certified.
    pub fn verify_blocking(&self, set: &ColoredPointSet) -> Result<usize, Error> {
        let e1 = self.epsilon(1);
        let mut checked = 0;
        for (i, roster) in self.clusters.iter().enumerate() {
            for b in &roster.blockers {
                let ei = self.epsilon(b.layer + 1);
                for &[j, l] in &b.obligations {
                    if !blocks(set.point(b.point), &self.centers[i], ei, &self.centers[j], &self.centers[l], e1)? {
                        return Err(Error::Construction(format!(
                            "blocker {} of cluster {i} misses triangle ({i}, {j}, {l})",
                            b.point
                        )));
                    }
                    checked += 1;
                }
            }
        }
        Ok(checked)
    }

    /// Radius bookkeeping: every cluster point within `eps_1` of its center,
    /// layer-`t` blockers in `[eps_{t+1}, eps_t)`, fillers within
    /// `eps_{r+1}`, and class sizes `m`.
    pub fn check_radii(&self, set: &ColoredPointSet) -> Result<(), Error> {
        let dist = |p: usize, c: &Point| {
            let (dx, dy) = set.point(p).sub(c);
            dx.abs().max(dy.abs())
        };
        let fail = |what: String| Err(Error::Construction(what));
        for (i, roster) in self.clusters.iter().enumerate() {
            let c = &self.centers[i];
            for b in &roster.blockers {
                let d = dist(b.point, c);
                if d < *self.epsilon(b.layer + 1) || d >= *self.epsilon(b.layer) {
                    return fail(format!("blocker {} outside its band", b.point));
                }
            }
            for &f in &roster.fillers {
                if dist(f, c) > *self.epsilon(self.r + 1) {
                    return fail(format!("filler {f} too far from its center"));
                }
            }
            for p in roster.blockers.iter().map(|b| b.point).chain(roster.fillers.iter().copied()) {
                if set.color(p) != Color(i as u32 + 1) {
                    return fail(format!("point {p} has the wrong color"));
                }
            }
        }
        Ok(())
    }
}

fn corners(p: &Point, half: &Scalar) -> Vec<Point> {
    if half.is_zero() {
        return vec![p.clone()];
    }
    let neg = -half;
    let mut out = Vec::with_capacity(4);
    for dx in [&neg, half] {
        for dy in [&neg, half] {
            out.push(p.offset(dx, dy));
        }
    }
    out
}

/// `q` strictly inside every triangle with corners in the three squares.
/// Each side test is affine in each corner separately, so the square
/// vertices decide it.
fn blocks(q: &Point, ci: &Point, ei: &Scalar, cj: &Point, cl: &Point, e1: &Scalar) -> Result<bool, Error> {
    let (a, b, c) = (corners(ci, ei), corners(cj, e1), corners(cl, e1));
    for x in &a {
        for y in &b {
            for z in &c {
                if orient(x, y, z) == Orientation::Collinear || !point_in_triangle_strict(q, x, y, z)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

type V = (i128, i128);

fn cr(a: V, b: V) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

fn linf(a: V) -> i128 {
    a.0.abs().max(a.1.abs())
}

fn perp(a: V) -> V {
    (-a.1, a.0)
}

/// Compares directions `a`, `b` by counterclockwise angle measured from `u`
/// (in `(0, 2 pi)`; none of them is parallel to `u`).
fn cmp_from(u: V, a: V, b: V) -> Ordering {
    let half = |v: V| if cr(u, v) > 0 { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cr(a, b)))
}

/// `weight_a * a / |a| + weight_b * b / |b|`, scaled to integers.
fn blend(a: V, wa: i128, b: V, wb: i128) -> V {
    let (la, lb) = (linf(a), linf(b));
    (wa * a.0 * lb + wb * b.0 * la, wa * a.1 * lb + wb * b.1 * la)
}

struct Cluster<'a> {
    i: usize,
    dirs: &'a [V],
}

impl Cluster<'_> {
    fn others(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dirs.len()).filter(move |&j| j != self.i)
    }

    /// The center following `j` counterclockwise around `p_i`.
    fn next(&self, j: usize) -> usize {
        let u = self.dirs[j];
        self.others()
            .filter(|&x| x != j)
            .min_by(|&a, &b| cmp_from(u, self.dirs[a], self.dirs[b]))
            .unwrap_or(j)
    }

    /// The center preceding `j` counterclockwise around `p_i`.
    fn prev(&self, j: usize) -> usize {
        let u = self.dirs[j];
        self.others()
            .filter(|&x| x != j)
            .max_by(|&a, &b| cmp_from(u, self.dirs[a], self.dirs[b]))
            .unwrap_or(j)
    }

    /// Sibling points in angular order, if they fit in an open half-plane
    /// around `p_i`.
    fn angular(&self, sibling: &[usize]) -> Option<Vec<usize>> {
        let first = *sibling
            .iter()
            .find(|&&f| sibling.iter().all(|&x| x == f || cr(self.dirs[f], self.dirs[x]) > 0))?;
        let mut out = sibling.to_vec();
        out.sort_by(|&a, &b| cmp_from(self.dirs[first], self.dirs[a], self.dirs[b]).then(a.cmp(&b)));
        // `first` compares as the full turn against itself; move it forward.
        out.retain(|&x| x != first);
        out.insert(0, first);
        Some(out)
    }

    /// Direction just after `f` counterclockwise.
    fn just_after(&self, f: usize) -> V {
        let u = self.dirs[f];
        let nx = self.dirs[self.next(f)];
        if self.next(f) != f && cr(u, nx) > 0 {
            blend(u, 2, nx, 1)
        } else {
            (8 * u.0 + perp(u).0, 8 * u.1 + perp(u).1)
        }
    }

    /// Direction just before `l` counterclockwise.
    fn just_before(&self, l: usize) -> V {
        let u = self.dirs[l];
        let pv = self.dirs[self.prev(l)];
        if self.prev(l) != l && cr(pv, u) > 0 {
            blend(u, 2, pv, 1)
        } else {
            (8 * u.0 - perp(u).0, 8 * u.1 - perp(u).1)
        }
    }
}

/// `p + rho * w / 2^g` with `rho = 3/4 * 2^-a` and `2^g >= |w|`: the point
/// sits at max-norm distance in `(3/8, 3/4] * 2^-a`.
fn along(p: &Point, w: V, a: u32) -> Point {
    let mut g = 0u32;
    while (1i128 << g) < linf(w) {
        g += 1;
    }
    let e = a + 2 + g;
    p.offset(&Scalar::dyadic(3 * w.0, e), &Scalar::dyadic(3 * w.1, e))
}

struct Pending {
    point: Point,
    layer: usize,
    kind: BlockerKind,
    obligations: Vec<[usize; 2]>,
}

/// `384 k^2 min(m, k + 2 ceil(log2 k))`.
pub fn upper_bound_value(k: usize, m: usize) -> u128 {
    let cap = k + 2 * ceil_log2(k);
    384 * (k * k) as u128 * m.min(cap) as u128
}

/// Builds the clustered set; colors are `1..=k`, cluster `i` has color
/// `i + 1`, and points are stored cluster by cluster.
pub fn build_upper_bound_set(k: usize, m: usize) -> Result<(ColoredPointSet, BlockerSchedule), Error> {
    if k < 3 || m < 1 {
        return Err(Error::InvalidParameter(format!("need k >= 3 and m >= 1, got k = {k}, m = {m}")));
    }
    let h = generate_horton(k)?;
    let centers = h.points().to_vec();
    let ints: Vec<V> = centers
        .iter()
        .enumerate()
        .map(|(i, p)| match (p.x.is_integer(), p.x.numer().to_i64(), p.y.numer().to_i64()) {
            (true, Some(x), Some(y)) if p.y.is_integer() => Ok((x as i128, y as i128)),
            _ => Err(Error::CoordinateOverflow(i)),
        })
        .collect::<Result<_, _>>()?;

    let mut a1 = initial_exponent(&centers);
    while !orientations_stable(&centers, &Scalar::dyadic(1, a1))? {
        a1 += 1;
    }
    for _ in 0..64 {
        if let Some(done) = try_schedule(k, m, &centers, &ints, a1)? {
            return Ok(done);
        }
        a1 += 1;
    }
    Err(Error::Construction("no radius schedule found".into()))
}

/// Smallest `a >= 2` with `2^-a <= D / 4`, `D` a lower bound on the distance
/// from any center to a line through two others.
fn initial_exponent(centers: &[Point]) -> u32 {
    let n = centers.len();
    let mut d: Option<Scalar> = None;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || b == c || a == c || a > b {
                    continue;
                }
                let (dx, dy) = centers[b].sub(&centers[a]);
                let (ux, uy) = centers[c].sub(&centers[a]);
                let det = (&dx * &uy - &dy * &ux).abs();
                let len = dx.abs().max(dy.abs());
                let cand = &det / &(&len * &Scalar::from(2i64));
                if d.as_ref().is_none_or(|cur| cand < *cur) {
                    d = Some(cand);
                }
            }
        }
    }
    let quarter = d.map(|d| &d / &Scalar::from(4i64)).unwrap_or_else(Scalar::one);
    let mut a = 2;
    while Scalar::dyadic(1, a) > quarter {
        a += 1;
    }
    a
}

/// Orientation of every center triple is constant when each center moves
/// within its square of radius `e`.
fn orientations_stable(centers: &[Point], e: &Scalar) -> Result<bool, Error> {
    let sq: Vec<Vec<Point>> = centers.iter().map(|c| corners(c, e)).collect();
    let n = centers.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let o = orient(&centers[a], &centers[b], &centers[c]);
                for x in &sq[a] {
                    for y in &sq[b] {
                        for z in &sq[c] {
                            if orient(x, y, z) != o {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

fn try_schedule(
    k: usize,
    m: usize,
    centers: &[Point],
    ints: &[V],
    a1: u32,
) -> Result<Option<(ColoredPointSet, BlockerSchedule)>, Error> {
    let r = (ceil_log2(k) + 2).min(m.div_ceil(2));
    let e1 = Scalar::dyadic(1, a1);
    let mut exps = vec![a1];
    let mut pending: Vec<Vec<Pending>> = (0..k).map(|_| Vec::new()).collect();

    let chains: Vec<BinaryAddress> = (0..k).map(|i| address_of(k, i)).collect();
    let dirs: Vec<Vec<V>> =
        (0..k).map(|i| ints.iter().map(|&p| (p.0 - ints[i].0, p.1 - ints[i].1)).collect()).collect();

    for t in 1..=r {
        let a_t = exps[t - 1];
        for i in 0..k {
            let cl = Cluster { i, dirs: &dirs[i] };
            let chain = &chains[i];
            let sibling = |step: usize| -> Result<Vec<usize>, Error> {
                let mut bits = chain.0[..step].to_vec();
                bits.push(!chain.0[step]);
                address_indices(k, &BinaryAddress(bits))
            };
            let paired = pending[i].iter().filter(|p| p.kind == BlockerKind::Paired).count();
            let step = t - 1;
            // Pairs for steps 0..=r'-2 while at most m - 2 points are placed.
            if step + 2 <= chain.len() && paired + 2 <= m {
                if let Some(order) = cl.angular(&sibling(step)?) {
                    let (f, l) = (order[0], *order.last().unwrap());
                    for w in [cl.just_after(f), cl.just_before(l)] {
                        pending[i].push(Pending {
                            point: along(&centers[i], w, a_t),
                            layer: t,
                            kind: BlockerKind::Paired,
                            obligations: Vec::new(),
                        });
                    }
                }
            }
            let paired = pending[i].iter().filter(|p| p.kind == BlockerKind::Paired).count();
            // Gap blockers for steps 0..=r'-1, at the last layer.
            if t == r && m - paired >= k {
                for step in 0..chain.len() {
                    let Some(order) = cl.angular(&sibling(step)?) else { continue };
                    for w in order.windows(2) {
                        let v = blend(dirs[i][w[0]], 1, dirs[i][w[1]], 1);
                        pending[i].push(Pending {
                            point: along(&centers[i], v, a_t),
                            layer: t,
                            kind: BlockerKind::Gap,
                            obligations: Vec::new(),
                        });
                    }
                }
            }
        }
        // Obligations of the new layer, then the next radius.
        for i in 0..k {
            for p in pending[i].iter_mut().filter(|p| p.layer == t) {
                p.obligations = obligations_of(&p.point, i, centers)?;
                for &[j, l] in &p.obligations {
                    if !blocks(&p.point, &centers[i], &Scalar::zero(), &centers[j], &centers[l], &e1)? {
                        return Ok(None);
                    }
                }
            }
        }
        let mut a_next = a_t + 2;
        loop {
            let en = Scalar::dyadic(1, a_next);
            let mut ok = true;
            'outer: for i in 0..k {
                for p in pending[i].iter().filter(|p| p.layer == t) {
                    for &[j, l] in &p.obligations {
                        if !blocks(&p.point, &centers[i], &en, &centers[j], &centers[l], &e1)? {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if ok {
                break;
            }
            a_next += 1;
            if a_next > a_t + 96 {
                return Ok(None);
            }
        }
        exps.push(a_next);
    }

    // Fillers within eps_{r+1}: the center itself, then a small parabola.
    let a_last = exps[r];
    let mut points: Vec<Point> = Vec::with_capacity(k * m);
    let mut colors = Vec::with_capacity(k * m);
    let mut rosters = Vec::with_capacity(k);
    for i in 0..k {
        let mut roster = ClusterRoster { blockers: Vec::new(), fillers: Vec::new() };
        for p in pending[i].drain(..) {
            roster.blockers.push(Blocker { point: points.len(), layer: p.layer, kind: p.kind, obligations: p.obligations });
            points.push(p.point);
            colors.push(Color(i as u32 + 1));
        }
        let f = m - roster.blockers.len();
        let spread = ((f.max(2) - 1) * (f.max(2) - 1)) as u128;
        let mut g = 1u32;
        while (1u128 << g) < 2 * spread {
            g += 1;
        }
        for j in 0..f as i64 {
            let e = a_last + g;
            roster.fillers.push(points.len());
            points.push(centers[i].offset(&Scalar::dyadic(j, e), &Scalar::dyadic(j * j, e)));
            colors.push(Color(i as u32 + 1));
        }
        rosters.push(roster);
    }

    nudge_into_general_position(&mut points, &rosters, exps[r] + 40)?;

    let set = ColoredPointSet::new_balanced(points, colors, k, m)?;
    let schedule = BlockerSchedule {
        epsilons: exps.iter().map(|&a| Scalar::dyadic(1, a)).collect(),
        r,
        centers: centers.to_vec(),
        clusters: rosters,
    };
    if schedule.check_radii(&set).is_err() || schedule.verify_blocking(&set).is_err() {
        return Ok(None);
    }
    Ok(Some((set, schedule)))
}

fn obligations_of(q: &Point, i: usize, centers: &[Point]) -> Result<Vec<[usize; 2]>, Error> {
    let mut out = Vec::new();
    for j in 0..centers.len() {
        for l in j + 1..centers.len() {
            if j != i && l != i && point_in_triangle_strict(q, &centers[i], &centers[j], &centers[l])? {
                out.push([j, l]);
            }
        }
    }
    Ok(out)
}

/// Shifts offending non-center points by tiny dyadic steps until no three
/// points are collinear and all x differ.
fn nudge_into_general_position(points: &mut [Point], rosters: &[ClusterRoster], exp: u32) -> Result<(), Error> {
    let centers: Vec<usize> = rosters.iter().filter_map(|r| r.fillers.first().copied()).collect();
    for attempt in 1..=1000i64 {
        let bad = match geom::general_position_violation(points) {
            None => return Ok(()),
            Some(Error::Collinear(a, b, c)) => vec![a, b, c],
            Some(Error::DuplicateX(a, b)) => vec![a, b],
            Some(e) => return Err(e),
        };
        let Some(&p) = bad.iter().rev().find(|p| !centers.contains(p)) else {
            return Err(Error::Construction("centers are not in general position".into()));
        };
        // Alternate between two non-parallel directions.
        let (dx, dy) = if attempt % 2 == 1 { (1, 3) } else { (3, -1) };
        points[p] = points[p].offset(&Scalar::dyadic(dx * attempt, exp), &Scalar::dyadic(dy * attempt, exp));
    }
    Err(Error::Construction("could not reach general position".into()))
}

/// Per-layer accounting of the empty rainbow triangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerRow {
    pub layer: usize,
    /// Empty triangles of the Horton set at this layer.
    pub horton_triangles: usize,
    /// Whether `horton_triangles <= 8 k^2 / 2^(layer - 1)`.
    pub horton_within: bool,
    /// Largest number of rainbow triangles one Horton triangle of this layer
    /// may lift to.
    pub multiplicity: u128,
    pub rainbow_triangles: usize,
    /// Whether `rainbow_triangles <= horton_triangles * multiplicity`.
    pub within: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBoundReport {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub count: usize,
    pub lower_bound: u128,
    pub bound: u128,
    pub pass: bool,
    pub blocking_checks: usize,
    pub layers: Vec<LayerRow>,
}

fn multiplicity(k: usize, m: usize, layer: usize) -> u128 {
    let s = layer as u128 - 1;
    let t = layer as u128;
    let m = m as u128;
    let cap = (k + 2 * ceil_log2(k)) as u128;
    if m <= 2 * s + 1 {
        m * m * m
    } else if m < cap {
        4 * t * t * m
    } else {
        4 * t * t * cap
    }
}

/// Builds the set for `(k, m)`, counts its empty rainbow triangles and checks
/// `lower_bound_formula(k, m) <= count <= 384 k^2 min(m, k + 2 ceil(log2 k))`.
pub fn verify_theorem1_upper(k: usize, m: usize, budget: &Budget) -> Result<UpperBoundReport, Error> {
    let (set, schedule) = build_upper_bound_set(k, m)?;
    let blocking_checks = schedule.verify_blocking(&set)?;
    let rainbow = empty_rainbow_triangles(&set, budget)?;
    let h = generate_horton(k)?;
    let horton = empty_triangle_triples(&h);

    let depth = horton.iter().map(|&t| triangle_layer(t)).max().unwrap_or(0);
    let mut layers: Vec<LayerRow> = (1..=depth)
        .map(|layer| LayerRow {
            layer,
            horton_triangles: 0,
            horton_within: true,
            multiplicity: multiplicity(k, m, layer),
            rainbow_triangles: 0,
            within: true,
        })
        .collect();
    for &t in &horton {
        layers[triangle_layer(t) - 1].horton_triangles += 1;
    }
    for w in &rainbow {
        let mut t = [0usize; 3];
        for (slot, &v) in t.iter_mut().zip(&w.vertices) {
            *slot = set.color(v).index();
        }
        t.sort();
        let layer = triangle_layer(t);
        if layer > layers.len() {
            return Err(Error::Construction(format!("rainbow triangle over non-empty center triangle {t:?}")));
        }
        layers[layer - 1].rainbow_triangles += 1;
    }
    for row in &mut layers {
        row.horton_within = (row.horton_triangles as u128) << (row.layer - 1) <= 8 * (k * k) as u128;
        row.within = row.rainbow_triangles as u128 <= row.horton_triangles as u128 * row.multiplicity;
    }

    let lower_bound = lower_bound_formula(k, m)?;
    let bound = upper_bound_value(k, m);
    let count = rainbow.len();
    Ok(UpperBoundReport {
        k,
        m,
        n: set.len(),
        count,
        lower_bound,
        bound,
        pass: lower_bound <= count as u128 && count as u128 <= bound,
        blocking_checks,
        layers,
    })
}
