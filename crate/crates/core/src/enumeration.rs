//! Enumeration of empty triangles, empty quadrilaterals and r-holes.
//!
//! Two independent routes exist for triangles and quadrilaterals:
//!
//! * the naive scans test every subset against every other point;
//! * the optimized path counts, for every x-sorted pair `(a, b)`, the points
//!   strictly between them in x that lie below segment `ab`. The number of
//!   points inside a triangle is then a signed sum of three such counts, so
//!   all empty triangles come out in O(n^3). Empty quadrilaterals are glued
//!   from two empty triangles sharing a diagonal.
//!
//! All lists are returned sorted, so outputs are reproducible regardless of
//! thread scheduling.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::frame::{x_order, Frame, Kernel};
use crate::point_set::{ColoredPointSet, PolygonWitness};
use crate::with_kernel;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Upper limit on the (estimated) number of elementary predicate calls one
/// enumeration may spend. The estimate is made before any work starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_predicates: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_predicates: DEFAULT_BUDGET }
    }
}

impl Budget {
    pub fn new(max_predicates: u64) -> Self {
        Budget { max_predicates }
    }

    pub fn unlimited() -> Self {
        Budget { max_predicates: u64::MAX }
    }

    pub fn charge(&self, required: u128) -> Result<(), Error> {
        if required > self.max_predicates as u128 {
            Err(Error::BudgetExceeded { required, budget: self.max_predicates })
        } else {
            Ok(())
        }
    }
}

pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorFilter {
    Any,
    Rainbow,
    Mono,
}

impl ColorFilter {
    pub fn accepts(self, set: &ColoredPointSet, vertices: &[usize]) -> bool {
        match self {
            ColorFilter::Any => true,
            ColorFilter::Rainbow => set.is_rainbow(vertices),
            ColorFilter::Mono => set.is_monochromatic(vertices),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Triangle,
    Quad,
}

/// Counts for one colored point set; `witnesses` holds the polygons of one
/// selected (shape, filter) combination when requested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub empty_triangles: usize,
    pub empty_rainbow_triangles: usize,
    pub empty_monochromatic_triangles: usize,
    pub empty_rainbow_quadrilaterals: usize,
    /// Simple but non-convex empty rainbow 4-gons, reported separately.
    pub empty_rainbow_nonconvex_quadrilaterals: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<PolygonWitness>>,
}

fn check_input(set: &ColoredPointSet, budget: &Budget, work: u128) -> Result<(), Error> {
    let n = set.len();
    budget.charge(binomial(n, 3).saturating_add(work))?;
    set.require_general_position()
}

fn witness(set: &ColoredPointSet, vertices: Vec<usize>, convex: bool) -> PolygonWitness {
    let rainbow = set.is_rainbow(&vertices);
    PolygonWitness { vertices, convex, empty: true, rainbow }
}

// ---------------------------------------------------------------------------
// Triangles
// ---------------------------------------------------------------------------

/// Every empty triangle, by testing each triple against every other point.
pub fn empty_triangles_naive(set: &ColoredPointSet, budget: &Budget) -> Result<Vec<PolygonWitness>, Error> {
    let n = set.len();
    check_input(set, budget, binomial(n, 3) * n.saturating_sub(3) as u128)?;
    let frame = Frame::new(set.points());
    let triples = with_kernel!(&frame, k => naive_triangles(k));
    Ok(triples.into_iter().map(|t| witness(set, t.to_vec(), true)).collect())
}

fn naive_triangles<K: Kernel>(k: &K) -> Vec<[usize; 3]> {
    let n = k.len();
    let mut out: Vec<[usize; 3]> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut row = Vec::new();
            for b in a + 1..n {
                for c in b + 1..n {
                    if (0..n).all(|p| p == a || p == b || p == c || !k.in_triangle(p, a, b, c)) {
                        row.push([a, b, c]);
                    }
                }
            }
            row
        })
        .collect();
    out.sort();
    out
}

/// Empty triangles through the below-count table; `keep` prunes triples by
/// color before any geometry is evaluated.
pub fn empty_triangles_filtered(
    set: &ColoredPointSet,
    filter: ColorFilter,
    budget: &Budget,
) -> Result<Vec<PolygonWitness>, Error> {
    let n = set.len() as u128;
    check_input(set, budget, n * n * n / 6 + binomial(set.len(), 3))?;
    let frame = Frame::new(set.points());
    let triples = with_kernel!(&frame, k => fast_triangles(k, |t| filter.accepts(set, &t)));
    Ok(triples.into_iter().map(|t| witness(set, t.to_vec(), true)).collect())
}

pub fn empty_triangles(set: &ColoredPointSet, budget: &Budget) -> Result<Vec<PolygonWitness>, Error> {
    empty_triangles_filtered(set, ColorFilter::Any, budget)
}

pub fn empty_rainbow_triangles(set: &ColoredPointSet, budget: &Budget) -> Result<Vec<PolygonWitness>, Error> {
    empty_triangles_filtered(set, ColorFilter::Rainbow, budget)
}

pub fn empty_monochromatic_triangles(
    set: &ColoredPointSet,
    budget: &Budget,
) -> Result<Vec<PolygonWitness>, Error> {
    empty_triangles_filtered(set, ColorFilter::Mono, budget)
}

/// `below[a * n + b]` (ranks `a < b` in x order) is the number of points with
/// x strictly between ranks a and b lying strictly below segment `ab`.
struct BelowTable {
    order: Vec<usize>,
    n: usize,
    below: Vec<u32>,
}

impl BelowTable {
    fn build<K: Kernel>(k: &K) -> Self {
        let order = x_order(k);
        let n = order.len();
        let below: Vec<u32> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| {
                let order = &order;
                let mut row = vec![0u32; n];
                for b in a + 2..n {
                    let (pa, pb) = (order[a], order[b]);
                    row[b] = (a + 1..b).filter(|&c| k.orient(pa, pb, order[c]) < 0).count() as u32;
                }
                row
            })
            .collect();
        BelowTable { order, n, below }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> i64 {
        self.below[a * self.n + b] as i64
    }

    /// Number of points strictly inside the triangle with x-ranks `a < b < c`.
    #[inline]
    fn inside<K: Kernel>(&self, k: &K, a: usize, b: usize, c: usize) -> i64 {
        let (pa, pb, pc) = (self.order[a], self.order[b], self.order[c]);
        if k.orient(pa, pc, pb) > 0 {
            self.get(a, b) + self.get(b, c) - self.get(a, c)
        } else {
            self.get(a, c) - 1 - self.get(a, b) - self.get(b, c)
        }
    }
}

fn fast_triangles<K: Kernel>(k: &K, keep: impl Fn([usize; 3]) -> bool + Sync) -> Vec<[usize; 3]> {
    let table = BelowTable::build(k);
    let n = table.n;
    let mut out: Vec<[usize; 3]> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let table = &table;
            let keep = &keep;
            let mut row = Vec::new();
            for b in a + 1..n {
                for c in b + 1..n {
                    let mut t = [table.order[a], table.order[b], table.order[c]];
                    t.sort();
                    if keep(t) && table.inside(k, a, b, c) == 0 {
                        row.push(t);
                    }
                }
            }
            row
        })
        .collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Quadrilaterals
// ---------------------------------------------------------------------------

/// Empty 4-gons split by convexity. Convex ones are the quadrilateral holes;
/// the non-convex (but simple) ones are kept apart so both readings of
/// "quadrilateral" can be inspected.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuadrilateralEnumeration {
    pub convex: Vec<PolygonWitness>,
    pub nonconvex: Vec<PolygonWitness>,
}

fn rotate_to_min(cycle: [usize; 4]) -> Vec<usize> {
    let start = (0..4).min_by_key(|&i| cycle[i]).unwrap();
    (0..4).map(|d| cycle[(start + d) % 4]).collect()
}

/// Empty quadrilaterals by gluing pairs of empty triangles along a shared
/// edge. Both triangles of an empty convex quadrilateral are empty for either
/// diagonal, and a simple non-convex 4-gon has exactly one interior diagonal,
/// so each polygon is produced once after canonicalization.
pub fn empty_quadrilaterals(
    set: &ColoredPointSet,
    filter: ColorFilter,
    budget: &Budget,
) -> Result<QuadrilateralEnumeration, Error> {
    let n = set.len() as u128;
    // Triangle table plus a generous allowance for the pairing stage.
    check_input(set, budget, n * n * n / 6 + binomial(set.len(), 3) + n * n * n)?;
    let frame = Frame::new(set.points());
    let (convex, nonconvex) = with_kernel!(&frame, k => glue_quadrilaterals(k, set, filter));
    Ok(QuadrilateralEnumeration {
        convex: convex.into_iter().map(|c| witness(set, c, true)).collect(),
        nonconvex: nonconvex.into_iter().map(|c| witness(set, c, false)).collect(),
    })
}

fn glue_quadrilaterals<K: Kernel>(
    k: &K,
    set: &ColoredPointSet,
    filter: ColorFilter,
) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    // Sub-triangles of a rainbow (monochromatic) quadrilateral are rainbow
    // (monochromatic) themselves, so the triangle stage can prune by color.
    let triangles = fast_triangles(k, |t| filter.accepts(set, &t));
    let mut by_edge: HashMap<(usize, usize), (Vec<usize>, Vec<usize>)> = HashMap::new();
    for t in &triangles {
        for (u, v, w) in [(t[0], t[1], t[2]), (t[0], t[2], t[1]), (t[1], t[2], t[0])] {
            let entry = by_edge.entry((u, v)).or_default();
            if k.orient(u, v, w) > 0 {
                entry.0.push(w);
            } else {
                entry.1.push(w);
            }
        }
    }
    let mut edges: Vec<_> = by_edge.into_iter().collect();
    edges.sort_by_key(|(e, _)| *e);
    let (mut convex, mut nonconvex): (Vec<Vec<usize>>, Vec<Vec<usize>>) = edges
        .par_iter()
        .map(|&((u, v), (ref left, ref right))| {
            let mut cx = Vec::new();
            let mut ncx = Vec::new();
            for &x in left {
                for &y in right {
                    if !filter.accepts(set, &[u, v, x, y]) {
                        continue;
                    }
                    // u -> y -> v -> x is counterclockwise.
                    let cycle = rotate_to_min([u, y, v, x]);
                    if k.orient(x, y, u) != k.orient(x, y, v) {
                        if u.min(v) < x.min(y) {
                            cx.push(cycle);
                        }
                    } else {
                        ncx.push(cycle);
                    }
                }
            }
            (cx, ncx)
        })
        .reduce(
            || (Vec::new(), Vec::new()),
            |mut a, b| {
                a.0.extend(b.0);
                a.1.extend(b.1);
                a
            },
        );
    convex.sort();
    nonconvex.sort();
    (convex, nonconvex)
}

/// Empty convex rainbow quadrilaterals (the paired-triangle path).
pub fn empty_rainbow_quadrilaterals(
    set: &ColoredPointSet,
    budget: &Budget,
) -> Result<Vec<PolygonWitness>, Error> {
    Ok(empty_quadrilaterals(set, ColorFilter::Rainbow, budget)?.convex)
}

/// Counterclockwise cycle of four points in convex position, if they are.
fn convex_cycle<K: Kernel>(k: &K, q: [usize; 4]) -> Option<[usize; 4]> {
    for cycle in [[q[0], q[1], q[2], q[3]], [q[0], q[1], q[3], q[2]], [q[0], q[2], q[1], q[3]]] {
        let turns: Vec<i8> = (0..4).map(|i| k.orient(cycle[i], cycle[(i + 1) % 4], cycle[(i + 2) % 4])).collect();
        if turns.iter().all(|&t| t == 1) {
            return Some(cycle);
        }
        if turns.iter().all(|&t| t == -1) {
            return Some([cycle[0], cycle[3], cycle[2], cycle[1]]);
        }
    }
    None
}

/// Every empty convex quadrilateral, by scanning all 4-subsets.
pub fn empty_quadrilaterals_naive(
    set: &ColoredPointSet,
    filter: ColorFilter,
    budget: &Budget,
) -> Result<Vec<PolygonWitness>, Error> {
    let n = set.len();
    check_input(set, budget, binomial(n, 4) * n.saturating_sub(4) as u128)?;
    let frame = Frame::new(set.points());
    let cycles = with_kernel!(&frame, k => {
        let mut out: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| {
                let mut row = Vec::new();
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            let q = [a, b, c, d];
                            if !filter.accepts(set, &q) {
                                continue;
                            }
                            let Some(cyc) = convex_cycle(k, q) else { continue };
                            let empty = (0..n).filter(|p| !q.contains(p)).all(|p| {
                                (0..4).any(|e| k.orient(cyc[e], cyc[(e + 1) % 4], p) < 0)
                            });
                            if empty {
                                row.push(rotate_to_min(cyc));
                            }
                        }
                    }
                }
                row
            })
            .collect();
        out.sort();
        out
    });
    Ok(cycles.into_iter().map(|c| witness(set, c, true)).collect())
}

/// Every empty simple non-convex 4-gon, by scanning all 4-subsets and the
/// three polygons each non-convex subset spans.
pub fn empty_nonconvex_quadrilaterals_naive(
    set: &ColoredPointSet,
    filter: ColorFilter,
    budget: &Budget,
) -> Result<Vec<PolygonWitness>, Error> {
    let n = set.len();
    check_input(set, budget, 3 * binomial(n, 4) * n.saturating_sub(4) as u128)?;
    let frame = Frame::new(set.points());
    let cycles = with_kernel!(&frame, k => {
        let empty_tri = |a: usize, b: usize, c: usize| {
            (0..n).all(|p| p == a || p == b || p == c || !k.in_triangle(p, a, b, c))
        };
        let mut out: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| {
                let mut row = Vec::new();
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            let q = [a, b, c, d];
                            if !filter.accepts(set, &q) {
                                continue;
                            }
                            // Find the point inside the triangle of the other three.
                            let Some(ri) = (0..4).find(|&i| {
                                let o: Vec<usize> = (0..4).filter(|&j| j != i).map(|j| q[j]).collect();
                                k.in_triangle(q[i], o[0], o[1], o[2])
                            }) else {
                                continue;
                            };
                            let reflex = q[ri];
                            let outer: Vec<usize> = (0..4).filter(|&j| j != ri).map(|j| q[j]).collect();
                            for oi in 0..3 {
                                let opp = outer[oi];
                                let (p1, p2) = (outer[(oi + 1) % 3], outer[(oi + 2) % 3]);
                                if empty_tri(reflex, opp, p1) && empty_tri(reflex, opp, p2) {
                                    // reflex, p, opp, q' in counterclockwise order.
                                    let cyc = if k.orient(reflex, p1, opp) > 0 {
                                        [reflex, p1, opp, p2]
                                    } else {
                                        [reflex, p2, opp, p1]
                                    };
                                    row.push(rotate_to_min(cyc));
                                }
                            }
                        }
                    }
                }
                row
            })
            .collect();
        out.sort();
        out
    });
    Ok(cycles.into_iter().map(|c| witness(set, c, false)).collect())
}

// ---------------------------------------------------------------------------
// r-holes
// ---------------------------------------------------------------------------

/// Whether some `r` points are in convex position with no point of the set
/// strictly inside their hull. Exhaustive over `r`-subsets.
pub fn has_r_hole(set: &ColoredPointSet, r: usize, budget: &Budget) -> Result<bool, Error> {
    if !(3..=7).contains(&r) {
        return Err(Error::InvalidParameter(format!("r = {r} is outside 3..=7")));
    }
    let n = set.len();
    check_input(set, budget, binomial(n, r) * (n as u128 + (r * r) as u128))?;
    if n < r {
        return Ok(false);
    }
    let frame = Frame::new(set.points());
    Ok(with_kernel!(&frame, k => {
        let order = x_order(k);
        (0..n).into_par_iter().any(|first| {
            let mut chosen = vec![first];
            search_hole(k, &order, r, &mut chosen)
        })
    }))
}

/// `chosen` holds x-ranks in increasing order.
fn search_hole<K: Kernel>(k: &K, order: &[usize], r: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == r {
        let pts: Vec<usize> = chosen.iter().map(|&c| order[c]).collect();
        return is_hole(k, &pts);
    }
    let last = *chosen.last().unwrap();
    for next in last + 1..order.len() {
        if order.len() - next < r - chosen.len() {
            break;
        }
        chosen.push(next);
        let found = search_hole(k, order, r, chosen);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// `pts` are sorted by x.
fn is_hole<K: Kernel>(k: &K, pts: &[usize]) -> bool {
    let hull = hull_x_sorted(k, pts);
    if hull.len() != pts.len() {
        return false;
    }
    (0..k.len()).filter(|p| !pts.contains(p)).all(|p| {
        (0..hull.len()).any(|e| k.orient(hull[e], hull[(e + 1) % hull.len()], p) < 0)
    })
}

/// Counterclockwise hull of x-sorted points (monotone chain).
fn hull_x_sorted<K: Kernel>(k: &K, pts: &[usize]) -> Vec<usize> {
    let mut lower: Vec<usize> = Vec::new();
    for &c in pts {
        while lower.len() >= 2 && k.orient(lower[lower.len() - 2], lower[lower.len() - 1], c) <= 0 {
            lower.pop();
        }
        lower.push(c);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &c in pts.iter().rev() {
        while upper.len() >= 2 && k.orient(upper[upper.len() - 2], upper[upper.len() - 1], c) <= 0 {
            upper.pop();
        }
        upper.push(c);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Which witness list to attach to a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessQuery {
    pub shape: Shape,
    pub filter: ColorFilter,
}

pub fn report(
    set: &ColoredPointSet,
    budget: &Budget,
    query: Option<WitnessQuery>,
) -> Result<EnumerationReport, Error> {
    let triangles = empty_triangles(set, budget)?;
    let rainbow = triangles.iter().filter(|t| t.rainbow).count();
    let mono = triangles.iter().filter(|t| set.is_monochromatic(&t.vertices)).count();
    let quads = empty_quadrilaterals(set, ColorFilter::Rainbow, budget)?;
    let witnesses = match query {
        None => None,
        Some(WitnessQuery { shape: Shape::Triangle, filter }) => {
            Some(triangles.iter().filter(|t| filter.accepts(set, &t.vertices)).cloned().collect())
        }
        Some(WitnessQuery { shape: Shape::Quad, filter: ColorFilter::Rainbow }) => Some(quads.convex.clone()),
        Some(WitnessQuery { shape: Shape::Quad, filter }) => Some(empty_quadrilaterals(set, filter, budget)?.convex),
    };
    Ok(EnumerationReport {
        n: set.len(),
        empty_triangles: triangles.len(),
        empty_rainbow_triangles: rainbow,
        empty_monochromatic_triangles: mono,
        empty_rainbow_quadrilaterals: quads.convex.len(),
        empty_rainbow_nonconvex_quadrilaterals: quads.nonconvex.len(),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::point_set::Color;

    fn set(coords: &[(i64, i64)], colors: &[u32], k: usize) -> ColoredPointSet {
        ColoredPointSet::new(
            coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(),
            colors.iter().map(|&c| Color(c)).collect(),
            k,
        )
        .unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn three_points() {
        let s = set(&[(0, 0), (3, 1), (1, 4)], &[1, 2, 3], 3);
        assert_eq!(empty_triangles_naive(&s, &b()).unwrap().len(), 1);
        assert_eq!(empty_triangles(&s, &b()).unwrap().len(), 1);
        assert_eq!(empty_rainbow_triangles(&s, &b()).unwrap().len(), 1);
    }

    #[test]
    fn convex_four() {
        let s = set(&[(0, 0), (4, 1), (5, 5), (1, 4)], &[1, 2, 3, 4], 4);
        assert_eq!(empty_triangles_naive(&s, &b()).unwrap().len(), 4);
        assert_eq!(empty_triangles(&s, &b()).unwrap().len(), 4);
        let q = empty_rainbow_quadrilaterals(&s, &b()).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].vertices, vec![0, 1, 2, 3]);
        assert!(q[0].validate(&s).is_ok());
        assert_eq!(empty_quadrilaterals_naive(&s, ColorFilter::Rainbow, &b()).unwrap(), q);
    }

    #[test]
    fn one_inside() {
        let s = set(&[(0, 0), (6, 1), (2, 6), (3, 2)], &[1, 1, 1, 1], 1);
        let t = empty_triangles_naive(&s, &b()).unwrap();
        assert_eq!(t.len(), 3);
        assert!(!t.iter().any(|w| w.vertices == vec![0, 1, 2]));
        assert_eq!(empty_triangles(&s, &b()).unwrap(), t);
        assert_eq!(empty_rainbow_triangles(&s, &b()).unwrap().len(), 0);
        assert_eq!(empty_monochromatic_triangles(&s, &b()).unwrap().len(), 3);
        // Three reflex 4-gons, one per choice of the edge that gets dented.
        let q = empty_quadrilaterals(&s, ColorFilter::Any, &b()).unwrap();
        assert!(q.convex.is_empty());
        assert_eq!(q.nonconvex.len(), 3);
        assert_eq!(empty_nonconvex_quadrilaterals_naive(&s, ColorFilter::Any, &b()).unwrap(), q.nonconvex);
        for w in &q.nonconvex {
            assert!(w.validate(&s).is_ok());
        }
    }

    #[test]
    fn degenerate_input_rejected() {
        let s = set(&[(0, 0), (1, 1), (2, 2)], &[1, 2, 3], 3);
        assert!(matches!(empty_triangles(&s, &b()), Err(Error::Collinear(..))));
        assert!(matches!(empty_triangles_naive(&s, &b()), Err(Error::Collinear(..))));
    }

    #[test]
    fn budget_guard() {
        let s = set(&[(0, 0), (3, 1), (1, 4), (5, 7)], &[1, 2, 3, 4], 4);
        assert!(matches!(
            empty_triangles_naive(&s, &Budget::new(3)),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(has_r_hole(&s, 3, &Budget::new(1)), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn holes() {
        let s = set(&[(0, 0), (4, 1), (5, 5), (1, 4), (2, 1)], &[1, 1, 1, 1, 1], 1);
        assert!(has_r_hole(&s, 4, &b()).unwrap());
        assert!(!has_r_hole(&s, 5, &b()).unwrap());
        assert!(has_r_hole(&s, 2, &b()).is_err());
        assert!(has_r_hole(&s, 8, &b()).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(24, 4), 10626);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(180, 3), 955_860);
    }
}
