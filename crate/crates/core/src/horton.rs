//! Horton sets: generation, validation, visible edges and empty triangles.
//!
//! Points of a Horton set are indexed by increasing x. `H_0` is the
//! even-indexed subsequence, `H_1` the odd-indexed one, and an address
//! `s` selects `H_s` by repeated parity selection.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::frame::{x_order, Frame, Kernel};
use crate::geom::Point;
use crate::point_set::PolygonWitness;
use crate::with_kernel;

/// A point sequence sorted strictly by x that satisfies the recursive
/// high-above condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HortonSet {
    points: Vec<Point>,
}

impl HortonSet {
    /// Validates an arbitrary point list; the points are re-sorted by x.
    pub fn from_points(points: Vec<Point>) -> Result<Self, Error> {
        let sorted = sort_by_x(points)?;
        if !horton_check_sorted(&sorted) {
            return Err(Error::NotHorton);
        }
        Ok(HortonSet { points: sorted })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }
}

fn sort_by_x(mut points: Vec<Point>) -> Result<Vec<Point>, Error> {
    points.sort_by(|a, b| a.x.cmp(&b.x));
    if let Some(w) = points.windows(2).position(|w| w[0].x == w[1].x) {
        return Err(Error::DuplicateX(w, w + 1));
    }
    Ok(points)
}

/// Bit string selecting a parity subsequence; `false` is 0 (even), `true` is 1 (odd).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BinaryAddress(pub Vec<bool>);

impl BinaryAddress {
    pub fn empty() -> Self {
        BinaryAddress(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, bit: bool) -> Self {
        let mut bits = self.0.clone();
        bits.push(bit);
        BinaryAddress(bits)
    }
}

impl fmt::Display for BinaryAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryAddress {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("invalid address {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BinaryAddress)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Above,
    Below,
}

/// Edge `(i, j)` with `i < j`, both indices into the Horton set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VisibleEdge {
    pub i: usize,
    pub j: usize,
    pub side: Side,
}

/// Builds an `n`-point Horton set with integer coordinates `(i, y_i)`.
///
/// The odd half is lifted by the smallest integer offset that makes it high
/// above the even half, computed exactly from all point/line pairs.
pub fn generate_horton(n: usize) -> Result<HortonSet, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("a Horton set needs at least one point".into()));
    }
    let mut memo = HashMap::new();
    let ys = heights(n, &mut memo).ok_or(Error::CoordinateOverflow(n))?;
    let points = ys
        .iter()
        .enumerate()
        .map(|(i, &y)| Point::new((i as i64).into(), y.into()))
        .collect();
    Ok(HortonSet { points })
}

fn heights(n: usize, memo: &mut HashMap<usize, Vec<i128>>) -> Option<Vec<i128>> {
    if n == 1 {
        return Some(vec![0]);
    }
    if let Some(v) = memo.get(&n) {
        return Some(v.clone());
    }
    let low = heights(n.div_ceil(2), memo)?;
    let high = heights(n / 2, memo)?;
    let lift = required_lift(&low, &high)?;
    let mut ys = Vec::with_capacity(n);
    for i in 0..n {
        ys.push(if i % 2 == 0 { low[i / 2] } else { high[i / 2].checked_add(lift)? });
    }
    memo.insert(n, ys.clone());
    Some(ys)
}

/// Smallest positive integer `d` such that `high + d` is high above `low`
/// when interleaved at x = 2a (low) and x = 2b + 1 (high).
fn required_lift(low: &[i128], high: &[i128]) -> Option<i128> {
    let lx = |a: usize| 2 * a as i128;
    let hx = |b: usize| 2 * b as i128 + 1;
    // Each constraint reads d * den > num; keep the largest num/den.
    let constraints = |lines: &[i128], line_x: &(dyn Fn(usize) -> i128 + Sync), pts: &[i128], pt_x: &(dyn Fn(usize) -> i128 + Sync), flip: bool| {
        (0..lines.len())
            .into_par_iter()
            .map(|u| {
                let mut best: Option<(i128, i128)> = None;
                for v in u + 1..lines.len() {
                    let den = line_x(v) - line_x(u);
                    let dy = lines[v] - lines[u];
                    let mut worst: Option<i128> = None;
                    for (p, &yp) in pts.iter().enumerate() {
                        let num = den
                            .checked_mul(yp - lines[u])?
                            .checked_sub(dy.checked_mul(pt_x(p) - line_x(u))?)?;
                        let num = if flip { -num } else { num };
                        worst = Some(worst.map_or(num, |w: i128| w.max(num)));
                    }
                    if let Some(num) = worst {
                        best = Some(match best {
                            None => (num, den),
                            Some((bn, bd)) => {
                                if num.checked_mul(bd)? > bn.checked_mul(den)? {
                                    (num, den)
                                } else {
                                    (bn, bd)
                                }
                            }
                        });
                    }
                }
                Some(best)
            })
            .collect::<Option<Vec<_>>>()
    };
    // Lines through two high points must pass above every low point.
    let a = constraints(high, &hx, low, &lx, false)?;
    // Lines through two low points must pass below every (lifted) high point.
    let b = constraints(low, &lx, high, &hx, true)?;
    let mut lift: i128 = 1;
    for (num, den) in a.into_iter().chain(b).flatten() {
        lift = lift.max(num.div_euclid(den) + 1);
    }
    Some(lift)
}

/// Checks the recursive Horton condition. Points may come in any order.
pub fn is_horton(points: &[Point]) -> Result<bool, Error> {
    let sorted = sort_by_x(points.to_vec())?;
    Ok(horton_check_sorted(&sorted))
}

fn horton_check_sorted(sorted: &[Point]) -> bool {
    let frame = Frame::new(sorted);
    with_kernel!(&frame, k => {
        let idx = x_order(k);
        check_level(k, &idx)
    })
}

fn check_level<K: Kernel>(k: &K, idx: &[usize]) -> bool {
    if idx.len() <= 1 {
        return true;
    }
    let (even, odd) = split_parity(idx);
    high_above(k, &odd, &even) && check_level(k, &even) && check_level(k, &odd)
}

/// `upper` is high above `lower`; both slices are sorted by x.
fn high_above<K: Kernel>(k: &K, upper: &[usize], lower: &[usize]) -> bool {
    let lines_above = (0..upper.len()).into_par_iter().all(|a| {
        (a + 1..upper.len()).all(|b| lower.iter().all(|&p| k.orient(upper[a], upper[b], p) < 0))
    });
    lines_above
        && (0..lower.len()).into_par_iter().all(|a| {
            (a + 1..lower.len()).all(|b| upper.iter().all(|&p| k.orient(lower[a], lower[b], p) > 0))
        })
}

fn split_parity(idx: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let even = idx.iter().step_by(2).copied().collect();
    let odd = idx.iter().skip(1).step_by(2).copied().collect();
    (even, odd)
}

/// Indices of `H_s` inside a sequence of length `n`.
pub fn address_indices(n: usize, s: &BinaryAddress) -> Result<Vec<usize>, Error> {
    let mut idx: Vec<usize> = (0..n).collect();
    for &bit in &s.0 {
        let (even, odd) = split_parity(&idx);
        idx = if bit { odd } else { even };
    }
    if idx.is_empty() {
        return Err(Error::AddressTooDeep { address: s.to_string(), n });
    }
    Ok(idx)
}

/// `H_s`, re-indexed by x.
pub fn subset_by_address(h: &HortonSet, s: &BinaryAddress) -> Result<HortonSet, Error> {
    let idx = address_indices(h.len(), s)?;
    Ok(HortonSet { points: idx.iter().map(|&i| h.points[i].clone()).collect() })
}

/// The address chain `s_0 = "", s_1, ..., s_r'` of point `i`, ending at the
/// singleton `{p_i}`; returned as the bit sequence of `s_r'`.
pub fn address_of(n: usize, i: usize) -> BinaryAddress {
    let mut bits = Vec::new();
    let (mut pos, mut len) = (i, n);
    while len > 1 {
        let bit = pos % 2 == 1;
        bits.push(bit);
        len = if bit { len / 2 } else { len.div_ceil(2) };
        pos /= 2;
    }
    BinaryAddress(bits)
}

/// Visible edges, sorted by `(i, j)`.
///
/// Edges visible from below are the consecutive pairs of `H_s` for
/// `s = 1 0...0`; edges visible from above come from `s = 0 1...1`.
pub fn visible_edges(h: &HortonSet) -> Vec<VisibleEdge> {
    let idx: Vec<usize> = (0..h.len()).collect();
    let mut edges = visible_edges_of(&idx);
    edges.sort();
    edges
}

fn visible_edges_of(idx: &[usize]) -> Vec<VisibleEdge> {
    let mut edges = Vec::new();
    for (first, side) in [(true, Side::Below), (false, Side::Above)] {
        let (even, odd) = split_parity(idx);
        let mut cur = if first { odd } else { even };
        while cur.len() >= 2 {
            edges.extend(cur.windows(2).map(|w| VisibleEdge { i: w[0], j: w[1], side }));
            let (e, o) = split_parity(&cur);
            // After the leading bit the trail repeats the opposite parity.
            cur = if first { e } else { o };
        }
    }
    edges
}

/// All empty triangles of `h`, as sorted index triples in sorted order.
///
/// Triangles with vertices in both parity halves are visible edges paired
/// with a point of the opposite half; the rest come from recursing into the
/// halves.
pub fn empty_triangle_triples(h: &HortonSet) -> Vec<[usize; 3]> {
    let idx: Vec<usize> = (0..h.len()).collect();
    let mut out = triangles_rec(&idx);
    for t in &mut out {
        t.sort();
    }
    out.sort();
    out
}

fn triangles_rec(idx: &[usize]) -> Vec<[usize; 3]> {
    if idx.len() < 3 {
        return Vec::new();
    }
    let (even, odd) = split_parity(idx);
    let mut out = Vec::new();
    for e in visible_edges_of(idx) {
        let apexes = match e.side {
            Side::Below => &even,
            Side::Above => &odd,
        };
        out.extend(apexes.iter().map(|&p| [e.i, e.j, p]));
    }
    let (a, b) = if idx.len() > 64 {
        rayon::join(|| triangles_rec(&even), || triangles_rec(&odd))
    } else {
        (triangles_rec(&even), triangles_rec(&odd))
    };
    out.extend(a);
    out.extend(b);
    out
}

/// Empty triangles as witnesses. A Horton set carries no colors, so every
/// witness has `rainbow == false`.
pub fn empty_triangles_horton(h: &HortonSet) -> Vec<PolygonWitness> {
    empty_triangle_triples(h)
        .into_iter()
        .map(|t| PolygonWitness { vertices: t.to_vec(), convex: true, empty: true, rainbow: false })
        .collect()
}

/// `|s| + 1` for the deepest `H_s` containing all three vertices.
pub fn triangle_layer(t: [usize; 3]) -> usize {
    let mut pos = t;
    let mut depth = 0;
    loop {
        let parity = pos[0] % 2;
        if pos.iter().any(|p| p % 2 != parity) {
            return depth + 1;
        }
        for p in &mut pos {
            *p /= 2;
        }
        depth += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn addr(s: &str) -> BinaryAddress {
        s.parse().unwrap()
    }

    #[test]
    fn small_sets() {
        assert!(generate_horton(0).is_err());
        let h1 = generate_horton(1).unwrap();
        assert_eq!(h1.len(), 1);
        assert!(is_horton(h1.points()).unwrap());
        let h2 = generate_horton(2).unwrap();
        assert!(is_horton(h2.points()).unwrap());
        assert!(visible_edges(&h2).is_empty());
    }

    #[test]
    fn generator_is_horton() {
        for n in 1..=40 {
            let h = generate_horton(n).unwrap();
            assert!(is_horton(h.points()).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn convex_quadrilateral_is_not_horton() {
        // A convex cup: the line through the odd points (1,-1), (3,0) passes
        // below the even point (0,0).
        let pts = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, -1),
            Point::from_ints(2, -1),
            Point::from_ints(3, 0),
        ];
        let refs: Vec<&Point> = pts.iter().collect();
        assert_eq!(crate::geom::convex_hull(&refs).len(), 4);
        assert!(!is_horton(&pts).unwrap());
        assert_eq!(HortonSet::from_points(pts).unwrap_err(), Error::NotHorton);
    }

    #[test]
    fn duplicate_x_rejected() {
        let pts = vec![Point::from_ints(0, 0), Point::from_ints(0, 1)];
        assert!(matches!(is_horton(&pts), Err(Error::DuplicateX(..))));
    }

    #[test]
    fn three_point_set_matches_definition() {
        // Sorted: (0,0), (1,100), (2,1); H_1 = {(1,100)} is a singleton, so
        // the only requirement is that line (0,0)-(2,1) passes below (1,100).
        let pts = vec![Point::from_ints(0, 0), Point::from_ints(2, 1), Point::from_ints(1, 100)];
        assert!(is_horton(&pts).unwrap());
        let pts = vec![Point::from_ints(0, 0), Point::from_ints(2, 1), Point::from_ints(1, -100)];
        assert!(!is_horton(&pts).unwrap());
    }

    #[test]
    fn addresses() {
        assert_eq!(address_indices(8, &BinaryAddress::empty()).unwrap(), (0..8).collect::<Vec<_>>());
        assert_eq!(address_indices(8, &addr("0")).unwrap(), vec![0, 2, 4, 6]);
        assert_eq!(address_indices(10, &addr("01")).unwrap(), vec![2, 6]);
        assert_eq!(address_indices(10, &addr("00")).unwrap(), vec![0, 4, 8]);
        assert!(matches!(address_indices(2, &addr("11")), Err(Error::AddressTooDeep { .. })));
        let h = generate_horton(8).unwrap();
        let sub = subset_by_address(&h, &addr("0")).unwrap();
        assert_eq!(sub.points(), &[0, 2, 4, 6].map(|i| h.points()[i].clone()));
        assert!(is_horton(sub.points()).unwrap());
        assert_eq!(addr("0110").to_string(), "0110");
    }

    #[test]
    fn address_chain_ends_at_singleton() {
        for n in 1..40 {
            for i in 0..n {
                let s = address_of(n, i);
                assert_eq!(address_indices(n, &s).unwrap(), vec![i]);
            }
        }
    }

    #[test]
    fn four_point_visible_edges() {
        let h = generate_horton(4).unwrap();
        assert_eq!(
            visible_edges(&h),
            vec![
                VisibleEdge { i: 0, j: 2, side: Side::Above },
                VisibleEdge { i: 1, j: 3, side: Side::Below },
            ]
        );
    }

    #[test]
    fn small_triangle_counts() {
        assert_eq!(empty_triangle_triples(&generate_horton(3).unwrap()), vec![[0, 1, 2]]);
        assert_eq!(empty_triangle_triples(&generate_horton(4).unwrap()).len(), 4);
    }

    #[test]
    fn layers() {
        assert_eq!(triangle_layer([0, 1, 2]), 1);
        assert_eq!(triangle_layer([0, 2, 4]), 2);
        assert_eq!(triangle_layer([0, 4, 6]), 2);
        assert_eq!(triangle_layer([0, 4, 8]), 3);
        assert_eq!(triangle_layer([1, 3, 5]), 2);
    }
}
