//! Exact planar predicates.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::frame::{x_order, Frame, Kernel};
use crate::scalar::Scalar;
use crate::with_kernel;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "scalar_string")]
    pub x: Scalar,
    #[serde(with = "scalar_string")]
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Scalar::from(x), Scalar::from(y))
    }

    pub fn sub(&self, other: &Point) -> (Scalar, Scalar) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    pub fn offset(&self, dx: &Scalar, dy: &Scalar) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }
}

pub(crate) mod scalar_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::Scalar;

    pub fn serialize<S: Serializer>(v: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Greater => Orientation::CounterClockwise,
        }
    }
}

/// Orientation of `c` relative to the directed line `a -> b`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Orientation {
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    Orientation::from_ordering(lhs.cmp(&rhs))
}

/// True iff `p` lies strictly inside triangle `abc` (vertices in any order).
pub fn point_in_triangle_strict(p: &Point, a: &Point, b: &Point, c: &Point) -> Result<bool, Error> {
    let o = orient(a, b, c);
    if o == Orientation::Collinear {
        return Err(Error::DegenerateTriangle);
    }
    Ok(orient(a, b, p) == o && orient(b, c, p) == o && orient(c, a, p) == o)
}

/// Returns the counterclockwise cyclic order (as positions into the input
/// array, starting from position 0) when the four points are in convex
/// position, `None` otherwise.
pub fn is_convex_quadrilateral(pts: [&Point; 4]) -> Result<Option<[usize; 4]>, Error> {
    for (i, j, l) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        if orient(pts[i], pts[j], pts[l]) == Orientation::Collinear {
            return Err(Error::Collinear(i, j, l));
        }
    }
    // A point inside the triangle of the other three rules out convexity.
    for d in 0..4 {
        let o: Vec<usize> = (0..4).filter(|&i| i != d).collect();
        if point_in_triangle_strict(pts[d], pts[o[0]], pts[o[1]], pts[o[2]])? {
            return Ok(None);
        }
    }
    // Convex: vertex 0's opposite is the one separated from it by the diagonal
    // through the remaining two.
    for opp in 1..4 {
        let rest: Vec<usize> = (1..4).filter(|&i| i != opp).collect();
        let (u, v) = (rest[0], rest[1]);
        let s0 = orient(pts[u], pts[v], pts[0]);
        let s1 = orient(pts[u], pts[v], pts[opp]);
        if s0 != s1 {
            // 0, u, opp, v or 0, v, opp, u.
            let order = if orient(pts[0], pts[u], pts[opp]) == Orientation::CounterClockwise {
                [0, u, opp, v]
            } else {
                [0, v, opp, u]
            };
            return Ok(Some(order));
        }
    }
    unreachable!("four points in convex position always have a separating diagonal")
}

/// Convex hull vertices in counterclockwise order, as indices into `pts`.
/// Assumes no three input points are collinear.
pub fn convex_hull(pts: &[&Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| pts[a].x.cmp(&pts[b].x).then_with(|| pts[a].y.cmp(&pts[b].y)));
    if idx.len() < 3 {
        return idx;
    }
    let turn = |h: &[usize], c: usize| orient(pts[h[h.len() - 2]], pts[h[h.len() - 1]], pts[c]);
    let mut lower: Vec<usize> = Vec::new();
    for &c in &idx {
        while lower.len() >= 2 && turn(&lower, c) != Orientation::CounterClockwise {
            lower.pop();
        }
        lower.push(c);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &c in idx.iter().rev() {
        while upper.len() >= 2 && turn(&upper, c) != Orientation::CounterClockwise {
            upper.pop();
        }
        upper.push(c);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// No three points collinear and all x-coordinates pairwise distinct.
pub fn is_general_position(points: &[Point]) -> bool {
    general_position_violation(points).is_none()
}

/// First violation of general position found, if any.
pub fn general_position_violation(points: &[Point]) -> Option<Error> {
    let frame = Frame::new(points);
    with_kernel!(&frame, k => find_violation(k))
}

fn find_violation<K: Kernel>(k: &K) -> Option<Error> {
    let order = x_order(k);
    for w in order.windows(2) {
        if k.cmp_x(w[0], w[1]) == Ordering::Equal {
            return Some(Error::DuplicateX(w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    use rayon::prelude::*;
    let n = k.len();
    (0..n).into_par_iter().find_map_first(|a| {
        for b in a + 1..n {
            for c in b + 1..n {
                if k.orient(a, b, c) == 0 {
                    return Some(Error::Collinear(a, b, c));
                }
            }
        }
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)).sign(), 1);
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 2)).sign(), 0);
        assert_eq!(orient(&p(0, 0), &p(0, 1), &p(1, 0)).sign(), -1);
    }

    #[test]
    fn triangle_examples() {
        let (a, b, c) = (p(0, 0), p(3, 0), p(0, 3));
        assert!(point_in_triangle_strict(&p(1, 1), &a, &b, &c).unwrap());
        assert!(!point_in_triangle_strict(&p(0, 0), &a, &b, &c).unwrap());
        assert!(!point_in_triangle_strict(&p(2, 2), &a, &b, &c).unwrap());
        // (1,2) sits on edge (3,0)-(0,3).
        assert!(!point_in_triangle_strict(&p(1, 2), &a, &b, &c).unwrap());
        assert_eq!(
            point_in_triangle_strict(&p(1, 1), &p(0, 0), &p(1, 1), &p(2, 2)),
            Err(Error::DegenerateTriangle)
        );
    }

    #[test]
    fn quadrilateral_examples() {
        let sq = [p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert_eq!(
            is_convex_quadrilateral([&sq[0], &sq[1], &sq[2], &sq[3]]).unwrap(),
            Some([0, 1, 2, 3])
        );
        // Same square, scrambled input order.
        assert_eq!(
            is_convex_quadrilateral([&sq[0], &sq[2], &sq[1], &sq[3]]).unwrap(),
            Some([0, 2, 1, 3])
        );
        let q = [p(0, 0), p(3, 0), p(0, 3), p(1, 1)];
        assert_eq!(is_convex_quadrilateral([&q[0], &q[1], &q[2], &q[3]]).unwrap(), None);
        let q = [p(0, 0), p(2, 0), p(3, 2), p(1, 3)];
        assert_eq!(
            is_convex_quadrilateral([&q[0], &q[1], &q[2], &q[3]]).unwrap(),
            Some([0, 1, 2, 3])
        );
        let q = [p(0, 0), p(1, 1), p(2, 2), p(5, 0)];
        assert!(is_convex_quadrilateral([&q[0], &q[1], &q[2], &q[3]]).is_err());
    }

    #[test]
    fn general_position_examples() {
        assert!(is_general_position(&[p(0, 0), p(2, 0), p(1, 2)]));
        assert!(is_general_position(&[p(0, 0), p(2, 1), p(1, 2)]));
        assert!(!is_general_position(&[p(0, 0), p(1, 1), p(2, 2), p(5, -3)]));
        assert!(!is_general_position(&[p(0, 0), p(0, 1), p(3, 7)]));
    }

    #[test]
    fn hull_order() {
        let pts = [p(0, 0), p(4, 1), p(1, 1), p(2, 5)];
        let refs: Vec<&Point> = pts.iter().collect();
        assert_eq!(convex_hull(&refs), vec![0, 1, 3]);
    }
}
