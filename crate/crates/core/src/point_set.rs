//! Colored point sets and polygon witnesses.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geom::{self, orient, point_in_triangle_strict, Orientation, Point};

/// A color label in `1..=k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub u32);

impl Color {
    /// Zero-based position of the color, for indexing per-color tables.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Points with exact coordinates, each carrying one of `k` colors.
///
/// Every color in `1..=k` must occur. Most sets in this crate are balanced
/// (all classes of the same size `m`); the few that are not, such as the
/// quadrilateral gadget, report `m() == None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPointSet {
    points: Vec<Point>,
    colors: Vec<Color>,
    k: usize,
}

impl ColoredPointSet {
    pub fn new(points: Vec<Point>, colors: Vec<Color>, k: usize) -> Result<Self, Error> {
        if points.len() != colors.len() {
            return Err(Error::MalformedColoring(format!(
                "{} points but {} colors",
                points.len(),
                colors.len()
            )));
        }
        let mut seen = vec![false; k];
        for c in &colors {
            if c.0 == 0 || c.0 as usize > k {
                return Err(Error::MalformedColoring(format!("color {c} outside 1..={k}")));
            }
            seen[c.index()] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::MalformedColoring(format!("color {} has no points", missing + 1)));
        }
        Ok(ColoredPointSet { points, colors, k })
    }

    /// Like [`ColoredPointSet::new`] but also requires every class to have
    /// exactly `m` points.
    pub fn new_balanced(points: Vec<Point>, colors: Vec<Color>, k: usize, m: usize) -> Result<Self, Error> {
        let set = Self::new(points, colors, k)?;
        match set.m() {
            Some(mm) if mm == m => Ok(set),
            _ => Err(Error::MalformedColoring(format!(
                "class sizes {:?} are not all {m}",
                set.class_sizes()
            ))),
        }
    }

    /// Every point gets color 1.
    pub fn uncolored(points: Vec<Point>) -> Result<Self, Error> {
        let colors = vec![Color(1); points.len()];
        Self::new(points, colors, 1)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn color(&self, i: usize) -> Color {
        self.colors[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for c in &self.colors {
            sizes[c.index()] += 1;
        }
        sizes
    }

    /// Common class size, if all classes have the same size.
    pub fn m(&self) -> Option<usize> {
        let sizes = self.class_sizes();
        let first = *sizes.first()?;
        sizes.iter().all(|&s| s == first).then_some(first)
    }

    pub fn is_general_position(&self) -> bool {
        geom::is_general_position(&self.points)
    }

    pub fn require_general_position(&self) -> Result<(), Error> {
        match geom::general_position_violation(&self.points) {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    pub fn is_rainbow(&self, vertices: &[usize]) -> bool {
        let mut cs: Vec<Color> = vertices.iter().map(|&v| self.colors[v]).collect();
        cs.sort();
        cs.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_monochromatic(&self, vertices: &[usize]) -> bool {
        vertices.windows(2).all(|w| self.colors[w[0]] == self.colors[w[1]])
    }

    /// Copy of the set with the given indices removed; colors that vanish
    /// entirely are an error.
    pub fn without(&self, removed: &[usize]) -> Result<Self, Error> {
        let keep: Vec<usize> = (0..self.len()).filter(|i| !removed.contains(i)).collect();
        Self::new(
            keep.iter().map(|&i| self.points[i].clone()).collect(),
            keep.iter().map(|&i| self.colors[i]).collect(),
            self.k,
        )
    }

    /// Relabels colors through `map` (`map[c.index()]` is the new color).
    pub fn recolored(&self, map: &[Color]) -> Result<Self, Error> {
        Self::new(
            self.points.clone(),
            self.colors.iter().map(|c| map[c.index()]).collect(),
            self.k,
        )
    }

    /// Points grouped by color, each group in index order.
    pub fn classes(&self) -> BTreeMap<Color, Vec<usize>> {
        let mut out: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
        for (i, c) in self.colors.iter().enumerate() {
            out.entry(*c).or_default().push(i);
        }
        out
    }
}

/// A triangle or quadrilateral spanned by points of a [`ColoredPointSet`].
///
/// Triangles list their vertices in increasing index order. Quadrilaterals
/// list the boundary cycle counterclockwise starting at the smallest index,
/// which also pins down the polygon when the four points are not in convex
/// position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PolygonWitness {
    pub vertices: Vec<usize>,
    pub convex: bool,
    pub empty: bool,
    pub rainbow: bool,
}

impl PolygonWitness {
    /// Computes the flags for a polygon from scratch.
    pub fn evaluate(set: &ColoredPointSet, vertices: &[usize]) -> Result<Self, Error> {
        let n = set.len();
        for (a, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidParameter(format!("vertex index {v} out of range")));
            }
            if vertices[..a].contains(&v) {
                return Err(Error::InvalidParameter(format!("repeated vertex {v}")));
            }
        }
        let pts: Vec<&Point> = vertices.iter().map(|&v| set.point(v)).collect();
        let others = || (0..n).filter(|i| !vertices.contains(i));
        let (convex, empty) = match vertices.len() {
            3 => {
                let mut empty = true;
                for i in others() {
                    if point_in_triangle_strict(set.point(i), pts[0], pts[1], pts[2])? {
                        empty = false;
                        break;
                    }
                }
                (true, empty)
            }
            4 => {
                let turns: Vec<Orientation> =
                    (0..4).map(|i| orient(pts[i], pts[(i + 1) % 4], pts[(i + 2) % 4])).collect();
                if turns.contains(&Orientation::Collinear) {
                    return Err(Error::Collinear(vertices[0], vertices[1], vertices[2]));
                }
                let ccw = turns.iter().filter(|&&t| t == Orientation::CounterClockwise).count();
                match ccw {
                    0 | 4 => {
                        let o = turns[0];
                        let empty = others().all(|i| {
                            (0..4).any(|e| orient(pts[e], pts[(e + 1) % 4], set.point(i)) != o)
                        });
                        (true, empty)
                    }
                    1 | 3 => {
                        let minority = if ccw == 1 {
                            Orientation::CounterClockwise
                        } else {
                            Orientation::Clockwise
                        };
                        // turns[i] is the turn at vertex i + 1.
                        let t = turns.iter().position(|&o| o == minority).unwrap();
                        let r = (t + 1) % 4;
                        let v = |d: usize| pts[(r + d) % 4];
                        let mut empty = true;
                        for i in others() {
                            let p = set.point(i);
                            if point_in_triangle_strict(p, v(0), v(1), v(2))?
                                || point_in_triangle_strict(p, v(0), v(2), v(3))?
                            {
                                empty = false;
                                break;
                            }
                        }
                        (false, empty)
                    }
                    _ => {
                        return Err(Error::InvalidParameter(format!(
                            "vertex cycle {vertices:?} is self-intersecting"
                        )))
                    }
                }
            }
            len => {
                return Err(Error::InvalidParameter(format!("polygon with {len} vertices")));
            }
        };
        Ok(PolygonWitness {
            vertices: vertices.to_vec(),
            convex,
            empty,
            rainbow: set.is_rainbow(vertices),
        })
    }

    /// Re-derives every flag from the point set and checks it matches.
    pub fn validate(&self, set: &ColoredPointSet) -> Result<(), Error> {
        let fresh = Self::evaluate(set, &self.vertices)?;
        if &fresh != self {
            return Err(Error::InvalidParameter(format!(
                "witness {:?} does not match recomputed flags {:?}",
                self, fresh
            )));
        }
        Ok(())
    }

    pub fn is_triangle(&self) -> bool {
        self.vertices.len() == 3
    }

    pub fn shape_name(&self) -> &'static str {
        if self.is_triangle() {
            "triangle"
        } else {
            "quadrilateral"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(coords: &[(i64, i64, u32)], k: usize) -> ColoredPointSet {
        ColoredPointSet::new(
            coords.iter().map(|&(x, y, _)| Point::from_ints(x, y)).collect(),
            coords.iter().map(|&(_, _, c)| Color(c)).collect(),
            k,
        )
        .unwrap()
    }

    #[test]
    fn coloring_validation() {
        let pts = vec![Point::from_ints(0, 0), Point::from_ints(1, 3)];
        assert!(ColoredPointSet::new(pts.clone(), vec![Color(1), Color(3)], 2).is_err());
        assert!(ColoredPointSet::new(pts.clone(), vec![Color(1), Color(1)], 2).is_err());
        assert!(ColoredPointSet::new(pts.clone(), vec![Color(1)], 1).is_err());
        let s = ColoredPointSet::new(pts.clone(), vec![Color(2), Color(1)], 2).unwrap();
        assert_eq!(s.m(), Some(1));
        assert!(ColoredPointSet::new_balanced(pts, vec![Color(2), Color(1)], 2, 2).is_err());
    }

    #[test]
    fn witness_flags() {
        let s = set(&[(0, 0, 1), (4, 1, 2), (1, 4, 3), (3, 3, 4), (2, 2, 1)], 4);
        let t = PolygonWitness::evaluate(&s, &[0, 1, 2]).unwrap();
        assert!(t.convex && !t.empty && t.rainbow);
        let q = PolygonWitness::evaluate(&s, &[0, 1, 3, 2]).unwrap();
        assert!(q.convex && !q.empty && q.rainbow);
        // Reflex vertex at 4, which lies inside triangle 0-1-2.
        let nq = PolygonWitness::evaluate(&s, &[0, 1, 4, 2]).unwrap();
        assert!(!nq.convex && !nq.rainbow);
        assert!(PolygonWitness::evaluate(&s, &[0, 3, 1, 2]).is_err());
        assert!(t.validate(&s).is_ok());
        let mut bad = t.clone();
        bad.empty = true;
        assert!(bad.validate(&s).is_err());
    }
}
