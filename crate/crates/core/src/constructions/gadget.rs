//! A nine-point set with no empty rainbow quadrilateral.
//!
//! Three mutually visible points `A`, `B`, `C` carry colors 1, 2, 3. Near
//! each of them sit two points of color 4, hugging the side towards the next
//! vertex (`A` towards `B`, `B` towards `C`, `C` towards `A`). Any rainbow
//! quadrilateral uses `A`, `B`, `C` and one color-4 point; the pair near the
//! previous vertex, or the partner of the chosen point, always ends up inside.

use crate::geom::Point;
use crate::point_set::{Color, ColoredPointSet};
use crate::scalar::Scalar;

/// Index layout of [`lemma4_gadget`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetLayout;

impl GadgetLayout {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const NEAR_A: [usize; 2] = [3, 4];
    pub const NEAR_B: [usize; 2] = [5, 6];
    pub const NEAR_C: [usize; 2] = [7, 8];

    /// The auxiliary pair next to corner `0`, `1` or `2`.
    pub fn pair(corner: usize) -> [usize; 2] {
        [Self::NEAR_A, Self::NEAR_B, Self::NEAR_C][corner]
    }
}

// Offsets as (along the side, along the inward normal), in units of the side
// vector. The second point sits further out but closer to the side.
const OFFSETS: [((i64, i64), (i64, i64)); 2] = [((1, 20), (1, 1000)), ((7, 100), (12, 10000))];

/// Returns the gadget; unbalanced, with class sizes `1, 1, 1, 6`.
pub fn lemma4_gadget() -> ColoredPointSet {
    let corners = [(0i64, 0i64), (1_000_000, 100_000), (400_000, 900_000)];
    let mut points: Vec<Point> = corners.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
    let mut colors = vec![Color(1), Color(2), Color(3)];
    for c in 0..3 {
        let (x0, y0) = corners[c];
        let (x1, y1) = corners[(c + 1) % 3];
        let (dx, dy) = (x1 - x0, y1 - y0);
        // Counterclockwise corners, so the left normal points inwards.
        let (nx, ny) = (-dy, dx);
        for ((an, ad), (bn, bd)) in OFFSETS {
            let a = Scalar::new(an, ad).unwrap();
            let b = Scalar::new(bn, bd).unwrap();
            let x = Scalar::from(x0) + &a * &Scalar::from(dx) + &b * &Scalar::from(nx);
            let y = Scalar::from(y0) + &a * &Scalar::from(dy) + &b * &Scalar::from(ny);
            points.push(Point::new(x, y));
            colors.push(Color(4));
        }
    }
    ColoredPointSet::new(points, colors, 4).expect("gadget coloring is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::point_in_triangle_strict;

    #[test]
    fn shape() {
        let g = lemma4_gadget();
        assert_eq!(g.len(), 9);
        assert_eq!(g.class_sizes(), vec![1, 1, 1, 6]);
        assert_eq!(g.m(), None);
        assert!(g.is_general_position());
        let (a, b, c) = (g.point(0), g.point(1), g.point(2));
        for i in 3..9 {
            assert!(point_in_triangle_strict(g.point(i), a, b, c).unwrap());
        }
    }
}
