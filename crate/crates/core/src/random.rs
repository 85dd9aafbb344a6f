//! Seeded random colored point sets on an integer grid.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::geom::Point;
use crate::point_set::{Color, ColoredPointSet};

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// `n` grid points in `[0, grid)^2` with distinct x and no three collinear.
pub fn random_points(n: usize, grid: i64, rng: &mut impl Rng) -> Result<Vec<Point>, Error> {
    if grid < n as i64 {
        return Err(Error::InvalidParameter(format!("grid {grid} too small for {n} distinct x values")));
    }
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(n);
    let mut tries = 0usize;
    while pts.len() < n {
        tries += 1;
        if tries > 1000 * (n + 10) {
            return Err(Error::Construction("rejection sampling did not converge".into()));
        }
        let c = (rng.gen_range(0..grid), rng.gen_range(0..grid));
        if pts.iter().any(|p| p.0 == c.0) {
            continue;
        }
        let collinear = (0..pts.len()).any(|a| (a + 1..pts.len()).any(|b| cross(pts[a], pts[b], c) == 0));
        if !collinear {
            pts.push(c);
        }
    }
    Ok(pts.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect())
}

/// A balanced set with `k` colors and `m` points per color. The same seed
/// always gives the same set.
pub fn random_colored_set(k: usize, m: usize, seed: u64, grid: Option<i64>) -> Result<ColoredPointSet, Error> {
    if k == 0 || m == 0 {
        return Err(Error::InvalidParameter("k and m must be positive".into()));
    }
    let n = k * m;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = grid.unwrap_or((8 * n as i64).max(64));
    let points = random_points(n, grid, &mut rng)?;
    let mut colors: Vec<Color> = (0..n).map(|i| Color((i / m) as u32 + 1)).collect();
    colors.shuffle(&mut rng);
    ColoredPointSet::new_balanced(points, colors, k, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = random_colored_set(4, 3, 7, None).unwrap();
        let b = random_colored_set(4, 3, 7, None).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_colored_set(4, 3, 8, None).unwrap());
        assert!(a.is_general_position());
        assert_eq!(a.class_sizes(), vec![3; 4]);
    }
}
