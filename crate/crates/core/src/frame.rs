//! Integer kernels for batch predicate evaluation.
//!
//! A point set with rational coordinates is rescaled by the least common
//! multiple of all denominators. A uniform positive scaling preserves every
//! orientation sign, so the heavy enumeration loops can run on integers. When
//! the scaled coordinates fit in 62 bits the determinant is evaluated in
//! `i128` without overflow; otherwise the kernel falls back to `BigInt`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::geom::Point;

pub trait Kernel: Sync {
    fn len(&self) -> usize;

    /// Sign of `(b - a) x (c - a)`.
    fn orient(&self, a: usize, b: usize, c: usize) -> i8;

    fn cmp_x(&self, a: usize, b: usize) -> Ordering;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Strict interior test; the triangle may be given in either orientation.
    fn in_triangle(&self, p: usize, a: usize, b: usize, c: usize) -> bool {
        let o = self.orient(a, b, c);
        o != 0 && self.orient(a, b, p) == o && self.orient(b, c, p) == o && self.orient(c, a, p) == o
    }
}

pub struct SmallKernel {
    coords: Vec<[i64; 2]>,
}

pub struct BigKernel {
    coords: Vec<[BigInt; 2]>,
}

impl Kernel for SmallKernel {
    fn len(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    fn orient(&self, a: usize, b: usize, c: usize) -> i8 {
        let [ax, ay] = self.coords[a];
        let [bx, by] = self.coords[b];
        let [cx, cy] = self.coords[c];
        let det = (bx as i128 - ax as i128) * (cy as i128 - ay as i128)
            - (by as i128 - ay as i128) * (cx as i128 - ax as i128);
        det.signum() as i8
    }

    fn cmp_x(&self, a: usize, b: usize) -> Ordering {
        self.coords[a][0].cmp(&self.coords[b][0])
    }
}

impl Kernel for BigKernel {
    fn len(&self) -> usize {
        self.coords.len()
    }

    fn orient(&self, a: usize, b: usize, c: usize) -> i8 {
        let [ax, ay] = &self.coords[a];
        let [bx, by] = &self.coords[b];
        let [cx, cy] = &self.coords[c];
        let det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
        if det.is_positive() {
            1
        } else if det.is_negative() {
            -1
        } else {
            0
        }
    }

    fn cmp_x(&self, a: usize, b: usize) -> Ordering {
        self.coords[a][0].cmp(&self.coords[b][0])
    }
}

pub enum Frame {
    Small(SmallKernel),
    Big(BigKernel),
}

const SMALL_LIMIT_BITS: u64 = 62;

impl Frame {
    pub fn new(points: &[Point]) -> Frame {
        let mut lcm = BigInt::one();
        for p in points {
            lcm = lcm.lcm(p.x.denom());
            lcm = lcm.lcm(p.y.denom());
        }
        let scale = |s: &crate::Scalar| -> BigInt { s.numer() * (&lcm / s.denom()) };
        let coords: Vec<[BigInt; 2]> = points.iter().map(|p| [scale(&p.x), scale(&p.y)]).collect();
        let fits = coords
            .iter()
            .flatten()
            .all(|v| v.is_zero() || v.abs().bits() <= SMALL_LIMIT_BITS);
        if fits {
            Frame::Small(SmallKernel {
                coords: coords
                    .iter()
                    .map(|[x, y]| [x.to_i64().unwrap(), y.to_i64().unwrap()])
                    .collect(),
            })
        } else {
            Frame::Big(BigKernel { coords })
        }
    }

    pub fn is_small(&self) -> bool {
        matches!(self, Frame::Small(_))
    }
}

/// Runs `$body` with `$k` bound to the concrete kernel inside `$frame`.
#[macro_export]
#[doc(hidden)]
macro_rules! with_kernel {
    ($frame:expr, $k:ident => $body:expr) => {
        match $frame {
            $crate::frame::Frame::Small($k) => $body,
            $crate::frame::Frame::Big($k) => $body,
        }
    };
}

/// Indices sorted by increasing x (ties broken by index).
pub fn x_order<K: Kernel>(k: &K) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..k.len()).collect();
    idx.sort_by(|&a, &b| k.cmp_x(a, b).then(a.cmp(&b)));
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn pt(x: &str, y: &str) -> Point {
        Point::new(x.parse::<Scalar>().unwrap(), y.parse::<Scalar>().unwrap())
    }

    #[test]
    fn small_and_big_agree() {
        let pts = vec![pt("0", "0"), pt("1/3", "0"), pt("0", "1/7"), pt("1/3", "1/7")];
        let f = Frame::new(&pts);
        assert!(f.is_small());
        with_kernel!(&f, k => {
            assert_eq!(k.orient(0, 1, 2), 1);
            assert_eq!(k.orient(0, 2, 1), -1);
            assert!(!k.in_triangle(3, 0, 1, 2));
        });

        let pts = vec![
            Point::new(Scalar::zero(), Scalar::zero()),
            Point::new(Scalar::one(), Scalar::zero()),
            Point::new(Scalar::zero(), Scalar::one()),
            Point::new(Scalar::dyadic(1, 202), Scalar::dyadic(1, 202)),
        ];
        let f = Frame::new(&pts);
        assert!(!f.is_small());
        with_kernel!(&f, k => {
            assert_eq!(k.orient(0, 1, 2), 1);
            assert!(k.in_triangle(3, 0, 1, 2));
            assert!(k.in_triangle(3, 2, 1, 0));
        });
    }
}
