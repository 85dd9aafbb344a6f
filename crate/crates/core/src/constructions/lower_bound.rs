//! The cubic lower bound on empty rainbow triangles and a constructive
//! harvest of the triangles it promises.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::frame::{Frame, Kernel};
use crate::point_set::{Color, ColoredPointSet, PolygonWitness};
use crate::with_kernel;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorTerm {
    pub i: usize,
    pub r: usize,
    pub guaranteed: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBoundBreakdown {
    pub per_color: Vec<ColorTerm>,
    pub total: u128,
}

fn check_params(k: usize, m: usize) -> Result<(), Error> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k = {k}, need k >= 3")));
    }
    if m < 1 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    Ok(())
}

/// Term-by-term sum: color `i` (ranked by its leftmost point) is the
/// rightmost vertex of at least `(r_i - 1)(2i - r_i - 2)/2` empty rainbow
/// triangles, `r_i = min(i, m)`.
pub fn lower_bound_breakdown(k: usize, m: usize) -> Result<LowerBoundBreakdown, Error> {
    check_params(k, m)?;
    let per_color: Vec<ColorTerm> = (1..=k)
        .map(|i| {
            let r = i.min(m) as i128;
            let i2 = i as i128;
            let g = ((r - 1) * (2 * i2 - r - 2) / 2).max(0) as u128;
            ColorTerm { i, r: r as usize, guaranteed: g }
        })
        .collect();
    let total = per_color.iter().map(|t| t.guaranteed).sum();
    Ok(LowerBoundBreakdown { per_color, total })
}

/// Closed form of the lower bound.
pub fn lower_bound_formula(k: usize, m: usize) -> Result<u128, Error> {
    check_params(k, m)?;
    let (k, m) = (k as i128, m as i128);
    let six = if m >= k {
        k * k * k - 3 * k * k + 2 * k
    } else {
        3 * k * k * m - 3 * k * m * m + m * m * m - 3 * k * k + 3 * k - m
    };
    debug_assert_eq!(six % 6, 0);
    Ok((six / 6) as u128)
}

/// Re-runs the counting argument on a concrete set and returns the empty
/// rainbow triangles it finds, each with a point of color rank `i` as its
/// rightmost vertex.
///
/// Colors are ranked by the x of their leftmost point. For rank `i` the
/// first `r_i - 1` points of that color are swept in turn; the points to the
/// left of the sweep point `q` are sorted by angle around `q`, and every
/// angularly consecutive pair closes an empty triangle with `q`. Pairs whose
/// colors differ from each other and from `i` are kept.
pub fn lower_bound_witnesses(set: &ColoredPointSet) -> Result<Vec<PolygonWitness>, Error> {
    let k = set.k();
    let m = set
        .m()
        .ok_or_else(|| Error::MalformedColoring(format!("unbalanced classes {:?}", set.class_sizes())))?;
    check_params(k, m)?;
    set.require_general_position()?;
    let frame = Frame::new(set.points());
    let triples = with_kernel!(&frame, kern => harvest(kern, set, m));
    Ok(triples
        .into_iter()
        .map(|t| PolygonWitness { vertices: t.to_vec(), convex: true, empty: true, rainbow: true })
        .collect())
}

fn harvest<K: Kernel>(kern: &K, set: &ColoredPointSet, m: usize) -> Vec<[usize; 3]> {
    let mut classes: Vec<(Color, Vec<usize>)> = set
        .classes()
        .into_iter()
        .map(|(c, mut idx)| {
            idx.sort_by(|&a, &b| kern.cmp_x(a, b));
            (c, idx)
        })
        .collect();
    classes.sort_by(|a, b| kern.cmp_x(a.1[0], b.1[0]));

    let mut found = BTreeSet::new();
    for (rank, (color, members)) in classes.iter().enumerate() {
        let i = rank + 1;
        let r = i.min(m);
        for &q in members.iter().take(r.saturating_sub(1)) {
            let mut left: Vec<usize> = (0..set.len()).filter(|&p| kern.cmp_x(p, q) == Ordering::Less).collect();
            // All of `left` lies in an open half-plane around q, so this is a
            // total order.
            left.sort_by(|&a, &b| match kern.orient(q, a, b) {
                1 => Ordering::Less,
                -1 => Ordering::Greater,
                _ => Ordering::Equal,
            });
            for w in left.windows(2) {
                let (ca, cb) = (set.color(w[0]), set.color(w[1]));
                if ca != *color && cb != *color && ca != cb {
                    let mut t = [q, w[0], w[1]];
                    t.sort();
                    found.insert(t);
                }
            }
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(lower_bound_formula(3, 3).unwrap(), 1);
        assert_eq!(lower_bound_formula(3, 7).unwrap(), 1);
        assert_eq!(lower_bound_formula(4, 4).unwrap(), 4);
        assert_eq!(lower_bound_formula(4, 2).unwrap(), 3);
        assert_eq!(lower_bound_formula(3, 1).unwrap(), 0);
        assert!(lower_bound_formula(2, 5).is_err());
        assert!(lower_bound_formula(3, 0).is_err());
    }

    #[test]
    fn breakdown_matches() {
        for k in 3..40 {
            for m in 1..40 {
                let b = lower_bound_breakdown(k, m).unwrap();
                assert_eq!(b.total, lower_bound_formula(k, m).unwrap(), "k={k} m={m}");
                assert_eq!(b.per_color.len(), k);
            }
        }
    }

    #[test]
    fn witnesses_on_a_small_set() {
        let set = crate::random::random_colored_set(3, 3, 11, None).unwrap();
        let w = lower_bound_witnesses(&set).unwrap();
        assert!(w.len() as u128 >= lower_bound_formula(3, 3).unwrap());
        for t in &w {
            t.validate(&set).unwrap();
        }
    }
}
