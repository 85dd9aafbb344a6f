//! Extremal configurations and the checks that go with them.

pub mod gadget;
pub mod lower_bound;
pub mod no_quad;
pub mod upper_bound;

pub use gadget::{lemma4_gadget, GadgetLayout};
pub use lower_bound::{lower_bound_breakdown, lower_bound_formula, lower_bound_witnesses, LowerBoundBreakdown};
pub use no_quad::{build_no_rainbow_quad_set, verify_no_empty_rainbow_quad, NoQuadConstruction, NoQuadReport};
pub use upper_bound::{
    build_upper_bound_set, upper_bound_value, verify_theorem1_upper, BlockerSchedule, UpperBoundReport,
};

/// `ceil(log2(k))` for `k >= 1`.
pub fn ceil_log2(k: usize) -> usize {
    assert!(k >= 1);
    (usize::BITS - (k - 1).leading_zeros()) as usize
}

#[cfg(test)]
mod tests {
    use super::ceil_log2;

    #[test]
    fn logs() {
        let got: Vec<usize> = (1..=9).map(ceil_log2).collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 3, 3, 4]);
    }
}
