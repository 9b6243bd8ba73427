//! Reference instances used by tests, examples and the documentation.

use crate::model::CriteriaMatrix;

/// The 3x3 instance whose efficient set is the closed edge between
/// `e_1` and `e_2`.
pub fn worked_example() -> CriteriaMatrix {
    CriteriaMatrix::from_rows(&[[1.0, 2.0, -4.0], [2.0, -5.0, 1.0], [0.0, 3.0, -0.5]]).expect("valid fixture")
}

/// A 3x3 instance where every feasible point is efficient;
/// `lambda = (1, 2, 1)` equalizes all weighted coefficients at 2.
pub fn all_efficient() -> CriteriaMatrix {
    CriteriaMatrix::from_rows(&[[1.0, 2.0, -5.0], [2.0, 1.0, -1.0], [-3.0, -2.0, 9.0]])
        .expect("valid fixture")
}
