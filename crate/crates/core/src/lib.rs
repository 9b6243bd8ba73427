//! Efficiency analysis for multiple objective linear programs over the
//! probability simplex.
//!
//! Given a `k x n` criteria matrix `C`, the problem is to maximize all of
//! `c_1^T x, ..., c_k^T x` over `X = { x >= 0, sum(x) = 1 }`. A point is
//! *efficient* when no feasible point is at least as good on every criterion
//! and strictly better on one.
//!
//! Points fall into three classes by their support: vertices
//! (*deterministic*), relative interiors of proper faces (*partially
//! randomized*), and the interior of `X` (*randomized*). Efficiency of a
//! point depends only on its class and support, and is settled by at most three
//! small linear programs solved with the crate's own simplex code:
//!
//! ```
//! use molp_simplex::{fixtures, Analyzer, SimplexPoint, Tolerances, Verdict};
//!
//! let c = fixtures::worked_example();
//! let tol = Tolerances::default();
//! let analyzer = Analyzer::new(&c, tol).unwrap();
//! let x = SimplexPoint::new(vec![0.55, 0.45, 0.0], &tol).unwrap();
//! let report = analyzer.decide(&x).unwrap();
//! assert_eq!(report.verdict, Verdict::Efficient);
//! ```
//!
//! See the `examples/` directory of the crate for one program per capability.

pub mod cli;
pub mod efftest;
pub mod enumerate;
mod error;
pub mod fixtures;
pub mod lp;
pub mod model;
pub mod oracle;
pub mod scalarize;

pub use efftest::{
    build_t0, build_t1, build_t2, build_tied, decide, verify_certificate, verify_exact_certificate, Analyzer,
    EfficiencyReport, TestKind, TestOutcome, TestProgram, Verdict,
};
pub use enumerate::{
    bicriterion_full_check, check_full, enumerate_faces, enumerate_vertices, EfficientStructure,
    EnumerateOptions,
};
pub use error::{Error, Result};
pub use lp::{solve, LpError, LpSolution, LpStatus, Relation, StandardLp};
pub use model::{classify, vertex, CriteriaMatrix, PointClass, SimplexPoint, SupportPattern, Tolerances};
pub use oracle::{dominance_lp_verdict, sample_dominators};
pub use scalarize::{
    argmax_set, solution_set, weighted_objective, ObjectiveVector, SolutionSetDescriptor, WeightVector,
};
