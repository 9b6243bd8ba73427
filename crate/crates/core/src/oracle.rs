//! Independent efficiency checks used to cross-validate the decision procedure.
//!
//! [`dominance_lp_verdict`] solves the classical slack formulation
//! `max sum(s)  s.t.  C y - s = C x,  y in X,  s >= 0`, whose optimum is zero
//! exactly when `x` is efficient. [`sample_dominators`] searches for a
//! dominating point by uniform sampling of the simplex; it can only ever
//! prove domination.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};

use crate::efftest::Verdict;
use crate::error::{Error, Result};
use crate::lp::{self, LpError, LpStatus, Relation, StandardLp};
use crate::model::{CriteriaMatrix, SimplexPoint, Tolerances};

#[derive(Debug, Clone, PartialEq)]
pub struct DominanceOutcome {
    pub verdict: Verdict,
    /// Optimal total slack.
    pub value: f64,
    /// The maximizing `y`; a dominator when the verdict is `Dominated`.
    pub witness: Vec<f64>,
}

fn check_dims(c: &CriteriaMatrix, x: &SimplexPoint) -> Result<()> {
    if x.n() != c.n() {
        return Err(Error::DimensionMismatch {
            what: "point",
            expected: c.n(),
            found: x.n(),
        });
    }
    Ok(())
}

pub fn dominance_lp(c: &CriteriaMatrix, x: &SimplexPoint) -> StandardLp {
    let (k, n) = (c.k(), c.n());
    let mut lp = StandardLp::new(n + k);
    for i in 0..k {
        lp.set_objective_coeff(n + i, 1.0);
    }
    lp.add_sparse_constraint(&(0..n).map(|j| (j, 1.0)).collect::<Vec<_>>(), Relation::Eq, 1.0);
    let cx = c.evaluate(x.coords());
    for (i, target) in cx.into_iter().enumerate() {
        let mut terms: Vec<(usize, f64)> = (0..n).map(|j| (j, c.get(i, j))).collect();
        terms.push((n + i, -1.0));
        lp.add_sparse_constraint(&terms, Relation::Eq, target);
    }
    lp
}

pub fn dominance_lp_verdict(
    c: &CriteriaMatrix,
    x: &SimplexPoint,
    tol: &Tolerances,
) -> Result<DominanceOutcome> {
    check_dims(c, x)?;
    let sol = lp::solve(&dominance_lp(c, x), tol)?;
    match (sol.status, sol.value, sol.point) {
        (LpStatus::Optimal, Some(value), Some(point)) => Ok(DominanceOutcome {
            verdict: if value <= 10.0 * tol.lp {
                Verdict::Efficient
            } else {
                Verdict::Dominated
            },
            value,
            witness: point[..c.n()].to_vec(),
        }),
        (status, ..) => Err(Error::Lp(LpError::NumericalBreakdown(format!(
            "dominance program reported {status:?}; it is feasible and bounded by construction"
        )))),
    }
}

/// Whether `cy` weakly dominates `cx` everywhere and beats it by more than
/// `margin` somewhere.
pub fn dominates(cy: &[f64], cx: &[f64], margin: f64) -> bool {
    cy.iter().zip(cx).all(|(a, b)| a >= b) && cy.iter().zip(cx).any(|(a, b)| a - b > margin)
}

/// Draws `trials` uniform points of the simplex and returns the first one
/// that dominates `x` (strict margin `tol.d`).
pub fn sample_dominators(
    c: &CriteriaMatrix,
    x: &SimplexPoint,
    trials: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<Option<SimplexPoint>> {
    check_dims(c, x)?;
    if trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    let n = c.n();
    let cx = c.evaluate(x.coords());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut y: Vec<f64> = (0..n).map(|_| Exp1.sample(&mut rng)).collect();
        let total: f64 = y.iter().sum();
        y.iter_mut().for_each(|v| *v /= total);
        if dominates(&c.evaluate(&y), &cx, tol.d) {
            return SimplexPoint::new(y, tol).map(Some);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::worked_example;
    use crate::model::vertex;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn worked_example_verdicts() {
        let c = worked_example();
        let x = SimplexPoint::new(vec![0.55, 0.45, 0.0], &tol()).unwrap();
        assert_eq!(
            dominance_lp_verdict(&c, &x, &tol()).unwrap().verdict,
            Verdict::Efficient
        );
        let out = dominance_lp_verdict(&c, &vertex(2, 3).unwrap(), &tol()).unwrap();
        assert_eq!(out.verdict, Verdict::Dominated);
        let cx = c.evaluate(&[0.0, 0.0, 1.0]);
        assert!(dominates(&c.evaluate(&out.witness), &cx, 0.0));
    }

    #[test]
    fn common_maximizer_is_efficient() {
        let c = CriteriaMatrix::from_rows(&[[1.0, 4.0, 2.0], [1.0, 4.0, 2.0]]).unwrap();
        let out = dominance_lp_verdict(&c, &vertex(1, 3).unwrap(), &tol()).unwrap();
        assert_eq!(out.verdict, Verdict::Efficient);
        assert_eq!(
            sample_dominators(&c, &vertex(1, 3).unwrap(), 2000, 7, &tol()).unwrap(),
            None
        );
    }

    #[test]
    fn sampler_finds_dominator_of_dominated_vertex() {
        let c = worked_example();
        let x = vertex(2, 3).unwrap();
        let y = sample_dominators(&c, &x, 10_000, 1, &tol())
            .unwrap()
            .expect("dominator");
        assert!(dominates(
            &c.evaluate(y.coords()),
            &c.evaluate(x.coords()),
            tol().d
        ));
    }

    #[test]
    fn sampler_is_reproducible() {
        let c = worked_example();
        let x = vertex(2, 3).unwrap();
        assert_eq!(
            sample_dominators(&c, &x, 500, 42, &tol()).unwrap(),
            sample_dominators(&c, &x, 500, 42, &tol()).unwrap()
        );
    }

    #[test]
    fn zero_trials_rejected() {
        let c = worked_example();
        assert!(matches!(
            sample_dominators(&c, &vertex(0, 3).unwrap(), 0, 0, &tol()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn efficient_points_have_no_sampled_dominators() {
        let c = worked_example();
        for coords in [vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.3, 0.7, 0.0]] {
            let x = SimplexPoint::new(coords, &tol()).unwrap();
            for seed in 0..5 {
                assert_eq!(sample_dominators(&c, &x, 2000, seed, &tol()).unwrap(), None);
            }
        }
    }
}
