//! Weighted sums and their optimal faces.

use molp_simplex::scalarize::{argmax_set, solution_set, weighted_objective, WeightVector};
use molp_simplex::{fixtures, Tolerances};

fn main() -> molp_simplex::Result<()> {
    let c = fixtures::worked_example();
    let tol = Tolerances::default();
    for w in [vec![1.0, 1.0, 1.0], vec![1.0, 1.0, 2.0], vec![3.0, 1.0, 1.0]] {
        let lambda = WeightVector::new(w);
        let d = weighted_objective(&c, &lambda)?;
        println!(
            "lambda {:?}: d = {:?}, argmax {}, optimal set {:?}",
            lambda.as_slice(),
            d.coeffs(),
            argmax_set(&d, &tol),
            solution_set(&c, &lambda, &tol)?
        );
    }
    Ok(())
}
