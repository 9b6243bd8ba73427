//! When is every feasible point efficient?

use molp_simplex::{bicriterion_full_check, check_full, fixtures, Analyzer, CriteriaMatrix, Tolerances};

fn main() -> molp_simplex::Result<()> {
    let tol = Tolerances::default();

    let c = fixtures::all_efficient();
    let analyzer = Analyzer::new(&c, tol)?;
    match check_full(&analyzer)? {
        Some(lambda) => println!("all efficient, lambda = {:?}", lambda.as_slice()),
        None => println!("not all efficient"),
    }

    // Two criteria: the ratio condition settles it without solving anything.
    for rows in [
        [[3.0, 2.0, 1.0], [1.0, 2.0, 3.0]],
        [[3.0, 2.0, 1.0], [0.0, 1.0, 3.0]],
    ] {
        let c = CriteriaMatrix::from_rows(&rows)?;
        let closed_form = bicriterion_full_check(&c, &tol)?;
        let via_lp = check_full(&Analyzer::new(&c, tol)?)?.is_some();
        println!("{rows:?}: ratio test {closed_form}, T0 {via_lp}");
    }
    Ok(())
}
