//! The bundled simplex solver on its own.

use molp_simplex::{lp, Relation, StandardLp, Tolerances};

fn main() -> Result<(), lp::LpError> {
    // max 3a + 2b  s.t.  a + b <= 4,  a + 3b <= 6,  a <= 3,  b free but >= -1.
    let mut p = StandardLp::new(2);
    p.set_objective_coeff(0, 3.0);
    p.set_objective_coeff(1, 2.0);
    p.add_sparse_constraint(&[(0, 1.0), (1, 1.0)], Relation::Le, 4.0);
    p.add_sparse_constraint(&[(0, 1.0), (1, 3.0)], Relation::Le, 6.0);
    p.set_bounds(0, 0.0, 3.0);
    p.set_bounds(1, -1.0, f64::INFINITY);
    let sol = lp::solve(&p, &Tolerances::default())?;
    println!(
        "{:?}: value {:?} at {:?} after {} pivots",
        sol.status, sol.value, sol.point, sol.iterations
    );

    p.add_sparse_constraint(&[(0, 1.0)], Relation::Ge, 5.0);
    println!("with a >= 5: {:?}", lp::solve(&p, &Tolerances::default())?.status);
    Ok(())
}
