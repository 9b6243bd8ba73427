//! Decides a handful of points for the three-criteria, three-column example.

use molp_simplex::cli::render_report_text;
use molp_simplex::{fixtures, Analyzer, SimplexPoint, Tolerances};

fn main() -> molp_simplex::Result<()> {
    let c = fixtures::worked_example();
    let tol = Tolerances::default();
    let analyzer = Analyzer::new(&c, tol)?;

    for coords in [
        vec![0.55, 0.45, 0.0],
        vec![1.0, 0.0, 0.0],
        vec![0.0, 0.0, 1.0],
        vec![0.3, 0.0, 0.7],
        vec![0.2, 0.3, 0.5],
    ] {
        let x = SimplexPoint::new(coords, &tol)?;
        print!("{}", render_report_text(&analyzer.decide(&x)?));
        println!();
    }
    Ok(())
}
