//! Text rendering of verdicts over the triangle for a three-column problem.
//! `#` marks efficient grid points, `.` dominated ones; the bottom row is x3 = 0.

use molp_simplex::cli::barycentric_grid;
use molp_simplex::{fixtures, Analyzer, SimplexPoint, Tolerances};

fn main() -> molp_simplex::Result<()> {
    let density = 12;
    let c = fixtures::worked_example();
    let tol = Tolerances::default();
    let analyzer = Analyzer::new(&c, tol)?;
    let grid = barycentric_grid(density);
    for level in (0..=density).rev() {
        let mut line = " ".repeat(density - level);
        for p in grid
            .iter()
            .filter(|p| (p[2] * density as f64).round() as usize == level)
        {
            let x = SimplexPoint::new(p.to_vec(), &tol)?;
            line.push(if analyzer.decide(&x)?.verdict.is_efficient() {
                '#'
            } else {
                '.'
            });
            line.push(' ');
        }
        println!("{line}");
    }
    Ok(())
}
