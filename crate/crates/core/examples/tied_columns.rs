//! Duplicated columns: no weight separates columns 2 and 3 by a margin, so the
//! strict vertex test is zero for both, yet both vertices are efficient.

use molp_simplex::{vertex, Analyzer, CriteriaMatrix, Tolerances};

fn main() -> molp_simplex::Result<()> {
    let c = CriteriaMatrix::from_rows(&[[-2.0, 9.0, 9.0, -5.0], [1.0, 7.0, 7.0, -2.0]])?;
    let analyzer = Analyzer::new(&c, Tolerances::default())?;
    for j in 0..c.n() {
        let strict = analyzer.t2(j)?;
        let report = analyzer.decide(&vertex(j, c.n())?)?;
        println!(
            "e_{}: {} = {}, verdict {} via {} = {}",
            j + 1,
            strict.kind,
            strict.value,
            report.verdict.label(),
            report.test,
            report.value
        );
    }
    Ok(())
}
