//! Compares the decision procedure with the dominance program and the sampler
//! on random integer matrices.

use molp_simplex::enumerate::face_patterns;
use molp_simplex::{
    dominance_lp_verdict, sample_dominators, vertex, Analyzer, CriteriaMatrix, SimplexPoint, Tolerances,
    Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> molp_simplex::Result<()> {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut points, mut disagreements, mut sampled) = (0, 0, 0);
    for _ in 0..200 {
        let (k, n) = (rng.random_range(2..=5), rng.random_range(2..=5));
        let entries = (0..k * n).map(|_| rng.random_range(-9..=9) as f64).collect();
        let c = CriteriaMatrix::from_row_major(k, n, entries)?;
        let analyzer = Analyzer::new(&c, tol)?;
        let xs = (0..n)
            .map(|j| vertex(j, n))
            .chain(face_patterns(n, n).map(|s| SimplexPoint::barycenter(&s, n)));
        for x in xs {
            let x = x?;
            points += 1;
            let ours = analyzer.decide(&x)?.verdict;
            if ours != dominance_lp_verdict(&c, &x, &tol)?.verdict {
                disagreements += 1;
            }
            if ours == Verdict::Dominated && sample_dominators(&c, &x, 2000, 5, &tol)?.is_some() {
                sampled += 1;
            }
        }
    }
    println!("{points} points, {disagreements} disagreements with the dominance program");
    println!("{sampled} dominated points confirmed by sampling");
    Ok(())
}
