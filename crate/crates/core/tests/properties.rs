use molp_simplex::enumerate::face_patterns;
use molp_simplex::{
    dominance_lp_verdict, enumerate_vertices, scalarize, vertex, Analyzer, CriteriaMatrix, SimplexPoint,
    SupportPattern, Tolerances, Verdict,
};
use proptest::prelude::*;

fn tol() -> Tolerances {
    Tolerances::default()
}

/// Small integer matrices with some columns copied or averaged from others,
/// which is where margin-based tests alone are not enough.
fn degenerate_matrix() -> impl Strategy<Value = CriteriaMatrix> {
    (2usize..=4, 3usize..=6).prop_flat_map(|(k, n)| {
        (
            proptest::collection::vec(-5i32..=5, k * n),
            proptest::collection::vec((0usize..n, 0usize..n, 0usize..n, any::<bool>()), 0..3),
        )
            .prop_map(move |(entries, edits)| {
                let mut m: Vec<f64> = entries.into_iter().map(f64::from).collect();
                for (dst, a, b, average) in edits {
                    for i in 0..k {
                        m[i * n + dst] = if average {
                            (m[i * n + a] + m[i * n + b]) / 2.0
                        } else {
                            m[i * n + a]
                        };
                    }
                }
                CriteriaMatrix::from_row_major(k, n, m).unwrap()
            })
    })
}

fn candidates(n: usize) -> impl Iterator<Item = SimplexPoint> {
    (0..n)
        .map(move |j| vertex(j, n).unwrap())
        .chain(face_patterns(n, n).map(move |s| SimplexPoint::barycenter(&s, n).unwrap()))
        .chain(std::iter::once(
            SimplexPoint::barycenter(&SupportPattern::full(n), n).unwrap(),
        ))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn verdicts_match_dominance_program(c in degenerate_matrix()) {
        let a = Analyzer::new(&c, tol()).unwrap();
        for x in candidates(c.n()) {
            let ours = a.decide(&x).unwrap();
            let theirs = dominance_lp_verdict(&c, &x, &tol()).unwrap().verdict;
            prop_assert_eq!(ours.verdict, theirs, "x = {:?}", x.coords());
        }
    }

    #[test]
    fn certificates_make_the_point_optimal(c in degenerate_matrix()) {
        let a = Analyzer::new(&c, tol()).unwrap();
        for x in candidates(c.n()) {
            let r = a.decide(&x).unwrap();
            if let Some(lambda) = r.certificate {
                prop_assert_eq!(r.verdict, Verdict::Efficient);
                let d = scalarize::weighted_objective(&c, &lambda).unwrap();
                let at_x: f64 = d.coeffs().iter().zip(x.coords()).map(|(a, b)| a * b).sum();
                prop_assert!(d.dmax() - at_x <= 1e-7 * (1.0 + d.dmax().abs()));
            }
        }
    }

    #[test]
    fn positive_t0_covers_every_point(c in degenerate_matrix()) {
        let a = Analyzer::new(&c, tol()).unwrap();
        if a.t0().unwrap().is_positive() {
            for x in candidates(c.n()) {
                prop_assert_eq!(a.decide(&x).unwrap().verdict, Verdict::Efficient);
            }
        }
    }

    #[test]
    fn some_vertex_is_efficient(c in degenerate_matrix()) {
        let a = Analyzer::new(&c, tol()).unwrap();
        prop_assert!(!enumerate_vertices(&a).unwrap().is_empty());
    }
}
