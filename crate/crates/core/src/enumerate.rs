//! Whole-problem structure of the efficient set.
//!
//! The efficient set is a union of efficient vertices and efficient open
//! faces (relative interiors of faces spanned by 2..n-1 columns), or all of
//! `X`. Each open face is settled by its `T1` program, each vertex by its
//! `T2` program, with the tie-tolerant program as a fallback for zero optima.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::efftest::Analyzer;
use crate::error::{Error, Result};
use crate::model::{CriteriaMatrix, PointClass, SupportPattern, Tolerances};
use crate::scalarize::WeightVector;

/// Largest `n` scanned exhaustively unless explicitly overridden.
pub const MAX_ENUMERATION_N: usize = 16;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Only scan faces with at most this many columns.
    pub max_support: Option<usize>,
    /// Lift the [`MAX_ENUMERATION_N`] cap.
    pub allow_large_n: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EfficientStructure {
    /// Every feasible point is efficient.
    pub full: bool,
    pub vertices: BTreeSet<usize>,
    pub faces: BTreeSet<SupportPattern>,
    /// Whether every support size `2..=n-1` was scanned.
    pub exhaustive: bool,
    /// The `T0` certificate when `full` holds.
    pub certificate: Option<WeightVector>,
    pub warnings: Vec<String>,
}

/// Certificate of `X_E = X` when `T0` has a positive optimum, `None` otherwise.
pub fn check_full(analyzer: &Analyzer<'_>) -> Result<Option<WeightVector>> {
    let t0 = analyzer.t0()?;
    if !t0.is_positive() {
        return Ok(None);
    }
    analyzer.certificate(&t0, &PointClass::Randomized).map(Some)
}

/// Indices `j` whose vertex `e_j` is efficient.
pub fn enumerate_vertices(analyzer: &Analyzer<'_>) -> Result<BTreeSet<usize>> {
    let n = analyzer.matrix().n();
    if analyzer.t0()?.is_positive() {
        return Ok((0..n).collect());
    }
    let mut out = BTreeSet::new();
    for j in 0..n {
        if analyzer
            .support_test(&SupportPattern::singleton(j))?
            .is_positive()
        {
            out.insert(j);
        }
    }
    Ok(out)
}

/// Every support pattern of size `2..=max_size`, in size then lexicographic order.
pub fn face_patterns(n: usize, max_size: usize) -> impl Iterator<Item = SupportPattern> {
    (2..=max_size.min(n.saturating_sub(1))).flat_map(move |p| {
        (0..n)
            .combinations(p)
            .map(move |idx| SupportPattern::new(idx, n).expect("combinations are valid patterns"))
    })
}

pub fn enumerate_faces(analyzer: &Analyzer<'_>, options: EnumerateOptions) -> Result<EfficientStructure> {
    let n = analyzer.matrix().n();
    let mut warnings = Vec::new();
    if n > MAX_ENUMERATION_N {
        if !options.allow_large_n {
            return Err(Error::SizeCap {
                n,
                cap: MAX_ENUMERATION_N,
            });
        }
        warnings.push(format!(
            "n = {n} exceeds {MAX_ENUMERATION_N}; the face scan visits up to 2^{n} patterns"
        ));
    }
    let cap = options.max_support.unwrap_or(n).min(n.saturating_sub(1));
    let exhaustive = cap + 1 >= n;
    if !exhaustive {
        warnings.push(format!("face scan limited to supports of size <= {cap}"));
    }

    let certificate = check_full(analyzer)?;
    let full = certificate.is_some();
    let vertices = enumerate_vertices(analyzer)?;
    let mut faces = BTreeSet::new();
    for s in face_patterns(n, cap) {
        if full || analyzer.support_test(&s)?.is_positive() {
            faces.insert(s);
        }
    }
    Ok(EfficientStructure {
        full,
        vertices,
        faces,
        exhaustive,
        certificate,
        warnings,
    })
}

/// Closed-form sufficient condition for `X_E = X` with two criteria: all
/// ratios `(c_{2,j+1} - c_{2,j}) / (c_{1,j} - c_{1,j+1})` agree (relative
/// tolerance `tol.d` against the first) and are positive.
pub fn bicriterion_full_check(c: &CriteriaMatrix, tol: &Tolerances) -> Result<bool> {
    if c.k() != 2 {
        return Err(Error::DimensionMismatch {
            what: "criteria count for the bicriterion check",
            expected: 2,
            found: c.k(),
        });
    }
    let (r1, r2) = (c.row(0), c.row(1));
    let mut ratios = Vec::with_capacity(c.n() - 1);
    for j in 0..c.n() - 1 {
        let denom = r1[j] - r1[j + 1];
        if denom == 0.0 {
            return Err(Error::Precondition(format!(
                "first criterion has equal entries in columns {} and {}",
                j + 1,
                j + 2
            )));
        }
        ratios.push((r2[j + 1] - r2[j]) / denom);
    }
    let first = ratios[0];
    Ok(first > 0.0 && ratios.iter().all(|r| (r - first).abs() <= tol.d * first.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::efftest::verify_certificate;
    use crate::fixtures::{all_efficient, worked_example};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn worked_example_structure() {
        let c = worked_example();
        let a = Analyzer::new(&c, tol()).unwrap();
        assert!(check_full(&a).unwrap().is_none());
        let s = enumerate_faces(&a, EnumerateOptions::default()).unwrap();
        assert!(!s.full && s.exhaustive);
        assert_eq!(s.vertices, BTreeSet::from([0, 1]));
        assert_eq!(
            s.faces,
            BTreeSet::from([SupportPattern::new(vec![0, 1], 3).unwrap()])
        );
        assert!(s.warnings.is_empty());
    }

    #[test]
    fn all_efficient_structure() {
        let c = all_efficient();
        let a = Analyzer::new(&c, tol()).unwrap();
        let cert = check_full(&a).unwrap().unwrap();
        assert!(verify_certificate(&c, &cert, &PointClass::Randomized, &tol()).unwrap());
        assert_eq!(enumerate_vertices(&a).unwrap(), BTreeSet::from([0, 1, 2]));
        let s = enumerate_faces(&a, EnumerateOptions::default()).unwrap();
        assert!(s.full);
        assert_eq!(s.faces.len(), 3);
    }

    #[test]
    fn dominant_column() {
        let c = CriteriaMatrix::from_rows(&[[5.0, 1.0, 2.0, 0.0], [3.0, 2.0, -1.0, 2.5]]).unwrap();
        let a = Analyzer::new(&c, tol()).unwrap();
        assert_eq!(enumerate_vertices(&a).unwrap(), BTreeSet::from([0]));
        let s = enumerate_faces(&a, EnumerateOptions::default()).unwrap();
        assert!(s.faces.is_empty());
    }

    #[test]
    fn two_columns_have_no_faces() {
        let c = CriteriaMatrix::from_rows(&[[2.0, 1.0], [4.0, -3.0]]).unwrap();
        let a = Analyzer::new(&c, tol()).unwrap();
        let s = enumerate_faces(&a, EnumerateOptions::default()).unwrap();
        assert_eq!(s.vertices, BTreeSet::from([0]));
        assert!(s.faces.is_empty() && s.exhaustive && !s.full);
    }

    #[test]
    fn support_cap_and_size_cap() {
        let c = worked_example();
        let a = Analyzer::new(&c, tol()).unwrap();
        let s = enumerate_faces(
            &a,
            EnumerateOptions {
                max_support: Some(1),
                allow_large_n: false,
            },
        )
        .unwrap();
        assert!(!s.exhaustive && s.faces.is_empty());
        assert_eq!(s.warnings.len(), 1);

        let big = CriteriaMatrix::from_row_major(2, 20, (0..40).map(|v| (v % 7) as f64).collect()).unwrap();
        let a = Analyzer::new(&big, tol()).unwrap();
        assert!(matches!(
            enumerate_faces(&a, EnumerateOptions::default()),
            Err(Error::SizeCap { n: 20, cap: 16 })
        ));
        let s = enumerate_faces(
            &a,
            EnumerateOptions {
                max_support: Some(2),
                allow_large_n: true,
            },
        )
        .unwrap();
        assert_eq!(s.warnings.len(), 2);
    }

    #[test]
    fn duplicated_columns() {
        // Columns 1 and 2 coincide and dominate column 3; neither vertex can be
        // separated from the other by a margin.
        let c = CriteriaMatrix::from_rows(&[[1.0, 1.0, 0.0], [1.0, 1.0, 0.0]]).unwrap();
        let a = Analyzer::new(&c, tol()).unwrap();
        assert!(!a.t2(0).unwrap().is_positive());
        assert_eq!(enumerate_vertices(&a).unwrap(), BTreeSet::from([0, 1]));
        let s = enumerate_faces(&a, EnumerateOptions::default()).unwrap();
        assert_eq!(
            s.faces,
            BTreeSet::from([SupportPattern::new(vec![0, 1], 3).unwrap()])
        );
    }

    #[test]
    fn face_pattern_count() {
        assert_eq!(face_patterns(3, 3).count(), 3);
        // 2^n - n - 2 proper faces with at least two columns.
        assert_eq!(face_patterns(6, 6).count(), 64 - 6 - 2);
        assert_eq!(face_patterns(6, 3).count(), 15 + 20);
        assert_eq!(face_patterns(2, 2).count(), 0);
    }

    #[test]
    fn bicriterion_examples() {
        let c = CriteriaMatrix::from_rows(&[[3.0, 2.0, 1.0], [1.0, 2.0, 3.0]]).unwrap();
        assert!(bicriterion_full_check(&c, &tol()).unwrap());
        let a = Analyzer::new(&c, tol()).unwrap();
        assert!(check_full(&a).unwrap().is_some());

        let c = CriteriaMatrix::from_rows(&[[1.0, 2.0, 3.0], [1.0, 2.0, 3.0]]).unwrap();
        assert!(!bicriterion_full_check(&c, &tol()).unwrap());

        let c = CriteriaMatrix::from_rows(&[[1.0, 1.0, 2.0], [0.0, 5.0, 1.0]]).unwrap();
        assert!(matches!(
            bicriterion_full_check(&c, &tol()),
            Err(Error::Precondition(_))
        ));

        let c = CriteriaMatrix::from_rows(&[[1.0, 2.0], [1.0, 2.0], [0.0, 0.0]]).unwrap();
        assert!(matches!(
            bicriterion_full_check(&c, &tol()),
            Err(Error::DimensionMismatch { .. })
        ));

        // Unequal positive ratios: 1 then 2.
        let c = CriteriaMatrix::from_rows(&[[3.0, 2.0, 1.0], [0.0, 1.0, 3.0]]).unwrap();
        assert!(!bicriterion_full_check(&c, &tol()).unwrap());
    }
}
