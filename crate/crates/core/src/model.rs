//! Problem data and point classification.
//!
//! The problem is `VMAX Cx` subject to `x` in the probability simplex
//! `X = { x in R^n : x >= 0, sum(x) = 1 }`, where `C` is a `k x n` criteria
//! matrix. Column indices are 0-based in this crate; the command line and
//! JSON reports translate them to 1-based.

use std::fmt;

use crate::error::{Error, Result};

/// Numeric thresholds shared by every analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Components at or below this value count as zero.
    pub x: f64,
    /// Absolute tie threshold when comparing weighted objective coefficients.
    pub d: f64,
    /// Pivot, ratio-test and reduced-cost tolerance of the simplex solver.
    pub lp: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            x: 1e-9,
            d: 1e-7,
            lp: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn new(x: f64, d: f64, lp: f64) -> Result<Self> {
        let tol = Self { x, d, lp };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("tol-x", self.x), ("tol-d", self.d), ("tol-lp", self.lp)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidTolerances(format!(
                    "{name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        if self.lp > self.d {
            return Err(Error::InvalidTolerances(format!(
                "tol-lp ({}) must not exceed tol-d ({})",
                self.lp, self.d
            )));
        }
        Ok(())
    }
}

/// The `k x n` matrix whose rows are the criteria `c_1, ..., c_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct CriteriaMatrix {
    k: usize,
    n: usize,
    entries: Vec<f64>,
}

impl CriteriaMatrix {
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let k = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(k * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, row 1 has {n}",
                    i + 1,
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Self::from_row_major(k, n, entries)
    }

    pub fn from_row_major(k: usize, n: usize, entries: Vec<f64>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidMatrix(format!("need at least 2 criteria, got {k}")));
        }
        if n < 2 {
            return Err(Error::InvalidMatrix(format!("need at least 2 columns, got {n}")));
        }
        if entries.len() != k * n {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for a {k}x{n} matrix, got {}",
                k * n,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidMatrix(format!(
                "entry ({}, {}) is not finite",
                pos / n + 1,
                pos % n + 1
            )));
        }
        Ok(Self { k, n, entries })
    }

    /// Number of criteria.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of columns, i.e. the dimension of the simplex.
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks_exact(self.n)
    }

    /// `Cx`, the criterion values at `x`.
    pub fn evaluate(&self, x: &[f64]) -> Vec<f64> {
        self.rows()
            .map(|row| row.iter().zip(x).map(|(c, v)| c * v).sum())
            .collect()
    }
}

/// A feasible point of the probability simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint {
    coords: Vec<f64>,
    clamped: Vec<usize>,
}

impl SimplexPoint {
    /// Validates `coords` against the simplex constraints.
    ///
    /// Components in `[-tol.x, 0)` are clamped to zero; anything more negative
    /// is rejected. The sum must lie within `n * tol.x` of one after clamping.
    /// Points are never renormalized.
    pub fn new(coords: Vec<f64>, tol: &Tolerances) -> Result<Self> {
        let n = coords.len();
        if n < 2 {
            return Err(Error::InvalidPoint(format!(
                "need at least 2 components, got {n}"
            )));
        }
        let mut coords = coords;
        let mut clamped = Vec::new();
        for (j, v) in coords.iter_mut().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidPoint(format!("component {} is not finite", j + 1)));
            }
            if *v < -tol.x {
                return Err(Error::InvalidPoint(format!(
                    "component {} = {v} is negative",
                    j + 1
                )));
            }
            if *v < 0.0 {
                *v = 0.0;
                clamped.push(j);
            }
        }
        let sum: f64 = coords.iter().sum();
        if (sum - 1.0).abs() > n as f64 * tol.x {
            return Err(Error::InvalidPoint(format!("components sum to {sum}, not 1")));
        }
        Ok(Self { coords, clamped })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// Indices of components that were nonzero on input but are read as zero:
    /// small negatives clamped at construction, plus positives `<= tol.x`.
    pub fn clamped(&self, tol: &Tolerances) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0.0 && v <= tol.x)
            .map(|(j, _)| j)
            .chain(self.clamped.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Equal weight on every index of `support`.
    pub fn barycenter(support: &SupportPattern, n: usize) -> Result<Self> {
        if support.max_index() >= n {
            return Err(Error::IndexOutOfRange {
                index: support.max_index(),
                n,
            });
        }
        let w = 1.0 / support.len() as f64;
        let mut coords = vec![0.0; n];
        for &j in support.indices() {
            coords[j] = w;
        }
        Ok(Self {
            coords,
            clamped: Vec::new(),
        })
    }
}

/// The vertex `e_j` of the simplex.
pub fn vertex(j: usize, n: usize) -> Result<SimplexPoint> {
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    if n < 2 {
        return Err(Error::InvalidPoint(format!(
            "need at least 2 components, got {n}"
        )));
    }
    let mut coords = vec![0.0; n];
    coords[j] = 1.0;
    Ok(SimplexPoint {
        coords,
        clamped: Vec::new(),
    })
}

/// A nonempty sorted set of distinct column indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportPattern(Vec<usize>);

impl SupportPattern {
    /// Sorts `indices`; rejects empty input, duplicates and indices `>= n`.
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidSupport("empty support".into()));
        }
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSupport(format!(
                "duplicate index in {:?}",
                indices.iter().map(|j| j + 1).collect::<Vec<_>>()
            )));
        }
        if let Some(&last) = indices.last() {
            if last >= n {
                return Err(Error::IndexOutOfRange { index: last, n });
            }
        }
        Ok(Self(indices))
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn singleton(j: usize) -> Self {
        Self(vec![j])
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    fn max_index(&self) -> usize {
        *self.0.last().expect("support is nonempty")
    }

    /// Columns of `0..n` outside the pattern.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|j| !self.contains(*j)).collect()
    }

    /// 1-based indices, as used in reports.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|j| j + 1).collect()
    }
}

impl fmt::Display for SupportPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, j) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", j + 1)?;
        }
        write!(f, "}}")
    }
}

/// Deterministic points are vertices, randomized points have full support,
/// partially randomized points lie in the relative interior of a proper face.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PointClass {
    Deterministic(usize),
    PartiallyRandomized(SupportPattern),
    Randomized,
}

impl PointClass {
    /// The index set of positive components this class stands for.
    pub fn support(&self, n: usize) -> SupportPattern {
        match self {
            PointClass::Deterministic(j) => SupportPattern::singleton(*j),
            PointClass::PartiallyRandomized(s) => s.clone(),
            PointClass::Randomized => SupportPattern::full(n),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PointClass::Deterministic(_) => "deterministic",
            PointClass::PartiallyRandomized(_) => "partial",
            PointClass::Randomized => "randomized",
        }
    }
}

pub fn classify(x: &SimplexPoint, tol: &Tolerances) -> Result<PointClass> {
    let n = x.n();
    let support: Vec<usize> = x
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &v)| v > tol.x)
        .map(|(j, _)| j)
        .collect();
    match support.len() {
        0 => Err(Error::InvalidPoint(format!(
            "no component exceeds tol-x = {}",
            tol.x
        ))),
        1 => Ok(PointClass::Deterministic(support[0])),
        p if p == n => Ok(PointClass::Randomized),
        _ => Ok(PointClass::PartiallyRandomized(SupportPattern(support))),
    }
}
