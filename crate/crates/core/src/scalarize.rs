//! Weighted-sum scalarization over the simplex.
//!
//! For weights `lambda` the scalar program `max (lambda^T C) x, x in X` has a
//! closed-form optimal set determined by which coefficients of
//! `d = lambda^T C` attain the maximum: all of `X`, a single vertex, or the
//! face spanned by the tied columns. That face is closed: its boundary points
//! put weight only on tied columns and are optimal too.

use crate::error::{Error, Result};
use crate::model::{CriteriaMatrix, SupportPattern, Tolerances};

#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Self {
        Self(weights)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Membership in the open positive orthant. No tolerance is applied.
    pub fn is_strictly_positive(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&w| w > 0.0 && w.is_finite())
    }

    /// Rescales so the smallest weight equals one. Requires strict positivity.
    pub fn normalized_min_one(&self) -> Option<Self> {
        if !self.is_strictly_positive() {
            return None;
        }
        let min = self.0.iter().copied().fold(f64::INFINITY, f64::min);
        Some(Self(self.0.iter().map(|w| w / min).collect()))
    }

    pub fn scaled(&self, t: f64) -> Self {
        Self(self.0.iter().map(|w| w * t).collect())
    }
}

impl From<Vec<f64>> for WeightVector {
    fn from(v: Vec<f64>) -> Self {
        Self(v)
    }
}

/// `d = lambda^T C` together with its largest component.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveVector {
    coeffs: Vec<f64>,
    dmax: f64,
}

impl ObjectiveVector {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let dmax = coeffs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self { coeffs, dmax }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn dmax(&self) -> f64 {
        self.dmax
    }
}

/// Optimal solution set of the weighted program.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SolutionSetDescriptor {
    AllOfX,
    Vertex(usize),
    /// Face spanned by the pattern, `2 <= |S| <= n-1`. From
    /// [`solution_set`] the whole closed face is optimal; in an efficiency
    /// report it names the points whose support is exactly the pattern.
    OpenFace(SupportPattern),
}

impl SolutionSetDescriptor {
    pub fn kind(&self) -> &'static str {
        match self {
            SolutionSetDescriptor::AllOfX => "all",
            SolutionSetDescriptor::Vertex(_) => "vertex",
            SolutionSetDescriptor::OpenFace(_) => "open-face",
        }
    }

    pub fn support(&self, n: usize) -> SupportPattern {
        match self {
            SolutionSetDescriptor::AllOfX => SupportPattern::full(n),
            SolutionSetDescriptor::Vertex(j) => SupportPattern::singleton(*j),
            SolutionSetDescriptor::OpenFace(s) => s.clone(),
        }
    }

    /// Maps an argmax set to the descriptor it induces.
    pub fn from_argmax(set: SupportPattern, n: usize) -> Self {
        match set.len() {
            1 => SolutionSetDescriptor::Vertex(set.first()),
            p if p == n => SolutionSetDescriptor::AllOfX,
            _ => SolutionSetDescriptor::OpenFace(set),
        }
    }
}

pub fn weighted_objective(c: &CriteriaMatrix, lambda: &WeightVector) -> Result<ObjectiveVector> {
    if lambda.len() != c.k() {
        return Err(Error::DimensionMismatch {
            what: "weight vector",
            expected: c.k(),
            found: lambda.len(),
        });
    }
    let mut coeffs = vec![0.0; c.n()];
    for (row, &w) in c.rows().zip(lambda.as_slice()) {
        for (d, &cij) in coeffs.iter_mut().zip(row) {
            *d += w * cij;
        }
    }
    Ok(ObjectiveVector::new(coeffs))
}

/// `{ j : d_j >= dmax - tol.d }`.
pub fn argmax_set(d: &ObjectiveVector, tol: &Tolerances) -> SupportPattern {
    let threshold = d.dmax - tol.d;
    let indices: Vec<usize> = d
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, &v)| v >= threshold)
        .map(|(j, _)| j)
        .collect();
    SupportPattern::new(indices, d.coeffs.len()).expect("argmax of a nonempty vector is nonempty")
}

pub fn solution_set(
    c: &CriteriaMatrix,
    lambda: &WeightVector,
    tol: &Tolerances,
) -> Result<SolutionSetDescriptor> {
    let d = weighted_objective(c, lambda)?;
    Ok(SolutionSetDescriptor::from_argmax(argmax_set(&d, tol), c.n()))
}
