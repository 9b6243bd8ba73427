//! Efficiency tests for single points.
//!
//! Three auxiliary linear programs decide efficiency:
//!
//! * `T0` maximizes `eps` subject to `(lambda^T C)_j = (lambda^T C)_{j+1}`
//!   for consecutive columns, `lambda_i >= eps` and `eps <= 1`. A positive
//!   optimum means every feasible point is efficient.
//! * `T1(S)` asks for weights whose weighted coefficients tie on the support
//!   `S` of a partially randomized point and beat every column outside `S` by
//!   a margin `eps_j`; it maximizes `eps_m <= min(eps, eps_j)`.
//! * `T2(j)` is the same program for the single column of a vertex `e_j`.
//!
//! A positive `T1`/`T2` optimum proves efficiency, but a zero does not prove
//! domination: when several columns share an objective value for every
//! admissible weight (duplicated columns, or columns on a common supporting
//! hyperplane) no margin can separate them, yet the whole closed face they span
//! can be optimal. The tie-tolerant program `T*(S)` drops the margins and only
//! asks for `lambda > 0` with `S` inside the argmax set. It settles every point
//! whose strict program came out zero.
//!
//! All variables are free. Every constraint is positively homogeneous in the
//! variables except `eps <= 1`, so each optimum is either 0 or 1; a value
//! above one half is read as positive.
//!
//! [`Analyzer`] binds one criteria matrix and memoizes `T0` as well as every
//! `T1` / `T2` outcome, so points sharing a support pattern are solved once.
//! Its caches sit behind mutexes: an analyzer may be shared between threads,
//! and concurrent callers at worst solve the same program twice.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::lp::{self, LpError, LpStatus, Relation, StandardLp};
use crate::model::{classify, CriteriaMatrix, PointClass, SimplexPoint, SupportPattern, Tolerances};
use crate::scalarize::{argmax_set, weighted_objective, SolutionSetDescriptor, WeightVector};

/// Test optima above this value count as positive.
pub const POSITIVE_THRESHOLD: f64 = 0.5;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TestKind {
    T0,
    T1(SupportPattern),
    T2(usize),
    /// Tie-tolerant variant for a support of size `1..=n-1`.
    Tied(SupportPattern),
}

impl TestKind {
    pub fn label(&self) -> &'static str {
        match self {
            TestKind::T0 => "T0",
            TestKind::T1(_) => "T1",
            TestKind::T2(_) => "T2",
            TestKind::Tied(s) if s.len() == 1 => "T2",
            TestKind::Tied(_) => "T1",
        }
    }

    pub fn allows_ties(&self) -> bool {
        matches!(self, TestKind::Tied(_))
    }
}

impl fmt::Display for TestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestKind::T0 => write!(f, "T0"),
            TestKind::T1(s) => write!(f, "T1({s})"),
            TestKind::T2(j) => write!(f, "T2({})", j + 1),
            TestKind::Tied(s) if s.len() == 1 => write!(f, "T2*({})", s.first() + 1),
            TestKind::Tied(s) => write!(f, "T1*({s})"),
        }
    }
}

/// One of the auxiliary programs with the positions of its variables.
#[derive(Debug, Clone)]
pub struct TestProgram {
    pub kind: TestKind,
    pub lp: StandardLp,
    /// `lambda_i` lives at variable `i` for `i < k`.
    pub k: usize,
    pub epsilon: usize,
    /// `(column j, variable of eps_j)` for every column outside the support.
    pub gaps: Vec<(usize, usize)>,
    /// Variable of `eps_m`; absent for `T0`, which maximizes `eps` directly.
    pub epsilon_min: Option<usize>,
}

/// Solved test program.
#[derive(Debug, Clone, PartialEq)]
pub struct TestOutcome {
    pub kind: TestKind,
    pub value: f64,
    /// Raw weights from the optimal point, before any normalization.
    pub lambda: Vec<f64>,
    pub iterations: usize,
}

impl TestOutcome {
    pub fn is_positive(&self) -> bool {
        self.value > POSITIVE_THRESHOLD
    }
}

/// Adds `sign * (lambda^T C)_j` to `terms`.
fn push_column(c: &CriteriaMatrix, j: usize, sign: f64, terms: &mut Vec<(usize, f64)>) {
    terms.extend((0..c.k()).map(|i| (i, sign * c.get(i, j))));
}

pub fn build_t0(c: &CriteriaMatrix) -> TestProgram {
    let (k, n) = (c.k(), c.n());
    let eps = k;
    let mut lp = StandardLp::new(k + 1);
    (0..=k).for_each(|v| lp.set_free(v));
    lp.set_objective_coeff(eps, 1.0);
    for j in 0..n - 1 {
        let mut terms = Vec::with_capacity(2 * k);
        push_column(c, j, 1.0, &mut terms);
        push_column(c, j + 1, -1.0, &mut terms);
        lp.add_sparse_constraint(&terms, Relation::Eq, 0.0);
    }
    for i in 0..k {
        lp.add_sparse_constraint(&[(i, 1.0), (eps, -1.0)], Relation::Ge, 0.0);
    }
    lp.add_sparse_constraint(&[(eps, 1.0)], Relation::Le, 1.0);
    TestProgram {
        kind: TestKind::T0,
        lp,
        k,
        epsilon: eps,
        gaps: Vec::new(),
        epsilon_min: None,
    }
}

/// Shared construction of `T1(S)` (`|S| >= 2`) and `T2(j)` (`S = {j}`).
fn build_margin_program(c: &CriteriaMatrix, support: &SupportPattern, kind: TestKind) -> TestProgram {
    let k = c.k();
    let outside = support.complement(c.n());
    let eps = k;
    let gaps: Vec<(usize, usize)> = outside
        .iter()
        .enumerate()
        .map(|(pos, &j)| (j, k + 1 + pos))
        .collect();
    let eps_m = k + 1 + gaps.len();
    let mut lp = StandardLp::new(eps_m + 1);
    (0..=eps_m).for_each(|v| lp.set_free(v));
    lp.set_objective_coeff(eps_m, 1.0);

    let idx = support.indices();
    for w in idx.windows(2) {
        let mut terms = Vec::with_capacity(2 * k);
        push_column(c, w[0], 1.0, &mut terms);
        push_column(c, w[1], -1.0, &mut terms);
        lp.add_sparse_constraint(&terms, Relation::Eq, 0.0);
    }
    let lead = support.first();
    for &(j, var) in &gaps {
        let mut terms = Vec::with_capacity(2 * k + 1);
        push_column(c, lead, 1.0, &mut terms);
        push_column(c, j, -1.0, &mut terms);
        terms.push((var, -1.0));
        lp.add_sparse_constraint(&terms, Relation::Ge, 0.0);
    }
    for i in 0..k {
        lp.add_sparse_constraint(&[(i, 1.0), (eps, -1.0)], Relation::Ge, 0.0);
    }
    for &(_, var) in &gaps {
        lp.add_sparse_constraint(&[(eps_m, 1.0), (var, -1.0)], Relation::Le, 0.0);
    }
    lp.add_sparse_constraint(&[(eps_m, 1.0), (eps, -1.0)], Relation::Le, 0.0);
    lp.add_sparse_constraint(&[(eps, 1.0)], Relation::Le, 1.0);
    TestProgram {
        kind,
        lp,
        k,
        epsilon: eps,
        gaps,
        epsilon_min: Some(eps_m),
    }
}

/// `T1(S)` for a support of size `2..=n-1`.
pub fn build_t1(c: &CriteriaMatrix, support: &SupportPattern) -> Result<TestProgram> {
    let n = c.n();
    if support.len() < 2 || support.len() + 1 > n {
        return Err(Error::InvalidSupport(format!(
            "T1 needs a support of size 2..={} , got {support}",
            n - 1
        )));
    }
    if support.indices().iter().any(|&j| j >= n) {
        return Err(Error::IndexOutOfRange {
            index: *support.indices().last().unwrap(),
            n,
        });
    }
    Ok(build_margin_program(c, support, TestKind::T1(support.clone())))
}

/// `T2(j)` for the vertex `e_j`.
pub fn build_t2(c: &CriteriaMatrix, j: usize) -> Result<TestProgram> {
    if j >= c.n() {
        return Err(Error::IndexOutOfRange { index: j, n: c.n() });
    }
    Ok(build_margin_program(
        c,
        &SupportPattern::singleton(j),
        TestKind::T2(j),
    ))
}

/// Tie-tolerant program for a support of size `1..=n-1`: maximize `eps`
/// subject to ties across the support, `(lambda^T C)_lead >= (lambda^T C)_j`
/// outside it, `lambda_i >= eps` and `eps <= 1`.
pub fn build_tied(c: &CriteriaMatrix, support: &SupportPattern) -> Result<TestProgram> {
    let (k, n) = (c.k(), c.n());
    if let Some(&last) = support.indices().last().filter(|&&j| j >= n) {
        return Err(Error::IndexOutOfRange { index: last, n });
    }
    if support.len() >= n {
        return Err(Error::InvalidSupport(format!(
            "tie-tolerant test needs a support of size 1..={}, got {support}",
            n - 1
        )));
    }
    let eps = k;
    let mut lp = StandardLp::new(k + 1);
    (0..=k).for_each(|v| lp.set_free(v));
    lp.set_objective_coeff(eps, 1.0);
    for w in support.indices().windows(2) {
        let mut terms = Vec::with_capacity(2 * k);
        push_column(c, w[0], 1.0, &mut terms);
        push_column(c, w[1], -1.0, &mut terms);
        lp.add_sparse_constraint(&terms, Relation::Eq, 0.0);
    }
    let lead = support.first();
    for j in support.complement(n) {
        let mut terms = Vec::with_capacity(2 * k);
        push_column(c, lead, 1.0, &mut terms);
        push_column(c, j, -1.0, &mut terms);
        lp.add_sparse_constraint(&terms, Relation::Ge, 0.0);
    }
    for i in 0..k {
        lp.add_sparse_constraint(&[(i, 1.0), (eps, -1.0)], Relation::Ge, 0.0);
    }
    lp.add_sparse_constraint(&[(eps, 1.0)], Relation::Le, 1.0);
    Ok(TestProgram {
        kind: TestKind::Tied(support.clone()),
        lp,
        k,
        epsilon: eps,
        gaps: Vec::new(),
        epsilon_min: None,
    })
}

impl TestProgram {
    pub fn objective_var(&self) -> usize {
        self.epsilon_min.unwrap_or(self.epsilon)
    }

    /// Solves the program. The test programs are always feasible (all zeros)
    /// and bounded (by 1), so any other status is a solver failure.
    pub fn solve(&self, tol: &Tolerances) -> Result<TestOutcome> {
        let sol = lp::solve(&self.lp, tol)?;
        match (sol.status, sol.value, sol.point) {
            (LpStatus::Optimal, Some(value), Some(point)) => Ok(TestOutcome {
                kind: self.kind.clone(),
                value,
                lambda: point[..self.k].to_vec(),
                iterations: sol.iterations,
            }),
            (status, ..) => Err(Error::Lp(LpError::NumericalBreakdown(format!(
                "{} reported {status:?} for a feasible bounded program",
                self.kind
            )))),
        }
    }
}

/// True iff `lambda` is strictly positive and every column in the support of
/// the class attains the maximum of `lambda^T C`, so that every point of that
/// class maximizes the weighted objective.
pub fn verify_certificate(
    c: &CriteriaMatrix,
    lambda: &WeightVector,
    class: &PointClass,
    tol: &Tolerances,
) -> Result<bool> {
    let d = weighted_objective(c, lambda)?;
    if !lambda.is_strictly_positive() {
        return Ok(false);
    }
    let best = argmax_set(&d, tol);
    Ok(class.support(c.n()).indices().iter().all(|&j| best.contains(j)))
}

/// Stricter check met by `T0`/`T1`/`T2` certificates: the argmax set is
/// exactly the support.
pub fn verify_exact_certificate(
    c: &CriteriaMatrix,
    lambda: &WeightVector,
    class: &PointClass,
    tol: &Tolerances,
) -> Result<bool> {
    let d = weighted_objective(c, lambda)?;
    if !lambda.is_strictly_positive() {
        return Ok(false);
    }
    Ok(argmax_set(&d, tol) == class.support(c.n()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Efficient,
    Dominated,
}

impl Verdict {
    pub fn is_efficient(self) -> bool {
        self == Verdict::Efficient
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Efficient => "efficient",
            Verdict::Dominated => "dominated",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EfficiencyReport {
    pub point: SimplexPoint,
    pub class: PointClass,
    pub verdict: Verdict,
    /// The program whose optimum decided the verdict. A zero strict `T1`/`T2`
    /// is always followed by the tie-tolerant program, which then decides.
    pub test: TestKind,
    pub value: f64,
    /// Weights with minimum component one; present iff efficient.
    pub certificate: Option<WeightVector>,
    /// Region shown efficient together with the point.
    pub face: Option<SolutionSetDescriptor>,
    /// Components read as zero although nonzero on input.
    pub clamped: Vec<usize>,
}

/// Decision procedure bound to one criteria matrix, with memoized tests.
#[derive(Debug)]
pub struct Analyzer<'m> {
    matrix: &'m CriteriaMatrix,
    tol: Tolerances,
    t0: Mutex<Option<TestOutcome>>,
    t1: Mutex<HashMap<SupportPattern, TestOutcome>>,
    t2: Mutex<HashMap<usize, TestOutcome>>,
    tied: Mutex<HashMap<SupportPattern, TestOutcome>>,
}

impl<'m> Analyzer<'m> {
    pub fn new(matrix: &'m CriteriaMatrix, tol: Tolerances) -> Result<Self> {
        tol.validate()?;
        Ok(Self {
            matrix,
            tol,
            t0: Mutex::new(None),
            t1: Mutex::new(HashMap::new()),
            t2: Mutex::new(HashMap::new()),
            tied: Mutex::new(HashMap::new()),
        })
    }

    pub fn matrix(&self) -> &'m CriteriaMatrix {
        self.matrix
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn t0(&self) -> Result<TestOutcome> {
        if let Some(hit) = self.t0.lock().unwrap().as_ref() {
            return Ok(hit.clone());
        }
        let outcome = build_t0(self.matrix).solve(&self.tol)?;
        *self.t0.lock().unwrap() = Some(outcome.clone());
        Ok(outcome)
    }

    pub fn t1(&self, support: &SupportPattern) -> Result<TestOutcome> {
        if let Some(hit) = self.t1.lock().unwrap().get(support) {
            return Ok(hit.clone());
        }
        let outcome = build_t1(self.matrix, support)?.solve(&self.tol)?;
        self.t1.lock().unwrap().insert(support.clone(), outcome.clone());
        Ok(outcome)
    }

    pub fn t2(&self, j: usize) -> Result<TestOutcome> {
        if let Some(hit) = self.t2.lock().unwrap().get(&j) {
            return Ok(hit.clone());
        }
        let outcome = build_t2(self.matrix, j)?.solve(&self.tol)?;
        self.t2.lock().unwrap().insert(j, outcome.clone());
        Ok(outcome)
    }

    pub fn tied(&self, support: &SupportPattern) -> Result<TestOutcome> {
        if let Some(hit) = self.tied.lock().unwrap().get(support) {
            return Ok(hit.clone());
        }
        let outcome = build_tied(self.matrix, support)?.solve(&self.tol)?;
        self.tied.lock().unwrap().insert(support.clone(), outcome.clone());
        Ok(outcome)
    }

    /// Settles the open face with the given support (a vertex when it has one
    /// column): the strict program, then the tie-tolerant one if the strict
    /// optimum is zero. Positive iff the points of that support are efficient,
    /// unless `T0` already covers everything.
    pub fn support_test(&self, support: &SupportPattern) -> Result<TestOutcome> {
        let strict = match support.len() {
            1 => self.t2(support.first())?,
            _ => self.t1(support)?,
        };
        if strict.is_positive() {
            Ok(strict)
        } else {
            self.tied(support)
        }
    }

    /// Normalized, verified certificate for a positive outcome.
    pub fn certificate(&self, outcome: &TestOutcome, class: &PointClass) -> Result<WeightVector> {
        let rejected = || Error::CertificateRejected {
            test: outcome.kind.to_string(),
        };
        let lambda = WeightVector::new(outcome.lambda.clone())
            .normalized_min_one()
            .ok_or_else(rejected)?;
        let verify = if outcome.kind.allows_ties() {
            verify_certificate
        } else {
            verify_exact_certificate
        };
        if verify(self.matrix, &lambda, class, &self.tol)? {
            Ok(lambda)
        } else {
            Err(rejected())
        }
    }

    /// Runs the decision procedure on `x`.
    pub fn decide(&self, x: &SimplexPoint) -> Result<EfficiencyReport> {
        let n = self.matrix.n();
        if x.n() != n {
            return Err(Error::DimensionMismatch {
                what: "point",
                expected: n,
                found: x.n(),
            });
        }
        let class = classify(x, &self.tol)?;
        let clamped = x.clamped(&self.tol);
        let report = |verdict, outcome: TestOutcome, certificate, face| EfficiencyReport {
            point: x.clone(),
            class: class.clone(),
            verdict,
            test: outcome.kind,
            value: outcome.value,
            certificate,
            face,
            clamped: clamped.clone(),
        };

        let t0 = self.t0()?;
        if t0.is_positive() {
            let cert = self.certificate(&t0, &PointClass::Randomized)?;
            return Ok(report(
                Verdict::Efficient,
                t0,
                Some(cert),
                Some(SolutionSetDescriptor::AllOfX),
            ));
        }
        let outcome = match &class {
            PointClass::Randomized => return Ok(report(Verdict::Dominated, t0, None, None)),
            PointClass::PartiallyRandomized(s) => self.support_test(s)?,
            PointClass::Deterministic(j) => self.support_test(&SupportPattern::singleton(*j))?,
        };
        if !outcome.is_positive() {
            return Ok(report(Verdict::Dominated, outcome, None, None));
        }
        let cert = self.certificate(&outcome, &class)?;
        let face = match &class {
            PointClass::PartiallyRandomized(s) => SolutionSetDescriptor::OpenFace(s.clone()),
            PointClass::Deterministic(j) => SolutionSetDescriptor::Vertex(*j),
            PointClass::Randomized => unreachable!("randomized points are settled by T0"),
        };
        Ok(report(Verdict::Efficient, outcome, Some(cert), Some(face)))
    }
}

/// One-shot decision without memoization across calls.
pub fn decide(c: &CriteriaMatrix, x: &SimplexPoint, tol: &Tolerances) -> Result<EfficiencyReport> {
    Analyzer::new(c, *tol)?.decide(x)
}
