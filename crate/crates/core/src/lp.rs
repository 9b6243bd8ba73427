//! Dense two-phase primal simplex.
//!
//! Problems are stated as maximization over per-variable bounds and rows of
//! the form `a.x (<= | = | >=) b`. Internally every variable is rewritten as a
//! nonnegative column (shifted, mirrored, or split into a difference of two
//! columns when free), finite upper bounds become explicit rows, and the
//! resulting system is solved on a dense tableau.
//!
//! Pivoting uses Dantzig's rule until `2 * (rows + columns)` consecutive
//! degenerate pivots have been taken in a phase, after which Bland's rule is
//! used for the rest of that phase.

use thiserror::Error;

use crate::model::Tolerances;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LpError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("non-finite data: {0}")]
    NonFinite(String),

    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StandardLp {
    objective: Vec<f64>,
    rows: Vec<Vec<f64>>,
    relations: Vec<Relation>,
    rhs: Vec<f64>,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl StandardLp {
    /// `num_vars` nonnegative variables, zero objective, no rows.
    pub fn new(num_vars: usize) -> Self {
        Self {
            objective: vec![0.0; num_vars],
            rows: Vec::new(),
            relations: Vec::new(),
            rhs: Vec::new(),
            lower: vec![0.0; num_vars],
            upper: vec![f64::INFINITY; num_vars],
        }
    }

    /// Assembles a program from raw parts without checking them; `solve`
    /// validates.
    pub fn from_parts(
        objective: Vec<f64>,
        rows: Vec<Vec<f64>>,
        relations: Vec<Relation>,
        rhs: Vec<f64>,
        lower: Vec<f64>,
        upper: Vec<f64>,
    ) -> Self {
        Self {
            objective,
            rows,
            relations,
            rhs,
            lower,
            upper,
        }
    }

    pub fn set_objective_coeff(&mut self, var: usize, c: f64) {
        self.objective[var] = c;
    }

    pub fn set_free(&mut self, var: usize) {
        self.lower[var] = f64::NEG_INFINITY;
        self.upper[var] = f64::INFINITY;
    }

    pub fn set_bounds(&mut self, var: usize, lower: f64, upper: f64) {
        self.lower[var] = lower;
        self.upper[var] = upper;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        self.rows.push(coeffs);
        self.relations.push(relation);
        self.rhs.push(rhs);
    }

    /// Adds a row given as sparse `(var, coeff)` terms; repeated vars accumulate.
    pub fn add_sparse_constraint(&mut self, terms: &[(usize, f64)], relation: Relation, rhs: f64) {
        let mut coeffs = vec![0.0; self.num_vars()];
        for &(v, c) in terms {
            coeffs[v] += c;
        }
        self.add_constraint(coeffs, relation, rhs);
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn objective(&self) -> &[f64] {
        &self.objective
    }

    pub fn row(&self, i: usize) -> (&[f64], Relation, f64) {
        (&self.rows[i], self.relations[i], self.rhs[i])
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn bounds(&self, var: usize) -> (f64, f64) {
        (self.lower[var], self.upper[var])
    }

    pub fn validate(&self) -> Result<(), LpError> {
        let m = self.objective.len();
        if self.lower.len() != m || self.upper.len() != m {
            return Err(LpError::DimensionMismatch(format!(
                "{m} objective coefficients but {} lower and {} upper bounds",
                self.lower.len(),
                self.upper.len()
            )));
        }
        if self.relations.len() != self.rows.len() || self.rhs.len() != self.rows.len() {
            return Err(LpError::DimensionMismatch(format!(
                "{} rows, {} relations, {} right-hand sides",
                self.rows.len(),
                self.relations.len(),
                self.rhs.len()
            )));
        }
        if let Some(i) = self.rows.iter().position(|r| r.len() != m) {
            return Err(LpError::DimensionMismatch(format!(
                "row {i} has {} coefficients, expected {m}",
                self.rows[i].len()
            )));
        }
        let finite = |v: &f64| v.is_finite();
        if !self.objective.iter().all(finite) {
            return Err(LpError::NonFinite("objective".into()));
        }
        if !self.rows.iter().flatten().all(finite) || !self.rhs.iter().all(finite) {
            return Err(LpError::NonFinite("constraint data".into()));
        }
        for j in 0..m {
            let (lo, hi) = (self.lower[j], self.upper[j]);
            if lo.is_nan() || hi.is_nan() || lo == f64::INFINITY || hi == f64::NEG_INFINITY {
                return Err(LpError::NonFinite(format!("bounds of variable {j}")));
            }
        }
        Ok(())
    }

    /// Largest constraint or bound violation at `point`, each scaled by
    /// `1 + |rhs| + sum |a_j x_j|`.
    pub fn max_violation(&self, point: &[f64]) -> f64 {
        let mut worst: f64 = 0.0;
        for ((row, rel), &b) in self.rows.iter().zip(&self.relations).zip(&self.rhs) {
            let (lhs, mag) = row
                .iter()
                .zip(point)
                .fold((0.0, 0.0), |(s, m), (a, x)| (s + a * x, m + (a * x).abs()));
            let viol = match rel {
                Relation::Le => (lhs - b).max(0.0),
                Relation::Ge => (b - lhs).max(0.0),
                Relation::Eq => (lhs - b).abs(),
            };
            worst = worst.max(viol / (1.0 + b.abs() + mag));
        }
        for (j, &x) in point.iter().enumerate() {
            let (lo, hi) = (self.lower[j], self.upper[j]);
            if lo.is_finite() {
                worst = worst.max((lo - x).max(0.0) / (1.0 + lo.abs()));
            }
            if hi.is_finite() {
                worst = worst.max((x - hi).max(0.0) / (1.0 + hi.abs()));
            }
        }
        worst
    }

    pub fn objective_value(&self, point: &[f64]) -> f64 {
        self.objective.iter().zip(point).map(|(c, x)| c * x).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Optimal objective value, `objective . point`.
    pub value: Option<f64>,
    pub point: Option<Vec<f64>>,
    /// Pivots over both phases.
    pub iterations: usize,
    /// Whether Bland's rule was engaged in either phase.
    pub bland_engaged: bool,
}

impl LpSolution {
    fn without_point(status: LpStatus, iterations: usize, bland_engaged: bool) -> Self {
        Self {
            status,
            value: None,
            point: None,
            iterations,
            bland_engaged,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

/// How an original variable is recovered from nonnegative tableau columns.
#[derive(Debug, Clone, Copy)]
enum VarMap {
    /// `x = offset + col`
    Shifted { col: usize, offset: f64 },
    /// `x = offset - col`
    Mirrored { col: usize, offset: f64 },
    /// `x = pos - neg`
    Split { pos: usize, neg: usize },
}

struct Tableau {
    /// Each row holds `cols` coefficients followed by the right-hand side.
    rows: Vec<Vec<f64>>,
    /// Reduced costs `c_B B^-1 A_j - c_j`, then the current objective value.
    obj: Vec<f64>,
    basis: Vec<usize>,
    cols: usize,
    enterable: Vec<bool>,
    iterations: usize,
    bland_engaged: bool,
    tol: f64,
    max_iterations: usize,
}

enum PhaseOutcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> f64 {
        self.rows[i][self.cols]
    }

    fn load_objective(&mut self, costs: &[f64]) {
        let cols = self.cols;
        let mut obj = vec![0.0; cols + 1];
        for (j, c) in costs.iter().enumerate() {
            obj[j] = -c;
        }
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = costs[b];
            if cb != 0.0 {
                for (o, a) in obj.iter_mut().zip(&self.rows[i]) {
                    *o += cb * a;
                }
            }
        }
        self.obj = obj;
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let piv = self.rows[pr][pc];
        for v in self.rows[pr].iter_mut() {
            *v /= piv;
        }
        self.rows[pr][pc] = 1.0;
        let pivot_row = std::mem::take(&mut self.rows[pr]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == pr {
                continue;
            }
            let f = row[pc];
            if f != 0.0 {
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * p;
                }
                row[pc] = 0.0;
            }
        }
        let f = self.obj[pc];
        if f != 0.0 {
            for (v, p) in self.obj.iter_mut().zip(&pivot_row) {
                *v -= f * p;
            }
            self.obj[pc] = 0.0;
        }
        self.rows[pr] = pivot_row;
        self.basis[pr] = pc;
        self.iterations += 1;
    }

    fn entering(&self, bland: bool) -> Option<usize> {
        let mut candidates = (0..self.cols).filter(|&j| self.enterable[j] && self.obj[j] < -self.tol);
        if bland {
            return candidates.next();
        }
        candidates.min_by(|&a, &b| self.obj[a].total_cmp(&self.obj[b]).then(a.cmp(&b)))
    }

    fn leaving(&self, pc: usize, bland: bool) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            let a = row[pc];
            if a <= self.tol {
                continue;
            }
            let ratio = self.rhs(i).max(0.0) / a;
            best = match best {
                None => Some((i, ratio)),
                Some((bi, br)) => {
                    let tie = (ratio - br).abs() <= self.tol * (1.0 + br.abs());
                    let better = if tie {
                        if bland {
                            self.basis[i] < self.basis[bi]
                        } else {
                            a > self.rows[bi][pc]
                        }
                    } else {
                        ratio < br
                    };
                    if better {
                        Some((i, ratio))
                    } else {
                        Some((bi, br))
                    }
                }
            };
        }
        best
    }

    fn run_phase(&mut self) -> Result<PhaseOutcome, LpError> {
        let stall_limit = 2 * (self.rows.len() + self.cols);
        let mut stall = 0usize;
        let mut bland = false;
        loop {
            let Some(pc) = self.entering(bland) else {
                return Ok(PhaseOutcome::Optimal);
            };
            let Some((pr, step)) = self.leaving(pc, bland) else {
                return Ok(PhaseOutcome::Unbounded);
            };
            if self.iterations >= self.max_iterations {
                return Err(LpError::NumericalBreakdown(format!(
                    "iteration limit of {} reached",
                    self.max_iterations
                )));
            }
            if step <= self.tol {
                stall += 1;
                if stall >= stall_limit && !bland {
                    bland = true;
                    self.bland_engaged = true;
                }
            } else {
                stall = 0;
            }
            self.pivot(pr, pc);
        }
    }
}

/// Solves `lp` by the two-phase simplex method.
///
/// An `Optimal` result is re-checked against the original rows and bounds;
/// a point violating them by more than `tol.lp` (scaled) is reported as
/// [`LpError::NumericalBreakdown`] rather than returned.
pub fn solve(lp: &StandardLp, tol: &Tolerances) -> Result<LpSolution, LpError> {
    lp.validate()?;
    let eps = tol.lp;
    let m = lp.num_vars();

    // Column layout for structural variables.
    let mut maps = Vec::with_capacity(m);
    let mut ncols = 0usize;
    let mut bound_rows: Vec<(usize, f64)> = Vec::new();
    for j in 0..m {
        let (lo, hi) = lp.bounds(j);
        let map = if lo.is_finite() {
            if hi.is_finite() {
                bound_rows.push((ncols, hi - lo));
            }
            VarMap::Shifted {
                col: ncols,
                offset: lo,
            }
        } else if hi.is_finite() {
            VarMap::Mirrored {
                col: ncols,
                offset: hi,
            }
        } else {
            ncols += 1;
            VarMap::Split {
                pos: ncols - 1,
                neg: ncols,
            }
        };
        ncols += 1;
        maps.push(map);
    }
    let structural = ncols;

    // Rows over structural columns, with rhs made nonnegative.
    let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::with_capacity(lp.num_rows() + bound_rows.len());
    for i in 0..lp.num_rows() {
        let (coeffs, rel, b) = lp.row(i);
        let mut row = vec![0.0; structural];
        let mut rhs = b;
        for (j, &a) in coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            match maps[j] {
                VarMap::Shifted { col, offset } => {
                    row[col] += a;
                    rhs -= a * offset;
                }
                VarMap::Mirrored { col, offset } => {
                    row[col] -= a;
                    rhs -= a * offset;
                }
                VarMap::Split { pos, neg } => {
                    row[pos] += a;
                    row[neg] -= a;
                }
            }
        }
        rows.push((row, rel, rhs));
    }
    for &(col, width) in &bound_rows {
        let mut row = vec![0.0; structural];
        row[col] = 1.0;
        rows.push((row, Relation::Le, width));
    }
    for (row, rel, rhs) in rows.iter_mut() {
        if *rhs < 0.0 {
            row.iter_mut().for_each(|v| *v = -*v);
            *rhs = -*rhs;
            *rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    // Slack / surplus columns, then artificials.
    let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let n_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let first_art = structural + n_slack;
    let cols = first_art + n_art;
    let mut tab_rows = Vec::with_capacity(rows.len());
    let mut basis = Vec::with_capacity(rows.len());
    let (mut next_slack, mut next_art) = (structural, first_art);
    for (row, rel, rhs) in rows {
        let mut full = row;
        full.resize(cols + 1, 0.0);
        full[cols] = rhs;
        match rel {
            Relation::Le => {
                full[next_slack] = 1.0;
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                full[next_slack] = -1.0;
                next_slack += 1;
                full[next_art] = 1.0;
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                full[next_art] = 1.0;
                basis.push(next_art);
                next_art += 1;
            }
        }
        tab_rows.push(full);
    }

    let r = tab_rows.len();
    let mut tab = Tableau {
        rows: tab_rows,
        obj: Vec::new(),
        basis,
        cols,
        enterable: vec![true; cols],
        iterations: 0,
        bland_engaged: false,
        tol: eps,
        max_iterations: 10_000 + 200 * (r + cols),
    };

    if n_art > 0 {
        let mut phase1 = vec![0.0; cols];
        phase1[first_art..].iter_mut().for_each(|c| *c = -1.0);
        tab.load_objective(&phase1);
        tab.run_phase()?;
        let infeasibility = -tab.obj[cols];
        let rhs_scale: f64 = 1.0 + (0..r).map(|i| tab.rhs(i).abs()).fold(0.0, f64::max);
        if infeasibility > eps * rhs_scale * (r as f64 + 1.0) {
            return Ok(LpSolution::without_point(
                LpStatus::Infeasible,
                tab.iterations,
                tab.bland_engaged,
            ));
        }
        // Drive artificials out of the basis; rows where that is impossible
        // are linearly dependent on the others and get dropped.
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= first_art {
                let pick = (0..first_art)
                    .filter(|&j| tab.rows[i][j].abs() > eps)
                    .max_by(|&a, &b| tab.rows[i][a].abs().total_cmp(&tab.rows[i][b].abs()));
                match pick {
                    Some(j) => tab.pivot(i, j),
                    None => {
                        tab.rows.remove(i);
                        tab.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for e in tab.enterable[first_art..].iter_mut() {
            *e = false;
        }
    }

    let mut costs = vec![0.0; cols];
    for (j, map) in maps.iter().enumerate() {
        let c = lp.objective()[j];
        match *map {
            VarMap::Shifted { col, .. } => costs[col] += c,
            VarMap::Mirrored { col, .. } => costs[col] -= c,
            VarMap::Split { pos, neg } => {
                costs[pos] += c;
                costs[neg] -= c;
            }
        }
    }
    tab.load_objective(&costs);
    if let PhaseOutcome::Unbounded = tab.run_phase()? {
        return Ok(LpSolution::without_point(
            LpStatus::Unbounded,
            tab.iterations,
            tab.bland_engaged,
        ));
    }

    let mut col_vals = vec![0.0; cols];
    for (i, &b) in tab.basis.iter().enumerate() {
        col_vals[b] = tab.rhs(i);
    }
    let point: Vec<f64> = maps
        .iter()
        .map(|map| match *map {
            VarMap::Shifted { col, offset } => offset + col_vals[col],
            VarMap::Mirrored { col, offset } => offset - col_vals[col],
            VarMap::Split { pos, neg } => col_vals[pos] - col_vals[neg],
        })
        .collect();
    let violation = lp.max_violation(&point);
    if violation.is_nan() || violation > eps {
        return Err(LpError::NumericalBreakdown(format!(
            "optimal basis violates constraints by {violation:e} (scaled)"
        )));
    }
    Ok(LpSolution {
        status: LpStatus::Optimal,
        value: Some(lp.objective_value(&point)),
        point: Some(point),
        iterations: tab.iterations,
        bland_engaged: tab.bland_engaged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn one_variable_box() {
        let mut lp = StandardLp::new(1);
        lp.set_objective_coeff(0, 1.0);
        lp.add_constraint(vec![1.0], Relation::Le, 1.0);
        let sol = solve(&lp, &tol()).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.value, Some(1.0));
        assert_eq!(sol.point, Some(vec![1.0]));
    }

    #[test]
    fn empty_box_is_infeasible() {
        let mut lp = StandardLp::new(1);
        lp.set_objective_coeff(0, 1.0);
        lp.add_constraint(vec![1.0], Relation::Le, -1.0);
        let sol = solve(&lp, &tol()).unwrap();
        assert_eq!(sol.status, LpStatus::Infeasible);
        assert!(sol.value.is_none() && sol.point.is_none());
    }

    #[test]
    fn unbounded_ray() {
        let mut lp = StandardLp::new(2);
        lp.set_objective_coeff(0, 1.0);
        lp.add_constraint(vec![1.0, -1.0], Relation::Le, 1.0);
        assert_eq!(solve(&lp, &tol()).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn free_variable_goes_negative() {
        // min x  s.t. x >= -3, x free  ->  x = -3
        let mut lp = StandardLp::new(1);
        lp.set_free(0);
        lp.set_objective_coeff(0, -1.0);
        lp.add_constraint(vec![1.0], Relation::Ge, -3.0);
        let sol = solve(&lp, &tol()).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.point.unwrap()[0] + 3.0).abs() < 1e-12);
        assert!((sol.value.unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn bounded_and_mirrored_variables() {
        // max x + y  s.t. x in [-2, 4], y <= -1 (y free below), x + y <= 10
        let mut lp = StandardLp::new(2);
        lp.set_objective_coeff(0, 1.0);
        lp.set_objective_coeff(1, 1.0);
        lp.set_bounds(0, -2.0, 4.0);
        lp.set_bounds(1, f64::NEG_INFINITY, -1.0);
        lp.add_constraint(vec![1.0, 1.0], Relation::Le, 10.0);
        let sol = solve(&lp, &tol()).unwrap();
        assert_eq!(sol.point.unwrap(), vec![4.0, -1.0]);
    }

    #[test]
    fn redundant_equalities() {
        // x + y = 1 stated twice, plus 2x + 2y = 2.
        let mut lp = StandardLp::new(2);
        lp.set_objective_coeff(0, 2.0);
        lp.set_objective_coeff(1, 1.0);
        lp.add_constraint(vec![1.0, 1.0], Relation::Eq, 1.0);
        lp.add_constraint(vec![1.0, 1.0], Relation::Eq, 1.0);
        lp.add_constraint(vec![2.0, 2.0], Relation::Eq, 2.0);
        let sol = solve(&lp, &tol()).unwrap();
        assert_eq!(sol.value, Some(2.0));
    }

    #[test]
    fn beale_cycling_example_terminates() {
        // Cycles under plain Dantzig pivoting with lowest-index ties.
        let mut lp = StandardLp::new(4);
        for (j, c) in [0.75, -20.0, 0.5, -6.0].into_iter().enumerate() {
            lp.set_objective_coeff(j, c);
        }
        lp.add_constraint(vec![0.25, -8.0, -1.0, 9.0], Relation::Le, 0.0);
        lp.add_constraint(vec![0.5, -12.0, -0.5, 3.0], Relation::Le, 0.0);
        lp.add_constraint(vec![0.0, 0.0, 1.0, 0.0], Relation::Le, 1.0);
        let sol = solve(&lp, &tol()).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.value.unwrap() - 1.25).abs() < 1e-12);
    }

    #[test]
    fn rejects_malformed_programs() {
        let lp = StandardLp::from_parts(
            vec![1.0, 1.0],
            vec![vec![1.0]],
            vec![Relation::Le],
            vec![1.0],
            vec![0.0; 2],
            vec![f64::INFINITY; 2],
        );
        assert!(matches!(solve(&lp, &tol()), Err(LpError::DimensionMismatch(_))));
        let mut lp = StandardLp::new(1);
        lp.add_constraint(vec![f64::NAN], Relation::Le, 1.0);
        assert!(matches!(solve(&lp, &tol()), Err(LpError::NonFinite(_))));
    }

    #[test]
    fn no_rows() {
        let mut lp = StandardLp::new(2);
        lp.set_objective_coeff(0, -1.0);
        let sol = solve(&lp, &tol()).unwrap();
        assert_eq!(sol.value, Some(0.0));
        lp.set_objective_coeff(1, 1.0);
        assert_eq!(solve(&lp, &tol()).unwrap().status, LpStatus::Unbounded);
    }

    /// Brute-force optimum of `max c.x` over `0 <= x <= 5` (two variables)
    /// and `rows`, by enumerating every pairwise intersection of boundary lines.
    fn brute_force_2d(c: [f64; 2], rows: &[([f64; 2], f64)]) -> Option<f64> {
        let mut lines: Vec<([f64; 2], f64)> = rows.to_vec();
        lines.push(([1.0, 0.0], 0.0));
        lines.push(([0.0, 1.0], 0.0));
        lines.push(([1.0, 0.0], 5.0));
        lines.push(([0.0, 1.0], 5.0));
        let feasible = |x: [f64; 2]| {
            (0..2).all(|j| x[j] >= -1e-9 && x[j] <= 5.0 + 1e-9)
                && rows.iter().all(|(a, b)| a[0] * x[0] + a[1] * x[1] <= b + 1e-9)
        };
        let mut best: Option<f64> = None;
        for (p, (a, b)) in lines.iter().enumerate() {
            for (e, f) in &lines[p + 1..] {
                let det = a[0] * e[1] - a[1] * e[0];
                if det.abs() < 1e-12 {
                    continue;
                }
                let x = [(b * e[1] - a[1] * f) / det, (a[0] * f - b * e[0]) / det];
                if feasible(x) {
                    let v = c[0] * x[0] + c[1] * x[1];
                    best = Some(best.map_or(v, |w: f64| w.max(v)));
                }
            }
        }
        best
    }

    proptest! {
        #[test]
        fn matches_vertex_enumeration_in_2d(
            c in proptest::array::uniform2(-5i32..=5),
            rows in proptest::collection::vec(
                (proptest::array::uniform2(-5i32..=5), -6i32..=12), 0..5),
        ) {
            let c = [c[0] as f64, c[1] as f64];
            let rows: Vec<([f64; 2], f64)> = rows
                .into_iter()
                .map(|(a, b)| ([a[0] as f64, a[1] as f64], b as f64))
                .collect();
            let mut lp = StandardLp::new(2);
            lp.set_objective_coeff(0, c[0]);
            lp.set_objective_coeff(1, c[1]);
            lp.set_bounds(0, 0.0, 5.0);
            lp.set_bounds(1, 0.0, 5.0);
            for (a, b) in &rows {
                lp.add_constraint(a.to_vec(), Relation::Le, *b);
            }
            let sol = solve(&lp, &tol()).unwrap();
            match brute_force_2d(c, &rows) {
                None => prop_assert_eq!(sol.status, LpStatus::Infeasible),
                Some(v) => {
                    prop_assert_eq!(sol.status, LpStatus::Optimal);
                    prop_assert!((sol.value.unwrap() - v).abs() < 1e-7);
                    prop_assert!(lp.max_violation(sol.point.as_ref().unwrap()) <= tol().lp);
                }
            }
        }

        #[test]
        fn deterministic_output(
            rows in proptest::collection::vec(
                (proptest::collection::vec(-4i32..=4, 3), -3i32..=6), 1..5),
        ) {
            let mut lp = StandardLp::new(3);
            for j in 0..3 {
                lp.set_objective_coeff(j, 1.0 + j as f64);
                lp.set_bounds(j, 0.0, 3.0);
            }
            for (a, b) in rows {
                lp.add_constraint(a.into_iter().map(f64::from).collect(), Relation::Le, b as f64);
            }
            prop_assert_eq!(solve(&lp, &tol()), solve(&lp, &tol()));
        }
    }
}
