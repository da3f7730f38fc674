//! Dense complex linear systems, for checking uniqueness of solutions.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Outcome of solving `A x = b` in the least-squares sense.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub unknowns: usize,
    pub rank: usize,
    pub solution: Vec<Complex64>,
    /// `‖A x − b‖∞` at the returned solution.
    pub residual: f64,
}

impl LinearSolution {
    /// The solution set is a single point.
    pub fn is_unique(&self) -> bool {
        self.rank == self.unknowns
    }

    pub fn is_consistent(&self, tol: f64) -> bool {
        self.residual <= tol
    }
}

/// Rows are equations `Σ a_j x_j = b`, given as `(coefficients, rhs)` with
/// sparse coefficients `(column, value)`.
#[derive(Debug, Clone, Default)]
pub struct LinearSystem {
    unknowns: usize,
    rows: Vec<(Vec<(usize, Complex64)>, Complex64)>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        Self { unknowns, rows: Vec::new() }
    }

    pub fn push(&mut self, coefficients: Vec<(usize, Complex64)>, rhs: Complex64) {
        assert!(coefficients.iter().all(|&(j, _)| j < self.unknowns), "column out of range");
        self.rows.push((coefficients, rhs));
    }

    pub fn equations(&self) -> usize {
        self.rows.len()
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Rank is counted with singular values above `rank_tol` times the
    /// largest one.
    pub fn solve(&self, rank_tol: f64) -> LinearSolution {
        let (r, c) = (self.rows.len(), self.unknowns);
        let mut a = DMatrix::<Complex64>::zeros(r, c);
        let mut b = DVector::<Complex64>::zeros(r);
        for (i, (coeffs, rhs)) in self.rows.iter().enumerate() {
            for &(j, v) in coeffs {
                a[(i, j)] += v;
            }
            b[i] = *rhs;
        }
        if r == 0 || c == 0 {
            let residual = b.iter().map(|v| v.norm()).fold(0.0, f64::max);
            return LinearSolution { unknowns: c, rank: 0, solution: vec![Complex64::new(0.0, 0.0); c], residual };
        }
        let svd = a.clone().svd(true, true);
        let largest = svd.singular_values.iter().copied().fold(0.0, f64::max);
        let eps = rank_tol * largest.max(f64::MIN_POSITIVE);
        let rank = svd.rank(eps);
        let x = svd.solve(&b, eps).expect("both factors computed");
        let residual = (&a * &x - &b).iter().map(|v| v.norm()).fold(0.0, f64::max);
        LinearSolution { unknowns: c, rank, solution: x.iter().copied().collect(), residual }
    }
}
