//! Binary functions: complex vectors indexed by the subsets of a finite ground set.
//!
//! Subsets are encoded as integers. Element `e_i` of an `m`-element ground set
//! sits at bit weight `2^(m-1-i)`, so `e_0` is the most significant bit and the
//! vector index of a subset reads its characteristic vector left to right.

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

/// Default absolute tolerance for comparisons on unit-scale data.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest supported ground-set size.
pub const MAX_DIMENSION: usize = 24;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BinFunError {
    #[error("dimension {m} needs {expected} values, got {got}")]
    WrongLength { m: usize, expected: usize, got: usize },
    #[error("empty-set entry is {0}, expected 1")]
    EmptySetNotOne(Complex64),
    #[error("dimension {0} exceeds the supported maximum of {MAX_DIMENSION}")]
    DimensionTooLarge(usize),
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("the transform with mu = 0 is singular")]
    SingularTransform,
    #[error("mu = 3+2*sqrt(2) is a pole of the minor weight")]
    PoleError,
    #[error("minor has no normalization: its empty-set entry has magnitude {0:e}")]
    NormalizationError(f64),
}

/// Anything carrying a `2^m` coefficient vector.
pub trait Coefficients {
    fn values(&self) -> &[Complex64];

    fn dimension(&self) -> usize {
        self.values().len().trailing_zeros() as usize
    }
}

fn check_length(m: usize, len: usize) -> Result<(), BinFunError> {
    if m > MAX_DIMENSION {
        return Err(BinFunError::DimensionTooLarge(m));
    }
    let expected = 1usize << m;
    if len != expected {
        return Err(BinFunError::WrongLength { m, expected, got: len });
    }
    Ok(())
}

/// A `2^m` complex vector with no constraint on its empty-set entry.
#[derive(Debug, Clone, PartialEq)]
pub struct RawVector {
    values: Vec<Complex64>,
}

impl RawVector {
    pub fn new(m: usize, values: Vec<Complex64>) -> Result<Self, BinFunError> {
        check_length(m, values.len())?;
        Ok(RawVector { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<Complex64>) -> Self {
        debug_assert!(values.len().is_power_of_two());
        RawVector { values }
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.values)
    }

    /// Divides through by the empty-set entry.
    pub fn normalize(&self, tol: f64) -> Result<BinaryFunction, BinFunError> {
        BinaryFunction::normalize(self.dimension(), self.values.clone(), tol)
    }
}

impl Coefficients for RawVector {
    fn values(&self) -> &[Complex64] {
        &self.values
    }
}

impl From<BinaryFunction> for RawVector {
    fn from(f: BinaryFunction) -> Self {
        RawVector { values: f.values }
    }
}

/// A function `f: 2^E -> C` with `f(∅) = 1`, stored as its `2^m` vector.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryFunction {
    values: Vec<Complex64>,
    labels: Vec<String>,
}

fn default_labels(m: usize) -> Vec<String> {
    (0..m).map(|i| format!("e{i}")).collect()
}

impl BinaryFunction {
    /// Builds a binary function, rejecting an empty-set entry that is not 1
    /// within [`DEFAULT_TOL`]. The empty-set entry is then stored as exactly 1.
    pub fn make(m: usize, values: Vec<Complex64>) -> Result<Self, BinFunError> {
        Self::make_with_tol(m, values, DEFAULT_TOL)
    }

    pub fn make_with_tol(m: usize, mut values: Vec<Complex64>, tol: f64) -> Result<Self, BinFunError> {
        check_length(m, values.len())?;
        if (values[0] - Complex64::new(1.0, 0.0)).norm() > tol {
            return Err(BinFunError::EmptySetNotOne(values[0]));
        }
        values[0] = Complex64::new(1.0, 0.0);
        Ok(BinaryFunction { values, labels: default_labels(m) })
    }

    /// Real-valued convenience constructor.
    pub fn from_reals(m: usize, values: &[f64]) -> Result<Self, BinFunError> {
        Self::make(m, values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Scales `values` so that the empty-set entry becomes 1.
    pub fn normalize(m: usize, values: Vec<Complex64>, tol: f64) -> Result<Self, BinFunError> {
        check_length(m, values.len())?;
        let pivot = values[0];
        if pivot.norm() < tol {
            return Err(BinFunError::NormalizationError(pivot.norm()));
        }
        let mut values: Vec<Complex64> = values.into_iter().map(|v| v / pivot).collect();
        values[0] = Complex64::new(1.0, 0.0);
        Ok(BinaryFunction { values, labels: default_labels(m) })
    }

    /// The dimension-0 function `(1)`.
    pub fn unit() -> Self {
        BinaryFunction { values: vec![Complex64::new(1.0, 0.0)], labels: Vec::new() }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, BinFunError> {
        if labels.len() != self.dimension() {
            return Err(BinFunError::DimensionMismatch(labels.len(), self.dimension()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, index: usize) -> Complex64 {
        self.values[index]
    }

    pub fn at(&self, g: &BitSequence) -> Result<Complex64, BinFunError> {
        if g.len() != self.dimension() {
            return Err(BinFunError::DimensionMismatch(g.len(), self.dimension()));
        }
        Ok(self.values[subset_index(g)])
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.values)
    }

    pub fn to_raw(&self) -> RawVector {
        RawVector { values: self.values.clone() }
    }

    /// True when every entry is exactly 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.values
            .iter()
            .all(|v| v.im == 0.0 && (v.re == 0.0 || v.re == 1.0))
    }

    /// Reorders the ground set: element `j` of the result is element
    /// `order[j]` of `self`.
    pub fn permute_elements(&self, order: &[usize]) -> Result<Self, BinFunError> {
        let m = self.dimension();
        if order.len() != m {
            return Err(BinFunError::DimensionMismatch(order.len(), m));
        }
        let mut seen = vec![false; m];
        for &o in order {
            if o >= m || seen[o] {
                return Err(BinFunError::IndexOutOfRange { index: o, limit: m });
            }
            seen[o] = true;
        }
        let mut values = vec![Complex64::new(0.0, 0.0); 1 << m];
        for (x, &v) in self.values.iter().enumerate() {
            let mut y = 0usize;
            for (j, &src) in order.iter().enumerate() {
                if x >> (m - 1 - src) & 1 == 1 {
                    y |= 1 << (m - 1 - j);
                }
            }
            values[y] = v;
        }
        let labels = order.iter().map(|&o| self.labels[o].clone()).collect();
        Ok(BinaryFunction { values, labels })
    }
}

impl Coefficients for BinaryFunction {
    fn values(&self) -> &[Complex64] {
        &self.values
    }
}

impl fmt::Display for BinaryFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if v.im == 0.0 {
                write!(f, "{}", v.re)?;
            } else {
                write!(f, "{}{:+}i", v.re, v.im)?;
            }
        }
        write!(f, ")")
    }
}

pub(crate) fn max_abs(values: &[Complex64]) -> f64 {
    values.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

/// A finite bit sequence `(g_0, ..., g_{k-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSequence(pub Vec<bool>);

impl BitSequence {
    pub fn new(bits: &[u8]) -> Self {
        BitSequence(bits.iter().map(|&b| b != 0).collect())
    }

    /// Bit decomposition of `index` into `k` bits, most significant first.
    pub fn from_index(index: usize, k: usize) -> Self {
        BitSequence((0..k).map(|i| index >> (k - 1 - i) & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }
}

/// `Σ g_i 2^(k-1-i)`.
pub fn subset_index(g: &BitSequence) -> usize {
    g.0.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize)
}

/// `G:i←b`, the sequence with `b` inserted before position `i`.
pub fn insert_bit(g: &BitSequence, i: usize, b: bool) -> Result<BitSequence, BinFunError> {
    if i > g.len() {
        return Err(BinFunError::IndexOutOfRange { index: i, limit: g.len() });
    }
    let mut bits = g.0.clone();
    bits.insert(i, b);
    Ok(BitSequence(bits))
}

/// Index form of [`insert_bit`]: `g` has `width` bits, the result `width + 1`.
#[inline]
pub(crate) fn insert_bit_index(g: usize, width: usize, i: usize, b: bool) -> usize {
    let low_bits = width - i;
    let high = g >> low_bits;
    let low = g & ((1usize << low_bits) - 1);
    (high << (low_bits + 1)) | ((b as usize) << low_bits) | low
}

/// True iff `a = c·b` for some `c ≠ 0`, within `tol` after scaling both
/// vectors to unit sup-norm. Zero vectors are proportional only to zero vectors.
pub fn proportional<A, B>(a: &A, b: &B, tol: f64) -> Result<bool, BinFunError>
where
    A: Coefficients + ?Sized,
    B: Coefficients + ?Sized,
{
    Ok(proportionality_residual(a, b, tol)? <= tol)
}

/// Residual behind [`proportional`]: `0` when both vectors vanish,
/// `+∞` when exactly one does.
pub fn proportionality_residual<A, B>(a: &A, b: &B, tol: f64) -> Result<f64, BinFunError>
where
    A: Coefficients + ?Sized,
    B: Coefficients + ?Sized,
{
    let (a, b) = (a.values(), b.values());
    if a.len() != b.len() {
        return Err(BinFunError::DimensionMismatch(
            a.len().trailing_zeros() as usize,
            b.len().trailing_zeros() as usize,
        ));
    }
    let (na, nb) = (max_abs(a), max_abs(b));
    match (na <= tol, nb <= tol) {
        (true, true) => return Ok(0.0),
        (true, false) | (false, true) => return Ok(f64::INFINITY),
        _ => {}
    }
    let pivot = b
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let c = (a[pivot] / na) / (b[pivot] / nb);
    Ok(a
        .iter()
        .zip(b)
        .map(|(x, y)| (x / na - c * (y / nb)).norm())
        .fold(0.0, f64::max))
}

/// `(f ⊗ g)(X ∪ Y) = f(X)·g(Y)`, with `f`'s elements first.
pub fn tensor(f: &BinaryFunction, g: &BinaryFunction) -> BinaryFunction {
    let mg = g.dimension();
    let mut values = Vec::with_capacity(f.values.len() * g.values.len());
    for x in &f.values {
        for y in &g.values {
            values.push(x * y);
        }
    }
    let mut labels = f.labels.clone();
    for l in &g.labels {
        let mut name = l.clone();
        while labels.contains(&name) {
            name.push('\'');
        }
        labels.push(name);
    }
    debug_assert_eq!(labels.len(), f.dimension() + mg);
    BinaryFunction { values, labels }
}

/// `f^{⊗k}`; the dimension-0 unit for `k = 0`.
pub fn tensor_power(f: &BinaryFunction, k: usize) -> BinaryFunction {
    (0..k).fold(BinaryFunction::unit(), |acc, _| tensor(&acc, f))
}

/// A matrix over GF(2). Each row is a bitmask in subset-index convention:
/// column `j` of a `cols`-column matrix has weight `2^(cols-1-j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<u32>,
}

impl Gf2Matrix {
    pub fn new(cols: usize, rows: Vec<u32>) -> Result<Self, BinFunError> {
        if cols > MAX_DIMENSION {
            return Err(BinFunError::DimensionTooLarge(cols));
        }
        if let Some(&bad) = rows.iter().find(|&&r| cols < 32 && r >> cols != 0) {
            return Err(BinFunError::IndexOutOfRange { index: bad as usize, limit: 1 << cols });
        }
        Ok(Gf2Matrix { cols, rows })
    }

    /// Builds from 0/1 rows given column by column.
    pub fn from_rows(cols: usize, rows: &[Vec<u8>]) -> Result<Self, BinFunError> {
        let mut masks = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != cols {
                return Err(BinFunError::DimensionMismatch(row.len(), cols));
            }
            masks.push(subset_index(&BitSequence::new(row)) as u32);
        }
        Self::new(cols, masks)
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// A row-echelon basis of the rowspace.
    pub fn basis(&self) -> Vec<u32> {
        let mut basis: Vec<u32> = Vec::new();
        for &row in &self.rows {
            let mut r = row;
            for &b in &basis {
                r = r.min(r ^ b);
            }
            if r != 0 {
                basis.push(r);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.basis().len()
    }

    /// Every vector of the rowspace, sorted.
    pub fn rowspace(&self) -> Vec<u32> {
        let basis = self.basis();
        let mut span: Vec<u32> = (0u32..1 << basis.len())
            .map(|sel| {
                basis
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| sel >> i & 1 == 1)
                    .fold(0, |acc, (_, &b)| acc ^ b)
            })
            .collect();
        span.sort_unstable();
        span
    }
}

/// Indicator of the rowspace of `n`.
pub fn rowspace_indicator(n: &Gf2Matrix) -> BinaryFunction {
    let mut values = vec![Complex64::new(0.0, 0.0); 1 << n.cols];
    for v in n.rowspace() {
        values[v as usize] = Complex64::new(1.0, 0.0);
    }
    BinaryFunction { values, labels: default_labels(n.cols) }
}
