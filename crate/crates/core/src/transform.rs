//! The μ-transform family: Kronecker powers of the 2×2 generator `M(μ)`.
//!
//! `M(μ) = 1/(2√2) · [[√2+1+(√2−1)μ, 1−μ], [1−μ, √2−1+(√2+1)μ]]` has
//! determinant `μ` and satisfies `M(μ₁)M(μ₂) = M(μ₁μ₂)`, so `μ = 1` is the
//! identity, `μ = −1` a scaled Hadamard transform and `μ = ω` has order three.

use num_complex::Complex64;

use crate::binfun::{proportional, BinFunError, BinaryFunction, Coefficients, RawVector};

/// `ω = exp(2πi/3)`, built from its exact real and imaginary parts.
pub fn omega() -> Complex64 {
    Complex64::new(-0.5, 3f64.sqrt() / 2.0)
}

/// `ω² = conj(ω)`.
pub fn omega2() -> Complex64 {
    omega().conj()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuMatrix {
    pub mu: Complex64,
    pub entries: [[Complex64; 2]; 2],
}

impl MuMatrix {
    pub fn det(&self) -> Complex64 {
        let [[a, b], [c, d]] = self.entries;
        a * d - b * c
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    /// Both eigenvalues from the characteristic polynomial.
    pub fn eigenvalues(&self) -> [Complex64; 2] {
        let t = self.trace();
        let disc = (t * t - 4.0 * self.det()).sqrt();
        [(t + disc) / 2.0, (t - disc) / 2.0]
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        let [[a, b], [c, d]] = self.entries;
        [a * v[0] + b * v[1], c * v[0] + d * v[1]]
    }
}

pub fn m_matrix(mu: Complex64) -> MuMatrix {
    let one = Complex64::new(1.0, 0.0);
    if mu == one {
        let zero = Complex64::new(0.0, 0.0);
        return MuMatrix { mu, entries: [[one, zero], [zero, one]] };
    }
    let s = 2f64.sqrt();
    let scale = 1.0 / (2.0 * s);
    let a = (s + 1.0 + (s - 1.0) * mu) * scale;
    let b = (one - mu) * scale;
    let d = (s - 1.0 + (s + 1.0) * mu) * scale;
    MuMatrix { mu, entries: [[a, b], [b, d]] }
}

/// Applies `M(μ)` along every axis in place, axis 0 (the top bit) first.
pub(crate) fn apply_kronecker_power(values: &mut [Complex64], m: &MuMatrix) {
    let [[a, b], [c, d]] = m.entries;
    let n = values.len();
    let bits = n.trailing_zeros() as usize;
    for axis in 0..bits {
        let stride = 1usize << (bits - 1 - axis);
        for block in (0..n).step_by(2 * stride) {
            for j in block..block + stride {
                let x = values[j];
                let y = values[j + stride];
                values[j] = a * x + b * y;
                values[j + stride] = c * x + d * y;
            }
        }
    }
}

/// `L^[μ] f = M(μ)^{⊗m} f`, in `O(m·2^m)`.
pub fn transform<V: Coefficients + ?Sized>(f: &V, mu: Complex64) -> RawVector {
    let mut values = f.values().to_vec();
    if mu != Complex64::new(1.0, 0.0) {
        apply_kronecker_power(&mut values, &m_matrix(mu));
    }
    RawVector::from_vec_unchecked(values)
}

/// `L^[1/μ] v`.
pub fn inverse_transform<V: Coefficients + ?Sized>(v: &V, mu: Complex64) -> Result<RawVector, BinFunError> {
    if mu.norm() == 0.0 {
        return Err(BinFunError::SingularTransform);
    }
    Ok(transform(v, mu.inv()))
}

/// Whether `L^[ω] f ≃ f`.
pub fn self_trial(f: &BinaryFunction, tol: f64) -> bool {
    proportional(&transform(f, omega()), f, tol).unwrap_or(false)
}

/// The explicit `2^m × 2^m` Kronecker power, for reference checks.
pub fn dense_matrix(mu: Complex64, m: usize) -> Vec<Vec<Complex64>> {
    let gen = m_matrix(mu).entries;
    let mut acc = vec![vec![Complex64::new(1.0, 0.0)]];
    for _ in 0..m {
        let n = acc.len();
        let mut next = vec![vec![Complex64::new(0.0, 0.0); 2 * n]; 2 * n];
        for (i, row) in acc.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                for (p, grow) in gen.iter().enumerate() {
                    for (q, &g) in grow.iter().enumerate() {
                        next[i * 2 + p][j * 2 + q] = x * g;
                    }
                }
            }
        }
        acc = next;
    }
    acc
}
