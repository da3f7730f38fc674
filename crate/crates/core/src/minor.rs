//! μ-minors of binary functions and the degeneracy machinery built on them.
//!
//! The `[μ]`-minor by `e_i` combines the two slices of `f` along element `i`
//! as `f_{G:i←0} + λ(μ)·f_{G:i←1}` and rescales so the empty-set entry is 1.

use num_complex::Complex64;

use crate::binfun::{
    insert_bit_index, max_abs, proportional, BinFunError, BinaryFunction, Coefficients, RawVector,
};
use crate::transform::transform;

/// The pole `3 + 2√2` of `λ(μ)`.
pub fn minor_pole() -> Complex64 {
    Complex64::new(3.0 + 2.0 * 2f64.sqrt(), 0.0)
}

const POLE_TOL: f64 = 1e-12;

pub fn is_pole(mu: Complex64) -> bool {
    (mu - minor_pole()).norm() <= POLE_TOL * minor_pole().re
}

/// `λ(μ) = (1+μ) / (√2+1 − (√2−1)μ)`.
pub fn lambda(mu: Complex64) -> Result<Complex64, BinFunError> {
    if is_pole(mu) {
        return Err(BinFunError::PoleError);
    }
    if mu == Complex64::new(1.0, 0.0) {
        return Ok(mu);
    }
    let s = 2f64.sqrt();
    Ok((1.0 + mu) / (s + 1.0 - (s - 1.0) * mu))
}

/// A minor on element `element` with parameter `mu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinorSpec {
    pub element: usize,
    pub mu: Complex64,
}

impl MinorSpec {
    pub fn new(element: usize, mu: Complex64) -> Result<Self, BinFunError> {
        if is_pole(mu) {
            return Err(BinFunError::PoleError);
        }
        Ok(MinorSpec { element, mu })
    }
}

/// `(I^{⊗i} ⊗ (1 λ) ⊗ I^{⊗(m-i-1)}) v`, without normalization.
pub fn raw_minor<V: Coefficients + ?Sized>(v: &V, element: usize, weight: Complex64) -> Result<RawVector, BinFunError> {
    let m = v.dimension();
    if element >= m {
        return Err(BinFunError::IndexOutOfRange { index: element, limit: m });
    }
    let values = v.values();
    let width = m - 1;
    let out = (0..1usize << width)
        .map(|g| {
            values[insert_bit_index(g, width, element, false)]
                + weight * values[insert_bit_index(g, width, element, true)]
        })
        .collect();
    Ok(RawVector::from_vec_unchecked(out))
}

/// `f ↓[μ] e_i`.
pub fn take_minor<V: Coefficients + ?Sized>(f: &V, spec: MinorSpec, tol: f64) -> Result<BinaryFunction, BinFunError> {
    let weight = lambda(spec.mu)?;
    let raw = raw_minor(f, spec.element, weight)?;
    raw.normalize(tol)
}

fn entrywise_close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    let scale = max_abs(a).max(max_abs(b)).max(1.0);
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol * scale)
}

/// Applies two minors on distinct elements in both orders and compares.
pub fn minors_commute_check(
    f: &BinaryFunction,
    first: MinorSpec,
    second: MinorSpec,
    tol: f64,
) -> Result<bool, BinFunError> {
    if first.element == second.element {
        return Err(BinFunError::IndexOutOfRange { index: second.element, limit: f.dimension() });
    }
    let shifted = |inner: MinorSpec, outer: MinorSpec| MinorSpec {
        element: if outer.element > inner.element { outer.element - 1 } else { outer.element },
        ..outer
    };
    let ab = take_minor(&take_minor(f, first, tol)?, shifted(first, second), tol)?;
    let ba = take_minor(&take_minor(f, second, tol)?, shifted(second, first), tol)?;
    Ok(entrywise_close(ab.values(), ba.values(), tol))
}

/// `(L^[μ] f) ↓[ν] e_i ≃ L^[μ] (f ↓[μν] e_i)`.
pub fn transform_minor_check(
    f: &BinaryFunction,
    mu: Complex64,
    nu: Complex64,
    element: usize,
    tol: f64,
) -> Result<bool, BinFunError> {
    let transformed = transform(f, mu).normalize(tol)?;
    let lhs = take_minor(&transformed, MinorSpec::new(element, nu)?, tol)?;
    let rhs = transform(&take_minor(f, MinorSpec::new(element, mu * nu)?, tol)?, mu);
    proportional(&lhs, &rhs, tol)
}

/// Degeneracy of `e_i` in product form:
/// `f_{G:i←1}·f_{0:i←0} = f_{G:i←0}·f_{0:i←1}` for every `G`.
///
/// `{0,1}`-valued inputs compare exactly; otherwise the tolerance is relative
/// to the squared largest entry magnitude.
pub fn is_degenerate(f: &BinaryFunction, element: usize, tol: f64) -> Result<bool, BinFunError> {
    let m = f.dimension();
    if element >= m {
        return Err(BinFunError::IndexOutOfRange { index: element, limit: m });
    }
    let v = f.values();
    let width = m - 1;
    let base0 = v[insert_bit_index(0, width, element, false)];
    let base1 = v[insert_bit_index(0, width, element, true)];
    let exact = f.is_zero_one();
    let scale = f.max_abs().max(1.0).powi(2);
    Ok((0..1usize << width).all(|g| {
        let lhs = v[insert_bit_index(g, width, element, true)] * base0;
        let rhs = v[insert_bit_index(g, width, element, false)] * base1;
        if exact {
            lhs == rhs
        } else {
            (lhs - rhs).norm() <= tol * scale
        }
    }))
}

/// Both sides of the degenerate-reduction biconditional:
/// `f↓[μ₁]e_i = f↓[μ₂]e_i = u` versus `f_{G:i←b} = f_{0:i←b}·u_G` for all `G, b`.
pub fn degenerate_reduction_sides(
    f: &BinaryFunction,
    u: &BinaryFunction,
    element: usize,
    mu1: Complex64,
    mu2: Complex64,
    tol: f64,
) -> Result<(bool, bool), BinFunError> {
    let m = f.dimension();
    if m == 0 || u.dimension() + 1 != m {
        return Err(BinFunError::DimensionMismatch(u.dimension(), m.saturating_sub(1)));
    }
    if (mu1 - mu2).norm() <= tol {
        return Err(BinFunError::DimensionMismatch(1, 2));
    }
    let g1 = take_minor(f, MinorSpec::new(element, mu1)?, tol)?;
    let g2 = take_minor(f, MinorSpec::new(element, mu2)?, tol)?;
    let minors_equal = entrywise_close(g1.values(), u.values(), tol) && entrywise_close(g2.values(), u.values(), tol);

    let width = m - 1;
    let v = f.values();
    let scale = f.max_abs().max(1.0) * u.max_abs().max(1.0);
    let product_form = (0..1usize << width).all(|g| {
        [false, true].iter().all(|&b| {
            let lhs = v[insert_bit_index(g, width, element, b)];
            let rhs = v[insert_bit_index(0, width, element, b)] * u.values()[g];
            (lhs - rhs).norm() <= tol * scale
        })
    });
    Ok((minors_equal, product_form))
}

pub fn degenerate_reduction_check(
    f: &BinaryFunction,
    u: &BinaryFunction,
    element: usize,
    mu1: Complex64,
    mu2: Complex64,
    tol: f64,
) -> Result<bool, BinFunError> {
    let (lhs, rhs) = degenerate_reduction_sides(f, u, element, mu1, mu2, tol)?;
    Ok(lhs == rhs)
}

/// Whether the `[μ₁]` and `[μ₂]` minors by `e_i` coincide.
pub fn minors_coincide(
    f: &BinaryFunction,
    element: usize,
    mu1: Complex64,
    mu2: Complex64,
    tol: f64,
) -> Result<bool, BinFunError> {
    let g1 = take_minor(f, MinorSpec::new(element, mu1)?, tol)?;
    let g2 = take_minor(f, MinorSpec::new(element, mu2)?, tol)?;
    Ok(entrywise_close(g1.values(), g2.values(), tol))
}
