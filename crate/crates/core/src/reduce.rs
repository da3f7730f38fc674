//! The three reductions of alternating dimaps and the checks built on them.
//!
//! In terms of the edge permutations (vertices `σ`, anticlockwise faces `λ`,
//! clockwise faces `ρ`), each reduction removes `e` from the cycles of two
//! of the three and recomputes the third from `λ = ρ∘σ`:
//!
//! | kind | spliced     | geometric effect                                           |
//! |------|-------------|------------------------------------------------------------|
//! | `1`  | `λ`, `ρ`    | contraction; faces keep their other edges                   |
//! | `ω`  | `σ`, `λ`    | left successor moves into `e`'s tail slot, `e` deleted      |
//! | `ω²` | `σ`, `ρ`    | right successor moves into `e`'s tail slot, `e` deleted     |

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;

use crate::altmap::perm::{self, Perm};
use crate::altmap::{labeled_equal, validate, AlternatingDimap, DimapError};
use crate::transform::{omega, omega2};

/// `μ ∈ {1, ω, ω²}`, stored as the exponent of `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionKind {
    One,
    Omega,
    Omega2,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 3] = [ReductionKind::One, ReductionKind::Omega, ReductionKind::Omega2];

    pub fn from_exponent(k: usize) -> Self {
        Self::ALL[k % 3]
    }

    pub fn exponent(self) -> usize {
        self.index()
    }

    pub fn index(self) -> usize {
        match self {
            ReductionKind::One => 0,
            ReductionKind::Omega => 1,
            ReductionKind::Omega2 => 2,
        }
    }

    /// `μν`.
    pub fn compose(self, other: ReductionKind) -> Self {
        Self::from_exponent(self.exponent() + other.exponent())
    }

    pub fn inverse(self) -> Self {
        Self::from_exponent(3 - self.exponent())
    }

    pub fn value(self) -> Complex64 {
        match self {
            ReductionKind::One => Complex64::new(1.0, 0.0),
            ReductionKind::Omega => omega(),
            ReductionKind::Omega2 => omega2(),
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionKind::One => "1",
            ReductionKind::Omega => "w",
            ReductionKind::Omega2 => "w2",
        })
    }
}

fn splice_pair(g: &AlternatingDimap, e: usize, kind: ReductionKind) -> (Perm, Perm) {
    let p = g.perms();
    match kind {
        ReductionKind::One => {
            let lambda = perm::splice(&p.lambda, e);
            let rho = perm::splice(&p.rho(), e);
            let sigma = perm::compose(&perm::inverse(&rho), &lambda);
            (sigma, lambda)
        }
        ReductionKind::Omega => (perm::splice(&p.sigma, e), perm::splice(&p.lambda, e)),
        ReductionKind::Omega2 => {
            let sigma = perm::splice(&p.sigma, e);
            let rho = perm::splice(&p.rho(), e);
            let lambda = perm::compose(&rho, &sigma);
            (sigma, lambda)
        }
    }
}

/// `G ↓_μ e` for the edge at index `e`. Surviving edges keep their labels
/// and relative order.
pub fn reduce_at(g: &AlternatingDimap, e: usize, kind: ReductionKind) -> Result<AlternatingDimap, DimapError> {
    if e >= g.edge_count() {
        return Err(DimapError::UnknownEdge(format!("#{e}")));
    }
    let (sigma, lambda) = splice_pair(g, e, kind);
    let mut labels = g.labels();
    labels.remove(e);
    let out = AlternatingDimap::from_perms(labels, sigma, lambda);
    let report = validate(out.raw());
    if !report.is_valid() {
        return Err(DimapError::InternalInvariantViolation(format!(
            "{kind}-reduction of edge {} produced an invalid map: {report}",
            g.edges()[e].label
        )));
    }
    Ok(out)
}

/// `G ↓_μ e` for the edge labeled `label`.
pub fn reduce(g: &AlternatingDimap, label: &str, kind: ReductionKind) -> Result<AlternatingDimap, DimapError> {
    reduce_at(g, g.edge_index(label)?, kind)
}

/// `G^μ ↓_ν e^μ = (G ↓_{μν} e)^μ`, compared as labeled maps.
pub fn trial_minor_check(
    g: &AlternatingDimap,
    e: usize,
    mu: ReductionKind,
    nu: ReductionKind,
) -> Result<bool, DimapError> {
    let label = g.edges().get(e).ok_or_else(|| DimapError::UnknownEdge(format!("#{e}")))?.label.clone();
    let power = mu.exponent();
    let lhs = reduce(&g.trial_power(power), &label, nu)?;
    let rhs = reduce_at(g, e, mu.compose(nu))?.trial_power(power);
    Ok(labeled_equal(&lhs, &rhs))
}

/// True iff the three reductions of `e` coincide.
pub fn is_degenerate_edge(g: &AlternatingDimap, e: usize) -> Result<bool, DimapError> {
    let [a, b, c] = [
        reduce_at(g, e, ReductionKind::One)?,
        reduce_at(g, e, ReductionKind::Omega)?,
        reduce_at(g, e, ReductionKind::Omega2)?,
    ];
    Ok(labeled_equal(&a, &b) && labeled_equal(&b, &c))
}

/// A pair of reductions on distinct edges whose result depends on order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonCommutingPair {
    pub first: String,
    pub first_kind: ReductionKind,
    pub second: String,
    pub second_kind: ReductionKind,
}

impl fmt::Display for NonCommutingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] vs {}[{}]", self.first, self.first_kind, self.second, self.second_kind)
    }
}

fn reduce_by_label(g: &AlternatingDimap, label: &str, kind: ReductionKind) -> AlternatingDimap {
    reduce(g, label, kind).expect("label present and reductions preserve validity")
}

/// Searches edge pairs `e₁ < e₂` and kind pairs in a fixed order for the
/// first pair whose two application orders disagree.
pub fn find_noncommuting_pair(g: &AlternatingDimap) -> Option<NonCommutingPair> {
    let labels = g.labels();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            for k1 in ReductionKind::ALL {
                for k2 in ReductionKind::ALL {
                    let ab = reduce_by_label(&reduce_by_label(g, &labels[i], k1), &labels[j], k2);
                    let ba = reduce_by_label(&reduce_by_label(g, &labels[j], k2), &labels[i], k1);
                    if !labeled_equal(&ab, &ba) {
                        return Some(NonCommutingPair {
                            first: labels[i].clone(),
                            first_kind: k1,
                            second: labels[j].clone(),
                            second_kind: k2,
                        });
                    }
                }
            }
        }
    }
    None
}

/// True iff every set of reductions on distinct edges gives the same minor
/// under every ordering.
///
/// An assignment `a` (each edge untouched or given a kind) has a well-defined
/// result iff, for every edge `x` it touches, `a − x` is well defined and
/// applying `x` last always lands on the same map. That recursion covers all
/// orderings, since every ordering ends with some `x`.
pub fn totally_reduction_commutative(g: &AlternatingDimap) -> bool {
    let n = g.edge_count();
    let labels = g.labels();
    // assignment code: base-4 digits, 0 = untouched, 1..=3 = kind index + 1
    let mut results: HashMap<u64, AlternatingDimap> = HashMap::new();
    results.insert(0, g.clone());
    let mut layer: Vec<u64> = vec![0];
    for _ in 0..n {
        let mut next: HashMap<u64, AlternatingDimap> = HashMap::new();
        for code in &layer {
            let base = &results[code];
            for x in 0..n {
                if code >> (2 * x) & 3 != 0 {
                    continue;
                }
                for kind in ReductionKind::ALL {
                    let extended = code | ((kind.index() as u64 + 1) << (2 * x));
                    let reduced = reduce_by_label(base, &labels[x], kind);
                    match next.get(&extended) {
                        Some(existing) if !labeled_equal(existing, &reduced) => return false,
                        Some(_) => {}
                        None => {
                            next.insert(extended, reduced);
                        }
                    }
                }
            }
        }
        layer = next.keys().copied().collect();
        results.extend(next);
    }
    true
}
