//! Strict binary representations of minor-closed classes of alternating
//! dimaps: a checker for the five defining conditions, the canonical
//! representation of `𝒰_k = {iC₁ : i ≤ k}`, and mechanical checks of the
//! steps showing those are the only representable classes.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;

use itertools::Itertools;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::altmap::{canonical_form, isomorphic, isomorphisms, AlternatingDimap, CanonicalForm, DimapError};
use crate::binfun::{insert_bit_index, proportional, tensor_power, BinFunError, BinaryFunction, Coefficients};
use crate::enumerate::{enumerate_dimaps, enumerate_dimaps_with_cap, is_self_trial, MAX_EDGES};
use crate::linalg::{LinearSolution, LinearSystem};
use crate::minor::{lambda, raw_minor, take_minor, MinorSpec};
use crate::reduce::{reduce_at, ReductionKind};
use crate::transform::{m_matrix, omega, self_trial, transform};

/// Witnesses kept per condition.
const MAX_WITNESSES: usize = 8;
/// Largest ground set for the faithfulness search over element orders.
const FAITHFUL_MAX_DIMENSION: usize = 6;
/// Unit-circle samples for the `ν` search.
pub const NU_SAMPLES: usize = 720;

#[derive(Debug, Error)]
pub enum RepresentError {
    #[error("class is not minor-closed: {0}")]
    NotMinorClosed(String),
    #[error(transparent)]
    BinFun(#[from] BinFunError),
    #[error(transparent)]
    Dimap(#[from] DimapError),
    #[error("{0}")]
    OutOfRange(String),
}

/// `(F, ε, ν)` on a finite class. `images[i]` is `F(members[i])` and
/// `epsilon[i][e]` the element of `images[i]` assigned to edge `e`.
#[derive(Debug, Clone)]
pub struct RepresentationCandidate {
    pub members: Vec<AlternatingDimap>,
    pub images: Vec<BinaryFunction>,
    pub epsilon: Vec<Vec<usize>>,
    pub nu: Complex64,
}

impl RepresentationCandidate {
    pub fn with_nu(mut self, nu: Complex64) -> Self {
        self.nu = nu;
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConditionResult {
    pub passed: bool,
    pub checked: usize,
    pub witnesses: Vec<String>,
}

impl ConditionResult {
    fn new() -> Self {
        Self { passed: true, checked: 0, witnesses: Vec::new() }
    }

    fn fail(&mut self, witness: impl FnOnce() -> String) {
        self.passed = false;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness());
        }
    }

    fn skipped(reason: &str) -> Self {
        Self { passed: false, checked: 0, witnesses: vec![format!("skipped: {reason}")] }
    }
}

impl fmt::Display for ConditionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} checked)", if self.passed { "pass" } else { "FAIL" }, self.checked)?;
        for w in &self.witnesses {
            write!(f, "; {w}")?;
        }
        Ok(())
    }
}

/// Outcome per condition. `faithful` is a diagnostic, not one of the five
/// conditions: it records whether non-isomorphic members of equal size get
/// inequivalent images.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub totality: ConditionResult,
    pub bijections: ConditionResult,
    pub unit_phase: ConditionResult,
    pub triality: ConditionResult,
    pub minors: ConditionResult,
    pub faithful: ConditionResult,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.totality.passed
            && self.bijections.passed
            && self.unit_phase.passed
            && self.triality.passed
            && self.minors.passed
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "(a) totality:   {}", self.totality)?;
        writeln!(f, "(b) bijections: {}", self.bijections)?;
        writeln!(f, "(c) |nu| = 1:   {}", self.unit_phase)?;
        writeln!(f, "(d) triality:   {}", self.triality)?;
        writeln!(f, "(e) minors:     {}", self.minors)?;
        write!(f, "faithful:       {}", self.faithful)
    }
}

/// `F(C₁) = (1, √2−1)`.
pub fn ultraloop_image() -> BinaryFunction {
    BinaryFunction::from_reals(1, &[1.0, 2f64.sqrt() - 1.0]).expect("valid")
}

/// `𝒰_k` with `F(iC₁) = F(C₁)^{⊗i}`, identity `ε` and `ν = 1`.
#[allow(non_snake_case)]
pub fn canonical_Uk(k: usize) -> RepresentationCandidate {
    let fc1 = ultraloop_image();
    RepresentationCandidate {
        members: (0..=k).map(AlternatingDimap::ultraloops).collect(),
        images: (0..=k).map(|i| tensor_power(&fc1, i)).collect(),
        epsilon: (0..=k).map(|i| (0..i).collect()).collect(),
        nu: Complex64::new(1.0, 0.0),
    }
}

/// Transports `F(H)` onto the elements of a comparison target: the target
/// map `t` has edge `x` at element `slot[x]`, and `phi` maps `t`'s edges to
/// `H`'s.
fn pull_back(image: &BinaryFunction, eps_h: &[usize], phi: &[usize], slot: &[usize]) -> BinaryFunction {
    let mut order = vec![0; slot.len()];
    for (x, &j) in slot.iter().enumerate() {
        order[j] = eps_h[phi[x]];
    }
    image.permute_elements(&order).expect("bijective slots")
}

fn matches_some_isomorphism(
    target: &AlternatingDimap,
    member: &AlternatingDimap,
    image: &BinaryFunction,
    eps_h: &[usize],
    slot: &[usize],
    expected: &impl Coefficients,
    tol: f64,
) -> Result<bool, RepresentError> {
    for phi in isomorphisms(target, member) {
        if proportional(expected, &pull_back(image, eps_h, &phi, slot), tol)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn describe(g: &AlternatingDimap) -> String {
    format!("[{}]", canonical_form(g))
}

/// Checks conditions (a)–(e) as given. Class membership of minors and trials
/// is up to isomorphism; (d) and (e) pass for a pair of maps if some
/// isomorphism onto the class member makes the images match.
pub fn check_representation(c: &RepresentationCandidate, tol: f64) -> Result<CheckReport, RepresentError> {
    let mut index: HashMap<CanonicalForm, usize> = HashMap::new();
    for (i, g) in c.members.iter().enumerate() {
        index.entry(canonical_form(g)).or_insert(i);
    }
    let lookup = |g: &AlternatingDimap| index.get(&canonical_form(g)).copied();

    // minor closure is a precondition rather than a condition
    let mut minors_of: Vec<Vec<[AlternatingDimap; 3]>> = Vec::with_capacity(c.members.len());
    for g in &c.members {
        let mut per_edge = Vec::with_capacity(g.edge_count());
        for e in 0..g.edge_count() {
            let red = [
                reduce_at(g, e, ReductionKind::One)?,
                reduce_at(g, e, ReductionKind::Omega)?,
                reduce_at(g, e, ReductionKind::Omega2)?,
            ];
            for (kind, r) in ReductionKind::ALL.iter().zip(&red) {
                if lookup(r).is_none() {
                    return Err(RepresentError::NotMinorClosed(format!(
                        "{} reduced at {} by {kind} gives {}, not in the class",
                        describe(g),
                        g.edges()[e].label,
                        describe(r)
                    )));
                }
            }
            per_edge.push(red);
        }
        minors_of.push(per_edge);
    }

    let mut totality = ConditionResult::new();
    if c.images.len() != c.members.len() {
        totality.fail(|| format!("{} images for {} members", c.images.len(), c.members.len()));
    }
    for (i, g) in c.members.iter().enumerate() {
        totality.checked += 1;
        if let Some(img) = c.images.get(i) {
            if img.dimension() != g.edge_count() {
                totality.fail(|| format!("{} has {} edges but its image has dimension {}", describe(g), g.edge_count(), img.dimension()));
            }
        }
        if lookup(&g.trial()).is_none() {
            totality.fail(|| format!("trial of {} is not in the class", describe(g)));
        }
    }

    let mut bijections = ConditionResult::new();
    for (i, g) in c.members.iter().enumerate() {
        bijections.checked += 1;
        let ok = c.epsilon.get(i).is_some_and(|eps| {
            let mut seen = vec![false; eps.len()];
            eps.len() == g.edge_count() && eps.iter().all(|&j| j < eps.len() && !std::mem::replace(&mut seen[j], true))
        });
        if !ok {
            bijections.fail(|| format!("epsilon for {} is not a bijection onto its elements", describe(g)));
        }
    }

    let mut unit_phase = ConditionResult::new();
    unit_phase.checked = 1;
    if (c.nu.norm() - 1.0).abs() > tol {
        unit_phase.fail(|| format!("|nu| = {}", c.nu.norm()));
    }

    let (triality, minors, faithful) = if totality.passed && bijections.passed {
        (
            check_triality(c, &lookup, tol)?,
            check_minors(c, &minors_of, &lookup, tol)?,
            check_faithful(c, tol)?,
        )
    } else {
        let why = "images or bijections malformed";
        (ConditionResult::skipped(why), ConditionResult::skipped(why), ConditionResult::skipped(why))
    };

    Ok(CheckReport { totality, bijections, unit_phase, triality, minors, faithful })
}

fn check_triality(
    c: &RepresentationCandidate,
    lookup: &impl Fn(&AlternatingDimap) -> Option<usize>,
    tol: f64,
) -> Result<ConditionResult, RepresentError> {
    let mut out = ConditionResult::new();
    for (i, g) in c.members.iter().enumerate() {
        out.checked += 1;
        let t = g.trial();
        let h = lookup(&t).expect("trial closure checked");
        let expected = transform(&c.images[i], omega());
        if !matches_some_isomorphism(&t, &c.members[h], &c.images[h], &c.epsilon[h], &c.epsilon[i], &expected, tol)? {
            out.fail(|| format!("F(trial {}) is not proportional to L^[w] F", describe(g)));
        }
    }
    Ok(out)
}

fn check_minors(
    c: &RepresentationCandidate,
    minors_of: &[Vec<[AlternatingDimap; 3]>],
    lookup: &impl Fn(&AlternatingDimap) -> Option<usize>,
    tol: f64,
) -> Result<ConditionResult, RepresentError> {
    let mut out = ConditionResult::new();
    for (i, g) in c.members.iter().enumerate() {
        let eps = &c.epsilon[i];
        for e in 0..g.edge_count() {
            let removed = eps[e];
            let slot: Vec<usize> = (0..g.edge_count())
                .filter(|&x| x != e)
                .map(|x| if eps[x] > removed { eps[x] - 1 } else { eps[x] })
                .collect();
            for (kind, r) in ReductionKind::ALL.iter().zip(&minors_of[i][e]) {
                out.checked += 1;
                let h = lookup(r).expect("closure checked");
                let spec = MinorSpec::new(removed, c.nu * kind.value())?;
                let expected = take_minor(&c.images[i], spec, tol)?;
                if !matches_some_isomorphism(r, &c.members[h], &c.images[h], &c.epsilon[h], &slot, &expected, tol)? {
                    out.fail(|| format!("{} at {} by {kind}: image of the reduction differs from the minor", describe(g), g.edges()[e].label));
                }
            }
        }
    }
    Ok(out)
}

fn equivalent_images(f: &BinaryFunction, g: &BinaryFunction, tol: f64) -> Result<bool, RepresentError> {
    let m = f.dimension();
    for order in (0..m).permutations(m) {
        if proportional(f, &g.permute_elements(&order)?, tol)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_faithful(c: &RepresentationCandidate, tol: f64) -> Result<ConditionResult, RepresentError> {
    let mut out = ConditionResult::new();
    for i in 0..c.members.len() {
        for j in i + 1..c.members.len() {
            let (g, h) = (&c.members[i], &c.members[j]);
            if g.edge_count() != h.edge_count() || isomorphic(g, h) {
                continue;
            }
            if g.edge_count() > FAITHFUL_MAX_DIMENSION {
                out.fail(|| format!("not checked above {FAITHFUL_MAX_DIMENSION} edges"));
                continue;
            }
            out.checked += 1;
            if equivalent_images(&c.images[i], &c.images[j], tol)? {
                out.fail(|| format!("non-isomorphic {} and {} have equivalent images", describe(g), describe(h)));
            }
        }
    }
    Ok(out)
}

/// Angles `2πj/NU_SAMPLES` whose `ν` makes the candidate pass, to tell a
/// wrong `ν` apart from a class with no representation at this `F`.
pub fn search_nu(c: &RepresentationCandidate, tol: f64) -> Result<Vec<f64>, RepresentError> {
    let mut hits = Vec::new();
    for j in 0..NU_SAMPLES {
        let theta = 2.0 * PI * j as f64 / NU_SAMPLES as f64;
        let trial = c.clone().with_nu(Complex64::from_polar(1.0, theta));
        match check_representation(&trial, tol) {
            Ok(report) if report.passed() => hits.push(theta),
            Ok(_) | Err(RepresentError::BinFun(BinFunError::NormalizationError(_))) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(hits)
}

#[derive(Debug, Clone)]
pub struct Claim1Report {
    pub image: BinaryFunction,
    pub eigenvalues: [Complex64; 2],
    /// `‖M(ω)v − v‖∞` for the returned vector.
    pub residual: f64,
    /// Distance from `(1, √2−1)`.
    pub deviation: f64,
}

/// The eigenvalue-1 eigenvector of `M(ω)`, scaled to empty-set entry 1.
pub fn claim1_solve() -> Claim1Report {
    let m = m_matrix(omega());
    let [[a, b], [c, d]] = m.entries;
    let one = Complex64::new(1.0, 0.0);
    // null vector of M − I from whichever row is better conditioned
    let v = if (a - one).norm() + b.norm() >= c.norm() + (d - one).norm() {
        [b, one - a]
    } else {
        [d - one, -c]
    };
    let v = [one, v[1] / v[0]];
    let image = BinaryFunction::make(1, v.to_vec()).expect("unit first entry");
    let mv = m.apply(v);
    let residual = (mv[0] - v[0]).norm().max((mv[1] - v[1]).norm());
    let expected = ultraloop_image();
    let deviation = (v[1] - expected.get(1)).norm();
    Claim1Report { image, eigenvalues: m.eigenvalues(), residual, deviation }
}

/// One linear formulation of "every minor of `f` is `F(C₁)^{⊗k}`".
#[derive(Debug, Clone)]
pub struct RouteReport {
    pub name: String,
    pub equations: usize,
    pub unknowns: usize,
    pub rank: usize,
    pub residual: f64,
    pub unique: bool,
    /// `‖f − F(C₁)^{⊗(k+1)}‖∞` for the solved `f`.
    pub deviation: f64,
}

impl RouteReport {
    fn from_solution(name: &str, system: &LinearSystem, sol: &LinearSolution, target: &BinaryFunction) -> Self {
        let n = target.values().len();
        let deviation = sol.solution[..n]
            .iter()
            .zip(target.values())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max);
        Self {
            name: name.into(),
            equations: system.equations(),
            unknowns: system.unknowns(),
            rank: sol.rank,
            residual: sol.residual,
            unique: sol.is_unique(),
            deviation,
        }
    }

    pub fn passed(&self, tol: f64) -> bool {
        self.unique && self.residual <= tol && self.deviation <= tol
    }
}

impl fmt::Display for RouteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: rank {}/{} over {} equations, residual {:.1e}, deviation {:.1e}",
            self.name, self.rank, self.unknowns, self.equations, self.residual, self.deviation
        )
    }
}

#[derive(Debug, Clone)]
pub struct Claim2Report {
    pub k: usize,
    /// Slice equations `f_{G:i←b} = f_{0:i←b}·u_G` in the unknown `f`.
    pub slices: RouteReport,
    /// Minor equations with two sampled `μ` per element.
    pub two_values: RouteReport,
    /// Minor equations with two sampled `μ` and all of `1, ω, ω²`.
    pub all_values: RouteReport,
    /// Changing any single entry of the tensor power breaks some minor.
    pub perturbation_detected: bool,
    pub passed: bool,
}

impl Claim2Report {
    pub fn two_values_suffice(&self, tol: f64) -> bool {
        self.two_values.passed(tol)
    }
}

fn slice_system(k: usize, u: &[Complex64]) -> LinearSystem {
    let width = k;
    let mut s = LinearSystem::new(1 << (k + 1));
    let one = Complex64::new(1.0, 0.0);
    s.push(vec![(0, one)], one);
    for i in 0..=k {
        for b in [false, true] {
            let base = insert_bit_index(0, width, i, b);
            for (g, &ug) in u.iter().enumerate() {
                let idx = insert_bit_index(g, width, i, b);
                if idx == base {
                    s.push(vec![(idx, one - ug)], Complex64::new(0.0, 0.0));
                } else {
                    s.push(vec![(idx, one), (base, -ug)], Complex64::new(0.0, 0.0));
                }
            }
        }
    }
    s
}

/// Unknowns: the `2^{k+1}` entries of `f`, then one scale `c` per
/// (element, `μ`). Equations: `f_{G:i←0} + λ(μ)·f_{G:i←1} = c·u_G`.
fn minor_system(k: usize, u: &[Complex64], weights: &[Vec<Complex64>]) -> LinearSystem {
    let n = 1 << (k + 1);
    let scales: usize = weights.iter().map(Vec::len).sum();
    let mut s = LinearSystem::new(n + scales);
    let one = Complex64::new(1.0, 0.0);
    s.push(vec![(0, one)], one);
    let mut col = n;
    for (i, ws) in weights.iter().enumerate() {
        for &w in ws {
            for (g, &ug) in u.iter().enumerate() {
                s.push(
                    vec![(insert_bit_index(g, k, i, false), one), (insert_bit_index(g, k, i, true), w), (col, -ug)],
                    Complex64::new(0.0, 0.0),
                );
            }
            col += 1;
        }
    }
    s
}

fn sample_mu(rng: &mut ChaCha8Rng) -> Complex64 {
    loop {
        let mu = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        if lambda(mu).is_ok() && mu.norm() > 1e-3 {
            return mu;
        }
    }
}

/// Solves for every `f` of dimension `k+1` all of whose minors equal
/// `F(C₁)^{⊗k}`, three ways, and checks the solution set is exactly
/// `{F(C₁)^{⊗(k+1)}}`.
pub fn claim2_check(k: usize, tol: f64, seed: u64) -> Result<Claim2Report, RepresentError> {
    if k == 0 || k > MAX_EDGES {
        return Err(RepresentError::OutOfRange(format!("k = {k} outside 1..={MAX_EDGES}")));
    }
    let fc1 = ultraloop_image();
    let u = tensor_power(&fc1, k);
    let target = tensor_power(&fc1, k + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank_tol = 1e-10;

    let slices = slice_system(k, u.values());
    let slices_report = RouteReport::from_solution("slices", &slices, &slices.solve(rank_tol), &target);

    let mut two = Vec::new();
    let mut all = Vec::new();
    for _ in 0..=k {
        let (a, b) = loop {
            let (a, b) = (sample_mu(&mut rng), sample_mu(&mut rng));
            if (lambda(a)? - lambda(b)?).norm() > 1e-2 {
                break (a, b);
            }
        };
        let pair = vec![lambda(a)?, lambda(b)?];
        let mut full = pair.clone();
        for kind in ReductionKind::ALL {
            full.push(lambda(kind.value())?);
        }
        two.push(pair);
        all.push(full);
    }
    let sys_two = minor_system(k, u.values(), &two);
    let two_report = RouteReport::from_solution("two sampled mu", &sys_two, &sys_two.solve(rank_tol), &target);
    let sys_all = minor_system(k, u.values(), &all);
    let all_report = RouteReport::from_solution("sampled mu plus 1, w, w2", &sys_all, &sys_all.solve(rank_tol), &target);

    let mut perturbation_detected = true;
    for idx in 0..target.values().len() {
        let mut values = target.values().to_vec();
        values[idx] += Complex64::new(0.1, 0.0);
        let perturbed = crate::binfun::RawVector::new(k + 1, values)?;
        let mut broken = false;
        'search: for i in 0..=k {
            for kind in ReductionKind::ALL {
                let raw = raw_minor(&perturbed, i, lambda(kind.value())?)?;
                if !proportional(&raw, &u, tol)? {
                    broken = true;
                    break 'search;
                }
            }
        }
        perturbation_detected &= broken;
    }

    let passed = slices_report.passed(tol) && all_report.passed(tol) && perturbation_detected;
    Ok(Claim2Report {
        k,
        slices: slices_report,
        two_values: two_report,
        all_values: all_report,
        perturbation_detected,
        passed,
    })
}

#[derive(Debug, Clone)]
pub struct Claim3Report {
    pub k: usize,
    pub catalog_size: usize,
    /// Members of the `(k+1)`-edge catalog all of whose reductions are `kC₁`.
    pub qualifying: Vec<AlternatingDimap>,
    /// Non-qualifying members with some edge whose three reductions are all `kC₁`.
    pub near_misses: usize,
    /// Self-trial members among the qualifying ones.
    pub self_trial_qualifying: usize,
    pub passed: bool,
}

/// Over the `(k+1)`-edge catalog, which maps reduce to `kC₁` every way.
pub fn claim3_check(k: usize) -> Result<Claim3Report, RepresentError> {
    claim3_check_with_cap(k, crate::enumerate::DEFAULT_CAP)
}

pub fn claim3_check_with_cap(k: usize, cap: usize) -> Result<Claim3Report, RepresentError> {
    if k == 0 {
        return Err(RepresentError::OutOfRange("k must be at least 1".into()));
    }
    let catalog = enumerate_dimaps_with_cap(k + 1, cap)?;
    let k_c1 = AlternatingDimap::ultraloops(k);
    let mut qualifying = Vec::new();
    let mut near_misses = 0;
    for g in &catalog.maps {
        let edge_ok: Vec<bool> = (0..g.edge_count())
            .map(|e| {
                ReductionKind::ALL
                    .iter()
                    .all(|&kind| reduce_at(g, e, kind).is_ok_and(|r| isomorphic(&r, &k_c1)))
            })
            .collect();
        if edge_ok.iter().all(|&b| b) {
            qualifying.push(g.clone());
        } else if edge_ok.iter().any(|&b| b) {
            near_misses += 1;
        }
    }
    let self_trial_qualifying = qualifying.iter().filter(|g| is_self_trial(g)).count();
    let passed = if k == 1 {
        qualifying.len() == catalog.len() && catalog.len() == 4 && self_trial_qualifying == 1
    } else {
        qualifying.len() == 1 && isomorphic(&qualifying[0], &AlternatingDimap::ultraloops(k + 1))
    };
    Ok(Claim3Report { k, catalog_size: catalog.len(), qualifying, near_misses, self_trial_qualifying, passed })
}

/// A two-edge map other than `2C₁`: its image is forced to the self-trial
/// `F(C₁)^{⊗2}` while the map itself is not self-trial.
#[derive(Debug, Clone)]
pub struct Obstruction {
    pub map: AlternatingDimap,
    pub trial: AlternatingDimap,
    pub forced_image: BinaryFunction,
    pub image_self_trial: bool,
    pub map_self_trial: bool,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> trial {}; forced image self-trial: {}, map self-trial: {}",
            describe(&self.map),
            describe(&self.trial),
            self.image_self_trial,
            self.map_self_trial
        )
    }
}

#[derive(Debug, Clone)]
pub struct MainTheoremReport {
    pub kmax: usize,
    pub empty_class_passes: bool,
    /// `(k, ν, passed)` for every checked `𝒰_k` and phase.
    pub canonical: Vec<(usize, Complex64, bool)>,
    pub obstructions: Vec<Obstruction>,
    /// The trial orbit of a non-`2C₁` two-edge map, together with `𝒰_1`
    /// and every image set to the forced `F(C₁)^{⊗2}`, passes (a)–(e) but
    /// is not faithful.
    pub unfaithful_orbit_passes: bool,
    pub passed: bool,
}

pub fn main_theorem_check(kmax: usize, tol: f64, seed: u64) -> Result<MainTheoremReport, RepresentError> {
    if kmax > MAX_EDGES {
        return Err(RepresentError::OutOfRange(format!("kmax = {kmax} exceeds {MAX_EDGES}")));
    }
    let empty = RepresentationCandidate { members: vec![], images: vec![], epsilon: vec![], nu: Complex64::new(1.0, 0.0) };
    let empty_class_passes = check_representation(&empty, tol)?.passed();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut canonical = Vec::new();
    for k in 0..=kmax {
        let base = canonical_Uk(k);
        let mut phases = vec![Complex64::new(1.0, 0.0)];
        phases.extend((0..10).map(|_| Complex64::from_polar(1.0, rng.gen_range(0.0..2.0 * PI))));
        for nu in phases {
            let report = check_representation(&base.clone().with_nu(nu), tol)?;
            canonical.push((k, nu, report.passed() && report.faithful.passed));
        }
    }

    let forced = claim2_check(1, tol, seed)?;
    let fc1_sq = tensor_power(&ultraloop_image(), 2);
    let two = enumerate_dimaps(2)?;
    let mut obstructions = Vec::new();
    for g in &two.maps {
        if isomorphic(g, &AlternatingDimap::ultraloops(2)) {
            continue;
        }
        obstructions.push(Obstruction {
            map: g.clone(),
            trial: g.trial(),
            forced_image: fc1_sq.clone(),
            image_self_trial: self_trial(&fc1_sq, tol),
            map_self_trial: is_self_trial(g),
        });
    }

    let unfaithful_orbit_passes = match obstructions.first() {
        Some(ob) => {
            let mut members = vec![AlternatingDimap::empty(), AlternatingDimap::ultraloop()];
            let mut images = vec![BinaryFunction::unit(), ultraloop_image()];
            let mut g = ob.map.clone();
            for _ in 0..3 {
                members.push(g.clone());
                images.push(fc1_sq.clone());
                g = g.trial();
            }
            let epsilon = members.iter().map(|m| (0..m.edge_count()).collect()).collect();
            let report = check_representation(
                &RepresentationCandidate { members, images, epsilon, nu: Complex64::new(1.0, 0.0) },
                tol,
            )?;
            report.passed() && !report.faithful.passed
        }
        None => false,
    };

    let passed = empty_class_passes
        && canonical.iter().all(|&(_, _, ok)| ok)
        && forced.passed
        && obstructions.len() == 3
        && obstructions.iter().all(|o| o.image_self_trial && !o.map_self_trial);
    Ok(MainTheoremReport { kmax, empty_class_passes, canonical, obstructions, unfaithful_orbit_passes, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binfun::DEFAULT_TOL;

    #[test]
    fn canonical_classes_pass() {
        for k in 0..=4 {
            let report = check_representation(&canonical_Uk(k), DEFAULT_TOL).unwrap();
            assert!(report.passed(), "k={k}\n{report}");
            assert!(report.faithful.passed);
        }
        let nu = Complex64::from_polar(1.0, 0.7);
        assert!(check_representation(&canonical_Uk(3).with_nu(nu), DEFAULT_TOL).unwrap().passed());
    }

    #[test]
    fn wrong_ultraloop_image_fails_triality() {
        let mut c = canonical_Uk(1);
        c.images[1] = BinaryFunction::from_reals(1, &[1.0, 1.0]).unwrap();
        let report = check_representation(&c, DEFAULT_TOL).unwrap();
        assert!(!report.triality.passed);
        assert!(!report.passed());
    }

    #[test]
    fn malformed_candidates() {
        let mut c = canonical_Uk(2);
        c.nu = Complex64::new(2.0, 0.0);
        assert!(!check_representation(&c, DEFAULT_TOL).unwrap().unit_phase.passed);
        let mut c = canonical_Uk(2);
        c.epsilon[2] = vec![0, 0];
        let r = check_representation(&c, DEFAULT_TOL).unwrap();
        assert!(!r.bijections.passed && !r.triality.passed);
        let mut c = canonical_Uk(2);
        c.members.remove(1);
        c.images.remove(1);
        c.epsilon.remove(1);
        assert!(matches!(check_representation(&c, DEFAULT_TOL), Err(RepresentError::NotMinorClosed(_))));
    }

    #[test]
    fn nu_search_accepts_every_phase_for_ultraloops() {
        let hits = search_nu(&canonical_Uk(2), DEFAULT_TOL).unwrap();
        assert_eq!(hits.len(), NU_SAMPLES);
    }

    #[test]
    fn claim1_eigenvector() {
        let r = claim1_solve();
        assert!(r.residual < 1e-12 && r.deviation < 1e-12);
        let has = |z: Complex64| r.eigenvalues.iter().any(|e| (e - z).norm() < 1e-12);
        assert!(has(Complex64::new(1.0, 0.0)) && has(omega()));
    }

    #[test]
    fn claim2_small() {
        for k in 1..=3 {
            let r = claim2_check(k, 1e-9, 7).unwrap();
            assert!(r.passed, "{} / {} / {}", r.slices, r.two_values, r.all_values);
            assert!(r.two_values_suffice(1e-9));
        }
    }

    #[test]
    fn claim3_small() {
        let r1 = claim3_check(1).unwrap();
        assert!(r1.passed && r1.qualifying.len() == 4);
        let r2 = claim3_check(2).unwrap();
        assert!(r2.passed && r2.qualifying.len() == 1);
    }

    #[test]
    fn main_theorem_small() {
        let r = main_theorem_check(2, DEFAULT_TOL, 3).unwrap();
        assert!(r.passed && r.empty_class_passes);
        assert_eq!(r.obstructions.len(), 3);
        assert!(r.unfaithful_orbit_passes);
    }
}
