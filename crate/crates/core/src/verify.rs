//! Named, seeded verification suites. Each yields one report line
//! `SUITE <name> PASS|FAIL <details>`.

use std::fmt;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::altmap::{canonical_form, isomorphic, labeled_equal, AlternatingDimap};
use crate::binfun::{
    proportionality_residual, rowspace_indicator, tensor, BinFunError, BinaryFunction, Coefficients, Gf2Matrix,
    DEFAULT_TOL,
};
use crate::enumerate::{enumerate_by_rotations, enumerate_dimaps, self_trial_members};
use crate::minor::{is_degenerate, is_pole, minors_coincide, minors_commute_check, transform_minor_check, MinorSpec};
use crate::reduce::{find_noncommuting_pair, is_degenerate_edge, trial_minor_check, ReductionKind};
use crate::represent::{claim1_solve, claim2_check, claim3_check, main_theorem_check};
use crate::transform::{dense_matrix, omega, omega2, transform};

pub const SUITES: [&str; 6] = ["transforms", "minors", "degeneracy", "dimaps", "claims", "main-theorem"];

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SUITE {} {} {}", self.name, if self.passed { "PASS" } else { "FAIL" }, self.details)
    }
}

/// Runs one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64, tol: f64) -> Option<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (passed, details) = match name {
        "transforms" => transforms(&mut rng, tol),
        "minors" => minors(&mut rng, tol),
        "degeneracy" => degeneracy(&mut rng, tol),
        "dimaps" => dimaps(&mut rng),
        "claims" => claims(seed, tol),
        "main-theorem" => main_theorem(seed, tol),
        _ => return None,
    };
    Some(SuiteResult { name: name.to_string(), passed, details })
}

/// Random binary function with entries in the unit square.
pub fn random_function(rng: &mut impl Rng, m: usize) -> BinaryFunction {
    let values = (0..1usize << m)
        .map(|i| {
            if i == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            }
        })
        .collect();
    BinaryFunction::make(m, values).expect("unit first entry")
}

fn random_mu(rng: &mut impl Rng) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.2..2.0), rng.gen_range(0.0..std::f64::consts::TAU))
}

fn sup(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

fn transforms(rng: &mut ChaCha8Rng, tol: f64) -> (bool, String) {
    let mut worst_comp: f64 = 0.0;
    for _ in 0..200 {
        let m = rng.gen_range(1..=8);
        let f = random_function(rng, m);
        let (a, b) = (random_mu(rng), random_mu(rng));
        let two = transform(&transform(&f, b), a);
        let one = transform(&f, a * b);
        let err = two.values().iter().zip(one.values()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        worst_comp = worst_comp.max(err / sup(f.values()));
    }
    let mut worst_dense: f64 = 0.0;
    for _ in 0..50 {
        let m = rng.gen_range(1..=6);
        let f = random_function(rng, m);
        let mu = random_mu(rng);
        let fast = transform(&f, mu);
        let dense = dense_matrix(mu, m);
        for (row, x) in dense.iter().zip(fast.values()) {
            let y: Complex64 = row.iter().zip(f.values()).map(|(a, b)| a * b).sum();
            worst_dense = worst_dense.max((x - y).norm());
        }
    }
    let mut worst_dual: f64 = 0.0;
    for _ in 0..30 {
        let cols = rng.gen_range(1..=5);
        let rows: Vec<u32> = (0..rng.gen_range(1..=4)).map(|_| rng.gen_range(0..1u32 << cols)).collect();
        let n = Gf2Matrix::new(cols, rows.clone()).expect("fits");
        let orth: Vec<u32> = (0..1u32 << cols)
            .filter(|x| rows.iter().all(|r| (x & r).count_ones() % 2 == 0))
            .collect();
        let perp = Gf2Matrix::new(cols, orth).expect("fits");
        let res = proportionality_residual(
            &transform(&rowspace_indicator(&n), Complex64::new(-1.0, 0.0)),
            &rowspace_indicator(&perp),
            tol,
        )
        .unwrap_or(f64::INFINITY);
        worst_dual = worst_dual.max(res);
    }
    let eig = claim1_solve();
    let passed = worst_comp <= 1e-9 && worst_dense <= 1e-10 && worst_dual <= 1e-9 && eig.residual <= 1e-12;
    (
        passed,
        format!(
            "composition={worst_comp:.1e} dense={worst_dense:.1e} duality={worst_dual:.1e} eigen={:.1e}",
            eig.residual
        ),
    )
}

fn minors(rng: &mut ChaCha8Rng, tol: f64) -> (bool, String) {
    let mut failures = 0;
    let mut resampled = 0;
    let mut accepted = 0;
    while accepted < 200 {
        let m = rng.gen_range(1..=6);
        let f = random_function(rng, m);
        let (mu, nu) = (random_mu(rng), random_mu(rng));
        if is_pole(nu) || is_pole(mu * nu) {
            resampled += 1;
            continue;
        }
        match transform_minor_check(&f, mu, nu, rng.gen_range(0..m), 1e-8) {
            Ok(ok) => {
                accepted += 1;
                failures += usize::from(!ok);
            }
            Err(BinFunError::NormalizationError(_)) => resampled += 1,
            Err(_) => failures += 1,
        }
    }
    let params = [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0), omega(), omega2()];
    let mut commute_fail = 0;
    let mut commute_checked = 0;
    for _ in 0..100 {
        let m = rng.gen_range(2..=6);
        let f = random_function(rng, m);
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                for &a in &params {
                    for &b in &params {
                        commute_checked += 1;
                        match minors_commute_check(&f, MinorSpec { element: i, mu: a }, MinorSpec { element: j, mu: b }, tol) {
                            Ok(true) | Err(BinFunError::NormalizationError(_)) => {}
                            _ => commute_fail += 1,
                        }
                    }
                }
            }
        }
    }
    let rate = resampled as f64 / (accepted + resampled) as f64;
    (
        failures == 0 && commute_fail == 0 && rate <= 0.05,
        format!("interchange_failures={failures} resample_rate={rate:.3} commute_failures={commute_fail}/{commute_checked}"),
    )
}

fn loop_or_coloop(n: &Gf2Matrix, i: usize) -> bool {
    let cols = n.cols();
    let bit = 1u32 << (cols - 1 - i);
    let is_loop = n.rows().iter().all(|r| r & bit == 0);
    let without = Gf2Matrix::new(cols, n.rows().iter().map(|r| r & !bit).collect()).expect("fits");
    is_loop || without.rank() < n.rank()
}

fn degeneracy(rng: &mut ChaCha8Rng, tol: f64) -> (bool, String) {
    let mut mismatches = 0;
    let mut checked = 0;
    for _ in 0..200 {
        let cols = rng.gen_range(1..=5);
        let rows: Vec<u32> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(0..1u32 << cols)).collect();
        let n = Gf2Matrix::new(cols, rows).expect("fits");
        let f = rowspace_indicator(&n);
        for i in 0..cols {
            checked += 1;
            if is_degenerate(&f, i, tol).unwrap_or(false) != loop_or_coloop(&n, i) {
                mismatches += 1;
            }
        }
    }
    let mut disagreements = 0;
    for round in 0..100 {
        let m = rng.gen_range(1..=5);
        let f = if round % 2 == 0 {
            random_function(rng, m)
        } else {
            // a separable element, moved to a random position
            let t = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let single = BinaryFunction::make(1, vec![Complex64::new(1.0, 0.0), t]).expect("unit");
            let joined = tensor(&random_function(rng, m - 1), &single);
            let mut order: Vec<usize> = (0..m).collect();
            order.shuffle(rng);
            joined.permute_elements(&order).expect("permutation")
        };
        let verdict = |i: usize, a: Complex64, b: Complex64| minors_coincide(&f, i, a, b, tol).unwrap_or(false);
        for i in 0..m {
            let (a, b, c, d) = (random_mu(rng), random_mu(rng), random_mu(rng), random_mu(rng));
            if [a, b, c, d].iter().any(|&x| is_pole(x)) {
                continue;
            }
            if verdict(i, a, b) != verdict(i, c, d) {
                disagreements += 1;
            }
        }
    }
    (
        mismatches == 0 && disagreements == 0,
        format!("loop_coloop_mismatches={mismatches}/{checked} mu_pair_disagreements={disagreements}"),
    )
}

fn all_maps_up_to(k: usize) -> Vec<AlternatingDimap> {
    (0..=k).flat_map(|j| enumerate_dimaps(j).expect("within cap").maps).collect()
}

fn relabeled(g: &AlternatingDimap, rng: &mut ChaCha8Rng) -> AlternatingDimap {
    let mut raw = g.raw().clone();
    raw.edges.shuffle(rng);
    AlternatingDimap::new(raw).expect("edge order does not affect validity")
}

fn dimaps(rng: &mut ChaCha8Rng) -> (bool, String) {
    let counts: Vec<usize> = (0..=4).map(|k| enumerate_dimaps(k).expect("within cap").len()).collect();
    let strategies_agree = (0..=3).all(|k| {
        enumerate_dimaps(k).expect("cap").forms() == enumerate_by_rotations(k).expect("cap").forms()
    });
    let two = enumerate_dimaps(2).expect("cap");
    let st = self_trial_members(&two);
    let self_trial_ok = st.len() == 1 && isomorphic(st[0], &AlternatingDimap::ultraloops(2));

    let small = all_maps_up_to(3);
    let four = enumerate_dimaps(4).expect("cap").maps;
    let mut cubed_fail = small.iter().filter(|g| !labeled_equal(&g.trial_power(3), g)).count();
    for _ in 0..100 {
        let g = relabeled(four.choose(rng).expect("non-empty"), rng);
        cubed_fail += usize::from(!labeled_equal(&g.trial_power(3), &g));
    }

    let mut identity_fail = 0;
    let mut triloop_mismatch = 0;
    for g in &small {
        for e in 0..g.edge_count() {
            for mu in ReductionKind::ALL {
                for nu in ReductionKind::ALL {
                    identity_fail += usize::from(!trial_minor_check(g, e, mu, nu).unwrap_or(false));
                }
            }
            let tri = g.classify_edge(e).map(|c| c.is_triloop).unwrap_or(false);
            triloop_mismatch += usize::from(tri != is_degenerate_edge(g, e).unwrap_or(!tri));
        }
    }
    let passed = counts[..3] == [1, 1, 4]
        && strategies_agree
        && self_trial_ok
        && cubed_fail == 0
        && identity_fail == 0
        && triloop_mismatch == 0;
    (
        passed,
        format!(
            "counts={counts:?} strategies_agree={strategies_agree} self_trial_k2={} trial_cubed_failures={cubed_fail} \
             trial_minor_failures={identity_fail} triloop_mismatches={triloop_mismatch}",
            st.len()
        ),
    )
}

fn claims(seed: u64, tol: f64) -> (bool, String) {
    let c1 = claim1_solve();
    let c1_ok = c1.residual <= 1e-12 && c1.deviation <= 1e-12;
    let mut details = vec![format!("claim1 u={:.16} residual={:.1e}", c1.image.get(1).re, c1.residual)];
    let mut passed = c1_ok;
    for k in 1..=3 {
        match claim2_check(k, tol, seed) {
            Ok(r) => {
                passed &= r.passed;
                details.push(format!(
                    "claim2 k={k} rank={}/{} residual={:.1e} two_mu_suffice={}",
                    r.all_values.rank,
                    r.all_values.unknowns,
                    r.all_values.residual,
                    r.two_values_suffice(tol)
                ));
            }
            Err(e) => {
                passed = false;
                details.push(format!("claim2 k={k} error: {e}"));
            }
        }
    }
    for k in 1..=3 {
        match claim3_check(k) {
            Ok(r) => {
                passed &= r.passed;
                let forms: Vec<String> = r.qualifying.iter().map(|g| canonical_form(g).to_string()).collect();
                details.push(format!(
                    "claim3 k={k} catalog={} qualifying={} [{}]",
                    r.catalog_size,
                    r.qualifying.len(),
                    forms.join(",")
                ));
            }
            Err(e) => {
                passed = false;
                details.push(format!("claim3 k={k} error: {e}"));
            }
        }
    }
    (passed, details.join("; "))
}

fn main_theorem(seed: u64, tol: f64) -> (bool, String) {
    let mut details = Vec::new();
    let mut passed = match main_theorem_check(5, tol, seed) {
        Ok(r) => {
            details.push(format!(
                "classes_checked={} empty_class={} obstructions={}",
                r.canonical.len(),
                r.empty_class_passes,
                r.obstructions.len()
            ));
            for o in &r.obstructions {
                details.push(format!("witness {o}"));
            }
            details.push(format!("unfaithful_orbit_passes_conditions={}", r.unfaithful_orbit_passes));
            r.passed
        }
        Err(e) => {
            details.push(format!("error: {e}"));
            false
        }
    };
    let mut found = None;
    'search: for k in 2..=4 {
        for g in enumerate_dimaps(k).expect("cap").maps {
            if let Some(pair) = find_noncommuting_pair(&g) {
                found = Some((g, pair));
                break 'search;
            }
        }
    }
    match found {
        Some((g, pair)) => details.push(format!("noncommuting [{}] {pair}", canonical_form(&g))),
        None => {
            passed = false;
            details.push("noncommuting NOT-FOUND-AT-CAP".into());
        }
    }
    (passed, details.join("; "))
}

/// The default tolerance, or `TRIALAB_TOL` when set to a positive number.
pub fn tolerance_from_env() -> Result<f64, String> {
    match std::env::var("TRIALAB_TOL") {
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(format!("TRIALAB_TOL must be a positive number, got `{s}`")),
        },
        Err(_) => Ok(DEFAULT_TOL),
    }
}
