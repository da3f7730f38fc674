//! Exhaustive catalogs of alternating dimaps with `k` edges, one
//! representative per isomorphism class.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::altmap::{
    canonical_form, from_canonical_form, isomorphic, validate, AlternatingDimap, CanonicalForm, DimapError, Edge,
    RawDimap,
};

pub const DEFAULT_CAP: usize = 4;
/// Largest `k` any catalog is built for.
pub const MAX_EDGES: usize = 5;
/// Largest `k` for the rotation-first generator, which walks `(2k)!` cases.
pub const ROTATION_CAP: usize = 4;

/// Summary key: component count, sorted genus profile, self-trial flag.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CatalogKey {
    pub components: usize,
    pub genus_profile: Vec<u32>,
    pub self_trial: bool,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub k: usize,
    /// Canonical representatives, labeled `e0, e1, …`, in canonical-form order.
    pub maps: Vec<AlternatingDimap>,
    pub counts: BTreeMap<CatalogKey, usize>,
}

impl Catalog {
    fn from_forms(k: usize, forms: BTreeSet<CanonicalForm>) -> Result<Self, DimapError> {
        let maps: Vec<AlternatingDimap> = forms.iter().map(from_canonical_form).collect();
        let mut counts = BTreeMap::new();
        for g in &maps {
            let key = CatalogKey {
                components: g.component_count(),
                genus_profile: g.genus_profile()?,
                self_trial: is_self_trial(g),
            };
            *counts.entry(key).or_insert(0) += 1;
        }
        Ok(Self { k, maps, counts })
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn forms(&self) -> BTreeSet<CanonicalForm> {
        self.maps.iter().map(canonical_form).collect()
    }

    /// The member isomorphic to `g`, if any.
    pub fn position(&self, g: &AlternatingDimap) -> Option<usize> {
        if g.edge_count() != self.k {
            return None;
        }
        let form = canonical_form(g);
        self.maps.iter().position(|m| canonical_form(m) == form)
    }
}

pub fn is_self_trial(g: &AlternatingDimap) -> bool {
    isomorphic(&g.trial(), g)
}

/// All alternating dimaps with `k` edges up to isomorphism, `k ≤ DEFAULT_CAP`.
pub fn enumerate_dimaps(k: usize) -> Result<Catalog, DimapError> {
    enumerate_dimaps_with_cap(k, DEFAULT_CAP)
}

/// Walks every pair `(σ, λ)` of permutations of the edges. Each pair is the
/// vertex and anticlockwise-face structure of exactly one labeled map.
pub fn enumerate_dimaps_with_cap(k: usize, cap: usize) -> Result<Catalog, DimapError> {
    let cap = cap.min(MAX_EDGES);
    if k > cap {
        return Err(DimapError::CapExceeded { k, cap });
    }
    let labels: Vec<String> = (0..k).map(|i| format!("e{i}")).collect();
    let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
    let mut forms = BTreeSet::new();
    for sigma in &perms {
        for lambda in &perms {
            let g = AlternatingDimap::from_perms(labels.clone(), sigma.clone(), lambda.clone());
            forms.insert(canonical_form(&g));
        }
    }
    Catalog::from_forms(k, forms)
}

/// Independent generator: edge `i` owns darts `2i → 2i+1`, every permutation
/// of the `2k` darts is tried as a vertex rotation system, and only those that
/// pass validation are kept.
pub fn enumerate_by_rotations(k: usize) -> Result<Catalog, DimapError> {
    if k > ROTATION_CAP {
        return Err(DimapError::CapExceeded { k, cap: ROTATION_CAP });
    }
    let edges: Vec<Edge> = (0..k)
        .map(|i| Edge { label: format!("e{i}"), tail: 2 * i as u32, head: 2 * i as u32 + 1 })
        .collect();
    let n = 2 * k;
    let mut forms = BTreeSet::new();
    for next in (0..n).permutations(n) {
        let mut seen = vec![false; n];
        let mut vertices = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut rot = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                rot.push(d as u32);
                d = next[d];
            }
            vertices.push(rot);
        }
        let raw = RawDimap { edges: edges.clone(), vertices };
        if validate(&raw).is_valid() {
            forms.insert(canonical_form(&AlternatingDimap::new(raw)?));
        }
    }
    Catalog::from_forms(k, forms)
}

pub fn self_trial_members(catalog: &Catalog) -> Vec<&AlternatingDimap> {
    catalog.maps.iter().filter(|g| is_self_trial(g)).collect()
}
