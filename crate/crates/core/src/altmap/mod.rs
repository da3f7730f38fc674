//! Alternating dimaps as dart-based rotation systems.
//!
//! Every edge has a tail dart (at its tail vertex) and a head dart (at its
//! head vertex). A vertex lists its darts in clockwise order, and around each
//! vertex head darts and tail darts alternate.
//!
//! Two permutations of the edges are derived from the rotations:
//!
//! * `σ(e)`: the next incoming edge clockwise around the head of `e`;
//! * `λ(e)`: the left successor, the outgoing edge immediately clockwise
//!   after `e` at its head.
//!
//! The right successor is `ρ = λ∘σ⁻¹`. Vertices are the cycles of `σ`,
//! anticlockwise faces the cycles of `λ` and clockwise faces the cycles of
//! `ρ`, and any pair `(σ, λ)` describes exactly one labeled map.

mod iso;
pub(crate) mod perm;

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

pub use iso::{
    canonical_form, find_isomorphism, is_isomorphism, isomorphic, isomorphisms, labeled_equal, CanonicalForm,
};
pub(crate) use iso::from_canonical_form;

use crate::reduce::{reduce_at, ReductionKind};
use perm::Perm;

pub type Dart = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: String,
    pub tail: Dart,
    pub head: Dart,
}

/// Unvalidated dimap data, as read from a file or built by hand.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawDimap {
    pub edges: Vec<Edge>,
    /// Clockwise dart rotation of each vertex.
    pub vertices: Vec<Vec<Dart>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateLabel(String),
    EdgeDartsCoincide { label: String, dart: Dart },
    DartInTwoEdges(Dart),
    EmptyVertex(usize),
    UnknownDart { vertex: usize, dart: Dart },
    DartRepeated(Dart),
    DartMissing(Dart),
    NotAlternating { vertex: usize, position: usize, next: usize },
    NonUniformFace { darts: Vec<Dart> },
    NonIntegerGenus { component: usize, euler: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateLabel(l) => write!(f, "edge label {l} used twice"),
            Violation::EdgeDartsCoincide { label, dart } => {
                write!(f, "edge {label} uses dart {dart} as both tail and head")
            }
            Violation::DartInTwoEdges(d) => write!(f, "dart {d} belongs to two edges"),
            Violation::EmptyVertex(v) => write!(f, "vertex {v} is isolated"),
            Violation::UnknownDart { vertex, dart } => {
                write!(f, "vertex {vertex} lists dart {dart}, which belongs to no edge")
            }
            Violation::DartRepeated(d) => write!(f, "dart {d} appears in more than one rotation slot"),
            Violation::DartMissing(d) => write!(f, "dart {d} appears in no vertex rotation"),
            Violation::NotAlternating { vertex, position, next } => write!(
                f,
                "vertex {vertex}: darts at positions {position} and {next} are both incoming or both outgoing"
            ),
            Violation::NonUniformFace { darts } => write!(f, "face {darts:?} is not uniformly directed"),
            Violation::NonIntegerGenus { component, euler } => {
                write!(f, "component {component} has Euler characteristic {euler}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimapError {
    #[error("invalid alternating dimap:\n{0}")]
    InvalidMap(ValidationReport),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("component {component} has Euler characteristic {euler}")]
    NonIntegerGenus { component: usize, euler: i64 },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("edge count {k} exceeds the enumeration cap {cap}")]
    CapExceeded { k: usize, cap: usize },
}

/// Incidence lookups for the darts of a structurally sound map.
struct DartIndex {
    /// dart -> (edge, is tail dart)
    owner: HashMap<Dart, (usize, bool)>,
    next_cw: HashMap<Dart, Dart>,
}

impl DartIndex {
    fn other_end(&self, edges: &[Edge], d: Dart) -> Dart {
        let (e, is_tail) = self.owner[&d];
        if is_tail {
            edges[e].head
        } else {
            edges[e].tail
        }
    }
}

fn structural_violations(raw: &RawDimap) -> (Vec<Violation>, Option<DartIndex>) {
    let mut violations = Vec::new();
    let mut labels = HashSet::new();
    let mut owner = HashMap::new();
    for (i, e) in raw.edges.iter().enumerate() {
        if !labels.insert(e.label.as_str()) {
            violations.push(Violation::DuplicateLabel(e.label.clone()));
        }
        if e.tail == e.head {
            violations.push(Violation::EdgeDartsCoincide { label: e.label.clone(), dart: e.tail });
            continue;
        }
        for (d, is_tail) in [(e.tail, true), (e.head, false)] {
            if owner.insert(d, (i, is_tail)).is_some() {
                violations.push(Violation::DartInTwoEdges(d));
            }
        }
    }
    let mut placed = HashSet::new();
    let mut next_cw = HashMap::new();
    for (v, rot) in raw.vertices.iter().enumerate() {
        if rot.is_empty() {
            violations.push(Violation::EmptyVertex(v));
            continue;
        }
        for (p, &d) in rot.iter().enumerate() {
            if !owner.contains_key(&d) {
                violations.push(Violation::UnknownDart { vertex: v, dart: d });
            }
            if !placed.insert(d) {
                violations.push(Violation::DartRepeated(d));
            }
            let next = rot[(p + 1) % rot.len()];
            next_cw.insert(d, next);
            if let (Some(&(_, a)), Some(&(_, b))) = (owner.get(&d), owner.get(&next)) {
                // a two-dart rotation has one adjacent pair, not two
                if a == b && !(rot.len() == 2 && p == 1) {
                    violations.push(Violation::NotAlternating { vertex: v, position: p, next: (p + 1) % rot.len() });
                }
            }
        }
    }
    let mut missing: Vec<Dart> = owner.keys().filter(|d| !placed.contains(d)).copied().collect();
    missing.sort_unstable();
    violations.extend(missing.into_iter().map(Violation::DartMissing));
    let index = violations.is_empty().then_some(DartIndex { owner, next_cw });
    (violations, index)
}

/// Traces the faces of a structurally sound map: orbits of
/// `d ↦ next_cw(other_end(d))`.
fn trace_faces(raw: &RawDimap, index: &DartIndex) -> Vec<Vec<Dart>> {
    let mut darts: Vec<Dart> = index.owner.keys().copied().collect();
    darts.sort_unstable();
    let mut seen = HashSet::new();
    let mut faces = Vec::new();
    for start in darts {
        if seen.contains(&start) {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while seen.insert(d) {
            face.push(d);
            d = index.next_cw[&index.other_end(&raw.edges, d)];
        }
        faces.push(face);
    }
    faces
}

/// Checks every alternating-dimap invariant and lists each violation.
pub fn validate(raw: &RawDimap) -> ValidationReport {
    let (mut violations, index) = structural_violations(raw);
    if let Some(index) = index {
        for face in trace_faces(raw, &index) {
            let tails = face.iter().filter(|d| index.owner[d].1).count();
            if tails != 0 && tails != face.len() {
                violations.push(Violation::NonUniformFace { darts: face });
            }
        }
        if violations.is_empty() {
            let map = AlternatingDimap { raw: raw.clone() };
            for (c, comp) in map.components().iter().enumerate() {
                let euler = map.euler_characteristic(comp);
                if euler > 2 || euler % 2 != 0 {
                    violations.push(Violation::NonIntegerGenus { component: c, euler });
                }
            }
        }
    }
    ValidationReport { violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Anticlockwise,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Darts in face-tracing order.
    pub darts: Vec<Dart>,
    /// Edge indices in the direction of the edges.
    pub edges: Vec<usize>,
    pub orientation: Orientation,
}

/// `(σ, λ)` on edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct EdgePerms {
    pub sigma: Perm,
    pub lambda: Perm,
}

impl EdgePerms {
    pub fn rho(&self) -> Perm {
        perm::compose(&self.lambda, &perm::inverse(&self.sigma))
    }
}

/// A validated alternating dimap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingDimap {
    raw: RawDimap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EdgeClassification {
    pub is_ultraloop: bool,
    pub is_1loop: bool,
    pub is_omega_loop: bool,
    pub is_omega2_loop: bool,
    pub is_triloop: bool,
    pub is_proper_triloop: bool,
    /// Indexed by [`ReductionKind::index`].
    pub is_semiloop: [bool; 3],
    pub is_proper_semiloop: bool,
}

impl EdgeClassification {
    pub fn is_mu_semiloop(&self, kind: ReductionKind) -> bool {
        self.is_semiloop[kind.index()]
    }
}

impl AlternatingDimap {
    pub fn new(raw: RawDimap) -> Result<Self, DimapError> {
        let report = validate(&raw);
        if report.is_valid() {
            Ok(AlternatingDimap { raw })
        } else {
            Err(DimapError::InvalidMap(report))
        }
    }

    pub fn empty() -> Self {
        AlternatingDimap { raw: RawDimap::default() }
    }

    /// The ultraloop `C₁` with edge label `e0`.
    pub fn ultraloop() -> Self {
        AlternatingDimap {
            raw: RawDimap {
                edges: vec![Edge { label: "e0".into(), tail: 0, head: 1 }],
                vertices: vec![vec![0, 1]],
            },
        }
    }

    /// `kC₁` with labels `e0, …, e{k-1}`.
    pub fn ultraloops(k: usize) -> Self {
        let labels = (0..k).map(|i| format!("e{i}")).collect();
        Self::from_perms(labels, perm::identity(k), perm::identity(k))
    }

    /// Builds the map with darts `2i` (tail) and `2i+1` (head) for edge `i`.
    pub(crate) fn from_perms(labels: Vec<String>, sigma: Perm, lambda: Perm) -> Self {
        debug_assert!(perm::is_permutation(&sigma) && perm::is_permutation(&lambda));
        let edges = labels
            .into_iter()
            .enumerate()
            .map(|(i, label)| Edge { label, tail: 2 * i as Dart, head: 2 * i as Dart + 1 })
            .collect();
        let vertices = perm::cycles(&sigma)
            .into_iter()
            .map(|cycle| {
                cycle
                    .into_iter()
                    .flat_map(|e| [2 * e as Dart + 1, 2 * lambda[e] as Dart])
                    .collect()
            })
            .collect();
        AlternatingDimap { raw: RawDimap { edges, vertices } }
    }

    pub(crate) fn perms(&self) -> EdgePerms {
        let n = self.raw.edges.len();
        let mut owner = HashMap::with_capacity(2 * n);
        for (i, e) in self.raw.edges.iter().enumerate() {
            owner.insert(e.tail, i);
            owner.insert(e.head, i);
        }
        let mut sigma = vec![0; n];
        let mut lambda = vec![0; n];
        for rot in &self.raw.vertices {
            let len = rot.len();
            for (p, d) in rot.iter().enumerate() {
                let e = owner[d];
                if self.raw.edges[e].head == *d {
                    lambda[e] = owner[&rot[(p + 1) % len]];
                    sigma[e] = owner[&rot[(p + 2) % len]];
                }
            }
        }
        EdgePerms { sigma, lambda }
    }

    pub fn raw(&self) -> &RawDimap {
        &self.raw
    }

    pub fn into_raw(self) -> RawDimap {
        self.raw
    }

    pub fn edges(&self) -> &[Edge] {
        &self.raw.edges
    }

    pub fn edge_count(&self) -> usize {
        self.raw.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.raw.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.edges.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.raw.edges.iter().map(|e| e.label.clone()).collect()
    }

    pub fn edge_index(&self, label: &str) -> Result<usize, DimapError> {
        self.raw
            .edges
            .iter()
            .position(|e| e.label == label)
            .ok_or_else(|| DimapError::UnknownEdge(label.to_string()))
    }

    fn check_edge(&self, e: usize) -> Result<(), DimapError> {
        if e < self.edge_count() {
            Ok(())
        } else {
            Err(DimapError::UnknownEdge(format!("#{e}")))
        }
    }

    fn vertex_of(&self) -> HashMap<Dart, usize> {
        let mut at = HashMap::new();
        for (v, rot) in self.raw.vertices.iter().enumerate() {
            for &d in rot {
                at.insert(d, v);
            }
        }
        at
    }

    /// `(tail vertex, head vertex)` of edge `e`, as rotation indices.
    pub fn endpoints(&self, e: usize) -> Result<(usize, usize), DimapError> {
        self.check_edge(e)?;
        let at = self.vertex_of();
        let edge = &self.raw.edges[e];
        Ok((at[&edge.tail], at[&edge.head]))
    }

    pub fn is_loop(&self, e: usize) -> Result<bool, DimapError> {
        let (t, h) = self.endpoints(e)?;
        Ok(t == h)
    }

    pub fn faces(&self) -> Vec<Face> {
        let (_, index) = structural_violations(&self.raw);
        let index = index.expect("validated map");
        trace_faces(&self.raw, &index)
            .into_iter()
            .map(|darts| {
                let is_tail = index.owner[&darts[0]].1;
                let mut edges: Vec<usize> = darts.iter().map(|d| index.owner[d].0).collect();
                let orientation = if is_tail {
                    Orientation::Anticlockwise
                } else {
                    // traced against the edge direction
                    edges.reverse();
                    Orientation::Clockwise
                };
                Face { darts, edges, orientation }
            })
            .collect()
    }

    pub fn face_count(&self) -> usize {
        let p = self.perms();
        perm::cycles(&p.lambda).len() + perm::cycles(&p.rho()).len()
    }

    /// Next edge after `e` around its anticlockwise face.
    pub fn left_successor(&self, e: usize) -> Result<usize, DimapError> {
        self.check_edge(e)?;
        Ok(self.perms().lambda[e])
    }

    /// Next edge after `e` around its clockwise face.
    pub fn right_successor(&self, e: usize) -> Result<usize, DimapError> {
        self.check_edge(e)?;
        Ok(self.perms().rho()[e])
    }

    /// Edge sets of the connected components, ordered by smallest edge.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let p = self.perms();
        perm::orbits(self.edge_count(), &[&p.sigma, &p.lambda])
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    fn euler_characteristic(&self, component: &[usize]) -> i64 {
        let p = self.perms();
        let inside: HashSet<usize> = component.iter().copied().collect();
        let count = |q: &[usize]| perm::cycles(q).iter().filter(|c| inside.contains(&c[0])).count() as i64;
        count(&p.sigma) + count(&p.lambda) + count(&p.rho()) - component.len() as i64
    }

    /// Genus of the surface carrying `component`, from `V − E + F = 2 − 2g`.
    pub fn genus(&self, component: &[usize]) -> Result<u32, DimapError> {
        let euler = self.euler_characteristic(component);
        if euler > 2 || euler % 2 != 0 {
            let idx = self.components().iter().position(|c| c.as_slice() == component).unwrap_or(usize::MAX);
            return Err(DimapError::NonIntegerGenus { component: idx, euler });
        }
        Ok(((2 - euler) / 2) as u32)
    }

    /// Genera of all components, sorted ascending.
    pub fn genus_profile(&self) -> Result<Vec<u32>, DimapError> {
        let mut out = self
            .components()
            .iter()
            .map(|c| self.genus(c))
            .collect::<Result<Vec<_>, _>>()?;
        out.sort_unstable();
        Ok(out)
    }

    pub fn total_genus(&self) -> Result<u32, DimapError> {
        Ok(self.genus_profile()?.iter().sum())
    }

    /// `G^ω`: vertices are the clockwise faces of `G`; edge `e` keeps its
    /// label as `e^ω`.
    pub fn trial(&self) -> AlternatingDimap {
        let p = self.perms();
        AlternatingDimap::from_perms(self.labels(), p.rho(), perm::inverse(&p.sigma))
    }

    /// `G^ω` with the label of `e^ω` for every edge `e`.
    pub fn trial_with_images(&self) -> (AlternatingDimap, Vec<String>) {
        (self.trial(), self.labels())
    }

    /// `G^μ` for `μ = ω^power`.
    pub fn trial_power(&self, power: usize) -> AlternatingDimap {
        (0..power % 3).fold(self.clone(), |g, _| g.trial())
    }

    pub fn classify_edge(&self, e: usize) -> Result<EdgeClassification, DimapError> {
        self.check_edge(e)?;
        let p = self.perms();
        let rho = p.rho();
        let is_1loop = p.sigma[e] == e;
        let is_omega_loop = p.lambda[e] == e;
        let is_omega2_loop = rho[e] == e;
        let is_ultraloop = is_1loop && is_omega_loop;
        let is_triloop = is_1loop || is_omega_loop || is_omega2_loop;

        let comps = self.component_count();
        let genus = self.total_genus()?;
        let splits = |kind: ReductionKind| -> Result<bool, DimapError> {
            let r = reduce_at(self, e, kind)?;
            Ok(r.component_count() > comps || r.total_genus()? < genus)
        };
        let is_semiloop = [
            self.is_loop(e)?,
            is_omega2_loop || splits(ReductionKind::Omega2)?,
            is_omega_loop || splits(ReductionKind::Omega)?,
        ];
        Ok(EdgeClassification {
            is_ultraloop,
            is_1loop,
            is_omega_loop,
            is_omega2_loop,
            is_triloop,
            is_proper_triloop: is_triloop && !is_ultraloop,
            is_semiloop,
            is_proper_semiloop: is_semiloop.iter().any(|&s| s) && !is_triloop,
        })
    }

    /// Disjoint union; labels of `h` that clash with `g` get a `_n` suffix.
    pub fn disjoint_union(g: &AlternatingDimap, h: &AlternatingDimap) -> AlternatingDimap {
        let offset = g
            .raw
            .edges
            .iter()
            .flat_map(|e| [e.tail, e.head])
            .max()
            .map_or(0, |d| d + 1);
        let mut taken: HashSet<String> = g.raw.edges.iter().map(|e| e.label.clone()).collect();
        let mut raw = g.raw.clone();
        for e in &h.raw.edges {
            let mut label = e.label.clone();
            let mut n = 1;
            while taken.contains(&label) {
                label = format!("{}_{n}", e.label);
                n += 1;
            }
            taken.insert(label.clone());
            raw.edges.push(Edge { label, tail: e.tail + offset, head: e.head + offset });
        }
        raw.vertices
            .extend(h.raw.vertices.iter().map(|rot| rot.iter().map(|d| d + offset).collect()));
        AlternatingDimap { raw }
    }

    /// `kG`, each copy on its own surface.
    pub fn k_copies(g: &AlternatingDimap, k: usize) -> AlternatingDimap {
        (0..k).fold(AlternatingDimap::empty(), |acc, _| Self::disjoint_union(&acc, g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(label: &str, tail: Dart, head: Dart) -> Edge {
        Edge { label: label.into(), tail, head }
    }

    /// Two loops `a`, `b` on one vertex with `σ = (a b)` and `λ` given.
    fn two_loops(lambda_swaps: bool) -> AlternatingDimap {
        let lambda = if lambda_swaps { vec![1, 0] } else { vec![0, 1] };
        AlternatingDimap::from_perms(vec!["a".into(), "b".into()], vec![1, 0], lambda)
    }

    /// The directed digon `a: v0 → v1`, `b: v1 → v0`.
    fn digon() -> AlternatingDimap {
        AlternatingDimap::from_perms(vec!["a".into(), "b".into()], vec![0, 1], vec![1, 0])
    }

    fn genus_one() -> AlternatingDimap {
        // σ = (0 1 2), λ = (0 2 1)
        AlternatingDimap::from_perms(vec!["a".into(), "b".into(), "c".into()], vec![1, 2, 0], vec![2, 0, 1])
    }

    #[test]
    fn validate_examples() {
        let c1 = RawDimap { edges: vec![edge("e0", 0, 1)], vertices: vec![vec![0, 1]] };
        assert!(validate(&c1).is_valid());
        assert!(validate(&RawDimap::default()).is_valid());

        // both head darts adjacent on a two-loop vertex
        let bad = RawDimap {
            edges: vec![edge("a", 0, 1), edge("b", 2, 3)],
            vertices: vec![vec![0, 2, 1, 3]],
        };
        let report = validate(&bad);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::NotAlternating { vertex: 0, .. })));
    }

    #[test]
    fn validate_reports_structural_errors() {
        let raw = RawDimap {
            edges: vec![edge("a", 0, 1), edge("a", 1, 2)],
            vertices: vec![vec![0, 1, 7], vec![]],
        };
        let v = validate(&raw).violations;
        assert!(v.contains(&Violation::DuplicateLabel("a".into())));
        assert!(v.contains(&Violation::DartInTwoEdges(1)));
        assert!(v.contains(&Violation::EmptyVertex(1)));
        assert!(v.contains(&Violation::UnknownDart { vertex: 0, dart: 7 }));
        assert!(v.contains(&Violation::DartMissing(2)));
        assert!(AlternatingDimap::new(raw).is_err());
    }

    #[test]
    fn from_perms_round_trips() {
        let g = genus_one();
        assert!(validate(g.raw()).is_valid());
        let p = g.perms();
        assert_eq!(p.sigma, vec![1, 2, 0]);
        assert_eq!(p.lambda, vec![2, 0, 1]);
    }

    #[test]
    fn faces_of_ultraloops() {
        let faces = AlternatingDimap::ultraloop().faces();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.darts.len() == 1));
        assert_eq!(faces.iter().filter(|f| f.orientation == Orientation::Clockwise).count(), 1);
        assert_eq!(AlternatingDimap::ultraloops(4).faces().len(), 8);
    }

    #[test]
    fn faces_match_euler_on_two_edge_maps() {
        for g in [digon(), two_loops(false), two_loops(true), AlternatingDimap::ultraloops(2)] {
            let faces = g.faces();
            assert_eq!(faces.len(), g.face_count());
            let euler = g.vertex_count() as i64 - 2 + faces.len() as i64;
            assert_eq!(euler, 2 * g.component_count() as i64);
        }
    }

    #[test]
    fn face_classes_two_colour_edges() {
        let g = genus_one();
        let faces = g.faces();
        for e in 0..3 {
            let mut classes: Vec<Orientation> = faces
                .iter()
                .filter(|f| f.edges.contains(&e))
                .map(|f| f.orientation)
                .collect();
            classes.dedup();
            assert_eq!(classes.len(), 2);
        }
    }

    #[test]
    fn successors() {
        let c1 = AlternatingDimap::ultraloop();
        assert_eq!(c1.left_successor(0).unwrap(), 0);
        assert_eq!(c1.right_successor(0).unwrap(), 0);
        let g = two_loops(false);
        // both loops bound anticlockwise faces of size one
        assert_eq!(g.left_successor(0).unwrap(), 0);
        let d = digon();
        assert_eq!(d.left_successor(0).unwrap(), 1);
        assert_eq!(d.left_successor(1).unwrap(), 0);
        assert!(matches!(d.left_successor(2), Err(DimapError::UnknownEdge(_))));
    }

    #[test]
    fn anticlockwise_face_order_is_left_successor_order() {
        let g = genus_one();
        for face in g.faces().iter().filter(|f| f.orientation == Orientation::Anticlockwise) {
            for w in face.edges.windows(2) {
                assert_eq!(g.left_successor(w[0]).unwrap(), w[1]);
            }
        }
        for face in g.faces().iter().filter(|f| f.orientation == Orientation::Clockwise) {
            for w in face.edges.windows(2) {
                assert_eq!(g.right_successor(w[0]).unwrap(), w[1]);
            }
        }
    }

    #[test]
    fn components_and_genus() {
        let c1 = AlternatingDimap::ultraloop();
        assert_eq!(c1.components().len(), 1);
        assert_eq!(c1.genus_profile().unwrap(), vec![0]);
        let k3 = AlternatingDimap::ultraloops(3);
        assert_eq!(k3.genus_profile().unwrap(), vec![0, 0, 0]);
        let g = genus_one();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (1, 3, 2));
        assert_eq!(g.genus_profile().unwrap(), vec![1]);
        // every two-edge map is planar
        for g in [digon(), two_loops(false), two_loops(true)] {
            assert_eq!(g.genus_profile().unwrap(), vec![0]);
        }
    }

    #[test]
    fn trial_examples() {
        let c1 = AlternatingDimap::ultraloop();
        assert!(labeled_equal(&c1.trial(), &c1));
        let k3 = AlternatingDimap::ultraloops(3);
        assert!(labeled_equal(&k3.trial(), &k3));
        for g in [digon(), two_loops(false), two_loops(true), genus_one()] {
            assert!(validate(g.trial().raw()).is_valid());
            assert!(labeled_equal(&g.trial().trial().trial(), &g));
        }
        for g in [digon(), two_loops(false), two_loops(true)] {
            assert!(!isomorphic(&g.trial(), &g));
        }
        // σ = (a b c) with λ = σ⁻¹ has ρ = σ, so trial fixes it
        assert!(labeled_equal(&genus_one().trial(), &genus_one()));
    }

    #[test]
    fn trial_vertices_are_clockwise_faces() {
        let g = genus_one();
        let cw = g.faces().iter().filter(|f| f.orientation == Orientation::Clockwise).count();
        assert_eq!(g.trial().vertex_count(), cw);
        // e^ω runs from the clockwise face of λ(e) to the clockwise face of e
        let t = g.trial();
        let face_of = |e: usize| {
            g.faces()
                .iter()
                .position(|f| f.orientation == Orientation::Clockwise && f.edges.contains(&e))
                .unwrap()
        };
        let p = g.perms();
        for e in 0..3 {
            let (tail, head) = t.endpoints(e).unwrap();
            // same clockwise face of G <=> same vertex of G^ω
            for f in 0..3 {
                assert_eq!(face_of(f) == face_of(e), t.endpoints(f).unwrap().1 == head);
                assert_eq!(face_of(f) == face_of(p.lambda[e]), t.endpoints(f).unwrap().1 == tail);
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c = AlternatingDimap::ultraloop().classify_edge(0).unwrap();
        assert!(c.is_ultraloop && c.is_1loop && c.is_omega_loop && c.is_omega2_loop);
        assert!(c.is_triloop && !c.is_proper_triloop);

        let d = digon().classify_edge(0).unwrap();
        assert!(d.is_1loop && !digon().is_loop(0).unwrap());

        let w = two_loops(false).classify_edge(0).unwrap();
        assert!(w.is_omega_loop && w.is_proper_triloop && !w.is_ultraloop);
    }

    #[test]
    fn union_and_copies() {
        assert!(AlternatingDimap::k_copies(&AlternatingDimap::ultraloop(), 0).is_empty());
        let k3 = AlternatingDimap::k_copies(&AlternatingDimap::ultraloop(), 3);
        assert_eq!((k3.component_count(), k3.edge_count()), (3, 3));
        assert_eq!(k3.labels(), vec!["e0", "e0_1", "e0_2"]);
        assert!(validate(k3.raw()).is_valid());
        let g = genus_one();
        assert_eq!(AlternatingDimap::disjoint_union(&g, &AlternatingDimap::empty()), g);
        assert!(isomorphic(&k3, &AlternatingDimap::ultraloops(3)));
    }
}
