//! Labeled equality, isomorphism and canonical forms.
//!
//! A map is determined by `(σ, λ)` on its edges, so an isomorphism is an edge
//! bijection conjugating both permutations. Within a connected component the
//! image of one edge forces every other image, which keeps the searches small.

use std::collections::hash_map::{Entry, HashMap};
use std::fmt;

use super::perm::{self, Perm};
use super::AlternatingDimap;

/// Per-component breadth-first codes, sorted. Two maps are isomorphic iff
/// their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<Vec<u32>>);

impl CanonicalForm {
    pub fn edge_count(&self) -> usize {
        self.0.iter().map(|c| c.len() / 2).sum()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "empty");
        }
        for (i, code) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for pair in code.chunks(2) {
                write!(f, "{}{}", pair[0], pair[1])?;
                if code.len() > 20 {
                    write!(f, ".")?;
                }
            }
        }
        Ok(())
    }
}

/// Breadth-first relabeling from `start`, following `σ` then `λ`.
fn bfs_order(sigma: &[usize], lambda: &[usize], start: usize) -> (Vec<usize>, HashMap<usize, u32>) {
    let mut order = vec![start];
    let mut new = HashMap::new();
    new.insert(start, 0u32);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for y in [sigma[x], lambda[x]] {
            if let Entry::Vacant(slot) = new.entry(y) {
                slot.insert(order.len() as u32);
                order.push(y);
            }
        }
    }
    (order, new)
}

fn component_code(sigma: &[usize], lambda: &[usize], start: usize) -> (Vec<u32>, Vec<usize>) {
    let (order, new) = bfs_order(sigma, lambda, start);
    let code = order.iter().flat_map(|&x| [new[&sigma[x]], new[&lambda[x]]]).collect();
    (code, order)
}

/// Minimal code per component, and the edge order realizing it.
fn minimal_codes(g: &AlternatingDimap) -> Vec<(Vec<u32>, Vec<usize>)> {
    let p = g.perms();
    let mut out: Vec<(Vec<u32>, Vec<usize>)> = g
        .components()
        .into_iter()
        .map(|comp| {
            comp.iter()
                .map(|&s| component_code(&p.sigma, &p.lambda, s))
                .min()
                .expect("non-empty component")
        })
        .collect();
    out.sort();
    out
}

pub fn canonical_form(g: &AlternatingDimap) -> CanonicalForm {
    CanonicalForm(minimal_codes(g).into_iter().map(|(code, _)| code).collect())
}

/// The map described by a canonical form, with labels `e0, e1, …` in
/// canonical order.
pub(crate) fn from_canonical_form(form: &CanonicalForm) -> AlternatingDimap {
    let n = form.edge_count();
    let mut sigma = vec![0; n];
    let mut lambda = vec![0; n];
    let mut offset = 0;
    for code in &form.0 {
        let size = code.len() / 2;
        for j in 0..size {
            sigma[offset + j] = offset + code[2 * j] as usize;
            lambda[offset + j] = offset + code[2 * j + 1] as usize;
        }
        offset += size;
    }
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    AlternatingDimap::from_perms(labels, sigma, lambda)
}

pub fn isomorphic(g: &AlternatingDimap, h: &AlternatingDimap) -> bool {
    g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

/// Equality up to renaming darts: same labels, same directed edges, same
/// rotations.
pub fn labeled_equal(g: &AlternatingDimap, h: &AlternatingDimap) -> bool {
    if g.edge_count() != h.edge_count() {
        return false;
    }
    let mut phi = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        match h.edge_index(&e.label) {
            Ok(j) => phi.push(j),
            Err(_) => return false,
        }
    }
    is_isomorphism(g, h, &phi)
}

/// Whether `phi` (edge `i` of `g` ↦ edge `phi[i]` of `h`) is an isomorphism.
pub fn is_isomorphism(g: &AlternatingDimap, h: &AlternatingDimap, phi: &[usize]) -> bool {
    if phi.len() != g.edge_count() || g.edge_count() != h.edge_count() || !perm::is_permutation(phi) {
        return false;
    }
    let (pg, ph) = (g.perms(), h.perms());
    (0..phi.len()).all(|x| ph.sigma[phi[x]] == phi[pg.sigma[x]] && ph.lambda[phi[x]] == phi[pg.lambda[x]])
}

fn propagate(
    pg: (&[usize], &[usize]),
    ph: (&[usize], &[usize]),
    start: usize,
    target: usize,
    phi: &mut [Option<usize>],
    used: &mut [bool],
) -> Option<Vec<usize>> {
    let mut assigned = Vec::new();
    let mut ok = true;
    let mut queue = vec![(start, target)];
    while let Some((x, t)) = queue.pop() {
        match phi[x] {
            Some(existing) if existing == t => continue,
            Some(_) => {
                ok = false;
                break;
            }
            None if used[t] => {
                ok = false;
                break;
            }
            None => {
                phi[x] = Some(t);
                used[t] = true;
                assigned.push(x);
                queue.push((pg.0[x], ph.0[t]));
                queue.push((pg.1[x], ph.1[t]));
            }
        }
    }
    if ok {
        Some(assigned)
    } else {
        for x in assigned {
            used[phi[x].take().expect("assigned")] = false;
        }
        None
    }
}

/// Every isomorphism `g → h`, as edge maps.
pub fn isomorphisms(g: &AlternatingDimap, h: &AlternatingDimap) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if g.edge_count() != h.edge_count() {
        return out;
    }
    let (pg, ph) = (g.perms(), h.perms());
    let starts: Vec<usize> = g.components().iter().map(|c| c[0]).collect();
    let n = g.edge_count();
    let mut phi = vec![None; n];
    let mut used = vec![false; n];
    search(&pg.sigma, &pg.lambda, &ph.sigma, &ph.lambda, &starts, 0, &mut phi, &mut used, &mut out, usize::MAX);
    out
}

/// One isomorphism `g → h`, if any.
pub fn find_isomorphism(g: &AlternatingDimap, h: &AlternatingDimap) -> Option<Vec<usize>> {
    if !isomorphic(g, h) {
        return None;
    }
    let (pg, ph) = (g.perms(), h.perms());
    let starts: Vec<usize> = g.components().iter().map(|c| c[0]).collect();
    let n = g.edge_count();
    let mut phi = vec![None; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    search(&pg.sigma, &pg.lambda, &ph.sigma, &ph.lambda, &starts, 0, &mut phi, &mut used, &mut out, 1);
    out.pop()
}

#[allow(clippy::too_many_arguments)]
fn search(
    gs: &Perm,
    gl: &Perm,
    hs: &Perm,
    hl: &Perm,
    starts: &[usize],
    depth: usize,
    phi: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if depth == starts.len() {
        out.push(phi.iter().map(|x| x.expect("total")).collect());
        return;
    }
    for t in 0..hs.len() {
        if used[t] {
            continue;
        }
        if let Some(assigned) = propagate((gs, gl), (hs, hl), starts[depth], t, phi, used) {
            search(gs, gl, hs, hl, starts, depth + 1, phi, used, out, limit);
            for x in assigned {
                used[phi[x].take().expect("assigned")] = false;
            }
            if out.len() >= limit {
                return;
            }
        }
    }
}
