//! Permutations on edge indices `0..n`.

pub(crate) type Perm = Vec<usize>;

pub(crate) fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub(crate) fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// `p ∘ q`: apply `q` first.
pub(crate) fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&x| p[x]).collect()
}

pub(crate) fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// Cycles, each starting at its smallest element, ordered by that element.
pub(crate) fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push(cycle);
    }
    out
}

/// Removes `e` from its cycle and renumbers the elements above `e` down by one.
pub(crate) fn splice(p: &[usize], e: usize) -> Perm {
    let pred = p.iter().position(|&x| x == e).expect("permutation");
    let shift = |x: usize| if x > e { x - 1 } else { x };
    p.iter()
        .enumerate()
        .filter(|&(i, _)| i != e)
        .map(|(i, &x)| if i == pred { shift(p[e]) } else { shift(x) })
        .collect()
}

/// Orbits of the group generated by `gens`, as sorted element lists ordered
/// by their smallest member.
pub(crate) fn orbits(n: usize, gens: &[&[usize]]) -> Vec<Vec<usize>> {
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for g in gens {
                let y = g[x];
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}
