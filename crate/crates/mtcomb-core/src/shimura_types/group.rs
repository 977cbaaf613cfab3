//! Finite permutation groups on a small point set.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A permutation of `0..len`, stored as its image list.
pub type Perm = Vec<u32>;

/// Default bound on the order of a generated group.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

pub fn identity(len: usize) -> Perm {
    (0..len as u32).collect()
}

/// `a ∘ b`: first `b`, then `a`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn is_permutation(p: &[u32]) -> bool {
    let mut seen = alloc::vec![false; p.len()];
    for &x in p {
        match seen.get_mut(x as usize) {
            Some(s) if !*s => *s = true,
            _ => return false,
        }
    }
    true
}

/// All elements of the group generated by `gens`, in sorted order.
pub fn closure(gens: &[Perm], len: usize, cap: usize) -> Result<Vec<Perm>> {
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let id = identity(len);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = compose(s, &g);
            if !seen.contains(&h) {
                if seen.len() >= cap {
                    return Err(Error::Resource {
                        message: format!("group closure exceeds the cap of {cap} elements"),
                        partial: true,
                    });
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Orbits of the points `0..len`, each sorted, ordered by least element.
pub fn point_orbits(gens: &[Perm], len: usize) -> Vec<Vec<u32>> {
    let mut label = alloc::vec![usize::MAX; len];
    let mut out: Vec<Vec<u32>> = Vec::new();
    for start in 0..len {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut orbit = alloc::vec![start as u32];
        label[start] = id;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in gens {
                let y = g[x as usize];
                if label[y as usize] == usize::MAX {
                    label[y as usize] = id;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort();
        out.push(orbit);
    }
    out
}

/// The union of the orbits of the points in `set`.
pub fn orbit_of_points(gens: &[Perm], len: usize, set: &BTreeSet<u32>) -> BTreeSet<u32> {
    point_orbits(gens, len)
        .into_iter()
        .filter(|o| o.iter().any(|x| set.contains(x)))
        .flatten()
        .collect()
}

pub fn image_of_set(g: &Perm, set: &BTreeSet<u32>) -> BTreeSet<u32> {
    set.iter().map(|&x| g[x as usize]).collect()
}

/// The orbit of `set` under the induced action on subsets, found by
/// breadth-first search over the generators.
pub fn set_orbit(gens: &[Perm], set: &BTreeSet<u32>, cap: usize) -> Result<BTreeSet<BTreeSet<u32>>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(set.clone());
    queue.push_back(set.clone());
    while let Some(s) = queue.pop_front() {
        for g in gens {
            let t = image_of_set(g, &s);
            if !seen.contains(&t) {
                if seen.len() >= cap {
                    return Err(Error::resource(format!("set orbit exceeds the cap of {cap}")));
                }
                seen.insert(t.clone());
                queue.push_back(t);
            }
        }
    }
    Ok(seen)
}
