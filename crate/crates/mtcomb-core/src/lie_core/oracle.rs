//! Independent duality oracle.
//!
//! Builds explicit Chevalley generators of the representation (exterior
//! powers for type `A`, the defining matrices for `C` and `D`, a fermionic
//! Fock space for the spin cases) and solves `Xᵀ B + B X = 0` exactly for
//! every generator `X`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::duality::DualityType;
use super::weights::for_each_subset;
use super::{rep_dimension_u64, Family, LieType, RepDescriptor};
use crate::error::{Error, Result};

pub const ORACLE_MAX_DIM: u64 = 64;
pub const ORACLE_MAX_RANK: u32 = 6;

/// Dense square integer matrix; `m[row][col]` is the coefficient of basis
/// vector `row` in the image of basis vector `col`.
pub type Mat = Vec<Vec<i64>>;

/// Raising and lowering operators `e_i`, `f_i` for the simple roots.
#[derive(Clone, Debug)]
pub struct Chevalley {
    pub dim: usize,
    pub e: Vec<Mat>,
    pub f: Vec<Mat>,
}

pub fn zero_mat(d: usize) -> Mat {
    alloc::vec![alloc::vec![0; d]; d]
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    let mut c = zero_mat(d);
    for i in 0..d {
        for k in 0..d {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..d {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

pub fn commutator(a: &Mat, b: &Mat) -> Mat {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter().zip(&ba).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let d = a.len();
    (0..d).map(|i| (0..d).map(|j| a[j][i]).collect()).collect()
}

/// Cartan matrix with `A[i][j] = ⟨α_j, α_i^∨⟩`.
pub fn cartan_matrix(lie: LieType) -> Vec<Vec<i64>> {
    let n = lie.rank() as usize;
    let mut a = alloc::vec![alloc::vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let chain = match lie.family() {
        Family::D => n - 1,
        _ => n,
    };
    for i in 1..chain {
        a[i - 1][i] = -1;
        a[i][i - 1] = -1;
    }
    match lie.family() {
        Family::B => {
            a[n - 1][n - 2] = -2;
        }
        Family::C => {
            a[n - 2][n - 1] = -2;
        }
        Family::D => {
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        Family::A => {}
    }
    a
}

fn check_caps(rep: &RepDescriptor) -> Result<usize> {
    let dim = rep_dimension_u64(rep).unwrap_or(u64::MAX);
    if dim > ORACLE_MAX_DIM || rep.rank() > ORACLE_MAX_RANK {
        return Err(Error::resource(format!(
            "{rep} (dimension {dim}, rank {}) exceeds the oracle caps (dimension {ORACLE_MAX_DIM}, rank {ORACLE_MAX_RANK})",
            rep.rank()
        )));
    }
    Ok(dim as usize)
}

/// Explicit generators of `rep`, within the oracle caps.
pub fn chevalley_generators(rep: &RepDescriptor) -> Result<Chevalley> {
    let dim = check_caps(rep)?;
    let n = rep.rank() as usize;
    let ch = match (rep.family(), rep.index()) {
        (Family::A, s) => exterior_power(n, s as usize),
        (Family::C, _) => defining(Family::C, n),
        (Family::D, 1) => defining(Family::D, n),
        (Family::B, _) => fock(n, None),
        (Family::D, i) => {
            let parity = if i == rep.rank() { n % 2 } else { (n + 1) % 2 };
            fock(n, Some(parity))
        }
    };
    debug_assert_eq!(ch.dim, dim);
    Ok(ch)
}

fn exterior_power(r: usize, s: usize) -> Chevalley {
    let mut basis = Vec::new();
    for_each_subset(r + 1, s, |t| basis.push(t.to_vec()));
    let index: BTreeMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let d = basis.len();
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 1..=r {
        let mut ei = zero_mat(d);
        let mut fi = zero_mat(d);
        for (col, t) in basis.iter().enumerate() {
            // E_{i-1,i} replaces i by i-1; adjacent indices keep the order.
            if t.contains(&i) && !t.contains(&(i - 1)) {
                let mut u: Vec<usize> = t.iter().map(|&x| if x == i { i - 1 } else { x }).collect();
                u.sort();
                ei[index[&u]][col] = 1;
            }
            if t.contains(&(i - 1)) && !t.contains(&i) {
                let mut u: Vec<usize> = t.iter().map(|&x| if x == i - 1 { i } else { x }).collect();
                u.sort();
                fi[index[&u]][col] = 1;
            }
        }
        e.push(ei);
        f.push(fi);
    }
    Chevalley { dim: d, e, f }
}

fn defining(family: Family, n: usize) -> Chevalley {
    let d = 2 * n;
    let pos = |i: usize| i - 1;
    let neg = |i: usize| n + i - 1;
    let mut e = Vec::new();
    for i in 1..n {
        let mut m = zero_mat(d);
        m[pos(i)][pos(i + 1)] = 1;
        m[neg(i + 1)][neg(i)] = -1;
        e.push(m);
    }
    let mut last = zero_mat(d);
    if family == Family::C {
        last[pos(n)][neg(n)] = 1;
    } else {
        last[pos(n - 1)][neg(n)] = 1;
        last[pos(n)][neg(n - 1)] = -1;
    }
    e.push(last);
    let f = e.iter().map(transpose).collect();
    Chevalley { dim: d, e, f }
}

#[derive(Clone, Copy)]
enum Fermion {
    Create(usize),
    Annihilate(usize),
}

fn apply(op: Fermion, mask: u64) -> Option<(i64, u64)> {
    let (i, want_set) = match op {
        Fermion::Create(i) => (i, false),
        Fermion::Annihilate(i) => (i, true),
    };
    let bit = 1u64 << i;
    if (mask & bit != 0) != want_set {
        return None;
    }
    let below = (mask & (bit - 1)).count_ones();
    let sign = if below.is_multiple_of(2) { 1 } else { -1 };
    Some((sign, mask ^ bit))
}

/// Spin modules on the exterior algebra of `C^n`. `parity` selects the
/// half-spin module with `|T| ≡ parity (mod 2)`; `None` gives the full
/// spin module of `B_n`.
fn fock(n: usize, parity: Option<usize>) -> Chevalley {
    let basis: Vec<u64> =
        (0..1u64 << n).filter(|m| parity.is_none_or(|p| m.count_ones() as usize % 2 == p)).collect();
    let index: BTreeMap<u64, usize> = basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let d = basis.len();
    let build = |ops: &[Fermion]| {
        let mut m = zero_mat(d);
        for (col, &t) in basis.iter().enumerate() {
            let mut sign = 1;
            let mut cur = Some(t);
            for &op in ops.iter().rev() {
                cur = cur.and_then(|c| apply(op, c)).map(|(s, c)| {
                    sign *= s;
                    c
                });
            }
            if let Some(c) = cur {
                m[index[&c]][col] += sign;
            }
        }
        m
    };
    use Fermion::*;
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 0..n - 1 {
        e.push(build(&[Create(i), Annihilate(i + 1)]));
        f.push(build(&[Create(i + 1), Annihilate(i)]));
    }
    if parity.is_none() {
        e.push(build(&[Create(n - 1)]));
        f.push(build(&[Annihilate(n - 1)]));
    } else {
        e.push(build(&[Create(n - 2), Create(n - 1)]));
        f.push(build(&[Annihilate(n - 1), Annihilate(n - 2)]));
    }
    Chevalley { dim: d, e, f }
}

/// Sparse row over `BigRational` keyed by column.
type Row = BTreeMap<usize, BigRational>;

fn reduce_into(pivots: &mut BTreeMap<usize, Row>, mut row: Row) {
    loop {
        let Some((&lead, _)) = row.iter().next() else { return };
        match pivots.get(&lead) {
            Some(p) => {
                let c = row[&lead].clone();
                for (k, v) in p {
                    let nv = row.get(k).cloned().unwrap_or_else(BigRational::zero) - &c * v;
                    if nv.is_zero() {
                        row.remove(k);
                    } else {
                        row.insert(*k, nv);
                    }
                }
            }
            None => {
                let c = row[&lead].clone();
                for v in row.values_mut() {
                    *v = &*v / &c;
                }
                pivots.insert(lead, row);
                return;
            }
        }
    }
}

/// Duality type computed from explicit matrices.
pub fn duality_oracle(rep: &RepDescriptor) -> Result<DualityType> {
    let ch = chevalley_generators(rep)?;
    let d = ch.dim;
    let hs: Vec<Mat> = ch.e.iter().zip(&ch.f).map(|(e, f)| commutator(e, f)).collect();
    for h in &hs {
        for i in 0..d {
            for j in 0..d {
                if i != j && h[i][j] != 0 {
                    return Err(Error::validation("oracle Cartan elements are not diagonal"));
                }
            }
        }
    }
    // Invariance under the h_i forces B_kl = 0 unless the weights of k and l
    // are opposite.
    let mut vars: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for k in 0..d {
        for l in 0..d {
            if hs.iter().all(|h| h[k][k] + h[l][l] == 0) {
                let t = vars.len();
                vars.insert((k, l), t);
            }
        }
    }
    let mut pivots: BTreeMap<usize, Row> = BTreeMap::new();
    for x in ch.e.iter().chain(&ch.f) {
        let mut eqs: BTreeMap<(usize, usize), Row> = BTreeMap::new();
        let mut add = |eq: (usize, usize), t: usize, c: i64| {
            let row = eqs.entry(eq).or_default();
            let nv = row.get(&t).cloned().unwrap_or_else(BigRational::zero)
                + BigRational::from_integer(BigInt::from(c));
            if nv.is_zero() {
                row.remove(&t);
            } else {
                row.insert(t, nv);
            }
        };
        for (&(u, v), &t) in &vars {
            for k in 0..d {
                if x[u][k] != 0 {
                    add((k, v), t, x[u][k]);
                }
            }
            for l in 0..d {
                if x[v][l] != 0 {
                    add((u, l), t, x[v][l]);
                }
            }
        }
        for row in eqs.into_values() {
            if !row.is_empty() {
                reduce_into(&mut pivots, row);
            }
        }
    }
    let nullity = vars.len() - pivots.len();
    match nullity {
        0 => Ok(DualityType::NonSelfDual),
        1 => {
            let free = (0..vars.len()).find(|c| !pivots.contains_key(c)).expect("one free column");
            let mut x = alloc::vec![BigRational::zero(); vars.len()];
            x[free] = BigRational::one();
            for (&p, row) in pivots.iter().rev() {
                let mut acc = BigRational::zero();
                for (&c, v) in row.range(p + 1..) {
                    acc -= v * &x[c];
                }
                x[p] = acc;
            }
            let mut symmetric = true;
            let mut antisymmetric = true;
            for (&(u, v), &t) in &vars {
                let t2 = vars[&(v, u)];
                if x[t] != x[t2] {
                    symmetric = false;
                }
                if x[t] != -x[t2].clone() {
                    antisymmetric = false;
                }
            }
            match (symmetric, antisymmetric) {
                (true, false) => Ok(DualityType::Orthogonal),
                (false, true) => Ok(DualityType::Symplectic),
                _ => Err(Error::validation(format!("invariant form on {rep} is neither symmetric nor alternating"))),
            }
        }
        k => Err(Error::validation(format!(
            "{rep}: space of invariant forms has dimension {k}; the oracle module is not irreducible"
        ))),
    }
}
