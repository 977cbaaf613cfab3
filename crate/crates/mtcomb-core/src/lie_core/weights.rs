//! Brute-force weight enumeration in the standard ε-coordinates.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;

use super::{rep_dimension, Family, RepDescriptor};
use crate::error::{Error, Result};

/// Default cap on the number of enumerated weights.
pub const DEFAULT_WEIGHT_CAP: u64 = 1 << 20;

/// A weight in ε-coordinates. Type `A_r` uses `r + 1` coordinates, the other
/// families use `rank` coordinates; spin weights have entries `±1/2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(pub Vec<Ratio<i64>>);

impl WeightVector {
    pub fn pairing(&self, coweight: &[Ratio<i64>]) -> Ratio<i64> {
        self.0.iter().zip(coweight).fold(Ratio::from_integer(0), |acc, (a, b)| acc + a * b)
    }

    pub fn negated(&self) -> WeightVector {
        WeightVector(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Calls `visit` with every `k`-subset of `0..n` as a sorted index list.
pub(crate) fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The weight multiset of `rep`, sorted. Fails when the dimension exceeds
/// `cap`.
pub fn enumerate_weights(rep: &RepDescriptor, cap: u64) -> Result<Vec<WeightVector>> {
    let dim = rep_dimension(rep);
    if dim > BigUint::from(cap) {
        return Err(Error::resource(format!(
            "{rep} has dimension {dim}, above the weight enumeration cap {cap}"
        )));
    }
    let n = rep.rank() as usize;
    let zero = Ratio::from_integer(0);
    let one = Ratio::from_integer(1);
    let half = Ratio::new(1, 2);
    let mut out = Vec::new();
    match rep.family() {
        Family::A => {
            for_each_subset(n + 1, rep.index() as usize, |t| {
                let mut v = alloc::vec![zero; n + 1];
                for &i in t {
                    v[i] = one;
                }
                out.push(WeightVector(v));
            });
        }
        Family::C => {
            push_signed_basis(n, &mut out);
        }
        Family::D if rep.index() == 1 => {
            push_signed_basis(n, &mut out);
        }
        Family::B | Family::D => {
            let parity = match (rep.family(), rep.index()) {
                (Family::B, _) => None,
                (_, i) if i == rep.rank() => Some(0),
                _ => Some(1),
            };
            for mask in 0u64..(1u64 << n) {
                let minus = mask.count_ones() % 2;
                if parity.is_some_and(|p| p != minus) {
                    continue;
                }
                let v = (0..n).map(|i| if mask >> i & 1 == 1 { -half } else { half }).collect();
                out.push(WeightVector(v));
            }
        }
    }
    out.sort();
    Ok(out)
}

fn push_signed_basis(n: usize, out: &mut Vec<WeightVector>) {
    for i in 0..n {
        for sign in [1i64, -1] {
            let mut v = alloc::vec![Ratio::from_integer(0); n];
            v[i] = Ratio::from_integer(sign);
            out.push(WeightVector(v));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(f: Family, r: u32, i: u32) -> RepDescriptor {
        RepDescriptor::new(f, r, i).unwrap()
    }

    #[test]
    fn subsets_count() {
        let mut c = 0;
        for_each_subset(6, 3, |_| c += 1);
        assert_eq!(c, 20);
        let mut c0 = 0;
        for_each_subset(4, 0, |t| {
            assert!(t.is_empty());
            c0 += 1
        });
        assert_eq!(c0, 1);
        let mut c4 = 0;
        for_each_subset(4, 4, |_| c4 += 1);
        assert_eq!(c4, 1);
    }

    #[test]
    fn standard_a2() {
        let w = enumerate_weights(&rep(Family::A, 2, 1), DEFAULT_WEIGHT_CAP).unwrap();
        let o = Ratio::from_integer(1);
        let z = Ratio::from_integer(0);
        assert_eq!(
            w,
            [WeightVector(alloc::vec![z, z, o]), WeightVector(alloc::vec![z, o, z]), WeightVector(alloc::vec![o, z, z])]
        );
    }

    #[test]
    fn half_spin_parity() {
        let w = enumerate_weights(&rep(Family::D, 4, 4), DEFAULT_WEIGHT_CAP).unwrap();
        assert_eq!(w.len(), 8);
        for v in &w {
            let minus = v.0.iter().filter(|x| **x < Ratio::from_integer(0)).count();
            assert_eq!(minus % 2, 0);
        }
        let w3 = enumerate_weights(&rep(Family::D, 4, 3), DEFAULT_WEIGHT_CAP).unwrap();
        assert!(w3.iter().all(|v| v.0.iter().filter(|x| **x < Ratio::from_integer(0)).count() % 2 == 1));
    }

    #[test]
    fn a4_second_power() {
        let w = enumerate_weights(&rep(Family::A, 4, 2), DEFAULT_WEIGHT_CAP).unwrap();
        assert_eq!(w.len(), 10);
        let mut d = w.clone();
        d.dedup();
        assert_eq!(d.len(), 10);
    }

    #[test]
    fn cap_enforced() {
        let e = enumerate_weights(&rep(Family::B, 12, 12), 1000).unwrap_err();
        assert!(e.is_resource());
    }
}
