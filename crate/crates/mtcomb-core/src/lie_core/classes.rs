//! Minuscule cocharacter classes and their weight-`{0,1}` multiplicities.
//!
//! A class is labelled by the index `k` of a fundamental coweight `ϖ_k^∨`.
//! It is admissible for a representation when the pairing of the coweight
//! with the weights takes exactly two values; `m_id` counts the weights at
//! the larger value and `m_triv` those at the smaller.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::Zero;

use super::weights::enumerate_weights;
use super::{binomial, Family, RepDescriptor};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CocharacterClass {
    /// Index `k` of the coweight `ϖ_k^∨`.
    pub coweight: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplicityPair {
    pub m_id: BigUint,
    pub m_triv: BigUint,
}

impl MultiplicityPair {
    pub fn new(m_id: impl Into<BigUint>, m_triv: impl Into<BigUint>) -> Self {
        MultiplicityPair { m_id: m_id.into(), m_triv: m_triv.into() }
    }

    pub fn total(&self) -> BigUint {
        &self.m_id + &self.m_triv
    }

    pub fn swapped(&self) -> MultiplicityPair {
        MultiplicityPair { m_id: self.m_triv.clone(), m_triv: self.m_id.clone() }
    }

    /// `min/max` as a reduced fraction in `(0, 1]`.
    pub fn ratio(&self) -> Ratio<BigUint> {
        if self.m_id <= self.m_triv {
            Ratio::new(self.m_id.clone(), self.m_triv.clone())
        } else {
            Ratio::new(self.m_triv.clone(), self.m_id.clone())
        }
    }
}

impl fmt::Display for MultiplicityPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m_id, self.m_triv)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AdmissibleClass {
    pub class: CocharacterClass,
    pub pair: MultiplicityPair,
}

/// Coweight indices whose pairing with `rep` is two-valued. For `B`, `C`
/// and `D` a single representative is returned; the other two-valued
/// minuscule coweights differ from it by a diagram automorphism and give
/// the same pair.
fn admissible_indices(rep: &RepDescriptor) -> Vec<u32> {
    let n = rep.rank();
    match rep.family() {
        Family::A => {
            let s = rep.index();
            (1..=n).filter(|&a| a_pairing_range(n, s, a).1 - a_pairing_range(n, s, a).0 == 1).collect()
        }
        Family::B => alloc::vec![1],
        Family::C => alloc::vec![n],
        Family::D if rep.index() == 1 => alloc::vec![n],
        Family::D => alloc::vec![1],
    }
}

/// Smallest and largest value of `|T ∩ {1..a}|` over `s`-subsets `T` of
/// `{1..r+1}`.
fn a_pairing_range(r: u32, s: u32, a: u32) -> (u32, u32) {
    let lo = (s + a).saturating_sub(r + 1);
    (lo, s.min(a))
}

/// The admissible classes of `rep` with their multiplicity pairs, ordered
/// by coweight index.
pub fn admissible_cocharacter_classes(rep: &RepDescriptor) -> Vec<AdmissibleClass> {
    admissible_indices(rep)
        .into_iter()
        .map(|k| {
            let class = CocharacterClass { coweight: k };
            AdmissibleClass { class, pair: pair_formula(rep, k) }
        })
        .collect()
}

fn pair_formula(rep: &RepDescriptor, k: u32) -> MultiplicityPair {
    let n = rep.rank() as u64;
    let two = BigUint::from(2u32);
    match rep.family() {
        Family::A => {
            let (r, s, a) = (n, rep.index() as u64, k as u64);
            let (lo, hi) = a_pairing_range(r as u32, s as u32, k);
            let count = |v: u64| binomial(a, v) * binomial(r + 1 - a, s - v);
            MultiplicityPair { m_id: count(hi as u64), m_triv: count(lo as u64) }
        }
        Family::B => {
            let h = two.pow(rep.rank() - 1);
            MultiplicityPair { m_id: h.clone(), m_triv: h }
        }
        Family::C => MultiplicityPair::new(n, n),
        Family::D if rep.index() == 1 => MultiplicityPair::new(n, n),
        Family::D => {
            let h = two.pow(rep.rank() - 2);
            MultiplicityPair { m_id: h.clone(), m_triv: h }
        }
    }
}

/// The multiplicity pair of an admissible class.
pub fn multiplicity_pair(rep: &RepDescriptor, class: CocharacterClass) -> Result<MultiplicityPair> {
    if !admissible_indices(rep).contains(&class.coweight) {
        return Err(Error::validation(format!(
            "coweight ϖ_{}^∨ is not an admissible class for {rep}",
            class.coweight
        )));
    }
    Ok(pair_formula(rep, class.coweight))
}

/// The coweight of `class` in the coordinates used by
/// [`enumerate_weights`](super::enumerate_weights).
pub fn coweight_vector(rep: &RepDescriptor, class: CocharacterClass) -> Vec<Ratio<i64>> {
    let n = rep.rank() as usize;
    let k = class.coweight as usize;
    let one = Ratio::from_integer(1);
    let zero = Ratio::from_integer(0);
    match rep.family() {
        Family::A => (0..=n).map(|i| if i < k { one } else { zero }).collect(),
        Family::B | Family::D if k == 1 => (0..n).map(|i| if i == 0 { one } else { zero }).collect(),
        _ => {
            // ϖ_{n-1}^∨ of D_n flips the sign of the last coordinate.
            let half = Ratio::new(1, 2);
            (0..n)
                .map(|i| if rep.family() == Family::D && k + 1 == n && i + 1 == n { -half } else { half })
                .collect()
        }
    }
}

/// Recounts the pair of `class` directly from the enumerated weights.
/// Fails when the pairing is not two-valued.
pub fn recount_multiplicity_pair(
    rep: &RepDescriptor,
    class: CocharacterClass,
    cap: u64,
) -> Result<MultiplicityPair> {
    let cw = coweight_vector(rep, class);
    let mut hist: BTreeMap<Ratio<i64>, u64> = BTreeMap::new();
    for w in enumerate_weights(rep, cap)? {
        *hist.entry(w.pairing(&cw)).or_default() += 1;
    }
    if hist.len() != 2 {
        return Err(Error::validation(format!(
            "coweight ϖ_{}^∨ takes {} values on {rep}",
            class.coweight,
            hist.len()
        )));
    }
    let lo = hist.values().next().copied().unwrap_or(0);
    let hi = hist.values().last().copied().unwrap_or(0);
    Ok(MultiplicityPair::new(hi, lo))
}

/// Number of distinct values the coweight takes on the weights of `rep`.
pub fn pairing_value_count(rep: &RepDescriptor, class: CocharacterClass, cap: u64) -> Result<usize> {
    let cw = coweight_vector(rep, class);
    let mut vals: Vec<Ratio<i64>> =
        enumerate_weights(rep, cap)?.iter().map(|w| w.pairing(&cw)).collect();
    vals.sort();
    vals.dedup();
    Ok(vals.len())
}

impl MultiplicityPair {
    pub fn is_nontrivial(&self) -> bool {
        !self.m_id.is_zero() && !self.m_triv.is_zero()
    }
}
