//! Catalog of minuscule representations of the classical Lie types.
//!
//! Types are stored in canonical form: `B_1` and `C_1` become `A_1`, `B_2`
//! becomes `C_2`, and `D_3` becomes `A_3`. The raw label survives in
//! [`LieLabel`] for display.

pub mod classes;
pub mod duality;
pub mod oracle;
pub mod weights;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

pub use classes::{
    admissible_cocharacter_classes, coweight_vector, multiplicity_pair, recount_multiplicity_pair,
    AdmissibleClass, CocharacterClass, MultiplicityPair,
};
pub use duality::{duality, is_negation_stable, DualityType};
pub use oracle::duality_oracle;
pub use weights::{enumerate_weights, WeightVector, DEFAULT_WEIGHT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            _ => None,
        }
    }
}

/// A classical Lie type in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: u32,
}

fn check_raw(family: Family, rank: u32) -> Result<()> {
    let min = match family {
        Family::D => 3,
        _ => 1,
    };
    if rank < min {
        return Err(Error::validation(format!(
            "{}_{} is not a valid Lie type: family {} needs rank >= {}",
            family.letter(),
            rank,
            family.letter(),
            min
        )));
    }
    Ok(())
}

impl LieType {
    /// Validates a raw label and returns its canonical form.
    pub fn new(family: Family, rank: u32) -> Result<LieType> {
        check_raw(family, rank)?;
        Ok(match (family, rank) {
            (Family::B, 1) | (Family::C, 1) => LieType { family: Family::A, rank: 1 },
            (Family::B, 2) => LieType { family: Family::C, rank: 2 },
            (Family::D, 3) => LieType { family: Family::A, rank: 3 },
            _ => LieType { family, rank },
        })
    }

    pub fn a(rank: u32) -> LieType {
        LieType::new(Family::A, rank).expect("rank >= 1")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.letter(), self.rank)
    }
}

/// A canonical type together with the label it was written as.
#[derive(Clone, Copy, Debug, Eq)]
pub struct LieLabel {
    pub canonical: LieType,
    pub raw_family: Family,
    pub raw_rank: u32,
}

impl LieLabel {
    pub fn new(family: Family, rank: u32) -> Result<LieLabel> {
        Ok(LieLabel { canonical: LieType::new(family, rank)?, raw_family: family, raw_rank: rank })
    }

    pub fn is_alias(&self) -> bool {
        self.canonical.family != self.raw_family || self.canonical.rank != self.raw_rank
    }
}

impl PartialEq for LieLabel {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl fmt::Display for LieLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_alias() {
            write!(f, "{} (= {}_{})", self.canonical, self.raw_family.letter(), self.raw_rank)
        } else {
            write!(f, "{}", self.canonical)
        }
    }
}

/// Bourbaki index `i` of a fundamental weight `ϖ_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinusculeWeight(pub u32);

/// The minuscule weights of `lie`, in increasing index order.
pub fn minuscule_weights(lie: LieType) -> Vec<MinusculeWeight> {
    let n = lie.rank;
    let idx: Vec<u32> = match lie.family {
        Family::A => (1..=n).collect(),
        Family::B => alloc::vec![n],
        Family::C => alloc::vec![1],
        Family::D => alloc::vec![1, n - 1, n],
    };
    idx.into_iter().map(MinusculeWeight).collect()
}

/// An irreducible representation with minuscule highest weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepDescriptor {
    lie: LieType,
    weight: MinusculeWeight,
}

impl RepDescriptor {
    /// Builds a representation from a raw label, translating the weight
    /// index through the alias normalization of the type.
    pub fn new(family: Family, rank: u32, index: u32) -> Result<RepDescriptor> {
        check_raw(family, rank)?;
        let not_minuscule = || {
            Error::validation(format!(
                "ϖ_{index} is not a minuscule weight of {}_{rank}; only minuscule highest weights are supported",
                family.letter()
            ))
        };
        let (lie, w) = match (family, rank, index) {
            (Family::B, 1, 1) | (Family::C, 1, 1) => (LieType::a(1), 1),
            (Family::B, 2, 2) => (LieType { family: Family::C, rank: 2 }, 1),
            (Family::D, 3, 1) => (LieType::a(3), 2),
            (Family::D, 3, 2) => (LieType::a(3), 1),
            (Family::D, 3, 3) => (LieType::a(3), 3),
            (Family::B, 1, _) | (Family::C, 1, _) | (Family::B, 2, _) | (Family::D, 3, _) => {
                return Err(not_minuscule())
            }
            _ => {
                let lie = LieType { family, rank };
                if !minuscule_weights(lie).contains(&MinusculeWeight(index)) {
                    return Err(not_minuscule());
                }
                (lie, index)
            }
        };
        Ok(RepDescriptor { lie, weight: MinusculeWeight(w) })
    }

    pub fn from_parts(lie: LieType, weight: MinusculeWeight) -> Result<RepDescriptor> {
        RepDescriptor::new(lie.family, lie.rank, weight.0)
    }

    pub fn lie(&self) -> LieType {
        self.lie
    }

    pub fn weight(&self) -> MinusculeWeight {
        self.weight
    }

    pub fn family(&self) -> Family {
        self.lie.family
    }

    pub fn rank(&self) -> u32 {
        self.lie.rank
    }

    pub fn index(&self) -> u32 {
        self.weight.0
    }

    /// Representative modulo diagram automorphisms: `A_r ϖ_s ~ ϖ_{r+1-s}`,
    /// `D_n ϖ_{n-1} ~ ϖ_n`, and triality on `D_4`.
    pub fn outer_canonical(&self) -> RepDescriptor {
        let n = self.lie.rank;
        let i = self.weight.0;
        let w = match self.lie.family {
            Family::A => i.min(n + 1 - i),
            Family::D if n == 4 => 1,
            Family::D if i == n - 1 => n,
            _ => i,
        };
        RepDescriptor { lie: self.lie, weight: MinusculeWeight(w) }
    }

    /// True for the standard-type representations: any minuscule weight of
    /// `B`, `C`, `D`, and `ϖ_1` or `ϖ_r` of `A_r`.
    pub fn is_sd_standard(&self) -> bool {
        match self.lie.family {
            Family::A => self.weight.0 == 1 || self.weight.0 == self.lie.rank,
            _ => true,
        }
    }

    /// Alternative label when the type is the `D_3` alias of `A_3`.
    pub fn d3_alias(&self) -> Option<String> {
        if self.lie == LieType::a(3) {
            let idx = match self.weight.0 {
                2 => 1,
                1 => 2,
                _ => 3,
            };
            Some(format!("D_3ϖ_{idx}"))
        } else {
            None
        }
    }
}

impl fmt::Display for RepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}ϖ_{}", self.lie, self.weight.0)
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Binomial coefficient in `u128`, or `None` on overflow.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Dimension of the representation.
pub fn rep_dimension(rep: &RepDescriptor) -> BigUint {
    let n = rep.lie.rank as u64;
    let two = BigUint::from(2u32);
    match rep.lie.family {
        Family::A => binomial(n + 1, rep.weight.0 as u64),
        Family::B => two.pow(rep.lie.rank),
        Family::C => BigUint::from(2 * n),
        Family::D if rep.weight.0 == 1 => BigUint::from(2 * n),
        Family::D => two.pow(rep.lie.rank - 1),
    }
}

/// Dimension as `u64` when it fits.
pub fn rep_dimension_u64(rep: &RepDescriptor) -> Option<u64> {
    u64::try_from(rep_dimension(rep)).ok()
}

/// Every catalog entry with canonical rank at most `max_rank`, sorted.
pub fn catalog_up_to_rank(max_rank: u32) -> Vec<RepDescriptor> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in 1..=max_rank {
            let Ok(lie) = LieType::new(family, rank) else { continue };
            if lie.family != family || lie.rank != rank {
                continue;
            }
            for w in minuscule_weights(lie) {
                out.push(RepDescriptor { lie, weight: w });
            }
        }
    }
    out.sort();
    out
}
