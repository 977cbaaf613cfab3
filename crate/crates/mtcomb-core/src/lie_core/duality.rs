use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use super::weights::WeightVector;
use super::{Family, RepDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DualityType {
    NonSelfDual,
    Orthogonal,
    Symplectic,
}

impl DualityType {
    pub fn is_self_dual(self) -> bool {
        self != DualityType::NonSelfDual
    }

    pub fn name(self) -> &'static str {
        match self {
            DualityType::NonSelfDual => "non-self-dual",
            DualityType::Orthogonal => "orthogonal",
            DualityType::Symplectic => "symplectic",
        }
    }

    /// Duality of a tensor product: a non-self-dual factor absorbs
    /// everything, otherwise the parity of symplectic factors decides.
    pub fn tensor<I: IntoIterator<Item = DualityType>>(factors: I) -> DualityType {
        let mut symplectic = 0usize;
        for d in factors {
            match d {
                DualityType::NonSelfDual => return DualityType::NonSelfDual,
                DualityType::Symplectic => symplectic += 1,
                DualityType::Orthogonal => {}
            }
        }
        if symplectic % 2 == 1 {
            DualityType::Symplectic
        } else {
            DualityType::Orthogonal
        }
    }
}

impl fmt::Display for DualityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Closed-form duality type of a minuscule representation.
pub fn duality(rep: &RepDescriptor) -> DualityType {
    use DualityType::*;
    let n = rep.rank();
    match rep.family() {
        Family::A => {
            let s = rep.index();
            if n + 1 != 2 * s {
                NonSelfDual
            } else if s.is_multiple_of(2) {
                Orthogonal
            } else {
                Symplectic
            }
        }
        Family::B => match n % 4 {
            0 | 3 => Orthogonal,
            _ => Symplectic,
        },
        Family::C => Symplectic,
        Family::D if rep.index() == 1 => Orthogonal,
        Family::D => match n % 4 {
            0 => Orthogonal,
            2 => Symplectic,
            _ => NonSelfDual,
        },
    }
}

/// Whether the weight multiset is stable under `λ ↦ -λ`. Type `A`
/// weights are first projected to the trace-zero hyperplane.
pub fn is_negation_stable(family: Family, weights: &[WeightVector]) -> bool {
    let centered: Vec<WeightVector> = if family == Family::A {
        weights
            .iter()
            .map(|w| {
                let len = w.0.len() as i64;
                let sum = w.0.iter().fold(Ratio::from_integer(0), |a, b| a + b);
                let shift = sum / Ratio::from_integer(len);
                WeightVector(w.0.iter().map(|x| x - shift).collect())
            })
            .collect()
    } else {
        weights.to_vec()
    };
    let mut a = centered.clone();
    let mut b: Vec<WeightVector> = centered.iter().map(WeightVector::negated).collect();
    a.sort();
    b.sort();
    a == b
}
