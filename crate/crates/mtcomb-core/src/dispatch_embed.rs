//! Case dispatch over products of simple factors, the exceptional `D_4`
//! check, and bookkeeping for embedding plans.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lie_core::DualityType;
use crate::mt_pairs::{enumerate_decompositions, frac, is_exceptional_halfspin_binom, DecompositionCandidate};
use crate::nonspecial::{nonspecial_verdict, NonSpecialVerdict, ObstructionDatum, SignatureProfile, VerdictOutcome};
use crate::shimura_types::{classify_simple_type, is_inner, SimpleAdjointDescriptor, TypeKind, TypeLabel};

/// Caller-asserted hypotheses for a non-inner `D_4^H` factor. They concern
/// the group over a `q`-adic field and cannot be computed here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct D4Flags {
    pub absolutely_simple: bool,
    pub pairwise_non_isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorInput {
    desc: SimpleAdjointDescriptor,
    label: TypeLabel,
    profile: Option<SignatureProfile>,
    flags: Option<D4Flags>,
    inner: bool,
}

impl FactorInput {
    /// Validates a factor. A profile is required exactly for type `A` and
    /// must agree with the descriptor; flags are accepted only on non-inner
    /// `D_4^H` factors.
    pub fn new(
        desc: SimpleAdjointDescriptor,
        label: TypeLabel,
        profile: Option<SignatureProfile>,
        flags: Option<D4Flags>,
    ) -> Result<FactorInput> {
        let actual = classify_simple_type(&desc);
        if actual != label {
            return Err(Error::validation(format!("label {label} does not match the descriptor ({actual})")));
        }
        let inner = is_inner(&desc);
        match (&profile, label.kind) {
            (None, TypeKind::A) => return Err(Error::validation("type A factors need a signature profile")),
            (Some(_), k) if k != TypeKind::A => {
                return Err(Error::validation(format!("a signature profile was given for {label}")));
            }
            (Some(p), _) => {
                let expected = profile_of(&desc)?;
                if p.n() != expected.n() || p.signatures() != expected.signatures() {
                    return Err(Error::validation("the signature profile does not match the descriptor"));
                }
            }
            _ => {}
        }
        if flags.is_some() && !(label.kind == TypeKind::DH && label.rank == 4 && !inner) {
            return Err(Error::validation(format!("hypothesis flags apply only to non-inner D_4^H, not {label}")));
        }
        Ok(FactorInput { desc, label, profile, flags, inner })
    }

    /// Builds a factor from a descriptor alone, deriving the label and, for
    /// type `A`, the profile.
    pub fn from_descriptor(desc: SimpleAdjointDescriptor, flags: Option<D4Flags>) -> Result<FactorInput> {
        let label = classify_simple_type(&desc);
        let profile = if label.kind == TypeKind::A { Some(profile_of(&desc)?) } else { None };
        FactorInput::new(desc, label, profile, flags)
    }

    pub fn descriptor(&self) -> &SimpleAdjointDescriptor {
        &self.desc
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn profile(&self) -> Option<&SignatureProfile> {
        self.profile.as_ref()
    }

    pub fn flags(&self) -> Option<D4Flags> {
        self.flags
    }

    pub fn is_inner(&self) -> bool {
        self.inner
    }
}

/// Signature profile read off a type `A` descriptor.
pub fn profile_of(desc: &SimpleAdjointDescriptor) -> Result<SignatureProfile> {
    SignatureProfile::new(desc.rank(), desc.signatures(), desc.compact_copies())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    A,
    B,
    C,
    D,
    DPrime,
    E,
    None,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::A => "a",
            Case::B => "b",
            Case::C => "c",
            Case::D => "d",
            Case::DPrime => "d_prime",
            Case::E => "e",
            Case::None => "none",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseLabel {
    pub case: Case,
    pub reason: String,
}

/// Data explaining why a factor is not covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorObstruction {
    NonSpecial(Vec<ObstructionDatum>),
    Decompositions(Vec<DecompositionCandidate>),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorReport {
    pub label: TypeLabel,
    pub case: CaseLabel,
    pub verdict: Option<NonSpecialVerdict>,
    pub obstruction: FactorObstruction,
}

fn is_odd_prime(m: u32) -> bool {
    m >= 3 && m % 2 == 1 && (3..).step_by(2).take_while(|p| p * p <= m).all(|p| !m.is_multiple_of(p))
}

/// The case a factor falls under, without computing obstruction data.
pub fn dispatch_case(factor: &FactorInput, search_cap: u64) -> Result<CaseLabel> {
    dispatch_inner(factor, search_cap).map(|(c, _)| c)
}

fn dispatch_inner(factor: &FactorInput, search_cap: u64) -> Result<(CaseLabel, Option<NonSpecialVerdict>)> {
    let label = factor.label;
    let n = label.rank;
    let mk = |case: Case, reason: String| CaseLabel { case, reason };
    Ok(match label.kind {
        TypeKind::A => {
            let profile = factor.profile.as_ref().ok_or_else(|| Error::validation("missing signature profile"))?;
            let v = nonspecial_verdict(profile, search_cap)?;
            let c = match v.rule() {
                Some(rule) => mk(Case::A, format!("non-special A_{n} type by {rule}")),
                None => mk(Case::None, format!("A_{n} type is not certified non-special")),
            };
            (c, Some(v))
        }
        TypeKind::B => (mk(Case::B, format!("B_{n} type")), None),
        TypeKind::C if n % 2 == 1 => (mk(Case::C, format!("C_{n} type with n odd")), None),
        TypeKind::C => (mk(Case::None, format!("C_{n} type with n even")), None),
        TypeKind::DH if n >= 5 && n % 2 == 1 => {
            let ex = is_exceptional_halfspin_binom(&BigUint::from(2 * n));
            if ex.value {
                let m = ex.witness.unwrap_or(0);
                (mk(Case::None, format!("2n = {} = binom({}, {})", 2 * n, 1u64 << (m + 1), 1u64 << m)), None)
            } else {
                (mk(Case::D, format!("D_{n}^H type, n odd, 2n not a central binomial of a power of 2")), None)
            }
        }
        TypeKind::DH if n.is_multiple_of(2) && !factor.inner && is_odd_prime(n / 2) => {
            (mk(Case::DPrime, format!("non-inner D_{n}^H type with n/2 = {} an odd prime", n / 2)), None)
        }
        TypeKind::DH => {
            let why = if n.is_multiple_of(2) && factor.inner {
                format!("inner D_{n}^H type")
            } else {
                format!("D_{n}^H type with n/2 = {} not an odd prime", n / 2)
            };
            (mk(Case::None, why), None)
        }
        TypeKind::DR => (mk(Case::E, format!("D_{n}^R type")), None),
        TypeKind::DMixed => (mk(Case::None, format!("D_{n}^mixed type")), None),
        TypeKind::E6 | TypeKind::E7 => (mk(Case::None, format!("{label} type")), None),
    })
}

fn decomposition_obstruction(dim: u64, duality: DualityType) -> Result<FactorObstruction> {
    let one = [frac(1, 1)].into_iter().collect();
    Ok(FactorObstruction::Decompositions(enumerate_decompositions(dim, &one, Some(duality), true)?))
}

/// Case plus, for uncovered factors, the obstruction data behind it.
pub fn factor_report(factor: &FactorInput, search_cap: u64) -> Result<FactorReport> {
    let (case, verdict) = dispatch_inner(factor, search_cap)?;
    let n = factor.label.rank as u64;
    let obstruction = if case.case != Case::None {
        FactorObstruction::None
    } else {
        match factor.label.kind {
            TypeKind::A => match verdict.as_ref().map(|v| &v.outcome) {
                Some(VerdictOutcome::Inconclusive(o)) => FactorObstruction::NonSpecial(o.clone()),
                _ => FactorObstruction::None,
            },
            TypeKind::C => decomposition_obstruction(2 * n, DualityType::Symplectic)?,
            TypeKind::DH => decomposition_obstruction(2 * n, DualityType::Orthogonal)?,
            _ => FactorObstruction::None,
        }
    };
    Ok(FactorReport { label: factor.label, case, verdict, obstruction })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub covered: bool,
    pub factors: Vec<FactorReport>,
}

/// Covered when every factor falls under some case.
pub fn coverage_verdict(factors: &[FactorInput], search_cap: u64) -> Result<CoverageReport> {
    if factors.is_empty() {
        return Err(Error::validation("at least one factor is required"));
    }
    let reports = factors.iter().map(|f| factor_report(f, search_cap)).collect::<Result<Vec<_>>>()?;
    Ok(CoverageReport { covered: reports.iter().all(|r| r.case.case != Case::None), factors: reports })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum D4Status {
    /// No `D_4` factors; the result is the plain coverage verdict.
    Reduced { covered: bool },
    /// Applicable, conditional on the asserted flags.
    Applicable,
    NotApplicable(String),
    CannotEvaluate(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D4Report {
    pub status: D4Status,
    pub d4_indices: Vec<usize>,
    pub coverage: CoverageReport,
}

/// Extended check allowing non-inner `D_4^H` factors whose two `q`-adic
/// hypotheses are asserted by the caller.
pub fn exceptional_d4_check(factors: &[FactorInput], search_cap: u64) -> Result<D4Report> {
    let coverage = coverage_verdict(factors, search_cap)?;
    let is_d4 = |f: &FactorInput| f.label.rank == 4 && matches!(f.label.kind, TypeKind::DH | TypeKind::DR);
    let d4: Vec<usize> = (0..factors.len()).filter(|&i| is_d4(&factors[i])).collect();
    let status = if d4.is_empty() {
        D4Status::Reduced { covered: coverage.covered }
    } else if let Some(&i) = d4.iter().find(|&&i| factors[i].label.kind != TypeKind::DH || factors[i].inner) {
        let what = if factors[i].label.kind == TypeKind::DR { "D_4^R" } else { "inner D_4^H" };
        D4Status::NotApplicable(format!("factor {i} is of {what} type"))
    } else if let Some(i) = (0..factors.len()).find(|i| !d4.contains(i) && coverage.factors[*i].case.case == Case::None) {
        D4Status::NotApplicable(format!("factor {i} ({}) falls under no case", factors[i].label))
    } else if let Some(&i) = d4.iter().find(|&&i| factors[i].flags.is_none()) {
        D4Status::CannotEvaluate(format!("factor {i}: hypothesis flags were not supplied"))
    } else if let Some(&i) = d4.iter().find(|&&i| {
        let f = factors[i].flags.expect("checked");
        !(f.absolutely_simple && f.pairwise_non_isomorphic)
    }) {
        D4Status::NotApplicable(format!("factor {i}: an asserted hypothesis is false"))
    } else {
        D4Status::Applicable
    };
    Ok(D4Report { status, d4_indices: d4, coverage })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmbedParams {
    pub f0_degree: Option<u64>,
    pub k_degree: Option<u64>,
    /// Use the single half-spin construction for inner `D_n^R` with `n`
    /// even.
    pub half_spin_variant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MBound {
    /// Dimension of the symplectic space of the construction.
    Concrete(BigUint),
    Symbolic(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingPlan {
    /// `p` in `G(A) = SU(p,p)`; absent for type `A`, which embeds directly.
    pub group_a_p: Option<BigUint>,
    pub degree_bound_worst: u32,
    pub degree_bound_refined: u32,
    pub kernel_trivial: Option<bool>,
    /// `n_4` with `n_4 + 1` the dimension of the standard representation of
    /// `G(A)`.
    pub n4: BigUint,
    pub dim_spin_carrier: Option<BigUint>,
    pub dim_standard_carrier: Option<BigUint>,
    pub m_bound: MBound,
    pub chain: Vec<String>,
}

impl EmbeddingPlan {
    pub fn group_a_label(&self) -> Option<String> {
        self.group_a_p.as_ref().map(|p| format!("SU({p},{p})"))
    }
}

/// Dimension bookkeeping for the embedding into a Siegel modular variety.
pub fn embedding_plan(factor: &FactorInput, params: EmbedParams) -> Result<EmbeddingPlan> {
    if params.f0_degree == Some(0) || params.k_degree == Some(0) {
        return Err(Error::validation("degree parameters must be positive"));
    }
    let label = factor.label;
    let n = label.rank;
    let two = BigUint::from(2u32);
    if params.half_spin_variant && !(label.kind == TypeKind::DR && n.is_multiple_of(2) && factor.inner) {
        return Err(Error::validation(format!("the half-spin variant needs inner D_n^R with n even, not {label}")));
    }
    let (p, worst, refined, kernel) = match label.kind {
        TypeKind::A => (None, 1, 1, None),
        TypeKind::B => (Some(two.pow(n - 1)), 1, 1, Some(true)),
        TypeKind::C => (Some(BigUint::from(n)), 1, 1, Some(true)),
        TypeKind::DH => (Some(BigUint::from(n)), 4, 2, Some(false)),
        TypeKind::DR if params.half_spin_variant => (Some(two.pow(n - 2)), 4, 2, Some(true)),
        TypeKind::DR => (Some(two.pow(n - 1)), 4, 4, Some(true)),
        _ => return Err(Error::validation(format!("no embedding plan for {label}"))),
    };
    let n4 = match &p {
        Some(p) => p * 2u32 - 1u32,
        None => BigUint::from(n),
    };
    let e0 = params.f0_degree.map(|f| if n4.is_one() { 2 * f } else { f });
    let dim_standard_carrier = e0.map(|e| (&n4 + 1u32) * e);
    let dim_spin_carrier = match (label.kind, params.k_degree) {
        (TypeKind::B | TypeKind::DR, Some(k)) => Some(two.pow(n + 1) * k),
        _ => None,
    };
    let m_bound = match &dim_standard_carrier {
        Some(d) => MBound::Concrete(d.clone()),
        None => MBound::Symbolic(format!("({} + 1) * [E_0:Q]", n4)),
    };
    let g4 = match &p {
        Some(p) => format!("(G_4, X_4): restriction of SU({p},{p}) from F_1"),
        None => String::from("(G_4, X_4): restriction of the unitary group of the factor"),
    };
    let chain = alloc::vec![
        String::from("(G_2, X_2): the given factor"),
        String::from("(G_3, X_3): its image in G(A)"),
        g4,
        String::from("GSp(W_1, psi_1)"),
    ];
    Ok(EmbeddingPlan {
        group_a_p: p,
        degree_bound_worst: worst,
        degree_bound_refined: refined,
        kernel_trivial: kernel,
        n4,
        dim_spin_carrier,
        dim_standard_carrier,
        m_bound,
        chain,
    })
}
