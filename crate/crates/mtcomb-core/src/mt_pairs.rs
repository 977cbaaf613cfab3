//! Tensor decompositions of weight-`{0,1}` Mumford-Tate pairs into
//! minuscule factors.
//!
//! Multiplicities follow the distinguished-factor model: a cocharacter acts
//! through exactly one tensor factor, so a class with pair `(p, q)` on a
//! factor of dimension `e` gives the pair `(D'p, D'q)` on the product, where
//! `D' = total_dim / e`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lie_core::{
    admissible_cocharacter_classes, binomial, binomial_u128, duality, multiplicity_pair,
    rep_dimension, rep_dimension_u64, CocharacterClass, DualityType, Family, LieType,
    MultiplicityPair, RepDescriptor,
};

/// Exact nonnegative fraction.
pub type Frac = Ratio<BigUint>;

/// Default bound on the target dimension of a decomposition search.
pub const DEFAULT_SEARCH_CAP: u64 = 1_000_000;

/// Name of the cocharacter model, echoed in reports.
pub const COCHARACTER_MODEL: &str = "distinguished-factor";

pub fn frac(p: u64, q: u64) -> Frac {
    Ratio::new(BigUint::from(p), BigUint::from(q))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MTFactor {
    pub rep: RepDescriptor,
    pub chosen_class: Option<CocharacterClass>,
}

impl MTFactor {
    pub fn new(rep: RepDescriptor) -> MTFactor {
        MTFactor { rep, chosen_class: None }
    }

    pub fn with_class(rep: RepDescriptor, class: CocharacterClass) -> Result<MTFactor> {
        multiplicity_pair(&rep, class)?;
        Ok(MTFactor { rep, chosen_class: Some(class) })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCandidate {
    pub factors: Vec<MTFactor>,
    pub total_dim: BigUint,
    pub realizable_ratios: BTreeSet<Frac>,
    pub total_duality: DualityType,
}

impl DecompositionCandidate {
    /// Builds a candidate from factor representations, sorted canonically.
    pub fn from_reps(reps: Vec<RepDescriptor>) -> Result<DecompositionCandidate> {
        Self::from_reps_with(reps, factor_ratio_list)
    }

    fn from_reps_with(
        mut reps: Vec<RepDescriptor>,
        mut ratios_of: impl FnMut(&RepDescriptor) -> Vec<Frac>,
    ) -> Result<DecompositionCandidate> {
        if reps.is_empty() {
            return Err(Error::validation("a decomposition needs at least one factor"));
        }
        reps.sort();
        let mut total = BigUint::one();
        let mut ratios = Vec::new();
        for r in &reps {
            let d = rep_dimension(r);
            if d < BigUint::from(2u32) {
                return Err(Error::validation(format!("factor {r} is trivial")));
            }
            total *= d;
            ratios.extend(ratios_of(r));
        }
        let factors: Vec<MTFactor> = reps.into_iter().map(MTFactor::new).collect();
        let total_duality = tensor_duality(&factors);
        Ok(DecompositionCandidate { factors, total_dim: total, realizable_ratios: collect_fracs(ratios), total_duality })
    }

    pub fn reps(&self) -> Vec<RepDescriptor> {
        self.factors.iter().map(|f| f.rep).collect()
    }

    pub fn rank_sum(&self) -> u32 {
        self.factors.iter().map(|f| f.rep.rank()).sum()
    }

    /// Lie types joined by `+`, e.g. `A_1+A_1+A_2`.
    pub fn shape(&self) -> String {
        shape_of(&self.reps())
    }

    /// Factor representations joined by `⊗`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(|f| format!("{}", f.rep)).collect();
        parts.join(" ⊗ ")
    }
}

impl fmt::Display for DecompositionCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [dim {}, {}]", self.label(), self.total_dim, self.total_duality)
    }
}

/// Lie types of `reps` joined by `+`.
pub fn shape_of(reps: &[RepDescriptor]) -> String {
    let mut lies: Vec<LieType> = reps.iter().map(|r| r.lie()).collect();
    lies.sort();
    let parts: Vec<String> = lies.iter().map(|l| format!("{l}")).collect();
    parts.join("+")
}

/// Reduced ratios `min/max` over the admissible classes of `rep`.
pub fn factor_ratios(rep: &RepDescriptor) -> BTreeSet<Frac> {
    collect_fracs(factor_ratio_list(rep))
}

fn factor_ratio_list(rep: &RepDescriptor) -> Vec<Frac> {
    if rep.family() == Family::A {
        if let Some(v) = a_ratios_u128(rep.rank() as u64, rep.index() as u64) {
            return v;
        }
    }
    admissible_cocharacter_classes(rep).iter().map(|c| c.pair.ratio()).collect()
}

/// Type `A` ratios in machine integers: the class `a` pairs the counts of
/// `s`-subsets meeting `{1..a}` in the most and the fewest points.
fn a_ratios_u128(r: u64, s: u64) -> Option<Vec<Frac>> {
    let mut out = Vec::new();
    for a in 1..=r {
        let lo = (s + a).saturating_sub(r + 1);
        let hi = s.min(a);
        if hi - lo != 1 {
            continue;
        }
        let count = |v: u64| binomial_u128(a, v)?.checked_mul(binomial_u128(r + 1 - a, s - v)?);
        let (x, y) = (count(hi)?, count(lo)?);
        let (p, q) = if x <= y { (x, y) } else { (y, x) };
        let g = p.gcd(&q);
        out.push(Frac::new_raw(BigUint::from(p / g), BigUint::from(q / g)));
    }
    Some(out)
}

/// Builds a set from reduced fractions. Values that fit in `u64` are sorted
/// by cross-multiplication first, so the set is built from sorted input.
fn collect_fracs(mut v: Vec<Frac>) -> BTreeSet<Frac> {
    let small: Option<Vec<(u64, u64)>> = v.iter().map(|r| Some((r.numer().to_u64()?, r.denom().to_u64()?))).collect();
    if let Some(mut pairs) = small {
        pairs.sort_unstable_by(|a, b| (a.0 as u128 * b.1 as u128).cmp(&(b.0 as u128 * a.1 as u128)));
        pairs.dedup();
        v = pairs.into_iter().map(|(p, q)| Frac::new_raw(BigUint::from(p), BigUint::from(q))).collect();
    }
    v.into_iter().collect()
}


/// Duality of a tensor product of factors.
pub fn tensor_duality(factors: &[MTFactor]) -> DualityType {
    DualityType::tensor(factors.iter().map(|f| duality(&f.rep)))
}

/// Every multiplicity pair realizable on the product.
pub fn tensor_multiplicity_pairs(candidate: &DecompositionCandidate) -> BTreeSet<MultiplicityPair> {
    let mut out = BTreeSet::new();
    for f in &candidate.factors {
        let co = &candidate.total_dim / rep_dimension(&f.rep);
        for c in admissible_cocharacter_classes(&f.rep) {
            let p = MultiplicityPair { m_id: &co * &c.pair.m_id, m_triv: &co * &c.pair.m_triv };
            out.insert(p.swapped());
            out.insert(p);
        }
    }
    out
}

/// All catalog representations with `2 <= dim <= max_dim`, canonical types
/// only, sorted by family, rank and weight index.
pub fn factor_catalog(max_dim: u64) -> Vec<RepDescriptor> {
    let mut out = Vec::new();
    if max_dim < 2 {
        return out;
    }
    for r in 1..max_dim as u32 {
        for s in 1..=r {
            match binomial_u128(r as u64 + 1, s as u64) {
                Some(d) if d <= max_dim as u128 => out.push(RepDescriptor::new(Family::A, r, s).expect("valid")),
                _ => {}
            }
        }
    }
    let mut n = 3u32;
    while 1u128 << n <= max_dim as u128 {
        out.push(RepDescriptor::new(Family::B, n, n).expect("valid"));
        n += 1;
    }
    let mut n = 2u32;
    while 2 * n as u64 <= max_dim {
        out.push(RepDescriptor::new(Family::C, n, 1).expect("valid"));
        n += 1;
    }
    let mut n = 4u32;
    while 2 * n as u64 <= max_dim || 1u128 << (n - 1) <= max_dim as u128 {
        if 2 * n as u64 <= max_dim {
            out.push(RepDescriptor::new(Family::D, n, 1).expect("valid"));
        }
        if 1u128 << (n - 1) <= max_dim as u128 {
            out.push(RepDescriptor::new(Family::D, n, n - 1).expect("valid"));
            out.push(RepDescriptor::new(Family::D, n, n).expect("valid"));
        }
        n += 1;
    }
    out.sort();
    out
}

/// Canonical factors (one per diagram-automorphism class) of dimension
/// exactly `d`.
pub fn canonical_factors_of_dim(d: u64) -> Vec<RepDescriptor> {
    let mut out = Vec::new();
    if d < 2 {
        return out;
    }
    out.push(RepDescriptor::new(Family::A, (d - 1) as u32, 1).expect("valid"));
    let mut s = 2u64;
    while binomial_u128(2 * s, s).is_some_and(|b| b <= d as u128) {
        let mut m = 2 * s;
        loop {
            match binomial_u128(m, s) {
                Some(b) if b < d as u128 => {}
                Some(b) if b == d as u128 => {
                    out.push(RepDescriptor::new(Family::A, (m - 1) as u32, s as u32).expect("valid"));
                    break;
                }
                _ => break,
            }
            m += 1;
        }
        s += 1;
    }
    if d.is_multiple_of(2) && d / 2 >= 2 {
        out.push(RepDescriptor::new(Family::C, (d / 2) as u32, 1).expect("valid"));
    }
    if d.is_multiple_of(2) && d / 2 >= 4 {
        out.push(RepDescriptor::new(Family::D, (d / 2) as u32, 1).expect("valid"));
    }
    if d.is_power_of_two() {
        let m = d.trailing_zeros();
        if m >= 3 {
            out.push(RepDescriptor::new(Family::B, m, m).expect("valid"));
        }
        if m + 1 >= 5 {
            out.push(RepDescriptor::new(Family::D, m + 1, m + 1).expect("valid"));
        }
    }
    out.sort();
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Every multiset of canonical factors whose dimensions multiply to
/// `target_dim`, with no ratio or duality filtering.
pub fn all_factorizations(target_dim: u64, cap: u64) -> Result<Vec<Vec<RepDescriptor>>> {
    if target_dim < 2 {
        return Err(Error::validation("target dimension must be at least 2"));
    }
    if target_dim > cap {
        return Err(Error::resource(format!(
            "target dimension {target_dim} exceeds the search cap {cap}"
        )));
    }
    let mut pool: Vec<(RepDescriptor, u64)> = Vec::new();
    for d in divisors(target_dim).into_iter().filter(|&d| d >= 2) {
        for r in canonical_factors_of_dim(d) {
            pool.push((r, d));
        }
    }
    pool.sort();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend(&pool, 0, target_dim, &mut cur, &mut out);
    Ok(out)
}

fn extend(
    pool: &[(RepDescriptor, u64)],
    start: usize,
    remaining: u64,
    cur: &mut Vec<RepDescriptor>,
    out: &mut Vec<Vec<RepDescriptor>>,
) {
    if remaining == 1 {
        out.push(cur.clone());
        return;
    }
    for i in start..pool.len() {
        let (r, d) = pool[i];
        if remaining.is_multiple_of(d) {
            cur.push(r);
            extend(pool, i, remaining / d, cur, out);
            cur.pop();
        }
    }
}

/// The single-factor representation a search of this dimension and
/// duality stands in for: the standard representation of `C_{d/2}`,
/// `D_{d/2}` or `A_{d-1}`.
pub fn implied_target(target_dim: u64, duality_req: Option<DualityType>) -> Option<RepDescriptor> {
    let half = (target_dim / 2) as u32;
    let rep = match duality_req {
        Some(DualityType::Symplectic) if target_dim.is_multiple_of(2) => RepDescriptor::new(Family::C, half, 1),
        Some(DualityType::Orthogonal) if target_dim.is_multiple_of(2) && half >= 3 => {
            RepDescriptor::new(Family::D, half, 1)
        }
        Some(DualityType::Symplectic) | Some(DualityType::Orthogonal) => return None,
        _ => RepDescriptor::new(Family::A, target_dim.checked_sub(1)? as u32, 1),
    };
    rep.ok().map(|r| r.outer_canonical())
}

/// Full parameter set of a decomposition search.
#[derive(Clone, Debug)]
pub struct DecompositionQuery {
    pub target_dim: u64,
    pub ratio_set: BTreeSet<Frac>,
    pub duality_req: Option<DualityType>,
    /// Single-factor representation to leave out.
    pub excluded: Option<RepDescriptor>,
    pub cap: u64,
}

fn check_ratio_set(ratio_set: &BTreeSet<Frac>) -> Result<()> {
    if ratio_set.is_empty() {
        return Err(Error::validation("ratio set must not be empty"));
    }
    for r in ratio_set {
        if r.numer().is_zero() || r > &Frac::one() {
            return Err(Error::validation(format!("ratio {r} is outside (0, 1]")));
        }
    }
    Ok(())
}

/// Runs a decomposition search.
pub fn enumerate_query(q: &DecompositionQuery) -> Result<Vec<DecompositionCandidate>> {
    check_ratio_set(&q.ratio_set)?;
    let excluded = q.excluded.map(|r| r.outer_canonical());
    let mut ratios: BTreeMap<RepDescriptor, (Vec<Frac>, bool)> = BTreeMap::new();
    let mut out = Vec::new();
    for reps in all_factorizations(q.target_dim, q.cap)? {
        if reps.len() == 1 && Some(reps[0]) == excluded {
            continue;
        }
        let passes = reps.iter().all(|r| {
            ratios
                .entry(*r)
                .or_insert_with(|| {
                    let set = factor_ratio_list(r);
                    let hit = set.iter().any(|x| q.ratio_set.contains(x));
                    (set, hit)
                })
                .1
        });
        if !passes {
            continue;
        }
        let c = DecompositionCandidate::from_reps_with(reps, |r| ratios[r].0.clone())?;
        if q.duality_req.is_some_and(|d| d != c.total_duality) {
            continue;
        }
        out.push(c);
    }
    out.sort_by_key(|a| (a.factors.len(), a.reps()));
    Ok(out)
}

/// Decompositions of `target_dim` whose factors each realize a ratio in
/// `ratio_set`. With `proper_only`, the single-factor standard
/// representation given by [`implied_target`] is left out.
pub fn enumerate_decompositions(
    target_dim: u64,
    ratio_set: &BTreeSet<Frac>,
    duality_req: Option<DualityType>,
    proper_only: bool,
) -> Result<Vec<DecompositionCandidate>> {
    enumerate_query(&DecompositionQuery {
        target_dim,
        ratio_set: ratio_set.clone(),
        duality_req,
        excluded: if proper_only { implied_target(target_dim, duality_req) } else { None },
        cap: DEFAULT_SEARCH_CAP,
    })
}

/// Every ratio realized by some factor whose dimension divides
/// `target_dim`; using it as the ratio set turns the ratio filter off.
pub fn available_ratios(target_dim: u64) -> BTreeSet<Frac> {
    collect_fracs(
        divisors(target_dim)
            .into_iter()
            .filter(|&d| d >= 2)
            .flat_map(canonical_factors_of_dim)
            .flat_map(|r| factor_ratio_list(&r))
            .collect(),
    )
}

/// Parses `p/q` (or an integer `p`) in lowest terms with `q > 0`.
pub fn parse_frac(text: &str) -> Result<Frac> {
    let bad = || Error::validation(format!("`{text}` is not a fraction p/q"));
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (text, "1"),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(p) || !digits(q) {
        return Err(bad());
    }
    let p: BigUint = p.parse().map_err(|_| bad())?;
    let q: BigUint = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::validation(format!("`{text}` has a zero denominator")));
    }
    let r = Ratio::new(p.clone(), q);
    if *r.numer() != p {
        return Err(Error::validation(format!("`{text}` is not in lowest terms (use {r})")));
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExclusionPredicateResult {
    pub value: bool,
    pub witness: Option<u32>,
}

impl ExclusionPredicateResult {
    fn from_witness(witness: Option<u32>) -> Self {
        ExclusionPredicateResult { value: witness.is_some(), witness }
    }
}

fn find_binomial_witness(target: &BigUint, value: impl Fn(u32) -> BigUint) -> Option<u32> {
    let mut m = 1u32;
    loop {
        let v = value(m);
        if &v == target {
            return Some(m);
        }
        if &v > target {
            return None;
        }
        m += 1;
    }
}

/// Whether `two_n = binomial(2^{m+1}, 2^m)` for some `m >= 1`.
pub fn is_exceptional_halfspin_binom(two_n: &BigUint) -> ExclusionPredicateResult {
    ExclusionPredicateResult::from_witness(find_binomial_witness(two_n, |m| {
        binomial(1u64 << (m + 1), 1u64 << m)
    }))
}

/// Whether `n = binomial(4m, 2m)` for some `m >= 1`.
pub fn is_central_binom(n: &BigUint) -> ExclusionPredicateResult {
    ExclusionPredicateResult::from_witness(find_binomial_witness(n, |m| binomial(4 * m as u64, 2 * m as u64)))
}

/// Dimension as `u64`; panics never, returns `None` when huge.
pub fn dim_u64(rep: &RepDescriptor) -> Option<u64> {
    rep_dimension_u64(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn rep(f: Family, r: u32, i: u32) -> RepDescriptor {
        RepDescriptor::new(f, r, i).unwrap()
    }

    fn ratios(v: &[(u64, u64)]) -> BTreeSet<Frac> {
        v.iter().map(|&(p, q)| frac(p, q)).collect()
    }

    fn shapes(c: &[DecompositionCandidate]) -> Vec<String> {
        c.iter().map(|c| c.shape()).collect()
    }

    #[test]
    fn catalog_small() {
        let c2: Vec<String> = factor_catalog(2).iter().map(|r| r.to_string()).collect();
        assert_eq!(c2, ["A_1ϖ_1"]);
        let c4: Vec<String> = factor_catalog(4).iter().map(|r| r.to_string()).collect();
        assert_eq!(c4, ["A_1ϖ_1", "A_2ϖ_1", "A_2ϖ_2", "A_3ϖ_1", "A_3ϖ_3", "C_2ϖ_1"]);
        let c8 = factor_catalog(8);
        assert!(c8.contains(&rep(Family::B, 3, 3)));
        assert!(c8.contains(&rep(Family::D, 4, 3)));
        assert!(c8.contains(&rep(Family::D, 4, 4)));
    }

    #[test]
    fn tensor_pairs() {
        let p = |c: &DecompositionCandidate| -> Vec<(u64, u64)> {
            tensor_multiplicity_pairs(c)
                .iter()
                .map(|p| (u64::try_from(&p.m_id).unwrap(), u64::try_from(&p.m_triv).unwrap()))
                .collect()
        };
        let a2a2 = DecompositionCandidate::from_reps(alloc::vec![rep(Family::A, 2, 1), rep(Family::A, 2, 1)]).unwrap();
        assert_eq!(p(&a2a2), [(3, 6), (6, 3)]);
        let a1 = DecompositionCandidate::from_reps(alloc::vec![rep(Family::A, 1, 1)]).unwrap();
        assert_eq!(p(&a1), [(1, 1)]);
        let a1a4 = DecompositionCandidate::from_reps(alloc::vec![rep(Family::A, 1, 1), rep(Family::A, 4, 1)]).unwrap();
        assert_eq!(p(&a1a4), [(2, 8), (4, 6), (5, 5), (6, 4), (8, 2)]);
    }

    #[test]
    fn examples() {
        let r = enumerate_decompositions(9, &ratios(&[(1, 2)]), None, true).unwrap();
        assert_eq!(shapes(&r), ["A_2+A_2"]);
        let all: BTreeSet<Frac> = (1..=4).flat_map(|q| (1..=q).map(move |p| frac(p, q))).collect();
        assert!(enumerate_decompositions(4, &all, Some(DualityType::Symplectic), true).unwrap().is_empty());
        let r = enumerate_decompositions(12, &ratios(&[(1, 1), (1, 2)]), Some(DualityType::Symplectic), true).unwrap();
        assert!(r.iter().any(|c| c.reps() == [rep(Family::A, 1, 1), rep(Family::A, 3, 2)]));
        let r = enumerate_decompositions(12, &ratios(&[(1, 1), (1, 2)]), None, true).unwrap();
        assert!(r.iter().any(|c| c.reps() == [rep(Family::A, 2, 1), rep(Family::C, 2, 1)]));
        let r = enumerate_decompositions(10, &ratios(&[(1, 1)]), Some(DualityType::Orthogonal), true).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn duality_examples() {
        let f = |v: &[RepDescriptor]| tensor_duality(&v.iter().copied().map(MTFactor::new).collect::<Vec<_>>());
        assert_eq!(f(&[rep(Family::C, 2, 1), rep(Family::A, 1, 1)]), DualityType::Orthogonal);
        assert_eq!(f(&[rep(Family::A, 1, 1); 3]), DualityType::Symplectic);
        assert_eq!(f(&[rep(Family::A, 2, 1), rep(Family::C, 5, 1)]), DualityType::NonSelfDual);
    }

    #[test]
    fn binomial_predicates() {
        let b = |x: u64| BigUint::from(x);
        assert_eq!(is_exceptional_halfspin_binom(&b(6)), ExclusionPredicateResult { value: true, witness: Some(1) });
        assert_eq!(is_exceptional_halfspin_binom(&b(70)).witness, Some(2));
        assert!(!is_exceptional_halfspin_binom(&b(10)).value);
        assert_eq!(is_exceptional_halfspin_binom(&b(12870)).witness, Some(3));
        assert_eq!(is_central_binom(&b(6)).witness, Some(1));
        assert_eq!(is_central_binom(&b(70)).witness, Some(2));
        assert!(!is_central_binom(&b(20)).value);
        assert_eq!(is_central_binom(&b(924)).witness, Some(3));
    }

    #[test]
    fn canonical_factor_dims() {
        for d in 2..300u64 {
            for r in canonical_factors_of_dim(d) {
                assert_eq!(rep_dimension_u64(&r), Some(d));
                assert_eq!(r.outer_canonical(), r);
            }
        }
        let s: Vec<String> = canonical_factors_of_dim(70).iter().map(|r| r.to_string()).collect();
        assert_eq!(s, ["A_7ϖ_4", "A_69ϖ_1", "C_35ϖ_1", "D_35ϖ_1"]);
    }

    #[test]
    fn rejects_bad_ratio_sets() {
        assert!(enumerate_decompositions(8, &BTreeSet::new(), None, true).is_err());
        assert!(enumerate_decompositions(8, &ratios(&[(3, 2)]), None, true).is_err());
        assert!(enumerate_decompositions(DEFAULT_SEARCH_CAP + 1, &ratios(&[(1, 1)]), None, true)
            .unwrap_err()
            .is_resource());
    }

    #[test]
    fn fraction_parsing() {
        assert_eq!(parse_frac("2/3").unwrap(), frac(2, 3));
        assert_eq!(parse_frac("1").unwrap(), frac(1, 1));
        assert!(parse_frac("2/4").is_err());
        assert!(parse_frac("1/0").is_err());
        assert!(parse_frac("-1/2").is_err());
        assert!(parse_frac("1/2/3").is_err());
        assert_eq!(frac(1, 3).to_string(), "1/3");
    }

    #[test]
    fn available_ratios_cover_every_factor() {
        let all = available_ratios(12);
        let filtered = enumerate_decompositions(12, &all, None, false).unwrap();
        assert_eq!(filtered.len(), all_factorizations(12, DEFAULT_SEARCH_CAP).unwrap().len());
    }
}
