//! Numerical tests for non-special `A_n` type.
//!
//! A profile lists the signatures `(a_j, b_j)` of the non-compact factors.
//! Six closed-form rules each certify the profile; failing those, an
//! exhaustive search for obstruction data decides whether any proper
//! subgroup shape survives the numerical constraints.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::lie_core::{admissible_cocharacter_classes, binomial_u128, DualityType, Family, RepDescriptor};
use crate::mt_pairs::{
    enumerate_query, frac, shape_of, DecompositionCandidate, DecompositionQuery, Frac, DEFAULT_SEARCH_CAP,
};

/// Default bound on the number of candidates examined by the search.
pub const DEFAULT_OBSTRUCTION_CAP: u64 = 100_000;

/// Caveat attached to every verdict.
pub const NONSPECIAL_CAVEAT: &str = "The verdict certifies only the numerical tests on signatures. \
It does not establish the full definition of non-special A_n type, which also involves tori and \
groups over q-adic fields; the tests can fail in cases where the definition still holds.";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignatureProfile {
    n: u32,
    signatures: Vec<(u32, u32)>,
    compact_count: u32,
}

impl SignatureProfile {
    /// Validates a profile. Signatures are kept as a sorted multiset.
    pub fn new(n: u32, signatures: Vec<(u32, u32)>, compact_count: u32) -> Result<SignatureProfile> {
        if n == 0 {
            return Err(Error::validation("rank n must be at least 1"));
        }
        if signatures.is_empty() {
            return Err(Error::validation("at least one non-compact signature is required"));
        }
        for &(a, b) in &signatures {
            if a == 0 || a > b || a + b != n + 1 {
                return Err(Error::validation(format!(
                    "signature ({a},{b}) must satisfy 1 <= a <= b and a + b = {}",
                    n + 1
                )));
            }
        }
        let mut signatures = signatures;
        signatures.sort();
        Ok(SignatureProfile { n, signatures, compact_count })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn signatures(&self) -> &[(u32, u32)] {
        &self.signatures
    }

    pub fn compact_count(&self) -> u32 {
        self.compact_count
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioData {
    pub ratios: BTreeSet<Frac>,
    pub c: Frac,
    pub d: Frac,
    pub m: BTreeSet<(u32, u32)>,
}

pub fn ratio_set(profile: &SignatureProfile) -> RatioData {
    let ratios: BTreeSet<Frac> = profile.signatures.iter().map(|&(a, b)| frac(a as u64, b as u64)).collect();
    let m = profile.signatures.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    let c = ratios.iter().next().cloned().expect("nonempty");
    let d = ratios.iter().last().cloned().expect("nonempty");
    RatioData { ratios, c, d, m }
}

/// `binom(r, s-1) / binom(r, s)`.
pub fn c_rs(r: u64, s: u64) -> Frac {
    frac(s, r + 1 - s)
}

/// `binom(r+1, s)`.
pub fn e_rs(r: u64, s: u64) -> Option<u128> {
    binomial_u128(r + 1, s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    SearchEmpty,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
            RuleId::SearchEmpty => "obstruction-search-empty",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            RuleId::R1 => "some signature has coprime entries and is not a consecutive binomial pair",
            RuleId::R2 => "c < d and some signature has coprime entries",
            RuleId::R3 => "c < d < 1 and some gcd(a_j, b_j) has no admissible divisor",
            RuleId::R4 => "c = d = 1 and (n = 3 or 4 does not divide n + 1)",
            RuleId::R5 => "c < d = 1, n + 1 a power of 2, and some c_j < 1 with an odd entry",
            RuleId::R6 => "n + 1 is 4 or a prime",
            RuleId::SearchEmpty => "the obstruction search found no candidate",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    a.gcd(&b)
}

/// Whether `(a, b) = (binom(r, s-1), binom(r, s))` for some `s >= 2` with
/// `2s - 1 <= r`.
pub fn is_consecutive_binomial_pair(a: u32, b: u32) -> bool {
    let (a, b) = (a as u128, b as u128);
    let mut s = 2u64;
    while binomial_u128(2 * s - 1, s - 1).is_some_and(|x| x <= a) {
        let mut r = 2 * s - 1;
        while let Some(x) = binomial_u128(r, s - 1) {
            if x > a {
                break;
            }
            if x == a && binomial_u128(r, s) == Some(b) {
                return true;
            }
            r += 1;
        }
        s += 1;
    }
    false
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

/// Whether `g` has a divisor `> 1` of the form `ã + b̃` with `ã/b̃` in the
/// ratio set, or `e_{(r,s)}` with `c_{(r,s)}` in the ratio set.
fn has_admissible_divisor(g: u32, data: &RatioData) -> bool {
    let sums: Vec<u64> = data
        .ratios
        .iter()
        .map(|r| (r.numer() + r.denom()).to_u64().expect("small"))
        .collect();
    for k in 2..=g as u64 {
        if !(g as u64).is_multiple_of(k) {
            continue;
        }
        if sums.iter().any(|&s| k % s == 0) {
            return true;
        }
        let mut s = 1u64;
        while e_rs(2 * s - 1, s).is_some_and(|e| e <= k as u128) {
            let mut r = 2 * s - 1;
            while let Some(e) = e_rs(r, s) {
                if e > k as u128 {
                    break;
                }
                if e == k as u128 && data.ratios.contains(&c_rs(r, s)) {
                    return true;
                }
                r += 1;
            }
            s += 1;
        }
    }
    false
}

/// Rules `R1..R6` that hold for `profile`, in fixed order.
pub fn apply_example_rules(profile: &SignatureProfile) -> Vec<RuleId> {
    let data = ratio_set(profile);
    let n = profile.n as u64;
    let one = Frac::one();
    let coprime = profile.signatures.iter().any(|&(a, b)| gcd(a, b) == 1);
    let mut out = Vec::new();
    if profile.signatures.iter().any(|&(a, b)| gcd(a, b) == 1 && !is_consecutive_binomial_pair(a, b)) {
        out.push(RuleId::R1);
    }
    if data.c < data.d && coprime {
        out.push(RuleId::R2);
    }
    if data.c < data.d
        && data.d < one
        && profile.signatures.iter().any(|&(a, b)| !has_admissible_divisor(gcd(a, b), &data))
    {
        out.push(RuleId::R3);
    }
    if data.c == one && (n == 3 || !(n + 1).is_multiple_of(4)) {
        out.push(RuleId::R4);
    }
    if data.c < data.d
        && data.d == one
        && (n + 1).is_power_of_two()
        && profile.signatures.iter().any(|&(a, b)| a < b && (a % 2 == 1 || b % 2 == 1))
    {
        out.push(RuleId::R5);
    }
    if n + 1 == 4 || is_prime(n + 1) {
        out.push(RuleId::R6);
    }
    out
}

/// One simple factor of an obstruction. `f` is 0 for the standard
/// representation of `A_r`, 1 for `A_r ϖ_s` with `2 <= s <= r - 2`, and
/// absent for non-`A` factors admitted in relaxed mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionFactor {
    pub rep: RepDescriptor,
    pub r: u32,
    pub f: Option<u8>,
    pub s: Option<u32>,
    /// `(a, b)` with `a + b = r + 1` when `f = 0`.
    pub ab: Option<(u32, u32)>,
    /// The ratio `c_{j,m}` chosen for this factor.
    pub ratio: Frac,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coverage {
    /// The chosen ratios are exactly the ratio set.
    Strict,
    /// Covered only after adding every ratio of the standard factors.
    LiteralOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionDatum {
    pub factors: Vec<ObstructionFactor>,
    pub rank_sum: u32,
    pub relaxed: bool,
    pub coverage: Coverage,
    /// Indices of the signatures this datum serves; the constraints do not
    /// depend on the signature, so this is every index.
    pub indices: Vec<usize>,
}

impl ObstructionDatum {
    pub fn t(&self) -> usize {
        self.factors.len()
    }

    pub fn shape(&self) -> String {
        let reps: Vec<RepDescriptor> = self.factors.iter().map(|f| f.rep).collect();
        shape_of(&reps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub strict: Vec<ObstructionDatum>,
    /// Data that satisfy only the literal union form of the coverage
    /// condition.
    pub literal_extra: Vec<ObstructionDatum>,
    pub relaxed: bool,
    pub candidates_examined: u64,
}

impl SearchResult {
    pub fn is_empty(&self) -> bool {
        self.strict.is_empty() && self.literal_extra.is_empty()
    }
}

fn factor_choices(rep: &RepDescriptor, data: &RatioData) -> Vec<Frac> {
    let ratios: BTreeSet<Frac> = admissible_cocharacter_classes(rep).iter().map(|c| c.pair.ratio()).collect();
    ratios.into_iter().filter(|r| data.ratios.contains(r)).collect()
}

fn build_factor(rep: RepDescriptor, ratio: Frac, relaxed_ok: bool) -> Option<ObstructionFactor> {
    let r = rep.rank();
    if rep.family() != Family::A {
        return relaxed_ok.then_some(ObstructionFactor { rep, r, f: None, s: None, ab: None, ratio });
    }
    let s = rep.index();
    if s == 1 {
        let p = ratio.numer().to_u32()?;
        let q = ratio.denom().to_u32()?;
        let a = p * (r + 1) / (p + q);
        Some(ObstructionFactor { rep, r, f: Some(0), s: None, ab: Some((a, r + 1 - a)), ratio })
    } else if s >= 2 && s + 2 <= r {
        Some(ObstructionFactor { rep, r, f: Some(1), s: Some(s), ab: None, ratio })
    } else {
        None
    }
}

/// Ratios `a/(r+1-a)` attainable by the standard representation of `A_r`.
fn standard_ratios(r: u32) -> BTreeSet<Frac> {
    (1..=r.div_ceil(2)).map(|a| frac(a as u64, (r + 1 - a) as u64)).collect()
}

/// First assignment of one ratio per factor (in factor order, each list in
/// increasing order) whose image satisfies `accept`.
fn first_assignment(choices: &[Vec<Frac>], accept: impl Fn(&[Frac]) -> bool) -> Option<Vec<Frac>> {
    let mut idx = alloc::vec![0usize; choices.len()];
    if choices.iter().any(|c| c.is_empty()) {
        return None;
    }
    loop {
        let pick: Vec<Frac> = idx.iter().zip(choices).map(|(&i, c)| c[i].clone()).collect();
        if accept(&pick) {
            return Some(pick);
        }
        let mut k = choices.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Exhaustive obstruction search. Profiles with `d < 1` use the strict
/// form, where every factor is of type `A`. Profiles with `d = 1` run in
/// relaxed mode: any catalog factor is allowed and the result is flagged.
pub fn obstruction_search(profile: &SignatureProfile, search_cap: u64) -> Result<SearchResult> {
    obstruction_search_mode(profile, search_cap, false)
}

/// [`obstruction_search`] with relaxed mode forced on when `force_relaxed`
/// is set, even for profiles with `d < 1`.
pub fn obstruction_search_mode(profile: &SignatureProfile, search_cap: u64, force_relaxed: bool) -> Result<SearchResult> {
    let data = ratio_set(profile);
    let n = profile.n;
    let full = data.d == Frac::one();
    let relaxed = full || force_relaxed;
    let target = n as u64 + 1;
    let duality_req = (data.ratios.len() == 1 && full).then_some(DualityType::NonSelfDual);
    let mut candidates = enumerate_query(&DecompositionQuery {
        target_dim: target,
        ratio_set: data.ratios.clone(),
        duality_req: None,
        excluded: RepDescriptor::new(Family::A, n, 1).ok(),
        cap: DEFAULT_SEARCH_CAP,
    })?;
    if candidates.len() as u64 > search_cap {
        return Err(Error::Resource {
            message: format!("obstruction search examined more than {search_cap} candidates"),
            partial: true,
        });
    }
    if let Some(req) = duality_req {
        candidates.retain(|c| c.total_duality == req);
    }
    let examined = candidates.len() as u64;
    let indices: Vec<usize> = (0..profile.signatures.len()).collect();
    let mut strict = Vec::new();
    let mut literal = Vec::new();
    for c in candidates {
        if c.rank_sum() >= n {
            continue;
        }
        if let Some(d) = examine(&c, &data, relaxed, &indices) {
            match d.coverage {
                Coverage::Strict => strict.push(d),
                Coverage::LiteralOnly => literal.push(d),
            }
        }
    }
    Ok(SearchResult { strict, literal_extra: literal, relaxed, candidates_examined: examined })
}

fn examine(c: &DecompositionCandidate, data: &RatioData, relaxed: bool, indices: &[usize]) -> Option<ObstructionDatum> {
    let reps = c.reps();
    let shape_ok = reps.iter().all(|r| build_factor(*r, Frac::one(), relaxed).is_some());
    if !shape_ok {
        return None;
    }
    let choices: Vec<Vec<Frac>> = reps.iter().map(|r| factor_choices(r, data)).collect();
    let exact = |pick: &[Frac]| pick.iter().cloned().collect::<BTreeSet<_>>() == data.ratios;
    let mut extra: BTreeSet<Frac> = BTreeSet::new();
    for r in &reps {
        if r.family() == Family::A && r.index() == 1 {
            extra.extend(standard_ratios(r.rank()));
        }
    }
    let loose = |pick: &[Frac]| {
        let mut img: BTreeSet<Frac> = pick.iter().cloned().collect();
        img.extend(extra.iter().cloned());
        data.ratios.is_subset(&img)
    };
    let (pick, coverage) = match first_assignment(&choices, exact) {
        Some(p) => (p, Coverage::Strict),
        None => (first_assignment(&choices, loose)?, Coverage::LiteralOnly),
    };
    let factors = reps
        .iter()
        .zip(pick)
        .map(|(r, ratio)| build_factor(*r, ratio, relaxed).expect("checked"))
        .collect();
    Some(ObstructionDatum { factors, rank_sum: c.rank_sum(), relaxed, coverage, indices: indices.to_vec() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerdictOutcome {
    NonSpecial(RuleId),
    Inconclusive(Vec<ObstructionDatum>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonSpecialVerdict {
    pub outcome: VerdictOutcome,
    /// All rules that hold, in order.
    pub triggered: Vec<RuleId>,
    /// Whether the search ran in relaxed mode.
    pub relaxed: bool,
}

impl NonSpecialVerdict {
    pub fn is_nonspecial(&self) -> bool {
        matches!(self.outcome, VerdictOutcome::NonSpecial(_))
    }

    pub fn rule(&self) -> Option<RuleId> {
        match self.outcome {
            VerdictOutcome::NonSpecial(r) => Some(r),
            VerdictOutcome::Inconclusive(_) => None,
        }
    }
}

/// First triggered rule, else the search: empty means certified, otherwise
/// every strict datum followed by the literal-only ones.
pub fn nonspecial_verdict(profile: &SignatureProfile, search_cap: u64) -> Result<NonSpecialVerdict> {
    nonspecial_verdict_mode(profile, search_cap, false)
}

/// [`nonspecial_verdict`] with the search mode of [`obstruction_search_mode`].
pub fn nonspecial_verdict_mode(
    profile: &SignatureProfile,
    search_cap: u64,
    force_relaxed: bool,
) -> Result<NonSpecialVerdict> {
    let triggered = apply_example_rules(profile);
    let relaxed = force_relaxed || ratio_set(profile).d == Frac::one();
    if let Some(&r) = triggered.first() {
        return Ok(NonSpecialVerdict { outcome: VerdictOutcome::NonSpecial(r), triggered, relaxed });
    }
    let res = obstruction_search_mode(profile, search_cap, force_relaxed)?;
    let outcome = if res.is_empty() {
        VerdictOutcome::NonSpecial(RuleId::SearchEmpty)
    } else {
        let mut all = res.strict;
        all.extend(res.literal_extra);
        VerdictOutcome::Inconclusive(all)
    };
    Ok(NonSpecialVerdict { outcome, triggered, relaxed })
}

/// One row per nonempty ratio set attainable in rank `n` whose profile
/// (one signature per ratio) is not settled by a rule and has strict
/// obstructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub ratios: BTreeSet<Frac>,
    pub strict: Vec<ObstructionDatum>,
    pub literal_extra: Vec<ObstructionDatum>,
}

pub fn obstruction_table(n: u32, search_cap: u64) -> Result<Vec<TableRow>> {
    let sigs: Vec<(u32, u32)> = (1..=n.div_ceil(2)).map(|a| (a, n + 1 - a)).collect();
    if sigs.len() > 16 {
        return Err(Error::resource(format!("rank {n} has too many ratio subsets to tabulate")));
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << sigs.len()) {
        let chosen: Vec<(u32, u32)> =
            sigs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| *s).collect();
        let profile = SignatureProfile::new(n, chosen, 0)?;
        if !apply_example_rules(&profile).is_empty() {
            continue;
        }
        let res = obstruction_search(&profile, search_cap)?;
        if res.is_empty() {
            continue;
        }
        out.push(TableRow { ratios: ratio_set(&profile).ratios, strict: res.strict, literal_extra: res.literal_extra });
    }
    out.sort_by(|a, b| a.ratios.cmp(&b.ratios));
    Ok(out)
}

/// Convenience: `p/q` as a fraction of `BigUint`s.
pub fn ratio(p: u64, q: u64) -> Frac {
    Frac::new(BigUint::from(p), BigUint::from(q))
}
