//! Acceptance suite. Each criterion prints one `PASS`/`FAIL` line; the
//! process exits nonzero when any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use mtcomb_core::dispatch_embed::{coverage_verdict, dispatch_case, Case, FactorInput, FactorObstruction};
use mtcomb_core::lie_core::{
    admissible_cocharacter_classes, binomial, catalog_up_to_rank, duality, duality_oracle, enumerate_weights,
    multiplicity_pair, rep_dimension, CocharacterClass, DualityType, Family, LieLabel,
    MultiplicityPair, RepDescriptor, DEFAULT_WEIGHT_CAP,
};
use mtcomb_core::mt_pairs::{
    enumerate_decompositions, factor_catalog, factor_ratios, frac, is_exceptional_halfspin_binom, Frac,
};
use mtcomb_core::nonspecial::{
    nonspecial_verdict, obstruction_table, SignatureProfile, VerdictOutcome, DEFAULT_OBSTRUCTION_CAP,
};
use mtcomb_core::shimura_types::group::{closure, Perm};
use mtcomb_core::shimura_types::{
    classify_simple_type, nu_set_orbit_size, reflex_data, CopyMap, DiagramVertex, GaloisActionData,
    GaloisGenerator, RealData, SimpleAdjointDescriptor, TypeKind,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rep(f: Family, r: u32, i: u32) -> RepDescriptor {
    RepDescriptor::new(f, r, i).expect("catalog entry")
}

fn one() -> BTreeSet<Frac> {
    [frac(1, 1)].into_iter().collect()
}

fn ratios(v: &[(u64, u64)]) -> BTreeSet<Frac> {
    v.iter().map(|&(p, q)| frac(p, q)).collect()
}

fn profile(n: u32, sigs: &[(u32, u32)]) -> SignatureProfile {
    SignatureProfile::new(n, sigs.to_vec(), 0).expect("valid profile")
}

/// Ratio set of each strict table row, keyed to its obstruction shapes.
fn strict_rows(n: u32) -> Result<BTreeMap<BTreeSet<Frac>, BTreeSet<String>>, String> {
    let rows = obstruction_table(n, DEFAULT_OBSTRUCTION_CAP).map_err(|e| e.to_string())?;
    Ok(rows
        .into_iter()
        .filter(|r| !r.strict.is_empty())
        .map(|r| (r.ratios, r.strict.iter().map(|d| d.shape()).collect()))
        .collect())
}

fn shapes(v: &[&str]) -> BTreeSet<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn candidates(dim: u64, d: DualityType) -> Result<BTreeSet<Vec<RepDescriptor>>, String> {
    let found = enumerate_decompositions(dim, &one(), Some(d), true).map_err(|e| e.to_string())?;
    Ok(found.iter().map(|c| c.reps()).collect())
}

fn expect_reps(groups: &[Vec<RepDescriptor>]) -> BTreeSet<Vec<RepDescriptor>> {
    groups
        .iter()
        .map(|g| {
            let mut v = g.clone();
            v.sort();
            v
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let a5 = nonspecial_verdict(&profile(5, &[(3, 3), (2, 4)]), DEFAULT_OBSTRUCTION_CAP).map_err(|e| e.to_string())?;
    let a5_shapes: BTreeSet<String> = match &a5.outcome {
        VerdictOutcome::Inconclusive(o) => o.iter().map(|d| d.shape()).collect(),
        other => return Err(format!("A5 verdict is {other:?}")),
    };
    ensure(a5_shapes == shapes(&["A_1+A_2"]), || format!("A5 shapes {a5_shapes:?}"))?;

    let a7 = strict_rows(7)?;
    let want: BTreeMap<_, _> = [
        (ratios(&[(1, 1)]), shapes(&["A_1+A_3"])),
        (ratios(&[(1, 1), (1, 3)]), shapes(&["A_1+A_3"])),
    ]
    .into_iter()
    .collect();
    ensure(a7 == want, || format!("A7 rows {a7:?}"))?;

    let a8 = strict_rows(8)?;
    let want: BTreeMap<_, _> = [(ratios(&[(1, 2)]), shapes(&["A_2+A_2"]))].into_iter().collect();
    ensure(a8 == want, || format!("A8 rows {a8:?}"))?;
    let v = nonspecial_verdict(&profile(8, &[(3, 6)]), DEFAULT_OBSTRUCTION_CAP).map_err(|e| e.to_string())?;
    ensure(!v.is_nonspecial(), || "A8 profile should be inconclusive".into())?;

    let a9 = strict_rows(9)?;
    let want: BTreeMap<_, _> = [
        (ratios(&[(2, 3)]), shapes(&["A_4"])),
        (ratios(&[(1, 1), (1, 4)]), shapes(&["A_1+A_4"])),
        (ratios(&[(1, 1), (2, 3)]), shapes(&["A_1+A_4"])),
    ]
    .into_iter()
    .collect();
    ensure(a9 == want, || format!("A9 rows {a9:?}"))?;
    let single = obstruction_table(9, DEFAULT_OBSTRUCTION_CAP).map_err(|e| e.to_string())?;
    let a4 = single
        .iter()
        .flat_map(|r| r.strict.iter())
        .find(|d| d.t() == 1)
        .ok_or("no single-factor A9 obstruction")?;
    ensure(a4.factors[0].r == 4 && a4.factors[0].s == Some(2) && a4.factors[0].f == Some(1), || {
        format!("A9 single factor is {:?}", a4.factors[0])
    })?;

    let a11 = strict_rows(11)?;
    let all: BTreeSet<String> = a11.values().flatten().cloned().collect();
    let want = shapes(&["A_1+A_5", "A_1+A_1+A_2", "A_2+A_3", "A_2+C_2"]);
    ensure(all == want, || format!("A11 shapes {all:?}"))?;
    let half = ratios(&[(1, 1), (1, 2)]);
    for (c, s) in &a11 {
        let rank4 = s.iter().any(|x| x == "A_1+A_1+A_2" || x == "A_2+C_2");
        ensure(!rank4 || *c == half, || format!("A11 rank-4 shape with C = {c:?}"))?;
    }

    let checks: [(&str, u64, DualityType, Vec<Vec<RepDescriptor>>); 5] = [
        (
            "C4",
            8,
            DualityType::Symplectic,
            vec![vec![rep(Family::A, 1, 1), rep(Family::A, 1, 1), rep(Family::A, 1, 1)]],
        ),
        ("C6", 12, DualityType::Symplectic, vec![vec![rep(Family::A, 1, 1), rep(Family::D, 3, 1)]]),
        (
            "D4",
            8,
            DualityType::Orthogonal,
            vec![vec![rep(Family::B, 3, 3)], vec![rep(Family::B, 1, 1), rep(Family::B, 2, 2)]],
        ),
        ("D6", 12, DualityType::Orthogonal, vec![vec![rep(Family::C, 1, 1), rep(Family::C, 3, 1)]]),
        ("D35", 70, DualityType::Orthogonal, vec![vec![rep(Family::A, 7, 4)]]),
    ];
    for (name, dim, d, want) in checks {
        let got = candidates(dim, d)?;
        ensure(got == expect_reps(&want), || format!("{name}: got {got:?}"))?;
    }
    Ok("A5 A7 A8 A9 A11 C4 C6 D4 D6 D35 reproduced".into())
}

fn d_descriptor(n: u32, node: u32, outer: bool) -> SimpleAdjointDescriptor {
    let mut gens = Vec::new();
    if outer {
        let mut p: Vec<u32> = (1..=n).collect();
        p.swap(n as usize - 2, n as usize - 1);
        gens.push(GaloisGenerator { copies: vec![CopyMap { target: 0, nodes: p }] });
    }
    let g = GaloisActionData { degree: 1, generators: gens };
    let nu = [DiagramVertex::new(0, node)].into_iter().collect();
    let label = LieLabel::new(Family::D, n).expect("rank");
    SimpleAdjointDescriptor::new(label, vec![RealData::NonCompact], nu, &g).expect("valid descriptor")
}

fn criterion_2() -> Outcome {
    let mut hits = Vec::new();
    for n in (5u64..=200).step_by(2) {
        let found = !enumerate_decompositions(2 * n, &one(), Some(DualityType::Orthogonal), true)
            .map_err(|e| e.to_string())?
            .is_empty();
        let ex = is_exceptional_halfspin_binom(&BigUint::from(2 * n)).value;
        let brute = (1u64..=8).any(|m| binomial(1 << (m + 1), 1 << m) == BigUint::from(2 * n));
        ensure(found == ex && ex == brute, || format!("n = {n}: enumerator {found}, predicate {ex}, brute {brute}"))?;
        let f = FactorInput::from_descriptor(d_descriptor(n as u32, n as u32, false), None).map_err(|e| e.to_string())?;
        let case = dispatch_case(&f, DEFAULT_OBSTRUCTION_CAP).map_err(|e| e.to_string())?.case;
        ensure((case == Case::D) == !ex, || format!("n = {n}: D^H dispatches to {case}"))?;
        if found {
            hits.push(2 * n);
        }
    }
    ensure(hits == [70], || format!("exceptional values {hits:?}"))?;
    Ok("only 2n = 70 admits a proper alternative for odd n in 5..=200".into())
}

fn multisets(items: &[(u32, u32)], max: usize) -> Vec<Vec<(u32, u32)>> {
    let mut out = Vec::new();
    fn go(items: &[(u32, u32)], start: usize, cur: &mut Vec<(u32, u32)>, max: usize, out: &mut Vec<Vec<(u32, u32)>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i, cur, max, out);
            cur.pop();
        }
    }
    go(items, 0, &mut Vec::new(), max, &mut out);
    out
}

fn is_prime(m: u32) -> bool {
    m >= 2 && (2..m).take_while(|p| p * p <= m).all(|p| !m.is_multiple_of(p))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for n in 1u32..=30 {
        if !(is_prime(n + 1) || n + 1 == 4) {
            continue;
        }
        let sigs: Vec<(u32, u32)> = (1..=n.div_ceil(2)).map(|a| (a, n + 1 - a)).collect();
        for m in multisets(&sigs, 3) {
            let v = nonspecial_verdict(&profile(n, &m), DEFAULT_OBSTRUCTION_CAP).map_err(|e| e.to_string())?;
            ensure(v.is_nonspecial(), || format!("n = {n}, {m:?}: {:?}", v.outcome))?;
            count += 1;
        }
    }
    Ok(format!("{count} profiles certified"))
}

fn criterion_4() -> Outcome {
    let mut weights = 0;
    let mut oracle = 0;
    for r in catalog_up_to_rank(12) {
        let dim = rep_dimension(&r);
        if dim <= BigUint::from(4096u32) {
            let w = enumerate_weights(&r, DEFAULT_WEIGHT_CAP).map_err(|e| e.to_string())?;
            let distinct: BTreeSet<_> = w.iter().collect();
            ensure(BigUint::from(w.len()) == dim && distinct.len() == w.len(), || {
                format!("{r}: {} weights ({} distinct), dimension {dim}", w.len(), distinct.len())
            })?;
            weights += 1;
        }
        if r.rank() <= 6 && dim <= BigUint::from(64u32) {
            let o = duality_oracle(&r).map_err(|e| e.to_string())?;
            ensure(o == duality(&r), || format!("{r}: oracle {o:?}, table {:?}", duality(&r)))?;
            oracle += 1;
        }
    }
    Ok(format!("{weights} weight counts, {oracle} duality checks"))
}

/// Counts `s`-subsets of `{1..r+1}` by their intersection with `{1..a}`.
fn subset_histogram(r: u32, s: u32, a: u32) -> BTreeMap<u32, u64> {
    let mut h = BTreeMap::new();
    let low = (1u32 << a) - 1;
    for mask in 0u32..(1 << (r + 1)) {
        if mask.count_ones() == s {
            *h.entry((mask & low).count_ones()).or_insert(0) += 1;
        }
    }
    h
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for r in 1u32..=12 {
        for s in 1..=r {
            let rp = rep(Family::A, r, s);
            let admissible: BTreeSet<u32> =
                admissible_cocharacter_classes(&rp).iter().map(|c| c.class.coweight).collect();
            for a in 1..=r {
                let h = subset_histogram(r, s, a);
                let two_valued = h.len() == 2;
                ensure(two_valued == admissible.contains(&a), || format!("A_{r} ϖ_{s}, a = {a}: admissibility"))?;
                if !two_valued {
                    continue;
                }
                let brute = MultiplicityPair::new(*h.values().last().unwrap(), *h.values().next().unwrap());
                let pair = multiplicity_pair(&rp, CocharacterClass { coweight: a }).map_err(|e| e.to_string())?;
                ensure(pair == brute, || format!("A_{r} ϖ_{s}, a = {a}: {pair} vs {brute}"))?;
                if a == 1 {
                    let b = MultiplicityPair::new(binomial(r as u64, s as u64 - 1), binomial(r as u64, s as u64));
                    ensure(pair == b, || format!("A_{r} ϖ_{s}: {pair} vs binomials {b}"))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} classes match subset counts"))
}

fn criterion_6() -> Outcome {
    let all: BTreeSet<Frac> = factor_catalog(30).iter().flat_map(factor_ratios).collect();
    for n in (1u64..=15).step_by(2) {
        for rs in [one(), all.clone()] {
            let found = enumerate_decompositions(2 * n, &rs, Some(DualityType::Symplectic), true)
                .map_err(|e| e.to_string())?;
            ensure(found.is_empty(), || format!("n = {n}: {} candidates", found.len()))?;
        }
    }
    Ok("no proper symplectic candidates in dimension 2n for odd n <= 15".into())
}

const D4_AUTOS: [[u32; 4]; 6] =
    [[1, 2, 3, 4], [1, 2, 4, 3], [3, 2, 1, 4], [3, 2, 4, 1], [4, 2, 1, 3], [4, 2, 3, 1]];

#[derive(Clone)]
struct Elem {
    copies: Vec<u32>,
    autos: Vec<usize>,
}

impl Elem {
    fn generator(&self) -> GaloisGenerator {
        GaloisGenerator {
            copies: self
                .copies
                .iter()
                .zip(&self.autos)
                .map(|(&t, &a)| CopyMap { target: t, nodes: D4_AUTOS[a].to_vec() })
                .collect(),
        }
    }

    fn apply(&self, v: (u32, u32)) -> (u32, u32) {
        (self.copies[v.0 as usize], D4_AUTOS[self.autos[v.0 as usize]][v.1 as usize - 1])
    }

    fn perm(&self) -> Perm {
        let d = self.copies.len() as u32;
        (0..4 * d)
            .map(|i| {
                let (c, n) = self.apply((i / 4, i % 4 + 1));
                c * 4 + n - 1
            })
            .collect()
    }
}

fn copy_perms(d: u32) -> Vec<Vec<u32>> {
    match d {
        1 => vec![vec![0]],
        2 => vec![vec![0, 1], vec![1, 0]],
        _ => vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2], vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0]],
    }
}

fn elements(d: u32) -> Vec<Elem> {
    let mut out = Vec::new();
    for copies in copy_perms(d) {
        for k in 0..6usize.pow(d) {
            let autos = (0..d).map(|i| k / 6usize.pow(i) % 6).collect();
            out.push(Elem { copies: copies.clone(), autos });
        }
    }
    out
}

fn generator_sets(d: u32) -> Vec<Vec<Elem>> {
    let els = elements(d);
    match d {
        1 | 2 => {
            let mut v = Vec::new();
            for i in 0..els.len() {
                for j in i..els.len() {
                    v.push(vec![els[i].clone(), els[j].clone()]);
                }
            }
            v
        }
        _ => {
            let cycle = Elem { copies: vec![1, 2, 0], autos: vec![0, 0, 0] };
            let mut v: Vec<Vec<Elem>> = els.iter().map(|e| vec![e.clone()]).collect();
            v.extend(els.iter().map(|e| vec![cycle.clone(), e.clone()]));
            v
        }
    }
}

/// Orbit of the marked set under the generators, by direct search.
fn oracle_orbit(gens: &[Elem], nu: &BTreeSet<(u32, u32)>) -> (BTreeSet<(u32, u32)>, usize) {
    let mut pts = nu.clone();
    let mut frontier: Vec<(u32, u32)> = nu.iter().copied().collect();
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w = g.apply(v);
            if pts.insert(w) {
                frontier.push(w);
            }
        }
    }
    let mut sets = BTreeSet::from([nu.clone()]);
    let mut frontier = vec![nu.clone()];
    while let Some(s) = frontier.pop() {
        for g in gens {
            let t: BTreeSet<(u32, u32)> = s.iter().map(|&v| g.apply(v)).collect();
            if sets.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    (pts, sets.len())
}

fn criterion_7() -> Outcome {
    let label = LieLabel::new(Family::D, 4).expect("D4");
    let mut swept = 0u64;
    let mut tally: BTreeMap<TypeKind, u64> = BTreeMap::new();
    for d in 1u32..=3 {
        let mut seen_groups: BTreeSet<Vec<Perm>> = BTreeSet::new();
        for gens in generator_sets(d) {
            let perms: Vec<Perm> = gens.iter().map(Elem::perm).collect();
            let Ok(group) = closure(&perms, 4 * d as usize, 1000) else { continue };
            let transitive = (0..d).all(|c| group.iter().any(|g| g[0] / 4 == c));
            if !transitive || !seen_groups.insert(group.clone()) {
                continue;
            }
            let galois = GaloisActionData { degree: d, generators: gens.iter().map(Elem::generator).collect() };
            for mask in 1u32..(1 << d) {
                let noncompact: Vec<u32> = (0..d).filter(|c| mask >> c & 1 == 1).collect();
                for k in 0..3usize.pow(noncompact.len() as u32) {
                    let nu: BTreeSet<(u32, u32)> = noncompact
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| (c, [1, 3, 4][k / 3usize.pow(i as u32) % 3]))
                        .collect();
                    let real = (0..d)
                        .map(|c| if mask >> c & 1 == 1 { RealData::NonCompact } else { RealData::Compact })
                        .collect();
                    let verts = nu.iter().map(|&(c, n)| DiagramVertex::new(c, n)).collect();
                    let desc = SimpleAdjointDescriptor::new(label, real, verts, &galois)
                        .map_err(|e| format!("degree {d}: {e}"))?;
                    let kind = classify_simple_type(&desc).kind;
                    let (orbit, set_orbit) = oracle_orbit(&gens, &nu);
                    let counts: BTreeSet<usize> =
                        (0..d).map(|c| orbit.iter().filter(|v| v.0 == c).count()).collect();
                    let expected = match counts.iter().copied().collect::<Vec<_>>()[..] {
                        [1] => TypeKind::DR,
                        [2] => TypeKind::DH,
                        _ => TypeKind::DMixed,
                    };
                    ensure(kind == expected, || format!("degree {d}, nu {nu:?}: {kind:?} vs {expected:?}"))?;
                    let rd = reflex_data(&desc, 1000).map_err(|e| e.to_string())?;
                    let direct = nu_set_orbit_size(&desc, 1000).map_err(|e| e.to_string())?;
                    ensure(rd.degree == direct && direct == set_orbit as u64, || {
                        format!("degree {d}, nu {nu:?}: reflex {} vs orbit {direct} / {set_orbit}", rd.degree)
                    })?;
                    ensure(rd.group_order == group.len() as u64 && rd.group_order % rd.degree == 0, || {
                        format!("degree {d}: group order {}", rd.group_order)
                    })?;
                    *tally.entry(kind).or_insert(0) += 1;
                    swept += 1;
                }
            }
        }
    }
    ensure(tally.len() == 3, || format!("not every type occurs: {tally:?}"))?;
    Ok(format!("{swept} descriptors, {tally:?}"))
}

fn factor_of(desc: SimpleAdjointDescriptor) -> Result<FactorInput, String> {
    FactorInput::from_descriptor(desc, None).map_err(|e| e.to_string())
}

fn criterion_8() -> Outcome {
    let b3 = SimpleAdjointDescriptor::split(
        LieLabel::new(Family::B, 3).expect("B3"),
        vec![RealData::NonCompact],
        [DiagramVertex::new(0, 1)].into_iter().collect(),
    )
    .map_err(|e| e.to_string())?;
    let c4 = SimpleAdjointDescriptor::split(
        LieLabel::new(Family::C, 4).expect("C4"),
        vec![RealData::NonCompact],
        [DiagramVertex::new(0, 4)].into_iter().collect(),
    )
    .map_err(|e| e.to_string())?;
    let cases = |f: FactorInput| -> Result<(bool, Vec<Case>, FactorObstruction), String> {
        let r = coverage_verdict(&[f], DEFAULT_OBSTRUCTION_CAP).map_err(|e| e.to_string())?;
        let o = r.factors[0].obstruction.clone();
        Ok((r.covered, r.factors.iter().map(|x| x.case.case).collect(), o))
    };
    let (cov, c, _) = cases(factor_of(b3)?)?;
    ensure(cov && c == [Case::B], || format!("B3: {cov} {c:?}"))?;
    let (cov, c, o) = cases(factor_of(c4)?)?;
    ensure(!cov && c == [Case::None], || format!("C4: {cov} {c:?}"))?;
    let a1 = rep(Family::A, 1, 1);
    match o {
        FactorObstruction::Decompositions(d) if d.len() == 1 && d[0].reps() == [a1, a1, a1] => {}
        other => return Err(format!("C4 obstruction {other:?}")),
    }
    let (cov, c, _) = cases(factor_of(d_descriptor(6, 6, true))?)?;
    ensure(cov && c == [Case::DPrime], || format!("non-inner D6^H: {cov} {c:?}"))?;
    let (cov, c, _) = cases(factor_of(d_descriptor(35, 35, false))?)?;
    ensure(!cov && c == [Case::None], || format!("D35^H: {cov} {c:?}"))?;
    Ok("B3 covered (b), C4 uncovered with A_1^3, D6^H covered (d'), D35^H uncovered".into())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome, Option<u64>); 8] = [
        (1, "golden obstruction table", criterion_1, Some(10)),
        (2, "half-spin exclusion set", criterion_2, Some(30)),
        (3, "example rules for n+1 prime or 4", criterion_3, Some(60)),
        (4, "weight and duality oracles", criterion_4, None),
        (5, "multiplicity identities", criterion_5, None),
        (6, "symplectic parity", criterion_6, None),
        (7, "D_4 trichotomy sweep", criterion_7, None),
        (8, "dispatcher spot checks", criterion_8, None),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(s) => Err(format!("took {elapsed:.2?}, limit {s} s")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("criterion {id}: PASS ({name}; {elapsed:.2?}) {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id}: FAIL ({name}; {elapsed:.2?}) {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
