//! Golden values and spot checks run by `mtcomb selftest`.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use mtcomb_core::dispatch_embed::{dispatch_case, Case, FactorInput};
use mtcomb_core::lie_core::{duality, duality_oracle, rep_dimension_u64, DualityType, Family, LieLabel};
use mtcomb_core::lie_core::oracle::{ORACLE_MAX_DIM, ORACLE_MAX_RANK};
use mtcomb_core::mt_pairs::{enumerate_decompositions, frac, factor_catalog};
use mtcomb_core::nonspecial::{obstruction_table, DEFAULT_OBSTRUCTION_CAP};
use mtcomb_core::shimura_types::{CopyMap, DiagramVertex, GaloisActionData, GaloisGenerator, RealData, SimpleAdjointDescriptor};

type Check = Result<String, String>;

fn table_shapes(n: u32) -> Check {
    let rows = obstruction_table(n, DEFAULT_OBSTRUCTION_CAP).map_err(|e| e.to_string())?;
    let shapes: BTreeSet<String> = rows.iter().flat_map(|r| r.strict.iter().map(|d| d.shape())).collect();
    Ok(shapes.into_iter().collect::<Vec<_>>().join(", "))
}

fn golden_table(n: u32, want: &[&str]) -> Check {
    let got = table_shapes(n)?;
    let want = want.join(", ");
    if got == want {
        Ok(format!("A_{n}: {got}"))
    } else {
        Err(format!("A_{n}: got {got}, expected {want}"))
    }
}

fn golden_decompositions(name: &str, dim: u64, d: DualityType, want: &[&str]) -> Check {
    let one: BTreeSet<_> = [frac(1, 1)].into_iter().collect();
    let got: BTreeSet<String> = enumerate_decompositions(dim, &one, Some(d), true)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|c| c.label())
        .collect();
    let want: BTreeSet<String> = want.iter().map(|s| s.to_string()).collect();
    if got == want {
        Ok(format!("{name}: {}", got.into_iter().collect::<Vec<_>>().join("; ")))
    } else {
        Err(format!("{name}: got {got:?}, expected {want:?}"))
    }
}

fn single_copy(family: Family, n: u32, node: u32, outer: bool) -> Result<FactorInput, String> {
    let mut gens = Vec::new();
    if outer {
        let mut p: Vec<u32> = (1..=n).collect();
        p.swap(n as usize - 2, n as usize - 1);
        gens.push(GaloisGenerator { copies: vec![CopyMap { target: 0, nodes: p }] });
    }
    let galois = GaloisActionData { degree: 1, generators: gens };
    let label = LieLabel::new(family, n).map_err(|e| e.to_string())?;
    let nu = [DiagramVertex::new(0, node)].into_iter().collect();
    let desc = SimpleAdjointDescriptor::new(label, vec![RealData::NonCompact], nu, &galois).map_err(|e| e.to_string())?;
    FactorInput::from_descriptor(desc, None).map_err(|e| e.to_string())
}

fn dispatch_spot(name: &str, factor: Result<FactorInput, String>, want: Case) -> Check {
    let case = dispatch_case(&factor?, DEFAULT_OBSTRUCTION_CAP).map_err(|e| e.to_string())?.case;
    if case == want {
        Ok(format!("{name}: case {case}"))
    } else {
        Err(format!("{name}: case {case}, expected {want}"))
    }
}

fn oracle_agreement() -> Check {
    let mut checked = 0;
    for rep in factor_catalog(ORACLE_MAX_DIM) {
        if rep.rank() > ORACLE_MAX_RANK || rep_dimension_u64(&rep).is_none_or(|d| d > ORACLE_MAX_DIM) {
            continue;
        }
        let o = duality_oracle(&rep).map_err(|e| e.to_string())?;
        if o != duality(&rep) {
            return Err(format!("{rep}: closed form {}, oracle {}", duality(&rep).name(), o.name()));
        }
        checked += 1;
    }
    Ok(format!("{checked} representations agree with the matrix oracle"))
}

/// Runs every check; the flag is true when all pass.
pub fn run_selftest() -> (Value, bool) {
    let checks: Vec<(&str, Check)> = vec![
        ("table-a5", golden_table(5, &["A_1+A_2"])),
        ("table-a7", golden_table(7, &["A_1+A_3"])),
        ("table-a8", golden_table(8, &["A_2+A_2"])),
        ("table-a9", golden_table(9, &["A_1+A_4", "A_4"])),
        ("table-a11", golden_table(11, &["A_1+A_1+A_2", "A_1+A_5", "A_2+A_3", "A_2+C_2"])),
        ("decomp-c4", golden_decompositions("C_4", 8, DualityType::Symplectic, &["A_1ϖ_1 ⊗ A_1ϖ_1 ⊗ A_1ϖ_1"])),
        ("decomp-c6", golden_decompositions("C_6", 12, DualityType::Symplectic, &["A_1ϖ_1 ⊗ A_3ϖ_2"])),
        ("decomp-d4", golden_decompositions("D_4", 8, DualityType::Orthogonal, &["B_3ϖ_3", "A_1ϖ_1 ⊗ C_2ϖ_1"])),
        ("decomp-d6", golden_decompositions("D_6", 12, DualityType::Orthogonal, &["A_1ϖ_1 ⊗ C_3ϖ_1"])),
        ("decomp-d35", golden_decompositions("D_35", 70, DualityType::Orthogonal, &["A_7ϖ_4"])),
        ("dispatch-b3", dispatch_spot("B_3", single_copy(Family::B, 3, 1, false), Case::B)),
        ("dispatch-c4", dispatch_spot("C_4", single_copy(Family::C, 4, 4, false), Case::None)),
        ("dispatch-d6h", dispatch_spot("outer D_6^H", single_copy(Family::D, 6, 6, true), Case::DPrime)),
        ("dispatch-d35h", dispatch_spot("D_35^H", single_copy(Family::D, 35, 35, false), Case::None)),
        ("duality-oracle", oracle_agreement()),
    ];
    let ok = checks.iter().all(|(_, c)| c.is_ok());
    let rows: Vec<Value> = checks
        .into_iter()
        .map(|(name, c)| match c {
            Ok(detail) => json!({ "check": name, "pass": true, "detail": detail }),
            Err(detail) => json!({ "check": name, "pass": false, "detail": detail }),
        })
        .collect();
    (json!({ "all_pass": ok, "checks": rows }), ok)
}
