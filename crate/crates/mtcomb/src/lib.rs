//! Command-line front end for `mtcomb-core`.
//!
//! [`run`] parses arguments, reads a descriptor document, and returns the
//! exit code and output streams, so it can be driven in-process.

pub mod document;
pub mod report;
pub mod selftest;

use std::collections::BTreeSet;
use std::io::Read;
use std::path::PathBuf;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mtcomb_core::dispatch_embed::{embedding_plan, exceptional_d4_check, profile_of, EmbedParams, FactorInput};
use mtcomb_core::mt_pairs::{available_ratios, enumerate_query, implied_target, parse_frac, DecompositionQuery, DEFAULT_SEARCH_CAP};
use mtcomb_core::nonspecial::{nonspecial_verdict_mode, SignatureProfile, DEFAULT_OBSTRUCTION_CAP};
use mtcomb_core::shimura_types::{classify, is_pel_adjoint, nu_set_orbit_size, reflex_data, DEFAULT_GROUP_CAP};
use mtcomb_core::{Error, Result};

use document::{parse_descriptor, parse_duality, MtQuery, Payload};

#[derive(Parser, Debug)]
#[command(name = "mtcomb", version, about = "Mumford-Tate and Shimura datum combinatorics")]
pub struct Cli {
    /// Descriptor document; `-` or omitted reads stdin.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Resource cap. Defaults: 100000 obstruction candidates for
    /// nonspecial and dispatch, 1000000 group elements for classify,
    /// reflex and pel, target dimension 1000000 for mtpairs.
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Type label, involution status, inner/outer and reflex degree.
    Classify,
    /// Non-special verdict for a type A signature profile.
    Nonspecial {
        /// Run the obstruction search in relaxed mode.
        #[arg(long)]
        relaxed: bool,
    },
    /// Decompositions of a target dimension into minuscule tensor factors.
    Mtpairs {
        #[arg(long)]
        dim: Option<u64>,
        /// symplectic, orthogonal, non-self-dual or any.
        #[arg(long)]
        duality: Option<String>,
        /// Comma-separated fractions, e.g. `1,1/3`.
        #[arg(long)]
        ratios: Option<String>,
        /// Leave out the single standard factor.
        #[arg(long)]
        proper: bool,
    },
    /// Case of each factor, coverage verdict and the D_4 extension.
    Dispatch,
    /// PEL-adjoint test.
    Pel,
    /// Reflex degree with group and stabilizer orders.
    Reflex,
    /// Dimension data of the Siegel embedding of one factor.
    EmbedPlan {
        #[arg(long)]
        f0_degree: Option<u64>,
        #[arg(long)]
        k_degree: Option<u64>,
        #[arg(long)]
        half_spin_variant: bool,
    },
    /// Built-in golden values and spot checks.
    Selftest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome { code: EXIT_OK, stdout: text, stderr: String::new() },
                _ => Outcome { code: EXIT_VALIDATION, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(&cli, stdin) {
        Ok((value, ok)) => {
            let stdout = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
                    s.push('\n');
                    s
                }
                Format::Text => report::render_text(&value),
            };
            Outcome { code: if ok { EXIT_OK } else { EXIT_VALIDATION }, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = if e.is_resource() { EXIT_RESOURCE } else { EXIT_VALIDATION };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    match &cli.input {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::validation(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            stdin.read_to_string(&mut text).map_err(|e| Error::validation(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn read_payload(cli: &Cli, stdin: &mut dyn Read) -> Result<Payload> {
    parse_descriptor(&read_input(cli, stdin)?)?.payload()
}

fn factors_of(payload: Payload, command: &str) -> Result<Vec<FactorInput>> {
    match payload {
        Payload::Factors(f) => Ok(f),
        _ => Err(Error::validation(format!("{command} expects a simple_factor or product document"))),
    }
}

fn group_cap(cli: &Cli) -> usize {
    cli.cap.map_or(DEFAULT_GROUP_CAP, |c| usize::try_from(c).unwrap_or(usize::MAX))
}

/// Returns the report and whether the command succeeded.
fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(Value, bool)> {
    match &cli.command {
        Command::Classify => {
            let factors = factors_of(read_payload(cli, stdin)?, "classify")?;
            let cap = group_cap(cli);
            let rows = factors
                .iter()
                .enumerate()
                .map(|(i, f)| classify(f.descriptor(), cap).map(|c| report::classification_json(i, f.descriptor(), &c)))
                .collect::<Result<Vec<_>>>()?;
            Ok((report::envelope("classify", json!({ "factors": rows }), &[]), true))
        }
        Command::Reflex => {
            let factors = factors_of(read_payload(cli, stdin)?, "reflex")?;
            let cap = group_cap(cli);
            let rows = factors
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let r = reflex_data(f.descriptor(), cap)?;
                    Ok(report::reflex_json(i, &r, nu_set_orbit_size(f.descriptor(), cap)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((report::envelope("reflex", json!({ "factors": rows }), &[]), true))
        }
        Command::Pel => {
            let factors = factors_of(read_payload(cli, stdin)?, "pel")?;
            let pairs: Vec<_> = factors.iter().map(|f| (f.descriptor().clone(), f.label())).collect();
            Ok((report::envelope("pel", report::pel_json(&is_pel_adjoint(&pairs)?), &[]), true))
        }
        Command::Nonspecial { relaxed } => {
            let profile = match read_payload(cli, stdin)? {
                Payload::Profile(p) => p,
                Payload::Factors(f) if f.len() == 1 && f[0].profile().is_some() => f[0].profile().cloned().expect("checked"),
                Payload::Factors(f) if f.len() == 1 => profile_of(f[0].descriptor())
                    .map_err(|e| Error::validation(format!("nonspecial needs a type A factor ({e})")))?,
                _ => return Err(Error::validation("nonspecial expects a profile or a type A simple_factor document")),
            };
            Ok((nonspecial_report(&profile, cli.cap.unwrap_or(DEFAULT_OBSTRUCTION_CAP), *relaxed)?, true))
        }
        Command::Mtpairs { dim, duality, ratios, proper } => {
            let q = match dim {
                Some(d) => MtQuery {
                    target_dim: *d,
                    ratio_set: ratios.as_deref().map(parse_ratio_list).transpose()?,
                    duality: duality.as_deref().map(parse_duality).transpose()?.flatten(),
                    proper_only: *proper,
                },
                None => {
                    if duality.is_some() || ratios.is_some() || *proper {
                        return Err(Error::validation("--duality, --ratios and --proper require --dim"));
                    }
                    match read_payload(cli, stdin)? {
                        Payload::MtQuery(q) => q,
                        _ => return Err(Error::validation("mtpairs expects an mtquery document or --dim")),
                    }
                }
            };
            Ok((mtpairs_report(&q, cli.cap.unwrap_or(DEFAULT_SEARCH_CAP))?, true))
        }
        Command::Dispatch => {
            let factors = factors_of(read_payload(cli, stdin)?, "dispatch")?;
            let d4 = exceptional_d4_check(&factors, cli.cap.unwrap_or(DEFAULT_OBSTRUCTION_CAP))?;
            let notes: &[&str] = if report::factor_flags_asserted(&factors) { &[report::FLAGS_NOTE] } else { &[] };
            let result = json!({ "coverage": report::coverage_json(&d4.coverage), "d4_extension": report::d4_json(&d4) });
            Ok((report::envelope("dispatch", result, notes), true))
        }
        Command::EmbedPlan { f0_degree, k_degree, half_spin_variant } => {
            let flag_params = EmbedParams { f0_degree: *f0_degree, k_degree: *k_degree, half_spin_variant: *half_spin_variant };
            let (factor, params) = match read_payload(cli, stdin)? {
                Payload::EmbedQuery(f, p) if flag_params == EmbedParams::default() => (f, p),
                Payload::EmbedQuery(..) => {
                    return Err(Error::validation("parameters come from the embedquery document; drop the flags"))
                }
                Payload::Factors(mut f) if f.len() == 1 => (f.remove(0), flag_params),
                _ => return Err(Error::validation("embed-plan expects an embedquery or simple_factor document")),
            };
            let plan = embedding_plan(&factor, params)?;
            let result = json!({ "type_label": factor.label().to_string(), "plan": report::plan_json(&plan) });
            Ok((report::envelope("embed-plan", result, &[]), true))
        }
        Command::Selftest => {
            let (value, ok) = selftest::run_selftest();
            Ok((report::envelope("selftest", value, &[]), ok))
        }
    }
}

pub fn nonspecial_report(profile: &SignatureProfile, cap: u64, relaxed: bool) -> Result<Value> {
    let v = nonspecial_verdict_mode(profile, cap, relaxed)?;
    Ok(report::envelope("nonspecial", report::verdict_json(profile, &v), &[]))
}

pub fn mtpairs_report(q: &MtQuery, cap: u64) -> Result<Value> {
    if q.target_dim > cap {
        return Err(Error::resource(format!("target dimension {} exceeds the search cap {cap}", q.target_dim)));
    }
    let ratio_set = q.ratio_set.clone().unwrap_or_else(|| available_ratios(q.target_dim));
    if ratio_set.is_empty() {
        return Err(Error::validation(format!("no factor has a dimension dividing {}", q.target_dim)));
    }
    let excluded = if q.proper_only { implied_target(q.target_dim, q.duality) } else { None };
    let query = DecompositionQuery { target_dim: q.target_dim, ratio_set: ratio_set.clone(), duality_req: q.duality, excluded, cap };
    let found = enumerate_query(&query)?;
    let result = json!({
        "query": {
            "target_dim": q.target_dim,
            "ratio_set": q.ratio_set.as_ref().map(|r| r.iter().map(report::frac_str).collect::<Vec<_>>()),
            "duality": q.duality.map_or("any", |d| d.name()),
            "excluded": excluded.map(|r| r.to_string()),
        },
        "rule": "mtpairs:minuscule-tensor-decomposition",
        "count": found.len(),
        "candidates": found.iter().map(report::candidate_json).collect::<Vec<_>>(),
    });
    Ok(report::envelope("mtpairs", result, &[]))
}

fn parse_ratio_list(text: &str) -> Result<BTreeSet<mtcomb_core::mt_pairs::Frac>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let set = parts.iter().map(|p| parse_frac(p)).collect::<Result<BTreeSet<_>>>()?;
    if set.len() != parts.len() {
        return Err(Error::validation("--ratios lists a fraction twice"));
    }
    Ok(set)
}
