//! JSON descriptor documents.
//!
//! A document carries a `version` and exactly one payload:
//!
//! ```json
//! { "version": "1", "profile": { "n": 8, "signatures": [[3, 6]], "compact": 0 } }
//! ```
//!
//! ```json
//! {
//!   "version": "1",
//!   "simple_factor": {
//!     "type": "D", "rank": 6,
//!     "copies": ["noncompact"],
//!     "nu": [[0, 6]],
//!     "galois": [[{ "target": 0, "nodes": [1, 2, 3, 4, 6, 5] }]]
//!   }
//! }
//! ```
//!
//! `copies` lists the real place of each diagram copy as `"compact"`,
//! `"noncompact"` or `"su(a,b)"` (type `A`). `nu` lists marked vertices as
//! `[copy, node]`. Each Galois generator lists, per copy, the target copy
//! and the images of nodes `1..=rank`. Fractions are strings `"p/q"` in
//! lowest terms.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use mtcomb_core::dispatch_embed::{D4Flags, EmbedParams, FactorInput};
use mtcomb_core::lie_core::{DualityType, Family, LieLabel};
use mtcomb_core::mt_pairs::{parse_frac, Frac};
use mtcomb_core::nonspecial::SignatureProfile;
use mtcomb_core::shimura_types::{
    CopyMap, DiagramVertex, GaloisActionData, GaloisGenerator, RealData, SimpleAdjointDescriptor,
};
use mtcomb_core::{Error, Result};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorDocument {
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple_factor: Option<FactorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<FactorDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mtquery: Option<MtQueryDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedquery: Option<EmbedQueryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDoc {
    pub n: u32,
    pub signatures: Vec<[u32; 2]>,
    #[serde(default)]
    pub compact: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CopyMapDoc {
    pub target: u32,
    pub nodes: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsDoc {
    pub absolutely_simple: bool,
    pub pairwise_non_isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorDoc {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: u32,
    pub copies: Vec<String>,
    pub nu: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub galois: Vec<Vec<CopyMapDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<FlagsDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MtQueryDoc {
    pub target_dim: u64,
    /// Omitted means every ratio is allowed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio_set: Option<Vec<String>>,
    /// `symplectic`, `orthogonal`, `non-self-dual`; omitted means any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duality: Option<String>,
    #[serde(default)]
    pub proper_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbedQueryDoc {
    pub factor: FactorDoc,
    pub params: ParamsDoc,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f0_degree: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_degree: Option<u64>,
    #[serde(default)]
    pub half_spin_variant: bool,
}

/// The payload of a validated document.
#[derive(Clone, Debug)]
pub enum Payload {
    Profile(SignatureProfile),
    Factors(Vec<FactorInput>),
    MtQuery(MtQuery),
    EmbedQuery(FactorInput, EmbedParams),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MtQuery {
    pub target_dim: u64,
    pub ratio_set: Option<BTreeSet<Frac>>,
    pub duality: Option<DualityType>,
    pub proper_only: bool,
}

/// Strict parse. Syntax and schema errors carry line and column.
pub fn parse_descriptor(text: &str) -> Result<DescriptorDocument> {
    let doc: DescriptorDocument =
        serde_json::from_str(text).map_err(|e| Error::validation(format!("malformed document: {e}")))?;
    if doc.version != FORMAT_VERSION {
        return Err(Error::validation(format!(
            "unsupported version `{}`, expected `{FORMAT_VERSION}`",
            doc.version
        )));
    }
    let count = [
        doc.profile.is_some(),
        doc.simple_factor.is_some(),
        doc.product.is_some(),
        doc.mtquery.is_some(),
        doc.embedquery.is_some(),
    ]
    .iter()
    .filter(|b| **b)
    .count();
    if count != 1 {
        return Err(Error::validation(format!("a document needs exactly one payload, found {count}")));
    }
    Ok(doc)
}

/// Canonical text: pretty-printed JSON with a trailing newline.
pub fn serialize_descriptor(doc: &DescriptorDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

impl DescriptorDocument {
    pub fn payload(&self) -> Result<Payload> {
        if let Some(p) = &self.profile {
            return p.to_profile().map(Payload::Profile);
        }
        if let Some(f) = &self.simple_factor {
            return f.to_factor().map(|f| Payload::Factors(vec![f]));
        }
        if let Some(fs) = &self.product {
            if fs.is_empty() {
                return Err(Error::validation("a product needs at least one factor"));
            }
            let factors = fs
                .iter()
                .enumerate()
                .map(|(i, f)| f.to_factor().map_err(|e| context(e, &format!("factor {i}"))))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Payload::Factors(factors));
        }
        if let Some(q) = &self.mtquery {
            return q.to_query().map(Payload::MtQuery);
        }
        if let Some(q) = &self.embedquery {
            let params = EmbedParams {
                f0_degree: q.params.f0_degree,
                k_degree: q.params.k_degree,
                half_spin_variant: q.params.half_spin_variant,
            };
            return Ok(Payload::EmbedQuery(q.factor.to_factor()?, params));
        }
        Err(Error::validation("the document has no payload"))
    }
}

fn context(e: Error, what: &str) -> Error {
    match e {
        Error::Validation(m) => Error::Validation(format!("{what}: {m}")),
        other => other,
    }
}

impl ProfileDoc {
    pub fn to_profile(&self) -> Result<SignatureProfile> {
        SignatureProfile::new(self.n, self.signatures.iter().map(|s| (s[0], s[1])).collect(), self.compact)
    }
}

pub fn parse_family(s: &str) -> Result<Family> {
    let mut chars = s.chars();
    match (chars.next().and_then(Family::from_letter), chars.next()) {
        (Some(f), None) => Ok(f),
        _ => Err(Error::validation(format!("unknown Lie type `{s}`; expected A, B, C or D"))),
    }
}

fn parse_real(s: &str) -> Result<RealData> {
    match s {
        "compact" => return Ok(RealData::Compact),
        "noncompact" => return Ok(RealData::NonCompact),
        _ => {}
    }
    let inner = s
        .strip_prefix("su(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|r| r.split_once(','))
        .ok_or_else(|| Error::validation(format!("real place `{s}` is not compact, noncompact or su(a,b)")))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| Error::validation(format!("bad signature `{s}`")));
    Ok(RealData::Signature(num(inner.0)?, num(inner.1)?))
}

pub fn parse_duality(s: &str) -> Result<Option<DualityType>> {
    match s {
        "symplectic" => Ok(Some(DualityType::Symplectic)),
        "orthogonal" => Ok(Some(DualityType::Orthogonal)),
        "non-self-dual" | "nonselfdual" => Ok(Some(DualityType::NonSelfDual)),
        "any" => Ok(None),
        _ => Err(Error::validation(format!(
            "unknown duality `{s}`; expected symplectic, orthogonal, non-self-dual or any"
        ))),
    }
}

impl FactorDoc {
    pub fn to_descriptor(&self) -> Result<SimpleAdjointDescriptor> {
        let label = LieLabel::new(parse_family(&self.family)?, self.rank)?;
        let real = self.copies.iter().map(|s| parse_real(s)).collect::<Result<Vec<_>>>()?;
        let nu: BTreeSet<DiagramVertex> = self.nu.iter().map(|v| DiagramVertex::new(v[0], v[1])).collect();
        if nu.len() != self.nu.len() {
            return Err(Error::validation("marked vertices are listed twice"));
        }
        let generators = self
            .galois
            .iter()
            .map(|g| GaloisGenerator {
                copies: g.iter().map(|m| CopyMap { target: m.target, nodes: m.nodes.clone() }).collect(),
            })
            .collect();
        let galois = GaloisActionData { degree: real.len() as u32, generators };
        SimpleAdjointDescriptor::new(label, real, nu, &galois)
    }

    pub fn to_factor(&self) -> Result<FactorInput> {
        let desc = self.to_descriptor()?;
        let flags =
            self.flags.map(|f| D4Flags { absolutely_simple: f.absolutely_simple, pairwise_non_isomorphic: f.pairwise_non_isomorphic });
        match &self.profile {
            Some(p) => {
                let label = mtcomb_core::shimura_types::classify_simple_type(&desc);
                FactorInput::new(desc, label, Some(p.to_profile()?), flags)
            }
            None => FactorInput::from_descriptor(desc, flags),
        }
    }
}

impl MtQueryDoc {
    pub fn to_query(&self) -> Result<MtQuery> {
        let ratio_set = match &self.ratio_set {
            Some(v) => {
                let set = v.iter().map(|s| parse_frac(s)).collect::<Result<BTreeSet<_>>>()?;
                if set.len() != v.len() {
                    return Err(Error::validation("ratio_set lists a fraction twice"));
                }
                Some(set)
            }
            None => None,
        };
        let duality = match &self.duality {
            Some(d) => parse_duality(d)?,
            None => None,
        };
        Ok(MtQuery { target_dim: self.target_dim, ratio_set, duality, proper_only: self.proper_only })
    }
}
