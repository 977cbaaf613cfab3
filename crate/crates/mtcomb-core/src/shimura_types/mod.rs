//! Simple adjoint Shimura-pair descriptors and their combinatorial
//! invariants.
//!
//! A descriptor lists one Dynkin diagram per real embedding of the field of
//! definition, the real form on each copy, the marked special nodes `ν_X`
//! and a finite Galois action on the union of the diagrams. Everything here
//! depends only on that action.

pub mod group;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::lie_core::{Family, LieLabel, LieType};
use group::{closure, is_permutation, orbit_of_points, point_orbits, set_orbit, Perm};

pub use group::DEFAULT_GROUP_CAP;

/// A node of one copy of the Dynkin diagram. Nodes use Bourbaki numbering
/// starting at 1; copies start at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramVertex {
    pub copy: u32,
    pub node: u32,
}

impl DiagramVertex {
    pub fn new(copy: u32, node: u32) -> DiagramVertex {
        DiagramVertex { copy, node }
    }
}

impl fmt::Display for DiagramVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.copy, self.node)
    }
}

/// Real form on one copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealData {
    Compact,
    /// `SU(a,b)` with `a + b = n + 1`; type `A` only.
    Signature(u32, u32),
    /// Non-compact form of a non-`A` type.
    NonCompact,
}

/// Where one generator sends a diagram copy, and how it permutes its nodes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CopyMap {
    pub target: u32,
    /// `nodes[i - 1]` is the image of node `i`.
    pub nodes: Vec<u32>,
}

/// One generator of the Galois action, given copy by copy.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaloisGenerator {
    pub copies: Vec<CopyMap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisActionData {
    pub degree: u32,
    pub generators: Vec<GaloisGenerator>,
}

impl GaloisActionData {
    /// The trivial action on `degree` copies.
    pub fn trivial(degree: u32) -> GaloisActionData {
        GaloisActionData { degree, generators: Vec::new() }
    }
}

/// A validated descriptor. Labels given as low-rank aliases (`B_1`, `C_1`,
/// `B_2`, `D_3`) are converted to the canonical type, with node numbers and
/// real data translated accordingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleAdjointDescriptor {
    label: LieLabel,
    real_data: Vec<RealData>,
    nu_x: BTreeSet<DiagramVertex>,
    generators: Vec<Perm>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeKind {
    A,
    B,
    C,
    DH,
    DR,
    DMixed,
    E6,
    E7,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeLabel {
    pub kind: TypeKind,
    pub rank: u32,
}

impl TypeLabel {
    pub fn new(kind: TypeKind, rank: u32) -> Result<TypeLabel> {
        let ok = match kind {
            TypeKind::A | TypeKind::B | TypeKind::C => rank >= 1,
            TypeKind::DH | TypeKind::DR | TypeKind::DMixed => rank >= 4,
            TypeKind::E6 => rank == 6,
            TypeKind::E7 => rank == 7,
        };
        if !ok {
            return Err(Error::validation(format!("rank {rank} is not valid for label {kind:?}")));
        }
        Ok(TypeLabel { kind, rank })
    }

    pub fn is_d(&self) -> bool {
        matches!(self.kind, TypeKind::DH | TypeKind::DR | TypeKind::DMixed)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank;
        match self.kind {
            TypeKind::A => write!(f, "A_{n}"),
            TypeKind::B => write!(f, "B_{n}"),
            TypeKind::C => write!(f, "C_{n}"),
            TypeKind::DH => write!(f, "D_{n}^H"),
            TypeKind::DR => write!(f, "D_{n}^R"),
            TypeKind::DMixed => write!(f, "D_{n}^mixed"),
            TypeKind::E6 => write!(f, "E_6"),
            TypeKind::E7 => write!(f, "E_7"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub type_label: TypeLabel,
    pub with_involution: bool,
    pub inner: bool,
    pub reflex_degree: u64,
    pub compact_copies: u32,
}

/// Canonical type of a raw label; `D_1` and `D_2` are rejected.
pub fn normalize_lie_label(family: Family, rank: u32) -> Result<LieLabel> {
    LieLabel::new(family, rank)
}

/// Translates a node of a raw label into the canonical diagram.
fn canonical_node(label: &LieLabel, node: u32) -> u32 {
    match (label.raw_family, label.raw_rank) {
        (Family::B, 2) => 3 - node,
        (Family::D, 3) => match node {
            1 => 2,
            2 => 1,
            n => n,
        },
        _ => node,
    }
}

/// Whether `perm` (images of nodes `1..=n`) is an automorphism of the
/// canonical diagram of `lie`.
pub fn is_diagram_automorphism(lie: LieType, perm: &[u32]) -> bool {
    let n = lie.rank();
    if perm.len() != n as usize || perm.iter().any(|&x| x < 1 || x > n) {
        return false;
    }
    let id = (1..=n).all(|i| perm[i as usize - 1] == i);
    if id {
        return true;
    }
    match lie.family() {
        Family::A => n >= 2 && (1..=n).all(|i| perm[i as usize - 1] == n + 1 - i),
        Family::B | Family::C => false,
        Family::D if n == 4 => {
            perm[1] == 2 && {
                let mut outer = [perm[0], perm[2], perm[3]];
                outer.sort();
                outer == [1, 3, 4]
            }
        }
        Family::D => {
            (1..n - 1).all(|i| perm[i as usize - 1] == i) && perm[n as usize - 2] == n && perm[n as usize - 1] == n - 1
        }
    }
}

/// Nodes allowed in `ν_X`: any for `A` (further restricted by the
/// signature), node 1 for `B`, node `n` for `C`, extremal nodes for `D`.
fn special_node_allowed(lie: LieType, node: u32) -> bool {
    let n = lie.rank();
    match lie.family() {
        Family::A => true,
        Family::B => node == 1,
        Family::C => node == n,
        Family::D => node == 1 || node + 1 == n || node == n,
    }
}

/// Image of node `i` under the opposition involution `-w_0`.
pub fn opposition(lie: LieType, node: u32) -> u32 {
    let n = lie.rank();
    match lie.family() {
        Family::A => n + 1 - node,
        Family::D if n % 2 == 1 && node + 1 == n => n,
        Family::D if n % 2 == 1 && node == n => n - 1,
        _ => node,
    }
}

impl SimpleAdjointDescriptor {
    /// Validates and normalizes a descriptor. The degree is the number of
    /// entries of `real_data` and must equal `galois.degree`.
    pub fn new(
        label: LieLabel,
        real_data: Vec<RealData>,
        nu_x: BTreeSet<DiagramVertex>,
        galois: &GaloisActionData,
    ) -> Result<SimpleAdjointDescriptor> {
        let lie = label.canonical;
        let n = lie.rank();
        let d = real_data.len() as u32;
        if d == 0 {
            return Err(Error::validation("degree must be positive"));
        }
        if galois.degree != d {
            return Err(Error::validation(format!(
                "Galois data has degree {} but {} real places are given",
                galois.degree, d
            )));
        }
        let raw_n = label.raw_rank;
        let mut marks: Vec<Vec<u32>> = alloc::vec![Vec::new(); d as usize];
        for v in &nu_x {
            if v.copy >= d {
                return Err(Error::validation(format!("vertex {v} lies outside the {d} diagram copies")));
            }
            if v.node < 1 || v.node > raw_n {
                return Err(Error::validation(format!("vertex {v} has no node {} in rank {raw_n}", v.node)));
            }
            marks[v.copy as usize].push(canonical_node(&label, v.node));
        }
        if nu_x.is_empty() {
            return Err(Error::validation("the set of marked vertices is empty"));
        }
        let mut real = Vec::with_capacity(d as usize);
        for (i, rd) in real_data.iter().enumerate() {
            let m = &marks[i];
            match rd {
                RealData::Compact => {
                    if !m.is_empty() {
                        return Err(Error::validation(format!("compact copy {i} carries marked vertices")));
                    }
                    real.push(RealData::Compact);
                    continue;
                }
                _ if m.len() != 1 => {
                    return Err(Error::validation(format!(
                        "non-compact copy {i} must carry exactly one marked vertex, found {}",
                        m.len()
                    )));
                }
                _ => {}
            }
            let node = m[0];
            if !special_node_allowed(lie, node) {
                return Err(Error::validation(format!("node {node} of copy {i} is not a special node of {lie}")));
            }
            let entry = match (*rd, lie.family(), label.is_alias()) {
                (RealData::Signature(a, b), Family::A, false) => {
                    if a == 0 || b == 0 || a + b != n + 1 {
                        return Err(Error::validation(format!(
                            "signature ({a},{b}) of copy {i} must be positive with sum {}",
                            n + 1
                        )));
                    }
                    if node != a && node != b {
                        return Err(Error::validation(format!(
                            "copy {i} with signature ({a},{b}) must mark node {a} or {b}, not {node}"
                        )));
                    }
                    RealData::Signature(a, b)
                }
                (RealData::NonCompact, Family::A, true) => RealData::Signature(node, n + 1 - node),
                (RealData::NonCompact, f, _) if f != Family::A => RealData::NonCompact,
                (RealData::NonCompact, _, _) => {
                    return Err(Error::validation(format!("copy {i} of type A needs a signature")));
                }
                _ => {
                    return Err(Error::validation(format!("copy {i}: signatures are only allowed for type A")));
                }
            };
            real.push(entry);
        }
        let generators = galois
            .generators
            .iter()
            .enumerate()
            .map(|(k, g)| generator_perm(&label, d, g).map_err(|e| prefix(e, k)))
            .collect::<Result<Vec<_>>>()?;
        let nu: BTreeSet<DiagramVertex> =
            nu_x.iter().map(|v| DiagramVertex::new(v.copy, canonical_node(&label, v.node))).collect();
        let desc = SimpleAdjointDescriptor { label, real_data: real, nu_x: nu, generators };
        desc.check_transitive()?;
        Ok(desc)
    }

    /// Descriptor with the trivial Galois action.
    pub fn split(label: LieLabel, real_data: Vec<RealData>, nu_x: BTreeSet<DiagramVertex>) -> Result<Self> {
        let d = real_data.len() as u32;
        SimpleAdjointDescriptor::new(label, real_data, nu_x, &GaloisActionData::trivial(d))
    }

    fn check_transitive(&self) -> Result<()> {
        let n = self.rank() as usize;
        let orbits = point_orbits(&self.generators, self.vertex_count());
        let copies: BTreeSet<usize> = orbits
            .iter()
            .find(|o| o.contains(&0))
            .map(|o| o.iter().map(|&x| x as usize / n).collect())
            .unwrap_or_default();
        if copies.len() != self.degree() as usize {
            return Err(Error::validation("the Galois action is not transitive on the diagram copies"));
        }
        Ok(())
    }

    pub fn label(&self) -> LieLabel {
        self.label
    }

    pub fn lie(&self) -> LieType {
        self.label.canonical
    }

    pub fn rank(&self) -> u32 {
        self.lie().rank()
    }

    pub fn degree(&self) -> u32 {
        self.real_data.len() as u32
    }

    pub fn real_data(&self) -> &[RealData] {
        &self.real_data
    }

    /// Marked vertices in canonical node numbering.
    pub fn nu_x(&self) -> &BTreeSet<DiagramVertex> {
        &self.nu_x
    }

    pub fn compact_copies(&self) -> u32 {
        self.real_data.iter().filter(|r| **r == RealData::Compact).count() as u32
    }

    /// Signatures `(a,b)` with `a <= b` of the non-compact copies.
    pub fn signatures(&self) -> Vec<(u32, u32)> {
        self.real_data
            .iter()
            .filter_map(|r| match *r {
                RealData::Signature(a, b) => Some((a.min(b), a.max(b))),
                _ => None,
            })
            .collect()
    }

    /// Generators as permutations of the vertex indices
    /// `copy * rank + node - 1`.
    pub fn generator_perms(&self) -> &[Perm] {
        &self.generators
    }

    fn vertex_count(&self) -> usize {
        (self.degree() * self.rank()) as usize
    }

    fn index(&self, v: &DiagramVertex) -> u32 {
        v.copy * self.rank() + v.node - 1
    }

    fn vertex(&self, i: u32) -> DiagramVertex {
        DiagramVertex::new(i / self.rank(), i % self.rank() + 1)
    }

    fn nu_indices(&self) -> BTreeSet<u32> {
        self.nu_x.iter().map(|v| self.index(v)).collect()
    }

    /// The union of the Galois orbits of the marked vertices.
    pub fn nu_orbit(&self) -> BTreeSet<DiagramVertex> {
        orbit_of_points(&self.generators, self.vertex_count(), &self.nu_indices())
            .into_iter()
            .map(|i| self.vertex(i))
            .collect()
    }
}

fn prefix(e: Error, k: usize) -> Error {
    match e {
        Error::Validation(m) => Error::Validation(format!("generator {k}: {m}")),
        other => other,
    }
}

fn generator_perm(label: &LieLabel, d: u32, g: &GaloisGenerator) -> Result<Perm> {
    let lie = label.canonical;
    let n = lie.rank();
    if g.copies.len() != d as usize {
        return Err(Error::validation(format!("expected {d} copy maps, found {}", g.copies.len())));
    }
    let targets: Vec<u32> = g.copies.iter().map(|c| c.target).collect();
    if !is_permutation(&targets) {
        return Err(Error::validation("copy targets do not form a permutation"));
    }
    let mut perm = alloc::vec![0u32; (d * n) as usize];
    for (c, map) in g.copies.iter().enumerate() {
        if map.nodes.len() != label.raw_rank as usize || map.nodes.iter().any(|&x| x < 1 || x > n) {
            return Err(Error::validation(format!("copy {c}: node map must list images of nodes 1..={n}")));
        }
        let mut canon = alloc::vec![0u32; n as usize];
        for (i, &img) in map.nodes.iter().enumerate() {
            canon[canonical_node(label, i as u32 + 1) as usize - 1] = canonical_node(label, img);
        }
        if !is_diagram_automorphism(lie, &canon) {
            return Err(Error::validation(format!("copy {c}: node map {:?} is not a diagram automorphism", map.nodes)));
        }
        for (i, &img) in canon.iter().enumerate() {
            perm[c * n as usize + i] = map.target * n + img - 1;
        }
    }
    Ok(perm)
}

/// Type label from the Galois orbit of the marked vertices.
pub fn classify_simple_type(desc: &SimpleAdjointDescriptor) -> TypeLabel {
    let lie = desc.lie();
    let n = lie.rank();
    let kind = match lie.family() {
        Family::A => TypeKind::A,
        Family::B => TypeKind::B,
        Family::C => TypeKind::C,
        Family::D => {
            let orbit = desc.nu_orbit();
            let per_copy = |c: u32| -> Vec<u32> { orbit.iter().filter(|v| v.copy == c).map(|v| v.node).collect() };
            if n == 4 {
                let counts: BTreeSet<usize> = (0..desc.degree()).map(|c| per_copy(c).len()).collect();
                match counts.into_iter().collect::<Vec<_>>()[..] {
                    [1] => TypeKind::DR,
                    [2] => TypeKind::DH,
                    _ => TypeKind::DMixed,
                }
            } else if orbit.iter().all(|v| v.node == 1) {
                TypeKind::DR
            } else if orbit.iter().all(|v| v.node + 1 >= n) {
                TypeKind::DH
            } else {
                TypeKind::DMixed
            }
        }
    };
    TypeLabel { kind, rank: n }
}

/// Whether the opposition involution moves the set of marked vertices.
pub fn involution_status(desc: &SimpleAdjointDescriptor) -> bool {
    let lie = desc.lie();
    let moved: BTreeSet<DiagramVertex> =
        desc.nu_x.iter().map(|v| DiagramVertex::new(v.copy, opposition(lie, v.node))).collect();
    moved != desc.nu_x
}

/// Closed-form value of [`involution_status`].
pub fn involution_closed_form(desc: &SimpleAdjointDescriptor, label: TypeLabel) -> bool {
    let n = label.rank;
    match label.kind {
        TypeKind::A if n.is_multiple_of(2) => true,
        TypeKind::A => !desc.signatures().iter().all(|&(a, b)| a == b),
        TypeKind::DH | TypeKind::DMixed => n % 2 == 1,
        _ => false,
    }
}

/// Inner versus non-inner. For type `D` this counts the Galois orbits on
/// the extremal vertices of the whole diagram; inner means three orbits.
pub fn is_inner(desc: &SimpleAdjointDescriptor) -> bool {
    let lie = desc.lie();
    let n = lie.rank();
    match lie.family() {
        Family::A => n == 1,
        Family::B | Family::C => true,
        Family::D => {
            let extremal: BTreeSet<u32> = (0..desc.degree())
                .flat_map(|c| [1, n - 1, n].map(|node| desc.index(&DiagramVertex::new(c, node))))
                .collect();
            let orbits = point_orbits(&desc.generators, desc.vertex_count());
            orbits.iter().filter(|o| o.iter().any(|x| extremal.contains(x))).count() == 3
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReflexData {
    pub group_order: u64,
    pub stabilizer_order: u64,
    pub degree: u64,
}

/// Index of the setwise stabilizer of the marked vertices in the group
/// generated by the Galois data.
pub fn reflex_data(desc: &SimpleAdjointDescriptor, cap: usize) -> Result<ReflexData> {
    let elems = closure(&desc.generators, desc.vertex_count(), cap)?;
    let nu = desc.nu_indices();
    let stab = elems.iter().filter(|g| group::image_of_set(g, &nu) == nu).count() as u64;
    let order = elems.len() as u64;
    Ok(ReflexData { group_order: order, stabilizer_order: stab, degree: order / stab })
}

pub fn reflex_degree(desc: &SimpleAdjointDescriptor, cap: usize) -> Result<u64> {
    reflex_data(desc, cap).map(|r| r.degree)
}

/// Size of the orbit of the marked set, enumerated directly.
pub fn nu_set_orbit_size(desc: &SimpleAdjointDescriptor, cap: usize) -> Result<u64> {
    set_orbit(&desc.generators, &desc.nu_indices(), cap).map(|o| o.len() as u64)
}

pub fn classify(desc: &SimpleAdjointDescriptor, cap: usize) -> Result<ClassificationReport> {
    Ok(ClassificationReport {
        type_label: classify_simple_type(desc),
        with_involution: involution_status(desc),
        inner: is_inner(desc),
        reflex_degree: reflex_degree(desc, cap)?,
        compact_copies: desc.compact_copies(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PelFactorResult {
    pub label: TypeLabel,
    pub compact_copies: u32,
    pub ok: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PelReport {
    pub pel_adjoint: bool,
    pub factors: Vec<PelFactorResult>,
}

/// PEL-adjoint test: every factor is of type `A`, or of type `C`, `D^H` or
/// inner `D_4^R` with no compact copy.
pub fn is_pel_adjoint(factors: &[(SimpleAdjointDescriptor, TypeLabel)]) -> Result<PelReport> {
    let mut out = Vec::new();
    for (i, (desc, label)) in factors.iter().enumerate() {
        let actual = classify_simple_type(desc);
        if actual != *label {
            return Err(Error::validation(format!("factor {i}: label {label} does not match descriptor ({actual})")));
        }
        let compact = desc.compact_copies();
        let inner = is_inner(desc);
        let (ok, reason) = match label.kind {
            TypeKind::A => (true, String::from("type A")),
            TypeKind::C | TypeKind::DH if compact == 0 => (true, format!("{label} without compact factors")),
            TypeKind::DR if label.rank == 4 && inner && compact == 0 => {
                (true, String::from("inner D_4^R without compact factors"))
            }
            TypeKind::C | TypeKind::DH => (false, format!("{label} with {compact} compact factor(s)")),
            TypeKind::DR if label.rank == 4 && inner => {
                (false, format!("inner D_4^R with {compact} compact factor(s)"))
            }
            _ => (false, format!("type {label} is not allowed")),
        };
        out.push(PelFactorResult { label: *label, compact_copies: compact, ok, reason });
    }
    Ok(PelReport { pel_adjoint: out.iter().all(|f| f.ok), factors: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn lab(f: Family, n: u32) -> LieLabel {
        LieLabel::new(f, n).unwrap()
    }

    fn nu(v: &[(u32, u32)]) -> BTreeSet<DiagramVertex> {
        v.iter().map(|&(c, n)| DiagramVertex::new(c, n)).collect()
    }

    fn one_copy(f: Family, n: u32, node: u32, gens: &[&[u32]]) -> SimpleAdjointDescriptor {
        let rd = if f == Family::A { RealData::Signature(node, n + 1 - node) } else { RealData::NonCompact };
        let g = GaloisActionData {
            degree: 1,
            generators: gens.iter().map(|p| GaloisGenerator { copies: alloc::vec![CopyMap { target: 0, nodes: p.to_vec() }] }).collect(),
        };
        SimpleAdjointDescriptor::new(lab(f, n), alloc::vec![rd], nu(&[(0, node)]), &g).unwrap()
    }

    #[test]
    fn d5_real_and_hermitian() {
        let r = one_copy(Family::D, 5, 1, &[&[1, 2, 3, 5, 4]]);
        assert_eq!(classify_simple_type(&r).to_string(), "D_5^R");
        let h = one_copy(Family::D, 5, 4, &[]);
        assert_eq!(classify_simple_type(&h).to_string(), "D_5^H");
        assert!(involution_status(&h));
        assert!(!involution_status(&r));
    }

    #[test]
    fn d4_labels() {
        let r = one_copy(Family::D, 4, 3, &[]);
        assert_eq!(classify_simple_type(&r).kind, TypeKind::DR);
        assert!(is_inner(&r));
        let h = one_copy(Family::D, 4, 3, &[&[1, 2, 4, 3]]);
        assert_eq!(classify_simple_type(&h).kind, TypeKind::DH);
        assert!(!is_inner(&h));
        let m = one_copy(Family::D, 4, 1, &[&[3, 2, 4, 1]]);
        assert_eq!(classify_simple_type(&m).kind, TypeKind::DMixed);
    }

    #[test]
    fn involution_examples() {
        assert!(involution_status(&one_copy(Family::A, 4, 2, &[])));
        assert!(!involution_status(&one_copy(Family::A, 3, 2, &[])));
        assert!(!involution_status(&one_copy(Family::C, 5, 5, &[])));
    }

    #[test]
    fn reflex_examples() {
        assert_eq!(reflex_degree(&one_copy(Family::A, 2, 1, &[]), 100).unwrap(), 1);
        assert_eq!(reflex_degree(&one_copy(Family::A, 2, 1, &[&[2, 1]]), 100).unwrap(), 2);
        let swap = GaloisActionData {
            degree: 2,
            generators: alloc::vec![GaloisGenerator {
                copies: alloc::vec![CopyMap { target: 1, nodes: alloc::vec![1, 2] }, CopyMap { target: 0, nodes: alloc::vec![1, 2] }],
            }],
        };
        let d = SimpleAdjointDescriptor::new(
            lab(Family::C, 2),
            alloc::vec![RealData::NonCompact; 2],
            nu(&[(0, 2), (1, 2)]),
            &swap,
        )
        .unwrap();
        assert_eq!(reflex_data(&d, 100).unwrap(), ReflexData { group_order: 2, stabilizer_order: 2, degree: 1 });
        assert_eq!(nu_set_orbit_size(&d, 100).unwrap(), 1);
    }

    #[test]
    fn inner_forced_values() {
        assert!(!is_inner(&one_copy(Family::A, 5, 3, &[])));
        assert!(is_inner(&one_copy(Family::A, 1, 1, &[])));
        assert!(is_inner(&one_copy(Family::B, 3, 1, &[])));
    }

    #[test]
    fn pel_examples() {
        let a6 = SimpleAdjointDescriptor::new(
            lab(Family::A, 6),
            alloc::vec![RealData::Signature(2, 5), RealData::Compact],
            nu(&[(0, 2)]),
            &GaloisActionData {
                degree: 2,
                generators: alloc::vec![GaloisGenerator {
                    copies: alloc::vec![
                        CopyMap { target: 1, nodes: (1..=6).collect() },
                        CopyMap { target: 0, nodes: (1..=6).collect() }
                    ],
                }],
            },
        )
        .unwrap();
        let r = is_pel_adjoint(&[(a6.clone(), classify_simple_type(&a6))]).unwrap();
        assert!(r.pel_adjoint);
        let c3 = SimpleAdjointDescriptor::new(
            lab(Family::C, 3),
            alloc::vec![RealData::NonCompact, RealData::Compact],
            nu(&[(0, 3)]),
            &GaloisActionData {
                degree: 2,
                generators: alloc::vec![GaloisGenerator {
                    copies: alloc::vec![
                        CopyMap { target: 1, nodes: alloc::vec![1, 2, 3] },
                        CopyMap { target: 0, nodes: alloc::vec![1, 2, 3] }
                    ],
                }],
            },
        )
        .unwrap();
        assert!(!is_pel_adjoint(&[(c3.clone(), classify_simple_type(&c3))]).unwrap().pel_adjoint);
        let d4 = one_copy(Family::D, 4, 1, &[]);
        assert!(is_pel_adjoint(&[(d4.clone(), classify_simple_type(&d4))]).unwrap().pel_adjoint);
        assert!(is_pel_adjoint(&[(d4, TypeLabel { kind: TypeKind::DH, rank: 4 })]).is_err());
    }

    #[test]
    fn aliases() {
        assert_eq!(normalize_lie_label(Family::B, 2).unwrap().canonical, LieType::new(Family::C, 2).unwrap());
        assert!(normalize_lie_label(Family::D, 2).is_err());
        let d3 = SimpleAdjointDescriptor::split(lab(Family::D, 3), alloc::vec![RealData::NonCompact], nu(&[(0, 1)])).unwrap();
        assert_eq!(d3.signatures(), [(2, 2)]);
        assert_eq!(classify_simple_type(&d3).to_string(), "A_3");
        let d3h = SimpleAdjointDescriptor::split(lab(Family::D, 3), alloc::vec![RealData::NonCompact], nu(&[(0, 3)])).unwrap();
        assert_eq!(d3h.signatures(), [(1, 3)]);
        let b2 = SimpleAdjointDescriptor::split(lab(Family::B, 2), alloc::vec![RealData::NonCompact], nu(&[(0, 1)])).unwrap();
        assert_eq!(b2.nu_x(), &nu(&[(0, 2)]));
    }

    #[test]
    fn validation_errors() {
        let l = lab(Family::C, 3);
        let bad_node = SimpleAdjointDescriptor::split(l, alloc::vec![RealData::NonCompact], nu(&[(0, 1)]));
        assert!(bad_node.is_err());
        let compact_mark =
            SimpleAdjointDescriptor::split(l, alloc::vec![RealData::Compact, RealData::NonCompact], nu(&[(0, 3), (1, 3)]));
        assert!(compact_mark.is_err());
        let not_transitive = SimpleAdjointDescriptor::split(
            l,
            alloc::vec![RealData::NonCompact, RealData::NonCompact],
            nu(&[(0, 3), (1, 3)]),
        );
        assert!(not_transitive.is_err());
        let sig = SimpleAdjointDescriptor::split(lab(Family::A, 4), alloc::vec![RealData::Signature(2, 3)], nu(&[(0, 1)]));
        assert!(sig.is_err());
        let bad_aut = GaloisActionData {
            degree: 1,
            generators: alloc::vec![GaloisGenerator { copies: alloc::vec![CopyMap { target: 0, nodes: alloc::vec![2, 1, 3] }] }],
        };
        assert!(SimpleAdjointDescriptor::new(l, alloc::vec![RealData::NonCompact], nu(&[(0, 3)]), &bad_aut).is_err());
        assert!(SimpleAdjointDescriptor::split(l, alloc::vec![RealData::NonCompact], BTreeSet::new()).is_err());
    }

    #[test]
    fn automorphisms() {
        let d4 = LieType::new(Family::D, 4).unwrap();
        assert!(is_diagram_automorphism(d4, &[3, 2, 4, 1]));
        assert!(!is_diagram_automorphism(d4, &[2, 1, 3, 4]));
        let a1 = LieType::a(1);
        assert!(is_diagram_automorphism(a1, &[1]));
        let d6 = LieType::new(Family::D, 6).unwrap();
        assert!(is_diagram_automorphism(d6, &[1, 2, 3, 4, 6, 5]));
        assert!(!is_diagram_automorphism(d6, &[6, 2, 3, 4, 5, 1]));
    }
}
