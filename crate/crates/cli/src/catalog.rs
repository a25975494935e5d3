//! Named algebras the CLI can build, plus loading from files.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use hopfwind::fd::{self, FDHopf};
use hopfwind::hopf::builders::{enveloping, group_algebra, laurent, quantum_matrices, quantum_sl, structure_from_brackets, uq_sl2};
use hopfwind::hopf::{parse_presentation, HopfPresentation, PolycyclicGroup};
use hopfwind::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    Fd,
    Quantum,
    Enveloping,
    Group,
    Laurent,
}

impl FamilyTag {
    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Fd => "fd",
            FamilyTag::Quantum => "quantum",
            FamilyTag::Enveloping => "enveloping",
            FamilyTag::Group => "group",
            FamilyTag::Laurent => "laurent",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub family: FamilyTag,
    pub params: String,
    /// Rewriting certificate degree the entry is known to pass axioms at.
    pub degree_bound: usize,
}

pub enum Built {
    Presented(HopfPresentation),
    Fd(FDHopf),
}

impl Built {
    pub fn display_name(&self) -> &str {
        match self {
            Built::Presented(h) => &h.name,
            Built::Fd(h) => &h.name,
        }
    }
}

fn entry(name: &str, family: FamilyTag, params: &str, degree_bound: usize) -> CatalogEntry {
    CatalogEntry { name: name.into(), family, params: params.into(), degree_bound }
}

pub fn entries() -> Vec<CatalogEntry> {
    use FamilyTag::*;
    let mut v = vec![
        entry("oq-sl-2", Quantum, "O_q(SL_2) over Q(q)", 6),
        entry("oq-sl-3", Quantum, "O_q(SL_3) over Q(q)", 6),
        entry("oq-m-2", Quantum, "O_q(M_2) bialgebra over Q(q)", 6),
        entry("uq-sl-2", Quantum, "U_q(sl_2) over Q(q)", 6),
        entry("u-abelian-1", Enveloping, "U(k), dim 1", 6),
        entry("u-abelian-2", Enveloping, "U(k^2), dim 2", 6),
        entry("u-abelian-3", Enveloping, "U(k^3), dim 3", 6),
        entry("u-solvable-2", Enveloping, "[x,y] = x", 6),
        entry("u-solvable-3", Enveloping, "[z,x] = x, [z,y] = 2y", 6),
        entry("u-heisenberg-3", Enveloping, "[x,y] = z", 6),
        entry("u-sl-2", Enveloping, "[e,f] = h, [h,e] = 2e, [h,f] = -2f", 6),
        entry("laurent-1", Laurent, "kZ", 6),
        entry("laurent-2", Laurent, "kZ^2", 6),
        entry("laurent-3", Laurent, "kZ^3", 6),
        entry("klein-bottle-group", Group, "Z x| Z, t x t^-1 = x^-1", 6),
        entry("heisenberg-group", Group, "y x y^-1 = x z, z central", 6),
    ];
    for n in fd::catalog_names() {
        let params = fd::by_name(&n).map(|h| format!("dimension {}", h.dim())).unwrap_or_default();
        v.push(entry(&n, Fd, &params, 0));
    }
    v
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

fn lie(name: &str, gens: &[&str], brackets: &[(usize, usize, Vec<(usize, i64)>)], bound: usize) -> Result<HopfPresentation> {
    let b: Vec<_> = brackets.iter().map(|(i, j, t)| (*i, *j, t.iter().map(|&(k, c)| (k, Scalar::int(c))).collect())).collect();
    let c = structure_from_brackets(gens.len(), &b);
    Ok(enveloping(name, gens.iter().map(|s| s.to_string()).collect(), c, bound)?)
}

/// Builds a catalog entry; `degree_bound` overrides the entry's recommendation.
pub fn build(e: &CatalogEntry, degree_bound: Option<usize>) -> Result<Built> {
    let bound = degree_bound.unwrap_or(e.degree_bound);
    let q = Scalar::q();
    let named = |mut h: HopfPresentation| {
        h.name = e.name.clone();
        Built::Presented(h)
    };
    Ok(match e.name.as_str() {
        "oq-sl-2" => named(quantum_sl(2, &q, bound)?),
        "oq-sl-3" => named(quantum_sl(3, &q, bound)?),
        "oq-m-2" => named(quantum_matrices(2, &q, bound)?),
        "uq-sl-2" => named(uq_sl2(&q, bound)?),
        "u-abelian-1" => named(lie("u-abelian-1", &["x"], &[], bound)?),
        "u-abelian-2" => named(lie("u-abelian-2", &["x", "y"], &[], bound)?),
        "u-abelian-3" => named(lie("u-abelian-3", &["x", "y", "z"], &[], bound)?),
        "u-solvable-2" => named(lie("u-solvable-2", &["x", "y"], &[(0, 1, vec![(0, 1)])], bound)?),
        "u-solvable-3" => named(lie("u-solvable-3", &["x", "y", "z"], &[(0, 2, vec![(0, -1)]), (1, 2, vec![(1, -2)])], bound)?),
        "u-heisenberg-3" => named(lie("u-heisenberg-3", &["x", "y", "z"], &[(0, 1, vec![(2, 1)])], bound)?),
        "u-sl-2" => named(lie("u-sl-2", &["e", "f", "h"], &[(0, 1, vec![(2, 1)]), (0, 2, vec![(0, -2)]), (1, 2, vec![(1, 2)])], bound)?),
        "laurent-1" => named(laurent(1)),
        "laurent-2" => named(laurent(2)),
        "laurent-3" => named(laurent(3)),
        "klein-bottle-group" => named(group_algebra(PolycyclicGroup::klein_bottle())),
        "heisenberg-group" => named(group_algebra(PolycyclicGroup::heisenberg())),
        other => Built::Fd(fd::by_name(other).ok_or_else(|| anyhow!("unknown catalog entry {other}"))?),
    })
}

/// A catalog name, or a path to a presentation (`.hopf`) or structure-tensor (`.fd`) file.
pub fn resolve(name: &str, degree_bound: Option<usize>) -> Result<(CatalogEntry, Built)> {
    if let Some(e) = find(name) {
        let b = build(&e, degree_bound)?;
        return Ok((e, b));
    }
    let path = Path::new(name);
    if !path.exists() {
        bail!("unknown algebra `{name}`; run `hopfwind catalog` for the list");
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {name}"))?;
    let file_entry = |family, h_name: &str, bound| CatalogEntry { name: h_name.to_string(), family, params: format!("file {name}"), degree_bound: bound };
    if path.extension().is_some_and(|x| x == "fd") {
        let h = fd::parse_fd(&text)?;
        return Ok((file_entry(FamilyTag::Fd, &h.name.clone(), 0), Built::Fd(h)));
    }
    let h = parse_presentation(&text)?;
    let family = match h.family {
        hopfwind::hopf::Family::Enveloping { .. } => FamilyTag::Enveloping,
        hopfwind::hopf::Family::Group => FamilyTag::Group,
        _ => FamilyTag::Quantum,
    };
    let bound = h.algebra.certificate();
    Ok((file_entry(family, &h.name.clone(), bound), Built::Presented(h)))
}
