//! Plain-text presentation files.
//!
//! ```text
//! # comment
//! name: O_q(SL_2)
//! field: Q(q)
//! family: quantum-sl 2
//! generators: X11 X12 X21 X22
//! certificate: 6
//! defining:
//!   X12*X11 - 1/q*X11*X12
//! rules:
//!   X12*X11 -> 1/q*X11*X12
//! coproduct:
//!   X11 -> X11 @ X11 ; X12 @ X21
//! counit:
//!   X11 -> 1
//! antipode:
//!   X11 -> X22
//! antipode-inverse:
//!   X11 -> X22
//! ```
//!
//! Group algebras replace `generators`, `certificate`, `defining` and `rules`
//! by a `group:` header, a `blocks:` line of `start-end` ranges, and a `conj:`
//! section with one line `xj xi -> e_1 … e_n | f_1 … f_n` per pair i < j giving
//! the exponent vectors of x_j x_i x_j⁻¹ and x_j⁻¹ x_i x_j. Enveloping algebras
//! carry a `brackets:` section with lines `xi xj -> Σ c·xk`.

use std::fmt::Write as _;

use super::algebra::{Algebra, GroupAlgebra};
use super::group::PolycyclicGroup;
use super::presentation::{Family, HopfPresentation};
use super::HopfError;
use crate::exact::{FieldTag, Scalar};
use crate::rewrite::{parse_poly, NCPoly, RewriteRule, RewriteSystem, Word};

fn err<T>(m: impl Into<String>) -> Result<T, HopfError> {
    Err(HopfError::Format(m.into()))
}

fn family_line(f: &Family) -> String {
    match f {
        Family::QuantumSl { n } => format!("quantum-sl {n}"),
        Family::QuantumMatrices { n } => format!("quantum-matrices {n}"),
        Family::Enveloping { .. } => "enveloping".into(),
        Family::Group => "group".into(),
        Family::UqSl2 => "uq-sl2".into(),
        Family::Custom => "custom".into(),
    }
}

fn exps(e: &[i64]) -> String {
    e.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn write_presentation(h: &HopfPresentation) -> String {
    let names = h.names();
    let mut s = String::new();
    writeln!(s, "name: {}", h.name).unwrap();
    writeln!(s, "field: {}", h.field.name()).unwrap();
    writeln!(s, "family: {}", family_line(&h.family)).unwrap();
    match &h.algebra {
        Algebra::Rules(sys) => {
            writeln!(s, "generators: {}", names.join(" ")).unwrap();
            writeln!(s, "certificate: {}", sys.certificate()).unwrap();
            s.push_str("defining:\n");
            for r in sys.defining_relations() {
                writeln!(s, "  {}", r.fmt_with(names)).unwrap();
            }
            s.push_str("rules:\n");
            for r in sys.rules() {
                writeln!(s, "  {} -> {}", r.lhs.fmt_with(names), r.rhs.fmt_with(names)).unwrap();
            }
        }
        Algebra::Group(ga) => {
            let g = ga.group();
            writeln!(s, "group: {}", g.name).unwrap();
            writeln!(s, "group-generators: {}", g.gen_names.join(" ")).unwrap();
            let blocks: Vec<String> = g.blocks().iter().map(|(a, b)| format!("{a}-{b}")).collect();
            writeln!(s, "blocks: {}", blocks.join(" ")).unwrap();
            s.push_str("conj:\n");
            let (c, ci) = g.conj_table();
            for j in 0..g.rank() {
                for i in 0..j {
                    writeln!(s, "  {} {} -> {} | {}", g.gen_names[j], g.gen_names[i], exps(&c[j][i]), exps(&ci[j][i])).unwrap();
                }
            }
        }
    }
    if let Family::Enveloping { structure } = &h.family {
        s.push_str("brackets:\n");
        for i in 0..structure.len() {
            for j in i + 1..structure.len() {
                let p = NCPoly::from_terms(structure[i][j].iter().enumerate().map(|(k, c)| (Word::gen(k), c.clone())));
                if !p.is_zero() {
                    writeln!(s, "  {} {} -> {}", names[i], names[j], p.fmt_with(names)).unwrap();
                }
            }
        }
    }
    s.push_str("coproduct:\n");
    for (g, pairs) in h.coproduct.iter().enumerate() {
        let parts: Vec<String> = pairs.iter().map(|(a, b)| format!("{} @ {}", a.fmt_with(names), b.fmt_with(names))).collect();
        writeln!(s, "  {} -> {}", names[g], parts.join(" ; ")).unwrap();
    }
    s.push_str("counit:\n");
    for (g, c) in h.counit.iter().enumerate() {
        writeln!(s, "  {} -> {}", names[g], c).unwrap();
    }
    for (title, imgs) in [("antipode", &h.antipode), ("antipode-inverse", &h.antipode_inv)] {
        if let Some(imgs) = imgs {
            writeln!(s, "{title}:").unwrap();
            for (g, p) in imgs.iter().enumerate() {
                writeln!(s, "  {} -> {}", names[g], p.fmt_with(names)).unwrap();
            }
        }
    }
    s
}

/// Header lines and indented sections, in file order.
struct Doc {
    headers: Vec<(String, String)>,
    sections: Vec<(String, Vec<String>)>,
}

impl Doc {
    fn parse(text: &str) -> Result<Doc, HopfError> {
        let mut doc = Doc { headers: Vec::new(), sections: Vec::new() };
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap();
            if line.trim().is_empty() {
                continue;
            }
            if line.starts_with(char::is_whitespace) {
                match doc.sections.last_mut() {
                    Some((_, body)) => body.push(line.trim().to_string()),
                    None => return err(format!("line {}: indented line outside a section", n + 1)),
                }
                continue;
            }
            let Some((k, v)) = line.split_once(':') else {
                return err(format!("line {}: expected `key: value`", n + 1));
            };
            let (k, v) = (k.trim().to_string(), v.trim().to_string());
            if v.is_empty() {
                doc.sections.push((k, Vec::new()));
            } else {
                doc.headers.push((k, v));
            }
        }
        Ok(doc)
    }

    fn header(&self, k: &str) -> Option<&str> {
        self.headers.iter().find(|(a, _)| a == k).map(|(_, v)| v.as_str())
    }

    fn need(&self, k: &str) -> Result<&str, HopfError> {
        self.header(k).map_or_else(|| err(format!("missing `{k}:`")), Ok)
    }

    fn section(&self, k: &str) -> Option<&[String]> {
        self.sections.iter().find(|(a, _)| a == k).map(|(_, v)| v.as_slice())
    }
}

fn split_arrow(line: &str) -> Result<(&str, &str), HopfError> {
    line.split_once("->").map(|(a, b)| (a.trim(), b.trim())).map_or_else(|| err(format!("expected `->` in `{line}`")), Ok)
}

fn poly(s: &str, names: &[String], tag: FieldTag) -> Result<NCPoly, HopfError> {
    parse_poly(s, names, tag).map_err(|e| HopfError::Format(format!("{e} in `{s}`")))
}

fn word(s: &str, names: &[String], tag: FieldTag) -> Result<Word, HopfError> {
    let p = poly(s, names, tag)?;
    match p.leading() {
        Some((w, c)) if p.len() == 1 && c.is_one() => Ok(w.clone()),
        _ => err(format!("`{s}` is not a monomial")),
    }
}

fn gen_of(s: &str, names: &[String]) -> Result<usize, HopfError> {
    names.iter().position(|n| n == s).map_or_else(|| err(format!("unknown generator `{s}`")), Ok)
}

/// Per-generator `g -> value` lines, every generator exactly once.
fn per_gen<T>(body: &[String], names: &[String], mut f: impl FnMut(&str) -> Result<T, HopfError>) -> Result<Vec<T>, HopfError> {
    let mut out: Vec<Option<T>> = names.iter().map(|_| None).collect();
    for line in body {
        let (g, v) = split_arrow(line)?;
        let i = gen_of(g, names)?;
        if out[i].is_some() {
            return err(format!("generator `{g}` listed twice"));
        }
        out[i] = Some(f(v)?);
    }
    out.into_iter().enumerate().map(|(i, v)| v.map_or_else(|| err(format!("no entry for `{}`", names[i])), Ok)).collect()
}

fn ints(s: &str) -> Result<Vec<i64>, HopfError> {
    s.split_whitespace().map(|t| t.parse().map_err(|_| HopfError::Format(format!("bad integer `{t}`")))).collect()
}

fn parse_group(doc: &Doc) -> Result<PolycyclicGroup, HopfError> {
    let gnames: Vec<String> = doc.need("group-generators")?.split_whitespace().map(String::from).collect();
    let n = gnames.len();
    let mut blocks = Vec::new();
    for b in doc.need("blocks")?.split_whitespace() {
        let r = b.split_once('-').and_then(|(a, c)| Some((a.parse().ok()?, c.parse().ok()?)));
        blocks.push(r.map_or_else(|| err(format!("bad block `{b}`")), Ok)?);
    }
    let mut conj: Vec<Vec<Vec<i64>>> = (0..n).map(|j| vec![Vec::new(); j]).collect();
    let mut conj_inv = conj.clone();
    for line in doc.section("conj").unwrap_or(&[]) {
        let (pair, v) = split_arrow(line)?;
        let p: Vec<&str> = pair.split_whitespace().collect();
        let [xj, xi] = p[..] else { return err(format!("bad conjugation line `{line}`")) };
        let (j, i) = (gen_of(xj, &gnames)?, gen_of(xi, &gnames)?);
        if i >= j {
            return err(format!("conjugation lines need the later generator first: `{line}`"));
        }
        let Some((a, b)) = v.split_once('|') else { return err(format!("expected `|` in `{line}`")) };
        conj[j][i] = ints(a)?;
        conj_inv[j][i] = ints(b)?;
    }
    PolycyclicGroup::new(doc.need("group")?, gnames, conj, conj_inv, blocks)
}

pub fn parse_presentation(text: &str) -> Result<HopfPresentation, HopfError> {
    let doc = Doc::parse(text)?;
    let name = doc.need("name")?.to_string();
    let field = FieldTag::parse(doc.need("field")?).map_err(|e| HopfError::Format(e.to_string()))?;
    let fam: Vec<&str> = doc.need("family")?.split_whitespace().collect();
    let size = |v: Option<&&str>| v.and_then(|s| s.parse::<usize>().ok()).map_or_else(|| err("family needs a size"), Ok);

    let algebra = if doc.header("group").is_some() {
        Algebra::Group(GroupAlgebra::new(parse_group(&doc)?))
    } else {
        let names: Vec<String> = doc.need("generators")?.split_whitespace().map(String::from).collect();
        let cert: usize = doc.need("certificate")?.parse().map_err(|_| HopfError::Format("bad certificate".into()))?;
        let defining = doc.section("defining").unwrap_or(&[]).iter().map(|l| poly(l, &names, field)).collect::<Result<Vec<_>, _>>()?;
        let mut rules = Vec::new();
        for line in doc.section("rules").unwrap_or(&[]) {
            let (l, r) = split_arrow(line)?;
            rules.push(RewriteRule::new(word(l, &names, field)?, poly(r, &names, field)?));
        }
        Algebra::Rules(RewriteSystem::from_parts(names, rules, defining, cert)?)
    };
    let names = algebra.names().to_vec();

    let family = match fam.first().copied() {
        Some("quantum-sl") => Family::QuantumSl { n: size(fam.get(1))? },
        Some("quantum-matrices") => Family::QuantumMatrices { n: size(fam.get(1))? },
        Some("group") => Family::Group,
        Some("uq-sl2") => Family::UqSl2,
        Some("custom") => Family::Custom,
        Some("enveloping") => {
            let d = names.len();
            let mut c = vec![vec![vec![Scalar::zero(); d]; d]; d];
            for line in doc.section("brackets").unwrap_or(&[]) {
                let (pair, v) = split_arrow(line)?;
                let p: Vec<&str> = pair.split_whitespace().collect();
                let [a, b] = p[..] else { return err(format!("bad bracket line `{line}`")) };
                let (i, j) = (gen_of(a, &names)?, gen_of(b, &names)?);
                for (w, coef) in poly(v, &names, field)?.terms() {
                    let [k] = w.letters()[..] else { return err(format!("bracket `{line}` is not linear")) };
                    c[i][j][k as usize] = coef.clone();
                    c[j][i][k as usize] = -coef;
                }
            }
            super::builders::check_jacobi(&c)?;
            Family::Enveloping { structure: c }
        }
        other => return err(format!("unknown family {other:?}")),
    };

    let coproduct = per_gen(doc.section("coproduct").unwrap_or(&[]), &names, |v| {
        v.split(';')
            .map(|pair| {
                let Some((a, b)) = pair.split_once('@') else { return err(format!("expected `a @ b` in `{pair}`")) };
                Ok((poly(a.trim(), &names, field)?, poly(b.trim(), &names, field)?))
            })
            .collect()
    })?;
    let counit = per_gen(doc.section("counit").unwrap_or(&[]), &names, |v| {
        Scalar::parse(v, field).map_err(|e| HopfError::Format(format!("{e} in `{v}`")))
    })?;
    let images = |k: &str| doc.section(k).map(|b| per_gen(b, &names, |v| poly(v, &names, field))).transpose();
    let antipode = images("antipode")?;
    let antipode_inv = images("antipode-inverse")?;
    Ok(HopfPresentation { name, field, algebra, coproduct, counit, antipode, antipode_inv, family })
}
