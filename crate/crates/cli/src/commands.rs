//! One function per subcommand, each producing a [`Report`].

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use hopfwind::descent::{adjoint_trace, descend, nakayama_presented, xi_of, DescentTrace};
use hopfwind::exact::Matrix;
use hopfwind::fd::structure::{
    adjoint_tensor_check, equal_up_to_inner, integral_order, modular_character, nakayama, nakayama_order, radford_s4_check, xi, UnitSearch,
};
use hopfwind::fd::FDHopf;
use hopfwind::homology::{
    duality_check, fd_adjoint_tor, fd_duality_check, fd_hochschild_cohomology, fd_hochschild_homology, homological_integral, hochschild_cohomology,
    hochschild_homology, resolution_for, FdTwist, TruncatedDims, TwistSpec,
};
use hopfwind::hopf::builders::quantum_sl_chain;
use hopfwind::hopf::{s_squared, verify_hopf_axioms, AlgebraMap, Character, Family, HopfPresentation};
use hopfwind::rewrite::parse_poly;
use hopfwind::Scalar;

use crate::catalog::{Built, CatalogEntry};
use crate::report::{self, Params, Report, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Descent,
    Homology,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Descent => "descent",
            Method::Homology => "homology",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    Identity,
    Nakayama,
    File(String),
}

impl Twist {
    pub fn parse(s: &str) -> Twist {
        match s {
            "identity" => Twist::Identity,
            "nakayama" => Twist::Nakayama,
            path => Twist::File(path.to_string()),
        }
    }

    fn name(&self) -> String {
        match self {
            Twist::Identity => "identity".into(),
            Twist::Nakayama => "nakayama".into(),
            Twist::File(p) => format!("file:{p}"),
        }
    }
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct Settings {
    pub degree_bound: Option<usize>,
    pub truncate: usize,
    pub window: usize,
    pub seed: u64,
}

impl Settings {
    fn params(&self, e: &CatalogEntry, method: Option<Method>, twist: Option<&Twist>) -> Params {
        Params {
            degree_bound: self.degree_bound.unwrap_or(e.degree_bound),
            truncate: self.truncate,
            window: self.window,
            seed: self.seed,
            method: method.map(|m| m.name().to_string()),
            twist: twist.map(Twist::name),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Command {
    Axioms,
    Integral(Method),
    Nakayama,
    Radford,
    Hochschild(Twist),
    Duality,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Axioms => "axioms",
            Command::Integral(_) => "integral",
            Command::Nakayama => "nakayama",
            Command::Radford => "radford",
            Command::Hochschild(_) => "hochschild",
            Command::Duality => "duality",
        }
    }
}

pub fn run(cmd: &Command, entry: &CatalogEntry, built: &Built, s: &Settings) -> Result<Report> {
    let field = match built {
        Built::Presented(h) => h.field.to_string(),
        Built::Fd(h) => h.field().to_string(),
    };
    let (method, twist) = match cmd {
        Command::Integral(m) => (Some(*m), None),
        Command::Hochschild(t) => (None, Some(t)),
        _ => (None, None),
    };
    let mut r = Report::new(entry, field, cmd.name(), s.params(entry, method, twist));
    match (cmd, built) {
        (Command::Axioms, Built::Presented(h)) => axioms(&mut r, h, s.degree_bound.unwrap_or(entry.degree_bound)),
        (Command::Axioms, Built::Fd(h)) => fd_axioms(&mut r, h),
        (Command::Integral(m), Built::Presented(h)) => integral(&mut r, h, *m, s)?,
        (Command::Integral(m), Built::Fd(h)) => fd_integral(&mut r, h, *m)?,
        (Command::Nakayama, Built::Presented(h)) => nakayama_cmd(&mut r, h, s)?,
        (Command::Nakayama, Built::Fd(h)) => fd_nakayama(&mut r, h, s)?,
        (Command::Radford, Built::Fd(h)) => radford(&mut r, h)?,
        (Command::Radford, Built::Presented(_)) => bail!("radford needs a finite-dimensional entry"),
        (Command::Hochschild(t), Built::Presented(h)) => hochschild(&mut r, h, t, s)?,
        (Command::Hochschild(t), Built::Fd(h)) => fd_hochschild(&mut r, h, t, s)?,
        (Command::Duality, Built::Presented(h)) => duality(&mut r, h, s)?,
        (Command::Duality, Built::Fd(h)) => fd_duality(&mut r, h)?,
    }
    Ok(r)
}

fn axioms(r: &mut Report, h: &HopfPresentation, bound: usize) {
    let rep = verify_hopf_axioms(h, bound);
    r.result("checks", json!(rep.checks.len()));
    r.result(
        "failures",
        Value::Array(rep.failures().iter().map(|c| json!({"axiom": c.axiom, "location": c.location, "residue": c.residue})).collect()),
    );
    r.certificate("degree", json!(rep.degree));
    let first = rep.failures().first().map(|c| (c.axiom.clone(), c.location.clone(), c.residue.clone()));
    let mut v = Verdict::new("hopf axioms", rep.passed());
    if let Some((axiom, loc, residue)) = first {
        v = v.at(loc).detail(format!("{axiom}: residue {}", residue.unwrap_or_default()));
    }
    r.verdict(v);
}

fn fd_axioms(r: &mut Report, h: &FDHopf) {
    r.result("dimension", json!(h.dim()));
    match h.check() {
        Ok(()) => r.verdict(Verdict::new("hopf axioms", true)),
        Err(e) => r.verdict(Verdict::new("hopf axioms", false).detail(e.to_string())),
    }
}

fn trace_json(h: &HopfPresentation, t: &DescentTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|st| {
            json!({
                "element": h.fmt(&st.element),
                "tau": report::scalars(&st.tau),
                "nonzerodivisor_degree": st.certificate,
            })
        })
        .collect();
    json!({"steps": steps, "base": t.base.name(), "surviving": t.surviving.iter().map(|&g| h.names()[g].clone()).collect::<Vec<_>>()})
}

/// π₀ by descent where a chain is known, otherwise by the family's closed form.
fn closed_form(h: &HopfPresentation) -> Result<(Character, String, Option<DescentTrace>)> {
    match &h.family {
        Family::QuantumSl { n } => {
            let (c, t) = descend(h, &quantum_sl_chain(*n))?;
            Ok((c, "descent".into(), Some(t)))
        }
        Family::Enveloping { structure } => {
            let d = structure.len();
            let values = (0..d).map(|i| (0..d).fold(Scalar::zero(), |acc, j| acc + &structure[i][j][j])).collect();
            Ok((Character::new(h, values)?, "trace of ad".into(), None))
        }
        Family::Group => {
            let c = adjoint_trace(h).ok_or_else(|| anyhow!("not a group algebra"))?;
            Ok((Character::new(h, c.values)?, "adjoint trace".into(), None))
        }
        other => bail!("no descent chain or closed form for the {other:?} family"),
    }
}

fn homology_integral(h: &HopfPresentation, s: &Settings) -> Result<(Character, TruncatedDims, String)> {
    let res = resolution_for(h)?;
    let ir = homological_integral(h, &res, s.truncate, s.window)?;
    Ok((ir.character, ir.ext, res.kind.name().to_string()))
}

fn integral(r: &mut Report, h: &HopfPresentation, m: Method, s: &Settings) -> Result<()> {
    let mut found: Vec<Character> = Vec::new();
    if matches!(m, Method::Descent | Method::Both) {
        let (c, how, trace) = closed_form(h)?;
        r.result("descent", report::character(h, &c));
        r.certificate("descent_method", json!(how));
        if let Some(t) = trace {
            r.certificate("descent_trace", trace_json(h, &t));
        }
        r.verdict(Verdict::new("descent character respects relations", true));
        found.push(c);
    }
    if matches!(m, Method::Homology | Method::Both) {
        let (c, ext, kind) = homology_integral(h, s)?;
        r.result("homology", report::character(h, &c));
        r.result("ext", report::dims(&ext));
        r.certificate("resolution", json!(kind));
        r.certificate("ext", report::dims_certificate(&ext));
        r.verdict(Verdict::new("Ext certified in every degree", ext.all_certified()));
        let d = ext.degrees() - 1;
        r.verdict(Verdict::new("top Ext one-dimensional", ext.value(d) == 1 && (0..d).all(|i| ext.value(i) == 0)));
        found.push(c);
    }
    if let [a, b] = &found[..] {
        let disagree = (0..h.ngens()).find(|&g| a.values[g] != b.values[g]);
        let mut v = Verdict::new("descent and homology agree", disagree.is_none());
        if let Some(g) = disagree {
            v = v.at(h.names()[g].clone());
        }
        r.verdict(v);
    }
    Ok(())
}

fn fd_integral(r: &mut Report, h: &FDHopf, m: Method) -> Result<()> {
    if m != Method::Descent {
        bail!("finite-dimensional entries compute π₀ directly; use --method descent");
    }
    let pi0 = modular_character(h)?;
    r.result("pi0", report::scalars(&pi0));
    r.certificate("descent_method", json!("integral of the dual"));
    r.verdict(Verdict::new("pi0 is a character", h.is_character(&pi0)));
    Ok(())
}

fn pi0_for(h: &HopfPresentation, s: &Settings) -> Result<(Character, String)> {
    match closed_form(h) {
        Ok((c, how, _)) => Ok((c, how)),
        Err(_) => homology_integral(h, s).map(|(c, _, kind)| (c, format!("homology ({kind})"))),
    }
}

fn nakayama_cmd(r: &mut Report, h: &HopfPresentation, s: &Settings) -> Result<()> {
    let (pi0, how) = pi0_for(h, s)?;
    let xi = xi_of(h, &pi0)?;
    let s2 = s_squared(h)?;
    r.result("pi0", report::character(h, &pi0));
    r.result("xi", report::algebra_map(h, &xi));
    r.result("s_squared", report::algebra_map(h, &s2));
    r.certificate("pi0_method", json!(how));
    match nakayama_presented(h, &pi0) {
        Ok(nu) => {
            r.result("nu", report::algebra_map(h, &nu));
            r.result("nu_diagonal", nu.diagonal_scalars().map_or(Value::Null, |d| report::scalars(&d)));
            r.certificate("relations_checked_to_degree", json!(nu.certificate));
            r.verdict(Verdict::new("nu preserves relations", true));
        }
        Err(e) => r.verdict(Verdict::new("nu preserves relations", false).detail(e.to_string())),
    }
    Ok(())
}

fn fd_nakayama(r: &mut Report, h: &FDHopf, s: &Settings) -> Result<()> {
    let search = UnitSearch { seed: s.seed, ..UnitSearch::default() };
    let nu = nakayama(h)?;
    let sx = h.s_squared().mul(&xi(h)?);
    r.result("nu", report::matrix(&nu));
    r.result("s_squared_xi", report::matrix(&sx));
    let unit = equal_up_to_inner(&h.alg, &nu, &sx, &search);
    r.certificate("inner_unit", unit.as_ref().map_or(Value::Null, |u| report::scalars(u)));
    r.verdict(Verdict::new("nu equals S^2 xi up to inner", unit.is_some()));
    let io = integral_order(h, 64)?;
    let o = nakayama_order(h, 64, &search)?;
    r.result("integral_order", json!(io));
    r.result("nakayama_order", json!(o));
    let ok = matches!((o, io), (Some(o), Some(io)) if o == io || o == 2 * io);
    r.verdict(Verdict::new("nakayama order is io or 2 io", ok));
    let pi0 = modular_character(h)?;
    let adj = adjoint_tensor_check(h, &pi0)?;
    let loc = adj.checks.iter().find_map(|c| c.location.clone().map(|l| format!("{}: {l}", c.name)));
    let mut v = Verdict::new("adjoint tensor bimodule isomorphism", adj.passed());
    if let Some(l) = loc {
        v = v.at(l);
    }
    r.verdict(v);
    Ok(())
}

fn radford(r: &mut Report, h: &FDHopf) -> Result<()> {
    let rep = radford_s4_check(h)?;
    r.result("pi0", report::scalars(&rep.pi0));
    r.result("group_like", report::scalars(&rep.group_like));
    r.result("s4", report::matrix(&rep.s4));
    let mut v = Verdict::new("S^4 = Ad(g^-1) phi xi^-1", rep.passed());
    if let Some(f) = rep.failure {
        v = v.at(f);
    }
    r.verdict(v);
    Ok(())
}

/// `side left|right` followed by `gen -> image` lines.
fn twist_from_file(h: &HopfPresentation, path: &str) -> Result<(TwistSpec, String)> {
    let text = std::fs::read_to_string(Path::new(path)).with_context(|| format!("reading twist file {path}"))?;
    let mut side = "left".to_string();
    let mut images: Vec<_> = (0..h.ngens()).map(hopfwind::rewrite::NCPoly::gen).collect();
    for line in text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()) {
        if let Some(rest) = line.strip_prefix("side") {
            side = rest.trim().to_string();
            continue;
        }
        let (g, p) = line.split_once("->").ok_or_else(|| anyhow!("expected `gen -> image`, got `{line}`"))?;
        let g = h.names().iter().position(|n| n == g.trim()).ok_or_else(|| anyhow!("unknown generator `{}`", g.trim()))?;
        images[g] = parse_poly(p.trim(), h.names(), h.field)?;
    }
    let map = AlgebraMap::new(h, images)?;
    Ok(match side.as_str() {
        "left" => (TwistSpec::left(h, map), "left".into()),
        "right" => (TwistSpec::right(h, map), "right".into()),
        other => bail!("side must be left or right, got `{other}`"),
    })
}

fn hochschild(r: &mut Report, h: &HopfPresentation, t: &Twist, s: &Settings) -> Result<()> {
    let res = resolution_for(h)?;
    let d = res.length();
    let (hom_spec, coh_spec, normalization) = match t {
        Twist::Identity => (TwistSpec::identity(h), TwistSpec::identity(h), "A".to_string()),
        Twist::Nakayama => {
            let (pi0, how) = pi0_for(h, s)?;
            let nu = nakayama_presented(h, &pi0)?;
            r.result("nu", report::algebra_map(h, &nu));
            r.certificate("pi0_method", json!(how));
            (TwistSpec::right(h, nu.clone()), TwistSpec::left(h, nu), "homology in A^nu, cohomology in ^nu A".to_string())
        }
        Twist::File(p) => {
            let (spec, side) = twist_from_file(h, p)?;
            (spec.clone(), spec, format!("{side} twist from file"))
        }
    };
    r.result("normalization", json!(normalization));
    r.result("homology_twist", json!(hom_spec.describe(h)));
    r.result("cohomology_twist", json!(coh_spec.describe(h)));
    r.certificate("resolution", json!(res.kind.name()));
    r.certificate("resolution_ranks", json!(res.ranks));
    for (key, out) in [
        ("homology", hochschild_homology(h, &res, &hom_spec, s.truncate, s.window)),
        ("cohomology", hochschild_cohomology(h, &res, &coh_spec, s.truncate, s.window)),
    ] {
        match out {
            Ok(tab) => {
                r.result(key, report::dims(&tab));
                r.certificate(key, report::dims_certificate(&tab));
                let uncertified = tab.certified.iter().position(|&c| !c);
                let mut v = Verdict::new(&format!("{key} certified"), uncertified.is_none());
                if let Some(i) = uncertified {
                    v = v.at(format!("degree {i}"));
                }
                r.verdict(v);
                if *t == Twist::Nakayama {
                    let top = tab.certified[d] && tab.value(d) > 0;
                    r.verdict(Verdict::new(&format!("top {key} nonzero"), top).at(format!("degree {d}")).detail(format!("dims {:?}", tab.dims[d])));
                }
            }
            Err(e) => r.verdict(Verdict::new(&format!("{key} computed"), false).detail(e.to_string())),
        }
    }
    Ok(())
}

fn fd_hochschild(r: &mut Report, h: &FDHopf, t: &Twist, s: &Settings) -> Result<()> {
    let twist = match t {
        Twist::Identity => FdTwist::identity(h.dim()),
        Twist::Nakayama => FdTwist::right(nakayama(h)?),
        Twist::File(_) => bail!("custom twist files are supported for presented algebras only"),
    };
    let max = s.truncate.min(if h.dim() <= 9 { 2 } else { 1 });
    let hom = fd_hochschild_homology(h, &twist, max);
    let tor = fd_adjoint_tor(h, &twist, max);
    let coh = fd_hochschild_cohomology(h, &twist, max);
    r.result("homology", report::dims(&hom));
    r.result("adjoint_tor", report::dims(&tor));
    r.result("cohomology", report::dims(&coh));
    r.certificate("max_degree", json!(max));
    let bad = (0..=max).find(|&i| hom.dims[i] != tor.dims[i]);
    let mut v = Verdict::new("hochschild homology equals Tor of the right adjoint", bad.is_none());
    if let Some(i) = bad {
        v = v.at(format!("degree {i}"));
    }
    r.verdict(v);
    Ok(())
}

fn duality(r: &mut Report, h: &HopfPresentation, s: &Settings) -> Result<()> {
    let rep = duality_check(h, &TwistSpec::identity(h), s.truncate, s.window)?;
    r.result("d", json!(rep.d));
    r.result("homology_twist", json!(rep.homology_twist));
    r.result("rows", serde_json::to_value(&rep.rows)?);
    for row in &rep.rows {
        r.verdict(Verdict::new(&format!("H^{} matches H_{}", row.i, rep.d - row.i), row.agree && row.certified));
    }
    Ok(())
}

fn fd_duality(r: &mut Report, h: &FDHopf) -> Result<()> {
    let rep = fd_duality_check(h, &FdTwist::identity(h.dim()))?;
    r.result("d", json!(rep.d));
    r.result("rows", serde_json::to_value(&rep.rows)?);
    r.verdict(Verdict::new("H^0 matches H_0", rep.passed()));
    Ok(())
}

/// Matrix columns as strings, for callers that print FD automorphisms.
pub fn matrix_text(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.cols()).map(|j| m.col(j).iter().map(|c| c.to_string()).collect()).collect()
}
