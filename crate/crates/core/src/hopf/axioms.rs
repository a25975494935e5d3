//! Hopf axioms checked on generators and relations modulo the relations.

use serde::Serialize;

use super::presentation::HopfPresentation;
use crate::rewrite::NCPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub location: String,
    pub pass: bool,
    /// Nonzero residue when the check fails.
    pub residue: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub degree: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

fn check(axiom: &str, location: String, residue: Option<String>) -> AxiomCheck {
    AxiomCheck { axiom: axiom.into(), location, pass: residue.is_none(), residue }
}

/// Runs every axiom check. Relations of degree above `degree_bound` are skipped,
/// and `degree` in the report is the bound actually covered.
pub fn verify_hopf_axioms(h: &HopfPresentation, degree_bound: usize) -> AxiomReport {
    let names = h.names();
    let alg = &h.algebra;
    let mut checks = Vec::new();
    let deg = degree_bound.min(alg.certificate());
    let relations: Vec<NCPoly> = alg.relations().into_iter().filter(|r| r.degree().unwrap_or(0) <= deg).collect();

    for g in 0..h.ngens() {
        let loc = format!("generator {}", names[g]);
        let d = h.coproduct_gen(g).nf(alg);
        let left = d.expand_factor(0, |w| h.coproduct_of(&NCPoly::word(w.clone()))).nf(alg);
        let right = d.expand_factor(1, |w| h.coproduct_of(&NCPoly::word(w.clone()))).nf(alg);
        let diff = left.sub(&right);
        checks.push(check("coassociativity", loc.clone(), (!diff.is_zero()).then(|| diff.fmt_with(names))));

        let gp = NCPoly::gen(g);
        let l = alg.nf(&d.contract_factor(0, |w| h.counit_word(w)).to_poly());
        let r = alg.nf(&d.contract_factor(1, |w| h.counit_word(w)).to_poly());
        let res = l.sub(&alg.nf(&gp));
        checks.push(check("left counit", loc.clone(), (!res.is_zero()).then(|| h.fmt(&res))));
        let res = r.sub(&alg.nf(&gp));
        checks.push(check("right counit", loc.clone(), (!res.is_zero()).then(|| h.fmt(&res))));

        if h.is_hopf() {
            let eps = NCPoly::constant(h.counit[g].clone());
            let sl = d.map_factor(0, |w| h.antipode_of(&NCPoly::word(w.clone()))).multiply_out(alg).sub(&eps);
            checks.push(check("left antipode", loc.clone(), (!sl.is_zero()).then(|| h.fmt(&sl))));
            let sr = d.map_factor(1, |w| h.antipode_of(&NCPoly::word(w.clone()))).multiply_out(alg).sub(&eps);
            checks.push(check("right antipode", loc.clone(), (!sr.is_zero()).then(|| h.fmt(&sr))));
        }
        if let (Some(sinv), true) = (&h.antipode_inv, h.is_hopf()) {
            let a = h.antipode_of(&sinv[g]).sub(&alg.nf(&gp));
            checks.push(check("S∘S⁻¹ = id", loc.clone(), (!a.is_zero()).then(|| h.fmt(&a))));
            let b = h.antipode_inv_of(&h.antipode_images()[g]).unwrap().sub(&alg.nf(&gp));
            checks.push(check("S⁻¹∘S = id", loc, (!b.is_zero()).then(|| h.fmt(&b))));
        }
    }

    for r in &relations {
        let loc = format!("relation {} = 0", h.fmt(r));
        let d = h.coproduct_of(r);
        checks.push(check("Δ multiplicative", loc.clone(), (!d.is_zero()).then(|| d.fmt_with(names))));
        let e = h.counit_of(r);
        checks.push(check("ε multiplicative", loc.clone(), (!e.is_zero()).then(|| e.to_string())));
        if h.is_hopf() {
            let s = h.antipode_of(r);
            checks.push(check("S anti-multiplicative", loc.clone(), (!s.is_zero()).then(|| h.fmt(&s))));
        }
        if let Some(s) = h.antipode_inv_of(r) {
            checks.push(check("S⁻¹ anti-multiplicative", loc, (!s.is_zero()).then(|| h.fmt(&s))));
        }
    }
    AxiomReport { degree: deg, checks }
}
