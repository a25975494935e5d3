//! Rewrite systems under the degree-lexicographic order.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use super::word::{NCPoly, Word};
use super::RewriteError;
use crate::exact::{Scalar, SparseVec, Echelon};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

impl RewriteRule {
    pub fn new(lhs: Word, rhs: NCPoly) -> Self {
        RewriteRule { lhs, rhs }
    }

    /// The relation lhs − rhs.
    pub fn relation(&self) -> NCPoly {
        NCPoly::word(self.lhs.clone()).sub(&self.rhs)
    }

    fn oriented(&self) -> bool {
        !self.lhs.is_empty() && self.rhs.leading().is_none_or(|(w, _)| *w < self.lhs)
    }
}

/// Default cap on reduction steps for one normal-form computation.
pub const DEFAULT_STEP_BUDGET: usize = 20_000_000;

type NfCache = Arc<RwLock<HashMap<Word, NCPoly>>>;

/// Generators, oriented rules, and the degree up to which overlaps are known to resolve.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    names: Vec<String>,
    rules: Vec<RewriteRule>,
    defining: Vec<NCPoly>,
    certificate: usize,
    step_budget: usize,
    index: HashMap<Vec<u16>, usize>,
    lhs_lens: Vec<usize>,
    cache: NfCache,
}

impl PartialEq for RewriteSystem {
    fn eq(&self, o: &Self) -> bool {
        self.names == o.names && self.rules == o.rules && self.certificate == o.certificate
    }
}

impl RewriteSystem {
    /// Builds a system from rules, rejecting any rule whose rhs is not below its lhs.
    pub fn new(names: Vec<String>, rules: Vec<RewriteRule>) -> Result<Self, RewriteError> {
        for r in &rules {
            if !r.oriented() {
                return Err(RewriteError::OrderViolation(r.relation().fmt_with(&names)));
            }
            if r.lhs.0.iter().chain(r.rhs.terms().flat_map(|(w, _)| w.0.iter())).any(|&g| g as usize >= names.len()) {
                return Err(RewriteError::UnknownGenerator(format!("{}", r.relation())));
            }
        }
        let defining = rules.iter().map(RewriteRule::relation).collect();
        let mut sys = RewriteSystem {
            names,
            rules,
            defining,
            certificate: 0,
            step_budget: DEFAULT_STEP_BUDGET,
            index: HashMap::new(),
            lhs_lens: Vec::new(),
            cache: Arc::default(),
        };
        sys.rebuild();
        Ok(sys)
    }

    /// Builds a system from relations (each set to zero), orienting each by its leading word.
    pub fn from_relations(names: Vec<String>, relations: &[NCPoly]) -> Result<Self, RewriteError> {
        let mut rules = Vec::new();
        for r in relations {
            if let Some(rule) = orient(r, &names)? {
                rules.push(rule);
            }
        }
        RewriteSystem::new(names, rules)
    }

    /// Rebuilds a stored system from its rules and defining relations, then
    /// re-runs completion to `certificate` so the bound is earned, not trusted.
    pub fn from_parts(
        names: Vec<String>,
        rules: Vec<RewriteRule>,
        defining: Vec<NCPoly>,
        certificate: usize,
    ) -> Result<Self, RewriteError> {
        let mut sys = RewriteSystem::new(names, rules)?;
        sys.defining = defining;
        sys.complete(certificate)
    }

    /// A system with no relations.
    pub fn free(names: Vec<String>) -> Self {
        RewriteSystem::new(names, Vec::new()).unwrap()
    }

    fn rebuild(&mut self) {
        self.index.clear();
        for (i, r) in self.rules.iter().enumerate() {
            self.index.entry(r.lhs.0.clone()).or_insert(i);
        }
        let lens: BTreeSet<usize> = self.rules.iter().map(|r| r.lhs.len()).collect();
        self.lhs_lens = lens.into_iter().collect();
        self.cache = Arc::default();
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn certificate(&self) -> usize {
        self.certificate
    }

    /// The relations the system was built from; completion adds consequences
    /// of these as rules but never changes this list.
    pub fn defining_relations(&self) -> &[NCPoly] {
        &self.defining
    }

    pub fn with_step_budget(mut self, budget: usize) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Leftmost occurrence of a rule lhs in `w`: (start, rule index).
    fn find_redex(&self, w: &[u16]) -> Option<(usize, usize)> {
        for s in 0..w.len() {
            for &l in &self.lhs_lens {
                if s + l > w.len() {
                    break;
                }
                if let Some(&i) = self.index.get(&w[s..s + l]) {
                    return Some((s, i));
                }
            }
        }
        None
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.find_redex(&w.0).is_none()
    }

    fn nf_word(&self, w: &Word, steps: &mut usize) -> Result<NCPoly, RewriteError> {
        if let Some(p) = self.cache.read().unwrap().get(w) {
            return Ok(p.clone());
        }
        let Some((s, i)) = self.find_redex(&w.0) else {
            return Ok(NCPoly::word(w.clone()));
        };
        *steps += 1;
        if *steps > self.step_budget {
            return Err(RewriteError::StepBudgetExceeded(self.step_budget));
        }
        let rule = &self.rules[i];
        let prefix = &w.0[..s];
        let suffix = &w.0[s + rule.lhs.len()..];
        let mut out = NCPoly::zero();
        for (t, c) in rule.rhs.terms() {
            let mut v = Vec::with_capacity(prefix.len() + t.len() + suffix.len());
            v.extend_from_slice(prefix);
            v.extend_from_slice(&t.0);
            v.extend_from_slice(suffix);
            let sub = self.nf_word(&Word(v), steps)?;
            out.add_scaled(&sub, c);
        }
        self.cache.write().unwrap().insert(w.clone(), out.clone());
        Ok(out)
    }

    /// Normal form, failing once the reduction step budget is exhausted.
    pub fn try_normal_form(&self, p: &NCPoly) -> Result<NCPoly, RewriteError> {
        let mut steps = 0;
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let r = self.nf_word(w, &mut steps)?;
            out.add_scaled(&r, c);
        }
        Ok(out)
    }

    /// Normal form; panics if the step budget is exhausted.
    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        self.try_normal_form(p).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Normal form of a product.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.normal_form(&a.mul(b))
    }

    /// Reduces every monomial with a random choice of redex at each step.
    /// Only used to test that the normal form does not depend on the strategy.
    pub fn normal_form_with(&self, p: &NCPoly, choose: &mut impl FnMut(usize) -> usize) -> NCPoly {
        let mut work = p.clone();
        let mut done = NCPoly::zero();
        while let Some((w, c)) = work.leading().map(|(w, c)| (w.clone(), c.clone())) {
            work.add_term(w.clone(), &-&c);
            let redexes = self.all_redexes(&w.0);
            if redexes.is_empty() {
                done.add_term(w, &c);
                continue;
            }
            let (s, i) = redexes[choose(redexes.len())];
            let rule = &self.rules[i];
            for (t, d) in rule.rhs.terms() {
                let mut v = w.0[..s].to_vec();
                v.extend_from_slice(&t.0);
                v.extend_from_slice(&w.0[s + rule.lhs.len()..]);
                work.add_term(Word(v), &(&c * d));
            }
        }
        done
    }

    fn all_redexes(&self, w: &[u16]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in 0..w.len() {
            for &l in &self.lhs_lens {
                if s + l <= w.len() {
                    if let Some(&i) = self.index.get(&w[s..s + l]) {
                        out.push((s, i));
                    }
                }
            }
        }
        out
    }

    /// Normal words of length exactly `d`.
    pub fn normal_words(&self, d: usize) -> Vec<Word> {
        let mut layer = vec![Word::empty()];
        for _ in 0..d {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..self.ngens() {
                    let mut v = w.0.clone();
                    v.push(g as u16);
                    // only redexes ending at the new letter can be new
                    let ok = self.lhs_lens.iter().all(|&l| l > v.len() || !self.index.contains_key(&v[v.len() - l..]));
                    if ok {
                        next.push(Word(v));
                    }
                }
            }
            layer = next;
        }
        layer
    }

    /// Normal words of length at most `d`, in increasing order.
    pub fn normal_words_upto(&self, d: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for k in 0..=d {
            out.extend(self.normal_words(k));
        }
        out
    }

    /// Bounded completion: resolves every overlap whose word has length at most
    /// `degree_bound`, adding rules until none produce new relations.
    pub fn complete(&self, degree_bound: usize) -> Result<RewriteSystem, RewriteError> {
        let mut sys = self.clone();
        sys.interreduce()?;
        loop {
            let mut new_rels = Vec::new();
            for i in 0..sys.rules.len() {
                for j in 0..sys.rules.len() {
                    let (a, b) = (&sys.rules[i].lhs.0, &sys.rules[j].lhs.0);
                    for k in 1..a.len().min(b.len()) {
                        if a.len() + b.len() - k > degree_bound || a[a.len() - k..] != b[..k] {
                            continue;
                        }
                        let left = sys.rules[i].rhs.mul(&NCPoly::word(Word(b[k..].to_vec())));
                        let right = NCPoly::word(Word(a[..a.len() - k].to_vec())).mul(&sys.rules[j].rhs);
                        let d = sys.try_normal_form(&left.sub(&right))?;
                        if !d.is_zero() {
                            new_rels.push(d);
                        }
                    }
                }
            }
            if new_rels.is_empty() {
                break;
            }
            let mut fresh: Vec<RewriteRule> = Vec::new();
            for r in new_rels {
                // reduce against rules found in this round too
                let tmp = RewriteSystem::new(sys.names.clone(), sys.rules.iter().cloned().chain(fresh.iter().cloned()).collect())?;
                let r = tmp.try_normal_form(&r)?;
                if let Some(rule) = orient(&r, &sys.names)? {
                    fresh.push(rule);
                }
            }
            fresh.sort_by(|x, y| x.lhs.cmp(&y.lhs));
            sys.rules.extend(fresh);
            sys.rebuild();
            sys.interreduce()?;
        }
        sys.certificate = degree_bound;
        sys.rebuild();
        Ok(sys)
    }

    /// Removes rules whose lhs contains another lhs and reduces every rhs.
    fn interreduce(&mut self) -> Result<(), RewriteError> {
        loop {
            self.rules.sort_by(|x, y| x.lhs.cmp(&y.lhs));
            self.rules.dedup();
            let mut changed = false;
            let mut pending = Vec::new();
            let mut kept: Vec<RewriteRule> = Vec::new();
            for (i, r) in self.rules.iter().enumerate() {
                let covered = self.rules.iter().enumerate().any(|(j, s)| {
                    j != i && r.lhs.find(&s.lhs.0).is_some() && (s.lhs != r.lhs || j < i)
                });
                if covered {
                    pending.push(r.relation());
                    changed = true;
                } else {
                    kept.push(r.clone());
                }
            }
            self.rules = kept;
            self.rebuild();
            for p in pending {
                let p = self.try_normal_form(&p)?;
                if let Some(rule) = orient(&p, &self.names)? {
                    self.rules.push(rule);
                    self.rebuild();
                }
            }
            // reduce right-hand sides
            let mut rhs_changed = false;
            for i in 0..self.rules.len() {
                let nf = self.try_normal_form(&self.rules[i].rhs)?;
                if nf != self.rules[i].rhs {
                    self.rules[i].rhs = nf;
                    rhs_changed = true;
                }
            }
            if rhs_changed {
                self.rebuild();
            }
            if !changed {
                return Ok(());
            }
        }
    }

    /// Adds relations and re-completes.
    pub fn with_relations(&self, relations: &[NCPoly], degree_bound: usize) -> Result<RewriteSystem, RewriteError> {
        let mut sys = self.clone();
        sys.defining.extend(relations.iter().cloned());
        for r in relations {
            let r = sys.try_normal_form(r)?;
            if let Some(rule) = orient(&r, &sys.names)? {
                sys.rules.push(rule);
                sys.rebuild();
            }
        }
        sys.complete(degree_bound)
    }

    /// Presentation of the quotient by the two-sided ideal generated by `x`.
    pub fn quotient(&self, x: &NCPoly, degree_bound: usize) -> Result<RewriteSystem, RewriteError> {
        self.with_relations(std::slice::from_ref(x), degree_bound)
    }

    /// Looks for a diagonal τ with x·g = τ(g)·x for every generator g,
    /// returning the scalars τ(g)/g.
    pub fn is_tau_normal(&self, x: &NCPoly) -> Result<Option<Vec<Scalar>>, RewriteError> {
        let x = self.try_normal_form(x)?;
        let dx = x.degree().unwrap_or(0);
        if dx + 1 > self.certificate {
            return Err(RewriteError::InsufficientConfluence { needed: dx + 1, certified: self.certificate });
        }
        let mut taus = Vec::with_capacity(self.ngens());
        for g in 0..self.ngens() {
            let gp = NCPoly::gen(g);
            let a = self.try_normal_form(&x.mul(&gp))?;
            let b = self.try_normal_form(&gp.mul(&x))?;
            match proportional(&a, &b) {
                Some(l) => taus.push(l),
                None => return Ok(None),
            }
        }
        Ok(Some(taus))
    }

    /// Certifies that left and right multiplication by `x` are injective on
    /// normal words of length up to `bound − deg(x)`. Returns the length checked.
    pub fn certify_nonzerodivisor(&self, x: &NCPoly, bound: usize) -> Result<Option<usize>, RewriteError> {
        let x = self.try_normal_form(x)?;
        let Some(dx) = x.degree() else {
            return Ok(None);
        };
        if bound < dx {
            return Err(RewriteError::InsufficientConfluence { needed: dx, certified: bound });
        }
        let depth = bound - dx;
        let words = self.normal_words_upto(depth);
        for side in [false, true] {
            let images: Vec<NCPoly> = words
                .iter()
                .map(|w| {
                    let wp = NCPoly::word(w.clone());
                    self.try_normal_form(&if side { wp.mul(&x) } else { x.mul(&wp) })
                })
                .collect::<Result<_, _>>()?;
            if !independent(&images) {
                return Ok(None);
            }
        }
        Ok(Some(depth))
    }

    /// True when every generator commutator reduces to zero.
    pub fn is_commutative(&self) -> bool {
        (0..self.ngens()).all(|i| {
            (i + 1..self.ngens()).all(|j| {
                let (a, b) = (NCPoly::gen(i), NCPoly::gen(j));
                self.normal_form(&a.mul(&b).sub(&b.mul(&a))).is_zero()
            })
        })
    }

    /// Generators that reduce to something other than themselves.
    pub fn killed_generators(&self) -> Vec<usize> {
        (0..self.ngens()).filter(|&g| !self.is_normal_word(&Word::gen(g))).collect()
    }
}

/// Turns a relation into a monic rule lhs → rhs, `None` for zero.
pub fn orient(r: &NCPoly, names: &[String]) -> Result<Option<RewriteRule>, RewriteError> {
    let Some((lw, lc)) = r.leading() else {
        return Ok(None);
    };
    if lw.is_empty() {
        return Err(RewriteError::OrderViolation(format!("relation {} forces 1 = 0", r.fmt_with(names))));
    }
    let lw = lw.clone();
    let inv = lc.inv();
    let mut rhs = r.scale(&-inv);
    rhs.add_term(lw.clone(), &Scalar::one());
    Ok(Some(RewriteRule::new(lw, rhs)))
}

/// λ with a = λ·b; λ = 1 when both vanish.
pub fn proportional(a: &NCPoly, b: &NCPoly) -> Option<Scalar> {
    match (a.leading(), b.leading()) {
        (None, None) => Some(Scalar::one()),
        (Some((wa, ca)), Some((wb, cb))) if wa == wb => {
            let l = ca / cb;
            (b.scale(&l) == *a).then_some(l)
        }
        _ => None,
    }
}

/// Linear independence of a family of polynomials.
pub fn independent(polys: &[NCPoly]) -> bool {
    let leads: BTreeSet<&Word> = polys.iter().filter_map(|p| p.leading().map(|(w, _)| w)).collect();
    if leads.len() == polys.len() {
        return true;
    }
    let mut idx: HashMap<Word, usize> = HashMap::new();
    let mut ech = Echelon::new();
    for p in polys {
        let entries: Vec<(usize, Scalar)> = p
            .terms()
            .map(|(w, c)| {
                let n = idx.len();
                (*idx.entry(w.clone()).or_insert(n), c.clone())
            })
            .collect();
        if ech.insert(SparseVec::from_entries(entries)).is_none() {
            return false;
        }
    }
    true
}
