//! Hopf algebras given by generators, relations, and Δ, ε, S on generators.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::algebra::Algebra;
use crate::exact::{FieldTag, Scalar};
use crate::rewrite::{NCPoly, Word};

/// Element of a tensor power A^{⊗k}, keyed by one word per factor.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor {
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl Tensor {
    pub fn zero() -> Self {
        Tensor { terms: BTreeMap::new() }
    }

    /// 1 ⊗ ⋯ ⊗ 1 with k factors.
    pub fn one(k: usize) -> Self {
        let mut t = Tensor::zero();
        t.add_term(vec![Word::empty(); k], &Scalar::one());
        t
    }

    pub fn from_pairs(pairs: &[(NCPoly, NCPoly)]) -> Self {
        let mut t = Tensor::zero();
        for (a, b) in pairs {
            t.add_scaled(&Tensor::simple(&[a.clone(), b.clone()]), &Scalar::one());
        }
        t
    }

    /// p_1 ⊗ ⋯ ⊗ p_k.
    pub fn simple(factors: &[NCPoly]) -> Self {
        let mut acc = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::new();
            for (ws, c) in &acc {
                for (w, d) in f.terms() {
                    let mut v: Vec<Word> = ws.clone();
                    v.push(w.clone());
                    next.push((v, c * d));
                }
            }
            acc = next;
        }
        let mut t = Tensor::zero();
        for (k, c) in acc {
            t.add_term(k, &c);
        }
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: Vec<Word>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Tensor, c: &Scalar) {
        for (k, v) in &o.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    pub fn sub(&self, o: &Tensor) -> Tensor {
        let mut t = self.clone();
        t.add_scaled(o, &Scalar::int(-1));
        t
    }

    /// Factorwise product followed by normal forms in each factor.
    pub fn mul(&self, o: &Tensor, alg: &Algebra) -> Tensor {
        let mut raw = Tensor::zero();
        for (k1, a) in &self.terms {
            for (k2, b) in &o.terms {
                let k: Vec<Word> = k1.iter().zip(k2).map(|(x, y)| x.concat(y)).collect();
                raw.add_term(k, &(a * b));
            }
        }
        raw.nf(alg)
    }

    pub fn nf(&self, alg: &Algebra) -> Tensor {
        let mut out = Tensor::zero();
        for (k, c) in &self.terms {
            let factors: Vec<NCPoly> = k.iter().map(|w| alg.nf_word(w)).collect();
            out.add_scaled(&Tensor::simple(&factors), c);
        }
        out
    }

    /// Applies a linear map to factor `i`.
    pub fn map_factor(&self, i: usize, f: impl Fn(&Word) -> NCPoly) -> Tensor {
        let mut out = Tensor::zero();
        for (k, c) in &self.terms {
            let factors: Vec<NCPoly> = k.iter().enumerate().map(|(j, w)| if j == i { f(w) } else { NCPoly::word(w.clone()) }).collect();
            out.add_scaled(&Tensor::simple(&factors), c);
        }
        out
    }

    /// Replaces factor `i` by a tensor of several factors.
    pub fn expand_factor(&self, i: usize, f: impl Fn(&Word) -> Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (k, c) in &self.terms {
            for (inner, d) in f(&k[i]).terms() {
                let mut key: Vec<Word> = k[..i].to_vec();
                key.extend(inner.iter().cloned());
                key.extend(k[i + 1..].iter().cloned());
                out.add_term(key, &(c * d));
            }
        }
        out
    }

    /// Contracts factor `i` to a scalar.
    pub fn contract_factor(&self, i: usize, f: impl Fn(&Word) -> Scalar) -> Tensor {
        let mut out = Tensor::zero();
        for (k, c) in &self.terms {
            let v = f(&k[i]);
            if v.is_zero() {
                continue;
            }
            let mut key = k.clone();
            key.remove(i);
            out.add_term(key, &(c * &v));
        }
        out
    }

    /// Multiplies all factors together in order.
    pub fn multiply_out(&self, alg: &Algebra) -> NCPoly {
        let mut out = NCPoly::zero();
        for (k, c) in &self.terms {
            let w = k.iter().fold(Word::empty(), |acc, w| acc.concat(w));
            out.add_term(w, c);
        }
        alg.nf(&out)
    }

    /// The element of A when there is a single factor.
    pub fn to_poly(&self) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(k, c)| (k[0].clone(), c.clone())))
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| {
                let f: Vec<String> = k.iter().map(|w| w.fmt_with(names)).collect();
                format!("({c})*{}", f.join(" @ "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Which example family a presentation came from, with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    QuantumSl { n: usize },
    QuantumMatrices { n: usize },
    /// Structure constants c[i][j][k] with [x_i, x_j] = Σ_k c[i][j][k] x_k.
    Enveloping { structure: Vec<Vec<Vec<Scalar>>> },
    Group,
    UqSl2,
    Custom,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfPresentation {
    pub name: String,
    pub field: FieldTag,
    pub algebra: Algebra,
    /// Δ(g) = Σ a ⊗ b for each generator.
    pub coproduct: Vec<Vec<(NCPoly, NCPoly)>>,
    pub counit: Vec<Scalar>,
    /// `None` for a bialgebra.
    pub antipode: Option<Vec<NCPoly>>,
    pub antipode_inv: Option<Vec<NCPoly>>,
    pub family: Family,
}

impl HopfPresentation {
    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    pub fn ngens(&self) -> usize {
        self.algebra.ngens()
    }

    pub fn nf(&self, p: &NCPoly) -> NCPoly {
        self.algebra.nf(p)
    }

    pub fn is_hopf(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn fmt(&self, p: &NCPoly) -> String {
        p.fmt_with(self.names())
    }

    pub fn gen(&self, name: &str) -> NCPoly {
        NCPoly::gen(self.algebra.gen_index(name).unwrap_or_else(|| panic!("no generator {name}")))
    }

    pub fn coproduct_gen(&self, g: usize) -> Tensor {
        Tensor::from_pairs(&self.coproduct[g])
    }

    /// Δ extended multiplicatively.
    pub fn coproduct_of(&self, p: &NCPoly) -> Tensor {
        let mut out = Tensor::zero();
        for (w, c) in p.terms() {
            let mut acc = Tensor::one(2);
            for &g in &w.0 {
                acc = acc.mul(&self.coproduct_gen(g as usize), &self.algebra);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    pub fn counit_of(&self, p: &NCPoly) -> Scalar {
        eval_character(&self.counit, p)
    }

    pub fn counit_word(&self, w: &Word) -> Scalar {
        w.0.iter().fold(Scalar::one(), |acc, &g| acc * &self.counit[g as usize])
    }

    pub fn antipode_images(&self) -> &[NCPoly] {
        self.antipode.as_deref().expect("bialgebra has no antipode")
    }

    /// S extended anti-multiplicatively.
    pub fn antipode_of(&self, p: &NCPoly) -> NCPoly {
        apply_anti(&self.algebra, self.antipode_images(), p)
    }

    pub fn antipode_inv_of(&self, p: &NCPoly) -> Option<NCPoly> {
        self.antipode_inv.as_ref().map(|s| apply_anti(&self.algebra, s, p))
    }

    /// Applies the algebra map with the given generator images.
    pub fn apply(&self, images: &[NCPoly], p: &NCPoly) -> NCPoly {
        apply_mult(&self.algebra, images, p)
    }
}

/// Value of the multiplicative extension of `values` on `p`.
pub fn eval_character(values: &[Scalar], p: &NCPoly) -> Scalar {
    let mut acc = Scalar::zero();
    for (w, c) in p.terms() {
        let mut v = c.clone();
        for &g in &w.0 {
            v = v * &values[g as usize];
            if v.is_zero() {
                break;
            }
        }
        acc += &v;
    }
    acc
}

/// Multiplicative extension of generator images, reduced to normal form.
pub fn apply_mult(alg: &Algebra, images: &[NCPoly], p: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = NCPoly::one();
        for &g in &w.0 {
            acc = alg.mul(&acc, &images[g as usize]);
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Anti-multiplicative extension of generator images.
pub fn apply_anti(alg: &Algebra, images: &[NCPoly], p: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = NCPoly::one();
        for &g in w.0.iter().rev() {
            acc = alg.mul(&acc, &images[g as usize]);
        }
        out.add_scaled(&acc, c);
    }
    out
}
