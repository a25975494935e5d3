//! Words in the generators and noncommutative polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exact::Scalar;

/// A monomial: generator indices, empty for 1. Ordered by length, then
/// lexicographically by index (index order is generator precedence).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u16>);

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        Word(vec![i as u16])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + o.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    /// Position of the first occurrence of `sub`.
    pub fn find(&self, sub: &[u16]) -> Option<usize> {
        if sub.len() > self.0.len() {
            return None;
        }
        (0..=self.0.len() - sub.len()).find(|&s| &self.0[s..s + sub.len()] == sub)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let name = names.get(self.0[i] as usize).cloned().unwrap_or_else(|| format!("g{}", self.0[i]));
            parts.push(if j - i > 1 { format!("{name}^{}", j - i) } else { name });
            i = j;
        }
        parts.join("*")
    }
}

/// Finite linear combination of words with nonzero scalar coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NCPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::term(Word::empty(), c)
    }

    pub fn gen(i: usize) -> Self {
        NCPoly::term(Word::gen(i), Scalar::one())
    }

    pub fn word(w: Word) -> Self {
        NCPoly::term(w, Scalar::one())
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(w, _)| w.len())
    }

    /// The constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Word::empty())
    }

    /// The scalar value when the polynomial is a constant.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &o.terms {
            self.add_term(w.clone(), &(a * c));
        }
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        p.add_scaled(o, &Scalar::one());
        p
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        p.add_scaled(o, &Scalar::int(-1));
        p
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }

    /// Free (unreduced) product.
    pub fn mul(&self, o: &NCPoly) -> NCPoly {
        let mut p = NCPoly::zero();
        for (w1, a) in &self.terms {
            for (w2, b) in &o.terms {
                p.add_term(w1.concat(w2), &(a * b));
            }
        }
        p
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Largest generator index that occurs.
    pub fn max_gen(&self) -> Option<u16> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).max()
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (w, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, cs),
            };
            let coeff = if body.contains(['+', '-']) { format!("({body})") } else { body };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if w.is_empty() {
                out.push_str(&coeff);
            } else if coeff == "1" {
                out.push_str(&w.fmt_with(names));
            } else {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&w.fmt_with(names));
            }
        }
        out
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&[]))
    }
}
