//! Presented algebras: a rewrite system or a polycyclic group algebra.

use super::group::{Elem, PolycyclicGroup};
use crate::rewrite::{NCPoly, RewriteSystem, Word};

/// The group algebra kG on letters x_1..x_n followed by their inverses.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebra {
    group: PolycyclicGroup,
    names: Vec<String>,
}

impl GroupAlgebra {
    pub fn new(group: PolycyclicGroup) -> Self {
        let mut names = group.gen_names.clone();
        names.extend(group.gen_names.iter().map(|n| format!("{n}_inv")));
        GroupAlgebra { group, names }
    }

    pub fn group(&self) -> &PolycyclicGroup {
        &self.group
    }

    /// Letter index of x_i or x_i⁻¹.
    pub fn letter(&self, i: usize, inverse: bool) -> usize {
        if inverse {
            i + self.group.rank()
        } else {
            i
        }
    }

    pub fn elem_of_word(&self, w: &Word) -> Elem {
        let n = self.group.rank();
        let mut e = self.group.identity();
        for &l in &w.0 {
            let l = l as usize;
            let s = if l < n { self.group.gen_elem(l) } else { self.group.gen_inv_elem(l - n) };
            e = self.group.mul(&e, &s);
        }
        e
    }

    /// The normal word x_1^{e_1} ⋯ x_n^{e_n}.
    pub fn word_of_elem(&self, e: &[i64]) -> Word {
        let n = self.group.rank();
        let mut v = Vec::new();
        for (i, &k) in e.iter().enumerate() {
            let l = if k >= 0 { i } else { i + n } as u16;
            v.extend(std::iter::repeat(l).take(k.unsigned_abs() as usize));
        }
        Word(v)
    }

    pub fn nf(&self, p: &NCPoly) -> NCPoly {
        NCPoly::from_terms(p.terms().map(|(w, c)| (self.word_of_elem(&self.elem_of_word(w)), c.clone())))
    }

    /// Defining relations: x x⁻¹ = 1 = x⁻¹ x and x_j x_i = (x_j x_i x_j⁻¹) x_j.
    pub fn relations(&self) -> Vec<NCPoly> {
        let n = self.group.rank();
        let mut out = Vec::new();
        for i in 0..n {
            let (x, xi) = (NCPoly::gen(i), NCPoly::gen(i + n));
            out.push(x.mul(&xi).sub(&NCPoly::one()));
            out.push(xi.mul(&x).sub(&NCPoly::one()));
        }
        let (conj, _) = self.group.conj_table();
        for j in 0..n {
            for i in 0..j {
                let lhs = NCPoly::gen(j).mul(&NCPoly::gen(i));
                let rhs = NCPoly::word(self.word_of_elem(&conj[j][i])).mul(&NCPoly::gen(j));
                out.push(lhs.sub(&rhs));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Algebra {
    Rules(RewriteSystem),
    Group(GroupAlgebra),
}

impl Algebra {
    pub fn names(&self) -> &[String] {
        match self {
            Algebra::Rules(s) => s.names(),
            Algebra::Group(g) => &g.names,
        }
    }

    pub fn ngens(&self) -> usize {
        self.names().len()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.names().iter().position(|n| n == name)
    }

    pub fn nf(&self, p: &NCPoly) -> NCPoly {
        match self {
            Algebra::Rules(s) => s.normal_form(p),
            Algebra::Group(g) => g.nf(p),
        }
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.nf(&a.mul(b))
    }

    /// Normal form of a single word.
    pub fn nf_word(&self, w: &Word) -> NCPoly {
        self.nf(&NCPoly::word(w.clone()))
    }

    /// Relations generating the defining ideal.
    pub fn relations(&self) -> Vec<NCPoly> {
        match self {
            Algebra::Rules(s) => s.defining_relations().to_vec(),
            Algebra::Group(g) => g.relations(),
        }
    }

    /// Degree to which normal forms are certified; group collection is exact.
    pub fn certificate(&self) -> usize {
        match self {
            Algebra::Rules(s) => s.certificate(),
            Algebra::Group(_) => usize::MAX,
        }
    }

    pub fn as_rules(&self) -> Option<&RewriteSystem> {
        match self {
            Algebra::Rules(s) => Some(s),
            Algebra::Group(_) => None,
        }
    }

    pub fn as_group(&self) -> Option<&GroupAlgebra> {
        match self {
            Algebra::Group(g) => Some(g),
            Algebra::Rules(_) => None,
        }
    }

    pub fn fmt(&self, p: &NCPoly) -> String {
        p.fmt_with(self.names())
    }
}
