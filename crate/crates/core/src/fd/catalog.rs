//! Named finite-dimensional Hopf algebras: group algebras of the groups of
//! order at most 8, their duals, the Sweedler algebra and Taft algebras.

use std::collections::HashMap;

use crate::exact::{FieldTag, Matrix, Scalar};

use super::hopf::{unit_vec, zero_vec, FDAlgebra, FDHopf, Vector};
use super::FdError;

/// A finite group by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Closure of permutations of {0..m}; elements are named by shortest words.
    pub fn from_permutations(name: &str, gens: &[(&str, Vec<usize>)]) -> FiniteGroup {
        let m = gens[0].1.len();
        let id: Vec<usize> = (0..m).collect();
        let mut perms = vec![id.clone()];
        let mut names = vec!["1".to_string()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < perms.len() {
            for (gname, g) in gens {
                // word·g: apply word first, then g
                let p: Vec<usize> = perms[i].iter().map(|&k| g[k]).collect();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), perms.len());
                    names.push(if i == 0 { gname.to_string() } else { format!("{}{}", names[i], gname) });
                    perms.push(p);
                }
            }
            i += 1;
        }
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index[&a.iter().map(|&k| b[k]).collect::<Vec<_>>()]).collect())
            .collect();
        FiniteGroup { name: name.to_string(), elements: names, table }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).unwrap()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

fn cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

/// Disjoint union of permutation actions.
fn shifted(p: &[usize], offset: usize, total: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..total).collect();
    for (i, &j) in p.iter().enumerate() {
        out[offset + i] = offset + j;
    }
    out
}

pub fn cyclic(n: usize) -> FiniteGroup {
    if n == 1 {
        return FiniteGroup::from_permutations("C1", &[("g", vec![0])]);
    }
    FiniteGroup::from_permutations(&format!("C{n}"), &[("g", cycle(n))])
}

/// C_{n₁}×…×C_{n_k}.
pub fn abelian(orders: &[usize]) -> FiniteGroup {
    let total: usize = orders.iter().sum();
    let labels = ["a", "b", "c", "d"];
    let mut offset = 0;
    let mut gens = Vec::new();
    for (i, &n) in orders.iter().enumerate() {
        gens.push((labels[i], shifted(&cycle(n), offset, total)));
        offset += n;
    }
    let name = orders.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join("×");
    FiniteGroup::from_permutations(&name, &gens)
}

pub fn symmetric3() -> FiniteGroup {
    FiniteGroup::from_permutations("S3", &[("s", vec![1, 0, 2]), ("t", vec![0, 2, 1])])
}

pub fn dihedral4() -> FiniteGroup {
    FiniteGroup::from_permutations("D4", &[("r", cycle(4)), ("s", vec![0, 3, 2, 1])])
}

/// Q8 through its regular representation on {±1, ±i, ±j, ±k}.
pub fn quaternion() -> FiniteGroup {
    // index 2u + s: unit u ∈ {1, i, j, k}, sign bit s
    let unit_mul = |a: usize, b: usize| -> (usize, usize) {
        // (sign, unit) of e_a·e_b
        const T: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        T[a][b]
    };
    let left = |u: usize| -> Vec<usize> {
        (0..8)
            .map(|x| {
                let (s, v) = unit_mul(u, x / 2);
                2 * v + ((x % 2) ^ s)
            })
            .collect()
    };
    FiniteGroup::from_permutations("Q8", &[("i", left(1)), ("j", left(2))])
}

/// One representative of each isomorphism class of groups of order ≤ 8.
pub fn small_groups() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = (1..=8).map(cyclic).collect();
    out.push(abelian(&[2, 2]));
    out.push(abelian(&[4, 2]));
    out.push(abelian(&[2, 2, 2]));
    out.push(symmetric3());
    out.push(dihedral4());
    out.push(quaternion());
    out
}

/// kG with Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(g: &FiniteGroup) -> FDHopf {
    let n = g.order();
    let mul = (0..n).map(|a| (0..n).map(|b| unit_vec(n, g.table[a][b])).collect()).collect();
    let comul = (0..n).map(|a| unit_vec(n * n, a * n + a)).collect();
    let antipode = Matrix::from_cols(n, &(0..n).map(|a| unit_vec(n, g.inverse(a))).collect::<Vec<_>>());
    FDHopf {
        name: format!("k[{}]", g.name),
        alg: FDAlgebra { field: FieldTag::Rational, basis: g.elements.clone(), mul, unit: unit_vec(n, 0) },
        comul,
        counit: vec![Scalar::one(); n],
        antipode,
    }
}

/// k^G, the dual of kG.
pub fn function_algebra(g: &FiniteGroup) -> FDHopf {
    let mut h = group_algebra(g).dual();
    h.name = format!("k^{}", g.name);
    h.alg.basis = g.elements.iter().map(|e| format!("δ{e}")).collect();
    h
}

pub fn trivial() -> FDHopf {
    let mut h = group_algebra(&cyclic(1));
    h.name = "k".into();
    h
}

/// Builds a Hopf algebra whose basis elements are products of generators.
///
/// `words[a]` lists the generator positions whose product is e_a; Δ, ε and S
/// are given on generators and extended (anti)multiplicatively.
pub struct GeneratedHopf<'a> {
    pub name: &'a str,
    pub alg: FDAlgebra,
    pub generators: Vec<usize>,
    pub words: Vec<Vec<usize>>,
    pub coproduct: Vec<Vector>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Vector>,
}

impl GeneratedHopf<'_> {
    pub fn build(self) -> Result<FDHopf, FdError> {
        let n = self.alg.dim();
        let mut proto = FDHopf {
            name: self.name.to_string(),
            alg: self.alg.clone(),
            comul: Vec::new(),
            counit: Vec::new(),
            antipode: Matrix::zeros(n, n),
        };
        let mut s_cols = Vec::with_capacity(n);
        for (a, word) in self.words.iter().enumerate() {
            let mut prod = self.alg.unit.clone();
            let mut delta = one_tensor(&self.alg);
            let mut eps = Scalar::one();
            let mut s = self.alg.unit.clone();
            for &w in word {
                prod = self.alg.mul(&prod, &self.alg.e(self.generators[w]));
                delta = proto.tensor_mul(&delta, &self.coproduct[w]);
                eps *= &self.counit[w];
                s = self.alg.mul(&self.antipode[w], &s);
            }
            if prod != self.alg.e(a) {
                return Err(FdError::axiom("basis word", &self.alg.basis[a]));
            }
            proto.comul.push(delta);
            proto.counit.push(eps);
            s_cols.push(s);
        }
        proto.antipode = Matrix::from_cols(n, &s_cols);
        proto.check()?;
        Ok(proto)
    }
}

fn one_tensor(alg: &FDAlgebra) -> Vector {
    let n = alg.dim();
    let mut out = zero_vec(n * n);
    for (i, u) in alg.unit.iter().enumerate() {
        for (j, v) in alg.unit.iter().enumerate() {
            out[i * n + j] = u * v;
        }
    }
    out
}

fn taft_name(i: usize, j: usize) -> String {
    let part = |s: &str, e: usize| match e {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}{e}"),
    };
    let s = format!("{}{}", part("g", i), part("x", j));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Taft algebra T_ℓ: g^ℓ = 1, x^ℓ = 0, xg = ζgx, Δg = g⊗g, Δx = x⊗1 + g⊗x.
/// Basis g^i x^j at index i + ℓj. ℓ = 2 is the Sweedler algebra over Q.
pub fn taft(l: usize) -> Result<FDHopf, FdError> {
    let (field, zeta) = if l == 2 {
        (FieldTag::Rational, Scalar::int(-1))
    } else {
        (FieldTag::Cyclo(l as u32), Scalar::zeta(l as u32))
    };
    let n = l * l;
    let idx = |i: usize, j: usize| i % l + l * j;
    let mut mul = vec![vec![zero_vec(n); n]; n];
    for (i, j, k, m) in quadruples(l) {
        if j + m < l {
            mul[idx(i, j)][idx(k, m)][idx(i + k, j + m)] = zeta.pow((j * k) as i64);
        }
    }
    let basis: Vec<String> = (0..n).map(|a| taft_name(a % l, a / l)).collect();
    let alg = FDAlgebra { field, basis, mul, unit: unit_vec(n, 0) };
    let (g, x) = (idx(1, 0), idx(0, 1));
    let ginv = idx(l - 1, 0);
    let mut dg = zero_vec(n * n);
    dg[g * n + g] = Scalar::one();
    let mut dx = zero_vec(n * n);
    dx[x * n] = Scalar::one();
    dx[g * n + x] = Scalar::one();
    let mut sx = zero_vec(n);
    sx[idx(l - 1, 1)] = Scalar::int(-1);
    let words = (0..n).map(|a| [vec![0; a % l], vec![1; a / l]].concat()).collect();
    let name = if l == 2 { "sweedler".to_string() } else { format!("taft-{l}") };
    GeneratedHopf {
        name: &name,
        alg,
        generators: vec![g, x],
        words,
        coproduct: vec![dg, dx],
        counit: vec![Scalar::one(), Scalar::zero()],
        antipode: vec![unit_vec(n, ginv), sx],
    }
    .build()
}

fn quadruples(l: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..l).flat_map(move |i| (0..l).flat_map(move |j| (0..l).flat_map(move |k| (0..l).map(move |m| (i, j, k, m)))))
}

pub fn sweedler() -> FDHopf {
    taft(2).expect("Sweedler algebra axioms")
}

/// Names accepted by [`by_name`].
pub fn catalog_names() -> Vec<String> {
    let mut out = vec!["k".to_string(), "sweedler".into(), "taft-3".into(), "taft-5".into()];
    for g in small_groups() {
        out.push(format!("k[{}]", g.name));
        out.push(format!("k^{}", g.name));
    }
    out
}

pub fn by_name(name: &str) -> Option<FDHopf> {
    match name {
        "k" => return Some(trivial()),
        "sweedler" => return Some(sweedler()),
        "taft-3" => return taft(3).ok(),
        "taft-5" => return taft(5).ok(),
        _ => {}
    }
    for g in small_groups() {
        if name == format!("k[{}]", g.name) {
            return Some(group_algebra(&g));
        }
        if name == format!("k^{}", g.name) {
            return Some(function_algebra(&g));
        }
    }
    None
}

/// Every catalog entry.
pub fn all() -> Vec<FDHopf> {
    catalog_names().iter().filter_map(|n| by_name(n)).collect()
}
