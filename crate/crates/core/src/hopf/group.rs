//! Polycyclic groups with infinite cyclic factors, multiplied by collection.
//!
//! Generators x_1, …, x_n with G_j = ⟨x_1, …, x_j⟩ and G_j = G_{j−1} ⋊ ⟨x_j⟩.
//! Elements are exponent vectors of the normal word x_1^{e_1} ⋯ x_n^{e_n}.
//! The data is the conjugation x_j x_i x_j⁻¹ (and its inverse) for i < j.

use std::collections::HashMap;

use super::HopfError;

pub type Elem = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolycyclicGroup {
    pub name: String,
    pub gen_names: Vec<String>,
    /// conj[j][i] = x_j x_i x_j⁻¹ for i < j.
    conj: Vec<Vec<Elem>>,
    /// conj_inv[j][i] = x_j⁻¹ x_i x_j for i < j.
    conj_inv: Vec<Vec<Elem>>,
    /// Consecutive ranges [start, end) whose sections G_end / G_start are free abelian.
    blocks: Vec<(usize, usize)>,
}

impl PolycyclicGroup {
    /// Validates that each conjugation is an automorphism with the given inverse
    /// and that every block section is normal, abelian, and acted on invertibly.
    pub fn new(
        name: &str,
        gen_names: Vec<String>,
        conj: Vec<Vec<Elem>>,
        conj_inv: Vec<Vec<Elem>>,
        blocks: Vec<(usize, usize)>,
    ) -> Result<Self, HopfError> {
        let n = gen_names.len();
        let bad = |m: String| Err(HopfError::NonInvertibleAction(m));
        if conj.len() != n || conj_inv.len() != n {
            return bad("conjugation table has the wrong size".into());
        }
        for j in 0..n {
            if conj[j].len() != j || conj_inv[j].len() != j {
                return bad(format!("row {j} of the conjugation table has the wrong length"));
            }
            for e in conj[j].iter().chain(&conj_inv[j]) {
                if e.len() != n || e[j..].iter().any(|&v| v != 0) {
                    return bad(format!("conjugates by {} must lie in the preceding subgroup", gen_names[j]));
                }
            }
        }
        let mut bstart = 0;
        for &(s, e) in &blocks {
            if s != bstart || e <= s || e > n {
                return bad("blocks must tile the generators in order".into());
            }
            bstart = e;
        }
        if bstart != n {
            return bad("blocks must cover every generator".into());
        }
        let g = PolycyclicGroup { name: name.into(), gen_names, conj, conj_inv, blocks };
        for j in 0..n {
            for i in 0..j {
                let x = g.gen_elem(i);
                if g.act(j, 1, &g.act(j, -1, &x)) != x || g.act(j, -1, &g.act(j, 1, &x)) != x {
                    return bad(format!("conjugation by {} has inconsistent inverse", g.gen_names[j]));
                }
                // φ_j must respect the relation x_k x_i x_k⁻¹ = conj[k][i] inside G_{j−1}
                for k in i + 1..j {
                    let (pi, pk) = (g.act(j, 1, &x), g.act(j, 1, &g.gen_elem(k)));
                    let lhs = g.mul(&g.mul(&pk, &pi), &g.inv(&pk));
                    let rhs = g.act(j, 1, &g.conj[k][i]);
                    if lhs != rhs {
                        return bad(format!("conjugation by {} is not an automorphism", g.gen_names[j]));
                    }
                }
            }
        }
        for (b, &(s, e)) in g.blocks.iter().enumerate() {
            for j in 0..n {
                for i in s..e {
                    let c = g.conjugate(j, &g.gen_elem(i));
                    if c[e..].iter().any(|&v| v != 0) {
                        return bad(format!("block {b} is not normal"));
                    }
                }
            }
            for i in s..e {
                for k in s..e {
                    let (a, c) = (g.gen_elem(i), g.gen_elem(k));
                    let comm = g.mul(&g.mul(&a, &c), &g.inv(&g.mul(&c, &a)));
                    if comm[s..].iter().any(|&v| v != 0) {
                        return bad(format!("block {b} section is not abelian"));
                    }
                }
            }
            for j in 0..n {
                let d = int_det(&g.block_matrix(j, b));
                if d.abs() != 1 {
                    return bad(format!("action of {} on block {b} has determinant {d}", g.gen_names[j]));
                }
            }
        }
        Ok(g)
    }

    pub fn rank(&self) -> usize {
        self.gen_names.len()
    }

    /// Hirsch length; every factor is infinite cyclic.
    pub fn hirsch_length(&self) -> usize {
        self.rank()
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn conj_table(&self) -> (&[Vec<Elem>], &[Vec<Elem>]) {
        (&self.conj, &self.conj_inv)
    }

    pub fn identity(&self) -> Elem {
        vec![0; self.rank()]
    }

    pub fn gen_elem(&self, i: usize) -> Elem {
        let mut e = self.identity();
        e[i] = 1;
        e
    }

    pub fn gen_inv_elem(&self, i: usize) -> Elem {
        let mut e = self.identity();
        e[i] = -1;
        e
    }

    /// Top nonzero level of an element (0 for the identity).
    fn top(e: &[i64]) -> usize {
        e.iter().rposition(|&v| v != 0).map_or(0, |p| p + 1)
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Elem {
        let j = Self::top(a).max(Self::top(b));
        let mut out = self.mul_level(a, b, j);
        out.resize(self.rank(), 0);
        out
    }

    /// Product inside G_j, both factors supported on the first j coordinates.
    fn mul_level(&self, a: &[i64], b: &[i64], j: usize) -> Elem {
        let n = self.rank();
        if j == 0 {
            return vec![0; n];
        }
        let (aj, bj) = (a[j - 1], b[j - 1]);
        let mut a0 = a.to_vec();
        a0[j - 1] = 0;
        let mut b0 = b.to_vec();
        b0[j - 1] = 0;
        let moved = self.act(j - 1, aj, &b0);
        let mut out = self.mul_level(&a0, &moved, j - 1);
        out[j - 1] = aj + bj;
        out
    }

    pub fn inv(&self, a: &[i64]) -> Elem {
        let j = Self::top(a);
        if j == 0 {
            return self.identity();
        }
        let aj = a[j - 1];
        let mut h = a.to_vec();
        h[j - 1] = 0;
        let hinv = self.inv(&h);
        let mut out = self.act(j - 1, -aj, &hinv);
        out[j - 1] = -aj;
        out
    }

    pub fn pow(&self, a: &[i64], e: i64) -> Elem {
        let base = if e < 0 { self.inv(a) } else { a.to_vec() };
        let mut acc = self.identity();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    /// φ_j^k(h) for h in G_{j} (the subgroup below generator j, 0-based).
    fn act(&self, j: usize, k: i64, h: &[i64]) -> Elem {
        let mut cur = h.to_vec();
        for _ in 0..k.unsigned_abs() {
            let table = if k > 0 { &self.conj[j] } else { &self.conj_inv[j] };
            let mut next = self.identity();
            for i in 0..j {
                if cur[i] != 0 {
                    next = self.mul(&next, &self.pow(&table[i], cur[i]));
                }
            }
            cur = next;
        }
        cur
    }

    /// x_j g x_j⁻¹.
    pub fn conjugate(&self, j: usize, g: &[i64]) -> Elem {
        let x = self.gen_elem(j);
        self.mul(&self.mul(&x, g), &self.gen_inv_elem(j))
    }

    /// Integer matrix of conjugation by x_j on the section of block b, columns
    /// indexed by the block's generators.
    pub fn block_matrix(&self, j: usize, b: usize) -> Vec<Vec<i64>> {
        let (s, e) = self.blocks[b];
        let mut m = vec![vec![0; e - s]; e - s];
        for i in s..e {
            let c = self.conjugate(j, &self.gen_elem(i));
            for r in s..e {
                m[r - s][i - s] = c[r];
            }
        }
        m
    }

    /// Π over blocks of det(conjugation by x_j on the block section).
    pub fn adjoint_trace(&self) -> Vec<i64> {
        (0..self.rank()).map(|j| (0..self.blocks.len()).map(|b| int_det(&self.block_matrix(j, b))).product()).collect()
    }

    /// Word lengths of all elements of length at most `radius`, by breadth-first search.
    pub fn ball(&self, radius: usize) -> HashMap<Elem, usize> {
        let mut dist = HashMap::new();
        dist.insert(self.identity(), 0);
        let mut frontier = vec![self.identity()];
        for r in 1..=radius {
            let mut next = Vec::new();
            for g in &frontier {
                for i in 0..self.rank() {
                    for s in [self.gen_elem(i), self.gen_inv_elem(i)] {
                        let h = self.mul(g, &s);
                        if !dist.contains_key(&h) {
                            dist.insert(h.clone(), r);
                            next.push(h);
                        }
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// Free abelian group Z^d.
    pub fn free_abelian(d: usize) -> Self {
        let names: Vec<String> = if d <= 3 { ["x", "y", "z"][..d].iter().map(|s| s.to_string()).collect() } else { (1..=d).map(|i| format!("x{i}")).collect() };
        let conj: Vec<Vec<Elem>> = (0..d).map(|j| (0..j).map(|i| unit(d, i, 1)).collect()).collect();
        PolycyclicGroup::new(&format!("Z^{d}"), names, conj.clone(), conj, vec![(0, d)]).unwrap()
    }

    /// Z ⋊ Z with t x t⁻¹ = x⁻¹; generators x, t.
    pub fn klein_bottle() -> Self {
        let conj = vec![vec![], vec![unit(2, 0, -1)]];
        PolycyclicGroup::new("Klein bottle group", vec!["x".into(), "t".into()], conj.clone(), conj, vec![(0, 1), (1, 2)]).unwrap()
    }

    /// Discrete Heisenberg group: generators z, x, y with y x y⁻¹ = x z, z central.
    pub fn heisenberg() -> Self {
        let conj = vec![vec![], vec![unit(3, 0, 1)], vec![unit(3, 0, 1), vec![1, 1, 0]]];
        let conj_inv = vec![vec![], vec![unit(3, 0, 1)], vec![unit(3, 0, 1), vec![-1, 1, 0]]];
        PolycyclicGroup::new("Heisenberg group", vec!["z".into(), "x".into(), "y".into()], conj, conj_inv, vec![(0, 1), (1, 2), (2, 3)]).unwrap()
    }
}

fn unit(n: usize, i: usize, v: i64) -> Elem {
    let mut e = vec![0; n];
    e[i] = v;
    e
}

/// Determinant of a small integer matrix by cofactor expansion.
pub fn int_det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &v)| v).collect()).collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * int_det(&minor)
            })
            .sum(),
    }
}
