//! Finite-dimensional algebras and Hopf algebras given by structure tensors.

use crate::exact::{FieldTag, Matrix, Scalar};

use super::FdError;

pub type Vector = Vec<Scalar>;

/// Multiplication tensor `mul[a][b]` = e_a·e_b in coordinates, and the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDAlgebra {
    pub field: FieldTag,
    pub basis: Vec<String>,
    pub mul: Vec<Vec<Vector>>,
    pub unit: Vector,
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += &(c * b);
        }
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

impl FDAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn e(&self, a: usize) -> Vector {
        unit_vec(self.dim(), a)
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for (b, vb) in v.iter().enumerate() {
                if !vb.is_zero() {
                    axpy(&mut out, &(ua * vb), &self.mul[a][b]);
                }
            }
        }
        out
    }

    /// Matrix of x ↦ u·x.
    pub fn left_mult(&self, u: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|b| self.mul(u, &self.e(b))).collect();
        Matrix::from_cols(self.dim(), &cols)
    }

    /// Matrix of x ↦ x·u.
    pub fn right_mult(&self, u: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|b| self.mul(&self.e(b), u)).collect();
        Matrix::from_cols(self.dim(), &cols)
    }

    pub fn check(&self) -> Result<(), FdError> {
        let n = self.dim();
        for a in 0..n {
            let ea = self.e(a);
            if self.mul(&self.unit, &ea) != ea || self.mul(&ea, &self.unit) != ea {
                return Err(FdError::axiom("unit", &self.basis[a]));
            }
            for b in 0..n {
                for c in 0..n {
                    let l = self.mul(&self.mul[a][b], &self.e(c));
                    let r = self.mul(&ea, &self.mul[b][c]);
                    if l != r {
                        return Err(FdError::axiom("associativity", &format!("{}·{}·{}", self.basis[a], self.basis[b], self.basis[c])));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn inverse(&self, u: &[Scalar]) -> Option<Vector> {
        self.left_mult(u).solve(&self.unit)
    }

    pub fn is_unit(&self, u: &[Scalar]) -> bool {
        self.left_mult(u).rank() == self.dim()
    }

    /// Basis of Z(A).
    pub fn center(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut stacked = Matrix::zeros(0, n);
        for a in self.generators() {
            let ea = self.e(a);
            stacked = stacked.vstack(&self.right_mult(&ea).sub(&self.left_mult(&ea)));
        }
        stacked.kernel()
    }

    /// Basis indices that generate A as an algebra, chosen greedily.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.dim();
        let mut gens: Vec<usize> = Vec::new();
        let mut span = Matrix::from_cols(n, std::slice::from_ref(&self.unit)).transpose();
        for a in 0..n {
            if span.rank() == n {
                break;
            }
            if span.vstack(&Matrix::from_rows(vec![self.e(a)])).rank() == span.rank() {
                continue;
            }
            gens.push(a);
            span = self.subalgebra(&gens);
        }
        gens
    }

    /// Rows spanning the subalgebra generated by the given basis elements.
    fn subalgebra(&self, gens: &[usize]) -> Matrix {
        let n = self.dim();
        let mut rows = vec![self.unit.clone()];
        let mut frontier = rows.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for &g in gens {
                    let w = self.mul(v, &self.e(g));
                    let mut cand = rows.clone();
                    cand.push(w.clone());
                    if Matrix::from_rows(cand).rank() > Matrix::from_rows(rows.clone()).rank() {
                        rows.push(w.clone());
                        next.push(w);
                    }
                }
            }
            frontier = next;
            if rows.len() == n {
                break;
            }
        }
        Matrix::from_rows(rows)
    }

    /// Whether the matrix (columns = images of basis vectors) is multiplicative and unital.
    pub fn is_algebra_map(&self, m: &Matrix) -> bool {
        let n = self.dim();
        if m.mul_vec(&self.unit) != self.unit {
            return false;
        }
        let imgs: Vec<Vector> = (0..n).map(|a| m.col(a)).collect();
        (0..n).all(|a| (0..n).all(|b| m.mul_vec(&self.mul[a][b]) == self.mul(&imgs[a], &imgs[b])))
    }

    /// Conjugation a ↦ u·a·u⁻¹.
    pub fn inner(&self, u: &[Scalar]) -> Option<Matrix> {
        let ui = self.inverse(u)?;
        Some(self.left_mult(u).mul(&self.right_mult(&ui)))
    }
}

/// Coproduct stored as `comul[a][b·n + c]` = coefficient of e_b ⊗ e_c in Δ(e_a);
/// the antipode matrix has S(e_a) as column a.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDHopf {
    pub name: String,
    pub alg: FDAlgebra,
    pub comul: Vec<Vector>,
    pub counit: Vector,
    pub antipode: Matrix,
}

impl FDHopf {
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> FieldTag {
        self.alg.field
    }

    /// Nonzero terms (b, c, coefficient) of Δ(e_a).
    pub fn coproduct_terms(&self, a: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        self.comul[a].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i / n, i % n, c.clone())).collect()
    }

    /// Δ(u) in A⊗A, flattened.
    pub fn coproduct(&self, u: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n * n);
        for (a, ua) in u.iter().enumerate() {
            axpy(&mut out, ua, &self.comul[a]);
        }
        out
    }

    pub fn counit_of(&self, u: &[Scalar]) -> Scalar {
        u.iter().zip(&self.counit).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn s(&self, u: &[Scalar]) -> Vector {
        self.antipode.mul_vec(u)
    }

    /// Product in A⊗A.
    pub fn tensor_mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n * n);
        let nz = |w: &[Scalar]| w.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i / n, i % n, c.clone())).collect::<Vec<_>>();
        let (a, b) = (nz(u), nz(v));
        for (a1, a2, c) in &a {
            for (b1, b2, d) in &b {
                let cd = c * d;
                let (l, r) = (&self.alg.mul[*a1][*b1], &self.alg.mul[*a2][*b2]);
                for (i, li) in l.iter().enumerate() {
                    if li.is_zero() {
                        continue;
                    }
                    let f = &cd * li;
                    for (j, rj) in r.iter().enumerate() {
                        if !rj.is_zero() {
                            out[i * n + j] += &(&f * rj);
                        }
                    }
                }
            }
        }
        out
    }

    /// Every Hopf axiom on basis elements.
    pub fn check(&self) -> Result<(), FdError> {
        self.alg.check()?;
        let n = self.dim();
        let name = |a: usize| self.alg.basis[a].clone();
        for a in 0..n {
            let terms = self.coproduct_terms(a);
            // (Δ⊗id)Δ = (id⊗Δ)Δ, flattened over n³
            let mut l = zero_vec(n * n * n);
            let mut r = zero_vec(n * n * n);
            for (b, c, k) in &terms {
                for (i, v) in self.comul[*b].iter().enumerate() {
                    if !v.is_zero() {
                        l[i * n + c] += &(k * v);
                    }
                }
                for (i, v) in self.comul[*c].iter().enumerate() {
                    if !v.is_zero() {
                        r[b * n * n + i] += &(k * v);
                    }
                }
            }
            if l != r {
                return Err(FdError::axiom("coassociativity", &name(a)));
            }
            let mut left = zero_vec(n);
            let mut right = zero_vec(n);
            let mut sl = zero_vec(n);
            let mut sr = zero_vec(n);
            for (b, c, k) in &terms {
                left[*c] += &(k * &self.counit[*b]);
                right[*b] += &(k * &self.counit[*c]);
                axpy(&mut sl, k, &self.alg.mul(&self.antipode.col(*b), &self.alg.e(*c)));
                axpy(&mut sr, k, &self.alg.mul(&self.alg.e(*b), &self.antipode.col(*c)));
            }
            if left != self.alg.e(a) || right != self.alg.e(a) {
                return Err(FdError::axiom("counit", &name(a)));
            }
            let eps: Vector = self.alg.unit.iter().map(|u| u * &self.counit[a]).collect();
            if sl != eps || sr != eps {
                return Err(FdError::axiom("antipode", &name(a)));
            }
            for b in 0..n {
                let prod = &self.alg.mul[a][b];
                if self.coproduct(prod) != self.tensor_mul(&self.comul[a], &self.comul[b]) {
                    return Err(FdError::axiom("Δ multiplicative", &format!("{}·{}", name(a), name(b))));
                }
                if self.counit_of(prod) != &self.counit[a] * &self.counit[b] {
                    return Err(FdError::axiom("ε multiplicative", &format!("{}·{}", name(a), name(b))));
                }
            }
        }
        if self.coproduct(&self.alg.unit) != self.one_tensor() || !self.counit_of(&self.alg.unit).is_one() {
            return Err(FdError::axiom("unital", "1"));
        }
        if self.antipode.inverse().is_none() {
            return Err(FdError::SingularAntipode);
        }
        Ok(())
    }

    fn one_tensor(&self) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n * n);
        for (i, u) in self.alg.unit.iter().enumerate() {
            for (j, v) in self.alg.unit.iter().enumerate() {
                out[i * n + j] = u * v;
            }
        }
        out
    }

    /// Dual Hopf algebra on the dual basis.
    pub fn dual(&self) -> FDHopf {
        let n = self.dim();
        let mul = (0..n).map(|a| (0..n).map(|b| (0..n).map(|c| self.comul[c][a * n + b].clone()).collect()).collect()).collect();
        let comul = (0..n).map(|a| (0..n * n).map(|i| self.alg.mul[i / n][i % n][a].clone()).collect()).collect();
        let basis = self.alg.basis.iter().map(|b| dual_name(b)).collect();
        FDHopf {
            name: dual_name(&self.name),
            alg: FDAlgebra { field: self.alg.field, basis, mul, unit: self.counit.clone() },
            comul,
            counit: self.alg.unit.clone(),
            antipode: self.antipode.transpose(),
        }
    }

    /// Ξˡ[π]: a ↦ Σ π(a₁)a₂, for π given by its values on the basis.
    pub fn winding_left(&self, pi: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|a| {
                let mut v = zero_vec(n);
                for (b, c, k) in self.coproduct_terms(a) {
                    v[c] += &(&k * &pi[b]);
                }
                v
            })
            .collect();
        Matrix::from_cols(n, &cols)
    }

    /// Ξʳ[π]: a ↦ Σ a₁π(a₂).
    pub fn winding_right(&self, pi: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|a| {
                let mut v = zero_vec(n);
                for (b, c, k) in self.coproduct_terms(a) {
                    v[b] += &(&k * &pi[c]);
                }
                v
            })
            .collect();
        Matrix::from_cols(n, &cols)
    }

    pub fn s_squared(&self) -> Matrix {
        self.antipode.mul(&self.antipode)
    }

    /// Whether the covector is multiplicative and unital.
    pub fn is_character(&self, pi: &[Scalar]) -> bool {
        let n = self.dim();
        let ev = |v: &[Scalar]| v.iter().zip(pi).fold(Scalar::zero(), |acc, (a, b)| acc + a * b);
        ev(&self.alg.unit).is_one() && (0..n).all(|a| (0..n).all(|b| ev(&self.alg.mul[a][b]) == &pi[a] * &pi[b]))
    }

    pub fn is_group_like(&self, x: &[Scalar]) -> bool {
        let n = self.dim();
        let mut xx = zero_vec(n * n);
        for (i, a) in x.iter().enumerate() {
            for (j, b) in x.iter().enumerate() {
                xx[i * n + j] = a * b;
            }
        }
        self.counit_of(x).is_one() && self.coproduct(x) == xx
    }
}

fn dual_name(s: &str) -> String {
    match s.strip_suffix('*') {
        Some(t) => t.to_string(),
        None => format!("{s}*"),
    }
}
