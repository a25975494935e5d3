//! Integrals, modular characters, Nakayama automorphisms and Radford's formula.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{CycloScalar, FieldTag, Matrix, Poly, Rational, Scalar};

use super::hopf::{axpy, is_zero_vec, zero_vec, FDAlgebra, FDHopf, Vector};
use super::FdError;

/// Square matrix acting on coordinates; column a is the image of e_a.
pub type LinearAuto = Matrix;

fn integral_space(h: &FDHopf, left: bool) -> Vec<Vector> {
    let n = h.dim();
    let mut stacked = Matrix::zeros(0, n);
    for a in 0..n {
        let ea = h.alg.e(a);
        let m = if left { h.alg.left_mult(&ea) } else { h.alg.right_mult(&ea) };
        stacked = stacked.vstack(&m.sub(&Matrix::identity(n).scale(&h.counit[a])));
    }
    stacked.kernel()
}

/// Basis of {t : a·t = ε(a)t}.
pub fn left_integral_space(h: &FDHopf) -> Vec<Vector> {
    integral_space(h, true)
}

/// Basis of {t : t·a = ε(a)t}.
pub fn right_integral_space(h: &FDHopf) -> Vec<Vector> {
    integral_space(h, false)
}

pub fn left_integral(h: &FDHopf) -> Result<Vector, FdError> {
    one_dim(left_integral_space(h))
}

pub fn right_integral(h: &FDHopf) -> Result<Vector, FdError> {
    one_dim(right_integral_space(h))
}

fn one_dim(mut space: Vec<Vector>) -> Result<Vector, FdError> {
    if space.len() != 1 {
        return Err(FdError::NotUnimodularDimension(space.len()));
    }
    Ok(space.pop().unwrap())
}

/// π₀ with t·a = π₀(a)t, as values on the basis.
pub fn modular_character(h: &FDHopf) -> Result<Vector, FdError> {
    let t = left_integral(h)?;
    let pivot = t.iter().position(|c| !c.is_zero()).unwrap();
    let mut pi = Vec::with_capacity(h.dim());
    for a in 0..h.dim() {
        let ta = h.alg.mul(&t, &h.alg.e(a));
        let c = &ta[pivot] / &t[pivot];
        if ta.iter().zip(&t).any(|(x, y)| *x != &c * y) {
            return Err(FdError::NotCharacter);
        }
        pi.push(c);
    }
    if !h.is_character(&pi) {
        return Err(FdError::NotCharacter);
    }
    Ok(pi)
}

pub fn is_unimodular(h: &FDHopf) -> Result<bool, FdError> {
    Ok(modular_character(h)? == h.counit)
}

/// ξ = Ξˡ[π₀].
pub fn xi(h: &FDHopf) -> Result<LinearAuto, FdError> {
    Ok(h.winding_left(&modular_character(h)?))
}

/// φ = Ξʳ[π₀].
pub fn phi(h: &FDHopf) -> Result<LinearAuto, FdError> {
    Ok(h.winding_right(&modular_character(h)?))
}

/// The distinguished group-like: the character of the right structure on
/// the left integrals of the dual, read as an element of A.
pub fn distinguished_group_like(h: &FDHopf) -> Result<Vector, FdError> {
    modular_character(&h.dual())
}

/// The map ν with λ(ab) = λ(ν(b)·a), λ a left integral of the dual.
pub fn nakayama(h: &FDHopf) -> Result<LinearAuto, FdError> {
    let lambda = left_integral(&h.dual())?;
    let n = h.dim();
    let b = Matrix::from_fn(n, n, |i, j| dot(&lambda, &h.alg.mul[i][j]));
    // λ(e_a e_b) = Σ_c ν_cb λ(e_c e_a), so B = Bᵀν
    let nu = b.transpose().inverse().ok_or(FdError::DegenerateForm)?.mul(&b);
    if !h.alg.is_algebra_map(&nu) {
        return Err(FdError::axiom("ν multiplicative", &h.name));
    }
    Ok(nu)
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { acc + a * b })
}

/// Seeded search for a unit in a subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitSearch {
    pub seed: u64,
    pub budget: usize,
}

impl Default for UnitSearch {
    fn default() -> Self {
        UnitSearch { seed: 0, budget: 64 }
    }
}

/// A unit u with f(a)·u = u·g(a) for all a, so f = Ad_u∘g.
pub fn equal_up_to_inner(alg: &FDAlgebra, f: &LinearAuto, g: &LinearAuto, search: &UnitSearch) -> Option<Vector> {
    let n = alg.dim();
    if f == g {
        return Some(alg.unit.clone());
    }
    let mut stacked = Matrix::zeros(0, n);
    for a in alg.generators() {
        let fa = f.col(a);
        let ga = g.col(a);
        stacked = stacked.vstack(&alg.left_mult(&fa).sub(&alg.right_mult(&ga)));
    }
    let space = stacked.kernel();
    if space.is_empty() {
        return None;
    }
    for v in &space {
        if alg.is_unit(v) {
            return Some(v.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    for _ in 0..search.budget {
        let mut u = zero_vec(n);
        for v in &space {
            axpy(&mut u, &Scalar::int(rng.gen_range(-3..=3)), v);
        }
        if !is_zero_vec(&u) && alg.is_unit(&u) {
            return Some(u);
        }
    }
    None
}

/// Smallest n ≤ bound with ξⁿ = id.
pub fn integral_order(h: &FDHopf, bound: usize) -> Result<Option<usize>, FdError> {
    let x = xi(h)?;
    let mut p = x.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return Ok(Some(k));
        }
        p = p.mul(&x);
    }
    Ok(None)
}

/// Smallest n ≤ bound with νⁿ inner.
pub fn nakayama_order(h: &FDHopf, bound: usize, search: &UnitSearch) -> Result<Option<usize>, FdError> {
    let nu = nakayama(h)?;
    let id = Matrix::identity(h.dim());
    let mut p = nu.clone();
    for k in 1..=bound {
        if equal_up_to_inner(&h.alg, &p, &id, search).is_some() {
            return Ok(Some(k));
        }
        p = p.mul(&nu);
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct RadfordReport {
    pub pi0: Vector,
    pub group_like: Vector,
    pub xi: LinearAuto,
    pub phi: LinearAuto,
    pub gamma: LinearAuto,
    pub s4: LinearAuto,
    /// Basis element where S⁴ and γ∘φ∘ξ⁻¹ differ.
    pub failure: Option<String>,
}

impl RadfordReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// S⁴ = γ∘φ∘ξ⁻¹ with γ(a) = g⁻¹·a·g, g the distinguished group-like.
pub fn radford_s4_check(h: &FDHopf) -> Result<RadfordReport, FdError> {
    let pi0 = modular_character(h)?;
    let xi = h.winding_left(&pi0);
    let phi = h.winding_right(&pi0);
    let g = distinguished_group_like(h)?;
    let ginv = h.alg.inverse(&g).ok_or(FdError::NotCharacter)?;
    let gamma = h.alg.inner(&ginv).ok_or(FdError::NotCharacter)?;
    let xi_inv = xi.inverse().ok_or_else(|| FdError::axiom("ξ invertible", &h.name))?;
    let rhs = gamma.mul(&phi).mul(&xi_inv);
    let s2 = h.s_squared();
    let s4 = s2.mul(&s2);
    let failure = (0..h.dim()).find(|&a| s4.col(a) != rhs.col(a)).map(|a| h.alg.basis[a].clone());
    Ok(RadfordReport { pi0, group_like: g, xi, phi, gamma, s4, failure })
}

/// Characteristic polynomial coefficients c_0..c_n (monic) by Faddeev–LeVerrier.
pub fn char_poly(m: &Matrix) -> Vec<Scalar> {
    let n = m.rows();
    let mut c = vec![Scalar::zero(); n + 1];
    c[n] = Scalar::one();
    let mut mk = Matrix::zeros(n, n);
    let id = Matrix::identity(n);
    for k in 1..=n {
        mk = m.mul(&mk).add(&id.scale(&c[n + 1 - k]));
        let am = m.mul(&mk);
        let tr = (0..n).fold(Scalar::zero(), |acc, i| acc + am.get(i, i));
        c[n - k] = -(tr / Scalar::int(k as i64));
    }
    c
}

/// Roots in the field: all rational roots over Q; over Q(ζ_ℓ), the roots of
/// the form c·ζʲ with c rational.
pub fn roots_in_field(coeffs: &[Scalar], field: FieldTag) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    let mut push = |r: Scalar| {
        if !out.contains(&r) {
            out.push(r)
        }
    };
    match field {
        FieldTag::Cyclo(level) => {
            for j in 0..level as i64 {
                let twisted: Vec<CycloScalar> = coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| match Scalar::zeta_pow(level, j * k as i64) * c {
                        Scalar::Rat(r) => CycloScalar::constant(r, level),
                        Scalar::Cyclo(z) => z,
                        Scalar::Func(_) => unreachable!("Q(q) coefficient in a cyclotomic computation"),
                    })
                    .collect();
                let width = twisted.iter().filter_map(|z| z.rep().degree()).max().map_or(0, |d| d + 1);
                let mut g = Poly::zero();
                for m in 0..width {
                    let comp = Poly::from_coeffs(twisted.iter().map(|z| z.rep().coeff(m)).collect());
                    g = g.gcd(&comp);
                }
                for r in g.rational_roots() {
                    push(Scalar::Rat(r) * Scalar::zeta_pow(level, j));
                }
            }
        }
        _ => {
            let p = Poly::from_coeffs(coeffs.iter().map(|c| c.as_rational().cloned().unwrap_or_else(Rational::default)).collect());
            for r in p.rational_roots() {
                push(Scalar::Rat(r));
            }
        }
    }
    out
}

/// Group-like elements of A, found as characters of A* by joint
/// eigenvector elimination over algebra generators of A*.
pub fn group_likes(h: &FDHopf) -> Vec<Vector> {
    let b = h.dual();
    let n = h.dim();
    let gens = b.alg.generators();
    let ops: Vec<(Matrix, Vec<Scalar>)> = gens
        .iter()
        .map(|&f| {
            let lt = b.alg.left_mult(&b.alg.e(f)).transpose();
            let ev = roots_in_field(&char_poly(&lt), h.field());
            (lt, ev)
        })
        .collect();
    let mut spaces: Vec<Vec<Vector>> = vec![(0..n).map(|i| b.alg.e(i)).collect()];
    for (lt, evs) in &ops {
        let mut next = Vec::new();
        for space in &spaces {
            let basis = Matrix::from_cols(n, space);
            for ev in evs {
                let shifted = lt.sub(&Matrix::identity(n).scale(ev)).mul(&basis);
                let ker = shifted.kernel();
                if !ker.is_empty() {
                    next.push(ker.iter().map(|c| basis.mul_vec(c)).collect());
                }
            }
        }
        spaces = next;
    }
    let mut out: Vec<Vector> = Vec::new();
    for space in spaces {
        for v in space {
            let at_one = dot(&v, &b.alg.unit);
            if at_one.is_zero() {
                continue;
            }
            let inv = at_one.inv();
            let x: Vector = v.iter().map(|c| c * &inv).collect();
            if h.is_group_like(&x) && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out.sort_by_cached_key(|v| (v.iter().position(|c| !c.is_zero()), v.iter().map(|c| c.to_string()).collect::<Vec<_>>()));
    out
}

/// One named check of the bimodule identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub location: Option<String>,
}

#[derive(Clone, Debug)]
pub struct AdjointReport {
    pub sigma: LinearAuto,
    pub checks: Vec<Check>,
}

impl AdjointReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.location.is_none())
    }
}

/// Verifies k_π ⊗_A L(A^e) ≅ ¹A^σ with σ = Ξ[π]S².
///
/// M = A⊗N with a·(x⊗n) = Σ a₁x ⊗ n S(a₂), left B-action on N and right
/// B-action on the first factor. Φ(x⊗n) = Σ x₁ ⊗ n S²(x₂) identifies M with
/// A⊗ₖN, so the quotient map is Ψ(x⊗n) = Σ π(x₁) n S²(x₂) with Ψ(1⊗b) = b.
pub fn adjoint_tensor_check(h: &FDHopf, pi: &[Scalar]) -> Result<AdjointReport, FdError> {
    if !h.is_character(pi) {
        return Err(FdError::NotCharacter);
    }
    let n = h.dim();
    let alg = &h.alg;
    let s2 = h.s_squared();
    let sigma = h.winding_left(pi).mul(&s2);
    let name = |a: usize| alg.basis[a].clone();
    let pair = |x: usize, y: usize| format!("{}⊗{}", name(x), name(y));
    let gens = alg.generators();

    // Images of basis pairs, flattened as x·n + y.
    let act = |a: usize, x: usize, y: usize| -> Vector {
        let mut out = zero_vec(n * n);
        for (b, c, k) in h.coproduct_terms(a) {
            let left = &alg.mul[b][x];
            let right = alg.mul(&alg.e(y), &h.antipode.col(c));
            add_outer(&mut out, &k, left, &right, n);
        }
        out
    };
    let phi_basis = |x: usize, y: usize| -> Vector {
        let mut out = zero_vec(n * n);
        for (b, c, k) in h.coproduct_terms(x) {
            let right = alg.mul(&alg.e(y), &s2.col(c));
            add_outer(&mut out, &k, &alg.e(b), &right, n);
        }
        out
    };
    let phi_inv_basis = |x: usize, y: usize| -> Vector {
        let mut out = zero_vec(n * n);
        for (b, c, k) in h.coproduct_terms(x) {
            let right = alg.mul(&alg.e(y), &h.antipode.col(c));
            add_outer(&mut out, &k, &alg.e(b), &right, n);
        }
        out
    };
    let apply = |f: &dyn Fn(usize, usize) -> Vector, v: &[Scalar]| -> Vector {
        let mut out = zero_vec(n * n);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &f(i / n, i % n));
            }
        }
        out
    };
    let psi = |v: &[Scalar]| -> Vector {
        let img = apply(&phi_basis, v);
        let mut out = zero_vec(n);
        for (i, c) in img.iter().enumerate() {
            if !c.is_zero() {
                out[i % n] += &(c * &pi[i / n]);
            }
        }
        out
    };

    let mut checks = Vec::new();
    let mut record = |name: &str, loc: Option<String>| checks.push(Check { name: name.into(), location: loc });

    let mut loc = None;
    'inv: for x in 0..n {
        for y in 0..n {
            let e = pair_vec(x, y, n);
            if apply(&phi_basis, &phi_inv_basis(x, y)) != e || apply(&phi_inv_basis, &phi_basis(x, y)) != e {
                loc = Some(pair(x, y));
                break 'inv;
            }
        }
    }
    record("Φ invertible", loc);

    let mut loc = None;
    'lin: for &a in &gens {
        for x in 0..n {
            for y in 0..n {
                let lhs = apply(&phi_basis, &act(a, x, y));
                let mut rhs = zero_vec(n * n);
                let img = phi_basis(x, y);
                for (i, c) in img.iter().enumerate() {
                    if !c.is_zero() {
                        add_outer(&mut rhs, c, &alg.mul[a][i / n], &alg.e(i % n), n);
                    }
                }
                if lhs != rhs {
                    loc = Some(format!("{} acting on {}", name(a), pair(x, y)));
                    break 'lin;
                }
            }
        }
    }
    record("Φ is A-linear", loc);

    let mut loc = None;
    'bal: for &a in &gens {
        for x in 0..n {
            for y in 0..n {
                let lhs = psi(&act(a, x, y));
                let rhs: Vector = psi(&pair_vec(x, y, n)).iter().map(|c| c * &pi[a]).collect();
                if lhs != rhs {
                    loc = Some(format!("{} acting on {}", name(a), pair(x, y)));
                    break 'bal;
                }
            }
        }
    }
    record("Ψ factors through k_π", loc);

    let mut loc = None;
    'left: for &b in &gens {
        for x in 0..n {
            for y in 0..n {
                let mut moved = zero_vec(n * n);
                add_outer(&mut moved, &Scalar::one(), &alg.e(x), &alg.mul[b][y], n);
                if psi(&moved) != alg.mul(&alg.e(b), &psi(&pair_vec(x, y, n))) {
                    loc = Some(format!("{} on {}", name(b), pair(x, y)));
                    break 'left;
                }
            }
        }
    }
    record("left B-action", loc);

    let mut loc = None;
    'right: for &c in &gens {
        let sc = sigma.col(c);
        for x in 0..n {
            for y in 0..n {
                let mut moved = zero_vec(n * n);
                add_outer(&mut moved, &Scalar::one(), &alg.mul[x][c], &alg.e(y), n);
                if psi(&moved) != alg.mul(&psi(&pair_vec(x, y, n)), &sc) {
                    loc = Some(format!("{} on {}", name(c), pair(x, y)));
                    break 'right;
                }
            }
        }
    }
    record("right B-action twisted by σ", loc);

    let unit_idx: Vec<(usize, Scalar)> = alg.unit.iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let loc = (0..n)
        .find(|&b| {
            let mut one_b = zero_vec(n * n);
            for (u, c) in &unit_idx {
                one_b[u * n + b] += c;
            }
            psi(&one_b) != alg.e(b)
        })
        .map(|b| format!("1⊗{}", name(b)));
    record("Ψ(1⊗b) = b", loc);

    Ok(AdjointReport { sigma, checks })
}

fn pair_vec(x: usize, y: usize, n: usize) -> Vector {
    let mut v = zero_vec(n * n);
    v[x * n + y] = Scalar::one();
    v
}

fn add_outer(out: &mut [Scalar], k: &Scalar, left: &[Scalar], right: &[Scalar], n: usize) {
    for (i, l) in left.iter().enumerate() {
        if l.is_zero() {
            continue;
        }
        let kl = k * l;
        for (j, r) in right.iter().enumerate() {
            if !r.is_zero() {
                out[i * n + j] += &(&kl * r);
            }
        }
    }
}
