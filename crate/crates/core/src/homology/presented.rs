//! Homological integrals, twisted Hochschild (co)homology, zero-degree terms,
//! duality tables and invariant reports for presented Hopf algebras.

use std::collections::HashMap;

use serde::Serialize;

use super::coeff::{twisted_bimodule_coefficients, CoefficientModule, TwistSpec};
use super::complex::{resolution_for, FreeComplex, PolyMatrix, ResolutionKind, Side};
use super::engine::{Direction, Engine, Layers};
use super::{HomologyError, TruncatedDims};
use crate::descent::nakayama_presented;
use crate::hopf::{char_antipode_dual, compose, s_minus_squared, winding_left, AlgebraMap, Character, HopfPresentation};
use crate::exact::{Matrix, Scalar};
use crate::rewrite::NCPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralReport {
    pub character: Character,
    pub degree: usize,
    pub resolution: ResolutionKind,
    /// Ext^i_A(k, A) in truncation.
    pub ext: TruncatedDims,
}

fn diffs(res: &FreeComplex) -> Result<&[PolyMatrix], HomologyError> {
    res.poly_diffs().ok_or_else(|| HomologyError::Complex("expected a presented complex".into()))
}

/// Ext^•_A(k, A) from Hom_A(P, A) and π₀ from the right action on the
/// top class: Ext^d = A / Σ_J D_J A, and g ≡ π₀(g)·1 there.
pub fn homological_integral(h: &HopfPresentation, res: &FreeComplex, n: usize, w: usize) -> Result<IntegralReport, HomologyError> {
    let d = res.length();
    let module = CoefficientModule::left_regular(h);
    let mut engine = Engine::new(&h.algebra, &res.ranks, diffs(res)?, &module, Direction::Cochains);
    let (ext, echelons) = engine.truncated_keep(n, w);
    for i in 0..=d {
        if !ext.certified[i] {
            return Err(HomologyError::TruncationInconclusive { degree: i, truncation: n, window: w });
        }
    }
    for i in 0..d {
        if ext.value(i) != 0 {
            return Err(HomologyError::LowerExtNonzero { degree: i, dims: ext.dims[i].clone() });
        }
    }
    if ext.value(d) != 1 {
        return Err(HomologyError::TopNotOneDimensional { degree: d, dims: ext.dims[d].clone() });
    }
    let top = &echelons[d];
    let one = top.reduce(engine.vector(d, 0, &NCPoly::one()));
    let Some((p, c1)) = one.lead().map(|(p, c)| (p, c.clone())) else {
        return Err(HomologyError::TopNotOneDimensional { degree: d, dims: ext.dims[d].clone() });
    };
    let mut values = Vec::with_capacity(h.ngens());
    for g in 0..h.ngens() {
        let r = top.reduce(engine.vector(d, 0, &h.nf(&NCPoly::gen(g))));
        let v = &r.get(p) / &c1;
        if r != one.scale(&v) {
            return Err(HomologyError::TruncationInconclusive { degree: d, truncation: n, window: w });
        }
        values.push(v);
    }
    let character = Character::new(h, values)?;
    Ok(IntegralReport { character, degree: d, resolution: res.kind, ext })
}

/// Each generator must map into filtration degree ≤ 1.
fn check_filtration(h: &HopfPresentation, spec: &TwistSpec) -> Result<(), HomologyError> {
    let mut layers = Layers::new(&h.algebra);
    for (which, map) in [("sigma", &spec.sigma), ("tau", &spec.tau)] {
        for (g, p) in map.images.iter().enumerate() {
            if layers.poly_degree(p) > 1 {
                return Err(HomologyError::FiltrationIncompatible(format!("{which}({}) = {}", h.names()[g], h.fmt(p))));
            }
        }
    }
    Ok(())
}

/// H_•(A, ^σA^τ) = Tor^A_•((^σA^τ)′, k) in truncation.
pub fn hochschild_homology(h: &HopfPresentation, res: &FreeComplex, spec: &TwistSpec, n: usize, w: usize) -> Result<TruncatedDims, HomologyError> {
    check_filtration(h, spec)?;
    let module = twisted_bimodule_coefficients(h, spec, Side::Right)?;
    Ok(Engine::new(&h.algebra, &res.ranks, diffs(res)?, &module, Direction::Chains).truncated(n, w))
}

/// H^•(A, ^σA^τ) = Ext^•_A(k, L(^σA^τ)) in truncation.
pub fn hochschild_cohomology(h: &HopfPresentation, res: &FreeComplex, spec: &TwistSpec, n: usize, w: usize) -> Result<TruncatedDims, HomologyError> {
    check_filtration(h, spec)?;
    let module = twisted_bimodule_coefficients(h, spec, Side::Left)?;
    Ok(Engine::new(&h.algebra, &res.ranks, diffs(res)?, &module, Direction::Cochains).truncated(n, w))
}

/// H_•(A, ^σA) with the family's resolution.
pub fn twisted_hochschild_homology(h: &HopfPresentation, sigma: &AlgebraMap, n: usize, w: usize) -> Result<TruncatedDims, HomologyError> {
    let res = resolution_for(h)?;
    hochschild_homology(h, &res, &TwistSpec::left(h, sigma.clone()), n, w)
}

/// H^•(A, ^σA) with the family's resolution.
pub fn twisted_hochschild_cohomology(h: &HopfPresentation, sigma: &AlgebraMap, n: usize, w: usize) -> Result<TruncatedDims, HomologyError> {
    let res = resolution_for(h)?;
    hochschild_cohomology(h, &res, &TwistSpec::left(h, sigma.clone()), n, w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroDegree {
    /// Z(M) = {m : a·m = m·a}.
    pub center: Vec<usize>,
    /// M / [A, M].
    pub coinvariants: Vec<usize>,
    pub certified: bool,
}

/// Z(M) and M/[A, M] for M = ^σA^τ directly from commutators with generators.
pub fn zero_degree(h: &HopfPresentation, spec: &TwistSpec, n: usize, w: usize) -> Result<ZeroDegree, HomologyError> {
    check_filtration(h, spec)?;
    let k = h.ngens();
    let ranks = vec![1, k];
    let d: Vec<PolyMatrix> = vec![(0..k).map(|g| vec![NCPoly::gen(g)]).collect()];
    let left = CoefficientModule::commutators(h, spec, Side::Left);
    let z = Engine::new(&h.algebra, &ranks, &d, &left, Direction::Cochains).position(0, n, w);
    let right = CoefficientModule::commutators(h, spec, Side::Right);
    let c = Engine::new(&h.algebra, &ranks, &d, &right, Direction::Chains).truncated(n, w);
    Ok(ZeroDegree { center: z.cycles, coinvariants: c.dims[0].clone(), certified: c.certified[0] })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityRow {
    pub i: usize,
    pub cohomology: Vec<usize>,
    pub homology: Vec<usize>,
    pub certified: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub d: usize,
    /// The twist applied on the homology side.
    pub homology_twist: String,
    pub rows: Vec<DualityRow>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}

/// ξ⁻¹∘S⁻² for the homological π₀.
fn xi_inv_s_minus_two(h: &HopfPresentation, pi0: &Character) -> Result<AlgebraMap, HomologyError> {
    let xi_inv = winding_left(h, &char_antipode_dual(h, pi0))?;
    let sm2 = s_minus_squared(h)?;
    Ok(compose(h, &xi_inv, &sm2))
}

/// H^i(A, M) against H_{d−i}(A, ^{ξ⁻¹S⁻²}M) for M = ^σA^τ, table by table.
pub fn duality_check(h: &HopfPresentation, spec: &TwistSpec, n: usize, w: usize) -> Result<DualityReport, HomologyError> {
    let res = resolution_for(h)?;
    let pi0 = homological_integral(h, &res, n, w)?.character;
    let alpha = xi_inv_s_minus_two(h, &pi0)?;
    let other = TwistSpec { sigma: compose(h, &spec.sigma, &alpha), tau: spec.tau.clone() };
    let coh = hochschild_cohomology(h, &res, spec, n, w)?;
    let hom = hochschild_homology(h, &res, &other, n, w)?;
    let d = res.length();
    let rows = (0..=d)
        .map(|i| {
            let certified = coh.certified[i] && hom.certified[d - i];
            let (c, m) = (coh.dims[i].clone(), hom.dims[d - i].clone());
            DualityRow { i, agree: certified && c == m, cohomology: c, homology: m, certified }
        })
        .collect();
    Ok(DualityReport { d, homology_twist: other.describe(h), rows })
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantReport {
    pub algebra: String,
    /// Length of the resolution used: the global dimension.
    pub d: usize,
    pub pi0: Option<Character>,
    pub nu: Option<AlgebraMap>,
    /// H_d(A, A^ν), whose nonvanishing witnesses THdim ≥ d.
    pub thdim_witness: Option<TruncatedDims>,
    /// H^d(A, ^νA), whose nonvanishing witnesses THcodim ≥ d.
    pub thcodim_witness: Option<TruncatedDims>,
    /// Untwisted H_d(A, A) and H^d(A, A).
    pub hdim_top: Option<TruncatedDims>,
    pub hcodim_top: Option<TruncatedDims>,
    /// A regular m with ν(g)·m = m·g for every generator g, if one of degree ≤ 2 exists.
    pub nu_normal_element: Option<String>,
    /// Fields that could not be computed, with the reason.
    pub failures: Vec<String>,
}

impl InvariantReport {
    pub fn thdim_lower(&self) -> Option<usize> {
        witnessed(&self.thdim_witness, self.d)
    }

    pub fn thcodim_lower(&self) -> Option<usize> {
        witnessed(&self.thcodim_witness, self.d)
    }

    /// Compares "untwisted H_d(A, A) ≠ 0" with "a ν-normal element was found".
    /// `None` when either side is missing or uncertified.
    pub fn hdim_criterion_agrees(&self) -> Option<bool> {
        let top = self.hdim_top.as_ref().filter(|t| t.certified[self.d])?;
        self.nu.as_ref()?;
        Some((top.value(self.d) > 0) == self.nu_normal_element.is_some())
    }
}

fn witnessed(t: &Option<TruncatedDims>, d: usize) -> Option<usize> {
    t.as_ref().filter(|t| t.certified[d] && t.value(d) > 0).map(|_| d)
}

/// A nonzero m of filtration degree ≤ 2 with ν(g)·m = m·g for every
/// generator, found as a kernel vector. The catalog families are domains,
/// so m is regular and witnesses ν ∈ N(A).
fn nu_normal_search(h: &HopfPresentation, nu: &AlgebraMap) -> Option<String> {
    let mut layers = Layers::new(&h.algebra);
    let words: Vec<NCPoly> = (0..=2).flat_map(|d| layers.layer(d).to_vec()).map(NCPoly::word).collect();
    let mut index: HashMap<(usize, crate::rewrite::Word), usize> = HashMap::new();
    let mut cols: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for m in &words {
        let mut col = Vec::new();
        for g in 0..h.ngens() {
            let diff = h.nf(&nu.images[g].mul(m).sub(&m.mul(&NCPoly::gen(g))));
            for (w, c) in diff.terms() {
                let next = index.len();
                let i = *index.entry((g, w.clone())).or_insert(next);
                col.push((i, c.clone()));
            }
        }
        cols.push(col);
    }
    let mat = Matrix::from_fn(index.len().max(1), words.len(), |r, c| {
        cols[c].iter().find(|(i, _)| *i == r).map(|(_, v)| v.clone()).unwrap_or_else(Scalar::zero)
    });
    let kernel = mat.kernel();
    let v = kernel.first()?;
    let mut m = NCPoly::zero();
    for (w, c) in words.iter().zip(v) {
        m.add_scaled(w, c);
    }
    Some(h.fmt(&m))
}

pub fn invariant_report(h: &HopfPresentation, n: usize, w: usize) -> Result<InvariantReport, HomologyError> {
    let res = resolution_for(h)?;
    let d = res.length();
    let mut r = InvariantReport {
        algebra: h.name.clone(),
        d,
        pi0: None,
        nu: None,
        thdim_witness: None,
        thcodim_witness: None,
        hdim_top: None,
        hcodim_top: None,
        nu_normal_element: None,
        failures: Vec::new(),
    };
    let id = TwistSpec::identity(h);
    match hochschild_homology(h, &res, &id, n, w) {
        Ok(t) => r.hdim_top = Some(t),
        Err(e) => r.failures.push(format!("H_d(A, A): {e}")),
    }
    match hochschild_cohomology(h, &res, &id, n, w) {
        Ok(t) => r.hcodim_top = Some(t),
        Err(e) => r.failures.push(format!("H^d(A, A): {e}")),
    }
    let pi0 = match homological_integral(h, &res, n, w) {
        Ok(i) => i.character,
        Err(e) => {
            r.failures.push(format!("integral: {e}"));
            return Ok(r);
        }
    };
    r.pi0 = Some(pi0.clone());
    let nu = match nakayama_presented(h, &pi0) {
        Ok(nu) => nu,
        Err(e) => {
            r.failures.push(format!("nakayama: {e}"));
            return Ok(r);
        }
    };
    r.nu_normal_element = nu_normal_search(h, &nu);
    match hochschild_homology(h, &res, &TwistSpec::right(h, nu.clone()), n, w) {
        Ok(t) => r.thdim_witness = Some(t),
        Err(e) => r.failures.push(format!("H_d(A, A^nu): {e}")),
    }
    match hochschild_cohomology(h, &res, &TwistSpec::left(h, nu.clone()), n, w) {
        Ok(t) => r.thcodim_witness = Some(t),
        Err(e) => r.failures.push(format!("H^d(A, ^nu A): {e}")),
    }
    r.nu = Some(nu);
    Ok(r)
}
