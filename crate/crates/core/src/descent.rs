//! Left-integral characters of presented algebras by descent through
//! τ-normal elements of the augmentation ideal.
//!
//! Killing a τ-normal non-zero-divisor x twists the integral by τ⁻¹, so for a
//! chain x₁, …, x_m ending in a commutative Hopf algebra with trivial integral,
//! π₀ = ε∘τ_m⁻¹∘…∘τ₁⁻¹. Every τ here is diagonal on generators.

use crate::exact::Scalar;
use crate::hopf::{compose, s_squared, winding_left, Algebra, AlgebraMap, Character, HopfError, HopfPresentation, Tensor};
use crate::rewrite::{NCPoly, RewriteError, RewriteSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DescentError {
    #[error("step {step}: {element} is not τ-normal")]
    NotNormal { step: usize, element: String },
    #[error("step {step}: ε({element}) ≠ 0")]
    NotAugmented { step: usize, element: String },
    #[error("step {step}: {element} is a zero divisor in degree ≤ {degree}")]
    ZeroDivisor { step: usize, element: String, degree: usize },
    #[error("step {step}: {reason}")]
    CertificateTooWeak { step: usize, reason: String },
    #[error("base case not recognized: {0}")]
    BaseCaseUnrecognized(String),
    #[error("the algebra is not given by rewriting rules")]
    NotPresented,
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct DescentStep {
    pub element: NCPoly,
    /// τ(g)/g for every generator; 1 on generators already killed.
    pub tau: Vec<Scalar>,
    pub quotient: RewriteSystem,
    /// Normal-word length up to which x is certified a non-zero-divisor.
    pub certificate: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseCase {
    /// Every surviving generator is group-like.
    Laurent,
    /// Some surviving generator is primitive.
    Polynomial,
}

impl BaseCase {
    pub fn name(&self) -> &'static str {
        match self {
            BaseCase::Laurent => "laurent",
            BaseCase::Polynomial => "polynomial",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DescentTrace {
    pub steps: Vec<DescentStep>,
    pub base: BaseCase,
    pub surviving: Vec<usize>,
    pub character: Character,
}

/// Descends along `chain` and returns π₀ with the trace.
pub fn descend(h: &HopfPresentation, chain: &[NCPoly]) -> Result<(Character, DescentTrace), DescentError> {
    let mut cur = h.algebra.as_rules().ok_or(DescentError::NotPresented)?.clone();
    let bound = cur.certificate();
    let n = h.ngens();
    let mut acc = vec![Scalar::one(); n];
    let mut steps = Vec::with_capacity(chain.len());
    let weak = |step: usize, e: RewriteError| DescentError::CertificateTooWeak { step, reason: e.to_string() };
    for (step, x) in chain.iter().enumerate() {
        let element = h.fmt(x);
        if !h.counit_of(x).is_zero() {
            return Err(DescentError::NotAugmented { step, element });
        }
        let killed = cur.killed_generators();
        let tau = cur.is_tau_normal(x).map_err(|e| weak(step, e))?.ok_or_else(|| DescentError::NotNormal { step, element: element.clone() })?;
        let tau: Vec<Scalar> = tau.into_iter().enumerate().map(|(g, t)| if killed.contains(&g) { Scalar::one() } else { t }).collect();
        let certificate = match cur.certify_nonzerodivisor(x, bound).map_err(|e| weak(step, e))? {
            Some(0) => return Err(DescentError::CertificateTooWeak { step, reason: format!("no room above deg {element} within degree {bound}") }),
            Some(d) => d,
            None => return Err(DescentError::ZeroDivisor { step, element, degree: bound }),
        };
        for (a, t) in acc.iter_mut().zip(&tau) {
            *a = &*a / t;
        }
        cur = cur.quotient(x, bound).map_err(|e| weak(step, e))?;
        steps.push(DescentStep { element: x.clone(), tau, quotient: cur.clone(), certificate });
    }
    let (base, surviving) = recognize_base(h, &cur)?;
    let values: Vec<Scalar> = (0..n).map(|g| &acc[g] * &h.counit[g]).collect();
    let character = Character::new(h, values)?;
    Ok((character.clone(), DescentTrace { steps, base, surviving, character }))
}

fn recognize_base(h: &HopfPresentation, sys: &RewriteSystem) -> Result<(BaseCase, Vec<usize>), DescentError> {
    if !sys.is_commutative() {
        return Err(DescentError::BaseCaseUnrecognized("the final quotient is not commutative".into()));
    }
    let alg = Algebra::Rules(sys.clone());
    let killed = sys.killed_generators();
    let surviving: Vec<usize> = (0..h.ngens()).filter(|g| !killed.contains(g)).collect();
    let mut base = BaseCase::Laurent;
    for &g in &surviving {
        let x = NCPoly::gen(g);
        let delta = h.coproduct_gen(g).nf(&alg);
        let group_like = Tensor::from_pairs(&[(x.clone(), x.clone())]).nf(&alg);
        let primitive = Tensor::from_pairs(&[(x.clone(), NCPoly::one()), (NCPoly::one(), x.clone())]).nf(&alg);
        if delta == group_like {
            continue;
        }
        if delta == primitive {
            base = BaseCase::Polynomial;
            continue;
        }
        let inverse = surviving.iter().any(|&k| sys.normal_form(&x.mul(&NCPoly::gen(k))) == NCPoly::one());
        if !inverse {
            return Err(DescentError::BaseCaseUnrecognized(format!("{} is neither group-like, primitive nor invertible", h.names()[g])));
        }
    }
    Ok((base, surviving))
}

/// Generators that are τ-normal, in the augmentation ideal, and not yet killed.
pub fn normal_candidates(h: &HopfPresentation, sys: &RewriteSystem) -> Vec<usize> {
    let killed = sys.killed_generators();
    (0..h.ngens())
        .filter(|&g| !killed.contains(&g) && h.counit[g].is_zero())
        .filter(|&g| matches!(sys.is_tau_normal(&NCPoly::gen(g)), Ok(Some(_))))
        .collect()
}

/// ξ = Ξˡ[π₀].
pub fn xi_of(h: &HopfPresentation, pi0: &Character) -> Result<AlgebraMap, HopfError> {
    winding_left(h, pi0)
}

/// ν = S²∘ξ.
pub fn nakayama_presented(h: &HopfPresentation, pi0: &Character) -> Result<AlgebraMap, HopfError> {
    let xi = xi_of(h, pi0)?;
    let nu = compose(h, &s_squared(h)?, &xi);
    AlgebraMap::new(h, nu.images)
}

/// T(g) = Π det of the conjugation action on the infinite factors, on the
/// group-algebra letters x_i and x_i⁻¹.
pub fn adjoint_trace(h: &HopfPresentation) -> Option<Character> {
    let g = h.algebra.as_group()?;
    let t = g.group().adjoint_trace();
    let mut values: Vec<Scalar> = t.iter().map(|&v| Scalar::int(v)).collect();
    values.extend(t.iter().map(|&v| Scalar::int(v)));
    Some(Character { values })
}

/// Whether every image is a scalar multiple of its generator.
pub fn is_diagonal(map: &AlgebraMap) -> bool {
    map.diagonal_scalars().is_some()
}
