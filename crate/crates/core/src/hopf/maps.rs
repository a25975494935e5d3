//! Characters, algebra endomorphisms, and winding automorphisms.

use serde::Serialize;

use super::presentation::{eval_character, HopfPresentation};
use super::HopfError;
use crate::exact::Scalar;
use crate::rewrite::NCPoly;

/// An algebra map A → k, stored by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Character {
    pub values: Vec<Scalar>,
}

impl Character {
    /// Checks that the values annihilate every defining relation.
    pub fn new(h: &HopfPresentation, values: Vec<Scalar>) -> Result<Self, HopfError> {
        assert_eq!(values.len(), h.ngens(), "one value per generator");
        for r in h.algebra.relations() {
            if !eval_character(&values, &r).is_zero() {
                return Err(HopfError::RelationViolation(format!("character does not kill {}", h.fmt(&r))));
            }
        }
        Ok(Character { values })
    }

    pub fn counit(h: &HopfPresentation) -> Self {
        Character { values: h.counit.clone() }
    }

    pub fn eval(&self, p: &NCPoly) -> Scalar {
        eval_character(&self.values, p)
    }

    pub fn is_counit(&self, h: &HopfPresentation) -> bool {
        self.values == h.counit
    }
}

/// An algebra endomorphism, stored by generator images, checked on relations
/// up to the algebra's certificate degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    pub images: Vec<NCPoly>,
    pub certificate: usize,
}

impl AlgebraMap {
    pub fn new(h: &HopfPresentation, images: Vec<NCPoly>) -> Result<Self, HopfError> {
        assert_eq!(images.len(), h.ngens(), "one image per generator");
        let images: Vec<NCPoly> = images.iter().map(|p| h.nf(p)).collect();
        for r in h.algebra.relations() {
            let v = h.apply(&images, &r);
            if !v.is_zero() {
                return Err(HopfError::RelationViolation(format!("map sends {} to {}", h.fmt(&r), h.fmt(&v))));
            }
        }
        Ok(AlgebraMap { images, certificate: h.algebra.certificate() })
    }

    pub fn identity(h: &HopfPresentation) -> Self {
        AlgebraMap { images: (0..h.ngens()).map(NCPoly::gen).collect(), certificate: h.algebra.certificate() }
    }

    /// Diagonal map g ↦ c_g·g.
    pub fn diagonal(h: &HopfPresentation, scalars: &[Scalar]) -> Result<Self, HopfError> {
        AlgebraMap::new(h, scalars.iter().enumerate().map(|(g, c)| NCPoly::gen(g).scale(c)).collect())
    }

    pub fn apply(&self, h: &HopfPresentation, p: &NCPoly) -> NCPoly {
        h.apply(&self.images, p)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(g, p)| *p == NCPoly::gen(g))
    }

    /// The scalars c_g when every generator maps to a multiple of itself.
    pub fn diagonal_scalars(&self) -> Option<Vec<Scalar>> {
        self.images
            .iter()
            .enumerate()
            .map(|(g, p)| {
                if p.is_zero() {
                    return Some(Scalar::zero());
                }
                let (w, c) = p.leading()?;
                (p.len() == 1 && *w == crate::rewrite::Word::gen(g)).then(|| c.clone())
            })
            .collect()
    }

    pub fn fmt_with(&self, h: &HopfPresentation) -> Vec<(String, String)> {
        self.images.iter().enumerate().map(|(g, p)| (h.names()[g].clone(), h.fmt(p))).collect()
    }
}

/// Ξˡ[π]: g ↦ Σ π(g₁) g₂.
pub fn winding_left(h: &HopfPresentation, pi: &Character) -> Result<AlgebraMap, HopfError> {
    let images = (0..h.ngens())
        .map(|g| h.coproduct_gen(g).contract_factor(0, |w| pi.eval(&NCPoly::word(w.clone()))).to_poly())
        .collect();
    AlgebraMap::new(h, images)
}

/// Ξʳ[π]: g ↦ Σ g₁ π(g₂).
pub fn winding_right(h: &HopfPresentation, pi: &Character) -> Result<AlgebraMap, HopfError> {
    let images = (0..h.ngens())
        .map(|g| h.coproduct_gen(g).contract_factor(1, |w| pi.eval(&NCPoly::word(w.clone()))).to_poly())
        .collect();
    AlgebraMap::new(h, images)
}

/// π ∗ π′ = m(π ⊗ π′)Δ.
pub fn convolve(h: &HopfPresentation, pi: &Character, pi2: &Character) -> Character {
    let values = (0..h.ngens())
        .map(|g| {
            h.coproduct_gen(g)
                .terms()
                .map(|(k, c)| c * pi.eval(&NCPoly::word(k[0].clone())) * pi2.eval(&NCPoly::word(k[1].clone())))
                .fold(Scalar::zero(), |a, b| a + b)
        })
        .collect();
    Character { values }
}

/// π∘S.
pub fn char_antipode_dual(h: &HopfPresentation, pi: &Character) -> Character {
    Character { values: h.antipode_images().iter().map(|p| pi.eval(p)).collect() }
}

/// Π[σ] = ε∘σ.
pub fn pi_of(h: &HopfPresentation, sigma: &AlgebraMap) -> Character {
    Character { values: sigma.images.iter().map(|p| h.counit_of(p)).collect() }
}

/// π∘σ.
pub fn twist_character(pi: &Character, sigma: &AlgebraMap) -> Character {
    Character { values: sigma.images.iter().map(|p| pi.eval(p)).collect() }
}

/// S².
pub fn s_squared(h: &HopfPresentation) -> Result<AlgebraMap, HopfError> {
    if !h.is_hopf() {
        return Err(HopfError::NotHopf);
    }
    let images = h.antipode_images().iter().map(|p| h.antipode_of(p)).collect();
    AlgebraMap::new(h, images)
}

/// S⁻², when S⁻¹ is available.
pub fn s_minus_squared(h: &HopfPresentation) -> Result<AlgebraMap, HopfError> {
    let inv = h.antipode_inv.as_ref().ok_or(HopfError::AntipodeInverseRequired)?;
    let images = inv.iter().map(|p| h.antipode_inv_of(p).unwrap()).collect();
    AlgebraMap::new(h, images)
}

/// f∘g.
pub fn compose(h: &HopfPresentation, f: &AlgebraMap, g: &AlgebraMap) -> AlgebraMap {
    AlgebraMap { images: g.images.iter().map(|p| f.apply(h, p)).collect(), certificate: f.certificate.min(g.certificate) }
}
