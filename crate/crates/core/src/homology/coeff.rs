//! Twisted bimodules ^σA^τ and the one-sided modules M′ and L(M).

use serde::Serialize;

use super::complex::Side;
use super::HomologyError;
use crate::hopf::{AlgebraMap, Algebra, HopfPresentation};
use crate::rewrite::NCPoly;

/// The bimodule ^σA^τ: a·m·b = σ(a) m τ(b).
#[derive(Clone, Debug, PartialEq)]
pub struct TwistSpec {
    pub sigma: AlgebraMap,
    pub tau: AlgebraMap,
}

impl TwistSpec {
    pub fn identity(h: &HopfPresentation) -> Self {
        TwistSpec { sigma: AlgebraMap::identity(h), tau: AlgebraMap::identity(h) }
    }

    /// ^σA.
    pub fn left(h: &HopfPresentation, sigma: AlgebraMap) -> Self {
        TwistSpec { sigma, tau: AlgebraMap::identity(h) }
    }

    /// A^τ.
    pub fn right(h: &HopfPresentation, tau: AlgebraMap) -> Self {
        TwistSpec { sigma: AlgebraMap::identity(h), tau }
    }

    pub fn is_untwisted(&self) -> bool {
        self.sigma.is_identity() && self.tau.is_identity()
    }

    pub fn describe(&self, h: &HopfPresentation) -> String {
        let side = |m: &AlgebraMap| {
            if m.is_identity() {
                "id".to_string()
            } else {
                m.fmt_with(h).iter().map(|(g, p)| format!("{g}->{p}")).collect::<Vec<_>>().join(", ")
            }
        };
        format!("sigma: {}; tau: {}", side(&self.sigma), side(&self.tau))
    }
}

/// A module structure on the vector space A, given on generators by
/// g ⋆ m = Σ lᵢ m rᵢ. `side` says whether words act from the right
/// (letters applied first to last) or from the left.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoefficientModule {
    pub side: Side,
    #[serde(skip)]
    pub actions: Vec<Vec<(NCPoly, NCPoly)>>,
    pub label: String,
}

impl CoefficientModule {
    /// A with right multiplication.
    pub fn right_regular(h: &HopfPresentation) -> Self {
        let actions = (0..h.ngens()).map(|g| vec![(NCPoly::one(), NCPoly::gen(g))]).collect();
        CoefficientModule { side: Side::Right, actions, label: "A (right regular)".into() }
    }

    /// A with left multiplication.
    pub fn left_regular(h: &HopfPresentation) -> Self {
        let actions = (0..h.ngens()).map(|g| vec![(NCPoly::gen(g), NCPoly::one())]).collect();
        CoefficientModule { side: Side::Left, actions, label: "A (left regular)".into() }
    }

    /// Commutator maps m ↦ σ(g)m − mτ(g) of ^σA^τ, on the given side.
    pub fn commutators(h: &HopfPresentation, spec: &TwistSpec, side: Side) -> Self {
        let actions = (0..h.ngens())
            .map(|g| vec![(spec.sigma.images[g].clone(), NCPoly::one()), (NCPoly::one().neg(), spec.tau.images[g].clone())])
            .collect();
        CoefficientModule { side, actions, label: format!("commutators of {}", spec.describe(h)) }
    }

    pub fn act_gen(&self, alg: &Algebra, g: usize, m: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (l, r) in &self.actions[g] {
            out = out.add(&l.mul(m).mul(r));
        }
        alg.nf(&out)
    }

    /// m·a (right side) or a·m (left side).
    pub fn act(&self, alg: &Algebra, a: &NCPoly, m: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, c) in a.terms() {
            let mut cur = m.clone();
            let letters: Box<dyn Iterator<Item = &u16>> = match self.side {
                Side::Right => Box::new(u.0.iter()),
                Side::Left => Box::new(u.0.iter().rev()),
            };
            for &g in letters {
                cur = self.act_gen(alg, g as usize, &cur);
            }
            out.add_scaled(&cur, c);
        }
        out
    }
}

/// M′ with m·a = Σ σ(S(a₂)) m τ(a₁) (right side), or L(M) with
/// a·m = Σ σ(a₁) m τ(S(a₂)) (left side), for M = ^σA^τ.
pub fn twisted_bimodule_coefficients(h: &HopfPresentation, spec: &TwistSpec, side: Side) -> Result<CoefficientModule, HomologyError> {
    if !h.is_hopf() {
        return Err(HomologyError::Hopf(crate::hopf::HopfError::NotHopf));
    }
    if side == Side::Left && h.antipode_inv.is_none() {
        return Err(HomologyError::AntipodeInverseRequired);
    }
    let actions = (0..h.ngens())
        .map(|g| {
            h.coproduct[g]
                .iter()
                .map(|(a, b)| match side {
                    Side::Right => (spec.sigma.apply(h, &h.antipode_of(b)), spec.tau.apply(h, a)),
                    Side::Left => (spec.sigma.apply(h, a), spec.tau.apply(h, &h.antipode_of(b))),
                })
                .collect()
        })
        .collect();
    let label = match side {
        Side::Right => format!("right adjoint of {}", spec.describe(h)),
        Side::Left => format!("left adjoint of {}", spec.describe(h)),
    };
    Ok(CoefficientModule { side, actions, label })
}
