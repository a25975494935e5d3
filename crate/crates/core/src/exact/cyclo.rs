//! Cyclotomic fields Q(ζ_ℓ), elements stored as polynomials in ζ reduced mod Φ_ℓ.

use num_traits::One;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use super::poly::Poly;
use super::Rational;

/// The ℓ-th cyclotomic polynomial, cached.
pub fn cyclotomic_poly(level: u32) -> Poly {
    static CACHE: OnceLock<Mutex<HashMap<u32, Poly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&level) {
        return p.clone();
    }
    let mut p = Poly::monomial(Rational::one(), level as usize).sub(&Poly::one());
    for d in 1..level {
        if level % d == 0 {
            p = p.div_rem(&cyclotomic_poly(d)).0;
        }
    }
    cache.lock().unwrap().insert(level, p.clone());
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    rep: Poly,
    level: u32,
}

impl CycloScalar {
    pub fn new(rep: Poly, level: u32) -> Self {
        let phi = cyclotomic_poly(level);
        let rep = if rep.degree().is_some_and(|d| d >= phi.degree().unwrap()) { rep.div_rem(&phi).1 } else { rep };
        CycloScalar { rep, level }
    }

    pub fn zero(level: u32) -> Self {
        CycloScalar { rep: Poly::zero(), level }
    }

    pub fn one(level: u32) -> Self {
        CycloScalar { rep: Poly::one(), level }
    }

    /// The primitive root ζ_ℓ.
    pub fn zeta(level: u32) -> Self {
        CycloScalar::new(Poly::t(), level)
    }

    /// ζ^e for any integer e.
    pub fn zeta_pow(level: u32, e: i64) -> Self {
        let k = e.rem_euclid(level as i64) as usize;
        CycloScalar::new(Poly::monomial(Rational::one(), k), level)
    }

    pub fn constant(c: Rational, level: u32) -> Self {
        CycloScalar { rep: Poly::constant(c), level }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.rep.is_constant().then(|| self.rep.coeff(0))
    }

    fn check(&self, o: &CycloScalar) {
        assert_eq!(self.level, o.level, "mixed cyclotomic levels");
    }

    pub fn add(&self, o: &CycloScalar) -> CycloScalar {
        self.check(o);
        CycloScalar { rep: self.rep.add(&o.rep), level: self.level }
    }

    pub fn sub(&self, o: &CycloScalar) -> CycloScalar {
        self.check(o);
        CycloScalar { rep: self.rep.sub(&o.rep), level: self.level }
    }

    pub fn neg(&self) -> CycloScalar {
        CycloScalar { rep: self.rep.neg(), level: self.level }
    }

    pub fn mul(&self, o: &CycloScalar) -> CycloScalar {
        self.check(o);
        CycloScalar::new(self.rep.mul(&o.rep), self.level)
    }

    /// Inverse via extended gcd with Φ_ℓ; `None` for zero.
    pub fn try_inv(&self) -> Option<CycloScalar> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.rep.ext_gcd(&cyclotomic_poly(self.level));
        debug_assert!(g.is_one());
        Some(CycloScalar::new(s, self.level))
    }

    pub fn inv(&self) -> CycloScalar {
        self.try_inv().expect("inverse of zero in cyclotomic field")
    }

    /// Evaluates a polynomial in q at ζ_ℓ.
    pub fn eval_poly(p: &Poly, level: u32) -> CycloScalar {
        CycloScalar::new(p.clone(), level)
    }

    pub fn fmt_with(&self, var: &str) -> String {
        self.rep.fmt_with(var)
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("z"))
    }
}
