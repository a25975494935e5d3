//! Rational functions in q over Q.

use num_traits::{One, Zero};
use std::fmt;

use super::poly::Poly;
use super::Rational;

/// A reduced fraction num/den with den monic and gcd(num, den) = 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut f = RatFunc { num, den };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let lc = self.den.leading();
        if !lc.is_one() {
            let inv = lc.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        if self.den.is_monomial() {
            let k = self.den.t_valuation().min(self.num.t_valuation());
            if k > 0 {
                self.num = self.num.shift_down(k);
                self.den = self.den.shift_down(k);
            }
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        RatFunc { num: Poly::t(), den: Poly::one() }
    }

    /// q^e for any integer e.
    pub fn q_pow(e: i64) -> Self {
        let k = e.unsigned_abs() as usize;
        let m = Poly::monomial(Rational::one(), k);
        if e >= 0 {
            RatFunc { num: m, den: Poly::one() }
        } else {
            RatFunc { num: Poly::one(), den: m }
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value when the function is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        if self.den.is_monomial() && o.den.is_monomial() {
            let a = self.den.t_valuation();
            let b = o.den.t_valuation();
            let k = a.max(b);
            let num = self.num.shift_up(k - a).add(&o.num.shift_up(k - b));
            return RatFunc::new(num, Poly::monomial(Rational::one(), k));
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        self.mul(&o.inv())
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        RatFunc { num: base.num.pow(k), den: base.den.pow(k) }
    }

    /// Value at a rational point, `None` when the denominator vanishes there.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn fmt_with(&self, var: &str) -> String {
        let n = self.num.fmt_with(var);
        if self.den.is_one() {
            return n;
        }
        let d = self.den.fmt_with(var);
        let wrap = |s: String, p: &Poly| if p.term_count() > 1 || s.contains('*') { format!("({s})") } else { s };
        format!("{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancels_common_factor() {
        let f = RatFunc::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[1, 1]));
        assert_eq!(f, RatFunc::from_poly(Poly::from_ints(&[-1, 1])));
        assert_eq!(f.to_string(), "q-1");
    }

    #[test]
    fn q_powers_cancel() {
        let a = RatFunc::q_pow(3);
        let b = RatFunc::q_pow(-5);
        assert_eq!(a.mul(&b), RatFunc::q_pow(-2));
        assert_eq!(RatFunc::q_pow(-2).to_string(), "1/q^2");
    }

    #[test]
    fn q_minus_q_inverse() {
        let f = RatFunc::q().sub(&RatFunc::q_pow(-1));
        assert_eq!(f.to_string(), "(q^2-1)/q");
        assert!(f.mul(&f.inv()).is_one());
    }
}
