//! The coefficient type used everywhere: an element of Q, Q(q) or Q(ζ_ℓ).
//!
//! Values are kept in canonical form: a rational function or cyclotomic
//! element that happens to be a rational constant is stored as `Rat`, so
//! structural equality is field equality. Mixing `Func` and `Cyclo` operands
//! is a programming error and panics.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use super::cyclo::CycloScalar;
use super::poly::{fmt_rational, Poly};
use super::ratfunc::RatFunc;
use super::{ExactError, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    RatFunc,
    Cyclo(u32),
}

impl FieldTag {
    pub fn name(&self) -> String {
        match self {
            FieldTag::Rational => "Q".into(),
            FieldTag::RatFunc => "Q(q)".into(),
            FieldTag::Cyclo(l) => format!("Q(z{l})"),
        }
    }

    pub fn parse(s: &str) -> Result<FieldTag, ExactError> {
        let s = s.trim();
        match s {
            "Q" | "rational" => Ok(FieldTag::Rational),
            "Q(q)" | "ratfunc" => Ok(FieldTag::RatFunc),
            _ => {
                let inner = s
                    .strip_prefix("Q(z")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| s.strip_prefix("cyclo"))
                    .ok_or_else(|| ExactError::Parse(format!("unknown field tag `{s}`")))?;
                let l: u32 = inner.trim().parse().map_err(|_| ExactError::Parse(format!("bad level in `{s}`")))?;
                check_level(l)?;
                Ok(FieldTag::Cyclo(l))
            }
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn check_level(level: u32) -> Result<(), ExactError> {
    if level > 2 && level % 2 == 1 {
        Ok(())
    } else {
        Err(ExactError::InvalidLevel(level))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Func(RatFunc),
    Cyclo(CycloScalar),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::Rat(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn q() -> Self {
        Scalar::Func(RatFunc::q())
    }

    pub fn q_pow(e: i64) -> Self {
        Scalar::from_func(RatFunc::q_pow(e))
    }

    pub fn zeta(level: u32) -> Self {
        Scalar::from_cyclo(CycloScalar::zeta(level))
    }

    pub fn zeta_pow(level: u32, e: i64) -> Self {
        Scalar::from_cyclo(CycloScalar::zeta_pow(level, e))
    }

    pub fn from_func(f: RatFunc) -> Self {
        match f.as_constant() {
            Some(c) => Scalar::Rat(c),
            None => Scalar::Func(f),
        }
    }

    pub fn from_cyclo(c: CycloScalar) -> Self {
        match c.as_rational() {
            Some(r) => Scalar::Rat(r),
            None => Scalar::Cyclo(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// The narrowest field containing the value.
    pub fn field(&self) -> FieldTag {
        match self {
            Scalar::Rat(_) => FieldTag::Rational,
            Scalar::Func(_) => FieldTag::RatFunc,
            Scalar::Cyclo(c) => FieldTag::Cyclo(c.level()),
        }
    }

    fn to_func(&self) -> RatFunc {
        match self {
            Scalar::Rat(r) => RatFunc::constant(r.clone()),
            Scalar::Func(f) => f.clone(),
            Scalar::Cyclo(_) => panic!("cyclotomic scalar used in Q(q) arithmetic"),
        }
    }

    fn to_cyclo(&self, level: u32) -> CycloScalar {
        match self {
            Scalar::Rat(r) => CycloScalar::constant(r.clone(), level),
            Scalar::Cyclo(c) => c.clone(),
            Scalar::Func(_) => panic!("Q(q) scalar used in cyclotomic arithmetic"),
        }
    }

    pub fn add_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Cyclo(c), _) | (_, Scalar::Cyclo(c)) => {
                Scalar::from_cyclo(self.to_cyclo(c.level()).add(&o.to_cyclo(c.level())))
            }
            _ => Scalar::from_func(self.to_func().add(&o.to_func())),
        }
    }

    pub fn sub_ref(&self, o: &Scalar) -> Scalar {
        self.add_ref(&o.neg_ref())
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Func(f) => Scalar::Func(f.neg()),
            Scalar::Cyclo(c) => Scalar::Cyclo(c.neg()),
        }
    }

    pub fn mul_ref(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ if self.is_zero() || o.is_zero() => Scalar::zero(),
            (Scalar::Rat(a), _) if a.is_one() => o.clone(),
            (_, Scalar::Rat(b)) if b.is_one() => self.clone(),
            (Scalar::Cyclo(c), _) | (_, Scalar::Cyclo(c)) => {
                Scalar::from_cyclo(self.to_cyclo(c.level()).mul(&o.to_cyclo(c.level())))
            }
            _ => Scalar::from_func(self.to_func().mul(&o.to_func())),
        }
    }

    /// Inverse, `None` for zero.
    pub fn try_inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Func(f) => Scalar::from_func(f.inv()),
            Scalar::Cyclo(c) => Scalar::from_cyclo(c.inv()),
        })
    }

    pub fn inv(&self) -> Scalar {
        self.try_inv().expect("inverse of zero scalar")
    }

    pub fn div_ref(&self, o: &Scalar) -> Scalar {
        self.mul_ref(&o.inv())
    }

    pub fn pow(&self, e: i64) -> Scalar {
        match self {
            Scalar::Func(f) => Scalar::from_func(f.pow(e)),
            _ => {
                let base = if e < 0 { self.inv() } else { self.clone() };
                let mut acc = Scalar::one();
                let mut b = base;
                let mut k = e.unsigned_abs();
                while k > 0 {
                    if k & 1 == 1 {
                        acc = acc.mul_ref(&b);
                    }
                    k >>= 1;
                    if k > 0 {
                        b = b.mul_ref(&b);
                    }
                }
                acc
            }
        }
    }

    /// Substitutes q = c. Errors if a denominator vanishes.
    pub fn eval_q(&self, c: &Rational) -> Result<Scalar, ExactError> {
        match self {
            Scalar::Func(f) => f.eval(c).map(Scalar::Rat).ok_or(ExactError::DenominatorVanishes),
            _ => Ok(self.clone()),
        }
    }

    /// Substitutes q = ζ_level.
    pub fn specialize(&self, level: u32) -> Result<Scalar, ExactError> {
        match self {
            Scalar::Func(f) => specialize(f, level).map(Scalar::from_cyclo),
            _ => Ok(self.clone()),
        }
    }

    pub fn parse(s: &str, tag: FieldTag) -> Result<Scalar, ExactError> {
        let mut p = Parser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, tag };
        let v = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(ExactError::Parse(format!("trailing input in `{s}`")));
        }
        Ok(v)
    }
}

/// f(ζ_level) as numerator(ζ)·denominator(ζ)⁻¹.
pub fn specialize(f: &RatFunc, level: u32) -> Result<CycloScalar, ExactError> {
    check_level(level)?;
    let n = CycloScalar::eval_poly(f.numer(), level);
    let d = CycloScalar::eval_poly(f.denom(), level);
    let dinv = d.try_inv().ok_or(ExactError::DenominatorVanishes)?;
    Ok(n.mul(&dinv))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    tag: FieldTag,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> ExactError {
        let s: String = self.chars.iter().collect();
        ExactError::Parse(format!("{msg} at position {} in `{s}`", self.pos))
    }

    fn expr(&mut self) -> Result<Scalar, ExactError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.neg_ref()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add_ref(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ExactError> {
        let mut acc = self.power()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.mul_ref(&self.power()?);
                }
                '/' => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.mul_ref(&d.try_inv().ok_or(ExactError::DivisionByZero)?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Scalar, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = if self.peek() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e: i64 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            if base.is_zero() && (neg || e == 0) {
                return Err(ExactError::DivisionByZero);
            }
            return Ok(base.pow(if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ExactError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Scalar, ExactError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::Rat(Rational::from_integer(self.integer()?))),
            Some('q') => {
                self.pos += 1;
                match self.tag {
                    FieldTag::RatFunc => Ok(Scalar::q()),
                    _ => Err(self.err("`q` outside Q(q)")),
                }
            }
            Some('z') => {
                self.pos += 1;
                match self.tag {
                    FieldTag::Cyclo(l) => Ok(Scalar::zeta(l)),
                    _ => Err(self.err("`z` outside a cyclotomic field")),
                }
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => f.write_str(&fmt_rational(r)),
            Scalar::Func(r) => write!(f, "{r}"),
            Scalar::Cyclo(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::from_func(RatFunc::from_poly(p))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$f(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$f(&o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);
binop!(Div, div, div_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, o) {
            *a += b;
            return;
        }
        *self = self.add_ref(o);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, o) {
            *a -= b;
            return;
        }
        *self = self.sub_ref(o);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = self.mul_ref(o);
    }
}

/// True for a nonzero rational of absolute value at most `bound` in both parts; used by searches.
pub fn small_height(r: &Rational, bound: i64) -> bool {
    r.numer().abs() <= BigInt::from(bound) && r.denom() <= &BigInt::from(bound)
}
