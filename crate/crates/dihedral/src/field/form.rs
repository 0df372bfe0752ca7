//! Canonicalized linear forms a·k0 + b·k1 + c.
//!
//! Denominators in this crate are exclusively products of such forms (with
//! rational constant term), so cancellation never needs multivariate gcd:
//! it reduces to exact division by a linear form.

use std::fmt;

use crate::scalar::Rat;

use super::poly::ParamPoly;

/// A linear form a·k0 + b·k1 + c in canonical orientation.
///
/// Invariants: gcd(|a|, |b|) = 1 with the first nonzero of (a, b) positive,
/// or (a, b) = (0, 0) and c = 1 (the constant unit, used transiently).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinearForm {
    a: i64,
    b: i64,
    c: Rat,
}

impl LinearForm {
    /// Canonicalize a·k0 + b·k1 + c as `multiplier * canonical_form`.
    ///
    /// The multiplier is a nonzero rational; it is negative when the leading
    /// integer coefficient was negative. Panics if the form is identically
    /// zero (callers screen that case).
    pub fn normalize(a: i64, b: i64, c: Rat) -> (LinearForm, Rat) {
        if a == 0 && b == 0 {
            assert!(!c.is_zero(), "zero linear form");
            return (
                LinearForm { a: 0, b: 0, c: Rat::one() },
                c,
            );
        }
        let g = gcd(a.unsigned_abs(), b.unsigned_abs()) as i64;
        let lead = if a != 0 { a } else { b };
        let m = if lead < 0 { -g } else { g };
        let mult = Rat::from_int(m);
        (
            LinearForm {
                a: a / m,
                b: b / m,
                c: c / mult.clone(),
            },
            mult,
        )
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn constant_term(&self) -> Rat {
        self.c.clone()
    }

    pub fn is_constant(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn as_poly(&self) -> ParamPoly {
        ParamPoly::affine(self.a, self.b, self.c.clone())
    }

    pub fn eval(&self, k0: &Rat, k1: &Rat) -> Rat {
        Rat::from_int(self.a) * k0 + Rat::from_int(self.b) * k1 + self.c.clone()
    }

    pub fn render(&self) -> String {
        self.as_poly().render()
    }
}

/// A raw (un-normalized) affine expression a·k0 + b·k1 + c. This is the
/// "linear form or exact scalar" parameter shape taken by the hypergeometric
/// and harmonic layers; constants are the a = b = 0 case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Affine {
    pub a: i64,
    pub b: i64,
    pub c: Rat,
}

impl Affine {
    pub fn new(a: i64, b: i64, c: Rat) -> Self {
        Affine { a, b, c }
    }

    pub fn k0() -> Self {
        Affine::new(1, 0, Rat::zero())
    }

    pub fn k1() -> Self {
        Affine::new(0, 1, Rat::zero())
    }

    pub fn constant(c: Rat) -> Self {
        Affine::new(0, 0, c)
    }

    pub fn zero() -> Self {
        Affine::constant(Rat::zero())
    }

    /// Shift the constant term by an integer.
    pub fn shift(&self, n: i64) -> Self {
        Affine::new(self.a, self.b, self.c.clone() + Rat::from_int(n))
    }

    /// Shift the constant term by a rational.
    pub fn shift_rat(&self, r: &Rat) -> Self {
        Affine::new(self.a, self.b, self.c.clone() + r.clone())
    }

    pub fn add(&self, other: &Affine) -> Self {
        Affine::new(
            self.a + other.a,
            self.b + other.b,
            self.c.clone() + other.c.clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c.is_zero()
    }

    pub fn as_poly(&self) -> ParamPoly {
        ParamPoly::affine(self.a, self.b, self.c.clone())
    }

    /// Rising factorial (self)_n as a polynomial.
    pub fn poch(&self, n: u32) -> ParamPoly {
        self.as_poly().pochhammer(n)
    }

    pub fn as_tuple(&self) -> (i64, i64, Rat) {
        (self.a, self.b, self.c.clone())
    }
}

fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    x
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
