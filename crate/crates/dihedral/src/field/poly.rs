//! Sparse polynomials in the two deformation parameters.
//!
//! `ParamPoly` is an element of Q[k0, k1], stored as a map from exponent
//! pairs to nonzero rational coefficients. These polynomials are the
//! numerators of every coefficient in the crate; denominators stay factored
//! in [`super::ParamRat`].

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Rat;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in (k0, k1) with exact rational coefficients.
///
/// Invariant: no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        ParamPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = ParamPoly::zero();
        if !c.is_zero() {
            p.terms.insert((0, 0), c);
        }
        p
    }

    /// The affine polynomial a·k0 + b·k1 + c.
    pub fn affine(a: i64, b: i64, c: Rat) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(1, 0, Rat::from_int(a));
        p.add_term(0, 1, Rat::from_int(b));
        p.add_term(0, 0, c);
        p
    }

    pub fn k0() -> Self {
        ParamPoly::affine(1, 0, Rat::zero())
    }

    pub fn k1() -> Self {
        ParamPoly::affine(0, 1, Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(e0, e1)| e0 == 0 && e1 == 0)
    }

    /// The coefficient of k0^e0 k1^e1 (zero if absent).
    pub fn coeff(&self, e0: u32, e1: u32) -> Rat {
        self.terms.get(&(e0, e1)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e0: u32, e1: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((e0, e1)).or_insert_with(Rat::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&(e0, e1));
        }
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (&(e0, e1), c) in &other.terms {
            out.add_term(e0, e1, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ParamPoly) -> ParamPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (&(a0, a1), ca) in &self.terms {
            for (&(b0, b1), cb) in &other.terms {
                out.add_term(a0 + b0, a1 + b1, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut out = ParamPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Rising factorial (self)(self+1)...(self+n-1); returns 1 for n = 0.
    pub fn pochhammer(&self, n: u32) -> ParamPoly {
        let mut out = ParamPoly::one();
        for i in 0..n {
            let mut factor = self.clone();
            factor.add_term(0, 0, Rat::from_int(i as i64));
            out = out.mul(&factor);
        }
        out
    }

    pub fn eval(&self, k0: &Rat, k1: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(e0, e1), c) in &self.terms {
            acc += &(c * &k0.powi(e0 as i64) * &k1.powi(e1 as i64));
        }
        acc
    }

    pub fn deg_k0(&self) -> u32 {
        self.terms.keys().map(|&(e0, _)| e0).max().unwrap_or(0)
    }

    pub fn deg_k1(&self) -> u32 {
        self.terms.keys().map(|&(_, e1)| e1).max().unwrap_or(0)
    }

    /// Substitute k1 := q(k0, k1'), leaving k0 alone. Used for the singular
    /// parameter substitutions where the second variable is reinterpreted.
    pub fn substitute_k1(&self, q: &ParamPoly) -> ParamPoly {
        // Precompute powers of q up to the largest k1-degree.
        let max_e1 = self.deg_k1() as usize;
        let mut powers: Vec<ParamPoly> = Vec::with_capacity(max_e1 + 1);
        powers.push(ParamPoly::one());
        for i in 1..=max_e1 {
            let prev = powers[i - 1].clone();
            powers.push(prev.mul(q));
        }
        let mut out = ParamPoly::zero();
        for (&(e0, e1), c) in &self.terms {
            let mut term = powers[e1 as usize].scale(c);
            term = term.mul(&ParamPoly::monomial_k0(e0));
            out = out.add(&term);
        }
        out
    }

    fn monomial_k0(e0: u32) -> ParamPoly {
        let mut p = ParamPoly::zero();
        p.terms.insert((e0, 0), Rat::one());
        p
    }

    /// Exact division by the linear form a·k0 + b·k1 + c, if it divides.
    ///
    /// Runs univariate synthetic division in the variable with nonzero
    /// coefficient; divisibility is equivalent to the remainder (the
    /// substitution of the form's root) being identically zero.
    pub fn div_exact_by_form(&self, a: i64, b: i64, c: &Rat) -> Option<ParamPoly> {
        assert!(a != 0 || b != 0, "constant form division handled by scale");
        // Work in the orientation where the divided variable is k0.
        let flipped = a == 0;
        let poly = if flipped { self.swap_vars() } else { self.clone() };
        let (lead, tail_b, tail_c) = if flipped {
            (b, a, c)
        } else {
            (a, b, c)
        };
        // Divide poly (as a polynomial in k0 over Q[k1]) by lead·k0 + (tail_b·k1 + tail_c).
        let tail = ParamPoly::affine(0, tail_b, tail_c.clone());
        let lead_inv = Rat::from_int(lead).recip();
        let mut rem = poly;
        let mut quot = ParamPoly::zero();
        while rem.deg_k0() > 0 {
            let d = rem.deg_k0();
            // Leading slice in k0: all terms with e0 == d.
            let mut slice = ParamPoly::zero();
            for (&(e0, e1), cf) in &rem.terms {
                if e0 == d {
                    slice.add_term(0, e1, cf * &lead_inv);
                }
            }
            // quotient term: slice * k0^{d-1}
            let qterm = slice.mul(&ParamPoly::monomial_k0(d - 1));
            quot = quot.add(&qterm);
            // rem -= (lead*k0 + tail) * qterm
            let subtrahend = ParamPoly::affine(lead, 0, Rat::zero())
                .add(&tail)
                .mul(&qterm);
            rem = rem.sub(&subtrahend);
        }
        if rem.is_zero() {
            Some(if flipped { quot.swap_vars() } else { quot })
        } else {
            None
        }
    }

    fn swap_vars(&self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(&(e0, e1), c)| ((e1, e0), c.clone())).collect(),
        }
    }

    /// Positive rational `g` with `self = g * primitive` where `primitive`
    /// has integer coefficients of gcd 1. Returns 1 for the zero polynomial.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rat::from_bigint(num_gcd.abs()) / Rat::from_bigint(den_lcm)
    }

    fn var_name(i: usize) -> &'static str {
        ["k0", "k1"][i]
    }

    /// Render with `+`/`-` separated monomials, lexicographic order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&(e0, e1), c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (e0 == 0 && e1 == 0) {
                factors.push(mag.encode());
            }
            for (e, v) in [(e0, 0usize), (e1, 1usize)] {
                if e == 1 {
                    factors.push(Self::var_name(v).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", Self::var_name(v), e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_expands() {
        // (k0+k1+1)(k0+k1+2) = k0^2 + 2 k0 k1 + k1^2 + 3 k0 + 3 k1 + 2
        let p = ParamPoly::affine(1, 1, Rat::one());
        let q = ParamPoly::affine(1, 1, Rat::from_int(2));
        let prod = p.mul(&q);
        assert_eq!(prod.coeff(2, 0), Rat::one());
        assert_eq!(prod.coeff(1, 1), Rat::from_int(2));
        assert_eq!(prod.coeff(0, 2), Rat::one());
        assert_eq!(prod.coeff(1, 0), Rat::from_int(3));
        assert_eq!(prod.coeff(0, 1), Rat::from_int(3));
        assert_eq!(prod.coeff(0, 0), Rat::from_int(2));
    }

    #[test]
    fn pochhammer_cases() {
        // (k0 + 1/2)_2 = k0^2 + 2 k0 + 3/4
        let base = ParamPoly::affine(1, 0, Rat::new(1, 2));
        let p = base.pochhammer(2);
        assert_eq!(p.coeff(2, 0), Rat::one());
        assert_eq!(p.coeff(1, 0), Rat::from_int(2));
        assert_eq!(p.coeff(0, 0), Rat::new(3, 4));
        // empty product
        assert_eq!(base.pochhammer(0), ParamPoly::one());
        // (-3)_5 = 0 since (-k)_j = 0 for j > k
        let neg3 = ParamPoly::constant(Rat::from_int(-3));
        assert!(neg3.pochhammer(5).is_zero());
        assert_eq!(neg3.pochhammer(3), ParamPoly::constant(Rat::from_int(-6)));
    }

    #[test]
    fn pochhammer_concatenation() {
        // (x)_{m+n} = (x)_m (x+m)_n
        let base = ParamPoly::affine(1, 2, Rat::new(-1, 3));
        for m in 0..=8u32 {
            for n in 0..=8u32 {
                let lhs = base.pochhammer(m + n);
                let mut shifted = base.clone();
                shifted.add_term(0, 0, Rat::from_int(m as i64));
                let rhs = base.pochhammer(m).mul(&shifted.pochhammer(n));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn division_by_linear_form() {
        // (2k0+1)(k0-k1) / (2k0+1)
        let f = ParamPoly::affine(2, 0, Rat::one()).mul(&ParamPoly::affine(1, -1, Rat::zero()));
        let q = f.div_exact_by_form(2, 0, &Rat::one()).unwrap();
        assert_eq!(q, ParamPoly::affine(1, -1, Rat::zero()));
        // k0^2 - k1^2 is not divisible by k0+k1+1
        let f = ParamPoly::k0().mul(&ParamPoly::k0()).sub(&ParamPoly::k1().mul(&ParamPoly::k1()));
        assert!(f.div_exact_by_form(1, 1, &Rat::one()).is_none());
        // but divisible by k0+k1
        let q = f.div_exact_by_form(1, 1, &Rat::zero()).unwrap();
        assert_eq!(q, ParamPoly::affine(1, -1, Rat::zero()));
        // pure-k1 form
        let f = ParamPoly::affine(0, 2, Rat::one()).mul(&ParamPoly::k0());
        let q = f.div_exact_by_form(0, 2, &Rat::one()).unwrap();
        assert_eq!(q, ParamPoly::k0());
    }

    #[test]
    fn content_extraction() {
        let p = ParamPoly::affine(4, 6, Rat::from_int(2));
        assert_eq!(p.content(), Rat::from_int(2));
        let p = ParamPoly::affine(1, 0, Rat::new(1, 2));
        assert_eq!(p.content(), Rat::new(1, 2));
        let p = ParamPoly::affine(-4, -6, Rat::from_int(-2));
        assert_eq!(p.content(), Rat::from_int(2));
    }

    #[test]
    fn substitute_second_variable() {
        // p = k1^2 + k0, substitute k1 := 1 - k0  ->  k0^2 - k0 + 1 ... check by eval
        let p = ParamPoly::k1().mul(&ParamPoly::k1()).add(&ParamPoly::k0());
        let q = ParamPoly::affine(-1, 0, Rat::one());
        let s = p.substitute_k1(&q);
        for k0 in [-3i64, 0, 2, 7] {
            let x = Rat::from_int(k0);
            let expected = p.eval(&x, &(Rat::one() - x.clone()));
            assert_eq!(s.eval(&x, &Rat::zero()), expected);
        }
    }
}
