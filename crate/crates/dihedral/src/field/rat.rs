//! Rational functions in (k0, k1) with factored linear-form denominators.
//!
//! A `ParamRat` is `scale * num / prod(den)` where `num` is a polynomial,
//! `scale` a positive rational and `den` a multiset of canonical linear
//! forms. Construction always reduces: any denominator factor that exactly
//! divides the numerator is cancelled, and the numerator's rational content
//! is pulled into the scale. Since linear forms are irreducible in
//! Q[k0, k1], the reduced representation is unique up to the sign placement
//! inside `num`, and equality is decided by cross-multiplication.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Rat;

use super::form::LinearForm;
use super::poly::ParamPoly;

/// A reduced rational function of the two parameters.
#[derive(Clone, Debug)]
pub struct ParamRat {
    num: ParamPoly,
    den: BTreeMap<LinearForm, u32>,
    scale: Rat,
}

impl ParamRat {
    pub fn zero() -> Self {
        ParamRat {
            num: ParamPoly::zero(),
            den: BTreeMap::new(),
            scale: Rat::one(),
        }
    }

    pub fn one() -> Self {
        ParamRat::from_poly(ParamPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        ParamRat::from_rat(Rat::from_int(n))
    }

    pub fn from_rat(c: Rat) -> Self {
        ParamRat::from_poly(ParamPoly::constant(c))
    }

    pub fn from_poly(num: ParamPoly) -> Self {
        ParamRat::build(num, Vec::new(), Rat::one())
    }

    /// The affine polynomial a·k0 + b·k1 + c as a rational function.
    pub fn affine(a: i64, b: i64, c: Rat) -> Self {
        ParamRat::from_poly(ParamPoly::affine(a, b, c))
    }

    /// num / prod(forms), with raw (un-normalized) denominator forms.
    pub fn from_num_den(num: ParamPoly, den: Vec<((i64, i64, Rat), u32)>) -> Self {
        ParamRat::build(num, den, Rat::one())
    }

    fn build(mut num: ParamPoly, raw_den: Vec<((i64, i64, Rat), u32)>, mut scale: Rat) -> Self {
        let mut den: BTreeMap<LinearForm, u32> = BTreeMap::new();
        for ((a, b, c), mult) in raw_den {
            if mult == 0 {
                continue;
            }
            assert!(
                a != 0 || b != 0 || !c.is_zero(),
                "identically zero denominator factor"
            );
            let (form, m) = LinearForm::normalize(a, b, c);
            // 1 / (m * form)^mult: the multiplier moves into scale (sign into num).
            let m_pow = m.powi(mult as i64);
            if m_pow.is_negative() {
                num = num.neg();
            }
            scale = scale / m_pow.abs();
            if !form.is_constant() {
                *den.entry(form).or_insert(0) += mult;
            }
        }
        let mut out = ParamRat { num, den, scale };
        out.reduce();
        out
    }

    /// Cancel denominator factors dividing the numerator; normalize content.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            self.scale = Rat::one();
            return;
        }
        let forms: Vec<LinearForm> = self.den.keys().cloned().collect();
        for form in forms {
            while *self.den.get(&form).unwrap_or(&0) > 0 {
                match self
                    .num
                    .div_exact_by_form(form.a(), form.b(), &form.constant_term())
                {
                    Some(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&form).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&form);
                        }
                    }
                    None => break,
                }
            }
        }
        let content = self.num.content();
        if !content.is_one() {
            self.num = self.num.scale(&content.recip());
            self.scale *= &content;
        }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> impl Iterator<Item = (&LinearForm, u32)> {
        self.den.iter().map(|(f, &m)| (f, m))
    }

    pub fn scale(&self) -> &Rat {
        &self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &ParamRat::one()
    }

    /// The numerator including scale, as a polynomial. Only meaningful when
    /// the denominator is empty (i.e. the value is polynomial).
    pub fn as_poly(&self) -> Option<ParamPoly> {
        if self.den.is_empty() {
            Some(self.num.scale(&self.scale))
        } else {
            None
        }
    }

    fn den_poly(&self) -> ParamPoly {
        let mut p = ParamPoly::one();
        for (form, mult) in &self.den {
            p = p.mul(&form.as_poly().pow(*mult));
        }
        p
    }

    pub fn add(&self, other: &ParamRat) -> ParamRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Common denominator: per-form maximum multiplicity.
        let mut common: BTreeMap<LinearForm, u32> = self.den.clone();
        for (f, &m) in &other.den {
            let e = common.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let cofactor = |x: &ParamRat| -> ParamPoly {
            let mut p = ParamPoly::constant(x.scale.clone());
            for (f, &m) in &common {
                let have = x.den.get(f).copied().unwrap_or(0);
                p = p.mul(&f.as_poly().pow(m - have));
            }
            p
        };
        let num = self
            .num
            .mul(&cofactor(self))
            .add(&other.num.mul(&cofactor(other)));
        let raw = common
            .into_iter()
            .map(|(f, m)| ((f.a(), f.b(), f.constant_term()), m))
            .collect();
        ParamRat::build(num, raw, Rat::one())
    }

    pub fn sub(&self, other: &ParamRat) -> ParamRat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ParamRat {
        ParamRat {
            num: self.num.neg(),
            den: self.den.clone(),
            scale: self.scale.clone(),
        }
    }

    pub fn mul(&self, other: &ParamRat) -> ParamRat {
        let num = self.num.mul(&other.num);
        let mut raw: Vec<((i64, i64, Rat), u32)> = Vec::new();
        for (f, &m) in self.den.iter().chain(other.den.iter()) {
            raw.push(((f.a(), f.b(), f.constant_term()), m));
        }
        ParamRat::build(num, raw, self.scale.clone() * &other.scale)
    }

    pub fn mul_rat(&self, c: &Rat) -> ParamRat {
        if c.is_zero() {
            return ParamRat::zero();
        }
        let mut out = self.clone();
        if c.is_negative() {
            out.num = out.num.neg();
        }
        out.scale *= &c.abs();
        out
    }

    pub fn mul_poly(&self, p: &ParamPoly) -> ParamRat {
        let mut out = self.clone();
        out.num = out.num.mul(p);
        out.reduce();
        out
    }

    /// Divide by the raw linear form a·k0 + b·k1 + c.
    pub fn div_form(&self, a: i64, b: i64, c: Rat) -> ParamRat {
        let mut raw: Vec<((i64, i64, Rat), u32)> = self
            .den
            .iter()
            .map(|(f, &m)| ((f.a(), f.b(), f.constant_term()), m))
            .collect();
        raw.push(((a, b, c), 1));
        ParamRat::build(self.num.clone(), raw, self.scale.clone())
    }

    /// Divide by a nonzero rational.
    pub fn div_rat(&self, c: &Rat) -> ParamRat {
        self.mul_rat(&c.recip())
    }

    /// The rising factorial (base)_n of a raw linear form, as a polynomial value.
    pub fn pochhammer(a: i64, b: i64, c: Rat, n: u32) -> ParamRat {
        ParamRat::from_poly(ParamPoly::affine(a, b, c).pochhammer(n))
    }

    /// 1 / (base)_n with the denominator kept factored.
    ///
    /// Errors with `DegenerateDenominator` if some factor base + i is the
    /// identically zero form.
    pub fn inv_pochhammer(a: i64, b: i64, c: Rat, n: u32) -> Result<ParamRat> {
        let mut raw = Vec::with_capacity(n as usize);
        for i in 0..n {
            let ci = c.clone() + Rat::from_int(i as i64);
            if a == 0 && b == 0 && ci.is_zero() {
                return Err(Error::DegenerateDenominator {
                    factor: format!("({})_{} at offset {}", ParamPoly::affine(a, b, c).render(), n, i),
                });
            }
            raw.push(((a, b, ci), 1));
        }
        Ok(ParamRat::build(ParamPoly::one(), raw, Rat::one()))
    }

    /// Exact evaluation at a rational parameter point.
    pub fn specialize(&self, k0: &Rat, k1: &Rat) -> Result<Rat> {
        let mut den_val = Rat::one();
        for (form, &mult) in &self.den {
            let v = form.eval(k0, k1);
            if v.is_zero() {
                return Err(Error::Pole {
                    factor: form.render(),
                    k0: k0.encode(),
                    k1: k1.encode(),
                });
            }
            den_val *= &v.powi(mult as i64);
        }
        Ok(self.num.eval(k0, k1) * &self.scale / den_val)
    }

    /// f64 evaluation; used only by floating-point oracles.
    pub fn eval_f64(&self, k0: f64, k1: f64) -> f64 {
        let evalf = |p: &ParamPoly| -> f64 {
            p.terms()
                .map(|(&(e0, e1), c)| c.to_f64() * k0.powi(e0 as i32) * k1.powi(e1 as i32))
                .sum::<f64>()
        };
        let mut v = evalf(&self.num) * self.scale.to_f64();
        for (form, &mult) in &self.den {
            let fval = form.a() as f64 * k0 + form.b() as f64 * k1 + form.constant_term().to_f64();
            v /= fval.powi(mult as i32);
        }
        v
    }

    /// Substitute k1 := q(k0, k1') through numerator and denominator.
    ///
    /// Each denominator form stays linear provided `q` is affine; the result
    /// is reduced in the new variables.
    pub fn substitute_k1_affine(&self, q_a: i64, q_b: i64, q_c: &Rat) -> ParamRat {
        let q = ParamPoly::affine(q_a, q_b, q_c.clone());
        let num = self.num.substitute_k1(&q);
        let mut raw: Vec<((i64, i64, Rat), u32)> = Vec::new();
        for (f, &m) in &self.den {
            // a k0 + b k1 + c -> (a + b q_a) k0 + (b q_b) k1' + (c + b q_c)
            let a = f.a() + f.b() * q_a;
            let b = f.b() * q_b;
            let c = f.constant_term() + Rat::from_int(f.b()) * q_c;
            raw.push(((a, b, c), m));
        }
        ParamRat::build(num, raw, self.scale.clone())
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let num_str = {
            let n = self.num.scale(&self.scale);
            n.render()
        };
        if self.den.is_empty() {
            num_str
        } else {
            let den_str: Vec<String> = self
                .den
                .iter()
                .map(|(f, &m)| {
                    if m == 1 {
                        format!("({})", f.render())
                    } else {
                        format!("({})^{}", f.render(), m)
                    }
                })
                .collect();
            format!("({}) / [{}]", num_str, den_str.join("*"))
        }
    }
}

impl PartialEq for ParamRat {
    /// Cross-multiplication equality.
    fn eq(&self, other: &ParamRat) -> bool {
        let lhs = self
            .num
            .scale(&self.scale)
            .mul(&other.den_poly());
        let rhs = other
            .num
            .scale(&other.scale)
            .mul(&self.den_poly());
        lhs == rhs
    }
}

impl Eq for ParamRat {}

impl fmt::Display for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
