//! Sparse polynomials in z, z-bar (and w, w-bar for kernels) over the
//! rational-function coefficient field.
//!
//! The exponent tuple is stored as [z, zbar, w, wbar]; arity-2 polynomials
//! keep the last two entries at zero. Coefficient access at negative indices
//! returns zero — the boundary terms of the intertwining formulas rely on
//! that convention.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::ParamRat;
use crate::scalar::Rat;

pub type Exps = [u32; 4];

/// Which variable pair an arity-2 polynomial lands in when embedded into an
/// arity-4 kernel polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarPair {
    Z,
    W,
}

/// A sparse multivariate polynomial with `ParamRat` coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    arity: u8,
    terms: BTreeMap<Exps, ParamRat>,
}

impl MultiPoly {
    pub fn zero(arity: u8) -> Self {
        assert!(arity == 2 || arity == 4);
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: u8) -> Self {
        MultiPoly::constant(arity, ParamRat::one())
    }

    pub fn constant(arity: u8, c: ParamRat) -> Self {
        let mut p = MultiPoly::zero(arity);
        p.add_term([0, 0, 0, 0], c);
        p
    }

    /// c * z^a zbar^b.
    pub fn mono2(a: u32, b: u32, c: ParamRat) -> Self {
        let mut p = MultiPoly::zero(2);
        p.add_term([a, b, 0, 0], c);
        p
    }

    pub fn mono4(e: Exps, c: ParamRat) -> Self {
        let mut p = MultiPoly::zero(4);
        p.add_term(e, c);
        p
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&[0, 0, 0, 0])
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &ParamRat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Exps, c: ParamRat) {
        if self.arity == 2 {
            debug_assert!(e[2] == 0 && e[3] == 0);
        }
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// c(f; a, b): zero for any negative index.
    pub fn coeff(&self, a: i64, b: i64) -> ParamRat {
        assert!(self.arity == 2);
        if a < 0 || b < 0 {
            return ParamRat::zero();
        }
        self.terms
            .get(&[a as u32, b as u32, 0, 0])
            .cloned()
            .unwrap_or_else(ParamRat::zero)
    }

    pub fn coeff4(&self, e: Exps) -> ParamRat {
        self.terms.get(&e).cloned().unwrap_or_else(ParamRat::zero)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.arity, other.arity);
        let mut out = MultiPoly::zero(self.arity);
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &ParamRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(&e, v)| (e, v.mul(c))).collect(),
        }
    }

    pub fn scalar_mul_rat(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(&e, v)| (e, v.mul_rat(c))).collect(),
        }
    }

    /// Interchange z with zbar (and w with wbar for arity 4).
    pub fn conjugate_swap(&self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| ([e[1], e[0], e[3], e[2]], c.clone()))
                .collect(),
        }
    }

    /// Interchange the z-pair with the w-pair (arity 4).
    pub fn swap_zw(&self) -> MultiPoly {
        assert_eq!(self.arity, 4);
        MultiPoly {
            arity: 4,
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| ([e[2], e[3], e[0], e[1]], c.clone()))
                .collect(),
        }
    }

    /// z^a zbar^b -> z^(as) zbar^(bs).
    pub fn substitute_power(&self, s: u32) -> MultiPoly {
        assert!(self.arity == 2 && s >= 1);
        MultiPoly {
            arity: 2,
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| ([e[0] * s, e[1] * s, 0, 0], c.clone()))
                .collect(),
        }
    }

    /// Embed an arity-2 polynomial into arity 4 on the chosen variable pair.
    /// With `swapped`, the polynomial is evaluated at the conjugated pair
    /// (i.e. f of zbar for [`VarPair::Z`], f of wbar for [`VarPair::W`]).
    pub fn embed(&self, pair: VarPair, swapped: bool) -> MultiPoly {
        assert_eq!(self.arity, 2);
        let mut out = MultiPoly::zero(4);
        for (&e, c) in &self.terms {
            let (x, y) = if swapped { (e[1], e[0]) } else { (e[0], e[1]) };
            let exps = match pair {
                VarPair::Z => [x, y, 0, 0],
                VarPair::W => [0, 0, x, y],
            };
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Partial derivative with respect to z (arity 2).
    pub fn dz(&self) -> MultiPoly {
        assert_eq!(self.arity, 2);
        let mut out = MultiPoly::zero(2);
        for (&e, c) in &self.terms {
            if e[0] > 0 {
                out.add_term([e[0] - 1, e[1], 0, 0], c.mul_rat(&Rat::from_int(e[0] as i64)));
            }
        }
        out
    }

    /// Partial derivative with respect to zbar (arity 2).
    pub fn dzbar(&self) -> MultiPoly {
        assert_eq!(self.arity, 2);
        let mut out = MultiPoly::zero(2);
        for (&e, c) in &self.terms {
            if e[1] > 0 {
                out.add_term([e[0], e[1] - 1, 0, 0], c.mul_rat(&Rat::from_int(e[1] as i64)));
            }
        }
        out
    }

    /// Total degree in the z-pair if homogeneous, else None. The zero
    /// polynomial is homogeneous of every degree; returns Some(0).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg: Option<u32> = None;
        for e in self.terms.keys() {
            let d = e[0] + e[1];
            match deg {
                None => deg = Some(d),
                Some(x) if x == d => {}
                _ => return None,
            }
        }
        Some(deg.unwrap_or(0))
    }

    /// Degree in the w-pair if homogeneous there (arity 4).
    pub fn homogeneous_degree_w(&self) -> Option<u32> {
        let mut deg: Option<u32> = None;
        for e in self.terms.keys() {
            let d = e[2] + e[3];
            match deg {
                None => deg = Some(d),
                Some(x) if x == d => {}
                _ => return None,
            }
        }
        Some(deg.unwrap_or(0))
    }

    /// Collect the arity-2 polynomial in (z, zbar) multiplying w^c wbar^d.
    pub fn w_coefficient(&self, c: u32, d: u32) -> MultiPoly {
        assert_eq!(self.arity, 4);
        let mut out = MultiPoly::zero(2);
        for (&e, v) in &self.terms {
            if e[2] == c && e[3] == d {
                out.add_term([e[0], e[1], 0, 0], v.clone());
            }
        }
        out
    }

    /// Apply a rational-function map to every coefficient.
    pub fn map_coeffs<F: Fn(&ParamRat) -> ParamRat>(&self, f: F) -> MultiPoly {
        let mut out = MultiPoly::zero(self.arity);
        for (&e, c) in &self.terms {
            out.add_term(e, f(c));
        }
        out
    }

    /// Specialize every coefficient at a rational parameter point.
    pub fn specialize(&self, k0: &Rat, k1: &Rat) -> crate::error::Result<NumPoly> {
        assert_eq!(self.arity, 2);
        let mut out = NumPoly::zero();
        for (&e, c) in &self.terms {
            out.add_term((e[0], e[1]), c.specialize(k0, k1)?);
        }
        Ok(out)
    }

    fn var_names(&self) -> [&'static str; 4] {
        ["z", "z~", "w", "w~"]
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let names = self.var_names();
        let mut parts: Vec<String> = Vec::new();
        for (&e, c) in &self.terms {
            let mut mono: Vec<String> = Vec::new();
            for (i, &exp) in e.iter().enumerate() {
                if exp == 1 {
                    mono.push(names[i].to_string());
                } else if exp > 1 {
                    mono.push(format!("{}^{}", names[i], exp));
                }
            }
            let mono_str = mono.join("*");
            let part = if mono_str.is_empty() {
                c.render()
            } else if c.is_one() {
                mono_str
            } else {
                format!("[{}]*{}", c.render(), mono_str)
            };
            parts.push(part);
        }
        parts.join("  +  ")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A polynomial in (z, zbar) with plain rational coefficients — the value
/// type of the specialized intertwining oracle.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NumPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl NumPoly {
    pub fn zero() -> Self {
        NumPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        let mut p = NumPoly::zero();
        p.add_term((0, 0), Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rat {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &NumPoly) -> NumPoly {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NumPoly) -> NumPoly {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, -c);
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> NumPoly {
        if c.is_zero() {
            return NumPoly::zero();
        }
        NumPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ParamPoly;

    fn z() -> MultiPoly {
        MultiPoly::mono2(1, 0, ParamRat::one())
    }

    fn zbar() -> MultiPoly {
        MultiPoly::mono2(0, 1, ParamRat::one())
    }

    #[test]
    fn coeff_conventions() {
        // z^2 zbar
        let f = MultiPoly::mono2(2, 1, ParamRat::one());
        assert!(f.coeff(2, 1).is_one());
        assert!(f.coeff(1, 2).is_zero());
        assert!(f.coeff(-1, 3).is_zero());
    }

    #[test]
    fn conjugate_swap_cases() {
        let z2 = MultiPoly::mono2(2, 0, ParamRat::one());
        assert_eq!(z2.conjugate_swap(), MultiPoly::mono2(0, 2, ParamRat::one()));
        let sym = MultiPoly::mono2(1, 1, ParamRat::one());
        assert_eq!(sym.conjugate_swap(), sym);
        let f = z().add(&MultiPoly::mono2(3, 1, ParamRat::affine(1, -1, Rat::zero())));
        assert_eq!(f.conjugate_swap().conjugate_swap(), f);
    }

    #[test]
    fn product_difference_of_squares() {
        let f = z().add(&zbar());
        let g = z().sub(&zbar());
        let prod = f.mul(&g);
        let expected = MultiPoly::mono2(2, 0, ParamRat::one())
            .sub(&MultiPoly::mono2(0, 2, ParamRat::one()));
        assert_eq!(prod, expected);
    }

    #[test]
    fn swap_is_ring_automorphism() {
        let f = z().add(&MultiPoly::mono2(2, 1, ParamRat::from_int(3)));
        let g = zbar().sub(&MultiPoly::mono2(0, 2, ParamRat::affine(1, 0, Rat::one())));
        assert_eq!(
            f.mul(&g).conjugate_swap(),
            f.conjugate_swap().mul(&g.conjugate_swap())
        );
    }

    #[test]
    fn substitute_power_cases() {
        let f = MultiPoly::mono2(2, 0, ParamRat::one());
        assert_eq!(f.substitute_power(3), MultiPoly::mono2(6, 0, ParamRat::one()));
        let g = f.add(&MultiPoly::mono2(1, 1, ParamRat::from_int(5)));
        assert_eq!(g.substitute_power(1), g);
        // c(f(z^s); as, bs) = c(f; a, b)
        let s = 3;
        let sub = g.substitute_power(s);
        for (e, _) in g.terms() {
            assert_eq!(
                sub.coeff((e[0] * s) as i64, (e[1] * s) as i64),
                g.coeff(e[0] as i64, e[1] as i64)
            );
        }
    }

    #[test]
    fn homogeneity_under_mul() {
        let f = z().add(&zbar()); // degree 1
        let g = MultiPoly::mono2(2, 0, ParamRat::one()).add(&MultiPoly::mono2(1, 1, ParamRat::one()));
        assert_eq!(f.homogeneous_degree(), Some(1));
        assert_eq!(g.homogeneous_degree(), Some(2));
        assert_eq!(f.mul(&g).homogeneous_degree(), Some(3));
        let inhom = f.add(&g);
        assert_eq!(inhom.homogeneous_degree(), None);
    }

    #[test]
    fn coeff_is_linear() {
        let c1 = ParamRat::from_poly(ParamPoly::affine(1, 1, Rat::one()));
        let c2 = ParamRat::from_num_den(ParamPoly::one(), vec![((2, 0, Rat::one()), 1)]);
        let f = MultiPoly::mono2(2, 1, c1.clone());
        let g = MultiPoly::mono2(2, 1, c2.clone());
        assert_eq!(f.add(&g).coeff(2, 1), c1.add(&c2));
    }

    #[test]
    fn derivative() {
        // d/dz (z^3 zbar) = 3 z^2 zbar
        let f = MultiPoly::mono2(3, 1, ParamRat::one());
        assert_eq!(f.dz(), MultiPoly::mono2(2, 1, ParamRat::from_int(3)));
        assert_eq!(f.dzbar(), MultiPoly::mono2(3, 0, ParamRat::one()));
        assert!(MultiPoly::one(2).dz().is_zero());
    }

    #[test]
    fn embedding() {
        let f = MultiPoly::mono2(2, 1, ParamRat::one());
        assert_eq!(f.embed(VarPair::W, false), MultiPoly::mono4([0, 0, 2, 1], ParamRat::one()));
        assert_eq!(f.embed(VarPair::W, true), MultiPoly::mono4([0, 0, 1, 2], ParamRat::one()));
        let k = f.embed(VarPair::Z, false).mul(&f.embed(VarPair::W, true));
        assert_eq!(k.coeff4([2, 1, 1, 2]), ParamRat::one());
        assert_eq!(k.w_coefficient(1, 2), f);
        assert_eq!(k.swap_zw().coeff4([1, 2, 2, 1]), ParamRat::one());
    }
}
