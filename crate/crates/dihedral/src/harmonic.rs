//! Harmonic polynomial bases and their structural constants.
//!
//! The building blocks are the degree-n polynomials f_n (annihilated by
//! Tbar in the s = 1 case), their swap-symmetric and antisymmetric parts
//! f_n^0 and f_n^1, the inverse-square-norm constants lambda, and the
//! biorthogonality constants nu. Bases for general s arise via z -> z^s.
//!
//! Two independent constructions are provided: the coefficient form (single
//! E-function sums, normative — this is what the intertwining formulas
//! consume) and the definitional Jacobi-polynomial form (redundancy check).
//! The circle measure enters through exact normalized power moments of the
//! Jacobi weight; the moment recurrence is validated against numeric
//! quadrature in the verification layer.

use crate::dunkl::GroupParam;
use crate::field::{Affine, ParamRat};
use crate::hypergeom::{e_fn, jacobi_coeffs, EParams};
use crate::multipoly::MultiPoly;
use crate::scalar::Rat;

/// Which member of the harmonic family: f, f^0 (swap-symmetric part) or
/// f^1 (swap-antisymmetric part).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Full,
    Sym,
    Anti,
}

impl Variant {
    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "f" => Some(Variant::Full),
            "f0" => Some(Variant::Sym),
            "f1" => Some(Variant::Anti),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Variant::Full => "f",
            Variant::Sym => "f0",
            Variant::Anti => "f1",
        }
    }
}

fn half(n: i64) -> Rat {
    Rat::new(n, 2)
}

fn e_kappa(n: u32, c1: Rat, c2: Rat) -> ParamRat {
    e_fn(n, &EParams::kappa(c1, c2)).expect("kappa-shape E-function never degenerates")
}

/// The harmonic family member of degree n, built from the E-function
/// coefficient formulas. This is the normative construction.
///
/// Results are memoized behind a synchronized cache; the family does not
/// depend on s (bases for general s substitute z -> z^s afterwards).
pub fn f_coeff_form(n: u32, variant: Variant) -> MultiPoly {
    use std::collections::HashMap;
    use std::sync::Mutex;
    static CACHE: Mutex<Option<HashMap<(u32, u8), MultiPoly>>> = Mutex::new(None);
    let key = (n, variant as u8);
    {
        let guard = CACHE.lock().unwrap();
        if let Some(cache) = guard.as_ref() {
            if let Some(hit) = cache.get(&key) {
                return hit.clone();
            }
        }
    }
    let computed = f_coeff_form_uncached(n, variant);
    let mut guard = CACHE.lock().unwrap();
    guard
        .get_or_insert_with(HashMap::new)
        .insert(key, computed.clone());
    computed
}

fn f_coeff_form_uncached(n: u32, variant: Variant) -> MultiPoly {
    let mut out = MultiPoly::zero(2);
    if n.is_multiple_of(2) {
        let v = n / 2;
        match variant {
            Variant::Sym => {
                for j in 1..=v {
                    let c = ParamRat::from_poly(Affine::new(1, 1, Rat::from_int(v as i64)).poch(j))
                        .mul(&e_kappa(v - j, half(2 * j as i64 + 1), half(2 * j as i64 + 1)))
                        .mul_rat(&(Rat::pow2(2 * j as i64) * Rat::factorial(j)).recip());
                    out.add_term([v + j, v - j, 0, 0], c.clone());
                    out.add_term([v - j, v + j, 0, 0], c);
                }
                out.add_term([v, v, 0, 0], e_kappa(v, half(1), half(1)));
            }
            Variant::Anti => {
                for j in 1..=v {
                    let c = ParamRat::from_poly(
                        Affine::new(1, 1, Rat::from_int(v as i64 + 1)).poch(j - 1),
                    )
                    .mul(&e_kappa(v - j, half(2 * j as i64 + 1), half(2 * j as i64 + 1)))
                    .mul_rat(&(Rat::pow2(2 * j as i64) * Rat::factorial(j - 1)).recip());
                    out.add_term([v + j, v - j, 0, 0], c.clone());
                    out.add_term([v - j, v + j, 0, 0], c.neg());
                }
            }
            Variant::Full => {
                for j in 1..=v {
                    let base = ParamRat::from_poly(
                        Affine::new(1, 1, Rat::from_int(v as i64 + 1)).poch(j - 1),
                    )
                    .mul(&e_kappa(v - j, half(2 * j as i64 + 1), half(2 * j as i64 + 1)))
                    .mul_rat(&(Rat::pow2(2 * j as i64) * Rat::factorial(j)).recip());
                    let plus = Affine::new(1, 1, Rat::from_int((v + j) as i64)).as_poly();
                    let minus = Affine::new(1, 1, Rat::from_int(v as i64 - j as i64)).as_poly();
                    out.add_term([v + j, v - j, 0, 0], base.mul_poly(&plus));
                    out.add_term([v - j, v + j, 0, 0], base.mul_poly(&minus));
                }
                out.add_term([v, v, 0, 0], e_kappa(v, half(1), half(1)));
            }
        }
    } else {
        let v = (n - 1) / 2;
        match variant {
            Variant::Sym => {
                let front = ParamRat::affine(1, 0, half(2 * v as i64 + 1)); // v + k0 + 1/2
                for j in 0..=v {
                    let c = front
                        .mul_poly(&Affine::new(1, 1, Rat::from_int(v as i64 + 1)).poch(j))
                        .mul(&e_kappa(v - j, half(2 * j as i64 + 1), half(2 * j as i64 + 3)))
                        .mul_rat(&(Rat::pow2(2 * j as i64 + 1) * Rat::factorial(j)).recip());
                    out.add_term([v + 1 + j, v - j, 0, 0], c.clone());
                    out.add_term([v - j, v + 1 + j, 0, 0], c);
                }
            }
            Variant::Anti => {
                let front = ParamRat::affine(0, 1, half(2 * v as i64 + 1)); // v + k1 + 1/2
                for j in 0..=v {
                    let c = front
                        .mul_poly(&Affine::new(1, 1, Rat::from_int(v as i64 + 1)).poch(j))
                        .mul(&e_kappa(v - j, half(2 * j as i64 + 3), half(2 * j as i64 + 1)))
                        .mul_rat(&(Rat::pow2(2 * j as i64 + 1) * Rat::factorial(j)).recip());
                    out.add_term([v + 1 + j, v - j, 0, 0], c.clone());
                    out.add_term([v - j, v + 1 + j, 0, 0], c.neg());
                }
            }
            Variant::Full => {
                for j in 1..=(v + 1) {
                    let base = ParamRat::from_poly(
                        Affine::new(1, 1, Rat::from_int(v as i64 + 1)).poch(j),
                    )
                    .mul(&e_kappa(v + 1 - j, half(2 * j as i64 + 1), half(2 * j as i64 + 1)))
                    .mul_rat(&(Rat::pow2(2 * j as i64) * Rat::factorial(j)).recip());
                    out.add_term(
                        [v + j, v + 1 - j, 0, 0],
                        base.mul_rat(&Rat::from_int((v + 1 + j) as i64)),
                    );
                    if j <= v {
                        out.add_term(
                            [v - j, v + 1 + j, 0, 0],
                            base.mul_rat(&Rat::from_int(v as i64 + 1 - j as i64)),
                        );
                    }
                }
                out.add_term(
                    [v, v + 1, 0, 0],
                    e_kappa(v + 1, half(1), half(1)).mul_rat(&Rat::from_int(v as i64 + 1)),
                );
            }
        }
    }
    out
}

/// Expand sum_k coeffs[k] * (-1/4)^k (z - zbar)^(2k) (z zbar)^(m - k),
/// the image of r^(2m) P_m(cos 2theta) in (z, zbar) coordinates.
fn jacobi_expansion(m: u32, coeffs: &[ParamRat]) -> MultiPoly {
    let z_minus = MultiPoly::mono2(1, 0, ParamRat::one()).sub(&MultiPoly::mono2(
        0,
        1,
        ParamRat::one(),
    ));
    let zzbar = MultiPoly::mono2(1, 1, ParamRat::one());
    let mut out = MultiPoly::zero(2);
    for (k, c) in coeffs.iter().enumerate() {
        let k = k as u32;
        let factor = c.mul_rat(&Rat::new(-1, 4).powi(k as i64));
        let mut term = MultiPoly::constant(2, factor);
        for _ in 0..2 * k {
            term = term.mul(&z_minus);
        }
        for _ in 0..(m - k) {
            term = term.mul(&zzbar);
        }
        out = out.add(&term);
    }
    out
}

/// The harmonic family member from the defining Jacobi-polynomial form.
/// Must coincide with [`f_coeff_form`]; kept as the redundancy check.
pub fn f_definitional(n: u32, variant: Variant) -> MultiPoly {
    let full = if n.is_multiple_of(2) {
        let v = n / 2;
        // r^(2v) P_v^(k0-1/2, k1-1/2)(cos 2theta)
        let a = jacobi_expansion(
            v,
            &jacobi_coeffs(v, &Affine::new(1, 0, half(-1)), &Affine::new(0, 1, half(-1))),
        );
        if v == 0 {
            a
        } else {
            // + 1/4 (z^2 - zbar^2) r^(2v-2) P_{v-1}^(k0+1/2, k1+1/2)
            let inner = jacobi_expansion(
                v - 1,
                &jacobi_coeffs(v - 1, &Affine::new(1, 0, half(1)), &Affine::new(0, 1, half(1))),
            );
            let z2_m = MultiPoly::mono2(2, 0, ParamRat::from_rat(Rat::new(1, 4))).sub(
                &MultiPoly::mono2(0, 2, ParamRat::from_rat(Rat::new(1, 4))),
            );
            a.add(&z2_m.mul(&inner))
        }
    } else {
        let v = (n - 1) / 2;
        // (v + k0 + 1/2) * (z + zbar)/2 * r^(2v) P_v^(k0-1/2, k1+1/2)
        let sym_half = MultiPoly::mono2(1, 0, ParamRat::from_rat(half(1)))
            .add(&MultiPoly::mono2(0, 1, ParamRat::from_rat(half(1))));
        let anti_half = MultiPoly::mono2(1, 0, ParamRat::from_rat(half(1)))
            .sub(&MultiPoly::mono2(0, 1, ParamRat::from_rat(half(1))));
        let p_sym = jacobi_expansion(
            v,
            &jacobi_coeffs(v, &Affine::new(1, 0, half(-1)), &Affine::new(0, 1, half(1))),
        );
        let p_anti = jacobi_expansion(
            v,
            &jacobi_coeffs(v, &Affine::new(1, 0, half(1)), &Affine::new(0, 1, half(-1))),
        );
        let front_sym = ParamRat::affine(1, 0, half(2 * v as i64 + 1));
        let front_anti = ParamRat::affine(0, 1, half(2 * v as i64 + 1));
        sym_half
            .mul(&p_sym)
            .scalar_mul(&front_sym)
            .add(&anti_half.mul(&p_anti).scalar_mul(&front_anti))
    };
    match variant {
        Variant::Full => full,
        Variant::Sym => full
            .add(&full.conjugate_swap())
            .scalar_mul_rat(&half(1)),
        Variant::Anti => full
            .sub(&full.conjugate_swap())
            .scalar_mul_rat(&half(1)),
    }
}

/// The factored rising factorial (a k0 + b k1 + c)_n as denominator factors.
fn poch_factors(a: i64, b: i64, c: Rat, n: u32) -> Vec<((i64, i64, Rat), u32)> {
    (0..n)
        .map(|i| ((a, b, c.clone() + Rat::from_int(i as i64)), 1))
        .collect()
}

/// Both kappa-half Pochhammers (k0+1/2)_p (k1+1/2)_p as denominator factors.
fn kappa_half_factors(p: u32) -> Vec<((i64, i64, Rat), u32)> {
    let mut v = poch_factors(1, 0, half(1), p);
    v.extend(poch_factors(0, 1, half(1), p));
    v
}

/// The inverse square norm lambda of the degree-n family member.
///
/// Conventions: lambda_0 = lambda_0^0 = 1 and lambda_0^1 = 0.
pub fn lambda_const(n: u32, variant: Variant) -> ParamRat {
    let ksum1 = Affine::new(1, 1, Rat::one()); // k0 + k1 + 1
    if n.is_multiple_of(2) {
        let m = n / 2;
        match variant {
            Variant::Full => {
                if m == 0 {
                    return ParamRat::one();
                }
                let num = ksum1.poch(m).scale(&Rat::factorial(m));
                ParamRat::from_num_den(num, kappa_half_factors(m))
            }
            Variant::Sym => {
                if m == 0 {
                    return ParamRat::one();
                }
                let num = ksum1
                    .poch(m)
                    .mul(&Affine::new(1, 1, Rat::from_int(2 * m as i64)).as_poly())
                    .scale(&Rat::factorial(m));
                let mut den = kappa_half_factors(m);
                den.push(((1, 1, Rat::from_int(m as i64)), 1));
                ParamRat::from_num_den(num, den)
            }
            Variant::Anti => {
                if m == 0 {
                    return ParamRat::zero();
                }
                let num = ksum1
                    .poch(m)
                    .mul(&Affine::new(1, 1, Rat::from_int(2 * m as i64)).as_poly())
                    .scale(&Rat::factorial(m - 1));
                ParamRat::from_num_den(num, kappa_half_factors(m))
            }
        }
    } else {
        let m = (n - 1) / 2;
        match variant {
            Variant::Full => {
                let num = ksum1.poch(m).scale(&Rat::factorial(m));
                ParamRat::from_num_den(num, kappa_half_factors(m + 1))
            }
            Variant::Sym => {
                let num = ksum1
                    .poch(m)
                    .mul(&Affine::new(1, 1, Rat::from_int(2 * m as i64 + 1)).as_poly())
                    .scale(&Rat::factorial(m));
                let mut den = kappa_half_factors(m + 1);
                den.push(((1, 0, half(2 * m as i64 + 1)), 1));
                ParamRat::from_num_den(num, den)
            }
            Variant::Anti => {
                let num = ksum1
                    .poch(m)
                    .mul(&Affine::new(1, 1, Rat::from_int(2 * m as i64 + 1)).as_poly())
                    .scale(&Rat::factorial(m));
                let mut den = kappa_half_factors(m + 1);
                den.push(((0, 1, half(2 * m as i64 + 1)), 1));
                ParamRat::from_num_den(num, den)
            }
        }
    }
}

type RawDen = Vec<((i64, i64, Rat), u32)>;

/// Factor lists for nu_n = 2/(q!) * top / prod(bottom): the Pochhammer
/// halves in the numerator and the parameter-sum forms in the denominator.
/// Both sides are products of linear forms, so nu and 1/nu are equally
/// representable.
fn nu_factors(n: u32) -> (Rat, RawDen, RawDen) {
    assert!(n >= 1);
    let (p, q) = if n.is_multiple_of(2) {
        (n / 2, n / 2 - 1) // nu_{2m}: (k0+1/2)_m (k1+1/2)_m over (m-1)! ...
    } else {
        ((n - 1) / 2 + 1, (n - 1) / 2) // nu_{2m+1}: (k0+1/2)_{m+1} ...
    };
    let scalar = Rat::from_int(2) / Rat::factorial(q);
    let mut top: RawDen = Vec::new();
    for i in 0..p {
        top.push(((1, 0, half(1 + 2 * i as i64)), 1));
        top.push(((0, 1, half(1 + 2 * i as i64)), 1));
    }
    let mut bottom: RawDen = vec![((1, 1, Rat::from_int(n as i64)), 1)];
    for i in 0..q {
        bottom.push(((1, 1, Rat::from_int(1 + i as i64)), 1));
    }
    (scalar, top, bottom)
}

fn product_poly(factors: &RawDen) -> crate::field::ParamPoly {
    factors.iter().fold(
        crate::field::ParamPoly::one(),
        |acc, ((a, b, c), m)| acc.mul(&crate::field::ParamPoly::affine(*a, *b, c.clone()).pow(*m)),
    )
}

/// nu_n = <f_n(z^s), z^s f_{n-1}(z^s)>, the biorthogonality constant.
pub fn nu_const(n: u32) -> ParamRat {
    let (scalar, top, bottom) = nu_factors(n);
    ParamRat::from_num_den(product_poly(&top), bottom).mul_rat(&scalar)
}

/// 1 / nu_n with the denominator kept factored.
pub fn nu_inv_const(n: u32) -> ParamRat {
    let (scalar, top, bottom) = nu_factors(n);
    ParamRat::from_num_den(product_poly(&bottom), top).mul_rat(&scalar.recip())
}

/// The orthogonal basis pair of the degree-N harmonic space for I2(2s).
///
/// For N = ns + t with 1 <= t < s this is {z^t f_n(z^s), zbar^t f_n(zbar^s)};
/// for t = 0 it is {f_n^0(z^s), f_n^1(z^s)}.
pub fn basis_h(g: &GroupParam, big_n: u32) -> (MultiPoly, MultiPoly) {
    assert!(big_n >= 1);
    let s = g.s();
    let n = big_n / s;
    let t = big_n % s;
    if t == 0 {
        (
            f_coeff_form(n, Variant::Sym).substitute_power(s),
            f_coeff_form(n, Variant::Anti).substitute_power(s),
        )
    } else {
        let f = f_coeff_form(n, Variant::Full).substitute_power(s);
        let zt = MultiPoly::mono2(t, 0, ParamRat::one());
        let first = zt.mul(&f);
        (first.clone(), first.conjugate_swap())
    }
}

/// Exact normalized power moments m_j = int t^j dW / int dW of the Jacobi
/// weight W = (1-t)^(k0-1/2) (1+t)^(k1-1/2) on (-1, 1), for j = 0..=jmax.
///
/// Recurrence (integration by parts on t^j (1-t)^(k0+1/2) (1+t)^(k1+1/2)):
/// (j + k0 + k1 + 1) m_{j+1} = j m_{j-1} + (k1 - k0) m_j.
pub fn power_moments(jmax: u32) -> Vec<ParamRat> {
    let mut m = Vec::with_capacity(jmax as usize + 1);
    m.push(ParamRat::one());
    if jmax == 0 {
        return m;
    }
    m.push(ParamRat::affine(-1, 1, Rat::zero()).div_form(1, 1, Rat::one()));
    for j in 1..jmax {
        let a = m[(j - 1) as usize].mul_rat(&Rat::from_int(j as i64));
        let b = m[j as usize].mul_poly(&Affine::new(-1, 1, Rat::zero()).as_poly());
        let next = a.add(&b).div_form(1, 1, Rat::from_int(j as i64 + 1));
        m.push(next);
    }
    m
}

/// Chebyshev T_k in the power basis, as exact integer coefficients.
fn chebyshev_t(k: u32) -> Vec<Rat> {
    let mut prev: Vec<Rat> = vec![Rat::one()];
    if k == 0 {
        return prev;
    }
    let mut cur: Vec<Rat> = vec![Rat::zero(), Rat::one()];
    for _ in 1..k {
        let mut next = vec![Rat::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += &(c * &Rat::from_int(2));
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// The exact circle moment int z^a zbar^b dmu for the group I2(2s).
///
/// Vanishes unless a = b mod 2s; otherwise it is the normalized Jacobi
/// integral of the Chebyshev polynomial T_k with k = |a-b| / 2s.
pub fn circle_moment(g: &GroupParam, a: u32, b: u32) -> ParamRat {
    let diff = a as i64 - b as i64;
    let period = 2 * g.s() as i64;
    if diff % period != 0 {
        return ParamRat::zero();
    }
    let k = (diff.unsigned_abs() / period as u64) as u32;
    let cheb = chebyshev_t(k);
    let moments = power_moments(cheb.len() as u32 - 1);
    let mut acc = ParamRat::zero();
    for (i, c) in cheb.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&moments[i].mul_rat(c));
        }
    }
    acc
}

/// <f, h> = int f(z) conj(h(z)) dmu, by bilinear extension over monomial
/// moments; conj acts by interchanging z and zbar on real-coefficient h.
pub fn inner_product(f: &MultiPoly, h: &MultiPoly, g: &GroupParam) -> ParamRat {
    assert!(f.arity() == 2 && h.arity() == 2);
    let mut acc = ParamRat::zero();
    for (&ef, cf) in f.terms() {
        for (&eh, ch) in h.terms() {
            let moment = circle_moment(g, ef[0] + eh[1], ef[1] + eh[0]);
            if !moment.is_zero() {
                acc = acc.add(&cf.mul(ch).mul(&moment));
            }
        }
    }
    acc
}
