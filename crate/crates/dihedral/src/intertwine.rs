//! The intertwining operator V on monomials, via its harmonic expansion,
//! extended by linearity and conjugation.
//!
//! V is the unique degree-preserving linear map with T V = V d/dz,
//! Tbar V = V d/dzbar and V 1 = 1. For a monomial z^a zbar^b with a >= b
//! the expansion splits by residue class: a - b = t mod s with 1 <= t < s
//! routes through the two-sum rank-one-basis formula, a = b mod s through
//! the biorthogonal-basis formula. The a < b case is the conjugate-swap of
//! the (b, a) case. For s = 1 every monomial is in the a = b mod s class.
//!
//! [`oracle_v`] is the independent check: it rebuilds V degree by degree at
//! a specialized rational parameter point by solving the (overdetermined)
//! linear systems coming straight from the defining relations, with no
//! reference to the expansion formulas.

use std::collections::BTreeMap;

use crate::dunkl::{apply_t, apply_tbar, GroupParam};
use crate::error::{Error, Result};
use crate::field::ParamRat;
use crate::harmonic::{f_coeff_form, lambda_const, nu_inv_const, Variant};
use crate::multipoly::{MultiPoly, NumPoly};
use crate::scalar::Rat;

/// V(z^a zbar^b) as an exact symbolic polynomial, homogeneous of degree a+b.
pub fn intertwine_mono(g: &GroupParam, a: u32, b: u32) -> MultiPoly {
    if a < b {
        return intertwine_mono(g, b, a).conjugate_swap();
    }
    if a == b {
        // z^a zbar^a is its own symmetrization.
        return intertwine_sym(g, a, b);
    }
    let s = g.s();
    let t = (a - b) % s;
    if t == 0 {
        vz_equal_residue(g, a, b)
    } else {
        vz_split_residue(g, a, b, t)
    }
}

/// Expansion for a - b = t mod s with 1 <= t < s (a > b).
fn vz_split_residue(g: &GroupParam, a: u32, b: u32, t: u32) -> MultiPoly {
    let (first, second) = vz1_terms(g, a, b, t);
    first
        .into_iter()
        .chain(second)
        .fold(MultiPoly::zero(2), |acc, (_, term)| acc.add(&term))
}

/// Summands of one sum of an expansion, keyed by their k index.
pub(crate) type IndexedTerms = Vec<(u32, MultiPoly)>;

/// The individual k-indexed summands of the split-residue expansion:
/// (first sum over z^t f_m(z^s), second sum over zbar^(s-t) f_m(zbar^s)).
/// Zero summands are kept so the singular-value pairing can address them.
pub(crate) fn vz1_terms(g: &GroupParam, a: u32, b: u32, t: u32) -> (IndexedTerms, IndexedTerms) {
    let s = g.s();
    let r = b % s;
    let v = b / s;
    let u = (a - r - t) / s;
    let ab_fact = Rat::factorial(a) * Rat::factorial(b);

    // First sum: components z^t f_m(z^s) with m = u + v - 2k.
    let mut first = Vec::with_capacity(v as usize + 1);
    for k in 0..=v {
        let m = u + v - 2 * k;
        let f = f_coeff_form(m, Variant::Full);
        let coef = f.coeff(u as i64 - k as i64, v as i64 - k as i64);
        let scalar = g
            .inv_gamma0_poch(0, a + (v - k) * s)
            .mul(&lambda_const(m, Variant::Full))
            .mul(&coef)
            .mul_rat(&(ab_fact.clone() / Rat::factorial(k * s + r)));
        let shell = MultiPoly::mono2(k * s + r + t, k * s + r, ParamRat::one());
        first.push((k, shell.mul(&f.substitute_power(s)).scalar_mul(&scalar)));
    }

    // Second sum: components zbar^(s-t) f_m(zbar^s) with m = u + v + 1 - 2k,
    // starting at k = 1 - floor((r+t)/s).
    let k_lo = if r + t < s { 1u32 } else { 0 };
    let mut second = Vec::new();
    for k in k_lo..=v {
        let m = u + v + 1 - 2 * k;
        let f = f_coeff_form(m, Variant::Full);
        let coef = f.coeff(v as i64 - k as i64, u as i64 - k as i64 + 1);
        // (k-1)s + r + t, nonnegative by the choice of lower limit
        let zz_exp = (k * s + r + t) - s;
        let scalar = g
            .inv_gamma0_poch(0, b + (u - k + 1) * s)
            .mul(&lambda_const(m, Variant::Full))
            .mul(&coef)
            .mul_rat(&(ab_fact.clone() / Rat::factorial(zz_exp)));
        let shell = MultiPoly::mono2(zz_exp, zz_exp + s - t, ParamRat::one());
        second.push((
            k,
            shell
                .mul(&f.conjugate_swap().substitute_power(s))
                .scalar_mul(&scalar),
        ));
    }
    (first, second)
}

/// Expansion for a = b mod s with a > b, via the biorthogonal pair.
fn vz_equal_residue(g: &GroupParam, a: u32, b: u32) -> MultiPoly {
    vz2_terms(g, a, b)
        .into_iter()
        .fold(MultiPoly::zero(2), |acc, (_, term)| acc.add(&term))
}

/// The individual k-indexed summands of the equal-residue expansion.
/// For a = b the symmetric-family route is used (the monomial equals its
/// own symmetrization); zero summands are kept.
pub(crate) fn vz2_terms(g: &GroupParam, a: u32, b: u32) -> Vec<(u32, MultiPoly)> {
    let s = g.s();
    if a == b {
        return symmetrized_terms(g, a, b, Variant::Sym);
    }
    let r = a % s;
    let u = a / s;
    let v = b / s;
    let ab_fact = Rat::factorial(a) * Rat::factorial(b);
    let mut out = Vec::with_capacity(v as usize + 1);
    for k in 0..=v {
        let m = u + v - 2 * k;
        let f = f_coeff_form(m, Variant::Full);
        let flow = f_coeff_form(m - 1, Variant::Full);
        let czs = flow.coeff(u as i64 - k as i64 - 1, v as i64 - k as i64);
        let czbs = flow.coeff(v as i64 - k as i64 - 1, u as i64 - k as i64);
        let inner = f
            .substitute_power(s)
            .scalar_mul(&czs)
            .add(&f.conjugate_swap().substitute_power(s).scalar_mul(&czbs));
        let scalar = g
            .inv_gamma0_poch(0, b + (u - k) * s)
            .mul(&nu_inv_const(m))
            .mul_rat(&(ab_fact.clone() / Rat::factorial(k * s + r)));
        let shell = MultiPoly::mono2(k * s + r, k * s + r, ParamRat::one());
        out.push((k, shell.mul(&inner).scalar_mul(&scalar)));
    }
    out
}

/// V(1/2 (z^a zbar^b + z^b zbar^a)) for a = b mod s, a >= b: the expansion
/// over the swap-symmetric family.
pub fn intertwine_sym(g: &GroupParam, a: u32, b: u32) -> MultiPoly {
    symmetrized(g, a, b, Variant::Sym)
}

/// V(1/2 (z^a zbar^b - z^b zbar^a)) for a = b mod s, a >= b: the expansion
/// over the swap-antisymmetric family. Zero when a = b.
pub fn intertwine_antisym(g: &GroupParam, a: u32, b: u32) -> MultiPoly {
    if a == b {
        return MultiPoly::zero(2);
    }
    symmetrized(g, a, b, Variant::Anti)
}

fn symmetrized(g: &GroupParam, a: u32, b: u32, variant: Variant) -> MultiPoly {
    symmetrized_terms(g, a, b, variant)
        .into_iter()
        .fold(MultiPoly::zero(2), |acc, (_, term)| acc.add(&term))
}

fn symmetrized_terms(g: &GroupParam, a: u32, b: u32, variant: Variant) -> Vec<(u32, MultiPoly)> {
    let s = g.s();
    assert!(a >= b && (a - b).is_multiple_of(s), "requires a >= b with a = b mod s");
    let r = a % s;
    let u = a / s;
    let v = b / s;
    let ab_fact = Rat::factorial(a) * Rat::factorial(b);
    let mut out = Vec::with_capacity(v as usize + 1);
    for k in 0..=v {
        let m = u + v - 2 * k;
        let f = f_coeff_form(m, variant);
        let coef = f.coeff(u as i64 - k as i64, v as i64 - k as i64);
        let scalar = g
            .inv_gamma0_poch(0, b + (u - k) * s)
            .mul(&lambda_const(m, variant))
            .mul(&coef)
            .mul_rat(&(ab_fact.clone() / Rat::factorial(k * s + r)));
        let shell = MultiPoly::mono2(k * s + r, k * s + r, ParamRat::one());
        out.push((k, shell.mul(&f.substitute_power(s)).scalar_mul(&scalar)));
    }
    out
}

/// Linear extension of [`intertwine_mono`] to arbitrary polynomials.
pub fn intertwine_poly(g: &GroupParam, f: &MultiPoly) -> MultiPoly {
    assert_eq!(f.arity(), 2);
    let mut out = MultiPoly::zero(2);
    for (&e, c) in f.terms() {
        out = out.add(&intertwine_mono(g, e[0], e[1]).scalar_mul(c));
    }
    out
}

/// Reject parameter points in the singular locus: k0 or k1 in -1/2 - N0,
/// or s (k0 + k1) a negative integer.
pub fn check_nonsingular(g: &GroupParam, k0: &Rat, k1: &Rat) -> Result<()> {
    let one = num_bigint::BigInt::from(1);
    let is_neg_half_shift = |k: &Rat| -> bool {
        // k = -1/2 - j for some j in N0  <=>  -(k + 1/2) in N0
        let v = -(k.clone() + Rat::new(1, 2));
        !v.is_negative() && v.denom() == &one
    };
    if is_neg_half_shift(k0) || is_neg_half_shift(k1) {
        return Err(Error::SingularParameter {
            reason: format!("kappa in -1/2 - N0: ({}, {})", k0, k1),
        });
    }
    let sk = (k0.clone() + k1.clone()) * Rat::from_int(g.s() as i64);
    if sk.is_negative() && sk.denom() == &one {
        return Err(Error::SingularParameter {
            reason: format!("s(k0+k1) = {} is a negative integer", sk),
        });
    }
    Ok(())
}

/// Brute-force oracle: build V degree by degree at a specialized rational
/// parameter point directly from the defining relations, by exact Gaussian
/// elimination on the overdetermined coefficient systems.
pub fn oracle_v(g: &GroupParam, f: &MultiPoly, k0: &Rat, k1: &Rat) -> Result<NumPoly> {
    assert_eq!(f.arity(), 2);
    let max_deg = f.terms().map(|(e, _)| e[0] + e[1]).max().unwrap_or(0);
    let table = oracle_v_table(g, max_deg, k0, k1)?;
    let mut out = NumPoly::zero();
    for (&e, c) in f.terms() {
        let scalar = c.specialize(k0, k1)?;
        out = out.add(&table[&(e[0], e[1])].scale(&scalar));
    }
    Ok(out)
}

/// The full specialized table V(z^a zbar^b) for all a + b <= max_deg,
/// built inductively from the defining relations.
pub fn oracle_v_table(
    g: &GroupParam,
    max_deg: u32,
    k0: &Rat,
    k1: &Rat,
) -> Result<BTreeMap<(u32, u32), NumPoly>> {
    check_nonsingular(g, k0, k1)?;

    // table[(a, b)] = specialized V(z^a zbar^b)
    let mut table: BTreeMap<(u32, u32), NumPoly> = BTreeMap::new();
    table.insert((0, 0), NumPoly::one());

    for n in 1..=max_deg {
        // Specialized operator actions on the degree-n monomial basis.
        let t_images: Vec<NumPoly> = (0..=n)
            .map(|j| {
                apply_t(&MultiPoly::mono2(n - j, j, ParamRat::one()), g)
                    .specialize(k0, k1)
                    .expect("operator coefficients are polynomial in the parameters")
            })
            .collect();
        let tb_images: Vec<NumPoly> = (0..=n)
            .map(|j| {
                apply_tbar(&MultiPoly::mono2(n - j, j, ParamRat::one()), g)
                    .specialize(k0, k1)
                    .expect("operator coefficients are polynomial in the parameters")
            })
            .collect();

        // Rows: coefficient of z^(n-1-i) zbar^i in T(Vp) and Tbar(Vp).
        let mut matrix: Vec<Vec<Rat>> = Vec::with_capacity(2 * n as usize);
        for i in 0..n {
            matrix.push(
                (0..=n)
                    .map(|j| t_images[j as usize].coeff(n - 1 - i, i))
                    .collect(),
            );
        }
        for i in 0..n {
            matrix.push(
                (0..=n)
                    .map(|j| tb_images[j as usize].coeff(n - 1 - i, i))
                    .collect(),
            );
        }

        for a in (0..=n).rev() {
            let b = n - a;
            // right-hand sides: V(d/dz p) and V(d/dzbar p) from degree n-1
            let dz = if a > 0 {
                table[&(a - 1, b)].scale(&Rat::from_int(a as i64))
            } else {
                NumPoly::zero()
            };
            let dzbar = if b > 0 {
                table[&(a, b - 1)].scale(&Rat::from_int(b as i64))
            } else {
                NumPoly::zero()
            };
            let mut rhs: Vec<Rat> = Vec::with_capacity(2 * n as usize);
            for i in 0..n {
                rhs.push(dz.coeff(n - 1 - i, i));
            }
            for i in 0..n {
                rhs.push(dzbar.coeff(n - 1 - i, i));
            }
            let solution = solve_exact(matrix.clone(), rhs, n)?;
            let mut vp = NumPoly::zero();
            for (j, x) in solution.into_iter().enumerate() {
                vp.add_term((n - j as u32, j as u32), x);
            }
            table.insert((a, b), vp);
        }
    }
    Ok(table)
}

/// Exact Gaussian elimination for an overdetermined system that must be
/// consistent with a unique solution. `degree` only labels the error.
fn solve_exact(mut m: Vec<Vec<Rat>>, mut rhs: Vec<Rat>, degree: u32) -> Result<Vec<Rat>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivot_rows: Vec<usize> = Vec::with_capacity(cols);
    let mut row = 0usize;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            // No pivot: the defining system left a free variable, which
            // contradicts uniqueness of V off the singular set.
            return Err(Error::InconsistentSystem { degree });
        };
        m.swap(row, p);
        rhs.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        rhs[row] = &rhs[row] * &inv;
        let pivot_row = m[row].clone();
        let pivot_rhs = rhs[row].clone();
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                    let delta = pv * &factor;
                    m[i][c] -= &delta;
                }
                let delta = &pivot_rhs * &factor;
                rhs[i] -= &delta;
            }
        }
        pivot_rows.push(row);
        row += 1;
    }
    // Remaining rows must be 0 = 0.
    if rhs.iter().skip(row).any(|v| !v.is_zero()) {
        return Err(Error::InconsistentSystem { degree });
    }
    let mut solution = vec![Rat::zero(); cols];
    for (col, &r) in pivot_rows.iter().enumerate() {
        solution[col] = rhs[r].clone();
    }
    Ok(solution)
}
