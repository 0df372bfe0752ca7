//! The terminating hypergeometric layer: the E-function, its transformed
//! form, the contiguity relations, and Jacobi polynomial coefficients.
//!
//! Everything here is a finite sum — the series all terminate through a
//! (-n)_j factor — so no convergence machinery is involved. The E-function
//! packages the single-sum 3F2-type expression
//!
//! ```text
//! E_n(a, b; c1, c2) = 1/(n! (c1+c2)_n)
//!     * sum_{j=0}^{n} (-n)_j / j! * (a)_{n-j} (b)_j (c1)_j (c2)_{n-j}
//! ```
//!
//! whose parameters are affine expressions in (k0, k1). All harmonic-basis
//! coefficients reduce to it.

use crate::error::{Error, Result};
use crate::field::{Affine, ParamPoly, ParamRat};
use crate::scalar::Rat;

/// Parameters (a, b; c1, c2) of the E-function.
#[derive(Clone, Debug)]
pub struct EParams {
    pub a: Affine,
    pub b: Affine,
    pub c1: Affine,
    pub c2: Affine,
}

impl EParams {
    pub fn new(a: Affine, b: Affine, c1: Affine, c2: Affine) -> Self {
        EParams { a, b, c1, c2 }
    }

    /// The standard shape E(k0, k1; c1, c2) with rational shifts c1, c2.
    pub fn kappa(c1: Rat, c2: Rat) -> Self {
        EParams::new(
            Affine::k0(),
            Affine::k1(),
            Affine::constant(c1),
            Affine::constant(c2),
        )
    }
}

/// (-n)_j as an exact scalar: (-1)^j n! / (n-j)!, zero for j > n.
fn falling_neg(n: u32, j: u32) -> Rat {
    if j > n {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..j {
        acc *= &Rat::from_int(-((n - i) as i64));
    }
    acc
}

fn check_poch_forms(base: &Affine, n: u32) -> Result<()> {
    if base.a == 0 && base.b == 0 {
        for i in 0..n {
            if (base.c.clone() + Rat::from_int(i as i64)).is_zero() {
                return Err(Error::DegenerateDenominator {
                    factor: format!("({})_{}", base.as_poly().render(), n),
                });
            }
        }
    }
    Ok(())
}

/// E_n(a, b; c1, c2) from the explicit finite-sum definition, reduced.
pub fn e_fn(n: u32, p: &EParams) -> Result<ParamRat> {
    let csum = p.c1.add(&p.c2);
    check_poch_forms(&csum, n)?;
    let mut num = ParamPoly::zero();
    for j in 0..=n {
        let scalar = falling_neg(n, j) / Rat::factorial(j);
        let term = p
            .a
            .poch(n - j)
            .mul(&p.b.poch(j))
            .mul(&p.c1.poch(j))
            .mul(&p.c2.poch(n - j))
            .scale(&scalar);
        num = num.add(&term);
    }
    let den: Vec<((i64, i64, Rat), u32)> = (0..n)
        .map(|i| ((csum.a, csum.b, csum.c.clone() + Rat::from_int(i as i64)), 1))
        .collect();
    Ok(ParamRat::from_num_den(num, den).mul_rat(&Rat::factorial(n).recip()))
}

/// E_n via the transformed 3F2 form
/// ((a+c1)_n / n!) 3F2(-n, n+a+b+c1+c2-1, c1; a+c1, c1+c2; 1).
/// Must agree with [`e_fn`] symbolically.
pub fn e_fn_alt(n: u32, p: &EParams) -> Result<ParamRat> {
    let csum = p.c1.add(&p.c2);
    check_poch_forms(&csum, n)?;
    let ac1 = p.a.add(&p.c1);
    // top parameter n + a + b + c1 + c2 - 1
    let big = p
        .a
        .add(&p.b)
        .add(&p.c1)
        .add(&p.c2)
        .shift(n as i64 - 1);
    let mut acc = ParamRat::zero();
    for j in 0..=n {
        // (a+c1)_n / (a+c1)_j = (a+c1+j)_{n-j}, so each term stays polynomial
        // over the factored (c1+c2)_j.
        let scalar = falling_neg(n, j) / (Rat::factorial(j) * Rat::factorial(n));
        let num = big
            .poch(j)
            .mul(&p.c1.poch(j))
            .mul(&ac1.shift(j as i64).poch(n - j))
            .scale(&scalar);
        let den: Vec<((i64, i64, Rat), u32)> = (0..j)
            .map(|i| ((csum.a, csum.b, csum.c.clone() + Rat::from_int(i as i64)), 1))
            .collect();
        acc = acc.add(&ParamRat::from_num_den(num, den));
    }
    Ok(acc)
}

/// Verify the two contiguity relations at index m for parameters (a, b, c):
///
/// ```text
/// (m+a+c) E_m(a,b;c,c+1) - (m+b+c) E_m(a,b;c+1,c) = 2(m+1) E_{m+1}(a,b;c,c)
/// (m+a+c) E_m(a,b;c,c+1) + (m+b+c) E_m(a,b;c+1,c)
///     = (m+2c+1)/(2c+1) * (m+a+b+2c) E_m(a,b;c+1,c+1)
/// ```
///
/// Returns the per-identity truth values.
pub fn contiguity_check(m: u32, a: &Affine, b: &Affine, c: &Affine) -> Result<(bool, bool)> {
    let e_cc1 = e_fn(m, &EParams::new(a.clone(), b.clone(), c.clone(), c.shift(1)))?;
    let e_c1c = e_fn(m, &EParams::new(a.clone(), b.clone(), c.shift(1), c.clone()))?;
    let mac = a.add(c).shift(m as i64); // m + a + c
    let mbc = b.add(c).shift(m as i64); // m + b + c
    let lhs_minus = e_cc1
        .mul_poly(&mac.as_poly())
        .sub(&e_c1c.mul_poly(&mbc.as_poly()));
    let lhs_plus = e_cc1
        .mul_poly(&mac.as_poly())
        .add(&e_c1c.mul_poly(&mbc.as_poly()));

    let e_next = e_fn(m + 1, &EParams::new(a.clone(), b.clone(), c.clone(), c.clone()))?;
    let rhs_minus = e_next.mul_rat(&Rat::from_int(2 * (m as i64 + 1)));

    let e_c1c1 = e_fn(m, &EParams::new(a.clone(), b.clone(), c.shift(1), c.shift(1)))?;
    // (m + 2c + 1) / (2c + 1) * (m + a + b + 2c)
    let two_c = Affine::new(2 * c.a, 2 * c.b, c.c.clone() + c.c.clone());
    let m2c1 = two_c.shift(m as i64 + 1);
    let c21 = two_c.shift(1);
    let mab2c = a.add(b).add(&two_c).shift(m as i64);
    let rhs_plus = e_c1c1
        .mul_poly(&m2c1.as_poly())
        .mul_poly(&mab2c.as_poly())
        .div_form(c21.a, c21.b, c21.c);

    Ok((lhs_minus == rhs_minus, lhs_plus == rhs_plus))
}

/// Coefficients of the Jacobi polynomial P_n^(alpha, beta) in the basis
/// ((1-t)/2)^k for k = 0..n.
///
/// From P_n^(alpha,beta)(t) = ((alpha+1)_n / n!) 2F1(-n, n+alpha+beta+1;
/// alpha+1; (1-t)/2), with (alpha+1)_n/(alpha+1)_k collapsed to
/// (alpha+1+k)_{n-k} so every coefficient is polynomial in the parameters.
pub fn jacobi_coeffs(n: u32, alpha: &Affine, beta: &Affine) -> Vec<ParamRat> {
    let top = alpha.add(beta).shift(n as i64 + 1); // n + alpha + beta + 1
    let a1 = alpha.shift(1);
    (0..=n)
        .map(|k| {
            let scalar = falling_neg(n, k) / (Rat::factorial(k) * Rat::factorial(n));
            let num = top
                .poch(k)
                .mul(&a1.shift(k as i64).poch(n - k))
                .scale(&scalar);
            ParamRat::from_poly(num)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(n: i64) -> Rat {
        Rat::new(n, 2)
    }

    #[test]
    fn e_fn_base_cases() {
        // E_0 = 1 for any parameters
        let p = EParams::kappa(half(1), half(3));
        assert!(e_fn(0, &p).unwrap().is_one());
        assert!(e_fn_alt(0, &p).unwrap().is_one());
        // E_1(a,b;c1,c2) = (a c2 - b c1)/(c1 + c2)
        let p = EParams::new(
            Affine::k0(),
            Affine::k1(),
            Affine::constant(half(1)),
            Affine::constant(half(3)),
        );
        let got = e_fn(1, &p).unwrap();
        // (3/2 k0 - 1/2 k1) / 2
        let expected = ParamRat::affine(3, -1, Rat::zero()).mul_rat(&Rat::new(1, 4));
        assert_eq!(got, expected);
    }

    #[test]
    fn e_fn_zero_second_parameter() {
        // E_n(k0, 0; c1, c2) = (k0)_n (c2)_n / (n! (c1+c2)_n)
        for n in 0..=6u32 {
            for (c1, c2) in [(half(1), half(1)), (half(1), half(3)), (half(5), half(3))] {
                let p = EParams::new(
                    Affine::k0(),
                    Affine::zero(),
                    Affine::constant(c1.clone()),
                    Affine::constant(c2.clone()),
                );
                let got = e_fn(n, &p).unwrap();
                let num = Affine::k0().poch(n).mul(&Affine::constant(c2).poch(n));
                // (c1+c2)_n is a positive rational constant here
                let mut den_val = Rat::one();
                for i in 0..n {
                    den_val *= &(c1.clone() + p.c2.c.clone() + Rat::from_int(i as i64));
                }
                let expected = ParamRat::from_poly(num)
                    .mul_rat(&(Rat::factorial(n) * den_val).recip());
                assert_eq!(got, expected, "n={n}");
            }
        }
    }

    #[test]
    fn e_fn_vanishes_at_zero_parameters() {
        for n in 1..=8u32 {
            let p = EParams::new(
                Affine::zero(),
                Affine::zero(),
                Affine::constant(half(1)),
                Affine::constant(half(3)),
            );
            assert!(e_fn(n, &p).unwrap().is_zero(), "n={n}");
        }
    }

    #[test]
    fn transformed_form_agrees() {
        for j in 0..=4i64 {
            for shapes in [
                (half(2 * j + 1), half(2 * j + 1)),
                (half(2 * j + 1), half(2 * j + 3)),
            ] {
                for n in 0..=10u32 {
                    let p = EParams::kappa(shapes.0.clone(), shapes.1.clone());
                    assert_eq!(
                        e_fn(n, &p).unwrap(),
                        e_fn_alt(n, &p).unwrap(),
                        "n={n} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn symmetry_relation() {
        // E_n(a,b;c1,c2) = (-1)^n E_n(b,a;c2,c1)
        for n in 0..=10u32 {
            let p = EParams::kappa(half(1), half(3));
            let q = EParams::new(
                Affine::k1(),
                Affine::k0(),
                Affine::constant(half(3)),
                Affine::constant(half(1)),
            );
            let lhs = e_fn(n, &p).unwrap();
            let rhs = e_fn(n, &q)
                .unwrap()
                .mul_rat(&Rat::from_int(if n % 2 == 0 { 1 } else { -1 }));
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn degenerate_denominator_detected() {
        // c1 + c2 = -2 makes (c1+c2)_n hit zero for n >= 3
        let p = EParams::kappa(Rat::from_int(-1), Rat::from_int(-1));
        assert!(e_fn(2, &p).is_ok());
        assert!(matches!(
            e_fn(4, &p),
            Err(Error::DegenerateDenominator { .. })
        ));
    }

    #[test]
    fn contiguity_relations_hold() {
        for j in 0..=3i64 {
            let c = Affine::constant(half(2 * j + 1));
            for m in 0..=10u32 {
                let (minus, plus) =
                    contiguity_check(m, &Affine::k0(), &Affine::k1(), &c).unwrap();
                assert!(minus, "eminus fails at m={m} j={j}");
                assert!(plus, "eplus fails at m={m} j={j}");
            }
        }
    }

    #[test]
    fn jacobi_small_cases() {
        // n = 0
        let c = jacobi_coeffs(0, &Affine::constant(half(-1)), &Affine::constant(half(-1)));
        assert_eq!(c, vec![ParamRat::one()]);
        // Chebyshev case n = 1, alpha = beta = -1/2: coefficients [1/2, -1]
        let c = jacobi_coeffs(1, &Affine::constant(half(-1)), &Affine::constant(half(-1)));
        assert_eq!(c, vec![ParamRat::from_rat(half(1)), ParamRat::from_int(-1)]);
        // Legendre n = 2: [1, -6, 6]
        let c = jacobi_coeffs(2, &Affine::zero(), &Affine::zero());
        assert_eq!(
            c,
            vec![ParamRat::one(), ParamRat::from_int(-6), ParamRat::from_int(6)]
        );
    }

    #[test]
    fn jacobi_symbolic_parameters_stay_polynomial() {
        let alpha = Affine::new(1, 0, half(-1)); // k0 - 1/2
        let beta = Affine::new(0, 1, half(-1)); // k1 - 1/2
        for n in 0..=6u32 {
            for c in jacobi_coeffs(n, &alpha, &beta) {
                assert_eq!(c.den().count(), 0);
            }
        }
    }
}
