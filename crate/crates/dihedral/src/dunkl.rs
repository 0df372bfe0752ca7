//! The Dunkl operators T and T-bar for the group I2(2s).
//!
//! The normative implementation is the closed monomial action; the
//! reflection-sum definition is kept as a floating-point oracle
//! ([`definitional_eval_t`]) so the definitional layer is validated without
//! exact cyclotomic arithmetic. For a monomial z^a zbar^b with a >= b:
//!
//! ```text
//! T    z^a zbar^b = a z^(a-1) zbar^b
//!                   + s * sum_{j=0}^{floor((a-b-1)/s)} (k0 + (-1)^j k1) z^(a-1-js) zbar^(b+js)
//! Tbar z^a zbar^b = b z^a zbar^(b-1)
//!                   - s * sum_{j=1}^{floor((a-b)/s)}   (k0 + (-1)^j k1) z^(a-js) zbar^(b-1+js)
//! ```
//!
//! and the a < b case follows by interchanging both (z, zbar) and (T, Tbar):
//! evaluate the swapped operator on the swapped monomial and swap the result.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::ParamRat;
use crate::multipoly::MultiPoly;
use crate::scalar::Rat;

/// The integer s >= 1 selecting the dihedral group I2(2s), together with the
/// derived constant gamma0 = s k0 + s k1 + 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GroupParam {
    s: u32,
}

impl GroupParam {
    pub fn new(s: u32) -> Self {
        assert!(s >= 1, "group parameter s must be >= 1");
        GroupParam { s }
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// gamma0 = s k0 + s k1 + 1 as a raw linear form (a, b, c).
    pub fn gamma0(&self) -> (i64, i64, Rat) {
        (self.s as i64, self.s as i64, Rat::one())
    }

    /// 1 / (gamma0 + shift)_n with the denominator kept factored.
    pub fn inv_gamma0_poch(&self, shift: i64, n: u32) -> ParamRat {
        ParamRat::inv_pochhammer(
            self.s as i64,
            self.s as i64,
            Rat::from_int(1 + shift),
            n,
        )
        .expect("gamma0 pochhammer never degenerates symbolically")
    }

    /// (gamma0)_n as a polynomial value.
    pub fn gamma0_poch(&self, n: u32) -> ParamRat {
        ParamRat::pochhammer(self.s as i64, self.s as i64, Rat::one(), n)
    }
}

/// k0 + (-1)^j k1 as a rational-function scalar.
fn kappa_sum(j: u32) -> ParamRat {
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };
    ParamRat::affine(1, sign, Rat::zero())
}

fn t_mono(a: u32, b: u32, g: &GroupParam) -> MultiPoly {
    let s = g.s();
    if a >= b {
        let mut out = MultiPoly::zero(2);
        if a > 0 {
            out.add_term([a - 1, b, 0, 0], ParamRat::from_int(a as i64));
        }
        if a > b {
            let jmax = (a - b - 1) / s;
            for j in 0..=jmax {
                let c = kappa_sum(j).mul_rat(&Rat::from_int(s as i64));
                out.add_term([a - 1 - j * s, b + j * s, 0, 0], c);
            }
        }
        out
    } else {
        tbar_mono(b, a, g).conjugate_swap()
    }
}

fn tbar_mono(a: u32, b: u32, g: &GroupParam) -> MultiPoly {
    let s = g.s();
    if a >= b {
        let mut out = MultiPoly::zero(2);
        if b > 0 {
            out.add_term([a, b - 1, 0, 0], ParamRat::from_int(b as i64));
        }
        let jmax = (a - b) / s;
        for j in 1..=jmax {
            let c = kappa_sum(j).mul_rat(&Rat::from_int(-(s as i64)));
            out.add_term([a - j * s, b + j * s - 1, 0, 0], c);
        }
        out
    } else {
        t_mono(b, a, g).conjugate_swap()
    }
}

/// Apply T by linear extension over monomials.
pub fn apply_t(f: &MultiPoly, g: &GroupParam) -> MultiPoly {
    assert_eq!(f.arity(), 2);
    let mut out = MultiPoly::zero(2);
    for (&e, c) in f.terms() {
        out = out.add(&t_mono(e[0], e[1], g).scalar_mul(c));
    }
    out
}

/// Apply T-bar by linear extension over monomials.
pub fn apply_tbar(f: &MultiPoly, g: &GroupParam) -> MultiPoly {
    assert_eq!(f.arity(), 2);
    let mut out = MultiPoly::zero(2);
    for (&e, c) in f.terms() {
        out = out.add(&tbar_mono(e[0], e[1], g).scalar_mul(c));
    }
    out
}

/// The Dunkl Laplacian 4 T Tbar.
pub fn laplacian(f: &MultiPoly, g: &GroupParam) -> MultiPoly {
    apply_t(&apply_tbar(f, g), g).scalar_mul_rat(&Rat::from_int(4))
}

/// Exact symbolic harmonicity test: T Tbar f = 0.
pub fn is_harmonic(f: &MultiPoly, g: &GroupParam) -> bool {
    apply_t(&apply_tbar(f, g), g).is_zero()
}

const MIRROR_EPS: f64 = 1e-6;

/// Numeric evaluation of the reflection-sum definition of T at a point on
/// the real surface zbar = conj(z). Oracle only.
pub fn definitional_eval_t(
    f: &MultiPoly,
    g: &GroupParam,
    z0: Complex64,
    k0: f64,
    k1: f64,
) -> Result<Complex64> {
    assert_eq!(f.arity(), 2);
    let s = g.s() as usize;
    let zb0 = z0.conj();
    let omega = Complex64::from_polar(1.0, std::f64::consts::PI / s as f64);

    let eval = |zz: Complex64, zzb: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&e, c) in f.terms() {
            acc += c.eval_f64(k0, k1) * zz.powu(e[0]) * zzb.powu(e[1]);
        }
        acc
    };

    // Divided-difference denominators must stay away from the mirrors.
    for m in 0..2 * s {
        let d = z0 - zb0 * omega.powu(m as u32);
        if d.norm() < MIRROR_EPS {
            return Err(Error::MirrorProximity { mirror: m, dist: d.norm() });
        }
    }

    let fz0 = eval(z0, zb0);
    let mut acc = eval_dz(f, k0, k1, z0, zb0);
    for j in 0..s {
        for (parity, kappa) in [(0usize, k0), (1usize, k1)] {
            let m = 2 * j + parity;
            let om = omega.powu(m as u32);
            let reflected = eval(zb0 * om, z0 * om.conj());
            acc += kappa * (fz0 - reflected) / (z0 - zb0 * om);
        }
    }
    Ok(acc)
}

fn eval_dz(f: &MultiPoly, k0: f64, k1: f64, zz: Complex64, zzb: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (&e, c) in f.terms() {
        if e[0] > 0 {
            acc += c.eval_f64(k0, k1) * e[0] as f64 * zz.powu(e[0] - 1) * zzb.powu(e[1]);
        }
    }
    acc
}
