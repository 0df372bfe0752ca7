//! Poisson kernels P_n(z, w), the kernels K_n(z, w), the triangular
//! inversion between them, and extraction of the intertwining operator's
//! monomial images from K_n.
//!
//! P_n is assembled from the orthogonal/biorthogonal bases of the degree-n
//! harmonic space; K_n is computed from its series over P_{n-2j} (the
//! defining expression V((z wbar + zbar w)^n)/(2^n n!) is recovered as a
//! cross-check in the verification layer, not used as the construction).

use crate::dunkl::GroupParam;
use crate::field::ParamRat;
use crate::harmonic::{f_coeff_form, lambda_const, nu_inv_const, Variant};
use crate::multipoly::{MultiPoly, VarPair};
use crate::scalar::Rat;

/// The Poisson kernel component P_N(z, w) as an arity-4 polynomial,
/// bihomogeneous of degree N in each variable pair.
pub fn poisson_p(g: &GroupParam, big_n: u32) -> MultiPoly {
    if big_n == 0 {
        return MultiPoly::one(4);
    }
    let s = g.s();
    let n = big_n / s;
    let t = big_n % s;
    if t == 0 {
        // lambda_n^0 f_n^0(z^s) f_n^0(w^s) + lambda_n^1 f_n^1(z^s) f_n^1(wbar^s)
        let f0 = f_coeff_form(n, Variant::Sym).substitute_power(s);
        let f1 = f_coeff_form(n, Variant::Anti).substitute_power(s);
        let term0 = f0
            .embed(VarPair::Z, false)
            .mul(&f0.embed(VarPair::W, false))
            .scalar_mul(&lambda_const(n, Variant::Sym));
        let term1 = f1
            .embed(VarPair::Z, false)
            .mul(&f1.embed(VarPair::W, true))
            .scalar_mul(&lambda_const(n, Variant::Anti));
        term0.add(&term1)
    } else {
        // lambda_n (z^t f_n(z^s) wbar^t f_n(wbar^s) + conjugate pair)
        let h = MultiPoly::mono2(t, 0, ParamRat::one())
            .mul(&f_coeff_form(n, Variant::Full).substitute_power(s));
        let first = h.embed(VarPair::Z, false).mul(&h.embed(VarPair::W, true));
        let second = first.conjugate_swap();
        first.add(&second).scalar_mul(&lambda_const(n, Variant::Full))
    }
}

/// The biorthogonal-basis route to P_{ns}:
/// nu_n^{-1} (f_n(z^s) wbar^s f_{n-1}(wbar^s) + f_n(zbar^s) w^s f_{n-1}(w^s)).
/// Agrees with [`poisson_p`] at N = ns; kept as an independent expression
/// for the verification layer.
pub fn poisson_p_biorthogonal(g: &GroupParam, n: u32) -> MultiPoly {
    assert!(n >= 1);
    let s = g.s();
    let fn_ = f_coeff_form(n, Variant::Full).substitute_power(s);
    let zs_fn1 = MultiPoly::mono2(s, 0, ParamRat::one())
        .mul(&f_coeff_form(n - 1, Variant::Full).substitute_power(s));
    let first = fn_
        .embed(VarPair::Z, false)
        .mul(&zs_fn1.embed(VarPair::W, true));
    let second = first.conjugate_swap();
    first.add(&second).scalar_mul(&nu_inv_const(n))
}

/// K_n(z, w) = 2^{-n} sum_j (z zbar w wbar)^j P_{n-2j}(z, w) / (j! (gamma0)_{n-j}).
pub fn kernel_k(g: &GroupParam, n: u32) -> MultiPoly {
    let mut acc = MultiPoly::zero(4);
    for j in 0..=(n / 2) {
        let scalar = g
            .inv_gamma0_poch(0, n - j)
            .mul_rat(&(Rat::factorial(j) * Rat::pow2(n as i64)).recip());
        let term = poisson_p(g, n - 2 * j)
            .mul(&MultiPoly::mono4([j, j, j, j], ParamRat::one()))
            .scalar_mul(&scalar);
        acc = acc.add(&term);
    }
    acc
}

/// The inverse expansion
/// P_n = sum_j (gamma0)_n / (j! (2-n-gamma0)_j) 2^{n-2j} (z zbar w wbar)^j K_{n-2j}.
/// Mutually inverse with [`kernel_k`]; used by the verification layer.
pub fn poisson_from_kernels(g: &GroupParam, n: u32) -> MultiPoly {
    let s = g.s() as i64;
    let gamma_n = g.gamma0_poch(n);
    let mut acc = MultiPoly::zero(4);
    for j in 0..=(n / 2) {
        // (2 - n - gamma0)_j = prod_i (-s k0 - s k1 + 1 - n + i)
        let down: Vec<((i64, i64, Rat), u32)> = (0..j)
            .map(|i| ((-s, -s, Rat::from_int(1 - n as i64 + i as i64)), 1))
            .collect();
        let scalar = gamma_n
            .mul(&ParamRat::from_num_den(
                crate::field::ParamPoly::one(),
                down,
            ))
            .mul_rat(&(Rat::pow2(n as i64 - 2 * j as i64) / Rat::factorial(j)));
        let term = kernel_k(g, n - 2 * j)
            .mul(&MultiPoly::mono4([j, j, j, j], ParamRat::one()))
            .scalar_mul(&scalar);
        acc = acc.add(&term);
    }
    acc
}

/// One step of the triangular pair of transforms behind the P/K
/// inversion, acting on sequences of formal vectors over the field.
/// `xi_to_eta`: eta_n = sum_j xi_{n-2j} / (j! (gamma0)_{n-j}).
pub fn xi_to_eta(xi: &[Vec<ParamRat>], g: &GroupParam) -> Vec<Vec<ParamRat>> {
    transform(xi, |n, j| {
        g.inv_gamma0_poch(0, n - j)
            .mul_rat(&Rat::factorial(j).recip())
    })
}

/// `eta_to_xi`: xi_n = sum_j (gamma0)_n / (j! (2-n-gamma0)_j) eta_{n-2j}.
pub fn eta_to_xi(eta: &[Vec<ParamRat>], g: &GroupParam) -> Vec<Vec<ParamRat>> {
    let s = g.s() as i64;
    transform(eta, |n, j| {
        let down: Vec<((i64, i64, Rat), u32)> = (0..j)
            .map(|i| ((-s, -s, Rat::from_int(1 - n as i64 + i as i64)), 1))
            .collect();
        g.gamma0_poch(n)
            .mul(&ParamRat::from_num_den(crate::field::ParamPoly::one(), down))
            .mul_rat(&Rat::factorial(j).recip())
    })
}

fn transform<F: Fn(u32, u32) -> ParamRat>(seq: &[Vec<ParamRat>], coeff: F) -> Vec<Vec<ParamRat>> {
    let width = seq.iter().map(|v| v.len()).max().unwrap_or(0);
    (0..seq.len() as u32)
        .map(|n| {
            let mut acc = vec![ParamRat::zero(); width];
            for j in 0..=(n / 2) {
                let c = coeff(n, j);
                for (slot, entry) in acc.iter_mut().zip(&seq[(n - 2 * j) as usize]) {
                    *slot = slot.add(&entry.mul(&c));
                }
            }
            acc
        })
        .collect()
}

/// Round-trip check for the triangular inversion with gamma0 kept symbolic:
/// applying xi -> eta -> xi must return the original sequence exactly.
pub fn inversion_roundtrip(seq: &[Vec<ParamRat>], g: &GroupParam) -> bool {
    let eta = xi_to_eta(seq, g);
    let back = eta_to_xi(&eta, g);
    back.len() == seq.len()
        && back.iter().zip(seq).all(|(b, a)| {
            b.len() >= a.len()
                && a.iter().zip(b).all(|(x, y)| x == y)
                && b[a.len()..].iter().all(|x| x.is_zero())
        })
}

/// V(z^{n-m} zbar^m) extracted from K_n: 2^n m! (n-m)! times the
/// coefficient of w^m wbar^{n-m}.
pub fn v_from_kernel(g: &GroupParam, n: u32, m: u32) -> MultiPoly {
    assert!(m <= n);
    let k = kernel_k(g, n);
    let factor = Rat::pow2(n as i64) * Rat::factorial(m) * Rat::factorial(n - m);
    k.w_coefficient(m, n - m).scalar_mul_rat(&factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ParamPoly;

    #[test]
    fn poisson_base_cases() {
        let g = GroupParam::new(2);
        assert!(poisson_p(&g, 0).is_one());
        // P_1 for s >= 2: z wbar + zbar w
        let p1 = poisson_p(&g, 1);
        let expected = MultiPoly::mono4([1, 0, 0, 1], ParamRat::one())
            .add(&MultiPoly::mono4([0, 1, 1, 0], ParamRat::one()));
        assert_eq!(p1, expected);
    }

    #[test]
    fn poisson_two_routes_agree() {
        for s in [1u32, 2] {
            let g = GroupParam::new(s);
            for n in 1..=6u32 {
                assert_eq!(
                    poisson_p(&g, n * s),
                    poisson_p_biorthogonal(&g, n),
                    "s={s} n={n}"
                );
            }
        }
    }

    #[test]
    fn kernel_base_cases() {
        let g = GroupParam::new(2);
        assert!(kernel_k(&g, 0).is_one());
        // K_1 = (z wbar + zbar w) / (2 gamma0) for s >= 2
        let k1 = kernel_k(&g, 1);
        let scalar = g.inv_gamma0_poch(0, 1).mul_rat(&Rat::new(1, 2));
        let expected = MultiPoly::mono4([1, 0, 0, 1], scalar.clone())
            .add(&MultiPoly::mono4([0, 1, 1, 0], scalar));
        assert_eq!(k1, expected);
    }

    #[test]
    fn kernel_symmetries() {
        for s in [1u32, 2, 3] {
            let g = GroupParam::new(s);
            for n in 0..=5u32 {
                for kern in [poisson_p(&g, n), kernel_k(&g, n)] {
                    // invariant under z <-> w swap
                    assert_eq!(kern.swap_zw(), kern, "swap s={s} n={n}");
                    // real: invariant under simultaneous conjugation
                    assert_eq!(kern.conjugate_swap(), kern, "conj s={s} n={n}");
                    // bihomogeneous of equal degree
                    if !kern.is_zero() {
                        assert_eq!(kern.homogeneous_degree(), Some(n));
                        assert_eq!(kern.homogeneous_degree_w(), Some(n));
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_inversion_on_kernels() {
        for s in [1u32, 2] {
            let g = GroupParam::new(s);
            for n in 0..=6u32 {
                assert_eq!(poisson_from_kernels(&g, n), poisson_p(&g, n), "s={s} n={n}");
            }
        }
    }

    #[test]
    fn roundtrip_identity_sequences() {
        let g = GroupParam::new(2);
        // delta sequence
        let mut seq = vec![vec![ParamRat::zero()]; 6];
        seq[0] = vec![ParamRat::one()];
        assert!(inversion_roundtrip(&seq, &g));
        // a symbolic sequence: entries with parameter content
        let seq: Vec<Vec<ParamRat>> = (0..8)
            .map(|i| {
                vec![
                    ParamRat::affine(1, 0, Rat::from_int(i)),
                    ParamRat::affine(0, 1, Rat::from_int(-i)),
                ]
            })
            .collect();
        assert!(inversion_roundtrip(&seq, &g));
    }

    #[test]
    fn roundtrip_random_rational_sequences() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for s in [1u32, 3] {
            let g = GroupParam::new(s);
            for _ in 0..5 {
                let seq: Vec<Vec<ParamRat>> = (0..8)
                    .map(|_| {
                        (0..3)
                            .map(|_| {
                                ParamRat::from_rat(Rat::new(
                                    rng.random_range(-50..50),
                                    rng.random_range(1..20),
                                ))
                            })
                            .collect()
                    })
                    .collect();
                assert!(inversion_roundtrip(&seq, &g));
            }
        }
    }

    #[test]
    fn v_extraction_base_and_golden() {
        let g = GroupParam::new(2);
        // V 1 = 1
        assert!(v_from_kernel(&g, 0, 0).is_one());
        // V z^2 at s = 2: ((k0+k1+1) z^2 + (k0-k1) zbar^2)
        //                 / ((2k0+1)(2k1+1)(2k0+2k1+1))
        let v = v_from_kernel(&g, 2, 0);
        let den = vec![
            ((2i64, 0i64, Rat::one()), 1u32),
            ((0, 2, Rat::one()), 1),
            ((2, 2, Rat::one()), 1),
        ];
        let expected = MultiPoly::mono2(
            2,
            0,
            ParamRat::from_num_den(ParamPoly::affine(1, 1, Rat::one()), den.clone()),
        )
        .add(&MultiPoly::mono2(
            0,
            2,
            ParamRat::from_num_den(ParamPoly::affine(1, -1, Rat::zero()), den),
        ));
        assert_eq!(v, expected);
        // V z^2 for s > 2: 2 z^2 / ((s k0 + s k1 + 1)(s k0 + s k1 + 2))
        let g3 = GroupParam::new(3);
        let v = v_from_kernel(&g3, 2, 0);
        let expected = MultiPoly::mono2(
            2,
            0,
            g3.inv_gamma0_poch(0, 2).mul_rat(&Rat::from_int(2)),
        );
        assert_eq!(v, expected);
    }
}
