//! Verification of the degenerations at k0 + k1 = -m.
//!
//! Two substitution tracks, mirroring the structure of the statements:
//! the basis-collapse and constant-ratio identities are polynomial in k0
//! once k1 = -m - k0 is substituted directly, while the kernel and
//! intertwining expansions have individual terms with genuine simple poles
//! on that line and are handled through the deformation
//! k1 = -m + eps - k0. Grouping the terms into the prescribed pairs must
//! cancel every eps from the denominators; that cancellation is checked
//! exactly (an eps-order count after reduction), not by sampling.

use crate::dunkl::GroupParam;
use crate::error::{Error, Result};
use crate::field::{ParamPoly, ParamRat};
use crate::harmonic::{f_coeff_form, lambda_const, Variant};
use crate::intertwine::{vz1_terms, vz2_terms};
use crate::kernels::poisson_p;
use crate::multipoly::MultiPoly;
use crate::report::VerificationReport;
use crate::scalar::Rat;

/// A rational function of (k0, eps) obtained from a `ParamRat` in
/// (k0, k1) by the substitution k1 := -m + eps - k0. The second parameter
/// slot is reinterpreted as eps; the denominator stays factored, so the
/// eps-order of the denominator is explicit.
#[derive(Clone, Debug, PartialEq)]
pub struct EpsilonRat {
    inner: ParamRat,
}

impl EpsilonRat {
    /// Exact substitution k1 := -m + eps - k0, reduced.
    pub fn substitute(x: &ParamRat, m: u32) -> Self {
        EpsilonRat {
            inner: x.substitute_k1_affine(-1, 1, &Rat::from_int(-(m as i64))),
        }
    }

    pub fn inner(&self) -> &ParamRat {
        &self.inner
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn add(&self, other: &EpsilonRat) -> EpsilonRat {
        EpsilonRat {
            inner: self.inner.add(&other.inner),
        }
    }

    /// Multiplicity of the eps factor remaining in the denominator after
    /// reduction: the pole order at eps = 0 (for generic k0).
    pub fn eps_den_order(&self) -> u32 {
        self.inner
            .den()
            .find(|(f, _)| f.a() == 0 && f.b() == 1 && f.constant_term().is_zero())
            .map(|(_, mult)| mult)
            .unwrap_or(0)
    }

    /// Evaluate at eps = 0; the result is a rational function of k0 alone.
    /// Permitted only when the eps-order is 0.
    pub fn eval_eps0(&self) -> Result<ParamRat> {
        if self.eps_den_order() > 0 {
            return Err(Error::UnpairedPole {
                context: self.inner.render(),
            });
        }
        Ok(self.inner.substitute_k1_affine(0, 0, &Rat::zero()))
    }
}

/// Direct restriction k1 := -m - k0 of a rational function, when pole-free.
pub fn restrict(x: &ParamRat, m: u32) -> Result<ParamRat> {
    EpsilonRat::substitute(x, m).eval_eps0()
}

/// Coefficient-wise restriction of a polynomial.
pub fn poly_restrict(f: &MultiPoly, m: u32) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(f.arity());
    for (&e, c) in f.terms() {
        out.add_term(e, restrict(c, m)?);
    }
    Ok(out)
}

/// Coefficient-wise eps-substitution of a polynomial.
pub fn poly_epsilon_substitute(f: &MultiPoly, m: u32) -> MultiPoly {
    f.map_coeffs(|c| EpsilonRat::substitute(c, m).inner)
}

/// Largest eps denominator order over all coefficients.
pub fn poly_eps_order(f: &MultiPoly) -> u32 {
    f.terms()
        .map(|(_, c)| {
            EpsilonRat {
                inner: c.clone(),
            }
            .eps_den_order()
        })
        .max()
        .unwrap_or(0)
}

fn poch_k0_half(n: u32) -> ParamPoly {
    ParamPoly::affine(1, 0, Rat::new(1, 2)).pochhammer(n)
}

/// z zbar to a power on each variable pair present.
fn invariant_shell(arity: u8, e: u32) -> MultiPoly {
    let exps = if arity == 2 {
        [e, e, 0, 0]
    } else {
        [e, e, e, e]
    };
    if arity == 2 {
        MultiPoly::mono2(e, e, ParamRat::one())
    } else {
        MultiPoly::mono4(exps, ParamRat::one())
    }
}

/// Compare lhs = ratio * (z zbar)^(pow) * rhs under k1 = -m - k0, where
/// ratio = (k0+1/2)_p * num! / ((k0+1/2)_q * den!) and pow may be negative
/// (cleared by multiplying the other side).
struct CollapseCase {
    name: &'static str,
    lhs: MultiPoly,
    rhs: MultiPoly,
    ratio_num_poch: u32,
    ratio_num_fact: u32,
    ratio_den_poch: u32,
    ratio_den_fact: u32,
    shell_pow: i64,
}

fn check_collapse_case(case: &CollapseCase, m: u32, n: u32) -> VerificationReport {
    let params = format!("m={m} n={n}");
    let run = || -> Result<bool> {
        let lhs = poly_restrict(&case.lhs, m)?;
        let rhs = poly_restrict(&case.rhs, m)?;
        // cross-multiplied comparison:
        // den_poch * den_fact * shell^(max(0,-pow)) * lhs
        //   == num_poch * num_fact * shell^(max(0,pow)) * rhs
        let left = lhs
            .mul(&invariant_shell(2, (-case.shell_pow).max(0) as u32))
            .map_coeffs(|c| c.mul_poly(&poch_k0_half(case.ratio_den_poch)))
            .scalar_mul_rat(&Rat::factorial(case.ratio_den_fact));
        let right = rhs
            .mul(&invariant_shell(2, case.shell_pow.max(0) as u32))
            .map_coeffs(|c| c.mul_poly(&poch_k0_half(case.ratio_num_poch)))
            .scalar_mul_rat(&Rat::factorial(case.ratio_num_fact));
        Ok(left == right)
    };
    match run() {
        Ok(ok) => VerificationReport::check(case.name, params, ok, || {
            "restricted sides differ".to_string()
        }),
        Err(e) => VerificationReport::fail(case.name, params, e.to_string()),
    }
}

/// The basis-collapse identities at k1 = -m - k0: the even/odd family
/// members of degree below the fold map onto reflected degrees times a
/// power of z zbar.
pub fn check_basis_collapse(m: u32) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    // Even symmetric: f_{2n}^0 = ((k0+1/2)_n (m-n)! / ((k0+1/2)_{m-n} n!))
    //                 (z zbar)^{2n-m} f_{2m-2n}^0, 0 <= n <= m
    for n in 0..=m {
        reports.push(check_collapse_case(
            &CollapseCase {
                name: "collapse_f_even_sym",
                lhs: f_coeff_form(2 * n, Variant::Sym),
                rhs: f_coeff_form(2 * (m - n), Variant::Sym),
                ratio_num_poch: n,
                ratio_num_fact: m - n,
                ratio_den_poch: m - n,
                ratio_den_fact: n,
                shell_pow: 2 * n as i64 - m as i64,
            },
            m,
            n,
        ));
    }
    // Even antisymmetric: 1 <= n <= m-1, with (m-n-1)! and (n-1)!.
    for n in 1..m.max(1) {
        reports.push(check_collapse_case(
            &CollapseCase {
                name: "collapse_f_even_anti",
                lhs: f_coeff_form(2 * n, Variant::Anti),
                rhs: f_coeff_form(2 * (m - n), Variant::Anti),
                ratio_num_poch: n,
                ratio_num_fact: m - n - 1,
                ratio_den_poch: m - n,
                ratio_den_fact: n - 1,
                shell_pow: 2 * n as i64 - m as i64,
            },
            m,
            n,
        ));
    }
    // Odd cases, 0 <= n < m.
    for n in 0..m {
        reports.push(check_collapse_case(
            &CollapseCase {
                name: "collapse_f_odd_sym",
                lhs: f_coeff_form(2 * n + 1, Variant::Sym),
                rhs: f_coeff_form(2 * (m - n) - 1, Variant::Sym),
                ratio_num_poch: n + 1,
                ratio_num_fact: m - n - 1,
                ratio_den_poch: m - n,
                ratio_den_fact: n,
                shell_pow: 2 * n as i64 - m as i64 + 1,
            },
            m,
            n,
        ));
        reports.push(check_collapse_case(
            &CollapseCase {
                name: "collapse_f_odd_anti",
                lhs: f_coeff_form(2 * n + 1, Variant::Anti),
                rhs: f_coeff_form(2 * (m - n) - 1, Variant::Anti),
                ratio_num_poch: n,
                ratio_num_fact: m - n - 1,
                ratio_den_poch: m - n - 1,
                ratio_den_fact: n,
                shell_pow: 2 * n as i64 - m as i64 + 1,
            },
            m,
            n,
        ));
        // Full family folds onto the conjugated odd member:
        // f_{2n} = ratio (z zbar)^{2n-m} zbar f_{2m-2n-1}(zbar)
        let rhs = MultiPoly::mono2(0, 1, ParamRat::one())
            .mul(&f_coeff_form(2 * (m - n) - 1, Variant::Full).conjugate_swap());
        reports.push(check_collapse_case(
            &CollapseCase {
                name: "collapse_f_full_to_conj",
                lhs: f_coeff_form(2 * n, Variant::Full),
                rhs,
                ratio_num_poch: n,
                ratio_num_fact: m - n - 1,
                ratio_den_poch: m - n,
                ratio_den_fact: n,
                shell_pow: 2 * n as i64 - m as i64,
            },
            m,
            n,
        ));
    }
    reports
}

/// One ratio identity big/small = -((k0+1/2)_p q! / ((k0+1/2)_P Q!))^2 at
/// k1 = -m - k0, with (p, q) the numerator data and (P, Q) the denominator
/// data, compared in cross-multiplied form.
struct RatioCase<'a> {
    name: &'static str,
    big: &'a ParamRat,
    small: &'a ParamRat,
    num: (u32, u32),
    den: (u32, u32),
}

fn ratio_check(case: &RatioCase<'_>, params: String, m: u32) -> VerificationReport {
    let run = || -> Result<bool> {
        let big_r = restrict(case.big, m)?;
        let small_r = restrict(case.small, m)?;
        let lhs = big_r
            .mul_poly(&poch_k0_half(case.den.0).pow(2))
            .mul_rat(&Rat::factorial(case.den.1).powi(2));
        let rhs = small_r
            .neg()
            .mul_poly(&poch_k0_half(case.num.0).pow(2))
            .mul_rat(&Rat::factorial(case.num.1).powi(2));
        Ok(lhs == rhs)
    };
    match run() {
        Ok(ok) => {
            VerificationReport::check(case.name, params, ok, || "ratio mismatch".to_string())
        }
        Err(e) => VerificationReport::fail(case.name, params, e.to_string()),
    }
}

/// The constant-ratio and vanishing statements for the lambda family at
/// k1 = -m - k0.
pub fn check_lambda_ratios(m: u32) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    // lambda^0_{2m-2n} / lambda^0_{2n} and the antisymmetric twin,
    // 1 <= n <= m-1, n != m/2.
    for n in 1..m.max(1) {
        if 2 * n == m {
            continue;
        }
        reports.push(ratio_check(
            &RatioCase {
                name: "lambda_ratio_even_sym",
                big: &lambda_const(2 * (m - n), Variant::Sym),
                small: &lambda_const(2 * n, Variant::Sym),
                num: (n, m - n),
                den: (m - n, n),
            },
            format!("m={m} n={n}"),
            m,
        ));
        reports.push(ratio_check(
            &RatioCase {
                name: "lambda_ratio_even_anti",
                big: &lambda_const(2 * (m - n), Variant::Anti),
                small: &lambda_const(2 * n, Variant::Anti),
                num: (n, m - n - 1),
                den: (m - n, n - 1),
            },
            format!("m={m} n={n}"),
            m,
        ));
    }
    // lambda^0_{2m} = -(m!/(k0+1/2)_m)^2 and lambda^1_{2m} = 0.
    {
        let run = || -> Result<bool> {
            let l = restrict(&lambda_const(2 * m, Variant::Sym), m)?;
            let lhs = l.mul_poly(&poch_k0_half(m).pow(2));
            Ok(lhs == ParamRat::from_rat(-(Rat::factorial(m).powi(2))))
        };
        reports.push(match run() {
            Ok(ok) => VerificationReport::check("lambda_2m_sym_value", format!("m={m}"), ok, || {
                "value mismatch".to_string()
            }),
            Err(e) => VerificationReport::fail("lambda_2m_sym_value", format!("m={m}"), e.to_string()),
        });
        let anti_zero = restrict(&lambda_const(2 * m, Variant::Anti), m)
            .map(|v| v.is_zero())
            .unwrap_or(false);
        reports.push(VerificationReport::check(
            "lambda_2m_anti_vanishes",
            format!("m={m}"),
            anti_zero,
            || "nonzero".to_string(),
        ));
    }
    // Odd ratios: 0 <= n <= m-1, n != (m-1)/2.
    for n in 0..m {
        if 2 * n + 1 == m {
            continue;
        }
        reports.push(ratio_check(
            &RatioCase {
                name: "lambda_ratio_odd_sym",
                big: &lambda_const(2 * (m - n) - 1, Variant::Sym),
                small: &lambda_const(2 * n + 1, Variant::Sym),
                num: (n + 1, m - n - 1),
                den: (m - n, n),
            },
            format!("m={m} n={n}"),
            m,
        ));
        reports.push(ratio_check(
            &RatioCase {
                name: "lambda_ratio_odd_anti",
                big: &lambda_const(2 * (m - n) - 1, Variant::Anti),
                small: &lambda_const(2 * n + 1, Variant::Anti),
                num: (n, m - n - 1),
                den: (m - n - 1, n),
            },
            format!("m={m} n={n}"),
            m,
        ));
        // Full-family cross ratio lambda_{2m-2n-1} / lambda_{2n}.
        reports.push(ratio_check(
            &RatioCase {
                name: "lambda_ratio_full_cross",
                big: &lambda_const(2 * (m - n) - 1, Variant::Full),
                small: &lambda_const(2 * n, Variant::Full),
                num: (n, m - n - 1),
                den: (m - n, n),
            },
            format!("m={m} n={n}"),
            m,
        ));
    }
    // Vanishing tails: lambda_m^i = 0; lambda_n^i = 0 for n > 2m;
    // lambda_n = 0 for n >= 2m.
    let vanish = |name: &'static str, n: u32, variant: Variant| -> VerificationReport {
        let ok = restrict(&lambda_const(n, variant), m)
            .map(|v| v.is_zero())
            .unwrap_or(false);
        VerificationReport::check(name, format!("m={m} n={n}"), ok, || "nonzero".to_string())
    };
    if m >= 1 {
        reports.push(vanish("lambda_m_sym_vanishes", m, Variant::Sym));
        reports.push(vanish("lambda_m_anti_vanishes", m, Variant::Anti));
    }
    for n in (2 * m + 1)..=(2 * m + 3) {
        reports.push(vanish("lambda_tail_sym_vanishes", n, Variant::Sym));
        reports.push(vanish("lambda_tail_anti_vanishes", n, Variant::Anti));
    }
    for n in (2 * m)..=(2 * m + 3) {
        reports.push(vanish("lambda_tail_full_vanishes", n, Variant::Full));
    }
    reports
}

/// The Poisson-kernel reflection identity at k1 = -m - k0:
/// P_N = 0 for N > 2sm, and P_N + (z zbar w wbar)^(N-sm) P_{2sm-N} = 0
/// for 0 <= N <= 2sm (cleared of negative powers by cross-multiplying).
pub fn check_pzero(g: &GroupParam, m: u32, big_n: u32) -> VerificationReport {
    let s = g.s();
    let params = format!("s={s} m={m} N={big_n}");
    let run = || -> Result<bool> {
        let p = poly_restrict(&poisson_p(g, big_n), m)?;
        if big_n > 2 * s * m {
            return Ok(p.is_zero());
        }
        let partner = poly_restrict(&poisson_p(g, 2 * s * m - big_n), m)?;
        let (lhs, rhs) = if big_n >= s * m {
            (p, partner.mul(&invariant_shell(4, big_n - s * m)))
        } else {
            (p.mul(&invariant_shell(4, s * m - big_n)), partner)
        };
        Ok(lhs.add(&rhs).is_zero())
    };
    match run() {
        Ok(ok) => VerificationReport::check("poisson_reflection", params, ok, || {
            "sum not zero".to_string()
        }),
        Err(e) => VerificationReport::fail("poisson_reflection", params, e.to_string()),
    }
}

/// Pair grouping for the kernel series at k1 = -m + eps - k0: indices
/// j0 > j1 with j0 + j1 = n - sm are combined; j0 = j1 stands alone.
fn kernel_groups(g: &GroupParam, m: u32, n: u32) -> Vec<Vec<u32>> {
    let sm = g.s() * m;
    let mut groups: Vec<Vec<u32>> = Vec::new();
    let mut seen = vec![false; n as usize / 2 + 1];
    for j0 in (0..=(n / 2)).rev() {
        if seen[j0 as usize] {
            continue;
        }
        seen[j0 as usize] = true;
        let paired = n >= 2 * j0 && (n - 2 * j0) <= 2 * sm && (n - j0) >= sm;
        if paired && n >= j0 + sm {
            let j1 = n - j0 - sm;
            if j1 < j0 && j1 <= n / 2 {
                seen[j1 as usize] = true;
                groups.push(vec![j0, j1]);
                continue;
            }
        }
        groups.push(vec![j0]);
    }
    groups
}

/// Removability of the kernel-series singularities at k0 + k1 = -m:
/// grouped term sums carry no eps in any denominator, individual members
/// of nontrivial pairs do (the negative control), and the assembled kernel
/// evaluates finitely at eps = 0.
pub fn check_k_removable(g: &GroupParam, m: u32, n: u32) -> VerificationReport {
    let s = g.s();
    let params = format!("s={s} m={m} n={n}");
    let run = || -> Result<bool> {
        // j-th term of the kernel series, eps-substituted.
        let term = |j: u32| -> MultiPoly {
            let scalar = g
                .inv_gamma0_poch(0, n - j)
                .mul_rat(&(Rat::factorial(j) * Rat::pow2(n as i64)).recip());
            let t = poisson_p(g, n - 2 * j)
                .mul(&MultiPoly::mono4([j, j, j, j], ParamRat::one()))
                .scalar_mul(&scalar);
            poly_epsilon_substitute(&t, m)
        };
        let mut total = MultiPoly::zero(4);
        for group in kernel_groups(g, m, n) {
            let mut acc = MultiPoly::zero(4);
            for &j in &group {
                let t = term(j);
                if group.len() > 1 && poly_eps_order(&t) == 0 && !t.is_zero() {
                    return Err(Error::UnpairedPole {
                        context: format!("expected eps pole in paired term j={j} ({params})"),
                    });
                }
                acc = acc.add(&t);
            }
            if poly_eps_order(&acc) > 0 {
                return Err(Error::UnpairedPole {
                    context: format!("group {group:?} of {params}"),
                });
            }
            total = total.add(&acc);
        }
        // The assembled kernel is finite at eps = 0.
        for (_, c) in total.terms() {
            EpsilonRat { inner: c.clone() }.eval_eps0()?;
        }
        Ok(true)
    };
    match run() {
        Ok(ok) => VerificationReport::check("kernel_removable", params.clone(), ok, || {
            "grouping failed".to_string()
        }),
        Err(e) => VerificationReport::fail("kernel_removable", params, e.to_string()),
    }
}

/// Which expansion the pairing applies to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairingCase {
    /// a = b mod s: pairs (k, k') within the single sum, k + k' = u+v-m.
    EqualResidue,
    /// a - b = t mod s, 1 <= t < s: pairs across the two sums,
    /// k + k' = u+v+1-m.
    SplitResidue,
}

/// The index pairs that must be grouped to cancel the eps poles of the
/// monomial expansion of V at k0 + k1 = -m.
pub fn v_pairing(g: &GroupParam, a: u32, b: u32, m: u32) -> (PairingCase, Vec<(u32, u32)>) {
    assert!(a >= b);
    let s = g.s();
    let t = (a - b) % s;
    let r = b % s;
    let v = b / s;
    let mut pairs = Vec::new();
    if t == 0 {
        let u = a / s;
        let target = u as i64 + v as i64 - m as i64;
        for k in 0..=v as i64 {
            let kp = target - k;
            if k < kp && kp <= v as i64 {
                pairs.push((k as u32, kp as u32));
            }
        }
        (PairingCase::EqualResidue, pairs)
    } else {
        let u = (a - r - t) / s;
        let target = u as i64 + v as i64 + 1 - m as i64;
        let k_lo = if r + t < s { 1i64 } else { 0 };
        for k in 0..=v as i64 {
            let kp = target - k;
            if (k_lo..=v as i64).contains(&kp) {
                pairs.push((k as u32, kp as u32));
            }
        }
        (PairingCase::SplitResidue, pairs)
    }
}

/// Removability of the V-expansion singularities at k0 + k1 = -m for the
/// monomial z^a zbar^b (a >= b): grouped term sums are eps-finite, paired
/// members are individually singular, and the grouped total evaluates
/// finitely at eps = 0.
pub fn check_v_removable(g: &GroupParam, a: u32, b: u32, m: u32) -> VerificationReport {
    let s = g.s();
    let params = format!("s={s} m={m} a={a} b={b}");
    let (case, pairs) = v_pairing(g, a, b, m);
    let run = || -> Result<bool> {
        // Collect the expansion's terms as (slot, k, poly); slot 0 is the
        // first (or only) sum, slot 1 the second sum of the split case.
        let mut terms: Vec<(u8, u32, MultiPoly)> = Vec::new();
        match case {
            PairingCase::EqualResidue => {
                for (k, t) in vz2_terms(g, a, b) {
                    terms.push((0, k, poly_epsilon_substitute(&t, m)));
                }
            }
            PairingCase::SplitResidue => {
                let t = (a - b) % s;
                let (first, second) = vz1_terms(g, a, b, t);
                for (k, t) in first {
                    terms.push((0, k, poly_epsilon_substitute(&t, m)));
                }
                for (k, t) in second {
                    terms.push((1, k, poly_epsilon_substitute(&t, m)));
                }
            }
        }
        let second_slot = match case {
            PairingCase::EqualResidue => 0u8,
            PairingCase::SplitResidue => 1,
        };
        let find = |slot: u8, k: u32| -> MultiPoly {
            terms
                .iter()
                .find(|(sl, kk, _)| *sl == slot && *kk == k)
                .map(|(_, _, t)| t.clone())
                .unwrap_or_else(|| MultiPoly::zero(2))
        };
        let mut grouped: Vec<MultiPoly> = Vec::new();
        let mut used: Vec<(u8, u32)> = Vec::new();
        for &(k, kp) in &pairs {
            let t1 = find(0, k);
            let t2 = find(second_slot, kp);
            for (label, t) in [(k, &t1), (kp, &t2)] {
                if !t.is_zero() && poly_eps_order(t) == 0 {
                    return Err(Error::UnpairedPole {
                        context: format!("expected eps pole in paired term k={label} ({params})"),
                    });
                }
            }
            used.push((0, k));
            used.push((second_slot, kp));
            grouped.push(t1.add(&t2));
        }
        for (slot, k, t) in &terms {
            if !used.contains(&(*slot, *k)) {
                grouped.push(t.clone());
            }
        }
        let mut total = MultiPoly::zero(2);
        for gterm in grouped {
            if poly_eps_order(&gterm) > 0 {
                return Err(Error::UnpairedPole {
                    context: format!("grouped term of {params}"),
                });
            }
            total = total.add(&gterm);
        }
        for (_, c) in total.terms() {
            EpsilonRat { inner: c.clone() }.eval_eps0()?;
        }
        Ok(true)
    };
    match run() {
        Ok(ok) => VerificationReport::check("v_removable", params.clone(), ok, || {
            "grouping failed".to_string()
        }),
        Err(e) => VerificationReport::fail("v_removable", params, e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::summarize;

    #[test]
    fn substitution_examples() {
        // k0 + k1 + m -> eps
        let x = ParamRat::affine(1, 1, Rat::from_int(2));
        let e = EpsilonRat::substitute(&x, 2);
        assert_eq!(e.inner(), &ParamRat::affine(0, 1, Rat::zero()));
        // 2k0 + 1 unchanged
        let x = ParamRat::affine(2, 0, Rat::one());
        let e = EpsilonRat::substitute(&x, 2);
        assert_eq!(e.inner(), &x);
        // 1/(gamma0)_{n-j} with n - j >= sm picks up one eps factor
        let g = GroupParam::new(2);
        let x = g.inv_gamma0_poch(0, 3); // s=2, m=1: factor at i=1 becomes 2eps
        let e = EpsilonRat::substitute(&x, 1);
        assert_eq!(e.eps_den_order(), 1);
        assert!(e.eval_eps0().is_err());
        // but (gamma0)_2 at m=1 has no eps zero: i=0,1 -> 2eps-1, 2eps
        let x = g.inv_gamma0_poch(0, 2);
        let e = EpsilonRat::substitute(&x, 1);
        assert_eq!(e.eps_den_order(), 1);
        // ... i=1 hits 2(k0+k1)+2 = 2eps exactly at m=1
        let x = g.inv_gamma0_poch(0, 1);
        let e = EpsilonRat::substitute(&x, 1);
        assert_eq!(e.eps_den_order(), 0);
        assert!(e.eval_eps0().is_ok());
    }

    #[test]
    fn collapse_identities_small() {
        for m in 1..=3u32 {
            let reports = check_basis_collapse(m);
            let (total, failures) = summarize(&reports);
            assert!(total > 0);
            assert_eq!(failures, 0, "m={m}: {reports:?}");
        }
    }

    #[test]
    fn lambda_ratio_identities_small() {
        for m in 1..=3u32 {
            let reports = check_lambda_ratios(m);
            let (total, failures) = summarize(&reports);
            assert!(total > 0);
            assert_eq!(failures, 0, "m={m}");
        }
    }

    #[test]
    fn pzero_small() {
        for s in [1u32, 2] {
            let g = GroupParam::new(s);
            for m in 1..=2u32 {
                for big_n in 0..=(2 * s * m + 4) {
                    let r = check_pzero(&g, m, big_n);
                    assert!(r.passed(), "{r:?}");
                }
            }
        }
    }

    #[test]
    fn kernel_removability_small() {
        for s in [1u32, 2] {
            let g = GroupParam::new(s);
            for m in 1..=2u32 {
                for n in 1..=(2 * s * m + 2) {
                    let r = check_k_removable(&g, m, n);
                    assert!(r.passed(), "{r:?}");
                }
            }
        }
    }

    #[test]
    fn pairing_rules() {
        let g = GroupParam::new(2);
        // no pairs when u + v - m < 0
        let (_, pairs) = v_pairing(&g, 2, 0, 3);
        assert!(pairs.is_empty());
        // equal residue: a=6, b=2, s=2 -> u=3, v=1; m=2: k+k' = 2, k<k'<=1
        let (case, pairs) = v_pairing(&g, 6, 2, 2);
        assert_eq!(case, PairingCase::EqualResidue);
        assert_eq!(pairs, vec![(0, 2)].into_iter().filter(|&(_, kp)| kp <= 1).collect::<Vec<_>>());
        // split residue: a=5, b=1, s=2: t=(a-b)%s=0? no: 4%2=0 -> equal.
        let (case, _) = v_pairing(&g, 5, 1, 1);
        assert_eq!(case, PairingCase::EqualResidue);
        let (case, _) = v_pairing(&g, 4, 1, 1);
        assert_eq!(case, PairingCase::SplitResidue);
    }

    #[test]
    fn v_removability_small() {
        for s in [1u32, 2] {
            let g = GroupParam::new(s);
            for m in 1..=2u32 {
                let bound = 2 * s * m + 2;
                for a in 0..=bound {
                    for b in 0..=a.min(bound - a) {
                        let r = check_v_removable(&g, a, b, m);
                        assert!(r.passed(), "{r:?}");
                    }
                }
            }
        }
    }
}
