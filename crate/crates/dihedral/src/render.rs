//! Plain-text and LaTeX renderings of polynomials. Display only — the
//! LaTeX form is never parsed back.

use num_traits::Signed;

use crate::field::{ParamPoly, ParamRat};
use crate::multipoly::MultiPoly;

pub fn text_poly(f: &MultiPoly) -> String {
    f.render()
}

fn latex_rat_scalar(c: &crate::scalar::Rat) -> String {
    if c.denom() == &num_bigint::BigInt::from(1) {
        format!("{}", c.numer())
    } else {
        let sign = if c.is_negative() { "-" } else { "" };
        format!("{sign}\\tfrac{{{}}}{{{}}}", c.numer().abs(), c.denom())
    }
}

fn latex_param_poly(p: &ParamPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (&(e0, e1), c)) in p.terms().enumerate() {
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || (e0 == 0 && e1 == 0) {
            factors.push(latex_rat_scalar(&mag));
        }
        for (e, name) in [(e0, "\\kappa_0"), (e1, "\\kappa_1")] {
            if e == 1 {
                factors.push(name.to_string());
            } else if e > 1 {
                factors.push(format!("{name}^{{{e}}}"));
            }
        }
        out.push_str(&factors.join(" "));
    }
    out
}

pub fn latex_rat(x: &ParamRat) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let num = latex_param_poly(&x.num().scale(x.scale()));
    let dens: Vec<String> = x
        .den()
        .map(|(f, m)| {
            let base = format!("\\left({}\\right)", latex_param_poly(&f.as_poly()));
            if m == 1 {
                base
            } else {
                format!("{base}^{{{m}}}")
            }
        })
        .collect();
    if dens.is_empty() {
        num
    } else {
        format!("\\frac{{{}}}{{{}}}", num, dens.join(""))
    }
}

pub fn latex_poly(f: &MultiPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let names = ["z", "\\bar{z}", "w", "\\bar{w}"];
    let mut parts: Vec<String> = Vec::new();
    for (&e, c) in f.terms() {
        let mut mono: Vec<String> = Vec::new();
        for (i, &exp) in e.iter().enumerate() {
            if exp == 1 {
                mono.push(names[i].to_string());
            } else if exp > 1 {
                mono.push(format!("{}^{{{}}}", names[i], exp));
            }
        }
        let mono_str = mono.join(" ");
        let coeff_str = latex_rat(c);
        let part = if mono_str.is_empty() {
            coeff_str
        } else if c.is_one() {
            mono_str
        } else if c.den().count() == 0 && c.num().terms().count() > 1 {
            format!("\\left({coeff_str}\\right) {mono_str}")
        } else {
            format!("{coeff_str}\\, {mono_str}")
        };
        parts.push(part);
    }
    parts.join(" + ")
}
