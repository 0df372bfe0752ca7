//! JSON wire encodings for rational functions and polynomials.
//!
//! Numerator terms are `{e0, e1, c}`, denominator factors `{a, b, c, mult}`
//! and polynomial terms `{"exps": [a, b(, c, d)], "coeff": ...}`, with all
//! rationals as `p/q` decimal strings (arbitrary precision) and terms in
//! lexicographic exponent order. Output round-trips through the parsers
//! bit-exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{ParamPoly, ParamRat};
use crate::multipoly::MultiPoly;
use crate::scalar::Rat;

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct NumTermDto {
    pub e0: u32,
    pub e1: u32,
    pub c: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct DenFactorDto {
    pub a: i64,
    pub b: i64,
    pub c: String,
    pub mult: u32,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ParamRatDto {
    pub num: Vec<NumTermDto>,
    pub den: Vec<DenFactorDto>,
    pub scale: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PolyTermDto {
    pub exps: Vec<u32>,
    pub coeff: ParamRatDto,
}

pub fn rat_to_dto(x: &ParamRat) -> ParamRatDto {
    ParamRatDto {
        num: x
            .num()
            .terms()
            .map(|(&(e0, e1), c)| NumTermDto { e0, e1, c: c.encode() })
            .collect(),
        den: x
            .den()
            .map(|(f, mult)| DenFactorDto {
                a: f.a(),
                b: f.b(),
                c: f.constant_term().encode(),
                mult,
            })
            .collect(),
        scale: x.scale().encode(),
    }
}

pub fn rat_from_dto(dto: &ParamRatDto) -> Result<ParamRat> {
    let mut num = ParamPoly::zero();
    for t in &dto.num {
        num.add_term(t.e0, t.e1, Rat::decode(&t.c).map_err(Error::Parse)?);
    }
    let mut den = Vec::with_capacity(dto.den.len());
    for d in &dto.den {
        den.push(((d.a, d.b, Rat::decode(&d.c).map_err(Error::Parse)?), d.mult));
    }
    let scale = Rat::decode(&dto.scale).map_err(Error::Parse)?;
    Ok(ParamRat::from_num_den(num, den).mul_rat(&scale))
}

pub fn poly_to_dto(f: &MultiPoly) -> Vec<PolyTermDto> {
    let width = f.arity() as usize;
    f.terms()
        .map(|(&e, c)| PolyTermDto {
            exps: e[..width].to_vec(),
            coeff: rat_to_dto(c),
        })
        .collect()
}

pub fn poly_from_dto(terms: &[PolyTermDto]) -> Result<MultiPoly> {
    let arity = match terms.first().map(|t| t.exps.len()) {
        None | Some(2) => 2,
        Some(4) => 4,
        Some(n) => {
            return Err(Error::Parse(format!("bad exponent tuple length {n}")));
        }
    };
    let mut out = MultiPoly::zero(arity as u8);
    for t in terms {
        if t.exps.len() != arity {
            return Err(Error::Parse("mixed exponent tuple lengths".into()));
        }
        let mut e = [0u32; 4];
        e[..arity].copy_from_slice(&t.exps);
        out.add_term(e, rat_from_dto(&t.coeff)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dunkl::GroupParam;
    use crate::intertwine::intertwine_mono;

    #[test]
    fn rat_roundtrip_bit_exact() {
        let g = GroupParam::new(2);
        let x = g.inv_gamma0_poch(0, 3).mul(&ParamRat::affine(1, -1, Rat::new(2, 3)));
        let dto = rat_to_dto(&x);
        let s1 = serde_json::to_string(&dto).unwrap();
        let back = rat_from_dto(&serde_json::from_str(&s1).unwrap()).unwrap();
        let s2 = serde_json::to_string(&rat_to_dto(&back)).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(x, back);
    }

    #[test]
    fn poly_roundtrip_bit_exact() {
        let g = GroupParam::new(2);
        for (a, b) in [(2u32, 0u32), (3, 1), (4, 2)] {
            let v = intertwine_mono(&g, a, b);
            let s1 = serde_json::to_string(&poly_to_dto(&v)).unwrap();
            let back = poly_from_dto(&serde_json::from_str::<Vec<PolyTermDto>>(&s1).unwrap())
                .unwrap();
            let s2 = serde_json::to_string(&poly_to_dto(&back)).unwrap();
            assert_eq!(s1, s2);
            assert_eq!(v, back);
        }
    }

    #[test]
    fn arity_four_roundtrip() {
        let k = crate::kernels::kernel_k(&GroupParam::new(2), 2);
        let dto = poly_to_dto(&k);
        assert!(dto.iter().all(|t| t.exps.len() == 4));
        let back = poly_from_dto(&dto).unwrap();
        assert_eq!(k, back);
    }
}
