use serde_json::{json, Value};

use super::IrrepError;
use crate::scalars::{q_factorial, q_int, FieldSpec, Scalar};
use crate::verma::{self, HighestWeight};

/// Diagonal of the Shapovalov form in the basis `w_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramForm {
    pub entries: Vec<Scalar>,
}

impl GramForm {
    pub fn to_json(&self) -> Value {
        json!({ "entries": self.entries.iter().map(Scalar::to_json).collect::<Vec<_>>() })
    }
}

// q^{k(k+1−n)} [k]! [n−1]! / [n−1−k]!
fn factorial_part(n: u32, k: u32, field: FieldSpec) -> Result<Scalar, IrrepError> {
    let e = k as i64 * (k as i64 + 1 - n as i64);
    let top = Scalar::q_pow(e, field) * q_factorial(k, field) * q_factorial(n - 1, field);
    Ok(top.div(&q_factorial(n - 1 - k, field))?)
}

/// Closed-form Gram entries of `L_{n,c}` (or `L_{n,c,N}` for cyclotomic `c`).
#[allow(non_snake_case)]
pub fn gram_L_n_c(n: u32, c: &Scalar) -> Result<GramForm, IrrepError> {
    let f = c.field();
    super::check_lnc(n, c)?;
    if let Some(big_n) = f.order() {
        super::check_root_level(n, big_n)?;
    }
    let ni = n as i64;
    let kf = (c * &q_int(2, f) * q_int(ni, f)).div(&q_int(2 * ni, f))?;
    let k2 = &kf * &kf;
    let entries = (0..n).map(|k| Ok(factorial_part(n, k, f)? * k2.pow(k))).collect::<Result<_, IrrepError>>()?;
    Ok(GramForm { entries })
}

/// Closed-form Gram entries of `T̃L_{n,ε}`; independent of `ε`.
#[allow(non_snake_case)]
pub fn gram_TL_n_eps(n: u32, eps: i8, field: FieldSpec) -> Result<GramForm, IrrepError> {
    super::build_TL_n_eps(n, eps, field)?;
    let entries = (0..n).map(|k| factorial_part(n, k, field)).collect::<Result<_, _>>()?;
    Ok(GramForm { entries })
}

/// `(w_j, w_k)`: coefficient of `v₀` in `X₊^j v_k`, by repeated application
/// of the Verma action.
pub fn gram_matrix_from_definition(n: u32, hw: &HighestWeight) -> Vec<Vec<Scalar>> {
    let f = hw.field();
    let raise: Vec<Scalar> = (0..n).map(|k| if k == 0 { Scalar::zero(f) } else { verma::raising_coefficient(k, hw) }).collect();
    // prefix[k] = A_1⋯A_k, the coefficient of v₀ in X₊^k v_k
    let mut prefix = vec![Scalar::one(f)];
    for k in 1..n as usize {
        let next = &prefix[k - 1] * &raise[k];
        prefix.push(next);
    }
    (0..n as usize)
        .map(|j| {
            (0..n as usize)
                .map(|k| {
                    // X₊^j v_k is a multiple of v_{k−j} (zero if j > k), so only j = k reaches v₀.
                    if j == k {
                        prefix[k].clone()
                    } else {
                        Scalar::zero(f)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn gram_from_definition(n: u32, hw: &HighestWeight) -> GramForm {
    let m = gram_matrix_from_definition(n, hw);
    GramForm { entries: m.into_iter().enumerate().map(|(k, mut row)| row.swap_remove(k)).collect() }
}
