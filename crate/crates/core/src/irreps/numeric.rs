use num_complex::Complex64;
use serde_json::{json, Number, Value};

use super::{gram_L_n_c, gram_TL_n_eps, Family, IrrepError, Matrix, Representation};

pub type CMatrix = Vec<Vec<Complex64>>;

/// Floating-point image of a representation.
#[derive(Clone, Debug)]
pub struct NumericRep {
    pub q_value: Complex64,
    pub c_value: Complex64,
    pub orthonormal: bool,
    pub xp: CMatrix,
    pub xm: CMatrix,
    pub x0: CMatrix,
    pub cm: CMatrix,
}

fn eval_matrix(m: &Matrix, q: f64) -> Result<CMatrix, IrrepError> {
    m.rows().map(|r| r.iter().map(|s| Ok(s.evaluate_at(q)?)).collect()).collect()
}

fn natural_q(rep: &Representation, q: f64) -> Complex64 {
    match rep.field.order() {
        Some(n) => Complex64::from_polar(1.0, std::f64::consts::PI / n as f64),
        None => Complex64::new(q, 0.0),
    }
}

/// Entrywise evaluation in the `w` basis. Root-of-unity representations
/// are evaluated at `e^{iπ/N}` and ignore `q_value`.
pub fn evaluate_numeric(rep: &Representation, q_value: f64) -> Result<NumericRep, IrrepError> {
    let m = &rep.matrices;
    Ok(NumericRep {
        q_value: natural_q(rep, q_value),
        c_value: rep.c_value().evaluate_at(q_value)?,
        orthonormal: false,
        xp: eval_matrix(&m.xp, q_value)?,
        xm: eval_matrix(&m.xm, q_value)?,
        x0: eval_matrix(&m.x0, q_value)?,
        cm: eval_matrix(&m.cm, q_value)?,
    })
}

/// Action in the orthonormal basis `u_k = w_k/√(w_k, w_k)`, for `L_{n,c}` and
/// `T̃L_{n,ε}` at real `q > 0`.
pub fn orthonormal_numeric(rep: &Representation, q_value: f64) -> Result<NumericRep, IrrepError> {
    if !(q_value.is_finite() && q_value > 0.0) {
        return Err(IrrepError::Unsupported(format!("orthonormal basis needs real q > 0, got {q_value}")));
    }
    if !matches!(rep.family, Family::LnC | Family::TLnEps) {
        return Err(IrrepError::Unsupported(format!("no orthonormal form for family {}", rep.family)));
    }
    let n = rep.params.n.ok_or(IrrepError::MissingParam { family: rep.family, param: "n" })?;
    let gram = match rep.family {
        Family::LnC => gram_L_n_c(n, &rep.c_value())?,
        Family::TLnEps => gram_TL_n_eps(n, rep.params.eps.unwrap_or(1), rep.field)?,
        _ => unreachable!(),
    };
    // ‖w_k‖/‖w_{k−1}‖ = √(G_k/G_{k−1}), with the ratio formed exactly so that
    // it rounds identically to the matching X₊ entry.
    let mut steps = vec![1.0f64];
    for k in 1..gram.entries.len() {
        let ratio = gram.entries[k].div(&gram.entries[k - 1])?;
        let v = ratio.evaluate_at(q_value)?;
        if !(v.re > 0.0 && v.im.abs() <= 1e-14 * v.re) {
            let g = gram.entries[k].evaluate_at(q_value)?;
            return Err(IrrepError::NonUnitarizable { k, value: format!("{g}") });
        }
        steps.push(v.re.sqrt());
    }
    let mut out = evaluate_numeric(rep, q_value)?;
    // M_u[j][k] = M_w[j][k]·‖w_j‖/‖w_k‖
    for m in [&mut out.xp, &mut out.xm, &mut out.x0, &mut out.cm] {
        for (j, row) in m.iter_mut().enumerate() {
            for (k, e) in row.iter_mut().enumerate() {
                *e *= norm_ratio(&steps, j, k);
            }
        }
    }
    out.orthonormal = true;
    Ok(out)
}

// ‖w_j‖/‖w_k‖ from the steps ‖w_i‖/‖w_{i−1}‖.
fn norm_ratio(steps: &[f64], j: usize, k: usize) -> f64 {
    if j >= k {
        steps[k + 1..=j].iter().product()
    } else {
        1.0 / steps[j + 1..=k].iter().product::<f64>()
    }
}

pub fn cmul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn csub(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

pub fn cscale(a: &CMatrix, s: f64) -> CMatrix {
    a.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().flatten().map(|x| x.norm()).fold(0.0, f64::max)
}

pub fn adjoint(a: &CMatrix) -> CMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

impl NumericRep {
    /// `max |X₊ − X₋†|`
    pub fn adjoint_residual(&self) -> f64 {
        max_abs(&csub(&self.xp, &adjoint(&self.xm)))
    }

    /// Largest imaginary part of an `X₀` entry.
    pub fn x0_imaginary_part(&self) -> f64 {
        self.x0.iter().flatten().map(|x| x.im.abs()).fold(0.0, f64::max)
    }

    /// `(max|[X₀,X₊] − X₊|, max|[X₊,X₋] − 2X₀|)`, the distance from `sl(2)`.
    pub fn classical_residuals(&self) -> (f64, f64) {
        let comm = |a: &CMatrix, b: &CMatrix| csub(&cmul(a, b), &cmul(b, a));
        (
            max_abs(&csub(&comm(&self.x0, &self.xp), &self.xp)),
            max_abs(&csub(&comm(&self.xp, &self.xm), &cscale(&self.x0, 2.0))),
        )
    }

    pub fn to_json(&self) -> Value {
        let mats = |m: &CMatrix| Value::Array(m.iter().map(|r| Value::Array(r.iter().map(complex_json).collect())).collect());
        let mut v = json!({
            "q": complex_json(&self.q_value),
            "c": complex_json(&self.c_value),
            "orthonormal": self.orthonormal,
            "matrices": {"Xp": mats(&self.xp), "Xm": mats(&self.xm), "X0": mats(&self.x0), "C": mats(&self.cm)},
        });
        if self.orthonormal {
            v["adjoint_residual"] = float_json(self.adjoint_residual());
        }
        v
    }
}

/// 17 significant digits, enough to round-trip an `f64`.
pub fn float_json(x: f64) -> Value {
    let text = format!("{x:.16e}");
    Value::Number(text.parse::<Number>().expect("formatted float is a JSON number"))
}

fn complex_json(z: &Complex64) -> Value {
    json!([float_json(z.re), float_json(z.im)])
}
