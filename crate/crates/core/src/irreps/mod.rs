//! Finite-dimensional irreducible representations as explicit matrices in
//! the basis `w_k = X₋^k w₀`, for every family of the catalogue.

mod gram;
mod matrix;
mod numeric;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::scalars::{q_int, FieldSpec, Scalar, ScalarError};
use crate::verma::{self, classify_weight, crel_holds, HighestWeight, VermaError};

pub use gram::{gram_L_n_c, gram_TL_n_eps, gram_from_definition, gram_matrix_from_definition, GramForm};
pub use matrix::Matrix;
pub use numeric::{evaluate_numeric, float_json, orthonormal_numeric, CMatrix, NumericRep};
pub use verify::{casimir_eigenvalue, casimir_matrix, css_check, full_report, verify_relations, Check, Failure, RelationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IrrepError {
    #[error("c must be nonzero")]
    ZeroC,
    #[error("mu must be nonzero")]
    ZeroMu,
    #[error("N = {0} is odd; this family needs N even")]
    BadParity(u32),
    #[error("bad level: {0}")]
    BadLevel(String),
    #[error("weight lies in a special case: {0}")]
    WeightInSpecialCase(String),
    #[error("weight violates c² = 1 + λ²(μ²/q² + cμ/q)")]
    CrelViolation,
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("Casimir matrix is not a multiple of the identity")]
    NotScalar,
    #[error("Gram entry {k} evaluates to {value}, which has no positive square root")]
    NonUnitarizable { k: usize, value: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("family {family} needs parameter --{param}")]
    MissingParam { family: Family, param: &'static str },
    #[error("malformed representation: {0}")]
    Malformed(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Verma(#[from] VermaError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Family {
    LnC,
    LMu,
    LLambdaN,
    LnCN,
    LMuNtilde,
    TLnEps,
    TLLambdaN,
    TLnEpsN,
    TLEpsNtilde,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::LnC,
        Family::LMu,
        Family::LLambdaN,
        Family::LnCN,
        Family::LMuNtilde,
        Family::TLnEps,
        Family::TLLambdaN,
        Family::TLnEpsN,
        Family::TLEpsNtilde,
    ];

    /// Representations of the restricted algebra.
    pub fn is_restricted(self) -> bool {
        matches!(self, Family::TLnEps | Family::TLLambdaN | Family::TLnEpsN | Family::TLEpsNtilde)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = IrrepError;
    fn from_str(s: &str) -> Result<Self, IrrepError> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| IrrepError::Malformed(format!("unknown family {s:?}")))
    }
}

/// Constructor parameters; which ones are meaningful depends on the family.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Params {
    pub n: Option<u32>,
    pub big_n: Option<u32>,
    pub eps: Option<i8>,
    pub mu: Option<Scalar>,
    pub c: Option<Scalar>,
}

impl Params {
    fn to_json(&self) -> Value {
        let mut m = Map::new();
        if let Some(n) = self.n {
            m.insert("n".into(), json!(n));
        }
        if let Some(n) = self.big_n {
            m.insert("N".into(), json!(n));
        }
        if let Some(e) = self.eps {
            m.insert("eps".into(), json!(e));
        }
        if let Some(mu) = &self.mu {
            m.insert("mu".into(), mu.to_json());
        }
        if let Some(c) = &self.c {
            m.insert("c".into(), c.to_json());
        }
        Value::Object(m)
    }

    fn from_json(v: &Value, field: FieldSpec) -> Result<Self, IrrepError> {
        let int = |key: &str| -> Result<Option<i64>, IrrepError> {
            match v.get(key) {
                None => Ok(None),
                Some(x) => x.as_i64().map(Some).ok_or_else(|| IrrepError::Malformed(format!("param {key} not an integer"))),
            }
        };
        let narrow = |x: Option<i64>, key: &str| -> Result<Option<u32>, IrrepError> {
            x.map(|x| u32::try_from(x).map_err(|_| IrrepError::Malformed(format!("param {key} out of range")))).transpose()
        };
        let eps = match int("eps")? {
            None => None,
            Some(1) => Some(1),
            Some(-1) => Some(-1),
            Some(_) => return Err(IrrepError::Malformed("eps must be ±1".into())),
        };
        let scalar = |key: &str| v.get(key).map(|s| Scalar::from_json(s, field)).transpose();
        Ok(Params { n: narrow(int("n")?, "n")?, big_n: narrow(int("N")?, "N")?, eps, mu: scalar("mu")?, c: scalar("c")? })
    }
}

/// `X₊, X₋, X₀, C` acting on column vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepMatrices {
    pub xp: Matrix,
    pub xm: Matrix,
    pub x0: Matrix,
    pub cm: Matrix,
}

impl RepMatrices {
    /// Unit lowering shift, super-diagonal raising, diagonal weights.
    pub fn from_entries(raise: Vec<Scalar>, weights: Vec<Scalar>, c: &Scalar) -> Self {
        let f = c.field();
        let dim = weights.len();
        RepMatrices {
            xp: Matrix::superdiagonal(raise, f),
            xm: Matrix::lowering_shift(dim, f),
            x0: Matrix::diagonal(weights, f),
            cm: Matrix::identity(dim, f).scale(c),
        }
    }

    pub fn dim(&self) -> usize {
        self.x0.dim()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    pub family: Family,
    pub field: FieldSpec,
    pub params: Params,
    pub matrices: RepMatrices,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.matrices.dim()
    }

    pub fn is_restricted(&self) -> bool {
        self.family.is_restricted()
    }

    /// `C` eigenvalue, read from the matrix.
    pub fn c_value(&self) -> Scalar {
        self.matrices.cm.get(0, 0).clone()
    }

    /// Catalogue dimension for the stored parameters.
    pub fn expected_dim(&self) -> Option<usize> {
        let p = &self.params;
        match self.family {
            Family::LnC | Family::LnCN | Family::TLnEps | Family::TLnEpsN => p.n.map(|n| n as usize),
            Family::LMu => Some(1),
            Family::LLambdaN | Family::TLLambdaN => p.big_n.map(|n| n as usize),
            Family::LMuNtilde | Family::TLEpsNtilde => p.big_n.map(|n| n as usize / 2),
        }
    }

    /// Highest weight `μ` predicted by the family's weight formula.
    pub fn expected_highest_weight(&self) -> Result<Scalar, IrrepError> {
        let p = &self.params;
        let f = self.field;
        let need_n = || p.n.ok_or(IrrepError::MissingParam { family: self.family, param: "n" });
        let need_eps = || p.eps.ok_or(IrrepError::MissingParam { family: self.family, param: "eps" });
        let need_mu = || p.mu.clone().ok_or(IrrepError::MissingParam { family: self.family, param: "mu" });
        match self.family {
            Family::LnC | Family::LnCN => {
                let n = need_n()? as i64;
                let c = p.c.clone().ok_or(IrrepError::MissingParam { family: self.family, param: "c" })?;
                Ok((Scalar::q(f) * q_int(n, f) * q_int(n - 1, f) * c).div(&q_int(2 * n, f))?)
            }
            Family::TLnEps | Family::TLnEpsN => {
                Ok(verma::restricted_weights(need_n()?, need_eps()?, f)?.hw.mu().clone())
            }
            Family::TLEpsNtilde => {
                let n = p.big_n.ok_or(IrrepError::MissingParam { family: self.family, param: "N" })?;
                Ok(verma::rru_weight(need_eps()?, n)?.mu().clone())
            }
            Family::LMu | Family::LLambdaN | Family::TLLambdaN | Family::LMuNtilde => need_mu(),
        }
    }

    pub fn to_json(&self) -> Value {
        let m = &self.matrices;
        json!({
            "family": self.family.to_string(),
            "field": self.field.to_json(),
            "params": self.params.to_json(),
            "dim": self.dim(),
            "matrices": {"Xp": m.xp.to_json(), "Xm": m.xm.to_json(), "X0": m.x0.to_json(), "C": m.cm.to_json()},
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, IrrepError> {
        let bad = |why: &str| IrrepError::Malformed(why.to_string());
        let family: Family = v.get("family").and_then(Value::as_str).ok_or_else(|| bad("missing family"))?.parse()?;
        let field = FieldSpec::from_json(v.get("field").ok_or_else(|| bad("missing field"))?)?;
        let params = Params::from_json(v.get("params").ok_or_else(|| bad("missing params"))?, field)?;
        let dim = v.get("dim").and_then(Value::as_u64).filter(|&d| d >= 1).ok_or_else(|| bad("dim must be a positive integer"))?
            as usize;
        let mats = v.get("matrices").ok_or_else(|| bad("missing matrices"))?;
        let get = |key: &str| -> Result<Matrix, IrrepError> {
            Ok(Matrix::from_json(mats.get(key).ok_or_else(|| bad(&format!("missing matrix {key}")))?, dim, field)?)
        };
        let matrices = RepMatrices { xp: get("Xp")?, xm: get("Xm")?, x0: get("X0")?, cm: get("C")? };
        Ok(Representation { family, field, params, matrices })
    }

    /// Rebuilds from the stored parameters.
    pub fn rebuild(&self) -> Result<Representation, IrrepError> {
        build(self.family, &self.params, self.field)
    }
}

/// Dispatches to the family constructor. `field` is only consulted by the
/// families that accept either field.
pub fn build(family: Family, p: &Params, field: FieldSpec) -> Result<Representation, IrrepError> {
    let missing = |param| IrrepError::MissingParam { family, param };
    let n = || p.n.ok_or(missing("n"));
    let big_n = || p.big_n.ok_or(missing("N"));
    let eps = || p.eps.ok_or(missing("eps"));
    let mu = || p.mu.clone().ok_or(missing("mu"));
    let c = || p.c.clone().ok_or(missing("c"));
    match family {
        Family::LnC => build_L_n_c(n()?, c()?),
        Family::LMu => Ok(build_L_mu(mu()?)),
        Family::LLambdaN => build_L_Lambda_N(big_n()?, mu()?, c()?),
        Family::LnCN => build_L_n_c_N(n()?, big_n()?, c()?),
        Family::LMuNtilde => build_L_mu_Ntilde(big_n()?, mu()?),
        Family::TLnEps => build_TL_n_eps(n()?, eps()?, FieldSpec::Generic),
        Family::TLnEpsN => build_TL_n_eps(n()?, eps()?, root_field(big_n()?)?),
        Family::TLLambdaN => build_TL_Lambda_N(big_n()?, mu()?, c()?),
        Family::TLEpsNtilde => build_TL_eps_Ntilde(big_n()?, eps()?),
    }
    .and_then(|rep| {
        if rep.field != field && family == Family::LMu {
            Err(IrrepError::FieldMismatch(format!("mu lies in {}, expected {field}", rep.field)))
        } else {
            Ok(rep)
        }
    })
}

fn root_field(n: u32) -> Result<FieldSpec, IrrepError> {
    Ok(FieldSpec::root_of_unity(n)?)
}

fn expect_field(s: &Scalar, field: FieldSpec, what: &str) -> Result<(), IrrepError> {
    if s.field() == field {
        Ok(())
    } else {
        Err(IrrepError::FieldMismatch(format!("{what} lies in {}, expected {field}", s.field())))
    }
}

/// X₊ entries `q^{2k−n}[k][n−k]K²` and weights `c q^k[n]/[2n]([n−k] − q^{1−n}[k+1])`,
/// `K = c[2][n]/[2n]`.
fn fct_matrices(n: u32, c: &Scalar, k_factor: &Scalar) -> Result<RepMatrices, IrrepError> {
    let f = c.field();
    let ni = n as i64;
    let two_n = q_int(2 * ni, f);
    let k2 = k_factor * k_factor;
    let raise = (1..ni).map(|k| Scalar::q_pow(2 * k - ni, f) * q_int(k, f) * q_int(ni - k, f) * &k2).collect();
    let pre = (c * &q_int(ni, f)).div(&two_n)?;
    let weights = (0..ni)
        .map(|k| {
            &pre * &Scalar::q_pow(k, f) * (q_int(ni - k, f) - Scalar::q_pow(1 - ni, f) * q_int(k + 1, f))
        })
        .collect();
    Ok(RepMatrices::from_entries(raise, weights, c))
}

fn lnc_matrices(n: u32, c: &Scalar) -> Result<RepMatrices, IrrepError> {
    let f = c.field();
    let ni = n as i64;
    let k_factor = (c * &q_int(2, f) * q_int(ni, f)).div(&q_int(2 * ni, f))?;
    fct_matrices(n, c, &k_factor)
}

fn check_root_level(n: u32, big_n: u32) -> Result<(), IrrepError> {
    if n >= big_n {
        return Err(IrrepError::BadLevel(format!("n = {n} must be below N = {big_n}")));
    }
    if 2 * n == big_n {
        return Err(IrrepError::DivisionByZero("n = N/2 forbidden at even N; see half-periodic family".into()));
    }
    Ok(())
}

fn check_lnc(n: u32, c: &Scalar) -> Result<(), IrrepError> {
    if n == 0 {
        return Err(IrrepError::BadLevel("n must be at least 1".into()));
    }
    if c.is_zero() {
        return Err(IrrepError::ZeroC);
    }
    Ok(())
}

fn params(n: Option<u32>, big_n: Option<u32>, eps: Option<i8>, mu: Option<Scalar>, c: Option<Scalar>) -> Params {
    Params { n, big_n, eps, mu, c }
}

/// `L_{n,c}` at generic `q`.
#[allow(non_snake_case)]
pub fn build_L_n_c(n: u32, c: Scalar) -> Result<Representation, IrrepError> {
    if c.field() != FieldSpec::Generic {
        return Err(IrrepError::Unsupported("L_{n,c} needs generic q; use build_L_n_c_N at roots of unity".into()));
    }
    check_lnc(n, &c)?;
    let matrices = lnc_matrices(n, &c)?;
    Ok(Representation { family: Family::LnC, field: FieldSpec::Generic, params: params(Some(n), None, None, None, Some(c)), matrices })
}

/// `L_{n,c,N}`: same rules as `L_{n,c}` over `ℚ(ζ_{2N})`.
#[allow(non_snake_case)]
pub fn build_L_n_c_N(n: u32, big_n: u32, c: Scalar) -> Result<Representation, IrrepError> {
    let field = root_field(big_n)?;
    expect_field(&c, field, "c")?;
    check_lnc(n, &c)?;
    check_root_level(n, big_n)?;
    let matrices = lnc_matrices(n, &c)?;
    Ok(Representation { family: Family::LnCN, field, params: params(Some(n), Some(big_n), None, None, Some(c)), matrices })
}

/// One-dimensional `L_μ`: `X₀ = μ`, `C = λμ`.
#[allow(non_snake_case)]
pub fn build_L_mu(mu: Scalar) -> Representation {
    let f = mu.field();
    let c = Scalar::lambda(f) * &mu;
    let matrices = RepMatrices::from_entries(vec![], vec![mu.clone()], &c);
    Representation { family: Family::LMu, field: f, params: params(None, None, None, Some(mu), None), matrices }
}

/// Restricted `T̃L_{n,ε}`; at a root of unity the family is `TLnEpsN`.
#[allow(non_snake_case)]
pub fn build_TL_n_eps(n: u32, eps: i8, field: FieldSpec) -> Result<Representation, IrrepError> {
    if n == 0 {
        return Err(IrrepError::BadLevel("n must be at least 1".into()));
    }
    let big_n = field.order();
    if let Some(big_n) = big_n {
        if n >= big_n {
            return Err(IrrepError::BadLevel(format!("n = {n} must be below N = {big_n}")));
        }
    }
    let ni = n as i64;
    if q_int(2 * ni, field).is_zero() {
        return Err(IrrepError::DivisionByZero(format!("[2n] vanishes at n = {n}")));
    }
    let e = verma::eps_sign(eps);
    let c = (Scalar::from_int(e, field) * q_int(2 * ni, field))
        .div(&(q_int(2, field) * q_int(ni, field)))
        .map_err(|_| IrrepError::DivisionByZero("[2][n] vanishes".into()))?;
    let matrices = fct_matrices(n, &c, &Scalar::from_int(e, field))?;
    let family = if big_n.is_some() { Family::TLnEpsN } else { Family::TLnEps };
    Ok(Representation { family, field, params: params(Some(n), big_n, Some(e as i8), None, None), matrices })
}

fn check_generic_root_weight(hw: &HighestWeight, big_n: u32) -> Result<(), IrrepError> {
    for k in 1..big_n {
        if verma::singular_coefficient(k, hw)?.is_zero() {
            let report = classify_weight(hw, big_n)?;
            return Err(IrrepError::WeightInSpecialCase(format!(
                "level {k} < N is singular (weight class {}); use the matching family",
                report.class
            )));
        }
    }
    debug_assert!(verma::singular_coefficient(big_n, hw)?.is_zero());
    Ok(())
}

#[allow(non_snake_case)]
fn root_verma(big_n: u32, mu: &Scalar, c: &Scalar, restricted: bool) -> Result<(FieldSpec, RepMatrices), IrrepError> {
    let field = root_field(big_n)?;
    expect_field(mu, field, "mu")?;
    expect_field(c, field, "c")?;
    if restricted && !crel_holds(mu, c) {
        return Err(IrrepError::CrelViolation);
    }
    let hw = HighestWeight::new(mu.clone(), c.clone(), restricted)?;
    check_generic_root_weight(&hw, big_n)?;
    Ok((field, truncated_verma(&hw, big_n as usize)))
}

/// `L_{Λ,N}`: the Verma action truncated at the periodic singular vector.
#[allow(non_snake_case)]
pub fn build_L_Lambda_N(big_n: u32, mu: Scalar, c: Scalar) -> Result<Representation, IrrepError> {
    let (field, matrices) = root_verma(big_n, &mu, &c, false)?;
    Ok(Representation { family: Family::LLambdaN, field, params: params(None, Some(big_n), None, Some(mu), Some(c)), matrices })
}

/// `T̃L_{Λ,N}`: as `L_{Λ,N}` with the restriction imposed on `(μ, c)`.
#[allow(non_snake_case)]
pub fn build_TL_Lambda_N(big_n: u32, mu: Scalar, c: Scalar) -> Result<Representation, IrrepError> {
    let (field, matrices) = root_verma(big_n, &mu, &c, true)?;
    Ok(Representation { family: Family::TLLambdaN, field, params: params(None, Some(big_n), None, Some(mu), Some(c)), matrices })
}

/// `L_{μ,Ñ}` at even `N`, `c = 0`.
#[allow(non_snake_case)]
pub fn build_L_mu_Ntilde(big_n: u32, mu: Scalar) -> Result<Representation, IrrepError> {
    if big_n % 2 != 0 {
        return Err(IrrepError::BadParity(big_n));
    }
    let field = root_field(big_n)?;
    expect_field(&mu, field, "mu")?;
    if mu.is_zero() {
        return Err(IrrepError::ZeroMu);
    }
    let half = big_n as i64 / 2;
    let lam_mu2 = Scalar::lambda(field) * &mu * &mu;
    let raise = (1..half).map(|k| -(Scalar::q_pow(2 * k - 2, field) * q_int(2 * k, field) * &lam_mu2)).collect();
    let weights = (0..half).map(|k| Scalar::q_pow(2 * k, field) * &mu).collect();
    let matrices = RepMatrices::from_entries(raise, weights, &Scalar::zero(field));
    Ok(Representation { family: Family::LMuNtilde, field, params: params(None, Some(big_n), None, Some(mu), None), matrices })
}

/// `T̃L_{ε,Ñ}` at even `N`: `X₊ = q^{2k}[2k]/λ`, `X₀ = εi q^{2k+1}/λ`, `C = 0`.
#[allow(non_snake_case)]
pub fn build_TL_eps_Ntilde(big_n: u32, eps: i8) -> Result<Representation, IrrepError> {
    if big_n % 2 != 0 {
        return Err(IrrepError::BadParity(big_n));
    }
    let field = root_field(big_n)?;
    let half = big_n as i64 / 2;
    let e = verma::eps_sign(eps);
    let inv_lam = Scalar::lambda(field).inv()?;
    let ei = Scalar::from_int(e, field) * verma::imaginary_unit(big_n)?;
    let raise = (1..half).map(|k| Scalar::q_pow(2 * k, field) * q_int(2 * k, field) * &inv_lam).collect();
    let weights = (0..half).map(|k| &ei * &Scalar::q_pow(2 * k + 1, field) * &inv_lam).collect();
    let matrices = RepMatrices::from_entries(raise, weights, &Scalar::zero(field));
    Ok(Representation { family: Family::TLEpsNtilde, field, params: params(None, Some(big_n), Some(e as i8), None, None), matrices })
}

/// Subquotient of `V^Λ` on `span{v_start, …, v_{end−1}}`, valid when
/// `v_start` is singular (or `start = 0`) and `v_end` is singular.
pub fn verma_subquotient(hw: &HighestWeight, start: usize, end: usize) -> RepMatrices {
    let raise = (start + 1..end).map(|k| verma::raising_coefficient(k as u32, hw)).collect();
    let weights = (start..end).map(|k| verma::weight_at(k as u32, hw)).collect();
    RepMatrices::from_entries(raise, weights, hw.c())
}

/// `V^Λ` truncated to its first `dim` basis vectors.
pub fn truncated_verma(hw: &HighestWeight, dim: usize) -> RepMatrices {
    verma_subquotient(hw, 0, dim)
}

/// `L'_{n,N} = Ṽ′₀/Ṽ₁`, realised on `v_n, …, v_{N−1}` of the Verma module
/// whose weight has a singular vector at level `n`.
#[allow(non_snake_case)]
pub fn build_L_prime_n_N(n: u32, big_n: u32, c: Scalar) -> Result<RepMatrices, IrrepError> {
    let base = build_L_n_c_N(n, big_n, c.clone())?;
    let mu = base.expected_highest_weight()?;
    let hw = HighestWeight::new(mu, c, false)?;
    for level in [n, big_n] {
        if !verma::singular_coefficient(level, &hw)?.is_zero() {
            return Err(IrrepError::WeightInSpecialCase(format!("v_{level} is not singular")));
        }
    }
    Ok(verma_subquotient(&hw, n as usize, big_n as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;

    const G: FieldSpec = FieldSpec::Generic;

    fn s(text: &str, f: FieldSpec) -> Scalar {
        parse_scalar(text, f).unwrap()
    }

    #[test]
    fn lnc_examples() {
        let c = s("3", G);
        let one = build_L_n_c(1, c.clone()).unwrap();
        assert!(one.matrices.xp.is_zero() && one.matrices.xm.is_zero() && one.matrices.x0.is_zero());
        assert_eq!(one.c_value(), c);
        let two = build_L_n_c(2, c.clone()).unwrap();
        let q4 = Scalar::q_pow(2, G) + Scalar::q_pow(-2, G);
        assert_eq!(*two.matrices.x0.get(0, 0), (&c * &Scalar::q(G)).div(&q4).unwrap());
        assert_eq!(*two.matrices.x0.get(1, 1), -(&c * &Scalar::q_pow(-1, G)).div(&q4).unwrap());
        let k = (&c * &q_int(2, G)).div(&q4).unwrap();
        assert_eq!(*two.matrices.xp.get(0, 1), &k * &k);
        assert_eq!(build_L_n_c(2, s("0", G)).unwrap_err(), IrrepError::ZeroC);
        assert!(matches!(build_L_n_c(2, s("1", FieldSpec::RootOfUnity(5))), Err(IrrepError::Unsupported(_))));
    }

    #[test]
    fn lmu_examples() {
        let z = build_L_mu(s("0", G));
        assert!(z.matrices.x0.is_zero() && z.matrices.cm.is_zero());
        assert_eq!(build_L_mu(s("1", G)).c_value(), Scalar::lambda(G));
    }

    #[test]
    fn tl_n_eps_examples() {
        let two = build_TL_n_eps(2, 1, G).unwrap();
        assert!(two.matrices.xp.get(0, 1).is_one());
        assert_eq!(*two.matrices.x0.get(0, 0), Scalar::q(G).div(&q_int(2, G)).unwrap());
        for e in [1, -1] {
            let one = build_TL_n_eps(1, e, G).unwrap();
            assert!(one.matrices.x0.is_zero());
            assert_eq!(one.c_value(), Scalar::from_int(e as i64, G));
        }
        assert_eq!(build_TL_n_eps(3, 1, FieldSpec::RootOfUnity(5)).unwrap().family, Family::TLnEpsN);
        assert!(matches!(build_TL_n_eps(2, 1, FieldSpec::RootOfUnity(4)), Err(IrrepError::DivisionByZero(_))));
    }

    #[test]
    fn root_families() {
        let f3 = FieldSpec::RootOfUnity(3);
        let l = build_L_Lambda_N(3, s("1", f3), s("3", f3)).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(l.matrices.x0.get(0, 0).is_one());
        assert!(matches!(build_L_Lambda_N(3, s("0", f3), s("1", f3)), Err(IrrepError::WeightInSpecialCase(_))));
        let f2 = FieldSpec::RootOfUnity(2);
        assert!(matches!(build_L_Lambda_N(2, s("1", f2), s("3", f2)), Err(IrrepError::WeightInSpecialCase(_))));
        assert_eq!(build_TL_Lambda_N(3, s("1", f3), s("1", f3)).unwrap_err(), IrrepError::CrelViolation);

        let f4 = FieldSpec::RootOfUnity(4);
        let half = build_L_mu_Ntilde(4, s("3", f4)).unwrap();
        assert_eq!(*half.matrices.xp.get(0, 1), -(Scalar::lambda(f4) * q_int(2, f4) * Scalar::from_int(9, f4)));
        assert!(half.matrices.cm.is_zero());
        assert_eq!(*half.matrices.x0.get(1, 1), Scalar::q_pow(2, f4) * Scalar::from_int(3, f4));
        assert_eq!(build_L_mu_Ntilde(5, s("3", FieldSpec::RootOfUnity(5))).unwrap_err(), IrrepError::BadParity(5));
        assert_eq!(build_L_mu_Ntilde(4, s("0", f4)).unwrap_err(), IrrepError::ZeroMu);

        let t = build_TL_eps_Ntilde(4, 1).unwrap();
        let lam = Scalar::lambda(f4);
        assert_eq!(*t.matrices.xp.get(0, 1), (Scalar::q_pow(2, f4) * q_int(2, f4)).div(&lam).unwrap());
        assert_eq!(*t.matrices.x0.get(0, 0), *verma::rru_weight(1, 4).unwrap().mu());
        assert!(t.matrices.cm.is_zero());
        assert_eq!(build_TL_eps_Ntilde(3, 1).unwrap_err(), IrrepError::BadParity(3));

        let f6 = FieldSpec::RootOfUnity(6);
        assert!(matches!(build_L_n_c_N(3, 6, s("1", f6)), Err(IrrepError::DivisionByZero(_))));
        assert!(matches!(build_L_n_c_N(6, 6, s("1", f6)), Err(IrrepError::BadLevel(_))));
    }

    #[test]
    fn json_round_trip() {
        let rep = build_L_n_c(3, s("2+q^-1", G)).unwrap();
        let text = serde_json::to_string(&rep.to_json()).unwrap();
        let back = Representation::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, rep);
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
        let t = build_TL_eps_Ntilde(4, -1).unwrap();
        assert_eq!(Representation::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(t.rebuild().unwrap(), t);
    }
}
