use std::fmt;

use super::{IrrepError, Matrix, Representation};
use crate::scalars::{q_int, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// First offending entry `(row, col, residual)`.
    Entry(usize, usize, Scalar),
    Message(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub failure: Option<Failure>,
}

impl Check {
    fn from_residual(name: &str, residual: &Matrix) -> Self {
        Check { name: name.to_string(), failure: residual.first_nonzero().map(|(i, j, s)| Failure::Entry(i, j, s.clone())) }
    }

    fn from_bool(name: &str, ok: bool, why: impl FnOnce() -> String) -> Self {
        Check { name: name.to_string(), failure: (!ok).then(|| Failure::Message(why())) }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: pass", self.name),
            Some(Failure::Entry(i, j, s)) => write!(f, "{}: FAIL at entry ({i},{j}), residual {s}", self.name),
            Some(Failure::Message(m)) => write!(f, "{}: FAIL ({m})", self.name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<Check>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Checks the four defining relations as exact matrix identities.
pub fn verify_relations(rep: &Representation) -> RelationReport {
    let m = &rep.matrices;
    let f = rep.field;
    let q = Scalar::q(f);
    let q2 = Scalar::q_pow(2, f);
    let qm1 = Scalar::q_pow(-1, f);
    let qm2 = Scalar::q_pow(-2, f);
    let lam = Scalar::lambda(f);

    // q²X₀X₊ − X₊X₀ − qCX₊
    let a = &(&(&m.x0 * &m.xp).scale(&q2) - &(&m.xp * &m.x0)) - &(&m.cm * &m.xp).scale(&q);
    // q⁻²X₀X₋ − X₋X₀ + q⁻¹CX₋
    let b = &(&(&m.x0 * &m.xm).scale(&qm2) - &(&m.xm * &m.x0)) + &(&m.cm * &m.xm).scale(&qm1);
    // [X₊,X₋] − [2](C − λX₀)X₀
    let inner = &m.cm - &m.x0.scale(&lam);
    let c = &m.xp.commutator(&m.xm) - &(&inner * &m.x0).scale(&q_int(2, f));
    let d = [&m.xp, &m.xm, &m.x0].into_iter().map(|x| m.cm.commutator(x)).find(|r| !r.is_zero());
    let d = d.unwrap_or_else(|| Matrix::zeros(rep.dim(), f));

    RelationReport {
        checks: vec![
            Check::from_residual("XC(a)", &a),
            Check::from_residual("XC(b)", &b),
            Check::from_residual("XC(c)", &c),
            Check::from_residual("XC(d)", &d),
        ],
    }
}

/// `[2]X₀² + qX₋X₊ + q⁻¹X₊X₋`
pub fn casimir_matrix(rep: &Representation) -> Matrix {
    let m = &rep.matrices;
    let f = rep.field;
    let x00 = (&m.x0 * &m.x0).scale(&q_int(2, f));
    let mp = (&m.xm * &m.xp).scale(&Scalar::q(f));
    let pm = (&m.xp * &m.xm).scale(&Scalar::q_pow(-1, f));
    &(&x00 + &mp) + &pm
}

pub fn casimir_eigenvalue(rep: &Representation) -> Result<Scalar, IrrepError> {
    casimir_matrix(rep).as_scalar().ok_or(IrrepError::NotScalar)
}

/// `C² − 1 − λ²/[2]·C₂` must vanish on representations of the restricted algebra.
pub fn css_check(rep: &Representation) -> Result<Check, IrrepError> {
    let f = rep.field;
    let lam = Scalar::lambda(f);
    let coef = (&lam * &lam).div(&q_int(2, f)).map_err(|_| {
        IrrepError::Unsupported("the restriction needs [2] invertible, which fails at N = 2".into())
    })?;
    let c = &rep.matrices.cm;
    let residual = &(&(c * c) - &Matrix::identity(rep.dim(), f)) - &casimir_matrix(rep).scale(&coef);
    Ok(Check::from_residual("css", &residual))
}

/// Relations plus structural checks: extremal vectors, scalar `C` and `C₂`,
/// the family's highest weight and dimension, agreement with a rebuild from
/// the stored parameters, and the restriction on restricted families.
pub fn full_report(rep: &Representation) -> RelationReport {
    let mut report = verify_relations(rep);
    let m = &rep.matrices;
    let dim = rep.dim();
    let checks = &mut report.checks;
    checks.push(Check::from_bool("dim", rep.expected_dim() == Some(dim), || {
        format!("dim {dim}, catalogue says {:?}", rep.expected_dim())
    }));
    checks.push(Check::from_bool("Xp w_0 = 0", (0..dim).all(|i| m.xp.get(i, 0).is_zero()), || "nonzero column 0".into()));
    checks.push(Check::from_bool("Xm w_last = 0", (0..dim).all(|i| m.xm.get(i, dim - 1).is_zero()), || {
        "nonzero last column".into()
    }));
    checks.push(Check::from_bool("C scalar", m.cm.as_scalar().is_some(), || "C is not a multiple of 1".into()));
    checks.push(Check::from_bool("C2 scalar", casimir_eigenvalue(rep).is_ok(), || "C₂ is not a multiple of 1".into()));
    checks.push(match rep.expected_highest_weight() {
        Ok(mu) => Check::from_bool("highest weight", *m.x0.get(0, 0) == mu, || format!("X0(0,0) ≠ {mu}")),
        Err(e) => Check::from_bool("highest weight", false, || e.to_string()),
    });
    checks.push(match rep.rebuild() {
        Ok(fresh) => Check::from_bool("params", fresh == *rep, || "matrices differ from a rebuild".into()),
        Err(e) => Check::from_bool("params", false, || e.to_string()),
    });
    if rep.is_restricted() {
        checks.push(css_check(rep).unwrap_or_else(|e| Check::from_bool("css", false, || e.to_string())));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreps::{build_L_mu, build_L_n_c, build_TL_n_eps};
    use crate::scalars::FieldSpec;

    const G: FieldSpec = FieldSpec::Generic;

    #[test]
    fn constructed_reps_pass() {
        let rep = build_L_n_c(4, Scalar::from_int(2, G)).unwrap();
        assert!(verify_relations(&rep).all_passed());
        let mu = build_L_mu(Scalar::from_int(1, G));
        assert!(verify_relations(&mu).all_passed());
    }

    #[test]
    fn corrupted_entry_is_reported() {
        let mut rep = build_L_n_c(3, Scalar::from_int(2, G)).unwrap();
        let bumped = rep.matrices.xp.get(0, 1) + &Scalar::one(G);
        rep.matrices.xp.set(0, 1, bumped);
        let report = verify_relations(&rep);
        assert!(!report.all_passed());
        assert!(report.failed().any(|c| c.name == "XC(c)"));
        let text = report.checks[2].to_string();
        assert!(text.starts_with("XC(c): FAIL at entry"), "{text}");
    }

    #[test]
    fn casimir_values() {
        let mu = Scalar::from_int(3, G);
        let rep = build_L_mu(mu.clone());
        assert_eq!(casimir_eigenvalue(&rep).unwrap(), q_int(2, G) * &mu * &mu);

        let t = build_TL_n_eps(3, -1, G).unwrap();
        let c = t.c_value();
        let lam = Scalar::lambda(G);
        let expect = ((&c * &c - Scalar::one(G)) * q_int(2, G)).div(&(&lam * &lam)).unwrap();
        assert_eq!(casimir_eigenvalue(&t).unwrap(), expect);
        assert!(css_check(&t).unwrap().passed());

        // Highest-weight route: [2]μ² + q⁻¹·(X₊X₋)₀₀.
        let l = build_L_n_c(2, Scalar::from_int(5, G)).unwrap();
        let mu0 = l.matrices.x0.get(0, 0);
        let hw_route = q_int(2, G) * mu0 * mu0 + Scalar::q_pow(-1, G) * l.matrices.xp.get(0, 1);
        assert_eq!(casimir_eigenvalue(&l).unwrap(), hw_route);
        assert!(!css_check(&l).unwrap().passed());
    }
}
