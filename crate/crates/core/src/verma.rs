//! Verma modules `V^Λ` with basis `v_k = X₋^k ⊗ v₀`: the generator actions,
//! singular vectors and the reducibility classification for generic `q`
//! and `q = e^{iπ/N}`.

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{AlgebraElement, Generator};
use crate::scalars::{q_int, FieldSpec, Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VermaError {
    #[error("weights (mu, c) must lie in the field {0}")]
    FieldMismatch(FieldSpec),
    #[error("restricted weight violates c² = 1 + λ²(μ²/q² + cμ/q)")]
    CrelViolation,
    #[error("search bound must be at least 1")]
    BadBound,
    #[error("level n must be at least 1")]
    BadLevel,
    #[error("[2n]_q vanishes at n = {0}; see the half-periodic family")]
    DegenerateLevel(u32),
    #[error("N = {0} is odd; this family needs N even")]
    BadParity(u32),
    #[error("this operation needs q = e^(iπ/N)")]
    NeedsRootOfUnity,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `(μ, c) = (Λ(X₀), Λ(C))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HighestWeight {
    mu: Scalar,
    c: Scalar,
    field: FieldSpec,
    restricted: bool,
}

impl HighestWeight {
    pub fn new(mu: Scalar, c: Scalar, restricted: bool) -> Result<Self, VermaError> {
        let field = mu.field();
        if c.field() != field {
            return Err(VermaError::FieldMismatch(field));
        }
        if restricted && !crel_holds(&mu, &c) {
            return Err(VermaError::CrelViolation);
        }
        Ok(HighestWeight { mu, c, field, restricted })
    }

    pub fn mu(&self) -> &Scalar {
        &self.mu
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_restricted(&self) -> bool {
        self.restricted
    }

    /// `c = λμ`
    pub fn is_case_b(&self) -> bool {
        self.c == &Scalar::lambda(self.field) * &self.mu
    }

    /// `μ[2n] = q[n][n−1]c` with `[2n] ≠ 0` and `c ≠ 0`.
    pub fn is_case_a(&self, n: u32) -> bool {
        let f = self.field;
        let n = n as i64;
        let two_n = q_int(2 * n, f);
        !two_n.is_zero()
            && !self.c.is_zero()
            && &self.mu * &two_n == Scalar::q(f) * q_int(n, f) * q_int(n - 1, f) * &self.c
    }
}

/// `c² = 1 + λ²(μ²/q² + cμ/q)`
pub fn crel_holds(mu: &Scalar, c: &Scalar) -> bool {
    let f = mu.field();
    let lam = Scalar::lambda(f);
    let rhs = Scalar::one(f) + &lam * &lam * (mu * mu * Scalar::q_pow(-2, f) + c * mu * Scalar::q_pow(-1, f));
    c * c == rhs
}

/// `X₀` eigenvalue on `v_k`: `q^{2k}μ − q^k[k]c`.
pub fn weight_at(k: u32, hw: &HighestWeight) -> Scalar {
    let f = hw.field;
    Scalar::q_pow(2 * k as i64, f) * &hw.mu - Scalar::q_pow(k as i64, f) * q_int(k as i64, f) * &hw.c
}

/// Coefficient of `X₊ v_k = A_k v_{k−1}`:
/// `A_k = q^{2k−2}(c − λμ)([2k]μ − q[k][k−1]c)`.
pub fn raising_coefficient(k: u32, hw: &HighestWeight) -> Scalar {
    let f = hw.field;
    let k = k as i64;
    let c_minus = &hw.c - &(Scalar::lambda(f) * &hw.mu);
    let bracket = q_int(2 * k, f) * &hw.mu - Scalar::q(f) * q_int(k, f) * q_int(k - 1, f) * &hw.c;
    Scalar::q_pow(2 * k - 2, f) * c_minus * bracket
}

/// Image of `v_k` under a generator as `(index, coefficient)` pairs.
pub fn verma_action(g: Generator, k: u32, hw: &HighestWeight) -> Vec<(u32, Scalar)> {
    match g {
        Generator::Xp if k == 0 => vec![],
        Generator::Xp => vec![(k - 1, raising_coefficient(k, hw))],
        Generator::Xm => vec![(k + 1, Scalar::one(hw.field))],
        Generator::X0 => vec![(k, weight_at(k, hw))],
        Generator::Cc => vec![(k, hw.c.clone())],
    }
}

/// Applies a normal-ordered algebra element to `v₀`.
pub fn apply_to_highest_weight(x: &AlgebraElement, hw: &HighestWeight) -> Vec<(u32, Scalar)> {
    let mut out: std::collections::BTreeMap<u32, Scalar> = Default::default();
    for (m, coef) in x.terms() {
        if m.e > 0 {
            continue;
        }
        let v = coef * &hw.mu.pow(m.b) * &hw.c.pow(m.d);
        let slot = out.entry(m.a).or_insert_with(|| Scalar::zero(hw.field));
        *slot = &*slot + &v;
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `X₊ X₋^n v₀ = s_n X₋^{n−1} v₀`; `X₋^n v₀` is singular iff `s_n = 0`.
pub fn singular_coefficient(n: u32, hw: &HighestWeight) -> Result<Scalar, VermaError> {
    if n == 0 {
        return Err(VermaError::BadLevel);
    }
    Ok(raising_coefficient(n, hw))
}

/// `μ' = q^{2n}μ − q^n[n]c`, the weight of `X₋^n v₀`.
pub fn mu_prime(n: u32, hw: &HighestWeight) -> Result<Scalar, VermaError> {
    if n == 0 {
        return Err(VermaError::BadLevel);
    }
    Ok(weight_at(n, hw))
}

/// A restricted highest weight compatible with a singular vector at level
/// `n`, together with the shifted weight `μ' = −εq[n+1]/[2]`.
#[derive(Clone, Debug)]
pub struct RestrictedWeight {
    pub hw: HighestWeight,
    pub mu_prime: Scalar,
}

/// `c = ε[2n]/([2][n])`, `μ = εq[n−1]/[2]`.
pub fn restricted_weights(n: u32, eps: i8, field: FieldSpec) -> Result<RestrictedWeight, VermaError> {
    if n == 0 {
        return Err(VermaError::BadLevel);
    }
    let e = Scalar::from_int(eps_sign(eps), field);
    let n_i = n as i64;
    let two = q_int(2, field);
    let two_n = q_int(2 * n_i, field);
    let c = (&e * &two_n).div(&(&two * &q_int(n_i, field)))?;
    if two_n.is_zero() {
        return Err(VermaError::DegenerateLevel(n));
    }
    let mu = (&e * &Scalar::q(field) * q_int(n_i - 1, field)).div(&two)?;
    let mu_prime = -(&e * &Scalar::q(field) * q_int(n_i + 1, field)).div(&two)?;
    Ok(RestrictedWeight { hw: HighestWeight::new(mu, c, true)?, mu_prime })
}

/// `i ∈ Q(ζ_{2N})` for even `N`: `ζ^{N/2} = e^{iπ/2}`.
pub fn imaginary_unit(n: u32) -> Result<Scalar, VermaError> {
    if n % 2 != 0 {
        return Err(VermaError::BadParity(n));
    }
    Ok(Scalar::q_pow(n as i64 / 2, FieldSpec::root_of_unity(n)?))
}

/// Restricted weight with `c = 0` at even `N`: `μ = εiq/λ`.
pub fn rru_weight(eps: i8, n: u32) -> Result<HighestWeight, VermaError> {
    let i = imaginary_unit(n)?;
    let f = i.field();
    let mu = (Scalar::from_int(eps_sign(eps), f) * i * Scalar::q(f)).div(&Scalar::lambda(f))?;
    HighestWeight::new(mu, Scalar::zero(f), true)
}

pub(crate) fn eps_sign(eps: i8) -> i64 {
    if eps < 0 {
        -1
    } else {
        1
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightClass {
    GenericIrreducible,
    ReducibleA(u32),
    ReducibleB,
    RootGeneric,
    RootA(u32),
    RootB,
    RootHalf,
}

impl fmt::Display for WeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightClass::ReducibleA(n) => write!(f, "ReducibleA({n})"),
            WeightClass::RootA(n) => write!(f, "RootA({n})"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LevelKind {
    CaseA,
    CaseB,
    Periodic(u32),
    HalfPeriodic(u32),
}

impl fmt::Display for LevelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelKind::Periodic(p) => write!(f, "Periodic({p})"),
            LevelKind::HalfPeriodic(p) => write!(f, "HalfPeriodic({p})"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularLevel {
    pub n: u32,
    pub kind: LevelKind,
    pub mu_prime: Scalar,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub class: WeightClass,
    pub levels: Vec<SingularLevel>,
    pub embedding_chain: Option<String>,
}

impl Classification {
    pub fn level_numbers(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.n).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "class": self.class.to_string(),
            "singular_levels": self.levels.iter().map(|l| json!({
                "n": l.n,
                "kind": l.kind.to_string(),
                "mu_prime": l.mu_prime.to_json(),
            })).collect::<Vec<_>>(),
            "embedding_chain": self.embedding_chain,
        })
    }
}

/// Decides which reducibility case `hw` falls in and lists the singular
/// levels `1..=bound` predicted by that case.
///
/// Root-of-unity levels are predicted from the residue `n mod N`; callers
/// can cross-check them against [`singular_coefficient`].
pub fn classify_weight(hw: &HighestWeight, bound: u32) -> Result<Classification, VermaError> {
    if bound == 0 {
        return Err(VermaError::BadBound);
    }
    let level = |n: u32, kind: LevelKind| -> SingularLevel {
        SingularLevel { n, kind, mu_prime: weight_at(n, hw) }
    };
    let all_b = || (1..=bound).map(|n| level(n, LevelKind::CaseB)).collect::<Vec<_>>();
    let Some(big_n) = hw.field.order() else {
        if hw.is_case_b() {
            return Ok(Classification {
                class: WeightClass::ReducibleB,
                levels: all_b(),
                embedding_chain: Some("V_0 ⊃ V_1 ⊃ V_2 ⊃ … (V_n = span{v_k : k ≥ n}, all isomorphic)".into()),
            });
        }
        let levels: Vec<_> = (1..=bound).filter(|&n| hw.is_case_a(n)).map(|n| level(n, LevelKind::CaseA)).collect();
        return Ok(match levels.first().map(|l| l.n) {
            Some(n) => Classification {
                class: WeightClass::ReducibleA(n),
                levels,
                embedding_chain: Some(format!("V^Λ ⊃ V^Λ′ = ⟨X₋^{n} v₀⟩")),
            },
            None => Classification { class: WeightClass::GenericIrreducible, levels: vec![], embedding_chain: None },
        });
    };

    if hw.is_case_b() {
        return Ok(Classification {
            class: WeightClass::RootB,
            levels: all_b(),
            embedding_chain: Some("V_0 ⊃ V_1 ⊃ V_2 ⊃ … (every v_k singular)".into()),
        });
    }
    let even = big_n % 2 == 0;
    let half = big_n / 2;
    let admissible = |r: u32| !(even && r == half) && hw.is_case_a(r);
    let root_a = (1..big_n).find(|&r| admissible(r));
    let class = match root_a {
        Some(n) => WeightClass::RootA(n),
        None if even && hw.c.is_zero() => WeightClass::RootHalf,
        None => WeightClass::RootGeneric,
    };
    // [Ñ−1] = 0 at N = 2, so v_Ñ is singular for every weight there.
    let half_singular = even && (hw.c.is_zero() || big_n == 2);
    let mut levels = Vec::new();
    for n in 1..=bound {
        let r = n % big_n;
        let kind = if half_singular && n % half == 0 {
            Some(LevelKind::HalfPeriodic(n / half))
        } else if r == 0 {
            Some(LevelKind::Periodic(n / big_n))
        } else if admissible(r) {
            Some(LevelKind::CaseA)
        } else {
            None
        };
        if let Some(kind) = kind {
            levels.push(level(n, kind));
        }
    }
    let embedding_chain = Some(match class {
        WeightClass::RootA(n) => format!(
            "V^Λ ≡ Ṽ₀ ⊃ Ṽ′₀ ⊃ Ṽ₁ ⊃ Ṽ′₁ ⊃ … (Ṽ_p = ⟨X₋^{{{p}}} v₀⟩, Ṽ′_p = ⟨X₋^{{{n}+{p}}} v₀⟩)",
            p = format!("{big_n}p")
        ),
        WeightClass::RootHalf => format!("V^Λ ≡ V̂₀ ⊃ V̂₁ ⊃ V̂₂ ⊃ … (V̂_p = ⟨X₋^{{{half}p}} v₀⟩)"),
        _ => format!("V^Λ ≡ Ṽ₀ ⊃ Ṽ₁ ⊃ Ṽ₂ ⊃ … (Ṽ_p = ⟨X₋^{{{big_n}p}} v₀⟩)"),
    });
    Ok(Classification { class, levels, embedding_chain })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;

    const G: FieldSpec = FieldSpec::Generic;

    fn s(text: &str, f: FieldSpec) -> Scalar {
        parse_scalar(text, f).unwrap()
    }

    fn hw(mu: &str, c: &str, f: FieldSpec) -> HighestWeight {
        HighestWeight::new(s(mu, f), s(c, f), false).unwrap()
    }

    #[test]
    fn action_examples() {
        let w = hw("2", "3", G);
        let lam = Scalar::lambda(G);
        let expect = (w.c() - &(&lam * w.mu())) * q_int(2, G) * w.mu();
        assert_eq!(verma_action(Generator::Xp, 1, &w), vec![(0, expect)]);
        assert!(verma_action(Generator::Xp, 0, &w).is_empty());
        let x0 = Scalar::q_pow(4, G) * w.mu() - Scalar::q_pow(2, G) * q_int(2, G) * w.c();
        assert_eq!(verma_action(Generator::X0, 2, &w), vec![(2, x0)]);
        assert_eq!(verma_action(Generator::Xm, 5, &w), vec![(6, Scalar::one(G))]);
        assert_eq!(verma_action(Generator::Cc, 5, &w), vec![(5, w.c().clone())]);
    }

    #[test]
    fn singular_coefficient_vanishing() {
        let f = G;
        let mu = s("5", f);
        let b = HighestWeight::new(mu.clone(), Scalar::lambda(f) * &mu, false).unwrap();
        for n in 1..6 {
            assert!(singular_coefficient(n, &b).unwrap().is_zero());
        }
        let c = s("2", f);
        let n = 3i64;
        let mu_a = (Scalar::q(f) * q_int(n, f) * q_int(n - 1, f) * &c).div(&q_int(2 * n, f)).unwrap();
        let a = HighestWeight::new(mu_a, c, false).unwrap();
        assert!(singular_coefficient(3, &a).unwrap().is_zero());
        assert!(!singular_coefficient(2, &a).unwrap().is_zero());
        let r = hw("1", "3", FieldSpec::RootOfUnity(3));
        assert!(singular_coefficient(3, &r).unwrap().is_zero());
        assert_eq!(singular_coefficient(0, &r), Err(VermaError::BadLevel));
    }

    #[test]
    fn mu_prime_examples() {
        let w = hw("2", "3", G);
        assert_eq!(mu_prime(1, &w).unwrap(), Scalar::q_pow(2, G) * w.mu() - Scalar::q(G) * w.c());
        let mu = s("7/2", G);
        let b = HighestWeight::new(mu.clone(), Scalar::lambda(G) * &mu, false).unwrap();
        assert_eq!(mu_prime(4, &b).unwrap(), mu);
        let f = FieldSpec::RootOfUnity(5);
        let r = hw("1+q", "2", f);
        assert_eq!(mu_prime(5, &r).unwrap(), *r.mu());
        assert_eq!(mu_prime(10, &r).unwrap(), *r.mu());
    }

    #[test]
    fn classification_examples() {
        let a = classify_weight(&hw("0", "1", G), 10).unwrap();
        assert_eq!(a.class, WeightClass::ReducibleA(1));
        assert_eq!(a.level_numbers(), vec![1]);
        let mu = s("5", G);
        let b = HighestWeight::new(mu.clone(), Scalar::lambda(G) * &mu, false).unwrap();
        assert_eq!(classify_weight(&b, 4).unwrap().class, WeightClass::ReducibleB);
        let zero = classify_weight(&hw("0", "0", G), 3).unwrap();
        assert_eq!(zero.class, WeightClass::ReducibleB);
        assert_eq!(classify_weight(&hw("1", "1", G), 10).unwrap().class, WeightClass::GenericIrreducible);
        let half = classify_weight(&hw("3", "0", FieldSpec::RootOfUnity(4)), 8).unwrap();
        assert_eq!(half.class, WeightClass::RootHalf);
        assert_eq!(half.level_numbers(), vec![2, 4, 6, 8]);
        assert_eq!(half.levels[0].kind, LevelKind::HalfPeriodic(1));
        let gen = classify_weight(&hw("1", "3", FieldSpec::RootOfUnity(3)), 7).unwrap();
        assert_eq!(gen.class, WeightClass::RootGeneric);
        assert_eq!(gen.level_numbers(), vec![3, 6]);
        assert_eq!(classify_weight(&hw("1", "3", G), 0).unwrap_err(), VermaError::BadBound);
    }

    #[test]
    fn crel_examples() {
        assert!(crel_holds(&s("0", G), &s("1", G)));
        assert!(crel_holds(&s("0", G), &s("-1", G)));
        assert!(!crel_holds(&s("1", G), &s("1", G)));
        let rw = restricted_weights(2, 1, G).unwrap();
        assert!(crel_holds(rw.hw.mu(), rw.hw.c()));
    }

    #[test]
    fn restricted_weight_values() {
        let one = restricted_weights(1, 1, G).unwrap();
        assert!(one.hw.c().is_one());
        assert!(one.hw.mu().is_zero());
        let two = restricted_weights(2, -1, G).unwrap();
        let q2 = q_int(2, G);
        assert_eq!(*two.hw.c(), -(Scalar::q_pow(2, G) + Scalar::q_pow(-2, G)).div(&q2).unwrap());
        assert_eq!(*two.hw.mu(), -Scalar::q(G).div(&q2).unwrap());
        let f = FieldSpec::RootOfUnity(5);
        let r = restricted_weights(2, 1, f).unwrap();
        assert!(crel_holds(r.hw.mu(), r.hw.c()));
        assert_eq!(restricted_weights(2, 1, FieldSpec::RootOfUnity(4)).unwrap_err(), VermaError::DegenerateLevel(2));
        assert!(matches!(
            restricted_weights(3, 1, FieldSpec::RootOfUnity(3)),
            Err(VermaError::Scalar(ScalarError::DivisionByZero))
        ));
    }

    #[test]
    fn rru_weight_squares_to_minus_q2_over_lambda2() {
        for n in [2, 4, 6, 8] {
            let f = FieldSpec::RootOfUnity(n);
            let w = rru_weight(1, n).unwrap();
            let lam = Scalar::lambda(f);
            let rhs = (Scalar::q_pow(2, f)).div(&(&lam * &lam)).unwrap();
            assert!((w.mu() * w.mu() + rhs).is_zero());
            assert!(crel_holds(w.mu(), w.c()));
            assert_ne!(rru_weight(-1, n).unwrap(), w);
            let i = imaginary_unit(n).unwrap();
            assert!((&i * &i + Scalar::one(f)).is_zero());
            assert!(i.evaluate_at(0.0).unwrap().im > 0.0);
        }
        assert_eq!(rru_weight(1, 5).unwrap_err(), VermaError::BadParity(5));
    }

    #[test]
    fn restricted_highest_weight_checks_crel() {
        assert_eq!(HighestWeight::new(s("1", G), s("1", G), true).unwrap_err(), VermaError::CrelViolation);
        assert!(HighestWeight::new(s("0", G), s("-1", G), true).is_ok());
        assert!(HighestWeight::new(s("0", G), s("1", FieldSpec::RootOfUnity(3)), false).is_err());
    }
}
