//! The algebras B and F as a rewriting system on words in `X₋, X₀, C, X₊`.
//!
//! Words are rewritten to PBW monomials `X₋^a X₀^b C^d X₊^e` using
//!
//! ```text
//! X₊X₀ → q²X₀X₊ − qCX₊
//! X₀X₋ → q²X₋X₀ − qCX₋
//! X₊X₋ → X₋X₊ + [2]CX₀ − [2]λX₀²
//! CX₋ → X₋C,  CX₀ → X₀C,  X₊C → CX₊
//! ```
//!
//! and, in the restricted algebra F, additionally `CC → 1 + λ²/[2]·C₂` with
//! `C₂ = [2]X₀² + qX₋X₊ + q⁻¹X₊X₋`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::scalars::{q_int, FieldSpec, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("elements live in different algebras ({0:?}, restricted={1} vs {2:?}, restricted={3})")]
    FieldMismatch(FieldSpec, bool, FieldSpec, bool),
    #[error("the restricted algebra needs q + q^-1 invertible, which fails at N = 2")]
    RestrictionUndefined,
}

/// Generators in PBW order `X₋ < X₀ < C < X₊`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    Xm,
    X0,
    Cc,
    Xp,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::Xm, Generator::X0, Generator::Cc, Generator::Xp];

    pub fn symbol(self) -> &'static str {
        match self {
            Generator::Xm => "Xm",
            Generator::X0 => "X0",
            Generator::Cc => "C",
            Generator::Xp => "Xp",
        }
    }
}

/// `X₋^a X₀^b C^d X₊^e`
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub d: u32,
    pub e: u32,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial { a: 0, b: 0, d: 0, e: 0 };

    pub fn new(a: u32, b: u32, d: u32, e: u32) -> Self {
        Monomial { a, b, d, e }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.d + self.e
    }

    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (g, k) in Generator::ALL.iter().zip([self.a, self.b, self.d, self.e]) {
            w.extend(std::iter::repeat_n(*g, k as usize));
        }
        w
    }

    fn from_sorted_word(w: &[Generator]) -> Self {
        let mut m = Monomial::UNIT;
        for g in w {
            match g {
                Generator::Xm => m.a += 1,
                Generator::X0 => m.b += 1,
                Generator::Cc => m.d += 1,
                Generator::Xp => m.e += 1,
            }
        }
        m
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Generator::ALL
            .iter()
            .zip([self.a, self.b, self.d, self.e])
            .filter(|(_, k)| *k > 0)
            .map(|(g, k)| if k == 1 { g.symbol().to_string() } else { format!("{}^{}", g.symbol(), k) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Which redex the rewriter contracts first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    LeftmostFirst,
    RightmostFirst,
}

type Word = Vec<Generator>;
type Terms = BTreeMap<Monomial, Scalar>;
type Cache = HashMap<(Monomial, Generator), Rc<Terms>>;

struct Rewriter {
    restricted: bool,
    q: Scalar,
    q2: Scalar,
    two: Scalar,
    two_lambda: Scalar,
    // restricted C² rule coefficients: λ², qλ²/[2], q⁻¹λ²/[2]
    css: Option<[Scalar; 3]>,
}

impl Rewriter {
    fn new(field: FieldSpec, restricted: bool) -> Result<Self, AlgebraError> {
        let q = Scalar::q(field);
        let lam = Scalar::lambda(field);
        let two = q_int(2, field);
        let css = if restricted {
            let lam2 = &lam * &lam;
            let over_two = lam2.div(&two).map_err(|_| AlgebraError::RestrictionUndefined)?;
            Some([lam2, &over_two * &q, &over_two * &Scalar::q_pow(-1, field)])
        } else {
            None
        };
        Ok(Rewriter { restricted, q2: &q * &q, two_lambda: &two * &lam, q, two, css })
    }

    fn is_redex(&self, x: Generator, y: Generator) -> bool {
        x > y || (self.restricted && x == Generator::Cc && y == Generator::Cc)
    }

    /// Replacement for the pair `xy` as a list of `(coefficient, word)`.
    fn rule(&self, x: Generator, y: Generator) -> Vec<(Scalar, Word)> {
        use Generator::*;
        let one = || Scalar::one(self.q.field());
        match (x, y) {
            (X0, Xm) => vec![(self.q2.clone(), vec![Xm, X0]), (-&self.q, vec![Cc, Xm])],
            (Xp, X0) => vec![(self.q2.clone(), vec![X0, Xp]), (-&self.q, vec![Cc, Xp])],
            (Xp, Xm) => vec![
                (one(), vec![Xm, Xp]),
                (self.two.clone(), vec![Cc, X0]),
                (-&self.two_lambda, vec![X0, X0]),
            ],
            (Cc, Xm) => vec![(one(), vec![Xm, Cc])],
            (Cc, X0) => vec![(one(), vec![X0, Cc])],
            (Xp, Cc) => vec![(one(), vec![Cc, Xp])],
            (Cc, Cc) => {
                let [l2, a, b] = self.css.as_ref().expect("CC is only a redex when restricted");
                vec![
                    (one(), vec![]),
                    (l2.clone(), vec![X0, X0]),
                    (a.clone(), vec![Xm, Xp]),
                    (b.clone(), vec![Xp, Xm]),
                ]
            }
            _ => unreachable!("{x:?}{y:?} is not a redex"),
        }
    }

    /// Normal form by left-to-right multiplication with memoized
    /// `monomial · generator` products.
    fn fold(&self, input: Vec<(Scalar, Word)>) -> BTreeMap<Monomial, Scalar> {
        let mut cache = HashMap::new();
        let mut out = BTreeMap::new();
        for (c, w) in input {
            let t = self.apply_word(&mut cache, Monomial::UNIT, &w);
            for (m, x) in t.iter() {
                accumulate(&mut out, *m, x * &c);
            }
        }
        out
    }

    fn apply_word(&self, cache: &mut Cache, start: Monomial, word: &[Generator]) -> Rc<Terms> {
        let one = Scalar::one(self.q.field());
        let mut cur: Terms = BTreeMap::from([(start, one)]);
        for &g in word {
            let mut next = BTreeMap::new();
            for (m, c) in &cur {
                let t = self.mul_gen(cache, *m, g);
                for (m2, x) in t.iter() {
                    accumulate(&mut next, *m2, x * c);
                }
            }
            cur = next;
        }
        Rc::new(cur)
    }

    fn scaled_words(&self, cache: &mut Cache, start: Monomial, words: Vec<(Scalar, Word)>) -> Terms {
        let mut out = BTreeMap::new();
        for (rc, w) in words {
            let t = self.apply_word(cache, start, &w);
            for (m, x) in t.iter() {
                accumulate(&mut out, *m, x * &rc);
            }
        }
        out
    }

    fn mul_gen(&self, cache: &mut Cache, m: Monomial, g: Generator) -> Rc<Terms> {
        use Generator::*;
        if let Some(t) = cache.get(&(m, g)) {
            return t.clone();
        }
        let one = || Scalar::one(self.q.field());
        let single = |m: Monomial| BTreeMap::from([(m, one())]);
        let result: Terms = if m.e > 0 && g != Xp {
            // P X₊^e g = (P X₊^{e−1}) (X₊ g)
            let p = Monomial { e: m.e - 1, ..m };
            self.scaled_words(cache, p, self.rule(Xp, g))
        } else {
            match g {
                Xp => single(Monomial { e: m.e + 1, ..m }),
                X0 => single(Monomial { b: m.b + 1, ..m }),
                Cc if self.restricted && m.d >= 1 => {
                    let p = Monomial { d: m.d - 1, ..m };
                    self.scaled_words(cache, p, self.rule(Cc, Cc))
                }
                Cc => single(Monomial { d: m.d + 1, ..m }),
                Xm if m.d > 0 => {
                    // C is central: X₋^a X₀^b C^d X₋ = (X₋^a X₀^b X₋) C^d
                    let p = Monomial { d: 0, ..m };
                    let cs = vec![Cc; m.d as usize];
                    self.scaled_words(cache, p, vec![(one(), std::iter::once(Xm).chain(cs).collect())])
                }
                Xm if m.b > 0 => {
                    let p = Monomial { b: m.b - 1, ..m };
                    self.scaled_words(cache, p, self.rule(X0, Xm))
                }
                Xm => single(Monomial { a: m.a + 1, ..m }),
            }
        };
        let rc = Rc::new(result);
        cache.insert((m, g), rc.clone());
        rc
    }

    fn run(&self, input: Vec<(Scalar, Word)>, strategy: Strategy) -> BTreeMap<Monomial, Scalar> {
        let mut work: HashMap<Word, Scalar> = HashMap::new();
        let mut done: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (c, w) in input {
            accumulate(&mut work, w, c);
        }
        while let Some(w) = work.keys().next().cloned() {
            let c = work.remove(&w).unwrap();
            let mut positions = (0..w.len().saturating_sub(1)).filter(|&i| self.is_redex(w[i], w[i + 1]));
            let pos = match strategy {
                Strategy::LeftmostFirst => positions.next(),
                Strategy::RightmostFirst => positions.next_back(),
            };
            let Some(i) = pos else {
                accumulate(&mut done, Monomial::from_sorted_word(&w), c);
                continue;
            };
            for (rc, rep) in self.rule(w[i], w[i + 1]) {
                let mut nw = Vec::with_capacity(w.len() + rep.len());
                nw.extend_from_slice(&w[..i]);
                nw.extend_from_slice(&rep);
                nw.extend_from_slice(&w[i + 2..]);
                accumulate(&mut work, nw, &c * &rc);
            }
        }
        done
    }
}

fn accumulate<K: Ord + std::hash::Hash + Eq, M: MapLike<K>>(map: &mut M, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    map.add_into(k, c);
}

trait MapLike<K> {
    fn add_into(&mut self, k: K, c: Scalar);
}

impl<K: std::hash::Hash + Eq> MapLike<K> for HashMap<K, Scalar> {
    fn add_into(&mut self, k: K, c: Scalar) {
        match self.get_mut(&k) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.remove(&k);
                }
            }
            None => {
                self.insert(k, c);
            }
        }
    }
}

impl<K: Ord> MapLike<K> for BTreeMap<K, Scalar> {
    fn add_into(&mut self, k: K, c: Scalar) {
        match self.get_mut(&k) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.remove(&k);
                }
            }
            None => {
                self.insert(k, c);
            }
        }
    }
}

/// A finite linear combination of PBW monomials.
///
/// Coefficients are never zero, and in a restricted element every monomial
/// has C-degree at most one.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Scalar>,
    field: FieldSpec,
    restricted: bool,
}

impl AlgebraElement {
    pub fn zero(field: FieldSpec, restricted: bool) -> Self {
        AlgebraElement { terms: BTreeMap::new(), field, restricted }
    }

    pub fn one(field: FieldSpec, restricted: bool) -> Self {
        Self::scalar(Scalar::one(field), restricted)
    }

    pub fn scalar(c: Scalar, restricted: bool) -> Self {
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::UNIT, c);
        }
        AlgebraElement { terms, field, restricted }
    }

    pub fn generator(g: Generator, field: FieldSpec, restricted: bool) -> Self {
        normal_form(&[g], field, restricted).expect("generators are always normal")
    }

    /// The monomial with coefficient one, reduced if restricted.
    pub fn monomial(m: Monomial, field: FieldSpec, restricted: bool) -> Result<Self, AlgebraError> {
        normal_form(&m.word(), field, restricted)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_restricted(&self) -> bool {
        self.restricted
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.field != other.field || self.restricted != other.restricted {
            return Err(AlgebraError::FieldMismatch(self.field, self.restricted, other.field, other.restricted));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        Ok(AlgebraElement { terms, field: self.field, restricted: self.restricted })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.scale(&Scalar::from_int(-1, other.field)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(m, x)| (*m, x * c)).collect()
        };
        AlgebraElement { terms, field: self.field, restricted: self.restricted }
    }

    /// Product in normal form.
    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.multiply_by(other, None)
    }

    /// Product computed by the word rewriter under an explicit strategy.
    pub fn multiply_with(&self, other: &Self, strategy: Strategy) -> Result<Self, AlgebraError> {
        self.multiply_by(other, Some(strategy))
    }

    fn multiply_by(&self, other: &Self, strategy: Option<Strategy>) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let rw = Rewriter::new(self.field, self.restricted)?;
        let mut input = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut w = m1.word();
                w.extend(m2.word());
                input.push((c1 * c2, w));
            }
        }
        let terms = match strategy {
            Some(s) => rw.run(input, s),
            None => rw.fold(input),
        };
        Ok(AlgebraElement { terms, field: self.field, restricted: self.restricted })
    }

    pub fn pow(&self, k: u32) -> Result<Self, AlgebraError> {
        let mut acc = AlgebraElement::one(self.field, self.restricted);
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `xy − yx` in normal form.
    pub fn commutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!({"monomial": [m.a, m.b, m.d, m.e], "coeff": c.to_json()}))
                .collect(),
        )
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})·{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement[{}{}]({self})", self.field, if self.restricted { ", F" } else { "" })
    }
}

/// PBW normal form of a word.
pub fn normal_form(word: &[Generator], field: FieldSpec, restricted: bool) -> Result<AlgebraElement, AlgebraError> {
    let rw = Rewriter::new(field, restricted)?;
    let terms = rw.fold(vec![(Scalar::one(field), word.to_vec())]);
    Ok(AlgebraElement { terms, field, restricted })
}

/// PBW normal form by contracting one redex at a time, choosing the redex
/// by `strategy`. Agrees with [`normal_form`] on every word.

pub fn normal_form_with(
    word: &[Generator],
    field: FieldSpec,
    restricted: bool,
    strategy: Strategy,
) -> Result<AlgebraElement, AlgebraError> {
    let rw = Rewriter::new(field, restricted)?;
    let terms = rw.run(vec![(Scalar::one(field), word.to_vec())], strategy);
    Ok(AlgebraElement { terms, field, restricted })
}

/// `C₂ = (q+q⁻¹)X₀² + qX₋X₊ + q⁻¹X₊X₋` in normal form.
pub fn casimir2(field: FieldSpec, restricted: bool) -> Result<AlgebraElement, AlgebraError> {
    use Generator::*;
    let rw = Rewriter::new(field, restricted)?;
    let input = vec![
        (q_int(2, field), vec![X0, X0]),
        (Scalar::q(field), vec![Xm, Xp]),
        (Scalar::q_pow(-1, field), vec![Xp, Xm]),
    ];
    Ok(AlgebraElement { terms: rw.fold(input), field, restricted })
}

/// Image in the restricted algebra F: every `C²` is replaced by
/// `1 + λ²/[2]·C₂` and the result re-ordered.
pub fn restricted_reduce(x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
    let rw = Rewriter::new(x.field, true)?;
    let input = x.terms.iter().map(|(m, c)| (c.clone(), m.word())).collect();
    Ok(AlgebraElement { terms: rw.fold(input), field: x.field, restricted: true })
}

#[cfg(test)]
mod tests {
    use super::Generator::*;
    use super::*;

    const G: FieldSpec = FieldSpec::Generic;

    fn m(a: u32, b: u32, d: u32, e: u32) -> Monomial {
        Monomial::new(a, b, d, e)
    }

    fn elem(terms: &[(Monomial, Scalar)], field: FieldSpec, restricted: bool) -> AlgebraElement {
        let mut x = AlgebraElement::zero(field, restricted);
        for (mono, c) in terms {
            x = x.add(&AlgebraElement::monomial(*mono, field, restricted).unwrap().scale(c)).unwrap();
        }
        x
    }

    #[test]
    fn xp_x0() {
        let q = Scalar::q(G);
        let expect = elem(&[(m(0, 1, 0, 1), &q * &q), (m(0, 0, 1, 1), -&q)], G, false);
        assert_eq!(normal_form(&[Xp, X0], G, false).unwrap(), expect);
    }

    #[test]
    fn xp_xm() {
        let two = q_int(2, G);
        let expect = elem(
            &[(m(1, 0, 0, 1), Scalar::one(G)), (m(0, 1, 1, 0), two.clone()), (m(0, 2, 0, 0), -(&two * &Scalar::lambda(G)))],
            G,
            false,
        );
        assert_eq!(normal_form(&[Xp, Xm], G, false).unwrap(), expect);
    }

    #[test]
    fn c_is_already_ordered_before_xp() {
        assert_eq!(normal_form(&[Cc, Xp], G, false).unwrap(), AlgebraElement::monomial(m(0, 0, 1, 1), G, false).unwrap());
    }

    #[test]
    fn empty_word_is_unit() {
        assert_eq!(normal_form(&[], G, false).unwrap(), AlgebraElement::one(G, false));
        let x = AlgebraElement::generator(Xp, G, false);
        assert_eq!(AlgebraElement::one(G, false).multiply(&x).unwrap(), x);
    }

    #[test]
    fn x0_times_xm_powers() {
        let q = Scalar::q(G);
        let x0 = AlgebraElement::generator(X0, G, false);
        let xm = AlgebraElement::generator(Xm, G, false);
        let got = x0.multiply(&xm).unwrap();
        assert_eq!(got, elem(&[(m(1, 1, 0, 0), &q * &q), (m(1, 0, 1, 0), -&q)], G, false));
        let got2 = x0.multiply(&xm.pow(2).unwrap()).unwrap();
        let expect2 = elem(&[(m(2, 1, 0, 0), q.pow(4)), (m(2, 0, 1, 0), -(q.pow(2) * q_int(2, G)))], G, false);
        assert_eq!(got2, expect2);
    }

    #[test]
    fn commutator_with_c_vanishes() {
        let c = AlgebraElement::generator(Cc, G, false);
        let xm3 = AlgebraElement::monomial(m(3, 0, 0, 0), G, false).unwrap();
        assert!(c.commutator(&xm3).unwrap().is_zero());
    }

    #[test]
    fn casimir_pbw_form() {
        let two = q_int(2, G);
        let qi = Scalar::q_pow(-1, G);
        let lam = Scalar::lambda(G);
        // [2]X0² + [2]X₋X₊ + q⁻¹[2](X0C − λX0²)
        let expect = elem(
            &[
                (m(0, 2, 0, 0), &two - &(&(&qi * &two) * &lam)),
                (m(1, 0, 0, 1), two.clone()),
                (m(0, 1, 1, 0), &qi * &two),
            ],
            G,
            false,
        );
        assert_eq!(casimir2(G, false).unwrap(), expect);
    }

    #[test]
    fn restricted_c_squared() {
        let lam = Scalar::lambda(G);
        let coef = (&lam * &lam).div(&q_int(2, G)).unwrap();
        let c2 = casimir2(G, true).unwrap();
        let expect = AlgebraElement::one(G, true).add(&c2.scale(&coef)).unwrap();
        let got = normal_form(&[Cc, Cc], G, true).unwrap();
        assert_eq!(got, expect);
        let unrestricted = AlgebraElement::monomial(m(0, 0, 2, 0), G, false).unwrap();
        assert_eq!(restricted_reduce(&unrestricted).unwrap(), expect);
        let x0 = AlgebraElement::generator(X0, G, false);
        assert_eq!(restricted_reduce(&x0).unwrap(), AlgebraElement::generator(X0, G, true));
    }

    #[test]
    fn restricted_c_cubed() {
        let lam = Scalar::lambda(G);
        let coef = (&lam * &lam).div(&q_int(2, G)).unwrap();
        let c = AlgebraElement::generator(Cc, G, true);
        let c_c2 = c.multiply(&casimir2(G, true).unwrap()).unwrap();
        let expect = c.add(&c_c2.scale(&coef)).unwrap();
        let c3 = AlgebraElement::monomial(m(0, 0, 3, 0), G, false).unwrap();
        assert_eq!(restricted_reduce(&c3).unwrap(), expect);
        assert!(expect.terms().keys().all(|mono| mono.d <= 1));
    }

    #[test]
    fn restriction_undefined_at_n2() {
        let f = FieldSpec::RootOfUnity(2);
        assert_eq!(normal_form(&[Cc, Cc], f, true), Err(AlgebraError::RestrictionUndefined));
        assert!(normal_form(&[Cc, Cc], f, false).is_ok());
    }

    #[test]
    fn mismatch_is_reported() {
        let a = AlgebraElement::generator(Xp, G, false);
        let b = AlgebraElement::generator(Xp, G, true);
        assert!(matches!(a.multiply(&b), Err(AlgebraError::FieldMismatch(..))));
        let c = AlgebraElement::generator(Xp, FieldSpec::RootOfUnity(3), false);
        assert!(a.commutator(&c).is_err());
    }

    #[test]
    fn display_and_json() {
        let x = normal_form(&[Xp, X0], G, false).unwrap();
        assert_eq!(x.to_string(), "(-q)·C Xp + (q^2)·X0 Xp");
        let j = x.to_json();
        assert_eq!(j.as_array().unwrap().len(), 2);
        assert_eq!(j[0]["monomial"], json!([0, 0, 1, 1]));
    }
}
