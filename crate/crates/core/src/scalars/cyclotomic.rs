//! The cyclotomic field `Q(ζ)` with `ζ = e^{iπ/N}` a primitive `2N`-th root
//! of unity, in the power basis `1, ζ, ..., ζ^{φ(2N)-1}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::poly::Poly;

pub struct CycloCtx {
    n: u32,
    modulus: Poly,
    /// `ζ^k` reduced, for `0 <= k < 2N`.
    powers: Vec<Vec<BigRational>>,
}

impl fmt::Debug for CycloCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", 2 * self.n)
    }
}

impl CycloCtx {
    /// Shared context for `q = e^{iπ/N}`.
    pub fn get(n: u32) -> Arc<CycloCtx> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloCtx>>>> = OnceLock::new();
        thread_local! {
            static LOCAL: std::cell::RefCell<HashMap<u32, Arc<CycloCtx>>> = Default::default();
        }
        LOCAL.with(|local| {
            local
                .borrow_mut()
                .entry(n)
                .or_insert_with(|| {
                    let cache = CACHE.get_or_init(Default::default);
                    let mut guard = cache.lock().unwrap();
                    guard.entry(n).or_insert_with(|| Arc::new(CycloCtx::build(n))).clone()
                })
                .clone()
        })
    }

    fn build(n: u32) -> CycloCtx {
        assert!(n >= 1);
        let modulus = cyclotomic_polynomial(2 * n as usize);
        let deg = modulus.degree().unwrap();
        let order = 2 * n as usize;
        let mut powers = Vec::with_capacity(order);
        for k in 0..order {
            let p = Poly::monomial(k, BigRational::from_integer(1.into())).div_rem(&modulus).1;
            let mut v = p.into_coeffs();
            v.resize(deg, BigRational::zero());
            powers.push(v);
        }
        CycloCtx { n, modulus, powers }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Degree of the field, `φ(2N)`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }
}

/// `Φ_m` computed from `x^m - 1 = Π_{d | m} Φ_d`.
pub fn cyclotomic_polynomial(m: usize) -> Poly {
    let one = BigRational::from_integer(1.into());
    let mut p = &Poly::monomial(m, one.clone()) - &Poly::constant(one);
    for d in (1..m).filter(|d| m % d == 0) {
        p = p.exact_div(&cyclotomic_polynomial(d));
    }
    p
}

#[derive(Clone)]
pub struct CycloElem {
    ctx: Arc<CycloCtx>,
    coords: Vec<BigRational>,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.coords == other.coords
    }
}

impl Eq for CycloElem {}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo{}{:?}", self.ctx.n, self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl CycloElem {
    pub fn zero(ctx: Arc<CycloCtx>) -> Self {
        let coords = vec![BigRational::zero(); ctx.degree()];
        CycloElem { ctx, coords }
    }

    pub fn from_rational(ctx: Arc<CycloCtx>, c: BigRational) -> Self {
        let mut e = Self::zero(ctx);
        e.coords[0] = c;
        e
    }

    /// `c * ζ^k` for any integer `k`.
    pub fn q_pow(ctx: Arc<CycloCtx>, k: i64, c: BigRational) -> Self {
        let order = 2 * ctx.n as i64;
        let idx = k.rem_euclid(order) as usize;
        let coords = ctx.powers[idx].iter().map(|x| x * &c).collect();
        CycloElem { ctx, coords }
    }

    /// Reduces an arbitrary coordinate vector (any length) modulo the
    /// cyclotomic polynomial.
    pub fn from_coords(ctx: Arc<CycloCtx>, raw: &[BigRational]) -> Self {
        let deg = ctx.degree();
        let order = 2 * ctx.n as usize;
        let mut coords = vec![BigRational::zero(); deg];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < deg {
                coords[k] += c;
            } else {
                for (dst, p) in coords.iter_mut().zip(&ctx.powers[k % order]) {
                    if !p.is_zero() {
                        *dst += c * p;
                    }
                }
            }
        }
        CycloElem { ctx, coords }
    }

    pub fn ctx(&self) -> &Arc<CycloCtx> {
        &self.ctx
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        CycloElem { ctx: self.ctx.clone(), coords }
    }

    pub fn neg(&self) -> Self {
        CycloElem { ctx: self.ctx.clone(), coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CycloElem { ctx: self.ctx.clone(), coords: self.coords.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let deg = self.ctx.degree();
        let mut raw = vec![BigRational::zero(); 2 * deg - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Self::from_coords(self.ctx.clone(), &raw)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p = Poly::from_coeffs(self.coords.clone());
        let inv = p.inverse_mod(&self.ctx.modulus)?;
        Some(Self::from_coords(self.ctx.clone(), inv.coeffs()))
    }

    pub fn eval(&self) -> Complex64 {
        let n = self.ctx.n as f64;
        self.coords
            .iter()
            .enumerate()
            .map(|(k, c)| {
                Complex64::from_polar(1.0, std::f64::consts::PI * k as f64 / n)
                    * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(4), Poly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), Poly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(10), Poly::from_i64s(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), Poly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_has_order_2n() {
        for n in 2..9 {
            let ctx = CycloCtx::get(n);
            let one = BigRational::from_integer(1.into());
            let z = CycloElem::q_pow(ctx.clone(), 1, one.clone());
            let mut acc = CycloElem::from_rational(ctx.clone(), one.clone());
            for _ in 0..n {
                acc = acc.mul(&z);
            }
            // ζ^N = -1
            assert_eq!(acc, CycloElem::from_rational(ctx.clone(), -one.clone()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let ctx = CycloCtx::get(5);
        let one = BigRational::from_integer(1.into());
        let a = CycloElem::q_pow(ctx.clone(), 1, one.clone())
            .add(&CycloElem::from_rational(ctx.clone(), BigRational::from_integer(3.into())));
        let prod = a.mul(&a.inv().unwrap());
        assert_eq!(prod, CycloElem::from_rational(ctx, one));
    }
}
