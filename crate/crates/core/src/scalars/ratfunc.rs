//! Rational functions in `q` over the rationals, stored as a power of `q`
//! times a reduced fraction of ordinary polynomials.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;

/// `q^shift * num(q) / den(q)`.
///
/// Canonical form: `num` and `den` are coprime, neither is divisible by `q`,
/// and `den(0) = 1`. Zero is `shift = 0, num = 0, den = 1`. With this
/// normalization structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    shift: i64,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { shift: 0, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { shift: 0, num: Poly::constant(c), den: Poly::one() }
    }

    /// `c * q^k`
    pub fn q_pow(k: i64, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { shift: k, num: Poly::constant(c), den: Poly::one() }
    }

    /// `q^shift * p(q)`
    pub fn from_laurent(shift: i64, p: Poly) -> Self {
        Self::normalize(shift, p, Poly::one())
    }

    /// Builds from `{exponent: coefficient}` maps for numerator and
    /// denominator Laurent polynomials.
    pub fn from_laurent_maps(
        num: &BTreeMap<i64, BigRational>,
        den: &BTreeMap<i64, BigRational>,
    ) -> Option<Self> {
        let (ns, np) = laurent_from_map(num);
        let (ds, dp) = laurent_from_map(den);
        if dp.is_zero() {
            return None;
        }
        Some(Self::normalize(ns - ds, np, dp))
    }

    fn normalize(mut shift: i64, num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let vn = num.valuation().unwrap();
        let vd = den.valuation().unwrap();
        shift += vn as i64 - vd as i64;
        let mut num = num.shift_down(vn);
        let mut den = den.shift_down(vd);
        if !den.is_constant() {
            let g = num.gcd(&den);
            if !g.is_constant() {
                num = num.exact_div(&g);
                den = den.exact_div(&g);
            }
        }
        let c0 = den.coeff(0);
        if !c0.is_one() {
            let inv = c0.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.den.is_constant() && self.num == Poly::one()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// True when this is a Laurent polynomial (trivial denominator).
    pub fn is_laurent(&self) -> bool {
        self.den.is_constant()
    }

    /// Numerator Laurent polynomial as `{exponent: coefficient}`.
    pub fn numerator_map(&self) -> BTreeMap<i64, BigRational> {
        poly_to_map(self.shift, &self.num)
    }

    pub fn denominator_map(&self) -> BTreeMap<i64, BigRational> {
        poly_to_map(0, &self.den)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(rhs.shift);
        let a = self.num.shift_up((self.shift - s) as usize);
        let b = rhs.num.shift_up((rhs.shift - s) as usize);
        if self.den == rhs.den {
            return Self::normalize(s, &a + &b, self.den.clone());
        }
        let num = &(&a * &rhs.den) + &(&b * &self.den);
        Self::normalize(s, num, &self.den * &rhs.den)
    }

    pub fn neg(&self) -> Self {
        RatFunc { shift: self.shift, num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (mut n1, mut d2) = (self.num.clone(), rhs.den.clone());
        let (mut n2, mut d1) = (rhs.num.clone(), self.den.clone());
        cancel(&mut n1, &mut d2);
        cancel(&mut n2, &mut d1);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let c0 = den.coeff(0);
        let (num, den) = if c0.is_one() {
            (num, den)
        } else {
            let inv = c0.recip();
            (num.scale(&inv), den.scale(&inv))
        };
        RatFunc { shift: self.shift + rhs.shift, num, den }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { shift: self.shift, num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(-self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn eval(&self, q: Complex64) -> (Complex64, Complex64, f64) {
        let n = self.num.eval_complex(q) * q.powi(self.shift as i32);
        let d = self.den.eval_complex(q);
        (n, d, self.den.abs_scale(q.norm()))
    }
}

fn cancel(n: &mut Poly, d: &mut Poly) {
    if d.is_constant() || n.is_constant() {
        return;
    }
    let g = n.gcd(d);
    if !g.is_constant() {
        *n = n.exact_div(&g);
        *d = d.exact_div(&g);
    }
}

fn laurent_from_map(m: &BTreeMap<i64, BigRational>) -> (i64, Poly) {
    let Some((&lo, _)) = m.iter().find(|(_, c)| !c.is_zero()) else {
        return (0, Poly::zero());
    };
    let hi = *m.keys().next_back().unwrap();
    let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
    for (&e, c) in m.range(lo..) {
        coeffs[(e - lo) as usize] += c;
    }
    (lo, Poly::from_coeffs(coeffs))
}

fn poly_to_map(shift: i64, p: &Poly) -> BTreeMap<i64, BigRational> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (shift + i as i64, c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(k: i64) -> BigRational {
        BigRational::from_integer(k.into())
    }

    #[test]
    fn lambda_inverse() {
        // q - q^-1
        let lam = RatFunc::q_pow(1, int(1)).add(&RatFunc::q_pow(-1, int(-1)));
        assert!(lam.mul(&lam.inv().unwrap()).is_one());
    }

    #[test]
    fn normalization_is_canonical() {
        // (q^2 - 1)/(2q - 2) == (q + 1)/2
        let a = RatFunc::normalize(0, Poly::from_i64s(&[-1, 0, 1]), Poly::from_i64s(&[-2, 2]));
        let b = RatFunc::normalize(0, Poly::from_i64s(&[1, 1]), Poly::from_i64s(&[2]));
        assert_eq!(a, b);
        assert_eq!(a.denominator(), &Poly::one());
    }

    #[test]
    fn shifts_combine() {
        let a = RatFunc::normalize(3, Poly::from_i64s(&[0, 0, 5]), Poly::from_i64s(&[0, 1, 1]));
        assert_eq!(a.shift(), 4);
        assert_eq!(a.denominator(), &Poly::from_i64s(&[1, 1]));
    }
}
