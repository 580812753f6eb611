//! Scalar literals: `term (±term)*` with `term = coef["q"["^"int]]`,
//! e.g. `3/2`, `1+2q^-1`, `q-q^-1`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{parse_rational, FieldSpec, Scalar, ScalarError};

pub fn parse_scalar(input: &str, field: FieldSpec) -> Result<Scalar, ScalarError> {
    let err = |reason: &str| ScalarError::Parse { input: input.to_string(), reason: reason.to_string() };
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty literal"));
    }
    let bytes = s.as_bytes();
    let mut terms: BTreeMap<i64, BigRational> = BTreeMap::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigRational::one();
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if i > 0 {
            return Err(err("expected '+' or '-' between terms"));
        }
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
            i += 1;
        }
        let coef = if i > start { parse_rational(&s[start..i])? } else { BigRational::one() };
        let mut exp = 0i64;
        if i < bytes.len() && bytes[i] == b'q' {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                if i < bytes.len() && bytes[i] == b'-' {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[es..i].parse().map_err(|_| err("bad exponent"))?;
            }
        } else if i == start {
            return Err(err("expected a coefficient or 'q'"));
        }
        *terms.entry(exp).or_insert_with(BigRational::zero) += sign * coef;
    }
    Ok(Scalar::from_laurent_map(&terms, field))
}
