use std::ops::{Add, Mul, Sub};

use serde_json::Value;

use crate::scalars::{FieldSpec, Scalar, ScalarError};

/// Dense square matrix over a [`Scalar`] field, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    dim: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(dim: usize, field: FieldSpec) -> Self {
        Matrix { dim, field, entries: vec![Scalar::zero(field); dim * dim] }
    }

    pub fn identity(dim: usize, field: FieldSpec) -> Self {
        Self::diagonal(vec![Scalar::one(field); dim], field)
    }

    pub fn diagonal(diag: Vec<Scalar>, field: FieldSpec) -> Self {
        let mut m = Self::zeros(diag.len(), field);
        for (k, d) in diag.into_iter().enumerate() {
            m.set(k, k, d);
        }
        m
    }

    /// `entries[k−1]` placed at `(k−1, k)`.
    pub fn superdiagonal(entries: Vec<Scalar>, field: FieldSpec) -> Self {
        let mut m = Self::zeros(entries.len() + 1, field);
        for (j, e) in entries.into_iter().enumerate() {
            m.set(j, j + 1, e);
        }
        m
    }

    /// Unit shift `w_k ↦ w_{k+1}`.
    pub fn lowering_shift(dim: usize, field: FieldSpec) -> Self {
        let mut m = Self::zeros(dim, field);
        for k in 1..dim {
            m.set(k, k - 1, Scalar::one(field));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { dim: self.dim, field: self.field, entries: self.entries.iter().map(|e| e * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize, &Scalar)> {
        self.entries.iter().position(|e| !e.is_zero()).map(|p| (p / self.dim, p % self.dim, &self.entries[p]))
    }

    /// `Some(s)` when the matrix equals `s·1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.dim == 0 {
            return None;
        }
        let s = self.get(0, 0).clone();
        let ok = (0..self.dim).all(|i| {
            (0..self.dim).all(|j| if i == j { *self.get(i, j) == s } else { self.get(i, j).is_zero() })
        });
        ok.then_some(s)
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim.max(1))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.rows().map(|r| Value::Array(r.iter().map(Scalar::to_json).collect())).collect())
    }

    pub fn from_json(v: &Value, dim: usize, field: FieldSpec) -> Result<Self, ScalarError> {
        let bad = || ScalarError::Json(format!("expected a {dim}×{dim} matrix"));
        let rows = v.as_array().filter(|r| r.len() == dim).ok_or_else(bad)?;
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            let row = row.as_array().filter(|r| r.len() == dim).ok_or_else(bad)?;
            for e in row {
                entries.push(Scalar::from_json(e, field)?);
            }
        }
        Ok(Matrix { dim, field, entries })
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut out = Matrix::zeros(n, self.field);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = &out.entries[i * n + j] + &(a * b);
                        out.entries[i * n + j] = cur;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        Matrix {
            dim: self.dim,
            field: self.field,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        Matrix {
            dim: self.dim,
            field: self.field,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}
