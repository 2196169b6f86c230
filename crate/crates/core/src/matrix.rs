use std::fmt;

use crate::error::Error;
use crate::rational::Rational;
use crate::vector::RVector;

/// A dense row-major matrix of exact rationals. Zero rows or columns are
/// legal; they show up naturally as empty constraint systems and empty
/// generator sets.
#[derive(Clone, PartialEq, Eq)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "matrix data length {} does not match {rows}x{cols}",
                data.len()
            )));
        }
        Ok(RMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    /// Builds from row vectors; `cols` disambiguates the empty case.
    pub fn from_rows(cols: usize, rows: &[RVector]) -> Result<Self, Error> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::dims(cols, r.len()));
            }
            data.extend(r.iter().cloned());
        }
        RMatrix::new(rows.len(), cols, data)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vecs: Vec<RVector> = rows.iter().map(|r| RVector::from_ints(r)).collect();
        Self::from_rows(cols, &vecs).expect("uniform literal rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row_slice(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> RVector {
        RVector::new(self.row_slice(i).to_vec())
    }

    pub fn col_vec(&self, j: usize) -> RVector {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<RVector> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> RMatrix {
        let mut out = RMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    /// Exact matrix product; errors when the inner dimensions disagree.
    pub fn mat_mul(&self, rhs: &RMatrix) -> Result<RMatrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::dims(self.cols, rhs.rows));
        }
        let mut out = RMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * rhs.at(k, j);
                    *out.at_mut(i, j) += &prod;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mat_vec(&self, x: &RVector) -> Result<RVector, Error> {
        if self.cols != x.len() {
            return Err(Error::dims(self.cols, x.len()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row_slice(i).iter().zip(x.iter()) {
                    acc += &(a * b);
                }
                acc
            })
            .collect())
    }

    pub fn neg(&self) -> RMatrix {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| -e).collect(),
        }
    }

    pub fn add(&self, other: &RMatrix) -> Result<RMatrix, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dims(self.rows * self.cols, other.rows * other.cols));
        }
        Ok(RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row_vec(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn identity_times_matrix_is_matrix() {
        let m = RMatrix::from_int_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(RMatrix::identity(3).mat_mul(&m).unwrap(), m);
    }

    #[test]
    fn map_applied_to_lifted_vertex() {
        // The 3x4 map sending (w, x) to (4w, 5w, 3w), applied at w = 2.
        let a = RMatrix::from_int_rows(&[&[4, 0, 0, 0], &[5, 0, 0, 0], &[3, 0, 0, 0]]);
        let p = RVector::from_ints(&[2, 0, 0, 0]);
        assert_eq!(a.mat_vec(&p).unwrap(), RVector::from_ints(&[8, 10, 6]));
    }

    #[test]
    fn scalar_product_of_fractions() {
        let a = RMatrix::new(1, 1, vec![r("1/2")]).unwrap();
        let b = RMatrix::new(1, 1, vec![r("2/3")]).unwrap();
        assert_eq!(a.mat_mul(&b).unwrap().at(0, 0), &r("1/3"));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = RMatrix::zeros(2, 3);
        let b = RMatrix::zeros(2, 3);
        assert!(a.mat_mul(&b).is_err());
        assert!(a.mat_vec(&RVector::zeros(2)).is_err());
    }
}
