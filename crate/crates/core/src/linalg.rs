//! Elimination kernels. Rank and square solving run fraction-free
//! (Bareiss-style) over row-scaled integer matrices to keep intermediate
//! coefficients from exploding; reduced row echelon form over rationals is
//! used where a canonical basis is wanted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::matrix::RMatrix;
use crate::rational::Rational;
use crate::vector::RVector;

/// Scales each row by the lcm of its denominators, yielding integer rows
/// that span the same row space (and, for augmented systems, the same
/// solution set).
fn integer_rows(rows: usize, cols: usize, at: impl Fn(usize, usize) -> Rational) -> Vec<Vec<BigInt>> {
    (0..rows)
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..cols {
                lcm = lcm.lcm(at(i, j).denom());
            }
            (0..cols)
                .map(|j| {
                    let e = at(i, j);
                    let scaled = e.numer() * (&lcm / e.denom());
                    debug_assert!((&Rational::from(lcm.clone()) * &e).is_integer());
                    scaled
                })
                .collect()
        })
        .collect()
}

/// Fraction-free forward elimination in place. Returns the pivot positions
/// (row, col). After return, rows below each pivot are zero in the pivot
/// column and all entries are exact minors of the input.
fn bareiss(m: &mut [Vec<BigInt>]) -> Vec<(usize, usize)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    pivots
}

/// Exact rank over the rationals.
pub fn rank(m: &RMatrix) -> usize {
    let mut rows = integer_rows(m.rows(), m.cols(), |i, j| m.at(i, j).clone());
    bareiss(&mut rows).len()
}

/// Solves Mx = rhs for square M. Returns `None` when M is singular.
pub fn solve_square(m: &RMatrix, rhs: &RVector) -> Result<Option<RVector>, Error> {
    if m.rows() != m.cols() {
        return Err(Error::dims(m.rows(), m.cols()));
    }
    if rhs.len() != m.rows() {
        return Err(Error::dims(m.rows(), rhs.len()));
    }
    let n = m.rows();
    let mut rows = integer_rows(n, n + 1, |i, j| {
        if j < n {
            m.at(i, j).clone()
        } else {
            rhs[i].clone()
        }
    });
    let pivots = bareiss(&mut rows);
    if pivots.len() < n || pivots.iter().any(|&(r, c)| r != c) {
        return Ok(None);
    }
    // Upper triangular with nonzero diagonal; back-substitute exactly.
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from(rows[i][n].clone());
        for j in i + 1..n {
            acc -= &(&Rational::from(rows[i][j].clone()) * &x[j]);
        }
        x[i] = &acc / &Rational::from(rows[i][i].clone());
    }
    Ok(Some(RVector::new(x)))
}

/// Returns (BᵀB)⁻¹BᵀM exactly, or `GramSingular` when BᵀB is singular
/// (equivalently, when B does not have full column rank).
pub fn gram_solve(b: &RMatrix, m: &RMatrix) -> Result<RMatrix, Error> {
    if b.rows() != m.rows() {
        return Err(Error::dims(b.rows(), m.rows()));
    }
    let bt = b.transpose();
    let gram = bt.mat_mul(b)?;
    let target = bt.mat_mul(m)?;
    let p = gram.rows();
    let mut cols = Vec::with_capacity(target.cols());
    for j in 0..target.cols() {
        match solve_square(&gram, &target.col_vec(j))? {
            Some(x) => cols.push(x),
            None => return Err(Error::GramSingular),
        }
    }
    let mut out = RMatrix::zeros(p, target.cols());
    for (j, col) in cols.iter().enumerate() {
        for i in 0..p {
            *out.at_mut(i, j) = col[i].clone();
        }
    }
    Ok(out)
}

/// Reduced row echelon form over the rationals together with the pivot
/// columns. The output is the canonical basis of the row space.
pub fn rref(m: &RMatrix) -> (RMatrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.at(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a.at(p, j).clone();
                *a.at_mut(p, j) = a.at(r, j).clone();
                *a.at_mut(r, j) = tmp;
            }
        }
        let inv = a.at(r, c).recip().expect("pivot nonzero");
        for j in 0..cols {
            let v = a.at(r, j) * &inv;
            *a.at_mut(r, j) = v;
        }
        for i in 0..rows {
            if i == r || a.at(i, c).is_zero() {
                continue;
            }
            let f = a.at(i, c).clone();
            for j in 0..cols {
                let v = a.at(i, j) - &(&f * a.at(r, j));
                *a.at_mut(i, j) = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Canonical basis of the null space {x : Mx = 0}, one vector per free
/// column of the RREF.
pub fn null_space(m: &RMatrix) -> Vec<RVector> {
    let (red, pivots) = rref(m);
    let cols = m.cols();
    let mut basis = Vec::new();
    for j in 0..cols {
        if pivots.contains(&j) {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[j] = Rational::one();
        for (row, &pcol) in pivots.iter().enumerate() {
            v[pcol] = -red.at(row, j);
        }
        basis.push(RVector::new(v));
    }
    basis
}

/// A particular solution of Ax = rhs (free variables set to zero), or
/// `None` when the system is inconsistent.
pub fn solve_general(a: &RMatrix, rhs: &RVector) -> Result<Option<RVector>, Error> {
    if rhs.len() != a.rows() {
        return Err(Error::dims(a.rows(), rhs.len()));
    }
    let cols = a.cols();
    let mut aug = RMatrix::zeros(a.rows(), cols + 1);
    for i in 0..a.rows() {
        for j in 0..cols {
            *aug.at_mut(i, j) = a.at(i, j).clone();
        }
        *aug.at_mut(i, cols) = rhs[i].clone();
    }
    let (red, pivots) = rref(&aug);
    if pivots.contains(&cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &pcol) in pivots.iter().enumerate() {
        x[pcol] = red.at(row, cols).clone();
    }
    Ok(Some(RVector::new(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RMatrix::zeros(3, 4)), 0);
        assert_eq!(rank(&RMatrix::identity(4)), 4);
        assert_eq!(rank(&RMatrix::from_int_rows(&[&[4, 5, 3]])), 1);
        assert_eq!(
            rank(&RMatrix::from_int_rows(&[&[1, 2], &[2, 4], &[3, 6]])),
            1
        );
    }

    #[test]
    fn rank_agrees_with_rref() {
        let m = RMatrix::from_int_rows(&[&[2, 4, 1, 3], &[-1, 0, 5, 2], &[1, 4, 6, 5], &[0, 0, 0, 0]]);
        assert_eq!(rank(&m), rref(&m).1.len());
    }

    #[test]
    fn solve_square_examples() {
        let x = solve_square(&RMatrix::identity(2), &RVector::from_ints(&[5, 7]))
            .unwrap()
            .unwrap();
        assert_eq!(x, RVector::from_ints(&[5, 7]));

        let m = RMatrix::from_int_rows(&[&[2, 0], &[0, 4]]);
        let x = solve_square(&m, &RVector::from_ints(&[1, 1])).unwrap().unwrap();
        assert_eq!(x, RVector::new(vec!["1/2".parse().unwrap(), "1/4".parse().unwrap()]));

        let singular = RMatrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert!(solve_square(&singular, &RVector::from_ints(&[1, 1]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn solution_satisfies_system_iff_full_rank() {
        let m = RMatrix::from_int_rows(&[&[3, -2, 1], &[1, 1, 1], &[0, 5, -7]]);
        let rhs = RVector::from_ints(&[4, -2, 9]);
        let x = solve_square(&m, &rhs).unwrap().unwrap();
        assert_eq!(rank(&m), 3);
        assert_eq!(m.mat_vec(&x).unwrap(), rhs);
    }

    #[test]
    fn gram_solve_examples() {
        let any = RMatrix::from_int_rows(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(gram_solve(&RMatrix::identity(3), &any).unwrap(), any);

        // Identity Gram with the coupling column used throughout the
        // bundled fixtures: the normalized coefficient is the column itself.
        let c = RMatrix::from_int_rows(&[&[-4], &[-5], &[-3]]);
        assert_eq!(gram_solve(&RMatrix::identity(3), &c).unwrap(), c);

        let dependent = RMatrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert!(matches!(
            gram_solve(&dependent, &RMatrix::identity(2)),
            Err(Error::GramSingular)
        ));
    }

    #[test]
    fn gram_solve_of_b_with_itself_is_identity() {
        let b = RMatrix::from_int_rows(&[&[1, 2], &[0, 1], &[4, -3]]);
        assert_eq!(gram_solve(&b, &b).unwrap(), RMatrix::identity(2));
    }

    #[test]
    fn null_space_and_general_solve() {
        let m = RMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let basis = null_space(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mat_vec(v).unwrap().is_zero());
        }

        let sol = solve_general(&m, &RVector::from_ints(&[6, 12])).unwrap().unwrap();
        assert_eq!(m.mat_vec(&sol).unwrap(), RVector::from_ints(&[6, 12]));
        assert!(solve_general(&m, &RVector::from_ints(&[6, 13])).unwrap().is_none());
    }
}
