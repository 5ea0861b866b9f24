use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: i64) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Delete row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(self.rows - 1, self.cols - 1);
        let mut ii = 0;
        for i in 0..self.rows {
            if i == r {
                continue;
            }
            let mut jj = 0;
            for j in 0..self.cols {
                if j == c {
                    continue;
                }
                m.set(ii, jj, self.get(i, j).clone());
                jj += 1;
            }
            ii += 1;
        }
        m
    }

    fn to_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    /// Fraction-free (Bareiss) determinant. The empty matrix has determinant 1.
    pub fn det(&self) -> Result<BigInt, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare(self.rows, self.cols));
        }
        Ok(bareiss(self.to_vecs()))
    }

    /// #positive - #negative eigenvalues, by congruence diagonalisation over Q.
    pub fn signature(&self) -> Result<i64, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare(self.rows, self.cols));
        }
        if !self.is_symmetric() {
            return Err(AlgebraError::NotSymmetric);
        }
        let n = self.rows;
        let mut m: Vec<Vec<BigRational>> =
            self.to_vecs().into_iter().map(|r| r.into_iter().map(BigRational::from_integer).collect()).collect();
        let mut sig = 0i64;
        for k in 0..n {
            if m[k][k].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                    m.swap(k, j);
                    for row in m.iter_mut() {
                        row.swap(k, j);
                    }
                } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                    // e_k <- e_k + e_j gives pivot 2 m[k][j]
                    for c in 0..n {
                        let v = m[j][c].clone();
                        m[k][c] += v;
                    }
                    for row in m.iter_mut() {
                        let v = row[j].clone();
                        row[k] += v;
                    }
                } else {
                    continue;
                }
            }
            let piv = m[k][k].clone();
            sig += if piv.is_positive() { 1 } else { -1 };
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let f = &m[i][k] / &piv;
                for c in k..n {
                    let v = &f * &m[k][c];
                    m[i][c] -= v;
                }
                for row in m.iter_mut().skip(k) {
                    let v = &f * &row[k];
                    row[i] -= v;
                }
            }
        }
        Ok(sig)
    }

    /// Rank over the field with p elements.
    pub fn rank_mod(&self, p: u32) -> usize {
        let pb = BigInt::from(p);
        let mut m: Vec<Vec<i64>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).mod_floor(&pb).to_i64().unwrap()).collect())
            .collect();
        let p = p as i64;
        let inv = |a: i64| (1..p).find(|b| a * b % p == 1).unwrap();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(r) = (rank..self.rows).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, r);
            let iv = inv(m[rank][c]);
            for x in m[rank].iter_mut() {
                *x = *x * iv % p;
            }
            for r2 in 0..self.rows {
                if r2 != rank && m[r2][c] != 0 {
                    let f = m[r2][c];
                    for cc in 0..self.cols {
                        m[r2][cc] = (m[r2][cc] - f * m[rank][cc]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn corank_mod3(&self) -> Result<usize, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare(self.rows, self.cols));
        }
        Ok(self.rows - self.rank_mod(3))
    }
}

pub(crate) fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let m = IntMatrix::from_rows(&[vec![3]]);
        assert_eq!(m.det().unwrap(), BigInt::from(3));
        assert_eq!(m.corank_mod3().unwrap(), 1);
        let v = IntMatrix::from_rows(&[vec![-1, 1], vec![0, -1]]);
        assert_eq!(v.add(&v.transpose()).signature().unwrap(), -2);
        assert_eq!(IntMatrix::zeros(0, 0).det().unwrap(), BigInt::one());
    }

    #[test]
    fn zero_diagonal_signature() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.signature().unwrap(), 0);
        let m = IntMatrix::from_rows(&[vec![0, 0, 1], vec![0, 2, 0], vec![1, 0, 0]]);
        assert_eq!(m.signature().unwrap(), 1);
    }
}
