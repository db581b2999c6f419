//! Dense exact linear algebra over Q(i): reduced row echelon form, rank,
//! kernels, linear solving, and determinants by elimination. Matrices here
//! are small (at most a few dozen rows), so simplicity wins over asymptotics.

use crate::arith::GaussianRational;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::MatrixShape("ragged rows".into()));
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> GaussianRational) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
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

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<GaussianRational> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v.conj()).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn scale(&self, c: &GaussianRational) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut s = GaussianRational::zero();
            for k in 0..self.cols {
                s += &(self.get(i, k) * other.get(k, j));
            }
            s
        })
    }

    pub fn matvec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = GaussianRational::zero();
                for k in 0..self.cols {
                    s += &(self.get(i, k) * &v[k]);
                }
                s
            })
            .collect()
    }

    pub fn trace(&self) -> GaussianRational {
        assert_eq!(self.rows, self.cols);
        let mut s = GaussianRational::zero();
        for i in 0..self.rows {
            s += self.get(i, i);
        }
        s
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let tmp = self.get(r, j).clone();
                self.set(r, j, self.get(p, j).clone());
                self.set(p, j, tmp);
            }
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in 0..self.cols {
                        let v = self.get(i, j) - &(self.get(r, j) * &f);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel {v : Mv = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussianRational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[fc] = GaussianRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, fc).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of Mx = b, or None when inconsistent.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Determinant by Gaussian elimination with exact division.
    pub fn det(&self) -> Result<GaussianRational, Error> {
        if self.rows != self.cols {
            return Err(Error::MatrixShape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = GaussianRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(GaussianRational::zero());
            };
            if p != c {
                for j in 0..n {
                    let tmp = m.get(c, j).clone();
                    m.set(c, j, m.get(p, j).clone());
                    m.set(p, j, tmp);
                }
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            let inv = pivot.inv().expect("pivot nonzero");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(m.get(c, j) * &f);
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            writeln!(
                f,
                "[{}]",
                (0..self.cols).map(|j| self.get(i, j).to_string()).collect::<Vec<_>>().join(", ")
            )?;
        }
        Ok(())
    }
}

/// Dot product of two vectors.
pub fn dot(a: &[GaussianRational], b: &[GaussianRational]) -> GaussianRational {
    assert_eq!(a.len(), b.len());
    let mut s = GaussianRational::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        s += &(x * y);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| g(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(m.matvec(&ker[0]).iter().all(|v| v.is_zero()));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mat(&[&[1, 1], &[1, -1]]);
        let x = m.solve(&[g(3), g(1)]).unwrap();
        assert_eq!(x, vec![g(2), g(1)]);
        let sing = mat(&[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&[g(0), g(1)]).is_none());
    }

    #[test]
    fn det_by_elimination() {
        let m = mat(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        assert_eq!(m.det().unwrap(), g(30));
        let s = mat(&[&[1, 2], &[2, 4]]);
        assert!(s.det().unwrap().is_zero());
        let a = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.det().unwrap(), g(-1));
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = mat(&[&[2, 4], &[1, 2]]);
        a.rref();
        let mut b = mat(&[&[1, 2], &[3, 6]]);
        b.rref();
        assert_eq!(a, b);
    }
}
