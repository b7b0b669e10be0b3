//! Small dense complex linear algebra: determinants for the Cramer-rule
//! solves, least squares for subspace pursuit, and Jacobi singular values
//! for collision counting. Orders here are at most a few dozen.

use num_complex::Complex64;

/// Row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Hankel matrix `H[i][j] = m[i + j]` of the given order.
    pub fn hankel(m: &[Complex64], order: usize) -> Self {
        assert!(
            order == 0 || m.len() >= 2 * order - 1,
            "too few values for Hankel order"
        );
        Self::from_fn(order, order, |i, j| m[i + j])
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> CMat {
        CMat::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])])
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// `Aᴴ v`.
    pub fn adjoint_mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)].conj() * v[i]).sum())
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Replaces column `j` with `v`.
    pub fn with_column(&self, j: usize, v: &[Complex64]) -> CMat {
        let mut out = self.clone();
        for (i, &x) in v.iter().enumerate() {
            out[(i, j)] = x;
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(m: &CMat) -> Complex64 {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[(x, col)].norm().total_cmp(&a[(y, col)].norm()))
            .unwrap();
        if a[(pivot, col)].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            for j in 0..n {
                let tmp = a[(col, j)];
                a[(col, j)] = a[(pivot, j)];
                a[(pivot, j)] = tmp;
            }
            det = -det;
        }
        let p = a[(col, col)];
        det *= p;
        for r in col + 1..n {
            let f = a[(r, col)] / p;
            if f.norm() == 0.0 {
                continue;
            }
            for j in col..n {
                let v = a[(col, j)];
                a[(r, j)] -= f * v;
            }
        }
    }
    det
}

/// Result of a rank-revealing least-squares solve.
#[derive(Debug, Clone, PartialEq)]
pub struct LeastSquares {
    /// One coefficient per column; dropped columns get zero.
    pub coeffs: Vec<Complex64>,
    /// Columns found linearly dependent on earlier ones.
    pub dropped: Vec<usize>,
}

/// Minimizes `‖A c − y‖₂` by modified Gram-Schmidt with one
/// re-orthogonalization pass. Columns whose remaining norm falls below
/// `1e-10` of their original norm are dropped.
pub fn least_squares(a: &CMat, y: &[Complex64]) -> LeastSquares {
    assert_eq!(a.rows, y.len());
    let n = a.cols;
    let mut q: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut kept: Vec<usize> = Vec::with_capacity(n);
    // r[j] holds the projections of kept column j onto q[0..=j].
    let mut r: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut dropped = Vec::new();
    for j in 0..n {
        let mut v = a.column(j);
        let orig = norm(&v);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); q.len()];
        for _pass in 0..2 {
            for (t, qt) in q.iter().enumerate() {
                let proj: Complex64 = qt.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                coeffs[t] += proj;
                for (vi, qi) in v.iter_mut().zip(qt) {
                    *vi -= proj * qi;
                }
            }
        }
        let rest = norm(&v);
        if orig == 0.0 || rest <= 1e-10 * orig {
            dropped.push(j);
            continue;
        }
        v.iter_mut().for_each(|x| *x /= rest);
        coeffs.push(Complex64::new(rest, 0.0));
        q.push(v);
        r.push(coeffs);
        kept.push(j);
    }
    // Qᴴ y, then back-substitute R c = Qᴴ y.
    let qty: Vec<Complex64> = q
        .iter()
        .map(|qt| qt.iter().zip(y).map(|(a, b)| a.conj() * b).sum())
        .collect();
    let k = kept.len();
    let mut sol = vec![Complex64::new(0.0, 0.0); k];
    for i in (0..k).rev() {
        let mut acc = qty[i];
        for j in i + 1..k {
            acc -= r[j][i] * sol[j];
        }
        sol[i] = acc / r[i][i];
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
    for (slot, &col) in kept.iter().enumerate() {
        coeffs[col] = sol[slot];
    }
    LeastSquares { coeffs, dropped }
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Singular values in descending order, by one-sided (Hestenes) Jacobi.
///
/// Column pairs are rotated until mutually orthogonal, which diagonalizes
/// `AᴴA` implicitly; the singular values are the final column norms.
pub fn singular_values(a: &CMat) -> Vec<f64> {
    let (m, n) = (a.rows, a.cols);
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| a.column(j)).collect();
    for _sweep in 0..64 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|v| v.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|v| v.norm_sqr()).sum();
                let gamma: Complex64 = cols[p].iter().zip(&cols[q]).map(|(x, y)| x.conj() * y).sum();
                let g = gamma.norm();
                if g <= 1e-15 * (alpha * beta).sqrt() || g == 0.0 {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (head, tail) = cols.split_at_mut(q);
                for (x, y) in head[p].iter_mut().zip(tail[0].iter_mut()) {
                    let ap = *x;
                    let bq = *y * phase.conj();
                    *x = ap * c - bq * s;
                    *y = ap * s + bq * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = cols.iter().map(|c| norm(c)).collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv.truncate(m.min(n));
    sv
}
