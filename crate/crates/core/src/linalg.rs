//! Small dense complex matrices and the one symmetric eigenvalue routine the
//! crate needs. All sizes are fixed at 2, 3, or 6; nothing here allocates.

use num_complex::Complex;

use crate::{conv, Real};

/// Dense complex 2x2 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix2<R> {
    pub entries: [[Complex<R>; 2]; 2],
}

/// Dense complex 3x3 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix3<R> {
    pub entries: [[Complex<R>; 3]; 3],
}

impl<R: Real> Matrix2<R> {
    pub fn new(entries: [[Complex<R>; 2]; 2]) -> Self {
        Self { entries }
    }

    pub fn identity() -> Self {
        let one = Complex::new(R::one(), R::zero());
        let zero = Complex::new(R::zero(), R::zero());
        Self::new([[one, zero], [zero, one]])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = [[Complex::new(R::zero(), R::zero()); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..2 {
                    *cell += self.entries[i][k] * rhs.entries[k][j];
                }
            }
        }
        Self::new(out)
    }

    pub fn adjoint(&self) -> Self {
        let mut out = [[Complex::new(R::zero(), R::zero()); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.entries[j][i].conj();
            }
        }
        Self::new(out)
    }

    /// Largest absolute entry of `U U* - I`.
    pub fn unitarity_deviation(&self) -> R {
        let prod = self.mul(&self.adjoint());
        let mut worst = R::zero();
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { R::one() } else { R::zero() };
                let dev = (prod.entries[i][j] - Complex::new(expect, R::zero())).norm();
                worst = worst.max(dev);
            }
        }
        worst
    }

    pub fn det(&self) -> Complex<R> {
        let e = &self.entries;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }
}

impl<R: Real> Matrix3<R> {
    pub fn new(entries: [[Complex<R>; 3]; 3]) -> Self {
        Self { entries }
    }

    pub fn identity() -> Self {
        let mut out = [[Complex::new(R::zero(), R::zero()); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            row[i] = Complex::new(R::one(), R::zero());
        }
        Self::new(out)
    }

    pub fn row(&self, i: usize) -> [Complex<R>; 3] {
        self.entries[i]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = [[Complex::new(R::zero(), R::zero()); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..3 {
                    *cell += self.entries[i][k] * rhs.entries[k][j];
                }
            }
        }
        Self::new(out)
    }

    pub fn adjoint(&self) -> Self {
        let mut out = [[Complex::new(R::zero(), R::zero()); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.entries[j][i].conj();
            }
        }
        Self::new(out)
    }

    /// Largest absolute entry of `U U* - I`.
    pub fn unitarity_deviation(&self) -> R {
        let prod = self.mul(&self.adjoint());
        let mut worst = R::zero();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { R::one() } else { R::zero() };
                let dev = (prod.entries[i][j] - Complex::new(expect, R::zero())).norm();
                worst = worst.max(dev);
            }
        }
        worst
    }

    /// Determinant by cofactor expansion. The character-sum route lives in
    /// [`crate::immanants`]; this one serves as a cheap independent check.
    pub fn det(&self) -> Complex<R> {
        let e = &self.entries;
        e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
    }
}

/// Smallest eigenvalue of a real symmetric 6x6 matrix via cyclic Jacobi
/// rotations. Converges to machine precision in a handful of sweeps at this
/// size.
#[allow(clippy::needless_range_loop)] // rotations read two columns while writing
pub fn sym6_smallest_eigenvalue<R: Real>(m: &[[R; 6]; 6]) -> R {
    let mut a = *m;
    let eps = R::epsilon() * conv::<R>(64.0);
    for _sweep in 0..50 {
        let mut off = R::zero();
        for p in 0..6 {
            for q in (p + 1)..6 {
                off += a[p][q] * a[p][q];
            }
        }
        let mut scale = R::zero();
        for row in &a {
            for &x in row {
                scale = scale.max(x.abs());
            }
        }
        if off.sqrt() <= eps * scale.max(R::one()) {
            break;
        }
        for p in 0..6 {
            for q in (p + 1)..6 {
                if a[p][q].abs() <= eps * scale.max(R::one()) {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (conv::<R>(2.0) * a[p][q]);
                let t = {
                    let mag = theta.abs() + (theta * theta + R::one()).sqrt();
                    let t = R::one() / mag;
                    if theta < R::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = R::one() / (t * t + R::one()).sqrt();
                let s = t * c;
                for k in 0..6 {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..6 {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut min = a[0][0];
    for (i, row) in a.iter().enumerate() {
        min = min.min(row[i]);
    }
    min
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_unitary() {
        let m = Matrix3::<f64>::identity();
        assert!(m.unitarity_deviation() < 1e-15);
        assert!((m.det() - num_complex::Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn mul_against_hand_computation() {
        let c = |re: f64, im: f64| num_complex::Complex64::new(re, im);
        let a = Matrix2::new([[c(1.0, 1.0), c(0.0, 2.0)], [c(3.0, 0.0), c(-1.0, 0.5)]]);
        let b = Matrix2::new([[c(0.0, 1.0), c(2.0, 0.0)], [c(1.0, 0.0), c(0.0, -1.0)]]);
        let ab = a.mul(&b);
        assert_eq!(
            ab.entries[0][0],
            c(1.0, 1.0) * c(0.0, 1.0) + c(0.0, 2.0) * c(1.0, 0.0)
        );
        assert_eq!(
            ab.entries[1][1],
            c(3.0, 0.0) * c(2.0, 0.0) + c(-1.0, 0.5) * c(0.0, -1.0)
        );
    }

    #[test]
    fn jacobi_finds_smallest_eigenvalue() {
        // diag(5, 3, 2, 1, 7, 4) rotated is tedious to write out, so use a
        // matrix with a known spectral shift: A = B + 0.5 I where B is
        // singular of rank 1 (outer product), eigenvalues {0.5 x 5, 0.5 + v.v}.
        let v = [1.0, -2.0, 0.5, 0.0, 3.0, 1.5];
        let mut m = [[0.0f64; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                m[i][j] = v[i] * v[j];
            }
            m[i][i] += 0.5;
        }
        let min = sym6_smallest_eigenvalue(&m);
        assert!((min - 0.5).abs() < 1e-12, "min eigenvalue {min}");
    }

    #[test]
    fn jacobi_on_diagonal_matrix() {
        let mut m = [[0.0f64; 6]; 6];
        let d = [5.0, 3.0, 2.0, -1.0, 7.0, 4.0];
        for i in 0..6 {
            m[i][i] = d[i];
        }
        assert!((sym6_smallest_eigenvalue(&m) + 1.0).abs() < 1e-14);
    }
}
