use rand::Rng;

use crate::error::{Error, Result};
use crate::geometry::Point;

/// Bivariate polynomial of total degree at most `n` in the monomial basis
/// `x₁ⁱx₂ʲ`, `i + j ≤ n`.
///
/// Coefficients are stored row by row in `i`: `(0,0), (0,1), …, (0,n), (1,0), …`.
#[derive(Clone, Debug, PartialEq)]
pub struct TotalDegreePolynomial {
    degree: usize,
    coeffs: Vec<f64>,
}

#[inline]
fn row_offset(n: usize, i: usize) -> usize {
    i * (n + 1) - i * (i.saturating_sub(1)) / 2
}

impl TotalDegreePolynomial {
    pub fn coefficient_count(degree: usize) -> usize {
        (degree + 1) * (degree + 2) / 2
    }

    pub fn new(degree: usize, coeffs: Vec<f64>) -> Result<Self> {
        let want = Self::coefficient_count(degree);
        if coeffs.len() != want {
            return Err(Error::InvalidArgument(format!(
                "degree {degree} needs {want} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self { degree, coeffs })
    }

    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: vec![0.0; Self::coefficient_count(degree)],
        }
    }

    pub fn constant(degree: usize, c: f64) -> Self {
        let mut p = Self::zero(degree);
        p.coeffs[0] = c;
        p
    }

    /// Coefficients i.i.d. uniform in `[−1, 1]`.
    pub fn random<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> Self {
        let coeffs = (0..Self::coefficient_count(degree))
            .map(|_| rng.random_range(-1.0..=1.0))
            .collect();
        Self { degree, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        assert!(
            i + j <= self.degree,
            "monomial ({i},{j}) exceeds degree {}",
            self.degree
        );
        self.coeffs[row_offset(self.degree, i) + j]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, v: f64) {
        assert!(
            i + j <= self.degree,
            "monomial ({i},{j}) exceeds degree {}",
            self.degree
        );
        self.coeffs[row_offset(self.degree, i) + j] = v;
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Value and gradient by Horner's scheme, rows in `x₂` then the column in `x₁`.
    pub fn value_and_gradient(&self, p: &Point) -> (f64, Point) {
        let n = self.degree;
        let (x1, x2) = (p.x, p.y);
        let (mut v, mut d1, mut d2) = (0.0, 0.0, 0.0);
        for i in (0..=n).rev() {
            let row = &self.coeffs[row_offset(n, i)..row_offset(n, i) + (n - i + 1)];
            let (mut r, mut dr) = (0.0, 0.0);
            for &c in row.iter().rev() {
                dr = dr * x2 + r;
                r = r * x2 + c;
            }
            d1 = d1 * x1 + v;
            v = v * x1 + r;
            d2 = d2 * x1 + dr;
        }
        (v, Point::new(d1, d2))
    }

    pub fn eval(&self, p: &Point) -> f64 {
        self.value_and_gradient(p).0
    }

    pub fn gradient(&self, p: &Point) -> Point {
        self.value_and_gradient(p).1
    }

    /// Hessian by central differences of the analytic gradient.
    pub fn hessian(&self, p: &Point) -> nalgebra::Matrix2<f64> {
        let h = 1e-6;
        let gx = (self.gradient(&(p + Point::new(h, 0.0)))
            - self.gradient(&(p - Point::new(h, 0.0))))
            / (2.0 * h);
        let gy = (self.gradient(&(p + Point::new(0.0, h)))
            - self.gradient(&(p - Point::new(0.0, h))))
            / (2.0 * h);
        let off = 0.5 * (gx.y + gy.x);
        nalgebra::Matrix2::new(gx.x, off, off, gy.y)
    }

    /// `self · (c₀ + c₁x₁ + c₂x₂)`, one degree higher.
    pub fn mul_affine(&self, c0: f64, c1: f64, c2: f64) -> Self {
        let n = self.degree;
        let mut out = Self::zero(n + 1);
        for i in 0..=n {
            for j in 0..=n - i {
                let c = self.coeff(i, j);
                if c == 0.0 {
                    continue;
                }
                out.coeffs[row_offset(n + 1, i) + j] += c0 * c;
                out.coeffs[row_offset(n + 1, i + 1) + j] += c1 * c;
                out.coeffs[row_offset(n + 1, i) + j + 1] += c2 * c;
            }
        }
        out
    }

    /// Re-embeds into a higher degree with zero padding.
    pub fn raise_degree(&self, degree: usize) -> Self {
        assert!(degree >= self.degree);
        let mut out = Self::zero(degree);
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                out.set_coeff(i, j, self.coeff(i, j));
            }
        }
        out
    }

    /// Coefficient-wise `a·self + b·other`; degrees must agree.
    fn combine(&self, a: f64, other: &Self, b: f64) -> Self {
        debug_assert_eq!(self.degree, other.degree);
        Self {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| a * x + b * y)
                .collect(),
        }
    }
}

/// `T_n ∘ ℓ` for the affine functional `ℓ(x) = c₀ + ⟨c, x⟩`, expanded in the
/// monomial basis. `|ℓ| ≤ 1` is required at the three vertices of the
/// triangle, which makes the sup-norm on the triangle at most 1 (exactly 1
/// when `ℓ` reaches ±1 at some vertex).
pub fn chebyshev_transplant(n: usize, c0: f64, c: [f64; 2]) -> Result<TotalDegreePolynomial> {
    for v in [c0, c0 + c[0], c0 + c[1]] {
        if !v.is_finite() || v.abs() > 1.0 + 1e-12 {
            return Err(Error::TransplantOutOfRange(v));
        }
    }
    let mut prev = TotalDegreePolynomial::constant(0, 1.0);
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = prev.mul_affine(c0, c[0], c[1]);
    for k in 1..n {
        let next = cur.mul_affine(2.0 * c0, 2.0 * c[0], 2.0 * c[1]).combine(
            1.0,
            &prev.raise_degree(k + 1),
            -1.0,
        );
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
