//! Dense polynomials in one complex variable, lowest degree first.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

/// Trailing coefficients below `TRIM_THRESHOLD * max|coeff|` are dropped by
/// [`ComplexPolynomial::trimmed`].
pub const TRIM_THRESHOLD: f64 = 1e-14;

/// A polynomial `c_0 + c_1 z + ... + c_d z^d` stored as its coefficient list.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPolynomial {
    coeffs: Vec<Complex64>,
}

impl ComplexPolynomial {
    /// Wraps a coefficient list, lowest degree first. No trimming is applied.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    /// The zero polynomial (empty coefficient list).
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Complex64) -> Self {
        Self { coeffs: vec![c] }
    }

    /// Builds a polynomial with real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Self {
            coeffs: coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm_sqr() == 0.0)
    }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    pub fn max_coeff_magnitude(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.norm()))
    }

    /// Degree after trailing-zero trimming; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        let t = self.trimmed();
        t.coeffs.len().saturating_sub(1)
    }

    /// Copy with trailing coefficients below `TRIM_THRESHOLD * max|coeff|`
    /// removed.
    pub fn trimmed(&self) -> Self {
        let cutoff = TRIM_THRESHOLD * self.max_coeff_magnitude();
        let mut end = self.coeffs.len();
        while end > 0 && self.coeffs[end - 1].norm() <= cutoff {
            end -= 1;
        }
        Self {
            coeffs: self.coeffs[..end].to_vec(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficients of the derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * (k as f64))
            .collect();
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self { coeffs }
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Full product; `O(deg_a * deg_b)`.
    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Coefficients of `self(a z + b)`, by Horner in polynomial arithmetic.
    pub fn compose_affine(&self, a: Complex64, b: Complex64) -> Self {
        let mut acc = Self::zero();
        for &c in self.coeffs.iter().rev() {
            // acc <- acc * (a z + b) + c
            let mut next = vec![Complex64::new(0.0, 0.0); acc.coeffs.len() + 1];
            for (k, &q) in acc.coeffs.iter().enumerate() {
                next[k] += q * b;
                next[k + 1] += q * a;
            }
            next[0] += c;
            acc = Self { coeffs: next };
        }
        acc
    }
}

impl fmt::Display for ComplexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({:.6e}{:+.6e}i) z^{}", c.re, c.im, k)?;
        }
        Ok(())
    }
}

/// `base^exp` by binary exponentiation; exact chains of multiplications so
/// that e.g. `0^n == 0` without going through polar form.
pub fn cpowi(base: Complex64, exp: u32) -> Complex64 {
    let mut result = Complex64::new(1.0, 0.0);
    let mut b = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= b;
        }
        b *= b;
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_and_degree() {
        // 1 + 2z + 3z^2 at z = 2 -> 17
        let p = ComplexPolynomial::from_real(&[1.0, 2.0, 3.0]);
        assert_eq!(p.eval(c(2.0, 0.0)), c(17.0, 0.0));
        assert_eq!(p.degree(), 2);
        assert_eq!(ComplexPolynomial::zero().eval(c(3.0, 1.0)), c(0.0, 0.0));
    }

    #[test]
    fn trim_drops_trailing_noise() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(1e-16, 0.0)]);
        assert_eq!(p.trimmed().coeffs().len(), 2);
        // a genuine small leading coefficient survives when it dominates
        let q = ComplexPolynomial::new(vec![c(1e-20, 0.0)]);
        assert_eq!(q.trimmed().coeffs().len(), 1);
    }

    #[test]
    fn derivative_shifts_coefficients() {
        let p = ComplexPolynomial::from_real(&[5.0, 1.0, 4.0]); // 5 + z + 4z^2
        let d = p.derivative(); // 1 + 8z
        assert_eq!(d.coeffs(), &[c(1.0, 0.0), c(8.0, 0.0)]);
    }

    #[test]
    fn product_matches_pointwise() {
        let p = ComplexPolynomial::from_real(&[1.0, -1.0]);
        let q = ComplexPolynomial::from_real(&[2.0, 0.0, 1.0]);
        let r = p.mul(&q);
        for &z in &[c(0.3, -0.2), c(-1.5, 0.7), c(2.0, 2.0)] {
            let d = r.eval(z) - p.eval(z) * q.eval(z);
            assert!(d.norm() < 1e-12);
        }
    }

    #[test]
    fn affine_composition() {
        // p(z) = z^2, p(2z + 1) = 4z^2 + 4z + 1
        let p = ComplexPolynomial::from_real(&[0.0, 0.0, 1.0]);
        let q = p.compose_affine(c(2.0, 0.0), c(1.0, 0.0));
        assert_eq!(q.coeffs(), &[c(1.0, 0.0), c(4.0, 0.0), c(4.0, 0.0)]);
    }

    #[test]
    fn integer_power_helper() {
        assert_eq!(cpowi(c(0.0, 0.0), 5), c(0.0, 0.0));
        assert_eq!(cpowi(c(2.0, 0.0), 10), c(1024.0, 0.0));
        let z = c(0.3, 0.4);
        let direct = z * z * z * z * z * z * z;
        assert!((cpowi(z, 7) - direct).norm() < 1e-15 * direct.norm());
    }
}
