//! Truncated power series with exact rational coefficients.
//!
//! Arithmetic, logarithm and exponential are exact to the truncation
//! order, so series identities can be asserted with tolerance zero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A series `c_0 + c_1 t + ... + c_K t^K` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<BigRational>,
}

impl SeriesQ {
    /// The zero series truncated at order `K`.
    pub fn zero(order: usize) -> SeriesQ {
        SeriesQ { coeffs: vec![BigRational::zero(); order + 1] }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> SeriesQ {
        let mut s = SeriesQ::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Builds from coefficients, padding with zeros to keep `order + 1` slots.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> SeriesQ {
        coeffs.resize(order + 1, BigRational::zero());
        SeriesQ { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &SeriesQ) -> SeriesQ {
        assert_eq!(self.order(), other.order());
        SeriesQ {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &SeriesQ) -> SeriesQ {
        assert_eq!(self.order(), other.order());
        let order = self.order();
        let mut out = SeriesQ::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> SeriesQ {
        assert!(!self.coeffs[0].is_zero(), "inverse needs a unit constant term");
        let order = self.order();
        let mut out = SeriesQ::zero(order);
        out.coeffs[0] = self.coeffs[0].recip();
        for k in 1..=order {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out.coeffs[k - j];
                }
            }
            out.coeffs[k] = -(acc / &self.coeffs[0]);
        }
        out
    }

    /// Logarithm of a series with constant term 1, from the recurrence
    /// `k f_k = sum_{j=1..k} j l_j f_{k-j}`.
    pub fn log(&self) -> SeriesQ {
        assert!(self.coeffs[0].is_one(), "log needs constant term 1");
        let order = self.order();
        let mut out = SeriesQ::zero(order);
        for k in 1..=order {
            let mut acc = BigRational::zero();
            for j in 1..k {
                if !out.coeffs[j].is_zero() && !self.coeffs[k - j].is_zero() {
                    acc += BigRational::from_integer(BigInt::from(j))
                        * &out.coeffs[j]
                        * &self.coeffs[k - j];
                }
            }
            let k_rat = BigRational::from_integer(BigInt::from(k));
            out.coeffs[k] = &self.coeffs[k] - acc / &k_rat;
        }
        out
    }

    /// Exponential of a series with constant term 0, from the recurrence
    /// `k e_k = sum_{j=1..k} j a_j e_{k-j}`.
    pub fn exp(&self) -> SeriesQ {
        assert!(self.coeffs[0].is_zero(), "exp needs constant term 0");
        let order = self.order();
        let mut out = SeriesQ::zero(order);
        out.coeffs[0] = BigRational::one();
        for k in 1..=order {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !out.coeffs[k - j].is_zero() {
                    acc += BigRational::from_integer(BigInt::from(j))
                        * &self.coeffs[j]
                        * &out.coeffs[k - j];
                }
            }
            out.coeffs[k] = acc / BigRational::from_integer(BigInt::from(k));
        }
        out
    }
}

/// Renders a rational as `a` or `a/b` for reports.
pub fn rational_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
