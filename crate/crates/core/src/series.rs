//! Truncated univariate power series over the rationals. Only what the Todd
//! generating function needs: products, reciprocals and logarithms.

use num_traits::{One, Zero};

use crate::rational::{factorial, Rational};

/// Coefficients `c[0..=order]` of a series truncated after `x^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series(pub Vec<Rational>);

impl Series {
    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.0.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Series(out)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Series {
        let c0 = &self.0[0];
        assert!(
            !c0.is_zero(),
            "series with zero constant term is not invertible"
        );
        let mut out: Vec<Rational> = Vec::with_capacity(self.0.len());
        out.push(c0.recip());
        for m in 1..self.0.len() {
            let mut acc = Rational::zero();
            for i in 1..=m {
                acc += &self.0[i] * &out[m - i];
            }
            out.push(-acc / c0);
        }
        Series(out)
    }

    pub fn derivative(&self) -> Series {
        let mut out: Vec<Rational> = self
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        out.push(Rational::zero());
        Series(out)
    }

    /// Antiderivative with zero constant term, truncated to the same order.
    pub fn integral(&self) -> Series {
        let mut out = vec![Rational::zero()];
        out.extend(
            self.0
                .iter()
                .enumerate()
                .take(self.order())
                .map(|(i, c)| c / Rational::from_integer((i + 1).into())),
        );
        Series(out)
    }

    /// `log(self)`; the constant term must be one.
    pub fn log(&self) -> Series {
        assert!(self.0[0].is_one(), "log needs constant term 1");
        self.derivative().mul(&self.inverse()).integral()
    }
}

/// Coefficients `a_m` of `log(x / (1 - e^{-x})) = sum a_m x^m`, m = 0..=order.
pub fn todd_log_coefficients(order: usize) -> Vec<Rational> {
    // (1 - e^{-x}) / x = sum (-1)^m x^m / (m+1)!
    let g = Series(
        (0..=order)
            .map(|m| {
                let sign = if m % 2 == 0 { 1 } else { -1 };
                Rational::new(sign.into(), factorial(m + 1))
            })
            .collect(),
    );
    let log_g = g.log();
    log_g.0.into_iter().map(|c| -c).collect()
}
