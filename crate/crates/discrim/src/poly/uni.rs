use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Dense univariate polynomial in one variable `t`.
///
/// `coeffs[i]` is the coefficient of `t^i`; trailing zeros are trimmed, so the
/// zero polynomial is the empty vector and its degree is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `a + b·t`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, e: usize) -> UniPoly {
        let mut acc = UniPoly::constant(rat(1));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        // Horner's rule.
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Exact quotient `self / den`; a nonzero remainder is a hard error.
    pub fn exact_divide(&self, den: &UniPoly) -> Result<UniPoly> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rem = self.clone();
        let dd = den.degree().expect("nonzero divisor");
        let lead = den.coeffs[dd].clone();
        let mut q = vec![rat(0); rem.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return Err(Error::InexactDivision);
            }
            let c = &rem.coeffs[rd] / &lead;
            let shift = rd - dd;
            for (j, b) in den.coeffs.iter().enumerate() {
                let upd = &rem.coeffs[shift + j] - &c * b;
                rem.coeffs[shift + j] = upd;
            }
            rem.trim();
            q[shift] = c;
        }
        Ok(UniPoly::from_coeffs(q))
    }
}
