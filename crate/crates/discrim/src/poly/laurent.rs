use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::{rat, Rational};

use super::multi::MultiPoly;

/// Sparse Laurent polynomial: integer exponent vectors with rational
/// coefficients, negative exponents allowed. Zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(vec![0; nvars], rat(1));
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn from_multi(f: &MultiPoly) -> Self {
        Self::from_terms(
            f.nvars(),
            f.terms_desc()
                .map(|(e, c)| (e.iter().map(|&x| x as i64).collect(), c.clone())),
        )
    }

    fn add_term(&mut self, e: Vec<i64>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exponents: &[i64]) -> Rational {
        assert_eq!(
            exponents.len(),
            self.nvars,
            "exponent vector length mismatch"
        );
        self.terms.get(exponents).cloned().unwrap_or_else(|| rat(0))
    }

    /// `[f]₁`: the coefficient of the all-zero exponent vector.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn mul(&self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Conjugation `L_i ↦ L_i⁻¹` (negates every exponent).
    pub fn conjugate(&self) -> LaurentPoly {
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(e, c)| (e.iter().map(|&x| -x).collect(), c.clone())),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `1 − L_i/L_j`
    fn kernel_factor(n: usize, i: usize, j: usize) -> LaurentPoly {
        let mut e = vec![0i64; n];
        e[i] = 1;
        e[j] = -1;
        LaurentPoly::from_terms(n, vec![(vec![0; n], rat(1)), (e, rat(-1))])
    }

    /// ∏_{i≠j} (1 − L_i/L_j)
    fn kernel(n: usize) -> LaurentPoly {
        let mut p = LaurentPoly::one(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    p = p.mul(&kernel_factor(n, i, j));
                }
            }
        }
        p
    }

    #[test]
    fn constant_term_basics() {
        // L1/L2 + 5 → 5
        let f = LaurentPoly::from_terms(2, vec![(vec![1, -1], rat(1)), (vec![0, 0], rat(5))]);
        assert_eq!(f.constant_term(), rat(5));
        assert_eq!(LaurentPoly::zero(2).constant_term(), rat(0));
    }

    #[test]
    fn two_variable_kernel_constant_term() {
        // (1 − L1/L2)(1 − L2/L1) = 2 − L1/L2 − L2/L1
        let p = kernel(2);
        assert_eq!(p.constant_term(), rat(2));
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn conjugation_is_an_involution() {
        let f = LaurentPoly::from_terms(
            3,
            vec![
                (vec![2, -1, 0], rat(3)),
                (vec![0, 0, 0], rat(-7)),
                (vec![-1, -1, 5], rat(1)),
            ],
        );
        assert_eq!(f.conjugate().conjugate(), f);
        assert_eq!(f.conjugate().constant_term(), f.constant_term());
    }

    #[test]
    fn scalar_product_of_sigma1_delta_n2() {
        // f = σ₁Δ = (L1+L2)(L1−L2) = L1² − L2²; ⟨f,f⟩ = (1/2!)[f f̄ Π]₁ = 2
        let f = LaurentPoly::from_terms(2, vec![(vec![2, 0], rat(1)), (vec![0, 2], rat(-1))]);
        let full = f.mul(&f.conjugate()).mul(&kernel(2));
        assert_eq!(full.constant_term() / rat(2), rat(2));
    }

    #[test]
    fn multi_roundtrip() {
        let m = MultiPoly::linear_form(&[rat(1), rat(-1)], rat(2));
        let l = LaurentPoly::from_multi(&m);
        assert_eq!(l.coeff(&[1, 0]), rat(1));
        assert_eq!(l.coeff(&[0, 1]), rat(-1));
        assert_eq!(l.constant_term(), rat(2));
    }
}
