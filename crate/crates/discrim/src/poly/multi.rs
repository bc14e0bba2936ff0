use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, rat, Rational};

/// Exponent vector ordered by graded lexicographic order (total degree first,
/// then lexicographic), so the maximal map key is the grlex leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, den: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&den.0).map(|(a, b)| a - b).collect())
    }

    fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored; every exponent vector has length
/// `nvars`. Mixing polynomials with different variable counts is a
/// programming error and panics; exact division reports it as `Err`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, rat(1))
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial(e), rat(1));
        p
    }

    /// `Σ coeffs[i]·v_i + constant`.
    pub fn linear_form(coeffs: &[Rational], constant: Rational) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::constant(nvars, constant);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; nvars];
                e[i] = 1;
                p.terms.insert(Monomial(e), c.clone());
            }
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::total_degree)
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        assert_eq!(
            exponents.len(),
            self.nvars,
            "exponent vector length mismatch"
        );
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(|| rat(0))
    }

    /// Terms in descending grlex order (total degree, then lexicographic).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().rev().map(|(m, c)| (m.exponents(), c))
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.product(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point length mismatch");
        // Cache powers per variable up to the maximum exponent in use.
        let mut max_exp = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let powers: Vec<Vec<Rational>> = point
            .iter()
            .zip(&max_exp)
            .map(|(x, &top)| {
                let mut col = Vec::with_capacity(top as usize + 1);
                col.push(rat(1));
                for _ in 0..top {
                    col.push(col.last().unwrap() * x);
                }
                col
            })
            .collect();
        let mut acc = rat(0);
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term *= &powers[i][e as usize];
                }
            }
            acc += term;
        }
        acc
    }

    /// Exact quotient under grlex leading-term elimination; nonzero remainder
    /// is a hard error.
    pub fn exact_divide(&self, den: &MultiPoly) -> Result<MultiPoly> {
        if self.nvars != den.nvars {
            return Err(Error::VariableMismatch(self.nvars, den.nvars));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dm, dc) = den.terms.iter().next_back().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            if !dm.divides(rm) {
                return Err(Error::InexactDivision);
            }
            let qm = rm.quotient(dm);
            let qc = rc / dc;
            for (m, c) in &den.terms {
                rem.add_term(qm.product(m), -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Variable relabelling: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.nvars, "permutation length mismatch");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; self.nvars];
            for (i, &ei) in m.exponents().iter().enumerate() {
                e[perm[i]] += ei;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Substitute `v_i ↦ v_i + shifts[i]` for every variable.
    pub fn shift_vars(&self, shifts: &[Rational]) -> MultiPoly {
        assert_eq!(shifts.len(), self.nvars, "shift vector length mismatch");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            // Expand ∏ (v_i + s_i)^{e_i} by binomials, one variable at a time.
            let mut partial: Vec<(Vec<u32>, Rational)> = vec![(vec![0; self.nvars], c.clone())];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if shifts[i].is_zero() {
                    for (expo, _) in &mut partial {
                        expo[i] = e;
                    }
                    continue;
                }
                let mut spow = rat(1); // shifts[i]^(e-k), built from k = e downward
                let mut binoms = Vec::with_capacity(e as usize + 1);
                for k in (0..=e).rev() {
                    let b = Rational::from(binomial(e as i64, k as i64));
                    binoms.push((k, b * &spow));
                    spow *= &shifts[i];
                }
                let mut next = Vec::with_capacity(partial.len() * binoms.len());
                for (expo, coef) in &partial {
                    for (k, bc) in &binoms {
                        let mut e2 = expo.clone();
                        e2[i] = *k;
                        next.push((e2, coef * bc));
                    }
                }
                partial = next;
            }
            for (e2, c2) in partial {
                out.add_term(Monomial(e2), c2);
            }
        }
        out
    }

    /// The coefficient of `v_var^power` as a polynomial in the remaining
    /// variables (slot `var` zeroed, variable count unchanged).
    pub fn coeff_of_power(&self, var: usize, power: u32) -> MultiPoly {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.exponents()[var] == power {
                let mut e = m.exponents().to_vec();
                e[var] = 0;
                out.add_term(Monomial(e), c.clone());
            }
        }
        out
    }

    /// True iff every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Render with the given variable names, terms in descending grlex order.
    pub fn render(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars, "name list length mismatch");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{}", names[i], e)
                    }
                })
                .collect();
            let abs = c.abs();
            let lead = if idx == 0 {
                if c.is_negative() {
                    "-".to_string()
                } else {
                    String::new()
                }
            } else if c.is_negative() {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            out.push_str(&lead);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", abs, mono.join("*")));
            }
        }
        out
    }

    /// Render with numbered variables `x1..xn` (or any prefix).
    pub fn render_prefixed(&self, prefix: &str) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("{prefix}{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.render(&refs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn var(n: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(n, i)
    }

    /// ∏_{i<j} (L_i − L_j)
    fn vandermonde(n: usize) -> MultiPoly {
        let mut f = MultiPoly::one(n);
        for i in 0..n {
            for j in (i + 1)..n {
                f = f.mul(&var(n, i).sub(&var(n, j)));
            }
        }
        f
    }

    #[test]
    fn difference_of_squares() {
        let l1 = var(2, 0);
        let l2 = var(2, 1);
        let prod = l1.sub(&l2).mul(&l1.add(&l2));
        let expected = l1.mul(&l1).sub(&l2.mul(&l2));
        assert_eq!(prod, expected);
        assert_eq!(prod.mul(&MultiPoly::one(2)), prod);
    }

    #[test]
    fn vandermonde_n3_shape_and_eval() {
        let d = vandermonde(3);
        assert_eq!(d.num_terms(), 6);
        assert!(d.terms_desc().all(|(_, c)| c == &rat(1) || c == &rat(-1)));
        // Δ(3,2,1) = (3−2)(3−1)(2−1) = 2
        assert_eq!(d.eval(&[rat(3), rat(2), rat(1)]), rat(2));
        // constant term of any f is f at the origin
        assert_eq!(d.eval(&[rat(0), rat(0), rat(0)]), d.coeff(&[0, 0, 0]));
    }

    #[test]
    fn exact_division_basics() {
        let l1 = var(2, 0);
        let l2 = var(2, 1);
        let num = l1.mul(&l1).sub(&l2.mul(&l2));
        let q = num.exact_divide(&l1.sub(&l2)).unwrap();
        assert_eq!(q, l1.add(&l2));
        // division by a constant and by one
        assert_eq!(num.exact_divide(&MultiPoly::one(2)).unwrap(), num);
        assert_eq!(
            num.exact_divide(&MultiPoly::constant(2, rat(2))).unwrap(),
            num.scale(&ratio(1, 2))
        );
    }

    #[test]
    fn inexact_division_is_an_error() {
        let l1 = var(2, 0);
        let l2 = var(2, 1);
        let num = l1.mul(&l1).add(&l2);
        assert!(matches!(
            num.exact_divide(&l1.sub(&l2)),
            Err(Error::InexactDivision)
        ));
        assert!(matches!(
            num.exact_divide(&MultiPoly::zero(2)),
            Err(Error::DivisionByZero)
        ));
        let three_vars = MultiPoly::one(3);
        assert!(matches!(
            num.exact_divide(&three_vars),
            Err(Error::VariableMismatch(2, 3))
        ));
    }

    #[test]
    fn division_roundtrip() {
        let n = 3;
        let f = MultiPoly::linear_form(&[rat(2), rat(-1), rat(3)], rat(1))
            .mul(&MultiPoly::linear_form(&[rat(1), rat(1), rat(0)], rat(-2)));
        let g = vandermonde(n);
        let prod = f.mul(&g);
        assert_eq!(prod.exact_divide(&g).unwrap(), f);
        assert_eq!(prod.exact_divide(&f).unwrap(), g);
    }

    #[test]
    fn eval_is_a_homomorphism() {
        let f = MultiPoly::linear_form(&[rat(2), rat(-7)], rat(3)).pow(2);
        let g = MultiPoly::linear_form(&[rat(1), rat(4)], rat(0));
        let pt = [ratio(5, 3), rat(-2)];
        assert_eq!(f.mul(&g).eval(&pt), f.eval(&pt) * g.eval(&pt));
        assert_eq!(f.add(&g).eval(&pt), f.eval(&pt) + g.eval(&pt));
    }

    #[test]
    fn shift_vars_expands_binomially() {
        // (y1)^2 with y1 = x1 + 1 → x1^2 + 2x1 + 1
        let f = var(2, 0).pow(2);
        let g = f.shift_vars(&[rat(1), rat(1)]);
        assert_eq!(g.coeff(&[2, 0]), rat(1));
        assert_eq!(g.coeff(&[1, 0]), rat(2));
        assert_eq!(g.coeff(&[0, 0]), rat(1));
        assert_eq!(g.num_terms(), 3);
        // shifting back is the inverse
        assert_eq!(g.shift_vars(&[rat(-1), rat(-1)]), f);
    }

    #[test]
    fn permute_and_extract() {
        // f = a^2 b in variables (t, a, b) = (v0, v1, v2): t^0 a^2 b^1
        let f = var(3, 1).pow(2).mul(&var(3, 2));
        let swapped = f.permute_vars(&[0, 2, 1]);
        assert_eq!(swapped, var(3, 2).pow(2).mul(&var(3, 1)));
        // coefficient of t^2 in (1 + t*a)^2 = a^2
        let p = MultiPoly::one(3).add(&var(3, 0).mul(&var(3, 1))).pow(2);
        assert_eq!(p.coeff_of_power(0, 2), var(3, 1).pow(2));
    }

    #[test]
    fn rendering_is_grlex_descending() {
        let f = MultiPoly::linear_form(&[rat(2), rat(0)], rat(1))
            .mul(&MultiPoly::linear_form(&[rat(0), rat(3)], rat(-1)));
        // (2x1+1)(3x2−1) = 6x1x2 − 2x1 + 3x2 − 1
        assert_eq!(f.render_prefixed("x"), "6*x1*x2 - 2*x1 + 3*x2 - 1");
        assert_eq!(MultiPoly::zero(2).render_prefixed("x"), "0");
        let g = var(2, 0).pow(2).sub(&var(2, 1));
        assert_eq!(g.render(&["a", "b"]), "a^2 - b");
    }
}
