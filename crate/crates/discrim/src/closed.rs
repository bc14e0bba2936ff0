//! Closed-form degree formulas for classical families, used as independent
//! oracles against the localization engine.
//!
//! Each function validates its parameters, computes in exact arithmetic, and
//! returns the degree as a `u64` (errors on overflow rather than wrapping).

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::engine::{self, DegreeReport, Method};
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, UniPoly};
use crate::rational::{binomial, factorial, rat, to_u64, Rational};
use crate::roots::{FactorType, RootSystem, Weight};

fn big_to_u64(v: BigInt) -> Result<u64> {
    to_u64(&Rational::from(v))
}

/// Dual degree of the Veronese of P^{n−1} in degree a (weight `a·L₁` for
/// GL(n)): `n(a−1)^{n−1}`.
pub fn boole_degree(n: usize, a: i64) -> Result<u64> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".to_string()));
    }
    if a < 1 {
        return Err(Error::InvalidParameter("a must be at least 1".to_string()));
    }
    big_to_u64(BigInt::from(n) * BigInt::from(a - 1).pow(n as u32 - 1))
}

/// Dual degree of the Plücker embedding of `Gr_k(Cⁿ)` via the subset sum
/// `Σ_S l(S)·∏_{i∈S, j∉S} (l(S)+j−i)/(i−j)` over k-subsets S of {1..n},
/// `l(S) = Σ_{i∈S} i`, scaled by `2/(k(n+1))`.
pub fn grassmannian_degree(n: usize, k: usize) -> Result<u64> {
    if k < 1 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k < n, got k = {k}, n = {n}"
        )));
    }
    let mut total = rat(0);
    for s in (1..=n as i64).combinations(k) {
        let ls: i64 = s.iter().sum();
        let mut term = rat(ls);
        for &i in &s {
            for j in 1..=n as i64 {
                if s.contains(&j) {
                    continue;
                }
                term *= Rational::new(BigInt::from(ls + j - i), BigInt::from(i - j));
            }
        }
        total += term;
    }
    let scale = Rational::new(BigInt::from(2), BigInt::from(k) * BigInt::from(n + 1));
    to_u64(&(scale * total))
}

/// Dual degree of `Gr₂(Cⁿ)` (weight `L₁+L₂`): `n/2` for even n, `0` for odd
/// n (no dual hypersurface).
pub fn holme_gr2(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".to_string()));
    }
    Ok(if n.is_multiple_of(2) { n as u64 / 2 } else { 0 })
}

/// Quadratic data `A = a(a−1)`, `B = a+b−2ab−1`, `C = b(b−1)` steering the
/// two-parameter family below.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PabQuadratic {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

pub fn pab_quadratic(a: i64, b: i64) -> PabQuadratic {
    PabQuadratic {
        a: a * (a - 1),
        b: a + b - 2 * a * b - 1,
        c: b * (b - 1),
    }
}

fn check_gamma_params(n: usize, a: i64, b: i64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".to_string()));
    }
    if a < 1 || b < 1 {
        return Err(Error::InvalidParameter(
            "a and b must be at least 1".to_string(),
        ));
    }
    Ok(())
}

/// Degree for the weight `(a+b, b, …, b, 0)` of GL(n):
/// `n!(a+b−1)·Σ_{i≥1} A^{i−1}C^{i−1}(−B)^{n−2i}/(i!(i−1)!(n−2i)!)`.
pub fn gammaab_degree(n: usize, a: i64, b: i64) -> Result<u64> {
    check_gamma_params(n, a, b)?;
    let q = pab_quadratic(a, b);
    let (qa, qb, qc) = (BigInt::from(q.a), BigInt::from(q.b), BigInt::from(q.c));
    let mut total = rat(0);
    for i in 1..=(n / 2) {
        let num = qa.pow(i as u32 - 1) * qc.pow(i as u32 - 1) * (-&qb).pow((n - 2 * i) as u32);
        let den = factorial(i) * factorial(i - 1) * factorial(n - 2 * i);
        total += Rational::new(num, den);
    }
    to_u64(&(Rational::from(factorial(n) * BigInt::from(a + b - 1)) * total))
}

/// The same degree through the divided-difference form: with
/// `P = (at−t−b)(at−b+1)` symbolic in (t,a,b), take `[tⁿ]P^{n−1}`,
/// antisymmetrize in (a,b), divide exactly by (a−b), and evaluate;
/// the degree is `(−1)ⁿ·n` times that value.
pub fn gammaab_degree_dd(n: usize, a: i64, b: i64) -> Result<u64> {
    check_gamma_params(n, a, b)?;
    // variables: 0 = t, 1 = a, 2 = b
    let term1 = MultiPoly::from_terms(
        3,
        vec![
            (vec![1, 1, 0], rat(1)),
            (vec![1, 0, 0], rat(-1)),
            (vec![0, 0, 1], rat(-1)),
        ],
    );
    let term2 = MultiPoly::from_terms(
        3,
        vec![
            (vec![1, 1, 0], rat(1)),
            (vec![0, 0, 1], rat(-1)),
            (vec![0, 0, 0], rat(1)),
        ],
    );
    let q = term1.mul(&term2).pow(n as u32 - 1);
    let qn = q.coeff_of_power(0, n as u32);
    let swapped = qn.permute_vars(&[0, 2, 1]);
    let den = MultiPoly::variable(3, 1).sub(&MultiPoly::variable(3, 2));
    let dd = qn.sub(&swapped).exact_divide(&den)?;
    let val = dd.eval(&[rat(0), rat(a), rat(b)]);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    to_u64(&(rat(sign * n as i64) * val))
}

/// Degree for the two-row weight `(a, b, 0, …, 0)` of GL(n), `a > b ≥ 1`:
/// `n/(a+b)` times the tⁿ-coefficient of
/// `(b+(a−1)t)^{n−1}(b−1+at)^{n−1}
///  − (a−1+bt)^{n−1}(a−1+(b+1)t)·[(a+(b−1)t)^{n−1} − (−1)^{n−1}]/(a+1+(b−1)t)`.
pub fn abn_degree(n: usize, a: i64, b: i64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".to_string()));
    }
    if !(a > b && b >= 1) {
        return Err(Error::InvalidParameter(
            "need a > b >= 1 for the two-row family".to_string(),
        ));
    }
    let part_a = UniPoly::linear(rat(b), rat(a - 1))
        .pow(n - 1)
        .mul(&UniPoly::linear(rat(b - 1), rat(a)).pow(n - 1));
    let sign = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
    let sn = UniPoly::linear(rat(a), rat(b - 1))
        .pow(n - 1)
        .sub(&UniPoly::constant(rat(sign)));
    let div = sn.exact_divide(&UniPoly::linear(rat(a + 1), rat(b - 1)))?;
    let part_b = UniPoly::linear(rat(a - 1), rat(b))
        .pow(n - 1)
        .mul(&UniPoly::linear(rat(a - 1), rat(b + 1)))
        .mul(&div);
    let cn = part_a.sub(&part_b).coeff(n);
    to_u64(&(Rational::new(BigInt::from(n), BigInt::from(a + b)) * cn))
}

/// Independent closed form for the two-row family at `b = 1`:
/// `n/(a+1)²·((n−1)a^{n+1} − (n+1)a^{n−1} + 2(−1)^{n−1})`.
pub fn tevelev_two_row(n: usize, a: i64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".to_string()));
    }
    if a < 1 {
        return Err(Error::InvalidParameter("a must be at least 1".to_string()));
    }
    let aa = BigInt::from(a);
    let sign = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
    let inner = BigInt::from(n as i64 - 1) * aa.pow(n as u32 + 1)
        - BigInt::from(n as i64 + 1) * aa.pow(n as u32 - 1)
        + BigInt::from(2 * sign);
    let scale = Rational::new(BigInt::from(n), BigInt::from((a + 1) * (a + 1)));
    to_u64(&(scale * Rational::from(inner)))
}

/// Degree for the equal two-row weight `(a, a, 0, …, 0)` of GL(n):
/// `n/(2a)` times the tⁿ-coefficient of
/// `(t−1)(a−1+at)^{n−1}·[(a+(a−1)t)^{n−1} − (−1)^{n−1}]/(a+1+(a−1)t)`.
pub fn aa_degree(n: usize, a: i64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".to_string()));
    }
    if a < 1 {
        return Err(Error::InvalidParameter("a must be at least 1".to_string()));
    }
    let q1 = UniPoly::linear(rat(a - 1), rat(a)).pow(n - 1);
    let sign = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
    let sn = UniPoly::linear(rat(a), rat(a - 1))
        .pow(n - 1)
        .sub(&UniPoly::constant(rat(sign)));
    let div = sn.exact_divide(&UniPoly::linear(rat(a + 1), rat(a - 1)))?;
    let expr = UniPoly::linear(rat(-1), rat(1)).mul(&q1).mul(&div);
    to_u64(&(Rational::new(BigInt::from(n), BigInt::from(2 * a)) * expr.coeff(n)))
}

/// Triangular table of the bracket numbers: Pascal recursion seeded with
/// `⟨n,0⟩ = 1` (n even) or `−2` (n odd) and `⟨n,n⟩ = 1`. Construction
/// cross-checks every entry against the independent alternating-binomial
/// form `⟨n,k⟩ = C(n,k) + 3·Σ_{i=1}^{n} (−1)^i C(n−i,k)`.
#[derive(Debug, Clone)]
pub struct AngleBracketTable {
    rows: Vec<Vec<i64>>,
}

impl AngleBracketTable {
    pub fn new(max_n: usize) -> Result<Self> {
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let v = if k == 0 {
                    if n % 2 == 0 {
                        1
                    } else {
                        -2
                    }
                } else if k == n {
                    1
                } else {
                    rows[n - 1][k] + rows[n - 1][k - 1]
                };
                row.push(v);
            }
            rows.push(row);
        }
        // independent recomputation of every entry
        for (n, row) in rows.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                let mut alt = binomial(n as i64, k as i64);
                for i in 1..=n as i64 {
                    let c = binomial(n as i64 - i, k as i64) * 3;
                    if i % 2 == 0 {
                        alt += c;
                    } else {
                        alt -= c;
                    }
                }
                if alt != BigInt::from(v) {
                    return Err(Error::MethodDisagreement {
                        left_name: "pascal bracket",
                        left: v.to_string(),
                        right_name: "alternating binomial bracket",
                        right: alt.to_string(),
                    });
                }
            }
        }
        Ok(AngleBracketTable { rows })
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[i64] {
        &self.rows[n]
    }

    /// `⟨n,k⟩`, with 0 outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> i64 {
        if k > n {
            0
        } else {
            self.rows[n][k]
        }
    }
}

/// Dual degree of the Plücker embedding of `Gr₃(Cⁿ)`:
/// `(n/3)·Σ (−1)^{k+l+n−1} ⟨n−1,k⟩⟨n−1,l⟩⟨k+l−5,k−1⟩` over
/// `2 ≤ k ≤ n−1`, `4 ≤ l ≤ n−1`, `k+l ≥ n+1`.
pub fn gr3_degree(n: usize) -> Result<u64> {
    if n < 4 {
        return Err(Error::InvalidParameter("n must be at least 4".to_string()));
    }
    let table = AngleBracketTable::new(2 * n)?;
    let mut total = BigInt::zero();
    for k in 2..n {
        for l in 4..n {
            if k + l < n + 1 {
                continue;
            }
            let term = BigInt::from(table.get(n - 1, k))
                * BigInt::from(table.get(n - 1, l))
                * BigInt::from(table.get(k + l - 5, k - 1));
            if (k + l + n - 1).is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    to_u64(&Rational::new(BigInt::from(n) * total, BigInt::from(3)))
}

/// Degree of the hyperdeterminant hypersurface of a tensor format
/// `d_1 × … × d_k`. With dimensions sorted and `m` the largest: if
/// `m−1` exceeds the sum of the other `d_u−1` the dual is not a
/// hypersurface; at the boundary the degree is `m!/∏(d_u−1)!`; below it the
/// localization engine takes over on `GL(d_1)×…×GL(d_k)`.
pub fn hyperdet_degree(dims: &[usize], seed: u64) -> Result<DegreeReport> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidParameter(
            "tensor format needs positive dimensions".to_string(),
        ));
    }
    let mut sorted = dims.to_vec();
    sorted.sort_unstable();
    let largest = *sorted.last().expect("nonempty");
    let rest_sum: usize = sorted[..sorted.len() - 1].iter().map(|&d| d - 1).sum();
    let mut epsilon = 1i32;
    let mut stabilizer = BigInt::one();
    for &d in dims {
        let zero_pairs = if d >= 3 { (d - 1) * (d - 2) / 2 } else { 0 };
        if zero_pairs % 2 == 1 {
            epsilon = -epsilon;
        }
        stabilizer *= factorial(d - 1);
    }
    if largest - 1 > rest_sum {
        return Ok(DegreeReport {
            degree: 0,
            is_hypersurface: false,
            epsilon,
            stabilizer_order: big_to_u64(stabilizer)?,
            points_used: 0,
            method: Method::ClosedForm,
            seeds: Vec::new(),
        });
    }
    if largest - 1 == rest_sum {
        let mut deg = factorial(largest);
        for &d in &sorted[..sorted.len() - 1] {
            deg /= factorial(d - 1);
        }
        return Ok(DegreeReport {
            degree: big_to_u64(deg)?,
            is_hypersurface: true,
            epsilon,
            stabilizer_order: big_to_u64(stabilizer)?,
            points_used: 0,
            method: Method::ClosedForm,
            seeds: Vec::new(),
        });
    }
    let factors: Vec<(FactorType, usize)> = dims.iter().map(|&d| (FactorType::Gl, d)).collect();
    let rs = RootSystem::build(&factors)?;
    let mut coords = Vec::with_capacity(rs.ambient_dim());
    for &d in dims {
        coords.extend(std::iter::repeat_n(0i64, d - 1));
        coords.push(1);
    }
    engine::degree(&rs, &Weight::from_ints(&coords), seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boole_values() {
        for a in 1..=5 {
            assert_eq!(boole_degree(2, a).unwrap(), 2 * (a as u64 - 1));
        }
        assert_eq!(boole_degree(4, 1).unwrap(), 0);
        assert_eq!(boole_degree(3, 3).unwrap(), 12);
        assert_eq!(boole_degree(1, 5).unwrap(), 1);
        assert!(boole_degree(3, 0).is_err());
    }

    #[test]
    fn grassmannian_values() {
        assert_eq!(grassmannian_degree(4, 2).unwrap(), 2);
        assert_eq!(grassmannian_degree(8, 3).unwrap(), 16);
        assert_eq!(grassmannian_degree(5, 2).unwrap(), 0);
        assert_eq!(grassmannian_degree(6, 2).unwrap(), 3);
        // complementary Grassmannians share the degree
        assert_eq!(grassmannian_degree(8, 5).unwrap(), 16);
        assert_eq!(grassmannian_degree(6, 1).unwrap(), 0);
        assert!(grassmannian_degree(4, 4).is_err());
    }

    #[test]
    fn holme_values() {
        for n in 2..=9 {
            let d = holme_gr2(n).unwrap();
            assert_eq!(d, if n % 2 == 0 { n as u64 / 2 } else { 0 });
            if n >= 3 {
                assert_eq!(d, grassmannian_degree(n, 2).unwrap());
            }
        }
    }

    #[test]
    fn gammaab_small_cases() {
        // n = 3 collapses to 6(a+b−1)(2ab−a−b+1)
        for a in 1..=5 {
            for b in 1..=5 {
                let expected = 6 * (a + b - 1) * (2 * a * b - a - b + 1);
                assert_eq!(gammaab_degree(3, a, b).unwrap(), expected as u64);
            }
        }
        // a = b = 1 is the adjoint family: n(n−1)
        for n in 3..=8 {
            assert_eq!(gammaab_degree(n, 1, 1).unwrap(), (n * (n - 1)) as u64);
        }
        // symmetry in (a,b)
        for n in [3, 4, 5, 6] {
            for a in 1..=4 {
                for b in 1..=4 {
                    assert_eq!(
                        gammaab_degree(n, a, b).unwrap(),
                        gammaab_degree(n, b, a).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn gammaab_divided_difference_agrees() {
        for n in [3, 4, 5, 7] {
            for (a, b) in [(1, 1), (2, 1), (3, 2), (4, 4)] {
                assert_eq!(
                    gammaab_degree_dd(n, a, b).unwrap(),
                    gammaab_degree(n, a, b).unwrap(),
                    "n={n} a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn two_row_family() {
        assert_eq!(abn_degree(3, 2, 1).unwrap(), 6);
        for n in 3..=7 {
            for a in 2..=5 {
                assert_eq!(
                    abn_degree(n, a, 1).unwrap(),
                    tevelev_two_row(n, a).unwrap(),
                    "n={n} a={a}"
                );
            }
        }
        assert!(abn_degree(4, 2, 2).is_err());
    }

    #[test]
    fn equal_two_row_family() {
        // a = 1 degenerates to the Plücker of Gr₂
        for n in 3..=8 {
            assert_eq!(aa_degree(n, 1).unwrap(), holme_gr2(n).unwrap(), "n={n}");
        }
        assert_eq!(aa_degree(2, 3).unwrap(), 1);
    }

    #[test]
    fn bracket_table_rows() {
        let t = AngleBracketTable::new(12).unwrap();
        assert_eq!(t.row(0), &[1]);
        assert_eq!(t.row(1), &[-2, 1]);
        assert_eq!(t.row(2), &[1, -1, 1]);
        assert_eq!(t.row(3), &[-2, 0, 0, 1]);
        assert_eq!(t.row(4), &[1, -2, 0, 1, 1]);
        assert_eq!(t.row(5), &[-2, -1, -2, 1, 2, 1]);
        assert_eq!(t.get(3, 7), 0);
    }

    #[test]
    fn gr3_values() {
        let expected = [(5, 0), (6, 4), (7, 7), (8, 16), (9, 120)];
        for (n, d) in expected {
            assert_eq!(gr3_degree(n).unwrap(), d, "n={n}");
        }
        assert_eq!(gr3_degree(8).unwrap(), grassmannian_degree(8, 3).unwrap());
    }

    #[test]
    fn hyperdet_three_branches() {
        let boundary = hyperdet_degree(&[2, 2, 3], 5).unwrap();
        assert_eq!(boundary.degree, 6);
        assert!(boundary.is_hypersurface);
        assert_eq!(boundary.method, Method::ClosedForm);

        let beyond = hyperdet_degree(&[2, 2, 4], 5).unwrap();
        assert_eq!(beyond.degree, 0);
        assert!(!beyond.is_hypersurface);

        let interior = hyperdet_degree(&[2, 2, 2], 5).unwrap();
        assert_eq!(interior.degree, 4);
        assert_eq!(interior.method, Method::Orbit);

        // square matrices sit exactly on the boundary: the determinant
        assert_eq!(hyperdet_degree(&[3, 3], 5).unwrap().degree, 3);
        assert_eq!(hyperdet_degree(&[2, 2], 5).unwrap().degree, 2);
    }
}
