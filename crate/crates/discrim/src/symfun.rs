//! Symmetric-function routes to the class coefficient for a single GL(n).
//!
//! For an integer weight λ (sorted decreasing internally) the product
//! `λ⁺ = λ · ∏_{i>j} (λ + L_i − L_j)` determines the class `c·σ₁` through
//! three independent expressions that must agree:
//!
//! * Jacobi: antisymmetrize λ⁺ over Sₙ, divide exactly by the Vandermonde,
//!   and read off the σ₁ multiple.
//! * Permanent: extract the signed coefficient sum of λ⁺ against the
//!   exponent pattern `μ = (n, n−2, n−3, …, 1, 0)`.
//! * Scalar product: pair λ⁺ with σ₁·Δ under the standard inner product on
//!   Laurent polynomials with kernel `∏_{i≠j} (1 − L_i/L_j)`.
//!
//! In all three, the degree of the dual variety is `−n·c/|λ|`, which
//! requires `|λ| ≠ 0` (the weight can always be shifted by a multiple of
//! `(1,…,1)` to arrange that). A multi-block variant of the permanent route
//! computes hyperdeterminant degrees for products of GL factors.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, MultiPoly};
use crate::rational::{factorial, rat, semifactorial, to_u64, Rational};

/// λ⁺ grows explosively with n; everything here is capped at this rank.
pub const RANK_CAP: usize = 6;

fn check_cap(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "weight must be nonempty".to_string(),
        ));
    }
    if n > RANK_CAP {
        return Err(Error::RankCap { n, cap: RANK_CAP });
    }
    Ok(())
}

fn sorted_desc(lam: &[i64]) -> Vec<i64> {
    let mut v = lam.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Sign `(−1)^{#equal pairs}` and stabilizer order `∏ mult!` of a weight.
pub fn eps_stab(lam: &[i64]) -> (i32, BigInt) {
    let v = sorted_desc(lam);
    let mut eps = 1i32;
    let mut stab = BigInt::one();
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        let m = j - i;
        if (m * (m - 1) / 2) % 2 == 1 {
            eps = -eps;
        }
        stab *= factorial(m);
        i = j;
    }
    (eps, stab)
}

/// The linear form `Σ λ_i L_i` for λ sorted decreasing.
fn weight_form(lam_desc: &[i64]) -> MultiPoly {
    let coeffs: Vec<Rational> = lam_desc.iter().map(|&c| rat(c)).collect();
    MultiPoly::linear_form(&coeffs, rat(0))
}

/// `λ⁺ = λ · ∏_{i>j} (λ + L_i − L_j)`, a homogeneous polynomial of degree
/// `C(n,2) + 1`.
pub fn lambda_plus(lam: &[i64]) -> Result<MultiPoly> {
    let n = lam.len();
    check_cap(n)?;
    let lam_desc = sorted_desc(lam);
    let form = weight_form(&lam_desc);
    let mut f = form.clone();
    for i in 0..n {
        for j in 0..i {
            let factor = form
                .add(&MultiPoly::variable(n, i))
                .sub(&MultiPoly::variable(n, j));
            f = f.mul(&factor);
        }
    }
    Ok(f)
}

/// Vandermonde `Δ = ∏_{i<j} (L_i − L_j)`.
pub fn delta(n: usize) -> MultiPoly {
    let mut d = MultiPoly::one(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let factor = MultiPoly::variable(n, i).sub(&MultiPoly::variable(n, j));
            d = d.mul(&factor);
        }
    }
    d
}

/// `σ₁ = Σ L_i`.
pub fn sigma1(n: usize) -> MultiPoly {
    MultiPoly::linear_form(&vec![rat(1); n], rat(0))
}

pub fn sigma1_delta(n: usize) -> MultiPoly {
    sigma1(n).mul(&delta(n))
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `J(f) = (Σ_w sgn(w)·w(f)) / Δ` — exact by construction whenever f is a
/// polynomial (the antisymmetrization is divisible by the Vandermonde).
pub fn jacobi_symmetrize(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.nvars();
    check_cap(n)?;
    let mut anti = MultiPoly::zero(n);
    for perm in (0..n).permutations(n) {
        let sgn = permutation_sign(&perm);
        let g = f.permute_vars(&perm);
        anti = if sgn > 0 { anti.add(&g) } else { anti.sub(&g) };
    }
    anti.exact_divide(&delta(n))
}

/// Class coefficient `c` with class `= c·σ₁`, via `c·σ₁ = −(ε/st)·J(λ⁺)`.
pub fn class_via_jacobi(lam: &[i64]) -> Result<Rational> {
    let n = lam.len();
    let j = jacobi_symmetrize(&lambda_plus(lam)?)?;
    let (eps, stab) = eps_stab(lam);
    let scaled = j.scale(&-Rational::new(BigInt::from(eps), stab));
    // must be an exact multiple of σ₁
    let c = scaled.coeff(&unit_exponent(n, 0));
    if scaled != sigma1(n).scale(&c) {
        return Err(Error::NotInvariantForm);
    }
    Ok(c)
}

fn unit_exponent(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    e[i] = 1;
    e
}

/// Signed coefficient extraction `P(f,ν) = Σ_{w∈Sₙ} sgn(w)·[L^k]f` with
/// `k_i = ν_{w(i)}`.
pub fn nu_permanent(f: &MultiPoly, nu: &[u32]) -> Rational {
    let n = f.nvars();
    debug_assert_eq!(nu.len(), n);
    let mut total = rat(0);
    for perm in (0..n).permutations(n) {
        let key: Vec<u32> = perm.iter().map(|&w| nu[w]).collect();
        let c = f.coeff(&key);
        if c.eq(&rat(0)) {
            continue;
        }
        total = if permutation_sign(&perm) > 0 {
            total + c
        } else {
            total - c
        };
    }
    total
}

/// The extraction pattern `μ = (n, n−2, n−3, …, 1, 0)`; the signed
/// coefficient of `L^μ` in `Σ_w sgn(w)·w(λ⁺)` equals the σ₁ multiple because
/// σ₁Δ carries `L^μ` with coefficient exactly 1.
pub fn mu_vec(n: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(n);
    v.push(n as u32);
    for k in (0..n.saturating_sub(1)).rev() {
        v.push(k as u32);
    }
    v
}

/// Class coefficient through the permanent route: `c = −(ε/st)·P(λ⁺, μ)`.
pub fn class_via_permanent(lam: &[i64]) -> Result<Rational> {
    let n = lam.len();
    check_cap(n)?;
    let p = nu_permanent(&lambda_plus(lam)?, &mu_vec(n));
    let (eps, stab) = eps_stab(lam);
    Ok(-Rational::new(BigInt::from(eps), stab) * p)
}

/// Inner-product kernel `Π = ∏_{i≠j} (1 − L_i/L_j)` as a Laurent polynomial.
fn kernel(n: usize) -> LaurentPoly {
    let mut pi = LaurentPoly::one(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut diff = vec![0i64; n];
            diff[i] = 1;
            diff[j] = -1;
            let factor = LaurentPoly::from_terms(n, vec![(vec![0; n], rat(1)), (diff, rat(-1))]);
            pi = pi.mul(&factor);
        }
    }
    pi
}

/// `⟨f,g⟩ = (1/n!)·[f·ḡ·Π]₀` computed as a double sum over the terms of f
/// and g with kernel lookups (never materializing the triple product).
pub fn scalar_product(f: &MultiPoly, g: &MultiPoly) -> Result<Rational> {
    if f.nvars() != g.nvars() {
        return Err(Error::VariableMismatch(f.nvars(), g.nvars()));
    }
    let n = f.nvars();
    check_cap(n)?;
    let pi = kernel(n);
    let lf = LaurentPoly::from_multi(f);
    let lg = LaurentPoly::from_multi(g);
    let mut total = rat(0);
    for (kf, cf) in lf.terms() {
        for (kg, cg) in lg.terms() {
            let diff: Vec<i64> = kg.iter().zip(kf).map(|(a, b)| a - b).collect();
            let k = pi.coeff(&diff);
            if k.eq(&rat(0)) {
                continue;
            }
            total += cf * cg * k;
        }
    }
    Ok(total / Rational::from(factorial(n)))
}

fn weight_sum(lam: &[i64]) -> Result<i64> {
    let s: i64 = lam.iter().sum();
    if s == 0 {
        return Err(Error::ZeroWeightSum);
    }
    Ok(s)
}

/// Degree from a class coefficient: `deg = −n·c/|λ|`.
fn degree_from_class(n: usize, lam_sum: i64, c: &Rational) -> Result<u64> {
    to_u64(&(rat(-(n as i64)) * c / rat(lam_sum)))
}

pub fn degree_via_jacobi(lam: &[i64]) -> Result<u64> {
    let s = weight_sum(lam)?;
    let c = class_via_jacobi(lam)?;
    degree_from_class(lam.len(), s, &c)
}

pub fn degree_via_permanent(lam: &[i64]) -> Result<u64> {
    let s = weight_sum(lam)?;
    let c = class_via_permanent(lam)?;
    degree_from_class(lam.len(), s, &c)
}

/// Degree through the scalar product:
/// `deg = ε/(|λ|·st) · n!/(2n−3)!! · ⟨λ⁺, σ₁Δ⟩`.
pub fn degree_via_scalar_product(lam: &[i64]) -> Result<u64> {
    let n = lam.len();
    let s = weight_sum(lam)?;
    let (eps, stab) = eps_stab(lam);
    let pairing = scalar_product(&lambda_plus(lam)?, &sigma1_delta(n))?;
    let scale = Rational::new(
        BigInt::from(eps) * factorial(n),
        rat(s).numer() * stab * semifactorial(2 * n as i64 - 3),
    );
    to_u64(&(scale * pairing))
}

/// Multi-block λ⁺ for a product of GL factors, each with highest weight
/// `(1,0,…,0)` in its own block.
fn lambda_plus_blocks(dims: &[usize]) -> MultiPoly {
    let n: usize = dims.iter().sum();
    let mut coeffs = vec![rat(0); n];
    let mut off = 0;
    for &d in dims {
        coeffs[off] = rat(1);
        off += d;
    }
    let form = MultiPoly::linear_form(&coeffs, rat(0));
    let mut f = form.clone();
    let mut off = 0;
    for &d in dims {
        for i in 0..d {
            for j in 0..i {
                let factor = form
                    .add(&MultiPoly::variable(n, off + i))
                    .sub(&MultiPoly::variable(n, off + j));
                f = f.mul(&factor);
            }
        }
        off += d;
    }
    f
}

/// Degree of the hyperdeterminant hypersurface for `GL(d_1)×…×GL(d_k)` acting
/// on the tensor product of the standard representations, via the block
/// permanent. Every block's extraction must give the same degree.
pub fn hyperdet_degree_permanent(dims: &[usize]) -> Result<u64> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidParameter(
            "block dimensions must be positive".to_string(),
        ));
    }
    let total_degree: usize = dims.iter().map(|&d| d * (d - 1) / 2).sum::<usize>() + 1;
    if total_degree > 16 {
        return Err(Error::RankCap {
            n: total_degree,
            cap: 16,
        });
    }
    let f = lambda_plus_blocks(dims);
    let mut eps = 1i32;
    let mut stab = BigInt::one();
    for &d in dims {
        if ((d - 1) * (d - 2) / 2) % 2 == 1 {
            eps = -eps;
        }
        stab *= factorial(d - 1);
    }
    let perms_per_block: Vec<Vec<Vec<usize>>> = dims
        .iter()
        .map(|&d| (0..d).permutations(d).collect())
        .collect();
    let mut common: Option<u64> = None;
    for (u, &du) in dims.iter().enumerate() {
        // block u carries the σ₁-shifted pattern, the others the plain
        // staircase
        let targets: Vec<Vec<u32>> = dims
            .iter()
            .enumerate()
            .map(|(v, &dv)| {
                if v == u {
                    mu_vec(dv)
                } else {
                    (0..dv as u32).rev().collect()
                }
            })
            .collect();
        let mut tot = rat(0);
        for tuple in perms_per_block.iter().multi_cartesian_product() {
            let mut key = Vec::with_capacity(f.nvars());
            let mut sgn = 1i32;
            for (b, w) in tuple.iter().enumerate() {
                sgn *= permutation_sign(w);
                key.extend(w.iter().map(|&i| targets[b][i]));
            }
            let c = f.coeff(&key);
            if c.eq(&rat(0)) {
                continue;
            }
            tot = if sgn > 0 { tot + c } else { tot - c };
        }
        let c = Rational::new(BigInt::from(eps), stab.clone()) * tot;
        let deg = to_u64(&(rat(du as i64) * c))?;
        match common {
            None => common = Some(deg),
            Some(prev) if prev == deg => {}
            Some(prev) => {
                return Err(Error::MethodDisagreement {
                    left_name: "first block extraction",
                    left: prev.to_string(),
                    right_name: "later block extraction",
                    right: deg.to_string(),
                });
            }
        }
    }
    Ok(common.expect("at least one block"))
}
