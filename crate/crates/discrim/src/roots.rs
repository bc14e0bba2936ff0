//! Root data for products of classical factors (types A, B, C, D, G₂, and
//! reductive GL(n)), with Weyl orbit and Weyl group enumeration.
//!
//! Conventions: every factor acts on its own block of ambient coordinates.
//! A-type and GL factors use GL-style coordinates with simple roots
//! `α_i = L_{i+1} − L_i`, so "dominant" means weakly increasing coordinates.
//! B/C/D use the analogous presentations with the (co)short root first
//! (B: `L₁, L₂−L₁, …`; C: `2L₁, L₂−L₁, …`; D: `L₁+L₂, L₂−L₁, …`), and G₂
//! uses the 3-coordinate presentation with simple roots `L₂−L₁` and
//! `L₁−2L₂+L₃`. The invariant pairing is the standard Euclidean form on
//! ambient coordinates, which is Weyl-invariant for all of these.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, rat, Rational};

/// Factor types for [`RootSystem::build`]. `Gl(n)` carries the roots of
/// `A_{n−1}` on `n` coordinates but keeps the central direction, so weights
/// with nonzero coordinate sum are supported directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorType {
    A,
    B,
    C,
    D,
    G2,
    Gl,
}

impl FactorType {
    pub fn label(self) -> &'static str {
        match self {
            FactorType::A => "A",
            FactorType::B => "B",
            FactorType::C => "C",
            FactorType::D => "D",
            FactorType::G2 => "G2",
            FactorType::Gl => "GL",
        }
    }
}

/// Exact vector in ambient coordinates: weights, roots, and anything else
/// living in the (dual) Cartan algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![rat(0); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Weight) -> Rational {
        self.eval_at(other.coords())
    }

    /// Evaluates the linear functional `Σ coords_i · point_i`.
    pub fn eval_at(&self, point: &[Rational]) -> Rational {
        debug_assert_eq!(self.0.len(), point.len());
        self.0
            .iter()
            .zip(point)
            .fold(rat(0), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Trichotomy of the invariant pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingSign {
    Negative,
    Zero,
    Positive,
}

/// A Weyl group element, stored as a word in simple reflections applied left
/// to right (the element is `s_{word[k−1]} ∘ … ∘ s_{word[0]}`). `sign` is the
/// determinant of the induced orthogonal map: every simple reflection has
/// determinant −1, so the sign is (−1) to the word length; the unit tests
/// cross-check this against an explicit matrix determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub sign: i32,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement {
            word: Vec::new(),
            sign: 1,
        }
    }

    pub fn apply(&self, rs: &RootSystem, v: &Weight) -> Weight {
        let mut out = v.clone();
        for &i in &self.word {
            out = rs.reflect_simple(&out, i);
        }
        out
    }

    /// Applies the inverse element (the reversed word; reflections are
    /// involutions).
    pub fn apply_inverse(&self, rs: &RootSystem, v: &Weight) -> Weight {
        let mut out = v.clone();
        for &i in self.word.iter().rev() {
            out = rs.reflect_simple(&out, i);
        }
        out
    }
}

/// One point of a Weyl orbit: the weight, its transported tangent set
/// `T_μ = w(T_λ)`, and a witness `w` with `wλ = μ`.
#[derive(Debug, Clone)]
pub struct OrbitPoint {
    pub weight: Weight,
    pub tangent_set: Vec<Weight>,
    pub witness: WeylElement,
}

/// The full orbit `Wλ` of a dominant weight, with per-point tangent data.
#[derive(Debug, Clone)]
pub struct OrbitTable {
    pub points: Vec<OrbitPoint>,
}

impl OrbitTable {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Enumeration bounds guarding the BFS routines.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub orbit_bound: usize,
    pub weyl_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            orbit_bound: 1_000_000,
            weyl_bound: 1_000_000,
        }
    }
}

/// Root data for a product of factors acting on disjoint coordinate blocks.
#[derive(Debug, Clone)]
pub struct RootSystem {
    factors: Vec<(FactorType, usize)>,
    ambient_dim: usize,
    blocks: Vec<(usize, usize)>,
    simple_roots: Vec<Weight>,
    simple_root_factor: Vec<usize>,
    negative_roots: Vec<Weight>,
    limits: Limits,
}

/// Local root data of one factor: (ambient size, simple roots, negative roots).
type LocalRoots = (usize, Vec<Vec<Rational>>, Vec<Vec<Rational>>);

fn factor_roots(typ: FactorType, rank: usize) -> Result<LocalRoots> {
    let invalid = |reason: &'static str| Error::InvalidRank {
        label: typ.label().to_string(),
        rank,
        reason,
    };
    if rank == 0 {
        return Err(invalid("rank must be at least 1"));
    }
    let e = |i: usize, n: usize| {
        let mut v = vec![rat(0); n];
        v[i] = rat(1);
        v
    };
    let diff = |i: usize, j: usize, n: usize| {
        // L_i − L_j
        let mut v = vec![rat(0); n];
        v[i] = rat(1);
        v[j] = rat(-1);
        v
    };
    let sum = |i: usize, j: usize, n: usize| {
        let mut v = vec![rat(0); n];
        v[i] = rat(1);
        v[j] += rat(1);
        v
    };
    let neg = |v: Vec<Rational>| v.into_iter().map(|x| -x).collect::<Vec<_>>();
    match typ {
        FactorType::A | FactorType::Gl => {
            let n = if typ == FactorType::A { rank + 1 } else { rank };
            let simple = (0..n.saturating_sub(1))
                .map(|i| diff(i + 1, i, n))
                .collect();
            let mut negs = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    negs.push(diff(i, j, n)); // L_i − L_j, i < j
                }
            }
            Ok((n, simple, negs))
        }
        FactorType::B | FactorType::C => {
            let n = rank;
            let first = if typ == FactorType::B {
                e(0, n)
            } else {
                let mut v = vec![rat(0); n];
                v[0] = rat(2);
                v
            };
            let mut simple = vec![first];
            simple.extend((1..n).map(|i| diff(i, i - 1, n)));
            let mut pos = Vec::new();
            for i in 0..n {
                if typ == FactorType::B {
                    pos.push(e(i, n));
                } else {
                    let mut v = vec![rat(0); n];
                    v[i] = rat(2);
                    pos.push(v);
                }
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    pos.push(diff(j, i, n));
                    pos.push(sum(i, j, n));
                }
            }
            Ok((n, simple, pos.into_iter().map(neg).collect()))
        }
        FactorType::D => {
            if rank < 3 {
                return Err(invalid("type D needs rank at least 3 (use A1+A1 for D2)"));
            }
            let n = rank;
            let mut simple = vec![sum(0, 1, n)];
            simple.extend((1..n).map(|i| diff(i, i - 1, n)));
            let mut pos = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    pos.push(diff(j, i, n));
                    pos.push(sum(i, j, n));
                }
            }
            Ok((n, simple, pos.into_iter().map(neg).collect()))
        }
        FactorType::G2 => {
            if rank != 2 {
                return Err(invalid("type G2 has rank exactly 2"));
            }
            let mk = |a: i64, b: i64, c: i64| vec![rat(a), rat(b), rat(c)];
            let simple = vec![mk(-1, 1, 0), mk(1, -2, 1)];
            let pos = vec![
                mk(-1, 1, 0),
                mk(0, -1, 1),
                mk(-1, 0, 1),
                mk(1, -2, 1),
                mk(-2, 1, 1),
                mk(-1, -1, 2),
            ];
            Ok((3, simple, pos.into_iter().map(neg).collect()))
        }
    }
}

impl RootSystem {
    pub fn build(factors: &[(FactorType, usize)]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::UnsupportedFactor("empty product".to_string()));
        }
        let mut rs = RootSystem {
            factors: factors.to_vec(),
            ambient_dim: 0,
            blocks: Vec::new(),
            simple_roots: Vec::new(),
            simple_root_factor: Vec::new(),
            negative_roots: Vec::new(),
            limits: Limits::default(),
        };
        let mut local: Vec<LocalRoots> = Vec::new();
        for &(typ, rank) in factors {
            local.push(factor_roots(typ, rank)?);
        }
        let total: usize = local.iter().map(|(n, _, _)| n).sum();
        let mut offset = 0;
        for (fi, (n, simple, negs)) in local.into_iter().enumerate() {
            rs.blocks.push((offset, n));
            let embed = |v: Vec<Rational>| {
                let mut out = vec![rat(0); total];
                out[offset..offset + n].clone_from_slice(&v);
                Weight::new(out)
            };
            for v in simple {
                rs.simple_roots.push(embed(v));
                rs.simple_root_factor.push(fi);
            }
            for v in negs {
                rs.negative_roots.push(embed(v));
            }
            offset += n;
        }
        rs.ambient_dim = total;
        Ok(rs)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    /// Extends the system with one extra central coordinate carrying no
    /// roots (a GL(1) factor): the `G × GL(1)` augmentation.
    pub fn with_central_gl1(&self) -> RootSystem {
        let mut factors = self.factors.clone();
        factors.push((FactorType::Gl, 1));
        Self::build(&factors)
            .expect("GL(1) augmentation is always valid")
            .with_limits(self.limits)
    }

    pub fn factors(&self) -> &[(FactorType, usize)] {
        &self.factors
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Per-factor (offset, length) ranges into the ambient coordinates.
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// Which factor each simple root belongs to.
    pub fn simple_root_factor(&self) -> &[usize] {
        &self.simple_root_factor
    }

    pub fn negative_roots(&self) -> &[Weight] {
        &self.negative_roots
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Rank = number of simple roots.
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn is_semisimple(&self) -> bool {
        self.factors.iter().all(|&(t, _)| t != FactorType::Gl)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.ambient_dim {
            return Err(Error::WeightLength {
                got: w.dim(),
                want: self.ambient_dim,
            });
        }
        Ok(())
    }

    /// Sign of the invariant pairing `(β, λ)` — the same sign as
    /// `⟨H_β, λ⟩ = 2(β,λ)/(β,β)`.
    pub fn pairing_sign(&self, beta: &Weight, lam: &Weight) -> PairingSign {
        let d = beta.dot(lam);
        match d.cmp(&rat(0)) {
            Ordering::Less => PairingSign::Negative,
            Ordering::Equal => PairingSign::Zero,
            Ordering::Greater => PairingSign::Positive,
        }
    }

    /// Reflection of `v` across the hyperplane of `α`:
    /// `v − (2(v,α)/(α,α))·α`.
    pub fn reflect(&self, v: &Weight, alpha: &Weight) -> Result<Weight> {
        if alpha.is_zero() {
            return Err(Error::InvalidParameter(
                "cannot reflect across the zero vector".to_string(),
            ));
        }
        let c = rat(2) * v.dot(alpha) / alpha.dot(alpha);
        Ok(v.sub(&alpha.scale(&c)))
    }

    pub(crate) fn reflect_simple(&self, v: &Weight, i: usize) -> Weight {
        let alpha = &self.simple_roots[i];
        let c = rat(2) * v.dot(alpha) / alpha.dot(alpha);
        v.sub(&alpha.scale(&c))
    }

    /// `None` if dominant, else the index of the first simple root pairing
    /// negatively.
    pub fn is_dominant(&self, lam: &Weight) -> Option<usize> {
        self.simple_roots
            .iter()
            .position(|a| a.dot(lam).is_negative())
    }

    /// Reflects `λ` into the dominant chamber; the flag reports whether any
    /// reflection was applied.
    pub fn normalize_dominant(&self, lam: &Weight) -> (Weight, bool) {
        let mut cur = lam.clone();
        let mut changed = false;
        while let Some(i) = self.is_dominant(&cur) {
            cur = self.reflect_simple(&cur, i);
            changed = true;
        }
        (cur, changed)
    }

    /// Fundamental-weight coordinates `y_i = 2(λ, α_i)/(α_i, α_i)`.
    pub fn fundamental_coords(&self, lam: &Weight) -> Vec<Rational> {
        self.simple_roots
            .iter()
            .map(|a| rat(2) * lam.dot(a) / a.dot(a))
            .collect()
    }

    /// Solves `2(ω_i, α_j)/(α_j, α_j) = δ_ij` within each factor's root span.
    pub fn fundamental_weights(&self) -> Result<Vec<Weight>> {
        let mut out = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let fi = self.simple_root_factor[i];
            let idxs: Vec<usize> = (0..self.rank())
                .filter(|&j| self.simple_root_factor[j] == fi)
                .collect();
            // ω = Σ_k c_k α_k with Σ_k c_k·⟨α_k, α_j∨⟩ = δ_ij for every j in
            // the factor.
            let a: Vec<Vec<Rational>> = idxs
                .iter()
                .map(|&j| {
                    let aj = &self.simple_roots[j];
                    let norm = aj.dot(aj);
                    idxs.iter()
                        .map(|&k| rat(2) * self.simple_roots[k].dot(aj) / &norm)
                        .collect()
                })
                .collect();
            let b: Vec<Rational> = idxs
                .iter()
                .map(|&j| if j == i { rat(1) } else { rat(0) })
                .collect();
            let c = solve_linear(a, b)?;
            let mut omega = Weight::zero(self.ambient_dim);
            for (k, ck) in idxs.iter().zip(&c) {
                omega = omega.add(&self.simple_roots[*k].scale(ck));
            }
            out.push(omega);
        }
        Ok(out)
    }

    /// `Σ y_i ω_i` in ambient coordinates.
    pub fn weight_from_fundamental(&self, y: &[Rational]) -> Result<Weight> {
        if y.len() != self.rank() {
            return Err(Error::WeightLength {
                got: y.len(),
                want: self.rank(),
            });
        }
        let fw = self.fundamental_weights()?;
        let mut lam = Weight::zero(self.ambient_dim);
        for (yi, om) in y.iter().zip(&fw) {
            lam = lam.add(&om.scale(yi));
        }
        Ok(lam)
    }

    /// Breadth-first orbit of a dominant weight under simple reflections,
    /// transporting the tangent set `T_λ = {β ∈ R⁻ : (β,λ) < 0}` along and
    /// recording a witness word per point.
    pub fn weyl_orbit(&self, lam: &Weight) -> Result<OrbitTable> {
        self.check_weight(lam)?;
        if let Some(i) = self.is_dominant(lam) {
            return Err(Error::NonDominant(i));
        }
        let t0: Vec<Weight> = self
            .negative_roots
            .iter()
            .filter(|b| b.dot(lam).is_negative())
            .cloned()
            .collect();
        let mut seen: HashSet<Weight> = HashSet::new();
        seen.insert(lam.clone());
        let mut queue = VecDeque::new();
        queue.push_back(OrbitPoint {
            weight: lam.clone(),
            tangent_set: t0,
            witness: WeylElement::identity(),
        });
        let mut points = Vec::new();
        while let Some(p) = queue.pop_front() {
            for i in 0..self.rank() {
                let w2 = self.reflect_simple(&p.weight, i);
                if seen.contains(&w2) {
                    continue;
                }
                if seen.len() >= self.limits.orbit_bound {
                    return Err(Error::OrbitBound(self.limits.orbit_bound));
                }
                seen.insert(w2.clone());
                let t2 = p
                    .tangent_set
                    .iter()
                    .map(|b| self.reflect_simple(b, i))
                    .collect();
                let mut word = p.witness.word.clone();
                word.push(i);
                let sign = -p.witness.sign;
                queue.push_back(OrbitPoint {
                    weight: w2,
                    tangent_set: t2,
                    witness: WeylElement { word, sign },
                });
            }
            points.push(p);
        }
        Ok(OrbitTable { points })
    }

    /// Enumerates the full Weyl group as words in simple reflections
    /// (breadth-first, so words are reduced), deduplicated by the image of a
    /// fixed regular vector.
    pub fn weyl_elements(&self) -> Result<Vec<WeylElement>> {
        // Powers of two give a regular vector for every supported type: all
        // coordinates are distinct positive numbers and no signed sum of two
        // of them vanishes.
        let regular = Weight::new(
            (0..self.ambient_dim)
                .map(|i| Rational::from(BigInt::one() << i))
                .collect(),
        );
        debug_assert!(self
            .negative_roots
            .iter()
            .all(|b| !b.dot(&regular).is_zero()));
        let mut seen: HashMap<Weight, ()> = HashMap::new();
        seen.insert(regular.clone(), ());
        let mut queue = VecDeque::new();
        queue.push_back((regular, WeylElement::identity()));
        let mut out = Vec::new();
        while let Some((img, w)) = queue.pop_front() {
            for i in 0..self.rank() {
                let img2 = self.reflect_simple(&img, i);
                if seen.contains_key(&img2) {
                    continue;
                }
                if seen.len() >= self.limits.weyl_bound {
                    return Err(Error::WeylBound(self.limits.weyl_bound));
                }
                seen.insert(img2.clone(), ());
                let mut word = w.word.clone();
                word.push(i);
                queue.push_back((
                    img2,
                    WeylElement {
                        word,
                        sign: -w.sign,
                    },
                ));
            }
            out.push(w);
        }
        Ok(out)
    }

    /// `|W|` from the classical per-factor orders.
    pub fn weyl_order(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &(typ, rank) in &self.factors {
            acc *= match typ {
                FactorType::A => factorial(rank + 1),
                FactorType::B | FactorType::C => factorial(rank) * (BigInt::one() << rank),
                FactorType::D => factorial(rank) * (BigInt::one() << (rank - 1)),
                FactorType::G2 => BigInt::from(12),
                FactorType::Gl => factorial(rank),
            };
        }
        acc
    }

    /// `|W_λ| = |W| / |Wλ|` by orbit–stabilizer.
    pub fn stabilizer_order(&self, lam: &Weight) -> Result<BigInt> {
        let orbit = self.weyl_orbit(lam)?;
        Ok(self.weyl_order() / BigInt::from(orbit.len()))
    }
}

/// Gaussian elimination over exact rationals; errors on a singular system.
pub(crate) fn solve_linear(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
) -> Result<Vec<Rational>> {
    let n = b.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap(col, piv);
        b.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        b[col] /= &p;
        let pivot_row = a[col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for (x, pc) in a[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * pc;
                }
                let upd = &b[r] - &f * &b[col];
                b[r] = upd;
            }
        }
    }
    Ok(b)
}
