//! Localization engine for dual-variety degrees.
//!
//! The central quantity is the exact orbit sum
//! `E(t,u) = −Σ_{μ∈Wλ} (μ(t)+u) · ∏_{β∈T_μ} (μ(t)+β(t)+u)/(−β(t))`,
//! where `T_μ` is the set of negative roots pairing negatively with the
//! orbit point μ. After summation the denominators cancel and `E` collapses
//! to `ℓ(t) + c₀·u`, where `ℓ` is a combination of the per-GL-factor
//! coordinate sums (zero for semisimple groups) and the degree of the dual
//! variety is `−c₀ = −(E(t,1) − E(t,0))`. All evaluations happen at random
//! exact integer points avoiding every root hyperplane, and every result is
//! recomputed at an independently seeded second point; the two must agree.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::{is_integer, rat, to_u64, Rational};
use crate::roots::{
    solve_linear, FactorType, OrbitTable, PairingSign, RootSystem, Weight, WeylElement,
};

/// Attempts allowed when sampling a point off the root hyperplanes.
const POINT_ATTEMPTS: usize = 64;
/// Coordinates are drawn uniformly from `[-RANGE, RANGE]`.
const POINT_RANGE: i64 = 1_000_000;
/// Orbit sizes at and above this are summed in parallel.
const PARALLEL_THRESHOLD: usize = 64;

/// How a degree was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Orbit,
    Symmetric,
    Fg,
    ClosedForm,
    Jacobi,
    Permanent,
    ScalarProduct,
}

/// Result of a degree computation, with enough context to audit it.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeReport {
    pub degree: u64,
    pub is_hypersurface: bool,
    pub epsilon: i32,
    pub stabilizer_order: u64,
    pub points_used: usize,
    pub method: Method,
    pub seeds: Vec<u64>,
}

/// Splitting of the negative roots against a weight λ: `t_set` pairs
/// negatively (tangent directions), `o_set` pairs to zero, and
/// `epsilon = (−1)^{|o_set|}`.
#[derive(Debug, Clone)]
pub struct TangentData {
    pub t_set: Vec<Weight>,
    pub o_set: Vec<Weight>,
    pub epsilon: i32,
    pub stabilizer_order: BigInt,
}

/// An exact integer evaluation point avoiding all root hyperplanes.
#[derive(Debug, Clone)]
pub struct GenericPoint {
    pub coords: Vec<Rational>,
    pub seed: u64,
}

/// The degree polynomial of a semisimple system in fundamental-weight
/// coordinates, in both the `y` basis and the shifted `x = y − 1` basis.
#[derive(Debug, Clone, PartialEq)]
pub struct FgPolynomial {
    pub in_y: MultiPoly,
    pub in_x: MultiPoly,
}

/// Class data extracted from `E(t,u)`: the coefficient of each GL factor's
/// coordinate sum σ₁ in `ℓ(t)`, and the coefficient `c₀` of `u`
/// (so the degree is `−c₀`).
#[derive(Debug, Clone)]
pub struct ClassReport {
    /// `(factor index, coefficient)` per GL factor, in factor order.
    pub sigma1_coefficients: Vec<(usize, Rational)>,
    pub u_coefficient: Rational,
    pub degree: u64,
    pub epsilon: i32,
    pub stabilizer_order: BigInt,
    pub seeds: Vec<u64>,
}

/// Splits the negative roots against a dominant weight.
pub fn tangent_data(rs: &RootSystem, lam: &Weight) -> Result<TangentData> {
    rs.check_weight(lam)?;
    if let Some(i) = rs.is_dominant(lam) {
        return Err(Error::NonDominant(i));
    }
    let mut t_set = Vec::new();
    let mut o_set = Vec::new();
    for b in rs.negative_roots() {
        match rs.pairing_sign(b, lam) {
            PairingSign::Negative => t_set.push(b.clone()),
            PairingSign::Zero => o_set.push(b.clone()),
            PairingSign::Positive => {}
        }
    }
    let epsilon = if o_set.len() % 2 == 0 { 1 } else { -1 };
    let stabilizer_order = rs.stabilizer_order(lam)?;
    Ok(TangentData {
        t_set,
        o_set,
        epsilon,
        stabilizer_order,
    })
}

fn pick_point_where<F>(rs: &RootSystem, seed: u64, extra: F) -> Result<GenericPoint>
where
    F: Fn(&[Rational]) -> bool,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..POINT_ATTEMPTS {
        let coords: Vec<Rational> = (0..rs.ambient_dim())
            .map(|_| rat(rng.gen_range(-POINT_RANGE..=POINT_RANGE)))
            .collect();
        let w = Weight::new(coords.clone());
        if rs.negative_roots().iter().any(|b| b.dot(&w).is_zero()) {
            continue;
        }
        if !extra(&coords) {
            continue;
        }
        return Ok(GenericPoint { coords, seed });
    }
    Err(Error::PointRejection(POINT_ATTEMPTS))
}

/// Samples an integer point with every root value nonzero. Deterministic in
/// the seed.
pub fn pick_generic_point(rs: &RootSystem, seed: u64) -> Result<GenericPoint> {
    pick_point_where(rs, seed, |_| true)
}

/// Evaluates `E(t,u)` from a precomputed orbit table.
pub fn class_sum_orbit(orbit: &OrbitTable, point: &[Rational], u: &Rational) -> Rational {
    let eval_one = |p: &crate::roots::OrbitPoint| -> Rational {
        let mu_t = p.weight.eval_at(point);
        let mut term = &mu_t + u;
        for b in &p.tangent_set {
            let bt = b.eval_at(point);
            let num = &mu_t + &bt + u;
            term = term * num / (-bt);
        }
        term
    };
    let total: Rational = if orbit.points.len() >= PARALLEL_THRESHOLD {
        orbit
            .points
            .par_iter()
            .map(eval_one)
            .reduce(|| rat(0), |a, b| a + b)
    } else {
        orbit.points.iter().map(eval_one).fold(rat(0), |a, b| a + b)
    };
    -total
}

/// Evaluates `E(t,u)` by summing over the whole Weyl group with every
/// negative root in the product, scaled by `ε/|W_λ|`. Agrees with
/// [`class_sum_orbit`] as a function of `(t,u)`.
pub fn symmetric_class_sum(
    rs: &RootSystem,
    elements: &[WeylElement],
    lam: &Weight,
    epsilon: i32,
    stabilizer_order: &BigInt,
    point: &[Rational],
    u: &Rational,
) -> Rational {
    let pw = Weight::new(point.to_vec());
    let negs = rs.negative_roots();
    let eval_one = |w: &WeylElement| -> Rational {
        // w·f evaluated at t is f at w⁻¹t, so transport the point once and
        // evaluate λ and every β there.
        let tp = w.apply_inverse(rs, &pw);
        let tc = tp.coords().to_vec();
        let lam_t = lam.eval_at(&tc);
        let mut term = &lam_t + u;
        for b in negs {
            let bt = b.eval_at(&tc);
            let num = &lam_t + &bt + u;
            term = term * num / (-bt);
        }
        term
    };
    let total: Rational = if elements.len() >= PARALLEL_THRESHOLD {
        elements
            .par_iter()
            .map(eval_one)
            .reduce(|| rat(0), |a, b| a + b)
    } else {
        elements.iter().map(eval_one).fold(rat(0), |a, b| a + b)
    };
    let scale = Rational::new(BigInt::from(epsilon), stabilizer_order.clone());
    -(scale * total)
}

/// Normalized input plus the data every degree path needs.
struct Prepared {
    dominant: Weight,
    orbit: OrbitTable,
    epsilon: i32,
    stabilizer_order: BigInt,
}

/// Brings a weight into canonical form: blocks of type A and G₂ are
/// projected onto the root span (the representation only depends on that
/// projection), GL blocks must have integer coordinates.
fn canonicalize(rs: &RootSystem, lam: &Weight) -> Result<Weight> {
    rs.check_weight(lam)?;
    let mut coords = lam.coords().to_vec();
    for (fi, &(typ, _)) in rs.factors().iter().enumerate() {
        let (off, len) = rs.blocks()[fi];
        match typ {
            FactorType::A | FactorType::G2 => {
                let sum: Rational = coords[off..off + len].iter().fold(rat(0), |a, b| a + b);
                let mean = sum / rat(len as i64);
                for c in coords[off..off + len].iter_mut() {
                    *c -= &mean;
                }
            }
            FactorType::Gl => {
                for (i, c) in coords[off..off + len].iter().enumerate() {
                    if !is_integer(c) {
                        return Err(Error::NonIntegralWeight {
                            index: off + i,
                            value: c.to_string(),
                        });
                    }
                }
            }
            _ => {}
        }
    }
    Ok(Weight::new(coords))
}

fn prepare(rs: &RootSystem, lam: &Weight) -> Result<Prepared> {
    let lam = canonicalize(rs, lam)?;
    if lam.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let (dominant, _) = rs.normalize_dominant(&lam);
    for (i, y) in rs.fundamental_coords(&dominant).iter().enumerate() {
        if !is_integer(y) {
            return Err(Error::NonIntegralWeight {
                index: i,
                value: y.to_string(),
            });
        }
    }
    let orbit = rs.weyl_orbit(&dominant)?;
    let o_count = rs
        .negative_roots()
        .iter()
        .filter(|b| b.dot(&dominant).is_zero())
        .count();
    let epsilon = if o_count % 2 == 0 { 1 } else { -1 };
    let stabilizer_order = rs.weyl_order() / BigInt::from(orbit.len());
    Ok(Prepared {
        dominant,
        orbit,
        epsilon,
        stabilizer_order,
    })
}

/// Shared tail of every evaluation-based degree path: two independently
/// seeded points must give the same value; a third point arbitrates, and
/// unresolved disagreement is a hard error.
fn degree_from_eval<F>(
    rs: &RootSystem,
    seed: u64,
    method: Method,
    prep: &Prepared,
    eval: F,
) -> Result<DegreeReport>
where
    F: Fn(&[Rational], &Rational) -> Rational,
{
    let zero = rat(0);
    let one = rat(1);
    let deg_at = |p: &GenericPoint| -(eval(&p.coords, &one) - eval(&p.coords, &zero));
    let p1 = pick_generic_point(rs, seed)?;
    let p2 = pick_generic_point(rs, seed.wrapping_add(1))?;
    let d1 = deg_at(&p1);
    let d2 = deg_at(&p2);
    let (value, points_used, seeds) = if d1 == d2 {
        (d1, 2, vec![p1.seed, p2.seed])
    } else {
        let p3 = pick_generic_point(rs, seed.wrapping_add(2))?;
        let d3 = deg_at(&p3);
        if d3 == d1 {
            (d1, 3, vec![p1.seed, p2.seed, p3.seed])
        } else if d3 == d2 {
            (d2, 3, vec![p1.seed, p2.seed, p3.seed])
        } else {
            return Err(Error::PointDisagreement(d1.to_string(), d2.to_string()));
        }
    };
    let degree = to_u64(&value)?;
    Ok(DegreeReport {
        degree,
        is_hypersurface: degree > 0,
        epsilon: prep.epsilon,
        stabilizer_order: to_u64(&Rational::from(prep.stabilizer_order.clone()))?,
        points_used,
        method,
        seeds,
    })
}

/// Degree of the dual of the closed orbit of the irreducible representation
/// with highest weight λ, via the orbit localization sum.
pub fn degree(rs: &RootSystem, lam: &Weight, seed: u64) -> Result<DegreeReport> {
    let prep = prepare(rs, lam)?;
    let orbit = &prep.orbit;
    degree_from_eval(rs, seed, Method::Orbit, &prep, |pt, u| {
        class_sum_orbit(orbit, pt, u)
    })
}

/// Same degree through the full Weyl-group sum (independent route used for
/// cross-checking).
pub fn degree_symmetric(rs: &RootSystem, lam: &Weight, seed: u64) -> Result<DegreeReport> {
    let prep = prepare(rs, lam)?;
    let elements = rs.weyl_elements()?;
    let dominant = prep.dominant.clone();
    let epsilon = prep.epsilon;
    let stab = prep.stabilizer_order.clone();
    degree_from_eval(rs, seed, Method::Symmetric, &prep, |pt, u| {
        symmetric_class_sum(rs, &elements, &dominant, epsilon, &stab, pt, u)
    })
}

/// Extracts the full class `ℓ(t) + c₀·u`: per-GL-factor σ₁ coefficients by
/// solving a linear system over several points, then verifying the fit at an
/// extra point. For semisimple systems `ℓ` must vanish identically.
pub fn class_report(rs: &RootSystem, lam: &Weight, seed: u64) -> Result<ClassReport> {
    let prep = prepare(rs, lam)?;
    let orbit = &prep.orbit;
    let gl_factors: Vec<usize> = rs
        .factors()
        .iter()
        .enumerate()
        .filter(|(_, &(t, _))| t == FactorType::Gl)
        .map(|(i, _)| i)
        .collect();
    let k = gl_factors.len();
    let sigma_at = |f: usize, pt: &[Rational]| -> Rational {
        let (off, len) = rs.blocks()[f];
        pt[off..off + len].iter().fold(rat(0), |a, b| a + b)
    };
    // k points fit the σ₁ coefficients, one more verifies the fit.
    let mut base = seed;
    let mut last_err = Error::SingularSystem;
    for _ in 0..4 {
        let mut points = Vec::with_capacity(k + 1);
        for j in 0..=k {
            points.push(pick_generic_point(rs, base.wrapping_add(j as u64))?);
        }
        let coeffs = if k > 0 {
            let m: Vec<Vec<Rational>> = points[..k]
                .iter()
                .map(|p| gl_factors.iter().map(|&f| sigma_at(f, &p.coords)).collect())
                .collect();
            let v: Vec<Rational> = points[..k]
                .iter()
                .map(|p| class_sum_orbit(orbit, &p.coords, &rat(0)))
                .collect();
            match solve_linear(m, v) {
                Ok(c) => c,
                Err(e) => {
                    last_err = e;
                    base = base.wrapping_add((k + 1) as u64);
                    continue;
                }
            }
        } else {
            Vec::new()
        };
        let check = points.last().expect("at least one point");
        let lhs = class_sum_orbit(orbit, &check.coords, &rat(0));
        let rhs = gl_factors
            .iter()
            .zip(&coeffs)
            .map(|(&f, c)| sigma_at(f, &check.coords) * c)
            .fold(rat(0), |a, b| a + b);
        if lhs != rhs {
            return Err(Error::NotInvariantForm);
        }
        let c0 = class_sum_orbit(orbit, &check.coords, &rat(1)) - &lhs;
        let other = &points[0];
        let c0_other = class_sum_orbit(orbit, &other.coords, &rat(1))
            - class_sum_orbit(orbit, &other.coords, &rat(0));
        if c0 != c0_other {
            return Err(Error::PointDisagreement(
                c0.to_string(),
                c0_other.to_string(),
            ));
        }
        let degree = to_u64(&-c0.clone())?;
        return Ok(ClassReport {
            sigma1_coefficients: gl_factors.iter().copied().zip(coeffs).collect(),
            u_coefficient: c0,
            degree,
            epsilon: prep.epsilon,
            stabilizer_order: prep.stabilizer_order.clone(),
            seeds: points.iter().map(|p| p.seed).collect(),
        });
    }
    Err(last_err)
}

/// Builds the degree polynomial `F(y)` of a semisimple system symbolically
/// in the fundamental-weight coordinates: for each Weyl element the weight
/// form `λ_y(t) + 1` is a linear polynomial in y, and the full sum collapses
/// (top degree cancels, all denominators clear) to an integer polynomial of
/// total degree = number of negative roots.
pub fn fg_polynomial(rs: &RootSystem, seed: u64) -> Result<FgPolynomial> {
    if !rs.is_semisimple() {
        return Err(Error::GlFactorsRejected);
    }
    let elements = rs.weyl_elements()?;
    let fw = rs.fundamental_weights()?;
    let r = rs.rank();
    let negs = rs.negative_roots();
    let build = |p: &GenericPoint| -> MultiPoly {
        let pw = Weight::new(p.coords.clone());
        let terms: Vec<MultiPoly> = elements
            .par_iter()
            .map(|w| {
                let tp = w.apply_inverse(rs, &pw);
                let tc = tp.coords().to_vec();
                let coeffs: Vec<Rational> = fw.iter().map(|om| om.eval_at(&tc)).collect();
                let lam_form = MultiPoly::linear_form(&coeffs, rat(1));
                let mut num = lam_form.clone();
                let mut den = rat(1);
                for b in negs {
                    let bt = b.eval_at(&tc);
                    num = num.mul(&lam_form.add(&MultiPoly::constant(r, bt.clone())));
                    den *= -bt;
                }
                num.scale(&(rat(1) / den))
            })
            .collect();
        terms
            .into_iter()
            .fold(MultiPoly::zero(r), |acc, t| acc.add(&t))
    };
    let p1 = pick_generic_point(rs, seed)?;
    let p2 = pick_generic_point(rs, seed.wrapping_add(1))?;
    let f1 = build(&p1);
    let f2 = build(&p2);
    if f1 != f2 {
        return Err(Error::PointDisagreement(
            f1.render_prefixed("y"),
            f2.render_prefixed("y"),
        ));
    }
    let expected = negs.len() as u32;
    let got = f1.total_degree().unwrap_or(0);
    if got != expected {
        return Err(Error::DegreeCancellation {
            expected: expected as usize,
            got: got as usize,
        });
    }
    if !f1.has_integer_coefficients() {
        return Err(Error::NonIntegerCoefficient(f1.render_prefixed("y")));
    }
    let in_x = f1.shift_vars(&vec![rat(1); r]);
    Ok(FgPolynomial { in_y: f1, in_x })
}

/// Degree from a precomputed `F(y)`: `deg = (ε/|W_λ|)·F(y)` for dominant
/// integer fundamental coordinates y.
pub fn degree_from_fg(rs: &RootSystem, fg: &FgPolynomial, y: &[i64]) -> Result<DegreeReport> {
    if y.len() != rs.rank() {
        return Err(Error::WeightLength {
            got: y.len(),
            want: rs.rank(),
        });
    }
    if y.iter().any(|&v| v < 0) {
        return Err(Error::InvalidParameter(
            "fundamental coordinates must be nonnegative".to_string(),
        ));
    }
    if y.iter().all(|&v| v == 0) {
        return Err(Error::ZeroWeight);
    }
    let yr: Vec<Rational> = y.iter().map(|&v| rat(v)).collect();
    let lam = rs.weight_from_fundamental(&yr)?;
    let data = tangent_data(rs, &lam)?;
    let value = fg.in_y.eval(&yr);
    let scale = Rational::new(BigInt::from(data.epsilon), data.stabilizer_order.clone());
    let degree = to_u64(&(scale * value))?;
    Ok(DegreeReport {
        degree,
        is_hypersurface: degree > 0,
        epsilon: data.epsilon,
        stabilizer_order: to_u64(&Rational::from(data.stabilizer_order))?,
        points_used: 0,
        method: Method::Fg,
        seeds: Vec::new(),
    })
}

/// For a single GL(n) factor the degree is invariant under λ ↦ λ + a·𝟙 and
/// under λ ↦ a·𝟙 − reverse(λ). Computes all three and checks equality.
pub fn weight_shift_check(rs: &RootSystem, lam: &Weight, a: i64, seed: u64) -> Result<u64> {
    let n = match rs.factors() {
        [(FactorType::Gl, n)] => *n,
        _ => {
            return Err(Error::UnsupportedFactor(
                "weight shift invariance needs a single GL factor".to_string(),
            ))
        }
    };
    let base = degree(rs, lam, seed)?.degree;
    let ones = Weight::from_ints(&vec![a; n]);
    let shifted = lam.add(&ones);
    let d_shift = degree(rs, &shifted, seed.wrapping_add(17))?.degree;
    if d_shift != base {
        return Err(Error::MethodDisagreement {
            left_name: "lambda",
            left: base.to_string(),
            right_name: "lambda + a*ones",
            right: d_shift.to_string(),
        });
    }
    let mut rev = lam.coords().to_vec();
    rev.reverse();
    let mirrored = ones.sub(&Weight::new(rev));
    let d_mirror = degree(rs, &mirrored, seed.wrapping_add(34))?.degree;
    if d_mirror != base {
        return Err(Error::MethodDisagreement {
            left_name: "lambda",
            left: base.to_string(),
            right_name: "a*ones - reversed(lambda)",
            right: d_mirror.to_string(),
        });
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn gl(n: usize) -> RootSystem {
        RootSystem::build(&[(FactorType::Gl, n)]).unwrap()
    }

    fn simple(t: FactorType, r: usize) -> RootSystem {
        RootSystem::build(&[(t, r)]).unwrap()
    }

    #[test]
    fn generic_points_are_deterministic_and_regular() {
        let rs = simple(FactorType::B, 3);
        let p1 = pick_generic_point(&rs, 7).unwrap();
        let p2 = pick_generic_point(&rs, 7).unwrap();
        assert_eq!(p1.coords, p2.coords);
        let w = Weight::new(p1.coords.clone());
        for b in rs.negative_roots() {
            assert!(!b.dot(&w).is_zero());
        }
        let p3 = pick_generic_point(&rs, 8).unwrap();
        assert_ne!(p1.coords, p3.coords);
    }

    #[test]
    fn plane_curve_degrees_match_the_classical_dual_degree() {
        // Veronese of P¹: dual of the degree-a rational normal curve under
        // GL(2) with λ = (0, a) has degree 2(a−1).
        let rs = gl(2);
        for a in 1..=5 {
            let lam = Weight::from_ints(&[0, a]);
            let rep = degree(&rs, &lam, 11).unwrap();
            assert_eq!(rep.degree, 2 * (a as u64 - 1));
            assert_eq!(rep.is_hypersurface, a > 1);
        }
    }

    #[test]
    fn adjoint_type_degrees() {
        let rep = degree(&gl(3), &Weight::from_ints(&[0, 1, 2]), 3).unwrap();
        assert_eq!(rep.degree, 6);
        let rep = degree(&simple(FactorType::A, 2), &Weight::from_ints(&[0, 1, 2]), 3).unwrap();
        assert_eq!(rep.degree, 6);
        // dual of the Plücker of Gr(2,3) is not a hypersurface
        let rep = degree(&gl(3), &Weight::from_ints(&[0, 1, 1]), 3).unwrap();
        assert_eq!(rep.degree, 0);
        assert!(!rep.is_hypersurface);
    }

    #[test]
    fn grassmannian_3_8_orbit_class() {
        let rs = gl(8);
        let lam = Weight::from_ints(&[0, 0, 0, 0, 0, 1, 1, 1]);
        let rep = degree(&rs, &lam, 1).unwrap();
        assert_eq!(rep.degree, 16);
        assert_eq!(rep.stabilizer_order, 720);
        assert_eq!(rep.epsilon, -1); // 13 orthogonal negative roots
        let class = class_report(&rs, &lam, 1).unwrap();
        assert_eq!(class.sigma1_coefficients.len(), 1);
        assert_eq!(class.sigma1_coefficients[0], (0, rat(-6)));
        assert_eq!(class.u_coefficient, rat(-16));
        assert_eq!(class.degree, 16);
    }

    #[test]
    fn symmetric_route_agrees_with_orbit_route() {
        for (rs, lam) in [
            (gl(3), Weight::from_ints(&[0, 1, 2])),
            (gl(3), Weight::from_ints(&[0, 0, 2])),
            (simple(FactorType::B, 2), Weight::from_ints(&[0, 1])),
            (simple(FactorType::C, 2), Weight::from_ints(&[1, 1])),
        ] {
            let a = degree(&rs, &lam, 5).unwrap();
            let b = degree_symmetric(&rs, &lam, 23).unwrap();
            assert_eq!(a.degree, b.degree, "mismatch for {:?}", lam);
            assert_eq!(b.method, Method::Symmetric);
        }
    }

    #[test]
    fn input_validation() {
        let rs = gl(2);
        assert!(matches!(
            degree(&rs, &Weight::zero(2), 1),
            Err(Error::ZeroWeight)
        ));
        assert!(matches!(
            degree(&rs, &Weight::new(vec![rat(0), ratio(1, 2)]), 1),
            Err(Error::NonIntegralWeight { .. })
        ));
        assert!(matches!(
            degree(&rs, &Weight::from_ints(&[1]), 1),
            Err(Error::WeightLength { .. })
        ));
        // non-dominant input is normalized, not rejected
        let a = degree(&rs, &Weight::from_ints(&[3, 0]), 1).unwrap();
        let b = degree(&rs, &Weight::from_ints(&[0, 3]), 1).unwrap();
        assert_eq!(a.degree, b.degree);
        // A-type weights are projected onto the root span: a pure character
        // collapses to zero
        let a2 = simple(FactorType::A, 2);
        assert!(matches!(
            degree(&a2, &Weight::from_ints(&[1, 1, 1]), 1),
            Err(Error::ZeroWeight)
        ));
    }

    #[test]
    fn tangent_data_partitions_the_negative_roots() {
        let rs = gl(8);
        let lam = Weight::from_ints(&[0, 0, 0, 0, 0, 1, 1, 1]);
        let data = tangent_data(&rs, &lam).unwrap();
        assert_eq!(data.t_set.len(), 15);
        assert_eq!(data.o_set.len(), 13);
        assert_eq!(data.epsilon, -1);
        assert_eq!(data.stabilizer_order, BigInt::from(720));
        assert_eq!(
            data.t_set.len() + data.o_set.len(),
            rs.negative_roots().len() // none pair positively with a dominant weight in this convention
        );
    }

    #[test]
    fn fg_polynomial_rank_one() {
        let rs = simple(FactorType::A, 1);
        let fg = fg_polynomial(&rs, 2).unwrap();
        // F(y) = 2y − 2, so F(x+1) = 2x
        assert_eq!(fg.in_y.coeff(&[1]), rat(2));
        assert_eq!(fg.in_y.coeff(&[0]), rat(-2));
        assert_eq!(fg.in_y.num_terms(), 2);
        assert_eq!(fg.in_x.render_prefixed("x"), "2*x1");
        for a in 1..=4 {
            let rep = degree_from_fg(&rs, &fg, &[a]).unwrap();
            assert_eq!(rep.degree, 2 * (a as u64 - 1));
            assert_eq!(rep.method, Method::Fg);
        }
    }

    #[test]
    fn fg_polynomial_a2_matches_direct_degrees() {
        let rs = simple(FactorType::A, 2);
        let fg = fg_polynomial(&rs, 9).unwrap();
        assert_eq!(fg.in_x.coeff(&[0, 0]), rat(6));
        for (y, seed) in [([1, 1], 4u64), ([2, 1], 5), ([0, 2], 6), ([3, 3], 7)] {
            let via_fg = degree_from_fg(&rs, &fg, &y).unwrap();
            let lam = rs.weight_from_fundamental(&[rat(y[0]), rat(y[1])]).unwrap();
            let direct = degree(&rs, &lam, seed).unwrap();
            assert_eq!(via_fg.degree, direct.degree, "y = {:?}", y);
        }
    }

    #[test]
    fn fg_rejects_reductive_factors() {
        assert!(matches!(
            fg_polynomial(&gl(3), 1),
            Err(Error::GlFactorsRejected)
        ));
    }

    #[test]
    fn weight_shift_invariance() {
        let rs = gl(3);
        let d = weight_shift_check(&rs, &Weight::from_ints(&[0, 1, 2]), 2, 13).unwrap();
        assert_eq!(d, 6);
        assert!(
            weight_shift_check(&simple(FactorType::B, 2), &Weight::from_ints(&[0, 1]), 1, 1)
                .is_err()
        );
    }

    #[test]
    fn class_report_vanishes_for_semisimple_groups() {
        let rs = simple(FactorType::B, 2);
        let class = class_report(&rs, &Weight::from_ints(&[0, 1]), 3).unwrap();
        assert!(class.sigma1_coefficients.is_empty());
        let rep = degree(&rs, &Weight::from_ints(&[0, 1]), 3).unwrap();
        assert_eq!(class.degree, rep.degree);
    }

    #[test]
    fn mixed_product_class_has_one_sigma_per_gl_factor() {
        let rs = RootSystem::build(&[(FactorType::Gl, 2), (FactorType::Gl, 2)]).unwrap();
        // Segre P¹×P¹: the 2×2 determinant hypersurface, degree 2.
        let lam = Weight::from_ints(&[0, 1, 0, 1]);
        let class = class_report(&rs, &lam, 21).unwrap();
        assert_eq!(class.degree, 2);
        assert_eq!(class.sigma1_coefficients.len(), 2);
    }
}
