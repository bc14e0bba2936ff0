//! Built-in verification suites.
//!
//! `paper` re-derives the frozen golden values (degrees, polynomial tables,
//! closed-form families); `oracle` cross-checks independent computation
//! routes against each other on seeded sweeps.  Every check prints one
//! line with expected and actual values; failures are report content, and
//! the caller turns them into the exit status.

use discrim::closed::{
    aa_degree, abn_degree, boole_degree, gammaab_degree, gr3_degree, grassmannian_degree,
    holme_gr2, hyperdet_degree, tevelev_two_row, AngleBracketTable,
};
use discrim::engine::{
    class_report, degree, degree_from_fg, degree_symmetric, fg_polynomial, weight_shift_check,
};
use discrim::rational::{rat, Rational};
use discrim::roots::{FactorType, RootSystem, Weight};
use discrim::symfun::{
    degree_via_jacobi, degree_via_permanent, degree_via_scalar_product, hyperdet_degree_permanent,
};

use crate::render::write_line;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Paper,
    Oracle,
    All,
}

type Check = Result<String, String>;
type Factors = &'static [(FactorType, usize)];

fn build(factors: &[(FactorType, usize)]) -> RootSystem {
    RootSystem::build(factors).expect("verify root system")
}

fn gl(n: usize) -> RootSystem {
    build(&[(FactorType::Gl, n)])
}

fn want_u64(label: &str, got: u64, want: u64) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: expected {want}, got {got}"))
    }
}

fn lib<T>(r: Result<T, discrim::Error>) -> Result<T, String> {
    r.map_err(|e| format!("error: {e}"))
}

// ---- paper suite ----------------------------------------------------------

fn check_gr38(seed: u64) -> Check {
    let rs = gl(8);
    let lam = Weight::from_ints(&[0, 0, 0, 0, 0, 1, 1, 1]);
    let orbit = lib(rs.weyl_orbit(&lam))?;
    want_u64("orbit size", orbit.len() as u64, 56)?;
    let report = lib(degree(&rs, &lam, seed))?;
    want_u64("degree", report.degree, 16)?;
    let class = lib(class_report(&rs, &lam, seed))?;
    if class.sigma1_coefficients.len() != 1 || class.sigma1_coefficients[0].1 != rat(-6) {
        return Err("class: expected a single σ₁ coefficient -6".to_string());
    }
    if class.u_coefficient != rat(-16) {
        return Err(format!(
            "class: expected u coefficient -16, got {}",
            class.u_coefficient
        ));
    }
    Ok("degree 16, orbit 56, class -6·σ₁ + -16·u".to_string())
}

fn check_regular_degrees(seed: u64) -> Check {
    let cases: [(&str, Factors, &[i64], u64); 4] = [
        ("A2", &[(FactorType::A, 2)], &[1, 1], 6),
        ("B2", &[(FactorType::B, 2)], &[1, 1], 24),
        ("G2", &[(FactorType::G2, 2)], &[1, 1], 916),
        ("A1", &[(FactorType::A, 1)], &[1], 0),
    ];
    for (name, factors, y, want) in cases {
        let rs = build(factors);
        let y_rat: Vec<Rational> = y.iter().map(|&c| rat(c)).collect();
        let lam = lib(rs.weight_from_fundamental(&y_rat))?;
        let report = lib(degree(&rs, &lam, seed))?;
        want_u64(name, report.degree, want)?;
        if (report.degree > 0) != report.is_hypersurface {
            return Err(format!("{name}: hypersurface flag out of step"));
        }
    }
    Ok("A2→6, B2→24, G2→916, A1 standard→0 (degenerate)".to_string())
}

fn check_fg_table(seed: u64) -> Check {
    // Constant terms are the degrees at the regular weight y = (1, …, 1).
    let constants: [(&str, Factors, i64); 5] = [
        ("A2", &[(FactorType::A, 2)], 6),
        ("B2", &[(FactorType::B, 2)], 24),
        ("G2", &[(FactorType::G2, 2)], 916),
        ("A3", &[(FactorType::A, 3)], 904),
        (
            "A1+A1+A1",
            &[(FactorType::A, 1), (FactorType::A, 1), (FactorType::A, 1)],
            4,
        ),
    ];
    for (name, factors, want) in constants {
        let rs = build(factors);
        let fg = lib(fg_polynomial(&rs, seed))?;
        let zeros = vec![0u32; rs.rank()];
        let got = fg.in_x.coeff(&zeros);
        if got != rat(want) {
            return Err(format!("{name} constant term: expected {want}, got {got}"));
        }
    }

    let a2 = lib(fg_polynomial(&build(&[(FactorType::A, 2)]), seed))?;
    let golden = "12*x1^2*x2 + 12*x1*x2^2 + 6*x1^2 + 24*x1*x2 + 6*x2^2 + 12*x1 + 12*x2 + 6";
    let got = a2.in_x.render_prefixed("x");
    if got != golden {
        return Err(format!("A2 polynomial: expected '{golden}', got '{got}'"));
    }

    // The two table entries with independent geometric certificates.
    let b2 = lib(fg_polynomial(&build(&[(FactorType::B, 2)]), seed))?;
    if b2.in_x.coeff(&[2, 1]) != rat(108) {
        return Err(format!(
            "B2 x1²x2 coefficient: expected 108, got {}",
            b2.in_x.coeff(&[2, 1])
        ));
    }
    let g2 = lib(fg_polynomial(&build(&[(FactorType::G2, 2)]), seed))?;
    if g2.in_x.coeff(&[0, 2]) != rat(7326) {
        return Err(format!(
            "G2 x2² coefficient: expected 7326, got {}",
            g2.in_x.coeff(&[0, 2])
        ));
    }
    Ok("constants for 5 groups, A2 golden string, certified B2/G2 coefficients".to_string())
}

fn check_gr3_row() -> Check {
    let wants = [(5usize, 0u64), (6, 4), (7, 7), (8, 16), (9, 120)];
    for (n, want) in wants {
        want_u64(&format!("gr3({n})"), lib(gr3_degree(n))?, want)?;
    }
    want_u64(
        "gr3(8) vs subspace form",
        lib(grassmannian_degree(8, 3))?,
        16,
    )?;
    Ok("n=5..9 → 0, 4, 7, 16, 120; n=8 matches the subspace form".to_string())
}

fn check_bracket_rows() -> Check {
    let table = lib(AngleBracketTable::new(12))?;
    let printed: [&[i64]; 6] = [
        &[1],
        &[-2, 1],
        &[1, -1, 1],
        &[-2, 0, 0, 1],
        &[1, -2, 0, 1, 1],
        &[-2, -1, -2, 1, 2, 1],
    ];
    for (n, row) in printed.iter().enumerate() {
        if table.row(n) != *row {
            return Err(format!("row {n}: expected {row:?}, got {:?}", table.row(n)));
        }
    }
    Ok("rows 0..5 match; alternating-sum identity holds through n=12".to_string())
}

fn check_closed_families() -> Check {
    for a in 1..=5i64 {
        want_u64(
            &format!("plane curves a={a}"),
            lib(boole_degree(2, a))?,
            (2 * (a - 1)) as u64,
        )?;
    }
    want_u64("cubic surfaces", lib(boole_degree(3, 3))?, 12)?;

    for (n, want) in [(4usize, 2u64), (5, 0), (6, 3), (8, 4)] {
        want_u64(&format!("Gr(2,{n})"), lib(holme_gr2(n))?, want)?;
    }

    for n in 2..=6usize {
        want_u64(
            &format!("adjoint n={n}"),
            lib(gammaab_degree(n, 1, 1))?,
            (n * (n - 1)) as u64,
        )?;
    }
    for a in 1..=3i64 {
        for b in 1..=3i64 {
            let want = (6 * (a + b - 1) * (2 * a * b - a - b + 1)) as u64;
            want_u64(
                &format!("hook n=3 a={a} b={b}"),
                lib(gammaab_degree(3, a, b))?,
                want,
            )?;
        }
    }

    want_u64("two-row (3;2,1)", lib(abn_degree(3, 2, 1))?, 6)?;
    for n in 3..=5usize {
        for a in 2..=3i64 {
            let got = lib(abn_degree(n, a, 1))?;
            let want = lib(tevelev_two_row(n, a))?;
            want_u64(&format!("two-row b=1 n={n} a={a}"), got, want)?;
        }
    }
    want_u64("equal two-row (4;1,1)", lib(aa_degree(4, 1))?, 2)?;

    Ok("Veronese, Gr(2,n), hook, and two-row families reproduce their frozen values".to_string())
}

fn check_hyperdet_branches(seed: u64) -> Check {
    let boundary = lib(hyperdet_degree(&[2, 2, 3], seed))?;
    want_u64("2x2x3", boundary.degree, 6)?;
    let beyond = lib(hyperdet_degree(&[2, 2, 4], seed))?;
    if beyond.is_hypersurface {
        return Err("2x2x4: expected a degenerate (non-hypersurface) format".to_string());
    }
    let det3 = lib(hyperdet_degree(&[3, 3], seed))?;
    want_u64("3x3 determinant", det3.degree, 3)?;
    Ok("2x2x3 → 6 (boundary), 2x2x4 degenerate, 3x3 → 3".to_string())
}

// ---- oracle suite ---------------------------------------------------------

fn check_cross_methods(seed: u64) -> Check {
    let mut cases = 0usize;
    for n in 1..=3usize {
        let rs = gl(n);
        let mut tuple = vec![0i64; n];
        loop {
            // advance through all weakly increasing tuples with entries ≤ 2
            let mut i = n;
            while i > 0 {
                i -= 1;
                if tuple[i] < 2 {
                    tuple[i] += 1;
                    for j in i + 1..n {
                        tuple[j] = tuple[i];
                    }
                    break;
                }
                if i == 0 {
                    tuple.clear();
                }
            }
            if tuple.is_empty() {
                break;
            }
            let w = Weight::from_ints(&tuple);
            let orbit = lib(degree(&rs, &w, seed))?.degree;
            let symm = lib(degree_symmetric(&rs, &w, seed + 1))?.degree;
            let jac = lib(degree_via_jacobi(&tuple))?;
            let per = lib(degree_via_permanent(&tuple))?;
            let sca = lib(degree_via_scalar_product(&tuple))?;
            for (tag, v) in [
                ("symmetric", symm),
                ("jacobi", jac),
                ("permanent", per),
                ("scalar-product", sca),
            ] {
                if v != orbit {
                    return Err(format!("λ={tuple:?}: orbit gives {orbit}, {tag} gives {v}"));
                }
            }
            cases += 1;
        }
    }
    Ok(format!(
        "5 methods agree on {cases} GL(n≤3) weights with entries ≤2"
    ))
}

fn check_fg_vs_direct(seed: u64) -> Check {
    let mut cases = 0usize;
    for factors in [&[(FactorType::A, 2)][..], &[(FactorType::B, 2)][..]] {
        let rs = build(factors);
        let fg = lib(fg_polynomial(&rs, seed))?;
        for y1 in 0..=2i64 {
            for y2 in 0..=2i64 {
                if y1 == 0 && y2 == 0 {
                    continue;
                }
                let via_fg = lib(degree_from_fg(&rs, &fg, &[y1, y2]))?;
                let lam = lib(rs.weight_from_fundamental(&[rat(y1), rat(y2)]))?;
                let direct = lib(degree(&rs, &lam, seed + 3))?;
                if via_fg.degree != direct.degree {
                    return Err(format!(
                        "y=({y1},{y2}): polynomial gives {}, localization gives {}",
                        via_fg.degree, direct.degree
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(format!(
        "degree polynomial equals direct localization on {cases} A2/B2 weights"
    ))
}

fn check_shift_invariance(seed: u64) -> Check {
    let rs = gl(3);
    let lam = Weight::from_ints(&[0, 1, 2]);
    for a in 1..=3i64 {
        lib(weight_shift_check(&rs, &lam, a, seed))?;
    }
    Ok("deg(λ) = deg(λ+a·1) = deg(a·1−rev λ) for a ≤ 3".to_string())
}

fn check_hyperdet_cube(seed: u64) -> Check {
    let engine_route = lib(hyperdet_degree(&[2, 2, 2], seed))?;
    let permanent_route = lib(hyperdet_degree_permanent(&[2, 2, 2]))?;
    want_u64("engine route", engine_route.degree, 4)?;
    want_u64("permanent route", permanent_route, 4)?;
    Ok("2x2x2 → 4 along both routes".to_string())
}

// ---- runner ---------------------------------------------------------------

pub fn run(suite: Suite, seed: u64) -> bool {
    let mut checks: Vec<(&'static str, Check)> = Vec::new();

    if suite == Suite::Paper || suite == Suite::All {
        checks.push(("gr38", check_gr38(seed)));
        checks.push(("regular-degrees", check_regular_degrees(seed)));
        checks.push(("fg-table", check_fg_table(seed)));
        checks.push(("gr3-row", check_gr3_row()));
        checks.push(("bracket-rows", check_bracket_rows()));
        checks.push(("closed-families", check_closed_families()));
        checks.push(("hyperdet-branches", check_hyperdet_branches(seed)));
    }
    if suite == Suite::Oracle || suite == Suite::All {
        checks.push(("cross-methods", check_cross_methods(seed)));
        checks.push(("fg-vs-direct", check_fg_vs_direct(seed)));
        checks.push(("shift-invariance", check_shift_invariance(seed)));
        checks.push(("hyperdet-cube", check_hyperdet_cube(seed)));
    }

    let mut failures = 0usize;
    for (name, result) in &checks {
        match result {
            Ok(detail) => write_line(format!("ok   {name} — {detail}")),
            Err(detail) => {
                failures += 1;
                write_line(format!("FAIL {name} — {detail}"));
            }
        }
    }
    write_line(format!(
        "verify: {} checks, {} failure{}",
        checks.len(),
        failures,
        if failures == 1 { "" } else { "s" }
    ));
    failures == 0
}
