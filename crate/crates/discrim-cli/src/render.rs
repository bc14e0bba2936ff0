//! Human tables and deterministic JSON for every subcommand.
//!
//! JSON objects serialize struct fields in declaration order, so equal
//! inputs and seeds produce byte-identical output.

use discrim::engine::{ClassReport, DegreeReport, FgPolynomial, Method};
use discrim::roots::{RootSystem, Weight};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Output {
    Table,
    Json,
}

pub fn method_tag(m: Method) -> &'static str {
    match m {
        Method::Orbit => "orbit",
        Method::Symmetric => "symmetric",
        Method::Fg => "fg",
        Method::ClosedForm => "closed-form",
        Method::Jacobi => "jacobi",
        Method::Permanent => "permanent",
        Method::ScalarProduct => "scalar-product",
    }
}

fn coord_strings(w: &Weight) -> Vec<String> {
    w.coords().iter().map(|c| c.to_string()).collect()
}

fn fundamental_strings(rs: &RootSystem, w: &Weight) -> Vec<String> {
    rs.fundamental_coords(w)
        .iter()
        .map(|c| c.to_string())
        .collect()
}

/// Writes one line to stdout, exiting quietly when the reader has closed
/// the pipe early (e.g. `discrim … | head`).
pub fn write_line(line: impl std::fmt::Display) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{line}").is_err() {
        std::process::exit(0);
    }
}

fn row(key: &str, value: impl AsRef<str>) {
    write_line(format!("{:<18}{}", key, value.as_ref()));
}

fn print_json<T: Serialize>(value: &T) {
    write_line(serde_json::to_string_pretty(value).expect("JSON serialization"));
}

#[derive(Serialize)]
struct DegreeJson {
    group: String,
    #[serde(rename = "weight_L")]
    weight_l: Vec<String>,
    weight_y: Vec<String>,
    degree: u64,
    hypersurface: bool,
    epsilon: i32,
    stabilizer_order: u64,
    methods: Vec<&'static str>,
    seeds: Vec<u64>,
}

fn degree_json(
    group: &str,
    rs: &RootSystem,
    dominant: &Weight,
    reports: &[DegreeReport],
) -> DegreeJson {
    let lead = &reports[0];
    let mut seeds = Vec::new();
    for r in reports {
        seeds.extend(r.seeds.iter().copied());
    }
    DegreeJson {
        group: group.to_string(),
        weight_l: coord_strings(dominant),
        weight_y: fundamental_strings(rs, dominant),
        degree: lead.degree,
        hypersurface: lead.is_hypersurface,
        epsilon: lead.epsilon,
        stabilizer_order: lead.stabilizer_order,
        methods: reports.iter().map(|r| method_tag(r.method)).collect(),
        seeds,
    }
}

pub fn emit_degree(
    output: Output,
    group: &str,
    rs: &RootSystem,
    dominant: &Weight,
    reports: &[DegreeReport],
) {
    let json = degree_json(group, rs, dominant, reports);
    match output {
        Output::Json => print_json(&json),
        Output::Table => {
            row("group", group);
            row("weight (L)", json.weight_l.join(" "));
            row("weight (y)", json.weight_y.join(" "));
            row("degree", json.degree.to_string());
            row("hypersurface", json.hypersurface.to_string());
            row("epsilon", json.epsilon.to_string());
            row("stabilizer |W_λ|", json.stabilizer_order.to_string());
            row("methods", json.methods.join(" "));
            row(
                "seeds",
                json.seeds
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
        }
    }
}

#[derive(Serialize)]
struct SigmaEntry {
    factor: usize,
    coefficient: String,
}

#[derive(Serialize)]
struct ClassJson {
    group: String,
    #[serde(rename = "weight_L")]
    weight_l: Vec<String>,
    weight_y: Vec<String>,
    degree: u64,
    hypersurface: bool,
    epsilon: i32,
    stabilizer_order: u64,
    methods: Vec<&'static str>,
    seeds: Vec<u64>,
    sigma1: Vec<SigmaEntry>,
    u_coefficient: String,
}

pub fn emit_class(
    output: Output,
    group: &str,
    rs: &RootSystem,
    dominant: &Weight,
    report: &ClassReport,
    stabilizer_order: u64,
) {
    let json = ClassJson {
        group: group.to_string(),
        weight_l: coord_strings(dominant),
        weight_y: fundamental_strings(rs, dominant),
        degree: report.degree,
        hypersurface: report.degree > 0,
        epsilon: report.epsilon,
        stabilizer_order,
        methods: vec!["orbit"],
        seeds: report.seeds.clone(),
        sigma1: report
            .sigma1_coefficients
            .iter()
            .map(|(factor, c)| SigmaEntry {
                factor: *factor,
                coefficient: c.to_string(),
            })
            .collect(),
        u_coefficient: report.u_coefficient.to_string(),
    };
    match output {
        Output::Json => print_json(&json),
        Output::Table => {
            row("group", group);
            row("weight (L)", json.weight_l.join(" "));
            row("weight (y)", json.weight_y.join(" "));
            for entry in &json.sigma1 {
                let (typ, n) = rs.factors()[entry.factor];
                row(
                    &format!("σ₁[{}{}#{}]", typ.label(), n, entry.factor),
                    &entry.coefficient,
                );
            }
            row("u coefficient", &json.u_coefficient);
            row("degree", json.degree.to_string());
            row("hypersurface", json.hypersurface.to_string());
        }
    }
}

#[derive(Serialize)]
struct FgJson {
    group: String,
    variables: usize,
    fg_x: String,
    fg_y: String,
}

pub fn emit_fg(output: Output, group: &str, rs: &RootSystem, fg: &FgPolynomial) {
    match output {
        Output::Json => print_json(&FgJson {
            group: group.to_string(),
            variables: rs.rank(),
            fg_x: fg.in_x.render_prefixed("x"),
            fg_y: fg.in_y.render_prefixed("y"),
        }),
        // The bare polynomial, one line, in the shifted x-basis: stable for
        // golden-file comparisons and pipelines.
        Output::Table => write_line(fg.in_x.render_prefixed("x")),
    }
}

#[derive(Serialize)]
pub struct ClosedJson {
    pub family: &'static str,
    pub parameters: Vec<i64>,
    pub degree: u64,
    pub hypersurface: bool,
}

pub fn emit_closed(output: Output, json: &ClosedJson) {
    match output {
        Output::Json => print_json(json),
        Output::Table => {
            row("family", json.family);
            row(
                "parameters",
                json.parameters
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            row("degree", json.degree.to_string());
            row("hypersurface", json.hypersurface.to_string());
        }
    }
}

#[derive(Serialize)]
pub struct HyperdetJson {
    pub format: Vec<usize>,
    pub degree: u64,
    pub hypersurface: bool,
    pub method: &'static str,
}

pub fn emit_hyperdet(output: Output, json: &HyperdetJson) {
    match output {
        Output::Json => print_json(json),
        Output::Table => {
            row(
                "format",
                json.format
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join("x"),
            );
            row("degree", json.degree.to_string());
            row("hypersurface", json.hypersurface.to_string());
            row("method", json.method);
        }
    }
}
