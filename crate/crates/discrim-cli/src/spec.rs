//! Parsers for the group, weight, and format grammars.
//!
//! Groups are products of factor tokens joined by `+` or `x`, e.g. `A2`,
//! `GL4`, `B3+GL2`, `A1xA1xA1`.  Weights carry an explicit basis prefix:
//! `L:3,1,0,0` gives ambient coordinates, `w:1,1` fundamental-weight
//! coordinates.  All parse errors cite the offending token position.

use discrim::rational::Rational;
use discrim::roots::{FactorType, RootSystem, Weight};

fn parse_factor(token: &str, position: usize) -> Result<(FactorType, usize), String> {
    let t = token.trim().to_ascii_uppercase();
    if t.is_empty() {
        return Err(format!("empty factor at token {position} in group spec"));
    }
    let (typ, rank_str) = if let Some(r) = t.strip_prefix("GL") {
        (FactorType::Gl, r)
    } else if let Some(r) = t.strip_prefix('A') {
        (FactorType::A, r)
    } else if let Some(r) = t.strip_prefix('B') {
        (FactorType::B, r)
    } else if let Some(r) = t.strip_prefix('C') {
        (FactorType::C, r)
    } else if let Some(r) = t.strip_prefix('D') {
        (FactorType::D, r)
    } else if let Some(r) = t.strip_prefix('G') {
        (FactorType::G2, r)
    } else {
        return Err(format!(
            "unknown factor '{token}' at token {position}: expected A<r>, B<r>, C<r>, D<r>, G2, or GL<n>"
        ));
    };
    let rank: usize = rank_str
        .parse()
        .map_err(|_| format!("factor '{token}' at token {position}: '{rank_str}' is not a rank"))?;
    Ok((typ, rank))
}

pub fn parse_group(s: &str) -> Result<RootSystem, String> {
    let cleaned = s.trim();
    if cleaned.is_empty() {
        return Err("empty group spec".to_string());
    }
    let mut factors = Vec::new();
    for (i, token) in cleaned.split(['+', 'x', 'X', '*']).enumerate() {
        factors.push(parse_factor(token, i + 1)?);
    }
    RootSystem::build(&factors).map_err(|e| format!("group spec '{cleaned}': {e}"))
}

fn parse_coords(rest: &str, want: usize, what: &str) -> Result<Vec<Rational>, String> {
    let coords: Vec<Rational> = rest
        .split(',')
        .enumerate()
        .map(|(i, c)| {
            c.trim().parse::<Rational>().map_err(|_| {
                format!(
                    "coordinate {} ('{}') is not an integer or fraction",
                    i + 1,
                    c.trim()
                )
            })
        })
        .collect::<Result<_, _>>()?;
    if coords.len() != want {
        return Err(format!(
            "expected {want} {what} coordinates, got {}",
            coords.len()
        ));
    }
    Ok(coords)
}

pub fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight, String> {
    let t = s.trim();
    if let Some(rest) = t.strip_prefix("L:").or_else(|| t.strip_prefix("l:")) {
        let coords = parse_coords(rest, rs.ambient_dim(), "ambient (L)")?;
        Ok(Weight::new(coords))
    } else if let Some(rest) = t.strip_prefix("w:").or_else(|| t.strip_prefix("W:")) {
        let coords = parse_coords(rest, rs.rank(), "fundamental (w)")?;
        rs.weight_from_fundamental(&coords)
            .map_err(|e| e.to_string())
    } else {
        Err(
            "weight must start with 'L:' (ambient coordinates) or 'w:' (fundamental coordinates)"
                .to_string(),
        )
    }
}

/// Hyperdeterminant formats: `2x2x3`, `2,2,3`, or `2*2*3`.
pub fn parse_format(s: &str) -> Result<Vec<usize>, String> {
    let cleaned = s.trim();
    if cleaned.is_empty() {
        return Err("empty format".to_string());
    }
    cleaned
        .split(['x', 'X', ',', '*'])
        .enumerate()
        .map(|(i, tok)| {
            tok.trim().parse::<usize>().map_err(|_| {
                format!(
                    "format entry {} ('{}') is not a dimension",
                    i + 1,
                    tok.trim()
                )
            })
        })
        .collect()
}
