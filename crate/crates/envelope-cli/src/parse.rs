//! Parsers for the line-oriented `.lie` algebra format and the tower
//! description format that extends it with `stage` lines.

use envelope_core::lie::{LieAlgebra, Subspace};
use envelope_core::Rat;
use num_traits::One;

use crate::expr;
use crate::CliError;

/// A parsed tower description: the base algebra plus named ideal spans,
/// ordered largest to smallest.
pub struct TowerFile {
    pub base: LieAlgebra,
    pub stages: Vec<(String, Subspace)>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_rat(s: &str, lineno: usize) -> Result<Rat, CliError> {
    s.parse::<Rat>()
        .map_err(|_| CliError::parse(lineno, format!("invalid rational `{s}`")))
}

/// One summand of a bracket right-hand side: `coeff*name`, `name`, or a
/// bare rational would be malformed (brackets land in the algebra).
fn parse_bracket_term(
    term: &str,
    names: &[String],
    lineno: usize,
) -> Result<(usize, Rat), CliError> {
    let term = term.trim();
    let (coeff, name) = match term.split_once('*') {
        Some((c, n)) => (parse_rat(c.trim(), lineno)?, n.trim()),
        None => (Rat::one(), term),
    };
    let idx = names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| CliError::parse(lineno, format!("unknown basis element `{name}`")))?;
    Ok((idx, coeff))
}

/// Split a right-hand side like `a + 2*b - 1/2*c` into signed terms.
fn split_signed_terms(rhs: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut pending_sign = false;
    for ch in rhs.chars() {
        match ch {
            '+' | '-' if !current.trim().is_empty() || !pending_sign => {
                if !current.trim().is_empty() {
                    out.push((negative, current.trim().to_string()));
                }
                current = String::new();
                negative = ch == '-';
                pending_sign = true;
            }
            '-' => {
                negative = !negative;
            }
            _ => {
                current.push(ch);
                if !ch.is_whitespace() {
                    pending_sign = false;
                }
            }
        }
    }
    if !current.trim().is_empty() {
        out.push((negative, current.trim().to_string()));
    }
    out
}

struct RawLines<'a> {
    basis: Option<(usize, Vec<String>)>,
    brackets: Vec<(usize, &'a str)>,
    weights: Vec<(usize, &'a str)>,
    stages: Vec<(usize, &'a str)>,
}

fn scan(text: &str) -> Result<RawLines<'_>, CliError> {
    let mut raw = RawLines {
        basis: None,
        brackets: Vec::new(),
        weights: Vec::new(),
        stages: Vec::new(),
    };
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = strip_comment(line).trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "basis" => {
                if raw.basis.is_some() {
                    return Err(CliError::parse(lineno, "duplicate `basis` line".into()));
                }
                if !raw.brackets.is_empty() || !raw.weights.is_empty() {
                    return Err(CliError::parse(lineno, "`basis` must come first".into()));
                }
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(CliError::parse(lineno, "empty basis".into()));
                }
                raw.basis = Some((lineno, names));
            }
            "bracket" => raw.brackets.push((lineno, rest)),
            "weight" => raw.weights.push((lineno, rest)),
            "stage" => raw.stages.push((lineno, rest)),
            other => {
                return Err(CliError::parse(
                    lineno,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }
    if raw.basis.is_none() {
        return Err(CliError::parse(1, "missing `basis` line".into()));
    }
    Ok(raw)
}

fn build_algebra(raw: &RawLines<'_>) -> Result<(LieAlgebra, Option<Vec<u32>>), CliError> {
    let (_, names) = raw.basis.as_ref().unwrap();
    let mut brackets = Vec::new();
    for &(lineno, rest) in &raw.brackets {
        // `bracket a b = rhs`
        let (lhs, rhs) = rest
            .split_once('=')
            .ok_or_else(|| CliError::parse(lineno, "expected `bracket <a> <b> = ...`".into()))?;
        let operands: Vec<&str> = lhs.split_whitespace().collect();
        let [a, b] = operands[..] else {
            return Err(CliError::parse(
                lineno,
                "bracket needs exactly two operands".into(),
            ));
        };
        let find = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| CliError::parse(lineno, format!("unknown basis element `{name}`")))
        };
        let (i, j) = (find(a)?, find(b)?);
        let mut terms = Vec::new();
        for (negative, term) in split_signed_terms(rhs) {
            let (k, c) = parse_bracket_term(&term, names, lineno)?;
            terms.push((k, if negative { -c } else { c }));
        }
        brackets.push(((i, j), terms));
    }
    let l = LieAlgebra::new(names.clone(), brackets)
        .map_err(|e| CliError::parse(raw.basis.as_ref().unwrap().0, e.to_string()))?;
    if raw.weights.is_empty() {
        return Ok((l, None));
    }
    // unspecified names default to weight 1
    let mut weights = vec![1u32; names.len()];
    for &(lineno, rest) in &raw.weights {
        let (name, value) = rest
            .split_once('=')
            .ok_or_else(|| CliError::parse(lineno, "expected `weight <name> = <k>`".into()))?;
        let name = name.trim();
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| CliError::parse(lineno, format!("unknown basis element `{name}`")))?;
        let w: u32 = value
            .trim()
            .parse()
            .map_err(|_| CliError::parse(lineno, format!("invalid weight `{}`", value.trim())))?;
        if w == 0 {
            return Err(CliError::parse(lineno, "weights must be positive".into()));
        }
        weights[idx] = w;
    }
    Ok((l, Some(weights)))
}

/// Parse a `.lie` file body into the algebra and the declared weights,
/// without enforcing weight-additivity (so `check` can report it as a
/// verification result rather than a parse error).
pub fn parse_lie_parts(text: &str) -> Result<(LieAlgebra, Option<Vec<u32>>), CliError> {
    let raw = scan(text)?;
    if let Some(&(lineno, _)) = raw.stages.first() {
        return Err(CliError::parse(
            lineno,
            "`stage` lines are only valid in tower files".into(),
        ));
    }
    build_algebra(&raw)
}

/// Parse a `.lie` file body, applying declared weights.
pub fn parse_lie(text: &str) -> Result<LieAlgebra, CliError> {
    let (l, weights) = parse_lie_parts(text)?;
    match weights {
        Some(w) => l
            .with_weights(w)
            .map_err(|e| CliError::parse(0, e.to_string())),
        None => Ok(l),
    }
}

/// Parse a tower description: a `.lie` body plus
/// `stage <name> = span(<entries>)` lines, largest ideal first.
pub fn parse_tower(text: &str) -> Result<TowerFile, CliError> {
    let raw = scan(text)?;
    let (base, weights) = build_algebra(&raw)?;
    let base = match weights {
        Some(w) => base
            .with_weights(w)
            .map_err(|e| CliError::parse(0, e.to_string()))?,
        None => base,
    };
    let mut stages = Vec::new();
    for &(lineno, rest) in &raw.stages {
        let (name, rhs) = rest
            .split_once('=')
            .ok_or_else(|| CliError::parse(lineno, "expected `stage <name> = span(...)`".into()))?;
        let rhs = rhs.trim();
        let inner = rhs
            .strip_prefix("span(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| {
                CliError::parse(lineno, "stage right-hand side must be `span(...)`".into())
            })?;
        let mut vectors = Vec::new();
        for entry in inner.split(',') {
            let entry = entry.trim();
            if entry.is_empty() {
                continue;
            }
            let v = expr::parse_linear_combination(&base, entry).map_err(|e| e.at_line(lineno))?;
            vectors.push(v);
        }
        let span = Subspace::from_vectors(base.dim(), &vectors)
            .map_err(|e| CliError::parse(lineno, e.to_string()))?;
        stages.push((name.trim().to_string(), span));
    }
    if raw.stages.is_empty() {
        return Err(CliError::parse(
            1,
            "tower file needs at least one `stage` line".into(),
        ));
    }
    Ok(TowerFile { base, stages })
}
