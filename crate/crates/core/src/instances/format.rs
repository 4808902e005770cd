//! The line-oriented instance file format.
//!
//! ```text
//! # comment
//! field.cyclotomic_order = 6
//! dim = 2
//! basis = [e, s]
//! mult
//! 0 0 0 1          # e_i e_j has coefficient c on e_k
//! unit
//! 0 1              # i coeff
//! comult
//! 1 1 1 1          # Δ(e_i) has coefficient c on e_j ⊗ e_k
//! counit
//! 0 1
//! antipode
//! 1 1 1            # S(e_i) has coefficient c on e_j
//! star
//! 1 1 1            # e_i* has coefficient c on e_j
//! subalgebra full = generators [[1, 0], [0, 1]]
//! ```
//!
//! Coefficients are polynomial strings in `z` (ζ_N), written without spaces
//! inside a tensor line. Sections may appear in any order; `star` is optional.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactlinalg::matrix::zeros;
use crate::exactlinalg::{CycloScalar, Matrix, Vector};
use crate::hopfcore::{Coalgebra, FinHopfAlgebra, FiniteAlgebra};

/// Parsed file contents before validation.
#[derive(Debug, Clone)]
pub struct InstanceFile {
    pub hopf: FinHopfAlgebra,
    pub subalgebras: Vec<(String, Vec<Vector>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Mult,
    Unit,
    Comult,
    Counit,
    Antipode,
    Star,
}

impl Section {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "mult" => Section::Mult,
            "unit" => Section::Unit,
            "comult" => Section::Comult,
            "counit" => Section::Counit,
            "antipode" => Section::Antipode,
            "star" => Section::Star,
            _ => return None,
        })
    }

    fn arity(self) -> usize {
        match self {
            Section::Mult | Section::Comult => 3,
            Section::Unit | Section::Counit => 1,
            Section::Antipode | Section::Star => 2,
        }
    }
}

fn scalar_string(c: &CycloScalar, order: u32) -> String {
    c.to_poly_string(order).replace(' ', "")
}

/// Writes a Hopf algebra and named subalgebra generators in the file format.
pub fn serialize(h: &FinHopfAlgebra, subalgebras: &[(String, Vec<Vector>)]) -> String {
    let n = h.dim();
    let order = h.conductor();
    let s = |c: &CycloScalar| scalar_string(c, order);
    let mut out = String::new();
    writeln!(out, "field.cyclotomic_order = {order}").unwrap();
    writeln!(out, "dim = {n}").unwrap();
    writeln!(out, "basis = [{}]", h.labels().join(", ")).unwrap();
    out.push_str("mult\n");
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.algebra().basis_product(i, j).iter().enumerate() {
                if !c.is_zero() {
                    writeln!(out, "{i} {j} {k} {}", s(c)).unwrap();
                }
            }
        }
    }
    out.push_str("unit\n");
    for (i, c) in h.one().iter().enumerate() {
        if !c.is_zero() {
            writeln!(out, "{i} {}", s(c)).unwrap();
        }
    }
    out.push_str("comult\n");
    for i in 0..n {
        let d = h.coalgebra().basis_comult(i);
        for j in 0..n {
            for k in 0..n {
                let c = &d[(j, k)];
                if !c.is_zero() {
                    writeln!(out, "{i} {j} {k} {}", s(c)).unwrap();
                }
            }
        }
    }
    out.push_str("counit\n");
    for (i, c) in h.coalgebra().counit().iter().enumerate() {
        if !c.is_zero() {
            writeln!(out, "{i} {}", s(c)).unwrap();
        }
    }
    let write_map = |out: &mut String, m: &Matrix| {
        for i in 0..n {
            for j in 0..n {
                let c = &m[(j, i)];
                if !c.is_zero() {
                    writeln!(out, "{i} {j} {}", s(c)).unwrap();
                }
            }
        }
    };
    out.push_str("antipode\n");
    write_map(&mut out, h.antipode_matrix());
    if let Some(m) = h.star_matrix() {
        out.push_str("star\n");
        write_map(&mut out, m);
    }
    for (name, gens) in subalgebras {
        let vs: Vec<String> = gens
            .iter()
            .map(|v| {
                let xs: Vec<String> = v.iter().map(s).collect();
                format!("[{}]", xs.join(", "))
            })
            .collect();
        writeln!(out, "subalgebra {name} = generators [{}]", vs.join(", ")).unwrap();
    }
    out
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn header_value<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(key)?.trim_start();
    Some(rest.strip_prefix('=')?.trim())
}

fn parse_bracket_list(s: &str, line: usize) -> Result<Vec<String>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| perr(line, "expected a bracketed list"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner.split(',').map(|x| x.trim().to_string()).collect())
}

fn parse_generators(s: &str, order: u32, n: usize, line: usize) -> Result<Vec<Vector>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| perr(line, "expected [[...], ...]"))?
        .trim();
    let mut out = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let start = rest
            .find('[')
            .ok_or_else(|| perr(line, "expected a generator vector"))?;
        let end = rest[start..]
            .find(']')
            .ok_or_else(|| perr(line, "unterminated generator vector"))?
            + start;
        let items = parse_bracket_list(&rest[start..=end], line)?;
        if items.len() != n {
            return Err(perr(
                line,
                format!("generator has {} entries, expected {n}", items.len()),
            ));
        }
        let v = items
            .iter()
            .map(|x| {
                CycloScalar::parse(x, order).map_err(|_| perr(line, format!("bad scalar {x:?}")))
            })
            .collect::<Result<Vector>>()?;
        out.push(v);
        rest = rest[end + 1..]
            .trim_start()
            .trim_start_matches(',')
            .trim_start();
    }
    Ok(out)
}

/// Parses the file format. The result is not yet validated against the axioms.
pub fn parse(name: &str, text: &str) -> Result<InstanceFile> {
    let mut order: Option<u32> = None;
    let mut dim: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut entries: Vec<(Section, usize, Vec<usize>, String)> = Vec::new();
    let mut seen: Vec<Section> = Vec::new();
    let mut subalgebra_lines: Vec<(usize, String, String)> = Vec::new();
    let mut current: Option<Section> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(v) = header_value(line, "field.cyclotomic_order") {
            let n: u32 = v
                .parse()
                .map_err(|_| perr(lineno, "cyclotomic order must be a positive integer"))?;
            if n == 0 {
                return Err(perr(lineno, "cyclotomic order must be positive"));
            }
            order = Some(n);
            continue;
        }
        if let Some(v) = header_value(line, "dim") {
            dim = Some(
                v.parse()
                    .map_err(|_| perr(lineno, "dim must be an integer"))?,
            );
            continue;
        }
        if let Some(v) = header_value(line, "basis") {
            labels = Some(parse_bracket_list(v, lineno)?);
            continue;
        }
        if let Some(rest) = line.strip_prefix("subalgebra ") {
            let (sub_name, def) = rest
                .split_once('=')
                .ok_or_else(|| perr(lineno, "expected `subalgebra <name> = generators [...]`"))?;
            let def = def
                .trim()
                .strip_prefix("generators")
                .ok_or_else(|| perr(lineno, "expected `generators`"))?;
            subalgebra_lines.push((lineno, sub_name.trim().to_string(), def.trim().to_string()));
            current = None;
            continue;
        }
        if let Some(sec) = Section::parse(line) {
            if seen.contains(&sec) {
                return Err(perr(lineno, format!("duplicate section {line}")));
            }
            seen.push(sec);
            current = Some(sec);
            continue;
        }
        let sec = current.ok_or_else(|| perr(lineno, format!("unexpected line {line:?}")))?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        let arity = sec.arity();
        if parts.len() != arity + 1 {
            return Err(perr(
                lineno,
                format!("expected {arity} indices and a coefficient"),
            ));
        }
        let idxs = parts[..arity]
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| perr(lineno, format!("bad index {p:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        entries.push((sec, lineno, idxs, parts[arity].to_string()));
    }

    let order = order.ok_or_else(|| perr(0, "missing field.cyclotomic_order"))?;
    let n = dim.ok_or_else(|| perr(0, "missing dim"))?;
    let labels = labels.ok_or_else(|| perr(0, "missing basis"))?;
    if labels.len() != n {
        return Err(perr(
            0,
            format!("basis has {} labels, dim is {n}", labels.len()),
        ));
    }
    for required in [
        Section::Mult,
        Section::Unit,
        Section::Comult,
        Section::Counit,
        Section::Antipode,
    ] {
        if !seen.contains(&required) {
            return Err(perr(
                0,
                format!("missing section {required:?}").to_lowercase(),
            ));
        }
    }

    let mut mult = vec![vec![zeros(n); n]; n];
    let mut unit = zeros(n);
    let mut comult = vec![Matrix::zeros(n, n); n];
    let mut counit = zeros(n);
    let mut antipode = Matrix::zeros(n, n);
    let mut star = seen.contains(&Section::Star).then(|| Matrix::zeros(n, n));

    for (sec, lineno, idxs, coeff) in entries {
        if let Some(bad) = idxs.iter().find(|&&i| i >= n) {
            return Err(perr(
                lineno,
                format!("index {bad} out of range for dim {n}"),
            ));
        }
        let c = CycloScalar::parse(&coeff, order)
            .map_err(|_| perr(lineno, format!("bad scalar {coeff:?}")))?;
        match sec {
            Section::Mult => mult[idxs[0]][idxs[1]][idxs[2]] = c,
            Section::Unit => unit[idxs[0]] = c,
            Section::Comult => comult[idxs[0]][(idxs[1], idxs[2])] = c,
            Section::Counit => counit[idxs[0]] = c,
            Section::Antipode => antipode[(idxs[1], idxs[0])] = c,
            Section::Star => star.as_mut().unwrap()[(idxs[1], idxs[0])] = c,
        }
    }

    let hopf = FinHopfAlgebra::from_parts(
        name,
        order,
        labels,
        FiniteAlgebra::new(n, mult, unit),
        Coalgebra::new(n, comult, counit),
        antipode,
        star,
    )?;
    let subalgebras = subalgebra_lines
        .into_iter()
        .map(|(lineno, sub, def)| Ok((sub, parse_generators(&def, order, n, lineno)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(InstanceFile { hopf, subalgebras })
}
