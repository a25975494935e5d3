//! Text format for structure tensors.
//!
//! ```text
//! # comment
//! name sweedler
//! field Q
//! basis 1 g x gx
//! unit 0 1
//! mul 1 1 0 1          # e_1·e_1 has coefficient 1 on e_0
//! comul 2 2 0 1        # Δ(e_2) has coefficient 1 on e_2⊗e_0
//! counit 1 1
//! antipode 2 3 -1      # S(e_2) has coefficient -1 on e_3
//! ```
//!
//! Only nonzero entries are listed. The scalar is the rest of the line and
//! uses the scalar syntax of the field (`z` is ζ_ℓ, `q` the parameter).

use std::fmt::Write;

use crate::exact::{FieldTag, Matrix, Scalar};

use super::hopf::{zero_vec, FDAlgebra, FDHopf};
use super::FdError;

pub fn write_fd(h: &FDHopf) -> String {
    let n = h.dim();
    let mut out = String::new();
    let _ = writeln!(out, "name {}", h.name);
    let _ = writeln!(out, "field {}", h.field().name());
    let _ = writeln!(out, "basis {}", h.alg.basis.join(" "));
    for (i, c) in h.alg.unit.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let _ = writeln!(out, "unit {i} {c}");
    }
    for a in 0..n {
        for b in 0..n {
            for (c, v) in h.alg.mul[a][b].iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let _ = writeln!(out, "mul {a} {b} {c} {v}");
            }
        }
    }
    for a in 0..n {
        for (b, c, v) in h.coproduct_terms(a) {
            let _ = writeln!(out, "comul {a} {b} {c} {v}");
        }
    }
    for (a, c) in h.counit.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let _ = writeln!(out, "counit {a} {c}");
    }
    for a in 0..n {
        for b in 0..n {
            let v = h.antipode.get(b, a);
            if !v.is_zero() {
                let _ = writeln!(out, "antipode {a} {b} {v}");
            }
        }
    }
    out
}

/// Parses and checks every Hopf axiom.
pub fn parse_fd(text: &str) -> Result<FDHopf, FdError> {
    let mut name = String::from("unnamed");
    let mut field: Option<FieldTag> = None;
    let mut basis: Option<Vec<String>> = None;
    let mut entries: Vec<(usize, &str, Vec<usize>, Scalar)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: &str| FdError::Format(format!("line {}: {m}", ln + 1));
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match kw {
            "name" => name = rest.to_string(),
            "field" => field = Some(FieldTag::parse(rest).map_err(|e| err(&e.to_string()))?),
            "basis" => basis = Some(rest.split_whitespace().map(str::to_string).collect()),
            "unit" | "mul" | "comul" | "counit" | "antipode" => {
                let arity = match kw {
                    "unit" | "counit" => 1,
                    "antipode" => 2,
                    _ => 3,
                };
                let tag = field.ok_or_else(|| err("field must precede entries"))?;
                let n = basis.as_ref().ok_or_else(|| err("basis must precede entries"))?.len();
                let mut parts = rest.splitn(arity + 1, char::is_whitespace);
                let mut idx = Vec::with_capacity(arity);
                for _ in 0..arity {
                    let i: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(|| err("expected an index"))?;
                    if i >= n {
                        return Err(err(&format!("index {i} out of range")));
                    }
                    idx.push(i);
                }
                let s = parts.next().ok_or_else(|| err("missing scalar"))?;
                let v = Scalar::parse(s, tag).map_err(|e| err(&e.to_string()))?;
                entries.push((ln + 1, kw, idx, v));
            }
            _ => return Err(err(&format!("unknown keyword `{kw}`"))),
        }
    }
    let field = field.ok_or_else(|| FdError::Format("missing field".into()))?;
    let basis = basis.ok_or_else(|| FdError::Format("missing basis".into()))?;
    let n = basis.len();
    let mut unit = zero_vec(n);
    let mut mul = vec![vec![zero_vec(n); n]; n];
    let mut comul = vec![zero_vec(n * n); n];
    let mut counit = zero_vec(n);
    let mut antipode = Matrix::zeros(n, n);
    for (_, kw, i, v) in entries {
        match kw {
            "unit" => unit[i[0]] = v,
            "mul" => mul[i[0]][i[1]][i[2]] = v,
            "comul" => comul[i[0]][i[1] * n + i[2]] = v,
            "counit" => counit[i[0]] = v,
            _ => antipode.set(i[1], i[0], v),
        }
    }
    let h = FDHopf { name, alg: FDAlgebra { field, basis, mul, unit }, comul, counit, antipode };
    h.check()?;
    Ok(h)
}
