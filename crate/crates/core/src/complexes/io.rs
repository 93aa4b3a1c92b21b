//! Complex text format.
//!
//! ```text
//! ground 4
//! missing 2
//! 0 2
//! 1 3
//! ```
//!
//! The second header may also be `facets k` (followed by `k` face lines) or
//! the single keyword `void`. Faces are space-separated vertex indices below
//! the ground size; the empty face is written `-`. Lines starting with `#`
//! are comments.

use super::Complex;
use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_face(line_no: usize, line: &str, n: usize) -> Result<VertexSet> {
    if line == "-" {
        return Ok(VertexSet::EMPTY);
    }
    let mut s = VertexSet::EMPTY;
    for tok in line.split_whitespace() {
        let v: usize = tok
            .parse()
            .map_err(|_| perr(line_no, format!("invalid vertex `{tok}`")))?;
        if v >= n {
            return Err(perr(line_no, format!("vertex {v} outside ground 0..{n}")));
        }
        s.insert(v);
    }
    Ok(s)
}

pub fn parse_complex(text: &str) -> Result<Complex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (gl, ghead) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
    let n = match ghead.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["ground", n] => n
            .parse::<usize>()
            .map_err(|_| perr(gl, format!("invalid ground size `{n}`")))?,
        _ => return Err(perr(gl, "expected `ground n`")),
    };
    if n > MAX_VERTICES {
        return Err(perr(gl, format!("ground size {n} exceeds {MAX_VERTICES}")));
    }
    let ground = VertexSet::full(n);
    let (kl, khead) = lines
        .next()
        .ok_or_else(|| perr(gl + 1, "missing `missing k`, `facets k` or `void`"))?;
    let parts: Vec<_> = khead.split_whitespace().collect();
    let (kind, k) = match parts.as_slice() {
        ["void"] => {
            if let Some((l, _)) = lines.next() {
                return Err(perr(l, "unexpected content after `void`"));
            }
            return Ok(Complex::void(ground));
        }
        [kind @ ("missing" | "facets"), k] => (
            *kind,
            k.parse::<usize>()
                .map_err(|_| perr(kl, format!("invalid count `{k}`")))?,
        ),
        _ => return Err(perr(kl, "expected `missing k`, `facets k` or `void`")),
    };
    let mut faces = Vec::with_capacity(k);
    for (l, line) in lines {
        if faces.len() == k {
            return Err(perr(l, format!("more than the declared {k} faces")));
        }
        faces.push(parse_face(l, line, n)?);
    }
    if faces.len() < k {
        return Err(perr(
            kl,
            format!("declared {k} faces but found {}", faces.len()),
        ));
    }
    if kind == "missing" {
        Complex::from_missing_faces(ground, faces)
    } else {
        Complex::from_facets(ground, faces)
    }
}

fn write_face(s: VertexSet) -> String {
    if s.is_empty() {
        "-".to_string()
    } else {
        s.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Writes `X` with ground `0..=max(ground)`; `as_facets` selects the facet
/// form. Gaps in a non-contiguous ground set are written as non-faces, so the
/// face set is preserved exactly.
pub fn write_complex(x: &Complex, as_facets: bool) -> String {
    let n = x.ground().last().map_or(0, |v| v + 1);
    let gaps = VertexSet::full(n).difference(x.ground());
    let mut out = format!("ground {n}\n");
    if x.is_void() {
        out.push_str("void\n");
        return out;
    }
    let (kind, faces) = if as_facets {
        ("facets", x.facets().to_vec())
    } else {
        let mut m = x.missing_faces().to_vec();
        m.extend(gaps.iter().map(VertexSet::singleton));
        ("missing", m)
    };
    out.push_str(&format!("{kind} {}\n", faces.len()));
    for f in faces {
        out.push_str(&write_face(f));
        out.push('\n');
    }
    out
}
