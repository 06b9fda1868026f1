//! The line-based `.saa` text format.
//!
//! ```text
//! saa 1
//! p <prime>
//! n <half-dim>
//! x <i> <j> <k> <value>    # (x_i y_j, y_k) = value
//! y <i> <j> <k> <value>    # (y_i y_j, y_k) = value
//! ```
//!
//! or, for forms not in presentation shape, `t <a> <b> <c> <value>` with
//! 1-based global basis indices `a < b < c` (`x_1, y_1, x_2, ...`). Stanza
//! kinds are not mixed. Everything after `#` is ignored.

use std::collections::BTreeSet;
use std::path::Path;

use crate::algebra::{Algebra, TernaryForm};
use crate::error::{Error, Result};
use crate::field::PrimeField;

use super::{NilpotentPresentation, ParamKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaaData {
    Presentation(NilpotentPresentation),
    Form(TernaryForm),
}

impl SaaData {
    pub fn algebra(&self) -> Algebra {
        match self {
            SaaData::Presentation(p) => super::build_algebra(p),
            SaaData::Form(t) => Algebra::new(t.clone()),
        }
    }

    pub fn field(&self) -> PrimeField {
        match self {
            SaaData::Presentation(p) => p.field(),
            SaaData::Form(t) => t.field(),
        }
    }

    pub fn half_dim(&self) -> usize {
        match self {
            SaaData::Presentation(p) => p.half_dim(),
            SaaData::Form(t) => t.half_dim(),
        }
    }

    pub fn presentation(&self) -> Option<&NilpotentPresentation> {
        match self {
            SaaData::Presentation(p) => Some(p),
            SaaData::Form(_) => None,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(line: usize, tok: &str) -> Result<u64> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a non-negative integer, found `{tok}`")))
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    key: &str,
    last_line: usize,
) -> Result<(usize, u64)> {
    let (no, toks) = lines
        .next()
        .ok_or_else(|| parse_err(last_line, format!("missing `{key}` line")))?;
    if toks.len() != 2 || toks[0] != key {
        return Err(parse_err(no, format!("expected `{key} <number>`")));
    }
    Ok((no, parse_num(no, toks[1])?))
}

pub fn parse_saa(text: &str) -> Result<SaaData> {
    let last_line = text.lines().count().max(1);
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    });
    let (no, version) = expect_header(&mut lines, "saa", last_line)?;
    if version != 1 {
        return Err(parse_err(no, format!("unsupported format version {version}")));
    }
    let (no, p) = expect_header(&mut lines, "p", last_line)?;
    let field = PrimeField::new(p).map_err(|e| parse_err(no, e.to_string()))?;
    let (no, n) = expect_header(&mut lines, "n", last_line)?;
    let n = usize::try_from(n).map_err(|_| parse_err(no, "n is too large"))?;

    let mut presentation = NilpotentPresentation::new(field, n);
    let mut form = TernaryForm::new(field, n);
    let mut kind: Option<bool> = None; // Some(true) for `t` stanzas
    let mut seen = BTreeSet::new();
    for (no, toks) in lines {
        let tag = toks[0];
        if !matches!(tag, "x" | "y" | "t") {
            return Err(parse_err(no, format!("unknown stanza `{tag}`")));
        }
        if toks.len() != 5 {
            return Err(parse_err(no, format!("expected `{tag} <i> <j> <k> <value>`")));
        }
        let is_t = tag == "t";
        match kind {
            Some(k) if k != is_t => {
                return Err(parse_err(no, "`t` stanzas cannot be mixed with `x`/`y` stanzas"));
            }
            _ => kind = Some(is_t),
        }
        let mut nums = [0u64; 4];
        for (slot, tok) in nums.iter_mut().zip(&toks[1..]) {
            *slot = parse_num(no, tok)?;
        }
        let [i, j, k, v] = nums;
        let bound = if is_t { 2 * n as u64 } else { n as u64 };
        if !(1 <= i && i < j && j < k && k <= bound) {
            return Err(parse_err(
                no,
                format!("indices must satisfy 1 <= i < j < k <= {bound}"),
            ));
        }
        if v == 0 || v >= u64::from(field.modulus()) {
            return Err(parse_err(no, format!("value must lie in [1, {})", field.modulus())));
        }
        if !seen.insert((tag, i, j, k)) {
            return Err(parse_err(no, format!("duplicate triple {i} {j} {k}")));
        }
        let (i, j, k, v) = (i as usize, j as usize, k as usize, v as u32);
        if is_t {
            form.set(i - 1, j - 1, k - 1, v)?;
        } else {
            let kind = if tag == "x" { ParamKind::Alpha } else { ParamKind::Beta };
            presentation.set(kind, i, j, k, v)?;
        }
    }
    Ok(if kind == Some(true) {
        SaaData::Form(form)
    } else {
        SaaData::Presentation(presentation)
    })
}

pub fn to_saa_string(data: &SaaData) -> String {
    let mut out = format!("saa 1\np {}\nn {}\n", data.field().modulus(), data.half_dim());
    match data {
        SaaData::Presentation(p) => {
            for ((i, j, k), v) in p.alpha_entries() {
                out += &format!("x {i} {j} {k} {v}\n");
            }
            for ((i, j, k), v) in p.beta_entries() {
                out += &format!("y {i} {j} {k} {v}\n");
            }
        }
        SaaData::Form(t) => {
            for ([a, b, c], v) in t.entries() {
                out += &format!("t {} {} {} {v}\n", a + 1, b + 1, c + 1);
            }
        }
    }
    out
}

pub fn read_saa(path: impl AsRef<Path>) -> Result<SaaData> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_saa(&text)
}

pub fn write_saa(path: impl AsRef<Path>, data: &SaaData) -> std::io::Result<()> {
    std::fs::write(path, to_saa_string(data))
}
