//! Plain-text field files.
//!
//! ```text
//! # mdgauge field v1
//! kind: gauge
//! group: su2
//! active: 0 1
//! extents: 8 8
//! spacing: 0.7853981633974483 0.7853981633974483
//! seed: 42
//! components: 2
//! direction: 0
//! <one line per site: re im re im ... (row-major)>
//! direction: 1
//! ...
//! ```
//!
//! Spinor files use `kind: spinor`, `width: <components per site>` and a
//! single block without a `direction:` line. Numbers are written in Rust's
//! shortest round-trip form, so a write/read cycle is bit-exact. Fields read
//! back carry spectral gradients.

use std::fmt::Write as _;

use super::{Field, Grid};
use crate::clifford::C64;
use crate::error::{Error, Result};
use crate::gauge::GaugeConfig;
use crate::lie::{CMat, CVec, GaugeGroup};

const MAGIC: &str = "# mdgauge field v1";

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn write_header(out: &mut String, kind: &str, extra: &[(&str, String)], grid: &Grid, seed: Option<u64>) {
    let _ = writeln!(out, "{MAGIC}");
    let _ = writeln!(out, "kind: {kind}");
    for (k, v) in extra {
        let _ = writeln!(out, "{k}: {v}");
    }
    let _ = writeln!(out, "active: {}", join(grid.active()));
    let _ = writeln!(out, "extents: {}", join(grid.extents()));
    let _ = writeln!(out, "spacing: {}", join(grid.spacing()));
    let _ = writeln!(out, "seed: {}", seed.map_or("none".to_string(), |s| s.to_string()));
}

fn write_row(out: &mut String, values: &[C64]) {
    let parts: Vec<String> = values.iter().flat_map(|z| [z.re.to_string(), z.im.to_string()]).collect();
    let _ = writeln!(out, "{}", parts.join(" "));
}

pub fn write_gauge(a: &GaugeConfig, seed: Option<u64>) -> String {
    let mut out = String::new();
    let dirs = a.directions();
    write_header(
        &mut out,
        "gauge",
        &[("group", a.group().to_string()), ("colors", a.group().colors().to_string())],
        a.grid(),
        seed,
    );
    let _ = writeln!(out, "components: {}", dirs.len());
    for mu in dirs {
        let _ = writeln!(out, "direction: {mu}");
        for v in a.component(mu).expect("listed direction").values() {
            write_row(&mut out, v.data());
        }
    }
    out
}

pub fn write_spinor(psi: &Field<CVec>, seed: Option<u64>) -> String {
    let mut out = String::new();
    let width = psi.values().first().map_or(0, CVec::len);
    write_header(&mut out, "spinor", &[("width", width.to_string())], psi.grid(), seed);
    for v in psi.values() {
        write_row(&mut out, &v.0);
    }
    out
}

/// Header fields of a parsed file.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldHeader {
    pub kind: String,
    pub group: Option<GaugeGroup>,
    pub width: Option<usize>,
    pub grid: Grid,
    pub seed: Option<u64>,
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Filter<std::str::Lines<'a>, fn(&&str) -> bool>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let keep: fn(&&str) -> bool = |l| !l.trim().is_empty();
        Self { inner: text.lines().filter(keep).peekable() }
    }

    fn next(&mut self) -> Result<&'a str> {
        self.inner.next().ok_or_else(|| parse_err("unexpected end of file"))
    }

    fn key(&mut self, key: &str) -> Result<&'a str> {
        let line = self.next()?;
        line.strip_prefix(key)
            .and_then(|r| r.strip_prefix(':'))
            .map(str::trim)
            .ok_or_else(|| parse_err(format!("expected `{key}:`, found `{line}`")))
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split_whitespace().map(|t| t.parse().map_err(|_| parse_err(format!("bad {what} `{t}`")))).collect()
}

fn parse_row(line: &str, expected: usize) -> Result<Vec<C64>> {
    let nums: Vec<f64> = parse_list(line, "number")?;
    if nums.len() != 2 * expected {
        return Err(parse_err(format!("expected {} numbers per site, found {}", 2 * expected, nums.len())));
    }
    Ok(nums.chunks(2).map(|c| C64::new(c[0], c[1])).collect())
}

fn read_header(lines: &mut Lines<'_>) -> Result<FieldHeader> {
    if lines.next()?.trim() != MAGIC {
        return Err(parse_err("missing field file header"));
    }
    let kind = lines.key("kind")?.to_string();
    let (group, width) = match kind.as_str() {
        "gauge" => {
            let g = lines.key("group")?;
            let group = GaugeGroup::parse(g).ok_or_else(|| parse_err(format!("unknown group `{g}`")))?;
            let colors: usize = lines.key("colors")?.parse().map_err(|_| parse_err("bad colour count"))?;
            if colors != group.colors() {
                return Err(parse_err("colour count does not match the group"));
            }
            (Some(group), None)
        }
        "spinor" => (None, Some(lines.key("width")?.parse().map_err(|_| parse_err("bad width"))?)),
        other => return Err(parse_err(format!("unknown field kind `{other}`"))),
    };
    let active = parse_list(lines.key("active")?, "direction")?;
    let extents = parse_list(lines.key("extents")?, "extent")?;
    let spacing = parse_list(lines.key("spacing")?, "spacing")?;
    let grid = Grid::new(active, extents, spacing)?;
    let seed = match lines.key("seed")? {
        "none" => None,
        s => Some(s.parse().map_err(|_| parse_err(format!("bad seed `{s}`")))?),
    };
    Ok(FieldHeader { kind, group, width, grid, seed })
}

pub fn read_gauge(text: &str) -> Result<(GaugeConfig, FieldHeader)> {
    let mut lines = Lines::new(text);
    let header = read_header(&mut lines)?;
    let group = header.group.ok_or_else(|| parse_err("not a gauge field file"))?;
    let count: usize = lines.key("components")?.parse().map_err(|_| parse_err("bad component count"))?;
    let n = group.colors();
    let mut comps = Vec::with_capacity(count);
    for _ in 0..count {
        let mu: usize = lines.key("direction")?.parse().map_err(|_| parse_err("bad direction"))?;
        let values = (0..header.grid.site_count())
            .map(|_| Ok(CMat::from_vec(n, parse_row(lines.next()?, n * n)?)))
            .collect::<Result<Vec<_>>>()?;
        comps.push((mu, Field::new(header.grid.clone(), values)?.with_spectral_gradients()));
    }
    if lines.inner.peek().is_some() {
        return Err(parse_err("trailing data after the last component"));
    }
    Ok((GaugeConfig::new(group, header.grid.clone(), comps)?, header))
}

pub fn read_spinor(text: &str) -> Result<(Field<CVec>, FieldHeader)> {
    let mut lines = Lines::new(text);
    let header = read_header(&mut lines)?;
    let width = header.width.ok_or_else(|| parse_err("not a spinor field file"))?;
    let values = (0..header.grid.site_count())
        .map(|_| Ok(CVec(parse_row(lines.next()?, width)?)))
        .collect::<Result<Vec<_>>>()?;
    if lines.inner.peek().is_some() {
        return Err(parse_err("trailing data after the last site"));
    }
    Ok((Field::new(header.grid.clone(), values)?.with_spectral_gradients(), header))
}
