//! Text formats.
//!
//! Ideals: a header `vars n`, then one generator per line such as
//! `x3*x5^2`. Clutters: a header `vertices n`, an optional `labels` line
//! naming all `n` vertices, then one edge per line as space-separated 1-based
//! indices or labels. Digraphs use the clutter header with one `u -> v` arc
//! per line. `#` starts a comment. Printing emits the canonical form, which
//! parses back to the same object and prints identically.

use crate::bits;
use crate::clutter::{Clutter, Digraph};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, MAX_VARS};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Input {
    Ideal(MonomialIdeal),
    Clutter(Clutter),
    Digraph(Digraph),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Ideal(_) => "ideal",
            Input::Clutter(_) => "clutter",
            Input::Digraph(_) => "digraph",
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Input::Ideal(i) => print_ideal(i),
            Input::Clutter(c) => print_clutter(c),
            Input::Digraph(d) => print_digraph(d),
        }
    }
}

/// A non-empty line with its 1-based number and the column of its first
/// character.
struct Line<'a> {
    number: usize,
    offset: usize,
    text: &'a str,
}

impl Line<'_> {
    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            column: self.offset + self.text[..at].chars().count(),
            message: message.into(),
        }
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let trimmed = body.trim_start();
            let offset = body[..body.len() - trimmed.len()].chars().count() + 1;
            let trimmed = trimmed.trim_end();
            (!trimmed.is_empty()).then_some(Line {
                number: i + 1,
                offset,
                text: trimmed,
            })
        })
        .collect()
}

/// Byte offsets and text of the whitespace-separated tokens.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(b)) => {
                out.push((b, &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out
}

fn header(lines: &[Line<'_>], keyword: &str) -> Result<usize> {
    let Some(first) = lines.first() else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("missing `{keyword} n` header"),
        });
    };
    let t = tokens(first.text);
    if t.len() != 2 || t[0].1 != keyword {
        return Err(first.error(0, format!("expected `{keyword} n`")));
    }
    let n: usize = t[1].1.parse().map_err(|_| first.error(t[1].0, "expected a vertex count"))?;
    if n > MAX_VARS {
        return Err(first.error(t[1].0, format!("at most {MAX_VARS} variables")));
    }
    Ok(n)
}

fn parse_generator(line: &Line<'_>, n: usize) -> Result<Monomial> {
    let s = line.text;
    if s == "1" {
        return Err(Error::UnitGenerator);
    }
    let mut exps = vec![0u16; n];
    let mut pos = 0;
    for factor in s.split('*') {
        let lead = factor.len() - factor.trim_start().len();
        let f = factor.trim();
        let at = pos + lead;
        let body = f
            .strip_prefix('x')
            .ok_or_else(|| line.error(at, "expected a variable `x<i>`"))?;
        let (var, exp) = match body.split_once('^') {
            Some((v, e)) => (v, Some(e)),
            None => (body, None),
        };
        let i: usize = var
            .parse()
            .ok()
            .filter(|i| (1..=n).contains(i))
            .ok_or_else(|| line.error(at + 1, format!("variable index must be in 1..={n}")))?;
        let e: u16 = match exp {
            None => 1,
            Some(e) => e
                .parse()
                .ok()
                .filter(|&e| e >= 1)
                .ok_or_else(|| line.error(at + 1 + var.len() + 1, "malformed exponent"))?,
        };
        exps[i - 1] = exps[i - 1].checked_add(e).ok_or(Error::ExponentOverflow)?;
        pos += factor.len() + 1;
    }
    Ok(Monomial::new(exps))
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let ls = lines(text);
    let n = header(&ls, "vars")?;
    let gens = ls[1..].iter().map(|l| parse_generator(l, n)).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

pub fn print_ideal(i: &MonomialIdeal) -> String {
    let mut s = format!("vars {}\n", i.nvars());
    for g in i.generators() {
        writeln!(s, "{g}").expect("string write");
    }
    s
}

/// Header, optional labels, and the index of the first body line.
fn clutter_prelude<'a>(ls: &'a [Line<'a>]) -> Result<(usize, Option<Vec<String>>, usize)> {
    let n = header(ls, "vertices")?;
    let Some(second) = ls.get(1) else {
        return Ok((n, None, 1));
    };
    let t = tokens(second.text);
    if t[0].1 != "labels" {
        return Ok((n, None, 1));
    }
    let labels: Vec<String> = t[1..].iter().map(|(_, s)| s.to_string()).collect();
    if labels.len() != n {
        return Err(second.error(0, format!("expected {n} labels, found {}", labels.len())));
    }
    for (k, (at, l)) in t[1..].iter().enumerate() {
        if labels[..k].contains(&l.to_string()) {
            return Err(second.error(*at, format!("duplicate label `{l}`")));
        }
    }
    Ok((n, Some(labels), 2))
}

fn vertex(line: &Line<'_>, at: usize, tok: &str, n: usize, labels: &Option<Vec<String>>) -> Result<usize> {
    if let Some(v) = labels.as_ref().and_then(|l| l.iter().position(|x| x == tok)) {
        return Ok(v);
    }
    match tok.parse::<usize>() {
        Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
        Ok(_) => Err(line.error(at, format!("vertex index must be in 1..={n}"))),
        Err(_) => Err(line.error(at, format!("unknown vertex `{tok}`"))),
    }
}

pub fn parse_clutter(text: &str) -> Result<Clutter> {
    let ls = lines(text);
    let (n, labels, body) = clutter_prelude(&ls)?;
    let mut edges = Vec::new();
    for line in &ls[body..] {
        let mut e = 0u64;
        for (at, tok) in tokens(line.text) {
            let v = vertex(line, at, tok, n, &labels)?;
            if e >> v & 1 == 1 {
                return Err(line.error(at, "repeated vertex in edge"));
            }
            e |= 1 << v;
        }
        if edges.contains(&e) {
            return Err(line.error(0, "repeated edge"));
        }
        edges.push(e);
    }
    let c = Clutter::new(n, edges)?;
    match labels {
        Some(l) => c.with_labels(l),
        None => Ok(c),
    }
}

fn print_labels(s: &mut String, labels: Option<&[String]>) {
    if let Some(l) = labels {
        writeln!(s, "labels {}", l.join(" ")).expect("string write");
    }
}

pub fn print_clutter(c: &Clutter) -> String {
    let mut s = format!("vertices {}\n", c.n());
    print_labels(&mut s, c.labels());
    for &e in c.edges() {
        let v: Vec<String> = bits::elements(e).map(|i| (i + 1).to_string()).collect();
        writeln!(s, "{}", v.join(" ")).expect("string write");
    }
    s
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let ls = lines(text);
    let (n, labels, body) = clutter_prelude(&ls)?;
    let mut arcs = Vec::new();
    for line in &ls[body..] {
        let t = tokens(line.text);
        if t.len() != 3 || t[1].1 != "->" {
            return Err(line.error(0, "expected an arc `u -> v`"));
        }
        let a = vertex(line, t[0].0, t[0].1, n, &labels)?;
        let b = vertex(line, t[2].0, t[2].1, n, &labels)?;
        if a == b {
            return Err(line.error(t[2].0, "loops are not allowed"));
        }
        arcs.push((a, b));
    }
    let d = Digraph::new(n, arcs)?;
    match labels {
        Some(l) => d.with_labels(l),
        None => Ok(d),
    }
}

pub fn print_digraph(d: &Digraph) -> String {
    let mut s = format!("vertices {}\n", d.n());
    print_labels(&mut s, d.labels());
    for &(a, b) in d.arcs() {
        writeln!(s, "{} -> {}", a + 1, b + 1).expect("string write");
    }
    s
}

/// Dispatches on the header; a `vertices` file with an arrow is a digraph.
pub fn parse_input(text: &str) -> Result<Input> {
    let ls = lines(text);
    let first = ls.first().map(|l| tokens(l.text)[0].1);
    match first {
        Some("vars") => parse_ideal(text).map(Input::Ideal),
        Some("vertices") if ls.iter().any(|l| l.text.contains("->")) => parse_digraph(text).map(Input::Digraph),
        Some("vertices") => parse_clutter(text).map(Input::Clutter),
        _ => Err(match ls.first() {
            Some(l) => l.error(0, "expected a `vars n` or `vertices n` header"),
            None => Error::Parse {
                line: 1,
                column: 1,
                message: "empty input".into(),
            },
        }),
    }
}
