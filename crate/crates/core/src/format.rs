//! Text formats for graphs, codes and colorings.
//!
//! Every format starts with a header line `<kind> <N> [key=value ...]`.
//! Blank lines and lines starting with `#` are ignored.
//!
//! - `p 3graph N M` followed by `M` lines `a b c`.
//! - `trifcode N ell=.. r=..` followed by `N` words written as digit strings.
//! - `tripcol N ...` followed by `ceil(C(N,3)/64)` lines of 16 hex digits;
//!   bit `j` of line `i` is the color of the triple of colex rank `64i + j`
//!   (set for red).
//! - `paircol N palette=indexed:S|rainbow:ELL:A ...` followed by the pair
//!   colors in colex order, hex, 64 per line.

use crate::coloring::{PairColoring, Palette, TripleColoring};
use crate::combin::{choose2, choose3};
use crate::hypergraph::ThreeGraph;
use crate::trifference::TrifferenceCode;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt::Write;

/// Header metadata, written in key order.
pub type Meta = BTreeMap<String, String>;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty, non-comment lines with their 1-based numbers.
fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// The kind token of the header line, if any.
pub fn artifact_kind(s: &str) -> Option<&str> {
    content_lines(s)
        .next()
        .and_then(|(_, l)| l.split_whitespace().next())
}

fn write_header(out: &mut String, kind: &str, n: u32, meta: &Meta) {
    write!(out, "{kind} {n}").unwrap();
    for (k, v) in meta {
        assert!(!k.contains(char::is_whitespace) && !v.contains(char::is_whitespace));
        write!(out, " {k}={v}").unwrap();
    }
    out.push('\n');
}

struct Header<'a> {
    line: usize,
    n: u32,
    meta: Meta,
    rest: Box<dyn Iterator<Item = (usize, &'a str)> + 'a>,
}

fn read_header<'a>(s: &'a str, kind: &str) -> Result<Header<'a>> {
    let mut lines = content_lines(s);
    let (line, head) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
    let mut tok = head.split_whitespace();
    if tok.next() != Some(kind) {
        return Err(perr(line, format!("expected a {kind} header")));
    }
    let n = tok
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| perr(line, "missing vertex count"))?;
    let mut meta = Meta::new();
    for t in tok {
        let (k, v) = t
            .split_once('=')
            .ok_or_else(|| perr(line, format!("expected key=value, got {t:?}")))?;
        meta.insert(k.to_owned(), v.to_owned());
    }
    Ok(Header {
        line,
        n,
        meta,
        rest: Box::new(lines),
    })
}

pub fn write_edge_list(h: &ThreeGraph) -> String {
    let mut out = format!("p 3graph {} {}\n", h.num_vertices(), h.num_edges());
    for e in h.edges() {
        writeln!(out, "{} {} {}", e[0], e[1], e[2]).unwrap();
    }
    out
}

pub fn parse_edge_list(s: &str) -> Result<ThreeGraph> {
    let mut lines = content_lines(s);
    let (line, head) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
    let tok: Vec<&str> = head.split_whitespace().collect();
    let (n, m) = match tok[..] {
        ["p", "3graph", n, m] => (
            n.parse::<u32>()
                .map_err(|_| perr(line, "bad vertex count"))?,
            m.parse::<usize>()
                .map_err(|_| perr(line, "bad edge count"))?,
        ),
        _ => return Err(perr(line, "expected header `p 3graph N M`")),
    };
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let v: Vec<u32> = l
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| perr(line, format!("bad vertex {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [a, b, c] = v[..] else {
            return Err(perr(line, "an edge needs three vertices"));
        };
        if a == b || b == c || a == c || a.max(b).max(c) >= n {
            return Err(perr(line, format!("invalid edge {a} {b} {c}")));
        }
        edges.push([a, b, c]);
    }
    if edges.len() != m {
        return Err(perr(
            line,
            format!("header says {m} edges, found {}", edges.len()),
        ));
    }
    ThreeGraph::new(n, edges)
}

pub fn write_code(code: &TrifferenceCode, meta: &Meta) -> String {
    let mut m = meta.clone();
    m.insert("ell".into(), code.ell().to_string());
    m.insert("r".into(), code.r().to_string());
    let mut out = String::new();
    write_header(&mut out, "trifcode", code.len() as u32, &m);
    for w in code.words() {
        for &s in w {
            out.push((b'0' + s) as char);
        }
        out.push('\n');
    }
    out
}

pub fn parse_code(s: &str) -> Result<(TrifferenceCode, Meta)> {
    let h = read_header(s, "trifcode")?;
    let get = |k: &str| -> Result<usize> {
        h.meta
            .get(k)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| perr(h.line, format!("missing or bad {k}=")))
    };
    let (ell, r) = (get("ell")?, get("r")?);
    let mut words = Vec::with_capacity(h.n as usize);
    for (line, l) in h.rest {
        let w: Vec<u8> = l
            .bytes()
            .map(|b| match b {
                b'1'..=b'3' => Ok(b - b'0'),
                _ => Err(perr(line, format!("bad symbol {:?}", b as char))),
            })
            .collect::<Result<_>>()?;
        words.push(w);
    }
    if words.len() != h.n as usize {
        return Err(perr(
            h.line,
            format!("header says {} words, found {}", h.n, words.len()),
        ));
    }
    Ok((TrifferenceCode::new(ell, r, words)?, h.meta))
}

pub fn write_triple_coloring(chi: &TripleColoring, meta: &Meta) -> String {
    let mut out = String::with_capacity(17 * chi.words().len() + 64);
    write_header(&mut out, "tripcol", chi.num_vertices(), meta);
    for w in chi.words() {
        writeln!(out, "{w:016x}").unwrap();
    }
    out
}

pub fn parse_triple_coloring(s: &str) -> Result<(TripleColoring, Meta)> {
    let h = read_header(s, "tripcol")?;
    let expected = choose3(h.n as u64).div_ceil(64) as usize;
    let mut words = Vec::with_capacity(expected);
    for (line, l) in h.rest {
        if l.len() != 16 {
            return Err(perr(line, "expected 16 hex digits"));
        }
        words.push(u64::from_str_radix(l, 16).map_err(|_| perr(line, "bad hex word"))?);
    }
    if words.len() != expected {
        return Err(perr(
            h.line,
            format!("expected {expected} words, found {}", words.len()),
        ));
    }
    let chi = TripleColoring::from_words(h.n, words).map_err(|e| perr(h.line, e.to_string()))?;
    Ok((chi, h.meta))
}

fn palette_token(p: Palette) -> String {
    match p {
        Palette::Indexed { size } => format!("indexed:{size}"),
        Palette::Rainbow { ell, a } => format!("rainbow:{ell}:{a}"),
    }
}

fn parse_palette(t: &str) -> Option<Palette> {
    let parts: Vec<&str> = t.split(':').collect();
    match parts[..] {
        ["indexed", s] => Some(Palette::Indexed {
            size: s.parse().ok()?,
        }),
        ["rainbow", e, a] => Some(Palette::Rainbow {
            ell: e.parse().ok()?,
            a: a.parse().ok()?,
        }),
        _ => None,
    }
}

pub fn write_pair_coloring(pc: &PairColoring, meta: &Meta) -> String {
    let mut m = meta.clone();
    m.insert("palette".into(), palette_token(pc.palette()));
    let mut out = String::new();
    write_header(&mut out, "paircol", pc.num_vertices(), &m);
    for chunk in pc.colors().chunks(64) {
        let line: Vec<String> = chunk.iter().map(|c| format!("{c:x}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_pair_coloring(s: &str) -> Result<(PairColoring, Meta)> {
    let mut h = read_header(s, "paircol")?;
    let palette = h
        .meta
        .remove("palette")
        .and_then(|t| parse_palette(&t))
        .ok_or_else(|| perr(h.line, "missing or bad palette="))?;
    let expected = choose2(h.n as u64) as usize;
    let mut colors = Vec::with_capacity(expected);
    for (line, l) in h.rest {
        for t in l.split_whitespace() {
            colors.push(
                u32::from_str_radix(t, 16).map_err(|_| perr(line, format!("bad color {t:?}")))?,
            );
        }
    }
    if colors.len() != expected {
        return Err(perr(
            h.line,
            format!("expected {expected} colors, found {}", colors.len()),
        ));
    }
    let pc = PairColoring::new(h.n, palette, colors).map_err(|e| perr(h.line, e.to_string()))?;
    Ok((pc, h.meta))
}
