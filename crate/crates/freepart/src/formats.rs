//! graph6 and the plain-text bipartite edge-list format.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

const HEADER: &str = ">>graph6<<";

fn perr(offset: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        msg: msg.into(),
    }
}

/// Parses one graph6 string. An optional `>>graph6<<` header and a single
/// trailing newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    if text.starts_with(HEADER) {
        pos = HEADER.len();
    }
    let mut end = bytes.len();
    if end > pos && bytes[end - 1] == b'\n' {
        end -= 1;
        if end > pos && bytes[end - 1] == b'\r' {
            end -= 1;
        }
    }
    let body = &bytes[..end];

    let digit = |i: usize| -> Result<u64> {
        match body.get(i) {
            None => Err(perr(i, "truncated header")),
            Some(&c) if (63..=126).contains(&c) => Ok((c - 63) as u64),
            Some(&c) => Err(perr(i, format!("byte {c:#04x} outside graph6 range"))),
        }
    };

    let n: usize;
    if body.get(pos) == Some(&126) {
        if body.get(pos + 1) == Some(&126) {
            let mut v = 0u64;
            for i in 0..6 {
                v = v << 6 | digit(pos + 2 + i)?;
            }
            n = v as usize;
            pos += 8;
        } else {
            let mut v = 0u64;
            for i in 0..3 {
                v = v << 6 | digit(pos + 1 + i)?;
            }
            n = v as usize;
            pos += 4;
        }
    } else {
        n = digit(pos)? as usize;
        pos += 1;
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < pos + need {
        return Err(perr(body.len(), format!("truncated payload: {need} bytes expected")));
    }
    if body.len() > pos + need {
        return Err(perr(pos + need, "trailing bytes after graph6 payload"));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = digit(pos + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for sh in [12, 6, 0] {
            out.push((n >> sh & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for sh in [30, 24, 18, 12, 6, 0] {
            out.push((n >> sh & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the `bip |A| |B|` edge-list format. Blank lines and text after
/// `#` are ignored. Error offsets are byte offsets into `text`.
pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph> {
    let mut g: Option<BipartiteGraph> = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let num = |s: &str| -> Result<usize> {
            s.parse::<usize>()
                .map_err(|_| perr(start, format!("expected a non-negative integer, got {s:?}")))
        };
        match &mut g {
            None => {
                if toks.len() != 3 || toks[0] != "bip" {
                    return Err(perr(start, "expected header `bip <|A|> <|B|>`"));
                }
                g = Some(BipartiteGraph::new(num(toks[1])?, num(toks[2])?));
            }
            Some(h) => {
                if toks.len() != 2 {
                    return Err(perr(start, "expected an edge `a b`"));
                }
                let (x, y) = (num(toks[0])?, num(toks[1])?);
                if x >= h.a_size() || y >= h.b_size() {
                    return Err(perr(start, format!("edge {x} {y} out of range")));
                }
                h.add_edge(x, y);
            }
        }
    }
    g.ok_or_else(|| perr(text.len(), "missing `bip` header"))
}

pub fn write_bipartite(g: &BipartiteGraph) -> String {
    let mut s = format!("bip {} {}\n", g.a_size(), g.b_size());
    for (x, y) in g.edges() {
        s.push_str(&format!("{x} {y}\n"));
    }
    s
}
