//! graph6 text encoding (header-less) and DOT export.
//!
//! The graph6 format packs the upper triangle of the adjacency matrix
//! column by column, six bits per printable byte. See the nauty
//! documentation (`formats.txt`) for the exact layout.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 68_719_476_735;

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph too large for graph6");
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(HEADER) {
        bytes = rest.as_bytes();
        base = HEADER.len();
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if bytes.is_empty() {
        return Err(parse_err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                base + i,
                format!("byte 0x{b:02x} outside 63..=126"),
            ));
        }
    }
    let value = |i: usize| (bytes[i] - 63) as usize;
    let (n, mut pos) = if bytes[0] != 126 {
        (value(0), 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(parse_err(
                base + bytes.len(),
                "truncated 8-byte order field",
            ));
        }
        ((2..8).fold(0, |acc, i| (acc << 6) | value(i)), 8)
    } else {
        if bytes.len() < 4 {
            return Err(parse_err(
                base + bytes.len(),
                "truncated 4-byte order field",
            ));
        }
        ((1..4).fold(0, |acc, i| (acc << 6) | value(i)), 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            base + bytes.len().min(expected),
            format!(
                "expected {expected} bytes for order {n}, found {}",
                bytes.len()
            ),
        ));
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = value(pos + k / 6);
            if byte >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j);
            }
            k += 1;
        }
    }
    pos += k / 6;
    if k % 6 != 0 {
        let pad = 6 - k % 6;
        if value(pos) & ((1 << pad) - 1) != 0 {
            return Err(parse_err(base + pos, "non-zero padding bits"));
        }
    }
    Ok(b.build())
}

/// Reads newline-delimited graph6; blank lines are skipped.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(lineno, line)| match line {
            Err(e) => Some(Err(Error::from(e))),
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(decode_graph6(l.trim_end()).map_err(|e| match e {
                Error::Graph6 { offset, message } => Error::Graph6 {
                    offset,
                    message: format!("line {}: {message}", lineno + 1),
                },
                other => other,
            })),
        })
}

pub fn write_graph6_stream<'a, W, I>(mut w: W, graphs: I) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        writeln!(w, "{}", encode_graph6(g))?;
    }
    Ok(())
}

pub fn encode_dot(g: &Graph, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "\\\""));
    for v in 0..g.order() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}
