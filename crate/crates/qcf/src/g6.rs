//! graph6 encoding and decoding, bit-compatible with the de facto
//! standard: N(n) header, then the upper triangle of the adjacency matrix
//! read column by column, packed into 6-bit groups offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Encode a graph of order up to 258047.
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        return Err(Error::Capacity(format!("graph6 order limit exceeded: {n}")));
    }
    let mut bits: Vec<bool> = Vec::with_capacity(if n < 2 { 0 } else { n * (n - 1) / 2 });
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push((v + 63) as char);
    }
    Ok(out)
}

/// Decode a graph6 string (optionally with the ">>graph6<<" prefix).
pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim().strip_prefix(">>graph6<<").unwrap_or_else(|| s.trim());
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    let (n, pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::Parse("graph6 orders above 258047 unsupported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Parse("truncated graph6 size field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | sixbits(b)? as usize;
        }
        (n, 4)
    } else {
        (sixbits(bytes[0])? as usize, 1)
    };
    let nbits = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::Parse(format!(
            "graph6 body length {} does not match order {n} (expected {nbytes})",
            bytes.len() - pos
        )));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6];
            let v = sixbits(byte)?;
            if v >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j).expect("triangle order produces no duplicates");
            }
            bit += 1;
            if bit >= nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero for a canonical encoding
    if nbits % 6 != 0 {
        let last = sixbits(bytes[pos + nbytes - 1])?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse("nonzero padding bits in graph6 body".into()));
        }
    }
    Ok(g)
}

fn sixbits(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Parse(format!("byte {b:#x} outside graph6 range")))
    }
}
