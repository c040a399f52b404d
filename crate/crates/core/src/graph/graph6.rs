use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 encoding of `g`, without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

/// Parses one graph6 line. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!("byte {:#04x} at position {pos} is outside 63..=126", bytes[pos])));
    }
    let vals: Vec<u32> = bytes.iter().map(|&b| (b - 63) as u32).collect();
    let (n, body) = if vals[0] < 63 {
        (vals[0] as usize, &vals[1..])
    } else if vals.len() >= 2 && vals[1] < 63 {
        if vals.len() < 4 {
            return Err(Error::Graph6("truncated vertex count".into()));
        }
        let n = vals[1..4].iter().fold(0usize, |a, &v| (a << 6) | v as usize);
        (n, &vals[4..])
    } else {
        if vals.len() < 8 {
            return Err(Error::Graph6("truncated vertex count".into()));
        }
        let n = vals[2..8].iter().fold(0usize, |a, &v| (a << 6) | v as usize);
        (n, &vals[8..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!("truncated: {n} vertices need {need} data bytes, found {}", body.len())));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!("{} trailing bytes after adjacency data", body.len() - need)));
    }
    let pad = need * 6 - nbits;
    if pad > 0 && body[need - 1] & ((1 << pad) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut g = Graph::new(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if body[idx / 6] >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            idx += 1;
        }
    }
    Ok(g)
}
