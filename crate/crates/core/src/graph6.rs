//! graph6 encoding (the nauty/geng text format).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

/// Decode one graph6 line. Vertices are labelled `"0".."n-1"`.
pub fn decode(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {b} outside the printable range 63..=126")));
    }
    let (n, body) = decode_order(bytes)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if body.len() != need {
        return Err(err(format!(
            "expected {need} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if pairs % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let six = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(err("truncated 8-byte order header"));
        }
        return Ok((six(&bytes[2..8]), &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(err("truncated 4-byte order header"));
    }
    Ok((six(&bytes[1..4]), &bytes[4..]))
}

/// Encode a graph in vertex-index order (labels are ignored).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                cur |= 1 << (5 - k % 6);
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(cur + 63);
                cur = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(cur + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn k4_from_c_tilde() {
        let g = decode("C~").unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        assert_eq!(encode(&families::complete(4)), "C~");
    }

    #[test]
    fn d_question_brace_round_trips() {
        let g = decode("D?{").unwrap();
        assert_eq!(g.n(), 5);
        // the four pairs (i, 4) are the only set bits: a star centred at 4
        assert_eq!(g.degree(4), 4);
        assert_eq!(encode(&g), "D?{");
    }

    #[test]
    fn header_and_newline_are_accepted() {
        let g = decode(">>graph6<<C~\n").unwrap();
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("C\x20").is_err());
        // n = 3 has 3 bits; "B" needs one data byte whose low 3 bits are zero
        assert!(decode("BA").is_err());
    }

    #[test]
    fn large_order_header() {
        let g = Graph::empty(100);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap().n(), 100);
    }

    #[test]
    fn exhaustive_round_trip_up_to_six() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let s = encode(&g);
                let h = decode(&s).unwrap();
                assert_eq!(g.edge_set(), h.edge_set());
                assert_eq!(encode(&h), s);
            }
        }
    }
}
