//! graph6 encoding: the upper triangle read column by column, packed into 6-bit
//! chunks offset by 63.

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, MAX_VERTICES};

pub fn encode(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<SimpleGraph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#x} outside the printable range")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6("graphs with more than 258047 vertices".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated vertex count".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "length mismatch: {n} vertices need {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut g = SimpleGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    #[test]
    fn known_strings() {
        assert_eq!(encode(&SimpleGraph::complete(3)), "Bw");
        assert_eq!(encode(&SimpleGraph::empty(1)), "@");
        assert_eq!(encode(&SimpleGraph::empty(0)), "?");
        // Petersen graph as distributed in the usual graph6 tables.
        let p = decode("IheA@GUAo").unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.degree_sequence().iter().all(|&d| d == 3));
        assert_eq!(decode(">>graph6<<Bw").unwrap(), SimpleGraph::complete(3));
    }

    #[test]
    fn long_vertex_count_header() {
        let g = NamedGraph::Cycle(70).build().unwrap();
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(""), Err(Error::Graph6(_))));
        assert!(matches!(decode("Bww"), Err(Error::Graph6(_))));
        assert!(matches!(decode("B"), Err(Error::Graph6(_))));
        assert!(matches!(decode("B\u{7f}"), Err(Error::Graph6(_))));
        // K3 with a stray padding bit.
        assert!(matches!(decode("Bx"), Err(Error::Graph6(_))));
    }

    #[test]
    fn round_trip_all_graphs_up_to_five_vertices() {
        for n in 0..=5usize {
            let e = n * n.saturating_sub(1) / 2;
            for mask in 0u64..(1 << e) {
                let g = SimpleGraph::from_edge_mask(n, mask);
                assert_eq!(decode(&encode(&g)).unwrap(), g);
            }
        }
    }
}
