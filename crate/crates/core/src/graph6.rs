//! graph6 serialization (short form, n <= 62).
//!
//! Format: one byte `63 + n` for the order, then the upper-triangle adjacency
//! bits in column order (columns 1..n-1, rows 0..col-1 within a column),
//! packed big-endian six bits per byte, each data byte offset by 63 and the
//! final byte zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parse a graph6 line into a [`Graph`].
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 { offset: 0, reason: "empty input".into() });
    }
    let header = bytes[0];
    if header == 126 {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "long-form sizes (n > 62) are not supported".into(),
        });
    }
    if !(63..=125).contains(&header) {
        return Err(Error::Graph6 {
            offset: 0,
            reason: format!("header byte {header} outside 63..=125"),
        });
    }
    let n = (header - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(Error::Graph6 {
            offset: bytes.len().min(1 + nbytes),
            reason: format!(
                "expected {} data bytes for n={}, found {}",
                nbytes,
                n,
                bytes.len() - 1
            ),
        });
    }
    let mut g = Graph::empty(n.max(1));
    if n == 0 {
        // The 0-vertex graph has no representation in this crate; reject.
        return Err(Error::Graph6 { offset: 0, reason: "zero-vertex graph".into() });
    }
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6 {
                    offset: 1 + bit / 6,
                    reason: format!("data byte {byte} outside 63..=126"),
                });
            }
            let value = byte - 63;
            if value >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(row, col);
            }
            bit += 1;
        }
    }
    // Padding bits must be zero for a canonical encoding; tolerate but check range only.
    Ok(g)
}

/// Encode a [`Graph`] as a graph6 line (short form).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    let nbits = n * n.saturating_sub(1) / 2;
    let mut acc = 0u8;
    let mut filled = 0usize;
    let mut emitted = 0usize;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
                emitted += 6;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
        emitted += 6;
    }
    debug_assert_eq!(emitted.div_ceil(6), nbits.div_ceil(6));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent bit-level oracle: decode by walking the published format
    /// description directly over (col, row) pairs.
    fn oracle_edges(text: &str) -> Vec<(usize, usize)> {
        let b = text.as_bytes();
        let n = (b[0] - 63) as usize;
        let mut edges = Vec::new();
        let mut idx = 0usize;
        for col in 1..n {
            for row in 0..col {
                let byte = b[1 + idx / 6] - 63;
                if byte & (1 << (5 - idx % 6)) != 0 {
                    edges.push((row, col));
                }
                idx += 1;
            }
        }
        edges
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(write_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn k2_round_trip() {
        // "A_" is K_2: one data byte 0x5F = 63 + 0b100000.
        let g = parse_graph6("A_").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        assert!(g.has_edge(0, 1));
        assert_eq!(write_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn k5() {
        let g = parse_graph6("D~{").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 10));
        for u in 0..5 {
            for v in u + 1..5 {
                assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn five_vertex_decode_matches_oracle() {
        // "D?{" decodes to the star K_{1,4} under upper-triangle column order.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.edges(), oracle_edges("D?{"));
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        // The bull graph (triangle with two horns): triangle 0-1-2, horns 0-3, 1-4.
        let bull = parse_graph6("D{O").unwrap();
        let degs: Vec<usize> = (0..5).map(|v| bull.degree(v)).collect();
        let mut sorted = degs.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn exhaustive_round_trip_small() {
        // Every graph on n <= 5 vertices round-trips bit-exactly.
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let mut g = Graph::empty(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                let s = write_graph6(&g).unwrap();
                let h = parse_graph6(&s).unwrap();
                assert_eq!(g, h, "round-trip failed for n={n} mask={mask}");
                let mut oracle = oracle_edges(&s);
                oracle.sort();
                assert_eq!(h.edges(), oracle);
            }
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("~??").is_err()); // long form
        assert!(parse_graph6("D?").is_err()); // truncated payload
        assert!(parse_graph6("D?{{").is_err()); // trailing bytes
        let mut g = Graph::empty(1);
        let _ = &mut g;
        assert!(write_graph6(&Graph::empty(63)).is_err());
    }
}
