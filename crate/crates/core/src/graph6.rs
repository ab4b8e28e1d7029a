//! The graph6 interchange format (header-less short form).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

const BIAS: u8 = 63;
const MAX_N: u64 = 68_719_476_735;

fn bad(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

fn size_header(n: u64) -> Vec<u8> {
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    out
}

/// Encodes `g` without the `>>graph6<<` header.
pub fn encode(g: &Graph) -> String {
    let n = g.n() as u64;
    assert!(n <= MAX_N, "graph6 cannot encode {n} vertices");
    let mut out = size_header(n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..g.n() as Vertex {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(bad(format!("byte {b} outside 63..=126")));
    }
    let group = |s: &[u8]| s.iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - BIAS));
    let (n, body) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated 8-byte size header"));
            }
            (group(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated 4-byte size header"));
            }
            (group(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => (u64::from(first - BIAS), rest),
    };
    let n = usize::try_from(n).map_err(|_| bad("vertex count too large"))?;
    let pairs = n.saturating_mul(n.saturating_sub(1)) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n as Vertex {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push(Edge::new(i, j));
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    if pairs % 6 != 0 {
        let last = body[body.len() - 1] - BIAS;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    /// Reference encoder straight from the format description, kept
    /// deliberately naive: build the full bit string, then chunk it.
    fn naive_encode(g: &Graph) -> String {
        let n = g.n();
        let mut s = String::new();
        assert!(n <= 62);
        s.push((n as u8 + 63) as char);
        let mut bits = Vec::new();
        for j in 0..n {
            for i in 0..j {
                bits.push(g.has_edge(i as u32, j as u32));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for &b in chunk {
                v = v * 2 + u8::from(b);
            }
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn k4_is_c_tilde() {
        let k4 = generators::k4();
        assert_eq!(encode(&k4), "C~");
        assert_eq!(naive_encode(&k4), "C~");
        let g = decode("C~").unwrap();
        assert_eq!(g.vertices().map(|v| g.degree(v)).collect::<Vec<_>>(), [3, 3, 3, 3]);
    }

    #[test]
    fn petgraph_reference_string() {
        // A-C, A-E, B-D, D-E encodes to "DQc"
        let g = Graph::from_edge_list(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn prism_round_trips() {
        let p = generators::prism();
        assert_eq!(decode(&encode(&p)).unwrap(), p);
        assert_eq!(encode(&p), naive_encode(&p));
    }

    #[test]
    fn large_headers() {
        let g = Graph::empty(63);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap().n(), 63);
        assert_eq!(size_header(258_048), b"~~???~??".to_vec());
        assert_eq!(size_header(258_047), b"~}~~".to_vec());
    }

    #[test]
    fn rejects_garbage() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("C\x01").is_err());
        // n=2: one bit, padding must be zero
        assert!(decode("A_").is_ok());
        assert!(decode("A`").is_err());
    }
}
