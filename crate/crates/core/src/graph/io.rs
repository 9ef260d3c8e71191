//! graph6 reading/writing and DOT export.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 1 << 18;

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 encoding without header or trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let mut out = Vec::new();
    encode_n(g.n(), &mut out);
    let bits = g.upper_triangle_bits();
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - i);
            }
        }
        out.push(x + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn decode_digits(bytes: &[u8]) -> usize {
    bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Parses one graph6 string; an optional `>>graph6<<` header and a single trailing
/// newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut s = text.strip_prefix(HEADER).unwrap_or(text);
    s = s.strip_suffix('\n').unwrap_or(s);
    s = s.strip_suffix('\r').unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte 0x{:02x} at offset {pos} is outside the printable range 63..=126",
            bytes[pos]
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 8-byte length prefix".into()));
            }
            let n = decode_digits(&rest[..6]);
            if n <= 258_047 {
                return Err(Error::Graph6(format!("non-minimal length prefix for n={n}")));
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 4-byte length prefix".into()));
            }
            let n = decode_digits(&rest[..3]);
            if n <= 62 {
                return Err(Error::Graph6(format!("non-minimal length prefix for n={n}")));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((*b - 63) as usize, rest),
    };
    if n > MAX_N {
        return Err(Error::TooLarge {
            what: "graph6 vertex count",
            got: n,
            limit: MAX_N,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!("body has {} bytes, expected {need}", body.len())));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!("{} bytes of trailing garbage", body.len() - need)));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad = (body[k / 6] - 63) & ((1 << (6 - k % 6)) - 1);
        if pad != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// DOT rendering for inspection; lossy (the name is the only metadata kept).
pub fn write_dot(g: &Graph) -> String {
    let mut s = String::new();
    let name = g.name().unwrap_or("G").replace('"', "'");
    writeln!(s, "graph \"{name}\" {{").unwrap();
    for v in 0..g.n() {
        writeln!(s, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(write_graph6(&named::complete(1)), "@");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(write_graph6(&named::complete(4)), "C~");
        assert_eq!(write_graph6(&named::cycle(5)), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), named::cycle(5));
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), named::complete(4));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("C\u{7}"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~??B"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("Bx"), Err(Error::Graph6(_))));
    }

    #[test]
    fn long_prefix_roundtrip() {
        let g = named::cycle(100);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn dot_lists_edges() {
        let d = write_dot(&named::path(3));
        assert!(d.contains("0 -- 1;"));
        assert!(d.contains("1 -- 2;"));
    }

    proptest! {
        #[test]
        fn roundtrip(n in 0usize..40, seed in any::<u64>()) {
            let mut state = seed | 1;
            let g = Graph::from_fn(n, |_, _| {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state & 1 == 1
            });
            let s = write_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            prop_assert_eq!(write_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
