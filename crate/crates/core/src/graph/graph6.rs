//! The graph6 interchange format.
//!
//! Layout: a size prefix `N(n)`, then the upper triangle of the adjacency
//! matrix read column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed
//! big-endian into 6-bit groups, zero padded, each group offset by 63.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";
const MAX_N: usize = 1 << 18;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let column = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | column.contains(i) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
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

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses a single graph6 line. An optional `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut end = text.len();
    while end > 0 && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let start = if text[..end].starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let body = &text[..end];

    if let Some(pos) = (start..end).find(|&i| !(63..=126).contains(&body[i])) {
        return Err(parse_err(pos, format!("byte {} outside 63..=126", body[pos])));
    }
    let (n, mut pos) = decode_size(body, start)?;
    if n >= MAX_N {
        return Err(parse_err(start, format!("{n} vertices exceeds the supported 2^18")));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = end - pos;
    if have < need {
        return Err(parse_err(end, format!("expected {need} adjacency bytes, found {have}")));
    }
    if have > need {
        return Err(parse_err(pos + need, "trailing bytes after adjacency data"));
    }

    let mut adj = vec![VertexSet::new(); n];
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..need {
        let group = body[pos] - 63;
        for b in (0..6).rev() {
            let index = k * 6 + (5 - b);
            let bit = group >> b & 1 == 1;
            if index >= bits {
                if bit {
                    return Err(parse_err(pos, "nonzero padding bits"));
                }
                continue;
            }
            if bit {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Graph::from_adjacency(adj)
}

fn decode_size(body: &[u8], start: usize) -> Result<(usize, usize)> {
    let byte = |i: usize| -> Result<usize> {
        body.get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| parse_err(i, "truncated size prefix"))
    };
    let first = body.get(start).ok_or_else(|| parse_err(start, "empty input"))?;
    if *first != 126 {
        return Ok(((first - 63) as usize, start + 1));
    }
    if body.get(start + 1) != Some(&126) {
        let n = (start + 1..start + 4).try_fold(0, |acc, i| Ok::<_, Error>(acc << 6 | byte(i)?))?;
        if n < 63 {
            return Err(parse_err(start, "non-minimal size prefix"));
        }
        return Ok((n, start + 4));
    }
    let n = (start + 2..start + 8).try_fold(0, |acc, i| Ok::<_, Error>(acc << 6 | byte(i)?))?;
    if n < 258_048 {
        return Err(parse_err(start, "non-minimal size prefix"));
    }
    Ok((n, start + 8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedFamily};

    #[test]
    fn single_vertex() {
        let g = parse_graph6(b"@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(to_graph6(&g), "@");
    }

    #[test]
    fn empty_graph() {
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6(b"?").unwrap().n(), 0);
    }

    #[test]
    fn k2_hand_encoded() {
        // n = 2 -> 'A'; one bit x(0,1) = 1 -> 100000b = 32 -> 32 + 63 = '_'
        let k2 = build_named(NamedFamily::Complete(2)).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        assert_eq!(parse_graph6(b"A_\n").unwrap(), k2);
    }

    #[test]
    fn c5_hand_encoded() {
        // bits x01 x02 x12 x03 x13 x23 | x04 x14 x24 x34
        //      1   0   1   0   0   1   | 1   0   0   1   (+ 2 pad)
        // 101001b = 41 -> 'h'; 100100b = 36 -> 'c'
        let c5 = build_named(NamedFamily::Cycle(5)).unwrap();
        assert_eq!(to_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6(b"Dhc").unwrap(), c5);
    }

    #[test]
    fn header_accepted() {
        assert_eq!(parse_graph6(b">>graph6<<A_").unwrap().edge_count(), 1);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_graph6(b"A ").unwrap_err(),
            Error::Parse {
                offset: 1,
                message: "byte 32 outside 63..=126".into()
            }
        );
        match parse_graph6(b"A").unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 1),
            e => panic!("{e:?}"),
        }
        match parse_graph6(b"A__").unwrap_err() {
            Error::Parse { offset, .. } => assert_eq!(offset, 2),
            e => panic!("{e:?}"),
        }
        // n = 2 has one data bit; 'A' + 'o' (48 = 110000b) sets a padding bit
        match parse_graph6(b"Ao").unwrap_err() {
            Error::Parse { offset, message } => {
                assert_eq!(offset, 1);
                assert!(message.contains("padding"));
            }
            e => panic!("{e:?}"),
        }
        assert!(parse_graph6(b"").is_err());
        assert!(parse_graph6(b"~??").is_err());
    }

    #[test]
    fn long_size_prefix() {
        let g = Graph::empty(100);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }
}
