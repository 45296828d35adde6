use super::Graph;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Graph families used throughout the library.
///
/// Vertex numbering is fixed:
/// * `Cycle(n)`, `Path(n)`: vertices in order along the cycle or path.
/// * `R(n)`: `n + 1` five-cycles on `5i..5i+5`, then a hub adjacent to
///   vertex `5i` of every cycle.
/// * `H(n)`: a path `0..n`, then two pendants `n, n+1` on vertex `0` and two
///   pendants `n+2, n+3` on vertex `n-1`. For `n = 1` all four pendants hang
///   off the single path vertex. This shape is read off a drawing and is the
///   only place it is defined; [`h_graph`](crate::invariants::h_graph) uses it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedFamily {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Edgeless(usize),
    H(usize),
    R(usize),
    TwoK2,
}

pub fn build_named(family: NamedFamily) -> Result<Graph> {
    use NamedFamily::*;
    let bad = |what: &str| Err(Error::InvalidParameter(format!("{family}: {what}")));
    match family {
        Complete(n) | Path(n) | Edgeless(n) | H(n) | R(n) if n == 0 => bad("parameter must be positive"),
        Cycle(n) if n < 3 => bad("cycle length must be at least 3"),
        Complete(n) => Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
        Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
        Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        Edgeless(n) => Ok(Graph::empty(n)),
        H(n) => {
            let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
            edges.extend([(0, n), (0, n + 1), (n - 1, n + 2), (n - 1, n + 3)]);
            Graph::from_edges(n + 4, edges)
        }
        R(n) => {
            let cycles = n + 1;
            let hub = 5 * cycles;
            let mut edges = Vec::with_capacity(6 * cycles);
            for c in 0..cycles {
                let base = 5 * c;
                edges.extend((0..5).map(|i| (base + i, base + (i + 1) % 5)));
                edges.push((base, hub));
            }
            Graph::from_edges(hub + 1, edges)
        }
        TwoK2 => Graph::from_edges(4, [(0, 1), (2, 3)]),
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedFamily::*;
        match self {
            Complete(n) => write!(f, "K{n}"),
            Cycle(n) => write!(f, "C{n}"),
            Path(n) => write!(f, "P{n}"),
            Edgeless(n) => write!(f, "E{n}"),
            H(n) => write!(f, "H{n}"),
            R(n) => write!(f, "R{n}"),
            TwoK2 => write!(f, "2K2"),
        }
    }
}

/// Parses `C5`, `Kn:4`, `H3`, `R2`, `E6`, `P4` and `2K2`.
impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "2K2" {
            return Ok(NamedFamily::TwoK2);
        }
        let bad = || Error::InvalidParameter(format!("unknown named graph {s:?}"));
        let mut chars = s.chars();
        let tag = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let digits = rest
            .strip_prefix("n:")
            .or_else(|| rest.strip_prefix('n'))
            .unwrap_or(rest);
        let k: usize = digits.parse().map_err(|_| bad())?;
        let family = match tag {
            'K' => NamedFamily::Complete(k),
            'C' => NamedFamily::Cycle(k),
            'P' => NamedFamily::Path(k),
            'E' => NamedFamily::Edgeless(k),
            'H' => NamedFamily::H(k),
            'R' => NamedFamily::R(k),
            _ => return Err(bad()),
        };
        Ok(family)
    }
}
