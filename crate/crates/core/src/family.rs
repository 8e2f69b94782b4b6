//! Named graph families with fixed vertex numbering.
//!
//! Numbering conventions:
//!
//! * `Complete(n)`: vertices `0..n`.
//! * `Cycle(n)` / `Path(n)`: `i` is adjacent to `i + 1` (and `n - 1` to `0` for cycles).
//! * `CompleteBipartite(l, m)`: parts `0..l` and `l..l + m`.
//! * `Star(m)`: center `0`, leaves `1..=m`.
//! * `Hypercube(d)`: bit strings of length `d`, adjacent when they differ in one bit.
//! * `Petersen`: outer cycle `0..5`, spokes `i - (i + 5)`, inner pentagram `(i + 5) - ((i + 2) % 5 + 5)`.
//! * `Fig3`: `u = 0, v = 1, w = 2, x = 3, y = 4` with edges `u-v, v-w, u-x, u-y`.
//! * `Fig4(n)`: `u = 0, v = 1, w = 2, z = 3`, `x_i = 3 + i` for `i = 1..=n`,
//!   with edges `u-v, w-z` and `v-x_i, w-x_i`.
//! * `ClassicMycielski(n)`: the Mycielskian applied `n - 2` times to `K2`,
//!   using the layered numbering of [`crate::mycielskian`] at every step.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mycielskian::mycielskian_t;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Hypercube(usize),
    Petersen,
    Fig3,
    Fig4(usize),
    ClassicMycielski(usize),
}

impl FamilySpec {
    fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let ok = match *self {
            Complete(n) | Path(n) => n >= 1,
            Cycle(n) => n >= 3,
            CompleteBipartite(l, m) => l >= 1 && m >= 1,
            Star(m) => m >= 1,
            Hypercube(d) => (1..=16).contains(&d),
            Petersen | Fig3 => true,
            Fig4(n) => n >= 2,
            ClassicMycielski(n) => (2..=7).contains(&n),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::input(format!("invalid family parameters: {self}")))
        }
    }

    /// Builds the graph, using the numbering documented at module level.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        use FamilySpec::*;
        let g = match *self {
            Complete(n) => {
                let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                Graph::from_edges(n, edges)?
            }
            Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?,
            Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?,
            CompleteBipartite(l, m) => {
                let edges = (0..l).flat_map(|i| (l..l + m).map(move |j| (i, j)));
                Graph::from_edges(l + m, edges)?
            }
            Star(m) => Graph::from_edges(m + 1, (1..=m).map(|j| (0, j)))?,
            Hypercube(d) => {
                let n = 1usize << d;
                let edges = (0..n).flat_map(|v| {
                    (0..d)
                        .map(move |b| (v, v ^ (1 << b)))
                        .filter(|(a, b)| a < b)
                });
                Graph::from_edges(n, edges)?
            }
            Petersen => {
                let edges =
                    (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
                Graph::from_edges(10, edges)?
            }
            Fig3 => Graph::from_edges(5, [(0, 1), (1, 2), (0, 3), (0, 4)])?,
            Fig4(n) => {
                let xs = (1..=n).flat_map(|i| [(1, 3 + i), (2, 3 + i)]);
                Graph::from_edges(n + 4, [(0, 1), (2, 3)].into_iter().chain(xs))?
            }
            ClassicMycielski(n) => {
                let mut g = Complete(2).build()?;
                for _ in 2..n {
                    g = mycielskian_t(&g, 1)?.into_graph();
                }
                g
            }
        };
        debug_assert!(g.is_well_formed());
        Ok(g)
    }
}

/// Canonical textual form, accepted back by [`FromStr`].
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match *self {
            Complete(n) => write!(f, "complete:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Path(n) => write!(f, "path:{n}"),
            CompleteBipartite(l, m) => write!(f, "bipartite:{l},{m}"),
            Star(m) => write!(f, "star:{m}"),
            Hypercube(d) => write!(f, "hypercube:{d}"),
            Petersen => write!(f, "petersen"),
            Fig3 => write!(f, "fig3"),
            Fig4(n) => write!(f, "fig4:{n}"),
            ClassicMycielski(n) => write!(f, "mycielski:{n}"),
        }
    }
}

/// Accepts the long forms written by `Display` (`cycle:5`, `bipartite:2,3`, ...)
/// and short aliases: `k<n>` for a single-digit complete graph, `k<l><m>` (two
/// digits) for a complete bipartite graph, `c<n>`, `p<n>`, `q<d>`, `m<n>`,
/// `fig4-<n>`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use FamilySpec::*;
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::input(format!("unknown graph family {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let pair = |t: &str| -> Result<(usize, usize)> {
            let (a, b) = t.split_once(',').ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };

        let spec = if let Some((kind, arg)) = s.split_once(':') {
            match kind {
                "complete" => Complete(num(arg)?),
                "cycle" => Cycle(num(arg)?),
                "path" => Path(num(arg)?),
                "bipartite" => {
                    let (l, m) = pair(arg)?;
                    CompleteBipartite(l, m)
                }
                "star" => Star(num(arg)?),
                "hypercube" => Hypercube(num(arg)?),
                "fig4" => Fig4(num(arg)?),
                "mycielski" => ClassicMycielski(num(arg)?),
                _ => return Err(bad()),
            }
        } else {
            match s.as_str() {
                "petersen" => Petersen,
                "fig3" => Fig3,
                _ => {
                    if let Some(rest) = s.strip_prefix("fig4-") {
                        Fig4(num(rest)?)
                    } else if let Some(rest) = s.strip_prefix('k') {
                        if !rest.bytes().all(|b| b.is_ascii_digit()) {
                            return Err(bad());
                        }
                        match rest.len() {
                            1 => Complete(num(rest)?),
                            2 => CompleteBipartite(num(&rest[..1])?, num(&rest[1..])?),
                            _ => return Err(bad()),
                        }
                    } else {
                        let (head, tail) = s.split_at(1.min(s.len()));
                        match head {
                            "c" => Cycle(num(tail)?),
                            "p" => Path(num(tail)?),
                            "q" => Hypercube(num(tail)?),
                            "m" => ClassicMycielski(num(tail)?),
                            _ => return Err(bad()),
                        }
                    }
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}
