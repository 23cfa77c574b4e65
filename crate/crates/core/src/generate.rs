//! Deterministic generators for the structured graph families.
//!
//! Numbering is fixed: cycles run 0..k around the ring, the wheel hub is the
//! last vertex `k`, bipartite sides are `0..a` and `a..a+b`, grids are
//! row-major (`row * cols + col`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{build_compact, CompactGraph};
use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Wheel(usize),
    CompleteBipartite(usize, usize),
    Grid(usize, usize),
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Family::Cycle(k) | Family::Wheel(k) => k >= 3,
            Family::CompleteBipartite(a, b) => a >= 1 && b >= 1,
            Family::Grid(r, c) => r >= 1 && c >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{self} is below the family minimum")))
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Family::Cycle(k) => k,
            Family::Wheel(k) => k + 1,
            Family::CompleteBipartite(a, b) => a + b,
            Family::Grid(r, c) => r * c,
        }
    }

    /// Edges in generation order; this is the order written by the CLI.
    pub fn edges(&self) -> Result<Vec<(VertexId, VertexId)>> {
        self.validate()?;
        let id = |v: usize| v as VertexId;
        let edges = match *self {
            Family::Cycle(k) => (0..k).map(|i| (id(i), id((i + 1) % k))).collect(),
            Family::Wheel(k) => {
                let mut e: Vec<_> = (0..k).map(|i| (id(i), id((i + 1) % k))).collect();
                e.extend((0..k).map(|i| (id(i), id(k))));
                e
            }
            Family::CompleteBipartite(a, b) => (0..a)
                .flat_map(|i| (0..b).map(move |j| (id(i), id(a + j))))
                .collect(),
            Family::Grid(r, c) => {
                let mut e = Vec::with_capacity(r * (c - 1) + c * (r - 1));
                for i in 0..r {
                    for j in 0..c {
                        let v = i * c + j;
                        if j + 1 < c {
                            e.push((id(v), id(v + 1)));
                        }
                        if i + 1 < r {
                            e.push((id(v), id(v + c)));
                        }
                    }
                }
                e
            }
        };
        Ok(edges)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Cycle(k) => write!(f, "cycle:{k}"),
            Family::Wheel(k) => write!(f, "wheel:{k}"),
            Family::CompleteBipartite(a, b) => write!(f, "bipartite:{a}x{b}"),
            Family::Grid(r, c) => write!(f, "grid:{r}x{c}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `cycle:K`, `wheel:K`, `bipartite:AxB` and `grid:RxC`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unrecognised family spec {s:?}"));
        let (kind, params) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let pair = |t: &str| -> Result<(usize, usize)> {
            let (a, b) = t.split_once(['x', 'X']).ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        let family = match kind.trim().to_ascii_lowercase().as_str() {
            "cycle" => Family::Cycle(num(params)?),
            "wheel" => Family::Wheel(num(params)?),
            "bipartite" | "complete_bipartite" | "kab" => {
                let (a, b) = pair(params)?;
                Family::CompleteBipartite(a, b)
            }
            "grid" => {
                let (r, c) = pair(params)?;
                Family::Grid(r, c)
            }
            _ => return Err(bad()),
        };
        family.validate()?;
        Ok(family)
    }
}

pub fn generate(family: Family) -> Result<CompactGraph> {
    let edges = family.edges()?;
    build_compact(family.vertex_count(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_one_shapes() {
        let c = generate(Family::Cycle(100)).unwrap();
        assert_eq!((c.n(), c.m(), c.max_degree()), (100, 100, 2));
        let k = generate(Family::CompleteBipartite(8, 8)).unwrap();
        assert_eq!((k.n(), k.m(), k.max_degree()), (16, 64, 8));
        let g = generate(Family::Grid(4, 10)).unwrap();
        assert_eq!((g.n(), g.m(), g.max_degree()), (40, 66, 4));
        let w = generate(Family::Wheel(100)).unwrap();
        assert_eq!((w.n(), w.m(), w.max_degree()), (101, 200, 100));
        assert_eq!(w.neighbors(100).unwrap().len(), 100);
    }

    #[test]
    fn closed_form_sweep() {
        for k in 3..=200 {
            let g = generate(Family::Cycle(k)).unwrap();
            assert_eq!((g.n(), g.m()), (k, k));
            let w = generate(Family::Wheel(k)).unwrap();
            assert_eq!((w.n(), w.m()), (k + 1, 2 * k));
        }
        for a in 1..=60 {
            for b in (1..=60).step_by(7) {
                let g = generate(Family::CompleteBipartite(a, b)).unwrap();
                assert_eq!((g.n(), g.m()), (a + b, a * b));
            }
        }
        for r in 1..=12 {
            for c in 1..=12 {
                let g = generate(Family::Grid(r, c)).unwrap();
                assert_eq!((g.n(), g.m()), (r * c, r * (c - 1) + c * (r - 1)));
            }
        }
    }

    #[test]
    fn parse_specs() {
        assert_eq!("grid:5x6".parse::<Family>().unwrap(), Family::Grid(5, 6));
        assert_eq!(
            "bipartite:8x8".parse::<Family>().unwrap(),
            Family::CompleteBipartite(8, 8)
        );
        assert_eq!("cycle:100".parse::<Family>().unwrap(), Family::Cycle(100));
        assert_eq!("wheel:100".parse::<Family>().unwrap(), Family::Wheel(100));
        assert!(matches!("grid:0x5".parse::<Family>(), Err(Error::InvalidParameter(_))));
        assert!(matches!("cycle:2".parse::<Family>(), Err(Error::InvalidParameter(_))));
        assert!("hypercube:3".parse::<Family>().is_err());
        assert!("grid:5".parse::<Family>().is_err());
    }

    #[test]
    fn cycle_edge_order() {
        assert_eq!(Family::Cycle(3).edges().unwrap(), vec![(0, 1), (1, 2), (2, 0)]);
    }
}
