//! Text form of paths: `pos:0..1;sing:1,0,N,+;neg:1..0;triv:(1,-)`, plus the
//! names `dch` and `beta`.

use std::sync::Arc;

use super::discrete::DiscretePath;
use super::grid::{Endpoint, Grid};
use super::piece::{Piece, Sign};
use crate::error::{Error, Result};
use crate::scalar::parse_ratio;

pub fn parse_path(src: &str, grid: Arc<Grid>) -> Result<DiscretePath> {
    let mut pieces = Vec::new();
    let mut offset = 0;
    for segment in src.split(';') {
        let at = offset + (segment.len() - segment.trim_start().len());
        offset += segment.len() + 1;
        let seg = segment.trim();
        let fail = |msg: String| Error::parse(at, msg);
        match seg {
            "dch" => pieces.extend_from_slice(DiscretePath::dch(grid.clone())?.pieces()),
            "beta" => pieces.extend_from_slice(DiscretePath::beta(grid.clone())?.pieces()),
            _ => {
                let (kind, body) = seg.split_once(':').ok_or_else(|| fail(format!("expected `kind:...` in `{seg}`")))?;
                let body = body.trim();
                let piece = match kind.trim() {
                    "pos" | "neg" => {
                        let (x, y) = body
                            .split_once("..")
                            .ok_or_else(|| fail(format!("expected `x..y` in `{body}`")))?;
                        let from = coordinate(x, &grid, at)?;
                        let to = coordinate(y, &grid, at)?;
                        if kind.trim() == "pos" {
                            Piece::Positive { from, to }
                        } else {
                            Piece::Negative { from, to }
                        }
                    }
                    "sing" => {
                        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
                        if parts.len() != 4 {
                            return Err(fail(format!("expected `x,a,b,sign` in `{body}`")));
                        }
                        let center = coordinate(parts[0], &grid, at)?;
                        let start = direction(parts[1], &grid, at)?;
                        let end = direction(parts[2], &grid, at)?;
                        let sign = match parts[3] {
                            "+" => Sign::Plus,
                            "-" => Sign::Minus,
                            s => return Err(fail(format!("sign must be + or -, got `{s}`"))),
                        };
                        Piece::Singular { center, start, end, sign }
                    }
                    "triv" => Piece::Trivial(endpoint(body, &grid, at)?),
                    other => return Err(fail(format!("unknown piece kind `{other}`"))),
                };
                pieces.push(piece);
            }
        }
    }
    DiscretePath::new(grid, pieces)
}

fn coordinate(src: &str, grid: &Grid, at: usize) -> Result<i64> {
    let q = parse_ratio(src).map_err(|_| Error::parse(at, format!("bad coordinate `{}`", src.trim())))?;
    grid.tick_of(&q)
}

/// An integer, `N`, or `N/2`.
fn direction(src: &str, grid: &Grid, at: usize) -> Result<i64> {
    match src {
        "N" => Ok(grid.n()),
        "N/2" => Ok(grid.n() / 2),
        s => s.parse().map_err(|_| Error::parse(at, format!("bad direction `{s}`"))),
    }
}

/// `(x,+)`, `(x,-)`, `(x,i)` or a bare grid point.
fn endpoint(src: &str, grid: &Grid, at: usize) -> Result<Endpoint> {
    if let Some(inner) = src.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        let (x, dir) = inner.split_once(',').ok_or_else(|| Error::parse(at, "expected `(x,dir)`"))?;
        let tick = coordinate(x, grid, at)?;
        return match dir.trim() {
            "+" => Endpoint::plus(grid, tick),
            "-" => Endpoint::minus(grid, tick),
            d => Endpoint::marked(grid, tick, direction(d, grid, at)?),
        };
    }
    Endpoint::point(grid, coordinate(src, grid, at)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Alphabet;

    fn grid() -> Arc<Grid> {
        Arc::new(Grid::new(4, Alphabet::ints(&[0, 1])).unwrap())
    }

    #[test]
    fn parses_named_and_explicit_paths() {
        let g = grid();
        let beta = parse_path("beta", g.clone()).unwrap();
        let explicit = parse_path("pos:0..1; sing:1,0,N,+; neg:1..0", g.clone()).unwrap();
        assert_eq!(beta, explicit);
        assert_eq!(parse_path("dch", g.clone()).unwrap(), DiscretePath::dch(g.clone()).unwrap());
        let p = parse_path("pos:0..1;triv:(1,-)", g.clone()).unwrap();
        assert_eq!(p.pieces().len(), 2);
        assert_eq!(parse_path("triv:1/2", g.clone()).unwrap().provision_len(), 0);
    }

    #[test]
    fn display_round_trips() {
        let g = grid();
        for src in ["beta", "pos:1/4..3/4", "neg:1..0;triv:(0,+)", "sing:0,1,3,-"] {
            let p = parse_path(src, g.clone()).unwrap();
            assert_eq!(parse_path(&p.to_string(), g.clone()).unwrap(), p);
        }
    }

    #[test]
    fn errors() {
        let g = grid();
        assert!(matches!(parse_path("bogus", g.clone()), Err(Error::Parse { .. })));
        assert!(matches!(parse_path("pos:0..1;wat:1", g.clone()), Err(Error::Parse { pos: 9, .. })));
        assert!(parse_path("pos:0..1/3", g.clone()).is_err());
        assert!(matches!(parse_path("pos:0..1;pos:0..1", g.clone()), Err(Error::EndpointMismatch(_))));
        assert!(matches!(parse_path("pos:-1..1", g), Err(Error::InvalidPiece(_))));
    }
}
