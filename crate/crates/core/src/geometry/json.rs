//! Interchange format. Every coordinate is `[xn, xd, yn, yd]` with the four
//! integers written as decimal strings so they can be arbitrarily large.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::drawing::{Drawing, PolylineEdge};
use super::point::{Coord, Point};

type RawPoint = [String; 4];

#[derive(Serialize, Deserialize)]
struct RawEdge {
    u: usize,
    v: usize,
    chain: Vec<RawPoint>,
}

#[derive(Serialize, Deserialize)]
struct RawDrawing {
    vertices: Vec<RawPoint>,
    edges: Vec<RawEdge>,
}

fn raw_point(p: &Point) -> RawPoint {
    [p.x.numer().to_string(), p.x.denom().to_string(), p.y.numer().to_string(), p.y.denom().to_string()]
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse::<BigInt>().map_err(|_| Error::Format(format!("not an integer: {s:?}")))
}

fn parse_coord(n: &str, d: &str) -> Result<Coord> {
    let d = parse_int(d)?;
    if d.is_zero() {
        return Err(Error::Format("zero denominator".into()));
    }
    Ok(Coord::new(parse_int(n)?, d))
}

fn parse_point(r: &RawPoint) -> Result<Point> {
    Ok(Point::new(parse_coord(&r[0], &r[1])?, parse_coord(&r[2], &r[3])?))
}

pub fn to_json_value(d: &Drawing) -> serde_json::Value {
    let raw = RawDrawing {
        vertices: d.vertices.iter().map(raw_point).collect(),
        edges: d
            .edges
            .iter()
            .map(|e| RawEdge { u: e.u, v: e.v, chain: e.chain.iter().map(raw_point).collect() })
            .collect(),
    };
    serde_json::to_value(raw).expect("drawing serializes")
}

/// Canonical serialization: reduced fractions, edges sorted by `(u, v)`.
pub fn to_json(d: &Drawing) -> String {
    serde_json::to_string(&to_json_value(d)).expect("drawing serializes")
}

pub fn from_json(s: &str) -> Result<Drawing> {
    let raw: RawDrawing = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
    let vertices = raw.vertices.iter().map(parse_point).collect::<Result<Vec<_>>>()?;
    let edges = raw
        .edges
        .iter()
        .map(|e| {
            let chain = e.chain.iter().map(parse_point).collect::<Result<Vec<_>>>()?;
            Ok(PolylineEdge::new(e.u, e.v, chain))
        })
        .collect::<Result<Vec<_>>>()?;
    Drawing::new(vertices, edges)
}
