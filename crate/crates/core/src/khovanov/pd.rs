//! Planar diagrams of braid closures and their text form.
//!
//! A crossing lists its four edges counterclockwise, starting at the incoming
//! under-strand: `(a, b, c, d)` with `a` entering and `c` leaving along the
//! under-strand. The over-strand runs `b -> d` at a positive crossing and
//! `d -> b` at a negative one. Edges that meet no crossing are closed loops.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrossingSign {
    Positive,
    Negative,
}

impl CrossingSign {
    pub fn symbol(self) -> char {
        match self {
            CrossingSign::Positive => '+',
            CrossingSign::Negative => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub edges: [u32; 4],
    pub sign: CrossingSign,
}

impl Crossing {
    /// Edge pairs joined by the 0-smoothing.
    pub fn zero_smoothing(&self) -> [(u32, u32); 2] {
        let [a, b, c, d] = self.edges;
        [(a, d), (b, c)]
    }

    /// Edge pairs joined by the 1-smoothing.
    pub fn one_smoothing(&self) -> [(u32, u32); 2] {
        let [a, b, c, d] = self.edges;
        [(a, b), (c, d)]
    }

    fn incoming(&self) -> [u32; 2] {
        let [a, b, _, d] = self.edges;
        match self.sign {
            CrossingSign::Positive => [a, b],
            CrossingSign::Negative => [a, d],
        }
    }

    fn outgoing(&self) -> [u32; 2] {
        let [_, b, c, d] = self.edges;
        match self.sign {
            CrossingSign::Positive => [c, d],
            CrossingSign::Negative => [c, b],
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PdError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("edge {0} is outside 1..={1}")]
    EdgeOutOfRange(u32, u32),
    #[error("edge {0} must enter one crossing and leave one crossing")]
    Orientation(u32),
}

/// Oriented link diagram with a marked edge for the reduced theory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarDiagram {
    pub crossings: Vec<Crossing>,
    /// Edges are `1..=edge_count`.
    pub edge_count: u32,
    pub marked_edge: u32,
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, edge_count: u32, marked_edge: u32) -> Result<Self, PdError> {
        let pd = Self { crossings, edge_count, marked_edge };
        pd.validate()?;
        Ok(pd)
    }

    fn validate(&self) -> Result<(), PdError> {
        let n = self.edge_count;
        if self.marked_edge == 0 || self.marked_edge > n {
            return Err(PdError::EdgeOutOfRange(self.marked_edge, n));
        }
        let mut ins = vec![0u8; n as usize + 1];
        let mut outs = vec![0u8; n as usize + 1];
        for x in &self.crossings {
            for &e in &x.edges {
                if e == 0 || e > n {
                    return Err(PdError::EdgeOutOfRange(e, n));
                }
            }
            for e in x.incoming() {
                ins[e as usize] += 1;
            }
            for e in x.outgoing() {
                outs[e as usize] += 1;
            }
        }
        for e in 1..=n {
            let (i, o) = (ins[e as usize], outs[e as usize]);
            if !((i == 1 && o == 1) || (i == 0 && o == 0)) {
                return Err(PdError::Orientation(e));
            }
        }
        Ok(())
    }

    pub fn positive_count(&self) -> usize {
        self.crossings.iter().filter(|x| x.sign == CrossingSign::Positive).count()
    }

    pub fn negative_count(&self) -> usize {
        self.crossings.len() - self.positive_count()
    }

    /// Parse lines `X a b c d ±`, with optional `M e` (marked edge, default the
    /// smallest edge) and `E n` (edge count, default the largest edge seen).
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, PdError> {
        let mut crossings = Vec::new();
        let mut marked = None;
        let mut edges = None;
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: &str| PdError::Parse { line: k + 1, message: message.to_string() };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let number = |t: &str| t.parse::<u32>().map_err(|_| err(&format!("bad edge `{t}`")));
            match tokens.as_slice() {
                ["X", a, b, c, d, s] => {
                    let sign = match *s {
                        "+" => CrossingSign::Positive,
                        "-" => CrossingSign::Negative,
                        other => return Err(err(&format!("bad sign `{other}`"))),
                    };
                    crossings.push(Crossing { edges: [number(a)?, number(b)?, number(c)?, number(d)?], sign });
                }
                ["M", e] => marked = Some(number(e)?),
                ["E", n] => edges = Some(number(n)?),
                _ => return Err(err("expected `X a b c d ±`, `M e` or `E n`")),
            }
        }
        let seen_max = crossings.iter().flat_map(|x| x.edges).max().unwrap_or(1);
        let edge_count = edges.unwrap_or(seen_max).max(1);
        let seen_min = crossings.iter().flat_map(|x| x.edges).min().unwrap_or(1);
        Self::new(crossings, edge_count, marked.unwrap_or(seen_min))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.crossings {
            let [a, b, c, d] = x.edges;
            writeln!(f, "X {a} {b} {c} {d} {}", x.sign.symbol())?;
        }
        writeln!(f, "E {}", self.edge_count)?;
        write!(f, "M {}", self.marked_edge)
    }
}

/// Diagram of the closure, strands running top to bottom. Edges `1..=n` are the
/// closure arcs at the top of each position; edge 1 is marked.
pub fn braid_to_pd(w: &BraidWord) -> PlanarDiagram {
    let n = w.strands();
    let mut cur: Vec<u32> = (1..=n as u32).collect();
    let mut next = n as u32 + 1;
    let mut raw = Vec::with_capacity(w.len());
    for &e in w.letters() {
        let p = e.unsigned_abs() as usize - 1;
        let (tl, tr) = (cur[p], cur[p + 1]);
        let (bl, br) = (next, next + 1);
        next += 2;
        cur[p] = bl;
        cur[p + 1] = br;
        // a positive σ_i carries the left strand over
        let (edges, sign) = if e > 0 {
            ([tr, tl, bl, br], CrossingSign::Positive)
        } else {
            ([tl, bl, br, tr], CrossingSign::Negative)
        };
        raw.push(Crossing { edges, sign });
    }
    // close up: bottom edge at position p is the top edge p + 1, then compact ids
    let mut close: BTreeMap<u32, u32> = BTreeMap::new();
    for (p, &e) in cur.iter().enumerate() {
        close.insert(e, p as u32 + 1);
    }
    let mut used: Vec<u32> = (1..=n as u32).collect();
    used.extend(raw.iter().flat_map(|x| x.edges).map(|e| *close.get(&e).unwrap_or(&e)));
    used.sort_unstable();
    used.dedup();
    let compact: BTreeMap<u32, u32> = used.iter().enumerate().map(|(k, &e)| (e, k as u32 + 1)).collect();
    let relabel = |e: u32| compact[close.get(&e).unwrap_or(&e)];
    let crossings = raw
        .into_iter()
        .map(|x| Crossing { edges: x.edges.map(relabel), sign: x.sign })
        .collect();
    PlanarDiagram { crossings, edge_count: used.len() as u32, marked_edge: 1 }
}
