//! Snake graphs `G[a1, ..., an]` as chains of unit tiles on the integer
//! lattice.
//!
//! Tile 1 sits at the origin with its first step to the right. The snake
//! turns at every tile except the connecting tiles `G_{l_1}, ..., G_{l_{n-1}}`,
//! where it goes straight, so every block of tiles strictly between two
//! connecting tiles is a zigzag.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::contfrac::{CfError, ContinuedFraction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnakeError {
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error("graph has {tiles} tiles but {cf} describes {expected}")]
    ShapeMismatch { cf: String, tiles: usize, expected: u64 },
    #[error("subgraph H_{0} has no tiles")]
    EmptySubgraph(usize),
    #[error("edge set is not a perfect matching of this graph")]
    NotPerfect,
}

/// A lattice point. Ordered row-major: by `y`, then by `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    fn shift(self, dx: i64, dy: i64) -> Self {
        Point::new(self.x + dx, self.y + dy)
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A unit lattice edge with endpoints stored in row-major order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    a: Point,
    b: Point,
}

impl Edge {
    /// Panics unless the points are at unit distance along an axis.
    pub fn new(p: Point, q: Point) -> Self {
        let d = (p.x - q.x).abs() + (p.y - q.y).abs();
        assert_eq!(d, 1, "edge endpoints {p} and {q} are not lattice neighbours");
        if p < q {
            Edge { a: p, b: q }
        } else {
            Edge { a: q, b: p }
        }
    }

    pub fn endpoints(&self) -> (Point, Point) {
        (self.a, self.b)
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }

    pub fn other(&self, p: Point) -> Point {
        if p == self.a {
            self.b
        } else {
            self.a
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Step {
    #[serde(rename = "R")]
    Right,
    #[serde(rename = "U")]
    Up,
}

impl Step {
    fn turn(self) -> Step {
        match self {
            Step::Right => Step::Up,
            Step::Up => Step::Right,
        }
    }

    fn offset(self) -> (i64, i64) {
        match self {
            Step::Right => (1, 0),
            Step::Up => (0, 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tile {
    /// Label inherited from the full graph, 1-based.
    pub label: usize,
    /// Lower-left corner.
    pub anchor: Point,
}

impl Tile {
    pub fn south(&self) -> Edge {
        Edge::new(self.anchor, self.anchor.shift(1, 0))
    }

    pub fn north(&self) -> Edge {
        Edge::new(self.anchor.shift(0, 1), self.anchor.shift(1, 1))
    }

    pub fn west(&self) -> Edge {
        Edge::new(self.anchor, self.anchor.shift(0, 1))
    }

    pub fn east(&self) -> Edge {
        Edge::new(self.anchor.shift(1, 0), self.anchor.shift(1, 1))
    }

    pub fn edges(&self) -> [Edge; 4] {
        [self.south(), self.north(), self.west(), self.east()]
    }
}

/// An edge set; compared and serialized as a sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PerfectMatching {
    edges: BTreeSet<Edge>,
}

impl PerfectMatching {
    pub fn new<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        PerfectMatching { edges: edges.into_iter().collect() }
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn symmetric_difference<'a>(
        &'a self,
        other: &'a PerfectMatching,
    ) -> impl Iterator<Item = &'a Edge> {
        self.edges.symmetric_difference(&other.edges)
    }

    pub(crate) fn into_edge_set(self) -> BTreeSet<Edge> {
        self.edges
    }
}

impl fmt::Display for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// A snake graph, a subgraph `H_i` of one, or the degenerate single-edge
/// graph of the empty continued fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnakeGraph {
    tiles: Vec<Tile>,
    steps: Vec<Step>,
    edges: BTreeSet<Edge>,
    vertices: Vec<Point>,
    interior: Vec<Edge>,
    predicted_matchings: BigUint,
    first: Step,
}

impl SnakeGraph {
    /// `G[a1, ..., an]`, first step to the right.
    pub fn build(cf: &ContinuedFraction) -> Result<Self, SnakeError> {
        Self::build_with(cf, Step::Right)
    }

    /// `G[a1, ..., an]` with the given first step. The two choices are mirror
    /// images of each other.
    pub fn build_with(cf: &ContinuedFraction, first: Step) -> Result<Self, SnakeError> {
        cf.ensure_snake()?;
        let d = (cf.total() - 1) as usize;
        let connecting: BTreeSet<usize> =
            (1..cf.len()).map(|i| cf.ell(i).unwrap() as usize).collect();
        let mut steps = Vec::with_capacity(d.saturating_sub(1));
        for k in 1..d {
            let step = match steps.last() {
                None => first,
                Some(&prev) if connecting.contains(&k) => prev,
                Some(&prev) => Step::turn(prev),
            };
            steps.push(step);
        }
        let mut anchor = Point::new(0, 0);
        let mut tiles = vec![Tile { label: 1, anchor }];
        for (k, step) in steps.iter().enumerate() {
            let (dx, dy) = step.offset();
            anchor = anchor.shift(dx, dy);
            tiles.push(Tile { label: k + 2, anchor });
        }
        Ok(Self::from_tiles(tiles, steps, cf.numerator(), first))
    }

    /// The graph of the empty continued fraction: one edge, no tiles.
    pub fn single_edge() -> Self {
        let e = Edge::new(Point::new(0, 0), Point::new(1, 0));
        SnakeGraph {
            tiles: Vec::new(),
            steps: Vec::new(),
            edges: [e].into(),
            vertices: vec![e.a, e.b],
            interior: Vec::new(),
            predicted_matchings: BigUint::one(),
            first: Step::Right,
        }
    }

    fn from_tiles(tiles: Vec<Tile>, steps: Vec<Step>, predicted_matchings: BigUint, first: Step) -> Self {
        let edges: BTreeSet<Edge> = tiles.iter().flat_map(|t| t.edges()).collect();
        let vertices: BTreeSet<Point> = edges.iter().flat_map(|e| [e.a, e.b]).collect();
        let interior = tiles
            .windows(2)
            .map(|w| {
                let next: BTreeSet<Edge> = w[1].edges().into();
                *w[0]
                    .edges()
                    .iter()
                    .find(|e| next.contains(e))
                    .expect("consecutive tiles share an edge")
            })
            .collect();
        SnakeGraph {
            tiles,
            steps,
            edges,
            vertices: vertices.into_iter().collect(),
            interior,
            predicted_matchings,
            first,
        }
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    pub fn tile(&self, label: usize) -> Option<&Tile> {
        self.tiles.iter().find(|t| t.label == label)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// Vertices in row-major order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Matching count known from construction: `N[cf]` for full graphs,
    /// `a_i` for `H_i`.
    pub fn predicted_matchings(&self) -> &BigUint {
        &self.predicted_matchings
    }

    /// `e_1, ..., e_{d-1}`; `e_k` is shared by the tiles at positions `k`
    /// and `k + 1`.
    pub fn interior_edges(&self) -> &[Edge] {
        &self.interior
    }

    pub fn interior_edge(&self, k: usize) -> Option<Edge> {
        k.checked_sub(1).and_then(|k| self.interior.get(k)).copied()
    }

    pub fn boundary_edges(&self) -> BTreeSet<Edge> {
        let interior: BTreeSet<Edge> = self.interior.iter().copied().collect();
        self.edges.difference(&interior).copied().collect()
    }

    /// The edge of the first tile that `P_-` contains: its south edge when
    /// the snake starts to the right, the mirror image (west edge) when it
    /// starts upwards.
    pub fn leading_edge(&self) -> Option<Edge> {
        self.tiles.first().map(|t| match self.first {
            Step::Right => t.south(),
            Step::Up => t.west(),
        })
    }

    /// Boundary edges in cyclic order, starting with [`Self::leading_edge`].
    pub fn boundary_cycle(&self) -> Vec<Edge> {
        let Some(start) = self.leading_edge() else {
            return self.edges.iter().copied().collect();
        };
        let boundary = self.boundary_edges();
        let mut incident: BTreeMap<Point, Vec<Edge>> = BTreeMap::new();
        for e in &boundary {
            incident.entry(e.a).or_default().push(*e);
            incident.entry(e.b).or_default().push(*e);
        }
        let mut cycle = vec![start];
        let (origin, mut at) = start.endpoints();
        let mut last = start;
        while at != origin {
            let next = *incident[&at]
                .iter()
                .find(|&&e| e != last)
                .expect("boundary is a cycle");
            cycle.push(next);
            at = next.other(at);
            last = next;
        }
        cycle
    }

    /// `P_-`: the all-boundary matching containing the leading edge of the
    /// first tile.
    pub fn minimal_matching(&self) -> PerfectMatching {
        PerfectMatching::new(self.boundary_cycle().into_iter().step_by(2))
    }

    /// `P_+`: the other all-boundary matching.
    pub fn maximal_matching(&self) -> PerfectMatching {
        if self.tiles.is_empty() {
            return self.minimal_matching();
        }
        PerfectMatching::new(self.boundary_cycle().into_iter().skip(1).step_by(2))
    }

    pub fn is_perfect_matching(&self, m: &PerfectMatching) -> bool {
        let mut covered = BTreeSet::new();
        for e in m.edges() {
            if !self.edges.contains(e) || !covered.insert(e.a) || !covered.insert(e.b) {
                return false;
            }
        }
        covered.len() == self.vertices.len()
    }

    fn check_source(&self, cf: &ContinuedFraction) -> Result<(), SnakeError> {
        cf.ensure_snake()?;
        let expected = cf.total() - 1;
        if self.tiles.len() as u64 != expected {
            return Err(SnakeError::ShapeMismatch {
                cf: cf.to_string(),
                tiles: self.tiles.len(),
                expected,
            });
        }
        Ok(())
    }

    /// The zigzag `H_i` made of tiles `l_{i-1}+1 ..= l_i - 1`, keeping their
    /// positions and labels. Empty when `a_i = 1`.
    pub fn subgraph(&self, cf: &ContinuedFraction, i: usize) -> Result<SnakeGraph, SnakeError> {
        self.check_source(cf)?;
        let a = cf.entry(i)?;
        let lo = cf.ell(i - 1)? as usize + 1;
        let hi = cf.ell(i)? as usize - 1;
        let tiles: Vec<Tile> = self.tiles.iter().filter(|t| (lo..=hi).contains(&t.label)).copied().collect();
        let steps = if tiles.is_empty() { Vec::new() } else { self.steps[lo - 1..hi - 1].to_vec() };
        let predicted = if tiles.is_empty() { BigUint::one() } else { BigUint::from(a) };
        Ok(Self::from_tiles(tiles, steps, predicted, self.first))
    }

    /// `P_-^i`: the part of `P_-` inside `H_i`, completed by one interior edge
    /// of the full graph where needed.
    pub fn completed_minimal_matching(
        &self,
        cf: &ContinuedFraction,
        i: usize,
    ) -> Result<PerfectMatching, SnakeError> {
        let h = self.subgraph(cf, i)?;
        if h.tiles.is_empty() {
            return Err(SnakeError::EmptySubgraph(i));
        }
        let n = cf.len();
        let mut edges: BTreeSet<Edge> = self
            .minimal_matching()
            .into_edge_set()
            .into_iter()
            .filter(|e| h.edges.contains(e))
            .collect();
        let extra = if i == 1 || (i == n && n % 2 == 0) {
            None
        } else if i % 2 == 1 {
            Some(cf.ell(i - 1)? as usize)
        } else {
            Some(cf.ell(i)? as usize - 1)
        };
        if let Some(k) = extra {
            edges.insert(self.interior_edge(k).ok_or(SnakeError::NotPerfect)?);
        }
        let m = PerfectMatching { edges };
        if !h.is_perfect_matching(&m) {
            return Err(SnakeError::NotPerfect);
        }
        Ok(m)
    }

    /// `{"tiles":[{"i":1,"x":0,"y":0},...],"steps":["R","U",...]}`
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct JsonTile {
            i: usize,
            x: i64,
            y: i64,
        }
        #[derive(Serialize)]
        struct JsonGraph<'a> {
            tiles: Vec<JsonTile>,
            steps: &'a [Step],
        }
        let doc = JsonGraph {
            tiles: self
                .tiles
                .iter()
                .map(|t| JsonTile { i: t.label, x: t.anchor.x, y: t.anchor.y })
                .collect(),
            steps: &self.steps,
        };
        serde_json::to_string(&doc).expect("graph JSON is always serializable")
    }
}
