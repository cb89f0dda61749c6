//! Brute-force perfect matchings of snake graphs and the poset they form
//! under tile flips.
//!
//! Heights are computed directly rather than by walking flips: the symmetric
//! difference of a matching with the base matching is a disjoint union of
//! lattice cycles, and the height is the product of `y_label` over the tiles
//! those cycles enclose (even-odd rule).

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::laurent::{LaurentPolynomial, Monomial, Var};
use crate::snakegraph::{Edge, PerfectMatching, SnakeGraph, Tile};

pub const DEFAULT_LIMIT: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("graph has {predicted} perfect matchings, above the limit of {limit}")]
    LimitExceeded { predicted: BigUint, limit: usize },
    #[error("edge set is not a perfect matching of this graph")]
    NotPerfect,
    #[error("tile {0} cannot be turned in this matching")]
    NotFlippable(usize),
    #[error("no tile labelled {0}")]
    UnknownTile(usize),
}

/// All perfect matchings of `g`, sorted by their edge lists.
pub fn enumerate(g: &SnakeGraph, limit: usize) -> Result<Vec<PerfectMatching>, MatchingError> {
    let predicted = g.predicted_matchings();
    if *predicted > BigUint::from(limit) {
        return Err(MatchingError::LimitExceeded { predicted: predicted.clone(), limit });
    }
    let vertices = g.vertices();
    let index: HashMap<_, _> = vertices.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    let mut incident: Vec<Vec<(usize, Edge)>> = vec![Vec::new(); vertices.len()];
    for e in g.edges() {
        let (p, q) = e.endpoints();
        let (i, j) = (index[&p], index[&q]);
        incident[i].push((j, *e));
        incident[j].push((i, *e));
    }

    struct Search<'a> {
        incident: &'a [Vec<(usize, Edge)>],
        matched: Vec<bool>,
        chosen: Vec<Edge>,
        out: Vec<PerfectMatching>,
    }

    impl Search<'_> {
        fn run(&mut self, from: usize) {
            let Some(v) = (from..self.matched.len()).find(|&v| !self.matched[v]) else {
                self.out.push(PerfectMatching::new(self.chosen.iter().copied()));
                return;
            };
            self.matched[v] = true;
            for k in 0..self.incident[v].len() {
                let (w, e) = self.incident[v][k];
                if self.matched[w] {
                    continue;
                }
                self.matched[w] = true;
                self.chosen.push(e);
                self.run(v + 1);
                self.chosen.pop();
                self.matched[w] = false;
            }
            self.matched[v] = false;
        }
    }

    let mut search = Search {
        incident: &incident,
        matched: vec![false; vertices.len()],
        chosen: Vec::new(),
        out: Vec::new(),
    };
    search.run(0);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

fn require_perfect(g: &SnakeGraph, p: &PerfectMatching) -> Result<(), MatchingError> {
    if g.is_perfect_matching(p) {
        Ok(())
    } else {
        Err(MatchingError::NotPerfect)
    }
}

fn turnable_pair(tile: &Tile, p: &PerfectMatching) -> Option<([Edge; 2], [Edge; 2])> {
    let horizontal = [tile.south(), tile.north()];
    let vertical = [tile.west(), tile.east()];
    if horizontal.iter().all(|e| p.contains(e)) {
        Some((horizontal, vertical))
    } else if vertical.iter().all(|e| p.contains(e)) {
        Some((vertical, horizontal))
    } else {
        None
    }
}

/// Labels of tiles with two of their edges in `p`.
pub fn flippable_tiles(g: &SnakeGraph, p: &PerfectMatching) -> Result<BTreeSet<usize>, MatchingError> {
    require_perfect(g, p)?;
    Ok(g.tiles().iter().filter(|t| turnable_pair(t, p).is_some()).map(|t| t.label).collect())
}

/// Turns tile `label`: swaps its two matched edges for the other two.
pub fn flip(g: &SnakeGraph, p: &PerfectMatching, label: usize) -> Result<PerfectMatching, MatchingError> {
    require_perfect(g, p)?;
    let tile = g.tile(label).ok_or(MatchingError::UnknownTile(label))?;
    let (held, free) = turnable_pair(tile, p).ok_or(MatchingError::NotFlippable(label))?;
    Ok(PerfectMatching::new(
        p.edges().filter(|e| !held.contains(e)).copied().chain(free),
    ))
}

/// Labels of tiles enclosed by `p ⊖ base`.
fn enclosed_tiles(g: &SnakeGraph, p: &PerfectMatching, base: &PerfectMatching) -> Vec<usize> {
    let verticals: Vec<Edge> = p.symmetric_difference(base).filter(|e| !e.is_horizontal()).copied().collect();
    g.tiles()
        .iter()
        .filter(|t| {
            // cast a ray from the tile centre towards +x
            let crossings = verticals
                .iter()
                .filter(|e| {
                    let (lo, _) = e.endpoints();
                    lo.y == t.anchor.y && lo.x > t.anchor.x
                })
                .count();
            crossings % 2 == 1
        })
        .map(|t| t.label)
        .collect()
}

/// `y(p)` relative to `base`.
pub fn height(g: &SnakeGraph, p: &PerfectMatching, base: &PerfectMatching) -> Result<Monomial, MatchingError> {
    require_perfect(g, p)?;
    require_perfect(g, base)?;
    Ok(Monomial::from_exponents(enclosed_tiles(g, p, base).into_iter().map(|l| (l as Var, 1))))
}

/// `sum_P y(P)` over all perfect matchings, heights relative to `base`
/// (`P_-` when `None`).
pub fn f_polynomial(
    g: &SnakeGraph,
    base: Option<&PerfectMatching>,
    limit: usize,
) -> Result<LaurentPolynomial, MatchingError> {
    let minimal;
    let base = match base {
        Some(b) => b,
        None => {
            minimal = g.minimal_matching();
            &minimal
        }
    };
    require_perfect(g, base)?;
    let mut f = LaurentPolynomial::zero();
    for p in enumerate(g, limit)? {
        f = f + LaurentPolynomial::from_monomial(height(g, &p, base)?);
    }
    Ok(f)
}

/// `{"matchings":[{"height":"y1","edges":[[[x,y],[x,y]],...]},...]}`
pub fn to_json(
    g: &SnakeGraph,
    list: &[PerfectMatching],
    base: &PerfectMatching,
) -> Result<String, MatchingError> {
    #[derive(Serialize)]
    struct JsonMatching {
        height: String,
        edges: Vec<[[i64; 2]; 2]>,
    }
    #[derive(Serialize)]
    struct JsonList {
        matchings: Vec<JsonMatching>,
    }
    let matchings = list
        .iter()
        .map(|p| {
            let edges = p
                .edges()
                .map(|e| {
                    let (a, b) = e.endpoints();
                    [[a.x, a.y], [b.x, b.y]]
                })
                .collect();
            Ok(JsonMatching { height: height(g, p, base)?.to_string(), edges })
        })
        .collect::<Result<_, MatchingError>>()?;
    Ok(serde_json::to_string(&JsonList { matchings }).expect("matching JSON is always serializable"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct UpEdge {
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

/// All perfect matchings with their heights over `P_-` and the covering
/// relation given by height-increasing flips.
#[derive(Debug, Clone)]
pub struct MatchingPoset {
    pub nodes: Vec<PerfectMatching>,
    pub heights: Vec<Monomial>,
    pub up_edges: Vec<UpEdge>,
}

pub fn build_poset(g: &SnakeGraph, limit: usize) -> Result<MatchingPoset, MatchingError> {
    let nodes = enumerate(g, limit)?;
    let base = g.minimal_matching();
    let heights = nodes.iter().map(|p| height(g, p, &base)).collect::<Result<Vec<_>, _>>()?;
    let index: HashMap<&PerfectMatching, usize> = nodes.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut up_edges = Vec::new();
    for (from, p) in nodes.iter().enumerate() {
        for label in flippable_tiles(g, p)? {
            let q = flip(g, p, label)?;
            let to = index[&q];
            if heights[to] == heights[from].product(&Monomial::var(label as Var)) {
                up_edges.push(UpEdge { from, to, label });
            }
        }
    }
    up_edges.sort();
    Ok(MatchingPoset { nodes, heights, up_edges })
}

impl MatchingPoset {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut indeg = vec![0; self.len()];
        let mut outdeg = vec![0; self.len()];
        for e in &self.up_edges {
            outdeg[e.from] += 1;
            indeg[e.to] += 1;
        }
        (indeg, outdeg)
    }

    /// Nodes without incoming up-edges.
    pub fn sources(&self) -> Vec<usize> {
        let (indeg, _) = self.degrees();
        (0..self.len()).filter(|&k| indeg[k] == 0).collect()
    }

    /// Nodes without outgoing up-edges.
    pub fn sinks(&self) -> Vec<usize> {
        let (_, outdeg) = self.degrees();
        (0..self.len()).filter(|&k| outdeg[k] == 0).collect()
    }

    pub fn minimal(&self) -> Option<usize> {
        self.heights.iter().position(Monomial::is_one)
    }

    /// Breadth-first distance from `P_-` along up-edges; `None` for
    /// unreachable nodes.
    pub fn distances(&self) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        let Some(start) = self.minimal() else {
            return dist;
        };
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for e in &self.up_edges {
            out[e.from].push(e.to);
        }
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &out[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Indices sorted so that every up-edge points forward: by height
    /// degree, then by canonical monomial order.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.heights[a].cmp(&self.heights[b]));
        order
    }
}
