//! Gain graphs over the multiplicative group of the rationals.
//!
//! A [`GainGraph`] is a multigraph on vertices `1..=ℓ` whose edges `1..=n`
//! carry an orientation and a nonzero rational gain. Reversing an edge inverts
//! its gain, and every routine in this crate is invariant under that change.
//!
//! Structural well-formedness (edge ids, vertex ranges, nonzero gains) is
//! enforced at construction. The standing hypotheses of the census formula are
//! checked separately by [`GainGraph::validate`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::Rational;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Largest edge count accepted by [`GainGraph::all_circles`].
pub const SMALL_GRAPH_EDGES: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("gain must be nonzero")]
    ZeroGain,
    #[error("gain denominator must be nonzero")]
    ZeroDenominator,
    #[error("graph needs at least one vertex")]
    NoVertices,
    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(EdgeId),
    #[error("edge ids must be exactly 1..={expected}, found {found}")]
    NonContiguousEdgeIds { expected: usize, found: EdgeId },
    #[error("edge {edge}: vertex {vertex} outside 1..={num_vertices}")]
    VertexOutOfRange {
        edge: EdgeId,
        vertex: VertexId,
        num_vertices: usize,
    },
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("walk does not close at edge {0}")]
    WalkNotClosed(EdgeId),
    #[error("edge {0} repeated in walk")]
    RepeatedEdge(EdgeId),
    #[error("empty walk")]
    EmptyWalk,
    #[error("switching function missing vertex {0}")]
    SwitchingMissingVertex(VertexId),
    #[error("switching function is zero at vertex {0}")]
    SwitchingZero(VertexId),
    #[error("graph has {0} edges, more than the supported {SMALL_GRAPH_EDGES}")]
    TooLarge(usize),
}

/// A nonzero rational in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gain(Rational);

impl Gain {
    pub fn new(value: Rational) -> Result<Self, GraphError> {
        if value.is_zero() {
            return Err(GraphError::ZeroGain);
        }
        // `Ratio` keeps itself reduced with a positive denominator.
        Ok(Self(value))
    }

    pub fn from_ints(num: i64, den: i64) -> Result<Self, GraphError> {
        if den == 0 {
            return Err(GraphError::ZeroDenominator);
        }
        Self::new(Rational::new(num.into(), den.into()))
    }

    pub fn one() -> Self {
        Self(Rational::one())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn inv(&self) -> Self {
        Self(self.0.recip())
    }

    pub fn mul(&self, other: &Gain) -> Gain {
        Gain(&self.0 * &other.0)
    }
}

impl From<i64> for Gain {
    /// Panics on zero.
    fn from(v: i64) -> Self {
        Gain::from_ints(v, 1).expect("nonzero gain")
    }
}

impl fmt::Display for Gain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rational(f, &self.0)
    }
}

/// Writes `p` or `p/q`.
pub(crate) fn write_rational(f: &mut impl fmt::Write, r: &Rational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_string(r: &Rational) -> String {
    let mut s = String::new();
    write_rational(&mut s, r).unwrap();
    s
}

impl FromStr for Gain {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::Parse {
            line: 0,
            msg: format!("bad gain {s:?}"),
        };
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(GraphError::ZeroDenominator);
        }
        if den.is_negative() {
            return Err(bad());
        }
        Gain::new(Rational::new(num, den))
    }
}

impl Serialize for Gain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Gain {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
    pub gain: Gain,
}

impl Edge {
    pub fn new(id: EdgeId, tail: VertexId, head: VertexId, gain: impl Into<Gain>) -> Self {
        Self {
            id,
            tail,
            head,
            gain: gain.into(),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// The same edge with orientation reversed.
    pub fn reversed(&self) -> Self {
        Self {
            id: self.id,
            tail: self.head,
            head: self.tail,
            gain: self.gain.inv(),
        }
    }

    /// Unordered endpoint pair `(min, max)`.
    pub fn ends(&self) -> (VertexId, VertexId) {
        (self.tail.min(self.head), self.tail.max(self.head))
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.tail == v || self.head == v
    }

    /// Gain read when the edge is traversed starting at `from`.
    pub fn gain_from(&self, from: VertexId) -> Gain {
        if self.tail == from {
            self.gain.clone()
        } else {
            self.gain.inv()
        }
    }

    /// The endpoint opposite `v`.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

/// Traversal direction of an edge inside a [`Circle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// tail to head
    Forward,
    /// head to tail
    Backward,
}

/// A closed walk without repeated edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circle {
    pub steps: Vec<(EdgeId, Direction)>,
}

impl Circle {
    pub fn new(steps: Vec<(EdgeId, Direction)>) -> Self {
        Self { steps }
    }

    /// Sorted edge ids; identifies the circle.
    pub fn key(&self) -> Vec<EdgeId> {
        let mut k: Vec<EdgeId> = self.steps.iter().map(|(e, _)| *e).collect();
        k.sort_unstable();
        k
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The same circle traversed the other way round.
    pub fn reversed(&self) -> Self {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|(e, d)| {
                let d = match d {
                    Direction::Forward => Direction::Backward,
                    Direction::Backward => Direction::Forward,
                };
                (*e, d)
            })
            .collect();
        Self { steps }
    }

    /// The same circle started `k` steps later.
    pub fn rotated(&self, k: usize) -> Self {
        let mut steps = self.steps.clone();
        if !steps.is_empty() {
            let k = k % steps.len();
            steps.rotate_left(k);
        }
        Self { steps }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GainGraph {
    num_vertices: usize,
    // Sorted by id; `edges[i].id == i + 1`.
    edges: Vec<Edge>,
}

impl GainGraph {
    /// Builds a graph, checking edge ids and vertex ranges. Edges may be given
    /// in any order.
    pub fn new(num_vertices: usize, mut edges: Vec<Edge>) -> Result<Self, GraphError> {
        if num_vertices == 0 {
            return Err(GraphError::NoVertices);
        }
        edges.sort_by_key(|e| e.id);
        for w in edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(GraphError::DuplicateEdgeId(w[0].id));
            }
        }
        for (i, e) in edges.iter().enumerate() {
            if e.id != i + 1 {
                return Err(GraphError::NonContiguousEdgeIds {
                    expected: edges.len(),
                    found: e.id,
                });
            }
            for v in [e.tail, e.head] {
                if v == 0 || v > num_vertices {
                    return Err(GraphError::VertexOutOfRange {
                        edge: e.id,
                        vertex: v,
                        num_vertices,
                    });
                }
            }
        }
        Ok(Self {
            num_vertices,
            edges,
        })
    }

    /// Convenience constructor from `(tail, head, gain)` triples numbered
    /// 1, 2, … in order.
    pub fn from_triples<G: Into<Gain>>(
        num_vertices: usize,
        triples: impl IntoIterator<Item = (VertexId, VertexId, G)>,
    ) -> Result<Self, GraphError> {
        let edges = triples
            .into_iter()
            .enumerate()
            .map(|(i, (t, h, g))| Edge::new(i + 1, t, h, g))
            .collect();
        Self::new(num_vertices, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        id.checked_sub(1).and_then(|i| self.edges.get(i))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn loops(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(|e| e.is_loop())
    }

    pub fn loops_at(&self, v: VertexId) -> impl Iterator<Item = &Edge> + '_ {
        self.edges
            .iter()
            .filter(move |e| e.is_loop() && e.tail == v)
    }

    /// Links grouped by unordered endpoint pair. Loops are excluded.
    pub fn bundles(&self) -> BTreeMap<(VertexId, VertexId), Vec<EdgeId>> {
        let mut out: BTreeMap<_, Vec<_>> = BTreeMap::new();
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            out.entry(e.ends()).or_default().push(e.id);
        }
        out
    }

    /// Replaces one edge by its reversal (tail and head swapped, gain inverted).
    pub fn reorient(&self, id: EdgeId) -> Result<Self, GraphError> {
        let mut g = self.clone();
        let i = id.checked_sub(1).filter(|&i| i < g.edges.len());
        let i = i.ok_or(GraphError::UnknownEdge(id))?;
        g.edges[i] = g.edges[i].reversed();
        Ok(g)
    }

    /// The sub-gain-graph on the given edges, with vertices renumbered
    /// `1..=k` in increasing order of their original ids and edges renumbered
    /// `1..=m` in increasing order of their original ids. Returns the new graph
    /// and the sorted original edge ids (position `i` is new edge `i + 1`).
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> Result<(GainGraph, Vec<EdgeId>), GraphError> {
        let mut ids: Vec<EdgeId> = ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut verts = BTreeSet::new();
        for &id in &ids {
            let e = self.edge(id).ok_or(GraphError::UnknownEdge(id))?;
            verts.insert(e.tail);
            verts.insert(e.head);
        }
        let relabel: BTreeMap<VertexId, VertexId> =
            verts.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
        let edges = ids
            .iter()
            .enumerate()
            .map(|(i, &id)| {
                let e = &self.edges[id - 1];
                Edge::new(i + 1, relabel[&e.tail], relabel[&e.head], e.gain.clone())
            })
            .collect();
        let g = GainGraph::new(verts.len().max(1), edges)?;
        Ok((g, ids))
    }

    /// Product of gains along the walk. Whether it equals one does not depend
    /// on start point or direction.
    pub fn circle_gain(&self, c: &Circle) -> Result<Gain, GraphError> {
        let first = c.steps.first().ok_or(GraphError::EmptyWalk)?;
        let mut seen = BTreeSet::new();
        let start = {
            let e = self.edge(first.0).ok_or(GraphError::UnknownEdge(first.0))?;
            match first.1 {
                Direction::Forward => e.tail,
                Direction::Backward => e.head,
            }
        };
        let mut at = start;
        let mut gain = Gain::one();
        for &(id, dir) in &c.steps {
            let e = self.edge(id).ok_or(GraphError::UnknownEdge(id))?;
            if !seen.insert(id) {
                return Err(GraphError::RepeatedEdge(id));
            }
            let (from, to, g) = match dir {
                Direction::Forward => (e.tail, e.head, e.gain.clone()),
                Direction::Backward => (e.head, e.tail, e.gain.inv()),
            };
            if from != at {
                return Err(GraphError::WalkNotClosed(id));
            }
            gain = gain.mul(&g);
            at = to;
        }
        if at != start {
            return Err(GraphError::WalkNotClosed(c.steps.last().unwrap().0));
        }
        Ok(gain)
    }

    pub fn is_balanced(&self, c: &Circle) -> Result<bool, GraphError> {
        Ok(self.circle_gain(c)?.is_one())
    }

    /// Whether the given edge set is balanced as a circle. `None` if the set
    /// is not the edge set of a circle.
    pub fn edge_set_balanced(&self, ids: &[EdgeId]) -> Option<bool> {
        let c = self.circle_from_edges(ids)?;
        self.is_balanced(&c).ok()
    }

    /// Switching by `lambda`: each gain becomes `λ(tail)⁻¹ · φ(e) · λ(head)`.
    pub fn switch(&self, lambda: &BTreeMap<VertexId, Rational>) -> Result<Self, GraphError> {
        for v in 1..=self.num_vertices {
            match lambda.get(&v) {
                None => return Err(GraphError::SwitchingMissingVertex(v)),
                Some(x) if x.is_zero() => return Err(GraphError::SwitchingZero(v)),
                Some(_) => {}
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let g = lambda[&e.tail].recip() * e.gain.value() * &lambda[&e.head];
                Edge {
                    gain: Gain(g),
                    ..e.clone()
                }
            })
            .collect();
        Ok(Self {
            num_vertices: self.num_vertices,
            edges,
        })
    }

    /// Builds a traversal of the edge set if it forms a circle: a single loop,
    /// or a connected 2-regular set of links.
    pub fn circle_from_edges(&self, ids: &[EdgeId]) -> Option<Circle> {
        let edges: Vec<&Edge> = ids.iter().map(|&i| self.edge(i)).collect::<Option<_>>()?;
        if edges.is_empty() {
            return None;
        }
        if edges.len() == 1 {
            let e = edges[0];
            return e
                .is_loop()
                .then(|| Circle::new(vec![(e.id, Direction::Forward)]));
        }
        if edges.iter().any(|e| e.is_loop()) {
            return None;
        }
        let mut degree: BTreeMap<VertexId, usize> = BTreeMap::new();
        for e in &edges {
            *degree.entry(e.tail).or_default() += 1;
            *degree.entry(e.head).or_default() += 1;
        }
        if degree.values().any(|&d| d != 2) {
            return None;
        }
        // Walk from the first edge; a 2-regular graph is a circle iff the walk
        // uses every edge.
        let mut used = vec![false; edges.len()];
        let start = edges[0].tail;
        let mut at = start;
        let mut steps = Vec::with_capacity(edges.len());
        let mut current = 0;
        loop {
            used[current] = true;
            let e = edges[current];
            let dir = if e.tail == at {
                Direction::Forward
            } else {
                Direction::Backward
            };
            steps.push((e.id, dir));
            at = e.other(at);
            if at == start {
                break;
            }
            current = (0..edges.len()).find(|&j| !used[j] && edges[j].touches(at))?;
        }
        (steps.len() == edges.len()).then(|| Circle::new(steps))
    }

    /// All loops, 2-circles and 3-circles, each once, ordered by edge set.
    pub fn circles_upto3(&self) -> Vec<Circle> {
        let mut out = Vec::new();
        for e in self.loops() {
            out.push(Circle::new(vec![(e.id, Direction::Forward)]));
        }
        let links: Vec<&Edge> = self.edges.iter().filter(|e| !e.is_loop()).collect();
        for (i, a) in links.iter().enumerate() {
            for (j, b) in links.iter().enumerate().skip(i + 1) {
                if a.ends() == b.ends() {
                    out.extend(self.circle_from_edges(&[a.id, b.id]));
                }
                for c in links.iter().skip(j + 1) {
                    let mut vs = BTreeSet::new();
                    for e in [a, b, c] {
                        vs.insert(e.tail);
                        vs.insert(e.head);
                    }
                    if vs.len() == 3 {
                        out.extend(self.circle_from_edges(&[a.id, b.id, c.id]));
                    }
                }
            }
        }
        out.sort_by_key(Circle::key);
        out
    }

    /// Every circle of a small graph, each once, ordered by edge set.
    pub fn all_circles(&self) -> Result<Vec<Circle>, GraphError> {
        let n = self.edges.len();
        if n > SMALL_GRAPH_EDGES {
            return Err(GraphError::TooLarge(n));
        }
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << n) {
            let ids: Vec<EdgeId> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            if let Some(c) = self.circle_from_edges(&ids) {
                out.push(c);
            }
        }
        out.sort_by_key(Circle::key);
        Ok(out)
    }

    /// Serializes in the line-oriented graph format, edges sorted by id.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}\n", self.num_vertices);
        for e in &self.edges {
            s.push_str(&format!("edge {} {} {} {}\n", e.id, e.tail, e.head, e.gain));
        }
        s
    }

    /// Parses the line-oriented graph format.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut num_vertices = None;
        let mut edges = Vec::new();
        let mut seen = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| GraphError::Parse { line: line_no, msg };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match (num_vertices, tokens.as_slice()) {
                (None, ["graph", v]) => {
                    let v: usize = v
                        .parse()
                        .map_err(|_| err(format!("bad vertex count {v:?}")))?;
                    if v == 0 {
                        return Err(err("graph needs at least one vertex".into()));
                    }
                    num_vertices = Some(v);
                }
                (None, _) => return Err(err("expected `graph <V>`".into())),
                (Some(_), ["graph", ..]) => return Err(err("duplicate `graph` line".into())),
                (Some(nv), ["edge", id, tail, head, gain]) => {
                    let num = |s: &str, what: &str| -> Result<usize, GraphError> {
                        s.parse().map_err(|_| err(format!("bad {what} {s:?}")))
                    };
                    let id = num(id, "edge id")?;
                    let tail = num(tail, "vertex")?;
                    let head = num(head, "vertex")?;
                    if id == 0 {
                        return Err(err("edge ids start at 1".into()));
                    }
                    if !seen.insert(id) {
                        return Err(err(format!("duplicate edge id {id}")));
                    }
                    for v in [tail, head] {
                        if v == 0 || v > nv {
                            return Err(err(format!("vertex {v} outside 1..={nv}")));
                        }
                    }
                    let gain: Gain = gain.parse().map_err(|e| match e {
                        GraphError::Parse { msg, .. } => err(msg),
                        other => err(other.to_string()),
                    })?;
                    edges.push(Edge::new(id, tail, head, gain));
                }
                (Some(_), _) => {
                    return Err(err(format!(
                        "expected `edge <id> <tail> <head> <gain>`, got {line:?}"
                    )))
                }
            }
        }
        let num_vertices = num_vertices.ok_or(GraphError::Parse {
            line: text.lines().count().max(1),
            msg: "missing `graph <V>` line".into(),
        })?;
        GainGraph::new(num_vertices, edges)
    }
}

impl FromStr for GainGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GainGraph::parse(s)
    }
}

impl fmt::Display for GainGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    /// The 7-edge example: three links v1v2 with gains 1,2,3, one link v1v3,
    /// links v2v3 with gain 1 and v3→v2 with gain 2, and a loop at v1.
    pub(crate) fn seven_edge_example() -> GainGraph {
        GainGraph::parse(
            "graph 3\n\
             edge 1 1 2 1\nedge 2 1 2 2\nedge 3 1 2 3\n\
             edge 4 1 3 1\nedge 5 2 3 1\nedge 6 3 2 2\nedge 7 1 1 -1\n",
        )
        .unwrap()
    }

    #[test]
    fn parse_parallel_pair() {
        let g = GainGraph::parse("graph 2\nedge 1 1 2 1\nedge 2 1 2 2\n").unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_edges(), 2);
        assert_eq!(g.edge(2).unwrap().gain, Gain::from(2));
        assert_eq!(g.bundles()[&(1, 2)], vec![1, 2]);
    }

    #[test]
    fn parse_seven_edge_example() {
        let g = seven_edge_example();
        assert_eq!((g.num_edges(), g.num_vertices()), (7, 3));
        assert!(g.edge(7).unwrap().is_loop());
    }

    #[test]
    fn parse_errors() {
        let zero = GainGraph::parse("graph 2\nedge 1 1 2 0/3\n").unwrap_err();
        assert!(matches!(zero, GraphError::Parse { line: 2, .. }), "{zero}");
        assert!(zero.to_string().contains("nonzero"));
        assert!(matches!(
            GainGraph::parse("graph 2\nedge 1 1 2 1/0\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            GainGraph::parse("graph 2\nedge 1 1 2 1\nedge 1 2 1 1\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            GainGraph::parse("graph 2\nedge 1 1 2 1\nedge 3 2 1 1\n"),
            Err(GraphError::NonContiguousEdgeIds { found: 3, .. })
        ));
        assert!(matches!(
            GainGraph::parse("graph 2\nedge 1 1 3 1\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            GainGraph::parse("edge 1 1 2 1\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            GainGraph::parse("graph 2\nedge 1 1 2\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            GainGraph::parse("# nothing\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(GainGraph::parse("graph 0\n").is_err());
        assert!(GainGraph::parse("graph 2\nedge 1 1 2 1/-2\n").is_err());
    }

    #[test]
    fn comments_blank_lines_and_reduced_gains() {
        let g = GainGraph::parse("# header\n\n  graph 3\n# e\nedge 2 2 3 -4/6\n\nedge 1 1 2 6/3\n")
            .unwrap();
        assert_eq!(g.edge(1).unwrap().gain.to_string(), "2");
        assert_eq!(g.edge(2).unwrap().gain.to_string(), "-2/3");
        assert_eq!(g.to_text(), "graph 3\nedge 1 1 2 2\nedge 2 2 3 -2/3\n");
    }

    #[test]
    fn circle_gains_of_the_example() {
        let g = seven_edge_example();
        // C1 = {1e12, 1e23, 1e13}: v1→v2→v3→v1.
        let c1 = Circle::new(vec![
            (1, Direction::Forward),
            (5, Direction::Forward),
            (4, Direction::Backward),
        ]);
        assert_eq!(g.circle_gain(&c1).unwrap(), Gain::one());
        assert!(g.is_balanced(&c1).unwrap());
        // C2 = {2e12, 2e23, 1e13}: 2 · 2⁻¹ · 1.
        let c2 = Circle::new(vec![
            (2, Direction::Forward),
            (6, Direction::Backward),
            (4, Direction::Backward),
        ]);
        assert_eq!(g.circle_gain(&c2).unwrap(), Gain::one());
        let two = GainGraph::parse("graph 2\nedge 1 1 2 1\nedge 2 1 2 2\n").unwrap();
        let c = two.circle_from_edges(&[1, 2]).unwrap();
        let gain = two.circle_gain(&c).unwrap();
        assert!(gain == Gain::new(q(1, 2)).unwrap() || gain == Gain::from(2));
        assert!(!two.is_balanced(&c).unwrap());
    }

    #[test]
    fn circle_gain_errors() {
        let g = seven_edge_example();
        let open = Circle::new(vec![(1, Direction::Forward), (5, Direction::Forward)]);
        assert!(matches!(
            g.circle_gain(&open),
            Err(GraphError::WalkNotClosed(_))
        ));
        let repeated = Circle::new(vec![(1, Direction::Forward), (1, Direction::Backward)]);
        assert!(matches!(
            g.circle_gain(&repeated),
            Err(GraphError::RepeatedEdge(1))
        ));
        let wrong_dir = Circle::new(vec![
            (1, Direction::Forward),
            (5, Direction::Backward),
            (4, Direction::Backward),
        ]);
        assert!(matches!(
            g.circle_gain(&wrong_dir),
            Err(GraphError::WalkNotClosed(5))
        ));
        assert!(matches!(
            g.circle_gain(&Circle::new(vec![])),
            Err(GraphError::EmptyWalk)
        ));
    }

    #[test]
    fn loops_and_unbalanced_triangle() {
        let g = seven_edge_example();
        let l = g.circle_from_edges(&[7]).unwrap();
        assert!(!g.is_balanced(&l).unwrap());
        let t = GainGraph::from_triples(3, [(1, 2, 1), (2, 3, 1), (1, 3, 2)]).unwrap();
        assert_eq!(t.edge_set_balanced(&[1, 2, 3]), Some(false));
        let t = GainGraph::from_triples(3, [(1, 2, 1), (2, 3, 1), (3, 1, 2)]).unwrap();
        assert_eq!(t.edge_set_balanced(&[1, 2, 3]), Some(false));
    }

    #[test]
    fn switching_examples() {
        let tri = GainGraph::from_triples(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)]).unwrap();
        let ones: BTreeMap<_, _> = (1..=3).map(|v| (v, q(1, 1))).collect();
        assert_eq!(tri.switch(&ones).unwrap(), tri);

        let single = GainGraph::from_triples(2, [(1, 2, 3)]).unwrap();
        let lam = BTreeMap::from([(1, q(3, 1)), (2, q(1, 1))]);
        assert!(single.switch(&lam).unwrap().edge(1).unwrap().gain.is_one());

        let lam = BTreeMap::from([(1, q(1, 1)), (2, q(2, 1)), (3, q(6, 1))]);
        let s = tri.switch(&lam).unwrap();
        let gains: Vec<String> = s.edges().iter().map(|e| e.gain.to_string()).collect();
        assert_eq!(gains, ["2", "3", "6"]);
        assert_eq!(s.edge_set_balanced(&[1, 2, 3]), Some(true));

        assert!(matches!(
            tri.switch(&BTreeMap::from([(1, q(1, 1)), (2, q(1, 1))])),
            Err(GraphError::SwitchingMissingVertex(3))
        ));
        let zero = BTreeMap::from([(1, q(1, 1)), (2, q(0, 1)), (3, q(1, 1))]);
        assert!(matches!(
            tri.switch(&zero),
            Err(GraphError::SwitchingZero(2))
        ));
    }

    #[test]
    fn small_circle_census() {
        let g = seven_edge_example();
        let cs = g.circles_upto3();
        let by_len = |k| cs.iter().filter(|c| c.len() == k).count();
        assert_eq!((by_len(1), by_len(2), by_len(3)), (1, 4, 6));
        let two: Vec<Vec<EdgeId>> = cs
            .iter()
            .filter(|c| c.len() == 2)
            .map(Circle::key)
            .collect();
        assert_eq!(two, vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![5, 6]]);

        let k4 = GainGraph::from_triples(
            4,
            [
                (1, 2, 1),
                (1, 3, 1),
                (1, 4, 1),
                (2, 3, 1),
                (2, 4, 1),
                (3, 4, 1),
            ],
        )
        .unwrap();
        let cs = k4.circles_upto3();
        assert_eq!(cs.len(), 4);
        assert!(cs.iter().all(|c| c.len() == 3));

        let empty = GainGraph::new(1, vec![]).unwrap();
        assert!(empty.circles_upto3().is_empty());
        assert!(empty.all_circles().unwrap().is_empty());
    }

    #[test]
    fn full_circle_census() {
        let k4 = GainGraph::from_triples(
            4,
            [
                (1, 2, 1),
                (1, 3, 1),
                (1, 4, 1),
                (2, 3, 1),
                (2, 4, 1),
                (3, 4, 1),
            ],
        )
        .unwrap();
        let cs = k4.all_circles().unwrap();
        assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cs.iter().filter(|c| c.len() == 4).count(), 3);
        assert_eq!(cs.len(), 7);

        let lp = GainGraph::from_triples(1, [(1, 1, 2)]).unwrap();
        assert_eq!(lp.all_circles().unwrap().len(), 1);

        let big = GainGraph::from_triples(2, (0..13).map(|k| (1, 2, k + 1))).unwrap();
        assert!(matches!(big.all_circles(), Err(GraphError::TooLarge(13))));
    }

    #[test]
    fn edge_subgraph_relabels() {
        let g = seven_edge_example();
        let (sub, ids) = g.edge_subgraph(&[6, 5, 7]).unwrap();
        assert_eq!(ids, vec![5, 6, 7]);
        assert_eq!(sub.num_vertices(), 3);
        let (sub, _) = g.edge_subgraph(&[5, 6]).unwrap();
        assert_eq!(sub.num_vertices(), 2);
        assert_eq!(sub.edge(2).unwrap(), &Edge::new(2, 2, 1, 2));
    }
}
