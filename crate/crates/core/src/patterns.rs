//! Triangles of the bias matroid and the census of distinguished subgraphs.
//!
//! A *triangle* is a 3-element circuit of the bias matroid. Under the standing
//! hypotheses it is one of: a balanced 3-circle, a contrabalanced triple
//! bundle, a tight handcuff (unbalanced 2-circle plus a loop at one end) or a
//! loose handcuff (a link plus a loop at each end).
//!
//! The census counts edge subsets whose sub-gain-graph is isomorphic, as a
//! biased graph, to one of the reference patterns in [`Pattern`]. Isomorphism
//! is decided directly: a vertex bijection and an edge bijection preserving
//! incidence under which balanced circles correspond exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gain_graph::{EdgeId, GainGraph, GraphError, VertexId};
use crate::hypotheses::Hypothesis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("census formula not applicable, failing hypotheses: {0:?}")]
    HypothesisViolation(Vec<Hypothesis>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TriangleKind {
    Balanced3Circle,
    ContrabalancedTheta3,
    TightHandcuff3,
    LooseHandcuff3,
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Balanced3Circle => "balanced-3-circle",
            Self::ContrabalancedTheta3 => "contrabalanced-theta",
            Self::TightHandcuff3 => "tight-handcuff",
            Self::LooseHandcuff3 => "loose-handcuff",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub edge_ids: [EdgeId; 3],
    pub kind: TriangleKind,
}

/// Classifies a 3-set of edges, returning its kind if it is a triangle.
fn classify(g: &GainGraph, ids: [EdgeId; 3]) -> Option<TriangleKind> {
    let es: Vec<&crate::Edge> = ids.iter().map(|&i| g.edge(i)).collect::<Option<_>>()?;
    let unbalanced_loop = |e: &crate::Edge| e.is_loop() && !e.gain.is_one();
    let unbalanced_pair = |a: EdgeId, b: EdgeId| g.edge_set_balanced(&[a, b]) == Some(false);
    let (loops, links): (Vec<&crate::Edge>, Vec<&crate::Edge>) =
        es.into_iter().partition(|e| e.is_loop());
    match (loops.len(), links.as_slice()) {
        (0, [a, b, c]) => {
            if a.ends() == b.ends() && b.ends() == c.ends() {
                (unbalanced_pair(a.id, b.id)
                    && unbalanced_pair(a.id, c.id)
                    && unbalanced_pair(b.id, c.id))
                .then_some(TriangleKind::ContrabalancedTheta3)
            } else {
                (g.edge_set_balanced(&ids) == Some(true)).then_some(TriangleKind::Balanced3Circle)
            }
        }
        (1, [a, b]) => {
            let l = loops[0];
            (a.ends() == b.ends()
                && a.touches(l.tail)
                && unbalanced_loop(l)
                && unbalanced_pair(a.id, b.id))
            .then_some(TriangleKind::TightHandcuff3)
        }
        (2, [a]) => {
            let (l1, l2) = (loops[0], loops[1]);
            let ends = (l1.tail.min(l2.tail), l1.tail.max(l2.tail));
            (l1.tail != l2.tail && a.ends() == ends && unbalanced_loop(l1) && unbalanced_loop(l2))
                .then_some(TriangleKind::LooseHandcuff3)
        }
        _ => None,
    }
}

/// All triangles of `g`, sorted by edge set.
pub fn triangles(g: &GainGraph) -> Vec<Triangle> {
    let n = g.num_edges();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                if let Some(kind) = classify(g, [i, j, k]) {
                    out.push(Triangle {
                        edge_ids: [i, j, k],
                        kind,
                    });
                }
            }
        }
    }
    out
}

/// The distinguished biased graphs of the census, plus B₂ (excluded by H1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pattern {
    K3,
    D21,
    K22,
    B2,
    K4,
    D3,
    K33,
    Gcirc,
    D31,
    G1,
    G2,
    Theta3,
}

impl Pattern {
    pub const ALL: [Pattern; 12] = [
        Self::K3,
        Self::D21,
        Self::K22,
        Self::B2,
        Self::K4,
        Self::D3,
        Self::K33,
        Self::Gcirc,
        Self::D31,
        Self::G1,
        Self::G2,
        Self::Theta3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::K3 => "K3",
            Self::D21 => "D21",
            Self::K22 => "K22",
            Self::B2 => "B2",
            Self::K4 => "K4",
            Self::D3 => "D3",
            Self::K33 => "K33",
            Self::Gcirc => "Gcirc",
            Self::D31 => "D31",
            Self::G1 => "G1",
            Self::G2 => "G2",
            Self::Theta3 => "Theta3",
        }
    }

    /// A gain graph realizing the pattern, with edges labeled as in the atlas.
    pub fn reference(self) -> GainGraph {
        type T = (VertexId, VertexId, i64);
        let d3: [T; 6] = [
            (1, 2, -1),
            (1, 2, 1),
            (3, 1, 1),
            (3, 1, -1),
            (2, 3, 1),
            (2, 3, -1),
        ];
        let triples: Vec<T> = match self {
            Self::K3 => vec![(1, 2, 1), (2, 3, 1), (1, 3, 1)],
            Self::D21 => vec![(1, 2, 1), (1, 2, 2), (1, 1, 2)],
            Self::K22 => vec![(1, 1, 2), (1, 2, 1), (2, 2, 2)],
            Self::B2 => vec![(1, 1, 2), (1, 2, 1), (1, 2, 2), (2, 2, 2)],
            Self::K4 => vec![
                (1, 2, 1),
                (1, 4, 1),
                (2, 4, 1),
                (2, 3, 1),
                (1, 3, 1),
                (3, 4, 1),
            ],
            Self::D3 => d3.to_vec(),
            Self::K33 => vec![
                (1, 2, 1),
                (1, 3, 1),
                (2, 3, 1),
                (1, 1, 2),
                (3, 3, 2),
                (2, 2, 2),
            ],
            Self::Gcirc => vec![
                (1, 2, 1),
                (1, 2, 2),
                (1, 3, 2),
                (1, 3, 1),
                (2, 3, 1),
                (1, 1, 2),
            ],
            Self::D31 => d3.iter().copied().chain([(1, 1, 2)]).collect(),
            Self::G1 => vec![
                (1, 2, 1),
                (1, 2, 2),
                (1, 2, 4),
                (1, 3, 1),
                (1, 3, 2),
                (1, 3, 4),
                (2, 3, 1),
                (2, 3, 2),
            ],
            Self::G2 => vec![
                (1, 2, 1),
                (1, 2, 2),
                (1, 2, 4),
                (1, 3, 4),
                (1, 3, 2),
                (1, 3, 1),
                (2, 3, 2),
                (2, 3, 1),
                (2, 3, 4),
            ],
            Self::Theta3 => vec![(1, 2, 1), (1, 2, 2), (1, 2, 3)],
        };
        let nv = triples.iter().map(|&(t, h, _)| t.max(h)).max().unwrap_or(1);
        GainGraph::from_triples(nv, triples).expect("reference patterns are well formed")
    }

    /// The atlas list of distinguished 3-sets (triangles) of the pattern.
    pub fn distinguished(self) -> Vec<[EdgeId; 3]> {
        let l: &[[EdgeId; 3]] = match self {
            Self::K3 | Self::D21 | Self::K22 | Self::Theta3 => &[[1, 2, 3]],
            Self::B2 => &[[1, 2, 3], [2, 3, 4], [1, 2, 4], [1, 3, 4]],
            Self::K4 => &[[1, 2, 3], [1, 4, 5], [2, 5, 6], [3, 4, 6]],
            Self::D3 => &[[2, 3, 5], [1, 4, 5], [1, 3, 6], [2, 4, 6]],
            Self::K33 => &[[1, 2, 3], [1, 4, 6], [2, 4, 5], [3, 5, 6]],
            Self::Gcirc => &[[1, 2, 6], [1, 4, 5], [2, 3, 5], [3, 4, 6]],
            Self::D31 => &[
                [1, 2, 7],
                [1, 4, 5],
                [2, 3, 5],
                [3, 4, 7],
                [1, 3, 6],
                [2, 4, 6],
            ],
            Self::G1 => &[
                [1, 2, 3],
                [4, 5, 6],
                [2, 5, 7],
                [1, 4, 7],
                [1, 5, 8],
                [2, 6, 8],
                [3, 6, 7],
            ],
            Self::G2 => &[
                [1, 2, 3],
                [4, 5, 6],
                [7, 8, 9],
                [2, 5, 8],
                [1, 6, 8],
                [1, 5, 7],
                [2, 4, 7],
                [3, 4, 8],
                [1, 4, 9],
            ],
        };
        let mut v = l.to_vec();
        v.sort();
        v
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checks every reference realization against the atlas: its triangles are
/// exactly the listed 3-sets, K₄'s 4-circles are balanced, and neither G₁ nor
/// G₂ contains a D₃.
pub fn atlas_self_test() -> Result<(), String> {
    for p in Pattern::ALL {
        let r = p.reference();
        let got: Vec<[EdgeId; 3]> = triangles(&r).into_iter().map(|t| t.edge_ids).collect();
        if got != p.distinguished() {
            return Err(format!(
                "{p}: reference triangles {got:?} differ from atlas {:?}",
                p.distinguished()
            ));
        }
    }
    let k4 = Pattern::K4.reference();
    for c in k4.all_circles().map_err(|e| e.to_string())? {
        if c.len() == 4 && !k4.is_balanced(&c).map_err(|e| e.to_string())? {
            return Err(format!("K4: 4-circle {:?} unbalanced", c.key()));
        }
    }
    for p in [Pattern::G1, Pattern::G2] {
        let occ = find_occurrences(&p.reference(), Pattern::D3).map_err(|e| e.to_string())?;
        if !occ.is_empty() {
            return Err(format!("{p} contains a D3 at {:?}", occ[0].edge_ids));
        }
    }
    Ok(())
}

/// Circle classes keyed by edge set, with balance.
fn circle_classes(g: &GainGraph) -> Result<BTreeMap<Vec<EdgeId>, bool>, GraphError> {
    g.all_circles()?
        .into_iter()
        .map(|c| Ok((c.key(), g.is_balanced(&c)?)))
        .collect()
}

/// Multiplicity table: number of edges between each unordered vertex pair,
/// with loops on the diagonal.
fn multiplicities(g: &GainGraph) -> BTreeMap<(VertexId, VertexId), Vec<EdgeId>> {
    let mut m: BTreeMap<_, Vec<_>> = BTreeMap::new();
    for e in g.edges() {
        m.entry(e.ends()).or_default().push(e.id);
    }
    m
}

fn bundle(m: &BTreeMap<(VertexId, VertexId), Vec<EdgeId>>, u: VertexId, v: VertexId) -> &[EdgeId] {
    m.get(&(u.min(v), u.max(v)))
        .map(Vec::as_slice)
        .unwrap_or(&[])
}

/// Whether `a` and `b` are isomorphic as biased graphs. Both must have at most
/// [`crate::gain_graph::SMALL_GRAPH_EDGES`] edges. Isolated vertices count.
pub fn biased_isomorphic(a: &GainGraph, b: &GainGraph) -> Result<bool, GraphError> {
    let ca = circle_classes(a)?;
    let cb = circle_classes(b)?;
    if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
        return Ok(false);
    }
    let profile = |c: &BTreeMap<Vec<EdgeId>, bool>| {
        let mut p: Vec<(usize, bool)> = c.iter().map(|(k, &bal)| (k.len(), bal)).collect();
        p.sort();
        p
    };
    if profile(&ca) != profile(&cb) {
        return Ok(false);
    }
    let ma = multiplicities(a);
    let mb = multiplicities(b);
    let mut search = IsoSearch {
        ma: &ma,
        mb: &mb,
        ca: &ca,
        cb: &cb,
        n: a.num_vertices(),
        map: vec![0; a.num_vertices() + 1],
        used: vec![false; b.num_vertices() + 1],
    };
    Ok(search.vertices(1))
}

struct IsoSearch<'a> {
    ma: &'a BTreeMap<(VertexId, VertexId), Vec<EdgeId>>,
    mb: &'a BTreeMap<(VertexId, VertexId), Vec<EdgeId>>,
    ca: &'a BTreeMap<Vec<EdgeId>, bool>,
    cb: &'a BTreeMap<Vec<EdgeId>, bool>,
    n: usize,
    // map[v] for v in 1..=n; 0 while unassigned.
    map: Vec<VertexId>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn vertices(&mut self, v: VertexId) -> bool {
        if v > self.n {
            return self.edges();
        }
        for w in 1..=self.n {
            if self.used[w] {
                continue;
            }
            self.map[v] = w;
            let consistent = (1..=v)
                .all(|u| bundle(self.ma, u, v).len() == bundle(self.mb, self.map[u], w).len());
            if consistent {
                self.used[w] = true;
                if self.vertices(v + 1) {
                    return true;
                }
                self.used[w] = false;
            }
        }
        self.map[v] = 0;
        false
    }

    /// With the vertex map fixed, searches bundle-wise edge bijections under
    /// which balanced circles correspond.
    fn edges(&self) -> bool {
        let pairs: Vec<(&[EdgeId], &[EdgeId])> = self
            .ma
            .iter()
            .map(|(&(u, v), ea)| (ea.as_slice(), bundle(self.mb, self.map[u], self.map[v])))
            .collect();
        let mut emap = BTreeMap::new();
        self.assign(&pairs, &mut emap)
    }

    fn assign(
        &self,
        pairs: &[(&[EdgeId], &[EdgeId])],
        emap: &mut BTreeMap<EdgeId, EdgeId>,
    ) -> bool {
        let Some(((ea, eb), rest)) = pairs.split_first() else {
            return self.circles_match(emap);
        };
        for perm in permutations(eb) {
            for (x, y) in ea.iter().zip(&perm) {
                emap.insert(*x, *y);
            }
            if self.assign(rest, emap) {
                return true;
            }
        }
        false
    }

    fn circles_match(&self, emap: &BTreeMap<EdgeId, EdgeId>) -> bool {
        self.ca.iter().all(|(key, bal)| {
            let mut img: Vec<EdgeId> = key.iter().map(|e| emap[e]).collect();
            img.sort_unstable();
            self.cb.get(&img) == Some(bal)
        })
    }
}

fn permutations(items: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn combinations(items: &[EdgeId], k: usize) -> Vec<Vec<EdgeId>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for i in 0..=items.len() - k {
        for mut c in combinations(&items[i + 1..], k - 1) {
            c.insert(0, items[i]);
            out.push(c);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    pub pattern: Pattern,
    pub edge_ids: Vec<EdgeId>,
}

/// All edge subsets of `g` whose sub-gain-graph is isomorphic to the pattern,
/// sorted by edge set.
pub fn find_occurrences(g: &GainGraph, p: Pattern) -> Result<Vec<Occurrence>, GraphError> {
    let r = p.reference();
    let mr = multiplicities(&r);
    let mg = multiplicities(g);
    let mut candidates = BTreeSet::new();
    let mut map = vec![0; r.num_vertices() + 1];
    let mut used = vec![false; g.num_vertices() + 1];
    embed_vertices(1, &r, &mr, g, &mg, &mut map, &mut used, &mut candidates);

    let mut out = Vec::new();
    for ids in candidates {
        let (sub, _) = g.edge_subgraph(&ids)?;
        if biased_isomorphic(&sub, &r)? {
            out.push(Occurrence {
                pattern: p,
                edge_ids: ids,
            });
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn embed_vertices(
    v: VertexId,
    r: &GainGraph,
    mr: &BTreeMap<(VertexId, VertexId), Vec<EdgeId>>,
    g: &GainGraph,
    mg: &BTreeMap<(VertexId, VertexId), Vec<EdgeId>>,
    map: &mut Vec<VertexId>,
    used: &mut Vec<bool>,
    out: &mut BTreeSet<Vec<EdgeId>>,
) {
    if v > r.num_vertices() {
        // Choose, for every pattern bundle, an equally sized subset of the
        // host bundle between the image vertices.
        let mut sets: Vec<Vec<EdgeId>> = vec![vec![]];
        for (&(a, b), ids) in mr {
            let host = bundle(mg, map[a], map[b]);
            let choices = combinations(host, ids.len());
            sets = sets
                .iter()
                .flat_map(|s| {
                    choices.iter().map(move |c| {
                        let mut s = s.clone();
                        s.extend(c);
                        s
                    })
                })
                .collect();
        }
        for mut s in sets {
            s.sort_unstable();
            out.insert(s);
        }
        return;
    }
    for w in 1..=g.num_vertices() {
        if used[w] {
            continue;
        }
        map[v] = w;
        let fits = (1..=v).all(|u| bundle(mg, map[u], w).len() >= bundle(mr, u, v).len());
        if fits {
            used[w] = true;
            embed_vertices(v + 1, r, mr, g, mg, map, used, out);
            used[w] = false;
        }
    }
    map[v] = 0;
}

/// Occurrence counts entering the census formula. `d3` and `gcirc` exclude
/// occurrences inside a D₃¹ occurrence; `g1` excludes those inside a G₂.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternCounts {
    pub k3: u64,
    pub k4: u64,
    pub d3: u64,
    pub d21: u64,
    pub k22: u64,
    pub k33: u64,
    pub gcirc: u64,
    pub d31: u64,
    pub g1: u64,
    pub g2: u64,
    pub theta: u64,
}

impl PatternCounts {
    /// Counts in the order (k3, k4, d3, d21, k22, k33, gcirc, d31, g1, g2, theta).
    pub fn as_tuple(&self) -> [u64; 11] {
        [
            self.k3, self.k4, self.d3, self.d21, self.k22, self.k33, self.gcirc, self.d31, self.g1,
            self.g2, self.theta,
        ]
    }
}

/// Full census: every occurrence of every pattern, and the filtered counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub occurrences: BTreeMap<Pattern, Vec<Occurrence>>,
    pub counts: PatternCounts,
}

impl Census {
    pub fn raw(&self, p: Pattern) -> u64 {
        self.occurrences.get(&p).map_or(0, |v| v.len() as u64)
    }
}

fn not_inside(small: &[Occurrence], big: &[Occurrence]) -> u64 {
    small
        .iter()
        .filter(|s| {
            !big.iter().any(|b| {
                s.edge_ids
                    .iter()
                    .all(|e| b.edge_ids.binary_search(e).is_ok())
            })
        })
        .count() as u64
}

/// Runs the census. Refuses graphs outside H1–H5.
pub fn census(g: &GainGraph) -> Result<Census, PatternError> {
    let report = g.validate();
    if !report.all_pass() {
        return Err(PatternError::HypothesisViolation(report.failing()));
    }
    let mut occurrences = BTreeMap::new();
    for p in Pattern::ALL {
        occurrences.insert(p, find_occurrences(g, p)?);
    }
    let raw = |p: Pattern| occurrences[&p].len() as u64;
    let counts = PatternCounts {
        k3: raw(Pattern::K3),
        k4: raw(Pattern::K4),
        d3: not_inside(&occurrences[&Pattern::D3], &occurrences[&Pattern::D31]),
        d21: raw(Pattern::D21),
        k22: raw(Pattern::K22),
        k33: raw(Pattern::K33),
        gcirc: not_inside(&occurrences[&Pattern::Gcirc], &occurrences[&Pattern::D31]),
        d31: raw(Pattern::D31),
        g1: not_inside(&occurrences[&Pattern::G1], &occurrences[&Pattern::G2]),
        g2: raw(Pattern::G2),
        theta: raw(Pattern::Theta3),
    };
    Ok(Census {
        occurrences,
        counts,
    })
}

pub fn count_patterns(g: &GainGraph) -> Result<PatternCounts, PatternError> {
    Ok(census(g)?.counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn keys(ts: &[Triangle]) -> Vec<[EdgeId; 3]> {
        ts.iter().map(|t| t.edge_ids).collect()
    }

    #[test]
    fn atlas_passes_self_test() {
        atlas_self_test().unwrap();
    }

    #[test]
    fn loose_handcuff_reference() {
        let ts = triangles(&Pattern::K22.reference());
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].edge_ids, [1, 2, 3]);
        assert_eq!(ts[0].kind, TriangleKind::LooseHandcuff3);
    }

    #[test]
    fn triangle_kinds_of_small_patterns() {
        let kind = |p: Pattern| triangles(&p.reference())[0].kind;
        assert_eq!(kind(Pattern::K3), TriangleKind::Balanced3Circle);
        assert_eq!(kind(Pattern::D21), TriangleKind::TightHandcuff3);
        assert_eq!(kind(Pattern::Theta3), TriangleKind::ContrabalancedTheta3);
    }

    #[test]
    fn no_triangles_in_plain_graph() {
        let g = GainGraph::from_triples(4, [(1, 2, 1), (2, 3, 1), (3, 1, 2), (3, 4, 5)]).unwrap();
        assert!(triangles(&g).is_empty());
    }

    #[test]
    fn theta_with_a_balanced_pair_is_not_a_triangle() {
        let g = GainGraph::from_triples(2, [(1, 2, 1), (1, 2, 1), (1, 2, 3)]).unwrap();
        assert!(triangles(&g).is_empty());
    }

    #[test]
    fn isomorphism_examples() {
        let bal = Pattern::K3.reference();
        let unbal = GainGraph::from_triples(3, [(1, 2, 1), (2, 3, 1), (1, 3, 2)]).unwrap();
        assert!(!biased_isomorphic(&bal, &unbal).unwrap());
        assert!(biased_isomorphic(&bal, &bal).unwrap());

        let d3 = Pattern::D3.reference();
        // Doubled triangle with gains {1,2} on every side, oriented cyclically:
        // only the all-ones 3-circle is balanced.
        let cyclic = GainGraph::from_triples(
            3,
            [
                (1, 2, 1),
                (1, 2, 2),
                (3, 1, 1),
                (3, 1, 2),
                (2, 3, 1),
                (2, 3, 2),
            ],
        )
        .unwrap();
        // Oriented v1→v2, v2→v3, v1→v3: a·b = c has three solutions.
        let transitive = GainGraph::from_triples(
            3,
            [
                (1, 2, 1),
                (1, 2, 2),
                (1, 3, 1),
                (1, 3, 2),
                (2, 3, 1),
                (2, 3, 2),
            ],
        )
        .unwrap();
        let balanced3 = |g: &GainGraph| {
            g.all_circles()
                .unwrap()
                .iter()
                .filter(|c| c.len() == 3 && g.is_balanced(c).unwrap())
                .count()
        };
        assert_eq!(balanced3(&d3), 4);
        assert_eq!(balanced3(&cyclic), 1);
        assert_eq!(balanced3(&transitive), 3);
        assert!(!biased_isomorphic(&d3, &cyclic).unwrap());
        assert!(!biased_isomorphic(&d3, &transitive).unwrap());
    }

    #[test]
    fn isomorphism_survives_relabeling() {
        // Gcirc with vertices and edges permuted and one edge reoriented.
        let g = GainGraph::from_triples(
            3,
            [
                (3, 3, 2),
                (2, 1, 1),
                (3, 2, 1),
                (3, 1, 2),
                (3, 2, 2),
                (3, 1, 1),
            ],
        )
        .unwrap();
        let g = g.reorient(2).unwrap();
        assert!(biased_isomorphic(&g, &Pattern::Gcirc.reference()).unwrap());
        assert!(!biased_isomorphic(&g, &Pattern::D3.reference()).unwrap());
    }

    #[test]
    fn isomorphism_size_bound() {
        let big = GainGraph::from_triples(2, (0..13).map(|k| (1, 2, k + 1))).unwrap();
        assert!(matches!(
            biased_isomorphic(&big, &big),
            Err(GraphError::TooLarge(13))
        ));
    }

    #[test]
    fn self_occurrence_for_every_pattern() {
        for p in Pattern::ALL {
            let r = p.reference();
            let all: Vec<EdgeId> = r.edge_ids().collect();
            let occ = find_occurrences(&r, p).unwrap();
            assert!(occ.iter().any(|o| o.edge_ids == all), "{p}");
        }
    }

    #[test]
    fn simple_graphs_have_no_b2() {
        let k4 = Pattern::K4.reference();
        assert!(find_occurrences(&k4, Pattern::B2).unwrap().is_empty());
    }

    #[test]
    fn census_of_d31_reference() {
        let c = count_patterns(&Pattern::D31.reference()).unwrap();
        let expected = PatternCounts {
            k3: 4,
            d21: 2,
            d31: 1,
            ..Default::default()
        };
        assert_eq!(c, expected);
        let full = census(&Pattern::D31.reference()).unwrap();
        // The D3 inside D31 is found but excluded.
        assert_eq!(full.raw(Pattern::D3), 1);
    }

    #[test]
    fn census_of_balanced_k4() {
        let c = count_patterns(&Pattern::K4.reference()).unwrap();
        assert_eq!(
            c,
            PatternCounts {
                k3: 4,
                k4: 1,
                ..Default::default()
            }
        );
    }

    #[test]
    fn census_refuses_b2() {
        let err = count_patterns(&Pattern::B2.reference()).unwrap_err();
        assert_eq!(err, PatternError::HypothesisViolation(vec![Hypothesis::H1]));
    }

    #[test]
    fn triangle_count_matches_small_pattern_counts() {
        for p in Pattern::ALL.into_iter().filter(|p| *p != Pattern::B2) {
            let r = p.reference();
            let c = count_patterns(&r).unwrap();
            assert_eq!(
                triangles(&r).len() as u64,
                c.k3 + c.d21 + c.k22 + c.theta,
                "{p}: {:?}",
                keys(&triangles(&r))
            );
        }
    }

    #[test]
    fn combinations_and_permutations() {
        assert_eq!(
            combinations(&[1, 2, 3], 2),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(&[1], 2), Vec::<Vec<EdgeId>>::new());
        assert_eq!(permutations(&[1, 2, 3]).len(), 6);
        assert_eq!(permutations(&[]), vec![Vec::<EdgeId>::new()]);
    }
}
