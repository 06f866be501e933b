//! Hypothesis checks under which the census formula holds.
//!
//! | id | condition |
//! |----|-----------|
//! | H1 | no two parallel links between `u`,`v` together with a loop at `u` and a loop at `v` (no B₂) |
//! | H2 | no loop at an endpoint of a bundle of three or more parallel links |
//! | H3 | at most three parallel links between any pair of vertices |
//! | H4 | every loop and every 2-circle is unbalanced |
//! | H5 | at most one loop per vertex |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::gain_graph::{EdgeId, GainGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Hypothesis {
    H1,
    H2,
    H3,
    H4,
    H5,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 5] = [Self::H1, Self::H2, Self::H3, Self::H4, Self::H5];

    pub fn description(self) -> &'static str {
        match self {
            Self::H1 => "no B2 subgraph (parallel pair with a loop at each end)",
            Self::H2 => "no loop adjacent to a triple parallel bundle",
            Self::H3 => "at most triple parallel edges",
            Self::H4 => "all loops and 2-circles unbalanced",
            Self::H5 => "at most one loop per vertex",
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Outcome of one hypothesis. A failing verdict always names at least one
/// offending edge set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub passed: bool,
    pub witnesses: Vec<Vec<EdgeId>>,
}

impl Verdict {
    fn from_witnesses(mut witnesses: Vec<Vec<EdgeId>>) -> Self {
        for w in &mut witnesses {
            w.sort_unstable();
        }
        witnesses.sort();
        witnesses.dedup();
        Self {
            passed: witnesses.is_empty(),
            witnesses,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub h1: Verdict,
    pub h2: Verdict,
    pub h3: Verdict,
    pub h4: Verdict,
    pub h5: Verdict,
}

impl ValidationReport {
    pub fn verdict(&self, h: Hypothesis) -> &Verdict {
        match h {
            Hypothesis::H1 => &self.h1,
            Hypothesis::H2 => &self.h2,
            Hypothesis::H3 => &self.h3,
            Hypothesis::H4 => &self.h4,
            Hypothesis::H5 => &self.h5,
        }
    }

    pub fn passes(&self, hs: &[Hypothesis]) -> bool {
        hs.iter().all(|&h| self.verdict(h).passed)
    }

    pub fn all_pass(&self) -> bool {
        self.passes(&Hypothesis::ALL)
    }

    pub fn failing(&self) -> Vec<Hypothesis> {
        Hypothesis::ALL
            .into_iter()
            .filter(|&h| !self.verdict(h).passed)
            .collect()
    }
}

impl GainGraph {
    pub fn validate(&self) -> ValidationReport {
        let bundles = self.bundles();
        let loops_at = |v| self.loops_at(v).map(|e| e.id).collect::<Vec<_>>();

        let mut h1 = Vec::new();
        let mut h2 = Vec::new();
        let mut h3 = Vec::new();
        for (&(u, v), links) in &bundles {
            let (lu, lv) = (loops_at(u), loops_at(v));
            if links.len() >= 2 {
                for (i, &a) in links.iter().enumerate() {
                    for &b in &links[i + 1..] {
                        for &x in &lu {
                            for &y in &lv {
                                h1.push(vec![a, b, x, y]);
                            }
                        }
                    }
                }
            }
            if links.len() >= 3 {
                for (i, &a) in links.iter().enumerate() {
                    for (j, &b) in links.iter().enumerate().skip(i + 1) {
                        for &c in &links[j + 1..] {
                            for &l in lu.iter().chain(&lv) {
                                h2.push(vec![a, b, c, l]);
                            }
                        }
                    }
                }
            }
            if links.len() > 3 {
                h3.push(links.clone());
            }
        }

        let mut h4 = Vec::new();
        for e in self.loops().filter(|e| e.gain.is_one()) {
            h4.push(vec![e.id]);
        }
        for links in bundles.values() {
            for (i, &a) in links.iter().enumerate() {
                for &b in &links[i + 1..] {
                    if self.edge_set_balanced(&[a, b]) == Some(true) {
                        h4.push(vec![a, b]);
                    }
                }
            }
        }

        let h5 = (1..=self.num_vertices())
            .map(loops_at)
            .filter(|ls| ls.len() > 1)
            .collect();

        ValidationReport {
            h1: Verdict::from_witnesses(h1),
            h2: Verdict::from_witnesses(h2),
            h3: Verdict::from_witnesses(h3),
            h4: Verdict::from_witnesses(h4),
            h5: Verdict::from_witnesses(h5),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_fails_h1() {
        let g = GainGraph::from_triples(2, [(1, 2, 1), (1, 2, 2), (1, 1, 2), (2, 2, 2)]).unwrap();
        let r = g.validate();
        assert!(!r.h1.passed);
        assert_eq!(r.h1.witnesses, vec![vec![1, 2, 3, 4]]);
        assert!(r.h2.passed && r.h3.passed && r.h4.passed && r.h5.passed);
        assert_eq!(r.failing(), vec![Hypothesis::H1]);
    }

    #[test]
    fn loop_at_triple_bundle_fails_h2() {
        let g = GainGraph::from_triples(2, [(1, 2, 1), (1, 2, 2), (1, 2, 3), (1, 1, 2)]).unwrap();
        let r = g.validate();
        assert_eq!(r.failing(), vec![Hypothesis::H2]);
        assert_eq!(r.h2.witnesses, vec![vec![1, 2, 3, 4]]);
    }

    #[test]
    fn quadruple_bundle_fails_h3() {
        let g = GainGraph::from_triples(2, [(1, 2, 1), (1, 2, 2), (1, 2, 3), (2, 1, 5)]).unwrap();
        let r = g.validate();
        assert_eq!(r.failing(), vec![Hypothesis::H3]);
        assert_eq!(r.h3.witnesses, vec![vec![1, 2, 3, 4]]);
    }

    #[test]
    fn balanced_loop_and_two_circle_fail_h4() {
        // Edge 2 reversed with gain 1/2 is the same as edge 1.
        let g = GainGraph::parse("graph 2\nedge 1 1 2 2\nedge 2 2 1 1/2\nedge 3 2 2 1\n").unwrap();
        let r = g.validate();
        assert_eq!(r.failing(), vec![Hypothesis::H4]);
        assert_eq!(r.h4.witnesses, vec![vec![1, 2], vec![3]]);
    }

    #[test]
    fn two_loops_fail_h5() {
        let g = GainGraph::from_triples(1, [(1, 1, 2), (1, 1, 3)]).unwrap();
        let r = g.validate();
        assert_eq!(r.failing(), vec![Hypothesis::H5]);
        assert_eq!(r.h5.witnesses, vec![vec![1, 2]]);
    }

    #[test]
    fn failing_verdicts_carry_witnesses() {
        let g = GainGraph::from_triples(
            2,
            [
                (1, 2, 1),
                (1, 2, 2),
                (1, 2, 3),
                (1, 2, 1),
                (1, 1, 1),
                (1, 1, 2),
                (2, 2, 2),
            ],
        )
        .unwrap();
        let r = g.validate();
        assert!(!r.all_pass());
        for h in Hypothesis::ALL {
            let v = r.verdict(h);
            assert_eq!(v.passed, v.witnesses.is_empty(), "{h}");
        }
        assert_eq!(r.failing().len(), 5);
    }
}
