//! The canonical linear hyperplane arrangement of a gain graph.
//!
//! A link `u → v` with gain `g` gives the hyperplane `x_u = g·x_v`, with normal
//! `e_u − g·e_v`; a loop at `u` gives `x_u = 0`. Dependence of edge sets is
//! read off exact ranks of these normals, independently of the combinatorial
//! triangle classification.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::gain_graph::{rational_string, EdgeId, GainGraph};
use crate::linalg::bareiss_rank;
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizationError {
    #[error("hyperplanes of edges {0} and {1} coincide (balanced 2-circle, balanced loop or repeated loop)")]
    ProportionalNormals(EdgeId, EdgeId),
    #[error("edge {0} has a zero normal")]
    ZeroNormal(EdgeId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    pub edge_id: EdgeId,
    #[serde(serialize_with = "serialize_normal")]
    pub normal: Vec<Rational>,
}

fn serialize_normal<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational_string))
}

impl Hyperplane {
    /// `H <id>: c1 c2 … cℓ`
    pub fn to_line(&self) -> String {
        let coeffs: Vec<String> = self.normal.iter().map(rational_string).collect();
        format!("H {}: {}", self.edge_id, coeffs.join(" "))
    }

    /// The normal scaled to integer entries.
    fn integer_normal(&self) -> Vec<BigInt> {
        let lcm = self.normal.iter().fold(BigInt::one(), |acc, c| {
            num_integer::lcm(acc, c.denom().clone())
        });
        self.normal
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    }
}

fn normal_of(g: &GainGraph, id: EdgeId) -> Hyperplane {
    let e = g.edge(id).expect("edge id in range");
    let mut normal = vec![Rational::zero(); g.num_vertices()];
    if e.is_loop() {
        normal[e.tail - 1] = Rational::one();
    } else {
        normal[e.tail - 1] = Rational::one();
        normal[e.head - 1] = -e.gain.value().clone();
    }
    Hyperplane {
        edge_id: id,
        normal,
    }
}

/// One hyperplane per edge, in edge-id order. Fails if two hyperplanes
/// coincide, which happens exactly when H4 or H5 is violated.
pub fn arrangement(g: &GainGraph) -> Result<Vec<Hyperplane>, RealizationError> {
    let hs: Vec<Hyperplane> = g.edge_ids().map(|id| normal_of(g, id)).collect();
    let ints: Vec<Vec<BigInt>> = hs.iter().map(Hyperplane::integer_normal).collect();
    for (i, h) in hs.iter().enumerate() {
        if h.normal.iter().all(Zero::is_zero) {
            return Err(RealizationError::ZeroNormal(h.edge_id));
        }
        for j in i + 1..hs.len() {
            if bareiss_rank(&[ints[i].clone(), ints[j].clone()]) < 2 {
                return Err(RealizationError::ProportionalNormals(
                    h.edge_id,
                    hs[j].edge_id,
                ));
            }
        }
    }
    Ok(hs)
}

/// All 3-sets of edges whose normals are linearly dependent, sorted.
pub fn dependent_3sets(g: &GainGraph) -> Result<Vec<[EdgeId; 3]>, RealizationError> {
    let hs = arrangement(g)?;
    let ints: Vec<Vec<BigInt>> = hs.iter().map(Hyperplane::integer_normal).collect();
    let n = hs.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let m = [ints[i].clone(), ints[j].clone(), ints[k].clone()];
                if bareiss_rank(&m) < 3 {
                    out.push([i + 1, j + 1, k + 1]);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{triangles, Pattern};

    fn q(p: i64) -> Rational {
        Rational::from_integer(p.into())
    }

    fn seven_edge_example() -> GainGraph {
        GainGraph::parse(
            "graph 3\nedge 1 1 2 1\nedge 2 1 2 2\nedge 3 1 2 3\nedge 4 1 3 1\n\
             edge 5 2 3 1\nedge 6 3 2 2\nedge 7 1 1 -1\n",
        )
        .unwrap()
    }

    #[test]
    fn example_matches_defining_polynomial() {
        // Q = x(x−y)(x−2y)(x−3y)(y−z)(2y−z)(x−z), factors as normals over (x,y,z).
        let factors: Vec<Vec<i64>> = vec![
            vec![1, 0, 0],
            vec![1, -1, 0],
            vec![1, -2, 0],
            vec![1, -3, 0],
            vec![0, 1, -1],
            vec![0, 2, -1],
            vec![1, 0, -1],
        ];
        let hs = arrangement(&seven_edge_example()).unwrap();
        assert_eq!(hs.len(), 7);
        for h in &hs {
            let normal: Vec<BigInt> = h.integer_normal();
            let matches = factors.iter().filter(|f| {
                let f: Vec<BigInt> = f.iter().map(|&x| BigInt::from(x)).collect();
                bareiss_rank(&[normal.clone(), f]) == 1
            });
            assert_eq!(matches.count(), 1, "edge {}", h.edge_id);
        }
    }

    #[test]
    fn single_hyperplanes() {
        let lp = GainGraph::from_triples(1, [(1, 1, 2)]).unwrap();
        assert_eq!(arrangement(&lp).unwrap()[0].normal, vec![q(1)]);
        let link = GainGraph::from_triples(2, [(1, 2, 3)]).unwrap();
        let h = &arrangement(&link).unwrap()[0];
        assert_eq!(h.normal, vec![q(1), q(-3)]);
        assert_eq!(h.to_line(), "H 1: 1 -3");
        let frac = GainGraph::parse("graph 2\nedge 1 2 1 2/3\n").unwrap();
        assert_eq!(arrangement(&frac).unwrap()[0].to_line(), "H 1: -2/3 1");
    }

    #[test]
    fn coinciding_hyperplanes_rejected() {
        let pair = GainGraph::parse("graph 2\nedge 1 1 2 2\nedge 2 2 1 1/2\n").unwrap();
        assert_eq!(
            arrangement(&pair),
            Err(RealizationError::ProportionalNormals(1, 2))
        );
        let loops = GainGraph::from_triples(1, [(1, 1, 2), (1, 1, 3)]).unwrap();
        assert!(arrangement(&loops).is_err());
    }

    #[test]
    fn dependence_examples() {
        // x, x − y, x − z: independent.
        let g = GainGraph::from_triples(3, [(1, 1, 2), (1, 2, 1), (1, 3, 1)]).unwrap();
        assert!(dependent_3sets(&g).unwrap().is_empty());
        let k3 = Pattern::K3.reference();
        assert_eq!(dependent_3sets(&k3).unwrap(), vec![[1, 2, 3]]);
    }

    #[test]
    fn reference_patterns_agree_with_triangles() {
        for p in Pattern::ALL {
            let r = p.reference();
            let combinatorial: Vec<[EdgeId; 3]> =
                triangles(&r).into_iter().map(|t| t.edge_ids).collect();
            assert_eq!(dependent_3sets(&r).unwrap(), combinatorial, "{p}");
        }
    }
}
