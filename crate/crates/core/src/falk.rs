//! φ₃ two ways, and the report comparing them.
//!
//! The rank route uses Falk's formula
//! `φ₃ = 2·C(n+1,3) − n·dim A² + C(n,3) − dim I³₂`, with the dependent 3-sets
//! taken from the hyperplane realization. The combinatorial route evaluates
//! `2(k₃+k₄+d₃+d₂₁+k₂₂+k₃₃+g∘+g₂+Θ) + 5d₃₁ + g₁` on the subgraph census.

use serde::Serialize;
use thiserror::Error;

use crate::exterior::{self, binomial, ExteriorError};
use crate::gain_graph::{EdgeId, GainGraph};
use crate::hypotheses::{Hypothesis, ValidationReport};
use crate::patterns::{self, PatternCounts, Triangle};
use crate::realization::{self, RealizationError};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FalkError {
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// Dimensions of the low-degree Orlik–Solomon pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankData {
    pub n: usize,
    pub dependent: Vec<[EdgeId; 3]>,
    pub dim_i2: usize,
    pub dim_a2: usize,
    pub span_f3_size: usize,
    pub span_f3_rank: usize,
    pub dim_i3_2: usize,
}

impl RankData {
    pub fn phi3(&self) -> i64 {
        falk_formula(self.n, self.dim_a2, self.dim_i3_2)
    }
}

/// `2·C(n+1,3) − n·dim A² + C(n,3) − dim I³₂`.
pub fn falk_formula(n: usize, dim_a2: usize, dim_i3_2: usize) -> i64 {
    let c = |a, b| binomial(a, b) as i64;
    2 * c(n + 1, 3) - (n as i64) * (dim_a2 as i64) + c(n, 3) - dim_i3_2 as i64
}

/// Orlik–Solomon ranks for `g`, with dependence read from the hyperplanes.
pub fn rank_data(g: &GainGraph) -> Result<RankData, FalkError> {
    let dependent = realization::dependent_3sets(g)?;
    rank_data_for(g.num_edges(), dependent)
}

/// Orlik–Solomon ranks for an arbitrary list of dependent 3-sets on `n`
/// symbols.
pub fn rank_data_for(n: usize, dependent: Vec<[EdgeId; 3]>) -> Result<RankData, FalkError> {
    let dim_i2 = exterior::dim_i2::<Rational>(n, &dependent)?;
    let (span_f3_size, span_f3_rank) = exterior::span_f3::<Rational>(n, &dependent)?;
    let dim_i3_2 = exterior::dim_i3_2::<Rational>(n, &dependent)?;
    Ok(RankData {
        n,
        dim_i2,
        dim_a2: binomial(n, 2) - dim_i2,
        span_f3_size,
        span_f3_rank,
        dim_i3_2,
        dependent,
    })
}

/// φ₃ by Falk's rank formula. Needs H4 and H5 so that the hyperplanes are
/// distinct.
pub fn phi3_rank(g: &GainGraph) -> Result<i64, FalkError> {
    Ok(rank_data(g)?.phi3())
}

/// φ₃ from the census counts.
pub fn phi3_combinatorial(c: &PatternCounts) -> i64 {
    let twice = c.k3 + c.k4 + c.d3 + c.d21 + c.k22 + c.k33 + c.gcirc + c.g2 + c.theta;
    (2 * twice + 5 * c.d31 + c.g1) as i64
}

/// Both routes side by side. Fields that could not be computed are `None`,
/// with the reason in `withheld`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FalkReport {
    pub n: usize,
    pub num_vertices: usize,
    pub triangles: Vec<Triangle>,
    pub num_triangles: usize,
    pub dim_i2: Option<usize>,
    pub dim_a2: Option<usize>,
    pub dim_i3_2: Option<usize>,
    pub span_f3_size: Option<usize>,
    pub span_f3_rank: Option<usize>,
    pub counts: Option<PatternCounts>,
    pub phi3_combinatorial: Option<i64>,
    pub phi3_rank: Option<i64>,
    /// `Some` only when both values exist.
    pub agree: Option<bool>,
    pub hypotheses: ValidationReport,
    pub withheld: Vec<String>,
}

/// Runs validation, the rank route, and (under H1–H5) the census route.
pub fn verify(g: &GainGraph) -> FalkReport {
    let hypotheses = g.validate();
    let triangles = patterns::triangles(g);
    let mut withheld = Vec::new();

    let (ranks, census) = std::thread::scope(|s| {
        let ranks = s.spawn(|| rank_data(g));
        let census = hypotheses.all_pass().then(|| patterns::count_patterns(g));
        (ranks.join().expect("rank pipeline panicked"), census)
    });

    let ranks = match ranks {
        Ok(r) => Some(r),
        Err(e) => {
            withheld.push(format!("rank route: {e}"));
            None
        }
    };
    let counts = match census {
        Some(Ok(c)) => Some(c),
        Some(Err(e)) => {
            withheld.push(format!("combinatorial route: {e}"));
            None
        }
        None => {
            let failing: Vec<String> = hypotheses
                .failing()
                .iter()
                .map(Hypothesis::to_string)
                .collect();
            withheld.push(format!(
                "combinatorial route: census formula requires H1-H5, failing {}",
                failing.join(", ")
            ));
            None
        }
    };
    let phi3_rank = ranks.as_ref().map(RankData::phi3);
    let phi3_combinatorial = counts.as_ref().map(phi3_combinatorial);
    let agree = match (phi3_combinatorial, phi3_rank) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    FalkReport {
        n: g.num_edges(),
        num_vertices: g.num_vertices(),
        num_triangles: triangles.len(),
        triangles,
        dim_i2: ranks.as_ref().map(|r| r.dim_i2),
        dim_a2: ranks.as_ref().map(|r| r.dim_a2),
        dim_i3_2: ranks.as_ref().map(|r| r.dim_i3_2),
        span_f3_size: ranks.as_ref().map(|r| r.span_f3_size),
        span_f3_rank: ranks.as_ref().map(|r| r.span_f3_rank),
        counts,
        phi3_combinatorial,
        phi3_rank,
        agree,
        hypotheses,
        withheld,
    }
}

/// The closed form for `dim I³₂` in terms of the census, valid under H1–H5:
/// `(n−2)(k₃+d₂₁+k₂₂+Θ) − 2k₄ − 2d₃ − 2g∘ − 2k₃₃ − 5d₃₁ − g₁ − 2g₂`.
pub fn dim_i3_2_closed_form(n: usize, c: &PatternCounts) -> i64 {
    let t = (c.k3 + c.d21 + c.k22 + c.theta) as i64;
    let minus = 2 * (c.k4 + c.d3 + c.gcirc + c.k33 + c.g2) + 5 * c.d31 + c.g1;
    (n as i64 - 2) * t - minus as i64
}
