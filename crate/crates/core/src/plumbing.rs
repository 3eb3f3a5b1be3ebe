//! Plumbing graphs of resolutions: weighted graphs of exceptional curves,
//! their intersection forms and discriminant groups.
//!
//! Weights are stored as magnitudes: a vertex of weight `e` is a curve of
//! self-intersection `−e`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{cokernel_torsion, AbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::quotient_cusp::QuotientCuspSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphData", into = "GraphData")]
pub struct PlumbingGraph {
    weights: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

/// Wire form `{"weights": [...], "edges": [[i, j], ...]}` with 0-based indices.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphData {
    pub weights: Vec<u64>,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphData> for PlumbingGraph {
    type Error = Error;

    fn try_from(d: GraphData) -> Result<Self> {
        PlumbingGraph::new(d.weights, d.edges.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl From<PlumbingGraph> for GraphData {
    fn from(g: PlumbingGraph) -> Self {
        GraphData {
            weights: g.weights,
            edges: g.edges.into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl PlumbingGraph {
    pub fn new(weights: Vec<u64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = weights.len();
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        if let Some(w) = weights.iter().find(|&&w| w < 2) {
            return Err(Error::InvalidGraph(format!("weight {w} is below 2")));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range")));
            }
            if u == v && n > 1 {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        let mut sorted = normalized.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                let two_cycle = n == 2 && sorted.len() == 2 && w[0].0 != w[0].1;
                if !two_cycle {
                    return Err(Error::InvalidGraph(format!("repeated edge {:?}", w[0])));
                }
            }
        }
        let graph = PlumbingGraph { weights, edges: normalized };
        if !graph.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(graph)
    }

    /// Chain `e₁ - e₂ - ⋯ - e_k`.
    pub fn chain(weights: &[u64]) -> Result<Self> {
        let edges = (1..weights.len()).map(|i| (i - 1, i)).collect();
        PlumbingGraph::new(weights.to_vec(), edges)
    }

    /// `A_n`: a chain of `n` vertices of weight 2.
    pub fn a_n(n: usize) -> Result<Self> {
        PlumbingGraph::chain(&vec![2; n])
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    fn is_connected(&self) -> bool {
        let n = self.weights.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                let next = if a == u { b } else if b == u { a } else { continue };
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn intersection_matrix(&self) -> Result<IntersectionForm> {
        if self.has_loop() {
            return Err(Error::LoopUnsupported);
        }
        let n = self.vertex_count();
        let mut m = IntMatrix::zeros(n, n)?;
        for (i, &w) in self.weights.iter().enumerate() {
            m.set(i, i, -(w as i64));
        }
        for &(u, v) in &self.edges {
            let c: BigInt = m.get(u, v) + 1;
            m.set(u, v, c.clone());
            m.set(v, u, c);
        }
        Ok(IntersectionForm { matrix: m })
    }

    pub fn discriminant_group(&self) -> Result<AbGroup> {
        cokernel_torsion(&self.intersection_matrix()?.matrix)
    }
}

/// Quotient-cusp resolution graph: the chain `e₁ … e_k` with two weight-2
/// leaves on each end vertex. Leaves are numbered `k, k+1` (on `e₁`) and
/// `k+2, k+3` (on `e_k`).
pub fn quotient_cusp_graph(e: &[u64]) -> Result<PlumbingGraph> {
    let spec = QuotientCuspSpec::new(e.to_vec())?;
    let k = spec.e().len();
    let mut weights = spec.e().to_vec();
    weights.extend([2, 2, 2, 2]);
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    edges.extend([(0, k), (0, k + 1), (k - 1, k + 2), (k - 1, k + 3)]);
    PlumbingGraph::new(weights, edges)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    pub matrix: IntMatrix,
}

impl IntersectionForm {
    /// Sylvester's criterion: leading minors alternate in sign starting
    /// negative.
    pub fn is_negative_definite(&self) -> bool {
        if !self.matrix.is_symmetric() {
            return false;
        }
        use num_traits::Signed;
        self.matrix.leading_minors().iter().enumerate().all(|(i, m)| {
            if i % 2 == 0 {
                m.is_negative()
            } else {
                m.is_positive()
            }
        })
    }
}
