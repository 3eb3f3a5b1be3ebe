//! Dimension bookkeeping along long exact sequences of finite-dimensional
//! vector spaces.
//!
//! Terms `V_0 → V_1 → ⋯ → V_{n−1}` with zero at both ends. Exactness at
//! `V_i` reads `dim V_i = rank(f_{i−1}) + rank(f_i)`. Given enough known
//! dimensions and ranks the rest follow by propagation; anything still
//! unknown afterwards is reported as an error, never guessed.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct LongExactSequence {
    labels: Vec<String>,
    dims: Vec<Option<i128>>,
    /// `ranks[i]` is the rank of `V_i → V_{i+1}`.
    ranks: Vec<Option<i128>>,
}

impl LongExactSequence {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        LongExactSequence {
            labels,
            dims: vec![None; n],
            ranks: vec![None; n.saturating_sub(1)],
        }
    }

    /// Cohomology sequence of `0 → A → B → C → 0` on a space of dimension
    /// `top`: `H⁰(A), H⁰(B), H⁰(C), H¹(A), …, H^top(C)`.
    pub fn of_short_exact(names: [&str; 3], top: usize) -> Self {
        let labels = (0..=top)
            .flat_map(|q| names.iter().map(move |s| format!("H^{q}({s})")))
            .collect();
        LongExactSequence::new(labels)
    }

    /// Index of `H^q` of the `j`-th sheaf in a sequence built by
    /// [`of_short_exact`](Self::of_short_exact).
    pub fn slot(q: usize, j: usize) -> usize {
        3 * q + j
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn set_dim(&mut self, i: usize, d: i128) -> &mut Self {
        self.dims[i] = Some(d);
        self
    }

    pub fn set_rank(&mut self, i: usize, r: i128) -> &mut Self {
        self.ranks[i] = Some(r);
        self
    }

    fn rank_in(&self, i: usize) -> Option<i128> {
        if i == 0 {
            Some(0)
        } else {
            self.ranks[i - 1]
        }
    }

    fn rank_out(&self, i: usize) -> Option<i128> {
        if i + 1 == self.len() {
            Some(0)
        } else {
            self.ranks[i]
        }
    }

    fn set_rank_in(&mut self, i: usize, r: i128) {
        if i > 0 {
            self.ranks[i - 1] = Some(r);
        }
    }

    fn set_rank_out(&mut self, i: usize, r: i128) {
        if i + 1 < self.len() {
            self.ranks[i] = Some(r);
        }
    }

    /// Propagates exactness until nothing changes, then checks that every
    /// dimension and rank is determined and consistent.
    pub fn solve(mut self) -> Result<SolvedSequence> {
        loop {
            let mut changed = false;
            for i in 0..self.len() {
                let (d, a, b) = (self.dims[i], self.rank_in(i), self.rank_out(i));
                match (d, a, b) {
                    (Some(0), a, b) if a.is_none() || b.is_none() => {
                        self.set_rank_in(i, 0);
                        self.set_rank_out(i, 0);
                        changed = true;
                    }
                    (None, Some(a), Some(b)) => {
                        self.dims[i] = Some(a + b);
                        changed = true;
                    }
                    (Some(d), None, Some(b)) => {
                        self.set_rank_in(i, d - b);
                        changed = true;
                    }
                    (Some(d), Some(a), None) => {
                        self.set_rank_out(i, d - a);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }

        let unknown: Vec<&str> = (0..self.len())
            .filter(|&i| self.dims[i].is_none() || self.rank_out(i).is_none())
            .map(|i| self.labels[i].as_str())
            .collect();
        if !unknown.is_empty() {
            return Err(Error::AmbiguousRank(unknown.join(", ")));
        }

        let dims: Vec<i128> = self.dims.iter().map(|d| d.expect("solved")).collect();
        let ranks: Vec<i128> = self.ranks.iter().map(|r| r.expect("solved")).collect();
        for i in 0..dims.len() {
            let a = if i == 0 { 0 } else { ranks[i - 1] };
            let b = if i + 1 == dims.len() { 0 } else { ranks[i] };
            if dims[i] < 0 || a < 0 || b < 0 || dims[i] != a + b {
                return Err(Error::InconsistentSequence(format!(
                    "at {}: dim {} vs ranks {a} + {b}",
                    self.labels[i], dims[i]
                )));
            }
        }
        Ok(SolvedSequence { labels: self.labels, dims, ranks })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvedSequence {
    pub labels: Vec<String>,
    pub dims: Vec<i128>,
    pub ranks: Vec<i128>,
}

impl SolvedSequence {
    pub fn dim(&self, i: usize) -> i128 {
        self.dims[i]
    }

    /// `Σ (−1)^i dim V_i`, zero for any exact sequence.
    pub fn euler_characteristic(&self) -> i128 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d } else { -d })
            .sum()
    }

    /// `dim H^q` of the `j`-th sheaf, `q = 0..=top`.
    pub fn column(&self, j: usize) -> Vec<i128> {
        (0..self.dims.len() / 3).map(|q| self.dims[LongExactSequence::slot(q, j)]).collect()
    }
}
