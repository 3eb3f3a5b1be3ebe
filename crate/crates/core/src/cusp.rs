//! Cusp singularities through their resolution cycles.
//!
//! A cycle `(e₁, …, e_k)` stands for the cyclic chain of rational curves
//! with self-intersections `−e₁, …, −e_k`. Every entry is at least 2 and at
//! least one entry is at least 3. Cycles compare equal up to rotation and
//! reflection.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{cokernel_torsion, AbGroup, Mat2};
use crate::error::{Error, Result};

/// Largest discriminant cover (in vertices) that is materialized.
pub const MAX_COVER_LENGTH: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct CuspCycle {
    entries: Vec<u64>,
}

impl CuspCycle {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidCycle("empty cycle".into()));
        }
        if let Some(e) = entries.iter().find(|&&e| e < 2) {
            return Err(Error::InvalidCycle(format!("entry {e} is below 2")));
        }
        if entries.iter().all(|&e| e == 2) {
            return Err(Error::InvalidCycle("all entries equal 2".into()));
        }
        Ok(CuspCycle { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `Σ (e_i − 2)`, the length of the dual cycle.
    pub fn excess(&self) -> u64 {
        self.entries.iter().map(|e| e - 2).sum()
    }

    /// Lexicographically least sequence among all rotations of the cycle and
    /// of its reversal.
    pub fn canonicalize(&self) -> CuspCycle {
        CuspCycle { entries: canonical_entries(&self.entries) }
    }

    pub fn is_canonical(&self) -> bool {
        canonical_entries(&self.entries) == self.entries
    }

    /// `A = M_{e_k} ⋯ M_{e_1}` with `M_e = [[0, −1], [1, e]]`.
    pub fn monodromy(&self) -> Mat2 {
        self.entries
            .iter()
            .fold(Mat2::identity(), |acc, &e| Mat2::elementary(e).mul(&acc))
    }

    pub fn block_form(&self) -> BlockForm {
        let start = self
            .entries
            .iter()
            .position(|&e| e >= 3)
            .expect("valid cycle has an entry >= 3");
        let mut blocks: Vec<(u64, u64)> = Vec::new();
        let k = self.entries.len();
        for i in 0..k {
            let e = self.entries[(start + i) % k];
            if e >= 3 {
                blocks.push((e, 0));
            } else {
                blocks.last_mut().expect("first entry opens a block").1 += 1;
            }
        }
        BlockForm { blocks }
    }

    /// The dual cusp: each block `(m, n)` becomes `(n + 3, m − 3)` and the
    /// blocks are reassembled in reverse order.
    pub fn dual(&self) -> CuspCycle {
        let dual_blocks: Vec<(u64, u64)> = self
            .block_form()
            .blocks
            .iter()
            .rev()
            .map(|&(m, n)| (n + 3, m - 3))
            .collect();
        BlockForm { blocks: dual_blocks }.expand().canonicalize()
    }

    /// Complete intersection criterion `Σ (e_i − 2) ≤ 4`.
    pub fn is_complete_intersection(&self) -> bool {
        self.excess() <= 4
    }

    /// `H₁` of the link: `ℤ ⊕ coker(A − I)`.
    pub fn link_homology(&self) -> AbGroup {
        let a_minus_i = self.monodromy().minus_identity().to_int_matrix();
        cokernel_torsion(&a_minus_i)
            .expect("2x2 matrix is square")
            .with_free_rank(1)
    }

    /// Neumann–Wahl hypersurface cover: the trace `t` of the monodromy and
    /// the dual of the one-vertex cycle `(t)`, i.e. `(3, 2^{t−3})`.
    pub fn lci_discriminant_cover(&self) -> Result<LciCover> {
        let trace = self.monodromy().trace();
        if trace < BigInt::from(3) {
            return Err(Error::TraceTooSmall(trace.to_string()));
        }
        let t = match trace.to_u64() {
            Some(t) if t - 2 <= MAX_COVER_LENGTH => t,
            _ => return Err(Error::CoverTooLarge((trace - 2u32).to_string())),
        };
        let cover = CuspCycle::new(vec![t])?.dual();
        Ok(LciCover { trace: t, cover })
    }
}

impl PartialEq for CuspCycle {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && canonical_entries(&self.entries) == canonical_entries(&other.entries)
    }
}

impl Eq for CuspCycle {}

impl Hash for CuspCycle {
    fn hash<H: Hasher>(&self, state: &mut H) {
        canonical_entries(&self.entries).hash(state);
    }
}

impl fmt::Display for CuspCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for CuspCycle {
    type Err = Error;

    /// Comma-separated magnitudes, e.g. `6,2,2,3,3,2,2,4`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidCycle(format!("cannot parse entry {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CuspCycle::new(entries)
    }
}

/// Run-length decomposition of a cycle into blocks `(m, n)`: one entry
/// `m ≥ 3` followed by `n` twos.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForm {
    pub blocks: Vec<(u64, u64)>,
}

impl BlockForm {
    pub fn expand(&self) -> CuspCycle {
        let mut entries = Vec::new();
        for &(m, n) in &self.blocks {
            entries.push(m);
            entries.extend(std::iter::repeat_n(2, n as usize));
        }
        CuspCycle { entries }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LciCover {
    pub trace: u64,
    pub cover: CuspCycle,
}

/// Every canonical cusp cycle with `Σ e_i ≤ max_sum`, ordered by entry sum
/// and then lexicographically.
pub fn enumerate_cycles(max_sum: u64) -> Vec<CuspCycle> {
    let mut out = Vec::new();
    for total in 3..=max_sum {
        let mut current = Vec::new();
        compositions(total, &mut current, &mut |c| {
            if c.iter().any(|&e| e >= 3) && canonical_entries(c) == c {
                out.push(CuspCycle { entries: c.to_vec() });
            }
        });
    }
    out
}

fn compositions(remaining: u64, current: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    if remaining == 0 {
        visit(current);
        return;
    }
    for part in 2..=remaining {
        current.push(part);
        compositions(remaining - part, current, visit);
        current.pop();
    }
}

fn canonical_entries(entries: &[u64]) -> Vec<u64> {
    let forward = least_rotation(entries);
    let reversed: Vec<u64> = entries.iter().rev().copied().collect();
    let backward = least_rotation(&reversed);
    forward.min(backward)
}

/// Lexicographically least rotation (Booth's algorithm, linear time).
fn least_rotation(s: &[u64]) -> Vec<u64> {
    let n = s.len();
    let at = |i: usize| s[i % n];
    let mut failure = vec![-1i64; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = failure[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = failure[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    (0..n).map(|i| at(k + i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(v: &[u64]) -> CuspCycle {
        CuspCycle::new(v.to_vec()).unwrap()
    }

    fn twos(n: usize) -> impl Iterator<Item = u64> {
        std::iter::repeat_n(2, n)
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(cyc(&[2, 10]).canonicalize().entries(), &[2, 10]);
        assert_eq!(cyc(&[10, 2]).canonicalize().entries(), &[2, 10]);
        assert_eq!(cyc(&[5, 2, 4, 2, 2]).canonicalize().entries(), &[2, 2, 4, 2, 5]);
    }

    #[test]
    fn invalid_cycles() {
        for bad in [vec![], vec![2], vec![2, 2, 2], vec![1, 3], vec![0]] {
            let err = CuspCycle::new(bad).unwrap_err();
            assert_eq!(err.code(), "InvalidCycle");
        }
        assert!("2,x".parse::<CuspCycle>().is_err());
    }

    #[test]
    fn monodromy_examples() {
        assert_eq!(cyc(&[3]).monodromy(), Mat2::new(0, -1, 1, 3));
        assert_eq!(cyc(&[6, 2, 2, 3, 3, 2, 2, 4]).monodromy(), Mat2::new(-40, -211, 131, 691));
        assert_eq!(cyc(&[2, 10]).monodromy(), Mat2::new(-1, -2, 10, 19));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(cyc(&[2, 4, 2, 2, 5]).dual(), cyc(&[2, 4, 2, 2, 5]));
        let long: Vec<u64> = std::iter::once(4).chain(twos(7)).collect();
        assert_eq!(cyc(&[2, 10]).dual(), cyc(&long));
        assert_eq!(cyc(&long).dual(), cyc(&[2, 10]));
        assert_eq!(cyc(&[3]).dual().entries(), &[3]);
    }

    #[test]
    fn complete_intersection_examples() {
        let long: Vec<u64> = std::iter::once(4).chain(twos(7)).collect();
        assert!(cyc(&long).is_complete_intersection());
        assert!(!cyc(&[2, 4, 2, 2, 5]).is_complete_intersection());
        assert!(!cyc(&[2, 10]).is_complete_intersection());
    }

    #[test]
    fn link_homology_examples() {
        assert!(cyc(&[3]).link_homology().is_torsion_trivial());
        let h = cyc(&[2, 10]).link_homology();
        assert_eq!(h.divisors(), &[BigInt::from(2), BigInt::from(8)]);
        assert_eq!(h.free_rank(), 1);
        let h = cyc(&[6, 2, 2, 3, 3, 2, 2, 4]).link_homology();
        assert_eq!(h.torsion_order(), BigInt::from(649));
    }

    #[test]
    fn lci_cover_examples() {
        let lc = cyc(&[6, 2, 2, 3, 3, 2, 2, 4]).lci_discriminant_cover().unwrap();
        assert_eq!(lc.trace, 651);
        let expected: Vec<u64> = std::iter::once(3).chain(twos(648)).collect();
        assert_eq!(lc.cover, cyc(&expected));
        assert_eq!(lc.cover.len(), 649);

        let lc = cyc(&[3]).lci_discriminant_cover().unwrap();
        assert_eq!((lc.trace, lc.cover.entries().to_vec()), (3, vec![3]));

        let lc = cyc(&[2, 10]).lci_discriminant_cover().unwrap();
        assert_eq!(lc.trace, 18);
        let expected: Vec<u64> = std::iter::once(3).chain(twos(15)).collect();
        assert_eq!(lc.cover, cyc(&expected));
        assert!(lc.cover.is_complete_intersection());
    }

    #[test]
    fn oversized_cover_is_refused() {
        let err = cyc(&[20_000_000]).lci_discriminant_cover().unwrap_err();
        assert_eq!(err.code(), "CoverTooLarge");
    }

    #[test]
    fn block_form_round_trip() {
        let c = cyc(&[2, 5, 2, 3, 2, 2]);
        let b = c.block_form();
        assert_eq!(b.blocks, vec![(5, 1), (3, 3)]);
        assert_eq!(b.expand(), c);
    }

    // Brute force over all 2k rotations/reflections.
    fn canonical_oracle(v: &[u64]) -> Vec<u64> {
        let k = v.len();
        let rev: Vec<u64> = v.iter().rev().copied().collect();
        let mut best: Option<Vec<u64>> = None;
        for s in [v.to_vec(), rev] {
            for i in 0..k {
                let r: Vec<u64> = (0..k).map(|j| s[(i + j) % k]).collect();
                if best.as_ref().is_none_or(|b| r < *b) {
                    best = Some(r);
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn enumeration_is_canonical_and_distinct() {
        let all = enumerate_cycles(12);
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        for c in &all {
            assert_eq!(canonical_oracle(c.entries()), c.entries());
        }
    }

    proptest! {
        #[test]
        fn booth_matches_brute_force(v in prop::collection::vec(2u64..6, 1..14)) {
            prop_assert_eq!(canonical_entries(&v), canonical_oracle(&v));
        }

        #[test]
        fn canonicalize_is_idempotent(v in prop::collection::vec(2u64..8, 1..12)) {
            prop_assume!(v.iter().any(|&e| e >= 3));
            let c = CuspCycle::new(v).unwrap().canonicalize();
            let canon = c.canonicalize();
            prop_assert_eq!(canon.entries(), c.entries());
        }
    }
}
