//! The finite group `G ⊂ GL₄` acting on `k[x₁, y₁, x₂, y₂]` and its
//! invariants in degree-6 polynomials and in `Λ²` of the standard
//! representation.
//!
//! Every element of `G` is a monomial matrix whose entries are sixth roots
//! of unity, stored as a permutation plus exponents of `ζ` mod 6. Fixed
//! subspaces are computed exactly over `ℚ(ζ₆)` by applying the Reynolds
//! operator to a basis and row-reducing.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::cyclotomic::Cyclo6;

pub const VARIABLES: [&str; 4] = ["x1", "y1", "x2", "y2"];

/// `x_i ↦ ζ^{exps[i]} x_{perm[i]}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    pub perm: [usize; 4],
    pub exps: [u8; 4],
}

impl MonomialMap {
    pub fn identity() -> Self {
        MonomialMap { perm: [0, 1, 2, 3], exps: [0; 4] }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MonomialMap) -> MonomialMap {
        let mut perm = [0; 4];
        let mut exps = [0; 4];
        for i in 0..4 {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            exps[i] = (other.exps[i] + self.exps[j]) % 6;
        }
        MonomialMap { perm, exps }
    }

    /// Image of the monomial with exponent vector `m`: a scalar `ζ^s` and a
    /// new exponent vector.
    pub fn act_on_monomial(&self, m: &[u32; 4]) -> (i64, [u32; 4]) {
        let mut out = [0; 4];
        let mut s = 0i64;
        for i in 0..4 {
            out[self.perm[i]] = m[i];
            s += self.exps[i] as i64 * m[i] as i64;
        }
        (s.rem_euclid(6), out)
    }

    /// Image of `e_i ∧ e_j` (`i < j`): scalar `±ζ^s` and the sorted pair.
    pub fn act_on_wedge(&self, i: usize, j: usize) -> (Cyclo6, (usize, usize)) {
        let s = self.exps[i] as i64 + self.exps[j] as i64;
        let (pi, pj) = (self.perm[i], self.perm[j]);
        let c = Cyclo6::zeta_pow(s);
        if pi < pj {
            (c, (pi, pj))
        } else {
            (-&c, (pj, pi))
        }
    }
}

/// A finite group generated by monomial maps.
#[derive(Clone, Debug)]
pub struct GroupAction {
    pub generators: Vec<MonomialMap>,
    elements: Vec<MonomialMap>,
}

impl GroupAction {
    pub fn generated_by(generators: Vec<MonomialMap>) -> Self {
        let mut seen: HashSet<MonomialMap> = HashSet::new();
        let mut elements = Vec::new();
        let mut queue = VecDeque::from([MonomialMap::identity()]);
        seen.insert(MonomialMap::identity());
        while let Some(g) = queue.pop_front() {
            elements.push(g);
            for s in &generators {
                let h = s.compose(&g);
                if seen.insert(h) {
                    queue.push_back(h);
                }
            }
        }
        GroupAction { generators, elements }
    }

    /// `(ζx₁, ζ⁻¹y₁, x₂, y₂)`, `(x₁, y₁, ζx₂, ζ⁻¹y₂)` and the swap
    /// `(x₂, y₂, x₁, y₁)`.
    pub fn sextic_symmetry() -> Self {
        let [t1, t2, swap] = Self::sextic_generators();
        GroupAction::generated_by(vec![t1, t2, swap])
    }

    /// The subgroup generated by the two diagonal twists only.
    pub fn diagonal_twists() -> Self {
        let [t1, t2, _] = Self::sextic_generators();
        GroupAction::generated_by(vec![t1, t2])
    }

    fn sextic_generators() -> [MonomialMap; 3] {
        [
            MonomialMap { perm: [0, 1, 2, 3], exps: [1, 5, 0, 0] },
            MonomialMap { perm: [0, 1, 2, 3], exps: [0, 0, 1, 5] },
            MonomialMap { perm: [2, 3, 0, 1], exps: [0; 4] },
        ]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[MonomialMap] {
        &self.elements
    }

    fn average_factor(&self) -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(self.order() as i64))
    }
}

/// Sparse polynomial in `x₁, y₁, x₂, y₂` over `ℚ(ζ₆)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    pub terms: BTreeMap<[u32; 4], Cyclo6>,
}

impl Polynomial {
    pub fn monomial(exps: [u32; 4]) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(exps, Cyclo6::one());
        Polynomial { terms }
    }

    fn add_term(&mut self, exps: [u32; 4], c: &Cyclo6) {
        let entry = self.terms.entry(exps).or_insert_with(Cyclo6::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn scale(&self, c: &Cyclo6) -> Polynomial {
        let mut out = Polynomial::default();
        for (e, x) in &self.terms {
            out.add_term(*e, &(x * c));
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        (0..n).fold(Polynomial::monomial([0; 4]), |acc, _| acc.mul(self))
    }

    pub fn apply(&self, g: &MonomialMap) -> Polynomial {
        let mut out = Polynomial::default();
        for (e, c) in &self.terms {
            let (s, image) = g.act_on_monomial(e);
            out.add_term(image, &(c * &Cyclo6::zeta_pow(s)));
        }
        out
    }

    pub fn is_invariant(&self, group: &GroupAction) -> bool {
        group.elements().iter().all(|g| self.apply(g) == *self)
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .zip(VARIABLES)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, v)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
                .collect();
            let mono = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
            let coeff = if c.is_one() {
                String::new()
            } else if c.is_zero() {
                continue;
            } else {
                format!("{c}*")
            };
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}{mono}")?;
            first = false;
        }
        Ok(())
    }
}

/// `x₁y₁ + x₂y₂` and `x₁y₁ − x₂y₂`.
pub fn q_plus_minus() -> (Polynomial, Polynomial) {
    let p = Polynomial::monomial([1, 1, 0, 0]);
    let q = Polynomial::monomial([0, 0, 1, 1]);
    (p.add(&q), p.add(&q.scale(&Cyclo6::from_int(-1))))
}

/// All exponent vectors of degree `deg` in four variables, in decreasing
/// lexicographic order.
pub fn monomials(deg: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in (0..=deg).rev() {
        for b in (0..=deg - a).rev() {
            for c in (0..=deg - a - b).rev() {
                out.push([a, b, c, deg - a - b - c]);
            }
        }
    }
    out
}

/// Reduced row echelon form; returns the nonzero rows.
fn rref(mut rows: Vec<Vec<Cyclo6>>) -> Vec<Vec<Cyclo6>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        rows[rank] = rows[rank].iter().map(|x| x * &inv).collect();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

pub fn rank(rows: Vec<Vec<Cyclo6>>) -> usize {
    rref(rows).len()
}

#[derive(Clone, Debug)]
pub struct InvariantSpace {
    pub dimension: usize,
    /// Reduced row echelon basis, coordinates in the ambient basis.
    pub basis: Vec<Vec<Cyclo6>>,
}

impl InvariantSpace {
    /// Rank of the basis together with `extra` equals the dimension.
    pub fn contains(&self, extra: &[Cyclo6]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(extra.to_vec());
        rref(rows).len() == self.dimension
    }
}

/// Fixed subspace of degree-`deg` polynomials.
pub fn invariant_polynomials(group: &GroupAction, deg: u32) -> (Vec<[u32; 4]>, InvariantSpace) {
    let basis = monomials(deg);
    let index: BTreeMap<[u32; 4], usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let avg = group.average_factor();
    let rows: Vec<Vec<Cyclo6>> = basis
        .iter()
        .map(|m| {
            let mut row = vec![Cyclo6::zero(); basis.len()];
            for g in group.elements() {
                let (s, image) = g.act_on_monomial(m);
                let i = index[&image];
                row[i] = &row[i] + &Cyclo6::zeta_pow(s);
            }
            row.iter().map(|x| x.scale(&avg)).collect()
        })
        .collect();
    let reduced = rref(rows);
    (basis, InvariantSpace { dimension: reduced.len(), basis: reduced })
}

pub fn polynomial_coordinates(basis: &[[u32; 4]], p: &Polynomial) -> Vec<Cyclo6> {
    basis
        .iter()
        .map(|m| p.terms.get(m).cloned().unwrap_or_else(Cyclo6::zero))
        .collect()
}

pub fn polynomial_from_coordinates(basis: &[[u32; 4]], coords: &[Cyclo6]) -> Polynomial {
    let mut p = Polynomial::default();
    for (m, c) in basis.iter().zip(coords) {
        p.add_term(*m, c);
    }
    p
}

/// Pairs `(i, j)`, `i < j`, indexing `e_i ∧ e_j`.
pub fn wedge_basis() -> Vec<(usize, usize)> {
    (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect()
}

/// Fixed subspace of `Λ²` of the standard representation.
pub fn invariant_wedges(group: &GroupAction) -> (Vec<(usize, usize)>, InvariantSpace) {
    let basis = wedge_basis();
    let avg = group.average_factor();
    let rows: Vec<Vec<Cyclo6>> = basis
        .iter()
        .map(|&(i, j)| {
            let mut row = vec![Cyclo6::zero(); basis.len()];
            for g in group.elements() {
                let (c, image) = g.act_on_wedge(i, j);
                let k = basis.iter().position(|&b| b == image).expect("sorted pair");
                row[k] = &row[k] + &c;
            }
            row.iter().map(|x| x.scale(&avg)).collect()
        })
        .collect();
    let reduced = rref(rows);
    (basis, InvariantSpace { dimension: reduced.len(), basis: reduced })
}

pub fn format_wedge(basis: &[(usize, usize)], coords: &[Cyclo6]) -> String {
    let terms: Vec<String> = basis
        .iter()
        .zip(coords)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&(i, j), c)| {
            let w = format!("e{}^e{}", i + 1, j + 1);
            if c.is_one() {
                w
            } else {
                format!("{c}*{w}")
            }
        })
        .collect();
    terms.join(" + ")
}
