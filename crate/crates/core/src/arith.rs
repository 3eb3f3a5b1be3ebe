//! Exact integer linear algebra: 2×2 matrices, rectangular integer
//! matrices, Smith normal form and finitely generated abelian groups.
//!
//! Everything is arbitrary precision. Monodromy products of a dozen
//! factors already leave the 64-bit range for moderately large weights.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A 2×2 integer matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Mat2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    /// The elementary factor `[[0, -1], [1, e]]`.
    pub fn elementary(e: impl Into<BigInt>) -> Self {
        Mat2::new(0, -1, 1, e)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn minus_identity(&self) -> Mat2 {
        Mat2 {
            a: &self.a - 1,
            b: self.b.clone(),
            c: self.c.clone(),
            d: &self.d - 1,
        }
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix {
            rows: 2,
            cols: 2,
            entries: vec![self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()],
        }
    }

    pub fn rows(&self) -> [[BigInt; 2]; 2] {
        [[self.a.clone(), self.b.clone()], [self.c.clone(), self.d.clone()]]
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Left-to-right product of the factors exactly as listed.
///
/// Returns `None` for an empty list.
pub fn mat2_chain(factors: &[Mat2]) -> Option<Mat2> {
    let (first, rest) = factors.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, m| acc.mul(m)))
}

/// Dense row-major integer matrix with at least one row and one column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let nrows = rows.len();
        if nrows == 0 {
            return Err(Error::InvalidMatrix("matrix has no rows".into()));
        }
        let ncols = rows[0].len();
        if ncols == 0 {
            return Err(Error::InvalidMatrix("matrix has no columns".into()));
        }
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: nrows, cols: ncols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        Ok(IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.entries[i * self.cols + j] = v.into();
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::InvalidMatrix("determinant of a non-square matrix".into()));
        }
        Ok(self.leading_minors().pop().expect("nonempty matrix"))
    }

    /// Leading principal minors `Δ_1, …, Δ_n` of a square matrix.
    pub fn leading_minors(&self) -> Vec<BigInt> {
        assert!(self.is_square(), "leading minors need a square matrix");
        let n = self.rows;
        let mut out = Vec::with_capacity(n);
        for k in 1..=n {
            out.push(bareiss_det(&self.block(k)));
        }
        out
    }

    fn block(&self, k: usize) -> Vec<Vec<BigInt>> {
        (0..k).map(|i| self.row(i)[..k].to_vec()).collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Determinant via Bareiss elimination with row pivoting.
fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Finitely generated abelian group `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_s` with
/// `2 ≤ d₁ | d₂ | … | d_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbGroup {
    free_rank: usize,
    divisors: Vec<BigInt>,
}

impl AbGroup {
    pub fn new(free_rank: usize, divisors: Vec<BigInt>) -> Result<Self> {
        for d in &divisors {
            if *d < BigInt::from(2) {
                return Err(Error::InvalidMatrix(format!("torsion coefficient {d} is below 2")));
            }
        }
        for w in divisors.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(Error::InvalidMatrix(format!("{} does not divide {}", w[0], w[1])));
            }
        }
        Ok(AbGroup { free_rank, divisors })
    }

    pub fn trivial() -> Self {
        AbGroup { free_rank: 0, divisors: Vec::new() }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn torsion_order(&self) -> BigInt {
        self.divisors.iter().product()
    }

    pub fn is_torsion_trivial(&self) -> bool {
        self.divisors.is_empty()
    }

    /// Same torsion with a different free rank.
    pub fn with_free_rank(mut self, free_rank: usize) -> Self {
        self.free_rank = free_rank;
        self
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.divisors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Diagonal of the Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries, positive, in divisibility order.
    pub divisors: Vec<BigInt>,
    pub rank: usize,
}

/// Smith normal form by elementary row and column operations, pivoting on
/// the entry of least absolute value. The input is left untouched.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut a = m.to_rows();
    let mut divisors = Vec::new();

    for t in 0..rows.min(cols) {
        'pivot: loop {
            let Some((pi, pj)) = min_abs_entry(&a, t) else {
                break;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &a[i][t] * &q;
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue 'pivot;
            }

            // Pivot must divide the remaining block.
            let p = a[t][t].clone();
            for i in t + 1..rows {
                if (t + 1..cols).any(|j| !(&a[i][j] % &p).is_zero()) {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                    continue 'pivot;
                }
            }
            break;
        }
        if a[t][t].is_zero() {
            break;
        }
        divisors.push(a[t][t].abs());
    }

    SmithForm { rank: divisors.len(), divisors }
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Cokernel of a square integer matrix as an abelian group.
///
/// Unit divisors are dropped; the free rank is `size − rank`.
pub fn cokernel_torsion(m: &IntMatrix) -> Result<AbGroup> {
    if !m.is_square() {
        return Err(Error::InvalidMatrix("cokernel_torsion needs a square matrix".into()));
    }
    let snf = smith_normal_form(m);
    let divisors = snf.divisors.into_iter().filter(|d| !d.is_one()).collect();
    AbGroup::new(m.nrows() - snf.rank, divisors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        let id = IntMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(smith_normal_form(&id), SmithForm { divisors: big(&[1, 1]), rank: 2 });

        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]).unwrap();
        assert_eq!(smith_normal_form(&m), SmithForm { divisors: big(&[2, 4]), rank: 2 });

        let m = IntMatrix::from_rows(&[vec![-1, -1], vec![1, 2]]).unwrap();
        assert_eq!(smith_normal_form(&m).divisors, big(&[1, 1]));
    }

    #[test]
    fn snf_does_not_mutate_input() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]).unwrap();
        let copy = m.clone();
        let _ = smith_normal_form(&m);
        assert_eq!(m, copy);
    }

    #[test]
    fn cokernel_examples() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]).unwrap();
        let g = cokernel_torsion(&m).unwrap();
        assert_eq!(g.divisors(), big(&[2, 2]).as_slice());
        assert_eq!(g.free_rank(), 0);

        let m = IntMatrix::from_rows(&[vec![-2, -2], vec![10, 18]]).unwrap();
        let g = cokernel_torsion(&m).unwrap();
        assert_eq!(g.divisors(), big(&[2, 8]).as_slice());
        assert_eq!(g.torsion_order(), BigInt::from(16));

        let m = IntMatrix::from_rows(&[vec![0, 0], vec![0, 0]]).unwrap();
        let g = cokernel_torsion(&m).unwrap();
        assert_eq!(g.free_rank(), 2);
        assert!(g.is_torsion_trivial());
    }

    #[test]
    fn cokernel_rejects_rectangular() {
        let m = IntMatrix::from_rows(&[vec![1, 2, 3]]).unwrap();
        assert!(cokernel_torsion(&m).is_err());
    }

    #[test]
    fn empty_and_ragged_rejected() {
        assert!(IntMatrix::from_rows::<i64>(&[]).is_err());
        assert!(IntMatrix::from_rows(&[Vec::<i64>::new()]).is_err());
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn chain_examples() {
        assert_eq!(mat2_chain(&[Mat2::identity()]), Some(Mat2::identity()));
        assert_eq!(mat2_chain(&[]), None);
        let p = mat2_chain(&[Mat2::elementary(10), Mat2::elementary(2)]).unwrap();
        assert_eq!(p, Mat2::new(-1, -2, 10, 19));
        let factors: Vec<Mat2> = [4, 2, 2, 3, 3, 2, 2, 6].iter().map(|&e| Mat2::elementary(e)).collect();
        assert_eq!(mat2_chain(&factors).unwrap(), Mat2::new(-40, -211, 131, 691));
    }

    #[test]
    fn det_and_minors() {
        let m = IntMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]).unwrap();
        assert_eq!(m.leading_minors(), big(&[-2, 3]));
        let m = IntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]]).unwrap();
        assert_eq!(m.det().unwrap(), BigInt::from(-5));
    }

    #[test]
    fn abgroup_rejects_broken_chain() {
        assert!(AbGroup::new(0, big(&[2, 3])).is_err());
        assert!(AbGroup::new(0, big(&[1])).is_err());
        assert_eq!(AbGroup::new(1, big(&[2, 8])).unwrap().to_string(), "Z + Z/2 + Z/8");
    }

    // Cofactor expansion, kept independent of the elimination code.
    fn det_oracle(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 1 {
            return BigInt::from(m[0][0]);
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let term = BigInt::from(m[0][j]) * det_oracle(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn matrix_strategy(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-50i64..=50, c), r)
        })
    }

    proptest! {
        #[test]
        fn snf_divisibility_chain(rows in matrix_strategy(8)) {
            let m = IntMatrix::from_rows(&rows).unwrap();
            let snf = smith_normal_form(&m);
            for d in &snf.divisors {
                prop_assert!(d.is_positive());
            }
            for w in snf.divisors.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
            prop_assert!(snf.rank <= rows.len().min(rows[0].len()));
        }

        #[test]
        fn snf_product_is_abs_det(n in 1usize..=5, seed in prop::collection::vec(-50i64..=50, 25)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
            let m = IntMatrix::from_rows(&rows).unwrap();
            let det = det_oracle(&rows);
            prop_assert_eq!(m.det().unwrap(), det.clone());
            let snf = smith_normal_form(&m);
            if !det.is_zero() {
                prop_assert_eq!(snf.rank, n);
                prop_assert_eq!(snf.divisors.iter().product::<BigInt>(), det.abs());
            } else {
                prop_assert!(snf.rank < n);
            }
        }

        #[test]
        fn chain_is_associative(es in prop::collection::vec(-20i64..=20, 2..12), split in 1usize..11) {
            let ms: Vec<Mat2> = es.iter().map(|&e| Mat2::elementary(e)).collect();
            let split = split.min(ms.len() - 1);
            let whole = mat2_chain(&ms).unwrap();
            let left = mat2_chain(&ms[..split]).unwrap();
            let right = mat2_chain(&ms[split..]).unwrap();
            prop_assert_eq!(whole.clone(), left.mul(&right));
            prop_assert!(whole.det().abs().is_one());
        }
    }
}
