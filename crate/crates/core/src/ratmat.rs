//! Exact rational matrices and canonical subspaces.
//!
//! Subspaces of `Q^n` are stored as reduced row echelon forms, so equality
//! of subspaces is equality of matrices and hashing is canonical. Rank
//! computations have three routes: rational rref (canonical form),
//! fraction-free Bareiss elimination over the integers (exact, no rational
//! overhead), and a mod-p path that certifies full rank exactly (a
//! nonvanishing minor mod p is nonzero over Q; a short rank mod p only
//! falls back to Bareiss).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::intmat::IntMat;
use crate::{Int, Rat};

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl core::ops::Index<(usize, usize)> for QMat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int(m: &IntMat) -> Self {
        let mut out = QMat::zero(m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                out[(r, c)] = Rat::from(m[(r, c)].clone());
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Rat> {
        self.row(r).to_vec()
    }

    pub fn transpose(&self) -> QMat {
        let mut out = QMat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let t = a * &other[(k, c)];
                    out[(r, c)] += t;
                }
            }
        }
        out
    }

    pub fn mul_row(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Rat::zero(); self.cols];
        for (r, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for c in 0..self.cols {
                out[c] += coeff * &self[(r, c)];
            }
        }
        out
    }

    pub fn stack(top: &QMat, bottom: &QMat) -> QMat {
        assert_eq!(top.cols, bottom.cols);
        let mut data = top.data.clone();
        data.extend_from_slice(&bottom.data);
        QMat { rows: top.rows + bottom.rows, cols: top.cols, data }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for pc in 0..self.cols {
            if pr >= self.rows {
                break;
            }
            let Some(row) = (pr..self.rows).find(|&r| !self[(r, pc)].is_zero()) else {
                continue;
            };
            self.swap_rows(pr, row);
            let inv = self[(pr, pc)].clone();
            for c in pc..self.cols {
                let t = &self[(pr, c)] / &inv;
                self[(pr, c)] = t;
            }
            for r in 0..self.rows {
                if r == pr || self[(r, pc)].is_zero() {
                    continue;
                }
                let f = self[(r, pc)].clone();
                for c in pc..self.cols {
                    let t = &f * &self[(pr, c)];
                    self[(r, c)] -= t;
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// A subspace of `Q^n` in canonical form: rref basis, no zero rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalSubspace {
    ambient: usize,
    rref: QMat,
    pivots: Vec<usize>,
}

impl RationalSubspace {
    pub fn zero(ambient: usize) -> Self {
        RationalSubspace { ambient, rref: QMat::zero(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        RationalSubspace {
            ambient,
            rref: QMat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "ambient dimension mismatch");
        }
        if vectors.is_empty() {
            return RationalSubspace::zero(ambient);
        }
        let mut m = QMat::from_rows(vectors.to_vec());
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        let rows: Vec<Vec<Rat>> = (0..rank).map(|r| m.row_vec(r)).collect();
        let rref = if rows.is_empty() { QMat::zero(0, ambient) } else { QMat::from_rows(rows) };
        RationalSubspace { ambient, rref, pivots }
    }

    pub fn span_int(ambient: usize, vectors: &[Vec<Int>]) -> Self {
        let vs: Vec<Vec<Rat>> = vectors
            .iter()
            .map(|v| v.iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        RationalSubspace::span(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rref.rows()
    }

    pub fn rref(&self) -> &QMat {
        &self.rref
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rref.rows()).map(|r| self.rref.row_vec(r)).collect()
    }

    /// Reduce `v` against the rref basis; the remainder is the canonical
    /// coset representative of `v` modulo this subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        let mut rem = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            if rem[pc].is_zero() {
                continue;
            }
            let f = rem[pc].clone();
            for c in 0..self.ambient {
                let t = &f * &self.rref[(r, c)];
                rem[c] -= t;
            }
        }
        rem
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &RationalSubspace) -> bool {
        other.basis_rows().iter().all(|r| self.contains_vec(r))
    }

    pub fn sum(&self, other: &RationalSubspace) -> RationalSubspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        RationalSubspace::span(self.ambient, &rows)
    }

    /// Intersection via the kernel of the stacked basis relation.
    pub fn intersect(&self, other: &RationalSubspace) -> RationalSubspace {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return RationalSubspace::zero(self.ambient);
        }
        // rows x·A = y·B ⇔ (x, −y) in kernel of [Aᵀ | Bᵀ]ᵀ... solve via
        // kernel of the stacked transpose: vectors (x,y) with x·A − y·B = 0.
        let a = &self.rref;
        let b = &other.rref;
        let stacked = QMat::stack(a, b); // (da+db) × n
        let ker = kernel_of_rows(&stacked);
        // each kernel row (x | y) gives the intersection vector x·A
        let da = a.rows();
        let vecs: Vec<Vec<Rat>> = ker
            .iter()
            .map(|xy| a.mul_row(&xy[..da]))
            .collect();
        RationalSubspace::span(self.ambient, &vecs)
    }
}

/// Basis of `{x : x · m = 0}` (left kernel), as raw rows.
pub fn kernel_of_rows(m: &QMat) -> Vec<Vec<Rat>> {
    // rref of mᵀ with an identity tail: classic [mᵀ | I] trick transposed.
    // Work with m itself: find all row-combinations that vanish.
    let rows = m.rows();
    let mut aug = QMat::zero(rows, m.cols() + rows);
    for r in 0..rows {
        for c in 0..m.cols() {
            aug[(r, c)] = m[(r, c)].clone();
        }
        aug[(r, m.cols() + r)] = Rat::one();
    }
    aug.rref_in_place();
    let mut out = Vec::new();
    for r in 0..rows {
        let lead_zero = (0..m.cols()).all(|c| aug[(r, c)].is_zero());
        if lead_zero {
            let tail: Vec<Rat> = (0..rows).map(|c| aug[(r, m.cols() + c)].clone()).collect();
            if tail.iter().any(|x| !x.is_zero()) {
                out.push(tail);
            }
        }
    }
    out
}

/// Exact rank by fraction-free Bareiss elimination over the integers.
pub fn rank_bareiss(m: &IntMat) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<Int>> = (0..rows).map(|r| m.row_vec(r)).collect();
    let mut prev = Int::one();
    let mut rank = 0usize;
    let mut pr = 0usize;
    for pc in 0..cols {
        if pr >= rows {
            break;
        }
        let Some(pivot_row) = (pr..rows).find(|&r| !a[r][pc].is_zero()) else { continue };
        a.swap(pr, pivot_row);
        for r in pr + 1..rows {
            for c in pc + 1..cols {
                let t = &a[pr][pc] * &a[r][c] - &a[r][pc] * &a[pr][c];
                a[r][c] = &t / &prev;
            }
            a[r][pc] = Int::zero();
        }
        prev = a[pr][pc].clone();
        rank += 1;
        pr += 1;
    }
    rank
}

const RANK_PRIME: u64 = (1 << 61) - 1;

fn mod_reduce(x: &Int) -> u64 {
    use num_integer::Integer;
    let p = Int::from(RANK_PRIME);
    let m = x.mod_floor(&p);
    let (_, digits) = m.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => unreachable!("reduced below 2^61"),
    }
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % RANK_PRIME as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b);
        }
        b = mul_mod(b, b);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, RANK_PRIME - 2)
}

/// Rank of the reduction mod a fixed 61-bit prime. Always a lower bound
/// for the rank over `Q`.
pub fn rank_mod_p(m: &IntMat) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..rows)
        .map(|r| m.row(r).iter().map(mod_reduce).collect())
        .collect();
    let mut rank = 0usize;
    let mut pr = 0usize;
    for pc in 0..cols {
        if pr >= rows {
            break;
        }
        let Some(pivot_row) = (pr..rows).find(|&r| a[r][pc] != 0) else { continue };
        a.swap(pr, pivot_row);
        let inv = inv_mod(a[pr][pc]);
        for r in pr + 1..rows {
            if a[r][pc] == 0 {
                continue;
            }
            let f = mul_mod(a[r][pc], inv);
            for c in pc..cols {
                let t = mul_mod(f, a[pr][c]);
                a[r][c] = (a[r][c] + RANK_PRIME - t) % RANK_PRIME;
            }
        }
        rank += 1;
        pr += 1;
    }
    rank
}

/// Exact rank with a fast path: the mod-p rank certifies full rank (a
/// nonzero minor mod p is nonzero over Q); anything short of full falls
/// back to exact Bareiss elimination.
pub fn rank_exact(m: &IntMat) -> usize {
    let full = core::cmp::min(m.rows(), m.cols());
    let rp = rank_mod_p(m);
    if rp == full {
        return full;
    }
    rank_bareiss(m)
}

/// Clear denominators row by row, producing an integer matrix with the
/// same row span.
pub fn clear_denominators(m: &QMat) -> IntMat {
    use num_integer::Integer;
    let mut rows = Vec::new();
    for r in 0..m.rows() {
        let mut lcm = Int::one();
        for c in 0..m.cols() {
            lcm = lcm.lcm(m[(r, c)].denom());
        }
        let row: Vec<Int> = (0..m.cols())
            .map(|c| {
                let v = &m[(r, c)];
                v.numer() * (&lcm / v.denom())
            })
            .collect();
        rows.push(row);
    }
    if rows.is_empty() {
        IntMat::zero(0, m.cols())
    } else {
        IntMat::from_rows(rows)
    }
}

pub fn rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from(x.clone())).collect()
}

pub fn add_assign_scaled(dst: &mut [Rat], src: &[Rat], c: &Rat) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += c * s;
    }
}

pub fn is_zero_rvec(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from(Int::from(x))).collect()
    }

    #[test]
    fn rref_canonical() {
        let s1 = RationalSubspace::span(3, &[rv(&[2, 4, 0]), rv(&[1, 2, 1])]);
        let s2 = RationalSubspace::span(3, &[rv(&[1, 2, 0]), rv(&[0, 0, 7]), rv(&[3, 6, 7])]);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
    }

    #[test]
    fn reduce_is_idempotent_and_linear() {
        let s = RationalSubspace::span(3, &[rv(&[1, 1, 0])]);
        let v = rv(&[3, 1, 2]);
        let r = s.reduce(&v);
        assert_eq!(s.reduce(&r), r);
        // v − reduce(v) lies in s
        let diff: Vec<Rat> = v.iter().zip(&r).map(|(a, b)| a - b).collect();
        assert!(s.contains_vec(&diff));
    }

    #[test]
    fn sum_and_intersection_dims() {
        // two transverse planes in Q^3 meet in a line
        let a = RationalSubspace::span(3, &[rv(&[1, 0, 0]), rv(&[0, 1, 0])]);
        let b = RationalSubspace::span(3, &[rv(&[0, 1, 0]), rv(&[0, 0, 1])]);
        assert_eq!(a.sum(&b).dim(), 3);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains_vec(&rv(&[0, 5, 0])));
    }

    #[test]
    fn rank_paths_agree() {
        let m = IntMat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank_bareiss(&m), 2);
        assert_eq!(rank_mod_p(&m), 2);
        assert_eq!(rank_exact(&m), 2);
        let id = IntMat::identity(5);
        assert_eq!(rank_exact(&id), 5);
    }

    #[test]
    fn clear_denominators_preserves_span() {
        let m = QMat::from_rows(vec![vec![rat(1, 2), rat(3, 4)], vec![rat(0, 1), rat(5, 3)]]);
        let im = clear_denominators(&m);
        assert_eq!(im[(0, 0)], int(2));
        assert_eq!(im[(0, 1)], int(3));
        assert_eq!(im[(1, 1)], int(5));
    }
}
