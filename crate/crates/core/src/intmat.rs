//! Dense integer matrices with the normal forms needed for exact lattice
//! arithmetic: row Hermite normal form (with optional unimodular
//! transform), Smith normal form, kernels, and integer linear solving.
//!
//! Everything is arbitrary precision; intermediate entry growth in the
//! normal-form computations is absorbed by `BigInt`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Int;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl core::ops::Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (r, c): (usize, usize)) -> &Int {
        &self.data[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Int {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        IntMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMat::from_rows(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Int> {
        self.row(r).to_vec()
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Int]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> IntMat {
        let mut out = IntMat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMat::zero(self.rows, other.cols);
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

    /// Row vector times matrix.
    pub fn mul_row(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.rows, "dimension mismatch");
        let mut out = vec![Int::zero(); self.cols];
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

    /// Matrix times column vector.
    pub fn mul_col(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn stack(top: &IntMat, bottom: &IntMat) -> IntMat {
        assert_eq!(top.cols, bottom.cols, "column mismatch in stack");
        let mut data = top.data.clone();
        data.extend_from_slice(&bottom.data);
        IntMat { rows: top.rows + bottom.rows, cols: top.cols, data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = core::mem::take(&mut self[(r, c)]);
            self[(r, c)] = -v;
        }
    }

    /// row[dst] += q * row[src]
    fn add_mul_row(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let t = q * &self[(src, c)];
            let idx = dst * self.cols + c;
            self.data[idx] += t;
        }
    }
}

/// Result of a row Hermite normal form computation.
///
/// `h` is the HNF (nonzero rows first, strictly increasing pivot columns,
/// positive pivots, entries above a pivot reduced into `[0, pivot)`).
/// `transform`, when requested, is unimodular with `transform * input = h`.
pub struct Hnf {
    pub h: IntMat,
    pub transform: Option<IntMat>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Row Hermite normal form by integer Gaussian elimination.
pub fn hnf(input: &IntMat, want_transform: bool) -> Hnf {
    let mut h = input.clone();
    let mut u = if want_transform { Some(IntMat::identity(input.rows())) } else { None };
    let (rows, cols) = (h.rows(), h.cols());
    let mut pivots = Vec::new();
    let mut pr = 0usize;
    for pc in 0..cols {
        if pr >= rows {
            break;
        }
        // find a nonzero entry in column pc at or below pr
        let Some(mut pivot_row) = (pr..rows).find(|&r| !h[(r, pc)].is_zero()) else {
            continue;
        };
        // euclidean elimination within the column
        loop {
            // move the row with smallest |entry| to pivot_row
            let mut best = pivot_row;
            for r in pr..rows {
                if !h[(r, pc)].is_zero()
                    && (h[(best, pc)].is_zero() || h[(r, pc)].abs() < h[(best, pc)].abs())
                {
                    best = r;
                }
            }
            pivot_row = best;
            let mut done = true;
            for r in pr..rows {
                if r == pivot_row || h[(r, pc)].is_zero() {
                    continue;
                }
                let q = div_floor_q(&h[(r, pc)], &h[(pivot_row, pc)]);
                let nq = -&q;
                h.add_mul_row(r, pivot_row, &nq);
                if let Some(u) = u.as_mut() {
                    u.add_mul_row(r, pivot_row, &nq);
                }
                if !h[(r, pc)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        h.swap_rows(pr, pivot_row);
        if let Some(u) = u.as_mut() {
            u.swap_rows(pr, pivot_row);
        }
        if h[(pr, pc)].is_negative() {
            h.negate_row(pr);
            if let Some(u) = u.as_mut() {
                u.negate_row(pr);
            }
        }
        // reduce entries above the pivot into [0, pivot)
        for r in 0..pr {
            let q = div_floor_q(&h[(r, pc)], &h[(pr, pc)]);
            let nq = -&q;
            h.add_mul_row(r, pr, &nq);
            if let Some(u) = u.as_mut() {
                u.add_mul_row(r, pr, &nq);
            }
        }
        pivots.push(pc);
        pr += 1;
    }
    Hnf { h, transform: u, rank: pr, pivots }
}

fn div_floor_q(a: &Int, b: &Int) -> Int {
    a.div_floor(b)
}

/// Rank over `Q` of an integer matrix (via HNF).
pub fn rank(m: &IntMat) -> usize {
    hnf(m, false).rank
}

/// Basis (as rows, in HNF) of `{x : m · xᵀ = 0}`, i.e. all integer row
/// vectors orthogonal to the rows of `m` under the dot product.
/// The result is always saturated.
pub fn kernel(m: &IntMat) -> IntMat {
    // left kernel of mᵀ: rows u of U with U mᵀ = H, aligned to zero rows of H
    let t = m.transpose();
    let res = hnf(&t, true);
    let u = res.transform.expect("transform requested");
    let mut rows = Vec::new();
    for r in res.rank..t.rows() {
        rows.push(u.row_vec(r));
    }
    if rows.is_empty() {
        return IntMat::zero(0, m.cols());
    }
    let k = IntMat::from_rows(rows);
    hnf(&k, false).h_trimmed()
}

impl Hnf {
    pub fn h_trimmed(self) -> IntMat {
        let mut rows = Vec::new();
        for r in 0..self.rank {
            rows.push(self.h.row_vec(r));
        }
        if rows.is_empty() {
            IntMat::zero(0, self.h.cols())
        } else {
            IntMat::from_rows(rows)
        }
    }
}

/// Smith normal form data for `input`: there are unimodular `s`, `t` with
/// `s · input · t` diagonal. Only the inverse right transform is tracked;
/// it is what saturation consumes.
pub struct Snf {
    /// Diagonal entries (positive, each dividing the next).
    pub divisors: Vec<Int>,
    pub rank: usize,
    /// `t⁻¹` for the right transform `t`, when requested.
    pub tinv: Option<IntMat>,
}

/// Smith normal form by alternating row/column elimination.
pub fn snf(input: &IntMat, want_tinv: bool) -> Snf {
    let mut a = input.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut tinv = if want_tinv { Some(IntMat::identity(cols)) } else { None };
    let n = core::cmp::min(rows, cols);
    let mut k = 0usize;
    while k < n {
        let mut found = None;
        'search: for r in k..rows {
            for c in k..cols {
                if !a[(r, c)].is_zero() {
                    found = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((mut r0, mut c0)) = found else { break };
        loop {
            // move the smallest entry of the trailing block to (k, k)
            for r in k..rows {
                for c in k..cols {
                    if !a[(r, c)].is_zero() && a[(r, c)].abs() < a[(r0, c0)].abs() {
                        r0 = r;
                        c0 = c;
                    }
                }
            }
            a.swap_rows(k, r0);
            swap_cols(&mut a, k, c0);
            if let Some(ti) = tinv.as_mut() {
                ti.swap_rows(k, c0);
            }
            r0 = k;
            c0 = k;
            let mut clean = true;
            for r in k + 1..rows {
                if a[(r, k)].is_zero() {
                    continue;
                }
                let q = a[(r, k)].div_floor(&a[(k, k)]);
                let nq = -&q;
                a.add_mul_row(r, k, &nq);
                if !a[(r, k)].is_zero() {
                    clean = false;
                }
            }
            for c in k + 1..cols {
                if a[(k, c)].is_zero() {
                    continue;
                }
                let q = a[(k, c)].div_floor(&a[(k, k)]);
                let nq = -&q;
                add_mul_col(&mut a, c, k, &nq);
                if let Some(ti) = tinv.as_mut() {
                    // col[c] += nq * col[k] on `a` means row[k] += q * row[c] on t⁻¹
                    ti.add_mul_row(k, c, &q);
                }
                if !a[(k, c)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // ensure the pivot divides the trailing block
            let mut bad = None;
            'div: for r in k + 1..rows {
                for c in k + 1..cols {
                    if !(&a[(r, c)] % &a[(k, k)]).is_zero() {
                        bad = Some(r);
                        break 'div;
                    }
                }
            }
            if let Some(r) = bad {
                let one = Int::one();
                a.add_mul_row(k, r, &one);
                continue;
            }
            break;
        }
        if a[(k, k)].is_negative() {
            a.negate_row(k);
        }
        k += 1;
    }
    let rank = (0..n).take_while(|&i| !a[(i, i)].is_zero()).count();
    let divisors = (0..rank).map(|i| a[(i, i)].clone()).collect();
    Snf { divisors, rank, tinv }
}

fn swap_cols(m: &mut IntMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for r in 0..m.rows() {
        let ra = r * m.cols() + a;
        let rb = r * m.cols() + b;
        m.data.swap(ra, rb);
    }
}

fn add_mul_col(m: &mut IntMat, dst: usize, src: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    for r in 0..m.rows() {
        let t = q * &m[(r, src)];
        let idx = r * m.cols() + dst;
        m.data[idx] += t;
    }
}

/// Saturation of the row span: the smallest subgroup of `Z^n` containing
/// the row span whose quotient is torsion free. Returned in HNF.
///
/// With `s·m·t` diagonal of rank r, the saturation is spanned by the first
/// r rows of `t⁻¹`.
pub fn saturate_rows(m: &IntMat) -> IntMat {
    if m.rows() == 0 {
        return IntMat::zero(0, m.cols());
    }
    let res = snf(m, true);
    let tinv = res.tinv.expect("tinv requested");
    let rows: Vec<Vec<Int>> = (0..res.rank).map(|r| tinv.row_vec(r)).collect();
    if rows.is_empty() {
        return IntMat::zero(0, m.cols());
    }
    hnf(&IntMat::from_rows(rows), false).h_trimmed()
}

/// Solve `x · m = target` over the integers. Returns any solution.
pub fn solve_left(m: &IntMat, target: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(target.len(), m.cols(), "dimension mismatch");
    let res = hnf(m, true);
    let u = res.transform.as_ref().expect("transform requested");
    // express target over the HNF rows by pivot back-substitution
    let mut rem: Vec<Int> = target.to_vec();
    let mut coeffs = vec![Int::zero(); m.rows()];
    for (i, &pc) in res.pivots.iter().enumerate() {
        let p = &res.h[(i, pc)];
        if rem[pc].is_zero() {
            continue;
        }
        let (q, r) = rem[pc].div_rem(p);
        if !r.is_zero() {
            return None;
        }
        for c in 0..m.cols() {
            let t = &q * &res.h[(i, c)];
            rem[c] -= t;
        }
        coeffs[i] = q;
    }
    if rem.iter().any(|v| !v.is_zero()) {
        return None;
    }
    // coeffs are over rows of h = u·m, pull back through u
    Some(u.mul_row(&coeffs))
}

/// Content (gcd of entries) of a vector; zero vector has content 0.
pub fn content(v: &[Int]) -> Int {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    g
}

/// Divide a vector by its content, making it primitive. Zero stays zero.
pub fn make_primitive(v: &[Int]) -> Vec<Int> {
    let c = content(v);
    if c.is_zero() || c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    #[test]
    fn hnf_of_identity_like() {
        let m = IntMat::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let res = hnf(&m, true);
        // transform really is unimodular and maps input to h
        let u = res.transform.as_ref().unwrap();
        assert_eq!(u.mul(&m), res.h);
        assert_eq!(res.rank, 3);
        // pivots positive, increasing columns
        for (i, &pc) in res.pivots.iter().enumerate() {
            assert!(res.h[(i, pc)] > Int::from(0));
        }
    }

    #[test]
    fn snf_divisors_chain() {
        let m = IntMat::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let res = snf(&m, false);
        assert_eq!(res.divisors, vec![int(2), int(2), int(156)]);
    }

    #[test]
    fn kernel_is_orthogonal_complement() {
        let m = IntMat::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        let k = kernel(&m);
        assert_eq!(k.rows(), 1);
        for r in 0..m.rows() {
            let dot: Int = m.row(r).iter().zip(k.row(0)).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn saturation_divides_out_index() {
        // span{(2,0),(0,3)} saturates to Z^2
        let m = IntMat::from_i64(&[&[2, 0], &[0, 3]]);
        let s = saturate_rows(&m);
        assert_eq!(s, IntMat::identity(2));
        // span{(2,4)} saturates to span{(1,2)}
        let m = IntMat::from_i64(&[&[2, 4]]);
        let s = saturate_rows(&m);
        assert_eq!(s, IntMat::from_i64(&[&[1, 2]]));
    }

    #[test]
    fn solve_left_roundtrip() {
        let m = IntMat::from_i64(&[&[1, 2, 0], &[0, 3, 1]]);
        let t = [int(2), int(13), int(3)];
        let x = solve_left(&m, &t).unwrap();
        assert_eq!(m.mul_row(&x), t.to_vec());
        // unsolvable system
        let t2 = [int(0), int(1), int(0)];
        assert!(solve_left(&m, &t2).is_none());
    }

    #[test]
    fn content_and_primitive() {
        assert_eq!(content(&[int(6), int(10), int(15)]), int(1));
        assert_eq!(content(&[int(2), int(4)]), int(2));
        assert_eq!(make_primitive(&[int(2), int(4)]), vec![int(1), int(2)]);
    }
}
