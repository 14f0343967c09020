//! Exterior powers `∧²Q^n` and `∧³Q^n` with exact arithmetic.
//!
//! Basis order is lexicographic on strictly increasing index tuples, so a
//! wedge element is a dense coordinate vector and subspaces of a wedge
//! space are ordinary [`RationalSubspace`]s. The Johnson quotient target
//! `∧³H₁ / H₁` (embedded via `c ↦ c ∧ ω`) lives here too.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::intmat::IntMat;
use crate::lattice::{LatticeSubgroup, SymplecticLattice};
use crate::ratmat::{self, QMat, RationalSubspace};
use crate::{Int, Rat};

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `∧^degree Q^n` with the lexicographic basis of increasing index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeSpace {
    ambient_rank: usize,
    degree: usize,
    index: Vec<Vec<usize>>,
}

impl WedgeSpace {
    pub fn new(ambient_rank: usize, degree: usize) -> Self {
        assert!(degree == 2 || degree == 3, "only degrees 2 and 3 are supported");
        let mut index = Vec::with_capacity(binom(ambient_rank, degree));
        if degree == 2 {
            for i in 0..ambient_rank {
                for j in i + 1..ambient_rank {
                    index.push(vec![i, j]);
                }
            }
        } else {
            for i in 0..ambient_rank {
                for j in i + 1..ambient_rank {
                    for k in j + 1..ambient_rank {
                        index.push(vec![i, j, k]);
                    }
                }
            }
        }
        WedgeSpace { ambient_rank, degree, index }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.index
    }

    /// Position of a strictly increasing tuple in the basis order.
    pub fn position(&self, tuple: &[usize]) -> Option<usize> {
        self.index.binary_search_by(|probe| probe.as_slice().cmp(tuple)).ok()
    }

    /// `v ∧ w` for ambient vectors.
    pub fn wedge2(&self, v: &[Rat], w: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.degree, 2);
        assert_eq!(v.len(), self.ambient_rank);
        assert_eq!(w.len(), self.ambient_rank);
        self.index
            .iter()
            .map(|t| {
                let (i, j) = (t[0], t[1]);
                &v[i] * &w[j] - &v[j] * &w[i]
            })
            .collect()
    }

    /// `u ∧ v ∧ w` for ambient vectors (3×3 minors).
    pub fn wedge3(&self, u: &[Rat], v: &[Rat], w: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.degree, 3);
        self.index
            .iter()
            .map(|t| {
                let (i, j, k) = (t[0], t[1], t[2]);
                let det = &u[i] * (&v[j] * &w[k] - &v[k] * &w[j])
                    - &u[j] * (&v[i] * &w[k] - &v[k] * &w[i])
                    + &u[k] * (&v[i] * &w[j] - &v[j] * &w[i]);
                det
            })
            .collect()
    }

    /// `x ∧ w` for `x ∈ ∧²` (this space must be the degree-3 space and
    /// `two` its degree-2 sibling).
    pub fn wedge_2_with_1(&self, two: &WedgeSpace, x: &[Rat], w: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.degree, 3);
        assert_eq!(two.degree, 2);
        assert_eq!(two.ambient_rank, self.ambient_rank);
        let mut out = vec![Rat::zero(); self.dim()];
        for (pos, t) in two.index.iter().enumerate() {
            let c = &x[pos];
            if c.is_zero() {
                continue;
            }
            let (i, j) = (t[0], t[1]);
            for k in 0..self.ambient_rank {
                if k == i || k == j {
                    continue;
                }
                // sign of sorting (i, j, k) with i < j
                let (tuple, sign) = if k < i {
                    (vec![k, i, j], 1)
                } else if k < j {
                    (vec![i, k, j], -1)
                } else {
                    (vec![i, j, k], 1)
                };
                let pos3 = self.position(&tuple).expect("valid tuple");
                if sign == 1 {
                    out[pos3] += c * &w[k];
                } else {
                    out[pos3] -= c * &w[k];
                }
            }
        }
        out
    }

    /// The induced action of an ambient linear map (acting on row vectors)
    /// on this wedge space.
    pub fn induced_map(&self, m: &IntMat) -> QMat {
        assert_eq!(m.rows(), self.ambient_rank);
        assert_eq!(m.cols(), self.ambient_rank);
        let images: Vec<Vec<Rat>> = (0..self.ambient_rank)
            .map(|i| {
                let mut e = vec![Int::zero(); self.ambient_rank];
                e[i] = Int::one();
                ratmat::rat_vec(&m.mul_row(&e))
            })
            .collect();
        let rows: Vec<Vec<Rat>> = self
            .index
            .iter()
            .map(|t| {
                if self.degree == 2 {
                    self.wedge2(&images[t[0]], &images[t[1]])
                } else {
                    self.wedge3(&images[t[0]], &images[t[1]], &images[t[2]])
                }
            })
            .collect();
        QMat::from_rows(rows)
    }

    /// Subspace spanned by all degree-fold wedges of a basis of `s`.
    pub fn power_of_subspace(&self, s: &RationalSubspace) -> RationalSubspace {
        assert_eq!(s.ambient(), self.ambient_rank);
        let basis = s.basis_rows();
        let mut vecs = Vec::new();
        let d = basis.len();
        if self.degree == 2 {
            for i in 0..d {
                for j in i + 1..d {
                    vecs.push(self.wedge2(&basis[i], &basis[j]));
                }
            }
        } else {
            for i in 0..d {
                for j in i + 1..d {
                    for k in j + 1..d {
                        vecs.push(self.wedge3(&basis[i], &basis[j], &basis[k]));
                    }
                }
            }
        }
        RationalSubspace::span(self.dim(), &vecs)
    }

    pub fn power_of_subgroup(&self, s: &LatticeSubgroup) -> RationalSubspace {
        let sub = RationalSubspace::span_int(self.ambient_rank, &s.basis_rows());
        self.power_of_subspace(&sub)
    }

    /// Same span as [`Self::power_of_subspace`] but as raw integer rows,
    /// for fast rank work.
    fn power_rows_int(&self, s: &LatticeSubgroup) -> Vec<Vec<Int>> {
        let basis: Vec<Vec<Rat>> = s.basis_rows().iter().map(|r| ratmat::rat_vec(r)).collect();
        let d = basis.len();
        let mut vecs = Vec::new();
        if self.degree == 2 {
            for i in 0..d {
                for j in i + 1..d {
                    vecs.push(self.wedge2(&basis[i], &basis[j]));
                }
            }
        } else {
            for i in 0..d {
                for j in i + 1..d {
                    for k in j + 1..d {
                        vecs.push(self.wedge3(&basis[i], &basis[j], &basis[k]));
                    }
                }
            }
        }
        vecs.iter()
            .map(|v| v.iter().map(|x| x.numer().clone()).collect())
            .collect()
    }
}

/// The quotient `∧³ H₁ / H₁` with `H₁` embedded by `c ↦ c ∧ ω`,
/// `ω = Σ αᵢ ∧ βᵢ`. Elements are canonical coset representatives obtained
/// by reduction against the rref of the embedded copy of `H₁`.
#[derive(Clone, Debug)]
pub struct JohnsonTarget {
    pub genus: usize,
    pub two: WedgeSpace,
    pub three: WedgeSpace,
    omega: Vec<Rat>,
    embedded: RationalSubspace,
}

impl JohnsonTarget {
    pub fn new(lattice: &SymplecticLattice) -> Self {
        let n = lattice.rank();
        debug_assert!(n % 2 == 0);
        let genus = n / 2;
        let two = WedgeSpace::new(n, 2);
        let three = WedgeSpace::new(n, 3);
        let full = LatticeSubgroup::full(lattice);
        let omega = omega_of(&two, lattice, &full);
        let mut embeds = Vec::new();
        for c in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[c] = Rat::one();
            embeds.push(three.wedge_2_with_1(&two, &omega, &e));
        }
        let embedded = RationalSubspace::span(three.dim(), &embeds);
        JohnsonTarget { genus, two, three, omega, embedded }
    }

    pub fn omega(&self) -> &[Rat] {
        &self.omega
    }

    pub fn embedded_h1(&self) -> &RationalSubspace {
        &self.embedded
    }

    pub fn dim_total(&self) -> usize {
        self.three.dim()
    }

    pub fn dim_quotient(&self) -> usize {
        self.three.dim() - self.embedded.dim()
    }

    /// Canonical coset representative modulo the embedded `H₁`.
    pub fn quotient_project(&self, x: &[Rat]) -> Vec<Rat> {
        self.embedded.reduce(x)
    }

    /// Image of a `∧³` subspace in the quotient, as a canonical subspace of
    /// the reduced coordinates.
    pub fn quotient_image(&self, s: &RationalSubspace) -> RationalSubspace {
        let vecs: Vec<Vec<Rat>> =
            s.basis_rows().iter().map(|r| self.quotient_project(r)).collect();
        RationalSubspace::span(self.three.dim(), &vecs)
    }
}

/// `ω_S = Σ aᵢ ∧ bᵢ` over a symplectic basis of `s` (the characteristic
/// element of the nondegenerate part of `s`).
pub fn omega_of(two: &WedgeSpace, lattice: &SymplecticLattice, s: &LatticeSubgroup) -> Vec<Rat> {
    let (pairs, _) = s.symplectic_basis_split(lattice).expect("symplectic reduction");
    let mut acc = vec![Rat::zero(); two.dim()];
    for (a, b) in &pairs {
        let w = two.wedge2(&ratmat::rat_vec(a), &ratmat::rat_vec(b));
        for (dst, src) in acc.iter_mut().zip(&w) {
            *dst += src;
        }
    }
    acc
}

/// Pairs `(γ, δ)` of primitive vectors with `⟨γ, δ⟩ = 1` whose wedges span
/// `∧²` of the subgroup (rationally). Requires genus ≥ 1.
///
/// Built from a partial symplectic basis: base pairs, then cross terms
/// rewritten as differences of unimodular pairs.
pub fn spanning_pairs(
    lattice: &SymplecticLattice,
    s: &LatticeSubgroup,
) -> crate::lattice::Result<Vec<(Vec<Int>, Vec<Int>)>> {
    use crate::lattice::{add, LatticeError};
    let (pairs, degenerate) = s.symplectic_basis_split(lattice)?;
    if pairs.is_empty() {
        return Err(LatticeError::Infeasible {
            bound: alloc::string::String::from("spanning pairs need genus ≥ 1"),
        });
    }
    let (g1, d1) = (pairs[0].0.clone(), pairs[0].1.clone());
    let mut out: Vec<(Vec<Int>, Vec<Int>)> = Vec::new();
    let mut push = |a: &[Int], b: &[Int]| {
        out.push((a.to_vec(), b.to_vec()));
    };
    // base pairs γᵢ ∧ δᵢ
    for (a, b) in &pairs {
        push(a, b);
    }
    // γᵢ ∧ δⱼ and δᵢ ∧ δⱼ (i ≠ j): r ∧ δⱼ = (r + γⱼ) ∧ δⱼ − γⱼ ∧ δⱼ
    for j in 0..pairs.len() {
        let (gj, dj) = (&pairs[j].0, &pairs[j].1);
        for i in 0..pairs.len() {
            if i == j {
                continue;
            }
            let (gi, di) = (&pairs[i].0, &pairs[i].1);
            push(&add(gi, gj), dj);
            push(&add(di, gj), dj);
        }
        for r in &degenerate {
            push(&add(r, gj), dj);
        }
    }
    // γᵢ ∧ γⱼ: r ∧ γⱼ = (r − δⱼ) ∧ γⱼ + δⱼ ∧ γⱼ; use pairing-one order
    for j in 0..pairs.len() {
        let (gj, dj) = (&pairs[j].0, &pairs[j].1);
        let neg_dj: Vec<Int> = dj.iter().map(|x| -x).collect();
        for i in 0..pairs.len() {
            if i == j {
                continue;
            }
            let gi = &pairs[i].0;
            // γᵢ ∧ γⱼ = (γᵢ − δⱼ) ∧ γⱼ − (−δⱼ) ∧ γⱼ
            push(&add(gi, &neg_dj), gj);
            push(&neg_dj, gj);
        }
        for r in &degenerate {
            push(&add(r, &neg_dj), gj);
        }
    }
    // degenerate ∧ degenerate: embed both via the first hyperbolic pair
    for i in 0..degenerate.len() {
        for j in i + 1..degenerate.len() {
            let r = &degenerate[i];
            let s_ = &degenerate[j];
            // r ∧ s = (r + γ₁) ∧ (s + δ₁) − r ∧ δ₁ − γ₁ ∧ s − γ₁ ∧ δ₁
            push(&add(r, &g1), &add(s_, &d1));
            // r ∧ δ₁ and γ₁ ∧ s are covered by the cross-term cases above;
            // re-emit them anyway so the list is self-contained
            push(&add(r, &g1), &d1);
            let neg_d1: Vec<Int> = d1.iter().map(|x| -x).collect();
            push(&add(s_, &neg_d1), &g1);
        }
    }
    // validate the contract: primitive, pairing exactly one
    for (a, b) in &out {
        debug_assert!(lattice.is_primitive(a).unwrap_or(false));
        debug_assert!(lattice.is_primitive(b).unwrap_or(false));
        debug_assert!(lattice.form_eval(a, b).unwrap().is_one());
    }
    let filtered: Vec<(Vec<Int>, Vec<Int>)> = out
        .into_iter()
        .filter(|(a, b)| {
            lattice.is_primitive(a).unwrap_or(false)
                && lattice.is_primitive(b).unwrap_or(false)
                && lattice.form_eval(a, b).map(|v| v.is_one()).unwrap_or(false)
        })
        .collect();
    Ok(filtered)
}

/// Report of the inclusion–exclusion computation for a family of
/// subspaces of `v`.
#[derive(Clone, Debug)]
pub struct InclusionExclusionReport {
    /// `d_k` = dimension of any k-fold intersection, `d_0 = dim` of the sum.
    pub level_dims: Vec<usize>,
    /// `Σ (−1)^k C(n,k) d_k`.
    pub alternating_sum: i64,
    /// Whether the parts sum to all of `v`.
    pub surjective: bool,
    /// Set when two same-size intersections have different dimensions; the
    /// alternating-sum identity is not asserted in that case.
    pub hypothesis_violated: bool,
}

/// Check the inclusion–exclusion dimension identity for subspaces
/// `parts[i] ⊆ v`: when all k-fold intersections share a dimension `d_k`
/// and the parts sum to `v`, then `Σ_{k=0}^n (−1)^k C(n,k) d_k = 0` with
/// `d_0 = dim v`.
pub fn inclusion_exclusion_dims(
    v: &RationalSubspace,
    parts: &[RationalSubspace],
) -> InclusionExclusionReport {
    let n = parts.len();
    for p in parts {
        assert!(v.contains(p), "parts must be subspaces of v");
    }
    let sum = parts
        .iter()
        .fold(RationalSubspace::zero(v.ambient()), |acc, p| acc.sum(p));
    let surjective = sum.dim() == v.dim();
    let mut level_dims = vec![0usize; n + 1];
    level_dims[0] = v.dim();
    let mut hypothesis_violated = false;
    // all k-fold intersections, k ≥ 1
    for k in 1..=n {
        let mut dims = Vec::new();
        for subset in subsets_of_size(n, k) {
            let mut acc: Option<RationalSubspace> = None;
            for &i in &subset {
                acc = Some(match acc {
                    None => parts[i].clone(),
                    Some(a) => a.intersect(&parts[i]),
                });
            }
            dims.push(acc.map_or(0, |a| a.dim()));
        }
        if dims.windows(2).any(|w| w[0] != w[1]) {
            hypothesis_violated = true;
        }
        level_dims[k] = dims[0];
    }
    let mut alternating_sum = 0i64;
    for (k, &d) in level_dims.iter().enumerate() {
        let term = (binom(n, k) * d) as i64;
        if k % 2 == 0 {
            alternating_sum += term;
        } else {
            alternating_sum -= term;
        }
    }
    InclusionExclusionReport { level_dims, alternating_sum, surjective, hypothesis_violated }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Whether `Σ_{W' ⊆ W, |W'| = m} ∧^degree((W')^⊥ ⊗ Q)` is all of
/// `∧^degree(L ⊗ Q)`. Errors if the adjoint images of `W` are dependent.
///
/// The dimension computation stacks the integer wedge bases of the perp
/// powers; full rank is certified mod p and non-full rank is recomputed by
/// fraction-free elimination.
pub fn perp_family_cover(
    lattice: &SymplecticLattice,
    w: &[Vec<Int>],
    degree: usize,
    m: usize,
) -> crate::lattice::Result<bool> {
    use crate::lattice::LatticeError;
    // adjoint independence: rows v ↦ v·formᵀ must be independent
    let adj = IntMat::from_rows(
        w.iter().map(|v| lattice.form().transpose().mul_row(v)).collect(),
    );
    if ratmat::rank_exact(&adj) != w.len() {
        return Err(LatticeError::Degenerate);
    }
    let space = WedgeSpace::new(lattice.rank(), degree);
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for subset in subsets_of_size(w.len(), m) {
        let gens: Vec<Vec<Int>> = subset.iter().map(|&i| w[i].clone()).collect();
        let perp = lattice.perp_of_vectors(&gens)?;
        rows.extend(space.power_rows_int(&perp));
    }
    if rows.is_empty() {
        return Ok(space.dim() == 0);
    }
    let mat = IntMat::from_rows(rows);
    Ok(ratmat::rank_exact(&mat) == space.dim())
}

/// Dimension of `Σ_{W' ⊆ W, |W'| = m} ∧^degree((W')^⊥ ⊗ Q)` (exact).
pub fn perp_family_image_dim(
    lattice: &SymplecticLattice,
    w: &[Vec<Int>],
    degree: usize,
    m: usize,
) -> crate::lattice::Result<usize> {
    let space = WedgeSpace::new(lattice.rank(), degree);
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for subset in subsets_of_size(w.len(), m) {
        let gens: Vec<Vec<Int>> = subset.iter().map(|&i| w[i].clone()).collect();
        let perp = lattice.perp_of_vectors(&gens)?;
        rows.extend(space.power_rows_int(&perp));
    }
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(ratmat::rank_exact(&IntMat::from_rows(rows)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{alpha, beta};
    use crate::ratmat::rat_vec;

    #[test]
    fn wedge_dims() {
        let w2 = WedgeSpace::new(4, 2);
        assert_eq!(w2.dim(), 6);
        let w3 = WedgeSpace::new(6, 3);
        assert_eq!(w3.dim(), 20);
    }

    #[test]
    fn power_of_subspace_dims() {
        let w2 = WedgeSpace::new(4, 2);
        let full = RationalSubspace::full(4);
        assert_eq!(w2.power_of_subspace(&full).dim(), 6);
        let w3 = WedgeSpace::new(4, 3);
        let line = RationalSubspace::span_int(4, &[alpha(2, 1)]);
        assert_eq!(w3.power_of_subspace(&line).dim(), 0);
        // span{α₁, β₁, α₂} has a 1-dimensional cube: α₁∧β₁∧α₂
        let s = RationalSubspace::span_int(4, &[alpha(2, 1), beta(2, 1), alpha(2, 2)]);
        let p = w3.power_of_subspace(&s);
        assert_eq!(p.dim(), 1);
        let l = SymplecticLattice::standard(2);
        let _ = l;
        let gen = w3.wedge3(
            &rat_vec(&alpha(2, 1)),
            &rat_vec(&beta(2, 1)),
            &rat_vec(&alpha(2, 2)),
        );
        assert!(p.contains_vec(&gen));
    }

    #[test]
    fn johnson_target_dimensions() {
        let l = SymplecticLattice::standard(3);
        let t = JohnsonTarget::new(&l);
        assert_eq!(t.dim_total(), 20);
        assert_eq!(t.embedded_h1().dim(), 6);
        assert_eq!(t.dim_quotient(), 14);
    }

    #[test]
    fn quotient_project_examples() {
        let l = SymplecticLattice::standard(3);
        let t = JohnsonTarget::new(&l);
        // α₁ ∧ ω reduces to zero
        let a1 = rat_vec(&alpha(3, 1));
        let x = t.three.wedge_2_with_1(&t.two, t.omega(), &a1);
        assert!(ratmat::is_zero_rvec(&t.quotient_project(&x)));
        // α₁∧β₁∧γ ≡ −(α₂∧β₂∧γ + α₃∧β₃∧γ) for γ = α₂ (same coset)
        let g = rat_vec(&alpha(3, 2));
        let lhs = t.three.wedge3(&rat_vec(&alpha(3, 1)), &rat_vec(&beta(3, 1)), &g);
        let t22 = t.three.wedge3(&rat_vec(&alpha(3, 2)), &rat_vec(&beta(3, 2)), &g);
        let t33 = t.three.wedge3(&rat_vec(&alpha(3, 3)), &rat_vec(&beta(3, 3)), &g);
        let rhs: Vec<Rat> = t22.iter().zip(&t33).map(|(a, b)| -(a + b)).collect();
        assert_eq!(t.quotient_project(&lhs), t.quotient_project(&rhs));
        // idempotence
        let r = t.quotient_project(&lhs);
        assert_eq!(t.quotient_project(&r), r);
    }

    #[test]
    fn omega_is_basis_independent() {
        let l = SymplecticLattice::standard(3);
        let t = JohnsonTarget::new(&l);
        // recompute ω from a transvected basis
        let mut rng = crate::rng::SeededRng::new(9);
        let full = LatticeSubgroup::full(&l);
        let v = crate::lattice::random_primitive_in(&full, &mut rng).unwrap();
        let m = l.transvection_matrix(&v).unwrap();
        let rows: Vec<Vec<Int>> = full.basis_rows().iter().map(|r| m.mul_row(r)).collect();
        let moved = LatticeSubgroup::from_vectors(&l, &rows).unwrap();
        let w = omega_of(&t.two, &l, &moved);
        assert_eq!(w, t.omega().to_vec());
    }

    #[test]
    fn spanning_pairs_examples() {
        let l1 = SymplecticLattice::standard(1);
        let s = LatticeSubgroup::full(&l1);
        let pairs = spanning_pairs(&l1, &s).unwrap();
        let w2 = WedgeSpace::new(2, 2);
        let vecs: Vec<Vec<Rat>> = pairs
            .iter()
            .map(|(a, b)| w2.wedge2(&rat_vec(a), &rat_vec(b)))
            .collect();
        assert_eq!(RationalSubspace::span(w2.dim(), &vecs).dim(), 1);

        let l2 = SymplecticLattice::standard(2);
        let s = LatticeSubgroup::full(&l2);
        let pairs = spanning_pairs(&l2, &s).unwrap();
        let w2 = WedgeSpace::new(4, 2);
        let vecs: Vec<Vec<Rat>> = pairs
            .iter()
            .map(|(a, b)| w2.wedge2(&rat_vec(a), &rat_vec(b)))
            .collect();
        assert_eq!(RationalSubspace::span(w2.dim(), &vecs).dim(), 6);

        // rank-3 quasi-unimodular span{[a], α₂, β₂}: ∧² has dim 3
        let l3 = SymplecticLattice::standard(3);
        let s = LatticeSubgroup::from_vectors(&l3, &[alpha(3, 1), alpha(3, 2), beta(3, 2)]).unwrap();
        let pairs = spanning_pairs(&l3, &s).unwrap();
        let w2 = WedgeSpace::new(6, 2);
        let vecs: Vec<Vec<Rat>> = pairs
            .iter()
            .map(|(a, b)| w2.wedge2(&rat_vec(a), &rat_vec(b)))
            .collect();
        let span = RationalSubspace::span(w2.dim(), &vecs);
        assert_eq!(span.dim(), 3);
        assert_eq!(span, w2.power_of_subgroup(&s));
        // genus 0 errors
        let s0 = LatticeSubgroup::from_vectors(&l3, &[alpha(3, 1)]).unwrap();
        assert!(spanning_pairs(&l3, &s0).is_err());
    }

    #[test]
    fn inclusion_exclusion_plane_example() {
        // two transverse hyperplanes in Q³: d₀=3, d₁=2, d₂=1; 3 − 2·2 + 1 = 0
        let e = |i: usize| {
            let mut v = vec![Int::zero(); 3];
            v[i] = Int::one();
            v
        };
        let v = RationalSubspace::full(3);
        let a = RationalSubspace::span_int(3, &[e(0), e(1)]);
        let b = RationalSubspace::span_int(3, &[e(1), e(2)]);
        let rep = inclusion_exclusion_dims(&v, &[a, b]);
        assert_eq!(rep.level_dims, vec![3, 2, 1]);
        assert_eq!(rep.alternating_sum, 0);
        assert!(rep.surjective);
        assert!(!rep.hypothesis_violated);
        // single part = v is trivially surjective: 1 − 1 = 0
        let rep = inclusion_exclusion_dims(&v, &[RationalSubspace::full(3)]);
        assert!(rep.surjective);
        assert_eq!(rep.alternating_sum, 0);
    }

    #[test]
    fn perp_family_cover_small_cases() {
        // degree 3, |W| = 4, m = 1, n = 8: covered
        let l = SymplecticLattice::standard(4);
        let w = vec![alpha(4, 1), alpha(4, 2), alpha(4, 3), alpha(4, 4)];
        assert!(perp_family_cover(&l, &w, 3, 1).unwrap());
        // degree 3, |W| = 2: 2·C(7,3) − C(6,3) = 50 < 56
        let w = vec![alpha(4, 1), alpha(4, 2)];
        assert!(!perp_family_cover(&l, &w, 3, 1).unwrap());
        assert_eq!(perp_family_image_dim(&l, &w, 3, 1).unwrap(), 50);
        // degree 2, |W| = 3, m = 1: covered
        let w = vec![alpha(4, 1), alpha(4, 2), alpha(4, 3)];
        assert!(perp_family_cover(&l, &w, 2, 1).unwrap());
    }
}
