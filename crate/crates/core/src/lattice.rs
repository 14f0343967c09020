//! Quasi-unimodular lattices: free abelian groups with an integer
//! alternating form.
//!
//! The ambient convention everywhere is `Z^{2g}` with the standard
//! symplectic basis `α₁, β₁, …, α_g, β_g` and `⟨αᵢ, βᵢ⟩ = +1`; the
//! distinguished classes are `[a] = α₁` and `[b] = β₁`. Subgroups are
//! stored saturated with a Hermite-normal-form basis so that equality of
//! subgroups is equality of matrices.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::intmat::{self, IntMat};
use crate::rng::SeededRng;
use crate::Int;

/// Errors from lattice arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    DimensionMismatch { expected: usize, got: usize },
    ZeroVector,
    NotSkewSymmetric,
    /// The restricted form is not unimodular; carries the first elementary
    /// divisor different from 1.
    NotUnimodular { divisor: Int },
    Degenerate,
    NotSaturated,
    /// A requested construction cannot exist; names the violated bound.
    Infeasible { bound: String },
    NotPrimitive,
}

impl core::fmt::Display for LatticeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LatticeError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            LatticeError::ZeroVector => write!(f, "zero vector where a nonzero one is required"),
            LatticeError::NotSkewSymmetric => write!(f, "form matrix is not alternating"),
            LatticeError::NotUnimodular { divisor } => {
                write!(f, "restricted form is not unimodular: elementary divisor {divisor}")
            }
            LatticeError::Degenerate => write!(f, "restricted form is degenerate"),
            LatticeError::NotSaturated => write!(f, "subgroup is not saturated"),
            LatticeError::Infeasible { bound } => write!(f, "infeasible construction: {bound}"),
            LatticeError::NotPrimitive => write!(f, "vector is not primitive"),
        }
    }
}

pub type Result<T> = core::result::Result<T, LatticeError>;

/// Ambient free abelian group `Z^n` with an integer alternating form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticLattice {
    rank: usize,
    form: IntMat,
}

impl SymplecticLattice {
    pub fn new(form: IntMat) -> Result<Self> {
        let n = form.rows();
        if form.cols() != n {
            return Err(LatticeError::DimensionMismatch { expected: n, got: form.cols() });
        }
        for i in 0..n {
            if !form[(i, i)].is_zero() {
                return Err(LatticeError::NotSkewSymmetric);
            }
            for j in 0..i {
                if form[(i, j)] != -&form[(j, i)] {
                    return Err(LatticeError::NotSkewSymmetric);
                }
            }
        }
        Ok(SymplecticLattice { rank: n, form })
    }

    /// The standard genus-`g` lattice `Z^{2g}` with basis ordered
    /// `α₁, β₁, …, α_g, β_g`.
    pub fn standard(genus: usize) -> Self {
        Self::with_degenerate(genus, 2 * genus)
    }

    /// A quasi-unimodular lattice of rank `total_rank`: `genus` hyperbolic
    /// pairs followed by `total_rank − 2·genus` degenerate basis directions.
    pub fn with_degenerate(genus: usize, total_rank: usize) -> Self {
        assert!(2 * genus <= total_rank);
        let mut form = IntMat::zero(total_rank, total_rank);
        for i in 0..genus {
            form[(2 * i, 2 * i + 1)] = Int::one();
            form[(2 * i + 1, 2 * i)] = -Int::one();
        }
        SymplecticLattice { rank: total_rank, form }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn form(&self) -> &IntMat {
        &self.form
    }

    pub fn genus(&self) -> usize {
        let r = intmat::rank(&self.form);
        debug_assert!(r % 2 == 0);
        r / 2
    }

    fn check_dim(&self, v: &[Int]) -> Result<()> {
        if v.len() != self.rank {
            return Err(LatticeError::DimensionMismatch { expected: self.rank, got: v.len() });
        }
        Ok(())
    }

    /// `⟨v, w⟩ = v · form · wᵀ`.
    pub fn form_eval(&self, v: &[Int], w: &[Int]) -> Result<Int> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        let fw = self.form.mul_col(w);
        Ok(v.iter().zip(&fw).map(|(a, b)| a * b).sum())
    }

    /// The transvection `T_v(w) = w + ⟨v, w⟩ v`.
    pub fn transvect(&self, v: &[Int], w: &[Int]) -> Result<Vec<Int>> {
        let c = self.form_eval(v, w)?;
        Ok(w.iter().zip(v).map(|(wi, vi)| wi + &c * vi).collect())
    }

    /// Matrix of `T_v` acting on row vectors: `w ↦ w · M`.
    pub fn transvection_matrix(&self, v: &[Int]) -> Result<IntMat> {
        self.check_dim(v)?;
        let n = self.rank;
        let mut m = IntMat::identity(n);
        for i in 0..n {
            let mut e = vec![Int::zero(); n];
            e[i] = Int::one();
            let c = self.form_eval(v, &e)?;
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                let t = &c * &v[j];
                m[(i, j)] += t;
            }
        }
        Ok(m)
    }

    /// Matrix of the inverse of `T_v`, i.e. `w ↦ w − ⟨v, w⟩ v`.
    /// Note `T_{−v} = T_v` (the defining formula is quadratic in `v`), so
    /// the inverse is the negative twist power, not the transvection along
    /// `−v`.
    pub fn transvection_inverse_matrix(&self, v: &[Int]) -> Result<IntMat> {
        self.check_dim(v)?;
        let n = self.rank;
        let mut m = IntMat::identity(n);
        for i in 0..n {
            let mut e = vec![Int::zero(); n];
            e[i] = Int::one();
            let c = self.form_eval(v, &e)?;
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                let t = &c * &v[j];
                m[(i, j)] -= t;
            }
        }
        Ok(m)
    }

    /// True iff the gcd of the coordinates is 1. Errors on the zero vector,
    /// for which primitivity is undefined.
    pub fn is_primitive(&self, v: &[Int]) -> Result<bool> {
        self.check_dim(v)?;
        let c = intmat::content(v);
        if c.is_zero() {
            return Err(LatticeError::ZeroVector);
        }
        Ok(c.is_one())
    }

    /// `S^⊥ = {w : ⟨w, s⟩ = 0 for all s in the generating set}`.
    /// Always saturated.
    pub fn perp_of_vectors(&self, gens: &[Vec<Int>]) -> Result<LatticeSubgroup> {
        for g in gens {
            self.check_dim(g)?;
        }
        if gens.is_empty() {
            return LatticeSubgroup::from_rows(self, IntMat::identity(self.rank));
        }
        // ⟨w, s⟩ = w · form · sᵀ = (s · formᵀ) · wᵀ
        let constraints =
            IntMat::from_rows(gens.iter().map(|s| self.form.transpose().mul_row(s)).collect());
        let basis = intmat::kernel(&constraints);
        LatticeSubgroup::from_rows(self, basis)
    }

    pub fn perp(&self, s: &LatticeSubgroup) -> Result<LatticeSubgroup> {
        self.perp_of_vectors(&s.basis_rows())
    }
}

/// A subgroup of the ambient lattice, stored as an HNF basis, normally
/// saturated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeSubgroup {
    basis: IntMat,
    saturated: bool,
}

impl LatticeSubgroup {
    /// Build from generator rows; the result is the saturation of the span.
    pub fn from_rows(ambient: &SymplecticLattice, rows: IntMat) -> Result<Self> {
        if rows.cols() != ambient.rank() && rows.rows() > 0 {
            return Err(LatticeError::DimensionMismatch {
                expected: ambient.rank(),
                got: rows.cols(),
            });
        }
        let basis = if rows.rows() == 0 {
            IntMat::zero(0, ambient.rank())
        } else {
            intmat::saturate_rows(&rows)
        };
        Ok(LatticeSubgroup { basis, saturated: true })
    }

    /// Build from generator rows without saturating; the basis is still put
    /// in HNF and the `saturated` flag records whether the span happened to
    /// be saturated.
    pub fn from_rows_unsaturated(ambient: &SymplecticLattice, rows: IntMat) -> Result<Self> {
        if rows.cols() != ambient.rank() && rows.rows() > 0 {
            return Err(LatticeError::DimensionMismatch {
                expected: ambient.rank(),
                got: rows.cols(),
            });
        }
        let h = intmat::hnf(&rows, false).h_trimmed();
        let sat = intmat::saturate_rows(&h);
        let saturated = sat == h;
        Ok(LatticeSubgroup { basis: h, saturated })
    }

    pub fn from_vectors(ambient: &SymplecticLattice, vs: &[Vec<Int>]) -> Result<Self> {
        if vs.is_empty() {
            return LatticeSubgroup::from_rows(ambient, IntMat::zero(0, ambient.rank()));
        }
        LatticeSubgroup::from_rows(ambient, IntMat::from_rows(vs.to_vec()))
    }

    pub fn full(ambient: &SymplecticLattice) -> Self {
        LatticeSubgroup { basis: IntMat::identity(ambient.rank()), saturated: true }
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn basis(&self) -> &IntMat {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Int>> {
        (0..self.basis.rows()).map(|r| self.basis.row_vec(r)).collect()
    }

    /// Gram matrix of the ambient form restricted to the basis.
    pub fn gram(&self, ambient: &SymplecticLattice) -> IntMat {
        let b = &self.basis;
        let fbt = ambient.form().mul(&b.transpose());
        b.mul(&fbt)
    }

    /// Half the rank of the restricted form.
    pub fn genus(&self, ambient: &SymplecticLattice) -> usize {
        let r = intmat::rank(&self.gram(ambient));
        debug_assert!(r % 2 == 0, "alternating forms have even rank");
        r / 2
    }

    /// Membership test (exact, via the HNF basis).
    pub fn contains(&self, v: &[Int]) -> bool {
        if v.len() != self.basis.cols() {
            return false;
        }
        express_in_hnf_basis(&self.basis, v).is_some()
    }

    pub fn contains_subgroup(&self, other: &LatticeSubgroup) -> bool {
        other.basis_rows().iter().all(|r| self.contains(r))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subgroup.
    pub fn coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        express_in_hnf_basis(&self.basis, v)
    }

    /// Content of `v` measured in this subgroup: the largest `m` with
    /// `v = m·w` for some `w` here. Zero for the zero vector, `None` when
    /// `v` does not lie in the subgroup.
    pub fn content_in(&self, v: &[Int]) -> Option<Int> {
        let coords = self.coordinates(v)?;
        Some(intmat::content(&coords))
    }

    /// Sum of subgroups, saturated.
    pub fn sum(&self, ambient: &SymplecticLattice, other: &LatticeSubgroup) -> Result<Self> {
        LatticeSubgroup::from_rows(ambient, IntMat::stack(&self.basis, &other.basis))
    }

    /// Intersection of saturated subgroups (saturated again).
    pub fn intersect(&self, ambient: &SymplecticLattice, other: &LatticeSubgroup) -> Result<Self> {
        // A ∩ B is the dot-orthogonal complement of (A°, B°) stacked,
        // where X° is the dot-orthogonal complement of X.
        let ca = intmat::kernel(&self.basis);
        let cb = intmat::kernel(&other.basis);
        let basis = intmat::kernel(&IntMat::stack(&ca, &cb));
        LatticeSubgroup::from_rows(ambient, basis)
    }

    /// The sublattice of degenerate vectors of the restricted form.
    pub fn degenerate_part(&self, ambient: &SymplecticLattice) -> Result<LatticeSubgroup> {
        let gram = self.gram(ambient);
        let coeffs = intmat::kernel(&gram);
        let rows: Vec<Vec<Int>> =
            (0..coeffs.rows()).map(|r| self.basis.mul_row(coeffs.row(r))).collect();
        if rows.is_empty() {
            return LatticeSubgroup::from_rows(ambient, IntMat::zero(0, self.ambient_rank()));
        }
        LatticeSubgroup::from_rows(ambient, IntMat::from_rows(rows))
    }

    /// Integer symplectic basis `(a₁, b₁), …` of this subgroup together
    /// with a basis of the degenerate remainder. Requires the nondegenerate
    /// part to be unimodular; the obstructing divisor is reported otherwise.
    pub fn symplectic_basis_split(
        &self,
        ambient: &SymplecticLattice,
    ) -> Result<(Vec<(Vec<Int>, Vec<Int>)>, Vec<Vec<Int>>)> {
        let mut rows = self.basis_rows();
        let mut pairs = Vec::new();
        loop {
            if rows.is_empty() {
                return Ok((pairs, rows));
            }
            let m = IntMat::from_rows(rows.clone());
            let sub = LatticeSubgroup { basis: m, saturated: true };
            let gram = sub.gram(ambient);
            if gram.is_zero() {
                return Ok((pairs, rows));
            }
            // pair with the smallest nonzero pairing
            let k = rows.len();
            let (mut bi, mut bj) = (0, 0);
            for i in 0..k {
                for j in 0..k {
                    if gram[(i, j)].is_zero() {
                        continue;
                    }
                    if gram[(bi, bj)].is_zero() || gram[(i, j)].abs() < gram[(bi, bj)].abs() {
                        bi = i;
                        bj = j;
                    }
                }
            }
            let d = gram[(bi, bj)].clone();
            // euclidean improvement: if d fails to divide some pairing with
            // row bi, subtract a multiple of row bj to shrink it
            let mut reduced = false;
            for j in 0..k {
                if j == bi || j == bj {
                    continue;
                }
                if !(&gram[(bi, j)] % &d).is_zero() {
                    let q = gram[(bi, j)].div_floor(&d);
                    for c in 0..rows[j].len() {
                        let t = &q * &rows[bj][c];
                        rows[j][c] -= t;
                    }
                    reduced = true;
                    break;
                }
            }
            if reduced {
                continue;
            }
            if !d.abs().is_one() {
                return Err(LatticeError::NotUnimodular { divisor: d.abs() });
            }
            let (a_row, b_row) = if d.is_one() {
                (rows[bi].clone(), rows[bj].clone())
            } else {
                (rows[bj].clone(), rows[bi].clone())
            };
            // kill the pairings of the remaining rows against the new pair
            let mut rest = Vec::new();
            for (idx, row) in rows.iter().enumerate() {
                if idx == bi || idx == bj {
                    continue;
                }
                // v ← v + ⟨v, a⟩ b − ⟨v, b⟩ a
                let ca = ambient.form_eval(row, &a_row)?;
                let cb = ambient.form_eval(row, &b_row)?;
                let mut v = row.clone();
                for c in 0..v.len() {
                    let t = &ca * &b_row[c] - &cb * &a_row[c];
                    v[c] += t;
                }
                debug_assert!(ambient.form_eval(&v, &a_row).unwrap().is_zero());
                debug_assert!(ambient.form_eval(&v, &b_row).unwrap().is_zero());
                rest.push(v);
            }
            pairs.push((a_row, b_row));
            rows = rest;
        }
    }

    /// Integer symplectic basis of a subgroup whose restricted form is
    /// unimodular (even rank, no degenerate part).
    pub fn symplectic_basis(
        &self,
        ambient: &SymplecticLattice,
    ) -> Result<Vec<(Vec<Int>, Vec<Int>)>> {
        let (pairs, degenerate) = self.symplectic_basis_split(ambient)?;
        if !degenerate.is_empty() {
            if self.rank() % 2 == 1 {
                return Err(LatticeError::NotUnimodular { divisor: Int::zero() });
            }
            return Err(LatticeError::Degenerate);
        }
        Ok(pairs)
    }

    /// Form-induced projection onto this subgroup. Requires a saturated
    /// subgroup with unimodular restricted form. The image `p` satisfies
    /// `⟨p, w⟩ = ⟨v, w⟩` for every `w` in the subgroup; it is computed as
    /// `Σᵢ (⟨v, bᵢ⟩ aᵢ − ⟨v, aᵢ⟩ bᵢ)` over a symplectic basis and does not
    /// depend on the basis chosen.
    pub fn project(&self, ambient: &SymplecticLattice, v: &[Int]) -> Result<Vec<Int>> {
        if !self.saturated {
            return Err(LatticeError::NotSaturated);
        }
        let pairs = self.symplectic_basis(ambient)?;
        let mut out = vec![Int::zero(); ambient.rank()];
        for (a, b) in &pairs {
            let ca = ambient.form_eval(v, b)?;
            let cb = ambient.form_eval(v, a)?;
            for c in 0..out.len() {
                let t = &ca * &a[c] - &cb * &b[c];
                out[c] += t;
            }
        }
        Ok(out)
    }

    /// Independent implementation of the projection: solve
    /// `⟨p, wᵢ⟩ = ⟨v, wᵢ⟩` for `p` in the subgroup directly. Kept as an
    /// oracle against [`Self::project`].
    pub fn project_by_solving(&self, ambient: &SymplecticLattice, v: &[Int]) -> Result<Vec<Int>> {
        if !self.saturated {
            return Err(LatticeError::NotSaturated);
        }
        let b = &self.basis;
        let gram = self.gram(ambient);
        if intmat::rank(&gram) != b.rows() {
            return Err(LatticeError::Degenerate);
        }
        let target: Vec<Int> =
            self.basis_rows().iter().map(|w| ambient.form_eval(v, w)).collect::<Result<_>>()?;
        // p = y · basis where ⟨p, bⱼ⟩ = Σᵢ yᵢ ⟨bᵢ, bⱼ⟩
        let y = intmat::solve_left(&gram, &target)
            .ok_or(LatticeError::NotUnimodular { divisor: Int::zero() })?;
        Ok(b.mul_row(&y))
    }
}

/// Express `v` over an HNF basis with integer coefficients.
fn express_in_hnf_basis(basis: &IntMat, v: &[Int]) -> Option<Vec<Int>> {
    let mut rem = v.to_vec();
    let mut coeffs = vec![Int::zero(); basis.rows()];
    for r in 0..basis.rows() {
        let pc = (0..basis.cols()).find(|&c| !basis[(r, c)].is_zero())?;
        if rem[pc].is_zero() {
            continue;
        }
        let (q, rest) = rem[pc].div_rem(&basis[(r, pc)]);
        if !rest.is_zero() {
            return None;
        }
        for c in 0..basis.cols() {
            let t = &q * &basis[(r, c)];
            rem[c] -= t;
        }
        coeffs[r] = q;
    }
    if rem.iter().all(|x| x.is_zero()) {
        Some(coeffs)
    } else {
        None
    }
}

/// Constraints for [`extend_to_symplectic_subgroup`].
pub struct ExtendConstraints<'a> {
    /// Vectors the result must contain (pairwise orthogonal).
    pub contain: &'a [Vec<Int>],
    /// Subgroup the result must lie inside.
    pub within: &'a LatticeSubgroup,
    /// Vectors the result must be orthogonal to.
    pub perp_to: &'a [Vec<Int>],
    /// Requested genus of the result.
    pub genus: usize,
}

/// Construct a saturated subgroup satisfying membership and orthogonality
/// constraints with a prescribed genus. Candidate vectors are drawn by
/// seeded enumeration, so the output is deterministic for a fixed seed.
///
/// The result contains every `contain` vector, lies in `within`, is
/// orthogonal to every `perp_to` vector, has genus exactly `genus`, and its
/// degenerate part is spanned by the degenerate members of `contain`.
pub fn extend_to_symplectic_subgroup(
    ambient: &SymplecticLattice,
    c: ExtendConstraints<'_>,
    rng: &mut SeededRng,
) -> Result<LatticeSubgroup> {
    let w = {
        let perp = ambient.perp_of_vectors(c.perp_to)?;
        c.within.intersect(ambient, &perp)?
    };
    for v in c.contain {
        if !w.contains(v) {
            return Err(LatticeError::Infeasible {
                bound: String::from("a required vector is not in `within ∩ perp_to^⊥`"),
            });
        }
    }
    let mut chosen: Vec<Vec<Int>> = c.contain.to_vec();
    // Nondegenerate members of `contain` need hyperbolic partners inside w.
    let mut paired = 0usize;
    let current = LatticeSubgroup::from_vectors(ambient, &chosen)?;
    let degenerate_in = current.degenerate_part(ambient)?;
    for v in c.contain {
        if degenerate_in.contains(v) {
            continue;
        }
        let others: Vec<Vec<Int>> =
            chosen.iter().filter(|u| u.as_slice() != v.as_slice()).cloned().collect();
        let mut conds: Vec<(Vec<Int>, Int)> =
            others.into_iter().map(|u| (u, Int::zero())).collect();
        conds.push((v.clone(), -Int::one()));
        let partner = vector_with_pairings(ambient, &w, &conds, &[], rng).ok_or_else(|| {
            LatticeError::Infeasible { bound: String::from("no hyperbolic partner available") }
        })?;
        chosen.push(partner);
        paired += 1;
    }
    if paired > c.genus {
        return Err(LatticeError::Infeasible {
            bound: format!("contain set already forces genus {paired} > requested {}", c.genus),
        });
    }
    // Add fresh hyperbolic pairs until the requested genus is reached.
    for _ in paired..c.genus {
        let pool = {
            let perp_chosen = ambient.perp_of_vectors(&chosen)?;
            w.intersect(ambient, &perp_chosen)?
        };
        if pool.genus(ambient) < 1 {
            return Err(LatticeError::Infeasible {
                bound: format!(
                    "available genus exhausted before reaching requested genus {}",
                    c.genus
                ),
            });
        }
        let (u, v) = hyperbolic_pair_in(ambient, &pool, rng)?;
        chosen.push(u);
        chosen.push(v);
    }
    let result = LatticeSubgroup::from_vectors(ambient, &chosen)?;
    // The span of the chosen vectors should already be saturated; verify.
    let span = LatticeSubgroup::from_rows_unsaturated(ambient, IntMat::from_rows(chosen.clone()))?;
    if span.basis() != result.basis() {
        return Err(LatticeError::NotSaturated);
    }
    if result.genus(ambient) != c.genus {
        return Err(LatticeError::Infeasible {
            bound: format!("constructed genus {} ≠ requested {}", result.genus(ambient), c.genus),
        });
    }
    for v in c.perp_to {
        for row in result.basis_rows() {
            if !ambient.form_eval(&row, v)?.is_zero() {
                return Err(LatticeError::Infeasible {
                    bound: String::from("orthogonality constraint violated"),
                });
            }
        }
    }
    Ok(result)
}

/// Find a primitive vector `x` in `sub` with prescribed pairings
/// `⟨x, cᵢ⟩ = tᵢ`, avoiding the span of `avoid`. Seeded and deterministic.
pub fn vector_with_pairings(
    ambient: &SymplecticLattice,
    sub: &LatticeSubgroup,
    conds: &[(Vec<Int>, Int)],
    avoid: &[Vec<Int>],
    rng: &mut SeededRng,
) -> Option<Vec<Int>> {
    let b = sub.basis();
    if b.rows() == 0 {
        return None;
    }
    // For x = y · b: ⟨x, cᵢ⟩ = y · (b · form · cᵢᵀ)
    let mut cols: Vec<Vec<Int>> = Vec::new();
    let mut target = Vec::new();
    for (cvec, t) in conds {
        let fc = ambient.form().mul_col(cvec);
        cols.push(b.mul_col(&fc));
        target.push(t.clone());
    }
    let m = if cols.is_empty() {
        IntMat::zero(b.rows(), 0)
    } else {
        IntMat::from_rows(cols).transpose()
    };
    let particular = if conds.is_empty() {
        vec![Int::zero(); b.rows()]
    } else {
        intmat::solve_left(&m, &target)?
    };
    let hom = if conds.is_empty() {
        IntMat::identity(b.rows())
    } else {
        intmat::kernel(&m.transpose())
    };
    let avoid_sub =
        if avoid.is_empty() { None } else { LatticeSubgroup::from_vectors(ambient, avoid).ok() };
    // seeded enumeration of kernel offsets
    for attempt in 0..400 {
        let mut y = particular.clone();
        if attempt > 0 {
            for r in 0..hom.rows() {
                let coef = Int::from(rng.int_in(-2, 2));
                if coef.is_zero() {
                    continue;
                }
                for c in 0..y.len() {
                    let t = &coef * &hom[(r, c)];
                    y[c] += t;
                }
            }
        }
        let x = b.mul_row(&y);
        if x.iter().all(|v| v.is_zero()) {
            continue;
        }
        if !intmat::content(&x).is_one() {
            continue;
        }
        if let Some(av) = &avoid_sub {
            if av.contains(&x) {
                continue;
            }
        }
        return Some(x);
    }
    None
}

/// Find a hyperbolic pair `(u, v)` with `⟨u, v⟩ = 1` inside `sub`,
/// by seeded search.
pub fn hyperbolic_pair_in(
    ambient: &SymplecticLattice,
    sub: &LatticeSubgroup,
    rng: &mut SeededRng,
) -> Result<(Vec<Int>, Vec<Int>)> {
    for _ in 0..200 {
        let Some(u) = random_primitive_in(sub, rng) else { continue };
        if let Some(v) = vector_with_pairings(ambient, sub, &[(u.clone(), -Int::one())], &[], rng) {
            debug_assert!(ambient.form_eval(&u, &v).unwrap().is_one());
            return Ok((u, v));
        }
    }
    Err(LatticeError::Infeasible { bound: String::from("no hyperbolic pair found") })
}

/// A seeded primitive element of `sub` with small coordinates.
pub fn random_primitive_in(sub: &LatticeSubgroup, rng: &mut SeededRng) -> Option<Vec<Int>> {
    let b = sub.basis();
    if b.rows() == 0 {
        return None;
    }
    for _ in 0..50 {
        let y: Vec<Int> = (0..b.rows()).map(|_| Int::from(rng.int_in(-2, 2))).collect();
        let x = b.mul_row(&y);
        if x.iter().all(|v| v.is_zero()) {
            continue;
        }
        return Some(intmat::make_primitive(&x));
    }
    None
}

/// α_i of the standard ordering as an ambient vector (1-based).
pub fn alpha(g: usize, i: usize) -> Vec<Int> {
    assert!(i >= 1 && i <= g);
    let mut v = vec![Int::zero(); 2 * g];
    v[2 * (i - 1)] = Int::one();
    v
}

/// β_i of the standard ordering as an ambient vector (1-based).
pub fn beta(g: usize, i: usize) -> Vec<Int> {
    assert!(i >= 1 && i <= g);
    let mut v = vec![Int::zero(); 2 * (i - 1) + 1 + 2 * (g - i) + 1];
    v[2 * (i - 1) + 1] = Int::one();
    v
}

pub fn add(v: &[Int], w: &[Int]) -> Vec<Int> {
    v.iter().zip(w).map(|(a, b)| a + b).collect()
}

pub fn sub(v: &[Int], w: &[Int]) -> Vec<Int> {
    v.iter().zip(w).map(|(a, b)| a - b).collect()
}

pub fn neg(v: &[Int]) -> Vec<Int> {
    v.iter().map(|a| -a).collect()
}

pub fn scale(c: &Int, v: &[Int]) -> Vec<Int> {
    v.iter().map(|a| c * a).collect()
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(|a| a.is_zero())
}
