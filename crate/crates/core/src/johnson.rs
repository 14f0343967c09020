//! The Johnson homomorphism on bounding-pair data, and the transvection
//! action on its quotient target.
//!
//! A bounding pair is modeled purely by its homological shadow: the class
//! `[c]` of the pair and the first-homology image of one complementary
//! component (a subgroup of `[c]^⊥` with unimodular restricted form). The
//! value of the homomorphism on such data is `[c] ∧ ω_side` in
//! `∧³H₁ / H₁`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exterior::{omega_of, perp_family_cover, JohnsonTarget};
use crate::lattice::{LatticeError, LatticeSubgroup, Result, SymplecticLattice};
use crate::ratmat::{self, QMat, RationalSubspace};
use crate::{Int, Rat};

/// Homological data of a bounding pair map: the pair's class and one
/// complementary side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundingPairDatum {
    pub cls: Vec<Int>,
    pub side: LatticeSubgroup,
}

impl BoundingPairDatum {
    pub fn new(
        lattice: &SymplecticLattice,
        cls: Vec<Int>,
        side: LatticeSubgroup,
    ) -> Result<Self> {
        if !lattice.is_primitive(&cls)? {
            return Err(LatticeError::NotPrimitive);
        }
        for row in side.basis_rows() {
            if !lattice.form_eval(&row, &cls)?.is_zero() {
                return Err(LatticeError::Infeasible {
                    bound: alloc::string::String::from("side must lie in cls^⊥"),
                });
            }
        }
        // unimodular restricted form (checks nondegeneracy too)
        side.symplectic_basis(lattice)?;
        Ok(BoundingPairDatum { cls, side })
    }
}

/// A canonical coset representative in the Johnson target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JohnsonElement {
    pub value: Vec<Rat>,
}

/// `τ(T_{c,c'}) = [c] ∧ (Σ aᵢ ∧ bᵢ)` over a symplectic basis of the side,
/// reduced to the canonical coset representative. Independent of the
/// symplectic basis chosen for the side.
pub fn johnson_of_bp(
    lattice: &SymplecticLattice,
    target: &JohnsonTarget,
    bp: &BoundingPairDatum,
) -> Result<JohnsonElement> {
    let omega_side = omega_of(&target.two, lattice, &bp.side);
    let x = target
        .three
        .wedge_2_with_1(&target.two, &omega_side, &ratmat::rat_vec(&bp.cls));
    Ok(JohnsonElement { value: target.quotient_project(&x) })
}

/// The induced action of `T_w` on `∧³`, restricted to canonical coset
/// representatives: `x ↦ quotient_project(x · M∧³)`. The embedded `H₁` is
/// preserved, so this descends to the quotient.
pub struct TransvectionAction {
    /// Action on the full `∧³` (rows act on the right).
    pub full: QMat,
    target_dim: usize,
}

impl TransvectionAction {
    pub fn new(
        lattice: &SymplecticLattice,
        target: &JohnsonTarget,
        w: &[Int],
    ) -> Result<Self> {
        if !lattice.is_primitive(w)? {
            return Err(LatticeError::NotPrimitive);
        }
        let m = lattice.transvection_matrix(w)?;
        let full = target.three.induced_map(&m);
        // sanity: embedded H₁ is preserved
        for row in target.embedded_h1().basis_rows() {
            let img = full_apply(&full, &row);
            debug_assert!(target.embedded_h1().contains_vec(&img));
        }
        Ok(TransvectionAction { full, target_dim: target.dim_total() })
    }

    /// Apply to an element of `∧³`, returning the canonical representative.
    pub fn apply(&self, target: &JohnsonTarget, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.target_dim);
        target.quotient_project(&full_apply(&self.full, x))
    }
}

fn full_apply(m: &QMat, x: &[Rat]) -> Vec<Rat> {
    m.mul_row(x)
}

/// Fixed space of the transvection action on the quotient target, as a
/// canonical subspace of the coset-representative coordinates: the kernel
/// of `(action − identity)` descended to the quotient.
pub fn fixed_space_of_transvection(
    lattice: &SymplecticLattice,
    target: &JohnsonTarget,
    w: &[Int],
) -> Result<RationalSubspace> {
    let action = TransvectionAction::new(lattice, target, w)?;
    // Work in quotient coordinates: parameterize cosets by representatives
    // spanned by the non-pivot coordinates of the embedded H₁.
    let reps = quotient_representative_basis(target);
    // kernel of (q ∘ action − id) on representatives
    let mut rows = Vec::new();
    for r in &reps {
        let img = action.apply(target, r);
        let diff: Vec<Rat> = img.iter().zip(r).map(|(a, b)| a - b).collect();
        rows.push(diff);
    }
    let diff_mat = QMat::from_rows(rows);
    let ker = ratmat::kernel_of_rows(&diff_mat);
    // kernel coefficients combine representatives into fixed vectors
    let vecs: Vec<Vec<Rat>> = ker
        .iter()
        .map(|coef| {
            let mut acc = vec![Rat::zero(); target.dim_total()];
            for (c, r) in coef.iter().zip(&reps) {
                if c.is_zero() {
                    continue;
                }
                ratmat::add_assign_scaled(&mut acc, r, c);
            }
            target.quotient_project(&acc)
        })
        .collect();
    Ok(RationalSubspace::span(target.dim_total(), &vecs))
}

/// Canonical representatives spanning the quotient: unit vectors at the
/// non-pivot coordinates of the embedded `H₁`, reduced.
pub fn quotient_representative_basis(target: &JohnsonTarget) -> Vec<Vec<Rat>> {
    let pivots = target.embedded_h1().pivots();
    let mut out = Vec::new();
    for i in 0..target.dim_total() {
        if pivots.contains(&i) {
            continue;
        }
        let mut e = vec![Rat::zero(); target.dim_total()];
        e[i] = Rat::from(Int::from(1));
        debug_assert_eq!(target.quotient_project(&e), e);
        out.push(e);
    }
    out
}

/// Image of `∧³(w^⊥)` in the quotient target — the other route to the
/// fixed space.
pub fn perp_cube_image(
    lattice: &SymplecticLattice,
    target: &JohnsonTarget,
    w: &[Int],
) -> Result<RationalSubspace> {
    let perp = lattice.perp_of_vectors(&[w.to_vec()])?;
    let cube = target.three.power_of_subgroup(&perp);
    Ok(target.quotient_image(&cube))
}

/// One component of a fixed-family decomposition: the subset of the family
/// it avoids, and the element supported on that subset's perp.
#[derive(Clone, Debug)]
pub struct FixedFamilyComponent {
    pub subset: Vec<usize>,
    pub component: Vec<Rat>,
}

/// Decompose `x` (a canonical representative) as a sum of elements lying
/// in the quotient images of `∧³((W')^⊥)` over size-`m` subsets `W'` of the
/// family. Solves one global rational system; the first solution under
/// lexicographic pivot order is returned, so the output is deterministic.
pub fn decompose_into_fixed_family(
    lattice: &SymplecticLattice,
    target: &JohnsonTarget,
    x: &[Rat],
    family: &[Vec<Int>],
    m: usize,
) -> Result<Vec<FixedFamilyComponent>> {
    if !perp_family_cover(lattice, family, 3, m)? {
        let got = crate::exterior::perp_family_image_dim(lattice, family, 3, m)?;
        return Err(LatticeError::Infeasible {
            bound: alloc::format!(
                "perp family does not cover: image dim {got} < {}",
                target.three.dim()
            ),
        });
    }
    let subsets = subsets_of_size(family.len(), m);
    // stack generators per subset: columns are quotient images of the
    // wedge bases of each subset's perp cube
    let mut gens: Vec<Vec<Rat>> = Vec::new();
    let mut owner: Vec<usize> = Vec::new();
    for (si, subset) in subsets.iter().enumerate() {
        let sel: Vec<Vec<Int>> = subset.iter().map(|&i| family[i].clone()).collect();
        let perp = lattice.perp_of_vectors(&sel)?;
        let cube = target.three.power_of_subgroup(&perp);
        for row in target.quotient_image(&cube).basis_rows() {
            gens.push(row);
            owner.push(si);
        }
    }
    // solve x = Σ cᵢ gensᵢ by rref on [gensᵀ | x]
    let dim = target.dim_total();
    let mut aug = QMat::zero(dim, gens.len() + 1);
    for (col, g) in gens.iter().enumerate() {
        for r in 0..dim {
            aug[(r, col)] = g[r].clone();
        }
    }
    for r in 0..dim {
        aug[(r, gens.len())] = x[r].clone();
    }
    let pivots = aug.rref_in_place();
    // back-read the particular solution with free variables at zero
    let mut coeffs = vec![Rat::zero(); gens.len()];
    for (r, &pc) in pivots.iter().enumerate() {
        if pc == gens.len() {
            return Err(LatticeError::Infeasible {
                bound: alloc::string::String::from("element not in the family image"),
            });
        }
        coeffs[pc] = aug[(r, gens.len())].clone();
    }
    let mut per_subset: Vec<Vec<Rat>> = vec![vec![Rat::zero(); dim]; subsets.len()];
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        ratmat::add_assign_scaled(&mut per_subset[owner[i]], &gens[i], c);
    }
    let mut out = Vec::new();
    for (si, comp) in per_subset.into_iter().enumerate() {
        if ratmat::is_zero_rvec(&comp) {
            continue;
        }
        out.push(FixedFamilyComponent { subset: subsets[si].clone(), component: comp });
    }
    // verify: components sum to x and each lies in its subset's image
    let mut acc = vec![Rat::zero(); dim];
    for c in &out {
        for (a, b) in acc.iter_mut().zip(&c.component) {
            *a += b;
        }
        let sel: Vec<Vec<Int>> = c.subset.iter().map(|&i| family[i].clone()).collect();
        let perp = lattice.perp_of_vectors(&sel)?;
        let img = target.quotient_image(&target.three.power_of_subgroup(&perp));
        if !img.contains_vec(&c.component) {
            return Err(LatticeError::Infeasible {
                bound: alloc::string::String::from("component escaped its subset image"),
            });
        }
    }
    if acc != x.to_vec() {
        return Err(LatticeError::Infeasible {
            bound: alloc::string::String::from("components do not sum to the input"),
        });
    }
    Ok(out)
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{alpha, beta};
    use crate::ratmat::rat_vec;
    use crate::rng::SeededRng;

    #[test]
    fn johnson_of_bp_genus_one_side() {
        let l = SymplecticLattice::standard(3);
        let t = JohnsonTarget::new(&l);
        let side = LatticeSubgroup::from_vectors(&l, &[alpha(3, 2), beta(3, 2)]).unwrap();
        let bp = BoundingPairDatum::new(&l, alpha(3, 1), side).unwrap();
        let v = johnson_of_bp(&l, &t, &bp).unwrap();
        let expect = t.three.wedge3(
            &rat_vec(&alpha(3, 1)),
            &rat_vec(&alpha(3, 2)),
            &rat_vec(&beta(3, 2)),
        );
        assert_eq!(v.value, t.quotient_project(&expect));
        assert!(!ratmat::is_zero_rvec(&v.value));
    }

    #[test]
    fn johnson_of_bp_empty_side_is_zero() {
        let l = SymplecticLattice::standard(3);
        let t = JohnsonTarget::new(&l);
        let side = LatticeSubgroup::from_vectors(&l, &[]).unwrap();
        let bp = BoundingPairDatum::new(&l, alpha(3, 1), side).unwrap();
        let v = johnson_of_bp(&l, &t, &bp).unwrap();
        assert!(ratmat::is_zero_rvec(&v.value));
    }

    #[test]
    fn johnson_of_bp_side_invariance_and_complement() {
        let l = SymplecticLattice::standard(3);
        let t = JohnsonTarget::new(&l);
        // same subgroup, different generating sets
        let side1 = LatticeSubgroup::from_vectors(&l, &[alpha(3, 2), beta(3, 2)]).unwrap();
        let mixed = crate::lattice::add(&alpha(3, 2), &beta(3, 2));
        let side2 = LatticeSubgroup::from_vectors(&l, &[mixed, beta(3, 2)]).unwrap();
        assert_eq!(side1, side2);
        let bp1 = BoundingPairDatum::new(&l, alpha(3, 1), side1.clone()).unwrap();
        let v1 = johnson_of_bp(&l, &t, &bp1).unwrap();
        // complementary side: genus-2 complement within α₁^⊥
        let side_c =
            LatticeSubgroup::from_vectors(&l, &[alpha(3, 3), beta(3, 3)]).unwrap();
        let bp2 = BoundingPairDatum::new(&l, alpha(3, 1), side_c).unwrap();
        let v2 = johnson_of_bp(&l, &t, &bp2).unwrap();
        // the two sides' values sum to [c]∧ω ≡ 0 in the quotient
        let sum: Vec<Rat> = v1.value.iter().zip(&v2.value).map(|(a, b)| a + b).collect();
        assert!(ratmat::is_zero_rvec(&t.quotient_project(&sum)));
        // full complementary side (genus 2 in one block) gives the negative
        let side_full = LatticeSubgroup::from_vectors(
            &l,
            &[alpha(3, 2), beta(3, 2), alpha(3, 3), beta(3, 3)],
        )
        .unwrap();
        let bp3 = BoundingPairDatum::new(&l, alpha(3, 1), side_full).unwrap();
        let v3 = johnson_of_bp(&l, &t, &bp3).unwrap();
        // [c]∧ω_full ≡ [c]∧ω ≡ 0
        assert!(ratmat::is_zero_rvec(&v3.value));
    }

    #[test]
    fn transvection_action_examples() {
        let l = SymplecticLattice::standard(3);
        let t = JohnsonTarget::new(&l);
        let w = alpha(3, 1);
        let action = TransvectionAction::new(&l, &t, &w).unwrap();
        // β₁∧γ∧δ ↦ β₁∧γ∧δ + α₁∧γ∧δ for γ, δ ∉ {α₁, β₁}
        let g = rat_vec(&alpha(3, 2));
        let d = rat_vec(&beta(3, 3));
        let x = t.three.wedge3(&rat_vec(&beta(3, 1)), &g, &d);
        let img = full_apply(&action.full, &x);
        let expect: Vec<Rat> = x
            .iter()
            .zip(&t.three.wedge3(&rat_vec(&alpha(3, 1)), &g, &d))
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(img, expect);
        // elements of ∧³(w^⊥) are fixed
        let perp = l.perp_of_vectors(&[w.clone()]).unwrap();
        let rows = perp.basis_rows();
        let y = t.three.wedge3(&rat_vec(&rows[0]), &rat_vec(&rows[1]), &rat_vec(&rows[2]));
        assert_eq!(full_apply(&action.full, &y), y);
        // inverse transvection composes to the identity on ∧³
        let minv = l.transvection_inverse_matrix(&w).unwrap();
        let inv_action = t.three.induced_map(&minv);
        let composed = action.full.mul(&inv_action);
        assert_eq!(composed, QMat::identity(t.dim_total()));
        // non-primitive w is rejected
        let bad: Vec<Int> = alpha(3, 1).iter().map(|x| x * Int::from(2)).collect();
        assert!(TransvectionAction::new(&l, &t, &bad).is_err());
    }

    #[test]
    fn fixed_space_equals_perp_cube_image() {
        let l = SymplecticLattice::standard(3);
        let t = JohnsonTarget::new(&l);
        let w = alpha(3, 1);
        let fixed = fixed_space_of_transvection(&l, &t, &w).unwrap();
        let image = perp_cube_image(&l, &t, &w).unwrap();
        assert_eq!(fixed, image);
        // ∧³(α₁^⊥) has dim C(5,3) = 10 and meets the embedded H₁ in the
        // line Q·(α₁∧ω), so the image in the quotient has dim 9
        assert_eq!(fixed.dim(), 9);
        assert_eq!(t.dim_quotient(), 14);
        // strict inclusion: the whole target is not fixed
        assert!(fixed.dim() < t.dim_quotient());
        // g = 2: both routes agree (quotient is trivial there)
        let l2 = SymplecticLattice::standard(2);
        let t2 = JohnsonTarget::new(&l2);
        let w2 = alpha(2, 1);
        let fixed2 = fixed_space_of_transvection(&l2, &t2, &w2).unwrap();
        let image2 = perp_cube_image(&l2, &t2, &w2).unwrap();
        assert_eq!(fixed2, image2);
    }

    #[test]
    fn family_fixed_space_contains_perp_cube_image() {
        let l = SymplecticLattice::standard(4);
        let t = JohnsonTarget::new(&l);
        let fam = [alpha(4, 1), alpha(4, 2), alpha(4, 3)];
        // intersection of individual fixed spaces
        let mut acc: Option<RationalSubspace> = None;
        for w in &fam {
            let f = fixed_space_of_transvection(&l, &t, w).unwrap();
            acc = Some(match acc {
                None => f,
                Some(a) => a.intersect(&f),
            });
        }
        let inter = acc.unwrap();
        // image of ∧³(family^⊥) is fixed by the whole family. The reverse
        // containment fails in the quotient (classes like the image of
        // α₃∧ω split across the two perp cubes), so only this direction
        // holds; before quotienting the intersection identity is exact and
        // is asserted below.
        let perp = l.perp_of_vectors(&fam.to_vec()).unwrap();
        let img = t.quotient_image(&t.three.power_of_subgroup(&perp));
        assert!(inter.contains(&img));
        assert!(inter.dim() > img.dim());
        // pre-quotient support identity: ⋂ᵢ ∧³(wᵢ^⊥) = ∧³(W^⊥)
        let mut cube_acc: Option<RationalSubspace> = None;
        for w in &fam {
            let p = l.perp_of_vectors(&[w.clone()]).unwrap();
            let cube = t.three.power_of_subgroup(&p);
            cube_acc = Some(match cube_acc {
                None => cube,
                Some(a) => a.intersect(&cube),
            });
        }
        assert_eq!(cube_acc.unwrap(), t.three.power_of_subgroup(&perp));
    }

    #[test]
    fn decompose_into_fixed_family_small() {
        let l = SymplecticLattice::standard(4);
        let t = JohnsonTarget::new(&l);
        let fam = vec![alpha(4, 1), alpha(4, 2), alpha(4, 3), alpha(4, 4)];
        let mut rng = SeededRng::new(3);
        // random representative
        let reps = quotient_representative_basis(&t);
        let mut x = vec![Rat::zero(); t.dim_total()];
        for r in &reps {
            let c = Rat::from(Int::from(rng.int_in(-2, 2)));
            ratmat::add_assign_scaled(&mut x, r, &c);
        }
        let x = t.quotient_project(&x);
        let comps = decompose_into_fixed_family(&l, &t, &x, &fam, 1).unwrap();
        assert!(!comps.is_empty());
        let mut acc = vec![Rat::zero(); t.dim_total()];
        for c in &comps {
            for (a, b) in acc.iter_mut().zip(&c.component) {
                *a += b;
            }
        }
        assert_eq!(acc, x);
        // element already fixed by the whole family decomposes trivially
        let perp = l.perp_of_vectors(&fam).unwrap();
        let rows = perp.basis_rows();
        let y = t.three.wedge3(
            &rat_vec(&rows[0]),
            &rat_vec(&rows[1]),
            &rat_vec(&rows[2]),
        );
        let y = t.quotient_project(&y);
        let comps = decompose_into_fixed_family(&l, &t, &y, &fam, 1).unwrap();
        let mut acc = vec![Rat::zero(); t.dim_total()];
        for c in &comps {
            for (a, b) in acc.iter_mut().zip(&c.component) {
                *a += b;
            }
        }
        assert_eq!(acc, y);
    }
}
