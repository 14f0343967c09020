//! Cells of the quotient complex as cyclic decompositions of `[a]^⊥`,
//! the boundary operator, Bestvina–Margalit tori and their relations.
//!
//! A `k`-cell is a cyclically ordered tuple of `k+1` pieces: saturated
//! subgroups of `[a]^⊥` containing `[a]`, pairwise orthogonal, pairwise
//! meeting exactly in `Z[a]`, and summing to `[a]^⊥`. Genus adds along
//! this structure, so the piece genera always sum to `g − 1`.
//!
//! Cells are stored in a canonical rotation (lexicographically least piece
//! first). A rotation by one step of a `p`-piece tuple permutes the
//! underlying `p` vertices cyclically, which has sign `(−1)^{p−1}`;
//! canonicalization tracks this parity so that chain arithmetic is
//! consistent. The boundary operator uses delete-a-vertex signs, under
//! which `∂∘∂ = 0` holds on the nose.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exterior::WedgeSpace;
use crate::lattice::{LatticeError, LatticeSubgroup, Result, SymplecticLattice};
use crate::ratmat::{self, RationalSubspace};
use crate::{Int, Rat};

/// The ambient data every cell refers to: the lattice and the
/// distinguished class `[a]` with its perp.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub lattice: SymplecticLattice,
    pub a_class: Vec<Int>,
    pub a_perp: LatticeSubgroup,
    pub a_span: LatticeSubgroup,
}

impl Ambient {
    pub fn standard(genus: usize) -> Self {
        let lattice = SymplecticLattice::standard(genus);
        let a_class = crate::lattice::alpha(genus, 1);
        let a_perp = lattice.perp_of_vectors(&[a_class.clone()]).unwrap();
        let a_span = LatticeSubgroup::from_vectors(&lattice, &[a_class.clone()]).unwrap();
        Ambient { lattice, a_class, a_perp, a_span }
    }

    pub fn genus(&self) -> usize {
        self.lattice.rank() / 2
    }
}

/// One piece of a cyclic decomposition: a saturated subgroup of `[a]^⊥`
/// containing `[a]`, with degenerate part exactly `Z[a]`, unimodular
/// nondegenerate part, and rank `2·genus + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Piece {
    subgroup: LatticeSubgroup,
}

impl Piece {
    pub fn new(amb: &Ambient, subgroup: LatticeSubgroup) -> Result<Self> {
        if !subgroup.contains(&amb.a_class) {
            return Err(LatticeError::Infeasible {
                bound: String::from("piece must contain [a]"),
            });
        }
        if !amb.a_perp.contains_subgroup(&subgroup) {
            return Err(LatticeError::Infeasible {
                bound: String::from("piece must lie in [a]^⊥"),
            });
        }
        if !subgroup.is_saturated() {
            return Err(LatticeError::NotSaturated);
        }
        let degenerate = subgroup.degenerate_part(&amb.lattice)?;
        if degenerate.basis() != amb.a_span.basis() {
            return Err(LatticeError::Infeasible {
                bound: String::from("degenerate part of a piece must be exactly Z[a]"),
            });
        }
        let g = subgroup.genus(&amb.lattice);
        if subgroup.rank() != 2 * g + 1 {
            return Err(LatticeError::Infeasible {
                bound: format!("piece rank {} ≠ 2·genus + 1 = {}", subgroup.rank(), 2 * g + 1),
            });
        }
        // unimodular nondegenerate part
        let (_pairs, rest) = subgroup.symplectic_basis_split(&amb.lattice)?;
        debug_assert_eq!(rest.len(), 1);
        Ok(Piece { subgroup })
    }

    pub fn subgroup(&self) -> &LatticeSubgroup {
        &self.subgroup
    }

    pub fn genus(&self, amb: &Ambient) -> usize {
        self.subgroup.genus(&amb.lattice)
    }

    /// Merge with another piece: the saturated sum.
    pub fn merge(&self, amb: &Ambient, other: &Piece) -> Result<Piece> {
        let sum = self.subgroup.sum(&amb.lattice, &other.subgroup)?;
        Piece::new(amb, sum)
    }
}

/// A `k`-cell: `k+1` pieces in canonical cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicCell {
    pieces: Vec<Piece>,
}

impl CyclicCell {
    /// Validate and canonicalize a tuple of pieces. Returns the canonical
    /// cell and the orientation sign of the input tuple relative to it.
    pub fn new(amb: &Ambient, pieces: Vec<Piece>) -> Result<(Self, i8)> {
        if pieces.len() < 2 {
            return Err(LatticeError::Infeasible {
                bound: String::from("a cell needs at least two pieces"),
            });
        }
        // a genus-0 piece is an annulus between isotopic curves
        if let Some(p) = pieces.iter().find(|p| p.genus(amb) == 0) {
            let _ = p;
            return Err(LatticeError::Infeasible {
                bound: String::from("every piece of a cell must have genus ≥ 1"),
            });
        }
        // pairwise: orthogonal, intersect exactly in Z[a]
        for i in 0..pieces.len() {
            for j in i + 1..pieces.len() {
                let pi = &pieces[i].subgroup;
                let pj = &pieces[j].subgroup;
                for ri in pi.basis_rows() {
                    for rj in pj.basis_rows() {
                        if !amb.lattice.form_eval(&ri, &rj)?.is_zero() {
                            return Err(LatticeError::Infeasible {
                                bound: String::from("pieces must be pairwise orthogonal"),
                            });
                        }
                    }
                }
                let inter = pi.intersect(&amb.lattice, pj)?;
                if inter.basis() != amb.a_span.basis() {
                    return Err(LatticeError::Infeasible {
                        bound: String::from("pieces must intersect exactly in Z[a]"),
                    });
                }
            }
        }
        // sum saturates to [a]^⊥
        let mut sum = pieces[0].subgroup.clone();
        for p in &pieces[1..] {
            sum = sum.sum(&amb.lattice, &p.subgroup)?;
        }
        if sum.basis() != amb.a_perp.basis() {
            return Err(LatticeError::Infeasible {
                bound: String::from("pieces must sum to [a]^⊥"),
            });
        }
        // genus bookkeeping: Σ genus = g − 1 (forced by the above, checked)
        let total: usize = pieces.iter().map(|p| p.genus(amb)).sum();
        debug_assert_eq!(total, amb.genus() - 1);
        let (cell, sign) = canonical_rotation(pieces);
        Ok((cell, sign))
    }

    pub fn dim(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Genus tuple in the canonical cyclic order.
    pub fn genus_tuple(&self, amb: &Ambient) -> Vec<usize> {
        self.pieces.iter().map(|p| p.genus(amb)).collect()
    }

    /// The reversed cyclic order (the dual cell for 2-cells). Returns the
    /// canonical cell and the parity of the reversed tuple relative to it.
    pub fn reversed(&self) -> (CyclicCell, i8) {
        let mut rev = self.pieces.clone();
        rev.reverse();
        canonical_rotation(rev)
    }

    /// Every class in `v` lies in some piece.
    pub fn compatible_with(&self, v: &[Vec<Int>]) -> bool {
        v.iter().all(|w| self.pieces.iter().any(|p| p.subgroup.contains(w)))
    }
}

/// Rotate to put the lexicographically least piece first; the parity of a
/// one-step rotation of `p` pieces is `(−1)^{p−1}`.
fn canonical_rotation(pieces: Vec<Piece>) -> (CyclicCell, i8) {
    let p = pieces.len();
    let min_idx = pieces
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
        .unwrap();
    let rotated: Vec<Piece> = (0..p).map(|i| pieces[(min_idx + i) % p].clone()).collect();
    // sign = (one-step parity)^min_idx
    let step_is_odd = (p - 1) % 2 == 1;
    let sign = if step_is_odd && min_idx % 2 == 1 { -1 } else { 1 };
    (CyclicCell { pieces: rotated }, sign)
}

/// A formal rational chain of cells of one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Chain {
    terms: BTreeMap<CyclicCell, Rat>,
}

impl Chain {
    pub fn zero() -> Self {
        Chain { terms: BTreeMap::new() }
    }

    pub fn from_cell(cell: CyclicCell, coeff: Rat) -> Self {
        let mut c = Chain::zero();
        c.add_cell(cell, coeff);
        c
    }

    pub fn add_cell(&mut self, cell: CyclicCell, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(cell).or_insert_with(Rat::zero);
        *entry += coeff;
        // prune zeros eagerly so equality is canonical
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add_assign(&mut self, other: &Chain) {
        for (cell, coeff) in &other.terms {
            self.add_cell(cell.clone(), coeff.clone());
        }
    }

    pub fn scaled(&self, c: &Rat) -> Chain {
        if c.is_zero() {
            return Chain::zero();
        }
        Chain { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn sub_assign(&mut self, other: &Chain) {
        for (cell, coeff) in &other.terms {
            self.add_cell(cell.clone(), -coeff.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CyclicCell, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, cell: &CyclicCell) -> Rat {
        self.terms.get(cell).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Boundary of a single cell, as a chain of one lower dimension.
///
/// With vertices `c_i` between pieces `H_{i−1}` and `H_i`, deleting `c_i`
/// merges those two pieces; the term carries the simplicial sign `(−1)^i`
/// relative to the stored canonical orientation, composed with the
/// canonicalization parity of the resulting tuple.
pub fn boundary(amb: &Ambient, cell: &CyclicCell) -> Result<Chain> {
    let p = cell.pieces.len();
    if p < 3 {
        // an edge's boundary is vertex − vertex = 0: one vertex total
        return Ok(Chain::zero());
    }
    let mut out = Chain::zero();
    for i in 0..p {
        // delete vertex c_i: merge H_{i−1} and H_i (indices mod p)
        let prev = (i + p - 1) % p;
        let merged = cell.pieces[prev].merge(amb, &cell.pieces[i])?;
        // remaining tuple starts after the deleted vertex's successor
        // vertex order (c_0, …, ĉ_i, …): piece after c_0 for i ≥ 1 is H_0;
        // for i = 0 the first remaining vertex is c_1 whose next piece is H_1
        let mut tuple = Vec::with_capacity(p - 1);
        if i == 0 {
            // pieces H_1, …, H_{p−2}, merged(H_{p−1}+H_0)
            for j in 1..p - 1 {
                tuple.push(cell.pieces[j].clone());
            }
            tuple.push(merged);
        } else {
            // H_0, …, H_{i−2}, merged(H_{i−1}+H_i), H_{i+1}, …, H_{p−1}
            for j in 0..p {
                if j == prev {
                    tuple.push(merged.clone());
                } else if j == i {
                    continue;
                } else {
                    tuple.push(cell.pieces[j].clone());
                }
            }
        }
        let (canon, parity) = canonical_rotation(tuple);
        let base_sign = if i % 2 == 0 { 1i8 } else { -1i8 };
        let sign = Rat::from(Int::from((base_sign * parity) as i64));
        out.add_cell(canon, sign);
    }
    Ok(out)
}

/// Boundary extended linearly to chains.
pub fn boundary_chain(amb: &Ambient, chain: &Chain) -> Result<Chain> {
    let mut out = Chain::zero();
    for (cell, coeff) in chain.terms() {
        let b = boundary(amb, cell)?;
        out.add_assign(&b.scaled(coeff));
    }
    Ok(out)
}

/// An unordered Bestvina–Margalit torus: the common piece set of a 2-cell
/// and its dual.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BmTorus {
    /// Sorted pieces.
    pieces: Vec<Piece>,
}

impl BmTorus {
    pub fn of_cell(cell: &CyclicCell) -> BmTorus {
        assert_eq!(cell.dim(), 2, "BM tori come from 2-cells");
        let mut pieces = cell.pieces.clone();
        pieces.sort();
        BmTorus { pieces }
    }

    pub fn new(amb: &Ambient, pieces: Vec<Piece>) -> Result<(BmTorus, CyclicCell)> {
        let (cell, _sign) = CyclicCell::new(amb, pieces)?;
        if cell.dim() != 2 {
            return Err(LatticeError::Infeasible {
                bound: String::from("BM tori need exactly three pieces"),
            });
        }
        Ok((BmTorus::of_cell(&cell), cell))
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// The two cells supporting the torus: canonical cell and its dual.
    pub fn cells(&self, amb: &Ambient) -> Result<(CyclicCell, CyclicCell)> {
        let (cell, _) = CyclicCell::new(amb, self.pieces.clone())?;
        let (dual, _) = cell.reversed();
        Ok((cell, dual))
    }

    pub fn genus_multiset(&self, amb: &Ambient) -> Vec<usize> {
        let mut g: Vec<usize> = self.pieces.iter().map(|p| p.genus(amb)).collect();
        g.sort();
        g
    }
}

/// The fundamental 2-cycle of a Bestvina–Margalit torus: `σ − σ'` with the
/// sign normalized to `+1` on the canonical-key-smaller cell. Asserts the
/// cycle condition.
pub fn bm_class(amb: &Ambient, torus: &BmTorus) -> Result<Chain> {
    let (cell, dual) = torus.cells(amb)?;
    if cell == dual {
        return Err(LatticeError::Infeasible {
            bound: String::from("degenerate torus: cell equals its dual"),
        });
    }
    let mut z = Chain::zero();
    if cell < dual {
        z.add_cell(cell, Rat::one());
        z.add_cell(dual, -Rat::one());
    } else {
        z.add_cell(dual.clone(), Rat::one());
        z.add_cell(cell, -Rat::one());
    }
    let b = boundary_chain(amb, &z)?;
    if !b.is_zero() {
        return Err(LatticeError::Infeasible {
            bound: String::from("BM class failed the cycle condition"),
        });
    }
    Ok(z)
}

/// Recognize a 2-chain as a combination of BM classes. Errors if any cell's
/// dual is missing or carries the wrong coefficient.
pub fn chain_as_bm_combination(_amb: &Ambient, chain: &Chain) -> Result<Vec<(BmTorus, Rat)>> {
    let mut seen: BTreeMap<BmTorus, Rat> = BTreeMap::new();
    let mut visited: Vec<CyclicCell> = Vec::new();
    for (cell, coeff) in chain.terms() {
        if visited.contains(cell) {
            continue;
        }
        let (dual, _) = cell.reversed();
        let dual_coeff = chain.coeff(&dual);
        if dual_coeff != -coeff.clone() {
            return Err(LatticeError::Infeasible {
                bound: String::from("chain is not a combination of BM fundamental classes"),
            });
        }
        let torus = BmTorus::of_cell(cell);
        // bm_class has +1 on the smaller cell
        let lambda = if cell < &dual { coeff.clone() } else { -coeff.clone() };
        seen.insert(torus, lambda);
        visited.push(cell.clone());
        visited.push(dual);
    }
    Ok(seen.into_iter().collect())
}

/// An edge presented with a designated piece (its first in some order);
/// used when composing edges.
pub fn compose_edges(
    amb: &Ambient,
    h1: &Piece,
    h1p: &Piece,
) -> Result<CyclicCell> {
    let inter = h1.subgroup().intersect(&amb.lattice, h1p.subgroup())?;
    if inter.basis() != amb.a_span.basis() {
        return Err(LatticeError::Infeasible {
            bound: String::from("designated pieces must intersect exactly in Z[a]"),
        });
    }
    let merged = h1.merge(amb, h1p)?;
    let comp_sub = {
        let perp = amb.lattice.perp(merged.subgroup())?;
        perp.intersect(&amb.lattice, &amb.a_perp)?
    };
    let comp = Piece::new(amb, comp_sub)?;
    let (cell, _) = CyclicCell::new(amb, vec![merged, comp])?;
    Ok(cell)
}

/// Certificate of the torus-addition relation built from a four-piece
/// configuration `(P₀, P₁, P₂, P₃)`:
///
/// * `T_y` with pieces `{P₀, P₁, P₂+P₃}`,
/// * `T_z` with pieces `{P₀, P₂, P₁+P₃}`,
/// * `T_yz` with pieces `{P₀, P₁+P₂, P₃}`,
///
/// and the 3-chain `τ₀ − τ₁ + τ₂` (with `τ₀ = (P₀,P₁,P₂,P₃)`,
/// `τ₁ = (P₁,P₀,P₂,P₃)`, `τ₂ = (P₁,P₂,P₀,P₃)`) whose boundary is supported
/// on the six cells of the three tori with unit coefficients.
#[derive(Clone, Debug)]
pub struct BmSumCertificate {
    pub chain3: Chain,
    pub torus_y: BmTorus,
    pub torus_z: BmTorus,
    pub torus_yz: BmTorus,
    /// Coefficients `(λ_y, λ_z, λ_yz)` with `∂(chain3) = λ_y·[BM_y] +
    /// λ_z·[BM_z] + λ_yz·[BM_yz]`; all are ±1 and λ_y = λ_z = −λ_yz.
    pub lambdas: (Rat, Rat, Rat),
    pub verified: bool,
}

/// Build and verify the torus-addition certificate for a 4-piece
/// configuration.
pub fn bm_sum_certificate(
    amb: &Ambient,
    p0: &Piece,
    p1: &Piece,
    p2: &Piece,
    p3: &Piece,
) -> Result<BmSumCertificate> {
    let t_y = BmTorus::new(amb, vec![p0.clone(), p1.clone(), p2.merge(amb, p3)?])?.0;
    let t_z = BmTorus::new(amb, vec![p0.clone(), p2.clone(), p1.merge(amb, p3)?])?.0;
    let t_yz = BmTorus::new(amb, vec![p0.clone(), p1.merge(amb, p2)?, p3.clone()])?.0;
    let mut chain3 = Chain::zero();
    let tuples: [(Vec<Piece>, i64); 3] = [
        (vec![p0.clone(), p1.clone(), p2.clone(), p3.clone()], 1),
        (vec![p1.clone(), p0.clone(), p2.clone(), p3.clone()], -1),
        (vec![p1.clone(), p2.clone(), p0.clone(), p3.clone()], 1),
    ];
    for (tuple, c) in tuples {
        let (cell, sign) = CyclicCell::new(amb, tuple)?;
        chain3.add_cell(cell, Rat::from(Int::from(c * sign as i64)));
    }
    let d = boundary_chain(amb, &chain3)?;
    // express ∂(chain3) over the three BM classes
    let by = bm_class(amb, &t_y)?;
    let bz = bm_class(amb, &t_z)?;
    let byz = bm_class(amb, &t_yz)?;
    let combo = chain_as_bm_combination(amb, &d)?;
    let mut ly = Rat::zero();
    let mut lz = Rat::zero();
    let mut lyz = Rat::zero();
    let mut verified = combo.len() == 3;
    for (torus, lambda) in combo {
        if torus == t_y {
            ly = lambda;
        } else if torus == t_z {
            lz = lambda;
        } else if torus == t_yz {
            lyz = lambda;
        } else {
            verified = false;
        }
    }
    // Unit coefficients: the relation [BM_y] + [BM_z] = [BM_yz] holds after
    // reorienting each torus, and the canonical sign of each fundamental
    // class is an independent normalization, so only |λ| = 1 is invariant.
    let unit = |r: &Rat| r.is_one() || (-r).is_one();
    verified = verified && unit(&ly) && unit(&lz) && unit(&lyz);
    // double-check via direct chain arithmetic
    if verified {
        let mut rhs = by.scaled(&ly);
        rhs.add_assign(&bz.scaled(&lz));
        rhs.add_assign(&byz.scaled(&lyz));
        verified = rhs == d;
    }
    Ok(BmSumCertificate {
        chain3,
        torus_y: t_y,
        torus_z: t_z,
        torus_yz: t_yz,
        lambdas: (ly, lz, lyz),
        verified,
    })
}

/// `∧²` model of `H₁` of the complex: values live in
/// `∧²([a]^⊥ ⊗ Q) / Q·ω'_a` in the coordinates of the HNF basis of
/// `[a]^⊥`.
#[derive(Clone, Debug)]
pub struct H1Model {
    pub two: WedgeSpace,
    omega_prime: Vec<Rat>,
    omega_span: RationalSubspace,
}

impl H1Model {
    pub fn new(amb: &Ambient) -> Result<Self> {
        let r = amb.a_perp.rank();
        let two = WedgeSpace::new(r, 2);
        // ω'_a = Σ aᵢ ∧ bᵢ over a symplectic basis of [a]^⊥ (the degenerate
        // [a] direction contributes nothing), in perp coordinates
        let (pairs, _deg) = amb.a_perp.symplectic_basis_split(&amb.lattice)?;
        let mut omega_prime = vec![Rat::zero(); two.dim()];
        for (a, b) in &pairs {
            let ca = coords_in(&amb.a_perp, a);
            let cb = coords_in(&amb.a_perp, b);
            let w = two.wedge2(&ca, &cb);
            for (dst, src) in omega_prime.iter_mut().zip(&w) {
                *dst += src;
            }
        }
        let omega_span = RationalSubspace::span(two.dim(), &[omega_prime.clone()]);
        Ok(H1Model { two, omega_prime, omega_span })
    }

    pub fn omega_prime(&self) -> &[Rat] {
        &self.omega_prime
    }

    /// Characteristic element `ω_H` of a piece, reduced mod `Q·ω'_a`.
    pub fn class_of_piece(&self, amb: &Ambient, piece: &Piece) -> Result<Vec<Rat>> {
        let (pairs, _deg) = piece.subgroup().symplectic_basis_split(&amb.lattice)?;
        let mut acc = vec![Rat::zero(); self.two.dim()];
        for (a, b) in &pairs {
            let ca = coords_in(&amb.a_perp, a);
            let cb = coords_in(&amb.a_perp, b);
            let w = self.two.wedge2(&ca, &cb);
            for (dst, src) in acc.iter_mut().zip(&w) {
                *dst += src;
            }
        }
        Ok(self.omega_span.reduce(&acc))
    }

    /// Class of an oriented edge: `ω` of its first piece in canonical
    /// order. Reversing the edge negates the class modulo `ω'_a`.
    pub fn edge_class(&self, amb: &Ambient, edge: &CyclicCell) -> Result<Vec<Rat>> {
        assert_eq!(edge.dim(), 1);
        self.class_of_piece(amb, &edge.pieces()[0])
    }

    /// Reduction modulo `Q·ω'_a` (canonical representatives).
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        self.omega_span.reduce(v)
    }
}

fn coords_in(sub: &LatticeSubgroup, v: &[Int]) -> Vec<Rat> {
    let c = sub.coordinates(v).expect("vector lies in the subgroup");
    ratmat::rat_vec(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::rng::SeededRng;

    fn std_cell(amb: &Ambient, genera: &[usize]) -> CyclicCell {
        gen::block_cell(amb, genera).unwrap()
    }

    #[test]
    fn piece_invariants_enforced() {
        let amb = Ambient::standard(3);
        // a valid piece: span{α₁, α₂, β₂}
        let s = LatticeSubgroup::from_vectors(
            &amb.lattice,
            &[amb.a_class.clone(), crate::lattice::alpha(3, 2), crate::lattice::beta(3, 2)],
        )
        .unwrap();
        assert!(Piece::new(&amb, s).is_ok());
        // missing [a]: rejected
        let s = LatticeSubgroup::from_vectors(
            &amb.lattice,
            &[crate::lattice::alpha(3, 2), crate::lattice::beta(3, 2)],
        )
        .unwrap();
        assert!(Piece::new(&amb, s).is_err());
        // not inside [a]^⊥: rejected
        let s = LatticeSubgroup::from_vectors(
            &amb.lattice,
            &[amb.a_class.clone(), crate::lattice::beta(3, 1)],
        )
        .unwrap();
        assert!(Piece::new(&amb, s).is_err());
    }

    #[test]
    fn cell_construction_and_keys() {
        let amb = Ambient::standard(4);
        let cell = std_cell(&amb, &[1, 2]);
        assert_eq!(cell.dim(), 1);
        // rotations canonicalize to the same cell
        let mut rotated = cell.pieces().to_vec();
        rotated.rotate_left(1);
        let (canon, _sign) = CyclicCell::new(&amb, rotated).unwrap();
        assert_eq!(canon, cell);
        // a 2-cell and its reverse differ
        let cell2 = std_cell(&amb, &[1, 1, 1]);
        let (dual, _) = cell2.reversed();
        assert_ne!(cell2, dual);
        // genus sums to g − 1
        assert_eq!(cell2.genus_tuple(&amb).iter().sum::<usize>(), 3);
    }

    #[test]
    fn edge_rotation_parity_is_minus() {
        let amb = Ambient::standard(4);
        let cell = std_cell(&amb, &[1, 2]);
        let mut flipped = cell.pieces().to_vec();
        flipped.rotate_left(1);
        let (canon, sign) = CyclicCell::new(&amb, flipped).unwrap();
        assert_eq!(canon, cell);
        assert_eq!(sign, -1);
    }

    #[test]
    fn boundary_of_two_cell_hits_three_edges() {
        let amb = Ambient::standard(4);
        let cell = std_cell(&amb, &[1, 1, 1]);
        let b = boundary(&amb, &cell).unwrap();
        assert_eq!(b.len(), 3);
        for (edge, coeff) in b.terms() {
            assert_eq!(edge.dim(), 1);
            assert!(coeff.is_one() || (-coeff).is_one());
        }
        // edges have zero boundary
        let edge = std_cell(&amb, &[1, 2]);
        assert!(boundary(&amb, &edge).unwrap().is_zero());
    }

    #[test]
    fn boundary_squares_to_zero() {
        // seeded 3-cells at g = 5 and 6, mixed coordinates
        for (g, seed) in [(5usize, 1u64), (5, 2), (6, 3), (6, 4)] {
            let amb = Ambient::standard(g);
            let mut rng = SeededRng::new(seed);
            let genera = gen::random_composition(amb.genus() - 1, 4, &mut rng);
            let cell = gen::random_cell(&amb, &genera, &mut rng).unwrap();
            assert_eq!(cell.dim(), 3);
            let b = boundary(&amb, &cell).unwrap();
            let bb = boundary_chain(&amb, &b).unwrap();
            assert!(bb.is_zero(), "∂∂ ≠ 0 at g={g} seed={seed}");
        }
    }

    #[test]
    fn bm_class_is_normalized_cycle() {
        let amb = Ambient::standard(4);
        let cell = std_cell(&amb, &[1, 1, 1]);
        let torus = BmTorus::of_cell(&cell);
        let z = bm_class(&amb, &torus).unwrap();
        assert_eq!(z.len(), 2);
        assert!(boundary_chain(&amb, &z).unwrap().is_zero());
        // recomputing from the dual gives the same normalized cycle
        let (dual, _) = cell.reversed();
        let z2 = bm_class(&amb, &BmTorus::of_cell(&dual)).unwrap();
        assert_eq!(z, z2);
        // coefficient +1 on the smaller cell
        let (c1, _) = torus.cells(&amb).unwrap();
        let (d1, _) = c1.reversed();
        let smaller = if c1 < d1 { c1 } else { d1 };
        assert!(z.coeff(&smaller).is_one());
    }

    #[test]
    fn compose_edges_examples() {
        let amb = Ambient::standard(5);
        // disjoint-support pieces of genus 1 and 2 compose to genus 3
        // (pick pieces by genus: the stored rotation is canonical)
        let cell = std_cell(&amb, &[1, 2, 1]);
        let h1 = cell.pieces().iter().find(|p| p.genus(&amb) == 1).unwrap().clone();
        let h1p = cell.pieces().iter().find(|p| p.genus(&amb) == 2).unwrap().clone();
        let edge = compose_edges(&amb, &h1, &h1p).unwrap();
        let genera = edge.genus_tuple(&amb);
        assert!(genera.contains(&3));
        // composing a piece with the complementary piece of its own edge
        // degenerates
        let e = std_cell(&amb, &[2, 2]);
        let res = compose_edges(&amb, &e.pieces()[0], &e.pieces()[1]);
        assert!(res.is_err());
    }

    #[test]
    fn bm_sum_certificate_minimal_and_permuted() {
        let amb = Ambient::standard(5);
        let cell = std_cell(&amb, &[1, 1, 1, 1]);
        let ps = cell.pieces();
        let cert = bm_sum_certificate(&amb, &ps[0], &ps[1], &ps[2], &ps[3]).unwrap();
        assert!(cert.verified);
        // swapping the roles of y and z swaps the summands
        let cert2 = bm_sum_certificate(&amb, &ps[0], &ps[2], &ps[1], &ps[3]).unwrap();
        assert!(cert2.verified);
        assert_eq!(cert.torus_y, cert2.torus_z);
        assert_eq!(cert.torus_z, cert2.torus_y);
        assert_eq!(cert.torus_yz, cert2.torus_yz);
    }

    #[test]
    fn bm_sum_certificate_seeded_trials() {
        let mut rng = SeededRng::new(77);
        for trial in 0..10 {
            let g = 5 + (trial % 3) as usize;
            let amb = Ambient::standard(g);
            let genera = gen::random_composition(amb.genus() - 1, 4, &mut rng);
            let cell = gen::random_cell(&amb, &genera, &mut rng).unwrap();
            let ps = cell.pieces();
            let cert = bm_sum_certificate(&amb, &ps[0], &ps[1], &ps[2], &ps[3]).unwrap();
            assert!(cert.verified, "trial {trial} failed");
        }
    }

    #[test]
    fn compatible_with_examples() {
        let amb = Ambient::standard(4);
        let cell = std_cell(&amb, &[1, 2]);
        // [a] is in every piece
        assert!(cell.compatible_with(&[amb.a_class.clone()]));
        // a piece's own basis vector is compatible
        let v = cell.pieces()[0].subgroup().basis_rows()[1].clone();
        assert!(cell.compatible_with(&[v]));
        // a class spanning across two pieces is not
        let v0 = cell.pieces()[0].subgroup().basis_rows().into_iter()
            .find(|r| !amb.a_span.contains(r)).unwrap();
        let v1 = cell.pieces()[1].subgroup().basis_rows().into_iter()
            .find(|r| !amb.a_span.contains(r)).unwrap();
        let cross = crate::lattice::add(&v0, &v1);
        assert!(!cell.compatible_with(&[cross]));
    }

    #[test]
    fn h1_model_edge_classes() {
        let amb = Ambient::standard(4);
        let model = H1Model::new(&amb).unwrap();
        // the two pieces' classes sum to ω'_a ≡ 0
        let edge = std_cell(&amb, &[1, 2]);
        let c0 = model.class_of_piece(&amb, &edge.pieces()[0]).unwrap();
        let c1 = model.class_of_piece(&amb, &edge.pieces()[1]).unwrap();
        let sum: Vec<Rat> = c0.iter().zip(&c1).map(|(a, b)| a + b).collect();
        assert!(ratmat::is_zero_rvec(&model.reduce(&sum)));
        // genus-1 piece: a single wedge term before reduction
        // (just check the class is nonzero)
        assert!(!ratmat::is_zero_rvec(&c0));
        // signed sum of the three edge classes of a 2-cell vanishes
        let cell = std_cell(&amb, &[1, 1, 1]);
        let b = boundary(&amb, &cell).unwrap();
        let mut acc = vec![Rat::zero(); model.two.dim()];
        for (e, coeff) in b.terms() {
            let c = model.edge_class(&amb, e).unwrap();
            ratmat::add_assign_scaled(&mut acc, &c, coeff);
        }
        assert!(ratmat::is_zero_rvec(&model.reduce(&acc)));
    }
}
