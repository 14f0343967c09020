//! Seeded construction of cells, families and chains.
//!
//! Cells are built by choosing disjoint symplectic blocks in standard
//! coordinates and then mixing with seeded products of transvections that
//! stabilize `α₁` (and optionally a family), so every generated cell is
//! genuinely realizable and group orbits are exercised.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::complex::{Ambient, CyclicCell, Piece};
use crate::intmat::IntMat;
use crate::lattice::{alpha, beta, LatticeSubgroup, Result};
use crate::rng::SeededRng;
use crate::Int;

/// A composition of `total` into `parts` positive summands, seeded.
pub fn random_composition(total: usize, parts: usize, rng: &mut SeededRng) -> Vec<usize> {
    assert!(parts >= 1 && total >= parts);
    let mut out = vec![1usize; parts];
    for _ in 0..total - parts {
        let i = rng.below(parts as u64) as usize;
        out[i] += 1;
    }
    out
}

/// The block cell: piece `i` is `span{α₁} ⊕ span{α_j, β_j : j ∈ block i}`
/// with consecutive index blocks of the requested genera.
pub fn block_cell(amb: &Ambient, genera: &[usize]) -> Result<CyclicCell> {
    let g = amb.genus();
    let total: usize = genera.iter().sum();
    assert_eq!(total, g - 1, "piece genera must sum to g − 1");
    let mut next = 2usize;
    let mut pieces = Vec::new();
    for &gi in genera {
        let mut gens = vec![amb.a_class.clone()];
        for j in next..next + gi {
            gens.push(alpha(g, j));
            gens.push(beta(g, j));
        }
        next += gi;
        let sub = LatticeSubgroup::from_vectors(&amb.lattice, &gens)?;
        pieces.push(Piece::new(amb, sub)?);
    }
    Ok(CyclicCell::new(amb, pieces)?.0)
}

/// Apply a symplectic matrix (row action) to a cell.
pub fn map_cell(amb: &Ambient, cell: &CyclicCell, m: &IntMat) -> Result<CyclicCell> {
    let mut pieces = Vec::new();
    for p in cell.pieces() {
        let rows: Vec<Vec<Int>> =
            p.subgroup().basis_rows().iter().map(|r| m.mul_row(r)).collect();
        let sub = LatticeSubgroup::from_vectors(&amb.lattice, &rows)?;
        pieces.push(Piece::new(amb, sub)?);
    }
    Ok(CyclicCell::new(amb, pieces)?.0)
}

/// A seeded product of transvections along primitive elements of `[a]^⊥`
/// that additionally pair trivially with every vector in `fix`. Such
/// products stabilize `[a]` and every fixed vector.
pub fn mixing_matrix(
    amb: &Ambient,
    fix: &[Vec<Int>],
    steps: usize,
    rng: &mut SeededRng,
) -> Result<IntMat> {
    let mut constraints = vec![amb.a_class.clone()];
    constraints.extend(fix.iter().cloned());
    let pool = amb.lattice.perp_of_vectors(&constraints)?;
    let mut m = IntMat::identity(amb.lattice.rank());
    let mut done = 0usize;
    while done < steps {
        let Some(v) = crate::lattice::random_primitive_in(&pool, rng) else { break };
        let t = amb.lattice.transvection_matrix(&v)?;
        m = m.mul(&t);
        done += 1;
    }
    Ok(m)
}

/// A seeded cell with the requested piece genera: block cell in standard
/// coordinates mixed by transvections stabilizing `α₁`.
pub fn random_cell(amb: &Ambient, genera: &[usize], rng: &mut SeededRng) -> Result<CyclicCell> {
    let base = block_cell(amb, genera)?;
    let m = mixing_matrix(amb, &[], 3, rng)?;
    map_cell(amb, &base, &m)
}

/// A seeded cell that keeps the vectors of `fix` where they are (the mix
/// fixes them pointwise).
pub fn random_cell_fixing(
    amb: &Ambient,
    genera: &[usize],
    fix: &[Vec<Int>],
    rng: &mut SeededRng,
) -> Result<CyclicCell> {
    let base = block_cell(amb, genera)?;
    let m = mixing_matrix(amb, fix, 3, rng)?;
    map_cell(amb, &base, &m)
}

/// A seeded saturated subgroup of the standard lattice with the requested
/// rank, obtained from a seeded span (re-drawn until the rank matches).
pub fn random_subgroup(
    amb: &Ambient,
    rank: usize,
    rng: &mut SeededRng,
) -> Result<LatticeSubgroup> {
    let n = amb.lattice.rank();
    loop {
        let rows: Vec<Vec<Int>> = (0..rank)
            .map(|_| (0..n).map(|_| Int::from(rng.int_in(-2, 2))).collect())
            .collect();
        if rows.iter().any(|r| r.iter().all(|x| x.is_zero())) {
            continue;
        }
        let sub = LatticeSubgroup::from_rows(&amb.lattice, IntMat::from_rows(rows))?;
        if sub.rank() == rank {
            return Ok(sub);
        }
    }
}
