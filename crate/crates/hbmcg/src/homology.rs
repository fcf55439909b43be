//! Twisted group (co)homology in degrees 0 and 1 from a presentation.
//!
//! For a group G presented by generators g_1..g_n and relations, and a
//! G-module M given by an integral representation, the cellular chain
//! complex of the presentation 2-complex with local coefficients computes
//! H_0, H_1, H^0 and H^1 of G with coefficients in M. (Attaching cells of
//! dimension three and higher to reach an aspherical complex only changes
//! the complex in degrees two and up, so degrees zero and one are certified
//! by the presentation alone.) The boundary maps in degree one come from
//! Fox derivatives of the relations.
//!
//! Relations are stored as pairs (lhs, rhs) of equal words, and their
//! contribution is assembled as the difference of the two Fox derivative
//! blocks. This is the derivative of the relator lhs * rhs^-1 precisely
//! because both sides act by the same matrix, which the action module
//! verifies separately.
//!
//! Everything over Z/n reuses the integer code paths by augmenting with
//! n times an identity block, so there is a single implementation of the
//! kernel/image subquotients for all coefficient rings.

use crate::action::Representation;
use crate::error::{Error, Result};
use crate::linalg::{
    cokernel_structure, kernel_basis, span_structure, subquotient, AbelianGroup, Ring, RowReducer,
};
use crate::matrix::IntMatrix;
use crate::wajnryb::Presentation;
use crate::word::Word;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Which variance of the functor to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theory {
    Homology,
    Cohomology,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theory::Homology => write!(f, "homology"),
            Theory::Cohomology => write!(f, "cohomology"),
        }
    }
}

impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theory> {
        match s {
            "homology" => Ok(Theory::Homology),
            "cohomology" => Ok(Theory::Cohomology),
            _ => Err(Error::Parse(format!(
                "expected homology or cohomology, got {s}"
            ))),
        }
    }
}

/// Fox derivative blocks of a word in the cocycle convention: the block for
/// generator x collects the running prefix products so that a map f from
/// generators to M extends to a crossed homomorphism via
/// f(w) = sum_x D_x(w) f(x).
fn fox_blocks_cocycle(rho: &Representation, w: &Word) -> Vec<IntMatrix> {
    let n = rho.gens.len();
    let dim = rho.dim;
    let mut slots = vec![IntMatrix::zeros(dim, dim); n];
    let mut prefix = IntMatrix::identity(dim);
    for &(g, e) in w.letters() {
        let idx = rho
            .gens
            .iter()
            .position(|&h| h == g)
            .expect("letter outside the representation's generators");
        if e > 0 {
            slots[idx] = slots[idx].add(&prefix);
            prefix = prefix.mul(rho.mat(g));
        } else {
            prefix = prefix.mul(rho.inv(g));
            slots[idx] = slots[idx].sub(&prefix);
        }
    }
    slots
}

/// Fox derivative blocks in the homology convention (the antipode of the
/// cocycle one): running products multiply by inverse matrices on the left,
/// so that the degree one boundary of the chain complex satisfies
/// d1 . d2 = 0 with d1 assembled from rho(g)^-1 - I.
fn fox_blocks_homology(rho: &Representation, w: &Word) -> Vec<IntMatrix> {
    let n = rho.gens.len();
    let dim = rho.dim;
    let mut slots = vec![IntMatrix::zeros(dim, dim); n];
    let mut prefix = IntMatrix::identity(dim);
    for &(g, e) in w.letters() {
        let idx = rho
            .gens
            .iter()
            .position(|&h| h == g)
            .expect("letter outside the representation's generators");
        if e > 0 {
            slots[idx] = slots[idx].add(&prefix);
            prefix = rho.inv(g).mul(&prefix);
        } else {
            prefix = rho.mat(g).mul(&prefix);
            slots[idx] = slots[idx].sub(&prefix);
        }
    }
    slots
}

/// The derivative of a word with respect to every generator, evaluated in a
/// representation: block i is a dim x dim matrix D_i(w) such that any crossed
/// homomorphism f (a map on generators extended by f(uv) = f(u) + u.f(v))
/// satisfies f(w) = sum_i D_i(w) f(g_i).
pub struct CrossedDifferential {
    /// One block per generator, in the representation's generator order.
    pub blocks: Vec<IntMatrix>,
}

/// Differentiate a word in the crossed homomorphism (cocycle) convention.
pub fn crossed_differential(rho: &Representation, w: &Word) -> CrossedDifferential {
    CrossedDifferential {
        blocks: fox_blocks_cocycle(rho, w),
    }
}

/// The full cocycle constraint matrix: one band of dim rows per relation,
/// stacked without reduction. A map on generators (flattened as a column of
/// n*dim coordinates) is a cocycle exactly when this matrix kills it.
pub fn cocycle_matrix(p: &Presentation, rho: &Representation) -> IntMatrix {
    let dim = rho.dim;
    let width = rho.gens.len() * dim;
    let mut rows: Vec<Vec<num_bigint::BigInt>> = Vec::with_capacity(p.relations.len() * dim);
    for rel in &p.relations {
        let l = fox_blocks_cocycle(rho, &rel.lhs);
        let r = fox_blocks_cocycle(rho, &rel.rhs);
        for i in 0..dim {
            let mut row = Vec::with_capacity(width);
            for (a, b) in l.iter().zip(&r) {
                for j in 0..dim {
                    row.push(a.get(i, j) - b.get(i, j));
                }
            }
            rows.push(row);
        }
    }
    IntMatrix::from_rows(width, rows)
}

/// The coboundary map delta0: M -> M^n, stacked blocks rho(g) - I. Its image
/// inside the cocycles is what H^1 quotients out.
pub fn coboundary_matrix(rho: &Representation) -> IntMatrix {
    let id = IntMatrix::identity(rho.dim);
    let blocks: Vec<IntMatrix> = rho.gens.iter().map(|&g| rho.mat(g).sub(&id)).collect();
    IntMatrix::vcat(&blocks.iter().collect::<Vec<_>>())
}

/// The integer chain data of a presentation with coefficients in a module,
/// assembled once and reusable across coefficient rings (the row and column
/// reductions used here are unimodular, so they preserve kernels, integer
/// spans, and spans mod n).
pub struct PresentationComplex {
    /// Number of generators.
    pub ngens: usize,
    /// Module dimension.
    pub dim: usize,
    /// d1: M^n -> M with generator block rho(g)^-1 - I (homology side).
    pub d1: IntMatrix,
    /// Row-reduced image of d2 (columns span the degree one boundaries).
    pub boundaries: IntMatrix,
    /// delta0: M -> M^n with generator block rho(g) - I (cohomology side).
    pub delta0: IntMatrix,
    /// Row-reduced cocycle constraint matrix (rows cut out the 1-cocycles).
    pub cocycle_rows: IntMatrix,
}

impl PresentationComplex {
    pub fn new(p: &Presentation, rho: &Representation) -> PresentationComplex {
        use rayon::prelude::*;

        let n = rho.gens.len();
        let dim = rho.dim;
        let width = n * dim;

        let d1_blocks: Vec<IntMatrix> = rho
            .gens
            .iter()
            .map(|&g| rho.inv(g).sub(&IntMatrix::identity(dim)))
            .collect();
        let d1 = IntMatrix::hcat(&d1_blocks.iter().collect::<Vec<_>>());

        let delta0_blocks: Vec<IntMatrix> = rho
            .gens
            .iter()
            .map(|&g| rho.mat(g).sub(&IntMatrix::identity(dim)))
            .collect();
        let delta0 = IntMatrix::vcat(&delta0_blocks.iter().collect::<Vec<_>>());

        // Stream the per-relation Fox blocks through incremental reducers so
        // the working set stays at most width x width however many relations
        // the presentation has. Chunks keep rayon batches reasonably sized.
        let mut row_reducer = RowReducer::new(width);
        let mut col_reducer = RowReducer::new(width);
        for chunk in p.relations.chunks(64) {
            let blocks: Vec<(Vec<IntMatrix>, Vec<IntMatrix>)> = chunk
                .par_iter()
                .map(|rel| {
                    let co_l = fox_blocks_cocycle(rho, &rel.lhs);
                    let co_r = fox_blocks_cocycle(rho, &rel.rhs);
                    let ho_l = fox_blocks_homology(rho, &rel.lhs);
                    let ho_r = fox_blocks_homology(rho, &rel.rhs);
                    let co: Vec<IntMatrix> = co_l
                        .iter()
                        .zip(&co_r)
                        .map(|(a, b)| a.sub(b))
                        .collect();
                    let ho: Vec<IntMatrix> = ho_l
                        .iter()
                        .zip(&ho_r)
                        .map(|(a, b)| a.sub(b))
                        .collect();
                    (co, ho)
                })
                .collect();
            for (co, ho) in blocks {
                // Cocycle constraints: dim rows of width n*dim.
                for r in 0..dim {
                    let mut row = Vec::with_capacity(width);
                    for block in &co {
                        row.extend(block.row(r).iter().cloned());
                    }
                    row_reducer.push(row);
                }
                // Boundary columns: dim columns of height n*dim, pushed as
                // rows of the transpose.
                for c in 0..dim {
                    let mut col = Vec::with_capacity(width);
                    for block in &ho {
                        for r in 0..dim {
                            col.push(block.get(r, c).clone());
                        }
                    }
                    col_reducer.push(col);
                }
            }
        }

        PresentationComplex {
            ngens: n,
            dim,
            d1,
            boundaries: col_reducer.into_matrix().transpose(),
            delta0,
            cocycle_rows: row_reducer.into_matrix(),
        }
    }

    /// H_1 or H^1 with coefficients reduced to the given ring.
    pub fn h1(&self, theory: Theory, ring: &Ring) -> Result<AbelianGroup> {
        match theory {
            Theory::Homology => {
                let cycles = kernel_basis(&self.d1, ring);
                subquotient(&cycles, &self.boundaries, ring)
            }
            Theory::Cohomology => {
                let cocycles = kernel_basis(&self.cocycle_rows, ring);
                subquotient(&cocycles, &self.delta0, ring)
            }
        }
    }
}

/// H_1 or H^1 in one call (builds the complex and discards it).
pub fn h1(
    p: &Presentation,
    rho: &Representation,
    theory: Theory,
    ring: &Ring,
) -> Result<AbelianGroup> {
    PresentationComplex::new(p, rho).h1(theory, ring)
}

/// First homology of the presented group with coefficients in the module.
pub fn h1_homology(p: &Presentation, rho: &Representation, ring: &Ring) -> Result<AbelianGroup> {
    h1(p, rho, Theory::Homology, ring)
}

/// First cohomology (crossed homomorphisms modulo principal ones).
pub fn h1_cohomology(p: &Presentation, rho: &Representation, ring: &Ring) -> Result<AbelianGroup> {
    h1(p, rho, Theory::Cohomology, ring)
}

/// Coinvariants M_G, the degree zero homology.
pub fn h0_coinvariants(rho: &Representation, ring: &Ring) -> Result<AbelianGroup> {
    h0(rho, Theory::Homology, ring)
}

/// Invariants M^G, the degree zero cohomology.
pub fn h0_invariants(rho: &Representation, ring: &Ring) -> Result<AbelianGroup> {
    h0(rho, Theory::Cohomology, ring)
}

/// Degree zero: invariants M^G for cohomology, coinvariants M_G for homology.
/// Only the generator matrices matter, so no presentation is needed.
pub fn h0(rho: &Representation, theory: Theory, ring: &Ring) -> Result<AbelianGroup> {
    let dim = rho.dim;
    let id = IntMatrix::identity(dim);
    match theory {
        Theory::Cohomology => {
            let blocks: Vec<IntMatrix> =
                rho.gens.iter().map(|&g| rho.mat(g).sub(&id)).collect();
            let stack = IntMatrix::vcat(&blocks.iter().collect::<Vec<_>>());
            let fixed = kernel_basis(&stack, ring);
            span_structure(&fixed, ring)
        }
        Theory::Homology => {
            let blocks: Vec<IntMatrix> =
                rho.gens.iter().map(|&g| rho.mat(g).sub(&id)).collect();
            let spread = IntMatrix::hcat(&blocks.iter().collect::<Vec<_>>());
            Ok(cokernel_structure(&spread, ring))
        }
    }
}

/// The abelianization of the presented group: the cokernel of the matrix of
/// relator exponent sums.
pub fn abelianization(p: &Presentation) -> AbelianGroup {
    use num_bigint::BigInt;
    let n = p.gens.len();
    let cols: Vec<Vec<BigInt>> = p
        .relations
        .iter()
        .map(|rel| {
            let w = rel.relator();
            p.gens
                .iter()
                .map(|&g| BigInt::from(w.exponent_sum(g)))
                .collect()
        })
        .collect();
    cokernel_structure(&IntMatrix::from_cols(n, cols), &Ring::Z)
}

/// A single computed (co)homology group, in the shape the command line tool
/// prints as JSON.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HomologyResult {
    pub genus: u32,
    pub module: String,
    pub ring: String,
    pub theory: String,
    pub degree: u8,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyResult {
    pub fn new(
        genus: u32,
        module: &str,
        ring: &Ring,
        theory: Theory,
        degree: u8,
        group: &AbelianGroup,
    ) -> HomologyResult {
        HomologyResult {
            genus,
            module: module.to_string(),
            ring: ring.to_string(),
            theory: theory.to_string(),
            degree,
            free_rank: group.free_rank,
            torsion: group.torsion_u64(),
        }
    }

    pub fn group(&self) -> AbelianGroup {
        use num_bigint::BigInt;
        AbelianGroup {
            free_rank: self.free_rank,
            torsion: self.torsion.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }
}
