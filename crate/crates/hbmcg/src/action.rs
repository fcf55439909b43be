//! The action of the handlebody group on the homology of the boundary.
//!
//! The boundary of a genus g handlebody is a closed genus g surface whose
//! first homology H is free of rank 2g, with basis x_1..x_g (the meridian
//! classes, which bound disks in the handlebody) and y_1..y_g (the
//! longitudes). Matrices act on column vectors in the basis order
//! x_1..x_g, y_1..y_g, and a word acts by the product of its letter
//! matrices from left to right.
//!
//! The meridian span L is invariant, which yields the companion modules:
//! the submodule L, the quotient H/L, duals, and tensor products, all
//! derived from the H action by block extraction, inverse transpose, and
//! Kronecker products.

use crate::error::{Error, Result};
use crate::linalg::{inverse_unimodular, Ring};
use crate::matrix::IntMatrix;
use crate::word::{Gen, Word};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

/// A coefficient module for the group (co)homology computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    /// The full boundary homology, rank 2g.
    H,
    /// The meridian submodule, rank g.
    L,
    /// The quotient H/L, rank g.
    HmodL,
    /// A trivial module of the given rank.
    Trivial(usize),
    /// The dual (contragredient) module.
    Dual(Box<ModuleSpec>),
    /// A tensor product of two modules.
    Tensor(Box<ModuleSpec>, Box<ModuleSpec>),
}

impl ModuleSpec {
    pub fn rank(&self, genus: u32) -> usize {
        let g = genus as usize;
        match self {
            ModuleSpec::H => 2 * g,
            ModuleSpec::L | ModuleSpec::HmodL => g,
            ModuleSpec::Trivial(n) => *n,
            ModuleSpec::Dual(m) => m.rank(genus),
            ModuleSpec::Tensor(a, b) => a.rank(genus) * b.rank(genus),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::H => write!(f, "H"),
            ModuleSpec::L => write!(f, "L"),
            ModuleSpec::HmodL => write!(f, "H/L"),
            ModuleSpec::Trivial(1) => write!(f, "trivial"),
            ModuleSpec::Trivial(n) => write!(f, "trivial^{n}"),
            ModuleSpec::Dual(m) => write!(f, "dual({m})"),
            ModuleSpec::Tensor(a, b) => write!(f, "tensor({a},{b})"),
        }
    }
}

/// Split "a,b" at the top-level comma (ignoring commas inside parentheses).
fn split_top_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

impl FromStr for ModuleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<ModuleSpec> {
        let s = s.trim();
        match s {
            "H" => return Ok(ModuleSpec::H),
            "L" => return Ok(ModuleSpec::L),
            "H/L" | "HmodL" => return Ok(ModuleSpec::HmodL),
            "trivial" => return Ok(ModuleSpec::Trivial(1)),
            // Shorthands for the tensor modules that appear in the rank one
            // coinvariant computations.
            "LxLdual" => {
                return Ok(ModuleSpec::Tensor(
                    Box::new(ModuleSpec::L),
                    Box::new(ModuleSpec::Dual(Box::new(ModuleSpec::L))),
                ))
            }
            "LxH" => {
                return Ok(ModuleSpec::Tensor(
                    Box::new(ModuleSpec::L),
                    Box::new(ModuleSpec::H),
                ))
            }
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("dual(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s}")))?;
            return Ok(ModuleSpec::Dual(Box::new(inner.parse()?)));
        }
        if let Some(rest) = s.strip_prefix("tensor(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s}")))?;
            let (a, b) = split_top_comma(inner)
                .ok_or_else(|| Error::Parse(format!("tensor needs two arguments in {s}")))?;
            return Ok(ModuleSpec::Tensor(Box::new(a.parse()?), Box::new(b.parse()?)));
        }
        Err(Error::Parse(format!("unknown module {s}")))
    }
}

/// The transvection along a meridian class c = sum c_k x_k:
/// x fixed, y_l -> y_l + c_l * c.
pub fn twist_matrix(genus: u32, class: &[BigInt]) -> IntMatrix {
    let g = genus as usize;
    assert_eq!(class.len(), g, "twist class lives in the meridian span");
    let mut m = IntMatrix::identity(2 * g);
    for l in 0..g {
        if class[l].is_zero() {
            continue;
        }
        for k in 0..g {
            let add = &class[l] * &class[k];
            *m.entry_mut(k, g + l) += add;
        }
    }
    m
}

/// The meridian class of the pair twist d_{i,j}: sign(i) x_|i| + sign(j) x_|j|.
pub fn pair_class(genus: u32, i: i64, j: i64) -> Vec<BigInt> {
    interval_class_of(genus, &[i, j])
}

/// The meridian class of the interval twist c_{i,j}.
pub fn interval_class(genus: u32, i: i64, j: i64) -> Vec<BigInt> {
    let set: Vec<i64> = (i..=j).filter(|&k| k != 0).collect();
    interval_class_of(genus, &set)
}

/// The meridian class of d_I for a spot subset I: sum of sign(k) x_|k|.
pub fn interval_class_of(genus: u32, set: &[i64]) -> Vec<BigInt> {
    let g = genus as usize;
    let mut class = vec![BigInt::zero(); g];
    for &k in set {
        assert!(k != 0 && k.unsigned_abs() as usize <= g, "spot {k} out of range");
        class[k.unsigned_abs() as usize - 1] += k.signum();
    }
    class
}

/// The closed form of the handle slide k_i: swap x_i with x_{i+1} and
/// y_i with y_{i+1}.
pub fn slide_matrix(genus: u32, i: i64) -> IntMatrix {
    let g = genus as usize;
    let i = i as usize;
    assert!(i >= 1 && i < g);
    let mut m = IntMatrix::identity(2 * g);
    for base in [0, g] {
        let (p, q) = (base + i - 1, base + i);
        m.set(p, p, BigInt::zero());
        m.set(q, q, BigInt::zero());
        m.set(p, q, BigInt::from(1));
        m.set(q, p, BigInt::from(1));
    }
    m
}

/// The closed form of the half twist s_j: x_j -> -x_j, y_j -> 2x_j - y_j.
pub fn reflection_matrix(genus: u32, j: i64) -> IntMatrix {
    let g = genus as usize;
    let j = j as usize;
    assert!(j >= 1 && j <= g);
    let mut m = IntMatrix::identity(2 * g);
    m.set(j - 1, j - 1, BigInt::from(-1));
    m.set(g + j - 1, g + j - 1, BigInt::from(-1));
    m.set(j - 1, g + j - 1, BigInt::from(2));
    m
}

fn homology_generator_matrix(genus: u32, gen: Gen) -> IntMatrix {
    let g = genus as usize;
    let dim = 2 * g;
    let x = |i: usize| i - 1;
    let y = |i: usize| g + i - 1;
    let mut m = IntMatrix::identity(dim);
    match gen {
        Gen::A(i) => {
            let i = i as usize;
            m.set(x(i), y(i), BigInt::from(1));
        }
        Gen::S1 => {
            return reflection_matrix(genus, 1);
        }
        Gen::D12 => {
            return twist_matrix(genus, &pair_class(genus, 1, 2));
        }
        Gen::T(k) => {
            let k = k as usize;
            // x_k <-> x_{k+1}
            m.set(x(k), x(k), BigInt::zero());
            m.set(x(k + 1), x(k + 1), BigInt::zero());
            m.set(x(k + 1), x(k), BigInt::from(1));
            m.set(x(k), x(k + 1), BigInt::from(1));
            // y_k -> x_k + y_{k+1}, y_{k+1} -> x_{k+1} + y_k
            m.set(y(k), y(k), BigInt::zero());
            m.set(y(k + 1), y(k + 1), BigInt::zero());
            m.set(x(k), y(k), BigInt::from(1));
            m.set(y(k + 1), y(k), BigInt::from(1));
            m.set(x(k + 1), y(k + 1), BigInt::from(1));
            m.set(y(k), y(k + 1), BigInt::from(1));
        }
        Gen::R(i, j) => {
            let j = j as usize;
            let lo = if i > 0 { i as usize } else { (-i) as usize + 1 };
            assert!(lo <= j && j <= g, "half twist index ({i},{j}) out of range");
            // x_j -> -(x_lo + ... + x_j)
            m.set(x(j), x(j), BigInt::zero());
            for k in lo..=j {
                m.set(x(k), x(j), BigInt::from(-1));
            }
            // y_l -> (x_lo + ... + x_j) + y_l - y_j for lo <= l < j
            for l in lo..j {
                for k in lo..=j {
                    m.set(x(k), y(l), BigInt::from(1));
                }
                m.set(y(j), y(l), BigInt::from(-1));
            }
            // y_j -> x_lo + ... + x_{j-1} + 2 x_j - y_j
            for k in lo..j {
                m.set(x(k), y(j), BigInt::from(1));
            }
            m.set(x(j), y(j), BigInt::from(2));
            m.set(y(j), y(j), BigInt::from(-1));
        }
        Gen::X(_) => panic!("fixture generator has no homology action"),
    }
    m
}

/// An integral representation of a finitely generated group: one invertible
/// integer matrix per generator, with the inverses precomputed.
#[derive(Clone)]
pub struct Representation {
    pub genus: u32,
    pub module: ModuleSpec,
    pub dim: usize,
    pub gens: Vec<Gen>,
    mats: Vec<IntMatrix>,
    invs: Vec<IntMatrix>,
    index: HashMap<Gen, usize>,
}

impl Representation {
    /// The defining action on H for the Wajnryb generators of genus g.
    pub fn homology(genus: u32) -> Result<Representation> {
        if genus < 2 {
            return Err(Error::Genus(genus));
        }
        let mut gens: Vec<Gen> = vec![];
        for i in 1..=genus {
            gens.push(Gen::A(i));
        }
        gens.push(Gen::D12);
        gens.push(Gen::S1);
        for i in 1..genus {
            gens.push(Gen::T(i));
        }
        for &(i, j) in &crate::wajnryb::index_set_itilde(genus) {
            gens.push(Gen::R(i as i32, j as u32));
        }
        let mats: Vec<IntMatrix> = gens
            .iter()
            .map(|&g| homology_generator_matrix(genus, g))
            .collect();
        Representation::from_matrices(genus, ModuleSpec::H, gens, mats)
    }

    /// The action on an arbitrary coefficient module, derived from H.
    pub fn for_module(genus: u32, spec: &ModuleSpec) -> Result<Representation> {
        Representation::homology(genus)?.derive(spec)
    }

    /// Assemble a representation from explicit matrices (inverses are
    /// computed, and must exist over Z).
    pub fn from_matrices(
        genus: u32,
        module: ModuleSpec,
        gens: Vec<Gen>,
        mats: Vec<IntMatrix>,
    ) -> Result<Representation> {
        assert_eq!(gens.len(), mats.len());
        let dim = mats.first().map_or(0, |m| m.rows());
        for m in &mats {
            assert_eq!(m.rows(), dim, "inconsistent matrix sizes");
            assert_eq!(m.cols(), dim, "representation matrices must be square");
        }
        let invs = mats
            .iter()
            .map(inverse_unimodular)
            .collect::<Result<Vec<_>>>()?;
        let index = gens.iter().enumerate().map(|(n, &g)| (g, n)).collect();
        Ok(Representation {
            genus,
            module,
            dim,
            gens,
            mats,
            invs,
            index,
        })
    }

    /// Derive the action on a companion module. `self` must be the H action.
    pub fn derive(&self, spec: &ModuleSpec) -> Result<Representation> {
        if *spec == ModuleSpec::H {
            return Ok(self.clone());
        }
        assert_eq!(
            self.module,
            ModuleSpec::H,
            "companion modules derive from the H action"
        );
        let g = self.genus as usize;
        let take_block = |m: &IntMatrix, r0: usize, c0: usize| -> Result<IntMatrix> {
            // The meridian span is invariant exactly when each matrix is
            // block upper triangular; anything else is a hard bug upstream.
            let lower = m.block(g, 0, g, g);
            if !lower.is_zero() {
                return Err(Error::Block(
                    "meridian span is not invariant under this matrix".to_string(),
                ));
            }
            Ok(m.block(r0, c0, g, g))
        };
        let (mats, invs): (Vec<IntMatrix>, Vec<IntMatrix>) = match spec {
            ModuleSpec::H => unreachable!(),
            ModuleSpec::L => (
                self.mats
                    .iter()
                    .map(|m| take_block(m, 0, 0))
                    .collect::<Result<_>>()?,
                self.invs
                    .iter()
                    .map(|m| take_block(m, 0, 0))
                    .collect::<Result<_>>()?,
            ),
            ModuleSpec::HmodL => (
                self.mats
                    .iter()
                    .map(|m| take_block(m, g, g))
                    .collect::<Result<_>>()?,
                self.invs
                    .iter()
                    .map(|m| take_block(m, g, g))
                    .collect::<Result<_>>()?,
            ),
            ModuleSpec::Trivial(n) => {
                let id = IntMatrix::identity(*n);
                (
                    vec![id.clone(); self.gens.len()],
                    vec![id; self.gens.len()],
                )
            }
            ModuleSpec::Dual(inner) => {
                let base = self.derive(inner)?;
                (
                    base.invs.iter().map(|m| m.transpose()).collect(),
                    base.mats.iter().map(|m| m.transpose()).collect(),
                )
            }
            ModuleSpec::Tensor(a, b) => {
                let ra = self.derive(a)?;
                let rb = self.derive(b)?;
                (
                    ra.mats
                        .iter()
                        .zip(&rb.mats)
                        .map(|(m, n)| m.kron(n))
                        .collect(),
                    ra.invs
                        .iter()
                        .zip(&rb.invs)
                        .map(|(m, n)| m.kron(n))
                        .collect(),
                )
            }
        };
        let dim = spec.rank(self.genus);
        let index = self.index.clone();
        Ok(Representation {
            genus: self.genus,
            module: spec.clone(),
            dim,
            gens: self.gens.clone(),
            mats,
            invs,
            index,
        })
    }

    pub fn mat(&self, g: Gen) -> &IntMatrix {
        &self.mats[self.index[&g]]
    }

    pub fn inv(&self, g: Gen) -> &IntMatrix {
        &self.invs[self.index[&g]]
    }

    /// The matrix of a single letter: the generator matrix or its inverse.
    pub fn letter(&self, g: Gen, e: i8) -> &IntMatrix {
        let idx = *self
            .index
            .get(&g)
            .unwrap_or_else(|| panic!("generator {g} is not in this representation"));
        if e >= 0 {
            &self.mats[idx]
        } else {
            &self.invs[idx]
        }
    }

    /// Evaluate a word over Z.
    pub fn evaluate(&self, w: &Word) -> IntMatrix {
        let mut m = IntMatrix::identity(self.dim);
        for &(g, e) in w.letters() {
            m = m.mul(self.letter(g, e));
        }
        m
    }

    /// Evaluate a word, reducing mod n along the way when the ring is Z/n.
    pub fn evaluate_in(&self, w: &Word, ring: &Ring) -> IntMatrix {
        match ring {
            Ring::Z => self.evaluate(w),
            Ring::Mod(n) => {
                let mut m = IntMatrix::identity(self.dim);
                for &(g, e) in w.letters() {
                    m = m.mul(self.letter(g, e)).reduce_mod(*n);
                }
                m
            }
        }
    }

    /// Damage one generator matrix (right-multiply by an elementary shear).
    /// Used as a negative control: verification must then report failures.
    pub fn corrupt(&mut self, g: Gen) -> Result<()> {
        let idx = *self
            .index
            .get(&g)
            .ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
        if self.dim < 2 {
            return Err(Error::Block(
                "cannot corrupt a representation of dimension < 2".to_string(),
            ));
        }
        let mut shear = IntMatrix::identity(self.dim);
        shear.set(0, self.dim - 1, BigInt::from(1));
        let mut unshear = IntMatrix::identity(self.dim);
        unshear.set(0, self.dim - 1, BigInt::from(-1));
        self.mats[idx] = self.mats[idx].mul(&shear);
        self.invs[idx] = unshear.mul(&self.invs[idx]);
        Ok(())
    }
}

/// Outcome of checking a presentation inside a representation.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub genus: u32,
    pub module: String,
    pub relations_checked: usize,
    pub cross_checks: usize,
    /// Labels (with a short note) of everything that failed.
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check that every relation of the presentation holds in the representation,
/// i.e. that the two sides evaluate to the same matrix over Z.
///
/// When the representation is the defining H action, the derived words are
/// additionally compared against their closed forms: every pair twist and
/// interval twist must be a transvection along its meridian class, every
/// handle slide a basis swap, and every derived half twist a reflection.
pub fn verify_presentation(
    p: &crate::wajnryb::Presentation,
    rho: &Representation,
) -> VerifyReport {
    use rayon::prelude::*;

    let mut failures: Vec<String> = p
        .relations
        .par_iter()
        .filter_map(|rel| {
            let lhs = rho.evaluate(&rel.lhs);
            let rhs = rho.evaluate(&rel.rhs);
            if lhs == rhs {
                None
            } else {
                Some(format!("{}: sides act differently", rel.label))
            }
        })
        .collect();
    failures.sort();

    let mut cross_checks = 0usize;
    if rho.module == ModuleSpec::H && rho.genus == p.genus {
        let genus = p.genus;
        let mut der = crate::wajnryb::Derived::new(genus);
        let i0 = crate::wajnryb::index_set_i0(genus);
        for (ai, &i) in i0.iter().enumerate() {
            for &j in &i0[ai + 1..] {
                let w = der.d_pair(i, j);
                cross_checks += 1;
                if rho.evaluate(&w) != twist_matrix(genus, &pair_class(genus, i, j)) {
                    failures.push(format!("closed-form d({i},{j}): not the expected transvection"));
                }
            }
        }
        for (ai, &i) in i0.iter().enumerate() {
            for &j in i0[ai..].iter() {
                let w = der.c(i, j);
                cross_checks += 1;
                if rho.evaluate(&w) != twist_matrix(genus, &interval_class(genus, i, j)) {
                    failures.push(format!("closed-form c({i},{j}): not the expected transvection"));
                }
            }
        }
        for m in 1..genus as i64 {
            let w = der.k(m);
            cross_checks += 1;
            if rho.evaluate(&w) != slide_matrix(genus, m) {
                failures.push(format!("closed-form k_{m}: not the expected swap"));
            }
        }
        for j in 1..=genus as i64 {
            let w = der.s(j);
            cross_checks += 1;
            if rho.evaluate(&w) != reflection_matrix(genus, j) {
                failures.push(format!("closed-form s_{j}: not the expected reflection"));
            }
        }
    }

    VerifyReport {
        genus: p.genus,
        module: rho.module.to_string(),
        relations_checked: p.relations.len(),
        cross_checks,
        failures,
    }
}
