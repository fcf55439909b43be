//! Truncated bar resolution for small finite groups.
//!
//! This is the independent oracle that pins down the left/right and
//! sign conventions of the presentation based pipeline: for a finite group
//! given by its full multiplication table, H_0, H_1, H^0 and H^1 can be
//! computed straight from the unnormalized bar complex
//!
//!   M[G x G] -> M[G] -> M
//!
//! with no presentation, no Fox calculus and no choice of generators. The
//! groups here are tiny (order <= 24), so the quadratic blowup of the bar
//! complex does not matter.
//!
//! Conventions: modules are left modules given as matrices acting on column
//! vectors. For homology the module is converted to a right module through
//! the inverse (m.g := g^-1 m), which matches the antipode convention of the
//! presentation chain complex.

use crate::error::{Error, Result};
use crate::homology::Theory;
use crate::linalg::{kernel_basis, subquotient, AbelianGroup, Ring};
use crate::matrix::IntMatrix;

/// A finite group as a validated multiplication table. Element 0..order-1,
/// table[a][b] = a*b.
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Validate a multiplication table: closure (by construction of the
    /// type), a two-sided identity, associativity, and two-sided inverses.
    pub fn new(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".to_string()));
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::NotAGroup("table is not square".to_string()));
            }
            if row.iter().any(|&v| v >= n) {
                return Err(Error::NotAGroup("entry outside the element range".to_string()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".to_string()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverse[a] = inv;
        }
        Ok(FiniteGroup {
            order: n,
            table,
            inverse,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// The cyclic group of order n, element k representing the k-th power.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(table).expect("cyclic table is a group")
    }

    /// The symmetric group on three letters, elements enumerated as the
    /// permutations of {0,1,2} in lexicographic one-line order.
    pub fn symmetric3() -> FiniteGroup {
        let perms = s3_permutations();
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        // (a b)(i) = a(b(i)): apply b first.
                        let composed = [a[b[0]], a[b[1]], a[b[2]]];
                        index(&composed)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(table).expect("permutation table is a group")
    }
}

fn s3_permutations() -> Vec<[usize; 3]> {
    vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
}

/// The 2-dimensional integral representation of the symmetric group on three
/// letters: the permutation action on the sublattice a+b+c = 0 of Z^3, in
/// the basis u_1 = e_1 - e_3, u_2 = e_2 - e_3 (so pi.u_i = u_{pi(i)} -
/// u_{pi(3)} with u_3 read as zero). Returned in the element order of
/// FiniteGroup::symmetric3.
pub fn s3_standard_matrices() -> Vec<IntMatrix> {
    s3_permutations()
        .iter()
        .map(|p| {
            let mut m = IntMatrix::zeros(2, 2);
            for (col, &image) in p.iter().take(2).enumerate() {
                if image < 2 {
                    m.set(image, col, 1.into());
                }
                if p[2] < 2 {
                    let cur = m.get(p[2], col).clone();
                    m.set(p[2], col, cur - 1);
                }
            }
            m
        })
        .collect()
}

/// Sign character of the symmetric group on three letters, in the same
/// element order.
pub fn s3_sign_matrices() -> Vec<IntMatrix> {
    s3_permutations()
        .iter()
        .map(|p| {
            let mut inversions = 0;
            for i in 0..3 {
                for j in i + 1..3 {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            IntMatrix::from_i64(&[&[sign]])
        })
        .collect()
}

/// Check that element matrices really define the group's action: identity at
/// the identity, multiplicativity everywhere, consistent dimensions.
fn validate_action(group: &FiniteGroup, mats: &[IntMatrix]) -> Result<usize> {
    if mats.len() != group.order {
        return Err(Error::InvalidAction(format!(
            "{} matrices for a group of order {}",
            mats.len(),
            group.order
        )));
    }
    let dim = mats[0].rows();
    for m in mats {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::InvalidAction("matrix dimensions differ".to_string()));
        }
    }
    if !mats[group.identity].is_identity() {
        return Err(Error::InvalidAction("identity acts nontrivially".to_string()));
    }
    for a in 0..group.order {
        for b in 0..group.order {
            if mats[a].mul(&mats[b]) != mats[group.table[a][b]] {
                return Err(Error::InvalidAction(format!(
                    "action is not multiplicative at ({a},{b})"
                )));
            }
        }
    }
    Ok(dim)
}

/// H_1 or H^1 of a finite group from the truncated bar complex, with module
/// given by one matrix per group element (left action on column vectors).
pub fn bar_h1(
    group: &FiniteGroup,
    mats: &[IntMatrix],
    theory: Theory,
    ring: &Ring,
) -> Result<AbelianGroup> {
    let dim = validate_action(group, mats)?;
    let n = group.order;
    let id = IntMatrix::identity(dim);

    match theory {
        Theory::Homology => {
            // d1: M[G] -> M, block at g is M(g^-1) - I (right action via the
            // inverse). d2: M[G x G] -> M[G], the column at (g,h) places
            // M(g^-1) in slot h, -I in slot gh and +I in slot g; coinciding
            // slots accumulate.
            let d1_blocks: Vec<IntMatrix> =
                (0..n).map(|g| mats[group.inv(g)].sub(&id)).collect();
            let d1 = IntMatrix::hcat(&d1_blocks.iter().collect::<Vec<_>>());

            let mut d2 = IntMatrix::zeros(n * dim, n * n * dim);
            for g in 0..n {
                for h in 0..n {
                    let col0 = (g * n + h) * dim;
                    add_block(&mut d2, h * dim, col0, &mats[group.inv(g)], 1);
                    add_block(&mut d2, group.mul(g, h) * dim, col0, &id, -1);
                    add_block(&mut d2, g * dim, col0, &id, 1);
                }
            }
            let cycles = kernel_basis(&d1, ring);
            subquotient(&cycles, &d2, ring)
        }
        Theory::Cohomology => {
            // delta0: M -> M[G], block at g is M(g) - I. delta1 constraint
            // rows at (g,h): f(g) + g.f(h) - f(gh) = 0.
            let delta0_blocks: Vec<IntMatrix> = (0..n).map(|g| mats[g].sub(&id)).collect();
            let delta0 = IntMatrix::vcat(&delta0_blocks.iter().collect::<Vec<_>>());

            let mut delta1 = IntMatrix::zeros(n * n * dim, n * dim);
            for g in 0..n {
                for h in 0..n {
                    let row0 = (g * n + h) * dim;
                    add_block_rows(&mut delta1, row0, h * dim, &mats[g], 1);
                    add_block_rows(&mut delta1, row0, group.mul(g, h) * dim, &id, -1);
                    add_block_rows(&mut delta1, row0, g * dim, &id, 1);
                }
            }
            let cocycles = kernel_basis(&delta1, ring);
            subquotient(&cocycles, &delta0, ring)
        }
    }
}

/// H_0 (coinvariants) or H^0 (invariants) from the same truncation.
pub fn bar_h0(
    group: &FiniteGroup,
    mats: &[IntMatrix],
    theory: Theory,
    ring: &Ring,
) -> Result<AbelianGroup> {
    let dim = validate_action(group, mats)?;
    let n = group.order;
    let id = IntMatrix::identity(dim);
    let blocks: Vec<IntMatrix> = (0..n).map(|g| mats[g].sub(&id)).collect();
    match theory {
        Theory::Homology => {
            let spread = IntMatrix::hcat(&blocks.iter().collect::<Vec<_>>());
            Ok(crate::linalg::cokernel_structure(&spread, ring))
        }
        Theory::Cohomology => {
            let stack = IntMatrix::vcat(&blocks.iter().collect::<Vec<_>>());
            let fixed = kernel_basis(&stack, ring);
            crate::linalg::span_structure(&fixed, ring)
        }
    }
}

fn add_block(m: &mut IntMatrix, row0: usize, col0: usize, block: &IntMatrix, sign: i64) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let cur = m.get(row0 + i, col0 + j).clone();
            m.set(row0 + i, col0 + j, cur + block.get(i, j) * sign);
        }
    }
}

fn add_block_rows(m: &mut IntMatrix, row0: usize, col0: usize, block: &IntMatrix, sign: i64) {
    add_block(m, row0, col0, block, sign);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_by_one(vals: &[i64]) -> Vec<IntMatrix> {
        vals.iter().map(|&v| IntMatrix::from_i64(&[&[v]])).collect()
    }

    fn group(free: usize, torsion: &[u64]) -> AbelianGroup {
        use num_bigint::BigInt;
        AbelianGroup {
            free_rank: free,
            torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    #[test]
    fn rejects_broken_tables() {
        // Not associative: a Latin square that is not a group (order 5,
        // subtraction table).
        let sub = (0..5)
            .map(|a: usize| (0..5).map(|b| (a + 5 - b) % 5).collect())
            .collect::<Vec<Vec<usize>>>();
        assert!(matches!(FiniteGroup::new(sub), Err(Error::NotAGroup(_))));
        // Entry out of range.
        assert!(matches!(
            FiniteGroup::new(vec![vec![1]]),
            Err(Error::NotAGroup(_))
        ));
        // Not square.
        assert!(matches!(
            FiniteGroup::new(vec![vec![0, 1]]),
            Err(Error::NotAGroup(_))
        ));
        // No identity.
        let no_id = vec![vec![1, 0], vec![1, 0]];
        assert!(matches!(FiniteGroup::new(no_id), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn rejects_broken_actions() {
        let c2 = FiniteGroup::cyclic(2);
        // Wrong count.
        assert!(matches!(
            bar_h1(&c2, &one_by_one(&[1]), Theory::Homology, &Ring::Z),
            Err(Error::InvalidAction(_))
        ));
        // Not multiplicative: g acts by 2.
        assert!(matches!(
            bar_h1(&c2, &one_by_one(&[1, 2]), Theory::Homology, &Ring::Z),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn cyclic_groups_have_the_textbook_values() {
        let c2 = FiniteGroup::cyclic(2);
        let triv = one_by_one(&[1, 1]);
        let sign = one_by_one(&[1, -1]);
        assert_eq!(bar_h1(&c2, &triv, Theory::Homology, &Ring::Z).unwrap(), group(0, &[2]));
        assert_eq!(bar_h1(&c2, &sign, Theory::Homology, &Ring::Z).unwrap(), group(0, &[]));
        assert_eq!(bar_h1(&c2, &triv, Theory::Cohomology, &Ring::Z).unwrap(), group(0, &[]));
        assert_eq!(bar_h1(&c2, &sign, Theory::Cohomology, &Ring::Z).unwrap(), group(0, &[2]));

        let c3 = FiniteGroup::cyclic(3);
        let triv3 = one_by_one(&[1, 1, 1]);
        assert_eq!(bar_h1(&c3, &triv3, Theory::Homology, &Ring::Z).unwrap(), group(0, &[3]));
        assert_eq!(bar_h1(&c3, &triv3, Theory::Cohomology, &Ring::Z).unwrap(), group(0, &[]));
    }

    #[test]
    fn symmetric_group_abelianizes_to_order_two() {
        let s3 = FiniteGroup::symmetric3();
        let triv = vec![IntMatrix::identity(1); 6];
        assert_eq!(bar_h1(&s3, &triv, Theory::Homology, &Ring::Z).unwrap(), group(0, &[2]));
    }

    #[test]
    fn standard_matrices_act_correctly() {
        let s3 = FiniteGroup::symmetric3();
        let std2 = s3_standard_matrices();
        let sign = s3_sign_matrices();
        assert!(validate_action(&s3, &std2).is_ok());
        assert!(validate_action(&s3, &sign).is_ok());
        // The rotation (1 2 0) has order three and trace -1.
        let rot = &std2[3];
        assert!(rot.mul(rot).mul(rot).is_identity());
        assert!(!rot.is_identity());
    }

    #[test]
    fn degree_zero_from_the_bar_side() {
        let c2 = FiniteGroup::cyclic(2);
        let sign = one_by_one(&[1, -1]);
        assert_eq!(bar_h0(&c2, &sign, Theory::Homology, &Ring::Z).unwrap(), group(0, &[2]));
        assert_eq!(bar_h0(&c2, &sign, Theory::Cohomology, &Ring::Z).unwrap(), group(0, &[]));
        let s3 = FiniteGroup::symmetric3();
        let std2 = s3_standard_matrices();
        assert_eq!(bar_h0(&s3, &std2, Theory::Homology, &Ring::Z).unwrap(), group(0, &[]));
        assert_eq!(bar_h0(&s3, &std2, Theory::Cohomology, &Ring::Z).unwrap(), group(0, &[]));
    }
}
