//! Property tests for the exact linear algebra core.
//!
//! The Smith form is cross-checked against an independent oracle: the gcd of
//! all k x k minors of A equals d_1 * ... * d_k, computed here by brute force
//! cofactor-free enumeration over the Bareiss determinant. The Bareiss code
//! shares nothing with the Hermite/Smith elimination paths.

use hbmcg::linalg::{
    cokernel_structure, hnf, inverse_unimodular, kernel_basis, rank, snf, Ring,
};
use hbmcg::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn small_matrix(max_dim: usize, max_abs: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-max_abs..=max_abs, r * c).prop_map(move |vals| {
            IntMatrix::from_fn(r, c, |i, j| BigInt::from(vals[i * c + j]))
        })
    })
}

/// Random unimodular matrix: a product of elementary shears of the identity.
fn unimodular_matrix(dim: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec((0..dim, 0..dim, -3i64..=3), 0..12).prop_map(move |shears| {
        let mut m = IntMatrix::identity(dim);
        for (i, j, k) in shears {
            if i == j {
                continue;
            }
            // row_i += k * row_j keeps the determinant fixed.
            for c in 0..dim {
                let add = m.get(j, c) * BigInt::from(k);
                *m.entry_mut(i, c) += add;
            }
        }
        m
    })
}

/// gcd of all k x k minors, via the independent Bareiss determinant.
fn minor_gcd(a: &IntMatrix, k: usize) -> BigInt {
    use num_integer::Integer;
    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = vec![];
        for rest in combos(n - 1, k - 1) {
            let mut c = rest.clone();
            c.push(n - 1);
            out.push(c);
        }
        out.extend(combos(n - 1, k));
        out
    }
    let mut g = BigInt::zero();
    for rows in combos(a.rows(), k) {
        for cols in combos(a.cols(), k) {
            let sub = IntMatrix::from_fn(k, k, |i, j| a.get(rows[i], cols[j]).clone());
            g = g.gcd(&sub.det());
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_transform_is_unimodular_and_correct(a in small_matrix(4, 9)) {
        let (h, u) = hnf(&a);
        prop_assert_eq!(u.mul(&a), h.clone());
        prop_assert_eq!(u.det().abs(), BigInt::from(1));
        // Echelon shape: leading columns strictly increase.
        let mut last: Option<usize> = None;
        for r in 0..h.rows() {
            let lead = h.row(r).iter().position(|x| !x.is_zero());
            match (last, lead) {
                (_, None) => {}
                (None, Some(_)) => last = lead,
                (Some(prev), Some(cur)) => {
                    prop_assert!(cur > prev);
                    last = lead;
                }
            }
            if let Some(c) = lead {
                prop_assert!(h.get(r, c).is_positive());
            } else {
                // All later rows must be zero too.
                for r2 in r..h.rows() {
                    prop_assert!(h.row(r2).iter().all(|x| x.is_zero()));
                }
                break;
            }
        }
    }

    #[test]
    fn snf_transforms_are_unimodular_and_diagonal_divides(a in small_matrix(4, 9)) {
        let (d, u, v) = snf(&a);
        prop_assert_eq!(u.mul(&a).mul(&v), d.clone());
        prop_assert_eq!(u.det().abs(), BigInt::from(1));
        prop_assert_eq!(v.det().abs(), BigInt::from(1));
        let k = d.rows().min(d.cols());
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    prop_assert!(d.get(i, j).is_zero());
                }
            }
        }
        use num_integer::Integer;
        for i in 0..k {
            prop_assert!(!d.get(i, i).is_negative());
            if i + 1 < k && !d.get(i + 1, i + 1).is_zero() {
                prop_assert!(d.get(i + 1, i + 1).is_multiple_of(d.get(i, i)));
            }
        }
    }

    #[test]
    fn snf_matches_minor_gcd_oracle(a in small_matrix(3, 6)) {
        let (d, _, _) = snf(&a);
        let k = d.rows().min(d.cols());
        let mut prod = BigInt::from(1);
        for i in 0..k {
            prod *= d.get(i, i);
            prop_assert_eq!(&prod.abs(), &minor_gcd(&a, i + 1));
        }
    }

    #[test]
    fn kernel_columns_are_killed_and_rank_adds_up(a in small_matrix(4, 9)) {
        let k = kernel_basis(&a, &Ring::Z);
        for c in 0..k.cols() {
            let v = k.col_vec(c);
            let image = a.mul_vec(&v);
            prop_assert!(image.iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(rank(&a) + k.cols(), a.cols());
    }

    #[test]
    fn kernel_mod_n_columns_are_killed(a in small_matrix(3, 6), n in 2u64..=9) {
        let k = kernel_basis(&a, &Ring::Mod(n));
        for c in 0..k.cols() {
            let v = k.col_vec(c);
            let image = a.mul_vec(&v);
            let n = BigInt::from(n);
            use num_integer::Integer;
            prop_assert!(image.iter().all(|x| x.is_multiple_of(&n)));
        }
    }

    #[test]
    fn cokernel_order_matches_determinant(a in small_matrix(3, 6)) {
        // For square A with det != 0 the cokernel is finite of order |det|.
        prop_assume!(a.rows() == a.cols());
        let det = a.det();
        prop_assume!(!det.is_zero());
        let g = cokernel_structure(&a, &Ring::Z);
        prop_assert_eq!(g.free_rank, 0);
        let mut order = BigInt::from(1);
        for t in &g.torsion {
            order *= t;
        }
        prop_assert_eq!(order, det.abs());
    }

    #[test]
    fn unimodular_inverse_roundtrips(a in unimodular_matrix(4)) {
        prop_assert_eq!(a.det().abs(), BigInt::from(1));
        let inv = inverse_unimodular(&a).unwrap();
        prop_assert!(a.mul(&inv).is_identity());
        prop_assert!(inv.mul(&a).is_identity());
    }
}
