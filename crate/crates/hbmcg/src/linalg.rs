//! Exact normal forms over Z and Z/n.
//!
//! Everything here reduces to two integer workhorses: the row Hermite normal
//! form (echelon with positive pivots and entries above each pivot reduced
//! into [0, pivot)) and the Smith normal form (diagonal with a divisibility
//! chain). Computations over Z/n never use modular inverses; a matrix is
//! augmented with n times an identity block and handled over Z, so one
//! well-tested integer core serves both rings.
//!
//! Constraint systems assembled from group presentations arrive as tens of
//! thousands of highly redundant rows. `RowReducer` deduplicates and folds
//! them into at most `cols` pivot rows incrementally, which keeps the final
//! Hermite/Smith calls small.

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, HashSet};
use std::fmt;

/// Coefficient ring for (co)homology computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    Z,
    /// Z/n for n >= 2.
    Mod(u64),
}

impl Ring {
    pub fn parse(s: &str) -> Result<Ring> {
        if s == "Z" {
            return Ok(Ring::Z);
        }
        let rest = s
            .strip_prefix("Z/")
            .ok_or_else(|| Error::Ring(format!("expected Z or Z/n, got {s}")))?;
        let rest = rest.strip_suffix('Z').unwrap_or(rest);
        let n: u64 = rest
            .parse()
            .map_err(|_| Error::Ring(format!("expected Z or Z/n, got {s}")))?;
        if n < 2 {
            return Err(Error::Ring(format!("modulus must be at least 2, got {n}")));
        }
        Ok(Ring::Mod(n))
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ring> {
        Ring::parse(s)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Z => write!(f, "Z"),
            Ring::Mod(n) => write!(f, "Z/{n}"),
        }
    }
}

/// A finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: vec![],
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: vec![],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Canonical form of a direct sum of cyclic groups Z/d (d = 0 meaning Z),
    /// by running the list through a Smith reduction of a diagonal matrix.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let n = orders.len();
        let mut diag = IntMatrix::zeros(n, n);
        for (i, d) in orders.iter().enumerate() {
            diag.set(i, i, d.clone());
        }
        cokernel_structure(&diag, &Ring::Z)
    }

    /// Hom(self, Z/n): each Z/d contributes Z/gcd(d, n), each Z contributes Z/n.
    pub fn hom_to_cyclic(&self, n: u64) -> Self {
        let n = BigInt::from(n);
        let mut orders: Vec<BigInt> = self.torsion.iter().map(|d| d.gcd(&n)).collect();
        orders.extend(std::iter::repeat(n).take(self.free_rank));
        AbelianGroup::from_cyclic_orders(&orders)
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|d| u64::try_from(d).expect("torsion coefficient exceeds u64"))
            .collect()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = vec![];
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            free_rank: usize,
            torsion: TorsionSeq<'a>,
        }
        struct TorsionSeq<'a>(&'a [BigInt]);
        impl Serialize for TorsionSeq<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for d in self.0 {
                    match i64::try_from(d) {
                        Ok(v) => seq.serialize_element(&v)?,
                        Err(_) => seq.serialize_element(&d.to_string())?,
                    }
                }
                seq.end()
            }
        }
        Repr {
            free_rank: self.free_rank,
            torsion: TorsionSeq(&self.torsion),
        }
        .serialize(serializer)
    }
}

fn sign_normalize_row(row: &mut [BigInt]) {
    if let Some(first) = row.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in row.iter_mut() {
                *v = -std::mem::take(v);
            }
        }
    }
}

/// Incremental integer row reduction.
///
/// Maintains a set of pivot rows (one per pivot column) whose span over Z is
/// exactly the span of everything pushed so far. Pushing is idempotent for
/// duplicate rows; exact duplicates are skipped before any arithmetic.
pub struct RowReducer {
    cols: usize,
    pivots: BTreeMap<usize, Vec<BigInt>>,
    seen: HashSet<Vec<BigInt>>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer {
            cols,
            pivots: BTreeMap::new(),
            seen: HashSet::new(),
        }
    }

    pub fn push(&mut self, mut row: Vec<BigInt>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        sign_normalize_row(&mut row);
        if row.iter().all(|v| v.is_zero()) || self.seen.contains(&row) {
            return;
        }
        self.seen.insert(row.clone());
        loop {
            let lead = match row.iter().position(|v| !v.is_zero()) {
                Some(c) => c,
                None => return,
            };
            let p = match self.pivots.get(&lead) {
                None => {
                    sign_normalize_row(&mut row);
                    self.tail_reduce(&mut row, lead);
                    self.reduce_column(lead, &row);
                    self.pivots.insert(lead, row);
                    return;
                }
                Some(piv) => piv[lead].clone(),
            };
            let q = row[lead].clone();
            let (quot, rem) = q.div_rem(&p);
            if rem.is_zero() {
                let piv = &self.pivots[&lead];
                for c in lead..self.cols {
                    let sub = &piv[c] * &quot;
                    row[c] -= sub;
                }
            } else {
                // Replace the pivot by the gcd combination and keep reducing
                // the remainder row. The merged pivot is re-reduced against
                // the other rows immediately: without that, entry sizes
                // compound across pushes.
                let mut piv = self.pivots.remove(&lead).unwrap();
                let egcd = p.extended_gcd(&q);
                let (g, x, y) = (egcd.gcd, egcd.x, egcd.y);
                let pg = &p / &g;
                let qg = &q / &g;
                for c in lead..self.cols {
                    let a = piv[c].clone();
                    let b = row[c].clone();
                    piv[c] = &a * &x + &b * &y;
                    row[c] = &b * &pg - &a * &qg;
                }
                self.tail_reduce(&mut piv, lead);
                self.reduce_column(lead, &piv);
                self.pivots.insert(lead, piv);
            }
        }
    }

    /// Reduce the entries of `row` at every pivot column after `lead` into
    /// [0, pivot). Keeps stored rows and long reduction chains from growing.
    fn tail_reduce(&self, row: &mut [BigInt], lead: usize) {
        use std::ops::Bound::Excluded;
        for (&c, piv) in self.pivots.range((Excluded(lead), Excluded(self.cols))) {
            let q = row[c].div_floor(&piv[c]);
            if !q.is_zero() {
                for k in c..self.cols {
                    let sub = &piv[k] * &q;
                    row[k] -= sub;
                }
            }
        }
    }

    /// After the pivot row at column `lead` changed (or appeared), re-reduce
    /// the entries the other rows have in that column.
    fn reduce_column(&mut self, lead: usize, piv: &[BigInt]) {
        let p = &piv[lead];
        for (_, other) in self.pivots.range_mut(0..lead) {
            let q = other[lead].div_floor(p);
            if !q.is_zero() {
                for k in lead..self.cols {
                    let sub = &piv[k] * &q;
                    other[k] -= sub;
                }
            }
        }
    }

    pub fn push_matrix_rows(&mut self, m: &IntMatrix) {
        for r in 0..m.rows() {
            self.push(m.row_vec(r));
        }
    }

    /// The reduced rows in echelon order, with above-pivot entries reduced.
    pub fn into_matrix(self) -> IntMatrix {
        let cols = self.cols;
        let mut rows: Vec<Vec<BigInt>> = self.pivots.into_values().collect();
        // Reduce entries above each pivot, working bottom-up.
        for i in (0..rows.len()).rev() {
            let lead = rows[i].iter().position(|v| !v.is_zero()).unwrap();
            let p = rows[i][lead].clone();
            for j in 0..i {
                let q = rows[j][lead].div_floor(&p);
                if !q.is_zero() {
                    for c in lead..cols {
                        let sub = &rows[i][c] * &q;
                        rows[j][c] -= sub;
                    }
                }
            }
        }
        IntMatrix::from_rows(cols, rows)
    }
}

/// Row Hermite normal form with transform: returns (H, U) with U*A = H,
/// U unimodular, H in row echelon form with positive pivots and entries
/// above each pivot reduced into [0, pivot).
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = a.rows();
    let cols = a.cols();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut rank = 0usize;
    for col in 0..cols {
        // Clear below (rank, col) by gcd steps.
        let mut pivot_row = None;
        for r in rank..rows {
            if !h.get(r, col).is_zero() {
                pivot_row = Some(r);
                break;
            }
        }
        let Some(pr) = pivot_row else { continue };
        swap_rows(&mut h, &mut u, rank, pr);
        for r in rank + 1..rows {
            if h.get(r, col).is_zero() {
                continue;
            }
            let p = h.get(rank, col).clone();
            let q = h.get(r, col).clone();
            let (quot, rem) = q.div_rem(&p);
            if rem.is_zero() {
                row_axpy(&mut h, &mut u, r, rank, &-quot);
            } else {
                let egcd = p.extended_gcd(&q);
                let (g, x, y) = (egcd.gcd, egcd.x, egcd.y);
                let pg = &p / &g;
                let qg = &q / &g;
                two_row_transform(&mut h, &mut u, rank, r, &x, &y, &pg, &qg);
            }
        }
        if h.get(rank, col).is_negative() {
            negate_row(&mut h, &mut u, rank);
        }
        // Reduce entries above the pivot into [0, pivot).
        let p = h.get(rank, col).clone();
        for r in 0..rank {
            let q = h.get(r, col).div_floor(&p);
            if !q.is_zero() {
                row_axpy(&mut h, &mut u, r, rank, &-q);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    (h, u)
}

fn swap_rows(h: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..h.cols() {
        let tmp = h.get(i, c).clone();
        h.set(i, c, h.get(j, c).clone());
        h.set(j, c, tmp);
    }
    for c in 0..u.cols() {
        let tmp = u.get(i, c).clone();
        u.set(i, c, u.get(j, c).clone());
        u.set(j, c, tmp);
    }
}

/// row[i] += k * row[j] on both H and U.
fn row_axpy(h: &mut IntMatrix, u: &mut IntMatrix, i: usize, j: usize, k: &BigInt) {
    for c in 0..h.cols() {
        let add = h.get(j, c) * k;
        *h.entry_mut(i, c) += add;
    }
    for c in 0..u.cols() {
        let add = u.get(j, c) * k;
        *u.entry_mut(i, c) += add;
    }
}

fn negate_row(h: &mut IntMatrix, u: &mut IntMatrix, i: usize) {
    for c in 0..h.cols() {
        let v = -h.get(i, c).clone();
        h.set(i, c, v);
    }
    for c in 0..u.cols() {
        let v = -u.get(i, c).clone();
        u.set(i, c, v);
    }
}

/// Unimodular 2-row update used by gcd steps:
/// new_i = x*row_i + y*row_j, new_j = pg*row_j - qg*row_i.
fn two_row_transform(
    h: &mut IntMatrix,
    u: &mut IntMatrix,
    i: usize,
    j: usize,
    x: &BigInt,
    y: &BigInt,
    pg: &BigInt,
    qg: &BigInt,
) {
    for c in 0..h.cols() {
        let a = h.get(i, c).clone();
        let b = h.get(j, c).clone();
        h.set(i, c, &a * x + &b * y);
        h.set(j, c, &b * pg - &a * qg);
    }
    for c in 0..u.cols() {
        let a = u.get(i, c).clone();
        let b = u.get(j, c).clone();
        u.set(i, c, &a * x + &b * y);
        u.set(j, c, &b * pg - &a * qg);
    }
}

/// Smith normal form: returns (D, U, V) with U*A*V = D, U and V unimodular,
/// D diagonal with nonnegative entries satisfying d_1 | d_2 | ... .
pub fn snf(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let steps = rows.min(cols);

    let mut t = 0usize;
    while t < steps {
        // Find a nonzero entry of minimal absolute value in the submatrix.
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if d.get(r, c).is_zero() {
                    continue;
                }
                match &best {
                    None => best = Some((r, c)),
                    Some((br, bc)) => {
                        if d.get(r, c).abs() < d.get(*br, *bc).abs() {
                            best = Some((r, c));
                        }
                    }
                }
            }
        }
        let Some((br, bc)) = best else { break };
        swap_rows(&mut d, &mut u, t, br);
        swap_cols(&mut d, &mut v, t, bc);

        'outer: loop {
            // Clear column t below the pivot.
            for r in t + 1..rows {
                if d.get(r, t).is_zero() {
                    continue;
                }
                let p = d.get(t, t).clone();
                let q = d.get(r, t).clone();
                let (quot, rem) = q.div_rem(&p);
                if rem.is_zero() {
                    row_axpy(&mut d, &mut u, r, t, &-quot);
                } else {
                    let egcd = p.extended_gcd(&q);
                    let pg = &p / &egcd.gcd;
                    let qg = &q / &egcd.gcd;
                    two_row_transform(&mut d, &mut u, t, r, &egcd.x, &egcd.y, &pg, &qg);
                }
            }
            // Clear row t right of the pivot.
            let mut row_dirty = false;
            for c in t + 1..cols {
                if d.get(t, c).is_zero() {
                    continue;
                }
                let p = d.get(t, t).clone();
                let q = d.get(t, c).clone();
                let (quot, rem) = q.div_rem(&p);
                if rem.is_zero() {
                    col_axpy(&mut d, &mut v, c, t, &-quot);
                } else {
                    let egcd = p.extended_gcd(&q);
                    let pg = &p / &egcd.gcd;
                    let qg = &q / &egcd.gcd;
                    two_col_transform(&mut d, &mut v, t, c, &egcd.x, &egcd.y, &pg, &qg);
                    row_dirty = true;
                }
            }
            if row_dirty {
                // Column operations may have refilled column t.
                continue;
            }
            // Pivot must divide every remaining entry for the chain property.
            for r in t + 1..rows {
                for c in t + 1..cols {
                    if !(d.get(r, c) % d.get(t, t)).is_zero() {
                        row_axpy(&mut d, &mut u, t, r, &BigInt::one());
                        continue 'outer;
                    }
                }
            }
            break;
        }
        if d.get(t, t).is_negative() {
            negate_row(&mut d, &mut u, t);
        }
        t += 1;
    }
    (d, u, v)
}

fn swap_cols(d: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in 0..d.rows() {
        let tmp = d.get(r, i).clone();
        d.set(r, i, d.get(r, j).clone());
        d.set(r, j, tmp);
    }
    for r in 0..v.rows() {
        let tmp = v.get(r, i).clone();
        v.set(r, i, v.get(r, j).clone());
        v.set(r, j, tmp);
    }
}

/// col[i] += k * col[j] on both D and V.
fn col_axpy(d: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize, k: &BigInt) {
    for r in 0..d.rows() {
        let add = d.get(r, j) * k;
        *d.entry_mut(r, i) += add;
    }
    for r in 0..v.rows() {
        let add = v.get(r, j) * k;
        *v.entry_mut(r, i) += add;
    }
}

fn two_col_transform(
    d: &mut IntMatrix,
    v: &mut IntMatrix,
    i: usize,
    j: usize,
    x: &BigInt,
    y: &BigInt,
    pg: &BigInt,
    qg: &BigInt,
) {
    for r in 0..d.rows() {
        let a = d.get(r, i).clone();
        let b = d.get(r, j).clone();
        d.set(r, i, &a * x + &b * y);
        d.set(r, j, &b * pg - &a * qg);
    }
    for r in 0..v.rows() {
        let a = v.get(r, i).clone();
        let b = v.get(r, j).clone();
        v.set(r, i, &a * x + &b * y);
        v.set(r, j, &b * pg - &a * qg);
    }
}

/// Fold a matrix's rows through the incremental reducer. The result has the
/// same row span over Z (hence the same kernel and the same row span mod n).
pub fn reduce_rows(a: &IntMatrix) -> IntMatrix {
    let mut red = RowReducer::new(a.cols());
    red.push_matrix_rows(a);
    red.into_matrix()
}

/// Column span analogue of `reduce_rows`.
pub fn reduce_cols(a: &IntMatrix) -> IntMatrix {
    reduce_rows(&a.transpose()).transpose()
}

pub fn rank(a: &IntMatrix) -> usize {
    reduce_rows(a).rows()
}

/// Basis (over Z) or generating set (over Z/n) of the kernel, as columns.
///
/// Over Z the result is a basis of the full kernel lattice. Over Z/n the
/// kernel of the reduction is computed by augmenting with n*I and projecting,
/// which yields a generating set of the kernel module.
pub fn kernel_basis(a: &IntMatrix, ring: &Ring) -> IntMatrix {
    match ring {
        Ring::Z => {
            // Row operations do not change the kernel; shrink first.
            let reduced = reduce_rows(a);
            let at = reduced.transpose();
            let (h, u) = hnf(&at);
            let mut cols: Vec<Vec<BigInt>> = vec![];
            for r in 0..h.rows() {
                if h.row(r).iter().all(|x| x.is_zero()) {
                    cols.push(u.row_vec(r));
                }
            }
            IntMatrix::from_cols(a.cols(), cols)
        }
        Ring::Mod(n) => {
            let nid = IntMatrix::identity(a.rows()).scale(&BigInt::from(*n));
            let aug = IntMatrix::hcat(&[a, &nid]);
            let k = kernel_basis(&aug, &Ring::Z);
            let proj = k.block(0, 0, a.cols(), k.cols()).reduce_mod(*n);
            let cols: Vec<Vec<BigInt>> = (0..proj.cols())
                .map(|c| proj.col_vec(c))
                .filter(|col| col.iter().any(|x| !x.is_zero()))
                .collect();
            IntMatrix::from_cols(a.cols(), cols)
        }
    }
}

/// Structure of the cokernel of the column span: R^rows / col-span(A),
/// where R is the ring (Z or Z/n).
pub fn cokernel_structure(a: &IntMatrix, ring: &Ring) -> AbelianGroup {
    match ring {
        Ring::Z => {
            let reduced = reduce_cols(a);
            let (d, _, _) = snf(&reduced);
            let k = d.rows().min(d.cols());
            let mut torsion = vec![];
            let mut nonzero = 0usize;
            for i in 0..k {
                let di = d.get(i, i);
                if di.is_zero() {
                    continue;
                }
                nonzero += 1;
                if !di.is_one() {
                    torsion.push(di.clone());
                }
            }
            AbelianGroup {
                free_rank: a.rows() - nonzero,
                torsion,
            }
        }
        Ring::Mod(n) => {
            let nid = IntMatrix::identity(a.rows()).scale(&BigInt::from(*n));
            let aug = IntMatrix::hcat(&[a, &nid]);
            cokernel_structure(&aug, &Ring::Z)
        }
    }
}

/// Structure of span(K) / span(B) inside R^rows.
///
/// K and B are column generating sets. Fails with a membership error if some
/// column of B does not lie in the span of K (over Z/n, spans are taken after
/// augmenting both sides with n*I, i.e. in the full preimage lattices).
pub fn subquotient(k: &IntMatrix, b: &IntMatrix, ring: &Ring) -> Result<AbelianGroup> {
    assert_eq!(k.rows(), b.rows(), "ambient dimension mismatch");
    match ring {
        Ring::Mod(n) => {
            let nid = IntMatrix::identity(k.rows()).scale(&BigInt::from(*n));
            let ka = IntMatrix::hcat(&[k, &nid]);
            let ba = IntMatrix::hcat(&[b, &nid]);
            subquotient(&ka, &ba, &Ring::Z)
        }
        Ring::Z => {
            let kb = reduce_cols(k); // basis of the lattice spanned by K
            let coords = solve_all(&kb, b)?;
            Ok(cokernel_structure(&coords, &Ring::Z))
        }
    }
}

/// Structure of the subgroup of R^rows generated by the columns of K.
pub fn span_structure(k: &IntMatrix, ring: &Ring) -> Result<AbelianGroup> {
    let empty = IntMatrix::zeros(k.rows(), 0);
    subquotient(k, &empty, ring)
}

/// Solve KB * X = B over Z where KB has full column rank (a lattice basis).
/// Returns the coordinate matrix X or a membership error.
fn solve_all(kb: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let r = kb.cols();
    let (h, u) = hnf(kb);
    // Pivot column of each of the first r rows; rank(kb) == cols by
    // construction, so rows r.. of H are zero.
    let mut pivots = Vec::with_capacity(r);
    for i in 0..r {
        let lead = h
            .row(i)
            .iter()
            .position(|x| !x.is_zero())
            .expect("basis matrix lost rank");
        pivots.push(lead);
    }
    let mut x = IntMatrix::zeros(r, b.cols());
    for bc in 0..b.cols() {
        let rhs = u.mul_vec(&b.col_vec(bc));
        let mut xs = vec![BigInt::zero(); r];
        for i in (0..r).rev() {
            let mut acc = rhs[i].clone();
            for j in i + 1..r {
                acc -= h.get(i, pivots[j]) * &xs[j];
            }
            let p = h.get(i, pivots[i]);
            let (q, rem) = acc.div_rem(p);
            if !rem.is_zero() {
                return Err(Error::Membership(format!(
                    "column {bc} is not in the span of the subgroup generators"
                )));
            }
            xs[i] = q;
        }
        for (i, v) in xs.iter().enumerate() {
            x.set(i, bc, v.clone());
        }
        for (i, item) in rhs.iter().enumerate().skip(r) {
            // Residual beyond the lattice: check the remaining transformed rows.
            let _ = i;
            if !item.is_zero() {
                return Err(Error::Membership(format!(
                    "column {bc} is not in the span of the subgroup generators"
                )));
            }
        }
    }
    Ok(x)
}

/// Integer inverse of a unimodular matrix, via the Hermite transform.
pub fn inverse_unimodular(a: &IntMatrix) -> Result<IntMatrix> {
    if a.rows() != a.cols() {
        return Err(Error::NotUnimodular);
    }
    let (h, u) = hnf(a);
    if h.is_identity() {
        Ok(u)
    } else {
        Err(Error::NotUnimodular)
    }
}
