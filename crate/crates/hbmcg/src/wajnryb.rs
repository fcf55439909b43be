//! The Wajnryb presentation of the genus g handlebody mapping class group.
//!
//! Generators: the annulus twists a_1..a_g, the twist d12 about a curve
//! enclosing the first two feet, the half twist s1 of the first handle, the
//! handle braids t_1..t_{g-1}, and the half twists r(i,j) indexed by the set
//! returned from [`index_set_itilde`].
//!
//! The relations refer to a family of derived elements: twists d_{i,j} about
//! curves separating pairs of spots indexed by the symmetric set I_0, twists
//! d_I about curves enclosing a whole subset I of spots, the derived half
//! twists s_j of later handles, the handle slides k_j, and a handful of
//! auxiliary words (z, z_j, h2, h3). [`Derived`] spells all of these out as
//! words in the actual generators; [`Presentation::wajnryb`] then emits every
//! defining relation with a stable label and a deterministic order.

use crate::error::{Error, Result};
use crate::word::{Gen, Word};
use std::collections::HashMap;

/// The spot index set I_0 = {-g, ..., -1, 1, ..., g} in ascending order.
pub fn index_set_i0(genus: u32) -> Vec<i64> {
    let g = genus as i64;
    (-g..=g).filter(|&k| k != 0).collect()
}

/// Index pairs of the half twist generators r(i,j):
/// (1, j) for 1 < j <= g, and (i, j) for i < 0 with -i < j <= g + i.
/// Ordered with the i = 1 block first, then i = -1, i = -2, ...; each block
/// by ascending j.
pub fn index_set_itilde(genus: u32) -> Vec<(i64, i64)> {
    let g = genus as i64;
    let mut out = vec![];
    for j in 2..=g {
        out.push((1, j));
    }
    let mut i = -1;
    loop {
        let lo = -i + 1;
        let hi = g + i;
        if lo > hi {
            break;
        }
        for j in lo..=hi {
            out.push((i, j));
        }
        i -= 1;
    }
    out
}

/// Builder for the derived words of the presentation, memoizing the d_{i,j}
/// family (the recursive d_{-j,j} words reuse smaller cases heavily).
pub struct Derived {
    genus: i64,
    d_cache: HashMap<(i64, i64), Word>,
}

impl Derived {
    pub fn new(genus: u32) -> Derived {
        Derived {
            genus: genus as i64,
            d_cache: HashMap::new(),
        }
    }

    fn check_spot(&self, i: i64) {
        assert!(
            i != 0 && i.abs() <= self.genus,
            "spot index {i} outside I_0 for genus {}",
            self.genus
        );
    }

    /// a_i, indexed by absolute value: a_{-i} and a_i name the same twist.
    pub fn a(&self, i: i64) -> Word {
        self.check_spot(i);
        Word::gen(Gen::A(i.unsigned_abs() as u32))
    }

    pub fn t(&self, k: i64) -> Word {
        assert!(
            k >= 1 && k < self.genus,
            "braid index {k} outside 1..{} for genus {}",
            self.genus - 1,
            self.genus
        );
        Word::gen(Gen::T(k as u32))
    }

    pub fn s1(&self) -> Word {
        Word::gen(Gen::S1)
    }

    pub fn d12(&self) -> Word {
        Word::gen(Gen::D12)
    }

    pub fn r(&self, i: i64, j: i64) -> Word {
        Word::gen(Gen::R(i as i32, j as u32))
    }

    /// The twist d_{i,j} about a curve enclosing spots i and j, for i < j in
    /// I_0, expressed by conjugating d12 (or, on the diagonal pairs
    /// d_{-j,j}, by a recursion bottoming out at d_{-1,1} = s1^2 a1^4).
    pub fn d_pair(&mut self, i: i64, j: i64) -> Word {
        self.check_spot(i);
        self.check_spot(j);
        assert!(i < j, "d_pair wants i < j, got ({i},{j})");
        if let Some(w) = self.d_cache.get(&(i, j)) {
            return w.clone();
        }
        let w = self.d_pair_uncached(i, j);
        self.d_cache.insert((i, j), w.clone());
        w
    }

    fn d_pair_uncached(&mut self, i: i64, j: i64) -> Word {
        let t = |k: i64| self.t(k);
        let t_inv = |k: i64| self.t(k).inv();
        let base = self.d12();
        if i > 0 {
            // Both spots on the positive side: push d12 along by braids.
            let conj = Word::prod_desc(i - 1, 1, t).mul(&Word::prod_desc(j - 1, 2, t));
            return conj.conj(&base);
        }
        if j < 0 {
            // Both spots on the negative side.
            let conj = Word::prod_desc(-j - 1, 1, t_inv)
                .mul(&Word::prod_desc(-i - 1, 2, t_inv))
                .mul(&self.s1().inv())
                .mul(&self.t(1).inv())
                .mul(&self.s1().inv());
            return conj.conj(&base);
        }
        // Mixed pair i < 0 < j.
        match (i + j).signum() {
            1 => {
                let conj = Word::prod_desc(-i - 1, 1, t_inv)
                    .mul(&self.s1().inv())
                    .mul(&Word::prod_desc(j - 1, 2, t));
                conj.conj(&base)
            }
            -1 => {
                let conj = Word::prod_desc(-i - 1, 1, t_inv)
                    .mul(&self.s1().inv())
                    .mul(&Word::prod_desc(j, 2, t));
                conj.conj(&base)
            }
            _ => {
                // d_{-j,j}: conjugate d_{-1,1} = s1^2 a1^4 outwards one
                // handle at a time.
                let core = self.s1().pow(2).mul(&self.a(1).pow(4));
                let mut conj = Word::identity();
                let mut k = j - 1;
                while k >= 1 {
                    let step = self.t(k).inv().mul(&self.d_pair(k, k + 1));
                    conj = conj.mul(&step);
                    k -= 1;
                }
                conj.conj(&core)
            }
        }
    }

    /// The twist d_I about a curve enclosing the spot subset I (ascending).
    /// By convention d_I for |I| = 1 is the annulus twist of the spot and
    /// d_{} is trivial.
    pub fn d_set(&mut self, set: &[i64]) -> Word {
        debug_assert!(set.windows(2).all(|w| w[0] < w[1]), "d_set wants an ascending set");
        let n = set.len() as i64;
        let mut w = Word::identity();
        for (ai, &sa) in set.iter().enumerate() {
            for &sb in &set[ai + 1..] {
                w = w.mul(&self.d_pair(sa, sb));
            }
        }
        let mut prod_a = Word::identity();
        for &s in set {
            prod_a = prod_a.mul(&self.a(s));
        }
        w.mul(&prod_a.pow(2 - n))
    }

    /// c_{i,j} = d_I for the interval I = {k in I_0 : i <= k <= j}.
    pub fn c(&mut self, i: i64, j: i64) -> Word {
        self.check_spot(i);
        self.check_spot(j);
        assert!(i <= j, "c wants i <= j, got ({i},{j})");
        let set: Vec<i64> = (i..=j).filter(|&k| k != 0).collect();
        self.d_set(&set)
    }

    /// The handle slide k_j = a_j a_{j+1} t_j d_{j,j+1}^{-1}.
    pub fn k(&mut self, j: i64) -> Word {
        let d = self.d_pair(j, j + 1);
        self.a(j)
            .mul(&self.a(j + 1))
            .mul(&self.t(j))
            .mul(&d.inv())
    }

    /// The half twist s_j of handle j, slid over from s1.
    pub fn s(&mut self, j: i64) -> Word {
        assert!(
            j >= 1 && j <= self.genus,
            "handle index {j} outside 1..{} in s_j",
            self.genus
        );
        if j == 1 {
            return self.s1();
        }
        let mut conj = Word::identity();
        let mut m = j - 1;
        while m >= 1 {
            conj = conj.mul(&self.k(m));
            m -= 1;
        }
        conj.conj(&self.s1())
    }

    /// The global word z used by the commutation relations for r(i,j) with
    /// maximal index range.
    pub fn z(&mut self) -> Word {
        let g = self.genus;
        let mut w = Word::prod_asc(1, g, |i| self.a(i));
        let mut m = g - 1;
        while m >= 1 {
            w = w.mul(&self.s1()).mul(&Word::prod_asc(1, m, |k| self.t(k)));
            m -= 1;
        }
        let all: Vec<i64> = (1..=g).collect();
        let tail = self.d_set(&all);
        w.mul(&self.s1()).mul(&tail)
    }

    /// z_j = k_{j-1} k_{j-2} ... k_{g+1-j} z, defined only when 2j > g.
    pub fn z_j(&mut self, j: i64) -> Result<Word> {
        let g = self.genus;
        if 2 * j <= g {
            return Err(Error::Index(format!(
                "z_{j} needs 2j > g, got genus {g}"
            )));
        }
        let mut w = Word::identity();
        let mut m = j - 1;
        while m >= g + 1 - j {
            w = w.mul(&self.k(m));
            m -= 1;
        }
        Ok(w.mul(&self.z()))
    }

    /// h2(j) = k_{j-1}^-1 t_{j-2}^-1 ... t_1^-1 k_{j-1} k_{j-2} ... k_2,
    /// the conjugating word in the recursion for r(1,j).
    pub fn h2(&mut self, j: i64) -> Word {
        let mut w = self.k(j - 1).inv();
        w = w.mul(&Word::prod_desc(j - 2, 1, |m| self.t(m).inv()));
        let mut m = j - 1;
        while m >= 2 {
            w = w.mul(&self.k(m));
            m -= 1;
        }
        w
    }

    /// h3(j) = s1 k_{j-1} ... k_2, the conjugating word in the recursion
    /// for r(-1,j).
    pub fn h3_first(&mut self, j: i64) -> Word {
        let mut w = self.s1();
        let mut m = j - 1;
        while m >= 2 {
            w = w.mul(&self.k(m));
            m -= 1;
        }
        w
    }

    /// h3(i,j) = s_{-i} t_{-1-i}^-1 ... t_1^-1 k_{j-1} ... k_2, the
    /// conjugating word in the recursion for r(i,j) with i < -1.
    pub fn h3_deeper(&mut self, i: i64, j: i64) -> Word {
        let mut w = self.s(-i);
        w = w.mul(&Word::prod_desc(-1 - i, 1, |m| self.t(m).inv()));
        let mut m = j - 1;
        while m >= 2 {
            w = w.mul(&self.k(m));
            m -= 1;
        }
        w
    }
}

/// One defining relation, stored as two words asserted equal in the group.
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    /// The relator lhs * rhs^-1 (trivial in the group).
    pub fn relator(&self) -> Word {
        self.lhs.mul(&self.rhs.inv())
    }
}

/// A finite group presentation with an ordered generator list.
pub struct Presentation {
    pub genus: u32,
    pub gens: Vec<Gen>,
    pub relations: Vec<Relation>,
    index: HashMap<Gen, usize>,
}

impl Presentation {
    /// Assemble an arbitrary presentation (used for small test fixtures).
    pub fn from_parts(gens: Vec<Gen>, relations: Vec<Relation>) -> Presentation {
        let index = gens.iter().enumerate().map(|(n, &g)| (g, n)).collect();
        Presentation {
            genus: 0,
            gens,
            relations,
            index,
        }
    }

    /// The Wajnryb presentation of the genus g handlebody group, g >= 2.
    pub fn wajnryb(genus: u32) -> Result<Presentation> {
        if genus < 2 {
            return Err(Error::Genus(genus));
        }
        let g = genus as i64;
        let mut gens: Vec<Gen> = vec![];
        for i in 1..=genus {
            gens.push(Gen::A(i));
        }
        gens.push(Gen::D12);
        gens.push(Gen::S1);
        for i in 1..genus {
            gens.push(Gen::T(i));
        }
        for &(i, j) in &index_set_itilde(genus) {
            gens.push(Gen::R(i as i32, j as u32));
        }

        let mut der = Derived::new(genus);
        let mut rels: Vec<Relation> = vec![];
        let mut rel = |label: String, lhs: Word, rhs: Word| {
            rels.push(Relation { label, lhs, rhs })
        };
        let i0 = index_set_i0(genus);
        let itilde = index_set_itilde(genus);
        let pairs_i0: Vec<(i64, i64)> = i0
            .iter()
            .flat_map(|&x| i0.iter().filter(move |&&y| y > x).map(move |&y| (x, y)))
            .collect();

        // P1: the annulus twists are central among themselves and commute
        // with every pair twist.
        for i in 1..=g {
            for j in i + 1..=g {
                rel(
                    format!("P1(a)[i={i},j={j}]"),
                    der.a(i).mul(&der.a(j)),
                    der.a(j).mul(&der.a(i)),
                );
            }
        }
        for i in 1..=g {
            for &(j, k) in &pairs_i0 {
                let d = der.d_pair(j, k);
                rel(
                    format!("P1(b)[i={i},j={j},k={k}]"),
                    der.a(i).mul(&d),
                    d.mul(&der.a(i)),
                );
            }
        }

        // P2: the lantern-style interaction of pair twists, split by how the
        // index pairs interleave.
        for &(r, s) in &pairs_i0 {
            for &(i, j) in &pairs_i0 {
                let drs = der.d_pair(r, s);
                let dij = der.d_pair(i, j);
                if (r < s && s < i && i < j) || (i < r && s < j) {
                    rel(
                        format!("P2(a)[r={r},s={s},i={i},j={j}]"),
                        drs.inv().conj(&dij),
                        dij.clone(),
                    );
                }
            }
        }
        for &(r, i) in &pairs_i0 {
            for &j in &i0 {
                if j <= i {
                    continue;
                }
                let dri = der.d_pair(r, i);
                let dij = der.d_pair(i, j);
                let drj = der.d_pair(r, j);
                rel(
                    format!("P2(b)[r={r},i={i},j={j}]"),
                    dri.inv().conj(&dij),
                    drj.conj(&dij),
                );
            }
        }
        for &(i, s) in &pairs_i0 {
            for &j in &i0 {
                if j <= s {
                    continue;
                }
                let dis = der.d_pair(i, s);
                let dij = der.d_pair(i, j);
                let dsj = der.d_pair(s, j);
                rel(
                    format!("P2(c)[i={i},s={s},j={j}]"),
                    dis.inv().conj(&dij),
                    dij.mul(&dsj).conj(&dij),
                );
            }
        }
        for &(r, i) in &pairs_i0 {
            for &(s, j) in &pairs_i0 {
                if !(i < s && s < j && r < i) {
                    continue;
                }
                let drs = der.d_pair(r, s);
                let dij = der.d_pair(i, j);
                let drj = der.d_pair(r, j);
                let dsj = der.d_pair(s, j);
                rel(
                    format!("P2(d)[r={r},s={s},i={i},j={j}]"),
                    drs.inv().conj(&dij),
                    drj.commutator(&dsj).conj(&dij),
                );
            }
        }

        // P3, P4: the twist about all 2g spots is trivial, and dropping one
        // spot leaves the annulus twist of that spot's handle.
        rel("P3".to_string(), der.d_set(&i0), Word::identity());
        for &k in &i0 {
            let set: Vec<i64> = i0.iter().copied().filter(|&x| x != k).collect();
            rel(format!("P4[k={k}]"), der.d_set(&set), der.a(k));
        }

        // P5: the braid relations of the handle braids.
        for i in 1..=g - 2 {
            rel(
                format!("P5(braid)[i={i}]"),
                der.t(i).mul(&der.t(i + 1)).mul(&der.t(i)),
                der.t(i + 1).mul(&der.t(i)).mul(&der.t(i + 1)),
            );
        }
        for i in 1..=g - 1 {
            for j in i + 2..=g - 1 {
                rel(
                    format!("P5(comm)[i={i},j={j}]"),
                    der.t(i).mul(&der.t(j)),
                    der.t(j).mul(&der.t(i)),
                );
            }
        }

        // P6: the square of a handle braid.
        for i in 1..=g - 1 {
            let d1 = der.d_pair(i, i + 1);
            let d2 = der.d_pair(-i - 1, -i);
            rel(
                format!("P6[i={i}]"),
                der.t(i).pow(2),
                d1.mul(&d2)
                    .mul(&der.a(i).pow(-2))
                    .mul(&der.a(i + 1).pow(-2)),
            );
        }

        // P7: how s1 and the braids move the annulus twists.
        for i in 1..=g {
            rel(
                format!("P7(a)[i={i}]"),
                der.s1().mul(&der.a(i)),
                der.a(i).mul(&der.s1()),
            );
        }
        for i in 1..=g - 1 {
            rel(
                format!("P7(b)[i={i}]"),
                der.t(i).conj(&der.a(i)),
                der.a(i + 1),
            );
        }
        for i in 1..=g {
            for j in 1..=g - 1 {
                if j == i - 1 || j == i {
                    continue;
                }
                rel(
                    format!("P7(c)[i={i},j={j}]"),
                    der.a(i).mul(&der.t(j)),
                    der.t(j).mul(&der.a(i)),
                );
            }
        }
        for i in 2..=g - 1 {
            rel(
                format!("P7(d)[i={i}]"),
                der.t(i).mul(&der.s1()),
                der.s1().mul(&der.t(i)),
            );
        }

        // P8: interactions of s1 and the braids with d12 and its neighbors.
        if g >= 3 {
            let d23 = der.d_pair(2, 3);
            rel(
                "P8(a)".to_string(),
                der.s1().mul(&d23),
                d23.mul(&der.s1()),
            );
        }
        let dm22 = der.d_pair(-2, 2);
        rel(
            "P8(b)".to_string(),
            der.s1().mul(&dm22),
            dm22.mul(&der.s1()),
        );
        rel(
            "P8(c)".to_string(),
            der.s1()
                .mul(&der.t(1))
                .mul(&der.s1())
                .mul(&der.t(1)),
            der.t(1)
                .mul(&der.s1())
                .mul(&der.t(1))
                .mul(&der.s1()),
        );
        for i in 1..=g - 1 {
            if i == 2 {
                continue;
            }
            rel(
                format!("P8(d)[i={i}]"),
                der.t(i).mul(&der.d12()),
                der.d12().mul(&der.t(i)),
            );
        }

        // P9: the square of a half twist r(i,j).
        for &(i, j) in &itilde {
            let sj = der.s(j);
            let cij = der.c(i, j);
            rel(
                format!("P9[i={i},j={j}]"),
                der.r(i, j).pow(2),
                sj.mul(&cij).mul(&sj).mul(&cij.inv()),
            );
        }

        // P10: how r(i,j) moves or commutes with the other elements.
        for &(i, j) in &itilde {
            let r = der.r(i, j);
            rel(
                format!("P10(a1)[i={i},j={j}]"),
                r.conj(&der.a(j)),
                der.c(i, j),
            );
            for k in 1..=g {
                if k == j {
                    continue;
                }
                rel(
                    format!("P10(a2)[i={i},j={j},k={k}]"),
                    r.mul(&der.a(k)),
                    der.a(k).mul(&r),
                );
            }
            for k in 1..=g - 1 {
                let untouched = k != i.abs() && k != j - 1 && k != j;
                let inner = i == 1 && k == 1 && j > 2;
                if !(untouched || inner) {
                    continue;
                }
                rel(
                    format!("P10(b)[i={i},j={j},k={k}]"),
                    r.mul(&der.t(k)),
                    der.t(k).mul(&r),
                );
            }
            for k in 1..=g {
                if !(k < i.abs() || k > j || (i < 0 && k == -i)) {
                    continue;
                }
                let sk = der.s(k);
                rel(
                    format!("P10(c)[i={i},j={j},k={k}]"),
                    r.mul(&sk),
                    sk.mul(&r),
                );
            }
            for &(k, m) in &pairs_i0 {
                let strictly_inside = |x: i64| i <= x && x <= j - 1;
                let clear = |x: i64| x != -j && !(i <= x && x <= j);
                if !((strictly_inside(k) && strictly_inside(m)) || (clear(k) && clear(m))) {
                    continue;
                }
                let d = der.d_pair(k, m);
                rel(
                    format!("P10(d)[i={i},j={j},k={k},m={m}]"),
                    r.mul(&d),
                    d.mul(&r),
                );
            }
            if (i == 1 && j == g) || (i < 0 && j == g + i) {
                let zj = der.z_j(j).expect("z_j defined for extremal (i,j)");
                rel(
                    format!("P10(e)[i={i},j={j}]"),
                    r.mul(&zj),
                    zj.mul(&r),
                );
            }
            {
                let dij = der.d_pair(i, j);
                let set: Vec<i64> = (i + 1..=j).filter(|&x| x != 0).collect();
                let dj = der.d_set(&set);
                rel(
                    format!("P10(f)[i={i},j={j}]"),
                    r.conj(&dij),
                    dj,
                );
            }
        }
        for j in 2..=g {
            let r = der.r(1, j);
            let d = der.d_pair(-j, 1 - j);
            let conj = Word::prod_desc(j - 2, 1, |m| der.t(m));
            let c = der.c(-1, j);
            rel(
                format!("P10(g)[j={j}]"),
                r.conj(&d),
                conj.conj(&c),
            );
        }
        for &(i, j) in &itilde {
            if !(i < 0 && i + j > 1) {
                continue;
            }
            let r = der.r(i, j);
            let d = der.d_pair(-j, 1 - j);
            let conj = Word::prod_desc(j - 2, 1 - i, |m| der.t(m));
            let c = der.c(i - 1, j);
            rel(
                format!("P10(h)[i={i},j={j}]"),
                r.conj(&d),
                conj.conj(&c),
            );
        }
        for &(i, j) in &itilde {
            if j >= g {
                continue;
            }
            let r = der.r(i, j);
            let d = der.d_pair(-j - 1, -j);
            let s = der.s(j + 1);
            let c = der.c(i, j + 1);
            rel(
                format!("P10(i)[i={i},j={j}]"),
                r.inv().conj(&d),
                s.inv().conj(&c),
            );
        }

        // P11: r(i,j) inverts the braid t_{j-1}, except on the diagonal.
        for &(i, j) in &itilde {
            if -i + 1 == j {
                continue;
            }
            let r = der.r(i, j);
            let t = der.t(j - 1);
            rel(
                format!("P11[i={i},j={j}]"),
                r.conj(&t),
                t.inv().conj(&r),
            );
        }

        // P12: the recursion expressing each r(i,j) through r(1,2).
        for j in 3..=g {
            let sj = der.s(j);
            let c1j = der.c(1, j);
            let kj1 = der.k(j - 1);
            let c1jm2 = der.c(1, j - 2);
            let c1jm1 = der.c(1, j - 1);
            let h2 = der.h2(j);
            let rhs = sj
                .mul(&c1j)
                .mul(&sj)
                .mul(&c1j.inv())
                .mul(&kj1)
                .mul(&der.a(j))
                .mul(&c1jm2)
                .mul(&der.t(j - 1))
                .mul(&c1jm1.inv())
                .mul(&der.t(j - 1).inv())
                .mul(&der.r(1, j - 1).inv())
                .mul(&der.s(j - 1))
                .mul(&h2)
                .mul(&der.r(1, 2).inv())
                .mul(&h2.inv())
                .mul(&kj1.inv());
            rel(format!("P12(a)[j={j}]"), der.r(1, j), rhs);
        }
        for j in 2..=g - 1 {
            let h3 = der.h3_first(j);
            let sj = der.s(j);
            let cm1jm1 = der.c(-1, j - 1);
            let c1jm1 = der.c(1, j - 1);
            let cm1j = der.c(-1, j);
            let rhs = h3
                .mul(&der.r(1, 2).inv())
                .mul(&h3.inv())
                .mul(&sj)
                .mul(&der.r(1, j).inv())
                .mul(&cm1jm1.inv())
                .mul(&c1jm1)
                .mul(&der.a(1))
                .mul(&sj)
                .mul(&cm1j)
                .mul(&sj)
                .mul(&cm1j.inv());
            rel(format!("P12(b)[j={j}]"), der.r(-1, j), rhs);
        }
        for &(i, j) in &itilde {
            if i >= -1 {
                continue;
            }
            let h3 = der.h3_deeper(i, j);
            let sj = der.s(j);
            let cijm1 = der.c(i, j - 1);
            let ci1jm1 = der.c(i + 1, j - 1);
            let cij = der.c(i, j);
            let rhs = h3
                .mul(&der.r(1, 2).inv())
                .mul(&h3.inv())
                .mul(&sj)
                .mul(&der.r(i + 1, j).inv())
                .mul(&cijm1.inv())
                .mul(&ci1jm1)
                .mul(&der.a(-i))
                .mul(&sj)
                .mul(&cij)
                .mul(&sj)
                .mul(&cij.inv());
            rel(format!("P12(c)[i={i},j={j}]"), der.r(i, j), rhs);
        }

        let index = gens.iter().enumerate().map(|(n, &g)| (g, n)).collect();
        Ok(Presentation {
            genus,
            gens,
            relations: rels,
            index,
        })
    }

    pub fn gen_index(&self, g: Gen) -> Option<usize> {
        self.index.get(&g).copied()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "genus": self.genus,
            "generators": self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(|r| serde_json::json!({
                "label": r.label,
                "lhs": r.lhs.to_string(),
                "rhs": r.rhs.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}
