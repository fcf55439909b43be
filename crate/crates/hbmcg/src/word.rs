//! Words in the generators of the handlebody group presentation.
//!
//! A `Word` is a freely reduced string of generator letters with exponents
//! +1 or -1. Free reduction happens on construction and under every product,
//! so two words that are equal in the free group compare equal as values.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A generator symbol of the presentation.
///
/// `A`, `D12`, `S1`, `T`, `R` are the Wajnryb generators (`R(i, j)` carries
/// its half-twist index pair, with `i` possibly negative). `X` is a free slot
/// for ad-hoc presentations such as test fixtures; it never occurs in the
/// handlebody presentation itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    A(u32),
    D12,
    S1,
    T(u32),
    R(i32, u32),
    X(u32),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::A(k) => write!(f, "a{k}"),
            Gen::D12 => write!(f, "d12"),
            Gen::S1 => write!(f, "s1"),
            Gen::T(k) => write!(f, "t{k}"),
            Gen::R(i, j) => write!(f, "r({i},{j})"),
            Gen::X(k) => write!(f, "x{k}"),
        }
    }
}

impl FromStr for Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gen> {
        let bad = || Error::UnknownGenerator(s.to_string());
        if s == "d12" {
            return Ok(Gen::D12);
        }
        if s == "s1" {
            return Ok(Gen::S1);
        }
        if let Some(rest) = s.strip_prefix("r(") {
            let inner = rest.strip_suffix(')').ok_or_else(bad)?;
            let (i, j) = inner.split_once(',').ok_or_else(bad)?;
            let i: i32 = i.trim().parse().map_err(|_| bad())?;
            let j: u32 = j.trim().parse().map_err(|_| bad())?;
            return Ok(Gen::R(i, j));
        }
        let (head, tail) = s.split_at(1);
        let k: u32 = tail.parse().map_err(|_| bad())?;
        match head {
            "a" => Ok(Gen::A(k)),
            "t" => Ok(Gen::T(k)),
            "x" => Ok(Gen::X(k)),
            _ => Err(bad()),
        }
    }
}

/// A freely reduced word. The identity is the empty word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<(Gen, i8)>,
}

impl Word {
    pub fn identity() -> Word {
        Word { letters: vec![] }
    }

    /// Single generator letter.
    pub fn gen(g: Gen) -> Word {
        Word {
            letters: vec![(g, 1)],
        }
    }

    /// Single inverse letter.
    pub fn gen_inv(g: Gen) -> Word {
        Word {
            letters: vec![(g, -1)],
        }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (Gen, i8)>) -> Word {
        let mut w = Word::identity();
        for (g, e) in letters {
            assert!(e == 1 || e == -1, "letter exponent must be +1 or -1");
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: Gen, e: i8) {
        match self.letters.last() {
            Some(&(h, f)) if h == g && f == -e => {
                self.letters.pop();
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[(Gen, i8)] {
        &self.letters
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inv(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Left conjugation: `self * other * self^-1`.
    pub fn conj(&self, other: &Word) -> Word {
        self.mul(other).mul(&self.inv())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..n.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `self * other * self^-1 * other^-1`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.mul(other).mul(&self.inv()).mul(&other.inv())
    }

    /// Total exponent of the generator `g` (the image in the abelianization
    /// of the free group).
    pub fn exponent_sum(&self, g: Gen) -> i64 {
        self.letters
            .iter()
            .filter(|&&(h, _)| h == g)
            .map(|&(_, e)| i64::from(e))
            .sum()
    }

    /// Product `w_a * w_{a-1} * ... * w_b` of `f(k)` for k descending from
    /// `a` to `b`; empty when `a < b`. Descending runs of twist generators
    /// appear throughout the presentation, so this helper keeps call sites
    /// close to the formulas they implement.
    pub fn prod_desc(a: i64, b: i64, f: impl Fn(i64) -> Word) -> Word {
        let mut w = Word::identity();
        let mut k = a;
        while k >= b {
            w = w.mul(&f(k));
            k -= 1;
        }
        w
    }

    /// Ascending product `w_a * w_{a+1} * ... * w_b`; empty when `a > b`.
    pub fn prod_asc(a: i64, b: i64, f: impl Fn(i64) -> Word) -> Word {
        let mut w = Word::identity();
        let mut k = a;
        while k <= b {
            w = w.mul(&f(k));
            k += 1;
        }
        w
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = vec![];
        let mut i = 0;
        while i < self.letters.len() {
            let (g, e) = self.letters[i];
            let mut run = 0i64;
            while i < self.letters.len() && self.letters[i] == (g, e) {
                run += 1;
                i += 1;
            }
            let total = run * i64::from(e);
            if total == 1 {
                parts.push(g.to_string());
            } else {
                parts.push(format!("{g}^{total}"));
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::identity());
        }
        let mut w = Word::identity();
        for token in s.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {token}")))?;
                    (n, e)
                }
                None => (token, 1),
            };
            let g: Gen = name.parse()?;
            w = w.mul(&Word::gen(g).pow(exp));
        }
        Ok(w)
    }
}
