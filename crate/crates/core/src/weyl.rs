//! Crossing weights in the q-Weyl algebra, kept permanently in normal form.
//!
//! A monomial is stored as a coefficient in `Z[q, q^-1]` times the normal
//! word which, crossing by crossing in ascending order, reads
//! `b^s c^r a^d`. Letters at different crossings commute, so multiplying two
//! normal monomials only reorders letters belonging to the same crossing and
//! the reordering cost is a closed-form power of `q`:
//!
//! * positive crossing: `a b = b a`, `a c = q c a`, `b c = q^2 c b`, giving
//!   `Δ = d₁r₂ − 2r₁s₂`;
//! * negative crossing: `a b = q^2 b a`, `c a = q a c`, `c b = q^2 b c`,
//!   giving `Δ = 2d₁s₂ − d₁r₂ + 2r₁s₂`.
//!
//! The evaluation map `E_N` sends a normal monomial to its coefficient times a
//! product of per-crossing factors that depend only on `(sign, r, d)`.

use std::fmt;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use crate::braid::Sign;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
    C,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::A => "a",
            Letter::B => "b",
            Letter::C => "c",
        })
    }
}

/// Multiplicities of `b`, `c` and `a` at one crossing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterCounts {
    pub b: u32,
    pub c: u32,
    pub a: u32,
}

impl LetterCounts {
    pub const fn new(b: u32, c: u32, a: u32) -> Self {
        Self { b, c, a }
    }

    pub fn of(letter: Letter) -> Self {
        match letter {
            Letter::A => Self::new(0, 0, 1),
            Letter::B => Self::new(1, 0, 0),
            Letter::C => Self::new(0, 1, 0),
        }
    }

    pub fn total(self) -> u32 {
        self.a + self.b + self.c
    }

    fn plus(self, other: Self) -> Self {
        Self::new(self.b + other.b, self.c + other.c, self.a + other.a)
    }
}

/// Per-crossing letter multiplicities of a normal word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentKey(Box<[LetterCounts]>);

impl ExponentKey {
    /// The empty word on `crossings` crossings.
    pub fn empty(crossings: usize) -> Self {
        Self(vec![LetterCounts::default(); crossings].into_boxed_slice())
    }

    /// A single letter at `crossing` (0-based).
    pub fn letter(crossings: usize, crossing: usize, letter: Letter) -> Self {
        let mut counts = vec![LetterCounts::default(); crossings];
        counts[crossing] = LetterCounts::of(letter);
        Self(counts.into_boxed_slice())
    }

    pub fn from_counts(counts: Vec<LetterCounts>) -> Self {
        Self(counts.into_boxed_slice())
    }

    pub fn counts(&self) -> &[LetterCounts] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|c| c.total() == 0)
    }

    pub fn letter_count(&self) -> u32 {
        self.0.iter().map(|c| c.total()).sum()
    }

    /// Crossings (0-based) carrying at least one letter.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| c.total() > 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for ExponentKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.0.iter().enumerate() {
            for (letter, n) in [(Letter::B, c.b), (Letter::C, c.c), (Letter::A, c.a)] {
                if n == 0 {
                    continue;
                }
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{letter}{}", j + 1)?;
                if n > 1 {
                    write!(f, "^{n}")?;
                }
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Product of two normal words together with the `q`-power produced by
/// restoring normal order. No length checks.
pub(crate) fn mul_keys(
    left: &ExponentKey,
    right: &ExponentKey,
    signs: &[Sign],
) -> (ExponentKey, i64) {
    let mut delta = 0i64;
    let counts = left
        .0
        .iter()
        .zip(right.0.iter())
        .zip(signs)
        .map(|((l, r), sign)| {
            let (r1, d1) = (l.c as i64, l.a as i64);
            let (s2, r2) = (r.b as i64, r.c as i64);
            delta += match sign {
                Sign::Positive => d1 * r2 - 2 * r1 * s2,
                Sign::Negative => 2 * d1 * s2 - d1 * r2 + 2 * r1 * s2,
            };
            l.plus(*r)
        })
        .collect();
    (ExponentKey(counts), delta)
}

/// `coeff` times a normal word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyedMonomial {
    pub key: ExponentKey,
    pub coeff: LaurentPolynomial,
}

impl KeyedMonomial {
    pub fn new(key: ExponentKey, coeff: LaurentPolynomial) -> Self {
        Self { key, coeff }
    }

    pub fn letter(crossings: usize, crossing: usize, letter: Letter) -> Self {
        Self::new(
            ExponentKey::letter(crossings, crossing, letter),
            LaurentPolynomial::one(),
        )
    }
}

fn check_len(key: &ExponentKey, signs: &[Sign]) -> Result<()> {
    if key.len() != signs.len() {
        return Err(Error::KeyLength {
            expected: signs.len(),
            found: key.len(),
        });
    }
    Ok(())
}

/// Multiplies two monomials in the algebra of the braid with crossing `signs`.
pub fn mono_mul(
    left: &KeyedMonomial,
    right: &KeyedMonomial,
    signs: &[Sign],
) -> Result<KeyedMonomial> {
    check_len(&left.key, signs)?;
    check_len(&right.key, signs)?;
    let (key, delta) = mul_keys(&left.key, &right.key, signs);
    let coeff = (&left.coeff * &right.coeff).shift(delta);
    Ok(KeyedMonomial { key, coeff })
}

/// Duplicate-reduction filter: false iff some crossing carries
/// `a + max(b, c) >= n` letters, in which case the monomial is either
/// zero under `E_n` or cancels against a partner.
pub fn drl_keep(key: &ExponentKey, n: u32) -> bool {
    key.0.iter().all(|c| c.a + c.b.max(c.c) < n)
}

/// `E_N` of the single-crossing normal word `b^s c^r a^d`; `s` does not matter.
pub fn crossing_factor(sign: Sign, r: u32, d: u32, n: u32) -> LaurentPolynomial {
    let (r, d, n) = (r as i64, d as i64, n as i64);
    // vanishing factor 1 - q^0 appears iff r < n <= r + d
    if r < n && n <= r + d {
        return LaurentPolynomial::zero();
    }
    let (shift, exps): (i64, Vec<i64>) = match sign {
        Sign::Positive => (r * (n - 1 - d), (0..d).map(|h| n - 1 - r - h).collect()),
        Sign::Negative => (-r * (n - 1), (0..d).map(|l| r + l + 1 - n).collect()),
    };
    let one = LaurentPolynomial::one();
    exps.into_iter()
        .fold(LaurentPolynomial::q_pow(shift), |acc, e| {
            &acc * &(&one - &LaurentPolynomial::q_pow(e))
        })
}

/// Evaluates normal words for a fixed braid and color, memoizing the
/// per-crossing factors.
pub struct Evaluator<'a> {
    signs: &'a [Sign],
    n: u32,
    table: FxHashMap<(Sign, u32, u32), LaurentPolynomial>,
}

impl<'a> Evaluator<'a> {
    pub fn new(signs: &'a [Sign], n: u32) -> Self {
        Self {
            signs,
            n,
            table: FxHashMap::default(),
        }
    }

    /// Fills the factor table for every `(sign, r, d)` occurring in `keys`.
    pub fn prepare<'k>(&mut self, keys: impl IntoIterator<Item = &'k ExponentKey>) {
        for key in keys {
            for (c, sign) in key.0.iter().zip(self.signs) {
                if c.a == 0 && c.c == 0 {
                    continue;
                }
                let n = self.n;
                self.table
                    .entry((*sign, c.c, c.a))
                    .or_insert_with(|| crossing_factor(*sign, c.c, c.a, n));
            }
        }
    }

    /// `E_N` of the bare normal word `key`.
    pub fn eval_key(&self, key: &ExponentKey) -> LaurentPolynomial {
        let mut shift = 0i64;
        let mut acc = LaurentPolynomial::one();
        for (c, sign) in key.0.iter().zip(self.signs) {
            if c.a == 0 {
                // no a-letters: a pure monomial factor
                shift += match sign {
                    Sign::Positive => c.c as i64 * (self.n as i64 - 1),
                    Sign::Negative => -(c.c as i64) * (self.n as i64 - 1),
                };
                continue;
            }
            let owned;
            let factor = match self.table.get(&(*sign, c.c, c.a)) {
                Some(f) => f,
                None => {
                    owned = crossing_factor(*sign, c.c, c.a, self.n);
                    &owned
                }
            };
            if factor.is_zero() {
                return LaurentPolynomial::zero();
            }
            acc = &acc * factor;
        }
        acc.shift(shift)
    }

    pub fn eval(&self, mono: &KeyedMonomial) -> LaurentPolynomial {
        let v = self.eval_key(&mono.key);
        if v.is_zero() {
            return v;
        }
        &mono.coeff * &v
    }
}

/// `E_N` of one monomial.
pub fn eval_word(mono: &KeyedMonomial, signs: &[Sign], n: u32) -> LaurentPolynomial {
    Evaluator::new(signs, n).eval(mono)
}

/// A linear combination of distinct normal words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WalkSum {
    entries: FxHashMap<ExponentKey, LaurentPolynomial>,
}

impl WalkSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_monomial(mono: KeyedMonomial) -> Self {
        let mut ws = Self::new();
        ws.add(mono.key, mono.coeff);
        ws
    }

    /// The unit element on `crossings` crossings.
    pub fn one(crossings: usize) -> Self {
        Self::from_monomial(KeyedMonomial::new(
            ExponentKey::empty(crossings),
            LaurentPolynomial::one(),
        ))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &ExponentKey) -> Option<&LaurentPolynomial> {
        self.entries.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExponentKey, &LaurentPolynomial)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &ExponentKey> {
        self.entries.keys()
    }

    /// Entries sorted by key, for stable display and comparison in tests.
    pub fn sorted(&self) -> Vec<(&ExponentKey, &LaurentPolynomial)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Adds `coeff · key`, deleting the entry if it cancels.
    pub fn add(&mut self, key: ExponentKey, coeff: LaurentPolynomial) {
        if coeff.is_zero() {
            return;
        }
        match self.entries.entry(key) {
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn merge(mut self, other: WalkSum) -> WalkSum {
        let (mut big, small) = if self.len() >= other.len() {
            (std::mem::take(&mut self), other)
        } else {
            (other, std::mem::take(&mut self))
        };
        for (k, c) in small.entries {
            big.add(k, c);
        }
        big
    }

    pub fn scale(&self, factor: &LaurentPolynomial) -> WalkSum {
        let mut out = WalkSum::new();
        for (k, c) in &self.entries {
            out.add(k.clone(), c * factor);
        }
        out
    }

    /// Keeps only entries passing [`drl_keep`] at color `n`.
    pub fn pruned(&self, n: u32) -> WalkSum {
        WalkSum {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| drl_keep(k, n))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&ExponentKey) -> bool) {
        self.entries.retain(|k, _| keep(k));
    }
}

impl FromIterator<KeyedMonomial> for WalkSum {
    fn from_iter<I: IntoIterator<Item = KeyedMonomial>>(iter: I) -> Self {
        let mut ws = WalkSum::new();
        for m in iter {
            ws.add(m.key, m.coeff);
        }
        ws
    }
}

impl fmt::Display for WalkSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.sorted().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·{k}")?;
        }
        Ok(())
    }
}

/// `E_N` of a walk sum.
pub fn eval_walksum(ws: &WalkSum, signs: &[Sign], n: u32) -> LaurentPolynomial {
    let mut evaluator = Evaluator::new(signs, n);
    evaluator.prepare(ws.keys());
    let entries: Vec<_> = ws.iter().collect();
    par::fold_reduce(
        &entries,
        LaurentPolynomial::zero,
        |mut acc, (k, c)| {
            let v = evaluator.eval_key(k);
            if !v.is_zero() {
                acc += &(*c * &v);
            }
            acc
        },
        |a, b| a + b,
    )
}

/// Product `left · right`. With `prune` set, products failing
/// [`drl_keep`] at color `n` are dropped before accumulation.
pub fn walksum_mul(
    left: &WalkSum,
    right: &WalkSum,
    signs: &[Sign],
    n: u32,
    prune: bool,
) -> WalkSum {
    let lefts: Vec<_> = left.iter().collect();
    let rights: Vec<_> = right.iter().collect();
    par::fold_reduce(
        &rights,
        WalkSum::new,
        |mut acc, (rk, rc)| {
            for (lk, lc) in &lefts {
                let (key, delta) = mul_keys(lk, rk, signs);
                if prune && !drl_keep(&key, n) {
                    continue;
                }
                acc.add(key, (*lc * *rc).shift(delta));
            }
            acc
        },
        WalkSum::merge,
    )
}

/// Builds a monomial from `(crossing, letter)` pairs multiplied left to right.
pub fn word(crossings: usize, letters: &[(usize, Letter)], signs: &[Sign]) -> KeyedMonomial {
    letters.iter().fold(
        KeyedMonomial::new(ExponentKey::empty(crossings), LaurentPolynomial::one()),
        |acc, &(j, l)| {
            mono_mul(&acc, &KeyedMonomial::letter(crossings, j, l), signs)
                .expect("lengths agree by construction")
        },
    )
}

impl KeyedMonomial {
    pub fn scaled(mut self, coeff: impl Into<BigInt>, q_exp: i64) -> Self {
        self.coeff = self.coeff.scale(&coeff.into()).shift(q_exp);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{A, B, C};
    use Sign::{Negative as Neg, Positive as Pos};

    const FIG8: [Sign; 4] = [Neg, Pos, Neg, Pos];

    fn key(counts: &[(u32, u32, u32)]) -> ExponentKey {
        ExponentKey::from_counts(
            counts
                .iter()
                .map(|&(b, c, a)| LetterCounts::new(b, c, a))
                .collect(),
        )
    }

    fn p(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn a_then_c_at_positive_crossing() {
        let signs = [Pos];
        let m = mono_mul(
            &KeyedMonomial::letter(1, 0, A),
            &KeyedMonomial::letter(1, 0, C),
            &signs,
        )
        .unwrap();
        assert_eq!(m.key, key(&[(0, 1, 1)]));
        assert_eq!(m.coeff, p("q"));
    }

    #[test]
    fn letters_at_different_crossings_commute() {
        let signs = [Pos, Pos];
        let m = mono_mul(
            &KeyedMonomial::letter(2, 0, A),
            &KeyedMonomial::letter(2, 1, B),
            &signs,
        )
        .unwrap();
        assert_eq!(m.key, key(&[(0, 0, 1), (1, 0, 0)]));
        assert!(m.coeff.is_one());
    }

    #[test]
    fn figure_eight_pair_product() {
        // (q c2 a3 b4)(q a1 b2 c4)
        let left = word(4, &[(1, C), (2, A), (3, B)], &FIG8).scaled(1, 1);
        let right = word(4, &[(0, A), (1, B), (3, C)], &FIG8).scaled(1, 1);
        let m = mono_mul(&left, &right, &FIG8).unwrap();
        assert_eq!(m.key, key(&[(0, 0, 1), (1, 1, 0), (0, 0, 1), (1, 1, 0)]));
        assert!(m.coeff.is_one());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let err = mono_mul(
            &KeyedMonomial::letter(2, 0, A),
            &KeyedMonomial::letter(3, 0, A),
            &[Pos, Pos],
        );
        assert_eq!(
            err,
            Err(Error::KeyLength {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn duplicate_reduction_filter() {
        assert!(!drl_keep(&key(&[(0, 0, 0), (0, 1, 1)]), 2));
        assert!(drl_keep(&key(&[(1, 0, 0), (0, 1, 0), (0, 0, 1)]), 2));
        assert!(drl_keep(&key(&[(1, 1, 0)]), 2));
        assert!(!drl_keep(&key(&[(0, 0, 0), (1, 0, 0)]), 1));
        assert!(drl_keep(&key(&[(0, 0, 0)]), 1));
    }

    #[test]
    fn word_evaluation() {
        let m = KeyedMonomial::new(key(&[(0, 0, 1)]), p("q"));
        assert_eq!(eval_word(&m, &[Neg], 2), p("q - 1"));
        let trefoil = [Pos, Pos, Pos];
        let m = KeyedMonomial::new(key(&[(0, 1, 0), (0, 0, 1), (1, 0, 0)]), p("q"));
        assert_eq!(eval_word(&m, &trefoil, 2), p("q^2 - q^3"));
        let m = KeyedMonomial::new(ExponentKey::empty(3), LaurentPolynomial::one());
        assert!(eval_word(&m, &trefoil, 2).is_one());
    }

    #[test]
    fn paired_keys_vanish_only_at_color_two() {
        // c2 a3 a4 b1 c3 b4 normalized: crossing 3 carries (0,1,1)
        let k = key(&[(1, 0, 0), (0, 1, 0), (0, 1, 1), (1, 0, 1)]);
        let m = KeyedMonomial::new(k, LaurentPolynomial::one());
        assert!(eval_word(&m, &FIG8, 2).is_zero());
        assert!(!eval_word(&m, &FIG8, 3).is_zero());
    }

    #[test]
    fn walksum_products() {
        let trefoil = [Pos, Pos, Pos];
        let c1 = WalkSum::from_monomial(word(3, &[(0, C), (1, A), (2, B)], &trefoil).scaled(1, 1));
        let sq = walksum_mul(&c1, &c1, &trefoil, 3, true);
        assert_eq!(sq.len(), 1);
        assert_eq!(
            sq.get(&key(&[(0, 2, 0), (0, 0, 2), (2, 0, 0)])),
            Some(&p("q^2"))
        );
        assert!(walksum_mul(&c1, &WalkSum::new(), &trefoil, 3, true).is_empty());
        assert!(eval_walksum(&WalkSum::new(), &trefoil, 2).is_zero());
    }

    #[test]
    fn key_display() {
        let k = key(&[(0, 0, 1), (1, 1, 0), (0, 0, 0), (0, 2, 0)]);
        assert_eq!(k.to_string(), "a1 b2 c2 c4^2");
        assert_eq!(ExponentKey::empty(2).to_string(), "1");
    }
}
