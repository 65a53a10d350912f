//! Brute-force reference computation on free (unordered) words.
//!
//! Nothing here uses the normal-form multiplication of [`crate::weyl`]:
//! words are concatenated as letter strings and only brought to normal form
//! by adjacent swaps using the defining relations. Exponential in the input,
//! meant for small braids and colors.

use rustc_hash::FxHashMap;

use crate::braid::{BraidWord, Sign};
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::weyl::{ExponentKey, KeyedMonomial, Letter, LetterCounts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FreeLetter {
    pub kind: Letter,
    /// 0-based crossing.
    pub crossing: usize,
}

impl FreeLetter {
    pub fn new(kind: Letter, crossing: usize) -> Self {
        Self { kind, crossing }
    }

    fn order(self) -> (usize, u8) {
        let rank = match self.kind {
            Letter::B => 0,
            Letter::C => 1,
            Letter::A => 2,
        };
        (self.crossing, rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeWord {
    pub letters: Vec<FreeLetter>,
    pub coeff: LaurentPolynomial,
}

impl FreeWord {
    pub fn new(letters: Vec<FreeLetter>, coeff: LaurentPolynomial) -> Self {
        Self { letters, coeff }
    }
}

/// Which out-of-order adjacent pair to swap first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schedule {
    LeftmostFirst,
    RightmostFirst,
}

/// Exponent `e` in `x y = q^e y x` for letters at one crossing.
fn swap_exponent(x: Letter, y: Letter, sign: Sign) -> i64 {
    use Letter::{A, B, C};
    match (sign, x, y) {
        // a b = b a,  a c = q c a,  b c = q^2 c b
        (Sign::Positive, A, B) => 0,
        (Sign::Positive, A, C) => 1,
        (Sign::Positive, C, B) => -2,
        // a b = q^2 b a,  c a = q a c,  c b = q^2 b c
        (Sign::Negative, A, B) => 2,
        (Sign::Negative, A, C) => -1,
        (Sign::Negative, C, B) => 2,
        _ => unreachable!("only out-of-order pairs are swapped"),
    }
}

pub fn free_normalize(word: &FreeWord, signs: &[Sign]) -> KeyedMonomial {
    free_normalize_with(word, signs, Schedule::LeftmostFirst)
}

/// Bubble-sorts `word` into normal order, one adjacent swap at a time.
pub fn free_normalize_with(word: &FreeWord, signs: &[Sign], schedule: Schedule) -> KeyedMonomial {
    let mut letters = word.letters.clone();
    let mut z = 0i64;
    loop {
        let out_of_order = |i: &usize| letters[*i].order() > letters[*i + 1].order();
        let n = letters.len();
        let pos = match schedule {
            Schedule::LeftmostFirst => (0..n.saturating_sub(1)).find(out_of_order),
            Schedule::RightmostFirst => (0..n.saturating_sub(1)).rev().find(out_of_order),
        };
        let Some(i) = pos else { break };
        let (x, y) = (letters[i], letters[i + 1]);
        if x.crossing == y.crossing {
            z += swap_exponent(x.kind, y.kind, signs[x.crossing]);
        }
        letters.swap(i, i + 1);
    }
    let mut counts = vec![LetterCounts::default(); signs.len()];
    for l in &letters {
        let c = &mut counts[l.crossing];
        match l.kind {
            Letter::A => c.a += 1,
            Letter::B => c.b += 1,
            Letter::C => c.c += 1,
        }
    }
    KeyedMonomial::new(ExponentKey::from_counts(counts), word.coeff.shift(z))
}

/// `E_N` of a normal monomial, computed factor by factor from the
/// single-crossing axioms.
pub fn closed_form_eval(mono: &KeyedMonomial, signs: &[Sign], n: u32) -> LaurentPolynomial {
    let n = n as i64;
    let one = LaurentPolynomial::one();
    let mut acc = mono.coeff.clone();
    for (c, sign) in mono.key.counts().iter().zip(signs) {
        let (r, d) = (c.c as i64, c.a as i64);
        let mut factor = match sign {
            Sign::Positive => LaurentPolynomial::q_pow(r * (n - 1 - d)),
            Sign::Negative => LaurentPolynomial::q_pow(-r * (n - 1)),
        };
        for j in 0..d {
            let e = match sign {
                Sign::Positive => n - 1 - r - j,
                Sign::Negative => r + j + 1 - n,
            };
            factor = &factor * &(&one - &LaurentPolynomial::q_pow(e));
        }
        acc = &acc * &factor;
    }
    acc
}

/// Linear combination of free words, collected only when letter strings
/// coincide exactly.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeSum(FxHashMap<Vec<FreeLetter>, LaurentPolynomial>);

impl FreeSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::word(Vec::new(), LaurentPolynomial::one())
    }

    pub fn letter(kind: Letter, crossing: usize) -> Self {
        Self::word(
            vec![FreeLetter::new(kind, crossing)],
            LaurentPolynomial::one(),
        )
    }

    pub fn word(letters: Vec<FreeLetter>, coeff: LaurentPolynomial) -> Self {
        let mut s = Self::zero();
        s.add(letters, coeff);
        s
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = FreeWord> + '_ {
        self.0
            .iter()
            .map(|(l, c)| FreeWord::new(l.clone(), c.clone()))
    }

    fn add(&mut self, letters: Vec<FreeLetter>, coeff: LaurentPolynomial) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.0.entry(letters).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.0.retain(|_, c| !c.is_zero());
        }
    }

    pub fn plus(&self, other: &FreeSum) -> FreeSum {
        let mut out = self.clone();
        for (l, c) in &other.0 {
            out.add(l.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, coeff: &LaurentPolynomial) -> FreeSum {
        let mut out = FreeSum::zero();
        for (l, c) in &self.0 {
            out.add(l.clone(), c * coeff);
        }
        out
    }

    /// Concatenation product `self · other`.
    pub fn times(&self, other: &FreeSum) -> FreeSum {
        let mut out = FreeSum::zero();
        for (l1, c1) in &self.0 {
            for (l2, c2) in &other.0 {
                let mut letters = l1.clone();
                letters.extend_from_slice(l2);
                out.add(letters, c1 * c2);
            }
        }
        out
    }

    /// Normal form of the whole sum as `key -> coefficient`.
    pub fn normalized(&self, signs: &[Sign]) -> FxHashMap<ExponentKey, LaurentPolynomial> {
        let mut out: FxHashMap<ExponentKey, LaurentPolynomial> = FxHashMap::default();
        for w in self.words() {
            let m = free_normalize(&w, signs);
            *out.entry(m.key).or_default() += m.coeff;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

type FreeMatrix = Vec<Vec<FreeSum>>;

fn free_identity(m: usize) -> FreeMatrix {
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        FreeSum::unit()
                    } else {
                        FreeSum::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn free_mul(x: &FreeMatrix, y: &FreeMatrix) -> FreeMatrix {
    let m = x.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| (0..m).fold(FreeSum::zero(), |acc, l| acc.plus(&x[i][l].times(&y[l][j]))))
                .collect()
        })
        .collect()
}

fn free_burau(braid: &BraidWord) -> FreeMatrix {
    let m = braid.strands();
    let mut rho = free_identity(m);
    for (j, c) in braid.crossings().iter().enumerate() {
        let mut g = free_identity(m);
        let (i, i1) = (c.index - 1, c.index);
        let l = |kind| FreeSum::letter(kind, j);
        match c.sign {
            Sign::Positive => {
                g[i][i] = l(Letter::A);
                g[i][i1] = l(Letter::B);
                g[i1][i] = l(Letter::C);
                g[i1][i1] = FreeSum::zero();
            }
            Sign::Negative => {
                g[i][i] = FreeSum::zero();
                g[i][i1] = l(Letter::C);
                g[i1][i] = l(Letter::B);
                g[i1][i1] = l(Letter::A);
            }
        }
        rho = free_mul(&rho, &g);
    }
    rho
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn inversions(p: &[usize]) -> i64 {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// `C_{qρ'(β)}` expanded over free words, with no pruning.
pub fn free_walk_generator(braid: &BraidWord) -> FreeSum {
    let rho = free_burau(braid);
    let n = braid.strands() - 1;
    let mut total = FreeSum::zero();
    for mask in 1u32..(1 << n) {
        // rows/columns 1.. of ρ, i.e. strands 2..m
        let set: Vec<usize> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| i + 1)
            .collect();
        let size = set.len() as i64;
        for perm in permutations(set.len()) {
            let inv = inversions(&perm);
            let sign = if (size - 1 + inv) % 2 == 0 { 1 } else { -1 };
            let coeff = LaurentPolynomial::monomial(sign, size + inv);
            let product = (0..set.len()).fold(FreeSum::unit(), |acc, col| {
                acc.times(&rho[set[perm[col]]][set[col]])
            });
            total = total.plus(&product.scaled(&coeff));
        }
    }
    total
}

fn eval_free(sum: &FreeSum, signs: &[Sign], n: u32) -> LaurentPolynomial {
    sum.words()
        .map(|w| closed_form_eval(&free_normalize(&w, signs), signs, n))
        .sum()
}

/// Reference `J_{N,K}(q)`: full determinant expansion on free words, no
/// pruning, no mirror choice.
pub fn naive_colored_jones(braid: &BraidWord, n: u32) -> Result<LaurentPolynomial> {
    if n < 1 {
        return Err(Error::InvalidColor(n as i64));
    }
    braid.require_knot()?;
    if braid.is_empty() {
        return Ok(LaurentPolynomial::one());
    }
    let signs = braid.signs();
    let generator = free_walk_generator(braid);
    let cap = 2 * n as usize * braid.len();
    let mut total = LaurentPolynomial::one();
    let mut stack = generator.clone();
    let mut height = 0;
    while !stack.is_empty() {
        let value = eval_free(&stack, &signs, n);
        if value.is_zero() {
            break;
        }
        if height == cap {
            return Err(Error::HeightCapExceeded(cap));
        }
        total += value;
        height += 1;
        stack = generator.times(&stack);
    }
    let twist = braid.writhe() - braid.strands() as i64 + 1;
    Ok(total.shift((n as i64 - 1) * twist / 2))
}

/// Checks `ac = q·ca`, `bd = q·db` and `ad = da + q·cb − q⁻¹·bc` for
/// `[[a, b], [c, d]]`.
pub fn right_quantum_check(m: &[[FreeSum; 2]; 2], signs: &[Sign]) -> bool {
    let [[a, b], [c, d]] = m;
    let q = LaurentPolynomial::q_pow(1);
    let q_inv = LaurentPolynomial::q_pow(-1);
    let minus_one = LaurentPolynomial::from(-1);
    let vanishes = |s: FreeSum| s.normalized(signs).is_empty();
    let first = a.times(c).plus(&c.times(a).scaled(&(&minus_one * &q)));
    let second = b.times(d).plus(&d.times(b).scaled(&(&minus_one * &q)));
    let third = a
        .times(d)
        .plus(&d.times(a).scaled(&minus_one))
        .plus(&c.times(b).scaled(&(&minus_one * &q)))
        .plus(&b.times(c).scaled(&q_inv));
    vanishes(first) && vanishes(second) && vanishes(third)
}
