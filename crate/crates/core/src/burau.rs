//! Deformed Burau matrices with walk-sum entries, the quantum determinant,
//! and the generator of walks `C` of `q·ρ'(β)`.

use crate::braid::{BraidWord, Sign};
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::par;
use crate::weyl::{walksum_mul, ExponentKey, KeyedMonomial, Letter, WalkSum};

/// Square matrix over the walk algebra of a braid with `crossings` crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauMatrix {
    dim: usize,
    crossings: usize,
    entries: Vec<WalkSum>,
}

impl BurauMatrix {
    pub fn zeros(dim: usize, crossings: usize) -> Self {
        Self {
            dim,
            crossings,
            entries: vec![WalkSum::new(); dim * dim],
        }
    }

    pub fn identity(dim: usize, crossings: usize) -> Self {
        let mut m = Self::zeros(dim, crossings);
        for i in 0..dim {
            m.entries[i * dim + i] = WalkSum::one(crossings);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &WalkSum {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: WalkSum) {
        self.entries[row * self.dim + col] = value;
    }

    /// Matrix product; entries of `self` multiply from the left.
    pub fn mul(&self, rhs: &BurauMatrix, signs: &[Sign]) -> BurauMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let dim = self.dim;
        let mut out = BurauMatrix::zeros(dim, self.crossings);
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = WalkSum::new();
                for l in 0..dim {
                    let (a, b) = (self.get(i, l), rhs.get(l, j));
                    if a.is_empty() || b.is_empty() {
                        continue;
                    }
                    acc = acc.merge(walksum_mul(a, b, signs, 0, false));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// The `J × J` submatrix for 0-based indices `rows`.
    pub fn submatrix(&self, rows: &[usize]) -> BurauMatrix {
        let mut out = BurauMatrix::zeros(rows.len(), self.crossings);
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in rows.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }
}

/// `A_j` for crossing `crossing` (0-based position in the word) acting on
/// strands `index`, `index + 1` (1-based), embedded in an `m × m` identity.
pub fn generator_matrix(
    crossing: usize,
    index: usize,
    sign: Sign,
    strands: usize,
    crossings: usize,
) -> Result<BurauMatrix> {
    if index == 0 || index >= strands {
        return Err(Error::IndexOutOfRange { index, strands });
    }
    let letter = |l| WalkSum::from_monomial(KeyedMonomial::letter(crossings, crossing, l));
    let mut m = BurauMatrix::identity(strands, crossings);
    let (i, j) = (index - 1, index);
    // S+ = [[a, b], [c, 0]],  S- = [[0, c], [b, a]]
    let block = match sign {
        Sign::Positive => [
            [letter(Letter::A), letter(Letter::B)],
            [letter(Letter::C), WalkSum::new()],
        ],
        Sign::Negative => [
            [WalkSum::new(), letter(Letter::C)],
            [letter(Letter::B), letter(Letter::A)],
        ],
    };
    let [[tl, tr], [bl, br]] = block;
    m.set(i, i, tl);
    m.set(i, j, tr);
    m.set(j, i, bl);
    m.set(j, j, br);
    Ok(m)
}

/// `ρ(β) = A_1 A_2 ⋯ A_k`.
pub fn braid_matrix(braid: &BraidWord) -> BurauMatrix {
    let k = braid.len();
    let signs = braid.signs();
    braid.crossings().iter().enumerate().fold(
        BurauMatrix::identity(braid.strands(), k),
        |acc, (j, c)| {
            let g = generator_matrix(j, c.index, c.sign, braid.strands(), k)
                .expect("braid indices are validated on construction");
            acc.mul(&g, &signs)
        },
    )
}

/// Drops the first row and column.
pub fn reduced_matrix(m: &BurauMatrix) -> Result<BurauMatrix> {
    if m.dim < 2 {
        return Err(Error::NoMinor(m.dim));
    }
    let rows: Vec<usize> = (1..m.dim).collect();
    Ok(m.submatrix(&rows))
}

/// `det_q(M) = Σ_π (−q)^{inv π} M[π(1),1] ⋯ M[π(n),n]`, products taken in
/// column order.
pub fn quantum_det(m: &BurauMatrix, signs: &[Sign]) -> WalkSum {
    quantum_det_scaled(m, signs, &LaurentPolynomial::one(), None)
}

/// `scale · det_q(M)`, optionally pruning every partial product with the
/// duplicate-reduction filter at `prune`.
fn quantum_det_scaled(
    m: &BurauMatrix,
    signs: &[Sign],
    scale: &LaurentPolynomial,
    prune: Option<u32>,
) -> WalkSum {
    let mut out = WalkSum::new();
    let mut used = vec![false; m.dim];
    let start = WalkSum::one(m.crossings);
    expand_columns(m, signs, prune, 0, 0, &start, &mut used, scale, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn expand_columns(
    m: &BurauMatrix,
    signs: &[Sign],
    prune: Option<u32>,
    col: usize,
    inversions: i64,
    partial: &WalkSum,
    used: &mut [bool],
    scale: &LaurentPolynomial,
    out: &mut WalkSum,
) {
    if col == m.dim {
        // (−q)^inv
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let coeff = scale * &LaurentPolynomial::monomial(sign, inversions);
        let term = partial.scale(&coeff);
        *out = std::mem::take(out).merge(term);
        return;
    }
    for row in 0..m.dim {
        if used[row] {
            continue;
        }
        let entry = m.get(row, col);
        if entry.is_empty() {
            continue;
        }
        let next = walksum_mul(partial, entry, signs, prune.unwrap_or(0), prune.is_some());
        if next.is_empty() {
            continue;
        }
        // earlier columns holding a larger row index form inversions with this one
        let added = used[row + 1..].iter().filter(|u| **u).count() as i64;
        used[row] = true;
        expand_columns(
            m,
            signs,
            prune,
            col + 1,
            inversions + added,
            &next,
            used,
            scale,
            out,
        );
        used[row] = false;
    }
}

fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    (1u64..(1u64 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// The walk generator `C_{qρ'(β)} = Σ_{∅≠J} (−1)^{|J|−1} q^{|J|} det_q(ρ'(β)_J)`,
/// with `J` ranging over strands `2..m`. With `prune_simple`, partial
/// products failing the color-2 filter are dropped, leaving the simple walks.
pub fn walk_generator(braid: &BraidWord, prune_simple: bool) -> Result<WalkSum> {
    braid.require_knot()?;
    if braid.strands() < 2 {
        return Ok(WalkSum::new());
    }
    let signs = braid.signs();
    let reduced = reduced_matrix(&braid_matrix(braid))?;
    let prune = prune_simple.then_some(2);
    let subsets = nonempty_subsets(reduced.dim());
    Ok(par::fold_reduce(
        &subsets,
        WalkSum::new,
        |acc, rows| {
            let size = rows.len() as i64;
            let sign = if size % 2 == 1 { 1 } else { -1 };
            let scale = LaurentPolynomial::monomial(sign, size);
            let det = quantum_det_scaled(&reduced.submatrix(rows), &signs, &scale, prune);
            acc.merge(det)
        },
        WalkSum::merge,
    ))
}

/// Number of walks, i.e. terms of the unreduced determinant expansion of
/// `C_{qρ'(β)}` before like terms are collected.
pub fn walk_count(braid: &BraidWord) -> Result<u128> {
    braid.require_knot()?;
    if braid.strands() < 2 {
        return Ok(0);
    }
    let reduced = reduced_matrix(&braid_matrix(braid))?;
    let n = reduced.dim();
    let sizes: Vec<u128> = (0..n * n)
        .map(|i| reduced.get(i / n, i % n).len() as u128)
        .collect();
    let total = nonempty_subsets(n)
        .iter()
        .map(|rows| {
            let mut used = vec![false; rows.len()];
            permanent(&sizes, n, rows, 0, &mut used)
        })
        .sum();
    Ok(total)
}

fn permanent(sizes: &[u128], n: usize, rows: &[usize], col: usize, used: &mut [bool]) -> u128 {
    if col == rows.len() {
        return 1;
    }
    let mut total = 0;
    for i in 0..rows.len() {
        if used[i] {
            continue;
        }
        let s = sizes[rows[i] * n + rows[col]];
        if s == 0 {
            continue;
        }
        used[i] = true;
        total += s * permanent(sizes, n, rows, col + 1, used);
        used[i] = false;
    }
    total
}

/// Crossing-length-`k` key from `(crossing, letter)` pairs; test helper for
/// writing down monomials by hand.
pub fn key_of(crossings: usize, letters: &[(usize, Letter)]) -> ExponentKey {
    let mut counts = ExponentKey::empty(crossings).counts().to_vec();
    for &(j, l) in letters {
        let c = &mut counts[j];
        match l {
            Letter::A => c.a += 1,
            Letter::B => c.b += 1,
            Letter::C => c.c += 1,
        }
    }
    ExponentKey::from_counts(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::word;
    use Letter::{A, B, C};
    use Sign::{Negative as Neg, Positive as Pos};

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn letters(k: usize, ls: &[(usize, Letter)], signs: &[Sign]) -> WalkSum {
        WalkSum::from_monomial(word(k, ls, signs))
    }

    fn sum(parts: &[WalkSum]) -> WalkSum {
        parts.iter().cloned().fold(WalkSum::new(), WalkSum::merge)
    }

    #[test]
    fn generator_blocks() {
        let m = generator_matrix(0, 1, Neg, 3, 4).unwrap();
        let signs = [Neg, Pos, Neg, Pos];
        assert!(m.get(0, 0).is_empty());
        assert_eq!(m.get(0, 1), &letters(4, &[(0, C)], &signs));
        assert_eq!(m.get(1, 0), &letters(4, &[(0, B)], &signs));
        assert_eq!(m.get(1, 1), &letters(4, &[(0, A)], &signs));
        assert_eq!(m.get(2, 2), &WalkSum::one(4));

        let m = generator_matrix(1, 2, Pos, 3, 4).unwrap();
        assert_eq!(m.get(0, 0), &WalkSum::one(4));
        assert_eq!(m.get(1, 1), &letters(4, &[(1, A)], &signs));
        assert_eq!(m.get(1, 2), &letters(4, &[(1, B)], &signs));
        assert_eq!(m.get(2, 1), &letters(4, &[(1, C)], &signs));
        assert!(m.get(2, 2).is_empty());

        let s = generator_matrix(0, 1, Pos, 2, 1).unwrap();
        assert_eq!(s.get(0, 0), &letters(1, &[(0, A)], &[Pos]));
        assert!(generator_matrix(0, 3, Pos, 3, 1).is_err());
    }

    #[test]
    fn figure_eight_burau_matrix() {
        let braid = b("-1 2 -1 2");
        let s = braid.signs();
        let rho = braid_matrix(&braid);
        assert_eq!(rho.get(0, 0), &letters(4, &[(0, C), (1, A), (2, B)], &s));
        assert_eq!(
            rho.get(1, 1),
            &sum(&[
                letters(4, &[(0, A), (1, B), (3, C)], &s),
                letters(4, &[(0, B), (2, C), (3, A)], &s),
                letters(4, &[(0, A), (1, A), (2, A), (3, A)], &s),
            ])
        );
        assert_eq!(rho.get(2, 2), &letters(4, &[(1, C), (2, A), (3, B)], &s));
        let reduced = reduced_matrix(&rho).unwrap();
        assert_eq!(reduced.dim(), 2);
        assert_eq!(reduced.get(0, 0), rho.get(1, 1));
        assert_eq!(
            reduced.get(0, 1),
            &sum(&[
                letters(4, &[(0, B), (2, C), (3, B)], &s),
                letters(4, &[(0, A), (1, A), (2, A), (3, B)], &s),
            ])
        );
        assert_eq!(
            reduced.get(1, 0),
            &letters(4, &[(1, C), (2, A), (3, A)], &s)
        );
    }

    #[test]
    fn small_matrices() {
        assert_eq!(
            braid_matrix(&BraidWord::parse("", Some(2)).unwrap()),
            BurauMatrix::identity(2, 0)
        );
        let t = b("1 1 1");
        let rho = braid_matrix(&t);
        assert_eq!(
            rho.get(1, 1),
            &letters(3, &[(0, C), (1, A), (2, B)], &t.signs())
        );
        let s = braid_matrix(&b("1"));
        let minor = reduced_matrix(&s).unwrap();
        assert_eq!(minor.dim(), 1);
        assert!(minor.get(0, 0).is_empty());
        assert_eq!(
            reduced_matrix(&BurauMatrix::identity(3, 0)).unwrap(),
            BurauMatrix::identity(2, 0)
        );
        assert_eq!(
            reduced_matrix(&BurauMatrix::identity(1, 0)),
            Err(Error::NoMinor(1))
        );
    }

    #[test]
    fn quantum_det_two_by_two() {
        // distinct letters at distinct crossings so products stay apart
        let signs = [Pos, Pos, Pos, Pos];
        let e = |j| letters(4, &[(j, A)], &signs);
        let mut m = BurauMatrix::zeros(2, 4);
        m.set(0, 0, e(0));
        m.set(0, 1, e(1));
        m.set(1, 0, e(2));
        m.set(1, 1, e(3));
        let det = quantum_det(&m, &signs);
        let expected = sum(&[
            letters(4, &[(0, A), (3, A)], &signs),
            letters(4, &[(2, A), (1, A)], &signs).scale(&"-q".parse().unwrap()),
        ]);
        assert_eq!(det, expected);
        let one = m.submatrix(&[1]);
        assert_eq!(quantum_det(&one, &signs), e(3));
    }

    #[test]
    fn walk_generator_small_braids() {
        assert!(walk_generator(&b("1"), true).unwrap().is_empty());
        assert!(walk_generator(&b("1 1"), true).is_err());
        let t = b("1 1 1");
        let c = walk_generator(&t, true).unwrap();
        let expected =
            letters(3, &[(0, C), (1, A), (2, B)], &t.signs()).scale(&"q".parse().unwrap());
        assert_eq!(c, expected);
        assert_eq!(walk_generator(&b("-1 -1 -1"), true).unwrap().len(), 3);
    }

    #[test]
    fn figure_eight_walk_counts() {
        let fig8 = b("-1 2 -1 2");
        assert_eq!(walk_count(&fig8).unwrap(), 9);
        assert_eq!(walk_count(&b("1 1 1")).unwrap(), 1);
        let pruned = walk_generator(&fig8, true).unwrap();
        assert_eq!(pruned.len(), 5);
        let k = key_of(4, &[(0, A), (1, B), (1, C), (2, A), (3, B), (3, C)]);
        assert_eq!(pruned.get(&k), Some(&LaurentPolynomial::from(-1)));
    }

    #[test]
    fn figure_eight_first_evaluation() {
        let fig8 = b("-1 2 -1 2");
        let pruned = walk_generator(&fig8, true).unwrap();
        let value = crate::weyl::eval_walksum(&pruned, &fig8.signs(), 2);
        assert_eq!(value, "q^-1 - 4 + 5*q - 3*q^2 + q^3".parse().unwrap());
    }
}
