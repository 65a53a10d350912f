//! Braid words and the combinatorics of their closures.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One generator `σ_index^sign`; `index` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub index: usize,
    pub sign: Sign,
}

impl Crossing {
    pub fn new(index: usize, sign: Sign) -> Self {
        Self { index, sign }
    }

    /// Signed integer form: `+i` for `σ_i`, `-i` for `σ_i^-1`.
    pub fn signed(self) -> i64 {
        self.index as i64 * self.sign.value()
    }
}

/// A word in the braid group on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    crossings: Vec<Crossing>,
    strands: usize,
}

impl BraidWord {
    pub fn new(crossings: Vec<Crossing>, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::BraidParse(
                "a braid needs at least one strand".into(),
            ));
        }
        for c in &crossings {
            if c.index == 0 || c.index >= strands {
                return Err(Error::IndexOutOfRange {
                    index: c.index,
                    strands,
                });
            }
        }
        Ok(Self { crossings, strands })
    }

    /// Builds a braid from signed generator indices, inferring the strand count.
    pub fn from_signed(word: &[i64]) -> Result<Self> {
        Self::from_signed_with_strands(word, None)
    }

    pub fn from_signed_with_strands(word: &[i64], strands: Option<usize>) -> Result<Self> {
        let mut crossings = Vec::with_capacity(word.len());
        for &g in word {
            if g == 0 {
                return Err(Error::BraidParse("generator index 0 is not allowed".into()));
            }
            let sign = if g > 0 {
                Sign::Positive
            } else {
                Sign::Negative
            };
            crossings.push(Crossing::new(g.unsigned_abs() as usize, sign));
        }
        let needed = crossings.iter().map(|c| c.index + 1).max().unwrap_or(1);
        let strands = match strands {
            Some(m) if m < needed => {
                return Err(Error::BraidParse(format!(
                    "{m} strands requested but the word needs {needed}"
                )))
            }
            Some(m) => m,
            None => needed,
        };
        Self::new(crossings, strands)
    }

    /// Parses whitespace- or comma-separated signed generator indices.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut word = Vec::new();
        for tok in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let tok = tok.replace('\u{2212}', "-");
            let g: i64 = tok
                .parse()
                .map_err(|_| Error::BraidParse(format!("invalid token `{tok}`")))?;
            word.push(g);
        }
        if word.is_empty() && strands.is_none() {
            // empty braid on one strand: the unknot
            return Self::new(Vec::new(), 1);
        }
        Self::from_signed_with_strands(&word, strands)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.crossings.iter().map(|c| c.sign).collect()
    }

    pub fn signed(&self) -> Vec<i64> {
        self.crossings.iter().map(|c| c.signed()).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn mirror(&self) -> Self {
        Self {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing::new(c.index, c.sign.flip()))
                .collect(),
            strands: self.strands,
        }
    }

    /// The composite `t_1 ∘ t_2 ∘ ... ∘ t_k` of the transpositions `(i, i+1)`
    /// of the crossings, as a 0-based map. Signs are ignored.
    pub fn closure_permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for c in &self.crossings {
            perm.swap(c.index - 1, c.index);
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.closure_permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    pub fn is_knot_closure(&self) -> bool {
        self.components() == 1
    }

    pub fn require_knot(&self) -> Result<()> {
        match self.components() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// Appends `σ_m^sign`, adding a strand. Preserves the closure's knot type.
    pub fn stabilize(&self, sign: Sign) -> Self {
        let mut crossings = self.crossings.clone();
        crossings.push(Crossing::new(self.strands, sign));
        Self {
            crossings,
            strands: self.strands + 1,
        }
    }

    /// `σ w σ^-1` for a generator `σ`.
    pub fn conjugate(&self, by: Crossing) -> Result<Self> {
        let mut crossings = Vec::with_capacity(self.len() + 2);
        crossings.push(by);
        crossings.extend_from_slice(&self.crossings);
        crossings.push(Crossing::new(by.index, by.sign.flip()));
        Self::new(crossings, self.strands)
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", c.signed())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_infers_strands() {
        let fig8 = b("-1 2 -1 2");
        assert_eq!(fig8.len(), 4);
        assert_eq!(fig8.strands(), 3);
        let t = b("1,1,1");
        assert_eq!((t.len(), t.strands()), (3, 2));
        assert!(BraidWord::parse("0 2", None).is_err());
        assert!(BraidWord::parse("1 x", None).is_err());
        assert!(BraidWord::parse("1 2", Some(2)).is_err());
        assert_eq!(BraidWord::parse("1", Some(4)).unwrap().strands(), 4);
        let trivial = BraidWord::parse("", Some(3)).unwrap();
        assert!(trivial.is_empty());
        assert_eq!(trivial.strands(), 3);
        assert_eq!(b("").strands(), 1);
    }

    #[test]
    fn closure_permutation_and_knots() {
        // strand 1 -> 3, 2 -> 1, 3 -> 2
        assert_eq!(b("-1 2 -1 2").closure_permutation(), vec![2, 0, 1]);
        assert_eq!(b("").closure_permutation(), vec![0]);
        assert_eq!(b("1 1").closure_permutation(), vec![0, 1]);
        assert!(b("-1 2 -1 2").is_knot_closure());
        assert!(!b("1 1").is_knot_closure());
        assert_eq!(b("1 1").components(), 2);
        assert!(b("").is_knot_closure());
    }

    #[test]
    fn writhe_and_mirror() {
        assert_eq!(b("-1 2 -1 2").writhe(), 0);
        assert_eq!(b("1 1 1").writhe(), 3);
        assert_eq!(b("-1").writhe(), -1);
        assert_eq!(b("-1 2 -1 2").mirror(), b("1 -2 1 -2"));
        assert_eq!(b("1 1 1").mirror(), b("-1 -1 -1"));
        assert_eq!(b("1 -2 1 -2").to_string(), "1 -2 1 -2");
    }

    #[test]
    fn markov_moves_keep_knots() {
        let t = b("1 1 1");
        let s = t.stabilize(Sign::Negative);
        assert_eq!(s, BraidWord::parse("1 1 1 -2", Some(3)).unwrap());
        assert!(s.is_knot_closure());
        let c = t.conjugate(Crossing::new(1, Sign::Positive)).unwrap();
        assert_eq!(c, b("1 1 1 1 -1"));
    }
}
