//! The colored Jones polynomial as a sum of evaluated stacks of walks.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::burau::walk_generator;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::weyl::{eval_walksum, walksum_mul, WalkSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CjpOptions {
    /// Run on whichever of the braid and its mirror has fewer simple walks.
    pub mirror_opt: bool,
    /// Drop stacked walks that cannot contribute at the requested color.
    pub drl: bool,
    /// Cap on summed stack heights; defaults to `2·N·k`.
    pub max_height: Option<usize>,
}

impl Default for CjpOptions {
    fn default() -> Self {
        Self {
            mirror_opt: true,
            drl: true,
            max_height: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CjpResult {
    #[serde(skip)]
    pub polynomial: LaurentPolynomial,
    pub mirror_used: bool,
    /// `(N−1)(ω − m + 1)/2` for the braid the loop actually ran on.
    pub framing_exponent: i64,
    /// Number of stack heights `i ≥ 1` whose evaluation was added.
    pub heights_summed: usize,
    /// Simple walks of the braid the loop ran on.
    pub simple_walk_count: usize,
}

pub fn simple_walk_count(braid: &BraidWord) -> Result<usize> {
    Ok(walk_generator(braid, true)?.len())
}

/// Picks the braid or its mirror, whichever has fewer simple walks; ties keep
/// the original. The flag tells whether `q` must be inverted afterwards.
pub fn choose_orientation(braid: &BraidWord) -> Result<(BraidWord, bool)> {
    let (chosen, mirrored, _) = orient(braid)?;
    Ok((chosen, mirrored))
}

fn orient(braid: &BraidWord) -> Result<(BraidWord, bool, WalkSum)> {
    let own = walk_generator(braid, true)?;
    let mirror = braid.mirror();
    let theirs = walk_generator(&mirror, true)?;
    if theirs.len() < own.len() {
        Ok((mirror, true, theirs))
    } else {
        Ok((braid.clone(), false, own))
    }
}

fn framing_exponent(braid: &BraidWord, n: u32) -> i64 {
    let twist = braid.writhe() - braid.strands() as i64 + 1;
    let numerator = (n as i64 - 1) * twist;
    assert!(
        numerator % 2 == 0,
        "writhe parity of a knot braid makes the framing exponent integral"
    );
    numerator / 2
}

/// `J_{N,K}(q)` for the knot `K` closing `braid`.
pub fn colored_jones(braid: &BraidWord, n: u32, opts: CjpOptions) -> Result<CjpResult> {
    if n < 1 {
        return Err(Error::InvalidColor(n as i64));
    }
    braid.require_knot()?;
    if braid.is_empty() {
        return Ok(CjpResult {
            polynomial: LaurentPolynomial::one(),
            mirror_used: false,
            framing_exponent: 0,
            heights_summed: 0,
            simple_walk_count: 0,
        });
    }

    let (work, mirrored, simple) = if opts.mirror_opt {
        orient(braid)?
    } else {
        (braid.clone(), false, walk_generator(braid, true)?)
    };
    let generator = if opts.drl {
        simple.clone()
    } else {
        walk_generator(&work, false)?
    };
    let signs = work.signs();
    let cap = opts.max_height.unwrap_or(2 * n as usize * work.len());

    let mut total = LaurentPolynomial::one();
    let mut stack = if opts.drl {
        generator.pruned(n)
    } else {
        generator.clone()
    };
    let mut heights = 0;
    while !stack.is_empty() {
        let value = eval_walksum(&stack, &signs, n);
        if value.is_zero() {
            break;
        }
        if heights == cap {
            return Err(Error::HeightCapExceeded(cap));
        }
        total += value;
        heights += 1;
        stack = walksum_mul(&generator, &stack, &signs, n, opts.drl);
    }

    let framing = framing_exponent(&work, n);
    let mut polynomial = total.shift(framing);
    if mirrored {
        polynomial = polynomial.invert_var();
    }
    Ok(CjpResult {
        polynomial,
        mirror_used: mirrored,
        framing_exponent: framing,
        heights_summed: heights,
        simple_walk_count: simple.len(),
    })
}
