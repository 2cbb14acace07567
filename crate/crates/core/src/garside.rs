//! The Garside element, square-free braids and the divisors of `Δ_n`.
//!
//! Divisors are written in block form `β_{k_1,j_1} … β_{k_s,j_s}` where
//! `β_{k,j} = x_k x_{k-1} … x_j` and the tops `k_h` strictly increase.
//! Each such product is already the length-lex minimum of its class, so
//! enumerating block sequences enumerates canonical divisors directly.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{BraidWord, CanonicalBraid, Canonicalizer};

/// Closure cap used by [`divisors_oracle_default`]; large enough for `Δ_5`
/// (768 representatives) and far too small for `Δ_6`.
pub const DIVISOR_ORACLE_CAP: usize = 100_000;

/// Largest strand count for which [`enumerate_divisors`] will materialise `n!` forms.
pub const MAX_DIVISOR_STRANDS: usize = 10;

/// The descending run `x_top x_{top-1} … x_bottom`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub top: usize,
    pub bottom: usize,
}

impl Block {
    pub fn new(top: usize, bottom: usize) -> Self {
        Self { top, bottom }
    }

    pub fn len(&self) -> usize {
        self.top + 1 - self.bottom
    }

    pub fn is_empty(&self) -> bool {
        self.bottom > self.top
    }

    pub(crate) fn push_letters(&self, out: &mut Vec<u8>) {
        out.extend((self.bottom..=self.top).rev().map(|i| i as u8));
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.top, self.bottom)
    }
}

pub(crate) fn expand_blocks(strands: usize, blocks: &[Block]) -> BraidWord {
    let mut letters = Vec::new();
    for b in blocks {
        b.push_letters(&mut letters);
    }
    BraidWord::from_raw(strands, letters)
}

pub(crate) fn check_block_shape(strands: usize, blocks: &[Block]) -> Result<()> {
    let mut prev_top = 0;
    for b in blocks {
        if b.top == 0 || b.top >= strands {
            return Err(Error::InvalidBlocks(format!(
                "top {} outside 1..={}",
                b.top,
                strands.saturating_sub(1)
            )));
        }
        if b.bottom == 0 || b.bottom > b.top {
            return Err(Error::InvalidBlocks(format!(
                "bottom {} outside 1..={}",
                b.bottom, b.top
            )));
        }
        if b.top <= prev_top {
            return Err(Error::InvalidBlocks("tops must strictly increase".into()));
        }
        prev_top = b.top;
    }
    Ok(())
}

/// A divisor of `Δ_n` in block form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorForm {
    strands: usize,
    blocks: Vec<Block>,
}

impl DivisorForm {
    pub fn new(strands: usize, blocks: Vec<Block>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands {
                min: 2,
                got: strands,
            });
        }
        check_block_shape(strands, &blocks)?;
        Ok(Self { strands, blocks })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Block::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn expand(&self) -> BraidWord {
        expand_blocks(self.strands, &self.blocks)
    }

    pub fn to_canonical(&self) -> CanonicalBraid {
        CanonicalBraid::assume_canonical(self.expand())
    }
}

/// `Δ_n = x_1 (x_2 x_1) … (x_{n-1} … x_1)`.
pub fn delta_word(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::TooFewStrands { min: 2, got: n });
    }
    let blocks: Vec<Block> = (1..n).map(|k| Block::new(k, 1)).collect();
    Ok(expand_blocks(n, &blocks))
}

/// True iff no representative of `w` contains a square `x_i x_i`.
pub fn is_square_free(w: &BraidWord, canon: &mut Canonicalizer) -> Result<bool> {
    for i in 1..w.strands() {
        let square = BraidWord::from_indices(w.strands(), &[i, i])?;
        if canon.contains_factor(w, &square)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All divisors of `Δ_n` in block form, lexicographic on block sequences.
/// There are exactly `n!` of them.
pub fn enumerate_divisors(n: usize) -> Result<Vec<DivisorForm>> {
    if n < 2 {
        return Err(Error::TooFewStrands { min: 2, got: n });
    }
    if n > MAX_DIVISOR_STRANDS {
        return Err(Error::OutOfRange {
            what: "divisor enumeration",
            detail: format!("n = {n} > {MAX_DIVISOR_STRANDS}"),
        });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend_divisors(n, 1, &mut stack, &mut out);
    Ok(out)
}

fn extend_divisors(n: usize, min_top: usize, cur: &mut Vec<Block>, out: &mut Vec<DivisorForm>) {
    out.push(DivisorForm {
        strands: n,
        blocks: cur.clone(),
    });
    for top in min_top..n {
        for bottom in 1..=top {
            cur.push(Block::new(top, bottom));
            extend_divisors(n, top + 1, cur, out);
            cur.pop();
        }
    }
}

/// The divisors of `Δ_n` as a set of canonical braids.
pub fn divisor_set(n: usize) -> Result<BTreeSet<CanonicalBraid>> {
    Ok(enumerate_divisors(n)?
        .iter()
        .map(DivisorForm::to_canonical)
        .collect())
}

/// Checks by closure that every block expansion is its own canonical form.
/// Returns the first offending form, if any.
pub fn first_noncanonical_divisor(
    forms: &[DivisorForm],
    canon: &mut Canonicalizer,
) -> Result<Option<DivisorForm>> {
    for f in forms {
        let w = f.expand();
        if canon.canonical_form(&w)?.word() != &w {
            return Ok(Some(f.clone()));
        }
    }
    Ok(None)
}

/// Brute-force `Div(Δ_n)`: canonical forms of every contiguous factor of
/// every representative of `Δ_n`.
pub fn divisors_oracle(n: usize, canon: &mut Canonicalizer) -> Result<BTreeSet<CanonicalBraid>> {
    let delta = delta_word(n)?;
    let class = canon.class_letters(delta.letters())?;
    let len = delta.len();
    let mut out = BTreeSet::new();
    for member in class.iter() {
        for start in 0..=len {
            for end in start..=len {
                let factor = BraidWord::from_raw(n, member[start..end].to_vec());
                out.insert(canon.canonical_form(&factor)?);
            }
        }
    }
    Ok(out)
}

/// [`divisors_oracle`] with a fresh engine capped at [`DIVISOR_ORACLE_CAP`].
pub fn divisors_oracle_default(n: usize) -> Result<BTreeSet<CanonicalBraid>> {
    divisors_oracle(n, &mut Canonicalizer::new(DIVISOR_ORACLE_CAP))
}

/// Writes `w = Δ^k · rest` with `k` maximal.
///
/// `Δ` is peeled off whenever some representative starts with the literal
/// `Δ` word; the remainder is then canonicalised and the search repeats.
pub fn delta_decompose(
    w: &BraidWord,
    canon: &mut Canonicalizer,
) -> Result<(usize, CanonicalBraid)> {
    let delta = delta_word(w.strands())?;
    let mut rest = w.clone();
    let mut k = 0;
    while rest.len() >= delta.len() {
        match canon.member_with_prefix(&rest, delta.letters())? {
            Some(m) => {
                rest = BraidWord::from_raw(w.strands(), m.letters()[delta.len()..].to_vec());
                k += 1;
            }
            None => break,
        }
    }
    Ok((k, canon.canonical_form(&rest)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, idx: &[usize]) -> BraidWord {
        BraidWord::from_indices(n, idx).unwrap()
    }

    #[test]
    fn delta_words() {
        assert_eq!(delta_word(2).unwrap(), w(2, &[1]));
        assert_eq!(delta_word(3).unwrap(), w(3, &[1, 2, 1]));
        assert_eq!(delta_word(4).unwrap(), w(4, &[1, 2, 1, 3, 2, 1]));
        assert_eq!(delta_word(7).unwrap().len(), 21);
        assert!(delta_word(1).is_err());
    }

    #[test]
    fn square_freeness() {
        let mut c = Canonicalizer::default();
        assert!(!is_square_free(&w(3, &[1, 1]), &mut c).unwrap());
        assert!(is_square_free(&w(3, &[1, 2, 1]), &mut c).unwrap());
        assert!(!is_square_free(&w(3, &[2, 1, 1, 2]), &mut c).unwrap());
        // a hidden square: 1,2,1,2 = 2,1,2,2
        assert!(!is_square_free(&w(3, &[1, 2, 1, 2]), &mut c).unwrap());
    }

    #[test]
    fn divisor_enumeration() {
        let d2: Vec<String> = divisor_set(2)
            .unwrap()
            .iter()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(d2, ["e", "1"]);
        let d3 = enumerate_divisors(3).unwrap();
        assert_eq!(d3.len(), 6);
        let mut profile = [0usize; 4];
        for d in &d3 {
            profile[d.len()] += 1;
        }
        assert_eq!(profile, [1, 2, 2, 1]);
        assert_eq!(enumerate_divisors(4).unwrap().len(), 24);
        // first few in block-lex order
        let first: Vec<String> = d3.iter().take(3).map(|d| d.expand().to_string()).collect();
        assert_eq!(first, ["e", "1", "1,2,1"]);
    }

    #[test]
    fn divisor_forms_validate() {
        assert!(DivisorForm::new(4, vec![Block::new(1, 1), Block::new(3, 2)]).is_ok());
        assert!(DivisorForm::new(4, vec![Block::new(2, 1), Block::new(2, 2)]).is_err());
        assert!(DivisorForm::new(4, vec![Block::new(4, 1)]).is_err());
        assert!(DivisorForm::new(4, vec![Block::new(2, 3)]).is_err());
    }

    #[test]
    fn oracle_matches_small() {
        for n in 2..=4 {
            assert_eq!(
                divisors_oracle_default(n).unwrap(),
                divisor_set(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn oracle_refuses_delta6() {
        let mut c = Canonicalizer::new(10_000);
        assert_eq!(
            divisors_oracle(6, &mut c),
            Err(Error::ClassCapExceeded { cap: 10_000 })
        );
    }

    #[test]
    fn decomposition_examples() {
        let mut c = Canonicalizer::default();
        let (k, rest) = delta_decompose(&w(3, &[1, 2, 1]), &mut c).unwrap();
        assert_eq!((k, rest.word().clone()), (1, w(3, &[])));
        let (k, rest) = delta_decompose(&w(3, &[1, 1]), &mut c).unwrap();
        assert_eq!((k, rest.word().clone()), (0, w(3, &[1, 1])));
        let (k, rest) = delta_decompose(&w(3, &[1, 2, 1, 1]), &mut c).unwrap();
        assert_eq!((k, rest.word().clone()), (1, w(3, &[1])));
        // Δ in the middle: 1,1,2,1 = 1·Δ = Δ·2
        let (k, rest) = delta_decompose(&w(3, &[1, 1, 2, 1]), &mut c).unwrap();
        assert_eq!((k, rest.word().clone()), (1, w(3, &[2])));
    }
}
