//! Simple braids and their conjugacy classes.
//!
//! A simple braid has a representative in which every generator occurs at
//! most once. Canonical forms are block products `β_{k_1,j_1} … β_{k_s,j_s}`
//! whose runs do not overlap (`j_{h+1} > k_h`). Conjugacy classes of simple
//! braids are indexed by the nontrivial cycle type of the underlying
//! permutation; the class representative `β_A` is a product of ascending
//! runs separated by one-strand gaps.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::garside::{check_block_shape, expand_blocks, Block};
use crate::word::{self, BraidWord, CanonicalBraid, Canonicalizer};

/// Largest strand count accepted by [`enumerate_simple`] (`F_31` forms).
pub const MAX_SIMPLE_STRANDS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleBraidForm {
    strands: usize,
    blocks: Vec<Block>,
}

impl SimpleBraidForm {
    pub fn new(strands: usize, blocks: Vec<Block>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::TooFewStrands {
                min: 1,
                got: strands,
            });
        }
        check_block_shape(strands, &blocks)?;
        for pair in blocks.windows(2) {
            if pair[1].bottom <= pair[0].top {
                return Err(Error::InvalidBlocks(format!(
                    "runs {} and {} overlap",
                    pair[0], pair[1]
                )));
            }
        }
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

impl fmt::Display for SimpleBraidForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.expand().fmt(f)
    }
}

/// Every simple braid on `n` strands in canonical block form,
/// lexicographic on block sequences. There are `F_{2n-1}` of them.
pub fn enumerate_simple(n: usize) -> Result<Vec<SimpleBraidForm>> {
    if n < 1 {
        return Err(Error::TooFewStrands { min: 1, got: n });
    }
    if n > MAX_SIMPLE_STRANDS {
        return Err(Error::OutOfRange {
            what: "simple braid enumeration",
            detail: format!("n = {n} > {MAX_SIMPLE_STRANDS}"),
        });
    }
    let mut out = Vec::new();
    extend_simple(n, 1, &mut Vec::new(), &mut out);
    Ok(out)
}

fn extend_simple(
    n: usize,
    min_letter: usize,
    cur: &mut Vec<Block>,
    out: &mut Vec<SimpleBraidForm>,
) {
    out.push(SimpleBraidForm {
        strands: n,
        blocks: cur.clone(),
    });
    for top in min_letter..n {
        for bottom in min_letter..=top {
            cur.push(Block::new(top, bottom));
            extend_simple(n, top + 1, cur, out);
            cur.pop();
        }
    }
}

/// The simple braids on `n` strands as canonical braids.
pub fn simple_set(n: usize) -> Result<BTreeSet<CanonicalBraid>> {
    Ok(enumerate_simple(n)?
        .iter()
        .map(SimpleBraidForm::to_canonical)
        .collect())
}

/// True iff some representative of `w` uses each generator at most once.
pub fn is_simple(w: &BraidWord, canon: &mut Canonicalizer) -> Result<bool> {
    if w.has_distinct_letters() {
        return Ok(true);
    }
    if w.len() >= w.strands() {
        return Ok(false);
    }
    Ok(canon
        .equivalence_class(w)?
        .iter()
        .any(BraidWord::has_distinct_letters))
}

/// Conjugacy class label `A = (a_1 ≥ … ≥ a_r ≥ 2)` with `Σ a_i ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassPartition {
    strands: usize,
    parts: Vec<usize>,
}

impl ClassPartition {
    pub fn new(strands: usize, parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&a| a < 2) || parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        let needed: usize = parts.iter().sum();
        if needed > strands {
            return Err(Error::PartitionTooLarge {
                parts,
                needed,
                strands,
            });
        }
        Ok(Self { strands, parts })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Length of the simple braids in this class: `Σ (a_i - 1)`.
    pub fn braid_length(&self) -> usize {
        self.parts.iter().map(|a| a - 1).sum()
    }
}

impl fmt::Display for ClassPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let body: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// Cycle type of the underlying permutation of a simple braid.
pub fn conjugacy_representative(b: &SimpleBraidForm) -> ClassPartition {
    let parts = word::underlying_permutation(&b.expand()).cycle_type();
    ClassPartition {
        strands: b.strands,
        parts,
    }
}

/// `β_A = (x_1 … x_{s_1-1})(x_{s_1+1} … x_{s_2-1}) …` with `s_i = a_1 + … + a_i`.
pub fn beta_a(a: &ClassPartition) -> SimpleBraidForm {
    let mut blocks = Vec::with_capacity(a.braid_length());
    let mut start = 1;
    for &part in &a.parts {
        for letter in start..start + part - 1 {
            blocks.push(Block::new(letter, letter));
        }
        start += part;
    }
    SimpleBraidForm {
        strands: a.strands,
        blocks,
    }
}

/// Searches for a positive `α` with `|α| ≤ max_len` and `β·α = α·β_A`.
pub fn conjugacy_witness(
    b: &SimpleBraidForm,
    max_len: usize,
    canon: &mut Canonicalizer,
) -> Result<Option<BraidWord>> {
    let beta = b.expand();
    let target = beta_a(&conjugacy_representative(b)).expand();
    if b.strands() < 2 {
        return Ok(Some(beta));
    }
    for len in 0..=max_len {
        for alpha in word::enumerate_words(b.strands(), len)? {
            let lhs = beta.concat(&alpha)?;
            let rhs = alpha.concat(&target)?;
            if canon.braids_equal(&lhs, &rhs)? {
                return Ok(Some(alpha));
            }
        }
    }
    Ok(None)
}
