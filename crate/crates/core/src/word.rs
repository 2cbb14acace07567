//! Positive braid words and the rewriting closure that decides equality.
//!
//! A word over `x_1 .. x_{n-1}` is stored as its sequence of generator
//! indices. Two words denote the same positive braid when one can be turned
//! into the other by finitely many far commutations (`x_i x_j = x_j x_i`,
//! `|i - j| >= 2`) and braid moves (`x_i x_{i+1} x_i = x_{i+1} x_i x_{i+1}`).
//! Both moves preserve length, so every equivalence class is finite and
//! can be closed by breadth-first search. The canonical representative of a
//! class is its length-lexicographic minimum.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default bound on the size of an equivalence class before closure gives up.
pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

/// Default bound on the number of words produced by [`enumerate_words`].
pub const DEFAULT_ENUM_CAP: usize = 10_000_000;

/// Largest strand count representable with byte-sized generator indices.
pub const MAX_STRANDS: usize = 256;

/// A positive braid word on `strands` strands.
///
/// Ordering is length-lexicographic within a strand count: shorter words
/// first, equal lengths compared letter by letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<u8>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<u8>) -> Result<Self> {
        check_strands(strands, 1)?;
        let max = strands - 1;
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l as usize > max) {
            return Err(Error::InvalidLetter {
                letter: bad as usize,
                max,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    /// Builds a word from any integer slice, validating each index.
    pub fn from_indices(strands: usize, indices: &[usize]) -> Result<Self> {
        check_strands(strands, 1)?;
        let max = strands - 1;
        let mut letters = Vec::with_capacity(indices.len());
        for &i in indices {
            if i == 0 || i > max {
                return Err(Error::InvalidLetter {
                    letter: i,
                    max,
                    strands,
                });
            }
            letters.push(i as u8);
        }
        Ok(Self { strands, letters })
    }

    /// The unit braid (empty word).
    pub fn unit(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// The single generator `x_i`.
    pub fn generator(strands: usize, i: usize) -> Result<Self> {
        Self::from_indices(strands, &[i])
    }

    pub(crate) fn from_raw(strands: usize, letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && (l as usize) < strands));
        Self { strands, letters }
    }

    /// Parses the text encoding: comma-separated indices (`"1,2,1"`) or
    /// `"e"` for the unit braid.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "e" {
            return Self::unit(strands);
        }
        let indices = trimmed
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(text.to_string()))?;
        Self::from_indices(strands, &indices)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Generator indices widened to `usize`.
    pub fn indices(&self) -> Vec<usize> {
        self.letters.iter().map(|&l| l as usize).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        same_strands(self, other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord::from_raw(self.strands, letters))
    }

    /// `self · x_i`.
    pub fn push_generator(&self, i: usize) -> Result<BraidWord> {
        self.concat(&BraidWord::generator(self.strands, i)?)
    }

    /// `self^k`.
    pub fn power(&self, k: usize) -> BraidWord {
        BraidWord::from_raw(self.strands, self.letters.repeat(k))
    }

    /// Whether each generator occurs at most once in this particular word.
    pub fn has_distinct_letters(&self) -> bool {
        let mut seen = vec![false; self.strands];
        for &l in &self.letters {
            if std::mem::replace(&mut seen[l as usize], true) {
                return false;
            }
        }
        true
    }
}

impl PartialOrd for BraidWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BraidWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.strands
            .cmp(&other.strands)
            .then_with(|| length_lex(&self.letters, &other.letters))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (pos, l) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Length-lexicographic comparison of raw letter sequences.
pub fn length_lex(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// The length-lex minimal representative of an equivalence class.
///
/// Two canonical braids are equal iff their words are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalBraid(BraidWord);

impl CanonicalBraid {
    /// Wraps a word already known to be class-minimal.
    pub(crate) fn assume_canonical(word: BraidWord) -> Self {
        Self(word)
    }

    pub fn word(&self) -> &BraidWord {
        &self.0
    }

    pub fn into_word(self) -> BraidWord {
        self.0
    }

    pub fn strands(&self) -> usize {
        self.0.strands
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CanonicalBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_strands(strands: usize, min: usize) -> Result<()> {
    if strands < min {
        return Err(Error::TooFewStrands { min, got: strands });
    }
    if strands > MAX_STRANDS {
        return Err(Error::OutOfRange {
            what: "strand count",
            detail: format!("{strands} > {MAX_STRANDS}"),
        });
    }
    Ok(())
}

pub(crate) fn same_strands(a: &BraidWord, b: &BraidWord) -> Result<()> {
    if a.strands != b.strands {
        return Err(Error::StrandMismatch {
            left: a.strands,
            right: b.strands,
        });
    }
    Ok(())
}

/// Calls `emit` once for every word reachable by a single rewrite.
/// The same neighbour may be emitted more than once.
fn for_each_neighbor(letters: &[u8], mut emit: impl FnMut(Vec<u8>)) {
    let len = letters.len();
    for p in 0..len.saturating_sub(1) {
        let (a, b) = (letters[p], letters[p + 1]);
        if a.abs_diff(b) >= 2 {
            let mut next = letters.to_vec();
            next.swap(p, p + 1);
            emit(next);
        }
        if p + 2 < len {
            let c = letters[p + 2];
            if a == c && a.abs_diff(b) == 1 {
                let mut next = letters.to_vec();
                next[p] = b;
                next[p + 1] = a;
                next[p + 2] = b;
                emit(next);
            }
        }
    }
}

/// All words obtained from `w` by one commutation or one braid move.
pub fn rewrite_neighbors(w: &BraidWord) -> BTreeSet<BraidWord> {
    let mut out = BTreeSet::new();
    for_each_neighbor(&w.letters, |next| {
        out.insert(BraidWord::from_raw(w.strands, next));
    });
    out
}

/// Breadth-first closure of a letter sequence, sorted length-lex.
fn closure(start: &[u8], cap: usize) -> Result<Vec<Vec<u8>>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(cur) = queue.pop_front() {
        let mut overflow = false;
        for_each_neighbor(&cur, |next| {
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
                if seen.len() > cap {
                    overflow = true;
                }
            }
        });
        if overflow {
            return Err(Error::ClassCapExceeded { cap });
        }
    }
    let mut members: Vec<Vec<u8>> = seen.into_iter().collect();
    members.sort_unstable();
    Ok(members)
}

/// The full equivalence class of `w`, bounded by `cap` members.
pub fn equivalence_class(w: &BraidWord, cap: usize) -> Result<BTreeSet<BraidWord>> {
    Ok(closure(&w.letters, cap)?
        .into_iter()
        .map(|l| BraidWord::from_raw(w.strands, l))
        .collect())
}

/// Canonical form under the default closure cap.
pub fn canonical_form(w: &BraidWord) -> Result<CanonicalBraid> {
    Canonicalizer::default().canonical_form(w)
}

/// Equality of positive braids under the default closure cap.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    Canonicalizer::default().braids_equal(a, b)
}

/// Whether some representative of `w` has a factor braid-equal to `target`.
pub fn contains_factor(w: &BraidWord, target: &BraidWord) -> Result<bool> {
    Canonicalizer::default().contains_factor(w, target)
}

/// Memoising closure engine.
///
/// Every class computed is stored once; each member maps to it, so asking
/// for the canonical form of any word in an already-seen class is a lookup.
#[derive(Debug, Clone)]
pub struct Canonicalizer {
    cap: usize,
    member_of: HashMap<Vec<u8>, usize>,
    classes: Vec<Arc<Vec<Vec<u8>>>>,
}

impl Default for Canonicalizer {
    fn default() -> Self {
        Self::new(DEFAULT_CLASS_CAP)
    }
}

impl Canonicalizer {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            member_of: HashMap::new(),
            classes: Vec::new(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Number of distinct classes computed so far.
    pub fn classes_seen(&self) -> usize {
        self.classes.len()
    }

    /// Sorted members of the class of `letters`; the first one is canonical.
    pub fn class_letters(&mut self, letters: &[u8]) -> Result<Arc<Vec<Vec<u8>>>> {
        if let Some(&idx) = self.member_of.get(letters) {
            return Ok(Arc::clone(&self.classes[idx]));
        }
        let members = Arc::new(closure(letters, self.cap)?);
        let idx = self.classes.len();
        for m in members.iter() {
            self.member_of.insert(m.clone(), idx);
        }
        self.classes.push(Arc::clone(&members));
        Ok(members)
    }

    pub fn equivalence_class(&mut self, w: &BraidWord) -> Result<BTreeSet<BraidWord>> {
        Ok(self
            .class_letters(&w.letters)?
            .iter()
            .map(|l| BraidWord::from_raw(w.strands, l.clone()))
            .collect())
    }

    pub fn canonical_form(&mut self, w: &BraidWord) -> Result<CanonicalBraid> {
        let class = self.class_letters(&w.letters)?;
        Ok(CanonicalBraid(BraidWord::from_raw(
            w.strands,
            class[0].clone(),
        )))
    }

    pub fn braids_equal(&mut self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        same_strands(a, b)?;
        if a.len() != b.len() {
            return Ok(false);
        }
        if a.letters == b.letters {
            return Ok(true);
        }
        let class = self.class_letters(&a.letters)?;
        Ok(class.binary_search(&b.letters).is_ok())
    }

    pub fn contains_factor(&mut self, w: &BraidWord, target: &BraidWord) -> Result<bool> {
        same_strands(w, target)?;
        let t = target.len();
        if t == 0 {
            return Ok(true);
        }
        if t > w.len() {
            return Ok(false);
        }
        let targets: HashSet<Vec<u8>> = self
            .class_letters(&target.letters)?
            .iter()
            .cloned()
            .collect();
        let class = self.class_letters(&w.letters)?;
        Ok(class
            .iter()
            .any(|m| m.windows(t).any(|win| targets.contains(win))))
    }

    /// Some class member that starts with `prefix` literally, if any.
    pub fn member_with_prefix(
        &mut self,
        w: &BraidWord,
        prefix: &[u8],
    ) -> Result<Option<BraidWord>> {
        let class = self.class_letters(&w.letters)?;
        Ok(class
            .iter()
            .find(|m| m.starts_with(prefix))
            .map(|m| BraidWord::from_raw(w.strands, m.clone())))
    }
}

/// A permutation of `{1, .., n}` stored in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// From one-line notation; `images[k-1]` is the image of `k`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `k` (1-based).
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Disjoint cycles of length at least two, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut visited = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !visited[k] {
                visited[k] = true;
                cycle.push(k);
                k = self.apply(k);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Nontrivial cycle lengths, weakly decreasing.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Image of `w` in the symmetric group, `x_i` acting as the transposition
/// of positions `i` and `i+1`, applied in word order.
pub fn underlying_permutation(w: &BraidWord) -> Permutation {
    let mut images: Vec<usize> = (1..=w.strands).collect();
    for &l in &w.letters {
        images.swap(l as usize - 1, l as usize);
    }
    Permutation { images }
}

/// All `(n-1)^k` words of length `k`, lexicographically ordered.
pub fn enumerate_words(n: usize, k: usize) -> Result<Vec<BraidWord>> {
    enumerate_words_capped(n, k, DEFAULT_ENUM_CAP)
}

pub fn enumerate_words_capped(n: usize, k: usize, cap: usize) -> Result<Vec<BraidWord>> {
    check_strands(n, 2)?;
    let base = (n - 1) as u128;
    let total = (0..k).try_fold(1u128, |acc, _| acc.checked_mul(base));
    let total = match total {
        Some(t) if t <= cap as u128 => t as usize,
        Some(t) => return Err(Error::EnumerationTooLarge { requested: t, cap }),
        None => {
            return Err(Error::EnumerationTooLarge {
                requested: u128::MAX,
                cap,
            })
        }
    };
    let top = (n - 1) as u8;
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![1u8; k];
    loop {
        out.push(BraidWord::from_raw(n, cur.clone()));
        // odometer increment from the right
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if cur[pos] < top {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 1;
        }
    }
}

/// All words of length `0..=max_len`, shortest first.
pub fn enumerate_words_up_to(n: usize, max_len: usize) -> Result<Vec<BraidWord>> {
    let mut out = Vec::new();
    for k in 0..=max_len {
        out.extend(enumerate_words(n, k)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, idx: &[usize]) -> BraidWord {
        BraidWord::from_indices(n, idx).unwrap()
    }

    #[test]
    fn neighbors_of_small_words() {
        let got: Vec<_> = rewrite_neighbors(&w(3, &[1, 2, 1])).into_iter().collect();
        assert_eq!(got, vec![w(3, &[2, 1, 2])]);
        let got: Vec<_> = rewrite_neighbors(&w(4, &[1, 3])).into_iter().collect();
        assert_eq!(got, vec![w(4, &[3, 1])]);
        assert!(rewrite_neighbors(&w(3, &[])).is_empty());
        // adjacent generators do not commute
        assert!(rewrite_neighbors(&w(3, &[1, 2])).is_empty());
    }

    #[test]
    fn classes() {
        let c = equivalence_class(&w(3, &[1, 2, 1]), DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(
            c.into_iter().collect::<Vec<_>>(),
            vec![w(3, &[1, 2, 1]), w(3, &[2, 1, 2])]
        );
        let c = equivalence_class(&w(4, &[1, 3]), DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(c.len(), 2);
        let c = equivalence_class(&w(3, &[1, 1, 2]), DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(c.into_iter().collect::<Vec<_>>(), vec![w(3, &[1, 1, 2])]);
    }

    #[test]
    fn class_cap_is_enforced() {
        // the half twist on 5 strands has 768 reduced words
        let delta5 = w(5, &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1]);
        assert_eq!(equivalence_class(&delta5, 1000).unwrap().len(), 768);
        assert_eq!(
            equivalence_class(&delta5, 100),
            Err(Error::ClassCapExceeded { cap: 100 })
        );
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(
            canonical_form(&w(3, &[2, 1, 2])).unwrap().word(),
            &w(3, &[1, 2, 1])
        );
        assert_eq!(canonical_form(&w(5, &[])).unwrap().word(), &w(5, &[]));
        assert_eq!(
            canonical_form(&w(4, &[3, 1])).unwrap().word(),
            &w(4, &[1, 3])
        );
    }

    #[test]
    fn equality() {
        assert!(braids_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(!braids_equal(&w(3, &[1]), &w(3, &[2])).unwrap());
        assert!(!braids_equal(&w(3, &[1, 2]), &w(3, &[2, 1])).unwrap());
        assert!(!braids_equal(&w(3, &[1]), &w(3, &[1, 1])).unwrap());
        assert_eq!(
            braids_equal(&w(3, &[1]), &w(4, &[1])),
            Err(Error::StrandMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn factors() {
        assert!(contains_factor(&w(3, &[1, 1, 2]), &w(3, &[1, 1])).unwrap());
        assert!(!contains_factor(&w(3, &[1, 2, 1]), &w(3, &[2, 2])).unwrap());
        assert!(contains_factor(&w(3, &[2, 1, 1, 2, 1]), &w(3, &[1, 2, 1])).unwrap());
        assert!(contains_factor(&w(3, &[2]), &w(3, &[])).unwrap());
    }

    #[test]
    fn permutations() {
        assert_eq!(underlying_permutation(&w(3, &[1, 2])).images(), &[2, 3, 1]);
        assert!(underlying_permutation(&w(4, &[])).is_identity());
        assert_eq!(
            underlying_permutation(&w(3, &[1, 2, 1])).images(),
            &[3, 2, 1]
        );
        assert_eq!(
            underlying_permutation(&w(5, &[1, 3, 4])).cycle_type(),
            vec![3, 2]
        );
        assert_eq!(
            underlying_permutation(&w(3, &[1, 2])).to_string(),
            "(1 2 3)"
        );
    }

    #[test]
    fn word_enumeration() {
        let got: Vec<String> = enumerate_words(3, 2)
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(got, ["1,1", "1,2", "2,1", "2,2"]);
        assert_eq!(enumerate_words(3, 1).unwrap(), vec![w(3, &[1]), w(3, &[2])]);
        assert_eq!(enumerate_words(4, 0).unwrap(), vec![w(4, &[])]);
        assert!(matches!(
            enumerate_words_capped(5, 20, 1000),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!(BraidWord::parse(3, "1,2,1").unwrap(), w(3, &[1, 2, 1]));
        assert_eq!(BraidWord::parse(3, " e ").unwrap(), w(3, &[]));
        assert_eq!(w(3, &[]).to_string(), "e");
        assert!(matches!(BraidWord::parse(3, "1,x"), Err(Error::Parse(_))));
        assert!(matches!(
            BraidWord::parse(3, "1,3"),
            Err(Error::InvalidLetter { letter: 3, .. })
        ));
        assert!(matches!(
            BraidWord::unit(0),
            Err(Error::TooFewStrands { .. })
        ));
    }

    #[test]
    fn length_lex_ordering() {
        let mut v = vec![w(3, &[2, 1]), w(3, &[1]), w(3, &[1, 2]), w(3, &[])];
        v.sort();
        assert_eq!(v, vec![w(3, &[]), w(3, &[1]), w(3, &[1, 2]), w(3, &[2, 1])]);
    }
}
