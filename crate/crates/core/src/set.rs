//! Finite universes and index-based subsets.
//!
//! A [`Universe`] fixes an ordering of labeled elements. Every [`Subset`] is a
//! characteristic vector against that ordering, so set algebra never touches
//! labels; labels are only consulted when parsing or printing.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;

const WORD_BITS: usize = 64;

/// An ordered finite set of distinct labels.
#[derive(Clone, Debug)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Universe {}

impl Universe {
    /// Builds a universe from labels in input order. Labels must be pairwise distinct.
    pub fn new<I, S>(labels: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { labels, index })
    }

    /// Universe with labels `1..=n`.
    pub fn numbered(n: usize) -> Self {
        Self::new((1..=n).map(|i| i.to_string())).expect("numeric labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn singleton(&self, i: usize) -> Subset {
        Subset::singleton(self.len(), i)
    }

    /// Looks up each label; unknown labels are an error.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset, Error> {
        let mut set = self.empty_set();
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            set.insert(i);
        }
        Ok(set)
    }

    /// Parses a comma-separated label list such as `a,b,c`. The empty string is `∅`.
    pub fn parse_subset(&self, text: &str) -> Result<Subset, Error> {
        let labels: Vec<&str> = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        self.subset(&labels)
    }

    /// Member labels in universe order.
    pub fn labels_of<'a>(&'a self, set: &'a Subset) -> impl Iterator<Item = &'a str> + 'a {
        set.iter().map(move |i| self.label(i))
    }

    /// Renders `{a,b}`, or `∅` for the empty set.
    pub fn format(&self, set: &Subset) -> String {
        if set.is_empty() {
            return "∅".to_string();
        }
        let body: Vec<&str> = self.labels_of(set).collect();
        format!("{{{}}}", body.join(","))
    }

    pub(crate) fn check(&self, set: &Subset) -> Result<(), Error> {
        if set.universe_len() == self.len() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                expected: self.len(),
                found: set.universe_len(),
            })
        }
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.labels.join(" "))
    }
}

/// A subset of a universe of size `n`, stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    n: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self {
            n,
            words: vec![!0; n.div_ceil(WORD_BITS)],
        };
        s.trim();
        s
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(i);
        s
    }

    /// # Panics
    /// If any index is `>= n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut s = Self::empty(n);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Size of the universe this subset lives in.
    pub fn universe_len(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.words[i / WORD_BITS] & (1 << (i % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.n, "index {i} out of range for universe of size {}", self.n);
        let word = &mut self.words[i / WORD_BITS];
        let bit = 1 << (i % WORD_BITS);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    pub fn remove(&mut self, i: usize) -> bool {
        if i >= self.n {
            return false;
        }
        let word = &mut self.words[i / WORD_BITS];
        let bit = 1 << (i % WORD_BITS);
        let present = *word & bit != 0;
        *word &= !bit;
        present
    }

    pub fn union_with(&mut self, other: &Subset) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn complement(&self) -> Subset {
        let mut s = Subset {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Subset) -> bool {
        self.is_subset(other) && self != other
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn trim(&mut self) {
        let rem = self.n % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD_BITS + bit);
            }
            self.word += 1;
            self.current = *self.words.get(self.word)?;
        }
    }
}

impl<'a> IntoIterator for &'a Subset {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Disjoint nonempty blocks whose union is the universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    universe: Universe,
    blocks: Vec<Subset>,
}

impl Partition {
    /// Checks disjointness, exhaustiveness and nonemptiness, then orders blocks
    /// by their smallest member.
    pub fn new(universe: Universe, mut blocks: Vec<Subset>) -> Result<Self, Error> {
        let mut seen = universe.empty_set();
        for block in &blocks {
            universe.check(block)?;
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if block.intersects(&seen) {
                return Err(Error::InvalidPartition("overlapping blocks".into()));
            }
            seen.union_with(block);
        }
        if !seen.is_full() {
            return Err(Error::InvalidPartition(format!(
                "elements {} are in no block",
                universe.format(&seen.complement())
            )));
        }
        blocks.sort_by_key(|b| b.first());
        Ok(Self { universe, blocks })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, i: usize) -> Option<&Subset> {
        self.blocks.iter().find(|b| b.contains(i))
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.block_of(i).is_some_and(|b| b.contains(j))
    }
}
