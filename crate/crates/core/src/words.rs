//! Normal forms for elements of the envelope groups `(X * ... * X) ⋊ G`.
//!
//! A word is a sequence of position-tagged letters `(x@j)` followed by a
//! single trailing element of `G`. Three flavours share the representation:
//!
//! * [`WordMode::GroupSyllable`]: letters are non-identity elements of a
//!   finite group `X`; adjacent letters at the same position are multiplied
//!   out, so a normal form never has two adjacent letters at one position.
//! * [`WordMode::FreeLetter`]: letters are signed generators of the free
//!   group `F(X)` on a rack carrier; only free cancellation applies.
//! * [`WordMode::MonoidLetter`]: unsigned letters of a free monoid; no
//!   relation among letters at all.
//!
//! Group elements are always pushed to the right using
//! `g * (y)_j = (y^(g^-1))_j * g`.

use std::fmt::Write as _;

use crate::algebra::{AugmentedRack, FiniteGroup, PreCrossedModule, RightAction};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordMode {
    GroupSyllable,
    FreeLetter,
    MonoidLetter,
}

/// A generator `(x,1)_j`, or its inverse in free-letter mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub base: usize,
    pub inverted: bool,
    pub position: usize,
}

impl Letter {
    pub fn new(base: usize, position: usize) -> Self {
        Self { base, inverted: false, position }
    }

    pub fn inverse(base: usize, position: usize) -> Self {
        Self { base, inverted: true, position }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnvelopeWord {
    pub mode: WordMode,
    pub degree: usize,
    pub letters: Vec<Letter>,
    pub tail: usize,
}

impl EnvelopeWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// An entry of a mixed product: a letter or an element of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Item {
    Letter(Letter),
    Group(usize),
}

/// The data needed to multiply words: the letter alphabet, `G`, the action
/// of `G` on letters and `π`.
#[derive(Clone, Debug)]
pub struct WordAlgebra {
    mode: WordMode,
    labels: Vec<String>,
    x_group: Option<FiniteGroup>,
    group: FiniteGroup,
    action: RightAction,
    pi: Vec<usize>,
}

impl WordAlgebra {
    /// Letters are elements of the group `X` of a pre-crossed module.
    pub fn group_syllable(p: &PreCrossedModule) -> Self {
        Self {
            mode: WordMode::GroupSyllable,
            labels: p.x_group().labels().to_vec(),
            x_group: Some(p.x_group().clone()),
            group: p.group().clone(),
            action: p.action().clone(),
            pi: p.pi_table().to_vec(),
        }
    }

    /// Letters are signed generators of `F(X)` for the pre-crossed module
    /// `F(X) → G` freely generated by an augmented rack.
    pub fn free_letter(a: &AugmentedRack) -> Self {
        Self::over_rack(WordMode::FreeLetter, a)
    }

    /// Letters are edges of the Clauwens monoid of an augmented rack.
    pub fn monoid_letter(a: &AugmentedRack) -> Self {
        Self::over_rack(WordMode::MonoidLetter, a)
    }

    fn over_rack(mode: WordMode, a: &AugmentedRack) -> Self {
        Self {
            mode,
            labels: a.labels().to_vec(),
            x_group: None,
            group: a.group().clone(),
            action: a.action().clone(),
            pi: a.pi_table().to_vec(),
        }
    }

    pub fn mode(&self) -> WordMode {
        self.mode
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn carrier_size(&self) -> usize {
        self.labels.len()
    }

    pub fn x_group(&self) -> Option<&FiniteGroup> {
        self.x_group.as_ref()
    }

    /// `π` of a letter; inverse letters map to the inverse element.
    pub fn pi_letter(&self, letter: Letter) -> usize {
        let g = self.pi[letter.base];
        if letter.inverted {
            self.group.inv(g)
        } else {
            g
        }
    }

    pub fn identity_word(&self, degree: usize) -> EnvelopeWord {
        EnvelopeWord { mode: self.mode, degree, letters: Vec::new(), tail: self.group.identity() }
    }

    /// All letters allowed in a normal form of the given degree.
    pub fn alphabet(&self, degree: usize) -> Vec<Letter> {
        let mut out = Vec::new();
        for position in 0..degree {
            for base in 0..self.carrier_size() {
                match self.mode {
                    WordMode::GroupSyllable => {
                        if Some(base) != self.x_group.as_ref().map(FiniteGroup::identity) {
                            out.push(Letter::new(base, position));
                        }
                    }
                    WordMode::FreeLetter => {
                        out.push(Letter::new(base, position));
                        out.push(Letter::inverse(base, position));
                    }
                    WordMode::MonoidLetter => out.push(Letter::new(base, position)),
                }
            }
        }
        out
    }

    /// Whether `next` may follow `prev` in a normal form.
    pub fn may_follow(&self, prev: Letter, next: Letter) -> bool {
        match self.mode {
            WordMode::GroupSyllable => prev.position != next.position,
            WordMode::FreeLetter => {
                !(prev.position == next.position
                    && prev.base == next.base
                    && prev.inverted != next.inverted)
            }
            WordMode::MonoidLetter => true,
        }
    }

    /// Brings a letter sequence to normal form. Idempotent.
    pub fn reduce(&self, letters: Vec<Letter>, degree: usize, tail: usize) -> EnvelopeWord {
        debug_assert!(letters.iter().all(|l| l.position < degree));
        let letters = match self.mode {
            WordMode::MonoidLetter => letters,
            WordMode::FreeLetter => {
                let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
                for l in letters {
                    match stack.last() {
                        Some(&top)
                            if top.position == l.position
                                && top.base == l.base
                                && top.inverted != l.inverted =>
                        {
                            stack.pop();
                        }
                        _ => stack.push(l),
                    }
                }
                stack
            }
            WordMode::GroupSyllable => {
                let x = self.x_group.as_ref().expect("group-syllable words need a group X");
                let e = x.identity();
                let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
                for l in letters {
                    if l.base == e {
                        continue;
                    }
                    match stack.last_mut() {
                        Some(top) if top.position == l.position => {
                            top.base = x.mul(top.base, l.base);
                            if top.base == e {
                                stack.pop();
                            }
                        }
                        _ => stack.push(l),
                    }
                }
                stack
            }
        };
        EnvelopeWord { mode: self.mode, degree, letters, tail }
    }

    /// Replaces every letter base `x` by `x^(g^-1)`; the tail is untouched.
    ///
    /// This is the effect on letters of moving `g` from the left of a word
    /// to its right.
    pub fn twist(&self, g: usize, word: &EnvelopeWord) -> EnvelopeWord {
        let g_inv = self.group.inv(g);
        let letters = word
            .letters
            .iter()
            .map(|l| Letter { base: self.action.act(l.base, g_inv), ..*l })
            .collect();
        EnvelopeWord { letters, ..word.clone() }
    }

    /// Pushes every group element to the right, twisting the letters it
    /// passes, then reduces.
    pub fn normalize_mixed<I>(&self, degree: usize, items: I) -> EnvelopeWord
    where
        I: IntoIterator<Item = Item>,
    {
        let mut acc = self.group.identity();
        let mut letters = Vec::new();
        for item in items {
            match item {
                Item::Group(h) => acc = self.group.mul(acc, h),
                Item::Letter(l) => letters.push(Letter {
                    base: self.action.act(l.base, self.group.inv(acc)),
                    ..l
                }),
            }
        }
        self.reduce(letters, degree, acc)
    }

    pub fn multiply(&self, w1: &EnvelopeWord, w2: &EnvelopeWord) -> Result<EnvelopeWord> {
        for w in [w1, w2] {
            if w.mode != self.mode {
                return Err(Error::ModeMismatch { expected: self.mode, found: w.mode });
            }
        }
        if w1.degree != w2.degree {
            return Err(Error::DegreeMismatch { left: w1.degree, right: w2.degree });
        }
        let items = w1
            .letters
            .iter()
            .map(|&l| Item::Letter(l))
            .chain([Item::Group(w1.tail)])
            .chain(w2.letters.iter().map(|&l| Item::Letter(l)))
            .chain([Item::Group(w2.tail)]);
        Ok(self.normalize_mixed(w1.degree, items))
    }

    /// Text encoding: `(x@j)` and `(x^-1@j)` letters, `|g` for a
    /// non-identity tail, `1` for the empty word.
    pub fn encode(&self, word: &EnvelopeWord) -> String {
        let mut s = String::new();
        for l in &word.letters {
            let inv = if l.inverted { "^-1" } else { "" };
            let _ = write!(s, "({}{}@{})", self.labels[l.base], inv, l.position);
        }
        if s.is_empty() {
            s.push('1');
        }
        if word.tail != self.group.identity() {
            let _ = write!(s, "|{}", self.group.label(word.tail));
        }
        s
    }
}
