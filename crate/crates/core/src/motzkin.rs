//! 2-colored Motzkin words and their bijection with parallelogram path
//! pairs: position i of the word codes the pair (upper step, lower step) as
//!
//! ```text
//! (north, east) -> Rise      (east, north) -> Fall
//! (north, north) -> HorizA   (east, east)  -> HorizB
//! ```
//!
//! plus the block conditions that characterize Gorenstein parallelogram
//! polyominoes.

use std::fmt;

use thiserror::Error;

use crate::parallelogram::{ParallelogramError, PathPair, Step};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MotzkinError {
    #[error("unexpected character {0:?} (expected one of R, F, A, B)")]
    BadChar(char),
    #[error("word leaves the first quadrant or does not return to height 0")]
    InvalidWord,
    #[error("word does not decode to a valid path pair")]
    NotAPairCode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotzkinStep {
    Rise,
    Fall,
    /// Horizontal step at height, first color (both paths go north).
    HorizA,
    /// Horizontal step, second color (both paths go east).
    HorizB,
}

impl MotzkinStep {
    pub fn letter(&self) -> char {
        match self {
            MotzkinStep::Rise => 'R',
            MotzkinStep::Fall => 'F',
            MotzkinStep::HorizA => 'A',
            MotzkinStep::HorizB => 'B',
        }
    }

    fn height_delta(&self) -> i64 {
        match self {
            MotzkinStep::Rise => 1,
            MotzkinStep::Fall => -1,
            _ => 0,
        }
    }
}

/// A word whose prefix heights never go negative and whose total height is
/// zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotzkinWord {
    steps: Vec<MotzkinStep>,
}

impl MotzkinWord {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<Self, MotzkinError> {
        let mut height = 0i64;
        for s in &steps {
            height += s.height_delta();
            if height < 0 {
                return Err(MotzkinError::InvalidWord);
            }
        }
        if height != 0 {
            return Err(MotzkinError::InvalidWord);
        }
        Ok(MotzkinWord { steps })
    }

    /// Whitespace-tolerant parse of letters R, F, A, B.
    pub fn parse(text: &str) -> Result<Self, MotzkinError> {
        let mut steps = Vec::new();
        for c in text.chars() {
            if c.is_whitespace() {
                continue;
            }
            steps.push(match c.to_ascii_uppercase() {
                'R' => MotzkinStep::Rise,
                'F' => MotzkinStep::Fall,
                'A' => MotzkinStep::HorizA,
                'B' => MotzkinStep::HorizB,
                other => return Err(MotzkinError::BadChar(other)),
            });
        }
        MotzkinWord::new(steps)
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

/// Position-wise coding of the two binary path words.
pub fn encode(pair: &PathPair) -> MotzkinWord {
    let steps = pair
        .upper()
        .iter()
        .zip(pair.lower())
        .map(|(u, l)| match (u, l) {
            (Step::North, Step::East) => MotzkinStep::Rise,
            (Step::East, Step::North) => MotzkinStep::Fall,
            (Step::North, Step::North) => MotzkinStep::HorizA,
            (Step::East, Step::East) => MotzkinStep::HorizB,
        })
        .collect();
    MotzkinWord::new(steps).expect("a valid path pair codes to a valid word")
}

/// Inverse coding; fails when the word does not describe two paths that
/// meet only at their endpoints.
pub fn decode(word: &MotzkinWord) -> Result<PathPair, MotzkinError> {
    let mut upper = Vec::with_capacity(word.len());
    let mut lower = Vec::with_capacity(word.len());
    for s in &word.steps {
        let (u, l) = match s {
            MotzkinStep::Rise => (Step::North, Step::East),
            MotzkinStep::Fall => (Step::East, Step::North),
            MotzkinStep::HorizA => (Step::North, Step::North),
            MotzkinStep::HorizB => (Step::East, Step::East),
        };
        upper.push(u);
        lower.push(l);
    }
    PathPair::new(upper, lower).map_err(|_: ParallelogramError| MotzkinError::NotAPairCode)
}

/// Reflection through the x-axis: rise and fall swap, colors stay. The
/// result is generally not a Motzkin word, so raw steps are returned.
pub fn reflect(word: &MotzkinWord) -> Vec<MotzkinStep> {
    word.steps
        .iter()
        .map(|s| match s {
            MotzkinStep::Rise => MotzkinStep::Fall,
            MotzkinStep::Fall => MotzkinStep::Rise,
            other => *other,
        })
        .collect()
}

/// Checks that `bits` decomposes as alternating maximal runs starting with
/// `first`, where every run is immediately followed by a run of the other
/// kind of the same length.
fn paired_runs(bits: impl Iterator<Item = bool>, first: bool) -> bool {
    let mut runs: Vec<(bool, usize)> = Vec::new();
    for b in bits {
        match runs.last_mut() {
            Some((v, n)) if *v == b => *n += 1,
            _ => runs.push((b, 1)),
        }
    }
    if runs.is_empty() || runs[0].0 != first || !runs.len().is_multiple_of(2) {
        return false;
    }
    runs.chunks(2).all(|pair| pair[0].1 == pair[1].1)
}

/// Block conditions for Gorensteinness. In the word itself each maximal
/// block drawn from {Rise, HorizA} (k steps in total) must be followed by a
/// maximal block of k steps drawn from {Fall, HorizB}; in the reflection the
/// {Fall, HorizB}-blocks must be followed by equally long {Rise, HorizA}
/// blocks.
pub fn gorenstein_blocks(word: &MotzkinWord) -> bool {
    let upper_block = |s: &MotzkinStep| matches!(s, MotzkinStep::Rise | MotzkinStep::HorizA);
    let cond1 = paired_runs(word.steps.iter().map(upper_block), true);
    // In the reflection, {Fall, HorizB} positions are exactly those where
    // the original lower path goes east.
    let reflected = reflect(word);
    let cond2 = paired_runs(
        reflected
            .iter()
            .map(|s| matches!(s, MotzkinStep::Fall | MotzkinStep::HorizB)),
        true,
    );
    cond1 && cond2
}

/// The same conditions stated directly on the binary path words: in the
/// upper word every maximal block of k norths is followed by exactly k
/// easts; in the lower word every maximal block of k easts is followed by
/// exactly k norths.
pub fn ne_block_conditions(pair: &PathPair) -> bool {
    let north = |s: &Step| *s == Step::North;
    paired_runs(pair.upper().iter().map(north), true)
        && paired_runs(pair.lower().iter().map(|s| !north(s)), true)
}
