//! The action of braid words on colored strand states.
//!
//! A word on n strands over a switch of size N acts on the N^n vectors of
//! strand colors: each positive letter pushes the pair at its position
//! through the pair map and each negative letter through the inverse. The
//! full action is materialized as a permutation of encoded state indices,
//! optionally swept in parallel.

use crate::algebra::{
    linear_switch, medial_witness, product_switch, AlgebraError, Elem, FiniteSwitch, MedialWitness,
};
use crate::braidword::BraidWord;
use crate::exec::{all_indices, map_indices, ExecMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub type VertexIndex = u32;
pub type ColorVector = Vec<Elem>;

/// Default ceiling on the number of colored states a sweep may enumerate.
pub const DEFAULT_MAX_VERTICES: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepresentationError {
    #[error("state space needs {needed} vertices, over the budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("word on {word} strands does not act on vectors of length {vector}")]
    StrandMismatch { word: usize, vector: usize },
    #[error("letter {letter} is out of range for vectors of length {strands}")]
    GeneratorRange { letter: i32, strands: usize },
    #[error("color {value} at position {position} is outside 1..={size}")]
    ColorRange {
        position: usize,
        value: Elem,
        size: usize,
    },
}

/// Packs a color vector into a state index, first strand most significant.
pub fn encode(colors: &[Elem], size: usize) -> VertexIndex {
    let mut acc: u64 = 0;
    for &c in colors {
        acc = acc * size as u64 + (c as u64 - 1);
    }
    debug_assert!(acc <= VertexIndex::MAX as u64);
    acc as VertexIndex
}

/// Unpacks a state index into its color vector.
pub fn decode(index: VertexIndex, size: usize, strands: usize) -> ColorVector {
    let mut rem = index as u64;
    let mut colors = vec![0 as Elem; strands];
    for slot in colors.iter_mut().rev() {
        *slot = (rem % size as u64) as Elem + 1;
        rem /= size as u64;
    }
    debug_assert_eq!(rem, 0);
    colors
}

/// The number of colored states for `strands` strands, checked against the
/// budget (and the index type's capacity).
pub fn state_count(
    size: usize,
    strands: usize,
    max_vertices: u64,
) -> Result<u32, RepresentationError> {
    let budget = max_vertices.min(VertexIndex::MAX as u64);
    let mut needed: u128 = 1;
    for _ in 0..strands {
        needed = needed.saturating_mul(size as u128);
        if needed > budget as u128 {
            let full = (size as u128).saturating_pow(strands as u32);
            return Err(RepresentationError::BudgetExceeded { needed: full, budget });
        }
    }
    Ok(needed as u32)
}

#[inline]
fn apply_letter_unchecked(switch: &FiniteSwitch, colors: &mut [Elem], letter: i32) {
    let position = letter.unsigned_abs() as usize - 1;
    let (a, b) = (colors[position], colors[position + 1]);
    let (c, d) = if letter > 0 {
        switch.rho(a, b)
    } else {
        switch.rho_inv(a, b)
    };
    colors[position] = c;
    colors[position + 1] = d;
}

/// Applies one signed letter in place.
pub fn apply_letter(
    switch: &FiniteSwitch,
    colors: &mut [Elem],
    letter: i32,
) -> Result<(), RepresentationError> {
    if letter == 0 || letter.unsigned_abs() as usize >= colors.len() {
        return Err(RepresentationError::GeneratorRange {
            letter,
            strands: colors.len(),
        });
    }
    check_colors(colors, switch.size())?;
    apply_letter_unchecked(switch, colors, letter);
    Ok(())
}

fn check_colors(colors: &[Elem], size: usize) -> Result<(), RepresentationError> {
    for (i, &c) in colors.iter().enumerate() {
        if c < 1 || c as usize > size {
            return Err(RepresentationError::ColorRange {
                position: i + 1,
                value: c,
                size,
            });
        }
    }
    Ok(())
}

/// Pushes a color vector through a whole word, letters applied left to
/// right.
pub fn apply_braid(
    switch: &FiniteSwitch,
    word: &BraidWord,
    colors: &ColorVector,
) -> Result<ColorVector, RepresentationError> {
    if colors.len() != word.strands() {
        return Err(RepresentationError::StrandMismatch {
            word: word.strands(),
            vector: colors.len(),
        });
    }
    check_colors(colors, switch.size())?;
    let mut state = colors.clone();
    for &letter in word.letters() {
        apply_letter_unchecked(switch, &mut state, letter);
    }
    Ok(state)
}

/// A permutation of state indices stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePermutation {
    image: Vec<VertexIndex>,
}

impl DensePermutation {
    pub fn identity(count: usize) -> Self {
        DensePermutation {
            image: (0..count as VertexIndex).collect(),
        }
    }

    pub fn from_image(image: Vec<VertexIndex>) -> Self {
        debug_assert!({
            let mut seen = vec![false; image.len()];
            image.iter().all(|&v| {
                let slot = &mut seen[v as usize];
                !std::mem::replace(slot, true)
            })
        });
        DensePermutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, index: VertexIndex) -> VertexIndex {
        self.image[index as usize]
    }

    pub fn image(&self) -> &[VertexIndex] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0 as VertexIndex; self.image.len()];
        for (source, &target) in self.image.iter().enumerate() {
            image[target as usize] = source as VertexIndex;
        }
        DensePermutation { image }
    }

    /// The permutation applying `first`, then this one.
    pub fn compose_after(&self, first: &Self) -> Self {
        assert_eq!(self.len(), first.len());
        DensePermutation {
            image: first.image.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &v)| i as VertexIndex == v)
    }
}

/// Controls for full state sweeps.
#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub max_vertices: u64,
    pub mode: ExecMode,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            mode: ExecMode::default(),
        }
    }
}

/// The permutation a word induces on all encoded states.
pub fn braid_permutation(
    switch: &FiniteSwitch,
    word: &BraidWord,
) -> Result<DensePermutation, RepresentationError> {
    braid_permutation_opts(switch, word, SweepOptions::default())
}

pub fn braid_permutation_opts(
    switch: &FiniteSwitch,
    word: &BraidWord,
    opts: SweepOptions,
) -> Result<DensePermutation, RepresentationError> {
    let size = switch.size();
    let strands = word.strands();
    let count = state_count(size, strands, opts.max_vertices)?;
    let letters = word.letters();
    let image = map_indices(count as usize, opts.mode, |index| {
        let mut colors = decode(index as VertexIndex, size, strands);
        for &letter in letters {
            apply_letter_unchecked(switch, &mut colors, letter);
        }
        encode(&colors, size)
    });
    Ok(DensePermutation { image })
}

/// How a verification pass covered the search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// A pair of state vectors on which a generator map fails to be a switch
/// homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomViolation {
    pub generator: usize,
    pub left: ColorVector,
    pub right: ColorVector,
}

/// Whether every generator acts on states by switch homomorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MedialRepVerdict {
    /// Every generator map is a homomorphism; holds exactly for medial
    /// switches, and the stated mode says how it was double-checked.
    Homomorphic { mode: CheckMode },
    /// Some generator map is not a homomorphism, witnessed both by a failed
    /// medial identity on the switch and by a concrete vector pair.
    Violated {
        medial_witness: MedialWitness,
        violation: HomViolation,
    },
}

#[derive(Debug, Clone, Copy)]
pub struct MedialCheckOptions {
    /// Check all vector pairs when their count is at most this.
    pub pair_threshold: u64,
    /// Sample count used past the threshold.
    pub samples: u64,
    pub seed: u64,
    pub mode: ExecMode,
}

impl Default for MedialCheckOptions {
    fn default() -> Self {
        MedialCheckOptions {
            pair_threshold: 1_000_000,
            samples: 100_000,
            seed: 0,
            mode: ExecMode::default(),
        }
    }
}

fn generator_violation(
    switch: &FiniteSwitch,
    strands: usize,
    generator: usize,
    left: &[Elem],
    right: &[Elem],
) -> bool {
    let product = product_switch(switch, strands);
    let letter = generator as i32;
    let map = |v: &[Elem]| {
        let mut out = v.to_vec();
        apply_letter_unchecked(switch, &mut out, letter);
        out
    };
    let (r1, r2) = product.rho(left, right);
    let (t1, t2) = product.rho(&map(left), &map(right));
    (map(&r1), map(&r2)) != (t1, t2)
}

/// Checks whether the generator maps on `strands`-strand states are switch
/// homomorphisms for the componentwise pair structure. Exhaustive over all
/// vector pairs up to the threshold, sampled beyond it.
pub fn check_medial_representation(
    switch: &FiniteSwitch,
    strands: usize,
) -> Result<MedialRepVerdict, RepresentationError> {
    check_medial_representation_opts(switch, strands, MedialCheckOptions::default())
}

pub fn check_medial_representation_opts(
    switch: &FiniteSwitch,
    strands: usize,
    opts: MedialCheckOptions,
) -> Result<MedialRepVerdict, RepresentationError> {
    assert!(strands >= 2, "states need at least 2 strands");
    let size = switch.size();

    if let Some(witness) = medial_witness(switch) {
        let pair_count = state_count(size, 2, u64::MAX)?;
        let mut found: Option<HomViolation> = None;
        'scan: for li in 0..pair_count {
            for ri in 0..pair_count {
                let left = decode(li, size, 2);
                let right = decode(ri, size, 2);
                if generator_violation(switch, 2, 1, &left, &right) {
                    found = Some(HomViolation {
                        generator: 1,
                        left,
                        right,
                    });
                    break 'scan;
                }
            }
        }
        let base = found.expect("a non-medial switch always has a two-strand violation");
        let pad = |v: &[Elem]| {
            let mut out = vec![1 as Elem; strands];
            out[0] = v[0];
            out[1] = v[1];
            out
        };
        let violation = HomViolation {
            generator: 1,
            left: pad(&base.left),
            right: pad(&base.right),
        };
        debug_assert!(generator_violation(
            switch,
            strands,
            1,
            &violation.left,
            &violation.right
        ));
        return Ok(MedialRepVerdict::Violated {
            medial_witness: witness,
            violation,
        });
    }

    let count = state_count(size, strands, u64::MAX)? as u64;
    let pairs = (count as u128) * (count as u128);
    let mode = if pairs <= opts.pair_threshold as u128 {
        let clean = all_indices(pairs as usize, opts.mode, |pair_index| {
            let left = decode((pair_index as u64 / count) as VertexIndex, size, strands);
            let right = decode((pair_index as u64 % count) as VertexIndex, size, strands);
            (1..strands).all(|generator| !generator_violation(switch, strands, generator, &left, &right))
        });
        assert!(
            clean,
            "medial switch generator maps must be homomorphisms"
        );
        CheckMode::Exhaustive
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.samples {
            let left: ColorVector = (0..strands)
                .map(|_| rng.random_range(1..=size as Elem))
                .collect();
            let right: ColorVector = (0..strands)
                .map(|_| rng.random_range(1..=size as Elem))
                .collect();
            for generator in 1..strands {
                assert!(
                    !generator_violation(switch, strands, generator, &left, &right),
                    "medial switch generator maps must be homomorphisms"
                );
            }
        }
        CheckMode::Sampled {
            samples: opts.samples,
            seed: opts.seed,
        }
    };
    Ok(MedialRepVerdict::Homomorphic { mode })
}

/// Outcome of comparing the linear switch action with the standard
/// two-band integral matrix action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BurauVerdict {
    Agrees { mode: CheckMode },
    Disagrees {
        generator: usize,
        vector: ColorVector,
        expected: ColorVector,
        got: ColorVector,
    },
}

/// Verifies that the linear switch with multiplier t (and unit second
/// parameter) acts on state vectors exactly as the block matrices with rows
/// (1-t, t) and (1, 0) over Z/m. Exhaustive when m^strands fits in
/// `trials`, sampled otherwise.
pub fn burau_check(
    modulus: u32,
    t: i64,
    strands: usize,
    trials: u64,
    seed: u64,
) -> Result<BurauVerdict, AlgebraError> {
    assert!(strands >= 2, "the comparison needs at least 2 strands");
    let switch = linear_switch(modulus, t, 1)?;
    let size = modulus as usize;
    let m = modulus as i64;
    let t_red = t.rem_euclid(m);

    let matrix_action = |colors: &[Elem], generator: usize| -> ColorVector {
        let mut out = colors.to_vec();
        let a = (colors[generator - 1] - 1) as i64;
        let b = (colors[generator] - 1) as i64;
        out[generator - 1] = (((1 - t_red) * a + t_red * b).rem_euclid(m) + 1) as Elem;
        out[generator] = (a + 1) as Elem;
        out
    };
    let switch_action = |colors: &[Elem], generator: usize| -> ColorVector {
        let mut out = colors.to_vec();
        apply_letter_unchecked(&switch, &mut out, generator as i32);
        out
    };
    let compare = |colors: &[Elem]| -> Option<BurauVerdict> {
        for generator in 1..strands {
            let expected = matrix_action(colors, generator);
            let got = switch_action(colors, generator);
            if expected != got {
                return Some(BurauVerdict::Disagrees {
                    generator,
                    vector: colors.to_vec(),
                    expected,
                    got,
                });
            }
        }
        None
    };

    let total = (size as u128).saturating_pow(strands as u32);
    if total <= trials as u128 {
        for index in 0..total as u64 {
            let colors = decode(index as VertexIndex, size, strands);
            if let Some(verdict) = compare(&colors) {
                return Ok(verdict);
            }
        }
        Ok(BurauVerdict::Agrees {
            mode: CheckMode::Exhaustive,
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let colors: ColorVector = (0..strands)
                .map(|_| rng.random_range(1..=size as Elem))
                .collect();
            if let Some(verdict) = compare(&colors) {
                return Ok(verdict);
            }
        }
        Ok(BurauVerdict::Agrees {
            mode: CheckMode::Sampled {
                samples: trials,
                seed,
            },
        })
    }
}
