//! Quivers weighted by a two-cocycle: each vertex carries the sum of
//! crossing weights picked up when its state is pushed through the word.
//!
//! At a positive letter acting on the pair (a, b), the weight is the
//! cocycle evaluated at a and the outgoing first color; at a negative
//! letter, minus the cocycle evaluated at the incoming first color and a.
//! The per-vertex totals refine the cycle structure into two bivariate
//! polynomials, one over vertices and one over edges.

use crate::algebra::{Elem, FiniteBirack, FiniteSwitch};
use crate::braidword::BraidWord;
use crate::exec::map_indices;
use crate::formal_poly::FormalPolynomial;
use crate::homology::{is_two_cocycle, Cochain2, CocycleViolation};
use crate::quiver::{build_quiver_opts, BraidQuiver, QuiverWeights};
use crate::representation::{decode, RepresentationError, SweepOptions, VertexIndex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleQuiverError {
    #[error(transparent)]
    Representation(#[from] RepresentationError),
    #[error(transparent)]
    InvalidCocycle(#[from] CocycleViolation),
    #[error("cochain covers a set of size {cocycle}, algebra has size {algebra}")]
    SizeMismatch { cocycle: usize, algebra: usize },
}

fn check_compatible(birack: &FiniteBirack, phi: &Cochain2) -> Result<(), CocycleQuiverError> {
    if phi.size() != birack.size() {
        return Err(CocycleQuiverError::SizeMismatch {
            cocycle: phi.size(),
            algebra: birack.size(),
        });
    }
    is_two_cocycle(birack, phi)?;
    Ok(())
}

fn walk_weight(switch: &FiniteSwitch, phi: &Cochain2, state: &mut [Elem], letters: &[i32]) -> u32 {
    let mut total: i64 = 0;
    for &letter in letters {
        let position = letter.unsigned_abs() as usize - 1;
        let (a, b) = (state[position], state[position + 1]);
        let (c, d) = if letter > 0 {
            let (c, d) = switch.rho(a, b);
            total += phi.value(a, c) as i64;
            (c, d)
        } else {
            let (c, d) = switch.rho_inv(a, b);
            total -= phi.value(c, a) as i64;
            (c, d)
        };
        state[position] = c;
        state[position + 1] = d;
    }
    total.rem_euclid(phi.modulus() as i64) as u32
}

/// Total crossing weight collected by one color vector pushed through the
/// word. The cochain must be a two-cocycle of the birack.
pub fn boltzmann_weight(
    birack: &FiniteBirack,
    phi: &Cochain2,
    word: &BraidWord,
    colors: &[Elem],
) -> Result<u32, CocycleQuiverError> {
    check_compatible(birack, phi)?;
    if colors.len() != word.strands() {
        return Err(RepresentationError::StrandMismatch {
            word: word.strands(),
            vector: colors.len(),
        }
        .into());
    }
    for (i, &c) in colors.iter().enumerate() {
        if c < 1 || c as usize > birack.size() {
            return Err(RepresentationError::ColorRange {
                position: i + 1,
                value: c,
                size: birack.size(),
            }
            .into());
        }
    }
    let switch = birack.to_switch();
    let mut state = colors.to_vec();
    Ok(walk_weight(&switch, phi, &mut state, word.letters()))
}

/// A braid quiver whose vertices all carry cocycle weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedQuiver {
    quiver: BraidQuiver,
}

impl WeightedQuiver {
    pub fn quiver(&self) -> &BraidQuiver {
        &self.quiver
    }

    pub fn weights(&self) -> &QuiverWeights {
        self.quiver
            .weights()
            .expect("weighted quivers always carry weights")
    }

    pub fn weight(&self, vertex: VertexIndex) -> u32 {
        self.weights().values[vertex as usize]
    }
}

pub fn build_weighted_quiver(
    birack: &FiniteBirack,
    phi: &Cochain2,
    word: &BraidWord,
) -> Result<WeightedQuiver, CocycleQuiverError> {
    build_weighted_quiver_opts(birack, phi, word, SweepOptions::default())
}

pub fn build_weighted_quiver_opts(
    birack: &FiniteBirack,
    phi: &Cochain2,
    word: &BraidWord,
    opts: SweepOptions,
) -> Result<WeightedQuiver, CocycleQuiverError> {
    check_compatible(birack, phi)?;
    let switch = birack.to_switch();
    let quiver = build_quiver_opts(&switch, word, opts)?;
    let size = birack.size();
    let strands = word.strands();
    let letters = word.letters();
    let values = map_indices(quiver.vertex_count(), opts.mode, |index| {
        let mut state = decode(index as VertexIndex, size, strands);
        walk_weight(&switch, phi, &mut state, letters)
    });
    let quiver = quiver.attach_weights(QuiverWeights {
        modulus: phi.modulus(),
        values,
    });
    Ok(WeightedQuiver { quiver })
}

/// Sum over vertices of u^(cycle length) v^(weight).
pub fn vertex_polynomial(weighted: &WeightedQuiver) -> FormalPolynomial {
    let mut poly = FormalPolynomial::new(&["u", "v"]);
    let quiver = weighted.quiver();
    for (index, &len) in quiver.cycle_lengths().iter().enumerate() {
        let w = weighted.weight(index as VertexIndex);
        poly.add_monomial(&[len, w], 1)
            .expect("vertex counts fit in the coefficient type");
    }
    poly
}

/// Sum over edges of s^(source weight) t^(target weight).
pub fn edge_polynomial(weighted: &WeightedQuiver) -> FormalPolynomial {
    let mut poly = FormalPolynomial::new(&["s", "t"]);
    let quiver = weighted.quiver();
    for index in 0..quiver.vertex_count() {
        let vertex = index as VertexIndex;
        let s = weighted.weight(vertex);
        let t = weighted.weight(quiver.successor().apply(vertex));
        poly.add_monomial(&[s, t], 1)
            .expect("vertex counts fit in the coefficient type");
    }
    poly
}
