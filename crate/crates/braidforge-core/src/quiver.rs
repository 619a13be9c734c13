//! Quivers of braid actions: each colored state points at its image, and
//! the cycle structure of that functional graph is the invariant.

use crate::algebra::FiniteSwitch;
use crate::braidword::BraidWord;
use crate::formal_poly::FormalPolynomial;
use crate::representation::{
    braid_permutation_opts, decode, ColorVector, DensePermutation, RepresentationError,
    SweepOptions, VertexIndex,
};

/// Modular vertex weights attached to a quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverWeights {
    pub modulus: u32,
    pub values: Vec<u32>,
}

/// The action graph of one braid word: a permutation of state indices with
/// its cycle decomposition precomputed, plus optional vertex weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidQuiver {
    algebra_size: usize,
    strands: usize,
    successor: DensePermutation,
    cycle_len: Vec<u32>,
    weights: Option<QuiverWeights>,
}

fn cycle_lengths(perm: &DensePermutation) -> Vec<u32> {
    let count = perm.len();
    let mut lengths = vec![0u32; count];
    let mut visited = vec![false; count];
    let mut cycle = Vec::new();
    for start in 0..count {
        if visited[start] {
            continue;
        }
        cycle.clear();
        let mut vertex = start as VertexIndex;
        loop {
            cycle.push(vertex);
            visited[vertex as usize] = true;
            vertex = perm.apply(vertex);
            if vertex as usize == start {
                break;
            }
        }
        let len = cycle.len() as u32;
        for &member in &cycle {
            lengths[member as usize] = len;
        }
    }
    lengths
}

pub fn build_quiver(
    switch: &FiniteSwitch,
    word: &BraidWord,
) -> Result<BraidQuiver, RepresentationError> {
    build_quiver_opts(switch, word, SweepOptions::default())
}

pub fn build_quiver_opts(
    switch: &FiniteSwitch,
    word: &BraidWord,
    opts: SweepOptions,
) -> Result<BraidQuiver, RepresentationError> {
    let successor = braid_permutation_opts(switch, word, opts)?;
    let cycle_len = cycle_lengths(&successor);
    Ok(BraidQuiver {
        algebra_size: switch.size(),
        strands: word.strands(),
        successor,
        cycle_len,
        weights: None,
    })
}

impl BraidQuiver {
    pub fn algebra_size(&self) -> usize {
        self.algebra_size
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn vertex_count(&self) -> usize {
        self.successor.len()
    }

    pub fn successor(&self) -> &DensePermutation {
        &self.successor
    }

    /// Length of the cycle through each vertex, indexed by state.
    pub fn cycle_lengths(&self) -> &[u32] {
        &self.cycle_len
    }

    pub fn cycle_length(&self, vertex: VertexIndex) -> u32 {
        self.cycle_len[vertex as usize]
    }

    pub fn colors(&self, vertex: VertexIndex) -> ColorVector {
        decode(vertex, self.algebra_size, self.strands)
    }

    pub fn weights(&self) -> Option<&QuiverWeights> {
        self.weights.as_ref()
    }

    pub(crate) fn attach_weights(mut self, weights: QuiverWeights) -> Self {
        assert_eq!(weights.values.len(), self.vertex_count());
        self.weights = Some(weights);
        self
    }
}

/// One formal variable per cycle length: the monomial for a vertex on a
/// cycle of length L is u^L, so the coefficient of u^L counts those
/// vertices and the coefficients sum to the state count.
pub fn quiver_polynomial(quiver: &BraidQuiver) -> FormalPolynomial {
    let mut poly = FormalPolynomial::new(&["u"]);
    for &len in quiver.cycle_lengths() {
        poly.add_monomial(&[len], 1)
            .expect("vertex counts fit in the coefficient type");
    }
    poly
}

/// States fixed by the k-th power of the action: the vertices whose cycle
/// length divides k.
pub fn closure_coloring_count(quiver: &BraidQuiver, power: u32) -> u64 {
    assert!(power >= 1, "the closure power must be at least 1");
    quiver
        .cycle_lengths()
        .iter()
        .filter(|&&len| power.is_multiple_of(len))
        .count() as u64
}

/// Renders the quiver in DOT format, one node per state labeled with its
/// colors (and its weight when present), one edge per vertex.
pub fn export_dot(quiver: &BraidQuiver, graph_name: &str) -> String {
    let mut out = format!("digraph {graph_name} {{\n");
    for vertex in 0..quiver.vertex_count() as VertexIndex {
        let colors = quiver.colors(vertex);
        let parts: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
        let label = format!("({})", parts.join(","));
        match quiver.weights() {
            Some(w) => out.push_str(&format!(
                "  v{vertex} [label=\"{label} bw={}\"];\n",
                w.values[vertex as usize]
            )),
            None => out.push_str(&format!("  v{vertex} [label=\"{label}\"];\n")),
        }
    }
    for vertex in 0..quiver.vertex_count() as VertexIndex {
        out.push_str(&format!(
            "  v{vertex} -> v{};\n",
            quiver.successor.apply(vertex)
        ));
    }
    out.push_str("}\n");
    out
}
