//! Finite biracks and switches as dense operation tables.
//!
//! A birack is a set with two binary operations `under` and `over` whose
//! column actions are bijective, whose sideways map is bijective, and which
//! satisfy the three exchange laws. A switch is an invertible map on ordered
//! pairs satisfying the set-theoretic Yang-Baxter equation. Every birack
//! yields a switch, and a switch is equivalently described by four derived
//! binary operations; both translations live here, along with standard
//! constructions (constant actions, linear switches over Z/m, skew braces)
//! and a plain text file format.
//!
//! Tables are indexed with the row as the first argument and the column as
//! the second, and elements are labeled 1 through N.

use std::fmt;
use thiserror::Error;

/// Element of a finite birack or switch, labeled from 1.
pub type Elem = u16;

#[inline]
fn idx(size: usize, x: Elem, y: Elem) -> usize {
    debug_assert!(x >= 1 && (x as usize) <= size && y >= 1 && (y as usize) <= size);
    (x as usize - 1) * size + (y as usize - 1)
}

fn elems(size: usize) -> impl Iterator<Item = Elem> {
    1..=size as Elem
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BirackOp {
    Under,
    Over,
}

impl fmt::Display for BirackOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BirackOp::Under => "under",
            BirackOp::Over => "over",
        })
    }
}

/// A single axiom violation, carrying the first witness found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomFailure {
    /// The column action of `y` under the given operation is not a bijection.
    ColumnNotBijective { op: BirackOp, y: Elem },
    /// The sideways map sends two distinct pairs to the same pair.
    SidewaysNotBijective { first: (Elem, Elem), second: (Elem, Elem) },
    /// One of the three exchange laws fails at (x, y, z).
    ExchangeLaw { law: u8, x: Elem, y: Elem, z: Elem },
    /// The pair map sends two distinct pairs to the same pair.
    RhoNotBijective { first: (Elem, Elem), second: (Elem, Elem) },
    /// The Yang-Baxter equation fails at (x, y, z).
    YangBaxter { x: Elem, y: Elem, z: Elem },
    /// One of the three derived-operation identities fails at (x, y, z).
    FourOpsIdentity { identity: u8, x: Elem, y: Elem, z: Elem },
    /// One of the four cancellation identities fails at (x, y).
    FourOpsCancellation { identity: u8, x: Elem, y: Elem },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::ColumnNotBijective { op, y } => {
                write!(f, "the {op} action of {y} is not a bijection")
            }
            AxiomFailure::SidewaysNotBijective { first, second } => write!(
                f,
                "the sideways map sends ({},{}) and ({},{}) to the same pair",
                first.0, first.1, second.0, second.1
            ),
            AxiomFailure::ExchangeLaw { law, x, y, z } => {
                write!(f, "exchange law {law} fails at x={x}, y={y}, z={z}")
            }
            AxiomFailure::RhoNotBijective { first, second } => write!(
                f,
                "the pair map sends ({},{}) and ({},{}) to the same pair",
                first.0, first.1, second.0, second.1
            ),
            AxiomFailure::YangBaxter { x, y, z } => {
                write!(f, "the Yang-Baxter equation fails at x={x}, y={y}, z={z}")
            }
            AxiomFailure::FourOpsIdentity { identity, x, y, z } => write!(
                f,
                "derived-operation identity {identity} fails at x={x}, y={y}, z={z}"
            ),
            AxiomFailure::FourOpsCancellation { identity, x, y } => write!(
                f,
                "cancellation identity {identity} fails at x={x}, y={y}"
            ),
        }
    }
}

/// Outcome of an axiom sweep: empty means every axiom holds.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return f.write_str("all axioms hold");
        }
        for (i, failure) in self.failures.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{failure}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0}")]
    Shape(String),
    #[error("entry at row {x}, column {y} is {value}, outside 1..={size}")]
    Range { x: Elem, y: Elem, value: Elem, size: usize },
    #[error("{0}")]
    Axioms(ValidationReport),
    #[error("the actions do not commute at {x}: under∘over gives {st}, over∘under gives {ts}")]
    NonCommuting { x: Elem, st: Elem, ts: Elem },
    #[error("{value} is not a unit modulo {modulus}")]
    NonUnit { value: i64, modulus: u32 },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("the {table} table is not a group: {reason}")]
    NotAGroup { table: &'static str, reason: String },
    #[error("brace compatibility fails at x={x}, y={y}, z={z}")]
    Distributivity { x: Elem, y: Elem, z: Elem },
}

fn check_size(size: usize) -> Result<(), AlgebraError> {
    if size == 0 {
        return Err(AlgebraError::Shape("table must be nonempty".to_string()));
    }
    if size > Elem::MAX as usize {
        return Err(AlgebraError::Shape(format!(
            "table size {size} exceeds the supported maximum {}",
            Elem::MAX
        )));
    }
    Ok(())
}

fn check_table_shape(
    rows: &[Vec<Elem>],
    size: usize,
    name: &str,
) -> Result<Vec<Elem>, AlgebraError> {
    if rows.len() != size {
        return Err(AlgebraError::Shape(format!(
            "{name} table has {} rows, expected {size}",
            rows.len()
        )));
    }
    let mut flat = Vec::with_capacity(size * size);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != size {
            return Err(AlgebraError::Shape(format!(
                "{name} table row {} has {} entries, expected {size}",
                i + 1,
                row.len()
            )));
        }
        for (j, &value) in row.iter().enumerate() {
            if value < 1 || value as usize > size {
                return Err(AlgebraError::Range {
                    x: (i + 1) as Elem,
                    y: (j + 1) as Elem,
                    value,
                    size,
                });
            }
            flat.push(value);
        }
    }
    Ok(flat)
}

/// Checks the birack axioms over flat row-major tables, recording the first
/// witness for each axiom that fails. Entries must already be in range.
pub fn validate_birack(size: usize, under: &[Elem], over: &[Elem]) -> ValidationReport {
    assert_eq!(under.len(), size * size);
    assert_eq!(over.len(), size * size);
    let u = |x: Elem, y: Elem| under[idx(size, x, y)];
    let o = |x: Elem, y: Elem| over[idx(size, x, y)];
    let mut failures = Vec::new();

    for (op, table) in [(BirackOp::Under, under), (BirackOp::Over, over)] {
        'columns: for y in elems(size) {
            let mut seen = vec![false; size];
            for x in elems(size) {
                let v = table[idx(size, x, y)] as usize - 1;
                if seen[v] {
                    failures.push(AxiomFailure::ColumnNotBijective { op, y });
                    break 'columns;
                }
                seen[v] = true;
            }
        }
    }

    let mut seen: Vec<Option<(Elem, Elem)>> = vec![None; size * size];
    'sideways: for x in elems(size) {
        for y in elems(size) {
            let image = idx(size, o(y, x), u(x, y));
            if let Some(first) = seen[image] {
                failures.push(AxiomFailure::SidewaysNotBijective {
                    first,
                    second: (x, y),
                });
                break 'sideways;
            }
            seen[image] = Some((x, y));
        }
    }

    for law in 1u8..=3 {
        'law: for x in elems(size) {
            for y in elems(size) {
                for z in elems(size) {
                    let holds = match law {
                        1 => u(u(x, y), u(z, y)) == u(u(x, z), o(y, z)),
                        2 => o(u(x, y), u(z, y)) == u(o(x, z), o(y, z)),
                        _ => o(o(x, y), o(z, y)) == o(o(x, z), u(y, z)),
                    };
                    if !holds {
                        failures.push(AxiomFailure::ExchangeLaw { law, x, y, z });
                        break 'law;
                    }
                }
            }
        }
    }

    ValidationReport { failures }
}

/// Checks that the pair map is a bijection satisfying the Yang-Baxter
/// equation, recording the first witness for each failing axiom. Entries
/// must already be in range.
pub fn validate_switch(size: usize, rho1: &[Elem], rho2: &[Elem]) -> ValidationReport {
    assert_eq!(rho1.len(), size * size);
    assert_eq!(rho2.len(), size * size);
    let rho = |x: Elem, y: Elem| {
        let p = idx(size, x, y);
        (rho1[p], rho2[p])
    };
    let mut failures = Vec::new();

    let mut seen: Vec<Option<(Elem, Elem)>> = vec![None; size * size];
    'pairs: for x in elems(size) {
        for y in elems(size) {
            let (a, b) = rho(x, y);
            let image = idx(size, a, b);
            if let Some(first) = seen[image] {
                failures.push(AxiomFailure::RhoNotBijective {
                    first,
                    second: (x, y),
                });
                break 'pairs;
            }
            seen[image] = Some((x, y));
        }
    }

    let r12 = |(a, b, c): (Elem, Elem, Elem)| {
        let (p, q) = rho(a, b);
        (p, q, c)
    };
    let r23 = |(a, b, c): (Elem, Elem, Elem)| {
        let (p, q) = rho(b, c);
        (a, p, q)
    };
    'ybe: for x in elems(size) {
        for y in elems(size) {
            for z in elems(size) {
                let t = (x, y, z);
                if r12(r23(r12(t))) != r23(r12(r23(t))) {
                    failures.push(AxiomFailure::YangBaxter { x, y, z });
                    break 'ybe;
                }
            }
        }
    }

    ValidationReport { failures }
}

/// A finite birack: two operation tables passing all axioms, plus the
/// precomputed inverses of the over-action columns used when converting to
/// a switch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBirack {
    size: usize,
    under: Vec<Elem>,
    over: Vec<Elem>,
    alpha_inv: Vec<Elem>,
}

impl FiniteBirack {
    /// Builds a birack from row-major tables, rejecting malformed shapes,
    /// out-of-range entries, and axiom violations.
    pub fn from_rows(
        under_rows: &[Vec<Elem>],
        over_rows: &[Vec<Elem>],
    ) -> Result<Self, AlgebraError> {
        let size = under_rows.len();
        check_size(size)?;
        let under = check_table_shape(under_rows, size, "under")?;
        let over = check_table_shape(over_rows, size, "over")?;
        let report = validate_birack(size, &under, &over);
        if !report.is_ok() {
            return Err(AlgebraError::Axioms(report));
        }
        let mut alpha_inv = vec![0 as Elem; size * size];
        for x in elems(size) {
            for z in elems(size) {
                let y = over[idx(size, z, x)];
                alpha_inv[idx(size, x, y)] = z;
            }
        }
        Ok(FiniteBirack {
            size,
            under,
            over,
            alpha_inv,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// x acted on from under by y.
    #[inline]
    pub fn under(&self, x: Elem, y: Elem) -> Elem {
        self.under[idx(self.size, x, y)]
    }

    /// x acted on from over by y.
    #[inline]
    pub fn over(&self, x: Elem, y: Elem) -> Elem {
        self.over[idx(self.size, x, y)]
    }

    /// The unique z with `over(z, x) == y`.
    #[inline]
    pub fn over_action_inverse(&self, x: Elem, y: Elem) -> Elem {
        self.alpha_inv[idx(self.size, x, y)]
    }

    pub fn is_biquandle(&self) -> bool {
        elems(self.size).all(|x| self.under(x, x) == self.over(x, x))
    }

    pub fn under_rows(&self) -> Vec<Vec<Elem>> {
        unflatten(&self.under, self.size)
    }

    pub fn over_rows(&self) -> Vec<Vec<Elem>> {
        unflatten(&self.over, self.size)
    }

    /// The switch whose pair map sends (x, y) to (z, under(x, z)) where z is
    /// the element pushed to y by the over action of x.
    pub fn to_switch(&self) -> FiniteSwitch {
        let size = self.size;
        let mut rho1 = vec![0 as Elem; size * size];
        let mut rho2 = vec![0 as Elem; size * size];
        for x in elems(size) {
            for y in elems(size) {
                let z = self.over_action_inverse(x, y);
                let p = idx(size, x, y);
                rho1[p] = z;
                rho2[p] = self.under(x, z);
            }
        }
        FiniteSwitch::from_flat(size, rho1, rho2)
            .expect("a valid birack always converts to a valid switch")
    }
}

fn unflatten(flat: &[Elem], size: usize) -> Vec<Vec<Elem>> {
    flat.chunks(size).map(|row| row.to_vec()).collect()
}

/// A finite switch: an invertible pair map satisfying the Yang-Baxter
/// equation, stored with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSwitch {
    size: usize,
    rho1: Vec<Elem>,
    rho2: Vec<Elem>,
    rho1_inv: Vec<Elem>,
    rho2_inv: Vec<Elem>,
}

impl FiniteSwitch {
    /// Builds a switch from the row-major tables of the two components of
    /// the pair map.
    pub fn from_rho_rows(
        rho1_rows: &[Vec<Elem>],
        rho2_rows: &[Vec<Elem>],
    ) -> Result<Self, AlgebraError> {
        let size = rho1_rows.len();
        check_size(size)?;
        let rho1 = check_table_shape(rho1_rows, size, "rho1")?;
        let rho2 = check_table_shape(rho2_rows, size, "rho2")?;
        Self::from_flat(size, rho1, rho2)
    }

    fn from_flat(size: usize, rho1: Vec<Elem>, rho2: Vec<Elem>) -> Result<Self, AlgebraError> {
        let report = validate_switch(size, &rho1, &rho2);
        if !report.is_ok() {
            return Err(AlgebraError::Axioms(report));
        }
        let mut rho1_inv = vec![0 as Elem; size * size];
        let mut rho2_inv = vec![0 as Elem; size * size];
        for x in elems(size) {
            for y in elems(size) {
                let p = idx(size, x, y);
                let q = idx(size, rho1[p], rho2[p]);
                rho1_inv[q] = x;
                rho2_inv[q] = y;
            }
        }
        Ok(FiniteSwitch {
            size,
            rho1,
            rho2,
            rho1_inv,
            rho2_inv,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn rho(&self, x: Elem, y: Elem) -> (Elem, Elem) {
        let p = idx(self.size, x, y);
        (self.rho1[p], self.rho2[p])
    }

    #[inline]
    pub fn rho_inv(&self, x: Elem, y: Elem) -> (Elem, Elem) {
        let p = idx(self.size, x, y);
        (self.rho1_inv[p], self.rho2_inv[p])
    }

    pub fn rho1_rows(&self) -> Vec<Vec<Elem>> {
        unflatten(&self.rho1, self.size)
    }

    pub fn rho2_rows(&self) -> Vec<Vec<Elem>> {
        unflatten(&self.rho2, self.size)
    }
}

/// The four binary operations equivalent to a switch, with their defining
/// identities checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourOps {
    size: usize,
    under: Vec<Elem>,
    over: Vec<Elem>,
    under_inv: Vec<Elem>,
    over_inv: Vec<Elem>,
}

impl FourOps {
    /// Builds the four operations from row-major tables, checking the three
    /// three-variable identities and the four cancellation identities.
    pub fn from_tables(
        under_rows: &[Vec<Elem>],
        over_rows: &[Vec<Elem>],
        under_inv_rows: &[Vec<Elem>],
        over_inv_rows: &[Vec<Elem>],
    ) -> Result<Self, AlgebraError> {
        let size = under_rows.len();
        check_size(size)?;
        let under = check_table_shape(under_rows, size, "under")?;
        let over = check_table_shape(over_rows, size, "over")?;
        let under_inv = check_table_shape(under_inv_rows, size, "under_inv")?;
        let over_inv = check_table_shape(over_inv_rows, size, "over_inv")?;

        let un = |x: Elem, y: Elem| under[idx(size, x, y)];
        let ov = |x: Elem, y: Elem| over[idx(size, x, y)];
        let ui = |x: Elem, y: Elem| under_inv[idx(size, x, y)];
        let oi = |x: Elem, y: Elem| over_inv[idx(size, x, y)];

        let mut failures = Vec::new();
        for identity in 1u8..=3 {
            'identity: for x in elems(size) {
                for y in elems(size) {
                    for z in elems(size) {
                        let holds = match identity {
                            1 => ov(ov(z, un(x, y)), ov(y, x)) == ov(ov(z, y), x),
                            2 => {
                                un(ov(y, x), ov(z, un(x, y)))
                                    == ov(un(y, z), un(x, ov(z, y)))
                            }
                            _ => un(un(x, y), z) == un(un(x, ov(z, y)), un(y, z)),
                        };
                        if !holds {
                            failures.push(AxiomFailure::FourOpsIdentity { identity, x, y, z });
                            break 'identity;
                        }
                    }
                }
            }
        }
        for identity in 1u8..=4 {
            'cancellation: for x in elems(size) {
                for y in elems(size) {
                    let holds = match identity {
                        1 => ui(un(x, y), ov(y, x)) == x,
                        2 => ov(oi(x, y), ui(y, x)) == x,
                        3 => oi(ov(y, x), un(x, y)) == y,
                        _ => un(ui(y, x), oi(x, y)) == y,
                    };
                    if !holds {
                        failures.push(AxiomFailure::FourOpsCancellation { identity, x, y });
                        break 'cancellation;
                    }
                }
            }
        }
        if !failures.is_empty() {
            return Err(AlgebraError::Axioms(ValidationReport { failures }));
        }
        Ok(FourOps {
            size,
            under,
            over,
            under_inv,
            over_inv,
        })
    }

    /// Reads the four operations off a switch.
    pub fn from_switch(switch: &FiniteSwitch) -> Self {
        let size = switch.size();
        let mut under = vec![0 as Elem; size * size];
        let mut over = vec![0 as Elem; size * size];
        let mut under_inv = vec![0 as Elem; size * size];
        let mut over_inv = vec![0 as Elem; size * size];
        for x in elems(size) {
            for y in elems(size) {
                let p = idx(size, x, y);
                under[p] = switch.rho(x, y).1;
                over[p] = switch.rho(y, x).0;
                under_inv[p] = switch.rho_inv(y, x).0;
                over_inv[p] = switch.rho_inv(x, y).1;
            }
        }
        FourOps {
            size,
            under,
            over,
            under_inv,
            over_inv,
        }
    }

    /// Reassembles the switch whose pair map sends (x, y) to
    /// (over(y, x), under(x, y)).
    pub fn to_switch(&self) -> FiniteSwitch {
        let size = self.size;
        let mut rho1 = vec![0 as Elem; size * size];
        let mut rho2 = vec![0 as Elem; size * size];
        for x in elems(size) {
            for y in elems(size) {
                let p = idx(size, x, y);
                rho1[p] = self.over(y, x);
                rho2[p] = self.under(x, y);
            }
        }
        FiniteSwitch::from_flat(size, rho1, rho2)
            .expect("validated four-operation tables define a switch")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn under(&self, x: Elem, y: Elem) -> Elem {
        self.under[idx(self.size, x, y)]
    }

    #[inline]
    pub fn over(&self, x: Elem, y: Elem) -> Elem {
        self.over[idx(self.size, x, y)]
    }

    #[inline]
    pub fn under_inv(&self, x: Elem, y: Elem) -> Elem {
        self.under_inv[idx(self.size, x, y)]
    }

    #[inline]
    pub fn over_inv(&self, x: Elem, y: Elem) -> Elem {
        self.over_inv[idx(self.size, x, y)]
    }
}

/// Witness that one of the three medial identities fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MedialWitness {
    pub identity: u8,
    pub x: Elem,
    pub y: Elem,
    pub w: Elem,
    pub z: Elem,
}

impl fmt::Display for MedialWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "medial identity {} fails at x={}, y={}, w={}, z={}",
            self.identity, self.x, self.y, self.w, self.z
        )
    }
}

/// Finds the first quadruple violating a medial identity, scanning the
/// identities in order and each in lexicographic order.
pub fn medial_witness(switch: &FiniteSwitch) -> Option<MedialWitness> {
    let size = switch.size();
    let un = |x: Elem, y: Elem| switch.rho(x, y).1;
    let ov = |x: Elem, y: Elem| switch.rho(y, x).0;
    for identity in 1u8..=3 {
        for x in elems(size) {
            for y in elems(size) {
                for w in elems(size) {
                    for z in elems(size) {
                        let holds = match identity {
                            1 => un(un(x, y), un(w, z)) == un(un(x, w), un(y, z)),
                            2 => ov(un(x, y), un(w, z)) == un(ov(x, w), ov(y, z)),
                            _ => ov(ov(x, y), ov(w, z)) == ov(ov(x, w), ov(y, z)),
                        };
                        if !holds {
                            return Some(MedialWitness { identity, x, y, w, z });
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_medial(switch: &FiniteSwitch) -> bool {
    medial_witness(switch).is_none()
}

/// First pair where a map fails to intertwine two switches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomomorphismWitness {
    pub x: Elem,
    pub y: Elem,
}

/// Checks whether `f` (one image per source element, not necessarily
/// bijective) commutes with the pair maps, returning the first failing pair
/// if not.
pub fn is_switch_homomorphism(
    f: &[Elem],
    source: &FiniteSwitch,
    target: &FiniteSwitch,
) -> Result<Option<HomomorphismWitness>, AlgebraError> {
    if f.len() != source.size() {
        return Err(AlgebraError::Shape(format!(
            "map has {} entries, expected {}",
            f.len(),
            source.size()
        )));
    }
    for (i, &v) in f.iter().enumerate() {
        if v < 1 || v as usize > target.size() {
            return Err(AlgebraError::Shape(format!(
                "map sends {} to {v}, outside 1..={}",
                i + 1,
                target.size()
            )));
        }
    }
    let apply = |x: Elem| f[x as usize - 1];
    for x in elems(source.size()) {
        for y in elems(source.size()) {
            let (r1, r2) = source.rho(x, y);
            if target.rho(apply(x), apply(y)) != (apply(r1), apply(r2)) {
                return Ok(Some(HomomorphismWitness { x, y }));
            }
        }
    }
    Ok(None)
}

/// Birack whose actions ignore the acting element: `under(x, y)` is a fixed
/// permutation of x and `over(x, y)` another, and the two must commute.
pub fn constant_action_birack(
    under_perm: &[Elem],
    over_perm: &[Elem],
) -> Result<FiniteBirack, AlgebraError> {
    let size = under_perm.len();
    check_size(size)?;
    if over_perm.len() != size {
        return Err(AlgebraError::Shape(format!(
            "permutations have lengths {} and {}",
            size,
            over_perm.len()
        )));
    }
    for (name, perm) in [("under", under_perm), ("over", over_perm)] {
        for (i, &v) in perm.iter().enumerate() {
            if v < 1 || v as usize > size {
                return Err(AlgebraError::Shape(format!(
                    "{name} permutation sends {} to {v}, outside 1..={size}",
                    i + 1
                )));
            }
        }
    }
    let s = |x: Elem| under_perm[x as usize - 1];
    let t = |x: Elem| over_perm[x as usize - 1];
    for x in elems(size) {
        let st = s(t(x));
        let ts = t(s(x));
        if st != ts {
            return Err(AlgebraError::NonCommuting { x, st, ts });
        }
    }
    let under_rows: Vec<Vec<Elem>> = elems(size).map(|x| vec![s(x); size]).collect();
    let over_rows: Vec<Vec<Elem>> = elems(size).map(|x| vec![t(x); size]).collect();
    FiniteBirack::from_rows(&under_rows, &over_rows)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn reduce_mod(value: i64, modulus: u32) -> u64 {
    value.rem_euclid(modulus as i64) as u64
}

fn check_unit(value: i64, modulus: u32) -> Result<u64, AlgebraError> {
    let reduced = reduce_mod(value, modulus);
    if gcd(reduced, modulus as u64) != 1 {
        return Err(AlgebraError::NonUnit { value, modulus });
    }
    Ok(reduced)
}

fn check_modulus(modulus: u32) -> Result<(), AlgebraError> {
    if modulus < 2 {
        return Err(AlgebraError::BadModulus(modulus));
    }
    if modulus as usize > Elem::MAX as usize {
        return Err(AlgebraError::Shape(format!(
            "modulus {modulus} exceeds the supported table size {}",
            Elem::MAX
        )));
    }
    Ok(())
}

/// The switch on Z/m sending (x, y) to (ly + (1 - ml)x, mx) for units l, m.
pub fn linear_switch(modulus: u32, lambda: i64, mu: i64) -> Result<FiniteSwitch, AlgebraError> {
    check_modulus(modulus)?;
    let l = check_unit(lambda, modulus)? as i64;
    let m = check_unit(mu, modulus)? as i64;
    let n = modulus as i64;
    let coefficient = (1 - m * l).rem_euclid(n);
    let size = modulus as usize;
    let mut rho1_rows = Vec::with_capacity(size);
    let mut rho2_rows = Vec::with_capacity(size);
    for rx in 0..n {
        let mut r1 = Vec::with_capacity(size);
        let mut r2 = Vec::with_capacity(size);
        for ry in 0..n {
            r1.push(((l * ry + coefficient * rx).rem_euclid(n) + 1) as Elem);
            r2.push(((m * rx).rem_euclid(n) + 1) as Elem);
        }
        rho1_rows.push(r1);
        rho2_rows.push(r2);
    }
    Ok(FiniteSwitch::from_rho_rows(&rho1_rows, &rho2_rows)
        .expect("linear pair maps over units satisfy the switch axioms"))
}

/// The biquandle on Z/m with `under(x, y) = tx + (s - t)y` and
/// `over(x, y) = sx` for units s, t.
pub fn alexander_biquandle(modulus: u32, s: i64, t: i64) -> Result<FiniteBirack, AlgebraError> {
    check_modulus(modulus)?;
    let s = check_unit(s, modulus)? as i64;
    let t = check_unit(t, modulus)? as i64;
    let n = modulus as i64;
    let size = modulus as usize;
    let mut under_rows = Vec::with_capacity(size);
    let mut over_rows = Vec::with_capacity(size);
    for rx in 0..n {
        let mut u = Vec::with_capacity(size);
        let mut o = Vec::with_capacity(size);
        for ry in 0..n {
            u.push(((t * rx + (s - t) * ry).rem_euclid(n) + 1) as Elem);
            o.push(((s * rx).rem_euclid(n) + 1) as Elem);
        }
        under_rows.push(u);
        over_rows.push(o);
    }
    Ok(FiniteBirack::from_rows(&under_rows, &over_rows)
        .expect("linear actions by units satisfy the birack axioms"))
}

#[derive(Debug)]
struct GroupTable {
    size: usize,
    table: Vec<Elem>,
    inverses: Vec<Elem>,
}

impl GroupTable {
    #[inline]
    fn op(&self, x: Elem, y: Elem) -> Elem {
        self.table[idx(self.size, x, y)]
    }

    #[inline]
    fn inv(&self, x: Elem) -> Elem {
        self.inverses[x as usize - 1]
    }
}

fn validate_group(
    rows: &[Vec<Elem>],
    size: usize,
    name: &'static str,
) -> Result<GroupTable, AlgebraError> {
    let table = check_table_shape(rows, size, name)?;
    let op = |x: Elem, y: Elem| table[idx(size, x, y)];
    for x in elems(size) {
        let mut seen = vec![false; size];
        for y in elems(size) {
            let v = op(x, y) as usize - 1;
            if seen[v] {
                return Err(AlgebraError::NotAGroup {
                    table: name,
                    reason: format!("row {x} is not a bijection"),
                });
            }
            seen[v] = true;
        }
    }
    for y in elems(size) {
        let mut seen = vec![false; size];
        for x in elems(size) {
            let v = op(x, y) as usize - 1;
            if seen[v] {
                return Err(AlgebraError::NotAGroup {
                    table: name,
                    reason: format!("column {y} is not a bijection"),
                });
            }
            seen[v] = true;
        }
    }
    let identity = elems(size)
        .find(|&e| elems(size).all(|x| op(e, x) == x && op(x, e) == x))
        .ok_or_else(|| AlgebraError::NotAGroup {
            table: name,
            reason: "no two-sided identity".to_string(),
        })?;
    for x in elems(size) {
        for y in elems(size) {
            for z in elems(size) {
                if op(op(x, y), z) != op(x, op(y, z)) {
                    return Err(AlgebraError::NotAGroup {
                        table: name,
                        reason: format!("associativity fails at x={x}, y={y}, z={z}"),
                    });
                }
            }
        }
    }
    let mut inverses = vec![0 as Elem; size];
    for x in elems(size) {
        let inv = elems(size)
            .find(|&y| op(x, y) == identity && op(y, x) == identity)
            .ok_or_else(|| AlgebraError::NotAGroup {
                table: name,
                reason: format!("{x} has no two-sided inverse"),
            })?;
        inverses[x as usize - 1] = inv;
    }
    Ok(GroupTable {
        size,
        table,
        inverses,
    })
}

/// Birack built from two group structures on the same set: `star` and
/// `circ` must satisfy the brace compatibility law
/// `x∘(y∗z) = ((x∘y) ∗ inv∗(x)) ∗ (x∘z)`, and the actions are
/// `under(x, y) = inv∘(y) ∘ (x∗y)` and `over(x, y) = inv∘(y) ∘ (y∗x)`.
pub fn skew_brace_birack(
    star_rows: &[Vec<Elem>],
    circ_rows: &[Vec<Elem>],
) -> Result<FiniteBirack, AlgebraError> {
    let size = star_rows.len();
    check_size(size)?;
    if circ_rows.len() != size {
        return Err(AlgebraError::Shape(format!(
            "tables have sizes {size} and {}",
            circ_rows.len()
        )));
    }
    let star = validate_group(star_rows, size, "star")?;
    let circ = validate_group(circ_rows, size, "circ")?;
    for x in elems(size) {
        for y in elems(size) {
            for z in elems(size) {
                let lhs = circ.op(x, star.op(y, z));
                let rhs = star.op(star.op(circ.op(x, y), star.inv(x)), circ.op(x, z));
                if lhs != rhs {
                    return Err(AlgebraError::Distributivity { x, y, z });
                }
            }
        }
    }
    let mut under_rows = Vec::with_capacity(size);
    let mut over_rows = Vec::with_capacity(size);
    for x in elems(size) {
        let mut u = Vec::with_capacity(size);
        let mut o = Vec::with_capacity(size);
        for y in elems(size) {
            u.push(circ.op(circ.inv(y), star.op(x, y)));
            o.push(circ.op(circ.inv(y), star.op(y, x)));
        }
        under_rows.push(u);
        over_rows.push(o);
    }
    FiniteBirack::from_rows(&under_rows, &over_rows)
}

/// The componentwise switch on length-`arity` vectors over a base switch.
#[derive(Debug, Clone, Copy)]
pub struct ProductSwitch<'a> {
    switch: &'a FiniteSwitch,
    arity: usize,
}

pub fn product_switch(switch: &FiniteSwitch, arity: usize) -> ProductSwitch<'_> {
    ProductSwitch { switch, arity }
}

impl ProductSwitch<'_> {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn base(&self) -> &FiniteSwitch {
        self.switch
    }

    pub fn rho(&self, x: &[Elem], y: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        assert_eq!(x.len(), self.arity);
        assert_eq!(y.len(), self.arity);
        x.iter()
            .zip(y.iter())
            .map(|(&a, &b)| self.switch.rho(a, b))
            .unzip()
    }

    pub fn rho_inv(&self, x: &[Elem], y: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        assert_eq!(x.len(), self.arity);
        assert_eq!(y.len(), self.arity);
        x.iter()
            .zip(y.iter())
            .map(|(&a, &b)| self.switch.rho_inv(a, b))
            .unzip()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A parsed and validated algebra of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadedAlgebra {
    Birack(FiniteBirack),
    Switch(FiniteSwitch),
}

impl LoadedAlgebra {
    pub fn size(&self) -> usize {
        match self {
            LoadedAlgebra::Birack(b) => b.size(),
            LoadedAlgebra::Switch(s) => s.size(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            LoadedAlgebra::Birack(_) => "birack",
            LoadedAlgebra::Switch(_) => "switch",
        }
    }

    /// The switch this algebra acts by: biracks are converted, switches are
    /// returned as they are.
    pub fn switch(&self) -> FiniteSwitch {
        match self {
            LoadedAlgebra::Birack(b) => b.to_switch(),
            LoadedAlgebra::Switch(s) => s.clone(),
        }
    }

    pub fn birack(&self) -> Option<&FiniteBirack> {
        match self {
            LoadedAlgebra::Birack(b) => Some(b),
            LoadedAlgebra::Switch(_) => None,
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> LoadError {
    LoadError::Parse(ParseError::Syntax {
        line,
        message: message.into(),
    })
}

/// Parses the plain text algebra format:
///
/// ```text
/// kind birack
/// size 3
/// under
/// 1 3 2
/// 3 2 1
/// 2 1 3
/// over
/// 1 1 1
/// 2 2 2
/// 3 3 3
/// ```
///
/// Switches use `kind switch` with blocks `rho1` and `rho2`. Blocks may
/// appear in either order; `#` starts a comment and blank lines are
/// ignored. The tables are validated before being returned.
pub fn load_algebra(text: &str) -> Result<LoadedAlgebra, LoadError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim();
            (i + 1, content)
        })
        .filter(|(_, content)| !content.is_empty());
    let mut last_line = 0usize;
    let mut next = |expect: &str| -> Result<(usize, Vec<String>), LoadError> {
        match lines.next() {
            Some((line, content)) => {
                last_line = line;
                Ok((
                    line,
                    content.split_whitespace().map(|t| t.to_string()).collect(),
                ))
            }
            None => Err(syntax(
                last_line + 1,
                format!("unexpected end of file, expected {expect}"),
            )),
        }
    };

    let (line, tokens) = next("a kind directive")?;
    if tokens.len() != 2 || tokens[0] != "kind" {
        return Err(syntax(line, "expected `kind birack` or `kind switch`"));
    }
    let kind = tokens[1].clone();
    let block_names: [&str; 2] = match kind.as_str() {
        "birack" => ["under", "over"],
        "switch" => ["rho1", "rho2"],
        other => {
            return Err(syntax(
                line,
                format!("unknown kind `{other}`, expected `birack` or `switch`"),
            ))
        }
    };

    let (line, tokens) = next("a size directive")?;
    if tokens.len() != 2 || tokens[0] != "size" {
        return Err(syntax(line, "expected `size N`"));
    }
    let size: usize = tokens[1]
        .parse()
        .map_err(|_| syntax(line, format!("size `{}` is not a number", tokens[1])))?;
    if size == 0 || size > Elem::MAX as usize {
        return Err(syntax(
            line,
            format!("size must be between 1 and {}", Elem::MAX),
        ));
    }

    let mut blocks: [Option<Vec<Vec<Elem>>>; 2] = [None, None];
    for _ in 0..2 {
        let (line, tokens) = next("a table block")?;
        if tokens.len() != 1 {
            return Err(syntax(
                line,
                format!("expected a block name, one of {block_names:?}"),
            ));
        }
        let slot = block_names
            .iter()
            .position(|&n| n == tokens[0])
            .ok_or_else(|| {
                syntax(
                    line,
                    format!("unknown block `{}`, expected one of {block_names:?}", tokens[0]),
                )
            })?;
        if blocks[slot].is_some() {
            return Err(syntax(line, format!("duplicate block `{}`", tokens[0])));
        }
        let mut rows = Vec::with_capacity(size);
        for _ in 0..size {
            let (line, tokens) = next("a table row")?;
            if tokens.len() != size {
                return Err(syntax(
                    line,
                    format!("row has {} entries, expected {size}", tokens.len()),
                ));
            }
            let mut row = Vec::with_capacity(size);
            for token in &tokens {
                let value: Elem = token
                    .parse()
                    .map_err(|_| syntax(line, format!("`{token}` is not a number")))?;
                if value < 1 || value as usize > size {
                    return Err(syntax(
                        line,
                        format!("entry {value} is outside 1..={size}"),
                    ));
                }
                row.push(value);
            }
            rows.push(row);
        }
        blocks[slot] = Some(rows);
    }
    if let Some((line, content)) = lines.next() {
        return Err(syntax(line, format!("unexpected trailing content `{content}`")));
    }

    let [first, second] = blocks;
    let first = first.unwrap();
    let second = second.unwrap();
    let algebra = match kind.as_str() {
        "birack" => LoadedAlgebra::Birack(FiniteBirack::from_rows(&first, &second)?),
        _ => LoadedAlgebra::Switch(FiniteSwitch::from_rho_rows(&first, &second)?),
    };
    Ok(algebra)
}

/// Renders an algebra in the format accepted by `load_algebra`.
pub fn format_algebra(algebra: &LoadedAlgebra) -> String {
    let mut out = String::new();
    let push_table = |out: &mut String, name: &str, rows: &[Vec<Elem>]| {
        out.push_str(name);
        out.push('\n');
        for row in rows {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    };
    match algebra {
        LoadedAlgebra::Birack(b) => {
            out.push_str("kind birack\n");
            out.push_str(&format!("size {}\n", b.size()));
            push_table(&mut out, "under", &b.under_rows());
            push_table(&mut out, "over", &b.over_rows());
        }
        LoadedAlgebra::Switch(s) => {
            out.push_str("kind switch\n");
            out.push_str(&format!("size {}\n", s.size()));
            push_table(&mut out, "rho1", &s.rho1_rows());
            push_table(&mut out, "rho2", &s.rho2_rows());
        }
    }
    out
}
