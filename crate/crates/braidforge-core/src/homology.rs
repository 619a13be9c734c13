//! Chains, boundaries, and degree-two cocycles of a finite birack.
//!
//! The boundary of a k-tuple alternates, for each position j, between
//! dropping the j-th entry and acting on the remaining entries by it
//! (earlier entries from under, later entries from over). Two-cocycles are
//! the pair functions vanishing on all boundaries of triples; over a prime
//! modulus the space of cocycles and the span of coboundaries are computed
//! by elimination, and their dimensions give the degree-two cohomology.

use crate::algebra::{Elem, FiniteBirack};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("entry {value} is outside 0..{modulus}")]
    Range { value: u32, modulus: u32 },
    #[error("modulus {0} is not prime")]
    NonPrime(u32),
    #[error("modulus {left} does not match modulus {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("cochain covers a set of size {left}, expected size {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("{0}")]
    Shape(String),
}

/// A function on ordered pairs with values in Z/m, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain2 {
    modulus: u32,
    size: usize,
    values: Vec<u32>,
}

impl Cochain2 {
    pub fn zero(size: usize, modulus: u32) -> Result<Self, HomologyError> {
        if modulus < 2 {
            return Err(HomologyError::BadModulus(modulus));
        }
        if size == 0 {
            return Err(HomologyError::Shape("size must be positive".to_string()));
        }
        Ok(Cochain2 {
            modulus,
            size,
            values: vec![0; size * size],
        })
    }

    pub fn from_rows(rows: &[Vec<u32>], modulus: u32) -> Result<Self, HomologyError> {
        let mut cochain = Cochain2::zero(rows.len(), modulus)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rows.len() {
                return Err(HomologyError::Shape(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    rows.len()
                )));
            }
            for (j, &value) in row.iter().enumerate() {
                if value >= modulus {
                    return Err(HomologyError::Range { value, modulus });
                }
                cochain.values[i * rows.len() + j] = value;
            }
        }
        Ok(cochain)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    #[inline]
    pub fn value(&self, x: Elem, y: Elem) -> u32 {
        self.values[(x as usize - 1) * self.size + (y as usize - 1)]
    }

    /// A copy with one entry replaced (reduced mod the modulus).
    pub fn with_entry(&self, x: Elem, y: Elem, value: u32) -> Self {
        let mut out = self.clone();
        out.values[(x as usize - 1) * self.size + (y as usize - 1)] = value % self.modulus;
        out
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.values
            .chunks(self.size)
            .map(|row| row.to_vec())
            .collect()
    }

    fn flat(&self) -> &[u32] {
        &self.values
    }

    fn from_flat(size: usize, modulus: u32, values: Vec<u32>) -> Self {
        debug_assert_eq!(values.len(), size * size);
        debug_assert!(values.iter().all(|&v| v < modulus));
        Cochain2 {
            modulus,
            size,
            values,
        }
    }
}

/// A finitely supported Z/m combination of tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalChain {
    modulus: u32,
    terms: BTreeMap<Vec<Elem>, u32>,
}

impl FormalChain {
    pub fn zero(modulus: u32) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        FormalChain {
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn add_term(&mut self, tuple: &[Elem], coeff: i64) {
        let reduced = coeff.rem_euclid(self.modulus as i64) as u32;
        if reduced == 0 {
            return;
        }
        let entry = self.terms.entry(tuple.to_vec()).or_insert(0);
        *entry = (*entry + reduced) % self.modulus;
        if *entry == 0 {
            self.terms.remove(tuple);
        }
    }

    pub fn coefficient(&self, tuple: &[Elem]) -> u32 {
        self.terms.get(tuple).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Elem>, u32> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for FormalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (tuple, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let parts: Vec<String> = tuple.iter().map(|v| v.to_string()).collect();
            write!(f, "{coeff}*({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// The boundary of a single tuple: for each position j (1-based), the tuple
/// with entry j dropped minus the tuple with entry j dropped and every
/// other entry acted on by it (earlier entries from under, later from
/// over), the pair weighted by (-1)^j.
pub fn boundary(birack: &FiniteBirack, tuple: &[Elem], modulus: u32) -> FormalChain {
    let mut chain = FormalChain::zero(modulus);
    let k = tuple.len();
    for j in 1..=k {
        let sign: i64 = if j % 2 == 1 { -1 } else { 1 };
        let pivot = tuple[j - 1];
        let mut omitted = Vec::with_capacity(k - 1);
        let mut acted = Vec::with_capacity(k - 1);
        for (i, &entry) in tuple.iter().enumerate() {
            match (i + 1).cmp(&j) {
                std::cmp::Ordering::Less => {
                    omitted.push(entry);
                    acted.push(birack.under(entry, pivot));
                }
                std::cmp::Ordering::Equal => {}
                std::cmp::Ordering::Greater => {
                    omitted.push(entry);
                    acted.push(birack.over(entry, pivot));
                }
            }
        }
        chain.add_term(&omitted, sign);
        chain.add_term(&acted, -sign);
    }
    chain
}

/// The boundary extended linearly over a chain.
pub fn boundary_chain(birack: &FiniteBirack, chain: &FormalChain) -> FormalChain {
    let mut out = FormalChain::zero(chain.modulus());
    for (tuple, &coeff) in chain.terms() {
        let piece = boundary(birack, tuple, chain.modulus());
        for (t, &c) in piece.terms() {
            out.add_term(t, (coeff as i64) * (c as i64));
        }
    }
    out
}

/// First triple on which the two-cocycle condition fails.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("cocycle condition fails at x={x}, y={y}, z={z} with defect {defect} mod {modulus}")]
pub struct CocycleViolation {
    pub x: Elem,
    pub y: Elem,
    pub z: Elem,
    pub defect: u32,
    pub modulus: u32,
}

/// Checks the two-cocycle condition (vanishing on boundaries of all
/// triples). The cochain must cover the birack's carrier.
pub fn is_two_cocycle(birack: &FiniteBirack, phi: &Cochain2) -> Result<(), CocycleViolation> {
    assert_eq!(
        phi.size(),
        birack.size(),
        "cochain and birack sizes must match"
    );
    let size = birack.size();
    let m = phi.modulus() as i64;
    let value = |x: Elem, y: Elem| phi.value(x, y) as i64;
    for x in 1..=size as Elem {
        for y in 1..=size as Elem {
            for z in 1..=size as Elem {
                let defect = (-value(y, z) + value(birack.over(y, x), birack.over(z, x))
                    + value(x, z)
                    - value(birack.under(x, y), birack.over(z, y))
                    - value(x, y)
                    + value(birack.under(x, z), birack.under(y, z)))
                .rem_euclid(m) as u32;
                if defect != 0 {
                    return Err(CocycleViolation {
                        x,
                        y,
                        z,
                        defect,
                        modulus: phi.modulus(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// The coboundary of a point function: (x, y) maps to
/// f(x) - f(under(x, y)) - f(y) + f(over(y, x)).
pub fn coboundary1(
    birack: &FiniteBirack,
    f: &[u32],
    modulus: u32,
) -> Result<Cochain2, HomologyError> {
    if modulus < 2 {
        return Err(HomologyError::BadModulus(modulus));
    }
    if f.len() != birack.size() {
        return Err(HomologyError::Shape(format!(
            "point function has {} values, expected {}",
            f.len(),
            birack.size()
        )));
    }
    for &value in f {
        if value >= modulus {
            return Err(HomologyError::Range { value, modulus });
        }
    }
    let size = birack.size();
    let m = modulus as i64;
    let fv = |x: Elem| f[x as usize - 1] as i64;
    let mut values = Vec::with_capacity(size * size);
    for x in 1..=size as Elem {
        for y in 1..=size as Elem {
            let v = (fv(x) - fv(birack.under(x, y)) - fv(y) + fv(birack.over(y, x)))
                .rem_euclid(m) as u32;
            values.push(v);
        }
    }
    Ok(Cochain2::from_flat(size, modulus, values))
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Reduces in place to reduced row echelon form over GF(p), returning the
/// pivot columns; zero rows are trimmed off.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = mod_inv(rows[rank][col], p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_multiple_of(p) {
                let factor = row[col];
                for (entry, &pv) in row.iter_mut().zip(&pivot) {
                    let sub = factor * pv % p;
                    *entry = (*entry + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

fn kernel_basis(mut rows: Vec<Vec<u64>>, p: u64, ncols: usize) -> Vec<Vec<u32>> {
    let pivots = rref(&mut rows, p);
    let mut basis = Vec::new();
    for free_col in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut vector = vec![0u32; ncols];
        vector[free_col] = 1;
        for (row, &pivot_col) in pivots.iter().enumerate() {
            vector[pivot_col] = ((p - rows[row][free_col] % p) % p) as u32;
        }
        basis.push(vector);
    }
    basis
}

/// Bases for the degree-two cocycles and coboundaries over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyBasis {
    pub modulus: u32,
    pub z2: Vec<Cochain2>,
    pub b2: Vec<Cochain2>,
    pub h2_dim: usize,
}

/// Computes a basis of the two-cocycles, a basis of the coboundaries, and
/// the dimension of their quotient over GF(p).
pub fn two_cocycle_basis(
    birack: &FiniteBirack,
    modulus: u32,
) -> Result<CohomologyBasis, HomologyError> {
    if modulus < 2 {
        return Err(HomologyError::BadModulus(modulus));
    }
    if !is_prime(modulus) {
        return Err(HomologyError::NonPrime(modulus));
    }
    let size = birack.size();
    let p = modulus as u64;
    let ncols = size * size;
    let slot = |x: Elem, y: Elem| (x as usize - 1) * size + (y as usize - 1);

    let mut equations = Vec::with_capacity(size * size * size);
    for x in 1..=size as Elem {
        for y in 1..=size as Elem {
            for z in 1..=size as Elem {
                let mut row = vec![0i64; ncols];
                row[slot(y, z)] -= 1;
                row[slot(birack.over(y, x), birack.over(z, x))] += 1;
                row[slot(x, z)] += 1;
                row[slot(birack.under(x, y), birack.over(z, y))] -= 1;
                row[slot(x, y)] -= 1;
                row[slot(birack.under(x, z), birack.under(y, z))] += 1;
                equations.push(
                    row.into_iter()
                        .map(|v| v.rem_euclid(p as i64) as u64)
                        .collect::<Vec<u64>>(),
                );
            }
        }
    }
    let z2: Vec<Cochain2> = kernel_basis(equations, p, ncols)
        .into_iter()
        .map(|values| Cochain2::from_flat(size, modulus, values))
        .collect();

    let mut coboundary_rows = Vec::with_capacity(size);
    for e in 1..=size as Elem {
        let mut indicator = vec![0u32; size];
        indicator[e as usize - 1] = 1;
        let cochain = coboundary1(birack, &indicator, modulus)?;
        coboundary_rows.push(cochain.flat().iter().map(|&v| v as u64).collect::<Vec<u64>>());
    }
    rref(&mut coboundary_rows, p);
    let b2: Vec<Cochain2> = coboundary_rows
        .into_iter()
        .map(|row| {
            Cochain2::from_flat(size, modulus, row.into_iter().map(|v| v as u32).collect())
        })
        .collect();

    debug_assert!(b2
        .iter()
        .all(|cochain| is_two_cocycle(birack, cochain).is_ok()));
    let h2_dim = z2.len() - b2.len();
    Ok(CohomologyBasis {
        modulus,
        z2,
        b2,
        h2_dim,
    })
}

/// Solves for coefficients expressing the target as a combination of the
/// basis cochains over their (prime) modulus, if possible.
pub fn in_span(
    basis: &[Cochain2],
    target: &Cochain2,
) -> Result<Option<Vec<u32>>, HomologyError> {
    let modulus = target.modulus();
    if !is_prime(modulus) {
        return Err(HomologyError::NonPrime(modulus));
    }
    for cochain in basis {
        if cochain.modulus() != modulus {
            return Err(HomologyError::ModulusMismatch {
                left: cochain.modulus(),
                right: modulus,
            });
        }
        if cochain.size() != target.size() {
            return Err(HomologyError::SizeMismatch {
                left: cochain.size(),
                right: target.size(),
            });
        }
    }
    if basis.is_empty() {
        return Ok(if target.flat().iter().all(|&v| v == 0) {
            Some(Vec::new())
        } else {
            None
        });
    }
    let p = modulus as u64;
    let ncols = basis.len();
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(target.flat().len());
    for (index, &t) in target.flat().iter().enumerate() {
        let mut row: Vec<u64> = basis.iter().map(|b| b.flat()[index] as u64).collect();
        row.push(t as u64);
        rows.push(row);
    }
    let pivots = rref(&mut rows, p);
    if pivots.contains(&ncols) {
        return Ok(None);
    }
    let mut coefficients = vec![0u32; ncols];
    for (row, &pivot_col) in pivots.iter().enumerate() {
        coefficients[pivot_col] = rows[row][ncols] as u32;
    }
    Ok(Some(coefficients))
}

/// Parses the plain text cochain format:
///
/// ```text
/// modulus 5
/// 0 1 4
/// 3 0 2
/// 1 2 0
/// ```
///
/// The table must be square; `#` starts a comment and blank lines are
/// ignored.
pub fn load_cochain2(text: &str) -> Result<Cochain2, HomologyError> {
    let mut meaningful = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, content)| !content.is_empty());

    let (line, header) = meaningful.next().ok_or_else(|| HomologyError::Syntax {
        line: 1,
        message: "expected `modulus P`".to_string(),
    })?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 || tokens[0] != "modulus" {
        return Err(HomologyError::Syntax {
            line,
            message: "expected `modulus P`".to_string(),
        });
    }
    let modulus: u32 = tokens[1].parse().map_err(|_| HomologyError::Syntax {
        line,
        message: format!("modulus `{}` is not a number", tokens[1]),
    })?;
    if modulus < 2 {
        return Err(HomologyError::Syntax {
            line,
            message: format!("modulus must be at least 2, got {modulus}"),
        });
    }

    let mut rows: Vec<(usize, Vec<u32>)> = Vec::new();
    for (line, content) in meaningful {
        let mut row = Vec::new();
        for token in content.split_whitespace() {
            let value: u32 = token.parse().map_err(|_| HomologyError::Syntax {
                line,
                message: format!("`{token}` is not a number"),
            })?;
            if value >= modulus {
                return Err(HomologyError::Syntax {
                    line,
                    message: format!("entry {value} is outside 0..{modulus}"),
                });
            }
            row.push(value);
        }
        rows.push((line, row));
    }
    if rows.is_empty() {
        return Err(HomologyError::Syntax {
            line: line + 1,
            message: "expected at least one table row".to_string(),
        });
    }
    let size = rows.len();
    for (line, row) in &rows {
        if row.len() != size {
            return Err(HomologyError::Syntax {
                line: *line,
                message: format!("row has {} entries, expected {size}", row.len()),
            });
        }
    }
    let tables: Vec<Vec<u32>> = rows.into_iter().map(|(_, row)| row).collect();
    Cochain2::from_rows(&tables, modulus)
}

/// Renders a cochain in the format accepted by `load_cochain2`.
pub fn format_cochain2(cochain: &Cochain2) -> String {
    let mut out = format!("modulus {}\n", cochain.modulus());
    for row in cochain.rows() {
        let parts: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}
