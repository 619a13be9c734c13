//! Finitely supported integer formal sums over exponent tuples.
//!
//! Houses the invariant polynomials: one formal variable for the quiver
//! polynomial, pairs for the vertex and edge polynomials. Only monomial
//! accumulation is supported; rendering is canonical so equal polynomials
//! produce byte-identical text.

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("exponent tuple has {got} entries, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("coefficient overflow at exponents {0:?}")]
    Overflow(Vec<u32>),
}

/// A formal sum of integer-coefficient monomials over a fixed, ordered
/// variable list. No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalPolynomial {
    variables: Vec<String>,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl FormalPolynomial {
    pub fn new(variables: &[&str]) -> Self {
        FormalPolynomial {
            variables: variables.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Exponent tuple to nonzero coefficient, keyed in ascending
    /// lexicographic order.
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Sum of all coefficients (the value at every variable set to 1).
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Accumulates `coeff` onto the monomial with the given exponents,
    /// dropping the term if the total reaches zero.
    pub fn add_monomial(&mut self, exponents: &[u32], coeff: i64) -> Result<(), PolyError> {
        if exponents.len() != self.variables.len() {
            return Err(PolyError::ArityMismatch {
                expected: self.variables.len(),
                got: exponents.len(),
            });
        }
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exponents.to_vec()).or_insert(0);
        *entry = entry
            .checked_add(coeff)
            .ok_or_else(|| PolyError::Overflow(exponents.to_vec()))?;
        if *entry == 0 {
            self.terms.remove(exponents);
        }
        Ok(())
    }

    /// Equality that rejects polynomials over different variable lists
    /// instead of silently answering false.
    pub fn try_equal(&self, other: &Self) -> Result<bool, PolyError> {
        if self.variables != other.variables {
            return Err(PolyError::VariableMismatch {
                left: self.variables.clone(),
                right: other.variables.clone(),
            });
        }
        Ok(self.terms == other.terms)
    }

    /// Evaluates the variable at `index` to 1, merging monomials that
    /// collapse together. The variable is removed from the list.
    pub fn set_var_to_one(&self, index: usize) -> Self {
        assert!(index < self.variables.len(), "variable index out of range");
        let mut variables = self.variables.clone();
        variables.remove(index);
        let mut out = FormalPolynomial {
            variables,
            terms: BTreeMap::new(),
        };
        for (exps, &coeff) in &self.terms {
            let mut reduced = exps.clone();
            reduced.remove(index);
            out.add_monomial(&reduced, coeff)
                .expect("arity is consistent by construction");
        }
        out
    }

    /// Canonical text: terms in descending lexicographic exponent order,
    /// unit coefficients omitted before a variable part, exponent 1 bare,
    /// exponent 0 omitting its variable, the zero polynomial as `0`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exps, &coeff)) in self.terms.iter().rev().enumerate() {
            let magnitude = coeff.unsigned_abs();
            if i == 0 {
                if coeff < 0 {
                    out.push('-');
                }
            } else if coeff < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut body = String::new();
            for (var, &e) in self.variables.iter().zip(exps.iter()) {
                match e {
                    0 => {}
                    1 => body.push_str(var),
                    _ => {
                        body.push_str(var);
                        body.push('^');
                        body.push_str(&e.to_string());
                    }
                }
            }
            if body.is_empty() {
                out.push_str(&magnitude.to_string());
            } else {
                if magnitude != 1 {
                    out.push_str(&magnitude.to_string());
                }
                out.push_str(&body);
            }
        }
        out
    }
}

impl fmt::Display for FormalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(vars: &[&str], monomials: &[(&[u32], i64)]) -> FormalPolynomial {
        let mut p = FormalPolynomial::new(vars);
        for (exps, coeff) in monomials {
            p.add_monomial(exps, *coeff).unwrap();
        }
        p
    }

    #[test]
    fn repeated_accumulation() {
        let mut p = FormalPolynomial::new(&["u"]);
        for _ in 0..6 {
            p.add_monomial(&[3], 1).unwrap();
        }
        assert_eq!(p.coefficient(&[3]), 6);
        assert_eq!(p.render(), "6u^3");
    }

    #[test]
    fn cancelling_terms_leave_zero() {
        let p = poly(&["u", "v"], &[(&[1, 0], 1), (&[1, 0], -1)]);
        assert!(p.is_zero());
        assert_eq!(p.render(), "0");
    }

    #[test]
    fn render_single_variable() {
        let p = poly(&["u"], &[(&[3], 6), (&[1], 3)]);
        assert_eq!(p.render(), "6u^3 + 3u");
    }

    #[test]
    fn render_two_variables_with_constant() {
        let p = poly(&["s", "t"], &[(&[0, 0], 3), (&[1, 1], 2)]);
        assert_eq!(p.render(), "2st + 3");
    }

    #[test]
    fn render_descending_lexicographic() {
        let p = poly(
            &["u", "v"],
            &[
                (&[2, 4], 1),
                (&[2, 2], 1),
                (&[2, 1], 3),
                (&[2, 0], 1),
                (&[1, 0], 3),
            ],
        );
        assert_eq!(p.render(), "u^2v^4 + u^2v^2 + 3u^2v + u^2 + 3u");
    }

    #[test]
    fn render_negative_coefficients() {
        let p = poly(&["u"], &[(&[2], -1), (&[0], 5), (&[1], -3)]);
        assert_eq!(p.render(), "-u^2 - 3u + 5");
    }

    #[test]
    fn arity_mismatch_rejected() {
        let mut p = FormalPolynomial::new(&["u", "v"]);
        assert_eq!(
            p.add_monomial(&[1], 1),
            Err(PolyError::ArityMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn try_equal_checks_variables() {
        let p = poly(&["u"], &[(&[1], 1)]);
        let q = poly(&["v"], &[(&[1], 1)]);
        assert!(matches!(
            p.try_equal(&q),
            Err(PolyError::VariableMismatch { .. })
        ));
        let r = poly(&["u"], &[(&[1], 1)]);
        assert_eq!(p.try_equal(&r), Ok(true));
    }

    #[test]
    fn build_order_does_not_matter() {
        let p = poly(&["s", "t"], &[(&[4, 1], 1), (&[0, 0], 3), (&[1, 1], 2)]);
        let q = poly(&["s", "t"], &[(&[1, 1], 2), (&[4, 1], 1), (&[0, 0], 3)]);
        assert_eq!(p, q);
    }

    #[test]
    fn set_var_to_one_merges() {
        let p = poly(&["u", "v"], &[(&[2, 4], 1), (&[2, 1], 3), (&[1, 0], 3)]);
        let collapsed = p.set_var_to_one(1);
        assert_eq!(collapsed.variables(), &["u".to_string()]);
        assert_eq!(collapsed.coefficient(&[2]), 4);
        assert_eq!(collapsed.coefficient(&[1]), 3);
    }

    #[test]
    fn overflow_detected() {
        let mut p = FormalPolynomial::new(&["u"]);
        p.add_monomial(&[1], i64::MAX).unwrap();
        assert_eq!(p.add_monomial(&[1], 1), Err(PolyError::Overflow(vec![1])));
    }

    /// Minimal parser for the canonical render format, used to confirm the
    /// rendering is lossless.
    fn parse_rendered(text: &str, variables: &[&str]) -> FormalPolynomial {
        let mut p = FormalPolynomial::new(variables);
        if text == "0" {
            return p;
        }
        let normalized = text.replace(" - ", " + -");
        for raw in normalized.split(" + ") {
            let (sign, term) = match raw.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1i64, raw),
            };
            let mut chars = term.chars().peekable();
            let mut digits = String::new();
            while let Some(c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(*c);
                    chars.next();
                } else {
                    break;
                }
            }
            let coeff: i64 = if digits.is_empty() {
                1
            } else {
                digits.parse().unwrap()
            };
            let rest: String = chars.collect();
            let mut exps = vec![0u32; variables.len()];
            let mut remaining = rest.as_str();
            while !remaining.is_empty() {
                let (idx, var) = variables
                    .iter()
                    .enumerate()
                    .find(|(_, v)| remaining.starts_with(**v))
                    .expect("unknown variable");
                remaining = &remaining[var.len()..];
                if let Some(stripped) = remaining.strip_prefix('^') {
                    let end = stripped
                        .find(|c: char| !c.is_ascii_digit())
                        .unwrap_or(stripped.len());
                    exps[idx] = stripped[..end].parse().unwrap();
                    remaining = &stripped[end..];
                } else {
                    exps[idx] = 1;
                }
            }
            p.add_monomial(&exps, sign * coeff).unwrap();
        }
        p
    }

    #[test]
    fn render_round_trips() {
        let cases = vec![
            poly(&["u"], &[(&[3], 6), (&[1], 3)]),
            poly(
                &["u", "v"],
                &[(&[2, 4], 1), (&[2, 2], 1), (&[2, 1], 3), (&[2, 0], 1), (&[1, 0], 3)],
            ),
            poly(
                &["s", "t"],
                &[
                    (&[4, 1], 1),
                    (&[2, 0], 1),
                    (&[1, 4], 1),
                    (&[1, 1], 2),
                    (&[0, 2], 1),
                    (&[0, 0], 3),
                ],
            ),
            poly(&["u"], &[(&[2], -7), (&[0], 1)]),
            FormalPolynomial::new(&["u"]),
        ];
        for p in cases {
            let vars: Vec<&str> = p.variables().iter().map(|s| s.as_str()).collect();
            let reparsed = parse_rendered(&p.render(), &vars);
            assert_eq!(p, reparsed, "round trip failed for {}", p.render());
        }
    }
}
