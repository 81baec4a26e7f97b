//! The eight elementary operators as linear maps on polynomials.
//!
//! Divided differences are evaluated monomial by monomial in closed form
//! (a telescoping sum), so no rational-function division ever happens.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::permutation::{Action, Permutation, ReducedWord};
use crate::polynomial::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OperatorKind {
    /// `s_i`: exchange `x_i` and `x_{i+1}`.
    S,
    /// `s̃_i`: exchange exponents `i`, `i+1` only when one of them is zero.
    STilde,
    /// `∂_i = (1 − s_i)/(x_i − x_{i+1})`.
    Partial,
    /// `π_i = ∂_i x_i`.
    Pi,
    /// `θ_i = x_{i+1} ∂_i = π_i − 1`.
    Theta,
    /// `∂̃_i = (1 − s̃_i)/(x_i − x_{i+1})`.
    PartialTilde,
    /// `π̃_i f = (x_i f − x_{i+1} s̃_i f)/(x_i − x_{i+1})`.
    PiTilde,
    /// `θ̃_i = x_{i+1} ∂̃_i`.
    ThetaTilde,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 8] = [
        OperatorKind::S,
        OperatorKind::STilde,
        OperatorKind::Partial,
        OperatorKind::Pi,
        OperatorKind::Theta,
        OperatorKind::PartialTilde,
        OperatorKind::PiTilde,
        OperatorKind::ThetaTilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::S => "s",
            OperatorKind::STilde => "s~",
            OperatorKind::Partial => "d",
            OperatorKind::Pi => "pi",
            OperatorKind::Theta => "th",
            OperatorKind::PartialTilde => "d~",
            OperatorKind::PiTilde => "pi~",
            OperatorKind::ThetaTilde => "th~",
        }
    }

    /// Whether the operators satisfy the braid relation
    /// `o_i o_{i+1} o_i = o_{i+1} o_i o_{i+1}`.
    pub fn satisfies_braid(self) -> bool {
        self != OperatorKind::PartialTilde
    }

    pub fn action(self) -> Action {
        match self {
            OperatorKind::S | OperatorKind::Partial | OperatorKind::Pi | OperatorKind::Theta => Action::Symmetric,
            _ => Action::Quasisymmetric,
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OperatorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::parse(1, format!("unknown operator {s:?}")))
    }
}

fn with_pair(a: &Composition, i: usize, x: u32, y: u32) -> Composition {
    let mut parts = a.parts().to_vec();
    parts[i - 1] = x;
    parts[i] = y;
    Composition::new(parts)
}

/// `(x^e y^f − x^f y^e)/(x − y)` at positions `i`, `i+1`, times `c`.
fn divided_difference(a: &Composition, i: usize, e: u32, f: u32, c: &BigInt, out: &mut Polynomial) {
    if e == f {
        return;
    }
    let (hi, lo, c) = if e > f { (e, f, c.clone()) } else { (f, e, -c) };
    for j in lo..hi {
        out.add_term(with_pair(a, i, j, hi + lo - 1 - j), c.clone());
    }
}

fn theta_tilde(m: &Composition, i: usize, a: u32, b: u32, c: &BigInt, out: &mut Polynomial) {
    if a > 0 && b == 0 {
        for j in 1..=a {
            out.add_term(with_pair(m, i, a - j, j), c.clone());
        }
    } else if a == 0 && b > 0 {
        for j in 0..b {
            out.add_term(with_pair(m, i, j, b - j), -c);
        }
    }
}

fn apply_monomial(kind: OperatorKind, i: usize, m: &Composition, c: &BigInt, out: &mut Polynomial) {
    let a = m.parts()[i - 1];
    let b = m.parts()[i];
    match kind {
        OperatorKind::S => out.add_term(with_pair(m, i, b, a), c.clone()),
        OperatorKind::STilde => {
            let image = if a == 0 || b == 0 { with_pair(m, i, b, a) } else { m.clone() };
            out.add_term(image, c.clone());
        }
        OperatorKind::Partial => divided_difference(m, i, a, b, c, out),
        OperatorKind::Pi => divided_difference(m, i, a + 1, b, c, out),
        OperatorKind::Theta => {
            divided_difference(m, i, a + 1, b, c, out);
            out.add_term(m.clone(), -c);
        }
        OperatorKind::PartialTilde => {
            if (a == 0) != (b == 0) {
                divided_difference(m, i, a, b, c, out);
            }
        }
        // isobaric form (x_i f − x_{i+1} s̃_i f)/(x_i − x_{i+1}), so that π̃_i = 1 + θ̃_i
        OperatorKind::PiTilde => {
            out.add_term(m.clone(), c.clone());
            theta_tilde(m, i, a, b, c, out);
        }
        OperatorKind::ThetaTilde => theta_tilde(m, i, a, b, c, out),
    }
}

/// Applies `kind_i` to `p`, for `1 ≤ i ≤ nvars − 1`.
pub fn apply(kind: OperatorKind, i: usize, p: &Polynomial) -> Result<Polynomial> {
    let n = p.nvars();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    Ok(p.map_linear(|m, c, out| apply_monomial(kind, i, m, c, out)))
}

/// `op_{i₁} ∘ ⋯ ∘ op_{i_k}` for an arbitrary index sequence (rightmost
/// applied first). The sequence need not be reduced.
pub fn apply_sequence(kind: OperatorKind, indices: &[usize], p: &Polynomial) -> Result<Polynomial> {
    let n = p.nvars();
    if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i >= n) {
        return Err(Error::IndexOutOfRange { index: bad, max: n.saturating_sub(1) });
    }
    let mut acc = p.clone();
    for &i in indices.iter().rev() {
        if acc.is_zero() {
            break;
        }
        acc = acc.map_linear(|m, c, out| apply_monomial(kind, i, m, c, out));
    }
    Ok(acc)
}

pub fn apply_word(kind: OperatorKind, word: &ReducedWord, p: &Polynomial) -> Result<Polynomial> {
    apply_sequence(kind, word.indices(), p)
}

/// `op_w` through the lexicographically least reduced word of `w`. Rejected
/// for `∂̃`, whose value depends on the word chosen.
pub fn apply_permutation(kind: OperatorKind, w: &Permutation, p: &Polynomial) -> Result<Polynomial> {
    if !kind.satisfies_braid() {
        return Err(Error::NoBraidRelations);
    }
    if w.size() != p.nvars() {
        return Err(Error::LengthMismatch { left: w.size(), right: p.nvars() });
    }
    apply_word(kind, &w.any_reduced_word(kind.action()), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::weak_compositions_up_to;

    fn x(parts: &[u32]) -> Polynomial {
        Polynomial::monomial(&Composition::new(parts.to_vec()))
    }

    fn sum(ms: &[&[u32]]) -> Polynomial {
        let n = ms[0].len();
        Polynomial::from_terms(n, ms.iter().map(|m| (Composition::new(m.to_vec()), 1))).unwrap()
    }

    #[test]
    fn pi_tilde_cases() {
        assert_eq!(apply(OperatorKind::PiTilde, 1, &x(&[2, 0])).unwrap(), sum(&[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(apply(OperatorKind::PiTilde, 1, &x(&[2, 1, 0])).unwrap(), x(&[2, 1, 0]));
        assert_eq!(apply(OperatorKind::PiTilde, 1, &x(&[0, 0])).unwrap(), Polynomial::one(2));
        assert!(apply(OperatorKind::PiTilde, 2, &x(&[0, 0, 1])).unwrap().is_zero());
        assert_eq!(
            apply(OperatorKind::PiTilde, 2, &x(&[0, 0, 4])).unwrap(),
            sum(&[&[0, 3, 1], &[0, 2, 2], &[0, 1, 3]]).negate()
        );
    }

    #[test]
    fn pi_tilde_matches_isobaric_quotient() {
        // (x_i f − x_{i+1} s̃_i f) = (x_i − x_{i+1}) π̃_i f
        for a in weak_compositions_up_to(5, 3) {
            let p = Polynomial::monomial(&a);
            for i in 1..3 {
                let mut e = vec![0; 3];
                e[i - 1] = 1;
                let mut f = vec![0; 3];
                f[i] = 1;
                let lhs = x(&e)
                    .multiply(&p)
                    .unwrap()
                    .sub(&x(&f).multiply(&apply(OperatorKind::STilde, i, &p).unwrap()).unwrap())
                    .unwrap();
                let rhs = x(&e).sub(&x(&f)).unwrap().multiply(&apply(OperatorKind::PiTilde, i, &p).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{a} at {i}");
            }
        }
    }

    #[test]
    fn theta_tilde_cases() {
        assert_eq!(apply(OperatorKind::ThetaTilde, 1, &x(&[2, 0])).unwrap(), sum(&[&[1, 1], &[0, 2]]));
        assert!(apply(OperatorKind::ThetaTilde, 1, &x(&[1, 1])).unwrap().is_zero());
        assert!(apply(OperatorKind::ThetaTilde, 1, &x(&[0, 0])).unwrap().is_zero());
        assert_eq!(
            apply(OperatorKind::ThetaTilde, 1, &x(&[0, 2])).unwrap(),
            sum(&[&[0, 2], &[1, 1]]).negate()
        );
    }

    #[test]
    fn theta_tilde_is_x_next_times_partial_tilde() {
        for a in weak_compositions_up_to(5, 3) {
            let p = Polynomial::monomial(&a);
            for i in 1..3 {
                let lhs = apply(OperatorKind::ThetaTilde, i, &p).unwrap();
                let mut shift = Composition::zero(3).into_parts();
                shift[i] = 1;
                let rhs = apply(OperatorKind::PartialTilde, i, &p)
                    .unwrap()
                    .multiply(&Polynomial::monomial(&Composition::new(shift)))
                    .unwrap();
                assert_eq!(lhs, rhs, "{a} at {i}");
            }
        }
    }

    #[test]
    fn partial_telescoping() {
        assert_eq!(apply(OperatorKind::Partial, 1, &x(&[1, 0])).unwrap(), Polynomial::one(2));
        assert_eq!(apply(OperatorKind::Partial, 1, &x(&[0, 1])).unwrap(), Polynomial::one(2).negate());
        assert_eq!(apply(OperatorKind::Pi, 1, &x(&[1, 0])).unwrap(), sum(&[&[1, 0], &[0, 1]]));
        assert!(apply(OperatorKind::Partial, 1, &x(&[2, 2])).unwrap().is_zero());
    }

    #[test]
    fn partial_inverts_multiplication_by_difference() {
        for a in weak_compositions_up_to(5, 3) {
            let p = Polynomial::monomial(&a);
            for i in 1..3 {
                let mut e = vec![0; 3];
                e[i - 1] = 1;
                let mut f = vec![0; 3];
                f[i] = 1;
                let diff = x(&e).sub(&x(&f)).unwrap();
                let lhs = diff.multiply(&apply(OperatorKind::Partial, i, &p).unwrap()).unwrap();
                let rhs = p.sub(&apply(OperatorKind::S, i, &p).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn word_examples() {
        let p = x(&[3, 1, 1, 0, 0]);
        assert_eq!(apply_sequence(OperatorKind::PiTilde, &[], &p).unwrap(), p);
        let atom = apply_sequence(OperatorKind::ThetaTilde, &[2, 1, 3, 2, 5, 4, 3], &x(&[3, 2, 1, 0, 0, 0])).unwrap();
        assert_eq!(
            atom,
            sum(&[
                &[2, 0, 1, 2, 0, 1],
                &[1, 1, 1, 2, 0, 1],
                &[0, 2, 1, 2, 0, 1],
                &[1, 0, 2, 2, 0, 1],
                &[0, 1, 2, 2, 0, 1],
                &[0, 0, 3, 2, 0, 1],
            ])
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(apply(OperatorKind::Pi, 2, &x(&[1, 0])), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(apply(OperatorKind::Pi, 0, &x(&[1, 0])), Err(Error::IndexOutOfRange { .. })));
        assert!(apply_sequence(OperatorKind::Pi, &[1, 5], &x(&[0, 1])).is_err());
        let w0 = Permutation::long_element(3);
        assert_eq!(
            apply_permutation(OperatorKind::PartialTilde, &w0, &x(&[1, 0, 0])),
            Err(Error::NoBraidRelations)
        );
        assert!(apply_permutation(OperatorKind::PiTilde, &w0, &x(&[1, 0, 0])).is_ok());
    }

    #[test]
    fn zero_maps_to_zero() {
        for kind in OperatorKind::ALL {
            assert!(apply(kind, 1, &Polynomial::zero(3)).unwrap().is_zero());
        }
    }

    #[test]
    fn names_round_trip() {
        for kind in OperatorKind::ALL {
            assert_eq!(kind.name().parse::<OperatorKind>().unwrap(), kind);
        }
    }
}
