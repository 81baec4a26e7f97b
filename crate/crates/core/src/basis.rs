//! The seven basis families, each constructed by every available route.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::composition::{between, refines_parts, Composition};
use crate::error::{Error, Result};
use crate::operator::{apply_word, OperatorKind};
use crate::permutation::{min_word_flat, min_word_sort, Action, Permutation};
use crate::polynomial::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum BasisFamily {
    Key,
    Atom,
    Schubert,
    Schur,
    Slide,
    Fatom,
    Gessel,
}

impl BasisFamily {
    pub const ALL: [BasisFamily; 7] = [
        BasisFamily::Key,
        BasisFamily::Atom,
        BasisFamily::Schubert,
        BasisFamily::Schur,
        BasisFamily::Slide,
        BasisFamily::Fatom,
        BasisFamily::Gessel,
    ];

    /// Lower-case name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            BasisFamily::Key => "key",
            BasisFamily::Atom => "atom",
            BasisFamily::Schubert => "schubert",
            BasisFamily::Schur => "schur",
            BasisFamily::Slide => "slide",
            BasisFamily::Fatom => "fatom",
            BasisFamily::Gessel => "gessel",
        }
    }

    /// Prefix in element literals such as `F[0,2,1]`.
    pub fn symbol(self) -> &'static str {
        match self {
            BasisFamily::Key => "K",
            BasisFamily::Atom => "At",
            BasisFamily::Schubert => "S",
            BasisFamily::Schur => "Sch",
            BasisFamily::Slide => "F",
            BasisFamily::Fatom => "A",
            BasisFamily::Gessel => "Fq",
        }
    }

    pub fn from_symbol(s: &str) -> Option<BasisFamily> {
        BasisFamily::ALL.into_iter().find(|f| f.symbol() == s)
    }
}

impl fmt::Display for BasisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::parse(1, format!("unknown basis family {s:?}")))
    }
}

/// How a slide polynomial or fundamental atom is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Operator word applied to `x^{flat(α)}`.
    Operator,
    /// Direct monomial enumeration.
    Combinatorial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GesselMethod {
    /// Sum over weakly increasing index chains.
    Combinatorial,
    /// `π̃_{w₀} x^α`.
    Operator,
    /// `Σ_{σ ∈ S_n} θ̃_σ x^α`.
    ThetaSum,
}

/// Key polynomial `κ_α = π_{w_α⁻¹} x^{sort(α)}`.
pub fn key(a: &Composition) -> Polynomial {
    apply_word(OperatorKind::Pi, &min_word_sort(a), &Polynomial::monomial(&a.sort_desc()))
        .expect("word indices lie in 1..n")
}

/// Demazure atom `𝒜_α = θ_{w_α⁻¹} x^{sort(α)}`.
pub fn atom(a: &Composition) -> Polynomial {
    apply_word(OperatorKind::Theta, &min_word_sort(a), &Polynomial::monomial(&a.sort_desc()))
        .expect("word indices lie in 1..n")
}

/// Schubert polynomial `𝔖_w = ∂_{w⁻¹w₀}(x₁^{n−1} x₂^{n−2} ⋯ x_{n−1})`.
pub fn schubert(w: &Permutation) -> Polynomial {
    let n = w.size();
    let staircase = Composition::new((0..n).map(|i| (n - 1 - i) as u32).collect());
    let u = w.inverse().multiply(&Permutation::long_element(n)).expect("same size");
    apply_word(OperatorKind::Partial, &u.any_reduced_word(Action::Symmetric), &Polynomial::monomial(&staircase))
        .expect("word indices lie in 1..n")
}

/// Schur polynomial `s_λ = π_{w₀} x^λ` in `λ.len()` variables.
pub fn schur(lambda: &Composition) -> Result<Polynomial> {
    if !lambda.is_weakly_decreasing() {
        return Err(Error::NotPartition(lambda.to_string()));
    }
    let w0 = Permutation::long_element(lambda.len());
    apply_word(OperatorKind::Pi, &w0.any_reduced_word(Action::Symmetric), &Polynomial::monomial(lambda))
}

/// Fundamental slide polynomial `𝔉_α`.
pub fn slide(a: &Composition, method: Method) -> Polynomial {
    match method {
        Method::Operator => apply_word(OperatorKind::PiTilde, &min_word_flat(a), &Polynomial::monomial(&a.flat()))
            .expect("word indices lie in 1..n"),
        Method::Combinatorial => {
            let strong = a.strong_parts();
            let top = vec![a.weight(); a.len()];
            let support = between(&a.csum(), &top)
                .into_iter()
                .filter(|b| refines_parts(&b.strong_parts(), &strong));
            monomial_sum(a.len(), support)
        }
    }
}

/// Fundamental atom `Ã_α`.
pub fn fatom(a: &Composition, method: Method) -> Polynomial {
    match method {
        Method::Operator => apply_word(OperatorKind::ThetaTilde, &min_word_flat(a), &Polynomial::monomial(&a.flat()))
            .expect("word indices lie in 1..n"),
        Method::Combinatorial => monomial_sum(a.len(), a.atom_interval()),
    }
}

/// Gessel's fundamental quasisymmetric polynomial `F_α(x₁, …, x_n)` for a
/// strong composition `α` (trailing zeros allowed) with at most `n` parts.
pub fn gessel(a: &Composition, n: usize, method: GesselMethod) -> Result<Polynomial> {
    if !a.is_strong() {
        return Err(Error::NotStrong(a.to_string()));
    }
    let padded = Composition::with_len(a.parts().to_vec(), n)?;
    match method {
        GesselMethod::Combinatorial => gessel_chains(&padded),
        GesselMethod::Operator => {
            let w0 = Permutation::long_element(n);
            apply_word(OperatorKind::PiTilde, &w0.any_reduced_word(Action::Quasisymmetric), &Polynomial::monomial(&padded))
        }
        GesselMethod::ThetaSum => {
            let x = Polynomial::monomial(&padded);
            let mut out = Polynomial::zero(n);
            for sigma in Permutation::all(n) {
                let term = apply_word(OperatorKind::ThetaTilde, &sigma.any_reduced_word(Action::Quasisymmetric), &x)?;
                out.add_scaled(&term, &BigInt::one())?;
            }
            Ok(out)
        }
    }
}

/// Sums `x_{i₁} ⋯ x_{i_k}` over `1 ≤ i₁ ≤ ⋯ ≤ i_k ≤ n` with a strict step
/// after every position in `set(α)`.
fn gessel_chains(a: &Composition) -> Result<Polynomial> {
    let n = a.len();
    let k = a.weight() as usize;
    let strict = a.set_of()?;
    let mut out = Polynomial::zero(n);
    let mut exps = vec![0u32; n];
    fn go(
        pos: usize,
        min_var: usize,
        k: usize,
        n: usize,
        strict: &std::collections::BTreeSet<u32>,
        exps: &mut Vec<u32>,
        out: &mut Polynomial,
    ) {
        if pos == k {
            out.add_term(Composition::new(exps.clone()), BigInt::one());
            return;
        }
        for v in min_var..n {
            exps[v] += 1;
            let next = if strict.contains(&((pos + 1) as u32)) { v + 1 } else { v };
            go(pos + 1, next, k, n, strict, exps, out);
            exps[v] -= 1;
        }
    }
    go(0, 0, k, n, &strict, &mut exps, &mut out);
    Ok(out)
}

fn monomial_sum(n: usize, support: impl IntoIterator<Item = Composition>) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for b in support {
        p.add_term(b, BigInt::one());
    }
    p
}
