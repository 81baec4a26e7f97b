//! Symmetric-group elements, reduced words, and the two actions of `S_n` on
//! compositions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{parse_list, Composition};
use crate::error::{Error, Result};

/// Which action a simple transposition has on a composition: the classical
/// swap `s_i`, or Hivert's `s̃_i` which swaps only when one entry is zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Action {
    Symmetric,
    Quasisymmetric,
}

/// A permutation of `1..=n` in one-line notation.
///
/// Products compose as functions: `(u * v)(i) = u(v(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format_one_line(&one_line)));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// `w₀ = [n, n−1, …, 1]`.
    pub fn long_element(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Self {
        let mut w = Self::identity(n);
        w.one_line.swap(i - 1, i);
        w
    }

    /// The permutation `s_{i₁} ⋯ s_{i_k}`.
    pub fn from_word(indices: &[usize], n: usize) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in indices.iter().rev() {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
            }
            // s_i ∘ w swaps the values i and i+1.
            w.swap_values(i);
        }
        Ok(w)
    }

    /// Every permutation of `1..=n`, in lexicographic order of one-line
    /// notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Self::identity(n).one_line;
        loop {
            out.push(Permutation { one_line: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// `self * other`, i.e. `other` first.
    pub fn multiply(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::LengthMismatch { left: self.size(), right: other.size() });
        }
        Ok(Permutation { one_line: other.one_line.iter().map(|&v| self.apply(v)).collect() })
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// `s_i` is a left descent when `i+1` appears before `i` in one-line
    /// notation.
    fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    fn swap_values(&mut self, i: usize) {
        for v in self.one_line.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }

    /// The lexicographically least reduced word.
    pub fn any_reduced_word(&self, action: Action) -> ReducedWord {
        let mut w = self.clone();
        let mut indices = Vec::with_capacity(self.length());
        let n = self.size();
        while let Some(i) = (1..n).find(|&i| w.is_left_descent(i)) {
            indices.push(i);
            w.swap_values(i);
        }
        ReducedWord { indices, action }
    }

    /// Acts on a composition. Under the symmetric action the part in
    /// position `i` moves to position `w(i)`; the quasisymmetric action
    /// applies `s̃` along a reduced word.
    pub fn act(&self, a: &Composition, action: Action) -> Result<Composition> {
        if self.size() != a.len() {
            return Err(Error::LengthMismatch { left: self.size(), right: a.len() });
        }
        match action {
            Action::Symmetric => {
                let mut out = vec![0; a.len()];
                for (i, &p) in a.parts().iter().enumerate() {
                    out[self.one_line[i] - 1] = p;
                }
                Ok(Composition::new(out))
            }
            Action::Quasisymmetric => Ok(act_word(self.any_reduced_word(action).indices(), a, action)),
        }
    }
}

/// Applies `s_{i₁} ⋯ s_{i_k}` (rightmost first) to `a`.
pub fn act_word(indices: &[usize], a: &Composition, action: Action) -> Composition {
    indices.iter().rev().fold(a.clone(), |acc, &i| match action {
        Action::Symmetric => acc.swapped(i),
        Action::Quasisymmetric => acc.quasi_swapped(i),
    })
}

/// A reduced word `(i₁, …, i_k)`, read as the operator product
/// `op_{i₁} ∘ ⋯ ∘ op_{i_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedWord {
    indices: Vec<usize>,
    action: Action,
}

impl ReducedWord {
    /// Validates that `indices` is a reduced word.
    pub fn new(indices: Vec<usize>, action: Action) -> Result<Self> {
        let n = indices.iter().copied().max().unwrap_or(0) + 1;
        let w = Permutation::from_word(&indices, n)?;
        if w.length() != indices.len() {
            return Err(Error::NotReduced(format_one_line(&indices)));
        }
        Ok(ReducedWord { indices, action })
    }

    pub fn empty(action: Action) -> Self {
        ReducedWord { indices: Vec::new(), action }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn action(&self) -> Action {
        self.action
    }

    /// The permutation `s_{i₁} ⋯ s_{i_k}` in `S_n`.
    pub fn permutation(&self, n: usize) -> Result<Permutation> {
        Permutation::from_word(&self.indices, n)
    }

    /// The word for the inverse permutation.
    pub fn reversed(&self) -> ReducedWord {
        let mut indices = self.indices.clone();
        indices.reverse();
        ReducedWord { indices, action: self.action }
    }

    /// Acts on `a` with this word's own action.
    pub fn act(&self, a: &Composition) -> Composition {
        act_word(&self.indices, a, self.action)
    }
}

/// A reduced word for `w_α⁻¹`, where `w_α` is the minimal-length
/// permutation with `w_α(α) = sort(α)`. Equal parts are never exchanged.
///
/// The word is the sequence of adjacent swaps that bubble-sorts `α` into
/// weakly decreasing order, recorded in the order they happen.
pub fn min_word_sort(a: &Composition) -> ReducedWord {
    let mut parts = a.parts().to_vec();
    let mut indices = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..parts.len().saturating_sub(1) {
            if parts[i] < parts[i + 1] {
                parts.swap(i, i + 1);
                indices.push(i + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    ReducedWord { indices, action: Action::Symmetric }
}

/// A reduced word for `w_α⁻¹`, where `w_α` is the minimal-length
/// permutation with `w̃_α(α) = flat(α)`.
///
/// Starting from `flat(α)`, the nonzero parts are moved right into place,
/// rightmost first; the word lists those moves with the last move first.
pub fn min_word_flat(a: &Composition) -> ReducedWord {
    let targets: Vec<usize> = a
        .parts()
        .iter()
        .enumerate()
        .filter(|(_, &p)| p != 0)
        .map(|(i, _)| i + 1)
        .collect();
    let mut moves = Vec::new();
    for (k, &t) in targets.iter().enumerate().rev() {
        moves.extend(k + 1..t);
    }
    moves.reverse();
    ReducedWord { indices: moves, action: Action::Quasisymmetric }
}

/// Number of (zero, nonzero) pairs in left-to-right order: the length of
/// the shortest quasisymmetric word taking `flat(α)` to `α`.
pub fn flat_inversions(a: &Composition) -> usize {
    let mut zeros = 0;
    let mut count = 0;
    for &p in a.parts() {
        if p == 0 {
            zeros += 1;
        } else {
            count += zeros;
        }
    }
    count
}

fn format_one_line(v: &[usize]) -> String {
    format!("[{}]", v.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_one_line(&self.one_line))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_one_line(&self.indices))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line notation, e.g. `[2,3,1]` or `2,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let values = parse_list(s, 0)?;
        Permutation::new(values.into_iter().map(|v| v as usize).collect())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.one_line
    }
}
