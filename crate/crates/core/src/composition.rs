//! Weak compositions of a fixed ambient length and the maps and orders
//! defined on them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weak composition with an explicit number of parts.
///
/// The ambient length is the length of `parts`; literals shorter than the
/// ambient length are padded with trailing zeros by [`Composition::with_len`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    /// Pads `parts` with trailing zeros (or drops trailing zeros) to exactly
    /// `n` parts. Fails if a nonzero part would be cut off.
    pub fn with_len(mut parts: Vec<u32>, n: usize) -> Result<Self> {
        if parts.len() > n {
            if parts[n..].iter().any(|&p| p != 0) {
                return Err(Error::TooLong { composition: join(&parts), nvars: n });
            }
            parts.truncate(n);
        }
        parts.resize(n, 0);
        Ok(Composition { parts })
    }

    pub fn zero(n: usize) -> Self {
        Composition { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Ambient length `n`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn num_nonzero(&self) -> usize {
        self.parts.iter().filter(|&&p| p != 0).count()
    }

    /// True when no zero part precedes a nonzero part.
    pub fn is_strong(&self) -> bool {
        let k = self.num_nonzero();
        self.parts[..k].iter().all(|&p| p != 0)
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// The nonzero parts in order.
    pub fn strong_parts(&self) -> Vec<u32> {
        self.parts.iter().copied().filter(|&p| p != 0).collect()
    }

    /// Moves every zero to the right end, keeping the order of the nonzero
    /// parts.
    pub fn flat(&self) -> Composition {
        let mut parts = self.strong_parts();
        parts.resize(self.len(), 0);
        Composition { parts }
    }

    /// Weakly decreasing rearrangement.
    pub fn sort_desc(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition { parts }
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// Partial sums `a₁, a₁+a₂, …`.
    pub fn csum(&self) -> Vec<u32> {
        self.parts
            .iter()
            .scan(0u32, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// `self ⊴ other` in dominance order. Both compositions must have the
    /// same ambient length and the same weight.
    pub fn dominated_by(&self, other: &Composition) -> Result<bool> {
        self.check_len(other)?;
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch { left: self.weight(), right: other.weight() });
        }
        Ok(csum_le(&self.parts, &other.parts))
    }

    /// `self ⊵ other`.
    pub fn dominates(&self, other: &Composition) -> Result<bool> {
        other.dominated_by(self)
    }

    /// `self ≽ other`: consecutive blocks of `self` sum to the parts of
    /// `other`. Both must be strong and of equal weight; ambient lengths may
    /// differ.
    pub fn refines(&self, other: &Composition) -> Result<bool> {
        for c in [self, other] {
            if !c.is_strong() {
                return Err(Error::NotStrong(c.to_string()));
            }
        }
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch { left: self.weight(), right: other.weight() });
        }
        Ok(refines_parts(&self.strong_parts(), &other.strong_parts()))
    }

    /// `{a₁, a₁+a₂, …, a₁+⋯+a_{k−1}}` for a strong composition with `k`
    /// nonzero parts.
    pub fn set_of(&self) -> Result<BTreeSet<u32>> {
        if !self.is_strong() {
            return Err(Error::NotStrong(self.to_string()));
        }
        let strong = self.strong_parts();
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in strong.iter().take(strong.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        Ok(out)
    }

    /// The fundamental shift.
    ///
    /// A nonzero part with a zero immediately to its left is reduced to 1 and
    /// the remaining mass moves left until it sits just right of the previous
    /// nonzero part (or in position 1 if there is none). A nonzero part in
    /// position 1 has nothing to shift into and keeps its value.
    pub fn qshift(&self) -> Composition {
        let n = self.len();
        let mut out = vec![0u32; n];
        let mut prev: Option<usize> = None;
        for p in 0..n {
            let v = self.parts[p];
            if v == 0 {
                continue;
            }
            if p == 0 || self.parts[p - 1] != 0 {
                out[p] = v;
            } else {
                out[p] = 1;
                let target = prev.map_or(0, |q| q + 1);
                out[target] += v - 1;
            }
            prev = Some(p);
        }
        Composition { parts: out }
    }

    /// All `b` with `self ⊴ b ⊴ qshift(self)`, in csum-lexicographic order.
    pub fn atom_interval(&self) -> Vec<Composition> {
        between(&self.csum(), &self.qshift().csum())
    }

    /// `j(γ, i)`: one past the position of the nearest nonzero part strictly
    /// left of `i`, or 1 if there is none. Positions are 1-based.
    pub fn j_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.len() });
        }
        if self.parts[i - 1] == 0 {
            return Err(Error::ZeroPart { composition: self.to_string(), index: i });
        }
        Ok(j_index_unchecked(&self.parts, i))
    }

    /// Classical `s_i`: swap parts `i` and `i+1` (1-based).
    pub fn swapped(&self, i: usize) -> Composition {
        let mut parts = self.parts.clone();
        parts.swap(i - 1, i);
        Composition { parts }
    }

    /// Hivert's `s̃_i`: swap parts `i`, `i+1` only if one of them is zero.
    pub fn quasi_swapped(&self, i: usize) -> Composition {
        if self.parts[i - 1] == 0 || self.parts[i] == 0 {
            self.swapped(i)
        } else {
            self.clone()
        }
    }

    /// Elementwise sum of two compositions of the same length.
    pub fn add(&self, other: &Composition) -> Result<Composition> {
        self.check_len(other)?;
        Ok(Composition {
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a + b).collect(),
        })
    }

    fn check_len(&self, other: &Composition) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }
}

pub(crate) fn j_index_unchecked(parts: &[u32], i: usize) -> usize {
    parts[..i - 1].iter().rposition(|&p| p != 0).map_or(1, |q| q + 2)
}

/// Entrywise comparison of partial sums.
pub(crate) fn csum_le(b: &[u32], c: &[u32]) -> bool {
    let (mut sb, mut sc) = (0u32, 0u32);
    for (x, y) in b.iter().zip(c) {
        sb += x;
        sc += y;
        if sb > sc {
            return false;
        }
    }
    true
}

pub(crate) fn refines_parts(fine: &[u32], coarse: &[u32]) -> bool {
    let mut it = fine.iter();
    for &target in coarse {
        let mut acc = 0;
        while acc < target {
            match it.next() {
                Some(&p) => acc += p,
                None => return false,
            }
        }
        if acc != target {
            return false;
        }
    }
    it.next().is_none()
}

/// Orders compositions by their partial-sum vectors, lexicographically.
/// A dominance-minimal element of a set is always first in this order.
pub fn cmp_csum_lex(a: &Composition, b: &Composition) -> Ordering {
    a.csum().cmp(&b.csum()).then_with(|| a.len().cmp(&b.len()))
}

/// Weight, then csum-lexicographic.
pub fn cmp_weight_csum(a: &Composition, b: &Composition) -> Ordering {
    a.weight().cmp(&b.weight()).then_with(|| cmp_csum_lex(a, b))
}

/// All compositions whose partial sums lie entrywise between `lower` and
/// `upper`. The final entries must agree (they fix the weight). Output is in
/// csum-lexicographic order.
pub fn between(lower: &[u32], upper: &[u32]) -> Vec<Composition> {
    let n = lower.len();
    let mut out = Vec::new();
    if upper.len() != n || (n > 0 && lower[n - 1] != upper[n - 1]) {
        return out;
    }
    let mut csum = vec![0u32; n];
    fill_between(lower, upper, 0, 0, &mut csum, &mut out);
    out
}

fn fill_between(
    lower: &[u32],
    upper: &[u32],
    pos: usize,
    prev: u32,
    csum: &mut Vec<u32>,
    out: &mut Vec<Composition>,
) {
    if pos == lower.len() {
        let mut last = 0;
        let parts = csum
            .iter()
            .map(|&s| {
                let p = s - last;
                last = s;
                p
            })
            .collect();
        out.push(Composition { parts });
        return;
    }
    let lo = lower[pos].max(prev);
    for s in lo..=upper[pos] {
        csum[pos] = s;
        fill_between(lower, upper, pos + 1, s, csum, out);
    }
}

/// All weak compositions of `weight` with `n` parts, in csum-lexicographic
/// order.
pub fn weak_compositions(weight: u32, n: usize) -> Vec<Composition> {
    if n == 0 {
        return if weight == 0 { vec![Composition::zero(0)] } else { Vec::new() };
    }
    let mut lower = vec![0; n];
    lower[n - 1] = weight;
    between(&lower, &vec![weight; n])
}

/// All weak compositions with `n` parts and weight at most `max_weight`,
/// ordered by weight, then csum-lexicographically.
pub fn weak_compositions_up_to(max_weight: u32, n: usize) -> Vec<Composition> {
    (0..=max_weight).flat_map(|w| weak_compositions(w, n)).collect()
}

/// All strong compositions (no zero parts) of `weight`, in lexicographic
/// order of their parts.
pub fn strong_compositions(weight: u32) -> Vec<Composition> {
    fn go(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition::new(cur.clone()));
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            go(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn join(parts: &[u32]) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma-separated nonnegative integers, e.g. `0,3,1,0,1`. Surrounding
    /// parentheses or brackets are accepted.
    fn from_str(s: &str) -> Result<Self> {
        parse_list(s, 0).map(Composition::new)
    }
}

/// Parses `a,b,c` (optionally wrapped in `()` or `[]`) into integers.
/// `offset` is added to reported columns.
pub(crate) fn parse_list(s: &str, offset: usize) -> Result<Vec<u32>> {
    let trimmed = s.trim_end();
    let lead = trimmed.len() - trimmed.trim_start().len();
    let mut body = trimmed.trim_start();
    let mut start = offset + lead;
    if let Some(open) = body.chars().next().filter(|c| *c == '(' || *c == '[') {
        let close = if open == '(' { ')' } else { ']' };
        if !body.ends_with(close) {
            return Err(Error::parse(start + body.len() + 1, format!("expected '{close}'")));
        }
        body = &body[1..body.len() - 1];
        start += 1;
    }
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut col = start;
    for field in body.split(',') {
        let t = field.trim();
        let pad = field.len() - field.trim_start().len();
        let value = t
            .parse::<u32>()
            .map_err(|_| Error::parse(col + pad + 1, format!("expected a nonnegative integer, found {t:?}")))?;
        out.push(value);
        col += field.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn flat_examples() {
        assert_eq!(c(&[0, 3, 1, 0, 1]).flat(), c(&[3, 1, 1, 0, 0]));
        assert_eq!(c(&[0, 0, 0]).flat(), c(&[0, 0, 0]));
        assert_eq!(c(&[1, 2]).flat(), c(&[1, 2]));
    }

    #[test]
    fn sort_examples() {
        assert_eq!(c(&[0, 3, 1, 0, 1]).sort_desc(), c(&[3, 1, 1, 0, 0]));
        assert_eq!(c(&[2, 2]).sort_desc(), c(&[2, 2]));
        assert_eq!(c(&[1, 0, 2]).sort_desc(), c(&[2, 1, 0]));
    }

    #[test]
    fn csum_examples() {
        assert_eq!(c(&[0, 3, 1, 0, 1]).csum(), vec![0, 3, 4, 4, 5]);
        assert_eq!(c(&[0, 0]).csum(), vec![0, 0]);
        assert_eq!(c(&[4, 3]).csum(), vec![4, 7]);
    }

    #[test]
    fn dominance_examples() {
        assert!(c(&[0, 3, 1, 0, 1]).dominated_by(&c(&[3, 1, 1, 0, 0])).unwrap());
        assert!(c(&[1, 2]).dominated_by(&c(&[1, 2])).unwrap());
        assert!(!c(&[2, 0]).dominated_by(&c(&[0, 2])).unwrap());
    }

    #[test]
    fn dominance_rejects_bad_input() {
        assert!(matches!(c(&[1, 0]).dominated_by(&c(&[1])), Err(Error::LengthMismatch { .. })));
        assert!(matches!(c(&[1, 0]).dominated_by(&c(&[2, 0])), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn refines_examples() {
        assert!(c(&[1, 2, 1, 3]).refines(&c(&[4, 3])).unwrap());
        assert!(c(&[4, 3]).refines(&c(&[4, 3])).unwrap());
        assert!(!c(&[2, 2]).refines(&c(&[1, 3])).unwrap());
        assert!(!c(&[4, 3]).refines(&c(&[1, 2, 1, 3])).unwrap());
        assert!(matches!(c(&[0, 2]).refines(&c(&[2])), Err(Error::NotStrong(_))));
    }

    #[test]
    fn set_of_examples() {
        assert_eq!(c(&[1, 2, 1]).set_of().unwrap(), BTreeSet::from([1, 3]));
        assert!(c(&[5]).set_of().unwrap().is_empty());
        assert_eq!(c(&[1, 1, 1]).set_of().unwrap(), BTreeSet::from([1, 2]));
        assert_eq!(c(&[1, 2, 0]).set_of().unwrap(), BTreeSet::from([1]));
    }

    #[test]
    fn qshift_examples() {
        assert_eq!(c(&[0, 0, 3, 0, 1, 4, 0, 5]).qshift(), c(&[2, 0, 1, 0, 1, 4, 4, 1]));
        assert_eq!(c(&[1, 3, 1]).qshift(), c(&[1, 3, 1]));
        assert_eq!(c(&[2, 0, 3]).qshift(), c(&[2, 2, 1]));
        assert_eq!(c(&[0, 0]).qshift(), c(&[0, 0]));
    }

    #[test]
    fn atom_interval_examples() {
        let got = c(&[0, 0, 3, 2, 0, 1]).atom_interval();
        let mut want = vec![
            c(&[0, 0, 3, 2, 0, 1]),
            c(&[0, 1, 2, 2, 0, 1]),
            c(&[1, 0, 2, 2, 0, 1]),
            c(&[0, 2, 1, 2, 0, 1]),
            c(&[1, 1, 1, 2, 0, 1]),
            c(&[2, 0, 1, 2, 0, 1]),
        ];
        want.sort_by(cmp_csum_lex);
        assert_eq!(got, want);
        assert_eq!(c(&[1, 3, 1]).atom_interval(), vec![c(&[1, 3, 1])]);
        assert_eq!(c(&[0, 2]).atom_interval(), vec![c(&[0, 2]), c(&[1, 1])]);
    }

    #[test]
    fn atom_interval_matches_brute_force() {
        for n in 1..=4 {
            for a in weak_compositions_up_to(4, n) {
                let q = a.qshift();
                let brute: Vec<_> = weak_compositions(a.weight(), n)
                    .into_iter()
                    .filter(|b| a.dominated_by(b).unwrap() && b.dominated_by(&q).unwrap())
                    .collect();
                assert_eq!(a.atom_interval(), brute, "{a}");
            }
        }
    }

    #[test]
    fn j_index_examples() {
        let g = c(&[0, 0, 3, 2, 0, 1]);
        assert_eq!(g.j_index(3).unwrap(), 1);
        assert_eq!(g.j_index(4).unwrap(), 4);
        assert_eq!(g.j_index(6).unwrap(), 5);
        assert!(matches!(g.j_index(2), Err(Error::ZeroPart { .. })));
        assert!(matches!(g.j_index(7), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn j_index_locates_shifted_mass() {
        // qshift puts g_i − 1 at j(g, i) whenever g_i has a zero to its left.
        let g = c(&[0, 0, 3, 0, 1, 4, 0, 5]);
        let q = g.qshift();
        for i in [3, 5, 8] {
            let j = g.j_index(i).unwrap();
            assert_eq!(q.parts()[j - 1], g.parts()[i - 1] - 1);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(weak_compositions(3, 3).len(), 10);
        assert_eq!(weak_compositions(0, 2), vec![c(&[0, 0])]);
        assert_eq!(strong_compositions(4).len(), 8);
        let all = weak_compositions(4, 3);
        assert!(all.windows(2).all(|w| cmp_csum_lex(&w[0], &w[1]) == Ordering::Less));
    }

    #[test]
    fn with_len_pads_and_truncates() {
        assert_eq!(Composition::with_len(vec![2], 3).unwrap(), c(&[2, 0, 0]));
        assert_eq!(Composition::with_len(vec![2, 0, 0], 1).unwrap(), c(&[2]));
        assert!(Composition::with_len(vec![0, 2], 1).is_err());
    }

    #[test]
    fn parse_literals() {
        assert_eq!("0,3,1,0,1".parse::<Composition>().unwrap(), c(&[0, 3, 1, 0, 1]));
        assert_eq!("(3, 1)".parse::<Composition>().unwrap(), c(&[3, 1]));
        assert_eq!("[2]".parse::<Composition>().unwrap(), c(&[2]));
        match "1,x,2".parse::<Composition>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 3),
            other => panic!("{other:?}"),
        }
    }
}
