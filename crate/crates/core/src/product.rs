//! Product rules: slide × slide through shuffle sets, slide × fundamental
//! atom through fundamental shuffle sets, and fundamental atom × fundamental
//! atom through signed marked multiset partitions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::basis::BasisFamily;
use crate::composition::{csum_le, j_index_unchecked, refines_parts, weak_compositions, Composition};
use crate::error::{Error, Result};
use crate::expansion::BasisExpansion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Source {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub value: u32,
    pub source: Source,
}

/// A shuffle of the words `A` and `B`, cut into `n` blocks. Empty blocks are
/// the stars of a fundamental shuffle; in a plain shuffle they are positions
/// that received no run.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shuffle {
    pub blocks: Vec<Vec<Letter>>,
}

impl Shuffle {
    pub fn letters(&self) -> impl Iterator<Item = &Letter> {
        self.blocks.iter().flatten()
    }

    /// Block sizes.
    pub fn des(&self) -> Composition {
        self.count(|_| true)
    }

    /// Number of letters from `A` in each block.
    pub fn des_a(&self) -> Composition {
        self.count(|l| l.source == Source::A)
    }

    /// Number of letters from `B` in each block.
    pub fn des_b(&self) -> Composition {
        self.count(|l| l.source == Source::B)
    }

    fn count(&self, keep: impl Fn(&Letter) -> bool) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.iter().filter(|l| keep(l)).count() as u32).collect())
    }

    /// The word with `|` between nonempty blocks, as in `34|2`.
    pub fn runs_string(&self) -> String {
        let parts: Vec<String> =
            self.blocks.iter().filter(|b| !b.is_empty()).map(|b| letters_string(b)).collect();
        parts.join("|")
    }

    /// Every block shown, stars for the empty ones, as in `*|33444|12`.
    pub fn blocks_string(&self) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| if b.is_empty() { "*".to_string() } else { letters_string(b) })
            .collect();
        parts.join("|")
    }

    /// Letters run together with a star for each empty block, as in
    /// `99*55566212`.
    pub fn compact_string(&self) -> String {
        self.blocks.iter().map(|b| if b.is_empty() { "*".to_string() } else { letters_string(b) }).collect()
    }
}

impl fmt::Display for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.blocks_string())
    }
}

fn letters_string(ls: &[Letter]) -> String {
    ls.iter()
        .map(|l| if l.value < 10 { l.value.to_string() } else { format!("({})", l.value) })
        .collect()
}

fn check_lengths(a: &Composition, b: &Composition) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(())
}

/// `A = (2n−1)^{a₁} ⋯ 3^{a_{n−1}} 1^{a_n}` and `B = (2n)^{b₁} ⋯ 2^{b_n}`.
pub fn words_ab(a: &Composition, b: &Composition) -> Result<(Vec<Letter>, Vec<Letter>)> {
    check_lengths(a, b)?;
    let n = a.len() as u32;
    let spell = |c: &Composition, source: Source, offset: u32| -> Vec<Letter> {
        c.parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| {
                let value = 2 * (n - i as u32) - offset;
                std::iter::repeat_n(Letter { value, source }, k as usize)
            })
            .collect()
    };
    Ok((spell(a, Source::A, 1), spell(b, Source::B, 0)))
}

/// All interleavings of `x` and `y`, `x` taking the earlier slot on ties.
fn interleavings(x: &[Letter], y: &[Letter]) -> Vec<Vec<Letter>> {
    fn go(x: &[Letter], y: &[Letter], cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        match (x.split_first(), y.split_first()) {
            (None, None) => out.push(cur.clone()),
            (px, py) => {
                if let Some((&h, rest)) = px {
                    cur.push(h);
                    go(rest, y, cur, out);
                    cur.pop();
                }
                if let Some((&h, rest)) = py {
                    cur.push(h);
                    go(x, rest, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(x, y, &mut Vec::with_capacity(x.len() + y.len()), &mut out);
    out
}

/// Maximal weakly increasing factors.
fn runs(word: &[Letter]) -> Vec<Vec<Letter>> {
    let mut out: Vec<Vec<Letter>> = Vec::new();
    for &l in word {
        match out.last_mut() {
            Some(run) if run.last().is_some_and(|p| p.value <= l.value) => run.push(l),
            _ => out.push(vec![l]),
        }
    }
    out
}

/// The variable a letter comes from: `n + 1 − ⌈ℓ/2⌉`.
fn natural_position(n: usize, value: u32) -> usize {
    n + 1 - value.div_ceil(2) as usize
}

/// Places runs as far right as possible with strictly increasing positions
/// and each run no further right than the natural position of any of its
/// letters. `None` if some run would fall off the left edge.
fn place_runs(n: usize, rs: &[Vec<Letter>]) -> Option<Vec<usize>> {
    let mut pos = vec![0usize; rs.len()];
    let mut bound = n + 1;
    for (j, run) in rs.iter().enumerate().rev() {
        let nat = run.iter().map(|l| natural_position(n, l.value)).min().expect("runs are nonempty");
        let p = nat.min(bound - 1);
        if p < 1 {
            return None;
        }
        pos[j] = p;
        bound = p;
    }
    Some(pos)
}

/// The shuffle set of `a` and `b`: placed shuffles with `Des_A ⊵ a` and
/// `Des_B ⊵ b`.
pub fn shuffle_set(a: &Composition, b: &Composition) -> Result<Vec<Shuffle>> {
    let (wa, wb) = words_ab(a, b)?;
    let n = a.len();
    let mut out = Vec::new();
    for c in interleavings(&wa, &wb) {
        let rs = runs(&c);
        let Some(pos) = place_runs(n, &rs) else { continue };
        let mut blocks = vec![Vec::new(); n];
        for (run, p) in rs.into_iter().zip(pos) {
            blocks[p - 1] = run;
        }
        let s = Shuffle { blocks };
        if csum_le(b.parts(), s.des_b().parts()) && csum_le(a.parts(), s.des_a().parts()) {
            out.push(s);
        }
    }
    Ok(out)
}

/// `𝔉_a 𝔉_b = Σ_{D ∈ SSet(a, b)} 𝔉_{Des(D)}`.
pub fn slide_product(a: &Composition, b: &Composition) -> Result<BasisExpansion> {
    let mut e = BasisExpansion::new(BasisFamily::Slide, a.len());
    for s in shuffle_set(a, b)? {
        e.add(s.des(), BigInt::from(1));
    }
    Ok(e)
}

/// The fundamental shuffle set: each interleaving's runs padded with stars
/// to exactly `n` blocks, kept when `flat(Des_A) ≽ flat(a)`, `Des_A ⊵ a` and
/// `b ⊴ Des_B ⊴ qshift(b)`.
pub fn fundamental_shuffle_set(a: &Composition, b: &Composition) -> Result<Vec<Shuffle>> {
    let (wa, wb) = words_ab(a, b)?;
    let n = a.len();
    let a_strong = a.strong_parts();
    let b_upper = b.qshift();
    let mut out = Vec::new();
    for c in interleavings(&wa, &wb) {
        let rs = runs(&c);
        if rs.len() > n {
            continue;
        }
        for gaps in weak_compositions((n - rs.len()) as u32, rs.len() + 1) {
            let mut blocks = Vec::with_capacity(n);
            for (g, &stars) in gaps.parts().iter().enumerate() {
                blocks.extend(std::iter::repeat_n(Vec::new(), stars as usize));
                if let Some(run) = rs.get(g) {
                    blocks.push(run.clone());
                }
            }
            let s = Shuffle { blocks };
            let (da, db) = (s.des_a(), s.des_b());
            if refines_parts(&da.strong_parts(), &a_strong)
                && csum_le(a.parts(), da.parts())
                && csum_le(b.parts(), db.parts())
                && csum_le(db.parts(), b_upper.parts())
            {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Whether `s` has the shape required of a fundamental shuffle: `n` blocks
/// whose nonempty members are weakly increasing and separated by strict
/// descents.
pub fn is_fundamental_shape(s: &Shuffle, n: usize) -> bool {
    if s.blocks.len() != n {
        return false;
    }
    let nonempty: Vec<&Vec<Letter>> = s.blocks.iter().filter(|b| !b.is_empty()).collect();
    nonempty.iter().all(|b| b.windows(2).all(|w| w[0].value <= w[1].value))
        && nonempty.windows(2).all(|w| w[0].last().unwrap().value > w[1][0].value)
}

/// `𝔉_a Ã_b = Σ_{D ∈ qSSet(a, b)} Ã_{Des(D)}`.
pub fn slide_times_fatom(a: &Composition, b: &Composition) -> Result<BasisExpansion> {
    let mut e = BasisExpansion::new(BasisFamily::Fatom, a.len());
    for s in fundamental_shuffle_set(a, b)? {
        e.add(s.des(), BigInt::from(1));
    }
    Ok(e)
}

/// The map taking a pair `(ν, δ)` of chunkings of `A` and `B` to a
/// fundamental shuffle: chunk `i` of each word is merged in increasing
/// order, then each nonempty part whose last letter does not exceed the
/// first letter of the next nonempty part is moved into it.
pub fn psi(a: &Composition, b: &Composition, nu: &Composition, delta: &Composition) -> Result<Shuffle> {
    let (wa, wb) = words_ab(a, b)?;
    check_lengths(nu, delta)?;
    for (chunks, word) in [(nu, &wa), (delta, &wb)] {
        if chunks.weight() as usize != word.len() {
            return Err(Error::WeightMismatch { left: chunks.weight(), right: word.len() as u32 });
        }
    }
    let split = |word: &[Letter], sizes: &Composition| -> Vec<Vec<Letter>> {
        let mut rest = word;
        sizes
            .parts()
            .iter()
            .map(|&k| {
                let (head, tail) = rest.split_at(k as usize);
                rest = tail;
                head.to_vec()
            })
            .collect()
    };
    let mut blocks: Vec<Vec<Letter>> = split(&wa, nu)
        .into_iter()
        .zip(split(&wb, delta))
        .map(|(mut x, y)| {
            x.extend(y);
            x.sort_by_key(|l| l.value);
            x
        })
        .collect();
    let mut prev: Option<usize> = None;
    for j in 0..blocks.len() {
        if blocks[j].is_empty() {
            continue;
        }
        if let Some(i) = prev {
            if blocks[i].last().unwrap().value <= blocks[j][0].value {
                let mut moved = std::mem::take(&mut blocks[i]);
                moved.append(&mut blocks[j]);
                blocks[j] = moved;
            }
        }
        prev = Some(j);
    }
    Ok(Shuffle { blocks })
}

/// An element of the marked multiset: `value` from the first factor when
/// barred, from the second otherwise; one copy of each value per factor is
/// circled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedElement {
    pub value: u32,
    pub barred: bool,
    pub circled: bool,
}

impl MarkedElement {
    /// ⓘ < ⓘ̄ < i < ī within a value.
    fn rank(&self) -> u8 {
        match (self.circled, self.barred) {
            (true, false) => 0,
            (true, true) => 1,
            (false, false) => 2,
            (false, true) => 3,
        }
    }
}

impl Ord for MarkedElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.value, self.rank()).cmp(&(other.value, other.rank()))
    }
}

impl PartialOrd for MarkedElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MarkedElement {
    /// `(3)` circled, `3'` barred.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.circled {
            write!(f, "({})", self.value)?;
        } else {
            write!(f, "{}", self.value)?;
        }
        if self.barred {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// A signed set partition `S₁, …, S_k` of the marked multiset of `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtomMultisetPartition {
    /// Each block listed in weakly decreasing order.
    pub blocks: Vec<Vec<MarkedElement>>,
}

impl AtomMultisetPartition {
    pub fn weight(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
    }

    fn block_of(&self, e: MarkedElement) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&e))
    }

    /// Number of values whose unbarred circled copy sits strictly left of
    /// the barred one.
    pub fn sign_exponent(&self) -> u32 {
        let k = self.blocks.len() as u32;
        (1..=k)
            .filter(|&v| {
                let plain = self.block_of(MarkedElement { value: v, barred: false, circled: true });
                let bar = self.block_of(MarkedElement { value: v, barred: true, circled: true });
                matches!((plain, bar), (Some(p), Some(q)) if p < q)
            })
            .count() as u32
    }

    pub fn sign(&self) -> i32 {
        if self.sign_exponent().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Checks every membership rule against `(a, b)` directly.
    pub fn is_valid_for(&self, a: &Composition, b: &Composition) -> bool {
        let k = a.len();
        if b.len() != k || self.blocks.len() != k {
            return false;
        }
        // the multiset itself
        let mut have: Vec<MarkedElement> = self.blocks.iter().flatten().copied().collect();
        have.sort();
        if have != marked_multiset(a, b) {
            return false;
        }
        for (pos, block) in self.blocks.iter().enumerate() {
            if block.windows(2).any(|w| w[0] < w[1]) {
                return false;
            }
            for e in block {
                let g = if e.barred { a } else { b };
                let v = e.value as usize;
                if pos + 1 < j_index_unchecked(g.parts(), v) || pos + 1 > v {
                    return false;
                }
            }
        }
        for v in 1..=k {
            let circ = |barred| MarkedElement { value: v as u32, barred, circled: true };
            match (self.block_of(circ(true)), self.block_of(circ(false))) {
                (Some(p), None) | (None, Some(p)) if p + 1 != v => return false,
                (Some(p), Some(q)) => {
                    if p + 1 != v || q + 1 < j_index_unchecked(a.parts(), v) {
                        return false;
                    }
                    let late = self.blocks[q + 1..]
                        .iter()
                        .flatten()
                        .any(|e| e.value as usize == v && !e.circled);
                    if q + 1 < v && late {
                        return false;
                    }
                }
                _ => {}
            }
        }
        let nonempty: Vec<&Vec<MarkedElement>> = self.blocks.iter().filter(|b| !b.is_empty()).collect();
        nonempty.windows(2).all(|w| w[0].last().unwrap() < &w[1][0])
    }
}

impl fmt::Display for AtomMultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            if block.is_empty() {
                f.write_str("-")?;
            }
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// The sorted marked multiset of `(a, b)`.
fn marked_multiset(a: &Composition, b: &Composition) -> Vec<MarkedElement> {
    let mut out = Vec::new();
    for (g, barred) in [(a, true), (b, false)] {
        for (i, &k) in g.parts().iter().enumerate() {
            for c in 0..k {
                out.push(MarkedElement { value: i as u32 + 1, barred, circled: c == 0 });
            }
        }
    }
    out.sort();
    out
}

/// One kind of element to place: `count` identical copies into blocks
/// `lo..=hi` (1-based).
struct Slot {
    element: MarkedElement,
    count: u32,
    lo: usize,
    hi: usize,
}

/// All fundamental atom multiset partitions of `(a, b)`.
pub fn atom_multiset_partitions(a: &Composition, b: &Composition) -> Result<Vec<AtomMultisetPartition>> {
    check_lengths(a, b)?;
    let k = a.len();
    // values descending; within a value: plain barred, plain, then the circled pair
    let mut slots = Vec::new();
    for v in (1..=k).rev() {
        let (av, bv) = (a.parts()[v - 1], b.parts()[v - 1]);
        let (ja, jb) = (j_index_unchecked(a.parts(), v), j_index_unchecked(b.parts(), v));
        let el = |barred, circled| MarkedElement { value: v as u32, barred, circled };
        if av > 1 {
            slots.push(Slot { element: el(true, false), count: av - 1, lo: ja, hi: v });
        }
        if bv > 1 {
            slots.push(Slot { element: el(false, false), count: bv - 1, lo: jb, hi: v });
        }
        match (av > 0, bv > 0) {
            (true, true) => {
                slots.push(Slot { element: el(true, true), count: 1, lo: v, hi: v });
                slots.push(Slot { element: el(false, true), count: 1, lo: ja.max(jb), hi: v });
            }
            (true, false) => slots.push(Slot { element: el(true, true), count: 1, lo: v, hi: v }),
            (false, true) => slots.push(Slot { element: el(false, true), count: 1, lo: v, hi: v }),
            (false, false) => {}
        }
    }
    let mut counts: Vec<Vec<(MarkedElement, u32)>> = vec![Vec::new(); k];
    let mut out = Vec::new();
    place(&slots, &mut counts, &mut out);
    Ok(out)
}

fn place(slots: &[Slot], counts: &mut Vec<Vec<(MarkedElement, u32)>>, out: &mut Vec<AtomMultisetPartition>) {
    let Some((slot, rest)) = slots.split_first() else {
        let blocks: Vec<Vec<MarkedElement>> = counts
            .iter()
            .map(|b| {
                let mut v: Vec<MarkedElement> =
                    b.iter().flat_map(|&(e, c)| std::iter::repeat_n(e, c as usize)).collect();
                v.sort_by(|x, y| y.cmp(x));
                v
            })
            .collect();
        let nonempty: Vec<&Vec<MarkedElement>> = blocks.iter().filter(|b| !b.is_empty()).collect();
        if nonempty.windows(2).all(|w| w[0].last().unwrap() < &w[1][0]) {
            out.push(AtomMultisetPartition { blocks });
        }
        return;
    };
    let e = slot.element;
    if e.circled && !e.barred && slot.lo < slot.hi {
        // both circled copies exist: if ⓘ leaves S_i, no plain copy of i may
        // sit right of it
        let v = e.value as usize;
        for q in slot.lo..=slot.hi {
            let late = q < v
                && counts[q..].iter().flatten().any(|(x, _)| x.value as usize == v && !x.circled);
            if late {
                continue;
            }
            counts[q - 1].push((e, 1));
            place(rest, counts, out);
            counts[q - 1].pop();
        }
        return;
    }
    distribute(slot, slot.count, slot.lo, rest, counts, out);
}

/// Spreads `left` copies of `slot.element` over blocks `from..=slot.hi`.
fn distribute(
    slot: &Slot,
    left: u32,
    from: usize,
    rest: &[Slot],
    counts: &mut Vec<Vec<(MarkedElement, u32)>>,
    out: &mut Vec<AtomMultisetPartition>,
) {
    if left == 0 {
        place(rest, counts, out);
        return;
    }
    if from == slot.hi {
        counts[from - 1].push((slot.element, left));
        place(rest, counts, out);
        counts[from - 1].pop();
        return;
    }
    distribute(slot, left, from + 1, rest, counts, out);
    for here in 1..=left {
        counts[from - 1].push((slot.element, here));
        distribute(slot, left - here, from + 1, rest, counts, out);
        counts[from - 1].pop();
    }
}

/// Positive and negative contribution counts per index.
pub fn fatom_product_contributions(a: &Composition, b: &Composition) -> Result<BTreeMap<Composition, (u64, u64)>> {
    let mut out: BTreeMap<Composition, (u64, u64)> = BTreeMap::new();
    for s in atom_multiset_partitions(a, b)? {
        let slot = out.entry(s.weight()).or_default();
        if s.sign() > 0 {
            slot.0 += 1;
        } else {
            slot.1 += 1;
        }
    }
    Ok(out)
}

/// `Ã_a Ã_b = Σ_S (−1)^{sgn S} Ã_{weight(S)}`.
pub fn fatom_product(a: &Composition, b: &Composition) -> Result<BasisExpansion> {
    let mut e = BasisExpansion::new(BasisFamily::Fatom, a.len());
    for (w, (plus, minus)) in fatom_product_contributions(a, b)? {
        e.add(w, BigInt::from(plus) - BigInt::from(minus));
    }
    Ok(e)
}

/// Whether no index receives contributions of both signs.
pub fn is_cancellation_free(a: &Composition, b: &Composition) -> Result<bool> {
    Ok(fatom_product_contributions(a, b)?.values().all(|&(p, m)| p == 0 || m == 0))
}
