//! Bounded exhaustive checks of every identity the library relies on.
//!
//! Each check enumerates instances inside the requested bounds and records
//! failures as data. The report is deterministic: random instances come from
//! a fixed seed and failures are sorted before they are truncated.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::basis::{self, gessel, BasisFamily, GesselMethod, Method};
use crate::composition::{cmp_csum_lex, csum_le, strong_compositions, weak_compositions, weak_compositions_up_to, Composition};
use crate::error::{Error, Result};
use crate::expansion::{self, element, expand_fatom, expand_key, expand_slide, gessel_to_fatoms, slide_to_fatoms, BasisExpansion};
use crate::operator::{apply, OperatorKind};
use crate::permutation::Permutation;
use crate::polynomial::Polynomial;
use crate::product::{
    atom_multiset_partitions, fatom_product, fatom_product_contributions, fundamental_shuffle_set, is_fundamental_shape,
    slide_product, slide_times_fatom,
};

/// Failures kept per check in a report.
pub const FAILURE_CAP: usize = 5;

const SEED: u64 = 0x5eed_a70f;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_weight: u32,
    pub max_length: usize,
    /// Random instances drawn by the checks that sample beyond the
    /// exhaustive range.
    pub random_instances: usize,
}

impl Bounds {
    pub fn new(max_weight: u32, max_length: usize) -> Self {
        Bounds { max_weight, max_length, random_instances: 50 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: Vec<Composition>,
    pub detail: String,
}

impl Failure {
    fn cmp_size(&self, other: &Failure) -> Ordering {
        let weight = |f: &Failure| f.inputs.iter().map(Composition::weight).sum::<u32>();
        weight(self).cmp(&weight(other)).then_with(|| {
            for (x, y) in self.inputs.iter().zip(&other.inputs) {
                let o = cmp_csum_lex(x, y);
                if o.is_ne() {
                    return o;
                }
            }
            self.inputs.len().cmp(&other.inputs.len()).then_with(|| self.detail.cmp(&other.detail))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub instances: u64,
    pub failure_count: u64,
    /// The smallest failures, by total weight then csum-lex order.
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub bounds: Bounds,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "{status}  {:width$}  {} instances", c.name, c.instances)?;
            if !c.passed() {
                write!(f, ", {} failures", c.failure_count)?;
            }
            writeln!(f)?;
            for fail in &c.failures {
                let inputs: Vec<String> = fail.inputs.iter().map(|a| format!("({a})")).collect();
                writeln!(f, "      {} {}", inputs.join(" "), fail.detail)?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        write!(
            f,
            "{} checks, {} failed (max weight {}, max length {})",
            self.checks.len(),
            failed,
            self.bounds.max_weight,
            self.bounds.max_length
        )
    }
}

#[derive(Default)]
struct Tally {
    instances: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn record(&mut self, ok: bool, inputs: impl FnOnce() -> Vec<Composition>, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(Failure { inputs: inputs(), detail: detail() });
        }
    }

    fn into_report(mut self, name: &str) -> CheckReport {
        self.failures.sort_by(Failure::cmp_size);
        let failure_count = self.failures.len() as u64;
        self.failures.truncate(FAILURE_CAP);
        CheckReport { name: name.to_string(), instances: self.instances, failure_count, failures: self.failures }
    }
}

type CheckFn = fn(&Bounds) -> Tally;

const CHECKS: &[(&str, CheckFn)] = &[
    ("square-s", |b| square(b, OperatorKind::S)),
    ("square-s-tilde", |b| square(b, OperatorKind::STilde)),
    ("square-partial", |b| square(b, OperatorKind::Partial)),
    ("square-partial-tilde", |b| square(b, OperatorKind::PartialTilde)),
    ("square-pi", |b| square(b, OperatorKind::Pi)),
    ("square-pi-tilde", |b| square(b, OperatorKind::PiTilde)),
    ("square-theta", |b| square(b, OperatorKind::Theta)),
    ("square-theta-tilde", |b| square(b, OperatorKind::ThetaTilde)),
    ("braid-s", |b| braid(b, OperatorKind::S)),
    ("braid-s-tilde", |b| braid(b, OperatorKind::STilde)),
    ("braid-partial", |b| braid(b, OperatorKind::Partial)),
    ("braid-pi", |b| braid(b, OperatorKind::Pi)),
    ("braid-pi-tilde", |b| braid(b, OperatorKind::PiTilde)),
    ("braid-theta", |b| braid(b, OperatorKind::Theta)),
    ("braid-theta-tilde", |b| braid(b, OperatorKind::ThetaTilde)),
    ("braid-partial-tilde", braid_partial_tilde_witness),
    ("commute-far", commute_far),
    ("theta-pi-minus-one", |b| minus_one(b, OperatorKind::Theta, OperatorKind::Pi)),
    ("theta-tilde-pi-tilde-minus-one", |b| minus_one(b, OperatorKind::ThetaTilde, OperatorKind::PiTilde)),
    ("divided-difference-quotient", divided_difference_quotient),
    ("slide-definitions", slide_definitions),
    ("fatom-interval", fatom_interval),
    ("fatom-recursion", fatom_recursion),
    ("shift-lemma-merge", shift_lemma_merge),
    ("shift-lemma-split", shift_lemma_split),
    ("gessel-methods", gessel_methods),
    ("gessel-fatom-expansion", gessel_fatom_expansion),
    ("slide-fatom-expansion", slide_fatom_expansion),
    ("leading-monomial", leading_monomial),
    ("basis-rank", basis_rank),
    ("expansion-round-trip", expansion_round_trip),
    ("product-slide-slide", product_slide_slide),
    ("product-slide-fatom", product_slide_fatom),
    ("product-fatom-fatom", product_fatom_fatom),
    ("product-random", product_random),
    ("fundamental-shape", fundamental_shape),
    ("cancellation-free", cancellation_free),
    ("strong-positivity", strong_positivity),
    ("product-commutativity", product_commutativity),
    ("schubert-key-positivity", schubert_key_positivity),
    ("key-fatom-positivity", |b| fatom_positivity(b, BasisFamily::Key)),
    ("atom-fatom-positivity", |b| fatom_positivity(b, BasisFamily::Atom)),
];

/// Names of every check, in report order.
pub fn identity_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs the named checks (all of them when `which` is `None`).
pub fn run_suite(bounds: Bounds, which: Option<&[String]>) -> Result<SuiteReport> {
    if let Some(names) = which {
        if let Some(bad) = names.iter().find(|n| !CHECKS.iter().any(|(c, _)| c == n)) {
            return Err(Error::UnknownCheck(bad.clone()));
        }
    }
    let checks = CHECKS
        .iter()
        .filter(|(name, _)| which.is_none_or(|w| w.iter().any(|n| n == name)))
        .map(|(name, f)| f(&bounds).into_report(name))
        .collect();
    Ok(SuiteReport { bounds, checks })
}

// ----- instance generators -----

/// Weak compositions of length `1..=max_length` and weight `≤ max_weight`.
fn compositions(b: &Bounds) -> Vec<Composition> {
    (1..=b.max_length).flat_map(|n| weak_compositions_up_to(b.max_weight, n)).collect()
}

/// Monomials on which the operators act: at least two variables.
fn monomials(b: &Bounds) -> Vec<(Composition, Polynomial)> {
    (2..=b.max_length)
        .flat_map(|n| weak_compositions_up_to(b.max_weight, n))
        .map(|a| {
            let p = Polynomial::monomial(&a);
            (a, p)
        })
        .collect()
}

/// Pairs of equal length `≤ max_length` with total weight `≤ max_weight`.
fn pairs(b: &Bounds) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for n in 1..=b.max_length {
        let comps = weak_compositions_up_to(b.max_weight, n);
        for x in &comps {
            for y in &comps {
                if x.weight() + y.weight() <= b.max_weight {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

/// A random weak composition of length `n` and weight `w`, with some parts
/// forced to zero so that gaps are common.
pub fn random_composition<R: Rng>(rng: &mut R, n: usize, w: u32) -> Composition {
    let mut parts = vec![0u32; n];
    let live: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
    let slots = if live.is_empty() { vec![rng.gen_range(0..n)] } else { live };
    for _ in 0..w {
        parts[slots[rng.gen_range(0..slots.len())]] += 1;
    }
    Composition::new(parts)
}

/// `count` random pairs of equal length in `lengths` with each weight in
/// `weights`, reproducible from `seed`.
pub fn random_pairs(
    seed: u64,
    count: usize,
    lengths: std::ops::RangeInclusive<usize>,
    weights: std::ops::RangeInclusive<u32>,
) -> Vec<(Composition, Composition)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lengths.clone());
            let (wa, wb) = (rng.gen_range(weights.clone()), rng.gen_range(weights.clone()));
            (random_composition(&mut rng, n, wa), random_composition(&mut rng, n, wb))
        })
        .collect()
}

fn op(kind: OperatorKind, i: usize, p: &Polynomial) -> Polynomial {
    apply(kind, i, p).expect("index checked by caller")
}

fn ops(kind: OperatorKind, word: &[usize], p: &Polynomial) -> Polynomial {
    word.iter().rev().fold(p.clone(), |acc, &i| op(kind, i, &acc))
}

fn diff(x: &Polynomial, y: &Polynomial) -> Polynomial {
    x.sub(y).expect("same ring")
}

// ----- operator relations -----

fn square(b: &Bounds, kind: OperatorKind) -> Tally {
    let mut t = Tally::default();
    for (a, p) in monomials(b) {
        for i in 1..a.len() {
            let twice = ops(kind, &[i, i], &p);
            let want = match kind {
                OperatorKind::S | OperatorKind::STilde => p.clone(),
                OperatorKind::Partial | OperatorKind::PartialTilde => Polynomial::zero(a.len()),
                OperatorKind::Pi | OperatorKind::PiTilde => op(kind, i, &p),
                OperatorKind::Theta | OperatorKind::ThetaTilde => op(kind, i, &p).negate(),
            };
            t.record(twice == want, || vec![a.clone()], || format!("i={i}"));
        }
    }
    t
}

fn braid(b: &Bounds, kind: OperatorKind) -> Tally {
    let mut t = Tally::default();
    for (a, p) in monomials(b) {
        for i in 1..a.len().saturating_sub(1) {
            let ok = ops(kind, &[i, i + 1, i], &p) == ops(kind, &[i + 1, i, i + 1], &p);
            t.record(ok, || vec![a.clone()], || format!("i={i}"));
        }
    }
    t
}

/// Passes when some monomial breaks the braid relation for `∂̃`. Vacuous when
/// the bounds admit no three-variable monomial.
fn braid_partial_tilde_witness(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    let mut candidates = 0;
    for (a, p) in monomials(b) {
        for i in 1..a.len().saturating_sub(1) {
            candidates += 1;
            let k = OperatorKind::PartialTilde;
            if ops(k, &[i, i + 1, i], &p) != ops(k, &[i + 1, i, i + 1], &p) {
                t.instances = candidates;
                return t;
            }
        }
    }
    t.instances = candidates;
    if candidates > 0 {
        t.failures.push(Failure { inputs: vec![], detail: "no counterexample within bounds".into() });
    }
    t
}

fn commute_far(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (a, p) in monomials(b) {
        let n = a.len();
        for kind in OperatorKind::ALL {
            for i in 1..n {
                for j in i + 2..n {
                    let ok = ops(kind, &[i, j], &p) == ops(kind, &[j, i], &p);
                    t.record(ok, || vec![a.clone()], || format!("{kind} i={i} j={j}"));
                }
            }
        }
    }
    t
}

fn minus_one(b: &Bounds, theta: OperatorKind, pi: OperatorKind) -> Tally {
    let mut t = Tally::default();
    for (a, p) in monomials(b) {
        for i in 1..a.len() {
            let ok = op(theta, i, &p) == diff(&op(pi, i, &p), &p);
            t.record(ok, || vec![a.clone()], || format!("i={i}"));
        }
    }
    t
}

/// `(x_i − x_{i+1}) ∂_i f = f − s_i f`, and the same with tildes.
fn divided_difference_quotient(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (a, p) in monomials(b) {
        let n = a.len();
        for i in 1..n {
            let unit = |k: usize| {
                let mut e = vec![0; n];
                e[k] = 1;
                Polynomial::monomial(&Composition::new(e))
            };
            let factor = diff(&unit(i - 1), &unit(i));
            for (d, s) in [(OperatorKind::Partial, OperatorKind::S), (OperatorKind::PartialTilde, OperatorKind::STilde)] {
                let lhs = factor.multiply(&op(d, i, &p)).expect("same ring");
                let ok = lhs == diff(&p, &op(s, i, &p));
                t.record(ok, || vec![a.clone()], || format!("{d} i={i}"));
            }
        }
    }
    t
}

// ----- basis definitions -----

fn slide_definitions(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for a in compositions(b) {
        let ok = basis::slide(&a, Method::Operator) == basis::slide(&a, Method::Combinatorial);
        t.record(ok, || vec![a.clone()], || "operator and monomial sums differ".into());
    }
    t
}

fn fatom_interval(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for a in compositions(b) {
        let ok = basis::fatom(&a, Method::Operator) == basis::fatom(&a, Method::Combinatorial);
        t.record(ok, || vec![a.clone()], || "θ̃-word image is not the interval sum".into());
    }
    t
}

/// `Ã_a = θ̃_i Ã_{s_i a}` whenever `a_i = 0 < a_{i+1}`.
fn fatom_recursion(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for a in compositions(b) {
        let parts = a.parts();
        for i in 1..a.len() {
            if parts[i - 1] == 0 && parts[i] != 0 {
                let rhs = op(OperatorKind::ThetaTilde, i, &basis::fatom(&a.swapped(i), Method::Combinatorial));
                let ok = basis::fatom(&a, Method::Combinatorial) == rhs;
                t.record(ok, || vec![a.clone()], || format!("i={i}"));
            }
        }
    }
    t
}

fn in_interval(lower: &Composition, x: &Composition) -> bool {
    csum_le(lower.parts(), x.parts()) && csum_le(x.parts(), lower.qshift().parts())
}

/// Merging positions `i, i+1` of an element of `[a, qshift a]` lands in
/// `[s̃_i a, qshift s̃_i a]` when `a_i = 0`.
fn shift_lemma_merge(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for a in compositions(b) {
        for i in 1..a.len() {
            if a.parts()[i - 1] != 0 {
                continue;
            }
            let moved = a.quasi_swapped(i);
            for beta in a.atom_interval() {
                let mut g = beta.clone().into_parts();
                g[i - 1] += g[i];
                g[i] = 0;
                let gamma = Composition::new(g);
                let ok = in_interval(&moved, &gamma);
                t.record(ok, || vec![a.clone(), beta.clone()], || format!("i={i}"));
            }
        }
    }
    t
}

/// Splitting position `i` of an element of `[s̃_i a, qshift s̃_i a]` not
/// killed by `θ̃_i` lands in `[a, qshift a]` when `a_i = 0`.
fn shift_lemma_split(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for a in compositions(b) {
        for i in 1..a.len() {
            if a.parts()[i - 1] != 0 {
                continue;
            }
            for gamma in a.quasi_swapped(i).atom_interval() {
                let g = gamma.parts();
                if g[i - 1] == 0 || g[i] != 0 {
                    continue;
                }
                for keep in 0..g[i - 1] {
                    let mut parts = g.to_vec();
                    parts[i] = g[i - 1] - keep;
                    parts[i - 1] = keep;
                    let beta = Composition::new(parts);
                    let ok = in_interval(&a, &beta);
                    t.record(ok, || vec![a.clone(), gamma.clone(), beta.clone()], || format!("i={i}"));
                }
            }
        }
    }
    t
}

/// Strong compositions `a` with `ℓ(a) ≤ n ≤ max_length`.
fn gessel_instances(b: &Bounds) -> Vec<(Composition, usize)> {
    let mut out = Vec::new();
    for w in 0..=b.max_weight {
        for a in strong_compositions(w) {
            for n in a.len().max(1)..=b.max_length {
                out.push((a.clone(), n));
            }
        }
    }
    out
}

/// Chains, `π̃_{w₀}` and the `θ̃` sum agree, and equal the slide of the
/// zero-prepended index.
fn gessel_methods(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (a, n) in gessel_instances(b) {
        let chains = gessel(&a, n, GesselMethod::Combinatorial).expect("strong and short enough");
        let mut prepended = vec![0; n - a.len()];
        prepended.extend(a.parts());
        let checks = [
            ("operator", gessel(&a, n, GesselMethod::Operator).expect("valid")),
            ("theta sum", gessel(&a, n, GesselMethod::ThetaSum).expect("valid")),
            ("slide", basis::slide(&Composition::new(prepended), Method::Combinatorial)),
        ];
        for (label, p) in checks {
            t.record(p == chains, || vec![a.clone(), Composition::zero(n)], || format!("{label} differs"));
        }
    }
    t
}

fn gessel_fatom_expansion(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (a, n) in gessel_instances(b) {
        let e = gessel_to_fatoms(&a, n).expect("valid");
        let f = gessel(&a, n, GesselMethod::Combinatorial).expect("valid");
        let ok = e == expand_fatom(&f) && e.reconstruct() == f;
        t.record(ok, || vec![a.clone(), Composition::zero(n)], || "fiber sum differs".into());
    }
    t
}

fn slide_fatom_expansion(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for a in compositions(b) {
        let s = basis::slide(&a, Method::Combinatorial);
        let e = slide_to_fatoms(&a);
        let ok = e == expand_fatom(&s) && e.reconstruct() == s;
        t.record(ok, || vec![a.clone()], || "dominance fiber sum differs".into());
    }
    t
}

/// `x^a` has coefficient 1 in the element indexed by `a`, and every other
/// monomial strictly dominates `a`.
fn leading_monomial(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for a in compositions(b) {
        for family in [BasisFamily::Fatom, BasisFamily::Slide, BasisFamily::Key] {
            let p = element(family, &a);
            let ok = p.coefficient_of(&a) == BigInt::from(1)
                && p.terms().all(|(m, _)| *m == a || csum_le(a.parts(), m.parts()));
            t.record(ok, || vec![a.clone()], || family.to_string());
        }
    }
    t
}

/// Rank of a 0/±1 integer matrix modulo a large prime. A full rank modulo
/// `p` implies full rank over the rationals.
fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    const P: u64 = (1 << 61) - 1;
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % P as u128) as u64;
    let pow = |mut x: u64, mut e: u64| {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, x);
            }
            x = mul(x, x);
            e >>= 1;
        }
        r
    };
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = pow(rows[rank][col], P - 2);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = mul(rows[r][col], inv);
                let pivot_row = rows[rank].clone();
                for (x, &p) in rows[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x = (*x + P - mul(f, p)) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Fundamental atoms and slides of each weight span the monomials of that
/// weight.
fn basis_rank(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for n in 1..=b.max_length {
        for w in 0..=b.max_weight {
            let monos = weak_compositions(w, n);
            for family in [BasisFamily::Fatom, BasisFamily::Slide] {
                let rows: Vec<Vec<u64>> = monos
                    .iter()
                    .map(|a| {
                        let p = element(family, a);
                        monos.iter().map(|m| u64::from(!p.coefficient_of(m).eq(&BigInt::from(0)))).collect()
                    })
                    .collect();
                let rank = rank_mod_p(rows);
                t.record(
                    rank == monos.len(),
                    || vec![Composition::zero(n)],
                    || format!("{family} weight {w}: rank {rank} of {}", monos.len()),
                );
            }
        }
    }
    t
}

/// Random combinations of up to five elements expand back to themselves.
fn expansion_round_trip(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    if b.max_length == 0 {
        return t;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..b.random_instances {
        let n = rng.gen_range(1..=b.max_length);
        for family in [BasisFamily::Fatom, BasisFamily::Slide] {
            let mut want = BasisExpansion::new(family, n);
            for _ in 0..rng.gen_range(1..=5) {
                let w = rng.gen_range(0..=b.max_weight);
                want.add(random_composition(&mut rng, n, w), BigInt::from(rng.gen_range(-3i64..=3)));
            }
            let p = want.reconstruct();
            let got = if family == BasisFamily::Fatom { expand_fatom(&p) } else { expand_slide(&p) };
            let inputs: Vec<Composition> = want.terms().into_iter().map(|(a, _)| a.clone()).collect();
            t.record(got == want, || inputs, || family.to_string());
        }
    }
    t
}

// ----- products -----

fn product_slide_slide(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (x, y) in pairs(b) {
        let ok = slide_product_ok(&x, &y);
        t.record(ok, || vec![x.clone(), y.clone()], || "shuffle set expansion differs".into());
    }
    t
}

fn slide_product_ok(x: &Composition, y: &Composition) -> bool {
    let p = basis::slide(x, Method::Combinatorial).multiply(&basis::slide(y, Method::Combinatorial)).expect("same ring");
    slide_product(x, y).expect("same length").reconstruct() == p
}

fn product_slide_fatom(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (x, y) in pairs(b) {
        let (ok, detail) = slide_fatom_ok(&x, &y);
        t.record(ok, || vec![x.clone(), y.clone()], || detail.into());
    }
    t
}

fn slide_fatom_ok(x: &Composition, y: &Composition) -> (bool, &'static str) {
    let p = basis::slide(x, Method::Combinatorial).multiply(&basis::fatom(y, Method::Combinatorial)).expect("same ring");
    let e = slide_times_fatom(x, y).expect("same length");
    if e.reconstruct() != p {
        (false, "fundamental shuffle expansion differs")
    } else if !e.is_nonnegative() {
        (false, "negative coefficient")
    } else {
        (true, "")
    }
}

fn product_fatom_fatom(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (x, y) in pairs(b) {
        let ok = fatom_product_ok(&x, &y);
        t.record(ok, || vec![x.clone(), y.clone()], || "multiset partition expansion differs".into());
    }
    t
}

fn fatom_product_ok(x: &Composition, y: &Composition) -> bool {
    let p = basis::fatom(x, Method::Combinatorial).multiply(&basis::fatom(y, Method::Combinatorial)).expect("same ring");
    fatom_product(x, y).expect("same length").reconstruct() == p
}

/// All three rules on random pairs one step beyond the exhaustive bounds.
fn product_random(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    if b.max_length == 0 {
        return t;
    }
    let lengths = b.max_length.min(3)..=b.max_length + 1;
    let weights = 1..=(b.max_weight / 2 + 1).max(1);
    for (x, y) in random_pairs(SEED, b.random_instances, lengths, weights) {
        let inputs = || vec![x.clone(), y.clone()];
        t.record(slide_product_ok(&x, &y), inputs, || "slide × slide".into());
        t.record(slide_fatom_ok(&x, &y).0, inputs, || "slide × fatom".into());
        t.record(fatom_product_ok(&x, &y), inputs, || "fatom × fatom".into());
    }
    t
}

fn fundamental_shape(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (x, y) in pairs(b) {
        for s in fundamental_shuffle_set(&x, &y).expect("same length") {
            let ok = is_fundamental_shape(&s, x.len());
            t.record(ok, || vec![x.clone(), y.clone()], || s.blocks_string());
        }
    }
    t
}

fn cancellation_free(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (x, y) in pairs(b) {
        for (w, (plus, minus)) in fatom_product_contributions(&x, &y).expect("same length") {
            let ok = plus == 0 || minus == 0;
            t.record(ok, || vec![x.clone(), y.clone(), w.clone()], || format!("+{plus} -{minus}"));
        }
    }
    t
}

/// A first factor whose zeros are all trailing gives a positive product.
fn strong_positivity(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (x, y) in pairs(b) {
        let strong_prefix = x.parts().iter().skip_while(|&&p| p != 0).all(|&p| p == 0);
        if strong_prefix {
            let ok = atom_multiset_partitions(&x, &y).expect("same length").iter().all(|s| s.sign() > 0);
            t.record(ok, || vec![x.clone(), y.clone()], || "negative partition".into());
        }
    }
    t
}

fn product_commutativity(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for (x, y) in pairs(b) {
        let ok = fatom_product(&x, &y).expect("same length").reconstruct()
            == fatom_product(&y, &x).expect("same length").reconstruct();
        t.record(ok, || vec![x.clone(), y.clone()], || "products differ".into());
    }
    t
}

// ----- classical positivity -----

fn schubert_key_positivity(b: &Bounds) -> Tally {
    let mut t = Tally::default();
    for n in 1..=b.max_length.min(4) {
        for w in Permutation::all(n) {
            let s = basis::schubert(&w);
            let e = expand_key(&s);
            let ok = e.is_nonnegative() && e.reconstruct() == s;
            t.record(ok, || vec![Composition::new(w.one_line().iter().map(|&v| v as u32).collect())], || {
                format!("S[{w}] = {e}")
            });
        }
    }
    t
}

fn fatom_positivity(b: &Bounds, family: BasisFamily) -> Tally {
    let mut t = Tally::default();
    for a in compositions(b) {
        let e = expansion::expand_fatom(&element(family, &a));
        t.record(e.is_nonnegative(), || vec![a.clone()], || format!("{family}: {e}"));
    }
    t
}
