//! Change of basis into the fundamental atom, fundamental slide and key
//! bases, plus the closed-form expansions between families.
//!
//! All three target bases are unitriangular with respect to dominance: the
//! element indexed by `a` contains `x^a` with coefficient 1 and every other
//! monomial strictly dominates `a`. Repeatedly cancelling the csum-lex
//! smallest remaining monomial therefore recovers the unique expansion.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::basis::{self, BasisFamily, Method};
use crate::composition::{cmp_csum_lex, weak_compositions, Composition};
use crate::error::{Error, Result};
use crate::polynomial::{coeff_serde, write_sign, Polynomial};

/// A finite integer combination of basis elements of one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    family: BasisFamily,
    nvars: usize,
    coeffs: BTreeMap<Composition, BigInt>,
}

impl BasisExpansion {
    pub fn new(family: BasisFamily, nvars: usize) -> Self {
        BasisExpansion { family, nvars, coeffs: BTreeMap::new() }
    }

    pub fn from_terms<I, C>(family: BasisFamily, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, C)>,
        C: Into<BigInt>,
    {
        let mut e = BasisExpansion::new(family, nvars);
        for (a, c) in terms {
            if a.len() != nvars {
                return Err(Error::LengthMismatch { left: nvars, right: a.len() });
            }
            e.add(a, c.into());
        }
        Ok(e)
    }

    pub fn family(&self) -> BasisFamily {
        self.family
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, a: &Composition) -> BigInt {
        self.coeffs.get(a).cloned().unwrap_or_default()
    }

    /// Adds `c` to the coefficient of `a`, dropping it if it becomes zero.
    pub fn add(&mut self, a: Composition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(a.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&a);
        }
    }

    /// Terms in csum-lexicographic order of their indices.
    pub fn terms(&self) -> Vec<(&Composition, &BigInt)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by(|x, y| cmp_csum_lex(x.0, y.0));
        v
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Sums the basis elements with their coefficients.
    pub fn reconstruct(&self) -> Polynomial {
        let mut p = Polynomial::zero(self.nvars);
        for (a, c) in &self.coeffs {
            p.add_scaled(&element(self.family, a), c).expect("indices have nvars parts");
        }
        p
    }

    pub fn to_record(&self) -> ExpansionRecord {
        ExpansionRecord {
            family: self.family,
            terms: self
                .terms()
                .into_iter()
                .map(|(a, c)| IndexedCoeff { index: a.parts().to_vec(), coeff: c.clone() })
                .collect(),
        }
    }
}

impl fmt::Display for BasisExpansion {
    /// Largest index (csum-lex) first, e.g. `A[2,0] + A[0,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let sym = self.family.symbol();
        for (k, (a, c)) in self.terms().into_iter().rev().enumerate() {
            write_sign(f, k, c)?;
            let m = c.abs();
            if !m.is_one() {
                write!(f, "{m}*")?;
            }
            write!(f, "{sym}[{a}]")?;
        }
        Ok(())
    }
}

/// Structured form of an expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub family: BasisFamily,
    pub terms: Vec<IndexedCoeff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedCoeff {
    pub index: Vec<u32>,
    #[serde(with = "coeff_serde")]
    pub coeff: BigInt,
}

impl ExpansionRecord {
    pub fn into_expansion(self) -> Result<BasisExpansion> {
        let nvars = self.terms.first().map_or(0, |t| t.index.len());
        BasisExpansion::from_terms(
            self.family,
            nvars,
            self.terms.into_iter().map(|t| (Composition::new(t.index), t.coeff)),
        )
    }
}

/// The basis element of a composition-indexed family.
///
/// # Panics
/// For families not indexed by weak compositions (Schubert, Schur, Gessel).
pub fn element(family: BasisFamily, a: &Composition) -> Polynomial {
    match family {
        BasisFamily::Fatom => basis::fatom(a, Method::Combinatorial),
        BasisFamily::Slide => basis::slide(a, Method::Combinatorial),
        BasisFamily::Key => basis::key(a),
        BasisFamily::Atom => basis::atom(a),
        other => panic!("{other} is not indexed by weak compositions"),
    }
}

/// Result of a greedy change of basis.
#[derive(Clone, Debug)]
pub struct GreedyOutcome {
    pub expansion: BasisExpansion,
    /// Number of subtraction steps.
    pub steps: usize,
    /// Csum-lex pivots in the order they were eliminated.
    pub pivots: Vec<Composition>,
}

/// Expands `p` in a unitriangular basis by repeatedly removing the csum-lex
/// smallest monomial.
pub fn expand_greedy(p: &Polynomial, family: BasisFamily) -> Result<GreedyOutcome> {
    let mut rest = p.clone();
    let mut expansion = BasisExpansion::new(family, p.nvars());
    let mut pivots = Vec::new();
    while let Some(pivot) = rest.terms().map(|(a, _)| a).min_by(|x, y| cmp_csum_lex(x, y)).cloned() {
        let c = rest.coefficient_of(&pivot);
        let b = element(family, &pivot);
        if !b.coefficient_of(&pivot).is_one() {
            return Err(Error::NotUnitriangular(format!("{}[{pivot}]", family.symbol())));
        }
        rest.add_scaled(&b, &-&c)?;
        expansion.add(pivot.clone(), c);
        pivots.push(pivot);
    }
    Ok(GreedyOutcome { steps: pivots.len(), expansion, pivots })
}

pub fn expand_fatom(p: &Polynomial) -> BasisExpansion {
    expand_greedy(p, BasisFamily::Fatom).expect("fundamental atoms are unitriangular").expansion
}

pub fn expand_slide(p: &Polynomial) -> BasisExpansion {
    expand_greedy(p, BasisFamily::Slide).expect("slide polynomials are unitriangular").expansion
}

pub fn expand_key(p: &Polynomial) -> BasisExpansion {
    expand_greedy(p, BasisFamily::Key).expect("key polynomials are unitriangular").expansion
}

/// `𝔉_a = Σ Ã_b` over `b ⊵ a` with `flat(b) = flat(a)`.
pub fn slide_to_fatoms(a: &Composition) -> BasisExpansion {
    let flat = a.flat();
    let mut e = BasisExpansion::new(BasisFamily::Fatom, a.len());
    for b in weak_compositions(a.weight(), a.len()) {
        if b.flat() == flat && a.dominated_by(&b).expect("same weight and length") {
            e.add(b, BigInt::one());
        }
    }
    e
}

/// `F_a(x₁, …, x_n) = Σ Ã_b` over length-`n` weak compositions `b` with
/// `flat(b) = a`.
pub fn gessel_to_fatoms(a: &Composition, n: usize) -> Result<BasisExpansion> {
    if !a.is_strong() {
        return Err(Error::NotStrong(a.to_string()));
    }
    let strong = a.strong_parts();
    if strong.len() > n {
        return Err(Error::TooLong { composition: a.to_string(), nvars: n });
    }
    let mut e = BasisExpansion::new(BasisFamily::Fatom, n);
    // choose the positions of the nonzero parts
    fn place(strong: &[u32], start: usize, n: usize, cur: &mut Vec<u32>, e: &mut BasisExpansion) {
        let Some((&first, rest)) = strong.split_first() else {
            e.add(Composition::new(cur.clone()), BigInt::one());
            return;
        };
        for pos in start..=n - 1 - rest.len() {
            cur[pos] = first;
            place(rest, pos + 1, n, cur, e);
            cur[pos] = 0;
        }
    }
    place(&strong, 0, n, &mut vec![0; n], &mut e);
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{gessel, key, schubert, GesselMethod};
    use crate::composition::weak_compositions_up_to;
    use crate::permutation::Permutation;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn expansion(family: BasisFamily, terms: &[(&[u32], i64)]) -> BasisExpansion {
        let n = terms[0].0.len();
        BasisExpansion::from_terms(family, n, terms.iter().map(|(a, k)| (c(a), *k))).unwrap()
    }

    #[test]
    fn expand_fatom_examples() {
        let a = c(&[0, 2, 1]);
        assert_eq!(expand_fatom(&element(BasisFamily::Fatom, &a)), expansion(BasisFamily::Fatom, &[(&[0, 2, 1], 1)]));
        let s = basis::slide(&c(&[0, 2]), Method::Operator);
        assert_eq!(expand_fatom(&s), expansion(BasisFamily::Fatom, &[(&[2, 0], 1), (&[0, 2], 1)]));
        let k = expand_fatom(&key(&c(&[0, 2])));
        assert!(k.is_nonnegative());
        assert_eq!(k.reconstruct(), key(&c(&[0, 2])));
    }

    #[test]
    fn expand_slide_examples() {
        let a = c(&[1, 0, 2]);
        assert_eq!(expand_slide(&element(BasisFamily::Slide, &a)), expansion(BasisFamily::Slide, &[(&[1, 0, 2], 1)]));
        assert_eq!(
            expand_slide(&Polynomial::monomial(&c(&[1, 1]))),
            expansion(BasisFamily::Slide, &[(&[1, 1], 1)])
        );
        let f2 = gessel(&c(&[2]), 2, GesselMethod::Combinatorial).unwrap();
        assert_eq!(expand_slide(&f2), expansion(BasisFamily::Slide, &[(&[0, 2], 1)]));
    }

    #[test]
    fn slide_to_fatoms_examples() {
        assert_eq!(slide_to_fatoms(&c(&[0, 2])), expansion(BasisFamily::Fatom, &[(&[0, 2], 1), (&[2, 0], 1)]));
        assert_eq!(slide_to_fatoms(&c(&[2, 1])), expansion(BasisFamily::Fatom, &[(&[2, 1], 1)]));
        let want = expansion(BasisFamily::Fatom, &[(&[0, 1, 1], 1), (&[1, 0, 1], 1), (&[1, 1, 0], 1)]);
        assert_eq!(slide_to_fatoms(&c(&[0, 1, 1])), want);
        assert_eq!(expand_fatom(&basis::slide(&c(&[0, 1, 1]), Method::Operator)), want);
    }

    #[test]
    fn slide_to_fatoms_matches_greedy() {
        for n in 1..=4 {
            for a in weak_compositions_up_to(5, n) {
                let s = basis::slide(&a, Method::Combinatorial);
                assert_eq!(slide_to_fatoms(&a), expand_fatom(&s), "{a}");
            }
        }
    }

    #[test]
    fn gessel_to_fatoms_examples() {
        let e = gessel_to_fatoms(&c(&[2]), 2).unwrap();
        assert_eq!(e, expansion(BasisFamily::Fatom, &[(&[2, 0], 1), (&[0, 2], 1)]));
        assert_eq!(e.reconstruct(), gessel(&c(&[2]), 2, GesselMethod::Combinatorial).unwrap());
        assert_eq!(
            gessel_to_fatoms(&c(&[1]), 3).unwrap(),
            expansion(BasisFamily::Fatom, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)])
        );
        let e = gessel_to_fatoms(&c(&[1, 2]), 3).unwrap();
        assert_eq!(e, expansion(BasisFamily::Fatom, &[(&[1, 2, 0], 1), (&[1, 0, 2], 1), (&[0, 1, 2], 1)]));
        assert_eq!(e, expand_fatom(&gessel(&c(&[1, 2]), 3, GesselMethod::Combinatorial).unwrap()));
        assert!(gessel_to_fatoms(&c(&[0, 1]), 3).is_err());
        assert!(gessel_to_fatoms(&c(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn greedy_steps_are_bounded_and_increasing() {
        let p = basis::slide(&c(&[0, 1, 2]), Method::Combinatorial)
            .multiply(&basis::fatom(&c(&[1, 0, 1]), Method::Combinatorial))
            .unwrap();
        let out = expand_greedy(&p, BasisFamily::Fatom).unwrap();
        let interval_bound = weak_compositions(5, 3).len();
        assert!(out.steps <= p.len() * interval_bound);
        assert!(out.pivots.windows(2).all(|w| cmp_csum_lex(&w[0], &w[1]).is_lt()));
        assert_eq!(out.expansion.reconstruct(), p);
    }

    #[test]
    fn schubert_is_key_positive_in_s3() {
        for w in Permutation::all(3) {
            let e = expand_key(&schubert(&w));
            assert!(e.is_nonnegative(), "{w}");
            assert_eq!(e.reconstruct(), schubert(&w));
        }
    }

    #[test]
    fn display_and_records() {
        let e = expansion(BasisFamily::Fatom, &[(&[0, 2], 1), (&[2, 0], 1)]);
        assert_eq!(e.to_string(), "A[2,0] + A[0,2]");
        let json = serde_json::to_string(&e.to_record()).unwrap();
        assert_eq!(json, r#"{"family":"FATOM","terms":[{"index":[0,2],"coeff":1},{"index":[2,0],"coeff":1}]}"#);
        let back: ExpansionRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_expansion().unwrap(), e);
        let neg = expansion(BasisFamily::Slide, &[(&[1, 1], -2)]);
        assert_eq!(neg.to_string(), "-2*F[1,1]");
        assert_eq!(BasisExpansion::new(BasisFamily::Fatom, 2).to_string(), "0");
    }
}
