//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// A polynomial in `x₁, …, x_n`, stored as exponent vector → coefficient.
/// Zero coefficients are never stored, so equal polynomials have equal maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Composition, BigInt>,
}

/// Display order: higher total degree first, then lexicographically larger
/// exponent vectors first.
pub fn cmp_graded_lex_desc(a: &Composition, b: &Composition) -> Ordering {
    b.weight().cmp(&a.weight()).then_with(|| b.parts().cmp(a.parts()))
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(&Composition::zero(nvars))
    }

    /// `x^a` in `a.len()` variables.
    pub fn monomial(a: &Composition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(a.clone(), BigInt::one());
        Polynomial { nvars: a.len(), terms }
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, C)>,
        C: Into<BigInt>,
    {
        let mut p = Polynomial::zero(nvars);
        for (a, c) in terms {
            if a.len() != nvars {
                return Err(Error::LengthMismatch { left: nvars, right: a.len() });
            }
            p.add_term(a, c.into());
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_of(&self, a: &Composition) -> BigInt {
        self.terms.get(a).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exponent vectors with nonzero coefficient, in display order.
    pub fn support(&self) -> Vec<Composition> {
        self.sorted_terms().into_iter().map(|(a, _)| a.clone()).collect()
    }

    /// Terms in map order (lexicographic on exponents).
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in display order.
    pub fn sorted_terms(&self) -> Vec<(&Composition, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|x, y| cmp_graded_lex_desc(x.0, y.0));
        v
    }

    pub fn into_terms(self) -> BTreeMap<Composition, BigInt> {
        self.terms
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Composition::weight).max()
    }

    /// Adds `c·x^a` in place. `a` must have `nvars` parts.
    pub fn add_term(&mut self, a: Composition, c: BigInt) {
        debug_assert_eq!(a.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(a) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Polynomial, c: &BigInt) -> Result<()> {
        self.check(other)?;
        for (a, d) in &other.terms {
            self.add_term(a.clone(), d * c);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one())?;
        Ok(out)
    }

    pub fn negate(&self) -> Polynomial {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, d)| (a.clone(), d * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e: Vec<u32> = a.parts().iter().zip(b.parts()).map(|(x, y)| x + y).collect();
                out.add_term(Composition::new(e), c * d);
            }
        }
        Ok(out)
    }

    /// Applies a linear map defined on monomials and extends it linearly.
    pub fn map_linear<F>(&self, mut f: F) -> Polynomial
    where
        F: FnMut(&Composition, &BigInt, &mut Polynomial),
    {
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            f(a, c, &mut out);
        }
        out
    }

    /// Structured form: one record per term in display order.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.sorted_terms()
            .into_iter()
            .map(|(a, c)| TermRecord { exponents: a.parts().to_vec(), coeff: c.clone() })
            .collect()
    }

    pub fn from_records(nvars: usize, records: &[TermRecord]) -> Result<Polynomial> {
        Polynomial::from_terms(
            nvars,
            records.iter().map(|r| (Composition::new(r.exponents.clone()), r.coeff.clone())),
        )
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::LengthMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }
}

/// Structured form of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialRecord {
    pub nvars: usize,
    pub terms: Vec<TermRecord>,
}

impl Polynomial {
    pub fn to_record(&self) -> PolynomialRecord {
        PolynomialRecord { nvars: self.nvars, terms: self.to_records() }
    }

    pub fn from_record(r: &PolynomialRecord) -> Result<Polynomial> {
        Polynomial::from_records(r.nvars, &r.terms)
    }

    /// The same polynomial in `n ≥ nvars` variables.
    pub fn embed(&self, n: usize) -> Result<Polynomial> {
        let mut out = Polynomial::zero(n);
        for (a, c) in &self.terms {
            out.add_term(Composition::with_len(a.parts().to_vec(), n)?, c.clone());
        }
        Ok(out)
    }
}

/// One term of the structured polynomial format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: Vec<u32>,
    #[serde(with = "coeff_serde")]
    pub coeff: BigInt,
}

/// Integers that fit in an `i64` are written as JSON numbers, larger ones as
/// decimal strings. Both forms are accepted on input.
pub mod coeff_serde {
    use num_bigint::BigInt;
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;
    use std::fmt;

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(c) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&c.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = BigInt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
                Ok(v.into())
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
                Ok(v.into())
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, a: &Composition) -> fmt::Result {
    let mut first = true;
    for (i, &e) in a.parts().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// `3*x1^2*x2 - x3`; unit coefficients are omitted, `0` for the zero
    /// polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (a, c)) in self.sorted_terms().into_iter().enumerate() {
            write_sign(f, k, c)?;
            let m = c.abs();
            if a.weight() == 0 {
                write!(f, "{m}")?;
            } else {
                if !m.is_one() {
                    write!(f, "{m}*")?;
                }
                write_monomial(f, a)?;
            }
        }
        Ok(())
    }
}

/// Separator before the `k`-th term of a sum, carrying the sign of `c`.
pub(crate) fn write_sign(f: &mut fmt::Formatter<'_>, k: usize, c: &BigInt) -> fmt::Result {
    match (k, c.is_negative()) {
        (0, false) => Ok(()),
        (0, true) => f.write_str("-"),
        (_, false) => f.write_str(" + "),
        (_, true) => f.write_str(" - "),
    }
}

impl Polynomial {
    /// True when every coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }
}
