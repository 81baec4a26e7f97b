//! A deliberately naive reference implementation: dense enumeration of weak
//! compositions, polynomials as exponent maps with `i64` coefficients, and
//! change of basis by repeated subtraction. Nothing here calls into the
//! library's combinatorics.

#![allow(dead_code)]

use std::collections::BTreeMap;

pub type Poly = BTreeMap<Vec<u32>, i64>;

pub fn comps(weight: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if weight == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=weight).rev() {
        for mut rest in comps(weight - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn comps_up_to(max_weight: u32, n: usize) -> Vec<Vec<u32>> {
    (0..=max_weight).flat_map(|w| comps(w, n)).collect()
}

pub fn csum(a: &[u32]) -> Vec<u32> {
    a.iter()
        .scan(0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect()
}

/// `a ⊴ b`.
pub fn dominated(a: &[u32], b: &[u32]) -> bool {
    csum(a).iter().zip(csum(b)).all(|(x, y)| *x <= y)
}

pub fn nonzero(a: &[u32]) -> Vec<u32> {
    a.iter().copied().filter(|&x| x != 0).collect()
}

/// Some grouping of consecutive parts of `fine` sums to `coarse`.
pub fn refines(fine: &[u32], coarse: &[u32]) -> bool {
    let fine_sums: Vec<u32> = csum(fine);
    let coarse_sums: Vec<u32> = csum(coarse);
    fine_sums.last() == coarse_sums.last() && coarse_sums.iter().all(|s| fine_sums.contains(s))
}

/// Fundamental shift, written from the position-set description: for each
/// nonzero position `j` whose left neighbour is zero, `w_j = 1` and the rest
/// lands one past the previous nonzero position (position 1 if none). A
/// nonzero first entry has no left neighbour and is kept.
pub fn qshift(v: &[u32]) -> Vec<u32> {
    let n = v.len();
    let support: Vec<usize> = (0..n).filter(|&j| v[j] != 0).collect();
    let mut w = vec![0u32; n];
    for (k, &j) in support.iter().enumerate() {
        let left_nonzero = j == 0 || v[j - 1] != 0;
        if left_nonzero {
            w[j] += v[j];
        } else {
            w[j] += 1;
            let target = if k == 0 { 0 } else { support[k - 1] + 1 };
            w[target] += v[j] - 1;
        }
    }
    w
}

pub fn monomial_sum(support: impl IntoIterator<Item = Vec<u32>>) -> Poly {
    support.into_iter().map(|b| (b, 1)).collect()
}

pub fn fatom(a: &[u32]) -> Poly {
    let top = qshift(a);
    let w = a.iter().sum();
    monomial_sum(comps(w, a.len()).into_iter().filter(|b| dominated(a, b) && dominated(b, &top)))
}

pub fn slide(a: &[u32]) -> Poly {
    let w = a.iter().sum();
    let flat = nonzero(a);
    monomial_sum(comps(w, a.len()).into_iter().filter(|b| dominated(a, b) && refines(&nonzero(b), &flat)))
}

/// `F_α(x₁..x_n)`: weakly increasing index chains, strictly increasing
/// after each partial sum of `α`.
pub fn gessel(alpha: &[u32], n: usize) -> Poly {
    let k: u32 = alpha.iter().sum();
    let breaks = csum(alpha);
    let mut out = Poly::new();
    let mut chain = Vec::new();
    fn go(k: u32, n: usize, breaks: &[u32], chain: &mut Vec<usize>, out: &mut Poly) {
        if chain.len() as u32 == k {
            let mut e = vec![0u32; n];
            for &i in chain.iter() {
                e[i] += 1;
            }
            *out.entry(e).or_default() += 1;
            return;
        }
        let lo = match chain.last() {
            None => 0,
            Some(&last) if breaks[..breaks.len() - 1].contains(&(chain.len() as u32)) => last + 1,
            Some(&last) => last,
        };
        for i in lo..n {
            chain.push(i);
            go(k, n, breaks, chain, out);
            chain.pop();
        }
    }
    go(k, n, &breaks, &mut chain, &mut out);
    out
}

pub fn mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::new();
    for (a, x) in p {
        for (b, y) in q {
            let e: Vec<u32> = a.iter().zip(b).map(|(s, t)| s + t).collect();
            *out.entry(e).or_default() += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Change of basis by repeatedly removing the csum-smallest monomial.
pub fn expand(p: &Poly, basis: impl Fn(&[u32]) -> Poly) -> BTreeMap<Vec<u32>, i64> {
    let mut rest = p.clone();
    rest.retain(|_, c| *c != 0);
    let mut out = BTreeMap::new();
    while let Some(pivot) = rest.keys().min_by_key(|m| csum(m)).cloned() {
        let c = rest[&pivot];
        out.insert(pivot.clone(), c);
        for (m, d) in basis(&pivot) {
            *rest.entry(m).or_default() -= c * d;
        }
        rest.retain(|_, c| *c != 0);
    }
    out
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let (f, g) = (rows[i][c], rows[r][c]);
                let pivot = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(pivot) {
                    *x = *x * g - p * f;
                }
                let d = rows[i].iter().fold(0i128, |acc, &x| gcd(acc, x.abs()));
                if d > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= d);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
