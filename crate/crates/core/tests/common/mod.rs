//! Independent oracles shared by the integration tests. Nothing here calls
//! the Littlewood-Richardson engine or the Riemann-Roch code under test.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use schubert::{ChowClass, GrassmannRing, Partition};

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Partitions with at most `rows` parts and parts at most `cols`, every size.
pub fn box_partitions(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if prefix.len() == rows {
            return;
        }
        for part in 1..=max {
            prefix.push(part);
            go(rows, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Pieri rule inside a box: all `nu` with `nu / lambda` a horizontal strip of
/// size `i`.
pub fn pieri(lambda: &[usize], i: usize, rows: usize, cols: usize) -> Vec<Vec<usize>> {
    let target: usize = lambda.iter().sum::<usize>() + i;
    let part = |p: &[usize], j: usize| p.get(j).copied().unwrap_or(0);
    box_partitions(rows, cols)
        .into_iter()
        .filter(|nu| nu.iter().sum::<usize>() == target)
        .filter(|nu| {
            (0..rows).all(|j| {
                let upper = if j == 0 { cols } else { part(lambda, j - 1) };
                part(lambda, j) <= part(nu, j) && part(nu, j) <= upper
            })
        })
        .collect()
}

type Expansion = BTreeMap<Vec<usize>, i64>;

fn pieri_apply(x: &Expansion, i: usize, rows: usize, cols: usize) -> Expansion {
    let mut out = Expansion::new();
    for (lambda, c) in x {
        for nu in pieri(lambda, i, rows, cols) {
            *out.entry(nu).or_default() += c;
        }
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, n - 1);
            // moving n-1 from the end to `pos` costs (len - pos) transpositions
            let s = if (perm.len() - pos) % 2 == 0 {
                sign
            } else {
                -sign
            };
            out.push((p, s));
        }
    }
    out
}

/// `sigma_lambda * sigma_mu` in G(k,n), expanding `sigma_mu` by the
/// Jacobi-Trudi determinant in the special classes `sigma_(i)` and applying
/// the Pieri rule one factor at a time.
pub fn pieri_product(lambda: &[usize], mu: &[usize], k: usize, n: usize) -> Expansion {
    let (rows, cols) = (k + 1, n - k);
    let l = mu.len();
    let mut total = Expansion::new();
    for (perm, sign) in permutations(l) {
        let mut indices = Vec::new();
        let mut vanishes = false;
        for (r, &c) in perm.iter().enumerate() {
            let idx = mu[r] as i64 - r as i64 + c as i64;
            if idx < 0 {
                vanishes = true;
                break;
            }
            indices.push(idx as usize);
        }
        if vanishes {
            continue;
        }
        let mut x = Expansion::from([(lambda.to_vec(), 1)]);
        for i in indices {
            x = pieri_apply(&x, i, rows, cols);
        }
        for (nu, c) in x {
            *total.entry(nu).or_default() += sign * c;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

pub fn class_as_expansion(x: &ChowClass) -> Expansion {
    x.terms()
        .map(|(p, c)| {
            assert!(c.is_integer());
            (p.parts().to_vec(), i64::try_from(c.to_integer()).unwrap())
        })
        .collect()
}

pub fn catalan(m: u64) -> u64 {
    // binom(2m, m) / (m + 1)
    (0..m).fold(1u64, |acc, i| acc * (2 * m - i) / (i + 1)) / (m + 1)
}

/// Degree of G(1,n) in its Plucker embedding: the Catalan number C(n-1).
pub fn plucker_degree_g1(n: u64) -> u64 {
    catalan(n - 1)
}

/// Weyl dimension polynomial of GL_N at an arbitrary integer weight. By Bott's
/// theorem this is the Euler characteristic of the homogeneous bundle with
/// that highest weight on the Grassmannian.
pub fn weyl_dimension(weight: &[i64]) -> BigRational {
    let n = weight.len();
    let mut num = 1i64;
    let mut den = 1i64;
    for i in 0..n {
        for j in i + 1..n {
            num *= weight[i] - weight[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    frac(num, den)
}

/// Euler characteristic of a rank-two bundle on P3 with Chern classes
/// `c1, c2`, from Riemann-Roch written out by hand.
pub fn chi_p3_closed_form(c1: i64, c2: i64) -> BigRational {
    frac(c1 * c1 * c1 - 3 * c1 * c2, 6) + int(c1 * c1 - 2 * c2) + frac(11 * c1, 6) + int(2)
}

pub fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn random_class(ring: &std::sync::Arc<GrassmannRing>, coeffs: &[i64]) -> ChowClass {
    let terms = ring
        .basis()
        .iter()
        .cloned()
        .zip(coeffs.iter().map(|&c| int(c)))
        .filter(|(_, c)| !c.is_zero());
    ChowClass::from_terms(ring, terms).unwrap()
}
