//! Integer partitions confined to a rectangle, strip predicates, and
//! Littlewood-Richardson coefficients.
//!
//! A partition in the `(k+1) x (n-k)` box indexes a Schubert class on G(k,n);
//! the LR coefficients computed here are the structure constants of the Chow
//! ring built in [`crate::chow`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. Trailing zeros are
/// stripped on construction, so equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(r)`; empty when `r == 0`.
    pub fn row(r: usize) -> Self {
        if r == 0 {
            Self::empty()
        } else {
            Partition(vec![r])
        }
    }

    /// The one-column partition `(1^r)`.
    pub fn column(r: usize) -> Self {
        Partition(vec![1; r])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Young diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in(&self, shape: BoxShape) -> bool {
        self.len() <= shape.rows && self.part(0) <= shape.cols
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition(parts)
    }

    /// Rotated box complement: `mu_i = cols - lambda_{rows+1-i}`.
    pub fn complement(&self, shape: BoxShape) -> Result<Partition> {
        shape.check(self)?;
        let parts = (0..shape.rows)
            .map(|i| shape.cols - self.part(shape.rows - 1 - i))
            .collect();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A `rows x cols` rectangle of boxes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BoxShape {
    pub rows: usize,
    pub cols: usize,
}

impl BoxShape {
    pub fn new(rows: usize, cols: usize) -> Self {
        BoxShape { rows, cols }
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    /// The partition filling the whole box.
    pub fn full(&self) -> Partition {
        Partition(if self.cols == 0 {
            Vec::new()
        } else {
            vec![self.cols; self.rows]
        })
    }

    pub fn check(&self, partition: &Partition) -> Result<()> {
        if partition.fits_in(*self) {
            Ok(())
        } else {
            Err(Error::OutsideBox {
                partition: partition.clone(),
                shape: *self,
            })
        }
    }
}

impl fmt::Display for BoxShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// All partitions of `degree` fitting in `shape`, in lexicographically
/// descending order.
pub fn enumerate_partitions(shape: BoxShape, degree: usize) -> Vec<Partition> {
    fn fill(
        max_part: usize,
        rows_left: usize,
        remaining: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if rows_left == 0 || max_part * rows_left < remaining {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            fill(p, rows_left - 1, remaining - p, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if degree <= shape.area() {
        fill(shape.cols, shape.rows, degree, &mut Vec::new(), &mut out);
    }
    out
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn complement(lambda: &Partition, shape: BoxShape) -> Result<Partition> {
    lambda.complement(shape)
}

/// `mu / lambda` is a skew shape with at most one box in each column.
pub fn is_horizontal_strip(mu: &Partition, lambda: &Partition) -> bool {
    lambda.is_contained_in(mu) && (0..mu.len()).all(|i| mu.part(i + 1) <= lambda.part(i))
}

/// `mu / lambda` is a skew shape with at most one box in each row.
pub fn is_vertical_strip(mu: &Partition, lambda: &Partition) -> bool {
    lambda.is_contained_in(mu) && (0..mu.len()).all(|i| mu.part(i) - lambda.part(i) <= 1)
}

/// The Littlewood-Richardson coefficient `c^nu_{lambda, mu}`, counted as the
/// number of semistandard fillings of `nu / lambda` with content `mu` whose
/// reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !lambda.is_contained_in(nu) {
        return 0;
    }
    if !mu.is_contained_in(nu) {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }

    // Skew cells in reading order: rows top to bottom, each row right to left.
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();

    let mut search = LrSearch {
        lambda,
        content: mu.parts(),
        cells: &cells,
        grid: vec![vec![0u8; nu.part(0)]; nu.len()],
        counts: vec![0; mu.len() + 1],
    };
    search.count(0)
}

struct LrSearch<'a> {
    lambda: &'a Partition,
    content: &'a [usize],
    cells: &'a [(usize, usize)],
    grid: Vec<Vec<u8>>,
    counts: Vec<usize>,
}

impl LrSearch<'_> {
    fn count(&mut self, pos: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(pos) else {
            return 1;
        };
        // Weakly increasing along rows: bounded above by the entry to the right.
        let upper = match self.grid[r].get(c + 1) {
            Some(&right) if right > 0 => right as usize,
            _ => self.content.len(),
        };
        // Strictly increasing down columns, unless the cell above is in lambda.
        let lower = if r > 0 && c >= self.lambda.part(r - 1) {
            self.grid[r - 1][c] as usize + 1
        } else {
            1
        };

        let mut total = 0;
        for v in lower..=upper {
            if self.counts[v] >= self.content[v - 1] {
                continue;
            }
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[r][c] = v as u8;
            total += self.count(pos + 1);
            self.grid[r][c] = 0;
            self.counts[v] -= 1;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute force: every sequence in [0, cols]^rows, kept if weakly decreasing.
    fn brute_force_partitions(shape: BoxShape, degree: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let total = (shape.cols + 1).pow(shape.rows as u32);
        for code in 0..total {
            let mut seq = Vec::with_capacity(shape.rows);
            let mut c = code;
            for _ in 0..shape.rows {
                seq.push(c % (shape.cols + 1));
                c /= shape.cols + 1;
            }
            if seq.iter().sum::<usize>() == degree {
                if let Ok(part) = Partition::new(seq) {
                    out.push(part);
                }
            }
        }
        out.sort();
        out.dedup();
        out.reverse();
        out
    }

    #[test]
    fn construction_normalizes_and_validates() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert_eq!(p(&[0, 0]), Partition::empty());
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::NotWeaklyDecreasing(_))
        ));
        assert_eq!(p(&[3, 1]).weight(), 4);
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }

    #[test]
    fn enumeration_examples() {
        let shape = BoxShape::new(2, 3);
        assert_eq!(enumerate_partitions(shape, 0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(shape, 6), vec![p(&[3, 3])]);
        assert_eq!(enumerate_partitions(shape, 2), vec![p(&[2]), p(&[1, 1])]);
        assert!(enumerate_partitions(shape, 7).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for rows in 1..=4 {
            for cols in 1..=5 {
                let shape = BoxShape::new(rows, cols);
                for degree in 0..=shape.area() + 1 {
                    assert_eq!(
                        enumerate_partitions(shape, degree),
                        brute_force_partitions(shape, degree),
                        "{shape} degree {degree}"
                    );
                }
            }
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn complements() {
        let shape = BoxShape::new(2, 3);
        assert_eq!(complement(&p(&[3, 1]), shape).unwrap(), p(&[2]));
        assert_eq!(complement(&p(&[3, 3]), shape).unwrap(), Partition::empty());
        assert_eq!(complement(&p(&[2, 1]), shape).unwrap(), p(&[2, 1]));
        assert!(matches!(
            complement(&p(&[4]), shape),
            Err(Error::OutsideBox { .. })
        ));
        assert!(complement(&p(&[1, 1, 1]), shape).is_err());
    }

    #[test]
    fn strips() {
        assert!(is_horizontal_strip(&p(&[3, 1]), &p(&[2])));
        assert!(!is_horizontal_strip(&p(&[2, 2]), &p(&[1, 1])));
        assert!(is_vertical_strip(&p(&[2, 2]), &p(&[1, 1])));
        assert!(!is_vertical_strip(&p(&[3, 1]), &p(&[1])));
        assert!(!is_horizontal_strip(&p(&[2]), &p(&[3])));
    }

    #[test]
    fn lr_examples() {
        let lam = p(&[2, 1]);
        for nu in enumerate_partitions(BoxShape::new(3, 3), 3) {
            let expected = u64::from(nu == lam);
            assert_eq!(lr_coefficient(&lam, &Partition::empty(), &nu), expected);
        }
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 3])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1]), &p(&[3, 1])), 1);
        // the classic multiplicity-two coefficient
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2, 2])), 0);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[2, 2])), 0);
    }

    #[test]
    fn lr_pieri_special_cases() {
        let shape = BoxShape::new(4, 4);
        for lw in 0..=5 {
            for lambda in enumerate_partitions(shape, lw) {
                for r in 1..=3 {
                    for nu in enumerate_partitions(shape, lw + r) {
                        assert_eq!(
                            lr_coefficient(&lambda, &Partition::row(r), &nu),
                            u64::from(is_horizontal_strip(&nu, &lambda)),
                        );
                        assert_eq!(
                            lr_coefficient(&lambda, &Partition::column(r), &nu),
                            u64::from(is_vertical_strip(&nu, &lambda)),
                        );
                    }
                }
            }
        }
    }
}
