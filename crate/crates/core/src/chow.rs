//! The Chow ring of the Grassmannian G(k,n) of k-planes in P^n, in the
//! Schubert basis, with exact rational coefficients.
//!
//! Schubert classes are indexed by partitions in the `(k+1) x (n-k)` box.
//! Products use Littlewood-Richardson coefficients truncated to the box, and
//! the per-pair structure constants are memoized lazily.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, lr_coefficient, BoxShape, Partition};
use crate::rational::{int, render, Rational};

pub struct GrassmannRing {
    k: usize,
    n: usize,
    shape: BoxShape,
    dimension: usize,
    /// Basis partitions, grouped by degree (ascending), lexicographically
    /// descending within a degree.
    basis: Vec<Partition>,
    degree_offsets: Vec<usize>,
    dual: Vec<usize>,
    products: Vec<OnceLock<Vec<(usize, u64)>>>,
}

impl GrassmannRing {
    pub fn new(k: usize, n: usize) -> Result<Arc<Self>> {
        if k >= n {
            return Err(Error::InvalidGrassmannian { k, n });
        }
        let shape = BoxShape::new(k + 1, n - k);
        let dimension = shape.area();

        let mut basis = Vec::new();
        let mut degree_offsets = Vec::with_capacity(dimension + 2);
        for d in 0..=dimension {
            degree_offsets.push(basis.len());
            basis.extend(enumerate_partitions(shape, d));
        }
        degree_offsets.push(basis.len());

        let position = |p: &Partition| basis.iter().position(|q| q == p).expect("basis element");
        let dual = basis
            .iter()
            .map(|p| position(&p.complement(shape).expect("basis fits its box")))
            .collect();

        let size = basis.len();
        Ok(Arc::new(GrassmannRing {
            k,
            n,
            shape,
            dimension,
            basis,
            degree_offsets,
            dual,
            products: (0..size * size).map(|_| OnceLock::new()).collect(),
        }))
    }

    /// Projective space P^n, realized as G(0,n).
    pub fn projective_space(n: usize) -> Result<Arc<Self>> {
        Self::new(0, n)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> BoxShape {
        self.shape
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    /// Basis partitions of degree `d`.
    pub fn basis_in_degree(&self, d: usize) -> &[Partition] {
        if d > self.dimension {
            return &[];
        }
        &self.basis[self.degree_offsets[d]..self.degree_offsets[d + 1]]
    }

    pub fn same_as(&self, other: &GrassmannRing) -> bool {
        self.k == other.k && self.n == other.n
    }

    pub fn is_g14(&self) -> bool {
        self.k == 1 && self.n == 4
    }

    fn index_of(&self, p: &Partition) -> Result<usize> {
        self.shape.check(p)?;
        let d = p.weight();
        let start = self.degree_offsets[d];
        let offset = self
            .basis_in_degree(d)
            .iter()
            .position(|q| q == p)
            .expect("every partition in the box is a basis element");
        Ok(start + offset)
    }

    fn degree_of_index(&self, i: usize) -> usize {
        self.basis[i].weight()
    }

    /// LR expansion of `sigma_i * sigma_j`, restricted to the box.
    fn product(&self, i: usize, j: usize) -> &[(usize, u64)] {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        self.products[i * self.basis.len() + j].get_or_init(|| {
            let d = self.degree_of_index(i) + self.degree_of_index(j);
            if d > self.dimension {
                return Vec::new();
            }
            let (lambda, mu) = (&self.basis[i], &self.basis[j]);
            (self.degree_offsets[d]..self.degree_offsets[d + 1])
                .filter_map(|nu| {
                    let c = lr_coefficient(lambda, mu, &self.basis[nu]);
                    (c != 0).then_some((nu, c))
                })
                .collect()
        })
    }
}

impl PartialEq for GrassmannRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for GrassmannRing {}

impl fmt::Debug for GrassmannRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.n)
    }
}

pub fn sigma(ring: &Arc<GrassmannRing>, lambda: &Partition) -> Result<ChowClass> {
    let idx = ring.index_of(lambda)?;
    let mut class = ChowClass::zero(ring);
    class.coeffs[idx] = Rational::one();
    Ok(class)
}

/// The class of lines contained in a `j`-plane and meeting an `i`-plane of
/// P^n, i.e. `sigma_(n-1-i, n-j)` on G(1,n).
pub fn omega_class(ring: &Arc<GrassmannRing>, i: i64, j: i64) -> Result<ChowClass> {
    if ring.k != 1 {
        return Err(Error::WrongRing {
            expected: "a Grassmannian of lines G(1,n)",
            k: ring.k,
            n: ring.n,
        });
    }
    let n = ring.n as i64;
    if !(0 <= i && i < j && j <= n) {
        return Err(Error::InvalidOmega { i, j, n: ring.n });
    }
    let parts = vec![(n - 1 - i) as usize, (n - j) as usize];
    sigma(ring, &Partition::new(parts)?)
}

/// `∫ sigma_(1)^dim`, the degree in the Plücker embedding.
pub fn degree_of_grassmannian(ring: &Arc<GrassmannRing>) -> BigInt {
    let h = ChowClass::hyperplane(ring);
    h.pow(ring.dimension).integrate().to_integer()
}

/// An element of the Chow ring with rational coefficients, possibly
/// inhomogeneous.
#[derive(Clone)]
pub struct ChowClass {
    ring: Arc<GrassmannRing>,
    /// Dense coefficients indexed like `ring.basis`.
    coeffs: Vec<Rational>,
}

impl ChowClass {
    pub fn zero(ring: &Arc<GrassmannRing>) -> Self {
        ChowClass {
            ring: Arc::clone(ring),
            coeffs: vec![Rational::zero(); ring.basis.len()],
        }
    }

    pub fn one(ring: &Arc<GrassmannRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<GrassmannRing>, value: Rational) -> Self {
        let mut class = Self::zero(ring);
        class.coeffs[0] = value;
        class
    }

    /// `sigma_(1)`.
    pub fn hyperplane(ring: &Arc<GrassmannRing>) -> Self {
        sigma(ring, &Partition::row(1)).expect("every Grassmannian has a divisor class")
    }

    /// `sigma_(i)`, zero when `i` exceeds the box width.
    pub fn special(ring: &Arc<GrassmannRing>, i: usize) -> Self {
        sigma(ring, &Partition::row(i)).unwrap_or_else(|_| Self::zero(ring))
    }

    /// `sigma_(1^i)`, zero when `i` exceeds the box height.
    pub fn special_column(ring: &Arc<GrassmannRing>, i: usize) -> Self {
        sigma(ring, &Partition::column(i)).unwrap_or_else(|_| Self::zero(ring))
    }

    /// Builds a class from `(partition, coefficient)` terms.
    pub fn from_terms<I>(ring: &Arc<GrassmannRing>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut class = Self::zero(ring);
        for (p, c) in terms {
            let idx = ring.index_of(&p)?;
            class.coeffs[idx] += c;
        }
        Ok(class)
    }

    pub fn ring(&self) -> &Arc<GrassmannRing> {
        &self.ring
    }

    pub fn coeff(&self, p: &Partition) -> Rational {
        match self.ring.index_of(p) {
            Ok(idx) => self.coeffs[idx].clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.ring
            .basis
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The degree-`d` component.
    pub fn component(&self, d: usize) -> ChowClass {
        let mut out = Self::zero(&self.ring);
        if d <= self.ring.dimension {
            let range = self.ring.degree_offsets[d]..self.ring.degree_offsets[d + 1];
            out.coeffs[range.clone()].clone_from_slice(&self.coeffs[range]);
        }
        out
    }

    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || self.ring.degree_of_index(i) == d)
    }

    /// Degree-0 coefficient.
    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn scale(&self, factor: &Rational) -> ChowClass {
        ChowClass {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    fn check_ring(&self, other: &ChowClass) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.ring.k,
                self.ring.n,
                other.ring.k,
                other.ring.n,
            ))
        }
    }

    pub fn try_add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_ring(other)?;
        Ok(ChowClass {
            ring: Arc::clone(&self.ring),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_ring(other)?;
        let ring = &self.ring;
        let mut out = Self::zero(ring);
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let di = ring.degree_of_index(i);
            for (j, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() || di + ring.degree_of_index(j) > ring.dimension {
                    continue;
                }
                let xy = x * y;
                for &(nu, c) in ring.product(i, j) {
                    if c == 1 {
                        out.coeffs[nu] += &xy;
                    } else {
                        out.coeffs[nu] += &xy * BigInt::from(c);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: usize) -> ChowClass {
        let mut acc = Self::one(&self.ring);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Pushforward to a point: the coefficient of the point class.
    pub fn integrate(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// `∫ self * other`, read off directly through Poincaré duality.
    pub fn pairing(&self, other: &ChowClass) -> Result<Rational> {
        self.check_ring(other)?;
        let mut total = Rational::zero();
        for (i, x) in self.coeffs.iter().enumerate() {
            let y = &other.coeffs[self.ring.dual[i]];
            if !x.is_zero() && !y.is_zero() {
                total += x * y;
            }
        }
        Ok(total)
    }
}

pub fn mul(x: &ChowClass, y: &ChowClass) -> Result<ChowClass> {
    x.try_mul(y)
}

pub fn integrate(x: &ChowClass) -> Rational {
    x.integrate()
}

impl PartialEq for ChowClass {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for ChowClass {}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.ring, self)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.terms() {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{} s{}", render(c), p)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Operator forms panic on mismatched rings; use the `try_*` methods when the
// rings are not known to agree.

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl AddAssign<&ChowClass> for ChowClass {
    fn add_assign(&mut self, rhs: &ChowClass) {
        self.check_ring(rhs).expect("ring mismatch in addition");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self + &(-rhs)
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        self.scale(&int(-1))
    }
}

impl Mul for &ChowClass {
    type Output = ChowClass;
    fn mul(self, rhs: &ChowClass) -> ChowClass {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}
