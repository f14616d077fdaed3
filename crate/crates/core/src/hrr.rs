//! Hirzebruch-Riemann-Roch on Grassmannians: `χ(E) = ∫ ch(E) td(T)`, the
//! Euler polynomial `k ↦ χ(E(k))`, and integrality of that polynomial.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::charclass::{chern_character, tangent_bundle, todd_class, ChernVector};
use crate::chow::{ChowClass, GrassmannRing};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// A Grassmannian together with the Todd class of its tangent bundle.
#[derive(Clone, Debug)]
pub struct RiemannRoch {
    ring: Arc<GrassmannRing>,
    todd_tangent: ChowClass,
    /// `ch(O(k)) td(T)` for `k = 0..=dim`, the interpolation nodes.
    twisted_todd: Vec<ChowClass>,
}

impl RiemannRoch {
    pub fn new(ring: &Arc<GrassmannRing>) -> Self {
        let todd_tangent = todd_class(&tangent_bundle(ring));
        let twisted_todd = (0..=ring.dimension() as i64)
            .map(|k| &line_character(ring, k) * &todd_tangent)
            .collect();
        RiemannRoch {
            ring: Arc::clone(ring),
            todd_tangent,
            twisted_todd,
        }
    }

    pub fn ring(&self) -> &Arc<GrassmannRing> {
        &self.ring
    }

    pub fn todd_tangent(&self) -> &ChowClass {
        &self.todd_tangent
    }

    fn check_ring(&self, v: &ChernVector) -> Result<()> {
        if self.ring.same_as(v.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.ring.k(),
                self.ring.n(),
                v.ring().k(),
                v.ring().n(),
            ))
        }
    }

    pub fn euler_characteristic(&self, v: &ChernVector) -> Result<Rational> {
        self.check_ring(v)?;
        chern_character(v).pairing(&self.todd_tangent)
    }

    /// `χ(E(k))` for an integer twist, as `∫ ch(E) ch(O(k)) td(T)`.
    pub fn twisted_euler_characteristic(&self, v: &ChernVector, k: i64) -> Result<Rational> {
        self.check_ring(v)?;
        let ch = chern_character(v);
        match usize::try_from(k)
            .ok()
            .and_then(|i| self.twisted_todd.get(i))
        {
            Some(node) => ch.pairing(node),
            None => (&ch * &line_character(&self.ring, k)).pairing(&self.todd_tangent),
        }
    }

    /// Interpolates `χ(E(k))` at `k = 0..=dim`.
    pub fn euler_polynomial(&self, v: &ChernVector) -> Result<EulerPolynomial> {
        self.check_ring(v)?;
        let ch = chern_character(v);
        let values = self
            .twisted_todd
            .iter()
            .map(|node| ch.pairing(node))
            .collect::<Result<Vec<_>>>()?;
        Ok(EulerPolynomial::interpolate(&values))
    }
}

fn line_character(ring: &Arc<GrassmannRing>, k: i64) -> ChowClass {
    chern_character(&ChernVector::line_bundle(ring, &int(k)))
}

pub fn euler_characteristic(ring: &Arc<GrassmannRing>, v: &ChernVector) -> Result<Rational> {
    RiemannRoch::new(ring).euler_characteristic(v)
}

pub fn euler_polynomial(ring: &Arc<GrassmannRing>, v: &ChernVector) -> Result<EulerPolynomial> {
    RiemannRoch::new(ring).euler_polynomial(v)
}

fn p3() -> &'static RiemannRoch {
    static P3: OnceLock<RiemannRoch> = OnceLock::new();
    P3.get_or_init(|| {
        RiemannRoch::new(&GrassmannRing::projective_space(3).expect("P^3 is a valid Grassmannian"))
    })
}

/// `χ` on P^3 of the rank-two data `(c1, c2)` twisted by `t`, i.e. of Chern
/// data `(c1 + 2t, c2 + t c1 + t^2)`.
pub fn chi_p3(c1: i64, c2: i64, t: i64) -> Rational {
    let rr = p3();
    let ring = rr.ring();
    let h = ChowClass::hyperplane(ring);
    let v = ChernVector::new(ring, 2, vec![h.scale(&int(c1)), h.pow(2).scale(&int(c2))])
        .expect("hyperplane powers are homogeneous");
    rr.twisted_euler_characteristic(&v, t)
        .expect("vector lives on P^3")
}

/// A polynomial with rational coefficients in the twist variable,
/// `coefficients[i]` multiplying `k^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerPolynomial {
    coefficients: Vec<Rational>,
}

impl EulerPolynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        EulerPolynomial { coefficients }
    }

    /// The unique polynomial of degree `< values.len()` with `p(k) = values[k]`,
    /// built from forward differences in the binomial basis.
    pub fn interpolate(values: &[Rational]) -> Self {
        let mut diffs = values.to_vec();
        let mut newton = Vec::with_capacity(values.len());
        while !diffs.is_empty() {
            newton.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }

        // sum_j newton[j] * C(k, j), expanding each falling factorial
        let mut coefficients = vec![Rational::zero(); values.len()];
        let mut falling = vec![Rational::one()]; // k(k-1)...(k-j+1)
        let mut j_factorial = BigInt::one();
        for (j, d) in newton.iter().enumerate() {
            if j > 0 {
                j_factorial *= BigInt::from(j);
                let mut next = vec![Rational::zero(); falling.len() + 1];
                let shift = int(j as i64 - 1);
                for (i, c) in falling.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * &shift;
                }
                falling = next;
            }
            let scale = d / Rational::from_integer(j_factorial.clone());
            for (i, c) in falling.iter().enumerate() {
                coefficients[i] += c * &scale;
            }
        }
        EulerPolynomial::new(coefficients)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coefficients
            .last()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn evaluate(&self, k: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * k + c)
    }

    pub fn evaluate_int(&self, k: i64) -> Rational {
        self.evaluate(&int(k))
    }

    /// Coefficients in the basis `C(k, j)`.
    pub fn binomial_coefficients(&self) -> Vec<Rational> {
        let values: Vec<Rational> = (0..=self.degree() as i64)
            .map(|k| self.evaluate_int(k))
            .collect();
        let mut diffs = values;
        let mut out = Vec::new();
        while !diffs.is_empty() {
            out.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        out
    }
}

/// Integer values at `k = 0..=degree`, which for a polynomial of that degree
/// is equivalent to integer values on all of Z.
pub fn is_integer_valued(p: &EulerPolynomial) -> bool {
    (0..=p.degree() as i64).all(|k| p.evaluate_int(k).is_integer())
}
