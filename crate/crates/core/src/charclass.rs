//! Characteristic classes of vector bundles on a Grassmannian: Chern
//! vectors, Newton identities, Chern character, Todd class, twists, duals,
//! Whitney sums, and the tangent bundle.
//!
//! Power sums of the Chern roots are the working representation for `ch` and
//! `td`; both are polynomials in the power sums with universal rational
//! coefficients.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chow::{ChowClass, GrassmannRing};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rational::{binomial, factorial, int, Rational};
use crate::series::todd_log_coefficients;

/// Degree up to which the Todd coefficients are tabulated once per process.
const TODD_TABLE_ORDER: usize = 24;

fn todd_coefficients(order: usize) -> std::borrow::Cow<'static, [Rational]> {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    if order <= TODD_TABLE_ORDER {
        let table = TABLE.get_or_init(|| todd_log_coefficients(TODD_TABLE_ORDER));
        std::borrow::Cow::Borrowed(&table[..=order])
    } else {
        std::borrow::Cow::Owned(todd_log_coefficients(order))
    }
}

/// Rank and total Chern class of a (virtual) bundle.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernVector {
    ring: Arc<GrassmannRing>,
    rank: usize,
    /// `c[0] = 1`, `c[d]` homogeneous of degree d, d = 1..=dimension.
    c: Vec<ChowClass>,
}

impl ChernVector {
    /// `classes[i]` is `c_{i+1}`; missing trailing classes are zero.
    pub fn new(ring: &Arc<GrassmannRing>, rank: usize, classes: Vec<ChowClass>) -> Result<Self> {
        let dim = ring.dimension();
        let mut c = vec![ChowClass::one(ring)];
        for (i, class) in classes.into_iter().enumerate() {
            let d = i + 1;
            if !class.ring().same_as(ring) {
                return Err(Error::RingMismatch(
                    ring.k(),
                    ring.n(),
                    class.ring().k(),
                    class.ring().n(),
                ));
            }
            if d > dim {
                if class.is_zero() {
                    continue;
                }
                return Err(Error::InhomogeneousChernClass { degree: d });
            }
            if !class.is_homogeneous_of_degree(d) {
                return Err(Error::InhomogeneousChernClass { degree: d });
            }
            c.push(class);
        }
        c.resize(dim + 1, ChowClass::zero(ring));
        Ok(ChernVector {
            ring: Arc::clone(ring),
            rank,
            c,
        })
    }

    pub fn trivial(ring: &Arc<GrassmannRing>, rank: usize) -> Self {
        Self::new(ring, rank, Vec::new()).expect("empty class list is valid")
    }

    /// The line bundle `O(t)`, with `t` possibly rational.
    pub fn line_bundle(ring: &Arc<GrassmannRing>, t: &Rational) -> Self {
        let c1 = ChowClass::hyperplane(ring).scale(t);
        Self::new(ring, 1, vec![c1]).expect("hyperplane class has degree one")
    }

    /// Splits a total Chern class into its graded pieces.
    pub fn from_total(ring: &Arc<GrassmannRing>, rank: usize, total: &ChowClass) -> Result<Self> {
        let classes = (1..=ring.dimension()).map(|d| total.component(d)).collect();
        Self::new(ring, rank, classes)
    }

    pub fn ring(&self) -> &Arc<GrassmannRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `c_d`; zero past the ring dimension.
    pub fn c(&self, d: usize) -> ChowClass {
        self.c
            .get(d)
            .cloned()
            .unwrap_or_else(|| ChowClass::zero(&self.ring))
    }

    pub fn total(&self) -> ChowClass {
        let mut total = ChowClass::zero(&self.ring);
        for class in &self.c {
            total += class;
        }
        total
    }

    fn check_ring(&self, other: &ChernVector) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.ring.k(),
                self.ring.n(),
                other.ring.k(),
                other.ring.n(),
            ))
        }
    }
}

/// Power sums `p_m = sum_i x_i^m` of the Chern roots.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSumVector {
    ring: Arc<GrassmannRing>,
    rank: usize,
    /// `p[0]` is the rank as a constant class.
    p: Vec<ChowClass>,
}

impl PowerSumVector {
    pub fn ring(&self) -> &Arc<GrassmannRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn p(&self, m: usize) -> ChowClass {
        self.p
            .get(m)
            .cloned()
            .unwrap_or_else(|| ChowClass::zero(&self.ring))
    }
}

/// Newton's identities: `p_m = sum_{i<m} (-1)^{i-1} c_i p_{m-i} + (-1)^{m-1} m c_m`.
pub fn chern_to_power_sums(v: &ChernVector) -> PowerSumVector {
    let ring = &v.ring;
    let dim = ring.dimension();
    let mut p = vec![ChowClass::constant(ring, int(v.rank as i64))];
    for m in 1..=dim {
        let mut pm = v.c[m].scale(&int(m as i64));
        if m % 2 == 0 {
            pm = -&pm;
        }
        for i in 1..m {
            let term = &v.c[i] * &p[m - i];
            if i % 2 == 1 {
                pm += &term;
            } else {
                pm = &pm - &term;
            }
        }
        p.push(pm);
    }
    PowerSumVector {
        ring: Arc::clone(ring),
        rank: v.rank,
        p,
    }
}

/// Inverse Newton identities: `m c_m = sum_{i=1}^m (-1)^{i-1} c_{m-i} p_i`.
pub fn power_sums_to_chern(ps: &PowerSumVector) -> ChernVector {
    let ring = &ps.ring;
    let dim = ring.dimension();
    let mut c = vec![ChowClass::one(ring)];
    for m in 1..=dim {
        let mut acc = ChowClass::zero(ring);
        for i in 1..=m {
            let term = &c[m - i] * &ps.p[i];
            if i % 2 == 1 {
                acc += &term;
            } else {
                acc = &acc - &term;
            }
        }
        c.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(m))));
    }
    ChernVector {
        ring: Arc::clone(ring),
        rank: ps.rank,
        c,
    }
}

/// `ch = rank + sum_m p_m / m!`.
pub fn chern_character(v: &ChernVector) -> ChowClass {
    chern_character_of_power_sums(&chern_to_power_sums(v))
}

fn chern_character_of_power_sums(ps: &PowerSumVector) -> ChowClass {
    let mut ch = ps.p[0].clone();
    for (m, pm) in ps.p.iter().enumerate().skip(1) {
        ch += &pm.scale(&Rational::new(BigInt::one(), factorial(m)));
    }
    ch
}

/// Recovers the Chern vector from a Chern character. The constant term must
/// be a positive integer (the rank).
pub fn chern_from_character(ch: &ChowClass) -> ChernVector {
    let ring = ch.ring();
    let rank = ch.constant_term().to_integer();
    let rank: usize = rank
        .try_into()
        .expect("rank must be a non-negative integer");
    let p = (0..=ring.dimension())
        .map(|m| {
            if m == 0 {
                ChowClass::constant(ring, int(rank as i64))
            } else {
                ch.component(m).scale(&Rational::from_integer(factorial(m)))
            }
        })
        .collect();
    power_sums_to_chern(&PowerSumVector {
        ring: Arc::clone(ring),
        rank,
        p,
    })
}

/// `exp(x)` of a class with zero constant term.
fn exp_nilpotent(x: &ChowClass) -> ChowClass {
    debug_assert!(x.constant_term().is_zero());
    let ring = x.ring();
    let mut acc = ChowClass::one(ring);
    let mut power = ChowClass::one(ring);
    for j in 1..=ring.dimension() {
        power = &power * x;
        if power.is_zero() {
            break;
        }
        acc += &power.scale(&Rational::new(BigInt::one(), factorial(j)));
    }
    acc
}

/// `td = exp(sum_m a_m p_m)` with `sum a_m x^m = log(x / (1 - e^{-x}))`.
pub fn todd_class(v: &ChernVector) -> ChowClass {
    let ps = chern_to_power_sums(v);
    let dim = v.ring.dimension();
    let a = todd_coefficients(dim);
    let mut exponent = ChowClass::zero(&v.ring);
    for m in 1..=dim {
        if !a[m].is_zero() {
            exponent += &ps.p[m].scale(&a[m]);
        }
    }
    exp_nilpotent(&exponent)
}

/// `E ⊗ O(t)` for rational `t`, via `c_k(E(t)) = sum_i C(r-i, k-i) c_i (t h)^{k-i}`.
pub fn twist(v: &ChernVector, t: &Rational) -> ChernVector {
    if t.is_zero() {
        return v.clone();
    }
    let ring = &v.ring;
    let dim = ring.dimension();
    let l = ChowClass::hyperplane(ring).scale(t);
    let mut l_powers = vec![ChowClass::one(ring)];
    for e in 1..=dim {
        let next = &l_powers[e - 1] * &l;
        l_powers.push(next);
    }
    let r = v.rank;
    let mut c = vec![ChowClass::one(ring)];
    for k in 1..=dim {
        let mut acc = ChowClass::zero(ring);
        for i in 0..=k.min(r) {
            if r - i < k - i || v.c[i].is_zero() {
                continue;
            }
            let coeff = Rational::from_integer(binomial(r - i, k - i));
            acc += &(&v.c[i] * &l_powers[k - i]).scale(&coeff);
        }
        c.push(acc);
    }
    ChernVector {
        ring: Arc::clone(ring),
        rank: r,
        c,
    }
}

pub fn dual(v: &ChernVector) -> ChernVector {
    let c =
        v.c.iter()
            .enumerate()
            .map(|(d, class)| if d % 2 == 1 { -class } else { class.clone() })
            .collect();
    ChernVector {
        ring: Arc::clone(&v.ring),
        rank: v.rank,
        c,
    }
}

/// Whitney sum: the total Chern classes multiply.
pub fn direct_sum(v: &ChernVector, w: &ChernVector) -> Result<ChernVector> {
    v.check_ring(w)?;
    let total = v.total().try_mul(&w.total())?;
    ChernVector::from_total(&v.ring, v.rank + w.rank, &total)
}

/// `ch(v ⊗ w) = ch(v) ch(w)`.
pub fn tensor_ch(v: &ChernVector, w: &ChernVector) -> Result<ChowClass> {
    v.check_ring(w)?;
    chern_character(v).try_mul(&chern_character(w))
}

/// Dual of the tautological subbundle: `c_i(S^∨) = sigma_(1^i)`.
pub fn tautological_sub_dual(ring: &Arc<GrassmannRing>) -> ChernVector {
    let rank = ring.k() + 1;
    let classes = (1..=rank)
        .map(|i| ChowClass::special_column(ring, i))
        .collect();
    ChernVector::new(ring, rank, classes).expect("special classes are homogeneous")
}

/// The tautological subbundle S of rank k+1.
pub fn tautological_sub(ring: &Arc<GrassmannRing>) -> ChernVector {
    dual(&tautological_sub_dual(ring))
}

/// The universal quotient bundle Q of rank n-k: `c_i(Q) = sigma_(i)`.
pub fn universal_quotient(ring: &Arc<GrassmannRing>) -> ChernVector {
    let rank = ring.n() - ring.k();
    let classes = (1..=rank).map(|i| ChowClass::special(ring, i)).collect();
    ChernVector::new(ring, rank, classes).expect("special classes are homogeneous")
}

/// `T = S^∨ ⊗ Q`, recovered from its Chern character.
pub fn tangent_bundle(ring: &Arc<GrassmannRing>) -> ChernVector {
    let ch = tensor_ch(&tautological_sub_dual(ring), &universal_quotient(ring)).expect("same ring");
    chern_from_character(&ch)
}

/// Complete homogeneous symmetric polynomial `h_d` in the Chern roots,
/// i.e. the Schur class `s_(d)`: `h_m = sum_{i=1}^m (-1)^{i-1} c_i h_{m-i}`.
pub fn complete_symmetric(v: &ChernVector, d: usize) -> ChowClass {
    let ring = &v.ring;
    let mut h = vec![ChowClass::one(ring)];
    for m in 1..=d {
        let mut acc = ChowClass::zero(ring);
        for i in 1..=m.min(ring.dimension()) {
            let term = &v.c[i] * &h[m - i];
            if i % 2 == 1 {
                acc += &term;
            } else {
                acc = &acc - &term;
            }
        }
        h.push(acc);
    }
    h.swap_remove(d)
}

/// Chern coordinates `(e, a, b)` of a rank-two bundle on G(1,4):
/// `c1 = e sigma_(1)`, `c2 = a sigma_(2) + b sigma_(1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RankTwoData {
    pub e: i64,
    pub a: i64,
    pub b: i64,
}

impl RankTwoData {
    pub const fn new(e: i64, a: i64, b: i64) -> Self {
        RankTwoData { e, a, b }
    }

    pub fn is_normalized(&self) -> bool {
        self.e == 0 || self.e == -1
    }

    /// Data of `E(j)`: `c2 + j c1 h + j^2 h^2` with `h^2 = sigma_(2) + sigma_(1,1)`.
    pub fn twisted(&self, j: i64) -> RankTwoData {
        let shift = j * self.e + j * j;
        RankTwoData {
            e: self.e + 2 * j,
            a: self.a + shift,
            b: self.b + shift,
        }
    }

    /// The normalized twist and the twist that produced it.
    pub fn normalized(&self) -> (RankTwoData, i64) {
        let j = if self.e.rem_euclid(2) == 0 {
            -self.e / 2
        } else {
            (-1 - self.e) / 2
        };
        (self.twisted(j), j)
    }
}

impl std::fmt::Display for RankTwoData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.e, self.a, self.b)
    }
}

pub fn rank_two_chern(ring: &Arc<GrassmannRing>, d: RankTwoData) -> Result<ChernVector> {
    if !ring.is_g14() {
        return Err(Error::WrongRing {
            expected: "G(1,4)",
            k: ring.k(),
            n: ring.n(),
        });
    }
    let c1 = ChowClass::hyperplane(ring).scale(&int(d.e));
    let c2 = ChowClass::from_terms(
        ring,
        [
            (Partition::row(2), int(d.a)),
            (Partition::column(2), int(d.b)),
        ],
    )?;
    ChernVector::new(ring, 2, vec![c1, c2])
}

/// Reads `(e, a, b)` back off a rank-two Chern vector on G(1,4), if integral.
pub fn rank_two_data(v: &ChernVector) -> Option<RankTwoData> {
    let coord = |class: &ChowClass, p: Partition| {
        let value = class.coeff(&p);
        value
            .is_integer()
            .then(|| value.to_integer())
            .and_then(|n| i64::try_from(n).ok())
    };
    if !v.ring.is_g14() || v.rank != 2 || (3..v.c.len()).any(|d| !v.c[d].is_zero()) {
        return None;
    }
    Some(RankTwoData {
        e: coord(&v.c[1], Partition::row(1))?,
        a: coord(&v.c[2], Partition::row(2))?,
        b: coord(&v.c[2], Partition::column(2))?,
    })
}

pub fn todd_of_tangent(ring: &Arc<GrassmannRing>) -> ChowClass {
    todd_class(&tangent_bundle(ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::sigma;
    use crate::rational::ratio;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn g14() -> Arc<GrassmannRing> {
        GrassmannRing::new(1, 4).unwrap()
    }

    fn s(ring: &Arc<GrassmannRing>, parts: &[usize]) -> ChowClass {
        sigma(ring, &p(parts)).unwrap()
    }

    #[test]
    fn rank_two_examples() {
        let g = g14();
        let trivial = rank_two_chern(&g, RankTwoData::new(0, 0, 0)).unwrap();
        assert_eq!(trivial, ChernVector::trivial(&g, 2));

        let taut = rank_two_chern(&g, RankTwoData::new(-1, 0, 1)).unwrap();
        assert_eq!(taut.c(1), -&s(&g, &[1]));
        assert_eq!(taut.c(2), s(&g, &[1, 1]));
        assert_eq!(taut, tautological_sub(&g));

        let v = rank_two_chern(&g, RankTwoData::new(-1, 6, 6)).unwrap();
        assert_eq!(
            v.c(2),
            &s(&g, &[2]).scale(&int(6)) + &s(&g, &[1, 1]).scale(&int(6))
        );
        assert_eq!(rank_two_data(&v), Some(RankTwoData::new(-1, 6, 6)));

        let p3 = GrassmannRing::projective_space(3).unwrap();
        assert!(matches!(
            rank_two_chern(&p3, RankTwoData::new(0, 0, 0)),
            Err(Error::WrongRing { .. })
        ));
    }

    #[test]
    fn chern_vector_validation() {
        let g = g14();
        assert!(matches!(
            ChernVector::new(&g, 2, vec![s(&g, &[2])]),
            Err(Error::InhomogeneousChernClass { degree: 1 })
        ));
        let other = GrassmannRing::new(1, 3).unwrap();
        assert!(ChernVector::new(&g, 2, vec![ChowClass::hyperplane(&other)]).is_err());
    }

    #[test]
    fn newton_examples() {
        let g = g14();
        let h = ChowClass::hyperplane(&g);
        let line = ChernVector::new(&g, 1, vec![h.scale(&int(3))]).unwrap();
        let ps = chern_to_power_sums(&line);
        for m in 1..=6 {
            assert_eq!(ps.p(m), h.scale(&int(3)).pow(m));
        }

        let v = rank_two_chern(&g, RankTwoData::new(0, 4, -3)).unwrap();
        assert_eq!(chern_to_power_sums(&v).p(2), v.c(2).scale(&int(-2)));

        let v = rank_two_chern(&g, RankTwoData::new(0, -1, -1)).unwrap();
        assert_eq!(
            chern_to_power_sums(&v).p(2),
            &s(&g, &[2]).scale(&int(2)) + &s(&g, &[1, 1]).scale(&int(2))
        );
        assert_eq!(power_sums_to_chern(&chern_to_power_sums(&v)), v);
    }

    #[test]
    fn chern_character_of_line_bundle() {
        let g = g14();
        let t = int(-3);
        let h = ChowClass::hyperplane(&g).scale(&t);
        let mut expected = ChowClass::zero(&g);
        for m in 0..=6 {
            expected += &h.pow(m).scale(&Rational::new(BigInt::one(), factorial(m)));
        }
        assert_eq!(chern_character(&ChernVector::line_bundle(&g, &t)), expected);
        assert_eq!(
            chern_character(&ChernVector::trivial(&g, 3)),
            ChowClass::constant(&g, int(3))
        );
    }

    #[test]
    fn todd_examples() {
        let p3 = GrassmannRing::projective_space(3).unwrap();
        assert_eq!(
            todd_class(&ChernVector::trivial(&p3, 2)),
            ChowClass::one(&p3)
        );
        let h = ChowClass::hyperplane(&p3);
        let expected = ChowClass::from_terms(
            &p3,
            [
                (p(&[]), int(1)),
                (p(&[1]), int(2)),
                (p(&[2]), ratio(11, 6)),
                (p(&[3]), int(1)),
            ],
        )
        .unwrap();
        let tangent = tangent_bundle(&p3);
        assert_eq!(tangent.c(1), h.scale(&int(4)));
        assert_eq!(todd_class(&tangent), expected);
    }

    #[test]
    fn twist_examples() {
        let g = g14();
        let v = rank_two_chern(&g, RankTwoData::new(0, 3, -2)).unwrap();
        assert_eq!(twist(&v, &int(0)), v);

        let m = ratio(5, 2);
        let w = twist(&v, &m);
        assert_eq!(w.c(1), ChowClass::hyperplane(&g).scale(&int(5)));
        assert_eq!(w.c(2).coeff(&p(&[2])), int(3) + ratio(25, 4));
        assert_eq!(w.c(2).coeff(&p(&[1, 1])), int(-2) + ratio(25, 4));

        let v = rank_two_chern(&g, RankTwoData::new(-1, 6, 6)).unwrap();
        assert_eq!(
            twist(&v, &int(5)).c(1),
            ChowClass::hyperplane(&g).scale(&int(9))
        );
    }

    /// Twisting multiplies each Chern root by `1 + t h`, so power sums pick up
    /// `p_m(E(t)) = sum_j C(m,j) p_j (t h)^{m-j}`.
    fn twist_by_power_sums(v: &ChernVector, t: &Rational) -> ChernVector {
        let ring = v.ring();
        let ps = chern_to_power_sums(v);
        let l = ChowClass::hyperplane(ring).scale(t);
        let p = (0..=ring.dimension())
            .map(|m| {
                let mut acc = ChowClass::zero(ring);
                for j in 0..=m {
                    acc +=
                        &(&ps.p(j) * &l.pow(m - j)).scale(&Rational::from_integer(binomial(m, j)));
                }
                acc
            })
            .collect();
        power_sums_to_chern(&PowerSumVector {
            ring: Arc::clone(ring),
            rank: v.rank(),
            p,
        })
    }

    #[test]
    fn twist_agrees_with_power_sums() {
        let g = g14();
        let vectors = [
            rank_two_chern(&g, RankTwoData::new(-1, 2, 7)).unwrap(),
            tangent_bundle(&g),
            universal_quotient(&g),
            ChernVector::line_bundle(&g, &ratio(-3, 2)),
        ];
        for v in &vectors {
            for t in [ratio(5, 2), int(3), int(-4), ratio(-1, 3)] {
                assert_eq!(twist(v, &t), twist_by_power_sums(v, &t));
            }
        }
    }

    #[test]
    fn twist_matches_integer_data_rule() {
        let g = g14();
        let d = RankTwoData::new(-1, 2, 7);
        for j in -3..=3 {
            let twisted = twist(&rank_two_chern(&g, d).unwrap(), &int(j));
            assert_eq!(rank_two_data(&twisted), Some(d.twisted(j)));
        }
    }

    #[test]
    fn normalization() {
        for e in -7..=7 {
            let d = RankTwoData::new(e, 3, 5);
            let (n, j) = d.normalized();
            assert!(n.is_normalized(), "{d} -> {n}");
            assert_eq!(d.twisted(j), n);
            assert_eq!(n.twisted(-j), d);
        }
        assert_eq!(
            RankTwoData::new(0, 1, 2).normalized(),
            (RankTwoData::new(0, 1, 2), 0)
        );
        assert_eq!(
            RankTwoData::new(-1, 1, 2).normalized(),
            (RankTwoData::new(-1, 1, 2), 0)
        );
    }

    #[test]
    fn dual_and_sum() {
        let g = g14();
        let v = rank_two_chern(&g, RankTwoData::new(-1, 2, 5)).unwrap();
        assert_eq!(dual(&dual(&v)), v);

        for (pp, qq) in [(-2, 2), (3, -1), (0, 4)] {
            let sum = direct_sum(
                &ChernVector::line_bundle(&g, &int(pp)),
                &ChernVector::line_bundle(&g, &int(qq)),
            )
            .unwrap();
            assert_eq!(sum.rank(), 2);
            assert_eq!(sum.c(1), ChowClass::hyperplane(&g).scale(&int(pp + qq)));
            assert_eq!(
                sum.c(2),
                ChowClass::hyperplane(&g).pow(2).scale(&int(pp * qq))
            );
            assert_eq!(
                rank_two_data(&sum),
                Some(RankTwoData::new(pp + qq, pp * qq, pp * qq))
            );
        }
    }

    #[test]
    fn tangent_of_g14() {
        let g = g14();
        let t = tangent_bundle(&g);
        assert_eq!(t.rank(), 6);
        assert_eq!(t.c(1), ChowClass::hyperplane(&g).scale(&int(5)));
        assert_eq!(t.c(6).integrate(), int(10));
    }

    #[test]
    fn complete_symmetric_rank_two() {
        let g = g14();
        let v = twist(
            &rank_two_chern(&g, RankTwoData::new(0, 2, 1)).unwrap(),
            &ratio(5, 2),
        );
        let c1 = v.c(1);
        let c2 = v.c(2);
        let expected = &c1.pow(3) - &(&c1 * &c2).scale(&int(2));
        assert_eq!(complete_symmetric(&v, 3), expected);
    }
}
