//! Multiplicative sequences (A-hat and L genus polynomials), computed from
//! scratch out of their characteristic power series, plus the local index
//! contributions of an isolated fixed-sphere component.
//!
//! For a power series `Q(z) = 1 + q_1 z + q_2 z^2 + ...` the associated
//! multiplicative sequence `{K_k}` is obtained by the classical recipe:
//! write `log Q = sum c_j z^j`, substitute the Newton power sums `S_j` in the
//! Pontryagin variables for `z^j`, exponentiate in the partition algebra, and
//! take homogeneous parts. Two series matter here:
//!
//! * `AHAT`: `Q(z) = (sqrt(z)/2) / sinh(sqrt(z)/2)`, i.e.
//!   `1 / sum_j (z/4)^j / (2j+1)!`, giving the A-hat polynomials.
//! * `L`:    `Q(z) = sqrt(z) / tanh(sqrt(z))`, i.e.
//!   `(sum_j z^j / (2j)!) / (sum_j z^j / (2j+1)!)`, giving the L polynomials.
//!
//! Everything is exact; the published degree-4 tables are reproduced by the
//! test suite coefficient for coefficient.

mod partition;
mod series;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::CoreError;
use crate::exact::Rat;

pub use partition::Partition;
pub(crate) use partition::{newton_power_sum, PartitionPoly};
use series::{factorial, Series};

/// Which characteristic power series a computation refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum SeriesKind {
    /// `(sqrt(z)/2)/sinh(sqrt(z)/2)`: the spin Dirac side.
    #[serde(rename = "AHAT")]
    Ahat,
    /// `sqrt(z)/tanh(sqrt(z))`: the signature side.
    #[serde(rename = "L")]
    L,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::Ahat => write!(f, "AHAT"),
            SeriesKind::L => write!(f, "L"),
        }
    }
}

/// Taylor coefficients `q_1..q_k` of a characteristic power series
/// (the constant term is always 1 and is not stored).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharSeries {
    /// The series this expansion belongs to.
    pub kind: SeriesKind,
    /// `coeffs[j]` is `q_{j+1}`.
    pub coeffs: Vec<Rat>,
}

/// Exact Taylor expansion of the chosen characteristic power series through
/// degree `k` (so `k` coefficients past the constant term).
pub fn char_series(kind: SeriesKind, k: u32) -> CharSeries {
    let len = k as usize + 1;
    let q = match kind {
        SeriesKind::Ahat => {
            let one = Series::from_fn(len, |i| if i == 0 { Rat::one() } else { Rat::zero() });
            let den = Series::from_fn(len, |j| {
                let pow4 = BigInt::from(4).pow(j as u32);
                Rat::from_big(1.into(), pow4 * factorial(2 * j as u64 + 1))
            });
            one.div(&den)
        }
        SeriesKind::L => {
            let num = Series::from_fn(len, |j| Rat::from_big(1.into(), factorial(2 * j as u64)));
            let den = Series::from_fn(len, |j| Rat::from_big(1.into(), factorial(2 * j as u64 + 1)));
            num.div(&den)
        }
    };
    CharSeries { kind, coeffs: q.c[1..].to_vec() }
}

/// Homogeneous degree-`k` member of a multiplicative sequence: an exact
/// polynomial in `p_1..p_k` whose monomials are keyed by partitions of `k`.
///
/// Prints (and serializes) as the exact text form
/// `"(7/5760)*p1^2 + (-1/1440)*p2"`: terms sorted by partition, every
/// coefficient reduced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenusPoly {
    degree: u32,
    terms: BTreeMap<Partition, Rat>,
}

impl GenusPoly {
    /// Builds a polynomial from explicit terms, dropping zero coefficients.
    /// Panics if a partition's weight differs from `degree`.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Partition, Rat)>) -> GenusPoly {
        let mut map = BTreeMap::new();
        for (partition, coeff) in terms {
            assert_eq!(
                partition.weight(),
                degree,
                "genus polynomial terms must be homogeneous of the stated degree"
            );
            if !coeff.is_zero() {
                let entry = map.entry(partition).or_insert_with(Rat::zero);
                *entry = &*entry + &coeff;
            }
        }
        map.retain(|_, c: &mut Rat| !c.is_zero());
        GenusPoly { degree, terms: map }
    }

    /// The homogeneous degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient of the monomial indexed by `partition` (zero if absent).
    pub fn coeff(&self, partition: &Partition) -> Rat {
        self.terms.get(partition).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in canonical (partition) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }
}

impl fmt::Display for GenusPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (partition, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({coeff})*{partition}")?;
        }
        Ok(())
    }
}

impl Serialize for GenusPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Degree-`k` member of the multiplicative sequence for `kind`, computed from
/// the characteristic power series (never from stored tables):
/// `K_k = [exp(sum_j c_j S_j)]_k` with `c = log Q` and `S_j` the Newton sums.
pub fn multiplicative_sequence(kind: SeriesKind, k: u32) -> GenusPoly {
    if k == 0 {
        return GenusPoly::from_terms(0, [(Partition::empty(), Rat::one())]);
    }
    let len = k as usize + 1;
    let q = char_series(kind, k);
    let mut full = Series::from_fn(len, |_| Rat::zero());
    full.c[0] = Rat::one();
    for (j, coeff) in q.coeffs.iter().enumerate() {
        full.c[j + 1] = coeff.clone();
    }
    let log = full.log_coeffs();

    let mut f = PartitionPoly::zero();
    for j in 1..=k {
        let scaled = newton_power_sum(j).scale(&log[j as usize]);
        f = f.add(&scaled);
    }

    // exp(F) truncated to weight k; F has no constant term, so powers past
    // F^k cannot contribute.
    let mut exp = PartitionPoly::one();
    let mut power = PartitionPoly::one();
    let mut m_factorial = Rat::one();
    for m in 1..=k {
        power = power.mul_trunc(&f, k);
        m_factorial = &m_factorial * &Rat::from_int(m as i64);
        exp = exp.add(&power.scale(&(Rat::one() / &m_factorial)));
    }

    GenusPoly::from_terms(k, exp.homogeneous(k))
}

/// Ratio of top coefficients `t_k = [p_k] AHAT_k / [p_k] L_k` for `k >= 1`.
pub fn t_coeff(k: u32) -> Rat {
    assert!(k >= 1, "t coefficients are indexed from 1");
    let top = Partition::single(k);
    let ahat = multiplicative_sequence(SeriesKind::Ahat, k).coeff(&top);
    let l = multiplicative_sequence(SeriesKind::L, k).coeff(&top);
    assert!(!l.is_zero(), "the L sequence has a nonzero top coefficient");
    &ahat / &l
}

/// Normalization constant `a_k = 4 / (3 + (-1)^k)`: `1` for even `k`,
/// `2` for odd `k`.
pub fn a_coeff(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        2
    }
}

/// Evaluates a genus polynomial against characteristic numbers: the pairing
/// of each monomial is looked up by partition, with absent entries read as 0.
pub fn evaluate_genus(poly: &GenusPoly, numbers: &BTreeMap<Partition, Rat>) -> Rat {
    let mut total = Rat::zero();
    for (partition, coeff) in poly.terms() {
        if let Some(value) = numbers.get(partition) {
            total = &total + &(coeff * value);
        }
    }
    total
}

/// Pontryagin and Euler data of the rank-`4n` vector bundle whose sphere
/// bundle is under consideration, in the shape the local index contributions
/// consume.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PontryaginData {
    /// Family selector: 1 (base `S^4`) or 2 (base `S^8`).
    pub n: u8,
    /// Top Pontryagin number of the bundle: `<p_n(xi), [S^{4n}]>`.
    pub p_fiber: i64,
    /// Euler number `<e(xi), [S^{4n}]>`.
    pub euler: i64,
    /// `<p_1(xi), [S^8]>`-style lower class for `n = 2`; identically zero
    /// there (`H^4(S^8) = 0`) and unused for `n = 1`.
    pub p1_of_xi_over_s8: i64,
}

/// The two candidate local contributions of the fixed `S^{4n}` to the
/// equivariant spin index, returned sorted ascending:
///
/// * `n = 1`: `+/- p_1(xi) / 2^5`
/// * `n = 2`: `+/- (5 p_1^2 / (2^11 * 3) - p_2(xi) / (2^9 * 3))`
///
/// The sign ambiguity reflects the two equivariant spin structures; consumers
/// keep both branches. Rejects `n` outside `{1, 2}`.
pub fn local_spin_contribution(data: &PontryaginData) -> Result<(Rat, Rat), CoreError> {
    let v = match data.n {
        1 => Rat::new(data.p_fiber, 32),
        2 => {
            let p1 = Rat::from_int(data.p1_of_xi_over_s8);
            let sq = &p1 * &p1;
            &(&sq * &Rat::new(5, 6144)) - &Rat::new(data.p_fiber, 1536)
        }
        n => return Err(CoreError::InvalidDimension(n)),
    };
    let neg = -&v;
    if neg <= v {
        Ok((neg, v))
    } else {
        Ok((v, neg))
    }
}

/// Local contribution of the fixed `S^{4n}` to the equivariant signature
/// index: the Euler number of the normal bundle, as an exact rational.
pub fn local_sign_contribution(data: &PontryaginData) -> Rat {
    Rat::from_int(data.euler)
}
