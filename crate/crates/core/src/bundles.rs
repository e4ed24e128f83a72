//! Linear sphere bundles over spheres and their boundary invariant.
//!
//! `BundleId { n, k, l }` names the total space `M` of the `S^{4n-1}`-bundle
//! over `S^{4n}` (`n = 1` or `2`) whose rank-`4n` vector bundle has Euler
//! number `l` and top Pontryagin number `(4n-2)(2k+l)`. For `l != 0` the
//! total space is a rational homology `(8n-1)`-sphere; for `l = 1` it is a
//! homotopy sphere. The boundary invariant is
//!
//! `mu(M) = ((2k+l)^2 - l) / (2^{4n+1} q_n l)  in Q/Z`,
//!
//! with `q_1 = 7`, `q_2 = 127`, constant on diffeomorphism classes and
//! sign-reversed under orientation reversal.

use serde::Serialize;

use num_bigint::BigInt;

use crate::error::CoreError;
use crate::exact::{res_neg, residue_mod1, Rat, ResMod1};
use crate::genera::PontryaginData;

/// Largest accepted magnitude for the parameters `k` and `l`. The bound keeps
/// every derived characteristic number (and`period_sphere(n, l)`) inside
/// `i64`, including for identifiers produced by [`BundleId::normalize`] and
/// [`BundleId::reverse_orientation`], whose `k` may reach twice the bound.
pub const PARAM_LIMIT: i64 = 1 << 46;

/// `q_1 = 7`, `q_2 = 127`: the odd factor of the invariant's denominator.
///
/// Panics outside `n in {1, 2}`; validated constructors uphold this.
pub fn qn(n: u8) -> i64 {
    match n {
        1 => 7,
        2 => 127,
        _ => panic!("dimension parameter must be 1 or 2, got {n}"),
    }
}

/// Identifier of an oriented sphere-bundle total space.
///
/// Invariants: `n in {1, 2}`, `l >= 1`, and the parameters sit inside the
/// supported range. The `reversed` flag marks the opposite orientation and is
/// set only by [`BundleId::reverse_orientation`]; invariant computations
/// account for it by negating in `Q/Z`, never by re-deriving classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct BundleId {
    n: u8,
    k: i64,
    l: i64,
    reversed: bool,
}

impl BundleId {
    /// Builds an identifier with `l >= 1` already in hand.
    pub fn new(n: u8, k: i64, l: i64) -> Result<BundleId, CoreError> {
        if !(n == 1 || n == 2) {
            return Err(CoreError::InvalidDimension(n));
        }
        if l < 1 {
            return Err(CoreError::NonPositiveEuler(l));
        }
        if l > PARAM_LIMIT {
            return Err(CoreError::ParamOutOfRange { name: "l", value: l });
        }
        if k.abs() > PARAM_LIMIT {
            return Err(CoreError::ParamOutOfRange { name: "k", value: k });
        }
        Ok(BundleId { n, k, l, reversed: false })
    }

    /// Canonicalizes arbitrary nonzero Euler number: a bundle with `l < 0` is
    /// isomorphic (orientation conventions included) to `(k + l, -l)`, so
    /// every identifier is reduced to `l >= 1`. Idempotent on its image.
    pub fn normalize(n: u8, k: i64, l: i64) -> Result<BundleId, CoreError> {
        if l == 0 {
            return Err(CoreError::ZeroEuler);
        }
        if l.abs() > PARAM_LIMIT {
            return Err(CoreError::ParamOutOfRange { name: "l", value: l });
        }
        if k.abs() > PARAM_LIMIT {
            return Err(CoreError::ParamOutOfRange { name: "k", value: k });
        }
        if !(n == 1 || n == 2) {
            return Err(CoreError::InvalidDimension(n));
        }
        if l > 0 {
            Ok(BundleId { n, k, l, reversed: false })
        } else {
            // |k + l| <= 2 * PARAM_LIMIT: still far inside the i64 envelope.
            Ok(BundleId { n, k: k + l, l: -l, reversed: false })
        }
    }

    /// The same manifold with the opposite orientation: parameters
    /// `(n, -k-l, l)` and the `reversed` flag toggled. Applying twice returns
    /// the original identifier.
    pub fn reverse_orientation(&self) -> BundleId {
        BundleId { n: self.n, k: -self.k - self.l, l: self.l, reversed: !self.reversed }
    }

    /// Family selector: 1 or 2.
    pub fn n(&self) -> u8 {
        self.n
    }

    /// Clutching parameter.
    pub fn k(&self) -> i64 {
        self.k
    }

    /// Euler number of the underlying rank-`4n` bundle; always `>= 1`.
    pub fn l(&self) -> i64 {
        self.l
    }

    /// Whether this identifier carries the reversed orientation.
    pub fn reversed(&self) -> bool {
        self.reversed
    }

    /// The Pontryagin/Euler data consumed by the local index contributions.
    pub fn pontryagin_data(&self) -> PontryaginData {
        let numbers = characteristic_numbers(self);
        PontryaginData {
            n: self.n,
            p_fiber: numbers.p_fiber,
            euler: numbers.euler,
            p1_of_xi_over_s8: 0,
        }
    }
}

/// The integral characteristic numbers attached to a bundle identifier.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CharNumbers {
    /// Euler number `e(xi) = l`.
    pub euler: i64,
    /// Top Pontryagin number of the vector bundle: `p_n(xi) = (4n-2)(2k+l)`.
    pub p_fiber: i64,
    /// Top Pontryagin number of the total space: `p_n(M) = (4n-2) * 2k`.
    pub p_boundary: i64,
}

/// `(e, p_n(xi), p_n(M))` for the identifier, at face value of its `(k, l)`.
pub fn characteristic_numbers(b: &BundleId) -> CharNumbers {
    let m = 4 * i64::from(b.n()) - 2;
    CharNumbers { euler: b.l(), p_fiber: m * (2 * b.k() + b.l()), p_boundary: m * 2 * b.k() }
}

/// Relative characteristic number of the associated disk bundle `W`:
/// `<pbar_n(W)^2, [W, M]> = (4n-2)^2 (2k+l)^2 / l`. Zero iff `2k + l = 0`,
/// strictly positive otherwise.
pub fn char_number_pbar_sq(b: &BundleId) -> Rat {
    let m = BigInt::from(4 * i64::from(b.n()) - 2);
    let t = BigInt::from(2 * b.k() + b.l());
    Rat::from_big(&m * &m * &t * &t, BigInt::from(b.l()))
}

/// The invariant as a canonical residue plus the parameters it was computed
/// from (echoed for display and serialization).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EkValue {
    /// `mu` as a canonical residue in `[0, 1)`.
    pub value: ResMod1,
    /// Family selector of the input.
    pub n: u8,
    /// Clutching parameter of the input.
    pub k: i64,
    /// Euler number of the input.
    pub l: i64,
}

/// The raw rational `((2k+l)^2 - l) / (2^{4n+1} q_n l)` before reduction
/// mod 1. Quotient computations need this representative, not just its
/// residue, because they halve it.
pub(crate) fn ek_sphere_raw(n: u8, k: i64, l: i64) -> Rat {
    let t = BigInt::from(2 * k + l);
    let numer = &t * &t - BigInt::from(l);
    let denom = (BigInt::from(2).pow(4 * u32::from(n) + 1)) * BigInt::from(qn(n)) * BigInt::from(l);
    Rat::from_big(numer, denom)
}

/// The invariant of the total space in `Q/Z`.
///
/// For a reversed-orientation identifier the residue is negated; the raw
/// formula itself is never re-derived for the opposite orientation (it is
/// invariant under `k -> -k-l`, so negation is exactly the orientation rule).
pub fn ek_sphere(b: &BundleId) -> EkValue {
    let raw = ek_sphere_raw(b.n(), b.k(), b.l());
    let value = residue_mod1(&raw);
    let value = if b.reversed() { res_neg(&value) } else { value };
    EkValue { value, n: b.n(), k: b.k(), l: b.l() }
}

/// The invariant is additive under connected sum: fold the residues.
/// The empty sum is the standard sphere's value, zero.
pub fn ek_connected_sum(values: &[ResMod1]) -> ResMod1 {
    values.iter().fold(ResMod1::zero(), |acc, v| crate::exact::res_add(&acc, v))
}

/// Period of `k -> mu(n, k, l)`: `2^{4n-1} q_n l` (56 l and 16256 l).
///
/// The half of this value divides the invariant's denominator but is NOT a
/// period: it shifts `mu` by `(2k+l)/2 mod 1`, which is `1/2` whenever `l` is
/// odd. See the regression tests pinning `mu(1,28,1) = 1/2 != mu(1,0,1)`.
pub fn period_sphere(n: u8, l: i64) -> Result<i64, CoreError> {
    if !(n == 1 || n == 2) {
        return Err(CoreError::InvalidDimension(n));
    }
    if l < 1 {
        return Err(CoreError::NonPositiveEuler(l));
    }
    let step = (1i64 << (4 * u32::from(n) - 1)) * qn(n);
    step.checked_mul(l).ok_or(CoreError::Overflow("period of the invariant"))
}

/// Largest family size accepted by [`family`], to bound allocation.
pub const FAMILY_LIMIT: u64 = 1_000_000;

/// `count` identifiers `(n, k + m * period, l)` for `m = 0, 1, ...`,
/// starting with `b` itself: pairwise distinct as bundles and all mutually
/// diffeomorphic with equal invariant. The orientation flag is preserved.
pub fn family(b: &BundleId, count: u64) -> Result<Vec<BundleId>, CoreError> {
    if count > FAMILY_LIMIT {
        return Err(CoreError::LimitExceeded("family size", FAMILY_LIMIT));
    }
    let step = period_sphere(b.n(), b.l())?;
    let mut members = Vec::with_capacity(count as usize);
    for m in 0..count {
        let km = (b.k() as i128) + (m as i128) * (step as i128);
        let km = i64::try_from(km).map_err(|_| CoreError::Overflow("family member parameter"))?;
        members.push(BundleId { n: b.n(), k: km, l: b.l(), reversed: b.reversed() });
    }
    Ok(members)
}
