//! Involution quotients of the unit-Euler-number sphere bundles and their
//! invariants.
//!
//! For `l = 1` the total space `M^{8n-1}_k` is a homotopy sphere and carries
//! a free fiberwise-antipodal involution; `QuotientId { n, k }` names the
//! quotient `Q^{8n-1}_k`. The quotient admits two spin structures, so its
//! invariant is an unordered pair of residues:
//!
//! `mu(Q_k) = k(k+1)/(2^{4n} q_n) +/- (2k+1)/2^{4n+1}  in Q/Z`.
//!
//! The two branches always sum to the covering sphere's invariant, which is
//! what makes the pair well defined as a set. This module also carries the
//! full-period counting scans and a direct port of the quadratic reference
//! counting loop those counts were originally established with.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use num_bigint::BigInt;

use crate::bundles::{ek_sphere_raw, period_sphere, qn};
use crate::error::CoreError;
use crate::exact::{residue_mod1, Rat, ResMod1};

/// Identifier of the involution quotient `Q^{8n-1}_k` (always `l = 1`).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct QuotientId {
    n: u8,
    k: i64,
}

impl QuotientId {
    /// Builds an identifier; `n` must be 1 or 2, `k` is unrestricted.
    pub fn new(n: u8, k: i64) -> Result<QuotientId, CoreError> {
        if !(n == 1 || n == 2) {
            return Err(CoreError::InvalidDimension(n));
        }
        Ok(QuotientId { n, k })
    }

    /// Family selector: 1 or 2.
    pub fn n(&self) -> u8 {
        self.n
    }

    /// Clutching parameter of the covering sphere bundle.
    pub fn k(&self) -> i64 {
        self.k
    }
}

/// Unordered pair of residues, stored sorted ascending so that equal pairs
/// have identical representation and serialization (`{"pair": [lo, hi]}`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct EkPair {
    pair: [ResMod1; 2],
}

impl EkPair {
    /// Builds the canonical (sorted) pair from the two branches in any order.
    pub fn new(a: ResMod1, b: ResMod1) -> EkPair {
        if a <= b {
            EkPair { pair: [a, b] }
        } else {
            EkPair { pair: [b, a] }
        }
    }

    /// The smaller branch.
    pub fn low(&self) -> &ResMod1 {
        &self.pair[0]
    }

    /// The larger branch.
    pub fn high(&self) -> &ResMod1 {
        &self.pair[1]
    }
}

/// Invariant pair of the quotient, one branch per spin structure:
/// `k(k+1)/(2^{4n} q_n) +/- (2k+1)/2^{4n+1}` as canonical residues.
pub fn ek_quotient(q: &QuotientId) -> EkPair {
    let k = BigInt::from(q.k());
    let first = Rat::from_big(
        &k * (&k + 1),
        BigInt::from(2).pow(4 * u32::from(q.n())) * BigInt::from(qn(q.n())),
    );
    let second = Rat::from_big(
        BigInt::from(2 * q.k() + 1),
        BigInt::from(2).pow(4 * u32::from(q.n()) + 1),
    );
    EkPair::new(residue_mod1(&(&first + &second)), residue_mod1(&(&first - &second)))
}

/// The same pair derived from the covering sphere's raw invariant: take the
/// `l = 1` representative `r = k(k+1)/(2^{4n-1} q_n)` of `mu(M_k)` and form
/// `r/2 +/- (2k+1)/2^{4n+1}`.
///
/// The halving happens on the rational representative, not on its residue;
/// reducing mod 1 first would corrupt the branch parity (see the `k = 10`
/// regression in the tests). Agreeing with [`ek_quotient`] on every `k` is a
/// genuine cross-check because the sphere route computes `r` through
/// `((2k+l)^2 - l)/(2^{4n+1} q_n l)` rather than through `k(k+1)`.
pub fn ek_quotient_from_sphere(q: &QuotientId) -> EkPair {
    let r = ek_sphere_raw(q.n(), q.k(), 1);
    let half = &r / &Rat::from_int(2);
    let second = Rat::from_big(
        BigInt::from(2 * q.k() + 1),
        BigInt::from(2).pow(4 * u32::from(q.n()) + 1),
    );
    EkPair::new(residue_mod1(&(&half + &second)), residue_mod1(&(&half - &second)))
}

/// Normal invariant of the 7-dimensional quotient `Q^7_k` as an element of
/// `Z/4`: `(k(k+1)/2 mod 28) mod 4`, i.e. the covering sphere's invariant
/// scaled to an integer in `{0..27}` and reduced.
///
/// The image is all of `Z/4`; minimal witnesses are `k = 0, 1, 3, 2` for the
/// values `0, 1, 2, 3` (note `k = 3` and `k = 4` collide on the value 2).
pub fn normal_invariant_beta(k: i64) -> u8 {
    let k = i128::from(k);
    let triangular = k * (k + 1) / 2;
    ((triangular.rem_euclid(28)) % 4) as u8
}

/// Splitting obstruction of the free involution on the covering sphere:
/// identically zero in both families, for every `k`. Kept as an operation so
/// the classification pipeline records it explicitly.
pub fn browder_livesay(_q: &QuotientId) -> i64 {
    0
}

/// Period of `k -> ek_quotient(n, k)`: `2^{4n-1} q_n` (56 and 16256), the
/// same as the covering spheres' period at `l = 1`. Each branch separately
/// already has this period.
pub fn period_quotient(n: u8) -> Result<i64, CoreError> {
    period_sphere(n, 1)
}

/// Distinct-value counts produced by the quadratic reference loop.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ReplicaCounts {
    /// Distinct sphere invariants counted by last occurrence.
    pub countermu: u64,
    /// Distinct quotient pairs counted by last occurrence.
    pub countermuquo: u64,
}

/// Full-period counts of distinct invariants at `l = 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CountReport {
    /// Family selector the scan ran over.
    pub n: u8,
    /// Distinct sphere residues over one period.
    pub sphere_values: u64,
    /// Distinct quotient pairs over one period.
    pub quotient_pairs: u64,
    /// Reference-loop counts, when requested (`n = 2` only).
    pub replica: Option<ReplicaCounts>,
}

/// Scans one full period of `k` and counts distinct sphere residues and
/// distinct quotient pairs (set-based, exact arithmetic).
pub fn count_distinct(n: u8) -> Result<CountReport, CoreError> {
    let period = period_quotient(n)?;
    let mut sphere: BTreeSet<ResMod1> = BTreeSet::new();
    let mut pairs: BTreeSet<EkPair> = BTreeSet::new();
    for k in 0..period {
        sphere.insert(residue_mod1(&ek_sphere_raw(n, k, 1)));
        pairs.insert(ek_quotient(&QuotientId { n, k }));
    }
    Ok(CountReport {
        n,
        sphere_values: sphere.len() as u64,
        quotient_pairs: pairs.len() as u64,
        replica: None,
    })
}

/// [`count_distinct`] plus the quadratic reference loop; defined only for
/// `n = 2`, where that loop exists.
pub fn count_distinct_with_replica(n: u8) -> Result<CountReport, CoreError> {
    if n != 2 {
        if n == 1 {
            return Err(CoreError::ReplicaRequiresN2);
        }
        return Err(CoreError::InvalidDimension(n));
    }
    let mut report = count_distinct(n)?;
    report.replica = Some(reference_count_loop());
    Ok(report)
}

/// Direct port of the quadratic counting loop for `n = 2`, the way the
/// distinct-value counts were first established: integer arithmetic with
/// `mu` scaled by 16256 and the pair branches scaled by 65024, loop bound
/// 16255, last-occurrence counting (an index is counted when its value never
/// reappears later), and the pair comparison nested inside the equal-`mu`
/// branch. An independent cross-check of [`count_distinct`]'s set scan.
///
/// The bound 16255 undercounts nothing: the one omitted index (`k = 16255`)
/// repeats both the residue and the pair of `k = 127`.
pub fn reference_count_loop() -> ReplicaCounts {
    const N: i64 = 16255;
    let size = N as usize;
    let mut mu = vec![0i64; size];
    let mut quo_plus = vec![0i64; size];
    let mut quo_minus = vec![0i64; size];
    for i in 0..N {
        let idx = i as usize;
        mu[idx] = (i * (i + 1)) % 16256;
        quo_plus[idx] = (2 * i * (i + 1) + 127 * (2 * i + 1)) % 65024;
        quo_minus[idx] = (65024 + 2 * i * (i + 1) - 127 * (2 * i + 1)) % 65024;
    }

    let mut countermu = 0u64;
    let mut countermuquo = 0u64;
    for i in 0..size {
        let mut help_mu = 0u32;
        let mut help_quo = 0u32;
        for k in i..size {
            if mu[i] == mu[k] && k != i {
                help_mu += 1;
                if (quo_plus[i] == quo_plus[k] && quo_minus[i] == quo_minus[k])
                    || (quo_plus[i] == quo_minus[k] && quo_minus[i] == quo_plus[k])
                {
                    help_quo += 1;
                }
            }
        }
        if help_mu == 0 {
            countermu += 1;
        }
        if help_quo == 0 {
            countermuquo += 1;
        }
    }
    ReplicaCounts { countermu, countermuquo }
}

/// Outcome of checking "equal sphere invariants force equal quotient pairs"
/// over one full period.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MuImplication {
    /// Whether the implication held for every pair of indices.
    pub holds: bool,
    /// Offending `(k0, k1)` pairs: equal sphere residue, different pair.
    pub counterexamples: Vec<(i64, i64)>,
}

/// Buckets one period of `k` by sphere residue and verifies the quotient
/// pair is constant within every bucket (`O(period)` exact arithmetic).
pub fn verify_mu_implication(n: u8) -> Result<MuImplication, CoreError> {
    let period = period_quotient(n)?;
    let mut buckets: BTreeMap<ResMod1, (i64, EkPair)> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for k in 0..period {
        let sphere = residue_mod1(&ek_sphere_raw(n, k, 1));
        let pair = ek_quotient(&QuotientId { n, k });
        match buckets.get(&sphere) {
            None => {
                buckets.insert(sphere, (k, pair));
            }
            Some((k0, first_pair)) => {
                if first_pair != &pair {
                    counterexamples.push((*k0, k));
                }
            }
        }
    }
    Ok(MuImplication { holds: counterexamples.is_empty(), counterexamples })
}
