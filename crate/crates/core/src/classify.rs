//! Diffeomorphism decisions, enumeration of diffeomorphism types, and
//! moduli-space separation certificates.
//!
//! Two bundles with the same `(n, l)` have orientation-preservingly
//! diffeomorphic total spaces exactly when their invariants agree in `Q/Z`
//! and the clutching parameters satisfy `2k ≡ 2·γ·k'  (mod l)` for some unit
//! square root `γ² ≡ 1 (mod l)`. On top of the decision procedure this
//! module builds the finite enumeration of types for fixed `(n, l)` and the
//! separation certificates: exact arithmetic witnesses that two bundles with
//! diffeomorphic total spaces are nonetheless distinguished by the relative
//! characteristic number `<pbar_n(W)^2, [W, M]>`, which places the metrics
//! they carry in different path components of the relevant moduli space.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bundles::{char_number_pbar_sq, ek_sphere, family, period_sphere, qn, BundleId};
use crate::error::CoreError;
use crate::exact::{unit_sqrts_mod, Rat, ResMod1};
use crate::genera::{multiplicative_sequence, Partition, SeriesKind};
use crate::quotients::count_distinct;

/// Reason attached to a [`DiffeoVerdict`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DiffeoReason {
    /// The Euler numbers (or the families) differ: never diffeomorphic.
    DifferentL,
    /// The invariants differ in `Q/Z`.
    MuDiffers,
    /// Equal invariants but no admissible `γ` satisfies the congruence.
    NoGamma,
    /// Diffeomorphic; `gamma_witness` carries the smallest witness.
    Ok,
}

/// Outcome of an orientation-preserving diffeomorphism decision.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DiffeoVerdict {
    /// Whether the total spaces are orientation-preservingly diffeomorphic.
    pub diffeomorphic: bool,
    /// Invariant of the left input (orientation flag respected).
    pub mu_left: ResMod1,
    /// Invariant of the right input (orientation flag respected).
    pub mu_right: ResMod1,
    /// Smallest `γ` in `[0, l)` with `γ² ≡ 1` and `2k ≡ 2γk' (mod l)`, when
    /// one exists. For `l = 1` the witness is the residue `0`, the class of
    /// every integer.
    pub gamma_witness: Option<u64>,
    /// Which branch of the criterion decided.
    pub reason: DiffeoReason,
}

/// Decides orientation-preserving diffeomorphism of the two total spaces.
///
/// The criterion for equal `(n, l)`: `mu` values agree and some
/// `γ ∈ unit_sqrts_mod(l)` satisfies `2k ≡ 2γk' (mod l)`; the smallest
/// witness is reported. Different `l` (or different `n`) is decided
/// immediately: such spaces are not even homotopy equivalent.
///
/// Orientation flags are honored through the invariants (`mu` negates under
/// reversal), so comparing against `b2.reverse_orientation()` implements the
/// orientation-reversing comparison; see
/// [`is_diffeomorphic_any_orientation`].
///
/// Fails only when `l` exceeds the square-root scan limit.
pub fn is_diffeomorphic(b1: &BundleId, b2: &BundleId) -> Result<DiffeoVerdict, CoreError> {
    let mu_left = ek_sphere(b1).value;
    let mu_right = ek_sphere(b2).value;
    if b1.n() != b2.n() || b1.l() != b2.l() {
        return Ok(DiffeoVerdict {
            diffeomorphic: false,
            mu_left,
            mu_right,
            gamma_witness: None,
            reason: DiffeoReason::DifferentL,
        });
    }
    if mu_left != mu_right {
        return Ok(DiffeoVerdict {
            diffeomorphic: false,
            mu_left,
            mu_right,
            gamma_witness: None,
            reason: DiffeoReason::MuDiffers,
        });
    }
    let l = b1.l();
    let roots = unit_sqrts_mod(l as u64)?;
    let witness = roots
        .roots()
        .iter()
        .copied()
        .find(|&g| congruence_holds(b1.k(), b2.k(), g, l));
    match witness {
        Some(g) => Ok(DiffeoVerdict {
            diffeomorphic: true,
            mu_left,
            mu_right,
            gamma_witness: Some(g),
            reason: DiffeoReason::Ok,
        }),
        None => Ok(DiffeoVerdict {
            diffeomorphic: false,
            mu_left,
            mu_right,
            gamma_witness: None,
            reason: DiffeoReason::NoGamma,
        }),
    }
}

/// `2k ≡ 2γk' (mod l)`, evaluated without overflow.
fn congruence_holds(k1: i64, k2: i64, gamma: u64, l: i64) -> bool {
    let lhs = 2 * i128::from(k1);
    let rhs = 2 * i128::from(gamma) * i128::from(k2);
    (lhs - rhs).rem_euclid(i128::from(l)) == 0
}

/// Both orientation branches of the diffeomorphism decision, reported
/// separately together with their disjunction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrientationVerdicts {
    /// True when either branch is diffeomorphic.
    pub diffeomorphic: bool,
    /// `b1` against `b2` as oriented.
    pub preserving: DiffeoVerdict,
    /// `b1` against `b2.reverse_orientation()`; its `mu_right` is the
    /// negated residue, never the raw formula re-read at `(-k-l, l)`.
    pub reversing: DiffeoVerdict,
}

/// Decides diffeomorphism allowing either orientation on the right input.
///
/// Both branch verdicts are reported: the identification of a bundle with
/// the orientation reversal of its `k -> -k-l` partner and the sign rule for
/// the invariant pull against each other, and collapsing the two branches
/// into one answer would hide which one decided.
pub fn is_diffeomorphic_any_orientation(
    b1: &BundleId,
    b2: &BundleId,
) -> Result<OrientationVerdicts, CoreError> {
    let preserving = is_diffeomorphic(b1, b2)?;
    let reversing = is_diffeomorphic(b1, &b2.reverse_orientation())?;
    let diffeomorphic = preserving.diffeomorphic || reversing.diffeomorphic;
    Ok(OrientationVerdicts { diffeomorphic, preserving, reversing })
}

/// Largest scan window accepted by [`enumerate_types`].
pub const ENUMERATION_PERIOD_LIMIT: i64 = 2_000_000;

/// The diffeomorphism types within a fixed family `(n, l)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Enumeration {
    /// Family selector.
    pub n: u8,
    /// Euler number shared by the family.
    pub l: i64,
    /// Number of orientation-preserving diffeomorphism classes.
    pub count: u64,
    /// The smallest nonnegative `k` in each class, sorted ascending.
    pub representatives: Vec<i64>,
}

/// Partitions `k ∈ [0, period_sphere(n, l))` into diffeomorphism classes.
///
/// Soundness of the finite window: `k` and `k + period` are always
/// equivalent, because the invariant has that period and twice the period is
/// divisible by `l` (so the congruence class of `2k mod l` is unchanged).
/// Rather than trusting the first fact, the scan re-verifies it exhaustively
/// over the window before the partition is used.
///
/// The partition key is exact integer data: the invariant's numerator modulo
/// its fixed denominator, paired with the orbit minimum of `2k mod l` under
/// multiplication by the unit square roots. Two parameters share a key
/// exactly when [`is_diffeomorphic`] accepts them, but no rational
/// arithmetic is involved, which keeps full-period scans cheap and makes the
/// agreement with the rational code path a meaningful cross-check.
pub fn enumerate_types(n: u8, l: i64) -> Result<Enumeration, CoreError> {
    let period = period_sphere(n, l)?;
    if period > ENUMERATION_PERIOD_LIMIT {
        return Err(CoreError::LimitExceeded(
            "enumeration scan window",
            ENUMERATION_PERIOD_LIMIT as u64,
        ));
    }
    // Denominator of the invariant: 2^{4n+1} q_n l; numerators mod this value
    // classify residues because the denominator is constant over the family.
    let denom = i128::from(1i64 << (4 * u32::from(n) + 1)) * i128::from(qn(n)) * i128::from(l);
    let mu_key = |k: i64| -> i128 {
        let t = 2 * i128::from(k) + i128::from(l);
        (t * t - i128::from(l)).rem_euclid(denom)
    };
    assert_eq!((2 * period) % l, 0, "twice the period must kill the congruence modulus");
    for k in 0..period {
        assert_eq!(mu_key(k), mu_key(k + period), "period check failed at k = {k}");
    }

    let roots = unit_sqrts_mod(l as u64)?;
    let orbit_key = |k: i64| -> i64 {
        let r = (2 * i128::from(k)).rem_euclid(i128::from(l)) as i64;
        roots
            .roots()
            .iter()
            .map(|&g| ((i128::from(g) * i128::from(r)) % i128::from(l)) as i64)
            .min()
            .expect("the root set is never empty")
    };

    let mut classes: BTreeMap<(i128, i64), i64> = BTreeMap::new();
    for k in 0..period {
        classes.entry((mu_key(k), orbit_key(k))).or_insert(k);
    }
    let mut representatives: Vec<i64> = classes.into_values().collect();
    representatives.sort_unstable();
    Ok(Enumeration { n, l, count: representatives.len() as u64, representatives })
}

/// Count of quotient types distinguished by the invariant pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct QuotientEnumeration {
    /// Family selector.
    pub n: u8,
    /// Number of distinct invariant pairs over one period.
    pub count: u64,
    /// Whether the count is the exact class count (`n = 1`) or only a lower
    /// bound (`n = 2`, where the classification is not complete).
    pub exact: bool,
}

/// Enumerates quotient diffeomorphism types via the invariant pair.
///
/// For the 7-dimensional family the pair is a complete invariant, so the
/// count is exact. For the 15-dimensional family the count of distinct pairs
/// is only a lower bound on the number of types, and is flagged as such.
pub fn enumerate_quotient_types(n: u8) -> Result<QuotientEnumeration, CoreError> {
    let report = count_distinct(n)?;
    Ok(QuotientEnumeration { n, count: report.quotient_pairs, exact: n == 1 })
}

/// The 2x2 linear system extracted from genus coefficients, with its exact
/// determinant and the (unique, zero) solution of the homogeneous system.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VanishingSystem {
    /// Monomial labels of the two unknowns, in column order.
    pub unknowns: [String; 2],
    /// Row 0 from the A-hat sequence, row 1 from the L sequence.
    pub rows: [[Rat; 2]; 2],
    /// `rows[0][0]*rows[1][1] - rows[0][1]*rows[1][0]`, always nonzero.
    pub determinant: Rat,
    /// The forced values of the unknowns: zero and zero.
    pub solution: [Rat; 2],
}

/// Builds the vanishing system for the family: columns `(p1^2, p2)` from the
/// degree-2 sequences for `n = 1`; columns `(p4, p2^2)` from the degree-4
/// sequences for `n = 2`, where the decomposable monomials involving `p1`
/// drop out because the relevant closed 16-manifolds have no degree-4
/// cohomology. Coefficients are read off [`multiplicative_sequence`], never
/// hard-coded.
fn vanishing_system(n: u8) -> VanishingSystem {
    let (degree, columns) = match n {
        1 => (2, [Partition::new(vec![1, 1]), Partition::single(2)]),
        2 => (4, [Partition::single(4), Partition::new(vec![2, 2])]),
        _ => unreachable!("validated constructors only pass n = 1 or 2"),
    };
    let ahat = multiplicative_sequence(SeriesKind::Ahat, degree);
    let ell = multiplicative_sequence(SeriesKind::L, degree);
    let rows = [
        [ahat.coeff(&columns[0]), ahat.coeff(&columns[1])],
        [ell.coeff(&columns[0]), ell.coeff(&columns[1])],
    ];
    let determinant = &(&rows[0][0] * &rows[1][1]) - &(&rows[0][1] * &rows[1][0]);
    assert!(!determinant.is_zero(), "the genus coefficient matrix is nonsingular");
    // Cramer's rule on the homogeneous right-hand side: both numerator
    // determinants vanish, so the unique solution is (0, 0).
    let rhs = [Rat::zero(), Rat::zero()];
    let solution = [
        &(&(&rhs[0] * &rows[1][1]) - &(&rows[0][1] * &rhs[1])) / &determinant,
        &(&(&rows[0][0] * &rhs[1]) - &(&rhs[0] * &rows[1][0])) / &determinant,
    ];
    VanishingSystem {
        unknowns: [columns[0].to_string(), columns[1].to_string()],
        rows,
        determinant,
        solution,
    }
}

/// Fixed wording attached to every certificate; the geometric conclusion is
/// documentation, not computation.
const CERT_INTERPRETATION: &str = "A nonzero delta certifies that the two bundles are \
distinguished by the relative characteristic number <pbar_n(W)^2, [W, M]> even when their \
total spaces are diffeomorphic: the nonsingular system forces both index-theoretic unknowns \
of any interpolating coboundary to vanish, contradicting delta != 0, so the induced metrics \
lie in different path components of the moduli space.";

/// Exact arithmetic witness separating two bundles inside one family.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SeparationCertificate {
    /// Family selector.
    pub n: u8,
    /// Euler number shared by the two bundles.
    pub l: i64,
    /// Clutching parameter of the first bundle.
    pub k0: i64,
    /// Clutching parameter of the second bundle.
    pub k1: i64,
    /// `<pbar_n^2>` difference: `(4n-2)^2 ((2k0+l)^2 - (2k1+l)^2) / l`.
    pub delta: Rat,
    /// `delta != 0`, equivalently `|2k0+l| != |2k1+l|`.
    pub separated: bool,
    /// The forced vanishing that a nonzero `delta` contradicts.
    pub system_solution: VanishingSystem,
    /// What the arithmetic means geometrically (fixed wording).
    pub interpretation: &'static str,
}

/// Builds the separation certificate for `(n, k0, l)` against `(n, k1, l)`.
pub fn separation_certificate(
    n: u8,
    l: i64,
    k0: i64,
    k1: i64,
) -> Result<SeparationCertificate, CoreError> {
    let b0 = BundleId::new(n, k0, l)?;
    let b1 = BundleId::new(n, k1, l)?;
    let delta = &char_number_pbar_sq(&b0) - &char_number_pbar_sq(&b1);
    let separated = !delta.is_zero();
    Ok(SeparationCertificate {
        n,
        l,
        k0,
        k1,
        delta,
        separated,
        system_solution: vanishing_system(n),
        interpretation: CERT_INTERPRETATION,
    })
}

/// Verifies that the first `m` members of `b`'s family are pairwise
/// separated and returns `m`: a certified lower bound for the number of path
/// components of the moduli space attached to the shared total space.
///
/// The members share the invariant (they differ by multiples of the period),
/// while `2k + l` strictly increases along the family, so every pair must be
/// separated; a pair that is not indicates a period or step bug and is
/// reported as an error rather than skipped.
pub fn path_component_lower_bound(b: &BundleId, m: u64) -> Result<u64, CoreError> {
    let members = family(b, m)?;
    for (i, left) in members.iter().enumerate() {
        for right in members.iter().skip(i + 1) {
            let cert = separation_certificate(b.n(), b.l(), left.k(), right.k())?;
            if !cert.separated {
                return Err(CoreError::NotSeparated { k0: left.k(), k1: right.k() });
            }
        }
    }
    Ok(m)
}
