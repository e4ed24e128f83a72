//! Exact-arithmetic diffeomorphism invariants of sphere bundles over
//! spheres and their involution quotients.
//!
//! The objects are the total spaces of linear `S^{4n-1}`-bundles over
//! `S^{4n}` for `n = 1, 2`: closed `(8n-1)`-manifolds determined by a
//! clutching parameter `k` and the Euler number `l >= 1` of the underlying
//! rank-`4n` vector bundle. For `l = 1` these are homotopy spheres carrying
//! free involutions, and their quotients are the second family of interest.
//!
//! Everything the crate computes is exact: invariants live in `Q/Z` as
//! reduced rationals in `[0, 1)`, characteristic numbers are integers or
//! rationals, and no floating point enters any decision. The main entry
//! points are
//!
//! - [`bundles::ek_sphere`]: the boundary invariant
//!   `mu = ((2k+l)^2 - l)/(2^{4n+1} q_n l) mod 1` with `q_1 = 7`,
//!   `q_2 = 127`, constant on orientation-preserving diffeomorphism classes;
//! - [`quotients::ek_quotient`]: the unordered pair of residues attached to
//!   the two spin structures of an involution quotient;
//! - [`classify::is_diffeomorphic`]: the full decision procedure (invariant
//!   equality plus the unit-square-root congruence `2k ≡ 2γk' mod l`);
//! - [`classify::enumerate_types`]: the finite enumeration of types within a
//!   family, e.g. 16 types for `(n, l) = (1, 1)` and 4096 for `(2, 1)`;
//! - [`classify::separation_certificate`]: exact witnesses that two
//!   diffeomorphic total spaces are separated in moduli by the relative
//!   characteristic number `<pbar_n(W)^2, [W, M]>`, backed by nonsingular
//!   2x2 systems read off the A-hat and L multiplicative sequences computed
//!   in [`genera`].

#![forbid(unsafe_code)]

pub mod bundles;
pub mod classify;
pub mod error;
pub mod exact;
pub mod genera;
pub mod quotients;

pub use bundles::{
    char_number_pbar_sq, characteristic_numbers, ek_connected_sum, ek_sphere, family,
    period_sphere, qn, BundleId, CharNumbers, EkValue, FAMILY_LIMIT, PARAM_LIMIT,
};
pub use classify::{
    enumerate_quotient_types, enumerate_types, is_diffeomorphic,
    is_diffeomorphic_any_orientation, path_component_lower_bound, separation_certificate,
    DiffeoReason, DiffeoVerdict, Enumeration, OrientationVerdicts, QuotientEnumeration,
    SeparationCertificate, VanishingSystem, ENUMERATION_PERIOD_LIMIT,
};
pub use error::CoreError;
pub use exact::{
    res_add, res_neg, residue_mod1, unit_sqrts_mod, Rat, ResMod1, UnitSqrtSet,
    UNIT_SQRT_MODULUS_LIMIT,
};
pub use genera::{
    a_coeff, char_series, evaluate_genus, local_sign_contribution, local_spin_contribution,
    multiplicative_sequence, t_coeff, CharSeries, GenusPoly, Partition, PontryaginData,
    SeriesKind,
};
pub use quotients::{
    browder_livesay, count_distinct, count_distinct_with_replica, ek_quotient,
    ek_quotient_from_sphere, normal_invariant_beta, period_quotient, reference_count_loop,
    verify_mu_implication, CountReport, EkPair, MuImplication, QuotientId, ReplicaCounts,
};
