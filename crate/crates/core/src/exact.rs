//! Exact rational arithmetic, canonical residues modulo 1, and unit square
//! roots in modular arithmetic.
//!
//! Every invariant computed by this crate lives in `Q` or `Q/Z`, plus one
//! piece of modular arithmetic: the solutions of `gamma^2 = 1 (mod l)` that
//! drive the diffeomorphism criterion. No floating point is used anywhere;
//! values are arbitrary-precision rationals kept reduced with positive
//! denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::CoreError;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
///
/// Both invariants are maintained by every constructor and arithmetic
/// operation. Values print and serialize as `"num/den"` with the denominator
/// always present (`0/1`, `-1/1440`, `381/464486400`), so equal values have
/// equal representations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `numer/denom`, reducing and normalizing the sign.
    ///
    /// Panics if `denom == 0`; fallible construction from untrusted text goes
    /// through [`FromStr`] instead.
    pub fn new(numer: i64, denom: i64) -> Rat {
        assert!(denom != 0, "Rat denominator must be nonzero");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Builds `numer/denom` from big integers. Panics if `denom == 0`.
    pub fn from_big(numer: BigInt, denom: BigInt) -> Rat {
        assert!(!denom.is_zero(), "Rat denominator must be nonzero");
        Rat(BigRational::new(numer, denom))
    }

    /// The integer `v` as a rational (`v/1`).
    pub fn from_int(v: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    /// `0/1`.
    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    /// `1/1`.
    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    /// Numerator of the reduced form (carries the sign).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the reduced form (always positive).
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Whether the value is `0`.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Whether the value is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Whether the denominator is `1`.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Nearest `f64`, for display purposes only; never used in computation.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                self.$method(&rhs)
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Rat {
        Rat::from_int(v)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({self})")
    }
}

impl FromStr for Rat {
    type Err = CoreError;

    /// Parses `"a/b"` or a bare integer `"a"`. Rejects `b == 0`.
    fn from_str(s: &str) -> Result<Rat, CoreError> {
        let bad = || CoreError::Parse(format!("rational {s:?} (expected \"num/den\" or \"num\")"));
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let numer = BigInt::from_str(num_str).map_err(|_| bad())?;
        let denom = BigInt::from_str(den_str).map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(CoreError::Parse(format!("rational {s:?} (zero denominator)")));
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Canonical residue in `Q/Z`: the unique representative `r` with `0 <= r < 1`.
///
/// Ordering, equality, and serialization all act on that representative, so
/// residues are directly usable as set keys and print canonically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResMod1(Rat);

impl ResMod1 {
    /// The zero residue `0/1`.
    pub fn zero() -> ResMod1 {
        ResMod1(Rat::zero())
    }

    /// The canonical representative, a reduced rational in `[0, 1)`.
    pub fn value(&self) -> &Rat {
        &self.0
    }

    /// Whether the residue is `0` in `Q/Z`.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for ResMod1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for ResMod1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ResMod1({})", self.0)
    }
}

impl Serialize for ResMod1 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Canonical residue of `r` modulo 1: `r - floor(r)`, in `[0, 1)`.
pub fn residue_mod1(r: &Rat) -> ResMod1 {
    let floor = Rat(BigRational::from_integer(r.floor()));
    ResMod1(r - floor)
}

/// Group law in `Q/Z` on canonical residues.
pub fn res_add(a: &ResMod1, b: &ResMod1) -> ResMod1 {
    residue_mod1(&(&a.0 + &b.0))
}

/// Inverse in `Q/Z`: `res_add(a, res_neg(a))` is zero.
pub fn res_neg(a: &ResMod1) -> ResMod1 {
    residue_mod1(&-&a.0)
}

/// Largest modulus accepted by [`unit_sqrts_mod`]; the enumeration is a
/// linear scan, so the bound keeps worst-case latency to a fraction of a
/// second.
pub const UNIT_SQRT_MODULUS_LIMIT: u64 = 10_000_000;

/// The solutions of `gamma^2 = 1 (mod l)`, sorted ascending.
///
/// For `l = 1` the set is `{0}` (zero is the canonical residue of 1 mod 1).
/// For `l > 2` the set is closed under `gamma -> l - gamma` and always
/// contains `1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct UnitSqrtSet {
    modulus: u64,
    roots: Vec<u64>,
}

impl UnitSqrtSet {
    /// The modulus the set was computed for.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The roots, sorted ascending, each in `[0, modulus)`.
    pub fn roots(&self) -> &[u64] {
        &self.roots
    }

    /// Membership test.
    pub fn contains(&self, gamma: u64) -> bool {
        self.roots.binary_search(&gamma).is_ok()
    }
}

/// Enumerates the square roots of unity modulo `l` by exhaustive scan.
///
/// Rejects `l = 0` and moduli above [`UNIT_SQRT_MODULUS_LIMIT`].
pub fn unit_sqrts_mod(l: u64) -> Result<UnitSqrtSet, CoreError> {
    if l == 0 {
        return Err(CoreError::ZeroModulus);
    }
    if l > UNIT_SQRT_MODULUS_LIMIT {
        return Err(CoreError::LimitExceeded(
            "unit square root enumeration scans every residue",
            UNIT_SQRT_MODULUS_LIMIT,
        ));
    }
    if l == 1 {
        return Ok(UnitSqrtSet { modulus: 1, roots: vec![0] });
    }
    let roots = (1..l).filter(|g| (g * g) % l == 1).collect();
    Ok(UnitSqrtSet { modulus: l, roots })
}
