//! Partitions indexing Pontryagin monomials, and exact polynomials in the
//! Pontryagin variables `p_1, p_2, ...` keyed by partition.
//!
//! The monomial `p_1^2 * p_2` is indexed by the partition `[2, 1, 1]` (parts
//! stored weakly decreasing); its weight `4` is the total degree, counting
//! `p_i` with degree `i`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::CoreError;
use crate::exact::Rat;

/// Integer partition with weakly decreasing positive parts.
///
/// The derived order is lexicographic on the part lists, so within one weight
/// `[1,1] < [2]`: printed polynomials list `p1^2` before `p2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Canonicalizes the given parts (any order). Panics on a zero part;
    /// untrusted monomial text goes through [`Partition::parse_monomial`].
    pub fn new(mut parts: Vec<u32>) -> Partition {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The empty partition, indexing the constant monomial `1`.
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// The one-part partition `[k]`, indexing the variable `p_k`.
    pub fn single(k: u32) -> Partition {
        assert!(k > 0, "partition parts must be positive");
        Partition(vec![k])
    }

    /// Parts, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Sum of parts: the degree of the indexed monomial.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Partition of the product monomial (concatenation of parts).
    pub(crate) fn merged(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Parses monomial text: `"1"` (constant), `"p2"`, `"p1^2*p2"`.
    ///
    /// Factors are separated by `*`; each factor is `p<index>` with an
    /// optional `^<exponent>`; indices and exponents are positive.
    pub fn parse_monomial(s: &str) -> Result<Partition, CoreError> {
        let bad = || CoreError::Parse(format!("monomial {s:?} (expected e.g. \"p1^2*p2\" or \"1\")"));
        let s = s.trim();
        if s == "1" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let body = factor.strip_prefix('p').ok_or_else(bad)?;
            let (index_str, exp_str) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let index: u32 = index_str.parse().map_err(|_| bad())?;
            let exp: u32 = exp_str.parse().map_err(|_| bad())?;
            if index == 0 || exp == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(index, exp as usize));
        }
        Ok(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    /// Prints the indexed monomial with factors grouped ascending:
    /// `[2,1,1]` prints as `p1^2*p2`, the empty partition as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut multiplicity: BTreeMap<u32, u32> = BTreeMap::new();
        for &part in &self.0 {
            *multiplicity.entry(part).or_insert(0) += 1;
        }
        let mut first = true;
        for (part, count) in multiplicity {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if count == 1 {
                write!(f, "p{part}")?;
            } else {
                write!(f, "p{part}^{count}")?;
            }
        }
        Ok(())
    }
}

/// Exact polynomial in the `p_i`, keyed by partition; mixed weights allowed.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct PartitionPoly {
    terms: BTreeMap<Partition, Rat>,
}

impl PartitionPoly {
    pub fn zero() -> PartitionPoly {
        PartitionPoly::default()
    }

    pub fn one() -> PartitionPoly {
        let mut poly = PartitionPoly::default();
        poly.add_term(Partition::empty(), Rat::one());
        poly
    }

    pub fn add_term(&mut self, partition: Partition, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(partition).or_insert_with(Rat::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            let dead: Vec<Partition> =
                self.terms.iter().filter(|(_, c)| c.is_zero()).map(|(p, _)| p.clone()).collect();
            for p in dead {
                self.terms.remove(&p);
            }
        }
    }

    pub fn add(&self, rhs: &PartitionPoly) -> PartitionPoly {
        let mut out = self.clone();
        for (partition, coeff) in &rhs.terms {
            out.add_term(partition.clone(), coeff.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> PartitionPoly {
        let mut out = PartitionPoly::zero();
        for (partition, coeff) in &self.terms {
            out.add_term(partition.clone(), coeff * factor);
        }
        out
    }

    /// Product, discarding every term of weight above `max_weight`.
    pub fn mul_trunc(&self, rhs: &PartitionPoly, max_weight: u32) -> PartitionPoly {
        let mut out = PartitionPoly::zero();
        for (pa, ca) in &self.terms {
            if pa.weight() > max_weight {
                continue;
            }
            for (pb, cb) in &rhs.terms {
                if pa.weight() + pb.weight() > max_weight {
                    continue;
                }
                out.add_term(pa.merged(pb), ca * cb);
            }
        }
        out
    }

    /// The weight-`w` homogeneous part.
    pub fn homogeneous(&self, w: u32) -> BTreeMap<Partition, Rat> {
        self.terms
            .iter()
            .filter(|(p, _)| p.weight() == w)
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect()
    }
}

/// Newton power sum `S_j` expressed in the `p_i` (treated as the elementary
/// symmetric functions of the formal variables):
/// `S_j = p_1 S_{j-1} - p_2 S_{j-2} + ... + (-1)^j p_{j-1} S_1 + (-1)^{j-1} j p_j`.
pub(crate) fn newton_power_sum(j: u32) -> PartitionPoly {
    assert!(j >= 1, "power sums are indexed from 1");
    let mut sums: Vec<PartitionPoly> = Vec::with_capacity(j as usize + 1);
    sums.push(PartitionPoly::zero()); // S_0 unused placeholder
    for m in 1..=j {
        let mut s = PartitionPoly::zero();
        for i in 1..m {
            let sign = if i % 2 == 1 { Rat::one() } else { -Rat::one() };
            let mut e_i = PartitionPoly::zero();
            e_i.add_term(Partition::single(i), sign);
            s = s.add(&e_i.mul_trunc(&sums[(m - i) as usize], m));
        }
        let lead_sign = if m % 2 == 1 { Rat::from_int(m as i64) } else { Rat::from_int(-(m as i64)) };
        s.add_term(Partition::single(m), lead_sign);
        sums.push(s);
    }
    sums.pop().expect("built S_j")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_canonicalizes_and_orders() {
        let p = Partition::new(vec![1, 2, 1]);
        assert_eq!(p.parts(), &[2, 1, 1]);
        assert_eq!(p.weight(), 4);
        assert!(Partition::new(vec![1, 1]) < Partition::single(2), "p1^2 sorts before p2");
        assert!(Partition::new(vec![1, 1, 1, 1]) < Partition::new(vec![2, 1, 1]));
        assert!(Partition::new(vec![2, 2]) < Partition::new(vec![3, 1]));
        assert!(Partition::new(vec![3, 1]) < Partition::single(4));
    }

    #[test]
    fn monomial_display_groups_ascending() {
        assert_eq!(Partition::empty().to_string(), "1");
        assert_eq!(Partition::single(2).to_string(), "p2");
        assert_eq!(Partition::new(vec![1, 1]).to_string(), "p1^2");
        assert_eq!(Partition::new(vec![2, 1, 1]).to_string(), "p1^2*p2");
        assert_eq!(Partition::new(vec![3, 1]).to_string(), "p1*p3");
    }

    #[test]
    fn monomial_parse_round_trips() {
        for text in ["1", "p1", "p2", "p1^2", "p1^2*p2", "p1*p3", "p2^2", "p1^4"] {
            let p = Partition::parse_monomial(text).unwrap();
            assert_eq!(p.to_string(), text, "canonical text round trips");
        }
        assert_eq!(Partition::parse_monomial("p2*p1^2").unwrap(), Partition::new(vec![2, 1, 1]));
        assert!(Partition::parse_monomial("p0").is_err());
        assert!(Partition::parse_monomial("p1^0").is_err());
        assert!(Partition::parse_monomial("q1").is_err());
        assert!(Partition::parse_monomial("").is_err());
    }

    #[test]
    fn newton_sums_match_hand_expansion() {
        // S_1 = p1, S_2 = p1^2 - 2 p2, S_3 = p1^3 - 3 p1 p2 + 3 p3.
        let s1 = newton_power_sum(1);
        assert_eq!(s1.homogeneous(1).get(&Partition::single(1)), Some(&Rat::one()));

        let s2 = newton_power_sum(2);
        let h2 = s2.homogeneous(2);
        assert_eq!(h2.get(&Partition::new(vec![1, 1])), Some(&Rat::one()));
        assert_eq!(h2.get(&Partition::single(2)), Some(&Rat::from_int(-2)));

        let s3 = newton_power_sum(3);
        let h3 = s3.homogeneous(3);
        assert_eq!(h3.get(&Partition::new(vec![1, 1, 1])), Some(&Rat::one()));
        assert_eq!(h3.get(&Partition::new(vec![2, 1])), Some(&Rat::from_int(-3)));
        assert_eq!(h3.get(&Partition::single(3)), Some(&Rat::from_int(3)));
    }

    #[test]
    fn power_sums_evaluate_correctly_on_numbers() {
        // Check S_j against direct power sums for the variables {2, 3}:
        // e_1 = 5, e_2 = 6, e_3 = 0; power sums 2^j + 3^j.
        let eval = |poly: &PartitionPoly, j: u32| -> Rat {
            let e = [Rat::from_int(5), Rat::from_int(6), Rat::zero(), Rat::zero()];
            let mut total = Rat::zero();
            for (partition, coeff) in poly.homogeneous(j) {
                let mut term = coeff.clone();
                for &part in partition.parts() {
                    term = &term * &e[(part - 1) as usize];
                }
                total = &total + &term;
            }
            total
        };
        for j in 1..=4u32 {
            let expected = Rat::from_int(2i64.pow(j) + 3i64.pow(j));
            assert_eq!(eval(&newton_power_sum(j), j), expected, "S_{j} at {{2,3}}");
        }
    }

    #[test]
    fn poly_arithmetic_drops_zero_terms() {
        let mut a = PartitionPoly::zero();
        a.add_term(Partition::single(1), Rat::new(1, 2));
        a.add_term(Partition::single(1), Rat::new(-1, 2));
        assert_eq!(a, PartitionPoly::zero());

        let mut b = PartitionPoly::one();
        b.add_term(Partition::single(2), Rat::one());
        let prod = b.mul_trunc(&b, 2);
        // (1 + p2)^2 truncated to weight 2 = 1 + 2 p2.
        assert_eq!(prod.homogeneous(0).get(&Partition::empty()), Some(&Rat::one()));
        assert_eq!(prod.homogeneous(2).get(&Partition::single(2)), Some(&Rat::from_int(2)));
        assert!(prod.homogeneous(4).is_empty(), "weight-4 term truncated");
    }
}
