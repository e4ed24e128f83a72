//! Truncated formal power series over exact rationals.
//!
//! Just enough machinery for characteristic power series: construction from a
//! coefficient rule, division, and the logarithm's coefficient recurrence.

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::Rat;

/// Factorial as a big integer.
pub(crate) fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Dense truncated power series; `c[i]` is the `z^i` coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Series {
    pub c: Vec<Rat>,
}

impl Series {
    /// Builds `len` coefficients from the index rule `f`.
    pub fn from_fn(len: usize, f: impl Fn(usize) -> Rat) -> Series {
        Series { c: (0..len).map(f).collect() }
    }

    /// Quotient series, truncated to `self.c.len()` coefficients.
    ///
    /// Uses the convolution recurrence `q_i = (a_i - sum_{j=1..=i} b_j q_{i-j}) / b_0`;
    /// requires `den.c[0] != 0`.
    pub fn div(&self, den: &Series) -> Series {
        let b0 = &den.c[0];
        assert!(!b0.is_zero(), "series division needs an invertible constant term");
        let len = self.c.len();
        let mut q: Vec<Rat> = Vec::with_capacity(len);
        for i in 0..len {
            let mut acc = self.c[i].clone();
            for j in 1..=i {
                if j < den.c.len() {
                    acc = &acc - &(&den.c[j] * &q[i - j]);
                }
            }
            q.push(&acc / b0);
        }
        Series { c: q }
    }

    /// Coefficients of `log(self)`; requires `c[0] == 1`. Index 0 holds `0`.
    ///
    /// Recurrence from `Q' = Q (log Q)'`:
    /// `c_n = q_n - (1/n) sum_{j=1..n-1} j c_j q_{n-j}`.
    pub fn log_coeffs(&self) -> Vec<Rat> {
        assert_eq!(self.c[0], Rat::one(), "series logarithm needs constant term 1");
        let len = self.c.len();
        let mut log: Vec<Rat> = vec![Rat::zero(); len];
        for n in 1..len {
            let mut acc = self.c[n].clone();
            #[allow(clippy::needless_range_loop)]
            for j in 1..n {
                let cross = &(&log[j] * &self.c[n - j]) * &Rat::from_int(j as i64);
                acc = &acc - &(&cross / &Rat::from_int(n as i64));
            }
            log[n] = acc;
        }
        log
    }
}
