//! Leading Laurent coefficients of quantum integers and factorials at
//! `q_n = exp(2πi/n)`, in natural-log magnitude domain.
//!
//! The quantum integer `{m} = -i(q^{m/2} - q^{-m/2})` evaluates to
//! `2 sin(πm/n)` at `q_n`; when `n | m` the value vanishes and the leading
//! Taylor coefficient is `(-1)^k · kn · u` with `k = m/n` and the fixed
//! unit `u = -i·q_n⁻¹`. A [`LaurentLead`] stores order, log-magnitude,
//! reduced sign and the count of absorbed `u` factors, so that products of
//! thousands of quantum integers never leave the log domain. Magnitudes of
//! interest reach `e^{n·Vol/2π} ≈ e^{1870}` at `n = 1600`.

use std::f64::consts::PI;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// Relative threshold below which an accumulated sum counts as catastrophic
/// cancellation. The 6j z-sums this crate builds have same-sign summands, so
/// a raised flag indicates either a genuine zero of the function or a bug.
pub const EPS_CANCEL: f64 = 1e-9;

/// Sign of the real reduced leading coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    /// The reduced coefficient is not known to be real of definite sign
    /// (square roots of negative radicands, odd powers of `i`).
    Indeterminate,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x >= 0.0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_f64(self) -> Option<f64> {
        match self {
            Sign::Plus => Some(1.0),
            Sign::Minus => Some(-1.0),
            Sign::Indeterminate => None,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        use Sign::*;
        match (self, rhs) {
            (Indeterminate, _) | (_, Indeterminate) => Indeterminate,
            (Plus, Plus) | (Minus, Minus) => Plus,
            _ => Minus,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Indeterminate => Sign::Indeterminate,
        }
    }
}

/// Order, log-magnitude, sign and phase-unit count of the leading Laurent
/// coefficient of a function at `q_n`.
///
/// The actual leading coefficient is `sign · e^{log_mag} · u^{phase_units}`
/// with `u = -i·q_n⁻¹`; `|coefficient| = e^{log_mag}` always. The zero
/// function is the sentinel with `log_mag = -∞` and `order = i64::MAX`.
#[derive(Clone, Copy, Debug)]
pub struct LaurentLead {
    order: i64,
    log_mag: f64,
    sign: Sign,
    phase_units: i64,
    near_cancel: bool,
}

impl PartialEq for LaurentLead {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() == other.is_zero();
        }
        self.order == other.order
            && self.log_mag == other.log_mag
            && self.sign == other.sign
            && self.phase_units == other.phase_units
    }
}

impl LaurentLead {
    pub fn new(order: i64, log_mag: f64, sign: Sign, phase_units: i64) -> LaurentLead {
        if log_mag == f64::NEG_INFINITY {
            return LaurentLead::zero();
        }
        LaurentLead {
            order,
            log_mag,
            sign,
            phase_units,
            near_cancel: false,
        }
    }

    /// The zero function. Order and phase are canonicalized.
    pub fn zero() -> LaurentLead {
        LaurentLead {
            order: i64::MAX,
            log_mag: f64::NEG_INFINITY,
            sign: Sign::Plus,
            phase_units: 0,
            near_cancel: false,
        }
    }

    /// The constant function 1.
    pub fn one() -> LaurentLead {
        LaurentLead::new(0, 0.0, Sign::Plus, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.log_mag == f64::NEG_INFINITY
    }

    /// Laurent order at `q_n`; negative means a pole, `i64::MAX` is the
    /// zero-function sentinel.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Natural log of the leading-coefficient modulus.
    pub fn log_mag(&self) -> f64 {
        self.log_mag
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Count of absorbed singular-factor units `u = -i·q_n⁻¹`.
    pub fn phase_units(&self) -> i64 {
        self.phase_units
    }

    /// True when a sum that produced this value lost more than a factor of
    /// [`EPS_CANCEL`] to cancellation. Propagates through products.
    pub fn near_cancellation(&self) -> bool {
        self.near_cancel
    }

    /// Multiplicative inverse; errors on the zero sentinel.
    pub fn try_inv(self) -> Result<LaurentLead> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        Ok(LaurentLead {
            order: -self.order,
            log_mag: -self.log_mag,
            sign: self.sign,
            phase_units: -self.phase_units,
            near_cancel: self.near_cancel,
        })
    }

    /// `self / rhs`; orders, log-magnitudes and phase units subtract.
    pub fn try_div(self, rhs: LaurentLead) -> Result<LaurentLead> {
        Ok(self * rhs.try_inv()?)
    }

    /// Magnitude branch of the square root: order, log-magnitude and phase
    /// halve. The sign stays `+1` for a positive radicand and degrades to
    /// indeterminate otherwise; the magnitude remains exact either way.
    pub fn sqrt_mag(self) -> Result<LaurentLead> {
        if self.is_zero() {
            return Ok(self);
        }
        if self.order % 2 != 0 || self.phase_units % 2 != 0 {
            return Err(Error::OddParity {
                order: self.order,
                phase_units: self.phase_units,
            });
        }
        Ok(LaurentLead {
            order: self.order / 2,
            log_mag: self.log_mag / 2.0,
            sign: if self.sign == Sign::Plus {
                Sign::Plus
            } else {
                Sign::Indeterminate
            },
            phase_units: self.phase_units / 2,
            near_cancel: self.near_cancel,
        })
    }

    /// Multiply by a bare sign (global `±1` or indeterminate factors).
    pub fn scaled_by(self, sign: Sign) -> LaurentLead {
        if self.is_zero() {
            return self;
        }
        LaurentLead {
            sign: self.sign * sign,
            ..self
        }
    }
}

impl Mul for LaurentLead {
    type Output = LaurentLead;

    /// Orders add, log-magnitudes add, signs multiply, phase units add.
    /// The zero sentinel annihilates.
    fn mul(self, rhs: LaurentLead) -> LaurentLead {
        if self.is_zero() || rhs.is_zero() {
            let mut z = LaurentLead::zero();
            z.near_cancel = self.near_cancel || rhs.near_cancel;
            return z;
        }
        LaurentLead {
            order: self.order + rhs.order,
            log_mag: self.log_mag + rhs.log_mag,
            sign: self.sign * rhs.sign,
            phase_units: self.phase_units + rhs.phase_units,
            near_cancel: self.near_cancel || rhs.near_cancel,
        }
    }
}

impl Neg for LaurentLead {
    type Output = LaurentLead;
    fn neg(self) -> LaurentLead {
        self.scaled_by(Sign::Minus)
    }
}

/// Sum of a stream of leading coefficients.
///
/// Only terms of minimal order survive. Those must agree on `phase_units`
/// and have a definite sign; their signed magnitudes accumulate through a
/// streaming log-sum-exp relative to the running maximal `log_mag`. When
/// cancellation eats the sum down below `e^{log_max}·EPS_CANCEL`, the
/// result carries the near-cancellation flag.
pub fn lead_sum<I>(terms: I) -> Result<LaurentLead>
where
    I: IntoIterator<Item = LaurentLead>,
{
    let mut min_order = i64::MAX;
    let mut phase = 0i64;
    let mut log_max = f64::NEG_INFINITY;
    let mut acc = 0.0f64;
    let mut any = false;
    // a conflict only matters if its order is still minimal at the end
    let mut conflict: Option<Error> = None;

    for term in terms {
        if term.is_zero() {
            continue;
        }
        if term.order > min_order {
            continue; // higher order, discarded
        }
        if term.order < min_order {
            min_order = term.order;
            phase = term.phase_units;
            log_max = f64::NEG_INFINITY;
            acc = 0.0;
            any = true;
            conflict = None;
        } else if term.phase_units != phase {
            conflict = Some(Error::PhaseMismatch { order: min_order });
            continue;
        }
        let s = match term.sign.as_f64() {
            Some(s) => s,
            None => {
                conflict = Some(Error::IndeterminateSum);
                continue;
            }
        };
        if term.log_mag > log_max {
            acc = acc * (log_max - term.log_mag).exp() + s;
            log_max = term.log_mag;
        } else {
            acc += s * (term.log_mag - log_max).exp();
        }
    }

    if let Some(e) = conflict {
        return Err(e);
    }
    if !any {
        return Ok(LaurentLead::zero());
    }
    let mag = acc.abs();
    if mag == 0.0 {
        let mut z = LaurentLead::zero();
        z.near_cancel = true;
        return Ok(z);
    }
    let mut out = LaurentLead::new(min_order, log_max + mag.ln(), Sign::of(acc), phase);
    out.near_cancel = mag < EPS_CANCEL;
    Ok(out)
}

/// Leading Laurent coefficient of the quantum integer `{m}` at `q_n`.
///
/// `{0}` is the zero function; `{kn}` has a simple zero with leading
/// coefficient `(-1)^k · kn · u`; otherwise the value is `2 sin(πm/n)`.
pub fn qint_lead(m: u32, n: u32) -> LaurentLead {
    assert!(n >= 3, "root order must be at least 3");
    if m == 0 {
        return LaurentLead::zero();
    }
    if m % n == 0 {
        let k = m / n;
        let sign = if k % 2 == 0 { Sign::Plus } else { Sign::Minus };
        return LaurentLead::new(1, (m as f64).ln(), sign, 1);
    }
    let v = 2.0 * (PI * ((m % (2 * n)) as f64) / n as f64).sin();
    LaurentLead::new(0, v.abs().ln(), Sign::of(v), 0)
}

/// Per-`n` prefix sums over `j = 1..=max_arg` enabling `O(1)` evaluation of
/// the leading coefficient of `{m}!` at `q_n`.
#[derive(Clone, Debug)]
pub struct SineTable {
    n: u32,
    max_arg: u32,
    /// `prefix_log[m] = Σ_{1≤j≤m, n∤j} ln|2 sin(πj/n)|`.
    prefix_log: Vec<f64>,
    /// `zero_count[m] = ⌊m/n⌋`, the number of singular factors.
    zero_count: Vec<u32>,
    /// Parity of the count of `j ≤ m` with `sin(πj/n) < 0`.
    neg_parity: Vec<bool>,
    /// `Σ ln(kn)` over singular `j = kn ≤ m`.
    sing_mag: Vec<f64>,
    /// Parity of the count of odd `k` over singular `j = kn ≤ m`; the
    /// reduced coefficient of `{kn}` has sign `(-1)^k`.
    sing_sign_parity: Vec<bool>,
}

impl SineTable {
    /// Table for `q_n` covering factorial arguments up to `max_arg`.
    pub fn new(n: u32, max_arg: u32) -> SineTable {
        assert!(n >= 3, "root order must be at least 3");
        let len = max_arg as usize + 1;
        let mut prefix_log = Vec::with_capacity(len);
        let mut zero_count = Vec::with_capacity(len);
        let mut neg_parity = Vec::with_capacity(len);
        let mut sing_mag = Vec::with_capacity(len);
        let mut sing_sign_parity = Vec::with_capacity(len);

        let (mut plog, mut zc, mut neg, mut smag, mut spar) = (0.0f64, 0u32, false, 0.0f64, false);
        prefix_log.push(plog);
        zero_count.push(zc);
        neg_parity.push(neg);
        sing_mag.push(smag);
        sing_sign_parity.push(spar);

        for j in 1..=max_arg {
            if j % n == 0 {
                let k = j / n;
                zc += 1;
                smag += (j as f64).ln();
                spar ^= k % 2 == 1;
            } else {
                let v = 2.0 * (PI * ((j % (2 * n)) as f64) / n as f64).sin();
                plog += v.abs().ln();
                neg ^= v < 0.0;
            }
            prefix_log.push(plog);
            zero_count.push(zc);
            neg_parity.push(neg);
            sing_mag.push(smag);
            sing_sign_parity.push(spar);
        }

        SineTable {
            n,
            max_arg,
            prefix_log,
            zero_count,
            neg_parity,
            sing_mag,
            sing_sign_parity,
        }
    }

    /// Default table for `q_n`: arguments up to `⌈2.6·n⌉`, which covers the
    /// 6j z-sums of the hyperbolic 6-tuples the experiments exercise.
    pub fn for_root(n: u32) -> SineTable {
        SineTable::new(n, (2.6 * n as f64).ceil() as u32)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn max_arg(&self) -> u32 {
        self.max_arg
    }

    /// Leading Laurent coefficient of the quantum factorial `{m}!` at `q_n`
    /// in `O(1)`: order and phase both equal `⌊m/n⌋`, magnitude and sign
    /// come from the prefix sums.
    pub fn qfact_lead(&self, m: u32) -> Result<LaurentLead> {
        if m > self.max_arg {
            return Err(Error::TableRange {
                arg: m,
                max: self.max_arg,
                n: self.n,
            });
        }
        let i = m as usize;
        let order = self.zero_count[i] as i64;
        let log_mag = self.prefix_log[i] + self.sing_mag[i];
        let negative = self.neg_parity[i] ^ self.sing_sign_parity[i];
        let sign = if negative { Sign::Minus } else { Sign::Plus };
        Ok(LaurentLead::new(order, log_mag, sign, order))
    }
}
