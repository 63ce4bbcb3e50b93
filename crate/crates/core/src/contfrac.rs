//! Continued-fraction machinery for fundamental units of real quadratic
//! fields, in two flavors.
//!
//! Both expand omega = (sigma + sqrt(D))/2 (sigma = D mod 2, D the field
//! discriminant) and walk the cycle of reduced states (P, Q). The product
//! M of the partial-quotient matrices [a 1; 1 0] over one full period is an
//! automorph: the fundamental unit is u = (x + y sqrt(D))/2 with
//! x = trace(M) and norm (-1)^period.
//!
//! * [`exact_unit`] accumulates M in full precision and returns the unit's
//!   Pell coordinates. Entry sizes grow like exp(period), so this is for
//!   radicands whose regulator is modest.
//! * [`unit_signature`] accumulates M only modulo 8 and modulo a set of odd
//!   moduli, in O(1) memory. That is enough to recover the square class of
//!   N(u + 1): the odd part of its kernel is {q | d : q divides x + 2}, and
//!   the 2-part is decided by x mod 8 together with the parity of d (from
//!   (x+2)(x-2) = d y^2, only primes dividing d can occur to odd exponent).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::isqrt;
use crate::error::{Error, Result};

/// Default ceiling on continued-fraction steps. Periods grow like sqrt(D),
/// so this covers discriminants up to roughly 10^15 before giving up.
pub const DEFAULT_CF_STEPS: u64 = 100_000_000;

/// Fundamental unit in Pell coordinates over sqrt(d): x^2 - d y^2 = 4*norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ExactUnit {
    pub x: BigInt,
    pub y: BigInt,
    pub norm_minus_one: bool,
    pub period: u64,
}

fn field_discriminant(d: &BigInt) -> BigInt {
    if (d % 4u8).to_u8() == Some(1) {
        d.clone()
    } else {
        d * 4u8
    }
}

/// Fundamental unit of the maximal order of Q(sqrt(d)), d square-free > 1.
pub(crate) fn exact_unit(d: &BigInt, max_steps: u64) -> Result<ExactUnit> {
    let disc = field_discriminant(d);
    let s = isqrt(&disc);
    let mut p: BigInt = &disc % 2u8;
    let mut q = BigInt::from(2u8);

    let (mut m11, mut m12) = (BigInt::one(), BigInt::zero());
    let (mut m21, mut m22) = (BigInt::zero(), BigInt::one());
    let mut anchor: Option<(BigInt, BigInt)> = None;
    let mut period = 0u64;
    let mut steps = 0u64;

    loop {
        // reduced <=> alpha > 1 and conj(alpha) in (-1, 0); exact because
        // sqrt(D) is irrational.
        let is_reduced = q <= &p + &s && p <= s && &p + &q > s;
        if is_reduced {
            match &anchor {
                None => anchor = Some((p.clone(), q.clone())),
                Some((ap, aq)) if *ap == p && *aq == q => break,
                _ => {}
            }
        }
        if steps >= max_steps {
            return Err(Error::EffortExceeded(format!(
                "fundamental unit of d={d}: continued fraction exceeded {max_steps} steps"
            )));
        }
        steps += 1;

        let a = (&p + &s).div_floor(&q);
        let p_next = &a * &q - &p;
        let q_next = (&disc - &p_next * &p_next) / &q;
        p = p_next;
        q = q_next;

        if anchor.is_some() {
            let n11 = &m11 * &a + &m12;
            let n21 = &m21 * &a + &m22;
            m12 = std::mem::replace(&mut m11, n11);
            m22 = std::mem::replace(&mut m21, n21);
            period += 1;
        }
    }

    let norm_minus_one = period % 2 == 1;
    let x = m11 + m22;
    let t = &x * &x
        - if norm_minus_one {
            BigInt::from(-4)
        } else {
            BigInt::from(4)
        };
    let (y2, rem) = t.div_rem(d);
    debug_assert!(rem.is_zero(), "trace identity x^2 - 4*norm = d y^2 failed");
    let y = isqrt(&y2);
    debug_assert_eq!(
        &y * &y,
        y2,
        "y^2 = (x^2 - 4*norm)/d must be a perfect square"
    );
    Ok(ExactUnit {
        x,
        y,
        norm_minus_one,
        period,
    })
}

/// Unit data recoverable without materializing the unit: norm, period, and
/// the trace modulo 8 and modulo the requested odd moduli.
#[derive(Debug, Clone)]
pub(crate) struct UnitSignature {
    pub norm_minus_one: bool,
    pub trace_mod8: u8,
    /// (modulus, trace mod modulus), one entry per requested odd modulus.
    pub trace_mod_odd: Vec<(u64, u64)>,
    #[allow(dead_code)] // cross-checked against the exact engine in tests
    pub period: u64,
}

struct Tracker {
    modulus: u64,
    m11: u64,
    m12: u64,
    m21: u64,
    m22: u64,
}

impl Tracker {
    fn new(modulus: u64) -> Self {
        Tracker {
            modulus,
            m11: 1 % modulus,
            m12: 0,
            m21: 0,
            m22: 1 % modulus,
        }
    }

    #[inline]
    fn step(&mut self, a: u64) {
        let m = self.modulus as u128;
        let a = (a as u128) % m;
        let n11 = ((self.m11 as u128 * a) + self.m12 as u128) % m;
        let n21 = ((self.m21 as u128 * a) + self.m22 as u128) % m;
        self.m12 = self.m11;
        self.m22 = self.m21;
        self.m11 = n11 as u64;
        self.m21 = n21 as u64;
    }

    fn trace(&self) -> u64 {
        ((self.m11 as u128 + self.m22 as u128) % self.modulus as u128) as u64
    }
}

/// Run the continued fraction of Q(sqrt(d)) tracking the automorph matrix
/// modulo 8 and modulo each entry of `odd_moduli`.
///
/// Only radicands with discriminant below 2^96 are supported; anything
/// larger has a period far beyond any step budget this crate would run.
pub(crate) fn unit_signature(
    d: &BigInt,
    odd_moduli: &[u64],
    max_steps: u64,
) -> Result<UnitSignature> {
    let disc_big = field_discriminant(d);
    let disc = disc_big
        .to_u128()
        .filter(|&v| v < 1u128 << 96)
        .ok_or_else(|| {
            Error::EffortExceeded(format!(
                "discriminant of d={d} too large for the unit-signature engine"
            ))
        })?;

    // Group the odd moduli into few combined trackers to keep the hot loop
    // short; individual traces are recovered by reducing the bucket trace.
    let mut buckets: Vec<u64> = Vec::new();
    for &q in odd_moduli {
        debug_assert!(q % 2 == 1 && q > 1);
        match buckets
            .iter_mut()
            .find(|b| (**b as u128) * q as u128 <= 1u128 << 62)
        {
            Some(b) => *b *= q,
            None => buckets.push(q),
        }
    }
    let mut trackers: Vec<Tracker> = buckets.iter().map(|&b| Tracker::new(b)).collect();
    let mut mod8 = Tracker::new(8);

    let s = isqrt_u128(disc) as i64;
    let sigma = (disc % 2) as i64;

    // First step in 128-bit, then the subtractive recurrence
    // Q_{i+1} = Q_{i-1} + a_i (P_i - P_{i+1}) keeps everything in i64:
    // |P| < sqrt(D), 0 < Q < 2 sqrt(D) < 2^49 along the whole expansion.
    let p0 = sigma;
    let q0: i64 = 2;
    let a0 = (p0 + s).div_euclid(q0);
    let p1 = a0 * q0 - p0;
    let q1_wide = (disc as i128 - (p1 as i128) * (p1 as i128)) / q0 as i128;
    let mut q_prev = q0;
    let mut p = p1;
    let mut q = i64::try_from(q1_wide).expect("Q_1 < 2 sqrt(D)");

    let mut anchor: Option<(i64, i64)> = None;
    let mut period = 0u64;
    let mut steps = 1u64;

    // The initial state (sigma, 2) can itself be reduced (e.g. d = 5); the
    // first matrix factor then belongs to the period.
    if q0 <= p0 + s && p0 <= s && p0 + q0 > s {
        anchor = Some((p0, q0));
        for t in trackers.iter_mut() {
            t.step(a0 as u64);
        }
        mod8.step(a0 as u64);
        period = 1;
    }

    loop {
        let is_reduced = q <= p + s && p <= s && p + q > s;
        if is_reduced {
            match anchor {
                None => anchor = Some((p, q)),
                Some(a) if a == (p, q) => break,
                _ => {}
            }
        }
        if steps >= max_steps {
            return Err(Error::EffortExceeded(format!(
                "unit signature of d={d}: continued fraction exceeded {max_steps} steps"
            )));
        }
        steps += 1;

        let a = (p + s).div_euclid(q);
        let p_next = a * q - p;
        // a * (p - p_next) = Q_{i+1} - Q_{i-1} is small even when the naive
        // product of the factors would not be; i128 guards the intermediate.
        let q_next = (q_prev as i128 + a as i128 * (p as i128 - p_next as i128)) as i64;
        q_prev = q;
        p = p_next;
        q = q_next;

        if anchor.is_some() {
            for t in trackers.iter_mut() {
                t.step(a as u64);
            }
            mod8.step(a as u64);
            period += 1;
        }
    }

    let mut trace_mod_odd = Vec::with_capacity(odd_moduli.len());
    for &m in odd_moduli {
        let bucket = trackers
            .iter()
            .find(|t| t.modulus % m == 0)
            .expect("every modulus was assigned to a bucket");
        trace_mod_odd.push((m, bucket.trace() % m));
    }

    Ok(UnitSignature {
        norm_minus_one: period % 2 == 1,
        trace_mod8: mod8.trace() as u8,
        trace_mod_odd,
        period,
    })
}

fn isqrt_u128(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x > 0 && x.checked_mul(x).map_or(true, |v| v > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).map_or(false, |v| v <= n) {
        x += 1;
    }
    x
}
