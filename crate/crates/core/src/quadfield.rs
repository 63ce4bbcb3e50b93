//! Real quadratic fields Q(sqrt(d)): discriminant, ramified primes,
//! fundamental unit by continued fractions, the square class of N(u + 1),
//! and the cohomological Polya-rank predictor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{self, Factorization};
use crate::contfrac::{self, DEFAULT_CF_STEPS};
use crate::error::{Error, Result};
use crate::sqclass::{self, SquareClass};

/// A real quadratic field Q(sqrt(d)) with square-free d > 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadField {
    pub d: BigInt,
    pub discriminant: BigInt,
    /// Prime divisors of the discriminant, ascending.
    pub ramified: Vec<BigInt>,
}

impl QuadField {
    pub fn new(d: &BigInt) -> Result<QuadField> {
        let f = checked_radicand(d)?;
        Ok(QuadField {
            d: d.clone(),
            discriminant: discriminant_of(d),
            ramified: ramified_from(d, &f),
        })
    }
}

/// Fundamental unit in Pell coordinates: u = (x + y sqrt(d))/2 with
/// x^2 - d y^2 = 4 * norm and u > 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadUnit {
    pub d: BigInt,
    pub x: BigInt,
    pub y: BigInt,
    pub norm: i8,
}

fn checked_radicand(d: &BigInt) -> Result<Factorization> {
    if *d <= BigInt::from(1) {
        return Err(Error::Domain(format!("radicand must be > 1, got {d}")));
    }
    let f = arith::factor(d)?;
    if !f.is_squarefree() {
        return Err(Error::Domain(format!(
            "radicand must be square-free, got {d}"
        )));
    }
    Ok(f)
}

fn discriminant_of(d: &BigInt) -> BigInt {
    if (d % 4u8).to_u8() == Some(1) {
        d.clone()
    } else {
        d * 4u8
    }
}

fn ramified_from(d: &BigInt, f: &Factorization) -> Vec<BigInt> {
    let mut primes = f.primes();
    if (d % 4u8).to_u8() != Some(1) && !primes.iter().any(|p| p.to_u8() == Some(2)) {
        primes.insert(0, BigInt::from(2));
    }
    primes
}

/// Field discriminant: d if d = 1 (mod 4), else 4d.
pub fn discriminant(d: &BigInt) -> Result<BigInt> {
    checked_radicand(d)?;
    Ok(discriminant_of(d))
}

/// Prime divisors of the discriminant, ascending.
pub fn ramified_primes(d: &BigInt) -> Result<Vec<BigInt>> {
    let f = checked_radicand(d)?;
    Ok(ramified_from(d, &f))
}

/// Fundamental unit of the maximal order, by the continued fraction of
/// (sigma + sqrt(D))/2.
pub fn fundamental_unit(d: &BigInt) -> Result<QuadUnit> {
    fundamental_unit_bounded(d, DEFAULT_CF_STEPS)
}

/// As [`fundamental_unit`] with an explicit step budget.
pub fn fundamental_unit_bounded(d: &BigInt, max_steps: u64) -> Result<QuadUnit> {
    checked_radicand(d)?;
    let u = contfrac::exact_unit(d, max_steps)?;
    Ok(QuadUnit {
        d: d.clone(),
        x: u.x,
        y: u.y,
        norm: if u.norm_minus_one { -1 } else { 1 },
    })
}

/// N(u + 1) for a unit of norm +1; in Pell coordinates this is x + 2.
pub fn norm_u_plus_one(u: &QuadUnit) -> Result<BigInt> {
    if u.norm == -1 {
        return Err(Error::NormMinusOne);
    }
    Ok(&u.x + 2)
}

/// Norm of the fundamental unit, from the parity of the continued-fraction
/// period; no unit coordinates are materialized.
pub fn unit_norm(d: &BigInt) -> Result<i8> {
    unit_norm_bounded(d, DEFAULT_CF_STEPS)
}

pub fn unit_norm_bounded(d: &BigInt, max_steps: u64) -> Result<i8> {
    checked_radicand(d)?;
    let sig = contfrac::unit_signature(d, &[], max_steps)?;
    Ok(if sig.norm_minus_one { -1 } else { 1 })
}

/// Square class of N(u + 1) when the fundamental unit has norm +1, and the
/// identity class otherwise.
///
/// Computed from the unit signature (trace mod 8 and mod the primes of d)
/// rather than the unit itself: from (x+2)(x-2) = d y^2, an odd prime
/// divides x + 2 to odd exponent iff it divides both d and x + 2, and the
/// exponent parity of 2 is decided by x mod 8 and the parity of d.
pub fn a_class(d: &BigInt) -> Result<SquareClass> {
    a_class_bounded(d, DEFAULT_CF_STEPS)
}

/// As [`a_class`] with an explicit continued-fraction step budget.
pub fn a_class_bounded(d: &BigInt, max_steps: u64) -> Result<SquareClass> {
    let f = checked_radicand(d)?;
    let odd_moduli: Vec<u64> = f
        .primes()
        .iter()
        .filter(|p| p.is_odd())
        .map(|p| {
            p.to_u64().ok_or_else(|| {
                Error::EffortExceeded(format!("prime factor {p} too large for unit signature"))
            })
        })
        .collect::<Result<_>>()?;
    let sig = contfrac::unit_signature(d, &odd_moduli, max_steps)?;
    if sig.norm_minus_one {
        return Ok(SquareClass::identity());
    }
    let mut kernel = Vec::new();
    let two_in_kernel = match sig.trace_mod8 % 8 {
        x if x % 2 == 1 => false, // x + 2 odd
        0 | 4 => true,            // x + 2 = 2 (mod 4)
        2 => false,               // v2(x + 2) = 2 exactly
        6 => d.is_even(),         // v2(x - 2) = 2, so v2(x + 2) = v2(d) (mod 2)
        _ => unreachable!(),
    };
    if two_in_kernel {
        kernel.push(BigInt::from(2));
    }
    for (q, t) in &sig.trace_mod_odd {
        if (t + 2) % q == 0 {
            kernel.push(BigInt::from(*q));
        }
    }
    Ok(SquareClass::from_parts(false, kernel))
}

/// Rank of the subgroup of Q*/(Q*)^2 generated by `[D]` and `[N(u+1)]`.
pub fn quad_h1_rank(d: &BigInt) -> Result<usize> {
    quad_h1_rank_bounded(d, DEFAULT_CF_STEPS)
}

pub fn quad_h1_rank_bounded(d: &BigInt, max_steps: u64) -> Result<usize> {
    // [D] = [d] modulo squares, and d is square-free here.
    let f = checked_radicand(d)?;
    let d_class = SquareClass::from_parts(false, f.primes());
    let a = a_class_bounded(d, max_steps)?;
    Ok(sqclass::subgroup_rank(&[d_class, a]))
}

/// Polya rank of Q(sqrt(d)): Po = (Z/2)^(s - rank H^1) with s the number of
/// ramified primes, via the unit exact sequence (all e_i = 2).
pub fn quad_polya_rank(d: &BigInt) -> Result<usize> {
    quad_polya_rank_bounded(d, DEFAULT_CF_STEPS)
}

pub fn quad_polya_rank_bounded(d: &BigInt, max_steps: u64) -> Result<usize> {
    let s = ramified_primes(d)?.len();
    let h1 = quad_h1_rank_bounded(d, max_steps)?;
    debug_assert!(h1 <= s, "H^1 embeds in the ramification sum");
    Ok(s - h1)
}
