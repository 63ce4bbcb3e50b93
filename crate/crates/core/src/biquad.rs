//! Bi-quadratic fields K_{m,n} = Q(sqrt(m), sqrt(n)): the three quadratic
//! subfields, ramified primes with ramification indices, the `H^1[2]` rank
//! from the six-generator recipe, and the Polya rank via the exact sequence
//! 0 -> H^1 -> (+) Z/e_i -> Po(K) -> 0.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith;
use crate::contfrac::DEFAULT_CF_STEPS;
use crate::error::{Error, Result};
use crate::quadfield;
use crate::sqclass::{self, SquareClass};

/// A totally real bi-quadratic field with its rank data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiquadField {
    pub m: BigInt,
    pub n: BigInt,
    /// Square-free kernels of m, n, mn.
    pub d1: BigInt,
    pub d2: BigInt,
    pub d3: BigInt,
    /// (prime, ramification index); e = 4 only ever at the prime 2.
    pub ramified: Vec<(BigInt, u8)>,
    pub h1_rank: usize,
    pub polya_rank: usize,
}

impl BiquadField {
    pub fn new(m: &BigInt, n: &BigInt) -> Result<BiquadField> {
        Self::new_bounded(m, n, DEFAULT_CF_STEPS)
    }

    pub fn new_bounded(m: &BigInt, n: &BigInt, max_steps: u64) -> Result<BiquadField> {
        let (d1, d2, d3) = subfields(m, n)?;
        let ramified = ramified_primes_biquad(m, n)?;
        let h1_rank = h1_rank_biquad_bounded(m, n, max_steps)?;
        let polya_rank = ramified.len() - h1_rank;
        Ok(BiquadField {
            m: m.clone(),
            n: n.clone(),
            d1,
            d2,
            d3,
            ramified,
            h1_rank,
            polya_rank,
        })
    }
}

/// 2 ramifies in Q(sqrt d) exactly when d is not 1 mod 4.
fn two_ramifies_in(d: &BigInt) -> bool {
    (d % 4u8).to_u8() != Some(1)
}

fn squarefree_part(v: &BigInt) -> Result<BigInt> {
    let f = arith::factor(v)?;
    let mut out = BigInt::from(1);
    for (p, e) in f.factors {
        if e % 2 == 1 {
            out *= p;
        }
    }
    Ok(out)
}

/// Square-free kernels of (m, n, mn) — the radicands of the three quadratic
/// subfields.
pub fn subfields(m: &BigInt, n: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    for v in [m, n] {
        if *v <= BigInt::from(1) {
            return Err(Error::Domain(format!(
                "bi-quadratic radicand must be > 1, got {v}"
            )));
        }
        if arith::is_perfect_square(v) {
            return Err(Error::Domain(format!(
                "{v} is a perfect square; not a bi-quadratic field"
            )));
        }
    }
    let mn = m * n;
    if arith::is_perfect_square(&mn) {
        return Err(Error::Domain(format!(
            "m*n = {mn} is a perfect square; Q(sqrt m, sqrt n) is not bi-quadratic"
        )));
    }
    Ok((
        squarefree_part(m)?,
        squarefree_part(n)?,
        squarefree_part(&mn)?,
    ))
}

/// Ramified primes with ramification indices.
///
/// An odd prime ramifies (with e = 2) iff it divides one — equivalently
/// exactly two — of the subfield discriminants. The prime 2 ramifies in the
/// subfield Q(sqrt d) iff d != 1 (mod 4); it is unramified in K when that
/// count is 0, has e = 2 when the count is 2, and e = 4 when it is 3. A
/// count of 1 cannot occur.
pub fn ramified_primes_biquad(m: &BigInt, n: &BigInt) -> Result<Vec<(BigInt, u8)>> {
    let (d1, d2, d3) = subfields(m, n)?;
    let mut out: Vec<(BigInt, u8)> = Vec::new();

    let two_count = [&d1, &d2, &d3]
        .into_iter()
        .filter(|d| two_ramifies_in(d))
        .count();
    match two_count {
        0 => {}
        2 => out.push((BigInt::from(2), 2)),
        3 => out.push((BigInt::from(2), 4)),
        _ => unreachable!("2 ramifies in zero, two or three quadratic subfields"),
    }

    let mut odd: Vec<BigInt> = Vec::new();
    for d in [&d1, &d2, &d3] {
        for p in arith::factor(d)?.primes() {
            if p.is_odd() && !odd.contains(&p) {
                odd.push(p);
            }
        }
    }
    odd.sort();
    out.extend(odd.into_iter().map(|p| (p, 2)));
    Ok(out)
}

/// The six generators of `H^1[2]`: the square classes of the three subfield
/// discriminants and of the three N(u_i + 1) (identity when norm(u_i) = -1).
pub(crate) fn h1_generators_bounded(
    m: &BigInt,
    n: &BigInt,
    max_steps: u64,
) -> Result<Vec<SquareClass>> {
    let (d1, d2, d3) = subfields(m, n)?;
    let mut gens = Vec::with_capacity(6);
    for d in [d1, d2, d3] {
        gens.push(arith::squarefree_kernel(&quadfield::discriminant(&d)?)?);
        gens.push(quadfield::a_class_bounded(&d, max_steps)?);
    }
    Ok(gens)
}

/// Rank of `H^1(G, O_K^*)[2]` for K = K_{m,n}, valid when 2 is not totally
/// ramified (then H^1 equals its 2-torsion).
pub fn h1_rank_biquad(m: &BigInt, n: &BigInt) -> Result<usize> {
    h1_rank_biquad_bounded(m, n, DEFAULT_CF_STEPS)
}

pub fn h1_rank_biquad_bounded(m: &BigInt, n: &BigInt, max_steps: u64) -> Result<usize> {
    let ramified = ramified_primes_biquad(m, n)?;
    if ramified.iter().any(|(_, e)| *e == 4) {
        return Err(Error::TotallyRamifiedTwo);
    }
    let gens = h1_generators_bounded(m, n, max_steps)?;
    Ok(sqclass::subgroup_rank(&gens))
}

/// Polya rank: Po(K_{m,n}) = (Z/2)^(s - rank H^1) with s the number of
/// ramified primes (all e_i = 2 once 2 is not totally ramified).
pub fn polya_rank_biquad(m: &BigInt, n: &BigInt) -> Result<usize> {
    polya_rank_biquad_bounded(m, n, DEFAULT_CF_STEPS)
}

pub fn polya_rank_biquad_bounded(m: &BigInt, n: &BigInt, max_steps: u64) -> Result<usize> {
    let s = ramified_primes_biquad(m, n)?.len();
    let h1 = h1_rank_biquad_bounded(m, n, max_steps)?;
    debug_assert!(h1 <= s);
    Ok(s - h1)
}
