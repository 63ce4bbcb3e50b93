//! Shanks' simplest cubic fields K_n, the splitting fields of
//! X^3 + (n+3)X^2 + nX - 1. When h(n) = n^2 + 3n + 9 is square-free the
//! discriminant is h(n)^2, every prime divisor of h(n) ramifies, and
//! |Po(K_n)| = 3^(r-1) with r the number of ramified primes. The
//! constructor below forces many prescribed primes into h(p) to make that
//! order exceed any requested bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{self, Factorization};
use crate::error::{Error, Result};

/// Parameter data for one simplest cubic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplestCubic {
    pub n: BigInt,
    pub hn: BigInt,
    pub squarefree: bool,
    /// Prime divisors of h(n); `None` when h(n) is not square-free.
    pub ramified: Option<Vec<BigInt>>,
    /// |Po(K_n)| = 3^(r_K - 1); `None` when h(n) is not square-free.
    pub po_order: Option<BigInt>,
}

impl SimplestCubic {
    pub fn new(n: &BigInt) -> Result<SimplestCubic> {
        let hn = h_value(n);
        let f = arith::factor(&hn)?;
        let squarefree = f.is_squarefree();
        let (ramified, po_order) = if squarefree {
            let primes = f.primes();
            let order = BigInt::from(3).pow(primes.len() as u32 - 1);
            (Some(primes), Some(order))
        } else {
            (None, None)
        };
        Ok(SimplestCubic {
            n: n.clone(),
            hn,
            squarefree,
            ramified,
            po_order,
        })
    }

    pub fn r_k(&self) -> Option<usize> {
        self.ramified.as_ref().map(Vec::len)
    }
}

/// Certificate that |Po(K_p)| > M, good for independent re-checking.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicCertificate {
    pub bound: f64,
    pub t: usize,
    /// The t smallest primes = 1 (mod 3); all divide h(p).
    pub auxiliary_primes: Vec<BigInt>,
    /// Common root of h modulo every auxiliary prime, from the CRT.
    pub x0: BigInt,
    pub modulus: BigInt,
    /// Prime parameter with h(p) square-free and p = x0 (mod modulus).
    pub p: BigInt,
    pub hn_factors: Factorization,
    /// 3^(t-1), a divisor-sized lower bound for |Po(K_p)|.
    pub po_lower_bound: BigInt,
}

impl CubicCertificate {
    /// Re-derive everything the certificate claims from scratch.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Domain(format!("certificate check failed: {msg}")));
        if self.po_lower_bound != BigInt::from(3).pow(self.t as u32 - 1) {
            return fail("po_lower_bound != 3^(t-1)".into());
        }
        if self.po_lower_bound.to_f64().unwrap_or(f64::INFINITY) <= self.bound {
            return fail(format!(
                "3^(t-1) = {} does not exceed M = {}",
                self.po_lower_bound, self.bound
            ));
        }
        let mut modulus = BigInt::one();
        for p in &self.auxiliary_primes {
            if !arith::is_prime(p) {
                return fail(format!("auxiliary {p} is not prime"));
            }
            modulus *= p;
        }
        if modulus != self.modulus {
            return fail("modulus is not the product of the auxiliary primes".into());
        }
        if !arith::is_prime(&self.p) {
            return fail(format!("{} is not prime", self.p));
        }
        if !(&self.p - &self.x0).mod_floor(&self.modulus).is_zero() {
            return fail("p is not congruent to x0".into());
        }
        let hp = h_value(&self.p);
        let factors = arith::factor(&hp)?;
        if factors != self.hn_factors {
            return fail("recorded factorization of h(p) does not match".into());
        }
        if !factors.is_squarefree() {
            return fail(format!("h({}) = {hp} is not square-free", self.p));
        }
        for q in &self.auxiliary_primes {
            if !(&hp % q).is_zero() {
                return fail(format!("{q} does not divide h(p)"));
            }
        }
        // 3^(r-1) >= 3^(t-1) > M with r the number of prime divisors of h(p)
        let order = BigInt::from(3).pow(factors.factors.len() as u32 - 1);
        if order < self.po_lower_bound {
            return fail("Polya order smaller than the certified bound".into());
        }
        Ok(())
    }
}

/// h(n) = n^2 + 3n + 9, the square root of the field discriminant.
pub fn h_value(n: &BigInt) -> BigInt {
    n * n + n * 3u8 + 9u8
}

/// Discriminant h(n)^2, defined only when h(n) is square-free.
pub fn discriminant_simplest_cubic(n: &BigInt) -> Result<BigInt> {
    let hn = h_value(n);
    if !arith::is_squarefree(&hn)? {
        return Err(Error::Unsupported(format!(
            "h({n}) = {hn} is not square-free; conductor computation is out of scope"
        )));
    }
    Ok(&hn * &hn)
}

/// |Po(K_n)| = 3^(r_K - 1), r_K the number of primes dividing h(n).
pub fn polya_order_cubic(n: &BigInt) -> Result<BigInt> {
    let hn = h_value(n);
    let f = arith::factor(&hn)?;
    if !f.is_squarefree() {
        return Err(Error::Unsupported(format!(
            "h({n}) = {hn} is not square-free"
        )));
    }
    Ok(BigInt::from(3).pow(f.factors.len() as u32 - 1))
}

/// A root of h modulo a prime p with (-3/p) = 1: x = (-3 + 3*sqrt(-3))/2,
/// taking the smaller modular square root.
pub fn root_of_h_mod_p(p: &BigInt) -> Result<BigInt> {
    if !arith::is_prime(p) || p.to_u8() == Some(2) {
        return Err(Error::Domain(format!(
            "root_of_h_mod_p needs an odd prime != 2, got {p}"
        )));
    }
    if p.to_u8() == Some(3) {
        return Err(Error::NonResidue(
            "-3 is not an invertible square mod 3".into(),
        ));
    }
    let a = arith::sqrt_mod_prime(&BigInt::from(-3), p)?;
    let b = arith::inv_mod(&BigInt::from(2), p)?;
    let x = ((&a * 3u8 - 3u8) * &b).mod_floor(p);
    // postcondition: a genuine invertible root
    debug_assert!(h_value(&x).mod_floor(p).is_zero());
    debug_assert!(x.gcd(p).is_one());
    Ok(x)
}

/// Minimal t with 3^(t-1) > bound.
fn tuple_size_for(bound: f64) -> usize {
    let mut t = 1usize;
    let mut power = 1f64;
    while power <= bound {
        t += 1;
        power *= 3.0;
    }
    t
}

/// Find a simplest cubic field with |Po(K_p)| > bound: pick the t smallest
/// primes = 1 (mod 3), glue roots of h with the CRT, and scan the resulting
/// progression for a prime p with h(p) square-free.
pub fn find_large_polya_cubic(bound: f64, search_ceiling: &BigInt) -> Result<CubicCertificate> {
    if !(bound > 0.0) {
        return Err(Error::Domain(format!(
            "bound must be positive, got {bound}"
        )));
    }
    let t = tuple_size_for(bound);
    let mut aux: Vec<BigInt> = Vec::with_capacity(t);
    let mut from = BigInt::from(3);
    for _ in 0..t {
        let p = arith::next_prime_in_ap(&BigInt::one(), &BigInt::from(3), &from)?;
        from = p.clone();
        aux.push(p);
    }
    let congruences: Vec<(BigInt, BigInt)> = aux
        .iter()
        .map(|p| Ok((root_of_h_mod_p(p)?, p.clone())))
        .collect::<Result<_>>()?;
    let (x0, modulus) = arith::crt(&congruences)?;

    let mut from = BigInt::one();
    let p = loop {
        let cand = arith::next_prime_in_ap_bounded(&x0, &modulus, &from, search_ceiling)?;
        if arith::is_squarefree(&h_value(&cand))? {
            break cand;
        }
        from = cand;
    };

    let cert = CubicCertificate {
        bound,
        t,
        auxiliary_primes: aux,
        x0,
        modulus,
        hn_factors: arith::factor(&h_value(&p))?,
        p,
        po_lower_bound: BigInt::from(3).pow(t as u32 - 1),
    };
    cert.verify()?;
    Ok(cert)
}
