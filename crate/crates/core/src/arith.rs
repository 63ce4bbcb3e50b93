//! Arbitrary-precision integer utilities: primality, Jacobi symbols, CRT,
//! modular square roots, factorization, square-free tests and prime scans
//! in arithmetic progressions.
//!
//! Everything is exact. Values that fit in machine words take fast paths;
//! the public interface is uniformly `BigInt`.

use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::sqclass::SquareClass;

/// Miller-Rabin rounds for candidates above the deterministic u64 range.
pub const DEFAULT_MR_ROUNDS: u32 = 40;

static MR_ROUNDS: AtomicU32 = AtomicU32::new(DEFAULT_MR_ROUNDS);

/// Process-wide override for the probabilistic round count; intended to be
/// set once at startup (the CLI's --mr-rounds).
pub fn set_mr_rounds(rounds: u32) {
    MR_ROUNDS.store(rounds.max(1), Ordering::Relaxed);
}

/// Pollard rho iteration budget before `factor` gives up.
pub const DEFAULT_RHO_ITERS: u64 = 10_000_000;

/// Absolute ceiling for prime scans in arithmetic progressions.
pub fn default_search_ceiling() -> BigInt {
    BigInt::from(10u8).pow(18)
}

/// Complete prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub value: BigInt,
    /// (prime, exponent) pairs with primes strictly increasing.
    pub factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    /// Distinct prime divisors, ascending.
    pub fn primes(&self) -> Vec<BigInt> {
        self.factors.iter().map(|(p, _)| p.clone()).collect()
    }

    /// True when every exponent is 1.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

// ---------------------------------------------------------------------------
// small-prime table and sieves
// ---------------------------------------------------------------------------

// Covers cbrt(u64::MAX): after trial division up to here, any u64 cofactor
// has at most two prime factors.
const SMALL_PRIME_LIMIT: u32 = 2_650_000;

fn small_primes() -> &'static [u32] {
    static TABLE: OnceLock<Vec<u32>> = OnceLock::new();
    TABLE.get_or_init(|| sieve_u32(SMALL_PRIME_LIMIT))
}

fn sieve_u32(limit: u32) -> Vec<u32> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for n in 2..=limit {
        if !composite[n] {
            primes.push(n as u32);
            let mut k = n * n;
            while k <= limit {
                composite[k] = true;
                k += n;
            }
        }
    }
    primes
}

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    let limit = usize::try_from(limit).expect("sieve limit fits usize");
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for n in 2..=limit {
        if !composite[n] {
            primes.push(n as u64);
            let mut k = n * n;
            while k <= limit {
                composite[k] = true;
                k += n;
            }
        }
    }
    primes
}

// ---------------------------------------------------------------------------
// primality
// ---------------------------------------------------------------------------

pub(crate) fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_u64(acc, a, m);
        }
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (first twelve prime witnesses).
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality test: deterministic below 2^64, Miller-Rabin with
/// [`DEFAULT_MR_ROUNDS`] small-prime bases above.
pub fn is_prime(n: &BigInt) -> bool {
    is_prime_with_rounds(n, MR_ROUNDS.load(Ordering::Relaxed))
}

/// Primality with an explicit round count for the probabilistic range.
pub fn is_prime_with_rounds(n: &BigInt, rounds: u32) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    let n_u = n.magnitude();
    if n_u.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n_u - &one;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    let bases = small_primes();
    'witness: for &a in bases.iter().take(rounds as usize) {
        let a = BigUint::from(a);
        if &a % n_u == BigUint::zero() {
            continue;
        }
        let mut x = a.modpow(&d, n_u);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x.modpow(&BigUint::from(2u8), n_u);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// ---------------------------------------------------------------------------
// Jacobi symbol, CRT, modular inverse, Tonelli-Shanks
// ---------------------------------------------------------------------------

/// Jacobi symbol (a/n) for odd n >= 1. Equals the Legendre symbol at primes.
pub fn jacobi(a: &BigInt, n: &BigInt) -> Result<i32> {
    if n.sign() != Sign::Plus || n.is_even() {
        return Err(Error::Domain(format!(
            "jacobi modulus must be odd positive, got {n}"
        )));
    }
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut t = 1i32;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = (&n % 8u8).to_u8().unwrap();
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u8).to_u8().unwrap() == 3 && (&n % 4u8).to_u8().unwrap() == 3 {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { t } else { 0 })
}

/// Chinese remainder theorem for pairwise coprime moduli.
///
/// Returns `(x, M)` with `0 <= x < M = prod(moduli)` satisfying every
/// congruence. The empty system yields `(0, 1)`.
pub fn crt(congruences: &[(BigInt, BigInt)]) -> Result<(BigInt, BigInt)> {
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (r, m) in congruences {
        if m.sign() != Sign::Plus {
            return Err(Error::Domain(format!("crt modulus must be >= 1, got {m}")));
        }
        let g = modulus.gcd(m);
        if !g.is_one() {
            return Err(Error::Domain(format!(
                "crt moduli not pairwise coprime (gcd {g} between {modulus} and {m})"
            )));
        }
        // x' = x + M * ((r - x) / M mod m)
        let inv = inv_mod(&modulus.mod_floor(m), m).unwrap_or_else(|_| BigInt::one());
        let t = ((r - &x) * inv).mod_floor(m);
        x += &modulus * t;
        modulus *= m;
        x = x.mod_floor(&modulus);
    }
    Ok((x, modulus))
}

/// Inverse of `a` modulo `m >= 2`.
pub fn inv_mod(a: &BigInt, m: &BigInt) -> Result<BigInt> {
    if *m < BigInt::from(2) {
        return Err(Error::Domain(format!(
            "inv_mod modulus must be >= 2, got {m}"
        )));
    }
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return Err(Error::NotInvertible(format!("gcd({a}, {m}) = {}", e.gcd)));
    }
    Ok(e.x.mod_floor(m))
}

/// Square root of `a` modulo an odd prime `p` via Tonelli-Shanks.
///
/// Returns the smaller of the two roots; 0 when `p | a`.
pub fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Result<BigInt> {
    if p.is_even() || !is_prime(p) {
        return Err(Error::Domain(format!(
            "sqrt_mod_prime needs an odd prime, got {p}"
        )));
    }
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Ok(BigInt::zero());
    }
    match jacobi(&a, p)? {
        -1 => return Err(Error::NonResidue(format!("{a} is a non-residue mod {p}"))),
        0 => unreachable!("a reduced to zero handled above"),
        _ => {}
    }
    let one = BigInt::one();
    let r = if (p % 4u8).to_u8().unwrap() == 3 {
        let e = (p + &one) >> 2;
        a.modpow(&e, p)
    } else {
        // p = 1 mod 4: full Tonelli-Shanks. Write p - 1 = q * 2^s.
        let mut q = p - &one;
        let mut s = 0u32;
        while q.is_even() {
            q >>= 1;
            s += 1;
        }
        let mut z = BigInt::from(2);
        while jacobi(&z, p)? != -1 {
            z += 1;
        }
        let mut m = s;
        let mut c = z.modpow(&q, p);
        let mut t = a.modpow(&q, p);
        let mut r = a.modpow(&((&q + &one) >> 1), p);
        while !t.is_one() {
            let mut i = 0u32;
            let mut t2 = t.clone();
            while !t2.is_one() {
                t2 = (&t2 * &t2).mod_floor(p);
                i += 1;
            }
            let b = c.modpow(&(BigInt::one() << (m - i - 1)), p);
            r = (r * &b).mod_floor(p);
            c = (&b * &b).mod_floor(p);
            t = (t * &c).mod_floor(p);
            m = i;
        }
        r
    };
    let other = p - &r;
    Ok(r.min(other))
}

// ---------------------------------------------------------------------------
// factorization
// ---------------------------------------------------------------------------

/// Factor `n >= 1` by trial division plus Pollard rho (Brent variant).
pub fn factor(n: &BigInt) -> Result<Factorization> {
    factor_with_budget(n, DEFAULT_RHO_ITERS)
}

/// As [`factor`], with an explicit rho iteration budget.
pub fn factor_with_budget(n: &BigInt, rho_budget: u64) -> Result<Factorization> {
    if n.sign() != Sign::Plus {
        return Err(Error::Domain(format!("factor requires n >= 1, got {n}")));
    }
    let mut counts: Vec<(BigInt, u32)> = Vec::new();
    let mut record = |p: BigInt| match counts.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => counts.push((p, 1)),
    };

    let mut m = n.clone();
    for &p in small_primes().iter().take(1229) {
        // primes below 10^4
        let p_big = BigInt::from(p);
        while (&m % p).is_zero() {
            m /= p;
            record(p_big.clone());
        }
        if m.is_one() {
            break;
        }
    }

    let mut budget = rho_budget;
    let mut stack = Vec::new();
    if !m.is_one() {
        stack.push(m);
    }
    while let Some(c) = stack.pop() {
        if is_prime(&c) {
            record(c);
            continue;
        }
        let d = pollard_rho(&c, &mut budget)?;
        let q = &c / &d;
        stack.push(d);
        stack.push(q);
    }

    counts.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization {
        value: n.clone(),
        factors: counts,
    })
}

/// One nontrivial factor of an odd composite with no divisor below 10^4.
fn pollard_rho(n: &BigInt, budget: &mut u64) -> Result<BigInt> {
    if let Some(v) = n.to_u64() {
        return pollard_rho_u64(v, budget).map(BigInt::from);
    }
    // Brent's cycle detection over BigInt for oversized cofactors.
    let one = BigInt::one();
    for c in 1u64.. {
        let c = BigInt::from(c);
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = BigInt::one();
        while d.is_one() {
            if *budget == 0 {
                return Err(Error::EffortExceeded("pollard rho budget".into()));
            }
            *budget -= 1;
            x = (&x * &x + &c).mod_floor(n);
            y = (&y * &y + &c).mod_floor(n);
            y = (&y * &y + &c).mod_floor(n);
            d = (&x - &y).gcd(n);
        }
        if d != *n && d > one {
            return Ok(d);
        }
    }
    unreachable!()
}

fn pollard_rho_u64(n: u64, budget: &mut u64) -> Result<u64> {
    for c in 1u64.. {
        let f = |x: u64| (mulmod_u64(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            if *budget == 0 {
                return Err(Error::EffortExceeded("pollard rho budget".into()));
            }
            *budget -= 1;
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return Ok(d);
        }
    }
    unreachable!()
}

// ---------------------------------------------------------------------------
// square-free tests and kernels
// ---------------------------------------------------------------------------

pub(crate) fn isqrt_u64(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r > 0 && r.checked_mul(r).map_or(true, |s| s > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |s| s <= n) {
        r += 1;
    }
    r
}

pub(crate) fn is_square_u64(n: u64) -> bool {
    let r = isqrt_u64(n);
    r * r == n
}

/// Floor square root of a nonnegative BigInt (delegates to num-integer).
pub fn isqrt(n: &BigInt) -> BigInt {
    num_integer::Roots::sqrt(n)
}

/// True iff `n` is a perfect square (n >= 0).
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = isqrt(n);
    &r * &r == *n
}

pub(crate) fn squarefree_u64(n: u64) -> bool {
    debug_assert!(n >= 1);
    let mut m = n;
    for &p in small_primes() {
        let p = p as u64;
        if p.checked_mul(p)
            .and_then(|s| s.checked_mul(p))
            .map_or(true, |cube| cube > m)
        {
            break;
        }
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return false;
            }
        }
    }
    // m now has at most two prime factors; only a full square can offend.
    m == 1 || !is_square_u64(m)
}

/// True iff no prime square divides `n >= 1`.
pub fn is_squarefree(n: &BigInt) -> Result<bool> {
    if n.sign() != Sign::Plus {
        return Err(Error::Domain(format!(
            "is_squarefree requires n >= 1, got {n}"
        )));
    }
    if let Some(v) = n.to_u64() {
        return Ok(squarefree_u64(v));
    }
    Ok(factor(n)?.is_squarefree())
}

/// Canonical image of a nonzero integer in Q*/(Q*)^2: sign plus the set of
/// primes dividing `n` to odd exponent.
pub fn squarefree_kernel(n: &BigInt) -> Result<SquareClass> {
    if n.is_zero() {
        return Err(Error::Domain("squarefree_kernel requires n != 0".into()));
    }
    let f = factor(&n.abs())?;
    let kernel = f
        .factors
        .into_iter()
        .filter(|&(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .collect();
    Ok(SquareClass::from_parts(n.is_negative(), kernel))
}

// ---------------------------------------------------------------------------
// prime scans and totient
// ---------------------------------------------------------------------------

/// Smallest prime `p > from` with `p = a (mod m)`, scanning up to `ceiling`.
pub fn next_prime_in_ap_bounded(
    a: &BigInt,
    m: &BigInt,
    from: &BigInt,
    ceiling: &BigInt,
) -> Result<BigInt> {
    if !a.gcd(m).is_one() {
        return Err(Error::Domain(format!(
            "progression {a} mod {m} is not primitive"
        )));
    }
    let mut x = from + 1u8;
    let shift = (a - &x).mod_floor(m);
    x += shift;
    while x <= *ceiling {
        if x >= BigInt::from(2) && is_prime(&x) {
            return Ok(x);
        }
        x += m;
    }
    Err(Error::SearchExhausted(format!(
        "no prime = {a} (mod {m}) in ({from}, {ceiling}]"
    )))
}

/// As [`next_prime_in_ap_bounded`] with the default ceiling.
pub fn next_prime_in_ap(a: &BigInt, m: &BigInt, from: &BigInt) -> Result<BigInt> {
    next_prime_in_ap_bounded(a, m, from, &default_search_ceiling())
}

/// Euler totient via factorization.
pub fn euler_phi(n: &BigInt) -> Result<BigInt> {
    let f = factor(n)?;
    let mut phi = BigInt::one();
    for (p, e) in f.factors {
        phi *= (&p - 1) * p.pow(e - 1);
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn primality_basics() {
        assert!(is_prime(&big(2)));
        assert!(!is_prime(&big(1)));
        assert!(!is_prime(&big(0)));
        assert!(!is_prime(&big(-7)));
        // 337 is prime by trial division up to 18
        assert!((2..=18).all(|d| 337 % d != 0));
        assert!(is_prime(&big(337)));
    }

    #[test]
    fn primality_above_u64() {
        // 2^89 - 1 is a Mersenne prime; 2^87 - 1 = 3 * ... is not.
        let m89 = (BigInt::one() << 89) - 1;
        assert!(is_prime(&m89));
        let m87 = (BigInt::one() << 87) - 1;
        assert!(!is_prime(&m87));
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(&big(1), &big(3)).unwrap(), 1);
        // squares mod 7 are {1, 2, 4}
        assert_eq!(jacobi(&big(2), &big(7)).unwrap(), 1);
        // squares mod 5 are {1, 4}
        assert_eq!(jacobi(&big(3), &big(5)).unwrap(), -1);
        assert_eq!(jacobi(&big(0), &big(9)).unwrap(), 0);
        assert!(matches!(jacobi(&big(3), &big(4)), Err(Error::Domain(_))));
        assert!(matches!(jacobi(&big(3), &big(-5)), Err(Error::Domain(_))));
    }

    #[test]
    fn jacobi_matches_legendre_by_euler_criterion() {
        for &p in &[3u64, 5, 7, 11, 13, 97, 997] {
            for a in 1..p.min(60) {
                let euler = powmod_u64(a, (p - 1) / 2, p);
                let expect = if euler == 1 { 1 } else { -1 };
                assert_eq!(jacobi(&big(a as i64), &big(p as i64)).unwrap(), expect);
            }
        }
    }

    #[test]
    fn crt_examples() {
        assert_eq!(crt(&[]).unwrap(), (BigInt::zero(), BigInt::one()));
        let (x, m) = crt(&[(big(1), big(8)), (big(2), big(3))]).unwrap();
        assert_eq!((x, m), (big(17), big(24)));
        assert!(matches!(
            crt(&[(big(1), big(6)), (big(3), big(4))]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn crt_uniqueness_by_scan() {
        // every output satisfies the congruences, and is the only solution < M
        let sys = [(big(3), big(7)), (big(5), big(11)), (big(2), big(13))];
        let (x, m) = crt(&sys).unwrap();
        assert_eq!(m, big(7 * 11 * 13));
        let mut hits = 0;
        let mut k = BigInt::zero();
        while k < m {
            if sys.iter().all(|(r, q)| (&k - r).mod_floor(q).is_zero()) {
                assert_eq!(k, x);
                hits += 1;
            }
            k += 1;
        }
        assert_eq!(hits, 1);
    }

    #[test]
    fn sqrt_mod_prime_examples() {
        assert_eq!(sqrt_mod_prime(&big(4), &big(7)).unwrap(), big(2));
        // -3 = 4 (mod 7)
        assert_eq!(sqrt_mod_prime(&big(-3), &big(7)).unwrap(), big(2));
        assert!(matches!(
            sqrt_mod_prime(&big(2), &big(5)),
            Err(Error::NonResidue(_))
        ));
        assert_eq!(sqrt_mod_prime(&big(0), &big(5)).unwrap(), big(0));
        assert!(matches!(
            sqrt_mod_prime(&big(3), &big(9)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn sqrt_mod_prime_is_a_root_and_canonical() {
        for &p in &[5u64, 13, 17, 41, 97, 193, 769, 12289] {
            let pb = big(p as i64);
            for a in 1..40u64 {
                match sqrt_mod_prime(&big(a as i64), &pb) {
                    Ok(r) => {
                        let r = r.to_u64().unwrap();
                        assert_eq!(mulmod_u64(r, r, p), a % p);
                        assert!(r <= p - r, "canonical root is the smaller one");
                    }
                    Err(Error::NonResidue(_)) => {
                        assert_eq!(jacobi(&big(a as i64), &pb).unwrap(), -1);
                    }
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
    }

    #[test]
    fn inv_mod_examples() {
        assert_eq!(inv_mod(&big(2), &big(7)).unwrap(), big(4));
        assert_eq!(inv_mod(&big(1), &big(5)).unwrap(), big(1));
        assert!(matches!(
            inv_mod(&big(3), &big(6)),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn factor_examples() {
        assert!(factor(&big(1)).unwrap().factors.is_empty());
        let f = factor(&big(189)).unwrap();
        assert_eq!(f.factors, vec![(big(3), 3), (big(7), 1)]);
        let f = factor(&big(53599)).unwrap();
        assert_eq!(
            f.factors,
            vec![(big(7), 1), (big(13), 1), (big(19), 1), (big(31), 1)]
        );
        // product of two 11-digit primes forces the rho path
        let p = big(10_000_000_019);
        let q = big(10_000_000_033);
        let f = factor(&(&p * &q)).unwrap();
        assert_eq!(f.factors, vec![(p, 1), (q, 1)]);
    }

    #[test]
    fn squarefree_examples() {
        assert!(is_squarefree(&big(13)).unwrap());
        assert!(!is_squarefree(&big(27)).unwrap());
        assert!(!is_squarefree(&big(49)).unwrap());
        assert!(is_squarefree(&big(1)).unwrap());
    }

    #[test]
    fn squarefree_agrees_with_bruteforce_to_1e5() {
        for n in 1u64..=100_000 {
            let mut brute = true;
            let mut d = 2u64;
            while d * d <= n {
                if n % (d * d) == 0 {
                    brute = false;
                    break;
                }
                d += 1;
            }
            assert_eq!(squarefree_u64(n), brute, "mismatch at {n}");
        }
    }

    #[test]
    fn kernel_examples() {
        let k = squarefree_kernel(&big(18)).unwrap();
        assert!(!k.negative() && k.kernel() == [big(2)]);
        let k = squarefree_kernel(&big(1)).unwrap();
        assert!(k.is_identity());
        let k = squarefree_kernel(&big(-12)).unwrap();
        assert!(k.negative() && k.kernel() == [big(3)]);
    }

    #[test]
    fn next_prime_in_ap_examples() {
        // 169 = 13^2 gets skipped
        assert_eq!(
            next_prime_in_ap(&big(1), &big(168), &big(1)).unwrap(),
            big(337)
        );
        assert_eq!(next_prime_in_ap(&big(2), &big(3), &big(2)).unwrap(), big(5));
        assert_eq!(
            next_prime_in_ap(&big(1), &big(4), &big(13)).unwrap(),
            big(17)
        );
        assert!(matches!(
            next_prime_in_ap(&big(2), &big(4), &big(1)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            next_prime_in_ap_bounded(&big(1), &big(168), &big(1), &big(200)),
            Err(Error::SearchExhausted(_))
        ));
    }

    #[test]
    fn next_prime_in_ap_is_minimal() {
        let p = next_prime_in_ap(&big(1), &big(168), &big(1)).unwrap();
        let mut k = big(2);
        while k < p {
            if (&k - 1u8).mod_floor(&big(168)).is_zero() {
                assert!(!is_prime(&k));
            }
            k += 1;
        }
    }

    #[test]
    fn euler_phi_examples() {
        assert_eq!(euler_phi(&big(1)).unwrap(), big(1));
        assert_eq!(euler_phi(&big(49)).unwrap(), big(42));
        assert_eq!(euler_phi(&big(12)).unwrap(), big(4));
    }
}
