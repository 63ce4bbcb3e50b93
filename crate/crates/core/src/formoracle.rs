//! Ground-truth computation of the Polya group of Q(sqrt(d)) through
//! indefinite binary quadratic forms: the narrow class group is enumerated
//! from reduction cycles, composition is Dirichlet composition after forcing
//! coprime leading coefficients, the wide class group is the quotient by the
//! class of a form representing -1, and Po is the subgroup generated by the
//! classes of the forms of ramified prime norm.
//!
//! Nothing here touches continued fractions or units, which is the point:
//! it cross-validates the cohomological rank predictor along an unrelated
//! route.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::quadfield;

/// A primitive integral binary quadratic form a x^2 + b xy + c y^2 of
/// positive non-square discriminant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadraticForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl QuadraticForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<QuadraticForm> {
        let f = QuadraticForm { a, b, c };
        let d = f.discriminant();
        if !d.is_positive() || arith::is_perfect_square(&d) {
            return Err(Error::Domain(format!(
                "form {f:?} must have positive non-square discriminant, got {d}"
            )));
        }
        if !f.content().is_one() {
            return Err(Error::Domain(format!("form {f:?} is not primitive")));
        }
        Ok(f)
    }

    fn raw(a: BigInt, b: BigInt, c: BigInt) -> QuadraticForm {
        let f = QuadraticForm { a, b, c };
        debug_assert!(f.content().is_one());
        f
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    fn content(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    /// Evaluate at (x, y).
    fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// (a, -b, c) represents the inverse class.
    pub fn inverse(&self) -> QuadraticForm {
        QuadraticForm::raw(self.a.clone(), -&self.b, self.c.clone())
    }

    /// Reduced iff |sqrt(D) - 2|a|| < b < sqrt(D) (exact integer test).
    fn is_reduced(&self, sqrt_d: &BigInt) -> bool {
        if !self.b.is_positive() || self.b > *sqrt_d {
            return false;
        }
        let two_abs_a = BigInt::from(2) * self.a.abs();
        &two_abs_a + &self.b > *sqrt_d && two_abs_a <= sqrt_d + &self.b
    }
}

/// The principal form (1, sigma, (sigma^2 - D)/4) with sigma = D mod 2.
pub fn principal_form(d: &BigInt) -> QuadraticForm {
    let sigma: BigInt = d % 2u8;
    let c = (&sigma * &sigma - d) / 4u8;
    QuadraticForm::raw(BigInt::one(), sigma, c)
}

// One step along a reduction orbit: (a, b, c) -> (c, r, (r^2 - D)/(4c))
// with r = -b normalized with respect to 2|c|. On reduced forms this walks
// the cycle; on arbitrary forms it shrinks coefficients until reduced.
fn rho(f: &QuadraticForm, d: &BigInt, sqrt_d: &BigInt) -> QuadraticForm {
    let abs_c = f.c.abs();
    let m = BigInt::from(2) * &abs_c;
    let hi = if abs_c > *sqrt_d {
        abs_c.clone()
    } else {
        sqrt_d.clone()
    };
    // unique r = -b (mod 2|c|) in the window (hi - 2|c|, hi]
    let base = (-&f.b).mod_floor(&m);
    let r = &base + &m * (&hi - &base).div_floor(&m);
    let c_next = (&r * &r - d) / (BigInt::from(4) * &f.c);
    QuadraticForm::raw(f.c.clone(), r, c_next)
}

/// Canonical class label: the lexicographically smallest reduced form in
/// the reduction cycle of `f`.
pub fn reduce_cycle(f: &QuadraticForm) -> QuadraticForm {
    let d = f.discriminant();
    let sqrt_d = arith::isqrt(&d);
    let mut g = f.clone();
    let mut guard = 0u32;
    while !g.is_reduced(&sqrt_d) {
        g = rho(&g, &d, &sqrt_d);
        guard += 1;
        assert!(guard < 100_000, "reduction of {f:?} did not terminate");
    }
    let start = g.clone();
    let mut best = g.clone();
    loop {
        g = rho(&g, &d, &sqrt_d);
        if g < best {
            best = g.clone();
        }
        if g == start {
            return best;
        }
    }
}

/// Gauss composition. Returns a (generally unreduced) form in the product
/// class; canonicalize with [`reduce_cycle`].
pub fn compose(f: &QuadraticForm, g: &QuadraticForm) -> Result<QuadraticForm> {
    let d = f.discriminant();
    if d != g.discriminant() {
        return Err(Error::Domain(format!(
            "cannot compose forms of discriminants {d} and {}",
            g.discriminant()
        )));
    }
    // Dirichlet composition needs gcd(a1, a2) = 1; slide g along its class
    // until its leading coefficient is coprime to a1.
    let g = if f.a.gcd(&g.a).is_one() {
        g.clone()
    } else {
        coprime_representative(g, &f.a)?
    };
    let a1 = &f.a;
    let a2 = &g.a;
    debug_assert!(a1.gcd(a2).is_one());

    // B = b1 (mod 2 a1), B = b2 (mod 2 a2); the halved difference is integral
    // because b1 = b2 = D (mod 2).
    let b = if a2.abs().is_one() {
        f.b.clone()
    } else {
        let m = a2.abs();
        let t = ((&g.b - &f.b) / 2u8 * arith::inv_mod(&a1.mod_floor(&m), &m)?).mod_floor(&m);
        &f.b + BigInt::from(2) * a1 * t
    };
    let denom = BigInt::from(4) * a1 * a2;
    let (c, rem) = (&b * &b - &d).div_rem(&denom);
    debug_assert!(rem.is_zero(), "concordance failed in composition");
    Ok(QuadraticForm::raw(a1 * a2, b, c))
}

// An SL2-equivalent of `g` whose leading coefficient is coprime to `target`.
// For each prime p | target one of (1,0), (0,1), (1,1) avoids p (a primitive
// form cannot vanish at all three mod p); glue the choices with the CRT and
// complete the primitive column to a unimodular matrix.
fn coprime_representative(g: &QuadraticForm, target: &BigInt) -> Result<QuadraticForm> {
    let primes = arith::factor(&target.abs())?.primes();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for p in &primes {
        let candidates = [
            (BigInt::one(), BigInt::zero(), &g.a),
            (BigInt::zero(), BigInt::one(), &g.c),
            (BigInt::one(), BigInt::one(), &(&g.a + &g.b + &g.c)),
        ];
        let (x, y, _) = candidates
            .iter()
            .find(|(_, _, v)| !v.mod_floor(p).is_zero())
            .cloned()
            .expect("primitive form is nonzero somewhere mod p");
        xs.push((x, p.clone()));
        ys.push((y, p.clone()));
    }
    let (mut x, _) = arith::crt(&xs)?;
    let (mut y, _) = arith::crt(&ys)?;
    if x.is_zero() && y.is_zero() {
        x = BigInt::one();
    }
    let shared = x.gcd(&y);
    if shared > BigInt::one() {
        x /= &shared;
        y /= &shared;
    }
    // complete (x, y) to [[x, u], [y, v]] with xv - yu = 1
    let e = x.extended_gcd(&y);
    debug_assert!(e.gcd.is_one());
    let v = e.x;
    let u = -e.y;
    let a = g.eval(&x, &y);
    let c = g.eval(&u, &v);
    let b = BigInt::from(2) * (&g.a * &x * &u + &g.c * &y * &v) + &g.b * (&x * &v + &y * &u);
    let out = QuadraticForm::raw(a, b, c);
    debug_assert_eq!(out.discriminant(), g.discriminant());
    debug_assert!(out.a.gcd(target).is_one());
    Ok(out)
}

/// The narrow class group of a fundamental positive discriminant, as one
/// canonical reduced form per reduction cycle.
#[derive(Debug, Clone)]
pub struct NarrowClassGroup {
    pub discriminant: BigInt,
    /// Canonical cycle representatives, ascending; length is h+(D).
    pub classes: Vec<QuadraticForm>,
}

impl NarrowClassGroup {
    pub fn h_plus(&self) -> usize {
        self.classes.len()
    }

    /// Canonical label of the class of `f`.
    pub fn class_of(&self, f: &QuadraticForm) -> QuadraticForm {
        let rep = reduce_cycle(f);
        debug_assert!(self.classes.binary_search(&rep).is_ok());
        rep
    }

    pub fn principal(&self) -> QuadraticForm {
        reduce_cycle(&principal_form(&self.discriminant))
    }
}

fn check_fundamental(d: &BigInt) -> Result<()> {
    if !d.is_positive() || arith::is_perfect_square(d) {
        return Err(Error::Domain(format!(
            "discriminant must be positive and non-square, got {d}"
        )));
    }
    let fundamental = match (d % 4u8).to_u8().unwrap() {
        1 => arith::is_squarefree(d)?,
        0 => {
            let q = d / 4u8;
            let r = (&q % 4u8).to_u8().unwrap();
            (r == 2 || r == 3) && arith::is_squarefree(&q)?
        }
        _ => false,
    };
    if !fundamental {
        return Err(Error::Domain(format!(
            "discriminant {d} is not fundamental"
        )));
    }
    Ok(())
}

/// Enumerate every reduced form of discriminant D and group them into
/// reduction cycles.
pub fn narrow_class_group(d: &BigInt) -> Result<NarrowClassGroup> {
    check_fundamental(d)?;
    let sqrt_d = arith::isqrt(d);
    let mut remaining: BTreeSet<QuadraticForm> = BTreeSet::new();
    let parity = (d % 2u8).to_u8().unwrap();
    let mut b = BigInt::from(if parity == 0 { 2 } else { 1 });
    while b <= sqrt_d {
        let n = (d - &b * &b) / 4u8;
        // window s - b < 2|a| <= s + b
        let lo = (&sqrt_d - &b) / 2u8 + 1u8;
        let hi = (&sqrt_d + &b) / 2u8;
        let mut aa = lo.max(BigInt::one());
        while aa <= hi {
            if (&n % &aa).is_zero() {
                let c = &n / &aa;
                for (a_signed, c_signed) in [(aa.clone(), -&c), (-&aa, c.clone())] {
                    let f = QuadraticForm {
                        a: a_signed,
                        b: b.clone(),
                        c: c_signed,
                    };
                    if f.content().is_one() {
                        debug_assert!(f.is_reduced(&sqrt_d));
                        debug_assert_eq!(f.discriminant(), *d);
                        remaining.insert(f);
                    }
                }
            }
            aa += 1u8;
        }
        b += 2u8;
    }

    let mut classes = Vec::new();
    while let Some(seed) = remaining.iter().next().cloned() {
        // walk the whole cycle, removing members and tracking the minimum
        let mut best = seed.clone();
        let mut g = seed.clone();
        loop {
            remaining.remove(&g);
            g = rho(&g, d, &sqrt_d);
            if g < best {
                best = g.clone();
            }
            if g == seed {
                break;
            }
        }
        classes.push(best);
    }
    classes.sort();
    Ok(NarrowClassGroup {
        discriminant: d.clone(),
        classes,
    })
}

/// Class of the unique form of leading coefficient q for a ramified prime
/// q | D: (q, b, (b^2 - D)/(4q)) with b the smallest admissible value.
pub fn ramified_prime_class(d: &BigInt, q: &BigInt) -> Result<QuadraticForm> {
    check_fundamental(d)?;
    if !(d % q).is_zero() || !arith::is_prime(q) {
        return Err(Error::Domain(format!(
            "{q} is not a ramified prime of discriminant {d}"
        )));
    }
    let four_q = BigInt::from(4) * q;
    let parity = d % 2u8;
    let mut b = parity.clone();
    loop {
        if (&b * &b - d).mod_floor(&four_q).is_zero() {
            let c = (&b * &b - d) / &four_q;
            let f = QuadraticForm::raw(q.clone(), b, c);
            return Ok(reduce_cycle(&f));
        }
        b += 2u8;
        assert!(b <= &four_q + 2u8, "no admissible b for q={q}, D={d}");
    }
}

/// Class of a form representing -1: the kernel of the narrow-to-wide
/// quotient. Trivial exactly when the fundamental unit has norm -1.
pub fn wide_quotient_kernel(d: &BigInt) -> Result<QuadraticForm> {
    check_fundamental(d)?;
    let sigma: BigInt = d % 2u8;
    let c = (d - &sigma * &sigma) / 4u8;
    let f = QuadraticForm::raw(BigInt::from(-1), sigma, c);
    Ok(reduce_cycle(&f))
}

/// Rank of Po(Q(sqrt(d))) per its definition: the subgroup of the wide
/// class group generated by the classes of the products of primes of equal
/// norm; only ramified primes contribute (split and inert products are
/// principal).
pub fn polya_group_oracle(d: &BigInt) -> Result<usize> {
    let disc = quadfield::discriminant(d)?;
    let group = narrow_class_group(&disc)?;
    let principal = group.principal();
    let k0 = wide_quotient_kernel(&disc)?;

    let mut generators = vec![k0.clone()];
    for q in quadfield::ramified_primes(d)? {
        generators.push(ramified_prime_class(&disc, &q)?);
    }

    let mut closure: BTreeSet<QuadraticForm> = BTreeSet::new();
    closure.insert(principal.clone());
    for gen in &generators {
        let square = reduce_cycle(&compose(gen, gen)?);
        assert_eq!(
            square, principal,
            "ramified and kernel classes have order <= 2"
        );
        let extra: Vec<QuadraticForm> = closure
            .iter()
            .map(|m| compose(m, gen).map(|h| reduce_cycle(&h)))
            .collect::<Result<_>>()?;
        closure.extend(extra);
    }

    let size = closure.len();
    assert!(
        size.is_power_of_two(),
        "closure of order-2 classes is an F2-space"
    );
    let kernel_bits = usize::from(k0 != principal);
    Ok(size.trailing_zeros() as usize - kernel_bits)
}
