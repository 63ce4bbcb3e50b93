//! The group Q*/(Q*)^2 as F2-vectors indexed by {-1} and the primes.
//!
//! A class is a sign bit plus a square-free kernel (the primes occurring to
//! odd exponent). Multiplication is sign product and symmetric difference of
//! kernels; every element is self-inverse. Subgroup ranks are computed by
//! Gaussian elimination over a basis built lazily from the primes that occur.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// An element of Q*/(Q*)^2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SquareClass {
    negative: bool,
    kernel: Vec<BigInt>,
}

impl SquareClass {
    /// The class of 1.
    pub fn identity() -> Self {
        SquareClass::default()
    }

    /// Build from a sign and a set of primes. The kernel is sorted and
    /// deduplicated; primality of the entries is the caller's contract.
    pub fn from_parts(negative: bool, kernel: Vec<BigInt>) -> Self {
        let mut kernel = kernel;
        kernel.sort();
        kernel.dedup();
        debug_assert!(kernel.iter().all(crate::arith::is_prime));
        SquareClass { negative, kernel }
    }

    pub fn negative(&self) -> bool {
        self.negative
    }

    pub fn kernel(&self) -> &[BigInt] {
        &self.kernel
    }

    pub fn is_identity(&self) -> bool {
        !self.negative && self.kernel.is_empty()
    }

    /// Group law: sign product, symmetric difference of kernels.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let mut kernel = Vec::with_capacity(self.kernel.len() + other.kernel.len());
        let (mut i, mut j) = (0, 0);
        while i < self.kernel.len() && j < other.kernel.len() {
            match self.kernel[i].cmp(&other.kernel[j]) {
                std::cmp::Ordering::Less => {
                    kernel.push(self.kernel[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    kernel.push(other.kernel[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        kernel.extend_from_slice(&self.kernel[i..]);
        kernel.extend_from_slice(&other.kernel[j..]);
        SquareClass {
            negative: self.negative ^ other.negative,
            kernel,
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", if self.negative { "-" } else { "+" })?;
        for (i, p) in self.kernel.iter().enumerate() {
            write!(f, "{}{p}", if i == 0 { "" } else { "." })?;
        }
        write!(f, "]")
    }
}

/// F2-dimension of the span of the given classes.
pub fn subgroup_rank(generators: &[SquareClass]) -> usize {
    // Row reduction keyed on the largest coordinate (sign counts as a
    // coordinate below every prime). Each pivot row is stored reduced.
    let mut pivots: Vec<SquareClass> = Vec::new();
    let mut rank = 0;
    for g in generators {
        let mut v = g.clone();
        loop {
            let Some(lead) = leading(&v) else { break };
            match pivots.iter().find(|p| leading(p) == Some(lead.clone())) {
                Some(p) => v = v.mul(p),
                None => break,
            }
        }
        if !v.is_identity() {
            pivots.push(v);
            rank += 1;
        }
    }
    rank
}

/// Largest coordinate of a class, with the sign bit ordered below all primes.
fn leading(c: &SquareClass) -> Option<Lead> {
    match c.kernel().last() {
        Some(p) => Some(Lead::Prime(p.clone())),
        None if c.negative() => Some(Lead::Sign),
        None => None,
    }
}

#[derive(PartialEq, Eq, Clone)]
enum Lead {
    Sign,
    Prime(BigInt),
}

/// Full closure of the span (size 2^rank), by iterated products.
pub fn subgroup_members(generators: &[SquareClass]) -> Result<BTreeSet<SquareClass>> {
    if generators.len() > 20 {
        return Err(Error::EffortExceeded(format!(
            "subgroup closure limited to 20 generators, got {}",
            generators.len()
        )));
    }
    let mut members = BTreeSet::new();
    members.insert(SquareClass::identity());
    for g in generators {
        let extra: Vec<_> = members.iter().map(|m| m.mul(g)).collect();
        members.extend(extra);
        if members.len() > 1 << 20 {
            return Err(Error::EffortExceeded("subgroup closure too large".into()));
        }
    }
    Ok(members)
}
