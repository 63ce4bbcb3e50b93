//! Shared inputs for the benchmark targets.

use num_bigint::BigInt;

/// Radicands spanning short and long continued-fraction periods.
pub fn unit_radicands() -> Vec<BigInt> {
    [5i64, 94, 1021, 9199, 99991]
        .into_iter()
        .map(BigInt::from)
        .collect()
}

/// Fundamental discriminants for class-group enumeration.
pub fn oracle_discriminants() -> Vec<BigInt> {
    [40i64, 316, 1596, 5464, 11996]
        .into_iter()
        .map(BigInt::from)
        .collect()
}
