//! Acceptance suite. One test per criterion; each prints a PASS line with
//! the measured numbers. Run with `--nocapture` to see them, and
//! `--ignored` for the long-running t = 5 family check.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use polya_core::arith;
use polya_core::biquad;
use polya_core::constructors;
use polya_core::cubic;
use polya_core::density;
use polya_core::formoracle;
use polya_core::quadfield;
use polya_core::sqclass::{self, SquareClass};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn squarefree_radicands(limit: i64) -> Vec<i64> {
    (2..=limit)
        .filter(|&d| arith::is_squarefree(&big(d)).unwrap())
        .collect()
}

/// Criterion 1: the cohomological rank predictor agrees with the form-class
/// oracle for every square-free radicand up to 3000.
#[test]
fn criterion_1_oracle_agreement() {
    let radicands = squarefree_radicands(3000);
    let mismatches: Vec<i64> = radicands
        .par_iter()
        .filter(|&&d| {
            let db = big(d);
            let predicted = quadfield::quad_polya_rank(&db).unwrap();
            let oracle = formoracle::polya_group_oracle(&db).unwrap();
            predicted != oracle
        })
        .copied()
        .collect();
    assert!(
        mismatches.is_empty(),
        "rank mismatch at d in {mismatches:?}"
    );
    println!(
        "PASS criterion 1: quad_polya_rank == polya_group_oracle for all {} square-free d <= 3000",
        radicands.len()
    );
}

/// Criterion 2: for primes p = 3 (mod 4) below 10^4 the square class of
/// N(u+1) is `[2p]` when p = 3 (mod 8) and `[2]` when p = 7 (mod 8).
#[test]
fn criterion_2_unit_norm_class_sweep() {
    let mut checked = 0;
    for p in arith::primes_up_to(10_000) {
        if p % 4 != 3 {
            continue;
        }
        let pb = big(p as i64);
        let a = quadfield::a_class(&pb).unwrap();
        let expected = if p % 8 == 3 {
            SquareClass::from_parts(false, vec![big(2), pb.clone()])
        } else {
            SquareClass::from_parts(false, vec![big(2)])
        };
        assert_eq!(a, expected, "square class of N(u+1) at p={p}");
        checked += 1;
    }
    assert!(checked > 500);
    println!("PASS criterion 2: N(u+1) square class correct for all {checked} primes p = 3 (4), p < 10^4");
}

/// Criterion 3: fundamental units of products of three primes p = 1 (mod 4)
/// with pairwise Jacobi -1 all have norm -1.
#[test]
fn criterion_3_negative_norm_sweep() {
    let primes: Vec<u64> = arith::primes_up_to(600)
        .into_iter()
        .filter(|p| p % 4 == 1)
        .collect();
    let mut triples = Vec::new();
    'outer: for (i, &p1) in primes.iter().enumerate() {
        for (j, &p2) in primes.iter().enumerate().skip(i + 1) {
            if arith::jacobi(&big(p1 as i64), &big(p2 as i64)).unwrap() != -1 {
                continue;
            }
            for &p3 in primes.iter().skip(j + 1) {
                if p1 * p2 * p3 >= 10_000_000 {
                    break;
                }
                if arith::jacobi(&big(p1 as i64), &big(p3 as i64)).unwrap() == -1
                    && arith::jacobi(&big(p2 as i64), &big(p3 as i64)).unwrap() == -1
                {
                    triples.push((p1, p2, p3));
                    if triples.len() >= 60 {
                        break 'outer;
                    }
                }
            }
        }
    }
    assert!(
        triples.len() >= 50,
        "need at least 50 triples, found {}",
        triples.len()
    );
    let bad: Vec<_> = triples
        .par_iter()
        .filter(|&&(p1, p2, p3)| {
            let d = big((p1 * p2 * p3) as i64);
            quadfield::fundamental_unit(&d).unwrap().norm != -1
        })
        .collect();
    assert!(bad.is_empty(), "norm +1 at {bad:?}");
    println!(
        "PASS criterion 3: fundamental unit norm -1 for all {} prime triples",
        triples.len()
    );
}

fn run_family_check(t: usize, q: i64, cf_steps: u64) -> constructors::BiquadTheoremReport {
    let report = constructors::verify_theorem_biquad_bounded(
        t,
        &big(q),
        &arith::default_search_ceiling(),
        cf_steps,
    )
    .unwrap();
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    println!(
        "{verdict} criterion 4: q={q} t={t} p={} m={} rank(K_m,p)={} rank(K_m,p-1)={} h1_ok={} (expected {})",
        report.p, report.m, report.rank_kmp, report.rank_kmp_minus_1, report.h1_structure_ok,
        report.expected
    );
    assert_eq!(
        report.rank_kmp, report.expected,
        "rank of Po(K_m,p) for q={q}, t={t}"
    );
    assert_eq!(
        report.rank_kmp_minus_1, report.expected,
        "rank of Po(K_m,p-1) for q={q}, t={t}"
    );
    assert!(report.h1_structure_ok, "H^1 structure for q={q}, t={t}");
    assert!(report.passed);
    report
}

/// Criterion 4 (desk scale), (q, p) = (3, 7), t = 3.
#[test]
fn criterion_4_consecutive_biquad_q3() {
    run_family_check(3, 3, 400_000_000);
}

/// Criterion 4 (desk scale), (q, p) = (5, 11), t = 3.
///
/// Expected to FAIL, and the failure is genuine mathematics, not a bug:
/// for q = 5 (mod 8) the unit of Q(sqrt(2q)) has norm -1 and a 2-adic
/// constraint keeps the third-subfield unit class inside `<[2q],[m]>`, so
/// Po(K_{m,p-1}) = (Z/2)^t instead of (Z/2)^(t-1) for every tuple in the
/// family (cross-checked structurally and on 22 independent instances by
/// `biquad::tests::q5_family_obstruction_on_the_2q_side`). The assertion
/// states the expected theorem rank and is not weakened to match.
#[test]
fn criterion_4_consecutive_biquad_q5() {
    run_family_check(3, 5, 400_000_000);
}

/// Criterion 4 (desk scale), (q, p) = (11, 23), t = 3.
#[test]
fn criterion_4_consecutive_biquad_q11() {
    run_family_check(3, 11, 400_000_000);
}

/// Criterion 4, long tail: t = 5 with (q, p) = (3, 7); the continued
/// fraction at d3 = m p runs to a period in the billions.
#[test]
#[ignore = "long-running: allow up to an hour"]
fn criterion_4_consecutive_biquad_t5_long() {
    let report = run_family_check(5, 3, 40_000_000_000);
    assert_eq!(report.rank_kmp, 4);
    println!(
        "PASS criterion 4 (t=5): m={} both ranks = {}",
        report.m, report.rank_kmp
    );
}

/// Criterion 5: certificates for |Po(K_p)| > M at M in {2, 25, 80}, each
/// independently re-verified.
#[test]
fn criterion_5_cubic_certificates() {
    for (bound, expected_low) in [(2.0, 3i64), (25.0, 27), (80.0, 81)] {
        let cert =
            constructors::verify_theorem_cubic(bound, &arith::default_search_ceiling()).unwrap();
        assert_eq!(cert.po_lower_bound, big(expected_low), "bound M={bound}");
        cert.verify().unwrap();
        // the actual Polya order, recomputed from scratch
        let order = cubic::polya_order_cubic(&cert.p).unwrap();
        assert!(order >= cert.po_lower_bound);
        println!(
            "PASS criterion 5: M={bound} -> p={} with |Po(K_p)| = {order} >= {}",
            cert.p, cert.po_lower_bound
        );
    }
}

/// Criterion 6: at X = 10^6 the square-free fraction among primes in the
/// progression tracks the Euler product within 0.03.
#[test]
fn criterion_6_density() {
    for (a, m) in [(1u64, 1u64), (2, 3), (1, 6)] {
        let report = density::density_report(1_000_000, a, m, 10_000).unwrap();
        let gap = (report.ratio - report.euler_c).abs();
        assert!(
            gap <= 0.03,
            "density gap {gap:.4} exceeds 0.03 at (a, m) = ({a}, {m}): {report:?}"
        );
        println!(
            "PASS criterion 6: (a={a}, m={m}) N_h/pi = {:.5} vs c_h = {:.5} (gap {gap:.5})",
            report.ratio, report.euler_c
        );
    }
}

// ---------------------------------------------------------------------
// Criterion 7: standalone property suites.
// ---------------------------------------------------------------------

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }
}

#[test]
fn criterion_7a_rank_vs_closure() {
    let mut rng = XorShift(0x1234_5678_9abc_def1);
    let primes = [2i64, 3, 5, 7, 11, 13];
    for _ in 0..200 {
        let gens: Vec<SquareClass> = (0..(rng.next() % 6 + 1))
            .map(|_| {
                let mask = rng.next();
                let kernel = primes
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| big(p))
                    .collect();
                SquareClass::from_parts(mask >> 6 & 1 == 1, kernel)
            })
            .collect();
        let rank = sqclass::subgroup_rank(&gens);
        let size = sqclass::subgroup_members(&gens).unwrap().len();
        assert_eq!(1usize << rank, size, "gens: {gens:?}");
    }
    println!("PASS criterion 7a: rank = log2|closure| on 200 random generator sets");
}

#[test]
fn criterion_7b_pell_identity_and_minimality() {
    let mut checked = 0;
    for d in 2i64..=200 {
        let db = big(d);
        if !arith::is_squarefree(&db).unwrap() {
            continue;
        }
        let u = quadfield::fundamental_unit(&db).unwrap();
        let pell = &u.x * &u.x - &db * &u.y * &u.y;
        assert_eq!(pell, big(4 * u.norm as i64), "Pell identity at d={d}");
        // brute force over y <= 1000, smaller norm -1 solution first
        let mut found = None;
        'scan: for y in 1i64..=1000 {
            for norm in [-1i64, 1] {
                let t = d * y * y + 4 * norm;
                if t < 0 {
                    continue;
                }
                let r = (t as f64).sqrt() as i64;
                for x in [r - 1, r, r + 1] {
                    if x > 0 && x * x == t {
                        found = Some((x, y, norm));
                        break 'scan;
                    }
                }
            }
        }
        match found {
            Some((x, y, norm)) => {
                assert_eq!(
                    (u.x, u.y, u.norm as i64),
                    (big(x), big(y), norm),
                    "minimality at d={d}"
                );
            }
            None => assert!(u.y > big(1000), "d={d}"),
        }
        checked += 1;
    }
    println!("PASS criterion 7b: Pell identity and minimality for {checked} radicands d <= 200");
}

#[test]
fn criterion_7c_arith_bruteforce_oracles() {
    // jacobi against the set of squares mod p
    for p in arith::primes_up_to(997).into_iter().skip(1) {
        let squares: std::collections::BTreeSet<u64> = (1..p).map(|a| a * a % p).collect();
        for a in 1..p {
            let expected = if squares.contains(&a) { 1 } else { -1 };
            assert_eq!(
                arith::jacobi(&big(a as i64), &big(p as i64)).unwrap(),
                expected,
                "jacobi({a}, {p})"
            );
        }
    }
    // crt uniqueness by exhaustive scan for M <= 10^4
    let mut rng = XorShift(0xdead_beef_cafe_f00d);
    for _ in 0..50 {
        let moduli = [
            2 + rng.next() % 20,
            2 + rng.next() % 20,
            2 + rng.next() % 20,
        ];
        let sys: Vec<(BigInt, BigInt)> = moduli
            .iter()
            .map(|&m| (big((rng.next() % m) as i64), big(m as i64)))
            .collect();
        match arith::crt(&sys) {
            Ok((x, m)) => {
                assert!(m <= big(10_000));
                let mut hits = 0;
                let mut k = 0i64;
                while big(k) < m {
                    if sys.iter().all(|(r, q)| {
                        (big(k) - r)
                            .to_i64()
                            .unwrap()
                            .rem_euclid(q.to_i64().unwrap())
                            == 0
                    }) {
                        assert_eq!(big(k), x);
                        hits += 1;
                    }
                    k += 1;
                }
                assert_eq!(hits, 1);
            }
            Err(_) => {
                // non-coprime moduli; nothing to check
            }
        }
    }
    // sqrt_mod_prime squares back
    for p in [5i64, 13, 17, 29, 97, 757, 997] {
        for a in 0..50 {
            if let Ok(r) = arith::sqrt_mod_prime(&big(a), &big(p)) {
                assert_eq!((&r * &r - big(a)).to_i64().unwrap().rem_euclid(p), 0);
            }
        }
    }
    println!("PASS criterion 7c: jacobi/crt/sqrt brute-force oracles");
}

#[test]
fn criterion_7d_rho_properties() {
    let one = big(1);
    // rho(9) = 0, stated directly
    assert_eq!(density::rho(&big(9), &one, &one).unwrap(), 0);
    // multiplicativity on coprime pairs
    let mut rng = XorShift(0x0123_4567_89ab_cdef);
    let mut checked = 0;
    while checked < 100 {
        let n1 = 2 + rng.next() % 300;
        let n2 = 2 + rng.next() % 300;
        if n1 * n2 > 100_000 || num_integer::gcd(n1, n2) != 1 {
            continue;
        }
        let lhs = density::rho(&big((n1 * n2) as i64), &one, &one).unwrap();
        let rhs = density::rho(&big(n1 as i64), &one, &one).unwrap()
            * density::rho(&big(n2 as i64), &one, &one).unwrap();
        assert_eq!(lhs, rhs, "rho multiplicativity at {n1} * {n2}");
        checked += 1;
    }
    // rho(q^2) is 0 or 2 away from 3, and 2 exactly at q = 1 (mod 3)
    for q in arith::primes_up_to(1000) {
        if q == 3 {
            continue;
        }
        let r = density::rho(&(big(q as i64) * big(q as i64)), &one, &one).unwrap();
        let expected = if q % 3 == 1 { 2 } else { 0 };
        assert_eq!(r, expected, "rho({q}^2)");
    }
    println!("PASS criterion 7d: rho(9) = 0, multiplicativity, rho(q^2) in {{0,2}}");
}

#[test]
fn criterion_7e_two_adic_ramification_trichotomy() {
    let mut rng = XorShift(0x5555_aaaa_5555_aaaa);
    let mut checked = 0;
    while checked < 500 {
        let m = big((2 + rng.next() % 5000) as i64);
        let n = big((2 + rng.next() % 5000) as i64);
        let Ok((d1, d2, d3)) = biquad::subfields(&m, &n) else {
            continue;
        };
        let count = [&d1, &d2, &d3]
            .into_iter()
            .filter(|d| (*d % big(4)) != big(1))
            .count();
        assert_ne!(
            count, 1,
            "2 ramified in exactly one subfield at m={m}, n={n}"
        );
        // and the ramification list mirrors the count
        let ram = biquad::ramified_primes_biquad(&m, &n).unwrap();
        let e2 = ram.iter().find(|(p, _)| *p == big(2)).map(|(_, e)| *e);
        let expected = match count {
            0 => None,
            2 => Some(2),
            3 => Some(4),
            _ => unreachable!(),
        };
        assert_eq!(e2, expected, "m={m} n={n}");
        checked += 1;
    }
    println!("PASS criterion 7e: 2-adic ramification trichotomy on 500 random pairs");
}
