//! Diagnostic for the consecutive bi-quadratic family: dump tuple, ranks,
//! unit norms and a-classes for both fields, with the unit norm re-checked
//! through the form oracle (k0 principal <=> norm -1).

use num_bigint::BigInt;
use polya_core::{arith, biquad, constructors, formoracle, quadfield};

fn norm_via_forms(d: &BigInt) -> i8 {
    let disc = quadfield::discriminant(d).unwrap();
    let k0 = formoracle::wide_quotient_kernel(&disc).unwrap();
    let principal = formoracle::reduce_cycle(&formoracle::principal_form(&disc));
    if k0 == principal {
        -1
    } else {
        1
    }
}

fn main() {
    for (t, q) in [(3usize, 3i64), (3, 5), (3, 11)] {
        let qb = BigInt::from(q);
        let p = BigInt::from(2 * q + 1);
        let tuple =
            constructors::sieve_prime_tuple(t, &p, &qb, &arith::default_search_ceiling()).unwrap();
        let m = tuple.product();
        println!("== q={q} p={p} t={t}: r = {:?}, m = {m}", tuple.primes);
        for n in [p.clone(), &p - 1u8] {
            let (d1, d2, d3) = biquad::subfields(&m, &n).unwrap();
            let ram = biquad::ramified_primes_biquad(&m, &n).unwrap();
            println!("  K_(m,{n}): s = {}", ram.len());
            for d in [&d1, &d2, &d3] {
                let a = quadfield::a_class(d).unwrap();
                let small = d.to_string().len() < 8;
                let nf = if small {
                    norm_via_forms(d).to_string()
                } else {
                    "-".into()
                };
                println!("    d = {d}: a_class = {a} (norm via forms: {nf})");
            }
            let h1 = biquad::h1_rank_biquad(&m, &n).unwrap();
            println!("    h1 rank = {h1}, polya rank = {}", ram.len() - h1);
        }
    }
}
