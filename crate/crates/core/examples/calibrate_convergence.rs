//! Regenerates `tests/fixtures/convergence_valuations.json`.
//!
//! Deliberately shares no code with the library's number routines: Bernoulli
//! numbers come from the double-sum formula, Euler numbers from their relation
//! to Bernoulli numbers, and the Riemann sums are accumulated term by term.
//!
//! Run with `cargo run -p volkenborn --example calibrate_convergence`.

use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

const N_MAX: u32 = 5;
const DEGREE_MAX: u32 = 5;

fn binom(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn ipow(x: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(x), e as usize)
}

/// `B_n = sum_k 1/(k+1) sum_j (-1)^j C(k,j) j^n`.
fn bernoulli(n: u32) -> BigRational {
    let mut total = BigRational::zero();
    for k in 0..=n {
        let mut inner = BigInt::zero();
        for j in 0..=k {
            let t = binom(k, j) * ipow(j as u64, n);
            inner += if j % 2 == 0 { t } else { -t };
        }
        total += BigRational::new(inner, BigInt::from(k + 1));
    }
    total
}

/// `E_n(0) = -2 (2^(n+1) - 1) B_(n+1) / (n + 1)`.
fn euler(n: u32) -> BigRational {
    let factor = BigRational::new(-2 * (ipow(2, n + 1) - 1), BigInt::from(n + 1));
    factor * bernoulli(n + 1)
}

fn valuation(r: &BigRational, p: u64) -> Value {
    if r.is_zero() {
        return json!("inf");
    }
    let count = |x: &BigInt| {
        let mut x = x.abs();
        let mut v = 0i64;
        while (&x % p).is_zero() {
            x /= p;
            v += 1;
        }
        v
    };
    json!(count(r.numer()) - count(r.denom()))
}

fn volkenborn_error(n: u32, p: u64, big_n: u32) -> BigRational {
    let terms = p.pow(big_n);
    let sum: BigInt = (0..terms).map(|x| ipow(x, n)).sum();
    BigRational::new(sum, BigInt::from(terms)) - bernoulli(n)
}

fn fermionic_error(n: u32, p: u64, big_n: u32) -> BigRational {
    let terms = p.pow(big_n);
    let sum: BigInt = (0..terms)
        .map(|x| if x % 2 == 0 { ipow(x, n) } else { -ipow(x, n) })
        .sum();
    BigRational::from_integer(sum) - euler(n)
}

fn entry(kind: &str, n: u32, p: u64, error: fn(u32, u64, u32) -> BigRational) -> Value {
    let vals: Vec<Value> = (1..=N_MAX).map(|big_n| valuation(&error(n, p, big_n), p)).collect();
    let slack = match (vals[0].as_i64(), vals[N_MAX as usize - 1].as_i64()) {
        (Some(first), Some(last)) => (first + N_MAX as i64 - 1 - last).max(0),
        _ => 0,
    };
    json!({ "kind": kind, "n": n, "p": p, "valuations": vals, "slack": slack })
}

fn main() {
    let mut entries = Vec::new();
    for p in [2u64, 3, 5, 7] {
        for n in 0..=DEGREE_MAX {
            entries.push(entry("volkenborn", n, p, volkenborn_error));
        }
    }
    for p in [3u64, 5, 7] {
        for n in 0..=DEGREE_MAX {
            entries.push(entry("fermionic", n, p, fermionic_error));
        }
    }
    let doc = json!({
        "description": "v_p(approximant_N - limit) for N = 1..5; slack = max(0, first + 4 - last)",
        "n_max": N_MAX,
        "entries": entries,
    });
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/convergence_valuations.json");
    std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap() + "\n").unwrap();
    println!("wrote {} entries to {}", entries.len(), path.display());
}
