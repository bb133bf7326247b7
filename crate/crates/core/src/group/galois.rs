//! Galois automorphisms `α_e`: apply `ζ ↦ ζ^e` entrywise, i.e. scale every
//! exponent by `e`. For `gcd(e, r) = 1` this is a reflection-preserving
//! automorphism of `G(r,1,n)` that also preserves each `G(r,p,n)`.

use super::GroupElement;
use crate::arith::{gcd, lcm, prime_divisors};
use crate::error::{param, Result};

pub fn galois_apply(x: &GroupElement, exponent: i64) -> Result<GroupElement> {
    let r = x.modulus() as i64;
    if gcd(exponent.unsigned_abs(), r as u64) != 1 {
        return param(format!("Galois exponent {exponent} is not coprime to r = {r}"));
    }
    let e = exponent.rem_euclid(r);
    let exponents = x
        .exponents()
        .iter()
        .map(|&a| ((a as i64 * e) % r) as u32)
        .collect();
    Ok(GroupElement::from_parts_unchecked(
        x.modulus(),
        exponents,
        x.perm().to_vec(),
    ))
}

/// Finds `e` coprime to `r` with `α_e(x)` conjugate (in `G(r,1,n)`) to `x^d`.
///
/// Let `r_i` be the order of `ζ^{c_i}` for the cycle-sums `c_i` of `x` and
/// `L = lcm(r_i)`. Then `e` solves `e ≡ d (mod L)` and `e ≡ 1 (mod q)` for
/// every prime `q | r` with `q ∤ L`. The smallest positive solution is
/// returned.
pub fn find_galois_exponent(x: &GroupElement, d: i64) -> Result<i64> {
    let order = x.order();
    if gcd(d.unsigned_abs(), order) != 1 {
        return param(format!("power {d} is not coprime to the element order {order}"));
    }
    let r = x.modulus() as u64;
    let big_l = x
        .cycle_type()
        .pairs
        .iter()
        .fold(1, |acc, &(_, c)| lcm(acc, r / gcd(c as u64, r)));
    let free_primes: Vec<u64> = prime_divisors(r)
        .into_iter()
        .filter(|q| big_l % q != 0)
        .collect();
    let modulus = big_l * free_primes.iter().product::<u64>();
    let start = d.rem_euclid(big_l as i64) as u64;
    // Step through the residue class of d mod L until the remaining
    // congruences hold; CRT guarantees a hit below `modulus`.
    let e = (0..modulus / big_l)
        .map(|k| start + k * big_l)
        .map(|e| if e == 0 { modulus } else { e })
        .filter(|&e| free_primes.iter().all(|q| e % q == 1 % q))
        .min()
        .expect("CRT system is solvable");
    debug_assert_eq!(gcd(e, r), 1);
    Ok(e as i64)
}
