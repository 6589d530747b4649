//! Small integer helpers used by the group constructors and the theorem checks.

use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in ascending prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Returns `(p, k)` when `n = p^k` with `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn divisor_count(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(_, e)| u64::from(e) + 1)
        .product()
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Smallest `c >= 0` with `c = a mod m` and `c = b mod n`, for coprime `m` and `n`.
pub fn crt_pair(a: u64, m: u64, b: u64, n: u64) -> Option<u64> {
    let eg = (m as i128).extended_gcd(&(n as i128));
    if eg.gcd != 1 {
        return None;
    }
    let modulus = m as i128 * n as i128;
    // a + m * t = b (mod n)  =>  t = (b - a) * m^{-1} (mod n)
    let m_inv = eg.x.rem_euclid(n as i128);
    let t = ((b as i128 - a as i128) * m_inv).rem_euclid(n as i128);
    let c = (a as i128 + m as i128 * t).rem_euclid(modulus);
    Some(c as u64)
}
