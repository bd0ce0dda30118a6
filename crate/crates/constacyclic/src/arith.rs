//! Small integer helpers shared across the crate.

/// Prime factors of `n`, ascending, without multiplicity.
pub fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Writes `n` as `p^s` for a prime `p`, if possible.
pub fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let ps = prime_factors(n as u128);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0] as u64;
    let mut s = 0u32;
    let mut m = n;
    while m > 1 {
        m /= p;
        s += 1;
    }
    Some((p, s))
}

pub fn pow_u128(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).expect("overflow in pow_u128");
    }
    acc
}

/// Multiplicative order of `a` modulo `m`, for gcd(a, m) = 1.
pub fn order_mod(a: u64, m: u64) -> u64 {
    assert!(m > 0);
    if m == 1 {
        return 1;
    }
    assert_eq!(num_integer::gcd(a, m), 1, "order_mod needs gcd(a, m) = 1");
    let mut x = a % m;
    let mut k = 1u64;
    while x != 1 {
        x = (x as u128 * a as u128 % m as u128) as u64;
        k += 1;
    }
    k
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}
