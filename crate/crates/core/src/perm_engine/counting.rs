//! Closed-form cycle statistics of the two-slot exchange `π(d1, d2)`.
//!
//! Away from the fixed label `N−1`, the exchange acts as `L ↦ d1·L mod (N−1)`,
//! whose inverse is multiplication by `d2`. Cycle lengths are therefore orbit
//! sizes of multiplication by `d2` in `Z/(N−1)`.

use crate::perm_engine::cycles::gcd;

/// Möbius function; `mobius(0)` is defined as 0.
pub fn mobius(n: u64) -> i32 {
    if n == 0 {
        return 0;
    }
    let mut rem = n;
    let mut sign = 1;
    let mut p = 2u64;
    while p * p <= rem {
        if rem % p == 0 {
            rem /= p;
            if rem % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if rem > 1 {
        sign = -sign;
    }
    sign
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// `l* = min{p ≥ 1 : d2^p ≡ 1 (mod N−1)}`; every cycle length divides it.
pub fn l_star(d1: u64, d2: u64) -> u64 {
    assert!(d1 >= 2 && d2 >= 2, "subsystem dimensions must be at least 2");
    let m = d1 * d2 - 1;
    assert_eq!(gcd(d2, m), 1, "d2 is a unit modulo N-1");
    let mut p = 1;
    let mut x = d2 % m;
    while x != 1 % m {
        x = (x as u128 * d2 as u128 % m as u128) as u64;
        p += 1;
    }
    p
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Number of cycles of length `l` in `π(d1, d2)` via Möbius inversion.
pub fn cycle_count(l: u64, d1: u64, d2: u64) -> u64 {
    let m = d1 * d2 - 1;
    // Points of Z/m fixed by multiplication with d2^e.
    let fixed = |e: u64| -> u64 {
        let r = (pow_mod(d2, e, m) + m - 1) % m;
        gcd(r, m)
    };
    if l == 0 {
        return 0;
    }
    if l == 1 {
        return fixed(1) + 1;
    }
    if l_star(d1, d2) % l != 0 {
        return 0;
    }
    let total: i128 = divisors(l)
        .into_iter()
        .map(|e| mobius(l / e) as i128 * fixed(e) as i128)
        .sum();
    debug_assert!(total >= 0 && total % l as i128 == 0);
    (total / l as i128) as u64
}
