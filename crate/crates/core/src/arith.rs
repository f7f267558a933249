//! Small integer helpers used throughout.

pub use num_integer::{gcd, lcm};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
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

/// All positive divisors, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn totient(n: u64) -> u64 {
    prime_divisors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Splits `n` as `p^e * m` with `gcd(m, p) = 1`, returning `(e, m)`.
pub fn split_prime_power(mut n: u64, p: u64) -> (u32, u64) {
    let mut e = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        e += 1;
    }
    (e, n)
}

/// True if `n = p^e` for some `e >= 0`.
pub fn is_power_of(n: u64, p: u64) -> bool {
    split_prime_power(n, p).1 == 1
}

/// Multiplicative order of `t` modulo `q`, or `None` when `gcd(t, q) != 1`.
pub fn multiplicative_order(t: u64, q: u64) -> Option<u64> {
    if q == 1 {
        return Some(1);
    }
    if gcd(t, q) != 1 {
        return None;
    }
    let mut x = t % q;
    let mut ord = 1;
    while x != 1 {
        x = x * t % q;
        ord += 1;
    }
    Some(ord)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_divisors() {
        assert!(is_prime(2) && is_prime(7) && !is_prime(1) && !is_prime(9));
        assert_eq!(prime_divisors(84), vec![2, 3, 7]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(totient(9), 6);
        assert_eq!(totient(1), 1);
        assert_eq!(split_prime_power(72, 3), (2, 8));
        assert!(is_power_of(27, 3) && is_power_of(1, 5) && !is_power_of(12, 2));
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(3, 7), Some(6));
        assert_eq!(multiplicative_order(7, 14), None);
    }
}
