pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

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

/// `n` with every factor 2 removed (the 2'-part).
pub fn odd_part(n: u64) -> u64 {
    assert!(n >= 1, "odd_part is defined for n >= 1");
    n >> n.trailing_zeros()
}

/// Largest power of 2 dividing `n`.
pub fn two_part(n: u64) -> u64 {
    assert!(n >= 1, "two_part is defined for n >= 1");
    1 << n.trailing_zeros()
}

/// Number of terms in the binary expansion `n = 2^{s_1} + ... + 2^{s_t}`.
pub fn binary_weight(n: u64) -> u32 {
    assert!(n >= 1, "binary_weight is defined for n >= 1");
    n.count_ones()
}

/// Order of `a` in the unit group of Z/mZ, or `None` when `gcd(a, m) != 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m < 2 || gcd(a % m, m) != 1 {
        return None;
    }
    let a = a % m;
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    Some(k)
}
