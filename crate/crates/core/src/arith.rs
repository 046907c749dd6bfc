//! Small integer helpers used by the coloring and symbolic-family modules:
//! gcd, extended gcd, linear congruence solving, and Euler's totient.

/// Greatest common divisor of two non-negative integers. `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd over signed integers: returns `(g, s, t)` with
/// `s*a + t*b = g` and `g = gcd(|a|, |b|) >= 0`.
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, s, t) = egcd(b, a.rem_euclid(b));
        (g, t, s - (a.div_euclid(b)) * t)
    }
}

/// All solutions `x` in `[0, modulus)` of `a * x ≡ c (mod modulus)`,
/// sorted ascending. Empty when `gcd(a, modulus)` does not divide `c`.
pub fn solve_linear_congruence(a: u64, c: u64, modulus: u64) -> Vec<u64> {
    assert!(modulus >= 1, "modulus must be positive");
    let a = a % modulus;
    let c = c % modulus;
    let g = gcd(a, modulus);
    if g == 0 {
        // a ≡ 0 (mod m): solvable iff c ≡ 0, and then every residue works.
        return if c == 0 { (0..modulus).collect() } else { Vec::new() };
    }
    if c % g != 0 {
        return Vec::new();
    }
    let m_red = modulus / g;
    let (_, s, _) = egcd((a / g) as i64, m_red as i64);
    let x0 = ((s.rem_euclid(m_red as i64)) as u64) * ((c / g) % m_red) % m_red;
    (0..g).map(|t| x0 + t * m_red).collect()
}

/// Euler's totient: the count of integers in `[1, n]` coprime to `n`.
/// `totient(1) = 1`.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient is defined for positive integers");
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
