//! Binomial coefficients modulo a prime.

/// binom(a, b) mod p, as a product of digit binomials in base p.
pub fn lucas_binom(mut a: u64, mut b: u64, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc: u64 = 1;
    while b > 0 {
        let (ai, bi) = (a % p64, b % p64);
        if bi > ai {
            return 0;
        }
        acc = acc * small_binom(ai, bi, p64) % p64;
        a /= p64;
        b /= p64;
    }
    acc as u32
}

fn small_binom(a: u64, b: u64, p: u64) -> u64 {
    // a < p, so the Pascal row never needs a modular inverse
    let mut row = vec![0u64; b as usize + 1];
    row[0] = 1;
    for i in 1..=a as usize {
        for j in (1..=i.min(b as usize)).rev() {
            row[j] = (row[j] + row[j - 1]) % p;
        }
    }
    row[b as usize]
}
