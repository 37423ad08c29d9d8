//! Fixed-width modular arithmetic backing the scanner's fast paths.
//!
//! Moduli below 2^63 live in single machine words with u128 intermediate
//! products. Moduli in [2^63, 2^126) live in double-width words: products
//! are formed by a 128x128 -> 256 bit widening multiply and reduced by
//! schoolbook division with per-digit quotient estimation (normalized
//! two-limb divisor, at most two corrections per digit). Anything at or
//! above 2^126 is outside the fast paths.

/// Exclusive upper bound for single-word moduli.
pub(crate) const SINGLE_WIDTH_BOUND: u128 = 1 << 63;
/// Exclusive upper bound for double-width moduli.
pub(crate) const DOUBLE_WIDTH_BOUND: u128 = 1 << 126;

/// p^m when it fits under the double-width bound.
pub(crate) fn checked_prime_power(p: u64, m: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..m {
        acc = acc.checked_mul(p as u128)?;
        if acc >= DOUBLE_WIDTH_BOUND {
            return None;
        }
    }
    Some(acc)
}

/// a * b mod m for any u64 modulus m >= 1.
pub(crate) fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// base^exp mod m by binary exponentiation.
pub(crate) fn pow_mod_u64(base: u64, exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc: u64 = 1;
    let mut sq = base % m;
    let mut e = exp;
    while e != 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, sq, m);
        }
        sq = mul_mod_u64(sq, sq, m);
        e >>= 1;
    }
    acc
}

/// Inverse of a mod m via extended Euclid; None when gcd(a, m) != 1.
pub(crate) fn inv_mod_u64(a: u64, m: u64) -> Option<u64> {
    let inv = inv_mod_u128(a as u128, m as u128)?;
    Some(inv as u64)
}

/// Inverse of a mod m for m < 2^126.
///
/// All Bezout intermediates are bounded by m, so i128 suffices.
pub(crate) fn inv_mod_u128(a: u128, m: u128) -> Option<u128> {
    debug_assert!(m >= 2 && m < DOUBLE_WIDTH_BOUND);
    let (mut r_prev, mut r) = ((a % m) as i128, m as i128);
    let (mut s_prev, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = r_prev / r;
        (r_prev, r) = (r, r_prev - q * r);
        (s_prev, s) = (s, s_prev - q * s);
    }
    if r_prev != 1 {
        return None;
    }
    let mut inv = s_prev % m as i128;
    if inv < 0 {
        inv += m as i128;
    }
    Some(inv as u128)
}

/// a * b mod m for m < 2^126 and a, b < m.
pub(crate) fn mul_mod_u128(a: u128, b: u128, m: u128) -> u128 {
    debug_assert!(a < m && b < m && m < DOUBLE_WIDTH_BOUND);
    if m <= u64::MAX as u128 {
        // factors fit one limb each; the product fits u128 natively
        return (a * b) % m;
    }
    let (hi, lo) = widening_mul_u128(a, b);
    rem_256_by_128(hi, lo, m)
}

/// Full 256-bit product of two u128 values, as (high, low) halves.
fn widening_mul_u128(a: u128, b: u128) -> (u128, u128) {
    const LO: u128 = (1 << 64) - 1;
    let (a1, a0) = (a >> 64, a & LO);
    let (b1, b0) = (b >> 64, b & LO);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & LO) + (p10 & LO);
    let lo = (p00 & LO) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

/// Remainder of the 256-bit value (hi, lo) by m, for 2^64 <= m < 2^126
/// and (hi, lo) < m^2.
///
/// Schoolbook division with a normalized two-limb divisor: each quotient
/// digit is estimated from the top limbs and corrected at most twice, per
/// the classical analysis.
fn rem_256_by_128(hi: u128, lo: u128, m: u128) -> u128 {
    const BETA: u128 = 1 << 64;
    debug_assert!(m >> 64 != 0);
    let s = m.leading_zeros(); // in [2, 63] for m in [2^64, 2^126)
    let vm = m << s;
    let v = [vm as u64, (vm >> 64) as u64]; // v[1] has its top bit set
    let n_hi = (hi << s) | (lo >> (128 - s));
    let n_lo = lo << s;
    let mut u = [
        n_lo as u64,
        (n_lo >> 64) as u64,
        n_hi as u64,
        (n_hi >> 64) as u64,
        (hi >> (128 - s)) as u64,
    ];

    for j in (0..=2).rev() {
        let top = ((u[j + 2] as u128) << 64) | u[j + 1] as u128;
        let mut qhat = top / v[1] as u128;
        let mut rhat = top % v[1] as u128;
        while qhat >= BETA || qhat * v[0] as u128 > (rhat << 64 | u[j] as u128) {
            qhat -= 1;
            rhat += v[1] as u128;
            if rhat >= BETA {
                break;
            }
        }

        // multiply-and-subtract qhat * v from the three-limb window at j
        let mut borrow: i128 = 0;
        for i in 0..2 {
            let prod = qhat * v[i] as u128;
            let t = u[i + j] as i128 - borrow - (prod as u64) as i128;
            u[i + j] = t as u64;
            borrow = (prod >> 64) as i128 - (t >> 64);
        }
        let t = u[j + 2] as i128 - borrow;
        u[j + 2] = t as u64;

        if t < 0 {
            // the estimate was one too large; add the divisor back
            let mut carry: u128 = 0;
            for i in 0..2 {
                let sum = u[i + j] as u128 + v[i] as u128 + carry;
                u[i + j] = sum as u64;
                carry = sum >> 64;
            }
            u[j + 2] = (u[j + 2] as u128).wrapping_add(carry) as u64;
        }
    }

    let rem = ((u[1] as u128) << 64) | u[0] as u128;
    rem >> s
}

/// Deterministic Miller-Rabin, complete for all u64 inputs with the fixed
/// twelve-prime base set.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let r = (n - 1).trailing_zeros();
    let d = (n - 1) >> r;
    'bases: for &b in &BASES {
        let mut x = pow_mod_u64(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}
