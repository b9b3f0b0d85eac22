//! Exact integer and rational arithmetic plus the number-theoretic predicates
//! the rest of the crate is built on.
//!
//! Everything here is exact: square and cube tests go through integer Newton
//! iteration (`num-bigint`'s `Roots`), never floating point.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

/// Exact integer square root test: `Some(r)` with `r >= 0` and `r^2 = n`.
pub fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact integer cube root test: `Some(r)` (any sign) with `r^3 = n`.
pub fn is_cube(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    if &r * &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact sixth-power test: `Some(r)` with `r >= 0` and `r^6 = n`.
pub fn is_sixth_power(n: &BigInt) -> Option<BigInt> {
    let r = is_square(n)?;
    is_cube(&r)
}

/// Trial-division factorization, smallest primes first.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() || m.is_one() {
        return out;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            let mut e = 0u32;
            while (&m % &d).is_zero() {
                m /= &d;
                e += 1;
            }
            out.push((d.clone(), e));
        }
        d += 1;
    }
    if !m.is_one() {
        out.push((m, 1));
    }
    out
}

/// Deterministic primality by trial division (inputs in this crate are tiny).
pub fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    assert!(!n.is_zero());
    let mut m = n.clone();
    let mut v = 0;
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    v
}

/// True iff no prime sixth power divides `k`. Rejects `k = 0`.
pub fn sixth_power_free(k: &BigInt) -> Result<bool> {
    if k.is_zero() {
        return Err(Error::ZeroK);
    }
    Ok(factorize(k).iter().all(|(_, e)| *e < 6))
}

/// Strip the largest sixth power: returns `(c / t^6, t)` with `t` maximal.
pub fn sixth_power_reduce(c: &BigInt) -> (BigInt, BigInt) {
    let mut t = BigInt::one();
    for (p, e) in factorize(c) {
        t *= p.pow(e / 6);
    }
    let t6 = t.pow(6u32);
    (c / t6, t)
}

/// Positive cubefree representative of `num/den` modulo rational cubes.
pub fn cubefree_part(num: &BigInt, den: &BigInt) -> BigInt {
    let n = num.abs() * den * den;
    let mut out = BigInt::one();
    for (p, e) in factorize(&n) {
        out *= p.pow(e % 3);
    }
    out
}

/// One ordered factorization `d1 * d2 = N`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorPair {
    pub d1: BigInt,
    pub d2: BigInt,
}

impl DivisorPair {
    pub fn new(d1: impl Into<BigInt>, d2: impl Into<BigInt>) -> Self {
        DivisorPair { d1: d1.into(), d2: d2.into() }
    }

    /// gcd bookkeeping value delta = gcd(d1, d2).
    pub fn delta(&self) -> BigInt {
        self.d1.gcd(&self.d2)
    }
}

/// All ordered pairs `(d1, d2)` with `d1 * d2 = n`, in ascending `d2`.
///
/// With `require_d2_positive` only `d2 > 0` pairs are listed (the descent
/// normalization); otherwise the `d2 < 0` mirror pairs are appended.
pub fn divisor_pairs(n: &BigInt, require_d2_positive: bool) -> Result<Vec<DivisorPair>> {
    if n.is_zero() {
        return Err(Error::ZeroDivisorTarget);
    }
    let mut d2s: Vec<BigInt> = vec![BigInt::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(d2s.len() * (e as usize + 1));
        for d in &d2s {
            let mut q = d.clone();
            next.push(q.clone());
            for _ in 0..e {
                q = &q * &p;
                next.push(q.clone());
            }
        }
        d2s = next;
    }
    d2s.sort();
    let mut out: Vec<DivisorPair> = d2s
        .iter()
        .map(|d2| DivisorPair { d1: n / d2, d2: d2.clone() })
        .collect();
    if !require_d2_positive {
        let mirrored: Vec<DivisorPair> = d2s
            .iter()
            .map(|d2| DivisorPair { d1: -(n / d2), d2: -d2 })
            .collect();
        out.extend(mirrored);
    }
    Ok(out)
}

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
pub fn legendre_symbol(a: &BigInt, p: &BigInt) -> Result<i32> {
    if *p < BigInt::from(3) || !is_prime(p) {
        return Err(Error::NotOddPrime(p.clone()));
    }
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Ok(0);
    }
    let e = (p - 1u32) / 2u32;
    let r = a.modpow(&e, p);
    if r.is_one() {
        Ok(1)
    } else {
        Ok(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent integer square root by bisection; the oracle for frozen values.
    fn isqrt_bisect(n: &BigInt) -> BigInt {
        let mut lo = BigInt::zero();
        let mut hi = n.clone() + 1;
        while &lo + 1u32 < hi {
            let mid: BigInt = (&lo + &hi) / 2;
            if &mid * &mid <= *n {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    fn icbrt_bisect(n: &BigInt) -> BigInt {
        let neg = n.is_negative();
        let m = n.abs();
        let mut lo = BigInt::zero();
        let mut hi = m.clone() + 1;
        while &lo + 1u32 < hi {
            let mid: BigInt = (&lo + &hi) / 2;
            if mid.pow(3u32) <= m {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if neg {
            -lo
        } else {
            lo
        }
    }

    #[test]
    fn square_root_of_table_z_value() {
        // z^2 appearing in the k = -47 record point
        let n = BigInt::from(62_476_502_209u64);
        assert_eq!(is_square(&n), Some(BigInt::from(249_953)));
        assert_eq!(isqrt_bisect(&n), BigInt::from(249_953));
    }

    #[test]
    fn square_root_edge_cases() {
        assert_eq!(is_square(&BigInt::zero()), Some(BigInt::zero()));
        // 63^6 is a perfect square with root 63^3 = 250047 (bisection oracle agrees)
        let n = BigInt::from(63u32).pow(6u32);
        assert_eq!(n, BigInt::from(62_523_502_209u64));
        assert_eq!(is_square(&n), Some(BigInt::from(250_047)));
        assert_eq!(isqrt_bisect(&n), BigInt::from(250_047));
        assert_eq!(is_square(&BigInt::from(-4)), None);
    }

    #[test]
    fn cube_root_cases() {
        assert_eq!(is_cube(&BigInt::from(-27)), Some(BigInt::from(-3)));
        assert_eq!(is_cube(&BigInt::from(16)), None);
        assert_eq!(is_cube(&BigInt::from(250_047)), Some(BigInt::from(63)));
        assert_eq!(icbrt_bisect(&BigInt::from(250_047)), BigInt::from(63));
    }

    #[test]
    fn sixth_power_free_cases() {
        assert!(!sixth_power_free(&BigInt::from(64)).unwrap());
        assert!(sixth_power_free(&BigInt::from(-47)).unwrap());
        assert!(!sixth_power_free(&BigInt::from(192)).unwrap()); // 2^6 * 3
        assert!(matches!(sixth_power_free(&BigInt::zero()), Err(Error::ZeroK)));
    }

    #[test]
    fn divisor_pairs_ordering() {
        let pairs = divisor_pairs(&BigInt::from(35), true).unwrap();
        let want: Vec<DivisorPair> = [(35, 1), (7, 5), (5, 7), (1, 35)]
            .iter()
            .map(|&(a, b)| DivisorPair::new(a, b))
            .collect();
        assert_eq!(pairs, want);

        assert_eq!(divisor_pairs(&BigInt::one(), true).unwrap(), vec![DivisorPair::new(1, 1)]);

        let pairs = divisor_pairs(&BigInt::from(-11), true).unwrap();
        assert_eq!(pairs, vec![DivisorPair::new(-11, 1), DivisorPair::new(-1, 11)]);

        assert!(divisor_pairs(&BigInt::zero(), true).is_err());
    }

    #[test]
    fn divisor_pairs_count_matches_divisor_function() {
        // d(|N|) pairs for each N, cross-checked against plain trial division
        for n in 1i64..=120 {
            for n in [n, -n] {
                let count = divisor_pairs(&BigInt::from(n), true).unwrap().len();
                let brute = (1..=n.abs()).filter(|d| n.abs() % d == 0).count();
                assert_eq!(count, brute, "N = {n}");
            }
        }
    }

    #[test]
    fn legendre_matches_exhaustive_squares() {
        assert_eq!(legendre_symbol(&BigInt::one(), &BigInt::from(7)).unwrap(), 1);
        assert_eq!(legendre_symbol(&BigInt::from(3), &BigInt::from(7)).unwrap(), -1);
        // used to reject d1 divisible by 5 when d2 = 1 in the two-case sieve
        assert_eq!(legendre_symbol(&BigInt::from(3), &BigInt::from(5)).unwrap(), -1);
        assert!(legendre_symbol(&BigInt::one(), &BigInt::from(9)).is_err());
        assert!(legendre_symbol(&BigInt::one(), &BigInt::from(2)).is_err());

        for p in [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            let squares: std::collections::HashSet<i64> =
                (1..p).map(|x| x * x % p).collect();
            for a in 0..p {
                let want = if a == 0 {
                    0
                } else if squares.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(
                    legendre_symbol(&BigInt::from(a), &BigInt::from(p)).unwrap(),
                    want,
                    "({a}/{p})"
                );
            }
        }
    }

    #[test]
    fn sixth_power_reduce_strips_content() {
        let (red, t) = sixth_power_reduce(&BigInt::from(-4_000_000));
        assert_eq!((red, t), (BigInt::from(-4), BigInt::from(10)));
        let (red, t) = sixth_power_reduce(&BigInt::from(-2197));
        assert_eq!((red, t), (BigInt::from(-2197), BigInt::one()));
    }

    #[test]
    fn cubefree_part_of_rationals() {
        // 43/2 ~ 43*4 = 172 modulo cubes
        assert_eq!(cubefree_part(&BigInt::from(43), &BigInt::from(2)), BigInt::from(172));
        assert_eq!(cubefree_part(&BigInt::from(27 * 140), &BigInt::one()), BigInt::from(140));
    }

    proptest::proptest! {
        #[test]
        fn square_detection_roundtrip(n in 0u64..1_000_000_000_000_000_000u64) {
            let n = BigInt::from(n);
            let sq = &n * &n;
            proptest::prop_assert_eq!(is_square(&sq), Some(n.clone()));
            // n^2 + 1 is a square only for n = 0
            let plus = &sq + 1u32;
            let expect = if n.is_zero() { Some(BigInt::one()) } else { None };
            proptest::prop_assert_eq!(is_square(&plus), expect);
        }

        #[test]
        fn rational_canonical_form(num in -100_000i64..100_000, den in 1i64..100_000) {
            let r = num_rational::BigRational::new(BigInt::from(num), BigInt::from(den));
            proptest::prop_assert!(r.denom() > &BigInt::zero());
            proptest::prop_assert!(r.numer().gcd(r.denom()).is_one() || r.numer().is_zero());
        }
    }
}
