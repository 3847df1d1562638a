//! Exact integer arithmetic and the number-theoretic helpers used by every
//! closed-form formula.
//!
//! Everything here returns [`BigUint`] and never rounds: divisions go through
//! [`exact_div`], which fails loudly when the quotient would not be a whole
//! number.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::Error;

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Euler's totient: the number of `1 <= k <= n` coprime to `n`.
///
/// Computed by trial-division factorization. Panics if `n == 0`.
pub fn phi(n: u64) -> BigUint {
    assert!(n > 0, "phi is undefined at 0");
    let mut remaining = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= remaining {
        if remaining % p == 0 {
            while remaining % p == 0 {
                remaining /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if remaining > 1 {
        result -= result / remaining;
    }
    BigUint::from(result)
}

/// `n!`
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Double factorial `m!! = m (m-2) (m-4) ...`, with `(-1)!! = 0!! = 1`.
///
/// Panics for `m < -1`.
pub fn double_factorial(m: i64) -> BigUint {
    assert!(m >= -1, "double factorial is undefined below -1");
    let mut acc = BigUint::one();
    let mut i = m;
    while i > 1 {
        acc *= i as u64;
        i -= 2;
    }
    acc
}

/// Binomial coefficient `C(n, k)`; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `m(n, j)`: the number of `j`-matchings (sets of `j` disjoint pairs) of an
/// `n`-set. Equals `C(n, 2j) (2j-1)!!`, and 0 when `2j > n`.
pub fn matchings(n: u64, j: u64) -> BigUint {
    if 2 * j > n {
        return BigUint::zero();
    }
    binomial(n, 2 * j) * double_factorial(2 * j as i64 - 1)
}

/// Iterator over `(j, m(n, j))` for `j = 0 ..= n/2`, computed by the exact
/// recurrence `m(n, j+1) = m(n, j) (n-2j)(n-2j-1) / (2(j+1))`.
///
/// The closed-form [`matchings`] recomputes factorials per call; the sums in
/// the coset-average formulas run over every `j`, so they use this instead.
pub fn matching_numbers(n: u64) -> impl Iterator<Item = (u64, BigUint)> {
    let mut j = 0u64;
    let mut current = Some(BigUint::one());
    std::iter::from_fn(move || {
        let value = current.take()?;
        let this_j = j;
        if 2 * (j + 1) <= n {
            let next = &value * ((n - 2 * j) * (n - 2 * j - 1));
            current = Some(exact_div(next, &BigUint::from(2 * (j + 1))).expect(
                "matching-number recurrence divides exactly",
            ));
        }
        j += 1;
        Some((this_j, value))
    })
}

/// `sum_j m(g, j) d^j k^(g-j)` over `j = 0 ..= g/2`: the matching-weighted
/// power sum at the heart of several coset averages.
pub(crate) fn matching_power_sum(g: u64, d: u64, k: u64) -> BigUint {
    let mut k_powers = Vec::with_capacity(g as usize + 1);
    k_powers.push(BigUint::one());
    for _ in 0..g {
        let next = k_powers.last().unwrap() * k;
        k_powers.push(next);
    }
    let big_d = BigUint::from(d);
    let mut d_pow = BigUint::one();
    let mut acc = BigUint::zero();
    for (j, m_value) in matching_numbers(g) {
        if j > 0 {
            d_pow *= &big_d;
        }
        acc += m_value * &d_pow * &k_powers[(g - j) as usize];
    }
    acc
}

/// `sr(l, m)`: the number of ways to choose the cycles of a square root
/// above `m` cycles of length `l`.
///
/// Three cases: 0 when `l` is even and `m` odd; `m(m, m/2) l^(m/2)` when both
/// are even; `sum_j m(m, j) l^j` when `l` is odd. `sr(l, 0) = 1`.
pub fn sqrt_count(l: u64, m: u64) -> BigUint {
    assert!(l >= 1, "cycle length must be positive");
    if l % 2 == 0 {
        if m % 2 == 1 {
            BigUint::zero()
        } else {
            matchings(m, m / 2) * BigUint::from(l).pow((m / 2) as u32)
        }
    } else {
        let big_l = BigUint::from(l);
        let mut acc = BigUint::zero();
        let mut l_pow = BigUint::one();
        for (j, m_value) in matching_numbers(m) {
            if j > 0 {
                l_pow *= &big_l;
            }
            acc += m_value * &l_pow;
        }
        acc
    }
}

/// The number of permutations `tau` with `tau^2 = alpha`, where `alpha` is
/// given as an image sequence (`alpha[i]` is the image of `i`).
///
/// Computes the cycle type `(a_l)` of `alpha` and returns the product of
/// `sr(l, a_l)` over all cycle lengths.
pub fn sqrt_count_of(alpha: &[usize]) -> BigUint {
    let n = alpha.len();
    let mut cycles_of_len = vec![0u64; n + 1];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = alpha[i];
            len += 1;
        }
        cycles_of_len[len] += 1;
    }
    let mut acc = BigUint::one();
    for (len, &count) in cycles_of_len.iter().enumerate().skip(1) {
        if count > 0 {
            acc *= sqrt_count(len as u64, count);
        }
    }
    acc
}

/// A factorization `d * g = n` used as a summation index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorPair {
    pub d: u64,
    pub g: u64,
}

/// All pairs `(d, n/d)` for divisors `d` of `n`, ascending in `d`.
pub fn divisor_pairs(n: u64) -> Vec<DivisorPair> {
    assert!(n >= 1, "divisor pairs need n >= 1");
    let mut pairs = Vec::new();
    for d in 1..=n {
        if d * d > n {
            break;
        }
        if n % d == 0 {
            pairs.push(DivisorPair { d, g: n / d });
        }
    }
    let mut upper: Vec<DivisorPair> = pairs
        .iter()
        .rev()
        .filter(|p| p.d != p.g)
        .map(|p| DivisorPair { d: p.g, g: p.d })
        .collect();
    pairs.append(&mut upper);
    pairs
}

/// Checked exact division: `numerator / divisor` when the remainder is zero,
/// a distinct error otherwise.
pub fn exact_div(numerator: BigUint, divisor: &BigUint) -> Result<BigUint, Error> {
    use num_integer::Integer;
    if divisor.is_zero() {
        return Err(Error::InexactDivision {
            numerator,
            divisor: divisor.clone(),
        });
    }
    let (quotient, remainder) = numerator.div_rem(divisor);
    if remainder.is_zero() {
        Ok(quotient)
    } else {
        Err(Error::InexactDivision {
            numerator: &quotient * divisor + remainder,
            divisor: divisor.clone(),
        })
    }
}

/// [`exact_div`] with a machine-word divisor.
pub fn exact_div_u64(numerator: BigUint, divisor: u64) -> Result<BigUint, Error> {
    exact_div(numerator, &BigUint::from(divisor))
}

/// The symmetric / asymmetric-pair decomposition of a count under an
/// involution: given the number of objects and of involution classes,
/// returns `(2 classes - objects, objects - classes)`.
///
/// Panics if either difference would be negative; both quantities are counts.
pub fn involution_split(objects: &BigUint, classes: &BigUint) -> (BigUint, BigUint) {
    let doubled = classes * 2u32;
    assert!(
        doubled >= *objects && *objects >= *classes,
        "involution split must be nonnegative (objects {objects}, classes {classes})"
    );
    (doubled - objects, objects - classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn phi_small_values() {
        assert_eq!(phi(1), big(1));
        assert_eq!(phi(6), big(2));
        // direct gcd scan for 12
        let scan = (1..=12u64).filter(|k| gcd(*k, 12) == 1).count() as u64;
        assert_eq!(phi(12), big(scan));
        assert_eq!(scan, 4);
    }

    #[test]
    #[should_panic]
    fn phi_rejects_zero() {
        phi(0);
    }

    #[test]
    fn phi_matches_gcd_scan() {
        for n in 1..=500u64 {
            let scan = (1..=n).filter(|k| gcd(*k, n) == 1).count() as u64;
            assert_eq!(phi(n), big(scan), "phi({n})");
        }
    }

    #[test]
    fn matchings_examples() {
        assert_eq!(matchings(5, 0), big(1));
        assert_eq!(matchings(4, 2), big(3));
        assert_eq!(matchings(5, 2), big(15));
        assert_eq!(matchings(5, 3), big(0));
    }

    #[test]
    fn matchings_factorial_identity() {
        // m(n,j) (n-2j)! 2^j j! = n! for 0 <= 2j <= n <= 30
        for n in 0..=30u64 {
            for j in 0..=(n / 2) {
                let lhs = matchings(n, j)
                    * factorial(n - 2 * j)
                    * BigUint::from(2u64).pow(j as u32)
                    * factorial(j);
                assert_eq!(lhs, factorial(n), "n={n} j={j}");
            }
        }
    }

    /// Brute-force enumeration of all matchings of an n-set: decide the fate
    /// of the smallest free point (single, or paired with each larger one).
    fn count_matchings_brute(n: usize) -> Vec<u64> {
        fn go(free: &mut Vec<usize>, pairs: usize, counts: &mut Vec<u64>) {
            if free.is_empty() {
                counts[pairs] += 1;
                return;
            }
            let a = free.remove(0);
            go(free, pairs, counts);
            for idx in 0..free.len() {
                let b = free.remove(idx);
                go(free, pairs + 1, counts);
                free.insert(idx, b);
            }
            free.insert(0, a);
        }
        let mut counts = vec![0u64; n / 2 + 1];
        let mut free: Vec<usize> = (0..n).collect();
        go(&mut free, 0, &mut counts);
        counts
    }

    #[test]
    fn matchings_against_enumeration() {
        for n in 0..=10usize {
            let brute = count_matchings_brute(n);
            for (j, &count) in brute.iter().enumerate() {
                assert_eq!(matchings(n as u64, j as u64), big(count), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn matching_numbers_match_closed_form() {
        for n in 0..=40u64 {
            let from_iter: Vec<(u64, BigUint)> = matching_numbers(n).collect();
            assert_eq!(from_iter.len() as u64, n / 2 + 1);
            for (j, value) in from_iter {
                assert_eq!(value, matchings(n, j), "n={n} j={j}");
            }
        }
    }

    /// All image sequences of length n.
    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for shorter in all_perms(n - 1) {
            for pos in 0..n {
                let mut p: Vec<usize> = shorter.iter().map(|&x| if x >= pos { x + 1 } else { x }).collect();
                p.insert(0, pos);
                out.push(p);
            }
        }
        out
    }

    fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
        b.iter().map(|&i| a[i]).collect()
    }

    #[test]
    fn sqrt_count_examples() {
        assert_eq!(sqrt_count(2, 1), big(0));
        assert_eq!(sqrt_count(2, 2), big(2));
        assert_eq!(sqrt_count(1, 3), big(4));
        assert_eq!(sqrt_count(7, 0), big(1));
    }

    #[test]
    fn sqrt_count_of_examples() {
        assert_eq!(sqrt_count_of(&[0]), big(1));
        assert_eq!(sqrt_count_of(&[1, 2, 3, 0]), big(0));
        assert_eq!(sqrt_count_of(&[1, 0, 3, 2]), big(2));
    }

    #[test]
    fn sqrt_count_of_matches_brute_force() {
        for m in 0..=5usize {
            let perms = all_perms(m);
            for alpha in &perms {
                let brute = perms
                    .iter()
                    .filter(|tau| compose(tau, tau) == *alpha)
                    .count() as u64;
                assert_eq!(sqrt_count_of(alpha), big(brute), "alpha={alpha:?}");
            }
        }
    }

    #[test]
    fn divisor_pairs_examples() {
        let ds = |n: u64| divisor_pairs(n).iter().map(|p| (p.d, p.g)).collect::<Vec<_>>();
        assert_eq!(ds(1), vec![(1, 1)]);
        assert_eq!(ds(6), vec![(1, 6), (2, 3), (3, 2), (6, 1)]);
        assert_eq!(ds(12).len(), 6);
        for p in divisor_pairs(12) {
            assert_eq!(p.d * p.g, 12);
        }
    }

    #[test]
    fn exact_div_checks_remainder() {
        assert_eq!(exact_div_u64(big(12), 4).unwrap(), big(3));
        let err = exact_div_u64(big(13), 4).unwrap_err();
        assert_eq!(
            err,
            Error::InexactDivision {
                numerator: big(13),
                divisor: big(4)
            }
        );
        assert!(exact_div_u64(big(5), 0).is_err());
    }

    #[test]
    fn involution_split_algebra() {
        let (s, ap) = involution_split(&big(10), &big(7));
        assert_eq!((s, ap), (big(4), big(3)));
    }

    #[test]
    fn double_factorial_convention() {
        assert_eq!(double_factorial(-1), big(1));
        assert_eq!(double_factorial(0), big(1));
        assert_eq!(double_factorial(5), big(15));
        assert_eq!(double_factorial(6), big(48));
    }

    proptest! {
        #[test]
        fn phi_multiplicative_on_coprime(a in 1u64..100, b in 1u64..100) {
            prop_assume!(gcd(a, b) == 1);
            prop_assert_eq!(phi(a * b), phi(a) * phi(b));
        }

        #[test]
        fn binomial_symmetry(n in 0u64..60, k in 0u64..60) {
            prop_assume!(k <= n);
            prop_assert_eq!(binomial(n, k), binomial(n, n - k));
        }
    }
}
