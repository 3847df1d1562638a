//! Closed-form bouquet coset averages and the B-family counts.
//!
//! `beta(T, n, k)` is the average number of k-colored matchings on `Z_2n`
//! fixed by an element of the coset `Omega T` of the rotation subgroup.
//! Generic (orientable or nonorientable) embeddings of k-colored bouquets
//! correspond to orientable embeddings of 2k-colored ones, so the generic
//! and nonorientable families substitute `2k` internally.

use num_bigint::BigUint;
use num_traits::One;

use crate::actions::BouquetCoset;
use crate::exactmath::{
    divisor_pairs, exact_div_u64, involution_split, matching_power_sum, matchings, phi,
};

/// Coset average `beta(T, n, k)`; 1 at `n = 0`. Requires `k >= 1`.
pub fn beta(label: BouquetCoset, n: u64, k: u64) -> BigUint {
    assert!(k >= 1, "beta needs at least one color");
    if n == 0 {
        return BigUint::one();
    }
    match label {
        BouquetCoset::I => beta_rotation(n, k),
        BouquetCoset::R => beta_reflection(n, k),
    }
}

/// `beta(I)`: sum over `dg = 2n`, with odd `d` forcing a perfect pairing of
/// the `g` label cosets and even `d` allowing unpaired self-matched cosets.
fn beta_rotation(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for pair in divisor_pairs(2 * n) {
        let (d, g) = (pair.d, pair.g);
        if d % 2 == 1 {
            acc += phi(d)
                * matchings(g, g / 2)
                * BigUint::from(d).pow((g / 2) as u32)
                * BigUint::from(k).pow((g / 2) as u32);
        } else {
            acc += phi(d) * matching_power_sum(g, d, k);
        }
    }
    exact_div_u64(acc, 2 * n).expect("beta(I) is integral")
}

/// `beta(R) = (sum_j m(n,j) 2^j k^(n-j) + sum_j m(n-1,j) 2^j k^(n-j)) / 2`;
/// the two sums may be odd individually, so they are halved together.
fn beta_reflection(n: u64, k: u64) -> BigUint {
    let odd_axes = matching_power_sum(n, 2, k);
    let even_axes = matching_power_sum(n - 1, 2, k) * k;
    exact_div_u64(odd_axes + even_axes, 2).expect("beta(R) is integral")
}

/// The four bouquet counting families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BouquetFamily {
    /// Oriented embeddings of k-colored bouquets (colored chord diagrams up
    /// to rotation).
    B1,
    /// Orientable embeddings (up to rotation and reflection).
    B2,
    /// Generic (orientable or nonorientable) embeddings.
    B3,
    /// Nonorientable embeddings.
    B4,
}

impl BouquetFamily {
    pub const ALL: [BouquetFamily; 4] = [
        BouquetFamily::B1,
        BouquetFamily::B2,
        BouquetFamily::B3,
        BouquetFamily::B4,
    ];

    pub fn token(self) -> &'static str {
        match self {
            BouquetFamily::B1 => "B1",
            BouquetFamily::B2 => "B2",
            BouquetFamily::B3 => "B3",
            BouquetFamily::B4 => "B4",
        }
    }
}

/// `B1..B4`; `B3` and `B4` substitute `2k` into the coset averages.
pub fn bouquet_count(family: BouquetFamily, n: u64, k: u64) -> BigUint {
    match family {
        BouquetFamily::B1 => beta(BouquetCoset::I, n, k),
        BouquetFamily::B2 => {
            let sum = beta(BouquetCoset::I, n, k) + beta(BouquetCoset::R, n, k);
            exact_div_u64(sum, 2).expect("B2 must be integral")
        }
        BouquetFamily::B3 => bouquet_count(BouquetFamily::B2, n, 2 * k),
        BouquetFamily::B4 => {
            let generic = bouquet_count(BouquetFamily::B3, n, k);
            let orientable = bouquet_count(BouquetFamily::B2, n, k);
            assert!(
                generic >= orientable,
                "nonorientable count must be nonnegative"
            );
            generic - orientable
        }
    }
}

/// The reflection split of B1 into reflexible embeddings and chiral pairs.
pub fn bouquet_split(n: u64, k: u64) -> (BigUint, BigUint) {
    let objects = bouquet_count(BouquetFamily::B1, n, k);
    let classes = bouquet_count(BouquetFamily::B2, n, k);
    involution_split(&objects, &classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn beta_values_from_value_tables() {
        assert_eq!(beta(BouquetCoset::I, 5, 1), big(105));
        assert_eq!(beta(BouquetCoset::R, 6, 1), big(206));
        assert_eq!(beta(BouquetCoset::I, 0, 3), big(1));
    }

    #[test]
    fn count_examples() {
        assert_eq!(bouquet_count(BouquetFamily::B1, 6, 1), big(902));
        assert_eq!(bouquet_count(BouquetFamily::B3, 4, 1), big(173));
        assert_eq!(bouquet_count(BouquetFamily::B4, 2, 1), big(4));
        assert_eq!(bouquet_count(BouquetFamily::B2, 8, 1), big(65346));
        // the generic family at one color is the orientable family at two
        assert_eq!(
            bouquet_count(BouquetFamily::B3, 3, 1),
            bouquet_count(BouquetFamily::B2, 3, 2)
        );
        assert_eq!(bouquet_count(BouquetFamily::B3, 3, 1), big(26));
        assert_eq!(bouquet_count(BouquetFamily::B4, 0, 1), big(0));
    }

    #[test]
    fn split_examples() {
        assert_eq!(bouquet_split(5, 1), (big(53), big(26)));
        assert_eq!(bouquet_split(0, 1), (big(1), big(0)));
        let (s, ap) = bouquet_split(4, 2);
        assert_eq!(&s + &ap * 2u32, bouquet_count(BouquetFamily::B1, 4, 2));
        assert_eq!(s + ap, bouquet_count(BouquetFamily::B2, 4, 2));
    }

    #[test]
    fn chiral_pairs_nonnegative_for_uncolored() {
        for n in 4..=40u64 {
            assert!(beta(BouquetCoset::I, n, 1) >= beta(BouquetCoset::R, n, 1), "n={n}");
        }
    }
}
