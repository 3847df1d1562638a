//! Closed-form directed-bouquet coset averages and the A-family counts.
//!
//! `alpha(T, n, k)` is the average number of signed k-colored matchings
//! fixed by an element of the coset `Omega T`, where the group is generated
//! by rotation `S`, reflection `R`, and the sign flip (arc reversal) `F`.
//! `alpha(R)` and `alpha(F)` vanish for even `n >= 2`. As with bouquets,
//! the generic and nonorientable families substitute `2k`.

use num_bigint::BigUint;
use num_traits::One;

use crate::actions::DirCoset;
use crate::exactmath::{
    divisor_pairs, exact_div_u64, factorial, involution_split, matching_power_sum, phi,
};

/// Coset average `alpha(T, n, k)`; 1 at `n = 0`. Requires `k >= 1`.
pub fn alpha(label: DirCoset, n: u64, k: u64) -> BigUint {
    assert!(k >= 1, "alpha needs at least one color");
    if n == 0 {
        return BigUint::one();
    }
    match label {
        DirCoset::I => alpha_rotation(n, k),
        DirCoset::R => alpha_reflection(n, k),
        DirCoset::F => alpha_reversal(n, k),
        DirCoset::RF => alpha_reflection_reversal(n, k),
    }
}

/// `alpha(I) = (1/n) sum_(dg=n) phi(d) g! d^g k^g`.
fn alpha_rotation(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for pair in divisor_pairs(n) {
        let (d, g) = (pair.d, pair.g);
        acc += phi(d)
            * factorial(g)
            * BigUint::from(d).pow(g as u32)
            * BigUint::from(k).pow(g as u32);
    }
    exact_div_u64(acc, n).expect("alpha(I) is integral")
}

/// `alpha(R)`: 0 for even `n`, else `((n-1)/2)! 2^((n-1)/2) k^((n+1)/2)`.
fn alpha_reflection(n: u64, k: u64) -> BigUint {
    if n % 2 == 0 {
        BigUint::ZERO
    } else {
        factorial((n - 1) / 2)
            * BigUint::from(2u64).pow(((n - 1) / 2) as u32)
            * BigUint::from(k).pow(((n + 1) / 2) as u32)
    }
}

/// `alpha(F)`: 0 for even `n`, else
/// `(1/n) sum_(dg=n, g odd) phi(2d) sum_j m(g,j) d^j k^(g-j)`.
///
/// The divisor pairs are filtered on `g` odd, exactly as the condition is
/// stated; parity of `d` plays no role.
fn alpha_reversal(n: u64, k: u64) -> BigUint {
    if n % 2 == 0 {
        return BigUint::ZERO;
    }
    let mut acc = BigUint::ZERO;
    for pair in divisor_pairs(n) {
        if pair.g % 2 == 1 {
            acc += phi(2 * pair.d) * matching_power_sum(pair.g, pair.d, k);
        }
    }
    exact_div_u64(acc, n).expect("alpha(F) is integral")
}

/// `alpha(RF) = sum_j m(n,j) k^(n-j)`: at one color this is the number of
/// involutions of an n-set.
fn alpha_reflection_reversal(n: u64, k: u64) -> BigUint {
    matching_power_sum(n, 1, k)
}

/// The nine directed-bouquet counting families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DirFamily {
    /// Oriented k-colored directed embeddings of directed bouquets.
    A1,
    /// Orientable directed embeddings.
    A2,
    /// Arc-reversal classes of oriented directed embeddings.
    A3,
    /// Arc-reversal classes of orientable directed embeddings.
    A4,
    /// Classes under simultaneous reflection and arc reversal.
    A5,
    /// Generic (orientable or nonorientable) directed embeddings.
    A6,
    /// Nonorientable directed embeddings.
    A7,
    /// Arc-reversal classes of generic directed embeddings.
    A8,
    /// Arc-reversal classes of nonorientable directed embeddings.
    A9,
}

impl DirFamily {
    pub const ALL: [DirFamily; 9] = [
        DirFamily::A1,
        DirFamily::A2,
        DirFamily::A3,
        DirFamily::A4,
        DirFamily::A5,
        DirFamily::A6,
        DirFamily::A7,
        DirFamily::A8,
        DirFamily::A9,
    ];

    pub fn token(self) -> &'static str {
        match self {
            DirFamily::A1 => "A1",
            DirFamily::A2 => "A2",
            DirFamily::A3 => "A3",
            DirFamily::A4 => "A4",
            DirFamily::A5 => "A5",
            DirFamily::A6 => "A6",
            DirFamily::A7 => "A7",
            DirFamily::A8 => "A8",
            DirFamily::A9 => "A9",
        }
    }
}

/// `A1..A9`; `A6`-`A9` substitute `2k` into the coset averages.
pub fn dirbouquet_count(family: DirFamily, n: u64, k: u64) -> BigUint {
    use DirCoset::*;
    let a = |label| alpha(label, n, k);
    match family {
        DirFamily::A1 => a(I),
        DirFamily::A2 => exact_div_u64(a(I) + a(R), 2).expect("A2 must be integral"),
        DirFamily::A3 => exact_div_u64(a(I) + a(F), 2).expect("A3 must be integral"),
        DirFamily::A4 => {
            exact_div_u64(a(I) + a(R) + a(F) + a(RF), 4).expect("A4 must be integral")
        }
        DirFamily::A5 => exact_div_u64(a(I) + a(RF), 2).expect("A5 must be integral"),
        DirFamily::A6 => dirbouquet_count(DirFamily::A2, n, 2 * k),
        DirFamily::A7 => {
            let generic = dirbouquet_count(DirFamily::A6, n, k);
            let orientable = dirbouquet_count(DirFamily::A2, n, k);
            assert!(generic >= orientable, "A7 must be nonnegative");
            generic - orientable
        }
        DirFamily::A8 => dirbouquet_count(DirFamily::A4, n, 2 * k),
        DirFamily::A9 => {
            let generic = dirbouquet_count(DirFamily::A8, n, k);
            let orientable = dirbouquet_count(DirFamily::A4, n, k);
            assert!(generic >= orientable, "A9 must be nonnegative");
            generic - orientable
        }
    }
}

/// The involution pairs among the A families: the first member counts
/// objects, the second counts classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DirPair {
    /// Reflection on oriented directed embeddings.
    A1A2,
    /// Reflection on arc-reversal classes.
    A3A4,
    /// Arc reversal on oriented directed embeddings.
    A1A3,
    /// Arc reversal on orientable directed embeddings.
    A2A4,
    /// Arc reversal on generic directed embeddings.
    A6A8,
    /// Arc reversal on nonorientable directed embeddings.
    A7A9,
    /// Simultaneous reflection and arc reversal on oriented embeddings.
    A1A5,
    /// Reflection (equivalently arc reversal) on the combined classes.
    A5A4,
}

impl DirPair {
    pub const ALL: [DirPair; 8] = [
        DirPair::A1A2,
        DirPair::A3A4,
        DirPair::A1A3,
        DirPair::A2A4,
        DirPair::A6A8,
        DirPair::A7A9,
        DirPair::A1A5,
        DirPair::A5A4,
    ];

    /// `(objects family, classes family)`.
    pub fn members(self) -> (DirFamily, DirFamily) {
        use DirFamily::*;
        match self {
            DirPair::A1A2 => (A1, A2),
            DirPair::A3A4 => (A3, A4),
            DirPair::A1A3 => (A1, A3),
            DirPair::A2A4 => (A2, A4),
            DirPair::A6A8 => (A6, A8),
            DirPair::A7A9 => (A7, A9),
            DirPair::A1A5 => (A1, A5),
            DirPair::A5A4 => (A5, A4),
        }
    }

    pub fn token(self) -> String {
        let (objects, classes) = self.members();
        format!("{}/{}", objects.token(), classes.token())
    }
}

/// Symmetric objects and asymmetric pairs for one involution pair.
pub fn dirbouquet_split(pair: DirPair, n: u64, k: u64) -> (BigUint, BigUint) {
    let (objects_family, classes_family) = pair.members();
    let objects = dirbouquet_count(objects_family, n, k);
    let classes = dirbouquet_count(classes_family, n, k);
    involution_split(&objects, &classes)
}
