//! Closed-form dipole coset averages and the D-family counts.
//!
//! `delta(T, n)` is the average number of labeled dipoles (permutations of
//! `Z_n`) fixed by an element of the coset `Omega T` of the shift subgroup.
//! There are five distinct values; `R0`, `RX` and `R0X` are conjugate to
//! `R1`, `X` and `R1X` respectively and resolve to them before evaluation.
//! Every D-family count is a small rational combination of delta values,
//! evaluated integer-only with the division last.

use num_bigint::BigUint;
use num_traits::One;

use crate::actions::DipoleCoset;
use crate::exactmath::{
    divisor_pairs, exact_div_u64, factorial, involution_split, matchings, phi, sqrt_count,
};

/// Coset average `delta(T, n)` for any of the eight coset labels (aliases
/// resolve first). Returns 1 at `n = 0` by the empty-object convention.
pub fn delta(label: DipoleCoset, n: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    match label.canonical() {
        DipoleCoset::I => delta_shift(n),
        DipoleCoset::X => delta_swap(n),
        DipoleCoset::R => delta_reversal(n),
        DipoleCoset::R1 => delta_one_sided_reversal(n),
        DipoleCoset::R1X => delta_quarter_turn(n),
        _ => unreachable!("canonical() only returns the five base labels"),
    }
}

/// `delta(I) = (1/n) sum_(dg=n) phi(d)^2 (g-1)! d^(g-1)`.
fn delta_shift(n: u64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for pair in divisor_pairs(n) {
        let p = phi(pair.d);
        acc += &p * &p * factorial(pair.g - 1) * BigUint::from(pair.d).pow(pair.g as u32 - 1);
    }
    exact_div_u64(acc, n).expect("delta(I) is integral")
}

/// `delta(X) = (1/n) sum_(dg=n) phi(d) sr(d, g)`: a fixed point of a coset
/// element is a square root of a power of the full cycle.
fn delta_swap(n: u64) -> BigUint {
    let mut acc = BigUint::ZERO;
    for pair in divisor_pairs(n) {
        acc += phi(pair.d) * sqrt_count(pair.d, pair.g);
    }
    exact_div_u64(acc, n).expect("delta(X) is integral")
}

/// `delta(R)`: `((n-1)/2)! 2^((n-1)/2)` for odd `n`, and
/// `(n+2) (n/2-1)! 2^(n/2-3)` for even `n`, evaluated as
/// `((n+2) (n/2-1)! 2^(n/2)) / 8` to keep the intermediates integral.
fn delta_reversal(n: u64) -> BigUint {
    if n % 2 == 1 {
        factorial((n - 1) / 2) * BigUint::from(2u64).pow(((n - 1) / 2) as u32)
    } else {
        let numerator =
            BigUint::from(n + 2) * factorial(n / 2 - 1) * BigUint::from(2u64).pow((n / 2) as u32);
        exact_div_u64(numerator, 8).expect("delta(R) is integral for even n")
    }
}

/// `delta(R1)`: 1 at `n = 1, 2`; 0 for odd `n >= 3`;
/// `(n/2)! 2^(n/2-1) / n` for even `n >= 4`.
fn delta_one_sided_reversal(n: u64) -> BigUint {
    match n {
        1 | 2 => BigUint::one(),
        _ if n % 2 == 1 => BigUint::ZERO,
        _ => {
            let numerator = factorial(n / 2) * BigUint::from(2u64).pow((n / 2 - 1) as u32);
            exact_div_u64(numerator, n).expect("delta(R1) is integral for even n")
        }
    }
}

/// `delta(R1 X)`: four cases by `n` mod 4.
fn delta_quarter_turn(n: u64) -> BigUint {
    match n % 4 {
        0 => matchings(n / 2, n / 4) * BigUint::from(2u64).pow((n / 4 - 1) as u32),
        1 => matchings((n - 1) / 2, (n - 1) / 4) * BigUint::from(2u64).pow(((n - 1) / 4) as u32),
        2 => matchings((n - 2) / 2, (n - 2) / 4) * BigUint::from(2u64).pow(((n - 2) / 4) as u32),
        _ => BigUint::ZERO,
    }
}

/// The eight dipole counting families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DipoleFamily {
    /// Vertex-labeled oriented dipole embeddings.
    D1,
    /// Oriented dipole embeddings.
    D2,
    /// Vertex-labeled orientable dipole embeddings.
    D3,
    /// Orientable dipole embeddings.
    D4,
    /// Vertex-labeled dipolar cogs.
    D5,
    /// Dipolar cogs.
    D6,
    /// Permutation classes under shifts and one-sided reversal.
    D7,
    /// Permutation-matrix classes under shifts and quarter turns.
    D8,
}

impl DipoleFamily {
    pub const ALL: [DipoleFamily; 8] = [
        DipoleFamily::D1,
        DipoleFamily::D2,
        DipoleFamily::D3,
        DipoleFamily::D4,
        DipoleFamily::D5,
        DipoleFamily::D6,
        DipoleFamily::D7,
        DipoleFamily::D8,
    ];

    pub fn token(self) -> &'static str {
        match self {
            DipoleFamily::D1 => "D1",
            DipoleFamily::D2 => "D2",
            DipoleFamily::D3 => "D3",
            DipoleFamily::D4 => "D4",
            DipoleFamily::D5 => "D5",
            DipoleFamily::D6 => "D6",
            DipoleFamily::D7 => "D7",
            DipoleFamily::D8 => "D8",
        }
    }
}

/// `D1..D8` as combinations of delta values; the divisor is the number of
/// cosets in the family's symmetry group.
pub fn dipole_count(family: DipoleFamily, n: u64) -> BigUint {
    use DipoleCoset::*;
    let d = |label| delta(label, n);
    let (numerator, divisor): (BigUint, u64) = match family {
        DipoleFamily::D1 => (d(I), 1),
        DipoleFamily::D2 => (d(I) + d(X), 2),
        DipoleFamily::D3 => (d(I) + d(R), 2),
        DipoleFamily::D4 => (d(I) + d(R) + d(X) * 2u32, 4),
        DipoleFamily::D5 => (d(I) + d(R) + d(R1) * 2u32, 4),
        DipoleFamily::D6 => (d(I) + d(R) + (d(R1) + d(X) + d(R1X)) * 2u32, 8),
        DipoleFamily::D7 => (d(I) + d(R1), 2),
        DipoleFamily::D8 => (d(I) + d(R) + d(R1X) * 2u32, 4),
    };
    exact_div_u64(numerator, divisor)
        .unwrap_or_else(|_| panic!("{} must be integral at n={n}", family.token()))
}

/// The involution pairs among the D families: the first member counts
/// objects, the second counts the involution's equivalence classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DipolePair {
    /// Reflection on vertex-labeled oriented embeddings.
    D1D3,
    /// Reflection on oriented embeddings.
    D2D4,
    /// Vertex exchange on oriented embeddings.
    D1D2,
    /// Vertex exchange on orientable embeddings.
    D3D4,
    /// Vertex exchange on dipolar cogs.
    D5D6,
    /// Petrie duality on vertex-labeled orientable embeddings.
    D3D5,
    /// Petrie duality on orientable embeddings.
    D4D6,
    /// Reversal on directed hamilton cycles with a cyclic vertex order.
    D1D7,
    /// Reversal on undirected hamilton cycles with a cyclic vertex order.
    D7D5,
    /// Quarter turn on permutation-matrix classes.
    D3D8,
    /// Transposition on quarter-turn permutation-matrix classes.
    D8D6,
}

impl DipolePair {
    pub const ALL: [DipolePair; 11] = [
        DipolePair::D1D3,
        DipolePair::D2D4,
        DipolePair::D1D2,
        DipolePair::D3D4,
        DipolePair::D5D6,
        DipolePair::D3D5,
        DipolePair::D4D6,
        DipolePair::D1D7,
        DipolePair::D7D5,
        DipolePair::D3D8,
        DipolePair::D8D6,
    ];

    /// `(objects family, classes family)`.
    pub fn members(self) -> (DipoleFamily, DipoleFamily) {
        use DipoleFamily::*;
        match self {
            DipolePair::D1D3 => (D1, D3),
            DipolePair::D2D4 => (D2, D4),
            DipolePair::D1D2 => (D1, D2),
            DipolePair::D3D4 => (D3, D4),
            DipolePair::D5D6 => (D5, D6),
            DipolePair::D3D5 => (D3, D5),
            DipolePair::D4D6 => (D4, D6),
            DipolePair::D1D7 => (D1, D7),
            DipolePair::D7D5 => (D7, D5),
            DipolePair::D3D8 => (D3, D8),
            DipolePair::D8D6 => (D8, D6),
        }
    }

    pub fn token(self) -> String {
        let (objects, classes) = self.members();
        format!("{}/{}", objects.token(), classes.token())
    }
}

/// Symmetric objects and asymmetric pairs for one involution pair:
/// `S = 2 classes - objects`, `AP = objects - classes`.
pub fn dipole_split(pair: DipolePair, n: u64) -> (BigUint, BigUint) {
    let (objects_family, classes_family) = pair.members();
    let objects = dipole_count(objects_family, n);
    let classes = dipole_count(classes_family, n);
    involution_split(&objects, &classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn delta_values_from_value_tables() {
        assert_eq!(delta(DipoleCoset::I, 6), big(24));
        assert_eq!(delta(DipoleCoset::R, 6), big(16));
        assert_eq!(delta(DipoleCoset::R1X, 12), big(60));
        assert_eq!(delta(DipoleCoset::X, 5), big(6));
        assert_eq!(delta(DipoleCoset::R1, 1), big(1));
        assert_eq!(delta(DipoleCoset::R1, 2), big(1));
        assert_eq!(delta(DipoleCoset::R1, 7), big(0));
        assert_eq!(delta(DipoleCoset::R1X, 7), big(0));
    }

    #[test]
    fn delta_aliases_resolve() {
        for n in 0..=20u64 {
            assert_eq!(delta(DipoleCoset::R0, n), delta(DipoleCoset::R1, n));
            assert_eq!(delta(DipoleCoset::RX, n), delta(DipoleCoset::X, n));
            assert_eq!(delta(DipoleCoset::R0X, n), delta(DipoleCoset::R1X, n));
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(dipole_count(DipoleFamily::D1, 12), big(3326788));
        assert_eq!(dipole_count(DipoleFamily::D6, 12), big(420948));
        assert_eq!(dipole_count(DipoleFamily::D8, 5), big(5));
        for family in DipoleFamily::ALL {
            assert_eq!(dipole_count(family, 0), big(1), "{}", family.token());
        }
    }

    #[test]
    fn split_examples() {
        assert_eq!(dipole_split(DipolePair::D1D3, 6), (big(16), big(4)));
        assert_eq!(dipole_split(DipolePair::D3D5, 8), (big(24), big(178)));
        assert_eq!(dipole_split(DipolePair::D8D6, 5), (big(3), big(1)));
        for pair in DipolePair::ALL {
            assert_eq!(dipole_split(pair, 0), (big(1), big(0)), "{}", pair.token());
        }
    }

    #[test]
    fn split_algebra_reconstructs_both_families() {
        for pair in DipolePair::ALL {
            let (objects_family, classes_family) = pair.members();
            for n in 0..=40u64 {
                let (s, ap) = dipole_split(pair, n);
                assert_eq!(&s + &ap * 2u32, dipole_count(objects_family, n));
                assert_eq!(s + ap, dipole_count(classes_family, n));
            }
        }
    }

    #[test]
    fn linear_identity_holds() {
        // 2 D4 + D1 = D3 + 2 D2
        for n in 0..=60u64 {
            let lhs = dipole_count(DipoleFamily::D4, n) * 2u32 + dipole_count(DipoleFamily::D1, n);
            let rhs = dipole_count(DipoleFamily::D3, n) + dipole_count(DipoleFamily::D2, n) * 2u32;
            assert_eq!(lhs, rhs, "n={n}");
        }
    }
}
