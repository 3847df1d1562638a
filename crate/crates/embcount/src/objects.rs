//! The labeled objects the oracle enumerates: labeled dipoles (permutations
//! of `Z_n`), colored matchings on `Z_2n` (chord diagrams), and signed
//! colored matchings (directed bouquets).
//!
//! Each type has a canonical byte key ([`LabeledDipole::encode`] etc.) and
//! `Ord` agrees with lexicographic order on that key. Generators yield
//! objects in ascending key order, so "earliest in its orbit" is
//! well-defined and deterministic.
//!
//! Labels are stored as `u8`; generation asserts `2n <= 255`, far above the
//! enumeration sizes the oracle caps allow.

use crate::Error;

/// The sign `epsilon` carried by the even labels of a signed matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn byte(self) -> u8 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }

    fn from_byte(b: u8) -> Option<Sign> {
        match b {
            0 => Some(Sign::Plus),
            1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A labeled dipole on `n` edges: a permutation of `Z_n` stored as its image
/// sequence (`pi[i]` is the image of `i`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledDipole {
    pub(crate) pi: Vec<u8>,
}

impl LabeledDipole {
    /// Builds from an image sequence; `None` unless it is a bijection.
    pub fn from_images(pi: Vec<u8>) -> Option<LabeledDipole> {
        let n = pi.len();
        let mut seen = vec![false; n];
        for &v in &pi {
            if (v as usize) >= n || seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        Some(LabeledDipole { pi })
    }

    pub fn identity(n: usize) -> LabeledDipole {
        LabeledDipole {
            pi: (0..n).map(|i| i as u8).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.pi.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.pi
    }

    /// Canonical byte key: the image sequence itself.
    pub fn encode(&self) -> Vec<u8> {
        self.pi.clone()
    }

    pub fn decode(key: &[u8]) -> Option<LabeledDipole> {
        LabeledDipole::from_images(key.to_vec())
    }
}

/// A perfect matching on `Z_2n` with an edge color in `Z_k` on every chord.
///
/// `partner` is a fixed-point-free involution; `color` is stored per
/// endpoint, both endpoints of an edge carrying the same value. The color
/// count `k` is generation metadata and does not take part in equality or
/// ordering.
#[derive(Debug, Clone)]
pub struct ColoredMatching {
    pub(crate) partner: Vec<u8>,
    pub(crate) color: Vec<u8>,
    pub(crate) k: u8,
}

impl PartialEq for ColoredMatching {
    fn eq(&self, other: &Self) -> bool {
        self.partner == other.partner && self.color == other.color
    }
}
impl Eq for ColoredMatching {}

impl std::hash::Hash for ColoredMatching {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.partner.hash(state);
        self.color.hash(state);
    }
}

impl Ord for ColoredMatching {
    // Key order: partner array first, then colors. Since matched partner
    // arrays list each edge color at the same positions, comparing the full
    // per-endpoint color arrays is equivalent to comparing colors in
    // min-endpoint edge order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.partner
            .cmp(&other.partner)
            .then_with(|| self.color.cmp(&other.color))
    }
}
impl PartialOrd for ColoredMatching {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl ColoredMatching {
    /// Builds from a partner involution and per-edge colors keyed by the
    /// smaller endpoint. `None` if the involution or colors are malformed.
    pub fn from_parts(partner: Vec<u8>, edge_colors: &[(u8, u8)], k: u8) -> Option<ColoredMatching> {
        let two_n = partner.len();
        if two_n % 2 != 0 {
            return None;
        }
        for a in 0..two_n {
            let b = partner[a] as usize;
            if b >= two_n || b == a || partner[b] as usize != a {
                return None;
            }
        }
        let mut color = vec![0u8; two_n];
        let mut assigned = vec![false; two_n];
        for &(a, c) in edge_colors {
            let a = a as usize;
            if a >= two_n || assigned[a] || c >= k.max(1) {
                return None;
            }
            let b = partner[a] as usize;
            color[a] = c;
            color[b] = c;
            assigned[a] = true;
            assigned[b] = true;
        }
        if assigned.iter().any(|&done| !done) {
            return None;
        }
        Some(ColoredMatching { partner, color, k })
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn partner(&self) -> &[u8] {
        &self.partner
    }

    /// Color of the edge containing endpoint `a`.
    pub fn color_at(&self, a: usize) -> u8 {
        self.color[a]
    }

    pub fn is_valid(&self) -> bool {
        let two_n = self.partner.len();
        self.color.len() == two_n
            && (0..two_n).all(|a| {
                let b = self.partner[a] as usize;
                b < two_n
                    && b != a
                    && self.partner[b] as usize == a
                    && self.color[a] == self.color[b]
                    && self.color[a] < self.k.max(1)
            })
    }

    /// Canonical byte key: the partner array, then the edge colors in
    /// ascending order of each edge's smaller endpoint.
    pub fn encode(&self) -> Vec<u8> {
        let two_n = self.partner.len();
        let mut key = Vec::with_capacity(two_n + two_n / 2);
        key.extend_from_slice(&self.partner);
        for a in 0..two_n {
            if (a as u8) < self.partner[a] {
                key.push(self.color[a]);
            }
        }
        key
    }

    pub fn decode(key: &[u8], k: u8) -> Option<ColoredMatching> {
        let n = key.len() / 3;
        if key.len() != 3 * n {
            return None;
        }
        let partner = key[..2 * n].to_vec();
        let mut edge_colors = Vec::with_capacity(n);
        let mut idx = 2 * n;
        for a in 0..2 * n {
            if (a as u8) < partner[a] {
                edge_colors.push((a as u8, key[idx]));
                idx += 1;
            }
        }
        if edge_colors.len() != n {
            return None;
        }
        ColoredMatching::from_parts(partner, &edge_colors, k)
    }
}

/// A perfect matching of the even labels of `Z_2n` to the odd labels, with
/// edge colors and a global sign on the even side.
#[derive(Debug, Clone)]
pub struct SignedColoredMatching {
    pub(crate) partner: Vec<u8>,
    pub(crate) color: Vec<u8>,
    pub(crate) k: u8,
    pub(crate) epsilon: Sign,
}

impl PartialEq for SignedColoredMatching {
    fn eq(&self, other: &Self) -> bool {
        self.partner == other.partner && self.color == other.color && self.epsilon == other.epsilon
    }
}
impl Eq for SignedColoredMatching {}

impl std::hash::Hash for SignedColoredMatching {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.partner.hash(state);
        self.color.hash(state);
        self.epsilon.hash(state);
    }
}

impl Ord for SignedColoredMatching {
    // Key order: partners of the even labels, then their edge colors, then
    // the sign. The odd slots of `partner` are determined by the even ones,
    // so they are skipped both here and in the key.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let evens = |m: &SignedColoredMatching| -> Vec<u8> {
            m.partner.iter().step_by(2).copied().collect()
        };
        evens(self)
            .cmp(&evens(other))
            .then_with(|| {
                let colors = |m: &SignedColoredMatching| -> Vec<u8> {
                    m.color.iter().step_by(2).copied().collect()
                };
                colors(self).cmp(&colors(other))
            })
            .then_with(|| self.epsilon.cmp(&other.epsilon))
    }
}
impl PartialOrd for SignedColoredMatching {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl SignedColoredMatching {
    /// Builds from the even-to-odd assignment: `assign[i]` says even label
    /// `2i` is matched to odd label `2 assign[i] + 1`, with color
    /// `colors[i]`.
    pub fn from_assignment(
        assign: &[u8],
        colors: &[u8],
        k: u8,
        epsilon: Sign,
    ) -> Option<SignedColoredMatching> {
        let n = assign.len();
        if colors.len() != n {
            return None;
        }
        let mut seen = vec![false; n];
        for &v in assign {
            if (v as usize) >= n || seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        if colors.iter().any(|&c| c >= k.max(1)) {
            return None;
        }
        let mut partner = vec![0u8; 2 * n];
        let mut color = vec![0u8; 2 * n];
        for i in 0..n {
            let even = 2 * i;
            let odd = 2 * assign[i] as usize + 1;
            partner[even] = odd as u8;
            partner[odd] = even as u8;
            color[even] = colors[i];
            color[odd] = colors[i];
        }
        Some(SignedColoredMatching {
            partner,
            color,
            k,
            epsilon,
        })
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn partner(&self) -> &[u8] {
        &self.partner
    }

    pub fn color_at(&self, a: usize) -> u8 {
        self.color[a]
    }

    pub fn is_valid(&self) -> bool {
        let two_n = self.partner.len();
        self.color.len() == two_n
            && (0..two_n).all(|a| {
                let b = self.partner[a] as usize;
                b < two_n
                    && b % 2 != a % 2
                    && self.partner[b] as usize == a
                    && self.color[a] == self.color[b]
                    && self.color[a] < self.k.max(1)
            })
    }

    /// Canonical byte key: partners of the even labels, their edge colors,
    /// then the sign byte.
    pub fn encode(&self) -> Vec<u8> {
        let n = self.n();
        let mut key = Vec::with_capacity(2 * n + 1);
        key.extend(self.partner.iter().step_by(2));
        key.extend(self.color.iter().step_by(2));
        key.push(self.epsilon.byte());
        key
    }

    pub fn decode(key: &[u8], k: u8) -> Option<SignedColoredMatching> {
        if key.is_empty() || key.len() % 2 == 0 {
            return None;
        }
        let n = (key.len() - 1) / 2;
        let epsilon = Sign::from_byte(key[2 * n])?;
        let assign: Vec<u8> = key[..n]
            .iter()
            .map(|&odd| odd.checked_sub(1).map(|x| x / 2))
            .collect::<Option<Vec<u8>>>()?;
        if key[..n].iter().any(|&odd| odd % 2 == 0) {
            return None;
        }
        SignedColoredMatching::from_assignment(&assign, &key[n..2 * n], k, epsilon)
    }
}

/// Advances `seq` to its lexicographic successor; false when already last.
fn next_permutation(seq: &mut [u8]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// Advances a base-`k` odometer (most significant digit first); false on
/// wrap-around.
fn next_coloring(digits: &mut [u8], k: u8) -> bool {
    for d in digits.iter_mut().rev() {
        if *d + 1 < k {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

/// Streams the `n!` labeled dipoles in lexicographic key order, starting at
/// the identity.
pub fn gen_dipoles(n: usize) -> Dipoles {
    assert!(n <= 255, "label range exceeds u8");
    Dipoles {
        next: Some((0..n).map(|i| i as u8).collect()),
    }
}

pub struct Dipoles {
    next: Option<Vec<u8>>,
}

impl Iterator for Dipoles {
    type Item = LabeledDipole;

    fn next(&mut self) -> Option<LabeledDipole> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(LabeledDipole { pi: current })
    }
}

/// All perfect matchings of `Z_2n` as partner arrays, ascending
/// lexicographically.
fn all_partner_arrays(n: usize) -> Vec<Vec<u8>> {
    fn go(partner: &mut [i16], out: &mut Vec<Vec<u8>>) {
        let two_n = partner.len();
        let first_free = (0..two_n).find(|&a| partner[a] < 0);
        let a = match first_free {
            None => {
                out.push(partner.iter().map(|&x| x as u8).collect());
                return;
            }
            Some(a) => a,
        };
        for b in a + 1..two_n {
            if partner[b] < 0 {
                partner[a] = b as i16;
                partner[b] = a as i16;
                go(partner, out);
                partner[a] = -1;
                partner[b] = -1;
            }
        }
    }
    let mut partner = vec![-1i16; 2 * n];
    let mut out = Vec::new();
    go(&mut partner, &mut out);
    out
}

/// Streams the `(2n-1)!! k^n` colored matchings in lexicographic key order.
///
/// Rejects `k = 0` when `n >= 1` (there is nothing to color the edges with).
pub fn gen_colored_matchings(n: usize, k: u8) -> Result<ColoredMatchings, Error> {
    assert!(2 * n <= 255, "label range exceeds u8");
    if k == 0 && n >= 1 {
        return Err(Error::ZeroColors);
    }
    Ok(ColoredMatchings {
        matchings: all_partner_arrays(n),
        index: 0,
        colors: vec![0u8; n],
        k,
    })
}

pub struct ColoredMatchings {
    matchings: Vec<Vec<u8>>,
    index: usize,
    colors: Vec<u8>,
    k: u8,
}

impl Iterator for ColoredMatchings {
    type Item = ColoredMatching;

    fn next(&mut self) -> Option<ColoredMatching> {
        if self.index >= self.matchings.len() {
            return None;
        }
        let partner = self.matchings[self.index].clone();
        let two_n = partner.len();
        let mut color = vec![0u8; two_n];
        let mut edge = 0;
        for a in 0..two_n {
            if (a as u8) < partner[a] {
                color[a] = self.colors[edge];
                color[partner[a] as usize] = self.colors[edge];
                edge += 1;
            }
        }
        let item = ColoredMatching {
            partner,
            color,
            k: self.k,
        };
        if !next_coloring(&mut self.colors, self.k) {
            self.index += 1;
        }
        Some(item)
    }
}

/// Streams the `2 n! k^n` signed colored matchings in lexicographic key
/// order (one trivial object when `n = 0`).
///
/// Rejects `k = 0` when `n >= 1`.
pub fn gen_signed_colored_matchings(n: usize, k: u8) -> Result<SignedColoredMatchings, Error> {
    assert!(2 * n <= 255, "label range exceeds u8");
    if k == 0 && n >= 1 {
        return Err(Error::ZeroColors);
    }
    Ok(SignedColoredMatchings {
        assign: Some((0..n).map(|i| i as u8).collect()),
        colors: vec![0u8; n],
        sign: Sign::Plus,
        n,
        k,
    })
}

pub struct SignedColoredMatchings {
    assign: Option<Vec<u8>>,
    colors: Vec<u8>,
    sign: Sign,
    n: usize,
    k: u8,
}

impl Iterator for SignedColoredMatchings {
    type Item = SignedColoredMatching;

    fn next(&mut self) -> Option<SignedColoredMatching> {
        let assign = self.assign.as_ref()?;
        let item = SignedColoredMatching::from_assignment(assign, &self.colors, self.k, self.sign)
            .expect("generator state is always a valid assignment");
        // epsilon is the innermost digit; with no edges there is a single
        // trivial object, so the sign never advances.
        if self.n > 0 && self.sign == Sign::Plus {
            self.sign = Sign::Minus;
        } else {
            self.sign = Sign::Plus;
            if !next_coloring(&mut self.colors, self.k) {
                let mut succ = self.assign.take().unwrap();
                if next_permutation(&mut succ) {
                    self.assign = Some(succ);
                }
            }
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{double_factorial, factorial};
    use num_bigint::BigUint;
    use std::collections::BTreeSet;

    #[test]
    fn dipole_stream_counts_and_order() {
        assert_eq!(gen_dipoles(0).count(), 1);
        assert_eq!(gen_dipoles(3).count(), 6);
        let dipoles: Vec<LabeledDipole> = gen_dipoles(5).collect();
        assert_eq!(dipoles.len(), 120);
        assert_eq!(dipoles[0], LabeledDipole::identity(5));
        for pair in dipoles.windows(2) {
            assert!(pair[0] < pair[1], "stream must ascend");
        }
    }

    #[test]
    fn dipole_identity_has_minimal_key() {
        let identity = LabeledDipole::identity(3).encode();
        for d in gen_dipoles(3).skip(1) {
            assert!(identity < d.encode());
        }
    }

    #[test]
    fn colored_matching_counts() {
        let count = |n: usize, k: u8| gen_colored_matchings(n, k).unwrap().count();
        assert_eq!(count(2, 1), 3);
        assert_eq!(count(3, 1), 15);
        assert_eq!(count(2, 2), 12);
        assert_eq!(count(0, 1), 1);
        for n in 0..=5usize {
            for k in 1..=3u8 {
                let expected = double_factorial(2 * n as i64 - 1)
                    * BigUint::from(k).pow(n as u32);
                assert_eq!(BigUint::from(count(n, k)), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn signed_matching_counts() {
        let count = |n: usize, k: u8| gen_signed_colored_matchings(n, k).unwrap().count();
        assert_eq!(count(0, 1), 1);
        assert_eq!(count(1, 1), 2);
        assert_eq!(count(2, 1), 4);
        assert_eq!(count(2, 2), 16);
        for n in 0..=4usize {
            for k in 1..=2u8 {
                let expected = if n == 0 {
                    BigUint::from(1u32)
                } else {
                    factorial(n as u64) * BigUint::from(k).pow(n as u32) * 2u32
                };
                assert_eq!(BigUint::from(count(n, k)), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn zero_colors_rejected() {
        assert!(gen_colored_matchings(2, 0).is_err());
        assert!(gen_signed_colored_matchings(1, 0).is_err());
        assert!(gen_colored_matchings(0, 0).is_ok());
    }

    #[test]
    fn streams_have_no_duplicates_and_ascend() {
        let keys: Vec<Vec<u8>> = gen_colored_matchings(3, 2)
            .unwrap()
            .map(|m| m.encode())
            .collect();
        let set: BTreeSet<&Vec<u8>> = keys.iter().collect();
        assert_eq!(set.len(), keys.len());
        for pair in keys.windows(2) {
            assert!(pair[0] < pair[1]);
        }

        let keys: Vec<Vec<u8>> = gen_signed_colored_matchings(3, 2)
            .unwrap()
            .map(|m| m.encode())
            .collect();
        let set: BTreeSet<&Vec<u8>> = keys.iter().collect();
        assert_eq!(set.len(), keys.len());
        for pair in keys.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn generated_objects_satisfy_invariants() {
        for m in gen_colored_matchings(4, 3).unwrap() {
            assert!(m.is_valid());
        }
        for m in gen_signed_colored_matchings(3, 2).unwrap() {
            assert!(m.is_valid());
        }
    }

    #[test]
    fn encode_round_trips() {
        for d in gen_dipoles(4) {
            let back = LabeledDipole::decode(&d.encode()).unwrap();
            assert_eq!(back.encode(), d.encode());
            assert_eq!(back, d);
        }
        for m in gen_colored_matchings(3, 2).unwrap() {
            let back = ColoredMatching::decode(&m.encode(), 2).unwrap();
            assert_eq!(back.encode(), m.encode());
            assert_eq!(back, m);
        }
        for m in gen_signed_colored_matchings(2, 2).unwrap() {
            let back = SignedColoredMatching::decode(&m.encode(), 2).unwrap();
            assert_eq!(back.encode(), m.encode());
            assert_eq!(back, m);
        }
    }

    #[test]
    fn ord_agrees_with_key_order() {
        let matchings: Vec<ColoredMatching> = gen_colored_matchings(3, 2).unwrap().collect();
        for a in matchings.iter().step_by(7) {
            for b in matchings.iter().step_by(5) {
                assert_eq!(a.cmp(b), a.encode().cmp(&b.encode()));
            }
        }
        let signed: Vec<SignedColoredMatching> =
            gen_signed_colored_matchings(3, 2).unwrap().collect();
        for a in signed.iter().step_by(5) {
            for b in signed.iter().step_by(3) {
                assert_eq!(a.cmp(b), a.encode().cmp(&b.encode()));
            }
        }
    }

    #[test]
    fn distinct_objects_have_distinct_keys() {
        let all: Vec<ColoredMatching> = gen_colored_matchings(2, 2).unwrap().collect();
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                assert_eq!(i == j, a.encode() == b.encode());
            }
        }
    }
}
