//! Normal-form symmetry-group elements and their actions on the labeled
//! objects.
//!
//! Dipole symmetries are words in the label shifts `S0, S1`, the label
//! reversals `R0, R1`, and the vertex swap `X`; every word reduces to the
//! unique normal form `S0^h S1^k R0^p R1^q X^s`, so the full group has
//! `8 n^2` elements. Bouquet symmetries reduce to `S^h R^r` (`4n` elements)
//! and directed-bouquet symmetries to `S^h R^r F^f`, where `F` reverses all
//! arcs and commutes with everything.
//!
//! Composition and inversion renormalize immediately; elements are never
//! stored as words.

use crate::objects::{ColoredMatching, LabeledDipole, SignedColoredMatching};

/// Right-coset labels of the shift subgroup inside the full dipole group:
/// the `(p, q, s)` part of the normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DipoleCoset {
    I,
    R0,
    R1,
    R,
    X,
    R0X,
    R1X,
    RX,
}

impl DipoleCoset {
    pub const ALL: [DipoleCoset; 8] = [
        DipoleCoset::I,
        DipoleCoset::R0,
        DipoleCoset::R1,
        DipoleCoset::R,
        DipoleCoset::X,
        DipoleCoset::R0X,
        DipoleCoset::R1X,
        DipoleCoset::RX,
    ];

    /// The coset with the same fixed-point sum: `R0 -> R1`, `RX -> X`,
    /// `R0X -> R1X` (the cosets are conjugate); the other five map to
    /// themselves.
    pub fn canonical(self) -> DipoleCoset {
        match self {
            DipoleCoset::R0 => DipoleCoset::R1,
            DipoleCoset::RX => DipoleCoset::X,
            DipoleCoset::R0X => DipoleCoset::R1X,
            other => other,
        }
    }

    pub fn is_alias(self) -> bool {
        self.canonical() != self
    }

    fn flags(self) -> (bool, bool, bool) {
        match self {
            DipoleCoset::I => (false, false, false),
            DipoleCoset::R0 => (true, false, false),
            DipoleCoset::R1 => (false, true, false),
            DipoleCoset::R => (true, true, false),
            DipoleCoset::X => (false, false, true),
            DipoleCoset::R0X => (true, false, true),
            DipoleCoset::R1X => (false, true, true),
            DipoleCoset::RX => (true, true, true),
        }
    }

    fn from_flags(p: bool, q: bool, s: bool) -> DipoleCoset {
        match (p, q, s) {
            (false, false, false) => DipoleCoset::I,
            (true, false, false) => DipoleCoset::R0,
            (false, true, false) => DipoleCoset::R1,
            (true, true, false) => DipoleCoset::R,
            (false, false, true) => DipoleCoset::X,
            (true, false, true) => DipoleCoset::R0X,
            (false, true, true) => DipoleCoset::R1X,
            (true, true, true) => DipoleCoset::RX,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DipoleCoset::I => "I",
            DipoleCoset::R0 => "R0",
            DipoleCoset::R1 => "R1",
            DipoleCoset::R => "R",
            DipoleCoset::X => "X",
            DipoleCoset::R0X => "R0X",
            DipoleCoset::R1X => "R1X",
            DipoleCoset::RX => "RX",
        }
    }
}

impl std::fmt::Display for DipoleCoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Coset labels of the shift subgroup inside the bouquet group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BouquetCoset {
    I,
    R,
}

impl BouquetCoset {
    pub const ALL: [BouquetCoset; 2] = [BouquetCoset::I, BouquetCoset::R];

    pub fn label(self) -> &'static str {
        match self {
            BouquetCoset::I => "I",
            BouquetCoset::R => "R",
        }
    }
}

impl std::fmt::Display for BouquetCoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Coset labels of the shift subgroup inside the directed-bouquet group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DirCoset {
    I,
    R,
    F,
    RF,
}

impl DirCoset {
    pub const ALL: [DirCoset; 4] = [DirCoset::I, DirCoset::R, DirCoset::F, DirCoset::RF];

    pub fn label(self) -> &'static str {
        match self {
            DirCoset::I => "I",
            DirCoset::R => "R",
            DirCoset::F => "F",
            DirCoset::RF => "RF",
        }
    }
}

impl std::fmt::Display for DirCoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Normal form `S0^h S1^k R0^p R1^q X^s` of a dipole symmetry on `n` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DipoleSym {
    n: usize,
    h: usize,
    k: usize,
    p: bool,
    q: bool,
    s: bool,
}

impl DipoleSym {
    pub fn new(n: usize, h: usize, k: usize, p: bool, q: bool, s: bool) -> DipoleSym {
        assert!(n >= 1, "dipole symmetries need n >= 1");
        DipoleSym {
            n,
            h: h % n,
            k: k % n,
            p,
            q,
            s,
        }
    }

    pub fn identity(n: usize) -> DipoleSym {
        DipoleSym::new(n, 0, 0, false, false, false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coset(&self) -> DipoleCoset {
        DipoleCoset::from_flags(self.p, self.q, self.s)
    }

    /// `self` after `other` (function composition, `self(other(x))`),
    /// renormalized via the group relations.
    pub fn compose(&self, other: &DipoleSym) -> DipoleSym {
        assert_eq!(self.n, other.n, "size mismatch");
        let n = self.n as i64;
        let sgn = |flag: bool| if flag { -1i64 } else { 1 };
        let (h1, k1) = (other.h as i64, other.k as i64);
        let (h2, k2) = (self.h as i64, self.k as i64);
        let (h, k, p, q);
        if !self.s {
            h = h2 + sgn(self.p) * h1;
            k = k2 + sgn(self.q) * k1;
            p = other.p ^ self.p;
            q = other.q ^ self.q;
        } else {
            h = h2 + sgn(self.p) * k1;
            k = k2 + sgn(self.q) * h1;
            p = other.q ^ self.p;
            q = other.p ^ self.q;
        }
        DipoleSym::new(
            self.n,
            h.rem_euclid(n) as usize,
            k.rem_euclid(n) as usize,
            p,
            q,
            other.s ^ self.s,
        )
    }

    pub fn inverse(&self) -> DipoleSym {
        let n = self.n as i64;
        let sgn = |flag: bool| if flag { -1i64 } else { 1 };
        let (h, k) = (self.h as i64, self.k as i64);
        if !self.s {
            DipoleSym::new(
                self.n,
                (-sgn(self.p) * h).rem_euclid(n) as usize,
                (-sgn(self.q) * k).rem_euclid(n) as usize,
                self.p,
                self.q,
                false,
            )
        } else {
            DipoleSym::new(
                self.n,
                (-sgn(self.q) * k).rem_euclid(n) as usize,
                (-sgn(self.p) * h).rem_euclid(n) as usize,
                self.q,
                self.p,
                true,
            )
        }
    }

    /// Image of the off-lattice probe pair `(0.1, 0.2)` under this element,
    /// with coordinates scaled by 10 (so values live in `Z_10n`). Distinct
    /// normal forms give distinct probe images, which is what makes the
    /// normal form unique.
    pub fn probe(&self) -> (u64, u64) {
        let m = 10 * self.n as i64;
        let sgn = |flag: bool| if flag { -1i64 } else { 1 };
        let (a, b) = (1i64, 2i64);
        let (u, v) = if self.s { (b, a) } else { (a, b) };
        let first = (sgn(self.p) * u + 10 * self.h as i64).rem_euclid(m);
        let second = (sgn(self.q) * v + 10 * self.k as i64).rem_euclid(m);
        (first as u64, second as u64)
    }
}

/// `g(x)` for a dipole symmetry: the permutation
/// `sigma^k rho^q pi^((-1)^s) rho^p sigma^(-h)` where `sigma(i) = i+1` and
/// `rho(i) = -i` (mod n). Panics if sizes differ.
pub fn act_dipole(g: &DipoleSym, x: &LabeledDipole) -> LabeledDipole {
    let mut out = x.clone();
    act_dipole_into(g, x, &mut out);
    out
}

pub(crate) fn act_dipole_into(g: &DipoleSym, x: &LabeledDipole, out: &mut LabeledDipole) {
    let n = g.n;
    assert_eq!(n, x.n(), "size mismatch");
    out.pi.resize(n, 0);
    let mut inverse_buf = [0u8; 256];
    let base: &[u8] = if g.s {
        for (i, &v) in x.pi.iter().enumerate() {
            inverse_buf[v as usize] = i as u8;
        }
        &inverse_buf[..n]
    } else {
        &x.pi
    };
    for j in 0..n {
        let mut t = (j + n - g.h) % n;
        if g.p {
            t = (n - t) % n;
        }
        let mut y = base[t] as usize;
        if g.q {
            y = (n - y) % n;
        }
        out.pi[j] = ((y + g.k) % n) as u8;
    }
}

/// Normal form `S^h R^r` of a bouquet symmetry on `n` edges (`h` in `Z_2n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BouquetSym {
    n: usize,
    h: usize,
    r: bool,
}

impl BouquetSym {
    pub fn new(n: usize, h: usize, r: bool) -> BouquetSym {
        assert!(n >= 1, "bouquet symmetries need n >= 1");
        BouquetSym { n, h: h % (2 * n), r }
    }

    pub fn identity(n: usize) -> BouquetSym {
        BouquetSym::new(n, 0, false)
    }

    pub fn coset(&self) -> BouquetCoset {
        if self.r {
            BouquetCoset::R
        } else {
            BouquetCoset::I
        }
    }

    pub fn compose(&self, other: &BouquetSym) -> BouquetSym {
        assert_eq!(self.n, other.n, "size mismatch");
        let m = 2 * self.n as i64;
        let sgn = if self.r { -1i64 } else { 1 };
        let h = (self.h as i64 + sgn * other.h as i64).rem_euclid(m);
        BouquetSym::new(self.n, h as usize, self.r ^ other.r)
    }

    pub fn inverse(&self) -> BouquetSym {
        let m = 2 * self.n as i64;
        let sgn = if self.r { -1i64 } else { 1 };
        BouquetSym::new(self.n, (sgn * -(self.h as i64)).rem_euclid(m) as usize, self.r)
    }

    /// Label map `a -> (-1)^r a + h` (mod 2n).
    fn map(&self, a: usize) -> usize {
        let m = 2 * self.n as i64;
        let base = if self.r { -(a as i64) } else { a as i64 };
        (base + self.h as i64).rem_euclid(m) as usize
    }

    /// The label map as a lookup table over `Z_2n`.
    pub(crate) fn label_table(&self) -> Vec<u8> {
        (0..2 * self.n).map(|a| self.map(a) as u8).collect()
    }
}

/// `g(x)` for a bouquet symmetry: endpoints are relabeled, colors ride
/// along. Panics if sizes differ.
pub fn act_bouquet(g: &BouquetSym, x: &ColoredMatching) -> ColoredMatching {
    let mut out = x.clone();
    act_bouquet_into(g, x, &mut out);
    out
}

pub(crate) fn act_bouquet_into(g: &BouquetSym, x: &ColoredMatching, out: &mut ColoredMatching) {
    assert_eq!(g.n, x.n(), "size mismatch");
    let two_n = 2 * g.n;
    out.partner.resize(two_n, 0);
    out.color.resize(two_n, 0);
    out.k = x.k;
    for a in 0..two_n {
        let ta = g.map(a);
        out.partner[ta] = g.map(x.partner[a] as usize) as u8;
        out.color[ta] = x.color[a];
    }
}

/// Normal form `S^h R^r F^f` of a directed-bouquet symmetry; `F` flips the
/// sign and commutes with `S` and `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DirBouquetSym {
    pub(crate) base: BouquetSym,
    f: bool,
}

impl DirBouquetSym {
    pub fn new(n: usize, h: usize, r: bool, f: bool) -> DirBouquetSym {
        DirBouquetSym {
            base: BouquetSym::new(n, h, r),
            f,
        }
    }

    pub fn identity(n: usize) -> DirBouquetSym {
        DirBouquetSym::new(n, 0, false, false)
    }

    pub fn coset(&self) -> DirCoset {
        match (self.base.r, self.f) {
            (false, false) => DirCoset::I,
            (true, false) => DirCoset::R,
            (false, true) => DirCoset::F,
            (true, true) => DirCoset::RF,
        }
    }

    pub fn compose(&self, other: &DirBouquetSym) -> DirBouquetSym {
        DirBouquetSym {
            base: self.base.compose(&other.base),
            f: self.f ^ other.f,
        }
    }

    pub fn inverse(&self) -> DirBouquetSym {
        DirBouquetSym {
            base: self.base.inverse(),
            f: self.f,
        }
    }

    /// Whether the action flips the sign: `S^h` with odd `h` swaps the even
    /// and odd labels and `F` flips outright; `R` preserves parity.
    pub(crate) fn flips_sign(&self) -> bool {
        (self.base.h % 2 == 1) ^ self.f
    }

    pub(crate) fn label_table(&self) -> Vec<u8> {
        self.base.label_table()
    }
}

/// `g(x)` for a directed-bouquet symmetry: the `S^h R^r` part relabels the
/// matching, and the sign flips iff `h` is odd XOR `F` is present.
pub fn act_dirbouquet(g: &DirBouquetSym, x: &SignedColoredMatching) -> SignedColoredMatching {
    let mut out = x.clone();
    act_dirbouquet_into(g, x, &mut out);
    out
}

pub(crate) fn act_dirbouquet_into(
    g: &DirBouquetSym,
    x: &SignedColoredMatching,
    out: &mut SignedColoredMatching,
) {
    assert_eq!(g.base.n, x.n(), "size mismatch");
    let two_n = 2 * g.base.n;
    out.partner.resize(two_n, 0);
    out.color.resize(two_n, 0);
    out.k = x.k;
    for a in 0..two_n {
        let ta = g.base.map(a);
        out.partner[ta] = g.base.map(x.partner[a] as usize) as u8;
        out.color[ta] = x.color[a];
    }
    out.epsilon = if g.flips_sign() {
        x.epsilon.flipped()
    } else {
        x.epsilon
    };
}

/// The ten subgroups of the full dipole group that contain both shifts,
/// identified by the coset representatives they add.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DipoleGroup {
    /// `<S0, S1>`: shifts only.
    Shifts,
    /// `<S0, S1, R0>`: input-label reversal.
    Rev0,
    /// `<S0, S1, R1>`: output-label reversal.
    Rev1,
    /// `<S0, S1, R>`: simultaneous reversal of both.
    RevBoth,
    /// `<S0, S1, X>`: vertex swap.
    Swap,
    /// `<S0, S1, RX>`: swap combined with full reversal.
    SwapRevBoth,
    /// `<S0, S1, R0, R1>`: both reversals independently.
    Rev0Rev1,
    /// `<S0, S1, R, X>`: full reversal and swap.
    RevBothSwap,
    /// `<S0, S1, R1 X>`: the order-4 quarter-turn of the permutation matrix.
    QuarterTurn,
    /// The full group `<S0, S1, R0, R1, X>`.
    Full,
}

impl DipoleGroup {
    pub const ALL: [DipoleGroup; 10] = [
        DipoleGroup::Shifts,
        DipoleGroup::Rev0,
        DipoleGroup::Rev1,
        DipoleGroup::RevBoth,
        DipoleGroup::Swap,
        DipoleGroup::SwapRevBoth,
        DipoleGroup::Rev0Rev1,
        DipoleGroup::RevBothSwap,
        DipoleGroup::QuarterTurn,
        DipoleGroup::Full,
    ];

    pub fn coset_reps(self) -> &'static [DipoleCoset] {
        use DipoleCoset::*;
        match self {
            DipoleGroup::Shifts => &[I],
            DipoleGroup::Rev0 => &[I, R0],
            DipoleGroup::Rev1 => &[I, R1],
            DipoleGroup::RevBoth => &[I, R],
            DipoleGroup::Swap => &[I, X],
            DipoleGroup::SwapRevBoth => &[I, RX],
            DipoleGroup::Rev0Rev1 => &[I, R0, R1, R],
            DipoleGroup::RevBothSwap => &[I, R, X, RX],
            DipoleGroup::QuarterTurn => &[I, R, R0X, R1X],
            DipoleGroup::Full => &DipoleCoset::ALL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DipoleGroup::Shifts => "<S0,S1>",
            DipoleGroup::Rev0 => "<S0,S1,R0>",
            DipoleGroup::Rev1 => "<S0,S1,R1>",
            DipoleGroup::RevBoth => "<S0,S1,R>",
            DipoleGroup::Swap => "<S0,S1,X>",
            DipoleGroup::SwapRevBoth => "<S0,S1,RX>",
            DipoleGroup::Rev0Rev1 => "<S0,S1,R0,R1>",
            DipoleGroup::RevBothSwap => "<S0,S1,R,X>",
            DipoleGroup::QuarterTurn => "<S0,S1,R1X>",
            DipoleGroup::Full => "<S0,S1,R0,R1,X>",
        }
    }
}

/// The two bouquet symmetry groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BouquetGroup {
    /// `<S>`: rotations only.
    Shifts,
    /// `<S, R>`: rotations and reflections.
    ShiftsReflect,
}

impl BouquetGroup {
    pub const ALL: [BouquetGroup; 2] = [BouquetGroup::Shifts, BouquetGroup::ShiftsReflect];

    pub fn coset_reps(self) -> &'static [BouquetCoset] {
        match self {
            BouquetGroup::Shifts => &[BouquetCoset::I],
            BouquetGroup::ShiftsReflect => &BouquetCoset::ALL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BouquetGroup::Shifts => "<S>",
            BouquetGroup::ShiftsReflect => "<S,R>",
        }
    }
}

/// The five directed-bouquet symmetry groups between `<S>` and
/// `<S, R> x <F>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DirBouquetGroup {
    /// `<S>`: rotations only.
    Shifts,
    /// `<S, R>`: rotations and reflections.
    Reflect,
    /// `<S, F>`: rotations and arc reversal.
    Reverse,
    /// `<S, RF>`: rotations and simultaneous reflection plus arc reversal.
    ReflectReverse,
    /// `<S, R, F>`: the full group.
    Full,
}

impl DirBouquetGroup {
    pub const ALL: [DirBouquetGroup; 5] = [
        DirBouquetGroup::Shifts,
        DirBouquetGroup::Reflect,
        DirBouquetGroup::Reverse,
        DirBouquetGroup::ReflectReverse,
        DirBouquetGroup::Full,
    ];

    pub fn coset_reps(self) -> &'static [DirCoset] {
        use DirCoset::*;
        match self {
            DirBouquetGroup::Shifts => &[I],
            DirBouquetGroup::Reflect => &[I, R],
            DirBouquetGroup::Reverse => &[I, F],
            DirBouquetGroup::ReflectReverse => &[I, RF],
            DirBouquetGroup::Full => &DirCoset::ALL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DirBouquetGroup::Shifts => "<S>",
            DirBouquetGroup::Reflect => "<S,R>",
            DirBouquetGroup::Reverse => "<S,F>",
            DirBouquetGroup::ReflectReverse => "<S,RF>",
            DirBouquetGroup::Full => "<S,R,F>",
        }
    }
}

/// One of the named symmetry groups, across all three object families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupSpec {
    Dipole(DipoleGroup),
    Bouquet(BouquetGroup),
    DirBouquet(DirBouquetGroup),
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::Dipole(g) => write!(f, "dipole {}", g.name()),
            GroupSpec::Bouquet(g) => write!(f, "bouquet {}", g.name()),
            GroupSpec::DirBouquet(g) => write!(f, "directed bouquet {}", g.name()),
        }
    }
}

/// All `n^2 * |cosets|` normal-form elements of a dipole subgroup.
pub fn expand_dipole(group: DipoleGroup, n: usize) -> Vec<DipoleSym> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(n * n * group.coset_reps().len());
    for &coset in group.coset_reps() {
        let (p, q, s) = coset.flags();
        for h in 0..n {
            for k in 0..n {
                out.push(DipoleSym::new(n, h, k, p, q, s));
            }
        }
    }
    out
}

/// All `2n * |cosets|` normal-form elements of a bouquet group.
pub fn expand_bouquet(group: BouquetGroup, n: usize) -> Vec<BouquetSym> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(2 * n * group.coset_reps().len());
    for &coset in group.coset_reps() {
        for h in 0..2 * n {
            out.push(BouquetSym::new(n, h, coset == BouquetCoset::R));
        }
    }
    out
}

/// All `2n * |cosets|` normal-form elements of a directed-bouquet group.
pub fn expand_dirbouquet(group: DirBouquetGroup, n: usize) -> Vec<DirBouquetSym> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(2 * n * group.coset_reps().len());
    for &coset in group.coset_reps() {
        let (r, f) = match coset {
            DirCoset::I => (false, false),
            DirCoset::R => (true, false),
            DirCoset::F => (false, true),
            DirCoset::RF => (true, true),
        };
        for h in 0..2 * n {
            out.push(DirBouquetSym::new(n, h, r, f));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::{gen_colored_matchings, gen_dipoles, gen_signed_colored_matchings, Sign};
    use std::collections::BTreeSet;

    fn sym(n: usize, h: usize, k: usize, p: bool, q: bool, s: bool) -> DipoleSym {
        DipoleSym::new(n, h, k, p, q, s)
    }

    /// Check `a == b` as actions on every labeled dipole of size n.
    fn same_action(a: &DipoleSym, b: &DipoleSym, n: usize) -> bool {
        gen_dipoles(n).all(|x| act_dipole(a, &x) == act_dipole(b, &x))
    }

    #[test]
    fn identity_acts_trivially() {
        for n in 1..=5 {
            let id = DipoleSym::identity(n);
            for x in gen_dipoles(n) {
                assert_eq!(act_dipole(&id, &x), x);
            }
        }
    }

    #[test]
    fn shift_of_identity_dipole() {
        // S1 applied to the identity permutation adds one to every image.
        let g = sym(3, 0, 1, false, false, false);
        let x = crate::objects::LabeledDipole::identity(3);
        assert_eq!(act_dipole(&g, &x).images(), &[1, 2, 0]);
    }

    #[test]
    fn vertex_swap_with_shifts_matches_worked_example() {
        // pi2 = S0^2 S1^3 X (pi1) for pi1 = [3,2,4,0,1].
        let g = sym(5, 2, 3, false, false, true);
        let x = crate::objects::LabeledDipole::from_images(vec![3, 2, 4, 0, 1]).unwrap();
        assert_eq!(act_dipole(&g, &x).images(), &[3, 0, 1, 2, 4]);
    }

    #[test]
    fn dipole_group_relations_hold_as_actions() {
        for n in 1..=6usize {
            let s0 = sym(n, 1, 0, false, false, false);
            let s1 = sym(n, 0, 1, false, false, false);
            let r0 = sym(n, 0, 0, true, false, false);
            let r1 = sym(n, 0, 0, false, true, false);
            let x = sym(n, 0, 0, false, false, true);
            let id = DipoleSym::identity(n);

            let pow = |g: &DipoleSym, e: usize| -> DipoleSym {
                let mut acc = id;
                for _ in 0..e {
                    acc = g.compose(&acc);
                }
                acc
            };

            assert!(same_action(&pow(&s0, n), &id, n));
            assert!(same_action(&pow(&s1, n), &id, n));
            assert!(same_action(&pow(&r0, 2), &id, n));
            assert!(same_action(&pow(&r1, 2), &id, n));
            assert!(same_action(&pow(&x, 2), &id, n));
            // S0 and R0 commute with S1 and R1
            for a in [s0, r0] {
                for b in [s1, r1] {
                    assert!(same_action(&a.compose(&b), &b.compose(&a), n));
                }
            }
            // R0 S0 = S0^-1 R0 and R1 S1 = S1^-1 R1
            assert!(same_action(&r0.compose(&s0), &s0.inverse().compose(&r0), n));
            assert!(same_action(&r1.compose(&s1), &s1.inverse().compose(&r1), n));
            // X S0 = S1 X and X R0 = R1 X
            assert!(same_action(&x.compose(&s0), &s1.compose(&x), n));
            assert!(same_action(&x.compose(&r0), &r1.compose(&x), n));
        }
    }

    #[test]
    fn composition_matches_pointwise_action() {
        for n in 1..=4usize {
            let elements = expand_dipole(DipoleGroup::Full, n);
            let objects: Vec<_> = gen_dipoles(n).collect();
            for (i, a) in elements.iter().enumerate() {
                for b in elements.iter().skip(i % 3).step_by(3) {
                    let composed = a.compose(b);
                    for x in objects.iter().step_by(2) {
                        assert_eq!(act_dipole(&composed, x), act_dipole(a, &act_dipole(b, x)));
                    }
                }
            }
        }
    }

    #[test]
    fn composition_is_associative() {
        let elements = expand_dipole(DipoleGroup::Full, 4);
        for a in elements.iter().step_by(7) {
            for b in elements.iter().step_by(11) {
                for c in elements.iter().step_by(13) {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn inverse_round_trips() {
        for n in 1..=5usize {
            for g in expand_dipole(DipoleGroup::Full, n) {
                assert_eq!(g.compose(&g.inverse()), DipoleSym::identity(n));
                for x in gen_dipoles(n).step_by(3) {
                    assert_eq!(act_dipole(&g, &act_dipole(&g.inverse(), &x)), x);
                }
            }
        }
        for n in 1..=3usize {
            for g in expand_dirbouquet(DirBouquetGroup::Full, n) {
                assert_eq!(g.compose(&g.inverse()), DirBouquetSym::identity(n));
                for x in gen_signed_colored_matchings(n, 2).unwrap().step_by(5) {
                    assert_eq!(act_dirbouquet(&g, &act_dirbouquet(&g.inverse(), &x)), x);
                }
            }
        }
    }

    #[test]
    fn distinct_normal_forms_act_distinctly_on_probe() {
        for n in 3..=6usize {
            let elements = expand_dipole(DipoleGroup::Full, n);
            let probes: BTreeSet<(u64, u64)> = elements.iter().map(|g| g.probe()).collect();
            assert_eq!(probes.len(), elements.len(), "n={n}");
        }
    }

    #[test]
    fn expand_sizes() {
        assert_eq!(expand_dipole(DipoleGroup::Shifts, 3).len(), 9);
        assert_eq!(expand_dipole(DipoleGroup::Full, 3).len(), 72);
        assert_eq!(expand_bouquet(BouquetGroup::ShiftsReflect, 3).len(), 12);
        for group in DipoleGroup::ALL {
            let elements = expand_dipole(group, 4);
            assert_eq!(elements.len(), 16 * group.coset_reps().len());
            let distinct: BTreeSet<_> = elements
                .iter()
                .map(|g| (g.h, g.k, g.p, g.q, g.s))
                .collect();
            assert_eq!(distinct.len(), elements.len());
        }
        for group in DirBouquetGroup::ALL {
            assert_eq!(
                expand_dirbouquet(group, 3).len(),
                6 * group.coset_reps().len()
            );
        }
    }

    #[test]
    fn bouquet_shift_and_reflection_examples() {
        let m = crate::objects::ColoredMatching::from_parts(
            vec![1, 0, 3, 2],
            &[(0, 0), (2, 0)],
            1,
        )
        .unwrap();
        let shift = BouquetSym::new(2, 1, false);
        let shifted = act_bouquet(&shift, &m);
        // {{0,1},{2,3}} -> {{1,2},{3,0}}
        assert_eq!(shifted.partner(), &[3, 2, 1, 0]);
        let reflect = BouquetSym::new(2, 0, true);
        let reflected = act_bouquet(&reflect, &m);
        // {{0,1},{2,3}} -> {{0,3},{2,1}}
        assert_eq!(reflected.partner(), &[3, 2, 1, 0]);

        let id = BouquetSym::identity(2);
        assert_eq!(act_bouquet(&id, &m), m);
    }

    #[test]
    fn bouquet_group_relations_hold_as_actions() {
        for n in 1..=5usize {
            let s = BouquetSym::new(n, 1, false);
            let r = BouquetSym::new(n, 0, true);
            let id = BouquetSym::identity(n);
            let mut s_pow = id;
            for _ in 0..2 * n {
                s_pow = s.compose(&s_pow);
            }
            let same = |a: &BouquetSym, b: &BouquetSym| {
                gen_colored_matchings(n, 2)
                    .unwrap()
                    .all(|x| act_bouquet(a, &x) == act_bouquet(b, &x))
            };
            assert!(same(&s_pow, &id));
            assert!(same(&r.compose(&r), &id));
            assert!(same(&r.compose(&s), &s.inverse().compose(&r)));
        }
    }

    #[test]
    fn dirbouquet_sign_rules() {
        let x = crate::objects::SignedColoredMatching::from_assignment(
            &[0, 1],
            &[0, 0],
            1,
            Sign::Plus,
        )
        .unwrap();
        // F alone flips the sign and leaves the matching alone.
        let f = DirBouquetSym::new(2, 0, false, true);
        let fx = act_dirbouquet(&f, &x);
        assert_eq!(fx.partner(), x.partner());
        assert_eq!(fx.epsilon(), Sign::Minus);

        // S with odd shift flips the sign.
        let s = DirBouquetSym::new(2, 1, false, false);
        let sx = act_dirbouquet(&s, &x);
        assert_eq!(sx.epsilon(), Sign::Minus);
        // {{0,1},{2,3}} -> {{1,2},{3,0}}
        assert_eq!(sx.partner(), &[3, 2, 1, 0]);

        // R preserves parity hence the sign; F commutes with S and R.
        let r = DirBouquetSym::new(2, 0, true, false);
        assert_eq!(act_dirbouquet(&r, &x).epsilon(), Sign::Plus);
        for g in expand_dirbouquet(DirBouquetGroup::Full, 2) {
            let gf = g.compose(&f);
            let fg = f.compose(&g);
            for obj in gen_signed_colored_matchings(2, 2).unwrap() {
                assert_eq!(act_dirbouquet(&gf, &obj), act_dirbouquet(&fg, &obj));
            }
        }
    }

    #[test]
    fn dirbouquet_even_shift_on_one_edge_is_identity() {
        // n=1: S^2 relabels by +2 = 0 (mod 2) and preserves the sign.
        let g = DirBouquetSym::new(1, 2, false, false);
        for x in gen_signed_colored_matchings(1, 1).unwrap() {
            assert_eq!(act_dirbouquet(&g, &x), x);
        }
    }
}
