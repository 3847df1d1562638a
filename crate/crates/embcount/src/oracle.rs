//! Brute-force ground truth: fixed-point counts, coset averages, and orbit
//! counts computed two independent ways.
//!
//! The oracle generates every labeled object of a configuration, applies
//! every element of the chosen symmetry group, and tallies in one pass:
//!
//! * per-coset fixed-point sums, giving the Burnside orbit count
//!   `sum |Fix| / |group|`;
//! * how many objects are the earliest (minimal canonical key) in their own
//!   orbit, giving the orbit count a second, independent way.
//!
//! The object stream is processed in chunks that may be tallied in parallel;
//! merging is plain addition, so the result is bit-identical regardless of
//! partitioning. Everything is exact; configurations beyond the caps are
//! refused rather than estimated.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::actions::{
    act_dipole_into, expand_bouquet, expand_dipole, expand_dirbouquet, BouquetCoset, BouquetGroup,
    BouquetSym, DipoleCoset, DipoleGroup, DipoleSym, DirBouquetGroup, DirBouquetSym, DirCoset,
    GroupSpec,
};
use crate::exactmath::exact_div_u64;
use crate::objects::{
    gen_colored_matchings, gen_dipoles, gen_signed_colored_matchings, ColoredMatching,
    LabeledDipole, SignedColoredMatching,
};
use crate::Error;

const DEFAULT_CHUNK: usize = 4096;

/// Enumeration limits; `orbit_count` refuses configurations beyond them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    pub dipole_max_n: usize,
    pub bouquet_max_n: usize,
    pub bouquet_max_k: u8,
    pub dir_max_n: usize,
    pub dir_max_k: u8,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            dipole_max_n: 8,
            bouquet_max_n: 6,
            bouquet_max_k: 3,
            dir_max_n: 5,
            dir_max_k: 2,
        }
    }
}

impl OracleCaps {
    /// No limits; orbit counting then runs whatever it is asked for.
    pub fn unlimited() -> OracleCaps {
        OracleCaps {
            dipole_max_n: usize::MAX,
            bouquet_max_n: usize::MAX,
            bouquet_max_k: u8::MAX,
            dir_max_n: usize::MAX,
            dir_max_k: u8::MAX,
        }
    }

    pub fn check(&self, spec: GroupSpec, n: usize, k: u8) -> Result<(), Error> {
        let ok = match spec {
            GroupSpec::Dipole(_) => n <= self.dipole_max_n,
            GroupSpec::Bouquet(_) => n <= self.bouquet_max_n && k <= self.bouquet_max_k,
            GroupSpec::DirBouquet(_) => n <= self.dir_max_n && k <= self.dir_max_k,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::CapExceeded(format!(
                "{spec} at n={n}, k={k} (raise the caps explicitly to run this)"
            )))
        }
    }
}

/// The result of counting orbits both ways.
#[derive(Debug, Clone)]
pub struct OrbitCountReport {
    pub spec: GroupSpec,
    pub n: usize,
    pub k: u8,
    pub object_count: BigUint,
    /// `sum |Fix(g)| / |group|`.
    pub orbit_count_burnside: BigUint,
    /// Number of objects that are the lexicographically earliest in their
    /// orbit.
    pub orbit_count_canonical: BigUint,
    /// Fixed-point sums per right coset of the shift subgroup, keyed by the
    /// coset label.
    pub per_coset_fixed_sums: BTreeMap<String, BigUint>,
}

impl OrbitCountReport {
    fn trivial(spec: GroupSpec, n: usize, k: u8) -> OrbitCountReport {
        let one = BigUint::from(1u32);
        let mut sums = BTreeMap::new();
        sums.insert("I".to_string(), one.clone());
        OrbitCountReport {
            spec,
            n,
            k,
            object_count: one.clone(),
            orbit_count_burnside: one.clone(),
            orbit_count_canonical: one,
            per_coset_fixed_sums: sums,
        }
    }

    /// Fixed-point sum of one coset, if the group contains it.
    pub fn coset_sum(&self, label: &str) -> Option<&BigUint> {
        self.per_coset_fixed_sums.get(label)
    }
}

#[derive(Clone)]
struct Tally {
    objects: u64,
    canonical: u64,
    fixed: Vec<u64>,
}

impl Tally {
    fn new(cosets: usize) -> Tally {
        Tally {
            objects: 0,
            canonical: 0,
            fixed: vec![0; cosets],
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.objects += other.objects;
        self.canonical += other.canonical;
        for (a, b) in self.fixed.iter_mut().zip(other.fixed) {
            *a += b;
        }
        self
    }
}

/// One pass over the object stream: for every object apply every group
/// element, tallying per-coset stabilizer hits and whether the object is
/// minimal in its orbit.
fn run_tally<O, A, F>(
    objects: impl Iterator<Item = O>,
    actions: &[(usize, A)],
    apply: F,
    cosets: usize,
    chunk_size: usize,
) -> Tally
where
    O: Clone + Ord + Send + Sync,
    A: Sync,
    F: Fn(&A, &O, &mut O) + Sync,
{
    let mut total = Tally::new(cosets);
    let mut stream = objects;
    loop {
        let chunk: Vec<O> = stream.by_ref().take(chunk_size).collect();
        if chunk.is_empty() {
            break;
        }
        let partial = chunk
            .par_iter()
            .fold(
                || (None::<O>, Tally::new(cosets)),
                |(mut scratch, mut tally), x| {
                    let buf = scratch.get_or_insert_with(|| x.clone());
                    let mut minimal = true;
                    for (coset, action) in actions {
                        apply(action, x, buf);
                        match (*buf).cmp(x) {
                            std::cmp::Ordering::Equal => tally.fixed[*coset] += 1,
                            std::cmp::Ordering::Less => minimal = false,
                            std::cmp::Ordering::Greater => {}
                        }
                    }
                    tally.objects += 1;
                    if minimal {
                        tally.canonical += 1;
                    }
                    (scratch, tally)
                },
            )
            .map(|(_, tally)| tally)
            .reduce(|| Tally::new(cosets), Tally::merge);
        total = total.merge(partial);
    }
    total
}

fn report_from_tally(
    spec: GroupSpec,
    n: usize,
    k: u8,
    labels: &[&'static str],
    group_order: u64,
    tally: Tally,
) -> OrbitCountReport {
    let total: u64 = tally.fixed.iter().sum();
    let burnside = exact_div_u64(BigUint::from(total), group_order)
        .expect("Burnside sum must be divisible by the group order");
    let per_coset_fixed_sums = labels
        .iter()
        .zip(&tally.fixed)
        .map(|(label, &sum)| (label.to_string(), BigUint::from(sum)))
        .collect();
    OrbitCountReport {
        spec,
        n,
        k,
        object_count: BigUint::from(tally.objects),
        orbit_count_burnside: burnside,
        orbit_count_canonical: BigUint::from(tally.canonical),
        per_coset_fixed_sums,
    }
}

/// Relabel a colored matching through a label table.
fn apply_table_matching(table: &[u8], x: &ColoredMatching, out: &mut ColoredMatching) {
    let two_n = x.partner.len();
    out.partner.resize(two_n, 0);
    out.color.resize(two_n, 0);
    out.k = x.k;
    for a in 0..two_n {
        let ta = table[a] as usize;
        out.partner[ta] = table[x.partner[a] as usize];
        out.color[ta] = x.color[a];
    }
}

struct SignedAction {
    table: Vec<u8>,
    flip: bool,
}

fn apply_signed(action: &SignedAction, x: &SignedColoredMatching, out: &mut SignedColoredMatching) {
    let two_n = x.partner.len();
    out.partner.resize(two_n, 0);
    out.color.resize(two_n, 0);
    out.k = x.k;
    for a in 0..two_n {
        let ta = action.table[a] as usize;
        out.partner[ta] = action.table[x.partner[a] as usize];
        out.color[ta] = x.color[a];
    }
    out.epsilon = if action.flip {
        x.epsilon.flipped()
    } else {
        x.epsilon
    };
}

fn dipole_orbit_report(group: DipoleGroup, n: usize, chunk: usize) -> OrbitCountReport {
    let spec = GroupSpec::Dipole(group);
    if n == 0 {
        return OrbitCountReport::trivial(spec, n, 1);
    }
    let reps = group.coset_reps();
    let labels: Vec<&'static str> = reps.iter().map(|c| c.label()).collect();
    let coset_index = |c: DipoleCoset| reps.iter().position(|&r| r == c).unwrap();
    let actions: Vec<(usize, DipoleSym)> = expand_dipole(group, n)
        .into_iter()
        .map(|g| (coset_index(g.coset()), g))
        .collect();
    let order = actions.len() as u64;
    let tally = run_tally(
        gen_dipoles(n),
        &actions,
        |g, x, out| act_dipole_into(g, x, out),
        reps.len(),
        chunk,
    );
    report_from_tally(spec, n, 1, &labels, order, tally)
}

fn bouquet_orbit_report(
    group: BouquetGroup,
    n: usize,
    k: u8,
    chunk: usize,
) -> Result<OrbitCountReport, Error> {
    let spec = GroupSpec::Bouquet(group);
    if n == 0 {
        return Ok(OrbitCountReport::trivial(spec, n, k));
    }
    let reps = group.coset_reps();
    let labels: Vec<&'static str> = reps.iter().map(|c| c.label()).collect();
    let coset_index = |c: BouquetCoset| reps.iter().position(|&r| r == c).unwrap();
    let actions: Vec<(usize, Vec<u8>)> = expand_bouquet(group, n)
        .iter()
        .map(|g| (coset_index(g.coset()), g.label_table()))
        .collect();
    let order = actions.len() as u64;
    let objects = gen_colored_matchings(n, k)?;
    let tally = run_tally(
        objects,
        &actions,
        |table: &Vec<u8>, x, out| apply_table_matching(table, x, out),
        reps.len(),
        chunk,
    );
    Ok(report_from_tally(spec, n, k, &labels, order, tally))
}

fn dirbouquet_orbit_report(
    group: DirBouquetGroup,
    n: usize,
    k: u8,
    chunk: usize,
) -> Result<OrbitCountReport, Error> {
    let spec = GroupSpec::DirBouquet(group);
    if n == 0 {
        return Ok(OrbitCountReport::trivial(spec, n, k));
    }
    let reps = group.coset_reps();
    let labels: Vec<&'static str> = reps.iter().map(|c| c.label()).collect();
    let coset_index = |c: DirCoset| reps.iter().position(|&r| r == c).unwrap();
    let actions: Vec<(usize, SignedAction)> = expand_dirbouquet(group, n)
        .iter()
        .map(|g| {
            (
                coset_index(g.coset()),
                SignedAction {
                    table: g.label_table(),
                    flip: g.flips_sign(),
                },
            )
        })
        .collect();
    let order = actions.len() as u64;
    let objects = gen_signed_colored_matchings(n, k)?;
    let tally = run_tally(objects, &actions, apply_signed, reps.len(), chunk);
    Ok(report_from_tally(spec, n, k, &labels, order, tally))
}

pub(crate) fn orbit_count_with_chunk(
    spec: GroupSpec,
    n: usize,
    k: u8,
    chunk: usize,
) -> Result<OrbitCountReport, Error> {
    match spec {
        GroupSpec::Dipole(group) => Ok(dipole_orbit_report(group, n, chunk)),
        GroupSpec::Bouquet(group) => bouquet_orbit_report(group, n, k, chunk),
        GroupSpec::DirBouquet(group) => dirbouquet_orbit_report(group, n, k, chunk),
    }
}

/// Counts the orbits of the group on its object family, by Burnside
/// averaging and by minimal-representative selection, with per-coset
/// fixed-point sums. `k` is ignored for dipoles.
///
/// Refuses configurations beyond `caps`.
pub fn orbit_count(
    spec: GroupSpec,
    n: usize,
    k: u8,
    caps: &OracleCaps,
) -> Result<OrbitCountReport, Error> {
    caps.check(spec, n, k)?;
    orbit_count_with_chunk(spec, n, k, DEFAULT_CHUNK)
}

/// Exact number of labeled dipoles fixed by one group element.
pub fn fixed_count_dipole(g: &DipoleSym) -> BigUint {
    let n = g.n();
    let actions = [(0usize, *g)];
    let tally = run_tally(
        gen_dipoles(n),
        &actions,
        |g, x, out| act_dipole_into(g, x, out),
        1,
        DEFAULT_CHUNK,
    );
    BigUint::from(tally.fixed[0])
}

/// Exact number of k-colored matchings fixed by one group element.
pub fn fixed_count_bouquet(g: &BouquetSym, n: usize, k: u8) -> Result<BigUint, Error> {
    let actions = [(0usize, g.label_table())];
    let tally = run_tally(
        gen_colored_matchings(n, k)?,
        &actions,
        |table: &Vec<u8>, x, out| apply_table_matching(table, x, out),
        1,
        DEFAULT_CHUNK,
    );
    Ok(BigUint::from(tally.fixed[0]))
}

/// Exact number of signed colored matchings fixed by one group element.
pub fn fixed_count_dirbouquet(g: &DirBouquetSym, n: usize, k: u8) -> Result<BigUint, Error> {
    let actions = [(
        0usize,
        SignedAction {
            table: g.label_table(),
            flip: g.flips_sign(),
        },
    )];
    let tally = run_tally(gen_signed_colored_matchings(n, k)?, &actions, apply_signed, 1, DEFAULT_CHUNK);
    Ok(BigUint::from(tally.fixed[0]))
}

/// Average fixed-point count over the dipole coset `Omega T` (an `n^2`
/// element coset of the shift subgroup), by explicit enumeration. The
/// average is exact by construction; a remainder is an implementation bug.
pub fn dipole_coset_average(coset: DipoleCoset, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    let actions: Vec<(usize, DipoleSym)> = expand_dipole(DipoleGroup::Full, n)
        .into_iter()
        .filter(|g| g.coset() == coset)
        .map(|g| (0usize, g))
        .collect();
    assert_eq!(actions.len(), n * n);
    let tally = run_tally(
        gen_dipoles(n),
        &actions,
        |g, x, out| act_dipole_into(g, x, out),
        1,
        DEFAULT_CHUNK,
    );
    exact_div_u64(BigUint::from(tally.fixed[0]), (n * n) as u64)
        .expect("coset fixed-point average must be integral")
}

/// Average fixed-point count over the bouquet coset `Omega T` (a `2n`
/// element coset of the rotation subgroup).
pub fn bouquet_coset_average(coset: BouquetCoset, n: usize, k: u8) -> Result<BigUint, Error> {
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    let actions: Vec<(usize, Vec<u8>)> = expand_bouquet(BouquetGroup::ShiftsReflect, n)
        .iter()
        .filter(|g| g.coset() == coset)
        .map(|g| (0usize, g.label_table()))
        .collect();
    assert_eq!(actions.len(), 2 * n);
    let tally = run_tally(
        gen_colored_matchings(n, k)?,
        &actions,
        |table: &Vec<u8>, x, out| apply_table_matching(table, x, out),
        1,
        DEFAULT_CHUNK,
    );
    Ok(exact_div_u64(BigUint::from(tally.fixed[0]), 2 * n as u64)
        .expect("coset fixed-point average must be integral"))
}

/// Average fixed-point count over the directed-bouquet coset `Omega T`.
pub fn dirbouquet_coset_average(coset: DirCoset, n: usize, k: u8) -> Result<BigUint, Error> {
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    let actions: Vec<(usize, SignedAction)> = expand_dirbouquet(DirBouquetGroup::Full, n)
        .iter()
        .filter(|g| g.coset() == coset)
        .map(|g| {
            (
                0usize,
                SignedAction {
                    table: g.label_table(),
                    flip: g.flips_sign(),
                },
            )
        })
        .collect();
    assert_eq!(actions.len(), 2 * n);
    let tally = run_tally(gen_signed_colored_matchings(n, k)?, &actions, apply_signed, 1, DEFAULT_CHUNK);
    Ok(exact_div_u64(BigUint::from(tally.fixed[0]), 2 * n as u64)
        .expect("coset fixed-point average must be integral"))
}
