//! Cross-checks every closed-form count against the brute-force oracle.
//!
//! For each selected symmetry group and each `(n, k)` in range, the oracle
//! report is compared three ways:
//!
//! * the Burnside orbit count must equal the family's closed form;
//! * the canonical-representative orbit count must equal the Burnside count;
//! * each per-coset fixed-point average must equal the matching coset
//!   average formula (which also exercises the conjugate-coset equalities,
//!   since aliased labels resolve to the same formula).
//!
//! Default ranges are the oracle caps' comfortable interior: dipoles to
//! `n = 7` over all ten subgroups, bouquets to `n = 6` with `k <= 3`,
//! directed bouquets to `n = 5` with `k <= 2`.

use num_bigint::BigUint;

use crate::actions::{
    BouquetCoset, BouquetGroup, DipoleCoset, DipoleGroup, DirBouquetGroup, DirCoset, GroupSpec,
};
use crate::bouquets::{beta, bouquet_count, BouquetFamily};
use crate::dipoles::{delta, dipole_count, DipoleFamily};
use crate::dirbouquets::{alpha, dirbouquet_count, DirFamily};
use crate::exactmath::exact_div_u64;
use crate::oracle::{orbit_count, OracleCaps, OrbitCountReport};
use crate::registry::{BaseFamily, Family, PairId};
use crate::Error;

/// Scope and limits for a verification run.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Restrict to these families (splits select their member families);
    /// `None` verifies everything.
    pub families: Option<Vec<Family>>,
    /// Cap `n` for every kind (defaults: dipole 7, bouquet 6, directed 5).
    pub max_n: Option<usize>,
    /// Cap `k` for the colored kinds (defaults: bouquet 3, directed 2).
    pub max_k: Option<u8>,
    /// Allow ranges beyond the default oracle caps.
    pub override_caps: bool,
    /// Test hook: perturb every expected orbit count so that each cell
    /// reports a mismatch.
    pub inject_fault: bool,
}

/// Outcome of one `(group, n, k)` cell.
#[derive(Debug, Clone)]
pub struct CellOutcome {
    pub label: String,
    pub mismatches: Vec<String>,
    pub checks: usize,
}

impl CellOutcome {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn expect_eq(&mut self, what: &str, expected: &BigUint, got: &BigUint) {
        self.checks += 1;
        if expected != got {
            let line = format!("{}: {what}: expected {expected}, got {got}", self.label);
            self.mismatches.push(line);
        }
    }
}

/// Results of a verification run.
#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub cells: Vec<CellOutcome>,
}

impl VerifyReport {
    pub fn checks(&self) -> usize {
        self.cells.iter().map(|c| c.checks).sum()
    }

    pub fn mismatches(&self) -> usize {
        self.cells.iter().map(|c| c.mismatches.len()).sum()
    }

    pub fn all_ok(&self) -> bool {
        self.mismatches() == 0
    }
}

fn dipole_family_for(group: DipoleGroup) -> DipoleFamily {
    match group {
        DipoleGroup::Shifts => DipoleFamily::D1,
        DipoleGroup::Swap | DipoleGroup::SwapRevBoth => DipoleFamily::D2,
        DipoleGroup::RevBoth => DipoleFamily::D3,
        DipoleGroup::RevBothSwap => DipoleFamily::D4,
        DipoleGroup::Rev0Rev1 => DipoleFamily::D5,
        DipoleGroup::Full => DipoleFamily::D6,
        DipoleGroup::Rev1 | DipoleGroup::Rev0 => DipoleFamily::D7,
        DipoleGroup::QuarterTurn => DipoleFamily::D8,
    }
}

fn dipole_groups_for(family: DipoleFamily) -> &'static [DipoleGroup] {
    match family {
        DipoleFamily::D1 => &[DipoleGroup::Shifts],
        DipoleFamily::D2 => &[DipoleGroup::Swap, DipoleGroup::SwapRevBoth],
        DipoleFamily::D3 => &[DipoleGroup::RevBoth],
        DipoleFamily::D4 => &[DipoleGroup::RevBothSwap],
        DipoleFamily::D5 => &[DipoleGroup::Rev0Rev1],
        DipoleFamily::D6 => &[DipoleGroup::Full],
        DipoleFamily::D7 => &[DipoleGroup::Rev1, DipoleGroup::Rev0],
        DipoleFamily::D8 => &[DipoleGroup::QuarterTurn],
    }
}

fn bouquet_family_for(group: BouquetGroup) -> BouquetFamily {
    match group {
        BouquetGroup::Shifts => BouquetFamily::B1,
        BouquetGroup::ShiftsReflect => BouquetFamily::B2,
    }
}

fn bouquet_groups_for(family: BouquetFamily) -> &'static [BouquetGroup] {
    match family {
        BouquetFamily::B1 => &[BouquetGroup::Shifts],
        BouquetFamily::B2 => &[BouquetGroup::ShiftsReflect],
        // the generic and nonorientable families are combinations of B1/B2
        // at a doubled color count; their oracle backing is the same pair
        BouquetFamily::B3 | BouquetFamily::B4 => BouquetGroup::ALL.as_slice(),
    }
}

fn dir_family_for(group: DirBouquetGroup) -> DirFamily {
    match group {
        DirBouquetGroup::Shifts => DirFamily::A1,
        DirBouquetGroup::Reflect => DirFamily::A2,
        DirBouquetGroup::Reverse => DirFamily::A3,
        DirBouquetGroup::Full => DirFamily::A4,
        DirBouquetGroup::ReflectReverse => DirFamily::A5,
    }
}

fn dir_groups_for(family: DirFamily) -> &'static [DirBouquetGroup] {
    match family {
        DirFamily::A1 => &[DirBouquetGroup::Shifts],
        DirFamily::A2 | DirFamily::A6 | DirFamily::A7 => &[DirBouquetGroup::Reflect],
        DirFamily::A3 => &[DirBouquetGroup::Reverse],
        DirFamily::A4 | DirFamily::A8 | DirFamily::A9 => &[DirBouquetGroup::Full],
        DirFamily::A5 => &[DirBouquetGroup::ReflectReverse],
    }
}

/// The set of groups a verification scope selects.
#[derive(Debug, Default)]
struct Scope {
    dipole: Vec<DipoleGroup>,
    bouquet: Vec<BouquetGroup>,
    dir: Vec<DirBouquetGroup>,
}

fn scope_for(families: &Option<Vec<Family>>) -> Scope {
    let mut scope = Scope::default();
    let mut add_base = |base: &BaseFamily| match base {
        BaseFamily::Dipole(f) => {
            for &g in dipole_groups_for(*f) {
                if !scope.dipole.contains(&g) {
                    scope.dipole.push(g);
                }
            }
        }
        BaseFamily::Bouquet(f) => {
            for &g in bouquet_groups_for(*f) {
                if !scope.bouquet.contains(&g) {
                    scope.bouquet.push(g);
                }
            }
        }
        BaseFamily::Dir(f) => {
            for &g in dir_groups_for(*f) {
                if !scope.dir.contains(&g) {
                    scope.dir.push(g);
                }
            }
        }
    };
    match families {
        None => {
            return Scope {
                dipole: DipoleGroup::ALL.to_vec(),
                bouquet: BouquetGroup::ALL.to_vec(),
                dir: DirBouquetGroup::ALL.to_vec(),
            }
        }
        Some(list) => {
            for family in list {
                match family {
                    Family::Base(base) => add_base(base),
                    Family::Split(PairId::Dipole(pair), _) => {
                        let (a, b) = pair.members();
                        add_base(&BaseFamily::Dipole(a));
                        add_base(&BaseFamily::Dipole(b));
                    }
                    Family::Split(PairId::Bouquet, _) => {
                        add_base(&BaseFamily::Bouquet(BouquetFamily::B1));
                        add_base(&BaseFamily::Bouquet(BouquetFamily::B2));
                    }
                    Family::Split(PairId::Dir(pair), _) => {
                        let (a, b) = pair.members();
                        add_base(&BaseFamily::Dir(a));
                        add_base(&BaseFamily::Dir(b));
                    }
                }
            }
        }
    }
    scope
}

fn check_cell<CosetFormula>(
    report: &OrbitCountReport,
    family_token: &str,
    closed_form: BigUint,
    coset_size: u64,
    coset_formula: CosetFormula,
    inject_fault: bool,
) -> CellOutcome
where
    CosetFormula: Fn(&str) -> Option<BigUint>,
{
    let label = if report.k == 1 {
        format!("{} n={}", report.spec, report.n)
    } else {
        format!("{} n={} k={}", report.spec, report.n, report.k)
    };
    let mut outcome = CellOutcome {
        label,
        mismatches: Vec::new(),
        checks: 0,
    };
    let mut check = CellCheck {
        outcome: &mut outcome,
    };
    let expected = if inject_fault {
        closed_form + 1u32
    } else {
        closed_form
    };
    check.expect_eq(
        &format!("{family_token} closed form vs Burnside orbit count"),
        &expected,
        &report.orbit_count_burnside,
    );
    check.expect_eq(
        "Burnside vs canonical-representative orbit count",
        &report.orbit_count_burnside,
        &report.orbit_count_canonical,
    );
    if report.n > 0 {
        for (coset_label, sum) in &report.per_coset_fixed_sums {
            match exact_div_u64(sum.clone(), coset_size) {
                Ok(average) => {
                    if let Some(expected_average) = coset_formula(coset_label) {
                        check.expect_eq(
                            &format!("coset average over {coset_label}"),
                            &expected_average,
                            &average,
                        );
                    }
                }
                Err(_) => {
                    check.outcome.checks += 1;
                    check.outcome.mismatches.push(format!(
                        "{}: coset {coset_label} fixed sum {sum} is not divisible by {coset_size}",
                        check.outcome.label
                    ));
                }
            }
        }
    }
    outcome
}

fn dipole_coset_by_label(label: &str) -> Option<DipoleCoset> {
    DipoleCoset::ALL.iter().copied().find(|c| c.label() == label)
}

fn bouquet_coset_by_label(label: &str) -> Option<BouquetCoset> {
    BouquetCoset::ALL.iter().copied().find(|c| c.label() == label)
}

fn dir_coset_by_label(label: &str) -> Option<DirCoset> {
    DirCoset::ALL.iter().copied().find(|c| c.label() == label)
}

/// Runs the verification described by `options`, returning a cell-by-cell
/// report. Errors out (rather than reporting a mismatch) only when a
/// requested range exceeds the oracle caps and the override flag is off.
pub fn run_verify(options: &VerifyOptions) -> Result<VerifyReport, Error> {
    let caps = if options.override_caps {
        OracleCaps::unlimited()
    } else {
        OracleCaps::default()
    };
    let scope = scope_for(&options.families);
    let mut report = VerifyReport::default();

    let dipole_max_n = options.max_n.unwrap_or(7);
    for &group in &scope.dipole {
        let family = dipole_family_for(group);
        for n in 0..=dipole_max_n {
            let oracle_report = orbit_count(GroupSpec::Dipole(group), n, 1, &caps)?;
            let closed = dipole_count(family, n as u64);
            report.cells.push(check_cell(
                &oracle_report,
                family.token(),
                closed,
                (n * n) as u64,
                |label| dipole_coset_by_label(label).map(|c| delta(c, n as u64)),
                options.inject_fault,
            ));
        }
    }

    let bouquet_max_n = options.max_n.unwrap_or(6);
    let bouquet_max_k = options.max_k.unwrap_or(3);
    for &group in &scope.bouquet {
        let family = bouquet_family_for(group);
        for n in 0..=bouquet_max_n {
            for k in 1..=bouquet_max_k {
                let oracle_report = orbit_count(GroupSpec::Bouquet(group), n, k, &caps)?;
                let closed = bouquet_count(family, n as u64, k as u64);
                report.cells.push(check_cell(
                    &oracle_report,
                    family.token(),
                    closed,
                    2 * n as u64,
                    |label| bouquet_coset_by_label(label).map(|c| beta(c, n as u64, k as u64)),
                    options.inject_fault,
                ));
            }
        }
    }

    let dir_max_n = options.max_n.unwrap_or(5);
    let dir_max_k = options.max_k.unwrap_or(2);
    for &group in &scope.dir {
        let family = dir_family_for(group);
        for n in 0..=dir_max_n {
            for k in 1..=dir_max_k {
                let oracle_report = orbit_count(GroupSpec::DirBouquet(group), n, k, &caps)?;
                let closed = dirbouquet_count(family, n as u64, k as u64);
                report.cells.push(check_cell(
                    &oracle_report,
                    family.token(),
                    closed,
                    2 * n as u64,
                    |label| dir_coset_by_label(label).map(|c| alpha(c, n as u64, k as u64)),
                    options.inject_fault,
                ));
            }
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d1_small_scope_passes() {
        let options = VerifyOptions {
            families: Some(vec![Family::parse("D1").unwrap()]),
            max_n: Some(5),
            ..Default::default()
        };
        let report = run_verify(&options).unwrap();
        assert!(report.all_ok(), "{:?}", report.cells);
        // D1 values 1,1,1,2,3,8 for n = 0..5 against orbit counts
        assert_eq!(report.cells.len(), 6);
        assert!(report.checks() > 6);
    }

    #[test]
    fn injected_fault_is_reported() {
        let options = VerifyOptions {
            families: Some(vec![Family::parse("D1").unwrap()]),
            max_n: Some(2),
            inject_fault: true,
            ..Default::default()
        };
        let report = run_verify(&options).unwrap();
        assert!(!report.all_ok());
        assert!(report.cells.iter().any(|c| !c.ok()));
    }

    #[test]
    fn cap_violation_is_an_error() {
        let options = VerifyOptions {
            families: Some(vec![Family::parse("D1").unwrap()]),
            max_n: Some(9),
            ..Default::default()
        };
        assert!(matches!(run_verify(&options), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn split_scope_selects_member_groups() {
        let options = VerifyOptions {
            families: Some(vec![Family::parse("D8/D6:S").unwrap()]),
            max_n: Some(3),
            ..Default::default()
        };
        let report = run_verify(&options).unwrap();
        assert!(report.all_ok(), "{:?}", report.cells);
        // D8 group plus the full group, n = 0..3 each
        assert_eq!(report.cells.len(), 8);
    }

    #[test]
    fn directed_small_scope_passes() {
        let options = VerifyOptions {
            families: Some(vec![
                Family::parse("A3").unwrap(),
                Family::parse("A5").unwrap(),
            ]),
            max_n: Some(4),
            max_k: Some(2),
            ..Default::default()
        };
        let report = run_verify(&options).unwrap();
        assert!(report.all_ok(), "{:?}", report.cells);
    }
}
