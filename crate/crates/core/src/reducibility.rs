//! Jordan blocks and reducibility points of `rho |det|^s x pi_0`.
//!
//! `pi_0` is never represented; it is seen only through its Speh parameter,
//! the group form and, for even orthogonal groups, whether its restriction
//! to the special orthogonal group is irreducible.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::ReducibilityError;
use crate::group::{GroupForm, GroupKind};
use crate::lfactor::eps_prime;
use crate::multiset::Multiset;
use crate::multisegment::SpehParam;
use crate::rational::Rational;
use crate::symbol::SymbolTable;

/// `N ∪ {-1, ∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtNat {
    Finite(u32),
    MinusOne,
    Infinity,
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(a) => write!(f, "{a}"),
            ExtNat::MinusOne => f.write_str("-1"),
            ExtNat::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct O2nFlags {
    /// Only read when the group is `O(2n)`.
    pub so_restriction_irreducible: bool,
}

impl Default for O2nFlags {
    fn default() -> Self {
        O2nFlags {
            so_restriction_irreducible: true,
        }
    }
}

/// Everything the reducibility computations need besides the parameter.
#[derive(Debug, Clone, Copy)]
pub struct Setting<'a> {
    pub table: &'a SymbolTable,
    pub form: GroupForm,
    pub flags: O2nFlags,
}

impl<'a> Setting<'a> {
    pub fn new(table: &'a SymbolTable, form: GroupForm, flags: O2nFlags) -> Self {
        Setting { table, form, flags }
    }

    fn eps_prime(&self, rho: &str) -> i64 {
        eps_prime(self.table, rho, &self.form)
    }

    /// `O(2n)` with `dim(rho)` odd and reducible restriction to `SO(2n)`:
    /// the induced representation is irreducible off `s = 0`.
    fn odd_orthogonal_branch(&self, rho: &str) -> bool {
        self.form.kind == GroupKind::Oeven
            && self.table.dim(rho) % 2 == 1
            && !self.flags.so_restriction_irreducible
    }
}

pub fn jord(e: &SpehParam, rho: &str, x: Rational) -> Multiset<u32> {
    e.jord(rho, x)
}

/// Maximal element of `Jord_{rho,0}`, or the default attached to the type of `rho`.
pub fn a_rho(e: &SpehParam, rho: &str, table: &SymbolTable, form: &GroupForm) -> ExtNat {
    if let Some(&max) = e.jord(rho, Rational::ZERO).max_element() {
        return ExtNat::Finite(max);
    }
    let sd = table.sd_type(rho);
    if !sd.is_self_dual() {
        ExtNat::Infinity
    } else if form.lg_type().matches(sd) {
        ExtNat::MinusOne
    } else {
        ExtNat::Finite(0)
    }
}

/// `|{a in Jord_{rho,x} : s0 = x + (a-1)/2}|`.
pub fn n0(e: &SpehParam, rho: &str, s0: Rational, x: Rational) -> usize {
    e.jord(rho, x)
        .iter_counts()
        .filter(|(a, _)| x + Rational::half(i64::from(**a) - 1) == s0)
        .map(|(_, c)| c)
        .sum()
}

/// `|{a in Jord_{rho,x} : s0 = x + (a+1)/2}|`, defined for `s0 > 1/2`.
///
/// For `x = 0` every `s0 >= 0` is accepted and the point `s0 = 1/2` carries
/// `eps'`, the pole of `L(rho, r, s)` at `s = 0`.
pub fn n1(
    e: &SpehParam,
    rho: &str,
    s0: Rational,
    x: Rational,
    table: &SymbolTable,
    form: &GroupForm,
) -> Result<usize, ReducibilityError> {
    if s0.is_negative() || (s0 <= Rational::HALF && !x.is_zero()) {
        return Err(ReducibilityError::DomainError { s0, x });
    }
    let count: usize = e
        .jord(rho, x)
        .iter_counts()
        .filter(|(a, _)| x + Rational::half(i64::from(**a) + 1) == s0)
        .map(|(_, c)| c)
        .sum();
    let eps0 = if x.is_zero() && s0 == Rational::HALF {
        eps_prime(table, rho, form) as usize
    } else {
        0
    };
    Ok(count + eps0)
}

/// Distinct twists `x != 0` occurring with `rho`.
fn nonzero_twists(e: &SpehParam, rho: &str) -> BTreeSet<Rational> {
    e.blocks()
        .iter_counts()
        .filter(|(b, _)| b.sigma() == rho && !b.x().is_zero())
        .map(|(b, _)| b.x())
        .collect()
}

/// Points `s0 > 1/2` off `(1/2)Z` where some `x != 0` count can be nonzero.
fn non_half_integer_candidates(e: &SpehParam, rho: &str) -> BTreeSet<Rational> {
    let mut pts = BTreeSet::new();
    for (b, _) in e.blocks().iter_counts() {
        if b.sigma() == rho && !b.x().is_zero() {
            let a = i64::from(b.a());
            for v in [b.x() + Rational::half(a + 1), b.x() + Rational::half(a - 1)] {
                if v > Rational::HALF {
                    pts.insert(v);
                }
            }
        }
    }
    pts
}

/// `sum_x n1(rho, s0, x) - n0(rho, s0, x)` over all twists `x`, for `s0 > 1/2`.
pub fn signed_count(e: &SpehParam, rho: &str, s0: Rational, setting: &Setting) -> i64 {
    let mut xs = nonzero_twists(e, rho);
    xs.insert(Rational::ZERO);
    xs.into_iter()
        .map(|x| {
            let plus = n1(e, rho, s0, x, setting.table, &setting.form).unwrap_or(0) as i64;
            plus - n0(e, rho, s0, x) as i64
        })
        .sum()
}

/// The reducibility set `Red_rho(pi_0)`.
///
/// Half-integral part: `{(max Jord_{rho,0} + 1)/2}` when that set is nonempty,
/// otherwise `{1/2}` or `{0}` for self-dual `rho` according to `eps'`.
/// Other points: every `s0 > 1/2` where the signed count over all twists is 1.
pub fn red_points(
    e: &SpehParam,
    rho: &str,
    setting: &Setting,
) -> Result<BTreeSet<Rational>, ReducibilityError> {
    if setting.odd_orthogonal_branch(rho) {
        let mut out = BTreeSet::new();
        if setting.table.is_self_dual(rho) {
            out.insert(Rational::ZERO);
        }
        return Ok(out);
    }
    let mut out = BTreeSet::new();
    if let Some(&max) = e.jord(rho, Rational::ZERO).max_element() {
        out.insert(Rational::half(i64::from(max) + 1));
    } else if setting.table.is_self_dual(rho) {
        out.insert(if setting.eps_prime(rho) == 1 {
            Rational::HALF
        } else {
            Rational::ZERO
        });
    }
    for s0 in non_half_integer_candidates(e, rho) {
        match signed_count(e, rho, s0, setting) {
            0 => {}
            1 => {
                out.insert(s0);
            }
            count => {
                return Err(ReducibilityError::InadmissibleParam {
                    rho: rho.to_string(),
                    s0,
                    count,
                })
            }
        }
    }
    Ok(out)
}

/// 1 when `rho |det|^{s0} x pi_0` is reducible.
pub fn irr_at(
    e: &SpehParam,
    rho: &str,
    s0: Rational,
    setting: &Setting,
) -> Result<u32, ReducibilityError> {
    Ok(u32::from(red_points(e, rho, setting)?.contains(&s0)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JordViolation {
    Multiplicity { a: u32, count: usize },
    Gap { a: u32, missing: u32 },
    Parity { a: u32, expected_even: bool },
    NotSelfDual,
}

impl fmt::Display for JordViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JordViolation::Multiplicity { a, count } => {
                write!(f, "Jord not multiplicity-free: {a} occurs {count} times")
            }
            JordViolation::Gap { a, missing } => {
                write!(f, "Jord has a gap: {a} present but {missing} missing")
            }
            JordViolation::Parity { a, expected_even } => write!(
                f,
                "Jord parity: {a} should be {}",
                if *expected_even { "even" } else { "odd" }
            ),
            JordViolation::NotSelfDual => {
                write!(f, "Jord nonempty for a symbol that is not self-dual")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JordReport {
    pub violations: Vec<JordViolation>,
}

impl JordReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Multiplicity-free, no gaps and the parity condition on `Jord_{rho,0}`.
pub fn validate_jord(
    e: &SpehParam,
    rho: &str,
    table: &SymbolTable,
    form: &GroupForm,
) -> JordReport {
    let jord = e.jord(rho, Rational::ZERO);
    let mut violations = Vec::new();
    if jord.is_empty() {
        return JordReport { violations };
    }
    for (&a, count) in jord.iter_counts() {
        if count > 1 {
            violations.push(JordViolation::Multiplicity { a, count });
        }
        if a > 2 && jord.count(&(a - 2)) == 0 {
            violations.push(JordViolation::Gap { a, missing: a - 2 });
        }
    }
    if !table.is_self_dual(rho) {
        violations.push(JordViolation::NotSelfDual);
    } else {
        let expected_even = eps_prime(table, rho, form) == 1;
        for (&a, _) in jord.iter_counts() {
            if (a % 2 == 0) != expected_even {
                violations.push(JordViolation::Parity { a, expected_even });
            }
        }
    }
    JordReport { violations }
}

/// One failed identity, with the point where it failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: &'static str,
    pub s0: Rational,
    pub lhs: i64,
    pub rhs: i64,
}

impl fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at s0={}: {} != {}",
            self.identity, self.s0, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub failures: Vec<IdentityFailure>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Half-integral points `s0 >= 0` at which the `x = 0` identities are checked.
fn half_integer_candidates(e: &SpehParam, rho: &str, red: &BTreeSet<Rational>) -> BTreeSet<Rational> {
    let mut pts = BTreeSet::from([Rational::ZERO, Rational::HALF, Rational::ONE]);
    for (&a, _) in e.jord(rho, Rational::ZERO).iter_counts() {
        let a = i64::from(a);
        pts.insert(Rational::half(a - 1));
        pts.insert(Rational::half(a + 1));
    }
    pts.extend(red.iter().copied().filter(Rational::is_half_integer));
    pts
}

/// Checks the bookkeeping identities relating `n0`, `n1`, `irr` and `eps'`:
///
/// * `n0(s0) = n1(s0) - irr(s0)` for `s0 > 0`, with the `x = 0` counts
///   (`n1(1/2)` carrying `eps'`), at every half-integral candidate;
/// * `n0(0) + irr(0) + eps' = 1` when `rho` is self-dual, `= 0` otherwise;
/// * when every block has `x = 0`, `sum_k irr(s0 + k) = n1(s0)` at every
///   candidate `s0 > 0`.
///
/// Signed counts outside `{0, 1}` at the other points surface as
/// [`ReducibilityError::InadmissibleParam`].
pub fn consistency_check(
    e: &SpehParam,
    rho: &str,
    setting: &Setting,
) -> Result<ConsistencyReport, ReducibilityError> {
    let red = red_points(e, rho, setting)?;
    let zero = Rational::ZERO;
    let irr = |s: Rational| i64::from(red.contains(&s));
    let n0x = |s: Rational| n0(e, rho, s, zero) as i64;
    let n1x = |s: Rational| n1(e, rho, s, zero, setting.table, &setting.form).map(|v| v as i64);
    let eps = setting.eps_prime(rho);
    let candidates = half_integer_candidates(e, rho, &red);
    let mut failures = Vec::new();

    for &s0 in candidates.iter().filter(|s| s.is_positive()) {
        let lhs = n0x(s0);
        let rhs = n1x(s0)? - irr(s0);
        if lhs != rhs {
            failures.push(IdentityFailure {
                identity: "n0 = n1 - irr",
                s0,
                lhs,
                rhs,
            });
        }
    }

    let lhs = n0x(zero) + irr(zero) + eps;
    let rhs = i64::from(setting.table.is_self_dual(rho));
    if lhs != rhs {
        failures.push(IdentityFailure {
            identity: "n0(0) + irr(0) + eps' = [rho self-dual]",
            s0: zero,
            lhs,
            rhs,
        });
    }

    if e.all_x_zero() {
        let top = red.iter().copied().max().unwrap_or(zero);
        for &s0 in candidates.iter().filter(|s| s.is_positive()) {
            let mut sum = 0;
            let mut s = s0;
            while s <= top {
                sum += irr(s);
                s = s + Rational::ONE;
            }
            let rhs = n1x(s0)?;
            if sum != rhs {
                failures.push(IdentityFailure {
                    identity: "sum_k irr(s0 + k) = n1(s0)",
                    s0,
                    lhs: sum,
                    rhs,
                });
            }
        }
    }
    Ok(ConsistencyReport { failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multisegment::SpehBlock;
    use crate::symbol::{CuspidalSymbol, SelfDualType};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn table() -> SymbolTable {
        SymbolTable::new()
            .register_batch([
                CuspidalSymbol::self_dual("rho", 1, SelfDualType::Orthogonal),
                CuspidalSymbol::self_dual("tau", 2, SelfDualType::Symplectic),
                CuspidalSymbol::self_dual("eta", 2, SelfDualType::Orthogonal),
                CuspidalSymbol::new("sigma", 1, SelfDualType::NotSelfDual, "sigma*"),
                CuspidalSymbol::new("sigma*", 1, SelfDualType::NotSelfDual, "sigma"),
            ])
            .unwrap()
    }

    fn e(blocks: &[(&str, u32, Rational)]) -> SpehParam {
        blocks
            .iter()
            .map(|(s, a, x)| SpehBlock::new(s, *a, *x).unwrap())
            .collect()
    }

    fn set(points: &[Rational]) -> BTreeSet<Rational> {
        points.iter().copied().collect()
    }

    // Sp: dual group orthogonal. rho orthogonal -> same type, eps' = 0.
    fn sp() -> GroupForm {
        GroupForm::new(GroupKind::Sp, 2)
    }
    // SO(2n+1): dual group symplectic. rho orthogonal -> eps' = 1.
    fn so_odd() -> GroupForm {
        GroupForm::new(GroupKind::SOodd, 1)
    }

    #[test]
    fn jord_examples() {
        let p = e(&[("rho", 3, r(0, 1)), ("rho", 1, r(0, 1)), ("tau", 2, r(0, 1))]);
        assert_eq!(jord(&p, "rho", r(0, 1)), [1, 3].into_iter().collect());
        assert_eq!(jord(&p, "tau", r(0, 1)), [2].into_iter().collect());
        assert!(jord(&p, "rho", r(1, 4)).is_empty());
    }

    #[test]
    fn a_rho_examples() {
        let t = table();
        let p = e(&[("rho", 3, r(0, 1)), ("rho", 1, r(0, 1))]);
        assert_eq!(a_rho(&p, "rho", &t, &sp()), ExtNat::Finite(3));
        // tau symplectic, dual group of SO(2n+1) symplectic.
        assert_eq!(a_rho(&SpehParam::new(), "tau", &t, &so_odd()), ExtNat::MinusOne);
        assert_eq!(a_rho(&SpehParam::new(), "tau", &t, &sp()), ExtNat::Finite(0));
        assert_eq!(a_rho(&SpehParam::new(), "sigma", &t, &sp()), ExtNat::Infinity);
    }

    #[test]
    fn n0_n1_examples() {
        let t = table();
        let p = e(&[("rho", 3, r(0, 1)), ("rho", 1, r(0, 1))]);
        assert_eq!(n0(&p, "rho", r(1, 1), r(0, 1)), 1);
        assert_eq!(n1(&p, "rho", r(2, 1), r(0, 1), &t, &sp()).unwrap(), 1);
        assert_eq!(
            n1(&SpehParam::new(), "rho", r(1, 2), r(0, 1), &t, &so_odd()).unwrap(),
            1
        );
        assert_eq!(
            n1(&p, "rho", r(1, 2), r(1, 4), &t, &sp()),
            Err(ReducibilityError::DomainError {
                s0: r(1, 2),
                x: r(1, 4)
            })
        );
        assert!(n1(&p, "rho", r(-1, 1), r(0, 1), &t, &sp()).is_err());
    }

    #[test]
    fn irr_examples() {
        let t = table();
        let st = Setting::new(&t, sp(), O2nFlags::default());
        let p = e(&[("rho", 3, r(0, 1)), ("rho", 1, r(0, 1))]);
        assert_eq!(irr_at(&p, "rho", r(2, 1), &st).unwrap(), 1);
        assert_eq!(irr_at(&p, "rho", r(1, 1), &st).unwrap(), 0);
        for k in 0..10 {
            assert_eq!(irr_at(&p, "sigma", r(k, 4), &st).unwrap(), 0);
        }
        let st = Setting::new(&t, so_odd(), O2nFlags::default());
        let q = e(&[("rho", 1, r(1, 4)), ("rho", 1, r(-1, 4))]);
        assert_eq!(irr_at(&q, "rho", r(5, 4), &st).unwrap(), 1);
        assert_eq!(irr_at(&q, "rho", r(3, 4), &st).unwrap(), 1);
        assert_eq!(irr_at(&q, "rho", r(1, 2), &st).unwrap(), 1);
        assert_eq!(irr_at(&q, "rho", r(1, 4), &st).unwrap(), 0);
    }

    #[test]
    fn red_points_examples() {
        let t = table();
        let st = Setting::new(&t, sp(), O2nFlags::default());
        let p = e(&[("rho", 3, r(0, 1)), ("rho", 1, r(0, 1))]);
        assert_eq!(red_points(&p, "rho", &st).unwrap(), set(&[r(2, 1)]));
        // tau symplectic against an orthogonal dual group: eps' = 1.
        assert_eq!(
            red_points(&SpehParam::new(), "tau", &st).unwrap(),
            set(&[r(1, 2)])
        );
        assert_eq!(red_points(&SpehParam::new(), "rho", &st).unwrap(), set(&[r(0, 1)]));
        assert!(red_points(&SpehParam::new(), "sigma", &st).unwrap().is_empty());

        let st = Setting::new(&t, so_odd(), O2nFlags::default());
        let q = e(&[("rho", 1, r(1, 4)), ("rho", 1, r(-1, 4))]);
        assert_eq!(
            red_points(&q, "rho", &st).unwrap(),
            set(&[r(1, 2), r(3, 4), r(5, 4)])
        );
    }

    #[test]
    fn inadmissible_signed_count() {
        let t = table();
        let st = Setting::new(&t, sp(), O2nFlags::default());
        // Minus contributions at 3/4 from (rho, 2, 1/4) are not cancelled.
        let q = e(&[("rho", 2, r(1, 4)), ("rho", 2, r(-1, 4))]);
        assert!(matches!(
            red_points(&q, "rho", &st),
            Err(ReducibilityError::InadmissibleParam { count: -1, .. })
        ));
        // Doubled plus contributions.
        let q = e(&[
            ("rho", 1, r(1, 4)),
            ("rho", 1, r(-1, 4)),
            ("rho", 1, r(1, 4)),
            ("rho", 1, r(-1, 4)),
        ]);
        assert!(matches!(
            red_points(&q, "rho", &st),
            Err(ReducibilityError::InadmissibleParam { count: 2, .. })
        ));
    }

    #[test]
    fn odd_orthogonal_branch() {
        let t = table();
        let form = GroupForm::new(GroupKind::Oeven, 2);
        let flags = O2nFlags {
            so_restriction_irreducible: false,
        };
        let st = Setting::new(&t, form, flags);
        assert_eq!(red_points(&SpehParam::new(), "rho", &st).unwrap(), set(&[r(0, 1)]));
        assert!(red_points(&SpehParam::new(), "sigma", &st).unwrap().is_empty());
        // Even-dimensional eta is unaffected by the flag.
        let st_default = Setting::new(&t, form, O2nFlags::default());
        assert_eq!(
            red_points(&SpehParam::new(), "eta", &st).unwrap(),
            red_points(&SpehParam::new(), "eta", &st_default).unwrap()
        );
    }

    #[test]
    fn validate_jord_examples() {
        let t = table();
        assert!(validate_jord(&e(&[("rho", 1, r(0, 1)), ("rho", 3, r(0, 1))]), "rho", &t, &sp())
            .is_valid());
        let rep = validate_jord(&e(&[("rho", 1, r(0, 1)), ("rho", 1, r(0, 1))]), "rho", &t, &sp());
        assert_eq!(
            rep.violations,
            vec![JordViolation::Multiplicity { a: 1, count: 2 }]
        );
        let rep = validate_jord(&e(&[("rho", 5, r(0, 1)), ("rho", 1, r(0, 1))]), "rho", &t, &sp());
        assert_eq!(rep.violations, vec![JordViolation::Gap { a: 5, missing: 3 }]);
        let rep = validate_jord(&e(&[("rho", 2, r(0, 1))]), "rho", &t, &sp());
        assert_eq!(
            rep.violations,
            vec![JordViolation::Parity {
                a: 2,
                expected_even: false
            }]
        );
        let rep = validate_jord(&e(&[("sigma", 1, r(0, 1))]), "sigma", &t, &sp());
        assert_eq!(rep.violations, vec![JordViolation::NotSelfDual]);
    }

    #[test]
    fn consistency_examples() {
        let t = table();
        let st = Setting::new(&t, sp(), O2nFlags::default());
        let p = e(&[("rho", 3, r(0, 1)), ("rho", 1, r(0, 1))]);
        assert!(consistency_check(&p, "rho", &st).unwrap().is_consistent());
        assert!(consistency_check(&SpehParam::new(), "rho", &st)
            .unwrap()
            .is_consistent());
        assert!(consistency_check(&SpehParam::new(), "sigma", &st)
            .unwrap()
            .is_consistent());
    }

    #[test]
    fn consistency_rejects_bad_jord() {
        let t = table();
        let st = Setting::new(&t, sp(), O2nFlags::default());
        for bad in [
            e(&[("rho", 1, r(0, 1)), ("rho", 1, r(0, 1))]),
            e(&[("rho", 5, r(0, 1)), ("rho", 1, r(0, 1))]),
            e(&[("rho", 2, r(0, 1))]),
        ] {
            assert!(!consistency_check(&bad, "rho", &st).unwrap().is_consistent());
        }
        let p = e(&[("sigma", 1, r(0, 1)), ("sigma*", 1, r(0, 1))]);
        assert!(!consistency_check(&p, "sigma", &st).unwrap().is_consistent());
        // tau has eps' = 1 here, so Jord must be even.
        assert!(!consistency_check(&e(&[("tau", 1, r(0, 1))]), "tau", &st)
            .unwrap()
            .is_consistent());
        assert!(consistency_check(&e(&[("tau", 2, r(0, 1))]), "tau", &st)
            .unwrap()
            .is_consistent());
    }
}
