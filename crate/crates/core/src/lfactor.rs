//! Orders of vanishing of local L-factors and of the normalization factors.
//!
//! Only orders at real points are modelled. The single convention used
//! throughout is `L(rho x Pi |det|^u, s) = L(rho x Pi, s + u)`, and the
//! cuspidal-pair factor `L(rho x sigma, s)` has a simple pole exactly at
//! `s = 0` when `sigma = rho*`. A Speh module contributes one such factor per
//! point of its cuspidal support; a Steinberg module contributes only the
//! factor at its top exponent.
//!
//! With `r` the symmetric or exterior square (see [`GroupForm::r_kind`]),
//! `L(rho, r, t)` has a simple pole at `t = 0` when `rho` is self-dual of the
//! type opposite to the dual group, and no other real zero or pole.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::group::{FormType, GroupForm};
use crate::multiset::Multiset;
use crate::multisegment::{l_parameter, SpehParam, SteinbergBlock};
use crate::rational::Rational;
use crate::symbol::{SelfDualType, SymbolTable};

/// Which reading of the parameter feeds the normalization factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Style {
    /// Speh reading.
    A,
    /// Steinberg reading.
    L,
}

impl FromStr for Style {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Style::A),
            "L" | "l" => Ok(Style::L),
            other => Err(format!("unknown style `{other}` (expected A or L)")),
        }
    }
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Style::A => "A",
            Style::L => "L",
        })
    }
}

/// Finite-support map from points to nonzero orders; negative means pole.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrderLedger {
    entries: BTreeMap<Rational, i64>,
}

impl OrderLedger {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `order` at `s0`; zero orders are dropped.
    pub fn set(&mut self, s0: Rational, order: i64) {
        if order == 0 {
            self.entries.remove(&s0);
        } else {
            self.entries.insert(s0, order);
        }
    }

    pub fn get(&self, s0: Rational) -> i64 {
        self.entries.get(&s0).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Rational, i64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Points with negative order.
    pub fn poles(&self) -> impl Iterator<Item = (Rational, i64)> + '_ {
        self.iter().filter(|(_, o)| *o < 0)
    }
}

impl fmt::Display for OrderLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, o) in self.iter() {
            writeln!(f, "s={s} ord={o}")?;
        }
        Ok(())
    }
}

/// Order at `s0` of `L(rho x sigma |det|^u, s)`.
pub fn ord_pair(table: &SymbolTable, rho: &str, sigma: &str, u: Rational, s0: Rational) -> i64 {
    if sigma == table.dual_of(rho) && s0 == -u {
        -1
    } else {
        0
    }
}

/// Order at `s0` of `L(rho x pi~^A, s)`, one pair factor per support point.
pub fn ord_l_speh(table: &SymbolTable, rho: &str, e: &SpehParam, s0: Rational) -> i64 {
    e.support()
        .iter_counts()
        .map(|((sigma, u), mult)| ord_pair(table, rho, sigma, *u, s0) * mult as i64)
        .sum()
}

/// Order at `s0` of `L(rho x pi~^L, s)`, one pair factor per Steinberg block
/// taken at its top exponent `x + (a-1)/2`.
pub fn ord_l_steinberg(
    table: &SymbolTable,
    rho: &str,
    l: &Multiset<SteinbergBlock>,
    s0: Rational,
) -> i64 {
    l.iter_counts()
        .map(|(st, mult)| {
            let top = st.x + Rational::half(i64::from(st.a) - 1);
            ord_pair(table, rho, &st.sigma, top, s0) * mult as i64
        })
        .sum()
}

/// 1 when `L(rho, r, s)` has a pole at `s = 0`: `rho` self-dual of the type
/// opposite to the dual group.
pub fn eps_prime(table: &SymbolTable, rho: &str, form: &GroupForm) -> i64 {
    match (table.sd_type(rho), form.lg_type()) {
        (SelfDualType::Orthogonal, FormType::Symplectic)
        | (SelfDualType::Symplectic, FormType::Orthogonal) => 1,
        _ => 0,
    }
}

/// Order of `L(rho, r, t)` at `t`.
fn ord_l_r(table: &SymbolTable, rho: &str, form: &GroupForm, t: Rational) -> i64 {
    if t.is_zero() {
        -eps_prime(table, rho, form)
    } else {
        0
    }
}

/// Order at `s0` of `L(rho, r, 2s)^{-1} L(rho, r, 2s+1)`.
pub fn ord_r_ratio(table: &SymbolTable, rho: &str, form: &GroupForm, s0: Rational) -> i64 {
    let two_s = s0 + s0;
    -ord_l_r(table, rho, form, two_s) + ord_l_r(table, rho, form, two_s + Rational::ONE)
}

/// Shared assembly `L(s) L(r, 2s) L(s+1)^{-1} L(r, 2s+1)^{-1}` for a given
/// pair-factor order function `ord_l`.
fn assemble(
    table: &SymbolTable,
    rho: &str,
    form: &GroupForm,
    s0: Rational,
    ord_l: impl Fn(Rational) -> i64,
) -> i64 {
    ord_l(s0) - ord_l(s0 + Rational::ONE) - ord_r_ratio(table, rho, form, s0)
}

/// Order at `s0` of `r^A(rho x pi_0, s)`.
pub fn ord_ra(table: &SymbolTable, rho: &str, e: &SpehParam, form: &GroupForm, s0: Rational) -> i64 {
    assemble(table, rho, form, s0, |t| ord_l_speh(table, rho, e, t))
}

/// Order at `s0` of `r^L(rho x pi_0, s)`.
pub fn ord_rl(table: &SymbolTable, rho: &str, e: &SpehParam, form: &GroupForm, s0: Rational) -> i64 {
    let l = l_parameter(e);
    assemble(table, rho, form, s0, |t| ord_l_steinberg(table, rho, &l, t))
}

pub fn ord_r(
    style: Style,
    table: &SymbolTable,
    rho: &str,
    e: &SpehParam,
    form: &GroupForm,
    s0: Rational,
) -> i64 {
    match style {
        Style::A => ord_ra(table, rho, e, form, s0),
        Style::L => ord_rl(table, rho, e, form, s0),
    }
}

/// Order at `s0` of `r(rho x pi_0, s) r(rho* x pi_0, -s)`.
pub fn product_order(
    style: Style,
    table: &SymbolTable,
    rho: &str,
    e: &SpehParam,
    form: &GroupForm,
    s0: Rational,
) -> i64 {
    let dual = table.dual_of(rho);
    ord_r(style, table, rho, e, form, s0) + ord_r(style, table, dual, e, form, -s0)
}

/// Every point where some factor of `r(rho x pi_0, s)` can have a zero or a
/// pole, for either style. Orders vanish identically off this set.
pub fn candidate_points(table: &SymbolTable, rho: &str, e: &SpehParam) -> BTreeSet<Rational> {
    let dual = table.dual_of(rho);
    let mut points = BTreeSet::from([Rational::ZERO, -Rational::HALF]);
    for ((sigma, u), _) in e.support().iter_counts() {
        if sigma == dual {
            points.insert(-*u);
            points.insert(-*u - Rational::ONE);
        }
    }
    points
}

/// Orders of `r^{style}(rho x pi_0, s)` at all points `s0 >= 0` where they are
/// nonzero. Poles here are the zeros of the normalized operator.
pub fn zero_pole_locus(
    style: Style,
    table: &SymbolTable,
    rho: &str,
    e: &SpehParam,
    form: &GroupForm,
) -> OrderLedger {
    let mut ledger = OrderLedger::new();
    for s0 in candidate_points(table, rho, e) {
        if !s0.is_negative() {
            ledger.set(s0, ord_r(style, table, rho, e, form, s0));
        }
    }
    ledger
}

/// Zeros of the Speh-normalized operator on `s0 > 0` read directly off the
/// blocks: `x + (a-1)/2` for every `(rho, a, x)`, when positive.
pub fn block_zero_points(rho: &str, e: &SpehParam) -> BTreeSet<Rational> {
    e.blocks()
        .iter_counts()
        .filter(|(b, _)| b.sigma() == rho)
        .map(|(b, _)| b.x() + Rational::half(i64::from(b.a()) - 1))
        .filter(Rational::is_positive)
        .collect()
}
