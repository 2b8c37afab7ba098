//! Recovering the Jordan data at nonzero twists from the reducibility points
//! that are not half-integers.
//!
//! For a symbol `rho` write `E'` for the multiset of couples `(x, a)` with
//! `x in ]0, 1/2[` and `a in Jord_{rho,x}`. The non-half-integral
//! reducibility points form the set
//! `E = {x + (a+1)/2} - {x + (a-1)/2}` taken over both signs of `x`, with
//! multiplicity, restricted to values above `1/2`. [`reconstruct`] inverts
//! this by descending recursion on the key `x + (a+1)/2`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::ReconstructionError;
use crate::multiset::Multiset;
use crate::multisegment::SpehParam;
use crate::rational::Rational;

/// A finite set of positive rationals, none a half-integer.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RedSet {
    points: BTreeSet<Rational>,
}

impl RedSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Rejects repeated, non-positive or half-integral points.
    pub fn from_points(
        points: impl IntoIterator<Item = Rational>,
    ) -> Result<Self, ReconstructionError> {
        let mut set = BTreeSet::new();
        for y in points {
            if !y.is_positive() {
                return Err(ReconstructionError::InvalidRedSet(format!(
                    "{y} is not positive"
                )));
            }
            if y.is_half_integer() {
                return Err(ReconstructionError::InvalidRedSet(format!(
                    "{y} is a half-integer"
                )));
            }
            if !set.insert(y) {
                return Err(ReconstructionError::InvalidRedSet(format!(
                    "{y} occurs more than once"
                )));
            }
        }
        Ok(RedSet { points: set })
    }

    /// Whitespace-separated rationals.
    pub fn parse(text: &str) -> Result<Self, ReconstructionError> {
        let points = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Rational>()
                    .map_err(|e| ReconstructionError::InvalidRedSet(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_points(points)
    }

    pub fn contains(&self, y: Rational) -> bool {
        self.points.contains(&y)
    }

    pub fn iter(&self) -> impl Iterator<Item = Rational> + '_ {
        self.points.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl fmt::Display for RedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, y) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{y}")?;
        }
        f.write_str("}")
    }
}

/// Couples `(x, a)` with `x in ]0, 1/2[` and `a >= 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EPrime {
    couples: Multiset<(Rational, u32)>,
}

/// `x + (a+1)/2`, the point a couple contributes positively.
pub fn key(x: Rational, a: u32) -> Rational {
    x + Rational::half(i64::from(a) + 1)
}

impl EPrime {
    pub fn new() -> Self {
        Self::default()
    }

    /// The couples `(x, a)` of `rho`-blocks with `x > 0`.
    pub fn from_param(e: &SpehParam, rho: &str) -> Self {
        let couples = e
            .blocks()
            .iter()
            .filter(|b| b.sigma() == rho && b.x().is_positive())
            .map(|b| (b.x(), b.a()))
            .collect();
        EPrime { couples }
    }

    pub fn couples(&self) -> &Multiset<(Rational, u32)> {
        &self.couples
    }

    pub fn is_empty(&self) -> bool {
        self.couples.is_empty()
    }

    /// Couples with multiplicity, sorted by key, then by `x`.
    pub fn sorted_by_key(&self) -> Vec<((Rational, u32), usize)> {
        let mut out: Vec<_> = self.couples.iter_counts().map(|(c, m)| (*c, m)).collect();
        out.sort_by_key(|((x, a), _)| (key(*x, *a), *x));
        out
    }
}

impl fmt::Display for EPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((x, a), m) in self.sorted_by_key() {
            writeln!(f, "({x}, {a}) * {m}")?;
        }
        Ok(())
    }
}

/// The signed difference `{x + (a+1)/2} - {x + (a-1)/2}` over the `rho`-blocks
/// with `x != 0`, restricted to values above `1/2`.
pub fn red_multiset(e: &SpehParam, rho: &str) -> Result<RedSet, ReconstructionError> {
    let mut signed: BTreeMap<Rational, i64> = BTreeMap::new();
    for (b, mult) in e.blocks().iter_counts() {
        if b.sigma() != rho || b.x().is_zero() {
            continue;
        }
        let a = i64::from(b.a());
        let m = mult as i64;
        *signed.entry(b.x() + Rational::half(a + 1)).or_default() += m;
        *signed.entry(b.x() + Rational::half(a - 1)).or_default() -= m;
    }
    let mut points = Vec::new();
    for (y, m) in signed {
        if y <= Rational::HALF || m == 0 {
            continue;
        }
        if m != 1 {
            return Err(ReconstructionError::InadmissibleParam {
                rho: rho.to_string(),
                point: y,
                multiplicity: m,
            });
        }
        points.push(y);
    }
    RedSet::from_points(points)
}

/// Inverts [`red_multiset`].
///
/// Points are visited in strictly decreasing order. At `y`, with `x_y` the
/// representative of `y` modulo `1/2` in `]0, 1/2[`, the couples contributing
/// `y` negatively and the mirrors `(x_y - 1/2, a)` contributing it positively
/// all have strictly larger keys, so they are known; what remains is the
/// multiplicity of `(x_y, 2(y - x_y) - 1)`. Every recorded couple schedules
/// the smaller points it touches.
pub fn reconstruct(set: &RedSet) -> Result<EPrime, ReconstructionError> {
    let mut found: Multiset<(Rational, u32)> = Multiset::new();
    let mut agenda: BTreeSet<Rational> = set.iter().collect();
    let mut last: Option<Rational> = None;

    while let Some(y) = agenda.pop_last() {
        debug_assert!(last.is_none_or(|l| y < l));
        last = Some(y);

        let x_y = y.frac_half();
        if x_y.is_zero() {
            return Err(ReconstructionError::InvalidRedSet(format!(
                "{y} is a half-integer"
            )));
        }

        let mut minus = 0i64;
        let mut mirrored_plus = 0i64;
        for (&(x, a), m) in found.iter_counts() {
            let m = m as i64;
            let a = i64::from(a);
            assert!(key(x, a as u32) > y, "lookup of an undetermined couple");
            if x + Rational::half(a - 1) == y {
                minus += m;
            }
            if -x + Rational::half(a - 1) == y {
                minus += m;
            }
            if -x + Rational::half(a + 1) == y {
                mirrored_plus += m;
            }
        }
        let plus = i64::from(set.contains(y)) + minus;
        let remainder = plus - mirrored_plus;
        if remainder < 0 {
            return Err(ReconstructionError::Inconsistent { y, remainder });
        }
        if remainder == 0 {
            continue;
        }
        let twice = (y - x_y)
            .twice_as_integer()
            .expect("y - x_y is a half-integer");
        let a_y = twice - 1;
        if a_y < 1 {
            return Err(ReconstructionError::Inconsistent { y, remainder });
        }
        let a_y = a_y as u32;
        found.insert_n((x_y, a_y), remainder as usize);
        let half_a = |d: i64| Rational::half(i64::from(a_y) + d);
        for v in [-x_y + half_a(1), x_y + half_a(-1), -x_y + half_a(-1)] {
            if v > Rational::HALF {
                agenda.insert(v);
            }
        }
    }
    Ok(EPrime { couples: found })
}

/// True when [`reconstruct`] recovers the `x > 0` couples of `rho` from
/// [`red_multiset`].
pub fn roundtrip_check(e: &SpehParam, rho: &str) -> Result<bool, ReconstructionError> {
    let rebuilt = reconstruct(&red_multiset(e, rho)?)?;
    Ok(rebuilt == EPrime::from_param(e, rho))
}
