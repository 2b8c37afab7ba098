//! Parameter multisets and the passage between their readings.
//!
//! An [`AParam`] lists blocks `(sigma, b', b, x)`, each standing for the Speh
//! module `pi(St(sigma, b'), b)` twisted by `|det|^x`. Its Langlands quotient
//! is a [`SpehParam`], a multiset of `(sigma, a, x)` standing for
//! `pi(sigma, a) |det|^x`; the same data read as `St(sigma, a) |det|^x` is
//! the Steinberg view returned by [`l_parameter`].
//!
//! Every computation downstream factors through the cuspidal [`Support`].

use std::fmt;

use crate::error::BlockError;
use crate::group::GroupForm;
use crate::multiset::Multiset;
use crate::rational::Rational;
use crate::symbol::SymbolTable;

/// Multiset of twisted cuspidals `(sigma, exponent)`.
pub type Support = Multiset<(String, Rational)>;

fn check_x(x: Rational) -> Result<(), BlockError> {
    if x.in_open_half_interval() {
        Ok(())
    } else {
        Err(BlockError::XOutOfRange(x))
    }
}

/// `(sigma, b', b, x)`: `pi(St(sigma, b'), b) |det|^x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ABlock {
    sigma: String,
    bprime: u32,
    b: u32,
    x: Rational,
}

impl ABlock {
    pub fn new(sigma: &str, bprime: u32, b: u32, x: Rational) -> Result<Self, BlockError> {
        if bprime == 0 || b == 0 {
            return Err(BlockError::ZeroLength);
        }
        check_x(x)?;
        Ok(ABlock {
            sigma: sigma.to_string(),
            bprime,
            b,
            x,
        })
    }

    pub fn sigma(&self) -> &str {
        &self.sigma
    }
    pub fn bprime(&self) -> u32 {
        self.bprime
    }
    pub fn b(&self) -> u32 {
        self.b
    }
    pub fn x(&self) -> Rational {
        self.x
    }
}

impl fmt::Display for ABlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "block sigma={} bprime={} b={} x={}",
            self.sigma, self.bprime, self.b, self.x
        )
    }
}

/// `(sigma, a, x)`: `pi(sigma, a) |det|^x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpehBlock {
    sigma: String,
    a: u32,
    x: Rational,
}

impl SpehBlock {
    pub fn new(sigma: &str, a: u32, x: Rational) -> Result<Self, BlockError> {
        if a == 0 {
            return Err(BlockError::ZeroLength);
        }
        check_x(x)?;
        Ok(SpehBlock {
            sigma: sigma.to_string(),
            a,
            x,
        })
    }

    pub fn sigma(&self) -> &str {
        &self.sigma
    }
    pub fn a(&self) -> u32 {
        self.a
    }
    pub fn x(&self) -> Rational {
        self.x
    }
}

impl fmt::Display for SpehBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sblock sigma={} a={} x={}", self.sigma, self.a, self.x)
    }
}

/// `St(sigma, a) |det|^x`, the Steinberg reading of a [`SpehBlock`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SteinbergBlock {
    pub sigma: String,
    pub a: u32,
    pub x: Rational,
}

impl fmt::Display for SteinbergBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "steinberg sigma={} a={} x={}", self.sigma, self.a, self.x)
    }
}

/// Common surface of the two block kinds, used by validation.
pub trait ParamBlock: Clone + Ord + fmt::Display {
    fn sigma(&self) -> &str;
    fn x(&self) -> Rational;
    /// `GL` rank contributed per unit of `dim(sigma)`.
    fn length(&self) -> u64;
    /// Same block with symbol and twist replaced.
    fn retarget(&self, sigma: &str, x: Rational) -> Self;
}

impl ParamBlock for ABlock {
    fn sigma(&self) -> &str {
        &self.sigma
    }
    fn x(&self) -> Rational {
        self.x
    }
    fn length(&self) -> u64 {
        u64::from(self.bprime) * u64::from(self.b)
    }
    fn retarget(&self, sigma: &str, x: Rational) -> Self {
        ABlock {
            sigma: sigma.to_string(),
            x,
            ..self.clone()
        }
    }
}

impl ParamBlock for SpehBlock {
    fn sigma(&self) -> &str {
        &self.sigma
    }
    fn x(&self) -> Rational {
        self.x
    }
    fn length(&self) -> u64 {
        u64::from(self.a)
    }
    fn retarget(&self, sigma: &str, x: Rational) -> Self {
        SpehBlock {
            sigma: sigma.to_string(),
            x,
            ..self.clone()
        }
    }
}

/// A multiset of blocks of one kind.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Param<B: Ord> {
    blocks: Multiset<B>,
}

pub type AParam = Param<ABlock>;
pub type SpehParam = Param<SpehBlock>;

impl<B: ParamBlock> Default for Param<B> {
    fn default() -> Self {
        Param {
            blocks: Multiset::new(),
        }
    }
}

impl<B: ParamBlock> Param<B> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_blocks(blocks: impl IntoIterator<Item = B>) -> Self {
        Param {
            blocks: blocks.into_iter().collect(),
        }
    }

    pub fn blocks(&self) -> &Multiset<B> {
        &self.blocks
    }

    pub fn push(&mut self, block: B) {
        self.blocks.insert(block);
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// Total `GL` rank `sum dim(sigma) * length`.
    pub fn total_dim(&self, table: &SymbolTable) -> u64 {
        self.blocks
            .iter()
            .map(|b| u64::from(table.dim(b.sigma())) * b.length())
            .sum()
    }

    /// Image under `(sigma, .., x) -> (sigma*, .., -x)`.
    pub fn dual_negate(&self, table: &SymbolTable) -> Self {
        Param {
            blocks: self
                .blocks
                .map(|b| b.retarget(table.dual_of(b.sigma()), -b.x())),
        }
    }

    /// True when every block has `x = 0`.
    pub fn all_x_zero(&self) -> bool {
        self.blocks.iter_counts().all(|(b, _)| b.x().is_zero())
    }

    /// Distinct symbols occurring in the blocks.
    pub fn symbols(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .blocks
            .iter_counts()
            .map(|(b, _)| b.sigma().to_string())
            .collect();
        names.dedup();
        names
    }
}

impl<B: ParamBlock> FromIterator<B> for Param<B> {
    fn from_iter<I: IntoIterator<Item = B>>(iter: I) -> Self {
        Param::from_blocks(iter)
    }
}

impl<B: ParamBlock + fmt::Debug> fmt::Debug for Param<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.blocks.fmt(f)
    }
}

impl<B: ParamBlock> fmt::Display for Param<B> {
    /// One block per line, sorted lexicographically by the rendered line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lines: Vec<String> = self.blocks.iter().map(ToString::to_string).collect();
        lines.sort();
        for line in lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Cuspidal support of `pi(sigma, a) |det|^x`: exponents `x + (a-1)/2 - k`.
pub fn speh_support(sigma: &str, a: u32, x: Rational) -> Support {
    let a = i64::from(a);
    (0..a)
        .map(|k| (sigma.to_string(), x + Rational::half(a - 1 - 2 * k)))
        .collect()
}

/// Symmetric progression `{-(n-1)/2, ..., (n-1)/2}` with step 1.
fn symmetric_progression(n: u32) -> impl Iterator<Item = Rational> {
    let n = i64::from(n);
    (0..n).map(move |k| Rational::half(2 * k - (n - 1)))
}

impl AParam {
    /// Cuspidal support: each block contributes `x + i + j` over the two
    /// symmetric progressions of lengths `b` and `b'`.
    pub fn support(&self) -> Support {
        let mut sup = Support::new();
        for (blk, mult) in self.blocks.iter_counts() {
            for i in symmetric_progression(blk.b) {
                for j in symmetric_progression(blk.bprime) {
                    sup.insert_n((blk.sigma.clone(), blk.x + i + j), mult);
                }
            }
        }
        sup
    }
}

impl SpehParam {
    pub fn support(&self) -> Support {
        let mut sup = Support::new();
        for (blk, mult) in self.blocks.iter_counts() {
            for _ in 0..mult {
                sup.extend_from(&speh_support(&blk.sigma, blk.a, blk.x));
            }
        }
        sup
    }

    /// `Jord_{rho,x}`: the lengths `a` with `(rho, a, x)` in the parameter.
    pub fn jord(&self, rho: &str, x: Rational) -> Multiset<u32> {
        let mut out = Multiset::new();
        for (blk, mult) in self.blocks.iter_counts() {
            if blk.sigma == rho && blk.x == x {
                out.insert_n(blk.a, mult);
            }
        }
        out
    }
}

/// Number of copies of `(sigma, s0)` in the support.
pub fn multiplicity(sup: &Support, sigma: &str, s0: Rational) -> usize {
    sup.count(&(sigma.to_string(), s0))
}

/// Langlands quotient of the induced representation with the same cuspidal
/// support. A block `(sigma, b', b, x)` splits into the Speh blocks of sizes
/// `b + b' - 1 - 2l` for `l in [0, min(b, b') - 1]`.
pub fn langlands_quotient(p: &AParam) -> SpehParam {
    let mut out = SpehParam::new();
    for (blk, mult) in p.blocks.iter_counts() {
        let top = blk.b + blk.bprime - 1;
        for l in 0..blk.b.min(blk.bprime) {
            let speh = SpehBlock {
                sigma: blk.sigma.clone(),
                a: top - 2 * l,
                x: blk.x,
            };
            out.blocks.insert_n(speh, mult);
        }
    }
    out
}

/// Steinberg reading of a Speh parameter. The data are unchanged; only the
/// L-factor rules applied downstream differ.
pub fn l_parameter(e: &SpehParam) -> Multiset<SteinbergBlock> {
    e.blocks.map(|b| SteinbergBlock {
        sigma: b.sigma.clone(),
        a: b.a,
        x: b.x,
    })
}

/// Checks by enumeration that the weights `i + j` over the symmetric
/// progressions of lengths `b` and `b'` coincide, as a multiset, with the
/// union of the symmetric progressions of lengths `b + b' - 1 - 2l`.
pub fn cg_weight_identity(b: u32, bprime: u32) -> bool {
    let lhs: Multiset<Rational> = symmetric_progression(b)
        .flat_map(|i| symmetric_progression(bprime).map(move |j| i + j))
        .collect();
    let top = b + bprime - 1;
    let rhs: Multiset<Rational> = (0..b.min(bprime))
        .flat_map(|l| symmetric_progression(top - 2 * l))
        .collect();
    lhs == rhs
}

/// One failed structural check on a parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamViolation {
    XOutOfRange { block: String },
    UnknownSymbol { name: String },
    /// `(sigma, .., x)` and `(sigma, .., -x)` occur with different multiplicities.
    TadicSymmetry { block: String, count: usize, mirror_count: usize },
    /// `(sigma, .., x)` and `(sigma*, .., -x)` occur with different multiplicities.
    AutodualityClosure { block: String, count: usize, mirror_count: usize },
    Dimension { expected: u64, actual: u64 },
}

impl fmt::Display for ParamViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamViolation::XOutOfRange { block } => write!(f, "x out of ]-1/2,1/2[: {block}"),
            ParamViolation::UnknownSymbol { name } => write!(f, "unknown symbol: {name}"),
            ParamViolation::TadicSymmetry {
                block,
                count,
                mirror_count,
            } => write!(
                f,
                "symmetry x <-> -x: {block} occurs {count} times, its mirror {mirror_count} times"
            ),
            ParamViolation::AutodualityClosure {
                block,
                count,
                mirror_count,
            } => write!(
                f,
                "autoduality: {block} occurs {count} times, its dual mirror {mirror_count} times"
            ),
            ParamViolation::Dimension { expected, actual } => {
                write!(f, "dimension: blocks sum to {actual}, expected {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<ParamViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        Ok(())
    }
}

/// Structural checks that do not depend on the group: x-range, symbols,
/// symmetry under `x -> -x` and closure under `(sigma, x) -> (sigma*, -x)`.
pub fn validate_closure<B: ParamBlock>(p: &Param<B>, table: &SymbolTable) -> ValidationReport {
    let mut violations = Vec::new();
    for (blk, count) in p.blocks.iter_counts() {
        if !blk.x().in_open_half_interval() {
            violations.push(ParamViolation::XOutOfRange {
                block: blk.to_string(),
            });
        }
        if !table.contains(blk.sigma()) {
            violations.push(ParamViolation::UnknownSymbol {
                name: blk.sigma().to_string(),
            });
            continue;
        }
        let mirror = blk.retarget(blk.sigma(), -blk.x());
        let mirror_count = p.blocks.count(&mirror);
        if mirror_count != count {
            violations.push(ParamViolation::TadicSymmetry {
                block: blk.to_string(),
                count,
                mirror_count,
            });
        }
        let dual_mirror = blk.retarget(table.dual_of(blk.sigma()), -blk.x());
        let dual_count = p.blocks.count(&dual_mirror);
        if dual_count != count {
            violations.push(ParamViolation::AutodualityClosure {
                block: blk.to_string(),
                count,
                mirror_count: dual_count,
            });
        }
    }
    ValidationReport { violations }
}

/// [`validate_closure`] plus the dimension constraint `sum = 2n + epsilon`.
pub fn validate_param<B: ParamBlock>(
    p: &Param<B>,
    table: &SymbolTable,
    form: &GroupForm,
) -> ValidationReport {
    let mut report = validate_closure(p, table);
    let expected = u64::from(form.lg_dim());
    let actual = p.total_dim(table);
    if expected != actual {
        report
            .violations
            .push(ParamViolation::Dimension { expected, actual });
    }
    report
}
