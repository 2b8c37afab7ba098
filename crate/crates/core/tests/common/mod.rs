//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use redcalc::group::FormType;
use redcalc::lfactor::eps_prime;
use redcalc::multisegment::{langlands_quotient, validate_param};
use redcalc::reconstruction::red_multiset;
use redcalc::reducibility::{red_points, O2nFlags, Setting};
use redcalc::{
    ABlock, AParam, CuspidalSymbol, GroupForm, GroupKind, Rational, SelfDualType, SpehBlock,
    SpehParam, SymbolTable,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// Exponents used for twisted blocks.
pub fn twists() -> [Rational; 5] {
    [r(0, 1), r(1, 4), r(-1, 4), r(1, 3), r(-1, 3)]
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub table: SymbolTable,
    pub form: GroupForm,
    pub param: AParam,
    pub speh: SpehParam,
}

impl Instance {
    pub fn from_speh(table: SymbolTable, form: GroupForm, speh: SpehParam) -> Self {
        let param = speh
            .blocks()
            .iter()
            .map(|b| ABlock::new(b.sigma(), 1, b.a(), b.x()).unwrap())
            .collect();
        Instance {
            table,
            form,
            param,
            speh,
        }
    }

    pub fn setting(&self) -> Setting<'_> {
        Setting::new(&self.table, self.form, O2nFlags::default())
    }

    pub fn names(&self) -> Vec<String> {
        self.table.names().map(str::to_string).collect()
    }

    pub fn self_dual_names(&self) -> Vec<String> {
        self.table
            .iter()
            .filter(|s| s.is_self_dual())
            .map(|s| s.name.clone())
            .collect()
    }

    pub fn describe(&self) -> String {
        let blocks: Vec<String> = self
            .speh
            .blocks()
            .iter()
            .map(|b| format!("({},{},{})", b.sigma(), b.a(), b.x()))
            .collect();
        format!("{} [{}]", self.form, blocks.join(" "))
    }
}

/// Up to four symbols: orthogonal, symplectic, or a non-self-dual pair.
pub fn random_table(rng: &mut impl Rng) -> SymbolTable {
    let target = rng.gen_range(1..=4);
    let mut syms: Vec<CuspidalSymbol> = Vec::new();
    while syms.len() < target {
        let k = syms.len();
        match rng.gen_range(0..4) {
            0 => syms.push(CuspidalSymbol::self_dual(
                &format!("o{k}"),
                rng.gen_range(1..=2),
                SelfDualType::Orthogonal,
            )),
            1 => syms.push(CuspidalSymbol::self_dual(
                &format!("s{k}"),
                2,
                SelfDualType::Symplectic,
            )),
            2 if k + 2 <= target => {
                let dim = rng.gen_range(1..=2);
                let (a, b) = (format!("g{k}"), format!("g{k}*"));
                syms.push(CuspidalSymbol::new(&a, dim, SelfDualType::NotSelfDual, &b));
                syms.push(CuspidalSymbol::new(&b, dim, SelfDualType::NotSelfDual, &a));
            }
            _ => syms.push(CuspidalSymbol::self_dual(
                &format!("o{k}"),
                1,
                SelfDualType::Orthogonal,
            )),
        }
    }
    SymbolTable::new().register_batch(syms).unwrap()
}

/// Smallest group whose dual group has the given dimension.
fn form_for_dim(rng: &mut impl Rng, dim: u64) -> GroupForm {
    let n = (dim / 2) as u32;
    if dim % 2 == 1 {
        GroupForm::new(GroupKind::Sp, n)
    } else if rng.gen_bool(0.5) {
        GroupForm::new(GroupKind::SOodd, n)
    } else {
        GroupForm::new(GroupKind::Oeven, n)
    }
}

/// Adds the orbit of `(sigma, x)` under `x -> -x` and `(sigma, x) -> (sigma*, -x)`.
fn push_orbit(
    table: &SymbolTable,
    param: &mut AParam,
    sigma: &str,
    bprime: u32,
    b: u32,
    x: Rational,
) {
    let dual = table.dual_of(sigma);
    let mut orbit = vec![(sigma, x), (sigma, -x), (dual, -x), (dual, x)];
    orbit.sort();
    orbit.dedup();
    for (s, y) in orbit {
        param.push(ABlock::new(s, bprime, b, y).unwrap());
    }
}

/// A valid parameter with `b, b' <= 5` and `x in {0, +-1/4, +-1/3}`.
pub fn general_instance(rng: &mut impl Rng) -> Instance {
    let table = random_table(rng);
    let names: Vec<String> = table.names().map(str::to_string).collect();
    let mut param = AParam::new();
    for _ in 0..rng.gen_range(1..=3) {
        let sigma = names.choose(rng).unwrap();
        let x = *twists().choose(rng).unwrap();
        push_orbit(
            &table,
            &mut param,
            sigma,
            rng.gen_range(1..=5),
            rng.gen_range(1..=5),
            x,
        );
    }
    let form = form_for_dim(rng, param.total_dim(&table));
    debug_assert!(validate_param(&param, &table, &form).is_valid());
    let speh = langlands_quotient(&param);
    Instance {
        table,
        form,
        param,
        speh,
    }
}

/// Like [`general_instance`] but with at least one twisted orbit.
pub fn twisted_instance(rng: &mut impl Rng) -> Instance {
    loop {
        let inst = general_instance(rng);
        if !inst.speh.all_x_zero() {
            return inst;
        }
    }
}

/// True when every signed count is in `{0, 1}`.
pub fn admissible(inst: &Instance) -> bool {
    let setting = inst.setting();
    inst.table.names().all(|rho| {
        red_points(&inst.speh, rho, &setting).is_ok() && red_multiset(&inst.speh, rho).is_ok()
    })
}

/// Rejection-sampled admissible parameter with twisted blocks.
pub fn admissible_twisted_instance(rng: &mut impl Rng) -> Instance {
    loop {
        let inst = twisted_instance(rng);
        if admissible(&inst) {
            return inst;
        }
    }
}

/// The parity-correct chain `{1, 3, ..}` or `{2, 4, ..}` of the given length.
pub fn good_chain(even: bool, len: u32) -> Vec<u32> {
    (0..len).map(|k| 2 * k + if even { 2 } else { 1 }).collect()
}

fn random_jord(rng: &mut impl Rng, even: bool) -> Vec<u32> {
    match rng.gen_range(0..5) {
        0 => Vec::new(),
        1 | 2 => good_chain(even, rng.gen_range(1..=3)),
        _ => (0..rng.gen_range(1..=3))
            .map(|_| rng.gen_range(1..=6))
            .collect(),
    }
}

/// All-`x = 0` parameter: per self-dual symbol either a parity-correct chain
/// or an arbitrary small multiset of lengths.
pub fn c_shape_instance(rng: &mut impl Rng) -> Instance {
    loop {
        let table = random_table(rng);
        let kind = *[GroupKind::Sp, GroupKind::SOodd, GroupKind::Oeven]
            .choose(rng)
            .unwrap();
        let probe = GroupForm::new(kind, 0);
        let mut speh = SpehParam::new();
        for sym in table.iter().filter(|s| s.is_self_dual()) {
            let even = eps_prime(&table, &sym.name, &probe) == 1;
            for a in random_jord(rng, even) {
                speh.push(SpehBlock::new(&sym.name, a, r(0, 1)).unwrap());
            }
        }
        let dim = speh.total_dim(&table);
        if (dim % 2 == 1) != (kind == GroupKind::Sp) {
            continue;
        }
        let form = GroupForm::new(kind, (dim / 2) as u32);
        return Instance::from_speh(table, form, speh);
    }
}

/// A C-shape instance whose Jordan blocks are all parity-correct chains.
pub fn good_c_shape_instance(rng: &mut impl Rng) -> Instance {
    loop {
        let table = random_table(rng);
        let kind = *[GroupKind::Sp, GroupKind::SOodd, GroupKind::Oeven]
            .choose(rng)
            .unwrap();
        let probe = GroupForm::new(kind, 0);
        let mut speh = SpehParam::new();
        for sym in table.iter().filter(|s| s.is_self_dual()) {
            let even = eps_prime(&table, &sym.name, &probe) == 1;
            for a in good_chain(even, rng.gen_range(0..=3)) {
                speh.push(SpehBlock::new(&sym.name, a, r(0, 1)).unwrap());
            }
        }
        let dim = speh.total_dim(&table);
        if (dim % 2 == 1) != (kind == GroupKind::Sp) {
            continue;
        }
        let form = GroupForm::new(kind, (dim / 2) as u32);
        return Instance::from_speh(table, form, speh);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    Duplicate,
    GapAbove,
    DropBottom,
    WrongParity,
    NonSelfDualPair,
}

pub const MUTATIONS: [Mutation; 5] = [
    Mutation::Duplicate,
    Mutation::GapAbove,
    Mutation::DropBottom,
    Mutation::WrongParity,
    Mutation::NonSelfDualPair,
];

/// Breaks one Jordan-block condition of a good instance, keeping the
/// dimension compatible with a group of the same dual-group type.
/// Returns `None` when the mutation does not apply.
pub fn mutate(rng: &mut impl Rng, inst: &Instance, m: Mutation) -> Option<Instance> {
    let table = &inst.table;
    let zero = r(0, 1);
    let mut speh = inst.speh.clone();
    match m {
        Mutation::NonSelfDualPair => {
            let sym = table.iter().find(|s| !s.is_self_dual())?;
            let a = rng.gen_range(1..=3);
            speh.push(SpehBlock::new(&sym.name, a, zero).unwrap());
            speh.push(SpehBlock::new(&sym.dual, a, zero).unwrap());
        }
        _ => {
            let rho = inst.self_dual_names().choose(rng)?.clone();
            let jord = speh.jord(&rho, zero);
            let even = eps_prime(table, &rho, &inst.form) == 1;
            let top = jord.max_element().copied();
            match m {
                Mutation::Duplicate => {
                    let a = *jord.iter().copied().collect::<Vec<_>>().choose(rng)?;
                    speh.push(SpehBlock::new(&rho, a, zero).unwrap());
                }
                Mutation::GapAbove => {
                    let base = top.unwrap_or(if even { 0 } else { 1 });
                    let a = if top.is_some() { base + 4 } else { base + 2 + 2 * u32::from(!even) };
                    speh.push(SpehBlock::new(&rho, a, zero).unwrap());
                }
                Mutation::DropBottom => {
                    if jord.len() < 2 {
                        return None;
                    }
                    let bottom = *jord.iter().next()?;
                    let keep: Vec<SpehBlock> = speh
                        .blocks()
                        .iter()
                        .filter(|b| !(b.sigma() == rho && b.x() == zero && b.a() == bottom))
                        .cloned()
                        .collect();
                    speh = SpehParam::from_blocks(keep);
                }
                Mutation::WrongParity => {
                    let a = 2 * rng.gen_range(0..3) + if even { 1 } else { 2 };
                    speh.push(SpehBlock::new(&rho, a, zero).unwrap());
                }
                Mutation::NonSelfDualPair => unreachable!(),
            }
        }
    }
    let dim = speh.total_dim(table);
    let lg_type = inst.form.lg_type();
    let kind = match (dim % 2 == 1, lg_type) {
        (true, FormType::Orthogonal) => GroupKind::Sp,
        (false, FormType::Orthogonal) if inst.form.kind == GroupKind::Sp => GroupKind::Oeven,
        (false, _) => inst.form.kind,
        (true, FormType::Symplectic) => return None,
    };
    let form = GroupForm::new(kind, (dim / 2) as u32);
    Some(Instance::from_speh(table.clone(), form, speh))
}
