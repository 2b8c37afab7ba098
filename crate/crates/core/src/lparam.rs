//! The formal parameter `W_F x SL(2, C) -> GL(2n + epsilon, C)` attached to a
//! Speh parameter, recorded as its block decomposition with pairing data.

use std::fmt;

use crate::error::LParamError;
use crate::group::{FormType, GroupForm};
use crate::multisegment::{validate_closure, SpehParam};
use crate::rational::Rational;
use crate::symbol::{SelfDualType, SymbolTable};

/// How a block sits with respect to the invariant form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    SelfPairedSymplectic,
    SelfPairedOrthogonal,
    /// Paired with the block at this index in [`FormalParameter::blocks`].
    IsotropicPartner(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalBlock {
    pub sigma: String,
    pub a: u32,
    pub x: Rational,
    pub pairing: Pairing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalParameter {
    pub blocks: Vec<FormalBlock>,
    pub form: GroupForm,
}

/// Type of the form on `sigma (x) Sym^{a-1}`: even-dimensional representations
/// of `SL(2)` are symplectic, odd ones orthogonal.
pub fn block_pairing_type(sd: SelfDualType, a: u32) -> Result<FormType, LParamError> {
    let base = match sd {
        SelfDualType::Symplectic => FormType::Symplectic,
        SelfDualType::Orthogonal => FormType::Orthogonal,
        SelfDualType::NotSelfDual => return Err(LParamError::NotSelfDualInput),
    };
    Ok(if a.is_multiple_of(2) {
        match base {
            FormType::Symplectic => FormType::Orthogonal,
            FormType::Orthogonal => FormType::Symplectic,
        }
    } else {
        base
    })
}

/// One block per Speh block, with isotropic partners `(sigma*, a, -x)`
/// matched up and self-paired blocks typed.
pub fn build_parameter(
    e: &SpehParam,
    table: &SymbolTable,
    form: &GroupForm,
) -> Result<FormalParameter, LParamError> {
    if let Some(b) = e.blocks().iter().find(|b| !table.contains(b.sigma())) {
        return Err(LParamError::UnknownSymbol(b.sigma().to_string()));
    }
    let closure = validate_closure(e, table);
    if !closure.is_valid() {
        let msg = closure
            .violations
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ");
        return Err(LParamError::ClosureViolation(msg));
    }
    let expected = u64::from(form.lg_dim());
    let actual = e.total_dim(table);
    if expected != actual {
        return Err(LParamError::DimensionMismatch { expected, actual });
    }

    let mut blocks: Vec<FormalBlock> = Vec::with_capacity(e.len());
    let mut unpaired: Vec<usize> = Vec::new();
    for b in e.blocks().iter() {
        let sd = table.sd_type(b.sigma());
        let pairing = if b.x().is_zero() && sd.is_self_dual() {
            match block_pairing_type(sd, b.a())? {
                FormType::Symplectic => Pairing::SelfPairedSymplectic,
                FormType::Orthogonal => Pairing::SelfPairedOrthogonal,
            }
        } else {
            let dual = table.dual_of(b.sigma());
            let partner = unpaired.iter().position(|&i| {
                let c = &blocks[i];
                c.sigma == dual && c.a == b.a() && c.x == -b.x()
            });
            match partner {
                Some(pos) => {
                    let j = unpaired.swap_remove(pos);
                    blocks[j].pairing = Pairing::IsotropicPartner(blocks.len());
                    Pairing::IsotropicPartner(j)
                }
                None => {
                    unpaired.push(blocks.len());
                    // Placeholder until the partner shows up.
                    Pairing::IsotropicPartner(usize::MAX)
                }
            }
        };
        blocks.push(FormalBlock {
            sigma: b.sigma().to_string(),
            a: b.a(),
            x: b.x(),
            pairing,
        });
    }
    if let Some(&i) = unpaired.first() {
        let b = &blocks[i];
        return Err(LParamError::ClosureViolation(format!(
            "block sigma={} a={} x={} has no isotropic partner",
            b.sigma, b.a, b.x
        )));
    }
    Ok(FormalParameter {
        blocks,
        form: *form,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LgReport {
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Every self-paired block must carry the type of the dual group's form.
#[allow(non_snake_case)]
pub fn factors_through_LG(p: &FormalParameter) -> LgReport {
    let target = p.form.lg_type();
    let failures: Vec<String> = p
        .blocks
        .iter()
        .filter_map(|b| {
            let ty = match b.pairing {
                Pairing::SelfPairedSymplectic => FormType::Symplectic,
                Pairing::SelfPairedOrthogonal => FormType::Orthogonal,
                Pairing::IsotropicPartner(_) => return None,
            };
            (ty != target).then(|| {
                format!(
                    "block sigma={} a={} x={} is {ty}, the dual group is {target}",
                    b.sigma, b.a, b.x
                )
            })
        })
        .collect();
    LgReport {
        ok: failures.is_empty(),
        failures,
    }
}

/// No block is twisted away from the unitary axis.
pub fn is_elliptic(e: &SpehParam) -> bool {
    e.all_x_zero()
}

impl fmt::Display for FormalParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            write!(f, "#{i} sigma={} a={} x={} pairing=", b.sigma, b.a, b.x)?;
            match b.pairing {
                Pairing::SelfPairedSymplectic => writeln!(f, "symplectic")?,
                Pairing::SelfPairedOrthogonal => writeln!(f, "orthogonal")?,
                Pairing::IsotropicPartner(j) => writeln!(f, "isotropic partner=#{j}")?,
            }
        }
        Ok(())
    }
}
