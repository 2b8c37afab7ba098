//! Classical groups `G(n)` and the data of their L-groups.

use std::fmt;
use std::str::FromStr;

use crate::symbol::SelfDualType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// `Sp(2n)`, dual group `SO(2n+1, C)`.
    Sp,
    /// `SO(2n+1)`, dual group `Sp(2n, C)`.
    SOodd,
    /// Full orthogonal group `O(2n)`, dual group `O(2n, C)`.
    Oeven,
}

impl GroupKind {
    pub fn keyword(self) -> &'static str {
        match self {
            GroupKind::Sp => "sp",
            GroupKind::SOodd => "so-odd",
            GroupKind::Oeven => "o-even",
        }
    }
}

impl FromStr for GroupKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sp" => Ok(GroupKind::Sp),
            "so-odd" => Ok(GroupKind::SOodd),
            "o-even" => Ok(GroupKind::Oeven),
            other => Err(format!("unknown group `{other}` (expected sp, so-odd or o-even)")),
        }
    }
}

/// Type of the self-dual form preserved by the dual group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormType {
    Symplectic,
    Orthogonal,
}

impl FormType {
    pub fn matches(self, sd: SelfDualType) -> bool {
        matches!(
            (self, sd),
            (FormType::Symplectic, SelfDualType::Symplectic)
                | (FormType::Orthogonal, SelfDualType::Orthogonal)
        )
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormType::Symplectic => "symplectic",
            FormType::Orthogonal => "orthogonal",
        })
    }
}

/// The representation `r` of `GL(c, C)` entering the normalization factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RKind {
    Sym2,
    Wedge2,
}

impl fmt::Display for RKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RKind::Sym2 => "Sym2",
            RKind::Wedge2 => "Wedge2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupForm {
    pub kind: GroupKind,
    pub n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupData {
    pub epsilon: u32,
    pub lg_type: FormType,
    pub lg_dim: u32,
    pub r_kind: RKind,
}

impl GroupForm {
    pub fn new(kind: GroupKind, n: u32) -> Self {
        GroupForm { kind, n }
    }

    pub fn epsilon(&self) -> u32 {
        u32::from(self.kind == GroupKind::Sp)
    }

    pub fn lg_dim(&self) -> u32 {
        2 * self.n + self.epsilon()
    }

    pub fn lg_type(&self) -> FormType {
        match self.kind {
            GroupKind::Sp | GroupKind::Oeven => FormType::Orthogonal,
            GroupKind::SOodd => FormType::Symplectic,
        }
    }

    pub fn r_kind(&self) -> RKind {
        match self.lg_type() {
            FormType::Symplectic => RKind::Sym2,
            FormType::Orthogonal => RKind::Wedge2,
        }
    }

    pub fn data(&self) -> GroupData {
        GroupData {
            epsilon: self.epsilon(),
            lg_type: self.lg_type(),
            lg_dim: self.lg_dim(),
            r_kind: self.r_kind(),
        }
    }
}

impl fmt::Display for GroupForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.kind.keyword(), self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp3() {
        let d = GroupForm::new(GroupKind::Sp, 3).data();
        assert_eq!(
            d,
            GroupData {
                epsilon: 1,
                lg_type: FormType::Orthogonal,
                lg_dim: 7,
                r_kind: RKind::Wedge2
            }
        );
    }

    #[test]
    fn so_odd2() {
        let d = GroupForm::new(GroupKind::SOodd, 2).data();
        assert_eq!(
            d,
            GroupData {
                epsilon: 0,
                lg_type: FormType::Symplectic,
                lg_dim: 4,
                r_kind: RKind::Sym2
            }
        );
    }

    #[test]
    fn o_even0() {
        let d = GroupForm::new(GroupKind::Oeven, 0).data();
        assert_eq!(
            d,
            GroupData {
                epsilon: 0,
                lg_type: FormType::Orthogonal,
                lg_dim: 0,
                r_kind: RKind::Wedge2
            }
        );
    }

    #[test]
    fn invariants_all_forms() {
        for kind in [GroupKind::Sp, GroupKind::SOodd, GroupKind::Oeven] {
            for n in 0..6 {
                let f = GroupForm::new(kind, n);
                assert_eq!(f.r_kind() == RKind::Sym2, f.lg_type() == FormType::Symplectic);
                assert_eq!(f.lg_dim() % 2 == 1, kind == GroupKind::Sp);
                assert_eq!(kind.keyword().parse::<GroupKind>().unwrap(), kind);
            }
        }
    }
}
