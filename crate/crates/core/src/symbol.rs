//! Cuspidal symbols and the symbol table.
//!
//! A cuspidal representation of `GL(c)` is an opaque label carrying its rank,
//! the label of its contragredient and its self-duality type. Nothing else
//! about the representation is ever needed.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::SymbolError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SelfDualType {
    /// `L(rho, ∧², s)` has a pole at `s = 0`.
    Symplectic,
    /// `L(rho, Sym², s)` has a pole at `s = 0`.
    Orthogonal,
    NotSelfDual,
}

impl SelfDualType {
    pub fn is_self_dual(self) -> bool {
        self != SelfDualType::NotSelfDual
    }

    pub fn keyword(self) -> &'static str {
        match self {
            SelfDualType::Symplectic => "symplectic",
            SelfDualType::Orthogonal => "orthogonal",
            SelfDualType::NotSelfDual => "none",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "symplectic" => Some(SelfDualType::Symplectic),
            "orthogonal" => Some(SelfDualType::Orthogonal),
            "none" => Some(SelfDualType::NotSelfDual),
            _ => None,
        }
    }
}

impl fmt::Display for SelfDualType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CuspidalSymbol {
    pub name: String,
    /// Rank `c` of `GL(c, F)`.
    pub dim: u32,
    pub dual: String,
    pub sd_type: SelfDualType,
}

impl CuspidalSymbol {
    pub fn new(name: &str, dim: u32, sd_type: SelfDualType, dual: &str) -> Self {
        CuspidalSymbol {
            name: name.to_string(),
            dim,
            dual: dual.to_string(),
            sd_type,
        }
    }

    /// A self-dual symbol of the given type.
    pub fn self_dual(name: &str, dim: u32, sd_type: SelfDualType) -> Self {
        Self::new(name, dim, sd_type, name)
    }

    pub fn is_self_dual(&self) -> bool {
        self.sd_type.is_self_dual()
    }
}

impl fmt::Display for CuspidalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "symbol {} dim={} type={} dual={}",
            self.name, self.dim, self.sd_type, self.dual
        )
    }
}

/// Registered symbols, closed under taking duals.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolTable {
    symbols: BTreeMap<String, CuspidalSymbol>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a single symbol. A non-self-dual symbol can only be added
    /// this way once its dual is already present.
    pub fn register(self, sym: CuspidalSymbol) -> Result<Self, SymbolError> {
        self.register_batch(vec![sym])
    }

    /// Registers several symbols at once; duals may reference each other
    /// within the batch. On error the table is left unchanged.
    pub fn register_batch(
        mut self,
        batch: impl IntoIterator<Item = CuspidalSymbol>,
    ) -> Result<Self, SymbolError> {
        let batch: Vec<CuspidalSymbol> = batch.into_iter().collect();
        let mut pending: BTreeMap<&str, &CuspidalSymbol> = BTreeMap::new();
        for sym in &batch {
            if sym.dim == 0 {
                return Err(SymbolError::ZeroDimension(sym.name.clone()));
            }
            if self.symbols.contains_key(&sym.name) || pending.contains_key(sym.name.as_str()) {
                return Err(SymbolError::DuplicateName(sym.name.clone()));
            }
            if sym.sd_type == SelfDualType::Symplectic && sym.dim % 2 == 1 {
                return Err(SymbolError::TypeDimMismatch {
                    name: sym.name.clone(),
                    dim: sym.dim,
                });
            }
            if sym.is_self_dual() && sym.dual != sym.name {
                return Err(SymbolError::DualMismatch {
                    name: sym.name.clone(),
                    reason: format!("type {} requires dual = {}", sym.sd_type, sym.name),
                });
            }
            if !sym.is_self_dual() && sym.dual == sym.name {
                return Err(SymbolError::DualMismatch {
                    name: sym.name.clone(),
                    reason: "a symbol equal to its dual must be symplectic or orthogonal".into(),
                });
            }
            pending.insert(&sym.name, sym);
        }
        for sym in &batch {
            if sym.is_self_dual() {
                continue;
            }
            let dual = pending
                .get(sym.dual.as_str())
                .copied()
                .or_else(|| self.symbols.get(&sym.dual))
                .ok_or_else(|| SymbolError::DanglingDual {
                    name: sym.name.clone(),
                    dual: sym.dual.clone(),
                })?;
            if dual.dual != sym.name || dual.dim != sym.dim || dual.is_self_dual() {
                return Err(SymbolError::DualMismatch {
                    name: sym.name.clone(),
                    reason: format!(
                        "dual `{}` must be a non-self-dual symbol of dimension {} whose dual is `{}`",
                        dual.name, sym.dim, sym.name
                    ),
                });
            }
        }
        for sym in batch {
            self.symbols.insert(sym.name.clone(), sym);
        }
        Ok(self)
    }

    pub fn get(&self, name: &str) -> Option<&CuspidalSymbol> {
        self.symbols.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.symbols.contains_key(name)
    }

    /// Name of the dual symbol. Unknown names are returned unchanged.
    pub fn dual_of<'a>(&'a self, name: &'a str) -> &'a str {
        self.symbols.get(name).map_or(name, |s| s.dual.as_str())
    }

    pub fn sd_type(&self, name: &str) -> SelfDualType {
        self.symbols
            .get(name)
            .map_or(SelfDualType::NotSelfDual, |s| s.sd_type)
    }

    pub fn is_self_dual(&self, name: &str) -> bool {
        self.sd_type(name).is_self_dual()
    }

    /// Dimension of a registered symbol; 0 for unknown names.
    pub fn dim(&self, name: &str) -> u32 {
        self.symbols.get(name).map_or(0, |s| s.dim)
    }

    pub fn iter(&self) -> impl Iterator<Item = &CuspidalSymbol> + '_ {
        self.symbols.values()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
        self.symbols.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}
