//! Exact bookkeeping for cuspidal representations of `Sp(2n)`, `SO(2n+1)` and
//! `O(2n)` over a p-adic field, abstracted by their parameter on `GL(2n + e)`.
//!
//! From a parameter the library computes Jordan blocks, reducibility points
//! of `rho |det|^s x pi_0`, orders of the Arthur- and Langlands-style
//! normalization factors of intertwining operators, the reconstruction of
//! twisted Jordan data from reducibility points, and the factorization of the
//! formal parameter through the dual group.

pub mod cli;
pub mod error;
pub mod format;
pub mod group;
pub mod lfactor;
pub mod lparam;
pub mod multisegment;
pub mod multiset;
pub mod rational;
pub mod reconstruction;
pub mod reducibility;
pub mod symbol;

pub use cli::{run, Command, Outcome, Session};
pub use error::Error;
pub use group::{GroupForm, GroupKind};
pub use multisegment::{ABlock, AParam, SpehBlock, SpehParam};
pub use multiset::Multiset;
pub use rational::Rational;
pub use reducibility::O2nFlags;
pub use symbol::{CuspidalSymbol, SelfDualType, SymbolTable};
