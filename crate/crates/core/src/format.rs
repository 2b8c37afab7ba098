//! Line-oriented text formats for symbol tables and parameters.
//!
//! ```text
//! # symbol table
//! symbol rho dim=1 type=orthogonal dual=rho
//! symbol sigma dim=2 type=none dual=sigma*
//!
//! # parameter
//! block sigma=rho bprime=1 b=3 x=0
//! sblock sigma=sigma a=2 x=1/4
//! ```
//!
//! `sblock sigma=s a=k x=t` is shorthand for `block sigma=s bprime=1 b=k x=t`.

use std::collections::BTreeMap;

use crate::error::{Error, ParseError};
use crate::multisegment::{ABlock, AParam};
use crate::rational::Rational;
use crate::symbol::{CuspidalSymbol, SelfDualType, SymbolTable};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

/// Strips a trailing `#` comment.
fn content(line: &str) -> &str {
    line.split_once('#').map_or(line, |(before, _)| before)
}

struct LineCtx<'a> {
    source: &'a str,
    line: usize,
}

impl LineCtx<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            source_name: self.source.to_string(),
            line: self.line,
            column,
            message: message.into(),
        }
    }
}

/// `key=value` fields after the leading keyword, each required exactly once.
fn fields<'a>(
    ctx: &LineCtx,
    toks: &[Token<'a>],
    allowed: &[&str],
) -> Result<BTreeMap<&'a str, (&'a str, usize)>, ParseError> {
    let mut map = BTreeMap::new();
    for tok in toks {
        let Some((key, value)) = tok.text.split_once('=') else {
            return Err(ctx.err(tok.column, format!("expected key=value, found `{}`", tok.text)));
        };
        if !allowed.contains(&key) {
            return Err(ctx.err(tok.column, format!("unknown key `{key}`")));
        }
        if value.is_empty() {
            return Err(ctx.err(tok.column, format!("empty value for `{key}`")));
        }
        let value_col = tok.column + key.chars().count() + 1;
        if map.insert(key, (value, value_col)).is_some() {
            return Err(ctx.err(tok.column, format!("duplicate key `{key}`")));
        }
    }
    Ok(map)
}

fn required<'a>(
    ctx: &LineCtx,
    map: &BTreeMap<&str, (&'a str, usize)>,
    key: &str,
    keyword_col: usize,
) -> Result<(&'a str, usize), ParseError> {
    map.get(key)
        .copied()
        .ok_or_else(|| ctx.err(keyword_col, format!("missing key `{key}`")))
}

fn positive_int(ctx: &LineCtx, (value, col): (&str, usize), key: &str) -> Result<u32, ParseError> {
    match value.parse::<u32>() {
        Ok(v) if v > 0 && !value.starts_with('+') => Ok(v),
        _ => Err(ctx.err(col, format!("`{key}` must be a positive integer, found `{value}`"))),
    }
}

fn rational(ctx: &LineCtx, (value, col): (&str, usize)) -> Result<Rational, ParseError> {
    value.parse().map_err(|e| ctx.err(col, format!("{e}")))
}

/// Parses a symbol table; symbols may reference duals defined later in the file.
pub fn parse_table(text: &str, source: &str) -> Result<SymbolTable, Error> {
    let mut batch = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let ctx = LineCtx {
            source,
            line: idx + 1,
        };
        let toks = tokens(content(raw));
        let Some((head, rest)) = toks.split_first() else {
            continue;
        };
        if head.text != "symbol" {
            return Err(ctx.err(head.column, format!("expected `symbol`, found `{}`", head.text)).into());
        }
        let Some((name, rest)) = rest.split_first() else {
            return Err(ctx.err(head.column, "missing symbol name").into());
        };
        if name.text.contains('=') {
            return Err(ctx.err(name.column, "missing symbol name").into());
        }
        let map = fields(&ctx, rest, &["dim", "type", "dual"])?;
        let dim = positive_int(&ctx, required(&ctx, &map, "dim", head.column)?, "dim")?;
        let (ty, ty_col) = required(&ctx, &map, "type", head.column)?;
        let sd_type = SelfDualType::from_keyword(ty).ok_or_else(|| {
            ctx.err(ty_col, format!("unknown type `{ty}` (expected symplectic, orthogonal or none)"))
        })?;
        let (dual, _) = required(&ctx, &map, "dual", head.column)?;
        batch.push(CuspidalSymbol::new(name.text, dim, sd_type, dual));
    }
    Ok(SymbolTable::new().register_batch(batch)?)
}

/// Parses a parameter file against a table. Unknown symbols are parse errors;
/// exponents outside `]-1/2, 1/2[` are validation errors.
pub fn parse_param(text: &str, source: &str, table: &SymbolTable) -> Result<AParam, Error> {
    let mut param = AParam::new();
    let mut out_of_range = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let ctx = LineCtx {
            source,
            line: idx + 1,
        };
        let toks = tokens(content(raw));
        let Some((head, rest)) = toks.split_first() else {
            continue;
        };
        let (bprime, b, x, sigma) = match head.text {
            "block" => {
                let map = fields(&ctx, rest, &["sigma", "bprime", "b", "x"])?;
                let bprime =
                    positive_int(&ctx, required(&ctx, &map, "bprime", head.column)?, "bprime")?;
                let b = positive_int(&ctx, required(&ctx, &map, "b", head.column)?, "b")?;
                let x = rational(&ctx, required(&ctx, &map, "x", head.column)?)?;
                (bprime, b, x, required(&ctx, &map, "sigma", head.column)?)
            }
            "sblock" => {
                let map = fields(&ctx, rest, &["sigma", "a", "x"])?;
                let a = positive_int(&ctx, required(&ctx, &map, "a", head.column)?, "a")?;
                let x = rational(&ctx, required(&ctx, &map, "x", head.column)?)?;
                (1, a, x, required(&ctx, &map, "sigma", head.column)?)
            }
            other => {
                return Err(ctx
                    .err(head.column, format!("expected `block` or `sblock`, found `{other}`"))
                    .into())
            }
        };
        let (sigma, sigma_col) = sigma;
        if !table.contains(sigma) {
            return Err(ctx.err(sigma_col, format!("unknown symbol `{sigma}`")).into());
        }
        match ABlock::new(sigma, bprime, b, x) {
            Ok(block) => param.push(block),
            Err(e) => out_of_range.push(format!("{source}:{}: {e}", ctx.line)),
        }
    }
    if out_of_range.is_empty() {
        Ok(param)
    } else {
        Err(Error::Validation(out_of_range.join("\n")))
    }
}
