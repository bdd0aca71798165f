//! Parsing the CLI monomial syntax `a[i,j]^e*a[k,l]*…`.

use charforge_core::{Monomial, VarId};

/// Parses a product of entry factors. Indices are 1-based and must lie in
/// 1..=m; repeated factors multiply. The syntax is deliberately explicit
/// (`a[i,j]`, `^`, `*`) so multi-digit indices stay unambiguous.
pub fn parse(text: &str, m: usize) -> Result<Monomial, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty monomial".into());
    }
    let mut pairs = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let rest = factor
            .strip_prefix("a[")
            .ok_or_else(|| format!("factor {factor:?} does not start with a["))?;
        let (inside, after) = rest
            .split_once(']')
            .ok_or_else(|| format!("factor {factor:?} is missing ]"))?;
        let (row_text, col_text) = inside
            .split_once(',')
            .ok_or_else(|| format!("indices {inside:?} are not comma-separated"))?;
        let row = parse_index(row_text, m)?;
        let col = parse_index(col_text, m)?;
        let exponent = match after {
            "" => 1,
            _ => {
                let exp_text = after
                    .strip_prefix('^')
                    .ok_or_else(|| format!("unexpected {after:?} after ]"))?;
                let e: u32 = exp_text
                    .trim()
                    .parse()
                    .map_err(|err| format!("bad exponent {exp_text:?}: {err}"))?;
                if e == 0 {
                    return Err("exponents must be positive".into());
                }
                e
            }
        };
        pairs.push((VarId::entry(row, col), exponent));
    }
    Ok(Monomial::from_exponents(pairs))
}

fn parse_index(text: &str, m: usize) -> Result<usize, String> {
    let idx: usize = text
        .trim()
        .parse()
        .map_err(|e| format!("bad index {text:?}: {e}"))?;
    if idx == 0 || idx > m {
        return Err(format!("index {idx} is outside 1..={m}"));
    }
    Ok(idx)
}
