use crate::error::{Error, Result};
use num_bigint::BigUint;

/// Stack number of `K_n`: one page up to a triangle, `⌈n/2⌉` from four
/// vertices on.
pub fn complete_stack_number(n: u64) -> u64 {
    match n {
        0 | 1 => 0,
        2 | 3 => 1,
        _ => n.div_ceil(2),
    }
}

/// Evaluates a named closed-form bound. Names accept `-` or `_`.
///
/// | name | params | value |
/// |------|--------|-------|
/// | `subdivision-queue` | q, k | (2q+2)^(2k) / 2 - 1 |
/// | `treewidth-queue` | k | 2^k - 1 |
/// | `complete-stack` | n | stack number of K_n |
/// | `complete-queue` | n | ⌊n/2⌋ |
/// | `complete-bipartite-queue` | m, n | min(⌈m/2⌉, ⌈n/2⌉) |
pub fn bound_formulas(name: &str, params: &[u64]) -> Result<BigUint> {
    let key = name.replace('_', "-");
    let key = key.strip_suffix("-bound").unwrap_or(&key);
    let arity = match key {
        "subdivision-queue" | "complete-bipartite-queue" => 2,
        "treewidth-queue" | "complete-stack" | "complete-queue" => 1,
        _ => return Err(Error::InvalidParameter(format!("unknown bound `{name}`"))),
    };
    if params.len() != arity || params.contains(&0) {
        return Err(Error::InvalidParameter(format!(
            "`{key}` takes {arity} positive integer parameter(s)"
        )));
    }
    let exp = |x: u64| -> Result<u32> {
        u32::try_from(x).map_err(|_| Error::InvalidParameter(format!("exponent {x} too large")))
    };
    let one = BigUint::from(1u32);
    Ok(match key {
        "subdivision-queue" => {
            let (q, k) = (params[0], params[1]);
            BigUint::from(2 * q + 2).pow(exp(2 * k)?) / 2u32 - one
        }
        "treewidth-queue" => (BigUint::from(1u32) << exp(params[0])?) - one,
        "complete-stack" => complete_stack_number(params[0]).into(),
        "complete-queue" => (params[0] / 2).into(),
        _ => params[0].div_ceil(2).min(params[1].div_ceil(2)).into(),
    })
}
