use crate::error::{Error, Result};
use num_bigint::BigUint;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RamseyMode {
    /// Known values with both arguments at most 4.
    ExactSmall,
    /// The binomial bound `C(r+s-2, r-1)`.
    Upper,
}

/// Largest edge count for which [`verify_ramsey`] enumerates colourings.
pub const RAMSEY_VERIFY_EDGE_LIMIT: usize = 28;

/// `R(r, s)`: the least `N` such that every red/blue colouring of `K_N` has a
/// blue `K_r` or a red `K_s`.
pub fn ramsey_number(r: usize, s: usize, mode: RamseyMode) -> Result<BigUint> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidParameter(
            "Ramsey arguments must be positive".into(),
        ));
    }
    match mode {
        RamseyMode::Upper => Ok(binomial(r + s - 2, r - 1)),
        RamseyMode::ExactSmall => {
            let (lo, hi) = (r.min(s), r.max(s));
            let value = match (lo, hi) {
                (1, _) => 1,
                (2, k) => k,
                (3, 3) => 6,
                (3, 4) => 9,
                (4, 4) => 18,
                _ => {
                    return Err(Error::SizeLimit {
                        what: "exact Ramsey argument",
                        size: hi,
                        limit: 4,
                    })
                }
            };
            Ok(BigUint::from(value))
        }
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    let k = k.min(n - k.min(n));
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Whether every 2-colouring of `K_n` has a blue `K_r` or a red `K_s`, by
/// enumerating all colourings.
pub fn verify_ramsey(r: usize, s: usize, n: usize) -> Result<bool> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    if pairs.len() > RAMSEY_VERIFY_EDGE_LIMIT {
        return Err(Error::SizeLimit {
            what: "Ramsey verification (edges)",
            size: pairs.len(),
            limit: RAMSEY_VERIFY_EDGE_LIMIT,
        });
    }
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        index[a][b] = i;
        index[b][a] = i;
    }
    let subsets = |size: usize| -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == size)
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect()
    };
    // each clique as the bitmask of its edges
    let masks = |size: usize| -> Vec<u32> {
        subsets(size)
            .iter()
            .map(|set| {
                let mut mask = 0u32;
                for (i, &a) in set.iter().enumerate() {
                    for &b in &set[i + 1..] {
                        mask |= 1 << index[a][b];
                    }
                }
                mask
            })
            .collect()
    };
    let (blue, red) = (masks(r), masks(s));
    let all = if pairs.is_empty() {
        0
    } else {
        u32::MAX >> (32 - pairs.len())
    };
    for coloring in 0..=all {
        // bit set = red
        let has_blue = blue.iter().any(|&m| coloring & m == 0);
        #[allow(clippy::manual_contains)]
        let has_red = red.iter().any(|&m| coloring & m == m);
        if !has_blue && !has_red {
            return Ok(false);
        }
        if coloring == all {
            break;
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(
            ramsey_number(3, 3, RamseyMode::ExactSmall).unwrap(),
            6u32.into()
        );
        assert_eq!(
            ramsey_number(2, 7, RamseyMode::ExactSmall).unwrap(),
            7u32.into()
        );
        assert_eq!(
            ramsey_number(4, 3, RamseyMode::ExactSmall).unwrap(),
            9u32.into()
        );
        assert_eq!(
            ramsey_number(3, 4, RamseyMode::Upper).unwrap(),
            10u32.into()
        );
        assert!(ramsey_number(3, 5, RamseyMode::ExactSmall).is_err());
    }

    #[test]
    fn r33_by_exhaustion() {
        assert!(!verify_ramsey(3, 3, 5).unwrap());
        assert!(verify_ramsey(3, 3, 6).unwrap());
        assert!(verify_ramsey(2, 4, 4).unwrap());
        assert!(!verify_ramsey(2, 4, 3).unwrap());
        assert!(verify_ramsey(3, 3, 9).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(75, 3), 67525u32.into());
        assert_eq!(binomial(5, 0), 1u32.into());
    }
}
