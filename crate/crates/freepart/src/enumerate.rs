//! Labelled counting of small hereditary classes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{self, PatternSpec};

/// Largest `n` accepted by [`count_labelled`].
pub const ENUMERATE_LIMIT: usize = 7;

/// Number of graphs on `{0..n-1}` containing none of `specs`, over all
/// `2^(n choose 2)` edge sets.
pub fn count_labelled(specs: &[PatternSpec], n: usize) -> Result<u128> {
    if n > ENUMERATE_LIMIT {
        return Err(Error::SizeLimit {
            what: "enumeration vertex count".into(),
            limit: ENUMERATE_LIMIT,
            got: n,
        });
    }
    if let Some(s) = specs.iter().find(|s| s.family.is_bipartite()) {
        return Err(Error::Argument(format!("{s} is a bipartite pattern")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let count = (0..1u64 << bits)
        .into_par_iter()
        .filter(|&code| patterns::first_witness(&Graph::from_code(n, code), specs).is_none())
        .count();
    Ok(count as u128)
}

/// `n,count` lines for `n = 1..=max_n`, with a header.
pub fn speed_csv(specs: &[PatternSpec], max_n: usize) -> Result<String> {
    let mut out = String::from("n,count\n");
    for n in 1..=max_n {
        out.push_str(&format!("{n},{}\n", count_labelled(specs, n)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_labelled(&[], 4).unwrap(), 64);
        let edge = PatternSpec::nk2(1);
        assert_eq!(count_labelled(&[edge], 3).unwrap(), 1);
        assert_eq!(speed_csv(&[edge], 2).unwrap(), "n,count\n1,1\n2,1\n");
        assert!(count_labelled(&[], 8).is_err());
        assert!(count_labelled(&[PatternSpec::matching(2)], 3).is_err());
    }
}
