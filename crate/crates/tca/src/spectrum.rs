//! Krull-dimension combinatorics of the total Grassmannian Gr(E).
//!
//! Gr(E) is the union of the Gr_r(E) with the downward-closure topology;
//! its Krull dimension is binomial(d+1, 2), realized by an explicit chain
//! built from a complete flag 0 = V_0 ⊂ V_1 ⊂ ⋯ ⊂ V_d = E: with Y_{r,i}
//! the r-dimensional subspaces of V_{r+1} containing V_{r−i} and Z_{r,i}
//! the closure of Y_{r,i} in Gr(E),
//!
//! Z_{0,0} ⊂ Z_{1,0} ⊂ Z_{1,1} ⊂ Z_{2,0} ⊂ ⋯ ⊂ Z_{d−1,d−1} ⊂ Gr(E).
//!
//! Only the chain labels are modeled; the flags are described in the
//! rendered text.

use std::fmt;

/// A link of the maximal chain: a closure label Z_{r,i}, or Gr(E) itself.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChainLabel {
    /// Closure of the set of r-dimensional subspaces of V_{r+1} containing
    /// V_{r−i}; requires i ≤ r ≤ d−1.
    Closure { r: usize, i: usize },
    /// The terminal member Gr(E).
    Total,
}

impl fmt::Display for ChainLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainLabel::Closure { r, i } => write!(
                f,
                "Z[{},{}] = closure of {{{}-dim subspaces of V_{} containing V_{}}}",
                r,
                i,
                r,
                r + 1,
                r - i
            ),
            ChainLabel::Total => write!(f, "Gr(E)"),
        }
    }
}

/// Krull dimension of Gr(E) for E = C^d: d(d+1)/2.
pub fn krull_dimension(d: usize) -> usize {
    d * (d + 1) / 2
}

/// The maximal chain of irreducible closed subsets; its number of strict
/// inclusions is binomial(d+1, 2). Requires d ≥ 1.
pub fn maximal_chain(d: usize) -> Vec<ChainLabel> {
    assert!(d >= 1, "maximal_chain requires d >= 1");
    let mut out = Vec::with_capacity(krull_dimension(d) + 1);
    for r in 0..d {
        for i in 0..=r {
            out.push(ChainLabel::Closure { r, i });
        }
    }
    out.push(ChainLabel::Total);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_values() {
        assert_eq!(krull_dimension(0), 0);
        assert_eq!(krull_dimension(1), 1);
        assert_eq!(krull_dimension(3), 6);
    }

    #[test]
    fn chain_examples() {
        let chain = maximal_chain(1);
        assert_eq!(
            chain,
            vec![ChainLabel::Closure { r: 0, i: 0 }, ChainLabel::Total]
        );

        let chain = maximal_chain(2);
        assert_eq!(
            chain,
            vec![
                ChainLabel::Closure { r: 0, i: 0 },
                ChainLabel::Closure { r: 1, i: 0 },
                ChainLabel::Closure { r: 1, i: 1 },
                ChainLabel::Total,
            ]
        );

        assert_eq!(maximal_chain(3).len(), 7);
    }

    #[test]
    fn chain_length_is_dimension() {
        for d in 1..=12usize {
            let chain = maximal_chain(d);
            assert_eq!(chain.len() - 1, krull_dimension(d));
            // labels strictly increase in (r, then i)
            let keys: Vec<_> = chain
                .iter()
                .filter_map(|l| match l {
                    ChainLabel::Closure { r, i } => Some((*r, *i)),
                    ChainLabel::Total => None,
                })
                .collect();
            let mut sorted = keys.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(keys, sorted);
        }
    }
}
