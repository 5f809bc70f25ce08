//! Derived saturation of the generic simple modules S_μ(K) in closed form.
//!
//! For the weight [λ,μ] = (λ_1, …, λ_d, μ_1, μ_2, …), the i-th derived
//! saturation is
//!
//! R^i S(S_μ(K)) = ⊕_{[λ,μ] →i ν} S_ν(V) ⊗ S_λ(E),
//!
//! the sum over partitions λ with ℓ(λ) ≤ d for which Bott's algorithm on
//! [λ,μ] terminates in exactly i steps. The i = 0 specialization has the
//! direct description S(S_μ(K)) = ⊕_{λ_d ≥ μ_1} S_{[λ,μ]}(V) ⊗ S_λ(E).
//!
//! The enumeration bound `cutoff` applies to |λ|, the E-degree; the
//! V-degrees of the output reach cutoff + |μ|, and the returned character
//! records that larger V-cutoff.

use crate::bott::{bott_infinite, BottOutcome};
use crate::characters::EquivCharacter;
use crate::exec::{map_collect, Strategy};
use crate::partitions::{partitions_max_size, Partition};
use crate::Int;

/// R^i S(S_μ(K)) up to E-degree `cutoff`, with the default strategy.
///
/// Panics if d = 0.
pub fn derived_saturation(mu: &Partition, d: usize, i: usize, cutoff: usize) -> EquivCharacter {
    derived_saturation_with(Strategy::default(), mu, d, i, cutoff)
}

/// R^i S(S_μ(K)) with an explicit execution strategy.
pub fn derived_saturation_with(
    strategy: Strategy,
    mu: &Partition,
    d: usize,
    i: usize,
    cutoff: usize,
) -> EquivCharacter {
    assert!(d >= 1, "derived_saturation requires d >= 1");
    let lambdas = partitions_max_size(cutoff, d);
    let hits = map_collect(strategy, lambdas, |lam| {
        let head = lam.padded(d);
        match bott_infinite(&head, mu) {
            BottOutcome::Nonzero { sorted, steps } if steps == i => Some((lam, sorted)),
            _ => None,
        }
    });
    let mut out = EquivCharacter::new(d, cutoff + mu.size(), false);
    let mut inserted = 0usize;
    for (lam, nu) in hits.into_iter().flatten() {
        out.add_term(lam, nu, Int::from(1));
        inserted += 1;
    }
    // λ is part of the output key, so the sum is multiplicity-free
    assert_eq!(
        out.len(),
        inserted,
        "derived saturation produced a colliding (λ, ν) cell"
    );
    out
}

/// The i = 0 closed form: direct enumeration of λ with λ_d ≥ μ_1,
/// ℓ(λ) ≤ d, |λ| ≤ cutoff, each contributing S_{[λ,μ]}(V) ⊗ S_λ(E).
///
/// Panics if d = 0.
pub fn saturation_closed_form(mu: &Partition, d: usize, cutoff: usize) -> EquivCharacter {
    assert!(d >= 1, "saturation_closed_form requires d >= 1");
    let mut out = EquivCharacter::new(d, cutoff + mu.size(), false);
    for lam in partitions_max_size(cutoff, d) {
        if lam.part(d - 1) < mu.part(0) {
            continue;
        }
        let mut parts: Vec<usize> = (0..d).map(|k| lam.part(k)).collect();
        parts.extend(mu.parts());
        let nu = Partition::new(parts).expect("λ_d ≥ μ_1 makes [λ,μ] a partition");
        out.add_term(lam, nu, Int::from(1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::cauchy_a;
    use num_traits::Zero;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn saturation_of_trivial_mu_is_cauchy() {
        for d in 1..=3usize {
            let got = derived_saturation(&Partition::empty(), d, 0, 4);
            assert_eq!(got, cauchy_a(d, 4));
            assert_eq!(saturation_closed_form(&Partition::empty(), d, 4), got);
        }
    }

    #[test]
    fn derived_saturation_examples() {
        // μ=(1), d=1, i=0: S_{(k,1)}(V) ⊗ S_{(k)}(E) for k = 1, 2, 3
        let ch = derived_saturation(&p(&[1]), 1, 0, 3);
        assert_eq!(ch.len(), 3);
        for k in 1..=3usize {
            assert_eq!(
                ch.multiplicity(
                    &Partition::new(vec![k]).unwrap(),
                    &Partition::new(vec![k, 1]).unwrap()
                ),
                Int::from(1)
            );
        }

        // μ=(2), d=1, i=1: the single term S_{(1,1)}(V) ⊗ S_∅(E)
        let ch = derived_saturation(&p(&[2]), 1, 1, 4);
        assert_eq!(ch.len(), 1);
        assert_eq!(
            ch.multiplicity(&Partition::empty(), &p(&[1, 1])),
            Int::from(1)
        );
    }

    #[test]
    fn closed_form_examples() {
        // μ=(1), d=2: λ_2 ≥ 1; cutoff counts |λ|
        let ch = saturation_closed_form(&p(&[1]), 2, 2);
        assert_eq!(ch.len(), 1);
        assert_eq!(ch.multiplicity(&p(&[1, 1]), &p(&[1, 1, 1])), Int::from(1));
        let ch = saturation_closed_form(&p(&[1]), 2, 3);
        assert_eq!(ch.len(), 2);
        assert_eq!(ch.multiplicity(&p(&[2, 1]), &p(&[2, 1, 1])), Int::from(1));

        // μ=(3), d=1, cutoff=4: λ = (3), (4)
        let ch = saturation_closed_form(&p(&[3]), 1, 4);
        assert_eq!(ch.len(), 2);
        assert_eq!(ch.multiplicity(&p(&[3]), &p(&[3, 3])), Int::from(1));
        assert_eq!(ch.multiplicity(&p(&[4]), &p(&[4, 3])), Int::from(1));
    }

    #[test]
    fn specialization_matches_closed_form() {
        for mu in crate::partitions::partitions_max_size(4, 4) {
            for d in 1..=3usize {
                assert_eq!(
                    derived_saturation(&mu, d, 0, 6),
                    saturation_closed_form(&mu, d, 6),
                    "μ={} d={}",
                    mu,
                    d
                );
            }
        }
    }

    #[test]
    fn bott_dichotomy_one_degree_per_lambda() {
        // each λ contributes to exactly one i, or to none
        let mu = p(&[2, 1]);
        let d = 2;
        let cutoff = 5;
        let mut seen = std::collections::HashMap::new();
        for i in 0..=8usize {
            let ch = derived_saturation(&mu, d, i, cutoff);
            for ((lam, _), mult) in ch.terms() {
                assert!(!mult.is_zero());
                assert!(
                    seen.insert(lam.clone(), i).is_none(),
                    "λ={} appeared twice",
                    lam
                );
            }
        }
    }

    #[test]
    fn d1_single_row_mu_vanishes_above_degree_one() {
        for mu_size in 0..=4usize {
            let mu = Partition::new(vec![mu_size]).unwrap();
            for i in 2..=6usize {
                let ch = derived_saturation(&mu, 1, i, 6);
                assert!(ch.is_empty(), "μ={} i={}", mu, i);
            }
        }
    }

    #[test]
    fn sequential_strategy_agrees() {
        let mu = p(&[2]);
        assert_eq!(
            derived_saturation_with(Strategy::Sequential, &mu, 2, 1, 5),
            derived_saturation(&mu, 2, 1, 5)
        );
    }
}
