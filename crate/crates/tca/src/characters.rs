//! Equivariant characters: decompositions into S_α(E) ⊗ S_β(V).
//!
//! The structural modules all have closed-form characters:
//!
//! - `A = ⊕_λ S_λ(E) ⊗ S_λ(V)` over ℓ(λ) ≤ d (Cauchy);
//! - `K_{r,λ}`, the quotient of S_λ(E) ⊗ A by every E-constituent with more
//!   than r rows;
//! - `J_λ = S_λ(E* ⊕ V)`, branching through Littlewood–Richardson
//!   coefficients (the E-slot is then an E*-partition, flagged dual).
//!
//! These modules are infinite-dimensional, so every character is truncated
//! at a caller-supplied V-degree cutoff: exact up to the cutoff, silent
//! beyond it.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::partitions::{partitions_max_size, partitions_of, Partition};
use crate::schur::{dim_schur, lr_coefficient, SchurElement};
use crate::{int_to_json, Error, Int, Result};

/// A finitely supported map (α, β) ↦ multiplicity of S_α(E) ⊗ S_β(V),
/// truncated at `cutoff` in V-degree. When `dual_e` is set the α slot is to
/// be read on E*; the flag only affects rendering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivCharacter {
    d: usize,
    cutoff: usize,
    dual_e: bool,
    terms: BTreeMap<(Partition, Partition), Int>,
}

impl EquivCharacter {
    pub(crate) fn new(d: usize, cutoff: usize, dual_e: bool) -> Self {
        EquivCharacter {
            d,
            cutoff,
            dual_e,
            terms: BTreeMap::new(),
        }
    }

    /// Rank of E.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Maximum V-degree retained.
    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Whether the E slot carries partitions on E*.
    pub fn dual_e(&self) -> bool {
        self.dual_e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &Int)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, alpha: &Partition, beta: &Partition) -> Int {
        self.terms
            .get(&(alpha.clone(), beta.clone()))
            .cloned()
            .unwrap_or_else(Int::zero)
    }

    pub(crate) fn add_term(&mut self, alpha: Partition, beta: Partition, mult: Int) {
        if mult.is_zero() {
            return;
        }
        debug_assert!(alpha.len() <= self.d, "E-partition exceeds rank");
        debug_assert!(beta.size() <= self.cutoff, "V-degree exceeds cutoff");
        let entry = self
            .terms
            .entry((alpha, beta))
            .or_insert_with(Int::zero);
        *entry += mult;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Hilbert function of the evaluation M(C^N), graded by V-degree:
    /// entry n = Σ_{|β|=n} mult(α,β) · dim S_α(C^d) · dim S_β(C^N).
    pub fn dimension_series(&self, n_v: usize) -> Vec<Int> {
        let mut out = vec![Int::zero(); self.cutoff + 1];
        for ((alpha, beta), mult) in &self.terms {
            let dim = dim_schur(alpha, self.d) * dim_schur(beta, n_v);
            out[beta.size()] += mult * dim;
        }
        out
    }

    /// Exchanges the E and V slots, re-truncating: keeps terms whose new
    /// E-partition has at most `new_d` rows and whose new V-degree is at
    /// most `new_cutoff`. One enumeration engine, two views.
    pub fn transpose_roles(&self, new_d: usize, new_cutoff: usize) -> EquivCharacter {
        let mut out = EquivCharacter::new(new_d, new_cutoff, self.dual_e);
        for ((alpha, beta), mult) in &self.terms {
            if beta.len() <= new_d && alpha.size() <= new_cutoff {
                out.add_term(beta.clone(), alpha.clone(), mult.clone());
            }
        }
        out
    }

    /// JSON rendering: array of {"E": [...], "V": [...], "mult": n,
    /// "dualE": bool}.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|((alpha, beta), mult)| {
                    serde_json::json!({
                        "E": alpha,
                        "V": beta,
                        "mult": int_to_json(mult),
                        "dualE": self.dual_e,
                    })
                })
                .collect(),
        )
    }

    /// Deterministic one-term-per-line text rendering.
    pub fn render_lines(&self) -> Vec<String> {
        let slot = if self.dual_e { "E*" } else { "E" };
        self.terms
            .iter()
            .map(|((alpha, beta), mult)| {
                format!("({}={}, V={}) x {}", slot, alpha, beta, mult)
            })
            .collect()
    }
}

/// The Cauchy decomposition of A itself: ⊕_λ S_λ(E) ⊗ S_λ(V) over
/// ℓ(λ) ≤ d and |λ| ≤ cutoff, all multiplicities 1.
pub fn cauchy_a(d: usize, cutoff: usize) -> EquivCharacter {
    let mut out = EquivCharacter::new(d, cutoff, false);
    for lam in partitions_max_size(cutoff, d) {
        out.add_term(lam.clone(), lam, Int::from(1));
    }
    out
}

/// Character of K_{r,λ}: ⊕_{|ν| ≤ cutoff} ⊕_ε c^ε_{λν} S_ε(E) ⊗ S_ν(V)
/// restricted to ℓ(ε) ≤ r.
pub fn k_module_character(
    r: usize,
    lam: &Partition,
    d: usize,
    cutoff: usize,
) -> Result<EquivCharacter> {
    if r > d {
        return Err(Error::InvalidArgument(format!(
            "stratum index r = {} exceeds d = {}",
            r, d
        )));
    }
    if lam.len() > r {
        return Err(Error::InvalidArgument(format!(
            "lambda = {} has more than r = {} rows",
            lam, r
        )));
    }
    let mut out = EquivCharacter::new(d, cutoff, false);
    let s_lam = SchurElement::basis(lam.clone());
    // c^ε_{λν} ≠ 0 forces ν ⊆ ε, so ℓ(ν) ≤ r may be assumed
    for nu in partitions_max_size(cutoff, r) {
        let product = &s_lam * &SchurElement::basis(nu.clone());
        for (eps, coeff) in product.terms() {
            if eps.len() <= r {
                out.add_term(eps.clone(), nu.clone(), coeff.clone());
            }
        }
    }
    Ok(out)
}

/// Character of the torsion injective J_λ = S_λ(E* ⊕ V): the branching
/// ⊕_{α,β} c^λ_{αβ} S_α(E*) ⊗ S_β(V) with ℓ(α) ≤ d and |β| ≤ cutoff.
pub fn torsion_injective_character(lam: &Partition, d: usize, cutoff: usize) -> EquivCharacter {
    let mut out = EquivCharacter::new(d, cutoff, true);
    let n = lam.size();
    for k in 0..=n {
        if n - k > cutoff {
            continue;
        }
        for alpha in partitions_of(k) {
            if alpha.len() > d || !lam.contains(&alpha) {
                continue;
            }
            for beta in partitions_of(n - k) {
                let c = lr_coefficient(&alpha, &beta, lam);
                if c > 0 {
                    out.add_term(alpha.clone(), beta, Int::from(c));
                }
            }
        }
    }
    out
}

/// Character of the V-row truncation (S_λ ⊗ A)^{≤n}: the quotient of
/// S_λ(V) ⊗ A by every V-constituent with more than `n_rows` rows, with E
/// of rank `dim_e`, up to V-degree `cutoff`.
///
/// Computed by running the K-module enumeration with the roles of E and V
/// exchanged and transposing back.
pub fn truncated_free_character(
    lam: &Partition,
    n_rows: usize,
    dim_e: usize,
    cutoff: usize,
) -> Result<EquivCharacter> {
    let inner_cutoff = cutoff.saturating_sub(lam.size());
    let swapped = k_module_character(n_rows, lam, n_rows, inner_cutoff)?;
    Ok(swapped.transpose_roles(dim_e, cutoff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bott::{bwb_pushforward, BottOutcome};
    use num_integer::binomial;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cauchy_examples() {
        let ch = cauchy_a(1, 3);
        assert_eq!(ch.len(), 4);
        for k in 0..=3usize {
            let lam = Partition::new(vec![k]).unwrap();
            assert_eq!(ch.multiplicity(&lam, &lam), Int::from(1));
        }

        let ch = cauchy_a(2, 2);
        let support: Vec<_> = ch.terms().map(|((a, _), _)| a.clone()).collect();
        assert_eq!(support, vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1])]);

        let ch = cauchy_a(0, 5);
        assert_eq!(ch.len(), 1);
        assert_eq!(
            ch.multiplicity(&Partition::empty(), &Partition::empty()),
            Int::from(1)
        );
    }

    #[test]
    fn k_module_examples() {
        let ch = k_module_character(0, &Partition::empty(), 3, 4).unwrap();
        assert_eq!(ch.len(), 1);
        assert_eq!(
            ch.multiplicity(&Partition::empty(), &Partition::empty()),
            Int::from(1)
        );

        for d in 1..=3usize {
            assert_eq!(
                k_module_character(d, &Partition::empty(), d, 4).unwrap(),
                cauchy_a(d, 4)
            );
        }

        let ch = k_module_character(1, &p(&[1]), 2, 2).unwrap();
        assert_eq!(ch.len(), 3);
        for k in 0..=2usize {
            assert_eq!(
                ch.multiplicity(
                    &Partition::new(vec![k + 1]).unwrap(),
                    &Partition::new(vec![k]).unwrap()
                ),
                Int::from(1)
            );
        }
    }

    #[test]
    fn k_module_rejects_bad_arguments() {
        assert!(k_module_character(3, &Partition::empty(), 2, 2).is_err());
        assert!(k_module_character(1, &p(&[1, 1]), 2, 2).is_err());
    }

    #[test]
    fn k_module_support_contains_lambda() {
        for d in 1..=3usize {
            for r in 0..=d {
                for lam in crate::partitions::partitions_max_size(3, r) {
                    let ch = k_module_character(r, &lam, d, 3).unwrap();
                    for ((eps, _), _) in ch.terms() {
                        assert!(eps.contains(&lam));
                        assert!(eps.len() <= r);
                    }
                }
            }
        }
    }

    // Route 2 for K_{r,λ}: ⊕_ν H^0(Gr_r(C^d), S_λ(Q) ⊗ S_ν(Q)) ⊗ S_ν(V)
    // through Borel–Weil–Bott pushforwards.
    fn k_module_via_bwb(r: usize, lam: &Partition, d: usize, cutoff: usize) -> EquivCharacter {
        let mut out = EquivCharacter::new(d, cutoff, false);
        let s_lam = SchurElement::basis(lam.clone());
        for nu in partitions_max_size(cutoff, r) {
            let on_q = &s_lam * &SchurElement::basis(nu.clone());
            for (eps, coeff) in on_q.terms() {
                if eps.len() > r {
                    continue; // S_ε(Q) = 0 on a rank-r bundle
                }
                let push = bwb_pushforward(
                    &eps.padded(r),
                    &Partition::empty().padded(d - r),
                    d,
                )
                .unwrap();
                if let BottOutcome::Nonzero { sorted, steps } = push {
                    assert_eq!(steps, 0, "partition weights have no higher cohomology");
                    let gamma = sorted.to_partition().unwrap();
                    out.add_term(gamma, nu.clone(), coeff.clone());
                }
            }
        }
        out
    }

    #[test]
    fn k_module_agrees_with_bwb_route() {
        for d in 1..=3usize {
            for r in 0..=d {
                for lam in crate::partitions::partitions_in_rectangle(r, d - r) {
                    assert_eq!(
                        k_module_character(r, &lam, d, 3).unwrap(),
                        k_module_via_bwb(r, &lam, d, 3),
                        "r={} λ={} d={}",
                        r,
                        lam,
                        d
                    );
                }
            }
        }
    }

    #[test]
    fn torsion_injective_examples() {
        let ch = torsion_injective_character(&Partition::empty(), 2, 3);
        assert_eq!(ch.len(), 1);
        assert!(ch.dual_e());

        let ch = torsion_injective_character(&p(&[1]), 2, 3);
        assert_eq!(ch.len(), 2);
        assert_eq!(
            ch.multiplicity(&Partition::empty(), &p(&[1])),
            Int::from(1)
        );
        assert_eq!(
            ch.multiplicity(&p(&[1]), &Partition::empty()),
            Int::from(1)
        );

        let ch = torsion_injective_character(&p(&[1, 1]), 2, 3);
        assert_eq!(ch.len(), 3);
        assert_eq!(
            ch.multiplicity(&p(&[1, 1]), &Partition::empty()),
            Int::from(1)
        );
        assert_eq!(ch.multiplicity(&p(&[1]), &p(&[1])), Int::from(1));
        assert_eq!(
            ch.multiplicity(&Partition::empty(), &p(&[1, 1])),
            Int::from(1)
        );
    }

    #[test]
    fn torsion_branching_dimensions() {
        // Σ_{α,β} c^λ_{αβ} dim S_α(C^a) dim S_β(C^b) = dim S_λ(C^{a+b})
        for a in 0..=3usize {
            for b in 0..=3usize {
                for lam in crate::partitions::partitions_max_size(5, 5) {
                    let ch = torsion_injective_character(&lam, a, lam.size());
                    let mut total = Int::zero();
                    for ((alpha, beta), mult) in ch.terms() {
                        total += mult * dim_schur(alpha, a) * dim_schur(beta, b);
                    }
                    assert_eq!(total, dim_schur(&lam, a + b), "λ={} a={} b={}", lam, a, b);
                }
            }
        }
    }

    #[test]
    fn dimension_series_examples() {
        assert_eq!(
            cauchy_a(1, 3).dimension_series(1),
            vec![Int::from(1), Int::from(1), Int::from(1), Int::from(1)]
        );
        let series = cauchy_a(2, 3).dimension_series(0);
        assert_eq!(series[0], Int::from(1));
        assert!(series[1..].iter().all(|x| x.is_zero()));
        let series = k_module_character(0, &Partition::empty(), 2, 3)
            .unwrap()
            .dimension_series(4);
        assert_eq!(series[0], Int::from(1));
        assert!(series[1..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn cauchy_dimension_series_is_polynomial_ring() {
        // A(C^N) is a polynomial ring in dN variables, so the V-degree n
        // piece has dimension binomial(dN + n − 1, n).
        for d in 0..=3usize {
            for n_v in 0..=3usize {
                let series = cauchy_a(d, 6).dimension_series(n_v);
                for (n, got) in series.iter().enumerate() {
                    let vars = d * n_v;
                    let expect = if n == 0 {
                        Int::from(1)
                    } else if vars == 0 {
                        Int::zero()
                    } else {
                        binomial(Int::from(vars + n - 1), Int::from(n))
                    };
                    assert_eq!(*got, expect, "d={} N={} degree {}", d, n_v, n);
                }
            }
        }
    }

    #[test]
    fn truncated_free_character_is_transposed_truncation() {
        // d = 1, n = 1, λ = ∅: the truncation of A itself is all of A
        let tr = truncated_free_character(&Partition::empty(), 1, 1, 4).unwrap();
        assert_eq!(tr, cauchy_a(1, 4));

        // λ = ∅, n = 1, dimE = 2: V-partitions capped at one row
        let tr = truncated_free_character(&Partition::empty(), 1, 2, 3).unwrap();
        for ((alpha, beta), _) in tr.terms() {
            assert!(beta.len() <= 1);
            assert!(alpha.len() <= 2);
        }
        assert_eq!(tr.multiplicity(&p(&[2]), &p(&[2])), Int::from(1));
        assert_eq!(tr.multiplicity(&p(&[1, 1]), &p(&[2])), Int::zero());
    }
}
