//! Equivariant Betti tables of the V-row truncations (S_λ ⊗ A)^{≤n}.
//!
//! The truncation is the sections of S_λ(Q) ⊗ Sym(E ⊗ Q) on Gr_n(C^∞), and
//! its minimal free resolution has
//!
//! F_i = ⊕_{j ≥ 0} H^j(∧^{i+j} ξ ⊗ S_λ(Q)) ⊗ A(−i−j),   ξ = E ⊗ R,
//!
//! with ∧^e ξ = ⊕_{|μ|=e, μ_1 ≤ dim E} S_{μ†}(E) ⊗ S_μ(R). The cohomology
//! of S_λ(Q) ⊗ S_μ(R) is computed by the infinite Bott algorithm on the
//! concatenated weight (λ_1, …, λ_n, μ_1, μ_2, …): a nonzero outcome
//! (ν, steps = j) lands in homological degree i = |μ| − j on strand j. The
//! strand index is bounded by n(dim E − λ_n − 1), and is 0 throughout when
//! λ_n ≥ dim E.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::bott::{bott_infinite, BottOutcome};
use crate::exec::{map_collect, Strategy};
use crate::partitions::{partitions_bounded, Partition};
use crate::{int_to_json, Error, Int, Result};

/// One Betti cell: multiplicities of S_ε(E) ⊗ S_ν(V) in Tor_i in strand j.
pub type BettiCell = BTreeMap<(Partition, Partition), Int>;

/// The Betti table of (S_λ ⊗ A)^{≤n}, swept up to homological degree
/// `i_max`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    dim_e: usize,
    n: usize,
    lam: Partition,
    i_max: usize,
    entries: BTreeMap<(usize, usize), BettiCell>,
}

impl BettiTable {
    pub fn dim_e(&self) -> usize {
        self.dim_e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    /// Nonempty cells, keyed by (homological degree i, strand j).
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BettiCell)> {
        self.entries.iter()
    }

    pub fn cell(&self, i: usize, j: usize) -> Option<&BettiCell> {
        self.entries.get(&(i, j))
    }

    /// Largest strand index with a nonzero entry in the swept range.
    pub fn observed_regularity(&self) -> usize {
        self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Row j of the table: for each i ≤ i_max, the list of
    /// (ε, ν, multiplicity) triples of Tor_i in strand j.
    pub fn linear_strand(&self, j: usize) -> Vec<Vec<(Partition, Partition, Int)>> {
        (0..=self.i_max)
            .map(|i| {
                self.entries
                    .get(&(i, j))
                    .map(|cell| {
                        cell.iter()
                            .map(|((eps, nu), mult)| (eps.clone(), nu.clone(), mult.clone()))
                            .collect()
                    })
                    .unwrap_or_default()
            })
            .collect()
    }

    /// JSON rendering: sorted array of cells with their term lists.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|(&(i, j), cell)| {
                    serde_json::json!({
                        "i": i,
                        "j": j,
                        "terms": cell
                            .iter()
                            .map(|((eps, nu), mult)| {
                                serde_json::json!({
                                    "E": eps,
                                    "V": nu,
                                    "mult": int_to_json(mult),
                                })
                            })
                            .collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }

    /// Deterministic text rendering: rows j, columns i.
    pub fn render_lines(&self) -> Vec<String> {
        let mut lines = Vec::new();
        let max_j = self.observed_regularity();
        for j in 0..=max_j {
            lines.push(format!("strand j={}", j));
            for i in 0..=self.i_max {
                if let Some(cell) = self.entries.get(&(i, j)) {
                    let terms: Vec<String> = cell
                        .iter()
                        .map(|((eps, nu), mult)| format!("(E={}, V={}) x {}", eps, nu, mult))
                        .collect();
                    lines.push(format!("  i={}: {}", i, terms.join(", ")));
                }
            }
        }
        lines
    }
}

/// The exterior power decomposition ∧^e ξ = ⊕ S_{μ†}(E) ⊗ S_μ(R): all
/// partitions μ with |μ| = e and μ_1 ≤ dim E, paired with their E-side
/// transpose.
pub fn exterior_xi_terms(e: usize, dim_e: usize) -> Vec<(Partition, Partition)> {
    partitions_bounded(e, dim_e, e)
        .into_iter()
        .map(|mu| {
            let t = mu.transpose();
            (mu, t)
        })
        .collect()
}

/// The a-priori regularity bound from the geometric resolution: 0 when
/// λ_n ≥ dim E, otherwise n(dim E − λ_n − 1).
pub fn a_priori_regularity_bound(lam: &Partition, n: usize, dim_e: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let lam_n = lam.part(n - 1);
    if lam_n >= dim_e {
        0
    } else {
        n * (dim_e - lam_n - 1)
    }
}

/// Builds the Betti table of (S_λ ⊗ A)^{≤n} for homological degrees
/// i ≤ i_max, with the default strategy.
pub fn betti_table(lam: &Partition, n: usize, dim_e: usize, i_max: usize) -> Result<BettiTable> {
    betti_table_with(Strategy::default(), lam, n, dim_e, i_max)
}

/// Builds the Betti table with an explicit execution strategy.
pub fn betti_table_with(
    strategy: Strategy,
    lam: &Partition,
    n: usize,
    dim_e: usize,
    i_max: usize,
) -> Result<BettiTable> {
    if lam.len() > n {
        return Err(Error::InvalidArgument(format!(
            "lambda = {} has more than n = {} rows",
            lam, n
        )));
    }
    let head = lam.padded(n);
    let j_bound = a_priori_regularity_bound(lam, n, dim_e);
    let mut jobs = Vec::new();
    for e in 0..=(i_max + j_bound) {
        for (mu, eps) in exterior_xi_terms(e, dim_e) {
            jobs.push((e, mu, eps));
        }
    }
    let hits = map_collect(strategy, jobs, |(e, mu, eps)| {
        match bott_infinite(&head, &mu) {
            BottOutcome::Vanishes => None,
            BottOutcome::Nonzero { sorted, steps } => {
                assert!(
                    steps <= e,
                    "cohomological degree {} exceeds exterior degree {}",
                    steps,
                    e
                );
                Some((e - steps, steps, eps, sorted))
            }
        }
    });
    let mut entries: BTreeMap<(usize, usize), BettiCell> = BTreeMap::new();
    for (i, j, eps, nu) in hits.into_iter().flatten() {
        if i > i_max {
            continue;
        }
        // distinct μ with the same (ε, ν, i, j) signature accumulate
        *entries
            .entry((i, j))
            .or_default()
            .entry((eps, nu))
            .or_insert_with(Int::zero) += 1;
    }
    Ok(BettiTable {
        dim_e,
        n,
        lam: lam.clone(),
        i_max,
        entries,
    })
}

/// Regularity of (S_λ ⊗ A)^{≤n} as observed in the i ≤ i_max sweep,
/// together with the a-priori bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RegularityReport {
    pub observed: usize,
    pub bound: usize,
    /// True when the bound row is realized, so no larger sweep can change
    /// the observed value; otherwise the value is an observation only.
    pub certified: bool,
}

pub fn regularity_report(
    lam: &Partition,
    n: usize,
    dim_e: usize,
    i_max: usize,
) -> Result<RegularityReport> {
    let table = betti_table(lam, n, dim_e, i_max)?;
    let observed = table.observed_regularity();
    let bound = a_priori_regularity_bound(lam, n, dim_e);
    if observed > bound {
        return Err(Error::Internal(format!(
            "observed regularity {} exceeds the bound {}",
            observed, bound
        )));
    }
    Ok(RegularityReport {
        observed,
        bound,
        certified: observed == bound,
    })
}

/// The cogeneration bound on the Tor comodule: homological degrees
/// ≤ dim E · max(0, dim E − λ_n − 1). Requires n ≥ 1 and ℓ(λ) ≤ n.
pub fn cogeneration_bound(lam: &Partition, n: usize, dim_e: usize) -> usize {
    assert!(n >= 1, "cogeneration_bound requires n >= 1");
    assert!(lam.len() <= n, "lambda must fit in n rows");
    let lam_n = lam.part(n - 1) as i64;
    dim_e * (dim_e as i64 - lam_n - 1).max(0) as usize
}
