//! Bott's algorithm and Borel–Weil–Bott pushforwards.
//!
//! For a weight v of length d and ρ = (d−1, d−2, …, 0), exactly one of two
//! things happens: v + ρ has a repeated entry and every pushforward
//! vanishes, or there is a unique permutation σ with γ = σ(v+ρ) − ρ weakly
//! decreasing, in which case R^j π_*(S_α(Q) ⊗ S_β(R)) = S_γ(C^d)
//! concentrated in j = ℓ(σ). The swap count ℓ(σ) equals the number of
//! inversions of v + ρ.
//!
//! [`bott_infinite`] runs the same procedure on an eventually-zero infinite
//! weight (head_1, …, head_n, μ_1, μ_2, …, 0, 0, …) with ρ = (0, −1, −2, …),
//! the form needed on Gr_n(C^∞). Beyond a finite window the shifted entries
//! are strictly decreasing integers smaller than everything in the window,
//! so no swap or collision can cross it; the window bound is validated by
//! the window-stability tests rather than assumed.

use crate::partitions::{concat_weight, Partition, Weight};
use crate::{Error, Result};

/// Outcome of Bott's algorithm: vanishing, or the sorted dominant weight
/// together with the number of bubble-sort swaps performed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BottOutcome<S> {
    Vanishes,
    Nonzero { sorted: S, steps: usize },
}

impl<S> BottOutcome<S> {
    pub fn is_vanishing(&self) -> bool {
        matches!(self, BottOutcome::Vanishes)
    }

    pub fn nonzero(&self) -> Option<(&S, usize)> {
        match self {
            BottOutcome::Vanishes => None,
            BottOutcome::Nonzero { sorted, steps } => Some((sorted, *steps)),
        }
    }
}

/// Result of the finite algorithm; the sorted weight may have negative
/// entries.
pub type BottResult = BottOutcome<Weight>;

/// Result of the infinite algorithm; the sorted weight is eventually zero
/// and weakly decreasing, hence a partition.
pub type BottShape = BottOutcome<Partition>;

/// Shared core: given the ρ-shifted sequence, either detect a repeat or
/// return (descending sort, inversion count).
fn sort_shifted(shifted: &[i64]) -> Option<(Vec<i64>, usize)> {
    let n = shifted.len();
    let mut steps = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if shifted[i] == shifted[j] {
                return None;
            }
            if shifted[i] < shifted[j] {
                steps += 1;
            }
        }
    }
    let mut sorted = shifted.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Some((sorted, steps))
}

/// Bott's algorithm on a finite weight with ρ = (d−1, …, 1, 0).
///
/// Returns `Vanishes` iff v + ρ has a repeated entry; otherwise the unique
/// dominant γ = σ•v and steps = ℓ(σ).
pub fn bott_sort(v: &Weight) -> BottResult {
    let d = v.len();
    let shifted: Vec<i64> = v
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &e)| e + (d - 1 - i) as i64)
        .collect();
    match sort_shifted(&shifted) {
        None => BottOutcome::Vanishes,
        Some((sorted, steps)) => {
            let gamma: Vec<i64> = sorted
                .iter()
                .enumerate()
                .map(|(i, &w)| w - (d - 1 - i) as i64)
                .collect();
            BottOutcome::Nonzero {
                sorted: Weight::new(gamma),
                steps,
            }
        }
    }
}

/// The Borel–Weil–Bott pushforward R^• π_*(S_α(Q) ⊗ S_β(R)) from Gr_r(C^d)
/// with r = `alpha.len()`.
///
/// `alpha` and `beta` must be weakly decreasing (entries may be negative;
/// S_λ(Q*) inputs should be normalized via [`Weight::dual`] first). On a
/// nonzero outcome, the single surviving pushforward is R^j = S_γ(C^d) with
/// j = steps.
pub fn bwb_pushforward(alpha: &Weight, beta: &Weight, d: usize) -> Result<BottResult> {
    if alpha.len() + beta.len() != d {
        return Err(Error::InvalidArgument(format!(
            "weight lengths {} + {} do not add up to d = {}",
            alpha.len(),
            beta.len(),
            d
        )));
    }
    if !alpha.is_weakly_decreasing() || !beta.is_weakly_decreasing() {
        return Err(Error::InvalidArgument(
            "bwb_pushforward requires weakly decreasing alpha and beta".into(),
        ));
    }
    let mut entries = alpha.entries().to_vec();
    entries.extend_from_slice(beta.entries());
    Ok(bott_sort(&Weight::new(entries)))
}

/// Default finite window for the infinite algorithm.
///
/// Covers the nonzero prefix n + ℓ(μ), plus slack of max(0, max head) and a
/// further n entries so every swap and collision the infinite sequence can
/// perform stays inside; heads with negative entries get an extra
/// max(0, −min head) so the matching tail positions are present.
pub fn infinite_window(head: &Weight, mu: &Partition) -> usize {
    let n = head.len();
    let max_head = head.entries().iter().copied().max().unwrap_or(0).max(0) as usize;
    let min_head = head.entries().iter().copied().min().unwrap_or(0).min(0);
    n + mu.len() + max_head + (-min_head) as usize + n
}

/// Bott's algorithm on the infinite weight (head, μ, 0, 0, …) with
/// ρ = (0, −1, −2, …), truncated at the default window.
pub fn bott_infinite(head: &Weight, mu: &Partition) -> BottShape {
    bott_infinite_with_window(head, mu, infinite_window(head, mu))
        .expect("default window is large enough")
}

/// Same as [`bott_infinite`] with an explicit window, for window-stability
/// checks. Fails with an internal error if the window is too small to
/// contain the sorted result.
pub fn bott_infinite_with_window(
    head: &Weight,
    mu: &Partition,
    window: usize,
) -> Result<BottShape> {
    let prefix = head.len() + mu.len();
    if window < prefix {
        return Err(Error::InvalidArgument(format!(
            "window {} shorter than the nonzero prefix {}",
            window, prefix
        )));
    }
    let mut v = concat_weight(head, mu).entries().to_vec();
    v.resize(window, 0);
    let shifted: Vec<i64> = v
        .iter()
        .enumerate()
        .map(|(i, &e)| e - i as i64)
        .collect();
    match sort_shifted(&shifted) {
        None => Ok(BottOutcome::Vanishes),
        Some((sorted, steps)) => {
            let gamma: Vec<i64> = sorted
                .iter()
                .enumerate()
                .map(|(i, &w)| w + i as i64)
                .collect();
            if gamma.iter().any(|&g| g < 0) {
                return Err(Error::Internal(format!(
                    "window {} too small: sorted weight {:?} is not a partition",
                    window, gamma
                )));
            }
            let shape = Weight::new(gamma).to_partition()?;
            Ok(BottOutcome::Nonzero {
                sorted: shape,
                steps,
            })
        }
    }
}
