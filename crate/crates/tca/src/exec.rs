//! Execution strategy for the data-parallel enumerations.
//!
//! The λ-enumeration in [`crate::localcoh`] and the (e, μ)-enumeration in
//! [`crate::resolutions`] are embarrassingly parallel with commutative
//! merges. With the `parallel` feature (default) they run on rayon; without
//! it only the sequential path is compiled. The benches compare both.

/// How an enumeration is driven.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

// not derivable: the default variant depends on the feature set
#[allow(clippy::derivable_impls)]
impl Default for Strategy {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Strategy::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Strategy::Sequential
        }
    }
}

pub(crate) fn map_collect<T, R, F>(strategy: Strategy, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match strategy {
        Strategy::Sequential => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items
                .into_par_iter()
                .with_min_len(16)
                .map(f)
                .collect()
        }
    }
}
