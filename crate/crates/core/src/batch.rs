//! Batched evaluation of independent cases.
//!
//! Verification sweeps evaluate thousands of independent weights; with the
//! `parallel` feature (on by default) they shard across a rayon pool,
//! otherwise they run sequentially. Results always come back in input
//! order, so callers see identical output either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over items honoring the `parallel` feature.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    map_with(true, items, f)
}

/// Map over items sequentially regardless of features.
pub fn map_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Map over items, in parallel when requested and compiled in.
pub fn map_with<T, U, F>(parallel: bool, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(&f).collect();
    }
    let _ = parallel;
    items.iter().map(&f).collect()
}
