//! Data-parallel helpers. With the `parallel` feature these fan out over
//! rayon's pool; without it they run as plain iterators with identical
//! results (output order is always index order).

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_indices<R, F>(range: Range<usize>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    range.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<R, F>(range: Range<usize>, f: F) -> Vec<R>
where
    F: Fn(usize) -> R,
{
    range.map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn filter_map_masks<R, F>(range: Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    range.into_par_iter().filter_map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn filter_map_masks<R, F>(range: Range<u64>, f: F) -> Vec<R>
where
    F: Fn(u64) -> Option<R>,
{
    range.filter_map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_vec<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}
