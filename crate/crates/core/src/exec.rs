//! Execution seam for the data-parallel inner loops.
//!
//! Order of results always matches the input order, so callers see identical
//! output with or without the `parallel` feature.

#[cfg(feature = "parallel")]
pub(crate) fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Send + Sync,
{
    use rayon::prelude::*;
    // keep the fork-join tree shallow: splitting below a handful of items
    // costs more in dispatch than the items themselves
    let min_len = (items.len() / rayon::current_num_threads().max(1)).max(4);
    items.into_par_iter().with_min_len(min_len).map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
