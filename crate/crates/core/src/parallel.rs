//! Execution helpers: data-parallel map with a sequential fallback.
//!
//! The `parallel` feature compiles the rayon path in; the per-call `parallel`
//! flag in the analysis options decides at runtime whether to use it. The
//! sequential implementation is always available so the two can be compared
//! directly in benchmarks.

/// Sequential map, always compiled.
pub(crate) fn map_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_maybe_par<T, U, F>(items: &[T], parallel: bool, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        map_seq(items, f)
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_maybe_par<T, U, F>(items: &[T], _parallel: bool, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    map_seq(items, f)
}

/// Fallible map; short-circuits on the first error in the sequential case,
/// collects the first error in the parallel case.
#[cfg(feature = "parallel")]
pub(crate) fn try_map_maybe_par<T, U, E, F>(
    items: &[T],
    parallel: bool,
    f: F,
) -> Result<Vec<U>, E>
where
    T: Sync,
    U: Send,
    E: Send,
    F: Fn(&T) -> Result<U, E> + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_map_maybe_par<T, U, E, F>(
    items: &[T],
    _parallel: bool,
    f: F,
) -> Result<Vec<U>, E>
where
    F: Fn(&T) -> Result<U, E>,
{
    items.iter().map(f).collect()
}
