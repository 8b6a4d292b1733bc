//! Execution strategy for the exhaustive checks.
//!
//! With the `parallel` feature the index ranges are split across the rayon
//! pool; without it every strategy runs sequentially. Results never depend
//! on the strategy: searches return the first hit in index order and maps
//! preserve order.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// First `Some` produced over `range`, in index order.
pub fn find_first<T, F>(exec: Exec, range: Range<usize>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => range.into_par_iter().find_map_first(f),
        _ => range.into_iter().find_map(f),
    }
}

/// `f` applied to every index, collected in order.
pub fn map<T, F>(exec: Exec, range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => range.into_par_iter().map(f).collect(),
        _ => range.into_iter().map(f).collect(),
    }
}

/// `f` applied to every item of a slice, collected in order.
pub fn map_slice<S, T, F>(exec: Exec, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}
