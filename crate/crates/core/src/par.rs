//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the top-level functions run on the
//! rayon pool; without it they run on the calling thread. Both variants stay
//! reachable as [`sequential`] and `parallel` so they can be benchmarked
//! against each other. Results never depend on the schedule: outputs keep
//! input order, and reductions are over totally ordered values.

pub mod sequential {
    pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
    where
        F: Fn(&T) -> R,
    {
        items.iter().map(f).collect()
    }

    /// Indices of the items failing `pred`, ascending.
    pub fn failures<T, F>(items: &[T], pred: F) -> Vec<usize>
    where
        F: Fn(&T) -> bool,
    {
        items
            .iter()
            .enumerate()
            .filter(|(_, x)| !pred(x))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn min_by_key<T, K, F>(items: &[T], key: F) -> Option<K>
    where
        K: Ord,
        F: Fn(&T) -> K,
    {
        items.iter().map(key).min()
    }
}

#[cfg(feature = "parallel")]
pub mod parallel {
    use rayon::prelude::*;

    pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        items.par_iter().map(f).collect()
    }

    pub fn failures<T, F>(items: &[T], pred: F) -> Vec<usize>
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        items
            .par_iter()
            .enumerate()
            .filter(|(_, x)| !pred(x))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn min_by_key<T, K, F>(items: &[T], key: F) -> Option<K>
    where
        T: Sync,
        K: Ord + Send,
        F: Fn(&T) -> K + Sync + Send,
    {
        items.par_iter().map(key).min()
    }
}

#[cfg(feature = "parallel")]
pub use parallel::{failures, map, min_by_key};
#[cfg(not(feature = "parallel"))]
pub use sequential::{failures, map, min_by_key};
