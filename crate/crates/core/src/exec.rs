//! Data-parallel helpers over index ranges.
//!
//! With the `parallel` feature these run on the rayon pool; without it, or
//! with [`Exec::Sequential`], they are plain iterator loops. Results never
//! depend on the execution mode: searches return the lowest matching index
//! and collections keep index order.

/// Execution strategy for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    /// Use the rayon pool when the crate is built with `parallel`.
    #[default]
    Parallel,
    Sequential,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// First (lowest-index) `i < len` for which `f` returns `Some`.
pub fn find_first<T, F>(exec: Exec, len: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().find_map_first(f);
    }
    let _ = exec;
    (0..len).find_map(f)
}

/// `f` mapped over `0..len`, keeping the `Some` results in index order.
pub fn filter_map<T, F>(exec: Exec, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..len).into_par_iter().filter_map(f).collect();
    }
    let _ = exec;
    (0..len).filter_map(f).collect()
}
