//! Data-parallel dispatch for independent inner loops.
//!
//! Results are collected in index order, so parallel and sequential execution
//! produce identical output. With the `parallel` feature disabled everything
//! runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, in parallel when the `parallel` feature is enabled.
pub(crate) fn map_indexed<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential twin of [`map_indexed`], kept unconditionally for benchmarks
/// and as the fallback implementation.
pub(crate) fn map_indexed_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// Execution mode used by the few hot kernels that expose both code paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    /// Parallel when the `parallel` feature is enabled, sequential otherwise.
    #[default]
    Auto,
    /// Always sequential.
    Sequential,
}

pub(crate) fn map_exec<U, F>(exec: Exec, n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    match exec {
        Exec::Auto => map_indexed(n, f),
        Exec::Sequential => map_indexed_seq(n, f),
    }
}
