/// Execution strategy for dense vertex sweeps.
///
/// `Parallel` uses rayon when the `parallel` feature is enabled and falls
/// back to the sequential code path when it is not, so the variant is
/// always available to callers. Every sweep writes results by index, so
/// both modes produce identical output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Applies `f` to every index in `0..count`, collecting results in index order.
pub(crate) fn map_indices<T, F>(count: usize, mode: ExecMode, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..count).map(f).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        ExecMode::Parallel => (0..count).map(f).collect(),
    }
}

/// Tests whether `pred` holds for every index in `0..count`.
///
/// The parallel path may evaluate indices in any order; callers needing a
/// deterministic witness re-scan sequentially after a failure.
pub(crate) fn all_indices<F>(count: usize, mode: ExecMode, pred: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..count).all(pred),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().all(pred)
        }
        #[cfg(not(feature = "parallel"))]
        ExecMode::Parallel => (0..count).all(pred),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_indices_matches_sequential() {
        let seq = map_indices(1000, ExecMode::Sequential, |i| i * i);
        let par = map_indices(1000, ExecMode::Parallel, |i| i * i);
        assert_eq!(seq, par);
    }

    #[test]
    fn all_indices_agrees() {
        assert!(all_indices(100, ExecMode::Parallel, |i| i < 100));
        assert!(!all_indices(100, ExecMode::Parallel, |i| i != 57));
        assert!(!all_indices(100, ExecMode::Sequential, |i| i != 57));
    }
}
