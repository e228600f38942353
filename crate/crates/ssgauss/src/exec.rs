//! Execution-mode plumbing: data-parallel loops with a sequential fallback.
//!
//! Every per-path loop in the crate goes through [`map_indexed`]. Outputs are
//! a pure function of the index, and results are collected in index order, so
//! the numbers coming out are identical whatever the thread count. The
//! `parallel` feature (on by default) routes the loop through rayon; without
//! it the same closure runs in a plain sequential loop.

/// How a data-parallel loop should run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Execution {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Execution::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Execution::Sequential
    }
}

/// Maps `f` over `0..n` with per-item scratch state, preserving index order.
///
/// `init` builds the scratch once per worker; `f` must depend only on the
/// index and its scratch contents it wrote itself, never on sharing between
/// indices.
pub fn map_indexed_with<S, T, I, F>(mode: Execution, n: usize, init: I, f: F) -> Vec<T>
where
    T: Send,
    S: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, usize) -> T + Sync + Send,
{
    match mode {
        Execution::Sequential => {
            let mut scratch = init();
            (0..n).map(|i| f(&mut scratch, i)).collect()
        }
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n)
                .into_par_iter()
                .map_init(&init, |scratch, i| f(scratch, i))
                .collect()
        }
    }
}

/// Maps `f` over `0..n`, preserving index order.
pub fn map_indexed<T, F>(mode: Execution, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_indexed_with(mode, n, || (), |_, i| f(i))
}

/// Runs `f` inside a thread pool capped at `threads` workers.
///
/// With the `parallel` feature off, or `threads == None`, runs `f` directly.
/// The cap changes scheduling only, never results.
pub fn with_thread_cap<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    if let Some(n) = threads {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool");
        return pool.install(f);
    }
    let _ = threads;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let out = map_indexed(Execution::default(), 1000, |i| i * i);
        assert!(out.iter().enumerate().all(|(i, &v)| v == i * i));
    }

    #[test]
    fn sequential_and_default_agree() {
        let a = map_indexed(Execution::Sequential, 257, |i| (i as f64).sqrt().sin());
        let b = map_indexed(Execution::default(), 257, |i| (i as f64).sqrt().sin());
        assert_eq!(a, b);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn thread_cap_does_not_change_values() {
        let run = || map_indexed(Execution::Parallel, 4096, |i| (i as f64 * 0.37).cos());
        let one = with_thread_cap(Some(1), run);
        let four = with_thread_cap(Some(4), run);
        assert_eq!(one, four);
    }
}
