//! Execution strategy for the data-parallel loops (per-subgroup Brauer
//! checks, catalog sweeps, element filters).
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the
//! rayon global pool; without it every strategy runs sequentially. Results
//! are always returned in input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this build can actually run in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Order-preserving filter.
    pub fn filter<T, F>(self, items: &[T], pred: F) -> Vec<T>
    where
        T: Sync + Send + Clone,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().filter(|x| pred(x)).cloned().collect()
            }
            _ => items.iter().filter(|x| pred(x)).cloned().collect(),
        }
    }

    /// Map that stops at the first error, reporting the error of the
    /// lowest-index failing item.
    pub fn try_map<T, R, E, F>(self, items: &[T], f: F) -> Result<Vec<R>, E>
    where
        T: Sync,
        R: Send,
        E: Send,
        F: Fn(&T) -> Result<R, E> + Sync + Send,
    {
        self.map(items, f).into_iter().collect()
    }
}
