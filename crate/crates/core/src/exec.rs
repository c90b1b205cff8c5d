//! Sequential or data-parallel evaluation of independent work items.
//!
//! Without the `parallel` feature both modes run sequentially. Results are
//! always returned in item order, so output never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub(crate) fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Result for the first item (in item order) where `f` yields `Some`.
    pub(crate) fn find_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().find_map_first(f),
            _ => items.iter().find_map(f),
        }
    }

    pub(crate) fn filter<T, F>(self, items: Vec<T>, keep: F) -> Vec<T>
    where
        T: Send + Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.into_par_iter().filter(|t| keep(t)).collect(),
            _ => items.into_iter().filter(|t| keep(t)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u32> = (0..1000).collect();
        for mode in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(mode.map(&items, |x| x * 2)[999], 1998);
            assert_eq!(mode.find_first(&items, |&x| (x % 97 == 96).then_some(x)), Some(96));
            assert_eq!(mode.filter(items.clone(), |x| x % 10 == 0).len(), 100);
        }
    }
}
