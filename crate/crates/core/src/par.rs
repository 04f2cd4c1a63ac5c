//! Order-preserving map over independent work items, run on the rayon pool
//! or sequentially.
//!
//! Results always come back in input order, so callers that reduce them
//! deterministically get bit-identical output in both modes. Without the
//! `parallel` feature every mode runs sequentially.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Parallel,
    Sequential,
}

impl Mode {
    /// Whether this mode actually uses more than one thread in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Mode::Parallel
    }
}

pub fn map<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == Mode::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map(Mode::Parallel, &xs, |x| x * x % 17);
        let b = map(Mode::Sequential, &xs, |x| x * x % 17);
        assert_eq!(a, b);
        assert_eq!(Mode::default(), Mode::Parallel);
    }
}
