//! First-failure searches over basis index ranges.
//!
//! With the `parallel` feature (the default) sweeps run on rayon; without it
//! they run sequentially. Both paths return the match at the smallest index,
//! so a reported witness never depends on thread scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// The `Some` result of `probe` with the smallest index in `0..count`.
pub fn find_first<T, F>(count: usize, probe: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        find_first_par(count, probe)
    }
    #[cfg(not(feature = "parallel"))]
    {
        find_first_seq(count, probe)
    }
}

/// Sequential reference implementation, always available (benchmarks compare
/// against it).
pub fn find_first_seq<T, F>(count: usize, probe: F) -> Option<T>
where
    F: Fn(usize) -> Option<T>,
{
    (0..count).find_map(probe)
}

#[cfg(feature = "parallel")]
pub fn find_first_par<T, F>(count: usize, probe: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..count).into_par_iter().find_map_first(probe)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn returns_smallest_match() {
        let probe = |i: usize| (i % 7 == 3).then_some(i);
        assert_eq!(find_first(100, probe), Some(3));
        assert_eq!(find_first_seq(100, probe), Some(3));
        #[cfg(feature = "parallel")]
        assert_eq!(find_first_par(100, probe), Some(3));
    }

    #[test]
    fn none_when_nothing_matches() {
        assert_eq!(find_first(50, |_| None::<usize>), None);
        assert_eq!(find_first(0, |i| Some(i)), None);
    }
}
