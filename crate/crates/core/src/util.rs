use itertools::Itertools;

/// Subsets of `items` with at most `max` members, ordered by size and then
/// lexicographically by position in `items`.
pub fn subsets_up_to(items: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 0..=max.min(items.len()) {
        out.extend(items.iter().copied().combinations(size));
    }
    out
}

/// Like [`subsets_up_to`], but with sizes in descending order.
pub fn subsets_descending(items: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in (0..=max.min(items.len())).rev() {
        out.extend(items.iter().copied().combinations(size));
    }
    out
}

/// Sorted-set difference `a \ b`.
pub fn minus(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter()
        .copied()
        .filter(|v| b.binary_search(v).is_err())
        .collect()
}

/// Sorted-set union.
pub fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().merge(b.iter()).copied().dedup().collect()
}

pub fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter()
        .copied()
        .filter(|v| b.binary_search(v).is_ok())
        .collect()
}

pub fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

pub fn mask(n: usize, members: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in members {
        m[v] = true;
    }
    m
}

/// Caps the worker pool at `n` threads. Only the first call has an
/// effect; without the `parallel` feature this does nothing.
pub fn set_threads(n: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = n;
}

/// First `Some` in item order; items are evaluated in parallel when the
/// `parallel` feature is on.
pub(crate) fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().find_map(f)
    }
}

/// Order-preserving map, parallel when the `parallel` feature is on.
pub(crate) fn map_all<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_ordered_by_size_then_lex() {
        let s = subsets_up_to(&[3, 5, 7], 2);
        assert_eq!(
            s,
            vec![
                vec![],
                vec![3],
                vec![5],
                vec![7],
                vec![3, 5],
                vec![3, 7],
                vec![5, 7]
            ]
        );
        assert_eq!(subsets_descending(&[1, 2], 2)[0], vec![1, 2]);
    }

    #[test]
    fn set_ops() {
        assert_eq!(minus(&[1, 2, 3], &[2]), vec![1, 3]);
        assert_eq!(union(&[1, 3], &[2, 3]), vec![1, 2, 3]);
        assert_eq!(intersect(&[1, 2, 3], &[0, 3]), vec![3]);
    }
}
