//! Exhaustive subset scans in (size, lexicographic) order.
//!
//! Within one size the candidate space is split by first element and the
//! chunks run on the rayon pool; the lowest-ranked hit wins, so results and
//! the reported work count do not depend on scheduling.

use std::ops::{ControlFlow, RangeInclusive};

use rayon::prelude::*;

use crate::error::{Error, Result};

pub const DEFAULT_SUBSET_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetScan {
    /// First subset (as elements of the candidate list) accepted by the predicate.
    pub found: Option<Vec<usize>>,
    /// Subsets examined in sequential order up to and including the hit.
    pub examined: u64,
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Scans subsets of `candidates` with sizes in `sizes`, smallest size first and
/// lexicographically (by candidate position) within a size, returning the
/// first one satisfying `accept`. Fails once more than `budget` subsets would
/// have to be examined.
pub fn first_subset<P>(
    candidates: &[usize],
    sizes: RangeInclusive<usize>,
    budget: u64,
    accept: P,
) -> Result<SubsetScan>
where
    P: Fn(&[usize]) -> bool + Sync,
{
    let m = candidates.len();
    let mut examined: u64 = 0;
    for k in sizes {
        if k > m {
            break;
        }
        let level = binomial(m, k);
        if k == 0 {
            examined += 1;
            if accept(&[]) {
                return Ok(SubsetScan {
                    found: Some(Vec::new()),
                    examined,
                });
            }
            continue;
        }

        // rank offset of the first subset whose first element is candidates[f]
        let mut offsets = Vec::with_capacity(m - k + 1);
        let mut acc = examined;
        for f in 0..=m - k {
            offsets.push(acc);
            acc = acc.saturating_add(binomial(m - f - 1, k - 1));
        }

        let hit = (0..=m - k).into_par_iter().find_map_first(|f| {
            let start = offsets[f];
            if start >= budget {
                return None;
            }
            scan_chunk(candidates, k, f, start, budget, &accept)
        });
        if let Some((set, rank)) = hit {
            return Ok(SubsetScan {
                found: Some(set),
                examined: rank,
            });
        }
        examined = examined.saturating_add(level);
        if examined > budget {
            return Err(Error::Resource {
                what: "subset scan",
                cap: budget,
                partial: budget,
            });
        }
    }
    Ok(SubsetScan {
        found: None,
        examined,
    })
}

/// Visits every `k`-subset of `candidates` in lexicographic order until
/// `visit` breaks.
pub fn for_each_subset<F>(candidates: &[usize], k: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let m = candidates.len();
    if k > m {
        return;
    }
    let mut pos: Vec<usize> = (0..k).collect();
    let mut set: Vec<usize> = pos.iter().map(|&p| candidates[p]).collect();
    loop {
        if visit(&set).is_break() {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| pos[i] < m - (k - i)) else {
            return;
        };
        pos[i] += 1;
        set[i] = candidates[pos[i]];
        for j in i + 1..k {
            pos[j] = pos[j - 1] + 1;
            set[j] = candidates[pos[j]];
        }
    }
}

fn scan_chunk<P>(
    candidates: &[usize],
    k: usize,
    first: usize,
    start: u64,
    budget: u64,
    accept: &P,
) -> Option<(Vec<usize>, u64)>
where
    P: Fn(&[usize]) -> bool,
{
    let m = candidates.len();
    let mut pos: Vec<usize> = std::iter::once(first).chain(first + 1..first + k).collect();
    let mut set: Vec<usize> = pos.iter().map(|&p| candidates[p]).collect();
    let mut rank = start;
    loop {
        rank += 1;
        if rank > budget {
            return None;
        }
        if accept(&set) {
            return Some((set, rank));
        }
        // advance positions 1..k, keeping pos[0] = first
        let mut i = k;
        loop {
            if i == 1 {
                return None;
            }
            i -= 1;
            if pos[i] < m - (k - i) {
                break;
            }
        }
        pos[i] += 1;
        set[i] = candidates[pos[i]];
        for j in i + 1..k {
            pos[j] = pos[j - 1] + 1;
            set[j] = candidates[pos[j]];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(11, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn finds_lexicographically_first_of_smallest_size() {
        let cands: Vec<usize> = (0..6).collect();
        let scan = first_subset(&cands, 0..=6, 1_000, |s| s.iter().sum::<usize>() == 7).unwrap();
        // size 2 in lex order: 01 02 03 04 05 12 13 14 15 23 24 25 34 ...
        assert_eq!(scan.found, Some(vec![2, 5]));
        assert_eq!(scan.examined, 1 + 6 + 12);
    }

    #[test]
    fn visits_every_subset_once() {
        use std::sync::atomic::{AtomicU64, Ordering};
        let seen = AtomicU64::new(0);
        let cands = [3, 5, 8, 13, 21, 34, 55];
        let scan = first_subset(&cands, 0..=7, u64::MAX, |_| {
            seen.fetch_add(1, Ordering::Relaxed);
            false
        })
        .unwrap();
        assert_eq!(scan.found, None);
        assert_eq!(scan.examined, 128);
        assert_eq!(seen.load(Ordering::Relaxed), 128);
    }

    #[test]
    fn budget_exhaustion() {
        let cands: Vec<usize> = (0..10).collect();
        let err = first_subset(&cands, 0..=10, 50, |_| false).unwrap_err();
        assert!(matches!(err, Error::Resource { .. }));
        // a hit inside the budget still succeeds
        let ok = first_subset(&cands, 0..=10, 50, |s| s == [1, 2]).unwrap();
        assert_eq!(ok.found, Some(vec![1, 2]));
    }

    #[test]
    fn sequential_enumeration() {
        let mut all = Vec::new();
        for_each_subset(&[1, 2, 3, 4], 2, |s| {
            all.push(s.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(
            all,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        let mut count = 0;
        for_each_subset(&[1, 2, 3], 0, |s| {
            assert!(s.is_empty());
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn maps_positions_to_candidates() {
        let scan = first_subset(&[10, 20, 30], 1..=3, 100, |s| s.contains(&30)).unwrap();
        assert_eq!(scan.found, Some(vec![30]));
        assert_eq!(scan.examined, 3);
    }
}
