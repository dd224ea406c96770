use std::cmp::Ordering;
use std::fmt;

/// A set of hyperplane indices, stored as a fixed-width bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Support {
    words: Vec<u64>,
}

impl Support {
    pub fn empty(universe: usize) -> Self {
        Support { words: vec![0; universe.div_ceil(64).max(1)] }
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Support) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Support) -> Support {
        Support { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn union_with(&mut self, other: &Support) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for Support {
    /// Lexicographic on the increasing index sequences.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Support {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_ops() {
        let a = Support::from_indices(70, [0, 3, 65]);
        let b = Support::from_indices(70, [0, 3, 65, 69]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.len(), 3);
        assert_eq!(b.to_vec(), vec![0, 3, 65, 69]);
        assert_eq!(a.intersection(&b), a);
        assert!(a.contains(65) && !a.contains(64) && !a.contains(500));
    }

    #[test]
    fn lexicographic_order() {
        let s = |v: &[usize]| Support::from_indices(8, v.iter().copied());
        let mut v = vec![s(&[1, 2]), s(&[0, 2]), s(&[0, 1]), s(&[0, 1, 5])];
        v.sort();
        assert_eq!(v, vec![s(&[0, 1]), s(&[0, 1, 5]), s(&[0, 2]), s(&[1, 2])]);
    }
}
