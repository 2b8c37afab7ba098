use std::collections::BTreeMap;
use std::fmt;

/// A finite multiset stored as a sorted element → count map.
///
/// Counts are always positive; equality is structural and independent of
/// insertion order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset<T: Ord> {
    counts: BTreeMap<T, usize>,
}

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset {
            counts: BTreeMap::new(),
        }
    }
}

impl<T: Ord> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, item: T) {
        self.insert_n(item, 1);
    }

    pub fn insert_n(&mut self, item: T, n: usize) {
        if n > 0 {
            *self.counts.entry(item).or_insert(0) += n;
        }
    }

    /// Removes one copy; returns false if the item was absent.
    pub fn remove(&mut self, item: &T) -> bool {
        match self.counts.get_mut(item) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(item);
                true
            }
            None => false,
        }
    }

    pub fn count(&self, item: &T) -> usize {
        self.counts.get(item).copied().unwrap_or(0)
    }

    /// Total number of elements, with multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn distinct_len(&self) -> usize {
        self.counts.len()
    }

    /// Distinct elements with their counts, in ascending order.
    pub fn iter_counts(&self) -> impl Iterator<Item = (&T, usize)> + '_ {
        self.counts.iter().map(|(k, v)| (k, *v))
    }

    /// All elements with repetition, in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = &T> + '_ {
        self.counts
            .iter()
            .flat_map(|(k, v)| std::iter::repeat_n(k, *v))
    }

    pub fn extend_from(&mut self, other: &Multiset<T>)
    where
        T: Clone,
    {
        for (k, v) in other.iter_counts() {
            self.insert_n(k.clone(), v);
        }
    }

    pub fn map<U: Ord>(&self, mut f: impl FnMut(&T) -> U) -> Multiset<U> {
        let mut out = Multiset::new();
        for (k, v) in self.iter_counts() {
            out.insert_n(f(k), v);
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&T) -> bool) -> Multiset<T>
    where
        T: Clone,
    {
        let mut out = Multiset::new();
        for (k, v) in self.iter_counts() {
            if keep(k) {
                out.insert_n(k.clone(), v);
            }
        }
        out
    }

    pub fn max_element(&self) -> Option<&T> {
        self.counts.keys().next_back()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.counts.values().all(|&c| c == 1)
    }
}

impl<T: Ord> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for item in iter {
            m.insert(item);
        }
        m
    }
}

impl<T: Ord> Extend<T> for Multiset<T> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for item in iter {
            self.insert(item);
        }
    }
}

impl<T: Ord + fmt::Debug> fmt::Debug for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

impl<T: Ord + fmt::Display> fmt::Display for Multiset<T> {
    /// `{a, b, b, c}` in ascending order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, item) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{item}")?;
        }
        write!(f, "}}")
    }
}
