use std::fmt;

/// A subset of the simple reflections, as a bitmask of generator indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(s: usize) -> Self {
        Subset(1 << s)
    }

    pub fn from_indices(it: impl IntoIterator<Item = usize>) -> Self {
        Subset(it.into_iter().fold(0, |acc, s| acc | (1 << s)))
    }

    /// All generators `0..rank`.
    pub fn full(rank: usize) -> Self {
        Subset(if rank == 64 { u64::MAX } else { (1u64 << rank) - 1 })
    }

    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(self, s: usize) -> Self {
        Subset(self.0 | 1 << s)
    }

    pub fn remove(self, s: usize) -> Self {
        Subset(self.0 & !(1 << s))
    }

    pub fn union(self, o: Subset) -> Self {
        Subset(self.0 | o.0)
    }

    pub fn intersect(self, o: Subset) -> Self {
        Subset(self.0 & o.0)
    }

    pub fn minus(self, o: Subset) -> Self {
        Subset(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&s| self.contains(s))
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some((c.wrapping_sub(full)) & full) };
            Some(Subset(c))
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = Subset::from_indices([0, 2]);
        let b = Subset::from_indices([2, 3]);
        assert_eq!(a.union(b), Subset::from_indices([0, 2, 3]));
        assert_eq!(a.intersect(b), Subset::singleton(2));
        assert_eq!(a.minus(b), Subset::singleton(0));
        assert!(Subset::singleton(2).is_subset_of(a));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(Subset::full(3).len(), 3);
    }

    #[test]
    fn subset_enumeration() {
        let a = Subset::from_indices([1, 3, 4]);
        let subs: Vec<_> = a.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset_of(a)));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }
}
