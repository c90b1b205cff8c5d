//! Bitmask sets over small index ranges.
//!
//! [`Subset`] holds element positions `0..n` of a ground set and
//! [`IndexSet`] holds universe indices `1..=k` of a support family (index
//! `i` lives in bit `i - 1`). Both order the same way as their masks, which
//! is the canonical subset order used throughout the crate.

use std::fmt;

macro_rules! bitset {
    ($name:ident) => {
        #[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub u32);

        impl $name {
            pub const EMPTY: $name = $name(0);

            #[inline]
            pub fn bits(self) -> u32 {
                self.0
            }

            #[inline]
            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            #[inline]
            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            #[inline]
            pub fn union(self, other: $name) -> $name {
                $name(self.0 | other.0)
            }

            #[inline]
            pub fn intersection(self, other: $name) -> $name {
                $name(self.0 & other.0)
            }

            #[inline]
            pub fn difference(self, other: $name) -> $name {
                $name(self.0 & !other.0)
            }

            #[inline]
            pub fn is_subset(self, other: $name) -> bool {
                self.0 & !other.0 == 0
            }

            #[inline]
            pub fn is_disjoint(self, other: $name) -> bool {
                self.0 & other.0 == 0
            }
        }

        impl std::ops::BitOr for $name {
            type Output = $name;
            fn bitor(self, rhs: $name) -> $name {
                self.union(rhs)
            }
        }

        impl std::ops::BitAnd for $name {
            type Output = $name;
            fn bitand(self, rhs: $name) -> $name {
                self.intersection(rhs)
            }
        }

        impl std::ops::Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                self.difference(rhs)
            }
        }
    };
}

bitset!(Subset);
bitset!(IndexSet);

impl Subset {
    /// All of `0..n`.
    #[inline]
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= 32);
        if n == 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(pos: usize) -> Subset {
        Subset(1 << pos)
    }

    #[inline]
    pub fn contains(self, pos: usize) -> bool {
        self.0 >> pos & 1 == 1
    }

    #[inline]
    pub fn with(self, pos: usize) -> Subset {
        Subset(self.0 | 1 << pos)
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Subset {
        positions.into_iter().fold(Subset::EMPTY, Subset::with)
    }

    /// Member positions in ascending order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        Ones(self.0).map(|b| b as usize)
    }
}

impl IndexSet {
    /// The indices `1..=k`.
    #[inline]
    pub fn range(k: u32) -> IndexSet {
        debug_assert!(k <= 32);
        if k == 32 {
            IndexSet(u32::MAX)
        } else {
            IndexSet((1u32 << k) - 1)
        }
    }

    #[inline]
    pub fn singleton(index: u32) -> IndexSet {
        debug_assert!((1..=32).contains(&index));
        IndexSet(1 << (index - 1))
    }

    #[inline]
    pub fn contains(self, index: u32) -> bool {
        (1..=32).contains(&index) && self.0 >> (index - 1) & 1 == 1
    }

    #[inline]
    pub fn with(self, index: u32) -> IndexSet {
        self.union(IndexSet::singleton(index))
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(indices: I) -> IndexSet {
        indices.into_iter().fold(IndexSet::EMPTY, IndexSet::with)
    }

    /// Largest member, or 0 when empty.
    pub fn max_index(self) -> u32 {
        32 - self.0.leading_zeros()
    }

    /// Member indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = u32> {
        Ones(self.0).map(|b| b + 1)
    }
}

struct Ones(u32);

impl Iterator for Ones {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.positions()).finish()
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, idx) in self.indices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{idx}")?;
        }
        f.write_str("}")
    }
}
