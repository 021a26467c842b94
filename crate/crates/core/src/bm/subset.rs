use std::fmt;

/// A set of generator indices of one ideal, as a bit-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenSubset(pub u32);

impl GenSubset {
    pub const EMPTY: GenSubset = GenSubset(0);

    pub fn full(g: usize) -> Self {
        GenSubset(if g >= 32 { u32::MAX } else { (1u32 << g) - 1 })
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        GenSubset(indices.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn singleton(i: usize) -> Self {
        GenSubset(1 << i)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        GenSubset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        GenSubset(self.0 & !(1 << i))
    }

    pub fn union(self, o: GenSubset) -> Self {
        GenSubset(self.0 | o.0)
    }

    pub fn intersection(self, o: GenSubset) -> Self {
        GenSubset(self.0 & o.0)
    }

    pub fn minus(self, o: GenSubset) -> Self {
        GenSubset(self.0 & !o.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for GenSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
