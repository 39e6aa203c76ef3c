//! Bit-packed relations over a finite universe.

/// A set of triples over `{0..n-1}`, packed at bit index `(a*n + b)*n + c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleSet {
    n: usize,
    words: Box<[u64]>,
}

impl TripleSet {
    pub fn empty(n: usize) -> TripleSet {
        let bits = n * n * n;
        TripleSet {
            n,
            words: vec![0u64; bits.div_ceil(64)].into_boxed_slice(),
        }
    }

    pub fn full(n: usize) -> TripleSet {
        let mut s = TripleSet::empty(n);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.clear_tail();
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> usize {
        self.n * self.n * self.n
    }

    fn clear_tail(&mut self) {
        let bits = self.bits();
        let tail = bits % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    fn index(&self, a: usize, b: usize, c: usize) -> usize {
        debug_assert!(a < self.n && b < self.n && c < self.n);
        (a * self.n + b) * self.n + c
    }

    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        let i = self.index(a, b, c);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn insert(&mut self, a: usize, b: usize, c: usize) {
        let i = self.index(a, b, c);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn union(&self, other: &TripleSet) -> TripleSet {
        assert_eq!(self.n, other.n);
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a | b)
            .collect::<Vec<_>>()
            .into_boxed_slice();
        TripleSet { n: self.n, words }
    }

    /// Complement with respect to the full cube.
    pub fn complement(&self) -> TripleSet {
        let words = self.words.iter().map(|w| !w).collect::<Vec<_>>().into_boxed_slice();
        let mut s = TripleSet { n: self.n, words };
        s.clear_tail();
        s
    }

    /// Cylindrification along a coordinate: close the set under changing that
    /// coordinate arbitrarily.
    pub fn cylindrify(&self, coord: usize) -> TripleSet {
        assert!(coord < 3);
        let mut out = TripleSet::empty(self.n);
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !self.contains(a, b, c) {
                        continue;
                    }
                    for u in 0..n {
                        match coord {
                            0 => out.insert(u, b, c),
                            1 => out.insert(a, u, c),
                            _ => out.insert(a, b, u),
                        }
                    }
                }
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |a| {
            (0..n).flat_map(move |b| {
                (0..n).filter_map(move |c| self.contains(a, b, c).then_some((a, b, c)))
            })
        })
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Build from a bit mask, bit `i` set meaning the `i`-th triple in
    /// lexicographic order is present. Only usable for `n**3 <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> TripleSet {
        assert!(n * n * n <= 64);
        let mut s = TripleSet::empty(n);
        if !s.words.is_empty() {
            s.words[0] = mask;
        }
        s.clear_tail();
        s
    }
}

/// A set of pairs over `{0..n-1}`, packed at bit index `a*n + b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairSet {
    n: usize,
    words: Box<[u64]>,
}

impl PairSet {
    pub fn empty(n: usize) -> PairSet {
        let bits = n * n;
        PairSet {
            n,
            words: vec![0u64; bits.div_ceil(64)].into_boxed_slice(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let i = a * self.n + b;
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        let i = a * self.n + b;
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |a| (0..n).filter_map(move |b| self.contains(a, b).then_some((a, b))))
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn from_mask(n: usize, mask: u64) -> PairSet {
        assert!(n * n <= 64);
        let mut s = PairSet::empty(n);
        if !s.words.is_empty() {
            s.words[0] = mask & ((1u128 << (n * n)) as u64).wrapping_sub(1);
        }
        s
    }
}
