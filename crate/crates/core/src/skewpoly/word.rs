use std::cmp::Ordering;
use std::fmt;

/// A monomial of the free monoid on `x1, …, xn`, stored as 0-based letter
/// indices. The empty word is the unit `o`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i])
    }

    /// Builds a word from 1-based variable indices, as printed.
    pub fn from_one_based(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&l| l - 1).collect())
    }

    pub fn deg(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.deg() + other.deg());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepend(&self, i: usize) -> Word {
        let mut v = Vec::with_capacity(self.deg() + 1);
        v.push(i);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn append(&self, i: usize) -> Word {
        let mut v = self.0.clone();
        v.push(i);
        Word(v)
    }

    /// The first `k` letters.
    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    /// The last `k` letters.
    pub fn suffix(&self, k: usize) -> Word {
        Word(self.0[self.deg() - k..].to_vec())
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().copied().max()
    }

    /// All words of length exactly `d` over `n` letters, lexicographic in
    /// letter indices.
    pub fn all_of_degree(n: usize, d: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..d {
            out = out.iter().flat_map(|w| (0..n).map(move |i| w.append(i))).collect();
        }
        out
    }

    /// All words of length `< d`, ascending in `order`.
    pub fn all_below(n: usize, d: usize, order: MonomialOrder) -> Vec<Word> {
        let mut out: Vec<Word> = (0..d).flat_map(|k| Word::all_of_degree(n, k)).collect();
        out.sort_by(|a, b| order.cmp(a, b));
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("o");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l + 1)?;
        }
        Ok(())
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// Graded lexicographic orders with `1 ≺ x1 ≺ … ≺ xn`. Words of equal
/// degree are compared letter by letter starting from the right end
/// ([`RightToLeft`](Self::RightToLeft), written `≺`) or from the left end
/// ([`LeftToRight`](Self::LeftToRight), written `≺_L`); the larger index
/// at the first difference wins.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    RightToLeft,
    LeftToRight,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Word, b: &Word) -> Ordering {
        a.deg().cmp(&b.deg()).then_with(|| match self {
            MonomialOrder::RightToLeft => a.0.iter().rev().cmp(b.0.iter().rev()),
            MonomialOrder::LeftToRight => a.0.cmp(&b.0),
        })
    }

    /// The order under which right (resp. left) division is unique.
    pub fn for_side(side: crate::Side) -> Self {
        match side {
            crate::Side::Right => MonomialOrder::RightToLeft,
            crate::Side::Left => MonomialOrder::LeftToRight,
        }
    }
}
