use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A word in the free monoid on `x1, ..., xm`, stored as 0-based generator
/// indices. The empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        Word(alloc::vec![i as u32])
    }

    pub fn from_letters(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used plus one (0 for the unit).
    pub fn width(&self) -> usize {
        self.0.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left * self * right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Word {
        let mut v = Vec::with_capacity(left.len() + self.len() + right.len());
        v.extend_from_slice(&left.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&right.0);
        Word(v)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn suffix_from(&self, n: usize) -> Word {
        Word(self.0[n..].to_vec())
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Positions `p` with `self[p..p + f.len()] == f`, in increasing order.
    pub fn occurrences<'a>(&'a self, f: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = self.len();
        let k = f.len();
        let last = if k <= n { n - k + 1 } else { 0 };
        (0..last).filter(move |&p| self.0[p..p + k] == f.0[..])
    }

    /// True if `f` occurs as a factor (`self = a * f * b`).
    pub fn contains_factor(&self, f: &Word) -> bool {
        self.occurrences(f).next().is_some()
    }

    /// Lengths `l` with `0 < l < min(|self|, |other|) + ...` such that the last
    /// `l` letters of `self` equal the first `l` letters of `other`; proper
    /// overlaps only (neither word is swallowed).
    pub fn overlaps_with(&self, other: &Word) -> Vec<usize> {
        let max = self.len().min(other.len());
        (1..max)
            .filter(|&l| self.0[self.len() - l..] == other.0[..l])
            .collect()
    }

    /// All words of length `n` over `m` generators, in descending deglex order.
    pub fn all_of_length(m: usize, n: usize) -> Vec<Word> {
        let mut out = Vec::new();
        if m == 0 {
            if n == 0 {
                out.push(Word::one());
            }
            return out;
        }
        let total = m.checked_pow(n as u32).expect("word count overflow");
        out.reserve(total);
        let mut cur = alloc::vec![0u32; n];
        for _ in 0..total {
            out.push(Word(cur.clone()));
            for pos in (0..n).rev() {
                cur[pos] += 1;
                if (cur[pos] as usize) < m {
                    break;
                }
                cur[pos] = 0;
            }
        }
        out
    }

    /// All words of length at most `n`, shortest first.
    pub fn all_up_to(m: usize, n: usize) -> Vec<Word> {
        (0..=n).flat_map(|d| Word::all_of_length(m, d)).collect()
    }

    /// Writes the word with the given generator names, `1` for the unit.
    pub fn write_with<N: AsRef<str>>(&self, f: &mut dyn fmt::Write, names: &[N]) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(names[*l as usize].as_ref())?;
        }
        Ok(())
    }
}

impl Ord for Word {
    /// Deglex: longer words are greater; equal lengths compare
    /// lexicographically with `x1 > x2 > ... > xm`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| {
            for (a, b) in self.0.iter().zip(other.0.iter()) {
                match b.cmp(a) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{}", l + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(v: &[u32]) -> Word {
        Word::from_letters(v.to_vec())
    }

    #[test]
    fn deglex_examples() {
        assert!(w(&[0, 0]) > w(&[0, 1]));
        assert!(w(&[1, 1, 1]) > w(&[0, 0]));
        assert_eq!(w(&[0, 1]).cmp(&w(&[0, 1])), Ordering::Equal);
        assert!(w(&[0]) > Word::one());
    }

    #[test]
    fn enumeration_is_descending() {
        let words = Word::all_of_length(3, 3);
        assert_eq!(words.len(), 27);
        assert!(words.windows(2).all(|p| p[0] > p[1]));
        assert_eq!(Word::all_up_to(2, 2).len(), 7);
        assert_eq!(Word::all_of_length(0, 0), vec![Word::one()]);
    }

    #[test]
    fn factors_and_overlaps() {
        let big = w(&[0, 1, 0, 1]);
        assert_eq!(big.occurrences(&w(&[0, 1])).collect::<Vec<_>>(), vec![0, 2]);
        assert!(!big.contains_factor(&w(&[1, 1])));
        assert_eq!(w(&[0, 0]).overlaps_with(&w(&[0, 0])), vec![1]);
        assert_eq!(w(&[0, 1, 0]).overlaps_with(&w(&[1, 0, 1])), vec![2]);
        assert!(w(&[0]).overlaps_with(&w(&[0])).is_empty());
    }
}
