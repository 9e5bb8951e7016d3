use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::{accumulate, NCPoly, Word};
use crate::presentation::Presentation;
use crate::scalars::Scalar;

/// Which occurrence of a leading word gets rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A reduced, degree-truncated Groebner basis of a two-sided ideal.
///
/// Every element is monic; no leading word is a factor of another element's
/// leading word, and no other term of any element is reducible. All overlap
/// ambiguities whose overlap word has length at most `complete_to` have
/// been resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedGB {
    ngens: usize,
    basis: Vec<NCPoly>,
    maxdeg: usize,
    complete_to: usize,
    /// leading word -> index into `basis`
    index: BTreeMap<Word, usize>,
}

/// Normal form together with whether the truncation certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub poly: NCPoly,
    /// False when the input degree exceeds `complete_to`.
    pub verified: bool,
}

#[derive(Clone, Debug)]
struct Elem {
    id: usize,
    poly: NCPoly,
}

impl Elem {
    fn lw(&self) -> &Word {
        self.poly
            .leading_word()
            .expect("basis elements are nonzero")
    }
}

/// Pending overlap: (overlap word, left id, right id, overlap length).
/// The derived order processes overlaps by ascending deglex of the word.
type Overlap = (Word, usize, usize, usize);

struct Completion {
    ngens: usize,
    maxdeg: usize,
    active: Vec<Elem>,
    lw_index: BTreeMap<Word, usize>,
    next_id: usize,
    queue: BTreeSet<Overlap>,
}

impl Completion {
    fn new(ngens: usize, maxdeg: usize) -> Self {
        Completion {
            ngens,
            maxdeg,
            active: Vec::new(),
            lw_index: BTreeMap::new(),
            next_id: 0,
            queue: BTreeSet::new(),
        }
    }

    fn rebuild_index(&mut self) {
        self.lw_index = self
            .active
            .iter()
            .enumerate()
            .map(|(i, e)| (e.lw().clone(), i))
            .collect();
    }

    fn reduce(&self, f: &NCPoly) -> NCPoly {
        let polys: Vec<&NCPoly> = self.active.iter().map(|e| &e.poly).collect();
        reduce_by(f, &polys, &self.lw_index, Strategy::Leftmost)
    }

    fn find(&self, id: usize) -> Option<&Elem> {
        self.active.iter().find(|e| e.id == id)
    }

    /// Reduces `f` and, if nonzero, adds it; elements whose leading word
    /// becomes reducible are taken out and re-added.
    fn add(&mut self, f: NCPoly) {
        let mut pending = alloc::vec![f];
        while let Some(p) = pending.pop() {
            let r = self.reduce(&p);
            if r.is_zero() {
                continue;
            }
            let g = r.monic();
            let lw = g.leading_word().expect("nonzero").clone();
            let mut kept = Vec::with_capacity(self.active.len());
            for e in core::mem::take(&mut self.active) {
                if e.lw().contains_factor(&lw) {
                    pending.push(e.poly);
                } else {
                    kept.push(e);
                }
            }
            self.active = kept;
            let id = self.next_id;
            self.next_id += 1;
            self.active.push(Elem { id, poly: g });
            self.rebuild_index();
            self.enqueue_overlaps(id);
        }
    }

    fn enqueue_overlaps(&mut self, id: usize) {
        let new = self.find(id).expect("just added").lw().clone();
        let mut found = Vec::new();
        for e in &self.active {
            let other = e.lw();
            for l in new.overlaps_with(other) {
                let len = new.len() + other.len() - l;
                if len <= self.maxdeg {
                    found.push((new.concat(&other.suffix_from(l)), id, e.id, l));
                }
            }
            if e.id != id {
                for l in other.overlaps_with(&new) {
                    let len = new.len() + other.len() - l;
                    if len <= self.maxdeg {
                        found.push((other.concat(&new.suffix_from(l)), e.id, id, l));
                    }
                }
            }
        }
        self.queue.extend(found);
    }

    /// `a * v - u * b` where `lw(a) * v = u * lw(b)` is the overlap word.
    fn s_element(&self, a: &Elem, b: &Elem, l: usize) -> NCPoly {
        let la = a.lw();
        let lb = b.lw();
        let right = lb.suffix_from(l);
        let left = la.prefix(la.len() - l);
        let one = Word::one();
        a.poly
            .sandwich(&one, &right)
            .try_sub(&b.poly.sandwich(&left, &one))
            .expect("same context")
    }

    /// Runs the completion; returns the degree up to which every overlap was
    /// processed.
    fn run(&mut self, budget: Option<usize>) -> usize {
        let mut processed = 0usize;
        while let Some(ov) = self.queue.pop_first() {
            let (word, ia, ib, l) = ov.clone();
            let (Some(a), Some(b)) = (self.find(ia), self.find(ib)) else {
                continue;
            };
            if budget.is_some_and(|b| processed >= b) {
                self.queue.insert(ov);
                return word.len().saturating_sub(1).min(self.maxdeg);
            }
            processed += 1;
            let s = self.s_element(a, b, l);
            self.add(s);
        }
        self.maxdeg
    }

    /// Tail-reduces every element and sorts by ascending leading word.
    fn finish(mut self, complete_to: usize) -> TruncatedGB {
        self.active.sort_by(|a, b| a.lw().cmp(b.lw()));
        self.rebuild_index();
        let mut basis = Vec::with_capacity(self.active.len());
        for i in 0..self.active.len() {
            let p = &self.active[i].poly;
            let (lw, lc) = p.terms()[0].clone();
            let tail = NCPoly::from_sorted(self.ngens, p.terms()[1..].to_vec());
            let polys: Vec<&NCPoly> = self.active.iter().map(|e| &e.poly).collect();
            let tail = reduce_by(&tail, &polys, &self.lw_index, Strategy::Leftmost);
            basis.push(
                NCPoly::monomial(self.ngens, lw, lc)
                    .try_add(&tail)
                    .expect("same context"),
            );
        }
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, p)| (p.leading_word().expect("nonzero").clone(), i))
            .collect();
        TruncatedGB {
            ngens: self.ngens,
            basis,
            maxdeg: self.maxdeg,
            complete_to,
            index,
        }
    }
}

/// Full reduction of `f` by monic polynomials whose leading words are
/// indexed in `index`.
fn reduce_by(
    f: &NCPoly,
    polys: &[&NCPoly],
    index: &BTreeMap<Word, usize>,
    strategy: Strategy,
) -> NCPoly {
    if index.is_empty() || f.is_zero() {
        return f.clone();
    }
    let ngens = f.ngens();
    let mut work: BTreeMap<Word, Scalar> = f.terms().iter().cloned().collect();
    let mut kept: Vec<(Word, Scalar)> = Vec::new();
    while let Some((w, c)) = work.pop_last() {
        match find_reducer(&w, index, strategy) {
            Some((gi, start, len)) => {
                let g = polys[gi];
                let left = w.prefix(start);
                let right = w.suffix_from(start + len);
                for (tw, tc) in &g.terms()[1..] {
                    accumulate(&mut work, tw.sandwich(&left, &right), -&(&c * tc));
                }
            }
            None => kept.push((w, c)),
        }
    }
    NCPoly::from_sorted(ngens, kept)
}

/// Finds a leading word occurring in `w`: `(basis index, start, length)`.
fn find_reducer(
    w: &Word,
    index: &BTreeMap<Word, usize>,
    strategy: Strategy,
) -> Option<(usize, usize, usize)> {
    let letters = w.letters();
    let n = letters.len();
    if let Some(&i) = index.get(&Word::one()) {
        return Some((i, 0, 0));
    }
    let probe = |start: usize, end: usize| {
        index
            .get(&Word::from_letters(letters[start..end].to_vec()))
            .map(|&i| (i, start, end - start))
    };
    match strategy {
        Strategy::Leftmost => {
            for start in 0..n {
                for end in start + 1..=n {
                    if let Some(hit) = probe(start, end) {
                        return Some(hit);
                    }
                }
            }
        }
        Strategy::Rightmost => {
            for end in (1..=n).rev() {
                for start in (0..end).rev() {
                    if let Some(hit) = probe(start, end) {
                        return Some(hit);
                    }
                }
            }
        }
    }
    None
}

/// Truncated completion of the relations of `p` up to overlap length `maxdeg`.
pub fn groebner(p: &Presentation, maxdeg: usize) -> Result<TruncatedGB> {
    groebner_with_budget(p, maxdeg, None)
}

/// As [`groebner`], but stops after `budget` overlap resolutions; the
/// result's `complete_to` then reports how far the completion got.
pub fn groebner_with_budget(
    p: &Presentation,
    maxdeg: usize,
    budget: Option<usize>,
) -> Result<TruncatedGB> {
    if maxdeg < p.max_relation_degree() {
        return Err(Error::InvalidArgument(
            "maxdeg is below the degree of a relation",
        ));
    }
    let mut c = Completion::new(p.ngens(), maxdeg);
    for r in p.relations() {
        c.add(r.clone());
    }
    let complete_to = c.run(budget);
    Ok(c.finish(complete_to))
}

impl TruncatedGB {
    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn basis(&self) -> &[NCPoly] {
        &self.basis
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    pub fn complete_to(&self) -> usize {
        self.complete_to
    }

    pub fn leading_words(&self) -> impl Iterator<Item = &Word> {
        self.basis.iter().filter_map(NCPoly::leading_word)
    }

    /// Reduces `f` completely using the given strategy.
    pub fn reduce(&self, f: &NCPoly, strategy: Strategy) -> NCPoly {
        let polys: Vec<&NCPoly> = self.basis.iter().collect();
        reduce_by(f, &polys, &self.index, strategy)
    }

    pub fn normal_form(&self, f: &NCPoly) -> NormalForm {
        NormalForm {
            poly: self.reduce(f, Strategy::Leftmost),
            verified: f.degree().unwrap_or(0) <= self.complete_to,
        }
    }

    /// True if no leading word is a factor of `w`.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        find_reducer(w, &self.index, Strategy::Leftmost).is_none()
    }

    /// Number of normal words of length exactly `n`.
    pub fn count_normal_words(&self, n: usize) -> usize {
        let mut count = 0;
        let mut stack: Vec<Vec<u32>> = alloc::vec![Vec::new()];
        if self.index.contains_key(&Word::one()) {
            return 0;
        }
        while let Some(prefix) = stack.pop() {
            if prefix.len() == n {
                count += 1;
                continue;
            }
            for g in 0..self.ngens as u32 {
                let mut next = prefix.clone();
                next.push(g);
                // only factors ending at the new letter can be new
                let end = next.len();
                let hit = (0..end).any(|s| {
                    self.index
                        .contains_key(&Word::from_letters(next[s..end].to_vec()))
                });
                if !hit {
                    stack.push(next);
                }
            }
        }
        count
    }
}
