//! Finite presentations `<x1, ..., xm | R = 0>` over `Q(t1, ..., tk)`,
//! semilinear twists, and descent of the coefficients onto the first
//! `r` transcendental generators.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::{default_names, NCPoly, Word};
use crate::scalars::{FieldAutomorphism, MPoly, Scalar};
use num_bigint::BigInt;

/// The coefficient field `Q(t1, ..., tk)`; `k = 0` is `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct FieldSpec {
    pub k: usize,
}

impl FieldSpec {
    pub fn new(k: usize) -> Self {
        FieldSpec { k }
    }

    pub fn rationals() -> Self {
        FieldSpec { k: 0 }
    }
}

/// A finitely presented algebra.
///
/// Identity is syntactic: the name, field, generator names and the ordered
/// relation list all take part in equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    name: String,
    field: FieldSpec,
    generators: Vec<String>,
    relations: Vec<NCPoly>,
}

impl Presentation {
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        generators: Vec<String>,
        relations: Vec<NCPoly>,
    ) -> Result<Self> {
        let m = generators.len();
        for r in &relations {
            if r.ngens() != m {
                return Err(Error::GeneratorMismatch {
                    expected: m,
                    found: r.ngens(),
                });
            }
            if r.is_zero() {
                return Err(Error::InvalidArgument("zero relation"));
            }
            let w = r.field_width();
            if w > field.k {
                return Err(Error::FieldMismatch {
                    expected: field.k,
                    found: w,
                });
            }
        }
        Ok(Presentation {
            name: name.into(),
            field,
            generators,
            relations,
        })
    }

    /// Generators named `x1, ..., xm`.
    pub fn with_default_names(
        name: impl Into<String>,
        field: FieldSpec,
        m: usize,
        relations: Vec<NCPoly>,
    ) -> Result<Self> {
        Presentation::new(name, field, default_names(m), relations)
    }

    /// The free algebra on `m` generators.
    pub fn free(field: FieldSpec, m: usize) -> Self {
        Presentation::with_default_names("F", field, m, Vec::new()).expect("no relations")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(NCPoly::is_homogeneous)
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations
            .iter()
            .filter_map(NCPoly::degree)
            .max()
            .unwrap_or(0)
    }

    fn with_relations(&self, relations: Vec<NCPoly>) -> Presentation {
        Presentation {
            name: self.name.clone(),
            field: self.field,
            generators: self.generators.clone(),
            relations,
        }
    }

    /// Presentation of the twisted algebra `A^(sigma)`: every coefficient is
    /// replaced by its image under `sigma^{-1}`, words unchanged.
    ///
    /// With this convention `twist(twist(P, s), t) == twist(P, s ∘ t)`.
    pub fn twist(&self, sigma: &FieldAutomorphism) -> Result<Presentation> {
        if sigma.k() != self.field.k {
            return Err(Error::FieldMismatch {
                expected: self.field.k,
                found: sigma.k(),
            });
        }
        let inv = sigma.invert();
        let relations = self
            .relations
            .iter()
            .map(|r| r.map_coefficients(&inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_relations(relations))
    }

    /// Transcendental generators occurring in the coefficients (0-based), in
    /// order of first occurrence: relations in list order, terms in
    /// descending deglex, numerator before denominator.
    ///
    /// Several generators can first appear in the same coefficient. Their
    /// relative order is then read off the coefficient without looking at
    /// the labels (see `occurrence_key`), and whatever ties remain are broken
    /// by taking the ordering whose canonical presentation is smallest. The
    /// result is therefore compatible with relabeling: for a permutation `π`,
    /// the support of `twist(P, π)` is the support of `P` renamed by `π^{-1}`,
    /// except that generators whose exchange fixes the canonical presentation
    /// may come out in either order.
    pub fn transcendental_support(&self) -> Vec<usize> {
        let classes = self.support_classes();
        if classes.iter().all(|c| c.len() == 1) {
            return classes.into_iter().flatten().collect();
        }
        let mut best: Option<(TermKey, Vec<usize>)> = None;
        let mut current: Vec<Vec<usize>> = classes.clone();
        loop {
            let order: Vec<usize> = current.iter().flatten().copied().collect();
            let p0 = self.twist(&self.renaming(&order)).expect("same field");
            let key: TermKey = p0.relations.iter().map(|r| r.terms().to_vec()).collect();
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, order));
            }
            if !next_in_product(&mut current) {
                break;
            }
        }
        best.expect("at least one ordering").1
    }

    /// Support generators grouped into classes: classes come in the order
    /// of the support, generators inside a class can be permuted freely as
    /// far as the traversal can tell. Each class is sorted by index.
    fn support_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.field.k];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for r in &self.relations {
            for (_, c) in r.terms() {
                let mut fresh: Vec<usize> = Vec::new();
                for v in c.variables_in_order() {
                    if !seen[v] {
                        seen[v] = true;
                        fresh.push(v);
                    }
                }
                if fresh.len() <= 1 {
                    classes.extend(fresh.into_iter().map(|v| alloc::vec![v]));
                    continue;
                }
                let mut keyed: Vec<(OccurrenceKey, usize)> = fresh
                    .into_iter()
                    .map(|v| (occurrence_key(c, v), v))
                    .collect();
                keyed.sort();
                let mut i = 0;
                while i < keyed.len() {
                    let j = (i..keyed.len())
                        .find(|&j| keyed[j].0 != keyed[i].0)
                        .unwrap_or(keyed.len());
                    classes.push(keyed[i..j].iter().map(|(_, v)| *v).collect());
                    i = j;
                }
            }
        }
        classes
    }

    /// The permutation sending `t_i` to the i-th entry of `order` and the
    /// remaining generators, in increasing order, to the remaining slots.
    fn renaming(&self, order: &[usize]) -> FieldAutomorphism {
        let mut used = alloc::vec![false; self.field.k];
        for &s in order {
            used[s] = true;
        }
        let mut perm = order.to_vec();
        perm.extend((0..self.field.k).filter(|&i| !used[i]));
        FieldAutomorphism::permutation(&perm).expect("a permutation")
    }

    /// Renames the transcendentals so the support becomes `t1, ..., tr`.
    ///
    /// Returns `(P0, sigma)` with `P0 = twist(P, sigma)` and
    /// `P = twist(P0, sigma^{-1})`, where `sigma` sends `t_i` to the i-th
    /// element of [`transcendental_support`](Self::transcendental_support).
    pub fn canonicalize(&self) -> (Presentation, FieldAutomorphism) {
        let sigma = self.renaming(&self.transcendental_support());
        let p0 = self.twist(&sigma).expect("same field");
        (p0, sigma)
    }

    /// True when every coefficient lies in `Q(t1, ..., tr)`.
    pub fn is_over_subfield(&self, r: usize) -> bool {
        self.relations.iter().all(|p| p.field_width() <= r)
    }

    /// Syntactic equality.
    pub fn presentations_equal(&self, other: &Presentation) -> bool {
        self == other
    }
}

/// How `v` sits inside a coefficient, with every other generator anonymous:
/// per term the exponent of `v`, the sorted exponents of the others and the
/// integer coefficient, for numerator and denominator. Both signs of the
/// fraction are tried, since the sign normalization looks at labels.
type OccurrenceKey = (Vec<(u32, Vec<u32>, BigInt)>, Vec<(u32, Vec<u32>, BigInt)>);

/// Relation terms in order, compared lexicographically.
type TermKey = Vec<Vec<(Word, Scalar)>>;

fn occurrence_key(c: &Scalar, v: usize) -> OccurrenceKey {
    fn side(p: &MPoly, v: usize) -> Vec<(u32, Vec<u32>, BigInt)> {
        let mut out: Vec<(u32, Vec<u32>, BigInt)> = p
            .terms()
            .iter()
            .map(|(m, a)| {
                let mut others: Vec<u32> = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|&(i, e)| i != v && *e > 0)
                    .map(|(_, e)| *e)
                    .collect();
                others.sort_unstable();
                (m.exponent(v), others, a.clone())
            })
            .collect();
        out.sort();
        out
    }
    let (num, den) = (c.numerator(), c.denominator());
    let plus = (side(num, v), side(den, v));
    let minus = (side(&num.neg(), v), side(&den.neg(), v));
    plus.min(minus)
}

/// Steps to the next element of the product of the permutations of each
/// class (lexicographic within a class, last class fastest); false after
/// the last one, leaving every class sorted again.
fn next_in_product(classes: &mut [Vec<usize>]) -> bool {
    for class in classes.iter_mut().rev() {
        if next_permutation(class) {
            return true;
        }
    }
    false
}

fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
