//! The quotient `T_{n+1} = Q[S_{n+1}] / b`, where `b` is the two-sided ideal
//! generated by `X(X - 3)` with `X = a + b + aba` for every pair of
//! non-commuting transpositions `a`, `b`.
//!
//! The ideal is computed by saturation: starting from the generators, vectors
//! are multiplied on both sides by the Coxeter generators `(i-1 i)` and
//! inserted into an exact echelon basis until nothing new appears.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::permgroups::{Permutation, TranspositionSystem};
use crate::rational::Rational;
use crate::virasoro;

/// Default limit on `(n+1)!`, i.e. `n <= 5`.
pub const DEFAULT_GROUP_ORDER_BUDGET: usize = 720;

/// A finitely supported rational combination of permutations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    coeffs: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_element(g: Permutation) -> Self {
        Self::from_terms([(g, Rational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Permutation, Rational)>) -> Self {
        let mut out = Self::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    fn add_term(&mut self, g: Permutation, c: Rational) {
        match self.coeffs.entry(g) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<Permutation, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(g, c)| (g.clone(), c * s)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (g, a) in &self.coeffs {
            for (h, b) in &other.coeffs {
                out.add_term(g * h, a * b);
            }
        }
        out
    }
}

/// `S_m` with a fixed element order and multiplication table.
struct SymmetricGroup {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: Vec<u32>,
}

impl SymmetricGroup {
    fn new(m: usize) -> Self {
        let mut elements = Vec::new();
        let mut current: Vec<usize> = (0..m).collect();
        loop {
            elements.push(Permutation::new(current.clone()).expect("valid permutation"));
            if !next_permutation(&mut current) {
                break;
            }
        }
        let index: HashMap<Permutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let order = elements.len();
        let mut table = vec![0u32; order * order];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                table[a * order + b] = index[&(pa * pb)] as u32;
            }
        }
        SymmetricGroup {
            elements,
            index,
            table,
        }
    }

    fn order(&self) -> usize {
        self.elements.len()
    }

    fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    fn to_dense(&self, x: &GroupAlgebraElement) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.order()];
        for (g, c) in x.coeffs() {
            v[self.index[g]] = c.clone();
        }
        v
    }

    fn left_mul(&self, g: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); v.len()];
        for (h, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out[self.product(g, h)] = c.clone();
        }
        out
    }

    fn right_mul(&self, v: &[Rational], g: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); v.len()];
        for (h, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out[self.product(h, g)] = c.clone();
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// One generator `X(X - 3)`, `X = a + b + aba`, per unordered pair of
/// non-commuting transpositions of `S_{n+1}`.
pub fn ideal_generators(n: usize) -> Result<Vec<GroupAlgebraElement>> {
    let system = TranspositionSystem::symmetric(n + 1)?;
    let inv = system.involutions();
    let three = Rational::from_integer(3);
    let mut out = Vec::new();
    for i in 0..inv.len() {
        for &j in system.neighbors(i).iter().filter(|&&j| j > i) {
            let k = system.circ(i, j).expect("adjacent");
            let x = GroupAlgebraElement::from_terms(
                [i, j, k].map(|t| (inv[t].clone(), Rational::one())),
            );
            let shifted = x.add(&GroupAlgebraElement::from_element(Permutation::identity(n + 1)).scale(&-&three));
            out.push(x.mul(&shifted));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZhuOptions {
    /// Largest admissible `(n+1)!`.
    pub budget: usize,
    /// Shuffles the generator list before saturation.
    pub shuffle_seed: Option<u64>,
}

impl Default for ZhuOptions {
    fn default() -> Self {
        ZhuOptions {
            budget: DEFAULT_GROUP_ORDER_BUDGET,
            shuffle_seed: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientReport {
    pub n: usize,
    pub group_order: usize,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    /// Group elements whose cosets form a basis of the quotient.
    pub basis: Vec<Permutation>,
    /// Candidate products examined before the span stabilized.
    pub products_examined: usize,
}

/// The saturated ideal together with the group it lives in.
pub struct IdealSpan {
    group: SymmetricGroup,
    span: EchelonBasis,
    products_examined: usize,
}

impl IdealSpan {
    pub fn compute(n: usize, options: ZhuOptions) -> Result<Self> {
        let m = n + 1;
        let order: usize = (1..=m).product();
        if n < 1 {
            return Err(Error::InvalidRank(n));
        }
        if order > options.budget {
            return Err(Error::BudgetExceeded {
                budget: options.budget,
            });
        }
        let group = SymmetricGroup::new(m);
        let coxeter: Vec<usize> = (1..m)
            .map(|i| group.index[&Permutation::transposition(m, i - 1, i)])
            .collect();
        let mut gens = ideal_generators(n)?;
        if let Some(seed) = options.shuffle_seed {
            gens.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        let mut span = EchelonBasis::new(order);
        let mut queue: VecDeque<Vec<Rational>> = VecDeque::new();
        let mut products_examined = 0;
        for g in &gens {
            let v = group.to_dense(g);
            if span.insert(v.clone()) {
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &s in &coxeter {
                for w in [group.left_mul(s, &v), group.right_mul(&v, s)] {
                    products_examined += 1;
                    if span.insert(w.clone()) {
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(IdealSpan {
            group,
            span,
            products_examined,
        })
    }

    pub fn ideal_dim(&self) -> usize {
        self.span.rank()
    }

    pub fn group_order(&self) -> usize {
        self.group.order()
    }

    pub fn contains(&self, x: &GroupAlgebraElement) -> bool {
        self.span.contains(&self.group.to_dense(x))
    }

    /// Whether `g x` and `x g` stay in the span for every basis vector `x`
    /// and every group element `g`.
    pub fn is_two_sided(&self) -> bool {
        (0..self.group.order()).all(|g| {
            self.span.basis().all(|v| {
                self.span.contains(&self.group.left_mul(g, v))
                    && self.span.contains(&self.group.right_mul(v, g))
            })
        })
    }

    /// Reduced image of `x` in the quotient, keyed by coset representative.
    pub fn reduce(&self, x: &GroupAlgebraElement) -> GroupAlgebraElement {
        let reduced = self.span.reduce(self.group.to_dense(x));
        GroupAlgebraElement::from_terms(
            reduced
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.group.elements[i].clone(), c)),
        )
    }

    pub fn report(&self, n: usize) -> QuotientReport {
        let mut is_pivot = vec![false; self.group.order()];
        for p in self.span.pivots() {
            is_pivot[p] = true;
        }
        let basis: Vec<Permutation> = self
            .group
            .elements
            .iter()
            .zip(&is_pivot)
            .filter(|(_, &p)| !p)
            .map(|(g, _)| g.clone())
            .collect();
        QuotientReport {
            n,
            group_order: self.group.order(),
            ideal_dim: self.ideal_dim(),
            quotient_dim: basis.len(),
            basis,
            products_examined: self.products_examined,
        }
    }
}

pub fn quotient_dimension(n: usize, options: ZhuOptions) -> Result<QuotientReport> {
    let report = IdealSpan::compute(n, options)?.report(n);
    debug_assert_eq!(report.ideal_dim + report.quotient_dim, report.group_order);
    Ok(report)
}

/// Quotient dimension next to the number of σ-type sectors `0 <= 2j <= n+1`.
/// No relation between the two is asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorCrossCheck {
    pub n: usize,
    pub sectors: Vec<u32>,
    pub quotient_dim: usize,
}

pub fn cross_check_sector_count(n: usize, options: ZhuOptions) -> Result<SectorCrossCheck> {
    let report = quotient_dimension(n, options)?;
    Ok(SectorCrossCheck {
        n,
        sectors: virasoro::sector_labels(n as u32),
        quotient_dim: report.quotient_dim,
    })
}
