//! Unitary series of the Virasoro algebra: central charges
//! `c_n = 1 - 6/((n+2)(n+3))`, highest weights `h^{(n)}_{r,s}` and the fusion
//! rules between the irreducible `L(c_n, 0)`-modules.
//!
//! A label `(r, s)` and its partner `(n+2-r, n+3-s)` name the same module.
//! Every label handed out by this module is canonical (the lexicographically
//! smaller of the two) unless built directly with [`MinimalLabel::new`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinimalLabel {
    n: u32,
    r: u32,
    s: u32,
}

fn check_series(n: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidSeries(n as i64));
    }
    Ok(())
}

impl MinimalLabel {
    /// Requires `1 <= r <= n+1` and `1 <= s <= n+2`.
    pub fn new(n: u32, r: u32, s: u32) -> Result<Self> {
        check_series(n)?;
        if r < 1 || r > n + 1 || s < 1 || s > n + 2 {
            return Err(Error::InvalidLabel {
                n: n as i64,
                r: r as i64,
                s: s as i64,
            });
        }
        Ok(MinimalLabel { n, r, s })
    }

    pub fn vacuum(n: u32) -> Result<Self> {
        Self::new(n, 1, 1)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `(n+2-r, n+3-s)`
    pub fn partner(&self) -> MinimalLabel {
        MinimalLabel {
            n: self.n,
            r: self.n + 2 - self.r,
            s: self.n + 3 - self.s,
        }
    }

    pub fn canonical(&self) -> MinimalLabel {
        (*self).min(self.partner())
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    pub fn weight(&self) -> Rational {
        weight_of(self.n, self.r, self.s)
    }
}

impl fmt::Display for MinimalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.s)
    }
}

fn weight_of(n: u32, r: u32, s: u32) -> Rational {
    let (n, r, s) = (n as i64, r as i64, s as i64);
    let d = r * (n + 3) - s * (n + 2);
    Rational::new(d * d - 1, 4 * (n + 2) * (n + 3))
}

pub fn central_charge_c(n: u32) -> Result<Rational> {
    check_series(n)?;
    let n = n as i64;
    Ok(Rational::one() - Rational::new(6, (n + 2) * (n + 3)))
}

pub fn highest_weight(n: u32, r: u32, s: u32) -> Result<Rational> {
    Ok(MinimalLabel::new(n, r, s)?.weight())
}

pub fn canonical(label: &MinimalLabel) -> MinimalLabel {
    label.canonical()
}

/// Every valid `(r, s)` in the full rectangle.
pub fn all_labels(n: u32) -> Result<Vec<MinimalLabel>> {
    check_series(n)?;
    Ok((1..=n + 1)
        .flat_map(|r| (1..=n + 2).map(move |s| MinimalLabel { n, r, s }))
        .collect())
}

pub fn canonical_labels(n: u32) -> Result<Vec<MinimalLabel>> {
    Ok(all_labels(n)?.into_iter().filter(MinimalLabel::is_canonical).collect())
}

/// A multiset of canonical labels of one series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionResult {
    n: u32,
    terms: BTreeMap<MinimalLabel, u32>,
}

impl FusionResult {
    pub fn empty(n: u32) -> Self {
        FusionResult {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(label: MinimalLabel) -> Self {
        let mut out = Self::empty(label.n);
        out.add(label, 1);
        out
    }

    fn add(&mut self, label: MinimalLabel, mult: u32) {
        *self.terms.entry(label.canonical()).or_insert(0) += mult;
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `(label, multiplicity)` in label order.
    pub fn terms(&self) -> impl Iterator<Item = (&MinimalLabel, u32)> {
        self.terms.iter().map(|(l, &m)| (l, m))
    }

    pub fn labels(&self) -> impl Iterator<Item = &MinimalLabel> {
        self.terms.keys()
    }

    pub fn multiplicity(&self, label: &MinimalLabel) -> u32 {
        self.terms.get(&label.canonical()).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.terms.values().sum()
    }
}

fn fuse_raw(a: &MinimalLabel, b: &MinimalLabel) -> FusionResult {
    let n = a.n;
    let (r1, s1, r2, s2) = (a.r, a.s, b.r, b.s);
    let m = r1.min(r2).min(n + 2 - r1).min(n + 2 - r2);
    let nn = s1.min(s2).min(n + 3 - s1).min(n + 3 - s2);
    let mut out = FusionResult::empty(n);
    for i in 1..=m {
        for j in 1..=nn {
            let r = r1.abs_diff(r2) + 2 * i - 1;
            let s = s1.abs_diff(s2) + 2 * j - 1;
            out.add(MinimalLabel { n, r, s }, 1);
        }
    }
    out
}

/// Fusion product of two modules. The rule is evaluated on every choice of
/// representatives for the two labels; disagreement is an error.
pub fn fuse(a: &MinimalLabel, b: &MinimalLabel) -> Result<FusionResult> {
    if a.n != b.n {
        return Err(Error::SeriesMismatch(a.n, b.n));
    }
    let reference = fuse_raw(a, b);
    for (x, y) in [(a.partner(), *b), (*a, b.partner()), (a.partner(), b.partner())] {
        let other = fuse_raw(&x, &y);
        if other != reference {
            return Err(Error::FusionAsymmetry(format!("{a} x {b} in series n = {}", a.n)));
        }
    }
    Ok(reference)
}

/// Extends [`fuse`] bilinearly to multisets.
pub fn fuse_results(x: &FusionResult, y: &FusionResult) -> Result<FusionResult> {
    if x.n != y.n {
        return Err(Error::SeriesMismatch(x.n, y.n));
    }
    let mut out = FusionResult::empty(x.n);
    for (a, ma) in x.terms() {
        for (b, mb) in y.terms() {
            for (c, mc) in fuse(a, b)?.terms() {
                out.add(*c, ma * mb * mc);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightScan {
    pub n: u32,
    pub labels: usize,
    pub classes: usize,
    /// Two labels whose weights coincide without being identified, or the
    /// reverse.
    pub counterexample: Option<(MinimalLabel, MinimalLabel)>,
}

impl WeightScan {
    pub fn ok(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks over all label pairs that `h_{r,s} = h_{r',s'}` exactly when
/// `(r', s')` is `(r, s)` or its partner.
pub fn weight_coincidence_scan(n: u32) -> Result<WeightScan> {
    let labels = all_labels(n)?;
    let weights: Vec<Rational> = labels.iter().map(MinimalLabel::weight).collect();
    let mut counterexample = None;
    'outer: for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate().skip(i + 1) {
            let identified = a.partner() == *b;
            if (weights[i] == weights[j]) != identified {
                counterexample = Some((*a, *b));
                break 'outer;
            }
        }
    }
    let classes = weights.iter().collect::<BTreeSet<_>>().len();
    Ok(WeightScan {
        n,
        labels: labels.len(),
        classes,
        counterexample,
    })
}

/// True iff the fusion product of any two members of `set` only contains members.
pub fn fusion_closed(n: u32, set: &[MinimalLabel]) -> Result<bool> {
    check_series(n)?;
    let mut members = BTreeSet::new();
    for label in set {
        if label.n != n {
            return Err(Error::SeriesMismatch(n, label.n));
        }
        members.insert(label.canonical());
    }
    for a in &members {
        for b in &members {
            if fuse(a, b)?.labels().any(|c| !members.contains(c)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Canonical labels `(2k+1, 1)` for `0 <= 2k <= n`.
pub fn odd_vacuum_column(n: u32) -> Result<Vec<MinimalLabel>> {
    check_series(n)?;
    (0..=n / 2)
        .map(|k| Ok(MinimalLabel::new(n, 2 * k + 1, 1)?.canonical()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingTerm {
    pub k: u32,
    pub label: MinimalLabel,
    pub weight: Rational,
}

/// Summands of the `2j` sector of the type `A_n` coset module under the
/// restriction to `A_{n-1}` times `L(c_n, 0)`: one term
/// `h^{(n)}_{2k+1, 2j+1}` for each `0 <= 2k <= n`.
pub fn branching_labels(n: u32, j: u32) -> Result<Vec<BranchingTerm>> {
    check_series(n)?;
    if 2 * j > n + 1 {
        return Err(Error::InvalidLabel {
            n: n as i64,
            r: 1,
            s: (2 * j + 1) as i64,
        });
    }
    (0..=n / 2)
        .map(|k| {
            let label = MinimalLabel::new(n, 2 * k + 1, 2 * j + 1)?;
            Ok(BranchingTerm {
                k,
                weight: label.weight(),
                label: label.canonical(),
            })
        })
        .collect()
}

/// The values `2j` with `0 <= 2j <= i+1` indexing the sectors of type `A_i`.
pub fn sector_labels(i: u32) -> Vec<u32> {
    (0..=i.div_ceil(2)).map(|j| 2 * j).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightPartition {
    /// `n = 1`: weights allowed for σ-type vectors and the excluded `1/16`.
    Ising {
        sigma_type: Vec<Rational>,
        excluded: Vec<Rational>,
    },
    /// Every distinct weight of the series, ascending.
    General { weights: Vec<Rational> },
}

pub fn sigma_type_weights(n: u32) -> Result<WeightPartition> {
    let weights: Vec<Rational> = canonical_labels(n)?
        .iter()
        .map(MinimalLabel::weight)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if n == 1 {
        let sixteenth = Rational::new(1, 16);
        let (excluded, sigma_type) = weights.into_iter().partition(|w| *w == sixteenth);
        return Ok(WeightPartition::Ising {
            sigma_type,
            excluded,
        });
    }
    Ok(WeightPartition::General { weights })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn l(n: u32, r: u32, s: u32) -> MinimalLabel {
        MinimalLabel::new(n, r, s).unwrap()
    }

    /// Direct formula evaluation in floating point, used only as an oracle
    /// for the exact weights at small n.
    fn weight_f64(n: u32, r: u32, s: u32) -> f64 {
        let (n, r, s) = (n as f64, r as f64, s as f64);
        ((r * (n + 3.0) - s * (n + 2.0)).powi(2) - 1.0) / (4.0 * (n + 2.0) * (n + 3.0))
    }

    #[test]
    fn central_charges() {
        assert_eq!(central_charge_c(1).unwrap(), q(1, 2));
        assert_eq!(central_charge_c(2).unwrap(), q(7, 10));
        assert_eq!(central_charge_c(3).unwrap(), q(4, 5));
        assert_eq!(central_charge_c(0), Err(Error::InvalidSeries(0)));
        let cs: Vec<Rational> = (1..=30).map(|n| central_charge_c(n).unwrap()).collect();
        assert!(cs.windows(2).all(|w| w[0] < w[1]));
        assert!(cs.iter().all(|c| *c < Rational::one()));
    }

    #[test]
    fn weights() {
        assert_eq!(highest_weight(1, 1, 1).unwrap(), Rational::zero());
        assert_eq!(highest_weight(1, 2, 1).unwrap(), q(1, 2));
        assert_eq!(highest_weight(1, 2, 2).unwrap(), q(1, 16));
        assert_eq!(highest_weight(2, 3, 1).unwrap(), q(3, 2));
        assert_eq!(highest_weight(2, 1, 3).unwrap(), q(3, 5));
        assert!(highest_weight(1, 3, 1).is_err());
        assert!(highest_weight(1, 1, 4).is_err());
        assert!(highest_weight(1, 0, 1).is_err());
        for n in 1..=6 {
            for lab in all_labels(n).unwrap() {
                let exact = lab.weight();
                let approx = weight_f64(n, lab.r(), lab.s());
                let as_f64 = exact.numer().to_string().parse::<f64>().unwrap()
                    / exact.denom().to_string().parse::<f64>().unwrap();
                assert!((as_f64 - approx).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(l(1, 2, 3).canonical(), l(1, 1, 1));
        assert_eq!(l(1, 1, 2).canonical(), l(1, 1, 2));
        assert_eq!(l(2, 3, 4).canonical(), l(2, 1, 1));
        for n in 1..=12 {
            for lab in all_labels(n).unwrap() {
                assert_eq!(lab.canonical().weight(), lab.weight());
                assert_eq!(lab.partner().partner(), lab);
            }
        }
    }

    #[test]
    fn ising_fusion() {
        let eps = l(1, 2, 1);
        assert_eq!(fuse(&eps, &eps).unwrap(), FusionResult::single(l(1, 1, 1)));
        let sigma = l(1, 2, 2);
        let ss = fuse(&sigma, &sigma).unwrap();
        let listed: Vec<(MinimalLabel, u32)> = ss.terms().map(|(a, m)| (*a, m)).collect();
        assert_eq!(listed, vec![(l(1, 1, 1), 1), (l(1, 1, 3), 1)]);
        let weights: Vec<Rational> = ss.labels().map(MinimalLabel::weight).collect();
        assert_eq!(weights, vec![Rational::zero(), q(1, 2)]);
        assert_eq!(
            fuse(&l(1, 1, 1), &l(1, 2, 2)).unwrap(),
            FusionResult::single(l(1, 2, 2))
        );
    }

    #[test]
    fn cross_series_fusion_is_an_error() {
        assert_eq!(fuse(&l(1, 1, 1), &l(2, 1, 1)), Err(Error::SeriesMismatch(1, 2)));
    }

    #[test]
    fn fusion_commutative_with_unit() {
        for n in 1..=8 {
            let labels = canonical_labels(n).unwrap();
            let vac = MinimalLabel::vacuum(n).unwrap();
            for a in &labels {
                assert_eq!(fuse(&vac, a).unwrap(), FusionResult::single(*a));
                for b in &labels {
                    assert_eq!(fuse(a, b).unwrap(), fuse(b, a).unwrap());
                }
            }
        }
    }

    #[test]
    fn fusion_associative_exhaustive() {
        for n in 1..=4 {
            let labels = canonical_labels(n).unwrap();
            for a in &labels {
                for b in &labels {
                    let ab = fuse(a, b).unwrap();
                    for c in &labels {
                        let left = fuse_results(&ab, &FusionResult::single(*c)).unwrap();
                        let bc = fuse(b, c).unwrap();
                        let right = fuse_results(&FusionResult::single(*a), &bc).unwrap();
                        assert_eq!(left, right, "n={n} {a} {b} {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn fusion_associative_sampled() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 5..=6 {
            let labels = canonical_labels(n).unwrap();
            for _ in 0..200 {
                let pick = |rng: &mut ChaCha8Rng| labels[rng.gen_range(0..labels.len())];
                let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                let left = fuse_results(&fuse(&a, &b).unwrap(), &FusionResult::single(c)).unwrap();
                let right = fuse_results(&FusionResult::single(a), &fuse(&b, &c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn weight_scans() {
        let s1 = weight_coincidence_scan(1).unwrap();
        assert!(s1.ok());
        assert_eq!((s1.labels, s1.classes), (6, 3));
        for n in 2..=12 {
            let scan = weight_coincidence_scan(n).unwrap();
            assert!(scan.ok(), "n = {n}");
            assert_eq!(scan.classes * 2, scan.labels);
        }
    }

    #[test]
    fn closure_examples() {
        assert!(fusion_closed(3, &odd_vacuum_column(3).unwrap()).unwrap());
        assert!(fusion_closed(4, &[l(4, 1, 1)]).unwrap());
        assert!(!fusion_closed(1, &[l(1, 2, 2)]).unwrap());
        assert_eq!(odd_vacuum_column(3).unwrap(), vec![l(3, 1, 1), l(3, 3, 1).canonical()]);
        assert_eq!(l(3, 3, 1).canonical(), l(3, 2, 5));
    }

    #[test]
    fn branching() {
        let b: Vec<(u32, Rational)> = branching_labels(2, 0)
            .unwrap()
            .into_iter()
            .map(|t| (t.k, t.weight))
            .collect();
        assert_eq!(b, vec![(0, Rational::zero()), (1, q(3, 2))]);
        let b: Vec<(u32, Rational)> = branching_labels(2, 1)
            .unwrap()
            .into_iter()
            .map(|t| (t.k, t.weight))
            .collect();
        assert_eq!(b, vec![(0, q(3, 5)), (1, q(1, 10))]);
        assert_eq!(branching_labels(1, 0).unwrap().len(), 1);
        assert!(branching_labels(2, 2).is_err());
        for n in 1u32..=10 {
            let count = (n / 2 + 1) as usize;
            for j in 0..=n.div_ceil(2) {
                assert_eq!(branching_labels(n, j).unwrap().len(), count);
            }
        }
    }

    #[test]
    fn sectors() {
        assert_eq!(sector_labels(1), vec![0, 2]);
        assert_eq!(sector_labels(2), vec![0, 2]);
        assert_eq!(sector_labels(3), vec![0, 2, 4]);
    }

    #[test]
    fn sigma_type_partition() {
        assert_eq!(
            sigma_type_weights(1).unwrap(),
            WeightPartition::Ising {
                sigma_type: vec![Rational::zero(), q(1, 2)],
                excluded: vec![q(1, 16)]
            }
        );
        assert_eq!(
            sigma_type_weights(2).unwrap(),
            WeightPartition::General {
                weights: vec![Rational::zero(), q(3, 80), q(1, 10), q(7, 16), q(3, 5), q(3, 2)]
            }
        );
    }

    proptest! {
        #[test]
        fn partner_shares_weight(n in 1u32..40, r in 1u32..42, s in 1u32..43) {
            prop_assume!(r <= n + 1 && s <= n + 2);
            let lab = l(n, r, s);
            prop_assert_eq!(lab.partner().weight(), lab.weight());
            prop_assert!(lab.canonical().is_canonical());
        }
    }
}
