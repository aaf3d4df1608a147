//! Coefficient systems for highest-weight vectors over an Ising vector.
//!
//! - [`LowerToeplitz`] and [`jordan_exp`]: the triangular systems `exp(±J)`
//!   with `J` the nilpotent shift.
//! - [`WordPolynomial`]: rational combinations of words in free graded
//!   generators `E` (degree 1) or `Q_t` (degree `t >= 2`).
//! - [`p_half`], [`p_zero`]: the coefficients `P_{1/2,k,j}` and `P_{0,k,j}`.
//! - [`verify_substitution`]: an independent check of the `P_{0,k,j}`
//!   recursion by inverting the triangular relation between the `b` and `v`
//!   symbols.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// Lower-triangular Toeplitz matrix `M[i][j] = a_{i-j}` for `i >= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerToeplitz {
    seq: Vec<Rational>,
}

impl LowerToeplitz {
    pub fn new(seq: Vec<Rational>) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::InvalidSize(0));
        }
        Ok(LowerToeplitz { seq })
    }

    pub fn identity(m: usize) -> Result<Self> {
        Self::from_fn(m, |t| if t == 0 { Rational::one() } else { Rational::zero() })
    }

    fn from_fn(m: usize, f: impl Fn(usize) -> Rational) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidSize(m));
        }
        Ok(LowerToeplitz {
            seq: (0..m).map(f).collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.seq.len()
    }

    pub fn sequence(&self) -> &[Rational] {
        &self.seq
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        if i >= j {
            self.seq[i - j].clone()
        } else {
            Rational::zero()
        }
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        self.seq[0].is_one()
    }

    /// Truncated convolution of the defining sequences.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::ShapeError {
                expected: self.size(),
                found: other.size(),
            });
        }
        Self::from_fn(self.size(), |t| {
            (0..=t).map(|s| &self.seq[s] * &other.seq[t - s]).sum()
        })
    }

    pub fn to_matrix(&self) -> Matrix {
        let m = self.size();
        Matrix::from_fn(m, m, |i, j| self.entry(i, j))
    }
}

/// `exp(s J)` of size `m`: `a_t = s^t / t!`.
pub fn jordan_exp_scaled(m: usize, s: &Rational) -> Result<LowerToeplitz> {
    LowerToeplitz::from_fn(m, |t| s.pow(t as u32) * Rational::inverse_factorial(t as u32))
}

/// `exp(J)` of size `m`: `a_t = 1/t!`.
pub fn jordan_exp(m: usize) -> Result<LowerToeplitz> {
    jordan_exp_scaled(m, &Rational::one())
}

/// `exp(-J)` of size `m`: `a_t = (-1)^t/t!`.
pub fn jordan_exp_neg(m: usize) -> Result<LowerToeplitz> {
    jordan_exp_scaled(m, &Rational::from_integer(-1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// Degree 1.
    E,
    /// Degree `t`, `t >= 2`.
    Q(u32),
}

impl Generator {
    pub fn q(t: u32) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidParameter(format!("Q_{t}: index must be at least 2")));
        }
        Ok(Generator::Q(t))
    }

    pub fn degree(self) -> u32 {
        match self {
            Generator::E => 1,
            Generator::Q(t) => t,
        }
    }

    pub fn name(self) -> String {
        match self {
            Generator::E => "E".to_string(),
            Generator::Q(t) => format!("Q{t}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    E,
    Q,
}

/// A word in the free monoid on [`Generator`]s, ordered by length and then
/// lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|g| g.degree()).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn is_over(&self, alphabet: Alphabet) -> bool {
        self.0.iter().all(|g| {
            matches!(
                (alphabet, g),
                (Alphabet::E, Generator::E) | (Alphabet::Q, Generator::Q(_))
            )
        })
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
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
            return f.write_str("1");
        }
        let names: Vec<String> = self.0.iter().map(|g| g.name()).collect();
        f.write_str(&names.join("·"))
    }
}

/// Rational combination of [`Word`]s; multiplication concatenates words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordPolynomial {
    terms: BTreeMap<Word, Rational>,
}

impl WordPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty(), Rational::one())
    }

    pub fn generator(g: Generator) -> Self {
        Self::monomial(Word(vec![g]), Rational::one())
    }

    pub fn monomial(word: Word, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(word, coeff);
        p
    }

    fn add_term(&mut self, word: Word, coeff: Rational) {
        match self.terms.entry(word) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff);
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from_integer(-1))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Terms whose word has degree `d`.
    pub fn component(&self, d: u32) -> Self {
        WordPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Word::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The zero polynomial is homogeneous of every degree.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|w| w.degree() == d)
    }

    pub fn is_over(&self, alphabet: Alphabet) -> bool {
        self.terms.keys().all(|w| w.is_over(alphabet))
    }
}

impl fmt::Display for WordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}·{w}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for WordPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: &'a Rational,
            word: Vec<String>,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&Term {
                coeff: c,
                word: w.letters().iter().map(|g| g.name()).collect(),
            })?;
        }
        seq.end()
    }
}

/// Vanishing conventions for weight `N` of `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryTable {
    pub n: usize,
}

impl BoundaryTable {
    pub fn new(n: usize) -> Self {
        BoundaryTable { n }
    }

    pub fn half_vanishes(&self, k: usize, j: usize) -> bool {
        k >= self.n || k + j >= self.n
    }

    pub fn zero_vanishes(&self, k: usize, j: usize) -> bool {
        k >= self.n || k + j > self.n + 1
    }

    /// `b_{(k)} y` vanishes: weight one (`k = N`) or negative weight (`k > N+1`).
    pub fn symbol_vanishes(&self, k: usize) -> bool {
        k == self.n || k > self.n + 1
    }
}

/// `P_{1/2, N-i-1, j} = (-E)^j / j!`, zero when `j > i`.
pub fn p_half(i: usize, j: usize) -> WordPolynomial {
    if j > i {
        return WordPolynomial::zero();
    }
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };
    WordPolynomial::monomial(
        Word(vec![Generator::E; j]),
        Rational::from_integer(sign) * Rational::inverse_factorial(j as u32),
    )
}

/// Memoized `P_{0,k,j}` for a fixed `N`.
#[derive(Clone, Debug)]
pub struct ZeroCoefficients {
    table: BoundaryTable,
    memo: HashMap<(usize, usize), WordPolynomial>,
}

impl ZeroCoefficients {
    pub fn new(n: usize) -> Self {
        ZeroCoefficients {
            table: BoundaryTable::new(n),
            memo: HashMap::new(),
        }
    }

    pub fn boundary(&self) -> BoundaryTable {
        self.table
    }

    /// `P_{0,k,j} = -Q_j - Σ_{t=2}^{j-1} Q_t P_{0,k+t,j-t}`; `P_{0,k,0} = 1`.
    pub fn get(&mut self, k: usize, j: usize) -> WordPolynomial {
        if self.table.zero_vanishes(k, j) {
            return WordPolynomial::zero();
        }
        if j == 0 {
            return WordPolynomial::one();
        }
        if let Some(p) = self.memo.get(&(k, j)) {
            return p.clone();
        }
        let mut p = WordPolynomial::zero();
        if j >= 2 {
            p = p.sub(&WordPolynomial::generator(Generator::Q(j as u32)));
        }
        for t in 2..j {
            let tail = self.get(k + t, j - t);
            p = p.sub(&WordPolynomial::generator(Generator::Q(t as u32)).mul(&tail));
        }
        self.memo.insert((k, j), p.clone());
        p
    }
}

pub fn p_zero(n: usize, k: usize, j: usize) -> WordPolynomial {
    ZeroCoefficients::new(n).get(k, j)
}

/// Expansion of each `v_{(k-1)} x` over the symbols `b_{(m)} y`, obtained by
/// inverting `b_{(k)} y = v_{(k-1)} x + Σ_{t=2}^{N-k+1} Q_t v_{(k+t-1)} x`
/// as the finite Neumann series `Σ_p (-L)^p` of its nilpotent part `L`.
#[derive(Clone, Debug)]
pub struct SubstitutionOracle {
    table: BoundaryTable,
    /// `rows[k][m]`: coefficient of the formal symbol `b_{(m)} y` in
    /// `v_{(k-1)} x`, `1 <= k, m <= N+1`, before vanishing symbols are dropped.
    rows: Vec<BTreeMap<usize, WordPolynomial>>,
}

type SparseMatrix = Vec<BTreeMap<usize, WordPolynomial>>;

fn sparse_mul(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    a.iter()
        .map(|row| {
            let mut out: BTreeMap<usize, WordPolynomial> = BTreeMap::new();
            for (&mid, x) in row {
                for (&col, y) in &b[mid] {
                    let entry = out.entry(col).or_default();
                    *entry = entry.add(&x.mul(y));
                }
            }
            out.retain(|_, p| !p.is_zero());
            out
        })
        .collect()
}

impl SubstitutionOracle {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("N = {n}: need N >= 2")));
        }
        let size = n + 2;
        // -L, indexed 0..=N+1; index 0 is unused.
        let mut neg_l: SparseMatrix = vec![BTreeMap::new(); size];
        for (k, row) in neg_l.iter_mut().enumerate().skip(1) {
            for t in 2..=(n + 1).saturating_sub(k) {
                row.insert(k + t, WordPolynomial::generator(Generator::Q(t as u32)).neg());
            }
        }
        let mut power: SparseMatrix = (0..size)
            .map(|k| BTreeMap::from([(k, WordPolynomial::one())]))
            .collect();
        let mut inverse = power.clone();
        loop {
            power = sparse_mul(&power, &neg_l);
            if power.iter().all(BTreeMap::is_empty) {
                break;
            }
            for (acc, row) in inverse.iter_mut().zip(&power) {
                for (&col, p) in row {
                    let entry = acc.entry(col).or_default();
                    *entry = entry.add(p);
                }
            }
        }
        for row in &mut inverse {
            row.retain(|_, p| !p.is_zero());
        }
        Ok(SubstitutionOracle {
            table: BoundaryTable::new(n),
            rows: inverse,
        })
    }

    pub fn n(&self) -> usize {
        self.table.n
    }

    /// Coefficient of the formal symbol `b_{(k+j)} y` in `v_{(k-1)} x`.
    pub fn raw_coefficient(&self, k: usize, j: usize) -> WordPolynomial {
        self.rows
            .get(k)
            .and_then(|row| row.get(&(k + j)))
            .cloned()
            .unwrap_or_default()
    }

    /// As [`Self::raw_coefficient`], zero when `b_{(k+j)} y` vanishes.
    pub fn coefficient(&self, k: usize, j: usize) -> WordPolynomial {
        if self.table.symbol_vanishes(k + j) {
            WordPolynomial::zero()
        } else {
            self.raw_coefficient(k, j)
        }
    }

    /// Symbols `m` with a nonzero raw coefficient in `v_{(k-1)} x`.
    pub fn support(&self, k: usize) -> Vec<usize> {
        self.rows.get(k).map(|r| r.keys().copied().collect()).unwrap_or_default()
    }
}

/// An index where a vanishing convention overrides a nonzero value of the
/// unrestricted recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionFlag {
    pub k: usize,
    pub j: usize,
    /// Whether the overridden coefficient multiplies a nonvanishing symbol.
    pub material: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubstitutionReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub ok: bool,
    /// `(i, degree)` pairs compared.
    pub checked: usize,
    /// First `(i, degree)` at which the identity fails.
    pub first_failure: Option<(usize, u32)>,
    pub convention_flags: Vec<ConventionFlag>,
    pub word_order: &'static str,
}

pub const WORD_ORDER_NOTE: &str = "Q_t multiplies on the left: P_{0,k,j} contains Q_t·P_{0,k+t,j-t}";

/// `-Q_j - Σ_t Q_t U(k+t, j-t)` with only the `k >= N` convention applied.
fn unrestricted(n: usize, k: usize, j: usize, memo: &mut HashMap<(usize, usize), WordPolynomial>) -> WordPolynomial {
    if k >= n {
        return WordPolynomial::zero();
    }
    if j == 0 {
        return WordPolynomial::one();
    }
    if let Some(p) = memo.get(&(k, j)) {
        return p.clone();
    }
    let mut p = WordPolynomial::zero();
    if j >= 2 {
        p = p.sub(&WordPolynomial::generator(Generator::Q(j as u32)));
    }
    for t in 2..j {
        let tail = unrestricted(n, k + t, j - t, memo);
        p = p.sub(&WordPolynomial::generator(Generator::Q(t as u32)).mul(&tail));
    }
    memo.insert((k, j), p.clone());
    p
}

/// Checks `v_{(k-1)} x = b_{(k)} y + Σ_{j>0} P_{0,k,j} b_{(k+j)} y` for
/// `k = N - i`, `0 <= i < N`, degree by degree, against [`SubstitutionOracle`].
pub fn verify_substitution(n: usize) -> Result<SubstitutionReport> {
    let oracle = SubstitutionOracle::new(n)?;
    let table = BoundaryTable::new(n);
    let mut coeffs = ZeroCoefficients::new(n);
    let mut checked = 0;
    let mut first_failure = None;
    'outer: for i in 0..n {
        let k = n - i;
        let max_degree = (n + 1 - k) as u32;
        for degree in 0..=max_degree {
            checked += 1;
            let d = degree as usize;
            let p = coeffs.get(k, d);
            let reduced = if table.symbol_vanishes(k + d) {
                WordPolynomial::zero()
            } else {
                p.clone()
            };
            if oracle.coefficient(k, d) != reduced
                || (k < n && oracle.raw_coefficient(k, d) != p)
                || !p.is_homogeneous_of(degree)
            {
                first_failure = Some((i, degree));
                break 'outer;
            }
        }
        if oracle.support(k).iter().any(|&m| m < k) {
            first_failure = Some((i, 0));
            break;
        }
    }

    let mut memo = HashMap::new();
    let mut convention_flags = Vec::new();
    for k in 1..n {
        for j in 1..=n + 2 {
            if table.zero_vanishes(k, j) && !unrestricted(n, k, j, &mut memo).is_zero() {
                convention_flags.push(ConventionFlag {
                    k,
                    j,
                    material: !table.symbol_vanishes(k + j),
                });
            }
        }
    }
    let material = convention_flags.iter().any(|f| f.material);
    Ok(SubstitutionReport {
        n,
        ok: first_failure.is_none() && !material,
        checked,
        first_failure,
        convention_flags,
        word_order: WORD_ORDER_NOTE,
    })
}
