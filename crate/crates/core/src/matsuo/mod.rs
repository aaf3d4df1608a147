//! Matsuo algebras `B_{α,β}(G, I)` of 3-transposition groups.
//!
//! The basis is `{x^i : i ∈ I}` in the order of
//! [`TranspositionSystem::involutions`]. Products and the form are
//!
//! ```text
//! x^i x^j = 2 x^i                          i = j
//!         = α/2 (x^i + x^j - x^{i∘j})      i ~ j
//!         = 0                              otherwise
//! (x^i|x^j) = β/2, αβ/8, 0                 in the same three cases
//! ```

mod element;
mod form;

use std::collections::HashSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::permgroups::{Regularity, TranspositionSystem};
use crate::rational::Rational;

pub use element::AlgebraElement;
pub use form::{form_report, nondegenerate_quotient, FormAlgebra, FormReport, QuotientAlgebra};

/// Dimensions up to this size get an exhaustive invariance check.
pub const EXHAUSTIVE_CHECK_MAX_DIM: usize = 64;
pub const DEFAULT_SAMPLE_TRIPLES: usize = 1000;
pub const DEFAULT_SAMPLE_SEED: u64 = 0x5eed_3a11;

/// How the structure constants were validated at construction.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct InvarianceCheck {
    pub exhaustive: bool,
    pub triples_checked: usize,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct MatsuoAlgebra {
    system: Arc<TranspositionSystem>,
    alpha: Rational,
    beta: Rational,
    gram: Matrix,
    validation: InvarianceCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointEigenspaces {
    /// Eigenvalue 2: spanned by `x^i` alone.
    pub unit: Vec<AlgebraElement>,
    pub zero: Vec<AlgebraElement>,
    pub alpha: Vec<AlgebraElement>,
}

impl AdjointEigenspaces {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.unit.len(), self.zero.len(), self.alpha.len())
    }
}

/// One indecomposable ideal summand, with its involution indices in the parent.
#[derive(Clone, Debug)]
pub struct IdealSummand {
    pub indices: Vec<usize>,
    pub algebra: MatsuoAlgebra,
}

impl MatsuoAlgebra {
    pub fn build(system: Arc<TranspositionSystem>, alpha: Rational, beta: Rational) -> Result<Self> {
        Self::build_with_seed(system, alpha, beta, DEFAULT_SAMPLE_SEED)
    }

    /// `seed` drives the sampled invariance check used above
    /// [`EXHAUSTIVE_CHECK_MAX_DIM`].
    pub fn build_with_seed(
        system: Arc<TranspositionSystem>,
        alpha: Rational,
        beta: Rational,
        seed: u64,
    ) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidParameter("alpha must be nonzero".into()));
        }
        if beta.is_zero() {
            return Err(Error::InvalidParameter("beta must be nonzero".into()));
        }
        if system.is_empty() {
            return Err(Error::InvalidParameter("empty involution set".into()));
        }
        system.require_3transposition()?;
        let n = system.len();
        let diag = &beta / Rational::from_integer(2);
        let off = &alpha * &beta / Rational::from_integer(8);
        let gram = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                diag.clone()
            } else if system.adjacent(i, j) {
                off.clone()
            } else {
                Rational::zero()
            }
        });
        let mut algebra = MatsuoAlgebra {
            system,
            alpha,
            beta,
            gram,
            validation: InvarianceCheck {
                exhaustive: false,
                triples_checked: 0,
                seed: None,
            },
        };
        algebra.validation = algebra.validate(seed)?;
        Ok(algebra)
    }

    fn validate(&self, seed: u64) -> Result<InvarianceCheck> {
        let n = self.dim();
        let products: Vec<Vec<(usize, Rational)>> = (0..n * n)
            .map(|ab| self.basis_product(ab / n, ab % n))
            .collect();
        for a in 0..n {
            for b in 0..a {
                let mut left = products[a * n + b].clone();
                let mut right = products[b * n + a].clone();
                left.sort();
                right.sort();
                if left != right {
                    return Err(Error::InternalInconsistency(format!(
                        "product of basis vectors {a} and {b} is not commutative"
                    )));
                }
            }
        }
        let pair = |ab: &[(usize, Rational)], c: usize| -> Rational {
            ab.iter().map(|(t, coef)| coef * self.gram.get(*t, c)).sum()
        };
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if pair(&products[a * n + b], c) != pair(&products[b * n + c], a) {
                return Err(Error::InternalInconsistency(format!(
                    "form is not invariant on basis triple ({a}, {b}, {c})"
                )));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_CHECK_MAX_DIM {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
            Ok(InvarianceCheck {
                exhaustive: true,
                triples_checked: n * n * n,
                seed: None,
            })
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..DEFAULT_SAMPLE_TRIPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
            Ok(InvarianceCheck {
                exhaustive: false,
                triples_checked: DEFAULT_SAMPLE_TRIPLES,
                seed: Some(seed),
            })
        }
    }

    pub fn system(&self) -> &TranspositionSystem {
        &self.system
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn validation(&self) -> &InvarianceCheck {
        &self.validation
    }

    pub fn basis(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.dim(), i)
    }

    /// `Σ_i x^i`
    pub fn sum_of_basis(&self) -> AlgebraElement {
        AlgebraElement::from_coeffs(vec![Rational::one(); self.dim()])
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.dim() {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: self.dim(),
            });
        }
        Ok(())
    }

    /// Image of basis index `j` under `ρ_i`.
    pub fn rho_index(&self, i: usize, j: usize) -> usize {
        self.system.circ(i, j).unwrap_or(j)
    }

    /// `ρ_i x^j = x^{i∘j}` for `i ~ j`, `x^j` otherwise, extended linearly.
    pub fn rho(&self, i: usize, v: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_index(i)?;
        self.check_shape(v)?;
        let mut out = vec![Rational::zero(); self.dim()];
        for (j, c) in v.support() {
            out[self.rho_index(i, j)] = c.clone();
        }
        Ok(AlgebraElement::from_coeffs(out))
    }

    /// Matrix of `ad(x^i)`: column `j` holds `x^i x^j`.
    pub fn adjoint_matrix(&self, i: usize) -> Result<Matrix> {
        self.check_index(i)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (t, c) in self.basis_product(i, j) {
                let v = m.get(t, j) + &c;
                m.set(t, j, v);
            }
        }
        Ok(m)
    }

    /// Eigenspaces of `ad(x^i)` for 2, 0 and α, checked against `ρ_i`:
    /// `ρ_i` must fix `x^i` and the 0-eigenspace and negate the α-eigenspace.
    pub fn adjoint_eigenspaces(&self, i: usize) -> Result<AdjointEigenspaces> {
        let two = Rational::from_integer(2);
        if self.alpha.is_zero() || self.alpha == two {
            return Err(Error::DegenerateParameter(self.alpha.to_string()));
        }
        let ad = self.adjoint_matrix(i)?;
        let n = self.dim();
        let eigenspace = |lambda: &Rational| -> Vec<AlgebraElement> {
            let shifted = Matrix::from_fn(n, n, |r, c| {
                if r == c {
                    ad.get(r, c) - lambda
                } else {
                    ad.get(r, c).clone()
                }
            });
            linalg::nullspace(&shifted)
                .into_iter()
                .map(AlgebraElement::from_coeffs)
                .collect()
        };
        let spaces = AdjointEigenspaces {
            unit: eigenspace(&two),
            zero: eigenspace(&Rational::zero()),
            alpha: eigenspace(&self.alpha),
        };
        let (d2, d0, da) = spaces.dims();
        if d2 + d0 + da != n {
            return Err(Error::InternalInconsistency(format!(
                "eigenspace dimensions {d2} + {d0} + {da} do not add up to {n}"
            )));
        }
        let xi = self.basis(i);
        if d2 != 1 || spaces.unit[0] != xi {
            return Err(Error::InternalInconsistency("2-eigenspace is not spanned by x^i".into()));
        }
        for v in &spaces.zero {
            if self.rho(i, v)? != *v {
                return Err(Error::InternalInconsistency("rho_i does not fix the 0-eigenspace".into()));
            }
        }
        for v in &spaces.alpha {
            let negated = v.scale(&Rational::from_integer(-1));
            if self.rho(i, v)? != negated {
                return Err(Error::InternalInconsistency(
                    "rho_i does not negate the alpha-eigenspace".into(),
                ));
            }
        }
        Ok(spaces)
    }

    /// Common vertex degree `k` of an indecomposable system.
    pub fn k(&self) -> Result<usize> {
        let components = self.system.connected_components().len();
        if components != 1 {
            return Err(Error::Decomposable(components));
        }
        match self.system.regularity() {
            Regularity::Regular(k) => Ok(k),
            Regularity::PerComponent(_) => Err(Error::InternalInconsistency(
                "connected system is not regular".into(),
            )),
        }
    }

    /// `4 / (kα + 4)`
    pub fn conformal_coefficient(&self) -> Result<Rational> {
        let k = Rational::from_integer(self.k()? as i64);
        let denom = k * &self.alpha + Rational::from_integer(4);
        if denom.is_zero() {
            return Err(Error::SingularParameter);
        }
        Ok(Rational::from_integer(4) / denom)
    }

    /// `ω = 4/(kα+4) Σ x^i`, checked to act as twice the unit.
    pub fn conformal_vector(&self) -> Result<AlgebraElement> {
        let omega = self.sum_of_basis().scale(&self.conformal_coefficient()?);
        let two = Rational::from_integer(2);
        for j in 0..self.dim() {
            let x = self.basis(j);
            if self.multiply(&omega, &x)? != x.scale(&two) {
                return Err(Error::InternalInconsistency(format!(
                    "omega does not act as 2 on basis vector {j}"
                )));
            }
        }
        Ok(omega)
    }

    /// `2(ω|ω)`, cross-checked against `4β|I|/(kα+4)`.
    pub fn central_charge(&self) -> Result<Rational> {
        let omega = self.conformal_vector()?;
        let c = Rational::from_integer(2) * self.form(&omega, &omega)?;
        let k = Rational::from_integer(self.k()? as i64);
        let closed = Rational::from_integer(4) * &self.beta * Rational::from_integer(self.dim() as i64)
            / (k * &self.alpha + Rational::from_integer(4));
        if c != closed {
            return Err(Error::InternalInconsistency(format!(
                "central charge {c} disagrees with closed form {closed}"
            )));
        }
        Ok(c)
    }

    pub fn form_report(&self) -> Result<FormReport> {
        form_report(self)
    }

    pub fn nondegenerate_quotient(&self) -> Result<QuotientAlgebra> {
        nondegenerate_quotient(self)
    }

    /// One summand per graph component, checked to be pairwise orthogonal
    /// and mutually annihilating.
    pub fn decompose(&self) -> Result<Vec<IdealSummand>> {
        let components = self.system.connected_components();
        for (ci, a_part) in components.iter().enumerate() {
            for b_part in &components[ci + 1..] {
                for &a in a_part {
                    for &b in b_part {
                        if !self.gram.get(a, b).is_zero() || !self.basis_product(a, b).is_empty() {
                            return Err(Error::InternalInconsistency(format!(
                                "components interact on basis pair ({a}, {b})"
                            )));
                        }
                    }
                }
            }
        }
        components
            .into_iter()
            .map(|indices| {
                let sub = self.system.restrict(&indices)?;
                let algebra = MatsuoAlgebra::build(Arc::new(sub), self.alpha.clone(), self.beta.clone())?;
                Ok(IdealSummand { indices, algebra })
            })
            .collect()
    }

    /// Whether `ρ: G → Aut(B)` is injective, computed from the action of every
    /// group element on the basis and compared with center-freeness.
    pub fn rho_is_faithful(&self, budget: usize) -> Result<bool> {
        let elements = self.system.enumerate_group(budget)?;
        let inv = self.system.involutions();
        let mut actions: HashSet<Vec<usize>> = HashSet::with_capacity(elements.len());
        for g in &elements {
            let action = inv
                .iter()
                .map(|x| {
                    self.system.index_of(&g.conjugate(x)).ok_or_else(|| {
                        Error::InternalInconsistency(format!("{x} conjugated by {g} left the class"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            actions.insert(action);
        }
        let faithful = actions.len() == elements.len();
        let nontrivial = self.system.connected_components().iter().all(|c| c.len() > 1);
        let expected = nontrivial && self.system.is_center_free(budget)?;
        if faithful != expected {
            return Err(Error::InternalInconsistency(format!(
                "rho injective = {faithful}, but non-trivial and center-free = {expected}"
            )));
        }
        Ok(faithful)
    }
}

impl FormAlgebra for MatsuoAlgebra {
    fn dim(&self) -> usize {
        self.system.len()
    }

    fn gram(&self) -> &Matrix {
        &self.gram
    }

    fn basis_product(&self, a: usize, b: usize) -> Vec<(usize, Rational)> {
        if a == b {
            return vec![(a, Rational::from_integer(2))];
        }
        match self.system.circ(a, b) {
            Some(c) => {
                let half = &self.alpha / Rational::from_integer(2);
                vec![(a, half.clone()), (b, half.clone()), (c, -half)]
            }
            None => Vec::new(),
        }
    }
}
