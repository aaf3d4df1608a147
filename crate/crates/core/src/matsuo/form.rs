//! Commutative algebras with a symmetric bilinear form, their radical and the
//! non-degenerate quotient.

use crate::error::{Error, Result};
use crate::linalg::{self, EchelonBasis, Matrix, Signature};
use crate::rational::Rational;

use super::element::AlgebraElement;

/// An algebra given by basis products and a Gram matrix.
pub trait FormAlgebra {
    fn dim(&self) -> usize;

    fn gram(&self) -> &Matrix;

    /// Sparse expansion of `b_a * b_b`.
    fn basis_product(&self, a: usize, b: usize) -> Vec<(usize, Rational)>;

    fn multiply(&self, u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_shape(u)?;
        self.check_shape(v)?;
        let mut out = AlgebraElement::zero(self.dim()).into_coeffs();
        for (a, ua) in u.support() {
            for (b, vb) in v.support() {
                let w = ua * vb;
                for (t, c) in self.basis_product(a, b) {
                    out[t] += &w * &c;
                }
            }
        }
        Ok(AlgebraElement::from_coeffs(out))
    }

    fn form(&self, u: &AlgebraElement, v: &AlgebraElement) -> Result<Rational> {
        self.check_shape(u)?;
        self.check_shape(v)?;
        let gv = self.gram().mul_vec(v.coeffs());
        Ok(u.coeffs().iter().zip(&gv).map(|(a, b)| a * b).sum())
    }

    fn check_shape(&self, u: &AlgebraElement) -> Result<()> {
        if u.dim() != self.dim() {
            return Err(Error::ShapeError {
                expected: self.dim(),
                found: u.dim(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    pub rank: usize,
    pub nullity: usize,
    pub signature: Signature,
    pub radical_basis: Vec<AlgebraElement>,
}

fn in_radical(gram: &Matrix, v: &[Rational]) -> bool {
    let support: Vec<(usize, &Rational)> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    (0..gram.rows()).all(|row| {
        support
            .iter()
            .map(|&(t, c)| gram.get(row, t) * c)
            .sum::<Rational>()
            .is_zero()
    })
}

/// Rank, nullity, signature and radical of the form, with the radical checked
/// to be an ideal.
pub fn form_report<A: FormAlgebra + ?Sized>(algebra: &A) -> Result<FormReport> {
    let gram = algebra.gram();
    let dim = algebra.dim();
    let signature = linalg::signature(gram);
    let radical_basis: Vec<AlgebraElement> = linalg::nullspace(gram)
        .into_iter()
        .map(AlgebraElement::from_coeffs)
        .collect();
    let nullity = radical_basis.len();
    if signature.zero != nullity {
        return Err(Error::InternalInconsistency(format!(
            "diagonalization found {} zeros but the nullspace has dimension {nullity}",
            signature.zero
        )));
    }
    for r in &radical_basis {
        if !in_radical(gram, r.coeffs()) {
            return Err(Error::InternalInconsistency("radical vector pairs nontrivially".into()));
        }
        for x in 0..dim {
            let product = algebra.multiply(&AlgebraElement::basis(dim, x), r)?;
            if !in_radical(gram, product.coeffs()) {
                return Err(Error::InternalInconsistency(format!(
                    "radical is not an ideal: basis vector {x} times a radical vector leaves it"
                )));
            }
        }
    }
    Ok(FormReport {
        rank: dim - nullity,
        nullity,
        signature,
        radical_basis,
    })
}

/// The quotient of an algebra by the radical of its form.
///
/// Its basis is the image of the parent basis vectors in `representatives`
/// (the non-pivot columns of the radical in echelon form).
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    parent_dim: usize,
    representatives: Vec<usize>,
    radical: EchelonBasis,
    gram: Matrix,
    products: Vec<Vec<(usize, Rational)>>,
}

impl QuotientAlgebra {
    pub fn parent_dim(&self) -> usize {
        self.parent_dim
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// Coordinates of the image of a parent vector.
    pub fn project(&self, v: &AlgebraElement) -> Result<AlgebraElement> {
        if v.dim() != self.parent_dim {
            return Err(Error::ShapeError {
                expected: self.parent_dim,
                found: v.dim(),
            });
        }
        let reduced = self.radical.reduce(v.coeffs().to_vec());
        Ok(AlgebraElement::from_coeffs(
            self.representatives.iter().map(|&i| reduced[i].clone()).collect(),
        ))
    }
}

impl FormAlgebra for QuotientAlgebra {
    fn dim(&self) -> usize {
        self.representatives.len()
    }

    fn gram(&self) -> &Matrix {
        &self.gram
    }

    fn basis_product(&self, a: usize, b: usize) -> Vec<(usize, Rational)> {
        self.products[a * self.dim() + b].clone()
    }
}

pub fn nondegenerate_quotient<A: FormAlgebra + ?Sized>(algebra: &A) -> Result<QuotientAlgebra> {
    let report = form_report(algebra)?;
    let parent_dim = algebra.dim();
    let mut radical = EchelonBasis::new(parent_dim);
    for r in report.radical_basis {
        radical.insert(r.into_coeffs());
    }
    let mut is_pivot = vec![false; parent_dim];
    for p in radical.pivots() {
        is_pivot[p] = true;
    }
    let representatives: Vec<usize> = (0..parent_dim).filter(|&i| !is_pivot[i]).collect();
    let qdim = representatives.len();
    let gram = Matrix::from_fn(qdim, qdim, |i, j| {
        algebra.gram().get(representatives[i], representatives[j]).clone()
    });
    let mut products = Vec::with_capacity(qdim * qdim);
    for &a in &representatives {
        for &b in &representatives {
            let full = AlgebraElement::from_terms(parent_dim, &algebra.basis_product(a, b));
            let reduced = radical.reduce(full.into_coeffs());
            products.push(
                representatives
                    .iter()
                    .enumerate()
                    .filter(|(_, &r)| !reduced[r].is_zero())
                    .map(|(q, &r)| (q, reduced[r].clone()))
                    .collect(),
            );
        }
    }
    if linalg::rank(&gram) != qdim {
        return Err(Error::InternalInconsistency("induced form is degenerate".into()));
    }
    Ok(QuotientAlgebra {
        parent_dim,
        representatives,
        radical,
        gram,
        products,
    })
}
