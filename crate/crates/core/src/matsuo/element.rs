use std::ops::{Add, Index, Sub};

use crate::rational::Rational;

/// A vector in an algebra, written in its distinguished basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct AlgebraElement {
    coeffs: Vec<Rational>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        AlgebraElement {
            coeffs: vec![Rational::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coeffs[i] = Rational::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn from_terms(dim: usize, terms: &[(usize, Rational)]) -> Self {
        let mut e = Self::zero(dim);
        for (i, c) in terms {
            e.coeffs[*i] += c;
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Index<usize> for AlgebraElement {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.dim(), rhs.dim());
        AlgebraElement {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.dim(), rhs.dim());
        AlgebraElement {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}
