use std::fmt;
use std::ops::Mul;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree - 1}` stored as its image sequence.
///
/// Ordering is lexicographic on the image sequence. Products compose right to
/// left: `(p * q)(x) = p(q(x))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        assert!(a < degree && b < degree && a != b);
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} exceeds degree {degree}"
                    )));
                }
                if touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears in more than one cycle"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Extends with fixed points up to `degree`.
    pub fn padded(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree()..degree);
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// `self * other * self⁻¹`
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        self.compose(other).compose(&self.inverse())
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(x, &px)| other.images[px] == self.images[other.images[x]])
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
