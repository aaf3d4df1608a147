use crate::error::{Error, Result};

use super::permutation::Permutation;
use super::system::TranspositionSystem;

/// Positive roots of type `A_n` in simple-root coordinates.
///
/// The first `n` roots are the simple roots `α_1, .., α_n`; the remaining ones
/// follow by increasing height, then by starting index. Every positive root is
/// `α_a + .. + α_b` for some `1 <= a <= b <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemA {
    rank: usize,
    positive_roots: Vec<Vec<i64>>,
}

impl RootSystemA {
    pub fn new(rank: usize) -> Result<Self> {
        if rank < 1 {
            return Err(Error::InvalidRank(rank));
        }
        let mut positive_roots = Vec::with_capacity(rank * (rank + 1) / 2);
        for height in 1..=rank {
            for start in 0..=rank - height {
                let mut root = vec![0; rank];
                root[start..start + height].fill(1);
                positive_roots.push(root);
            }
        }
        Ok(RootSystemA {
            rank,
            positive_roots,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots[..self.rank]
    }

    /// Cartan matrix entry `(α_i | α_j)`, zero-based.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        match i.abs_diff(j) {
            0 => 2,
            1 => -1,
            _ => 0,
        }
    }

    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut total = 0;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                total += x * y * self.cartan(i, j);
            }
        }
        total
    }

    /// The root as `e_p - e_q` in `Z^{n+1}`, returned as `(p, q)` with `p < q`.
    pub fn ambient_pair(&self, root: &[i64]) -> (usize, usize) {
        let start = root.iter().position(|&x| x != 0).expect("nonzero root");
        let end = root.iter().rposition(|&x| x != 0).unwrap();
        (start, end + 1)
    }

    /// The reflection `r_α` acting on the `n + 1` ambient coordinates.
    pub fn reflection(&self, root: &[i64]) -> Permutation {
        let (p, q) = self.ambient_pair(root);
        Permutation::transposition(self.rank + 1, p, q)
    }
}

/// The Weyl group of type `A_n` realized as `S_{n+1}` acting on coordinates.
#[derive(Clone, Debug)]
pub struct WeylA {
    pub roots: RootSystemA,
    pub system: TranspositionSystem,
    /// `root_to_involution[a]` is the involution index of `r_α` for the `a`-th positive root.
    pub root_to_involution: Vec<usize>,
}

pub fn build_weyl_a(n: usize) -> Result<WeylA> {
    let roots = RootSystemA::new(n)?;
    let generators = roots.simple_roots().iter().map(|r| roots.reflection(r)).collect();
    let system = TranspositionSystem::from_generators(generators)?;
    let root_to_involution = roots
        .positive_roots()
        .iter()
        .map(|r| {
            system.index_of(&roots.reflection(r)).ok_or_else(|| {
                Error::InternalInconsistency(format!("reflection of {r:?} missing from the closure"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeylA {
        roots,
        system,
        root_to_involution,
    })
}
