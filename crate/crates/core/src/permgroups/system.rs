use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};

use super::permutation::Permutation;

pub const DEFAULT_GROUP_BUDGET: usize = 1_000_000;

/// A permutation group together with a conjugation-closed set of involutions
/// and the graph on them where `i ~ j` iff `i` and `j` do not commute.
#[derive(Clone, Debug)]
pub struct TranspositionSystem {
    degree: usize,
    generators: Vec<Permutation>,
    involutions: Vec<Permutation>,
    adjacency: Vec<Vec<usize>>,
    // circ[i * n + j] = index of i j i for adjacent pairs
    circ: Vec<Option<usize>>,
}

/// Smallest conjugation-closed set of involutions containing `generators`,
/// sorted lexicographically by image sequence. Generators of smaller degree
/// are padded with fixed points.
pub fn close_under_conjugation(generators: &[Permutation]) -> Result<Vec<Permutation>> {
    let degree = generators.iter().map(Permutation::degree).max().unwrap_or(0);
    let mut set: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue: VecDeque<Permutation> = VecDeque::new();
    for g in generators {
        if g.order() != 2 {
            return Err(Error::InvalidGenerator(g.to_string()));
        }
        let g = g.padded(degree);
        if set.insert(g.clone()) {
            queue.push_back(g);
        }
    }
    while let Some(new) = queue.pop_front() {
        let current: Vec<Permutation> = set.iter().cloned().collect();
        for other in &current {
            for image in [new.conjugate(other), other.conjugate(&new)] {
                if set.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
    }
    Ok(set.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTranspositionReport {
    pub ok: bool,
    /// Indices into the involution list and the order of their product.
    pub offending_pair: Option<(usize, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular(usize),
    /// Per connected component: its involution indices and common degree,
    /// `None` when the degrees inside a component differ.
    PerComponent(Vec<(Vec<usize>, Option<usize>)>),
}

impl TranspositionSystem {
    /// Closes `generators` under conjugation and builds the graph.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Self> {
        let involutions = close_under_conjugation(&generators)?;
        let degree = involutions.first().map_or(0, Permutation::degree);
        let generators = generators.iter().map(|g| g.padded(degree)).collect();
        Ok(Self::from_closed(degree, generators, involutions))
    }

    /// Like [`from_generators`](Self::from_generators) with an explicit degree.
    pub fn with_degree(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() > degree) {
            return Err(Error::InvalidPermutation(format!(
                "{g} moves points beyond degree {degree}"
            )));
        }
        let padded: Vec<Permutation> = generators.iter().map(|g| g.padded(degree)).collect();
        let involutions = close_under_conjugation(&padded)?;
        Ok(Self::from_closed(degree, padded, involutions))
    }

    fn from_closed(degree: usize, generators: Vec<Permutation>, involutions: Vec<Permutation>) -> Self {
        let n = involutions.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut circ = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j && !involutions[i].commutes_with(&involutions[j]) {
                    adjacency[i].push(j);
                    let image = involutions[i].conjugate(&involutions[j]);
                    let k = involutions
                        .binary_search(&image)
                        .expect("involution set is conjugation closed");
                    circ[i * n + j] = Some(k);
                }
            }
        }
        TranspositionSystem {
            degree,
            generators,
            involutions,
            adjacency,
            circ,
        }
    }

    /// The symmetric group on `m` points with all transpositions.
    pub fn symmetric(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidRank(m));
        }
        let generators = (1..m).map(|i| Permutation::transposition(m, i - 1, i)).collect();
        Self::from_generators(generators)
    }

    /// Sub-system on a conjugation-closed subset of the involutions.
    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        let generators: Vec<Permutation> = indices.iter().map(|&i| self.involutions[i].clone()).collect();
        let involutions = close_under_conjugation(&generators)?;
        if involutions.len() != indices.len() {
            return Err(Error::InternalInconsistency(
                "restriction to a subset that is not conjugation closed".into(),
            ));
        }
        Ok(Self::from_closed(self.degree, generators, involutions))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn involutions(&self) -> &[Permutation] {
        &self.involutions
    }

    pub fn len(&self) -> usize {
        self.involutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.involutions.is_empty()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.involutions.binary_search(p).ok()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.circ[i * self.len() + j].is_some()
    }

    /// `i ∘ j = i j i` for adjacent `i`, `j`.
    pub fn circ(&self, i: usize, j: usize) -> Option<usize> {
        self.circ[i * self.len() + j]
    }

    pub fn verify_3transposition(&self) -> ThreeTranspositionReport {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                let order = (&self.involutions[i] * &self.involutions[j]).order();
                if order > 3 {
                    return ThreeTranspositionReport {
                        ok: false,
                        offending_pair: Some((i, j, order)),
                    };
                }
            }
        }
        ThreeTranspositionReport {
            ok: true,
            offending_pair: None,
        }
    }

    /// Errors unless every product of two involutions has order at most 3.
    pub fn require_3transposition(&self) -> Result<()> {
        match self.verify_3transposition().offending_pair {
            None => Ok(()),
            Some((i, j, order)) => Err(Error::NotThreeTransposition {
                left: self.involutions[i].to_string(),
                right: self.involutions[j].to_string(),
                order,
            }),
        }
    }

    /// Connected components of the graph, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_indecomposable(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub fn regularity(&self) -> Regularity {
        let per: Vec<(Vec<usize>, Option<usize>)> = self
            .connected_components()
            .into_iter()
            .map(|c| {
                let k = self.adjacency[c[0]].len();
                let uniform = c.iter().all(|&i| self.adjacency[i].len() == k);
                (c, uniform.then_some(k))
            })
            .collect();
        match per.as_slice() {
            [(_, Some(k))] => Regularity::Regular(*k),
            _ if !per.is_empty() && per.iter().all(|(_, k)| k.is_some() && *k == per[0].1) => {
                Regularity::Regular(per[0].1.unwrap())
            }
            _ => Regularity::PerComponent(per),
        }
    }

    /// Generators of the group: the supplied generators, or the involutions
    /// when none were kept.
    fn group_generators(&self) -> &[Permutation] {
        if self.generators.is_empty() {
            &self.involutions
        } else {
            &self.generators
        }
    }

    /// All elements of the generated group by breadth-first closure.
    pub fn enumerate_group(&self, budget: usize) -> Result<Vec<Permutation>> {
        let gens = self.group_generators();
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut order = vec![id.clone()];
        seen.insert(id);
        let mut head = 0;
        while head < order.len() {
            let g = order[head].clone();
            head += 1;
            for s in gens {
                let h = &g * s;
                if !seen.contains(&h) {
                    if order.len() >= budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                    seen.insert(h.clone());
                    order.push(h);
                }
            }
        }
        Ok(order)
    }

    /// True iff no non-identity group element commutes with every generator.
    pub fn is_center_free(&self, budget: usize) -> Result<bool> {
        let gens = self.group_generators();
        Ok(self
            .enumerate_group(budget)?
            .iter()
            .filter(|g| !g.is_identity())
            .all(|g| gens.iter().any(|s| !g.commutes_with(s))))
    }
}
