use std::collections::HashMap;

use super::{FiniteGroup, Limits};
use crate::error::{Error, Result};

/// Generators of a permutation group on `{0, .., degree - 1}`, each given as
/// an image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGenSet {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

impl PermutationGenSet {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameters("degree must be positive".into()));
        }
        for (index, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = g.len() == degree
                && g.iter().all(|&i| i < degree && !std::mem::replace(&mut seen[i], true));
            if !ok {
                return Err(Error::NotAPermutation { index, degree });
            }
        }
        Ok(Self { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `gens` breadth-first and returns its
    /// Cayley table. Element 0 is the identity permutation, and elements are
    /// numbered in discovery order. Products compose left to right:
    /// `(pq)(i) = q(p(i))`.
    pub fn from_permutations(gens: &PermutationGenSet, limits: &Limits) -> Result<Self> {
        let d = gens.degree;
        let perms: Vec<Vec<u32>> =
            gens.generators.iter().map(|g| g.iter().map(|&i| i as u32).collect()).collect();

        let identity: Vec<u32> = (0..d as u32).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(identity, 0)]);
        // parent[j] = (i, s) with element j = element i * generator s.
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut right_gen: Vec<Vec<usize>> = Vec::new();

        let mut next = 0;
        while next < elements.len() {
            let mut row = Vec::with_capacity(perms.len());
            for (s, g) in perms.iter().enumerate() {
                let prod: Vec<u32> = elements[next].iter().map(|&i| g[i as usize]).collect();
                let j = match index.get(&prod) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        if j >= limits.closure_cap {
                            return Err(Error::CapExceeded { cap: limits.closure_cap });
                        }
                        index.insert(prod.clone(), j);
                        elements.push(prod);
                        parent.push((next, s));
                        j
                    }
                };
                row.push(j);
            }
            right_gen.push(row);
            next += 1;
        }

        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            table[x * n] = x as u32;
            for j in 1..n {
                let (p, s) = parent[j];
                table[x * n + j] = right_gen[table[x * n + p] as usize][s] as u32;
            }
        }
        FiniteGroup::from_flat(n, table, limits)
    }
}
