//! Dense Cayley-table groups.
//!
//! Every group is stored as a full multiplication table over element indices
//! `0..order`, with the identity always at index 0. Permutation and product
//! inputs are converted to this form at construction time.

mod classes;
mod perm;
mod product;
mod quotient;
mod subgroup;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub use classes::ConjugacyClass;
pub use perm::PermutationGenSet;
pub use product::{direct_product, semidirect_product};
pub use subgroup::Subgroup;

/// Element index inside a [`FiniteGroup`].
pub type Elem = usize;

/// Size limits applied while building groups and enumerating subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order for which the full subgroup lattice is computed.
    pub lattice_cap: usize,
    /// Largest group a permutation closure may enumerate.
    pub closure_cap: usize,
    /// Largest order for which associativity is fully verified; above it
    /// only random triples are sampled.
    pub associativity_full_check_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { lattice_cap: 200, closure_cap: 5000, associativity_full_check_cap: 512 }
    }
}

/// Random triples tested when a table is above the full associativity cap.
const SPOT_CHECK_TRIPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<Elem>,
    element_orders: Vec<usize>,
    generators: Vec<Elem>,
    label: Option<String>,
}

impl FiniteGroup {
    /// Validates a Cayley table given as rows, using the default [`Limits`].
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_cayley_with(rows, &Limits::default())
    }

    pub fn from_cayley_with(rows: &[Vec<usize>], limits: &Limits) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        let mut flat = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: r, len: row.len(), expected: n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::NotClosed { row: r, col: c, value: v, order: n });
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(n, flat, limits)
    }

    /// Builds from a row-major table whose entries are already known to be in
    /// range. Relabels the identity to index 0 and validates the remaining
    /// axioms.
    pub(crate) fn from_flat(n: usize, mut table: Vec<u32>, limits: &Limits) -> Result<Self> {
        debug_assert_eq!(table.len(), n * n);
        if let Some((i, &v)) = table.iter().enumerate().find(|(_, &v)| v as usize >= n) {
            return Err(Error::NotClosed { row: i / n, col: i % n, value: v as usize, order: n });
        }
        let identity = (0..n)
            .find(|&e| {
                (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x)
            })
            .ok_or(Error::NoIdentity)?;
        if identity != 0 {
            table = relabel_swap(n, &table, 0, identity);
        }

        let mut inverse = vec![0; n];
        for x in 0..n {
            let row = &table[x * n..(x + 1) * n];
            let y = row
                .iter()
                .position(|&v| v == 0)
                .filter(|&y| table[y * n + x] == 0)
                .ok_or(Error::NoInverse { element: x })?;
            inverse[x] = y;
        }

        let generators = greedy_generators(n, &table);
        if n <= limits.associativity_full_check_cap {
            check_associativity_light(n, &table, &generators)?;
        } else {
            spot_check_associativity(n, &table)?;
        }

        let mut element_orders = vec![0; n];
        for x in 0..n {
            let mut acc = x;
            let mut ord = 1;
            while acc != 0 {
                acc = table[acc * n + x] as usize;
                ord += 1;
                if ord > n {
                    // Only reachable for a non-associative table that slipped
                    // past the spot check.
                    return Err(Error::NoInverse { element: x });
                }
            }
            element_orders[x] = ord;
        }

        Ok(Self { order: n, table, inverse, element_orders, generators, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> &str {
        self.label.as_deref().unwrap_or("unnamed")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    #[inline]
    pub fn element_order(&self, a: Elem) -> usize {
        self.element_orders[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// A generating set chosen greedily by smallest index.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn check_element(&self, x: Elem) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: x, order: self.order })
        }
    }

    /// The table as rows of element indices.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// `x^k` by square-and-multiply.
    pub fn power(&self, x: Elem, k: u64) -> Elem {
        let mut result = 0;
        let mut base = x;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders.contains(&self.order)
    }

    /// The only isomorphism test needed: cyclic of order 4.
    pub fn is_cyclic_of_order_4(&self) -> bool {
        self.order == 4 && self.is_cyclic()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.element_orders.iter().fold(1u64, |acc, &o| crate::arith::lcm(acc, o as u64))
    }
}

fn relabel_swap(n: usize, table: &[u32], a: usize, b: usize) -> Vec<u32> {
    let sigma = |x: usize| -> usize {
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    };
    let mut out = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            out[sigma(x) * n + sigma(y)] = sigma(table[x * n + y] as usize) as u32;
        }
    }
    out
}

/// Elements reachable from the identity by right multiplication with `gens`.
fn right_closure(n: usize, table: &[u32], gens: &[Elem]) -> BitSet {
    let mut seen = BitSet::new(n);
    seen.insert(0);
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = table[x * n + g] as usize;
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    seen
}

fn greedy_generators(n: usize, table: &[u32]) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut reached = right_closure(n, table, &gens);
    while reached.count() < n {
        let next = (0..n).find(|&x| !reached.contains(x)).expect("unreached element");
        gens.push(next);
        reached = right_closure(n, table, &gens);
    }
    gens
}

/// Light's test: the elements `a` with `(xa)y = x(ay)` for all `x, y` form a
/// submagma, so it suffices to test `a` over a set whose right-multiplication
/// closure from the identity is everything.
fn check_associativity_light(n: usize, table: &[u32], gens: &[Elem]) -> Result<()> {
    let t = |a: usize, b: usize| table[a * n + b] as usize;
    for &a in gens {
        for x in 0..n {
            let xa = t(x, a);
            for y in 0..n {
                let left = t(xa, y);
                let right = t(x, t(a, y));
                if left != right {
                    return Err(Error::NotAssociative { a: x, b: a, c: y, left, right });
                }
            }
        }
    }
    Ok(())
}

fn spot_check_associativity(n: usize, table: &[u32]) -> Result<()> {
    let t = |a: usize, b: usize| table[a * n + b] as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e6f74706f77);
    for _ in 0..SPOT_CHECK_TRIPLES {
        let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        let left = t(t(a, b), c);
        let right = t(a, t(b, c));
        if left != right {
            return Err(Error::NotAssociative { a, b, c, left, right });
        }
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn cyclic_rows(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_cayley(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.element_orders(), &[1]);
        assert!(g.generators().is_empty());
    }

    #[test]
    fn cyclic_four_orders() {
        let g = FiniteGroup::from_cayley(&cyclic_rows(4)).unwrap();
        assert_eq!(g.element_orders(), &[1, 4, 2, 4]);
        assert_eq!(g.inv(1), 3);
        assert_eq!(g.power(1, 2), 2);
        assert_eq!(g.power(1, 4), 0);
        assert_eq!(g.power(3, 0), 0);
        assert!(g.is_cyclic_of_order_4());
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // Z/3 with the identity stored at index 2: x*y = (x + y + 1) mod 3.
        let rows: Vec<Vec<usize>> =
            (0..3).map(|i| (0..3).map(|j| (i + j + 1) % 3).collect()).collect();
        let g = FiniteGroup::from_cayley(&rows).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 0), 1);
        assert_eq!(g.element_orders(), &[1, 3, 3]);
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let mut rows = cyclic_rows(3);
        rows[1][2] = 7;
        assert_eq!(
            FiniteGroup::from_cayley(&rows),
            Err(Error::NotClosed { row: 1, col: 2, value: 7, order: 3 })
        );
    }

    #[test]
    fn rejects_ragged_table() {
        let rows = vec![vec![0, 1], vec![1]];
        assert!(matches!(FiniteGroup::from_cayley(&rows), Err(Error::NotSquare { row: 1, .. })));
    }

    #[test]
    fn rejects_missing_identity() {
        let rows = vec![vec![1, 1], vec![1, 1]];
        assert_eq!(FiniteGroup::from_cayley(&rows), Err(Error::NoIdentity));
    }

    #[test]
    fn rejects_missing_inverse() {
        // {0,1} with 1*1 = 1: identity 0, but 1 has no inverse.
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert_eq!(FiniteGroup::from_cayley(&rows), Err(Error::NoInverse { element: 1 }));
    }

    /// Z/6 with two entries of row 1 swapped: identity and inverses survive,
    /// associativity does not.
    pub(crate) fn broken_z6() -> Vec<Vec<usize>> {
        let mut rows = cyclic_rows(6);
        rows[1][2] = 4;
        rows[1][3] = 3;
        rows
    }

    #[test]
    fn rejects_non_associative_loop() {
        let rows = broken_z6();
        let t = |a: usize, b: usize| rows[a][b];
        // Brute-force oracle: the table really has a bad triple.
        let bad: Vec<_> = (0..6)
            .flat_map(|a| (0..6).flat_map(move |b| (0..6).map(move |c| (a, b, c))))
            .filter(|&(a, b, c)| t(t(a, b), c) != t(a, t(b, c)))
            .collect();
        assert!(!bad.is_empty());
        match FiniteGroup::from_cayley(&rows) {
            Err(Error::NotAssociative { a, b, c, left, right }) => {
                assert!(bad.contains(&(a, b, c)));
                assert_eq!(left, t(t(a, b), c));
                assert_eq!(right, t(a, t(b, c)));
            }
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn spot_check_path_accepts_large_cyclic() {
        let limits = Limits { associativity_full_check_cap: 8, ..Limits::default() };
        let g = FiniteGroup::from_cayley_with(&cyclic_rows(20), &limits).unwrap();
        assert_eq!(g.order(), 20);
        assert_eq!(g.exponent(), 20);
    }

    #[test]
    fn lagrange_for_element_orders() {
        let g = FiniteGroup::from_cayley(&cyclic_rows(12)).unwrap();
        assert!(g.elements().all(|x| 12 % g.element_order(x) == 0));
    }
}
