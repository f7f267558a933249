use std::collections::HashMap;

use super::{Elem, FiniteGroup};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A subgroup of some parent [`FiniteGroup`], stored as a sorted member list
/// plus a membership mask over the parent's indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<Elem>,
    mask: BitSet,
}

impl Subgroup {
    pub(crate) fn from_mask(mask: BitSet) -> Self {
        Self { members: mask.to_vec(), mask }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_mask(BitSet::from_indices(g.order(), [0]))
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_mask(BitSet::from_indices(g.order(), g.elements()))
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn mask(&self) -> &BitSet {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        x < self.mask.universe_len() && self.mask.contains(x)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        self.mask.intersection_count(&other.mask)
    }
}

impl FiniteGroup {
    /// Closure of `seeds` under multiplication, starting from the identity.
    fn closure_mask(&self, start: BitSet, gens: &[Elem]) -> BitSet {
        let mut seen = start;
        let mut queue: Vec<Elem> = seen.to_vec();
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    /// The least subgroup containing `set`.
    pub fn subgroup_generated(&self, set: &[Elem]) -> Subgroup {
        let start = BitSet::from_indices(self.order(), [0]);
        Subgroup::from_mask(self.closure_mask(start, set))
    }

    pub fn cyclic_subgroup(&self, x: Elem) -> Subgroup {
        self.subgroup_generated(&[x])
    }

    pub fn centralizer(&self, x: Elem) -> Subgroup {
        let members = self.elements().filter(|&g| self.mul(g, x) == self.mul(x, g));
        Subgroup::from_mask(BitSet::from_indices(self.order(), members))
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generators();
        let members = self
            .elements()
            .filter(|&z| gens.iter().all(|&g| self.mul(g, z) == self.mul(z, g)));
        Subgroup::from_mask(BitSet::from_indices(self.order(), members))
    }

    /// `{g : g⁻¹Hg = H}`.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members = self
            .elements()
            .filter(|&g| h.members().iter().all(|&x| h.contains(self.conj(x, g))));
        Subgroup::from_mask(BitSet::from_indices(self.order(), members))
    }

    /// Finds a conjugation leaving `h`, if any.
    pub fn normality_violation(&self, h: &Subgroup) -> Option<(Elem, Elem)> {
        for &g in self.generators() {
            for &x in h.members() {
                if !h.contains(self.conj(x, g)) {
                    return Some((x, g));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.normality_violation(h).is_none()
    }

    pub fn check_normal(&self, h: &Subgroup) -> Result<()> {
        match self.normality_violation(h) {
            None => Ok(()),
            Some((element, by)) => Err(Error::NotNormal { element, by }),
        }
    }

    /// Every subgroup, ordered by (order, member list).
    ///
    /// Starts from the cyclic subgroups and repeatedly joins each known
    /// subgroup with each cyclic subgroup until no new subgroup appears.
    /// Every subgroup is a join of cyclic subgroups, so the fixpoint is the
    /// whole lattice.
    pub fn all_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order() > cap {
            return Err(Error::CapExceeded { cap });
        }
        let n = self.order();

        // One generator per distinct cyclic subgroup.
        let mut cyclic: Vec<(Elem, BitSet)> = Vec::new();
        let mut cyclic_seen: HashMap<BitSet, ()> = HashMap::new();
        for x in self.elements() {
            let m = self.cyclic_subgroup(x).mask;
            if cyclic_seen.insert(m.clone(), ()).is_none() {
                cyclic.push((x, m));
            }
        }

        let mut known: HashMap<BitSet, usize> = HashMap::new();
        // (mask, generators)
        let mut lattice: Vec<(BitSet, Vec<Elem>)> = Vec::new();
        for (x, m) in &cyclic {
            known.insert(m.clone(), lattice.len());
            let gens = if *x == 0 { vec![] } else { vec![*x] };
            lattice.push((m.clone(), gens));
        }

        let mut cursor = 0;
        while cursor < lattice.len() {
            let (mask, gens) = lattice[cursor].clone();
            cursor += 1;
            if mask.count() == n {
                continue;
            }
            for (x, cmask) in &cyclic {
                if cmask.is_subset(&mask) {
                    continue;
                }
                let mut join_gens = gens.clone();
                join_gens.push(*x);
                let joined = self.closure_mask(mask.clone(), &join_gens);
                if !known.contains_key(&joined) {
                    known.insert(joined.clone(), lattice.len());
                    lattice.push((joined, join_gens));
                }
            }
        }

        let mut out: Vec<Subgroup> = lattice.into_iter().map(|(m, _)| Subgroup::from_mask(m)).collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        Ok(out)
    }

    pub fn normal_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>> {
        Ok(self.all_subgroups(cap)?.into_iter().filter(|h| self.is_normal(h)).collect())
    }
}
