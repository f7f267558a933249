use super::{Elem, FiniteGroup};
use crate::bitset::BitSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Smallest index in the class.
    pub representative: Elem,
    /// Sorted.
    pub members: Vec<Elem>,
    pub element_order: usize,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl FiniteGroup {
    /// Classes in order of their smallest member, so the identity class is
    /// first.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order();
        let mut assigned = BitSet::new(n);
        let mut out = Vec::new();
        for x in self.elements() {
            if assigned.contains(x) {
                continue;
            }
            let mut class = BitSet::new(n);
            for g in self.elements() {
                class.insert(self.conj(x, g));
            }
            for y in class.iter() {
                assigned.insert(y);
            }
            out.push(ConjugacyClass {
                representative: x,
                members: class.to_vec(),
                element_order: self.element_order(x),
            });
        }
        out
    }

    /// The class of `x`.
    pub fn conjugacy_class_of(&self, x: Elem) -> Vec<Elem> {
        let mut class = BitSet::new(self.order());
        for g in self.elements() {
            class.insert(self.conj(x, g));
        }
        class.to_vec()
    }
}

#[cfg(test)]
mod tests {
    use crate::families::{make, FamilySpec};

    fn sizes(spec: &str) -> Vec<usize> {
        let g = make(&spec.parse::<FamilySpec>().unwrap()).unwrap();
        let mut s: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        s.sort();
        s
    }

    #[test]
    fn class_sizes() {
        assert_eq!(sizes("cyclic:4"), vec![1, 1, 1, 1]);
        assert_eq!(sizes("symmetric:3"), vec![1, 2, 3]);
        assert_eq!(sizes("alternating:4"), vec![1, 3, 4, 4]);
    }

    #[test]
    fn class_equation_and_orbit_stabilizer() {
        for spec in ["symmetric:4", "dicyclic:5", "metacyclic_frobenius:7,3"] {
            let g = make(&spec.parse::<FamilySpec>().unwrap()).unwrap();
            let classes = g.conjugacy_classes();
            assert_eq!(classes.iter().map(|c| c.size()).sum::<usize>(), g.order());
            for c in &classes {
                assert_eq!(c.size() * g.centralizer(c.representative).order(), g.order());
                assert!(c.members.iter().all(|&y| g.element_order(y) == c.element_order));
                assert_eq!(g.conjugacy_class_of(c.representative), c.members);
            }
        }
    }
}
