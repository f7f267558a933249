use super::{Elem, FiniteGroup, Limits, Subgroup};
use crate::error::Result;

impl FiniteGroup {
    /// `G/N` on cosets, numbered by smallest member (so `N` itself is coset
    /// 0), together with the projection `G -> G/N`.
    pub fn quotient(&self, normal: &Subgroup) -> Result<(FiniteGroup, Vec<Elem>)> {
        self.check_normal(normal)?;
        let n = self.order();
        let mut projection = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in self.elements() {
            if projection[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            for &k in normal.members() {
                projection[self.mul(x, k)] = c;
            }
            reps.push(x);
        }
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * m + j] = projection[self.mul(a, b)] as u32;
            }
        }
        let q = FiniteGroup::from_flat(m, table, &Limits::default())?
            .with_label(format!("{}/N{}", self.label(), normal.order()));
        Ok((q, projection))
    }
}

#[cfg(test)]
mod tests {
    use crate::error::Error;
    use crate::families::{make, FamilySpec};
    use crate::group::Subgroup;

    fn group(spec: &str) -> crate::group::FiniteGroup {
        make(&spec.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn trivial_quotient_is_same_table() {
        let g = group("dihedral:5");
        let (q, proj) = g.quotient(&Subgroup::trivial(&g)).unwrap();
        assert_eq!(q.order(), g.order());
        // Cosets of the trivial subgroup are numbered by element, so the
        // relabelling is the identity map.
        assert!(proj.iter().enumerate().all(|(i, &c)| i == c));
        assert_eq!(q.rows(), g.rows());
    }

    #[test]
    fn c4_mod_square() {
        let g = group("cyclic:4");
        let (q, _) = g.quotient(&g.cyclic_subgroup(g.power(1, 2))).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn q12_mod_center_looks_like_s3() {
        let g = group("dicyclic:3");
        let (q, proj) = g.quotient(&g.center()).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        let mut sizes: Vec<usize> = q.conjugacy_classes().iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        // Projection is a homomorphism with kernel exactly the center.
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(proj[g.mul(x, y)], q.mul(proj[x], proj[y]));
            }
        }
        let kernel: Vec<usize> = g.elements().filter(|&x| proj[x] == 0).collect();
        assert_eq!(kernel, g.center().members());
    }

    #[test]
    fn non_normal_rejected() {
        let g = group("symmetric:3");
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        assert!(matches!(g.quotient(&g.cyclic_subgroup(t)), Err(Error::NotNormal { .. })));
    }
}
