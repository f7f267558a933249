//! The k-th power map: `G^k`, the non-powers `N_k(G) = G \ G^k`, root counts,
//! and the conjugacy profile of `N_p(G)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::arith::{is_prime, prime_divisors, split_prime_power};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};

/// The k-th power map of a group (or of a subgroup viewed as a group in its
/// own right; element indices are always those of the parent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerAnalysis {
    pub k: u64,
    /// Size of the group the map was computed on.
    pub domain_order: usize,
    /// `G^k`, sorted.
    pub power_image: Vec<Elem>,
    /// `N_k(G)`, sorted.
    pub non_powers: Vec<Elem>,
    /// For each `x` in the image, the number of `y` with `y^k = x`.
    pub theta: BTreeMap<Elem, usize>,
}

impl PowerAnalysis {
    pub fn n(&self) -> usize {
        self.non_powers.len()
    }

    pub fn is_non_power(&self, x: Elem) -> bool {
        self.non_powers.binary_search(&x).is_ok()
    }

    /// `Σ_{x ∈ G^k} (θ(x) − 1)`, which must equal `n_k`.
    pub fn theta_excess(&self) -> usize {
        self.theta.values().map(|&c| c - 1).sum()
    }

    /// Multiplicity → number of image elements with that many roots.
    pub fn theta_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &c in self.theta.values() {
            *h.entry(c).or_insert(0) += 1;
        }
        h
    }
}

fn analyze_over(g: &FiniteGroup, domain: &[Elem], k: u64) -> PowerAnalysis {
    let mut theta: BTreeMap<Elem, usize> = BTreeMap::new();
    for &x in domain {
        // x^k = x^(k mod o(x)); square-and-multiply on the reduced exponent.
        let y = g.power(x, k % g.element_order(x) as u64);
        *theta.entry(y).or_insert(0) += 1;
    }
    let power_image: Vec<Elem> = theta.keys().copied().collect();
    let non_powers = domain.iter().copied().filter(|x| !theta.contains_key(x)).collect();
    PowerAnalysis { k, domain_order: domain.len(), power_image, non_powers, theta }
}

pub fn analyze_powers(g: &FiniteGroup, k: u64) -> Result<PowerAnalysis> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be positive".into()));
    }
    let all: Vec<Elem> = g.elements().collect();
    Ok(analyze_over(g, &all, k))
}

/// The power map of `h` as a group in its own right.
pub fn analyze_powers_in_subgroup(g: &FiniteGroup, h: &Subgroup, k: u64) -> Result<PowerAnalysis> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be positive".into()));
    }
    Ok(analyze_over(g, h.members(), k))
}

/// Partitions `set` by the cyclic subgroup each element generates. Blocks
/// are sorted internally and ordered by their smallest member.
pub fn generator_partition(g: &FiniteGroup, set: &[Elem]) -> Vec<Vec<Elem>> {
    let mut blocks: HashMap<BitSet, Vec<Elem>> = HashMap::new();
    for &x in set {
        blocks.entry(g.cyclic_subgroup(x).mask().clone()).or_default().push(x);
    }
    let mut out: Vec<Vec<Elem>> = blocks
        .into_values()
        .map(|mut b| {
            b.sort_unstable();
            b.dedup();
            b
        })
        .collect();
    out.sort();
    out
}

/// One conjugacy class inside `N_p(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileClass {
    pub representative: Elem,
    pub size: usize,
    pub element_order: usize,
}

/// `N_p(G)` written as a union of conjugacy classes `x_1^G ∪ … ∪ x_m^G`,
/// sorted by element order (ties: class size, then representative).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonPowerProfile {
    pub p: u64,
    pub classes: Vec<ProfileClass>,
}

impl NonPowerProfile {
    /// The sorted tuple of element orders.
    pub fn type_tuple(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.element_order).collect()
    }

    /// Number of classes `m`.
    pub fn length(&self) -> usize {
        self.classes.len()
    }

    pub fn total_size(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub fn non_power_profile(g: &FiniteGroup, p: u64) -> Result<NonPowerProfile> {
    require_prime(p)?;
    let analysis = analyze_powers(g, p)?;
    Ok(profile_from_analysis(g, &analysis, &g.conjugacy_classes()))
}

/// Builds the profile from precomputed pieces. Assumes `analysis.k` is prime
/// and the analysis covers all of `g`.
pub fn profile_from_analysis(
    g: &FiniteGroup,
    analysis: &PowerAnalysis,
    classes: &[crate::group::ConjugacyClass],
) -> NonPowerProfile {
    debug_assert_eq!(analysis.domain_order, g.order());
    let mut out: Vec<ProfileClass> = classes
        .iter()
        .filter(|c| analysis.is_non_power(c.representative))
        .map(|c| ProfileClass {
            representative: c.representative,
            size: c.size(),
            element_order: c.element_order,
        })
        .collect();
    out.sort_by_key(|c| (c.element_order, c.size, c.representative));
    NonPowerProfile { p: analysis.k, classes: out }
}

/// Orders of p-singular elements (`Y`) and their p'-parts (`X`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PSingularData {
    pub y: BTreeSet<u64>,
    pub x: BTreeSet<u64>,
}

pub fn p_singular_data(g: &FiniteGroup, p: u64) -> Result<PSingularData> {
    require_prime(p)?;
    let y: BTreeSet<u64> =
        g.element_orders().iter().map(|&o| o as u64).filter(|o| o % p == 0).collect();
    let x = y.iter().map(|&o| split_prime_power(o, p).1).collect();
    Ok(PSingularData { y, x })
}

/// Smallest prime `p | k` with `0 < n_p(G) <= n_k(G)`.
pub fn reduce_k_to_prime(g: &FiniteGroup, k: u64) -> Result<u64> {
    let nk = analyze_powers(g, k)?.n();
    if nk == 0 {
        return Err(Error::InvalidParameters(format!("n_{k}(G) = 0")));
    }
    for p in prime_divisors(k) {
        let np = analyze_powers(g, p)?.n();
        if np > 0 && np <= nk {
            return Ok(p);
        }
    }
    Err(Error::NoSuchPrime { k })
}

pub fn exponent(g: &FiniteGroup) -> u64 {
    g.exponent()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilySpec};

    fn group(spec: &str) -> FiniteGroup {
        make(&spec.parse::<FamilySpec>().unwrap()).unwrap()
    }

    /// Oracle: cubes by repeated multiplication.
    fn naive_power(g: &FiniteGroup, x: Elem, k: u64) -> Elem {
        (0..k).fold(0, |acc, _| g.mul(acc, x))
    }

    #[test]
    fn c4_squares() {
        let g = group("cyclic:4");
        let a = analyze_powers(&g, 2).unwrap();
        assert_eq!(a.power_image, vec![0, 2]);
        assert_eq!(a.n(), 2);
        assert_eq!(a.n() * a.n(), g.order());
    }

    #[test]
    fn k_equal_one_has_no_non_powers() {
        let g = group("symmetric:4");
        assert_eq!(analyze_powers(&g, 1).unwrap().n(), 0);
        assert!(analyze_powers(&g, 0).is_err());
    }

    #[test]
    fn s3_cubes() {
        let g = group("symmetric:3");
        let a = analyze_powers(&g, 3).unwrap();
        let image: BTreeSet<Elem> = g.elements().map(|x| naive_power(&g, x, 3)).collect();
        assert_eq!(a.power_image, image.into_iter().collect::<Vec<_>>());
        let threes: Vec<Elem> = g.elements().filter(|&x| g.element_order(x) == 3).collect();
        assert_eq!(a.non_powers, threes);
        assert_eq!(a.n(), 2);
        assert_eq!(a.power_image.len(), 4);
        let t = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(g.power(t, 3), t);
    }

    #[test]
    fn theta_identities() {
        for spec in ["symmetric:4", "dicyclic:3", "abelian:2,4"] {
            let g = group(spec);
            for k in 1..=g.exponent() + 1 {
                let a = analyze_powers(&g, k).unwrap();
                assert_eq!(a.theta.values().sum::<usize>(), g.order());
                assert_eq!(a.theta_excess(), a.n());
                assert!(a.theta[&0] >= 1);
                assert_eq!(a.power_image.len() + a.n(), g.order());
            }
        }
    }

    #[test]
    fn subgroup_analyses() {
        let g = group("symmetric:3");
        let whole = Subgroup::whole(&g);
        assert_eq!(analyze_powers_in_subgroup(&g, &whole, 3).unwrap(), analyze_powers(&g, 3).unwrap());
        let three = g.elements().find(|&x| g.element_order(x) == 3).unwrap();
        let c3 = g.cyclic_subgroup(three);
        let a = analyze_powers_in_subgroup(&g, &c3, 3).unwrap();
        assert_eq!(a.n(), 2);
        assert_eq!(a.non_powers, analyze_powers(&g, 3).unwrap().non_powers);
        let two = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(analyze_powers_in_subgroup(&g, &g.cyclic_subgroup(two), 3).unwrap().n(), 0);
    }

    #[test]
    fn partitions() {
        let g = group("symmetric:3");
        let n3 = analyze_powers(&g, 3).unwrap().non_powers;
        assert_eq!(generator_partition(&g, &n3), vec![n3.clone()]);
        assert_eq!(generator_partition(&g, &[0]), vec![vec![0]]);

        let f = group("metacyclic_frobenius:7,6");
        let n7 = analyze_powers(&f, 7).unwrap().non_powers;
        assert_eq!(n7.len(), 6);
        let blocks = generator_partition(&f, &n7);
        assert_eq!(blocks.len(), 1);
        assert!(n7.iter().all(|&x| f.element_order(x) == 7));
    }

    #[test]
    fn profiles() {
        let p = non_power_profile(&group("symmetric:3"), 3).unwrap();
        assert_eq!((p.type_tuple(), p.length()), (vec![3], 1));
        let p = non_power_profile(&group("alternating:4"), 3).unwrap();
        assert_eq!((p.type_tuple(), p.length()), (vec![3, 3], 2));
        let q12 = group("dicyclic:3");
        let p = non_power_profile(&q12, 3).unwrap();
        assert_eq!((p.type_tuple(), p.length(), p.total_size()), (vec![3, 6], 2, 4));
        let empty = non_power_profile(&group("cyclic:5"), 3).unwrap();
        assert_eq!(empty.length(), 0);
        assert_eq!(non_power_profile(&q12, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn singular_data() {
        let d = p_singular_data(&group("dicyclic:3"), 3).unwrap();
        assert_eq!(d.y.into_iter().collect::<Vec<_>>(), vec![3, 6]);
        assert_eq!(d.x.into_iter().collect::<Vec<_>>(), vec![1, 2]);
        let d = p_singular_data(&group("metacyclic_frobenius:7,6"), 7).unwrap();
        assert_eq!((d.y.into_iter().collect::<Vec<_>>(), d.x.into_iter().collect::<Vec<_>>()), (vec![7], vec![1]));
        let d = p_singular_data(&group("cyclic:5"), 5).unwrap();
        assert_eq!((d.y.into_iter().collect::<Vec<_>>(), d.x.into_iter().collect::<Vec<_>>()), (vec![5], vec![1]));
    }

    #[test]
    fn k_to_prime() {
        let c4 = group("cyclic:4");
        assert_eq!(analyze_powers(&c4, 6).unwrap().n(), 2);
        assert_eq!(reduce_k_to_prime(&c4, 6), Ok(2));
        assert_eq!(reduce_k_to_prime(&group("symmetric:3"), 3), Ok(3));

        let f = group("metacyclic_frobenius:7,6");
        let n14 = analyze_powers(&f, 14).unwrap().n();
        let n2 = analyze_powers(&f, 2).unwrap().n();
        let n7 = analyze_powers(&f, 7).unwrap().n();
        let expected = if n2 > 0 && n2 <= n14 { 2 } else { 7 };
        assert!(n7 > 0 && n7 <= n14 || expected == 2);
        assert_eq!(reduce_k_to_prime(&f, 14), Ok(expected));
        assert!(reduce_k_to_prime(&c4, 5).is_err());
    }

    #[test]
    fn exponents() {
        assert_eq!(exponent(&group("cyclic:4")), 4);
        assert_eq!(exponent(&group("symmetric:3")), 6);
        assert_eq!(exponent(&group("abelian:2,2")), 2);
    }
}
