//! Sylow subgroups, `O^{p'}(G)`, Frobenius kernel/complement detection and
//! the four-way classification of groups by `n_p(G)` for odd primes `p`.

use serde::Serialize;

use crate::arith::{is_power_of, is_prime, split_prime_power};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subgroup};
use crate::power::{analyze_powers, PowerAnalysis};

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn is_p_element(g: &FiniteGroup, x: Elem, p: u64) -> bool {
    is_power_of(g.element_order(x) as u64, p)
}

/// A Sylow p-subgroup: grow `⟨x⟩` (x of maximal p-power order) by p-elements
/// of its normalizer until the p-part of `|G|` is reached.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    require_prime(p)?;
    let (e, _) = split_prime_power(g.order() as u64, p);
    let target = p.pow(e) as usize;
    let start = g
        .elements()
        .filter(|&x| is_p_element(g, x, p))
        .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
        .unwrap_or(0);
    let mut gens = vec![start];
    let mut current = g.subgroup_generated(&gens);
    while current.order() < target {
        let normalizer = g.normalizer(&current);
        let next = normalizer
            .members()
            .iter()
            .copied()
            .find(|&y| !current.contains(y) && is_p_element(g, y, p))
            .expect("a p-subgroup below the p-part has a p-element in its normalizer");
        gens.push(next);
        current = g.subgroup_generated(&gens);
    }
    Ok(current)
}

/// `O^{p'}(G)`: the subgroup generated by all elements of p-power order.
pub fn p_residual(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    require_prime(p)?;
    let p_elements: Vec<Elem> = g.elements().filter(|&x| x != 0 && is_p_element(g, x, p)).collect();
    Ok(g.subgroup_generated(&p_elements))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusStructure {
    pub kernel: Subgroup,
    pub complement: Subgroup,
}

/// True when every non-identity element of `k` commutes with nothing outside `k`.
fn centralizers_inside(g: &FiniteGroup, k: &Subgroup) -> bool {
    k.members().iter().skip(1).all(|&x| {
        g.elements().all(|y| k.contains(y) || g.mul(x, y) != g.mul(y, x))
    })
}

/// Frobenius kernel and a complement, searched over a precomputed subgroup
/// lattice of `g`.
pub fn frobenius_structure_in(g: &FiniteGroup, lattice: &[Subgroup]) -> Option<FrobeniusStructure> {
    let n = g.order();
    for kernel in lattice {
        let k = kernel.order();
        if k == 1 || k == n || n % k != 0 || !g.is_normal(kernel) || !centralizers_inside(g, kernel) {
            continue;
        }
        let complement = lattice
            .iter()
            .find(|h| h.order() == n / k && h.intersection_order(kernel) == 1);
        if let Some(h) = complement {
            return Some(FrobeniusStructure { kernel: kernel.clone(), complement: h.clone() });
        }
    }
    None
}

/// Frobenius structure of `g`, or `None` if `g` is not a Frobenius group.
pub fn frobenius_structure(g: &FiniteGroup, lattice_cap: usize) -> Result<Option<FrobeniusStructure>> {
    let lattice = g.all_subgroups(lattice_cap)?;
    Ok(frobenius_structure_in(g, &lattice))
}

/// Whether `(G, k)` is the exceptional shape: `G` Frobenius with kernel of
/// order `n + 1` and `N_k(G)` exactly the non-identity kernel elements.
pub fn is_theorem_b_exception(g: &FiniteGroup, k: u64, lattice_cap: usize) -> Result<bool> {
    let analysis = analyze_powers(g, k)?;
    exception_from_analysis(g, &analysis, lattice_cap)
}

pub(crate) fn exception_from_analysis(
    g: &FiniteGroup,
    analysis: &PowerAnalysis,
    lattice_cap: usize,
) -> Result<bool> {
    exception_with(g, analysis, || frobenius_structure(g, lattice_cap))
}

/// Same as [`is_theorem_b_exception`] with the Frobenius structure supplied
/// lazily, so callers can cache it.
pub(crate) fn exception_with(
    g: &FiniteGroup,
    analysis: &PowerAnalysis,
    frobenius: impl FnOnce() -> Result<Option<FrobeniusStructure>>,
) -> Result<bool> {
    let n = analysis.n();
    if n == 0 || g.order() % (n + 1) != 0 {
        return Ok(false);
    }
    let candidate = g.subgroup_generated(&analysis.non_powers);
    if candidate.order() != n + 1 {
        return Ok(false);
    }
    // Degenerate shape: G itself is the kernel and the complement is trivial.
    // This is C_p with p | k; only C2 and C3 ever rely on it.
    if candidate.order() == g.order() {
        return Ok(true);
    }
    Ok(frobenius()?.is_some_and(|f| f.kernel == candidate))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralInvolutionWitness {
    pub involution: Elem,
    pub quotient_order: usize,
    pub kernel_order: usize,
    pub complement_order: usize,
}

/// Looks for a central involution `z` with `G/⟨z⟩` Frobenius, kernel of
/// order `n/2 + 1` and complement of order `n/2`, where `n = n_p(G)`.
pub fn central_involution_quotient_check(
    g: &FiniteGroup,
    p: u64,
    lattice_cap: usize,
) -> Result<Option<CentralInvolutionWitness>> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let n = analyze_powers(g, p)?.n();
    if n == 0 || n % 2 == 1 {
        return Ok(None);
    }
    let half = n / 2;
    for &z in g.center().members() {
        if g.element_order(z) != 2 {
            continue;
        }
        let (q, _) = g.quotient(&g.cyclic_subgroup(z))?;
        if let Some(f) = frobenius_structure(&q, lattice_cap)? {
            if f.kernel.order() == half + 1 && f.complement.order() == half {
                return Ok(Some(CentralInvolutionWitness {
                    involution: z,
                    quotient_order: q.order(),
                    kernel_order: f.kernel.order(),
                    complement_order: f.complement.order(),
                }));
            }
        }
    }
    Ok(None)
}

/// The four alternatives for `(G, p)` with `p` an odd prime dividing `|G|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum JumpCase {
    /// `|G| = n(n+1)`, Frobenius with `N_p(G)` the non-identity kernel.
    FrobeniusNNplus1,
    /// `|G| = (n/2)(n+2)`, central extension of a Frobenius group of order `(n/2)(n/2+1)`.
    CentralExtHalf,
    /// `|G| = (n/2)(n+1)`, Frobenius with kernel `N_p(G) ∪ {1}` of order `n+1`.
    FrobeniusHalf,
    /// `|G| <= n²/2`.
    GenericBound,
}

impl JumpCase {
    pub fn tag(self) -> &'static str {
        match self {
            JumpCase::FrobeniusNNplus1 => "FROBENIUS_N_NPLUS1",
            JumpCase::CentralExtHalf => "CENTRAL_EXT_HALF",
            JumpCase::FrobeniusHalf => "FROBENIUS_HALF",
            JumpCase::GenericBound => "GENERIC_BOUND",
        }
    }

    pub fn number(self) -> u8 {
        match self {
            JumpCase::FrobeniusNNplus1 => 1,
            JumpCase::CentralExtHalf => 2,
            JumpCase::FrobeniusHalf => 3,
            JumpCase::GenericBound => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CaseWitness {
    Frobenius { kernel_order: usize, complement_order: usize },
    CentralInvolution(CentralInvolutionWitness),
    Bound { order: usize, n: usize },
    /// No alternative could be verified.
    Unresolved { order: usize, n: usize, equations_matched: Vec<u8> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationOutcome {
    pub p: u64,
    pub order: usize,
    pub n: usize,
    /// `None` when no alternative holds.
    pub case: Option<JumpCase>,
    pub witness: CaseWitness,
}

/// Classifies `(G, p)` into one of the four alternatives, verifying the
/// structural claim of each equality case, not just its order equation.
/// Alternatives are tried in order 1, 2, 3, 4.
pub fn classify_new_jumps(g: &FiniteGroup, p: u64, lattice_cap: usize) -> Result<ClassificationOutcome> {
    validate_odd_prime_divisor(g, p)?;
    let analysis = analyze_powers(g, p)?;
    classify_with(g, &analysis, lattice_cap, &mut || frobenius_structure(g, lattice_cap))
}

pub(crate) fn validate_odd_prime_divisor(g: &FiniteGroup, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::NotOddPrime(p));
    }
    if g.order() as u64 % p != 0 {
        return Err(Error::PrimeDoesNotDivideOrder { p, order: g.order() });
    }
    Ok(())
}

/// Classification from a precomputed `N_p` analysis; `frobenius` yields the
/// Frobenius structure of `g` on demand.
pub(crate) fn classify_with(
    g: &FiniteGroup,
    analysis: &PowerAnalysis,
    lattice_cap: usize,
    frobenius: &mut dyn FnMut() -> Result<Option<FrobeniusStructure>>,
) -> Result<ClassificationOutcome> {
    let p = analysis.k;
    let order = g.order();
    let n = analysis.n();
    let outcome = |case, witness| ClassificationOutcome { p, order, n, case, witness };
    let mut matched = Vec::new();

    if order == n * (n + 1) {
        matched.push(1);
        if exception_with(g, analysis, &mut *frobenius)? {
            return Ok(outcome(Some(JumpCase::FrobeniusNNplus1), CaseWitness::Frobenius {
                kernel_order: n + 1,
                complement_order: order / (n + 1),
            }));
        }
    }
    if 2 * order == n * (n + 2) {
        matched.push(2);
        if let Some(w) = central_involution_quotient_check(g, p, lattice_cap)? {
            return Ok(outcome(Some(JumpCase::CentralExtHalf), CaseWitness::CentralInvolution(w)));
        }
    }
    if 2 * order == n * (n + 1) {
        matched.push(3);
        if exception_with(g, analysis, &mut *frobenius)? {
            return Ok(outcome(Some(JumpCase::FrobeniusHalf), CaseWitness::Frobenius {
                kernel_order: n + 1,
                complement_order: order / (n + 1),
            }));
        }
    }
    if 2 * order <= n * n {
        return Ok(outcome(Some(JumpCase::GenericBound), CaseWitness::Bound { order, n }));
    }
    Ok(outcome(None, CaseWitness::Unresolved { order, n, equations_matched: matched }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilySpec};

    fn group(spec: &str) -> FiniteGroup {
        make(&spec.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn sylow_examples() {
        assert_eq!(sylow_subgroup(&group("cyclic:4"), 2).unwrap().order(), 4);
        let s3 = group("symmetric:3");
        let p3 = sylow_subgroup(&s3, 3).unwrap();
        assert_eq!(p3.order(), 3);
        assert!(s3.is_normal(&p3));
        let a4 = group("alternating:4");
        let v = sylow_subgroup(&a4, 2).unwrap();
        assert_eq!(v.order(), 4);
        assert!(a4.is_normal(&v));
        assert!(v.members().iter().all(|&x| a4.element_order(x) <= 2));
        assert!(sylow_subgroup(&group("cyclic:5"), 2).unwrap().is_trivial());
        assert_eq!(sylow_subgroup(&s3, 6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn sylow_orders_in_larger_groups() {
        for (spec, p, expected) in [("symmetric:4", 2, 8), ("symmetric:5", 2, 8), ("symmetric:5", 3, 3), ("dicyclic:6", 2, 8)] {
            assert_eq!(sylow_subgroup(&group(spec), p).unwrap().order(), expected, "{spec} p={p}");
        }
    }

    #[test]
    fn residuals() {
        assert!(p_residual(&group("cyclic:5"), 2).unwrap().is_trivial());
        assert_eq!(p_residual(&group("symmetric:3"), 3).unwrap().order(), 3);
        assert_eq!(p_residual(&group("alternating:4"), 2).unwrap().order(), 4);
        assert_eq!(p_residual(&group("symmetric:3"), 2).unwrap().order(), 6);
    }

    fn check_invariants(g: &FiniteGroup, f: &FrobeniusStructure) {
        let (k, h) = (&f.kernel, &f.complement);
        assert!(g.is_normal(k) && !k.is_trivial() && k.order() < g.order());
        assert!(!h.is_trivial());
        assert_eq!(k.intersection_order(h), 1);
        assert_eq!(k.order() * h.order(), g.order());
        assert_eq!(crate::arith::gcd(k.order(), h.order()), 1);
        for &x in &k.members()[1..] {
            assert!(g.centralizer(x).is_subset_of(k));
        }
    }

    #[test]
    fn frobenius_examples() {
        let s3 = group("symmetric:3");
        let f = frobenius_structure(&s3, 200).unwrap().unwrap();
        assert_eq!((f.kernel.order(), f.complement.order()), (3, 2));
        check_invariants(&s3, &f);

        let g21 = group("metacyclic_frobenius:7,3");
        let f = frobenius_structure(&g21, 200).unwrap().unwrap();
        assert_eq!((f.kernel.order(), f.complement.order()), (7, 3));
        check_invariants(&g21, &f);

        let a4 = group("alternating:4");
        let f = frobenius_structure(&a4, 200).unwrap().unwrap();
        assert_eq!((f.kernel.order(), f.complement.order()), (4, 3));
        check_invariants(&a4, &f);

        for spec in ["cyclic:4", "abelian:2,2", "dicyclic:3", "symmetric:4", "dihedral:4"] {
            assert_eq!(frobenius_structure(&group(spec), 200).unwrap(), None, "{spec}");
        }
        // D10 is Frobenius, D8 is not.
        assert!(frobenius_structure(&group("dihedral:5"), 200).unwrap().is_some());
        assert!(matches!(frobenius_structure(&group("cyclic:12"), 10), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn exception_examples() {
        assert!(is_theorem_b_exception(&group("symmetric:3"), 3, 200).unwrap());
        assert!(is_theorem_b_exception(&group("metacyclic_frobenius:7,6"), 7, 200).unwrap());
        assert!(!is_theorem_b_exception(&group("cyclic:4"), 2, 200).unwrap());
        assert!(is_theorem_b_exception(&group("alternating:4"), 2, 200).unwrap());
    }

    #[test]
    fn prime_order_cyclic_is_the_degenerate_exception() {
        // Kernel is the whole group, complement trivial.
        assert!(is_theorem_b_exception(&group("cyclic:2"), 2, 200).unwrap());
        assert!(is_theorem_b_exception(&group("cyclic:3"), 3, 200).unwrap());
        assert!(is_theorem_b_exception(&group("cyclic:5"), 5, 200).unwrap());
        assert!(!is_theorem_b_exception(&group("cyclic:5"), 2, 200).unwrap());
        assert!(frobenius_structure(&group("cyclic:3"), 200).unwrap().is_none());
        let c3 = classify_new_jumps(&group("cyclic:3"), 3, 200).unwrap();
        assert_eq!(c3.case, Some(JumpCase::FrobeniusHalf));
    }

    #[test]
    fn central_involution_examples() {
        let w = central_involution_quotient_check(&group("dicyclic:3"), 3, 200).unwrap().unwrap();
        assert_eq!((w.quotient_order, w.kernel_order, w.complement_order), (6, 3, 2));
        assert_eq!(central_involution_quotient_check(&group("symmetric:3"), 3, 200).unwrap(), None);
        assert_eq!(central_involution_quotient_check(&group("cyclic:4"), 3, 200).unwrap(), None);
        assert!(central_involution_quotient_check(&group("cyclic:4"), 2, 200).is_err());
    }

    #[test]
    fn classification_examples() {
        let cases = [
            ("metacyclic_frobenius:7,6", 7, JumpCase::FrobeniusNNplus1),
            ("dicyclic:3", 3, JumpCase::CentralExtHalf),
            ("metacyclic_frobenius:7,3", 7, JumpCase::FrobeniusHalf),
            ("alternating:4", 3, JumpCase::GenericBound),
        ];
        for (spec, p, expected) in cases {
            let out = classify_new_jumps(&group(spec), p, 200).unwrap();
            assert_eq!(out.case, Some(expected), "{spec}");
        }
        let a4 = classify_new_jumps(&group("alternating:4"), 3, 200).unwrap();
        assert_eq!(a4.n, 8);
        assert_eq!(a4.witness, CaseWitness::Bound { order: 12, n: 8 });
    }

    #[test]
    fn classification_errors() {
        let g = group("cyclic:4");
        assert_eq!(classify_new_jumps(&g, 2, 200).unwrap_err(), Error::NotOddPrime(2));
        assert_eq!(classify_new_jumps(&g, 9, 200).unwrap_err(), Error::NotPrime(9));
        assert!(matches!(
            classify_new_jumps(&g, 3, 200),
            Err(Error::PrimeDoesNotDivideOrder { p: 3, order: 4 })
        ));
    }
}
