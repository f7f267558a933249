//! Parametric group families and the built-in corpus.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::arith::{divisors, gcd, is_prime, lcm, multiplicative_order};
use crate::error::{Error, Result};
use crate::group::{direct_product, semidirect_product, FiniteGroup, Limits, PermutationGenSet};

/// A group family with its parameters.
///
/// The textual form (see [`FromStr`] / [`Display`](fmt::Display)) is
/// `family:params`, e.g. `cyclic:4`, `metacyclic_frobenius:7,6`,
/// `dp:cyclic:2|cyclic:2`. A direct product whose left factor is itself a
/// product is written with parentheses: `dp:(dp:cyclic:2|cyclic:2)|cyclic:3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cyclic(usize),
    /// Direct product of cyclic groups of the given orders.
    Abelian(Vec<usize>),
    /// Symmetries of the regular n-gon, order 2n.
    Dihedral(usize),
    /// `⟨a, b | a^{2m}, b² = a^m, b⁻¹ab = a⁻¹⟩`, order 4m.
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    /// `C_q ⋊ C_d`, the generator of `C_d` acting as `x ↦ x^t` with `t` the
    /// smallest element of multiplicative order `d` mod `q`.
    MetacyclicFrobenius { q: usize, d: usize },
    /// `C_n ⋊ C_h` with the generator of `C_h` acting as `x ↦ x^t`.
    Semidirect { n: usize, h: usize, t: usize },
    DirectProduct(Box<FamilySpec>, Box<FamilySpec>),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            FamilySpec::Abelian(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "abelian:{}", parts.join(","))
            }
            FamilySpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            FamilySpec::Dicyclic(m) => write!(f, "dicyclic:{m}"),
            FamilySpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            FamilySpec::Alternating(n) => write!(f, "alternating:{n}"),
            FamilySpec::MetacyclicFrobenius { q, d } => write!(f, "metacyclic_frobenius:{q},{d}"),
            FamilySpec::Semidirect { n, h, t } => write!(f, "semidirect:{n},{h},{t}"),
            FamilySpec::DirectProduct(a, b) => match **a {
                FamilySpec::DirectProduct(..) => write!(f, "dp:({a})|{b}"),
                _ => write!(f, "dp:{a}|{b}"),
            },
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn parse_ints(s: &str, expected: Option<usize>) -> Result<Vec<usize>> {
    let v = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad(format!("expected an integer, got {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    match expected {
        Some(n) if v.len() != n => Err(bad(format!("expected {n} parameters, got {}", v.len()))),
        _ => Ok(v),
    }
}

/// Splits `A|B` at the first `|` not nested in parentheses.
fn split_product(s: &str) -> Result<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '|' if depth == 0 => return Ok((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    Err(bad(format!("direct product {s:?} needs two factors separated by '|'")))
}

fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s)
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, params) =
            s.split_once(':').ok_or_else(|| bad(format!("expected family:params, got {s:?}")))?;
        let one = |p: &str| parse_ints(p, Some(1)).map(|v| v[0]);
        Ok(match family {
            "cyclic" => FamilySpec::Cyclic(one(params)?),
            "abelian" => FamilySpec::Abelian(parse_ints(params, None)?),
            "dihedral" => FamilySpec::Dihedral(one(params)?),
            "dicyclic" => FamilySpec::Dicyclic(one(params)?),
            "symmetric" => FamilySpec::Symmetric(one(params)?),
            "alternating" => FamilySpec::Alternating(one(params)?),
            "metacyclic_frobenius" => {
                let v = parse_ints(params, Some(2))?;
                FamilySpec::MetacyclicFrobenius { q: v[0], d: v[1] }
            }
            "semidirect" => {
                let v = parse_ints(params, Some(3))?;
                FamilySpec::Semidirect { n: v[0], h: v[1], t: v[2] }
            }
            "dp" | "direct_product" => {
                let (a, b) = split_product(params)?;
                FamilySpec::DirectProduct(
                    Box::new(strip_parens(a).parse()?),
                    Box::new(strip_parens(b).parse()?),
                )
            }
            other => return Err(bad(format!("unknown family {other:?}"))),
        })
    }
}

impl FamilySpec {
    /// Order of the group this spec describes (before validation).
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Cyclic(n) => *n,
            FamilySpec::Abelian(v) => v.iter().product(),
            FamilySpec::Dihedral(n) => 2 * n,
            FamilySpec::Dicyclic(m) => 4 * m,
            FamilySpec::Symmetric(n) => (1..=*n).product(),
            FamilySpec::Alternating(n) => ((1..=*n).product::<usize>() / 2).max(1),
            FamilySpec::MetacyclicFrobenius { q, d } => q * d,
            FamilySpec::Semidirect { n, h, .. } => n * h,
            FamilySpec::DirectProduct(a, b) => a.order() * b.order(),
        }
    }
}

fn cyclic_rows(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Table for `⟨a, b⟩` with `a` of order `n`, `b a^j = a^{-j} b` and
/// `b² = a^square`. Element `a^i b^e` is stored at index `i + e n`.
fn metacyclic_involution_rows(n: usize, square: usize) -> Vec<Vec<usize>> {
    let size = 2 * n;
    let idx = |i: usize, e: usize| i % n + e * n;
    (0..size)
        .map(|x| {
            let (i, e) = (x % n, x / n);
            (0..size)
                .map(|y| {
                    let (j, f) = (y % n, y / n);
                    match (e, f) {
                        (0, _) => idx(i + j, f),
                        (1, 0) => idx(i + n - j, 1),
                        _ => idx(i + n - j + square, 0),
                    }
                })
                .collect()
        })
        .collect()
}

fn smallest_root_of_order(q: usize, d: usize) -> Option<usize> {
    (2..q).find(|&t| multiplicative_order(t as u64, q as u64) == Some(d as u64))
}

fn power_action(n: usize, h: usize, t: usize) -> Vec<Vec<usize>> {
    let mut action = Vec::with_capacity(h);
    let mut factor = 1 % n.max(1);
    for _ in 0..h {
        action.push((0..n).map(|x| x * factor % n).collect());
        factor = factor * t % n;
    }
    action
}

/// Builds the group described by `spec`, labelled by its canonical string.
pub fn make(spec: &FamilySpec) -> Result<FiniteGroup> {
    make_with(spec, &Limits::default())
}

pub fn make_with(spec: &FamilySpec, limits: &Limits) -> Result<FiniteGroup> {
    let g = match spec {
        FamilySpec::Cyclic(n) => {
            if *n == 0 {
                return Err(bad("cyclic order must be positive"));
            }
            FiniteGroup::from_cayley_with(&cyclic_rows(*n), limits)?
        }
        FamilySpec::Abelian(v) => {
            if v.is_empty() || v.contains(&0) {
                return Err(bad("abelian factors must be positive"));
            }
            let mut acc = make_with(&FamilySpec::Cyclic(v[0]), limits)?;
            for &f in &v[1..] {
                acc = direct_product(&acc, &make_with(&FamilySpec::Cyclic(f), limits)?)?;
            }
            acc
        }
        FamilySpec::Dihedral(n) => {
            if *n == 0 {
                return Err(bad("dihedral parameter must be positive"));
            }
            FiniteGroup::from_cayley_with(&metacyclic_involution_rows(*n, 0), limits)?
        }
        FamilySpec::Dicyclic(m) => {
            if *m == 0 {
                return Err(bad("dicyclic parameter must be positive"));
            }
            FiniteGroup::from_cayley_with(&metacyclic_involution_rows(2 * m, *m), limits)?
        }
        FamilySpec::Symmetric(n) => {
            if *n == 0 {
                return Err(bad("symmetric degree must be positive"));
            }
            let gens = if *n >= 2 {
                let mut transposition: Vec<usize> = (0..*n).collect();
                transposition.swap(0, 1);
                let cycle: Vec<usize> = (0..*n).map(|i| (i + 1) % n).collect();
                vec![transposition, cycle]
            } else {
                vec![]
            };
            FiniteGroup::from_permutations(&PermutationGenSet::new(*n, gens)?, limits)?
        }
        FamilySpec::Alternating(n) => {
            if *n == 0 {
                return Err(bad("alternating degree must be positive"));
            }
            // 3-cycles (0 1 i) for i >= 2.
            let gens = (2..*n)
                .map(|i| {
                    let mut p: Vec<usize> = (0..*n).collect();
                    p[0] = 1;
                    p[1] = i;
                    p[i] = 0;
                    p
                })
                .collect();
            FiniteGroup::from_permutations(&PermutationGenSet::new(*n, gens)?, limits)?
        }
        FamilySpec::MetacyclicFrobenius { q, d } => {
            if !is_prime(*q as u64) || *d <= 1 || (q - 1) % d != 0 {
                return Err(bad(format!("metacyclic_frobenius:{q},{d} needs q prime, d > 1, d | q-1")));
            }
            let t = smallest_root_of_order(*q, *d).expect("cyclic unit group has elements of every order d | q-1");
            let n = make_with(&FamilySpec::Cyclic(*q), limits)?;
            let h = make_with(&FamilySpec::Cyclic(*d), limits)?;
            semidirect_product(&n, &h, &power_action(*q, *d, t))?
        }
        FamilySpec::Semidirect { n, h, t } => {
            if *n == 0 || *h == 0 {
                return Err(bad("semidirect orders must be positive"));
            }
            let ok = gcd(*t, *n) == 1
                && multiplicative_order(*t as u64, *n as u64).is_some_and(|o| *h as u64 % o == 0);
            if !ok {
                return Err(bad(format!("x -> x^{t} does not define an action of C{h} on C{n}")));
            }
            let cn = make_with(&FamilySpec::Cyclic(*n), limits)?;
            let ch = make_with(&FamilySpec::Cyclic(*h), limits)?;
            semidirect_product(&cn, &ch, &power_action(*n, *h, *t))?
        }
        FamilySpec::DirectProduct(a, b) => direct_product(&make_with(a, limits)?, &make_with(b, limits)?)?,
    };
    Ok(g.with_label(spec.to_string()))
}

/// Invariant-factor lists `d1 | d2 | … | dr` (r >= 2, d1 > 1) with product `n`.
fn noncyclic_invariant_factors(n: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 1 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for d in divisors(rem as u64).into_iter().map(|d| d as usize) {
            if d < 2 || d % prev != 0 {
                continue;
            }
            let rest = rem / d;
            // Every later factor is a multiple of d.
            if rest != 1 && rest % d != 0 {
                continue;
            }
            cur.push(d);
            rec(rest, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 1, &mut Vec::new(), &mut out);
    out
}

/// (order, sorted element orders, sorted class sizes). Not an isomorphism
/// invariant in general; used only to drop likely duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    order: usize,
    element_orders: Vec<usize>,
    class_sizes: Vec<usize>,
}

impl Fingerprint {
    pub fn of(g: &FiniteGroup) -> Self {
        let mut element_orders = g.element_orders().to_vec();
        element_orders.sort_unstable();
        let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        class_sizes.sort_unstable();
        Self { order: g.order(), element_orders, class_sizes }
    }

    /// Fingerprint of `A × B` from those of the factors.
    fn product(a: &Self, b: &Self) -> Self {
        let mut element_orders: Vec<usize> = a
            .element_orders
            .iter()
            .flat_map(|&x| b.element_orders.iter().map(move |&y| lcm(x, y)))
            .collect();
        element_orders.sort_unstable();
        let mut class_sizes: Vec<usize> = a
            .class_sizes
            .iter()
            .flat_map(|&x| b.class_sizes.iter().map(move |&y| x * y))
            .collect();
        class_sizes.sort_unstable();
        Self { order: a.order * b.order, element_orders, class_sizes }
    }
}

/// Specs of the base families, in generation order.
fn base_specs(max_order: usize) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    specs.extend((1..=max_order).map(FamilySpec::Cyclic));
    for n in 4..=max_order {
        specs.extend(noncyclic_invariant_factors(n).into_iter().map(FamilySpec::Abelian));
    }
    specs.extend((3..=max_order / 2).map(FamilySpec::Dihedral));
    specs.extend((2..=max_order / 4).map(FamilySpec::Dicyclic));
    specs.extend((3..=5).map(FamilySpec::Symmetric).filter(|s| s.order() <= max_order));
    specs.extend((4..=5).map(FamilySpec::Alternating).filter(|s| s.order() <= max_order));
    for q in (3..=max_order).filter(|&q| is_prime(q as u64)) {
        for d in divisors(q as u64 - 1).into_iter().map(|d| d as usize) {
            if d > 1 && q * d <= max_order {
                specs.push(FamilySpec::MetacyclicFrobenius { q, d });
            }
        }
    }
    specs
}

/// The deterministic built-in corpus: cyclic and abelian groups, dihedral and
/// dicyclic groups, small symmetric and alternating groups, metacyclic
/// Frobenius groups, and pairwise direct products of these, all of order at
/// most `max_order`, deduplicated by [`Fingerprint`] and sorted by order
/// (stable in generation order).
pub fn builtin_corpus(max_order: usize) -> Result<Vec<FiniteGroup>> {
    builtin_corpus_with(max_order, &Limits::default())
}

pub fn builtin_corpus_with(max_order: usize, limits: &Limits) -> Result<Vec<FiniteGroup>> {
    let mut seen: HashSet<Fingerprint> = HashSet::new();
    let mut base: Vec<(FamilySpec, FiniteGroup, Fingerprint)> = Vec::new();
    for spec in base_specs(max_order) {
        let g = make_with(&spec, limits)?;
        let fp = Fingerprint::of(&g);
        if seen.insert(fp.clone()) {
            base.push((spec, g, fp));
        }
    }

    let mut products = Vec::new();
    for i in 0..base.len() {
        for j in i..base.len() {
            let (sa, ga, fa) = &base[i];
            let (sb, gb, fb) = &base[j];
            if ga.order() < 2 || gb.order() < 2 || ga.order() * gb.order() > max_order {
                continue;
            }
            // A product of abelian groups is already an abelian family member.
            if ga.is_abelian() && gb.is_abelian() {
                continue;
            }
            let fp = Fingerprint::product(fa, fb);
            if seen.insert(fp) {
                let spec = FamilySpec::DirectProduct(Box::new(sa.clone()), Box::new(sb.clone()));
                products.push(direct_product(ga, gb)?.with_label(spec.to_string()));
            }
        }
    }

    let mut corpus: Vec<FiniteGroup> = base.into_iter().map(|(_, g, _)| g).chain(products).collect();
    corpus.sort_by_key(|g| g.order());
    Ok(corpus)
}
