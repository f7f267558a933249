//! Independent oracles shared by the integration tests. None of these call
//! into the library's own algorithms beyond reading the multiplication table.
#![allow(dead_code)]

use std::collections::BTreeSet;

use notpowers::FiniteGroup;

/// `x^k` by repeated multiplication.
pub fn naive_power(g: &FiniteGroup, x: usize, k: u64) -> usize {
    let mut acc = g.identity();
    for _ in 0..k {
        acc = g.mul(acc, x);
    }
    acc
}

/// `|G \ {x^k : x ∈ G}|` by direct evaluation.
pub fn naive_non_power_count(g: &FiniteGroup, k: u64) -> usize {
    let image: BTreeSet<usize> = g.elements().map(|x| naive_power(g, x, k)).collect();
    g.order() - image.len()
}

/// Closure of `set` under multiplication (finite, so this is a subgroup).
pub fn naive_closure(g: &FiniteGroup, set: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; g.order()];
    inside[g.identity()] = true;
    let mut members = vec![g.identity()];
    for &x in set {
        if !inside[x] {
            inside[x] = true;
            members.push(x);
        }
    }
    let mut i = 0;
    while i < members.len() {
        for j in 0..members.len() {
            for (a, b) in [(members[i], members[j]), (members[j], members[i])] {
                let c = g.mul(a, b);
                if !inside[c] {
                    inside[c] = true;
                    members.push(c);
                }
            }
        }
        i += 1;
    }
    inside
}

/// Every subgroup, found by adjoining one element at a time starting from the
/// trivial subgroup. Returned as sorted member lists.
pub fn naive_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let as_list = |mask: &[bool]| -> Vec<usize> { (0..mask.len()).filter(|&i| mask[i]).collect() };
    let mut seen = BTreeSet::new();
    let mut frontier = vec![as_list(&naive_closure(g, &[]))];
    seen.insert(frontier[0].clone());
    while let Some(h) = frontier.pop() {
        for x in g.elements() {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(x);
            let bigger = as_list(&naive_closure(g, &gens));
            if seen.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    seen
}

pub fn is_normal_naive(g: &FiniteGroup, members: &[usize]) -> bool {
    let set: BTreeSet<usize> = members.iter().copied().collect();
    g.elements().all(|y| members.iter().all(|&x| set.contains(&g.mul(g.mul(g.inv(y), x), y))))
}
