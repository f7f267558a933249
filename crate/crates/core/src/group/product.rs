use super::{Elem, FiniteGroup, Limits};
use crate::error::{Error, Result};

/// `G × H`, with `(g, h)` stored at index `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let identity: Vec<Vec<Elem>> = vec![g.elements().collect(); h.order()];
    semidirect_unchecked(g, h, &identity)
        .map(|p| p.with_label(format!("{} x {}", g.label(), h.label())))
}

/// `N ⋊ H` where `action[h]` is the automorphism of `N` (as an image array)
/// by which `h` acts. Multiplication is `(n1, h1)(n2, h2) = (n1 φ_{h1}(n2), h1 h2)`
/// and `(n, h)` is stored at index `n * |H| + h`.
pub fn semidirect_product(
    n: &FiniteGroup,
    h: &FiniteGroup,
    action: &[Vec<Elem>],
) -> Result<FiniteGroup> {
    if action.len() != h.order() {
        return Err(Error::InvalidParameters(format!(
            "action has {} entries, expected {}",
            action.len(),
            h.order()
        )));
    }
    for (hi, phi) in action.iter().enumerate() {
        validate_automorphism(n, hi, phi)?;
    }
    for h1 in h.elements() {
        for h2 in h.elements() {
            let composed = n.elements().all(|x| action[h.mul(h1, h2)][x] == action[h1][action[h2][x]]);
            if !composed {
                return Err(Error::ActionNotHomomorphism { h1, h2 });
            }
        }
    }
    semidirect_unchecked(n, h, action)
}

fn validate_automorphism(n: &FiniteGroup, hi: usize, phi: &[Elem]) -> Result<()> {
    let bad = |reason: String| Error::NotAutomorphism { h: hi, reason };
    if phi.len() != n.order() {
        return Err(bad(format!("image array has length {}", phi.len())));
    }
    let mut seen = vec![false; n.order()];
    for &y in phi {
        if y >= n.order() || std::mem::replace(&mut seen[y], true) {
            return Err(bad("not a bijection".into()));
        }
    }
    for a in n.elements() {
        for b in n.elements() {
            if phi[n.mul(a, b)] != n.mul(phi[a], phi[b]) {
                return Err(bad(format!("does not respect the product {a}*{b}")));
            }
        }
    }
    Ok(())
}

fn semidirect_unchecked(n: &FiniteGroup, h: &FiniteGroup, action: &[Vec<Elem>]) -> Result<FiniteGroup> {
    let (nn, hn) = (n.order(), h.order());
    let size = nn * hn;
    let mut table = vec![0u32; size * size];
    for n1 in 0..nn {
        for h1 in 0..hn {
            let row = (n1 * hn + h1) * size;
            let phi = &action[h1];
            for n2 in 0..nn {
                let left = n.mul(n1, phi[n2]) * hn;
                for h2 in 0..hn {
                    table[row + n2 * hn + h2] = (left + h.mul(h1, h2)) as u32;
                }
            }
        }
    }
    FiniteGroup::from_flat(size, table, &Limits::default())
}
