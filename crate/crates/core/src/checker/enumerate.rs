use crate::algebra::{Chain, Descriptor};

/// All ordinal sums of finite MV-chains `MV(k_1) ++ ... ++ MV(k_m)` with at
/// most `max_size` elements after gluing the tops (`1 + Σ (k_i - 1)`).
///
/// Ordered by size, then by number of components, then by the component
/// sizes in decreasing lexicographic order. Empty for `max_size < 2`.
pub fn enumerate_finite_sums(max_size: usize) -> Vec<Chain> {
    let mut out = Vec::new();
    for size in 2..=max_size {
        let mut comps = Vec::new();
        compositions(size - 1, &mut vec![], &mut comps);
        comps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
        for parts in comps {
            let descriptor = match parts.as_slice() {
                [k] => Descriptor::FiniteMV(k + 1),
                _ => Descriptor::OrdinalSum(parts.iter().map(|k| Descriptor::FiniteMV(k + 1)).collect()),
            };
            out.push(Chain::new(descriptor).expect("finite MV sums are valid"));
        }
    }
    out
}

fn compositions(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(prefix.clone());
        return;
    }
    for first in 1..=rest {
        prefix.push(first);
        compositions(rest - first, prefix, out);
        prefix.pop();
    }
}
