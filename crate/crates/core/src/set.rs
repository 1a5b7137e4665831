//! Subsets of a ground set of at most 32 elements, stored as bitmasks over
//! internal indices.

pub type Set = u32;

/// Hard limit imposed by the bitmask width.
pub const MAX_ELEMENTS: usize = 32;

/// Default cap on ground-set size. Most routines here are exponential.
pub const DEFAULT_CAP: usize = 24;

#[inline]
pub fn bit(i: usize) -> Set {
    1 << i
}

#[inline]
pub fn full(n: usize) -> Set {
    if n >= 32 {
        Set::MAX
    } else {
        (1 << n) - 1
    }
}

#[inline]
pub fn contains(s: Set, i: usize) -> bool {
    s & bit(i) != 0
}

#[inline]
pub fn is_subset(a: Set, b: Set) -> bool {
    a & !b == 0
}

#[inline]
pub fn len(s: Set) -> usize {
    s.count_ones() as usize
}

/// Indices of the set bits, ascending.
pub fn elements(mut s: Set) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

/// Drops bit `i` and shifts every higher bit down by one.
#[inline]
pub fn remove_index(s: Set, i: usize) -> Set {
    let low = s & full(i);
    let high = if i + 1 >= 32 { 0 } else { (s >> (i + 1)) << i };
    low | high
}

/// Packs the bits of `s` lying in `keep` into consecutive low positions,
/// preserving their relative order.
pub fn compress(s: Set, keep: Set) -> Set {
    let mut out = 0;
    for (k, i) in elements(keep).enumerate() {
        if contains(s, i) {
            out |= bit(k);
        }
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `s` over the positions of `keep`.
pub fn expand(s: Set, keep: Set) -> Set {
    let mut out = 0;
    for (k, i) in elements(keep).enumerate() {
        if contains(s, k) {
            out |= bit(i);
        }
    }
    out
}

/// Canonical ordering for set families: by size, then numeric value.
pub fn sort_family(family: &mut Vec<Set>) {
    family.sort_unstable_by_key(|&c| (c.count_ones(), c));
    family.dedup();
}

/// Keeps the inclusion-minimal members of a family, canonically sorted.
pub fn minimalize(mut family: Vec<Set>) -> Vec<Set> {
    sort_family(&mut family);
    let mut out: Vec<Set> = Vec::with_capacity(family.len());
    for c in family {
        if !out.iter().any(|&d| is_subset(d, c)) {
            out.push(c);
        }
    }
    out
}

/// All `k`-subsets of `{0..n}` in increasing numeric order (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Set> {
    let limit: u64 = 1u64 << n;
    let mut cur: u64 = if k == 0 {
        0
    } else if k > n {
        limit
    } else {
        (1u64 << k) - 1
    };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done || cur >= limit {
            return None;
        }
        let out = cur as Set;
        if cur == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
        }
        Some(out)
    })
}

/// Enumerates the minimal sets for which `dependent` holds, by increasing
/// size up to `max_size`. `dependent` must be monotone (closed upward).
pub fn minimal_dependent_sets(
    n: usize,
    max_size: usize,
    mut dependent: impl FnMut(Set) -> bool,
) -> Vec<Set> {
    let mut found: Vec<Set> = Vec::new();
    for k in 1..=max_size.min(n) {
        for x in subsets_of_size(n, k) {
            if found.iter().any(|&c| is_subset(c, x)) {
                continue;
            }
            if dependent(x) {
                found.push(x);
            }
        }
    }
    sort_family(&mut found);
    found
}
