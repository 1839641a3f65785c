use crate::error::{Error, Result};

/// Default cap on the ground set `|U1 ∪ U2 ∪ U3|`.
pub const DEFAULT_PARTITION_CAP: usize = 12;

/// A partition of `U1 ∪ U2 ∪ U3` into parts holding at most one element of
/// each `U_i`. Part `p[i]` is the member taken from `U_i`, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChildPartition<T> {
    pub parts: Vec<[Option<T>; 3]>,
}

/// All admissible partitions, each exactly once.
pub fn enumerate_partitions<T: Copy>(
    u1: &[T],
    u2: &[T],
    u3: &[T],
    cap: usize,
) -> Result<Vec<ChildPartition<T>>> {
    let mut out = Vec::new();
    for_each_partition([u1, u2, u3], cap, |parts| {
        out.push(ChildPartition {
            parts: parts.to_vec(),
        })
    })?;
    Ok(out)
}

/// Calls `visit` once per admissible partition. Elements are inserted in
/// the order `U1, U2, U3`; each either opens a new part or joins an earlier
/// part that has no member from the same set, so every partition arises
/// from exactly one insertion sequence.
pub(crate) fn for_each_partition<T: Copy>(
    sets: [&[T]; 3],
    cap: usize,
    mut visit: impl FnMut(&[[Option<T>; 3]]),
) -> Result<usize> {
    let elements: Vec<(usize, T)> = sets
        .iter()
        .enumerate()
        .flat_map(|(i, s)| s.iter().map(move |&x| (i, x)))
        .collect();
    if elements.len() > cap {
        return Err(Error::SizeLimit {
            size: elements.len(),
            cap,
        });
    }
    let mut parts: Vec<[Option<T>; 3]> = Vec::with_capacity(elements.len());
    let mut count = 0;
    recurse(&elements, 0, &mut parts, &mut visit, &mut count);
    Ok(count)
}

fn recurse<T: Copy>(
    elements: &[(usize, T)],
    next: usize,
    parts: &mut Vec<[Option<T>; 3]>,
    visit: &mut impl FnMut(&[[Option<T>; 3]]),
    count: &mut usize,
) {
    if next == elements.len() {
        *count += 1;
        visit(parts);
        return;
    }
    let (set, x) = elements[next];
    for p in 0..parts.len() {
        if parts[p][set].is_none() {
            parts[p][set] = Some(x);
            recurse(elements, next + 1, parts, visit, count);
            parts[p][set] = None;
        }
    }
    let mut fresh = [None; 3];
    fresh[set] = Some(x);
    parts.push(fresh);
    recurse(elements, next + 1, parts, visit, count);
    parts.pop();
}
