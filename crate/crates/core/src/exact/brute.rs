use alloc::vec::Vec;

use num_bigint::BigInt;

use super::PartitionSpec;
use crate::{Error, Result};

pub const MAX_BRUTEFORCE_EDGES: usize = 24;

/// Counts acyclic orientations of `K_λ` by trying all `2^E` orientations.
///
/// Independent of the polynomial route; used as its oracle.
pub fn ao_bruteforce(parts: &PartitionSpec) -> Result<BigInt> {
    let e = parts.edges();
    if e > MAX_BRUTEFORCE_EDGES {
        return Err(Error::TooLarge {
            what: "edge count",
            size: e,
            limit: MAX_BRUTEFORCE_EDGES,
        });
    }
    let n = parts.vertices();
    let colour: Vec<usize> = parts
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| core::iter::repeat(i).take(p))
        .collect();
    let mut edges = Vec::with_capacity(e);
    for a in 0..n {
        for b in a + 1..n {
            if colour[a] != colour[b] {
                edges.push((a, b));
            }
        }
    }

    let mut out = alloc::vec![0u64; n];
    let mut count: u64 = 0;
    for mask in 0u64..(1u64 << e) {
        out.iter_mut().for_each(|o| *o = 0);
        for (k, &(a, b)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                out[a] |= 1 << b;
            } else {
                out[b] |= 1 << a;
            }
        }
        if is_acyclic(&out) {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Peels sinks until nothing is left (acyclic) or no sink remains (cycle).
fn is_acyclic(out: &[u64]) -> bool {
    let mut alive: u64 = if out.len() == 64 { u64::MAX } else { (1u64 << out.len()) - 1 };
    while alive != 0 {
        let mut sinks = 0u64;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if out[v] & alive == 0 {
                sinks |= 1 << v;
            }
        }
        if sinks == 0 {
            return false;
        }
        alive &= !sinks;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_fixtures() {
        let bf = |p: &[usize]| ao_bruteforce(&PartitionSpec::new(p.iter().copied())).unwrap();
        assert_eq!(bf(&[2, 2]), 14.into());
        assert_eq!(bf(&[1, 1, 1, 1]), 24.into());
        assert_eq!(bf(&[2, 1]), 4.into());
        assert_eq!(bf(&[3, 3]), 230.into());
        assert_eq!(bf(&[]), 1.into());
        assert_eq!(bf(&[4]), 1.into());
    }

    #[test]
    fn rejects_large_graphs() {
        let k8 = PartitionSpec::equal(1, 8); // 28 edges
        assert!(matches!(ao_bruteforce(&k8), Err(Error::TooLarge { size: 28, .. })));
    }
}
