use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// Part sizes of a complete multipartite graph, kept non-increasing.
///
/// Zero parts are dropped on construction; no parts at all is the empty
/// graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartitionSpec {
    parts: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// `r` parts of size `k`.
    pub fn equal(k: usize, r: usize) -> Self {
        Self::new(core::iter::repeat(k).take(r))
    }

    /// The Turán graph `T(n, p)`: `p` parts as equal as possible.
    pub fn turan(n: usize, p: usize) -> Self {
        assert!(p > 0, "Turán graph needs at least one part");
        Self::new((0..p).map(|i| n / p + usize::from(i < n % p)))
    }

    /// `K_{L,1,…,1}` on `n` vertices.
    pub fn one_large_part(large: usize, n: usize) -> Self {
        Self::new(core::iter::once(large).chain(core::iter::repeat(1).take(n - large)))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of vertices `N`.
    pub fn vertices(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Cross-part edges: `(N^2 - Σ λ_i^2) / 2`.
    pub fn edges(&self) -> usize {
        let n = self.vertices();
        let sq: usize = self.parts.iter().map(|p| p * p).sum();
        (n * n - sq) / 2
    }

    /// Counts `r_j` of parts of size `j`, indexed from `j = 1`.
    pub fn profile(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.parts.first().copied().unwrap_or(0)];
        for &p in &self.parts {
            out[p - 1] += 1;
        }
        out
    }
}

impl FromStr for PartitionSpec {
    type Err = Error;

    /// Comma-separated part sizes, e.g. `"3,3,1"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::default());
        }
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidArgument(alloc::format!("bad part {x:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<_> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn canonical_form() {
        let p = PartitionSpec::new([1, 0, 3, 2, 0]);
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(p.vertices(), 6);
        assert_eq!(p.edges(), 11);
        assert_eq!(p.profile(), vec![1, 1, 1]);
        assert!(PartitionSpec::new([0, 0]).is_empty());
    }

    #[test]
    fn parse_and_display() {
        let p: PartitionSpec = "2, 3,1".parse().unwrap();
        assert_eq!(p.to_string(), "3,2,1");
        assert!("2,x".parse::<PartitionSpec>().is_err());
        assert!("".parse::<PartitionSpec>().unwrap().is_empty());
    }

    #[test]
    fn turan_parts() {
        assert_eq!(PartitionSpec::turan(40, 3).parts(), &[14, 13, 13]);
        assert_eq!(PartitionSpec::turan(120, 5).parts(), &[24; 5]);
        assert_eq!(PartitionSpec::one_large_part(2, 4).parts(), &[2, 1, 1]);
    }
}
