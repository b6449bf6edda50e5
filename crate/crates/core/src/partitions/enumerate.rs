use alloc::vec::Vec;

/// All partitions of `n` as non-increasing vectors, in reverse lexicographic
/// order starting from `[n]`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Self {
            current: Some(if n == 0 { Vec::new() } else { alloc::vec![n] }),
        }
    }
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut p = out.clone();
        // strip trailing ones, decrement the last part > 1, refill greedily
        let mut ones = 0;
        while p.last() == Some(&1) {
            p.pop();
            ones += 1;
        }
        if let Some(last) = p.last_mut() {
            *last -= 1;
            let k = *last;
            let mut rem = ones + 1;
            while rem > 0 {
                let take = rem.min(k);
                p.push(take);
                rem -= take;
            }
            self.current = Some(p);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn counts_match_partition_numbers() {
        let p = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &want) in p.iter().enumerate() {
            assert_eq!(Partitions::new(n).count(), want, "n = {n}");
        }
    }

    #[test]
    fn order_and_shape() {
        let all: Vec<_> = Partitions::new(4).collect();
        assert_eq!(all, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(Partitions::new(0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }
}
