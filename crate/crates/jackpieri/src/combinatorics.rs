//! Partitions with fixed length r (trailing zeros kept), the dominance and
//! inclusion orders, the staircase vector, subset shifts, and enumeration.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombError {
    #[error("dominance order requires equal weights ({0} vs {1})")]
    WeightMismatch(i64, i64),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Weakly decreasing vector of nonnegative integers of length exactly r.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics if the parts are not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {:?}",
            parts
        );
        Partition { parts }
    }

    pub fn try_new(parts: Vec<u32>) -> Option<Self> {
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            Some(Partition { parts })
        } else {
            None
        }
    }

    pub fn zero(r: usize) -> Self {
        Partition {
            parts: vec![0; r],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn to_int_vector(&self) -> IntVector {
        IntVector(self.parts.iter().map(|&p| p as i64).collect())
    }

    /// Componentwise inclusion order: self_i <= other_i for all i.
    pub fn contains_in(&self, other: &Partition) -> bool {
        other.contains(self)
    }

    /// `self` contains `k` componentwise (k subset of self).
    pub fn contains(&self, k: &Partition) -> bool {
        self.parts.iter().zip(&k.parts).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = CombError;

    fn from_str(s: &str) -> Result<Self, CombError> {
        let parts: Result<Vec<u32>, _> = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect();
        let parts = parts.map_err(|_| CombError::Parse(s.to_string()))?;
        Partition::try_new(parts).ok_or_else(|| CombError::Parse(s.to_string()))
    }
}

/// Integer vector of length r, not necessarily decreasing. Houses shifted
/// indices like x - epsilon_J before the membership test in the partition cone.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_partition(&self) -> Option<Partition> {
        if self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().map_or(true, |&l| l >= 0) {
            Some(Partition {
                parts: self.0.iter().map(|&x| x as u32).collect(),
            })
        } else {
            None
        }
    }

    pub fn is_partition(&self) -> bool {
        self.as_partition().is_some()
    }
}

/// Sorted set of distinct 0-based indices from {0, .., r-1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    indices: Vec<usize>,
    rank: usize,
}

impl Subset {
    pub fn new(mut indices: Vec<usize>, rank: usize) -> Self {
        indices.sort_unstable();
        indices.dedup();
        assert!(indices.iter().all(|&i| i < rank));
        Subset { indices, rank }
    }

    pub fn empty(rank: usize) -> Self {
        Subset {
            indices: vec![],
            rank,
        }
    }

    pub fn full(rank: usize) -> Self {
        Subset {
            indices: (0..rank).collect(),
            rank,
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn complement(&self) -> Subset {
        Subset {
            indices: (0..self.rank).filter(|i| !self.contains(*i)).collect(),
            rank: self.rank,
        }
    }

    /// All 2^r subsets of {0, .., r-1}, in increasing bitmask order.
    pub fn all(rank: usize) -> Vec<Subset> {
        (0u32..1 << rank)
            .map(|mask| Subset {
                indices: (0..rank).filter(|i| mask >> i & 1 == 1).collect(),
                rank,
            })
            .collect()
    }

    /// All subsets of given size.
    pub fn of_size(rank: usize, size: usize) -> Vec<Subset> {
        Subset::all(rank)
            .into_iter()
            .filter(|s| s.len() == size)
            .collect()
    }
}

/// The staircase (r-1, r-2, .., 1, 0).
pub fn staircase(r: usize) -> IntVector {
    assert!(r >= 1);
    IntVector((0..r).map(|i| (r - 1 - i) as i64).collect())
}

/// Dominance order on partitions of equal weight: prefix sums of k bounded by
/// those of m. Errors if the weights differ.
pub fn dominance_leq(k: &Partition, m: &Partition) -> Result<bool, CombError> {
    let (wk, wm) = (k.weight() as i64, m.weight() as i64);
    if wk != wm {
        return Err(CombError::WeightMismatch(wk, wm));
    }
    let mut sk = 0i64;
    let mut sm = 0i64;
    for (a, b) in k.parts.iter().zip(&m.parts) {
        sk += *a as i64;
        sm += *b as i64;
        if sk > sm {
            return Ok(false);
        }
    }
    Ok(true)
}

/// x plus/minus epsilon_J, with a flag for membership in the partition cone.
pub fn shift_by_subset(x: &IntVector, j: &Subset, sign: i64) -> (IntVector, bool) {
    let mut out = x.0.clone();
    for &idx in j.indices() {
        out[idx] += sign;
    }
    let v = IntVector(out);
    let is_p = v.is_partition();
    (v, is_p)
}

/// All partitions of length <= r (padded to length r) and weight <= max_weight,
/// ordered by (weight, reverse-lexicographic) so output is byte-stable.
pub fn partitions_up_to(max_weight: u32, r: usize) -> Vec<Partition> {
    let mut out = vec![];
    for w in 0..=max_weight {
        let mut layer = partitions_of(w, r);
        layer.sort_by(|a, b| b.parts.cmp(&a.parts));
        out.extend(layer);
    }
    out
}

/// All partitions of weight exactly w with at most r parts.
pub fn partitions_of(w: u32, r: usize) -> Vec<Partition> {
    let mut out = vec![];
    let mut cur = vec![0u32; r];
    fn rec(w: u32, r: usize, max: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if w == 0 {
            for c in cur[pos..].iter_mut() {
                *c = 0;
            }
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if pos == r {
            return;
        }
        for p in (1..=w.min(max)).rev() {
            cur[pos] = p;
            rec(w - p, r, p, pos + 1, cur, out);
        }
    }
    rec(w, r, w, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(3), IntVector(vec![2, 1, 0]));
        assert_eq!(staircase(1), IntVector(vec![0]));
        assert_eq!(staircase(2), IntVector(vec![1, 0]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1]), &p(&[2, 0])).unwrap());
        assert!(!dominance_leq(&p(&[2, 0]), &p(&[1, 1])).unwrap());
        assert!(dominance_leq(&p(&[3, 1]), &p(&[3, 1])).unwrap());
        assert!(matches!(
            dominance_leq(&p(&[1, 0]), &p(&[2, 0])),
            Err(CombError::WeightMismatch(1, 2))
        ));
    }

    #[test]
    fn inclusion_examples() {
        assert!(p(&[2, 1]).contains(&p(&[1, 0])));
        assert!(!p(&[1, 1]).contains(&p(&[2, 0])));
        assert!(p(&[3, 2]).contains(&p(&[0, 0])));
    }

    #[test]
    fn shift_examples() {
        let (v, ok) = shift_by_subset(&IntVector(vec![2, 1]), &Subset::new(vec![0], 2), 1);
        assert_eq!(v, IntVector(vec![3, 1]));
        assert!(ok);

        let (v, ok) = shift_by_subset(&IntVector(vec![2, 2]), &Subset::new(vec![0], 2), -1);
        assert_eq!(v, IntVector(vec![1, 2]));
        assert!(!ok);

        let (v, ok) = shift_by_subset(&IntVector(vec![2, 2]), &Subset::new(vec![0, 1], 2), -1);
        assert_eq!(v, IntVector(vec![1, 1]));
        assert!(ok);
    }

    #[test]
    fn shift_round_trip() {
        for x in partitions_up_to(4, 3) {
            let xv = x.to_int_vector();
            for j in Subset::all(3) {
                let (up, _) = shift_by_subset(&xv, &j, 1);
                let (back, _) = shift_by_subset(&up, &j, -1);
                assert_eq!(back, xv);
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let got = partitions_up_to(2, 2);
        assert_eq!(got, vec![p(&[0, 0]), p(&[1, 0]), p(&[2, 0]), p(&[1, 1])]);

        assert_eq!(partitions_up_to(0, 4), vec![p(&[0, 0, 0, 0])]);

        assert_eq!(
            partitions_up_to(3, 1),
            vec![p(&[0]), p(&[1]), p(&[2]), p(&[3])]
        );
    }

    /// Independent DP counter for p(n, <= r parts).
    fn count_partitions_dp(max_weight: usize, r: usize) -> usize {
        // table[w] = number of partitions of w into parts of size <= current cap
        // with at most r parts handled by conjugate: parts <= r <=> at most r parts
        // after transpose; count directly instead with a 2d table.
        let mut table = vec![vec![0usize; max_weight + 1]; r + 1];
        for row in table.iter_mut() {
            row[0] = 1;
        }
        for parts in 1..=r {
            for w in 1..=max_weight {
                table[parts][w] = table[parts - 1][w]
                    + if w >= parts { table[parts][w - parts] } else { 0 };
            }
        }
        (0..=max_weight).map(|w| table[r][w]).sum()
    }

    #[test]
    fn enumeration_count_matches_dp() {
        for r in 1..=4 {
            for n in 0..=8u32 {
                assert_eq!(
                    partitions_up_to(n, r).len(),
                    count_partitions_dp(n as usize, r),
                    "r={} n={}",
                    r,
                    n
                );
            }
        }
    }

    #[test]
    fn dominance_is_partial_order_by_exhaustion() {
        for w in 0..=6u32 {
            let layer = partitions_of(w, 4);
            for a in &layer {
                assert!(dominance_leq(a, a).unwrap());
                for b in &layer {
                    if dominance_leq(a, b).unwrap() && dominance_leq(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &layer {
                        if dominance_leq(a, b).unwrap() && dominance_leq(b, c).unwrap() {
                            assert!(dominance_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inclusion_implies_weight_leq() {
        let all = partitions_up_to(5, 3);
        for a in &all {
            for b in &all {
                if b.contains(a) {
                    assert!(a.weight() <= b.weight());
                }
            }
        }
    }

    #[test]
    fn partition_text_round_trip() {
        let x = p(&[2, 1, 0]);
        assert_eq!(x.to_string(), "2,1,0");
        assert_eq!("2,1,0".parse::<Partition>().unwrap(), x);
        assert!("1,2".parse::<Partition>().is_err());
    }
}
