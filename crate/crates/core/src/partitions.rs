//! Partitions and the nilpotent-orbit numerology of `sl_m`: dual
//! partitions, dominance order, orbit dimensions from Jordan types, and
//! partition enumeration.

use std::fmt;

use crate::error::Error;

/// A weakly decreasing sequence of positive integers. The empty partition
/// (of 0) is allowed; trailing zeros are never stored, so equality is
/// canonical. Padding with 1's, where a caller needs it, is explicit at the
/// call site.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition (transpose of the Young diagram).
    pub fn dual(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Pad with 1's until the total reaches `total`.
    pub fn padded_to(&self, total: u32) -> Result<Partition, Error> {
        let current = self.total();
        if current > total {
            return Err(Error::TotalMismatch(format!(
                "cannot pad a partition of {current} down to {total}"
            )));
        }
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, (total - current) as usize));
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Dominance order: `p <= q` iff every prefix sum of `p` is at most the
/// corresponding prefix sum of `q`. Only defined for equal totals.
pub fn dominance_leq(p: &Partition, q: &Partition) -> Result<bool, Error> {
    if p.total() != q.total() {
        return Err(Error::TotalMismatch(format!(
            "dominance compares partitions of equal totals, got {} and {}",
            p.total(),
            q.total()
        )));
    }
    let len = p.len().max(q.len());
    let mut sp = 0u32;
    let mut sq = 0u32;
    for i in 0..len {
        sp += p.parts().get(i).copied().unwrap_or(0);
        sq += q.parts().get(i).copied().unwrap_or(0);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the nilpotent orbit of `sl_m` with Jordan blocks `jordan`:
/// `m^2 - sum of squared dual parts`.
pub fn orbit_dimension(m: u32, jordan: &Partition) -> Result<u64, Error> {
    if jordan.total() != m {
        return Err(Error::TotalMismatch(format!(
            "Jordan type {jordan} does not partition {m}"
        )));
    }
    let dual = jordan.dual();
    let sq: u64 = dual.parts().iter().map(|&p| (p as u64) * (p as u64)).sum();
    Ok((m as u64) * (m as u64) - sq)
}

/// All partitions of `m` in descending lexicographic order, so `(m)` comes
/// first and `(1,...,1)` last. Capped at `m <= 12`.
pub fn enumerate_partitions(m: u32) -> Result<Vec<Partition>, Error> {
    if m > 12 {
        return Err(Error::TooLarge(format!(
            "partition enumeration capped at 12, got {m}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    go(m, m, &mut current, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p(&[4]).dual(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[2, 2]).dual(), p(&[2, 2]));
        assert_eq!(p(&[3, 1]).dual(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().dual(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 2]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 1]), &p(&[4])).is_err());
    }

    #[test]
    fn orbit_dimension_examples() {
        assert_eq!(orbit_dimension(4, &p(&[1, 1, 1, 1])).unwrap(), 0);
        assert_eq!(orbit_dimension(4, &p(&[4])).unwrap(), 12);
        assert_eq!(orbit_dimension(4, &p(&[2, 2])).unwrap(), 8);
        assert!(orbit_dimension(5, &p(&[2, 2])).is_err());
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p(&[1])]);
        assert_eq!(
            enumerate_partitions(3).unwrap(),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(4).unwrap().len(), 5);
        assert!(enumerate_partitions(13).is_err());
    }

    #[test]
    fn dual_is_an_involution_and_reverses_dominance() {
        for m in 1..=8 {
            let all = enumerate_partitions(m).unwrap();
            for a in &all {
                assert_eq!(&a.dual().dual(), a);
                for b in &all {
                    assert_eq!(
                        dominance_leq(a, b).unwrap(),
                        dominance_leq(&b.dual(), &a.dual()).unwrap(),
                        "m={m} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order() {
        let all = enumerate_partitions(6).unwrap();
        for a in &all {
            assert!(dominance_leq(a, a).unwrap());
            for b in &all {
                if dominance_leq(a, b).unwrap() && dominance_leq(b, a).unwrap() {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if dominance_leq(a, b).unwrap() && dominance_leq(b, c).unwrap() {
                        assert!(dominance_leq(a, c).unwrap());
                    }
                }
            }
        }
    }
}
