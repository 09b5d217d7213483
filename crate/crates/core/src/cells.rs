//! Type-A weight cells via dominant admissible sign types.
//!
//! Positive roots of `A_n` are identified with pairs `(j1, j2)`,
//! `1 <= j1 < j2 <= n+1` (0-based in code). A sign type marks each pair
//! `+` or `0`; the one attached to a dominant weight marks the pairs whose
//! shifted pairing reaches `l`. Admissibility means `+` propagates to sums
//! of roots, which for pairs says the `+` region is closed under widening
//! the interval.
//!
//! The cell partition of an admissible sign type takes, for each `k`, the
//! largest total size of a disjoint union of `k` connected subsets
//! (subsets all of whose pairs are `+`); the difference sequence is weakly
//! decreasing. Cells map to nilpotent orbits by taking the dual partition
//! as a Jordan type, and every cell has a canonical representative weight
//! built from an arithmetic sequence with gaps of exactly `l` between
//! consecutive members of each congruence class.

use crate::error::Error;
use crate::partitions::Partition;
use crate::root_system::Weight;

/// A `{+, 0}` assignment on the positive roots of `A_n`, stored on pairs
/// `(i, j)` with `0 <= i < j <= n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignType {
    n: usize,
    plus: Vec<bool>,
}

impl SignType {
    /// The all-zero sign type for `A_n` (`n >= 1`).
    pub fn all_zero(n: usize) -> Self {
        assert!(n >= 1);
        let points = n + 1;
        SignType {
            n,
            plus: vec![false; points * points],
        }
    }

    /// Rank of the ambient `A_n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of points `n + 1` the pairs are drawn from.
    pub fn points(&self) -> usize {
        self.n + 1
    }

    pub fn num_pairs(&self) -> usize {
        self.points() * (self.points() - 1) / 2
    }

    pub fn plus(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < j && j <= self.n);
        self.plus[i * self.points() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < j && j <= self.n);
        let points = self.points();
        self.plus[i * points + j] = value;
    }

    /// The signs in row-major pair order `(0,1), (0,2), ..., (1,2), ...`
    /// as a string of `+` and `0`.
    pub fn row_major_string(&self) -> String {
        let mut s = String::with_capacity(self.num_pairs());
        for i in 0..self.points() {
            for j in (i + 1)..self.points() {
                s.push(if self.plus(i, j) { '+' } else { '0' });
            }
        }
        s
    }

    /// Closure of `+` under passing to wider intervals, checked on all
    /// triples.
    pub fn is_admissible(&self) -> bool {
        let points = self.points();
        for i in 0..points {
            for j in (i + 1)..points {
                for k in (j + 1)..points {
                    if self.plus(i, j) && !self.plus(i, k) {
                        return false;
                    }
                    if self.plus(j, k) && !self.plus(i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The sign type of a dominant weight: `(i, j)` is `+` iff the shifted
/// pairing over the corresponding root reaches `l`, i.e.
/// `sum_{k=i..j-1} (lambda_k + 1) >= l`.
pub fn sign_type_of_weight(l: i64, lambda: &Weight) -> Result<SignType, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let n = lambda.rank();
    assert!(n >= 1, "sign types need rank >= 1");
    // prefix[j] = sum_{k < j} (lambda_k + 1)
    let mut prefix = vec![0i64; n + 1];
    for (k, &c) in lambda.coords().iter().enumerate() {
        prefix[k + 1] = prefix[k] + c + 1;
    }
    let mut f = SignType::all_zero(n);
    for i in 0..=n {
        for j in (i + 1)..=n {
            if prefix[j] - prefix[i] >= l {
                f.set(i, j, true);
            }
        }
    }
    Ok(f)
}

/// All `{+,0}` assignments on the pairs of `points` elements, in the order
/// given by reading the row-major pair positions as binary digits. Small
/// point counts only.
pub fn enumerate_sign_types(points: usize) -> Result<Vec<SignType>, Error> {
    if !(2..=6).contains(&points) {
        return Err(Error::TooLarge(format!(
            "sign type enumeration supports 2..=6 points, got {points}"
        )));
    }
    let n = points - 1;
    let pair_list: Vec<(usize, usize)> = (0..points)
        .flat_map(|i| ((i + 1)..points).map(move |j| (i, j)))
        .collect();
    let total = 1usize << pair_list.len();
    let mut out = Vec::with_capacity(total);
    for bits in 0..total {
        let mut f = SignType::all_zero(n);
        for (pos, &(i, j)) in pair_list.iter().enumerate() {
            if bits >> pos & 1 == 1 {
                f.set(i, j, true);
            }
        }
        out.push(f);
    }
    Ok(out)
}

/// Turn a `k -> max cover` map into the difference-sequence partition of
/// `points`, verifying Greene's weak decrease.
fn parts_from_max_cover(
    points: usize,
    mut max_cover: impl FnMut(usize) -> u32,
) -> Result<Partition, Error> {
    let mut parts: Vec<u32> = Vec::new();
    let mut covered = 0u32;
    for k in 1..=points {
        let m_k = max_cover(k);
        let part = m_k - covered;
        if part == 0 {
            break;
        }
        parts.push(part);
        covered = m_k;
        if covered as usize == points {
            break;
        }
    }
    if covered as usize != points {
        return Err(Error::Internal(format!(
            "clique covers reach only {covered} of {points} points"
        )));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotAPartition(format!("{parts:?}")));
    }
    Partition::new(parts)
}

/// The cell partition of an admissible sign type.
///
/// Uses the chain characterization available under admissibility: a subset
/// is connected iff each pair of consecutive elements is `+`. Maximal
/// covers by `k` disjoint chains are computed by a memoized scan over
/// point subsets, splitting on the lowest uncovered point.
pub fn greene_partition(f: &SignType) -> Result<Partition, Error> {
    if !f.is_admissible() {
        return Err(Error::NotAdmissible);
    }
    let points = f.points();
    if points > 16 {
        return Err(Error::TooLarge(format!(
            "cell partition subset scan capped at 16 points, got {points}"
        )));
    }
    let size = 1usize << points;
    let mut chains_by_min: Vec<Vec<u32>> = vec![Vec::new(); points];
    for mask in 1..size as u32 {
        let mut prev: Option<usize> = None;
        let mut ok = true;
        for b in 0..points {
            if mask >> b & 1 == 1 {
                if let Some(p) = prev {
                    if !f.plus(p, b) {
                        ok = false;
                        break;
                    }
                }
                prev = Some(b);
            }
        }
        if ok {
            chains_by_min[mask.trailing_zeros() as usize].push(mask);
        }
    }

    let mut prev_layer = vec![0u8; size];
    let mut layers: Vec<Vec<u8>> = Vec::new();
    for _ in 1..=points {
        let mut layer = vec![0u8; size];
        for mask in 1..size {
            let low = (mask as u32).trailing_zeros() as usize;
            let mut best = layer[mask & (mask - 1)];
            for &c in &chains_by_min[low] {
                let c = c as usize;
                if c & mask == c {
                    let v = (c.count_ones() as u8) + prev_layer[mask & !c];
                    best = best.max(v);
                }
            }
            layer[mask] = best;
        }
        layers.push(layer.clone());
        prev_layer = layer;
    }
    parts_from_max_cover(points, |k| layers[k - 1][size - 1] as u32)
}

/// Exhaustive reference computation of the cell partition: connected
/// subsets are found by checking every pair, and disjoint families are
/// enumerated outright. Kept deliberately independent of
/// [`greene_partition`]'s chain characterization. Capped at 8 points.
pub fn greene_partition_brute(f: &SignType) -> Result<Partition, Error> {
    let points = f.points();
    if points > 8 {
        return Err(Error::TooLarge(format!(
            "exhaustive cell partition capped at 8 points, got {points}"
        )));
    }
    let size = 1u32 << points;
    let mut cliques_by_min: Vec<Vec<u32>> = vec![Vec::new(); points];
    for mask in 1..size {
        let bits: Vec<usize> = (0..points).filter(|b| mask >> b & 1 == 1).collect();
        let mut ok = true;
        'pairs: for (a, &i) in bits.iter().enumerate() {
            for &j in &bits[a + 1..] {
                if !f.plus(i, j) {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            cliques_by_min[mask.trailing_zeros() as usize].push(mask);
        }
    }

    fn best(mask: u32, k: usize, cliques_by_min: &[Vec<u32>]) -> u32 {
        if mask == 0 || k == 0 {
            return 0;
        }
        let low = mask.trailing_zeros() as usize;
        // Either the lowest point stays uncovered, or it belongs to one of
        // the chosen cliques.
        let mut out = best(mask & (mask - 1), k, cliques_by_min);
        for &c in &cliques_by_min[low] {
            if c & mask == c {
                out = out.max(c.count_ones() + best(mask & !c, k - 1, cliques_by_min));
            }
        }
        out
    }

    let full = size - 1;
    parts_from_max_cover(points, |k| best(full, k, &cliques_by_min))
}

/// Cell partition of a dominant weight: the composite of
/// [`sign_type_of_weight`] and [`greene_partition`].
pub fn weight_cell_partition(l: i64, lambda: &Weight) -> Result<Partition, Error> {
    greene_partition(&sign_type_of_weight(l, lambda)?)
}

/// The nilpotent orbit attached to a cell partition: Jordan blocks given
/// by the dual partition.
pub fn lusztig_orbit(p: &Partition) -> Partition {
    p.dual()
}

/// Canonical representative weight of the cell of partition `p` inside
/// `A_n` with `n + 1 = |p|`, together with the underlying strictly
/// decreasing sequence `x`.
///
/// The sequence starts with `x_j = p'_1 - j + 1` on the first `p'_1`
/// entries and continues block by block, the `j`-th entry of block `k`
/// being `x_j - k l`. Consecutive members of each congruence class of
/// `x mod l` then differ by exactly `l`, the classes have sizes `p`, and
/// the weight of consecutive differences is dominant.
pub fn special_weight(p: &Partition, l: i64) -> Result<(Vec<i64>, Weight), Error> {
    let total = p.total() as usize;
    if total < 2 {
        return Err(Error::InvalidPartition(format!(
            "cell representatives need a partition of at least 2, got {p}"
        )));
    }
    if l % 2 == 0 {
        return Err(Error::InvalidLevel(format!("l = {l} must be odd")));
    }
    if l <= total as i64 {
        return Err(Error::InvalidLevel(format!(
            "l = {l} must exceed {total} (the Coxeter number of A_{})",
            total - 1
        )));
    }
    let dual = p.dual();
    let blocks = dual.parts();
    let base = blocks[0] as i64;
    let mut x = vec![0i64; total];
    let mut offset = 0usize;
    for (k, &block) in blocks.iter().enumerate() {
        for j0 in 1..=block as usize {
            x[offset + j0 - 1] = (base - j0 as i64 + 1) - k as i64 * l;
        }
        offset += block as usize;
    }

    if x.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Internal(format!(
            "representative sequence for {p} is not strictly decreasing: {x:?}"
        )));
    }
    // Class structure: entry j0 of each block belongs to the class of the
    // base entry j0; consecutive class members must differ by exactly l.
    let mut class_sizes: Vec<u32> = Vec::new();
    for j0 in 1..=blocks[0] as usize {
        let mut class = Vec::new();
        let mut start = 0usize;
        for &block in blocks {
            if j0 <= block as usize {
                class.push(x[start + j0 - 1]);
            }
            start += block as usize;
        }
        for pair in class.windows(2) {
            if pair[0] - pair[1] != l {
                return Err(Error::Internal(format!(
                    "class gap {} is not l = {l} for {p}",
                    pair[0] - pair[1]
                )));
            }
        }
        class_sizes.push(class.len() as u32);
    }
    class_sizes.sort_by(|a, b| b.cmp(a));
    if class_sizes != p.parts() {
        return Err(Error::Internal(format!(
            "class sizes {class_sizes:?} do not recover {p}"
        )));
    }

    let lambda = Weight::new((0..total - 1).map(|i| x[i] - x[i + 1] - 1).collect());
    if !lambda.is_dominant() {
        return Err(Error::Internal(format!(
            "representative weight {lambda} of {p} is not dominant"
        )));
    }
    Ok((x, lambda))
}
