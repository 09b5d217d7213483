//! Root systems in exact integer coordinates.
//!
//! Weights live in fundamental-weight coordinates and roots in simple-root
//! coordinates, so every pairing is an integer dot product. Coroot
//! coordinates are generated alongside root coordinates during the
//! reflection closure; the coroot side uses the transposed Cartan matrix.
//!
//! The Cartan matrix convention is `a[i][j] = <alpha_j, coroot(alpha_i)>`,
//! i.e. column `j` holds the fundamental coordinates of the simple root
//! `alpha_j`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;

/// Default bound on the rank of a constructible root system.
pub const DEFAULT_MAX_RANK: usize = 8;

/// Hard ceiling on Weyl group enumeration, independent of the caller's cap.
const WEYL_ENUMERATION_LIMIT: u64 = 10_000_000;

/// The seven families of irreducible finite root systems.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CartanFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanFamily::A => 'A',
            CartanFamily::B => 'B',
            CartanFamily::C => 'C',
            CartanFamily::D => 'D',
            CartanFamily::E => 'E',
            CartanFamily::F => 'F',
            CartanFamily::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for CartanFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" | "a" => Ok(CartanFamily::A),
            "B" | "b" => Ok(CartanFamily::B),
            "C" | "c" => Ok(CartanFamily::C),
            "D" | "d" => Ok(CartanFamily::D),
            "E" | "e" => Ok(CartanFamily::E),
            "F" | "f" => Ok(CartanFamily::F),
            "G" | "g" => Ok(CartanFamily::G),
            other => Err(Error::InvalidCartanDatum(format!(
                "unknown family {other:?}"
            ))),
        }
    }
}

/// The standard Cartan matrix of an irreducible type, in the convention
/// `a[i][j] = <alpha_j, coroot(alpha_i)>` with Bourbaki node numbering
/// (0-based). Assumes `(family, rank)` is a valid pair.
pub(crate) fn standard_cartan_matrix(family: CartanFamily, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let bond = |i: usize, j: usize, aij: i64, aji: i64, a: &mut Vec<Vec<i64>>| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match family {
        CartanFamily::A => {
            for i in 0..rank.saturating_sub(1) {
                bond(i, i + 1, -1, -1, &mut a);
            }
        }
        CartanFamily::B => {
            // alpha_{rank-1} is the short root.
            for i in 0..rank - 2 {
                bond(i, i + 1, -1, -1, &mut a);
            }
            bond(rank - 2, rank - 1, -1, -2, &mut a);
        }
        CartanFamily::C => {
            // alpha_{rank-1} is the long root.
            for i in 0..rank - 2 {
                bond(i, i + 1, -1, -1, &mut a);
            }
            bond(rank - 2, rank - 1, -2, -1, &mut a);
        }
        CartanFamily::D => {
            for i in 0..rank - 2 {
                bond(i, i + 1, -1, -1, &mut a);
            }
            bond(rank - 3, rank - 1, -1, -1, &mut a);
            a[rank - 2][rank - 1] = 0;
            a[rank - 1][rank - 2] = 0;
        }
        CartanFamily::E => {
            // Bourbaki numbering: node 2 hangs off node 4; 0-based bonds.
            let bonds: &[(usize, usize)] = match rank {
                6 => &[(0, 2), (2, 3), (1, 3), (3, 4), (4, 5)],
                7 => &[(0, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6)],
                _ => &[(0, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7)],
            };
            for &(i, j) in bonds {
                bond(i, j, -1, -1, &mut a);
            }
        }
        CartanFamily::F => {
            // alpha_0, alpha_1 long; alpha_2, alpha_3 short.
            bond(0, 1, -1, -1, &mut a);
            bond(1, 2, -1, -2, &mut a);
            bond(2, 3, -1, -1, &mut a);
        }
        CartanFamily::G => {
            // alpha_0 short, alpha_1 long.
            bond(0, 1, -3, -1, &mut a);
        }
    }
    a
}

fn valid_rank(family: CartanFamily, rank: usize) -> bool {
    match family {
        CartanFamily::A => rank >= 1,
        CartanFamily::B | CartanFamily::C => rank >= 2,
        CartanFamily::D => rank >= 4,
        CartanFamily::E => (6..=8).contains(&rank),
        CartanFamily::F => rank == 4,
        CartanFamily::G => rank == 2,
    }
}

fn expected_positive_count(family: CartanFamily, rank: usize) -> usize {
    match family {
        CartanFamily::A => rank * (rank + 1) / 2,
        CartanFamily::B | CartanFamily::C => rank * rank,
        CartanFamily::D => rank * (rank - 1),
        CartanFamily::E => match rank {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        CartanFamily::F => 24,
        CartanFamily::G => 6,
    }
}

/// An indecomposable Cartan datum: family, rank, and the standard Cartan
/// matrix of that pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanDatum {
    family: CartanFamily,
    rank: usize,
    cartan: Vec<Vec<i64>>,
}

impl CartanDatum {
    /// Standard datum for `(family, rank)`, rejecting invalid pairs and
    /// ranks above [`DEFAULT_MAX_RANK`].
    pub fn new(family: CartanFamily, rank: usize) -> Result<Self, Error> {
        Self::with_rank_limit(family, rank, DEFAULT_MAX_RANK)
    }

    /// Same as [`CartanDatum::new`] with an explicit rank ceiling.
    pub fn with_rank_limit(family: CartanFamily, rank: usize, limit: usize) -> Result<Self, Error> {
        if !valid_rank(family, rank) {
            return Err(Error::InvalidCartanDatum(format!(
                "{family}{rank} is not a valid irreducible type"
            )));
        }
        if rank > limit {
            return Err(Error::InvalidCartanDatum(format!(
                "rank {rank} exceeds the configured limit {limit}"
            )));
        }
        let cartan = standard_cartan_matrix(family, rank);
        Ok(CartanDatum {
            family,
            rank,
            cartan,
        })
    }

    pub fn family(&self) -> CartanFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix entry `a[i][j] = <alpha_j, coroot(alpha_i)>`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The datum with the literally transposed Cartan matrix (arrows
    /// reversed, same node numbering). Swaps the B and C labels; for F and
    /// G the result is the standard matrix only up to relabeling, so this
    /// stays test-internal and exists to check root/coroot duality.
    #[cfg(test)]
    pub(crate) fn transposed(&self) -> CartanDatum {
        let family = match self.family {
            CartanFamily::B => CartanFamily::C,
            CartanFamily::C => CartanFamily::B,
            f => f,
        };
        let cartan = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[j][i]).collect())
            .collect();
        CartanDatum {
            family,
            rank: self.rank,
            cartan,
        }
    }
}

/// An integral weight in fundamental-weight coordinates, so the pairing
/// with the i-th simple coroot is exactly `coords[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Dominance: every fundamental coordinate nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Canonical pairing of a weight with a coroot given by its coordinates in
/// the simple-coroot basis.
pub fn pairing(weight: &Weight, coroot_coords: &[i64]) -> Result<i64, Error> {
    if weight.rank() != coroot_coords.len() {
        return Err(Error::DimensionMismatch(format!(
            "weight has rank {}, coroot has {} coordinates",
            weight.rank(),
            coroot_coords.len()
        )));
    }
    Ok(weight
        .coords()
        .iter()
        .zip(coroot_coords)
        .map(|(w, c)| w * c)
        .sum())
}

/// A root together with its coroot, both in simple(-co)root coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Root {
    pub root_coords: Vec<i64>,
    pub coroot_coords: Vec<i64>,
    pub height: i64,
    pub is_positive: bool,
}

impl Root {
    /// Height of the coroot inside the dual system, which equals
    /// `<rho, coroot>`.
    pub fn dual_height(&self) -> i64 {
        self.coroot_coords.iter().sum()
    }
}

/// A built irreducible root system: the positive roots in a deterministic
/// order (height, then lexicographic on root coordinates), plus the derived
/// constants used throughout the library.
///
/// Immutable after construction; all operations are pure, so a shared
/// reference can be used freely across threads.
pub struct RootSystem {
    datum: CartanDatum,
    positive_roots: Vec<Root>,
    rho: Weight,
    coxeter_number: i64,
    weyl_denominator: BigUint,
    highest_short_idx: usize,
    index_by_coords: HashMap<Vec<i64>, usize>,
    weyl_perms: OnceLock<Vec<Vec<u16>>>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootSystem({}{}, {} positive roots)",
            self.family(),
            self.rank(),
            self.num_positive_roots()
        )
    }
}

/// Generate the positive roots of `datum` by reflection closure and return
/// the assembled [`RootSystem`].
pub fn build_root_system(datum: CartanDatum) -> Result<RootSystem, Error> {
    let n = datum.rank();
    let a = datum.matrix();

    // Closure under simple reflections, acting simultaneously on root
    // coordinates (rows of A) and coroot coordinates (columns of A).
    let mut by_coords: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut r = vec![0i64; n];
        r[i] = 1;
        by_coords.insert(r.clone(), r.clone());
        queue.push_back(r);
    }
    while let Some(r) = queue.pop_front() {
        let c = by_coords[&r].clone();
        for i in 0..n {
            let p: i64 = (0..n).map(|j| a[i][j] * r[j]).sum();
            let mut r2 = r.clone();
            r2[i] -= p;
            if r2.iter().any(|&x| x < 0) || by_coords.contains_key(&r2) {
                continue;
            }
            let q: i64 = (0..n).map(|k| a[k][i] * c[k]).sum();
            let mut c2 = c.clone();
            c2[i] -= q;
            by_coords.insert(r2.clone(), c2);
            queue.push_back(r2);
        }
    }

    let mut positive_roots: Vec<Root> = by_coords
        .into_iter()
        .map(|(root_coords, coroot_coords)| {
            let height = root_coords.iter().sum();
            Root {
                root_coords,
                coroot_coords,
                height,
                is_positive: true,
            }
        })
        .collect();
    positive_roots.sort_by(|x, y| (x.height, &x.root_coords).cmp(&(y.height, &y.root_coords)));

    let expected = expected_positive_count(datum.family(), n);
    if positive_roots.len() != expected {
        return Err(Error::Internal(format!(
            "{}{} generated {} positive roots, expected {expected}",
            datum.family(),
            n,
            positive_roots.len()
        )));
    }

    let coxeter_number = 1 + positive_roots.iter().map(|r| r.height).max().unwrap();
    let mut weyl_denominator = BigUint::one();
    for root in &positive_roots {
        // <alpha, coroot(alpha)> = 2 for every root.
        let norm: i64 = root
            .root_coords
            .iter()
            .enumerate()
            .map(|(i, &ri)| ri * (0..n).map(|k| a[k][i] * root.coroot_coords[k]).sum::<i64>())
            .sum();
        if norm != 2 {
            return Err(Error::Internal(format!(
                "root {:?} pairs to {norm} with its own coroot",
                root.root_coords
            )));
        }
        let dh = root.dual_height();
        if dh < 1 || dh > coxeter_number - 1 {
            return Err(Error::Internal(format!(
                "<rho, coroot> = {dh} outside [1, h-1] for root {:?}",
                root.root_coords
            )));
        }
        weyl_denominator *= BigUint::from(dh as u64);
    }

    let highest_short_idx = positive_roots
        .iter()
        .enumerate()
        .max_by_key(|(_, r)| r.dual_height())
        .map(|(i, _)| i)
        .unwrap();

    let index_by_coords = positive_roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.root_coords.clone(), i))
        .collect();

    Ok(RootSystem {
        rho: Weight::new(vec![1; n]),
        datum,
        positive_roots,
        coxeter_number,
        weyl_denominator,
        highest_short_idx,
        index_by_coords,
        weyl_perms: OnceLock::new(),
    })
}

impl RootSystem {
    pub fn family(&self) -> CartanFamily {
        self.datum.family()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Dimension of the nilpotent cone, `2 |R_+|`.
    pub fn nilpotent_cone_dim(&self) -> usize {
        2 * self.positive_roots.len()
    }

    /// The weight with every fundamental coordinate 1 (half-sum of the
    /// positive roots).
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    /// `d_R`: the product of `<rho, coroot(alpha)>` over positive roots,
    /// i.e. the denominator of the Weyl dimension formula.
    pub fn weyl_denominator(&self) -> &BigUint {
        &self.weyl_denominator
    }

    /// The positive root whose coroot is the highest root of the dual
    /// system (the highest short root; the highest root when simply laced).
    /// Its coroot bounds every `<lambda + rho, coroot>` from above on
    /// dominant weights, so it carries the affine wall.
    pub fn highest_short_root(&self) -> &Root {
        &self.positive_roots[self.highest_short_idx]
    }

    pub fn index_of_positive_root(&self, root_coords: &[i64]) -> Option<usize> {
        self.index_by_coords.get(root_coords).copied()
    }

    /// `<lambda + rho, coroot(alpha)>` for a positive root of this system.
    pub fn shifted_pairing(&self, weight: &Weight, root: &Root) -> i64 {
        weight
            .coords()
            .iter()
            .zip(&root.coroot_coords)
            .map(|(w, c)| (w + 1) * c)
            .sum()
    }

    /// Fundamental coordinates of a vector given in simple-root
    /// coordinates (multiplication by the Cartan matrix).
    pub fn to_fundamental_coords(&self, root_coords: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| self.datum.entry(k, j) * root_coords[j])
                    .sum()
            })
            .collect()
    }

    /// Simple reflection `s_i` on a weight:
    /// `lambda - <lambda, coroot_i> alpha_i`.
    pub fn reflect(&self, i: usize, weight: &Weight) -> Weight {
        assert!(i < self.rank(), "simple index {i} out of range");
        let ci = weight.coords()[i];
        let coords = weight
            .coords()
            .iter()
            .enumerate()
            .map(|(k, &w)| w - ci * self.datum.entry(k, i))
            .collect();
        Weight::new(coords)
    }

    /// Dot-action simple reflection: `s_i . lambda = s_i(lambda + rho) - rho`.
    pub fn dot_reflect(&self, i: usize, weight: &Weight) -> Weight {
        assert!(i < self.rank(), "simple index {i} out of range");
        let ci = weight.coords()[i] + 1;
        let coords = weight
            .coords()
            .iter()
            .enumerate()
            .map(|(k, &w)| w - ci * self.datum.entry(k, i))
            .collect();
        Weight::new(coords)
    }

    /// Simple reflection on a vector in simple-root coordinates.
    pub fn reflect_root_coords(&self, i: usize, root_coords: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let p: i64 = (0..n)
            .map(|j| self.datum.entry(i, j) * root_coords[j])
            .sum();
        let mut out = root_coords.to_vec();
        out[i] -= p;
        out
    }

    /// Order of the finite Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank() as u64;
        let factorial = |m: u64| (1..=m).product::<u64>();
        match self.family() {
            CartanFamily::A => factorial(n + 1),
            CartanFamily::B | CartanFamily::C => (1u64 << n) * factorial(n),
            CartanFamily::D => (1u64 << (n - 1)) * factorial(n),
            CartanFamily::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            CartanFamily::F => 1_152,
            CartanFamily::G => 12,
        }
    }

    /// All Weyl group elements as permutations of the full root list
    /// (positive roots first, then their negatives), computed once and
    /// cached. Panics if the group order exceeds a hard internal limit;
    /// callers gate on [`RootSystem::weyl_order`] first.
    pub fn weyl_permutations(&self) -> &[Vec<u16>] {
        self.weyl_perms.get_or_init(|| {
            assert!(
                self.weyl_order() <= WEYL_ENUMERATION_LIMIT,
                "refusing to enumerate a Weyl group of order {}",
                self.weyl_order()
            );
            let m = self.positive_roots.len();
            let id_of = |coords: &[i64]| -> u16 {
                if coords.iter().any(|&c| c < 0) {
                    let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
                    (self.index_by_coords[&neg] + m) as u16
                } else {
                    self.index_by_coords[coords] as u16
                }
            };
            // Generator permutations on the 2m roots.
            let mut generators: Vec<Vec<u16>> = Vec::with_capacity(self.rank());
            for i in 0..self.rank() {
                let mut perm = vec![0u16; 2 * m];
                for (rid, slot) in perm.iter_mut().enumerate() {
                    let coords: Vec<i64> = if rid < m {
                        self.positive_roots[rid].root_coords.clone()
                    } else {
                        self.positive_roots[rid - m]
                            .root_coords
                            .iter()
                            .map(|c| -c)
                            .collect()
                    };
                    *slot = id_of(&self.reflect_root_coords(i, &coords));
                }
                generators.push(perm);
            }
            let identity: Vec<u16> = (0..2 * m as u16).collect();
            let mut seen: HashSet<Vec<u16>> = HashSet::new();
            seen.insert(identity.clone());
            let mut queue = VecDeque::from([identity]);
            let mut all = Vec::new();
            while let Some(w) = queue.pop_front() {
                for g in &generators {
                    let next: Vec<u16> = w.iter().map(|&r| g[r as usize]).collect();
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
                all.push(w);
            }
            all
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(family: CartanFamily, rank: usize) -> RootSystem {
        build_root_system(CartanDatum::new(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn rank_one_is_forced() {
        let r = rs(CartanFamily::A, 1);
        assert_eq!(r.num_positive_roots(), 1);
        assert_eq!(r.coxeter_number(), 2);
        assert_eq!(r.weyl_denominator(), &BigUint::from(1u32));
    }

    #[test]
    fn a2_by_hand() {
        let r = rs(CartanFamily::A, 2);
        let coords: Vec<&[i64]> = r
            .positive_roots()
            .iter()
            .map(|x| &x.root_coords[..])
            .collect();
        // height first, then lexicographic on root coordinates
        assert_eq!(coords, vec![&[0, 1][..], &[1, 0], &[1, 1]]);
        assert_eq!(r.coxeter_number(), 3);
        assert_eq!(r.weyl_denominator(), &BigUint::from(2u32));
    }

    #[test]
    fn a3_heights_and_denominator() {
        let r = rs(CartanFamily::A, 3);
        assert_eq!(r.num_positive_roots(), 6);
        assert_eq!(r.coxeter_number(), 4);
        let heights: Vec<i64> = r.positive_roots().iter().map(|x| x.height).collect();
        assert_eq!(heights, vec![1, 1, 1, 2, 2, 3]);
        assert_eq!(r.weyl_denominator(), &BigUint::from(12u32));
    }

    #[test]
    fn g2_table() {
        let r = rs(CartanFamily::G, 2);
        assert_eq!(r.num_positive_roots(), 6);
        assert_eq!(r.coxeter_number(), 6);
        let mut dual_heights: Vec<i64> =
            r.positive_roots().iter().map(|x| x.dual_height()).collect();
        dual_heights.sort();
        assert_eq!(dual_heights, vec![1, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn positive_counts_all_families() {
        let cases = [
            (CartanFamily::A, 5, 15),
            (CartanFamily::B, 3, 9),
            (CartanFamily::C, 4, 16),
            (CartanFamily::D, 5, 20),
            (CartanFamily::E, 6, 36),
            (CartanFamily::E, 7, 63),
            (CartanFamily::E, 8, 120),
            (CartanFamily::F, 4, 24),
            (CartanFamily::G, 2, 6),
        ];
        for (family, rank, count) in cases {
            let r = rs(family, rank);
            assert_eq!(r.num_positive_roots(), count, "{family}{rank}");
            for root in r.positive_roots() {
                assert!(root.height >= 1);
                assert!(root.dual_height() < r.coxeter_number());
            }
        }
    }

    #[test]
    fn invalid_data_rejected() {
        assert!(CartanDatum::new(CartanFamily::G, 3).is_err());
        assert!(CartanDatum::new(CartanFamily::F, 5).is_err());
        assert!(CartanDatum::new(CartanFamily::D, 3).is_err());
        assert!(CartanDatum::new(CartanFamily::A, 0).is_err());
        assert!(CartanDatum::new(CartanFamily::A, 9).is_err());
        assert!(CartanDatum::with_rank_limit(CartanFamily::A, 9, 10).is_ok());
    }

    #[test]
    fn pairing_examples() {
        let r = rs(CartanFamily::A, 2);
        for root in r.positive_roots().iter().filter(|x| x.height == 1) {
            assert_eq!(pairing(r.rho(), &root.coroot_coords).unwrap(), 1);
        }
        let theta = &r.positive_roots()[2];
        let lam = Weight::new(vec![4, 0]);
        assert_eq!(r.shifted_pairing(&lam, theta), 6);

        let r3 = rs(CartanFamily::A, 3);
        let top = r3.index_of_positive_root(&[1, 1, 1]).unwrap();
        let lam3 = Weight::new(vec![0, 3, 0]);
        assert_eq!(r3.shifted_pairing(&lam3, &r3.positive_roots()[top]), 6);

        assert!(pairing(&lam, &[1, 0, 0]).is_err());
    }

    #[test]
    fn reflection_examples() {
        let r2 = rs(CartanFamily::A, 2);
        assert_eq!(r2.reflect(0, &Weight::new(vec![1, 0])).coords(), &[-1, 1]);
        let r1 = rs(CartanFamily::A, 1);
        assert_eq!(r1.dot_reflect(0, &Weight::new(vec![3])).coords(), &[-5]);
        // A wall point is fixed by its dot reflection.
        let wall = Weight::new(vec![-1, 4]);
        assert_eq!(r2.dot_reflect(0, &wall), wall);
        // Both maps are involutions.
        let w = Weight::new(vec![2, -3]);
        assert_eq!(r2.reflect(1, &r2.reflect(1, &w)), w);
        assert_eq!(r2.dot_reflect(1, &r2.dot_reflect(1, &w)), w);
    }

    #[test]
    fn dominance() {
        assert!(Weight::zero(4).is_dominant());
        assert!(!Weight::new(vec![-1, 2]).is_dominant());
        assert!(Weight::new(vec![0, 3, 0]).is_dominant());
    }

    #[test]
    fn simple_reflection_permutes_other_positive_roots() {
        for (family, rank) in [
            (CartanFamily::A, 3),
            (CartanFamily::B, 3),
            (CartanFamily::G, 2),
            (CartanFamily::F, 4),
        ] {
            let r = rs(family, rank);
            for i in 0..rank {
                let mut image: Vec<Vec<i64>> = r
                    .positive_roots()
                    .iter()
                    .filter(|x| x.height > 1 || x.root_coords[i] != 1)
                    .map(|x| r.reflect_root_coords(i, &x.root_coords))
                    .collect();
                image.sort();
                let mut others: Vec<Vec<i64>> = r
                    .positive_roots()
                    .iter()
                    .filter(|x| x.height > 1 || x.root_coords[i] != 1)
                    .map(|x| x.root_coords.clone())
                    .collect();
                others.sort();
                assert_eq!(image, others, "{family}{rank} s_{i}");
            }
        }
    }

    #[test]
    fn simple_reflection_preserves_the_pairing_table() {
        for (family, rank) in [
            (CartanFamily::A, 3),
            (CartanFamily::B, 2),
            (CartanFamily::G, 2),
        ] {
            let r = rs(family, rank);
            let a = r.datum().matrix();
            // <root, coroot> from raw coordinate vectors
            let pair = |root: &[i64], coroot: &[i64]| -> i64 {
                (0..rank)
                    .map(|i| root[i] * (0..rank).map(|k| a[k][i] * coroot[k]).sum::<i64>())
                    .sum()
            };
            for i in 0..rank {
                for alpha in r.positive_roots() {
                    for beta in r.positive_roots() {
                        let sa = r.reflect_root_coords(i, &alpha.root_coords);
                        let sb_coords = r.reflect_root_coords(i, &beta.root_coords);
                        if sb_coords.iter().any(|&c| c < 0) {
                            continue; // beta = alpha_i
                        }
                        let sb = &r.positive_roots()[r.index_of_positive_root(&sb_coords).unwrap()];
                        assert_eq!(
                            pair(&sa, &sb.coroot_coords),
                            pair(&alpha.root_coords, &beta.coroot_coords),
                            "{family}{rank} s_{i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn duality_swaps_root_and_coroot_coordinates() {
        for (family, rank) in [
            (CartanFamily::B, 3),
            (CartanFamily::C, 4),
            (CartanFamily::G, 2),
            (CartanFamily::F, 4),
            (CartanFamily::A, 4),
        ] {
            let datum = CartanDatum::new(family, rank).unwrap();
            let transposed = datum.transposed();
            for i in 0..rank {
                for j in 0..rank {
                    assert_eq!(datum.entry(i, j), transposed.entry(j, i));
                }
            }
            if family == CartanFamily::B || family == CartanFamily::C {
                // transposing B gives the standard C matrix and vice versa
                assert_eq!(
                    transposed,
                    CartanDatum::new(transposed.family(), rank).unwrap()
                );
            }
            let r = build_root_system(datum).unwrap();
            let rd = build_root_system(transposed).unwrap();
            let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = r
                .positive_roots()
                .iter()
                .map(|x| (x.root_coords.clone(), x.coroot_coords.clone()))
                .collect();
            let mut dual_pairs: Vec<(Vec<i64>, Vec<i64>)> = rd
                .positive_roots()
                .iter()
                .map(|x| (x.coroot_coords.clone(), x.root_coords.clone()))
                .collect();
            pairs.sort();
            dual_pairs.sort();
            assert_eq!(pairs, dual_pairs, "{family}{rank}");
        }
    }

    #[test]
    fn weyl_permutation_count_matches_group_order() {
        for (family, rank) in [
            (CartanFamily::A, 3),
            (CartanFamily::B, 2),
            (CartanFamily::G, 2),
        ] {
            let r = rs(family, rank);
            assert_eq!(r.weyl_permutations().len() as u64, r.weyl_order());
        }
    }

    #[test]
    fn e8_sanity() {
        let r = rs(CartanFamily::E, 8);
        assert_eq!(r.num_positive_roots(), 120);
        assert_eq!(r.coxeter_number(), 30);
    }
}
