//! Affine Weyl group linkage and the support data of induced modules.
//!
//! The affine Weyl group acts on weights through the dot action; its
//! translations are by `l` times the root lattice, so the reflection walls
//! are exactly `<lambda + rho, coroot> in lZ`. The closed fundamental
//! domain is `0 <= <lambda + rho, coroot> <= l` over positive roots, and
//! its affine wall is carried by the coroot of the highest short root.
//!
//! For a weight `lambda`, the singular subsystem `R_lambda` collects the
//! positive roots whose shifted pairing is divisible by `l`. Its
//! Weyl-conjugate parabolic copy `R_J` determines the orbit-closure data of
//! the support: `dim = 2 (|R_+| - |R_{J,+}|)`, and, in type A, the Jordan
//! type of the Richardson orbit.

use std::collections::HashSet;
use std::fmt;

use crate::error::Error;
use crate::partitions::Partition;
use crate::root_system::{standard_cartan_matrix, CartanFamily, RootSystem, Weight};

/// Default bound on `|W|` for the exhaustive conjugacy search in
/// [`find_parabolic_j`]; beyond it only the type match is reported.
pub const DEFAULT_WEYL_CAP: u64 = 100_000;

/// A root system together with an admissible level `l`: odd, greater than
/// the Coxeter number, and prime to 3 in type G.
#[derive(Clone, Copy)]
pub struct LinkageParams<'a> {
    rs: &'a RootSystem,
    l: i64,
    weyl_cap: u64,
}

impl<'a> LinkageParams<'a> {
    pub fn new(rs: &'a RootSystem, l: i64) -> Result<Self, Error> {
        if l % 2 == 0 {
            return Err(Error::InvalidLevel(format!("l = {l} must be odd")));
        }
        if l <= rs.coxeter_number() {
            return Err(Error::InvalidLevel(format!(
                "l = {l} must exceed the Coxeter number {}",
                rs.coxeter_number()
            )));
        }
        if rs.family() == CartanFamily::G && l % 3 == 0 {
            return Err(Error::InvalidLevel(format!(
                "l = {l} must not be divisible by 3 in type G"
            )));
        }
        Ok(LinkageParams {
            rs,
            l,
            weyl_cap: DEFAULT_WEYL_CAP,
        })
    }

    pub fn with_weyl_cap(mut self, cap: u64) -> Self {
        self.weyl_cap = cap;
        self
    }

    pub fn rs(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn l(&self) -> i64 {
        self.l
    }
}

/// An irreducible Dynkin type, e.g. `A3`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CartanType {
    pub family: CartanFamily,
    pub rank: usize,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Render a type decomposition like `A1xA1`, or `-` when empty.
pub fn type_decomposition_string(types: &[CartanType]) -> String {
    if types.is_empty() {
        return "-".into();
    }
    types
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join("x")
}

/// The positive part of a closed root subsystem: member indices into the
/// ambient positive roots, the derived simple system, and the Dynkin type
/// decomposition. The full subsystem is `members` together with their
/// negatives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSubsystem {
    pub members: Vec<usize>,
    pub simple_system: Vec<usize>,
    pub type_decomposition: Vec<CartanType>,
}

impl RootSubsystem {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Total rank, i.e. the size of the simple system.
    pub fn rank(&self) -> usize {
        self.simple_system.len()
    }
}

/// Orbit-closure data of the support of the induced module of highest
/// weight `lambda`.
#[derive(Clone, Debug)]
pub struct SupportReport {
    pub r_lambda: RootSubsystem,
    /// Simple indices (0-based) of the matched parabolic subset J.
    pub parabolic: Vec<usize>,
    pub dim_u_j: usize,
    pub dim_support: usize,
    pub codim: usize,
    /// Jordan type of the Richardson orbit; emitted for type A only.
    pub jordan_type: Option<Partition>,
    pub conjugacy_verified: bool,
}

/// The singular subsystem `R_lambda`: positive roots whose shifted pairing
/// `<lambda + rho, coroot>` is divisible by `l`, with structure filled in
/// by [`subsystem_structure`].
pub fn r_lambda(params: &LinkageParams, lambda: &Weight) -> Result<RootSubsystem, Error> {
    let rs = params.rs();
    let members: Vec<usize> = rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, root)| rs.shifted_pairing(lambda, root).rem_euclid(params.l()) == 0)
        .map(|(i, _)| i)
        .collect();
    let (simple_system, type_decomposition) = subsystem_structure(rs, &members)?;
    Ok(RootSubsystem {
        members,
        simple_system,
        type_decomposition,
    })
}

/// Derive the simple system and type decomposition of a closed subsystem
/// given by the indices of its positive members.
///
/// A member is simple in the subsystem iff it is not the sum of two
/// members (compared in root coordinates). The Cartan matrix of the simple
/// system is computed from pairings and split into connected components,
/// each classified against the standard diagrams.
pub fn subsystem_structure(
    rs: &RootSystem,
    members: &[usize],
) -> Result<(Vec<usize>, Vec<CartanType>), Error> {
    if members.is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    let coords: Vec<&[i64]> = members
        .iter()
        .map(|&i| &rs.positive_roots()[i].root_coords[..])
        .collect();
    let member_set: HashSet<&[i64]> = coords.iter().copied().collect();
    let n = rs.rank();

    let mut simple_system = Vec::new();
    for (k, &gamma) in coords.iter().enumerate() {
        // gamma is composite iff gamma = a + b for members a, b
        let composite = coords.iter().any(|&a| {
            let b: Vec<i64> = (0..n).map(|i| gamma[i] - a[i]).collect();
            member_set.contains(&b[..])
        });
        if !composite {
            simple_system.push(members[k]);
        }
    }

    // Pairing table of the simple system: c[s][t] = <beta_t, coroot(beta_s)>.
    let k = simple_system.len();
    let mut cartan = vec![vec![0i64; k]; k];
    for (s, &si) in simple_system.iter().enumerate() {
        let coroot = &rs.positive_roots()[si].coroot_coords;
        // v[i] = <alpha_i, coroot(beta_s)>
        let v: Vec<i64> = (0..n)
            .map(|i| (0..n).map(|r| rs.datum().entry(r, i) * coroot[r]).sum())
            .collect();
        for (t, &ti) in simple_system.iter().enumerate() {
            let root = &rs.positive_roots()[ti].root_coords;
            cartan[s][t] = (0..n).map(|i| root[i] * v[i]).sum();
        }
    }
    for (s, row) in cartan.iter().enumerate() {
        if row[s] != 2 {
            return Err(Error::Internal(format!(
                "simple member pairs to {} with its own coroot",
                row[s]
            )));
        }
        if row.iter().enumerate().any(|(t, &c)| t != s && c > 0) {
            return Err(Error::UnclassifiableSubsystem);
        }
    }

    // Connected components of the Dynkin graph.
    let mut component_of = vec![usize::MAX; k];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut stack = vec![start];
        let mut comp = Vec::new();
        component_of[start] = id;
        while let Some(s) = stack.pop() {
            comp.push(s);
            for t in 0..k {
                if component_of[t] == usize::MAX && cartan[s][t] != 0 {
                    component_of[t] = id;
                    stack.push(t);
                }
            }
        }
        comp.sort();
        components.push(comp);
    }

    let mut type_decomposition = Vec::new();
    for comp in &components {
        let local: Vec<Vec<i64>> = comp
            .iter()
            .map(|&s| comp.iter().map(|&t| cartan[s][t]).collect())
            .collect();
        type_decomposition.push(classify_component(&local)?);
    }
    type_decomposition.sort();

    // Every member must be a nonnegative integer combination of the
    // simple system, and the classified type must account for exactly the
    // members present.
    let simple_coords: Vec<&[i64]> = simple_system
        .iter()
        .map(|&i| &rs.positive_roots()[i].root_coords[..])
        .collect();
    let mut memo: std::collections::HashMap<Vec<i64>, bool> = std::collections::HashMap::new();
    for &gamma in &coords {
        if !nonneg_combination(gamma.to_vec(), &simple_coords, &mut memo) {
            return Err(Error::Internal(format!(
                "member {gamma:?} is not a nonnegative combination of the simple system"
            )));
        }
    }
    let total: usize = type_decomposition
        .iter()
        .map(|t| expected_positive_count_of(*t))
        .sum();
    if total != members.len() {
        return Err(Error::Internal(format!(
            "type {} accounts for {total} positive roots, subsystem has {}",
            type_decomposition_string(&type_decomposition),
            members.len()
        )));
    }

    Ok((simple_system, type_decomposition))
}

/// Memoized search: can `target` be written as a sum of the given vectors
/// with nonnegative integer coefficients? All coordinates stay nonnegative
/// along the way, which bounds the recursion by the height.
fn nonneg_combination(
    target: Vec<i64>,
    summands: &[&[i64]],
    memo: &mut std::collections::HashMap<Vec<i64>, bool>,
) -> bool {
    if target.iter().all(|&x| x == 0) {
        return true;
    }
    if let Some(&hit) = memo.get(&target) {
        return hit;
    }
    let ok = summands.iter().any(|s| {
        if target.iter().zip(*s).all(|(t, v)| t >= v) {
            let rest: Vec<i64> = target.iter().zip(*s).map(|(t, v)| t - v).collect();
            nonneg_combination(rest, summands, memo)
        } else {
            false
        }
    });
    memo.insert(target, ok);
    ok
}

fn expected_positive_count_of(t: CartanType) -> usize {
    let r = t.rank;
    match t.family {
        CartanFamily::A => r * (r + 1) / 2,
        CartanFamily::B | CartanFamily::C => r * r,
        CartanFamily::D => r * (r - 1),
        CartanFamily::E => match r {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        CartanFamily::F => 24,
        CartanFamily::G => 6,
    }
}

/// Classify a connected generalized Cartan matrix against the standard
/// diagrams, trying families in the order A, B, C, D, E, F, G so that the
/// rank-2 double bond canonicalizes to B2.
fn classify_component(cartan: &[Vec<i64>]) -> Result<CartanType, Error> {
    let r = cartan.len();
    let candidates: &[CartanFamily] = &[
        CartanFamily::A,
        CartanFamily::B,
        CartanFamily::C,
        CartanFamily::D,
        CartanFamily::E,
        CartanFamily::F,
        CartanFamily::G,
    ];
    for &family in candidates {
        let ok = match family {
            CartanFamily::A => r >= 1,
            CartanFamily::B | CartanFamily::C => r >= 2,
            CartanFamily::D => r >= 4,
            CartanFamily::E => (6..=8).contains(&r),
            CartanFamily::F => r == 4,
            CartanFamily::G => r == 2,
        };
        if !ok {
            continue;
        }
        let standard = standard_cartan_matrix(family, r);
        if cartan_isomorphic(cartan, &standard) {
            return Ok(CartanType { family, rank: r });
        }
    }
    Err(Error::UnclassifiableSubsystem)
}

/// Does a vertex relabeling sigma exist with `a[sigma i][sigma j] = b[i][j]`?
fn cartan_isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let r = a.len();
    if b.len() != r {
        return false;
    }
    let mut sigma = vec![usize::MAX; r];
    let mut used = vec![false; r];
    fn assign(
        i: usize,
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        sigma: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let r = a.len();
        if i == r {
            return true;
        }
        for cand in 0..r {
            if used[cand] {
                continue;
            }
            let consistent =
                (0..i).all(|j| a[cand][sigma[j]] == b[i][j] && a[sigma[j]][cand] == b[j][i]);
            if consistent {
                sigma[i] = cand;
                used[cand] = true;
                if assign(i + 1, a, b, sigma, used) {
                    return true;
                }
                used[cand] = false;
                sigma[i] = usize::MAX;
            }
        }
        false
    }
    assign(0, a, b, &mut sigma, &mut used)
}

/// Positive roots supported on the simple subset `j` (0-based indices).
pub fn parabolic_members(rs: &RootSystem, j: &[usize]) -> Vec<usize> {
    let in_j: HashSet<usize> = j.iter().copied().collect();
    rs.positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, root)| {
            root.root_coords
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || in_j.contains(&i))
        })
        .map(|(i, _)| i)
        .collect()
}

/// Find a subset `J` of simple indices whose parabolic subsystem has the
/// same type decomposition as `sub`, preferring (in lexicographic order of
/// `J`) a subset for which an explicit Weyl group element carrying the
/// subsystem onto `R_J` is found. The explicit search runs only while
/// `|W|` is within the configured cap; otherwise the first type match is
/// returned unverified.
pub fn find_parabolic_j(
    params: &LinkageParams,
    sub: &RootSubsystem,
) -> Result<(Vec<usize>, bool), Error> {
    let rs = params.rs();
    if sub.is_empty() {
        return Ok((Vec::new(), true));
    }
    let size = sub.rank();
    let can_verify = rs.weyl_order() <= params.weyl_cap;
    let mut fallback: Option<Vec<usize>> = None;
    for j in subsets_of_size(rs.rank(), size) {
        let members = parabolic_members(rs, &j);
        let (_, types) = subsystem_structure(rs, &members)?;
        if types != sub.type_decomposition {
            continue;
        }
        if !can_verify {
            return Ok((j, false));
        }
        if fallback.is_none() {
            fallback = Some(j.clone());
        }
        if conjugate_onto(rs, &sub.members, &members) {
            return Ok((j, true));
        }
    }
    match fallback {
        Some(j) => Ok((j, false)),
        None => Err(Error::NoParabolicMatch(type_decomposition_string(
            &sub.type_decomposition,
        ))),
    }
}

/// Subsets of `{0..n-1}` of the given size in lexicographic order.
fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        start: usize,
        n: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let needed = size - current.len();
        for i in start..=n.saturating_sub(needed) {
            current.push(i);
            go(i + 1, n, size, current, out);
            current.pop();
        }
    }
    go(0, n, size, &mut current, &mut out);
    out
}

/// Is there `w` in the Weyl group with `w(±source) = ±target`? Both sides
/// are given by their positive member indices.
fn conjugate_onto(rs: &RootSystem, source: &[usize], target: &[usize]) -> bool {
    if source.len() != target.len() {
        return false;
    }
    if source.is_empty() {
        return true;
    }
    let m = rs.num_positive_roots();
    let target_set: HashSet<usize> = target.iter().copied().collect();
    rs.weyl_permutations().iter().any(|w| {
        source.iter().all(|&s| {
            let image = w[s] as usize;
            let pair = if image < m { image } else { image - m };
            target_set.contains(&pair)
        })
    })
}

/// Full support pipeline for a dominant weight: singular subsystem,
/// parabolic match, orbit-closure dimensions, and (type A) Jordan type.
pub fn support_of_induced(params: &LinkageParams, lambda: &Weight) -> Result<SupportReport, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let rs = params.rs();
    let sub = r_lambda(params, lambda)?;
    let (parabolic, conjugacy_verified) = find_parabolic_j(params, &sub)?;
    let r_j_count = parabolic_members(rs, &parabolic).len();
    let dim_u_j = rs.num_positive_roots() - r_j_count;
    let dim_support = 2 * dim_u_j;
    let codim = rs.nilpotent_cone_dim() - dim_support;

    let jordan_type = if rs.family() == CartanFamily::A {
        let n_plus_1 = (rs.rank() + 1) as u32;
        let mut parts: Vec<u32> = Vec::new();
        for t in &sub.type_decomposition {
            if t.family != CartanFamily::A {
                return Err(Error::Internal(format!(
                    "type-A ambient produced a {t} component"
                )));
            }
            parts.push(t.rank as u32 + 1);
        }
        parts.sort_by(|a, b| b.cmp(a));
        let base = Partition::new(parts)?;
        Some(base.padded_to(n_plus_1)?.dual())
    } else {
        None
    };

    Ok(SupportReport {
        r_lambda: sub,
        parabolic,
        dim_u_j,
        dim_support,
        codim,
        jordan_type,
        conjugacy_verified,
    })
}

/// The affine dot reflection `s_{alpha, k l}` at the positive root with the
/// given index: `lambda - (<lambda + rho, coroot> - k l) alpha`.
pub fn affine_dot_reflect(
    params: &LinkageParams,
    root_index: usize,
    k: i64,
    lambda: &Weight,
) -> Weight {
    let rs = params.rs();
    let root = &rs.positive_roots()[root_index];
    let c = rs.shifted_pairing(lambda, root) - k * params.l();
    let alpha = rs.to_fundamental_coords(&root.root_coords);
    let coords = lambda
        .coords()
        .iter()
        .zip(&alpha)
        .map(|(w, a)| w - c * a)
        .collect();
    Weight::new(coords)
}

/// The unique dot-orbit representative in the closed fundamental domain
/// `0 <= <mu + rho, coroot> <= l` over all positive roots. Walls are valid
/// fixed points, so the map is idempotent and constant on orbits.
pub fn fundamental_representative(params: &LinkageParams, lambda: &Weight) -> Weight {
    let rs = params.rs();
    let theta = rs.highest_short_root();
    let theta_fund = rs.to_fundamental_coords(&theta.root_coords);
    let mut mu = lambda.clone();
    // Each reflection strictly reduces the number of affine walls
    // separating mu from the fundamental domain, so this terminates.
    'outer: loop {
        for i in 0..rs.rank() {
            if mu.coords()[i] + 1 < 0 {
                mu = rs.dot_reflect(i, &mu);
                continue 'outer;
            }
        }
        let top = rs.shifted_pairing(&mu, theta);
        if top > params.l() {
            let c = top - params.l();
            let coords = mu
                .coords()
                .iter()
                .zip(&theta_fund)
                .map(|(w, a)| w - c * a)
                .collect();
            mu = Weight::new(coords);
            continue;
        }
        return mu;
    }
}

/// Two weights are linked iff their fundamental representatives coincide.
pub fn is_linked(params: &LinkageParams, a: &Weight, b: &Weight) -> bool {
    fundamental_representative(params, a) == fundamental_representative(params, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_root_system, CartanDatum};

    fn rs(family: CartanFamily, rank: usize) -> RootSystem {
        build_root_system(CartanDatum::new(family, rank).unwrap()).unwrap()
    }

    fn types(ts: &[(CartanFamily, usize)]) -> Vec<CartanType> {
        let mut v: Vec<CartanType> = ts
            .iter()
            .map(|&(family, rank)| CartanType { family, rank })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn params_validation() {
        let a2 = rs(CartanFamily::A, 2);
        assert!(LinkageParams::new(&a2, 4).is_err());
        assert!(LinkageParams::new(&a2, 3).is_err());
        assert!(LinkageParams::new(&a2, 5).is_ok());
        let g2 = rs(CartanFamily::G, 2);
        assert!(LinkageParams::new(&g2, 9).is_err());
        assert!(LinkageParams::new(&g2, 7).is_ok());
    }

    #[test]
    fn r_lambda_examples() {
        let a2 = rs(CartanFamily::A, 2);
        let p = LinkageParams::new(&a2, 5).unwrap();
        assert!(r_lambda(&p, &Weight::zero(2)).unwrap().is_empty());

        let sub = r_lambda(&p, &Weight::new(vec![0, 3])).unwrap();
        assert_eq!(sub.members, vec![2]);
        assert_eq!(sub.type_decomposition, types(&[(CartanFamily::A, 1)]));

        let sub = r_lambda(&p, &Weight::new(vec![4, 4])).unwrap();
        assert_eq!(sub.members, vec![0, 1, 2]);
        assert_eq!(sub.type_decomposition, types(&[(CartanFamily::A, 2)]));

        let a3 = rs(CartanFamily::A, 3);
        let p3 = LinkageParams::new(&a3, 5).unwrap();
        let sub = r_lambda(&p3, &Weight::new(vec![0, 3, 0])).unwrap();
        let coords: Vec<&[i64]> = sub
            .members
            .iter()
            .map(|&i| &a3.positive_roots()[i].root_coords[..])
            .collect();
        assert_eq!(coords, vec![&[0, 1, 1][..], &[1, 1, 0]]);
        assert_eq!(
            sub.type_decomposition,
            types(&[(CartanFamily::A, 1), (CartanFamily::A, 1)])
        );
    }

    #[test]
    fn subsystem_structure_examples() {
        let a3 = rs(CartanFamily::A, 3);
        assert_eq!(subsystem_structure(&a3, &[]).unwrap(), (vec![], vec![]));

        let i12 = a3.index_of_positive_root(&[1, 1, 0]).unwrap();
        let i23 = a3.index_of_positive_root(&[0, 1, 1]).unwrap();
        let (simple, t) = subsystem_structure(&a3, &[i12, i23]).unwrap();
        assert_eq!(simple, vec![i12, i23]);
        assert_eq!(t, types(&[(CartanFamily::A, 1), (CartanFamily::A, 1)]));

        let a2 = rs(CartanFamily::A, 2);
        let (simple, t) = subsystem_structure(&a2, &[0, 1, 2]).unwrap();
        assert_eq!(simple, vec![0, 1]);
        assert_eq!(t, types(&[(CartanFamily::A, 2)]));
    }

    #[test]
    fn parabolic_match_examples() {
        let a3 = rs(CartanFamily::A, 3);
        let p = LinkageParams::new(&a3, 5).unwrap();
        let sub = r_lambda(&p, &Weight::new(vec![0, 3, 0])).unwrap();
        let (j, verified) = find_parabolic_j(&p, &sub).unwrap();
        assert_eq!(j, vec![0, 2]);
        assert!(verified);

        let a2 = rs(CartanFamily::A, 2);
        let p2 = LinkageParams::new(&a2, 5).unwrap();
        let full = r_lambda(&p2, &Weight::new(vec![4, 4])).unwrap();
        assert_eq!(find_parabolic_j(&p2, &full).unwrap(), (vec![0, 1], true));
        let empty = r_lambda(&p2, &Weight::zero(2)).unwrap();
        assert_eq!(find_parabolic_j(&p2, &empty).unwrap(), (vec![], true));
    }

    #[test]
    fn short_and_long_a1_are_distinguished_in_b2() {
        let b2 = rs(CartanFamily::B, 2);
        let p = LinkageParams::new(&b2, 5).unwrap();
        let long_simple = b2.index_of_positive_root(&[1, 0]).unwrap();
        let short_simple = b2.index_of_positive_root(&[0, 1]).unwrap();
        // lambda = (4,0): the long simple root alpha_0 is singular.
        let long = r_lambda(&p, &Weight::new(vec![4, 0])).unwrap();
        assert_eq!(long.members, vec![long_simple]);
        let (j, verified) = find_parabolic_j(&p, &long).unwrap();
        assert_eq!(j, vec![0]);
        assert!(verified);
        // lambda = (0,4): the short simple root alpha_1 is singular; the
        // type-matching subset {0} is rejected by the conjugacy search.
        let short = r_lambda(&p, &Weight::new(vec![0, 4])).unwrap();
        assert_eq!(short.members, vec![short_simple]);
        let (j, verified) = find_parabolic_j(&p, &short).unwrap();
        assert_eq!(j, vec![1]);
        assert!(verified);
    }

    #[test]
    fn four_orthogonal_a1s_in_d4_have_no_parabolic_match() {
        // e1-e2, e1+e2, e3-e4, e3+e4: a closed A1^4 subsystem, while at
        // most three pairwise non-adjacent nodes exist in the D4 diagram.
        let d4 = rs(CartanFamily::D, 4);
        let members: Vec<usize> = [[1, 0, 0, 0], [1, 2, 1, 1], [0, 0, 1, 0], [0, 0, 0, 1]]
            .iter()
            .map(|c| d4.index_of_positive_root(c).unwrap())
            .collect();
        let (simple, decomposition) = subsystem_structure(&d4, &members).unwrap();
        assert_eq!(simple.len(), 4);
        assert_eq!(decomposition, types(&[(CartanFamily::A, 1); 4]));
        let p = LinkageParams::new(&d4, 7).unwrap();
        let sub = RootSubsystem {
            members,
            simple_system: simple,
            type_decomposition: decomposition,
        };
        assert!(matches!(
            find_parabolic_j(&p, &sub),
            Err(Error::NoParabolicMatch(_))
        ));
    }

    #[test]
    fn conjugacy_search_respects_the_weyl_cap() {
        let b2 = rs(CartanFamily::B, 2);
        let p = LinkageParams::new(&b2, 5).unwrap().with_weyl_cap(1);
        let short = r_lambda(&p, &Weight::new(vec![0, 4])).unwrap();
        // With the search disabled only the first type match is reported.
        let (j, verified) = find_parabolic_j(&p, &short).unwrap();
        assert_eq!(j, vec![0]);
        assert!(!verified);
    }

    #[test]
    fn support_examples() {
        let a2 = rs(CartanFamily::A, 2);
        let p = LinkageParams::new(&a2, 5).unwrap();

        let zero = support_of_induced(&p, &Weight::zero(2)).unwrap();
        assert_eq!(zero.parabolic, Vec::<usize>::new());
        assert_eq!(zero.dim_support, 6);
        assert_eq!(zero.codim, 0);
        assert_eq!(zero.jordan_type.unwrap().parts(), &[3]);

        let sub = support_of_induced(&p, &Weight::new(vec![0, 3])).unwrap();
        assert_eq!(sub.dim_support, 4);
        assert_eq!(sub.codim, 2);
        assert_eq!(sub.jordan_type.unwrap().parts(), &[2, 1]);

        let st = support_of_induced(&p, &Weight::new(vec![4, 4])).unwrap();
        assert_eq!(st.parabolic, vec![0, 1]);
        assert_eq!(st.dim_support, 0);
        assert_eq!(st.codim, 6);
        assert_eq!(st.jordan_type.unwrap().parts(), &[1, 1, 1]);

        let a3 = rs(CartanFamily::A, 3);
        let p3 = LinkageParams::new(&a3, 5).unwrap();
        let mid = support_of_induced(&p3, &Weight::new(vec![0, 3, 0])).unwrap();
        assert_eq!(mid.dim_support, 8);
        assert_eq!(mid.codim, 4);
        assert_eq!(mid.jordan_type.unwrap().parts(), &[2, 2]);

        assert!(support_of_induced(&p, &Weight::new(vec![-1, 0])).is_err());
    }

    #[test]
    fn representative_examples() {
        let a1 = rs(CartanFamily::A, 1);
        let p = LinkageParams::new(&a1, 5).unwrap();
        let rep = |x: i64| fundamental_representative(&p, &Weight::new(vec![x])).coords()[0];
        assert_eq!(rep(0), 0);
        assert_eq!(rep(7), 1);
        assert_eq!(rep(4), 4);

        assert!(is_linked(&p, &Weight::new(vec![1]), &Weight::new(vec![7])));
        assert!(!is_linked(&p, &Weight::new(vec![0]), &Weight::new(vec![4])));
        assert!(is_linked(&p, &Weight::new(vec![3]), &Weight::new(vec![3])));
    }

    #[test]
    fn representative_is_idempotent_and_orbit_invariant() {
        let a2 = rs(CartanFamily::A, 2);
        let p = LinkageParams::new(&a2, 5).unwrap();
        for lambda in [
            Weight::new(vec![7, -3]),
            Weight::new(vec![0, 11]),
            Weight::new(vec![-6, -6]),
        ] {
            let rep = fundamental_representative(&p, &lambda);
            assert_eq!(fundamental_representative(&p, &rep), rep);
            // Walk through a few explicit orbit elements.
            let mut mu = lambda.clone();
            for step in 0..24 {
                mu = match step % 3 {
                    0 => a2.dot_reflect(step % 2, &mu),
                    1 => affine_dot_reflect(&p, 2, 1, &mu),
                    _ => affine_dot_reflect(&p, step % 3, -1, &mu),
                };
                assert_eq!(fundamental_representative(&p, &mu), rep);
            }
        }
    }
}
