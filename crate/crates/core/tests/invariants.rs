//! Cross-module invariants the acceptance sweeps do not pin directly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use supvar::cells::{lusztig_orbit, sign_type_of_weight, weight_cell_partition};
use supvar::dimension::expected_order;
use supvar::linkage::{fundamental_representative, is_linked, support_of_induced, LinkageParams};
use supvar::partitions::Partition;
use supvar::root_system::{build_root_system, CartanDatum, CartanFamily};
use supvar::verify::dominant_weights_box;
use supvar::Weight;

/// The vanishing order equals half the support codimension whenever the
/// parabolic match is conjugacy-verified.
#[test]
fn order_matches_half_codimension_on_boxes() {
    for (family, rank, l) in [
        (CartanFamily::A, 2, 5i64),
        (CartanFamily::A, 3, 5),
        (CartanFamily::B, 2, 5),
    ] {
        let rs = build_root_system(CartanDatum::new(family, rank).unwrap()).unwrap();
        let params = LinkageParams::new(&rs, l).unwrap();
        for w in dominant_weights_box(rank, 6) {
            let report = support_of_induced(&params, &w).unwrap();
            assert!(report.conjugacy_verified, "{family}{rank} w={w}");
            let a = expected_order(&params, &w).unwrap() as usize;
            assert_eq!(report.codim, 2 * a, "{family}{rank} w={w}");
            assert_eq!(report.codim % 2, 0);
        }
    }
}

/// At the zero weight the cell partition is all ones and the support is
/// the whole nilpotent cone.
#[test]
fn zero_weight_is_the_compatible_pair() {
    for n in 2..=4usize {
        let rs = build_root_system(CartanDatum::new(CartanFamily::A, n).unwrap()).unwrap();
        let l = supvar::verify::smallest_odd_level(rs.coxeter_number());
        let params = LinkageParams::new(&rs, l).unwrap();
        let zero = Weight::zero(n);
        let cell = weight_cell_partition(l, &zero).unwrap();
        assert_eq!(cell.parts(), vec![1; n + 1]);
        let report = support_of_induced(&params, &zero).unwrap();
        assert_eq!(report.codim, 0);
        assert_eq!(
            report.jordan_type.unwrap(),
            lusztig_orbit(&cell),
            "n={n} l={l}"
        );
    }
}

/// Away from the canonical cell representatives the two routes measure
/// different modules and genuinely differ: at A2, l=5, lambda=(5,0) the
/// cell partition is (2,1) while the singular subsystem is empty, so the
/// support route gives the full-cone Jordan type (3).
#[test]
fn routes_differ_off_the_special_weights() {
    let rs = build_root_system(CartanDatum::new(CartanFamily::A, 2).unwrap()).unwrap();
    let params = LinkageParams::new(&rs, 5).unwrap();
    let lambda = Weight::new(vec![5, 0]);
    let cell = weight_cell_partition(5, &lambda).unwrap();
    assert_eq!(cell, Partition::new(vec![2, 1]).unwrap());
    let report = support_of_induced(&params, &lambda).unwrap();
    assert!(report.r_lambda.is_empty());
    assert_eq!(report.jordan_type.unwrap().parts(), &[3]);
}

/// Independent uniqueness check for the fundamental domain: enumerate
/// every weight of the closed domain, expand its full dot orbit by BFS
/// over all affine reflections (every positive root, several translation
/// multiples) inside a large coordinate box, and confirm the orbit meets
/// the domain nowhere else while every orbit point maps back to the same
/// representative.
#[test]
fn fundamental_domain_meets_each_orbit_once() {
    use std::collections::{HashSet, VecDeque};
    use supvar::linkage::affine_dot_reflect;

    for (family, rank, l) in [
        (CartanFamily::A, 1, 3i64),
        (CartanFamily::A, 2, 5),
        (CartanFamily::B, 2, 5),
    ] {
        let rs = build_root_system(CartanDatum::new(family, rank).unwrap()).unwrap();
        let params = LinkageParams::new(&rs, l).unwrap();
        let wall = rs.highest_short_root();

        // All integral weights of the closed fundamental domain.
        let mut domain = Vec::new();
        let mut coords = vec![-1i64; rank];
        'next: loop {
            let w = Weight::new(coords.clone());
            if rs.shifted_pairing(&w, wall) <= l {
                domain.push(w);
            }
            for c in coords.iter_mut() {
                if *c < l {
                    *c += 1;
                    continue 'next;
                }
                *c = -1;
            }
            break;
        }
        assert!(!domain.is_empty());

        let bound = 4 * l;
        for x in &domain {
            assert_eq!(&fundamental_representative(&params, x), x);
            let mut seen: HashSet<Weight> = HashSet::from([x.clone()]);
            let mut queue = VecDeque::from([x.clone()]);
            while let Some(w) = queue.pop_front() {
                let mut neighbors: Vec<Weight> = (0..rank).map(|i| rs.dot_reflect(i, &w)).collect();
                for root in 0..rs.num_positive_roots() {
                    for k in -2..=2 {
                        neighbors.push(affine_dot_reflect(&params, root, k, &w));
                    }
                }
                for nb in neighbors {
                    if nb.coords().iter().any(|&c| c.abs() > bound) {
                        continue;
                    }
                    if seen.insert(nb.clone()) {
                        queue.push_back(nb);
                    }
                }
            }
            assert!(
                seen.len() > l as usize,
                "{family}{rank} l={l}: orbit of {x} barely explored ({} points)",
                seen.len()
            );
            for other in &domain {
                if other != x {
                    assert!(
                        !seen.contains(other),
                        "{family}{rank} l={l}: domain points {x} and {other} share an orbit"
                    );
                }
            }
            for w in &seen {
                assert_eq!(
                    &fundamental_representative(&params, w),
                    x,
                    "{family}{rank} l={l}: orbit of {x} contains {w} with a different representative"
                );
            }
        }
    }
}

/// Support reports stay structurally sound on a non-simply-laced
/// exceptional type: even codimension, verified conjugacy (|W(F4)| is
/// small), no Jordan type outside type A, and the order/codimension
/// relation.
#[test]
fn f4_support_reports_are_structurally_sound() {
    let f4 = build_root_system(CartanDatum::new(CartanFamily::F, 4).unwrap()).unwrap();
    let params = LinkageParams::new(&f4, 13).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut nonempty = 0;
    for _ in 0..40 {
        let lambda = Weight::new((0..4).map(|_| rng.gen_range(0..=25)).collect());
        let report = support_of_induced(&params, &lambda).unwrap();
        assert_eq!(report.codim % 2, 0, "{lambda}");
        assert!(report.conjugacy_verified, "{lambda}");
        assert!(report.jordan_type.is_none());
        let a = expected_order(&params, &lambda).unwrap() as usize;
        assert_eq!(report.codim, 2 * a, "{lambda}");
        if !report.r_lambda.is_empty() {
            nonempty += 1;
        }
    }
    assert!(nonempty > 0, "sweep never hit a singular weight");
}

/// Weight sign types are admissible at every rank up to 5, for any level.
#[test]
fn weight_sign_types_are_admissible_per_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for rank in 1..=5usize {
        let l = supvar::verify::smallest_odd_level(rank as i64 + 1);
        for _ in 0..1000 {
            let lambda = Weight::new((0..rank).map(|_| rng.gen_range(0..=2 * l)).collect());
            let f = sign_type_of_weight(l, &lambda).unwrap();
            assert!(f.is_admissible(), "rank {rank} weight {lambda}");
        }
    }
}

/// Linkage is an equivalence relation on a sample: representatives are
/// canonical, so reflexivity, symmetry, and transitivity reduce to
/// equality and are spot-checked here.
#[test]
fn linkage_is_an_equivalence_on_a_sample() {
    let rs = build_root_system(CartanDatum::new(CartanFamily::A, 2).unwrap()).unwrap();
    let params = LinkageParams::new(&rs, 5).unwrap();
    let sample: Vec<Weight> = (-4..=8)
        .flat_map(|a| (-4..=8).map(move |b| Weight::new(vec![a, b])))
        .collect();
    for x in &sample {
        assert!(is_linked(&params, x, x));
        let rep = fundamental_representative(&params, x);
        assert!(is_linked(&params, x, &rep));
        for y in &sample {
            assert_eq!(is_linked(&params, x, y), is_linked(&params, y, x));
        }
    }
    // Transitivity over classes: group by representative and verify
    // every pair inside a class is linked.
    use std::collections::HashMap;
    let mut classes: HashMap<Weight, Vec<&Weight>> = HashMap::new();
    for x in &sample {
        classes
            .entry(fundamental_representative(&params, x))
            .or_default()
            .push(x);
    }
    for (rep, members) in &classes {
        assert!(rep.coords().iter().all(|&c| c >= -1));
        for m in members {
            assert!(is_linked(&params, m, rep));
        }
    }
}
