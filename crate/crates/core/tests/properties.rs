mod common;

use num_integer::Integer;
use proptest::prelude::*;

use seifert_core::obstruction::obstruction_divisor;
use seifert_core::rational::ext_gcd;
use seifert_core::structure::fop_subgroup;
use seifert_core::{
    decompose, ExtendedActionData, FiniteGroup, Fraction, GluingPair, Int, OrbifoldData, Order,
    Permutation, RationalAngle, SeifertPair, SeifertPresentation, TorusAutomorphism,
};

use common::ang;

fn coprime_pair(max_q: i64) -> impl Strategy<Value = (i64, i64)> {
    (1..=max_q, -200i64..=200).prop_filter("coprime", |(q, p)| q.gcd(p) == 1)
}

fn presentation() -> impl Strategy<Value = SeifertPresentation> {
    (0u64..4, prop::collection::vec(coprime_pair(40), 0..6))
        .prop_map(|(g, pairs)| SeifertPresentation::from_pairs(g, &pairs))
}

fn angle() -> impl Strategy<Value = RationalAngle> {
    (1i64..=30).prop_flat_map(|d| (0..d).prop_map(move |n| ang(n, d)))
}

fn unimodular() -> impl Strategy<Value = [[i64; 2]; 2]> {
    prop::array::uniform4(-4i64..=4)
        .prop_map(|[a, b, c, d]| [[a, b], [c, d]])
        .prop_filter("det ±1", |m| {
            (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() == 1
        })
}

fn automorphism() -> impl Strategy<Value = TorusAutomorphism> {
    (unimodular(), angle(), angle())
        .prop_map(|(m, a, b)| TorusAutomorphism::from_entries(m, [a, b]))
}

proptest! {
    #[test]
    fn normalize_is_idempotent(p in presentation()) {
        let n = p.normalize().unwrap();
        let again = n.to_presentation().normalize().unwrap();
        prop_assert_eq!(&again, &n);
        prop_assert_eq!(n.euler_number(), p.euler_number().unwrap());
        prop_assert!(p.equivalent(&n.to_presentation()).unwrap());
    }

    #[test]
    fn normal_form_has_reduced_pairs(p in presentation()) {
        let n = p.normalize().unwrap();
        for w in n.pairs().windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        for s in n.pairs() {
            prop_assert!(s.q > Int::from(1));
            prop_assert!(s.p > Int::from(0) && s.p < s.q);
        }
    }

    #[test]
    fn presentations_round_trip(p in presentation()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<SeifertPresentation>().unwrap(), p.clone());
        let n = p.normalize().unwrap();
        prop_assert_eq!(n.to_string().parse::<SeifertPresentation>().unwrap(), n.to_presentation());
    }

    #[test]
    fn euler_number_decides_among_same_exceptional_data(
        p in presentation(),
        shift in -5i64..=5,
    ) {
        // changing only b changes the Euler number and breaks equivalence
        let mut q = p.clone();
        q.pairs.push(SeifertPair::new(1, shift));
        prop_assert_eq!(p.equivalent(&q).unwrap(), shift == 0);
        let diff = p.euler_number().unwrap() - q.euler_number().unwrap();
        prop_assert_eq!(diff, Fraction::from_int(shift));
    }

    #[test]
    fn gluing_pair_invariants((q, p) in coprime_pair(60)) {
        let gp = GluingPair::for_pair(&SeifertPair::new(q, p)).unwrap();
        let (x, y) = (&gp.x, &gp.y);
        prop_assert_eq!(x * Int::from(q) - y * Int::from(p), Int::from(-1));
        prop_assert!(*y >= Int::from(0) && *y < Int::from(q.max(1)));
        let d = TorusAutomorphism::gluing(&gp);
        prop_assert_eq!(d.det(), Int::from(-1));
        prop_assert_eq!(gp.induced_fibration(), (Int::from(-q), y.clone()));
    }

    #[test]
    fn composition_is_associative(f in automorphism(), g in automorphism(), h in automorphism()) {
        prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
        prop_assert_eq!(f.compose(&g).det(), f.det() * g.det());
        prop_assert!(f.compose(&f.inverse()).is_identity());
        prop_assert!(f.inverse().compose(&f).is_identity());
    }

    #[test]
    fn composition_matches_evaluation(f in automorphism(), g in automorphism(), a in angle(), b in angle()) {
        let z = [a, b];
        prop_assert_eq!(f.compose(&g).apply(&z), f.apply(&g.apply(&z)));
    }

    #[test]
    fn finite_order_is_exact(f in automorphism()) {
        match f.order() {
            Order::Finite(k) => {
                let k: u32 = k.to_string().parse().unwrap();
                prop_assert!(f.pow(k).is_identity());
                let mut power = f.clone();
                for _ in 1..k {
                    prop_assert!(!power.is_identity());
                    power = power.compose(&f);
                }
            }
            Order::Infinite => prop_assert!(!f.matrix_has_finite_order()),
        }
    }

    #[test]
    fn ext_gcd_is_bezout(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        prop_assume!(a != 0 || b != 0);
        let (g, s, t) = ext_gcd(&Int::from(a), &Int::from(b)).unwrap();
        prop_assert_eq!(g.clone(), Int::from(a.gcd(&b)));
        prop_assert_eq!(s * Int::from(a) + t * Int::from(b), g);
    }

    #[test]
    fn cone_point_lowers_characteristic(genus in 0u64..3, cones in prop::collection::vec(2u64..12, 0..5), n in 2u64..12) {
        let o = OrbifoldData::closed(genus, cones).unwrap();
        let chi = o.euler_characteristic().unwrap();
        let bigger = o.with_cone_point(n).unwrap().euler_characteristic().unwrap();
        prop_assert_eq!(chi - bigger, Fraction::from_int(1) - Fraction::new(1, n).unwrap());
    }

    #[test]
    fn orbit_numbers_divide_order(
        cones in prop::collection::vec(2u64..7, 0..4),
        corners in prop::collection::vec(2u64..4, 0..3),
        k in 1u64..6,
    ) {
        let l = cones.iter().chain(corners.iter().map(|m| m * 2).collect::<Vec<_>>().iter()).fold(1, |a, b| a.lcm(b));
        let n = l * k;
        let o = OrbifoldData::new(0, cones, corners.clone(), !corners.is_empty()).unwrap();
        let orbits = o.possible_orbit_numbers(n).unwrap();
        prop_assert!(orbits.contains(&n));
        prop_assert!(orbits.iter().all(|d| n % d == 0));
        let g = orbits.iter().fold(0, |a, b| a.gcd(b));
        prop_assert_eq!(obstruction_divisor(n, &o).unwrap(), Int::from(g));
    }

    #[test]
    fn decompose_is_feasible_iff_gcd_divides(b in -500i64..500, orbits in prop::collection::vec(1u64..40, 1..5)) {
        let g = orbits.iter().fold(0, |a, o| a.gcd(o)) as i64;
        match decompose(&Int::from(b), &orbits) {
            Some(w) => {
                prop_assert_eq!(b % g, 0);
                prop_assert_eq!(w.total(), Int::from(b));
                prop_assert_eq!(w.orbit_numbers(), &orbits[..]);
            }
            None => prop_assert_ne!(b % g, 0),
        }
    }
}

/// Whether boundary maps compose like the group, checked on every pair.
fn composes(data: &ExtendedActionData) -> bool {
    let group = data.group();
    group.elements().all(|g1| {
        group.elements().all(|g2| {
            (0..data.n_boundary()).all(|i| {
                let (j, inner) = data.boundary_action(g2, i);
                let (k, outer) = data.boundary_action(g1, j);
                let (k2, whole) = data.boundary_action(group.mul(g1, g2), i);
                k == k2 && whole == outer.compose(&inner)
            })
        })
    })
}

fn cyclic_data() -> impl Strategy<Value = ExtendedActionData> {
    (1usize..7, any::<bool>()).prop_flat_map(|(n, reflect)| {
        let alpha: Vec<i8> = (0..n)
            .map(|k| {
                if reflect && n % 2 == 0 && k % 2 == 1 {
                    -1
                } else {
                    1
                }
            })
            .collect();
        (
            Just(n),
            Just(alpha),
            prop::collection::vec(0..n as i64, n),
            prop::collection::vec(prop::collection::vec(0..n as i64, 2), n),
            0..n,
        )
            .prop_map(|(n, alpha, t1, t2, s)| {
                let d = n as i64;
                let beta = (0..n)
                    .map(|k| {
                        Permutation::new(if (k * s) % 2 == 1 && n % 2 == 0 {
                            vec![1, 0]
                        } else {
                            vec![0, 1]
                        })
                        .unwrap()
                    })
                    .collect();
                ExtendedActionData::new(
                    FiniteGroup::cyclic(n),
                    vec![SeifertPair::new(3, 1), SeifertPair::new(3, 1)],
                    alpha,
                    t1.into_iter().map(|a| ang(a, d)).collect(),
                    beta,
                    t2.into_iter()
                        .map(|row| row.into_iter().map(|a| ang(a, d)).collect())
                        .collect(),
                )
                .unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn verify_agrees_with_composition(data in cyclic_data()) {
        // β is fixed valid here, so any failure is in θ₁/θ₂ and shows in the maps
        prop_assert_eq!(data.verify().is_ok(), composes(&data));
    }

    #[test]
    fn valid_actions_have_normal_kernel(data in cyclic_data()) {
        prop_assume!(data.verify().is_ok());
        let group = data.group();
        let fop = fop_subgroup(&data);
        prop_assert!(group.is_normal_subgroup(&fop));
        prop_assert!(fop.len() * 2 >= group.order());
        prop_assert!(group.is_normal_subgroup(&data.kernel_on_boundary()));
        prop_assert!(data.boundary_orbit_numbers().iter().all(|o| group.order() % o == 0));
    }
}

#[test]
fn fixtures_satisfy_structure_invariants() {
    let mut all = common::action_fixtures();
    all.push(("Q8", common::q8()));
    all.push(("rotations", common::rotations()));
    for (name, data) in &all {
        assert_eq!(data.verify(), Ok(()), "{name}");
        assert!(composes(data), "{name}");
        let group = data.group();
        let fop = fop_subgroup(data);
        assert!(group.is_normal_subgroup(&fop), "{name}");
        assert!(
            fop.len() == group.order() || 2 * fop.len() == group.order(),
            "{name}"
        );
        assert!(
            group.is_normal_subgroup(&data.kernel_on_boundary()),
            "{name}"
        );
        for (i, &o) in data.boundary_orbit_numbers().iter().enumerate() {
            assert_eq!(group.order() % o, 0, "{name}");
            // orbit-stabilizer
            let stab = group
                .elements()
                .filter(|&g| data.beta(g).apply(i) == i)
                .count();
            assert_eq!(o * stab, group.order(), "{name}");
        }
    }
}
