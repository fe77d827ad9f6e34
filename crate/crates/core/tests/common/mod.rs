#![allow(dead_code)]

use seifert_core::{ExtendedActionData, FiniteGroup, Permutation, RationalAngle, SeifertPair};

pub fn ang(n: i64, d: i64) -> RationalAngle {
    RationalAngle::frac(n, d)
}

fn pairs(raw: &[(i64, i64)]) -> Vec<SeifertPair> {
    raw.iter().map(|&(q, p)| SeifertPair::new(q, p)).collect()
}

/// θ₂(i, g) = α(g)c(i) − c(β(g)i) satisfies the boundary cocycle law for any `c`.
fn coboundary(alpha: &[i8], beta: &[Permutation], c: &[RationalAngle]) -> Vec<Vec<RationalAngle>> {
    alpha
        .iter()
        .zip(beta)
        .map(|(&a, perm)| {
            (0..c.len())
                .map(|i| {
                    let own = if a == 1 { c[i].clone() } else { c[i].neg() };
                    own.sub(&c[perm.apply(i)])
                })
                .collect()
        })
        .collect()
}

fn build(
    group: FiniteGroup,
    raw: &[(i64, i64)],
    alpha: Vec<i8>,
    theta1: Vec<RationalAngle>,
    beta: Vec<Permutation>,
    c: &[RationalAngle],
) -> ExtendedActionData {
    let theta2 = coboundary(&alpha, &beta, c);
    let data = ExtendedActionData::new(group, pairs(raw), alpha, theta1, beta, theta2).unwrap();
    assert_eq!(data.verify(), Ok(()), "fixture must be a valid action");
    data
}

fn rotate(n: usize, k: usize) -> Vec<usize> {
    (0..n).map(|i| (i + k) % n).collect()
}

/// Z/2 swapping two boundary tori with a twist that only balances out over both.
pub fn z2() -> ExtendedActionData {
    let data = ExtendedActionData::new(
        FiniteGroup::cyclic(2),
        pairs(&[(3, 1), (3, 1), (5, 2)]),
        vec![1, 1],
        vec![ang(0, 1), ang(1, 2)],
        vec![
            Permutation::identity(3),
            Permutation::new(vec![1, 0, 2]).unwrap(),
        ],
        vec![vec![ang(0, 1); 3], vec![ang(1, 3), ang(2, 3), ang(1, 2)]],
    )
    .unwrap();
    assert_eq!(data.verify(), Ok(()));
    data
}

pub fn z3() -> ExtendedActionData {
    let beta = (0..3)
        .map(|k| Permutation::new(rotate(3, k)).unwrap())
        .collect();
    build(
        FiniteGroup::cyclic(3),
        &[(5, 2), (5, 2), (5, 2)],
        vec![1; 3],
        (0..3).map(|k| ang(k, 3)).collect(),
        beta,
        &[ang(1, 7), ang(2, 7), ang(0, 1)],
    )
}

/// Element `2a + b` swaps tori 0,1 when `a = 1` and 2,3 when `b = 1`; `b` reverses the fiber.
pub fn z2xz2() -> ExtendedActionData {
    let beta = (0..4)
        .map(|x| {
            let mut img: Vec<usize> = (0..4).collect();
            if x / 2 == 1 {
                img.swap(0, 1);
            }
            if x % 2 == 1 {
                img.swap(2, 3);
            }
            Permutation::new(img).unwrap()
        })
        .collect();
    let alpha: Vec<i8> = (0..4).map(|x| if x % 2 == 1 { -1 } else { 1 }).collect();
    // coboundary of 1/4 plus a character with values in {0, 1/2}
    let a = ang(1, 4);
    let theta1 = (0..4)
        .map(|x| {
            let cob = if alpha[x] == 1 {
                ang(0, 1)
            } else {
                a.neg().sub(&a)
            };
            cob.add(&ang((x / 2) as i64, 2))
        })
        .collect();
    build(
        FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
        &[(3, 1), (3, 1), (2, 1), (2, 1)],
        alpha,
        theta1,
        beta,
        &[ang(1, 5), ang(0, 1), ang(1, 3), ang(1, 2)],
    )
}

/// Cycles three (7,3) tori and swaps two (4,1) tori.
pub fn z6() -> ExtendedActionData {
    let beta = (0..6)
        .map(|k| {
            let mut img = rotate(3, k % 3);
            img.extend(if k % 2 == 0 { [3, 4] } else { [4, 3] });
            Permutation::new(img).unwrap()
        })
        .collect();
    build(
        FiniteGroup::cyclic(6),
        &[(7, 3), (7, 3), (7, 3), (4, 1), (4, 1)],
        vec![1; 6],
        (0..6).map(|k| ang(k, 6)).collect(),
        beta,
        &[ang(1, 2), ang(1, 3), ang(0, 1), ang(3, 4), ang(1, 6)],
    )
}

/// Dihedral group of order `2n` acting on `n` tori as on the vertices of an
/// `n`-gon, plus one fixed torus; reflections reverse the fiber.
pub fn dihedral(n: usize, polygon_pair: (i64, i64)) -> ExtendedActionData {
    let beta = (0..2 * n)
        .map(|x| {
            let (k, e) = (x % n, x / n);
            let mut img: Vec<usize> = (0..n)
                .map(|i| if e == 0 { (k + i) % n } else { (k + n - i) % n })
                .collect();
            img.push(n);
            Permutation::new(img).unwrap()
        })
        .collect();
    let mut raw = vec![polygon_pair; n];
    raw.push((2, 1));
    let c: Vec<RationalAngle> = (0..=n).map(|i| ang(i as i64, 2 * n as i64 + 1)).collect();
    build(
        FiniteGroup::dihedral(n),
        &raw,
        (0..2 * n).map(|x| if x < n { 1 } else { -1 }).collect(),
        (0..2 * n).map(|x| ang((x % n) as i64, n as i64)).collect(),
        beta,
        &c,
    )
}

pub fn d3() -> ExtendedActionData {
    dihedral(3, (4, 1))
}

pub fn d4() -> ExtendedActionData {
    dihedral(4, (3, 2))
}

/// Q8 with α trivial exactly on ⟨i⟩ = {±1, ±i}; every other element has order 4.
pub fn q8() -> ExtendedActionData {
    let alpha = (0..8).map(|x| if x % 4 <= 1 { 1 } else { -1 }).collect();
    build(
        FiniteGroup::quaternion(),
        &[(3, 1)],
        alpha,
        vec![ang(0, 1); 8],
        vec![Permutation::identity(1); 8],
        &[ang(0, 1)],
    )
}

/// Z/4 × Z/3 rotating the fiber, every element preserving its orientation.
pub fn rotations() -> ExtendedActionData {
    let group = FiniteGroup::direct_product(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(3));
    let beta = (0..12)
        .map(|x| Permutation::new(rotate(3, x % 3)).unwrap())
        .collect();
    build(
        group,
        &[(5, 1), (5, 1), (5, 1)],
        vec![1; 12],
        (0..12).map(|x| ang((x / 3) as i64, 4)).collect(),
        beta,
        &[ang(1, 9), ang(4, 9), ang(0, 1)],
    )
}

pub fn action_fixtures() -> Vec<(&'static str, ExtendedActionData)> {
    vec![
        ("Z2", z2()),
        ("Z3", z3()),
        ("Z2xZ2", z2xz2()),
        ("Z6", z6()),
        ("D3", d3()),
        ("D4", d4()),
    ]
}
