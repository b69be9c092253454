mod common;

use common::{det2, divide, fox_matrix, from_elem, mono, Poly};
use qalex::coloring::{cocycle_invariant, enumerate_colorings, InvariantMultiset};
use qalex::diagram::{parse_pd, Presentation, Term};
use qalex::fixtures;
use qalex::quandle::{AlexanderPairTable, FiniteQuandle};
use qalex::ring::{compare_laurent, AbelianGroup, GroupRingElem, IdealGens, LaurentVerdict, MAX_DIM};
use qalex::twisted::{cocycle_pair, e0_multiset, DerivativeContext};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_term(n_gens: usize, depth: usize, rng: &mut impl Rng) -> Term {
    if depth == 0 || rng.gen_bool(0.3) {
        return Term::gen(rng.gen_range(0..n_gens));
    }
    let l = random_term(n_gens, depth - 1, rng);
    let r = random_term(n_gens, depth - 1, rng);
    Term::op(l, r, rng.gen())
}

fn contexts() -> Vec<(&'static str, DerivativeContext)> {
    let n = 3;
    let empty = || Presentation::new(n, vec![]).unwrap();
    let tetra = fixtures::tetrahedron();
    let theta = fixtures::theta_z4();
    let q = theta.quandle().clone();
    vec![
        ("burau", DerivativeContext::new(empty(), vec![0, 1, 2], AlexanderPairTable::burau(&tetra)).unwrap()),
        ("cocycle", DerivativeContext::new(empty(), vec![0, 3, 5], cocycle_pair(&theta)).unwrap()),
        ("burau r3", DerivativeContext::new(empty(), vec![2, 1, 1], AlexanderPairTable::burau(&fixtures::r3())).unwrap()),
        ("burau s4", DerivativeContext::new(empty(), vec![4, 0, 1], AlexanderPairTable::burau(&q)).unwrap()),
    ]
}

/// `(s ∗ r) ∗⁻¹ r` and `(s ∗⁻¹ r) ∗ r` have the derivatives of `s`.
#[test]
fn dual_rule_cancels_forward_rule() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd0a1);
    let ctxs = contexts();
    let mut cases = 0;
    for _ in 0..150 {
        let s = random_term(3, 3, &mut rng);
        let r = random_term(3, 2, &mut rng);
        let there = Term::op(Term::op(s.clone(), r.clone(), true), r.clone(), false);
        let back = Term::op(Term::op(s.clone(), r.clone(), false), r.clone(), true);
        for (name, ctx) in &ctxs {
            for j in 0..3 {
                let want = ctx.derive(&s, j).unwrap();
                assert_eq!(ctx.derive(&there, j).unwrap(), want, "{name}: {there} wrt x{}", j + 1);
                assert_eq!(ctx.derive(&back, j).unwrap(), want, "{name}: {back} wrt x{}", j + 1);
            }
            cases += 1;
        }
    }
    assert!(cases >= 500);
}

#[test]
fn derivative_of_generator_is_kronecker() {
    for (_, ctx) in contexts() {
        let g = ctx.pair().group().clone();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { GroupRingElem::one(&g) } else { GroupRingElem::zero(&g) };
                assert_eq!(ctx.derive(&Term::gen(i), j).unwrap(), want);
            }
        }
    }
}

fn laurent(p: &Poly) -> GroupRingElem {
    let g = AbelianGroup::laurent().arc();
    p.iter().fold(GroupRingElem::zero(&g), |acc, (&e, &c)| &acc + &GroupRingElem::monomial(&g, g.elem(&[e]).unwrap(), c))
}

/// The Burau pair with a constant coloring reproduces Fox calculus.
#[test]
fn trefoil_matches_fox_calculus() {
    for d in [fixtures::trefoil(), fixtures::figure8()] {
        let trivial = FiniteQuandle::trivial(1);
        let ctx = DerivativeContext::new(Presentation::wirtinger(&d), vec![0; d.n_arcs()], AlexanderPairTable::burau(&trivial))
            .unwrap();
        let m = ctx.twisted_matrix().unwrap();
        let fox = fox_matrix(&d);
        for (i, row) in fox.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                assert_eq!(&from_elem(m.get(i, j)), want, "entry ({i}, {j})");
            }
        }
    }

    let d = fixtures::trefoil();
    let fox = fox_matrix(&d);
    let p: Poly = [(0, 1), (1, -1), (2, 1)].into_iter().collect();
    let mut generator_found = false;
    for r in [[0, 1], [0, 2], [1, 2]] {
        for c in [[0, 1], [0, 2], [1, 2]] {
            let minor = det2(&fox, r, c);
            let q = divide(&minor, &p).unwrap_or_else(|| panic!("minor {minor:?} not divisible"));
            if q.len() == 1 && q.values().all(|c| c.abs() == 1) {
                generator_found = true;
            }
        }
    }
    assert!(generator_found);
    let e1 = DerivativeContext::new(Presentation::wirtinger(&d), vec![0; 3], AlexanderPairTable::burau(&FiniteQuandle::trivial(1)))
        .unwrap()
        .twisted_ideals(1, MAX_DIM)
        .unwrap();
    let want = IdealGens::principal(laurent(&p));
    assert_eq!(compare_laurent(&e1, &want).unwrap(), LaurentVerdict::Equal);
    assert_eq!(compare_laurent(&e1, &IdealGens::principal(laurent(&mono(0, 1)))).unwrap(), LaurentVerdict::NotEqual);
}

#[test]
fn invariants_survive_arc_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e1a);
    let theta = fixtures::theta_z4();
    let q = theta.quandle();
    for (name, d) in fixtures::diagrams() {
        let counts = enumerate_colorings(&d, q).len();
        let inv = cocycle_invariant(&d, &theta);
        let ideals = e0_multiset(&d, &theta, MAX_DIM).unwrap();
        for _ in 0..3 {
            let mut perm: Vec<usize> = (0..d.n_arcs()).collect();
            perm.shuffle(&mut rng);
            let e = d.relabel(&perm).unwrap();
            assert_eq!(enumerate_colorings(&e, q).len(), counts, "{name}");
            assert_eq!(cocycle_invariant(&e, &theta), inv, "{name}");
            let other = e0_multiset(&e, &theta, MAX_DIM).unwrap();
            let shown = |v: &[(IdealGens, usize)]| v.iter().map(|(i, k)| (i.to_string(), *k)).collect::<Vec<_>>();
            assert_eq!(shown(&other), shown(&ideals), "{name}");
        }
    }
}

#[test]
fn figure_eight_coloring_counts() {
    let d = fixtures::figure8();
    assert_eq!(enumerate_colorings(&d, &FiniteQuandle::dihedral(3)).len(), 3);
    assert_eq!(enumerate_colorings(&d, &FiniteQuandle::dihedral(5)).len(), 25);
    let t = fixtures::trefoil();
    assert_eq!(enumerate_colorings(&t, &fixtures::r3()).len(), 9);
    assert_eq!(enumerate_colorings(&t, &fixtures::s4_four_cycles()).len(), 30);
}

#[test]
fn mirror_inverts_cocycle_invariant() {
    let theta = fixtures::theta_z4();
    let t = fixtures::trefoil();
    let mirror = parse_pd("X[2,0,1,-] X[0,1,2,-] X[1,2,0,-]").unwrap();
    let g = theta.group().clone();
    let mut inverted = InvariantMultiset::new(g.clone());
    for (tuple, k) in cocycle_invariant(&t, &theta).entries() {
        for _ in 0..*k {
            inverted.insert(tuple.iter().map(|a| g.inv(a)).collect());
        }
    }
    assert_eq!(cocycle_invariant(&mirror, &theta), inverted);
}
