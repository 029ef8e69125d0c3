use std::collections::BTreeSet;

use itertools::Itertools;

use super::*;
use crate::coxeter::{CoxeterDatum, Kind};
use crate::typea::{self, Permutation};

fn s4() -> CoxeterSystem {
    typea::symmetric_group(4).unwrap()
}

fn perm(sys: &CoxeterSystem, s: &str) -> ElementId {
    typea::to_element(sys, &s.parse::<Permutation>().unwrap()).unwrap()
}

/// `u ≤ w` iff `u` is a subword of one fixed reduced word of `w`.
fn subword_leq(sys: &CoxeterSystem, u: ElementId, w: ElementId) -> bool {
    let word = sys.reduced_word(w);
    (0..1u32 << word.len()).any(|mask| {
        let sub: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &s)| s)
            .collect();
        sys.evaluate(&sub).unwrap() == u
    })
}

#[test]
fn leq_examples() {
    let sys = s4();
    let w = perm(&sys, "3412");
    for x in sys.ids() {
        assert!(leq(&sys, sys.identity(), x));
    }
    assert!(!leq(&sys, perm(&sys, "2341"), w));
    assert!(leq(&sys, perm(&sys, "1432"), w));
}

#[test]
fn leq_matches_subword_property() {
    let systems = [
        CoxeterDatum::a(3),
        CoxeterDatum::b(2),
        CoxeterDatum::b(3),
        CoxeterDatum::new(Kind::G, 2, None).unwrap(),
        CoxeterDatum::dihedral(7),
    ];
    for d in systems {
        let sys = CoxeterSystem::new(d).unwrap();
        for (u, w) in sys.ids().cartesian_product(sys.ids()) {
            assert_eq!(leq(&sys, u, w), subword_leq(&sys, u, w), "{d}: {u} <= {w}");
        }
    }
}

#[test]
fn ideals() {
    let sys = s4();
    let e = ideal(&sys, sys.identity());
    assert_eq!(e.members(), &[sys.identity()]);
    assert_eq!(ideal(&sys, sys.longest_element()).len(), 24);
    let i = ideal(&sys, perm(&sys, "3412"));
    assert_eq!(i.len(), 14);
    assert!(i.contains(sys.identity()) && i.contains(perm(&sys, "3412")));
    // downward closed
    for &v in i.members() {
        for u in sys.ids() {
            if leq(&sys, u, v) {
                assert!(i.contains(u));
            }
        }
    }
}

#[test]
fn graph_sizes() {
    let sys = s4();
    let g = bruhat_graph(&sys, sys.identity());
    assert_eq!((g.vertex_count(), g.edges().len()), (1, 0));
    let g = bruhat_graph(&sys, sys.generator(1));
    assert_eq!((g.vertex_count(), g.edges().len()), (2, 1));
    let g = bruhat_graph(&sys, perm(&sys, "3412"));
    assert_eq!(g.vertex_count(), 14);
    assert_eq!(g.non_covering_edges().count(), 2);
    for e in g.edges() {
        assert_eq!(sys.left_mul_reflection(e.root, e.from), e.to);
        assert!(sys.length(e.from) < sys.length(e.to));
        assert!(g.interval().leq(e.from, e.to));
    }
}

/// Covering edges of `bg(w)` equal the transitive reduction of `≤` on `[e, w]`.
#[test]
fn covers_are_the_hasse_diagram() {
    for d in [CoxeterDatum::a(3), CoxeterDatum::b(3)] {
        let sys = CoxeterSystem::new(d).unwrap();
        for w in sys.ids() {
            let g = bruhat_graph(&sys, w);
            let m = g.interval().members();
            let lt = |a: ElementId, b: ElementId| a != b && leq(&sys, a, b);
            let hasse: BTreeSet<(ElementId, ElementId)> = m
                .iter()
                .cartesian_product(m)
                .filter(|&(&a, &b)| lt(a, b) && !m.iter().any(|&c| lt(a, c) && lt(c, b)))
                .map(|(&a, &b)| (a, b))
                .collect();
            let covers: BTreeSet<(ElementId, ElementId)> =
                g.covering_edges().map(|e| (e.from, e.to)).collect();
            assert_eq!(covers, hasse, "{d} {w}");
        }
    }
}

#[test]
fn directed_distances() {
    let sys = s4();
    let w = perm(&sys, "3412");
    assert_eq!(directed_distance(&sys, w, w), Some(0));
    assert_eq!(directed_distance(&sys, perm(&sys, "2341"), w), None);
    for &u in ideal(&sys, w).members() {
        assert_eq!(
            directed_distance(&sys, u, w),
            Some(sys.reflection_distance(u, w)),
            "{}",
            typea::from_element(&sys, u)
        );
    }
}

#[test]
fn directed_distance_bounds_reflection_distance() {
    let sys = CoxeterSystem::new(CoxeterDatum::b(3)).unwrap();
    for w in sys.ids() {
        let dist = distances_to(&sys, w);
        let mut all_equal = true;
        for u in sys.ids() {
            assert_eq!(dist[u.index()].is_some(), leq(&sys, u, w));
            if let Some(d) = dist[u.index()] {
                let lp = sys.reflection_distance(u, w);
                assert!(d as usize >= lp);
                all_equal &= d as usize == lp;
            }
        }
        assert_eq!(all_equal, distance_condition(&sys, w));
    }
}

#[test]
fn distance_condition_examples() {
    let sys = s4();
    assert!(distance_condition(&sys, sys.identity()));
    assert!(distance_condition(&sys, perm(&sys, "3412")));
    assert!(!distance_condition(&sys, perm(&sys, "4231")));
    assert!(!distance_defects(&sys, perm(&sys, "4231")).is_empty());
}

fn check_meet(sys: &CoxeterSystem, u: ElementId, w: ElementId, mp: MeetPoint) {
    assert!(leq(sys, mp.v, u) && leq(sys, mp.v, w));
    assert_eq!(directed_distance(sys, mp.v, w), Some(mp.to_w));
    assert_eq!(directed_distance(sys, mp.v, u), Some(mp.to_u));
    assert_eq!(mp.to_w + mp.to_u, sys.reflection_distance(u, w));
}

#[test]
fn meet_point_examples() {
    let sys = s4();
    let w = perm(&sys, "3412");
    let mp = meet_point(&sys, w, w).unwrap();
    assert_eq!(
        mp,
        MeetPoint {
            v: w,
            to_w: 0,
            to_u: 0
        }
    );
    for &u in ideal(&sys, w).members() {
        // v = u already works under the distance condition
        assert_eq!(
            directed_distance(&sys, u, w).unwrap(),
            sys.reflection_distance(u, w)
        );
        check_meet(&sys, u, w, meet_point(&sys, u, w).unwrap());
    }
}

#[test]
fn meet_point_all_pairs_s4() {
    let sys = s4();
    for (u, w) in sys.ids().cartesian_product(sys.ids()) {
        check_meet(&sys, u, w, meet_point(&sys, u, w).unwrap());
    }
}

#[test]
fn degrees() {
    let sys = s4();
    let w0 = sys.longest_element();
    assert_eq!(degree(&sys, w0, w0).unwrap(), 6);
    let w = perm(&sys, "3412");
    assert_eq!(degree(&sys, w, w).unwrap(), 4);
    // reflections below 3412, counted with the dominance order
    let below = (1..=4)
        .tuple_combinations()
        .filter(|&(a, b)| {
            typea::dominance_leq(
                &Permutation::transposition(4, a, b),
                &"3412".parse().unwrap(),
            )
        })
        .count();
    assert_eq!(degree(&sys, sys.identity(), w).unwrap(), below);
    assert_eq!(degree(&sys, perm(&sys, "2341"), w), Err(Error::NotInIdeal));
    for x in sys.ids() {
        assert_eq!(degree(&sys, x, x).unwrap(), sys.length(x));
        let interval = ideal(&sys, x);
        for &u in interval.members() {
            assert_eq!(interval.degree(u).unwrap(), degree(&sys, u, x).unwrap());
        }
    }
}

#[test]
fn regularity_examples() {
    let sys = s4();
    assert!(is_regular_bg(&sys, sys.identity()));
    assert!(!is_regular_bg(&sys, perm(&sys, "3412")));
    assert!(is_regular_bg(&sys, sys.longest_element()));
}

#[test]
fn broken_rhombi_of_3412() {
    let sys = s4();
    let w = perm(&sys, "3412");
    let rhombi = broken_rhombi(&sys, w);
    let named: BTreeSet<(String, String, String)> = rhombi
        .iter()
        .map(|r| {
            let f = |x| typea::from_element(&sys, x).to_string();
            (f(r.x), f(r.y), f(r.z))
        })
        .collect();
    for (x, y, z) in [("2314", "1324", "1342"), ("1432", "1234", "2134")] {
        assert!(
            named.contains(&(x.into(), y.into(), z.into())),
            "{x} {y} {z}"
        );
        assert!(named.contains(&(z.into(), y.into(), x.into())));
    }
    let interval = ideal(&sys, w);
    for r in &rhombi {
        assert!(sys.is_reflection(sys.multiply(r.x, sys.inverse(r.y))));
        assert!(sys.is_reflection(sys.multiply(r.z, sys.inverse(r.y))));
        assert!(sys.length(r.x) > sys.length(r.y) && sys.length(r.z) > sys.length(r.y));
        for v in sys.ids() {
            let above = |a: ElementId| {
                sys.is_reflection(sys.multiply(v, sys.inverse(a))) && sys.length(v) > sys.length(a)
            };
            assert!(!(above(r.x) && above(r.z) && interval.contains(v)));
        }
    }
    assert!(has_broken_rhombus(&sys, w));
    assert!(broken_rhombi(&sys, sys.longest_element()).is_empty());
}

#[test]
fn rhombi_detect_singularity_in_small_groups() {
    let systems = [
        CoxeterDatum::a(3),
        CoxeterDatum::b(2),
        CoxeterDatum::new(Kind::G, 2, None).unwrap(),
        CoxeterDatum::dihedral(9),
    ];
    for d in systems {
        let sys = CoxeterSystem::new(d).unwrap();
        for w in sys.ids() {
            let regular = is_regular_bg(&sys, w);
            assert_eq!(regular, broken_rhombi(&sys, w).is_empty(), "{d} {w}");
            assert_eq!(regular, !has_broken_rhombus(&sys, w));
            if regular {
                assert!(distance_condition(&sys, w));
            }
        }
    }
}
