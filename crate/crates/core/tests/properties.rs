//! Cross-module property tests: serialization round trips, membership
//! semantics, and projection soundness against an independent feasibility
//! oracle.

use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sepcube::cube::BoolSet;
use sepcube::graph::GraphSet;
use sepcube::io::{
    read_affine_map, read_bool_set, read_ef, read_graph, read_hpolytope, write_affine_map,
    write_bool_set, write_ef, write_graph, write_hpolytope,
};
use sepcube::poly::{AffineMap, ExtendedFormulation, HPolytope, LinConstraint, Relation};
use sepcube::project::{is_feasible, maximize_linear, project_onto, LinMax};
use sepcube::rat::{rat, rat_frac, Rat};
use sepcube::CoordPartition;

fn rat_up_to_million() -> impl Strategy<Value = Rat> {
    (-1_000_000i64..=1_000_000, 1i64..=1_000_000).prop_map(|(n, d)| rat_frac(n, d))
}

fn relation() -> impl Strategy<Value = Relation> {
    prop_oneof![Just(Relation::Le), Just(Relation::Eq), Just(Relation::Ge)]
}

fn label() -> impl Strategy<Value = String> {
    prop_oneof![Just(String::new()), "[a-z0-9]+( [a-z0-9]+){0,2}"]
}

fn polytope(max_dim: usize, max_cons: usize) -> impl Strategy<Value = HPolytope> {
    (1..=max_dim).prop_flat_map(move |dim| {
        let con = (
            prop::collection::vec(rat_up_to_million(), dim),
            relation(),
            rat_up_to_million(),
        )
            .prop_map(|(c, rel, b)| LinConstraint::new(c, rel, b));
        (prop::collection::vec(con, 0..=max_cons), label()).prop_map(move |(cons, lab)| {
            HPolytope::with_constraints(dim, cons, lab).expect("dims agree")
        })
    })
}

fn affine_map() -> impl Strategy<Value = AffineMap> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(target, source)| {
        (
            prop::collection::vec(prop::collection::vec(rat_up_to_million(), source), target),
            prop::collection::vec(rat_up_to_million(), target),
        )
            .prop_map(move |(matrix, offset)| {
                AffineMap::new(matrix, offset, source).expect("dims agree")
            })
    })
}

fn extended_formulation() -> impl Strategy<Value = ExtendedFormulation> {
    (polytope(6, 10), 1usize..=6, any::<bool>()).prop_flat_map(|(q, target, with_part)| {
        let source = q.dim();
        let part = if with_part {
            let k = target.div_ceil(2);
            prop::sample::subsequence((0..target).collect::<Vec<_>>(), k..=k)
                .prop_map(move |x1| Some(CoordPartition::from_x1(target, x1).expect("valid X1")))
                .boxed()
        } else {
            Just(None).boxed()
        };
        (
            prop::collection::vec(prop::collection::vec(rat_up_to_million(), source), target),
            prop::collection::vec(rat_up_to_million(), target),
            part,
        )
            .prop_map(move |(matrix, offset, part)| {
                let map = AffineMap::new(matrix, offset, source).expect("dims agree");
                ExtendedFormulation::new(q.clone(), map, part).expect("consistent")
            })
    })
}

fn bool_set() -> impl Strategy<Value = BoolSet> {
    (1usize..=8).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), 1usize << n).prop_map(move |bits| {
            let mut s = BoolSet::empty(n).expect("small n");
            for (enc, keep) in bits.into_iter().enumerate() {
                if keep {
                    s.insert_encoding(enc as u32);
                }
            }
            s
        })
    })
}

fn graph() -> impl Strategy<Value = GraphSet> {
    (2usize..=12).prop_flat_map(|nv| {
        prop_oneof![Just(None), (1..nv).prop_map(Some)].prop_flat_map(move |bip| {
            let mut pairs = Vec::new();
            for u in 0..nv {
                for v in u + 1..nv {
                    let crossing = bip.is_none_or(|k| u < k && v >= k);
                    if crossing {
                        pairs.push((u, v));
                    }
                }
            }
            let count = pairs.len();
            prop::collection::vec(any::<bool>(), count).prop_map(move |keep| {
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(&keep)
                    .filter(|(_, &k)| k)
                    .map(|(&e, _)| e)
                    .collect();
                GraphSet::new(nv, &edges, bip).expect("valid instance")
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hpolytope_round_trip(p in polytope(8, 40)) {
        let text = write_hpolytope(&p);
        prop_assert_eq!(read_hpolytope(&text).unwrap(), p);
    }

    #[test]
    fn affine_map_round_trip(m in affine_map()) {
        let text = write_affine_map(&m);
        prop_assert_eq!(read_affine_map(&text).unwrap(), m);
    }

    #[test]
    fn ef_round_trip(ef in extended_formulation()) {
        let text = write_ef(&ef);
        prop_assert_eq!(read_ef(&text).unwrap(), ef);
    }

    #[test]
    fn bool_set_round_trip(s in bool_set()) {
        let text = write_bool_set(&s);
        prop_assert_eq!(read_bool_set(&text).unwrap(), s);
    }

    #[test]
    fn graph_round_trip(g in graph()) {
        let text = write_graph(&g);
        prop_assert_eq!(read_graph(&text).unwrap(), g);
    }
}

#[test]
fn membership_is_constraint_conjunction() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..1000 {
        let dim = rng.gen_range(1..=6);
        let m = rng.gen_range(0..=10);
        let mut small = |rng: &mut ChaCha8Rng| {
            rat_frac(rng.gen_range(-6..=6), rng.gen_range(1..=4))
        };
        let cons: Vec<LinConstraint> = (0..m)
            .map(|_| {
                let coeffs = (0..dim).map(|_| small(&mut rng)).collect();
                let rel = match rng.gen_range(0..3) {
                    0 => Relation::Le,
                    1 => Relation::Eq,
                    _ => Relation::Ge,
                };
                let rhs = small(&mut rng);
                LinConstraint::new(coeffs, rel, rhs)
            })
            .collect();
        let p = HPolytope::with_constraints(dim, cons, "").unwrap();
        let x: Vec<Rat> = (0..dim).map(|_| small(&mut rng)).collect();
        let expected = p
            .constraints()
            .iter()
            .all(|c| c.eval(&x).unwrap().satisfied);
        assert_eq!(p.contains_point(&x).unwrap(), expected);
    }
}

#[test]
fn unit_box_boolean_points_is_full_cube() {
    for n in 1..=12 {
        let mut cons = Vec::new();
        for i in 0..n {
            let mut lo = vec![rat(0); n];
            lo[i] = rat(1);
            cons.push(LinConstraint::new(lo.clone(), Relation::Ge, rat(0)));
            cons.push(LinConstraint::new(lo, Relation::Le, rat(1)));
        }
        let p = HPolytope::with_constraints(n, cons, "unit box").unwrap();
        assert_eq!(p.boolean_points().unwrap(), BoolSet::full(n).unwrap());
    }
}

#[test]
fn unit_box_all_ones_maximum_is_dimension() {
    for d in 1..=6 {
        let mut cons = Vec::new();
        for i in 0..d {
            let mut e = vec![rat(0); d];
            e[i] = rat(1);
            cons.push(LinConstraint::new(e.clone(), Relation::Ge, rat(0)));
            cons.push(LinConstraint::new(e, Relation::Le, rat(1)));
        }
        let p = HPolytope::with_constraints(d, cons, "").unwrap();
        let ones = vec![rat(1); d];
        assert_eq!(
            maximize_linear(&p, &ones).unwrap(),
            LinMax::Value(rat(d as i64))
        );
    }
}

/// Projection agrees with an independent oracle: a point is in the
/// projection iff pinning the kept coordinates to it leaves the original
/// system feasible. Membership of lifted grid points gives a third,
/// elimination-free route for the "inside" direction.
#[test]
fn projection_matches_pinned_feasibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let grid = [rat(-2), rat(0), rat_frac(1, 2), rat(1)];
    for _ in 0..40 {
        let dim = rng.gen_range(2..=5);
        let m = rng.gen_range(1..=12);
        let cons: Vec<LinConstraint> = (0..m)
            .map(|_| {
                let coeffs = (0..dim).map(|_| rat(rng.gen_range(-3..=3))).collect();
                let rel = match rng.gen_range(0..3) {
                    0 => Relation::Le,
                    1 => Relation::Eq,
                    _ => Relation::Ge,
                };
                LinConstraint::new(coeffs, rel, rat(rng.gen_range(-6..=6)))
            })
            .collect();
        let p = HPolytope::with_constraints(dim, cons, "").unwrap();

        let keep = rng.gen_range(1..=3.min(dim - 1));
        let mut coords: Vec<usize> = (0..dim).collect();
        for i in 0..keep {
            let j = rng.gen_range(i..dim);
            coords.swap(i, j);
        }
        let mut coords = coords[..keep].to_vec();
        coords.sort_unstable();

        let proj = project_onto(&p, &coords).unwrap();

        // every grid point of the projected space, both directions
        let mut idx = vec![0usize; keep];
        loop {
            let y: Vec<Rat> = idx.iter().map(|&i| grid[i].clone()).collect();
            let in_proj = proj.contains_point(&y).unwrap();
            let mut pinned = p.clone();
            for (slot, &c) in coords.iter().enumerate() {
                let mut e = vec![rat(0); dim];
                e[c] = rat(1);
                pinned
                    .push(LinConstraint::new(e, Relation::Eq, y[slot].clone()))
                    .unwrap();
            }
            assert_eq!(
                in_proj,
                is_feasible(&pinned).unwrap(),
                "projection vs pinned feasibility at y={y:?}"
            );
            let mut carry = 0;
            while carry < keep {
                idx[carry] += 1;
                if idx[carry] < grid.len() {
                    break;
                }
                idx[carry] = 0;
                carry += 1;
            }
            if carry == keep {
                break;
            }
        }

        // lifted grid points inside P must project into the image
        let lift_grid = [rat(0), rat_frac(1, 2), rat(1)];
        let mut idx = vec![0usize; dim];
        loop {
            let x: Vec<Rat> = idx.iter().map(|&i| lift_grid[i].clone()).collect();
            if p.contains_point(&x).unwrap() {
                let y: Vec<Rat> = coords.iter().map(|&c| x[c].clone()).collect();
                assert!(
                    proj.contains_point(&y).unwrap(),
                    "image point {y:?} missing from projection"
                );
            }
            let mut carry = 0;
            while carry < dim {
                idx[carry] += 1;
                if idx[carry] < lift_grid.len() {
                    break;
                }
                idx[carry] = 0;
                carry += 1;
            }
            if carry == dim {
                break;
            }
        }
    }
}
