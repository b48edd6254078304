use fanoscope::degeneration::{facet_decompositions, method1_data, DegenerationData};
use fanoscope::discriminant::{assemble_global, max_triangulation};
use fanoscope::gamma::build_system;
use fanoscope::invariants::{analyze, euler_number, euler_smooth_mink, KnownValues};
use fanoscope::io::{parse_polytope_str, write_polytope_json, write_polytope_text, PolytopeFile};
use fanoscope::linalg::{int, Rat};
use fanoscope::polygon::Polygon;
use fanoscope::polytope::LatticePolytope;
use num_traits::{One, Signed};
use proptest::prelude::*;

/// Reflexive polytopes whose facets all admit smooth decompositions.
fn pool() -> Vec<Vec<[i64; 3]>> {
    let mut cube = Vec::new();
    for x in [-1, 1] {
        for y in [-1, 1] {
            for z in [-1, 1] {
                cube.push([x, y, z]);
            }
        }
    }
    vec![
        vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]],
        cube,
        vec![[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
        vec![[1, 0, 0], [0, 1, 0], [-1, -1, 0], [0, 0, 1], [0, 0, -1]],
        vec![[1, 0, 1], [0, 1, 1], [-1, 1, 1], [-1, 0, 1], [0, -1, 1], [1, -1, 1], [0, 0, -1]],
        vec![[1, 0, 0], [1, 1, 0], [0, 1, 0], [-1, 0, 0], [-1, -1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
    ]
}

fn data_for(vertices: &[[i64; 3]], pick: usize) -> DegenerationData {
    let p = LatticePolytope::from_i64(vertices).unwrap();
    let decs = facet_decompositions(&p).unwrap();
    let choice: Vec<_> = decs.iter().map(|d| d[pick % d.len()].clone()).collect();
    method1_data("pool", &p, &choice).unwrap()
}

/// A unimodular matrix as a product of elementary column operations.
fn unimodular() -> impl Strategy<Value = [[i64; 3]; 3]> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2, any::<bool>()), 1..5).prop_map(|ops| {
        let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for (i, j, k, flip) in ops {
            if i != j {
                for row in m.iter_mut() {
                    row[j] += k * row[i];
                }
            }
            if flip {
                for row in m.iter_mut() {
                    row[i] = -row[i];
                }
            }
        }
        m
    })
}

fn apply(m: &[[i64; 3]; 3], v: &[i64; 3]) -> [i64; 3] {
    let mut out = [0; 3];
    for (r, row) in m.iter().enumerate() {
        out[r] = row.iter().zip(v).map(|(a, b)| a * b).sum();
    }
    out
}

fn lattice_polygon() -> impl Strategy<Value = Polygon> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 3..7)
        .prop_map(|pts| Polygon::from_i64(&pts.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>()))
        .prop_filter("two-dimensional", |p| p.dimension() == 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn characters_solve_every_gamma_system(
        which in 0usize..6,
        pick in 0usize..3,
        m in prop::collection::vec(-50i64..=50, 3),
    ) {
        let data = data_for(&pool()[which], pick);
        let system = build_system(&data).unwrap();
        let m: Vec<Rat> = m.iter().map(|&x| Rat::from_integer(int(x))).collect();
        prop_assert!(system.satisfied_by_character(&m));
    }

    #[test]
    fn invariants_are_unimodular_invariant(which in 0usize..6, g in unimodular()) {
        let base = &pool()[which];
        let moved: Vec<[i64; 3]> = base.iter().map(|v| apply(&g, v)).collect();
        let a = analyze(&data_for(base, 0), &KnownValues::default()).unwrap();
        let b = analyze(&data_for(&moved, 0), &KnownValues::default()).unwrap();
        prop_assert_eq!(
            (a.degree, a.p, a.n, a.euler, a.b2, a.boundary, a.vertices),
            (b.degree, b.p, b.n, b.euler, b.b2, b.boundary, b.vertices)
        );
    }

    #[test]
    fn euler_routes_agree(which in 0usize..6, pick in 0usize..3) {
        let data = data_for(&pool()[which], pick);
        let e = euler_number(&data).unwrap();
        prop_assert_eq!(e.slab_formula, e.node_formula);
        prop_assert_eq!(e.euler, euler_smooth_mink(&data).unwrap());
        let graph = assemble_global(&data).unwrap();
        prop_assert_eq!(graph.census.p, e.census.p);
        prop_assert_eq!(graph.census.n as i64, e.census.n);
    }

    #[test]
    fn triangulation_count_is_normalized_area(q in lattice_polygon()) {
        let t = max_triangulation(&q).unwrap();
        prop_assert_eq!(Rat::from_integer(int(t.triangles.len() as i64)), q.normalized_area());
        for tri in &t.triangles {
            let [a, b, c] = tri.map(|i| t.points[i].clone());
            let det = (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0]);
            prop_assert!(det.abs().is_one());
        }
    }

    #[test]
    fn polytope_files_round_trip(which in 0usize..6, g in unimodular()) {
        let moved: Vec<[i64; 3]> = pool()[which].iter().map(|v| apply(&g, v)).collect();
        let p = LatticePolytope::from_i64(&moved).unwrap();
        let file = PolytopeFile { name: Some("x".into()), palp_id: Some(which), polytope: p.clone() };
        let json = parse_polytope_str(&write_polytope_json(&file).unwrap()).unwrap();
        prop_assert_eq!(&json, &file);
        let text = parse_polytope_str(&write_polytope_text(&p).unwrap()).unwrap();
        prop_assert_eq!(text.polytope, p);
    }
}
