//! Expected values computed by a separate scratch implementation of the
//! same rewriting rules (plain lists of `(name, ±1)` and dictionaries, with
//! its own inversion routine), then frozen here.

use braidlift_core::groupoid::{Arrow, GroupoidPresentation, Object, Sheet};
use braidlift_core::mcg::{self, MappingClass};
use braidlift_core::pi1::{induced_automorphism, FreeGroupWord, Generator, SpanningTree};

fn images(f: &MappingClass) -> Vec<(String, String)> {
    f.presentation()
        .arrows()
        .into_iter()
        .map(|a| (a.to_string(), f.image(a).unwrap().to_string()))
        .collect()
}

fn expect(f: &MappingClass, table: &[(&str, &str)]) {
    let got = images(f);
    let want: Vec<(String, String)> = table.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assert_eq!(got, want);
}

#[test]
fn inverse_twist_products_k3_i1() {
    let y = mcg::dehn_y(1, 3).unwrap().inverse().unwrap();
    let z = mcg::dehn_z(1, 3).unwrap().inverse().unwrap();
    expect(
        &z.compose(&y).unwrap(),
        &[
            ("a0", "a0 c1 b1^-1"),
            ("b0", "b0 a1 b1^-1"),
            ("c0", "c0"),
            ("a1", "b1"),
            ("b1", "b1 c1^-1 b1"),
            ("c1", "b1 a1^-1 b1"),
            ("a2", "b1^-1 c1 a2"),
            ("b2", "b1^-1 a1 b2"),
            ("c2", "c2"),
            ("a3", "a3"),
            ("b3", "b3"),
            ("c3", "c3"),
        ],
    );
    expect(
        &y.compose(&z).unwrap(),
        &[
            ("a0", "a0 c1 a1^-1"),
            ("b0", "b0 a1 c1^-1 b1 c1^-1"),
            ("c0", "c0 b1 c1^-1"),
            ("a1", "c1 b1^-1 c1 b1^-1 c1"),
            ("b1", "a1"),
            ("c1", "c1 b1^-1 c1"),
            ("a2", "a1^-1 c1 a2"),
            ("b2", "c1^-1 b1 c1^-1 a1 b2"),
            ("c2", "c1^-1 b1 c2"),
            ("a3", "a3"),
            ("b3", "b3"),
            ("c3", "c3"),
        ],
    );
}

#[test]
fn sixth_power_of_the_lift_at_two_points() {
    let b6 = mcg::beta_tilde(1, 2).unwrap().power(6).unwrap();
    expect(
        &b6,
        &[
            ("a0", "a0 c1 a1^-1 b1 c1^-1 a1 b1^-1"),
            ("b0", "b0 a1 b1^-1 c1 a1^-1 b1 c1^-1"),
            ("c0", "c0 b1 c1^-1 a1 b1^-1 c1 a1^-1"),
            ("a1", "a1"),
            ("b1", "b1"),
            ("c1", "c1"),
            ("a2", "b1^-1 a1 c1^-1 b1 a1^-1 c1 a2"),
            ("b2", "c1^-1 b1 a1^-1 c1 b1^-1 a1 b2"),
            ("c2", "a1^-1 c1 b1^-1 a1 c1^-1 b1 c2"),
        ],
    );
    let pres = b6.presentation();
    for o in pres.objects() {
        assert_eq!(b6.map_object(o), o);
    }
    // On π₁ it is conjugation by the commutator x1 y1 x1⁻¹ y1⁻¹.
    let tree = SpanningTree::new(2).unwrap();
    let auto = induced_automorphism(&b6, &tree).unwrap();
    let c: FreeGroupWord = "x1 y1 x1^-1 y1^-1".parse().unwrap();
    for g in tree.generators() {
        assert_eq!(*auto.image(g), FreeGroupWord::generator(g).conjugate_by(&c));
    }
    // Lower powers move something.
    for n in 1..6 {
        assert!(!mcg::beta_tilde(1, 2).unwrap().power(n).unwrap().is_identity());
    }
}

#[test]
fn derived_pi1_images_k5_i2() {
    let k = 5;
    let tree = SpanningTree::new(k).unwrap();
    let cases: [(&str, MappingClass, &[(&str, &str)]); 4] = [
        (
            "beta_tilde",
            mcg::beta_tilde(2, k).unwrap(),
            &[
                ("x1", "x1 y1 y2 y1^-1"),
                ("y1", "y1 y2^-1 x2^-1"),
                ("x2", "x2 y2"),
                ("y2", "x2^-1"),
                ("x3", "x2 y2 x3 x2^-1"),
                ("y3", "x2 y3 y2^-1 x2^-1 x2^-1"),
                ("x4", "x2 x2 y2 x4 y2^-1 x2^-1 x2^-1"),
                ("y4", "x2 x2 y2 y4 y2^-1 x2^-1 x2^-1"),
            ],
        ),
        (
            "dehn_x",
            mcg::dehn_x(2, k).unwrap(),
            &[
                ("x1", "x1"),
                ("y1", "y1 x2^-1"),
                ("x2", "x2"),
                ("y2", "y2 x2^-1"),
                ("x3", "x2 x3 x2^-1"),
                ("y3", "x2 y3 y2^-1 x2^-1 y2 x2^-1"),
                ("x4", "x2 y2^-1 x2 y2 x4 y2^-1 x2^-1 y2 x2^-1"),
                ("y4", "x2 y2^-1 x2 y2 y4 y2^-1 x2^-1 y2 x2^-1"),
            ],
        ),
        (
            "dehn_y",
            mcg::dehn_y(2, k).unwrap(),
            &[
                ("x1", "x1 y1 y2^-1 y1^-1"),
                ("y1", "y1"),
                ("x2", "x2 y2^-1"),
                ("y2", "y2"),
                ("x3", "x3 y2^-1"),
                ("y3", "y2 y3 y2^-1"),
                ("x4", "y2 x4 y2^-1"),
                ("y4", "y2 y4 y2^-1"),
            ],
        ),
        (
            "dehn_z",
            mcg::dehn_z(2, k).unwrap(),
            &[
                ("x1", "x1 y1 y2^-1 x2^-1 y1^-1"),
                ("y1", "y1 x2 y2"),
                ("x2", "y2^-1"),
                ("y2", "y2 x2 y2"),
                ("x3", "y2^-1 x2^-1 x3"),
                ("y3", "y3 x2 y2"),
                ("x4", "y2^-1 x2^-1 x4 x2 y2"),
                ("y4", "y2^-1 x2^-1 y4 x2 y2"),
            ],
        ),
    ];
    for (name, f, table) in cases {
        let auto = induced_automorphism(&f, &tree).unwrap();
        for (g, w) in table {
            let g: FreeGroupWord = g.parse().unwrap();
            let g: Generator = g.letters()[0].generator;
            assert_eq!(auto.image(g).to_string(), *w, "{name} {g}");
        }
    }
}

#[test]
fn braid_traces_k4_i2() {
    let k = 4;
    let pres = GroupoidPresentation::cover(k).unwrap();
    let (b2, b3) = (mcg::beta_tilde(2, k).unwrap(), mcg::beta_tilde(3, k).unwrap());
    let run = |steps: &[&MappingClass], a: &str| -> Vec<String> {
        mcg::trace(steps, &pres.parse_word(a).unwrap())
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect()
    };
    assert_eq!(run(&[&b2, &b3, &b2], "a1"), ["a1 c2", "a1 c2 b3", "a1 c2 b3"]);
    assert_eq!(run(&[&b3, &b2, &b3], "a1"), ["a1", "a1 c2", "a1 c2 b3"]);
    assert_eq!(run(&[&b2, &b3, &b2], "a2"), ["b2^-1", "a3^-1 b2^-1", "a3^-1"]);
    assert_eq!(run(&[&b3, &b2, &b3], "a2"), ["a2 c3", "c3", "a3^-1"]);
    assert_eq!(run(&[&b2, &b3, &b2], "a3"), ["c2 a3", "c2", "a2^-1"]);
    assert_eq!(run(&[&b3, &b2, &b3], "a3"), ["b3^-1", "b3^-1 a2^-1", "a2^-1"]);
    assert_eq!(run(&[&b2, &b3, &b2], "a4"), ["a4", "c3 a4", "b2 c3 a4"]);
    assert_eq!(run(&[&b3, &b2, &b3], "a4"), ["c3 a4", "b2 c3 a4", "b2 c3 a4"]);
}

#[test]
fn boundary_objects_are_fixed_by_whole_catalog() {
    for k in 2..=6 {
        let pres = GroupoidPresentation::cover(k).unwrap();
        for g in mcg::Generator::COVER {
            for i in 1..k {
                let f = g.build(i, k).unwrap();
                for o in pres.boundary_objects() {
                    assert_eq!(f.map_object(o), o);
                }
                assert_eq!(f.map_object(Object::Point(i)), Object::Point(i + 1));
                // support stays inside the window i-1..=i+1
                for (a, _) in f.support() {
                    assert!(a.index + 1 >= i && a.index <= i + 1, "{a}");
                }
            }
        }
    }
    let _ = Arrow::new(Sheet::A, 0);
}
