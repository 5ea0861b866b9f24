use annulus::algebra::{LaurentPoly, Var};
use annulus::diagram::{parse_named, Diagram};
use annulus::invariants;

fn knots() -> Vec<(String, Diagram)> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/knots.pd");
    parse_named(&std::fs::read_to_string(path).unwrap()).unwrap()
}

struct Row {
    name: String,
    jones: LaurentPoly,
    conway: LaurentPoly,
    signature: i64,
    det: u64,
}

fn table() -> Vec<Row> {
    include_str!("data/knot_table.tsv")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            Row {
                name: f[0].into(),
                jones: LaurentPoly::parse(f[1]).unwrap().with_var(Var::Q),
                conway: LaurentPoly::parse(f[2]).unwrap().with_var(Var::Z),
                signature: f[3].parse().unwrap(),
                det: f[4].parse().unwrap(),
            }
        })
        .collect()
}

fn lookup<'a>(ks: &'a [(String, Diagram)], name: &str) -> &'a Diagram {
    &ks.iter().find(|(n, _)| n == name).unwrap().1
}

#[test]
fn jones_matches_table() {
    let ks = knots();
    for r in table() {
        let d = lookup(&ks, &r.name);
        assert_eq!(invariants::jones(d), r.jones, "{}", r.name);
        assert_eq!(invariants::jones_skein(d).unwrap(), r.jones, "{} (skein)", r.name);
    }
}

#[test]
fn conway_matches_table() {
    let ks = knots();
    for r in table() {
        let d = lookup(&ks, &r.name);
        assert_eq!(invariants::conway(d).unwrap(), r.conway, "{}", r.name);
        assert_eq!(invariants::conway_skein(d).unwrap(), r.conway, "{} (skein)", r.name);
    }
}

#[test]
fn signature_and_determinant_match_table() {
    let ks = knots();
    for r in table() {
        let d = lookup(&ks, &r.name);
        assert_eq!(invariants::signature(d).unwrap(), r.signature, "{}", r.name);
        assert_eq!(invariants::determinant(d).unwrap(), r.det, "{}", r.name);
    }
}

#[test]
fn seifert_matrix_size() {
    for (name, d) in knots() {
        let s = invariants::seifert(&d).unwrap();
        assert_eq!(s.matrix.rows() + s.circles, s.braid.len() + 1, "{name}");
        assert_eq!(s.braid.len(), s.crossings + 2 * s.vogel_moves, "{name}");
        let sym = s.matrix.add(&s.matrix.transpose());
        assert!(sym.det().unwrap() % 2 != 0.into(), "{name}");
    }
}
