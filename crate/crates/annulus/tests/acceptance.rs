//! One pass/fail line per acceptance criterion.
//!
//! Exits 0 after reporting; set `ACCEPTANCE_STRICT=1` to exit 1 when any criterion fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;

use annulus::algebra::quadratic::{i_sqrt3, sqrt5};
use annulus::algebra::{LaurentPoly, QuadraticInt, Var, GOLDEN, OMEGA};
use annulus::data::{self, hopf, load_fixtures, FixtureSet};
use annulus::diagram::Pairing;
use annulus::invariants;
use annulus::obstructions::{self, Cell, MeridianResult, Obstruction};

type Outcome = Result<String, String>;
type Criterion = fn(&FixtureSet) -> Outcome;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

fn expected<'a>(fx: &'a FixtureSet, kind: &str) -> Vec<(&'a str, &'a str)> {
    fx.expected.iter().filter(|e| e.kind == kind).map(|e| (e.name.as_str(), e.value.as_str())).collect()
}

fn poly(text: &str, var: Var) -> LaurentPoly {
    LaurentPoly::parse(text).expect("expected polynomial").with_var(var)
}

fn table_reproduction(fx: &FixtureSet) -> Outcome {
    let rows = data::classify_all(fx, true).map_err(|e| e.to_string())?;
    let got: BTreeMap<&str, Cell> = rows.iter().map(|r| (r.name.as_str(), r.cell)).collect();
    let want = expected(fx, "cell");
    let wrong: Vec<String> = want
        .iter()
        .filter(|(n, v)| got.get(n).map(|c| c.to_string()) != Some(v.to_string()))
        .map(|(n, v)| format!("{n}: want {v}, got {:?}", got.get(n)))
        .collect();
    let count = |c: Cell| rows.iter().filter(|r| r.cell == c).count();
    let counts = [count(Cell::UnknottingOne), count(Cell::Yes), count(Cell::No), count(Cell::Unknown)];
    let detail = format!("{} cells; u=1 {}, Yes {}, No {}, Unknown {}", rows.len(), counts[0], counts[1], counts[2], counts[3]);
    if wrong.is_empty() && rows.len() == 35 && counts == [18, 5, 12, 0] {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", wrong.join("; ")))
    }
}

fn alpha_column(fx: &FixtureSet) -> Outcome {
    let z = LaurentPoly::gen(Var::Z);
    let rows = expected(fx, "conway_alpha");
    let mut bad = vec![];
    for &(name, value) in &rows {
        let k = fx.knot(name).ok_or(format!("no knot {name}"))?;
        let conway = invariants::conway(k).map_err(|e| e.to_string())?;
        let with_meridian = invariants::conway(&k.add_meridian(k.labels()[0], 1).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let times_z = &z * &conway;
        let want = poly(value, Var::Z);
        if with_meridian != want || times_z != want {
            bad.push(format!(
                "{name}: expected {value}, meridian link {}, z*conway {} (conway {}, det {})",
                with_meridian.render(),
                times_z.render(),
                conway.render(),
                invariants::determinant(k).map_err(|e| e.to_string())?
            ));
        }
    }
    let detail = format!("{}/{} rows match by both routes", rows.len() - bad.len(), rows.len());
    if bad.is_empty() && rows.len() == 18 {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", bad.join("; ")))
    }
}

fn beta_column(fx: &FixtureSet) -> Outcome {
    let rows = expected(fx, "conway_beta");
    let (mut verified, mut unverified, mut problems) = (vec![], vec![], vec![]);
    for &(name, value) in &rows {
        let k = fx.knot(name).ok_or(format!("no knot {name}"))?;
        let Some(b) = fx.beta_links.iter().find(|b| b.name == name) else {
            problems.push(format!("{name}: no fixture"));
            continue;
        };
        match obstructions::meridian_test(k, &b.link) {
            Ok(MeridianResult::Distinct) => {}
            other => problems.push(format!("{name}: meridian test {other:?}")),
        }
        let c = invariants::conway(&b.link).map_err(|e| e.to_string())?;
        if c == poly(value, Var::Z) && !b.unverified {
            verified.push(name);
        } else if b.unverified {
            unverified.push(format!("{name} (computed {}, printed {value})", c.render()));
        } else {
            problems.push(format!("{name}: computed {}, printed {value}", c.render()));
        }
    }
    let detail = format!(
        "{}/{} verified, meridian test distinct for {}; unverified: {}",
        verified.len(),
        rows.len(),
        rows.len() - problems.iter().filter(|p| p.contains("meridian") || p.contains("no fixture")).count(),
        if unverified.is_empty() { "none".into() } else { unverified.join(", ") }
    );
    if problems.is_empty() && verified.len() >= 15 && rows.len() == 18 {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", problems.join("; ")))
    }
}

fn jones_values(fx: &FixtureSet) -> Outcome {
    let k74 = fx.knot("7_4").ok_or("no 7_4")?;
    let v74 = invariants::jones(k74);
    let want74 = poly("t-2t^2+3t^3-2t^4+3t^5-2t^6+t^7-t^8", Var::Q);
    let w = QuadraticInt::root(OMEGA);
    let one_minus_2w = &QuadraticInt::one(OMEGA) - &w.scale(2);
    let at_w = obstructions::jones_at_omega(&v74).map_err(|e| e.to_string())?;
    let vh = invariants::jones(&hopf());
    let want_h = poly("-t^(5/2)-t^(1/2)", Var::Q);
    let v818 = obstructions::jones_at_omega(&invariants::jones(fx.knot("8_18").ok_or("no 8_18")?))
        .map_err(|e| e.to_string())?;
    let three = QuadraticInt::from_int(OMEGA, 3.into());
    let checks = [
        ("V(7_4)", v74 == want74),
        ("V(7_4)(w) = 1-2w", at_w == one_minus_2w && at_w == -i_sqrt3()),
        ("V(H+)", vh == want_h),
        ("V(8_18)(w) = ±3", v818 == three || v818 == -three),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    let detail = format!("V(7_4)(w) = {at_w}, V(8_18)(w) = {v818}");
    if failed.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; failed {}", failed.join(", ")))
    }
}

fn q_values(fx: &FixtureSet) -> Outcome {
    let r = QuadraticInt::root(GOLDEN);
    let mut failed = vec![];
    for &(name, value) in &expected(fx, "q") {
        let q = invariants::q_poly(fx.knot(name).ok_or(format!("no {name}"))?).map_err(|e| e.to_string())?;
        if q != poly(value, Var::X) {
            failed.push(format!("Q({name}) = {}", q.render()));
        }
        if q.eval_quadratic(&r).map_err(|e| e.to_string())? != sqrt5() {
            failed.push(format!("Q({name})(r) != √5"));
        }
    }
    let qh = invariants::q_poly(&hopf()).map_err(|e| e.to_string())?.eval_quadratic(&r).map_err(|e| e.to_string())?;
    if qh != QuadraticInt::from_int(GOLDEN, (-1).into()) {
        failed.push(format!("Q(H)(r) = {qh}"));
    }
    if failed.is_empty() && expected(fx, "q").len() == 2 {
        Ok("Q(8_8), Q(8_16) exact and √5 at r; Q(H)(r) = -1".into())
    } else {
        Err(failed.join("; "))
    }
}

fn lickorish_millett(fx: &FixtureSet) -> Outcome {
    let knots = &fx.knots;
    let mut failed = vec![];
    for (name, k) in knots {
        let lm = obstructions::lm_check(k).map_err(|e| e.to_string())?;
        if !lm.pass {
            failed.push(format!("{name}: lm {} with d = {}", lm.value, lm.d));
        }
        if k.n_crossings() == 0 {
            continue;
        }
        let g = invariants::reduced_goeritz(k).map_err(|e| e.to_string())?;
        let g = if g.rows() == 0 { 1.into() } else { g.det().map_err(|e| e.to_string())? };
        let s = invariants::seifert(k).map_err(|e| e.to_string())?;
        let v = s.matrix.add(&s.matrix.transpose());
        let v = if v.rows() == 0 { 1.into() } else { v.det().map_err(|e| e.to_string())? };
        if num_traits::Signed::abs(&g) != num_traits::Signed::abs(&v) {
            failed.push(format!("{name}: |det G| = {g}, |det(V+V^T)| = {v}"));
        }
    }
    if failed.is_empty() && knots.len() == 36 {
        Ok(format!("{} knots pass both checks", knots.len()))
    } else {
        Err(format!("{} knots; {}", knots.len(), failed.join("; ")))
    }
}

fn skein_relations(fx: &FixtureSet) -> Outcome {
    let e = |r: Result<LaurentPoly, invariants::InvariantError>| r.map_err(|e| e.to_string());
    let q = |k: i64| LaurentPoly::mono(Var::Q, k, 1);
    let (mut jones, mut qrel, mut conway) = (0, 0, 0);
    let mut failed = vec![];
    for (name, k) in &fx.knots {
        for c in 0..k.n_crossings() {
            let sw = k.switch(c).map_err(|e| e.to_string())?;
            let (plus, minus) = if k.sign(c) > 0 { (k, &sw) } else { (&sw, k) };
            let l0 = k.smooth_oriented(c).map_err(|e| e.to_string())?;
            let v0 = invariants::jones(&l0);
            let lhs = &(&q(-2) * &invariants::jones(plus)) - &(&q(2) * &invariants::jones(minus));
            if lhs == &(&q(1) - &q(-1)) * &v0 {
                jones += 1;
            } else {
                failed.push(format!("{name}/{c}: Jones"));
            }
            let a = k.smooth_with(c, Pairing::Adjacent01).map_err(|e| e.to_string())?;
            let b = k.smooth_with(c, Pairing::Adjacent03).map_err(|e| e.to_string())?;
            let lhs = &e(invariants::q_poly(k))? + &e(invariants::q_poly(&sw))?;
            let rhs = &LaurentPoly::gen(Var::X) * &(&e(invariants::q_poly(&a))? + &e(invariants::q_poly(&b))?);
            if lhs == rhs {
                qrel += 1;
            } else {
                failed.push(format!("{name}/{c}: Q"));
            }
            let lhs = &e(invariants::conway(plus))? - &e(invariants::conway(minus))?;
            if lhs == &LaurentPoly::gen(Var::Z) * &e(invariants::conway(&l0))? {
                conway += 1;
            } else {
                failed.push(format!("{name}/{c}: Conway"));
            }
        }
    }
    let detail = format!("instances: Jones {jones}, Q {qrel}, Conway {conway}");
    if failed.is_empty() && jones.min(qrel).min(conway) >= 200 {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", failed.join("; ")))
    }
}

fn chirality_decomposition(fx: &FixtureSet) -> Outcome {
    use Obstruction::*;
    let rows = data::classify_all(fx, true).map_err(|e| e.to_string())?;
    let want: BTreeMap<&str, Vec<Obstruction>> = [
        ("5_1", vec![FourGenus]),
        ("7_1", vec![FourGenus]),
        ("7_3", vec![FourGenus]),
        ("7_5", vec![FourGenus]),
        ("8_2", vec![FourGenus]),
        ("8_5", vec![FourGenus]),
        ("8_15", vec![FourGenus]),
        ("8_19", vec![FourGenus]),
        ("7_4", vec![Nu, JonesOmega]),
        ("8_18", vec![JonesThree]),
        ("8_8", vec![QGolden]),
        ("8_16", vec![QGolden]),
    ]
    .into();
    let mut failed = vec![];
    for r in rows.iter().filter(|r| r.cell == Cell::No) {
        if want.get(r.name.as_str()) != Some(&r.decided_by) {
            failed.push(format!("{}: decided by {:?}", r.name, r.decided_by));
        }
        if r.decided_by == [FourGenus] {
            let sigma: i64 = r.invariants["signature"].parse().map_err(|_| "signature")?;
            if sigma.abs() < 4 {
                failed.push(format!("{}: |signature| = {}", r.name, sigma.abs()));
            }
        }
    }
    let n = rows.iter().filter(|r| r.cell == Cell::No).count();
    if failed.is_empty() && n == want.len() {
        Ok(format!("{n} No verdicts: 8 by |signature| >= 4, 7_4 by nu + V(w), 8_18 by V(w) = ±3, 8_8 and 8_16 by Q(r)"))
    } else {
        Err(failed.join("; "))
    }
}

fn determinism(_: &FixtureSet) -> Outcome {
    let run = |threads: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_annulus"))
            .args(["--threads", threads, "verify-paper", "--fixtures"])
            .arg(fixtures_dir())
            .output()
            .map_err(|e| e.to_string())?;
        if out.status.code() == Some(2) {
            return Err(String::from_utf8_lossy(&out.stderr).into_owned());
        }
        Ok(out.stdout)
    };
    let settings = ["1", "2", "4", "0"];
    let outputs: Vec<Vec<u8>> = settings.iter().map(|t| run(t)).collect::<Result<_, _>>()?;
    if outputs.iter().all(|o| *o == outputs[0]) && !outputs[0].is_empty() {
        Ok(format!("{} runs (threads {}) byte-identical, {} bytes", outputs.len(), settings.join(", "), outputs[0].len()))
    } else {
        Err("verify-paper output differs between thread settings".into())
    }
}

fn main() {
    let fx = match load_fixtures(&fixtures_dir()) {
        Ok(fx) => fx,
        Err(e) => {
            println!("fixtures failed to load: {e}");
            std::process::exit(1);
        }
    };
    let criteria: [(&str, Criterion); 9] = [
        ("classification table", table_reproduction),
        ("alpha-column Conway polynomials", alpha_column),
        ("beta-column Conway polynomials", beta_column),
        ("Jones values", jones_values),
        ("Q values", q_values),
        ("Lickorish-Millett and determinant coherence", lickorish_millett),
        ("skein relations", skein_relations),
        ("chirality decomposition", chirality_decomposition),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(|| f(&fx)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(d) => println!("criterion {}: PASS  {title}: {d}", i + 1),
            Err(d) => {
                failures += 1;
                println!("criterion {}: FAIL  {title}: {d}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 && std::env::var_os("ACCEPTANCE_STRICT").is_some() {
        std::process::exit(1);
    }
}
