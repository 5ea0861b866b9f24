use crate::algebra::{LaurentPoly, Var};
use crate::diagram::{Diagram, Pairing};
use crate::par;

use super::Engine;

fn delta() -> LaurentPoly {
    // -A^2 - A^{-2}
    LaurentPoly::from_terms(Var::A, [(2, -1), (-2, -1)])
}

fn minus_a3() -> LaurentPoly {
    LaurentPoly::mono(Var::A, 3, -1)
}

/// <X[a,b,c,d]> = A <(a,b)(c,d)> + A^{-1} <(a,d)(b,c)>: the A-smoothing merges the corners
/// swept by turning the over-strand counterclockwise. Kinks contribute (-A^3)^{sign}.
pub(super) fn bracket(e: &Engine, d: &Diagram) -> LaurentPoly {
    let s = d.simplify();
    let factor = minus_a3().powi(s.writhe_delta as i64);
    let d = s.diagram;
    if d.n_crossings() == 0 {
        let k = d.loops();
        return if k == 0 { factor } else { &factor * &delta().pow(k - 1) };
    }
    let key = d.key();
    if let Some(v) = e.bracket.get(&key) {
        return &factor * &v;
    }
    let (a, b) = par::join(
        e.split(&d),
        || bracket(e, &d.smooth_with(0, Pairing::Adjacent01).expect("crossing 0")),
        || bracket(e, &d.smooth_with(0, Pairing::Adjacent03).expect("crossing 0")),
    );
    let v = &(&LaurentPoly::mono(Var::A, 1, 1) * &a) + &(&LaurentPoly::mono(Var::A, -1, 1) * &b);
    e.bracket.insert(key, v.clone());
    &factor * &v
}

/// V = (-A^3)^{-w} <D> with t = A^{-4}, returned in q = t^{1/2} = A^{-2}.
pub(super) fn jones(e: &Engine, d: &Diagram) -> LaurentPoly {
    let b = bracket(e, d);
    let f = &minus_a3().powi(-(d.writhe() as i64)) * &b;
    f.compress(2, Var::Q).expect("odd power of A in a normalised bracket").subst_power(-1, Var::Q)
}
