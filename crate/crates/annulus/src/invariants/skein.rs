//! Skein recursions over descending diagrams.
//!
//! Components are traversed in order from their minimum labels; the first crossing met
//! from below is switched. Switching keeps labels, so (crossings, ascending crossings)
//! drops lexicographically and the recursion ends at unlinks.

use crate::algebra::{LaurentPoly, Var};
use crate::diagram::{Diagram, Pairing};
use crate::par;

use super::{Engine, InvariantError, DEPTH_LIMIT};

type R = Result<LaurentPoly, InvariantError>;

fn guard(depth: usize) -> Result<(), InvariantError> {
    if depth > DEPTH_LIMIT {
        Err(InvariantError::DepthGuard(DEPTH_LIMIT))
    } else {
        Ok(())
    }
}

/// mu = 2x^{-1} - 1, the value of a split unknot.
pub(crate) fn q_mu() -> LaurentPoly {
    LaurentPoly::from_terms(Var::X, [(-1, 2), (0, -1)])
}

/// Q(L+) + Q(L-) = x (Q(L0) + Q(Linf)).
pub(super) fn q_poly(e: &Engine, d: &Diagram, depth: usize) -> R {
    guard(depth)?;
    let d = d.simplify().diagram;
    let Some(c) = d.first_ascending() else {
        let k = d.component_count().max(1) as u32;
        return Ok(q_mu().pow(k - 1));
    };
    let key = d.key();
    if let Some(v) = e.q.get(&key) {
        return Ok(v);
    }
    let sw = d.switch(c)?;
    let l0 = d.smooth_with(c, Pairing::Adjacent01)?;
    let li = d.smooth_with(c, Pairing::Adjacent03)?;
    let (a, (b, c2)) = par::join(
        e.split(&d),
        || q_poly(e, &sw, depth + 1),
        || par::join(e.split(&d), || q_poly(e, &l0, depth + 1), || q_poly(e, &li, depth + 1)),
    );
    let v = &(&LaurentPoly::gen(Var::X) * &(&b? + &c2?)) - &a?;
    e.q.insert(key, v.clone());
    Ok(v)
}

/// C(L+) - C(L-) = z C(L0); unknot 1, split links 0.
pub(super) fn conway(e: &Engine, d: &Diagram, depth: usize) -> R {
    guard(depth)?;
    let d = d.simplify().diagram;
    let Some(c) = d.first_ascending() else {
        let k = d.component_count();
        return Ok(LaurentPoly::constant(Var::Z, if k == 1 { 1 } else { 0 }));
    };
    let key = d.key();
    if let Some(v) = e.conway.get(&key) {
        return Ok(v);
    }
    let eps = d.sign(c) as i64;
    let sw = d.switch(c)?;
    let l0 = d.smooth_oriented(c)?;
    let (a, b) = par::join(e.split(&d), || conway(e, &sw, depth + 1), || conway(e, &l0, depth + 1));
    let v = &a? + &(&LaurentPoly::mono(Var::Z, 1, eps) * &b?);
    e.conway.insert(key, v.clone());
    Ok(v)
}

/// q^{-2} V(L+) - q^2 V(L-) = (q - q^{-1}) V(L0), q = t^{1/2}.
pub(super) fn jones(e: &Engine, d: &Diagram, depth: usize) -> R {
    guard(depth)?;
    let d = d.simplify().diagram;
    let Some(c) = d.first_ascending() else {
        let k = d.component_count().max(1) as u32;
        let loop_val = LaurentPoly::from_terms(Var::Q, [(1, -1), (-1, -1)]);
        return Ok(loop_val.pow(k - 1));
    };
    let key = d.key();
    if let Some(v) = e.jones.get(&key) {
        return Ok(v);
    }
    let sw = d.switch(c)?;
    let l0 = d.smooth_oriented(c)?;
    let (a, b) = par::join(e.split(&d), || jones(e, &sw, depth + 1), || jones(e, &l0, depth + 1));
    let (a, b) = (a?, b?);
    let v = if d.sign(c) > 0 {
        // V+ = q^4 V- + (q^3 - q) V0
        &a.shift(4) + &(&LaurentPoly::from_terms(Var::Q, [(3, 1), (1, -1)]) * &b)
    } else {
        // V- = q^{-4} V+ - (q^{-1} - q^{-3}) V0
        &a.shift(-4) - &(&LaurentPoly::from_terms(Var::Q, [(-1, 1), (-3, -1)]) * &b)
    };
    e.jones.insert(key, v.clone());
    Ok(v)
}
