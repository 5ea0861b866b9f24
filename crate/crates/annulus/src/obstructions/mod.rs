//! Obstructions to special annulus presentations, per chirality, and the classification
//! pipeline built on them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::quadratic::{i_sqrt3, sqrt5};
use crate::algebra::{LaurentPoly, QuadraticInt, Var, GOLDEN, OMEGA};
use crate::diagram::Diagram;
use crate::invariants::{self, InvariantError};

#[derive(Debug, thiserror::Error)]
pub enum ObstructionError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("{name}: |signature|/2 = {half_sigma} exceeds the ingested 4-ball genus {g4}")]
    GenusGate { name: String, half_sigma: i64, g4: i64 },
    #[error("{name}: labelled {cell} but both chiralities are obstructed ({reasons})")]
    Inconsistent { name: String, cell: Cell, reasons: String },
    #[error("expected a 2-component link, found {0} components")]
    Components(usize),
    #[error("linking number is {0}, expected +1 or -1")]
    Linking(i32),
}

/// Ingested invariants of one knot; `None` means unknown.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct External {
    pub u: Option<i64>,
    pub g4: Option<i64>,
    /// Rasmussen invariant
    pub s: Option<i64>,
}

/// Ingested invariants keyed by knot name.
#[derive(Clone, Debug, Default)]
pub struct ExternalInvariants {
    pub rows: BTreeMap<String, External>,
}

impl ExternalInvariants {
    pub fn get(&self, name: &str) -> External {
        self.rows.get(name).copied().unwrap_or_default()
    }

    /// Consistency gate: the signature bound |σ|/2 ≤ g4 whenever g4 is known.
    pub fn gate(&self, name: &str, sigma: i64) -> Result<(), ObstructionError> {
        match self.get(name).g4 {
            Some(g4) if sigma.abs() / 2 > g4 => {
                Err(ObstructionError::GenusGate { name: name.to_string(), half_sigma: sigma.abs() / 2, g4 })
            }
            _ => Ok(()),
        }
    }
}

/// The obstructions, in the order used to decide a "No" cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Obstruction {
    /// 4-ball genus at least 2 (no annulus presentation at all)
    FourGenus,
    /// ν outside the window of one chirality
    Nu,
    /// V(ω) = ∓i√3 rules out one chirality
    JonesOmega,
    /// V(ω) = ±3 rules out both
    JonesThree,
    /// Q at the golden point equals √5
    QGolden,
}

impl Obstruction {
    /// Stage in the deciding cascade; obstructions of one stage are combined.
    fn stage(self) -> u8 {
        match self {
            Obstruction::FourGenus => 0,
            Obstruction::Nu | Obstruction::JonesOmega => 1,
            Obstruction::JonesThree => 2,
            Obstruction::QGolden => 3,
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Obstruction::FourGenus => "four-genus",
            Obstruction::Nu => "nu",
            Obstruction::JonesOmega => "jones-omega",
            Obstruction::JonesThree => "jones-three",
            Obstruction::QGolden => "q-golden",
        })
    }
}

/// One fired or inconclusive obstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub obstruction: Obstruction,
    pub positive: bool,
    pub negative: bool,
    pub detail: String,
}

impl Reason {
    fn fired(&self) -> bool {
        self.positive || self.negative
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules = match (self.positive, self.negative) {
            (true, true) => "rules out both",
            (true, false) => "rules out positive",
            (false, true) => "rules out negative",
            (false, false) => "inconclusive",
        };
        write!(f, "{} {rules}: {}", self.obstruction, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChiralityVerdict {
    pub positive_ruled_out: bool,
    pub negative_ruled_out: bool,
    pub reasons: Vec<Reason>,
}

impl ChiralityVerdict {
    fn push(&mut self, r: Reason) {
        self.positive_ruled_out |= r.positive;
        self.negative_ruled_out |= r.negative;
        self.reasons.push(r);
    }

    pub fn both(&self) -> bool {
        self.positive_ruled_out && self.negative_ruled_out
    }

    /// Fired obstructions of the earliest cascade stage that rules out both chiralities on
    /// its own; empty when no stage does.
    pub fn decided_by(&self) -> Vec<Obstruction> {
        for stage in 0..=3 {
            let fired: Vec<&Reason> =
                self.reasons.iter().filter(|r| r.fired() && r.obstruction.stage() == stage).collect();
            if fired.iter().any(|r| r.positive) && fired.iter().any(|r| r.negative) {
                let mut out: Vec<Obstruction> = fired.iter().map(|r| r.obstruction).collect();
                out.sort();
                out.dedup();
                return out;
            }
        }
        vec![]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Cell {
    #[serde(rename = "u=1")]
    UnknottingOne,
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cell::UnknottingOne => "u=1",
            Cell::Yes => "Yes",
            Cell::No => "No",
            Cell::Unknown => "Unknown",
        })
    }
}

impl std::str::FromStr for Cell {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "u=1" => Ok(Cell::UnknottingOne),
            "Yes" => Ok(Cell::Yes),
            "No" => Ok(Cell::No),
            "Unknown" => Ok(Cell::Unknown),
            _ => Err(format!("unknown cell {s:?}")),
        }
    }
}

/// Invariants of a knot diagram used by the obstructions.
#[derive(Clone, Debug)]
pub struct Computed {
    pub jones: LaurentPoly,
    pub conway: LaurentPoly,
    pub q: LaurentPoly,
    pub signature: i64,
    pub determinant: u64,
    /// dim H_1(double branched cover; Z/3)
    pub d: usize,
    pub jones_omega: QuadraticInt,
    pub q_golden: QuadraticInt,
}

impl Computed {
    pub fn of(k: &Diagram) -> Result<Self, ObstructionError> {
        let jones = invariants::jones(k);
        let q = invariants::q_poly(k)?;
        Ok(Computed {
            jones_omega: jones_at_omega(&jones)?,
            q_golden: q.eval_quadratic(&QuadraticInt::root(GOLDEN)).map_err(InvariantError::from)?,
            conway: invariants::conway(k)?,
            signature: invariants::signature(k)?,
            determinant: invariants::determinant(k)?,
            d: invariants::branched_d(k)?,
            jones,
            q,
        })
    }

    /// Flat string map for reports.
    pub fn summary(&self) -> BTreeMap<String, String> {
        BTreeMap::from([
            ("jones".into(), self.jones.render()),
            ("conway".into(), self.conway.render()),
            ("q".into(), self.q.render()),
            ("signature".into(), self.signature.to_string()),
            ("determinant".into(), self.determinant.to_string()),
            ("d".into(), self.d.to_string()),
            ("jones_omega".into(), self.jones_omega.to_string()),
            ("q_golden".into(), self.q_golden.to_string()),
        ])
    }
}

/// V(ω) for a Jones polynomial stored in q = t^{1/2}; half-integer powers of t have no value
/// in the ω-ring.
pub fn jones_at_omega(jones: &LaurentPoly) -> Result<QuadraticInt, InvariantError> {
    let in_t = jones.compress(2, Var::T).ok_or(InvariantError::HalfIntegerPowers)?;
    Ok(in_t.eval_quadratic(&QuadraticInt::root(OMEGA))?)
}

/// Fires when |σ| ≥ 4 or the ingested g4 is at least 2; rules out both chiralities.
pub fn obstruct_g4(sigma: i64, g4_ext: Option<i64>) -> Reason {
    let by_sigma = sigma.abs() >= 4;
    let by_ext = g4_ext.is_some_and(|g| g >= 2);
    let detail = if by_sigma {
        format!("|signature| = {} >= 4", sigma.abs())
    } else if by_ext {
        format!("g4 = {} >= 2", g4_ext.unwrap())
    } else {
        format!("|signature| = {} and g4 = {}", sigma.abs(), g4_ext.map_or("?".into(), |g| g.to_string()))
    };
    let fired = by_sigma || by_ext;
    Reason { obstruction: Obstruction::FourGenus, positive: fired, negative: fired, detail }
}

/// Negative ruled out iff s ∉ [−2, 0]; positive iff s ∉ [0, 2]. Missing s is inconclusive.
pub fn obstruct_nu(s: Option<i64>) -> Reason {
    match s {
        None => Reason { obstruction: Obstruction::Nu, positive: false, negative: false, detail: "s unknown".into() },
        Some(s) => Reason {
            obstruction: Obstruction::Nu,
            positive: !(0..=2).contains(&s),
            negative: !(-2..=0).contains(&s),
            detail: format!("s = {s}"),
        },
    }
}

/// V(ω) = −i√3 rules out positive, +i√3 negative, ±3 both.
pub fn obstruct_jones(vomega: &QuadraticInt) -> Vec<Reason> {
    let three = QuadraticInt::from_int(OMEGA, BigInt::from(3));
    let mut out = vec![];
    let minus = -i_sqrt3();
    let omega_reason = Reason {
        obstruction: Obstruction::JonesOmega,
        positive: *vomega == minus,
        negative: *vomega == i_sqrt3(),
        detail: format!("V(w) = {vomega}"),
    };
    out.push(omega_reason);
    let is_three = *vomega == three || *vomega == -three;
    out.push(Reason {
        obstruction: Obstruction::JonesThree,
        positive: is_three,
        negative: is_three,
        detail: format!("V(w) = {vomega}"),
    });
    out
}

/// Fires iff Q at the golden point equals √5; Q does not see chirality.
pub fn obstruct_q(qval: &QuadraticInt) -> Reason {
    let fired = *qval == sqrt5();
    Reason { obstruction: Obstruction::QGolden, positive: fired, negative: fired, detail: format!("Q(r) = {qval}") }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeridianResult {
    Distinct,
    Inconclusive,
}

/// "Distinct" iff ∇ of `k ∪ β` differs from z·∇_K, which it would equal for a meridian.
pub fn meridian_test(k: &Diagram, kbeta: &Diagram) -> Result<MeridianResult, ObstructionError> {
    let n = kbeta.component_count();
    if n != 2 {
        return Err(ObstructionError::Components(n));
    }
    let lk = kbeta.linking_number(0, 1);
    if lk.abs() != 1 {
        return Err(ObstructionError::Linking(lk));
    }
    let alpha = &LaurentPoly::gen(Var::Z) * &invariants::conway(k)?;
    let beta = if lk < 0 {
        invariants::conway(&kbeta.flip_component(1).map_err(InvariantError::from)?)?
    } else {
        invariants::conway(kbeta)?
    };
    Ok(if beta == alpha { MeridianResult::Inconclusive } else { MeridianResult::Distinct })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LmCheck {
    pub components: usize,
    pub d: usize,
    pub value: String,
    pub pass: bool,
}

/// V(ω) = ±(i√3)^d for knots; for links |V(ω)|² = 3^d.
pub fn lm_check(d: &Diagram) -> Result<LmCheck, ObstructionError> {
    let components = d.component_count();
    let dim = invariants::branched_d(d)?;
    let jones = invariants::jones(d);
    let (value, pass) = match jones_at_omega(&jones) {
        Ok(v) if components == 1 => {
            let w = i_sqrt3().pow(dim as u32);
            let pass = v == w || v == -w;
            (v.to_string(), pass)
        }
        Ok(v) => {
            let n = v.norm();
            (v.to_string(), n == BigInt::from(3).pow(dim as u32))
        }
        Err(_) => {
            // t^{1/2} V has integer powers and the same modulus at ω
            let shifted = jones.shift(1);
            let v = jones_at_omega(&shifted)?;
            let n = v.norm();
            (format!("t^(1/2)*V = {v}"), n == BigInt::from(3).pow(dim as u32))
        }
    };
    Ok(LmCheck { components, d: dim, value, pass })
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub name: String,
    pub cell: Cell,
    pub verdict: ChiralityVerdict,
    pub decided_by: Vec<Obstruction>,
    pub invariants: BTreeMap<String, String>,
}

/// Cell priority: u = 1, then the explicit-presentation set, then obstructions on both
/// chiralities, else Unknown. A u = 1 or explicit knot with both chiralities obstructed is a
/// hard error.
pub fn classify(
    name: &str,
    computed: &Computed,
    ext: &ExternalInvariants,
    explicit: bool,
) -> Result<ObstructionReport, ObstructionError> {
    ext.gate(name, computed.signature)?;
    let e = ext.get(name);
    let mut verdict = ChiralityVerdict::default();
    verdict.push(obstruct_g4(computed.signature, e.g4));
    verdict.push(obstruct_nu(e.s));
    for r in obstruct_jones(&computed.jones_omega) {
        verdict.push(r);
    }
    verdict.push(obstruct_q(&computed.q_golden));
    let cell = if e.u == Some(1) {
        Cell::UnknottingOne
    } else if explicit {
        Cell::Yes
    } else if verdict.both() {
        Cell::No
    } else {
        Cell::Unknown
    };
    if matches!(cell, Cell::UnknottingOne | Cell::Yes) && verdict.both() {
        let reasons: Vec<String> = verdict.reasons.iter().filter(|r| r.fired()).map(|r| r.to_string()).collect();
        return Err(ObstructionError::Inconsistent { name: name.to_string(), cell, reasons: reasons.join("; ") });
    }
    let decided_by = if cell == Cell::No { verdict.decided_by() } else { vec![] };
    Ok(ObstructionReport { name: name.to_string(), cell, verdict, decided_by, invariants: computed.summary() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_windows() {
        let r = obstruct_nu(Some(2));
        assert!(r.negative && !r.positive);
        let r = obstruct_nu(Some(0));
        assert!(!r.negative && !r.positive);
        let r = obstruct_nu(Some(-2));
        assert!(r.positive && !r.negative);
        assert!(!obstruct_nu(None).fired());
    }

    #[test]
    fn jones_rules_swap_under_conjugation() {
        let v = -i_sqrt3();
        let a = obstruct_jones(&v);
        let b = obstruct_jones(&v.conj());
        assert!(a[0].positive && !a[0].negative);
        assert!(b[0].negative && !b[0].positive);
        let three = QuadraticInt::from_int(OMEGA, BigInt::from(-3));
        assert!(obstruct_jones(&three)[1].positive && obstruct_jones(&three)[1].negative);
        assert!(obstruct_jones(&QuadraticInt::one(OMEGA)).iter().all(|r| !r.fired()));
    }

    #[test]
    fn g4_fires_on_signature_or_data() {
        assert!(obstruct_g4(-4, None).fired());
        assert!(obstruct_g4(0, Some(2)).fired());
        assert!(!obstruct_g4(0, Some(1)).fired());
        assert!(!obstruct_g4(0, None).fired());
    }

    #[test]
    fn q_fires_only_on_sqrt5() {
        assert!(obstruct_q(&sqrt5()).fired());
        assert!(!obstruct_q(&QuadraticInt::one(GOLDEN)).fired());
    }
}
