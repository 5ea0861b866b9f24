//! Link invariants computed from diagrams.

mod bracket;
mod goeritz;
pub mod memo;
mod seifert;
mod skein;

use std::sync::OnceLock;

pub use goeritz::{branched_d, determinant, goeritz, reduced_goeritz};
pub use memo::MemoCache;
pub use seifert::{braid_seifert_matrix, braid_word, seifert, SeifertData};

use crate::algebra::{AlgebraError, LaurentPoly};
use crate::diagram::{Diagram, DiagramError};

#[derive(Debug, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("skein recursion exceeded depth {0}")]
    DepthGuard(usize),
    #[error("braid extraction failed: {0}")]
    Braid(String),
    #[error("Jones polynomial has half-integer powers of t")]
    HalfIntegerPowers,
}

/// Crossing count from which skein branches are evaluated in parallel.
const PAR_THRESHOLD: usize = 7;
pub(crate) const DEPTH_LIMIT: usize = 100_000;

/// Memo tables and evaluation settings shared by the skein computations.
pub struct Engine {
    pub(crate) bracket: MemoCache<LaurentPoly>,
    pub(crate) q: MemoCache<LaurentPoly>,
    pub(crate) conway: MemoCache<LaurentPoly>,
    pub(crate) jones: MemoCache<LaurentPoly>,
    parallel: bool,
}

impl Engine {
    pub fn new(cache: bool, parallel: bool) -> Self {
        Engine {
            bracket: MemoCache::new(cache),
            q: MemoCache::new(cache),
            conway: MemoCache::new(cache),
            jones: MemoCache::new(cache),
            parallel: parallel && crate::par::available(),
        }
    }

    /// The process-wide engine: cache on, parallel when compiled in.
    pub fn global() -> &'static Engine {
        static E: OnceLock<Engine> = OnceLock::new();
        E.get_or_init(|| Engine::new(true, true))
    }

    pub(crate) fn split(&self, d: &Diagram) -> bool {
        self.parallel && d.n_crossings() >= PAR_THRESHOLD
    }

    pub fn bracket(&self, d: &Diagram) -> LaurentPoly {
        bracket::bracket(self, d)
    }

    pub fn jones(&self, d: &Diagram) -> LaurentPoly {
        bracket::jones(self, d)
    }

    pub fn q_poly(&self, d: &Diagram) -> Result<LaurentPoly, InvariantError> {
        skein::q_poly(self, d, 0)
    }

    pub fn conway_skein(&self, d: &Diagram) -> Result<LaurentPoly, InvariantError> {
        skein::conway(self, d, 0)
    }

    pub fn jones_skein(&self, d: &Diagram) -> Result<LaurentPoly, InvariantError> {
        skein::jones(self, d, 0)
    }
}

/// Kauffman bracket in A, normalised so the crossingless unknot is 1.
pub fn bracket(d: &Diagram) -> LaurentPoly {
    Engine::global().bracket(d)
}

/// Jones polynomial in q = t^{1/2}.
pub fn jones(d: &Diagram) -> LaurentPoly {
    Engine::global().jones(d)
}

/// Q polynomial in x by its unoriented skein relation.
pub fn q_poly(d: &Diagram) -> Result<LaurentPoly, InvariantError> {
    Engine::global().q_poly(d)
}

/// Conway polynomial by the skein relation over descending diagrams.
pub fn conway_skein(d: &Diagram) -> Result<LaurentPoly, InvariantError> {
    Engine::global().conway_skein(d)
}

/// Jones polynomial by its skein relation, as a cross-check of the bracket route.
pub fn jones_skein(d: &Diagram) -> Result<LaurentPoly, InvariantError> {
    Engine::global().jones_skein(d)
}

/// Conway polynomial from the Seifert matrix; split diagrams give 0.
pub fn conway(d: &Diagram) -> Result<LaurentPoly, InvariantError> {
    if !d.is_connected() {
        return Ok(LaurentPoly::zero(crate::algebra::Var::Z));
    }
    let s = seifert(d)?;
    // the canonical surface of the original diagram bounds the degree
    let bound = s.crossings + 1 - s.circles;
    Ok(crate::algebra::conway_from_seifert_bounded(&s.matrix, bound)?)
}

/// Signature of V + V^T.
pub fn signature(d: &Diagram) -> Result<i64, InvariantError> {
    let s = seifert(d)?;
    Ok(s.matrix.add(&s.matrix.transpose()).signature()?)
}
