use num_traits::Signed;

use crate::algebra::IntMatrix;
use crate::diagram::Diagram;

use super::InvariantError;

/// Goeritz matrix on the white regions: off-diagonal entries are minus the summed incidence
/// numbers of crossings joining two regions, the diagonal makes every row sum to zero.
/// A crossing has incidence +1 when its white corners sit counterclockwise after an
/// under-slot, -1 otherwise.
pub fn goeritz(d: &Diagram) -> Result<IntMatrix, InvariantError> {
    let cb = d.checkerboard()?;
    let mut index = vec![usize::MAX; cb.white.len()];
    let mut n = 0;
    for (f, &w) in cb.white.iter().enumerate() {
        if w {
            index[f] = n;
            n += 1;
        }
    }
    let mut g = IntMatrix::zeros(n, n);
    for i in 0..d.n_crossings() {
        let corners: Vec<usize> = (0..4).map(|k| cb.faces.corner(i, k)).collect();
        let (r, s, eta) = if cb.white[corners[0]] {
            (corners[0], corners[2], 1)
        } else {
            (corners[1], corners[3], -1)
        };
        if r == s {
            continue;
        }
        let (a, b) = (index[r], index[s]);
        g.add_at(a, b, -eta);
        g.add_at(b, a, -eta);
        g.add_at(a, a, eta);
        g.add_at(b, b, eta);
    }
    Ok(g)
}

/// The Goeritz matrix with its first row and column deleted.
pub fn reduced_goeritz(d: &Diagram) -> Result<IntMatrix, InvariantError> {
    let g = goeritz(d)?;
    Ok(if g.rows() == 0 { g } else { g.minor(0, 0) })
}

/// Dimension of H_1 of the double branched cover with Z/3 coefficients.
pub fn branched_d(d: &Diagram) -> Result<usize, InvariantError> {
    Ok(reduced_goeritz(d)?.corank_mod3()?)
}

/// |det| of the reduced Goeritz matrix.
pub fn determinant(d: &Diagram) -> Result<u64, InvariantError> {
    let det = reduced_goeritz(d)?.det()?;
    Ok(u64::try_from(det.abs()).expect("determinant fits in u64"))
}
