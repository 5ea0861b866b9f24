//! Seifert surfaces via braided diagrams.
//!
//! The diagram is first made braided by Vogel moves (Reidemeister II moves that keep the
//! number of Seifert circles), the braid word is read off the nested circles, and the
//! Seifert matrix of the canonical surface of the braid closure is assembled from the word.

use std::collections::{BTreeSet, BinaryHeap, HashMap};
use std::cmp::Reverse;

use crate::algebra::IntMatrix;
use crate::diagram::{Diagram, DiagramError};

use super::InvariantError;

const VOGEL_LIMIT: usize = 10_000;

#[derive(Clone, Debug)]
pub struct SeifertData {
    /// Seifert circles of the input diagram (Vogel moves keep this number).
    pub circles: usize,
    /// Crossings of the input diagram.
    pub crossings: usize,
    /// Reidemeister II moves used to braid the diagram.
    pub vogel_moves: usize,
    /// Braid word of the braided diagram; letter `±k` is the generator `σ_k^{±1}`.
    pub braid: Vec<i32>,
    /// Seifert matrix, of size `braid.len() - circles + 1`.
    pub matrix: IntMatrix,
}

impl SeifertData {
    /// Genus of the surface built on the braided diagram (components counted from the diagram).
    pub fn genus(&self, components: usize) -> usize {
        (self.matrix.rows() + 1 - components) / 2
    }
}

/// Seifert circles: label -> circle index, and per circle the crossings met in order.
struct Circles {
    of_edge: HashMap<u32, usize>,
    crossings: Vec<Vec<usize>>,
}

fn seifert_circles(d: &Diagram) -> Circles {
    let x = d.crossings();
    let fwd = d.over_forward();
    let heads = d.heads();
    let mut labels: Vec<u32> = heads.keys().copied().collect();
    labels.sort_unstable();
    let mut of_edge = HashMap::new();
    let mut crossings = vec![];
    for &start in &labels {
        if of_edge.contains_key(&start) {
            continue;
        }
        let id = crossings.len();
        let mut cs = vec![];
        let mut e = start;
        loop {
            of_edge.insert(e, id);
            let (i, s) = heads[&e];
            cs.push(i);
            // oriented smoothing: in-under -> out-over, in-over -> out-under
            let out = if s == 0 { if fwd[i] { 1 } else { 3 } } else { 2 };
            e = x[i][out];
            if e == start {
                break;
            }
        }
        crossings.push(cs);
    }
    Circles { of_edge, crossings }
}

/// A face with two boundary edges on different Seifert circles that run the same way
/// around it; returns `(e1, e2, with_face)`.
fn find_defect(d: &Diagram, c: &Circles) -> Result<Option<(u32, u32, bool)>, DiagramError> {
    let fm = d.faces()?;
    let x = d.crossings();
    for f in &fm.faces {
        let mut seen: [Vec<(usize, u32)>; 2] = [vec![], vec![]];
        for &(i, s) in f {
            let e = x[i][s];
            // the dart leaves crossing i, so it agrees with the edge iff the edge leaves there
            let with = !d.is_entering((i, s));
            let circle = c.of_edge[&e];
            if let Some(&(_, e0)) = seen[with as usize].iter().find(|(k, _)| *k != circle) {
                return Ok(Some((e0, e, with)));
            }
            seen[with as usize].push((circle, e));
        }
    }
    Ok(None)
}

/// Apply Vogel moves until no face is defective.
pub(crate) fn braided(d: &Diagram) -> Result<(Diagram, usize), InvariantError> {
    let mut d = d.clone();
    for moves in 0..VOGEL_LIMIT {
        let c = seifert_circles(&d);
        match find_defect(&d, &c)? {
            None => return Ok((d, moves)),
            Some((e1, e2, with)) => d = d.push_over(e1, e2, with)?,
        }
    }
    Err(InvariantError::Braid(format!("no braided form after {VOGEL_LIMIT} moves")))
}

/// Braid word of a braided diagram with its number of strands.
pub fn braid_word(d: &Diagram) -> Result<(Vec<i32>, usize), InvariantError> {
    let (b, _) = braided(d)?;
    let c = seifert_circles(&b);
    Ok((read_braid(&b, &c)?, c.crossings.len().max(1)))
}

fn read_braid(d: &Diagram, c: &Circles) -> Result<Vec<i32>, InvariantError> {
    let n = d.n_crossings();
    if n == 0 {
        return Ok(vec![]);
    }
    let x = d.crossings();
    let heads = d.heads();
    let fwd = d.over_forward();
    let s = c.crossings.len();
    // circles joined at each crossing: under-strand circle and over-strand circle
    let ends: Vec<(usize, usize)> = (0..n)
        .map(|i| {
            let over_in = if fwd[i] { x[i][3] } else { x[i][1] };
            debug_assert_eq!(heads[&over_in].0, i);
            (c.of_edge[&x[i][0]], c.of_edge[&over_in])
        })
        .collect();
    let mut nbrs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); s];
    for &(a, b) in &ends {
        nbrs[a].insert(b);
        nbrs[b].insert(a);
    }
    let bad = |m: &str| InvariantError::Braid(m.to_string());
    let start = (0..s).find(|&k| nbrs[k].len() == 1).ok_or_else(|| bad("Seifert graph is not a path"))?;
    let mut path = vec![start];
    while path.len() < s {
        let last = *path.last().unwrap();
        let prev = if path.len() > 1 { Some(path[path.len() - 2]) } else { None };
        let next: Vec<usize> = nbrs[last].iter().copied().filter(|&k| Some(k) != prev).collect();
        if next.len() != 1 {
            return Err(bad("Seifert graph is not a path"));
        }
        path.push(next[0]);
    }
    if nbrs[*path.last().unwrap()].len() != 1 {
        return Err(bad("Seifert graph is not a path"));
    }
    let mut level = vec![0usize; s];
    for (k, &p) in path.iter().enumerate() {
        level[p] = k;
    }
    // cut each circle so the cuts line up along a ray from the braid axis
    let mut seqs: Vec<Vec<usize>> = vec![];
    let mut cut = 0;
    for k in 0..s {
        let cyc = &c.crossings[path[k]];
        let seq: Vec<usize> = cyc[cut..].iter().chain(&cyc[..cut]).copied().collect();
        if k + 1 < s {
            let joins_next = |i: usize| {
                let (a, b) = ends[i];
                level[a].max(level[b]) == k + 1
            };
            let first = *seq.iter().find(|&&i| joins_next(i)).unwrap();
            cut = c.crossings[path[k + 1]].iter().position(|&i| i == first).unwrap();
        }
        seqs.push(seq);
    }
    let mut succ: Vec<Vec<usize>> = vec![vec![]; n];
    let mut indeg = vec![0usize; n];
    for seq in &seqs {
        for w in seq.windows(2) {
            succ[w[0]].push(w[1]);
            indeg[w[1]] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&i| indeg[i] == 0).map(Reverse).collect();
    let mut word = vec![];
    while let Some(Reverse(i)) = heap.pop() {
        let (a, b) = ends[i];
        let g = level[a].max(level[b]) as i32;
        word.push(g * d.sign(i));
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                heap.push(Reverse(j));
            }
        }
    }
    if word.len() != n {
        return Err(bad("crossing order along the circles is cyclic"));
    }
    Ok(word)
}

/// Seifert matrix of the canonical surface of a braid closure.
pub fn braid_seifert_matrix(word: &[i32]) -> IntMatrix {
    let len = word.len();
    // h[i]: next position using the same generator, 0 if none
    let mut h = vec![0usize; len];
    for i in 0..len {
        if let Some(j) = (i + 1..len).find(|&j| word[j].abs() == word[i].abs()) {
            h[i] = j;
        }
    }
    let mut a = IntMatrix::zeros(len, len);
    let idx: Vec<usize> = (0..len).filter(|&i| h[i] != 0).collect();
    for &i in &idx {
        let hi = h[i];
        let (xi, ai) = (word[i], word[i].abs());
        for j in i..len {
            let (xj, aj) = (word[j], word[j].abs());
            if i == j {
                a.add_at(i, i, -((xi + word[hi]).signum() as i64));
            } else if hi > h[j] || hi < j {
            } else if hi == j {
                if xj > 0 {
                    a.add_at(j, i, 1);
                } else {
                    a.add_at(i, j, -1);
                }
            } else if (ai - aj).abs() > 1 {
            } else if ai - aj == 1 {
                a.add_at(j, i, -1);
            } else if aj - ai == 1 {
                a.add_at(i, j, 1);
            }
        }
    }
    if idx.is_empty() {
        return IntMatrix::zeros(0, 0);
    }
    let rows: Vec<Vec<i64>> = idx
        .iter()
        .map(|&i| idx.iter().map(|&j| i64::try_from(a.get(i, j)).unwrap()).collect())
        .collect();
    IntMatrix::from_rows(&rows)
}

/// Seifert data of a connected diagram.
pub fn seifert(d: &Diagram) -> Result<SeifertData, InvariantError> {
    if !d.is_connected() {
        return Err(DiagramError::Disconnected.into());
    }
    let circles = seifert_circles(d).crossings.len().max(1);
    let (b, vogel_moves) = braided(d)?;
    let braid = read_braid(&b, &seifert_circles(&b))?;
    let matrix = if braid.is_empty() { IntMatrix::zeros(0, 0) } else { braid_seifert_matrix(&braid) };
    Ok(SeifertData { circles, crossings: d.n_crossings(), vogel_moves, braid, matrix })
}
