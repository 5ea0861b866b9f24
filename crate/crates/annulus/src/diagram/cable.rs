use std::collections::HashMap;

use super::{Diagram, DiagramError};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Side {
    /// the pushed-off copy on the left of the oriented strand; it stays the original knot
    Left,
    /// the copy on the right; it carries the changed crossing
    Right,
}

/// One of the two copies in a 2-parallel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParallelCopy {
    Knot,
    Parallel,
}

/// A switched sub-crossing of a 2-parallel: at crossing `crossing` of the knot, the copy
/// `under` of the original under-strand is moved over the copy `over` of the over-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParallelFlip {
    pub crossing: usize,
    pub under: ParallelCopy,
    pub over: ParallelCopy,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Seg {
    Edge(u32, Side),
    Mid(usize, bool, Side),
    Twist(usize, Side),
}

impl Diagram {
    /// Two-component link `K ∪ K'` of a knot diagram: `K'` is the knot obtained by changing
    /// crossing `c`, drawn as a blackboard parallel of `K` and given `-w(K')` full twists so
    /// that `K` runs along its 0-framing except at `c`. `finger_under` picks which strand of
    /// `c` is pushed through: the under-strand (true) or the over-strand (false).
    /// The second component is oriented so the linking number is +1.
    pub fn crossing_change_parallel(&self, c: usize, finger_under: bool) -> Result<Diagram, DiagramError> {
        if c >= self.x.len() {
            return Err(DiagramError::BadCrossing(c));
        }
        let flips: Vec<ParallelFlip> = [ParallelCopy::Knot, ParallelCopy::Parallel]
            .into_iter()
            .map(|other| {
                if finger_under {
                    ParallelFlip { crossing: c, under: ParallelCopy::Parallel, over: other }
                } else {
                    ParallelFlip { crossing: c, under: other, over: ParallelCopy::Parallel }
                }
            })
            .collect();
        let m = -(self.writhe() - 2 * self.sign(c));
        let out = self.parallel_link(&flips, m)?;
        match out.linking_number(0, 1) {
            1 => Ok(out),
            l => Err(DiagramError::BadComponent(l.unsigned_abs() as usize)),
        }
    }

    /// Blackboard 2-parallel `K ∪ K'` of a knot diagram with `twists` full twists added
    /// between the copies and the listed sub-crossings switched. `K` is component 0; `K'` is
    /// reoriented when needed so the linking number is non-negative.
    pub fn parallel_link(&self, flips: &[ParallelFlip], twists: i32) -> Result<Diagram, DiagramError> {
        if self.component_count() != 1 || self.x.is_empty() {
            return Err(DiagramError::BadComponent(1));
        }
        if let Some(f) = flips.iter().find(|f| f.crossing >= self.x.len()) {
            return Err(DiagramError::BadCrossing(f.crossing));
        }
        let side = |c: ParallelCopy| if c == ParallelCopy::Knot { Side::Left } else { Side::Right };
        use Side::{Left, Right};
        let mut grid: Vec<[Seg; 4]> = vec![];
        for (i, &[a, b, cc, d]) in self.x.iter().enumerate() {
            // draw the under-strand south -> north and the over-strand west <-> east
            let east = self.fwd[i];
            let row = |ys: i32| if (ys > 0) == east { Left } else { Right };
            let col = |xs: i32| if xs < 0 { Left } else { Right };
            for xs in [-1, 1] {
                for ys in [-1, 1] {
                    let (vc, hc) = (col(xs), row(ys));
                    let south = if ys < 0 { Seg::Edge(a, vc) } else { Seg::Mid(i, true, vc) };
                    let north = if ys < 0 { Seg::Mid(i, true, vc) } else { Seg::Edge(cc, vc) };
                    let west = if xs < 0 { Seg::Edge(d, hc) } else { Seg::Mid(i, false, hc) };
                    let eastp = if xs < 0 { Seg::Mid(i, false, hc) } else { Seg::Edge(b, hc) };
                    // the strand drawn vertically is the original under-strand
                    let vert_under =
                        !flips.iter().any(|f| f.crossing == i && side(f.under) == vc && side(f.over) == hc);
                    grid.push(if vert_under {
                        [south, eastp, north, west]
                    } else if east {
                        [west, south, eastp, north]
                    } else {
                        [eastp, north, west, south]
                    });
                }
            }
        }
        let m = twists;
        // full twists inserted at the head of the first edge
        let e0 = self.labels()[0];
        let (hi, _) = self.head(e0).unwrap();
        let end = |cp: Side| Seg::Twist(usize::MAX, cp);
        for t in &mut grid[4 * hi..4 * hi + 4] {
            for s in t.iter_mut() {
                if let Seg::Edge(e, cp) = *s {
                    if e == e0 {
                        *s = end(cp);
                    }
                }
            }
        }
        let mut cur: HashMap<Side, Seg> = HashMap::from([(Left, Seg::Edge(e0, Left)), (Right, Seg::Edge(e0, Right))]);
        let mut pos = [Left, Right];
        for j in 0..2 * m.unsigned_abs() as usize {
            let [left, right] = pos;
            let (nl, nr) = (Seg::Twist(j, left), Seg::Twist(j, right));
            let (sw, se) = (cur[&left], cur[&right]);
            // the left strand moves right; it is over in a positive twist
            grid.push(if m > 0 { [se, nl, nr, sw] } else { [sw, se, nl, nr] });
            cur.insert(left, nl);
            cur.insert(right, nr);
            pos = [right, left];
        }
        for t in &mut grid {
            for s in t.iter_mut() {
                if let Seg::Twist(usize::MAX, cp) = *s {
                    *s = cur[&cp];
                }
            }
        }
        // label the knot's segments first so it becomes component 0
        let copy_of = |s: Seg| match s {
            Seg::Edge(_, cp) | Seg::Mid(_, _, cp) | Seg::Twist(_, cp) => cp,
        };
        let mut names: HashMap<Seg, u32> = HashMap::new();
        for pass in [Left, Right] {
            for s in grid.iter().flatten() {
                if copy_of(*s) == pass && !names.contains_key(s) {
                    names.insert(*s, names.len() as u32 + 1);
                }
            }
        }
        let x: Vec<[u32; 4]> = grid.iter().map(|t| t.map(|s| names[&s])).collect();
        let mut out = Diagram::from_pd(x, 0)?;
        if out.component_count() != 2 {
            return Err(DiagramError::BadComponent(out.component_count()));
        }
        if out.linking_number(0, 1) < 0 {
            out = out.flip_component(1)?;
        }
        Ok(out.normalized())
    }
}
