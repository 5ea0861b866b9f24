use std::collections::HashMap;

use super::{Diagram, DiagramError};

/// A closed curve drawn beside a knot: the blackboard pushoff of the knot's arc from the
/// middle of edge `start` to the middle of edge `end`, closed by a chord through `face`
/// (and, with `via`, across one more edge into a neighbouring face).
/// Where the pushoff and the chord lie on opposite sides of the knot, the curve crosses the
/// knot once; `start_under`/`end_under` say whether it passes under there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArcPushoff {
    pub start: u32,
    pub end: u32,
    /// face the chord leaves `end` through
    pub face: usize,
    pub via: Option<ChordStep>,
    /// pushoff on the left of the oriented arc
    pub left: bool,
    pub start_under: bool,
    pub end_under: bool,
}

/// The chord crosses `edge` (under it when `under`) into `face`, which it leaves at `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChordStep {
    pub edge: u32,
    pub face: usize,
    pub under: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Seg {
    /// an edge (or, at `start`/`end`, its doubled half) on the knot (false) or curve (true)
    Edge(u32, bool),
    StartTail,
    EndHead,
    Chord,
    /// the chord after crossing the `via` edge
    Chord2,
    /// the half of the `via` edge at its tail
    ViaTail,
    /// between two sub-crossings of crossing `.0`, on strand vertical (`.1`), copy `.2`, gap `.3`
    Mid(usize, bool, bool, usize),
}

impl Diagram {
    /// Edges of the knot from `start` to `end` inclusive, following the orientation.
    fn arc_edges(&self, start: u32, end: u32) -> Result<Vec<u32>, DiagramError> {
        let heads = self.heads();
        let mut out = vec![start];
        let mut e = start;
        while e != end {
            let &(i, s) = heads.get(&e).ok_or(DiagramError::BadEdge(e))?;
            e = self.out_edge(i, s);
            if e == start {
                return Err(DiagramError::BadEdge(end));
            }
            out.push(e);
        }
        Ok(out)
    }

    /// Edge leaving crossing `i` after entering it at slot `s`.
    fn out_edge(&self, i: usize, s: usize) -> u32 {
        self.x[i][(s + 2) % 4]
    }

    /// Two-component link of a knot and the curve described by `p`; the knot is
    /// component 0 and the curve is oriented so the linking number is non-negative.
    pub fn arc_pushoff_link(&self, p: &ArcPushoff) -> Result<Diagram, DiagramError> {
        if self.component_count() != 1 || self.x.is_empty() {
            return Err(DiagramError::BadComponent(1));
        }
        if p.start == p.end {
            return Err(DiagramError::BadEdge(p.end));
        }
        let fm = self.faces()?;
        let get_face = |f: usize| fm.faces.get(f).ok_or(DiagramError::BadCrossing(f));
        // a face lies on the right of its darts
        let face_left = |f: usize, e: u32| -> Result<bool, DiagramError> {
            get_face(f)?
                .iter()
                .find(|&&(i, s)| self.x[i][s] == e)
                .map(|&d| self.is_entering(d))
                .ok_or(DiagramError::BadEdge(e))
        };
        let start_face = p.via.map_or(p.face, |v| v.face);
        let cross_start = face_left(start_face, p.start)? != p.left;
        let cross_end = face_left(p.face, p.end)? != p.left;
        let arc = self.arc_edges(p.start, p.end)?;
        let via_edge = p.via.map(|v| v.edge);
        if let Some(g) = via_edge {
            if arc.contains(&g) {
                return Err(DiagramError::BadEdge(g));
            }
        }
        let doubled_in: HashMap<u32, ()> = arc[..arc.len() - 1].iter().map(|&e| (e, ())).collect();
        let edge = |e: u32, curve: bool, incoming: bool| {
            if Some(e) == via_edge && !incoming {
                Seg::ViaTail
            } else if e == p.start && !incoming && !curve {
                Seg::StartTail
            } else if e == p.end && incoming && !curve {
                Seg::EndHead
            } else {
                Seg::Edge(e, curve)
            }
        };
        let mut grid: Vec<[Seg; 4]> = vec![];
        for (i, &[a, b, c, d]) in self.x.iter().enumerate() {
            // under-strand runs south -> north; over-strand west -> east when `east`
            let east = self.fwd[i];
            let (h_in, h_out) = if east { (d, b) } else { (b, d) };
            // copies listed west -> east (vertical) and south -> north (horizontal)
            let vert: Vec<bool> = if doubled_in.contains_key(&a) { vec![p.left, !p.left] } else { vec![false] };
            let horiz: Vec<bool> = if doubled_in.contains_key(&h_in) {
                // the left of an eastbound strand is north
                if east { vec![!p.left, p.left] } else { vec![p.left, !p.left] }
            } else {
                vec![false]
            };
            for (vk, &vc) in vert.iter().enumerate() {
                for (hk, &hc) in horiz.iter().enumerate() {
                    let south = if hk == 0 { edge(a, vc, true) } else { Seg::Mid(i, true, vc, hk - 1) };
                    let north = if hk + 1 == horiz.len() { edge(c, vc, false) } else { Seg::Mid(i, true, vc, hk) };
                    let (w_end, e_end) = if east { (h_in, h_out) } else { (h_out, h_in) };
                    let west = if vk == 0 { edge(w_end, hc, east) } else { Seg::Mid(i, false, hc, vk - 1) };
                    let eastp = if vk + 1 == vert.len() { edge(e_end, hc, !east) } else { Seg::Mid(i, false, hc, vk) };
                    grid.push([south, eastp, north, west]);
                }
            }
        }
        let mut alias: Vec<(Seg, Seg)> = vec![];
        let chord = if p.via.is_some() { Seg::Chord2 } else { Seg::Chord };
        if let Some(v) = p.via {
            // the via edge runs north; the chord crosses it from `face` into `v.face`
            let (k_in, k_out) = (Seg::ViaTail, Seg::Edge(v.edge, false));
            let from_east = !face_left(p.face, v.edge)?;
            grid.push(match (v.under, from_east) {
                (false, true) => [k_in, Seg::Chord, k_out, Seg::Chord2],
                (false, false) => [k_in, Seg::Chord2, k_out, Seg::Chord],
                (true, true) => [Seg::Chord, k_out, Seg::Chord2, k_in],
                (true, false) => [Seg::Chord, k_in, Seg::Chord2, k_out],
            });
        }
        // start: the knot runs north; the curve leaves the chord towards its pushoff side
        let (k_in, k_out, c_side) = (Seg::StartTail, Seg::Edge(p.start, false), Seg::Edge(p.start, true));
        if cross_start {
            let chord_east = p.left;
            grid.push(match (p.start_under, chord_east) {
                (false, true) => [k_in, chord, k_out, c_side],
                (false, false) => [k_in, c_side, k_out, chord],
                (true, true) => [chord, k_out, c_side, k_in],
                (true, false) => [chord, k_in, c_side, k_out],
            });
        } else {
            alias.push((k_in, k_out));
            alias.push((chord, c_side));
        }
        // end: the curve leaves its pushoff side into the chord
        let (k_in, k_out, c_side) = (Seg::Edge(p.end, false), Seg::EndHead, Seg::Edge(p.end, true));
        let tail = Seg::Chord;
        if cross_end {
            let pushoff_west = p.left;
            grid.push(match (p.end_under, pushoff_west) {
                (false, true) => [k_in, tail, k_out, c_side],
                (false, false) => [k_in, c_side, k_out, tail],
                (true, true) => [c_side, k_in, tail, k_out],
                (true, false) => [c_side, k_out, tail, k_in],
            });
        } else {
            alias.push((k_in, k_out));
            alias.push((c_side, tail));
        }
        let resolve = |mut s: Seg| {
            while let Some(&(_, to)) = alias.iter().find(|(from, _)| *from == s) {
                s = to;
            }
            s
        };
        let mut names: HashMap<Seg, u32> = HashMap::new();
        for curve in [false, true] {
            for s in grid.iter().flatten().map(|&s| resolve(s)) {
                let is_curve = matches!(s, Seg::Edge(_, true) | Seg::Chord | Seg::Chord2 | Seg::Mid(_, _, true, _));
                if is_curve == curve && !names.contains_key(&s) {
                    names.insert(s, names.len() as u32 + 1);
                }
            }
        }
        let x: Vec<[u32; 4]> = grid.iter().map(|t| t.map(|s| names[&resolve(s)])).collect();
        let mut out = Diagram::from_pd(x, 0)?;
        if out.component_count() != 2 {
            return Err(DiagramError::BadComponent(out.component_count()));
        }
        out.faces()?;
        if out.linking_number(0, 1) < 0 {
            out = out.flip_component(1)?;
        }
        Ok(out.normalized())
    }
}
