//! Planar diagrams (PD codes) of oriented links.
//!
//! A crossing is `[a, b, c, d]` listed counterclockwise from the incoming under-strand,
//! so `a -> c` is the under-strand. `fwd[i]` records whether the over-strand runs
//! `d -> b`; that is the positive crossing.

mod cable;
mod faces;
mod moves;
mod parse;
mod pushoff;
mod simplify;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

pub use cable::{ParallelCopy, ParallelFlip};
pub use faces::{Checkerboard, FaceMap};
pub use pushoff::{ArcPushoff, ChordStep};
pub use parse::{parse_pd, parse_named};
pub use simplify::Simplified;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("edge label {label} appears {count} times, expected 2")]
    LabelCount { label: u32, count: usize },
    #[error("successor map inconsistent at edge {0}")]
    Inconsistent(u32),
    #[error("no crossing with index {0}")]
    BadCrossing(usize),
    #[error("no edge labelled {0}")]
    BadEdge(u32),
    #[error("no component with index {0}")]
    BadComponent(usize),
    #[error("diagram is not connected")]
    Disconnected,
    #[error("combinatorial map fails the Euler check: V={v} E={e} F={f}")]
    NotPlanar { v: usize, e: usize, f: usize },
}

/// Position of an edge end: (crossing index, slot).
pub type Pos = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    x: Vec<[u32; 4]>,
    fwd: Vec<bool>,
    loops: u32,
    name: Option<String>,
}

/// Which pair of slots a smoothing joins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// (0,1) and (2,3)
    Adjacent01,
    /// (0,3) and (1,2)
    Adjacent03,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OrientMode {
    /// slot 0 must be the incoming under-strand everywhere
    Strict,
    /// keep slot-0 orientation where consistent, otherwise choose
    Lenient,
}

impl Diagram {
    /// Crossingless unlink of `loops` components (0 gives the empty diagram).
    pub fn unlink(loops: u32) -> Self {
        Diagram { x: vec![], fwd: vec![], loops, name: None }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// Build from PD tuples following the slot-0 convention. Components carrying no
    /// under-crossing are oriented by ascending labels.
    pub fn from_pd(x: Vec<[u32; 4]>, loops: u32) -> Result<Self, DiagramError> {
        let (x, fwd) = orient(&x, OrientMode::Strict)?;
        Ok(Diagram { x, fwd, loops, name: None })
    }

    /// Build from tuples that are only known to be counterclockwise; an orientation is chosen.
    pub fn from_planar(x: Vec<[u32; 4]>, loops: u32) -> Result<Self, DiagramError> {
        let (x, fwd) = orient(&x, OrientMode::Lenient)?;
        Ok(Diagram { x, fwd, loops, name: None })
    }

    /// Build from tuples with explicit over-strand directions; validated.
    pub fn from_oriented(x: Vec<[u32; 4]>, fwd: Vec<bool>, loops: u32) -> Result<Self, DiagramError> {
        assert_eq!(x.len(), fwd.len());
        let d = Diagram { x, fwd, loops, name: None };
        d.validate()?;
        Ok(d)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.x
    }

    pub fn over_forward(&self) -> &[bool] {
        &self.fwd
    }

    pub fn n_crossings(&self) -> usize {
        self.x.len()
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    pub fn labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.x.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn has_edge(&self, e: u32) -> bool {
        self.x.iter().any(|t| t.contains(&e))
    }

    fn ends(&self) -> HashMap<u32, [Pos; 2]> {
        ends_of(&self.x).expect("validated diagram")
    }

    pub(crate) fn is_entering(&self, (i, s): Pos) -> bool {
        match s {
            0 => true,
            2 => false,
            3 => self.fwd[i],
            _ => !self.fwd[i],
        }
    }

    /// Where edge `e` enters a crossing.
    pub fn head(&self, e: u32) -> Option<Pos> {
        let ends = self.ends();
        let p = ends.get(&e)?;
        Some(if self.is_entering(p[0]) { p[0] } else { p[1] })
    }

    /// Where edge `e` leaves a crossing.
    pub fn tail(&self, e: u32) -> Option<Pos> {
        let ends = self.ends();
        let p = ends.get(&e)?;
        Some(if self.is_entering(p[0]) { p[1] } else { p[0] })
    }

    pub(crate) fn heads(&self) -> HashMap<u32, Pos> {
        let mut h = HashMap::new();
        for (i, t) in self.x.iter().enumerate() {
            for s in 0..4 {
                if self.is_entering((i, s)) {
                    h.insert(t[s], (i, s));
                }
            }
        }
        h
    }

    fn validate(&self) -> Result<(), DiagramError> {
        ends_of(&self.x)?;
        let mut seen: HashMap<u32, usize> = HashMap::new();
        for (i, t) in self.x.iter().enumerate() {
            for s in 0..4 {
                if self.is_entering((i, s)) {
                    let c = seen.entry(t[s]).or_default();
                    *c += 1;
                    if *c > 1 {
                        return Err(DiagramError::Inconsistent(t[s]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Oriented components (edge labels in traversal order), ordered by minimum label.
    /// Crossingless loops are not listed; see [`Diagram::component_count`].
    pub fn components(&self) -> Vec<Vec<u32>> {
        let heads = self.heads();
        let mut labels: Vec<u32> = heads.keys().copied().collect();
        labels.sort_unstable();
        let mut done: HashMap<u32, usize> = HashMap::new();
        let mut comps = Vec::new();
        for &start in &labels {
            if done.contains_key(&start) {
                continue;
            }
            let mut comp = vec![];
            let mut e = start;
            loop {
                done.insert(e, comps.len());
                comp.push(e);
                let (i, s) = heads[&e];
                e = self.x[i][(s + 2) % 4];
                if e == start {
                    break;
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.loops as usize
    }

    /// Component index of each label.
    pub fn component_map(&self) -> HashMap<u32, usize> {
        let mut m = HashMap::new();
        for (k, c) in self.components().iter().enumerate() {
            for &e in c {
                m.insert(e, k);
            }
        }
        m
    }

    /// Components of the under- and over-strand at crossing `i`.
    pub fn strand_components(&self, i: usize) -> (usize, usize) {
        let m = self.component_map();
        (m[&self.x[i][0]], m[&self.x[i][1]])
    }

    pub fn sign(&self, i: usize) -> i32 {
        if self.fwd[i] {
            1
        } else {
            -1
        }
    }

    pub fn crossing_sign(&self, i: usize) -> Result<i32, DiagramError> {
        if i >= self.x.len() {
            return Err(DiagramError::BadCrossing(i));
        }
        Ok(self.sign(i))
    }

    pub fn writhe(&self) -> i32 {
        (0..self.x.len()).map(|i| self.sign(i)).sum()
    }

    /// Sum of signs of crossings between components `a` and `b`, halved.
    pub fn linking_number(&self, a: usize, b: usize) -> i32 {
        let m = self.component_map();
        let mut s = 0;
        for i in 0..self.x.len() {
            let (u, o) = (m[&self.x[i][0]], m[&self.x[i][1]]);
            if (u == a && o == b) || (u == b && o == a) {
                s += self.sign(i);
            }
        }
        s / 2
    }

    /// Exchange over and under at every crossing.
    pub fn mirror(&self) -> Self {
        let mut d = self.clone();
        for i in 0..d.x.len() {
            d.switch_in_place(i);
        }
        d
    }

    fn switch_in_place(&mut self, i: usize) {
        let [a, b, c, dd] = self.x[i];
        // new under-strand is the old over-strand; start at its incoming end
        self.x[i] = if self.fwd[i] { [dd, a, b, c] } else { [b, c, dd, a] };
        self.fwd[i] = !self.fwd[i];
    }

    /// Exchange over and under at crossing `i`.
    pub fn switch(&self, i: usize) -> Result<Self, DiagramError> {
        if i >= self.x.len() {
            return Err(DiagramError::BadCrossing(i));
        }
        let mut d = self.clone();
        d.switch_in_place(i);
        Ok(d)
    }

    /// Reverse the orientation of component `k` (as indexed by [`Diagram::components`]).
    pub fn flip_component(&self, k: usize) -> Result<Self, DiagramError> {
        let comps = self.components();
        let comp = comps.get(k).ok_or(DiagramError::BadComponent(k))?;
        let members: std::collections::HashSet<u32> = comp.iter().copied().collect();
        let mut d = self.clone();
        for i in 0..d.x.len() {
            let under = members.contains(&d.x[i][0]);
            let over = members.contains(&d.x[i][1]);
            if under {
                // rotating by two slots also moves the over-strand ends
                let [a, b, c, e] = d.x[i];
                d.x[i] = [c, e, a, b];
            }
            if under != over {
                d.fwd[i] = !d.fwd[i];
            }
        }
        Ok(d)
    }

    /// The two slots pairs joined by the orientation-respecting smoothing.
    pub fn oriented_pairing(&self, i: usize) -> Pairing {
        // in-under joins out-over
        if self.fwd[i] {
            Pairing::Adjacent01
        } else {
            Pairing::Adjacent03
        }
    }

    /// Orientation-respecting smoothing (L0).
    pub fn smooth_oriented(&self, i: usize) -> Result<Self, DiagramError> {
        if i >= self.x.len() {
            return Err(DiagramError::BadCrossing(i));
        }
        let p = self.oriented_pairing(i);
        let (x, fwd, loops) = self.smoothed_parts(&[(i, p)]);
        Ok(Diagram { x, fwd, loops, name: None }.normalized())
    }

    /// The other smoothing (L-infinity); an orientation is re-chosen.
    pub fn smooth_unoriented(&self, i: usize) -> Result<Self, DiagramError> {
        if i >= self.x.len() {
            return Err(DiagramError::BadCrossing(i));
        }
        let p = match self.oriented_pairing(i) {
            Pairing::Adjacent01 => Pairing::Adjacent03,
            Pairing::Adjacent03 => Pairing::Adjacent01,
        };
        self.smooth_with(i, p)
    }

    /// Smooth crossing `i` joining the given slot pairs. Orientation is re-chosen.
    pub fn smooth_with(&self, i: usize, p: Pairing) -> Result<Self, DiagramError> {
        if i >= self.x.len() {
            return Err(DiagramError::BadCrossing(i));
        }
        if p == self.oriented_pairing(i) {
            return self.smooth_oriented(i);
        }
        let (x, _, loops) = self.smoothed_parts(&[(i, p)]);
        Ok(Diagram::from_planar(x, loops)?.normalized())
    }

    /// Remove the listed crossings, identifying labels per pairing. Returns raw parts.
    fn smoothed_parts(&self, cuts: &[(usize, Pairing)]) -> (Vec<[u32; 4]>, Vec<bool>, u32) {
        let mut uf = UnionFind::default();
        let mut touched = vec![];
        for &(i, p) in cuts {
            let t = self.x[i];
            let (a, b) = match p {
                Pairing::Adjacent01 => ((t[0], t[1]), (t[2], t[3])),
                Pairing::Adjacent03 => ((t[0], t[3]), (t[1], t[2])),
            };
            uf.union(a.0, a.1);
            uf.union(b.0, b.1);
            touched.extend_from_slice(&t);
        }
        self.rebuild(&mut uf, cuts.iter().map(|c| c.0).collect(), &touched, 0)
    }

    /// Drop crossings `removed`, relabel by the union-find, and count label classes among
    /// `touched` that no longer occur as loops (minus `absorbed`).
    fn rebuild(
        &self,
        uf: &mut UnionFind,
        removed: Vec<usize>,
        touched: &[u32],
        absorbed: u32,
    ) -> (Vec<[u32; 4]>, Vec<bool>, u32) {
        let mut x = vec![];
        let mut fwd = vec![];
        for (i, t) in self.x.iter().enumerate() {
            if removed.contains(&i) {
                continue;
            }
            x.push(t.map(|e| uf.find(e)));
            fwd.push(self.fwd[i]);
        }
        let mut present: std::collections::HashSet<u32> = x.iter().flatten().copied().collect();
        let mut new_loops = 0;
        for &e in touched {
            let r = uf.find(e);
            if present.insert(r) {
                new_loops += 1;
            }
        }
        (x, fwd, self.loops + new_loops - absorbed)
    }

    /// Relabel edges 1..=2n along components (ordered by minimum label, each starting at its
    /// minimum label). Crossing order and orientation are preserved.
    pub fn normalized(&self) -> Self {
        let comps = self.components();
        let mut map: HashMap<u32, u32> = HashMap::new();
        let mut next = 1;
        for c in &comps {
            for &e in c {
                map.insert(e, next);
                next += 1;
            }
        }
        Diagram {
            x: self.x.iter().map(|t| t.map(|e| map[&e])).collect(),
            fwd: self.fwd.clone(),
            loops: self.loops,
            name: self.name.clone(),
        }
    }

    /// Canonical key: normalized crossings (with direction bit) sorted, plus the loop count.
    pub fn key(&self) -> DiagramKey {
        let n = self.normalized();
        let mut rows: Vec<[u32; 5]> =
            n.x.iter().zip(&n.fwd).map(|(t, &f)| [t[0], t[1], t[2], t[3], f as u32]).collect();
        rows.sort_unstable();
        DiagramKey { rows, loops: n.loops }
    }

    /// First crossing met as an under-crossing before being met as an over-crossing, when
    /// traversing components in order from their minimum labels. `None` means descending.
    pub fn first_ascending(&self) -> Option<usize> {
        let heads = self.heads();
        let mut seen = vec![false; self.x.len()];
        for comp in self.components() {
            for e in comp {
                let (i, s) = heads[&e];
                if !seen[i] {
                    seen[i] = true;
                    if s % 2 == 0 {
                        return Some(i);
                    }
                }
            }
        }
        None
    }

    /// Keep only the components in `keep` (indices into [`Diagram::components`]); loops are kept.
    pub fn sublink(&self, keep: &[usize]) -> Result<Self, DiagramError> {
        let comps = self.components();
        for &k in keep {
            if k >= comps.len() {
                return Err(DiagramError::BadComponent(k));
            }
        }
        let m = self.component_map();
        let mut uf = UnionFind::default();
        let mut removed = vec![];
        let mut touched = vec![];
        for (i, t) in self.x.iter().enumerate() {
            let ku = keep.contains(&m[&t[0]]);
            let ko = keep.contains(&m[&t[1]]);
            if ku && ko {
                continue;
            }
            removed.push(i);
            if ku {
                uf.union(t[0], t[2]);
                touched.push(t[0]);
            }
            if ko {
                uf.union(t[1], t[3]);
                touched.push(t[1]);
            }
        }
        let (x, fwd, loops) = self.rebuild(&mut uf, removed, &touched, 0);
        Ok(Diagram { x, fwd, loops, name: None }.normalized())
    }

    /// Disjoint union (split diagram), labels of `other` shifted.
    pub fn split_union(&self, other: &Diagram) -> Self {
        let off = self.labels().last().copied().unwrap_or(0);
        let mut x = self.x.clone();
        x.extend(other.x.iter().map(|t| t.map(|e| e + off)));
        let mut fwd = self.fwd.clone();
        fwd.extend_from_slice(&other.fwd);
        Diagram { x, fwd, loops: self.loops + other.loops, name: None }
    }

    /// PD text, `PD[X[..],...]` with a `+n` suffix for crossingless loops.
    pub fn to_pd_string(&self) -> String {
        let body: Vec<String> =
            self.x.iter().map(|t| format!("X[{},{},{},{}]", t[0], t[1], t[2], t[3])).collect();
        let mut s = format!("PD[{}]", body.join(","));
        let implicit = if self.x.is_empty() { 1 } else { 0 };
        if self.loops != implicit {
            s.push_str(&format!("+{}", self.loops));
        }
        s
    }

    /// True if the crossing graph (crossings joined by edges) is connected and there are no
    /// loops beside it.
    pub fn is_connected(&self) -> bool {
        if self.x.is_empty() {
            return self.loops <= 1;
        }
        if self.loops > 0 {
            return false;
        }
        let ends = self.ends();
        let mut uf = UnionFind::default();
        for p in ends.values() {
            uf.union(p[0].0 as u32, p[1].0 as u32);
        }
        let r = uf.find(0);
        (1..self.x.len() as u32).all(|i| uf.find(i) == r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramKey {
    rows: Vec<[u32; 5]>,
    loops: u32,
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pd_string())?;
        let signs: String = self.fwd.iter().map(|&b| if b { '+' } else { '-' }).collect();
        write!(f, " [{}]", signs)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

#[derive(Default)]
pub(crate) struct UnionFind {
    parent: BTreeMap<u32, u32>,
}

impl UnionFind {
    pub(crate) fn find(&mut self, e: u32) -> u32 {
        let p = *self.parent.get(&e).unwrap_or(&e);
        if p == e {
            return e;
        }
        let r = self.find(p);
        self.parent.insert(e, r);
        r
    }

    /// Union keeping the smaller label as representative.
    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(hi, lo);
        }
    }
}

pub(crate) fn ends_of(x: &[[u32; 4]]) -> Result<HashMap<u32, [Pos; 2]>, DiagramError> {
    let mut m: HashMap<u32, Vec<Pos>> = HashMap::new();
    for (i, t) in x.iter().enumerate() {
        for (s, &e) in t.iter().enumerate() {
            m.entry(e).or_default().push((i, s));
        }
    }
    let mut out = HashMap::with_capacity(m.len());
    let mut bad: Vec<(u32, usize)> = m.iter().filter(|(_, v)| v.len() != 2).map(|(e, v)| (*e, v.len())).collect();
    bad.sort_unstable();
    if let Some(&(label, count)) = bad.first() {
        return Err(DiagramError::LabelCount { label, count });
    }
    for (e, v) in m {
        out.insert(e, [v[0], v[1]]);
    }
    Ok(out)
}

/// Choose heads for every edge and rotate tuples so slot 0 is the incoming under-strand.
fn orient(x: &[[u32; 4]], mode: OrientMode) -> Result<(Vec<[u32; 4]>, Vec<bool>), DiagramError> {
    let ends = ends_of(x)?;
    let other = |e: u32, p: Pos| -> Pos {
        let q = ends[&e];
        if q[0] == p {
            q[1]
        } else {
            q[0]
        }
    };
    let mut labels: Vec<u32> = ends.keys().copied().collect();
    labels.sort_unstable();
    let mut head: HashMap<u32, Pos> = HashMap::new();
    for &start in &labels {
        if head.contains_key(&start) {
            continue;
        }
        // trace with the head of `start` at its first occurrence
        let mut trail: Vec<(u32, Pos)> = vec![];
        let mut e = start;
        let mut h = ends[&start][0];
        loop {
            trail.push((e, h));
            let out = (h.0, (h.1 + 2) % 4);
            e = x[out.0][out.1];
            h = other(e, out);
            if e == start && h == trail[0].1 {
                break;
            }
            if trail.len() > 4 * x.len() + 2 {
                return Err(DiagramError::Inconsistent(start));
            }
        }
        let at0 = trail.iter().filter(|(_, p)| p.1 == 0).count();
        let at2 = trail.iter().filter(|(_, p)| p.1 == 2).count();
        let reverse = if at0 > 0 && at2 == 0 {
            false
        } else if at2 > 0 && at0 == 0 {
            true
        } else if at0 > 0 && mode == OrientMode::Strict {
            let bad = trail.iter().find(|(_, p)| p.1 == 2).unwrap().0;
            return Err(DiagramError::Inconsistent(bad));
        } else if at0 > 0 && at0 >= at2 {
            false
        } else if at0 > 0 {
            true
        } else {
            // ascending labels: move from the minimum label toward its smaller neighbour
            let succ = trail.get(1).map_or(start, |t| t.0);
            let pred = trail.last().unwrap().0;
            pred < succ
        };
        for &(e, h) in &trail {
            head.insert(e, if reverse { other(e, h) } else { h });
        }
    }
    let mut out = Vec::with_capacity(x.len());
    let mut fwd = Vec::with_capacity(x.len());
    for (i, t) in x.iter().enumerate() {
        let in0 = head[&t[0]] == (i, 0);
        if !in0 && head[&t[2]] != (i, 2) {
            return Err(DiagramError::Inconsistent(t[0]));
        }
        let rot = if in0 { 0 } else { 2 };
        let t = if in0 { *t } else { [t[2], t[3], t[0], t[1]] };
        let over_in_slot3 = head[&t[3]] == (i, (3 + rot) % 4);
        out.push(t);
        fwd.push(over_in_slot3);
    }
    let d = Diagram { x: out, fwd, loops: 0, name: None };
    d.validate()?;
    Ok((d.x, d.fwd))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil() -> Diagram {
        parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap()
    }

    #[test]
    fn trefoil_components() {
        let t = trefoil();
        assert_eq!(t.components(), vec![vec![1, 2, 3, 4, 5, 6]]);
        let s: Vec<i32> = (0..3).map(|i| t.sign(i)).collect();
        assert!(s.iter().all(|&x| x == s[0]));
    }

    #[test]
    fn mirror_and_switch_involutions() {
        let t = trefoil();
        assert_eq!(t.mirror().mirror(), t);
        assert_eq!(t.mirror().writhe(), -t.writhe());
        for i in 0..3 {
            assert_eq!(t.switch(i).unwrap().switch(i).unwrap(), t);
        }
    }

    #[test]
    fn flip_twice() {
        let t = trefoil();
        let f = t.flip_component(0).unwrap();
        assert_eq!(f.writhe(), t.writhe());
        assert_eq!(f.flip_component(0).unwrap(), t);
    }
}
