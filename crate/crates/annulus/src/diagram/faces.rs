use std::collections::{HashMap, VecDeque};

use super::{ends_of, Diagram, DiagramError, Pos};

/// Regions of the diagram. A dart `(i, s)` leaves crossing `i` along the edge in slot `s`;
/// after arriving at `(j, u)` the face continues with dart `(j, u + 1)`, so every face
/// keeps itself on the right.
#[derive(Clone, Debug)]
pub struct FaceMap {
    pub faces: Vec<Vec<Pos>>,
    face_of: HashMap<Pos, usize>,
}

impl FaceMap {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_of(&self, dart: Pos) -> usize {
        self.face_of[&dart]
    }

    /// Face occupying the corner between slots `k` and `k + 1` of crossing `i`.
    pub fn corner(&self, i: usize, k: usize) -> usize {
        self.face_of[&(i, (k + 1) % 4)]
    }
}

/// Two-colouring of the faces; `white[f]` is true for the white class.
#[derive(Clone, Debug)]
pub struct Checkerboard {
    pub faces: FaceMap,
    pub white: Vec<bool>,
}

impl Diagram {
    pub fn faces(&self) -> Result<FaceMap, DiagramError> {
        if !self.is_connected() {
            return Err(DiagramError::Disconnected);
        }
        if self.x.is_empty() {
            // one loop bounds two discs
            return Ok(FaceMap { faces: vec![vec![], vec![]], face_of: HashMap::new() });
        }
        let ends = ends_of(&self.x)?;
        let mut face_of: HashMap<Pos, usize> = HashMap::new();
        let mut faces = vec![];
        for i in 0..self.x.len() {
            for s in 0..4 {
                if face_of.contains_key(&(i, s)) {
                    continue;
                }
                let id = faces.len();
                let mut f = vec![];
                let mut d = (i, s);
                while !face_of.contains_key(&d) {
                    face_of.insert(d, id);
                    f.push(d);
                    let e = self.x[d.0][d.1];
                    let p = ends[&e];
                    let arrive = if p[0] == d { p[1] } else { p[0] };
                    d = (arrive.0, (arrive.1 + 1) % 4);
                }
                faces.push(f);
            }
        }
        let (v, e, f) = (self.x.len(), 2 * self.x.len(), faces.len());
        if v + f != e + 2 {
            return Err(DiagramError::NotPlanar { v, e, f });
        }
        Ok(FaceMap { faces, face_of })
    }

    /// The class containing the largest face is white (it plays the unbounded region).
    pub fn checkerboard(&self) -> Result<Checkerboard, DiagramError> {
        let fm = self.faces()?;
        let n = fm.len();
        if self.x.is_empty() {
            return Ok(Checkerboard { faces: fm, white: vec![true, false] });
        }
        let ends = ends_of(&self.x)?;
        let mut adj: Vec<Vec<usize>> = vec![vec![]; n];
        for p in ends.values() {
            let (a, b) = (fm.face_of(p[0]), fm.face_of(p[1]));
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut color: Vec<Option<bool>> = vec![None; n];
        let start = (0..n).max_by_key(|&f| (fm.faces[f].len(), std::cmp::Reverse(f))).unwrap();
        color[start] = Some(true);
        let mut q = VecDeque::from([start]);
        while let Some(f) = q.pop_front() {
            let c = color[f].unwrap();
            for &g in &adj[f] {
                match color[g] {
                    None => {
                        color[g] = Some(!c);
                        q.push_back(g);
                    }
                    Some(cg) if cg == c => {
                        let (v, e) = (self.x.len(), 2 * self.x.len());
                        return Err(DiagramError::NotPlanar { v, e, f: n });
                    }
                    _ => {}
                }
            }
        }
        Ok(Checkerboard { faces: fm, white: color.into_iter().map(|c| c.unwrap()).collect() })
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_pd;

    #[test]
    fn euler_counts() {
        assert_eq!(parse_pd("PD[]").unwrap().faces().unwrap().len(), 2);
        let t = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(t.faces().unwrap().len(), 5);
        let f8 = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]").unwrap();
        assert_eq!(f8.faces().unwrap().len(), 6);
    }

    #[test]
    fn every_dart_once_and_proper_colouring() {
        let t = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]").unwrap();
        let cb = t.checkerboard().unwrap();
        let total: usize = cb.faces.faces.iter().map(|f| f.len()).sum();
        assert_eq!(total, 16);
        for i in 0..4 {
            for k in 0..4 {
                let a = cb.faces.corner(i, k);
                let b = cb.faces.corner(i, (k + 1) % 4);
                assert_ne!(cb.white[a], cb.white[b]);
            }
        }
    }
}
