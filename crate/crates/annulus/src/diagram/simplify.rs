use super::{Diagram, Pairing, UnionFind};

/// Result of [`Diagram::simplify`]. `writhe_delta` is the writhe removed, i.e. the sum of the
/// signs of the kinks taken out (bigons remove crossings of opposite sign).
#[derive(Clone, Debug)]
pub struct Simplified {
    pub diagram: Diagram,
    pub writhe_delta: i32,
}

impl Diagram {
    fn find_kink(&self) -> Option<(usize, usize)> {
        for (i, t) in self.x.iter().enumerate() {
            for s in 0..4 {
                if t[s] == t[(s + 1) % 4] {
                    return Some((i, s));
                }
            }
        }
        None
    }

    fn remove_kink(&self, i: usize, s: usize) -> Diagram {
        let t = self.x[i];
        let mut uf = UnionFind::default();
        // the little loop closes up on its own and is discarded
        let p = if s.is_multiple_of(2) { Pairing::Adjacent01 } else { Pairing::Adjacent03 };
        match p {
            Pairing::Adjacent01 => {
                uf.union(t[0], t[1]);
                uf.union(t[2], t[3]);
            }
            Pairing::Adjacent03 => {
                uf.union(t[0], t[3]);
                uf.union(t[1], t[2]);
            }
        }
        let (x, fwd, loops) = self.rebuild(&mut uf, vec![i], &t, 1);
        Diagram { x, fwd, loops, name: None }
    }

    /// A bigon face whose two crossings have the same strand on top.
    fn find_bigon(&self) -> Option<(usize, usize)> {
        if self.x.len() < 2 || !self.is_connected_quick() {
            return None;
        }
        let fm = self.faces().ok()?;
        for f in &fm.faces {
            if f.len() != 2 {
                continue;
            }
            let (a, b) = (f[0], f[1]);
            if a.0 == b.0 {
                continue;
            }
            // dart a leaves crossing a.0 on edge e; e sits in slot b.1 - 1 at b.0
            let u = (b.1 + 3) % 4;
            if a.1 % 2 == u % 2 {
                return Some((a.0, b.0));
            }
        }
        None
    }

    fn is_connected_quick(&self) -> bool {
        self.loops == 0 && self.is_connected()
    }

    fn remove_bigon(&self, i: usize, j: usize) -> Diagram {
        let mut uf = UnionFind::default();
        let mut touched = vec![];
        for &k in &[i, j] {
            let t = self.x[k];
            uf.union(t[0], t[2]);
            uf.union(t[1], t[3]);
            touched.extend_from_slice(&t);
        }
        let (x, fwd, loops) = self.rebuild(&mut uf, vec![i, j], &touched, 0);
        Diagram { x, fwd, loops, name: None }
    }

    /// Remove kinks and same-over bigons until none remain. Split pieces with extra loops
    /// are only kink-reduced.
    pub fn simplify(&self) -> Simplified {
        let mut d = self.clone();
        let mut delta = 0;
        loop {
            if let Some((i, s)) = d.find_kink() {
                delta += d.sign(i);
                d = d.remove_kink(i, s);
                continue;
            }
            if let Some((i, j)) = d.find_bigon() {
                delta += d.sign(i) + d.sign(j);
                d = d.remove_bigon(i, j);
                continue;
            }
            break;
        }
        let mut out = d.normalized();
        out.name = self.name.clone();
        Simplified { diagram: out, writhe_delta: delta }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_pd;

    #[test]
    fn kink_to_unknot() {
        let k = parse_pd("PD[X[1,1,2,2]]").unwrap();
        let s = k.simplify();
        assert_eq!(s.diagram.n_crossings(), 0);
        assert_eq!(s.diagram.component_count(), 1);
        assert_eq!(s.writhe_delta.abs(), 1);
    }
}
