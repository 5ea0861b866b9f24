use super::{Diagram, DiagramError};

impl Diagram {
    fn fresh_label(&self) -> u32 {
        self.labels().last().copied().unwrap_or(0) + 1
    }

    fn replace_at(&mut self, (i, s): super::Pos, e: u32) {
        self.x[i][s] = e;
    }

    /// Add a small circle around edge `e`, passing over it once and under it once, linking
    /// the pierced component with linking number `sign`. The new circle is the last component.
    /// On a crossingless diagram one loop is used and `e` is ignored.
    pub fn add_meridian(&self, e: u32, sign: i32) -> Result<Self, DiagramError> {
        let mut d = self.clone();
        let base = self.fresh_label();
        let (mut e1, e2, m1, m2) = (e, base, base + 2, base + 3);
        let e3;
        if d.x.is_empty() {
            if d.loops == 0 {
                return Err(DiagramError::BadEdge(e));
            }
            d.loops -= 1;
            e1 = base + 1;
            e3 = e1;
        } else {
            let head = self.head(e).ok_or(DiagramError::BadEdge(e))?;
            e3 = base + 1;
            d.replace_at(head, e3);
        }
        // e: e1 -> C1 (under) -> e2 -> C2 (over) -> e3; circle m1 -> C2 -> m2 -> C1
        d.x.push([e1, m1, e2, m2]);
        d.fwd.push(true);
        d.x.push([m1, e3, m2, e2]);
        d.fwd.push(true);
        d.validate()?;
        if sign < 0 {
            let comps = d.components();
            let k = comps.iter().position(|c| c.contains(&m1)).unwrap();
            d = d.flip_component(k)?;
        }
        let mut out = d.normalized();
        out.name = None;
        Ok(out)
    }

    /// Push edge `e1` across a face it shares with `e2`, over `e2` (a Reidemeister II move).
    /// `with_face` tells whether both edges run along the face keeping it on their right
    /// (true) or on their left (false).
    pub fn push_over(&self, e1: u32, e2: u32, with_face: bool) -> Result<Self, DiagramError> {
        let t1 = self.tail(e1).ok_or(DiagramError::BadEdge(e1))?;
        let h1 = self.head(e1).unwrap();
        let t2 = self.tail(e2).ok_or(DiagramError::BadEdge(e2))?;
        let h2 = self.head(e2).unwrap();
        let base = self.fresh_label();
        let (e1a, e1m, e1b) = (base, base + 1, base + 2);
        let (e2a, e2m, e2b) = (base + 3, base + 4, base + 5);
        let mut d = self.clone();
        d.replace_at(t1, e1a);
        d.replace_at(h1, e1b);
        d.replace_at(t2, e2a);
        d.replace_at(h2, e2b);
        if with_face {
            d.x.push([e2m, e1a, e2b, e1m]);
            d.fwd.push(false);
            d.x.push([e2a, e1b, e2m, e1m]);
            d.fwd.push(true);
        } else {
            d.x.push([e2m, e1m, e2b, e1a]);
            d.fwd.push(true);
            d.x.push([e2a, e1m, e2m, e1b]);
            d.fwd.push(false);
        }
        d.validate()?;
        d.faces()?;
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_pd;

    #[test]
    fn meridian_of_unknot_is_hopf() {
        let h = parse_pd("PD[]").unwrap().add_meridian(1, 1).unwrap();
        assert_eq!(h.n_crossings(), 2);
        assert_eq!(h.component_count(), 2);
        assert_eq!(h.linking_number(0, 1), 1);
        let hm = parse_pd("PD[]").unwrap().add_meridian(1, -1).unwrap();
        assert_eq!(hm.linking_number(0, 1), -1);
    }

    #[test]
    fn meridian_on_trefoil() {
        let t = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        for e in 1..=6 {
            for s in [1, -1] {
                let m = t.add_meridian(e, s).unwrap();
                assert_eq!(m.component_count(), 2);
                assert_eq!(m.linking_number(0, 1), s);
                assert_eq!(m.faces().unwrap().len(), m.n_crossings() + 2);
            }
        }
    }
}
