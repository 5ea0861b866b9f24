use super::{Diagram, DiagramError};

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn err(&self, msg: impl Into<String>) -> DiagramError {
        DiagramError::Syntax { pos: self.i, msg: msg.into() }
    }

    fn expect(&mut self, tok: &str) -> Result<(), DiagramError> {
        self.skip_ws();
        if self.s[self.i..].starts_with(tok.as_bytes()) {
            self.i += tok.len();
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", tok)))
        }
    }

    fn count(&mut self) -> Result<u32, DiagramError> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.i])
            .unwrap()
            .parse()
            .map_err(|_| DiagramError::Syntax { pos: start, msg: "integer out of range".into() })
    }

    fn number(&mut self) -> Result<u32, DiagramError> {
        let start = self.i;
        let v = self.count()?;
        if v == 0 {
            return Err(DiagramError::Syntax { pos: start, msg: "edge labels must be positive".into() });
        }
        Ok(v)
    }
}

/// Parse `PD[X[a,b,c,d], ...]` with an optional `+n` suffix for extra crossingless loops.
/// `PD[]` on its own is the crossingless unknot; `PD[]+n` is the n-component unlink.
/// A bare trailing integer declares the crossing count and must match, so `PD[]0` is the
/// unknot as well.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let mut c = Cursor { s: text.as_bytes(), i: 0 };
    c.expect("PD")?;
    c.expect("[")?;
    let mut x = vec![];
    if c.peek() != Some(b']') {
        loop {
            c.expect("X")?;
            c.expect("[")?;
            let mut t = [0u32; 4];
            for (k, slot) in t.iter_mut().enumerate() {
                if k > 0 {
                    c.expect(",")?;
                }
                *slot = c.number()?;
            }
            c.expect("]")?;
            x.push(t);
            match c.peek() {
                Some(b',') => c.i += 1,
                Some(b']') => break,
                _ => return Err(c.err("expected `,` or `]`")),
            }
        }
    }
    c.expect("]")?;
    if c.peek().is_some_and(|b| b.is_ascii_digit()) {
        let n = c.count()?;
        if n as usize != x.len() {
            return Err(c.err("declared crossing count differs from the code"));
        }
    }
    let mut loops = None;
    if c.peek() == Some(b'+') {
        c.i += 1;
        loops = Some(c.count()?);
    }
    if c.peek().is_some() {
        return Err(c.err("trailing input"));
    }
    let loops = loops.unwrap_or(if x.is_empty() { 1 } else { 0 });
    Diagram::from_pd(x, loops)
}

/// Parse a named-fixture file: `name<TAB>pd` per line, further tab-separated fields, `#`
/// comments and blank lines ignored.
pub fn parse_named(text: &str) -> Result<Vec<(String, Diagram)>, (usize, String, DiagramError)> {
    let mut out = vec![];
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let (name, pd) = match line.split_once('\t') {
            Some(p) => p,
            None => {
                return Err((
                    ln + 1,
                    line.to_string(),
                    DiagramError::Syntax { pos: 0, msg: "expected name<TAB>pd".into() },
                ))
            }
        };
        let pd = pd.split('\t').next().unwrap_or(pd);
        let d = parse_pd(pd).map_err(|e| (ln + 1, name.to_string(), e))?;
        out.push((name.trim().to_string(), d.with_name(name.trim())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_forms() {
        let u = parse_pd("PD[]").unwrap();
        assert_eq!((u.n_crossings(), u.component_count()), (0, 1));
        let u2 = parse_pd(" PD[ ] + 2").unwrap();
        assert_eq!(u2.component_count(), 2);
        assert_eq!(parse_pd("PD[]+0").unwrap().component_count(), 0);
        assert_eq!(parse_pd("PD[]0").unwrap(), u);
        assert_eq!(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]3").unwrap().n_crossings(), 3);
        assert!(parse_pd("PD[]1").is_err());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_pd("PD[X[1,4,2,3]]"), Err(DiagramError::LabelCount { .. })));
        assert!(matches!(parse_pd("PD[X[1,2,3]]"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_pd("PD[X[0,1,1,0]]"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_pd("PD[X[1,1,2,2]] x"), Err(DiagramError::Syntax { .. })));
    }

    #[test]
    fn named_file() {
        let f = "# comment\n3_1\tPD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\n\n0_1\tPD[]\n";
        let v = parse_named(f).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[0].0, "3_1");
        assert_eq!(v[1].1.component_count(), 1);
    }
}
