#![allow(dead_code)]

use std::path::PathBuf;

use annulus::data::{load_fixtures, FixtureSet};
use annulus::diagram::Diagram;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

pub fn fixtures() -> FixtureSet {
    load_fixtures(&fixtures_dir()).expect("fixtures load")
}

/// Closure of a braid word on `strands` strands; generator ±(i+1) crosses positions i, i+1,
/// with the strand running up from the left passing over for positive letters.
pub fn braid_closure(strands: usize, word: &[i32]) -> Diagram {
    let mut next = strands as u32 + 1;
    let mut pos: Vec<u32> = (1..=strands as u32).collect();
    let mut x = vec![];
    let mut fwd = vec![];
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        let (sw, se) = (pos[i], pos[i + 1]);
        let (nw, ne) = (next, next + 1);
        next += 2;
        if g > 0 {
            // SE -> NW passes under
            x.push([se, ne, nw, sw]);
            fwd.push(true);
        } else {
            // SW -> NE passes under
            x.push([sw, se, ne, nw]);
            fwd.push(false);
        }
        // the left strand ends at NE, the right one at NW
        pos[i] = nw;
        pos[i + 1] = ne;
    }
    let mut loops = 0;
    for (p, &top) in pos.iter().enumerate() {
        let bottom = p as u32 + 1;
        if top == bottom {
            loops += 1;
        } else {
            for t in x.iter_mut() {
                for e in t.iter_mut() {
                    if *e == top {
                        *e = bottom;
                    }
                }
            }
        }
    }
    Diagram::from_oriented(x, fwd, loops).expect("braid closure").normalized()
}
