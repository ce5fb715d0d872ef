//! Proper colourings enumerated up to permutation of the colour classes.
//!
//! Colourings are produced as restricted growth strings: vertex 0 takes
//! colour 0 and every later vertex takes a colour at most one above the
//! largest colour used before it. Each partition into colour classes
//! therefore appears exactly once.

use alloc::vec;
use alloc::vec::Vec;

use crate::{check_cap, Caps, Graph, Result};

/// A partition of the vertex set into independent colour classes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    /// `colors[v]` is the class index of vertex `v`; classes are numbered in
    /// order of their smallest vertex.
    pub colors: Vec<usize>,
    pub classes: usize,
}

impl Coloring {
    /// Vertices of each class in ascending order.
    pub fn class_sets(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn smallest_class(&self) -> usize {
        self.class_sets().iter().map(Vec::len).min().unwrap_or(0)
    }
}

/// Stream of proper colourings of `g` with exactly `r` non-empty classes.
pub struct ProperColorings<'a> {
    g: &'a Graph,
    r: usize,
    colors: Vec<usize>,
    /// `used[v]` = number of colours among vertices `0..v`.
    used: Vec<usize>,
    pos: usize,
    started: bool,
    done: bool,
}

impl<'a> ProperColorings<'a> {
    fn new(g: &'a Graph, r: usize) -> Self {
        let n = g.order();
        ProperColorings {
            g,
            r,
            colors: vec![usize::MAX; n],
            used: vec![0; n + 1],
            pos: 0,
            started: false,
            done: r > n || (r == 0 && n > 0),
        }
    }

    /// Tries to give `self.pos` the smallest admissible colour `>= from`.
    fn place(&mut self, from: usize) -> bool {
        let v = self.pos;
        let n = self.g.order();
        let before = self.used[v];
        let top = (before + 1).min(self.r);
        for c in from..top {
            let now = before.max(c + 1);
            if n - v - 1 < self.r - now {
                continue;
            }
            if self.g.neighbors(v).any(|u| u < v && self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            self.used[v + 1] = now;
            return true;
        }
        self.colors[v] = usize::MAX;
        false
    }

    fn advance(&mut self) -> bool {
        let n = self.g.order();
        let mut from = if self.started {
            // Resume after the last emitted colouring.
            self.pos = n - 1;
            self.colors[self.pos] + 1
        } else {
            self.started = true;
            0
        };
        loop {
            if self.place(from) {
                if self.pos + 1 == n {
                    return true;
                }
                self.pos += 1;
                from = 0;
            } else {
                if self.pos == 0 {
                    return false;
                }
                self.pos -= 1;
                from = self.colors[self.pos] + 1;
            }
        }
    }
}

impl Iterator for ProperColorings<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        if self.g.order() == 0 {
            self.done = true;
            return Some(Coloring { colors: Vec::new(), classes: 0 });
        }
        if self.advance() {
            Some(Coloring { colors: self.colors.clone(), classes: self.r })
        } else {
            self.done = true;
            None
        }
    }
}

/// Proper colourings of `h` into exactly `r` non-empty classes, each
/// partition once. Empty when `r < chi(h)` or `r > v(h)`.
pub fn proper_colorings<'a>(h: &'a Graph, r: usize, caps: &Caps) -> Result<ProperColorings<'a>> {
    check_cap("pattern order for colouring enumeration", h.order(), caps.embedding)?;
    Ok(ProperColorings::new(h, r))
}

pub(crate) fn colorings_uncapped(h: &Graph, r: usize) -> ProperColorings<'_> {
    ProperColorings::new(h, r)
}

pub fn chromatic_number(h: &Graph, caps: &Caps) -> Result<usize> {
    check_cap("pattern order for colouring enumeration", h.order(), caps.embedding)?;
    Ok(chromatic_uncapped(h))
}

pub(crate) fn chromatic_uncapped(h: &Graph) -> usize {
    if h.order() == 0 {
        return 0;
    }
    (1..=h.order())
        .find(|&r| ProperColorings::new(h, r).next().is_some())
        .expect("n colours always suffice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{bowtie, complete, complete_multipartite, cycle};

    fn count(g: &Graph, r: usize) -> usize {
        proper_colorings(g, r, &Caps::default()).unwrap().count()
    }

    #[test]
    fn counts() {
        assert_eq!(count(&complete(3), 3), 1);
        assert_eq!(count(&cycle(5), 3), 5);
        assert_eq!(count(&complete_multipartite(&[2, 2, 2]), 3), 1);
        assert_eq!(count(&complete(3), 2), 0);
        assert_eq!(count(&complete(3), 4), 0);
        assert_eq!(count(&Graph::empty(3), 2), 3);
    }

    #[test]
    fn colourings_are_proper_and_full() {
        let g = bowtie();
        for c in proper_colorings(&g, 3, &Caps::default()).unwrap() {
            for (u, v) in g.edges() {
                assert_ne!(c.colors[u], c.colors[v]);
            }
            assert!(c.class_sets().iter().all(|s| !s.is_empty()));
        }
        let sides = proper_colorings(&complete_multipartite(&[2, 2, 2]), 3, &Caps::default())
            .unwrap()
            .next()
            .unwrap();
        assert_eq!(sides.class_sets(), vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
    }

    #[test]
    fn chromatic_numbers() {
        let caps = Caps::default();
        assert_eq!(chromatic_number(&complete(3), &caps).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(5), &caps).unwrap(), 3);
        assert_eq!(chromatic_number(&complete_multipartite(&[2, 2, 2]), &caps).unwrap(), 3);
        assert_eq!(chromatic_number(&complete(5), &caps).unwrap(), 5);
        assert_eq!(chromatic_number(&Graph::empty(4), &caps).unwrap(), 1);
    }
}
