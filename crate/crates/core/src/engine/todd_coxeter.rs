//! Todd–Coxeter enumeration of the monoid `⟨A | R⟩`.
//!
//! Classes are cosets of the right congruence generated by `{(pu, pv)}` for
//! every prefix `p` and relation `(u, v)`; pushing every relation at every
//! live coset (HLT order) therefore yields the two-sided congruence. Coset 0
//! is the class of the empty word. Coincidences are merged with a union-find
//! over cosets; table entries may point at dead cosets and are resolved
//! through `find` on read.

use crate::error::{Error, Result};
use crate::words::{Letter, Presentation};

use super::monoid::EnumeratedMonoid;

pub const DEFAULT_CLASS_CAP: usize = 100_000;

const UNDEF: u32 = u32::MAX;

/// Finished coset table: `classes × letters`, class 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceTable {
    letters: Vec<Letter>,
    classes: usize,
    table: Vec<usize>,
    /// Total cosets defined during the run, live or not.
    pub defined: usize,
}

impl CongruenceTable {
    pub fn size(&self) -> usize {
        self.classes
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn get(&self, class: usize, letter: usize) -> usize {
        self.table[class * self.letters.len() + letter]
    }

    pub fn trace(&self, start: usize, word: &[usize]) -> usize {
        word.iter().fold(start, |c, &g| self.get(c, g))
    }

    /// True if every relation holds at every class.
    pub fn is_compatible(&self, relations: &[(Vec<usize>, Vec<usize>)]) -> bool {
        (0..self.classes).all(|c| {
            relations
                .iter()
                .all(|(u, v)| self.trace(c, u) == self.trace(c, v))
        })
    }

    /// The presented monoid with shortlex-least class representatives.
    pub fn to_monoid(&self) -> EnumeratedMonoid {
        EnumeratedMonoid::from_right_table(self.letters.clone(), &self.table)
    }
}

struct Enumerator {
    k: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    cap: usize,
    pending: Vec<(u32, u32)>,
}

impl Enumerator {
    fn new(k: usize, cap: usize) -> Self {
        Self {
            k,
            table: vec![UNDEF; k],
            parent: vec![0],
            live: 1,
            cap,
            pending: Vec::new(),
        }
    }

    fn count(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn find(&mut self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            let up = self.parent[self.parent[c as usize] as usize];
            self.parent[c as usize] = up;
            c = up;
        }
        c
    }

    fn get(&mut self, c: u32, g: usize) -> Option<u32> {
        match self.table[c as usize * self.k + g] {
            UNDEF => None,
            d => Some(self.find(d)),
        }
    }

    fn set(&mut self, c: u32, g: usize, d: u32) {
        self.table[c as usize * self.k + g] = d;
    }

    fn define(&mut self, c: u32, g: usize) -> Result<u32> {
        if self.live >= self.cap {
            return Err(Error::CapExceeded { cap: self.cap });
        }
        let d = self.count() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.k));
        self.live += 1;
        self.set(c, g, d);
        Ok(d)
    }

    /// Follows `word` from `c`, defining missing cosets.
    fn trace_define(&mut self, mut c: u32, word: &[usize]) -> Result<u32> {
        for &g in word {
            c = match self.get(c, g) {
                Some(d) => d,
                None => self.define(c, g)?,
            };
        }
        Ok(c)
    }

    /// Makes `c · u = c · v` hold.
    fn push_relation(&mut self, c: u32, u: &[usize], v: &[usize]) -> Result<()> {
        let p = self.trace_define(c, u)?;
        match v.split_last() {
            None => self.coincidence(p, c),
            Some((&last, init)) => {
                let q = self.trace_define(c, init)?;
                match self.get(q, last) {
                    Some(r) => self.coincidence(p, r),
                    None => self.set(q, last, p),
                }
            }
        }
        Ok(())
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.pending.push((a, b));
        while let Some((a, b)) = self.pending.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, kill) = (a.min(b), a.max(b));
            self.parent[kill as usize] = keep;
            self.live -= 1;
            for g in 0..self.k {
                let raw = self.table[kill as usize * self.k + g];
                if raw == UNDEF {
                    continue;
                }
                let r = self.find(raw);
                match self.get(keep, g) {
                    Some(s) if s != r => self.pending.push((s, r)),
                    Some(_) => {}
                    None => self.set(keep, g, r),
                }
            }
        }
    }

    fn run(&mut self, relations: &[(Vec<usize>, Vec<usize>)]) -> Result<()> {
        let mut c = 0u32;
        while (c as usize) < self.count() {
            if self.is_live(c) {
                for (u, v) in relations {
                    self.push_relation(c, u, v)?;
                    if !self.is_live(c) {
                        break;
                    }
                }
                if self.is_live(c) {
                    for g in 0..self.k {
                        if self.get(c, g).is_none() {
                            self.define(c, g)?;
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn finish(mut self, letters: Vec<Letter>) -> CongruenceTable {
        let mut renumber = vec![usize::MAX; self.count()];
        let mut classes = 0;
        for (c, slot) in renumber.iter_mut().enumerate() {
            if self.parent[c] == c as u32 {
                *slot = classes;
                classes += 1;
            }
        }
        let mut table = Vec::with_capacity(classes * self.k);
        for c in 0..self.count() as u32 {
            if self.is_live(c) {
                for g in 0..self.k {
                    let d = self.get(c, g).expect("closed table");
                    table.push(renumber[d as usize]);
                }
            }
        }
        CongruenceTable {
            letters,
            classes,
            table,
            defined: self.count(),
        }
    }
}

/// Enumerates the classes of the monoid presented by `pres`, failing with
/// [`Error::CapExceeded`] if more than `cap` classes are ever live at once.
pub fn todd_coxeter(pres: &Presentation, cap: usize) -> Result<CongruenceTable> {
    if cap == 0 {
        return Err(Error::CapExceeded { cap });
    }
    let relations = pres.indexed_relations()?;
    let mut e = Enumerator::new(pres.alphabet.len(), cap);
    e.run(&relations)?;
    Ok(e.finish(pres.alphabet.clone()))
}
