//! Segment classes on a cuspidal line.
//!
//! A segment `[a, b]` on a line is the sequence of classes `a, a+1, ..., b`.
//! Two segments are equivalent when they have the same length and the same
//! starting class, so a [`Segment`] stores a canonical start together with
//! its length. Every operation takes the line the segment lives on.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{CuspidalLine, Level, Tower};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    level: Level,
    start: i64,
    len: u32,
}

/// Canonical order: level, then longer segments first, then start.
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.level
            .cmp(&other.level)
            .then(other.len.cmp(&self.len))
            .then(self.start.cmp(&other.start))
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Segment {
    /// The class of `[a, b]` on `line`, with `a <= b`.
    pub fn new(line: &CuspidalLine, level: Level, a: i64, b: i64) -> Result<Self> {
        if a > b {
            return Err(Error::EmptySegment(a, b));
        }
        Ok(Self::from_start(line, level, a, (b - a + 1) as u32))
    }

    pub fn from_start(line: &CuspidalLine, level: Level, start: i64, len: u32) -> Self {
        assert!(len > 0, "segments have positive length");
        Segment {
            level,
            start: line.class(start),
            len,
        }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    /// Segments are never empty; present for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Final class `b`.
    pub fn end(&self, line: &CuspidalLine) -> i64 {
        line.class(self.start + self.len as i64 - 1)
    }

    pub fn degree(&self, line: &CuspidalLine) -> u64 {
        self.len as u64 * line.degree()
    }

    /// The class sequence `a, a+1, ..., b` reduced on the line.
    pub fn classes(&self, line: &CuspidalLine) -> Vec<i64> {
        (0..self.len as i64)
            .map(|k| line.class(self.start + k))
            .collect()
    }

    /// Multiset of classes of the segment.
    pub fn support(&self, line: &CuspidalLine) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for c in self.classes(line) {
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }

    /// `[a, b] -> [-b, -a]`, read on the dual line.
    pub fn dual(&self, line: &CuspidalLine) -> Segment {
        let b = self.start + self.len as i64 - 1;
        Segment::from_start(&line.dual(), self.level, -b, self.len)
    }

    /// `[a, b] -> [a+1, b]`; `None` for length one.
    pub fn left_trunc(&self, line: &CuspidalLine) -> Option<Segment> {
        (self.len > 1).then(|| Segment::from_start(line, self.level, self.start + 1, self.len - 1))
    }

    /// `[a, b] -> [a, b-1]`; `None` for length one.
    pub fn right_trunc(&self) -> Option<Segment> {
        (self.len > 1).then(|| Segment {
            len: self.len - 1,
            ..*self
        })
    }

    /// Supercuspidal expansion on a tower. A level-`r` segment becomes the
    /// `n = e * l^r` shifts `[a+k, b+k]` of the same length on the
    /// supercuspidal line; supercuspidal segments are returned unchanged.
    pub fn sc_expand(&self, tower: &Tower) -> Vec<Segment> {
        match self.level {
            Level::Sc => vec![*self],
            Level::Cusp(r) => {
                let n = tower
                    .period_length(r)
                    .expect("cuspidal levels exist only on towers in positive characteristic");
                (0..n as i64)
                    .map(|k| Segment::from_start(tower.base(), Level::Sc, self.start + k, self.len))
                    .collect()
            }
        }
    }

    /// Writes the segment as `[a,b]@level` using its canonical start.
    pub fn write_dsl(&self, f: &mut impl fmt::Write) -> fmt::Result {
        write!(
            f,
            "[{},{}]@{}",
            self.start,
            self.start + self.len as i64 - 1,
            self.level
        )
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_dsl(f)
    }
}

/// Length of the longest subsequence of `seq` made of consecutive classes
/// `c, c+1, c+2, ...` on the line.
fn longest_run(line: &CuspidalLine, seq: &[i64]) -> usize {
    // best[j]: longest such subsequence ending at position j
    let mut best = vec![1usize; seq.len()];
    for j in 0..seq.len() {
        for i in 0..j {
            if line.class(seq[i] + 1) == seq[j] && best[i] + 1 > best[j] {
                best[j] = best[i] + 1;
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// `first` precedes `second`: the class sequence of `first` followed by that
/// of `second` contains a subsequence forming a segment strictly longer than
/// both.
pub fn precedes(line: &CuspidalLine, first: &Segment, second: &Segment) -> bool {
    let mut seq = first.classes(line);
    seq.extend(second.classes(line));
    longest_run(line, &seq) > first.len.max(second.len) as usize
}

pub fn linked(line: &CuspidalLine, a: &Segment, b: &Segment) -> bool {
    precedes(line, a, b) || precedes(line, b, a)
}

/// Linkage of two segments on a tower. Segments on different levels lie on
/// different lines and are never linked.
pub fn linked_on_tower(tower: &Tower, a: &Segment, b: &Segment) -> bool {
    if a.level != b.level {
        return false;
    }
    let line = tower.line(a.level).expect("segment level exists on its tower");
    linked(&line, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Cardinal;

    fn z() -> CuspidalLine {
        CuspidalLine::integers()
    }

    fn seg(line: &CuspidalLine, a: i64, b: i64) -> Segment {
        Segment::new(line, Level::Sc, a, b).unwrap()
    }

    /// All-subsequences linkage oracle, exponential in the total length.
    fn precedes_oracle(line: &CuspidalLine, x: &Segment, y: &Segment) -> bool {
        let mut seq = x.classes(line);
        seq.extend(y.classes(line));
        let need = x.len().max(y.len()) as usize;
        (0u32..1 << seq.len()).any(|mask| {
            let sub: Vec<i64> = (0..seq.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| seq[i])
                .collect();
            sub.len() > need && sub.windows(2).all(|w| line.class(w[0] + 1) == w[1])
        })
    }

    fn lines() -> Vec<CuspidalLine> {
        let mut out = vec![z()];
        for o in 1..=4 {
            out.push(CuspidalLine::cyclic(5, o).unwrap());
        }
        out
    }

    fn all_segments(line: &CuspidalLine, max_len: u32) -> Vec<Segment> {
        let starts: Vec<i64> = match line.order() {
            Cardinal::Infinite => (-1..=8).collect(),
            Cardinal::Finite(o) => (0..o as i64).collect(),
        };
        let mut out = Vec::new();
        for &s in &starts {
            for len in 1..=max_len {
                out.push(Segment::from_start(line, Level::Sc, s, len));
            }
        }
        out
    }

    #[test]
    fn support_examples() {
        let s = seg(&z(), 0, 2);
        assert_eq!(s.support(&z()), BTreeMap::from([(0, 1), (1, 1), (2, 1)]));
        let three = CuspidalLine::cyclic(2, 3).unwrap();
        let s = Segment::from_start(&three, Level::Sc, 2, 4);
        assert_eq!(s.support(&three), BTreeMap::from([(2, 2), (0, 1), (1, 1)]));
        let one = CuspidalLine::cyclic(2, 1).unwrap();
        let s = Segment::from_start(&one, Level::Sc, 5, 6);
        assert_eq!(s.start(), 0);
        assert_eq!(s.support(&one), BTreeMap::from([(0, 6)]));
    }

    #[test]
    fn linkage_examples() {
        let l = z();
        assert!(precedes(&l, &seg(&l, 0, 0), &seg(&l, 1, 1)));
        assert!(linked(&l, &seg(&l, 0, 0), &seg(&l, 1, 1)));
        assert!(!linked(&l, &seg(&l, 0, 0), &seg(&l, 2, 2)));
        assert!(linked(&l, &seg(&l, 0, 1), &seg(&l, 2, 3)));
        let one = CuspidalLine::cyclic(3, 1).unwrap();
        assert!(linked(&one, &seg(&one, 0, 0), &seg(&one, 0, 0)));
        // contained segments are not linked
        assert!(!linked(&l, &seg(&l, 0, 3), &seg(&l, 1, 2)));
    }

    #[test]
    fn dp_matches_oracle() {
        for line in lines() {
            let segs = all_segments(&line, 7);
            for x in &segs {
                for y in &segs {
                    if x.len() + y.len() > 8 {
                        continue;
                    }
                    assert_eq!(
                        precedes(&line, x, y),
                        precedes_oracle(&line, x, y),
                        "{x} {y} on o={}",
                        line.order()
                    );
                }
            }
        }
    }

    #[test]
    fn linkage_symmetric_and_irreflexive_on_integers() {
        let l = z();
        let segs = all_segments(&l, 5);
        for x in &segs {
            assert!(!linked(&l, x, x));
            for y in &segs {
                assert_eq!(linked(&l, x, y), linked(&l, y, x));
            }
        }
    }

    #[test]
    fn unlinked_final_class_absent() {
        for line in lines() {
            let segs = all_segments(&line, 7);
            for x in &segs {
                for y in &segs {
                    if x.len() + y.len() > 8 || x.len() < y.len() || linked(&line, x, y) {
                        continue;
                    }
                    if x.end(&line) != y.end(&line) {
                        assert!(
                            !y.classes(&line).contains(&x.end(&line)),
                            "{x} {y} o={}",
                            line.order()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn unlinked_stays_unlinked_after_left_truncation() {
        for line in lines() {
            let segs = all_segments(&line, 7);
            for x in &segs {
                for y in &segs {
                    if x.len() + y.len() > 8 || x.len() < y.len() || linked(&line, x, y) {
                        continue;
                    }
                    if let Some(ty) = y.left_trunc(&line) {
                        assert!(!linked(&line, x, &ty), "{x} {y} o={}", line.order());
                    }
                }
            }
        }
    }

    #[test]
    fn duality_and_truncations() {
        let l = z();
        let d = seg(&l, 1, 3).dual(&l);
        assert_eq!((d.start(), d.len()), (-3, 3));
        assert_eq!(d.dual(&l.dual()), seg(&l, 1, 3));
        assert_eq!(seg(&l, 0, 2).left_trunc(&l), Some(seg(&l, 1, 2)));
        assert_eq!(seg(&l, 0, 2).right_trunc(), Some(seg(&l, 0, 1)));
        assert_eq!(seg(&l, 4, 4).right_trunc(), None);
        assert_eq!(seg(&l, 4, 4).left_trunc(&l), None);
    }

    #[test]
    fn dual_support_is_negated() {
        for line in lines() {
            for s in all_segments(&line, 6) {
                let dual_line = line.dual();
                let neg: BTreeMap<i64, u64> = s
                    .support(&line)
                    .into_iter()
                    .map(|(c, m)| (dual_line.class(-c), m))
                    .collect();
                assert_eq!(s.dual(&line).support(&dual_line), neg);
            }
        }
    }

    #[test]
    fn sc_expand_examples() {
        let t = Tower::from_params(Cardinal::Finite(1), 2).unwrap();
        let c0 = t.line(Level::Cusp(0)).unwrap();
        let s = Segment::from_start(&c0, Level::Cusp(0), 0, 1);
        let sc_point = Segment::from_start(t.base(), Level::Sc, 0, 1);
        assert_eq!(s.sc_expand(&t), vec![sc_point, sc_point]);

        let t = Tower::from_params(Cardinal::Finite(3), 2).unwrap();
        let s = Segment::from_start(&c0, Level::Cusp(0), 0, 2);
        let got = s.sc_expand(&t);
        let want: Vec<Segment> = (0..3)
            .map(|k| Segment::from_start(t.base(), Level::Sc, k, 2))
            .collect();
        assert_eq!(got, want);

        let sc = Segment::from_start(t.base(), Level::Sc, 1, 3);
        assert_eq!(sc.sc_expand(&t), vec![sc]);
    }

    #[test]
    fn sc_expand_preserves_degree() {
        for (o0, ell) in [(1, 2), (1, 3), (2, 3), (3, 2), (4, 3)] {
            let t = Tower::from_params(Cardinal::Finite(o0), ell).unwrap();
            for r in 0..3 {
                let line = t.line(Level::Cusp(r)).unwrap();
                for len in 1..4 {
                    let s = Segment::from_start(&line, Level::Cusp(r), 0, len);
                    let total: u64 = s.sc_expand(&t).iter().map(|x| x.degree(t.base())).sum();
                    assert_eq!(total, s.degree(&line));
                }
            }
        }
    }

    #[test]
    fn different_levels_never_linked() {
        let t = Tower::from_params(Cardinal::Finite(1), 2).unwrap();
        let a = Segment::from_start(t.base(), Level::Sc, 0, 1);
        let b = Segment::from_start(&t.line(Level::Cusp(0)).unwrap(), Level::Cusp(0), 0, 1);
        assert!(!linked_on_tower(&t, &a, &b));
        assert!(linked_on_tower(&t, &a, &a));
    }

    #[test]
    fn rejects_reversed_bounds() {
        assert_eq!(
            Segment::new(&z(), Level::Sc, 3, 1),
            Err(Error::EmptySegment(3, 1))
        );
    }
}
