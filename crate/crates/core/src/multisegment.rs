//! Multisegments on a tower and their calculus: truncation, derived
//! sequences, the partition `mu`, periods, and the supercuspidal/aperiodic
//! correspondence.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{Cardinal, Level, Tower};
use crate::partition::Partition;
use crate::segment::Segment;

/// A finite multiset of cuspidal points `(level, class)` on a tower.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Support {
    points: BTreeMap<(Level, i64), u64>,
}

impl Support {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_points<I: IntoIterator<Item = ((Level, i64), u64)>>(tower: &Tower, points: I) -> Self {
        let mut s = Support::new();
        for ((level, class), mult) in points {
            s.insert(tower, level, class, mult);
        }
        s
    }

    pub fn insert(&mut self, tower: &Tower, level: Level, class: i64, mult: u64) {
        if mult == 0 {
            return;
        }
        *self
            .points
            .entry((level, tower.class(level, class)))
            .or_insert(0) += mult;
    }

    pub fn get(&self, level: Level, class: i64) -> u64 {
        self.points.get(&(level, class)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Level, i64), &u64)> {
        self.points.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of points counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.points.values().sum()
    }

    pub fn degree(&self, tower: &Tower) -> u64 {
        self.points
            .iter()
            .map(|((level, _), m)| m * tower.point_degree(*level))
            .sum()
    }

    pub fn add(&self, other: &Support) -> Support {
        let mut out = self.clone();
        for (k, m) in &other.points {
            *out.points.entry(*k).or_insert(0) += m;
        }
        out
    }

    pub fn levels(&self) -> BTreeSet<Level> {
        self.points.keys().map(|(l, _)| *l).collect()
    }

    /// The points of one level, as a class multiset.
    pub fn on_level(&self, level: Level) -> BTreeMap<i64, u64> {
        self.points
            .iter()
            .filter(|((l, _), _)| *l == level)
            .map(|((_, c), m)| (*c, *m))
            .collect()
    }

    /// The sum of length-one segments with these points.
    pub fn as_multisegment(&self, tower: &Tower) -> Multisegment {
        let mut m = Multisegment::zero(*tower);
        for ((level, class), mult) in &self.points {
            let line = tower.line(*level).expect("support level exists on tower");
            m.insert(Segment::from_start(&line, *level, *class, 1), *mult);
        }
        m
    }

    /// `t_sc`: supercuspidal image of the points.
    pub fn sc(&self, tower: &Tower) -> Support {
        self.as_multisegment(tower).sc().support()
    }

    /// `t_ap`: support of the aperiodic multisegment with the same
    /// supercuspidal image as the points.
    pub fn ap(&self, tower: &Tower) -> Support {
        self.as_multisegment(tower)
            .sc()
            .ap()
            .expect("sc output is supercuspidal")
            .support()
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return f.write_str("0");
        }
        for (i, ((level, class), mult)) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *mult > 1 {
                write!(f, "{mult}*")?;
            }
            write!(f, "[{class},{class}]@{level}")?;
        }
        Ok(())
    }
}

/// A multisegment: segment classes on a tower with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multisegment {
    tower: Tower,
    ledger: BTreeMap<Segment, u64>,
}

/// The classification data attached to a multisegment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationKeys {
    /// `m_sc`: two multisegments give isomorphic representations iff these agree.
    pub z_key: Multisegment,
    /// Cuspidal support, `supp(m_ap)`.
    pub cusp: Support,
    /// Supercuspidal support, `supp(m_sc)`.
    pub scusp: Support,
}

impl Multisegment {
    pub fn zero(tower: Tower) -> Self {
        Multisegment {
            tower,
            ledger: BTreeMap::new(),
        }
    }

    pub fn from_segments<I: IntoIterator<Item = (Segment, u64)>>(tower: Tower, segments: I) -> Self {
        let mut m = Self::zero(tower);
        for (s, mult) in segments {
            m.insert(s, mult);
        }
        m
    }

    /// Adds `mult` copies of `segment`, re-canonicalising its start on the
    /// tower.
    pub fn insert(&mut self, segment: Segment, mult: u64) {
        if mult == 0 {
            return;
        }
        let line = self
            .tower
            .line(segment.level())
            .expect("segment level exists on tower");
        let s = Segment::from_start(&line, segment.level(), segment.start(), segment.len());
        *self.ledger.entry(s).or_insert(0) += mult;
    }

    /// `[a, b]` at `level`, canonicalised on this tower.
    pub fn segment(&self, level: Level, a: i64, b: i64) -> Result<Segment> {
        let line = self.tower.line(level)?;
        Segment::new(&line, level, a, b)
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Segment, &u64)> {
        self.ledger.iter()
    }

    pub fn multiplicity(&self, segment: &Segment) -> u64 {
        self.ledger.get(segment).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.ledger.is_empty()
    }

    /// Number of segments counted with multiplicity.
    pub fn segment_count(&self) -> u64 {
        self.ledger.values().sum()
    }

    fn line_degree(&self, level: Level) -> u64 {
        self.tower.point_degree(level)
    }

    pub fn degree(&self) -> u64 {
        self.ledger
            .iter()
            .map(|(s, m)| m * s.len() as u64 * self.line_degree(s.level()))
            .sum()
    }

    /// Total length `n(m)`.
    pub fn length(&self) -> u64 {
        self.ledger.iter().map(|(s, m)| m * s.len() as u64).sum()
    }

    pub fn is_supercuspidal(&self) -> bool {
        self.ledger.keys().all(|s| s.level() == Level::Sc)
    }

    pub fn support(&self) -> Support {
        let mut out = Support::new();
        for (s, m) in &self.ledger {
            let line = self.tower.line(s.level()).expect("level exists");
            for (c, k) in s.support(&line) {
                out.insert(&self.tower, s.level(), c, k * m);
            }
        }
        out
    }

    pub fn add(&self, other: &Multisegment) -> Result<Multisegment> {
        if self.tower != other.tower {
            return Err(Error::TowerMismatch);
        }
        let mut out = self.clone();
        for (s, m) in &other.ledger {
            out.insert(*s, *m);
        }
        Ok(out)
    }

    /// Whether `other` is a sub-multiset of `self`.
    pub fn contains(&self, other: &Multisegment) -> bool {
        self.tower == other.tower
            && other
                .ledger
                .iter()
                .all(|(s, m)| self.multiplicity(s) >= *m)
    }

    /// Sorted degrees of the segments, as a partition.
    pub fn segment_degrees(&self) -> Partition {
        Partition::from_family(self.ledger.iter().flat_map(|(s, m)| {
            let d = s.len() as u64 * self.line_degree(s.level());
            std::iter::repeat_n(d, *m as usize)
        }))
    }

    /// `m^-`: every segment loses its final point; length-one segments vanish.
    pub fn minus(&self) -> Multisegment {
        let mut out = Self::zero(self.tower);
        for (s, m) in &self.ledger {
            if let Some(t) = s.right_trunc() {
                out.insert(t, *m);
            }
        }
        out
    }

    /// `m^(1)`: the multiset of final points.
    pub fn endpoints(&self) -> Support {
        let mut out = Support::new();
        for (s, m) in &self.ledger {
            let line = self.tower.line(s.level()).expect("level exists");
            out.insert(&self.tower, s.level(), s.end(&line), *m);
        }
        out
    }

    /// `(m^(1), m^(2), ...)` with `m^(i+1) = (m^-)^(i)`, up to the last
    /// nonzero term.
    pub fn derived_sequence(&self) -> Vec<Support> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            out.push(cur.endpoints());
            cur = cur.minus();
        }
        out
    }

    /// Inverse of [`Multisegment::derived_sequence`]. With `N_i(y)` the
    /// multiplicity of `y` in `seq[i-1]`, the number of segments of length
    /// exactly `L` starting at `a` is `N_L(a) - N_{L+1}(a - 1)`.
    pub fn reconstruct(tower: Tower, seq: &[Support]) -> Result<Multisegment> {
        let empty = Support::new();
        let mut m = Self::zero(tower);
        for (i, current) in seq.iter().enumerate() {
            let len = i as u32 + 1;
            let next = seq.get(i + 1).unwrap_or(&empty);
            let mut starts: BTreeSet<(Level, i64)> = current.points.keys().copied().collect();
            for (level, y) in next.points.keys() {
                starts.insert((*level, tower.class(*level, y + 1)));
            }
            for (level, a) in starts {
                let here = current.get(level, a);
                let longer = next.get(level, tower.class(level, a - 1));
                if longer > here {
                    return Err(Error::NotDerivedSequence(format!(
                        "term {} has more points ending before {a}@{level} than term {len} has at it",
                        len + 1
                    )));
                }
                let line = tower.line(level)?;
                m.insert(Segment::from_start(&line, level, a, len), here - longer);
            }
        }
        if m.derived_sequence() != seq {
            return Err(Error::NotDerivedSequence(
                "sequence does not round-trip".into(),
            ));
        }
        Ok(m)
    }

    /// `mu_m`: the degrees of the derived sequence.
    pub fn mu_partition(&self) -> Result<Partition> {
        if self.is_zero() {
            return Err(Error::ZeroMultisegment);
        }
        let degrees = self
            .derived_sequence()
            .iter()
            .map(|s| s.degree(&self.tower))
            .collect();
        Partition::new(degrees)
    }

    /// Every `n` with `m ⊢ n`: each segment is kept or right-truncated
    /// independently. Sorted and duplicate-free.
    pub fn truncations(&self) -> Vec<Multisegment> {
        let entries: Vec<(Segment, u64)> = self.ledger.iter().map(|(s, m)| (*s, *m)).collect();
        let mut out = BTreeSet::new();
        let mut acc = Self::zero(self.tower);
        self.truncate_rec(&entries, 0, &mut acc, &mut out);
        out.into_iter().map(|k: OrdMult| k.0).collect()
    }

    fn truncate_rec(
        &self,
        entries: &[(Segment, u64)],
        idx: usize,
        acc: &mut Multisegment,
        out: &mut BTreeSet<OrdMult>,
    ) {
        let Some((seg, mult)) = entries.get(idx) else {
            out.insert(OrdMult(acc.clone()));
            return;
        };
        for cut in 0..=*mult {
            let mut next = acc.clone();
            next.insert(*seg, mult - cut);
            if let Some(t) = seg.right_trunc() {
                next.insert(t, cut);
            }
            self.truncate_rec(entries, idx + 1, &mut next, out);
        }
    }

    /// `m ⊢ n`.
    pub fn vdash(&self, n: &Multisegment) -> bool {
        self.tower == n.tower && self.truncations().contains(n)
    }

    /// `delta(m, n) = deg(m) - deg(n)` when `m ⊢ n`.
    pub fn delta(&self, n: &Multisegment) -> Option<u64> {
        self.vdash(n).then(|| self.degree() - n.degree())
    }

    /// A contained period `[a,b] + [a+1,b+1] + ... + [a+n-1,b+n-1]` with
    /// `n = e(line)`. Periods with `n = e * l^r`, `r > 0`, contain one with
    /// `r = 0` starting at the same segment.
    pub fn find_period(&self) -> Option<Multisegment> {
        for seg in self.ledger.keys() {
            let line = self.tower.line(seg.level()).expect("level exists");
            let Cardinal::Finite(e) = line.e() else {
                continue;
            };
            let mut period = Self::zero(self.tower);
            for k in 0..e as i64 {
                period.insert(
                    Segment::from_start(&line, seg.level(), seg.start() + k, seg.len()),
                    1,
                );
            }
            if self.contains(&period) {
                return Some(period);
            }
        }
        None
    }

    pub fn is_aperiodic(&self) -> bool {
        self.find_period().is_none()
    }

    /// `m_sc`: additive supercuspidal expansion.
    pub fn sc(&self) -> Multisegment {
        let mut out = Self::zero(self.tower);
        for (s, m) in &self.ledger {
            for t in s.sc_expand(&self.tower) {
                out.insert(t, *m);
            }
        }
        out
    }

    /// `m_ap` for a supercuspidal `m`: the unique aperiodic multisegment whose
    /// supercuspidal expansion is `m`.
    ///
    /// Per length `L`, the part that must come from cuspidal levels is
    /// written in base `l`; digit `r` is the multiplicity of the length-`L`
    /// segment on level `r`.
    pub fn ap(&self) -> Result<Multisegment> {
        if !self.is_supercuspidal() {
            return Err(Error::NotSupercuspidal);
        }
        let ell = self.tower.ell();
        if ell == 0 {
            return Ok(self.clone());
        }
        let o0 = self.tower.o0().finite().ok_or(Error::InfiniteOrder)?;
        let base = *self.tower.base();
        let mut by_len: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
        for (s, m) in &self.ledger {
            by_len.entry(s.len()).or_insert_with(|| vec![0; o0 as usize])[s.start() as usize] += m;
        }
        let mut out = Self::zero(self.tower);
        for (len, counts) in by_len {
            let (residual, carried) = if o0 == 1 {
                let w = counts[0] % ell;
                (vec![w], (counts[0] - w) / ell)
            } else {
                let c = *counts.iter().min().expect("o0 >= 1");
                (counts.iter().map(|v| v - c).collect(), c)
            };
            for (a, w) in residual.into_iter().enumerate() {
                out.insert(Segment::from_start(&base, Level::Sc, a as i64, len), w);
            }
            let mut rest = carried;
            let mut r = 0u32;
            while rest > 0 {
                let level = Level::Cusp(r);
                let line = self.tower.line(level)?;
                out.insert(Segment::from_start(&line, level, 0, len), rest % ell);
                rest /= ell;
                r += 1;
            }
        }
        Ok(out)
    }

    /// `m^∨`, living on the dual tower.
    pub fn dual(&self) -> Multisegment {
        let mut out = Self::zero(self.tower.dual());
        for (s, m) in &self.ledger {
            let line = self.tower.line(s.level()).expect("level exists");
            out.insert(s.dual(&line), *m);
        }
        out
    }

    pub fn classification_keys(&self) -> ClassificationKeys {
        let z_key = self.sc();
        let cusp = z_key.ap().expect("sc output is supercuspidal").support();
        let scusp = z_key.support();
        ClassificationKeys { z_key, cusp, scusp }
    }

    /// Whether `m` and `m'` define the same irreducible representation.
    pub fn classify_equal(&self, other: &Multisegment) -> bool {
        self.tower == other.tower && self.sc() == other.sc()
    }

    /// For `m, m'` with `m^- = m'^-`, length-one multisegments `n, n'` with
    /// `m + n = m' + n'`. `None` when the truncations differ.
    pub fn balancing_padding(&self, other: &Multisegment) -> Option<(Multisegment, Multisegment)> {
        if self.tower != other.tower || self.minus() != other.minus() {
            return None;
        }
        let mut pad_self = Self::zero(self.tower);
        let mut pad_other = Self::zero(self.tower);
        let keys: BTreeSet<Segment> = self.ledger.keys().chain(other.ledger.keys()).copied().collect();
        for s in keys {
            let (a, b) = (self.multiplicity(&s), other.multiplicity(&s));
            if a == b {
                continue;
            }
            if s.len() != 1 {
                return None;
            }
            if a < b {
                pad_self.insert(s, b - a);
            } else {
                pad_other.insert(s, a - b);
            }
        }
        let lhs = self.add(&pad_self).ok()?;
        let rhs = other.add(&pad_other).ok()?;
        (lhs == rhs).then_some((pad_self, pad_other))
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ledger.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, m)) in self.ledger.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m > 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl PartialOrd for Multisegment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by tower parameters, then by ledger in canonical segment order.
impl Ord for Multisegment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |m: &Multisegment| (m.tower.o0(), m.tower.ell(), m.tower.is_dual(), m.tower.base().degree());
        key(self)
            .cmp(&key(other))
            .then_with(|| self.ledger.iter().cmp(other.ledger.iter()))
    }
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct OrdMult(Multisegment);
