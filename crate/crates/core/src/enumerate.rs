//! Exhaustive enumeration of multisegments: by support, and by degree on a
//! tower with finite lines.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multisegment::{Multisegment, Support};
use crate::params::{CuspidalLine, Level, Tower};
use crate::segment::Segment;

/// All multisegments with support exactly `support`, in canonical order.
pub fn enumerate_mult(tower: &Tower, support: &Support) -> Result<Vec<Multisegment>> {
    let mut partial = vec![Multisegment::zero(*tower)];
    for level in support.levels() {
        let line = tower.line(level)?;
        let per_level = cover_level(&line, level, &support.on_level(level));
        let mut next = Vec::with_capacity(partial.len() * per_level.len());
        for base in &partial {
            for segs in &per_level {
                let mut m = base.clone();
                for (s, k) in segs {
                    m.insert(*s, *k);
                }
                next.push(m);
            }
        }
        partial = next;
    }
    partial.sort();
    Ok(partial)
}

/// The aperiodic multisegments with the given support.
pub fn enumerate_mult_ap(tower: &Tower, support: &Support) -> Result<Vec<Multisegment>> {
    Ok(enumerate_mult(tower, support)?
        .into_iter()
        .filter(Multisegment::is_aperiodic)
        .collect())
}

fn cover_level(line: &CuspidalLine, level: Level, points: &BTreeMap<i64, u64>) -> Vec<Vec<(Segment, u64)>> {
    let total: u64 = points.values().sum();
    let mut candidates = Vec::new();
    for &start in points.keys() {
        for len in 1..=total as u32 {
            let s = Segment::from_start(line, level, start, len);
            if fits(&s.support(line), points) {
                candidates.push((s, s.support(line)));
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut remaining = points.clone();
    cover_rec(&candidates, 0, &mut remaining, &mut chosen, &mut out);
    out
}

fn fits(support: &BTreeMap<i64, u64>, remaining: &BTreeMap<i64, u64>) -> bool {
    support
        .iter()
        .all(|(c, k)| remaining.get(c).copied().unwrap_or(0) >= *k)
}

fn cover_rec(
    candidates: &[(Segment, BTreeMap<i64, u64>)],
    from: usize,
    remaining: &mut BTreeMap<i64, u64>,
    chosen: &mut Vec<(Segment, u64)>,
    out: &mut Vec<Vec<(Segment, u64)>>,
) {
    let Some((&first, _)) = remaining.iter().find(|(_, m)| **m > 0) else {
        out.push(chosen.clone());
        return;
    };
    // multisets are built as non-decreasing index sequences, so the first
    // uncovered class must be reachable from `from` onwards
    let coverable = candidates[from..]
        .iter()
        .any(|(_, supp)| supp.contains_key(&first) && fits(supp, remaining));
    if !coverable {
        return;
    }
    for idx in from..candidates.len() {
        let (seg, supp) = &candidates[idx];
        if !fits(supp, remaining) {
            continue;
        }
        for (c, k) in supp {
            *remaining.get_mut(c).expect("fits") -= k;
        }
        match chosen.last_mut() {
            Some((s, k)) if s == seg => *k += 1,
            _ => chosen.push((*seg, 1)),
        }
        cover_rec(candidates, idx, remaining, chosen, out);
        match chosen.last_mut() {
            Some((_, k)) if *k > 1 => *k -= 1,
            _ => {
                chosen.pop();
            }
        }
        for (c, k) in supp {
            *remaining.get_mut(c).expect("fits") += k;
        }
    }
}

/// Every nonzero multisegment on `tower` of degree at most `max_degree`.
/// Requires a tower in positive characteristic so the supercuspidal line is
/// finite.
pub fn multisegments_up_to_degree(tower: &Tower, max_degree: u64) -> Result<Vec<Multisegment>> {
    let o0 = tower.o0().finite().ok_or(Error::UnboundedEnumeration)?;
    let mut candidates: Vec<(Segment, u64)> = Vec::new();
    let base_deg = tower.point_degree(Level::Sc);
    for len in 1..=(max_degree / base_deg) as u32 {
        for start in 0..o0 as i64 {
            candidates.push((
                Segment::from_start(tower.base(), Level::Sc, start, len),
                len as u64 * base_deg,
            ));
        }
    }
    let mut r = 0;
    loop {
        let level = Level::Cusp(r);
        let deg = tower.point_degree(level);
        if deg > max_degree {
            break;
        }
        let line = tower.line(level)?;
        for len in 1..=(max_degree / deg) as u32 {
            candidates.push((Segment::from_start(&line, level, 0, len), len as u64 * deg));
        }
        r += 1;
    }
    let mut out = Vec::new();
    let mut current = Multisegment::zero(*tower);
    degree_rec(&candidates, 0, max_degree, &mut current, &mut out);
    out.retain(|m| !m.is_zero());
    out.sort();
    Ok(out)
}

fn degree_rec(
    candidates: &[(Segment, u64)],
    idx: usize,
    budget: u64,
    current: &mut Multisegment,
    out: &mut Vec<Multisegment>,
) {
    let Some(&(seg, deg)) = candidates.get(idx) else {
        out.push(current.clone());
        return;
    };
    let mut k = 0;
    loop {
        let mut next = current.clone();
        next.insert(seg, k);
        degree_rec(candidates, idx + 1, budget - k * deg, &mut next, out);
        k += 1;
        if k * deg > budget {
            break;
        }
    }
}
