//! Brute-force ground truth for `P(k)`.
//!
//! A `k`-positioned semigroup has all of its gaps in `I_C(k)`, so `P(k)` is
//! found by looking at every semigroup whose gap set is a subset of
//! `I_C(k) \ {0}`. Gap sets are bitmasks over the points of the interval, and
//! closure, minimal generators and the primary positioned count are all
//! evaluated on the masks through a table of sums inside the interval. None
//! of the set computations of [`CSemigroup`] are used.
//!
//! Two enumerations are available: a duplicate-free tree that adds gaps in
//! increasing graded-lexicographic order, each new gap being a minimal
//! generator of the current semigroup, and a filter over every subset for
//! small intervals.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::{CSemigroup, Cone, Error, Forest, Result, TermOrder, Vector};

/// Default bound on `|I_C(k)|`.
pub const DEFAULT_CAP: usize = 20;
/// Largest interval the subset filter accepts.
pub const SUBSET_CAP: usize = 12;
/// Hard limit from the mask width.
pub const MAX_CAP: usize = 64;

type Mask = u64;

/// The interval `I_C(k)` with index 0 at the origin and points ascending in
/// graded-lexicographic order.
struct Frame {
    pts: Vec<Vector>,
    /// `decomp[x]`: index pairs `(i, j)`, both nonzero, with `p_i + p_j = p_x`.
    decomp: Vec<Vec<(u8, u8)>>,
    /// `below[x]`: every `y` with `p_y ≤_C p_x`.
    below: Vec<Mask>,
    /// `mirror[x]`: index of `k - p_x`.
    mirror: Vec<usize>,
    half: Option<usize>,
}

impl Frame {
    fn new(cone: &Cone, k: &Vector, cap: usize) -> Result<Self> {
        let pts = cone.interval(k)?;
        let n = pts.len();
        if n > cap.min(MAX_CAP) {
            return Err(Error::CapExceeded { size: n, cap: cap.min(MAX_CAP) });
        }
        let index: BTreeMap<Vector, usize> = pts.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut decomp = vec![Vec::new(); n];
        let mut below = vec![0 as Mask; n];
        let mut mirror = vec![0; n];
        for (x, px) in pts.iter().enumerate() {
            mirror[x] = index[&k.checked_sub(px).expect("interval point")];
            for (i, pi) in pts.iter().enumerate() {
                let Some(j) = px.checked_sub(pi).and_then(|d| index.get(&d)) else { continue };
                // p_x - p_i lies in the interval exactly when p_i ≤_C p_x
                below[x] |= 1 << i;
                if i != 0 && *j != 0 {
                    decomp[x].push((i as u8, *j as u8));
                }
            }
        }
        let half = k.half().and_then(|h| index.get(&h).copied());
        Ok(Frame { pts, decomp, below, mirror, half })
    }

    fn len(&self) -> usize {
        self.pts.len()
    }

    fn decomposes(&self, gaps: Mask, x: usize) -> bool {
        self.decomp[x].iter().any(|&(i, j)| gaps >> i & 1 == 0 && gaps >> j & 1 == 0)
    }

    fn is_closed(&self, gaps: Mask) -> bool {
        (1..self.len()).all(|h| gaps >> h & 1 == 0 || !self.decomposes(gaps, h))
    }

    fn gap_iter(&self, gaps: Mask) -> impl Iterator<Item = usize> + '_ {
        (1..self.len()).filter(move |h| gaps >> h & 1 == 1)
    }

    fn c_mask(&self, gaps: Mask) -> Mask {
        self.gap_iter(gaps).fold(0, |acc, h| acc | self.below[h])
    }

    fn is_primary(&self, gaps: Mask) -> bool {
        let k = self.len() - 1;
        if gaps >> k & 1 == 1 {
            return false;
        }
        if self.gap_iter(gaps).any(|h| gaps >> self.mirror[h] & 1 == 1) {
            return false;
        }
        let m = 1 + self.gap_iter(gaps).filter(|&h| self.below[h] & !1 & !gaps == 0).count();
        let c = self.c_mask(gaps).count_ones() as usize;
        m + c == self.len()
    }

    /// `β` from the definition of `B(S)`, read off the masks.
    fn beta(&self, gaps: Mask, order: &TermOrder) -> Option<Vector> {
        let c = self.c_mask(gaps);
        let b: Vec<Vector> = (1..self.len())
            .filter(|&x| {
                gaps >> x & 1 == 0
                    && !self.decomposes(gaps, x)
                    && c >> x & 1 == 1
                    && self.below[x] & !1 & !(1 << x) & !gaps != 0
                    && gaps >> self.mirror[x] & 1 == 0
                    && Some(x) != self.half
            })
            .map(|x| self.pts[x])
            .collect();
        order.max_of(&b).ok()
    }

    fn semigroup(&self, cone: &Arc<Cone>, gaps: Mask) -> Result<CSemigroup> {
        let g: Vec<Vector> = self.gap_iter(gaps).map(|h| self.pts[h]).collect();
        CSemigroup::from_gaps(cone.clone(), &g)
    }

    /// Canonical-path enumeration of closed gap masks.
    fn tree_masks(&self) -> Vec<Mask> {
        let mut out = Vec::new();
        let mut stack: Vec<(Mask, usize)> = vec![(0, 0)];
        while let Some((gaps, last)) = stack.pop() {
            out.push(gaps);
            for g in (last + 1..self.len()).rev() {
                if gaps >> g & 1 == 0 && !self.decomposes(gaps, g) {
                    stack.push((gaps | 1 << g, g));
                }
            }
        }
        out
    }

    fn subset_masks(&self) -> Vec<Mask> {
        let n = self.len();
        (0..(1 as Mask) << (n - 1)).map(|m| m << 1).filter(|&m| self.is_closed(m)).collect()
    }
}

fn to_semigroups(frame: &Frame, cone: &Arc<Cone>, masks: Vec<Mask>) -> Result<Vec<CSemigroup>> {
    let mut out = masks.into_iter().map(|m| frame.semigroup(cone, m)).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Every `C`-semigroup with gaps inside `I_C(k) \ {0}`, sorted canonically.
pub fn enumerate_all(cone: &Arc<Cone>, k: &Vector, cap: usize) -> Result<Vec<CSemigroup>> {
    let frame = Frame::new(cone, k, cap)?;
    to_semigroups(&frame, cone, frame.tree_masks())
}

/// The same family by testing every subset of `I_C(k) \ {0}`; limited to
/// [`SUBSET_CAP`] points.
pub fn enumerate_by_subsets(cone: &Arc<Cone>, k: &Vector) -> Result<Vec<CSemigroup>> {
    let frame = Frame::new(cone, k, SUBSET_CAP)?;
    to_semigroups(&frame, cone, frame.subset_masks())
}

/// `P(k)` by exhaustion, sorted canonically.
pub fn oracle_primary_set(cone: &Arc<Cone>, k: &Vector, cap: usize) -> Result<Vec<CSemigroup>> {
    Ok(oracle_primary_with_beta(cone, k, &TermOrder::grlex(), cap)?.into_iter().map(|(s, _)| s).collect())
}

/// `P(k)` with `β` under `order` for each member (`None` when `B(S)` is
/// empty).
pub fn oracle_primary_with_beta(
    cone: &Arc<Cone>,
    k: &Vector,
    order: &TermOrder,
    cap: usize,
) -> Result<Vec<(CSemigroup, Option<Vector>)>> {
    let frame = Frame::new(cone, k, cap)?;
    let mut out = frame
        .tree_masks()
        .into_iter()
        .filter(|&m| frame.is_primary(m))
        .map(|m| Ok((frame.semigroup(cone, m)?, frame.beta(m, order))))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BetaMismatch {
    pub gaps: Vec<Vector>,
    pub forest: Option<Vector>,
    pub oracle: Option<Vector>,
}

/// Difference between a forest and the oracle. Gap lists are canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Comparison {
    /// In the oracle's `P(k)` but not in the forest.
    pub missing: Vec<Vec<Vector>>,
    /// In the forest but not primary positioned according to the oracle.
    pub extra: Vec<Vec<Vector>>,
    pub beta_mismatches: Vec<BetaMismatch>,
}

impl Comparison {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.beta_mismatches.is_empty()
    }
}

/// Compares an already built forest with the oracle.
pub fn compare_forest(forest: &Forest, cap: usize) -> Result<Comparison> {
    let oracle: BTreeMap<Vec<Vector>, Option<Vector>> =
        oracle_primary_with_beta(forest.cone(), &forest.k(), forest.order(), cap)?
            .into_iter()
            .map(|(s, b)| (s.gaps().to_vec(), b))
            .collect();
    let mut built: BTreeMap<Vec<Vector>, Option<Vector>> = BTreeMap::new();
    for t in forest.trees() {
        for n in t.nodes() {
            built.insert(n.semigroup.gaps().to_vec(), n.beta);
        }
    }
    let mut report = Comparison::default();
    for (gaps, beta) in &oracle {
        match built.get(gaps) {
            None => report.missing.push(gaps.clone()),
            Some(b) if b != beta => {
                report.beta_mismatches.push(BetaMismatch { gaps: gaps.clone(), forest: *b, oracle: *beta })
            }
            Some(_) => {}
        }
    }
    report.extra = built.keys().filter(|g| !oracle.contains_key(*g)).cloned().collect();
    Ok(report)
}

/// Builds the forest for `k` and compares it with the oracle.
pub fn compare(cone: &Arc<Cone>, k: &Vector, order: &TermOrder, cap: usize) -> Result<Comparison> {
    let size = cone.interval(k)?.len();
    if size > cap.min(MAX_CAP) {
        return Err(Error::CapExceeded { size, cap: cap.min(MAX_CAP) });
    }
    compare_forest(&crate::forest::build_forest(cone, k, order)?, cap)
}
