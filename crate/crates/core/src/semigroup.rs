//! C-semigroups given by their (finite) gap set.
//!
//! A [`CSemigroup`] is a cone `C` together with the finite set `H(S) = C \ S`.
//! Construction validates closure under addition, after which the value is
//! immutable; derived sets are computed on first use and kept.
//!
//! Intervals below an element are always taken with respect to `≤_C`:
//! `S ∩ I_C(k)` is what [`CSemigroup::unit_interval`] returns, and the
//! relation `|I_C(k)| = g(S) + |S ∩ I_C(k)|` holds whenever every gap lies
//! below `k`.
//!
//! # Minimal generators
//!
//! Let `HB` be the Hilbert basis of `C` and `H` the gap set. Every minimal
//! generator of `S` lies in `HB ∪ (HB + H) ∪ (H + HB + H)`. Indeed, take a
//! minimal generator `s ∉ HB` and a `≤_C`-maximal gap `h` with `h ≤_C s`
//! (one exists because some cone decomposition of `s` has a gap part). If
//! `s - h ∈ HB` we are done. Otherwise `s - h = b + c` with `b ∈ HB` and
//! `c ∈ C \ {0}`. Both `h + b` and `h + c` sit strictly between `h` and `s`,
//! so by maximality of `h` they are in `S`; as `s` is a minimal generator,
//! `s = (h + c) + b` forces `b ∈ H` and `s = (h + b) + c` forces `c ∈ H`.
//! Hence `s ∈ H + HB + H`. Each candidate is then kept exactly when it has no
//! decomposition into two nonzero elements of `S`.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use once_cell::race::OnceBox;

use crate::{Cone, Error, Result, TermOrder, Vector};

#[derive(Default)]
struct Cache {
    msg: OnceBox<Vec<Vector>>,
    pf: OnceBox<Vec<Vector>>,
    sg: OnceBox<Vec<Vector>>,
    maximal_gaps: OnceBox<Vec<Vector>>,
    minimals: OnceBox<Vec<Vector>>,
    m_set: OnceBox<Vec<Vector>>,
    c_set: OnceBox<Vec<Vector>>,
}

pub struct CSemigroup {
    cone: Arc<Cone>,
    /// Sorted ascending in graded-lexicographic order.
    gaps: Vec<Vector>,
    gap_set: BTreeSet<Vector>,
    cache: Cache,
}

impl CSemigroup {
    /// `S = C`.
    pub fn whole(cone: Arc<Cone>) -> Self {
        Self::from_valid_gaps(cone, Vec::new())
    }

    /// Builds and validates `C \ gaps`. Duplicate gaps are ignored.
    pub fn from_gaps(cone: Arc<Cone>, gaps: &[Vector]) -> Result<Self> {
        for g in gaps {
            g.check_dim(cone.dim())?;
            if g.is_zero() {
                return Err(Error::ZeroGap);
            }
            if !cone.has(g) {
                return Err(Error::GapNotInCone(*g));
            }
        }
        let s = Self::from_valid_gaps(cone, gaps.to_vec());
        if let Some((gap, left, right)) = s.closure_violation() {
            return Err(Error::NotClosed { gap, left, right });
        }
        Ok(s)
    }

    /// Skips validation; callers guarantee a closed gap set inside the cone.
    pub(crate) fn from_valid_gaps(cone: Arc<Cone>, mut gaps: Vec<Vector>) -> Self {
        TermOrder::grlex().sort(&mut gaps);
        gaps.dedup();
        let gap_set = gaps.iter().copied().collect();
        CSemigroup { cone, gaps, gap_set, cache: Cache::default() }
    }

    /// First decomposition `h = x + (h - x)` of a gap into two elements of
    /// `S`, scanning gaps and then `x` in graded-lexicographic order.
    fn closure_violation(&self) -> Option<(Vector, Vector, Vector)> {
        for h in &self.gaps {
            for x in self.cone.interval_unchecked(h) {
                if x.is_zero() || x == *h {
                    continue;
                }
                let y = h.checked_sub(&x).expect("interval point");
                if !self.is_gap(&x) && !self.is_gap(&y) {
                    return Some((*h, x, y));
                }
            }
        }
        None
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn cone_arc(&self) -> &Arc<Cone> {
        &self.cone
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    /// The gap set, ascending in graded-lexicographic order.
    pub fn gaps(&self) -> &[Vector] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_whole_cone(&self) -> bool {
        self.gaps.is_empty()
    }

    #[inline]
    pub fn is_gap(&self, x: &Vector) -> bool {
        self.gap_set.contains(x)
    }

    pub fn contains(&self, x: &Vector) -> Result<bool> {
        x.check_dim(self.dim())?;
        Ok(self.has(x))
    }

    /// Membership without the dimension check.
    #[inline]
    pub fn has(&self, x: &Vector) -> bool {
        self.cone.has(x) && !self.is_gap(x)
    }

    /// `y - x ∈ S`.
    #[inline]
    pub(crate) fn diff_in(&self, y: &Vector, x: &Vector) -> bool {
        y.checked_sub(x).is_some_and(|d| self.has(&d))
    }

    /// `F_⪯(S)`, or `None` for `S = C`.
    pub fn frobenius(&self, order: &TermOrder) -> Option<Vector> {
        order.max_of(&self.gaps).ok()
    }

    /// Whether `x` is a sum of two nonzero elements of `S`.
    pub fn decomposes(&self, x: &Vector) -> bool {
        x.box_points().iter().any(|a| !a.is_zero() && a != x && self.has(a) && self.diff_in(x, a))
    }

    /// `msg(S)`, ascending in graded-lexicographic order.
    pub fn minimal_generators(&self) -> &[Vector] {
        self.cache.msg.get_or_init(|| Box::new(self.compute_msg()))
    }

    fn compute_msg(&self) -> Vec<Vector> {
        let hb = self.cone.hilbert_basis();
        let mut candidates: BTreeSet<Vector> = hb.iter().copied().collect();
        for b in hb {
            for h in &self.gaps {
                let bh = *b + *h;
                candidates.insert(bh);
                for h2 in &self.gaps {
                    candidates.insert(bh + *h2);
                }
            }
        }
        let mut out: Vec<Vector> = candidates.into_iter().filter(|s| self.has(s) && !self.decomposes(s)).collect();
        TermOrder::grlex().sort(&mut out);
        out
    }

    pub fn is_minimal_generator(&self, x: &Vector) -> bool {
        self.minimal_generators().contains(x)
    }

    /// `PF(S)`: gaps `x` with `x + (S \ {0}) ⊆ S`.
    pub fn pseudo_frobenius(&self) -> &[Vector] {
        self.cache.pf.get_or_init(|| {
            // h + s lands on a gap g exactly when g - h ∈ S \ {0}
            Box::new(
                self.gaps
                    .iter()
                    .filter(|h| {
                        !self.gaps.iter().any(|g| g.checked_sub(h).is_some_and(|d| !d.is_zero() && self.has(&d)))
                    })
                    .copied()
                    .collect(),
            )
        })
    }

    /// `SG(S)`: pseudo-Frobenius elements `x` with `2x ∈ S`; exactly the gaps
    /// whose insertion leaves a semigroup.
    pub fn special_gaps(&self) -> &[Vector] {
        self.cache.sg.get_or_init(|| {
            Box::new(self.pseudo_frobenius().iter().filter(|x| self.has(&x.scale(2))).copied().collect())
        })
    }

    pub fn is_special_gap(&self, x: &Vector) -> bool {
        self.special_gaps().contains(x)
    }

    /// `PF(S) = {F}`.
    pub fn is_symmetric(&self, order: &TermOrder) -> bool {
        match self.frobenius(order) {
            Some(f) => self.pseudo_frobenius() == [f],
            None => false,
        }
    }

    /// `PF(S) = {F, F/2}`.
    pub fn is_pseudo_symmetric(&self, order: &TermOrder) -> bool {
        let Some(f) = self.frobenius(order) else { return false };
        let Some(half) = f.half() else { return false };
        let pf = self.pseudo_frobenius();
        pf.len() == 2 && pf.contains(&f) && pf.contains(&half)
    }

    pub fn is_irreducible(&self, order: &TermOrder) -> bool {
        self.is_symmetric(order) || self.is_pseudo_symmetric(order)
    }

    /// Symmetry through the gap count: `g(S) = |S ∩ I_C(F)|`.
    pub fn symmetric_by_genus(&self, order: &TermOrder) -> bool {
        let Some(f) = self.frobenius(order) else { return false };
        self.genus() == self.unit_interval_unchecked(&f).len()
    }

    /// Symmetry through reflection: `F - h ∈ S` for every gap `h`.
    pub fn symmetric_by_reflection(&self, order: &TermOrder) -> bool {
        let Some(f) = self.frobenius(order) else { return false };
        self.gaps.iter().all(|h| self.diff_in(&f, h))
    }

    /// `g(S) = 1 + |S ∩ I_C(F)|` with `F/2` a lattice point.
    pub fn pseudo_symmetric_by_genus(&self, order: &TermOrder) -> bool {
        let Some(f) = self.frobenius(order) else { return false };
        f.half().is_some() && self.genus() == 1 + self.unit_interval_unchecked(&f).len()
    }

    /// `F - h ∈ S` for every gap `h ≠ F/2`, with `F/2` a lattice point.
    pub fn pseudo_symmetric_by_reflection(&self, order: &TermOrder) -> bool {
        let Some(f) = self.frobenius(order) else { return false };
        let Some(half) = f.half() else { return false };
        self.gaps.iter().filter(|h| **h != half).all(|h| self.diff_in(&f, h))
    }

    /// `S ∩ I_C(k)`, the elements of `S` below `k` in `≤_C`.
    pub fn unit_interval(&self, k: &Vector) -> Result<Vec<Vector>> {
        if !self.cone.contains(k)? {
            return Err(Error::NotInCone(*k));
        }
        Ok(self.unit_interval_unchecked(k))
    }

    fn unit_interval_unchecked(&self, k: &Vector) -> Vec<Vector> {
        self.cone.interval_unchecked(k).into_iter().filter(|x| !self.is_gap(x)).collect()
    }

    /// `{x ∈ S : k - x ∈ S}`, the lower set of `k` for `≤_S`. Empty when `k`
    /// is a gap.
    pub fn divisor_interval(&self, k: &Vector) -> Result<Vec<Vector>> {
        if !self.cone.contains(k)? {
            return Err(Error::NotInCone(*k));
        }
        Ok(self.cone.interval_unchecked(k).into_iter().filter(|x| self.has(x) && self.diff_in(k, x)).collect())
    }

    /// `Maximals_{≤_C}(H(S))`.
    pub fn maximal_gaps(&self) -> &[Vector] {
        self.cache.maximal_gaps.get_or_init(|| Box::new(self.cone.maximals_in(&self.gaps)))
    }

    /// `Minimals_{≤_C}(S \ {0})`: minimal generators with only gaps strictly
    /// below them.
    pub fn minimals_nonzero(&self) -> &[Vector] {
        self.cache.minimals.get_or_init(|| {
            Box::new(self.minimal_generators().iter().filter(|s| self.only_gaps_below(s)).copied().collect())
        })
    }

    fn only_gaps_below(&self, x: &Vector) -> bool {
        self.cone.interval_unchecked(x).iter().all(|y| y.is_zero() || y == x || self.is_gap(y))
    }

    /// `M(S)`: `0` together with the gaps that have no nonzero element of
    /// `S` below them. Ascending in graded-lexicographic order.
    pub fn m_set(&self) -> &[Vector] {
        self.cache.m_set.get_or_init(|| {
            let mut out = Vec::with_capacity(self.gaps.len() + 1);
            out.push(Vector::zero(self.dim()));
            out.extend(self.gaps.iter().filter(|h| self.only_gaps_below(h)).copied());
            Box::new(out)
        })
    }

    /// `C(S)`: cone elements below some gap. Ascending in graded-lexicographic
    /// order.
    pub fn c_set(&self) -> &[Vector] {
        self.cache.c_set.get_or_init(|| {
            let mut set = BTreeSet::new();
            for h in self.maximal_gaps() {
                set.extend(self.cone.interval_unchecked(h));
            }
            let mut out: Vec<Vector> = set.into_iter().collect();
            TermOrder::grlex().sort(&mut out);
            Box::new(out)
        })
    }

    /// Minimal elements of `X_S = {x ∈ C : h ≤_C x for every gap h}`.
    ///
    /// The search box is `[0, σ]` with `σ` the sum of the maximal gaps and
    /// the Hilbert basis. In dimension at most two (where every cone is
    /// simplicial) this box provably contains all minimal elements. In
    /// dimension three the search is repeated in `[0, 2σ]` and
    /// [`Error::BoundUncertain`] is returned if the answers differ.
    pub fn x_minimals(&self) -> Result<Vec<Vector>> {
        if self.gaps.is_empty() {
            return Err(Error::NoGaps);
        }
        let maxgaps = self.maximal_gaps();
        let zero = Vector::zero(self.dim());
        let sigma = maxgaps.iter().chain(self.cone.hilbert_basis()).fold(zero, |a, b| a + *b);
        let found = self.x_minimals_in_box(&sigma);
        if self.dim() == 3 && self.x_minimals_in_box(&sigma.scale(2)) != found {
            return Err(Error::BoundUncertain);
        }
        Ok(found)
    }

    fn x_minimals_in_box(&self, bound: &Vector) -> Vec<Vector> {
        let maxgaps = self.maximal_gaps();
        let members: Vec<Vector> = bound
            .box_points()
            .into_iter()
            .filter(|x| self.cone.has(x) && maxgaps.iter().all(|h| self.cone.leq(h, x)))
            .collect();
        let mut out = self.cone.minimals_in(&members);
        TermOrder::grlex().sort(&mut out);
        out
    }

    /// `S ∪ {x}` for a special gap `x`.
    pub fn add_element(&self, x: &Vector) -> Result<Self> {
        if !self.is_special_gap(x) {
            return Err(Error::NotSpecialGap(*x));
        }
        let gaps = self.gaps.iter().filter(|g| *g != x).copied().collect();
        Ok(Self::from_valid_gaps(self.cone.clone(), gaps))
    }

    /// `S \ {x}` for a minimal generator `x`.
    pub fn remove_generator(&self, x: &Vector) -> Result<Self> {
        if !self.is_minimal_generator(x) {
            return Err(Error::NotMinimalGenerator(*x));
        }
        let mut gaps = self.gaps.clone();
        gaps.push(*x);
        Ok(Self::from_valid_gaps(self.cone.clone(), gaps))
    }

    /// Number of ordered pairs `(a, b)` of nonzero elements of `S` with
    /// `a + b = x`.
    pub fn expression_count(&self, x: &Vector) -> Result<usize> {
        if !self.contains(x)? {
            return Err(Error::NotInSemigroup(*x));
        }
        Ok(x.box_points().iter().filter(|a| !a.is_zero() && *a != x && self.has(a) && self.diff_in(x, a)).count())
    }

    /// At most one ordered pair of nonzero elements of `S` sums to `x`. A
    /// minimal generator (no pair at all) qualifies.
    pub fn unique_expression(&self, x: &Vector) -> Result<bool> {
        Ok(self.expression_count(x)? <= 1)
    }
}

impl Clone for CSemigroup {
    fn clone(&self) -> Self {
        CSemigroup {
            cone: self.cone.clone(),
            gaps: self.gaps.clone(),
            gap_set: self.gap_set.clone(),
            cache: Cache::default(),
        }
    }
}

impl PartialEq for CSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gaps == other.gaps && (Arc::ptr_eq(&self.cone, &other.cone) || self.cone == other.cone)
    }
}

impl Eq for CSemigroup {}

impl Hash for CSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gaps.hash(state);
    }
}

impl PartialOrd for CSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CSemigroup {
    /// Canonical order: by genus, then by the sorted gap lists.
    fn cmp(&self, other: &Self) -> Ordering {
        let grlex = TermOrder::grlex();
        self.gaps.len().cmp(&other.gaps.len()).then_with(|| {
            for (a, b) in self.gaps.iter().zip(&other.gaps) {
                let o = grlex.cmp(a, b);
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Debug for CSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CSemigroup(gaps={:?})", self.gaps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::v;
    use alloc::vec;

    fn n2() -> Arc<Cone> {
        Arc::new(Cone::orthant(2).unwrap())
    }

    fn vs(xs: &[[u32; 2]]) -> Vec<Vector> {
        xs.iter().map(|x| v(x)).collect()
    }

    fn sorted(mut xs: Vec<Vector>) -> Vec<Vector> {
        xs.sort();
        xs
    }

    fn skew() -> CSemigroup {
        let c = Arc::new(Cone::new(2, &[v(&[4, 1]), v(&[5, 3])]).unwrap());
        CSemigroup::from_gaps(c, &vs(&[[2, 1], [3, 1], [6, 2], [6, 3], [7, 2]])).unwrap()
    }

    fn not_symmetric_gns() -> CSemigroup {
        CSemigroup::from_gaps(n2(), &vs(&[[0, 1], [0, 3], [1, 0], [1, 1], [1, 2], [1, 3], [2, 0], [2, 1], [4, 1]]))
            .unwrap()
    }

    #[rustfmt::skip]
    fn five_four() -> CSemigroup {
        CSemigroup::from_gaps(
            n2(),
            &vs(&[
                [0, 1], [0, 2], [0, 3], [0, 4], [0, 5], [1, 0], [1, 1], [1, 2], [1, 3], [1, 4],
                [1, 5], [2, 2], [2, 3], [2, 4], [2, 5], [3, 0], [3, 3], [3, 4], [4, 5],
            ]),
        )
        .unwrap()
    }

    fn numerical(gaps: &[u32]) -> CSemigroup {
        let c = Arc::new(Cone::orthant(1).unwrap());
        let g: Vec<Vector> = gaps.iter().map(|&x| v(&[x])).collect();
        CSemigroup::from_gaps(c, &g).unwrap()
    }

    #[test]
    fn validation() {
        let s1 = CSemigroup::from_gaps(n2(), &vs(&[[0, 1], [0, 2], [0, 3], [1, 0], [1, 1]])).unwrap();
        assert_eq!(s1.genus(), 5);
        assert_eq!(CSemigroup::from_gaps(n2(), &[]).unwrap().genus(), 0);
        assert_eq!(
            CSemigroup::from_gaps(n2(), &vs(&[[2, 0]])).unwrap_err(),
            Error::NotClosed { gap: v(&[2, 0]), left: v(&[1, 0]), right: v(&[1, 0]) }
        );
        assert_eq!(CSemigroup::from_gaps(n2(), &vs(&[[0, 0]])).unwrap_err(), Error::ZeroGap);
        let c = Arc::new(Cone::new(2, &[v(&[1, 0]), v(&[1, 1])]).unwrap());
        assert_eq!(CSemigroup::from_gaps(c, &vs(&[[0, 1]])).unwrap_err(), Error::GapNotInCone(v(&[0, 1])));
    }

    #[test]
    fn round_trip() {
        let s = five_four();
        let t = CSemigroup::from_gaps(s.cone_arc().clone(), s.gaps()).unwrap();
        assert_eq!(s, t);
        assert_eq!(s.genus(), 19);
    }

    #[test]
    fn frobenius_examples() {
        let s6 = CSemigroup::from_gaps(n2(), &vs(&[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]])).unwrap();
        assert_eq!(s6.frobenius(&TermOrder::grlex()), Some(v(&[1, 3])));
        assert_eq!(CSemigroup::whole(n2()).frobenius(&TermOrder::grlex()), None);
    }

    #[test]
    fn minimal_generators_of_skew_example() {
        let s = skew();
        assert_eq!(
            sorted(s.minimal_generators().to_vec()),
            sorted(vs(&[[4, 1], [4, 2], [5, 2], [5, 3], [7, 3], [7, 4], [10, 3], [11, 3]]))
        );
        assert_eq!(CSemigroup::whole(n2()).minimal_generators(), &vs(&[[0, 1], [1, 0]])[..]);
    }

    #[test]
    #[rustfmt::skip]
    fn minimal_generators_of_nineteen_gap_example() {
        let expected = vs(&[
            [0, 6], [0, 7], [0, 9], [0, 8], [0, 10], [0, 11], [2, 0], [2, 1], [1, 6], [1, 7],
            [3, 1], [1, 8], [3, 2], [1, 9], [1, 10], [1, 11], [3, 5], [4, 3], [4, 4], [5, 0],
            [5, 4],
        ]);
        assert_eq!(sorted(five_four().minimal_generators().to_vec()), sorted(expected));
    }

    // drop-one and regeneration check of msg on a box
    fn generates_exactly(s: &CSemigroup, gens: &[Vector], bound: &Vector) -> bool {
        let pts = bound.box_points();
        let mut reach: BTreeSet<Vector> = BTreeSet::new();
        reach.insert(Vector::zero(s.dim()));
        let mut sorted_pts = pts.clone();
        TermOrder::grlex().sort(&mut sorted_pts);
        for p in &sorted_pts {
            if gens.iter().any(|g| p.checked_sub(g).is_some_and(|r| reach.contains(&r))) {
                reach.insert(*p);
            }
        }
        pts.iter().all(|p| reach.contains(p) == s.has(p))
    }

    #[test]
    fn msg_generates_and_is_minimal() {
        for s in [skew(), five_four(), not_symmetric_gns()] {
            let gens = s.minimal_generators().to_vec();
            let bound = s.x_minimals().unwrap().iter().chain(&gens).fold(Vector::zero(2), |a, b| a.join(b))
                + s.cone().hilbert_basis().iter().fold(Vector::zero(2), |a, b| a + *b);
            assert!(generates_exactly(&s, &gens, &bound));
            for i in 0..gens.len() {
                let mut fewer = gens.clone();
                fewer.remove(i);
                assert!(!generates_exactly(&s, &fewer, &bound));
            }
        }
    }

    #[test]
    fn pseudo_frobenius_examples() {
        let s = not_symmetric_gns();
        assert_eq!(
            sorted(s.pseudo_frobenius().to_vec()),
            sorted(vs(&[[0, 3], [1, 2], [1, 3], [2, 0], [2, 1], [4, 1]]))
        );
        assert!(!s.is_symmetric(&TermOrder::grlex()));
        assert!(CSemigroup::whole(n2()).pseudo_frobenius().is_empty());
        let s1 = CSemigroup::from_gaps(n2(), &vs(&[[0, 1], [0, 2], [0, 3], [1, 0], [1, 1]])).unwrap();
        // brute force over the definition: h + s for s ∈ S\{0} in a box
        let brute: Vec<Vector> = s1
            .gaps()
            .iter()
            .filter(|h| v(&[6, 6]).box_points().iter().all(|s| s.is_zero() || !s1.has(s) || s1.has(&(**h + *s))))
            .copied()
            .collect();
        // every gap qualifies: differences of gaps are gaps
        assert_eq!(brute, s1.gaps());
        assert_eq!(s1.pseudo_frobenius(), s1.gaps());
    }

    #[test]
    fn special_gaps_example() {
        let s = five_four();
        assert_eq!(
            sorted(s.special_gaps().to_vec()),
            sorted(vs(&[[1, 5], [2, 2], [2, 3], [3, 0], [3, 3], [3, 4], [4, 5]]))
        );
        for x in s.special_gaps() {
            let gaps: Vec<Vector> = s.gaps().iter().filter(|g| *g != x).copied().collect();
            assert!(CSemigroup::from_gaps(s.cone_arc().clone(), &gaps).is_ok());
            assert_eq!(s.add_element(x).unwrap().gaps(), gaps.as_slice());
        }
        assert!(CSemigroup::whole(n2()).special_gaps().is_empty());
    }

    #[test]
    fn symmetry_tests() {
        let c = Arc::new(Cone::new(2, &[v(&[1, 0]), v(&[1, 1])]).unwrap());
        let s =
            CSemigroup::from_gaps(c.clone(), &vs(&[[1, 0], [1, 1], [2, 0], [2, 1], [2, 2], [3, 1], [3, 2], [4, 2]]))
                .unwrap();
        for k in [v(&[7, 5]), v(&[7, 2])] {
            let t = s.remove_generator(&k).unwrap();
            for o in [TermOrder::grlex(), TermOrder::lex(), TermOrder::grevlex()] {
                assert!(t.is_symmetric(&o));
                assert!(t.symmetric_by_genus(&o) && t.symmetric_by_reflection(&o));
                assert_eq!(t.frobenius(&o), Some(k));
            }
        }
        let w = CSemigroup::whole(c);
        assert!(!w.is_symmetric(&TermOrder::grlex()) && !w.is_pseudo_symmetric(&TermOrder::grlex()));
    }

    #[test]
    fn pseudo_symmetric_numerical() {
        // <3,4,5>: gaps {1,2}, F = 2, PF = {1,2}
        let s = numerical(&[1, 2]);
        let o = TermOrder::grlex();
        assert!(s.is_pseudo_symmetric(&o) && !s.is_symmetric(&o));
        assert!(s.pseudo_symmetric_by_genus(&o) && s.pseudo_symmetric_by_reflection(&o));
    }

    #[test]
    fn intervals() {
        let s1 = CSemigroup::from_gaps(n2(), &vs(&[[0, 1], [0, 2], [0, 3], [1, 0], [1, 1]])).unwrap();
        assert_eq!(s1.unit_interval(&v(&[0, 0])).unwrap(), [v(&[0, 0])]);
        // direct scan: box [0,(2,3)] minus the five gaps
        assert_eq!(
            sorted(s1.unit_interval(&v(&[2, 3])).unwrap()),
            sorted(vs(&[[0, 0], [1, 2], [1, 3], [2, 0], [2, 1], [2, 2], [2, 3]]))
        );
        // ≤_S lower set of (2,3): x and (2,3) - x both in S
        assert_eq!(sorted(s1.divisor_interval(&v(&[2, 3])).unwrap()), sorted(vs(&[[0, 0], [2, 3]])));
    }

    #[test]
    fn m_and_c_sets() {
        let w = CSemigroup::whole(n2());
        assert_eq!(w.m_set(), &[v(&[0, 0])]);
        assert!(w.c_set().is_empty());
        let ns = numerical(&[1, 2, 4]);
        assert_eq!(ns.m_set().len(), 3);
        assert_eq!(ns.c_set().len(), 5);
        let s1 = CSemigroup::from_gaps(n2(), &vs(&[[0, 1], [0, 2], [0, 3], [1, 0], [1, 1]])).unwrap();
        // M = {0} ∪ H, C = I(0,3) ∪ I(1,1)
        assert_eq!(s1.m_set().len(), 6);
        assert_eq!(s1.c_set().len(), 6);
        assert_eq!(s1.m_set().len() + s1.c_set().len(), 12);
    }

    #[test]
    fn minimals_and_maximals() {
        assert_eq!(CSemigroup::whole(n2()).minimals_nonzero(), &vs(&[[0, 1], [1, 0]])[..]);
        let m = skew().maximal_gaps().to_vec();
        assert!(m.contains(&v(&[6, 3])) && m.contains(&v(&[7, 2])));
    }

    #[test]
    fn x_minimals_examples() {
        assert_eq!(skew().x_minimals().unwrap(), vs(&[[12, 5], [13, 5], [14, 5]]));
        assert_eq!(not_symmetric_gns().x_minimals().unwrap(), vs(&[[4, 3]]));
        assert_eq!(numerical(&[1, 2, 4]).x_minimals().unwrap(), [v(&[4])]);
        assert_eq!(CSemigroup::whole(n2()).x_minimals().unwrap_err(), Error::NoGaps);
    }

    #[test]
    fn add_and_remove() {
        let s = five_four();
        let t = s.add_element(&v(&[2, 2])).unwrap();
        assert_eq!(t.genus(), 18);
        assert_eq!(t.remove_generator(&v(&[2, 2])).unwrap(), s);
        assert_eq!(s.add_element(&v(&[0, 1])).unwrap_err(), Error::NotSpecialGap(v(&[0, 1])));
        assert_eq!(s.remove_generator(&v(&[2, 2])).unwrap_err(), Error::NotMinimalGenerator(v(&[2, 2])));
        let s6 = CSemigroup::from_gaps(n2(), &vs(&[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]])).unwrap();
        let s61 = s6.add_element(&v(&[1, 2])).unwrap();
        assert_eq!(s61.remove_generator(&v(&[1, 2])).unwrap(), s6);
    }

    #[test]
    fn expressions() {
        let w = CSemigroup::whole(n2());
        assert_eq!(w.expression_count(&v(&[2, 0])), Ok(1));
        assert_eq!(w.unique_expression(&v(&[2, 0])), Ok(true));
        assert_eq!(w.unique_expression(&v(&[1, 0])), Ok(true));
        assert_eq!(w.expression_count(&v(&[1, 1])), Ok(2));
        let s = five_four();
        for g in s.minimal_generators() {
            assert_eq!(s.expression_count(g), Ok(0));
        }
        assert_eq!(s.unique_expression(&v(&[0, 1])), Err(Error::NotInSemigroup(v(&[0, 1]))));
    }

    #[test]
    fn chain_of_inclusions() {
        for s in [skew(), five_four(), not_symmetric_gns()] {
            let pf = s.pseudo_frobenius();
            let sg = s.special_gaps();
            assert!(s.maximal_gaps().iter().all(|x| sg.contains(x)));
            assert!(sg.iter().all(|x| pf.contains(x)));
            assert!(s.m_set().len() > 1);
        }
    }

    #[test]
    fn caches_survive_sharing() {
        let s = Arc::new(five_four());
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let s = s.clone();
                std::thread::spawn(move || s.minimal_generators().len())
            })
            .collect();
        let lens: Vec<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(lens, vec![21; 4]);
    }
}
