//! Irreducible semigroups with a prescribed Frobenius element, and `EI(k)`.
//!
//! `S` is symmetric with Frobenius element `k` exactly when its gaps lie in
//! `I_C(k)` and every pair `{x, k - x}` of the interval holds exactly one
//! gap. The pseudo-symmetric case is the same with the fixed point `k/2`
//! forced to be a gap. The enumeration walks the pairs and keeps partial
//! assignments that can still be closed under addition.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::{CSemigroup, Cone, Error, Result, TermOrder, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IrreducibleKind {
    Symmetric,
    PseudoSymmetric,
}

/// `I_C(k)` split into the pairs `{x, k - x}` with `x ≠ k - x`, plus the
/// fixed point `k/2` when it is a lattice point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDecomposition {
    /// `(larger, smaller)` in graded-lexicographic order, sorted descending
    /// by the larger member. The first pair is `(k, 0)`.
    pairs: Vec<(Vector, Vector)>,
    fixed_point: Option<Vector>,
}

impl PairDecomposition {
    pub fn new(cone: &Cone, k: &Vector) -> Result<Self> {
        let interval = cone.interval(k)?;
        let grlex = TermOrder::grlex();
        let fixed_point = k.half();
        let mut pairs: Vec<(Vector, Vector)> = interval
            .iter()
            .filter_map(|x| {
                let y = k.checked_sub(x).expect("interval point");
                grlex.gt(x, &y).then_some((*x, y))
            })
            .collect();
        pairs.sort_by(|a, b| grlex.cmp(&b.0, &a.0));
        Ok(PairDecomposition { pairs, fixed_point })
    }

    pub fn pairs(&self) -> &[(Vector, Vector)] {
        &self.pairs
    }

    pub fn fixed_point(&self) -> Option<Vector> {
        self.fixed_point
    }

    /// `|I_C(k)|`.
    pub fn interval_len(&self) -> usize {
        2 * self.pairs.len() + usize::from(self.fixed_point.is_some())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Outside,
    Open,
    Gap,
    Member,
}

/// Assignment state over the box `[0, k]`.
struct Board {
    k: Vector,
    strides: [usize; 3],
    cells: Vec<Cell>,
    members: Vec<Vector>,
}

impl Board {
    fn new(cone: &Cone, k: &Vector) -> Self {
        let d = k.dim();
        let mut strides = [0usize; 3];
        let mut acc = 1;
        for (i, s) in strides.iter_mut().enumerate().take(d) {
            *s = acc;
            acc *= k.get(i) as usize + 1;
        }
        let mut cells = vec![Cell::Outside; acc];
        let mut board = Board { k: *k, strides, cells: Vec::new(), members: Vec::new() };
        for x in cone.interval_unchecked(k) {
            cells[board.index(&x)] = Cell::Open;
        }
        board.cells = cells;
        board
    }

    fn index(&self, x: &Vector) -> usize {
        (0..x.dim()).map(|i| x.get(i) as usize * self.strides[i]).sum()
    }

    fn get(&self, x: &Vector) -> Cell {
        if x.le_componentwise(&self.k) {
            self.cells[self.index(x)]
        } else {
            Cell::Outside
        }
    }

    fn set(&mut self, x: &Vector, c: Cell) {
        let i = self.index(x);
        self.cells[i] = c;
        if c == Cell::Member && !x.is_zero() {
            self.members.push(*x);
        }
    }

    fn clear(&mut self, x: &Vector) {
        if self.get(x) == Cell::Member && !x.is_zero() {
            let pos = self.members.iter().rposition(|m| m == x).expect("tracked member");
            self.members.swap_remove(pos);
        }
        let i = self.index(x);
        self.cells[i] = Cell::Open;
    }

    /// A gap `h` is untenable once it splits as two assigned members.
    fn gap_conflicts(&self, h: &Vector) -> bool {
        self.members.iter().any(|a| h.checked_sub(a).is_some_and(|b| !b.is_zero() && self.get(&b) == Cell::Member))
    }

    /// A member `x` is untenable once `x + y` is an assigned gap for an
    /// assigned member `y` (including `y = x`).
    fn member_conflicts(&self, x: &Vector) -> bool {
        self.get(&(*x + *x)) == Cell::Gap || self.members.iter().any(|y| self.get(&(*x + *y)) == Cell::Gap)
    }
}

/// All symmetric or pseudo-symmetric `C`-semigroups with Frobenius element
/// `k`, sorted canonically.
pub fn enumerate_irreducible(cone: &Arc<Cone>, k: &Vector, kind: IrreducibleKind) -> Result<Vec<CSemigroup>> {
    if !cone.contains(k)? {
        return Err(Error::NotInCone(*k));
    }
    if k.is_zero() {
        return Err(Error::KZero);
    }
    let pd = PairDecomposition::new(cone, k)?;
    let want_fixed = kind == IrreducibleKind::PseudoSymmetric;
    if want_fixed != pd.fixed_point.is_some() {
        return Err(Error::ParityMismatch);
    }

    let mut board = Board::new(cone, k);
    board.set(&Vector::zero(k.dim()), Cell::Member);
    board.set(k, Cell::Gap);
    let mut gaps = vec![*k];
    if let Some(h) = pd.fixed_point {
        // k/2 + k/2 = k is harmless: both summands are gaps
        board.set(&h, Cell::Gap);
        gaps.push(h);
    }
    let mut out = Vec::new();
    search(cone, &pd.pairs[1..], &mut board, &mut gaps, &mut out);
    out.sort();
    Ok(out)
}

fn search(
    cone: &Arc<Cone>,
    pairs: &[(Vector, Vector)],
    board: &mut Board,
    gaps: &mut Vec<Vector>,
    out: &mut Vec<CSemigroup>,
) {
    let Some(((big, small), rest)) = pairs.split_first() else {
        if let Ok(s) = CSemigroup::from_gaps(cone.clone(), gaps) {
            out.push(s);
        }
        return;
    };
    for (gap, member) in [(big, small), (small, big)] {
        board.set(gap, Cell::Gap);
        if !board.gap_conflicts(gap) {
            board.set(member, Cell::Member);
            if !board.member_conflicts(member) {
                gaps.push(*gap);
                search(cone, rest, board, gaps, out);
                gaps.pop();
            }
            board.clear(member);
        }
        board.clear(gap);
    }
}

/// Roots of `P(k)` together with the extensions of irreducibles that turned
/// out not to be primary positioned: odd-parity candidates failing
/// `k/2 ∈ C(S)`, and the whole cone when `k` is an atom.
#[derive(Clone, Debug, Default)]
pub struct EiReport {
    pub accepted: Vec<CSemigroup>,
    pub rejected: Vec<CSemigroup>,
}

/// `EI(k)`: the roots of the forest `P(k)`, sorted canonically.
pub fn ei_set(cone: &Arc<Cone>, k: &Vector) -> Result<Vec<CSemigroup>> {
    Ok(ei_report(cone, k)?.accepted)
}

/// [`ei_set`] together with the candidates it filtered out.
pub fn ei_report(cone: &Arc<Cone>, k: &Vector) -> Result<EiReport> {
    if !cone.contains(k)? {
        return Err(Error::NotInCone(*k));
    }
    if k.is_zero() {
        return Ok(EiReport { accepted: vec![CSemigroup::whole(cone.clone())], rejected: Vec::new() });
    }
    let n = cone.interval_unchecked(k).len();
    let mut report = EiReport::default();
    match k.half().filter(|_| n % 2 == 1) {
        None => {
            for t in enumerate_irreducible(cone, k, IrreducibleKind::Symmetric)? {
                let gaps: Vec<Vector> = t.gaps().iter().filter(|g| *g != k).copied().collect();
                let s = CSemigroup::from_valid_gaps(cone.clone(), gaps);
                // |I_C(k)| = 2 leaves S = C, which is never primary for k ≠ 0
                if s.is_whole_cone() {
                    report.rejected.push(s);
                } else {
                    report.accepted.push(s);
                }
            }
        }
        Some(half) => {
            for t in enumerate_irreducible(cone, k, IrreducibleKind::PseudoSymmetric)? {
                let gaps = t.gaps().iter().filter(|g| **g != *k && **g != half).copied().collect();
                let s = CSemigroup::from_valid_gaps(cone.clone(), gaps);
                if s.c_set().contains(&half) {
                    report.accepted.push(s);
                } else {
                    report.rejected.push(s);
                }
            }
        }
    }
    for s in &report.accepted {
        if !s.primary_unchecked(k, n) {
            return Err(Error::InternalInconsistency(format!("root {s:?} is not primary positioned")));
        }
    }
    Ok(report)
}
