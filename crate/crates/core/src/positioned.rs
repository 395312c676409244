//! `k`-positioned and primary positioned semigroups.
//!
//! `S` is `k`-positioned when `k - h ∈ S` for every gap `h`, and primary
//! positioned for `k` when moreover `|M(S)| + |C(S)| = |I_C(k)|`. The set of
//! such semigroups is written `P(k)`.
//!
//! For `k`-positioned `S` with `k ∈ S \ {0}` the interval splits as
//! `I_C(k) = H ⊔ (k - H) ⊔ {x ∈ S : k - x ∈ S}`, so
//! `|I_C(k)| = 2 g(S) + 2 + e` where `e` counts the ordered expressions
//! `k = a + b` with `a, b ∈ S \ {0}`. [`CSemigroup::classify`] reads both the
//! genus and `e` and fails loudly if they disagree.

use alloc::format;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::{CSemigroup, Error, Result, TermOrder, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    /// `k` is a minimal generator; `S \ {k}` is symmetric.
    Uesy,
    /// `k` has a single expression `k/2 + k/2`; `S \ {k/2, k}` is
    /// pseudo-symmetric.
    Pepsy,
    Other,
}

impl Class {
    pub fn as_str(&self) -> &'static str {
        match self {
            Class::Uesy => "UESY",
            Class::Pepsy => "PEPSY",
            Class::Other => "OTHER",
        }
    }
}

impl core::fmt::Display for Class {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl CSemigroup {
    fn check_k(&self, k: &Vector) -> Result<()> {
        if !self.cone().contains(k)? {
            return Err(Error::NotInCone(*k));
        }
        Ok(())
    }

    pub fn is_k_positioned(&self, k: &Vector) -> Result<bool> {
        self.check_k(k)?;
        Ok(self.positioned_unchecked(k))
    }

    pub(crate) fn positioned_unchecked(&self, k: &Vector) -> bool {
        self.gaps().iter().all(|h| self.diff_in(k, h))
    }

    pub fn is_primary_positioned(&self, k: &Vector) -> Result<bool> {
        self.check_k(k)?;
        Ok(self.primary_unchecked(k, self.cone().interval_unchecked(k).len()))
    }

    /// `interval_len` must be `|I_C(k)|`.
    pub(crate) fn primary_unchecked(&self, k: &Vector, interval_len: usize) -> bool {
        self.positioned_unchecked(k) && self.m_set().len() + self.c_set().len() == interval_len
    }

    /// Every `k` for which `S` is primary positioned, ascending in
    /// graded-lexicographic order.
    ///
    /// Writing `k` as a sum of `n` Hilbert basis elements gives a chain of
    /// `n + 1` distinct points of `I_C(k)`, so `|I_C(k)| = |M| + |C|` forces
    /// `|k|₁ ≤ (|M| + |C| - 1) · max |b|₁` over the basis. The scan covers
    /// that simplex.
    pub fn primary_k_set(&self) -> Vec<Vector> {
        let target = self.m_set().len() + self.c_set().len();
        let step = self.cone().hilbert_basis().iter().map(Vector::degree).max().unwrap_or(1);
        let bound = (target as u64 - 1) * step;
        let side = u32::try_from(bound).expect("degree bound fits in u32");
        let corner = Vector::new(&[side; crate::MAX_DIM][..self.dim()]).expect("valid dimension");
        let maxgaps = self.maximal_gaps();
        let mut out: Vec<Vector> = corner
            .box_points()
            .into_iter()
            .filter(|k| {
                k.degree() <= bound
                    && self.has(k)
                    && maxgaps.iter().all(|h| self.cone().leq(h, k))
                    && self.primary_unchecked(k, self.cone().interval_unchecked(k).len())
            })
            .collect();
        TermOrder::grlex().sort(&mut out);
        out
    }

    fn check_positioned_member(&self, k: &Vector) -> Result<()> {
        self.check_k(k)?;
        if !self.has(k) {
            return Err(Error::PreconditionViolated("k must belong to the semigroup"));
        }
        if !self.positioned_unchecked(k) {
            return Err(Error::PreconditionViolated("semigroup must be k-positioned"));
        }
        Ok(())
    }

    /// `g(S) ≤ (|I_C(k)| - 2) / 2`.
    pub fn genus_bound_holds(&self, k: &Vector) -> Result<bool> {
        self.check_positioned_member(k)?;
        Ok(2 * self.genus() + 2 <= self.cone().interval_unchecked(k).len())
    }

    /// Decides UESY / PEPSY both by the genus count and by the shape of the
    /// expressions of `k`, returning [`Error::InternalInconsistency`] if the
    /// two disagree.
    pub fn classify(&self, k: &Vector) -> Result<Class> {
        self.check_positioned_member(k)?;
        let n = self.cone().interval_unchecked(k).len();
        let g = self.genus();
        let by_genus_uesy = 2 * g + 2 == n;
        let by_genus_pepsy = 2 * g + 3 == n;
        let by_msg = self.is_minimal_generator(k);
        let count = self.expression_count(k)?;
        let by_expression = count == 1 && k.half().is_some_and(|h| self.has(&h));
        if by_genus_uesy != by_msg || by_genus_pepsy != by_expression {
            return Err(Error::InternalInconsistency(format!(
                "k={k} genus={g} |I|={n} msg={by_msg} expressions={count}"
            )));
        }
        Ok(if by_msg {
            Class::Uesy
        } else if by_expression {
            Class::Pepsy
        } else {
            Class::Other
        })
    }
}

/// A semigroup viewed at a fixed `k ∈ S` under a fixed term order, carrying
/// `B(S)`, `β(S)` and `Ψ_k`.
pub struct PositionedContext<'a> {
    s: &'a CSemigroup,
    k: Vector,
    order: TermOrder,
    interval_len: usize,
    b: OnceBox<Vec<Vector>>,
}

impl<'a> PositionedContext<'a> {
    pub fn new(s: &'a CSemigroup, k: Vector, order: TermOrder) -> Result<Self> {
        if !s.contains(&k)? {
            return Err(Error::NotInSemigroup(k));
        }
        let interval_len = s.cone().interval_unchecked(&k).len();
        Ok(Self::with_interval_len(s, k, order, interval_len))
    }

    pub(crate) fn with_interval_len(s: &'a CSemigroup, k: Vector, order: TermOrder, interval_len: usize) -> Self {
        PositionedContext { s, k, order, interval_len, b: OnceBox::new() }
    }

    pub fn semigroup(&self) -> &'a CSemigroup {
        self.s
    }

    pub fn k(&self) -> Vector {
        self.k
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// `|I_C(k)|`.
    pub fn interval_len(&self) -> usize {
        self.interval_len
    }

    pub fn is_primary(&self) -> bool {
        self.s.primary_unchecked(&self.k, self.interval_len)
    }

    /// `B(S)`: minimal generators `x ∈ C(S) \ Minimals(S \ {0})` with
    /// `k - x ∈ S` and `x ≠ k/2`. Ascending in graded-lexicographic order.
    pub fn b_set(&self) -> &[Vector] {
        self.b.get_or_init(|| {
            let s = self.s;
            let c = s.c_set();
            let mins = s.minimals_nonzero();
            let half = self.k.half();
            alloc::boxed::Box::new(
                s.minimal_generators()
                    .iter()
                    .filter(|x| c.contains(x) && !mins.contains(x) && s.diff_in(&self.k, x) && Some(**x) != half)
                    .copied()
                    .collect(),
            )
        })
    }

    /// `β(S) = max_⪯ B(S)`.
    pub fn beta(&self) -> Result<Vector> {
        self.order.max_of(self.b_set()).map_err(|_| Error::EmptyBSet)
    }

    /// `Ψ_k(S) = S \ {β(S)}`, again primary positioned for `k`.
    pub fn psi(&self) -> Result<CSemigroup> {
        if !self.is_primary() {
            return Err(Error::PreconditionViolated("semigroup must be primary positioned for k"));
        }
        let beta = self.beta()?;
        let parent = self.s.remove_generator(&beta)?;
        if !parent.primary_unchecked(&self.k, self.interval_len) {
            return Err(Error::InternalInconsistency(format!("removing {beta} left P(k)")));
        }
        Ok(parent)
    }
}
