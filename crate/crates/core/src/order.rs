//! Term orders on `N^d`.
//!
//! A term order is a total order with `0` as minimum that is compatible with
//! translation. All orders here are determined by linear functionals, so they
//! extend to rational points by scaling: `x ≻ k/2` is decided as `2x ≻ k`.

use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result, Vector, MAX_DIM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
    /// Compare `w · x` first, then break ties with the inner order.
    Weighted {
        weights: [u32; MAX_DIM],
        tie: BaseOrder,
    },
}

/// Orders usable as a tie-break for weighted orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Lex,
    GrLex,
    GrevLex,
}

/// A term order together with a variable ordering. Variable `perm[0]` is the
/// most significant one for the lexicographic parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    perm: [u8; MAX_DIM],
}

const IDENTITY: [u8; MAX_DIM] = [0, 1, 2];

impl Default for TermOrder {
    fn default() -> Self {
        Self::grlex()
    }
}

impl TermOrder {
    pub const fn lex() -> Self {
        TermOrder { kind: OrderKind::Lex, perm: IDENTITY }
    }

    pub const fn grlex() -> Self {
        TermOrder { kind: OrderKind::GrLex, perm: IDENTITY }
    }

    pub const fn grevlex() -> Self {
        TermOrder { kind: OrderKind::GrevLex, perm: IDENTITY }
    }

    /// A weighted order; every weight must be strictly positive so that `0`
    /// stays the minimum.
    pub fn weighted(weights: &[u32], tie: BaseOrder) -> Result<Self> {
        if weights.is_empty() || weights.len() > MAX_DIM {
            return Err(Error::UnsupportedDimension(weights.len()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidWeights);
        }
        let mut w = [0; MAX_DIM];
        w[..weights.len()].copy_from_slice(weights);
        Ok(TermOrder { kind: OrderKind::Weighted { weights: w, tie }, perm: IDENTITY })
    }

    /// Reorder the variables; `perm` must be a permutation of `0..perm.len()`.
    pub fn with_permutation(mut self, perm: &[usize]) -> Result<Self> {
        let mut seen = [false; MAX_DIM];
        if perm.is_empty() || perm.len() > MAX_DIM {
            return Err(Error::UnsupportedDimension(perm.len()));
        }
        for &p in perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::PreconditionViolated("not a permutation"));
            }
            seen[p] = true;
        }
        let mut full = IDENTITY;
        for (i, &p) in perm.iter().enumerate() {
            full[i] = p as u8;
        }
        self.perm = full;
        Ok(self)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Compares two vectors of the same dimension.
    pub fn compare(&self, x: &Vector, y: &Vector) -> Result<Ordering> {
        y.check_dim(x.dim())?;
        Ok(self.cmp(x, y))
    }

    /// Infallible comparison; callers guarantee equal dimensions.
    #[inline]
    pub fn cmp(&self, x: &Vector, y: &Vector) -> Ordering {
        debug_assert_eq!(x.dim(), y.dim());
        match self.kind {
            OrderKind::Lex => self.lex_cmp(x, y),
            OrderKind::GrLex => x.degree().cmp(&y.degree()).then_with(|| self.lex_cmp(x, y)),
            OrderKind::GrevLex => x.degree().cmp(&y.degree()).then_with(|| self.revlex_cmp(x, y)),
            OrderKind::Weighted { weights, tie } => {
                let wx: u64 = weighted(x, &weights);
                let wy: u64 = weighted(y, &weights);
                wx.cmp(&wy).then_with(|| match tie {
                    BaseOrder::Lex => self.lex_cmp(x, y),
                    BaseOrder::GrLex => x.degree().cmp(&y.degree()).then_with(|| self.lex_cmp(x, y)),
                    BaseOrder::GrevLex => x.degree().cmp(&y.degree()).then_with(|| self.revlex_cmp(x, y)),
                })
            }
        }
    }

    fn lex_cmp(&self, x: &Vector, y: &Vector) -> Ordering {
        for &p in &self.perm[..x.dim()] {
            let o = x.get(p as usize).cmp(&y.get(p as usize));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }

    // The vector whose last differing variable is smaller is the larger one.
    fn revlex_cmp(&self, x: &Vector, y: &Vector) -> Ordering {
        for &p in self.perm[..x.dim()].iter().rev() {
            let o = x.get(p as usize).cmp(&y.get(p as usize));
            if o != Ordering::Equal {
                return o.reverse();
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub fn lt(&self, x: &Vector, y: &Vector) -> bool {
        self.cmp(x, y) == Ordering::Less
    }

    #[inline]
    pub fn gt(&self, x: &Vector, y: &Vector) -> bool {
        self.cmp(x, y) == Ordering::Greater
    }

    pub fn max_of<'a, I>(&self, xs: I) -> Result<Vector>
    where
        I: IntoIterator<Item = &'a Vector>,
    {
        xs.into_iter().copied().max_by(|a, b| self.cmp(a, b)).ok_or(Error::EmptySet)
    }

    pub fn min_of<'a, I>(&self, xs: I) -> Result<Vector>
    where
        I: IntoIterator<Item = &'a Vector>,
    {
        xs.into_iter().copied().min_by(|a, b| self.cmp(a, b)).ok_or(Error::EmptySet)
    }

    /// `x ≻ k/2`, decided without leaving the lattice.
    pub fn above_half(&self, x: &Vector, k: &Vector) -> bool {
        self.gt(&x.scale(2), k)
    }

    pub fn sort(&self, xs: &mut [Vector]) {
        xs.sort_by(|a, b| self.cmp(a, b));
    }
}

fn weighted(x: &Vector, w: &[u32; MAX_DIM]) -> u64 {
    x.coords().iter().zip(w).map(|(&a, &b)| a as u64 * b as u64).sum()
}

impl fmt::Display for BaseOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseOrder::Lex => "lex",
            BaseOrder::GrLex => "grlex",
            BaseOrder::GrevLex => "grevlex",
        })
    }
}

impl fmt::Display for TermOrder {
    /// Uses the same names the command line accepts. Variable permutations
    /// are not part of the name.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrderKind::Lex => f.write_str("lex"),
            OrderKind::GrLex => f.write_str("grlex"),
            OrderKind::GrevLex => f.write_str("grevlex"),
            OrderKind::Weighted { weights, tie } => {
                f.write_str("weighted:")?;
                let n = weights.iter().rposition(|&w| w != 0).map_or(1, |p| p + 1);
                for (i, w) in weights[..n].iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, ":{tie}")
            }
        }
    }
}

impl core::str::FromStr for TermOrder {
    type Err = Error;

    /// Accepts `lex`, `grlex`, `grevlex` and `weighted:w1,w2,...:tie`.
    fn from_str(s: &str) -> Result<Self> {
        let base = |name: &str| match name {
            "lex" => Some(BaseOrder::Lex),
            "grlex" => Some(BaseOrder::GrLex),
            "grevlex" => Some(BaseOrder::GrevLex),
            _ => None,
        };
        match s {
            "lex" => return Ok(Self::lex()),
            "grlex" => return Ok(Self::grlex()),
            "grevlex" => return Ok(Self::grevlex()),
            _ => {}
        }
        let rest = s.strip_prefix("weighted:").ok_or(Error::PreconditionViolated("unknown order"))?;
        let (ws, tie) = match rest.split_once(':') {
            Some((ws, tie)) => (ws, base(tie).ok_or(Error::PreconditionViolated("unknown tie-break order"))?),
            None => (rest, BaseOrder::Lex),
        };
        let mut weights = alloc::vec::Vec::new();
        for w in ws.split(',') {
            weights.push(w.trim().parse::<u32>().map_err(|_| Error::PreconditionViolated("bad weight"))?);
        }
        Self::weighted(&weights, tie)
    }
}
