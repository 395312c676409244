//! Lattice points of `N^d` for `d <= 3`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use crate::{Error, Result};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 3;

/// A point of `N^d`. Coordinates beyond `dim` are always zero, so the derived
/// comparisons and hashes only see the meaningful part.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    dim: u8,
    coords: [u32; MAX_DIM],
}

impl Vector {
    pub fn new(coords: &[u32]) -> Result<Self> {
        let d = coords.len();
        if d == 0 || d > MAX_DIM {
            return Err(Error::UnsupportedDimension(d));
        }
        let mut c = [0; MAX_DIM];
        c[..d].copy_from_slice(coords);
        Ok(Vector { dim: d as u8, coords: c })
    }

    /// The zero vector of dimension `dim`. Panics if `dim` is not in `1..=3`.
    pub fn zero(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "unsupported dimension {dim}");
        Vector { dim: dim as u8, coords: [0; MAX_DIM] }
    }

    /// The canonical basis vector `e_i` (0-based `i`).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = 1;
        v
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn coords(&self) -> &[u32] {
        &self.coords[..self.dim as usize]
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn degree(&self) -> u64 {
        self.coords().iter().map(|&c| c as u64).sum()
    }

    /// `self - other` when the difference stays in `N^d`.
    #[inline]
    pub fn checked_sub(&self, other: &Vector) -> Option<Vector> {
        debug_assert_eq!(self.dim, other.dim);
        let mut c = [0; MAX_DIM];
        for (i, ci) in c.iter_mut().enumerate().take(self.dim as usize) {
            *ci = self.coords[i].checked_sub(other.coords[i])?;
        }
        Some(Vector { dim: self.dim, coords: c })
    }

    /// Componentwise `self <= other` (the order of `N^d`).
    #[inline]
    pub fn le_componentwise(&self, other: &Vector) -> bool {
        (0..self.dim as usize).all(|i| self.coords[i] <= other.coords[i])
    }

    pub fn scale(&self, factor: u32) -> Vector {
        let mut v = *self;
        for c in v.coords.iter_mut() {
            *c *= factor;
        }
        v
    }

    /// `self / 2` when every coordinate is even.
    pub fn half(&self) -> Option<Vector> {
        if self.coords.iter().any(|c| c % 2 != 0) {
            return None;
        }
        let mut v = *self;
        for c in v.coords.iter_mut() {
            *c /= 2;
        }
        Some(v)
    }

    pub fn dot(&self, w: &[i64]) -> i64 {
        self.coords().iter().zip(w).map(|(&a, &b)| a as i64 * b).sum()
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: self.dim() });
        }
        Ok(())
    }

    /// Every point of the box `[0, self]`, in no particular order.
    pub fn box_points(&self) -> Vec<Vector> {
        let d = self.dim();
        let total: usize = self.coords().iter().map(|&c| c as usize + 1).product();
        let mut out = Vec::with_capacity(total);
        let mut cur = Vector::zero(d);
        loop {
            out.push(cur);
            let mut i = 0;
            loop {
                if i == d {
                    return out;
                }
                if cur.coords[i] < self.coords[i] {
                    cur.coords[i] += 1;
                    break;
                }
                cur.coords[i] = 0;
                i += 1;
            }
        }
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Vector) -> Vector {
        let mut v = *self;
        for i in 0..MAX_DIM {
            v.coords[i] = v.coords[i].max(other.coords[i]);
        }
        v
    }
}

impl Add for Vector {
    type Output = Vector;

    #[inline]
    fn add(self, rhs: Vector) -> Vector {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut v = self;
        for i in 0..MAX_DIM {
            v.coords[i] += rhs.coords[i];
        }
        v
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand used throughout the tests: `v(&[1, 2])`. Panics on bad input.
pub fn v(coords: &[u32]) -> Vector {
    Vector::new(coords).expect("valid vector")
}
