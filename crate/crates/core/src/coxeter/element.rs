use std::fmt;
use std::hash::{Hash, Hasher};

/// A sequence of generator indices (0-based).
pub type Word = Vec<usize>;

/// An element of a Coxeter group, stored as its matrix on the root lattice.
///
/// Column `t` of `mat` holds the coordinates of `w(alpha_t)` in the basis of
/// simple roots. The representation is faithful, so elements compare by
/// matrix. The inverse matrix and the length are carried along.
#[derive(Clone)]
pub struct GroupElement {
    pub(crate) rank: usize,
    pub(crate) mat: Box<[i64]>,
    pub(crate) inv: Box<[i64]>,
    pub(crate) len: u32,
}

impl GroupElement {
    pub(crate) fn identity(rank: usize) -> Self {
        let mut mat = vec![0i64; rank * rank].into_boxed_slice();
        for i in 0..rank {
            mat[i * rank + i] = 1;
        }
        GroupElement { rank, inv: mat.clone(), mat, len: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// Matrix entry: coefficient of `alpha_row` in `w(alpha_col)`.
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.mat[row * self.rank + col]
    }

    /// `w(alpha_s)` is a negative root.
    pub fn has_right_descent(&self, s: usize) -> bool {
        (0..self.rank).any(|r| self.mat[r * self.rank + s] < 0)
    }

    /// `w^{-1}(alpha_s)` is a negative root.
    pub fn has_left_descent(&self, s: usize) -> bool {
        (0..self.rank).any(|r| self.inv[r * self.rank + s] < 0)
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement { rank: self.rank, mat: self.inv.clone(), inv: self.mat.clone(), len: self.len }
    }
}

pub(crate) fn matmul(rank: usize, a: &[i64], b: &[i64]) -> Box<[i64]> {
    let mut out = vec![0i64; rank * rank].into_boxed_slice();
    for i in 0..rank {
        for k in 0..rank {
            let aik = a[i * rank + k];
            if aik == 0 {
                continue;
            }
            for j in 0..rank {
                out[i * rank + j] += aik * b[k * rank + j];
            }
        }
    }
    out
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary total order (length first); only used for deterministic output.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len.cmp(&other.len).then_with(|| self.mat.cmp(&other.mat))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement(len={}, mat={:?})", self.len, &self.mat[..])
    }
}
