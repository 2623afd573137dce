//! Dense operation tables over element indices.

use std::fmt;

/// Elements of a finite carrier are dense indices `0..n`.
pub type Elem = usize;

/// A total binary operation on `0..size`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryOp {
    size: usize,
    cells: Vec<Elem>,
}

impl BinaryOp {
    pub fn from_fn(size: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut cells = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                cells.push(f(x, y));
            }
        }
        Self { size, cells }
    }

    /// Builds a table from row-major cells. Returns `None` if the cell count
    /// is not `size * size` or a cell is out of range.
    pub fn from_cells(size: usize, cells: Vec<Elem>) -> Option<Self> {
        if cells.len() != size * size || cells.iter().any(|&c| c >= size) {
            return None;
        }
        Some(Self { size, cells })
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.cells[x * self.size + y]
    }

    #[inline]
    pub fn set(&mut self, x: Elem, y: Elem, v: Elem) {
        self.cells[x * self.size + y] = v;
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cells(&self) -> &[Elem] {
        &self.cells
    }

    pub fn row(&self, x: Elem) -> &[Elem] {
        &self.cells[x * self.size..(x + 1) * self.size]
    }

    /// The table of `(x, y) ↦ self(y, x)`.
    pub fn transposed(&self) -> Self {
        Self::from_fn(self.size, |x, y| self.get(y, x))
    }

    /// Rewrites the table along a relabelling: `perm[new] = old`.
    pub fn relabel(&self, perm: &[Elem]) -> Self {
        let inv = invert(perm);
        Self::from_fn(self.size, |x, y| inv[self.get(perm[x], perm[y])])
    }
}

impl fmt::Debug for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.size).map(|x| self.row(x)))
            .finish()
    }
}

/// Rewrites a unary table along a relabelling: `perm[new] = old`.
pub fn relabel_unary(map: &[Elem], perm: &[Elem]) -> Vec<Elem> {
    let inv = invert(perm);
    perm.iter().map(|&old| inv[map[old]]).collect()
}

/// Inverse of a permutation given as a slice.
pub fn invert(perm: &[Elem]) -> Vec<Elem> {
    let mut inv = vec![0; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    inv
}
