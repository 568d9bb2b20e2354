//! Dense square matrices over a [`Semiring`], indexed by bar states.
//!
//! Only used for explicitly materialised state matrices of small width;
//! the enumeration engines never build these.

use std::fmt;

use crate::poly::Semiring;

#[derive(Clone, PartialEq)]
pub struct StateMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Semiring> StateMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        StateMatrix {
            dim,
            entries: vec![T::zero(); dim * dim],
        }
    }

    /// Builds a matrix from `f(i, j)` with 0-based indices.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        StateMatrix { dim, entries }
    }

    /// Row-major rows of entries.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        StateMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 0-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Semiring::is_zero)
    }

    pub fn map(&self, f: impl FnMut(&T) -> T) -> Self {
        StateMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        StateMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| {
                    let mut s = a.clone();
                    s.add_assign_ref(b);
                    s
                })
                .collect(),
        }
    }

    /// Sum of several matrices of equal dimension.
    pub fn sum_of<'a>(dim: usize, parts: impl IntoIterator<Item = &'a Self>) -> Self
    where
        T: 'a,
    {
        parts
            .into_iter()
            .fold(StateMatrix::zeros(dim), |acc, m| acc.add(m))
    }

    /// Assembles a `radix x radix` block matrix; `None` is a zero block.
    pub fn from_blocks(radix: usize, blocks: &[Option<Self>]) -> Self {
        assert_eq!(blocks.len(), radix * radix, "wrong number of blocks");
        let inner = blocks
            .iter()
            .flatten()
            .map(|b| b.dim)
            .next()
            .expect("at least one nonzero block");
        let mut out = StateMatrix::zeros(inner * radix);
        for (k, block) in blocks.iter().enumerate() {
            let Some(block) = block else { continue };
            assert_eq!(block.dim, inner, "block dimension mismatch");
            let (br, bc) = (k / radix, k % radix);
            for i in 0..inner {
                for j in 0..inner {
                    out.set(br * inner + i, bc * inner + j, block.get(i, j).clone());
                }
            }
        }
        out
    }

    /// Kronecker product `S ⊗ inner` for a seed `S` with a single nonzero
    /// cell `(row, col)` of value `weight`.
    pub fn kronecker_single(radix: usize, row: usize, col: usize, weight: &T, inner: &Self) -> Self
    where
        T: MulRef,
    {
        let mut blocks: Vec<Option<Self>> = vec![None; radix * radix];
        blocks[row * radix + col] = Some(inner.map(|e| weight.mul_ref(e)));
        // Keep the other blocks as explicit zeros so that the dimension is known.
        for b in blocks.iter_mut().filter(|b| b.is_none()) {
            *b = Some(StateMatrix::zeros(inner.dim));
        }
        StateMatrix::from_blocks(radix, &blocks)
    }

    /// Matrix-vector product `M v`.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T>
    where
        T: MulRef,
    {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        (0..self.dim)
            .map(|i| {
                let mut acc = T::zero();
                for (j, x) in v.iter().enumerate() {
                    let e = self.get(i, j);
                    if !e.is_zero() && !x.is_zero() {
                        acc.add_assign_ref(&e.mul_ref(x));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Semiring multiplication by reference.
pub trait MulRef {
    fn mul_ref(&self, rhs: &Self) -> Self;
}

impl MulRef for crate::Natural {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl MulRef for crate::UniPoly {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl MulRef for crate::BiPoly {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl<T: Semiring + fmt::Display> fmt::Debug for StateMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "StateMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
