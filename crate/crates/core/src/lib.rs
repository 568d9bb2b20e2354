//! Exact enumeration of independent vertex sets in grid graphs.
//!
//! The crate counts independent vertex sets (IVS) and bipartite independent
//! vertex sets (BIVS) of the `m x n` grid graph with a state matrix
//! recursion: a grid is cut into horizontal bar mosaics, the bar mosaics of
//! width `m` are summarised by a small family of recursively defined state
//! matrices, and stacking `n` bars is a product of those matrices.
//!
//! The main entry points:
//!
//! * [`ivs_count`] / [`bivs_count`] for the Merrifield-Simmons index
//!   `sigma(G_mxn)` and its bipartite analogue `beta(G_mxn)`,
//! * [`ivs_genfunc`] / [`bivs_genfunc`] for the full generating functions
//!   `P_mxn(z)` and `Q_mxn(x, y)`,
//! * [`bracket`] and [`table_one`] for the rigorous brackets of the hard
//!   square constant and its bipartite analogue,
//! * the [`oracle`] module for brute-force ground truth.
//!
//! ```
//! use hardsquare::{ivs_count, ivs_genfunc};
//!
//! assert_eq!(ivs_count(4, 4).unwrap().to_string(), "1234");
//! assert_eq!(ivs_genfunc(2, 2).unwrap().to_string(), "1 + 4*z + 2*z^2");
//! ```

pub mod bivs;
pub mod bounds;
pub mod cli;
mod error;
pub mod grid;
pub mod ivs;
pub mod matrix;
mod natural;
pub mod oracle;
pub mod poly;

pub use bivs::{bivs_count, bivs_genfunc, BivsBarFamily};
pub use bounds::{
    bracket, fekete_sandwich, nth_root, table_one, Axis, FixedDecimal, GrowthBracket,
};
pub use error::{Error, Result};
pub use grid::{BarState, Mode, Mosaic, Tile};
pub use ivs::{ivs_count, ivs_genfunc, ivs_genfunc_alt, IvsBarTriple};
pub use natural::Natural;
pub use poly::{BiPoly, GenFunc, UniPoly};

/// Which of the two equivalent read-outs of the transfer matrix power to use.
///
/// `ColumnSum` sums the first column of `A^n`; `CornerEntry` reads the
/// `(1,1)` entry of `A^(n+1)`. Both give the same generating function.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Form {
    #[default]
    ColumnSum,
    CornerEntry,
}

/// Size limits guarding the state-space engines.
///
/// Each field bounds the bar width `m`; the state space has `2^m` (IVS) or
/// `3^m` (BIVS) entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub ivs_genfunc: usize,
    pub ivs_count: usize,
    pub bivs_genfunc: usize,
    pub bivs_count: usize,
    /// Width limit for explicitly materialised IVS state matrices.
    pub ivs_matrix: usize,
    /// Width limit for explicitly materialised BIVS state matrices.
    pub bivs_matrix: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ivs_genfunc: 14,
            ivs_count: 24,
            bivs_genfunc: 9,
            bivs_count: 13,
            ivs_matrix: 10,
            bivs_matrix: 6,
        }
    }
}

impl Caps {
    /// Caps that accept every size. Callers take responsibility for memory.
    pub fn unlimited() -> Self {
        Caps {
            ivs_genfunc: usize::MAX,
            ivs_count: usize::MAX,
            bivs_genfunc: usize::MAX,
            bivs_count: usize::MAX,
            ivs_matrix: usize::MAX,
            bivs_matrix: usize::MAX,
        }
    }
}

pub(crate) fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyGrid { m, n });
    }
    Ok(())
}

pub(crate) fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        return Err(Error::CapExceeded { what, value, cap });
    }
    Ok(())
}

pub(crate) fn state_space(mode: Mode, m: usize) -> Result<usize> {
    mode.state_count(m).ok_or(Error::CapExceeded {
        what: "state space width",
        value: m,
        cap: 40,
    })
}
