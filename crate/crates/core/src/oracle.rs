//! Brute-force ground truth.
//!
//! Everything here enumerates configurations directly: vertex subsets of
//! the grid graph, pairs of disjoint subsets, or whole tile arrays. Nothing
//! is shared with the transfer engines beyond the polynomial types and the
//! tile tables of [`crate::grid`].

use rayon::prelude::*;

use crate::grid::{Mode, Mosaic};
use crate::poly::{BiPoly, GenFunc, UniPoly};
use crate::{check_dims, Error, Natural, Result};

/// Largest `m * n` accepted by [`brute_ivs`].
pub const IVS_AREA_GUARD: usize = 24;
/// Largest `m * n` accepted by [`brute_bivs`].
pub const BIVS_AREA_GUARD: usize = 15;
/// Largest number of tile arrays [`brute_mosaics`] will visit.
pub const MOSAIC_GUARD: u64 = 100_000_000;

/// The `m x n` grid graph. Vertex `(i, j)` (column `i`, row `j`) is bit
/// `j * m + i` of a vertex mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridGraph {
    pub m: usize,
    pub n: usize,
}

impl GridGraph {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        check_dims(m, n)?;
        Ok(GridGraph { m, n })
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    pub fn vertex(&self, i: usize, j: usize) -> usize {
        j * self.m + i
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.n {
            for i in 0..self.m {
                if i + 1 < self.m {
                    out.push((self.vertex(i, j), self.vertex(i + 1, j)));
                }
                if j + 1 < self.n {
                    out.push((self.vertex(i, j), self.vertex(i, j + 1)));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Whether no two vertices of `mask` are adjacent.
    pub fn is_independent(&self, mask: u64) -> bool {
        let horizontal = mask & (mask >> 1) & self.horizontal_pairs();
        let vertical = mask & (mask >> self.m);
        horizontal == 0 && vertical == 0
    }

    // Bits k whose right neighbour k+1 lies in the same row.
    fn horizontal_pairs(&self) -> u64 {
        let mut h = 0u64;
        for j in 0..self.n {
            for i in 0..self.m.saturating_sub(1) {
                h |= 1 << self.vertex(i, j);
            }
        }
        h
    }
}

fn guard(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        return Err(Error::CapExceeded { what, value, cap });
    }
    Ok(())
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// `P_mxn(z)` by checking every vertex subset.
pub fn brute_ivs(m: usize, n: usize) -> Result<UniPoly> {
    let g = GridGraph::new(m, n)?;
    let v = g.vertex_count();
    guard("oracle IVS area", v, IVS_AREA_GUARD)?;
    let hist = (0..1u64 << v)
        .into_par_iter()
        .fold(
            || vec![0u64; v + 1],
            |mut h, s| {
                if g.is_independent(s) {
                    h[s.count_ones() as usize] += 1;
                }
                h
            },
        )
        .reduce(|| vec![0u64; v + 1], merge);
    Ok(UniPoly::from_coeffs(&hist))
}

/// `Q_mxn(x, y)` by checking every assignment of {empty, white, black}.
///
/// Assignments are enumerated as a white independent set together with a
/// black independent subset of the remaining vertices.
pub fn brute_bivs(m: usize, n: usize) -> Result<BiPoly> {
    let g = GridGraph::new(m, n)?;
    let v = g.vertex_count();
    guard("oracle BIVS area", v, BIVS_AREA_GUARD)?;
    let full = (1u64 << v) - 1;
    let side = v + 1;
    let hist = (0..1u64 << v)
        .into_par_iter()
        .filter(|&w| g.is_independent(w))
        .fold(
            || vec![0u64; side * side],
            |mut h, w| {
                let rest = full & !w;
                let whites = w.count_ones() as usize;
                // All submasks of `rest`, including the empty one.
                let mut b = rest;
                loop {
                    if g.is_independent(b) {
                        h[whites * side + b.count_ones() as usize] += 1;
                    }
                    if b == 0 {
                        break;
                    }
                    b = (b - 1) & rest;
                }
                h
            },
        )
        .reduce(|| vec![0u64; side * side], merge);
    let mut terms = Vec::new();
    for (k, &count) in hist.iter().enumerate() {
        if count > 0 {
            terms.push(((k / side) as u32, (k % side) as u32, count));
        }
    }
    Ok(BiPoly::from_terms(&terms))
}

/// The generating function of valid mosaics, by visiting every tile array
/// and keeping the suitably adjacent ones with a trivial top state.
pub fn brute_mosaics(mode: Mode, m: usize, n: usize) -> Result<GenFunc> {
    check_dims(m, n)?;
    let k = mode.tile_count() as u64;
    let cells = m * n;
    let total = u32::try_from(cells)
        .ok()
        .and_then(|c| k.checked_pow(c))
        .filter(|&t| t <= MOSAIC_GUARD)
        .ok_or(Error::CapExceeded {
            what: "oracle mosaic count",
            value: cells,
            cap: (MOSAIC_GUARD as f64).log(k as f64) as usize,
        })?;
    let tiles: Vec<_> = mode.tiles().collect();
    let side = cells + 1;
    let hist = (0..total)
        .into_par_iter()
        .fold(
            || vec![0u64; side * side],
            |mut h, mut code| {
                let array = (0..cells)
                    .map(|_| {
                        let t = tiles[(code % k) as usize];
                        code /= k;
                        t
                    })
                    .collect();
                let mosaic = Mosaic::from_tiles(mode, m, n, array).expect("well-formed array");
                if mosaic.is_ivs_mosaic() {
                    let (a, b) = mosaic.weight_exponents();
                    h[a as usize * side + b as usize] += 1;
                }
                h
            },
        )
        .reduce(|| vec![0u64; side * side], merge);
    let terms = hist
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(idx, &c)| ((idx / side) as u32, (idx % side) as u32, c));
    Ok(match mode {
        Mode::Ivs => {
            let mut p = UniPoly::zero();
            for (a, _, c) in terms {
                p = &p + &UniPoly::monomial(a, Natural::from(c));
            }
            GenFunc::Ivs(p)
        }
        Mode::Bivs => GenFunc::Bivs(BiPoly::from_terms(&terms.collect::<Vec<_>>())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_graph_shape() {
        for (m, n) in [(1, 1), (2, 3), (4, 4), (5, 2)] {
            let g = GridGraph::new(m, n).unwrap();
            assert_eq!(g.vertex_count(), m * n);
            assert_eq!(g.edge_count(), m * (n - 1) + n * (m - 1));
            for (a, b) in g.edges() {
                assert!(!g.is_independent((1 << a) | (1 << b)));
            }
        }
        assert!(GridGraph::new(0, 2).is_err());
    }

    #[test]
    fn brute_ivs_examples() {
        assert_eq!(brute_ivs(1, 1).unwrap(), UniPoly::from_coeffs(&[1, 1]));
        assert_eq!(brute_ivs(2, 2).unwrap(), UniPoly::from_coeffs(&[1, 4, 2]));
        assert_eq!(brute_ivs(3, 3).unwrap().eval_ones(), Natural::from(63u64));
        assert_eq!(brute_ivs(1, 3).unwrap().eval_ones(), Natural::from(5u64));
        assert!(brute_ivs(5, 5).unwrap_err().is_cap());
    }

    #[test]
    fn brute_bivs_examples() {
        assert_eq!(
            brute_bivs(1, 1).unwrap(),
            BiPoly::from_terms(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(
            brute_bivs(1, 2).unwrap(),
            BiPoly::from_terms(&[(0, 0, 1), (1, 0, 2), (0, 1, 2), (1, 1, 2)])
        );
        assert_eq!(brute_bivs(2, 2).unwrap().eval_ones(), Natural::from(35u64));
        assert_eq!(brute_bivs(2, 1).unwrap().eval_ones(), Natural::from(7u64));
        assert!(brute_bivs(4, 4).unwrap_err().is_cap());
    }

    #[test]
    fn brute_mosaic_examples() {
        assert_eq!(
            brute_mosaics(Mode::Ivs, 1, 1).unwrap(),
            GenFunc::Ivs(UniPoly::from_coeffs(&[1, 1]))
        );
        let GenFunc::Ivs(p) = brute_mosaics(Mode::Ivs, 2, 1).unwrap() else {
            panic!("wrong mode")
        };
        assert!(p.coeff(2).is_zero());
        assert_eq!(
            brute_mosaics(Mode::Bivs, 1, 1).unwrap(),
            GenFunc::Bivs(BiPoly::from_terms(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]))
        );
        assert!(brute_mosaics(Mode::Bivs, 4, 3).unwrap_err().is_cap());
    }

    #[test]
    fn low_order_coefficients_and_degree() {
        for m in 1..=4 {
            for n in 1..=4 {
                let p = brute_ivs(m, n).unwrap();
                assert_eq!(p.coeff(0), Natural::one());
                assert_eq!(p.coeff(1), Natural::from((m * n) as u64));
                assert_eq!(p.degree(), Some((m * n).div_ceil(2) as u32));
            }
        }
    }

    #[test]
    fn bivs_projects_onto_ivs() {
        for (m, n) in [(1, 3), (2, 2), (3, 3), (2, 5)] {
            assert_eq!(
                brute_bivs(m, n).unwrap().project_y_zero(),
                brute_ivs(m, n).unwrap()
            );
        }
    }
}
