//! Independent vertex sets: bar state matrices and the transfer engine.
//!
//! Row `i` of a state matrix is indexed by the bottom state `ε_i` of a bar,
//! column `j` by its top state `ε_j`. The width-`m` transfer matrix obeys
//!
//! ```text
//! A_{k+1} = [ A_k   B_k ]    B_{k+1} = [ A_k   0 ]    C_{k+1} = [ A_k  B_k ]
//!           [ zC_k   0  ]              [ zC_k  0 ]              [  0    0  ]
//! ```
//!
//! from `A_0 = B_0 = C_0 = [1]`. `P_mxn(z)` is the entry sum of the first
//! column of `A_m^n`, equivalently the `(1,1)` entry of `A_m^(n+1)`.
//!
//! [`IvsEngine`] applies `A_m` to a vector by running the same block
//! recursion as a butterfly over the state index, `O(m 2^m)` semiring
//! operations per application, without ever forming a matrix.

use rayon::prelude::*;

use crate::grid::ivs_values_compatible;
use crate::matrix::StateMatrix;
use crate::poly::{GridWeight, UniPoly};
use crate::{check_cap, check_dims, Caps, Error, Form, Natural, Result};

/// Below this many butterflies a level runs sequentially.
const PAR_MIN_LEN: usize = 512;

/// The bar state matrices `(A_p, B_p, C_p)`: entry `(i, j)` of `A_p`
/// (`B_p`, `C_p`) counts bar mosaics with right edge `a` (`b`, `c`),
/// bottom state `ε_i` and top state `ε_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct IvsBarTriple {
    pub p: usize,
    pub a: StateMatrix<UniPoly>,
    pub b: StateMatrix<UniPoly>,
    pub c: StateMatrix<UniPoly>,
}

fn z() -> UniPoly {
    UniPoly::monomial(1, Natural::one())
}

fn times_z(m: &StateMatrix<UniPoly>) -> StateMatrix<UniPoly> {
    m.map(|e| {
        let mut e = e.clone();
        e.times_z();
        e
    })
}

impl IvsBarTriple {
    /// `A_0 = [1]`, `B_0 = C_0 = [0]`: the empty bar.
    pub fn empty() -> Self {
        IvsBarTriple {
            p: 0,
            a: StateMatrix::from_rows(vec![vec![UniPoly::one()]]),
            b: StateMatrix::zeros(1),
            c: StateMatrix::zeros(1),
        }
    }

    /// The single-tile seed matrices.
    pub fn seed() -> Self {
        let (o, l) = (UniPoly::zero(), UniPoly::one());
        IvsBarTriple {
            p: 1,
            a: StateMatrix::from_rows(vec![vec![l.clone(), o.clone()], vec![o.clone(), o.clone()]]),
            b: StateMatrix::from_rows(vec![vec![o.clone(), o.clone()], vec![z(), o.clone()]]),
            c: StateMatrix::from_rows(vec![vec![o.clone(), l], vec![o.clone(), o]]),
        }
    }

    /// One more tile on the right.
    pub fn extend(&self) -> Self {
        let d = self.a.dim();
        let abc = StateMatrix::sum_of(d, [&self.a, &self.b, &self.c]);
        let ac = times_z(&self.a.add(&self.c));
        let ab = self.a.add(&self.b);
        let zero = || Some(StateMatrix::zeros(d));
        IvsBarTriple {
            p: self.p + 1,
            a: StateMatrix::from_blocks(2, &[Some(abc), zero(), zero(), zero()]),
            b: StateMatrix::from_blocks(2, &[zero(), zero(), Some(ac), zero()]),
            c: StateMatrix::from_blocks(2, &[zero(), Some(ab), zero(), zero()]),
        }
    }

    pub fn sum(&self) -> StateMatrix<UniPoly> {
        StateMatrix::sum_of(self.a.dim(), [&self.a, &self.b, &self.c])
    }
}

/// Bar state matrices of length `p`; `p = 0` gives the empty bar.
pub fn ivs_bar_triple(p: usize) -> Result<IvsBarTriple> {
    ivs_bar_triple_with(p, &Caps::default())
}

pub fn ivs_bar_triple_with(p: usize, caps: &Caps) -> Result<IvsBarTriple> {
    check_cap("IVS matrix width", p, caps.ivs_matrix)?;
    if p == 0 {
        return Ok(IvsBarTriple::empty());
    }
    let mut triple = IvsBarTriple::seed();
    while triple.p < p {
        triple = triple.extend();
    }
    Ok(triple)
}

/// The transfer matrix `A_m`, built by the block recursion.
pub fn ivs_theorem_matrix(m: usize) -> Result<StateMatrix<UniPoly>> {
    ivs_theorem_matrix_with(m, &Caps::default())
}

pub fn ivs_theorem_matrix_with(m: usize, caps: &Caps) -> Result<StateMatrix<UniPoly>> {
    check_dims(m, 1)?;
    check_cap("IVS matrix width", m, caps.ivs_matrix)?;
    let one = StateMatrix::from_rows(vec![vec![UniPoly::one()]]);
    let (mut a, mut b, mut c) = (one.clone(), one.clone(), one);
    for _ in 0..m {
        let zero = || Some(StateMatrix::zeros(a.dim()));
        let zc = times_z(&c);
        let next_a = StateMatrix::from_blocks(
            2,
            &[Some(a.clone()), Some(b.clone()), Some(zc.clone()), zero()],
        );
        let next_b = StateMatrix::from_blocks(2, &[Some(a.clone()), zero(), Some(zc), zero()]);
        let next_c =
            StateMatrix::from_blocks(2, &[Some(a.clone()), Some(b.clone()), zero(), zero()]);
        (a, b, c) = (next_a, next_b, next_c);
    }
    Ok(a)
}

/// Entry `(i, j)` (1-based) of `A_m` in closed form: `z^|ε_i|` when the
/// bottom state `ε_i` and top state `ε_j` fit in one bar, otherwise 0.
pub fn ivs_closed_form_entry(i: usize, j: usize, m: usize) -> Result<UniPoly> {
    check_dims(m, 1)?;
    let max = crate::state_space(crate::Mode::Ivs, m)?;
    for index in [i, j] {
        if index == 0 || index > max {
            return Err(Error::InvalidIndex { index, max });
        }
    }
    Ok(closed_form(i - 1, j - 1))
}

fn closed_form(s: usize, t: usize) -> UniPoly {
    if ivs_values_compatible(s, t) {
        UniPoly::monomial(s.count_ones(), Natural::one())
    } else {
        UniPoly::zero()
    }
}

pub fn ivs_closed_form_matrix(m: usize) -> Result<StateMatrix<UniPoly>> {
    check_dims(m, 1)?;
    check_cap("IVS matrix width", m, Caps::default().ivs_matrix)?;
    Ok(StateMatrix::from_fn(1 << m, closed_form))
}

/// Applies the width-`m` IVS transfer matrix to vectors over `W`.
///
/// Buffers are kept between applications so repeated products do not
/// reallocate.
pub struct IvsEngine<W> {
    width: usize,
    cur: Vec<[W; 3]>,
    next: Vec<[W; 3]>,
}

impl<W: GridWeight> IvsEngine<W> {
    pub fn new(width: usize) -> Self {
        let states = 1usize << width;
        let blank = || {
            (0..states)
                .map(|_| std::array::from_fn(|_| W::zero()))
                .collect()
        };
        IvsEngine {
            width,
            cur: blank(),
            next: blank(),
        }
    }

    pub fn states(&self) -> usize {
        self.cur.len()
    }

    /// `v <- A_m v`.
    pub fn apply(&mut self, v: &mut [W]) {
        assert_eq!(v.len(), self.states(), "vector length must be 2^m");
        for (slot, x) in self.cur.iter_mut().zip(v.iter()) {
            for e in slot.iter_mut() {
                e.clone_from(x);
            }
        }
        for level in 0..self.width {
            let half = 1usize << level;
            self.next
                .par_chunks_mut(2 * half)
                .zip(self.cur.par_chunks(2 * half))
                .with_min_len((PAR_MIN_LEN / half).max(1))
                .for_each(|(out, inp)| {
                    let (out_lo, out_hi) = out.split_at_mut(half);
                    let (in_lo, in_hi) = inp.split_at(half);
                    out_lo
                        .par_iter_mut()
                        .zip(out_hi.par_iter_mut())
                        .zip(in_lo.par_iter().zip(in_hi.par_iter()))
                        .with_min_len(PAR_MIN_LEN)
                        .for_each(|((lo, hi), (x0, x1))| butterfly(x0, x1, lo, hi));
                });
            std::mem::swap(&mut self.cur, &mut self.next);
        }
        for (x, slot) in v.iter_mut().zip(self.cur.iter()) {
            x.clone_from(&slot[0]);
        }
    }
}

/// One 2-point step of the block recursion. `x0`/`x1` hold `(A, B, C)`
/// applied to the sub-vectors whose new top digit is 0/1; `lo`/`hi`
/// receive the rows whose new bottom digit is 0/1.
#[inline]
fn butterfly<W: GridWeight>(x0: &[W; 3], x1: &[W; 3], lo: &mut [W; 3], hi: &mut [W; 3]) {
    let [la, lb, lc] = lo;
    la.clone_from(&x0[0]);
    la.add_assign_ref(&x1[1]);
    lb.clone_from(&x0[0]);
    lc.clone_from(la);

    let [ha, hb, hc] = hi;
    ha.clone_from(&x0[2]);
    ha.times_z();
    hb.clone_from(ha);
    hc.set_zero();
}

/// Runs `n` (column sum) or `n + 1` (corner entry) transfer steps from the
/// trivial state and reads off the result.
pub fn ivs_transfer<W: GridWeight>(m: usize, n: usize, form: Form) -> W {
    let mut engine = IvsEngine::<W>::new(m);
    let mut v = vec![W::zero(); engine.states()];
    v[0] = W::one();
    let steps = match form {
        Form::ColumnSum => n,
        Form::CornerEntry => n + 1,
    };
    for _ in 0..steps {
        engine.apply(&mut v);
    }
    match form {
        Form::ColumnSum => v.iter().fold(W::zero(), |mut acc, x| {
            acc.add_assign_ref(x);
            acc
        }),
        Form::CornerEntry => v.swap_remove(0),
    }
}

/// `P_mxn(z)`, the generating function of independent vertex sets by size.
pub fn ivs_genfunc(m: usize, n: usize) -> Result<UniPoly> {
    ivs_genfunc_with(m, n, Form::ColumnSum, &Caps::default())
}

/// `P_mxn(z)` read off the `(1,1)` entry of `A_m^(n+1)`.
pub fn ivs_genfunc_alt(m: usize, n: usize) -> Result<UniPoly> {
    ivs_genfunc_with(m, n, Form::CornerEntry, &Caps::default())
}

pub fn ivs_genfunc_with(m: usize, n: usize, form: Form, caps: &Caps) -> Result<UniPoly> {
    check_dims(m, n)?;
    check_cap("IVS generating function width", m, caps.ivs_genfunc)?;
    Ok(ivs_transfer(m, n, form))
}

/// The Merrifield-Simmons index `sigma(G_mxn)`.
pub fn ivs_count(m: usize, n: usize) -> Result<Natural> {
    ivs_count_with(m, n, &Caps::default())
}

pub fn ivs_count_with(m: usize, n: usize, caps: &Caps) -> Result<Natural> {
    check_dims(m, n)?;
    check_cap("IVS count width", m, caps.ivs_count)?;
    Ok(ivs_transfer(m, n, Form::ColumnSum))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(c: &[u64]) -> UniPoly {
        UniPoly::from_coeffs(c)
    }

    #[test]
    fn seeds_verbatim() {
        let t = ivs_bar_triple(1).unwrap();
        assert_eq!(*t.a.get(0, 0), uni(&[1]));
        assert_eq!(t.a.nonzero_count(), 1);
        assert_eq!(*t.b.get(1, 0), uni(&[0, 1]));
        assert_eq!(t.b.nonzero_count(), 1);
        assert_eq!(*t.c.get(0, 1), uni(&[1]));
        assert_eq!(t.c.nonzero_count(), 1);
    }

    #[test]
    fn empty_bar_seeds_the_same_recursion() {
        let t0 = ivs_bar_triple(0).unwrap();
        assert_eq!(t0.a.dim(), 1);
        assert!(t0.b.is_zero() && t0.c.is_zero());
        assert_eq!(t0.extend(), IvsBarTriple::seed());
        assert_eq!(t0.extend().extend(), ivs_bar_triple(2).unwrap());
    }

    #[test]
    fn width_two_triple() {
        let t = ivs_bar_triple(2).unwrap();
        assert_eq!(*t.a.get(0, 0), uni(&[1]));
        assert_eq!(*t.a.get(1, 0), uni(&[0, 1]));
        assert_eq!(*t.a.get(0, 1), uni(&[1]));
        let sum = t.sum();
        let mut row_sums: Vec<u64> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| sum.get(i, j).eval_ones().to_u64().unwrap())
                    .sum()
            })
            .collect();
        row_sums.sort_unstable();
        assert_eq!(row_sums, vec![0, 2, 2, 3]);
    }

    #[test]
    fn theorem_matrix_width_one() {
        let a = ivs_theorem_matrix(1).unwrap();
        assert_eq!(
            a,
            StateMatrix::from_rows(vec![
                vec![uni(&[1]), uni(&[1])],
                vec![uni(&[0, 1]), UniPoly::zero()],
            ])
        );
    }

    #[test]
    fn theorem_matrix_kills_adjacent_vertices() {
        let a = ivs_theorem_matrix(2).unwrap();
        // ε = 11 is index 4.
        for j in 0..4 {
            assert!(a.get(3, j).is_zero());
        }
    }

    #[test]
    fn closed_form_entries() {
        assert_eq!(ivs_closed_form_entry(1, 1, 1).unwrap(), uni(&[1]));
        assert_eq!(ivs_closed_form_entry(2, 1, 1).unwrap(), uni(&[0, 1]));
        for j in 1..=4 {
            assert!(ivs_closed_form_entry(4, j, 2).unwrap().is_zero());
        }
        assert!(ivs_closed_form_entry(5, 1, 2).is_err());
        assert!(ivs_closed_form_entry(0, 1, 2).is_err());
    }

    #[test]
    fn matrix_forms_agree() {
        for m in 1..=8 {
            let theorem = ivs_theorem_matrix(m).unwrap();
            let lemma = ivs_bar_triple(m).unwrap();
            assert_eq!(theorem, lemma.sum(), "m={m}");
            assert_eq!(theorem, ivs_closed_form_matrix(m).unwrap(), "m={m}");
            for x in [&lemma.a, &lemma.b, &lemma.c] {
                for e in x.entries() {
                    assert!(e.num_terms() <= 1 && e.terms().all(|(_, k)| *k == Natural::one()));
                }
            }
        }
    }

    #[test]
    fn engine_matches_explicit_product() {
        for m in 1..=5 {
            let a = ivs_theorem_matrix(m).unwrap();
            let v: Vec<UniPoly> = (0..1u64 << m).map(|i| uni(&[i + 1, i % 3])).collect();
            let mut w = v.clone();
            IvsEngine::new(m).apply(&mut w);
            assert_eq!(w, a.mul_vec(&v), "m={m}");
        }
    }

    #[test]
    fn genfunc_examples() {
        assert_eq!(ivs_genfunc(1, 1).unwrap(), uni(&[1, 1]));
        assert_eq!(ivs_genfunc(2, 2).unwrap(), uni(&[1, 4, 2]));
        assert_eq!(ivs_genfunc(3, 3).unwrap().eval_ones(), Natural::from(63u64));
        assert_eq!(ivs_genfunc_alt(1, 1).unwrap(), uni(&[1, 1]));
        assert_eq!(ivs_genfunc_alt(2, 3).unwrap(), ivs_genfunc(2, 3).unwrap());
        assert_eq!(
            ivs_genfunc_alt(4, 4).unwrap().eval_ones(),
            Natural::from(1234u64)
        );
    }

    #[test]
    fn count_examples() {
        assert_eq!(ivs_count(1, 1).unwrap(), Natural::from(2u64));
        assert_eq!(ivs_count(5, 5).unwrap(), Natural::from(55447u64));
        assert_eq!(ivs_count(1, 3).unwrap(), Natural::from(5u64));
    }

    #[test]
    fn rejects_empty_and_oversized_grids() {
        assert_eq!(ivs_count(0, 3), Err(Error::EmptyGrid { m: 0, n: 3 }));
        assert_eq!(ivs_genfunc(3, 0), Err(Error::EmptyGrid { m: 3, n: 0 }));
        assert!(ivs_genfunc(15, 1).unwrap_err().is_cap());
        assert!(ivs_count(25, 1).unwrap_err().is_cap());
        let caps = Caps {
            ivs_genfunc: 2,
            ..Caps::default()
        };
        assert!(ivs_genfunc_with(3, 1, Form::ColumnSum, &caps).is_err());
    }

    #[test]
    fn fibonacci_row() {
        let (mut a, mut b) = (1u64, 2u64);
        for n in 1..=30 {
            assert_eq!(ivs_count(1, n).unwrap(), Natural::from(b), "n={n}");
            (a, b) = (b, a + b);
        }
    }

    #[test]
    fn transposition_symmetry() {
        for m in 1..=8 {
            for n in 1..m {
                assert_eq!(ivs_count(m, n).unwrap(), ivs_count(n, m).unwrap());
            }
        }
    }
}
