//! Bipartite independent vertex sets: the seven-matrix state family and
//! its transfer engine.
//!
//! Bar states are ternary: digit 0 is an empty cell, 1 a white vertex and
//! 2 a black vertex. Row `i` of a state matrix is the bottom state, column
//! `j` the top state. The width-`m` transfer matrix `A_m` is the first of
//! seven matrices `A..G` defined by a 3x3 block recursion from
//! `A_0 = ... = G_0 = [1]`:
//!
//! ```text
//! A' = [A  B  C ; xD 0 xE ; yF yG 0 ]     E' = [A B 0 ; 0  0 0  ; yF yG 0]
//! B' = [A  0  C ; xD 0 xE ; yF 0  0 ]     F' = [A B C ; xD 0 xE ; 0  0  0]
//! C' = [A  B  0 ; xD 0 0  ; yF yG 0 ]     G' = [A 0 C ; xD 0 xE ; 0  0  0]
//! D' = [A  B  C ; 0  0 0  ; yF yG 0 ]
//! ```
//!
//! The bar-state family of [`BivsBarFamily`] is the equivalent Kronecker
//! form; both are checked against each other and against the closed form
//! [`bivs_closed_form_entry`].

use rayon::prelude::*;

use crate::grid::{columns_compatible, digits_of};
use crate::matrix::StateMatrix;
use crate::poly::{BiPoly, BipartiteWeight};
use crate::{check_cap, check_dims, state_space, Caps, Error, Form, Mode, Natural, Result};

const PAR_MIN_LEN: usize = 256;

// Positions of the seven family members.
const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;
const F: usize = 5;
const G: usize = 6;

/// Seed cell `(row, col)` and weight `(x_exp, y_exp)` of each single-tile
/// matrix `A_1 .. G_1`.
const SEEDS: [((usize, usize), (u32, u32)); 7] = [
    ((0, 0), (0, 0)),
    ((0, 1), (0, 0)),
    ((0, 2), (0, 0)),
    ((1, 0), (1, 0)),
    ((1, 2), (1, 0)),
    ((2, 0), (0, 1)),
    ((2, 1), (0, 1)),
];

/// Which members may sit immediately left of each rightmost tile.
const LEFT_NEIGHBOURS: [&[usize]; 7] = [
    &[A, B, C, D, E, F, G],
    &[A, C, D, E, F],
    &[A, B, D, F, G],
    &[A, B, C, F, G],
    &[A, B, F, G],
    &[A, B, C, D, E],
    &[A, C, D, E],
];

/// Bar state matrices `A_p .. G_p` (3^p x 3^p), one per tile type at the
/// right end of the bar.
#[derive(Clone, Debug, PartialEq)]
pub struct BivsBarFamily {
    pub p: usize,
    pub members: [StateMatrix<BiPoly>; 7],
}

impl BivsBarFamily {
    pub fn seed() -> Self {
        BivsBarFamily {
            p: 1,
            members: std::array::from_fn(|k| {
                let ((r, c), (x, y)) = SEEDS[k];
                let mut m = StateMatrix::zeros(3);
                m.set(r, c, BiPoly::monomial(x, y, Natural::one()));
                m
            }),
        }
    }

    /// Appends one tile on the right: `X_{k+1} = X_1 ⊗ (sum of allowed left neighbours)`.
    pub fn extend(&self) -> Self {
        let dim = self.members[A].dim();
        BivsBarFamily {
            p: self.p + 1,
            members: std::array::from_fn(|k| {
                let inner =
                    StateMatrix::sum_of(dim, LEFT_NEIGHBOURS[k].iter().map(|&i| &self.members[i]));
                let ((r, c), (x, y)) = SEEDS[k];
                let w = BiPoly::monomial(x, y, Natural::one());
                StateMatrix::kronecker_single(3, r, c, &w, &inner)
            }),
        }
    }

    pub fn sum(&self) -> StateMatrix<BiPoly> {
        StateMatrix::sum_of(self.members[A].dim(), self.members.iter())
    }
}

pub fn bivs_bar_family(p: usize) -> Result<BivsBarFamily> {
    bivs_bar_family_with(p, &Caps::default())
}

pub fn bivs_bar_family_with(p: usize, caps: &Caps) -> Result<BivsBarFamily> {
    check_dims(p, 1)?;
    check_cap("BIVS matrix width", p, caps.bivs_matrix)?;
    let mut family = BivsBarFamily::seed();
    while family.p < p {
        family = family.extend();
    }
    Ok(family)
}

fn scaled(m: &StateMatrix<BiPoly>, x: u32, y: u32) -> StateMatrix<BiPoly> {
    m.map(|e| {
        let mut e = e.clone();
        e.shift(x, y);
        e
    })
}

/// The transfer matrix `A_m`, built by the 3x3 block recursion.
pub fn bivs_theorem_matrix(m: usize) -> Result<StateMatrix<BiPoly>> {
    bivs_theorem_matrix_with(m, &Caps::default())
}

pub fn bivs_theorem_matrix_with(m: usize, caps: &Caps) -> Result<StateMatrix<BiPoly>> {
    check_dims(m, 1)?;
    check_cap("BIVS matrix width", m, caps.bivs_matrix)?;
    let one = StateMatrix::from_rows(vec![vec![BiPoly::one()]]);
    let mut fam: [StateMatrix<BiPoly>; 7] = std::array::from_fn(|_| one.clone());
    for _ in 0..m {
        let o = StateMatrix::zeros(fam[A].dim());
        let [a, b, c, d, e, f, g] = &fam;
        let (xd, xe) = (scaled(d, 1, 0), scaled(e, 1, 0));
        let (yf, yg) = (scaled(f, 0, 1), scaled(g, 0, 1));
        let build = |blocks: [&StateMatrix<BiPoly>; 9]| {
            let blocks: Vec<_> = blocks.iter().map(|&b| Some(b.clone())).collect();
            StateMatrix::from_blocks(3, &blocks)
        };
        fam = [
            build([a, b, c, &xd, &o, &xe, &yf, &yg, &o]),
            build([a, &o, c, &xd, &o, &xe, &yf, &o, &o]),
            build([a, b, &o, &xd, &o, &o, &yf, &yg, &o]),
            build([a, b, c, &o, &o, &o, &yf, &yg, &o]),
            build([a, b, &o, &o, &o, &o, &yf, &yg, &o]),
            build([a, b, c, &xd, &o, &xe, &o, &o, &o]),
            build([a, &o, c, &xd, &o, &xe, &o, &o, &o]),
        ];
    }
    let [a, ..] = fam;
    Ok(a)
}

fn closed_form(m: usize, s: usize, t: usize) -> BiPoly {
    let sd = digits_of(Mode::Bivs, m, s);
    let td = digits_of(Mode::Bivs, m, t);
    if !columns_compatible(&sd, &td) {
        return BiPoly::zero();
    }
    let count = |digit| sd.iter().filter(|&&d| d == digit).count() as u32;
    BiPoly::monomial(count(1), count(2), Natural::one())
}

/// Entry `(i, j)` (1-based) of `A_m` in closed form:
/// `x^(#1 in ε_i) y^(#2 in ε_i)` when `ε_i`, `ε_j` fit in one bar, else 0.
pub fn bivs_closed_form_entry(i: usize, j: usize, m: usize) -> Result<BiPoly> {
    check_dims(m, 1)?;
    let max = state_space(Mode::Bivs, m)?;
    for index in [i, j] {
        if index == 0 || index > max {
            return Err(Error::InvalidIndex { index, max });
        }
    }
    Ok(closed_form(m, i - 1, j - 1))
}

pub fn bivs_closed_form_matrix(m: usize) -> Result<StateMatrix<BiPoly>> {
    check_dims(m, 1)?;
    check_cap("BIVS matrix width", m, Caps::default().bivs_matrix)?;
    Ok(StateMatrix::from_fn(3usize.pow(m as u32), |s, t| {
        closed_form(m, s, t)
    }))
}

/// Applies the width-`m` BIVS transfer matrix to vectors over `W`.
pub struct BivsEngine<W> {
    width: usize,
    cur: Vec<[W; 7]>,
    next: Vec<[W; 7]>,
}

impl<W: BipartiteWeight> BivsEngine<W> {
    pub fn new(width: usize) -> Self {
        let states = 3usize.pow(width as u32);
        let blank = || {
            (0..states)
                .map(|_| std::array::from_fn(|_| W::zero()))
                .collect()
        };
        BivsEngine {
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
        assert_eq!(v.len(), self.states(), "vector length must be 3^m");
        for (slot, x) in self.cur.iter_mut().zip(v.iter()) {
            for e in slot.iter_mut() {
                e.clone_from(x);
            }
        }
        let mut third = 1usize;
        for _ in 0..self.width {
            self.next
                .par_chunks_mut(3 * third)
                .zip(self.cur.par_chunks(3 * third))
                .with_min_len((PAR_MIN_LEN / third).max(1))
                .for_each(|(out, inp)| {
                    let (o0, rest) = out.split_at_mut(third);
                    let (o1, o2) = rest.split_at_mut(third);
                    let (i0, rest) = inp.split_at(third);
                    let (i1, i2) = rest.split_at(third);
                    o0.par_iter_mut()
                        .zip(o1.par_iter_mut())
                        .zip(o2.par_iter_mut())
                        .zip(i0.par_iter().zip(i1.par_iter()).zip(i2.par_iter()))
                        .with_min_len(PAR_MIN_LEN)
                        .for_each(|(((y0, y1), y2), ((x0, x1), x2))| {
                            butterfly(x0, x1, x2, y0, y1, y2)
                        });
                });
            std::mem::swap(&mut self.cur, &mut self.next);
            third *= 3;
        }
        for (x, slot) in v.iter_mut().zip(self.cur.iter()) {
            x.clone_from(&slot[A]);
        }
    }
}

/// One 3-point step of the block recursion. `x0..x2` hold the seven
/// members applied to the sub-vectors whose new top digit is 0, 1, 2;
/// `y0..y2` receive the rows whose new bottom digit is 0, 1, 2.
#[inline]
fn butterfly<W: BipartiteWeight>(
    x0: &[W; 7],
    x1: &[W; 7],
    x2: &[W; 7],
    y0: &mut [W; 7],
    y1: &mut [W; 7],
    y2: &mut [W; 7],
) {
    // Bottom digit 0: A x0 + B x1 + C x2 with the members' missing blocks.
    {
        let [a, b, c, d, e, f, g] = y0;
        a.clone_from(&x0[A]);
        b.clone_from(a);
        a.add_assign_ref(&x1[B]);
        c.clone_from(a);
        e.clone_from(a);
        a.add_assign_ref(&x2[C]);
        b.add_assign_ref(&x2[C]);
        d.clone_from(a);
        f.clone_from(a);
        g.clone_from(b);
    }
    // Bottom digit 1 (white): x (D x0 + E x2).
    {
        let [a, b, c, d, e, f, g] = y1;
        c.clone_from(&x0[D]);
        c.times_x();
        a.clone_from(&x0[D]);
        a.add_assign_ref(&x2[E]);
        a.times_x();
        b.clone_from(a);
        f.clone_from(a);
        g.clone_from(a);
        d.set_zero();
        e.set_zero();
    }
    // Bottom digit 2 (black): y (F x0 + G x1).
    {
        let [a, b, c, d, e, f, g] = y2;
        b.clone_from(&x0[F]);
        b.times_y();
        a.clone_from(&x0[F]);
        a.add_assign_ref(&x1[G]);
        a.times_y();
        c.clone_from(a);
        d.clone_from(a);
        e.clone_from(a);
        f.set_zero();
        g.set_zero();
    }
}

/// Runs `n` (column sum) or `n + 1` (corner entry) transfer steps from the
/// trivial state and reads off the result.
pub fn bivs_transfer<W: BipartiteWeight>(m: usize, n: usize, form: Form) -> W {
    let mut engine = BivsEngine::<W>::new(m);
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

/// `Q_mxn(x, y)`: bipartite independent vertex sets by white and black size.
pub fn bivs_genfunc(m: usize, n: usize) -> Result<BiPoly> {
    bivs_genfunc_with(m, n, Form::ColumnSum, &Caps::default())
}

pub fn bivs_genfunc_with(m: usize, n: usize, form: Form, caps: &Caps) -> Result<BiPoly> {
    check_dims(m, n)?;
    check_cap("BIVS generating function width", m, caps.bivs_genfunc)?;
    Ok(bivs_transfer(m, n, form))
}

/// The bipartite Merrifield-Simmons index `beta(G_mxn)`.
pub fn bivs_count(m: usize, n: usize) -> Result<Natural> {
    bivs_count_with(m, n, &Caps::default())
}

pub fn bivs_count_with(m: usize, n: usize, caps: &Caps) -> Result<Natural> {
    check_dims(m, n)?;
    check_cap("BIVS count width", m, caps.bivs_count)?;
    Ok(bivs_transfer(m, n, Form::ColumnSum))
}
