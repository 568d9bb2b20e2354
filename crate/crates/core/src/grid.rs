//! Bar states, mosaic tiles and mosaics.
//!
//! A mosaic is an `m x n` array of tiles; column `i` runs left to right and
//! row `j` bottom to top. Every tile carries a letter on its left and right
//! edges and a number on its bottom and top edges. Tiles abut horizontally
//! unless their letters form a forbidden pair, and vertically only when the
//! numbers agree.
//!
//! A bar state is the digit string read off the bottom or top edge of a
//! row of tiles, from right to left. Its index is `1 +` the value of that
//! string as a base-2 (IVS) or base-3 (BIVS) numeral, so the rightmost
//! column is the most significant digit and the all-zero state is index 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::poly::{BiPoly, GenFunc, UniPoly};
use crate::{Error, Natural, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Independent vertex sets: three tiles, binary bar states.
    Ivs,
    /// Bipartite independent vertex sets: seven tiles, ternary bar states.
    Bivs,
}

impl Mode {
    pub fn radix(self) -> usize {
        match self {
            Mode::Ivs => 2,
            Mode::Bivs => 3,
        }
    }

    pub fn tile_count(self) -> u8 {
        match self {
            Mode::Ivs => 3,
            Mode::Bivs => 7,
        }
    }

    /// Number of bar states of length `p`, or `None` on overflow.
    pub fn state_count(self, p: usize) -> Option<usize> {
        self.radix().checked_pow(u32::try_from(p).ok()?)
    }

    pub fn tiles(self) -> impl Iterator<Item = Tile> {
        (1..=self.tile_count()).map(move |id| Tile { mode: self, id })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Ivs => "ivs",
            Mode::Bivs => "bivs",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ivs" => Ok(Mode::Ivs),
            "bivs" => Ok(Mode::Bivs),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// A bar state: one digit per column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarState {
    mode: Mode,
    // columns[i] is the digit under/over column i, leftmost first.
    columns: Vec<u8>,
}

impl BarState {
    /// The all-zero state of length `p`.
    pub fn trivial(mode: Mode, p: usize) -> Self {
        BarState {
            mode,
            columns: vec![0; p],
        }
    }

    /// Builds a state from per-column digits, leftmost column first.
    pub fn from_columns(mode: Mode, columns: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = columns.iter().find(|&&d| d as usize >= mode.radix()) {
            return Err(Error::Parse(format!("digit {bad} invalid in {mode} mode")));
        }
        Ok(BarState { mode, columns })
    }

    /// The `index`-th state (1-based) of length `p`.
    pub fn from_index(mode: Mode, p: usize, index: usize) -> Result<Self> {
        let max = mode.state_count(p).ok_or(Error::CapExceeded {
            what: "bar state length",
            value: p,
            cap: 40,
        })?;
        if index == 0 || index > max {
            return Err(Error::InvalidIndex { index, max });
        }
        Ok(BarState {
            mode,
            columns: digits_of(mode, p, index - 1),
        })
    }

    /// Parses the right-to-left reading, e.g. `"1010"`.
    pub fn parse(mode: Mode, reading: &str) -> Result<Self> {
        let columns = reading
            .chars()
            .rev()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("bad state digit {ch:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BarState::from_columns(mode, columns)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Digit at column `i` (0 = leftmost).
    pub fn column(&self, i: usize) -> u8 {
        self.columns[i]
    }

    pub fn columns(&self) -> &[u8] {
        &self.columns
    }

    /// Numeral value with the rightmost column most significant.
    pub fn value(&self) -> usize {
        self.columns
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.mode.radix() + d as usize)
    }

    /// 1-based canonical index.
    pub fn index(&self) -> usize {
        self.value() + 1
    }

    pub fn is_trivial(&self) -> bool {
        self.columns.iter().all(|&d| d == 0)
    }

    /// Number of columns holding digit `digit`.
    pub fn count_digit(&self, digit: u8) -> u32 {
        self.columns.iter().filter(|&&d| d == digit).count() as u32
    }
}

impl fmt::Display for BarState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.columns.iter().rev() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Per-column digits of the state with 0-based value `value`.
pub(crate) fn digits_of(mode: Mode, p: usize, mut value: usize) -> Vec<u8> {
    let radix = mode.radix();
    (0..p)
        .map(|_| {
            let d = (value % radix) as u8;
            value /= radix;
            d
        })
        .collect()
}

/// Whether a bar mosaic with bottom state `s` and top state `t` exists.
///
/// IVS: the supports are disjoint and neither state has two adjacent ones.
/// BIVS: no column has `s = t != 0`, and neither state has two adjacent
/// equal nonzero digits. Such a bar mosaic, when it exists, is unique.
///
/// # Panics
/// If the states differ in length or mode.
pub fn row_compatible(s: &BarState, t: &BarState) -> bool {
    assert_eq!(s.mode, t.mode, "bar states of different modes");
    assert_eq!(s.len(), t.len(), "bar states of different lengths");
    columns_compatible(&s.columns, &t.columns)
}

pub(crate) fn columns_compatible(s: &[u8], t: &[u8]) -> bool {
    let no_equal_neighbours = |x: &[u8]| x.windows(2).all(|w| w[0] == 0 || w[0] != w[1]);
    s.iter().zip(t).all(|(&a, &b)| a == 0 || a != b)
        && no_equal_neighbours(s)
        && no_equal_neighbours(t)
}

/// IVS compatibility on raw binary values (bit `i` = column `i`).
#[inline]
pub(crate) fn ivs_values_compatible(s: usize, t: usize) -> bool {
    s & t == 0 && s & (s >> 1) == 0 && t & (t >> 1) == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Bottom,
    Top,
    Left,
    Right,
}

/// Edge labels and weight of one tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TileLabels {
    pub left: char,
    pub right: char,
    pub bottom: u8,
    pub top: u8,
    /// Exponents of the weight monomial: `z^x_exp` for IVS, `x^x_exp y^y_exp` for BIVS.
    pub x_exp: u32,
    pub y_exp: u32,
}

const fn labels(letter: char, bottom: u8, top: u8, x_exp: u32, y_exp: u32) -> TileLabels {
    TileLabels {
        left: letter,
        right: letter,
        bottom,
        top,
        x_exp,
        y_exp,
    }
}

const IVS_TILES: [TileLabels; 3] = [
    labels('a', 0, 0, 0, 0),
    labels('b', 1, 0, 1, 0),
    labels('c', 0, 1, 0, 0),
];

const BIVS_TILES: [TileLabels; 7] = [
    labels('a', 0, 0, 0, 0),
    labels('b', 0, 1, 0, 0),
    labels('c', 0, 2, 0, 0),
    labels('d', 1, 0, 1, 0),
    labels('e', 1, 2, 1, 0),
    labels('f', 2, 0, 0, 1),
    labels('g', 2, 1, 0, 1),
];

const BIVS_FORBIDDEN: [(char, char); 14] = [
    ('b', 'b'),
    ('c', 'c'),
    ('d', 'd'),
    ('e', 'e'),
    ('f', 'f'),
    ('g', 'g'),
    ('b', 'g'),
    ('g', 'b'),
    ('c', 'e'),
    ('e', 'c'),
    ('d', 'e'),
    ('e', 'd'),
    ('f', 'g'),
    ('g', 'f'),
];

/// Whether a tile whose right edge reads `left` may sit left of a tile
/// whose left edge reads `right`.
pub fn horizontal_allowed(mode: Mode, left: char, right: char) -> bool {
    match mode {
        Mode::Ivs => !matches!((left, right), ('b', 'b') | ('c', 'c')),
        Mode::Bivs => !BIVS_FORBIDDEN.contains(&(left, right)),
    }
}

/// A mosaic tile `T_id`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tile {
    mode: Mode,
    id: u8,
}

impl Tile {
    pub fn new(mode: Mode, id: u8) -> Result<Self> {
        if id == 0 || id > mode.tile_count() {
            return Err(Error::Parse(format!("no tile T{id} in {mode} mode")));
        }
        Ok(Tile { mode, id })
    }

    pub fn id(self) -> u8 {
        self.id
    }

    pub fn mode(self) -> Mode {
        self.mode
    }

    pub fn labels(self) -> TileLabels {
        match self.mode {
            Mode::Ivs => IVS_TILES[self.id as usize - 1],
            Mode::Bivs => BIVS_TILES[self.id as usize - 1],
        }
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.id)
    }
}

/// Rectangular array of tiles, stored column-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mosaic {
    mode: Mode,
    width: usize,
    height: usize,
    tiles: Vec<Tile>,
}

impl Mosaic {
    /// Builds a mosaic from tile ids given column by column (left to
    /// right), each column listed bottom to top.
    pub fn from_columns(mode: Mode, columns: &[Vec<u8>]) -> Result<Self> {
        let width = columns.len();
        let height = columns.first().map_or(0, Vec::len);
        if width == 0 || height == 0 {
            return Err(Error::EmptyGrid {
                m: width,
                n: height,
            });
        }
        if columns.iter().any(|c| c.len() != height) {
            return Err(Error::Parse("ragged mosaic columns".into()));
        }
        let tiles = columns
            .iter()
            .flatten()
            .map(|&id| Tile::new(mode, id))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mosaic {
            mode,
            width,
            height,
            tiles,
        })
    }

    /// Builds a mosaic from a flat column-major list of tiles.
    pub fn from_tiles(mode: Mode, width: usize, height: usize, tiles: Vec<Tile>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyGrid {
                m: width,
                n: height,
            });
        }
        if tiles.len() != width * height || tiles.iter().any(|t| t.mode != mode) {
            return Err(Error::Parse("tile list does not fit the mosaic".into()));
        }
        Ok(Mosaic {
            mode,
            width,
            height,
            tiles,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Number of columns `m`.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of rows `n`.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Tile at column `i`, row `j` (both 0-based, from the bottom-left).
    pub fn tile(&self, i: usize, j: usize) -> Tile {
        self.tiles[i * self.height + j]
    }

    pub fn bottom_state(&self) -> BarState {
        BarState {
            mode: self.mode,
            columns: (0..self.width)
                .map(|i| self.tile(i, 0).labels().bottom)
                .collect(),
        }
    }

    pub fn top_state(&self) -> BarState {
        BarState {
            mode: self.mode,
            columns: (0..self.width)
                .map(|i| self.tile(i, self.height - 1).labels().top)
                .collect(),
        }
    }

    /// Letters on the left boundary, read top to bottom.
    pub fn left_state(&self) -> String {
        (0..self.height)
            .rev()
            .map(|j| self.tile(0, j).labels().left)
            .collect()
    }

    /// Letters on the right boundary, read top to bottom.
    pub fn right_state(&self) -> String {
        (0..self.height)
            .rev()
            .map(|j| self.tile(self.width - 1, j).labels().right)
            .collect()
    }

    /// Reads the state off one side: bar states for bottom/top, letter
    /// strings for left/right.
    pub fn read_state(&self, side: Side) -> String {
        match side {
            Side::Bottom => self.bottom_state().to_string(),
            Side::Top => self.top_state().to_string(),
            Side::Left => self.left_state(),
            Side::Right => self.right_state(),
        }
    }

    pub fn is_suitably_adjacent(&self) -> bool {
        for i in 0..self.width {
            for j in 0..self.height {
                let here = self.tile(i, j).labels();
                if i + 1 < self.width {
                    let right = self.tile(i + 1, j).labels();
                    if !horizontal_allowed(self.mode, here.right, right.left) {
                        return false;
                    }
                }
                if j + 1 < self.height && here.top != self.tile(i, j + 1).labels().bottom {
                    return false;
                }
            }
        }
        true
    }

    /// Suitably adjacent with an all-zero top state: the mosaics in
    /// one-to-one correspondence with (bipartite) independent vertex sets.
    pub fn is_ivs_mosaic(&self) -> bool {
        self.is_suitably_adjacent() && self.top_state().is_trivial()
    }

    /// `(x_exp, y_exp)` summed over all tiles.
    pub fn weight_exponents(&self) -> (u32, u32) {
        self.tiles.iter().fold((0, 0), |(a, b), t| {
            let l = t.labels();
            (a + l.x_exp, b + l.y_exp)
        })
    }

    /// `z^(#T2)` in IVS mode, `x^(#T4 + #T5) y^(#T6 + #T7)` in BIVS mode.
    pub fn weight(&self) -> GenFunc {
        let (a, b) = self.weight_exponents();
        match self.mode {
            Mode::Ivs => GenFunc::Ivs(UniPoly::monomial(a, Natural::one())),
            Mode::Bivs => GenFunc::Bivs(BiPoly::monomial(a, b, Natural::one())),
        }
    }

    /// Parses the debug text format: one row per line, top row first.
    pub fn parse(mode: Mode, text: &str) -> Result<Self> {
        let rows: Vec<Vec<u8>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| {
                        tok.strip_prefix('T')
                            .and_then(|d| d.parse().ok())
                            .ok_or_else(|| Error::Parse(format!("bad tile {tok:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::Parse("ragged mosaic rows".into()));
        }
        let columns: Vec<Vec<u8>> = (0..width)
            .map(|i| rows.iter().rev().map(|r| r[i]).collect())
            .collect();
        Mosaic::from_columns(mode, &columns)
    }
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in (0..self.height).rev() {
            let row: Vec<String> = (0..self.width)
                .map(|i| self.tile(i, j).to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
