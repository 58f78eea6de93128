//! Domineering positions on boards of at most 8×8 cells.
//!
//! A position is a width, a height and a mask of filled cells. Cell
//! `row * width + column` is bit `row * width + column`, row 0 at the top.
//! Left places vertical dominoes, Right horizontal ones.
//!
//! Grid strings list rows top to bottom separated by `|`, with `.` for an
//! empty cell and `#` for a filled one: `"##.#.|##...|....#|#...#|..###"`.

mod eval;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::game::ExplicitGame;

pub use eval::{evaluate, grid_temperature, TranspositionTable};

pub const MAX_SIDE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("empty grid string")]
    Empty,
    #[error("row {row} has {found} cells, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("illegal character {ch:?} in row {row}, column {column}")]
    IllegalChar { ch: char, row: usize, column: usize },
    #[error("grid is {width}x{height}; both sides must be between 1 and 8")]
    Dimensions { width: usize, height: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPosition {
    width: u8,
    height: u8,
    filled: u64,
}

fn full_mask(cells: usize) -> u64 {
    if cells >= 64 {
        u64::MAX
    } else {
        (1u64 << cells) - 1
    }
}

impl GridPosition {
    pub fn new(width: usize, height: usize, filled: u64) -> Result<Self, GridError> {
        if !(1..=MAX_SIDE).contains(&width) || !(1..=MAX_SIDE).contains(&height) {
            return Err(GridError::Dimensions { width, height });
        }
        let filled = filled & full_mask(width * height);
        Ok(Self { width: width as u8, height: height as u8, filled })
    }

    pub fn empty(width: usize, height: usize) -> Result<Self, GridError> {
        Self::new(width, height, 0)
    }

    /// Builds from top-to-bottom rows, bit `c` of a row being column `c`.
    fn from_rows(width: usize, height: usize, rows: &[u8]) -> Self {
        let filled = rows[..height]
            .iter()
            .enumerate()
            .fold(0u64, |acc, (r, &row)| acc | (u64::from(row) << (r * width)));
        Self { width: width as u8, height: height as u8, filled }
    }

    fn rows(&self) -> [u8; MAX_SIDE] {
        let w = self.width();
        let mut rows = [0u8; MAX_SIDE];
        for (r, row) in rows.iter_mut().enumerate().take(self.height()) {
            *row = ((self.filled >> (r * w)) & full_mask(w)) as u8;
        }
        rows
    }

    pub fn width(&self) -> usize {
        usize::from(self.width)
    }

    pub fn height(&self) -> usize {
        usize::from(self.height)
    }

    pub fn cells(&self) -> usize {
        self.width() * self.height()
    }

    pub fn filled(&self) -> u64 {
        self.filled
    }

    pub fn empty_cells(&self) -> u64 {
        !self.filled & full_mask(self.cells())
    }

    pub fn empty_count(&self) -> u32 {
        self.empty_cells().count_ones()
    }

    pub fn filled_count(&self) -> u32 {
        self.filled.count_ones()
    }

    pub fn is_filled(&self, column: usize, row: usize) -> bool {
        self.filled >> (row * self.width() + column) & 1 == 1
    }

    fn column_mask(&self, column: usize) -> u64 {
        (0..self.height()).fold(0, |acc, r| acc | 1 << (r * self.width() + column))
    }

    fn with(&self, filled: u64) -> Self {
        Self { filled, ..*self }
    }

    /// Cells `i` whose vertical partner `i + width` is also empty.
    fn vertical_pairs(&self) -> u64 {
        let e = self.empty_cells();
        e & (e >> self.width())
    }

    /// Cells `i` whose horizontal partner `i + 1` is also empty.
    fn horizontal_pairs(&self) -> u64 {
        let e = self.empty_cells();
        e & (e >> 1) & !self.column_mask(self.width() - 1)
    }

    pub fn left_moves(&self) -> Vec<Self> {
        let w = self.width();
        bits(self.vertical_pairs()).map(|i| self.with(self.filled | 1 << i | 1 << (i + w))).collect()
    }

    pub fn right_moves(&self) -> Vec<Self> {
        bits(self.horizontal_pairs()).map(|i| self.with(self.filled | 3 << i)).collect()
    }

    pub fn left_move_count(&self) -> u32 {
        self.vertical_pairs().count_ones()
    }

    pub fn right_move_count(&self) -> u32 {
        self.horizontal_pairs().count_ones()
    }

    fn neighbours(&self, set: u64) -> u64 {
        let w = self.width();
        let spread =
            set << w | set >> w | (set << 1) & !self.column_mask(0) | (set >> 1) & !self.column_mask(w - 1);
        spread & self.empty_cells()
    }

    /// Empty cells 4-connected to `seed` (itself one).
    fn component_of(&self, seed: u64) -> u64 {
        let mut region = seed;
        loop {
            let grown = region | self.neighbours(region);
            if grown == region {
                return region;
            }
            region = grown;
        }
    }

    /// Number of connected empty regions, stopping early once above `limit`.
    pub fn component_count(&self, limit: u32) -> u32 {
        let mut rest = self.empty_cells();
        let mut count = 0;
        while rest != 0 && count <= limit {
            rest &= !self.component_of(rest & rest.wrapping_neg());
            count += 1;
        }
        count
    }

    /// Bounding box `(col0, row0, col1, row1)` (inclusive) of `set`.
    fn bounding_box(&self, set: u64) -> Option<(usize, usize, usize, usize)> {
        if set == 0 {
            return None;
        }
        let w = self.width();
        let (mut c0, mut r0, mut c1, mut r1) = (w, self.height(), 0, 0);
        for i in bits(set) {
            let (r, c) = (i / w, i % w);
            c0 = c0.min(c);
            c1 = c1.max(c);
            r0 = r0.min(r);
            r1 = r1.max(r);
        }
        Some((c0, r0, c1, r1))
    }

    /// The box around `keep`, with every other cell filled.
    fn cropped_to(&self, keep: u64) -> Self {
        let Some((c0, r0, c1, r1)) = self.bounding_box(keep) else {
            return Self { width: 1, height: 1, filled: 1 };
        };
        let (w, nw, nh) = (self.width(), c1 - c0 + 1, r1 - r0 + 1);
        let mut rows = [0u8; MAX_SIDE];
        for (r, row) in rows.iter_mut().enumerate().take(nh) {
            let slice = (keep >> ((r0 + r) * w + c0)) & full_mask(nw);
            *row = !(slice as u8) & full_mask(nw) as u8;
        }
        Self::from_rows(nw, nh, &rows)
    }

    /// True if the empty cells touch all four sides of the board.
    pub fn is_spanning(&self) -> bool {
        self.bounding_box(self.empty_cells()) == Some((0, 0, self.width() - 1, self.height() - 1))
    }

    /// Connected empty regions, each cropped to its bounding box, in order
    /// of their first cell. A full board has none.
    pub fn decompose(&self) -> Vec<Self> {
        let mut rest = self.empty_cells();
        let mut out = Vec::new();
        while rest != 0 {
            let region = self.component_of(rest & rest.wrapping_neg());
            rest &= !region;
            out.push(self.cropped_to(region));
        }
        out
    }

    /// Cropped to the empty cells; a full board becomes a filled 1×1.
    pub fn crop(&self) -> Self {
        self.cropped_to(self.empty_cells())
    }

    pub fn flip_horizontal(&self) -> Self {
        let shift = MAX_SIDE - self.width();
        let mut rows = self.rows();
        for row in rows.iter_mut().take(self.height()) {
            *row = row.reverse_bits() >> shift;
        }
        Self::from_rows(self.width(), self.height(), &rows)
    }

    pub fn flip_vertical(&self) -> Self {
        let mut rows = self.rows();
        rows[..self.height()].reverse();
        Self::from_rows(self.width(), self.height(), &rows)
    }

    pub fn rotate_180(&self) -> Self {
        self.flip_horizontal().flip_vertical()
    }

    /// Reflection in the main diagonal. Swaps the players' roles.
    pub fn transpose(&self) -> Self {
        let (w, h) = (self.width(), self.height());
        let mut filled = 0u64;
        for i in bits(self.filled) {
            let (r, c) = (i / w, i % w);
            filled |= 1 << (c * h + r);
        }
        Self { width: h as u8, height: w as u8, filled }
    }

    /// Clockwise quarter turn. Swaps the players' roles.
    pub fn rotate_90(&self) -> Self {
        self.transpose().flip_horizontal()
    }

    /// Identity, both flips and the half turn: the symmetries that keep
    /// the value.
    pub fn value_preserving_transforms(&self) -> [Self; 4] {
        let h = self.flip_horizontal();
        [*self, h, self.flip_vertical(), h.flip_vertical()]
    }

    /// All eight symmetries of the square.
    pub fn dihedral_transforms(&self) -> [Self; 8] {
        let [a, b, c, d] = self.value_preserving_transforms();
        [a, b, c, d, a.transpose(), b.transpose(), c.transpose(), d.transpose()]
    }

    /// Cache key: the crop, then the least of its value-preserving images.
    pub fn normalize(&self) -> Self {
        let cropped = self.crop();
        cropped.value_preserving_transforms().into_iter().min_by_key(|p| p.filled).unwrap()
    }

    /// Least of all eight images, ordered by `(width, height, mask)`. All of
    /// them share a temperature.
    pub fn symmetry_class(&self) -> Self {
        self.dihedral_transforms().into_iter().min().unwrap()
    }

    /// Least mask among the symmetries that keep the board's dimensions
    /// (all eight on a square board, four otherwise).
    pub fn representative(&self) -> Self {
        self.dihedral_transforms()
            .into_iter()
            .filter(|p| p.width == self.width)
            .min_by_key(|p| p.filled)
            .unwrap()
    }

    /// True if no symmetry of the board that keeps its dimensions gives a
    /// smaller mask. On square boards this is `symmetry_class() == self`.
    pub fn is_class_representative(&self) -> bool {
        self.dihedral_transforms().iter().filter(|p| p.width == self.width).all(|p| p.filled >= self.filled)
    }

    /// Whether the hook (`"##|..|.#|..|##"`, any orientation) appears, with
    /// cells beyond the edge counting as filled.
    pub fn contains_hook(&self) -> bool {
        const HOOK: &str = "##|..|.#|..|##";
        let hook: GridPosition = HOOK.parse().expect("hook pattern");
        let (w, h) = (self.width() as isize, self.height() as isize);
        hook.dihedral_transforms().iter().any(|pattern| {
            let (pw, ph) = (pattern.width() as isize, pattern.height() as isize);
            (-1..=h - ph + 1).any(|y| {
                (-1..=w - pw + 1).any(|x| {
                    (0..ph).all(|pr| {
                        (0..pw).all(|pc| {
                            let (r, c) = (y + pr, x + pc);
                            let on_board = (0..h).contains(&r) && (0..w).contains(&c);
                            let here_filled = !on_board || self.is_filled(c as usize, r as usize);
                            let want_filled = pattern.is_filled(pc as usize, pr as usize);
                            if want_filled {
                                here_filled
                            } else {
                                on_board && !here_filled
                            }
                        })
                    })
                })
            })
        })
    }
}

fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if set == 0 {
            return None;
        }
        let i = set.trailing_zeros() as usize;
        set &= set - 1;
        Some(i)
    })
}

impl FromStr for GridPosition {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, GridError> {
        if s.is_empty() {
            return Err(GridError::Empty);
        }
        let rows: Vec<&str> = s.split('|').collect();
        let width = rows[0].chars().count();
        let height = rows.len();
        if !(1..=MAX_SIDE).contains(&width) || !(1..=MAX_SIDE).contains(&height) {
            return Err(GridError::Dimensions { width, height });
        }
        let mut filled = 0u64;
        for (r, row) in rows.iter().enumerate() {
            let found = row.chars().count();
            if found != width {
                return Err(GridError::Ragged { row: r + 1, expected: width, found });
            }
            for (c, ch) in row.chars().enumerate() {
                match ch {
                    '.' => {}
                    '#' => filled |= 1 << (r * width + c),
                    _ => return Err(GridError::IllegalChar { ch, row: r + 1, column: c + 1 }),
                }
            }
        }
        Self::new(width, height, filled)
    }
}

impl fmt::Display for GridPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::with_capacity(self.cells() + self.height());
        for r in 0..self.height() {
            if r > 0 {
                out.push('|');
            }
            for c in 0..self.width() {
                out.push(if self.is_filled(c, r) { '#' } else { '.' });
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for GridPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GridPosition({self})")
    }
}

impl ExplicitGame for GridPosition {
    fn left_options(&self) -> Vec<Self> {
        self.left_moves()
    }

    fn right_options(&self) -> Vec<Self> {
        self.right_moves()
    }
}
