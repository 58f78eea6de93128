//! The L-chain families, their hooked variant and the Drummond-Cole
//! extension `DCL_n`, with checks of their claimed values.
//!
//! Geometry comes from tile lists in figure coordinates: `(x, y)` with the
//! origin at the bottom-left cell and `y` growing upward. A listed tile is
//! a filled cell. Boards can be taller than eight rows, so they are held as
//! [`TallGrid`]; components that fit in 8×8 are evaluated as ordinary
//! [`GridPosition`]s, larger ones by direct recursion.
//!
//! The third column of `L_n^∪` is only drawn for its first and last few
//! rows; the filled run in between is extended to every row up to `2n+1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use hashbrown::HashMap;
use rustc_hash::FxBuildHasher;
use thiserror::Error;

use crate::domineering::{evaluate, GridPosition, TranspositionTable, MAX_SIDE};
use crate::dyadic::Dyadic;
use crate::game::{CanonicalForm, GameStore};

pub const MAX_TALL_HEIGHT: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    L,
    LPlus,
    LMinus,
    LCup,
    Dcl,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] =
        [FamilyKind::L, FamilyKind::LPlus, FamilyKind::LMinus, FamilyKind::LCup, FamilyKind::Dcl];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::L => "L",
            FamilyKind::LPlus => "L+",
            FamilyKind::LMinus => "L-",
            FamilyKind::LCup => "Lcup",
            FamilyKind::Dcl => "DCL",
        }
    }

    /// Board height for parameter `n`.
    pub fn height(self, n: usize) -> usize {
        match self {
            FamilyKind::L => 2 * n,
            FamilyKind::LPlus => 2 * n + 1,
            FamilyKind::LMinus => 2 * n - 1,
            FamilyKind::LCup | FamilyKind::Dcl => 2 * n + 4,
        }
    }

    pub fn width(self) -> usize {
        match self {
            FamilyKind::L | FamilyKind::LPlus | FamilyKind::LMinus => 2,
            FamilyKind::LCup => 3,
            FamilyKind::Dcl => 5,
        }
    }

    /// The claimed value, in value notation.
    pub fn expected_value(self, n: usize) -> &'static str {
        let even = n.is_multiple_of(2);
        match (self, even) {
            (FamilyKind::L | FamilyKind::LPlus | FamilyKind::LMinus, true) => "0",
            (FamilyKind::L | FamilyKind::LPlus | FamilyKind::LMinus, false) => "*",
            (FamilyKind::LCup, true) => "2*",
            (FamilyKind::LCup, false) => "2",
            (FamilyKind::Dcl, true) => "±(2*)",
            (FamilyKind::Dcl, false) => "±2",
        }
    }

    /// The claimed temperature, where one is claimed.
    pub fn expected_temperature(self) -> Option<Dyadic> {
        (self == FamilyKind::Dcl).then(|| Dyadic::integer(2))
    }

    pub fn max_n(self) -> usize {
        (1..).take_while(|&n| self.height(n) <= MAX_TALL_HEIGHT).last().unwrap_or(0)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}; expected one of L, L+, L-, Lcup, DCL")]
    UnknownKind(String),
    #[error("{kind}_{n} is not defined; n must be between 1 and {max}")]
    InvalidN { kind: FamilyKind, n: usize, max: usize },
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| FamilyError::UnknownKind(s.into()))
    }
}

// Figure tile lists.

/// One L-shape of the chains: a 2×2 block with its lower right cell filled.
const L_BLOCK: &[(usize, usize)] = &[(1, 0)];

/// `L_n^∪` above its `n` blocks (rows `2n` to `2n+3`, shifted to start at
/// 0), and the column-0 fill that runs beside the blocks.
const LCUP_TOP: &[(usize, usize)] = &[(2, 0), (0, 0), (0, 1), (2, 1), (1, 3)];

/// Rows `2n+4-5 ..` of `DCL_n`: the Drummond-Cole cap, with `y = 0` the
/// row where the chain begins.
const DCL_CAP: &[(usize, usize)] = &[(0, 4), (1, 4), (3, 4), (0, 3), (1, 3), (4, 2), (0, 1), (4, 1), (2, 0)];

/// One link of the `DCL_n` chain, below the cap: `y = 1` is the link's top
/// row (absent for the first link, whose top is the cap's bottom row).
const DCL_LINK: &[(usize, usize)] = &[(0, 1), (1, 1), (2, 1), (0, 0), (1, 0), (2, 0), (4, 0)];

/// A board of width at most 8 and height at most 32.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TallGrid {
    width: u8,
    height: u8,
    rows: [u8; MAX_TALL_HEIGHT],
}

impl TallGrid {
    /// Board from filled tiles in figure coordinates.
    pub fn from_tiles(width: usize, height: usize, tiles: &[(usize, usize)]) -> Self {
        assert!((1..=MAX_SIDE).contains(&width) && (1..=MAX_TALL_HEIGHT).contains(&height));
        let mut rows = [0u8; MAX_TALL_HEIGHT];
        for &(x, y) in tiles {
            assert!(x < width && y < height, "tile ({x}, {y}) outside {width}x{height}");
            rows[height - 1 - y] |= 1 << x;
        }
        Self { width: width as u8, height: height as u8, rows }
    }

    pub fn width(&self) -> usize {
        usize::from(self.width)
    }

    pub fn height(&self) -> usize {
        usize::from(self.height)
    }

    fn full_row(&self) -> u8 {
        ((1u16 << self.width) - 1) as u8
    }

    fn empty_row(&self, r: usize) -> u8 {
        !self.rows[r] & self.full_row()
    }

    pub fn is_filled(&self, column: usize, row: usize) -> bool {
        self.rows[row] >> column & 1 == 1
    }

    pub fn empty_count(&self) -> u32 {
        (0..self.height()).map(|r| self.empty_row(r).count_ones()).sum()
    }

    pub fn to_position(&self) -> Option<GridPosition> {
        if self.height() > MAX_SIDE {
            return None;
        }
        let w = self.width();
        let filled = (0..self.height()).fold(0u64, |acc, r| acc | u64::from(self.rows[r]) << (r * w));
        GridPosition::new(w, self.height(), filled).ok()
    }

    fn left_moves(&self) -> Vec<Self> {
        let mut out = Vec::new();
        for r in 0..self.height().saturating_sub(1) {
            let pairs = self.empty_row(r) & self.empty_row(r + 1);
            for c in 0..self.width() {
                if pairs >> c & 1 == 1 {
                    let mut next = *self;
                    next.rows[r] |= 1 << c;
                    next.rows[r + 1] |= 1 << c;
                    out.push(next);
                }
            }
        }
        out
    }

    fn right_moves(&self) -> Vec<Self> {
        let mut out = Vec::new();
        for r in 0..self.height() {
            let e = self.empty_row(r);
            let pairs = e & (e >> 1);
            for c in 0..self.width() - 1 {
                if pairs >> c & 1 == 1 {
                    let mut next = *self;
                    next.rows[r] |= 3 << c;
                    out.push(next);
                }
            }
        }
        out
    }

    /// Connected empty regions, each cropped to its bounding box.
    pub fn decompose(&self) -> Vec<Self> {
        let (w, h) = (self.width(), self.height());
        let mut seen = [0u8; MAX_TALL_HEIGHT];
        let mut out = Vec::new();
        for r in 0..h {
            for c in 0..w {
                if self.is_filled(c, r) || seen[r] >> c & 1 == 1 {
                    continue;
                }
                let mut region = [0u8; MAX_TALL_HEIGHT];
                let mut stack = alloc::vec![(r, c)];
                seen[r] |= 1 << c;
                while let Some((y, x)) = stack.pop() {
                    region[y] |= 1 << x;
                    let mut visit = |y: usize, x: usize| {
                        if !self.is_filled(x, y) && seen[y] >> x & 1 == 0 {
                            seen[y] |= 1 << x;
                            stack.push((y, x));
                        }
                    };
                    if y > 0 {
                        visit(y - 1, x);
                    }
                    if y + 1 < h {
                        visit(y + 1, x);
                    }
                    if x > 0 {
                        visit(y, x - 1);
                    }
                    if x + 1 < w {
                        visit(y, x + 1);
                    }
                }
                out.push(Self::cropped(&region, h));
            }
        }
        out
    }

    /// The bounding box of the empty `region`, everything else filled.
    fn cropped(region: &[u8; MAX_TALL_HEIGHT], height: usize) -> Self {
        let used: Vec<usize> = (0..height).filter(|&r| region[r] != 0).collect();
        let (r0, r1) = (used[0], used[used.len() - 1]);
        let columns = used.iter().fold(0u8, |acc, &r| acc | region[r]);
        let c0 = columns.trailing_zeros() as usize;
        let nw = 8 - columns.leading_zeros() as usize - c0;
        let full = ((1u16 << nw) - 1) as u8;
        let mut rows = [0u8; MAX_TALL_HEIGHT];
        for (i, r) in (r0..=r1).enumerate() {
            rows[i] = !(region[r] >> c0) & full;
        }
        Self { width: nw as u8, height: (r1 - r0 + 1) as u8, rows }
    }

    fn flipped_vertically(&self) -> Self {
        let mut rows = self.rows;
        rows[..self.height()].reverse();
        Self { rows, ..*self }
    }

    fn flipped_horizontally(&self) -> Self {
        let mut rows = self.rows;
        let shift = 8 - self.width();
        for row in rows.iter_mut().take(self.height()) {
            *row = row.reverse_bits() >> shift;
        }
        Self { rows, ..*self }
    }

    /// Least of the value-preserving images; assumes a cropped board.
    fn normalized(&self) -> Self {
        let h = self.flipped_horizontally();
        [*self, h, self.flipped_vertically(), h.flipped_vertically()].into_iter().min().unwrap()
    }
}

impl fmt::Display for TallGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
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

impl fmt::Debug for TallGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TallGrid({self})")
    }
}

pub fn build_family(kind: FamilyKind, n: usize) -> Result<TallGrid, FamilyError> {
    let max = kind.max_n();
    if n == 0 || n > max {
        return Err(FamilyError::InvalidN { kind, n, max });
    }
    let (w, h) = (kind.width(), kind.height(n));
    let mut tiles = Vec::new();
    let blocks = |count: usize, first_y: usize, tiles: &mut Vec<(usize, usize)>| {
        for k in 0..count {
            tiles.extend(L_BLOCK.iter().map(|&(x, y)| (x, y + first_y + 2 * k)));
        }
    };
    match kind {
        FamilyKind::L => blocks(n, 0, &mut tiles),
        FamilyKind::LPlus => blocks(n + 1, 0, &mut tiles),
        // L_n without its bottom row: the first block loses its tile too.
        FamilyKind::LMinus => blocks(n - 1, 1, &mut tiles),
        FamilyKind::LCup => {
            for k in 0..n {
                tiles.extend(L_BLOCK.iter().map(|&(x, y)| (x + 1, y + 2 * k)));
            }
            tiles.extend((0..2 * n).map(|y| (0, y)));
            tiles.extend(LCUP_TOP.iter().map(|&(x, y)| (x, y + 2 * n)));
        }
        FamilyKind::Dcl => {
            let chain_rows = 2 * n - 1;
            tiles.extend(DCL_CAP.iter().map(|&(x, y)| (x, y + chain_rows)));
            for k in 0..n {
                let bottom = chain_rows - 1 - 2 * k;
                for &(x, y) in DCL_LINK {
                    if y == 1 && k == 0 {
                        continue;
                    }
                    tiles.push((x, bottom + y));
                }
            }
        }
    }
    Ok(TallGrid::from_tiles(w, h, &tiles))
}

/// Evaluates tall boards; components of at most eight rows go through the
/// shared transposition table.
pub struct TallEvaluator<'a> {
    store: &'a GameStore,
    table: &'a TranspositionTable,
    memo: HashMap<TallGrid, CanonicalForm, FxBuildHasher>,
}

impl<'a> TallEvaluator<'a> {
    pub fn new(store: &'a GameStore, table: &'a TranspositionTable) -> Self {
        Self { store, table, memo: HashMap::default() }
    }

    pub fn evaluate(&mut self, g: &TallGrid) -> CanonicalForm {
        let mut parts = g.decompose();
        parts.sort_by_key(|c| c.empty_count());
        let values: Vec<_> = parts.iter().map(|c| self.component(c)).collect();
        self.store.sum(values)
    }

    fn component(&mut self, c: &TallGrid) -> CanonicalForm {
        if let Some(p) = c.to_position() {
            return evaluate(self.store, self.table, &p);
        }
        self.component_uncached(c)
    }

    /// Recursion on the tall board itself, whatever its height.
    fn component_uncached(&mut self, c: &TallGrid) -> CanonicalForm {
        let key = c.normalized();
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let left: Vec<_> = key.left_moves().iter().map(|m| self.evaluate(m)).collect();
        let right: Vec<_> = key.right_moves().iter().map(|m| self.evaluate(m)).collect();
        let v = self.store.construct(&left, &right);
        self.memo.insert(key, v);
        v
    }
}

/// One family member: claimed against computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub kind: FamilyKind,
    pub n: usize,
    pub grid: String,
    pub expected: &'static str,
    pub computed: String,
    pub temperature: Dyadic,
    pub expected_temperature: Option<Dyadic>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.computed && self.expected_temperature.is_none_or(|t| t == self.temperature)
    }
}

pub fn check_family(
    store: &GameStore,
    table: &TranspositionTable,
    kind: FamilyKind,
    n_max: usize,
) -> Result<Vec<FamilyCheck>, FamilyError> {
    let mut eval = TallEvaluator::new(store, table);
    (1..=n_max)
        .map(|n| {
            let grid = build_family(kind, n)?;
            let g = eval.evaluate(&grid);
            Ok(FamilyCheck {
                kind,
                n,
                grid: alloc::format!("{grid}"),
                expected: kind.expected_value(n),
                computed: store.display(g),
                temperature: store.temperature(g),
                expected_temperature: kind.expected_temperature(),
            })
        })
        .collect()
}

/// `L_n`, `L_n^+` and `L_n^-` for `n = 1..=n_max`.
pub fn verify_lemma1(
    store: &GameStore,
    table: &TranspositionTable,
    n_max: usize,
) -> Result<Vec<FamilyCheck>, FamilyError> {
    let mut out = Vec::new();
    for kind in [FamilyKind::L, FamilyKind::LPlus, FamilyKind::LMinus] {
        out.extend(check_family(store, table, kind, n_max)?);
    }
    Ok(out)
}

/// `L_n^∪` for `n = 1..=n_max`.
pub fn verify_lemma2(
    store: &GameStore,
    table: &TranspositionTable,
    n_max: usize,
) -> Result<Vec<FamilyCheck>, FamilyError> {
    check_family(store, table, FamilyKind::LCup, n_max)
}

/// `DCL_n` for `n = 1..=n_max`, values and temperature 2.
pub fn verify_proposition(
    store: &GameStore,
    table: &TranspositionTable,
    n_max: usize,
) -> Result<Vec<FamilyCheck>, FamilyError> {
    check_family(store, table, FamilyKind::Dcl, n_max)
}

/// Named boards from the text.
pub mod fixtures {
    pub const DRUMMOND_COLE: &str = "##.#.|##...|....#|#...#|..###";
    pub const HOOK: &str = "##|..|.#|..|##";
    pub const HOOK_WITH_TWO_SQUARES: &str = ".#.|...|#.#|#.#";
    /// Contains the hook but has temperature 0.
    pub const COLD_HOOK_6X6: &str = "#.#.##|#...##|......|#.#..#|#.#...|#.####";
}
