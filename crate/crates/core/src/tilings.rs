//! Dented half hexagons and their lozenge tilings.
//!
//! The region is the upper half of a hexagon drawn in the triangular
//! lattice: top side of length `x >= 1`, slanted sides of height `h`, with
//! `h` lateral dents (removed up-pointing triangles adjacent to the slanted
//! sides) split between the left and right side. Row `i` (1 at the top)
//! holds up-cells `up(i, j)` for `j = 1..=x+i` and down-cells `down(i, j)`
//! for `j = 1..=x+i-1`; a left dent removes `up(i, 1)`, a right dent removes
//! `up(i, x+i)`. The dent-count condition `|L| + |R| = h` is exactly the
//! balance of up- and down-cells, so it is enforced by the constructor.
//!
//! Every lozenge contains exactly one up-cell, so a tiling is stored as the
//! list of lozenges anchored at their up-cells. Vertical lozenges carry the
//! label `2j - i - x - 1`: zero on the vertical symmetry axis, constant down
//! stacks, increasing by one across adjacent columns. The weight of a tiling
//! is the product of `step_weight(label)` over its vertical lozenges.
//!
//! [`Region::tiling_to_paths`] realizes the weight-preserving bijection onto
//! nonintersecting lattice-path families by tracking lozenges across their
//! shared NE-direction edges: entering at a non-dented left row `l`, a
//! vertical lozenge is crossed as a Right step, a right-tilted lozenge as a
//! Down step, and the track leaves the region at a right dent. In grid
//! coordinates the path runs from `(x+l-1, x+l-1)` to `(x+r-1, 0)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lgv::EndpointConfig;
use crate::paths::{GridPoint, LatticePath, Step};
use crate::poly::LaurentPoly;
use crate::qseries::step_weight;

/// Default bound on the number of cells for tiling enumeration.
pub const DEFAULT_MAX_CELLS: usize = 200;

/// A unit triangle of the region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Up { row: u32, col: u32 },
    Down { row: u32, col: u32 },
}

/// The three lozenge orientations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LozengeKind {
    /// `{up(i, j), down(i+1, j)}`; the only weighted orientation.
    Vertical,
    /// `{up(i, j), down(i, j-1)}`.
    LeftTilted,
    /// `{up(i, j), down(i, j)}`.
    RightTilted,
}

/// A lozenge anchored at its unique up-cell `up(row, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lozenge {
    pub kind: LozengeKind,
    pub row: u32,
    pub col: u32,
}

impl Lozenge {
    /// The two paired cells.
    pub fn cells(&self) -> (Cell, Cell) {
        let up = Cell::Up {
            row: self.row,
            col: self.col,
        };
        let down = match self.kind {
            LozengeKind::Vertical => Cell::Down {
                row: self.row + 1,
                col: self.col,
            },
            LozengeKind::LeftTilted => Cell::Down {
                row: self.row,
                col: self.col - 1,
            },
            LozengeKind::RightTilted => Cell::Down {
                row: self.row,
                col: self.col,
            },
        };
        (up, down)
    }
}

/// A perfect pairing of the region's cells into lozenges, sorted by anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    lozenges: Vec<Lozenge>,
}

impl Tiling {
    pub fn lozenges(&self) -> &[Lozenge] {
        &self.lozenges
    }

    pub fn vertical_lozenges(&self) -> impl Iterator<Item = &Lozenge> {
        self.lozenges
            .iter()
            .filter(|l| l.kind == LozengeKind::Vertical)
    }
}

/// A half hexagon of top width `x` and slant height `h` with left dents `L`
/// and right dents `R`, `|L| + |R| = h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    x: u32,
    h: u32,
    left: BTreeSet<u32>,
    right: BTreeSet<u32>,
}

impl Region {
    pub fn new(
        x: u32,
        h: u32,
        left: impl IntoIterator<Item = u32>,
        right: impl IntoIterator<Item = u32>,
    ) -> Result<Self> {
        if x < 1 {
            return Err(Error::InvalidRegion("top width x must be >= 1".into()));
        }
        if x > 1_000_000 || h > 1_000_000 {
            return Err(Error::InvalidRegion(
                "x and h are limited to 1000000".into(),
            ));
        }
        let left_v: Vec<u32> = left.into_iter().collect();
        let right_v: Vec<u32> = right.into_iter().collect();
        let left: BTreeSet<u32> = left_v.iter().copied().collect();
        let right: BTreeSet<u32> = right_v.iter().copied().collect();
        if left.len() != left_v.len() || right.len() != right_v.len() {
            return Err(Error::InvalidRegion("duplicate dent row".into()));
        }
        for &r in left.iter().chain(right.iter()) {
            if r < 1 || r > h {
                return Err(Error::InvalidRegion(format!(
                    "dent row {} outside 1..={}",
                    r, h
                )));
            }
        }
        if left.len() + right.len() != h as usize {
            return Err(Error::InvalidRegion(format!(
                "need |L| + |R| = h, got {} + {} != {}",
                left.len(),
                right.len(),
                h
            )));
        }
        Ok(Region { x, h, left, right })
    }

    pub fn x(&self) -> u32 {
        self.x
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn left_dents(&self) -> impl Iterator<Item = u32> + '_ {
        self.left.iter().copied()
    }

    pub fn right_dents(&self) -> impl Iterator<Item = u32> + '_ {
        self.right.iter().copied()
    }

    pub fn has_left_dent(&self, row: u32) -> bool {
        self.left.contains(&row)
    }

    pub fn has_right_dent(&self, row: u32) -> bool {
        self.right.contains(&row)
    }

    /// Whether `up(row, col)` is a cell of the region (in range, not dented).
    pub fn up_exists(&self, row: u32, col: u32) -> bool {
        if row < 1 || row > self.h || col < 1 || col > self.x + row {
            return false;
        }
        if col == 1 && self.left.contains(&row) {
            return false;
        }
        if col == self.x + row && self.right.contains(&row) {
            return false;
        }
        true
    }

    /// Whether `down(row, col)` is a cell of the region.
    pub fn down_exists(&self, row: u32, col: u32) -> bool {
        row >= 1 && row <= self.h && col >= 1 && col < self.x + row
    }

    /// Number of cells (dents excluded).
    pub fn cell_count(&self) -> usize {
        let mut n = 0usize;
        for i in 1..=self.h {
            n += (self.x + i) as usize - 1; // down cells
            n += (self.x + i) as usize; // up cells
        }
        n - self.h as usize // dents
    }

    /// All cells in backtracking scan order: row-major, up before down at
    /// the same column position.
    fn scan_cells(&self) -> Vec<Cell> {
        let mut cells = Vec::with_capacity(self.cell_count());
        for row in 1..=self.h {
            for col in 1..=self.x + row {
                if self.up_exists(row, col) {
                    cells.push(Cell::Up { row, col });
                }
                if col < self.x + row {
                    cells.push(Cell::Down { row, col });
                }
            }
        }
        cells
    }

    /// Label of a vertical lozenge anchored at `up(row, col)`:
    /// `2*col - row - x - 1`.
    pub fn lozenge_label(&self, lozenge: &Lozenge) -> i64 {
        debug_assert_eq!(lozenge.kind, LozengeKind::Vertical);
        2 * lozenge.col as i64 - lozenge.row as i64 - self.x as i64 - 1
    }

    /// Labels of every position where a vertical lozenge can sit.
    pub fn admissible_vertical_labels(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for row in 1..self.h {
            for col in 1..=self.x + row {
                if self.up_exists(row, col) && self.down_exists(row + 1, col) {
                    out.push(2 * col as i64 - row as i64 - self.x as i64 - 1);
                }
            }
        }
        out
    }

    /// Weight of a tiling: product of `step_weight(label)` over its vertical
    /// lozenges; 1 when there is none.
    pub fn tiling_weight(&self, tiling: &Tiling) -> LaurentPoly {
        tiling
            .vertical_lozenges()
            .fold(LaurentPoly::one(), |acc, l| {
                &acc * &step_weight(self.lozenge_label(l))
            })
    }

    fn walk_tilings<F: FnMut(&Tiling) -> bool>(&self, max_cells: usize, mut f: F) -> Result<()> {
        let cells = self.scan_cells();
        if cells.len() > max_cells {
            return Err(Error::TooLarge {
                what: "region cells",
                actual: cells.len(),
                limit: max_cells,
            });
        }
        let index: HashMap<Cell, usize> =
            cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut state = Enumerator {
            region: self,
            cells,
            index,
            covered: Vec::new(),
            current: Vec::new(),
        };
        state.covered = vec![false; state.cells.len()];
        state.search(0, &mut f);
        Ok(())
    }

    /// Runs `f` on every tiling, in deterministic backtracking order.
    pub fn for_each_tiling<F: FnMut(&Tiling)>(&self, max_cells: usize, mut f: F) -> Result<()> {
        self.walk_tilings(max_cells, |t| {
            f(t);
            true
        })
    }

    /// The first tiling in backtracking order, if the region is tileable.
    pub fn first_tiling(&self, max_cells: usize) -> Result<Option<Tiling>> {
        let mut found = None;
        self.walk_tilings(max_cells, |t| {
            found = Some(t.clone());
            false
        })?;
        Ok(found)
    }

    /// All tilings of the region, with the default cell bound.
    pub fn enumerate_tilings(&self) -> Result<Vec<Tiling>> {
        self.enumerate_tilings_bounded(DEFAULT_MAX_CELLS)
    }

    pub fn enumerate_tilings_bounded(&self, max_cells: usize) -> Result<Vec<Tiling>> {
        let mut out = Vec::new();
        self.for_each_tiling(max_cells, |t| out.push(t.clone()))?;
        Ok(out)
    }

    /// Generating function of all tilings: the sum of tiling weights.
    pub fn gf_tilings(&self) -> Result<LaurentPoly> {
        self.gf_tilings_bounded(DEFAULT_MAX_CELLS)
    }

    pub fn gf_tilings_bounded(&self, max_cells: usize) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        self.for_each_tiling(max_cells, |t| {
            acc += &self.tiling_weight(t);
        })?;
        Ok(acc)
    }

    /// Endpoint configuration of the corresponding path families:
    /// starts `x + l - 1` over non-dented left rows `l`, ends `x + r - 1`
    /// over right-dent rows `r`.
    pub fn endpoints(&self) -> EndpointConfig {
        let starts: Vec<i64> = (1..=self.h)
            .filter(|l| !self.left.contains(l))
            .map(|l| (self.x + l - 1) as i64)
            .collect();
        let ends: Vec<i64> = self
            .right
            .iter()
            .map(|&r| (self.x + r - 1) as i64)
            .collect();
        EndpointConfig::new(starts, ends).expect("region endpoints are always a valid config")
    }

    /// The image of a tiling under the NE-edge tracking bijection, sorted by
    /// start column.
    pub fn tiling_to_paths(&self, tiling: &Tiling) -> Result<Vec<LatticePath>> {
        let kind_at: HashMap<(u32, u32), LozengeKind> = tiling
            .lozenges
            .iter()
            .map(|l| ((l.row, l.col), l.kind))
            .collect();
        let mut paths = Vec::new();
        for l in 1..=self.h {
            if self.left.contains(&l) {
                continue;
            }
            let mut row = l;
            let mut col = 1u32;
            let mut steps = Vec::new();
            loop {
                if col == self.x + row && self.right.contains(&row) {
                    break; // leaves the region through the right dent of `row`
                }
                match kind_at.get(&(row, col)) {
                    Some(LozengeKind::Vertical) => {
                        steps.push(Step::Right);
                        row += 1;
                        col += 1;
                    }
                    Some(LozengeKind::RightTilted) => {
                        steps.push(Step::Down);
                        col += 1;
                    }
                    Some(LozengeKind::LeftTilted) => {
                        return Err(Error::InvalidTiling(format!(
                            "NE tracking entered a left-tilted lozenge at up({}, {})",
                            row, col
                        )));
                    }
                    None => {
                        return Err(Error::InvalidTiling(format!(
                            "NE tracking left the region at up({}, {})",
                            row, col
                        )));
                    }
                }
            }
            let a = (self.x + l - 1) as i64;
            paths.push(LatticePath::new(GridPoint::new(a, a), steps));
        }
        Ok(paths)
    }
}

struct Enumerator<'a> {
    region: &'a Region,
    cells: Vec<Cell>,
    index: HashMap<Cell, usize>,
    covered: Vec<bool>,
    current: Vec<Lozenge>,
}

impl Enumerator<'_> {
    /// Returns false once the visitor asks to stop.
    fn search<F: FnMut(&Tiling) -> bool>(&mut self, from: usize, f: &mut F) -> bool {
        let mut idx = from;
        while idx < self.cells.len() && self.covered[idx] {
            idx += 1;
        }
        if idx == self.cells.len() {
            let mut lozenges = self.current.clone();
            lozenges.sort_by_key(|l| (l.row, l.col));
            return f(&Tiling { lozenges });
        }
        // Pair the first free cell with each of its <= 3 partners in turn.
        let candidates: [Option<Lozenge>; 3] = match self.cells[idx] {
            Cell::Up { row, col } => [
                (col >= 2).then_some(Lozenge {
                    kind: LozengeKind::LeftTilted,
                    row,
                    col,
                }),
                (col < self.region.x + row).then_some(Lozenge {
                    kind: LozengeKind::RightTilted,
                    row,
                    col,
                }),
                (row < self.region.h).then_some(Lozenge {
                    kind: LozengeKind::Vertical,
                    row,
                    col,
                }),
            ],
            Cell::Down { row, col } => [
                self.region.up_exists(row, col).then_some(Lozenge {
                    kind: LozengeKind::RightTilted,
                    row,
                    col,
                }),
                self.region.up_exists(row, col + 1).then_some(Lozenge {
                    kind: LozengeKind::LeftTilted,
                    row,
                    col: col + 1,
                }),
                (row >= 2 && self.region.up_exists(row - 1, col)).then_some(Lozenge {
                    kind: LozengeKind::Vertical,
                    row: row - 1,
                    col,
                }),
            ],
        };
        self.covered[idx] = true;
        let mut keep_going = true;
        for lozenge in candidates.into_iter().flatten() {
            if !keep_going {
                break;
            }
            let (up, down) = lozenge.cells();
            let partner = if self.cells[idx] == up { down } else { up };
            let Some(&pi) = self.index.get(&partner) else {
                continue;
            };
            if self.covered[pi] {
                continue;
            }
            self.covered[pi] = true;
            self.current.push(lozenge);
            keep_going = self.search(idx + 1, f);
            self.current.pop();
            self.covered[pi] = false;
        }
        self.covered[idx] = false;
        keep_going
    }
}

fn fmt_dent_list(f: &mut fmt::Formatter<'_>, set: &BTreeSet<u32>) -> fmt::Result {
    if set.is_empty() {
        return write!(f, "-");
    }
    for (i, r) in set.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{}", r)?;
    }
    Ok(())
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} h={} L=", self.x, self.h)?;
        fmt_dent_list(f, &self.left)?;
        write!(f, " R=")?;
        fmt_dent_list(f, &self.right)
    }
}

fn parse_dent_list(s: &str) -> Result<Vec<u32>> {
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.parse::<u32>()
                .map_err(|_| Error::InvalidRegion(format!("bad dent row {:?}", part)))
        })
        .collect()
}

impl FromStr for Region {
    type Err = Error;

    /// Parses the text form `x=<int> h=<int> L=<comma-list> R=<comma-list>`
    /// with `-` for an empty list.
    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::InvalidRegion(
                "expected \"x=<int> h=<int> L=<list> R=<list>\"".into(),
            ));
        }
        let take = |idx: usize, prefix: &str| -> Result<&str> {
            fields[idx].strip_prefix(prefix).ok_or_else(|| {
                Error::InvalidRegion(format!("field {} must start with {:?}", idx + 1, prefix))
            })
        };
        let x = take(0, "x=")?
            .parse::<u32>()
            .map_err(|_| Error::InvalidRegion("bad x".into()))?;
        let h = take(1, "h=")?
            .parse::<u32>()
            .map_err(|_| Error::InvalidRegion("bad h".into()))?;
        let left = parse_dent_list(take(2, "L=")?)?;
        let right = parse_dent_list(take(3, "R=")?)?;
        Region::new(x, h, left, right)
    }
}
