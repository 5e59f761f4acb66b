//! Mutable occupancy grid with apply/undo and fill-count queries.
//!
//! Only visible footprints occupy board state; transparent cells overlap
//! freely and may even fall outside the board, so legality checks touch
//! visible cells only.

use crate::cell::Cell;
use crate::shape::HoleyPolyomino;
use crate::Error;

/// State of one grid square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellState {
    Empty,
    /// Occupied by the placement at this index of the move stack.
    Visible(u16),
}

/// One tile instance: a symmetry image plus the board offset of the image's
/// normalized origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub transform: u8,
    pub row: i32,
    pub col: i32,
}

impl Placement {
    pub const fn new(transform: u8, row: i32, col: i32) -> Self {
        Placement { transform, row, col }
    }
}

#[derive(Debug, Clone)]
struct StackEntry {
    placement: Placement,
    prev_bound_rows: i32,
    prev_bound_cols: i32,
}

/// An N x M working grid with active rectangle bounds (R, C): the extents of
/// everything placed so far. Bounds are cached and stack-saved so undo is
/// O(footprint).
#[derive(Debug, Clone)]
pub struct Board {
    height: i32,
    width: i32,
    cells: Vec<CellState>,
    bound_rows: i32,
    bound_cols: i32,
    stack: Vec<StackEntry>,
    filled: usize,
}

impl Board {
    pub fn new(height: i32, width: i32) -> Self {
        assert!(height >= 1 && width >= 1, "board must have positive size");
        Board {
            height,
            width,
            cells: vec![CellState::Empty; (height * width) as usize],
            bound_rows: 0,
            bound_cols: 0,
            stack: Vec::new(),
            filled: 0,
        }
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    pub fn width(&self) -> i32 {
        self.width
    }

    /// Active bounds (R, C): one past the furthest placed visible cell.
    pub fn bounds(&self) -> (i32, i32) {
        (self.bound_rows, self.bound_cols)
    }

    pub fn move_count(&self) -> usize {
        self.stack.len()
    }

    pub fn moves(&self) -> impl Iterator<Item = Placement> + '_ {
        self.stack.iter().map(|e| e.placement)
    }

    /// Number of visible cells currently on the board.
    pub fn filled(&self) -> usize {
        self.filled
    }

    pub fn in_bounds(&self, cell: Cell) -> bool {
        cell.row >= 0 && cell.row < self.height && cell.col >= 0 && cell.col < self.width
    }

    pub fn state(&self, cell: Cell) -> CellState {
        self.cells[(cell.row * self.width + cell.col) as usize]
    }

    pub fn is_empty_cell(&self, cell: Cell) -> bool {
        self.state(cell) == CellState::Empty
    }

    fn footprint<'a>(
        &self,
        piece: &'a HoleyPolyomino,
        p: Placement,
    ) -> impl Iterator<Item = Cell> + 'a {
        let image = piece.visible().transform(p.transform);
        image
            .cells()
            .to_vec()
            .into_iter()
            .map(move |c| Cell::new(c.row + p.row, c.col + p.col))
    }

    /// True iff every footprint cell is inside the board and empty.
    pub fn is_legal(&self, piece: &HoleyPolyomino, p: Placement) -> bool {
        if p.transform >= 8 {
            return false;
        }
        self.footprint(piece, p)
            .all(|c| self.in_bounds(c) && self.is_empty_cell(c))
    }

    /// Every legal placement whose visible footprint covers `target`,
    /// ordered by transform id then anchor row-major.
    pub fn placements_covering(
        &self,
        target: Cell,
        piece: &HoleyPolyomino,
    ) -> Result<Vec<Placement>, Error> {
        if !self.in_bounds(target) || !self.is_empty_cell(target) {
            return Err(Error::BadTarget);
        }
        let mut out = Vec::new();
        for image in piece.symmetry_images() {
            for v in image.cells.iter() {
                let p = Placement::new(image.transform, target.row - v.row, target.col - v.col);
                if self.image_fits(&image, p) {
                    out.push(p);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    fn image_fits(&self, image: &crate::cell::SymmetryImage, p: Placement) -> bool {
        if p.row < 0
            || p.col < 0
            || p.row + image.height > self.height
            || p.col + image.width > self.width
        {
            return false;
        }
        image
            .cells
            .iter()
            .all(|c| self.is_empty_cell(Cell::new(c.row + p.row, c.col + p.col)))
    }

    /// |placements_covering| without building the list.
    pub fn fill_count(&self, target: Cell, piece: &HoleyPolyomino) -> Result<usize, Error> {
        Ok(self.count_covering_capped(target, &piece.symmetry_images(), usize::MAX)?)
    }

    /// Counts placements covering `target`, giving up once `cap` is reached.
    /// Used by the solver's most-constrained scan.
    pub(crate) fn count_covering_capped(
        &self,
        target: Cell,
        images: &[crate::cell::SymmetryImage],
        cap: usize,
    ) -> Result<usize, Error> {
        if !self.in_bounds(target) || !self.is_empty_cell(target) {
            return Err(Error::BadTarget);
        }
        let mut count = 0;
        for image in images {
            for v in image.cells.iter() {
                let p = Placement::new(image.transform, target.row - v.row, target.col - v.col);
                if self.image_fits(image, p) {
                    count += 1;
                    if count >= cap {
                        return Ok(count);
                    }
                }
            }
        }
        Ok(count)
    }

    /// Places a legal move, updating cells, bounds, and the stack.
    pub fn apply(&mut self, piece: &HoleyPolyomino, p: Placement) -> Result<(), Error> {
        if !self.is_legal(piece, p) {
            return Err(Error::IllegalPlacement(format!(
                "transform {} at ({},{})",
                p.transform, p.row, p.col
            )));
        }
        let index = self.stack.len() as u16;
        self.stack.push(StackEntry {
            placement: p,
            prev_bound_rows: self.bound_rows,
            prev_bound_cols: self.bound_cols,
        });
        let footprint: Vec<Cell> = self.footprint(piece, p).collect();
        for c in &footprint {
            self.cells[(c.row * self.width + c.col) as usize] = CellState::Visible(index);
            self.bound_rows = self.bound_rows.max(c.row + 1);
            self.bound_cols = self.bound_cols.max(c.col + 1);
        }
        self.filled += footprint.len();
        Ok(())
    }

    /// Reverts the last placement, restoring the board bit-for-bit.
    pub fn undo(&mut self, piece: &HoleyPolyomino) -> Result<(), Error> {
        let entry = self.stack.pop().ok_or(Error::EmptyMoveStack)?;
        let footprint: Vec<Cell> = self.footprint(piece, entry.placement).collect();
        for c in &footprint {
            self.cells[(c.row * self.width + c.col) as usize] = CellState::Empty;
        }
        self.filled -= footprint.len();
        self.bound_rows = entry.prev_bound_rows;
        self.bound_cols = entry.prev_bound_cols;
        Ok(())
    }

    /// Row-major first empty cell with row < R and col < C, or `None` when
    /// the active R x C rectangle is completely tiled (vacuously for an
    /// empty board).
    pub fn first_empty_in_bounds(&self) -> Option<Cell> {
        // the bounds region is full iff every placed cell is inside it,
        // which holds by construction, and the counts agree
        if self.filled == (self.bound_rows * self.bound_cols) as usize {
            return None;
        }
        for row in 0..self.bound_rows {
            for col in 0..self.bound_cols {
                let cell = Cell::new(row, col);
                if self.is_empty_cell(cell) {
                    return Some(cell);
                }
            }
        }
        None
    }

    /// Debug dump: '.' for empty, letters cycling by move index.
    pub fn ascii(&self) -> String {
        let mut out = String::with_capacity((self.height * (self.width + 1)) as usize);
        for row in 0..self.height {
            if row > 0 {
                out.push('\n');
            }
            for col in 0..self.width {
                out.push(match self.state(Cell::new(row, col)) {
                    CellState::Empty => '.',
                    CellState::Visible(i) => move_letter(i as usize),
                });
            }
        }
        out
    }
}

/// Letters 'a'..'z' then 'A'..'Z', cycling by index.
pub fn move_letter(index: usize) -> char {
    const LETTERS: &[u8; 52] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    LETTERS[index % 52] as char
}
