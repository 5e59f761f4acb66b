//! Grid cells and translation-normalized cell sets, with the eight square
//! symmetries used to treat shapes as free (rotations and reflections allowed).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A single grid square. Negative coordinates are fine in intermediate
/// computations; normalized sets start at (0, 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub fn neighbors(self) -> [Cell; 4] {
        [
            Cell::new(self.row - 1, self.col),
            Cell::new(self.row + 1, self.col),
            Cell::new(self.row, self.col - 1),
            Cell::new(self.row, self.col + 1),
        ]
    }
}

/// Number of symmetries of the square (4 rotations x optional reflection).
pub const TRANSFORM_COUNT: u8 = 8;

/// Applies transform `t` in 0..8 to a cell: ids 4..8 first reflect across the
/// vertical axis, then all ids rotate counter-clockwise `t % 4` times.
pub fn apply_transform(t: u8, cell: Cell) -> Cell {
    debug_assert!(t < TRANSFORM_COUNT);
    let mut r = cell.row;
    let mut c = if t >= 4 { -cell.col } else { cell.col };
    for _ in 0..(t % 4) {
        // counter-clockwise quarter turn: (r, c) -> (-c, r)
        let (nr, nc) = (-c, r);
        r = nr;
        c = nc;
    }
    Cell::new(r, c)
}

/// A non-empty, duplicate-free set of cells translated so that the minimum
/// row and minimum column are both zero. Cells are kept sorted row-major,
/// which doubles as the encoding used for canonical ordering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellSet {
    cells: Vec<Cell>,
}

impl CellSet {
    /// Builds a normalized set from arbitrary cells (duplicates collapse).
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self, Error> {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyShape);
        }
        let min_row = set.iter().map(|c| c.row).min().unwrap();
        let min_col = set.iter().map(|c| c.col).min().unwrap();
        let cells = set
            .into_iter()
            .map(|c| Cell::new(c.row - min_row, c.col - min_col))
            .collect();
        Ok(CellSet { cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    /// Height and width of the smallest rectangle containing the set.
    pub fn bounding_box(&self) -> (i32, i32) {
        let max_row = self.cells.iter().map(|c| c.row).max().unwrap();
        let max_col = self.cells.iter().map(|c| c.col).max().unwrap();
        (max_row + 1, max_col + 1)
    }

    /// True iff the cells form a single 4-adjacency component.
    pub fn is_connected(&self) -> bool {
        connected_over(&self.cells)
    }

    /// The normalized image of this set under transform `t`.
    pub fn transform(&self, t: u8) -> CellSet {
        CellSet::new(self.iter().map(|c| apply_transform(t, c))).unwrap()
    }

    /// All distinct normalized images under the 8 square symmetries, each
    /// tagged with the least transform id producing it, sorted by encoding.
    pub fn symmetry_images(&self) -> Vec<SymmetryImage> {
        let mut images: Vec<SymmetryImage> = Vec::with_capacity(8);
        for t in 0..TRANSFORM_COUNT {
            let cells = self.transform(t);
            if !images.iter().any(|img| img.cells == cells) {
                images.push(SymmetryImage::new(t, cells));
            }
        }
        images.sort_by(|a, b| a.cells.cmp(&b.cells));
        images
    }

    /// The least encoding among all symmetry images; constant on each
    /// congruence class and idempotent.
    pub fn canonical_form(&self) -> CellSet {
        (0..TRANSFORM_COUNT)
            .map(|t| self.transform(t))
            .min()
            .unwrap()
    }
}

/// True iff `cells` (not necessarily normalized or sorted) form one
/// 4-adjacency component. Shared by connectivity checks on raw unions.
pub fn connected_over(cells: &[Cell]) -> bool {
    if cells.is_empty() {
        return false;
    }
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut stack = vec![*set.iter().next().unwrap()];
    seen.insert(stack[0]);
    while let Some(cell) = stack.pop() {
        for nb in cell.neighbors() {
            if set.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == set.len()
}

/// One of the distinct congruent versions of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryImage {
    pub transform: u8,
    pub cells: CellSet,
    pub height: i32,
    pub width: i32,
}

impl SymmetryImage {
    fn new(transform: u8, cells: CellSet) -> Self {
        let (height, width) = cells.bounding_box();
        SymmetryImage {
            transform,
            cells,
            height,
            width,
        }
    }
}

impl fmt::Display for CellSet {
    /// Semicolon-separated "r,c" pairs, row-major: `0,0;0,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, cell) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{}", cell.row, cell.col)?;
        }
        Ok(())
    }
}

impl FromStr for CellSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut cells = Vec::new();
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (r, c) = part
                .split_once(',')
                .ok_or_else(|| Error::ParsePiece(s.to_string()))?;
            let row = r.trim().parse().map_err(|_| Error::ParsePiece(s.to_string()))?;
            let col = c.trim().parse().map_err(|_| Error::ParsePiece(s.to_string()))?;
            cells.push(Cell::new(row, col));
        }
        CellSet::new(cells)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(cells: &[(i32, i32)]) -> CellSet {
        CellSet::new(cells.iter().map(|&(r, c)| Cell::new(r, c))).unwrap()
    }

    #[test]
    fn normalize_translates_to_origin() {
        assert_eq!(cs(&[(2, 3), (2, 5)]), cs(&[(0, 0), (0, 2)]));
        assert_eq!(cs(&[(0, 0)]), cs(&[(0, 0)]));
        assert_eq!(cs(&[(-1, 4), (0, 5)]), cs(&[(0, 0), (1, 1)]));
    }

    #[test]
    fn normalize_rejects_empty() {
        assert!(matches!(CellSet::new([]), Err(Error::EmptyShape)));
    }

    #[test]
    fn bounding_boxes() {
        assert_eq!(cs(&[(0, 0), (0, 2)]).bounding_box(), (1, 3));
        assert_eq!(cs(&[(0, 0)]).bounding_box(), (1, 1));
        assert_eq!(cs(&[(0, 1), (1, 0), (1, 2), (2, 1)]).bounding_box(), (3, 3));
    }

    #[test]
    fn connectivity_is_edge_to_edge() {
        assert!(cs(&[(0, 0), (0, 1)]).is_connected());
        assert!(!cs(&[(0, 0), (0, 2)]).is_connected());
        // diagonal contact does not count
        assert!(!cs(&[(0, 0), (1, 1)]).is_connected());
    }

    #[test]
    fn transforms_form_the_dihedral_group() {
        // an asymmetric shape has 8 distinct images
        let l = cs(&[(0, 0), (1, 0), (2, 0), (2, 1)]);
        assert_eq!(l.symmetry_images().len(), 8);
        // a single cell has 1
        assert_eq!(cs(&[(0, 0)]).symmetry_images().len(), 1);
        // the 2-cell diagonal has exactly 2
        let diag = cs(&[(0, 0), (1, 1)]);
        let images = diag.symmetry_images();
        assert_eq!(images.len(), 2);
        let sets: Vec<&CellSet> = images.iter().map(|i| &i.cells).collect();
        assert!(sets.contains(&&cs(&[(0, 0), (1, 1)])));
        assert!(sets.contains(&&cs(&[(0, 1), (1, 0)])));
    }

    #[test]
    fn canonical_form_is_idempotent_and_congruence_invariant() {
        let shapes = [
            cs(&[(0, 0), (1, 0), (2, 0), (2, 1)]),
            cs(&[(0, 0), (1, 1)]),
            cs(&[(0, 1), (1, 0), (1, 2), (2, 1)]),
        ];
        for shape in &shapes {
            let canon = shape.canonical_form();
            assert_eq!(canon.canonical_form(), canon);
            for t in 0..TRANSFORM_COUNT {
                assert_eq!(shape.transform(t).canonical_form(), canon);
            }
        }
        assert_eq!(
            cs(&[(0, 1), (1, 0)]).canonical_form(),
            cs(&[(0, 0), (1, 1)]).canonical_form()
        );
    }

    #[test]
    fn piece_text_encoding_round_trips() {
        let p: CellSet = "0,0;0,2".parse().unwrap();
        assert_eq!(p, cs(&[(0, 0), (0, 2)]));
        assert_eq!(p.to_string(), "0,0;0,2");
        // parsing normalizes
        let q: CellSet = "2,3;2,5".parse().unwrap();
        assert_eq!(q.to_string(), "0,0;0,2");
        assert!("".parse::<CellSet>().is_err());
        assert!("0,0;x".parse::<CellSet>().is_err());
    }
}
