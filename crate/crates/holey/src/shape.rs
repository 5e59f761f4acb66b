//! Holey polyominoes: free shapes identified by their visible cells alone.
//!
//! The hole count k is a derived property (the least number of extra cells
//! that make the visible set connected), never stored geometry. Enumeration
//! of all free (n,k) shapes works by deleting k-subsets from connected
//! (n+k)-ominoes and keeping exactly the remainders whose connector count
//! comes back as k.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::cell::{Cell, CellSet, SymmetryImage};
use crate::Error;

/// A free (n,k)-polyomino. Stored in canonical form so that equality is
/// congruence and the row-major cell encoding doubles as the canonical key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HoleyPolyomino {
    visible: CellSet,
    k: usize,
}

impl HoleyPolyomino {
    pub fn new(visible: CellSet) -> Self {
        let visible = visible.canonical_form();
        let k = steiner_k(&visible);
        HoleyPolyomino { visible, k }
    }

    /// Parses the piece text encoding `"r,c;r,c;..."`, then normalizes and
    /// canonicalizes.
    pub fn parse(s: &str) -> Result<Self, Error> {
        Ok(HoleyPolyomino::new(s.parse::<CellSet>()?))
    }

    pub fn visible(&self) -> &CellSet {
        &self.visible
    }

    /// Number of visible squares.
    pub fn n(&self) -> usize {
        self.visible.len()
    }

    /// Minimal connector count.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The canonical text encoding; total order over free shapes.
    pub fn canonical_key(&self) -> String {
        self.visible.to_string()
    }

    pub fn symmetry_images(&self) -> Vec<SymmetryImage> {
        self.visible.symmetry_images()
    }

    pub fn bounding_box(&self) -> (i32, i32) {
        self.visible.bounding_box()
    }

    /// One arbitrary minimal connector, reconstructed on demand for display.
    pub fn minimal_connector(&self) -> Vec<Cell> {
        minimal_connector(&self.visible)
    }
}

impl fmt::Display for HoleyPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.visible.fmt(f)
    }
}

impl FromStr for HoleyPolyomino {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        HoleyPolyomino::parse(s)
    }
}

/// The least number of cells that, added to `visible`, make the union
/// 4-adjacency connected. Searched by iterative deepening m = 0, 1, 2, ...
/// over subsets of the bounding-box complement (a minimal rectilinear
/// connector always exists inside the terminals' bounding box).
pub fn steiner_k(visible: &CellSet) -> usize {
    minimal_connector(visible).len()
}

/// Like [`steiner_k`] but stops deepening past `bound`; returns the exact
/// value when it is at most `bound`.
pub fn steiner_k_at_most(visible: &CellSet, bound: usize) -> Option<usize> {
    for m in 0..=bound {
        if find_connector(visible, m).is_some() {
            return Some(m);
        }
    }
    None
}

/// One minimal connector set (empty when the shape is already connected).
pub fn minimal_connector(visible: &CellSet) -> Vec<Cell> {
    for m in 0.. {
        if let Some(conn) = find_connector(visible, m) {
            return conn;
        }
    }
    unreachable!("filling the bounding box always connects the set")
}

/// Searches for a connector of exactly `m` bounding-box cells. Candidate
/// sets are grown one cell at a time, each adjacent to the current union;
/// any connected final union admits such an ordering, so this is complete.
fn find_connector(visible: &CellSet, m: usize) -> Option<Vec<Cell>> {
    if m == 0 {
        return visible.is_connected().then(Vec::new);
    }
    let (height, width) = visible.bounding_box();
    let in_box = |c: Cell| c.row >= 0 && c.row < height && c.col >= 0 && c.col < width;
    let mut chosen: Vec<Cell> = Vec::with_capacity(m);
    let mut seen: BTreeSet<Vec<Cell>> = BTreeSet::new();
    grow_connector(visible, &in_box, m, &mut chosen, &mut seen)
}

fn grow_connector(
    visible: &CellSet,
    in_box: &impl Fn(Cell) -> bool,
    m: usize,
    chosen: &mut Vec<Cell>,
    seen: &mut BTreeSet<Vec<Cell>>,
) -> Option<Vec<Cell>> {
    if chosen.len() == m {
        let union: Vec<Cell> = visible.iter().chain(chosen.iter().copied()).collect();
        return crate::cell::connected_over(&union).then(|| chosen.clone());
    }
    let mut candidates: BTreeSet<Cell> = BTreeSet::new();
    for cell in visible.iter().chain(chosen.iter().copied()) {
        for nb in cell.neighbors() {
            if in_box(nb) && !visible.contains(nb) && !chosen.contains(&nb) {
                candidates.insert(nb);
            }
        }
    }
    for cand in candidates {
        chosen.push(cand);
        let mut key = chosen.clone();
        key.sort();
        if seen.insert(key) {
            if let Some(found) = grow_connector(visible, in_box, m, chosen, seen) {
                return Some(found);
            }
        }
        chosen.pop();
    }
    None
}

/// All free connected m-ominoes in canonical form, sorted by encoding.
pub fn enumerate_connected(m: usize) -> Result<Vec<CellSet>, Error> {
    if !(1..=10).contains(&m) {
        return Err(Error::SizeOutOfRange(m));
    }
    let mut current: BTreeSet<CellSet> = BTreeSet::new();
    current.insert(CellSet::new([Cell::new(0, 0)]).unwrap());
    for _ in 1..m {
        let mut next = BTreeSet::new();
        for shape in &current {
            for cell in shape.iter() {
                for nb in cell.neighbors() {
                    if !shape.contains(nb) {
                        let grown = CellSet::new(shape.iter().chain([nb])).unwrap();
                        next.insert(grown.canonical_form());
                    }
                }
            }
        }
        current = next;
    }
    Ok(current.into_iter().collect())
}

/// All free (n,k)-polyominoes, canonical, deduplicated, sorted.
///
/// Any (n,k) visible set plus one of its minimal connectors is a connected
/// (n+k)-omino, so deleting every k-subset from every free (n+k)-omino and
/// filtering on the connector count is exhaustive.
pub fn enumerate_holey(n: usize, k: usize) -> Result<Vec<HoleyPolyomino>, Error> {
    if n < 1 || n + k > 10 {
        return Err(Error::ClassOutOfRange(n, k));
    }
    let bases = enumerate_connected(n + k)?;
    let mut found: Vec<CellSet> = bases
        .par_iter()
        .flat_map_iter(|base| {
            let mut local = Vec::new();
            for deletion in base.cells().iter().copied().combinations(k) {
                let remainder = base.iter().filter(|c| !deletion.contains(c));
                let visible = CellSet::new(remainder).expect("n >= 1 cells remain");
                if steiner_k_at_most(&visible, k) == Some(k) {
                    local.push(visible.canonical_form());
                }
            }
            local
        })
        .collect();
    found.sort();
    found.dedup();
    Ok(found
        .into_iter()
        .map(|visible| HoleyPolyomino { visible, k })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(cells: &[(i32, i32)]) -> CellSet {
        CellSet::new(cells.iter().map(|&(r, c)| Cell::new(r, c))).unwrap()
    }

    #[test]
    fn steiner_of_connected_sets_is_zero() {
        assert_eq!(steiner_k(&cs(&[(0, 0), (0, 1)])), 0);
        assert_eq!(steiner_k(&cs(&[(0, 0)])), 0);
    }

    #[test]
    fn steiner_of_two_cell_gaps() {
        assert_eq!(steiner_k(&cs(&[(0, 0), (0, 2)])), 1);
        assert_eq!(steiner_k(&cs(&[(0, 0), (1, 1)])), 1);
    }

    #[test]
    fn steiner_of_square_corners_needs_three() {
        // four corners of a 3x3 box: no two corners share a neighbor except
        // edge midpoints, and two connectors leave two components
        assert_eq!(steiner_k(&cs(&[(0, 0), (0, 2), (2, 0), (2, 2)])), 3);
    }

    #[test]
    fn minimal_connector_actually_connects() {
        let visible = cs(&[(0, 0), (0, 2), (2, 0), (2, 2)]);
        let conn = minimal_connector(&visible);
        assert_eq!(conn.len(), 3);
        let union: Vec<Cell> = visible.iter().chain(conn).collect();
        assert!(crate::cell::connected_over(&union));
    }

    #[test]
    fn free_polyomino_counts_match_the_classical_sequence() {
        let expected = [1, 1, 2, 5, 12, 35, 108];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_connected(i + 1).unwrap().len(), count, "m={}", i + 1);
        }
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(11).is_err());
    }

    #[test]
    fn holey_enumeration_small_classes() {
        assert_eq!(enumerate_holey(2, 1).unwrap().len(), 2);
        assert_eq!(enumerate_holey(2, 2).unwrap().len(), 2);
        assert_eq!(enumerate_holey(3, 1).unwrap().len(), 4);
        // (n,0) classes are the regular free polyominoes
        assert_eq!(enumerate_holey(4, 0).unwrap().len(), 5);
        assert_eq!(enumerate_holey(1, 1).unwrap().len(), 0);
    }

    #[test]
    fn enumerated_pieces_have_consistent_n_and_k() {
        for piece in enumerate_holey(3, 2).unwrap() {
            assert_eq!(piece.n(), 3);
            assert_eq!(piece.k(), 2);
            assert_eq!(steiner_k(piece.visible()), 2);
        }
    }

    #[test]
    fn enumeration_has_no_duplicate_keys() {
        let pieces = enumerate_holey(4, 1).unwrap();
        let keys: BTreeSet<String> = pieces.iter().map(|p| p.canonical_key()).collect();
        assert_eq!(keys.len(), pieces.len());
    }

    #[test]
    fn piece_identity_is_the_visible_set() {
        let a = HoleyPolyomino::parse("0,0;0,2").unwrap();
        let b = HoleyPolyomino::parse("0,2;0,0").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.n(), 2);
        assert_eq!(a.k(), 1);
    }
}
