//! Non-attacking rook placements on a polyomino, switch moves and their
//! equivalence classes.
//!
//! Two rooks attack one another only when they share a maximal horizontal or
//! vertical cell run: a missing cell between them blocks the attack. A switch
//! replaces two rooks sitting on diagonal (or antidiagonal) cells of an inner
//! rectangle by the opposite corner pair.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::grid::{Cell, Direction, Interval, Point, Polyomino};
use crate::poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RookError {
    #[error("rook {0} is not a cell of the polyomino")]
    RookOffBoard(Cell),
    #[error("rooks {0} and {1} attack each other")]
    Attacking(Cell, Cell),
    #[error("switch produced an attacking set; the move model is broken")]
    SwitchBrokeInvariant,
}

/// A pairwise non-attacking set of cells, sorted in (y,x) order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RookSet {
    rooks: Vec<Cell>,
}

impl RookSet {
    pub fn empty() -> Self {
        RookSet { rooks: vec![] }
    }

    /// Validates membership and the non-attacking condition on the host.
    pub fn new(host: &Polyomino, mut rooks: Vec<Cell>) -> Result<Self, RookError> {
        rooks.sort();
        rooks.dedup();
        let conflicts = ConflictGraph::new(host);
        for (i, &r) in rooks.iter().enumerate() {
            let ri = conflicts.index_of(r).ok_or(RookError::RookOffBoard(r))?;
            for &s in &rooks[..i] {
                let si = conflicts.index_of(s).ok_or(RookError::RookOffBoard(s))?;
                if conflicts.attacks(ri, si) {
                    return Err(RookError::Attacking(s, r));
                }
            }
        }
        Ok(RookSet { rooks })
    }

    pub fn rooks(&self) -> &[Cell] {
        &self.rooks
    }

    pub fn len(&self) -> usize {
        self.rooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rooks.is_empty()
    }
}

impl fmt::Display for RookSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.rooks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

/// An equivalence class of rook sets under switches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RookClass {
    /// Lexicographically least member.
    pub representative: RookSet,
    pub size: usize,
}

/// Cells attack iff they share a maximal cell run; runs are identified by
/// index into the host's run lists.
pub struct ConflictGraph {
    cells: Vec<Cell>,
    row_run: Vec<usize>,
    col_run: Vec<usize>,
    index: HashMap<Cell, usize>,
}

impl ConflictGraph {
    pub fn new(p: &Polyomino) -> Self {
        let cells: Vec<Cell> = p.cells().to_vec();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut row_run = vec![0usize; cells.len()];
        for (run_id, run) in p.cell_runs(Direction::Horizontal).iter().enumerate() {
            for c in run {
                row_run[index[c]] = run_id;
            }
        }
        let mut col_run = vec![0usize; cells.len()];
        for (run_id, run) in p.cell_runs(Direction::Vertical).iter().enumerate() {
            for c in run {
                col_run[index[c]] = run_id;
            }
        }
        ConflictGraph {
            cells,
            row_run,
            col_run,
            index,
        }
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.index.get(&c).copied()
    }

    pub fn attacks(&self, i: usize, j: usize) -> bool {
        i != j && (self.row_run[i] == self.row_run[j] || self.col_run[i] == self.col_run[j])
    }

    /// All attacking pairs, each once, in cell order.
    pub fn edges(&self) -> Vec<(Cell, Cell)> {
        let n = self.cells.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.attacks(i, j) {
                    out.push((self.cells[i], self.cells[j]));
                }
            }
        }
        out
    }
}

/// Shared state for the rook computations on one polyomino.
pub struct RookComplex {
    host: Polyomino,
    conflicts: ConflictGraph,
    levels: Vec<Vec<RookSet>>,
}

impl RookComplex {
    pub fn new(p: &Polyomino) -> Self {
        let conflicts = ConflictGraph::new(p);
        let mut levels: Vec<Vec<RookSet>> = vec![vec![RookSet::empty()]];
        let mut current: Vec<usize> = Vec::new();
        // branch on the least unused cell, pruning attacked ones
        fn extend(
            g: &ConflictGraph,
            start: usize,
            current: &mut Vec<usize>,
            levels: &mut Vec<Vec<RookSet>>,
        ) {
            for i in start..g.cell_count() {
                if current.iter().any(|&j| g.attacks(i, j)) {
                    continue;
                }
                current.push(i);
                if levels.len() <= current.len() {
                    levels.push(Vec::new());
                }
                let rooks = current.iter().map(|&j| g.cells()[j]).collect();
                levels[current.len()].push(RookSet { rooks });
                extend(g, i + 1, current, levels);
                current.pop();
            }
        }
        extend(&conflicts, 0, &mut current, &mut levels);
        RookComplex {
            host: p.clone(),
            conflicts,
            levels,
        }
    }

    /// Maximum number of non-attacking rooks.
    pub fn rook_number(&self) -> usize {
        self.levels.len() - 1
    }

    /// All placements grouped by size; level 0 is the empty placement.
    pub fn levels(&self) -> &[Vec<RookSet>] {
        &self.levels
    }

    pub fn polynomial(&self) -> IntPoly {
        IntPoly::from_coeffs(self.levels.iter().map(|l| l.len() as i64))
    }

    /// All single-switch neighbours of a placement, in deterministic order.
    pub fn switches(&self, set: &RookSet) -> Result<Vec<RookSet>, RookError> {
        let occ = self.host.occupancy();
        let mut out = Vec::new();
        let rooks = &set.rooks;
        for i in 0..rooks.len() {
            for j in i + 1..rooks.len() {
                // sorted order gives a.y <= b.y
                let (a, b) = (rooks[i], rooks[j]);
                let rect = if a.x < b.x && a.y < b.y {
                    Interval::new(Point::new(a.x, a.y), Point::new(b.x + 1, b.y + 1))
                } else if b.x < a.x && a.y < b.y {
                    Interval::new(Point::new(b.x, a.y), Point::new(a.x + 1, b.y + 1))
                } else {
                    continue; // shared row or column: no enclosing rectangle
                };
                if !occ.rect_full(rect.lo.x, rect.lo.y, rect.hi.x, rect.hi.y) {
                    continue; // the rectangle must lie entirely in the host
                }
                let (p, q) = (Cell::new(a.x, b.y), Cell::new(b.x, a.y));
                let mut switched: Vec<Cell> = rooks
                    .iter()
                    .copied()
                    .filter(|&c| c != a && c != b)
                    .chain([p, q])
                    .collect();
                switched.sort();
                let new_set = RookSet { rooks: switched };
                if !self.is_non_attacking(&new_set) {
                    return Err(RookError::SwitchBrokeInvariant);
                }
                out.push(new_set);
            }
        }
        Ok(out)
    }

    fn is_non_attacking(&self, set: &RookSet) -> bool {
        let idx: Vec<usize> = set
            .rooks
            .iter()
            .filter_map(|&c| self.conflicts.index_of(c))
            .collect();
        idx.len() == set.rooks.len()
            && (0..idx.len())
                .all(|i| (i + 1..idx.len()).all(|j| !self.conflicts.attacks(idx[i], idx[j])))
    }

    /// Connected components of the switch graph on the k-rook placements.
    pub fn classes(&self, k: usize) -> Result<Vec<RookClass>, RookError> {
        let level = match self.levels.get(k) {
            Some(l) => l,
            None => return Ok(vec![]),
        };
        let index: HashMap<&RookSet, usize> =
            level.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut uf = UnionFind::new(level.len());
        for (i, set) in level.iter().enumerate() {
            for neighbour in self.switches(set)? {
                let j = *index
                    .get(&neighbour)
                    .expect("switch image is a valid placement of the same size");
                uf.union(i, j);
            }
        }
        let mut members: HashMap<usize, (usize, usize)> = HashMap::new(); // root -> (min index, count)
        for i in 0..level.len() {
            let r = uf.find(i);
            let e = members.entry(r).or_insert((i, 0));
            e.0 = e.0.min(i);
            e.1 += 1;
        }
        // level sets are generated in lexicographic order, so the least
        // index is the least member
        let mut classes: Vec<RookClass> = members
            .into_values()
            .map(|(min_i, size)| RookClass {
                representative: level[min_i].clone(),
                size,
            })
            .collect();
        classes.sort_by(|a, b| a.representative.cmp(&b.representative));
        Ok(classes)
    }

    /// Class counts per level.
    pub fn class_polynomial(&self) -> Result<IntPoly, RookError> {
        let mut counts = Vec::with_capacity(self.levels.len());
        for k in 0..self.levels.len() {
            counts.push(self.classes(k)?.len() as i64);
        }
        Ok(IntPoly::from_coeffs(counts))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Attack graph on the cells.
pub fn conflict_graph(p: &Polyomino) -> ConflictGraph {
    ConflictGraph::new(p)
}

/// All non-attacking placements grouped by size.
pub fn rook_levels(p: &Polyomino) -> Vec<Vec<RookSet>> {
    RookComplex::new(p).levels.clone()
}

/// The rook polynomial: coefficient k counts the k-rook placements.
pub fn rook_polynomial(p: &Polyomino) -> IntPoly {
    RookComplex::new(p).polynomial()
}

/// Single-switch neighbours of a placement.
pub fn switches(p: &Polyomino, set: &RookSet) -> Result<Vec<RookSet>, RookError> {
    RookComplex::new(p).switches(set)
}

/// Switch-equivalence classes among the k-rook placements.
pub fn equivalence_classes(p: &Polyomino, k: usize) -> Result<Vec<RookClass>, RookError> {
    RookComplex::new(p).classes(k)
}

/// The rook-equivalence polynomial: coefficient k counts the classes of
/// k-rook placements.
pub fn r_tilde_polynomial(p: &Polyomino) -> Result<IntPoly, RookError> {
    RookComplex::new(p).class_polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_grid;

    fn p7() -> Polyomino {
        parse_grid("#.#\n###\n##.").unwrap()
    }

    fn cells(cs: &[(u16, u16)]) -> Vec<Cell> {
        cs.iter().map(|&(x, y)| Cell::new(x, y)).collect()
    }

    #[test]
    fn conflict_edges_respect_runs() {
        let g = conflict_graph(&p7());
        let f = g.index_of(Cell::new(0, 2)).unwrap();
        let gg = g.index_of(Cell::new(2, 2)).unwrap();
        // top corners straddle a gap: no attack
        assert!(!g.attacks(f, gg));
        let a = g.index_of(Cell::new(0, 0)).unwrap();
        let c = g.index_of(Cell::new(0, 1)).unwrap();
        assert!(g.attacks(a, c));

        let dom = parse_grid("##").unwrap();
        let g = conflict_graph(&dom);
        assert!(g.attacks(0, 1));
        assert_eq!(g.edges().len(), 1);
    }

    #[test]
    fn p7_levels_match_the_worked_example() {
        let rc = RookComplex::new(&p7());
        assert_eq!(rc.rook_number(), 3);
        let sizes: Vec<usize> = rc.levels().iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![1, 7, 12, 5]);
        assert_eq!(rc.polynomial(), IntPoly::from_coeffs([1, 7, 12, 5]));
    }

    #[test]
    fn more_rook_polynomials() {
        let stair5 = parse_grid("..#\n..#\n###").unwrap();
        assert_eq!(rook_polynomial(&stair5), IntPoly::from_coeffs([1, 5, 4]));
        let row = parse_grid("####").unwrap();
        assert_eq!(rook_polynomial(&row), IntPoly::from_coeffs([1, 4]));
        let single = parse_grid("#").unwrap();
        assert_eq!(rook_polynomial(&single), IntPoly::from_coeffs([1, 1]));
        let sq2 = parse_grid("##\n##").unwrap();
        let rc = RookComplex::new(&sq2);
        let sizes: Vec<usize> = rc.levels().iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![1, 4, 2]);
    }

    #[test]
    fn p7_switches() {
        let p = p7();
        let rc = RookComplex::new(&p);
        // {A,D} ~ {B,C}
        let ad = RookSet::new(&p, cells(&[(0, 0), (1, 1)])).unwrap();
        let got = rc.switches(&ad).unwrap();
        assert_eq!(
            got,
            vec![RookSet::new(&p, cells(&[(1, 0), (0, 1)])).unwrap()]
        );
        // {A,D,G} ~ {B,C,G}
        let adg = RookSet::new(&p, cells(&[(0, 0), (1, 1), (2, 2)])).unwrap();
        let got = rc.switches(&adg).unwrap();
        assert_eq!(
            got,
            vec![RookSet::new(&p, cells(&[(1, 0), (0, 1), (2, 2)])).unwrap()]
        );
    }

    #[test]
    fn thin_polyominoes_have_no_switches() {
        let stair5 = parse_grid("..#\n..#\n###").unwrap();
        let rc = RookComplex::new(&stair5);
        for level in rc.levels() {
            for set in level {
                assert!(rc.switches(set).unwrap().is_empty());
            }
        }
        assert_eq!(rc.class_polynomial().unwrap(), rc.polynomial());
    }

    #[test]
    fn p7_class_counts() {
        let rc = RookComplex::new(&p7());
        assert_eq!(rc.classes(2).unwrap().len(), 11);
        assert_eq!(rc.classes(3).unwrap().len(), 4);
        assert_eq!(
            rc.class_polynomial().unwrap(),
            IntPoly::from_coeffs([1, 7, 11, 4])
        );
    }

    #[test]
    fn sq2_diag_and_antidiag_collapse() {
        let sq2 = parse_grid("##\n##").unwrap();
        let rc = RookComplex::new(&sq2);
        let classes = rc.classes(2).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size, 2);
        assert_eq!(
            rc.class_polynomial().unwrap(),
            IntPoly::from_coeffs([1, 4, 1])
        );
    }

    #[test]
    fn rookset_validation() {
        let p = p7();
        assert!(matches!(
            RookSet::new(&p, cells(&[(1, 2)])),
            Err(RookError::RookOffBoard(_))
        ));
        assert!(matches!(
            RookSet::new(&p, cells(&[(0, 0), (1, 0)])),
            Err(RookError::Attacking(_, _))
        ));
    }
}
