//! Cells, intervals and polyominoes on the integer grid.
//!
//! A polyomino is stored as a deduplicated, (y,x)-lexicographically sorted
//! list of unit cells, translated so that the minimum x and y over all cells
//! are zero. All other modules treat `Polyomino` as immutable.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Largest accepted number of cells. Enumeration and verification never go
/// anywhere near this, but parsers accept arbitrary files.
pub const MAX_RANK: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("polyomino must contain at least one cell")]
    Empty,
    #[error("cells are not edge-connected")]
    Disconnected,
    #[error("coordinates or rank exceed supported bounds (16-bit coords, {MAX_RANK} cells)")]
    TooLarge,
}

/// A unit cell identified by its lower-left corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub x: u16,
    pub y: u16,
}

impl Cell {
    pub fn new(x: u16, y: u16) -> Self {
        Cell { x, y }
    }
}

/// Cells are ordered bottom row first, then left to right.
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A lattice point (a vertex of the grid).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: u16,
    pub y: u16,
}

impl Point {
    pub fn new(x: u16, y: u16) -> Self {
        Point { x, y }
    }

    /// Componentwise order test, the partial order of the planar lattice.
    pub fn leq(&self, other: &Point) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// An axis-aligned interval `[lo, hi]` of lattice points, `lo <= hi`
/// componentwise. Proper when strict in both coordinates; corners are
/// derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Point,
    pub hi: Point,
}

impl Interval {
    pub fn new(lo: Point, hi: Point) -> Self {
        assert!(lo.leq(&hi), "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn is_proper(&self) -> bool {
        self.lo.x < self.hi.x && self.lo.y < self.hi.y
    }

    /// Upper-left and lower-right corners (the anti-diagonal pair).
    pub fn anti_diagonal_corners(&self) -> (Point, Point) {
        (
            Point::new(self.lo.x, self.hi.y),
            Point::new(self.hi.x, self.lo.y),
        )
    }

    /// Size as (width, height) in cells.
    pub fn size(&self) -> (u16, u16) {
        (self.hi.x - self.lo.x, self.hi.y - self.lo.y)
    }

    /// Lower-left corners of the cells contained in the interval.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let (lo, hi) = (self.lo, self.hi);
        (lo.y..hi.y).flat_map(move |y| (lo.x..hi.x).map(move |x| Cell::new(x, y)))
    }

    /// The two cells at the lower-left and upper-right corners.
    pub fn diagonal_cells(&self) -> (Cell, Cell) {
        debug_assert!(self.is_proper());
        (
            Cell::new(self.lo.x, self.lo.y),
            Cell::new(self.hi.x - 1, self.hi.y - 1),
        )
    }

    /// The two cells at the upper-left and lower-right corners.
    pub fn anti_diagonal_cells(&self) -> (Cell, Cell) {
        debug_assert!(self.is_proper());
        (
            Cell::new(self.lo.x, self.hi.y - 1),
            Cell::new(self.hi.x - 1, self.lo.y),
        )
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.x >= self.lo.x && c.x < self.hi.x && c.y >= self.lo.y && c.y < self.hi.y
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
}

/// Row/column convexity flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Convexity {
    pub row_convex: bool,
    pub column_convex: bool,
}

impl Convexity {
    pub fn convex(&self) -> bool {
        self.row_convex && self.column_convex
    }
}

/// The eight symmetries of the square.
pub const D4: [Transform; 8] = [
    Transform::Id,
    Transform::Rot90,
    Transform::Rot180,
    Transform::Rot270,
    Transform::FlipX,
    Transform::FlipY,
    Transform::FlipMain,
    Transform::FlipAnti,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    Id,
    Rot90,
    Rot180,
    Rot270,
    FlipX,
    FlipY,
    FlipMain,
    FlipAnti,
}

impl Transform {
    /// Image of the cell with lower-left corner (x, y), before renormalizing.
    fn apply(&self, x: i64, y: i64) -> (i64, i64) {
        match self {
            Transform::Id => (x, y),
            Transform::Rot90 => (-y - 1, x),
            Transform::Rot180 => (-x - 1, -y - 1),
            Transform::Rot270 => (y, -x - 1),
            Transform::FlipX => (-x - 1, y),
            Transform::FlipY => (x, -y - 1),
            Transform::FlipMain => (y, x),
            Transform::FlipAnti => (-y - 1, -x - 1),
        }
    }
}

/// A finite, edge-connected, translation-normalized set of cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyomino {
    cells: Vec<Cell>,
}

impl Polyomino {
    /// Builds a polyomino from arbitrary integer cell coordinates:
    /// deduplicates, translates the minimum corner to the origin and checks
    /// edge-connectivity.
    pub fn normalize<I>(raw: I) -> Result<Self, GridError>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut set: Vec<(i64, i64)> = raw.into_iter().collect();
        set.sort_by_key(|&(x, y)| (y, x));
        set.dedup();
        if set.is_empty() {
            return Err(GridError::Empty);
        }
        if set.len() > MAX_RANK {
            return Err(GridError::TooLarge);
        }
        let min_x = set.iter().map(|&(x, _)| x).min().unwrap();
        let min_y = set.iter().map(|&(_, y)| y).min().unwrap();
        let mut cells = Vec::with_capacity(set.len());
        for &(x, y) in &set {
            let (x, y) = (x - min_x, y - min_y);
            // Points go one past the last cell, so leave headroom of 1.
            if x >= u16::MAX as i64 || y >= u16::MAX as i64 {
                return Err(GridError::TooLarge);
            }
            cells.push(Cell::new(x as u16, y as u16));
        }
        let poly = Polyomino { cells };
        if !poly.is_connected() {
            return Err(GridError::Disconnected);
        }
        Ok(poly)
    }

    fn is_connected(&self) -> bool {
        let set: HashSet<Cell> = self.cells.iter().copied().collect();
        let mut seen = HashSet::with_capacity(set.len());
        let mut queue = VecDeque::new();
        queue.push_back(self.cells[0]);
        seen.insert(self.cells[0]);
        while let Some(c) = queue.pop_front() {
            let (x, y) = (c.x as i32, c.y as i32);
            for (nx, ny) in [(x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1)] {
                if nx < 0 || ny < 0 {
                    continue;
                }
                let n = Cell::new(nx as u16, ny as u16);
                if set.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == self.cells.len()
    }

    /// Number of cells.
    pub fn rank(&self) -> usize {
        self.cells.len()
    }

    /// Cells in (y,x)-lexicographic order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// Extent of the bounding box `[(0,0),(m,n)]` in vertex coordinates.
    pub fn bounding_box(&self) -> (u16, u16) {
        let m = self.cells.iter().map(|c| c.x + 1).max().unwrap();
        let n = self.cells.iter().map(|c| c.y + 1).max().unwrap();
        (m, n)
    }

    /// The vertex set: union of the four corners of every cell, sorted.
    pub fn vertices(&self) -> Vec<Point> {
        let mut vs: Vec<Point> = self
            .cells
            .iter()
            .flat_map(|c| {
                [
                    Point::new(c.x, c.y),
                    Point::new(c.x + 1, c.y),
                    Point::new(c.x, c.y + 1),
                    Point::new(c.x + 1, c.y + 1),
                ]
            })
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    /// Cell occupancy of the bounding box with O(1) rectangle queries.
    pub fn occupancy(&self) -> Occupancy {
        Occupancy::new(self)
    }

    /// True when the complement of the polyomino has no bounded component:
    /// all complement cells of the bounding box enlarged by a one-cell margin
    /// are reachable from the outer margin by a flood fill.
    pub fn is_simple(&self) -> bool {
        let (m, n) = self.bounding_box();
        let (w, h) = (m as usize + 2, n as usize + 2);
        let mut occupied = vec![false; w * h];
        for c in &self.cells {
            occupied[(c.y as usize + 1) * w + c.x as usize + 1] = true;
        }
        let total_free = w * h - self.cells.len();
        let mut seen = vec![false; w * h];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0usize);
        let mut reached = 1usize;
        while let Some(i) = queue.pop_front() {
            let (x, y) = (i % w, i / w);
            let mut push = |j: usize| {
                if !occupied[j] && !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                    reached += 1;
                }
            };
            if x > 0 {
                push(i - 1);
            }
            if x + 1 < w {
                push(i + 1);
            }
            if y > 0 {
                push(i - w);
            }
            if y + 1 < h {
                push(i + w);
            }
        }
        reached == total_free
    }

    /// True iff every cell of the proper interval lies in the polyomino.
    pub fn is_inner_interval(&self, iv: &Interval) -> bool {
        assert!(
            iv.is_proper(),
            "inner-interval test needs a proper interval"
        );
        iv.cells().all(|c| self.contains(c))
    }

    /// All proper intervals whose cells all lie in the polyomino, sorted by
    /// (lo, hi).
    pub fn inner_intervals(&self) -> Vec<Interval> {
        let occ = self.occupancy();
        let (m, n) = self.bounding_box();
        let mut out = Vec::new();
        for ly in 0..n {
            for lx in 0..m {
                for hy in ly + 1..=n {
                    for hx in lx + 1..=m {
                        if occ.rect_full(lx, ly, hx, hy) {
                            out.push(Interval::new(Point::new(lx, ly), Point::new(hx, hy)));
                        }
                    }
                }
            }
        }
        out.sort_by_key(|iv| (iv.lo, iv.hi));
        out
    }

    /// Row convex iff every occupied row is a single run; same per column.
    pub fn convexity(&self) -> Convexity {
        let rows: HashSet<u16> = self.cells.iter().map(|c| c.y).collect();
        let cols: HashSet<u16> = self.cells.iter().map(|c| c.x).collect();
        Convexity {
            row_convex: self.cell_runs(Direction::Horizontal).len() == rows.len(),
            column_convex: self.cell_runs(Direction::Vertical).len() == cols.len(),
        }
    }

    /// Maximal runs of consecutive cells per row (horizontal) or column
    /// (vertical), each run sorted, runs in (y,x) order of their first cell.
    pub fn cell_runs(&self, dir: Direction) -> Vec<Vec<Cell>> {
        let mut runs: Vec<Vec<Cell>> = Vec::new();
        match dir {
            Direction::Horizontal => {
                // cells are already sorted by (y, x)
                for &c in &self.cells {
                    match runs.last_mut() {
                        Some(run)
                            if run.last().unwrap().y == c.y && run.last().unwrap().x + 1 == c.x =>
                        {
                            run.push(c)
                        }
                        _ => runs.push(vec![c]),
                    }
                }
            }
            Direction::Vertical => {
                let mut cells = self.cells.clone();
                cells.sort_by_key(|c| (c.x, c.y));
                for c in cells {
                    match runs.last_mut() {
                        Some(run)
                            if run.last().unwrap().x == c.x && run.last().unwrap().y + 1 == c.y =>
                        {
                            run.push(c)
                        }
                        _ => runs.push(vec![c]),
                    }
                }
                runs.sort_by_key(|run| run[0]);
            }
        }
        runs
    }

    /// Maximal horizontal (vertical) edge intervals: maximal runs of grid
    /// edges that are edges of cells of the polyomino.
    pub fn edge_intervals(&self, dir: Direction) -> Vec<Interval> {
        // For direction horizontal: for each height y collect the x-ranges of
        // horizontal cell edges (bottom and top edges of cells).
        let mut per_line: std::collections::BTreeMap<u16, Vec<u16>> = Default::default();
        for c in &self.cells {
            match dir {
                Direction::Horizontal => {
                    per_line.entry(c.y).or_default().push(c.x);
                    per_line.entry(c.y + 1).or_default().push(c.x);
                }
                Direction::Vertical => {
                    per_line.entry(c.x).or_default().push(c.y);
                    per_line.entry(c.x + 1).or_default().push(c.y);
                }
            }
        }
        let mut out = Vec::new();
        for (line, mut offs) in per_line {
            offs.sort_unstable();
            offs.dedup();
            let mut start = offs[0];
            let mut prev = offs[0];
            for &o in &offs[1..] {
                if o != prev + 1 {
                    out.push(make_edge_interval(dir, line, start, prev));
                    start = o;
                }
                prev = o;
            }
            out.push(make_edge_interval(dir, line, start, prev));
        }
        out.sort_by_key(|iv| (iv.lo, iv.hi));
        out
    }

    pub fn transformed(&self, t: Transform) -> Polyomino {
        Polyomino::normalize(self.cells.iter().map(|c| t.apply(c.x as i64, c.y as i64)))
            .expect("symmetry image of a valid polyomino is valid")
    }

    /// The lexicographically least normalized image among the eight
    /// symmetries of the square. Constant on symmetry orbits, idempotent.
    pub fn canonical_form(&self) -> Polyomino {
        D4.iter().map(|&t| self.transformed(t)).min().unwrap()
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical_form()
    }

    /// Removes the cells of `other` and renormalizes. Returns the raw cell
    /// list untranslated when the remainder is empty or disconnected.
    pub fn difference(&self, remove: &[Cell]) -> Result<Polyomino, GridError> {
        let drop: HashSet<Cell> = remove.iter().copied().collect();
        Polyomino::normalize(
            self.cells
                .iter()
                .filter(|c| !drop.contains(c))
                .map(|c| (c.x as i64, c.y as i64)),
        )
    }
}

fn make_edge_interval(dir: Direction, line: u16, start: u16, end: u16) -> Interval {
    match dir {
        Direction::Horizontal => Interval::new(Point::new(start, line), Point::new(end + 1, line)),
        Direction::Vertical => Interval::new(Point::new(line, start), Point::new(line, end + 1)),
    }
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::io::to_grid(self))
    }
}

/// Prefix-sum cell occupancy over the bounding box.
pub struct Occupancy {
    m: usize,
    pre: Vec<u32>,
}

impl Occupancy {
    fn new(p: &Polyomino) -> Self {
        let (m, n) = p.bounding_box();
        let (m, n) = (m as usize, n as usize);
        let mut grid = vec![0u32; m * n];
        for c in p.cells() {
            grid[c.y as usize * m + c.x as usize] = 1;
        }
        let mut pre = vec![0u32; (m + 1) * (n + 1)];
        for y in 0..n {
            for x in 0..m {
                pre[(y + 1) * (m + 1) + (x + 1)] =
                    grid[y * m + x] + pre[y * (m + 1) + (x + 1)] + pre[(y + 1) * (m + 1) + x]
                        - pre[y * (m + 1) + x];
            }
        }
        Occupancy { m, pre }
    }

    /// True when every cell with lower-left in `[lx,hx) x [ly,hy)` is present.
    pub fn rect_full(&self, lx: u16, ly: u16, hx: u16, hy: u16) -> bool {
        let (lx, ly, hx, hy) = (lx as usize, ly as usize, hx as usize, hy as usize);
        let w = self.m + 1;
        let count = self.pre[hy * w + hx] + self.pre[ly * w + lx]
            - self.pre[ly * w + hx]
            - self.pre[hy * w + lx];
        count as usize == (hx - lx) * (hy - ly)
    }
}
