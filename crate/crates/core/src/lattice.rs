//! The vertex set of a parallelogram polyomino as a planar distributive
//! lattice: uppermost chains, the edge labelling driven by the uppermost
//! chain, descent counting over maximal chains, the cell-chain dynamic
//! program for the same histogram, and the poset of join-irreducible
//! elements with its purity test.

use std::collections::HashSet;

use thiserror::Error;

use crate::grid::{Cell, Direction, Point, Polyomino};
use crate::parallelogram;
use crate::poly::IntPoly;

/// Chain enumeration refuses to walk more than this many maximal chains.
pub const DEFAULT_CHAIN_CAP: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("vertex set is not a simple planar distributive lattice")]
    NotParallelogram,
    #[error("points are incomparable")]
    Incomparable,
    #[error("more than {cap} maximal chains; use the cell-chain method")]
    ChainExplosion { cap: u64 },
}

/// Vertex set of a parallelogram polyomino with the componentwise order.
pub struct PlanarLattice {
    points: Vec<Point>,
    set: HashSet<Point>,
    max: Point,
}

/// Builds the lattice over the vertex set and verifies join/meet closure.
pub fn lattice_of(p: &Polyomino) -> Result<PlanarLattice, LatticeError> {
    parallelogram::detect(p).map_err(|_| LatticeError::NotParallelogram)?;
    let points = p.vertices();
    let set: HashSet<Point> = points.iter().copied().collect();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let join = Point::new(a.x.max(b.x), a.y.max(b.y));
            let meet = Point::new(a.x.min(b.x), a.y.min(b.y));
            if !set.contains(&join) || !set.contains(&meet) {
                return Err(LatticeError::NotParallelogram);
            }
        }
    }
    let (m, n) = p.bounding_box();
    let lattice = PlanarLattice {
        points,
        set,
        max: Point::new(m, n),
    };
    // the cells recoverable from the lattice are exactly the polyomino
    let cells: Vec<Cell> = lattice.cells();
    debug_assert_eq!(cells, p.cells());
    Ok(lattice)
}

impl PlanarLattice {
    pub fn rank(&self) -> usize {
        (self.max.x + self.max.y) as usize
    }

    pub fn min(&self) -> Point {
        Point::new(0, 0)
    }

    pub fn max(&self) -> Point {
        self.max
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn contains(&self, p: Point) -> bool {
        self.set.contains(&p)
    }

    /// Unit squares all four of whose corners lie in the lattice.
    fn cells(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self
            .points
            .iter()
            .filter(|p| {
                p.x < self.max.x
                    && p.y < self.max.y
                    && self.contains(Point::new(p.x + 1, p.y))
                    && self.contains(Point::new(p.x, p.y + 1))
                    && self.contains(Point::new(p.x + 1, p.y + 1))
            })
            .map(|p| Cell::new(p.x, p.y))
            .collect();
        cells.sort();
        cells
    }

    /// The unique maximal chain from `from` to `to` that hugs the upper
    /// boundary: it goes north whenever the lattice allows it.
    pub fn uppermost_chain(&self, from: Point, to: Point) -> Result<Vec<Point>, LatticeError> {
        if !from.leq(&to) || !self.contains(from) || !self.contains(to) {
            return Err(LatticeError::Incomparable);
        }
        let mut chain = vec![from];
        let mut cur = from;
        while cur != to {
            let north = Point::new(cur.x, cur.y + 1);
            cur = if cur.y < to.y && self.contains(north) {
                north
            } else {
                let east = Point::new(cur.x + 1, cur.y);
                debug_assert!(cur.x < to.x && self.contains(east));
                east
            };
            chain.push(cur);
        }
        Ok(chain)
    }

    /// Labels every Hasse edge. The uppermost chain gets labels 1..m+n in
    /// order; its t-th step copies its label to every parallel edge in the
    /// same coordinate band.
    pub fn el_labelling(&self) -> EdgeLabelling {
        let chain = self
            .uppermost_chain(self.min(), self.max)
            .expect("min and max are comparable");
        let mut row_band = vec![0u32; self.max.y as usize];
        let mut col_band = vec![0u32; self.max.x as usize];
        for (t, pair) in chain.windows(2).enumerate() {
            let label = (t + 1) as u32;
            if pair[1].y == pair[0].y + 1 {
                row_band[pair[0].y as usize] = label;
            } else {
                col_band[pair[0].x as usize] = label;
            }
        }
        EdgeLabelling { row_band, col_band }
    }

    /// Descent cells of a maximal chain: the chain turns east-then-north at
    /// the cell's lower-right corner while the lattice also offers the
    /// north-then-east route (the cell's upper-left corner is present).
    pub fn descent_cells(&self, chain: &[Point]) -> Vec<Cell> {
        let mut out = Vec::new();
        for w in chain.windows(3) {
            let (a, b, c) = (w[0], w[1], w[2]);
            let east_then_north = b.x == a.x + 1 && b.y == a.y && c.x == b.x && c.y == b.y + 1;
            if east_then_north && self.contains(Point::new(a.x, a.y + 1)) {
                out.push(Cell::new(a.x, a.y));
            }
        }
        out
    }

    /// Positions i with a label decrease along the chain, per the labelling.
    pub fn label_descent_positions(&self, chain: &[Point]) -> Vec<usize> {
        let labels = self.el_labelling();
        let mut out = Vec::new();
        for i in 1..chain.len() - 1 {
            if labels.label(chain[i - 1], chain[i]) > labels.label(chain[i], chain[i + 1]) {
                out.push(i);
            }
        }
        out
    }

    fn for_each_chain<F: FnMut(&[Point])>(&self, cap: u64, f: &mut F) -> Result<u64, LatticeError> {
        let mut chain = vec![self.min()];
        let mut count = 0u64;
        self.walk(&mut chain, cap, &mut count, f)?;
        Ok(count)
    }

    fn walk<F: FnMut(&[Point])>(
        &self,
        chain: &mut Vec<Point>,
        cap: u64,
        count: &mut u64,
        f: &mut F,
    ) -> Result<(), LatticeError> {
        let cur = *chain.last().unwrap();
        if cur == self.max {
            *count += 1;
            if *count > cap {
                return Err(LatticeError::ChainExplosion { cap });
            }
            f(chain);
            return Ok(());
        }
        for next in [Point::new(cur.x, cur.y + 1), Point::new(cur.x + 1, cur.y)] {
            if next.leq(&self.max) && self.contains(next) {
                chain.push(next);
                self.walk(chain, cap, count, f)?;
                chain.pop();
            }
        }
        Ok(())
    }

    /// Histogram of maximal chains by descent count: coefficient k is the
    /// number of maximal chains with k descents.
    pub fn h_via_descents(&self, cap: u64) -> Result<IntPoly, LatticeError> {
        let mut histogram: Vec<i64> = Vec::new();
        self.for_each_chain(cap, &mut |chain| {
            let d = self.descent_cells(chain).len();
            if histogram.len() <= d {
                histogram.resize(d + 1, 0);
            }
            histogram[d] += 1;
        })?;
        Ok(IntPoly::from_coeffs(histogram))
    }

    /// Number of maximal chains, by dynamic programming over the points.
    pub fn maximal_chain_count(&self) -> u64 {
        let mut paths: std::collections::HashMap<Point, u64> = Default::default();
        paths.insert(self.min(), 1);
        // points are sorted by (y, x); predecessors come earlier
        let mut points = self.points.clone();
        points.sort_by_key(|p| (p.x as u32 + p.y as u32, p.x));
        for p in points {
            if p == self.min() {
                continue;
            }
            let mut total = 0u64;
            if p.x > 0 && self.contains(Point::new(p.x - 1, p.y)) {
                total += paths.get(&Point::new(p.x - 1, p.y)).copied().unwrap_or(0);
            }
            if p.y > 0 && self.contains(Point::new(p.x, p.y - 1)) {
                total += paths.get(&Point::new(p.x, p.y - 1)).copied().unwrap_or(0);
            }
            paths.insert(p, total);
        }
        paths[&self.max]
    }
}

/// Edge labels, stored per horizontal band (for vertical edges) and per
/// vertical band (for horizontal edges).
pub struct EdgeLabelling {
    row_band: Vec<u32>,
    col_band: Vec<u32>,
}

impl EdgeLabelling {
    /// Label of the Hasse edge `from -> to` (a unit step).
    pub fn label(&self, from: Point, to: Point) -> u32 {
        if to.x == from.x && to.y == from.y + 1 {
            self.row_band[from.y as usize]
        } else if to.y == from.y && to.x == from.x + 1 {
            self.col_band[from.x as usize]
        } else {
            panic!("{from} -> {to} is not a Hasse edge")
        }
    }
}

/// Coefficient k counts the k-element cell chains that increase strictly in
/// both coordinates; computed by dynamic programming, no chain enumeration.
pub fn h_via_cell_chains(p: &Polyomino) -> Result<IntPoly, LatticeError> {
    parallelogram::detect(p).map_err(|_| LatticeError::NotParallelogram)?;
    let cells = p.cells();
    let n = cells.len();
    // ending[i][k]: chains of k cells ending at cell i
    let mut ending: Vec<Vec<i64>> = vec![vec![]; n];
    let mut totals: Vec<i64> = vec![1]; // the empty chain
    for i in 0..n {
        let mut best = vec![1i64]; // chains[k-1] with k = 1
        for j in 0..n {
            if cells[j].x < cells[i].x && cells[j].y < cells[i].y {
                for (k, &count) in ending[j].iter().enumerate() {
                    if best.len() <= k + 1 {
                        best.resize(k + 2, 0);
                    }
                    best[k + 1] += count;
                }
            }
        }
        for (k, &count) in best.iter().enumerate() {
            if totals.len() <= k + 1 {
                totals.resize(k + 2, 0);
            }
            totals[k + 1] += count;
        }
        ending[i] = best;
    }
    Ok(IntPoly::from_coeffs(totals))
}

/// Kind of join-irreducible element: the minimum of the maximal horizontal
/// edge interval at a given height, or of the vertical one at a given column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetLabel {
    Row(u16),
    Col(u16),
}

/// The poset of join-irreducible elements, ordered componentwise.
pub struct JoinPoset {
    pub elements: Vec<(PosetLabel, Point)>,
}

/// The minima of the maximal horizontal edge intervals at heights 1..n and
/// of the vertical ones at columns 1..m, with the order inherited from the
/// lattice.
pub fn join_irreducibles(p: &Polyomino) -> Result<JoinPoset, LatticeError> {
    parallelogram::detect(p).map_err(|_| LatticeError::NotParallelogram)?;
    let (m, n) = p.bounding_box();
    let mut elements = Vec::with_capacity((m + n) as usize);
    for iv in p.edge_intervals(Direction::Horizontal) {
        let y = iv.lo.y;
        if y >= 1 {
            elements.push((PosetLabel::Row(y), iv.lo));
        }
    }
    for iv in p.edge_intervals(Direction::Vertical) {
        let x = iv.lo.x;
        if x >= 1 {
            elements.push((PosetLabel::Col(x), iv.lo));
        }
    }
    // one interval per height and per column on a parallelogram polyomino
    debug_assert_eq!(elements.len(), (m + n) as usize);
    Ok(JoinPoset { elements })
}

impl JoinPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn less(&self, i: usize, j: usize) -> bool {
        i != j && self.elements[i].1.leq(&self.elements[j].1)
    }

    fn covers(&self) -> Vec<Vec<usize>> {
        let n = self.elements.len();
        let mut up = vec![Vec::new(); n];
        for (i, above) in up.iter_mut().enumerate() {
            for j in 0..n {
                if self.less(i, j) && !(0..n).any(|k| self.less(i, k) && self.less(k, j)) {
                    above.push(j);
                }
            }
        }
        up
    }

    /// Lengths (edge counts) of all maximal chains.
    pub fn maximal_chain_lengths(&self) -> Vec<usize> {
        let n = self.elements.len();
        let up = self.covers();
        let minimal: Vec<usize> = (0..n)
            .filter(|&j| !(0..n).any(|i| self.less(i, j)))
            .collect();
        let mut lengths = Vec::new();
        fn dfs(up: &[Vec<usize>], at: usize, depth: usize, lengths: &mut Vec<usize>) {
            if up[at].is_empty() {
                lengths.push(depth);
                return;
            }
            for &next in &up[at] {
                dfs(up, next, depth + 1, lengths);
            }
        }
        for &start in &minimal {
            dfs(&up, start, 0, &mut lengths);
        }
        lengths
    }

    /// All maximal chains of the poset have the same length.
    pub fn is_pure(&self) -> bool {
        let lengths = self.maximal_chain_lengths();
        lengths.windows(2).all(|w| w[0] == w[1])
    }
}
