//! Parallelogram polyominoes: the region between two north-east lattice
//! paths that meet only at their endpoints. Detection, path extraction,
//! maximal rectangles, single squares, the S-property, shortenability and
//! the three-way Gorenstein decision.

use std::fmt;

use thiserror::Error;

use crate::grid::{Cell, GridError, Interval, Point, Polyomino};
use crate::lattice;
use crate::motzkin;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParallelogramError {
    #[error("not a parallelogram polyomino")]
    NotParallelogram,
    #[error("paths do not keep the upper path strictly above the lower one")]
    PathsCross,
    #[error("paths do not share both endpoints")]
    EndpointMismatch,
    #[error("a rectangle has no shortening step")]
    IsRectangle,
    #[error(
        "Gorenstein criteria disagree: s_property={s_property} purity={purity} motzkin={motzkin}"
    )]
    MethodsDisagree {
        s_property: bool,
        purity: bool,
        motzkin: bool,
    },
}

/// One step of a north-east lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    North,
    East,
}

/// The two bounding paths of a parallelogram polyomino, both from (0,0) to
/// (m,n), the upper one strictly above the lower one at every interior
/// point. As binary words, North prints as `1` and East as `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPair {
    upper: Vec<Step>,
    lower: Vec<Step>,
}

fn word(steps: &[Step]) -> String {
    steps
        .iter()
        .map(|s| if *s == Step::North { '1' } else { '0' })
        .collect()
}

impl PathPair {
    pub fn new(upper: Vec<Step>, lower: Vec<Step>) -> Result<Self, ParallelogramError> {
        if upper.len() != lower.len() || upper.is_empty() {
            return Err(ParallelogramError::EndpointMismatch);
        }
        let norths = |w: &[Step]| w.iter().filter(|&&s| s == Step::North).count();
        let n = norths(&upper);
        if n != norths(&lower) {
            return Err(ParallelogramError::EndpointMismatch);
        }
        if n == 0 || n == upper.len() {
            // no interior region without at least one step of each kind
            return Err(ParallelogramError::PathsCross);
        }
        // strictly above at every interior step index
        let mut yu = 0i64;
        let mut yl = 0i64;
        for i in 0..upper.len() - 1 {
            if upper[i] == Step::North {
                yu += 1;
            }
            if lower[i] == Step::North {
                yl += 1;
            }
            if yu <= yl {
                return Err(ParallelogramError::PathsCross);
            }
        }
        Ok(PathPair { upper, lower })
    }

    pub fn parse(upper: &str, lower: &str) -> Result<Self, ParallelogramError> {
        let read = |w: &str| -> Result<Vec<Step>, ParallelogramError> {
            w.chars()
                .map(|c| match c {
                    '1' => Ok(Step::North),
                    '0' => Ok(Step::East),
                    _ => Err(ParallelogramError::EndpointMismatch),
                })
                .collect()
        };
        PathPair::new(read(upper)?, read(lower)?)
    }

    pub fn upper(&self) -> &[Step] {
        &self.upper
    }

    pub fn lower(&self) -> &[Step] {
        &self.lower
    }

    pub fn upper_word(&self) -> String {
        word(&self.upper)
    }

    pub fn lower_word(&self) -> String {
        word(&self.lower)
    }

    pub fn len(&self) -> usize {
        self.upper.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid pair has at least two steps
    }

    /// x-coordinates at which a path takes its north step from height y to
    /// y+1, for y = 0..n-1.
    fn north_positions(steps: &[Step]) -> Vec<u16> {
        let mut xs = Vec::new();
        let mut x = 0u16;
        for s in steps {
            match s {
                Step::North => xs.push(x),
                Step::East => x += 1,
            }
        }
        xs
    }
}

impl fmt::Display for PathPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={} l={}", self.upper_word(), self.lower_word())
    }
}

/// Extracts the bounding path pair, or proves the polyomino is not a
/// parallelogram. The pair is verified by reconstructing the polyomino.
pub fn detect(p: &Polyomino) -> Result<PathPair, ParallelogramError> {
    let (m, n) = p.bounding_box();
    // contiguous span of every row
    let mut row_lo = vec![u16::MAX; n as usize];
    let mut row_hi = vec![0u16; n as usize];
    let mut row_count = vec![0usize; n as usize];
    for c in p.cells() {
        let y = c.y as usize;
        row_lo[y] = row_lo[y].min(c.x);
        row_hi[y] = row_hi[y].max(c.x);
        row_count[y] += 1;
    }
    for y in 0..n as usize {
        if row_count[y] != (row_hi[y] - row_lo[y] + 1) as usize {
            return Err(ParallelogramError::NotParallelogram);
        }
    }
    // monotone rows that overlap by at least one column
    for y in 1..n as usize {
        if row_lo[y] < row_lo[y - 1] || row_hi[y] < row_hi[y - 1] || row_lo[y] > row_hi[y - 1] {
            return Err(ParallelogramError::NotParallelogram);
        }
    }
    let mut upper = Vec::with_capacity((m + n) as usize);
    for y in 0..n as usize {
        upper.push(Step::North);
        let next = if y + 1 < n as usize { row_lo[y + 1] } else { m };
        for _ in row_lo[y]..next {
            upper.push(Step::East);
        }
    }
    // column minima drive the lower path
    let mut col_lo = vec![u16::MAX; m as usize];
    for c in p.cells() {
        col_lo[c.x as usize] = col_lo[c.x as usize].min(c.y);
    }
    let mut lower = Vec::with_capacity((m + n) as usize);
    for x in 0..m as usize {
        lower.push(Step::East);
        let next = if x + 1 < m as usize { col_lo[x + 1] } else { n };
        for _ in col_lo[x]..next {
            lower.push(Step::North);
        }
    }
    let pair = PathPair::new(upper, lower).map_err(|_| ParallelogramError::NotParallelogram)?;
    let rebuilt = from_paths(&pair).map_err(|_| ParallelogramError::NotParallelogram)?;
    assert_eq!(&rebuilt, p, "path extraction must reconstruct the region");
    Ok(pair)
}

pub fn is_parallelogram(p: &Polyomino) -> bool {
    detect(p).is_ok()
}

/// The cell region bounded above and below by the two paths.
pub fn from_paths(pair: &PathPair) -> Result<Polyomino, ParallelogramError> {
    let left = PathPair::north_positions(&pair.upper);
    let right = PathPair::north_positions(&pair.lower);
    let mut cells = Vec::new();
    for (y, (&lx, &rx)) in left.iter().zip(&right).enumerate() {
        if lx >= rx {
            return Err(ParallelogramError::PathsCross);
        }
        for x in lx..rx {
            cells.push((x as i64, y as i64));
        }
    }
    Polyomino::normalize(cells).map_err(|e: GridError| match e {
        GridError::TooLarge => ParallelogramError::EndpointMismatch,
        _ => ParallelogramError::PathsCross,
    })
}

/// An inclusion-maximal inner rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxRectangle {
    pub interval: Interval,
}

impl MaxRectangle {
    /// Size as (width, height) in cells.
    pub fn size(&self) -> (u16, u16) {
        self.interval.size()
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.interval.cells().collect()
    }
}

/// All inclusion-maximal inner rectangles, ordered by (lo, hi).
pub fn maximal_rectangles(p: &Polyomino) -> Vec<MaxRectangle> {
    let occ = p.occupancy();
    let (m, n) = p.bounding_box();
    let full = |iv: &Interval| occ.rect_full(iv.lo.x, iv.lo.y, iv.hi.x, iv.hi.y);
    p.inner_intervals()
        .into_iter()
        .filter(|iv| {
            // maximal iff no one-step extension stays inner
            let grow = [
                (iv.lo.x.checked_sub(1), Some(iv.lo.y), iv.hi.x, iv.hi.y),
                (Some(iv.lo.x), iv.lo.y.checked_sub(1), iv.hi.x, iv.hi.y),
                (Some(iv.lo.x), Some(iv.lo.y), iv.hi.x + 1, iv.hi.y),
                (Some(iv.lo.x), Some(iv.lo.y), iv.hi.x, iv.hi.y + 1),
            ];
            grow.iter().all(|&(lx, ly, hx, hy)| match (lx, ly) {
                (Some(lx), Some(ly)) if hx <= m && hy <= n => {
                    !full(&Interval::new(Point::new(lx, ly), Point::new(hx, hy)))
                }
                _ => true,
            })
        })
        .map(|interval| MaxRectangle { interval })
        .collect()
}

/// The unique maximal rectangle whose vertex set contains the origin.
pub fn min_rectangle(p: &Polyomino) -> Result<MaxRectangle, ParallelogramError> {
    let at_origin: Vec<MaxRectangle> = maximal_rectangles(p)
        .into_iter()
        .filter(|r| r.interval.lo == Point::new(0, 0))
        .collect();
    match at_origin.as_slice() {
        [r] => Ok(*r),
        _ => Err(ParallelogramError::NotParallelogram),
    }
}

/// Subrectangles of `rect` whose cells meet no other maximal rectangle,
/// restricted to the inclusion-maximal ones. With `squares_only`, only
/// square candidates compete.
fn single_subrectangles(p: &Polyomino, rect: &MaxRectangle, squares_only: bool) -> Vec<Interval> {
    let others: Vec<MaxRectangle> = maximal_rectangles(p)
        .into_iter()
        .filter(|r| r.interval != rect.interval)
        .collect();
    let iv = rect.interval;
    let free = |c: Cell| others.iter().all(|r| !r.interval.contains_cell(c));
    let mut singles: Vec<Interval> = Vec::new();
    for ly in iv.lo.y..iv.hi.y {
        for lx in iv.lo.x..iv.hi.x {
            for hy in ly + 1..=iv.hi.y {
                for hx in lx + 1..=iv.hi.x {
                    if squares_only && hx - lx != hy - ly {
                        continue;
                    }
                    let cand = Interval::new(Point::new(lx, ly), Point::new(hx, hy));
                    if cand.cells().all(free) {
                        singles.push(cand);
                    }
                }
            }
        }
    }
    let contains =
        |outer: &Interval, inner: &Interval| outer.lo.leq(&inner.lo) && inner.hi.leq(&outer.hi);
    let maximal: Vec<Interval> = singles
        .iter()
        .filter(|s| !singles.iter().any(|o| o != *s && contains(o, s)))
        .copied()
        .collect();
    maximal
}

/// The maximal single squares of a maximal rectangle.
pub fn single_squares(p: &Polyomino, rect: &MaxRectangle) -> Vec<Interval> {
    single_subrectangles(p, rect, true)
}

/// The maximal single rectangles of a maximal rectangle.
pub fn single_rectangles(p: &Polyomino, rect: &MaxRectangle) -> Vec<Interval> {
    single_subrectangles(p, rect, false)
}

/// Every maximal rectangle has exactly one maximal single square.
pub fn has_s_property(p: &Polyomino) -> bool {
    maximal_rectangles(p)
        .iter()
        .all(|r| single_squares(p, r).len() == 1)
}

/// Removing the origin rectangle leaves a parallelogram polyomino. Both the
/// definitional check and the single-rectangle size criterion are computed
/// and must agree.
pub fn is_shortenable(p: &Polyomino) -> Result<bool, ParallelogramError> {
    detect(p)?;
    let (m, n) = p.bounding_box();
    if p.rank() == (m as usize) * (n as usize) {
        return Err(ParallelogramError::IsRectangle);
    }
    let origin_rect = min_rectangle(p)?;
    let definitional = match p.difference(&origin_rect.cells()) {
        Ok(rest) => is_parallelogram(&rest),
        Err(_) => false,
    };
    // size criterion: the single rectangle of the origin rectangle spans its
    // full width or full height
    let (s, t) = origin_rect.size();
    let corner = Cell::new(0, 0);
    let by_sizes = single_rectangles(p, &origin_rect)
        .iter()
        .filter(|iv| iv.contains_cell(corner))
        .any(|iv| {
            let (sp, tp) = iv.size();
            sp == s || tp == t
        });
    assert_eq!(
        definitional, by_sizes,
        "shortenability criteria must agree on {p:?}"
    );
    Ok(definitional)
}

/// Why a derived sequence stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Terminal {
    /// The last stage (or the polyomino itself) is a rectangle.
    Rectangle(Polyomino),
    /// Removing the origin rectangle left something that is not a
    /// parallelogram polyomino; the leftover cells are kept for reporting.
    Stuck(Vec<Cell>),
}

/// Stages obtained by repeatedly removing the origin rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSequence {
    pub stages: Vec<Polyomino>,
    pub terminal: Terminal,
}

impl DerivedSequence {
    pub fn reached_rectangle(&self) -> bool {
        matches!(self.terminal, Terminal::Rectangle(_))
    }
}

/// Iterates origin-rectangle removal until a rectangle remains or a stage
/// fails to be a parallelogram polyomino.
pub fn derived_sequence(p: &Polyomino) -> Result<DerivedSequence, ParallelogramError> {
    detect(p)?;
    let mut stages = Vec::new();
    let mut current = p.clone();
    loop {
        let (m, n) = current.bounding_box();
        if current.rank() == (m as usize) * (n as usize) {
            return Ok(DerivedSequence {
                stages,
                terminal: Terminal::Rectangle(current),
            });
        }
        let rect = min_rectangle(&current)?;
        let leftover: Vec<Cell> = {
            let drop: std::collections::HashSet<Cell> = rect.cells().into_iter().collect();
            current
                .cells()
                .iter()
                .copied()
                .filter(|c| !drop.contains(c))
                .collect()
        };
        match current.difference(&rect.cells()) {
            Ok(next) if is_parallelogram(&next) => {
                stages.push(next.clone());
                current = next;
            }
            _ => {
                return Ok(DerivedSequence {
                    stages,
                    terminal: Terminal::Stuck(leftover),
                })
            }
        }
    }
}

/// Shortenable at every stage, ending in a rectangle.
pub fn is_well_shortenable(p: &Polyomino) -> Result<bool, ParallelogramError> {
    Ok(derived_sequence(p)?.reached_rectangle())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GorensteinMethod {
    SProperty,
    Purity,
    Motzkin,
    All,
}

/// Per-method verdicts; `agree` is false only on a counterexample to the
/// equivalence of the three criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GorensteinVerdicts {
    pub s_property: bool,
    pub purity: bool,
    pub motzkin: bool,
}

impl GorensteinVerdicts {
    pub fn agree(&self) -> bool {
        self.s_property == self.purity && self.purity == self.motzkin
    }
}

/// Runs all three Gorenstein criteria.
pub fn gorenstein_verdicts(p: &Polyomino) -> Result<GorensteinVerdicts, ParallelogramError> {
    let pair = detect(p)?;
    let s_property = has_s_property(p);
    let purity = lattice::join_irreducibles(p)
        .map_err(|_| ParallelogramError::NotParallelogram)?
        .is_pure();
    let motzkin = motzkin::gorenstein_blocks(&motzkin::encode(&pair));
    Ok(GorensteinVerdicts {
        s_property,
        purity,
        motzkin,
    })
}

/// Decides Gorensteinness by the requested method; `All` cross-checks the
/// three criteria and reports a disagreement instead of guessing.
pub fn is_gorenstein(p: &Polyomino, method: GorensteinMethod) -> Result<bool, ParallelogramError> {
    match method {
        GorensteinMethod::SProperty => {
            detect(p)?;
            Ok(has_s_property(p))
        }
        GorensteinMethod::Purity => Ok(lattice::join_irreducibles(p)
            .map_err(|_| ParallelogramError::NotParallelogram)?
            .is_pure()),
        GorensteinMethod::Motzkin => Ok(motzkin::gorenstein_blocks(&motzkin::encode(&detect(p)?))),
        GorensteinMethod::All => {
            let v = gorenstein_verdicts(p)?;
            if v.agree() {
                Ok(v.s_property)
            } else {
                Err(ParallelogramError::MethodsDisagree {
                    s_property: v.s_property,
                    purity: v.purity,
                    motzkin: v.motzkin,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_grid;

    fn par8() -> Polyomino {
        parse_grid("..##\n.###\n.##.\n##..").unwrap()
    }

    fn gor9() -> Polyomino {
        parse_grid("..##\n..##\n####\n#...").unwrap()
    }

    fn stair5() -> Polyomino {
        parse_grid("..#\n..#\n###").unwrap()
    }

    fn fig6() -> Polyomino {
        par8()
    }

    fn fig7() -> Polyomino {
        parse_grid("..#\n.##\n##.").unwrap()
    }

    #[test]
    fn detect_reads_the_bounding_paths() {
        let pair = detect(&par8()).unwrap();
        assert_eq!(pair.upper_word(), "10110100");
        assert_eq!(pair.lower_word(), "00101011");

        let pair = detect(&stair5()).unwrap();
        assert_eq!(pair.upper_word(), "100110");
        assert_eq!(pair.lower_word(), "000111");

        let pair = detect(&gor9()).unwrap();
        assert_eq!(pair.upper_word(), "11001100");
        assert_eq!(pair.lower_word(), "01000111");
    }

    #[test]
    fn detect_rejects_non_parallelograms() {
        let p7 = parse_grid("#.#\n###\n##.").unwrap();
        assert_eq!(detect(&p7), Err(ParallelogramError::NotParallelogram));
        let ell = parse_grid("#.\n##").unwrap();
        assert_eq!(detect(&ell), Err(ParallelogramError::NotParallelogram));
    }

    #[test]
    fn paths_round_trip() {
        for p in [par8(), gor9(), stair5(), parse_grid("#").unwrap()] {
            let pair = detect(&p).unwrap();
            assert_eq!(from_paths(&pair).unwrap(), p);
        }
        let single = PathPair::parse("10", "01").unwrap();
        assert_eq!(from_paths(&single).unwrap(), parse_grid("#").unwrap());
        let sq2 = PathPair::parse("1100", "0011").unwrap();
        assert_eq!(from_paths(&sq2).unwrap(), parse_grid("##\n##").unwrap());
    }

    #[test]
    fn path_pair_validation() {
        assert_eq!(
            PathPair::parse("10", "10"),
            Err(ParallelogramError::PathsCross)
        );
        assert_eq!(
            PathPair::parse("110", "01"),
            Err(ParallelogramError::EndpointMismatch)
        );
        assert_eq!(
            PathPair::parse("100", "011"),
            Err(ParallelogramError::EndpointMismatch)
        );
        // touching in the middle
        assert_eq!(
            PathPair::parse("1010", "0101"),
            Err(ParallelogramError::PathsCross)
        );
    }

    #[test]
    fn fig6_has_six_maximal_rectangles() {
        let p = fig6();
        let rects = maximal_rectangles(&p);
        assert_eq!(rects.len(), 6);
        let ivs: Vec<(Point, Point)> = rects
            .iter()
            .map(|r| (r.interval.lo, r.interval.hi))
            .collect();
        for (lo, hi) in [
            ((0, 0), (2, 1)),
            ((1, 0), (2, 3)),
            ((1, 1), (3, 3)),
            ((2, 1), (3, 4)),
            ((1, 2), (4, 3)),
            ((2, 2), (4, 4)),
        ] {
            assert!(
                ivs.contains(&(Point::new(lo.0, lo.1), Point::new(hi.0, hi.1))),
                "missing rectangle {lo:?}..{hi:?}"
            );
        }
    }

    #[test]
    fn rectangles_of_rectangles_and_stairs() {
        let sq2 = parse_grid("##\n##").unwrap();
        let rects = maximal_rectangles(&sq2);
        assert_eq!(rects.len(), 1);
        assert_eq!(
            rects[0].interval,
            Interval::new(Point::new(0, 0), Point::new(2, 2))
        );
        assert_eq!(maximal_rectangles(&stair5()).len(), 2);
    }

    #[test]
    fn min_rectangle_examples() {
        assert_eq!(
            min_rectangle(&fig6()).unwrap().interval,
            Interval::new(Point::new(0, 0), Point::new(2, 1))
        );
        let sq2 = parse_grid("##\n##").unwrap();
        assert_eq!(
            min_rectangle(&sq2).unwrap().interval,
            Interval::new(Point::new(0, 0), Point::new(2, 2))
        );
        assert_eq!(
            min_rectangle(&gor9()).unwrap().interval,
            Interval::new(Point::new(0, 0), Point::new(1, 2))
        );
    }

    #[test]
    fn fig6_single_squares() {
        let p = fig6();
        let rects = maximal_rectangles(&p);
        let by_lo = |lo: (u16, u16)| {
            *rects
                .iter()
                .find(|r| r.interval.lo == Point::new(lo.0, lo.1))
                .unwrap()
        };
        // the bottom rectangle has only cell A free of other rectangles
        let r_ab = by_lo((0, 0));
        assert_eq!(
            single_squares(&p, &r_ab),
            vec![Interval::new(Point::new(0, 0), Point::new(1, 1))]
        );
        // the top rectangle has only cell I
        let r_fghi = by_lo((2, 2));
        assert_eq!(
            single_squares(&p, &r_fghi),
            vec![Interval::new(Point::new(3, 3), Point::new(4, 4))]
        );
        // the central rectangle is fully covered by the others
        let r_cdef = by_lo((1, 1));
        assert_eq!(single_squares(&p, &r_cdef), vec![]);
    }

    #[test]
    fn s_property_examples() {
        assert!(has_s_property(&gor9()));
        assert!(!has_s_property(&fig6()));
        assert!(!has_s_property(&fig7()));
        assert!(!has_s_property(&stair5()));
        // squares have it, non-square rectangles do not
        assert!(has_s_property(&parse_grid("##\n##").unwrap()));
        assert!(!has_s_property(&parse_grid("##").unwrap()));
    }

    #[test]
    fn shortenability() {
        assert!(is_shortenable(&fig6()).unwrap());
        assert!(is_shortenable(&gor9()).unwrap());
        assert!(is_shortenable(&stair5()).unwrap());
        // the first derived stage of the nine-cell staircase is stuck
        let stage1 = fig6()
            .difference(&min_rectangle(&fig6()).unwrap().cells())
            .unwrap();
        assert!(!is_shortenable(&stage1).unwrap());
        assert_eq!(
            is_shortenable(&parse_grid("##\n##").unwrap()),
            Err(ParallelogramError::IsRectangle)
        );
        // wide origin rectangle whose free part spans neither full width nor
        // full height
        let blocked = parse_grid("..##\n####\n###.").unwrap();
        assert!(!is_shortenable(&blocked).unwrap());
    }

    #[test]
    fn derived_sequences() {
        // shortenable but not well-shortenable: the second stage fails
        let seq = derived_sequence(&fig6()).unwrap();
        assert_eq!(seq.stages.len(), 1);
        assert!(matches!(seq.terminal, Terminal::Stuck(_)));
        assert!(!is_well_shortenable(&fig6()).unwrap());

        let seq = derived_sequence(&gor9()).unwrap();
        assert!(seq.reached_rectangle());

        let sq2 = parse_grid("##\n##").unwrap();
        let seq = derived_sequence(&sq2).unwrap();
        assert!(seq.stages.is_empty());
        assert_eq!(seq.terminal, Terminal::Rectangle(sq2));
    }

    #[test]
    fn gorenstein_three_ways() {
        for method in [
            GorensteinMethod::SProperty,
            GorensteinMethod::Purity,
            GorensteinMethod::Motzkin,
            GorensteinMethod::All,
        ] {
            assert!(is_gorenstein(&gor9(), method).unwrap());
            assert!(!is_gorenstein(&stair5(), method).unwrap());
            assert!(!is_gorenstein(&fig7(), method).unwrap());
            assert!(is_gorenstein(&parse_grid("##\n##").unwrap(), method).unwrap());
            assert!(!is_gorenstein(&parse_grid("##").unwrap(), method).unwrap());
        }
        let single = parse_grid("#").unwrap();
        assert!(is_gorenstein(&single, GorensteinMethod::All).unwrap());
    }
}
