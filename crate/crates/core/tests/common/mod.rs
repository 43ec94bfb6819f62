//! Independent oracles shared by the integration suites. Everything here
//! recomputes results by brute force, without touching the code paths under
//! test.
#![allow(dead_code)] // each suite uses its own subset

use std::collections::BTreeSet;

use polyrook_core::grid::{Cell, Polyomino};
use polyrook_core::io::parse_grid;
use polyrook_core::rook::RookSet;

pub fn p7() -> Polyomino {
    parse_grid("#.#\n###\n##.").unwrap()
}

pub fn sq2() -> Polyomino {
    parse_grid("##\n##").unwrap()
}

pub fn par8() -> Polyomino {
    parse_grid("..##\n.###\n.##.\n##..").unwrap()
}

pub fn gor9() -> Polyomino {
    parse_grid("..##\n..##\n####\n#...").unwrap()
}

pub fn stair5() -> Polyomino {
    parse_grid("..#\n..#\n###").unwrap()
}

pub fn fig7() -> Polyomino {
    parse_grid("..#\n.##\n##.").unwrap()
}

/// Breadth-first polyomino growth with set-based deduplication.
pub fn bfs_polyominoes(rank: usize) -> BTreeSet<Polyomino> {
    let mut layer: BTreeSet<Polyomino> = [Polyomino::normalize([(0, 0)]).unwrap()]
        .into_iter()
        .collect();
    for _ in 1..rank {
        let mut next = BTreeSet::new();
        for p in &layer {
            for c in p.cells() {
                let (x, y) = (c.x as i64, c.y as i64);
                for (nx, ny) in [(x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1)] {
                    let mut cells: Vec<(i64, i64)> =
                        p.cells().iter().map(|c| (c.x as i64, c.y as i64)).collect();
                    if cells.contains(&(nx, ny)) {
                        continue;
                    }
                    cells.push((nx, ny));
                    next.insert(Polyomino::normalize(cells).unwrap());
                }
            }
        }
        layer = next;
    }
    layer
}

/// Cells attack iff one sees the other along its row or column with no gap.
pub fn naive_attacks(p: &Polyomino, a: Cell, b: Cell) -> bool {
    if a == b {
        return false;
    }
    if a.y == b.y {
        let (lo, hi) = (a.x.min(b.x), a.x.max(b.x));
        return (lo..=hi).all(|x| p.contains(Cell::new(x, a.y)));
    }
    if a.x == b.x {
        let (lo, hi) = (a.y.min(b.y), a.y.max(b.y));
        return (lo..=hi).all(|y| p.contains(Cell::new(a.x, y)));
    }
    false
}

/// All non-attacking k-subsets by direct subset enumeration.
pub fn naive_rook_level(p: &Polyomino, k: usize) -> Vec<Vec<Cell>> {
    let cells = p.cells();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        p: &Polyomino,
        cells: &[Cell],
        start: usize,
        k: usize,
        pick: &mut Vec<Cell>,
        out: &mut Vec<Vec<Cell>>,
    ) {
        if pick.len() == k {
            out.push(pick.clone());
            return;
        }
        for i in start..cells.len() {
            if pick.iter().all(|&c| !naive_attacks(p, c, cells[i])) {
                pick.push(cells[i]);
                rec(p, cells, i + 1, k, pick, out);
                pick.pop();
            }
        }
    }
    rec(p, cells, 0, k, &mut pick, &mut out);
    out
}

/// The full switch-equivalence class of one placement, by breadth-first
/// closure. Returns the sorted member list.
pub fn switch_closure(p: &Polyomino, start: &RookSet) -> Vec<RookSet> {
    let mut seen: BTreeSet<RookSet> = [start.clone()].into_iter().collect();
    let mut queue = vec![start.clone()];
    while let Some(f) = queue.pop() {
        for g in polyrook_core::rook::switches(p, &f).unwrap() {
            if seen.insert(g.clone()) {
                queue.push(g);
            }
        }
    }
    seen.into_iter().collect()
}

/// Number of connected components of the complement cells in the bounding
/// box enlarged by a one-cell margin, via union-find.
pub fn complement_components(p: &Polyomino) -> usize {
    let (m, n) = {
        let (m, n) = p.bounding_box();
        (m as usize + 2, n as usize + 2)
    };
    let occupied: Vec<bool> = (0..m * n)
        .map(|i| {
            let (x, y) = (i % m, i / m);
            x >= 1 && y >= 1 && p.contains(Cell::new((x - 1) as u16, (y - 1) as u16))
        })
        .collect();
    let mut parent: Vec<usize> = (0..m * n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &occ) in occupied.iter().enumerate() {
        if occ {
            continue;
        }
        let (x, y) = (i % m, i / m);
        for j in [(x + 1 < m).then(|| i + 1), (y + 1 < n).then(|| i + m)]
            .into_iter()
            .flatten()
        {
            if !occupied[j] {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut roots = BTreeSet::new();
    for (i, &occ) in occupied.iter().enumerate() {
        if !occ {
            let r = find(&mut parent, i);
            roots.insert(r);
        }
    }
    roots.len()
}

/// Monomials of the given total degree in `nvars` variables that avoid every
/// generator, counted by direct enumeration.
pub fn standard_monomial_count(gens: &[Vec<(u32, u32)>], nvars: usize, degree: u32) -> u64 {
    fn divides(g: &[(u32, u32)], exps: &[u32]) -> bool {
        g.iter().all(|&(v, e)| exps[v as usize] >= e)
    }
    fn rec(gens: &[Vec<(u32, u32)>], exps: &mut Vec<u32>, var: usize, left: u32, count: &mut u64) {
        if var + 1 == exps.len() {
            exps[var] = left;
            if !gens.iter().any(|g| divides(g, exps)) {
                *count += 1;
            }
            exps[var] = 0;
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(gens, exps, var + 1, left - e, count);
        }
        exps[var] = 0;
    }
    if nvars == 0 {
        return u64::from(degree == 0);
    }
    let mut exps = vec![0u32; nvars];
    let mut count = 0u64;
    rec(gens, &mut exps, 0, degree, &mut count);
    count
}

/// Coefficient `k` of N(t) / (1-t)^nvars as a power series.
pub fn series_coefficient(numerator: &[i64], nvars: usize, k: usize) -> i64 {
    // 1/(1-t)^n has coefficients C(k + n - 1, n - 1)
    fn binom(n: u64, mut r: u64) -> i64 {
        if r > n {
            return 0;
        }
        r = r.min(n - r);
        let mut acc = 1i64;
        for i in 0..r {
            acc = acc * ((n - i) as i64) / ((i + 1) as i64);
        }
        acc
    }
    numerator
        .iter()
        .enumerate()
        .take(k + 1)
        .map(|(j, &c)| c * binom((k - j + nvars - 1) as u64, (nvars - 1) as u64))
        .sum()
}
