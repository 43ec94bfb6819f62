//! The inner-2-minor ideal of a polyomino and its Hilbert numerator.
//!
//! Everything is binomial with unit coefficients: generators are differences
//! of two monomials and stay that way under S-pairs and reduction, so the
//! Buchberger loop tracks pairs of monomials and a sign instead of general
//! polynomials. The initial ideal feeds a pivot recursion for the numerator
//! N(t) with HS = N(t)/(1-t)^nvars, and exact division by (1-t)^rank yields
//! the h-polynomial.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::grid::{Point, Polyomino};
use crate::poly::IntPoly;

pub type Var = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("numerator not divisible by (1-t)^rank; input not simple or basis wrong")]
    InexactDivision,
    #[error("h-polynomial has a negative coefficient; input not simple or basis wrong")]
    NegativeCoefficient,
}

/// A monomial as a sorted sparse exponent vector (no zero entries).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: vec![] }
    }

    pub fn var(v: Var) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        let mut exps: Vec<(Var, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match exps.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => exps.push((v, e)),
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend_from_slice(&other.exps);
        Monomial::from_pairs(exps)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        let mut rhs = other.exps.iter().peekable();
        for &(v, e) in &self.exps {
            let mut need = 0;
            if let Some(&&(w, f)) = rhs.peek() {
                if w < v {
                    return None; // divisor has a variable we lack
                }
                if w == v {
                    need = f;
                    rhs.next();
                }
            }
            if need > e {
                return None;
            }
            if e - need > 0 {
                exps.push((v, e - need));
            }
        }
        if rhs.next().is_some() {
            return None;
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.try_div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps: Vec<(Var, u32)> = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(v, e)), Some(&(w, f))) if v == w => {
                    exps.push((v, e.max(f)));
                    i += 1;
                    j += 1;
                }
                (Some(&(v, e)), Some(&(w, _))) if v < w => {
                    exps.push((v, e));
                    i += 1;
                }
                (Some(_), Some(&(w, f))) => {
                    exps.push((w, f));
                    j += 1;
                }
                (Some(&(v, e)), None) => {
                    exps.push((v, e));
                    i += 1;
                }
                (None, Some(&(w, f))) => {
                    exps.push((w, f));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial { exps }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Equal => return false,
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
            }
        }
        true
    }

    /// `self / v` when `v` divides, otherwise `self` (colon by a variable).
    pub fn colon_var(&self, v: Var) -> Monomial {
        if self.exponent(v) == 0 {
            return self.clone();
        }
        let mut exps = self.exps.clone();
        let i = exps.binary_search_by_key(&v, |&(w, _)| w).unwrap();
        if exps[i].1 == 1 {
            exps.remove(i);
        } else {
            exps[i].1 -= 1;
        }
        Monomial { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial orders over variables indexed by the (y,x)-sorted vertex list;
/// a higher index is a larger variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded, ties broken by the smallest variable with differing exponent:
    /// the monomial with the smaller exponent there wins. Gives antidiagonal
    /// leading terms on inner 2-minors.
    DegRevLex,
    /// Pure lexicographic from the largest variable down. Gives diagonal
    /// leading terms.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                let (mut i, mut j) = (0, 0);
                loop {
                    match (a.exps.get(i), b.exps.get(j)) {
                        (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                            Ordering::Equal => {
                                if e != f {
                                    return f.cmp(&e);
                                }
                                i += 1;
                                j += 1;
                            }
                            // a has an exponent at a smaller variable than b
                            Ordering::Less => return Ordering::Less,
                            Ordering::Greater => return Ordering::Greater,
                        },
                        (Some(_), None) => return Ordering::Less,
                        (None, Some(_)) => return Ordering::Greater,
                        (None, None) => return Ordering::Equal,
                    }
                }
            }),
            MonomialOrder::Lex => {
                let (mut i, mut j) = (a.exps.len(), b.exps.len());
                loop {
                    match (i.checked_sub(1), j.checked_sub(1)) {
                        (Some(ii), Some(jj)) => {
                            let (v, e) = a.exps[ii];
                            let (w, f) = b.exps[jj];
                            match v.cmp(&w) {
                                Ordering::Equal => {
                                    if e != f {
                                        return e.cmp(&f);
                                    }
                                    i = ii;
                                    j = jj;
                                }
                                Ordering::Less => return Ordering::Less,
                                Ordering::Greater => return Ordering::Greater,
                            }
                        }
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (None, None) => return Ordering::Equal,
                    }
                }
            }
        }
    }
}

/// `lead - trail` with unit coefficients, lead strictly greater under the
/// active order. The sign is immaterial for ideal membership, so orienting
/// normalizes it away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    lead: Monomial,
    trail: Monomial,
}

impl Binomial {
    /// Orders the two monomials; None when they are equal (the zero
    /// binomial).
    pub fn oriented(a: Monomial, b: Monomial, order: MonomialOrder) -> Option<Binomial> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

/// Variables and generators of the inner-2-minor ideal.
pub struct IdealSetup {
    /// Variable i is the i-th vertex in (y,x) order.
    pub vars: Vec<Point>,
    pub gens: Vec<Binomial>,
}

/// One binomial per proper inner interval: diagonal product minus
/// antidiagonal product, oriented under the given order.
pub fn generators(p: &Polyomino, order: MonomialOrder) -> IdealSetup {
    let vars = p.vertices();
    let index: HashMap<Point, Var> = vars
        .iter()
        .enumerate()
        .map(|(i, &pt)| (pt, i as Var))
        .collect();
    let gens = p
        .inner_intervals()
        .iter()
        .map(|iv| {
            let (c, d) = iv.anti_diagonal_corners();
            let diag = Monomial::var(index[&iv.lo]).mul(&Monomial::var(index[&iv.hi]));
            let anti = Monomial::var(index[&c]).mul(&Monomial::var(index[&d]));
            Binomial::oriented(diag, anti, order)
                .expect("diagonal and antidiagonal products differ")
        })
        .collect();
    IdealSetup { vars, gens }
}

fn reduce_once(m: &Monomial, basis: &[Binomial], skip: Option<usize>) -> Option<Monomial> {
    for (i, g) in basis.iter().enumerate() {
        if Some(i) == skip {
            continue;
        }
        if let Some(q) = m.try_div(g.lead()) {
            return Some(q.mul(g.trail()));
        }
    }
    None
}

/// Normal form of a binomial against the basis; None means it reduced to
/// zero. Every rewrite keeps the element a difference of two monomials.
fn normal_form(
    start: Option<Binomial>,
    basis: &[Binomial],
    order: MonomialOrder,
) -> Option<Binomial> {
    let mut cur = start?;
    loop {
        if let Some(lead) = reduce_once(&cur.lead, basis, None) {
            cur = Binomial::oriented(lead, cur.trail, order)?;
            continue;
        }
        if let Some(trail) = reduce_once(&cur.trail, basis, None) {
            cur = Binomial::oriented(cur.lead, trail, order)?;
            continue;
        }
        return Some(cur);
    }
}

fn s_poly(f: &Binomial, g: &Binomial, order: MonomialOrder) -> Option<Binomial> {
    let l = f.lead.lcm(&g.lead);
    let from_f = l.try_div(&f.lead).unwrap().mul(&f.trail);
    let from_g = l.try_div(&g.lead).unwrap().mul(&g.trail);
    Binomial::oriented(from_f, from_g, order)
}

/// Buchberger's algorithm specialized to binomials, with the coprime-lead
/// and chain criteria, followed by inter-reduction. Completeness of the
/// result is re-verified by reducing every S-pair of the final basis.
pub fn buchberger(gens: &[Binomial], order: MonomialOrder) -> Vec<Binomial> {
    let mut basis: Vec<Binomial> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut heap: BinaryHeap<std::cmp::Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let add = |b: Binomial,
               basis: &mut Vec<Binomial>,
               pending: &mut HashSet<(usize, usize)>,
               heap: &mut BinaryHeap<std::cmp::Reverse<(u32, usize, usize)>>| {
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let deg = g.lead.lcm(&b.lead).degree();
            pending.insert((i, j));
            heap.push(std::cmp::Reverse((deg, i, j)));
        }
        basis.push(b);
    };
    for g in gens {
        if let Some(nf) = normal_form(Some(g.clone()), &basis, order) {
            add(nf, &mut basis, &mut pending, &mut heap);
        }
    }
    while let Some(std::cmp::Reverse((_, i, j))) = heap.pop() {
        pending.remove(&(i, j));
        let lcm = basis[i].lead.lcm(&basis[j].lead);
        if basis[i].lead.coprime(&basis[j].lead) {
            continue;
        }
        let chain_skip = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain_skip {
            continue;
        }
        if let Some(nf) = normal_form(s_poly(&basis[i], &basis[j], order), &basis, order) {
            add(nf, &mut basis, &mut pending, &mut heap);
        }
    }
    // keep only elements with minimal leading terms
    let minimal: Vec<Binomial> = basis
        .iter()
        .enumerate()
        .filter(|(i, g)| {
            !basis
                .iter()
                .enumerate()
                .any(|(j, h)| j != *i && h.lead.divides(&g.lead))
        })
        .map(|(_, g)| g.clone())
        .collect();
    // tail-reduce against the minimal leads
    let mut reduced: Vec<Binomial> = minimal
        .iter()
        .map(|g| {
            let mut trail = g.trail.clone();
            while let Some(next) = reduce_once(&trail, &minimal, None) {
                trail = next;
            }
            Binomial::oriented(g.lead.clone(), trail, order)
                .expect("tail reduction keeps the element nonzero")
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
    // completeness: every S-pair of the final basis reduces to zero
    for i in 0..reduced.len() {
        for j in i + 1..reduced.len() {
            let s = normal_form(s_poly(&reduced[i], &reduced[j], order), &reduced, order);
            assert!(s.is_none(), "S-pair of a completed basis must vanish");
        }
    }
    reduced
}

/// A monomial ideal kept by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            gens: minimalize(gens),
        }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.exps.iter().all(|&(_, e)| e == 1))
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| (g.degree(), g.exps.clone()));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Leading terms of a (Gröbner) basis.
pub fn initial_ideal(basis: &[Binomial]) -> MonomialIdeal {
    MonomialIdeal::new(basis.iter().map(|b| b.lead.clone()).collect())
}

/// Numerator N(t) with HS_{R/I} = N(t)/(1-t)^nvars, by pivot recursion on
/// the minimal generators.
pub fn hilbert_numerator(ideal: &MonomialIdeal, nvars: usize) -> IntPoly {
    debug_assert!(ideal
        .gens
        .iter()
        .all(|g| g.vars().all(|v| (v as usize) < nvars)));
    numerator_rec(&ideal.gens)
}

fn numerator_rec(gens: &[Monomial]) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return IntPoly::zero();
    }
    let pairwise_coprime =
        (0..gens.len()).all(|i| (i + 1..gens.len()).all(|j| gens[i].coprime(&gens[j])));
    if pairwise_coprime {
        return gens.iter().fold(IntPoly::one(), |acc, g| {
            acc.mul(&IntPoly::one_minus_t_pow(g.degree() as usize))
        });
    }
    // pivot on the variable hitting the most generators
    let mut counts: HashMap<Var, usize> = HashMap::new();
    for g in gens {
        for v in g.vars() {
            *counts.entry(v).or_insert(0) += 1;
        }
    }
    let pivot = counts
        .iter()
        .max_by_key(|&(v, c)| (*c, std::cmp::Reverse(*v)))
        .map(|(&v, _)| v)
        .unwrap();
    // N(I + (x)) = (1 - t) * N(gens free of x), since x is coprime to them
    let rest: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponent(pivot) == 0)
        .cloned()
        .collect();
    let plus = IntPoly::one_minus_t_pow(1).mul(&numerator_rec(&rest));
    // N(I : x) over the colon generators
    let colon = minimalize(gens.iter().map(|g| g.colon_var(pivot)).collect());
    let shifted = numerator_rec(&colon).shift(1);
    plus.add(&shifted)
}

/// Krull dimension of the coordinate ring of a simple polyomino.
pub fn krull_dim(p: &Polyomino) -> usize {
    p.vertex_count() - p.rank()
}

/// The h-polynomial via the Gröbner route: initial ideal, numerator, exact
/// division by (1-t)^rank.
pub fn h_polynomial(p: &Polyomino, order: MonomialOrder) -> Result<IntPoly, AlgebraError> {
    let setup = generators(p, order);
    let basis = buchberger(&setup.gens, order);
    let init = initial_ideal(&basis);
    let numerator = hilbert_numerator(&init, setup.vars.len());
    let h = numerator
        .div_one_minus_t_pow(p.rank())
        .map_err(|_| AlgebraError::InexactDivision)?;
    if h.has_negative_coeff() {
        return Err(AlgebraError::NegativeCoefficient);
    }
    Ok(h)
}

/// Castelnuovo-Mumford regularity: the degree of the h-polynomial.
pub fn regularity(p: &Polyomino, order: MonomialOrder) -> Result<usize, AlgebraError> {
    Ok(h_polynomial(p, order)?.degree().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_grid;

    fn sq2() -> Polyomino {
        parse_grid("##\n##").unwrap()
    }

    fn p7() -> Polyomino {
        parse_grid("#.#\n###\n##.").unwrap()
    }

    fn m(pairs: &[(Var, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.to_vec())
    }

    #[test]
    fn monomial_arithmetic() {
        let a = m(&[(0, 1), (3, 2)]);
        let b = m(&[(3, 1), (5, 1)]);
        assert_eq!(a.mul(&b), m(&[(0, 1), (3, 3), (5, 1)]));
        assert_eq!(a.lcm(&b), m(&[(0, 1), (3, 2), (5, 1)]));
        assert!(!a.coprime(&b));
        assert!(a.coprime(&m(&[(1, 1), (2, 4)])));
        assert_eq!(a.try_div(&m(&[(3, 1)])), Some(m(&[(0, 1), (3, 1)])));
        assert_eq!(a.try_div(&b), None);
        assert_eq!(a.colon_var(3), m(&[(0, 1), (3, 1)]));
        assert_eq!(a.colon_var(7), a);
    }

    #[test]
    fn degrevlex_prefers_antidiagonal_products() {
        // four corner variables in (y,x) order: a < d < c < b
        let (a, d, c, b) = (0, 1, 2, 3);
        let diag = m(&[(a, 1), (b, 1)]);
        let anti = m(&[(d, 1), (c, 1)]);
        assert_eq!(
            MonomialOrder::DegRevLex.cmp(&anti, &diag),
            Ordering::Greater
        );
        assert_eq!(MonomialOrder::Lex.cmp(&diag, &anti), Ordering::Greater);
    }

    #[test]
    fn generator_counts() {
        assert_eq!(
            generators(&parse_grid("#").unwrap(), MonomialOrder::DegRevLex)
                .gens
                .len(),
            1
        );
        assert_eq!(generators(&sq2(), MonomialOrder::DegRevLex).gens.len(), 9);
        assert_eq!(
            generators(&parse_grid("##").unwrap(), MonomialOrder::DegRevLex)
                .gens
                .len(),
            3
        );
    }

    #[test]
    fn buchberger_smallest_cases() {
        assert!(buchberger(&[], MonomialOrder::DegRevLex).is_empty());
        let single = generators(&parse_grid("#").unwrap(), MonomialOrder::DegRevLex);
        let basis = buchberger(&single.gens, MonomialOrder::DegRevLex);
        assert_eq!(basis, single.gens);
    }

    #[test]
    fn sq2_initial_ideal_is_squarefree_under_degrevlex() {
        let setup = generators(&sq2(), MonomialOrder::DegRevLex);
        let basis = buchberger(&setup.gens, MonomialOrder::DegRevLex);
        let init = initial_ideal(&basis);
        assert!(init.is_squarefree());
        // the lattice relations are already a Gröbner basis here
        assert_eq!(basis.len(), 9);
    }

    #[test]
    fn numerator_base_cases() {
        let empty = MonomialIdeal::new(vec![]);
        assert_eq!(hilbert_numerator(&empty, 4), IntPoly::one());
        let principal = MonomialIdeal::new(vec![m(&[(0, 1), (1, 1)])]);
        assert_eq!(
            hilbert_numerator(&principal, 4),
            IntPoly::from_coeffs([1, 0, -1])
        );
    }

    #[test]
    fn numerator_of_sq2_matches_the_closed_form() {
        let setup = generators(&sq2(), MonomialOrder::DegRevLex);
        let basis = buchberger(&setup.gens, MonomialOrder::DegRevLex);
        let n = hilbert_numerator(&initial_ideal(&basis), 9);
        let expected = IntPoly::from_coeffs([1, 4, 1])
            .mul(&IntPoly::one_minus_t_pow(1))
            .mul(&IntPoly::one_minus_t_pow(1))
            .mul(&IntPoly::one_minus_t_pow(1))
            .mul(&IntPoly::one_minus_t_pow(1));
        assert_eq!(n, expected);
    }

    #[test]
    fn h_polynomials() {
        let single = parse_grid("#").unwrap();
        assert_eq!(
            h_polynomial(&single, MonomialOrder::DegRevLex).unwrap(),
            IntPoly::from_coeffs([1, 1])
        );
        assert_eq!(
            h_polynomial(&sq2(), MonomialOrder::DegRevLex).unwrap(),
            IntPoly::from_coeffs([1, 4, 1])
        );
        assert_eq!(
            h_polynomial(&p7(), MonomialOrder::DegRevLex).unwrap(),
            IntPoly::from_coeffs([1, 7, 11, 4])
        );
        // the initial ideal differs under lex, the h-polynomial does not
        assert_eq!(
            h_polynomial(&p7(), MonomialOrder::Lex).unwrap(),
            IntPoly::from_coeffs([1, 7, 11, 4])
        );
    }

    #[test]
    fn dimensions_and_regularity() {
        assert_eq!(krull_dim(&parse_grid("#").unwrap()), 3);
        assert_eq!(krull_dim(&p7()), 8);
        assert_eq!(krull_dim(&sq2()), 5);
        assert_eq!(regularity(&p7(), MonomialOrder::DegRevLex).unwrap(), 3);
        assert_eq!(
            regularity(&parse_grid("#").unwrap(), MonomialOrder::DegRevLex).unwrap(),
            1
        );
    }
}
