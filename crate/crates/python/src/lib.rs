//! Python bindings: a `Polyomino` class carrying the main computations plus
//! module-level enumeration, decoding and sweep helpers.
//!
//! Build with `cargo build -p polyrook-python --release`; the resulting
//! `libpolyrook.so` imports as the `polyrook` module once renamed to
//! `polyrook.so` (see python/smoke_test.py).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use polyrook_core::algebra::{self, MonomialOrder};
use polyrook_core::enumerate::{self, Dedup};
use polyrook_core::grid;
use polyrook_core::io;
use polyrook_core::lattice;
use polyrook_core::motzkin::{self, MotzkinWord};
use polyrook_core::parallelogram::{self, GorensteinMethod};
use polyrook_core::poly::IntPoly;
use polyrook_core::rook::RookComplex;
use polyrook_core::verify;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn coeffs(p: &IntPoly) -> PyResult<Vec<i64>> {
    p.to_i64_coeffs()
        .ok_or_else(|| value_err("coefficients exceed 64 bits"))
}

fn parse_order(order: &str) -> PyResult<MonomialOrder> {
    match order {
        "degrevlex" => Ok(MonomialOrder::DegRevLex),
        "lex" => Ok(MonomialOrder::Lex),
        other => Err(value_err(format!("unknown order {other:?}"))),
    }
}

/// A translation-normalized, edge-connected set of unit cells.
#[pyclass(frozen, eq)]
#[derive(PartialEq)]
struct Polyomino {
    inner: grid::Polyomino,
}

#[pymethods]
impl Polyomino {
    /// Polyomino([(x, y), ...])
    #[new]
    fn new(cells: Vec<(i64, i64)>) -> PyResult<Self> {
        Ok(Polyomino {
            inner: grid::Polyomino::normalize(cells).map_err(value_err)?,
        })
    }

    /// Parse the text format: '#' for cells, '.' for gaps, bottom row last.
    #[staticmethod]
    fn from_grid(text: &str) -> PyResult<Self> {
        Ok(Polyomino {
            inner: io::parse_grid(text).map_err(value_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Polyomino({:?})",
            self.inner
                .cells()
                .iter()
                .map(|c| (c.x, c.y))
                .collect::<Vec<_>>()
        )
    }

    fn cells(&self) -> Vec<(u16, u16)> {
        self.inner.cells().iter().map(|c| (c.x, c.y)).collect()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn grid(&self) -> String {
        io::to_grid(&self.inner)
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    fn is_parallelogram(&self) -> bool {
        parallelogram::is_parallelogram(&self.inner)
    }

    /// Least representative under the eight symmetries of the square.
    fn canonical(&self) -> Polyomino {
        Polyomino {
            inner: self.inner.canonical_form(),
        }
    }

    /// Coefficients of the rook polynomial r(t).
    fn rook_polynomial(&self) -> PyResult<Vec<i64>> {
        coeffs(&RookComplex::new(&self.inner).polynomial())
    }

    /// Coefficients of r~(t): switch classes of placements per size.
    fn rook_equivalence_polynomial(&self) -> PyResult<Vec<i64>> {
        coeffs(
            &RookComplex::new(&self.inner)
                .class_polynomial()
                .map_err(value_err)?,
        )
    }

    /// Coefficients of h(t) via the Gröbner route.
    #[pyo3(signature = (order = "degrevlex"))]
    fn h_polynomial(&self, order: &str) -> PyResult<Vec<i64>> {
        let h = algebra::h_polynomial(&self.inner, parse_order(order)?).map_err(value_err)?;
        coeffs(&h)
    }

    /// h(t) via descent counting on the lattice (parallelograms only).
    fn h_via_descents(&self) -> PyResult<Vec<i64>> {
        let l = lattice::lattice_of(&self.inner).map_err(value_err)?;
        coeffs(
            &l.h_via_descents(lattice::DEFAULT_CHAIN_CAP)
                .map_err(value_err)?,
        )
    }

    /// h(t) via the strictly-increasing cell-chain DP (parallelograms only).
    fn h_via_cell_chains(&self) -> PyResult<Vec<i64>> {
        coeffs(&lattice::h_via_cell_chains(&self.inner).map_err(value_err)?)
    }

    fn krull_dim(&self) -> usize {
        algebra::krull_dim(&self.inner)
    }

    fn regularity(&self) -> PyResult<usize> {
        algebra::regularity(&self.inner, MonomialOrder::DegRevLex).map_err(value_err)
    }

    /// The bounding north-east paths as binary words (upper, lower).
    fn paths(&self) -> PyResult<(String, String)> {
        let pair = parallelogram::detect(&self.inner).map_err(value_err)?;
        Ok((pair.upper_word(), pair.lower_word()))
    }

    /// The 2-colored Motzkin word over R, F, A, B.
    fn motzkin_word(&self) -> PyResult<String> {
        let pair = parallelogram::detect(&self.inner).map_err(value_err)?;
        Ok(motzkin::encode(&pair).to_string())
    }

    /// Gorenstein decision; method is "all", "s-property", "purity" or
    /// "motzkin".
    #[pyo3(signature = (method = "all"))]
    fn is_gorenstein(&self, method: &str) -> PyResult<bool> {
        let method = match method {
            "all" => GorensteinMethod::All,
            "s-property" => GorensteinMethod::SProperty,
            "purity" => GorensteinMethod::Purity,
            "motzkin" => GorensteinMethod::Motzkin,
            other => return Err(value_err(format!("unknown method {other:?}"))),
        };
        parallelogram::is_gorenstein(&self.inner, method).map_err(value_err)
    }
}

/// Decode a Motzkin word over R, F, A, B back to its polyomino.
#[pyfunction]
fn decode_motzkin(word: &str) -> PyResult<Polyomino> {
    let word = MotzkinWord::parse(word).map_err(value_err)?;
    let pair = motzkin::decode(&word).map_err(value_err)?;
    Ok(Polyomino {
        inner: parallelogram::from_paths(&pair).map_err(value_err)?,
    })
}

/// All fixed polyominoes of the given rank, optionally restricted to simple
/// ones and reduced modulo the eight symmetries.
#[pyfunction]
#[pyo3(signature = (rank, simple = false, dedup_d4 = false))]
fn enumerate_polyominoes(rank: usize, simple: bool, dedup_d4: bool) -> PyResult<Vec<Polyomino>> {
    let dedup = if dedup_d4 { Dedup::D4 } else { Dedup::None };
    let mut out = Vec::new();
    let collect = |p: &grid::Polyomino| {
        out.push(Polyomino { inner: p.clone() });
    };
    if simple {
        enumerate::enumerate_simple(rank, dedup, collect).map_err(value_err)?;
    } else {
        if dedup_d4 {
            enumerate::enumerate_fixed(rank, |p| {
                if p.is_canonical() {
                    out.push(Polyomino { inner: p.clone() });
                }
            })
            .map_err(value_err)?;
        } else {
            enumerate::enumerate_fixed(rank, collect).map_err(value_err)?;
        }
    }
    Ok(out)
}

/// Run the h == r~ sweep up to max_rank and return the summary as a dict.
#[pyfunction]
#[pyo3(signature = (max_rank, dedup_d4 = true))]
fn verify_conjecture(py: Python<'_>, max_rank: usize, dedup_d4: bool) -> PyResult<Py<PyDict>> {
    let opts = verify::SweepOptions {
        max_rank,
        jobs: 0,
        dedup: if dedup_d4 { Dedup::D4 } else { Dedup::None },
        timings: false,
    };
    let mut sink = Vec::new();
    let summary = verify::verify_conjecture(&opts, &mut sink, None).map_err(value_err)?;
    let dict = PyDict::new(py);
    dict.set_item("total", summary.total)?;
    dict.set_item("mismatches", summary.mismatches)?;
    let per_rank: Vec<(usize, usize, usize)> = summary
        .per_rank
        .iter()
        .map(|r| (r.rank, r.count, r.mismatches))
        .collect();
    dict.set_item("per_rank", per_rank)?;
    Ok(dict.into())
}

#[pymodule]
fn polyrook(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polyomino>()?;
    m.add_function(wrap_pyfunction!(decode_motzkin, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_polyominoes, m)?)?;
    m.add_function(wrap_pyfunction!(verify_conjecture, m)?)?;
    Ok(())
}
