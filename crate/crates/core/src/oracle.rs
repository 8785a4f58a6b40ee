//! Brute-force ground truth used to cross-check the main decision paths:
//! the Coxeter bilinear form, finite Coxeter group enumeration in the
//! reflection representation, and naive path and splitting enumeration.
//!
//! Everything here is deliberately slow and simple.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::coxeter::{CoxeterLabel, CoxeterMatrix};
use crate::graph::{PresentationGraph, VertexSet};
use crate::splittings::{validate_splitting, VisualSplitting};
use crate::Error;

/// Default tolerance for leading principal minors.
pub const MINOR_TOLERANCE: f64 = 1e-9;
/// Rounding grid for hashing matrix entries.
pub const HASH_GRID: f64 = 1e6;
/// Default element cap for [`enumerate_coxeter`].
pub const DEFAULT_ENUMERATION_CAP: usize = 100_000;
/// Largest graph accepted by [`brute_force_odd_join`].
pub const ODD_JOIN_LIMIT: usize = 8;
/// Largest graph accepted by [`brute_force_splittings`].
pub const SPLITTING_LIMIT: usize = 6;

/// The Coxeter bilinear form `B(e_s, e_t) = −cos(π/m_st)`, with `∞ ↦ −1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl GramMatrix {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Determinants of the leading `k × k` submatrices, `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<f64> {
        (1..=self.n).map(|k| determinant(&self.entries, self.n, k)).collect()
    }
}

pub fn gram_matrix(m: &CoxeterMatrix) -> GramMatrix {
    let n = m.rank();
    let mut entries = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[i * n + j] = match m.get(i, j) {
                _ if i == j => 1.0,
                CoxeterLabel::Infinity => -1.0,
                CoxeterLabel::Finite(k) => -libm::cos(PI / k as f64),
            };
        }
    }
    GramMatrix { n, entries }
}

/// Determinant of the leading `k × k` block of an `n × n` row-major matrix,
/// by Gaussian elimination with partial pivoting.
fn determinant(entries: &[f64], n: usize, k: usize) -> f64 {
    let mut a: Vec<f64> = (0..k).flat_map(|i| entries[i * n..i * n + k].iter().copied()).collect();
    let mut det = 1.0;
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&r, &s| libm::fabs(a[r * k + col]).total_cmp(&libm::fabs(a[s * k + col])))
            .unwrap();
        if a[pivot * k + col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for c in 0..k {
                a.swap(pivot * k + c, col * k + c);
            }
            det = -det;
        }
        let p = a[col * k + col];
        det *= p;
        for r in col + 1..k {
            let f = a[r * k + col] / p;
            for c in col..k {
                a[r * k + c] -= f * a[col * k + c];
            }
        }
    }
    det
}

/// Whether every leading principal minor of the Gram matrix exceeds `tol`.
pub fn gram_positive_definite_with(m: &CoxeterMatrix, tol: f64) -> bool {
    gram_matrix(m).leading_minors().into_iter().all(|d| d > tol)
}

pub fn gram_positive_definite(m: &CoxeterMatrix) -> bool {
    gram_positive_definite_with(m, MINOR_TOLERANCE)
}

/// Gram-form sphericity of a whole presentation graph.
pub fn gram_spherical(g: &PresentationGraph) -> bool {
    gram_positive_definite(&CoxeterMatrix::from_graph(g, g.all()))
}

/// Enumeration stopped at the cap: the group is probably infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapExceeded {
    pub cap: usize,
}

type Key = Vec<i64>;

/// All elements of a finite Coxeter group as matrices of the reflection
/// representation.
#[derive(Clone, Debug)]
pub struct CoxeterElementTable {
    n: usize,
    generators: Vec<Vec<f64>>,
    elements: Vec<Vec<f64>>,
    index: BTreeMap<Key, usize>,
}

impl CoxeterElementTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// The reflection `σ_s`.
    pub fn generator(&self, s: usize) -> &[f64] {
        &self.generators[s]
    }

    pub fn elements(&self) -> impl Iterator<Item = &[f64]> {
        self.elements.iter().map(Vec::as_slice)
    }

    pub fn contains(&self, m: &[f64]) -> bool {
        self.index.contains_key(&key(m))
    }
}

fn key(m: &[f64]) -> Key {
    m.iter().map(|x| libm::round(x * HASH_GRID) as i64).collect()
}

fn multiply(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik != 0.0 {
                for j in 0..n {
                    out[i * n + j] += aik * b[k * n + j];
                }
            }
        }
    }
    out
}

/// `σ_s(v) = v − 2 B(e_s, v) e_s`, as a row-major matrix on column vectors.
fn reflection(gram: &GramMatrix, s: usize) -> Vec<f64> {
    let n = gram.rank();
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        m[i * n + i] = 1.0;
    }
    for j in 0..n {
        m[s * n + j] -= 2.0 * gram.get(s, j);
    }
    m
}

/// Breadth-first closure of the identity under right multiplication by the
/// simple reflections.
pub fn enumerate_coxeter(m: &CoxeterMatrix, cap: usize) -> Result<CoxeterElementTable, CapExceeded> {
    let n = m.rank();
    let gram = gram_matrix(m);
    let generators: Vec<Vec<f64>> = (0..n).map(|s| reflection(&gram, s)).collect();
    let mut identity = vec![0.0; n * n];
    for i in 0..n {
        identity[i * n + i] = 1.0;
    }
    let mut index = BTreeMap::new();
    index.insert(key(&identity), 0);
    let mut elements = vec![identity];
    let mut next = 0;
    while next < elements.len() {
        for s in &generators {
            let w = multiply(&elements[next], s, n);
            let k = key(&w);
            if let alloc::collections::btree_map::Entry::Vacant(slot) = index.entry(k) {
                if elements.len() >= cap {
                    return Err(CapExceeded { cap });
                }
                slot.insert(elements.len());
                elements.push(w);
            }
        }
        next += 1;
    }
    Ok(CoxeterElementTable { n, generators, elements, index })
}

/// Whether some `w` in the table satisfies `w σ_s w⁻¹ = σ_t`, checked as
/// `w σ_s = σ_t w`.
pub fn generators_conjugate_bruteforce(table: &CoxeterElementTable, s: usize, t: usize) -> bool {
    assert!(s < table.n && t < table.n, "generator index out of range");
    let n = table.n;
    table
        .elements()
        .any(|w| key(&multiply(w, table.generator(s), n)) == key(&multiply(table.generator(t), w, n)))
}

/// Whether `A` and `B` meet, or some simple path with odd labels runs from
/// `A` to `B`. Enumerates paths explicitly.
pub fn brute_force_odd_join(g: &PresentationGraph, a: VertexSet, b: VertexSet) -> Result<bool, Error> {
    if g.len() > ODD_JOIN_LIMIT {
        return Err(Error::SizeCap { vertices: g.len(), cap: ODD_JOIN_LIMIT });
    }
    fn walk(g: &PresentationGraph, v: usize, visited: VertexSet, b: VertexSet) -> bool {
        if b.contains(v) {
            return true;
        }
        (0..g.len()).any(|w| {
            !visited.contains(w)
                && g.label(v, w).is_some_and(|m| m % 2 == 1)
                && walk(g, w, visited.with(w), b)
        })
    }
    Ok(a.iter().any(|v| walk(g, v, VertexSet::singleton(v), b)))
}

/// Every valid splitting found by trying all pairs of vertex subsets,
/// deduplicated and in enumeration order.
pub fn brute_force_splittings(g: &PresentationGraph) -> Result<Vec<VisualSplitting>, Error> {
    if g.len() > SPLITTING_LIMIT {
        return Err(Error::SizeCap { vertices: g.len(), cap: SPLITTING_LIMIT });
    }
    let all = g.all();
    let mut out: Vec<VisualSplitting> = Vec::new();
    for x in all.subsets() {
        for y in all.subsets() {
            if let Ok(s) = validate_splitting(g, x, y) {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    out.sort_by(VisualSplitting::enumeration_cmp);
    Ok(out)
}
