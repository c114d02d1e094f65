use rand::Rng;

use super::{F2Matrix, F2Vector, ENUMERATION_GUARD};
use crate::{Error, Result};

/// A linear subspace of F₂ⁿ in canonical form: its basis is the unique
/// reduced-row-echelon-form matrix of full row rank spanning it, so two
/// `Subspace` values are equal iff they are the same subspace.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    basis: F2Matrix,
}

impl Subspace {
    /// Subspace spanned by the rows of `m` (need not be independent).
    pub fn from_span(m: &F2Matrix) -> Subspace {
        Subspace {
            n: m.n_cols(),
            basis: m.rref(),
        }
    }

    pub fn from_vectors(n: usize, vectors: &[F2Vector]) -> Result<Subspace> {
        let m = F2Matrix::new(n, vectors.to_vec())?;
        Ok(Subspace::from_span(&m))
    }

    pub fn zero(n: usize) -> Subspace {
        Subspace {
            n,
            basis: F2Matrix::empty(n),
        }
    }

    pub fn full(n: usize) -> Subspace {
        Subspace {
            n,
            basis: F2Matrix::identity(n),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.n_rows()
    }

    /// Canonical RREF basis.
    pub fn basis(&self) -> &F2Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        v.len() == self.n && self.reduce(v).is_zero()
    }

    /// Reduce `v` modulo the subspace: returns the unique element of v + A
    /// with zeros in every pivot column. This is the lexicographic minimum
    /// of the coset.
    pub fn reduce(&self, v: &F2Vector) -> F2Vector {
        let mut out = *v;
        for (row, &pivot) in self.basis.rows().iter().zip(self.basis.pivot_columns().iter()) {
            if out.get(pivot) == 1 {
                out += *row;
            }
        }
        out
    }

    /// All 2^dim elements, in order of the combination mask over basis rows.
    pub fn elements(&self) -> Vec<F2Vector> {
        let d = self.dim();
        (0..1usize << d)
            .map(|mask| {
                let coeffs = F2Vector::from_index(d, mask);
                self.basis.combine_rows(&coeffs).expect("basis row count matches")
            })
            .collect()
    }

    /// A^⊥ = {v : v·u = 0 for all u ∈ A}, the kernel of the basis matrix.
    pub fn orthogonal_complement(&self) -> Subspace {
        let rref = &self.basis;
        let pivots = rref.pivot_columns();
        let free: Vec<usize> = (0..self.n).filter(|j| !pivots.contains(j)).collect();
        // One kernel vector per free column: 1 at the free column, and at
        // each pivot column the entry of the RREF row at the free column.
        let rows: Vec<F2Vector> = free
            .iter()
            .map(|&j| {
                let mut v = F2Vector::zero(self.n);
                v.set(j, 1);
                for (row, &p) in rref.rows().iter().zip(pivots.iter()) {
                    v.set(p, row.get(j));
                }
                v
            })
            .collect();
        let m = F2Matrix::new(self.n, rows).expect("kernel rows have ambient length");
        Subspace::from_span(&m)
    }

    /// The canonical coset representatives CS(A): the 2^{n−dim}
    /// lexicographically minimal elements, sorted.
    ///
    /// Refuses ambient dimensions beyond the enumeration guard.
    pub fn coset_representatives(&self) -> Result<Vec<F2Vector>> {
        if self.n > ENUMERATION_GUARD {
            return Err(Error::SizeGuard {
                what: "coset representatives",
                limit: ENUMERATION_GUARD,
                got: self.n,
            });
        }
        let pivots = self.basis.pivot_columns();
        let free: Vec<usize> = (0..self.n).filter(|j| !pivots.contains(j)).collect();
        let mut reps: Vec<F2Vector> = (0..1usize << free.len())
            .map(|mask| {
                let pattern = F2Vector::from_index(free.len(), mask);
                let mut v = F2Vector::zero(self.n);
                for (b, &j) in free.iter().enumerate() {
                    v.set(j, pattern.get(b));
                }
                v
            })
            .collect();
        reps.sort();
        Ok(reps)
    }

    pub fn coset_of(&self, v: &F2Vector) -> Result<Coset> {
        Coset::new(self.clone(), *v)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace<{}>[{}]", self.n, self.basis)
    }
}

/// An affine coset A + rep, with `rep` stored in canonical form (the
/// lexicographically minimal element).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coset {
    subspace: Subspace,
    rep: F2Vector,
}

impl Coset {
    pub fn new(subspace: Subspace, v: F2Vector) -> Result<Coset> {
        if v.len() != subspace.ambient() {
            return Err(Error::DimensionMismatch {
                left: v.len(),
                right: subspace.ambient(),
            });
        }
        let rep = subspace.reduce(&v);
        Ok(Coset { subspace, rep })
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// Canonical (lexicographically minimal) representative.
    pub fn rep(&self) -> F2Vector {
        self.rep
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        v.len() == self.subspace.ambient() && self.subspace.contains(&(*v + self.rep))
    }

    pub fn elements(&self) -> Vec<F2Vector> {
        self.subspace
            .elements()
            .into_iter()
            .map(|u| u + self.rep)
            .collect()
    }
}

/// All k-dimensional subspaces of F₂ⁿ, each exactly once.
///
/// Enumerates RREF matrices directly: a choice of pivot columns plus free
/// entries to the right of each pivot (excluding later pivot columns).
pub fn enumerate_grassmannian(n: usize, k: usize) -> Result<Vec<Subspace>> {
    const GRASSMANNIAN_GUARD: usize = 8;
    if n > GRASSMANNIAN_GUARD {
        return Err(Error::SizeGuard {
            what: "Grassmannian enumeration",
            limit: GRASSMANNIAN_GUARD,
            got: n,
        });
    }
    if k > n {
        return Err(Error::invalid(format!("k={k} exceeds ambient n={n}")));
    }
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    enumerate_pivot_sets(n, k, 0, &mut pivots, &mut out);
    Ok(out)
}

fn enumerate_pivot_sets(
    n: usize,
    k: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    out: &mut Vec<Subspace>,
) {
    if pivots.len() == k {
        emit_rref_fills(n, pivots, out);
        return;
    }
    let remaining = k - pivots.len();
    for p in start..=(n - remaining) {
        pivots.push(p);
        enumerate_pivot_sets(n, k, p + 1, pivots, out);
        pivots.pop();
    }
}

fn emit_rref_fills(n: usize, pivots: &[usize], out: &mut Vec<Subspace>) {
    // Free slots: (row, col) with col right of the row's pivot and col not
    // itself a pivot column.
    let mut slots = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for j in (p + 1)..n {
            if !pivots.contains(&j) {
                slots.push((i, j));
            }
        }
    }
    for mask in 0..1usize << slots.len() {
        let mut rows: Vec<F2Vector> = pivots
            .iter()
            .map(|&p| F2Vector::standard(n, p))
            .collect();
        for (b, &(i, j)) in slots.iter().enumerate() {
            if (mask >> b) & 1 == 1 {
                rows[i].set(j, 1);
            }
        }
        let basis = F2Matrix::new(n, rows).expect("rows have ambient length");
        debug_assert!(basis.is_canonical_rref());
        out.push(Subspace { n, basis });
    }
}

/// Uniformly random k-dimensional subspace of F₂ⁿ.
///
/// For small ambient dimension this draws a uniform index into the full
/// enumeration. Beyond that it rejection-samples a full-rank k×n matrix
/// and canonicalizes; every subspace has the same number of ordered bases,
/// so the induced distribution on subspaces is exactly uniform.
pub fn sample_uniform_subspace(n: usize, k: usize, rng: &mut impl Rng) -> Result<Subspace> {
    if k > n {
        return Err(Error::invalid(format!("k={k} exceeds ambient n={n}")));
    }
    if n <= 8 {
        let all = enumerate_grassmannian(n, k)?;
        let idx = rng.random_range(0..all.len());
        return Ok(all[idx].clone());
    }
    loop {
        let m = F2Matrix::random(k, n, rng);
        if m.rank() == k {
            return Ok(Subspace::from_span(&m));
        }
    }
}

/// All invertible n×n matrices over F₂ (ordered bases of F₂ⁿ).
///
/// Exhaustive over all 2^{n²} candidates, so guarded to n ≤ 4
/// (|GL(4,2)| = 20160).
pub fn enumerate_invertible(n: usize) -> Result<Vec<F2Matrix>> {
    if n > 4 {
        return Err(Error::SizeGuard {
            what: "invertible matrix enumeration",
            limit: 4,
            got: n,
        });
    }
    let mut out = Vec::new();
    let total_bits = n * n;
    for mask in 0..1usize << total_bits {
        let rows: Vec<F2Vector> = (0..n)
            .map(|i| F2Vector::from_index(n, (mask >> (i * n)) & ((1 << n) - 1)))
            .collect();
        let m = F2Matrix::new(n, rows).expect("row length n");
        if m.is_invertible() {
            out.push(m);
        }
    }
    Ok(out)
}
