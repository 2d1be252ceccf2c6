//! Exact linear algebra over a field: ranks, kernels, spans, hom spaces
//! between matrix representations, subalgebra closure and the trace-form
//! radical.

mod echelon;
mod field;
mod matrix;
mod subspace;

pub(crate) use echelon::{sparse_from_dense, Echelon, SparseVec};
pub use field::Field;
pub use matrix::Matrix;
pub use subspace::Subspace;

use crate::error::{Error, Result};

fn row_echelon<T: Field>(m: &Matrix<T>) -> Echelon<T> {
    let mut ech = Echelon::new(m.cols());
    for i in 0..m.rows() {
        if ech.is_full() {
            break;
        }
        ech.insert(sparse_from_dense(m.row(i)));
    }
    ech
}

pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    row_echelon(m).rank()
}

/// Reduced row echelon form and pivot columns.
pub fn rref<T: Field>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let s = Subspace::from_echelon(m.cols(), row_echelon(m));
    let mut out = Matrix::zeros(m.rows(), m.cols());
    for (i, row) in s.basis().iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            out.set(i, j, x.clone());
        }
    }
    (out, s.pivots().to_vec())
}

/// Right null space `{x : m x = 0}`.
pub fn kernel<T: Field>(m: &Matrix<T>) -> Subspace<T> {
    let ns = row_echelon(m).null_space();
    Subspace::from_sparse(m.cols(), ns)
}

/// Intersection of the kernels of all `mats`, which share a column count.
pub fn common_kernel<T: Field>(dim: usize, mats: &[Matrix<T>]) -> Subspace<T> {
    let mut ech = Echelon::new(dim);
    for m in mats {
        assert_eq!(m.cols(), dim);
        for i in 0..m.rows() {
            if ech.is_full() {
                break;
            }
            ech.insert(sparse_from_dense(m.row(i)));
        }
    }
    Subspace::from_sparse(dim, ech.null_space())
}

pub fn image<T: Field>(m: &Matrix<T>) -> Subspace<T> {
    Subspace::column_space(m)
}

pub fn is_invertible<T: Field>(m: &Matrix<T>) -> bool {
    m.is_square() && rank(m) == m.rows()
}

pub fn inverse<T: Field>(m: &Matrix<T>) -> Option<Matrix<T>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let (r, piv) = rref(&m.hstack(&Matrix::identity(n)));
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Some(r.select(&rows, &cols))
}

fn check_square_family<T: Field>(gens: &[Matrix<T>], what: &str) -> Result<Option<usize>> {
    let mut size = None;
    for g in gens {
        if !g.is_square() {
            return Err(Error::Dimension(format!("{what}: non-square generator {}x{}", g.rows(), g.cols())));
        }
        match size {
            None => size = Some(g.rows()),
            Some(s) if s != g.rows() => {
                return Err(Error::Dimension(format!("{what}: generator sizes {s} and {}", g.rows())))
            }
            _ => {}
        }
    }
    Ok(size)
}

/// All `T : M → N` with `T·gens_m[k] = gens_n[k]·T`, as a subspace of the
/// row-major vectorisations of `dim N × dim M` matrices.
pub fn solve_intertwiner<T: Field>(gens_m: &[Matrix<T>], gens_n: &[Matrix<T>]) -> Result<Subspace<T>> {
    if gens_m.len() != gens_n.len() {
        return Err(Error::Dimension(format!(
            "generator lists of lengths {} and {}",
            gens_m.len(),
            gens_n.len()
        )));
    }
    let dm = check_square_family(gens_m, "source")?;
    let dn = check_square_family(gens_n, "target")?;
    match (dm, dn) {
        (Some(a), Some(b)) => solve_intertwiner_sized(a, b, gens_m, gens_n),
        _ => Err(Error::Dimension("empty generator lists carry no dimensions; use solve_intertwiner_sized".into())),
    }
}

/// As [`solve_intertwiner`], with the module dimensions given explicitly so
/// that empty generator lists are allowed.
pub fn solve_intertwiner_sized<T: Field>(
    dim_m: usize,
    dim_n: usize,
    gens_m: &[Matrix<T>],
    gens_n: &[Matrix<T>],
) -> Result<Subspace<T>> {
    if gens_m.len() != gens_n.len() {
        return Err(Error::Dimension("generator lists differ in length".into()));
    }
    for g in gens_m {
        if g.rows() != dim_m || g.cols() != dim_m {
            return Err(Error::Dimension("source generator size".into()));
        }
    }
    for g in gens_n {
        if g.rows() != dim_n || g.cols() != dim_n {
            return Err(Error::Dimension("target generator size".into()));
        }
    }
    let unknowns = dim_m * dim_n;
    let mut ech = Echelon::new(unknowns);
    // Equation (a,b): sum_k T[a,k] Gm[k,b] - sum_k Gn[a,k] T[k,b] = 0.
    for (gm, gn) in gens_m.iter().zip(gens_n) {
        let gm_cols: Vec<Vec<(usize, T)>> = (0..dim_m)
            .map(|b| (0..dim_m).filter(|&k| !gm.get(k, b).is_zero()).map(|k| (k, gm.get(k, b).clone())).collect())
            .collect();
        let gn_rows: Vec<Vec<(usize, T)>> = (0..dim_n)
            .map(|a| (0..dim_n).filter(|&k| !gn.get(a, k).is_zero()).map(|k| (k, gn.get(a, k).clone())).collect())
            .collect();
        for a in 0..dim_n {
            for b in 0..dim_m {
                if ech.is_full() {
                    return Ok(Subspace::zero(unknowns));
                }
                let mut eq: std::collections::BTreeMap<usize, T> = std::collections::BTreeMap::new();
                for (k, x) in &gm_cols[b] {
                    let e = eq.entry(a * dim_m + k).or_insert_with(T::zero);
                    *e = e.clone() + x.clone();
                }
                for (k, x) in &gn_rows[a] {
                    let e = eq.entry(k * dim_m + b).or_insert_with(T::zero);
                    *e = e.clone() - x.clone();
                }
                let eq: SparseVec<T> = eq.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                if !eq.is_empty() {
                    ech.insert(eq);
                }
            }
        }
    }
    Ok(Subspace::from_sparse(unknowns, ech.null_space()))
}

/// Reshapes a vectorised hom-space element back into a `rows × cols` matrix.
pub fn unvec<T: Field>(v: &[T], rows: usize, cols: usize) -> Matrix<T> {
    Matrix::from_vec(rows, cols, v.to_vec())
}

/// Basis of the unital algebra generated by `gens`.
pub fn algebra_closure<T: Field>(gens: &[Matrix<T>]) -> Result<Vec<Matrix<T>>> {
    let d = check_square_family(gens, "algebra_closure")?.unwrap_or(0);
    algebra_closure_sized(d, gens)
}

pub fn algebra_closure_sized<T: Field>(d: usize, gens: &[Matrix<T>]) -> Result<Vec<Matrix<T>>> {
    for g in gens {
        if g.rows() != d || g.cols() != d {
            return Err(Error::Dimension("algebra_closure: generator size".into()));
        }
    }
    let mut ech = Echelon::new(d * d);
    let id = Matrix::identity(d);
    let mut basis = Vec::new();
    if ech.insert(sparse_from_dense(id.as_slice())) {
        basis.push(id);
    }
    let mut next = 0;
    while next < basis.len() && !ech.is_full() {
        let x = basis[next].clone();
        next += 1;
        for g in gens {
            let y = g * &x;
            if ech.insert(sparse_from_dense(y.as_slice())) {
                basis.push(y);
            }
        }
    }
    Ok(basis)
}

/// Radical of the algebra spanned by `alg_basis`, in coordinates of that basis.
pub fn radical_trace_form<T: Field>(alg_basis: &[Matrix<T>]) -> Result<Subspace<T>> {
    let k = alg_basis.len();
    if k == 0 {
        return Ok(Subspace::zero(0));
    }
    let d = alg_basis[0].rows();
    if alg_basis.iter().any(|x| x.rows() != d || x.cols() != d) {
        return Err(Error::Dimension("radical_trace_form: basis sizes".into()));
    }
    let nz: Vec<Vec<(usize, usize, T)>> =
        alg_basis.iter().map(|x| x.nonzeros().map(|(i, j, v)| (i, j, v.clone())).collect()).collect();
    let mut gram = Matrix::zeros(k, k);
    for a in 0..k {
        for b in a..k {
            // tr(x_a x_b) = sum_{i,j} x_a[i,j] x_b[j,i]
            let mut t = T::zero();
            for (i, j, v) in &nz[a] {
                let w = alg_basis[b].get(*j, *i);
                if !w.is_zero() {
                    t = t + v.clone() * w.clone();
                }
            }
            gram.set(a, b, t.clone());
            gram.set(b, a, t);
        }
    }
    Ok(kernel(&gram))
}

/// Combines algebra basis elements with the given coefficient vectors.
pub fn combine<T: Field>(alg_basis: &[Matrix<T>], coords: &[Vec<T>]) -> Vec<Matrix<T>> {
    coords
        .iter()
        .map(|c| {
            let d = alg_basis[0].rows();
            let mut m = Matrix::zeros(d, d);
            for (x, a) in c.iter().zip(alg_basis) {
                m.add_scaled(x, a);
            }
            m
        })
        .collect()
}
