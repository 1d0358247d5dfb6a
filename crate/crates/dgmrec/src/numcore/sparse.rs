//! CSR sparse matrix used for graph propagation and interaction aggregation.
//!
//! The transpose arrays are precomputed so the backward pass (`Sᵀ·G`) runs
//! with the same deterministic row-parallel kernel as the forward.

use super::Mat;
use rayon::prelude::*;

#[derive(Debug, Clone)]
pub struct CsMat {
    rows: usize,
    cols: usize,
    indptr: Vec<usize>,
    indices: Vec<u32>,
    vals: Vec<f64>,
    // transpose (cols×rows)
    t_indptr: Vec<usize>,
    t_indices: Vec<u32>,
    t_vals: Vec<f64>,
}

const PAR_NNZ: usize = 1 << 14;

impl CsMat {
    /// Build from per-row `(col, value)` lists. Column order within a row is
    /// preserved as given.
    pub fn from_rows(rows: &[Vec<(u32, f64)>], cols: usize) -> Self {
        let n = rows.len();
        let mut indptr = Vec::with_capacity(n + 1);
        indptr.push(0usize);
        let nnz: usize = rows.iter().map(|r| r.len()).sum();
        let mut indices = Vec::with_capacity(nnz);
        let mut vals = Vec::with_capacity(nnz);
        for row in rows {
            for &(c, v) in row {
                debug_assert!((c as usize) < cols);
                indices.push(c);
                vals.push(v);
            }
            indptr.push(indices.len());
        }

        // transpose via counting sort on columns
        let mut t_counts = vec![0usize; cols + 1];
        for &c in &indices {
            t_counts[c as usize + 1] += 1;
        }
        for i in 0..cols {
            t_counts[i + 1] += t_counts[i];
        }
        let t_indptr = t_counts.clone();
        let mut cursor = t_counts;
        let mut t_indices = vec![0u32; nnz];
        let mut t_vals = vec![0.0; nnz];
        for r in 0..n {
            for k in indptr[r]..indptr[r + 1] {
                let c = indices[k] as usize;
                let slot = cursor[c];
                t_indices[slot] = r as u32;
                t_vals[slot] = vals[k];
                cursor[c] += 1;
            }
        }

        CsMat {
            rows: n,
            cols,
            indptr,
            indices,
            vals,
            t_indptr,
            t_indices,
            t_vals,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    /// `self · x`.
    pub fn mul(&self, x: &Mat) -> Mat {
        assert_eq!(self.cols, x.rows(), "spmm dim");
        spmv_rows(
            self.rows,
            &self.indptr,
            &self.indices,
            &self.vals,
            x,
            self.nnz(),
        )
    }

    /// `selfᵀ · x`.
    pub fn tr_mul(&self, x: &Mat) -> Mat {
        assert_eq!(self.rows, x.rows(), "spmm_t dim");
        spmv_rows(
            self.cols,
            &self.t_indptr,
            &self.t_indices,
            &self.t_vals,
            x,
            self.nnz(),
        )
    }
}

fn spmv_rows(
    out_rows: usize,
    indptr: &[usize],
    indices: &[u32],
    vals: &[f64],
    x: &Mat,
    nnz: usize,
) -> Mat {
    let d = x.cols();
    let mut out = Mat::zeros(out_rows, d);
    let body = |(r, out_row): (usize, &mut [f64])| {
        for k in indptr[r]..indptr[r + 1] {
            let c = indices[k] as usize;
            let w = vals[k];
            let x_row = x.row(c);
            for (o, &v) in out_row.iter_mut().zip(x_row.iter()) {
                *o += w * v;
            }
        }
    };
    if nnz * d >= PAR_NNZ {
        out.data_mut().par_chunks_mut(d).enumerate().for_each(body);
    } else {
        out.data_mut().chunks_mut(d).enumerate().for_each(body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spmm_matches_dense() {
        let rows = vec![
            vec![(1u32, 2.0), (3u32, -1.0)],
            vec![],
            vec![(0u32, 0.5), (2u32, 4.0)],
        ];
        let s = CsMat::from_rows(&rows, 4);
        let x = Mat::from_fn(4, 2, |r, c| (r * 2 + c) as f64);
        let dense = Mat::from_fn(3, 4, |r, c| {
            rows[r]
                .iter()
                .find(|(cc, _)| *cc as usize == c)
                .map(|&(_, v)| v)
                .unwrap_or(0.0)
        });
        assert_eq!(s.mul(&x), dense.matmul(&x));

        let g = Mat::from_fn(3, 2, |r, c| (r as f64) - (c as f64) * 0.5);
        assert_eq!(s.tr_mul(&g), dense.matmul_tn(&g));
    }
}
