use super::{bits, low_mask, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Rectangular 0/1 matrix stored as one bit-row per row (at most 64 columns).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ZeroOneMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Error::check_size("matrix column count", cols, MAX_VERTICES)?;
        Ok(ZeroOneMatrix {
            rows,
            cols,
            data: vec![0; rows],
        })
    }

    /// All-ones matrix `J_{rows,cols}`.
    pub fn ones(rows: usize, cols: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, cols)?;
        m.data.iter_mut().for_each(|r| *r = low_mask(cols));
        Ok(m)
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.data[i] = 1 << i;
        }
        Ok(m)
    }

    pub fn from_rows(cols: usize, rows: Vec<u64>) -> Result<Self> {
        Error::check_size("matrix column count", cols, MAX_VERTICES)?;
        let mask = low_mask(cols);
        if let Some(i) = rows.iter().position(|r| r & !mask != 0) {
            return Err(Error::precondition(format!(
                "row {i} has entries beyond column {cols}"
            )));
        }
        Ok(ZeroOneMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Builds a matrix from nested 0/1 values.
    pub fn from_entries(entries: &[Vec<u8>]) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(entries.len());
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::precondition(format!("row {i} has the wrong length")));
            }
            let mut bitsrow = 0u64;
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => bitsrow |= 1 << j,
                    _ => {
                        return Err(Error::precondition(format!(
                            "entry ({i}, {j}) is {x}, not 0 or 1"
                        )))
                    }
                }
            }
            data.push(bitsrow);
        }
        Self::from_rows(cols, data)
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn rows(&self) -> &[u64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> u64 {
        self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.data.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.cols];
        for &r in &self.data {
            for j in bits(r) {
                sums[j] += 1;
            }
        }
        sums
    }

    pub fn transpose(&self) -> ZeroOneMatrix {
        let mut data = vec![0u64; self.cols];
        for (i, &r) in self.data.iter().enumerate() {
            for j in bits(r) {
                data[j] |= 1 << i;
            }
        }
        ZeroOneMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// `J - A`.
    pub fn complement(&self) -> ZeroOneMatrix {
        let mask = low_mask(self.cols);
        ZeroOneMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| !r & mask).collect(),
        }
    }

    /// Block-diagonal direct sum `A ⊕ B`.
    pub fn direct_sum(&self, other: &ZeroOneMatrix) -> Result<ZeroOneMatrix> {
        let cols = self.cols + other.cols;
        Error::check_size("matrix column count", cols, MAX_VERTICES)?;
        let mut data = self.data.clone();
        data.extend(other.data.iter().map(|r| r << self.cols));
        Ok(ZeroOneMatrix {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// `P A Q` where row `i` moves to `row_perm[i]` and column `j` to `col_perm[j]`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> ZeroOneMatrix {
        let mut data = vec![0u64; self.rows];
        for (i, &r) in self.data.iter().enumerate() {
            let mut nr = 0u64;
            for j in bits(r) {
                nr |= 1 << col_perm[j];
            }
            data[row_perm[i]] = nr;
        }
        ZeroOneMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|r| r.count_ones() as usize).sum()
    }
}

/// Bipartite graph given by its `left x right` biadjacency matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteGraph {
    biadjacency: ZeroOneMatrix,
}

impl BipartiteGraph {
    pub fn new(biadjacency: ZeroOneMatrix) -> Self {
        BipartiteGraph { biadjacency }
    }

    pub fn left_size(&self) -> usize {
        self.biadjacency.num_rows()
    }

    pub fn right_size(&self) -> usize {
        self.biadjacency.num_cols()
    }

    pub fn biadjacency(&self) -> &ZeroOneMatrix {
        &self.biadjacency
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        self.biadjacency.row_sums()
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        self.biadjacency.col_sums()
    }

    /// The underlying simple graph: left vertices `0..l`, right vertices `l..l+r`.
    pub fn to_graph(&self) -> Result<Graph> {
        let l = self.left_size();
        let mut g = Graph::new(l + self.right_size())?;
        for i in 0..l {
            for j in bits(self.biadjacency.row(i)) {
                g.add_edge(i, l + j);
            }
        }
        Ok(g)
    }
}
