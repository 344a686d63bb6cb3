use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::presentation::Presentation;

/// Dense integer matrix over any signed integer type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix<I> {
    rows: usize,
    cols: usize,
    data: Vec<I>,
}

impl<I: Integer + Signed + Clone> IntMatrix<I> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![I::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<I>>, cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, v) in r.into_iter().enumerate() {
                m.data[i * cols + j] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &I {
        &self.data[i * self.cols + j]
    }

    fn at(&mut self, i: usize, j: usize) -> &mut I {
        &mut self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q · row[src]
    fn sub_row(&mut self, dst: usize, src: usize, q: &I) {
        for j in 0..self.cols {
            let v = self.get(src, j).clone() * q.clone();
            let d = self.at(dst, j);
            *d = d.clone() - v;
        }
    }

    fn sub_col(&mut self, dst: usize, src: usize, q: &I) {
        for i in 0..self.rows {
            let v = self.get(i, src).clone() * q.clone();
            let d = self.at(i, dst);
            *d = d.clone() - v;
        }
    }

    /// Diagonal of the Smith normal form: nonzero entries `d₁ | d₂ | ...`,
    /// all positive. Its length is the rank of the matrix.
    pub fn smith_diagonal(&self) -> Vec<I> {
        let mut m = self.clone();
        let mut diag = Vec::new();
        let mut t = 0;
        while t < m.rows.min(m.cols) {
            // pivot: nonzero entry of least absolute value in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m.rows {
                for j in t..m.cols {
                    let v = m.get(i, j);
                    if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < m.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            m.swap_rows(t, pi);
            m.swap_cols(t, pj);
            loop {
                let p = m.get(t, t).clone();
                let mut dirty = false;
                for i in t + 1..m.rows {
                    let q = m.get(i, t).div_floor(&p);
                    if !q.is_zero() {
                        m.sub_row(i, t, &q);
                    }
                    if !m.get(i, t).is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..m.cols {
                    let q = m.get(t, j).div_floor(&p);
                    if !q.is_zero() {
                        m.sub_col(j, t, &q);
                    }
                    if !m.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
                if !dirty {
                    // enforce divisibility by the rest of the block
                    let bad = (t + 1..m.rows)
                        .flat_map(|i| (t + 1..m.cols).map(move |j| (i, j)))
                        .find(|&(i, j)| !m.get(i, j).is_multiple_of(&p));
                    match bad {
                        Some((i, _)) => {
                            for j in t..m.cols {
                                let v = m.get(i, j).clone();
                                let d = m.at(t, j);
                                *d = d.clone() + v;
                            }
                        }
                        None => break,
                    }
                }
                // move the smallest entry of row t / column t to the pivot
                let mut best = (t, t);
                for i in t..m.rows {
                    let v = m.get(i, t);
                    if !v.is_zero() && v.abs() < m.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t..m.cols {
                    let v = m.get(t, j);
                    if !v.is_zero() && v.abs() < m.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                m.swap_rows(t, best.0);
                m.swap_cols(t, best.1);
            }
            diag.push(m.get(t, t).abs());
            t += 1;
        }
        diag
    }
}

/// Abelianization `ℤ^free_rank ⊕ ⊕ ℤ/tᵢ` with `t₁ | t₂ | ...`, all `tᵢ > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let t: Vec<String> = self.torsion.iter().map(|x| x.to_string()).collect();
        write!(f, "free rank {}, torsion [{}]", self.free_rank, t.join(", "))
    }
}

/// Smith-normal-form invariants of the relation matrix.
pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    let rows = p.relation_matrix().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let m = IntMatrix::<BigInt>::from_rows(rows, p.generator_count());
    let diag = m.smith_diagonal();
    let free_rank = p.generator_count() - diag.len();
    let one = BigInt::from(1);
    let torsion = diag.into_iter().filter(|d| *d != one).collect();
    AbelianInvariants { torsion, free_rank }
}
