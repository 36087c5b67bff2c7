//! Concrete nilpotent representations over exact rationals. This is the
//! brute-force side of every Hom/Ext table in the crate: Hom is the kernel of
//! the intertwining system, Ext^1 is the defect against the Euler form.
//!
//! Representations are *right* modules over the path algebra: an arrow
//! `a: s -> t` acts by a linear map from the fiber at `t` to the fiber at `s`,
//! stored as a `dims[s] x dims[t]` matrix. With this orientation
//! `dim Ext^1(s_i, s_j)` is the number of arrows from `j` to `i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::Quiver;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    quiver: Quiver,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl Rep {
    /// Validates shapes and nilpotency.
    pub fn new(quiver: Quiver, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::InvalidRep(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if mats.len() != quiver.arrows().len() {
            return Err(Error::InvalidRep(format!(
                "{} matrices for {} arrows",
                mats.len(),
                quiver.arrows().len()
            )));
        }
        for (k, (&(s, t), m)) in quiver.arrows().iter().zip(&mats).enumerate() {
            if m.rows() != dims[s] || m.cols() != dims[t] {
                return Err(Error::InvalidRep(format!(
                    "arrow {k} needs a {}x{} matrix, got {}x{}",
                    dims[s],
                    dims[t],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = Rep { quiver, dims, mats };
        if !rep.is_nilpotent() {
            return Err(Error::InvalidRep("representation is not nilpotent".into()));
        }
        Ok(rep)
    }

    pub fn zero(quiver: &Quiver) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let mats = quiver.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Rep {
            quiver: quiver.clone(),
            dims,
            mats,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.clone())
    }

    pub fn matrix(&self, arrow: usize) -> &Matrix {
        &self.mats[arrow]
    }

    /// Iterates `W -> sum_a W * a` on the total space, starting from everything,
    /// and checks that the chain reaches zero within `total dim` steps.
    fn is_nilpotent(&self) -> bool {
        let total: usize = self.dims.iter().sum();
        let offsets = self.offsets();
        // Columns of `span` are a basis of the current subspace of the total space.
        let mut span = Matrix::identity(total);
        for _ in 0..=total {
            if span.cols() == 0 {
                return true;
            }
            let images: Vec<Matrix> = self
                .quiver
                .arrows()
                .iter()
                .zip(&self.mats)
                .map(|(&(s, t), m)| {
                    let mut block = Matrix::zeros(total, total);
                    for r in 0..self.dims[s] {
                        for c in 0..self.dims[t] {
                            block.set(offsets[s] + r, offsets[t] + c, m.get(r, c).clone());
                        }
                    }
                    block.mul(&span)
                })
                .collect();
            span = Matrix::hconcat(&images, total).column_basis();
        }
        span.cols() == 0
    }

    fn offsets(&self) -> Vec<usize> {
        self.dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect()
    }

    /// Direct sum over the same quiver.
    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        if self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let mats = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Matrix::zeros(dims[s], dims[t]);
                let (a, b) = (&self.mats[k], &other.mats[k]);
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m.set(r, c, a.get(r, c).clone());
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(a.rows() + r, a.cols() + c, b.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        Ok(Rep {
            quiver: self.quiver.clone(),
            dims,
            mats,
        })
    }

    /// Translation on an oriented cycle: the fiber of the result at `v` is the
    /// fiber of `self` at `v + 1`, so simples move one step backwards.
    pub fn rotate_back(&self) -> Result<Rep> {
        if !self.quiver.is_oriented_cycle() || self.quiver != Quiver::cycle(self.dims.len()) {
            return Err(Error::InvalidRep("translation needs the standard oriented cycle".into()));
        }
        let n = self.dims.len();
        let dims = (0..n).map(|v| self.dims[(v + 1) % n]).collect();
        let mats = (0..n).map(|k| self.mats[(k + 1) % n].clone()).collect();
        Ok(Rep {
            quiver: self.quiver.clone(),
            dims,
            mats,
        })
    }
}

/// The simple module at `v`: one-dimensional there, zero elsewhere.
pub fn simple_rep(q: &Quiver, v: usize) -> Result<Rep> {
    if v >= q.vertex_count() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    let dims: Vec<usize> = (0..q.vertex_count()).map(|w| usize::from(w == v)).collect();
    let mats = q
        .arrows()
        .iter()
        .map(|&(s, t)| Matrix::zeros(dims[s], dims[t]))
        .collect();
    Ok(Rep {
        quiver: q.clone(),
        dims,
        mats,
    })
}

/// Dimension of the space of families `f_v: M_v -> N_v` with
/// `f_s * M_a = N_a * f_t` for every arrow `a: s -> t`.
pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    if m.quiver != n.quiver {
        return Err(Error::QuiverMismatch);
    }
    let q = &m.quiver;
    // Unknown (v, r, c) is entry (r, c) of f_v, an n.dims[v] x m.dims[v] matrix.
    let mut offsets = Vec::with_capacity(q.vertex_count());
    let mut unknowns = 0;
    for v in 0..q.vertex_count() {
        offsets.push(unknowns);
        unknowns += n.dims[v] * m.dims[v];
    }
    if unknowns == 0 {
        return Ok(0);
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims[v] + c;

    let equations: usize = q
        .arrows()
        .iter()
        .map(|&(s, t)| n.dims[s] * m.dims[t])
        .sum();
    let mut system = Matrix::zeros(equations, unknowns);
    let mut row = 0;
    for (k, &(s, t)) in q.arrows().iter().enumerate() {
        let (ma, na) = (&m.mats[k], &n.mats[k]);
        // Entry (i, j) of f_s * M_a - N_a * f_t, shape n.dims[s] x m.dims[t].
        for i in 0..n.dims[s] {
            for j in 0..m.dims[t] {
                for l in 0..m.dims[s] {
                    let x = var(s, i, l);
                    let v = system.get(row, x) + ma.get(l, j);
                    system.set(row, x, v);
                }
                for l in 0..n.dims[t] {
                    let x = var(t, l, j);
                    let v = system.get(row, x) - na.get(i, l);
                    system.set(row, x, v);
                }
                row += 1;
            }
        }
    }
    Ok(unknowns - system.rank())
}

/// `<d, e> = sum_v d_v e_v - sum_{a: s -> t} d_t e_s`, the Euler form of
/// right modules: it equals `dim Hom - dim Ext^1` on nilpotent representations.
pub fn euler_form(q: &Quiver, d: &DimVector, e: &DimVector) -> Result<i64> {
    let n = q.vertex_count();
    if d.0.len() != n || e.0.len() != n {
        return Err(Error::QuiverMismatch);
    }
    let diag: i64 = d.0.iter().zip(&e.0).map(|(&a, &b)| (a * b) as i64).sum();
    let off: i64 = q.arrows().iter().map(|&(s, t)| (d.0[t] * e.0[s]) as i64).sum();
    Ok(diag - off)
}

/// `dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>`. Valid because the
/// category of nilpotent representations of a finite quiver is hereditary.
pub fn ext1_dim(m: &Rep, n: &Rep) -> Result<usize> {
    let hom = hom_dim(m, n)? as i64;
    let chi = euler_form(&m.quiver, &m.dim_vector(), &n.dim_vector())?;
    let defect = hom - chi;
    if defect < 0 {
        return Err(Error::NonNegativityViolation(defect));
    }
    Ok(defect as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jordan(l: usize) -> Rep {
        let mut m = Matrix::zeros(l, l);
        for i in 0..l.saturating_sub(1) {
            m.set(i + 1, i, num_rational::BigRational::from_integer(1.into()));
        }
        Rep::new(Quiver::cycle(1), vec![l], vec![m]).unwrap()
    }

    #[test]
    fn simple_shapes() {
        let s = simple_rep(&Quiver::cycle(1), 0).unwrap();
        assert_eq!(s.dims(), &[1]);
        assert!(s.matrix(0).is_zero());
        let s = simple_rep(&Quiver::linear(2), 1).unwrap();
        assert_eq!(s.dims(), &[0, 1]);
        assert_eq!((s.matrix(0).rows(), s.matrix(0).cols()), (0, 1));
        let s = simple_rep(&Quiver::kronecker(2), 0).unwrap();
        assert_eq!(s.dims(), &[1, 0]);
        assert_eq!(simple_rep(&Quiver::linear(2), 2).unwrap_err(), Error::UnknownVertex("2".into()));
    }

    #[test]
    fn simples_are_bricks_and_orthogonal() {
        let q = Quiver::cycle(3);
        for i in 0..3 {
            for j in 0..3 {
                let h = hom_dim(&simple_rep(&q, i).unwrap(), &simple_rep(&q, j).unwrap()).unwrap();
                assert_eq!(h, usize::from(i == j));
            }
        }
    }

    #[test]
    fn jordan_block_commutant() {
        for l in 1..=4 {
            assert_eq!(hom_dim(&jordan(l), &jordan(l)).unwrap(), l);
        }
    }

    #[test]
    fn jordan_ext() {
        // Hom(J2, J1) = 1 and <2, 1> = 2 - 2 = 0 on the loop quiver.
        assert_eq!(hom_dim(&jordan(2), &jordan(1)).unwrap(), 1);
        assert_eq!(ext1_dim(&jordan(2), &jordan(1)).unwrap(), 1);
    }

    #[test]
    fn euler_examples() {
        let q = Quiver::discrete(3);
        let ones = DimVector(vec![1, 1, 1]);
        assert_eq!(euler_form(&q, &ones, &ones).unwrap(), 3);
        let k = Quiver::kronecker(2);
        assert_eq!(euler_form(&k, &DimVector(vec![0, 1]), &DimVector(vec![1, 0])).unwrap(), -2);
        assert_eq!(euler_form(&Quiver::cycle(1), &DimVector(vec![1]), &DimVector(vec![1])).unwrap(), 0);
    }

    #[test]
    fn ext_to_zero() {
        let q = Quiver::linear(3);
        let z = Rep::zero(&q);
        for v in 0..3 {
            assert_eq!(ext1_dim(&simple_rep(&q, v).unwrap(), &z).unwrap(), 0);
        }
    }

    #[test]
    fn interval_module_on_a2() {
        // Fiber at 2 maps onto fiber at 1, so the top sits at vertex 2.
        let q = Quiver::linear(2);
        let m12 = Rep::new(q.clone(), vec![1, 1], vec![Matrix::from_ints(1, 1, &[1])]).unwrap();
        let s1 = simple_rep(&q, 0).unwrap();
        let s2 = simple_rep(&q, 1).unwrap();
        assert_eq!(hom_dim(&m12, &s2).unwrap(), 1);
        assert_eq!(hom_dim(&s2, &m12).unwrap(), 0);
        assert_eq!(hom_dim(&s1, &m12).unwrap(), 1);
        assert_eq!(hom_dim(&m12, &s1).unwrap(), 0);
    }

    #[test]
    fn projectives_of_a3_have_no_ext() {
        // The path-span at vertex 3 of 1 -> 2 -> 3 under right action is M(1,3).
        let q = Quiver::linear(3);
        let one = Matrix::from_ints(1, 1, &[1]);
        let p3 = Rep::new(q.clone(), vec![1, 1, 1], vec![one.clone(), one.clone()]).unwrap();
        let p2 = Rep::new(q.clone(), vec![1, 1, 0], vec![one, Matrix::zeros(1, 0)]).unwrap();
        let p1 = simple_rep(&q, 0).unwrap();
        for p in [&p1, &p2, &p3] {
            for v in 0..3 {
                assert_eq!(ext1_dim(p, &simple_rep(&q, v).unwrap()).unwrap(), 0);
            }
        }
    }

    #[test]
    fn rejects_non_nilpotent() {
        let m = Matrix::from_ints(1, 1, &[1]);
        assert!(Rep::new(Quiver::cycle(1), vec![1], vec![m]).is_err());
        let bad_shape = Matrix::zeros(2, 1);
        assert!(Rep::new(Quiver::linear(2), vec![1, 1], vec![bad_shape]).is_err());
    }

    #[test]
    fn mismatched_quivers() {
        let a = simple_rep(&Quiver::linear(2), 0).unwrap();
        let b = simple_rep(&Quiver::cycle(2), 0).unwrap();
        assert_eq!(hom_dim(&a, &b), Err(Error::QuiverMismatch));
        assert_eq!(ext1_dim(&a, &b), Err(Error::QuiverMismatch));
    }
}
