//! Exhaustive, sharded enumeration of GL(n,q), SL(n,q) and U(n,q).
//!
//! Matrices are produced row by row. For GL and SL a candidate row is kept
//! when it is independent of the rows above (echelon reduction), with the
//! final row handled by a cofactor scan so SL's determinant-1 condition
//! costs one dot product instead of a leaf determinant. For U(n,q) the
//! matrices live in GL(n,q²) and the rows must be orthonormal under the
//! Hermitian form ⟨u,v⟩ = Σ uₗ·vₗ^q, which is exactly the condition
//! A·σ(A)ᵀ = I against the identity Gram matrix.
//!
//! Work is split into [`SHARD_COUNT`] shards by first-row index, so a
//! census can fan shards out to worker threads and still merge a result
//! that is independent of thread count and scheduling.

use num_bigint::BigUint;

use super::field::FiniteField;
use super::matrix::Matrix;
use crate::tori::{gl_order, sl_order, u_order, GroupFamily};
use crate::{Error, Result};

/// Number of first-row shards; shard `s` owns first-row indices
/// `s, s + SHARD_COUNT, s + 2·SHARD_COUNT, …`.
pub const SHARD_COUNT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Gl,
    Sl,
    Unitary,
}

/// Everything needed to enumerate one concrete matrix group: the field the
/// entries live in (F_q, or F_{q²} for the unitary group), the closed-form
/// group order, and the σ = x ↦ x^q table for the Hermitian form.
#[derive(Debug)]
pub struct GroupCtx {
    family: GroupFamily,
    kind: Kind,
    n: usize,
    q: u64,
    field: FiniteField,
    order: BigUint,
    sigma: Vec<u32>,
}

impl GroupCtx {
    /// Validates the parameters and builds the field. Fails with
    /// [`Error::CapExceeded`] when the predicted group order is beyond
    /// `max_order` (the predicted order is in the error), and rejects
    /// custom torus-table families, which have no matrix model to
    /// enumerate.
    pub fn new(family: &GroupFamily, q: u64, max_order: u64) -> Result<GroupCtx> {
        let (kind, n) = match family {
            GroupFamily::Gl { n } => (Kind::Gl, *n),
            GroupFamily::Sl { n } => (Kind::Sl, *n),
            GroupFamily::U { n } => (Kind::Unitary, *n),
            GroupFamily::Custom(g) => {
                return Err(Error::Invalid(format!(
                    "cannot enumerate `{}`: custom torus tables have no matrix model",
                    g.name
                )))
            }
        };
        let (p, k) = crate::arith::prime_power(q)?;
        let order = match kind {
            Kind::Gl => gl_order(n, q),
            Kind::Sl => sl_order(n, q),
            Kind::Unitary => u_order(n, q),
        };
        if order > BigUint::from(max_order) {
            return Err(Error::CapExceeded {
                what: "group order",
                predicted: order,
                cap: max_order,
            });
        }
        let field = match kind {
            Kind::Gl | Kind::Sl => FiniteField::with_cap(p, k, super::field::DEFAULT_FIELD_CAP)?,
            Kind::Unitary => FiniteField::with_cap(p, 2 * k, super::field::DEFAULT_FIELD_CAP)?,
        };
        let n = n as usize;
        if (field.order() as u128)
            .checked_pow((n * n) as u32)
            .is_none()
        {
            return Err(Error::Invalid(
                "matrix entries do not fit the 128-bit set key; reduce n or q".into(),
            ));
        }
        let sigma = match kind {
            Kind::Unitary => (0..field.order() as u32).map(|x| field.pow(x, q)).collect(),
            _ => Vec::new(),
        };
        Ok(GroupCtx {
            family: family.clone(),
            kind,
            n,
            q,
            field,
            order,
            sigma,
        })
    }

    pub fn family(&self) -> &GroupFamily {
        &self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The field matrix entries live in: F_q for GL/SL, F_{q²} for U.
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// ⟨u,v⟩ = Σ uₗ·σ(vₗ) for the unitary form.
    fn herm(&self, u: &[u32], v: &[u32]) -> u32 {
        let f = &self.field;
        let mut acc = 0;
        for (&a, &b) in u.iter().zip(v) {
            acc = f.add(acc, f.mul(a, self.sigma[b as usize]));
        }
        acc
    }

    /// The valid first rows, in a fixed counter order (this order defines
    /// the sharding). GL and SL admit any nonzero row (except SL at n = 1,
    /// where the single entry is the determinant); U needs norm 1.
    pub fn first_rows(&self) -> Vec<Vec<u32>> {
        let qf = self.field.order();
        let n = self.n;
        match self.kind {
            Kind::Sl if n == 1 => vec![vec![1]],
            Kind::Gl | Kind::Sl => (1..qf.pow(n as u32))
                .map(|idx| decode_vector(idx, qf, n))
                .collect(),
            Kind::Unitary => (0..qf.pow(n as u32))
                .map(|idx| decode_vector(idx, qf, n))
                .filter(|v| self.herm(v, v) == 1)
                .collect(),
        }
    }

    /// Visit every group element whose first row falls in `shard`, exactly
    /// once each, in a deterministic order.
    pub fn for_each_in_shard<F: FnMut(&Matrix)>(&self, shard: usize, visit: &mut F) {
        assert!(shard < SHARD_COUNT);
        let first = self.first_rows();
        let mut walk = Walker {
            ctx: self,
            rows: Vec::with_capacity(self.n),
            echelon: Vec::with_capacity(self.n),
            conj: Vec::with_capacity(self.n),
        };
        for idx in (shard..first.len()).step_by(SHARD_COUNT) {
            walk.push_row(first[idx].clone());
            walk.extend(visit);
            walk.pop_row();
        }
    }

    /// Visit the whole group (all shards in order).
    pub fn for_each<F: FnMut(&Matrix)>(&self, visit: &mut F) {
        for shard in 0..SHARD_COUNT {
            self.for_each_in_shard(shard, visit);
        }
    }
}

fn decode_vector(mut idx: u64, qf: u64, n: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    for slot in v.iter_mut() {
        *slot = (idx % qf) as u32;
        idx /= qf;
    }
    v
}

struct Walker<'a> {
    ctx: &'a GroupCtx,
    rows: Vec<Vec<u32>>,
    /// echelon basis of `rows` for GL/SL: (reduced row with pivot 1, pivot column)
    echelon: Vec<(Vec<u32>, usize)>,
    /// σ-conjugated rows for U
    conj: Vec<Vec<u32>>,
}

impl Walker<'_> {
    fn push_row(&mut self, v: Vec<u32>) {
        let f = &self.ctx.field;
        match self.ctx.kind {
            Kind::Gl | Kind::Sl => {
                let mut w = v.clone();
                for (bv, piv) in &self.echelon {
                    let c = w[*piv];
                    if c != 0 {
                        for (wi, bi) in w.iter_mut().zip(bv) {
                            *wi = f.sub(*wi, f.mul(c, *bi));
                        }
                    }
                }
                let piv = w
                    .iter()
                    .position(|&x| x != 0)
                    .expect("pushed row must be independent");
                let inv = f.inv(w[piv]);
                for x in w.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                self.echelon.push((w, piv));
            }
            Kind::Unitary => {
                self.conj
                    .push(v.iter().map(|&x| self.ctx.sigma[x as usize]).collect());
            }
        }
        self.rows.push(v);
    }

    fn pop_row(&mut self) {
        self.rows.pop();
        match self.ctx.kind {
            Kind::Gl | Kind::Sl => {
                self.echelon.pop();
            }
            Kind::Unitary => {
                self.conj.pop();
            }
        }
    }

    /// True when `v` is outside the span of the rows chosen so far.
    fn independent(&self, v: &[u32]) -> bool {
        let f = &self.ctx.field;
        let mut w = v.to_vec();
        for (bv, piv) in &self.echelon {
            let c = w[*piv];
            if c != 0 {
                for (wi, bi) in w.iter_mut().zip(bv) {
                    *wi = f.sub(*wi, f.mul(c, *bi));
                }
            }
        }
        w.iter().any(|&x| x != 0)
    }

    /// Signed cofactors of the missing last row: the determinant of the
    /// completed matrix with last row v is Σⱼ vⱼ·cofⱼ.
    fn last_row_cofactors(&self) -> Vec<u32> {
        let f = &self.ctx.field;
        let n = self.ctx.n;
        (0..n)
            .map(|j| {
                let mut sub = Vec::with_capacity((n - 1) * (n - 1));
                for row in &self.rows {
                    for (c, &x) in row.iter().enumerate() {
                        if c != j {
                            sub.push(x);
                        }
                    }
                }
                let minor = Matrix::new(n - 1, sub).det(f);
                if (n - 1 + j).is_multiple_of(2) {
                    minor
                } else {
                    f.neg(minor)
                }
            })
            .collect()
    }

    fn extend<F: FnMut(&Matrix)>(&mut self, visit: &mut F) {
        let n = self.ctx.n;
        if self.rows.len() == n {
            visit(&Matrix::from_rows(&self.rows));
            return;
        }
        let f = &self.ctx.field;
        let qf = f.order();
        let total = qf.pow(n as u32);
        let last_row = self.rows.len() == n - 1;
        match self.ctx.kind {
            Kind::Gl | Kind::Sl if last_row => {
                // det(completed) = v · cof; GL keeps det ≠ 0, SL det = 1
                let cof = self.last_row_cofactors();
                for idx in 0..total {
                    let v = decode_vector(idx, qf, n);
                    let mut det = 0;
                    for (&vi, &ci) in v.iter().zip(&cof) {
                        det = f.add(det, f.mul(vi, ci));
                    }
                    let keep = match self.ctx.kind {
                        Kind::Gl => det != 0,
                        Kind::Sl => det == 1,
                        Kind::Unitary => unreachable!(),
                    };
                    if keep {
                        self.rows.push(v);
                        visit(&Matrix::from_rows(&self.rows));
                        self.rows.pop();
                    }
                }
            }
            Kind::Gl | Kind::Sl => {
                for idx in 0..total {
                    let v = decode_vector(idx, qf, n);
                    if self.independent(&v) {
                        self.push_row(v);
                        self.extend(visit);
                        self.pop_row();
                    }
                }
            }
            Kind::Unitary => {
                'cand: for idx in 0..total {
                    let v = decode_vector(idx, qf, n);
                    if self.ctx.herm(&v, &v) != 1 {
                        continue;
                    }
                    for conj_row in &self.conj {
                        let mut dot = 0;
                        for (&vi, &ci) in v.iter().zip(conj_row) {
                            dot = f.add(dot, f.mul(vi, ci));
                        }
                        if dot != 0 {
                            continue 'cand;
                        }
                    }
                    self.push_row(v);
                    self.extend(visit);
                    self.pop_row();
                }
            }
        }
    }
}
