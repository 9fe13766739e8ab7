//! The Verma module `M(lambda)` on PBW monomials and the contravariant form.
//!
//! PBW monomials are ordered products `f_{gamma_1}^{a_1} ... f_{gamma_N}^{a_N}`
//! over the canonical enumeration of positive roots. The radical of the
//! contravariant form is the maximal submodule, so ranks of Gram matrices
//! give the dimensions of the weight spaces of `V(lambda)`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::chevalley::{BasisElement, ChevalleyBasis};
use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, RankFilter, Q};
use crate::rootdata::{RootSystem, Weight};
use crate::sequences::BirationalSequence;

/// Exponents of a PBW monomial, indexed by canonical root index.
pub type PbwMonomial = Vec<u32>;

/// Sparse homogeneous vector of `M(lambda)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VermaVector {
    entries: BTreeMap<PbwMonomial, Q>,
}

impl VermaVector {
    pub fn zero() -> Self {
        VermaVector::default()
    }

    /// The highest weight vector.
    pub fn highest(num_roots: usize) -> Self {
        Self::monomial(vec![0; num_roots])
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(m, Q::one());
        VermaVector { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&PbwMonomial, &Q)> {
        self.entries.iter()
    }

    pub fn coefficient(&self, m: &[u32]) -> Q {
        self.entries.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_scaled(&mut self, other: &VermaVector, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.entries {
            let slot = self.entries.entry(m.clone()).or_insert_with(Q::zero);
            *slot += x * c;
            if slot.is_zero() {
                self.entries.remove(m);
            }
        }
    }

    pub fn scaled(&self, c: &Q) -> VermaVector {
        let mut out = VermaVector::zero();
        out.add_scaled(self, c);
        out
    }

    /// Depth (simple-root coordinates of `lambda - weight`), if nonzero.
    pub fn depth(&self, rs: &RootSystem) -> Option<Vec<u32>> {
        self.entries.keys().next().map(|m| monomial_depth(rs, m))
    }
}

/// Simple-root coordinates of the total root `sum a_k gamma_k`.
pub fn monomial_depth(rs: &RootSystem, m: &[u32]) -> Vec<u32> {
    let mut d = vec![0u32; rs.rank()];
    for (k, &a) in m.iter().enumerate() {
        if a > 0 {
            for (x, &c) in d.iter_mut().zip(rs.root(k)) {
                *x += a * c as u32;
            }
        }
    }
    d
}

/// Action of the enveloping algebra on `M(lambda)` with memoized straightening.
pub struct VermaModule<'c> {
    cb: &'c ChevalleyBasis,
    lambda: Weight,
    f_memo: RefCell<HashMap<(usize, PbwMonomial), VermaVector>>,
    e_memo: RefCell<HashMap<(usize, PbwMonomial), VermaVector>>,
}

impl<'c> VermaModule<'c> {
    pub fn new(cb: &'c ChevalleyBasis, lambda: &Weight) -> Result<Self> {
        cb.root_system().check_weight(lambda)?;
        Ok(VermaModule {
            cb,
            lambda: lambda.clone(),
            f_memo: RefCell::new(HashMap::new()),
            e_memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.lambda
    }

    pub fn root_system(&self) -> &RootSystem {
        self.cb.root_system()
    }

    pub fn highest(&self) -> VermaVector {
        VermaVector::highest(self.root_system().num_positive())
    }

    /// `f_beta` times a PBW monomial, in normal order.
    fn f_times_monomial(&self, beta: usize, m: &PbwMonomial) -> VermaVector {
        let first = m.iter().position(|&a| a > 0);
        match first {
            Some(j) if beta > j => {}
            _ => {
                let mut out = m.clone();
                out[beta] += 1;
                return VermaVector::monomial(out);
            }
        }
        let key = (beta, m.clone());
        if let Some(hit) = self.f_memo.borrow().get(&key) {
            return hit.clone();
        }
        let j = first.expect("nonempty");
        let mut rest = m.clone();
        rest[j] -= 1;
        // f_beta f_j X = f_j (f_beta X) + [f_beta, f_j] X
        let mut out = VermaVector::zero();
        let inner = self.f_times_monomial(beta, &rest);
        for (mm, c) in inner.entries() {
            let mut shifted = mm.clone();
            shifted[j] += 1;
            out.add_scaled(&VermaVector::monomial(shifted), c);
        }
        let br = self.cb.bracket(BasisElement::F(beta), BasisElement::F(j));
        for (elt, c) in br {
            let BasisElement::F(g) = elt else {
                unreachable!("bracket of two f's is an f")
            };
            out.add_scaled(&self.f_times_monomial(g, &rest), &q(c));
        }
        self.f_memo.borrow_mut().insert(key, out.clone());
        out
    }

    /// `e_alpha` times a PBW monomial applied to the highest weight vector.
    fn e_times_monomial(&self, alpha: usize, m: &PbwMonomial) -> VermaVector {
        let Some(j) = m.iter().position(|&a| a > 0) else {
            return VermaVector::zero();
        };
        let key = (alpha, m.clone());
        if let Some(hit) = self.e_memo.borrow().get(&key) {
            return hit.clone();
        }
        let mut rest = m.clone();
        rest[j] -= 1;
        // e_alpha f_j X = f_j (e_alpha X) + [e_alpha, f_j] X
        let mut out = self.apply_f(j, &self.e_times_monomial(alpha, &rest));
        let rest_vec = VermaVector::monomial(rest.clone());
        let br = self.cb.bracket(BasisElement::E(alpha), BasisElement::F(j));
        for (elt, c) in br {
            let c = q(c);
            match elt {
                BasisElement::H(i) => {
                    let s = self.h_eigenvalue(i, &rest);
                    out.add_scaled(&rest_vec, &(c * q(s)));
                }
                BasisElement::E(d) => out.add_scaled(&self.e_times_monomial(d, &rest), &c),
                BasisElement::F(d) => out.add_scaled(&self.f_times_monomial(d, &rest), &c),
            }
        }
        self.e_memo.borrow_mut().insert(key, out.clone());
        out
    }

    /// `<weight of f^m v_lambda, alpha_i^vee>`.
    fn h_eigenvalue(&self, i: usize, m: &[u32]) -> i64 {
        let rs = self.root_system();
        let depth = monomial_depth(rs, m);
        let lowered: i64 = depth
            .iter()
            .enumerate()
            .map(|(j, &d)| d as i64 * rs.cartan()[i][j])
            .sum();
        self.lambda.0[i] - lowered
    }

    /// `f_beta v`.
    pub fn apply_f(&self, beta: usize, v: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero();
        for (m, c) in v.entries() {
            out.add_scaled(&self.f_times_monomial(beta, m), c);
        }
        out
    }

    /// `e_alpha v`.
    pub fn apply_e(&self, alpha: usize, v: &VermaVector) -> VermaVector {
        let mut out = VermaVector::zero();
        for (m, c) in v.entries() {
            out.add_scaled(&self.e_times_monomial(alpha, m), c);
        }
        out
    }

    /// `f_{beta_1}^{k_1} ... f_{beta_M}^{k_M} v_lambda`, the last factor applied first.
    pub fn monomial_vector(&self, seq: &BirationalSequence, k: &[u32]) -> Result<VermaVector> {
        if k.len() != seq.len() {
            return Err(Error::LengthMismatch {
                left: seq.len(),
                right: k.len(),
            });
        }
        let mut v = self.highest();
        for (&beta, &e) in seq.roots().iter().zip(k).rev() {
            for _ in 0..e {
                v = self.apply_f(beta, &v);
            }
        }
        Ok(v)
    }

    /// `<f^a v_lambda, y>`: the `v_lambda` coefficient of `e_{gamma_N}^{a_N} ... e_{gamma_1}^{a_1} y`.
    pub fn pair_monomial(&self, a: &[u32], y: &VermaVector) -> Q {
        let mut v = y.clone();
        for (k, &e) in a.iter().enumerate() {
            for _ in 0..e {
                v = self.apply_e(k, &v);
                if v.is_zero() {
                    return Q::zero();
                }
            }
        }
        v.coefficient(&vec![0; a.len()])
    }

    /// The contravariant form.
    pub fn pair(&self, x: &VermaVector, y: &VermaVector) -> Q {
        let mut s = Q::zero();
        for (m, c) in x.entries() {
            let p = self.pair_monomial(m, y);
            if !p.is_zero() {
                s += c * p;
            }
        }
        s
    }
}

/// All PBW monomials whose total root has simple-root coordinates `depth`.
pub fn pbw_basis(rs: &RootSystem, depth: &[u32]) -> Vec<PbwMonomial> {
    fn go(
        rs: &RootSystem,
        k: usize,
        rem: &mut Vec<i64>,
        cur: &mut PbwMonomial,
        out: &mut Vec<PbwMonomial>,
    ) {
        if k == rs.num_positive() {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let root = rs.root(k);
        let max = root
            .iter()
            .zip(rem.iter())
            .filter(|(&c, _)| c > 0)
            .map(|(&c, &r)| r / c)
            .min()
            .unwrap_or(0);
        for a in 0..=max {
            for (x, &c) in rem.iter_mut().zip(root) {
                *x -= a * c;
            }
            cur[k] = a as u32;
            go(rs, k + 1, rem, cur, out);
            for (x, &c) in rem.iter_mut().zip(root) {
                *x += a * c;
            }
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    let mut rem: Vec<i64> = depth.iter().map(|&d| d as i64).collect();
    let mut cur = vec![0; rs.num_positive()];
    go(rs, 0, &mut rem, &mut cur, &mut out);
    out
}

/// Gram matrix of the contravariant form on one weight space of `M(lambda)`.
#[derive(Clone, Debug)]
pub struct WeightSpaceContext {
    pub lambda: Weight,
    pub mu: Weight,
    pub depth: Vec<u32>,
    pub pbw_basis: Vec<PbwMonomial>,
    pub gram: Matrix,
}

impl WeightSpaceContext {
    /// Pairings of `v` with every PBW basis vector.
    pub fn image(&self, verma: &VermaModule<'_>, v: &VermaVector) -> Result<Vec<Q>> {
        if let Some(d) = v.depth(verma.root_system()) {
            if d != self.depth {
                return Err(Error::WeightMismatch {
                    expected: self.depth.clone(),
                    got: d,
                });
            }
        }
        Ok(self
            .pbw_basis
            .iter()
            .map(|a| verma.pair_monomial(a, v))
            .collect())
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }
}

/// The Gram matrix of the PBW basis of the weight space `mu` of `M(lambda)`.
pub fn contravariant_gram(verma: &VermaModule<'_>, mu: &Weight) -> Result<WeightSpaceContext> {
    let rs = verma.root_system();
    rs.check_weight(mu)?;
    let depth = rs
        .depth_between(verma.highest_weight(), mu)
        .ok_or_else(|| {
            Error::Inconsistent(format!("{mu} is not below {}", verma.highest_weight()))
        })?;
    Ok(gram_at_depth(verma, &depth))
}

/// As [`contravariant_gram`], addressed by depth.
pub fn gram_at_depth(verma: &VermaModule<'_>, depth: &[u32]) -> WeightSpaceContext {
    let rs = verma.root_system();
    let basis = pbw_basis(rs, depth);
    let n = basis.len();
    let vectors: Vec<VermaVector> = basis
        .iter()
        .map(|m| VermaVector::monomial(m.clone()))
        .collect();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = verma.pair_monomial(&basis[i], &vectors[j]);
            gram.set(j, i, x.clone());
            gram.set(i, j, x);
        }
    }
    let mu = rs.weight_from_depth(verma.highest_weight(), depth);
    WeightSpaceContext {
        lambda: verma.highest_weight().clone(),
        mu,
        depth: depth.to_vec(),
        pbw_basis: basis,
        gram,
    }
}

/// Marks which vectors, taken in order, increase the rank modulo the radical.
pub fn rank_filter(
    verma: &VermaModule<'_>,
    ctx: &WeightSpaceContext,
    vectors: &[VermaVector],
) -> Result<Vec<bool>> {
    let mut f = RankFilter::new(ctx.pbw_basis.len());
    vectors
        .iter()
        .map(|v| {
            let img = ctx.image(verma, v)?;
            Ok(f.insert(&img))
        })
        .collect()
}
