//! Orders in totally real number fields and exact arithmetic on their
//! elements.
//!
//! An [`Order`] is defined by a monic integer polynomial f (irreducible,
//! all roots real) together with a basis given by rational coordinates in
//! the power basis of a root. Construction validates that the basis spans,
//! contains 1 as its first element, and is closed under multiplication;
//! the multiplication and trace tables are then exact integer data and all
//! element arithmetic is exact.
//!
//! Real-embedding data is kept as certified rational enclosures of the d
//! roots of f, refined on demand under a single-writer lock. Every numeric
//! decision (signs, comparisons, house bounds) is made from definite
//! intervals only; exact coordinate tests break the remaining ties.

use crate::error::{Error, Result};
use crate::interval::{eps, ln_interval, rat_int, RatInterval, RealBound};
use crate::poly::{
    check_field_poly, isolate_real_roots, refine_root, FieldPolyCheck, IntPoly, QPoly, RealRoot,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, RwLock};

pub const DEFAULT_PRECISION: u32 = 64;
const MAX_DEGREE: usize = 8;

struct EmbeddingCache {
    precision: u32,
    /// Enclosures of the roots of f, ascending.
    roots: Vec<RealRoot>,
    /// basis_emb[i][j] encloses sigma_i(omega_j).
    basis_emb: Vec<Vec<RatInterval>>,
}

/// An order in a totally real number field with a fixed multiplicative
/// basis.
pub struct Order {
    poly: IntPoly,
    /// Rows are the basis elements in powers of the root.
    basis: Vec<Vec<BigRational>>,
    /// coords of omega_i * omega_j in the basis.
    mult_table: Vec<Vec<Vec<BigInt>>>,
    trace_table: Vec<Vec<BigInt>>,
    /// Traces of the basis elements.
    basis_traces: Vec<BigInt>,
    discriminant: BigInt,
    embeddings: RwLock<EmbeddingCache>,
}

impl fmt::Debug for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Order")
            .field("poly", &self.poly)
            .field("degree", &self.degree())
            .field("discriminant", &self.discriminant)
            .finish()
    }
}

impl PartialEq for Order {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && self.basis == other.basis
    }
}

/// Build the order defined by `f` with an optional basis (rows of rational
/// coordinates in powers of the root); the default is the power basis.
pub fn define_field(f: IntPoly, basis: Option<Vec<Vec<BigRational>>>) -> Result<Arc<Order>> {
    if !f.is_monic() || f.degree() < 1 {
        return Err(Error::InvalidInput(
            "defining polynomial must be monic of degree >= 1".into(),
        ));
    }
    let d = f.degree();
    if d > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(d));
    }
    match check_field_poly(&f) {
        FieldPolyCheck::NotIrreducible => return Err(Error::NotIrreducible),
        FieldPolyCheck::NotTotallyReal => return Err(Error::NotTotallyReal),
        FieldPolyCheck::Ok => {}
    }
    let basis = match basis {
        Some(b) => {
            if b.len() != d || b.iter().any(|row| row.len() != d) {
                return Err(Error::BasisNotRing);
            }
            b
        }
        None => (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect(),
    };
    // omega_1 = 1.
    if !(basis[0][0].is_one() && basis[0][1..].iter().all(|c| c.is_zero())) {
        return Err(Error::BasisNotRing);
    }
    let basis_inv = invert_matrix(&basis).ok_or(Error::BasisNotRing)?;

    // Multiplication table with integrality check.
    let fq = f.to_rational();
    let mut mult_table = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..=i {
            let prod = poly_mul_mod(&basis[i], &basis[j], &fq);
            let coords = coords_in_basis(&prod, &basis_inv).ok_or(Error::BasisNotRing)?;
            mult_table[i][j] = coords.clone();
            mult_table[j][i] = coords;
        }
    }

    // Traces of basis elements: trace of the multiplication matrix.
    let mut basis_traces = vec![BigInt::zero(); d];
    for (k, tr) in basis_traces.iter_mut().enumerate() {
        let mut acc = BigInt::zero();
        for i in 0..d {
            acc += &mult_table[k][i][i];
        }
        *tr = acc;
    }
    let mut trace_table = vec![vec![BigInt::zero(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let mut acc = BigInt::zero();
            for l in 0..d {
                acc += &mult_table[i][j][l] * &basis_traces[l];
            }
            trace_table[i][j] = acc;
        }
    }
    let discriminant = int_det(&trace_table);
    if discriminant.is_zero() {
        return Err(Error::BasisNotRing);
    }

    let roots = isolate_sorted_roots(&fq, DEFAULT_PRECISION);
    let basis_emb = basis_embeddings(&basis, &roots);
    Ok(Arc::new(Order {
        poly: f,
        basis,
        mult_table,
        trace_table,
        basis_traces,
        discriminant,
        embeddings: RwLock::new(EmbeddingCache {
            precision: DEFAULT_PRECISION,
            roots,
            basis_emb,
        }),
    }))
}

fn isolate_sorted_roots(fq: &QPoly, bits: u32) -> Vec<RealRoot> {
    isolate_real_roots(fq)
        .into_iter()
        .map(|r| refine_root(fq, &r, bits))
        .collect()
}

fn basis_embeddings(basis: &[Vec<BigRational>], roots: &[RealRoot]) -> Vec<Vec<RatInterval>> {
    roots
        .iter()
        .map(|root| {
            let theta = root.enclosure();
            basis
                .iter()
                .map(|row| {
                    let mut acc = RatInterval::zero();
                    let mut p = RatInterval::one();
                    for (k, c) in row.iter().enumerate() {
                        if k > 0 {
                            p = p.mul(&theta);
                        }
                        if !c.is_zero() {
                            acc = acc.add(&p.scale(c));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Multiply two elements given in power-basis coordinates and reduce mod f.
fn poly_mul_mod(a: &[BigRational], b: &[BigRational], f: &QPoly) -> Vec<BigRational> {
    let d = f.degree();
    let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            prod[i + j] += ai * bj;
        }
    }
    // Reduce degree >= d terms using theta^d = -(c_0 + ... + c_{d-1} theta^{d-1}).
    for k in (d..prod.len()).rev() {
        let c = std::mem::replace(&mut prod[k], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        for j in 0..d {
            let t = &c * &f.coeffs[j];
            prod[k - d + j] -= t;
        }
    }
    prod.truncate(d);
    prod.resize(d, BigRational::zero());
    prod
}

/// Solve coords * basis = powers, i.e. coords = powers * basis^{-1}; `None`
/// unless all coordinates are integers.
fn coords_in_basis(powers: &[BigRational], basis_inv: &[Vec<BigRational>]) -> Option<Vec<BigInt>> {
    let d = powers.len();
    let mut out = Vec::with_capacity(d);
    for j in 0..d {
        let mut acc = BigRational::zero();
        for (k, p) in powers.iter().enumerate() {
            if !p.is_zero() {
                acc += p * &basis_inv[k][j];
            }
        }
        if !acc.is_integer() {
            return None;
        }
        out.push(acc.to_integer());
    }
    Some(out)
}

fn invert_matrix(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..n {
                    let t = &factor * &a[col][j];
                    a[r][j] -= t;
                    let t = &factor * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// Exact determinant of an integer matrix (expansion via fraction-free
/// Gaussian elimination).
fn int_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|c| BigRational::from_integer(c.clone())).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return BigInt::zero(),
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= &a[col][col];
        let p = a[col][col].clone();
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let factor = &a[r][col] / &p;
                for j in col..n {
                    let t = &factor * &a[col][j];
                    a[r][j] -= t;
                }
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

impl Order {
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    pub fn trace_table(&self) -> &[Vec<BigInt>] {
        &self.trace_table
    }

    pub fn mult_coords(&self, i: usize, j: usize) -> &[BigInt] {
        &self.mult_table[i][j]
    }

    /// Current cached working precision of the embedding enclosures.
    pub fn embedding_precision(&self) -> u32 {
        self.embeddings.read().unwrap().precision
    }

    /// Make sure the cached root enclosures are at least `bits` wide-exact;
    /// single writer, many readers.
    pub fn ensure_precision(&self, bits: u32) {
        {
            let cache = self.embeddings.read().unwrap();
            if cache.precision >= bits {
                return;
            }
        }
        let mut cache = self.embeddings.write().unwrap();
        if cache.precision >= bits {
            return;
        }
        let fq = self.poly.to_rational();
        let roots: Vec<RealRoot> = cache
            .roots
            .iter()
            .map(|r| refine_root(&fq, r, bits))
            .collect();
        cache.basis_emb = basis_embeddings(&self.basis, &roots);
        cache.roots = roots;
        cache.precision = bits;
    }

    /// Enclosures of the embeddings of the basis elements at precision at
    /// least `bits`: result[i][j] encloses sigma_i(omega_j).
    pub fn basis_embeddings_at(&self, bits: u32) -> Vec<Vec<RatInterval>> {
        self.ensure_precision(bits);
        self.embeddings.read().unwrap().basis_emb.clone()
    }

    /// Enclosures of the d roots of f, ascending, at precision >= bits.
    pub fn root_enclosures(&self, bits: u32) -> Vec<RatInterval> {
        self.ensure_precision(bits);
        self.embeddings
            .read()
            .unwrap()
            .roots
            .iter()
            .map(|r| r.enclosure())
            .collect()
    }

    pub fn zero(self: &Arc<Self>) -> AlgInt {
        AlgInt::from_coords(self, vec![BigInt::zero(); self.degree()]).unwrap()
    }

    pub fn one(self: &Arc<Self>) -> AlgInt {
        self.from_integer(BigInt::one())
    }

    pub fn from_integer(self: &Arc<Self>, n: BigInt) -> AlgInt {
        let mut coords = vec![BigInt::zero(); self.degree()];
        coords[0] = n;
        AlgInt::from_coords(self, coords).unwrap()
    }

    pub fn basis_element(self: &Arc<Self>, i: usize) -> AlgInt {
        let mut coords = vec![BigInt::zero(); self.degree()];
        coords[i] = BigInt::one();
        AlgInt::from_coords(self, coords).unwrap()
    }
}

pub fn same_order(a: &Arc<Order>, b: &Arc<Order>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// An element of an order: exact integer coordinates in the order basis.
#[derive(Clone)]
pub struct AlgInt {
    order: Arc<Order>,
    coords: Vec<BigInt>,
}

impl fmt::Debug for AlgInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgInt{:?}", self.coords)
    }
}

impl PartialEq for AlgInt {
    fn eq(&self, other: &Self) -> bool {
        same_order(&self.order, &other.order) && self.coords == other.coords
    }
}

impl Eq for AlgInt {}

impl fmt::Display for AlgInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Requested ring operation for the checked entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

impl AlgInt {
    pub fn from_coords(order: &Arc<Order>, coords: Vec<BigInt>) -> Result<AlgInt> {
        if coords.len() != order.degree() {
            return Err(Error::InvalidInput(format!(
                "coordinate vector length {} does not match degree {}",
                coords.len(),
                order.degree()
            )));
        }
        Ok(AlgInt { order: order.clone(), coords })
    }

    pub fn from_i64(order: &Arc<Order>, coords: &[i64]) -> Result<AlgInt> {
        Self::from_coords(order, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn order(&self) -> &Arc<Order> {
        &self.order
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// Exact test against a rational number (an element equals p/q only if
    /// p/q is an integer of the order, i.e. an actual integer here).
    pub fn eq_rational(&self, x: &BigRational) -> bool {
        if !x.is_integer() {
            return false;
        }
        self.coords[0] == x.to_integer() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    fn assert_same_order(&self, other: &AlgInt) {
        assert!(
            same_order(&self.order, &other.order),
            "operands from different orders"
        );
    }

    pub fn add(&self, other: &AlgInt) -> AlgInt {
        self.assert_same_order(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        AlgInt { order: self.order.clone(), coords }
    }

    pub fn sub(&self, other: &AlgInt) -> AlgInt {
        self.assert_same_order(other);
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        AlgInt { order: self.order.clone(), coords }
    }

    pub fn neg(&self) -> AlgInt {
        AlgInt {
            order: self.order.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &AlgInt) -> AlgInt {
        self.assert_same_order(other);
        let d = self.order.degree();
        let mut coords = vec![BigInt::zero(); d];
        for i in 0..d {
            if self.coords[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if other.coords[j].is_zero() {
                    continue;
                }
                let c = &self.coords[i] * &other.coords[j];
                let table = self.order.mult_coords(i, j);
                for (l, t) in table.iter().enumerate() {
                    if !t.is_zero() {
                        coords[l] += &c * t;
                    }
                }
            }
        }
        AlgInt { order: self.order.clone(), coords }
    }

    pub fn scale(&self, c: &BigInt) -> AlgInt {
        AlgInt {
            order: self.order.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> AlgInt {
        let mut acc = self.order.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Checked ring operation with a `MixedOrders` error, for API surfaces.
    pub fn arith(op: RingOp, a: &AlgInt, b: &AlgInt) -> Result<AlgInt> {
        if !same_order(&a.order, &b.order) {
            return Err(Error::MixedOrders);
        }
        Ok(match op {
            RingOp::Add => a.add(b),
            RingOp::Sub => a.sub(b),
            RingOp::Mul => a.mul(b),
        })
    }

    pub fn trace(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (c, t) in self.coords.iter().zip(&self.order.basis_traces) {
            acc += c * t;
        }
        acc
    }

    /// Field norm: determinant of the multiplication-by-self matrix.
    pub fn norm(&self) -> BigInt {
        let d = self.order.degree();
        let mut m = vec![vec![BigInt::zero(); d]; d];
        for i in 0..d {
            // column i = coords of self * omega_i
            let mut col = vec![BigInt::zero(); d];
            for (j, c) in self.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (l, t) in self.order.mult_coords(j, i).iter().enumerate() {
                    if !t.is_zero() {
                        col[l] += c * t;
                    }
                }
            }
            for (l, v) in col.into_iter().enumerate() {
                m[l][i] = v;
            }
        }
        int_det(&m)
    }

    /// Enclosure of sigma_i(self) at precision >= bits.
    pub fn embed(&self, i: usize, bits: u32) -> RatInterval {
        let emb = self.order.basis_embeddings_at(bits);
        let mut acc = RatInterval::zero();
        for (j, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&emb[i][j].scale(&BigRational::from_integer(c.clone())));
            }
        }
        acc
    }

    /// Enclosures of all embeddings at once.
    pub fn embed_all(&self, bits: u32) -> Vec<RatInterval> {
        (0..self.order.degree()).map(|i| self.embed(i, bits)).collect()
    }

    /// Certified enclosure of the house (max absolute embedding).
    pub fn house(&self, bits: u32) -> RealBound {
        let embs = self.embed_all(bits);
        let mut acc = embs[0].abs();
        for e in &embs[1..] {
            acc = acc.max_with(&e.abs());
        }
        RealBound::new(acc, bits)
    }

    /// Certified enclosure of the logarithmic Weil height over the ambient
    /// field's embeddings.
    pub fn weil_height(&self, bits: u32) -> RealBound {
        let work = bits + 8;
        let d = self.order.degree();
        let one = BigRational::one();
        let mut acc = RatInterval::zero();
        for e in self.embed_all(work) {
            let a = e.abs();
            let clipped = RatInterval::new(a.lo.clone().max(one.clone()), a.hi.clone().max(one.clone()));
            acc = acc.add(&ln_interval(&clipped, work));
        }
        let v = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(d)));
        RealBound::new(v, bits)
    }

    /// Exact sign of sigma_i(self): refines until definite; only the zero
    /// element has a zero embedding.
    pub fn embedding_sign(&self, i: usize) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let mut bits = self.order.embedding_precision();
        loop {
            let e = self.embed(i, bits);
            if let Some(s) = e.sign() {
                return s;
            }
            bits *= 2;
            assert!(bits <= 1 << 20, "sign refinement failed to converge");
        }
    }

    /// Exact decision: sigma_i(self) > 0 for every embedding.
    pub fn is_totally_positive(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let d = self.order.degree();
        let mut bits = self.order.embedding_precision();
        let mut undecided: Vec<usize> = (0..d).collect();
        loop {
            let mut next = Vec::new();
            for &i in &undecided {
                match self.embed(i, bits).sign() {
                    Some(Ordering::Greater) => {}
                    Some(_) => return false,
                    None => next.push(i),
                }
            }
            if next.is_empty() {
                return true;
            }
            undecided = next;
            bits *= 2;
            assert!(bits <= 1 << 20, "positivity refinement failed to converge");
        }
    }

    /// `self - other` totally positive, the strict total ordering of the
    /// paper's succ relation.
    pub fn totally_greater(&self, other: &AlgInt) -> bool {
        self.sub(other).is_totally_positive()
    }

    /// Galois conjugate for quadratic orders: Tr(x) - x.
    pub fn quadratic_conjugate(&self) -> Result<AlgInt> {
        if self.order.degree() != 2 {
            return Err(Error::NotQuadratic);
        }
        Ok(self.order.from_integer(self.trace()).sub(self))
    }
}

/// Exact comparison of houses of two elements of the same quadratic order
/// (or of any order of degree <= 2). Ties across embeddings only occur on
/// the conjugate orbit, which is tested exactly.
pub fn cmp_house_quadratic(a: &AlgInt, b: &AlgInt) -> Result<Ordering> {
    if a.order().degree() > 2 {
        return Err(Error::NotQuadratic);
    }
    if house_equal_quadratic(a, b)? {
        return Ok(Ordering::Equal);
    }
    let mut bits = DEFAULT_PRECISION;
    loop {
        let ha = a.house(bits);
        let hb = b.house(bits);
        if ha.hi() < hb.lo() {
            return Ok(Ordering::Less);
        }
        if hb.hi() < ha.lo() {
            return Ok(Ordering::Greater);
        }
        bits *= 2;
        assert!(bits <= 1 << 20, "house comparison failed to converge");
    }
}

fn house_equal_quadratic(a: &AlgInt, b: &AlgInt) -> Result<bool> {
    if a == b || *a == b.neg() {
        return Ok(true);
    }
    if a.order().degree() == 2 {
        let conj = b.quadratic_conjugate()?;
        if *a == conj || *a == conj.neg() {
            // Equal multisets of absolute embedding values.
            return Ok(true);
        }
    }
    Ok(false)
}

/// Canonical deterministic ordering on elements: lexicographic on the
/// coordinate vector with each coordinate keyed by (|c|, sign), so 0 < 1 <
/// -1 < 2 < -2. Used wherever the toolkit enumerates or tie-breaks.
pub fn abs_lex_cmp(a: &AlgInt, b: &AlgInt) -> Ordering {
    for (x, y) in a.coords().iter().zip(b.coords()) {
        let key = |c: &BigInt| (c.abs(), c.is_negative());
        match key(x).cmp(&key(y)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Convenience constructors for the fields used throughout the tests.
pub mod wellknown {
    use super::*;
    use crate::interval::rat;

    /// The rationals as the degree-1 field of x - 1.
    pub fn rationals() -> Arc<Order> {
        define_field(IntPoly::from_i64(&[-1, 1]), None).unwrap()
    }

    /// Z[sqrt(D)] with the power basis of x^2 - D.
    pub fn z_sqrt(d: i64) -> Arc<Order> {
        define_field(IntPoly::from_i64(&[-d, 0, 1]), None).unwrap()
    }

    /// The maximal order Z[(1+sqrt5)/2] of Q(sqrt5).
    pub fn golden_order() -> Arc<Order> {
        define_field(
            IntPoly::from_i64(&[-5, 0, 1]),
            Some(vec![
                vec![rat(1, 1), rat(0, 1)],
                vec![rat(1, 2), rat(1, 2)],
            ]),
        )
        .unwrap()
    }
}

/// Refine both endpoints of a house bound until its width is below
/// `2^-bits` (relative to scale 1).
pub fn house_refined(a: &AlgInt, bits: u32) -> RealBound {
    let mut p = bits.max(DEFAULT_PRECISION);
    loop {
        let h = a.house(p);
        if h.value.width() < eps(bits) {
            return h;
        }
        p *= 2;
        assert!(p <= 1 << 20, "house refinement failed to converge");
    }
}

/// Floor of the house of `a`, decided exactly: refine until the enclosure
/// pins the floor, detecting the integer-house case (a = +-k) exactly.
pub fn house_floor(a: &AlgInt) -> BigInt {
    // Exact integer house happens only for rational integers +-k.
    if a.coords()[1..].iter().all(|c| c.is_zero()) {
        return a.coords()[0].abs();
    }
    let mut bits = DEFAULT_PRECISION;
    loop {
        let h = a.house(bits);
        let lo = h.lo().floor().to_integer();
        let hi = h.hi().floor().to_integer();
        if lo == hi && !h.lo().is_integer() {
            return lo;
        }
        // If the enclosure straddles an integer k, the house might equal k,
        // but that needs a = +-k which is excluded above; refine.
        bits *= 2;
        assert!(bits <= 1 << 20, "house floor refinement failed to converge");
    }
}



#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::rat;

    #[test]
    fn defines_rationals() {
        let q = wellknown::rationals();
        assert_eq!(q.degree(), 1);
        assert_eq!(*q.discriminant(), BigInt::one());
    }

    #[test]
    fn z_sqrt2_discriminant_is_8() {
        let o = wellknown::z_sqrt(2);
        assert_eq!(*o.discriminant(), BigInt::from(8));
        assert_eq!(o.trace_table()[0][0], BigInt::from(2));
        assert_eq!(o.trace_table()[0][1], BigInt::zero());
        assert_eq!(o.trace_table()[1][1], BigInt::from(4));
    }

    #[test]
    fn golden_order_discriminant_is_5() {
        let o = wellknown::golden_order();
        assert_eq!(*o.discriminant(), BigInt::from(5));
    }

    #[test]
    fn rejects_bad_polys() {
        assert!(matches!(
            define_field(IntPoly::from_i64(&[1, 0, 1]), None),
            Err(Error::NotTotallyReal)
        ));
        assert!(matches!(
            define_field(IntPoly::from_i64(&[6, 0, -5, 0, 1]), None),
            Err(Error::NotIrreducible)
        ));
    }

    #[test]
    fn rejects_non_ring_basis() {
        // {1, theta/2} in x^2 - 2 is not multiplicatively closed.
        let r = define_field(
            IntPoly::from_i64(&[-2, 0, 1]),
            Some(vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 2)]]),
        );
        assert!(matches!(r, Err(Error::BasisNotRing)));
        // Basis must contain 1 first.
        let r = define_field(
            IntPoly::from_i64(&[-2, 0, 1]),
            Some(vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]]),
        );
        assert!(matches!(r, Err(Error::BasisNotRing)));
    }

    #[test]
    fn arithmetic_in_z_sqrt2() {
        let o = wellknown::z_sqrt(2);
        let a = AlgInt::from_i64(&o, &[1, 1]).unwrap(); // 1 + sqrt2
        let b = AlgInt::from_i64(&o, &[1, -1]).unwrap(); // 1 - sqrt2
        assert_eq!(a.mul(&b), o.from_integer(BigInt::from(-1)));
        let sq = a.pow(2); // 3 + 2 sqrt2
        assert_eq!(sq, AlgInt::from_i64(&o, &[3, 2]).unwrap());
    }

    #[test]
    fn golden_ratio_squares() {
        let o = wellknown::golden_order();
        let phi = o.basis_element(1);
        let phi2 = phi.pow(2);
        // phi^2 = 1 + phi
        assert_eq!(phi2, AlgInt::from_i64(&o, &[1, 1]).unwrap());
        let (n, t) = (phi.norm(), phi.trace());
        assert_eq!(n, BigInt::from(-1));
        assert_eq!(t, BigInt::one());
    }

    #[test]
    fn norm_trace_examples() {
        let o = wellknown::z_sqrt(2);
        let a = AlgInt::from_i64(&o, &[3, 1]).unwrap(); // 3 + sqrt2
        assert_eq!(a.norm(), BigInt::from(7));
        assert_eq!(a.trace(), BigInt::from(6));
        let z = o.zero();
        assert_eq!(z.norm(), BigInt::zero());
        assert_eq!(z.trace(), BigInt::zero());
    }

    #[test]
    fn house_enclosures() {
        let o = wellknown::golden_order();
        let phi = o.basis_element(1);
        let h = phi.house(64);
        assert!(*h.lo() < rat(16181, 10000) && *h.hi() > rat(16179, 10000));

        let q = wellknown::rationals();
        let m3 = q.from_integer(BigInt::from(-3));
        let h = m3.house(64);
        assert!(h.value.is_point());
        assert_eq!(*h.lo(), rat_int(3));

        let o2 = wellknown::z_sqrt(2);
        let a = AlgInt::from_i64(&o2, &[1, 1]).unwrap();
        let h = a.house(64);
        assert!(*h.lo() < rat(24143, 10000) && *h.hi() > rat(24141, 10000));
    }

    #[test]
    fn weil_height_examples() {
        let q = wellknown::rationals();
        let five = q.from_integer(BigInt::from(5));
        let h = five.weil_height(64);
        // log 5 = 1.6094...
        assert!(*h.lo() < rat(160944, 100000) && *h.hi() > rat(160943, 100000));

        let o = wellknown::z_sqrt(2);
        let a = AlgInt::from_i64(&o, &[1, 1]).unwrap();
        let h = a.weil_height(64);
        // (1/2) log(1+sqrt2) = 0.44068...
        assert!(*h.lo() < rat(44069, 100000) && *h.hi() > rat(44067, 100000));

        let g = wellknown::golden_order();
        let phi = g.basis_element(1);
        let h = phi.weil_height(64);
        // (1/2) log phi = 0.24061...
        assert!(*h.lo() < rat(24062, 100000) && *h.hi() > rat(24060, 100000));
    }

    #[test]
    fn totally_positive_examples() {
        let o = wellknown::z_sqrt(2);
        assert!(AlgInt::from_i64(&o, &[2, 1]).unwrap().is_totally_positive());
        assert!(!AlgInt::from_i64(&o, &[1, 1]).unwrap().is_totally_positive());
        assert!(!o.zero().is_totally_positive());
    }

    #[test]
    fn house_floor_decides() {
        let o = wellknown::z_sqrt(2);
        let a = AlgInt::from_i64(&o, &[1, 1]).unwrap(); // house 2.414
        assert_eq!(house_floor(&a), BigInt::from(2));
        let b = o.from_integer(BigInt::from(-7));
        assert_eq!(house_floor(&b), BigInt::from(7));
        let s = o.basis_element(1); // sqrt2, house 1.414...
        assert_eq!(house_floor(&s), BigInt::one());
    }

    #[test]
    fn embedding_enclosures_disjoint() {
        for o in [wellknown::z_sqrt(2), wellknown::z_sqrt(3), wellknown::golden_order()] {
            for bits in [16u32, 64, 128] {
                let roots = o.root_enclosures(bits);
                for w in roots.windows(2) {
                    assert!(w[0].hi < w[1].lo, "enclosures must stay disjoint");
                }
            }
        }
    }

    #[test]
    fn abs_lex_order() {
        let o = wellknown::rationals();
        let mk = |v: i64| o.from_integer(BigInt::from(v));
        let mut xs = vec![mk(2), mk(-1), mk(0), mk(1), mk(-2)];
        xs.sort_by(abs_lex_cmp);
        let got: Vec<i64> = xs
            .iter()
            .map(|x| {
                let c = &x.coords()[0];
                let s: String = c.to_string();
                s.parse().unwrap()
            })
            .collect();
        assert_eq!(got, vec![0, 1, -1, 2, -2]);
    }

    #[test]
    fn quadratic_conjugate_and_house_cmp() {
        let o = wellknown::z_sqrt(2);
        let a = AlgInt::from_i64(&o, &[1, 1]).unwrap();
        let c = a.quadratic_conjugate().unwrap();
        assert_eq!(c, AlgInt::from_i64(&o, &[1, -1]).unwrap());
        assert_eq!(cmp_house_quadratic(&a, &c).unwrap(), Ordering::Equal);
        let b = AlgInt::from_i64(&o, &[2, 1]).unwrap();
        assert_eq!(cmp_house_quadratic(&a, &b).unwrap(), Ordering::Less);
    }
}
