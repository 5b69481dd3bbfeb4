//! Exact univariate polynomial algebra over the integers and rationals:
//! Sturm sequences, certified real root isolation, and the factor test used
//! to validate defining polynomials.

use crate::interval::{rat_int, RatInterval};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Integer polynomial, coefficients ascending, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(vec![BigInt::zero()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(x)
                .add(&RatInterval::point(BigRational::from_integer(c.clone())));
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.degree() == 0 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(coeffs)
    }

    pub fn to_rational(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Exact division by a monic integer polynomial; `None` if the division
    /// leaves a remainder.
    pub fn div_exact_monic(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(divisor.is_monic());
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (dd..rem.len()).rev() {
            let q = rem[k].clone();
            if q.is_zero() {
                continue;
            }
            quot[k - dd] = q.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[k - dd + j] -= t;
            }
        }
        if rem.iter().take(dd).all(|c| c.is_zero()) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Cauchy root bound: every real root has absolute value below the
    /// returned integer.
    pub fn cauchy_bound(&self) -> BigInt {
        let lead = self.leading().abs();
        let mut max = BigRational::zero();
        for c in &self.coeffs[..self.degree()] {
            let r = BigRational::new(c.abs(), lead.clone());
            if r > max {
                max = r;
            }
        }
        (BigRational::one() + max).ceil().to_integer() + BigInt::one()
    }
}

/// Rational polynomial, coefficients ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    pub coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.degree() == 0 {
            return QPoly::new(vec![BigRational::zero()]);
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn rem(&self, divisor: &QPoly) -> QPoly {
        assert!(!divisor.is_zero());
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let dl = divisor.coeffs.last().unwrap();
        while rem.len() > dd && rem.len() > 1 {
            let q = rem.last().unwrap() / dl;
            if !q.is_zero() {
                let k = rem.len() - 1 - dd;
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let t = &q * dc;
                    rem[k + j] -= t;
                }
            }
            rem.pop();
            while rem.len() > 1 && rem.last().map(|c| c.is_zero()).unwrap_or(false) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        QPoly::new(rem)
    }

    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        // Make monic for canonical output.
        let lead = a.coeffs.last().unwrap().clone();
        QPoly::new(a.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::new(vec![BigRational::zero()]));
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let dd = divisor.degree();
        let dl = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (dd..rem.len()).rev() {
            let q = &rem[k] / dl;
            if !q.is_zero() {
                quot[k - dd] = q.clone();
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let t = &q * dc;
                    rem[k - dd + j] -= t;
                }
            }
        }
        if rem.iter().take(dd).all(|c| c.is_zero()) {
            Some(QPoly::new(quot))
        } else {
            None
        }
    }
}

/// Square-free part `f / gcd(f, f')`, monic.
pub fn squarefree_part(f: &QPoly) -> QPoly {
    let g = f.gcd(&f.derivative());
    if g.degree() == 0 {
        let lead = f.coeffs.last().unwrap().clone();
        return QPoly::new(f.coeffs.iter().map(|c| c / &lead).collect());
    }
    f.div_exact(&g).expect("gcd divides")
}

pub fn is_squarefree(f: &QPoly) -> bool {
    f.gcd(&f.derivative()).degree() == 0
}

/// Sturm chain of a square-free polynomial.
pub struct SturmChain {
    chain: Vec<QPoly>,
}

impl SturmChain {
    pub fn new(f: &QPoly) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == 0 {
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(QPoly::new(r.coeffs.iter().map(|c| -c).collect()));
        }
        SturmChain { chain }
    }

    fn sign_changes_at(&self, x: &BigRational) -> usize {
        let mut changes = 0;
        let mut last: Option<Ordering> = None;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                continue;
            } else if v.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            if let Some(prev) = last {
                if prev != s {
                    changes += 1;
                }
            }
            last = Some(s);
        }
        changes
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a <= b);
        self.sign_changes_at(a).saturating_sub(self.sign_changes_at(b))
    }

    /// Number of distinct real roots on the whole line (the chain's head
    /// must be square-free for exact counts).
    pub fn count_real_roots(&self, f: &QPoly) -> usize {
        let bound = cauchy_bound_q(f);
        let a = BigRational::from_integer(-bound.clone());
        let b = BigRational::from_integer(bound);
        self.count_roots(&a, &b)
    }
}

fn cauchy_bound_q(f: &QPoly) -> BigInt {
    let lead = f.coeffs.last().unwrap();
    let mut max = BigRational::zero();
    for c in &f.coeffs[..f.degree()] {
        let r = (c / lead).abs();
        if r > max {
            max = r;
        }
    }
    (BigRational::one() + max).ceil().to_integer() + BigInt::one()
}

/// A located real root of a square-free polynomial: either exactly rational
/// or inside an open interval on which the polynomial changes sign.
#[derive(Debug, Clone)]
pub enum RealRoot {
    Rational(BigRational),
    Bracket { lo: BigRational, hi: BigRational },
}

impl RealRoot {
    pub fn enclosure(&self) -> RatInterval {
        match self {
            RealRoot::Rational(x) => RatInterval::point(x.clone()),
            RealRoot::Bracket { lo, hi } => RatInterval::new(lo.clone(), hi.clone()),
        }
    }
}

/// Isolate all distinct real roots of `f` (not necessarily square-free) as
/// disjoint enclosures, ascending.
pub fn isolate_real_roots(f: &QPoly) -> Vec<RealRoot> {
    assert!(!f.is_zero());
    let sf = squarefree_part(f);
    if sf.degree() == 0 {
        return vec![];
    }
    let chain = SturmChain::new(&sf);
    let bound = cauchy_bound_q(&sf);
    let a = BigRational::from_integer(-bound.clone());
    let b = BigRational::from_integer(bound);
    let mut out = Vec::new();
    isolate_rec(&sf, &chain, &a, &b, &mut out);
    out
}

fn isolate_rec(
    f: &QPoly,
    chain: &SturmChain,
    a: &BigRational,
    b: &BigRational,
    out: &mut Vec<RealRoot>,
) {
    let count = chain.count_roots(a, b);
    if count == 0 {
        return;
    }
    // Roots counted on (a, b]; endpoints of the initial bound are never
    // roots (Cauchy), and recursion keeps midpoint roots explicit.
    if count == 1 {
        // Shrink until the bracket endpoints are not roots and f changes sign.
        let mut lo = a.clone();
        let mut hi = b.clone();
        loop {
            if f.eval(&hi).is_zero() {
                out.push(RealRoot::Rational(hi));
                return;
            }
            if f.eval(&lo).is_zero() {
                // Root at the open endpoint belongs to the neighbour call.
                let mid = (&lo + &hi) / rat_int(2);
                if chain.count_roots(&mid, &hi) == 1 {
                    lo = mid;
                    continue;
                }
                out.push(RealRoot::Rational(mid));
                return;
            }
            if f.eval(&lo).is_positive() != f.eval(&hi).is_positive() {
                out.push(RealRoot::Bracket { lo, hi });
                return;
            }
            let mid = (&lo + &hi) / rat_int(2);
            if f.eval(&mid).is_zero() {
                out.push(RealRoot::Rational(mid));
                return;
            }
            if chain.count_roots(&lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    let mid = (a + b) / rat_int(2);
    if f.eval(&mid).is_zero() {
        // Split strictly around the midpoint root.
        isolate_rec(f, chain, a, &shrink_to_nonroot(f, chain, a, &mid), out);
        out.push(RealRoot::Rational(mid.clone()));
        isolate_rec(f, chain, &mid, b, out);
        // Re-sort in case the left recursion emitted past the midpoint.
        out.sort_by(|x, y| root_key(x).cmp(&root_key(y)));
        out.dedup_by(|x, y| root_key(x) == root_key(y));
        return;
    }
    isolate_rec(f, chain, a, &mid, out);
    isolate_rec(f, chain, &mid, b, out);
}

fn shrink_to_nonroot(
    f: &QPoly,
    chain: &SturmChain,
    a: &BigRational,
    b: &BigRational,
) -> BigRational {
    // Find c in (a, b) that is not a root and keeps all (a, b)-roots in (a, c].
    let mut c = (a + b) / rat_int(2);
    let inner = chain.count_roots(a, b) - 1; // excluding the root at b
    loop {
        if !f.eval(&c).is_zero() && chain.count_roots(a, &c) == inner {
            return c;
        }
        c = (&c + b) / rat_int(2);
    }
}

fn root_key(r: &RealRoot) -> BigRational {
    match r {
        RealRoot::Rational(x) => x.clone(),
        RealRoot::Bracket { lo, hi } => (lo + hi) / rat_int(2),
    }
}

/// One bisection step on a sign-change bracket; rational roots collapse to
/// exact points.
pub fn bisect_root(f: &QPoly, root: &RealRoot) -> RealRoot {
    match root {
        RealRoot::Rational(_) => root.clone(),
        RealRoot::Bracket { lo, hi } => {
            let mid = (lo + hi) / rat_int(2);
            let v = f.eval(&mid);
            if v.is_zero() {
                return RealRoot::Rational(mid);
            }
            if v.is_positive() == f.eval(lo).is_positive() {
                RealRoot::Bracket { lo: mid, hi: hi.clone() }
            } else {
                RealRoot::Bracket { lo: lo.clone(), hi: mid }
            }
        }
    }
}

/// Refine a root until its enclosure width is below `2^-bits`.
pub fn refine_root(f: &QPoly, root: &RealRoot, bits: u32) -> RealRoot {
    let tol = crate::interval::eps(bits);
    let mut r = root.clone();
    while let RealRoot::Bracket { lo, hi } = &r {
        if hi - lo < tol {
            break;
        }
        r = bisect_root(f, &r);
    }
    r
}

/// Outcome of the structure checks on a monic integer polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldPolyCheck {
    Ok,
    NotIrreducible,
    NotTotallyReal,
}

/// Decide whether a monic integer polynomial is irreducible over the
/// rationals with all roots real and distinct.
///
/// Strategy: square-freeness and a Sturm count handle the totally-real part.
/// Irreducibility then reduces to a search over root subsets: a monic
/// integer factor of degree k corresponds to a k-subset of the real roots
/// whose elementary symmetric functions are integers, which certified
/// enclosures detect and an exact trial division confirms.
pub fn check_field_poly(f: &IntPoly) -> FieldPolyCheck {
    let d = f.degree();
    assert!(f.is_monic() && d >= 1);
    if d == 1 {
        return FieldPolyCheck::Ok;
    }
    let fq = f.to_rational();
    if !is_squarefree(&fq) {
        return FieldPolyCheck::NotIrreducible;
    }
    let chain = SturmChain::new(&fq);
    if chain.count_real_roots(&fq) != d {
        return FieldPolyCheck::NotTotallyReal;
    }
    // Rational roots first: a monic integer polynomial only has integer
    // rational roots, and any root gives a linear factor.
    let roots = isolate_real_roots(&fq);
    if roots.iter().any(|r| matches!(r, RealRoot::Rational(_))) {
        return FieldPolyCheck::NotIrreducible;
    }
    let mut bits = 16u32;
    loop {
        let refined: Vec<RatInterval> = roots
            .iter()
            .map(|r| refine_root(&fq, r, bits).enclosure())
            .collect();
        let mut undecided = false;
        for k in 2..=d / 2 {
            for subset in subsets_of_size(d, k) {
                match subset_factor_candidate(&refined, &subset) {
                    SubsetOutcome::NoIntegerPoly => {}
                    SubsetOutcome::Candidate(g) => {
                        if f.div_exact_monic(&g).is_some() {
                            return FieldPolyCheck::NotIrreducible;
                        }
                    }
                    SubsetOutcome::Undecided => undecided = true,
                }
            }
        }
        if !undecided {
            return FieldPolyCheck::Ok;
        }
        bits *= 2;
        assert!(bits <= 1 << 14, "factor search failed to converge");
    }
}

enum SubsetOutcome {
    NoIntegerPoly,
    Candidate(IntPoly),
    Undecided,
}

/// Build the monic polynomial with the chosen root enclosures and inspect
/// whether its coefficients can all be integers.
fn subset_factor_candidate(roots: &[RatInterval], subset: &[usize]) -> SubsetOutcome {
    // Product of (x - theta_i): coefficients as intervals.
    let mut coeffs = vec![RatInterval::one()];
    for &i in subset {
        let t = &roots[i];
        let mut next = vec![RatInterval::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = next[j + 1].add(c);
            next[j] = next[j].add(&c.mul(&t.neg()));
        }
        coeffs = next;
    }
    let mut ints = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        let lo = c.lo.ceil().to_integer();
        let hi = c.hi.floor().to_integer();
        match lo.cmp(&hi) {
            Ordering::Greater => return SubsetOutcome::NoIntegerPoly,
            Ordering::Equal => ints.push(lo),
            Ordering::Less => return SubsetOutcome::Undecided,
        }
    }
    SubsetOutcome::Candidate(IntPoly::new(ints))
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::rat;

    fn q(coeffs: &[i64]) -> QPoly {
        IntPoly::from_i64(coeffs).to_rational()
    }

    #[test]
    fn sturm_counts_roots() {
        // x^2 - 2 has two real roots.
        let f = q(&[-2, 0, 1]);
        let chain = SturmChain::new(&f);
        assert_eq!(chain.count_real_roots(&f), 2);
        // x^2 + 1 has none.
        let g = q(&[1, 0, 1]);
        let chain = SturmChain::new(&g);
        assert_eq!(chain.count_real_roots(&g), 0);
    }

    #[test]
    fn isolates_sqrt2() {
        let f = q(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        let r = refine_root(&f, &roots[1], 40).enclosure();
        assert!(r.lo < rat(1414214, 1000000));
        assert!(r.hi > rat(1414213, 1000000));
    }

    #[test]
    fn rational_roots_become_exact() {
        // (x-1)(x-3) = x^2 - 4x + 3
        let f = q(&[3, -4, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
        for (r, want) in roots.iter().zip([1i64, 3]) {
            match r {
                RealRoot::Rational(x) => assert_eq!(*x, rat_int(want)),
                _ => panic!("expected exact rational root"),
            }
        }
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x-2)^2 (x+1)
        let f = q(&[4, 0, -3, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn field_poly_checks() {
        assert_eq!(check_field_poly(&IntPoly::from_i64(&[-2, 0, 1])), FieldPolyCheck::Ok);
        assert_eq!(
            check_field_poly(&IntPoly::from_i64(&[1, 0, 1])),
            FieldPolyCheck::NotTotallyReal
        );
        // x^4 - 5x^2 + 6 = (x^2-2)(x^2-3): all roots real but reducible.
        assert_eq!(
            check_field_poly(&IntPoly::from_i64(&[6, 0, -5, 0, 1])),
            FieldPolyCheck::NotIrreducible
        );
        // x^2 - 1 has rational roots.
        assert_eq!(
            check_field_poly(&IntPoly::from_i64(&[-1, 0, 1])),
            FieldPolyCheck::NotIrreducible
        );
        // (x^2-2)^2 is not square-free.
        assert_eq!(
            check_field_poly(&IntPoly::from_i64(&[4, 0, -4, 0, 1])),
            FieldPolyCheck::NotIrreducible
        );
        // x^3 - x - 1 is irreducible with one real root.
        assert_eq!(
            check_field_poly(&IntPoly::from_i64(&[-1, -1, 0, 1])),
            FieldPolyCheck::NotTotallyReal
        );
        // x^3 - 3x - 1: totally real cubic (discriminant 81).
        assert_eq!(check_field_poly(&IntPoly::from_i64(&[-1, -3, 0, 1])), FieldPolyCheck::Ok);
        // x^4 - 10x^2 + 1: minimal polynomial of sqrt2 + sqrt3.
        assert_eq!(check_field_poly(&IntPoly::from_i64(&[1, 0, -10, 0, 1])), FieldPolyCheck::Ok);
    }

    #[test]
    fn exact_division() {
        let f = IntPoly::from_i64(&[6, 0, -5, 0, 1]);
        let g = IntPoly::from_i64(&[-2, 0, 1]);
        let h = f.div_exact_monic(&g).unwrap();
        assert_eq!(h, IntPoly::from_i64(&[-3, 0, 1]));
        assert!(f.div_exact_monic(&IntPoly::from_i64(&[-1, 1])).is_none());
    }
}
