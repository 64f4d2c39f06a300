//! Exact dense linear algebra over Q and over Q[t].
//!
//! Everything returns certificates rather than bare booleans: row reduction
//! carries its transform matrix, the semidefiniteness check produces either a
//! sum-of-squares decomposition or an explicit vector of negative value, and
//! parametric kernels are re-verified by multiplication before they are
//! returned.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;
use crate::unipoly::{RatFun, UniPoly};

/// Dense matrix over Q, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = RatMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        RatMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, rhs: &RatMatrix) -> RatMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &RatMatrix) -> RatMatrix {
        self.add(&rhs.scale(&-Rat::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

/// Reduced row echelon form together with its left transform.
pub struct Rref {
    /// The echelon form `R = T * A`.
    pub r: RatMatrix,
    /// Invertible transform with `T * A = R`.
    pub t: RatMatrix,
    /// Pivot column of each of the first `rank` rows of `R`, increasing.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination with full reduction and transform tracking.
pub fn rref(a: &RatMatrix) -> Rref {
    let mut r = a.clone();
    let mut t = RatMatrix::identity(a.rows);
    let mut pivots = Vec::new();
    let mut pr = 0usize;
    for pc in 0..a.cols {
        let Some(sel) = (pr..a.rows).find(|&i| !r.get(i, pc).is_zero()) else {
            continue;
        };
        if sel != pr {
            for c in 0..a.cols {
                let tmp = r.get(sel, c).clone();
                r.set(sel, c, r.get(pr, c).clone());
                r.set(pr, c, tmp);
            }
            for c in 0..a.rows {
                let tmp = t.get(sel, c).clone();
                t.set(sel, c, t.get(pr, c).clone());
                t.set(pr, c, tmp);
            }
        }
        let inv = r.get(pr, pc).recip();
        for c in 0..a.cols {
            let v = r.get(pr, c) * &inv;
            r.set(pr, c, v);
        }
        for c in 0..a.rows {
            let v = t.get(pr, c) * &inv;
            t.set(pr, c, v);
        }
        for i in 0..a.rows {
            if i == pr || r.get(i, pc).is_zero() {
                continue;
            }
            let f = r.get(i, pc).clone();
            for c in 0..a.cols {
                let v = r.get(i, c) - &(r.get(pr, c) * &f);
                r.set(i, c, v);
            }
            for c in 0..a.rows {
                let v = t.get(i, c) - &(t.get(pr, c) * &f);
                t.set(i, c, v);
            }
        }
        pivots.push(pc);
        pr += 1;
        if pr == a.rows {
            break;
        }
    }
    Rref { r, t, pivots }
}

pub fn rank(a: &RatMatrix) -> usize {
    rref(a).rank()
}

/// Basis of the right null space, one vector per free column, in free-column
/// order. Each has a `1` in its free coordinate.
pub fn kernel(a: &RatMatrix) -> Vec<Vec<Rat>> {
    let e = rref(a);
    let mut is_pivot = vec![false; a.cols];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..a.cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); a.cols];
        v[free] = Rat::one();
        for (row, &pc) in e.pivots.iter().enumerate() {
            v[pc] = -e.r.get(row, free).clone();
        }
        basis.push(v);
    }
    basis
}

/// Right null space basis for a matrix given as sparse rows of
/// `(column, value)` pairs (unsorted, possibly with repeats, which are
/// summed). Agrees with `kernel` on the equivalent dense matrix but only ever
/// touches nonzero entries, which matters for the tall, extremely sparse
/// systems that word-indexed linear algebra produces.
pub fn kernel_from_sparse_rows(rows: &[Vec<(usize, Rat)>], ncols: usize) -> Vec<Vec<Rat>> {
    use std::collections::BTreeMap;
    type SRow = BTreeMap<usize, Rat>;
    fn axpy(dst: &mut SRow, c: &Rat, src: &SRow) {
        for (&j, v) in src {
            let e = dst.entry(j).or_insert_with(Rat::zero);
            *e += c * v;
            if e.is_zero() {
                dst.remove(&j);
            }
        }
    }
    // Sparse reduced row echelon form of the row space, keyed by pivot
    // column: every stored row has a unit pivot and zero entries at all
    // other pivots.
    let mut echelon: BTreeMap<usize, SRow> = BTreeMap::new();
    for raw in rows {
        let mut row: SRow = BTreeMap::new();
        for (c, v) in raw {
            assert!(*c < ncols, "column index out of range");
            let e = row.entry(*c).or_insert_with(Rat::zero);
            *e += v;
            if e.is_zero() {
                row.remove(c);
            }
        }
        // Clearing a pivot column only introduces entries at non-pivot
        // columns (stored rows are fully reduced), so one sweep suffices.
        let hit: Vec<usize> = row.keys().copied().filter(|c| echelon.contains_key(c)).collect();
        for p in hit {
            if let Some(c) = row.get(&p).cloned() {
                axpy(&mut row, &-c, &echelon[&p]);
            }
        }
        let Some((&pivot, lead)) = row.iter().next() else {
            continue;
        };
        let inv = lead.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        for er in echelon.values_mut() {
            if let Some(c) = er.get(&pivot).cloned() {
                axpy(er, &-c, &row);
            }
        }
        echelon.insert(pivot, row);
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if echelon.contains_key(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (&p, er) in &echelon {
            if let Some(c) = er.get(&free) {
                v[p] = -c.clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// General solution of `A x = b`.
pub struct Solution {
    pub particular: Vec<Rat>,
    pub nullspace: Vec<Vec<Rat>>,
}

/// Solves `A x = b` exactly; `None` when inconsistent.
pub fn solve(a: &RatMatrix, b: &[Rat]) -> Option<Solution> {
    assert_eq!(b.len(), a.rows);
    let e = rref(a);
    let tb = e.t.mul_vec(b);
    for i in e.rank()..a.rows {
        if !tb[i].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); a.cols];
    for (row, &pc) in e.pivots.iter().enumerate() {
        x[pc] = tb[row].clone();
    }
    Some(Solution {
        particular: x,
        nullspace: kernel(a),
    })
}

/// `v^T S v` for symmetric `S`.
pub fn quad_form(s: &RatMatrix, v: &[Rat]) -> Rat {
    let sv = s.mul_vec(v);
    v.iter().zip(&sv).map(|(a, b)| a * b).sum()
}

/// Outcome of the exact semidefiniteness test.
pub enum LdltOutcome {
    /// `S = sum d_p u_p u_p^T` with every `d_p > 0`; the number of terms is
    /// the rank of `S`.
    Psd { terms: Vec<(Rat, Vec<Rat>)> },
    /// An explicit `v` with `v^T S v < 0`.
    NotPsd { witness: Vec<Rat> },
}

/// Pivoted LDL^T on a symmetric matrix: decides positive semidefiniteness
/// exactly and certifies either answer.
///
/// Pivots greedily on the largest remaining diagonal. A negative diagonal in
/// any Schur complement, or a nonzero off-diagonal entry once all active
/// diagonals vanish, yields a negative-value witness: the violating vector of
/// the Schur complement is lifted back through the recorded pivot columns.
pub fn ldlt_psd(s: &RatMatrix) -> LdltOutcome {
    assert!(s.is_symmetric(), "semidefiniteness needs a symmetric matrix");
    let n = s.nrows();
    let mut cur = s.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut terms: Vec<(Rat, Vec<Rat>)> = Vec::new();
    let lift = |terms: &[(Rat, Vec<Rat>)], mut v: Vec<Rat>, pivot_order: &[usize]| -> Vec<Rat> {
        // Zero out u_j . v for each recorded pivot, latest first; u_j has a 1
        // at its own pivot coordinate, which is untouched by later steps.
        for (j, &p) in pivot_order.iter().enumerate().rev() {
            let u = &terms[j].1;
            let mut dot = Rat::zero();
            for (q, uq) in u.iter().enumerate() {
                if q != p {
                    dot += uq * &v[q];
                }
            }
            v[p] = -dot;
        }
        v
    };
    let mut pivot_order: Vec<usize> = Vec::new();
    loop {
        if active.is_empty() {
            return LdltOutcome::Psd { terms };
        }
        // Tie-breaks pick the smallest index, so runs are deterministic.
        let neg = *active
            .iter()
            .min_by(|&&a, &&b| cur.get(a, a).cmp(cur.get(b, b)).then(a.cmp(&b)))
            .unwrap();
        if cur.get(neg, neg).is_negative() {
            let mut v = vec![Rat::zero(); n];
            v[neg] = Rat::one();
            let w = lift(&terms, v, &pivot_order);
            debug_assert!(quad_form(s, &w).is_negative());
            return LdltOutcome::NotPsd { witness: w };
        }
        let p = *active
            .iter()
            .max_by(|&&a, &&b| cur.get(a, a).cmp(cur.get(b, b)).then(b.cmp(&a)))
            .unwrap();
        let dmax = cur.get(p, p).clone();
        if dmax.is_zero() {
            // Every active diagonal is zero; any surviving off-diagonal entry
            // defeats semidefiniteness.
            for (ai, &i) in active.iter().enumerate() {
                for &j in &active[ai + 1..] {
                    let sij = cur.get(i, j);
                    if !sij.is_zero() {
                        let mut v = vec![Rat::zero(); n];
                        v[i] = Rat::one();
                        v[j] = -sij.recip();
                        let w = lift(&terms, v, &pivot_order);
                        debug_assert!(quad_form(s, &w).is_negative());
                        return LdltOutcome::NotPsd { witness: w };
                    }
                }
            }
            return LdltOutcome::Psd { terms };
        }
        // Pivot: record d and the unit-diagonal column, then form the Schur
        // complement on the remaining active block.
        let d = dmax;
        let mut u = vec![Rat::zero(); n];
        u[p] = Rat::one();
        for &q in &active {
            if q != p {
                u[q] = cur.get(q, p) / &d;
            }
        }
        active.retain(|&q| q != p);
        for &q in &active {
            for &r in &active {
                let v = cur.get(q, r) - &(&d * &u[q] * &u[r]);
                cur.set(q, r, v);
            }
        }
        terms.push((d, u));
        pivot_order.push(p);
    }
}

/// Monic characteristic polynomial `det(t I - A)`, by the exact
/// trace-recursion method.
pub fn char_poly(a: &RatMatrix) -> UniPoly {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut m = RatMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A (M_{k-1} + c_{n-k+1} I); c_{n-k} = -tr(M_k)/k.
        for i in 0..n {
            let v = m.get(i, i) + &coeffs[n - k + 1];
            m.set(i, i, v);
        }
        m = a.mul(&m);
        coeffs[n - k] = -(m.trace() / Rat::from_integer(BigInt::from(k)));
    }
    UniPoly::from_coeffs(coeffs)
}

/// Exact determinant, read off the characteristic polynomial.
pub fn det(a: &RatMatrix) -> Rat {
    let n = a.rows;
    let c0 = char_poly(a).coeff(0);
    if n % 2 == 0 {
        c0
    } else {
        -c0
    }
}

/// Dense matrix over Q[t], row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<UniPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![UniPoly::zero(); rows * cols],
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &UniPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: UniPoly) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul_vec(&self, v: &[UniPoly]) -> Vec<UniPoly> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = UniPoly::zero();
                for j in 0..self.cols {
                    acc = &acc + &(self.get(i, j) * &v[j]);
                }
                acc
            })
            .collect()
    }
}

/// Deterministic polynomial-vector normal form: divides out the common monic
/// polynomial factor, clears rational denominators, divides by the integer
/// content, and fixes the sign of the first nonzero entry's leading
/// coefficient positive.
fn normalize_poly_vec(mut v: Vec<UniPoly>) -> Vec<UniPoly> {
    let mut g = UniPoly::zero();
    for p in &v {
        g = if g.is_zero() { p.clone() } else { g.gcd(p) };
    }
    if g.is_zero() {
        return v;
    }
    for p in &mut v {
        *p = p.exact_div(&g).expect("gcd divides");
    }
    let mut lcm = BigInt::one();
    for p in &v {
        for c in p.coeffs() {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
    }
    let mut content = BigInt::zero();
    for p in &v {
        for c in p.coeffs() {
            let int = c.numer() * (&lcm / c.denom());
            content = num_integer::gcd(content, int);
        }
    }
    let scale = Rat::new(lcm, content);
    for p in &mut v {
        *p = p.scale(&scale);
    }
    let flip = v
        .iter()
        .find(|p| !p.is_zero())
        .map_or(false, |p| p.leading_coeff().unwrap().is_negative());
    if flip {
        for p in &mut v {
            *p = -p.clone();
        }
    }
    v
}

/// Kernel basis of a matrix over Q[t]: elimination over the fraction field,
/// denominators cleared and content removed, each vector re-verified by an
/// exact multiplication. One basis vector per free column.
pub fn param_kernel(m: &PolyMatrix) -> Vec<Vec<UniPoly>> {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<Vec<RatFun>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| RatFun::from_poly(m.get(i, j).clone()))
                .collect()
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut pr = 0usize;
    for pc in 0..cols {
        let Some(sel) = (pr..rows).find(|&i| !a[i][pc].is_zero()) else {
            continue;
        };
        a.swap(sel, pr);
        let inv = a[pr][pc].recip();
        for c in 0..cols {
            a[pr][c] = &a[pr][c] * &inv;
        }
        for i in 0..rows {
            if i == pr || a[i][pc].is_zero() {
                continue;
            }
            let f = a[i][pc].clone();
            for c in 0..cols {
                a[i][c] = &a[i][c] - &(&a[pr][c] * &f);
            }
        }
        pivots.push(pc);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![RatFun::zero(); cols];
        v[free] = RatFun::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[row][free];
        }
        // Clear denominators across the vector.
        let mut den = UniPoly::one();
        for f in &v {
            let extra = f.den().exact_div(&den.gcd(f.den())).expect("gcd divides");
            den = &den * &extra;
        }
        let cleared: Vec<UniPoly> = v
            .iter()
            .map(|f| {
                let scale = den.exact_div(f.den()).expect("den is lcm");
                f.num() * &scale
            })
            .collect();
        let normd = normalize_poly_vec(cleared);
        let check = m.mul_vec(&normd);
        assert!(
            check.iter().all(UniPoly::is_zero),
            "parametric kernel vector failed verification"
        );
        basis.push(normd);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn mat(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rint(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_rank_transform() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let e = rref(&a);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.t.mul(&a), e.r);
        // Reduced form: pivot entries are 1 with zeros above and below.
        assert_eq!(e.r.get(0, 0), &rint(1));
        assert_eq!(e.r.get(1, 0), &rint(0));
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&a);
        assert_eq!(
            k,
            vec![
                vec![rint(-2), rint(1), rint(0)],
                vec![rint(-3), rint(0), rint(1)],
            ]
        );
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = mat(&[&[1, 1], &[1, -1], &[2, 0]]);
        let sol = solve(&a, &[rint(3), rint(1), rint(4)]).unwrap();
        assert_eq!(sol.particular, vec![rint(2), rint(1)]);
        assert!(sol.nullspace.is_empty());
        assert!(solve(&a, &[rint(3), rint(1), rint(5)]).is_none());
    }

    #[test]
    fn psd_rank_one() {
        let s = mat(&[&[1, 1], &[1, 1]]);
        match ldlt_psd(&s) {
            LdltOutcome::Psd { terms } => {
                assert_eq!(terms.len(), 1);
                assert_eq!(terms[0].0, rint(1));
                assert_eq!(terms[0].1, vec![rint(1), rint(1)]);
            }
            LdltOutcome::NotPsd { .. } => panic!("matrix is psd"),
        }
    }

    #[test]
    fn not_psd_zero_diagonal() {
        // Quadratic form 2 x y: witness (1, -1) with value -2.
        let s = mat(&[&[0, 1], &[1, 0]]);
        match ldlt_psd(&s) {
            LdltOutcome::NotPsd { witness } => {
                assert_eq!(witness, vec![rint(1), rint(-1)]);
                assert_eq!(quad_form(&s, &witness), rint(-2));
            }
            LdltOutcome::Psd { .. } => panic!("matrix is indefinite"),
        }
    }

    #[test]
    fn not_psd_negative_schur() {
        let s = mat(&[&[1, 2], &[2, 1]]);
        match ldlt_psd(&s) {
            LdltOutcome::NotPsd { witness } => {
                assert_eq!(witness, vec![rint(-2), rint(1)]);
                assert_eq!(quad_form(&s, &witness), rint(-3));
            }
            LdltOutcome::Psd { .. } => panic!("matrix is indefinite"),
        }
    }

    #[test]
    fn psd_reconstructs_matrix() {
        let s = mat(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        match ldlt_psd(&s) {
            LdltOutcome::Psd { terms } => {
                assert_eq!(terms.len(), 3); // strictly positive definite
                let mut acc = RatMatrix::zeros(3, 3);
                for (d, u) in &terms {
                    assert!(d.is_positive());
                    let outer =
                        RatMatrix::from_fn(3, 3, |i, j| d * &u[i] * &u[j]);
                    acc = acc.add(&outer);
                }
                assert_eq!(acc, s);
            }
            LdltOutcome::NotPsd { .. } => panic!("matrix is pd"),
        }
    }

    #[test]
    fn char_poly_and_det() {
        let a = mat(&[&[2, 1], &[0, 3]]);
        let p = char_poly(&a);
        assert_eq!(
            p.coeffs(),
            &[rint(6), rint(-5), rint(1)] // (t-2)(t-3)
        );
        assert_eq!(det(&a), rint(6));
        let b = mat(&[&[0, 1, 0], &[0, 0, 1], &[2, -1, 3]]);
        assert_eq!(det(&b), rint(2));
    }

    #[test]
    fn param_kernel_shift_structure() {
        // [t, -1] has kernel spanned by (1, t).
        let mut m = PolyMatrix::zeros(1, 2);
        m.set(0, 0, UniPoly::t());
        m.set(0, 1, UniPoly::constant(rint(-1)));
        let k = param_kernel(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![UniPoly::one(), UniPoly::t()]);

        // Two-step shift: kernel (1, t, t^2).
        let mut m2 = PolyMatrix::zeros(2, 3);
        m2.set(0, 0, UniPoly::t());
        m2.set(0, 1, UniPoly::constant(rint(-1)));
        m2.set(1, 1, UniPoly::t());
        m2.set(1, 2, UniPoly::constant(rint(-1)));
        let k2 = param_kernel(&m2);
        assert_eq!(k2.len(), 1);
        assert_eq!(
            k2[0],
            vec![
                UniPoly::one(),
                UniPoly::t(),
                UniPoly::monomial(rint(1), 2)
            ]
        );
    }

    #[test]
    fn param_kernel_normalization() {
        // Rows proportional over Q(t): kernel is 2-dimensional.
        let mut m = PolyMatrix::zeros(2, 3);
        let t = UniPoly::t();
        m.set(0, 0, t.clone());
        m.set(0, 1, UniPoly::one());
        m.set(0, 2, UniPoly::zero());
        m.set(1, 0, &t * &t);
        m.set(1, 1, t.clone());
        m.set(1, 2, UniPoly::zero());
        let k = param_kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(UniPoly::is_zero));
        }
        assert_eq!(k[0], vec![UniPoly::one(), -UniPoly::t(), UniPoly::zero()]);
    }

    #[test]
    fn quad_form_values() {
        let s = mat(&[&[1, 0], &[0, -1]]);
        assert_eq!(quad_form(&s, &[rat(1, 2), rint(1)]), rat(-3, 4));
    }

    #[test]
    fn sparse_kernel_matches_dense() {
        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]],
            vec![vec![0, 0, 0], vec![1, 0, -1]],
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, -1]],
            vec![vec![3]],
            vec![vec![0, 0, 0, 0]],
        ];
        for rows in cases {
            let ncols = rows[0].len();
            let dense = RatMatrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|&v| rint(v)).collect())
                    .collect(),
            );
            let sparse: Vec<Vec<(usize, Rat)>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(j, &v)| (j, rint(v)))
                        .collect()
                })
                .collect();
            assert_eq!(kernel_from_sparse_rows(&sparse, ncols), kernel(&dense));
        }
    }

    #[test]
    fn sparse_kernel_sums_repeated_entries() {
        // Row 0 holds x0 + x0 - 2*x0 = 0 (vanishes); row 1 forces x0 = x1.
        let rows = vec![
            vec![(0, rint(1)), (0, rint(1)), (0, rint(-2))],
            vec![(0, rint(1)), (1, rint(-1))],
        ];
        let k = kernel_from_sparse_rows(&rows, 2);
        assert_eq!(k, vec![vec![rint(1), rint(1)]]);
    }
}
