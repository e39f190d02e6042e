//! Sparse multivariate polynomials and multihomogeneous forms.

use std::collections::BTreeMap;

use crate::arith::Field;
use crate::error::{Error, Result};

/// Sparse polynomial in `nvars` variables; the map never stores zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<E> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, E>,
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, nvars: usize, c: E) -> Self {
        Self::monomial(field, vec![0; nvars], c)
    }

    pub fn monomial<F: Field<Elem = E>>(field: &F, exponents: Vec<u32>, c: E) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(field, exponents, c);
        p
    }

    pub fn var<F: Field<Elem = E>>(field: &F, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(field, e, field.one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, E> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff<F: Field<Elem = E>>(&self, field: &F, exponents: &[u32]) -> E {
        self.terms.get(exponents).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, field: &F, exponents: Vec<u32>, c: E) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(existing) => {
                let s = field.add(existing, &c);
                if field.is_zero(&s) {
                    self.terms.remove(&exponents);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(field, e.clone(), c.clone());
        }
        out
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.add(field, &other.scale(field, &field.neg(&field.one())))
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, s: &E) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(field, e.clone(), field.mul(c, s));
        }
        out
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(field, e, field.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow<F: Field<Elem = E>>(&self, field: &F, k: u32) -> Self {
        (0..k).fold(Self::constant(field, self.nvars, field.one()), |acc, _| acc.mul(field, self))
    }

    pub fn derivative<F: Field<Elem = E>>(&self, field: &F, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(field, e2, field.mul(c, &field.from_i64(e[var] as i64)));
        }
        out
    }

    pub fn eval<F: Field<Elem = E>>(&self, field: &F, point: &[E]) -> E {
        assert_eq!(point.len(), self.nvars);
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = field.mul(&t, &field.pow(x, k));
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Substitutes each variable by a polynomial in a common target ring.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, images: &[Poly<E>]) -> Poly<E> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(field, target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = t.mul(field, &img.pow(field, k));
                }
            }
            out = out.add(field, &t);
        }
        out
    }

    pub fn map_coeffs<T: Clone + PartialEq, G: Field<Elem = T>>(
        &self,
        target: &G,
        mut f: impl FnMut(&E) -> Result<T>,
    ) -> Result<Poly<T>> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(target, e.clone(), f(c)?);
        }
        Ok(out)
    }
}

/// A polynomial in several groups of variables, homogeneous of a fixed degree
/// in each group. Variable `i` of group `g` has global index `g * d + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiForm<E> {
    group_dims: Vec<usize>,
    multidegree: Vec<u32>,
    poly: Poly<E>,
}

impl<E: Clone + PartialEq> MultiForm<E> {
    /// Validates that every term has the declared multidegree.
    pub fn new(group_dims: Vec<usize>, multidegree: Vec<u32>, poly: Poly<E>) -> Result<Self> {
        if group_dims.len() != multidegree.len() || poly.nvars() != group_dims.iter().sum::<usize>() {
            return Err(Error::WrongDegree);
        }
        let form = Self { group_dims, multidegree, poly };
        for e in form.poly.terms.keys() {
            if form.degrees_of(e) != form.multidegree {
                return Err(Error::WrongDegree);
            }
        }
        Ok(form)
    }

    fn degrees_of(&self, exponents: &[u32]) -> Vec<u32> {
        let mut offset = 0;
        self.group_dims
            .iter()
            .map(|&g| {
                let s = exponents[offset..offset + g].iter().sum();
                offset += g;
                s
            })
            .collect()
    }

    pub fn group_dims(&self) -> &[usize] {
        &self.group_dims
    }

    pub fn multidegree(&self) -> &[u32] {
        &self.multidegree
    }

    pub fn poly(&self) -> &Poly<E> {
        &self.poly
    }

    pub fn group_offset(&self, g: usize) -> usize {
        self.group_dims[..g].iter().sum()
    }

    /// Evaluates at one coordinate vector per group.
    pub fn eval<F: Field<Elem = E>>(&self, field: &F, coords: &[Vec<E>]) -> E {
        let flat: Vec<E> = coords.iter().flatten().cloned().collect();
        self.poly.eval(field, &flat)
    }
}

/// All permutations of `0..n` with their signs, in lexicographic order.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                rec(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Determinant of a square matrix of polynomials by permutation expansion.
/// Division-free, so it is exact over any coefficient field.
pub fn poly_determinant<F: Field>(field: &F, m: &[Vec<Poly<F::Elem>>]) -> Poly<F::Elem> {
    let n = m.len();
    let nvars = m.first().and_then(|r| r.first()).map_or(0, |p| p.nvars());
    let mut det = Poly::zero(nvars);
    for (perm, sign) in signed_permutations(n) {
        let mut term = Poly::constant(field, nvars, field.from_i64(sign));
        for (row, &col) in perm.iter().enumerate() {
            term = term.mul(field, &m[row][col]);
            if term.is_zero() {
                break;
            }
        }
        det = det.add(field, &term);
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, Rational, Rationals};

    fn x(i: usize) -> Poly<Rational> {
        Poly::var(&Rationals, 3, i)
    }

    #[test]
    fn product_and_derivative() {
        let f = &Rationals;
        let p = x(0).add(f, &x(1)).pow(f, 2); // x0^2 + 2 x0 x1 + x1^2
        assert_eq!(p.coeff(f, &[1, 1, 0]), q(2));
        let dp = p.derivative(f, 0); // 2 x0 + 2 x1
        assert_eq!(dp.coeff(f, &[1, 0, 0]), q(2));
        assert_eq!(dp.coeff(f, &[0, 1, 0]), q(2));
        assert_eq!(p.eval(f, &[q(1), q(2), q(5)]), q(9));
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = &Rationals;
        assert!(x(0).sub(f, &x(0)).is_zero());
    }

    #[test]
    fn determinant_of_diagonal_linear_matrix() {
        let f = &Rationals;
        let z = Poly::zero(3);
        let m = vec![
            vec![x(0), z.clone(), z.clone()],
            vec![z.clone(), x(1), z.clone()],
            vec![z.clone(), z, x(2)],
        ];
        let det = poly_determinant(f, &m);
        assert_eq!(det, Poly::monomial(f, vec![1, 1, 1], q(1)));
    }

    #[test]
    fn permutation_signs() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|p| p.1).sum::<i64>(), 0);
        assert_eq!(perms[0], (vec![0, 1, 2], 1));
        assert_eq!(perms[1], (vec![0, 2, 1], -1));
    }

    #[test]
    fn multiform_rejects_wrong_degree() {
        let f = &Rationals;
        let p = x(0).mul(f, &x(1));
        assert!(MultiForm::new(vec![3], vec![2], p.clone()).is_ok());
        assert_eq!(MultiForm::new(vec![1, 2], vec![2, 0], p), Err(Error::WrongDegree));
    }

    #[test]
    fn compose_substitutes() {
        let f = &Rationals;
        // x0*x1 with x0 -> x0 + x2, x1 -> x1
        let p = x(0).mul(f, &x(1));
        let c = p.compose(f, &[x(0).add(f, &x(2)), x(1), x(2)]);
        assert_eq!(c, x(0).mul(f, &x(1)).add(f, &x(2).mul(f, &x(1))));
    }
}
