//! The complete-intersection model `Y_η`, its determinantal projections, and
//! finite-field smoothness evidence.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{kernel, rref, Field, Matrix, PrimeField, Rational, Rationals, Subspace};
use crate::error::{Error, Result};
use crate::poly::{poly_determinant, MultiForm, Poly};
use crate::states::{QTensor, Tensor};

/// Upper bound on the number of fibres visited by one point enumeration.
pub const MAX_FIBRES: usize = 4_000_000;

/// `Y_η`: the common zero locus of `V_η` read as multilinear forms on
/// `P(V₁)×⋯×P(V_{n−1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyModel<E> {
    n: usize,
    d: usize,
    /// `d × d^{n−1}`, in reduced row-echelon form.
    basis: Matrix<E>,
    source_hash: String,
    source: Option<Tensor<E>>,
}

impl<E: Clone + PartialEq> VarietyModel<E> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of projective factors, `n − 1`.
    pub fn groups(&self) -> usize {
        self.n - 1
    }

    pub fn basis(&self) -> &Matrix<E> {
        &self.basis
    }

    pub fn source_hash(&self) -> &str {
        &self.source_hash
    }

    /// The defining forms as a tensor whose last factor indexes the forms.
    pub fn defining_tensor(&self) -> Tensor<E> {
        let rows = self.basis.rows();
        let cols = self.basis.cols();
        let mut coeffs = Vec::with_capacity(rows * cols);
        for r in 0..cols {
            for k in 0..rows {
                coeffs.push(self.basis.get(k, r).clone());
            }
        }
        Tensor::new(self.n, self.d, coeffs).expect("model shape is consistent")
    }

    pub fn forms<F: Field<Elem = E>>(&self, field: &F) -> Vec<MultiForm<E>> {
        let groups = self.groups();
        let nvars = groups * self.d;
        (0..self.basis.rows())
            .map(|k| {
                let mut poly = Poly::zero(nvars);
                for (flat, c) in self.basis.row(k).iter().enumerate() {
                    poly.add_term(field, self.monomial_exponents(flat), c.clone());
                }
                MultiForm::new(vec![self.d; groups], vec![1; groups], poly).expect("multilinear")
            })
            .collect()
    }

    fn monomial_exponents(&self, mut flat: usize) -> Vec<u32> {
        let groups = self.groups();
        let mut e = vec![0; groups * self.d];
        for g in (0..groups).rev() {
            e[g * self.d + flat % self.d] = 1;
            flat /= self.d;
        }
        e
    }

    /// Values of all defining forms at one coordinate vector per group.
    pub fn eval_forms<F: Field<Elem = E>>(&self, field: &F, coords: &[Vec<E>]) -> Vec<E> {
        let eta = self.defining_tensor();
        let vectors: Vec<(usize, &[E])> = coords.iter().enumerate().map(|(g, v)| (g, &v[..])).collect();
        eta.contract(field, &vectors)
    }

    /// Jacobian of the defining forms: `d × (n−1)d`, column `g·d + i` is `∂/∂x⁽ᵍ⁾ᵢ`.
    pub fn jacobian<F: Field<Elem = E>>(&self, field: &F, coords: &[Vec<E>]) -> Matrix<E> {
        let eta = self.defining_tensor();
        let groups = self.groups();
        let forms = self.basis.rows();
        let mut jac = Matrix::zeros(field, forms, groups * self.d);
        for g in 0..groups {
            let vectors: Vec<(usize, &[E])> =
                coords.iter().enumerate().filter(|&(h, _)| h != g).map(|(h, v)| (h, &v[..])).collect();
            // remaining factors: group g, then the form index
            let partials = eta.contract(field, &vectors);
            for i in 0..self.d {
                for k in 0..forms {
                    jac.set(k, g * self.d + i, partials[i * self.d + k].clone());
                }
            }
        }
        jac
    }
}

impl VarietyModel<Rational> {
    /// The model of the state reduced mod `p`. Fails with `BadReduction` when a
    /// coefficient has `p` in its denominator or `dim V_η` drops below `d`.
    pub fn reduce(&self, field: &PrimeField) -> Result<VarietyModel<u32>> {
        let bad = Error::BadReduction { p: field.p() };
        match &self.source {
            Some(t) => model_from_tensor(field, &t.reduce_mod_p(field)?, self.source_hash.clone()).map_err(|e| match e {
                Error::RankDeficient(_) => bad,
                e => e,
            }),
            None => {
                let basis = self.basis.try_map(|c| field.from_rational(c))?;
                if rref(field, &basis).rank != self.d {
                    return Err(bad);
                }
                Ok(VarietyModel { n: self.n, d: self.d, basis, source_hash: self.source_hash.clone(), source: None })
            }
        }
    }
}

/// Builds the model of a state over any field.
pub fn model_from_tensor<F: Field>(field: &F, t: &Tensor<F::Elem>, source_hash: String) -> Result<VarietyModel<F::Elem>> {
    let v = t.v_eta(field);
    if v.dim() != t.d() {
        return Err(Error::RankDeficient(v.dim()));
    }
    Ok(VarietyModel { n: t.n(), d: t.d(), basis: v.basis().clone(), source_hash, source: Some(t.clone()) })
}

/// The `d` multilinear forms spanning `V_η`, in canonical RREF order.
pub fn equations_of_y(t: &QTensor) -> Result<VarietyModel<Rational>> {
    model_from_tensor(&Rationals, t, t.content_hash())
}

/// Eliminates one group of variables by the determinant of the matrix of
/// partial derivatives with respect to it.
///
/// For 3×3×3 states `kept_axes = [a]` gives the plane cubic in group `a`; for
/// 2×2×2×2 states `kept_axes = [a, b]` gives the bidegree-(2,2) form in groups
/// `a < b`.
pub fn det_linear_matrix<F: Field>(
    field: &F,
    model: &VarietyModel<F::Elem>,
    kept_axes: &[usize],
) -> Result<MultiForm<F::Elem>> {
    let (n, d) = (model.n, model.d);
    let valid = match (n, d) {
        (3, 3) => kept_axes.len() == 1 && kept_axes[0] < 2,
        (4, 2) => kept_axes.len() == 2 && kept_axes[0] < kept_axes[1] && kept_axes[1] < 3,
        _ => return Err(Error::UnsupportedFormat { n, d }),
    };
    if !valid {
        return Err(Error::InvalidAxes(kept_axes.to_vec()));
    }
    let groups = model.groups();
    let eliminated = (0..groups).find(|g| !kept_axes.contains(g)).expect("one group eliminated");
    let eta = model.defining_tensor();
    let nvars = kept_axes.len() * d;
    let entries: Vec<Vec<Poly<F::Elem>>> = (0..d)
        .map(|k| {
            let form_unit = unit(field, d, k);
            (0..d)
                .map(|j| {
                    let var_unit = unit(field, d, j);
                    // remaining factors are the kept groups, in increasing order
                    let coeffs = eta.contract(field, &[(eliminated, &var_unit), (groups, &form_unit)]);
                    multilinear_poly(field, &coeffs, kept_axes.len(), d, nvars)
                })
                .collect()
        })
        .collect();
    let det = poly_determinant(field, &entries);
    let degree = if kept_axes.len() == 1 { vec![3] } else { vec![2, 2] };
    MultiForm::new(vec![d; kept_axes.len()], degree, det)
}

fn unit<F: Field>(field: &F, d: usize, k: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); d];
    v[k] = field.one();
    v
}

fn multilinear_poly<F: Field>(field: &F, coeffs: &[F::Elem], groups: usize, d: usize, nvars: usize) -> Poly<F::Elem> {
    let mut poly = Poly::zero(nvars);
    for (mut flat, c) in coeffs.iter().enumerate() {
        let mut e = vec![0; nvars];
        for g in (0..groups).rev() {
            e[g * d + flat % d] = 1;
            flat /= d;
        }
        poly.add_term(field, e, c.clone());
    }
    poly
}

/// An `F_p`-point of `P^{d−1}×⋯×P^{d−1}`; each tuple has first nonzero entry 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ProjPoint {
    pub p: u32,
    pub coords: Vec<Vec<u32>>,
}

/// Scales a nonzero vector so that its first nonzero entry is 1.
pub fn normalize(field: &PrimeField, v: &[u32]) -> Option<Vec<u32>> {
    let lead = v.iter().find(|&&x| x != 0)?;
    let inv = field.inv(lead)?;
    Some(v.iter().map(|x| field.mul(x, &inv)).collect())
}

/// All normalized representatives of `P^{d−1}(F_p)`, in lexicographic order.
pub fn projective_points(field: &PrimeField, d: usize) -> Vec<Vec<u32>> {
    let p = field.p();
    let mut out = Vec::new();
    for lead in (0..d).rev() {
        let tail = d - lead - 1;
        let count = (p as usize).pow(tail as u32);
        for mut code in 0..count {
            let mut v = vec![0; d];
            v[lead] = 1;
            for slot in v[lead + 1..].iter_mut().rev() {
                *slot = (code % p as usize) as u32;
                code /= p as usize;
            }
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}

fn points_of_subspace(field: &PrimeField, space: &Subspace<u32>) -> Vec<Vec<u32>> {
    let m = space.dim();
    if m == 0 {
        return Vec::new();
    }
    let d = space.ambient_dim();
    projective_points(field, m)
        .into_iter()
        .map(|c| {
            let mut v = vec![0; d];
            for (coef, r) in c.iter().zip(0..m) {
                if *coef == 0 {
                    continue;
                }
                for (slot, b) in v.iter_mut().zip(space.basis().row(r)) {
                    *slot = field.add(slot, &field.mul(coef, b));
                }
            }
            normalize(field, &v).expect("nonzero combination of a basis")
        })
        .collect()
}

/// Every `F_p`-point of the model, sorted and without duplicates.
///
/// Iterates over the first `n−2` projective factors and solves the remaining
/// linear system in the last factor exactly.
pub fn enumerate_points_fp(field: &PrimeField, model: &VarietyModel<u32>) -> Result<Vec<ProjPoint>> {
    let groups = model.groups();
    let d = model.d;
    let base = projective_points(field, d);
    let fibres = base.len().checked_pow((groups - 1) as u32).filter(|&f| f <= MAX_FIBRES);
    let Some(fibres) = fibres else {
        return Err(Error::UnsupportedFormat { n: model.n, d });
    };
    let eta = model.defining_tensor();
    let mut out = Vec::new();
    for mut code in 0..fibres {
        let mut prefix = Vec::with_capacity(groups);
        for _ in 0..groups - 1 {
            prefix.push(base[code % base.len()].clone());
            code /= base.len();
        }
        prefix.reverse();
        let vectors: Vec<(usize, &[u32])> = prefix.iter().enumerate().map(|(g, v)| (g, &v[..])).collect();
        // rows: last-group variable, columns: form index
        let linear = Matrix::from_vec(d, model.basis.rows(), eta.contract(field, &vectors));
        for last in points_of_subspace(field, &kernel(field, &linear.transpose())) {
            let mut coords = prefix.clone();
            coords.push(last);
            out.push(ProjPoint { p: field.p(), coords });
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Reduces the model modulo `p` and enumerates its points.
pub fn enumerate_points(model: &VarietyModel<Rational>, p: u32) -> Result<Vec<ProjPoint>> {
    let field = PrimeField::new(p as u64)?;
    enumerate_points_fp(&field, &model.reduce(&field)?)
}

pub fn jacobian_rank_fp(field: &PrimeField, model: &VarietyModel<u32>, pt: &ProjPoint) -> Result<usize> {
    if pt.p != field.p() || pt.coords.len() != model.groups() || pt.coords.iter().any(|c| c.len() != model.d) {
        return Err(Error::NotOnVariety);
    }
    if model.eval_forms(field, &pt.coords).iter().any(|v| *v != 0) {
        return Err(Error::NotOnVariety);
    }
    Ok(rref(field, &model.jacobian(field, &pt.coords)).rank)
}

/// Rank over `F_p` of the Jacobian at a point of the model.
pub fn jacobian_rank_at(model: &VarietyModel<Rational>, pt: &ProjPoint) -> Result<usize> {
    let field = PrimeField::new(pt.p as u64)?;
    jacobian_rank_fp(&field, &model.reduce(&field)?, pt)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SmoothnessVerdict {
    SingularFound,
    NoSingularPointFound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SkipReason {
    /// A coefficient has `p` in its denominator, or `dim V_η` drops mod `p`.
    BadReduction,
    /// `p` divides a nonzero exact discriminant of a projection, or `p < 5`
    /// where those discriminants are defined.
    DiscriminantVanishesModP,
    /// Enumeration would exceed [`MAX_FIBRES`].
    TooLarge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkippedPrime {
    pub p: u32,
    pub reason: SkipReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularWitness {
    pub point: ProjPoint,
    pub jacobian_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSweep {
    pub p: u32,
    pub points: usize,
    /// First point (in sorted order) where the Jacobian drops rank.
    pub witness: Option<SingularWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub primes_tried: Vec<u32>,
    pub skipped: Vec<SkippedPrime>,
    pub sweeps: Vec<PrimeSweep>,
    pub verdict: SmoothnessVerdict,
}

impl SmoothnessReport {
    pub fn witnesses(&self) -> impl Iterator<Item = &SingularWitness> {
        self.sweeps.iter().filter_map(|s| s.witness.as_ref())
    }
}

/// Exhaustive Jacobian sweep at a single prime.
pub fn sweep_prime(model: &VarietyModel<Rational>, p: u32) -> Result<std::result::Result<PrimeSweep, SkipReason>> {
    let field = PrimeField::new(p as u64)?;
    let reduced = match model.reduce(&field) {
        Ok(m) => m,
        Err(Error::BadReduction { .. }) => return Ok(Err(SkipReason::BadReduction)),
        Err(e) => return Err(e),
    };
    let points = match enumerate_points_fp(&field, &reduced) {
        Ok(pts) => pts,
        Err(Error::UnsupportedFormat { .. }) => return Ok(Err(SkipReason::TooLarge)),
        Err(e) => return Err(e),
    };
    let mut witness = None;
    for pt in &points {
        let rank = jacobian_rank_fp(&field, &reduced, pt)?;
        if rank < model.d {
            witness = Some(SingularWitness { point: pt.clone(), jacobian_rank: rank });
            break;
        }
    }
    Ok(Ok(PrimeSweep { p, points: points.len(), witness }))
}

fn divides(p: u32, x: &Rational) -> bool {
    use num::Zero;
    let p = num::BigInt::from(p);
    (x.numer() % &p).is_zero() || (x.denom() % &p).is_zero()
}

/// Jacobian sweeps over the usable primes, processed in parallel and reported
/// in increasing order. A prime is unusable when the model has bad reduction
/// there or when it divides one of the given nonzero `discriminants`.
pub fn smoothness_witness_model(
    model: &VarietyModel<Rational>,
    primes: &[u32],
    discriminants: &[Rational],
) -> Result<SmoothnessReport> {
    use num::Zero;
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let nonzero: Vec<&Rational> = discriminants.iter().filter(|x| !x.is_zero()).collect();
    let results: Vec<Result<std::result::Result<PrimeSweep, SkipReason>>> = primes
        .par_iter()
        .map(|&p| {
            PrimeField::new(p as u64)?;
            if !nonzero.is_empty() && (p < 5 || nonzero.iter().any(|x| divides(p, x))) {
                return Ok(Err(SkipReason::DiscriminantVanishesModP));
            }
            sweep_prime(model, p)
        })
        .collect();
    let mut sweeps = Vec::new();
    let mut skipped = Vec::new();
    for (p, r) in primes.iter().zip(results) {
        match r? {
            Ok(s) => sweeps.push(s),
            Err(reason) => skipped.push(SkippedPrime { p: *p, reason }),
        }
    }
    if sweeps.is_empty() {
        return Err(Error::AllPrimesBad);
    }
    let verdict = if sweeps.iter().any(|s| s.witness.is_some()) {
        SmoothnessVerdict::SingularFound
    } else {
        SmoothnessVerdict::NoSingularPointFound
    };
    Ok(SmoothnessReport { primes_tried: primes, skipped, sweeps, verdict })
}

/// Jacobian sweep of `Y_η(F_p)`. For formats with a determinantal projection,
/// primes dividing its exact discriminant count as bad reduction.
pub fn smoothness_witness(t: &QTensor, primes: &[u32]) -> Result<SmoothnessReport> {
    let model = equations_of_y(t)?;
    let discriminants: Vec<Rational> = crate::invariants::projection_invariants(&model)?
        .into_iter()
        .map(|c| c.discriminant)
        .collect();
    smoothness_witness_model(&model, primes, &discriminants)
}

/// `|count − (p+1)| ≤ 2√p`, checked in integers.
pub fn hasse_window_holds(count: usize, p: u32) -> bool {
    let dev = count as i64 - p as i64 - 1;
    dev * dev <= 4 * p as i64
}

/// Expected number of sections `d^{n−1} − d`.
pub fn h0_check(n: u32, d: u64) -> Result<u64> {
    if n < 2 || d < 2 {
        return Err(Error::InvalidFormat(format!("need n, d >= 2, got n={n}, d={d}")));
    }
    d.checked_pow(n - 1)
        .map(|v| v - d)
        .ok_or_else(|| Error::InvalidFormat(format!("d^(n-1) overflows for n={n}, d={d}")))
}
