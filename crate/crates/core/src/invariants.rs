//! j-invariants of the projected curves, hyperdeterminants, the moduli
//! dimension count, and the orbit verdict built from them.

use std::collections::HashMap;
use std::sync::OnceLock;

use num::Zero;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::arith::{q, qf, rational_to_string, Field, Matrix, Rational, Rationals};
use crate::error::{Error, Result};
use crate::geometry::{
    det_linear_matrix, equations_of_y, smoothness_witness_model, SmoothnessReport, SmoothnessVerdict, VarietyModel,
};
use crate::poly::{signed_permutations, MultiForm, Poly};
use crate::states::QTensor;

/// Exponents of the cubic monomials in coefficient order.
pub const CUBIC_MONOMIALS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

/// `j = κ·S³/(64S³ − T²)`.
pub const KAPPA: i64 = 110_592;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryCubic {
    coeffs: [Rational; 10],
}

impl TernaryCubic {
    pub fn new(coeffs: [Rational; 10]) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(c: [i64; 10]) -> Self {
        Self { coeffs: c.map(q) }
    }

    pub fn coeffs(&self) -> &[Rational; 10] {
        &self.coeffs
    }

    pub fn from_poly(p: &Poly<Rational>) -> Result<Self> {
        if p.nvars() != 3 {
            return Err(Error::WrongDegree);
        }
        let mut coeffs: [Rational; 10] = Default::default();
        for (e, c) in p.terms() {
            let slot = CUBIC_MONOMIALS.iter().position(|m| m[..] == e[..]).ok_or(Error::WrongDegree)?;
            coeffs[slot] = c.clone();
        }
        Ok(Self { coeffs })
    }

    pub fn to_poly(&self) -> Poly<Rational> {
        let mut p = Poly::zero(3);
        for (m, c) in CUBIC_MONOMIALS.iter().zip(&self.coeffs) {
            p.add_term(&Rationals, m.to_vec(), c.clone());
        }
        p
    }

    /// `f(g·x)`.
    pub fn substitute(&self, g: &Matrix<Rational>) -> Self {
        let images: Vec<Poly<Rational>> = (0..3)
            .map(|i| {
                let mut p = Poly::zero(3);
                for j in 0..3 {
                    p = p.add(&Rationals, &Poly::var(&Rationals, 3, j).scale(&Rationals, g.get(i, j)));
                }
                p
            })
            .collect();
        Self::from_poly(&self.to_poly().compose(&Rationals, &images)).expect("substitution keeps degree 3")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuartic {
    /// `a·s⁴ + b·s³t + c·s²t² + d·st³ + e·t⁴`
    pub coeffs: [Rational; 5],
}

impl BinaryQuartic {
    pub fn from_ints(c: [i64; 5]) -> Self {
        Self { coeffs: c.map(q) }
    }

    fn from_poly(p: &Poly<Rational>) -> Self {
        let mut coeffs: [Rational; 5] = Default::default();
        for (e, c) in p.terms() {
            coeffs[e[1] as usize] = c.clone();
        }
        Self { coeffs }
    }
}

/// A j-invariant, or the marker for a vanishing discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JInvariant {
    Finite(Rational),
    Singular,
}

impl JInvariant {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            JInvariant::Finite(j) => Some(j),
            JInvariant::Singular => None,
        }
    }
}

impl Serialize for JInvariant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            JInvariant::Finite(j) => [j.numer().to_string(), j.denom().to_string()].serialize(s),
            JInvariant::Singular => s.serialize_str("singular"),
        }
    }
}

struct Aronhold {
    s: Poly<Rational>,
    t: Poly<Rational>,
}

/// Symbolic evaluation of a product of 3×3 brackets over the symmetric
/// coefficient tensor `F_{ijk} = c_m / multiplicity`.
fn bracket_contraction(symbols: usize, brackets: &[[usize; 3]]) -> Poly<Rational> {
    let monomial_of = |idx: &[usize]| -> usize {
        let mut e = [0u32; 3];
        for &i in idx {
            e[i] += 1;
        }
        CUBIC_MONOMIALS.iter().position(|m| *m == e).expect("cubic monomial")
    };
    let multiplicity = |m: usize| -> i64 {
        let e = CUBIC_MONOMIALS[m];
        let fact = |k: u32| (1..=k as i64).product::<i64>();
        6 / (fact(e[0]) * fact(e[1]) * fact(e[2]))
    };
    let perms = signed_permutations(3);
    let mut acc: HashMap<[u32; 10], Rational> = HashMap::new();
    let mut choice = vec![0usize; brackets.len()];
    loop {
        let mut sign = 1i64;
        let mut indices = vec![Vec::with_capacity(3); symbols];
        for (b, &c) in brackets.iter().zip(&choice) {
            let (perm, sg) = &perms[c];
            sign *= sg;
            for (slot, &sym) in b.iter().enumerate() {
                indices[sym].push(perm[slot]);
            }
        }
        let mut exps = [0u32; 10];
        let mut denom = 1i64;
        for idx in &indices {
            let m = monomial_of(idx);
            exps[m] += 1;
            denom *= multiplicity(m);
        }
        *acc.entry(exps).or_insert_with(Rational::zero) += qf(sign, denom);

        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < perms.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            break;
        }
    }
    let mut p = Poly::zero(10);
    for (e, c) in acc {
        p.add_term(&Rationals, e.to_vec(), c);
    }
    p
}

/// `x₁²x₂ − x₀³ − αx₀x₂² − βx₂³`
pub fn weierstrass_cubic(alpha: Rational, beta: Rational) -> TernaryCubic {
    let mut c: [Rational; 10] = Default::default();
    c[7] = q(1);
    c[0] = q(-1);
    c[5] = -alpha;
    c[9] = -beta;
    TernaryCubic::new(c)
}

fn aronhold() -> &'static Aronhold {
    static CELL: OnceLock<Aronhold> = OnceLock::new();
    CELL.get_or_init(|| {
        let s_raw = bracket_contraction(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
        let t_raw = bracket_contraction(6, &[[0, 1, 2], [0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5], [3, 4, 5]]);
        // Scale so that S(W(1,0)) = −1/3 and T(W(0,1)) = 4; then 64S³ − T² is
        // proportional to 4α³ + 27β² on Weierstrass cubics.
        let eval = |p: &Poly<Rational>, f: &TernaryCubic| p.eval(&Rationals, f.coeffs());
        let s0 = eval(&s_raw, &weierstrass_cubic(q(1), q(0)));
        let t0 = eval(&t_raw, &weierstrass_cubic(q(0), q(1)));
        assert!(!s0.is_zero() && !t0.is_zero(), "bracket invariants vanish identically");
        Aronhold {
            s: s_raw.scale(&Rationals, &(qf(-1, 3) / s0)),
            t: t_raw.scale(&Rationals, &(q(4) / t0)),
        }
    })
}

/// The degree-4 and degree-6 invariants `(S, T)` of a ternary cubic.
pub fn aronhold_invariants(f: &TernaryCubic) -> (Rational, Rational) {
    let a = aronhold();
    (a.s.eval(&Rationals, f.coeffs()), a.t.eval(&Rationals, f.coeffs()))
}

pub fn cubic_discriminant(s: &Rational, t: &Rational) -> Rational {
    q(64) * s * s * s - t * t
}

pub fn j_plane_cubic(f: &TernaryCubic) -> JInvariant {
    let (s, t) = aronhold_invariants(f);
    let disc = cubic_discriminant(&s, &t);
    if disc.is_zero() {
        JInvariant::Singular
    } else {
        JInvariant::Finite(q(KAPPA) * &s * &s * &s / disc)
    }
}

pub fn quartic_invariants(g: &BinaryQuartic) -> (Rational, Rational) {
    let [a, b, c, d, e] = &g.coeffs;
    let i = q(12) * a * e - q(3) * b * d + c * c;
    let j = q(72) * a * c * e + q(9) * b * c * d - q(27) * a * d * d - q(27) * b * b * e - q(2) * c * c * c;
    (i, j)
}

pub fn quartic_discriminant(i: &Rational, j: &Rational) -> Rational {
    q(4) * i * i * i - j * j
}

pub fn j_quartic(g: &BinaryQuartic) -> JInvariant {
    let (i, j) = quartic_invariants(g);
    let disc = quartic_discriminant(&i, &j);
    if disc.is_zero() {
        JInvariant::Singular
    } else {
        JInvariant::Finite(q(6912) * &i * &i * &i / disc)
    }
}

/// Reads a bidegree-(2,2) form as `A·y₀² + B·y₀y₁ + C·y₁²` and returns the
/// quartic `B² − 4AC` in the first pair of variables.
pub fn biquadratic_to_quartic(m: &MultiForm<Rational>) -> Result<BinaryQuartic> {
    if m.group_dims() != [2, 2] || m.multidegree() != [2, 2] {
        return Err(Error::WrongDegree);
    }
    let f = &Rationals;
    let mut parts = [Poly::zero(2), Poly::zero(2), Poly::zero(2)];
    for (e, c) in m.poly().terms() {
        parts[e[3] as usize].add_term(f, e[..2].to_vec(), c.clone());
    }
    let [a, b, c] = parts;
    let quartic = b.mul(f, &b).sub(f, &a.mul(f, &c).scale(f, &q(4)));
    Ok(BinaryQuartic::from_poly(&quartic))
}

pub fn j_biquadratic(m: &MultiForm<Rational>) -> Result<JInvariant> {
    Ok(j_quartic(&biquadratic_to_quartic(m)?))
}

fn cayley_poly<E: Clone + PartialEq, F: Field<Elem = E>>(field: &F, a: impl Fn(usize, usize, usize) -> Poly<E>) -> Poly<E> {
    let prod = |xs: &[(usize, usize, usize)]| -> Poly<E> {
        xs.iter().skip(1).fold(a(xs[0].0, xs[0].1, xs[0].2), |acc, &(i, j, k)| acc.mul(field, &a(i, j, k)))
    };
    let sum = |terms: &[[(usize, usize, usize); 4]]| -> Poly<E> {
        terms.iter().fold(Poly::zero(a(0, 0, 0).nvars()), |acc, t| acc.add(field, &prod(t)))
    };
    let squares = sum(&[
        [(0, 0, 0), (0, 0, 0), (1, 1, 1), (1, 1, 1)],
        [(0, 0, 1), (0, 0, 1), (1, 1, 0), (1, 1, 0)],
        [(0, 1, 0), (0, 1, 0), (1, 0, 1), (1, 0, 1)],
        [(1, 0, 0), (1, 0, 0), (0, 1, 1), (0, 1, 1)],
    ]);
    let pairs = sum(&[
        [(0, 0, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1)],
        [(0, 0, 0), (0, 1, 0), (1, 0, 1), (1, 1, 1)],
        [(0, 0, 0), (1, 0, 0), (0, 1, 1), (1, 1, 1)],
        [(0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 0)],
        [(0, 0, 1), (1, 0, 0), (0, 1, 1), (1, 1, 0)],
        [(0, 1, 0), (1, 0, 0), (0, 1, 1), (1, 0, 1)],
    ]);
    let quads = sum(&[[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)], [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]]);
    squares.sub(field, &pairs.scale(field, &field.from_i64(2))).add(field, &quads.scale(field, &field.from_i64(4)))
}

fn check_format(t: &QTensor, n: usize) -> Result<()> {
    if t.n() != n || t.d() != 2 {
        return Err(Error::WrongFormat);
    }
    Ok(())
}

/// Cayley's hyperdeterminant of a 2×2×2 tensor.
pub fn cayley_hyperdet(t: &QTensor) -> Result<Rational> {
    check_format(t, 3)?;
    let p = cayley_poly(&Rationals, |i, j, k| Poly::constant(&Rationals, 0, t.get(&[i, j, k]).clone()));
    Ok(p.coeff(&Rationals, &[]))
}

/// The binary quartic in `(s, u)` given by the Cayley hyperdeterminant of the
/// pencil `s·t[…,0] + u·t[…,1]`.
pub fn pencil_quartic(t: &QTensor) -> Result<BinaryQuartic> {
    check_format(t, 4)?;
    let f = &Rationals;
    let p = cayley_poly(f, |i, j, k| {
        let s = Poly::var(f, 2, 0).scale(f, t.get(&[i, j, k, 0]));
        s.add(f, &Poly::var(f, 2, 1).scale(f, t.get(&[i, j, k, 1])))
    });
    Ok(BinaryQuartic::from_poly(&p))
}

/// Hyperdeterminant of a 2×2×2×2 tensor, as `(4I³ − J²)/27` of the pencil quartic.
pub fn schlaefli_hyperdet(t: &QTensor) -> Result<Rational> {
    let (i, j) = quartic_invariants(&pencil_quartic(t)?);
    Ok(quartic_discriminant(&i, &j) / q(27))
}

/// The degree-2 four-qubit invariant `Σ t_{ijkl} t_{i'j'k'l'} ε_{ii'}ε_{jj'}ε_{kk'}ε_{ll'}`.
fn four_qubit_quadratic(t: &QTensor) -> Rational {
    let mut acc = q(0);
    for flat in 0..16 {
        let idx = t.multi_index(flat);
        let partner: Vec<usize> = idx.iter().map(|&i| 1 - i).collect();
        let sign = if idx.iter().filter(|&&i| i == 1).count() % 2 == 0 { 1 } else { -1 };
        acc += q(sign) * t.get(&idx) * t.get(&partner);
    }
    acc
}

/// `dⁿ − n·d² + n − 1`; negative when the group is larger than the space.
pub fn moduli_dimension(n: u32, d: u64) -> Result<i128> {
    if n < 2 || d < 2 {
        return Err(Error::InvalidFormat(format!("need n, d >= 2, got n={n}, d={d}")));
    }
    let dn = (d as i128)
        .checked_pow(n)
        .ok_or_else(|| Error::InvalidFormat(format!("d^n overflows for n={n}, d={d}")))?;
    Ok(dn - n as i128 * (d as i128) * (d as i128) + n as i128 - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CurveKind {
    PlaneCubic,
    Biquadratic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInvariants {
    pub kind: CurveKind,
    pub kept_axes: Vec<usize>,
    /// `(S, T)` for plane cubics, `(I, J)` for biquadratics.
    pub invariants: (Rational, Rational),
    pub discriminant: Rational,
    pub j: JInvariant,
}

impl Serialize for CurveInvariants {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let names = match self.kind {
            CurveKind::PlaneCubic => ("S", "T"),
            CurveKind::Biquadratic => ("I", "J"),
        };
        let mut m = s.serialize_map(Some(6))?;
        m.serialize_entry("kind", &self.kind)?;
        m.serialize_entry("kept_axes", &self.kept_axes)?;
        m.serialize_entry(names.0, &rational_to_string(&self.invariants.0))?;
        m.serialize_entry(names.1, &rational_to_string(&self.invariants.1))?;
        m.serialize_entry("discriminant", &rational_to_string(&self.discriminant))?;
        m.serialize_entry("j", &self.j)?;
        m.end()
    }
}

/// Axis choices for the determinantal projections of a format.
pub fn projection_axes(n: usize, d: usize) -> Vec<Vec<usize>> {
    match (n, d) {
        (3, 3) => vec![vec![0], vec![1]],
        (4, 2) => vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        _ => Vec::new(),
    }
}

/// Invariants of every determinantal projection; empty for formats without one.
pub fn projection_invariants(model: &VarietyModel<Rational>) -> Result<Vec<CurveInvariants>> {
    projection_axes(model.n(), model.d())
        .into_iter()
        .map(|axes| {
            let form = det_linear_matrix(&Rationals, model, &axes)?;
            Ok(if axes.len() == 1 {
                let (s, t) = aronhold_invariants(&TernaryCubic::from_poly(form.poly())?);
                let discriminant = cubic_discriminant(&s, &t);
                let j = if discriminant.is_zero() {
                    JInvariant::Singular
                } else {
                    JInvariant::Finite(q(KAPPA) * &s * &s * &s / &discriminant)
                };
                CurveInvariants { kind: CurveKind::PlaneCubic, kept_axes: axes, invariants: (s, t), discriminant, j }
            } else {
                let (i, jj) = quartic_invariants(&biquadratic_to_quartic(&form)?);
                let discriminant = quartic_discriminant(&i, &jj);
                let j = if discriminant.is_zero() {
                    JInvariant::Singular
                } else {
                    JInvariant::Finite(q(6912) * &i * &i * &i / &discriminant)
                };
                CurveInvariants { kind: CurveKind::Biquadratic, kept_axes: axes, invariants: (i, jj), discriminant, j }
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    RankDeficient,
    SingularModel,
    SmoothGeneric,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub n: usize,
    pub d: usize,
    pub status: Status,
    /// The status rests on exact computation rather than on point sweeps.
    pub certified: bool,
    /// Common j of the projections when they agree.
    pub j: Option<JInvariant>,
    pub projections: Vec<CurveInvariants>,
    /// The projections disagree on j, or a nonzero discriminant coexists with
    /// a singular point over a prime of good reduction.
    pub signals_disagree: bool,
    pub hyperdeterminant: Option<Rational>,
    pub semistable_hint: Option<bool>,
    pub smoothness: Option<SmoothnessReport>,
}

impl Verdict {
    pub fn primes_used(&self) -> Vec<u32> {
        self.smoothness.as_ref().map(|r| r.sweeps.iter().map(|s| s.p).collect()).unwrap_or_default()
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(11))?;
        m.serialize_entry("format", &[self.n, self.d])?;
        m.serialize_entry("status", &self.status)?;
        m.serialize_entry("certified", &self.certified)?;
        m.serialize_entry("j", &self.j)?;
        m.serialize_entry("projections", &self.projections)?;
        m.serialize_entry("signals_disagree", &self.signals_disagree)?;
        m.serialize_entry("hyperdeterminant", &self.hyperdeterminant.as_ref().map(rational_to_string))?;
        m.serialize_entry("semistable_hint", &self.semistable_hint)?;
        m.serialize_entry("primes_used", &self.primes_used())?;
        m.serialize_entry("smoothness", &self.smoothness)?;
        m.end()
    }
}

fn hyperdet_and_hint(t: &QTensor, projections: &[CurveInvariants]) -> (Option<Rational>, Option<bool>) {
    match (t.n(), t.d()) {
        (3, 2) => {
            let h = cayley_hyperdet(t).expect("format checked");
            let hint = !h.is_zero();
            (Some(h), Some(hint))
        }
        (4, 2) => {
            let h = schlaefli_hyperdet(t).expect("format checked");
            let (i, j) = quartic_invariants(&pencil_quartic(t).expect("format checked"));
            let hint = !(h.is_zero() && i.is_zero() && j.is_zero() && four_qubit_quadratic(t).is_zero());
            (Some(h), Some(hint))
        }
        (3, 3) => {
            let hint = projections.iter().any(|c| !c.invariants.0.is_zero() || !c.invariants.1.is_zero());
            (None, Some(hint))
        }
        _ => (None, None),
    }
}

/// Orbit verdict for a state: exact discriminants where the format has a
/// curve projection, finite-field Jacobian sweeps everywhere.
pub fn classify(t: &QTensor, primes: &[u32]) -> Verdict {
    let (n, d) = (t.n(), t.d());
    let model = match equations_of_y(t) {
        Ok(m) => m,
        Err(_) => {
            return Verdict {
                n,
                d,
                status: Status::RankDeficient,
                certified: true,
                j: None,
                projections: Vec::new(),
                signals_disagree: false,
                hyperdeterminant: hyperdet_and_hint(t, &[]).0,
                semistable_hint: hyperdet_and_hint(t, &[]).1,
                smoothness: None,
            }
        }
    };
    let projections = projection_invariants(&model).expect("projection formats are checked");
    let (hyperdeterminant, semistable_hint) = hyperdet_and_hint(t, &projections);
    let discriminants: Vec<Rational> = projections.iter().map(|c| c.discriminant.clone()).collect();
    let smoothness = smoothness_witness_model(&model, primes, &discriminants).ok();
    let witnessed = smoothness.as_ref().is_some_and(|r| r.verdict == SmoothnessVerdict::SingularFound);

    let (status, certified, signals_disagree) = if !projections.is_empty() {
        let any_zero = discriminants.iter().any(Zero::is_zero);
        let all_zero = discriminants.iter().all(Zero::is_zero);
        let js_agree = projections.windows(2).all(|w| w[0].j == w[1].j);
        if any_zero {
            (Status::SingularModel, true, !all_zero)
        } else if witnessed {
            (Status::SingularModel, false, true)
        } else {
            (Status::SmoothGeneric, true, !js_agree)
        }
    } else {
        // no exact test: call it singular only when every swept prime has a witness
        let everywhere = smoothness
            .as_ref()
            .is_some_and(|r| r.sweeps.iter().all(|s| s.witness.is_some()) && !r.sweeps.is_empty());
        let status = if everywhere { Status::SingularModel } else { Status::SmoothGeneric };
        (status, false, witnessed && !everywhere)
    };
    let j = match projections.first() {
        Some(first) if projections.iter().all(|c| c.j == first.j) => Some(first.j.clone()),
        Some(_) => None,
        None => None,
    };
    Verdict {
        n,
        d,
        status,
        certified,
        j,
        projections,
        signals_disagree,
        hyperdeterminant,
        semistable_hint,
        smoothness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome")]
pub enum Comparison {
    DistinctCertified { reason: String },
    ConsistentUnknown { reason: String },
    BothDegenerate { a: Status, b: Status },
}

/// Compares two states of the same format. Never asserts equivalence.
pub fn slocc_compare(a: &QTensor, b: &QTensor, primes: &[u32]) -> Result<Comparison> {
    if (a.n(), a.d()) != (b.n(), b.d()) {
        return Err(Error::FormatMismatch);
    }
    Ok(compare_verdicts(&classify(a, primes), &classify(b, primes)))
}

pub fn compare_verdicts(va: &Verdict, vb: &Verdict) -> Comparison {
    use Status::SmoothGeneric;
    match (va.status, vb.status) {
        (SmoothGeneric, SmoothGeneric) => match (va.j.as_ref().and_then(JInvariant::value), vb.j.as_ref().and_then(JInvariant::value)) {
            (Some(ja), Some(jb)) if ja != jb => Comparison::DistinctCertified {
                reason: format!("j differs: {} vs {}", rational_to_string(ja), rational_to_string(jb)),
            },
            (Some(_), Some(_)) => Comparison::ConsistentUnknown { reason: "equal j".into() },
            _ => Comparison::ConsistentUnknown { reason: "no curve invariant for this format".into() },
        },
        (sa, sb) if sa != sb && va.certified && vb.certified => Comparison::DistinctCertified {
            reason: format!("status differs: {sa:?} vs {sb:?}"),
        },
        (sa, sb) if sa != sb => Comparison::ConsistentUnknown {
            reason: format!("status differs ({sa:?} vs {sb:?}) but rests on point sweeps"),
        },
        (sa, sb) => Comparison::BothDegenerate { a: sa, b: sb },
    }
}
