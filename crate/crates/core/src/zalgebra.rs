//! Relation spaces read off from `F_p`-points of `Y_η`, Hilbert functions of
//! the associated algebras, the multiplication-map test and the roundtrip
//! from points back to `V_η`.
//!
//! A point `(u₀, …, u_{n−2})` of `Y_η` is continued to a sequence by solving,
//! for each `i ≥ n−1`, the linear condition that the model tensor contracted
//! with `u_{i−n+2}, …, u_i` in factors `i−n+2, …, i (mod n)` vanishes. Window
//! `j` is the slot sequence `u_j, …, u_{j+n−2}`; window 0 is `Y_η` itself.

use serde::Serialize;

use crate::arith::{kernel, rref, Field, Matrix, PrimeField, Rational, Subspace};
use crate::error::{Error, Result};
use crate::geometry::{enumerate_points_fp, equations_of_y, normalize, VarietyModel};
use crate::states::{QTensor, Tensor};

/// Largest ambient dimension `d^k` used for a Hilbert function value.
pub const MAX_HILBERT_DIM: usize = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationSpace {
    pub p: u32,
    /// Number of slots, `n − 1`.
    pub arity: usize,
    pub window: usize,
    /// Tensor factor carried by each slot.
    pub slot_factors: Vec<usize>,
    pub basis: Vec<Vec<u32>>,
}

impl RelationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn subspace(&self, d: usize) -> Subspace<u32> {
        let field = PrimeField::new(self.p as u64).expect("stored prime");
        Subspace::from_vectors(&field, d.pow(self.arity as u32), self.basis.clone())
    }
}

/// Continues every point of the reduced model to a slot sequence of length
/// `len`. Points where some continuation step is not unique are dropped.
pub fn point_sequences(field: &PrimeField, model: &VarietyModel<u32>, len: usize) -> Result<Vec<Vec<Vec<u32>>>> {
    let eta = model.defining_tensor();
    let n = model.n();
    let mut out = Vec::new();
    'points: for pt in enumerate_points_fp(field, model)? {
        let mut seq = pt.coords;
        while seq.len() < len {
            match continue_sequence(field, &eta, &seq) {
                Some(u) => seq.push(u),
                None => continue 'points,
            }
        }
        seq.truncate(len.max(n - 1));
        out.push(seq);
    }
    Ok(out)
}

fn continue_sequence(field: &PrimeField, eta: &Tensor<u32>, seq: &[Vec<u32>]) -> Option<Vec<u32>> {
    let n = eta.n();
    let d = eta.d();
    let i = seq.len();
    let known: Vec<(usize, &[u32])> = (i + 2 - n..i).map(|k| (k % n, &seq[k][..])).collect();
    let (here, next) = (i % n, (i + 1) % n);
    let b = Matrix::from_vec(d, d, eta.contract(field, &known));
    // rows of `b` follow the smaller factor index
    let rows_here = if here < next { b } else { b.transpose() };
    let left = kernel(field, &rows_here.transpose());
    (left.dim() == 1).then(|| normalize(field, left.basis().row(0)).expect("nonzero kernel vector"))
}

fn slot_monomials(field: &PrimeField, slots: &[Vec<u32>]) -> Vec<u32> {
    slots.iter().fold(vec![field.one()], |acc, u| {
        acc.iter().flat_map(|a| u.iter().map(move |x| field.mul(a, x))).collect()
    })
}

fn window_relations(
    field: &PrimeField,
    sequences: &[Vec<Vec<u32>>],
    n: usize,
    d: usize,
    window: usize,
) -> Result<RelationSpace> {
    let arity = n - 1;
    let cols = d.pow(arity as u32);
    let rows: Vec<Vec<u32>> = sequences.iter().map(|s| slot_monomials(field, &s[window..window + arity])).collect();
    let eval = Matrix::from_rows(cols, rows);
    let rank = rref(field, &eval).rank;
    let needed = cols - d;
    if rank < needed {
        return Err(Error::InsufficientPoints { rank, needed });
    }
    let basis = kernel(field, &eval);
    Ok(RelationSpace {
        p: field.p(),
        arity,
        window,
        slot_factors: (window..window + arity).map(|k| k % n).collect(),
        basis: basis.basis().row_vecs(),
    })
}

fn reduced_model(t: &QTensor, p: u32) -> Result<(PrimeField, VarietyModel<u32>)> {
    let field = PrimeField::new(p as u64)?;
    let model = equations_of_y(t)?.reduce(&field)?;
    Ok((field, model))
}

/// Kernel of the evaluation of all slot monomials of `window` at the points
/// of `Y_η(F_p)`. Window 0 uses the slots `(V₁, …, V_{n−1})`; window `j`
/// starts at factor `j`.
pub fn relations_from_points(model: &VarietyModel<Rational>, p: u32, window: usize) -> Result<RelationSpace> {
    let n = model.n();
    if window >= n {
        return Err(Error::InvalidAxes(vec![window]));
    }
    let field = PrimeField::new(p as u64)?;
    let reduced = model.reduce(&field)?;
    let sequences = point_sequences(&field, &reduced, window + n - 1)?;
    window_relations(&field, &sequences, n, model.d(), window)
}

/// Slices of the model tensor with factor `window + n − 1 (mod n)` fixed,
/// read in the slot order of `window`.
pub fn expected_relations(field: &PrimeField, model: &VarietyModel<u32>, window: usize) -> Subspace<u32> {
    model.defining_tensor().rotate_factors(window).v_eta(field)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HilbertKind {
    Quadratic,
    Cubic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    pub kind: HilbertKind,
    pub p: u32,
    pub computed: Vec<usize>,
    pub expected: Vec<usize>,
    pub matches: bool,
}

/// `(k+1)(k+2)/2`.
pub fn expected_quadratic(k_max: usize) -> Vec<usize> {
    (0..=k_max).map(|k| (k + 1) * (k + 2) / 2).collect()
}

/// `h_k = 2h_{k−1} − 2h_{k−3} + h_{k−4}`, `h₀ = 1`.
pub fn expected_cubic(k_max: usize) -> Vec<usize> {
    let mut h: Vec<i64> = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let at = |j: isize| if j < 0 { 0 } else { h[j as usize] };
        let k = k as isize;
        let v = if k == 0 { 1 } else { 2 * at(k - 1) - 2 * at(k - 3) + at(k - 4) };
        h.push(v);
    }
    h.into_iter().map(|v| v as usize).collect()
}

/// `dim A_{0,k} = d^k − dim Σ_s W^{⊗s} ⊗ R_{s mod n} ⊗ W^{⊗(k−n+1−s)}`.
pub fn hilbert_dims(field: &PrimeField, relations: &[Subspace<u32>], d: usize, k_max: usize) -> Result<Vec<usize>> {
    let arity = relations.first().map_or(0, |r| r.ambient_dim()).ilog(d) as usize;
    let n = relations.len();
    let mut dims = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let ambient = d.pow(k as u32);
        if ambient > MAX_HILBERT_DIM {
            return Err(Error::InvalidFormat(format!("k_max={k_max} exceeds the supported size")));
        }
        if k < arity {
            dims.push(ambient);
            continue;
        }
        let mut vectors = Vec::new();
        for s in 0..=k - arity {
            let tail = d.pow((k - arity - s) as u32);
            let block = d.pow(arity as u32) * tail;
            for r in relations[s % n].basis().row_vecs() {
                for prefix in 0..d.pow(s as u32) {
                    for suffix in 0..tail {
                        let mut v = vec![0u32; ambient];
                        for (m, c) in r.iter().enumerate() {
                            v[prefix * block + m * tail + suffix] = *c;
                        }
                        vectors.push(v);
                    }
                }
            }
        }
        let rank = if vectors.is_empty() { 0 } else { rref(field, &Matrix::from_rows(ambient, vectors)).rank };
        dims.push(ambient - rank);
    }
    Ok(dims)
}

fn hilbert_profile(t: &QTensor, p: u32, k_max: usize, kind: HilbertKind) -> Result<HilbertProfile> {
    let (n, d) = (t.n(), t.d());
    let (want, expected) = match kind {
        HilbertKind::Quadratic => ((3, 3), expected_quadratic(k_max)),
        HilbertKind::Cubic => ((4, 2), expected_cubic(k_max)),
    };
    if (n, d) != want {
        return Err(Error::UnsupportedFormat { n, d });
    }
    let (field, model) = reduced_model(t, p)?;
    let sequences = point_sequences(&field, &model, 2 * n - 2)?;
    let relations = (0..n)
        .map(|w| window_relations(&field, &sequences, n, d, w).map(|r| r.subspace(d)))
        .collect::<Result<Vec<_>>>()?;
    let computed = hilbert_dims(&field, &relations, d, k_max)?;
    let matches = computed == expected;
    Ok(HilbertProfile { kind, p, computed, expected, matches })
}

/// Hilbert function of the quadratic algebra of a 3×3×3 state.
pub fn quadratic_hilbert(t: &QTensor, p: u32, k_max: usize) -> Result<HilbertProfile> {
    hilbert_profile(t, p, k_max, HilbertKind::Quadratic)
}

/// Hilbert function of the cubic algebra of a 2×2×2×2 state.
pub fn cubic_hilbert(t: &QTensor, p: u32, k_max: usize) -> Result<HilbertProfile> {
    hilbert_profile(t, p, k_max, HilbertKind::Cubic)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "kernel_dim")]
pub enum MuResult {
    Surjective,
    KernelDim(usize),
}

/// Rank of the bilinear monomials `x_i y_j` on the image of `Y_η(F_p)` in the
/// two chosen factors.
pub fn mu_surjectivity(t: &QTensor, axis_pair: (usize, usize), p: u32) -> Result<MuResult> {
    let (n, d) = (t.n(), t.d());
    if (n, d) != (4, 2) {
        return Err(Error::UnsupportedFormat { n, d });
    }
    let (a, b) = axis_pair;
    if a == b || a > 2 || b > 2 {
        return Err(Error::InvalidAxes(vec![a, b]));
    }
    let (field, model) = reduced_model(t, p)?;
    let mut projected: Vec<(Vec<u32>, Vec<u32>)> = enumerate_points_fp(&field, &model)?
        .into_iter()
        .map(|pt| (pt.coords[a].clone(), pt.coords[b].clone()))
        .collect();
    projected.sort();
    projected.dedup();
    let rows: Vec<Vec<u32>> = projected.iter().map(|(x, y)| slot_monomials(&field, &[x.clone(), y.clone()])).collect();
    let rank = if rows.is_empty() { 0 } else { rref(&field, &Matrix::from_rows(4, rows)).rank };
    if projected.len() < 5 {
        return Err(Error::InsufficientPoints { rank, needed: 4 });
    }
    Ok(if rank == 4 { MuResult::Surjective } else { MuResult::KernelDim(4 - rank) })
}

/// Whether the relations read off from the points of `Y_η(F_p)` recover
/// `V_η mod p` exactly.
pub fn roundtrip_check(t: &QTensor, p: u32) -> Result<bool> {
    let (field, model) = reduced_model(t, p)?;
    let sequences = point_sequences(&field, &model, t.n() - 1)?;
    let recovered = window_relations(&field, &sequences, t.n(), t.d(), 0)?;
    Ok(recovered.basis == model.basis().row_vecs())
}
