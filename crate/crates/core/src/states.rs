//! n-qudit states as dense tensors, the local GL action, and the subspace V_η.
//!
//! Coefficients are stored row-major with the last index fastest. The last
//! factor is the distinguished one: [`Tensor::flatten_last`] reads the state
//! as a map from that factor into the tensor product of the others.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::{
    determinant, parse_rational, random_int_matrix, rational_to_string, rng_from_seed, Field, Matrix, PrimeField,
    Rational, Rationals, Subspace,
};
use crate::error::{Error, Result};
use num::Zero;
use rand::Rng;

/// Largest number of coefficients accepted from a state file.
pub const MAX_COEFFS: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor<E> {
    n: usize,
    d: usize,
    coeffs: Vec<E>,
}

pub type QTensor = Tensor<Rational>;

fn checked_volume(n: usize, d: usize) -> Option<usize> {
    let v = d.checked_pow(u32::try_from(n).ok()?)?;
    (v <= MAX_COEFFS).then_some(v)
}

impl<E: Clone + PartialEq> Tensor<E> {
    pub fn new(n: usize, d: usize, coeffs: Vec<E>) -> Result<Self> {
        match checked_volume(n, d) {
            Some(v) if v == coeffs.len() && n >= 1 && d >= 1 => Ok(Self { n, d, coeffs }),
            _ => Err(Error::InvalidFormat(format!("{} coefficients for n={n}, d={d}", coeffs.len()))),
        }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, n: usize, d: usize) -> Self {
        let v = checked_volume(n, d).expect("tensor too large");
        Self { n, d, coeffs: vec![field.zero(); v] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.n);
        idx.iter().fold(0, |acc, &i| acc * self.d + i)
    }

    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for slot in idx.iter_mut().rev() {
            *slot = flat % self.d;
            flat /= self.d;
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &E {
        &self.coeffs[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: E) {
        let k = self.flat_index(idx);
        self.coeffs[k] = value;
    }

    /// `d^{n-1} × d` matrix whose column `k` is the slice `η[…, k]`.
    pub fn flatten_last(&self) -> Matrix<E> {
        Matrix::from_vec(self.coeffs.len() / self.d, self.d, self.coeffs.clone())
    }

    /// Column span of [`Self::flatten_last`] inside `K^{d^{n-1}}`.
    pub fn v_eta<F: Field<Elem = E>>(&self, field: &F) -> Subspace<E> {
        Subspace::span(field, &self.flatten_last().transpose())
    }

    /// Applies a linear map (not necessarily invertible) to one factor.
    pub fn apply_factor<F: Field<Elem = E>>(&self, field: &F, axis: usize, m: &Matrix<E>) -> Self {
        assert!(m.rows() == self.d && m.cols() == self.d && axis < self.n);
        let stride = self.d.pow((self.n - 1 - axis) as u32);
        let mut out = vec![field.zero(); self.coeffs.len()];
        for (flat, slot) in out.iter_mut().enumerate() {
            let i = (flat / stride) % self.d;
            let base = flat - i * stride;
            let mut acc = field.zero();
            for j in 0..self.d {
                let a = m.get(i, j);
                if !field.is_zero(a) {
                    acc = field.add(&acc, &field.mul(a, &self.coeffs[base + j * stride]));
                }
            }
            *slot = acc;
        }
        Self { n: self.n, d: self.d, coeffs: out }
    }

    /// `(A⁽¹⁾ ⊗ ⋯ ⊗ A⁽ⁿ⁾) · self`.
    pub fn apply_slocc<F: Field<Elem = E>>(&self, field: &F, g: &SloccOperator<E>) -> Result<Self> {
        if g.factors.len() != self.n || g.factors.iter().any(|m| m.rows() != self.d || m.cols() != self.d) {
            return Err(Error::OperatorShape);
        }
        Ok(g.factors.iter().enumerate().fold(self.clone(), |t, (axis, m)| t.apply_factor(field, axis, m)))
    }

    /// Reorders tensor factors: factor `k` of the result is factor `perm[k]` of `self`.
    pub fn permute_factors(&self, perm: &[usize]) -> Self {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        assert!(sorted.iter().copied().eq(0..self.n), "not a permutation of the factors");
        let mut out = self.coeffs.clone();
        for (flat, slot) in out.iter_mut().enumerate() {
            let new_idx = self.multi_index(flat);
            let mut old_idx = vec![0; self.n];
            for (k, &src) in perm.iter().enumerate() {
                old_idx[src] = new_idx[k];
            }
            *slot = self.get(&old_idx).clone();
        }
        Self { n: self.n, d: self.d, coeffs: out }
    }

    /// Cyclic shift so that factor `shift` comes first.
    pub fn rotate_factors(&self, shift: usize) -> Self {
        let perm: Vec<usize> = (0..self.n).map(|k| (k + shift) % self.n).collect();
        self.permute_factors(&perm)
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!((self.n, self.d), (other.n, other.d));
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| field.add(a, b)).collect();
        Self { n: self.n, d: self.d, coeffs }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, s: &E) -> Self {
        Self { n: self.n, d: self.d, coeffs: self.coeffs.iter().map(|c| field.mul(c, s)).collect() }
    }

    /// Contracts the listed factors against vectors. The remaining factors keep
    /// their relative order; the result is returned flattened row-major.
    pub fn contract<F: Field<Elem = E>>(&self, field: &F, vectors: &[(usize, &[E])]) -> Vec<E> {
        let mut contracted = vec![None; self.n];
        for &(axis, v) in vectors {
            assert_eq!(v.len(), self.d);
            contracted[axis] = Some(v);
        }
        let free: Vec<usize> = (0..self.n).filter(|&a| contracted[a].is_none()).collect();
        let mut out = vec![field.zero(); self.d.pow(free.len() as u32)];
        for (flat, c) in self.coeffs.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let idx = self.multi_index(flat);
            let mut w = c.clone();
            for (axis, v) in contracted.iter().enumerate() {
                if let Some(v) = v {
                    w = field.mul(&w, &v[idx[axis]]);
                }
            }
            if field.is_zero(&w) {
                continue;
            }
            let target = free.iter().fold(0, |acc, &a| acc * self.d + idx[a]);
            out[target] = field.add(&out[target], &w);
        }
        out
    }

    pub fn map<T: Clone + PartialEq>(&self, f: impl FnMut(&E) -> T) -> Tensor<T> {
        Tensor { n: self.n, d: self.d, coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl Tensor<Rational> {
    /// Entrywise reduction modulo `p`.
    pub fn reduce_mod_p(&self, field: &PrimeField) -> Result<Tensor<u32>> {
        Ok(Tensor {
            n: self.n,
            d: self.d,
            coeffs: self.coeffs.iter().map(|c| field.from_rational(c)).collect::<Result<_>>()?,
        })
    }

    /// Canonical state-file JSON: entries sorted by index, zeros omitted.
    pub fn to_json(&self) -> String {
        let entries = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(flat, c)| EntryOut { idx: self.multi_index(flat), c: rational_to_string(c) })
            .collect();
        serde_json::to_string(&StateOut { n: self.n, d: self.d, entries }).expect("serializable")
    }

    /// SHA-256 of the canonical serialization, hex encoded.
    pub fn content_hash(&self) -> String {
        let digest = Sha256::digest(self.to_json().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// A tuple of invertible local operators, one per tensor factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SloccOperator<E> {
    factors: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq> SloccOperator<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, factors: Vec<Matrix<E>>) -> Result<Self> {
        for (k, m) in factors.iter().enumerate() {
            if m.rows() != m.cols() {
                return Err(Error::OperatorShape);
            }
            if field.is_zero(&determinant(field, m)) {
                return Err(Error::SingularOperator { factor: k });
            }
        }
        Ok(Self { factors })
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize, d: usize) -> Self {
        Self { factors: vec![Matrix::identity(field, d); n] }
    }

    pub fn factors(&self) -> &[Matrix<E>] {
        &self.factors
    }

    /// The operator `self · other` (apply `other` first).
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.factors.len(), other.factors.len());
        Self { factors: self.factors.iter().zip(&other.factors).map(|(a, b)| a.mul(field, b)).collect() }
    }
}

impl SloccOperator<Rational> {
    /// Integer operator with entries in `[-bound, bound]`, deterministic per seed.
    pub fn random(n: usize, d: usize, bound: i64, seed: u64) -> Self {
        let mut rng = rng_from_seed(seed);
        let factors = (0..n)
            .map(|_| loop {
                let m = random_int_matrix(&mut rng, d, d, bound);
                if !determinant(&Rationals, &m).is_zero() {
                    break m;
                }
            })
            .collect();
        Self { factors }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDoc {
    n: usize,
    d: usize,
    entries: Vec<EntryDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    idx: Vec<i64>,
    c: String,
}

#[derive(Serialize)]
struct StateOut {
    n: usize,
    d: usize,
    entries: Vec<EntryOut>,
}

#[derive(Serialize)]
struct EntryOut {
    idx: Vec<usize>,
    c: String,
}

/// Parses a state file. Unlisted coefficients are zero.
pub fn parse_state(document: &[u8]) -> Result<QTensor> {
    let doc: StateDoc = serde_json::from_slice(document).map_err(|e| Error::Schema(e.to_string()))?;
    if doc.n < 2 || doc.d < 2 {
        return Err(Error::Schema(format!("need n >= 2 and d >= 2, got n={}, d={}", doc.n, doc.d)));
    }
    let Some(volume) = checked_volume(doc.n, doc.d) else {
        return Err(Error::Schema(format!("state with n={}, d={} is too large", doc.n, doc.d)));
    };
    let mut coeffs = vec![Rational::zero(); volume];
    let mut seen = vec![false; volume];
    let mut t = Tensor { n: doc.n, d: doc.d, coeffs: Vec::new() };
    for entry in doc.entries {
        if entry.idx.len() != doc.n {
            return Err(Error::Schema(format!("index {:?} has length {}, expected {}", entry.idx, entry.idx.len(), doc.n)));
        }
        if entry.idx.iter().any(|&i| i < 0 || i as usize >= doc.d) {
            return Err(Error::Index { index: entry.idx, d: doc.d });
        }
        let idx: Vec<usize> = entry.idx.iter().map(|&i| i as usize).collect();
        let flat = t.flat_index(&idx);
        if std::mem::replace(&mut seen[flat], true) {
            return Err(Error::DuplicateIndex(idx));
        }
        coeffs[flat] = parse_rational(&entry.c)
            .ok_or_else(|| Error::Schema(format!("coefficient {:?} is not of the form num or num/den", entry.c)))?;
    }
    t.coeffs = coeffs;
    Ok(t)
}

/// Independent integer coefficients in `[-bound, bound]`, deterministic per seed.
pub fn random_state(n: usize, d: usize, bound: i64, seed: u64) -> QTensor {
    assert!(bound >= 1);
    let mut rng = rng_from_seed(seed);
    let volume = checked_volume(n, d).expect("tensor too large");
    let coeffs = (0..volume).map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into())).collect();
    Tensor { n, d, coeffs }
}

/// Named states used throughout tests and examples.
pub mod catalog {
    use super::*;
    use crate::arith::q;

    fn from_entries(n: usize, d: usize, entries: &[(&[usize], i64)]) -> QTensor {
        let mut t = Tensor::zeros(&Rationals, n, d);
        for (idx, c) in entries {
            let k = t.flat_index(idx);
            t.coeffs[k] += q(*c);
        }
        t
    }

    /// `Σ_k |k…k⟩`.
    pub fn ghz(n: usize, d: usize) -> QTensor {
        let mut t = Tensor::zeros(&Rationals, n, d);
        for k in 0..d {
            t.set(&vec![k; n], q(1));
        }
        t
    }

    /// `|0…01⟩ + |0…10⟩ + ⋯ + |10…0⟩` on qubits.
    pub fn w_state(n: usize) -> QTensor {
        let mut t = Tensor::zeros(&Rationals, n, 2);
        for k in 0..n {
            let mut idx = vec![0; n];
            idx[k] = 1;
            t.set(&idx, q(1));
        }
        t
    }

    /// `|0…0⟩`.
    pub fn separable(n: usize, d: usize) -> QTensor {
        let mut t = Tensor::zeros(&Rationals, n, d);
        t.set(&vec![0; n], q(1));
        t
    }

    /// `a(|0000⟩+|1111⟩) + b(|0011⟩+|1100⟩) + c(|0101⟩+|1010⟩) + d(|0110⟩+|1001⟩)`.
    pub fn four_qubit_family(a: i64, b: i64, c: i64, d: i64) -> QTensor {
        from_entries(
            4,
            2,
            &[
                (&[0, 0, 0, 0], a),
                (&[1, 1, 1, 1], a),
                (&[0, 0, 1, 1], b),
                (&[1, 1, 0, 0], b),
                (&[0, 1, 0, 1], c),
                (&[1, 0, 1, 0], c),
                (&[0, 1, 1, 0], d),
                (&[1, 0, 0, 1], d),
            ],
        )
    }

    /// `(|00⟩+|11⟩) ⊗ ξ` on four qubits: symmetric under swapping the first two
    /// factors, and its first two projections coincide on the model.
    pub fn swap_symmetric_four_qubit(xi: [[i64; 2]; 2]) -> QTensor {
        let mut t = Tensor::zeros(&Rationals, 4, 2);
        for a in 0..2 {
            for (c, row) in xi.iter().enumerate() {
                for (e, &v) in row.iter().enumerate() {
                    t.set(&[a, a, c, e], q(v));
                }
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;
    use crate::arith::{q, random_invertible};
    use proptest::prelude::*;

    #[test]
    fn parses_ghz_qutrit() {
        let doc = br#"{"n":3,"d":3,"entries":[{"idx":[0,0,0],"c":"1"},{"idx":[1,1,1],"c":"1"},{"idx":[2,2,2],"c":"1"}]}"#;
        assert_eq!(parse_state(doc).unwrap(), ghz(3, 3));
    }

    #[test]
    fn parses_empty_as_zero() {
        let t = parse_state(br#"{"n":2,"d":2,"entries":[]}"#).unwrap();
        assert!(t.coeffs().iter().all(|c| c.is_zero()));
        assert_eq!(t.coeffs().len(), 4);
    }

    #[test]
    fn parse_errors() {
        let e = parse_state(br#"{"n":3,"d":3,"entries":[{"idx":[0,3,0],"c":"1"}]}"#).unwrap_err();
        assert!(matches!(e, Error::Index { .. }));
        let e = parse_state(br#"{"n":2,"d":2,"entries":[{"idx":[0,1],"c":"1"},{"idx":[0,1],"c":"2"}]}"#).unwrap_err();
        assert_eq!(e, Error::DuplicateIndex(vec![0, 1]));
        for bad in [
            &br#"{"n":2,"d":2}"#[..],
            br#"{"n":2,"d":2,"entries":[{"idx":[0],"c":"1"}]}"#,
            br#"{"n":2,"d":2,"entries":[{"idx":[0,0],"c":"0.5"}]}"#,
            br#"{"n":2,"d":2,"entries":[],"extra":1}"#,
            br#"{"n":1,"d":2,"entries":[]}"#,
            br#"{"n":40,"d":40,"entries":[]}"#,
            b"not json",
        ] {
            assert!(matches!(parse_state(bad), Err(Error::Schema(_))), "{}", String::from_utf8_lossy(bad));
        }
    }

    #[test]
    fn canonical_json_sorts_and_drops_zeros() {
        let doc = br#"{"n":2,"d":2,"entries":[{"idx":[1,1],"c":"-2/4"},{"idx":[0,1],"c":"0"},{"idx":[0,0],"c":"3"}]}"#;
        let t = parse_state(doc).unwrap();
        assert_eq!(t.to_json(), r#"{"n":2,"d":2,"entries":[{"idx":[0,0],"c":"3"},{"idx":[1,1],"c":"-1/2"}]}"#);
        assert_eq!(parse_state(t.to_json().as_bytes()).unwrap(), t);
    }

    #[test]
    fn flatten_ghz_qutrit_columns_are_unit_matrices() {
        let m = ghz(3, 3).flatten_last();
        assert_eq!((m.rows(), m.cols()), (9, 3));
        for k in 0..3 {
            for r in 0..9 {
                let expected = if r == 4 * k { q(1) } else { q(0) };
                assert_eq!(*m.get(r, k), expected);
            }
        }
    }

    #[test]
    fn flatten_separable_and_zero() {
        let m = separable(3, 3).flatten_last();
        assert_eq!(m.entries().iter().filter(|x| !x.is_zero()).count(), 1);
        assert!(Tensor::zeros(&Rationals, 3, 3).flatten_last().is_zero(&Rationals));
    }

    #[test]
    fn v_eta_dimensions() {
        let v = ghz(3, 3).v_eta(&Rationals);
        assert_eq!(v.dim(), 3);
        for k in 0..3 {
            let mut e = vec![q(0); 9];
            e[4 * k] = q(1);
            assert!(v.contains(&Rationals, &e));
        }
        assert_eq!(separable(3, 3).v_eta(&Rationals).dim(), 1);
        assert_eq!(Tensor::zeros(&Rationals, 3, 3).v_eta(&Rationals).dim(), 0);
    }

    #[test]
    fn identity_and_scaling_actions() {
        let t = random_state(3, 3, 4, 11);
        let id = SloccOperator::identity(&Rationals, 3, 3);
        assert_eq!(t.apply_slocc(&Rationals, &id).unwrap(), t);
        let mut factors = vec![Matrix::identity(&Rationals, 3); 3];
        factors[0] = Matrix::identity(&Rationals, 3).scale(&Rationals, &q(5));
        let g = SloccOperator::new(&Rationals, factors).unwrap();
        assert_eq!(t.apply_slocc(&Rationals, &g).unwrap(), t.scale(&Rationals, &q(5)));
    }

    #[test]
    fn common_permutation_fixes_ghz() {
        let perm = Matrix::from_rows(3, vec![vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)], vec![q(1), q(0), q(0)]]);
        let g = SloccOperator::new(&Rationals, vec![perm; 3]).unwrap();
        assert_eq!(ghz(3, 3).apply_slocc(&Rationals, &g).unwrap(), ghz(3, 3));
    }

    #[test]
    fn singular_operator_rejected() {
        let bad = Matrix::from_rows(2, vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        let e = SloccOperator::new(&Rationals, vec![Matrix::identity(&Rationals, 2), bad]).unwrap_err();
        assert_eq!(e, Error::SingularOperator { factor: 1 });
    }

    #[test]
    fn random_state_is_reproducible() {
        assert_eq!(random_state(4, 2, 5, 99).to_json(), random_state(4, 2, 5, 99).to_json());
        assert_ne!(random_state(4, 2, 5, 99), random_state(4, 2, 5, 100));
    }

    #[test]
    fn random_qutrit_states_are_mostly_full_rank() {
        let full = (0..200).filter(|&s| random_state(3, 3, 5, s).v_eta(&Rationals).dim() == 3).count();
        assert!(full >= 190, "only {full} of 200 full rank");
    }

    #[test]
    fn permutation_and_rotation() {
        let t = random_state(3, 2, 3, 5);
        let p = t.permute_factors(&[2, 0, 1]);
        for flat in 0..8 {
            let i = t.multi_index(flat);
            assert_eq!(p.get(&[i[2], i[0], i[1]]), t.get(&i));
        }
        assert_eq!(t.rotate_factors(2), p);
        assert_eq!(t.rotate_factors(1).rotate_factors(2), t);
    }

    #[test]
    fn contraction_matches_direct_sum() {
        let t = random_state(3, 2, 3, 8);
        let u = [q(2), q(-1)];
        let w = [q(1), q(3)];
        let out = t.contract(&Rationals, &[(0, &u), (2, &w)]);
        for b in 0..2 {
            let mut s = q(0);
            for a in 0..2 {
                for c in 0..2 {
                    s += &u[a] * &w[c] * t.get(&[a, b, c]);
                }
            }
            assert_eq!(out[b], s);
        }
    }

    #[test]
    fn reduction_errors_on_bad_denominator() {
        let mut t = ghz(3, 2);
        t.set(&[0, 1, 0], crate::arith::qf(1, 5));
        assert_eq!(t.reduce_mod_p(&PrimeField::new(5).unwrap()), Err(Error::BadReduction { p: 5 }));
        assert!(t.reduce_mod_p(&PrimeField::new(7).unwrap()).is_ok());
    }

    fn small_state(n: usize, d: usize) -> impl Strategy<Value = QTensor> {
        any::<u64>().prop_map(move |s| random_state(n, d, 3, s))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn action_is_a_group_action(t in small_state(3, 2), s1 in any::<u64>(), s2 in any::<u64>()) {
            let g = SloccOperator::random(3, 2, 2, s1);
            let h = SloccOperator::random(3, 2, 2, s2);
            let lhs = t.apply_slocc(&Rationals, &g.compose(&Rationals, &h)).unwrap();
            let rhs = t.apply_slocc(&Rationals, &h).unwrap().apply_slocc(&Rationals, &g).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rank_of_v_eta_is_invariant(t in small_state(3, 3), s in any::<u64>()) {
            let g = SloccOperator::random(3, 3, 2, s);
            let gt = t.apply_slocc(&Rationals, &g).unwrap();
            prop_assert_eq!(gt.v_eta(&Rationals).dim(), t.v_eta(&Rationals).dim());
        }

        #[test]
        fn v_eta_transforms_by_kronecker_product(t in small_state(3, 2), s in any::<u64>()) {
            let g = SloccOperator::random(3, 2, 2, s);
            let gt = t.apply_slocc(&Rationals, &g).unwrap();
            let f = g.factors();
            let k = f[0].kron(&Rationals, &f[1]);
            prop_assert_eq!(gt.v_eta(&Rationals), t.v_eta(&Rationals).image(&Rationals, &k));
        }

        #[test]
        fn flatten_is_linear(s in small_state(3, 2), t in small_state(3, 2), a in -4i64..4, b in -4i64..4) {
            let comb = s.scale(&Rationals, &q(a)).add(&Rationals, &t.scale(&Rationals, &q(b)));
            let lhs = comb.flatten_last();
            let rhs_data: Vec<Rational> = s.flatten_last().entries().iter().zip(t.flatten_last().entries())
                .map(|(x, y)| q(a) * x + q(b) * y).collect();
            prop_assert_eq!(lhs.entries(), &rhs_data[..]);
        }

        #[test]
        fn invertible_sampler_is_invertible(d in 1usize..4, seed in any::<u64>()) {
            let m = random_invertible(d, 2, seed);
            prop_assert!(!determinant(&Rationals, &m).is_zero());
        }
    }
}
