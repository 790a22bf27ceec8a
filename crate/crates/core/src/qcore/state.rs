//! Pure states of a qubit register.
//!
//! Basis ordering is `|q_0 q_1 … q_{n-1}⟩` with `q_0` the most significant
//! bit, so qubit `q` of basis index `i` is `(i >> (n - 1 - q)) & 1`.

use num_complex::Complex64 as C64;

use super::density::DensityMatrix;
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Tolerance on `|‖ψ‖² - 1|` for a state to count as normalized.
pub const NORM_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<C64>,
}

impl StateVector {
    /// Wraps amplitudes, checking length and normalization.
    pub fn new(num_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        let s = Self::from_raw(num_qubits, amplitudes)?;
        let norm = s.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::invalid(format!("state has squared norm {norm}")));
        }
        Ok(s)
    }

    /// Normalizes the given amplitudes.
    pub fn normalized(num_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        let mut s = Self::from_raw(num_qubits, amplitudes)?;
        let norm = s.norm_sqr().sqrt();
        if norm == 0.0 {
            return Err(Error::invalid("cannot normalize the zero vector"));
        }
        s.amplitudes.iter_mut().for_each(|a| *a /= norm);
        Ok(s)
    }

    fn from_raw(num_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if amplitudes.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: amplitudes.len(),
            });
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::invalid(format!("basis index {index} >= {dim}")));
        }
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        amps[index] = C64::new(1.0, 0.0);
        Ok(Self {
            num_qubits,
            amplitudes: amps,
        })
    }

    /// Single-qubit state `a|0⟩ + b|1⟩` (normalized).
    pub fn qubit(a: C64, b: C64) -> Result<Self> {
        Self::normalized(1, vec![a, b])
    }

    pub fn zero() -> Self {
        Self::basis(1, 0).unwrap()
    }

    pub fn one() -> Self {
        Self::basis(1, 1).unwrap()
    }

    pub fn plus() -> Self {
        Self::qubit(C64::new(1.0, 0.0), C64::new(1.0, 0.0)).unwrap()
    }

    pub fn minus() -> Self {
        Self::qubit(C64::new(1.0, 0.0), C64::new(-1.0, 0.0)).unwrap()
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn inner(&self, other: &Self) -> C64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Largest amplitude-wise modulus difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `|ψ⟩⟨ψ|` as a density matrix.
    pub fn to_density(&self) -> DensityMatrix {
        let d = self.dim();
        let mut m = ComplexMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] = self.amplitudes[i] * self.amplitudes[j].conj();
            }
        }
        DensityMatrix::from_matrix_unchecked(self.num_qubits, m)
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.amplitudes {
            amps.extend(other.amplitudes.iter().map(|&b| a * b));
        }
        Self {
            num_qubits: self.num_qubits + other.num_qubits,
            amplitudes: amps,
        }
    }

    /// Applies a `k`-qubit unitary to the listed qubits, in the listed order
    /// (`targets[0]` is the most significant qubit of `u`).
    pub fn apply_local_unitary(&self, u: &ComplexMatrix, targets: &[usize]) -> Result<Self> {
        let mut out = self.clone();
        out.apply_local_unitary_in_place(u, targets)?;
        Ok(out)
    }

    pub fn apply_local_unitary_in_place(&mut self, u: &ComplexMatrix, targets: &[usize]) -> Result<()> {
        let n = self.num_qubits;
        check_qubits(targets, n)?;
        let k = targets.len();
        let sub = 1usize << k;
        if u.rows() != sub || u.cols() != sub {
            return Err(Error::DimensionMismatch {
                expected: sub,
                actual: u.rows(),
            });
        }
        let unitarity = u.unitarity_error();
        if unitarity > NORM_TOL {
            return Err(Error::NotUnitary(unitarity));
        }

        let target_bits: Vec<usize> = targets.iter().map(|&q| 1usize << (n - 1 - q)).collect();
        let target_mask: usize = target_bits.iter().sum();
        // Offsets of each target configuration relative to a base index.
        let offsets: Vec<usize> = (0..sub)
            .map(|c| {
                (0..k)
                    .filter(|&j| (c >> (k - 1 - j)) & 1 == 1)
                    .map(|j| target_bits[j])
                    .sum()
            })
            .collect();

        let um = u.as_slice();
        let mut gathered = vec![C64::new(0.0, 0.0); sub];
        for base in 0..self.dim() {
            if base & target_mask != 0 {
                continue;
            }
            for (g, &off) in gathered.iter_mut().zip(&offsets) {
                *g = self.amplitudes[base + off];
            }
            for (row, &off) in offsets.iter().enumerate() {
                let urow = &um[row * sub..(row + 1) * sub];
                self.amplitudes[base + off] = urow.iter().zip(&gathered).map(|(a, b)| a * b).sum();
            }
        }
        Ok(())
    }

    /// Reshapes the amplitudes into a `2^|keep| × 2^(n-|keep|)` matrix whose
    /// row index enumerates the kept qubits (in ascending qubit order).
    fn bipartite_matrix(&self, keep: &[usize]) -> ComplexMatrix {
        let n = self.num_qubits;
        let mut kept = keep.to_vec();
        kept.sort_unstable();
        let rest: Vec<usize> = (0..n).filter(|q| !kept.contains(q)).collect();
        let rows = 1usize << kept.len();
        let cols = 1usize << rest.len();
        let mut m = ComplexMatrix::zeros(rows, cols);
        let data = m.as_mut_slice();
        for (i, &amp) in self.amplitudes.iter().enumerate() {
            let r = gather_bits(i, n, &kept);
            let c = gather_bits(i, n, &rest);
            data[r * cols + c] = amp;
        }
        m
    }

    /// Reduced density matrix of the qubits in `keep` (ascending qubit order).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        check_qubits(keep, self.num_qubits)?;
        let m = self.bipartite_matrix(keep);
        Ok(DensityMatrix::from_matrix_unchecked(keep.len(), gram_rows(&m)))
    }

    /// Von Neumann entropy (bits) of the marginal on `subset`.
    ///
    /// Uses whichever side of the bipartition has the smaller Hilbert space;
    /// for a pure global state both marginals share their nonzero spectrum.
    pub fn subsystem_entropy(&self, subset: &[usize]) -> Result<f64> {
        check_qubits(subset, self.num_qubits)?;
        if subset.is_empty() || subset.len() == self.num_qubits {
            return Ok(0.0);
        }
        let m = self.bipartite_matrix(subset);
        let gram = if m.rows() <= m.cols() {
            gram_rows(&m)
        } else {
            gram_cols(&m)
        };
        super::density::entropy_of_hermitian(&gram)
    }
}

/// Validates a list of distinct in-range qubit indices.
pub(crate) fn check_qubits(qubits: &[usize], num_qubits: usize) -> Result<()> {
    let mut seen = 0u64;
    for &q in qubits {
        if q >= num_qubits {
            return Err(Error::QubitOutOfRange {
                index: q,
                num_qubits,
            });
        }
        if seen & (1 << q) != 0 {
            return Err(Error::DuplicateQubit(q));
        }
        seen |= 1 << q;
    }
    Ok(())
}

fn gather_bits(index: usize, n: usize, qubits: &[usize]) -> usize {
    qubits
        .iter()
        .fold(0, |acc, &q| (acc << 1) | ((index >> (n - 1 - q)) & 1))
}

/// `M M†`, filled from the upper triangle so the result is exactly Hermitian.
fn gram_rows(m: &ComplexMatrix) -> ComplexMatrix {
    let (r, c) = (m.rows(), m.cols());
    let data = m.as_slice();
    let mut out = ComplexMatrix::zeros(r, r);
    for i in 0..r {
        let ri = &data[i * c..(i + 1) * c];
        for j in i..r {
            let rj = &data[j * c..(j + 1) * c];
            let z: C64 = ri.iter().zip(rj).map(|(a, b)| a * b.conj()).sum();
            out[(i, j)] = z;
            out[(j, i)] = z.conj();
        }
        out[(i, i)].im = 0.0;
    }
    out
}

/// `M^T M^*` (the transpose of `M† M`), which has the same spectrum as the
/// complementary marginal.
fn gram_cols(m: &ComplexMatrix) -> ComplexMatrix {
    gram_rows(&transpose(m))
}

fn transpose(m: &ComplexMatrix) -> ComplexMatrix {
    let mut t = ComplexMatrix::zeros(m.cols(), m.rows());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            t[(j, i)] = m[(i, j)];
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::matrix::pauli_x;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn cnot() -> ComplexMatrix {
        ComplexMatrix::from_real(
            4,
            4,
            &[
                1.0, 0.0, 0.0, 0.0, //
                0.0, 1.0, 0.0, 0.0, //
                0.0, 0.0, 0.0, 1.0, //
                0.0, 0.0, 1.0, 0.0,
            ],
        )
        .unwrap()
    }

    fn bell() -> StateVector {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        StateVector::new(2, vec![c(h), c(0.0), c(0.0), c(h)]).unwrap()
    }

    #[test]
    fn tensor_of_basis_states() {
        let s = StateVector::zero().tensor(&StateVector::one());
        assert_eq!(s.amplitudes(), &[c(0.0), c(1.0), c(0.0), c(0.0)]);
    }

    #[test]
    fn tensor_of_plus_states_is_uniform() {
        let s = StateVector::plus().tensor(&StateVector::plus());
        for a in s.amplitudes() {
            assert!((a - c(0.5)).norm() < 1e-15);
        }
    }

    #[test]
    fn x_on_qubit_one_flips_the_low_bit() {
        let s = StateVector::basis(2, 0).unwrap();
        let out = s.apply_local_unitary(&pauli_x(), &[1]).unwrap();
        assert_eq!(out, StateVector::basis(2, 1).unwrap());
    }

    #[test]
    fn identity_leaves_state_bitwise_unchanged() {
        let s = bell();
        let out = s.apply_local_unitary(&ComplexMatrix::identity(4), &[1, 0]).unwrap();
        assert_eq!(out, s);
    }

    #[test]
    fn cnot_makes_bell_state() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let s = StateVector::new(2, vec![c(h), c(0.0), c(h), c(0.0)]).unwrap();
        let out = s.apply_local_unitary(&cnot(), &[0, 1]).unwrap();
        assert!(out.max_abs_diff(&bell()) < 1e-15);
    }

    #[test]
    fn target_order_is_respected() {
        // CNOT with control on qubit 1 acting on |01⟩ gives |11⟩.
        let s = StateVector::basis(2, 0b01).unwrap();
        let out = s.apply_local_unitary(&cnot(), &[1, 0]).unwrap();
        assert_eq!(out, StateVector::basis(2, 0b11).unwrap());
    }

    #[test]
    fn apply_rejects_bad_targets() {
        let s = bell();
        assert!(matches!(
            s.apply_local_unitary(&cnot(), &[0, 0]),
            Err(Error::DuplicateQubit(0))
        ));
        assert!(matches!(
            s.apply_local_unitary(&cnot(), &[0]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            s.apply_local_unitary(&pauli_x(), &[2]),
            Err(Error::QubitOutOfRange { .. })
        ));
        let not_unitary = ComplexMatrix::from_real(2, 2, &[1.0, 1.0, 0.0, 1.0]).unwrap();
        assert!(matches!(
            s.apply_local_unitary(&not_unitary, &[0]),
            Err(Error::NotUnitary(_))
        ));
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let rho = bell().partial_trace(&[0]).unwrap();
        let expected = ComplexMatrix::from_diagonal(&[c(0.5), c(0.5)]);
        assert!(rho.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn product_marginal_is_pure() {
        let s = StateVector::basis(2, 0b01).unwrap();
        let rho = s.partial_trace(&[1]).unwrap();
        let expected = ComplexMatrix::from_diagonal(&[c(0.0), c(1.0)]);
        assert_eq!(rho.matrix(), &expected);
    }

    #[test]
    fn empty_keep_is_the_scalar_one() {
        let rho = bell().partial_trace(&[]).unwrap();
        assert_eq!(rho.num_qubits(), 0);
        assert!((rho.matrix()[(0, 0)] - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn partial_trace_is_associative() {
        let s = StateVector::plus()
            .tensor(&bell())
            .apply_local_unitary(&cnot(), &[0, 2])
            .unwrap();
        let direct = s.partial_trace(&[1]).unwrap();
        let via_pair = s.partial_trace(&[0, 1]).unwrap().partial_trace(&[1]).unwrap();
        assert!(direct.matrix().max_abs_diff(via_pair.matrix()) < 1e-14);
    }

    #[test]
    fn subsystem_entropy_uses_either_side() {
        let s = bell().tensor(&StateVector::plus());
        assert!((s.subsystem_entropy(&[0]).unwrap() - 1.0).abs() < 1e-12);
        assert!((s.subsystem_entropy(&[1, 2]).unwrap() - 1.0).abs() < 1e-12);
        assert!(s.subsystem_entropy(&[2]).unwrap().abs() < 1e-12);
        assert_eq!(s.subsystem_entropy(&[0, 1, 2]).unwrap(), 0.0);
    }
}
