//! Independent reference implementations for the integration tests: dense
//! full-register Hamiltonians, a Taylor-series propagator and density-matrix
//! evolution, all on plain row-major vectors.

#![allow(dead_code)]

use num_complex::Complex64 as C64;

pub type Mat = Vec<C64>;

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn identity(dim: usize) -> Mat {
    let mut m = vec![C64::default(); dim * dim];
    for i in 0..dim {
        m[i * dim + i] = c(1.0);
    }
    m
}

pub fn matmul(a: &Mat, b: &Mat, dim: usize) -> Mat {
    let mut out = vec![C64::default(); dim * dim];
    for i in 0..dim {
        for k in 0..dim {
            let aik = a[i * dim + k];
            if aik == C64::default() {
                continue;
            }
            for j in 0..dim {
                out[i * dim + j] += aik * b[k * dim + j];
            }
        }
    }
    out
}

pub fn dagger(a: &Mat, dim: usize) -> Mat {
    let mut out = vec![C64::default(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            out[j * dim + i] = a[i * dim + j].conj();
        }
    }
    out
}

fn add_scaled(acc: &mut Mat, m: &Mat, s: C64) {
    for (a, b) in acc.iter_mut().zip(m) {
        *a += s * b;
    }
}

/// Pauli `kind` ('x', 'y', 'z') on `qubit` of an `n`-qubit register, acting
/// on basis index bits directly (qubit 0 is the most significant bit).
pub fn pauli_on(n: usize, qubit: usize, kind: char) -> Mat {
    let dim = 1 << n;
    let bit = 1 << (n - 1 - qubit);
    let mut m = vec![C64::default(); dim * dim];
    for col in 0..dim {
        let set = col & bit != 0;
        let (row, amp) = match kind {
            'x' => (col ^ bit, c(1.0)),
            'y' => (col ^ bit, if set { C64::new(0.0, -1.0) } else { C64::new(0.0, 1.0) }),
            'z' => (col, if set { c(-1.0) } else { c(1.0) }),
            _ => panic!("unknown Pauli {kind}"),
        };
        m[row * dim + col] = amp;
    }
    m
}

pub struct OracleCouplings {
    pub jx: f64,
    pub jy: f64,
    pub jz: f64,
    pub eps: f64,
}

/// Full-register generator of the collision with ancilla `k` (one-based).
pub fn collision_hamiltonian(n_sys: usize, n_anc: usize, k: usize, cp: &OracleCouplings) -> Mat {
    let n = n_sys + n_anc;
    let dim = 1 << n;
    let e = n_sys + k - 1;
    let mut h = vec![C64::default(); dim * dim];
    for s in 0..n_sys {
        add_scaled(&mut h, &pauli_on(n, s, 'z'), c(0.5));
    }
    add_scaled(&mut h, &pauli_on(n, e, 'z'), c(0.5));
    if n_sys == 2 {
        for kind in ['x', 'y'] {
            let pp = matmul(&pauli_on(n, 0, kind), &pauli_on(n, 1, kind), dim);
            add_scaled(&mut h, &pp, c(cp.eps));
        }
    }
    for (kind, j) in [('x', cp.jx), ('y', cp.jy), ('z', cp.jz)] {
        for s in 0..n_sys {
            let pp = matmul(&pauli_on(n, s, kind), &pauli_on(n, e, kind), dim);
            add_scaled(&mut h, &pp, c(j));
        }
    }
    h
}

/// `exp(-i h t)` by scaling and squaring a 30-term Taylor series.
pub fn propagator(h: &Mat, dim: usize, t: f64) -> Mat {
    let norm: f64 = h.iter().map(|z| z.norm()).sum::<f64>().max(1e-300);
    let squarings = ((norm * t.abs()).log2().ceil().max(0.0) as u32) + 2;
    let scale = t / f64::from(1u32 << squarings);
    let a: Mat = h.iter().map(|z| z * C64::new(0.0, -scale)).collect();
    let mut result = identity(dim);
    let mut term = identity(dim);
    for order in 1..=30 {
        term = matmul(&term, &a, dim);
        for z in term.iter_mut() {
            *z /= order as f64;
        }
        add_scaled(&mut result, &term, c(1.0));
    }
    for _ in 0..squarings {
        result = matmul(&result, &result, dim);
    }
    result
}

pub fn ket_plus() -> [C64; 2] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    [c(h), c(h)]
}

pub fn ket_minus() -> [C64; 2] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    [c(h), c(-h)]
}

pub fn kron_kets(kets: &[[C64; 2]]) -> Vec<C64> {
    kets.iter().fold(vec![c(1.0)], |acc, k| {
        acc.iter().flat_map(|a| [a * k[0], a * k[1]]).collect()
    })
}

/// The collision model's initial density matrix, written out from kets.
pub fn initial_density(n_sys: usize, n_anc: usize, dephasing: bool) -> Mat {
    let (p, m) = (ket_plus(), ket_minus());
    let eta = if dephasing { p } else { [c(1.0), c(0.0)] };
    let (mut first, mut second) = if n_sys == 1 {
        (vec![m, p], vec![p, m])
    } else {
        (vec![m, p, m], vec![p, m, p])
    };
    for _ in 1..n_anc {
        first.push(eta);
        second.push(eta);
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let psi: Vec<C64> = kron_kets(&first)
        .iter()
        .zip(kron_kets(&second))
        .map(|(a, b)| (a + b) * s)
        .collect();
    let dim = psi.len();
    let mut rho = vec![C64::default(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            rho[i * dim + j] = psi[i] * psi[j].conj();
        }
    }
    rho
}

/// `ρ → U_N ⋯ U_1 ρ U_1† ⋯ U_N†`.
pub fn evolve_density(n_sys: usize, n_anc: usize, cp: &OracleCouplings, t: f64, dephasing: bool) -> Mat {
    let dim = 1 << (n_sys + n_anc);
    let mut rho = initial_density(n_sys, n_anc, dephasing);
    for k in 1..=n_anc {
        let u = propagator(&collision_hamiltonian(n_sys, n_anc, k, cp), dim, t);
        rho = matmul(&matmul(&u, &rho, dim), &dagger(&u, dim), dim);
    }
    rho
}

/// Reduced density matrix on `keep` (ascending), by explicit index sums.
pub fn partial_trace(rho: &Mat, n: usize, keep: &[usize]) -> Mat {
    let dim = 1 << n;
    let kd = 1 << keep.len();
    let traced: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
    let compose = |kept_bits: usize, other_bits: usize| -> usize {
        let mut idx = 0;
        for (pos, &q) in keep.iter().enumerate() {
            if kept_bits & (1 << (keep.len() - 1 - pos)) != 0 {
                idx |= 1 << (n - 1 - q);
            }
        }
        for (pos, &q) in traced.iter().enumerate() {
            if other_bits & (1 << (traced.len() - 1 - pos)) != 0 {
                idx |= 1 << (n - 1 - q);
            }
        }
        idx
    };
    let mut out = vec![C64::default(); kd * kd];
    for a in 0..kd {
        for b in 0..kd {
            let mut sum = C64::default();
            for o in 0..(1 << traced.len()) {
                sum += rho[compose(a, o) * dim + compose(b, o)];
            }
            out[a * kd + b] = sum;
        }
    }
    out
}

use qdscram::infometrics::{mutual_information, tmi_partitions, TmiOptions};
use qdscram::model::{run_collisions, CollisionConfig, CouplingSpec, InitialStatePreset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn oracle_couplings(preset: InitialStatePreset) -> OracleCouplings {
    if preset.is_dephasing() {
        OracleCouplings { jx: 0.0, jy: 0.0, jz: 1.0, eps: 1.0 }
    } else {
        OracleCouplings { jx: 1.0, jy: 1.0, jz: 0.0, eps: 1.0 }
    }
}

/// Largest entrywise gap between `|ψ⟩⟨ψ|` from the library and the
/// density-matrix oracle.
pub fn oracle_max_error(preset: InitialStatePreset, n_anc: usize, t: f64) -> f64 {
    let config = CollisionConfig::preset(preset, n_anc, t).unwrap();
    let rho = run_collisions(&config).unwrap().to_density();
    let oracle = evolve_density(preset.system_size(), n_anc, &oracle_couplings(preset), t, preset.is_dephasing());
    rho.matrix()
        .as_slice()
        .iter()
        .zip(&oracle)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

fn random_config(rng: &mut ChaCha8Rng) -> CollisionConfig {
    let preset = InitialStatePreset::ALL[rng.gen_range(0..4)];
    let n = rng.gen_range(3..=6);
    let mut config = CollisionConfig::preset(preset, n, rng.gen_range(0.0..3.0)).unwrap();
    let (j, eps) = (rng.gen_range(0.2..2.0), rng.gen_range(0.0..2.0));
    config.couplings = if preset.is_dephasing() {
        CouplingSpec::dephasing(j, eps)
    } else {
        CouplingSpec::exchange(j, eps)
    };
    config
}

/// Unitarity, trace, entropy complementarity and strong subadditivity on
/// `cases` collision states drawn from `seed`.
pub fn hygiene_suite(seed: u64, cases: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..cases {
        let config = random_config(&mut rng);
        let u = config.collision_unitary().unwrap();
        if u.unitarity_error() >= 1e-10 {
            return Err(format!("case {case}: collision unitary off by {:e}", u.unitarity_error()));
        }
        let state = run_collisions(&config).unwrap();
        if (state.norm_sqr() - 1.0).abs() >= 1e-10 {
            return Err(format!("case {case}: norm drift"));
        }

        let n = state.num_qubits();
        let all: Vec<usize> = (0..n).collect();
        let a: Vec<usize> = all.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        let rho_a = state.partial_trace(&a).unwrap();
        let tr = rho_a.trace();
        if (tr.re - 1.0).abs() >= 1e-10 || tr.im.abs() >= 1e-12 || !rho_a.matrix().is_hermitian(1e-12) {
            return Err(format!("case {case}: reduced state trace {tr} or Hermiticity off"));
        }

        let complement: Vec<usize> = all.iter().copied().filter(|q| !a.contains(q)).collect();
        let h_a = state.subsystem_entropy(&a).unwrap();
        let h_c = state.subsystem_entropy(&complement).unwrap();
        let h_direct = rho_a.vn_entropy().unwrap();
        if (h_a - h_c).abs() >= 1e-9 || (h_a - h_direct).abs() >= 1e-9 {
            return Err(format!("case {case}: H(A) = {h_a}, H(rest) = {h_c}, direct {h_direct}"));
        }

        let mut shuffled = all.clone();
        for i in (1..n).rev() {
            shuffled.swap(i, rng.gen_range(0..=i));
        }
        let cut1 = rng.gen_range(1..n);
        let cut2 = rng.gen_range(cut1..=n);
        let (x, rest) = shuffled.split_at(cut1);
        let (y, z) = rest.split_at(cut2 - cut1);
        let h = |parts: &[&[usize]]| state.subsystem_entropy(&parts.concat()).unwrap();
        let gap = h(&[x, y]) + h(&[y, z]) - h(&[y]) - h(&[x, y, z]);
        if gap < -1e-9 {
            return Err(format!("case {case}: strong subadditivity violated by {}", -gap));
        }

        let layout = config.layout;
        let sys = layout.system_qubits();
        for p in tmi_partitions(&layout, &TmiOptions::new(1, 50, case)).unwrap() {
            let b = layout.ancilla(p.b);
            let mut bc = vec![b];
            bc.extend(p.c.iter().map(|&c| layout.ancilla(c)));
            let i_b = mutual_information(&state, &sys, &[b]).unwrap();
            let i_bc = mutual_information(&state, &sys, &bc).unwrap();
            if i_bc < i_b - 1e-9 {
                return Err(format!("case {case}: I(S:BC) = {i_bc} < I(S:B) = {i_b}"));
            }
        }
    }
    Ok(())
}
