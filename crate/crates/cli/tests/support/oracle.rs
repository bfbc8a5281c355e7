//! Reference implementations written directly from the textbook formulas,
//! sharing nothing with the library beyond its data containers.

use mdgauge::{CMat, CVec, C64};

pub type M4 = [[C64; 4]; 4];

pub const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn zero4() -> M4 {
    [[c(0.0, 0.0); 4]; 4]
}

pub fn identity4() -> M4 {
    let mut m = zero4();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = c(1.0, 0.0);
    }
    m
}

pub fn mul4(a: &M4, b: &M4) -> M4 {
    let mut out = zero4();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn add4(a: &M4, b: &M4) -> M4 {
    let mut out = *a;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] += b[i][j];
        }
    }
    out
}

pub fn scale4(a: &M4, s: C64) -> M4 {
    let mut out = *a;
    out.iter_mut().flatten().for_each(|v| *v *= s);
    out
}

pub fn max_diff4(a: &M4, b: &M4) -> f64 {
    (0..4).flat_map(|i| (0..4).map(move |j| (a[i][j] - b[i][j]).norm())).fold(0.0, f64::max)
}

/// Dirac representation assembled from the Pauli matrices.
pub fn dirac_gammas() -> [M4; 4] {
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    let sigma = [[[o, l], [l, o]], [[o, -i], [i, o]], [[l, o], [o, -l]]];
    let mut g = [zero4(); 4];
    g[0] = [[l, o, o, o], [o, l, o, o], [o, o, -l, o], [o, o, o, -l]];
    for k in 0..3 {
        for r in 0..2 {
            for s in 0..2 {
                g[k + 1][r][s + 2] = sigma[k][r][s];
                g[k + 1][r + 2][s] = -sigma[k][r][s];
            }
        }
    }
    g
}

/// `(S ⊗ C) v` with spin index slow and colour index fast.
pub fn spin_colour_apply(s: &M4, colour: &[Vec<C64>], v: &[C64]) -> Vec<C64> {
    let nc = colour.len();
    let mut out = vec![c(0.0, 0.0); 4 * nc];
    for a in 0..4 {
        for b in 0..4 {
            if s[a][b] == c(0.0, 0.0) {
                continue;
            }
            for i in 0..nc {
                for j in 0..nc {
                    out[a * nc + i] += s[a][b] * colour[i][j] * v[b * nc + j];
                }
            }
        }
    }
    out
}

pub fn identity_colour(nc: usize) -> Vec<Vec<C64>> {
    (0..nc).map(|i| (0..nc).map(|j| c(if i == j { 1.0 } else { 0.0 }, 0.0)).collect()).collect()
}

pub fn rows(m: &CMat) -> Vec<Vec<C64>> {
    (0..m.dim()).map(|i| (0..m.dim()).map(|j| m.get(i, j)).collect()).collect()
}

pub fn mat_mul(a: &[Vec<C64>], b: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn mat_lin(terms: &[(C64, &[Vec<C64>])]) -> Vec<Vec<C64>> {
    let n = terms[0].1.len();
    let mut out = vec![vec![c(0.0, 0.0); n]; n];
    for (s, m) in terms {
        for i in 0..n {
            for j in 0..n {
                out[i][j] += *s * m[i][j];
            }
        }
    }
    out
}

pub fn trace(a: &[Vec<C64>]) -> C64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

pub fn mat_max_diff(a: &[Vec<C64>], b: &CMat) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in a.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            worst = worst.max((v - b.get(i, j)).norm());
        }
    }
    worst
}

pub fn vec_max_diff(a: &[C64], b: &CVec) -> f64 {
    a.iter().zip(&b.0).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `ψ† γ^0 χ`.
pub fn dirac_bilinear(psi: &[C64], chi: &[C64]) -> C64 {
    let nc = psi.len() / 4;
    let g0 = dirac_gammas()[0];
    let gchi = spin_colour_apply(&g0, &identity_colour(nc), chi);
    psi.iter().zip(&gchi).map(|(a, b)| a.conj() * b).sum()
}
