use nalgebra::DMatrix;

use crate::csvout::{CsvTable, Field};
use crate::error::{Error, Result};
use crate::polyring::{monomials_up_to_degree, Monomial, RealPoly};
use crate::quadrature::{CompensatedSum, QuadRule, Weight, WeightedNodes};
use crate::variety::VarietyChart;

/// Relative residual below which a monomial counts as dependent.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct GramBasis {
    pub chart_id: String,
    pub degree_cap: u32,
    pub weight: Weight,
    /// Ambient monomials in graded lex order.
    pub monomials: Vec<Monomial>,
    pub gram: DMatrix<f64>,
    pub rank: usize,
    /// Indices into `monomials` that survived rank filtering.
    pub kept_indices: Vec<usize>,
    /// Row `r` expresses basis element `b_r` in the kept monomials
    /// (lower triangular, `rank x rank`).
    pub ortho_coeffs: DMatrix<f64>,
    pub rank_tol: f64,
}

/// Gram matrix `G_ij = ∫_M m_i m_j e^{-r^2} dμ` of the monomials of degree at
/// most `degree_cap`. The basis fields are left empty.
pub fn gram_matrix(chart: &VarietyChart, degree_cap: u32, rule: &QuadRule) -> Result<GramBasis> {
    gram_matrix_weighted(chart, degree_cap, rule, Weight::Gauss)
}

pub fn gram_matrix_weighted(
    chart: &VarietyChart,
    degree_cap: u32,
    rule: &QuadRule,
    weight: Weight,
) -> Result<GramBasis> {
    let monomials = monomials_up_to_degree(chart.ambient_dim(), degree_cap);
    let nodes = WeightedNodes::new(chart, rule, weight)?;
    let values = monomial_values(&monomials, &nodes);
    let weighted: Vec<Vec<f64>> = values
        .iter()
        .map(|row| row.iter().zip(nodes.weights()).map(|(v, w)| v * w).collect())
        .collect();
    let n = monomials.len();
    let mut gram = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut acc = CompensatedSum::default();
            for (a, b) in weighted[i].iter().zip(&values[j]) {
                acc.add(a * b);
            }
            let g = acc.value();
            if !g.is_finite() {
                return Err(Error::NonFiniteGram {
                    row: monomials[i].to_string(),
                    col: monomials[j].to_string(),
                });
            }
            gram[(i, j)] = g;
            gram[(j, i)] = g;
        }
    }
    Ok(GramBasis {
        chart_id: chart.id().to_string(),
        degree_cap,
        weight,
        monomials,
        gram,
        rank: 0,
        kept_indices: Vec::new(),
        ortho_coeffs: DMatrix::zeros(0, 0),
        rank_tol: 0.0,
    })
}

/// `values[i][k]` is monomial `i` at embedded node `k`.
pub(crate) fn monomial_values(monomials: &[Monomial], nodes: &WeightedNodes) -> Vec<Vec<f64>> {
    let max_deg = monomials.iter().map(Monomial::degree).max().unwrap_or(0) as usize;
    let mut values = vec![Vec::with_capacity(nodes.len()); monomials.len()];
    let mut powers: Vec<Vec<f64>> = Vec::new();
    for x in nodes.points() {
        powers.clear();
        for &xi in x {
            let mut p = Vec::with_capacity(max_deg + 1);
            let mut acc = 1.0;
            for _ in 0..=max_deg {
                p.push(acc);
                acc *= xi;
            }
            powers.push(p);
        }
        for (row, m) in values.iter_mut().zip(monomials) {
            let v = m
                .exponents()
                .iter()
                .zip(&powers)
                .fold(1.0, |a, (&e, p)| a * p[e as usize]);
            row.push(v);
        }
    }
    values
}

/// Threshold Cholesky on the Gram matrix in graded lex order.
///
/// Monomial `i` is dropped when its squared residual against the span of the
/// kept predecessors is at most `rank_tol * G_ii`; otherwise the normalized
/// residual becomes the next basis element. Projections are done twice
/// (classical Gram-Schmidt with one reorthogonalization pass in the Gram
/// metric).
pub fn orthonormalize(gb: &GramBasis, rank_tol: f64) -> Result<GramBasis> {
    if !(rank_tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "rank_tol must be positive, got {rank_tol}"
        )));
    }
    let g = &gb.gram;
    let n = g.nrows();
    // basis vectors as dense coefficient vectors over all monomials
    let mut basis: Vec<Vec<f64>> = Vec::new();
    // G b_j, cached
    let mut g_basis: Vec<Vec<f64>> = Vec::new();
    let mut kept = Vec::new();
    for i in 0..n {
        let diag = g[(i, i)];
        if !(diag > 0.0) {
            continue;
        }
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        for _pass in 0..2 {
            let coeffs: Vec<f64> = g_basis.iter().map(|gb_j| dot(gb_j, &v)).collect();
            for (c, b) in coeffs.iter().zip(&basis) {
                for (vk, bk) in v.iter_mut().zip(b) {
                    *vk -= c * bk;
                }
            }
        }
        let gv = mat_vec(g, &v);
        let res2 = dot(&v, &gv);
        if res2 <= rank_tol * diag {
            continue;
        }
        let scale = 1.0 / res2.sqrt();
        basis.push(v.iter().map(|x| x * scale).collect());
        g_basis.push(gv.iter().map(|x| x * scale).collect());
        kept.push(i);
    }
    let rank = kept.len();
    let ortho_coeffs = DMatrix::from_fn(rank, rank, |r, c| basis[r][kept[c]]);
    Ok(GramBasis {
        rank,
        kept_indices: kept,
        ortho_coeffs,
        rank_tol,
        ..gb.clone()
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = CompensatedSum::default();
    for (x, y) in a.iter().zip(b) {
        acc.add(x * y);
    }
    acc.value()
}

fn mat_vec(g: &DMatrix<f64>, v: &[f64]) -> Vec<f64> {
    (0..g.nrows())
        .map(|r| {
            let mut acc = CompensatedSum::default();
            for (c, &vc) in v.iter().enumerate() {
                if vc != 0.0 {
                    acc.add(g[(r, c)] * vc);
                }
            }
            acc.value()
        })
        .collect()
}

impl GramBasis {
    pub fn ambient_dim(&self) -> usize {
        self.monomials.first().map_or(0, Monomial::n_vars)
    }

    pub fn kept_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.kept_indices.iter().map(|&i| &self.monomials[i])
    }

    /// Monomials that were dropped as dependent.
    pub fn dropped_monomials(&self) -> Vec<&Monomial> {
        (0..self.monomials.len())
            .filter(|i| !self.kept_indices.contains(i))
            .map(|i| &self.monomials[i])
            .collect()
    }

    /// Basis element `b_r` as an ambient polynomial.
    pub fn element(&self, r: usize) -> RealPoly {
        let terms = self
            .kept_monomials()
            .enumerate()
            .map(|(c, m)| (m.clone(), self.ortho_coeffs[(r, c)]));
        RealPoly::from_terms(self.ambient_dim(), terms).expect("monomials share the arity")
    }

    /// `sum_r coeffs[r] b_r` as an ambient polynomial.
    pub fn combination(&self, coeffs: &[f64]) -> RealPoly {
        let n = self.rank;
        let terms = self.kept_monomials().enumerate().map(|(c, m)| {
            let mut acc = CompensatedSum::default();
            for (r, &a) in coeffs.iter().enumerate().take(n) {
                acc.add(a * self.ortho_coeffs[(r, c)]);
            }
            (m.clone(), acc.value())
        });
        RealPoly::from_terms(self.ambient_dim(), terms).expect("monomials share the arity")
    }

    /// `max |G - G^T| / max |G|`.
    pub fn symmetry_defect(&self) -> f64 {
        let g = &self.gram;
        let scale = g.amax();
        (g - g.transpose()).amax() / scale
    }

    /// Smallest eigenvalue over largest.
    pub fn min_eigen_ratio(&self) -> f64 {
        let eig = self.gram.clone().symmetric_eigen();
        let max = eig.eigenvalues.max();
        eig.eigenvalues.min() / max
    }

    /// `max |<b_i, b_j> - delta_ij|` under another Gram matrix of the same
    /// monomials (e.g. from a finer rule).
    pub fn orthonormality_defect(&self, gram: &DMatrix<f64>) -> f64 {
        let k = &self.kept_indices;
        let sub = DMatrix::from_fn(k.len(), k.len(), |a, b| gram[(k[a], k[b])]);
        let m = &self.ortho_coeffs * sub * self.ortho_coeffs.transpose();
        (m - DMatrix::identity(k.len(), k.len())).amax()
    }

    /// CSV `basis_index,monomial_exponents,coefficient`, one row per nonzero
    /// coefficient; exponents are joined with `;`.
    pub fn basis_csv(&self) -> CsvTable {
        let mut t = CsvTable::new(&["basis_index", "monomial_exponents", "coefficient"]);
        for r in 0..self.rank {
            for (c, m) in self.kept_monomials().enumerate() {
                let v = self.ortho_coeffs[(r, c)];
                if v == 0.0 {
                    continue;
                }
                let exps = m
                    .exponents()
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(";");
                t.row(&[Field::I(r as i64), Field::S(exps), Field::F(v)]);
            }
        }
        t
    }

    /// CSV `i,j,gram` over all monomial pairs.
    pub fn gram_csv(&self) -> CsvTable {
        let mut t = CsvTable::new(&["i", "j", "gram"]);
        let n = self.gram.nrows();
        for i in 0..n {
            for j in 0..n {
                t.row(&[Field::I(i as i64), Field::I(j as i64), Field::F(self.gram[(i, j)])]);
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_real_poly;
    use crate::quadrature::{build_rule, choose_truncation, default_nodes, uniform_nodes};
    use crate::variety::{
        chart_circle, chart_revolution, default_growth_radii, estimate_growth, ParamDomain,
    };

    fn cylinder() -> VarietyChart {
        let f = parse_real_poly("1", 1).unwrap();
        let h = parse_real_poly("x", 1).unwrap();
        chart_revolution(&f, &h, ParamDomain::Unbounded).unwrap()
    }

    fn rule_for(chart: &VarietyChart, degree: u32, nodes: Option<usize>) -> QuadRule {
        let growth = estimate_growth(chart, &default_growth_radii()).unwrap();
        let r = choose_truncation(Some(&growth), 2 * degree, 1e-14).unwrap();
        let n = nodes.map_or_else(|| default_nodes(chart), |n| uniform_nodes(chart, n));
        build_rule(chart, r, &n).unwrap()
    }

    #[test]
    fn circle_drops_y_squared() {
        let chart = chart_circle();
        let rule = rule_for(&chart, 2, None);
        let gb = gram_matrix(&chart, 2, &rule).unwrap();
        for tol in [1e-10, 1e-9, 1e-8] {
            let b = orthonormalize(&gb, tol).unwrap();
            assert_eq!(b.rank, 5);
            let dropped = b.dropped_monomials();
            assert_eq!(dropped.len(), 1);
            assert_eq!(dropped[0].exponents(), &[0, 2]);
        }
    }

    #[test]
    fn gram_is_symmetric_positive() {
        let chart = cylinder();
        let rule = rule_for(&chart, 4, None);
        let gb = gram_matrix(&chart, 4, &rule).unwrap();
        assert!(gb.symmetry_defect() < 1e-12);
        let b = orthonormalize(&gb, DEFAULT_RANK_TOL).unwrap();
        let k = &b.kept_indices;
        let sub = DMatrix::from_fn(k.len(), k.len(), |a, c| gb.gram[(k[a], k[c])]);
        let eig = sub.symmetric_eigen().eigenvalues;
        assert!(eig.min() > 0.0);
    }

    #[test]
    fn cylinder_rank_and_refinement() {
        let chart = cylinder();
        let rule = rule_for(&chart, 8, None);
        let gb = orthonormalize(&gram_matrix(&chart, 8, &rule).unwrap(), DEFAULT_RANK_TOL).unwrap();
        assert_eq!(gb.monomials.len(), 165);
        // x^2 + y^2 = 1 removes every monomial divisible by y^2: 9 + 8*9 = 81
        assert_eq!(gb.rank, 81);
        assert!(gb.dropped_monomials().iter().all(|m| m.exponents()[1] >= 2));
        let fine = rule_for(&chart, 8, Some(128));
        let g_fine = gram_matrix(&chart, 8, &fine).unwrap();
        let defect = gb.orthonormality_defect(&g_fine.gram);
        assert!(defect < 1e-7, "defect {defect}");
    }

    #[test]
    fn non_positive_tol_rejected() {
        let chart = chart_circle();
        let gb = gram_matrix(&chart, 1, &rule_for(&chart, 1, None)).unwrap();
        assert!(orthonormalize(&gb, 0.0).is_err());
    }
}
