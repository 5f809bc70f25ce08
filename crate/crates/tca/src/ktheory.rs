//! K-theory: dual bases on Grassmannians, the decomposition
//! K(A) ≅ ⊕_{r=0}^d Λ ⊗ K(Gr_r(C^d)), and the Fourier involution.
//!
//! On Y = Gr_r(E) the classes u_λ = [S_λ(Q*)], λ ⊆ r × (d−r), form a
//! Z-basis of K(Y); the functionals v_β(M) = χ(Rπ_*(S_{β†}(R) ⊗ M)) pair
//! with them diagonally, v_β(u_α) = (−1)^{|α|} δ_{αβ}, which is how every
//! bundle expression here is expanded in coordinates.
//!
//! K(A) is a free Λ-module with basis [K_{r,λ}] ↔ [S_λ(Q_r)]; a [`KClass`]
//! stores one Schur-polynomial coefficient per basis cell. The Fourier
//! transform acts by the star involution on Λ coefficients and by
//! Grothendieck–Serre duality transported through Gr_r(E) ≅ Gr_{d−r}(E*) on
//! the K(Gr) factors, reversing blocks r ↦ d−r. The duality normalization
//! is pinned by two anchors: fourier ∘ fourier = id and fourier([C]) = [A].

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bott::{bwb_pushforward, BottOutcome};
use crate::partitions::{partitions_in_rectangle, Partition, Weight};
use crate::schur::SchurElement;
use crate::{Error, Int, Result};

/// An element of K(Gr_r(C^d)) in the dual basis u_λ = [S_λ(Q*)], stored as
/// an integer vector over the canonically ordered λ ⊆ r × (d−r).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrKClass {
    d: usize,
    r: usize,
    coeffs: Vec<Int>,
}

impl GrKClass {
    pub fn zero(d: usize, r: usize) -> Self {
        let size = partitions_in_rectangle(r, d - r).len();
        GrKClass {
            d,
            r,
            coeffs: vec![Int::zero(); size],
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// The basis class u_λ = [S_λ(Q*)].
    pub fn basis(d: usize, r: usize, lam: &Partition) -> Result<Self> {
        let index = rectangle_index(d, r, lam)?;
        let mut out = GrKClass::zero(d, r);
        out.coeffs[index] = Int::one();
        Ok(out)
    }
}

fn rectangle_index(d: usize, r: usize, lam: &Partition) -> Result<usize> {
    partitions_in_rectangle(r, d - r)
        .iter()
        .position(|p| p == lam)
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "partition {} does not fit the {} x {} rectangle",
                lam,
                r,
                d - r
            ))
        })
}

/// Weyl dimension of the rational GL_d representation with highest weight
/// `w` (weakly decreasing, entries of any sign):
/// ∏_{i<j} (w_i − w_j + j − i) / (j − i).
fn weyl_dim(w: &[i64]) -> Int {
    let d = w.len();
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..d {
        for j in (i + 1)..d {
            num *= Int::from(w[i] - w[j] + (j - i) as i64);
            den *= Int::from((j - i) as i64);
        }
    }
    let (q, rem) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(rem.is_zero(), "Weyl dimension is an integer");
    q
}

/// A formal integer combination of bundle classes S_a(Q) ⊗ S_b(R) on
/// Gr_r(C^d), with a and b weakly decreasing integer weights of lengths r
/// and d − r.
#[derive(Clone, Debug)]
struct BundleExpr {
    d: usize,
    r: usize,
    terms: Vec<(Vec<i64>, Vec<i64>, Int)>,
}

impl BundleExpr {
    fn new(d: usize, r: usize) -> Self {
        BundleExpr {
            d,
            r,
            terms: Vec::new(),
        }
    }

    fn push(&mut self, q_weight: Vec<i64>, r_weight: Vec<i64>, coeff: Int) {
        debug_assert_eq!(q_weight.len(), self.r);
        debug_assert_eq!(r_weight.len(), self.d - self.r);
        if !coeff.is_zero() {
            self.terms.push((q_weight, r_weight, coeff));
        }
    }

    /// χ(Rπ_*( S_{β†}(R) ⊗ self )) ∈ K(X) = Z, through Borel–Weil–Bott.
    ///
    /// The product on the R-side is Littlewood–Richardson after shifting
    /// the weight into partition range; S_τ(R) vanishes beyond rank d − r.
    fn pair_with(&self, beta: &Partition) -> Int {
        let rk_r = self.d - self.r;
        let beta_t = beta.transpose();
        debug_assert!(beta_t.len() <= rk_r, "β† must fit the subbundle rank");
        let s_beta_t = SchurElement::basis(beta_t);
        let mut chi = Int::zero();
        for (q_weight, r_weight, coeff) in &self.terms {
            let shift = (-r_weight.iter().copied().min().unwrap_or(0)).max(0);
            let shifted: Vec<usize> = r_weight
                .iter()
                .map(|&x| (x + shift) as usize)
                .collect();
            let shifted = Partition::new(shifted).expect("weights are weakly decreasing");
            let product = &s_beta_t * &SchurElement::basis(shifted);
            for (tau, c) in product.terms() {
                if tau.len() > rk_r {
                    continue;
                }
                let tau_weight: Vec<i64> =
                    (0..rk_r).map(|k| tau.part(k) as i64 - shift).collect();
                let push = bwb_pushforward(
                    &Weight::new(q_weight.clone()),
                    &Weight::new(tau_weight),
                    self.d,
                )
                .expect("lengths match by construction");
                if let BottOutcome::Nonzero { sorted, steps } = push {
                    let dim = weyl_dim(sorted.entries());
                    let sign = if steps % 2 == 0 {
                        Int::one()
                    } else {
                        -Int::one()
                    };
                    chi += coeff * c * sign * dim;
                }
            }
        }
        chi
    }

    /// Coordinates in the u_λ basis: coeff_β = (−1)^{|β|} v_β(self).
    fn u_coordinates(&self) -> Vec<Int> {
        partitions_in_rectangle(self.r, self.d - self.r)
            .iter()
            .map(|beta| {
                let sign = if beta.size() % 2 == 0 {
                    Int::one()
                } else {
                    -Int::one()
                };
                sign * self.pair_with(beta)
            })
            .collect()
    }
}

/// The dual-basis pairing matrix on Gr_r(C^d): entry (β, α) is the Euler
/// characteristic Σ_j (−1)^j [R^j π_*(S_α(Q*) ⊗ S_{β†}(R))]. By the dual
/// basis theorem it is diagonal with entries (−1)^{|α|}.
pub fn pairing_matrix(d: usize, r: usize) -> Result<Vec<Vec<Int>>> {
    if r > d {
        return Err(Error::InvalidArgument(format!(
            "r = {} exceeds d = {}",
            r, d
        )));
    }
    let basis = partitions_in_rectangle(r, d - r);
    let mut rows = Vec::with_capacity(basis.len());
    for beta in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for alpha in &basis {
            let mut expr = BundleExpr::new(d, r);
            expr.push(
                alpha.padded(r).dual().entries().to_vec(),
                vec![0; d - r],
                Int::one(),
            );
            row.push(expr.pair_with(beta));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Grothendieck–Serre duality transported through Gr_r(E) ≅ Gr_{d−r}(E*):
/// [F] ↦ (−1)^{dim Y} [F^∨ ⊗ ω_Y] on the dual Grassmannian, re-expanded in
/// its u basis. An involution, verified by the anchor tests.
pub fn serre_dual_gr(c: &GrKClass) -> GrKClass {
    let d = c.d;
    let r = c.r;
    let r2 = d - r; // quotient rank on the target Gr_{d−r}(E*)
    let dim_y = r * (d - r);
    let sign = if dim_y.is_multiple_of(2) {
        Int::one()
    } else {
        -Int::one()
    };
    let source_basis = partitions_in_rectangle(r, d - r);
    let mut expr = BundleExpr::new(d, r2);
    for (alpha, coeff) in source_basis.iter().zip(&c.coeffs) {
        if coeff.is_zero() {
            continue;
        }
        // u_α = [S_α(Q*)] on Y corresponds to [S_α(R')] on Y'; dualizing and
        // twisting by ω_{Y'} = (det R')^{d−r} ⊗ (det Q')^{−r} gives
        // Q'-weight (−r, …, −r) and R'-weight (−α_r, …, −α_1) + (d−r).
        let r_weight: Vec<i64> = alpha
            .padded(r)
            .dual()
            .entries()
            .iter()
            .map(|&x| x + (d - r) as i64)
            .collect();
        let q_weight = vec![-(r as i64); r2];
        expr.push(q_weight, r_weight, &sign * coeff);
    }
    GrKClass {
        d,
        r: r2,
        coeffs: expr.u_coordinates(),
    }
}

/// Integer matrix whose column λ holds the u-coordinates of [S_λ(Q)] on
/// Gr_r(C^d); converts the K_{r,λ} cell basis into the dual basis.
fn q_basis_in_u_coordinates(d: usize, r: usize) -> Vec<Vec<Int>> {
    let basis = partitions_in_rectangle(r, d - r);
    let mut columns = Vec::with_capacity(basis.len());
    for lam in &basis {
        let mut expr = BundleExpr::new(d, r);
        expr.push(
            lam.padded(r).entries().to_vec(),
            vec![0; d - r],
            Int::one(),
        );
        columns.push(expr.u_coordinates());
    }
    columns
}

/// Solves the square system with columns `cols` for `target` over the
/// integers; both bases span the same lattice so the solution is integral.
fn solve_integer(cols: &[Vec<Int>], target: &[Int]) -> Result<Vec<Int>> {
    let n = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|row| {
            (0..n)
                .map(|col| BigRational::from_integer(cols[col][row].clone()))
                .collect()
        })
        .collect();
    let mut rhs: Vec<BigRational> = target
        .iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&row| !m[row][col].is_zero())
            .ok_or_else(|| Error::Internal("singular basis matrix".into()))?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].clone();
        let pivot_row = m[col].clone();
        for row in 0..n {
            if row == col || m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &inv;
            for (k, cell) in m[row].iter_mut().enumerate().skip(col) {
                let delta = &factor * &pivot_row[k];
                *cell -= delta;
            }
            let delta = &factor * &rhs[col];
            rhs[row] -= delta;
        }
    }
    (0..n)
        .map(|row| {
            let value = &rhs[row] / &m[row][row];
            if value.is_integer() {
                Ok(value.to_integer())
            } else {
                Err(Error::Internal(
                    "basis change produced a non-integer coefficient".into(),
                ))
            }
        })
        .collect()
}

/// An element of K(A) = ⊕_r Λ ⊗ K(Gr_r(C^d)): one Schur-polynomial
/// coefficient per cell (r, λ ⊆ r × (d−r)), in the [K_{r,λ}] basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KClass {
    d: usize,
    blocks: BTreeMap<usize, BTreeMap<Partition, SchurElement>>,
}

impl KClass {
    pub fn zero(d: usize) -> Self {
        KClass {
            d,
            blocks: BTreeMap::new(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Nonzero blocks, keyed by stratum index r.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, &BTreeMap<Partition, SchurElement>)> {
        self.blocks.iter().map(|(&r, cells)| (r, cells))
    }

    pub fn coefficient(&self, r: usize, lam: &Partition) -> SchurElement {
        self.blocks
            .get(&r)
            .and_then(|cells| cells.get(lam))
            .cloned()
            .unwrap_or_else(SchurElement::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    fn set(&mut self, r: usize, lam: Partition, value: SchurElement) {
        if value.is_zero() {
            return;
        }
        self.blocks.entry(r).or_default().insert(lam, value);
    }

    fn add_to(&mut self, r: usize, lam: &Partition, value: &SchurElement) {
        if value.is_zero() {
            return;
        }
        let cells = self.blocks.entry(r).or_default();
        let sum = match cells.get(lam) {
            Some(existing) => existing + value,
            None => value.clone(),
        };
        if sum.is_zero() {
            cells.remove(lam);
            if cells.is_empty() {
                self.blocks.remove(&r);
            }
        } else {
            cells.insert(lam.clone(), sum);
        }
    }

    pub fn add(&self, other: &KClass) -> KClass {
        assert_eq!(self.d, other.d, "mismatched d");
        let mut out = self.clone();
        for (r, cells) in other.blocks() {
            for (lam, value) in cells {
                out.add_to(r, lam, value);
            }
        }
        out
    }

    /// The Λ-module action: multiply every coefficient by `a`.
    pub fn scale(&self, a: &SchurElement) -> KClass {
        let mut out = KClass::zero(self.d);
        for (r, cells) in self.blocks() {
            for (lam, value) in cells {
                out.add_to(r, lam, &(a * value));
            }
        }
        out
    }

    /// JSON rendering:
    /// {"d": n, "blocks": [{"r": k, "terms": [{"lambda": [...],
    /// "coeff": [{"partition": [...], "coeff": m}]}]}]}.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "d": self.d,
            "blocks": self
                .blocks
                .iter()
                .map(|(&r, cells)| {
                    serde_json::json!({
                        "r": r,
                        "terms": cells
                            .iter()
                            .map(|(lam, value)| {
                                serde_json::json!({
                                    "lambda": lam,
                                    "coeff": value.to_json(),
                                })
                            })
                            .collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    /// Deterministic one-cell-per-line text rendering.
    pub fn render_lines(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".into()];
        }
        let mut lines = Vec::new();
        for (r, cells) in self.blocks() {
            for (lam, value) in cells {
                lines.push(format!("block r={} lambda={}: {}", r, lam, value));
            }
        }
        lines
    }
}

/// The basis class [S_μ(V) ⊗ K_{r,λ}]: block r, cell λ, coefficient s_μ.
pub fn basis_class(r: usize, lam: &Partition, mu_v: &Partition, d: usize) -> Result<KClass> {
    if r > d {
        return Err(Error::InvalidArgument(format!(
            "r = {} exceeds d = {}",
            r, d
        )));
    }
    if !lam.fits_rectangle(r, d - r) {
        return Err(Error::InvalidArgument(format!(
            "lambda = {} does not fit the {} x {} rectangle",
            lam,
            r,
            d - r
        )));
    }
    let mut out = KClass::zero(d);
    out.set(r, lam.clone(), SchurElement::basis(mu_v.clone()));
    Ok(out)
}

/// Zeroes every block except r (the K-theory shadow of RΠ_r).
pub fn project_block(x: &KClass, r: usize) -> KClass {
    let mut out = KClass::zero(x.d);
    if let Some(cells) = x.blocks.get(&r) {
        for (lam, value) in cells {
            out.set(r, lam.clone(), value.clone());
        }
    }
    out
}

/// The Fourier involution on K(A): the star involution on every Λ
/// coefficient, and Serre duality on every K(Gr) factor, sending block r to
/// block d − r.
pub fn fourier(x: &KClass) -> Result<KClass> {
    let d = x.d;
    let mut out = KClass::zero(d);
    for (r, cells) in x.blocks() {
        let source = partitions_in_rectangle(r, d - r);
        let target = partitions_in_rectangle(d - r, r);
        let q_to_u = q_basis_in_u_coordinates(d, r);
        let target_q_to_u = q_basis_in_u_coordinates(d, d - r);
        for (src_idx, lam) in source.iter().enumerate() {
            let coeff = match cells.get(lam) {
                Some(value) => value.star(),
                None => continue,
            };
            // transport the basis class through Serre duality, in u coords
            let dual = serre_dual_gr(&GrKClass {
                d,
                r,
                coeffs: q_to_u[src_idx].clone(),
            });
            let in_target_q = solve_integer(&target_q_to_u, dual.coeffs())?;
            for (t_idx, beta) in target.iter().enumerate() {
                out.add_to(d - r, beta, &coeff.scale(&in_target_q[t_idx]));
            }
        }
    }
    Ok(out)
}
