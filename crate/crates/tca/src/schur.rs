//! The ring Λ of symmetric functions in the Schur basis.
//!
//! - [`lr_coefficient`]: c^ν_{λμ} by exhaustive enumeration of
//!   Littlewood–Richardson skew tableaux (column-strict, row-weak, lattice
//!   reverse reading word), memoized by (λ, μ, ν);
//! - [`SchurElement::mul`] (via `&a * &b`): the bilinear extension of
//!   s_λ · s_μ = Σ_ν c^ν_{λμ} s_ν;
//! - [`SchurElement::star`]: the involution s_λ ↦ (−1)^{|λ|} s_{λ†};
//! - [`dim_schur`]: dim S_λ(C^n) by the hook content formula.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use crate::partitions::{partitions_of, Partition};
use crate::{int_to_json, Int};

/// A finitely supported integer combination of Schur basis symbols s_λ.
///
/// Stored coefficients are never zero; terms iterate in the canonical
/// partition order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurElement {
    terms: BTreeMap<Partition, Int>,
}

impl SchurElement {
    pub fn zero() -> Self {
        SchurElement::default()
    }

    /// The basis element s_λ.
    pub fn basis(lam: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lam, Int::one());
        SchurElement { terms }
    }

    /// The unit s_∅ of the ring.
    pub fn one() -> Self {
        SchurElement::basis(Partition::empty())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Int)>>(iter: I) -> Self {
        let mut out = SchurElement::zero();
        for (lam, c) in iter {
            out.add_term(lam, c);
        }
        out
    }

    pub fn add_term(&mut self, lam: Partition, c: Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lam).or_insert_with(Int::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry present");
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Int)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> Int {
        self.terms.get(lam).cloned().unwrap_or_else(Int::zero)
    }

    /// Maximum |λ| over the support, or 0 when zero.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|l| l.size()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Int) -> SchurElement {
        if c.is_zero() {
            return SchurElement::zero();
        }
        SchurElement {
            terms: self
                .terms
                .iter()
                .map(|(l, v)| (l.clone(), v * c))
                .collect(),
        }
    }

    /// The star involution, extended linearly: s_λ ↦ (−1)^{|λ|} s_{λ†}.
    pub fn star(&self) -> SchurElement {
        SchurElement::from_terms(self.terms.iter().map(|(lam, c)| {
            let sign = if lam.size() % 2 == 0 {
                Int::one()
            } else {
                -Int::one()
            };
            (lam.transpose(), sign * c)
        }))
    }

    /// JSON rendering: array of {"partition": [...], "coeff": n}.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(lam, c)| {
                    serde_json::json!({
                        "partition": lam,
                        "coeff": int_to_json(c),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{}*", a)?;
            }
            write!(f, "s{}", lam)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for &SchurElement {
    type Output = SchurElement;
    fn add(self, rhs: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        for (lam, c) in rhs.terms.iter() {
            out.add_term(lam.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SchurElement {
    type Output = SchurElement;
    fn sub(self, rhs: &SchurElement) -> SchurElement {
        self + &(-rhs)
    }
}

impl Neg for &SchurElement {
    type Output = SchurElement;
    fn neg(self) -> SchurElement {
        SchurElement {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), -c))
                .collect(),
        }
    }
}

impl Mul for &SchurElement {
    type Output = SchurElement;
    fn mul(self, rhs: &SchurElement) -> SchurElement {
        let mut out = SchurElement::zero();
        for (lam, a) in self.terms.iter() {
            for (mu, b) in rhs.terms.iter() {
                let ab = a * b;
                for nu in product_support(lam, mu) {
                    let c = lr_coefficient(lam, mu, &nu);
                    if c > 0 {
                        out.add_term(nu, &ab * Int::from(c));
                    }
                }
            }
        }
        out
    }
}

/// Candidate partitions ν with possibly nonzero c^ν_{λμ}.
fn product_support(lam: &Partition, mu: &Partition) -> Vec<Partition> {
    partitions_of(lam.size() + mu.size())
        .into_iter()
        .filter(|nu| {
            nu.len() <= lam.len() + mu.len()
                && nu.part(0) <= lam.part(0) + mu.part(0)
                && nu.contains(lam)
                && nu.contains(mu)
        })
        .collect()
}

type LrKey = (Partition, Partition, Partition);

fn lr_memo() -> &'static RwLock<HashMap<LrKey, u64>> {
    static MEMO: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The Littlewood–Richardson coefficient c^ν_{λμ}: the number of LR skew
/// tableaux of shape ν/λ and content μ. Zero when |ν| ≠ |λ| + |μ| or λ ⊄ ν.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lam.size() + mu.size() || !nu.contains(lam) || !nu.contains(mu) {
        return 0;
    }
    if mu.is_empty() {
        return 1; // shape ν/λ with empty content forces ν = λ
    }
    let key = (lam.clone(), mu.clone(), nu.clone());
    if let Some(&c) = lr_memo().read().unwrap().get(&key) {
        return c;
    }
    let c = count_lr_tableaux(lam, mu, nu);
    lr_memo().write().unwrap().insert(key, c);
    c
}

/// Backtracking over the cells of ν/λ in reverse reading order (rows top to
/// bottom, each row right to left), which is exactly the order in which the
/// reverse reading word is built, so the lattice condition can be checked
/// per placement.
fn count_lr_tableaux(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let rows = nu.len();
    let mut cells = Vec::new();
    for r in 0..rows {
        let lo = lam.part(r);
        let hi = nu.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let k = mu.len();
    let mut remaining: Vec<usize> = (0..k).map(|i| mu.part(i)).collect();
    let mut placed: Vec<usize> = vec![0; k];
    // filling[r][c - lam_r] once assigned
    let mut filling: Vec<Vec<usize>> = (0..rows)
        .map(|r| vec![0; nu.part(r) - lam.part(r)])
        .collect();
    let mut count = 0u64;
    backtrack(
        &cells,
        0,
        lam,
        &mut remaining,
        &mut placed,
        &mut filling,
        &mut count,
    );
    count
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    cells: &[(usize, usize)],
    idx: usize,
    lam: &Partition,
    remaining: &mut Vec<usize>,
    placed: &mut Vec<usize>,
    filling: &mut Vec<Vec<usize>>,
    count: &mut u64,
) {
    if idx == cells.len() {
        *count += 1;
        return;
    }
    let (r, c) = cells[idx];
    let get = |filling: &Vec<Vec<usize>>, rr: usize, cc: usize| -> Option<usize> {
        if cc < lam.part(rr) {
            return None;
        }
        let row = &filling[rr];
        let j = cc - lam.part(rr);
        if j < row.len() && row[j] != 0 {
            Some(row[j])
        } else {
            None
        }
    };
    // row-weak bound from the right neighbor (already placed)
    let max_v = get(filling, r, c + 1).unwrap_or(usize::MAX);
    // column-strict bound from the cell above (already placed)
    let min_v = if r > 0 {
        get(filling, r - 1, c).map(|v| v + 1).unwrap_or(1)
    } else {
        1
    };
    for v in min_v..=max_v.min(remaining.len()) {
        if remaining[v - 1] == 0 {
            continue;
        }
        // lattice prefix: after placing v, #v ≤ #(v−1)
        if v > 1 && placed[v - 1] + 1 > placed[v - 2] {
            continue;
        }
        remaining[v - 1] -= 1;
        placed[v - 1] += 1;
        filling[r][c - lam.part(r)] = v;
        backtrack(cells, idx + 1, lam, remaining, placed, filling, count);
        filling[r][c - lam.part(r)] = 0;
        placed[v - 1] -= 1;
        remaining[v - 1] += 1;
    }
}

/// dim S_λ(C^n) by the hook content formula:
/// ∏_{(i,j)∈λ} (n + j − i) / h(i,j), with 0-indexed boxes.
pub fn dim_schur(lam: &Partition, n: usize) -> Int {
    if lam.len() > n {
        return Int::zero();
    }
    let t = lam.transpose();
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..lam.len() {
        for j in 0..lam.part(i) {
            num *= Int::from(n as i64 + j as i64 - i as i64);
            let hook = lam.part(i) - j + t.part(j) - i - 1;
            den *= Int::from(hook as u64);
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero(), "hook content division is exact");
    q
}
