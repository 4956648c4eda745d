//! Rational Betti numbers and traces of the involution, in exact integer
//! arithmetic.
//!
//! Ranks over ℚ come from fraction-free elimination on sparse integer rows.
//! Entries are tried in `i128` with overflow checks; on overflow the whole
//! elimination is redone with arbitrary-precision integers.
//!
//! The trace of `g` on `H_n(K; ℚ)` is read off the splitting of the chain
//! complex into the ±1 eigen-subcomplexes `C⁺ ⊕ C⁻`: since `g` commutes with
//! the boundary, `H_n = H_n(C⁺) ⊕ H_n(C⁻)` and the trace is the difference of
//! their dimensions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::complex::SimplicialComplex;
use super::involution::InvolutiveComplex;

type SparseRow<T> = Vec<(usize, T)>;

trait Exact: Clone + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero_value(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn magnitude_bits(&self) -> u64;
}

impl Exact for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero_value(&self) -> bool {
        *self == 0
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i128::checked_mul(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i128::checked_sub(*self, *other)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn magnitude_bits(&self) -> u64 {
        128 - u64::from(self.unsigned_abs().leading_zeros())
    }
}

impl Exact for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn magnitude_bits(&self) -> u64 {
        self.bits()
    }
}

/// `a·row − b·pivot`, dropping zeros; `None` on overflow.
fn combine<T: Exact>(a: &T, row: &SparseRow<T>, b: &T, pivot: &SparseRow<T>) -> Option<SparseRow<T>> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, value) = if take_row {
            let v = a.checked_mul(&row[i].1)?;
            i += 1;
            (row[i - 1].0, v)
        } else if take_pivot {
            let v = T::from_i64(0).checked_sub(&b.checked_mul(&pivot[j].1)?)?;
            j += 1;
            (pivot[j - 1].0, v)
        } else {
            let v = a.checked_mul(&row[i].1)?.checked_sub(&b.checked_mul(&pivot[j].1)?)?;
            i += 1;
            j += 1;
            (row[i - 1].0, v)
        };
        if !value.is_zero_value() {
            out.push((col, value));
        }
    }
    Some(out)
}

/// Divides the row by the gcd of its entries.
fn primitive<T: Exact>(row: &mut SparseRow<T>) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.clone();
    for (_, v) in row.iter().skip(1) {
        if g.is_unit() {
            return;
        }
        g = g.gcd_with(v);
    }
    if !g.is_unit() {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

fn rank_generic<T: Exact>(rows: &[SparseRow<i64>]) -> Option<usize> {
    let mut pivots: BTreeMap<usize, SparseRow<T>> = BTreeMap::new();
    for raw in rows {
        let mut row: SparseRow<T> = raw.iter().map(|&(c, v)| (c, T::from_i64(v))).collect();
        row.sort_by_key(|e| e.0);
        while let Some((lead, lead_value)) = row.first().cloned() {
            match pivots.get(&lead) {
                None => {
                    primitive(&mut row);
                    pivots.insert(lead, row);
                    break;
                }
                Some(pivot) => {
                    let p = &pivot[0].1;
                    let g = p.gcd_with(&lead_value);
                    let a = p.div_exact(&g);
                    let b = lead_value.div_exact(&g);
                    let mut next = combine(&a, &row, &b, pivot)?;
                    primitive(&mut next);
                    debug_assert!(next.first().is_none_or(|e| e.0 != lead));
                    // keep the smaller-magnitude leading entry as the pivot
                    if next.first().is_some_and(|e| pivots.get(&e.0).is_some_and(|q| {
                        q[0].1.magnitude_bits() > e.1.magnitude_bits()
                    })) {
                        let col = next[0].0;
                        let old = pivots.insert(col, next).expect("checked above");
                        row = old;
                    } else {
                        row = next;
                    }
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over ℚ of an integer matrix given by sparse rows `(column, value)`.
pub fn integer_rank(rows: &[Vec<(usize, i64)>]) -> usize {
    rank_generic::<i128>(rows).unwrap_or_else(|| {
        rank_generic::<BigInt>(rows).expect("arbitrary precision never overflows")
    })
}

/// Rational Betti numbers from ranks of the integer boundary maps.
pub fn rational_betti(k: &SimplicialComplex) -> Vec<usize> {
    let sizes = k.f_vector();
    // rank of ∂_q equals the rank of its transpose; rows = q-simplices
    let ranks: Vec<usize> = (0..sizes.len())
        .map(|q| if q == 0 { 0 } else { integer_rank(&k.signed_boundary(q)) })
        .collect();
    (0..sizes.len())
        .map(|q| sizes[q] - ranks[q] - ranks.get(q + 1).copied().unwrap_or(0))
        .collect()
}

/// Sign of the permutation sorting `g` applied to the (sorted) simplex.
fn orientation_sign(g: &[usize], simplex: &[usize]) -> i64 {
    let img: Vec<usize> = simplex.iter().map(|&v| g[v]).collect();
    let mut inversions = 0;
    for i in 0..img.len() {
        for j in i + 1..img.len() {
            if img[i] > img[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Eigen-subcomplex `C^{sign}` where `g` acts by `sign = ±1`.
///
/// Basis in degree q: for a free pair `σ ≠ gσ` (σ the smaller index), the
/// chain `σ + sign·ε(σ)·gσ`; for `gσ = σ`, the chain σ itself when
/// `ε(σ) = sign`. Coordinates of an eigen-chain in this basis are its
/// coefficients on the chosen representatives.
/// Representative simplex, with its partner and the partner's coefficient.
type EigenBasisElement = (usize, Option<(usize, i64)>);

struct EigenComplex {
    basis: Vec<Vec<EigenBasisElement>>,
    // coordinate of a representative simplex in its degree
    coordinate: Vec<Vec<Option<usize>>>,
}

impl EigenComplex {
    fn new(ic: &InvolutiveComplex, sign: i64) -> Self {
        let k = ic.complex();
        let g = ic.involution();
        let mut basis = Vec::new();
        let mut coordinate = Vec::new();
        for q in 0..k.levels() {
            let mut b = Vec::new();
            let mut coord = vec![None; k.count(q)];
            for (i, s) in k.simplices(q).iter().enumerate() {
                let j = ic.simplex_image(q, i);
                let eps = orientation_sign(g, s);
                if j == i {
                    if eps == sign {
                        coord[i] = Some(b.len());
                        b.push((i, None));
                    }
                } else if i < j {
                    coord[i] = Some(b.len());
                    b.push((i, Some((j, sign * eps))));
                }
            }
            basis.push(b);
            coordinate.push(coord);
        }
        EigenComplex { basis, coordinate }
    }

    fn dim(&self, q: usize) -> usize {
        self.basis.get(q).map_or(0, Vec::len)
    }

    /// Boundary of each degree-q basis chain, in degree-(q−1) coordinates.
    fn boundary_rows(&self, k: &SimplicialComplex, q: usize) -> Vec<Vec<(usize, i64)>> {
        let signed = k.signed_boundary(q);
        self.basis[q]
            .iter()
            .map(|&(i, partner)| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                let mut add = |idx: usize, scale: i64| {
                    for &(f, c) in &signed[idx] {
                        if let Some(col) = self.coordinate[q - 1][f] {
                            *acc.entry(col).or_insert(0) += scale * c;
                        }
                    }
                };
                add(i, 1);
                if let Some((j, c)) = partner {
                    add(j, c);
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect()
    }

    fn betti(&self, k: &SimplicialComplex) -> Vec<usize> {
        let levels = self.basis.len();
        let ranks: Vec<usize> = (0..levels)
            .map(|q| if q == 0 { 0 } else { integer_rank(&self.boundary_rows(k, q)) })
            .collect();
        (0..levels)
            .map(|q| self.dim(q) - ranks[q] - ranks.get(q + 1).copied().unwrap_or(0))
            .collect()
    }
}

/// Per degree, the Betti numbers of the `+1` and `−1` eigenparts of `H_*(K; ℚ)`.
fn eigen_betti(ic: &InvolutiveComplex) -> (Vec<usize>, Vec<usize>) {
    let k = ic.complex();
    (EigenComplex::new(ic, 1).betti(k), EigenComplex::new(ic, -1).betti(k))
}

/// The rational Betti number `b_n` and the trace of `g` on `H_n(K; ℚ)`.
pub fn rational_homology_trace(ic: &InvolutiveComplex, n: usize) -> (usize, i64) {
    let (plus, minus) = eigen_betti(ic);
    let p = plus.get(n).copied().unwrap_or(0);
    let m = minus.get(n).copied().unwrap_or(0);
    (p + m, p as i64 - m as i64)
}

/// `Σ (−1)^n trace(g | H_n(K; ℚ))`.
pub fn lefschetz_number(ic: &InvolutiveComplex) -> i64 {
    let (plus, minus) = eigen_betti(ic);
    plus.iter()
        .zip(&minus)
        .enumerate()
        .map(|(n, (&p, &m))| {
            let t = p as i64 - m as i64;
            if n % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}
