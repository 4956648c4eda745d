use super::bitvec::BitVec;
use super::matrix::BitMatrix;
use super::LinalgError;

/// A linear subspace of F₂^n, stored by a basis in reduced row-echelon form.
///
/// The RREF basis is canonical, so two subspaces are equal exactly when their
/// bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: BitMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: BitMatrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: BitMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `spanning`.
    pub fn from_matrix(ambient: usize, mut spanning: BitMatrix) -> Self {
        assert_eq!(spanning.cols(), ambient, "spanning rows have wrong length");
        let pivots = spanning.rref();
        let rows: Vec<BitVec> = (0..pivots.len()).map(|r| spanning.row(r)).collect();
        Subspace {
            ambient,
            basis: BitMatrix::from_rows(ambient, &rows),
            pivots,
        }
    }

    pub fn from_vectors(ambient: usize, vectors: &[BitVec]) -> Self {
        Subspace::from_matrix(ambient, BitMatrix::from_rows(ambient, vectors))
    }

    /// Coordinate subspace spanned by the given standard basis vectors.
    pub fn coordinate(ambient: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        let vectors: Vec<BitVec> = coords
            .into_iter()
            .map(|c| BitVec::from_indices(ambient, [c]))
            .collect();
        Subspace::from_vectors(ambient, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<BitVec> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: usize) -> Result<(), LinalgError> {
        if self.ambient == other {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other,
            })
        }
    }

    /// Reduces `v` against the basis; the result is zero at every pivot
    /// column and differs from `v` by an element of the subspace.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut out = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out.get(p) {
                let row = self.basis.row_words(i);
                for (a, b) in out.words_mut().iter_mut().zip(row) {
                    *a ^= *b;
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other.ambient)?;
        Ok((0..other.dim()).all(|i| self.contains_vector(&other.basis.row(i))))
    }

    /// Coefficients of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &BitVec) -> Option<BitVec> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(BitVec::from_bools(
            &self.pivots.iter().map(|&p| v.get(p)).collect::<Vec<_>>(),
        ))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other.ambient)?;
        Ok(Subspace::from_matrix(
            self.ambient,
            self.basis.stack(&other.basis),
        ))
    }

    /// Intersection by Zassenhaus: reduce `[a | a]` over `[b | 0]`; rows
    /// whose left half vanishes carry the intersection in the right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other.ambient)?;
        let n = self.ambient;
        let top = self.basis.hconcat(&self.basis);
        let bottom = other.basis.hconcat(&BitMatrix::zeros(other.dim(), n));
        let mut m = top.stack(&bottom);
        let rank = m.eliminate(n, false).len();
        let rows: Vec<BitVec> = (rank..m.rows())
            .map(|r| {
                let full = m.row(r);
                BitVec::from_indices(n, full.ones().filter(|&c| c >= n).map(|c| c - n))
            })
            .collect();
        Ok(Subspace::from_vectors(n, &rows))
    }

    /// `{x : m·x ∈ self}`; `m` must map into this subspace's ambient space.
    pub fn preimage(&self, m: &BitMatrix) -> Result<Subspace, LinalgError> {
        self.check_ambient(m.rows())?;
        // columns of m reduced modulo self; x is in the preimage iff the
        // reduced image vanishes
        let mut reduced = m.transpose();
        for c in 0..reduced.rows() {
            let r = self.reduce(&reduced.row(c));
            reduced.set_row(c, &r);
        }
        Ok(reduced.transpose().kernel())
    }

    /// `{m·a : a ∈ self}`.
    pub fn image_under(&self, m: &BitMatrix) -> Result<Subspace, LinalgError> {
        self.check_ambient(m.cols())?;
        Ok(Subspace::from_matrix(
            m.rows(),
            self.basis.mul(&m.transpose()),
        ))
    }

    /// `dim self − dim sub`, after checking that `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize, LinalgError> {
        if !self.contains(sub)? {
            return Err(LinalgError::NotContained);
        }
        Ok(self.dim() - sub.dim())
    }
}

/// The quotient `numerator / denominator` of two nested subspaces, with a
/// canonical basis of representatives.
///
/// Representatives are the RREF basis of the numerator reduced modulo the
/// denominator, so they vanish on the denominator's pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    numerator: Subspace,
    denominator: Subspace,
    representatives: Subspace,
}

impl Subquotient {
    pub fn new(numerator: Subspace, denominator: Subspace) -> Result<Self, LinalgError> {
        if !numerator.contains(&denominator)? {
            return Err(LinalgError::NotContained);
        }
        let reduced: Vec<BitVec> = numerator
            .basis_vectors()
            .iter()
            .map(|v| denominator.reduce(v))
            .collect();
        let representatives = Subspace::from_vectors(numerator.ambient_dim(), &reduced);
        Ok(Subquotient {
            numerator,
            denominator,
            representatives,
        })
    }

    pub fn dim(&self) -> usize {
        self.representatives.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.numerator.ambient_dim()
    }

    pub fn numerator(&self) -> &Subspace {
        &self.numerator
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    /// Canonical representative vectors, one per basis class.
    pub fn representatives(&self) -> Vec<BitVec> {
        self.representatives.basis_vectors()
    }

    /// Coordinates of the class of `v`, or `None` if `v` is not in the numerator.
    pub fn coordinates(&self, v: &BitVec) -> Option<BitVec> {
        if !self.numerator.contains_vector(v) {
            return None;
        }
        self.representatives.coordinates(&self.denominator.reduce(v))
    }

    /// Matrix of the map induced by `f` from `source` to `self`, in the
    /// canonical bases: column `k` holds the coordinates of `f(rep_k)`.
    pub fn induced_from(
        &self,
        source: &Subquotient,
        mut f: impl FnMut(&BitVec) -> BitVec,
    ) -> Result<BitMatrix, LinalgError> {
        let mut columns = Vec::with_capacity(source.dim());
        for rep in source.representatives() {
            let image = f(&rep);
            if image.len() != self.ambient_dim() {
                return Err(LinalgError::DimensionMismatch {
                    expected: self.ambient_dim(),
                    found: image.len(),
                });
            }
            columns.push(self.coordinates(&image).ok_or(LinalgError::NotAChainMap)?);
        }
        Ok(BitMatrix::from_columns(self.dim(), &columns))
    }
}
