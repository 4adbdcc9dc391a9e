//! Generator sets of Bethe subalgebras, the algebras they generate, and exact certificates.

use serde::Serialize;

use crate::exactring::scalar::{self, Scalar};
use crate::exactring::{principal_minors_positive, ScalarMatrix, Span};
use crate::yangrep::Representation;

use super::point::BlowupPoint;
use super::BetheError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "source", content = "power")]
pub enum GeneratorTag {
    /// Coefficient of `u^k` in the quantum-determinant numerator.
    QdetCoeff(usize),
    /// Coefficient of `u^k` in `u^n tr C T(u)`.
    TraceCoeff(usize),
    /// `½ y0 h + y1 t21^{(1)} + y2 t12^{(1)}`.
    Exceptional,
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    dim: usize,
    items: Vec<(GeneratorTag, ScalarMatrix)>,
}

impl GeneratorSet {
    pub fn new(dim: usize, items: Vec<(GeneratorTag, ScalarMatrix)>) -> Self {
        GeneratorSet { dim, items }
    }

    pub fn from_matrices(mats: Vec<ScalarMatrix>) -> Self {
        let dim = mats.first().map_or(0, ScalarMatrix::rows);
        GeneratorSet::new(dim, mats.into_iter().enumerate().map(|(k, m)| (GeneratorTag::TraceCoeff(k), m)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn items(&self) -> &[(GeneratorTag, ScalarMatrix)] {
        &self.items
    }

    pub fn matrices(&self) -> impl Iterator<Item = &ScalarMatrix> {
        self.items.iter().map(|(_, m)| m)
    }

    pub fn get(&self, tag: GeneratorTag) -> Option<&ScalarMatrix> {
        self.items.iter().find(|(t, _)| *t == tag).map(|(_, m)| m)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn without_exceptional(&self) -> Self {
        GeneratorSet {
            dim: self.dim,
            items: self.items.iter().filter(|(t, _)| *t != GeneratorTag::Exceptional).cloned().collect(),
        }
    }

    /// Compression to the coordinates `idx` (exact for operators preserving the complementary flag).
    pub fn restrict(&self, idx: &[usize]) -> Self {
        GeneratorSet {
            dim: idx.len(),
            items: self.items.iter().map(|(t, m)| (*t, m.submatrix(idx, idx))).collect(),
        }
    }

    pub fn conjugate(&self, g: &ScalarMatrix, g_inv: &ScalarMatrix) -> Self {
        GeneratorSet {
            dim: self.dim,
            items: self.items.iter().map(|(t, m)| (*t, g.mul(m).mul(g_inv))).collect(),
        }
    }

    /// Linear span of the generators, as an echelon basis over flattened matrices.
    pub fn span(&self) -> Span {
        let mut s = Span::new(self.dim * self.dim);
        for m in self.matrices() {
            s.insert(m.data());
        }
        s
    }
}

/// Generators of `B(C)` (plus the exceptional element at a scalar class) on a module.
pub fn bethe_generator_matrices(rep: &Representation<Scalar>, p: &BlowupPoint) -> GeneratorSet {
    let n = rep.module().num_factors();
    let mut items = Vec::new();
    for (k, m) in rep.qdet().lower_coeffs().into_iter().enumerate() {
        items.push((GeneratorTag::QdetCoeff(k), m));
    }
    let trace = rep.trace(p.matrix()).cleared(n);
    for k in 0..=n {
        items.push((GeneratorTag::TraceCoeff(k), trace.coeff(k)));
    }
    if p.is_scalar() {
        items.push((GeneratorTag::Exceptional, exceptional_generator(rep, &p.y())));
    }
    GeneratorSet::new(rep.dim(), items)
}

/// `½ y0 (t11^{(1)} − t22^{(1)}) + y1 t21^{(1)} + y2 t12^{(1)}`.
pub fn exceptional_generator(rep: &Representation<Scalar>, y: &[Scalar; 3]) -> ScalarMatrix {
    let h = rep.t_coeff(1, 1, 1).sub(&rep.t_coeff(2, 2, 1));
    h.scale(&(&y[0] * scalar::ratio(1, 2)))
        .add(&rep.t_coeff(2, 1, 1).scale(&y[1]))
        .add(&rep.t_coeff(1, 2, 1).scale(&y[2]))
}

pub fn commutativity_check(g: &GeneratorSet) -> bool {
    let mats: Vec<&ScalarMatrix> = g.matrices().collect();
    (0..mats.len()).all(|i| (0..i).all(|j| mats[i].commutes_with(mats[j])))
}

/// Basis of the unital algebra generated by a set of matrices.
#[derive(Clone, Debug)]
pub struct AlgebraBasis {
    dim: usize,
    elements: Vec<ScalarMatrix>,
}

impl AlgebraBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ScalarMatrix] {
        &self.elements
    }

    pub fn module_dim(&self) -> usize {
        self.dim
    }
}

/// Words in the generators, grown breadth-first from the identity until the span stabilizes.
pub fn algebra_closure(g: &GeneratorSet) -> AlgebraBasis {
    let dim = g.dim();
    let gens: Vec<&ScalarMatrix> = g.matrices().filter(|m| !m.is_zero()).collect();
    let mut span = Span::new(dim * dim);
    let id = ScalarMatrix::identity(dim);
    span.insert(id.data());
    let mut elements = vec![id];
    let mut frontier = 0;
    while frontier < elements.len() && !span.is_full() {
        let base = elements[frontier].clone();
        frontier += 1;
        for gen in &gens {
            let w = gen.mul(&base);
            if span.insert(w.data()) {
                elements.push(w);
            }
        }
    }
    AlgebraBasis { dim, elements }
}

/// Dimension of `span{M v : M in the algebra}`.
pub fn krylov_dim(a: &AlgebraBasis, v: &[Scalar]) -> usize {
    let mut span = Span::new(a.dim);
    for m in a.elements() {
        span.insert(&m.mat_vec(v));
        if span.is_full() {
            break;
        }
    }
    span.dim()
}

pub fn cyclic_check(a: &AlgebraBasis, v: &[Scalar]) -> bool {
    v.len() == a.dim && krylov_dim(a, v) == a.dim
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Simple,
    NotSimple,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumCertificate {
    pub commutative: bool,
    pub closure_dim: usize,
    pub module_dim: usize,
    pub self_adjoint: bool,
    pub verdict: Verdict,
}

/// `gram · G = Gᵀ · gram` for every generator.
pub fn self_adjoint_check(g: &GeneratorSet, gram: &ScalarMatrix) -> bool {
    g.matrices().all(|m| gram.mul(m) == m.transpose().mul(gram))
}

/// Exact simple-spectrum certificate for a generator set and a positive-definite form.
pub fn certify_generators(g: &GeneratorSet, gram: &ScalarMatrix) -> Result<SpectrumCertificate, BetheError> {
    if gram.rows() != g.dim() || gram.cols() != g.dim() {
        return Err(BetheError::Dimension(format!("gram is {}x{}, module has dim {}", gram.rows(), gram.cols(), g.dim())));
    }
    if !principal_minors_positive(gram)? {
        return Err(BetheError::NotPositiveDefinite);
    }
    let commutative = commutativity_check(g);
    let closure_dim = algebra_closure(g).len();
    let self_adjoint = self_adjoint_check(g, gram);
    let module_dim = g.dim();
    // a commuting family of self-adjoint operators is simultaneously diagonalizable, so the
    // algebra dimension counts the joint eigenspaces
    let verdict = match (commutative && self_adjoint, closure_dim == module_dim) {
        (true, true) => Verdict::Simple,
        (true, false) => Verdict::NotSimple,
        _ => Verdict::Undecided,
    };
    Ok(SpectrumCertificate { commutative, closure_dim, module_dim, self_adjoint, verdict })
}

pub fn simple_spectrum_certificate(
    rep: &Representation<Scalar>,
    p: &BlowupPoint,
    gram: &ScalarMatrix,
) -> Result<SpectrumCertificate, BetheError> {
    certify_generators(&bethe_generator_matrices(rep, p), gram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::scalar::int;
    use crate::exactring::ScalarMatrix;

    fn smat(rows: &[&[i64]]) -> ScalarMatrix {
        ScalarMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn non_commuting_pair() {
        let g = GeneratorSet::from_matrices(vec![smat(&[&[0, 1], &[0, 0]]), smat(&[&[0, 0], &[1, 0]])]);
        assert!(!commutativity_check(&g));
        let single = GeneratorSet::from_matrices(vec![smat(&[&[0, 1], &[0, 0]])]);
        assert!(commutativity_check(&single));
    }

    #[test]
    fn closure_dimensions() {
        let id = GeneratorSet::from_matrices(vec![ScalarMatrix::identity(3)]);
        assert_eq!(algebra_closure(&id).len(), 1);
        let d = GeneratorSet::from_matrices(vec![ScalarMatrix::from_diagonal(vec![int(1), int(2), int(3)])]);
        let a = algebra_closure(&d);
        assert_eq!(a.len(), 3);
        assert!(cyclic_check(&a, &[int(1), int(1), int(1)]));
        assert!(!cyclic_check(&a, &[int(0), int(0), int(0)]));
        assert!(!cyclic_check(&a, &[int(1), int(0), int(1)]));
    }

    #[test]
    fn certificate_needs_positive_form() {
        let d = GeneratorSet::from_matrices(vec![ScalarMatrix::from_diagonal(vec![int(1), int(2)])]);
        let bad = ScalarMatrix::from_diagonal(vec![int(1), int(-1)]);
        assert_eq!(certify_generators(&d, &bad).unwrap_err(), BetheError::NotPositiveDefinite);
        let c = certify_generators(&d, &ScalarMatrix::identity(2)).unwrap();
        assert_eq!(c.verdict, Verdict::Simple);
    }
}
