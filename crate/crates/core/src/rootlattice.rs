//! The odd unimodular lattices `I_{1,n}`, the root systems `E_n` inside them, and
//! classification of anticanonical cycles of (−2)-classes in `I_{1,9}` by the
//! root sublattice they induce in `E_8`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::intmat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootLatticeError {
    #[error("vector length {found} does not match lattice rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("E_n roots are only enumerated for 3 <= n <= 8, got {0}")]
    UnsupportedRank(usize),
    #[error("input is not an orthogonal basis with Gram diag(1,-1,...,-1)")]
    NotOrthonormalBasis,
    #[error("-3 v_0 + sum v_i is not the canonical class")]
    WrongCanonicalClass,
    #[error("vector is not a root (square {square}, expected -2)")]
    NotARoot { square: i64 },
    #[error("basis is not a canonical root basis of E8")]
    NotE8Basis,
    #[error("vector is not in the root lattice spanned by the basis")]
    NotInRootLattice,
    #[error("ambient lattice must be I_(1,9)")]
    WrongAmbient,
    #[error("components do not sum to the anticanonical class")]
    NotAnticanonical,
    #[error("component {index} is not a (-2)-class")]
    NotNegTwoClass { index: usize },
    #[error("components {i} and {j} violate the cycle intersection pattern")]
    BadIntersectionPattern { i: usize, j: usize },
}

/// Coordinates of a vector of `I_{1,n}` in the basis `e_0, …, e_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticeVector(coords)
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![0; rank])
    }

    /// The basis vector `e_i` of a lattice of the given rank.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        LatticeVector(self.0.iter().map(|a| k * a).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Integer combination `Σ c_i v_i`.
    pub fn combination(coeffs: &[i64], vectors: &[LatticeVector]) -> Self {
        let rank = vectors.first().map_or(0, LatticeVector::len);
        coeffs.iter().zip(vectors).fold(LatticeVector::zero(rank), |acc, (c, v)| acc.add(&v.scale(*c)))
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// A lattice `ℤ^rank` with a symmetric nondegenerate integer bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramLattice {
    gram: Vec<Vec<i64>>,
}

impl GramLattice {
    /// `None` if the matrix is not square, not symmetric or degenerate.
    pub fn new(gram: Vec<Vec<i64>>) -> Option<Self> {
        let n = gram.len();
        let square = gram.iter().all(|r| r.len() == n);
        let symmetric = square && (0..n).all(|i| (0..n).all(|j| gram[i][j] == gram[j][i]));
        (n > 0 && symmetric && intmat::determinant(&gram) != 0).then_some(GramLattice { gram })
    }

    /// `I_{1,n}`: Gram matrix `diag(1, -1, …, -1)` of rank `n + 1`.
    pub fn i1n(n: usize) -> Self {
        let rank = n + 1;
        let gram = (0..rank)
            .map(|i| (0..rank).map(|j| if i != j { 0 } else if i == 0 { 1 } else { -1 }).collect())
            .collect();
        GramLattice { gram }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn determinant(&self) -> i128 {
        intmat::determinant(&self.gram)
    }

    pub fn pairing(&self, a: &LatticeVector, b: &LatticeVector) -> i64 {
        let (a, b) = (a.coords(), b.coords());
        let mut s = 0;
        for (i, row) in self.gram.iter().enumerate() {
            for (j, g) in row.iter().enumerate() {
                if *g != 0 {
                    s += a[i] * g * b[j];
                }
            }
        }
        s
    }

    pub fn square(&self, a: &LatticeVector) -> i64 {
        self.pairing(a, a)
    }

    fn check_len(&self, v: &LatticeVector) -> Result<(), RootLatticeError> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(RootLatticeError::DimensionMismatch { expected: self.rank(), found: v.len() })
        }
    }
}

/// `I_{1,n}`.
pub fn make_i1n(n: usize) -> GramLattice {
    GramLattice::i1n(n)
}

/// The canonical class `k_n = -3e_0 + e_1 + … + e_n`.
pub fn canonical_class(n: usize) -> LatticeVector {
    let mut v = vec![1; n + 1];
    v[0] = -3;
    LatticeVector(v)
}

/// All roots of `E_n = k_n^⊥ ⊂ I_{1,n}`, sorted.
///
/// A root `d e_0 + Σ c_i e_i` satisfies `Σ c_i = -3d` and `Σ c_i² = d² + 2`.
/// Cauchy–Schwarz gives `9d² <= n (d² + 2)`, which bounds `d` for `n <= 8`, and
/// every `|c_i| <= sqrt(d² + 2)`.
pub fn en_roots(n: usize) -> Result<Vec<LatticeVector>, RootLatticeError> {
    if !(3..=8).contains(&n) {
        return Err(RootLatticeError::UnsupportedRank(n));
    }
    let n_i = n as i64;
    let mut out = Vec::new();
    let mut d = 0i64;
    loop {
        // 9d² <= n(d² + 2) fails for all larger |d| once it fails here
        if 9 * d * d > n_i * (d * d + 2) {
            break;
        }
        for sign in if d == 0 { vec![1] } else { vec![1, -1] } {
            let d = sign * d;
            let mut coords = vec![0i64; n + 1];
            coords[0] = d;
            fill_root(&mut coords, 1, -3 * d, d * d + 2, &mut out);
        }
        d += 1;
    }
    out.sort();
    Ok(out)
}

fn fill_root(coords: &mut Vec<i64>, i: usize, sum: i64, squares: i64, out: &mut Vec<LatticeVector>) {
    let remaining = (coords.len() - i) as i64;
    if remaining == 0 {
        if sum == 0 && squares == 0 {
            out.push(LatticeVector(coords.clone()));
        }
        return;
    }
    // the rest must satisfy sum² <= remaining · squares
    if squares < 0 || sum * sum > remaining * squares {
        return;
    }
    let mut c = 0i64;
    while c * c <= squares {
        for value in if c == 0 { vec![0] } else { vec![c, -c] } {
            coords[i] = value;
            fill_root(coords, i + 1, sum - value, squares - value * value, out);
        }
        c += 1;
    }
    coords[i] = 0;
}

fn en_pattern(i: usize, j: usize) -> i64 {
    if i == j {
        -2
    } else if (i >= 1 && j >= 1 && i.abs_diff(j) == 1) || (i.min(j) == 0 && i.max(j) == 3) {
        1
    } else {
        0
    }
}

fn has_en_pattern(lattice: &GramLattice, basis: &[LatticeVector]) -> bool {
    (0..basis.len()).all(|i| (0..basis.len()).all(|j| lattice.pairing(&basis[i], &basis[j]) == en_pattern(i, j)))
}

/// The canonical root basis `β_0 = v_0 - v_1 - v_2 - v_3`, `β_i = v_i - v_{i+1}`
/// induced by an orthogonal basis `v_0, …, v_n` of `I_{1,n}` with canonical class `k_n`.
pub fn canonical_root_basis(
    lattice: &GramLattice,
    ortho: &[LatticeVector],
) -> Result<Vec<LatticeVector>, RootLatticeError> {
    let rank = lattice.rank();
    if ortho.len() != rank || rank < 4 {
        return Err(RootLatticeError::NotOrthonormalBasis);
    }
    for v in ortho {
        lattice.check_len(v)?;
    }
    for i in 0..rank {
        for j in 0..rank {
            let expected = if i != j { 0 } else if i == 0 { 1 } else { -1 };
            if lattice.pairing(&ortho[i], &ortho[j]) != expected {
                return Err(RootLatticeError::NotOrthonormalBasis);
            }
        }
    }
    let k = ortho[1..].iter().fold(ortho[0].scale(-3), |acc, v| acc.add(v));
    if k != canonical_class(rank - 1) {
        return Err(RootLatticeError::WrongCanonicalClass);
    }
    let mut basis = vec![ortho[0].sub(&ortho[1]).sub(&ortho[2]).sub(&ortho[3])];
    basis.extend((1..rank - 1).map(|i| ortho[i].sub(&ortho[i + 1])));
    debug_assert!(has_en_pattern(lattice, &basis));
    Ok(basis)
}

/// The canonical root basis induced by the standard basis `e_0, …, e_n`.
pub fn standard_root_basis(n: usize) -> Vec<LatticeVector> {
    let lattice = make_i1n(n);
    let ortho: Vec<LatticeVector> = (0..=n).map(|i| LatticeVector::basis(n + 1, i)).collect();
    canonical_root_basis(&lattice, &ortho).expect("standard basis is orthonormal")
}

/// Reflection `s_α(β) = β + (β·α) α` in the root `α`.
pub fn weyl_reflect(
    lattice: &GramLattice,
    alpha: &LatticeVector,
    beta: &LatticeVector,
) -> Result<LatticeVector, RootLatticeError> {
    lattice.check_len(alpha)?;
    lattice.check_len(beta)?;
    let square = lattice.square(alpha);
    if square != -2 {
        return Err(RootLatticeError::NotARoot { square });
    }
    Ok(beta.add(&alpha.scale(lattice.pairing(beta, alpha))))
}

/// Coefficients of the highest root of `E_8` in a canonical root basis.
pub const HIGHEST_ROOT_COEFFS: [i64; 8] = [3, 2, 4, 6, 5, 4, 3, 2];

/// The highest root `3β_0 + 2β_1 + 4β_2 + 6β_3 + 5β_4 + 4β_5 + 3β_6 + 2β_7` of
/// the `E_8` spanned by the first eight vectors of a canonical root basis.
pub fn highest_root(lattice: &GramLattice, basis: &[LatticeVector]) -> Result<LatticeVector, RootLatticeError> {
    if basis.len() < 8 || basis.iter().any(|b| b.len() != lattice.rank()) || !has_en_pattern(lattice, &basis[..8]) {
        return Err(RootLatticeError::NotE8Basis);
    }
    Ok(LatticeVector::combination(&HIGHEST_ROOT_COEFFS, &basis[..8]))
}

/// The unique integer coefficients of `c` in `basis`.
pub fn root_basis_coords(c: &LatticeVector, basis: &[LatticeVector]) -> Result<Vec<i64>, RootLatticeError> {
    let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.coords().to_vec()).collect();
    intmat::solve_integral(&rows, c.coords()).ok_or(RootLatticeError::NotInRootLattice)
}

/// The ten classes of root sublattices `A_r ⊂ E_8` up to the Weyl group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    R0,
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7Primitive,
    R7Imprimitive,
    R8,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 10] = [
        ClassLabel::R0,
        ClassLabel::R1,
        ClassLabel::R2,
        ClassLabel::R3,
        ClassLabel::R4,
        ClassLabel::R5,
        ClassLabel::R6,
        ClassLabel::R7Primitive,
        ClassLabel::R7Imprimitive,
        ClassLabel::R8,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClassLabel::R0 => "r0",
            ClassLabel::R1 => "r1",
            ClassLabel::R2 => "r2",
            ClassLabel::R3 => "r3",
            ClassLabel::R4 => "r4",
            ClassLabel::R5 => "r5",
            ClassLabel::R6 => "r6",
            ClassLabel::R7Primitive => "r7-primitive",
            ClassLabel::R7Imprimitive => "r7-imprimitive",
            ClassLabel::R8 => "r8",
        }
    }

    fn from_rank(rank: usize, primitive: bool) -> ClassLabel {
        match rank {
            0 => ClassLabel::R0,
            1 => ClassLabel::R1,
            2 => ClassLabel::R2,
            3 => ClassLabel::R3,
            4 => ClassLabel::R4,
            5 => ClassLabel::R5,
            6 => ClassLabel::R6,
            7 if primitive => ClassLabel::R7Primitive,
            7 => ClassLabel::R7Imprimitive,
            _ => ClassLabel::R8,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootSublatticeClass {
    pub rank: usize,
    /// Whether the sublattice equals its saturation in `E_8`.
    pub primitive: bool,
    /// Index of the sublattice in its saturation.
    pub index: i64,
    pub label: ClassLabel,
}

/// Coordinates in `E_8` of a class `c ∈ k_9^⊥ ⊂ I_{1,9}` modulo `ℤ k_9`.
pub fn e8_coords(c: &LatticeVector) -> Result<[i64; 8], RootLatticeError> {
    let b = root_basis_coords(c, &standard_root_basis(9))?;
    // -k_9 has coordinates (3,2,4,6,5,4,3,2,1); subtract the multiple that kills β_8
    let mut out = [0i64; 8];
    for i in 0..8 {
        out[i] = b[i] - b[8] * HIGHEST_ROOT_COEFFS[i];
    }
    Ok(out)
}

/// Classifies a cycle `D_0, …, D_r` of (−2)-classes in `I_{1,9}` summing to
/// `-k_9` by the root sublattice `span(D_i) / ℤ D` of `E_8`.
///
/// Conventions: `r = 0` only requires `D_0 = -k_9`; `r = 1` requires
/// `D_0 · D_1 = 2`; `r >= 2` requires consecutive components (cyclically) to
/// meet once and all other pairs not at all.
pub fn classify_boundary(
    components: &[LatticeVector],
    ambient: &GramLattice,
) -> Result<RootSublatticeClass, RootLatticeError> {
    if *ambient != make_i1n(9) {
        return Err(RootLatticeError::WrongAmbient);
    }
    if components.is_empty() {
        return Err(RootLatticeError::NotAnticanonical);
    }
    for c in components {
        ambient.check_len(c)?;
    }
    let total = components.iter().fold(LatticeVector::zero(10), |acc, c| acc.add(c));
    if total != canonical_class(9).neg() {
        return Err(RootLatticeError::NotAnticanonical);
    }
    let r = components.len() - 1;
    if r == 0 {
        return Ok(RootSublatticeClass { rank: 0, primitive: true, index: 1, label: ClassLabel::R0 });
    }
    for (index, c) in components.iter().enumerate() {
        if ambient.square(c) != -2 {
            return Err(RootLatticeError::NotNegTwoClass { index });
        }
    }
    for i in 0..=r {
        for j in i + 1..=r {
            let expected = if r == 1 {
                2
            } else if j == i + 1 || (i == 0 && j == r) {
                1
            } else {
                0
            };
            if ambient.pairing(&components[i], &components[j]) != expected {
                return Err(RootLatticeError::BadIntersectionPattern { i, j });
            }
        }
    }
    let rows = components
        .iter()
        .map(|c| e8_coords(c).map(|v| v.iter().map(|&x| x as i128).collect::<Vec<i128>>()))
        .collect::<Result<Vec<_>, _>>()?;
    let divisors = intmat::elementary_divisors(&rows);
    let rank = divisors.len();
    let index = divisors.iter().product::<i128>() as i64;
    let primitive = index == 1;
    Ok(RootSublatticeClass { rank, primitive, index, label: ClassLabel::from_rank(rank, primitive) })
}

/// Embeds a vector of `I_{1,8}` into `I_{1,9}` with zero `e_9` coordinate.
pub fn embed_e8(v: &LatticeVector) -> LatticeVector {
    let mut c = v.coords().to_vec();
    c.resize(10, 0);
    LatticeVector(c)
}

/// Roots `γ` of `roots` with `γ · last = 1` and `γ` orthogonal to every other
/// member of `chain`; these extend an `A_r` chain by one node.
pub fn chain_extensions<'a>(
    lattice: &'a GramLattice,
    roots: &'a [LatticeVector],
    chain: &'a [LatticeVector],
) -> impl Iterator<Item = &'a LatticeVector> + 'a {
    roots.iter().filter(move |g| match chain.split_last() {
        None => true,
        Some((last, rest)) => lattice.pairing(g, last) == 1 && rest.iter().all(|c| lattice.pairing(g, c) == 0),
    })
}

/// Closes an `A_r` chain `γ_1, …, γ_r` of `E_8 ⊂ I_{1,9}` into the cycle
/// `D_0 = -k_9 - Σ γ_i, D_1 = γ_1, …, D_r = γ_r`.
pub fn cycle_from_chain(chain: &[LatticeVector]) -> Vec<LatticeVector> {
    let sum = chain.iter().fold(LatticeVector::zero(10), |acc, g| acc.add(g));
    let mut out = vec![canonical_class(9).neg().sub(&sum)];
    out.extend(chain.iter().cloned());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::new(c.to_vec())
    }

    #[test]
    fn i1n_lattice() {
        assert_eq!(make_i1n(9).rank(), 10);
        assert_eq!(make_i1n(9).determinant(), -1);
        assert_eq!(make_i1n(1).gram(), &[vec![1, 0], vec![0, -1]]);
        let l = make_i1n(3);
        let e = |i| LatticeVector::basis(4, i);
        assert_eq!(l.pairing(&e(0), &e(0)), 1);
        assert_eq!(l.pairing(&e(2), &e(2)), -1);
        assert_eq!(l.pairing(&e(1), &e(2)), 0);
        assert!(GramLattice::new(vec![vec![1, 2], vec![2, 4]]).is_none());
        assert!(GramLattice::new(vec![vec![1, 2], vec![3, 4]]).is_none());
    }

    #[test]
    fn root_counts() {
        // standard root counts of E3 = A2+A1, E4 = A4, E5 = D5, E6, E7, E8
        for (n, count) in [(3, 8), (4, 20), (5, 40), (6, 72), (7, 126), (8, 240)] {
            let roots = en_roots(n).unwrap();
            assert_eq!(roots.len(), count, "n={n}");
            let l = make_i1n(n);
            let k = canonical_class(n);
            for r in &roots {
                assert_eq!(l.square(r), -2);
                assert_eq!(l.pairing(r, &k), 0);
                assert!(roots.binary_search(&r.neg()).is_ok());
            }
            let mut a0 = vec![0; n + 1];
            a0[..4].copy_from_slice(&[1, -1, -1, -1]);
            assert!(roots.binary_search(&v(&a0)).is_ok());
        }
        assert!(en_roots(9).is_err());
    }

    #[test]
    fn canonical_basis_pattern() {
        let l = make_i1n(8);
        let basis = standard_root_basis(8);
        assert_eq!(basis[1], v(&[0, 1, -1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(l.pairing(&basis[1], &basis[2]), 1);
        assert_eq!(l.pairing(&basis[1], &basis[3]), 0);
        assert!(has_en_pattern(&l, &basis));
        // swapping v_1 and v_2 gives another valid basis with the same diagram
        let mut ortho: Vec<LatticeVector> = (0..9).map(|i| LatticeVector::basis(9, i)).collect();
        ortho.swap(1, 2);
        let other = canonical_root_basis(&l, &ortho).unwrap();
        assert_ne!(other, basis);
        assert!(has_en_pattern(&l, &other));
        let mut bad = ortho.clone();
        bad[0] = bad[0].scale(2);
        assert_eq!(canonical_root_basis(&l, &bad), Err(RootLatticeError::NotOrthonormalBasis));
        let mut flipped = ortho;
        flipped[5] = flipped[5].neg();
        assert_eq!(canonical_root_basis(&l, &flipped), Err(RootLatticeError::WrongCanonicalClass));
    }

    #[test]
    fn reflections() {
        let l = make_i1n(8);
        let roots = en_roots(8).unwrap();
        let a = &roots[17];
        assert_eq!(weyl_reflect(&l, a, a).unwrap(), a.neg());
        let orth = roots.iter().find(|b| l.pairing(b, a) == 0).unwrap();
        assert_eq!(weyl_reflect(&l, a, orth).unwrap(), *orth);
        for b in roots.iter().step_by(7) {
            let img = weyl_reflect(&l, a, b).unwrap();
            assert!(roots.binary_search(&img).is_ok());
            assert_eq!(weyl_reflect(&l, a, &img).unwrap(), *b);
        }
        let k = canonical_class(8);
        assert_eq!(weyl_reflect(&l, a, &k).unwrap(), k);
        assert!(matches!(
            weyl_reflect(&l, &LatticeVector::basis(9, 0), a),
            Err(RootLatticeError::NotARoot { square: 1 })
        ));
    }

    #[test]
    fn highest_root_properties() {
        let l = make_i1n(9);
        let basis = standard_root_basis(9);
        let theta = highest_root(&l, &basis).unwrap();
        assert_eq!(l.square(&theta), -2);
        for (i, b) in basis.iter().take(8).enumerate() {
            let p = l.pairing(&theta, b);
            assert!(p <= 0);
            assert_eq!(p, if i == 7 { -1 } else { 0 });
        }
        // κ = β⁺ + β_8 is orthogonal to β_0..β_7 and equals -k_9
        let kappa = theta.add(&basis[8]);
        assert!(basis.iter().take(8).all(|b| l.pairing(&kappa, b) == 0));
        assert_eq!(kappa, canonical_class(9).neg());
        assert_eq!(highest_root(&l, &basis[..5]), Err(RootLatticeError::NotE8Basis));
    }

    #[test]
    fn coordinates() {
        let basis = standard_root_basis(9);
        let c = v(&[0, 1, -1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(root_basis_coords(&c, &basis).unwrap(), vec![0, 1, 0, 0, 0, 0, 0, 0, 0]);
        let anti = canonical_class(9).neg();
        assert_eq!(root_basis_coords(&anti, &basis).unwrap(), vec![3, 2, 4, 6, 5, 4, 3, 2, 1]);
        assert_eq!(root_basis_coords(&LatticeVector::basis(10, 0), &basis), Err(RootLatticeError::NotInRootLattice));
        for r in en_roots(8).unwrap().iter().step_by(11) {
            let e = embed_e8(r);
            let coords = root_basis_coords(&e, &basis).unwrap();
            assert_eq!(LatticeVector::combination(&coords, &basis), e);
        }
    }

    #[test]
    fn small_cycles() {
        let l = make_i1n(9);
        let anti = canonical_class(9).neg();
        let c = classify_boundary(core::slice::from_ref(&anti), &l).unwrap();
        assert_eq!((c.rank, c.primitive, c.label), (0, true, ClassLabel::R0));
        let d1 = v(&[1, -1, -1, -1, 0, 0, 0, 0, 0, 0]);
        let d2 = v(&[1, 0, 0, 0, -1, -1, -1, 0, 0, 0]);
        let d3 = v(&[1, 0, 0, 0, 0, 0, 0, -1, -1, -1]);
        let c = classify_boundary(&[d1.clone(), d2.clone(), d3.clone()], &l).unwrap();
        assert_eq!((c.rank, c.primitive, c.label), (2, true, ClassLabel::R2));
        assert_eq!(classify_boundary(&[d1.clone(), d2.clone()], &l), Err(RootLatticeError::NotAnticanonical));
        assert_eq!(classify_boundary(&[anti], &make_i1n(8)), Err(RootLatticeError::WrongAmbient));
        // r = 1: two classes meeting twice
        let g = embed_e8(&standard_root_basis(8)[1]);
        let cyc = cycle_from_chain(&[g]);
        assert_eq!(l.pairing(&cyc[0], &cyc[1]), 2);
        assert_eq!(classify_boundary(&cyc, &l).unwrap().label, ClassLabel::R1);
    }

    #[test]
    fn pattern_violations() {
        let l = make_i1n(9);
        let e = |i| LatticeVector::basis(10, i);
        // squares are -2 only for roots
        let bad = vec![canonical_class(9).neg().sub(&e(1)), e(1)];
        assert_eq!(classify_boundary(&bad, &l), Err(RootLatticeError::NotNegTwoClass { index: 0 }));
        // chain that is not A_r: two orthogonal roots
        let b = standard_root_basis(8);
        let chain = [embed_e8(&b[1]), embed_e8(&b[3])];
        assert!(matches!(
            classify_boundary(&cycle_from_chain(&chain), &l),
            Err(RootLatticeError::BadIntersectionPattern { .. } | RootLatticeError::NotNegTwoClass { .. })
        ));
    }

    #[test]
    fn both_a7_embeddings_occur() {
        // extend the chain β_1..β_6 at either end by every admissible root
        let l9 = make_i1n(9);
        let roots: Vec<LatticeVector> = en_roots(8).unwrap().iter().map(embed_e8).collect();
        let b = standard_root_basis(9);
        let chain: Vec<LatticeVector> = b[1..7].to_vec();
        let mut labels = alloc::collections::BTreeSet::new();
        for g in chain_extensions(&l9, &roots, &chain) {
            let mut c = chain.clone();
            c.push(g.clone());
            labels.insert(classify_boundary(&cycle_from_chain(&c), &l9).unwrap().label);
        }
        let reversed: Vec<LatticeVector> = chain.iter().rev().cloned().collect();
        for g in chain_extensions(&l9, &roots, &reversed) {
            let mut c = reversed.clone();
            c.push(g.clone());
            labels.insert(classify_boundary(&cycle_from_chain(&c), &l9).unwrap().label);
        }
        assert!(labels.contains(&ClassLabel::R7Primitive));
        assert!(labels.contains(&ClassLabel::R7Imprimitive));
        assert_eq!(labels.len(), 2);
    }

    #[test]
    fn a8_has_index_three() {
        let l9 = make_i1n(9);
        let b = standard_root_basis(9);
        let theta = highest_root(&l9, &b).unwrap();
        // β_1..β_7 followed by -θ (which meets β_7 once) is an A_8 chain
        let mut chain: Vec<LatticeVector> = b[1..8].to_vec();
        chain.push(theta.neg());
        let c = classify_boundary(&cycle_from_chain(&chain), &l9).unwrap();
        assert_eq!((c.rank, c.index, c.label), (8, 3, ClassLabel::R8));
    }
}
