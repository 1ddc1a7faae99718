//! Exact sparse linear algebra over the rationals.
//!
//! Vectors are keyed by structured basis labels. Ranks are computed by
//! fraction-free elimination on primitive integer vectors.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar, always in lowest terms.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `p/q`. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// `(-1)^e` as a scalar.
pub fn sign(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Parity of an integer exponent.
pub fn parity(e: i64) -> i64 {
    e.rem_euclid(2)
}

/// Parse `"p/q"` or `"p"` into a scalar.
pub fn parse_scalar(s: &str) -> Result<Scalar, LinearError> {
    let bad = || LinearError::BadScalar(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(n, d))
}

/// Render a scalar as `"p/q"` (or `"p"` for integers).
pub fn format_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Bound for anything used as a basis label.
pub trait Label: Ord + Clone + Hash + Debug + Send + Sync {}
impl<T: Ord + Clone + Hash + Debug + Send + Sync> Label for T {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearError {
    #[error("label {0} is not in the domain basis")]
    NotInDomain(String),
    #[error("label {0} is not in the codomain basis")]
    NotInCodomain(String),
    #[error("composition size mismatch: {0}")]
    Mismatch(String),
    #[error("d(x) for x = {element} in degree {from} has a term {target} outside degree {from}+1")]
    DegreeMismatch {
        from: i64,
        element: String,
        target: String,
    },
    #[error("d^2 != 0 in degree {degree} on basis element {element}")]
    NotAComplex { degree: i64, element: String },
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
}

/// Finite linear combination of labels with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseVector<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord + Debug> Debug for SparseVector<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}){:?}", format_scalar(c), k)?;
        }
        Ok(())
    }
}

impl<K: Ord> Default for SparseVector<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SparseVector<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector of `k`.
    pub fn basis(k: K) -> Self {
        Self::term(k, Scalar::one())
    }

    pub fn term(k: K, c: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(k, c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, Scalar)>) -> Self {
        let mut v = Self::zero();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, k: &K) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Add `c * k`, dropping the entry if it cancels.
    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiply by `(-1)^e`.
    pub fn signed(self, e: i64) -> Self {
        if parity(e) == 0 {
            self
        } else {
            -self
        }
    }

    /// Linear extension of `f` from labels to vectors.
    pub fn flat_map<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> SparseVector<K2>) -> SparseVector<K2> {
        let mut out = SparseVector::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Relabel through an injective or merging map.
    pub fn map_labels<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> SparseVector<K2> {
        let mut out = SparseVector::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Keep only the terms whose label satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Bilinear extension of `f` to a pair of vectors.
    pub fn bilinear<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &SparseVector<K2>,
        mut f: impl FnMut(&K, &K2) -> SparseVector<K3>,
    ) -> SparseVector<K3> {
        let mut out = SparseVector::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&f(a, b), &(ca * cb));
            }
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, Scalar> {
        self.terms
    }
}

impl<K: Ord + Clone> AddAssign<&SparseVector<K>> for SparseVector<K> {
    fn add_assign(&mut self, rhs: &SparseVector<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> Add for SparseVector<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for SparseVector<K> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
        self
    }
}

impl<K: Ord + Clone> Neg for SparseVector<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for SparseVector<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

/// Linear map between two labeled bases, stored column by column.
#[derive(Clone, Debug)]
pub struct LinearMap<D: Label, C: Label> {
    domain: Vec<D>,
    codomain: Vec<C>,
    columns: Vec<SparseVector<C>>,
}

impl<D: Label, C: Label> LinearMap<D, C> {
    /// Build from an image function, validating every label.
    pub fn from_fn(
        domain: Vec<D>,
        codomain: Vec<C>,
        mut image: impl FnMut(&D) -> SparseVector<C>,
    ) -> Result<Self, LinearError> {
        let columns = domain.iter().map(&mut image).collect();
        Self::from_columns(domain, codomain, columns)
    }

    pub fn from_columns(
        domain: Vec<D>,
        codomain: Vec<C>,
        columns: Vec<SparseVector<C>>,
    ) -> Result<Self, LinearError> {
        if domain.len() != columns.len() {
            return Err(LinearError::Mismatch(format!(
                "{} domain labels but {} columns",
                domain.len(),
                columns.len()
            )));
        }
        let known: std::collections::HashSet<&C> = codomain.iter().collect();
        for col in &columns {
            for k in col.keys() {
                if !known.contains(k) {
                    return Err(LinearError::NotInCodomain(format!("{k:?}")));
                }
            }
        }
        Ok(Self {
            domain,
            codomain,
            columns,
        })
    }

    pub fn identity(basis: Vec<D>) -> LinearMap<D, D> {
        let columns = basis.iter().map(|k| SparseVector::basis(k.clone())).collect();
        LinearMap {
            domain: basis.clone(),
            codomain: basis,
            columns,
        }
    }

    pub fn zero(domain: Vec<D>, codomain: Vec<C>) -> Self {
        let columns = vec![SparseVector::zero(); domain.len()];
        Self {
            domain,
            codomain,
            columns,
        }
    }

    pub fn domain(&self) -> &[D] {
        &self.domain
    }

    pub fn codomain(&self) -> &[C] {
        &self.codomain
    }

    pub fn columns(&self) -> &[SparseVector<C>] {
        &self.columns
    }

    pub fn apply(&self, v: &SparseVector<D>) -> Result<SparseVector<C>, LinearError> {
        let index: HashMap<&D, usize> = self.domain.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut out = SparseVector::zero();
        for (k, c) in v.iter() {
            let i = *index.get(k).ok_or_else(|| LinearError::NotInDomain(format!("{k:?}")))?;
            out.add_scaled(&self.columns[i], c);
        }
        Ok(out)
    }

    /// `self ∘ inner`.
    pub fn compose<B: Label>(&self, inner: &LinearMap<B, D>) -> Result<LinearMap<B, C>, LinearError> {
        if inner.codomain != self.domain {
            return Err(LinearError::Mismatch("inner codomain differs from outer domain".into()));
        }
        let columns = inner
            .columns
            .iter()
            .map(|col| self.apply(col))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LinearMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            columns,
        })
    }

    pub fn rank(&self) -> usize {
        rank_of_vectors(&self.columns)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVector::is_zero)
    }
}

/// Sparse primitive integer vector with sorted positions.
type IntRow = Vec<(usize, BigInt)>;

fn primitive(mut row: IntRow) -> IntRow {
    let mut g = BigInt::zero();
    for (_, c) in &row {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c /= &g;
        }
    }
    if row.first().is_some_and(|(_, c)| c.is_negative()) {
        for (_, c) in row.iter_mut() {
            *c = -&*c;
        }
    }
    row
}

/// `a * u - b * v`, dropping zeros.
fn combine(a: &BigInt, u: &IntRow, b: &BigInt, v: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < v.len() {
        let take_u = j >= v.len() || (i < u.len() && u[i].0 < v[j].0);
        let take_v = i >= u.len() || (j < v.len() && v[j].0 < u[i].0);
        if take_u {
            out.push((u[i].0, a * &u[i].1));
            i += 1;
        } else if take_v {
            out.push((v[j].0, -(b * &v[j].1)));
            j += 1;
        } else {
            let c = a * &u[i].1 - b * &v[j].1;
            if !c.is_zero() {
                out.push((u[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Clear denominators of a rational vector over a position index.
fn to_int_row<K: Ord + Clone + Hash>(v: &SparseVector<K>, index: &HashMap<&K, usize>) -> IntRow {
    let mut l = BigInt::one();
    for (_, c) in v.iter() {
        l = l.lcm(c.denom());
    }
    let mut row: IntRow = v
        .iter()
        .map(|(k, c)| (index[k], (c * Scalar::from_integer(l.clone())).to_integer()))
        .collect();
    row.sort_by_key(|(p, _)| *p);
    primitive(row)
}

/// Incremental fraction-free echelon basis.
#[derive(Default)]
struct Echelon {
    pivots: HashMap<usize, IntRow>,
}

impl Echelon {
    /// Reduce `row`; returns true if it was independent and got added.
    fn insert(&mut self, mut row: IntRow) -> bool {
        loop {
            let Some((p, b)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&p) {
                Some(u) => {
                    let a = u[0].1.clone();
                    let g = a.gcd(&b);
                    row = primitive(combine(&(&a / &g), &row, &(&b / &g), u));
                }
                None => {
                    self.pivots.insert(p, row);
                    return true;
                }
            }
        }
    }
}

/// Rank of a family of sparse vectors.
pub fn rank_of_vectors<K: Label>(vectors: &[SparseVector<K>]) -> usize {
    let mut labels: Vec<&K> = vectors.iter().flat_map(|v| v.keys()).collect();
    labels.sort();
    labels.dedup();
    let index: HashMap<&K, usize> = labels.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut ech = Echelon::default();
    let mut rank = 0;
    for v in vectors {
        if !v.is_zero() && ech.insert(to_int_row(v, &index)) {
            rank += 1;
        }
    }
    rank
}

/// Rank of a linear map.
pub fn rank<D: Label, C: Label>(map: &LinearMap<D, C>) -> usize {
    map.rank()
}

/// Cochain complex on a finite set of labeled cells, differential of degree +1.
#[derive(Clone, Debug)]
pub struct FiniteComplex<K: Label> {
    window: (i64, i64),
    cells: BTreeMap<i64, Vec<K>>,
    degree_of: HashMap<K, i64>,
    differential: HashMap<K, SparseVector<K>>,
}

impl<K: Label> FiniteComplex<K> {
    /// Build a complex from graded cells and the image of each cell.
    ///
    /// Targets must be cells of one degree higher. The window is the span
    /// of the occupied degrees unless `window` widens it.
    pub fn new(
        cells: impl IntoIterator<Item = (K, i64)>,
        mut d: impl FnMut(&K) -> SparseVector<K>,
        window: Option<(i64, i64)>,
    ) -> Result<Self, LinearError> {
        let mut by_degree: BTreeMap<i64, Vec<K>> = BTreeMap::new();
        let mut degree_of = HashMap::new();
        for (k, deg) in cells {
            if degree_of.insert(k.clone(), deg).is_none() {
                by_degree.entry(deg).or_default().push(k);
            }
        }
        for v in by_degree.values_mut() {
            v.sort();
        }
        let mut differential = HashMap::new();
        for (deg, ks) in &by_degree {
            for k in ks {
                let img = d(k);
                for t in img.keys() {
                    match degree_of.get(t) {
                        Some(td) if *td == deg + 1 => {}
                        Some(_) => {
                            return Err(LinearError::DegreeMismatch {
                                from: *deg,
                                element: format!("{k:?}"),
                                target: format!("{t:?}"),
                            })
                        }
                        None => return Err(LinearError::NotInCodomain(format!("{t:?}"))),
                    }
                }
                differential.insert(k.clone(), img);
            }
        }
        let lo = by_degree.keys().next().copied();
        let hi = by_degree.keys().next_back().copied();
        let window = match (window, lo, hi) {
            (Some((a, b)), Some(l), Some(h)) => (a.min(l), b.max(h)),
            (Some(w), _, _) => w,
            (None, Some(l), Some(h)) => (l, h),
            (None, _, _) => (0, -1),
        };
        Ok(Self {
            window,
            cells: by_degree,
            degree_of,
            differential,
        })
    }

    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn cells(&self, degree: i64) -> &[K] {
        self.cells.get(&degree).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn all_cells(&self) -> impl Iterator<Item = (&K, i64)> {
        self.cells.iter().flat_map(|(d, ks)| ks.iter().map(move |k| (k, *d)))
    }

    pub fn dim(&self) -> usize {
        self.degree_of.len()
    }

    pub fn degree(&self, k: &K) -> Option<i64> {
        self.degree_of.get(k).copied()
    }

    pub fn contains(&self, k: &K) -> bool {
        self.degree_of.contains_key(k)
    }

    pub fn d_cell(&self, k: &K) -> SparseVector<K> {
        self.differential.get(k).cloned().unwrap_or_default()
    }

    pub fn d(&self, v: &SparseVector<K>) -> SparseVector<K> {
        v.flat_map(|k| self.d_cell(k))
    }

    /// `d^i` as a linear map from degree `i` to degree `i + 1`.
    pub fn differential_map(&self, degree: i64) -> LinearMap<K, K> {
        let dom = self.cells(degree).to_vec();
        let cod = self.cells(degree + 1).to_vec();
        let columns = dom.iter().map(|k| self.d_cell(k)).collect();
        LinearMap {
            domain: dom,
            codomain: cod,
            columns,
        }
    }

    /// First cell on which `d ∘ d` does not vanish.
    pub fn check_d_squared(&self) -> Result<(), LinearError> {
        for (deg, ks) in &self.cells {
            for k in ks {
                if !self.d(&self.d_cell(k)).is_zero() {
                    return Err(LinearError::NotAComplex {
                        degree: *deg,
                        element: format!("{k:?}"),
                    });
                }
            }
        }
        Ok(())
    }

    /// Rank of `d^i` for every occupied degree.
    pub fn ranks(&self) -> BTreeMap<i64, usize> {
        self.cells
            .keys()
            .map(|&deg| (deg, rank_of_vectors(&self.differential_map(deg).columns)))
            .collect()
    }

    /// Betti numbers over the window; every window degree appears, zeros included.
    pub fn homology_dims(&self) -> Result<BTreeMap<i64, usize>, LinearError> {
        self.check_d_squared()?;
        let ranks = self.ranks();
        let (lo, hi) = self.window;
        let mut out = BTreeMap::new();
        for deg in lo..=hi {
            let dim = self.cells(deg).len();
            let out_rank = ranks.get(&deg).copied().unwrap_or(0);
            let in_rank = ranks.get(&(deg - 1)).copied().unwrap_or(0);
            out.insert(deg, dim - out_rank - in_rank);
        }
        Ok(out)
    }
}

/// Betti numbers of a complex.
pub fn homology_dims<K: Label>(cx: &FiniteComplex<K>) -> Result<BTreeMap<i64, usize>, LinearError> {
    cx.homology_dims()
}

/// Drop the zero entries of a homology table.
pub fn nonzero_dims(dims: &BTreeMap<i64, usize>) -> BTreeMap<i64, usize> {
    dims.iter().filter(|(_, v)| **v > 0).map(|(k, v)| (*k, *v)).collect()
}

/// Cell of a mapping cone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConeCell<A, B> {
    Source(A),
    Target(B),
}

/// Mapping cone of a chain map `f: src -> tgt`.
///
/// Degree `n` is `src^{n+1} ⊕ tgt^n` with `d(a, b) = (-da, f(a) + db)`;
/// `f` is a quasi-isomorphism iff the cone is acyclic.
pub fn mapping_cone<A: Label, B: Label>(
    src: &FiniteComplex<A>,
    tgt: &FiniteComplex<B>,
    f: impl Fn(&A) -> SparseVector<B>,
) -> Result<FiniteComplex<ConeCell<A, B>>, LinearError> {
    let cells = src
        .all_cells()
        .map(|(a, d)| (ConeCell::Source(a.clone()), d - 1))
        .chain(tgt.all_cells().map(|(b, d)| (ConeCell::Target(b.clone()), d)))
        .collect::<Vec<_>>();
    let (sl, sh) = src.window();
    let (tl, th) = tgt.window();
    FiniteComplex::new(
        cells,
        |c| match c {
            ConeCell::Source(a) => {
                let mut v = (-src.d_cell(a)).map_labels(|x| ConeCell::Source(x.clone()));
                v += &f(a).map_labels(|y| ConeCell::Target(y.clone()));
                v
            }
            ConeCell::Target(b) => tgt.d_cell(b).map_labels(|y| ConeCell::Target(y.clone())),
        },
        Some(((sl - 1).min(tl), (sh - 1).max(th))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_parsing_round_trips() {
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(format_scalar(&frac(6, -4)), "-3/2");
        assert_eq!(format_scalar(&int(7)), "7");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn sparse_vectors_drop_cancelled_terms() {
        let mut v = SparseVector::basis(1u32);
        v.add_term(2, int(3));
        v.add_term(1, int(-1));
        assert_eq!(v.len(), 1);
        assert_eq!(v.get(&2), int(3));
        assert!((v.clone() - v).is_zero());
    }

    #[test]
    fn rank_examples() {
        let id = LinearMap::<u8, u8>::identity(vec![0, 1, 2]);
        assert_eq!(id.rank(), 3);
        let z = LinearMap::<u8, u8>::zero(vec![0, 1], vec![0, 1, 2]);
        assert_eq!(z.rank(), 0);
        let m = LinearMap::from_columns(
            vec![0u8, 1],
            vec![0u8, 1],
            vec![
                SparseVector::from_terms([(0, int(1)), (1, int(2))]),
                SparseVector::from_terms([(0, int(2)), (1, int(4))]),
            ],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn unknown_codomain_label_is_rejected() {
        let err = LinearMap::from_fn(vec![0u8], vec![0u8], |_| SparseVector::basis(9u8)).unwrap_err();
        assert!(matches!(err, LinearError::NotInCodomain(_)));
    }

    #[test]
    fn acyclic_two_term_complex() {
        let cx = FiniteComplex::new([(0u8, 0), (1u8, 1)], |k| match k {
            0 => SparseVector::basis(1),
            _ => SparseVector::zero(),
        }, None)
        .unwrap();
        assert_eq!(cx.homology_dims().unwrap(), BTreeMap::from([(0, 0), (1, 0)]));
    }

    #[test]
    fn zero_differential_gives_space_dims() {
        let cx = FiniteComplex::new([(0u8, -1), (1, -1), (2, 2)], |_| SparseVector::zero(), None).unwrap();
        let h = cx.homology_dims().unwrap();
        assert_eq!(nonzero_dims(&h), BTreeMap::from([(-1, 2), (2, 1)]));
        assert_eq!(h.len(), 4);
    }

    #[test]
    fn non_complex_is_reported() {
        let cx = FiniteComplex::new([(0u8, 0), (1, 1), (2, 2)], |k| match k {
            0 => SparseVector::basis(1),
            1 => SparseVector::basis(2),
            _ => SparseVector::zero(),
        }, None)
        .unwrap();
        assert_eq!(
            cx.homology_dims().unwrap_err(),
            LinearError::NotAComplex { degree: 0, element: "0".into() }
        );
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let cx = FiniteComplex::new([(0u8, 0), (1, 0), (2, 1)], |k| match k {
            0 => SparseVector::basis(2),
            _ => SparseVector::zero(),
        }, None)
        .unwrap();
        let cone = mapping_cone(&cx, &cx, |k| SparseVector::basis(*k)).unwrap();
        assert!(nonzero_dims(&cone.homology_dims().unwrap()).is_empty());
    }
}
