//! Graded Leinster monoids: functors `Δ₀ᵒᵖ → dg vector spaces` with colax
//! maps `β_{a,b}: X_{a+b} → X_a ⊗ X_b`, truncated at a maximal weight.
//!
//! Basis elements of `X_n` are plain indices; `X_0` is one-dimensional with
//! index 0 as its unit.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::delta0::{Delta0Morphism, Generator};
use crate::dg_core::{display_vector, DgAlgebra, DgError, TermDoc, SCHEMA_VERSION};
use crate::exact_linear::{format_scalar, parse_scalar, sign, FiniteComplex, LinearError, SparseVector};
use crate::exact_linear::{mapping_cone, nonzero_dims};
use crate::report::{CheckReport, Checker};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LeinsterError {
    #[error("algebra has no unit, so degeneracies are undefined")]
    NonUnital,
    #[error("weight truncations differ: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("X_0 must be one-dimensional with zero multidegree")]
    BadUnitComponent,
    #[error("unknown label {label:?} in X_{n}")]
    UnknownLabel { n: usize, label: String },
    #[error("component X_{n}: {msg}")]
    Component { n: usize, msg: String },
    #[error("unsupported schema_version {0}")]
    SchemaVersion(u32),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Dg(#[from] DgError),
    #[error(transparent)]
    Linear(#[from] LinearError),
}

/// A graded Leinster monoid truncated at `max_weight`.
///
/// `face(i, n, x)` is `F_i: X_n → X_{n-1}` for `1 ≤ i ≤ n-1`,
/// `degeneracy(j, n, x)` is `D_j: X_n → X_{n+1}` inserting after `j` slots,
/// and `beta(a, b, x)` splits `x ∈ X_{a+b}`.
pub trait LeinsterMonoid: Send + Sync {
    fn max_weight(&self) -> usize;
    fn dim(&self, n: usize) -> usize;
    fn multidegree(&self, n: usize, x: usize) -> Vec<i64>;
    fn label(&self, n: usize, x: usize) -> String;
    fn face(&self, i: usize, n: usize, x: usize) -> SparseVector<usize>;
    fn degeneracy(&self, j: usize, n: usize, x: usize) -> SparseVector<usize>;
    fn beta(&self, a: usize, b: usize, x: usize) -> SparseVector<(usize, usize)>;
    fn differential(&self, n: usize, x: usize) -> SparseVector<usize>;

    fn degree(&self, n: usize, x: usize) -> i64 {
        self.multidegree(n, x).iter().sum()
    }

    /// Whether every `X_n` carries a compatible dg algebra structure.
    fn is_algebra(&self) -> bool {
        false
    }

    fn product(&self, _n: usize, _x: usize, _y: usize) -> SparseVector<usize> {
        SparseVector::zero()
    }

    fn unit(&self, _n: usize) -> Option<usize> {
        None
    }

    fn has_face(&self, _i: usize, _n: usize) -> bool {
        true
    }

    fn has_degeneracy(&self, _j: usize, _n: usize) -> bool {
        true
    }

    fn has_beta(&self, _a: usize, _b: usize) -> bool {
        true
    }
}

pub type SharedMonoid = Arc<dyn LeinsterMonoid>;

fn unit_split(a: usize, b: usize, x: usize) -> Option<SparseVector<(usize, usize)>> {
    if a == 0 {
        Some(SparseVector::basis((0, x)))
    } else if b == 0 {
        Some(SparseVector::basis((x, 0)))
    } else {
        None
    }
}

/// Tensor differential on `X_a ⊗ X_b`.
pub fn tensor_differential<M: LeinsterMonoid + ?Sized>(
    m: &M,
    a: usize,
    b: usize,
    v: &SparseVector<(usize, usize)>,
) -> SparseVector<(usize, usize)> {
    let mut out = SparseVector::zero();
    for (&(x, y), c) in v.iter() {
        out.add_scaled(&m.differential(a, x).map_labels(|&x2| (x2, y)), c);
        out.add_scaled(&m.differential(b, y).map_labels(|&y2| (x, y2)), &(c * sign(m.degree(a, x))));
    }
    out
}

/// Action of a Δ₀ morphism `f: [k] → [n]` as `X_n → X_k`, through its
/// generator factorization.
pub fn act<M: LeinsterMonoid + ?Sized>(m: &M, f: &Delta0Morphism, x: usize) -> SparseVector<usize> {
    let word = f.factorize();
    let mut cur = SparseVector::basis(x);
    for g in word.steps.iter().rev() {
        cur = match *g {
            Generator::Face { i, n } => cur.flat_map(|&y| m.face(i, n + 1, y)),
            Generator::Degeneracy { j, n } => cur.flat_map(|&y| m.degeneracy(j, n - 1, y)),
        };
    }
    cur
}

/// Sign rule for the signed face sum `d^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceSignRule {
    /// `A_i = a_1 + … + a_i + i`.
    #[default]
    Standard,
    /// `A_i = a_1 + … + a_{i-1} + i - 1`, a deliberately wrong rule.
    Shifted,
}

/// `d^s = Σ_{i=1}^{n-1} (-1)^{A_i} F_i` on `X_n`.
pub fn signed_face_sum<M: LeinsterMonoid + ?Sized>(m: &M, n: usize, x: usize, rule: FaceSignRule) -> SparseVector<usize> {
    let md = m.multidegree(n, x);
    let mut out = SparseVector::zero();
    let mut prefix = 0;
    for i in 1..n {
        let before = prefix;
        prefix += md[i - 1];
        let e = match rule {
            FaceSignRule::Standard => prefix + i as i64,
            FaceSignRule::Shifted => before + i as i64 - 1,
        };
        out.add_scaled(&m.face(i, n, x), &sign(e));
    }
    out
}

// ---------------------------------------------------------------------------
// monoid of a unital dg algebra

/// `X_n = A^{⊗n}` with multiplication of neighbours as inner faces.
#[derive(Clone, Debug)]
pub struct AlgebraMonoid {
    algebra: DgAlgebra,
    max_weight: usize,
    unit: usize,
}

impl AlgebraMonoid {
    pub fn new(algebra: DgAlgebra, max_weight: usize) -> Result<Self, LeinsterError> {
        let unit = algebra.unit().ok_or(LeinsterError::NonUnital)?;
        Ok(Self {
            algebra,
            max_weight,
            unit,
        })
    }

    pub fn algebra(&self) -> &DgAlgebra {
        &self.algebra
    }

    pub fn decode(&self, n: usize, mut x: usize) -> Vec<usize> {
        let d = self.algebra.dim();
        let mut out = vec![0; n];
        for slot in out.iter_mut().rev() {
            *slot = x % d;
            x /= d;
        }
        out
    }

    pub fn encode(&self, factors: &[usize]) -> usize {
        let d = self.algebra.dim();
        factors.iter().fold(0, |acc, &f| acc * d + f)
    }

    /// Tensor of per-slot vectors in `A`, encoded into `X_n`.
    fn tensor(&self, parts: &[SparseVector<usize>]) -> SparseVector<usize> {
        let d = self.algebra.dim();
        let mut cur = SparseVector::basis(0usize);
        for p in parts {
            cur = cur.bilinear(p, |&acc, &f| SparseVector::basis(acc * d + f));
        }
        cur
    }

    fn product_of(&self, factors: &[usize]) -> SparseVector<usize> {
        factors.iter().fold(SparseVector::basis(self.unit), |acc, &f| {
            self.algebra.mul(&acc, &SparseVector::basis(f))
        })
    }

    /// Direct action of `f: [k] → [n]`: each source gap multiplies the
    /// target slots it covers.
    pub fn act_direct(&self, f: &Delta0Morphism, x: usize) -> SparseVector<usize> {
        let factors = self.decode(f.target(), x);
        let parts: Vec<_> = (1..=f.source())
            .map(|g| {
                let covered: Vec<usize> = f.gap_preimage(g).map(|t| factors[t - 1]).collect();
                self.product_of(&covered)
            })
            .collect();
        self.tensor(&parts)
    }
}

impl LeinsterMonoid for AlgebraMonoid {
    fn max_weight(&self) -> usize {
        self.max_weight
    }

    fn dim(&self, n: usize) -> usize {
        self.algebra.dim().pow(n as u32)
    }

    fn multidegree(&self, n: usize, x: usize) -> Vec<i64> {
        self.decode(n, x).iter().map(|&f| self.algebra.degree(f)).collect()
    }

    fn label(&self, n: usize, x: usize) -> String {
        if n == 0 {
            return "1".into();
        }
        self.decode(n, x)
            .iter()
            .map(|&f| self.algebra.label(f))
            .collect::<Vec<_>>()
            .join("⊗")
    }

    fn face(&self, i: usize, n: usize, x: usize) -> SparseVector<usize> {
        let f = self.decode(n, x);
        let mut parts: Vec<_> = f.iter().map(|&a| SparseVector::basis(a)).collect();
        parts[i - 1] = self.algebra.mul_basis(f[i - 1], f[i]);
        parts.remove(i);
        self.tensor(&parts)
    }

    fn degeneracy(&self, j: usize, n: usize, x: usize) -> SparseVector<usize> {
        let mut f = self.decode(n, x);
        f.insert(j, self.unit);
        SparseVector::basis(self.encode(&f))
    }

    fn beta(&self, a: usize, b: usize, x: usize) -> SparseVector<(usize, usize)> {
        if let Some(v) = unit_split(a, b, x) {
            return v;
        }
        let f = self.decode(a + b, x);
        SparseVector::basis((self.encode(&f[..a]), self.encode(&f[a..])))
    }

    fn differential(&self, n: usize, x: usize) -> SparseVector<usize> {
        let f = self.decode(n, x);
        let mut out = SparseVector::zero();
        let mut prefix = 0;
        for k in 0..n {
            let mut parts: Vec<_> = f.iter().map(|&a| SparseVector::basis(a)).collect();
            parts[k] = self.algebra.d_basis(f[k]).clone();
            out.add_scaled(&self.tensor(&parts), &sign(prefix));
            prefix += self.algebra.degree(f[k]);
        }
        out
    }

    fn is_algebra(&self) -> bool {
        true
    }

    fn product(&self, n: usize, x: usize, y: usize) -> SparseVector<usize> {
        let (fx, fy) = (self.decode(n, x), self.decode(n, y));
        let mut e = 0;
        for i in 0..n {
            for j in 0..i {
                e += self.algebra.degree(fx[i]) * self.algebra.degree(fy[j]);
            }
        }
        let parts: Vec<_> = (0..n).map(|i| self.algebra.mul_basis(fx[i], fy[i])).collect();
        self.tensor(&parts).signed(e)
    }

    fn unit(&self, n: usize) -> Option<usize> {
        Some(self.encode(&vec![self.unit; n]))
    }
}

/// The Leinster monoid `A^{⊗•}` of a unital dg algebra.
pub fn from_dg_algebra(algebra: DgAlgebra, max_weight: usize) -> Result<AlgebraMonoid, LeinsterError> {
    AlgebraMonoid::new(algebra, max_weight)
}

// ---------------------------------------------------------------------------
// tensor product

/// `Z_n = X_n ⊗ Y_n` with diagonal actions and the interchange sign on β.
#[derive(Clone)]
pub struct TensorMonoid {
    left: SharedMonoid,
    right: SharedMonoid,
}

impl TensorMonoid {
    pub fn new(left: SharedMonoid, right: SharedMonoid) -> Result<Self, LeinsterError> {
        if left.max_weight() != right.max_weight() {
            return Err(LeinsterError::WeightMismatch(left.max_weight(), right.max_weight()));
        }
        Ok(Self { left, right })
    }

    pub fn left(&self) -> &SharedMonoid {
        &self.left
    }

    pub fn right(&self) -> &SharedMonoid {
        &self.right
    }

    pub fn split(&self, n: usize, z: usize) -> (usize, usize) {
        let d = self.right.dim(n);
        (z / d, z % d)
    }

    pub fn join(&self, n: usize, x: usize, y: usize) -> usize {
        x * self.right.dim(n) + y
    }

    fn pair(&self, n: usize, u: &SparseVector<usize>, v: &SparseVector<usize>) -> SparseVector<usize> {
        u.bilinear(v, |&x, &y| SparseVector::basis(self.join(n, x, y)))
    }
}

/// `X ⊗ Y` as a graded Leinster monoid.
pub fn tensor_monoid(left: SharedMonoid, right: SharedMonoid) -> Result<TensorMonoid, LeinsterError> {
    TensorMonoid::new(left, right)
}

impl LeinsterMonoid for TensorMonoid {
    fn max_weight(&self) -> usize {
        self.left.max_weight()
    }

    fn dim(&self, n: usize) -> usize {
        self.left.dim(n) * self.right.dim(n)
    }

    fn multidegree(&self, n: usize, z: usize) -> Vec<i64> {
        let (x, y) = self.split(n, z);
        let (a, b) = (self.left.multidegree(n, x), self.right.multidegree(n, y));
        a.iter().zip(&b).map(|(p, q)| p + q).collect()
    }

    fn label(&self, n: usize, z: usize) -> String {
        let (x, y) = self.split(n, z);
        format!("({})⊠({})", self.left.label(n, x), self.right.label(n, y))
    }

    fn face(&self, i: usize, n: usize, z: usize) -> SparseVector<usize> {
        let (x, y) = self.split(n, z);
        self.pair(n - 1, &self.left.face(i, n, x), &self.right.face(i, n, y))
    }

    fn degeneracy(&self, j: usize, n: usize, z: usize) -> SparseVector<usize> {
        let (x, y) = self.split(n, z);
        self.pair(n + 1, &self.left.degeneracy(j, n, x), &self.right.degeneracy(j, n, y))
    }

    fn beta(&self, a: usize, b: usize, z: usize) -> SparseVector<(usize, usize)> {
        if let Some(v) = unit_split(a, b, z) {
            return v;
        }
        let (x, y) = self.split(a + b, z);
        let bx = self.left.beta(a, b, x);
        let by = self.right.beta(a, b, y);
        bx.bilinear(&by, |&(x1, x2), &(y1, y2)| {
            let e = self.left.degree(b, x2) * self.right.degree(a, y1);
            SparseVector::basis((self.join(a, x1, y1), self.join(b, x2, y2))).signed(e)
        })
    }

    fn differential(&self, n: usize, z: usize) -> SparseVector<usize> {
        let (x, y) = self.split(n, z);
        let mut out = self.pair(n, &self.left.differential(n, x), &SparseVector::basis(y));
        out += &self
            .pair(n, &SparseVector::basis(x), &self.right.differential(n, y))
            .signed(self.left.degree(n, x));
        out
    }

    fn is_algebra(&self) -> bool {
        self.left.is_algebra() && self.right.is_algebra()
    }

    fn product(&self, n: usize, z1: usize, z2: usize) -> SparseVector<usize> {
        let (x1, y1) = self.split(n, z1);
        let (x2, y2) = self.split(n, z2);
        let e = self.right.degree(n, y1) * self.left.degree(n, x2);
        self.pair(n, &self.left.product(n, x1, x2), &self.right.product(n, y1, y2)).signed(e)
    }

    fn unit(&self, n: usize) -> Option<usize> {
        Some(self.join(n, self.left.unit(n)?, self.right.unit(n)?))
    }

    fn has_face(&self, i: usize, n: usize) -> bool {
        self.left.has_face(i, n) && self.right.has_face(i, n)
    }

    fn has_degeneracy(&self, j: usize, n: usize) -> bool {
        self.left.has_degeneracy(j, n) && self.right.has_degeneracy(j, n)
    }

    fn has_beta(&self, a: usize, b: usize) -> bool {
        self.left.has_beta(a, b) && self.right.has_beta(a, b)
    }
}

// ---------------------------------------------------------------------------
// explicit tables

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCell {
    pub label: String,
    pub multidegree: Vec<i64>,
}

/// A monoid given by explicit structure tables; absent tables are reported
/// by [`check_monoid`] rather than read as zero.
#[derive(Clone, Debug)]
pub struct TableMonoid {
    components: Vec<Vec<ComponentCell>>,
    differential: Vec<Vec<SparseVector<usize>>>,
    faces: BTreeMap<(usize, usize), Vec<SparseVector<usize>>>,
    degeneracies: BTreeMap<(usize, usize), Vec<SparseVector<usize>>>,
    betas: BTreeMap<(usize, usize), Vec<SparseVector<(usize, usize)>>>,
}

impl TableMonoid {
    /// Tabulate every structure map of another monoid.
    pub fn materialize<M: LeinsterMonoid + ?Sized>(m: &M) -> Self {
        let top = m.max_weight();
        let components = (0..=top)
            .map(|n| {
                (0..m.dim(n))
                    .map(|x| ComponentCell {
                        label: m.label(n, x),
                        multidegree: m.multidegree(n, x),
                    })
                    .collect()
            })
            .collect();
        let differential = (0..=top).map(|n| (0..m.dim(n)).map(|x| m.differential(n, x)).collect()).collect();
        let mut faces = BTreeMap::new();
        let mut degeneracies = BTreeMap::new();
        let mut betas = BTreeMap::new();
        for n in 0..=top {
            for i in 1..n {
                if m.has_face(i, n) {
                    faces.insert((i, n), (0..m.dim(n)).map(|x| m.face(i, n, x)).collect());
                }
            }
            if n < top {
                for j in 0..=n {
                    if m.has_degeneracy(j, n) {
                        degeneracies.insert((j, n), (0..m.dim(n)).map(|x| m.degeneracy(j, n, x)).collect());
                    }
                }
            }
            for a in 1..n {
                if m.has_beta(a, n - a) {
                    betas.insert((a, n - a), (0..m.dim(n)).map(|x| m.beta(a, n - a, x)).collect());
                }
            }
        }
        Self {
            components,
            differential,
            faces,
            degeneracies,
            betas,
        }
    }

    pub fn remove_face(&mut self, i: usize, n: usize) {
        self.faces.remove(&(i, n));
    }

    pub fn remove_degeneracy(&mut self, j: usize, n: usize) {
        self.degeneracies.remove(&(j, n));
    }

    pub fn remove_beta(&mut self, a: usize, b: usize) {
        self.betas.remove(&(a, b));
    }

    /// Overwrite one face image.
    pub fn set_face(&mut self, i: usize, n: usize, x: usize, image: SparseVector<usize>) {
        if let Some(t) = self.faces.get_mut(&(i, n)) {
            t[x] = image;
        }
    }

    pub fn from_json(text: &str) -> Result<Self, LeinsterError> {
        let doc: MonoidDoc = serde_json::from_str(text).map_err(|e| LeinsterError::Json(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn from_doc(doc: &MonoidDoc) -> Result<Self, LeinsterError> {
        if doc.schema_version != SCHEMA_VERSION {
            return Err(LeinsterError::SchemaVersion(doc.schema_version));
        }
        let components = doc.components.clone();
        if components.first().map(|c| c.len() != 1 || !c[0].multidegree.is_empty()).unwrap_or(true) {
            return Err(LeinsterError::BadUnitComponent);
        }
        let index: Vec<HashMap<&str, usize>> = components
            .iter()
            .map(|c| c.iter().enumerate().map(|(i, cell)| (cell.label.as_str(), i)).collect())
            .collect();
        let look = |n: usize, l: &str| -> Result<usize, LeinsterError> {
            index
                .get(n)
                .and_then(|m| m.get(l))
                .copied()
                .ok_or_else(|| LeinsterError::UnknownLabel { n, label: l.into() })
        };
        for (n, c) in components.iter().enumerate() {
            if index[n].len() != c.len() {
                return Err(LeinsterError::Component { n, msg: "duplicate label".into() });
            }
            if let Some(bad) = c.iter().find(|cell| cell.multidegree.len() != n) {
                return Err(LeinsterError::Component {
                    n,
                    msg: format!("{} needs {n} multidegree entries", bad.label),
                });
            }
        }
        let vector = |n: usize, terms: &[TermDoc]| -> Result<SparseVector<usize>, LeinsterError> {
            let mut v = SparseVector::zero();
            for t in terms {
                v.add_term(look(n, &t.label)?, parse_scalar(&t.coeff).map_err(DgError::from)?);
            }
            Ok(v)
        };
        let table = |src: usize, tgt: usize, images: &[ImageDoc]| -> Result<Vec<SparseVector<usize>>, LeinsterError> {
            let mut out = vec![SparseVector::zero(); components.get(src).map_or(0, Vec::len)];
            for im in images {
                out[look(src, &im.from)?] = vector(tgt, &im.result)?;
            }
            Ok(out)
        };
        let mut differential: Vec<Vec<SparseVector<usize>>> =
            components.iter().map(|c| vec![SparseVector::zero(); c.len()]).collect();
        for e in &doc.differential {
            differential[e.n][look(e.n, &e.from)?] = vector(e.n, &e.result)?;
        }
        let mut faces = BTreeMap::new();
        for f in &doc.faces {
            faces.insert((f.index, f.n), table(f.n, f.n - 1, &f.images)?);
        }
        let mut degeneracies = BTreeMap::new();
        for f in &doc.degeneracies {
            degeneracies.insert((f.index, f.n), table(f.n, f.n + 1, &f.images)?);
        }
        let mut betas = BTreeMap::new();
        for bt in &doc.betas {
            let n = bt.a + bt.b;
            let mut out = vec![SparseVector::zero(); components.get(n).map_or(0, Vec::len)];
            for im in &bt.images {
                let mut v = SparseVector::zero();
                for t in &im.result {
                    let key = (look(bt.a, &t.left)?, look(bt.b, &t.right)?);
                    v.add_term(key, parse_scalar(&t.coeff).map_err(DgError::from)?);
                }
                out[look(n, &im.from)?] = v;
            }
            betas.insert((bt.a, bt.b), out);
        }
        Ok(Self {
            components,
            differential,
            faces,
            degeneracies,
            betas,
        })
    }

    pub fn to_doc(&self) -> MonoidDoc {
        let label = |n: usize, x: usize| self.components[n][x].label.clone();
        let terms = |n: usize, v: &SparseVector<usize>| {
            v.iter()
                .map(|(t, c)| TermDoc {
                    label: label(n, *t),
                    coeff: format_scalar(c),
                })
                .collect::<Vec<_>>()
        };
        let images = |src: usize, tgt: usize, t: &[SparseVector<usize>]| {
            t.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(x, v)| ImageDoc {
                    from: label(src, x),
                    result: terms(tgt, v),
                })
                .collect()
        };
        MonoidDoc {
            schema_version: SCHEMA_VERSION,
            components: self.components.clone(),
            differential: self
                .differential
                .iter()
                .enumerate()
                .flat_map(|(n, col)| {
                    col.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(x, v)| (n, x, v))
                })
                .map(|(n, x, v)| DifferentialDoc {
                    n,
                    from: label(n, x),
                    result: terms(n, v),
                })
                .collect(),
            faces: self
                .faces
                .iter()
                .map(|(&(i, n), t)| OperatorDoc {
                    index: i,
                    n,
                    images: images(n, n - 1, t),
                })
                .collect(),
            degeneracies: self
                .degeneracies
                .iter()
                .map(|(&(j, n), t)| OperatorDoc {
                    index: j,
                    n,
                    images: images(n, n + 1, t),
                })
                .collect(),
            betas: self
                .betas
                .iter()
                .map(|(&(a, b), t)| BetaDoc {
                    a,
                    b,
                    images: t
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(x, v)| BetaImageDoc {
                            from: label(a + b, x),
                            result: v
                                .iter()
                                .map(|(&(l, r), c)| PairTermDoc {
                                    left: label(a, l),
                                    right: label(b, r),
                                    coeff: format_scalar(c),
                                })
                                .collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl LeinsterMonoid for TableMonoid {
    fn max_weight(&self) -> usize {
        self.components.len() - 1
    }

    fn dim(&self, n: usize) -> usize {
        self.components.get(n).map_or(0, Vec::len)
    }

    fn multidegree(&self, n: usize, x: usize) -> Vec<i64> {
        self.components[n][x].multidegree.clone()
    }

    fn label(&self, n: usize, x: usize) -> String {
        self.components[n][x].label.clone()
    }

    fn face(&self, i: usize, n: usize, x: usize) -> SparseVector<usize> {
        self.faces.get(&(i, n)).map(|t| t[x].clone()).unwrap_or_default()
    }

    fn degeneracy(&self, j: usize, n: usize, x: usize) -> SparseVector<usize> {
        self.degeneracies.get(&(j, n)).map(|t| t[x].clone()).unwrap_or_default()
    }

    fn beta(&self, a: usize, b: usize, x: usize) -> SparseVector<(usize, usize)> {
        if let Some(v) = unit_split(a, b, x) {
            return v;
        }
        self.betas.get(&(a, b)).map(|t| t[x].clone()).unwrap_or_default()
    }

    fn differential(&self, n: usize, x: usize) -> SparseVector<usize> {
        self.differential[n][x].clone()
    }

    fn has_face(&self, i: usize, n: usize) -> bool {
        self.faces.contains_key(&(i, n))
    }

    fn has_degeneracy(&self, j: usize, n: usize) -> bool {
        self.degeneracies.contains_key(&(j, n))
    }

    fn has_beta(&self, a: usize, b: usize) -> bool {
        a == 0 || b == 0 || self.betas.contains_key(&(a, b))
    }
}

/// JSON form of a hand-built monoid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonoidDoc {
    pub schema_version: u32,
    /// `components[n]` is the basis of `X_n`.
    pub components: Vec<Vec<ComponentCell>>,
    #[serde(default)]
    pub differential: Vec<DifferentialDoc>,
    #[serde(default)]
    pub faces: Vec<OperatorDoc>,
    #[serde(default)]
    pub degeneracies: Vec<OperatorDoc>,
    #[serde(default)]
    pub betas: Vec<BetaDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialDoc {
    pub n: usize,
    pub from: String,
    pub result: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorDoc {
    pub index: usize,
    pub n: usize,
    pub images: Vec<ImageDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageDoc {
    pub from: String,
    pub result: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaDoc {
    pub a: usize,
    pub b: usize,
    pub images: Vec<BetaImageDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaImageDoc {
    pub from: String,
    pub result: Vec<PairTermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTermDoc {
    pub left: String,
    pub right: String,
    pub coeff: String,
}

// ---------------------------------------------------------------------------
// ♯-twist

/// The re-signed functor `X^♯`: same components, faces and degeneracies
/// multiplied by `(-1)^{a_1+…+a_i}`.
pub struct Sharp<'a, M: ?Sized> {
    inner: &'a M,
}

pub fn sharp<M: LeinsterMonoid + ?Sized>(m: &M) -> Sharp<'_, M> {
    Sharp { inner: m }
}

impl<M: LeinsterMonoid + ?Sized> Sharp<'_, M> {
    fn prefix(&self, n: usize, x: usize, k: usize) -> i64 {
        self.inner.multidegree(n, x)[..k].iter().sum()
    }

    pub fn face(&self, i: usize, n: usize, x: usize) -> SparseVector<usize> {
        self.inner.face(i, n, x).signed(self.prefix(n, x, i))
    }

    pub fn degeneracy(&self, j: usize, n: usize, x: usize) -> SparseVector<usize> {
        self.inner.degeneracy(j, n, x).signed(self.prefix(n, x, j))
    }

    /// `d^♯ = -F_1^♯ + F_2^♯ - …`.
    pub fn chain_differential(&self, n: usize, x: usize) -> SparseVector<usize> {
        let mut out = SparseVector::zero();
        for i in 1..n {
            out.add_scaled(&self.face(i, n, x), &sign(i as i64));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// verification

/// Bounds on the exhaustive sweeps of [`check_monoid_with`].
#[derive(Clone, Copy, Debug)]
pub struct MonoidCheckOptions {
    /// Highest weight for checks over pairs of basis elements.
    pub pair_weight: usize,
    /// Highest weight for associativity over triples.
    pub triple_weight: usize,
}

impl Default for MonoidCheckOptions {
    fn default() -> Self {
        Self {
            pair_weight: usize::MAX,
            triple_weight: 3,
        }
    }
}

fn op_name(kind: &str, idx: usize, n: usize) -> String {
    format!("{kind}_{idx} on X_{n}")
}

/// Restricted simplicial identities for a pair of face/degeneracy operators.
fn check_simplicial_with<M: LeinsterMonoid + ?Sized>(
    name: &str,
    m: &M,
    face: &dyn Fn(usize, usize, usize) -> SparseVector<usize>,
    degen: &dyn Fn(usize, usize, usize) -> SparseVector<usize>,
) -> CheckReport {
    let top = m.max_weight();
    let mut c = Checker::new(name);
    let fv = |i: usize, n: usize, v: &SparseVector<usize>| v.flat_map(|&y| face(i, n, y));
    let dv = |j: usize, n: usize, v: &SparseVector<usize>| v.flat_map(|&y| degen(j, n, y));
    let has_f = |i: usize, n: usize| m.has_face(i, n);
    let has_d = |j: usize, n: usize| m.has_degeneracy(j, n);
    for n in 0..=top {
        for x in 0..m.dim(n) {
            let e = SparseVector::basis(x);
            // F_i F_j = F_{j-1} F_i, i < j, on X_n
            for j in 2..n {
                for i in 1..j {
                    if !(has_f(j, n) && has_f(i, n - 1) && has_f(i, n) && has_f(j - 1, n - 1)) {
                        continue;
                    }
                    let l = fv(i, n - 1, &fv(j, n, &e));
                    let r = fv(j - 1, n - 1, &fv(i, n, &e));
                    c.expect(l == r, || format!("F_{i}F_{j} ≠ F_{}F_{i} on {}", j - 1, m.label(n, x)));
                }
            }
            if n + 2 <= top {
                // D_i D_j = D_{j+1} D_i, i ≤ j
                for j in 0..=n {
                    for i in 0..=j {
                        if !(has_d(j, n) && has_d(i, n + 1) && has_d(i, n) && has_d(j + 1, n + 1)) {
                            continue;
                        }
                        let l = dv(i, n + 1, &dv(j, n, &e));
                        let r = dv(j + 1, n + 1, &dv(i, n, &e));
                        c.expect(l == r, || format!("D_{i}D_{j} ≠ D_{}D_{i} on {}", j + 1, m.label(n, x)));
                    }
                }
            }
            if n < top {
                // F_i D_j on X_n, 1 ≤ i ≤ n
                for j in 0..=n {
                    for i in 1..=n {
                        if !(has_d(j, n) && has_f(i, n + 1)) {
                            continue;
                        }
                        let l = fv(i, n + 1, &dv(j, n, &e));
                        let r = if i < j {
                            if !(has_f(i, n) && has_d(j - 1, n - 1)) {
                                continue;
                            }
                            dv(j - 1, n - 1, &fv(i, n, &e))
                        } else if i == j || i == j + 1 {
                            e.clone()
                        } else {
                            if !(has_f(i - 1, n) && has_d(j, n - 1)) {
                                continue;
                            }
                            dv(j, n - 1, &fv(i - 1, n, &e))
                        };
                        c.expect(l == r, || format!("F_{i}D_{j} relation fails on {}", m.label(n, x)));
                    }
                }
            }
        }
    }
    c.finish()
}

fn sum_md(md: &[i64]) -> i64 {
    md.iter().sum()
}

/// Full axiom suite with default sweep bounds.
pub fn check_monoid<M: LeinsterMonoid + ?Sized>(m: &M) -> Vec<CheckReport> {
    check_monoid_with(m, MonoidCheckOptions::default())
}

pub fn check_monoid_with<M: LeinsterMonoid + ?Sized>(m: &M, opts: MonoidCheckOptions) -> Vec<CheckReport> {
    let top = m.max_weight();
    let mut out = Vec::new();

    let mut c = Checker::new("monoid.unit_component");
    c.expect(m.dim(0) == 1, || format!("dim X_0 = {}", m.dim(0)));
    if m.dim(0) == 1 {
        c.expect(m.multidegree(0, 0).is_empty(), || "X_0 carries a multidegree".into());
        c.expect(m.differential(0, 0).is_zero(), || "d ≠ 0 on X_0".into());
    }
    out.push(c.finish());

    let mut c = Checker::new("monoid.structure_maps");
    for n in 0..=top {
        for i in 1..n {
            c.expect(m.has_face(i, n), || format!("missing face {}", op_name("F", i, n)));
        }
        if n < top {
            for j in 0..=n {
                c.expect(m.has_degeneracy(j, n), || format!("missing degeneracy {}", op_name("D", j, n)));
            }
        }
        for a in 1..n {
            c.expect(m.has_beta(a, n - a), || format!("missing colax map β_{{{a},{}}}", n - a));
        }
    }
    out.push(c.finish());

    let mut c = Checker::new("monoid.grading");
    for n in 0..=top {
        for x in 0..m.dim(n) {
            let md = m.multidegree(n, x);
            if !c.expect(md.len() == n, || format!("{} has {} multidegree entries", m.label(n, x), md.len())) {
                continue;
            }
            for (t, _) in m.differential(n, x).iter() {
                c.expect(m.degree(n, *t) == sum_md(&md) + 1, || format!("d({}) leaves degree +1", m.label(n, x)));
            }
            for i in 1..n {
                let mut expect = md.clone();
                expect[i - 1] += expect[i];
                expect.remove(i);
                for (t, _) in m.face(i, n, x).iter() {
                    c.expect(m.multidegree(n - 1, *t) == expect, || {
                        format!("F_{i}({}) has wrong multidegree", m.label(n, x))
                    });
                }
            }
            if n < top {
                for j in 0..=n {
                    let mut expect = md.clone();
                    expect.insert(j, 0);
                    for (t, _) in m.degeneracy(j, n, x).iter() {
                        c.expect(m.multidegree(n + 1, *t) == expect, || {
                            format!("D_{j}({}) has wrong multidegree", m.label(n, x))
                        });
                    }
                }
            }
            for a in 0..=n {
                for (&(l, r), _) in m.beta(a, n - a, x).iter() {
                    let mut joined = m.multidegree(a, l);
                    joined.extend(m.multidegree(n - a, r));
                    c.expect(joined == md, || format!("β_{{{a},{}}}({}) is not graded", n - a, m.label(n, x)));
                }
            }
        }
    }
    out.push(c.finish());

    let mut c = Checker::new("monoid.d_squared");
    for n in 0..=top {
        for x in 0..m.dim(n) {
            let dd = m.differential(n, x).flat_map(|&y| m.differential(n, y));
            c.expect(dd.is_zero(), || format!("d² ≠ 0 on {}", m.label(n, x)));
        }
    }
    out.push(c.finish());

    let mut c = Checker::new("monoid.chain_maps");
    for n in 0..=top {
        for x in 0..m.dim(n) {
            let dx = m.differential(n, x);
            for i in 1..n {
                let l = m.face(i, n, x).flat_map(|&y| m.differential(n - 1, y));
                let r = dx.flat_map(|&y| m.face(i, n, y));
                c.expect(l == r, || format!("F_{i} does not commute with d on {}", m.label(n, x)));
            }
            if n < top {
                for j in 0..=n {
                    let l = m.degeneracy(j, n, x).flat_map(|&y| m.differential(n + 1, y));
                    let r = dx.flat_map(|&y| m.degeneracy(j, n, y));
                    c.expect(l == r, || format!("D_{j} does not commute with d on {}", m.label(n, x)));
                }
            }
            for a in 1..n {
                let b = n - a;
                let l = tensor_differential(m, a, b, &m.beta(a, b, x));
                let r = dx.flat_map(|&y| m.beta(a, b, y));
                c.expect(l == r, || format!("β_{{{a},{b}}} does not commute with d on {}", m.label(n, x)));
            }
        }
    }
    out.push(c.finish());

    out.push(check_simplicial_with(
        "monoid.simplicial",
        m,
        &|i, n, x| m.face(i, n, x),
        &|j, n, x| m.degeneracy(j, n, x),
    ));

    let mut c = Checker::new("monoid.colax_unit");
    for n in 0..=top {
        for x in 0..m.dim(n) {
            c.expect(m.beta(0, n, x) == SparseVector::basis((0, x)), || format!("β_{{0,{n}}} on {}", m.label(n, x)));
            c.expect(m.beta(n, 0, x) == SparseVector::basis((x, 0)), || format!("β_{{{n},0}} on {}", m.label(n, x)));
        }
    }
    out.push(c.finish());

    let mut c = Checker::new("monoid.colax_coherence");
    for n in 3..=top {
        for x in 0..m.dim(n) {
            for a in 1..n {
                for b in 1..n - a {
                    let cc = n - a - b;
                    let left = m.beta(a + b, cc, x).flat_map(|&(ab, z)| {
                        m.beta(a, b, ab).map_labels(|&(p, q)| (p, q, z))
                    });
                    let right = m.beta(a, b + cc, x).flat_map(|&(p, bc)| {
                        m.beta(b, cc, bc).map_labels(|&(q, z)| (p, q, z))
                    });
                    c.expect(left == right, || {
                        format!("(β_{{{a},{b}}}⊗1)β ≠ (1⊗β_{{{b},{cc}}})β on {}", m.label(n, x))
                    });
                }
            }
        }
    }
    out.push(c.finish());

    let mut c = Checker::new("monoid.beta_natural");
    for n in 2..=top {
        for a in 1..n {
            let b = n - a;
            for x in 0..m.dim(n) {
                let bx = m.beta(a, b, x);
                // inner faces of either factor
                for i in 1..a {
                    let l = m.face(i, n, x).flat_map(|&y| m.beta(a - 1, b, y));
                    let r = bx.flat_map(|&(p, q)| m.face(i, a, p).map_labels(|&p2| (p2, q)));
                    c.expect(l == r, || format!("β_{{{a},{b}}} not natural for F_{i} on {}", m.label(n, x)));
                }
                for i in 1..b {
                    let l = m.face(a + i, n, x).flat_map(|&y| m.beta(a, b - 1, y));
                    let r = bx.flat_map(|&(p, q)| m.face(i, b, q).map_labels(|&q2| (p, q2)));
                    c.expect(l == r, || format!("β_{{{a},{b}}} not natural for F_{} on {}", a + i, m.label(n, x)));
                }
                if n < top {
                    for j in 0..=a {
                        let l = m.degeneracy(j, n, x).flat_map(|&y| m.beta(a + 1, b, y));
                        let r = bx.flat_map(|&(p, q)| m.degeneracy(j, a, p).map_labels(|&p2| (p2, q)));
                        c.expect(l == r, || format!("β_{{{a},{b}}} not natural for D_{j} on {}", m.label(n, x)));
                    }
                    for j in 0..=b {
                        let l = m.degeneracy(a + j, n, x).flat_map(|&y| m.beta(a, b + 1, y));
                        let r = bx.flat_map(|&(p, q)| m.degeneracy(j, b, q).map_labels(|&q2| (p, q2)));
                        c.expect(l == r, || {
                            format!("β_{{{a},{b}}} not natural for D_{} on {}", a + j, m.label(n, x))
                        });
                    }
                }
            }
        }
    }
    out.push(c.finish());

    out.push(check_beta_quasi_iso(m));

    if m.is_algebra() {
        out.extend(check_algebra_structure(m, opts));
    }
    out
}

/// Cone of every `β_{a,b}` with `a, b ≥ 1` is acyclic.
fn check_beta_quasi_iso<M: LeinsterMonoid + ?Sized>(m: &M) -> CheckReport {
    let top = m.max_weight();
    let mut c = Checker::new("monoid.beta_quasi_iso");
    for n in 2..=top {
        let src = FiniteComplex::new((0..m.dim(n)).map(|x| (x, m.degree(n, x))), |&x| m.differential(n, x), None);
        for a in 1..n {
            let b = n - a;
            let cells = (0..m.dim(a))
                .flat_map(|p| (0..m.dim(b)).map(move |q| (p, q)))
                .map(|(p, q)| ((p, q), m.degree(a, p) + m.degree(b, q)));
            let tgt = FiniteComplex::new(cells, |&k| tensor_differential(m, a, b, &SparseVector::basis(k)), None);
            let result = match (&src, &tgt) {
                (Ok(s), Ok(t)) => mapping_cone(s, t, |&x| m.beta(a, b, x)).and_then(|cone| cone.homology_dims()),
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            };
            match result {
                Ok(h) => {
                    let h = nonzero_dims(&h);
                    c.expect(h.is_empty(), || format!("cone of β_{{{a},{b}}} has homology {h:?}"));
                }
                Err(e) => {
                    c.expect(false, || format!("β_{{{a},{b}}}: {e}"));
                }
            }
        }
    }
    c.finish()
}

fn check_algebra_structure<M: LeinsterMonoid + ?Sized>(m: &M, opts: MonoidCheckOptions) -> Vec<CheckReport> {
    let top = m.max_weight();
    let mul = |n: usize, u: &SparseVector<usize>, v: &SparseVector<usize>| u.bilinear(v, |&x, &y| m.product(n, x, y));
    let mul_pair = |a: usize, b: usize, u: &SparseVector<(usize, usize)>, v: &SparseVector<(usize, usize)>| {
        u.bilinear(v, |&(x1, x2), &(y1, y2)| {
            let e = m.degree(b, x2) * m.degree(a, y1);
            m.product(a, x1, y1)
                .bilinear(&m.product(b, x2, y2), |&p, &q| SparseVector::basis((p, q)))
                .signed(e)
        })
    };
    let mut unit_c = Checker::new("monoid.algebra_unit");
    let mut leib = Checker::new("monoid.algebra_leibniz");
    let mut grade = Checker::new("monoid.algebra_grading");
    let mut maps = Checker::new("monoid.algebra_maps");
    let mut assoc = Checker::new("monoid.algebra_associativity");
    for n in 0..=top {
        let Some(u) = m.unit(n) else {
            unit_c.expect(false, || format!("X_{n} has no unit"));
            continue;
        };
        unit_c.expect(m.differential(n, u).is_zero(), || format!("d(1) ≠ 0 in X_{n}"));
        for x in 0..m.dim(n) {
            let e = SparseVector::basis(x);
            unit_c.expect(m.product(n, u, x) == e && m.product(n, x, u) == e, || {
                format!("unit fails on {}", m.label(n, x))
            });
        }
        if n < top {
            for j in 0..=n {
                unit_c.expect(m.degeneracy(j, n, u) == SparseVector::basis(m.unit(n + 1).unwrap_or(usize::MAX)), || {
                    format!("D_{j} does not preserve the unit of X_{n}")
                });
            }
        }
        if n > opts.pair_weight {
            continue;
        }
        for x in 0..m.dim(n) {
            let dx = m.differential(n, x);
            let ex = SparseVector::basis(x);
            for y in 0..m.dim(n) {
                let xy = m.product(n, x, y);
                if xy.is_zero() && m.product(n, y, x).is_zero() && dx.is_zero() && m.differential(n, y).is_zero() {
                    continue;
                }
                let ey = SparseVector::basis(y);
                let l = xy.flat_map(|&z| m.differential(n, z));
                let r = mul(n, &dx, &ey) + mul(n, &ex, &m.differential(n, y)).signed(m.degree(n, x));
                leib.expect(l == r, || format!("Leibniz fails on {}, {}", m.label(n, x), m.label(n, y)));
                let sum: Vec<i64> = m.multidegree(n, x).iter().zip(m.multidegree(n, y)).map(|(p, q)| p + q).collect();
                for (t, _) in xy.iter() {
                    grade.expect(m.multidegree(n, *t) == sum, || {
                        format!("{}*{} leaves multidegree {sum:?}", m.label(n, x), m.label(n, y))
                    });
                }
                for i in 1..n {
                    let l = xy.flat_map(|&z| m.face(i, n, z));
                    let r = mul(n - 1, &m.face(i, n, x), &m.face(i, n, y));
                    maps.expect(l == r, || format!("F_{i} not multiplicative on {}, {}", m.label(n, x), m.label(n, y)));
                }
                if n < top {
                    for j in 0..=n {
                        let l = xy.flat_map(|&z| m.degeneracy(j, n, z));
                        let r = mul(n + 1, &m.degeneracy(j, n, x), &m.degeneracy(j, n, y));
                        maps.expect(l == r, || format!("D_{j} not multiplicative on {}, {}", m.label(n, x), m.label(n, y)));
                    }
                }
                for a in 1..n {
                    let b = n - a;
                    let l = xy.flat_map(|&z| m.beta(a, b, z));
                    let r = mul_pair(a, b, &m.beta(a, b, x), &m.beta(a, b, y));
                    maps.expect(l == r, || {
                        format!("β_{{{a},{b}}} not multiplicative on {}, {}", m.label(n, x), m.label(n, y))
                    });
                }
                if n <= opts.triple_weight && !xy.is_zero() {
                    for z in 0..m.dim(n) {
                        let ez = SparseVector::basis(z);
                        let l = mul(n, &xy, &ez);
                        let r = mul(n, &ex, &m.product(n, y, z));
                        assoc.expect(l == r, || {
                            format!("associativity fails on {}, {}, {}", m.label(n, x), m.label(n, y), m.label(n, z))
                        });
                    }
                }
            }
        }
    }
    vec![unit_c.finish(), leib.finish(), grade.finish(), maps.finish(), assoc.finish()]
}

/// Checks of the ♯-twist: restricted simplicial identities for
/// `F^♯, D^♯`, and `d^♯ = d^s` on every basis element.
pub fn check_sharp<M: LeinsterMonoid + ?Sized>(m: &M) -> Vec<CheckReport> {
    let s = sharp(m);
    let simp = check_simplicial_with(
        "sharp.simplicial",
        m,
        &|i, n, x| s.face(i, n, x),
        &|j, n, x| s.degeneracy(j, n, x),
    );
    let mut c = Checker::new("sharp.matches_signed_differential");
    for n in 0..=m.max_weight() {
        for x in 0..m.dim(n) {
            let l = s.chain_differential(n, x);
            let r = signed_face_sum(m, n, x, FaceSignRule::Standard);
            c.expect(l == r, || format!("d^♯ ≠ d^s on {}", m.label(n, x)));
        }
    }
    vec![simp, c.finish()]
}

/// Readable form of a vector in `X_n`.
pub fn display_in<M: LeinsterMonoid + ?Sized>(m: &M, n: usize, v: &SparseVector<usize>) -> String {
    display_vector(v, |&x| m.label(n, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta0::{all_morphisms, compose, w_map};
    use crate::dg_core::AlgebraBuilder;
    use crate::exact_linear::int;
    use crate::report::all_pass;

    fn field() -> DgAlgebra {
        AlgebraBuilder::new().element("1", 0).unit("1").build().unwrap()
    }

    fn dual0() -> DgAlgebra {
        AlgebraBuilder::new().element("1", 0).element("x", 0).unit("1").build().unwrap()
    }

    fn ext1() -> DgAlgebra {
        AlgebraBuilder::new().element("1", 0).element("ξ", 1).unit("1").build().unwrap()
    }

    fn cone() -> DgAlgebra {
        AlgebraBuilder::new().element("1", 0).element("ε", -1).unit("1").d("ε", "1", 1).build().unwrap()
    }

    #[test]
    fn field_monoid_is_trivial() {
        let m = from_dg_algebra(field(), 4).unwrap();
        for n in 0..=4 {
            assert_eq!(m.dim(n), 1);
        }
        assert_eq!(m.face(1, 3, 0), SparseVector::basis(0));
        assert!(all_pass(&check_monoid(&m)));
    }

    #[test]
    fn square_zero_face_kills_x_tensor_x() {
        let m = from_dg_algebra(dual0(), 4).unwrap();
        let xx = m.encode(&[1, 1]);
        assert_eq!(m.label(2, xx), "x⊗x");
        assert!(m.face(1, 2, xx).is_zero());
    }

    #[test]
    fn exterior_grading() {
        let m = from_dg_algebra(ext1(), 4).unwrap();
        let xx = m.encode(&[1, 1]);
        assert_eq!(m.multidegree(2, xx), vec![1, 1]);
        assert_eq!(m.degree(2, xx), 2);
    }

    #[test]
    fn non_unital_algebra_is_rejected() {
        let a = AlgebraBuilder::new().element("x", 0).build().unwrap();
        assert_eq!(from_dg_algebra(a, 3).unwrap_err(), LeinsterError::NonUnital);
    }

    #[test]
    fn catalog_monoids_pass() {
        for a in [field(), dual0(), ext1(), cone()] {
            let m = from_dg_algebra(a, 4).unwrap();
            let r = check_monoid(&m);
            assert!(all_pass(&r), "{r:?}");
            assert!(all_pass(&check_sharp(&m)));
        }
    }

    #[test]
    fn factorized_action_matches_direct_action() {
        let m = from_dg_algebra(ext1(), 4).unwrap();
        for k in 0..=4 {
            for n in 0..=4 {
                for f in all_morphisms(k, n) {
                    for x in 0..m.dim(n) {
                        assert_eq!(act(&m, &f, x), m.act_direct(&f, x), "{f:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn action_is_contravariant_functor() {
        let m = from_dg_algebra(dual0(), 3).unwrap();
        for (k, l, n) in [(1, 2, 3), (2, 1, 3), (3, 2, 1), (2, 3, 2)] {
            for f in all_morphisms(k, l) {
                for g in all_morphisms(l, n) {
                    let gf = compose(&g, &f).unwrap();
                    for x in 0..m.dim(n) {
                        let two_step = act(&m, &g, x).flat_map(|&y| act(&m, &f, y));
                        assert_eq!(act(&m, &gf, x), two_step);
                    }
                }
            }
        }
    }

    #[test]
    fn w_map_places_a_letter() {
        let m = from_dg_algebra(dual0(), 3).unwrap();
        let w = w_map(2, 3).unwrap();
        assert_eq!(m.label(3, act(&m, &w, 1).keys().next().copied().unwrap()), "1⊗x⊗1");
    }

    #[test]
    fn tensor_with_field_is_identity() {
        let x: SharedMonoid = Arc::new(from_dg_algebra(ext1(), 3).unwrap());
        let k: SharedMonoid = Arc::new(from_dg_algebra(field(), 3).unwrap());
        let z = tensor_monoid(x.clone(), k).unwrap();
        for n in 0..=3 {
            assert_eq!(z.dim(n), x.dim(n));
            for v in 0..x.dim(n) {
                assert_eq!(z.multidegree(n, v), x.multidegree(n, v));
                for i in 1..n {
                    assert_eq!(z.face(i, n, v), x.face(i, n, v));
                }
            }
        }
        assert!(all_pass(&check_monoid(&z)));
    }

    #[test]
    fn tensor_beta_interchange_sign() {
        let x = Arc::new(from_dg_algebra(ext1(), 2).unwrap());
        let z = tensor_monoid(x.clone(), x.clone()).unwrap();
        let xx = x.encode(&[1, 1]);
        let zz = xx * x.dim(2) + xx;
        let xi = 1 * x.dim(1) + 1;
        assert_eq!(z.beta(1, 1, zz), SparseVector::term((xi, xi), int(-1)));
        assert!(all_pass(&check_monoid(&z)));
    }

    #[test]
    fn tensor_weight_mismatch() {
        let x: SharedMonoid = Arc::new(from_dg_algebra(ext1(), 2).unwrap());
        let y: SharedMonoid = Arc::new(from_dg_algebra(ext1(), 3).unwrap());
        assert!(matches!(tensor_monoid(x, y), Err(LeinsterError::WeightMismatch(2, 3))));
    }

    #[test]
    fn deleted_degeneracy_is_named() {
        let m = from_dg_algebra(dual0(), 3).unwrap();
        let mut t = TableMonoid::materialize(&m);
        assert!(all_pass(&check_monoid(&t)));
        t.remove_degeneracy(0, 1);
        let r = check_monoid(&t);
        let s = r.iter().find(|c| c.name == "monoid.structure_maps").unwrap();
        assert!(!s.passed());
        assert_eq!(s.witness.as_deref(), Some("missing degeneracy D_0 on X_1"));
    }

    #[test]
    fn table_json_round_trip() {
        let m = from_dg_algebra(cone(), 3).unwrap();
        let t = TableMonoid::materialize(&m);
        let text = serde_json::to_string(&t.to_doc()).unwrap();
        let back = TableMonoid::from_json(&text).unwrap();
        assert_eq!(back.to_doc(), t.to_doc());
        assert!(all_pass(&check_monoid(&back)));
    }

    #[test]
    fn sharp_signs() {
        let z = from_dg_algebra(dual0(), 3).unwrap();
        let s = sharp(&z);
        for x in 0..z.dim(3) {
            assert_eq!(s.face(1, 3, x), z.face(1, 3, x));
            assert_eq!(s.degeneracy(2, 3 - 1, x % z.dim(2)), z.degeneracy(2, 2, x % z.dim(2)));
        }
        let e = from_dg_algebra(ext1(), 3).unwrap();
        let xx = e.encode(&[1, 1]);
        assert!(sharp(&e).face(1, 2, xx).is_zero());
        let one_xi = e.encode(&[0, 1]);
        assert_eq!(sharp(&e).degeneracy(2, 2, one_xi), e.degeneracy(2, 2, one_xi).signed(1));
    }

    #[test]
    fn broken_face_breaks_simplicial_identities() {
        let m = from_dg_algebra(dual0(), 3).unwrap();
        let mut t = TableMonoid::materialize(&m);
        let x1 = m.encode(&[1, 0, 0]);
        t.set_face(2, 3, x1, SparseVector::zero());
        let r = check_monoid(&t);
        assert!(!r.iter().find(|c| c.name == "monoid.simplicial").unwrap().passed());
    }
}
