//! Finite dg algebras, conilpotent dg coalgebras and dg bialgebras over ℚ,
//! stored by structure constants on an indexed basis, with axiom checks.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_linear::{format_scalar, int, parse_scalar, sign, LinearError, Scalar, SparseVector};
use crate::report::{CheckReport, Checker, Status};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DgError {
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("differential of {from:?} hits {to:?}, which is not one degree higher")]
    DifferentialDegree { from: String, to: String },
    #[error("product {left:?}*{right:?} has a term {term:?} of the wrong degree")]
    ProductDegree { left: String, right: String, term: String },
    #[error("coproduct of {0:?} is not degree preserving")]
    CoproductDegree(String),
    #[error("unsupported schema_version {0} (expected {SCHEMA_VERSION})")]
    SchemaVersion(u32),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error("{0}")]
    Invalid(String),
}

/// Basis element of a graded space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisElement {
    pub label: String,
    pub degree: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multidegree: Option<Vec<i64>>,
}

/// Weights on basis elements plus a cap; products above the cap vanish
/// and axiom checks skip tuples that would leave the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightWindow {
    pub weights: Vec<usize>,
    pub max: usize,
}

/// Finite-dimensional dg algebra given by structure constants.
#[derive(Clone, Debug)]
pub struct DgAlgebra {
    basis: Vec<BasisElement>,
    index: HashMap<String, usize>,
    differential: Vec<SparseVector<usize>>,
    product: BTreeMap<(usize, usize), SparseVector<usize>>,
    unit: Option<usize>,
    window: Option<WeightWindow>,
}

impl DgAlgebra {
    /// Validates degrees; products with a declared unit default to `1·a = a·1 = a`.
    pub fn new(
        basis: Vec<BasisElement>,
        differential: Vec<SparseVector<usize>>,
        mut product: BTreeMap<(usize, usize), SparseVector<usize>>,
        unit: Option<usize>,
    ) -> Result<Self, DgError> {
        let mut index = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            if index.insert(b.label.clone(), i).is_some() {
                return Err(DgError::DuplicateLabel(b.label.clone()));
            }
        }
        if differential.len() != basis.len() {
            return Err(DgError::Invalid("one differential entry per basis element required".into()));
        }
        let n = basis.len();
        let name = |i: usize| basis.get(i).map(|b| b.label.clone()).unwrap_or_else(|| format!("#{i}"));
        for (i, v) in differential.iter().enumerate() {
            for &t in v.keys() {
                if t >= n || basis[t].degree != basis[i].degree + 1 {
                    return Err(DgError::DifferentialDegree { from: name(i), to: name(t) });
                }
            }
        }
        if let Some(u) = unit {
            if u >= n {
                return Err(DgError::Invalid("unit index out of range".into()));
            }
            for a in 0..n {
                product.entry((u, a)).or_insert_with(|| SparseVector::basis(a));
                product.entry((a, u)).or_insert_with(|| SparseVector::basis(a));
            }
        }
        product.retain(|_, v| !v.is_zero());
        for (&(a, b), v) in &product {
            if a >= n || b >= n {
                return Err(DgError::Invalid("product index out of range".into()));
            }
            for &t in v.keys() {
                if t >= n || basis[t].degree != basis[a].degree + basis[b].degree {
                    return Err(DgError::ProductDegree { left: name(a), right: name(b), term: name(t) });
                }
            }
        }
        Ok(Self {
            basis,
            index,
            differential,
            product,
            unit,
            window: None,
        })
    }

    pub fn with_window(mut self, window: WeightWindow) -> Self {
        self.window = Some(window);
        self
    }

    pub fn window(&self) -> Option<&WeightWindow> {
        self.window.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn index_of(&self, label: &str) -> Result<usize, DgError> {
        self.index.get(label).copied().ok_or_else(|| DgError::UnknownLabel(label.to_string()))
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn d_basis(&self, i: usize) -> &SparseVector<usize> {
        &self.differential[i]
    }

    pub fn d(&self, v: &SparseVector<usize>) -> SparseVector<usize> {
        v.flat_map(|&i| self.differential[i].clone())
    }

    pub fn mul_basis(&self, a: usize, b: usize) -> SparseVector<usize> {
        self.product.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn mul(&self, u: &SparseVector<usize>, v: &SparseVector<usize>) -> SparseVector<usize> {
        u.bilinear(v, |&a, &b| self.mul_basis(a, b))
    }

    pub fn nonzero_products(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVector<usize>)> {
        self.product.iter()
    }

    /// Whether a tuple of basis elements stays inside the weight window.
    pub fn in_window(&self, items: &[usize]) -> bool {
        match &self.window {
            None => true,
            Some(w) => items.iter().map(|&i| w.weights[i]).sum::<usize>() <= w.max,
        }
    }

    pub fn display(&self, v: &SparseVector<usize>) -> String {
        display_vector(v, |&i| self.basis[i].label.clone())
    }

    /// Load from the versioned JSON schema.
    pub fn from_json(text: &str) -> Result<Self, DgError> {
        let doc: DgAlgebraDoc = serde_json::from_str(text).map_err(|e| DgError::Json(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn from_doc(doc: &DgAlgebraDoc) -> Result<Self, DgError> {
        if doc.schema_version != SCHEMA_VERSION {
            return Err(DgError::SchemaVersion(doc.schema_version));
        }
        let mut index = HashMap::new();
        for (i, b) in doc.basis.iter().enumerate() {
            if index.insert(b.label.as_str(), i).is_some() {
                return Err(DgError::DuplicateLabel(b.label.clone()));
            }
        }
        let look = |l: &str| index.get(l).copied().ok_or_else(|| DgError::UnknownLabel(l.to_string()));
        let mut differential = vec![SparseVector::zero(); doc.basis.len()];
        for e in &doc.differential {
            let c = parse_scalar(&e.coeff)?;
            differential[look(&e.from)?].add_term(look(&e.to)?, c);
        }
        let mut product: BTreeMap<(usize, usize), SparseVector<usize>> = BTreeMap::new();
        for e in &doc.product {
            let key = (look(&e.left)?, look(&e.right)?);
            let entry = product.entry(key).or_default();
            for t in &e.result {
                entry.add_term(look(&t.label)?, parse_scalar(&t.coeff)?);
            }
        }
        let unit = doc.unit.as_deref().map(look).transpose()?;
        Self::new(doc.basis.clone(), differential, product, unit)
    }

    pub fn to_doc(&self) -> DgAlgebraDoc {
        let label = |i: &usize| self.basis[*i].label.clone();
        let mut differential = Vec::new();
        for (i, v) in self.differential.iter().enumerate() {
            for (t, c) in v.iter() {
                differential.push(DifferentialEntry {
                    from: label(&i),
                    to: label(t),
                    coeff: format_scalar(c),
                });
            }
        }
        let product = self
            .product
            .iter()
            .filter(|((a, b), _)| Some(*a) != self.unit && Some(*b) != self.unit)
            .map(|((a, b), v)| ProductEntry {
                left: label(a),
                right: label(b),
                result: v
                    .iter()
                    .map(|(t, c)| TermDoc {
                        label: label(t),
                        coeff: format_scalar(c),
                    })
                    .collect(),
            })
            .collect();
        DgAlgebraDoc {
            schema_version: SCHEMA_VERSION,
            name: None,
            basis: self.basis.clone(),
            unit: self.unit.map(|u| label(&u)),
            differential,
            product,
        }
    }
}

/// Human-readable rendering of a sparse vector.
pub fn display_vector<K: Ord + Clone>(v: &SparseVector<K>, name: impl Fn(&K) -> String) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter()
        .map(|(k, c)| {
            if c.is_one() {
                name(k)
            } else {
                format!("({}){}", format_scalar(c), name(k))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// JSON form of a dg algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DgAlgebraDoc {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub basis: Vec<BasisElement>,
    pub unit: Option<String>,
    #[serde(default)]
    pub differential: Vec<DifferentialEntry>,
    #[serde(default)]
    pub product: Vec<ProductEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialEntry {
    pub from: String,
    pub to: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub result: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub label: String,
    pub coeff: String,
}

/// Fluent construction of small algebras by label.
#[derive(Default)]
pub struct AlgebraBuilder {
    basis: Vec<BasisElement>,
    unit: Option<String>,
    differential: Vec<(String, String, Scalar)>,
    product: Vec<(String, String, Vec<(String, Scalar)>)>,
}

impl AlgebraBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn element(mut self, label: &str, degree: i64) -> Self {
        self.basis.push(BasisElement {
            label: label.into(),
            degree,
            multidegree: None,
        });
        self
    }

    pub fn unit(mut self, label: &str) -> Self {
        self.unit = Some(label.into());
        self
    }

    pub fn d(mut self, from: &str, to: &str, c: i64) -> Self {
        self.differential.push((from.into(), to.into(), int(c)));
        self
    }

    pub fn product(mut self, left: &str, right: &str, result: &[(&str, i64)]) -> Self {
        self.product.push((
            left.into(),
            right.into(),
            result.iter().map(|(l, c)| (l.to_string(), int(*c))).collect(),
        ));
        self
    }

    pub fn build(self) -> Result<DgAlgebra, DgError> {
        let doc = DgAlgebraDoc {
            schema_version: SCHEMA_VERSION,
            name: None,
            basis: self.basis,
            unit: self.unit,
            differential: self
                .differential
                .into_iter()
                .map(|(from, to, c)| DifferentialEntry {
                    from,
                    to,
                    coeff: format_scalar(&c),
                })
                .collect(),
            product: self
                .product
                .into_iter()
                .map(|(left, right, r)| ProductEntry {
                    left,
                    right,
                    result: r
                        .into_iter()
                        .map(|(label, c)| TermDoc {
                            label,
                            coeff: format_scalar(&c),
                        })
                        .collect(),
                })
                .collect(),
        };
        DgAlgebra::from_doc(&doc)
    }
}

/// Axiom suite for a dg algebra: d² = 0, Leibniz, associativity, unit and
/// (when present) multidegree additivity of the product.
pub fn check_dg_algebra(a: &DgAlgebra) -> Vec<CheckReport> {
    let n = a.dim();
    let mut out = Vec::new();

    let mut c = Checker::new("algebra.d_squared");
    for i in 0..n {
        c.expect(a.d(a.d_basis(i)).is_zero(), || format!("d²({}) ≠ 0", a.label(i)));
    }
    out.push(c.finish());

    let mut c = Checker::new("algebra.leibniz");
    for i in 0..n {
        for j in 0..n {
            if !a.in_window(&[i, j]) {
                continue;
            }
            let lhs = a.d(&a.mul_basis(i, j));
            let rhs = a.mul(a.d_basis(i), &SparseVector::basis(j))
                + a.mul(&SparseVector::basis(i), a.d_basis(j)).signed(a.degree(i));
            c.expect(lhs == rhs, || format!("d({0}*{1}) ≠ d({0})*{1} ± {0}*d({1})", a.label(i), a.label(j)));
        }
    }
    out.push(c.finish());

    let mut c = Checker::new("algebra.associativity");
    for i in 0..n {
        for j in 0..n {
            let ij = a.mul_basis(i, j);
            for k in 0..n {
                if !a.in_window(&[i, j, k]) {
                    continue;
                }
                let left = a.mul(&ij, &SparseVector::basis(k));
                let right = a.mul(&SparseVector::basis(i), &a.mul_basis(j, k));
                c.expect(left == right, || format!("({0}*{1})*{2} ≠ {0}*({1}*{2})", a.label(i), a.label(j), a.label(k)));
            }
        }
    }
    out.push(c.finish());

    if let Some(u) = a.unit() {
        let mut c = Checker::new("algebra.unit");
        c.expect(a.d_basis(u).is_zero(), || "d(1) ≠ 0".into());
        for i in 0..n {
            let e = SparseVector::basis(i);
            c.expect(a.mul_basis(u, i) == e && a.mul_basis(i, u) == e, || format!("1 is not a unit on {}", a.label(i)));
        }
        out.push(c.finish());
    }

    if a.basis().iter().any(|b| b.multidegree.is_some()) {
        let mut c = Checker::new("algebra.multidegree");
        for (&(i, j), v) in a.nonzero_products() {
            let (Some(mi), Some(mj)) = (&a.basis[i].multidegree, &a.basis[j].multidegree) else {
                c.expect(false, || format!("missing multidegree on {} or {}", a.label(i), a.label(j)));
                continue;
            };
            let sum: Vec<i64> = mi.iter().zip(mj).map(|(x, y)| x + y).collect();
            for &t in v.keys() {
                c.expect(a.basis[t].multidegree.as_ref() == Some(&sum), || {
                    format!("{}*{} has term {} off multidegree {:?}", a.label(i), a.label(j), a.label(t), sum)
                });
            }
        }
        out.push(c.finish());
    }
    out
}

/// Basis cell of a coalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoalgebraCell {
    pub label: String,
    pub degree: i64,
    pub weight: usize,
}

/// Dg coalgebra given by structure constants.
#[derive(Clone, Debug)]
pub struct DgCoalgebra {
    cells: Vec<CoalgebraCell>,
    differential: Vec<SparseVector<usize>>,
    coproduct: Vec<SparseVector<(usize, usize)>>,
}

impl DgCoalgebra {
    pub fn new(
        cells: Vec<CoalgebraCell>,
        differential: Vec<SparseVector<usize>>,
        coproduct: Vec<SparseVector<(usize, usize)>>,
    ) -> Result<Self, DgError> {
        let n = cells.len();
        if differential.len() != n || coproduct.len() != n {
            return Err(DgError::Invalid("one differential and coproduct entry per cell required".into()));
        }
        for (i, v) in differential.iter().enumerate() {
            for &t in v.keys() {
                if t >= n || cells[t].degree != cells[i].degree + 1 {
                    return Err(DgError::DifferentialDegree {
                        from: cells[i].label.clone(),
                        to: cells.get(t).map(|c| c.label.clone()).unwrap_or_default(),
                    });
                }
            }
        }
        for (i, v) in coproduct.iter().enumerate() {
            for &(l, r) in v.keys() {
                if l >= n || r >= n || cells[l].degree + cells[r].degree != cells[i].degree {
                    return Err(DgError::CoproductDegree(cells[i].label.clone()));
                }
            }
        }
        Ok(Self {
            cells,
            differential,
            coproduct,
        })
    }

    pub fn dim(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[CoalgebraCell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &CoalgebraCell {
        &self.cells[i]
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.cells[i].degree
    }

    pub fn weight(&self, i: usize) -> usize {
        self.cells[i].weight
    }

    pub fn max_weight(&self) -> usize {
        self.cells.iter().map(|c| c.weight).max().unwrap_or(0)
    }

    pub fn d_basis(&self, i: usize) -> &SparseVector<usize> {
        &self.differential[i]
    }

    pub fn d(&self, v: &SparseVector<usize>) -> SparseVector<usize> {
        v.flat_map(|&i| self.differential[i].clone())
    }

    pub fn coproduct_basis(&self, i: usize) -> &SparseVector<(usize, usize)> {
        &self.coproduct[i]
    }

    pub fn coproduct(&self, v: &SparseVector<usize>) -> SparseVector<(usize, usize)> {
        v.flat_map(|&i| self.coproduct[i].clone())
    }

    /// `(d ⊗ 1 + 1 ⊗ d)` with the Koszul sign on the second slot.
    pub fn d_tensor(&self, v: &SparseVector<(usize, usize)>) -> SparseVector<(usize, usize)> {
        let mut out = SparseVector::zero();
        for (&(l, r), c) in v.iter() {
            out.add_scaled(&self.differential[l].map_labels(|&x| (x, r)), c);
            out.add_scaled(&self.differential[r].map_labels(|&y| (l, y)), &(c * sign(self.degree(l))));
        }
        out
    }

    /// Iterated coproduct into `k`-fold tensors, splitting the first factor.
    pub fn iterated_coproduct(&self, i: usize, k: usize) -> SparseVector<Vec<usize>> {
        let mut cur = SparseVector::basis(vec![i]);
        for _ in 1..k {
            cur = cur.flat_map(|w| {
                self.coproduct[w[0]].map_labels(|&(l, r)| {
                    let mut nw = Vec::with_capacity(w.len() + 1);
                    nw.push(l);
                    nw.push(r);
                    nw.extend_from_slice(&w[1..]);
                    nw
                })
            });
            if cur.is_zero() {
                break;
            }
        }
        cur
    }

    pub fn display(&self, v: &SparseVector<usize>) -> String {
        display_vector(v, |&i| self.cells[i].label.clone())
    }
}

fn coassociativity_defect(coproduct: &[SparseVector<(usize, usize)>], i: usize) -> SparseVector<(usize, usize, usize)> {
    let mut left = SparseVector::zero();
    let mut right = SparseVector::zero();
    for (&(l, r), c) in coproduct[i].iter() {
        left.add_scaled(&coproduct[l].map_labels(|&(a, b)| (a, b, r)), c);
        right.add_scaled(&coproduct[r].map_labels(|&(a, b)| (l, a, b)), c);
    }
    left - right
}

/// Axiom suite for a conilpotent dg coalgebra. `cap` bounds the iterated
/// coproduct; it defaults to the top weight plus one.
pub fn check_dg_coalgebra(c: &DgCoalgebra, cap: Option<usize>) -> Vec<CheckReport> {
    let mut out = coalgebra_axioms(c);
    let cap = cap.unwrap_or(c.max_weight() + 1);
    let mut level = 0;
    let mut undecided = None;
    for i in 0..c.dim() {
        let mut k = 1;
        loop {
            if c.iterated_coproduct(i, k + 1).is_zero() {
                level = level.max(k);
                break;
            }
            k += 1;
            if k > cap {
                undecided = Some(c.cell(i).label.clone());
                break;
            }
        }
        if undecided.is_some() {
            break;
        }
    }
    let name = "coalgebra.conilpotent";
    out.push(match undecided {
        None => CheckReport::pass(name, c.dim()).with_note(format!("F_{level} is exhaustive")),
        Some(l) => CheckReport {
            status: Status::Undecided,
            witness: Some(l),
            ..CheckReport::pass(name, c.dim())
        }
        .with_note(format!("conilpotency undecided at cap {cap}")),
    });
    out
}

fn coalgebra_axioms(c: &DgCoalgebra) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut ch = Checker::new("coalgebra.d_squared");
    for i in 0..c.dim() {
        ch.expect(c.d(c.d_basis(i)).is_zero(), || format!("d²({}) ≠ 0", c.cell(i).label));
    }
    out.push(ch.finish());

    let mut ch = Checker::new("coalgebra.coassociativity");
    for i in 0..c.dim() {
        ch.expect(coassociativity_defect(&c.coproduct, i).is_zero(), || {
            format!("(Δ⊗1)Δ ≠ (1⊗Δ)Δ on {}", c.cell(i).label)
        });
    }
    out.push(ch.finish());

    let mut ch = Checker::new("coalgebra.co_leibniz");
    for i in 0..c.dim() {
        let lhs = c.coproduct(c.d_basis(i));
        let rhs = c.d_tensor(c.coproduct_basis(i));
        ch.expect(lhs == rhs, || format!("Δd ≠ (d⊗1 + 1⊗d)Δ on {}", c.cell(i).label));
    }
    out.push(ch.finish());
    out
}

/// Dg bialgebra: an algebra and a coproduct on the same indexed basis.
#[derive(Clone, Debug)]
pub struct DgBialgebra {
    pub algebra: DgAlgebra,
    coproduct: Vec<SparseVector<(usize, usize)>>,
}

impl DgBialgebra {
    pub fn new(algebra: DgAlgebra, coproduct: Vec<SparseVector<(usize, usize)>>) -> Result<Self, DgError> {
        if coproduct.len() != algebra.dim() {
            return Err(DgError::Invalid("one coproduct entry per basis element required".into()));
        }
        for (i, v) in coproduct.iter().enumerate() {
            for &(l, r) in v.keys() {
                if algebra.degree(l) + algebra.degree(r) != algebra.degree(i) {
                    return Err(DgError::CoproductDegree(algebra.label(i).into()));
                }
            }
        }
        Ok(Self { algebra, coproduct })
    }

    pub fn coproduct_basis(&self, i: usize) -> &SparseVector<(usize, usize)> {
        &self.coproduct[i]
    }

    pub fn coproduct(&self, v: &SparseVector<usize>) -> SparseVector<(usize, usize)> {
        v.flat_map(|&i| self.coproduct[i].clone())
    }

    /// Product on `B ⊗ B` with the middle interchange sign.
    pub fn mul_tensor(&self, u: &SparseVector<(usize, usize)>, v: &SparseVector<(usize, usize)>) -> SparseVector<(usize, usize)> {
        let a = &self.algebra;
        u.bilinear(v, |&(a1, a2), &(b1, b2)| {
            let s = sign(a.degree(a2) * a.degree(b1));
            a.mul_basis(a1, b1)
                .bilinear(&a.mul_basis(a2, b2), |&x, &y| SparseVector::basis((x, y)))
                .scaled(&s)
        })
    }

    /// Underlying coalgebra, weights taken from the window when present.
    pub fn coalgebra(&self) -> DgCoalgebra {
        let a = &self.algebra;
        let cells = (0..a.dim())
            .map(|i| CoalgebraCell {
                label: a.label(i).to_string(),
                degree: a.degree(i),
                weight: a.window().map(|w| w.weights[i]).unwrap_or(0),
            })
            .collect();
        let differential = (0..a.dim()).map(|i| a.d_basis(i).clone()).collect();
        DgCoalgebra::new(cells, differential, self.coproduct.clone()).expect("validated in new")
    }
}

/// Algebra and coalgebra axioms plus `Δ(ab) = Δ(a)Δ(b)` on in-window pairs.
/// Conilpotency is not checked: a unital bialgebra carries `Δ(1) = 1 ⊗ 1`.
pub fn check_bialgebra(b: &DgBialgebra) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = check_dg_algebra(&b.algebra);
    out.extend(coalgebra_axioms(&b.coalgebra()));
    let a = &b.algebra;
    let mut ch = Checker::new("bialgebra.interchange");
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if !a.in_window(&[i, j]) {
                continue;
            }
            let lhs = b.coproduct(&a.mul_basis(i, j));
            let rhs = b.mul_tensor(b.coproduct_basis(i), b.coproduct_basis(j));
            ch.expect(lhs == rhs, || format!("Δ({0}*{1}) ≠ Δ({0})*Δ({1})", a.label(i), a.label(j)));
        }
    }
    out.push(ch.finish());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    fn dual0() -> DgAlgebra {
        AlgebraBuilder::new().element("1", 0).element("x", 0).unit("1").build().unwrap()
    }

    fn cone() -> DgAlgebra {
        AlgebraBuilder::new()
            .element("1", 0)
            .element("e", -1)
            .unit("1")
            .d("e", "1", 1)
            .build()
            .unwrap()
    }

    #[test]
    fn field_and_square_zero_pass() {
        let k = AlgebraBuilder::new().element("1", 0).unit("1").build().unwrap();
        assert!(all_pass(&check_dg_algebra(&k)));
        assert!(all_pass(&check_dg_algebra(&dual0())));
        assert!(all_pass(&check_dg_algebra(&cone())));
    }

    #[test]
    fn broken_leibniz_is_caught() {
        // idempotent x with dx = y but y*x = x*y = 0
        let bad = AlgebraBuilder::new()
            .element("1", 0)
            .element("x", 0)
            .element("y", 1)
            .unit("1")
            .d("x", "y", 1)
            .product("x", "x", &[("x", 1)])
            .build()
            .unwrap();
        let r = check_dg_algebra(&bad);
        let leib = r.iter().find(|c| c.name == "algebra.leibniz").unwrap();
        assert!(!leib.passed());
    }

    #[test]
    fn degree_errors_are_reported() {
        let err = AlgebraBuilder::new().element("1", 0).element("x", 0).d("x", "1", 1).build().unwrap_err();
        assert!(matches!(err, DgError::DifferentialDegree { .. }));
        let err = AlgebraBuilder::new().element("1", 0).element("x", 1).product("x", "x", &[("1", 1)]).build().unwrap_err();
        assert!(matches!(err, DgError::ProductDegree { .. }));
        let err = AlgebraBuilder::new().element("1", 0).unit("y").build().unwrap_err();
        assert_eq!(err, DgError::UnknownLabel("y".into()));
    }

    #[test]
    fn json_round_trip() {
        let a = cone();
        let text = serde_json::to_string(&a.to_doc()).unwrap();
        let b = DgAlgebra::from_json(&text).unwrap();
        assert_eq!(b.to_doc(), a.to_doc());
        assert!(matches!(DgAlgebra::from_json("{"), Err(DgError::Json(_))));
        let wrong = text.replace("\"schema_version\":1", "\"schema_version\":9");
        assert_eq!(DgAlgebra::from_json(&wrong).unwrap_err(), DgError::SchemaVersion(9));
    }

    fn co_leibniz_fixture(flip: bool) -> DgCoalgebra {
        let cell = |l: &str, d: i64| CoalgebraCell { label: l.into(), degree: d, weight: 1 };
        let cells = vec![cell("w", 0), cell("x", 0), cell("y", 1), cell("v", 1)];
        let (x, y, v) = (1, 2, 3);
        let differential = vec![
            SparseVector::basis(v),
            SparseVector::basis(y),
            SparseVector::zero(),
            SparseVector::zero(),
        ];
        let s = if flip { -1 } else { 1 };
        let coproduct = vec![
            SparseVector::basis((x, x)),
            SparseVector::zero(),
            SparseVector::zero(),
            SparseVector::from_terms([((y, x), int(1)), ((x, y), int(s))]),
        ];
        DgCoalgebra::new(cells, differential, coproduct).unwrap()
    }

    #[test]
    fn co_leibniz_negative_control() {
        assert!(all_pass(&check_dg_coalgebra(&co_leibniz_fixture(false), None)));
        let r = check_dg_coalgebra(&co_leibniz_fixture(true), None);
        let cl = r.iter().find(|c| c.name == "coalgebra.co_leibniz").unwrap();
        assert_eq!(cl.status, Status::Fail);
        assert!(cl.witness.as_deref().unwrap().contains('w'));
    }

    #[test]
    fn zero_coproduct_is_conilpotent_at_level_one() {
        let cells = vec![CoalgebraCell { label: "c".into(), degree: 0, weight: 1 }];
        let c = DgCoalgebra::new(cells, vec![SparseVector::zero()], vec![SparseVector::zero()]).unwrap();
        let r = check_dg_coalgebra(&c, None);
        assert!(all_pass(&r));
        assert_eq!(r.last().unwrap().note.as_deref(), Some("F_1 is exhaustive"));
    }

    #[test]
    fn conilpotency_cap_is_undecided_not_failed() {
        // Δc = c ⊗ c never dies
        let cells = vec![CoalgebraCell { label: "c".into(), degree: 0, weight: 1 }];
        let c = DgCoalgebra::new(cells, vec![SparseVector::zero()], vec![SparseVector::basis((0, 0))]).unwrap();
        let r = check_dg_coalgebra(&c, Some(3));
        assert_eq!(r.last().unwrap().status, Status::Undecided);
    }
}
