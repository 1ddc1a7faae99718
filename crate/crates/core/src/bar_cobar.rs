//! Signed bar coalgebra of a graded Leinster monoid, the cobar algebra of a
//! conilpotent dg coalgebra, the weight strata `L_n`, and the counit
//! `Φ: Cobar(Bar X) → X_1` with its section `ι`.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::dg_core::{check_dg_coalgebra, display_vector, CoalgebraCell, DgAlgebra, DgCoalgebra, DgError};
use crate::exact_linear::{mapping_cone, nonzero_dims, sign, FiniteComplex, LinearError, SparseVector};
use crate::leinster::{signed_face_sum, AlgebraMonoid, FaceSignRule, LeinsterMonoid, SharedMonoid};
use crate::report::{CheckReport, Checker, Status};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BarCobarError {
    #[error("truncation weight {requested} exceeds the monoid's {available}")]
    WeightTooLarge { requested: usize, available: usize },
    #[error("stratum L_{n} needs weight {} but only {max} is available", n + 1)]
    StratumOutOfRange { n: usize, max: usize },
    #[error("cell {0:?} has weight 0; cobar words need positive letter weights")]
    WeightlessCell(String),
    #[error("coproduct or differential of {0:?} raises weight")]
    WeightRaised(String),
    #[error("conilpotency undecided at cap {0}")]
    ConilpotencyUndecided(usize),
    #[error("monoid has no products, Φ is undefined")]
    NotAlgebra,
    #[error("algebra has no unit")]
    NonUnital,
    #[error(transparent)]
    Dg(#[from] DgError),
    #[error(transparent)]
    Linear(#[from] LinearError),
}

/// Basis cell of the bar complex: `(weight, index in X_weight)`.
pub type BarCell = (usize, usize);

/// Which parts of the bar differential to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BarPart {
    /// `d^s - ∂`.
    Full,
    /// Only the weight-preserving `-∂`.
    Internal,
}

/// The bar coalgebra `Bar(X)` truncated at weight `N`, with total
/// differential `d^s - ∂`, where `∂` is the internal differential twisted by
/// `(-1)^{k-1}` on slot `k`.
#[derive(Clone)]
pub struct BarComplex {
    monoid: SharedMonoid,
    max_weight: usize,
    rule: FaceSignRule,
}

/// Build `Bar(X)` up to weight `max_weight`.
pub fn bar(monoid: SharedMonoid, max_weight: usize) -> Result<BarComplex, BarCobarError> {
    BarComplex::new(monoid, max_weight, FaceSignRule::Standard)
}

impl BarComplex {
    pub fn new(monoid: SharedMonoid, max_weight: usize, rule: FaceSignRule) -> Result<Self, BarCobarError> {
        if max_weight > monoid.max_weight() {
            return Err(BarCobarError::WeightTooLarge {
                requested: max_weight,
                available: monoid.max_weight(),
            });
        }
        Ok(Self {
            monoid,
            max_weight,
            rule,
        })
    }

    pub fn monoid(&self) -> &SharedMonoid {
        &self.monoid
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn rule(&self) -> FaceSignRule {
        self.rule
    }

    /// Cells of positive weight, ordered by weight then index.
    pub fn cells(&self) -> Vec<BarCell> {
        (1..=self.max_weight).flat_map(|n| (0..self.monoid.dim(n)).map(move |x| (n, x))).collect()
    }

    /// `-n + a_1 + … + a_n`.
    pub fn degree(&self, (n, x): BarCell) -> i64 {
        self.monoid.degree(n, x) - n as i64
    }

    pub fn label(&self, (n, x): BarCell) -> String {
        format!("[{}]", self.monoid.label(n, x))
    }

    /// `d^s` on a cell.
    pub fn signed_faces(&self, (n, x): BarCell) -> SparseVector<BarCell> {
        signed_face_sum(self.monoid.as_ref(), n, x, self.rule).map_labels(|&y| (n - 1, y))
    }

    /// Internal differential with the slot twist `(-1)^{k-1}`.
    pub fn twisted_internal(&self, (n, x): BarCell) -> SparseVector<BarCell> {
        let md = self.monoid.multidegree(n, x);
        let mut out = SparseVector::zero();
        for (&y, c) in self.monoid.differential(n, x).iter() {
            let my = self.monoid.multidegree(n, y);
            let e: i64 = md.iter().zip(&my).enumerate().map(|(k, (a, b))| (b - a) * k as i64).sum();
            out.add_term((n, y), c * sign(e));
        }
        out
    }

    pub fn differential_part(&self, cell: BarCell, part: BarPart) -> SparseVector<BarCell> {
        let internal = -self.twisted_internal(cell);
        match part {
            BarPart::Full => self.signed_faces(cell) + internal,
            BarPart::Internal => internal,
        }
    }

    pub fn d(&self, cell: BarCell) -> SparseVector<BarCell> {
        self.differential_part(cell, BarPart::Full)
    }

    pub fn d_vec(&self, v: &SparseVector<BarCell>) -> SparseVector<BarCell> {
        v.flat_map(|&c| self.d(c))
    }

    /// Reduced coproduct `⊕_{a,b>0} β_{a,b}`.
    pub fn coproduct(&self, (n, x): BarCell) -> SparseVector<(BarCell, BarCell)> {
        let mut out = SparseVector::zero();
        for a in 1..n {
            out += &self.monoid.beta(a, n - a, x).map_labels(|&(p, q)| ((a, p), (n - a, q)));
        }
        out
    }

    /// Coproduct including the `a = 0` and `b = 0` terms with the unit cell `(0, 0)`.
    pub fn augmented_coproduct(&self, (n, x): BarCell) -> SparseVector<(BarCell, BarCell)> {
        let mut out = SparseVector::zero();
        for a in 0..=n {
            out += &self.monoid.beta(a, n - a, x).map_labels(|&(p, q)| ((a, p), (n - a, q)));
        }
        out
    }

    /// Contracting homotopy `h(x) = 1 ⊗ x`, i.e. `D_0`.
    pub fn contraction(&self, (n, x): BarCell) -> SparseVector<BarCell> {
        self.monoid.degeneracy(0, n, x).map_labels(|&y| (n + 1, y))
    }

    pub fn complex(&self) -> Result<FiniteComplex<BarCell>, LinearError> {
        let cells = self.cells();
        FiniteComplex::new(cells.iter().map(|&c| (c, self.degree(c))), |&c| self.d(c), None)
    }

    /// The bar complex as a [`DgCoalgebra`] on flattened cell indices.
    pub fn coalgebra(&self, part: BarPart) -> DgCoalgebra {
        let cells = self.cells();
        let index: HashMap<BarCell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let flat = |c: &BarCell| index[c];
        let meta = cells
            .iter()
            .map(|&c| CoalgebraCell {
                label: self.label(c),
                degree: self.degree(c),
                weight: c.0,
            })
            .collect();
        let differential = cells.iter().map(|&c| self.differential_part(c, part).map_labels(flat)).collect();
        let coproduct = cells
            .iter()
            .map(|&c| self.coproduct(c).map_labels(|(l, r)| (flat(l), flat(r))))
            .collect();
        DgCoalgebra::new(meta, differential, coproduct).expect("bar cells are consistently graded")
    }
}

/// `(d^s)² = 0`, `D² = 0` and the coalgebra axioms of `Bar(X)`.
pub fn check_bar(bar: &BarComplex) -> Vec<CheckReport> {
    let mut c = Checker::new("bar.signed_faces_square_zero");
    let mut full = Checker::new("bar.d_squared");
    for cell in bar.cells() {
        let ss = bar.signed_faces(cell).flat_map(|&y| bar.signed_faces(y));
        c.expect(ss.is_zero(), || format!("(d^s)² ≠ 0 on {}", bar.label(cell)));
        let dd = bar.d_vec(&bar.d(cell));
        full.expect(dd.is_zero(), || format!("D² ≠ 0 on {}", bar.label(cell)));
    }
    let mut out = vec![c.finish(), full.finish()];
    out.extend(
        check_dg_coalgebra(&bar.coalgebra(BarPart::Full), None)
            .into_iter()
            .map(|r| CheckReport {
                name: r.name.replace("coalgebra.", "bar."),
                ..r
            }),
    );
    out
}

/// Result of verifying `dh + hd = s·id` for the unit contraction.
#[derive(Clone, Debug)]
pub struct ContractionReport {
    /// The sign `s`, when one sign works on every cell.
    pub sign: Option<i64>,
    pub report: CheckReport,
}

/// `h(a_1⊗…⊗a_n) = 1⊗a_1⊗…⊗a_n` on `Bar(A)`, checked on all cells of weight
/// at most `N - 1`.
pub fn unital_contraction(algebra: &DgAlgebra, max_weight: usize) -> Result<ContractionReport, BarCobarError> {
    let monoid = AlgebraMonoid::new(algebra.clone(), max_weight).map_err(|_| BarCobarError::NonUnital)?;
    let b = bar(std::sync::Arc::new(monoid), max_weight)?;
    Ok(contraction_report(&b))
}

pub fn contraction_report(b: &BarComplex) -> ContractionReport {
    let mut c = Checker::new("bar.unit_contraction");
    let mut found: Option<i64> = None;
    for cell in b.cells().into_iter().filter(|c| c.0 < b.max_weight()) {
        let h = |v: &SparseVector<BarCell>| v.flat_map(|&y| b.contraction(y));
        let lhs = b.d_vec(&b.contraction(cell)) + h(&b.d(cell));
        let s = if lhs == SparseVector::basis(cell) {
            Some(1)
        } else if lhs == -SparseVector::basis(cell) {
            Some(-1)
        } else {
            None
        };
        let ok = match (s, found) {
            (None, _) => false,
            (Some(s), None) => {
                found = Some(s);
                true
            }
            (Some(s), Some(f)) => s == f,
        };
        c.expect(ok, || format!("dh + hd ≠ ±id consistently on {}", b.label(cell)));
    }
    let failed = c.failed();
    let mut report = c.finish();
    if let (false, Some(s)) = (failed, found) {
        report = report.with_note(if s > 0 { "dh + hd = id" } else { "dh + hd = -id" });
    }
    ContractionReport {
        sign: if failed { None } else { found },
        report,
    }
}

// ---------------------------------------------------------------------------
// cobar

/// A cobar word: letters are coalgebra cell indices.
pub type Word = Vec<usize>;

/// `Cobar(C)` truncated at total letter weight `N`, with differential
/// `δ - ∂_S` and concatenation product. Letters are shifted by `-1`.
#[derive(Clone, Debug)]
pub struct Cobar {
    coalgebra: DgCoalgebra,
    max_weight: usize,
}

/// Build `Cobar(C)` up to total weight `max_weight`.
pub fn cobar(coalgebra: DgCoalgebra, max_weight: usize) -> Result<Cobar, BarCobarError> {
    Cobar::new(coalgebra, max_weight)
}

impl Cobar {
    pub fn new(coalgebra: DgCoalgebra, max_weight: usize) -> Result<Self, BarCobarError> {
        for i in 0..coalgebra.dim() {
            let cell = coalgebra.cell(i);
            if cell.weight == 0 {
                return Err(BarCobarError::WeightlessCell(cell.label.clone()));
            }
            let raised = coalgebra.d_basis(i).keys().any(|&t| coalgebra.weight(t) > cell.weight)
                || coalgebra
                    .coproduct_basis(i)
                    .keys()
                    .any(|&(l, r)| coalgebra.weight(l) + coalgebra.weight(r) > cell.weight);
            if raised {
                return Err(BarCobarError::WeightRaised(cell.label.clone()));
            }
        }
        let cap = coalgebra.max_weight() + 1;
        let reports = check_dg_coalgebra(&coalgebra, Some(cap));
        if reports.iter().any(|r| r.name == "coalgebra.conilpotent" && r.status == Status::Undecided) {
            return Err(BarCobarError::ConilpotencyUndecided(cap));
        }
        Ok(Self {
            coalgebra,
            max_weight,
        })
    }

    pub fn coalgebra(&self) -> &DgCoalgebra {
        &self.coalgebra
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn weight(&self, w: &[usize]) -> usize {
        w.iter().map(|&c| self.coalgebra.weight(c)).sum()
    }

    pub fn degree(&self, w: &[usize]) -> i64 {
        w.iter().map(|&c| self.coalgebra.degree(c) + 1).sum()
    }

    pub fn label(&self, w: &[usize]) -> String {
        w.iter().map(|&c| self.coalgebra.cell(c).label.clone()).collect::<Vec<_>>().join("")
    }

    pub fn display(&self, v: &SparseVector<Word>) -> String {
        display_vector(v, |w| self.label(w))
    }

    /// All nonempty words of total weight exactly `weight`.
    pub fn words_of_weight(&self, weight: usize) -> Vec<Word> {
        let mut by_weight: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.coalgebra.dim() {
            by_weight.entry(self.coalgebra.weight(i)).or_default().push(i);
        }
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(left: usize, by_weight: &BTreeMap<usize, Vec<usize>>, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
            if left == 0 {
                if !cur.is_empty() {
                    out.push(cur.clone());
                }
                return;
            }
            for (&w, cells) in by_weight.range(1..=left) {
                for &c in cells {
                    cur.push(c);
                    rec(left - w, by_weight, cur, out);
                    cur.pop();
                }
            }
        }
        rec(weight, &by_weight, &mut cur, &mut out);
        out
    }

    /// All words in the truncation window.
    pub fn words(&self) -> Vec<Word> {
        (1..=self.max_weight).flat_map(|w| self.words_of_weight(w)).collect()
    }

    /// Splitting term `δ`.
    pub fn split(&self, w: &[usize]) -> SparseVector<Word> {
        let mut out = SparseVector::zero();
        let mut prefix = 0;
        for (i, &c) in w.iter().enumerate() {
            for (&(l, r), coeff) in self.coalgebra.coproduct_basis(c).iter() {
                let e = i as i64 + self.coalgebra.degree(l) + prefix;
                let mut nw = Vec::with_capacity(w.len() + 1);
                nw.extend_from_slice(&w[..i]);
                nw.push(l);
                nw.push(r);
                nw.extend_from_slice(&w[i + 1..]);
                out.add_term(nw, coeff * sign(e));
            }
            prefix += self.coalgebra.degree(c);
        }
        out
    }

    /// Letterwise coalgebra differential `∂_S`.
    pub fn internal(&self, w: &[usize]) -> SparseVector<Word> {
        let mut out = SparseVector::zero();
        let mut prefix = 0;
        for (i, &c) in w.iter().enumerate() {
            for (&t, coeff) in self.coalgebra.d_basis(c).iter() {
                let mut nw = w.to_vec();
                nw[i] = t;
                out.add_term(nw, coeff * sign(prefix));
            }
            prefix += self.coalgebra.degree(c) + 1;
        }
        out
    }

    /// `D = δ - ∂_S`.
    pub fn d(&self, w: &[usize]) -> SparseVector<Word> {
        self.split(w) - self.internal(w)
    }

    pub fn d_vec(&self, v: &SparseVector<Word>) -> SparseVector<Word> {
        v.flat_map(|w| self.d(w))
    }

    pub fn concat(u: &[usize], v: &[usize]) -> Word {
        let mut w = u.to_vec();
        w.extend_from_slice(v);
        w
    }

    pub fn mul(&self, u: &SparseVector<Word>, v: &SparseVector<Word>) -> SparseVector<Word> {
        u.bilinear(v, |a, b| SparseVector::basis(Self::concat(a, b)))
    }

    pub fn complex(&self) -> Result<FiniteComplex<Word>, LinearError> {
        let words = self.words();
        FiniteComplex::new(words.iter().map(|w| (w.clone(), self.degree(w))), |w| self.d(w), None)
    }

    /// The words of total weight `weight` with the weight-preserving part
    /// of the differential.
    pub fn stratum(&self, weight: usize) -> Result<FiniteComplex<Word>, LinearError> {
        let words = self.words_of_weight(weight);
        FiniteComplex::new(
            words.iter().map(|w| (w.clone(), self.degree(w))),
            |w| self.d(w).filter(|t| self.weight(t) == weight),
            None,
        )
    }
}

/// `D² = 0` and Leibniz on all in-window word pairs.
pub fn check_cobar(cb: &Cobar) -> Vec<CheckReport> {
    let words = cb.words();
    let mut c = Checker::new("cobar.d_squared");
    for w in &words {
        c.expect(cb.d_vec(&cb.d(w)).is_zero(), || format!("D² ≠ 0 on {}", cb.label(w)));
    }
    let mut l = Checker::new("cobar.leibniz");
    for u in &words {
        let du = cb.d(u);
        for v in &words {
            if cb.weight(u) + cb.weight(v) > cb.max_weight() {
                continue;
            }
            let lhs = cb.d(&Cobar::concat(u, v));
            let rhs = cb.mul(&du, &SparseVector::basis(v.clone()))
                + cb.mul(&SparseVector::basis(u.clone()), &cb.d(v)).signed(cb.degree(u));
            l.expect(lhs == rhs, || format!("Leibniz fails on {}, {}", cb.label(u), cb.label(v)));
        }
    }
    vec![c.finish(), l.finish()]
}

/// `Cobar(Bar X)` up to weight `N`.
pub fn cobar_bar(monoid: SharedMonoid, max_weight: usize) -> Result<(BarComplex, Cobar), BarCobarError> {
    let b = bar(monoid, max_weight)?;
    let c = cobar(b.coalgebra(BarPart::Full), max_weight)?;
    Ok((b, c))
}

/// The vertical complex `L_n`: words of total weight `n + 1` in
/// `Cobar(Bar X)` with internal and splitting differentials only.
pub fn ln_complex(monoid: SharedMonoid, n: usize) -> Result<FiniteComplex<Word>, BarCobarError> {
    let max = monoid.max_weight();
    if n + 1 > max {
        return Err(BarCobarError::StratumOutOfRange { n, max });
    }
    let b = bar(monoid, n + 1)?;
    let c = cobar(b.coalgebra(BarPart::Internal), n + 1)?;
    Ok(c.stratum(n + 1)?)
}

/// `L_0 ≅ X_1` (same dimension and homology) and `L_n` acyclic for
/// `1 ≤ n ≤ n_max`.
pub fn check_ln(monoid: SharedMonoid, n_max: usize) -> Result<Vec<CheckReport>, BarCobarError> {
    let m = monoid.as_ref();
    let x1 = FiniteComplex::new((0..m.dim(1)).map(|x| (x, m.degree(1, x))), |&x| m.differential(1, x), None)?;
    let h_x1 = nonzero_dims(&x1.homology_dims()?);
    let l0 = ln_complex(monoid.clone(), 0)?;
    let h_l0 = nonzero_dims(&l0.homology_dims()?);
    let mut c = Checker::new("ln.l0_is_x1");
    c.expect(l0.dim() == x1.dim() && h_l0 == h_x1, || {
        format!("L_0 has dim {} and homology {h_l0:?}; X_1 has dim {} and homology {h_x1:?}", l0.dim(), x1.dim())
    });
    let l0_report = c.finish().with_homology(h_l0);
    let mut c = Checker::new("ln.acyclic");
    for n in 1..=n_max {
        let h = nonzero_dims(&ln_complex(monoid.clone(), n)?.homology_dims()?);
        c.expect(h.is_empty(), || format!("H(L_{n}) = {h:?}"));
    }
    Ok(vec![l0_report, c.finish()])
}

/// Counit `Φ: Cobar(Bar X) → X_1` and inclusion `ι: X_1 → Cobar(Bar X)`.
pub struct Counit {
    bar: BarComplex,
    cobar: Cobar,
    flat: HashMap<BarCell, usize>,
    cells: Vec<BarCell>,
}

pub fn phi_counit(monoid: SharedMonoid, max_weight: usize) -> Result<Counit, BarCobarError> {
    if !monoid.is_algebra() || monoid.unit(1).is_none() {
        return Err(BarCobarError::NotAlgebra);
    }
    let (bar, cobar) = cobar_bar(monoid, max_weight)?;
    let cells = bar.cells();
    let flat = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    Ok(Counit {
        bar,
        cobar,
        flat,
        cells,
    })
}

impl Counit {
    pub fn bar(&self) -> &BarComplex {
        &self.bar
    }

    pub fn cobar(&self) -> &Cobar {
        &self.cobar
    }

    fn monoid(&self) -> &dyn LeinsterMonoid {
        self.bar.monoid().as_ref()
    }

    /// Letter index of a bar cell.
    pub fn letter(&self, cell: BarCell) -> usize {
        self.flat[&cell]
    }

    /// Multiplies out words of weight-one letters, kills the rest.
    pub fn phi(&self, w: &[usize]) -> SparseVector<usize> {
        let m = self.monoid();
        let mut acc = SparseVector::basis(m.unit(1).expect("checked in phi_counit"));
        for &c in w {
            let (n, x) = self.cells[c];
            if n != 1 {
                return SparseVector::zero();
            }
            acc = acc.flat_map(|&y| m.product(1, y, x));
        }
        acc
    }

    pub fn iota(&self, x: usize) -> Word {
        vec![self.letter((1, x))]
    }

    pub fn x1_complex(&self) -> Result<FiniteComplex<usize>, LinearError> {
        let m = self.monoid();
        FiniteComplex::new((0..m.dim(1)).map(|x| (x, m.degree(1, x))), |&x| m.differential(1, x), None)
    }

    /// `Φι = id`, chain and algebra map properties, and the quasi-isomorphism
    /// certificate: the cone of `ι` is acyclic.
    pub fn check(&self) -> Vec<CheckReport> {
        let m = self.monoid();
        let cb = &self.cobar;
        let phi_vec = |v: &SparseVector<Word>| v.flat_map(|w| self.phi(w));

        let mut sec = Checker::new("counit.phi_iota_identity");
        for x in 0..m.dim(1) {
            sec.expect(self.phi(&self.iota(x)) == SparseVector::basis(x), || format!("Φι({}) ≠ itself", m.label(1, x)));
        }

        let words = cb.words();
        let mut chain = Checker::new("counit.phi_chain_map");
        for w in &words {
            let l = phi_vec(&cb.d(w));
            let r = self.phi(w).flat_map(|&y| m.differential(1, y));
            chain.expect(l == r, || format!("ΦD ≠ dΦ on {}", cb.label(w)));
        }

        let mut iota_chain = Checker::new("counit.iota_chain_map");
        for x in 0..m.dim(1) {
            let l = cb.d(&self.iota(x));
            let r = m.differential(1, x).map_labels(|&y| self.iota(y));
            iota_chain.expect(l == r, || format!("Dι ≠ ιd on {}", m.label(1, x)));
        }

        let mut alg = Checker::new("counit.phi_algebra_map");
        for u in &words {
            for v in &words {
                if cb.weight(u) + cb.weight(v) > cb.max_weight() {
                    continue;
                }
                let l = self.phi(&Cobar::concat(u, v));
                let r = self.phi(u).bilinear(&self.phi(v), |&a, &b| m.product(1, a, b));
                alg.expect(l == r, || format!("Φ(uv) ≠ Φ(u)Φ(v) on {}, {}", cb.label(u), cb.label(v)));
            }
        }

        let qi = match self.quasi_iso_certificate() {
            Ok((cone, h_total, h_x1)) => {
                let ok = cone.is_empty() && h_total == h_x1;
                let r = if ok {
                    CheckReport::pass("counit.quasi_isomorphism", 1)
                } else {
                    CheckReport::fail(
                        "counit.quasi_isomorphism",
                        1,
                        format!("cone homology {cone:?}; H(Cobar Bar) {h_total:?} vs H(X_1) {h_x1:?}"),
                    )
                };
                r.with_homology(h_total)
            }
            Err(e) => CheckReport::fail("counit.quasi_isomorphism", 1, e.to_string()),
        };
        vec![sec.finish(), chain.finish(), iota_chain.finish(), alg.finish(), qi]
    }

    /// `(H(cone ι), H(Cobar Bar X), H(X_1))`, zero entries dropped.
    #[allow(clippy::type_complexity)]
    pub fn quasi_iso_certificate(
        &self,
    ) -> Result<(BTreeMap<i64, usize>, BTreeMap<i64, usize>, BTreeMap<i64, usize>), LinearError> {
        let x1 = self.x1_complex()?;
        let total = self.cobar.complex()?;
        let cone = mapping_cone(&x1, &total, |&x| SparseVector::basis(self.iota(x)))?;
        Ok((
            nonzero_dims(&cone.homology_dims()?),
            nonzero_dims(&total.homology_dims()?),
            nonzero_dims(&x1.homology_dims()?),
        ))
    }
}

/// Homology of the truncated `Cobar(Bar X)`, zero entries dropped.
pub fn cobar_bar_homology(monoid: SharedMonoid, max_weight: usize) -> Result<BTreeMap<i64, usize>, BarCobarError> {
    let (_, c) = cobar_bar(monoid, max_weight)?;
    Ok(nonzero_dims(&c.complex()?.homology_dims()?))
}

/// Bar complex map induced by a dg algebra map `f: A → B`, given on basis
/// elements; checks that `f` is a unital dg algebra map and compares the
/// acyclicity of `cone(f)` with that of `cone(Bar f)`.
pub fn check_bar_preserves_quasi_iso(
    source: &AlgebraMonoid,
    target: &AlgebraMonoid,
    f: &[SparseVector<usize>],
    max_weight: usize,
) -> Result<CheckReport, BarCobarError> {
    let (a, b) = (source.algebra(), target.algebra());
    let fv = |v: &SparseVector<usize>| v.flat_map(|&i| f[i].clone());
    let mut c = Checker::new("bar.preserves_quasi_iso");
    c.expect(fv(&SparseVector::basis(a.unit().ok_or(BarCobarError::NonUnital)?)) == SparseVector::basis(b.unit().ok_or(BarCobarError::NonUnital)?), || {
        "f is not unital".into()
    });
    for i in 0..a.dim() {
        c.expect(fv(a.d_basis(i)) == b.d(&f[i]), || format!("f is not a chain map on {}", a.label(i)));
        for j in 0..a.dim() {
            c.expect(fv(&a.mul_basis(i, j)) == b.mul(&f[i], &f[j]), || {
                format!("f is not multiplicative on {}, {}", a.label(i), a.label(j))
            });
        }
    }
    if c.failed() {
        return Ok(c.finish());
    }
    let ca = FiniteComplex::new((0..a.dim()).map(|i| (i, a.degree(i))), |&i| a.d_basis(i).clone(), None)?;
    let cb = FiniteComplex::new((0..b.dim()).map(|i| (i, b.degree(i))), |&i| b.d_basis(i).clone(), None)?;
    let f_acyclic = nonzero_dims(&mapping_cone(&ca, &cb, |&i| f[i].clone())?.homology_dims()?).is_empty();

    let ba = bar(std::sync::Arc::new(source.clone()), max_weight)?;
    let bb = bar(std::sync::Arc::new(target.clone()), max_weight)?;
    let bar_map = |&(n, x): &BarCell| {
        let parts: Vec<SparseVector<usize>> = source.decode(n, x).iter().map(|&i| f[i].clone()).collect();
        let mut cur = SparseVector::basis(Vec::new());
        for p in &parts {
            cur = cur.bilinear(p, |w: &Vec<usize>, &y| {
                let mut w = w.clone();
                w.push(y);
                SparseVector::basis(w)
            });
        }
        cur.map_labels(|w| (n, target.encode(w)))
    };
    let xa = ba.complex()?;
    let xb = bb.complex()?;
    let mut chain = true;
    for cell in ba.cells() {
        let l = ba.d(cell).flat_map(bar_map);
        let r = bb.d_vec(&bar_map(&cell));
        chain &= l == r;
    }
    c.expect(chain, || "Bar f is not a chain map".into());
    let bar_acyclic = nonzero_dims(&mapping_cone(&xa, &xb, bar_map)?.homology_dims()?).is_empty();
    c.expect(!f_acyclic || bar_acyclic, || "f is a quasi-isomorphism but Bar f is not".into());
    let note = format!("cone(f) acyclic: {f_acyclic}; cone(Bar f) acyclic: {bar_acyclic}");
    Ok(c.finish().with_note(note))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::dg_core::AlgebraBuilder;
    use crate::exact_linear::int;
    use crate::leinster::from_dg_algebra;
    use crate::report::all_pass;

    fn dual0() -> DgAlgebra {
        AlgebraBuilder::new().element("1", 0).element("x", 0).unit("1").build().unwrap()
    }

    fn ext1() -> DgAlgebra {
        AlgebraBuilder::new().element("1", 0).element("ξ", 1).unit("1").build().unwrap()
    }

    fn cone() -> DgAlgebra {
        AlgebraBuilder::new().element("1", 0).element("ε", -1).unit("1").d("ε", "1", 1).build().unwrap()
    }

    fn field() -> DgAlgebra {
        AlgebraBuilder::new().element("1", 0).unit("1").build().unwrap()
    }

    fn shared(a: DgAlgebra, n: usize) -> (Arc<AlgebraMonoid>, SharedMonoid) {
        let m = Arc::new(from_dg_algebra(a, n).unwrap());
        (m.clone(), m)
    }

    #[test]
    fn bar_examples() {
        let (m, s) = shared(dual0(), 3);
        let b = bar(s, 3).unwrap();
        assert!(b.signed_faces((2, m.encode(&[1, 1]))).is_zero());
        assert_eq!(b.signed_faces((2, m.encode(&[0, 1]))), SparseVector::term((1, 1), int(-1)));
        let (e, s) = shared(ext1(), 3);
        let b = bar(s, 3).unwrap();
        let xx = e.encode(&[1, 1]);
        assert!(b.signed_faces((2, xx)).is_zero());
        assert_eq!(b.degree((2, xx)), 0);
    }

    #[test]
    fn bar_axioms_hold() {
        for a in [field(), dual0(), ext1(), cone()] {
            let (_, s) = shared(a, 5);
            let r = check_bar(&bar(s, 5).unwrap());
            assert!(all_pass(&r), "{r:?}");
        }
    }

    #[test]
    fn bar_coalgebra_is_f4_exhaustive() {
        let (_, s) = shared(dual0(), 4);
        let r = check_bar(&bar(s, 4).unwrap());
        let c = r.iter().find(|c| c.name == "bar.conilpotent").unwrap();
        assert_eq!(c.note.as_deref(), Some("F_4 is exhaustive"));
    }

    #[test]
    fn shifted_sign_rule_breaks_square_zero() {
        let (_, s) = shared(ext1(), 4);
        let b = BarComplex::new(s, 4, FaceSignRule::Shifted).unwrap();
        let r = check_bar(&b);
        assert!(!r[0].passed());
    }

    #[test]
    fn weight_too_large() {
        let (_, s) = shared(dual0(), 2);
        assert!(matches!(bar(s, 3), Err(BarCobarError::WeightTooLarge { .. })));
    }

    #[test]
    fn contraction_sign_is_minus_one() {
        for a in [field(), dual0(), cone()] {
            let r = unital_contraction(&a, 5).unwrap();
            assert!(r.report.passed());
            assert_eq!(r.sign, Some(-1));
        }
    }

    #[test]
    fn cobar_of_zero_coproduct() {
        let cells = vec![CoalgebraCell {
            label: "c".into(),
            degree: 0,
            weight: 1,
        }];
        let c = DgCoalgebra::new(cells, vec![SparseVector::zero()], vec![SparseVector::zero()]).unwrap();
        let cb = cobar(c, 4).unwrap();
        assert_eq!(cb.words().len(), 4);
        for w in cb.words() {
            assert!(cb.d(&w).is_zero());
            assert_eq!(cb.degree(&w), w.len() as i64);
        }
    }

    #[test]
    fn cobar_bar_axioms() {
        let (_, s) = shared(dual0(), 4);
        let (_, cb) = cobar_bar(s, 4).unwrap();
        assert!(all_pass(&check_cobar(&cb)));
    }

    #[test]
    fn l0_is_x1_and_higher_strata_are_acyclic() {
        let (_, s) = shared(dual0(), 5);
        let l0 = ln_complex(s.clone(), 0).unwrap();
        assert_eq!(l0.dim(), 2);
        assert_eq!(nonzero_dims(&l0.homology_dims().unwrap()), BTreeMap::from([(0, 2)]));
        let l1 = ln_complex(s.clone(), 1).unwrap();
        assert_eq!(l1.dim(), 8);
        for n in 1..=4 {
            let h = ln_complex(s.clone(), n).unwrap().homology_dims().unwrap();
            assert!(nonzero_dims(&h).is_empty(), "L_{n}: {h:?}");
        }
        assert!(matches!(ln_complex(s, 5), Err(BarCobarError::StratumOutOfRange { .. })));
    }

    #[test]
    fn ln_reports_pass_on_catalog() {
        for a in [dual0(), ext1(), cone(), field()] {
            let (_, s) = shared(a, 5);
            let r = check_ln(s, 4).unwrap();
            assert!(r.iter().all(CheckReport::passed), "{r:?}");
        }
    }

    #[test]
    fn counit_checks() {
        for a in [dual0(), ext1(), cone(), field()] {
            let (_, s) = shared(a, 4);
            let u = phi_counit(s, 4).unwrap();
            let r = u.check();
            assert!(all_pass(&r), "{r:?}");
        }
    }

    #[test]
    fn phi_on_two_letters() {
        let (_, s) = shared(dual0(), 3);
        let u = phi_counit(s, 3).unwrap();
        let x = u.letter((1, 1));
        assert!(u.phi(&[x, x]).is_zero());
        let one = u.letter((1, 0));
        assert_eq!(u.phi(&[one, x]), SparseVector::basis(1));
    }

    #[test]
    fn homology_matches_dual_numbers() {
        let (_, s) = shared(dual0(), 5);
        assert_eq!(cobar_bar_homology(s, 5).unwrap(), BTreeMap::from([(0, 2)]));
    }

    #[test]
    fn unit_map_into_contractible_extension() {
        let k = from_dg_algebra(field(), 3).unwrap();
        let a = AlgebraBuilder::new()
            .element("1", 0)
            .element("u", -1)
            .element("v", 0)
            .unit("1")
            .d("u", "v", 1)
            .build()
            .unwrap();
        let am = from_dg_algebra(a, 3).unwrap();
        let r = check_bar_preserves_quasi_iso(&k, &am, &[SparseVector::basis(0)], 3).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.note.unwrap().ends_with("cone(Bar f) acyclic: true"));
    }

    #[test]
    fn bar_of_cone_is_acyclic() {
        let (_, s) = shared(cone(), 4);
        let b = bar(s, 4).unwrap();
        assert!(nonzero_dims(&b.complex().unwrap().homology_dims().unwrap()).is_empty());
    }
}
