//! Shuffle maps: the classical Eilenberg–MacLane map on simplicial vector
//! spaces and its sign-corrected version `∇: Bar(X) ⊗ Bar(Y) → Bar(X ⊗ Y)`
//! for graded Leinster monoids, together with the induced bialgebra on `Bar`.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

use crate::bar_cobar::{BarCell, BarComplex};
use crate::dg_core::{BasisElement, DgAlgebra, DgBialgebra, DgError, WeightWindow};
use crate::exact_linear::{sign, SparseVector};
use crate::leinster::{tensor_monoid, FaceSignRule, LeinsterError, LeinsterMonoid, SharedMonoid, TensorMonoid};
use crate::report::{CheckReport, Checker};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmError {
    #[error("truncation weight {requested} exceeds the monoid's {available}")]
    WeightTooLarge { requested: usize, available: usize },
    #[error("the monoid carries no products")]
    NotAlgebra,
    #[error(transparent)]
    Leinster(#[from] LeinsterError),
    #[error(transparent)]
    Dg(#[from] DgError),
}

/// An `(m, n)`-shuffle: `σ` increasing on `0..m` and on `m..m+n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shuffle {
    m: usize,
    n: usize,
    perm: Vec<usize>,
}

impl Shuffle {
    pub fn new(m: usize, n: usize, perm: Vec<usize>) -> Option<Self> {
        let ok = perm.len() == m + n
            && perm.iter().copied().sorted().eq(0..m + n)
            && perm[..m].windows(2).all(|w| w[0] < w[1])
            && perm[m..].windows(2).all(|w| w[0] < w[1]);
        ok.then_some(Self { m, n, perm })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Pairs `(i, j)` with `i < m ≤ j` and `σ(i) > σ(j)`.
    pub fn inversions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.m)
            .cartesian_product(self.m..self.m + self.n)
            .filter(|&(i, j)| self.perm[i] > self.perm[j])
    }

    /// The same shuffle read as an `(n, m)`-shuffle with the blocks swapped.
    pub fn block_swapped(&self) -> Shuffle {
        let mut perm = self.perm[self.m..].to_vec();
        perm.extend_from_slice(&self.perm[..self.m]);
        Shuffle {
            m: self.n,
            n: self.m,
            perm,
        }
    }
}

/// All `(m, n)`-shuffles, indexed by the image of the first block.
pub fn shuffles(m: usize, n: usize) -> Vec<Shuffle> {
    (0..m + n)
        .combinations(m)
        .map(|first| {
            let mut perm = first.clone();
            perm.extend((0..m + n).filter(|v| !first.contains(v)));
            Shuffle { m, n, perm }
        })
        .collect()
}

/// Sign exponents attached to a shuffle and a pair of multidegrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignExponents {
    pub s_em: i64,
    pub s_sharp: i64,
    pub s_sigma: i64,
}

impl SignExponents {
    pub fn compute(sh: &Shuffle, a: &[i64], b: &[i64]) -> Self {
        let mut s_em = 0;
        let mut s_sharp = 0;
        for (i, j) in sh.inversions() {
            let (ai, bj) = (a[i], b[j - sh.m]);
            s_em += (ai + 1) * (bj + 1);
            s_sharp += ai * bj;
        }
        Self {
            s_em,
            s_sharp,
            s_sigma: a.iter().sum::<i64>() + a.len() as i64,
        }
    }
}

/// `S_1(σ, ℓ)` for a shuffle whose first block carries degrees `b` and
/// second block degrees `a`.
pub fn s1(sh: &Shuffle, l: usize, b: &[i64], a: &[i64]) -> i64 {
    let first: i64 = (0..sh.m).filter(|&i| sh.perm[i] < l).map(|i| b[i]).sum();
    let second: i64 = (sh.m..sh.m + sh.n).filter(|&j| sh.perm[j] < l).map(|j| a[j - sh.m]).sum();
    first + second + l as i64
}

/// Which sign the shuffle sum uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShuffleSign {
    /// `(-1)^{S_EM + S_♯}`.
    Modified,
    /// Parity of the permutation only.
    Classical,
}

/// `∇: Bar(X) ⊗ Bar(Y) → Bar(X ⊗ Y)`, defined on cells of weight `≥ 0`
/// with `m + n ≤ N`.
#[derive(Clone)]
pub struct EmMap {
    left: SharedMonoid,
    right: SharedMonoid,
    target: Arc<TensorMonoid>,
    max_weight: usize,
    rule: FaceSignRule,
    signs: ShuffleSign,
}

impl EmMap {
    pub fn new(left: SharedMonoid, right: SharedMonoid, max_weight: usize) -> Result<Self, EmError> {
        Self::with_options(left, right, max_weight, FaceSignRule::Standard, ShuffleSign::Modified)
    }

    pub fn with_options(
        left: SharedMonoid,
        right: SharedMonoid,
        max_weight: usize,
        rule: FaceSignRule,
        signs: ShuffleSign,
    ) -> Result<Self, EmError> {
        let available = left.max_weight().min(right.max_weight());
        if max_weight > available {
            return Err(EmError::WeightTooLarge {
                requested: max_weight,
                available,
            });
        }
        let target = Arc::new(tensor_monoid(left.clone(), right.clone())?);
        Ok(Self {
            left,
            right,
            target,
            max_weight,
            rule,
            signs,
        })
    }

    pub fn left(&self) -> &SharedMonoid {
        &self.left
    }

    pub fn right(&self) -> &SharedMonoid {
        &self.right
    }

    pub fn target(&self) -> &Arc<TensorMonoid> {
        &self.target
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    fn bar_of(&self, m: SharedMonoid) -> BarComplex {
        BarComplex::new(m, self.max_weight, self.rule).expect("weights checked in constructor")
    }

    pub fn left_bar(&self) -> BarComplex {
        self.bar_of(self.left.clone())
    }

    pub fn right_bar(&self) -> BarComplex {
        self.bar_of(self.right.clone())
    }

    pub fn target_bar(&self) -> BarComplex {
        self.bar_of(self.target.clone())
    }

    /// `∇(x, y)`; zero when `m + n` exceeds the truncation.
    pub fn apply(&self, (m, x): BarCell, (n, y): BarCell) -> SparseVector<BarCell> {
        if m + n > self.max_weight {
            return SparseVector::zero();
        }
        let a = self.left.multidegree(m, x);
        let b = self.right.multidegree(n, y);
        let mut out = SparseVector::zero();
        for sh in shuffles(m, n) {
            let e = match self.signs {
                ShuffleSign::Modified => {
                    let s = SignExponents::compute(&sh, &a, &b);
                    s.s_em + s.s_sharp
                }
                ShuffleSign::Classical => sh.inversions().count() as i64,
            };
            let mut xs = SparseVector::basis(x);
            for (k, &j) in sh.perm[m..].iter().enumerate() {
                xs = xs.flat_map(|&v| self.left.degeneracy(j, m + k, v));
            }
            let mut ys = SparseVector::basis(y);
            for (k, &j) in sh.perm[..m].iter().enumerate() {
                ys = ys.flat_map(|&v| self.right.degeneracy(j, n + k, v));
            }
            let w = m + n;
            let term = xs.bilinear(&ys, |&p, &q| SparseVector::basis((w, self.target.join(w, p, q))));
            out.add_scaled(&term, &sign(e));
        }
        out
    }

    /// Bilinear extension.
    pub fn apply_vec(&self, u: &SparseVector<BarCell>, v: &SparseVector<BarCell>) -> SparseVector<BarCell> {
        u.bilinear(v, |&p, &q| self.apply(p, q))
    }
}

fn cells_upto(m: &dyn LeinsterMonoid, lo: usize, hi: usize) -> Vec<BarCell> {
    (lo..=hi).flat_map(|n| (0..m.dim(n)).map(move |x| (n, x))).collect()
}

fn bar_degree(m: &dyn LeinsterMonoid, (n, x): BarCell) -> i64 {
    m.degree(n, x) - n as i64
}

/// `d^s ∇(x, y) = ∇(d^s x, y) + (-1)^{|x|} ∇(x, d^s y)` for `m, n ≥ 1`.
pub fn check_leibniz(em: &EmMap) -> CheckReport {
    let (bx, by, bz) = (em.left_bar(), em.right_bar(), em.target_bar());
    let mut c = Checker::new("em.leibniz");
    for xc in cells_upto(em.left.as_ref(), 1, em.max_weight) {
        for yc in cells_upto(em.right.as_ref(), 1, em.max_weight - xc.0) {
            let l = em.apply(xc, yc).flat_map(|&z| bz.signed_faces(z));
            let r = em.apply_vec(&bx.signed_faces(xc), &SparseVector::basis(yc))
                + em.apply_vec(&SparseVector::basis(xc), &by.signed_faces(yc)).signed(bar_degree(em.left.as_ref(), xc));
            c.expect(l == r, || {
                format!("d^s∇ ≠ ∇(d^s⊗1 + 1⊗d^s) on {}, {}", bx.label(xc), by.label(yc))
            });
        }
    }
    c.finish()
}

/// Same identity for the total bar differential `d^s - ∂`.
pub fn check_total_chain_map(em: &EmMap) -> CheckReport {
    let (bx, by, bz) = (em.left_bar(), em.right_bar(), em.target_bar());
    let mut c = Checker::new("em.total_chain_map");
    for xc in cells_upto(em.left.as_ref(), 1, em.max_weight) {
        for yc in cells_upto(em.right.as_ref(), 1, em.max_weight - xc.0) {
            let l = bz.d_vec(&em.apply(xc, yc));
            let r = em.apply_vec(&bx.d(xc), &SparseVector::basis(yc))
                + em.apply_vec(&SparseVector::basis(xc), &by.d(yc)).signed(bar_degree(em.left.as_ref(), xc));
            c.expect(l == r, || format!("D∇ ≠ ∇(D⊗1 + 1⊗D) on {}, {}", bx.label(xc), by.label(yc)));
        }
    }
    c.finish()
}

/// Swap `Z = X ⊗ Y` cells into `Y ⊗ X` with `κ₂ = (-1)^{ΣaΣb}`.
fn kappa2(xy: &TensorMonoid, yx: &TensorMonoid, v: &SparseVector<BarCell>) -> SparseVector<BarCell> {
    let mut out = SparseVector::zero();
    for (&(w, z), c) in v.iter() {
        let (p, q) = xy.split(w, z);
        let e = xy.left().degree(w, p) * xy.right().degree(w, q);
        out.add_term((w, yx.join(w, q, p)), c * sign(e));
    }
    out
}

/// The symmetry square: `κ₂ ∇(x, y) = ∇(κ₁(x ⊗ y))`.
pub fn check_symmetry(left: SharedMonoid, right: SharedMonoid, max_weight: usize) -> Result<CheckReport, EmError> {
    let xy = EmMap::new(left.clone(), right.clone(), max_weight)?;
    let yx = EmMap::new(right.clone(), left.clone(), max_weight)?;
    let mut c = Checker::new("em.symmetry");
    for xc in cells_upto(left.as_ref(), 0, max_weight) {
        for yc in cells_upto(right.as_ref(), 0, max_weight - xc.0) {
            let l = kappa2(&xy.target, &yx.target, &xy.apply(xc, yc));
            let k1 = bar_degree(left.as_ref(), xc) * bar_degree(right.as_ref(), yc);
            let r = yx.apply(yc, xc).signed(k1);
            c.expect(l == r, || {
                format!("symmetry fails on {}, {}", left.label(xc.0, xc.1), right.label(yc.0, yc.1))
            });
        }
    }
    Ok(c.finish())
}

/// Per shuffle: `S_EM(σ) - S_EM(στ) ≡ (Σa+m)(Σb+n)` and
/// `S_♯(σ) - S_♯(στ) ≡ ΣaΣb` on every basis pair.
pub fn check_kappa_discrepancy(left: &dyn LeinsterMonoid, right: &dyn LeinsterMonoid, max_weight: usize) -> CheckReport {
    let mut c = Checker::new("em.kappa_discrepancy");
    for xc in cells_upto(left, 0, max_weight) {
        for yc in cells_upto(right, 0, max_weight - xc.0) {
            let (a, b) = (left.multidegree(xc.0, xc.1), right.multidegree(yc.0, yc.1));
            let (sa, sb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            let (m, n) = (xc.0 as i64, yc.0 as i64);
            for sh in shuffles(xc.0, yc.0) {
                let s = SignExponents::compute(&sh, &a, &b);
                let t = SignExponents::compute(&sh.block_swapped(), &b, &a);
                let em_ok = (s.s_em - t.s_em - (sa + m) * (sb + n)).rem_euclid(2) == 0;
                let sharp_ok = (s.s_sharp - t.s_sharp - sa * sb).rem_euclid(2) == 0;
                c.expect(em_ok && sharp_ok, || format!("κ discrepancy off for σ = {:?}", sh.perm));
            }
        }
    }
    c.finish()
}

/// The associativity square of the lax structure for three monoids.
pub fn check_lax(x: SharedMonoid, y: SharedMonoid, z: SharedMonoid, max_weight: usize) -> Result<CheckReport, EmError> {
    let xy = EmMap::new(x.clone(), y.clone(), max_weight)?;
    let xy_z = EmMap::new(xy.target.clone(), z.clone(), max_weight)?;
    let yz = EmMap::new(y.clone(), z.clone(), max_weight)?;
    let x_yz = EmMap::new(x.clone(), yz.target.clone(), max_weight)?;
    let mut c = Checker::new("em.lax_associativity");
    for xc in cells_upto(x.as_ref(), 0, max_weight) {
        for yc in cells_upto(y.as_ref(), 0, max_weight - xc.0) {
            let first = xy.apply(xc, yc);
            for zc in cells_upto(z.as_ref(), 0, max_weight - xc.0 - yc.0) {
                // ((x⊗y)⊗z) and (x⊗(y⊗z)) share mixed-radix indices
                let l = first.flat_map(|&p| xy_z.apply(p, zc));
                let r = yz.apply(yc, zc).flat_map(|&q| x_yz.apply(xc, q));
                c.expect(l == r, || {
                    format!(
                        "∇(∇(x,y),z) ≠ ∇(x,∇(y,z)) on {}, {}, {}",
                        x.label(xc.0, xc.1),
                        y.label(yc.0, yc.1),
                        z.label(zc.0, zc.1)
                    )
                });
            }
        }
    }
    Ok(c.finish())
}

/// Unit squares against a one-dimensional monoid `K`: `∇(1, x) ≅ x ≅ ∇(x, 1)`.
pub fn check_lax_unit(x: SharedMonoid, unit: SharedMonoid, max_weight: usize) -> Result<CheckReport, EmError> {
    let kx = EmMap::new(unit.clone(), x.clone(), max_weight)?;
    let xk = EmMap::new(x.clone(), unit.clone(), max_weight)?;
    let mut c = Checker::new("em.lax_unit");
    for xc in cells_upto(x.as_ref(), 0, max_weight) {
        let ok_l = kx.apply((0, 0), xc) == SparseVector::basis(xc);
        let ok_r = xk.apply(xc, (0, 0)) == SparseVector::basis(xc);
        c.expect(ok_l && ok_r, || format!("unit square fails on {}", x.label(xc.0, xc.1)));
    }
    Ok(c.finish())
}

/// `Δ⁺ ∇(x, y) = Σ ± ∇(x', y') ⊗ ∇(x'', y'')` with augmented coproducts and
/// the bar-degree interchange sign `(-1)^{|x''||y'|}`.
pub fn check_coalgebra_map(em: &EmMap) -> CheckReport {
    let (bx, by, bz) = (em.left_bar(), em.right_bar(), em.target_bar());
    let (l, r) = (em.left.as_ref(), em.right.as_ref());
    let mut c = Checker::new("em.coalgebra_map");
    for xc in cells_upto(l, 0, em.max_weight) {
        let dx = augmented(&bx, xc);
        for yc in cells_upto(r, 0, em.max_weight - xc.0) {
            let dy = augmented(&by, yc);
            let lhs = em.apply(xc, yc).flat_map(|&z| augmented(&bz, z));
            let mut rhs = SparseVector::zero();
            for (&(x1, x2), c1) in dx.iter() {
                for (&(y1, y2), c2) in dy.iter() {
                    let e = bar_degree(l, x2) * bar_degree(r, y1);
                    let term = em.apply(x1, y1).bilinear(&em.apply(x2, y2), |&p, &q| SparseVector::basis((p, q)));
                    rhs.add_scaled(&term, &(c1 * c2 * sign(e)));
                }
            }
            c.expect(lhs == rhs, || format!("Δ∇ ≠ (∇⊗∇)Δ on {}, {}", bx.label(xc), by.label(yc)));
        }
    }
    c.finish()
}

fn augmented(b: &BarComplex, cell: BarCell) -> SparseVector<(BarCell, BarCell)> {
    if cell.0 == 0 {
        SparseVector::basis(((0, 0), (0, 0)))
    } else {
        b.augmented_coproduct(cell)
    }
}

// ---------------------------------------------------------------------------
// bar bialgebra

/// Product `μ ∘ ∇` on the augmented bar complex of an algebra-flagged monoid.
#[derive(Clone)]
pub struct BarProduct {
    em: EmMap,
}

pub fn bar_product(monoid: SharedMonoid, max_weight: usize) -> Result<BarProduct, EmError> {
    if !monoid.is_algebra() {
        return Err(EmError::NotAlgebra);
    }
    Ok(BarProduct {
        em: EmMap::new(monoid.clone(), monoid, max_weight)?,
    })
}

impl BarProduct {
    pub fn em(&self) -> &EmMap {
        &self.em
    }

    fn monoid(&self) -> &dyn LeinsterMonoid {
        self.em.left.as_ref()
    }

    /// Componentwise multiplication `X_k ⊗ X_k → X_k`.
    pub fn multiply_out(&self, v: &SparseVector<BarCell>) -> SparseVector<BarCell> {
        let m = self.monoid();
        let z = &self.em.target;
        v.flat_map(|&(w, c)| {
            let (p, q) = z.split(w, c);
            m.product(w, p, q).map_labels(|&r| (w, r))
        })
    }

    pub fn mul(&self, x: BarCell, y: BarCell) -> SparseVector<BarCell> {
        self.multiply_out(&self.em.apply(x, y))
    }

    /// Cells of weight `0..=N`; `(0, 0)` is the unit.
    pub fn cells(&self) -> Vec<BarCell> {
        cells_upto(self.monoid(), 0, self.em.max_weight)
    }

    /// The truncated augmented bar complex as a dg bialgebra.
    pub fn bialgebra(&self) -> Result<DgBialgebra, EmError> {
        let m = self.monoid();
        let cells = self.cells();
        let index: BTreeMap<BarCell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let flat = |c: &BarCell| index[c];
        let bar = self.em.left_bar();
        let basis = cells
            .iter()
            .map(|&c| BasisElement {
                label: if c.0 == 0 { "[]".to_string() } else { bar.label(c) },
                degree: bar_degree(m, c),
                multidegree: None,
            })
            .collect();
        let differential = cells
            .iter()
            .map(|&c| if c.0 == 0 { SparseVector::zero() } else { bar.d(c).map_labels(flat) })
            .collect();
        let mut product = BTreeMap::new();
        for &x in &cells {
            for &y in &cells {
                if x.0 + y.0 <= self.em.max_weight {
                    let v = self.mul(x, y);
                    if !v.is_zero() {
                        product.insert((flat(&x), flat(&y)), v.map_labels(flat));
                    }
                }
            }
        }
        let algebra = DgAlgebra::new(basis, differential, product, Some(flat(&(0, 0))))?.with_window(WeightWindow {
            weights: cells.iter().map(|c| c.0).collect(),
            max: self.em.max_weight,
        });
        let coproduct = cells
            .iter()
            .map(|&c| augmented(&bar, c).map_labels(|(l, r)| (flat(l), flat(r))))
            .collect();
        Ok(DgBialgebra::new(algebra, coproduct)?)
    }
}

// ---------------------------------------------------------------------------
// classical map on simplicial vector spaces

/// Nerve of a finite monoid: `N_n = ℚ[M^n]` with all faces.
#[derive(Clone, Debug)]
pub struct MonoidNerve {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl MonoidNerve {
    /// `table[g][h] = g·h`; `identity` must be a two-sided unit.
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Option<Self> {
        let k = table.len();
        let square = table.iter().all(|r| r.len() == k && r.iter().all(|&v| v < k));
        let unital = identity < k && (0..k).all(|g| table[identity][g] == g && table[g][identity] == g);
        let assoc = square
            && (0..k)
                .cartesian_product(0..k)
                .cartesian_product(0..k)
                .all(|((a, b), c)| table[table[a][b]][c] == table[a][table[b][c]]);
        (square && unital && assoc).then_some(Self { table, identity })
    }

    /// The cyclic group of order `k`.
    pub fn cyclic(k: usize) -> Self {
        let table = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
        Self { table, identity: 0 }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.order().pow(n as u32)
    }

    pub fn decode(&self, n: usize, mut x: usize) -> Vec<usize> {
        let k = self.order();
        let mut out = vec![0; n];
        for s in out.iter_mut().rev() {
            *s = x % k;
            x /= k;
        }
        out
    }

    pub fn encode(&self, g: &[usize]) -> usize {
        g.iter().fold(0, |acc, &v| acc * self.order() + v)
    }

    /// `d_i: N_n → N_{n-1}`, `0 ≤ i ≤ n`.
    pub fn face(&self, i: usize, n: usize, x: usize) -> usize {
        let mut g = self.decode(n, x);
        if i == 0 {
            g.remove(0);
        } else if i == n {
            g.pop();
        } else {
            g[i - 1] = self.table[g[i - 1]][g[i]];
            g.remove(i);
        }
        self.encode(&g)
    }

    /// `s_j: N_n → N_{n+1}`, inserting the identity after `j` entries.
    pub fn degeneracy(&self, j: usize, n: usize, x: usize) -> usize {
        let mut g = self.decode(n, x);
        g.insert(j, self.identity);
        self.encode(&g)
    }

    /// `Σ_{i=0}^{n} (-1)^i d_i`.
    pub fn chain_differential(&self, n: usize, x: usize) -> SparseVector<usize> {
        let mut out = SparseVector::zero();
        if n == 0 {
            return out;
        }
        for i in 0..=n {
            out.add_term(self.face(i, n, x), sign(i as i64));
        }
        out
    }
}

/// Cell of the diagonal product `(N ⊗ N')_k`: `(k, x, y)`.
pub type PairCell = (usize, usize, usize);

/// Classical `∇(x ⊗ y) = Σ_σ (-1)^{♯σ} D…x ⊗ D…y`.
pub fn classical_em(a: &MonoidNerve, b: &MonoidNerve, (m, x): (usize, usize), (n, y): (usize, usize)) -> SparseVector<PairCell> {
    let mut out = SparseVector::zero();
    for sh in shuffles(m, n) {
        let mut xs = x;
        for (k, &j) in sh.perm[m..].iter().enumerate() {
            xs = a.degeneracy(j, m + k, xs);
        }
        let mut ys = y;
        for (k, &j) in sh.perm[..m].iter().enumerate() {
            ys = b.degeneracy(j, n + k, ys);
        }
        out.add_term((m + n, xs, ys), sign(sh.inversions().count() as i64));
    }
    out
}

/// Simplicial differential of the diagonal product.
pub fn pair_differential(a: &MonoidNerve, b: &MonoidNerve, (k, x, y): PairCell) -> SparseVector<PairCell> {
    let mut out = SparseVector::zero();
    if k == 0 {
        return out;
    }
    for i in 0..=k {
        out.add_term((k - 1, a.face(i, k, x), b.face(i, k, y)), sign(i as i64));
    }
    out
}

/// `d∇(x, y) = ∇(dx, y) + (-1)^m ∇(x, dy)` for `m + n ≤ N`.
pub fn check_classical_leibniz(a: &MonoidNerve, b: &MonoidNerve, max_weight: usize) -> CheckReport {
    let mut c = Checker::new("em.classical_leibniz");
    for m in 0..=max_weight {
        for n in 0..=max_weight - m {
            for x in 0..a.dim(m) {
                for y in 0..b.dim(n) {
                    let l = classical_em(a, b, (m, x), (n, y)).flat_map(|&p| pair_differential(a, b, p));
                    let mut r = a
                        .chain_differential(m, x)
                        .flat_map(|&x2| classical_em(a, b, (m - 1, x2), (n, y)));
                    r += &b
                        .chain_differential(n, y)
                        .flat_map(|&y2| classical_em(a, b, (m, x), (n - 1, y2)))
                        .signed(m as i64);
                    c.expect(l == r, || format!("classical Leibniz fails on ({m},{x}), ({n},{y})"));
                }
            }
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg_core::{check_bialgebra, AlgebraBuilder};
    use crate::exact_linear::int;
    use crate::leinster::{from_dg_algebra, AlgebraMonoid};
    use crate::report::all_pass;

    fn alg(name: &str) -> DgAlgebra {
        let b = AlgebraBuilder::new().element("1", 0).unit("1");
        match name {
            "k" => b,
            "dual0" => b.element("x", 0),
            "ext1" => b.element("ξ", 1),
            "cone" => b.element("ε", -1).d("ε", "1", 1),
            _ => unreachable!(),
        }
        .build()
        .unwrap()
    }

    fn monoid(name: &str, n: usize) -> Arc<AlgebraMonoid> {
        Arc::new(from_dg_algebra(alg(name), n).unwrap())
    }

    #[test]
    fn shuffle_counts_are_binomial() {
        for total in 0..=8usize {
            for m in 0..=total {
                let n = total - m;
                let expect = (0..m).fold(1usize, |acc, i| acc * (total - i) / (i + 1));
                let all = shuffles(m, n);
                assert_eq!(all.len(), expect);
                assert!(all.iter().all(|s| Shuffle::new(m, n, s.perm.clone()).is_some()));
            }
        }
        assert!(Shuffle::new(1, 1, vec![0, 0]).is_none());
    }

    #[test]
    fn transposition_signs() {
        let t = Shuffle::new(1, 1, vec![1, 0]).unwrap();
        let s = SignExponents::compute(&t, &[0], &[0]);
        assert_eq!((s.s_em, s.s_sharp), (1, 0));
        let s = SignExponents::compute(&t, &[1], &[1]);
        assert_eq!((s.s_em, s.s_sharp), (4, 1));
        assert_eq!(s.s_sigma, 2);
    }

    #[test]
    fn s1_counts_entries_below_level() {
        let t = Shuffle::new(1, 1, vec![1, 0]).unwrap();
        assert_eq!(s1(&t, 1, &[5], &[7]), 7 + 1);
        assert_eq!(s1(&t, 2, &[5], &[7]), 5 + 7 + 2);
    }

    #[test]
    fn zero_degrees_give_classical_signs() {
        let x = monoid("dual0", 4);
        let a = EmMap::new(x.clone(), x.clone(), 4).unwrap();
        let b = EmMap::with_options(x.clone(), x.clone(), 4, FaceSignRule::Standard, ShuffleSign::Classical).unwrap();
        for xc in cells_upto(x.as_ref(), 0, 2) {
            for yc in cells_upto(x.as_ref(), 0, 2) {
                assert_eq!(a.apply(xc, yc), b.apply(xc, yc));
            }
        }
    }

    #[test]
    fn one_one_on_exterior() {
        let x = monoid("ext1", 2);
        let em = EmMap::new(x.clone(), x.clone(), 2).unwrap();
        let v = em.apply((1, 1), (1, 1));
        // σ = id: ξ⊗1 ⊠ 1⊗ξ (+); σ = (1 0): 1⊗ξ ⊠ ξ⊗1 (−)
        let z = em.target();
        let xi1 = x.encode(&[1, 0]);
        let onexi = x.encode(&[0, 1]);
        let expected = SparseVector::from_terms([
            ((2, z.join(2, xi1, onexi)), int(1)),
            ((2, z.join(2, onexi, xi1)), int(-1)),
        ]);
        assert_eq!(v, expected);
    }

    #[test]
    fn leibniz_on_catalog() {
        for name in ["k", "dual0", "ext1", "cone"] {
            let x = monoid(name, 5);
            let em = EmMap::new(x.clone(), x.clone(), 5).unwrap();
            assert!(check_leibniz(&em).passed(), "{name}");
            assert!(check_total_chain_map(&em).passed(), "{name}");
        }
        let em = EmMap::new(monoid("dual0", 4), monoid("ext1", 4), 4).unwrap();
        assert!(check_leibniz(&em).passed());
    }

    #[test]
    fn shifted_face_signs_break_leibniz() {
        let x = monoid("ext1", 4);
        let em = EmMap::with_options(x.clone(), x.clone(), 4, FaceSignRule::Shifted, ShuffleSign::Modified).unwrap();
        let r = check_leibniz(&em);
        assert!(!r.passed());
        assert!(r.witness.is_some());
    }

    #[test]
    fn classical_signs_break_graded_leibniz() {
        let x = monoid("ext1", 4);
        let em = EmMap::with_options(x.clone(), x.clone(), 4, FaceSignRule::Standard, ShuffleSign::Classical).unwrap();
        assert!(!check_leibniz(&em).passed());
    }

    #[test]
    fn symmetry_and_kappas() {
        for (p, q) in [("dual0", "ext1"), ("ext1", "ext1"), ("cone", "ext1")] {
            let (x, y) = (monoid(p, 4), monoid(q, 4));
            assert!(check_symmetry(x.clone(), y.clone(), 4).unwrap().passed(), "{p} {q}");
            assert!(check_kappa_discrepancy(x.as_ref(), y.as_ref(), 4).passed());
        }
    }

    #[test]
    fn lax_squares() {
        let x = monoid("dual0", 4);
        assert!(check_lax(x.clone(), x.clone(), x.clone(), 4).unwrap().passed());
        let e = monoid("ext1", 3);
        assert!(check_lax(e.clone(), monoid("cone", 3), e.clone(), 3).unwrap().passed());
        assert!(check_lax_unit(e, monoid("k", 3), 3).unwrap().passed());
    }

    #[test]
    fn coalgebra_map() {
        for (p, q) in [("dual0", "dual0"), ("ext1", "ext1"), ("cone", "dual0")] {
            let em = EmMap::new(monoid(p, 4), monoid(q, 4), 4).unwrap();
            assert!(check_coalgebra_map(&em).passed(), "{p} {q}");
        }
    }

    #[test]
    fn bar_bialgebra() {
        for name in ["dual0", "ext1", "cone"] {
            let bp = bar_product(monoid(name, 4), 4).unwrap();
            let r = check_bialgebra(&bp.bialgebra().unwrap());
            assert!(all_pass(&r), "{name}: {r:?}");
        }
    }

    #[test]
    fn product_of_letters() {
        let x = monoid("dual0", 2);
        let bp = bar_product(x.clone(), 2).unwrap();
        // [x]*[1] = [x⊗1] - [1⊗x]
        let v = bp.mul((1, 1), (1, 0));
        let expected = SparseVector::from_terms([((2, x.encode(&[1, 0])), int(1)), ((2, x.encode(&[0, 1])), int(-1))]);
        assert_eq!(v, expected);
    }

    #[test]
    fn associativity_matches_lax_square() {
        let x = monoid("ext1", 3);
        let bp = bar_product(x.clone(), 3).unwrap();
        let xx = EmMap::new(x.clone(), x.clone(), 3).unwrap();
        let xx_x = EmMap::new(xx.target().clone(), x.clone(), 3).unwrap();
        let mul3 = |v: &SparseVector<BarCell>| {
            v.flat_map(|&(w, c)| {
                let (pq, r) = xx_x.target().split(w, c);
                let (p, q) = xx.target().split(w, pq);
                x.product(w, p, q).bilinear(&SparseVector::basis(r), |&s, &t| x.product(w, s, t)).map_labels(|&u| (w, u))
            })
        };
        for a in bp.cells() {
            for b in bp.cells() {
                for c in bp.cells() {
                    if a.0 + b.0 + c.0 > 3 {
                        continue;
                    }
                    let left = bp.mul(a, b).flat_map(|&ab| bp.mul(ab, c));
                    let lax = mul3(&xx.apply(a, b).flat_map(|&p| xx_x.apply(p, c)));
                    assert_eq!(left, lax);
                }
            }
        }
    }

    #[test]
    fn classical_map() {
        let z2 = MonoidNerve::cyclic(2);
        let v = classical_em(&z2, &z2, (1, 1), (1, 1));
        // D_1x⊗D_0y − D_0x⊗D_1y
        let expected = SparseVector::from_terms([
            ((2, z2.encode(&[1, 0]), z2.encode(&[0, 1])), int(1)),
            ((2, z2.encode(&[0, 1]), z2.encode(&[1, 0])), int(-1)),
        ]);
        assert_eq!(v, expected);
        assert_eq!(classical_em(&z2, &z2, (0, 0), (2, 3)), SparseVector::basis((2, 0, 3)));
        assert!(check_classical_leibniz(&z2, &z2, 5).passed());
        let z3 = MonoidNerve::cyclic(3);
        assert!(check_classical_leibniz(&z2, &z3, 4).passed());
        assert!(MonoidNerve::new(vec![vec![0, 1], vec![1, 1]], 0).is_some());
        assert!(MonoidNerve::new(vec![vec![1, 1], vec![1, 1]], 0).is_none());
    }
}
