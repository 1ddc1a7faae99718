//! Brace operations on `Cobar(B)` for a dg bialgebra `B`, the induced
//! product on the cofree coalgebra `T(Cobar(B)[1])`, and exhaustive checks
//! of the resulting B∞ axioms on truncations.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::bar_cobar::{BarCobarError, Cobar, Word};
use crate::dg_core::{CoalgebraCell, DgBialgebra, DgCoalgebra, DgError};
use crate::exact_linear::{sign, Scalar, SparseVector};
use crate::report::{CheckReport, Checker};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BInfinityError {
    #[error("the bialgebra has no unit")]
    NoUnit,
    #[error("the bialgebra carries no weight window")]
    NoWindow,
    #[error("the unit must be a weight-0 cycle that nothing else reaches")]
    BadUnit,
    #[error(transparent)]
    Dg(#[from] DgError),
    #[error(transparent)]
    Cobar(#[from] BarCobarError),
}

/// Element of `T(Y[1])`: a sequence of cobar words.
pub type Tensor = Vec<Word>;

/// How `a ◊ y` splits `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiamondMode {
    /// Iterated coproduct including the unit terms.
    Full,
    /// Iterated reduced coproduct; primitives act by zero on words of length ≥ 2.
    Reduced,
}

/// Koszul classes that may contribute to the sign of a brace term.
/// Letter degrees are `|a| + 1`, word degrees are cobar degrees, `j` runs
/// over insertions and `q` is their number.
pub const SIGN_CLASSES: [&str; 13] = [
    // Σ_j (letters right of slot j)·|y_j|
    "later_letters_word",
    // Σ_j (letters left of slot j)·|y_j|
    "earlier_letters_word",
    // Σ_j |slot letter|·|y_j|
    "slot_letter_word",
    // inside ◊: a⁽ᵏ⁾ against earlier letters of the word
    "diamond_koszul",
    // Σ_j |a_slot| as a bialgebra element
    "slot_element",
    "earlier_letters",
    "later_letters",
    // q
    "insertion_count",
    // Σ_j |y_j|
    "word_degrees",
    // q·|x|
    "outer_shift",
    // Σ_j (q - j)·|y_j|
    "inner_shift",
    // Σ_{j<j'} |y_j||y_j'|
    "word_pairs",
    // inside ◊: Σ_k (k - 1)·|a⁽ᵏ⁾|
    "diamond_position",
];

/// A sign convention for brace terms: the set of active classes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraceSigns(u32);

impl BraceSigns {
    pub const FAMILY_SIZE: usize = 1 << SIGN_CLASSES.len();

    pub fn from_bits(bits: usize) -> Self {
        Self(bits as u32 & (Self::FAMILY_SIZE as u32 - 1))
    }

    pub fn bits(&self) -> usize {
        self.0 as usize
    }

    pub fn from_names(names: &[&str]) -> Option<Self> {
        let mut bits = 0;
        for n in names {
            bits |= 1 << SIGN_CLASSES.iter().position(|c| c == n)?;
        }
        Some(Self(bits))
    }

    pub fn has(&self, name: &str) -> bool {
        SIGN_CLASSES.iter().position(|c| *c == name).is_some_and(|k| self.0 >> k & 1 == 1)
    }

    fn on(&self, k: usize) -> i64 {
        (self.0 >> k & 1) as i64
    }

    pub fn names(&self) -> Vec<&'static str> {
        SIGN_CLASSES.iter().enumerate().filter(|(k, _)| self.0 >> k & 1 == 1).map(|(_, n)| *n).collect()
    }

    /// Koszul rule with inserted words in their `Y[1]` degree: each word
    /// passes the letters right of its slot, and each split factor passes
    /// the letters before it.
    pub fn koszul() -> Self {
        Self::from_names(&["later_letters_word", "later_letters", "diamond_koszul"]).expect("known classes")
    }

    pub fn family() -> impl Iterator<Item = BraceSigns> {
        (0..Self::FAMILY_SIZE).map(Self::from_bits)
    }
}

impl Serialize for BraceSigns {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.names().serialize(ser)
    }
}

impl fmt::Display for BraceSigns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let on = self.names();
        if on.is_empty() {
            write!(f, "none")
        } else {
            write!(f, "{}", on.join("+"))
        }
    }
}

/// `Cobar(B̄)` with brace operations built from the bialgebra `B`.
#[derive(Clone, Debug)]
pub struct BraceStructure {
    bialgebra: DgBialgebra,
    unit: usize,
    /// Letter index → bialgebra index.
    letters: Vec<usize>,
    /// Bialgebra index → letter index.
    letter_of: BTreeMap<usize, usize>,
    cobar: Cobar,
    mode: DiamondMode,
    signs: BraceSigns,
}

/// The reduced coalgebra `B̄` on the non-unit basis.
fn reduced_coalgebra(b: &DgBialgebra, unit: usize) -> Result<(DgCoalgebra, Vec<usize>), BInfinityError> {
    let a = &b.algebra;
    let window = a.window().ok_or(BInfinityError::NoWindow)?;
    if window.weights[unit] != 0 || !a.d_basis(unit).is_zero() {
        return Err(BInfinityError::BadUnit);
    }
    let letters: Vec<usize> = (0..a.dim()).filter(|&i| i != unit).collect();
    let pos: BTreeMap<usize, usize> = letters.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut cells = Vec::new();
    let mut differential = Vec::new();
    let mut coproduct = Vec::new();
    for &i in &letters {
        cells.push(CoalgebraCell {
            label: a.label(i).to_string(),
            degree: a.degree(i),
            weight: window.weights[i],
        });
        if a.d_basis(i).keys().any(|&t| t == unit) {
            return Err(BInfinityError::BadUnit);
        }
        differential.push(a.d_basis(i).map_labels(|t| pos[t]));
        coproduct.push(
            b.coproduct_basis(i)
                .filter(|&(l, r)| l != unit && r != unit)
                .map_labels(|(l, r)| (pos[l], pos[r])),
        );
    }
    Ok((DgCoalgebra::new(cells, differential, coproduct)?, letters))
}

impl BraceStructure {
    pub fn new(bialgebra: DgBialgebra, max_weight: usize, mode: DiamondMode, signs: BraceSigns) -> Result<Self, BInfinityError> {
        let unit = bialgebra.algebra.unit().ok_or(BInfinityError::NoUnit)?;
        let (coalgebra, letters) = reduced_coalgebra(&bialgebra, unit)?;
        let letter_of = letters.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let cobar = Cobar::new(coalgebra, max_weight)?;
        Ok(Self {
            bialgebra,
            unit,
            letters,
            letter_of,
            cobar,
            mode,
            signs,
        })
    }

    pub fn with_signs(&self, signs: BraceSigns) -> Self {
        Self { signs, ..self.clone() }
    }

    pub fn signs(&self) -> BraceSigns {
        self.signs
    }

    pub fn cobar(&self) -> &Cobar {
        &self.cobar
    }

    pub fn bialgebra(&self) -> &DgBialgebra {
        &self.bialgebra
    }

    pub fn max_weight(&self) -> usize {
        self.cobar.max_weight()
    }

    /// Letter index of a non-unit bialgebra basis element.
    pub fn letter(&self, element: usize) -> Option<usize> {
        self.letter_of.get(&element).copied()
    }

    /// Bialgebra basis element behind a letter.
    pub fn element(&self, letter: usize) -> usize {
        self.letters[letter]
    }

    fn element_degree(&self, i: usize) -> i64 {
        self.bialgebra.algebra.degree(i)
    }

    fn letter_degree(&self, l: usize) -> i64 {
        self.cobar.coalgebra().degree(l) + 1
    }

    /// Shifted degree in `Y[1]`.
    pub fn shifted_degree(&self, w: &[usize]) -> i64 {
        self.cobar.degree(w) - 1
    }

    pub fn tensor_degree(&self, t: &[Word]) -> i64 {
        t.iter().map(|w| self.shifted_degree(w)).sum()
    }

    pub fn tensor_weight(&self, t: &[Word]) -> usize {
        t.iter().map(|w| self.cobar.weight(w)).sum()
    }

    pub fn tensor_label(&self, t: &[Word]) -> String {
        if t.is_empty() {
            return "∅".into();
        }
        t.iter().map(|w| format!("[{}]", self.cobar.label(w))).join("⊗")
    }

    /// `k`-fold split of a bialgebra element.
    fn split(&self, a: usize, k: usize) -> SparseVector<Vec<usize>> {
        let mut cur = SparseVector::basis(vec![a]);
        for _ in 1..k {
            cur = cur.flat_map(|v| {
                let last = *v.last().expect("nonempty");
                self.bialgebra
                    .coproduct_basis(last)
                    .filter(|&(l, r)| self.mode == DiamondMode::Full || (l != self.unit && r != self.unit))
                    .map_labels(|&(l, r)| {
                        let mut nv = v[..v.len() - 1].to_vec();
                        nv.push(l);
                        nv.push(r);
                        nv
                    })
            });
        }
        cur
    }

    /// `a ◊ y = (Δ^{n-1} a) * y`, factorwise, for a bialgebra element `a`.
    pub fn diamond(&self, a: usize, y: &[usize]) -> SparseVector<Word> {
        let alg = &self.bialgebra.algebra;
        let mut out = SparseVector::zero();
        for (parts, c) in self.split(a, y.len()).iter() {
            let mut e = 0;
            let mut seen = 0;
            for (k, &p) in parts.iter().enumerate() {
                let deg = self.element_degree(p);
                e += self.signs.on(3) * deg * seen + self.signs.on(12) * deg * k as i64;
                seen += self.letter_degree(y[k]);
            }
            let mut acc = SparseVector::basis(Vec::<usize>::new());
            for (&p, &l) in parts.iter().zip(y) {
                let prod = alg.mul_basis(p, self.letters[l]);
                acc = acc.bilinear(&prod, |w, &r| {
                    let mut nw = w.clone();
                    nw.push(self.letter_of[&r]);
                    SparseVector::basis(nw)
                });
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, &(c * sign(e)));
        }
        out
    }

    fn brace_sign(&self, x: &[usize], slots: &[usize], ys: &[Word]) -> i64 {
        let on = |k| self.signs.on(k);
        let q = ys.len() as i64;
        let xd: i64 = x.iter().map(|&l| self.letter_degree(l)).sum();
        let mut e = on(7) * q + on(9) * q * xd;
        let mut seen_words = 0;
        for (j, (&i, y)) in slots.iter().zip(ys).enumerate() {
            let yd = self.cobar.degree(y);
            let before: i64 = x[..i].iter().map(|&l| self.letter_degree(l)).sum();
            let after: i64 = x[i + 1..].iter().map(|&l| self.letter_degree(l)).sum();
            let slot = self.letter_degree(x[i]);
            e += on(0) * after * yd
                + on(1) * before * yd
                + on(2) * slot * yd
                + on(4) * self.element_degree(self.letters[x[i]])
                + on(5) * before
                + on(6) * after
                + on(8) * yd
                + on(10) * (q - 1 - j as i64) * yd
                + on(11) * seen_words * yd;
            seen_words += yd;
        }
        e
    }

    /// `x{y_1, …, y_ℓ}`; zero when `ℓ` exceeds the number of letters of `x`.
    pub fn brace(&self, x: &[usize], ys: &[Word]) -> SparseVector<Word> {
        if ys.is_empty() {
            return SparseVector::basis(x.to_vec());
        }
        let mut out = SparseVector::zero();
        for slots in (0..x.len()).combinations(ys.len()) {
            let mut acc = SparseVector::basis(Vec::<usize>::new());
            let mut next = 0;
            for (k, &l) in x.iter().enumerate() {
                let piece = if next < slots.len() && slots[next] == k {
                    next += 1;
                    self.diamond(self.letters[l], &ys[next - 1])
                } else {
                    SparseVector::basis(vec![l])
                };
                acc = acc.bilinear(&piece, |u, v| SparseVector::basis(Cobar::concat(u, v)));
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, &sign(self.brace_sign(x, &slots, ys)));
        }
        out
    }

    /// Product on `T(Y[1])` determined by the braces.
    pub fn product(&self, xs: &[Word], ys: &[Word]) -> SparseVector<Tensor> {
        if xs.is_empty() && ys.is_empty() {
            return SparseVector::basis(Vec::new());
        }
        let rest_x: i64 = self.tensor_degree(xs);
        let mut out = SparseVector::zero();
        if let Some(y) = ys.first() {
            let e = self.shifted_degree(y) * rest_x;
            let tail = self.product(xs, &ys[1..]);
            out.add_scaled(&prepend(&SparseVector::basis(y.clone()), &tail), &sign(e));
        }
        if let Some(x) = xs.first() {
            let later_x = rest_x - self.shifted_degree(x);
            for r in 0..=ys.len() {
                let consumed = self.tensor_degree(&ys[..r]);
                let block = self.brace(x, &ys[..r]);
                if block.is_zero() {
                    continue;
                }
                let tail = self.product(&xs[1..], &ys[r..]);
                out.add_scaled(&prepend(&block, &tail), &sign(consumed * later_x));
            }
        }
        out
    }

    pub fn product_vec(&self, u: &SparseVector<Tensor>, v: &SparseVector<Tensor>) -> SparseVector<Tensor> {
        u.bilinear(v, |a, b| self.product(a, b))
    }

    /// Bar differential of the dg algebra `Cobar(B̄)` on `T(Y[1])`.
    pub fn differential(&self, t: &[Word]) -> SparseVector<Tensor> {
        let mut out = SparseVector::zero();
        let mut prefix = 0;
        for i in 0..t.len() {
            let s = sign(prefix);
            for (w, c) in self.cobar.d(&t[i]).iter() {
                let mut nt = t.to_vec();
                nt[i] = w.clone();
                out.add_term(nt, c * &s);
            }
            if i + 1 < t.len() {
                let mut nt = t[..i].to_vec();
                nt.push(Cobar::concat(&t[i], &t[i + 1]));
                nt.extend_from_slice(&t[i + 2..]);
                out.add_term(nt, &s * sign(self.cobar.degree(&t[i])));
            }
            prefix += self.shifted_degree(&t[i]);
        }
        out
    }

    pub fn differential_vec(&self, v: &SparseVector<Tensor>) -> SparseVector<Tensor> {
        v.flat_map(|t| self.differential(t))
    }

    /// Deconcatenation into a sum of pairs.
    pub fn deconcatenate(&self, t: &[Word]) -> SparseVector<(Tensor, Tensor)> {
        SparseVector::from_terms((0..=t.len()).map(|i| ((t[..i].to_vec(), t[i..].to_vec()), Scalar::from_integer(1.into()))))
    }

    fn product_pairs(&self, u: &SparseVector<(Tensor, Tensor)>, v: &SparseVector<(Tensor, Tensor)>) -> SparseVector<(Tensor, Tensor)> {
        u.bilinear(v, |(a1, a2), (b1, b2)| {
            let s = self.tensor_degree(a2) * self.tensor_degree(b1);
            self.product(a1, b1)
                .bilinear(&self.product(a2, b2), |p, q| SparseVector::basis((p.clone(), q.clone())))
                .signed(s)
        })
    }

    /// Nonempty tensors of length `≤ max_length` and weight `≤ max_weight`.
    pub fn tensors(&self, max_weight: usize, max_length: usize) -> Vec<Tensor> {
        let by_weight: Vec<Vec<Word>> = (0..=max_weight).map(|w| if w == 0 { Vec::new() } else { self.cobar.words_of_weight(w) }).collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(left: usize, len: usize, by: &[Vec<Word>], cur: &mut Tensor, out: &mut Vec<Tensor>) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            if len == 0 {
                return;
            }
            for w in 1..=left {
                for word in &by[w] {
                    cur.push(word.clone());
                    rec(left - w, len - 1, by, cur, out);
                    cur.pop();
                }
            }
        }
        rec(max_weight, max_length, &by_weight, &mut cur, &mut out);
        out
    }

    /// Product rebuilt from its corank-one projections through the
    /// cofree-coalgebra formula, with independent enumeration.
    pub fn reconstruct_product(&self, xs: &[Word], ys: &[Word]) -> SparseVector<Tensor> {
        let taylor = |a: &[Word], b: &[Word]| -> SparseVector<Word> {
            self.product(a, b).filter(|t| t.len() == 1).map_labels(|t| t[0].clone())
        };
        let mut out = SparseVector::zero();
        for r in 1..=xs.len() + ys.len() {
            for xcuts in cuts(xs.len(), r) {
                for ycuts in cuts(ys.len(), r) {
                    let blocks: Vec<(&[Word], &[Word])> = (0..r)
                        .map(|k| (&xs[xcuts[k]..xcuts[k + 1]], &ys[ycuts[k]..ycuts[k + 1]]))
                        .collect();
                    if blocks.iter().any(|(a, b)| a.is_empty() && b.is_empty()) {
                        continue;
                    }
                    let mut e = 0;
                    for (p, (a, _)) in blocks.iter().enumerate() {
                        for (_, b) in &blocks[..p] {
                            e += self.tensor_degree(a) * self.tensor_degree(b);
                        }
                    }
                    let mut acc = SparseVector::basis(Vec::<Word>::new());
                    for (a, b) in &blocks {
                        let piece = taylor(a, b);
                        acc = acc.bilinear(&piece, |t, w| {
                            let mut nt = t.clone();
                            nt.push(w.clone());
                            SparseVector::basis(nt)
                        });
                        if acc.is_zero() {
                            break;
                        }
                    }
                    out.add_scaled(&acc, &sign(e));
                }
            }
        }
        out
    }
}

/// Monotone cut points `0 = c_0 ≤ … ≤ c_r = n`.
fn cuts(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0..r - 1)
        .map(|_| 0..=n)
        .multi_cartesian_product()
        .filter(|v| v.windows(2).all(|w| w[0] <= w[1]))
        .map(|mid| {
            let mut c = vec![0];
            c.extend(mid);
            c.push(n);
            c
        })
        .filter(|c| c.windows(2).all(|w| w[0] <= w[1]))
        .collect()
}

fn prepend(head: &SparseVector<Word>, tail: &SparseVector<Tensor>) -> SparseVector<Tensor> {
    head.bilinear(tail, |h, t| {
        let mut nt = Vec::with_capacity(t.len() + 1);
        nt.push(h.clone());
        nt.extend_from_slice(t);
        SparseVector::basis(nt)
    })
}

/// Window for the axiom checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BInfinityWindow {
    pub max_weight: usize,
    pub max_length: usize,
}

/// Differential, unit, associativity, Leibniz, interchange and Taylor
/// reconstruction on every tuple whose output stays in the window.
pub fn check_brace_structure(s: &BraceStructure, window: BInfinityWindow) -> Vec<CheckReport> {
    run_checks(s, window, false)
}

/// Whether associativity and Leibniz hold, the two axioms that see the
/// brace signs; stops at the first counterexample.
pub fn brace_structure_passes(s: &BraceStructure, window: BInfinityWindow) -> bool {
    run_checks(s, window, true).iter().all(CheckReport::passed)
}

fn run_checks(s: &BraceStructure, window: BInfinityWindow, fail_fast: bool) -> Vec<CheckReport> {
    let BInfinityWindow { max_weight, max_length } = window;
    let mut all = s.tensors(max_weight, max_length);
    all.sort_by_key(|t| (s.tensor_weight(t), t.len()));
    let label = |t: &Tensor| s.tensor_label(t);
    let fits = |ts: &[&Tensor]| {
        ts.iter().map(|t| t.len()).sum::<usize>() <= max_length && ts.iter().map(|t| s.tensor_weight(t)).sum::<usize>() <= max_weight
    };
    let mut diff = Checker::new("binf.differential");
    let mut unit = Checker::new("binf.unit");
    let mut assoc = Checker::new("binf.associativity");
    let mut leib = Checker::new("binf.leibniz");
    let mut inter = Checker::new("binf.interchange");
    let mut taylor = Checker::new("binf.taylor_round_trip");
    let finish = |v: [Checker; 6]| v.into_iter().map(Checker::finish).collect::<Vec<_>>();

    for t in all.iter().filter(|_| !fail_fast) {
        let dd = s.differential_vec(&s.differential(t));
        diff.expect(dd.is_zero(), || format!("D² ≠ 0 on {}", label(t)));
        if t.len() == 1 {
            let direct = s.cobar.d(&t[0]).map_labels(|w| vec![w.clone()]);
            diff.expect(s.differential(t) == direct, || format!("D ≠ d_Cobar on {}", label(t)));
        }
        let id = SparseVector::basis(t.clone());
        unit.expect(s.product(&[], t) == id && s.product(t, &[]) == id, || format!("∅ is not a unit on {}", label(t)));
    }
    for x in &all {
        for y in &all {
            if !fits(&[x, y]) {
                continue;
            }
            let xy = s.product(x, y);
            let lhs = s.differential_vec(&xy);
            let rhs = s.product_vec(&s.differential(x), &SparseVector::basis(y.clone()))
                + s.product_vec(&SparseVector::basis(x.clone()), &s.differential(y)).signed(s.tensor_degree(x));
            leib.expect(lhs == rhs, || format!("D(x*y) ≠ Dx*y ± x*Dy on {}, {}", label(x), label(y)));
            for z in &all {
                if !fits(&[x, y, z]) {
                    continue;
                }
                let left = xy.flat_map(|t| s.product(t, z));
                let right = s.product(y, z).flat_map(|t| s.product(x, t));
                assoc.expect(left == right, || format!("(x*y)*z ≠ x*(y*z) on {}, {}, {}", label(x), label(y), label(z)));
                if fail_fast && assoc.failed() {
                    break;
                }
            }
            if fail_fast {
                if leib.failed() || assoc.failed() {
                    return finish([diff, unit, assoc, leib, inter, taylor]);
                }
                continue;
            }
            let lhs = xy.flat_map(|t| s.deconcatenate(t));
            let rhs = s.product_pairs(&s.deconcatenate(x), &s.deconcatenate(y));
            inter.expect(lhs == rhs, || format!("Δ(x*y) ≠ Δx*Δy on {}, {}", label(x), label(y)));
            taylor.expect(s.reconstruct_product(x, y) == xy, || format!("Taylor reconstruction differs on {}, {}", label(x), label(y)));
        }
    }
    finish([diff, unit, assoc, leib, inter, taylor])
}

/// Outcome of running the sign family against the axioms.
#[derive(Clone, Debug, Serialize)]
pub struct SignSearch {
    pub tried: usize,
    /// Passing conventions grouped by the brace operations they induce on
    /// the window; conventions in one group are indistinguishable there.
    pub passing: Vec<Vec<BraceSigns>>,
}

impl SignSearch {
    /// The passing convention when exactly one brace operation passes;
    /// the group's representative has the fewest active classes.
    pub fn unique(&self) -> Option<BraceSigns> {
        match self.passing.as_slice() {
            [group] => group.iter().min_by_key(|c| (c.names().len(), c.bits())).copied(),
            _ => None,
        }
    }

    pub fn passing_count(&self) -> usize {
        self.passing.iter().map(Vec::len).sum()
    }
}

/// Every brace value on in-window inputs, as a comparable fingerprint.
fn brace_fingerprint(s: &BraceStructure, window: BInfinityWindow) -> Vec<SparseVector<Word>> {
    let words = s.cobar.words();
    let mut out = Vec::new();
    for x in &words {
        for q in 1..window.max_length {
            for ys in (0..q).map(|_| words.iter()).multi_cartesian_product() {
                let w = s.cobar.weight(x) + ys.iter().map(|y| s.cobar.weight(y)).sum::<usize>();
                if w <= window.max_weight && q <= x.len() {
                    let ys: Vec<Word> = ys.into_iter().cloned().collect();
                    out.push(s.brace(x, &ys));
                }
            }
        }
    }
    out
}

/// Tries every convention of the family, then groups the survivors by the
/// operations they induce.
pub fn search_brace_signs(base: &BraceStructure, window: BInfinityWindow) -> SignSearch {
    let screen = BInfinityWindow {
        max_weight: window.max_weight.min(3),
        max_length: window.max_length,
    };
    let mut groups: BTreeMap<Vec<Vec<(Word, Scalar)>>, Vec<BraceSigns>> = BTreeMap::new();
    for signs in BraceSigns::family() {
        let s = base.with_signs(signs);
        if brace_structure_passes(&s, screen) && brace_structure_passes(&s, window) {
            let key = brace_fingerprint(&s, window)
                .into_iter()
                .map(|v| v.into_terms().into_iter().collect())
                .collect();
            groups.entry(key).or_default().push(signs);
        }
    }
    SignSearch {
        tried: BraceSigns::FAMILY_SIZE,
        passing: groups.into_values().collect(),
    }
}

/// Verdict of the B∞ verification.
#[derive(Clone, Debug, Serialize)]
pub struct BInfinityReport {
    pub window: BInfinityWindow,
    /// Convention whose reports are listed.
    pub convention: BraceSigns,
    pub default_passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SignSearch>,
    pub reports: Vec<CheckReport>,
}

/// Checks the default convention; when it fails, searches the family and
/// reports against the unique passing convention if there is one.
pub fn verify_b_infinity(b: &DgBialgebra, window: BInfinityWindow) -> Result<BInfinityReport, BInfinityError> {
    let base = BraceStructure::new(b.clone(), window.max_weight, DiamondMode::Full, BraceSigns::koszul())?;
    let reports = check_brace_structure(&base, window);
    if reports.iter().all(CheckReport::passed) {
        return Ok(BInfinityReport {
            window,
            convention: base.signs,
            default_passed: true,
            search: None,
            reports,
        });
    }
    let search = search_brace_signs(&base, window);
    let (convention, reports) = match search.unique() {
        Some(signs) => (signs, check_brace_structure(&base.with_signs(signs), window)),
        None => {
            let mut r = reports;
            r.push(CheckReport::fail(
                "binf.sign_search",
                search.tried,
                format!("{} distinct passing brace operations", search.passing.len()),
            ));
            (base.signs, r)
        }
    };
    Ok(BInfinityReport {
        window,
        convention,
        default_passed: false,
        search: Some(search),
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg_core::{check_bialgebra, AlgebraBuilder};
    use crate::em_map::bar_product;
    use crate::leinster::from_dg_algebra;
    use crate::report::all_pass;
    use std::sync::Arc;

    fn bar_bialgebra(name: &str, n: usize) -> DgBialgebra {
        let b = AlgebraBuilder::new().element("1", 0).unit("1");
        let alg = match name {
            "k" => b,
            "dual0" => b.element("x", 0),
            "ext1" => b.element("ξ", 1),
            _ => unreachable!(),
        }
        .build()
        .unwrap();
        let m = Arc::new(from_dg_algebra(alg, n).unwrap());
        bar_product(m, n).unwrap().bialgebra().unwrap()
    }

    fn structure(name: &str, n: usize) -> BraceStructure {
        BraceStructure::new(bar_bialgebra(name, n), n, DiamondMode::Full, BraceSigns::koszul()).unwrap()
    }

    fn letter_named(s: &BraceStructure, label: &str) -> usize {
        let a = &s.bialgebra().algebra;
        s.letter(a.index_of(label).unwrap()).unwrap()
    }

    fn product_letter(s: &BraceStructure, a: usize, b: usize) -> SparseVector<usize> {
        s.bialgebra()
            .algebra
            .mul_basis(a, s.element(b))
            .map_labels(|&r| s.letter(r).unwrap())
    }

    #[test]
    fn family_names_round_trip() {
        for signs in BraceSigns::family().step_by(97) {
            assert_eq!(BraceSigns::from_names(&signs.names()), Some(signs));
        }
        assert!(BraceSigns::koszul().has("diamond_koszul"));
        assert_eq!(BraceSigns::from_names(&["nope"]), None);
    }

    #[test]
    fn diamond_on_single_letter_is_the_product() {
        let s = structure("dual0", 3);
        let x = letter_named(&s, "[x]");
        let a = s.bialgebra().algebra.index_of("[1⊗x]").unwrap();
        let expected = product_letter(&s, a, x).map_labels(|&l| vec![l]);
        assert!(!expected.is_zero());
        assert_eq!(s.diamond(a, &[x]), expected);
    }

    #[test]
    fn primitives_act_by_zero_in_reduced_mode() {
        let b = bar_bialgebra("dual0", 3);
        let reduced = BraceStructure::new(b.clone(), 3, DiamondMode::Reduced, BraceSigns::koszul()).unwrap();
        let full = BraceStructure::new(b, 3, DiamondMode::Full, BraceSigns::koszul()).unwrap();
        let x = letter_named(&full, "[x]");
        // [x]*[x] = 0 in the bar product, so use the primitive [1]
        let a = full.bialgebra().algebra.index_of("[1]").unwrap();
        assert!(reduced.diamond(a, &[x, x]).is_zero());
        assert!(!full.diamond(a, &[x, x]).is_zero());
    }

    #[test]
    fn diamond_through_the_bar_coproduct() {
        // Δ(1⊗x) = ∅⊗(1⊗x) + (1⊗x)⊗∅ + [1]⊗[x]
        let s = structure("dual0", 4);
        let alg = &s.bialgebra().algebra;
        let a = alg.index_of("[1⊗x]").unwrap();
        let x = letter_named(&s, "[x]");
        let one = alg.index_of("[1]").unwrap();
        let xe = alg.index_of("[x]").unwrap();
        let ax = product_letter(&s, a, x);
        let pair = |u: &SparseVector<usize>, v: &SparseVector<usize>| u.bilinear(v, |&p, &q| SparseVector::basis(vec![p, q]));
        let lx = SparseVector::basis(x);
        let expected = pair(&lx, &ax) + pair(&ax, &lx) + pair(&product_letter(&s, one, x), &product_letter(&s, xe, x));
        assert_eq!(s.diamond(a, &[x, x]), expected);
    }

    #[test]
    fn brace_shapes() {
        let s = structure("dual0", 4);
        let x = letter_named(&s, "[x]");
        let one = letter_named(&s, "[1]");
        assert!(s.brace(&[x], &[vec![x], vec![x]]).is_zero());
        assert_eq!(s.brace(&[x, one], &[]), SparseVector::basis(vec![x, one]));
        let single = s.brace(&[one], &[vec![x]]);
        assert_eq!(single, s.diamond(s.element(one), &[x]));
        // two slots, each term replaces one letter
        let two = s.brace(&[one, x], &[vec![x]]);
        let first = s.diamond(s.element(one), &[x]).map_labels(|w| Cobar::concat(w, &[x]));
        let second = s.diamond(s.element(x), &[x]).map_labels(|w| Cobar::concat(&[one], w));
        // every letter has degree 0 here, so both terms enter with +
        assert_eq!(two, first + second);
    }

    #[test]
    fn field_passes_everywhere() {
        let r = verify_b_infinity(&bar_bialgebra("k", 3), BInfinityWindow { max_weight: 3, max_length: 3 }).unwrap();
        assert!(r.default_passed);
        assert!(all_pass(&r.reports), "{:?}", r.reports);
    }

    #[test]
    fn dual_numbers_pass_with_default_signs() {
        let b = bar_bialgebra("dual0", 4);
        assert!(all_pass(&check_bialgebra(&b)));
        let r = verify_b_infinity(&b, BInfinityWindow { max_weight: 4, max_length: 3 }).unwrap();
        assert!(r.default_passed);
        assert!(all_pass(&r.reports), "{:?}", r.reports);
        assert!(r.reports.iter().all(|c| c.cases > 0));
    }

    #[test]
    fn exterior_algebra_passes_with_default_signs() {
        let r = verify_b_infinity(&bar_bialgebra("ext1", 4), BInfinityWindow { max_weight: 4, max_length: 3 }).unwrap();
        assert!(all_pass(&r.reports), "{:?}", r.reports);
    }

    #[test]
    fn unshifted_word_degrees_fail_on_exterior_algebra() {
        let s = structure("ext1", 4).with_signs(BraceSigns::from_names(&["later_letters_word", "diamond_koszul"]).unwrap());
        let r = check_brace_structure(&s, BInfinityWindow { max_weight: 4, max_length: 3 });
        let assoc = r.iter().find(|c| c.name == "binf.associativity").unwrap();
        assert!(!assoc.passed());
    }

    #[test]
    fn flipped_diamond_sign_breaks_associativity() {
        let s = structure("dual0", 4).with_signs(BraceSigns::from_names(&["later_letters_word", "later_letters"]).unwrap());
        let r = check_brace_structure(&s, BInfinityWindow { max_weight: 4, max_length: 3 });
        let assoc = r.iter().find(|c| c.name == "binf.associativity").unwrap();
        assert!(!assoc.passed());
        assert!(assoc.witness.as_deref().unwrap().contains("(x*y)*z"));
    }

    #[test]
    fn search_on_small_window_contains_default() {
        let s = structure("ext1", 3);
        let search = search_brace_signs(&s, BInfinityWindow { max_weight: 3, max_length: 3 });
        assert_eq!(search.tried, BraceSigns::FAMILY_SIZE);
        assert!(search.passing.iter().flatten().any(|c| *c == BraceSigns::koszul()));
    }

    #[test]
    fn cuts_enumerate_compositions() {
        assert_eq!(cuts(2, 2), vec![vec![0, 0, 2], vec![0, 1, 2], vec![0, 2, 2]]);
        assert_eq!(cuts(0, 1), vec![vec![0, 0]]);
    }
}
