//! The category Δ₀ of endpoint-preserving monotone maps between finite
//! ordinals `[n] = {0 < 1 < ... < n}`, its generators, the gluing monoidal
//! product and the duality with the augmented simplex category.

use std::fmt;

use thiserror::Error;

use crate::report::{CheckReport, Checker};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Delta0Error {
    #[error("value table of length {len} does not describe a map out of [{m}]")]
    BadTable { m: usize, len: usize },
    #[error("table is not monotone at position {0}")]
    NotMonotone(usize),
    #[error("value {value} exceeds target [{n}]")]
    OutOfRange { value: usize, n: usize },
    #[error("not a Δ₀ morphism: endpoints are not preserved")]
    EndpointsMoved,
    #[error("not a Δ₀ morphism: face f_{i} of [{n}] is an extreme face")]
    ExtremeFace { i: usize, n: usize },
    #[error("degeneracy index {j} out of range for [{n}]")]
    BadDegeneracy { j: usize, n: usize },
    #[error("w_{k} needs 1 <= k <= {n}")]
    BadWeight { k: usize, n: usize },
    #[error("cannot compose: target [{0}] differs from source [{1}]")]
    SizeMismatch(usize, usize),
    #[error("generator word is not composable at position {0}")]
    BrokenWord(usize),
}

/// Monotone map `[m] -> [n]` fixing both endpoints.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Delta0Morphism {
    target: usize,
    table: Vec<usize>,
}

impl fmt::Debug for Delta0Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}] {:?}", self.source(), self.target, self.table)
    }
}

impl Delta0Morphism {
    pub fn new(target: usize, table: Vec<usize>) -> Result<Self, Delta0Error> {
        check_monotone(target, &table)?;
        if table[0] != 0 || *table.last().unwrap() != target {
            return Err(Delta0Error::EndpointsMoved);
        }
        Ok(Self { target, table })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            target: n,
            table: (0..=n).collect(),
        }
    }

    /// The unique map `[m] -> [0]`.
    pub fn collapse(m: usize) -> Self {
        Self {
            target: 0,
            table: vec![0; m + 1],
        }
    }

    pub fn source(&self) -> usize {
        self.table.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn eval(&self, i: usize) -> usize {
        self.table[i]
    }

    /// Target gaps covered by source gap `g`, gaps numbered from 1.
    pub fn gap_preimage(&self, g: usize) -> std::ops::RangeInclusive<usize> {
        self.table[g - 1] + 1..=self.table[g]
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, v)| i == *v)
    }

    /// Generator factorization: degeneracies first, then inner faces.
    pub fn factorize(&self) -> GeneratorWord {
        let mut steps = Vec::new();
        // collapse repeated values, left to right
        let mut current: Vec<usize> = self.table.clone();
        let mut i = 0;
        while i + 1 < current.len() {
            if current[i] == current[i + 1] {
                steps.push(Generator::Degeneracy { j: i, n: current.len() - 1 });
                current.remove(i + 1);
            } else {
                i += 1;
            }
        }
        // current is now injective; insert the missing values in increasing
        // order, each one skipping its final position
        let mut size = current.len() - 1;
        for missing in 0..=self.target {
            if !current.contains(&missing) {
                steps.push(Generator::Face { i: missing, n: size });
                size += 1;
            }
        }
        GeneratorWord { steps }
    }
}

fn check_monotone(target: usize, table: &[usize]) -> Result<(), Delta0Error> {
    if table.is_empty() {
        return Err(Delta0Error::BadTable { m: 0, len: 0 });
    }
    for (i, w) in table.windows(2).enumerate() {
        if w[0] > w[1] {
            return Err(Delta0Error::NotMonotone(i + 1));
        }
    }
    if let Some(&v) = table.iter().find(|&&v| v > target) {
        return Err(Delta0Error::OutOfRange { value: v, n: target });
    }
    Ok(())
}

/// `g ∘ f`.
pub fn compose(g: &Delta0Morphism, f: &Delta0Morphism) -> Result<Delta0Morphism, Delta0Error> {
    if f.target != g.source() {
        return Err(Delta0Error::SizeMismatch(f.target, g.source()));
    }
    Ok(Delta0Morphism {
        target: g.target,
        table: f.table.iter().map(|&v| g.table[v]).collect(),
    })
}

/// Elementary face `f_i: [n] -> [n+1]` skipping `i`; inner faces only.
pub fn face(i: usize, n: usize) -> Result<Delta0Morphism, Delta0Error> {
    if i == 0 || i > n {
        return Err(Delta0Error::ExtremeFace { i, n });
    }
    Ok(Delta0Morphism {
        target: n + 1,
        table: (0..=n).map(|j| if j < i { j } else { j + 1 }).collect(),
    })
}

/// Elementary degeneracy `δ_j: [n] -> [n-1]` identifying `j` and `j+1`.
pub fn degeneracy(j: usize, n: usize) -> Result<Delta0Morphism, Delta0Error> {
    if n == 0 || j >= n {
        return Err(Delta0Error::BadDegeneracy { j, n });
    }
    Ok(Delta0Morphism {
        target: n - 1,
        table: (0..=n).map(|k| if k <= j { k } else { k - 1 }).collect(),
    })
}

/// Gluing product `[a] ⊗ [b] = [a+b]`, identifying the last point of the
/// first ordinal with the first point of the second.
pub fn monoidal_product(f: &Delta0Morphism, g: &Delta0Morphism) -> Delta0Morphism {
    let mut table = f.table.clone();
    table.extend(g.table.iter().skip(1).map(|&v| v + f.target));
    Delta0Morphism {
        target: f.target + g.target,
        table,
    }
}

/// `w_k^{(n)}: [n] -> [1]`, sending `j <= k-1` to 0 and the rest to 1.
pub fn w_map(k: usize, n: usize) -> Result<Delta0Morphism, Delta0Error> {
    if k == 0 || k > n {
        return Err(Delta0Error::BadWeight { k, n });
    }
    Ok(Delta0Morphism {
        target: 1,
        table: (0..=n).map(|j| usize::from(j >= k)).collect(),
    })
}

/// All Δ₀ morphisms `[m] -> [n]`, in lexicographic table order.
pub fn all_morphisms(m: usize, n: usize) -> Vec<Delta0Morphism> {
    monotone_tables(m, n)
        .into_iter()
        .filter(|t| t[0] == 0 && t[m] == n)
        .map(|table| Delta0Morphism { target: n, table })
        .collect()
}

fn monotone_tables(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m + 1);
    fn rec(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            rec(m, n, v, cur, out);
            cur.pop();
        }
    }
    rec(m, n, 0, &mut cur, &mut out);
    out
}

/// One generator with the size of its source ordinal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `f_i: [n] -> [n+1]`.
    Face { i: usize, n: usize },
    /// `δ_j: [n] -> [n-1]`.
    Degeneracy { j: usize, n: usize },
}

impl Generator {
    pub fn morphism(self) -> Result<Delta0Morphism, Delta0Error> {
        match self {
            Generator::Face { i, n } => face(i, n),
            Generator::Degeneracy { j, n } => degeneracy(j, n),
        }
    }
}

/// Generators in application order: the first token acts first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneratorWord {
    pub steps: Vec<Generator>,
}

impl GeneratorWord {
    /// Composite of the word, starting from the identity of `[source]`.
    pub fn evaluate(&self, source: usize) -> Result<Delta0Morphism, Delta0Error> {
        let mut acc = Delta0Morphism::identity(source);
        for (pos, g) in self.steps.iter().enumerate() {
            let m = g.morphism()?;
            acc = compose(&m, &acc).map_err(|_| Delta0Error::BrokenWord(pos))?;
        }
        Ok(acc)
    }
}

/// Monotone map `[m] -> [n]` of the full simplex category.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DeltaMorphism {
    target: usize,
    table: Vec<usize>,
}

impl DeltaMorphism {
    pub fn new(target: usize, table: Vec<usize>) -> Result<Self, Delta0Error> {
        check_monotone(target, &table)?;
        Ok(Self { target, table })
    }

    pub fn source(&self) -> usize {
        self.table.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn compose(&self, inner: &DeltaMorphism) -> Result<DeltaMorphism, Delta0Error> {
        if inner.target != self.source() {
            return Err(Delta0Error::SizeMismatch(inner.target, self.source()));
        }
        Ok(DeltaMorphism {
            target: self.target,
            table: inner.table.iter().map(|&v| self.table[v]).collect(),
        })
    }

    pub fn all(m: usize, n: usize) -> Vec<DeltaMorphism> {
        monotone_tables(m, n)
            .into_iter()
            .map(|table| DeltaMorphism { target: n, table })
            .collect()
    }
}

/// Duality functor `θ ↦ (q ↦ q ∘ θ)` on `Hom_Δ(-, [1])`.
///
/// `Hom_Δ([n],[1])` is identified with `[n+1]` through `q_i(j) = [j >= i]`,
/// so `θ: [m] -> [n]` goes to the Δ₀ map `[n+1] -> [m+1]` with
/// `i ↦ #{ j : θ(j) < i }`.
pub fn joyal_dual(theta: &DeltaMorphism) -> Delta0Morphism {
    let n = theta.target();
    let m = theta.source();
    let table = (0..=n + 1)
        .map(|i| theta.table().iter().filter(|&&v| v < i).count())
        .collect();
    Delta0Morphism { target: m + 1, table }
}

// ---------------------------------------------------------------------------
// verification

fn composite(steps: &[Result<Delta0Morphism, Delta0Error>]) -> Option<Delta0Morphism> {
    let mut it = steps.iter();
    let mut acc = it.next()?.clone().ok()?;
    for g in it {
        acc = compose(g.as_ref().ok()?, &acc).ok()?;
    }
    Some(acc)
}

/// Cosimplicial identities among inner faces and degeneracies, wherever
/// both sides are Δ₀ morphisms, for sources up to `[max_size]`.
pub fn check_simplicial_identities(max_size: usize) -> CheckReport {
    let mut c = Checker::new("delta0.simplicial_identities");
    let mut case = |name: &str, lhs: Option<Delta0Morphism>, rhs: Option<Delta0Morphism>| {
        if let (Some(l), Some(r)) = (lhs, rhs) {
            c.expect(l == r, || format!("{name}: {l:?} vs {r:?}"));
        }
    };
    for n in 0..=max_size {
        for i in 0..=n + 1 {
            for j in 0..=n + 1 {
                if i < j {
                    case(
                        &format!("f_{j} f_{i} on [{n}]"),
                        composite(&[face(i, n), face(j, n + 1)]),
                        composite(&[face(j - 1, n), face(i, n + 1)]),
                    );
                }
                if i <= j && n >= 2 {
                    case(
                        &format!("δ_{j} δ_{i} on [{n}]"),
                        composite(&[degeneracy(i, n), degeneracy(j, n - 1)]),
                        composite(&[degeneracy(j + 1, n), degeneracy(i, n - 1)]),
                    );
                }
                let collapses = i == j || i == j + 1;
                if n == 0 && !collapses {
                    continue;
                }
                let lhs = composite(&[face(i, n), degeneracy(j, n + 1)]);
                let rhs = if i < j {
                    composite(&[degeneracy(j - 1, n), face(i, n - 1)])
                } else if collapses {
                    Some(Delta0Morphism::identity(n))
                } else {
                    composite(&[degeneracy(j, n), face(i - 1, n - 1)])
                };
                case(&format!("δ_{j} f_{i} on [{n}]"), lhs, rhs);
            }
        }
    }
    c.finish()
}

/// Every Δ₀ morphism factors through its generator word, sizes `≤ max_size`.
pub fn check_factorization(max_size: usize) -> CheckReport {
    let mut c = Checker::new("delta0.factorization");
    for m in 0..=max_size {
        for n in 0..=max_size {
            for f in all_morphisms(m, n) {
                let back = f.factorize().evaluate(m);
                c.expect(back.as_ref() == Ok(&f), || format!("{f:?} evaluates to {back:?}"));
            }
        }
    }
    c.finish()
}

/// Duality `Δ([m],[n]) → Δ₀([n+1],[m+1])` is bijective and reverses
/// composition, for `m, n ≤ max_size`.
pub fn check_joyal_duality(max_size: usize) -> [CheckReport; 2] {
    let mut bij = Checker::new("delta0.joyal_bijective");
    for m in 0..=max_size {
        for n in 0..=max_size {
            let images: std::collections::BTreeSet<_> = DeltaMorphism::all(m, n).iter().map(joyal_dual).collect();
            let expected: std::collections::BTreeSet<_> = all_morphisms(n + 1, m + 1).into_iter().collect();
            bij.expect(images == expected && images.len() == DeltaMorphism::all(m, n).len(), || {
                format!("Δ([{m}],[{n}]) has {} images, Δ₀([{}],[{}]) has {} maps", images.len(), n + 1, m + 1, expected.len())
            });
        }
    }
    let mut fun = Checker::new("delta0.joyal_functorial");
    for a in 0..=max_size {
        for b in 0..=max_size {
            for cc in 0..=max_size {
                for f in DeltaMorphism::all(a, b) {
                    for g in DeltaMorphism::all(b, cc) {
                        let gf = g.compose(&f).expect("composable");
                        let lhs = joyal_dual(&gf);
                        let rhs = compose(&joyal_dual(&f), &joyal_dual(&g));
                        fun.expect(rhs.as_ref() == Ok(&lhs), || format!("dual({g:?} ∘ {f:?})"));
                    }
                }
            }
        }
    }
    [bij.finish(), fun.finish()]
}

/// `D^{(a)} ⊗ w_j^{(b)} = w_{a+j}^{(a+b)}` and
/// `w_i^{(a)} ⊗ D^{(b)} = w_i^{(a+b)}`, with `D^{(c)}: [c] → [0]`.
pub fn check_w_products(max_size: usize) -> CheckReport {
    let mut c = Checker::new("delta0.w_products");
    for n in 1..=max_size {
        for a in 0..=n {
            let b = n - a;
            for j in 1..=b {
                let lhs = monoidal_product(&Delta0Morphism::collapse(a), &w_map(j, b).expect("in range"));
                c.expect(Ok(&lhs) == w_map(a + j, n).as_ref(), || format!("D^({a}) ⊗ w_{j}^({b}) = {lhs:?}"));
            }
            for i in 1..=a {
                let lhs = monoidal_product(&w_map(i, a).expect("in range"), &Delta0Morphism::collapse(b));
                c.expect(Ok(&lhs) == w_map(i, n).as_ref(), || format!("w_{i}^({a}) ⊗ D^({b}) = {lhs:?}"));
            }
        }
    }
    c.finish()
}

/// Simplicial identities and factorization up to `[5]`, duality up to
/// `[4]`, w-products for `a + b ≤ 5`.
pub fn check_delta0() -> Vec<CheckReport> {
    let [bij, fun] = check_joyal_duality(4);
    vec![check_simplicial_identities(5), check_factorization(5), bij, fun, check_w_products(5)]
}
