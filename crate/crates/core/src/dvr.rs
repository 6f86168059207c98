//! Hereditary orders over a discrete valuation ring `R = k[[s]]`.
//!
//! A [`BlockOrder`] with block sizes `(n_1, ..., n_t)` is the ring of
//! `n x n` matrices whose entry `(a, b)` lies in `R` when the block of `a`
//! is at or below the block of `b`, and in `m = sR` when it is strictly
//! above. Everything in this module is a valuation-pattern computation:
//! a lattice is described by the minimal `s`-adic valuation allowed in
//! each row (its *floor*).
//!
//! Indices of projectives and simples are 1-based, matching the usual
//! naming `P_1 ⊇ P_2 ⊇ ... ⊇ P_t` and `S_j = P_1 / P_j` for `j = 2..t`.
//! Row and column indices of matrices are 0-based.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, PrimeField};

/// Default truncation level for the finite-dimensional oracle.
pub const DEFAULT_TRUNCATION: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BlockOrderJson", into = "BlockOrderJson")]
pub struct BlockOrder {
    blocks: Vec<usize>,
    block_of_row: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct BlockOrderJson {
    blocks: Vec<usize>,
}

impl TryFrom<BlockOrderJson> for BlockOrder {
    type Error = Error;

    fn try_from(j: BlockOrderJson) -> Result<Self> {
        BlockOrder::new(&j.blocks)
    }
}

impl From<BlockOrder> for BlockOrderJson {
    fn from(d: BlockOrder) -> Self {
        BlockOrderJson { blocks: d.blocks }
    }
}

impl BlockOrder {
    pub fn new(blocks: &[usize]) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::Blocks(format!("{blocks:?}")));
        }
        let block_of_row = blocks
            .iter()
            .enumerate()
            .flat_map(|(k, &nk)| std::iter::repeat_n(k + 1, nk))
            .collect();
        Ok(Self {
            blocks: blocks.to_vec(),
            block_of_row,
        })
    }

    /// `e_i` blocks whose sizes sum to `n` and differ by at most one.
    pub fn balanced(n: usize, t: usize) -> Result<Self> {
        if t == 0 || n < t {
            return Err(Error::Blocks(format!(
                "cannot split {n} into {t} positive blocks"
            )));
        }
        let blocks: Vec<usize> = (0..t).map(|k| n / t + usize::from(k < n % t)).collect();
        Self::new(&blocks)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Number of blocks; this is also the ramification index.
    pub fn t(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.block_of_row.len()
    }

    pub fn ramification_index(&self) -> usize {
        self.t()
    }

    /// A single block is the maximal order `M_n(R)`.
    pub fn is_maximal(&self) -> bool {
        self.t() == 1
    }

    /// `p_i = n_1 + ... + n_i` (with `p_0 = 0`).
    pub fn p(&self, i: usize) -> usize {
        self.blocks[..i.min(self.t())].iter().sum()
    }

    /// `q_i = n - p_i`.
    pub fn q(&self, i: usize) -> usize {
        self.n() - self.p(i)
    }

    /// 1-based block containing row `a`.
    pub fn block_of(&self, a: usize) -> usize {
        self.block_of_row[a]
    }

    /// Valuation floor of entry `(a, b)`: 1 strictly above the block
    /// diagonal, 0 elsewhere.
    pub fn floor(&self, a: usize, b: usize) -> usize {
        usize::from(self.block_of(a) < self.block_of(b))
    }

    /// Floor pattern of the Jacobson radical: `m` on and above the block
    /// diagonal, `R` below it.
    pub fn radical_floor(&self, a: usize, b: usize) -> usize {
        usize::from(self.block_of(a) <= self.block_of(b))
    }

    fn check_projective_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.t() {
            return Err(Error::Index {
                index: i,
                lo: 1,
                hi: self.t(),
            });
        }
        Ok(())
    }

    fn check_simple_index(&self, j: usize) -> Result<()> {
        if j < 2 || j > self.t() {
            return Err(Error::Index {
                index: j,
                lo: 2,
                hi: self.t(),
            });
        }
        Ok(())
    }

    /// Floor pattern of the intermediate order `Δ_i` (`2 <= i <= t`):
    /// `m` only in the top-right `p_{i-1} x q_{i-1}` corner.
    fn intermediate_floor(&self, i: usize, a: usize, b: usize) -> usize {
        let split = self.p(i - 1);
        usize::from(a < split && b >= split)
    }
}

/// A full `R`-lattice in `R^n` given by per-row valuation floors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeColumn {
    floors: Vec<usize>,
}

impl LatticeColumn {
    pub fn floors(&self) -> &[usize] {
        &self.floors
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &LatticeColumn) -> bool {
        self.floors.iter().zip(&other.floors).all(|(a, b)| a <= b)
    }
}

/// The indecomposable projective `P_i = (m^{p_{i-1}}; R^{q_{i-1}})`.
pub fn projective(d: &BlockOrder, i: usize) -> Result<LatticeColumn> {
    d.check_projective_index(i)?;
    let split = d.p(i - 1);
    Ok(LatticeColumn {
        floors: (0..d.n()).map(|r| usize::from(r < split)).collect(),
    })
}

/// Residue-field dimension of `S_j = P_1 / P_j`.
pub fn simple_dim(d: &BlockOrder, j: usize) -> Result<usize> {
    d.check_simple_index(j)?;
    let top = projective(d, 1)?;
    let bottom = projective(d, j)?;
    Ok(top
        .floors
        .iter()
        .zip(&bottom.floors)
        .map(|(a, b)| b - a)
        .sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TensorValue {
    Zero,
    /// The simple `S_i`.
    Simple(usize),
}

/// `Δ_i ⊗_Δ S_j`, computed as `P_1 / Δ_i P_j` with `Δ_i P_j` obtained by
/// min-plus multiplication of floor patterns.
pub fn delta_tensor_simple(d: &BlockOrder, i: usize, j: usize) -> Result<TensorValue> {
    d.check_simple_index(i)?;
    d.check_simple_index(j)?;
    let pj = projective(d, j)?;
    let n = d.n();
    let floors = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| d.intermediate_floor(i, a, b) + pj.floors[b])
                .min()
                .expect("n >= 1")
        })
        .collect();
    let product = LatticeColumn { floors };
    if product == projective(d, 1)? {
        return Ok(TensorValue::Zero);
    }
    for k in 2..=d.t() {
        if product == projective(d, k)? {
            return Ok(TensorValue::Simple(k));
        }
    }
    unreachable!("Δ_i P_j is always one of the P_k")
}

/// `(dim Hom(S_j, S_i), dim Ext¹(S_j, S_i))` from the closed form.
pub fn hom_ext_simple_pair(d: &BlockOrder, j: usize, i: usize) -> Result<(usize, usize)> {
    d.check_simple_index(j)?;
    d.check_simple_index(i)?;
    Ok((usize::from(i <= j), 0))
}

/// `(dim Hom(S_j, P_1), dim Ext¹(S_j, P_1))`; both vanish.
pub fn rhom_simple_projective(d: &BlockOrder, j: usize) -> Result<(usize, usize)> {
    d.check_simple_index(j)?;
    Ok((0, 0))
}

/// Basis monomial `s^v E_{ab}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub v: usize,
    pub a: usize,
    pub b: usize,
}

/// `Δ / (Δ ∩ s^N M_n(R))`: entries of `Δ` reduced modulo `s^N`, with
/// monomial basis `s^v E_{ab}`, `floor(a, b) <= v < N`.
///
/// For `N >= 2` the truncation ideal lies inside `sΔ`, so every module
/// annihilated by `s` is a module over this algebra.
#[derive(Clone, Debug)]
pub struct TruncatedAlgebra {
    order: BlockOrder,
    level: usize,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl TruncatedAlgebra {
    pub fn new(order: &BlockOrder, level: usize) -> Result<Self> {
        if level < 2 {
            return Err(Error::Truncation {
                got: level,
                need: 2,
            });
        }
        let n = order.n();
        let mut basis = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for v in order.floor(a, b)..level {
                    basis.push(Monomial { v, a, b });
                }
            }
        }
        let index = basis.iter().enumerate().map(|(k, &m)| (m, k)).collect();
        Ok(Self {
            order: order.clone(),
            level,
            basis,
            index,
        })
    }

    pub fn order(&self) -> &BlockOrder {
        &self.order
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, m: Monomial) -> Option<usize> {
        self.index.get(&m).copied()
    }

    /// Product of two basis elements, `None` when it vanishes.
    pub fn multiply(&self, x: usize, y: usize) -> Option<usize> {
        let (x, y) = (self.basis[x], self.basis[y]);
        if x.b != y.a || x.v + y.v >= self.level {
            return None;
        }
        let prod = Monomial {
            v: x.v + y.v,
            a: x.a,
            b: y.b,
        };
        Some(self.index[&prod])
    }

    /// Structure constants over `F_p`, as a dense `dim^2 x dim` table
    /// (row `x * dim + y` holds the coordinates of `x * y`).
    pub fn multiplication_table(&self, field: PrimeField) -> FpMatrix {
        let n = self.dim();
        let mut table = FpMatrix::zeros(n * n, n, field);
        for x in 0..n {
            for y in 0..n {
                if let Some(z) = self.multiply(x, y) {
                    table.set(x * n + y, z, 1);
                }
            }
        }
        table
    }
}

/// A finite-length quotient `L / L'` of two lattice columns, with basis
/// `s^v e_r` for `floor_L(r) <= v < floor_L'(r)`.
#[derive(Clone, Debug)]
struct ColumnQuotient {
    cap: Vec<usize>,
    basis: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl ColumnQuotient {
    fn new(top: &[usize], cap: Vec<usize>) -> Self {
        let mut basis = Vec::new();
        for (r, (&lo, &hi)) in top.iter().zip(&cap).enumerate() {
            for v in lo..hi {
                basis.push((v, r));
            }
        }
        let index = basis.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        Self { cap, basis, index }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Action of the algebra monomial `m` on basis vector `k`.
    fn act(&self, m: Monomial, k: usize) -> Option<usize> {
        let (v, r) = self.basis[k];
        if m.b != r || v + m.v >= self.cap[m.a] {
            return None;
        }
        Some(self.index[&(v + m.v, m.a)])
    }
}

/// Modules accepted by [`oracle_hom_ext`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DvrModule {
    /// `S_j = P_1 / P_j`, `2 <= j <= t`.
    Simple(usize),
    /// `P_1`, represented by `P_1 / s^N P_1`.
    TopProjective,
}

/// `P_c / J P_c` presented as a cyclic module, where `J = Δ ∩ s^N M_n(R)`
/// is the truncation ideal: the data needed to compute
/// `Hom(P_c / J P_c, M) = {m ∈ M : ann(x_0) m = 0}`.
#[derive(Clone, Debug)]
struct CyclicPresentation {
    annihilator: Vec<Vec<(usize, u64)>>,
}

/// Finite-dimensional Hom/Ext oracle for one block order at one
/// truncation level.
#[derive(Clone, Debug)]
pub struct DvrOracle {
    algebra: TruncatedAlgebra,
    field: PrimeField,
    projectives: Vec<CyclicPresentation>,
    /// `inclusions[j]`: algebra element carrying the generator of `P_1`
    /// to the generator of `P_j` inside `P_1`.
    inclusions: Vec<Vec<(usize, u64)>>,
}

impl DvrOracle {
    #[allow(clippy::needless_range_loop)]
    pub fn new(order: &BlockOrder, level: usize, field: PrimeField) -> Result<Self> {
        let algebra = TruncatedAlgebra::new(order, level)?;
        let n = order.n();
        let top: Vec<usize> = vec![0; n];
        let p1 = ColumnQuotient::new(&top, vec![level; n]);

        let mut projectives = Vec::with_capacity(order.t());
        let mut inclusions = vec![Vec::new(); order.t() + 1];
        for c in 1..=order.t() {
            // P_c modulo J P_c, J = Δ ∩ s^N M_n(R) the truncation ideal
            let floors = projective(order, c)?.floors;
            let module = ColumnQuotient::new(&floors, vec![level; n]);
            let generator = module.index[&(0, order.p(c - 1))];
            let orbit = orbit_matrix(&algebra, &module, generator, field);
            assert_eq!(
                orbit.rank(),
                module.dim(),
                "P_{c} must be cyclic on its generator"
            );
            let annihilator = orbit
                .nullspace()
                .into_iter()
                .map(|x| x.into_iter().enumerate().filter(|&(_, c)| c != 0).collect())
                .collect();
            projectives.push(CyclicPresentation { annihilator });

            // solve alpha * g_1 = (generator of P_c viewed inside P_1)
            let target = p1.index[&(0, order.p(c - 1))];
            let g1 = p1.index[&(0, 0)];
            inclusions[c] = preimage(&algebra, &p1, g1, target, field);
        }
        Ok(Self {
            algebra,
            field,
            projectives,
            inclusions,
        })
    }

    pub fn algebra(&self) -> &TruncatedAlgebra {
        &self.algebra
    }

    fn module(&self, m: DvrModule) -> Result<ColumnQuotient> {
        let order = &self.algebra.order;
        let n = order.n();
        match m {
            DvrModule::Simple(i) => {
                order.check_simple_index(i)?;
                Ok(ColumnQuotient::new(
                    &vec![0; n],
                    projective(order, i)?.floors,
                ))
            }
            DvrModule::TopProjective => Ok(ColumnQuotient::new(
                &vec![0; n],
                vec![self.algebra.level; n],
            )),
        }
    }

    /// Basis (as vectors in `M`) of `Hom(P_c / s^N P_c, M)`, identified
    /// with the image of the generator.
    fn hom_from_projective(&self, c: usize, m: &ColumnQuotient) -> Vec<Vec<u64>> {
        let f = self.field;
        let dim = m.dim();
        let mut eq = Echelon::new(dim, f);
        for a in &self.projectives[c - 1].annihilator {
            if eq.full() {
                break;
            }
            let action = self.act_matrix(a, m);
            for row in action {
                eq.insert(row);
            }
        }
        eq.kernel()
    }

    /// Matrix of a linear combination of monomials acting on `m`, as rows.
    #[allow(clippy::needless_range_loop)]
    fn act_matrix(&self, element: &[(usize, u64)], m: &ColumnQuotient) -> Vec<Vec<u64>> {
        let f = self.field;
        let dim = m.dim();
        let mut rows = vec![vec![0u64; dim]; dim];
        for &(k, c) in element {
            let mono = self.algebra.basis[k];
            for col in 0..dim {
                if let Some(row) = m.act(mono, col) {
                    rows[row][col] = f.add(rows[row][col], c);
                }
            }
        }
        rows
    }

    /// `(dim Hom(S_j, M), dim Ext¹(S_j, M))` from the presentation
    /// `0 -> P_j -> P_1 -> S_j -> 0`.
    fn hom_ext_from_simple(&self, j: usize, m: &ColumnQuotient) -> (usize, usize) {
        let f = self.field;
        let from_p1 = self.hom_from_projective(1, m);
        let from_pj = self.hom_from_projective(j, m);
        let alpha = self.act_matrix(&self.inclusions[j], m);
        // image of each Hom(P_1, M) basis vector under restriction
        let images: Vec<Vec<u64>> = from_p1
            .iter()
            .map(|x| {
                alpha
                    .iter()
                    .map(|row| {
                        row.iter()
                            .zip(x)
                            .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
                    })
                    .collect()
            })
            .collect();
        let rank = FpMatrix::from_row_vecs(m.dim(), &images, f).rank();
        debug_assert!({
            let mut both = from_pj.clone();
            both.extend(images.iter().cloned());
            FpMatrix::from_row_vecs(m.dim(), &both, f).rank() == from_pj.len()
        });
        (from_p1.len() - rank, from_pj.len() - rank)
    }

    /// `(dim Hom(a, b), dim Ext¹(a, b))`; `a` must be a simple.
    pub fn hom_ext(&self, a: DvrModule, b: DvrModule) -> Result<(usize, usize)> {
        let DvrModule::Simple(j) = a else {
            return Err(Error::Spec(
                "the first argument must be a simple S_j".into(),
            ));
        };
        self.algebra.order.check_simple_index(j)?;
        let target = self.module(b)?;
        let (h, x) = self.hom_ext_from_simple(j, &target);
        Ok(match b {
            DvrModule::Simple(_) => (h, x),
            // 0 -> P_1 -s^N-> P_1 -> P_1/s^N P_1 -> 0 and s^N S_j = 0 give
            // Hom(S_j, P_1/s^N) = Hom(S_j, P_1) ⊕ Ext¹(S_j, P_1) and
            // Ext¹(S_j, P_1/s^N) = Ext¹(S_j, P_1)
            DvrModule::TopProjective => (h - x, x),
        })
    }

    /// `dim Hom(P_1, S_l)`.
    pub fn hom_top_projective_to_simple(&self, l: usize) -> Result<usize> {
        let target = self.module(DvrModule::Simple(l))?;
        Ok(self.hom_from_projective(1, &target).len())
    }
}

/// Columns: images `b_k * x_0` for every algebra basis element.
fn orbit_matrix(
    algebra: &TruncatedAlgebra,
    module: &ColumnQuotient,
    generator: usize,
    field: PrimeField,
) -> FpMatrix {
    let mut m = FpMatrix::zeros(module.dim(), algebra.dim(), field);
    for (k, &mono) in algebra.basis.iter().enumerate() {
        if let Some(r) = module.act(mono, generator) {
            m.set(r, k, 1);
        }
    }
    m
}

fn preimage(
    algebra: &TruncatedAlgebra,
    module: &ColumnQuotient,
    generator: usize,
    target: usize,
    field: PrimeField,
) -> Vec<(usize, u64)> {
    // augment the orbit matrix with the target and read off a solution
    let orbit = orbit_matrix(algebra, module, generator, field);
    let cols = algebra.dim() + 1;
    let mut aug = FpMatrix::zeros(module.dim(), cols, field);
    for r in 0..module.dim() {
        for c in 0..algebra.dim() {
            aug.set(r, c, orbit.get(r, c));
        }
    }
    aug.set(target, algebra.dim(), 1);
    let pivots = aug.rref();
    assert!(
        !pivots.contains(&algebra.dim()),
        "inclusion target lies outside the orbit"
    );
    pivots
        .iter()
        .enumerate()
        .filter_map(|(r, &c)| {
            let x = aug.get(r, algebra.dim());
            (x != 0).then_some((c, x))
        })
        .collect()
}

/// Incremental row echelon basis for a system of homogeneous equations.
struct Echelon {
    cols: usize,
    field: PrimeField,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn new(cols: usize, field: PrimeField) -> Self {
        Self {
            cols,
            field,
            rows: Vec::new(),
        }
    }

    fn full(&self) -> bool {
        self.rows.len() == self.cols
    }

    fn insert(&mut self, mut row: Vec<u64>) {
        let f = self.field;
        for (pivot, basis) in &self.rows {
            let c = row[*pivot];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(basis) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        let Some(pivot) = row.iter().position(|&x| x != 0) else {
            return;
        };
        let inv = f.inv(row[pivot]);
        for x in row.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, basis) in self.rows.iter_mut() {
            let c = basis[pivot];
            if c != 0 {
                for (x, &y) in basis.iter_mut().zip(&row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        self.rows.push((pivot, row));
    }

    fn kernel(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let pivots: BTreeSet<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut x = vec![0; self.cols];
                x[free] = 1;
                for (p, row) in &self.rows {
                    x[*p] = f.neg(row[free]);
                }
                x
            })
            .collect()
    }
}

/// One-shot oracle call; see [`DvrOracle`] to reuse the presentations.
pub fn oracle_hom_ext(
    d: &BlockOrder,
    level: usize,
    a: DvrModule,
    b: DvrModule,
) -> Result<(usize, usize)> {
    DvrOracle::new(d, level, PrimeField::default())?.hom_ext(a, b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalMismatch {
    pub row: usize,
    pub col: usize,
    /// Minimal valuation in `m Δ` at this entry.
    pub expected_floor: usize,
    /// Minimal valuation in `I^e` at this entry (`level` when empty).
    pub found_floor: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalCheck {
    pub ramification_index: usize,
    pub level: usize,
    pub verified: bool,
    /// `I^k ≠ mΔ` for every `k < e`.
    pub minimal: bool,
    pub mismatch: Option<RadicalMismatch>,
}

/// Verifies `I^e = mΔ` inside the truncated algebra, where `I` is the radical
/// floor pattern and `e = t`.
pub fn radical_power_check(d: &BlockOrder, level: usize) -> Result<RadicalCheck> {
    let e = d.ramification_index();
    if level < e + 1 {
        return Err(Error::Truncation {
            got: level,
            need: e + 1,
        });
    }
    let alg = TruncatedAlgebra::new(d, level)?;
    let radical: BTreeSet<usize> = alg
        .basis
        .iter()
        .enumerate()
        .filter(|(_, m)| m.v >= d.radical_floor(m.a, m.b))
        .map(|(k, _)| k)
        .collect();
    let m_delta: BTreeSet<usize> = alg
        .basis
        .iter()
        .enumerate()
        .filter(|(_, m)| m.v > d.floor(m.a, m.b))
        .map(|(k, _)| k)
        .collect();

    // products of monomials are monomials, so spans are index sets
    let mut power = radical.clone();
    let mut minimal = true;
    for _ in 1..e {
        if power == m_delta {
            minimal = false;
        }
        let mut next = BTreeSet::new();
        for &x in &power {
            for &y in &radical {
                if let Some(z) = alg.multiply(x, y) {
                    next.insert(z);
                }
            }
        }
        power = next;
    }

    let mismatch = first_mismatch(&alg, &power, &m_delta);
    Ok(RadicalCheck {
        ramification_index: e,
        level,
        verified: mismatch.is_none(),
        minimal,
        mismatch,
    })
}

fn first_mismatch(
    alg: &TruncatedAlgebra,
    found: &BTreeSet<usize>,
    expected: &BTreeSet<usize>,
) -> Option<RadicalMismatch> {
    let n = alg.order.n();
    let min_floor = |set: &BTreeSet<usize>, a: usize, b: usize| {
        set.iter()
            .map(|&k| alg.basis[k])
            .filter(|m| m.a == a && m.b == b)
            .map(|m| m.v)
            .min()
            .unwrap_or(alg.level)
    };
    for a in 0..n {
        for b in 0..n {
            let exp = min_floor(expected, a, b);
            let got = min_floor(found, a, b);
            // monomial subspaces of a truncation are determined by their
            // floors, so comparing floors compares the subspaces
            if exp != got {
                return Some(RadicalMismatch {
                    row: a,
                    col: b,
                    expected_floor: exp,
                    found_floor: got,
                });
            }
        }
    }
    debug_assert_eq!(found, expected);
    None
}

/// One entry of the closed-form versus oracle comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub source: String,
    pub target: String,
    pub closed_form: (usize, usize),
    pub oracle: (usize, usize),
    pub agree: bool,
}

/// `(Hom, Ext¹)` for every pair of simples and every `(S_j, P_1)`, from
/// the closed forms and from the oracle at truncation `level`.
pub fn compare_closed_forms(
    d: &BlockOrder,
    level: usize,
    field: PrimeField,
) -> Result<Vec<ComparisonRow>> {
    let oracle = DvrOracle::new(d, level, field)?;
    let mut rows = Vec::new();
    let mut push = |source: String, target: String, closed, found| {
        rows.push(ComparisonRow {
            source,
            target,
            closed_form: closed,
            oracle: found,
            agree: closed == found,
        })
    };
    for j in 2..=d.t() {
        for i in 2..=d.t() {
            let closed = hom_ext_simple_pair(d, j, i)?;
            let found = oracle.hom_ext(DvrModule::Simple(j), DvrModule::Simple(i))?;
            push(format!("S{j}"), format!("S{i}"), closed, found);
        }
        let closed = rhom_simple_projective(d, j)?;
        let found = oracle.hom_ext(DvrModule::Simple(j), DvrModule::TopProjective)?;
        push(format!("S{j}"), "P1".into(), closed, found);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(b: &[usize]) -> BlockOrder {
        BlockOrder::new(b).unwrap()
    }

    #[test]
    fn projective_floors() {
        let d = order(&[1, 1]);
        assert_eq!(projective(&d, 1).unwrap().floors(), &[0, 0]);
        assert_eq!(projective(&d, 2).unwrap().floors(), &[1, 0]);
        let d = order(&[2, 1, 3]);
        assert_eq!(projective(&d, 3).unwrap().floors(), &[1, 1, 1, 0, 0, 0]);
        assert!(projective(&d, 0).is_err());
        assert!(projective(&d, 4).is_err());
    }

    #[test]
    fn projective_chain() {
        let d = order(&[2, 1, 3]);
        for i in 1..d.t() {
            let big = projective(&d, i).unwrap();
            let small = projective(&d, i + 1).unwrap();
            assert!(big.contains(&small) && big != small);
        }
    }

    #[test]
    fn simple_dims() {
        assert_eq!(simple_dim(&order(&[1, 1]), 2).unwrap(), 1);
        assert_eq!(simple_dim(&order(&[2, 3]), 2).unwrap(), 2);
        assert_eq!(simple_dim(&order(&[1, 1, 1]), 3).unwrap(), 2);
        assert!(simple_dim(&order(&[1, 1]), 1).is_err());
    }

    #[test]
    fn tensor_lemma() {
        let d = order(&[1, 1, 1]);
        assert_eq!(
            delta_tensor_simple(&d, 2, 3).unwrap(),
            TensorValue::Simple(2)
        );
        assert_eq!(delta_tensor_simple(&d, 3, 2).unwrap(), TensorValue::Zero);
        for i in 2..=3 {
            assert_eq!(
                delta_tensor_simple(&d, i, i).unwrap(),
                TensorValue::Simple(i)
            );
        }
        assert!(delta_tensor_simple(&d, 1, 2).is_err());
    }

    #[test]
    fn closed_forms() {
        let d = order(&[1, 1, 1]);
        assert_eq!(hom_ext_simple_pair(&d, 3, 2).unwrap(), (1, 0));
        assert_eq!(hom_ext_simple_pair(&d, 2, 3).unwrap(), (0, 0));
        assert_eq!(hom_ext_simple_pair(&d, 2, 2).unwrap(), (1, 0));
        assert_eq!(rhom_simple_projective(&order(&[1, 1]), 2).unwrap(), (0, 0));
        assert_eq!(rhom_simple_projective(&d, 3).unwrap(), (0, 0));
        assert_eq!(rhom_simple_projective(&order(&[2, 1]), 2).unwrap(), (0, 0));
    }

    #[test]
    fn truncated_algebra_dimension() {
        let d = order(&[2, 1]);
        let alg = TruncatedAlgebra::new(&d, 3).unwrap();
        // 9 entries, two of them (rows 0,1 x col 2) lose one power of s
        assert_eq!(alg.dim(), 9 * 3 - 2);
        assert!(TruncatedAlgebra::new(&d, 1).is_err());
    }

    #[test]
    fn oracle_examples() {
        let s = DvrModule::Simple;
        assert_eq!(
            oracle_hom_ext(&order(&[1, 1]), 3, s(2), s(2)).unwrap(),
            (1, 0)
        );
        assert_eq!(
            oracle_hom_ext(&order(&[1, 1, 1]), 4, s(3), s(2)).unwrap(),
            (1, 0)
        );
        assert_eq!(
            oracle_hom_ext(&order(&[1, 1]), 2, s(2), s(2)).unwrap(),
            (1, 0)
        );
        assert_eq!(
            oracle_hom_ext(&order(&[1, 1, 1]), 3, s(2), s(3)).unwrap(),
            (0, 0)
        );
        assert_eq!(
            oracle_hom_ext(&order(&[1, 1]), 3, s(2), DvrModule::TopProjective).unwrap(),
            (0, 0)
        );
        assert!(oracle_hom_ext(&order(&[1, 1]), 1, s(2), s(2)).is_err());
        assert!(oracle_hom_ext(&order(&[1, 1]), 3, DvrModule::TopProjective, s(2)).is_err());
    }

    #[test]
    fn radical_law() {
        for (b, level) in [(vec![1, 1], 3), (vec![1, 1, 1], 4), (vec![3], 2)] {
            let check = radical_power_check(&order(&b), level).unwrap();
            assert!(check.verified, "{b:?}: {check:?}");
            assert!(check.minimal);
        }
        assert!(radical_power_check(&order(&[1, 1, 1]), 3).is_err());
    }

    #[test]
    fn wrong_exponent_is_reported() {
        // I^1 ≠ mΔ for two blocks: checking the pattern directly
        let d = order(&[1, 1]);
        let alg = TruncatedAlgebra::new(&d, 3).unwrap();
        let radical: BTreeSet<usize> = (0..alg.dim())
            .filter(|&k| {
                let m = alg.basis()[k];
                m.v >= d.radical_floor(m.a, m.b)
            })
            .collect();
        let m_delta: BTreeSet<usize> = (0..alg.dim())
            .filter(|&k| {
                let m = alg.basis()[k];
                m.v > d.floor(m.a, m.b)
            })
            .collect();
        let mismatch = first_mismatch(&alg, &radical, &m_delta).unwrap();
        assert_eq!((mismatch.row, mismatch.col), (0, 1));
        assert_eq!((mismatch.expected_floor, mismatch.found_floor), (2, 1));
    }

    #[test]
    fn block_order_json() {
        let d: BlockOrder = serde_json::from_str(r#"{"blocks": [2, 1, 3]}"#).unwrap();
        assert_eq!(d.blocks(), &[2, 1, 3]);
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"blocks":[2,1,3]}"#);
        assert!(serde_json::from_str::<BlockOrder>(r#"{"blocks": [2, 0]}"#).is_err());
        assert!(serde_json::from_str::<BlockOrder>(r#"{"blocks": []}"#).is_err());
    }

    #[test]
    fn balanced_blocks() {
        assert_eq!(BlockOrder::balanced(7, 3).unwrap().blocks(), &[3, 2, 2]);
        assert!(BlockOrder::balanced(2, 3).is_err());
    }
}
