//! Sheaves of hereditary orders on the projective line.
//!
//! The order is described by its ramification: points `x_1, ..., x_t`,
//! indices `e_i >= 2`, the rank `n` of the ambient matrix algebra, and the
//! local block order at each point. Global Hom and Ext are obtained by
//! computing the sheaf RHom locally and taking cohomology on `P^1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::dvr::{self, BlockOrder};
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, FpMatrix, IntMatrix, PrimeField};

/// A point of `P^1` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Finite(BigRational),
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "inf" | "infinity" | "∞" => Ok(Point::Infinity),
            _ => {
                let parsed = match s.split_once('/') {
                    Some((num, den)) => {
                        let num: BigInt = num.trim().parse().map_err(|_| bad_point(s))?;
                        let den: BigInt = den.trim().parse().map_err(|_| bad_point(s))?;
                        if den.is_zero() {
                            return Err(bad_point(s));
                        }
                        BigRational::new(num, den)
                    }
                    None => BigRational::from_integer(s.parse().map_err(|_| bad_point(s))?),
                };
                Ok(Point::Finite(parsed))
            }
        }
    }
}

fn bad_point(s: &str) -> Error {
    Error::Spec(format!("cannot parse point {s:?}"))
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "inf"),
            Point::Finite(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Ramification data of a sheaf of hereditary orders in `M_n(k(P^1))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SheafOrderSpec {
    points: Vec<Point>,
    e: Vec<usize>,
    n: usize,
    #[serde(serialize_with = "serialize_blocks")]
    local: Vec<BlockOrder>,
}

fn serialize_blocks<S: Serializer>(
    local: &[BlockOrder],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let blocks: Vec<&[usize]> = local.iter().map(|d| d.blocks()).collect();
    blocks.serialize(s)
}

/// JSON form: `{"points": ["inf", "0", "1", "5"], "e": [2, 3, 7, 2], "n": 42}`.
/// `points`, `n` and `blocks` are optional.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SheafOrderJson {
    #[serde(default)]
    pub points: Option<Vec<String>>,
    pub e: Vec<i64>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub blocks: Option<Vec<Vec<usize>>>,
}

impl SheafOrderSpec {
    /// Validates the data; local block sizes default to `e_i` blocks as
    /// equal as possible summing to `n`.
    pub fn new(points: Vec<Point>, e: &[i64], n: usize) -> Result<Self> {
        let e = validate_weights(e)?;
        if points.len() != e.len() {
            return Err(Error::Spec(format!(
                "{} points but {} ramification indices",
                points.len(),
                e.len()
            )));
        }
        for (k, p) in points.iter().enumerate() {
            if points[..k].contains(p) {
                return Err(Error::Spec(format!("point {p} repeated")));
            }
        }
        if let Some(&max) = e.iter().max() {
            if n < max {
                return Err(Error::Spec(format!(
                    "n = {n} is smaller than max e = {max}"
                )));
            }
        }
        if n == 0 {
            return Err(Error::Spec("n must be positive".into()));
        }
        let local = e
            .iter()
            .map(|&ei| BlockOrder::balanced(n, ei))
            .collect::<Result<_>>()?;
        Ok(Self {
            points,
            e,
            n,
            local,
        })
    }

    /// Points `inf, 0, 1, 2, 3, ...` and `n = max(e)`.
    pub fn with_default_points(e: &[i64]) -> Result<Self> {
        let points = default_points(e.len());
        let n = e.iter().copied().max().unwrap_or(1).max(1) as usize;
        Self::new(points, e, n)
    }

    /// Replaces the local block orders; block `i` must have `e_i` blocks
    /// summing to `n`.
    pub fn with_blocks(mut self, blocks: &[Vec<usize>]) -> Result<Self> {
        if blocks.len() != self.e.len() {
            return Err(Error::Spec("one block list per point is required".into()));
        }
        let mut local = Vec::with_capacity(blocks.len());
        for (b, &ei) in blocks.iter().zip(&self.e) {
            let d = BlockOrder::new(b)?;
            if d.t() != ei || d.n() != self.n {
                return Err(Error::Spec(format!(
                    "blocks {b:?} do not give {ei} blocks summing to n = {}",
                    self.n
                )));
            }
            local.push(d);
        }
        self.local = local;
        Ok(self)
    }

    pub fn from_json(j: &SheafOrderJson) -> Result<Self> {
        let points = match &j.points {
            Some(ps) => ps
                .iter()
                .map(|p| p.parse())
                .collect::<Result<Vec<Point>>>()?,
            None => default_points(j.e.len()),
        };
        let n =
            j.n.unwrap_or_else(|| j.e.iter().copied().max().unwrap_or(1).max(1) as usize);
        let spec = Self::new(points, &j.e, n)?;
        match &j.blocks {
            Some(b) => spec.with_blocks(b),
            None => Ok(spec),
        }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn e(&self) -> &[usize] {
        &self.e
    }

    pub fn t(&self) -> usize {
        self.e.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn local_order(&self, i: usize) -> &BlockOrder {
        &self.local[i - 1]
    }

    pub fn weights_i64(&self) -> Vec<i64> {
        self.e.iter().map(|&x| x as i64).collect()
    }
}

pub fn validate_weights(e: &[i64]) -> Result<Vec<usize>> {
    e.iter()
        .map(|&x| {
            if x < 2 {
                Err(Error::Weight(x))
            } else {
                Ok(x as usize)
            }
        })
        .collect()
}

pub fn default_points(t: usize) -> Vec<Point> {
    (0..t)
        .map(|k| match k {
            0 => Point::Infinity,
            _ => Point::Finite(BigRational::from_integer(BigInt::from(k as i64 - 1))),
        })
        .collect()
}

/// Summand of the tilting object `⊕ S_ij ⊕ E ⊕ E(-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TiltingSummand {
    /// `S_ij`: point `i` (1-based), `2 <= j <= e_i`.
    ArmSimple { point: usize, j: usize },
    /// `E`, trivial of rank `n`.
    Bundle,
    /// `E(-1)`.
    BundleTwisted,
}

impl TiltingSummand {
    pub fn label(&self) -> String {
        match self {
            TiltingSummand::ArmSimple { point, j } => format!("S{point},{j}"),
            TiltingSummand::Bundle => "E".into(),
            TiltingSummand::BundleTwisted => "E(-1)".into(),
        }
    }
}

impl fmt::Display for TiltingSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for TiltingSummand {
    type Err = Error;

    /// Accepts `E`, `E(-1)`, `E-1`, `S2,3`, `S[2,3]`, `S_2_3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "E" => return Ok(TiltingSummand::Bundle),
            "E(-1)" | "E-1" | "E1" => return Ok(TiltingSummand::BundleTwisted),
            _ => {}
        }
        let bad = || Error::Spec(format!("unknown summand {s:?}"));
        let body = s.strip_prefix('S').ok_or_else(bad)?;
        let nums: Vec<usize> = body
            .split(|c: char| !c.is_ascii_digit())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match nums[..] {
            [point, j] => Ok(TiltingSummand::ArmSimple { point, j }),
            _ => Err(bad()),
        }
    }
}

impl Serialize for TiltingSummand {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

/// Summands in exceptional order: arm simples `S_{i,2}, ..., S_{i,e_i}`
/// arm by arm, then `E`, then `E(-1)`.
pub fn tilting_object(s: &SheafOrderSpec) -> Vec<TiltingSummand> {
    let mut out: Vec<TiltingSummand> = s
        .e
        .iter()
        .enumerate()
        .flat_map(|(k, &ei)| (2..=ei).map(move |j| TiltingSummand::ArmSimple { point: k + 1, j }))
        .collect();
    out.push(TiltingSummand::Bundle);
    out.push(TiltingSummand::BundleTwisted);
    out
}

/// `(dim H^0, dim H^1)` of `O_{P^1}(d)`.
pub fn sheaf_cohomology_line(d: i64) -> (usize, usize) {
    ((d + 1).max(0) as usize, (-d - 1).max(0) as usize)
}

/// A coherent sheaf on `P^1` of the kinds that occur as local RHom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SheafTerm {
    Zero,
    /// `O_{P^1}(d)` (after Morita reduction).
    Line(i64),
    /// Skyscraper of the given length at a ramification point.
    Skyscraper {
        point: usize,
        length: usize,
    },
}

impl SheafTerm {
    /// `(dim H^0, dim H^1)`.
    pub fn cohomology(&self) -> (usize, usize) {
        match *self {
            SheafTerm::Zero => (0, 0),
            SheafTerm::Line(d) => sheaf_cohomology_line(d),
            SheafTerm::Skyscraper { length, .. } => (length, 0),
        }
    }
}

impl fmt::Display for SheafTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SheafTerm::Zero => write!(f, "0"),
            SheafTerm::Line(0) => write!(f, "O"),
            SheafTerm::Line(d) => write!(f, "O({d})"),
            SheafTerm::Skyscraper { point, length: 1 } => write!(f, "O_x{point}"),
            SheafTerm::Skyscraper { point, length } => write!(f, "O_x{point}^{length}"),
        }
    }
}

/// Sheaf RHom split into its Hom sheaf and Ext¹ sheaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocalRHom {
    pub hom: SheafTerm,
    pub ext: SheafTerm,
}

impl LocalRHom {
    fn hom_only(hom: SheafTerm) -> Self {
        Self {
            hom,
            ext: SheafTerm::Zero,
        }
    }

    /// Global `(dim Hom, dim Ext¹)`: `Hom = H^0(hom)`,
    /// `Ext¹ = H^1(hom) + H^0(ext)`.
    pub fn global(&self) -> (usize, usize) {
        let (h0, h1) = self.hom.cohomology();
        let (e0, _) = self.ext.cohomology();
        (h0, h1 + e0)
    }
}

fn skyscraper(point: usize, dim: usize) -> SheafTerm {
    if dim == 0 {
        SheafTerm::Zero
    } else {
        SheafTerm::Skyscraper { point, length: dim }
    }
}

/// Sheaf RHom between two summands, computed stalk by stalk. At a
/// ramification point `E` corresponds to the projective `P_1` of the local
/// block order.
pub fn sheaf_rhom(s: &SheafOrderSpec, a: TiltingSummand, b: TiltingSummand) -> Result<LocalRHom> {
    use TiltingSummand::*;
    Ok(match (a, b) {
        (ArmSimple { point: i, j }, ArmSimple { point: k, j: l }) => {
            if i != k {
                LocalRHom::hom_only(SheafTerm::Zero)
            } else {
                let (h, x) = dvr::hom_ext_simple_pair(s.local_order(i), j, l)?;
                LocalRHom {
                    hom: skyscraper(i, h),
                    ext: skyscraper(i, x),
                }
            }
        }
        (ArmSimple { point, j }, Bundle | BundleTwisted) => {
            let (h, x) = dvr::rhom_simple_projective(s.local_order(point), j)?;
            LocalRHom {
                hom: skyscraper(point, h),
                ext: skyscraper(point, x),
            }
        }
        // Hom(P_1, S_l) = R/m, Ext¹ vanishes since P_1 is projective
        (Bundle | BundleTwisted, ArmSimple { point, .. }) => {
            LocalRHom::hom_only(skyscraper(point, 1))
        }
        (Bundle, Bundle) | (BundleTwisted, BundleTwisted) => {
            LocalRHom::hom_only(SheafTerm::Line(0))
        }
        (Bundle, BundleTwisted) => LocalRHom::hom_only(SheafTerm::Line(-1)),
        (BundleTwisted, Bundle) => LocalRHom::hom_only(SheafTerm::Line(1)),
    })
}

/// `(dim Hom, dim Ext¹)` between named summands, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomExtTable {
    summands: Vec<TiltingSummand>,
    hom: Vec<Vec<usize>>,
    ext1: Vec<Vec<usize>>,
}

impl HomExtTable {
    pub fn summands(&self) -> &[TiltingSummand] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn hom(&self, a: usize, b: usize) -> usize {
        self.hom[a][b]
    }

    pub fn ext1(&self, a: usize, b: usize) -> usize {
        self.ext1[a][b]
    }

    pub fn position(&self, s: TiltingSummand) -> Option<usize> {
        self.summands.iter().position(|&x| x == s)
    }

    /// `(dim Hom(a, b), dim Ext¹(a, b))` by summand name.
    pub fn entry(&self, a: TiltingSummand, b: TiltingSummand) -> Option<(usize, usize)> {
        let (i, j) = (self.position(a)?, self.position(b)?);
        Some((self.hom[i][j], self.ext1[i][j]))
    }

    /// The table with one summand removed.
    pub fn without(&self, s: TiltingSummand) -> Result<HomExtTable> {
        let k = self
            .position(s)
            .ok_or_else(|| Error::Spec(format!("{s} is not a summand")))?;
        let keep = |v: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            v.iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != k)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect()
        };
        let mut summands = self.summands.clone();
        summands.remove(k);
        Ok(HomExtTable {
            summands,
            hom: keep(&self.hom),
            ext1: keep(&self.ext1),
        })
    }

    /// Overwrites one entry; used to build negative controls.
    pub fn with_entry(mut self, a: usize, b: usize, hom: usize, ext1: usize) -> HomExtTable {
        self.hom[a][b] = hom;
        self.ext1[a][b] = ext1;
        self
    }

    pub fn hom_matrix(&self) -> &[Vec<usize>] {
        &self.hom
    }

    pub fn ext1_matrix(&self) -> &[Vec<usize>] {
        &self.ext1
    }

    /// Aligned text rendering: Hom and Ext¹ as two labelled grids.
    pub fn to_text(&self) -> String {
        let labels: Vec<String> = self.summands.iter().map(|s| s.label()).collect();
        let mut out = String::new();
        for (title, grid) in [("Hom", &self.hom), ("Ext^1", &self.ext1)] {
            out.push_str(&render_grid(title, &labels, grid));
            out.push('\n');
        }
        out
    }
}

fn render_grid(title: &str, labels: &[String], grid: &[Vec<usize>]) -> String {
    let width = labels
        .iter()
        .map(|l| l.chars().count())
        .chain(std::iter::once(title.chars().count()))
        .max()
        .unwrap_or(1);
    let pad = |s: &str| format!("{s:>width$}");
    let mut out = String::new();
    let header: Vec<String> = labels.iter().map(|l| pad(l)).collect();
    out.push_str(&format!("{} | {}\n", pad(title), header.join(" ")));
    out.push_str(&format!(
        "{}-+-{}\n",
        "-".repeat(width),
        "-".repeat(header.join(" ").chars().count())
    ));
    for (label, row) in labels.iter().zip(grid) {
        let cells: Vec<String> = row.iter().map(|x| pad(&x.to_string())).collect();
        out.push_str(&format!("{} | {}\n", pad(label), cells.join(" ")));
    }
    out
}

/// Global Hom/Ext¹ between all summands of the tilting object.
pub fn hom_ext_table(s: &SheafOrderSpec) -> Result<HomExtTable> {
    let summands = tilting_object(s);
    let size = summands.len();
    let mut hom = vec![vec![0; size]; size];
    let mut ext1 = vec![vec![0; size]; size];
    for (a, &x) in summands.iter().enumerate() {
        for (b, &y) in summands.iter().enumerate() {
            let (h, e) = sheaf_rhom(s, x, y)?.global();
            hom[a][b] = h;
            ext1[a][b] = e;
        }
    }
    Ok(HomExtTable {
        summands,
        hom,
        ext1,
    })
}

/// `C[a][b] = dim Hom(T_a, T_b) - dim Ext¹(T_a, T_b)`.
pub fn cartan_matrix(t: &HomExtTable) -> IntMatrix {
    let n = t.len();
    let mut c = IntMatrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            c[(a, b)] = BigInt::from(t.hom[a][b] as i64 - t.ext1[a][b] as i64);
        }
    }
    c
}

/// Vertex of the canonical quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuiverVertex {
    Source,
    Sink,
    /// Vertex `k` (1-based) on arm `i` (1-based), counted from the source.
    Arm {
        arm: usize,
        k: usize,
    },
}

impl QuiverVertex {
    pub fn label(&self) -> String {
        match self {
            QuiverVertex::Source => "v0".into(),
            QuiverVertex::Sink => "vinf".into(),
            QuiverVertex::Arm { arm, k } => format!("({arm},{k})"),
        }
    }
}

/// The fixed bijection from tilting summands to canonical-quiver vertices:
/// `S_ij -> (i, j-1)`, `E -> v_inf`, `E(-1) -> v_0`.
pub fn summand_vertex(s: TiltingSummand) -> QuiverVertex {
    match s {
        TiltingSummand::ArmSimple { point, j } => QuiverVertex::Arm {
            arm: point,
            k: j - 1,
        },
        TiltingSummand::Bundle => QuiverVertex::Sink,
        TiltingSummand::BundleTwisted => QuiverVertex::Source,
    }
}

/// The canonical algebra with weights `e` and parameters `λ_3, ..., λ_t`:
/// source `v_0`, sink `v_inf`, arm `i` a path of `e_i` arrows, relations
/// `x_i^{e_i} - x_2^{e_2} + λ_i x_1^{e_1}` for `i >= 3`.
///
/// Fewer than two weights are padded with weight-1 arms (a single arrow
/// from source to sink), the usual convention for `t < 2`.
#[derive(Clone, Debug)]
pub struct CanonicalAlgebra {
    arm_lengths: Vec<usize>,
    relations: Vec<Vec<(usize, BigRational)>>,
    vertices: Vec<QuiverVertex>,
}

impl CanonicalAlgebra {
    pub fn new(e: &[usize], lambda: &[BigRational]) -> Result<Self> {
        if e.iter().any(|&x| x < 2) {
            return Err(Error::Spec(format!("degenerate weights {e:?}")));
        }
        let t = e.len();
        crate::wpl::validate_lambda(t, lambda)?;
        let mut arm_lengths = e.to_vec();
        while arm_lengths.len() < 2 {
            arm_lengths.push(1);
        }
        // relation i (0-based arm index i >= 2): arm_i - arm_1 + λ arm_0
        let relations = (2..t)
            .map(|i| {
                vec![
                    (i, BigRational::one()),
                    (1, -BigRational::one()),
                    (0, lambda[i - 2].clone()),
                ]
            })
            .collect();

        let mut vertices: Vec<QuiverVertex> = e
            .iter()
            .enumerate()
            .flat_map(|(i, &ei)| (1..ei).map(move |k| QuiverVertex::Arm { arm: i + 1, k }))
            .collect();
        vertices.push(QuiverVertex::Sink);
        vertices.push(QuiverVertex::Source);
        Ok(Self {
            arm_lengths,
            relations,
            vertices,
        })
    }

    /// Vertices in the order matching [`tilting_object`] under
    /// [`summand_vertex`].
    pub fn vertices(&self) -> &[QuiverVertex] {
        &self.vertices
    }

    /// Position of a vertex along its arm: source 0, sink `e_i`.
    fn depth(&self, v: QuiverVertex, arm: usize) -> Option<usize> {
        match v {
            QuiverVertex::Source => Some(0),
            QuiverVertex::Sink => Some(self.arm_lengths[arm]),
            QuiverVertex::Arm { arm: a, k } => (a == arm + 1).then_some(k),
        }
    }

    /// Paths from `x` to `y`, each recorded by the arm it runs along.
    /// Every path in this quiver stays on a single arm.
    fn paths(&self, x: QuiverVertex, y: QuiverVertex) -> Vec<usize> {
        if x == y {
            return vec![usize::MAX];
        }
        (0..self.arm_lengths.len())
            .filter(|&arm| match (self.depth(x, arm), self.depth(y, arm)) {
                (Some(dx), Some(dy)) => dx < dy,
                _ => false,
            })
            .collect()
    }

    /// `dim e_y A e_x`: paths from `x` to `y` modulo the relation span,
    /// by rank over `F_p`.
    pub fn path_space_dim(
        &self,
        x: QuiverVertex,
        y: QuiverVertex,
        field: PrimeField,
    ) -> Result<usize> {
        let paths = self.paths(x, y);
        if x == y {
            return Ok(1);
        }
        if paths.is_empty() {
            return Ok(0);
        }
        // relations live in the source-to-sink space; they reach (x, y)
        // only through trivial pre- and post-composition
        let mut rows = Vec::new();
        if x == QuiverVertex::Source && y == QuiverVertex::Sink {
            for rel in &self.relations {
                let mut row = vec![0u64; paths.len()];
                for (arm, coeff) in rel {
                    let pos = paths
                        .iter()
                        .position(|p| p == arm)
                        .expect("every arm is a source-to-sink path");
                    row[pos] = field.reduce_rational(coeff)?;
                }
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return Ok(paths.len());
        }
        let rank = FpMatrix::from_row_vecs(paths.len(), &rows, field).rank();
        Ok(paths.len() - rank)
    }

    /// `C[a][b] = dim` of the path space from vertex `a` to vertex `b`,
    /// vertices in [`Self::vertices`] order.
    pub fn cartan(&self, field: PrimeField) -> Result<IntMatrix> {
        let n = self.vertices.len();
        let mut c = IntMatrix::zeros(n, n);
        for (a, &x) in self.vertices.iter().enumerate() {
            for (b, &y) in self.vertices.iter().enumerate() {
                c[(a, b)] = BigInt::from(self.path_space_dim(x, y, field)? as i64);
            }
        }
        Ok(c)
    }
}

/// Cartan matrix of the canonical algebra, rows and columns ordered to
/// match the tilting summands under the fixed bijection.
pub fn canonical_cartan(e: &[usize], lambda: &[BigRational]) -> Result<IntMatrix> {
    CanonicalAlgebra::new(e, lambda)?.cartan(PrimeField::default())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanMismatch {
    pub row: String,
    pub col: String,
    pub tilting: i64,
    pub canonical: i64,
}

/// Entry-by-entry comparison of the tilting Cartan matrix with the
/// canonical one under [`summand_vertex`]; returns the first mismatch.
pub fn compare_with_canonical(
    table: &HomExtTable,
    e: &[usize],
    lambda: &[BigRational],
) -> Result<Option<CartanMismatch>> {
    let alg = CanonicalAlgebra::new(e, lambda)?;
    let field = PrimeField::default();
    let tilt = cartan_matrix(table);
    for (a, &x) in table.summands.iter().enumerate() {
        for (b, &y) in table.summands.iter().enumerate() {
            let can = alg.path_space_dim(summand_vertex(x), summand_vertex(y), field)? as i64;
            let ours = i64::try_from(&tilt[(a, b)]).expect("small entries");
            if can != ours {
                return Ok(Some(CartanMismatch {
                    row: x.label(),
                    col: y.label(),
                    tilting: ours,
                    canonical: can,
                }));
            }
        }
    }
    Ok(None)
}

/// Characteristic polynomial of the Coxeter matrix `-C^T C^{-1}` of a
/// unimodular Cartan matrix, constant term first. It is invariant under
/// `C -> P^T C P` for unimodular `P`, hence a derived invariant.
pub fn coxeter_polynomial(c: &IntMatrix) -> Result<Vec<BigInt>> {
    let det = c.determinant()?;
    if det != BigInt::one() && det != -BigInt::one() {
        return Err(Error::Shape(format!("Cartan matrix has determinant {det}")));
    }
    // u C v = I  =>  C^{-1} = v u
    let snf = smith_normal_form(c);
    let inverse = snf.v.mul(&snf.u)?;
    let mut phi = c.transpose().mul(&inverse)?;
    for i in 0..phi.rows() {
        for j in 0..phi.cols() {
            let v = -&phi[(i, j)];
            phi[(i, j)] = v;
        }
    }
    phi.characteristic_polynomial()
}
